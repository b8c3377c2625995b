//! Points of the circle-equivariant spectrum and the map induced by the
//! degree-`n` self-map of the circle.
//!
//! Points are labelled `P(H, C)` with `H` a closed subgroup of `S¹` (finite
//! cyclic `C_m` or all of `S¹`) and `C` a chromatic label carried through
//! unchanged. The degree-`n` map sends `P(C_m, C)` to `P(C_{lcm(m,n)/n}, C)`
//! and fixes the `S¹` points. The fiber over `C_N` is then
//! `{m : lcm(m, n) = nN}`; for `n = 2` it has one element when `N` is even and
//! two when `N` is odd.
//!
//! The 2-local inclusion `P(C₁, C) ⊆ P(C₂, C)` and the rest of the
//! topology of the spectrum are not modelled.

use num_integer::Integer;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Subgroup {
    /// `C_m`, `m ≥ 1`.
    Cyclic(u64),
    Circle,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeLabel {
    pub subgroup: Subgroup,
    pub tag: String,
}

impl PrimeLabel {
    pub fn cyclic(m: u64, tag: impl Into<String>) -> Self {
        assert!(m >= 1, "C_m needs m ≥ 1");
        PrimeLabel {
            subgroup: Subgroup::Cyclic(m),
            tag: tag.into(),
        }
    }

    pub fn circle(tag: impl Into<String>) -> Self {
        PrimeLabel {
            subgroup: Subgroup::Circle,
            tag: tag.into(),
        }
    }
}

/// `lcm(m, n) / n`.
pub fn phi_index(n: u64, m: u64) -> u64 {
    assert!(n >= 1 && m >= 1);
    m.lcm(&n) / n
}

pub fn phi(n: u64, p: &PrimeLabel) -> PrimeLabel {
    let subgroup = match p.subgroup {
        Subgroup::Cyclic(m) => Subgroup::Cyclic(phi_index(n, m)),
        Subgroup::Circle => Subgroup::Circle,
    };
    PrimeLabel {
        subgroup,
        tag: p.tag.clone(),
    }
}

fn divisors(x: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= x {
        if x.is_multiple_of(i) {
            small.push(i);
            if i * i != x {
                large.push(x / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Sorted `m` with `lcm(m, n) = nN`. Every such `m` divides `nN`.
pub fn fiber(n: u64, big_n: u64) -> Vec<u64> {
    assert!(n >= 1 && big_n >= 1);
    let target = n * big_n;
    divisors(target)
        .into_iter()
        .filter(|m| m.lcm(&n) == target)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberRow {
    #[serde(rename = "N")]
    pub big_n: u64,
    pub fiber: Vec<u64>,
    pub cardinality: usize,
}

/// Rows for `1 ≤ N ≤ n_max`; each row is checked to round-trip through `phi`.
pub fn fiber_table(n: u64, n_max: u64) -> Vec<FiberRow> {
    (1..=n_max)
        .map(|big_n| {
            let fiber = fiber(n, big_n);
            assert!(fiber.iter().all(|&m| phi_index(n, m) == big_n));
            FiberRow {
                big_n,
                cardinality: fiber.len(),
                fiber,
            }
        })
        .collect()
}

/// Both sides of `phi(n₁n₂, m)` versus `phi(n₂, phi(n₁, m))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionSample {
    pub n1: u64,
    pub n2: u64,
    pub m: u64,
    pub direct: u64,
    pub iterated: u64,
}

impl CompositionSample {
    pub fn agrees(&self) -> bool {
        self.direct == self.iterated
    }
}

/// Evaluates both sides for all `n₁, n₂, m ≤ bound`. Nothing here asserts
/// that they agree.
pub fn composition_samples(bound: u64) -> Vec<CompositionSample> {
    let mut out = Vec::new();
    for n1 in 1..=bound {
        for n2 in 1..=bound {
            for m in 1..=bound {
                out.push(CompositionSample {
                    n1,
                    n2,
                    m,
                    direct: phi_index(n1 * n2, m),
                    iterated: phi_index(n2, phi_index(n1, m)),
                });
            }
        }
    }
    out
}
