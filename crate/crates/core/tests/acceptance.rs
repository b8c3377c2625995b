//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is exact.

use std::path::PathBuf;
use std::time::Instant;

use sepcheck::algebra::{
    cyclic_group_algebra, load_algebra, polynomial_quotient, product_algebra, standard_catalog,
    upper_triangular_algebra, FinAlgebra, TensorSquareElement,
};
use sepcheck::diagram::{builtin_corpus, check_equation, parse_term, Extras};
use sepcheck::scalars::{Matrix, Scalar, ScalarSpec, SolutionSet};
use sepcheck::separability::{
    compute_kappa, decide_strong_separability, frobenius_structure, kappa_solutions,
    oracle_sigma_exists, oracle_symmetric_kappa_unique, verify_frobenius, verify_kappa_axioms,
    KappaAxiom, Verdict,
};
use sepcheck::spectrum::{composition_samples, fiber, fiber_table, phi_index};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixtures() -> Vec<(String, FinAlgebra)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras");
    standard_catalog()
        .into_iter()
        .map(|e| {
            let a =
                load_algebra(dir.join(&e.file)).unwrap_or_else(|err| panic!("{}: {err}", e.file));
            (e.file, a)
        })
        .collect()
}

fn field_primes() -> [u64; 3] {
    [2, 3, 5]
}

fn kappa_from_vec(spec: ScalarSpec, d: usize, v: Vec<Scalar>) -> TensorSquareElement {
    TensorSquareElement::new(Matrix::new(spec, d, d, v).unwrap()).unwrap()
}

fn all_vectors(spec: ScalarSpec, p: u64, len: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let total = p.pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let digit = code % p;
                code /= p;
                spec.from_i64(digit as i64)
            })
            .collect()
    })
}

/// `Σ_ij k_ij c[i][j][l]` with optional swap, written out over structure constants.
fn k_product(a: &FinAlgebra, k: &[Scalar], swapped: bool, l: usize) -> Scalar {
    let d = a.dim();
    let mut acc = a.spec().zero();
    for i in 0..d {
        for j in 0..d {
            let c = if swapped { a.c(j, i, l) } else { a.c(i, j, l) };
            acc = &acc + &(&k[i * d + j] * c);
        }
    }
    acc
}

fn k2_holds(a: &FinAlgebra, k: &[Scalar]) -> bool {
    let d = a.dim();
    (0..d).all(|x| {
        (0..d).all(|p| {
            (0..d).all(|q| {
                // coefficient of e_p⊗e_q in Σ k_pj e_p⊗(e_j e_x) versus Σ k_iq (e_x e_i)⊗e_q
                let mut lhs = a.spec().zero();
                let mut rhs = a.spec().zero();
                for j in 0..d {
                    lhs = &lhs + &(&k[p * d + j] * a.c(j, x, q));
                    rhs = &rhs + &(&k[j * d + q] * a.c(x, j, p));
                }
                lhs == rhs
            })
        })
    })
}

fn k4_holds(a: &FinAlgebra, k: &[Scalar]) -> bool {
    (0..a.dim()).all(|l| k_product(a, k, true, l) == a.unit_vector()[l])
}

// 1
fn maschke_sweep() -> Outcome {
    let mut cases = 0;
    for p in field_primes() {
        let spec = ScalarSpec::PrimeField(p);
        for n in 1..=8usize {
            let a = cyclic_group_algebra(spec, n);
            let expected = !(n as u64).is_multiple_of(p);
            let verdict = decide_strong_separability(&a).is_strongly_separable();
            ensure!(
                verdict == expected,
                "F{p}[C{n}]: verdict {verdict}, expected {expected}"
            );
            let sigma = oracle_sigma_exists(&a).map_err(|e| e.to_string())?;
            ensure!(
                sigma == verdict,
                "F{p}[C{n}]: section oracle {sigma}, verdict {verdict}"
            );
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} group algebras, verdict and section oracle agree with p ∤ n"
    ))
}

// 2
fn construction_soundness() -> Outcome {
    let extra = [product_algebra(
        &cyclic_group_algebra(ScalarSpec::PrimeField(5), 2),
        &cyclic_group_algebra(ScalarSpec::PrimeField(5), 3),
    )
    .unwrap()];
    let mut checked = Vec::new();
    for (name, a) in fixtures()
        .into_iter()
        .chain(extra.into_iter().map(|a| (a.name().to_string(), a)))
    {
        let Ok(kappa) = compute_kappa(&a, &a.trace_form()) else {
            continue;
        };
        let k = verify_kappa_axioms(&a, &kappa).map_err(|e| e.to_string())?;
        ensure!(
            k.all_passed(),
            "{name}: kappa axioms {:?}",
            k.failures().collect::<Vec<_>>()
        );
        let frob = frobenius_structure(&a, &kappa).map_err(|e| e.to_string())?;
        let f = verify_frobenius(&a, &frob).map_err(|e| e.to_string())?;
        ensure!(
            f.all_passed(),
            "{name}: Frobenius laws {:?}",
            f.failures().collect::<Vec<_>>()
        );
        ensure!(
            f.0.len() == 5 && k.0.len() == 4,
            "{name}: unexpected axiom count"
        );
        checked.push(name);
    }
    for must in [
        "q_c2.json",
        "q_c8.json",
        "m2_q.json",
        "q_c2_x_m2_q.json",
        "f5_c6.json",
        "f3_x_f3.json",
    ] {
        ensure!(checked.iter().any(|n| n == must), "{must} was not checked");
    }
    Ok(format!(
        "{} strongly separable algebras pass k1-k4 and all five Frobenius laws",
        checked.len()
    ))
}

fn two_dim_algebras(p: u64) -> Vec<FinAlgebra> {
    let spec = ScalarSpec::PrimeField(p);
    let mut out = Vec::new();
    for c0 in 0..p as i64 {
        for c1 in 0..p as i64 {
            out.push(polynomial_quotient(spec, &[c0, c1]));
        }
    }
    out
}

// 3
fn uniqueness() -> Outcome {
    let mut solved = 0;
    for (name, a) in fixtures() {
        if !a.spec().is_field() {
            continue;
        }
        let report = decide_strong_separability(&a);
        let Some(kappa) = report.kappa else { continue };
        let t_inv = kappa.coeffs();
        let product = a
            .trace_form()
            .matrix()
            .mul(t_inv)
            .map_err(|e| e.to_string())?;
        ensure!(
            product == Matrix::identity(a.spec(), a.dim()),
            "{name}: T·κ ≠ I"
        );
        match oracle_symmetric_kappa_unique(&a).map_err(|e| e.to_string())? {
            SolutionSet::Unique(v) => {
                ensure!(v == t_inv.entries(), "{name}: unique solution is not T⁻¹")
            }
            other => {
                return Err(format!(
                    "{name}: expected a unique solution, got dimension {:?}",
                    other.dimension()
                ))
            }
        }
        solved += 1;
    }

    // every unital 2-dimensional algebra over F2, F3 is F_p[x]/(x² + c1 x + c0)
    let mut enumerated = 0;
    for p in [2, 3] {
        let spec = ScalarSpec::PrimeField(p);
        for a in two_dim_algebras(p) {
            let nondegenerate = decide_strong_separability(&a).is_strongly_separable();
            let mut found = Vec::new();
            for v in all_vectors(spec, p, 4) {
                let k = kappa_from_vec(spec, 2, v.clone());
                let r = verify_kappa_axioms(&a, &k).map_err(|e| e.to_string())?;
                if r.passed("k1") && r.passed("k2") && r.passed("k3") {
                    found.push(v);
                }
            }
            let expected = usize::from(nondegenerate);
            ensure!(
                found.len() == expected,
                "{}: {} symmetric idempotents, expected {expected}",
                a.name(),
                found.len()
            );
            if let Some(v) = found.first() {
                let t_inv = a
                    .trace_form()
                    .matrix()
                    .try_invert()
                    .map_err(|e| e.to_string())?;
                ensure!(
                    v.as_slice() == t_inv.entries(),
                    "{}: enumerated idempotent is not T⁻¹",
                    a.name()
                );
            }
            enumerated += 1;
        }
    }
    Ok(format!(
        "{solved} nondegenerate field algebras solve to T⁻¹ uniquely; {enumerated} two-dimensional algebras over F2, F3 enumerated"
    ))
}

fn small_algebras(p: u64) -> Vec<FinAlgebra> {
    let spec = ScalarSpec::PrimeField(p);
    let mut out = two_dim_algebras(p);
    for c0 in 0..p as i64 {
        for c1 in 0..p as i64 {
            for c2 in 0..p as i64 {
                out.push(polynomial_quotient(spec, &[c0, c1, c2]));
            }
        }
    }
    for n in 1..=3 {
        out.push(cyclic_group_algebra(spec, n));
    }
    out.push(upper_triangular_algebra(spec, 2));
    let one = cyclic_group_algebra(spec, 1);
    for b in two_dim_algebras(p) {
        out.push(product_algebra(&one, &b).unwrap());
    }
    out
}

// 4
fn alternate_axioms() -> Outcome {
    let mut algebras = 0;
    let mut with_solutions = 0;
    for p in [2, 3] {
        let spec = ScalarSpec::PrimeField(p);
        for a in small_algebras(p) {
            let d = a.dim();
            let solved = kappa_solutions(&a, &[KappaAxiom::K2, KappaAxiom::K4])
                .map_err(|e| e.to_string())?
                .points()
                .expect("finite field");
            let mut enumerated: Vec<Vec<Scalar>> = all_vectors(spec, p, d * d)
                .filter(|k| k4_holds(&a, k) && k2_holds(&a, k))
                .collect();
            let mut solved_sorted = solved.clone();
            let key = |v: &Vec<Scalar>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
            solved_sorted.sort_by_key(key);
            enumerated.sort_by_key(key);
            ensure!(
                solved_sorted == enumerated,
                "{}: solver and enumeration disagree",
                a.name()
            );
            for k in &enumerated {
                let r = verify_kappa_axioms(&a, &kappa_from_vec(spec, d, k.clone()))
                    .map_err(|e| e.to_string())?;
                ensure!(
                    r.passed("k1") && r.passed("k3"),
                    "{}: k2 ∧ k4 solution {k:?} fails k1 or k3",
                    a.name()
                );
            }
            algebras += 1;
            with_solutions += usize::from(!enumerated.is_empty());
        }
    }
    Ok(format!(
        "{algebras} algebras of dimension ≤ 3 over F2, F3 ({with_solutions} with solutions); every k2 ∧ k4 solution satisfies k1 and k3"
    ))
}

// 5
fn trace_form_properties() -> Outcome {
    let mut count = 0;
    let mut noncommutative = 0;
    for (name, a) in fixtures().into_iter().chain(std::iter::once((
        "UT2(F3)".into(),
        upper_triangular_algebra(ScalarSpec::PrimeField(3), 2),
    ))) {
        let d = a.dim();
        let spec = a.spec();
        let tr: Vec<Scalar> = (0..d)
            .map(|k| (0..d).fold(spec.zero(), |acc, j| &acc + a.c(k, j, j)))
            .collect();
        // t(e_a e_b, e_c) and t(e_a, e_b e_c) summed over structure constants
        let t_of = |x: &[Scalar], c: usize| -> Scalar {
            let mut acc = spec.zero();
            for (k, xk) in x.iter().enumerate() {
                for (m, tm) in tr.iter().enumerate() {
                    acc = &acc + &(&(xk * a.c(k, c, m)) * tm);
                }
            }
            acc
        };
        let form = a.trace_form();
        let t = form.matrix();
        ensure!(
            t.is_symmetric(),
            "{name}: trace form not symmetric at {:?}",
            t.first_asymmetry()
        );
        for i in 0..d {
            for j in 0..d {
                let direct = t_of(&a.basis_vector(i), j);
                ensure!(
                    &direct == t.get(i, j),
                    "{name}: T[{i}][{j}] disagrees with the oracle"
                );
            }
        }
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let xy: Vec<Scalar> = (0..d).map(|k| a.c(x, y, k).clone()).collect();
                    let left = t_of(&xy, z);
                    let right =
                        (0..d).fold(spec.zero(), |acc, k| &acc + &(a.c(y, z, k) * t.get(x, k)));
                    ensure!(left == right, "{name}: t(ab,c) ≠ t(a,bc) at ({x},{y},{z})");
                }
            }
        }
        count += 1;
        noncommutative += usize::from(!a.is_commutative());
    }
    ensure!(
        noncommutative >= 3,
        "too few noncommutative algebras checked"
    );
    Ok(format!(
        "{count} algebras ({noncommutative} noncommutative): T = Tᵀ and t(ab,c) = t(a,bc)"
    ))
}

// 6
fn diagram_corpus() -> Outcome {
    let corpus = builtin_corpus();
    ensure!(corpus.len() == 16, "corpus has {} entries", corpus.len());
    let mut algebras = 0;
    for (name, a) in fixtures() {
        if !decide_strong_separability(&a).is_strongly_separable() {
            continue;
        }
        let extras = Extras::computed(&a);
        for e in &corpus {
            let out = e
                .check(&a, &extras)
                .map_err(|err| format!("{name} {}: {err}", e.name))?;
            ensure!(out.passed, "{name}: {} fails at {:?}", e.name, out.witness);
        }
        algebras += 1;
    }

    let q = ScalarSpec::Rationals;
    let qc2 = cyclic_group_algebra(q, 2);
    let entry = |n: &str| corpus.iter().find(|e| e.name == n).unwrap().clone();
    let with_kappa = |rows: &[&[i64]]| Extras {
        kappa: Some(TensorSquareElement::new(Matrix::from_i64(q, rows)).unwrap()),
        delta: None,
    };
    let controls = [
        ("k1", with_kappa(&[&[1, 0], &[0, 1]])),
        ("k4", with_kappa(&[&[1, 0], &[0, 1]])),
        ("k2", with_kappa(&[&[1, 0], &[0, 0]])),
        ("k3", with_kappa(&[&[0, 1], &[0, 0]])),
    ];
    for (n, extras) in &controls {
        let out = entry(n).check(&qc2, extras).map_err(|e| e.to_string())?;
        ensure!(
            !out.passed && out.witness.is_some(),
            "negative control {n} passed"
        );
    }
    let m2 = fixtures()
        .into_iter()
        .find(|(n, _)| n == "m2_q.json")
        .unwrap()
        .1;
    let mu = parse_term("mu").unwrap();
    let swapped = parse_term("mu o tau[A,A]").unwrap();
    let out = check_equation(&mu, &swapped, &m2, &Extras::default()).map_err(|e| e.to_string())?;
    ensure!(
        !out.passed && out.witness.is_some(),
        "mu == mu o tau passed on M2"
    );
    Ok(format!(
        "16 identities pass on {algebras} strongly separable algebras; 5 negative controls fail with witnesses"
    ))
}

// 7
fn integer_base_ring() -> Outcome {
    let all = fixtures();
    let get = |n: &str| all.iter().find(|(f, _)| f == n).unwrap().1.clone();
    let zz = decide_strong_separability(&get("z_x_z.json"));
    ensure!(
        zz.verdict == Verdict::StronglySeparable,
        "Z x Z is not strongly separable"
    );
    ensure!(
        zz.trace_form.matrix() == &Matrix::identity(ScalarSpec::Integers, 2),
        "Z x Z trace form is not I"
    );
    ensure!(zz.axiom_results.all_passed(), "Z x Z axioms fail");

    let zc2 = get("z_c2.json");
    let report = decide_strong_separability(&zc2);
    let t = report.trace_form.matrix();
    let det_by_hand = &(t.get(0, 0) * t.get(1, 1)) - &(t.get(0, 1) * t.get(1, 0));
    let four = ScalarSpec::Integers.from_i64(4);
    ensure!(
        report.verdict == Verdict::Degenerate,
        "Z[C2] is not degenerate"
    );
    ensure!(
        det_by_hand == four && report.diagnostic.determinant == four,
        "Z[C2] det is not 4"
    );
    ensure!(
        !report.diagnostic.determinant.is_unit(),
        "4 reported as a unit"
    );
    ensure!(report.kappa.is_none(), "Z[C2] produced a kappa");
    Ok("Z x Z strongly separable with T = I; Z[C2] degenerate with det 4".into())
}

// 8
fn spectrum() -> Outcome {
    for row in fiber_table(2, 1000) {
        let expected = if row.big_n % 2 == 0 { 1 } else { 2 };
        ensure!(
            row.cardinality == expected,
            "n=2, N={}: {} preimages",
            row.big_n,
            row.cardinality
        );
    }
    for n in 1..=12u64 {
        for big_n in 1..=60u64 {
            let f = fiber(n, big_n);
            ensure!(
                f.iter().all(|&m| phi_index(n, m) == big_n),
                "fiber({n},{big_n}) not mapped to N"
            );
            let brute: Vec<u64> = (1..=n * big_n)
                .filter(|&m| phi_index(n, m) == big_n)
                .collect();
            ensure!(f == brute, "fiber({n},{big_n}) misses a preimage");
        }
    }
    let samples = composition_samples(12);
    let agree = samples.iter().filter(|s| s.agrees()).count();
    Ok(format!(
        "n=2 sizes match parity for N ≤ 1000; round trip n ≤ 12, N ≤ 60 (composition, not asserted: {agree}/{} agree)",
        samples.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("maschke sweep", maschke_sweep),
        ("construction soundness", construction_soundness),
        ("uniqueness", uniqueness),
        ("alternate axioms", alternate_axioms),
        ("trace form symmetry and invariance", trace_form_properties),
        ("diagram corpus", diagram_corpus),
        ("integer base ring", integer_base_ring),
        ("spectrum", spectrum),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {}  {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
