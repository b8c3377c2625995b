use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::MatrixError;

/// The base ring every entry of an algebra lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", try_from = "RawSpec", into = "RawSpec")]
pub enum ScalarSpec {
    Rationals,
    /// Integers modulo a prime `p`. Construct through [`ScalarSpec::prime_field`].
    PrimeField(u64),
    Integers,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum RawSpec {
    Q,
    Fp { p: u64 },
    Z,
}

impl TryFrom<RawSpec> for ScalarSpec {
    type Error = MatrixError;

    fn try_from(raw: RawSpec) -> Result<Self, Self::Error> {
        match raw {
            RawSpec::Q => Ok(ScalarSpec::Rationals),
            RawSpec::Z => Ok(ScalarSpec::Integers),
            RawSpec::Fp { p } => ScalarSpec::prime_field(p),
        }
    }
}

impl From<ScalarSpec> for RawSpec {
    fn from(spec: ScalarSpec) -> Self {
        match spec {
            ScalarSpec::Rationals => RawSpec::Q,
            ScalarSpec::PrimeField(p) => RawSpec::Fp { p },
            ScalarSpec::Integers => RawSpec::Z,
        }
    }
}

/// Largest modulus accepted, so that products of residues fit in `u64`.
const MAX_PRIME: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

impl ScalarSpec {
    pub fn prime_field(p: u64) -> Result<Self, MatrixError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(MatrixError::InvalidModulus(p));
        }
        Ok(ScalarSpec::PrimeField(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, ScalarSpec::Integers)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            ScalarSpec::PrimeField(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(self, n: BigInt) -> Scalar {
        match self {
            ScalarSpec::Rationals => Scalar::Rational(BigRational::from_integer(n)),
            ScalarSpec::Integers => Scalar::Integer(n),
            ScalarSpec::PrimeField(p) => {
                let r = n.mod_floor_u64(p);
                Scalar::Mod { value: r, p }
            }
        }
    }

    /// Converts a rational number into this ring, failing when the denominator
    /// is not a unit (`1/2` over ℤ or over 𝔽₂).
    pub fn from_rational(self, q: &BigRational) -> Option<Scalar> {
        match self {
            ScalarSpec::Rationals => Some(Scalar::Rational(q.clone())),
            ScalarSpec::Integers => q.is_integer().then(|| Scalar::Integer(q.to_integer())),
            ScalarSpec::PrimeField(_) => {
                let num = self.from_bigint(q.numer().clone());
                let den = self.from_bigint(q.denom().clone());
                den.inverse().map(|inv| &num * &inv)
            }
        }
    }

    /// Parses `"a"`, `"a/b"` (optionally signed) into this ring.
    pub fn parse(self, text: &str) -> Result<Scalar, MatrixError> {
        let bad = || MatrixError::BadScalar {
            text: text.to_string(),
            spec: self,
        };
        let trimmed = text.trim();
        let q = match trimmed.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(BigInt::from_str(trimmed).map_err(|_| bad())?),
        };
        self.from_rational(&q).ok_or_else(bad)
    }
}

impl fmt::Display for ScalarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarSpec::Rationals => write!(f, "Q"),
            ScalarSpec::PrimeField(p) => write!(f, "F{p}"),
            ScalarSpec::Integers => write!(f, "Z"),
        }
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }
}

/// An exact element of the ring named by a [`ScalarSpec`].
///
/// Rationals are kept reduced with positive denominator (guaranteed by
/// `BigRational`); residues are kept in `[0, p)`.
///
/// Arithmetic between scalars of different rings is a logic error and panics;
/// matrices check their specs before touching entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
    Integer(BigInt),
}

impl Scalar {
    pub fn spec(&self) -> ScalarSpec {
        match self {
            Scalar::Rational(_) => ScalarSpec::Rationals,
            Scalar::Mod { p, .. } => ScalarSpec::PrimeField(*p),
            Scalar::Integer(_) => ScalarSpec::Integers,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Integer(n) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Integer(n) => n.is_one(),
        }
    }

    /// Whether the element is a unit of its ring: nonzero over a field, `±1` over ℤ.
    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Integer(n) => n.abs().is_one(),
            other => !other.is_zero(),
        }
    }

    /// Multiplicative inverse, if one exists in the ring.
    pub fn inverse(&self) -> Option<Scalar> {
        if !self.is_unit() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Integer(n) => Scalar::Integer(n.clone()),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    /// Division by a unit; `None` when `rhs` is not invertible.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inverse().map(|inv| self * &inv)
    }

    /// Exact division where the quotient is known to exist in the ring
    /// (fraction-free elimination over ℤ relies on this).
    pub(crate) fn div_exact(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Integer(a), Scalar::Integer(b)) => {
                debug_assert!((a % b).is_zero(), "inexact integer division");
                Scalar::Integer(a / b)
            }
            _ => self.checked_div(rhs).expect("division by zero"),
        }
    }

    /// The value as a rational number; residues map to their representative in `[0, p)`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Mod { value, .. } => BigRational::from_integer(BigInt::from(*value)),
            Scalar::Integer(n) => BigRational::from_integer(n.clone()),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar ring mismatch: {} vs {}", a.spec(), b.spec())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: (a + b) % p,
                    p: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a - b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: (a + p - b) % p,
                    p: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod {
                    value: a * b % p,
                    p: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Integer(a) => Scalar::Integer(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Integer(n) => write!(f, "{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(ScalarSpec::prime_field(4).is_err());
        assert!(ScalarSpec::prime_field(1).is_err());
        assert!(ScalarSpec::prime_field(0).is_err());
        assert_eq!(
            ScalarSpec::prime_field(5).unwrap(),
            ScalarSpec::PrimeField(5)
        );
    }

    #[test]
    fn spec_json_forms() {
        let cases = [
            (ScalarSpec::Rationals, r#"{"kind":"Q"}"#),
            (ScalarSpec::PrimeField(5), r#"{"kind":"Fp","p":5}"#),
            (ScalarSpec::Integers, r#"{"kind":"Z"}"#),
        ];
        for (spec, text) in cases {
            assert_eq!(serde_json::to_string(&spec).unwrap(), text);
            assert_eq!(serde_json::from_str::<ScalarSpec>(text).unwrap(), spec);
        }
        assert!(serde_json::from_str::<ScalarSpec>(r#"{"kind":"Fp","p":6}"#).is_err());
    }

    #[test]
    fn parse_and_display() {
        let q = ScalarSpec::Rationals;
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse("-3/-6").unwrap().to_string(), "1/2");
        assert_eq!(q.parse("6/3").unwrap().to_string(), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());

        let f5 = ScalarSpec::PrimeField(5);
        assert_eq!(f5.parse("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3");
        assert!(f5.parse("1/5").is_err());

        let z = ScalarSpec::Integers;
        assert_eq!(z.parse("-7").unwrap().to_string(), "-7");
        assert!(z.parse("1/2").is_err());
        assert_eq!(z.parse("4/2").unwrap().to_string(), "2");
    }

    #[test]
    fn units() {
        let z = ScalarSpec::Integers;
        assert!(z.from_i64(-1).is_unit());
        assert!(!z.from_i64(2).is_unit());
        assert_eq!(z.from_i64(-1).inverse(), Some(z.from_i64(-1)));
        let f7 = ScalarSpec::PrimeField(7);
        for v in 1..7 {
            let x = f7.from_i64(v);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
        assert!(f7.zero().inverse().is_none());
    }

    #[test]
    #[should_panic(expected = "scalar ring mismatch")]
    fn mixed_rings_panic() {
        let _ = ScalarSpec::Rationals.one() + ScalarSpec::Integers.one();
    }
}
