//! Exact scalars: arbitrary-precision rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The ground field of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

/// A field element. Prime-field residues are kept canonical in `0..p`, and
/// rationals are always normalized, so derived equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::malformed(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Parses `"Q"` or `"F<p>"`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = s
                    .strip_prefix('F')
                    .and_then(|r| r.parse::<u32>().ok())
                    .ok_or_else(|| Error::malformed(format!("unknown field {s:?}")))?;
                FieldSpec::prime(p)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    /// Size of the field, when finite.
    pub fn order(&self) -> Option<u32> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    /// Parses a serialized element: `"a/b"` or `"a"` over the rationals, a
    /// decimal residue over a prime field.
    pub fn parse_elem(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::malformed(format!("bad {} element {s:?}", self.name()));
        match *self {
            FieldSpec::Rationals => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            FieldSpec::Prime(p) => {
                let v: u32 = s.trim().parse().map_err(|_| bad())?;
                if v >= p {
                    return Err(bad());
                }
                Ok(self.from_i64(v as i64))
            }
        }
    }

    /// Enumerates all field elements when the field is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.order()
            .map(|p| (0..p as i64).map(|v| self.from_i64(v)).collect())
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (FieldSpec::Rationals, Scalar::Q(_))
        ) || matches!((self, s), (FieldSpec::Prime(p), Scalar::Fp { p: q, .. }) if p == q)
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => {
                // Fermat: v^(p-2)
                let (mut base, mut exp, mut acc) = (*v as u64, *p as u64 - 2, 1u64);
                let m = *p as u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Scalar::Fp { v: acc as u32, p: *p }
            }
        })
    }

    /// Canonical serialized form: `"a/b"` with `b > 0` and `gcd(a, b) = 1`
    /// for rationals, the residue in `0..p` for prime fields.
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Q(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mixed() -> ! {
    panic!("arithmetic on scalars from different fields")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => mixed(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => Scalar::Fp {
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => mixed(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (*p - *v) % *p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check_at_parse() {
        assert_eq!(FieldSpec::parse("F2").unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::parse("F4").is_err());
        assert!(FieldSpec::parse("F1").is_err());
        assert!(FieldSpec::parse("R").is_err());
    }

    #[test]
    fn rationals_normalize() {
        let q = FieldSpec::Rationals;
        let a = q.parse_elem("2/4").unwrap();
        let b = q.parse_elem("-3/-6").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text(), "1/2");
        assert_eq!(q.parse_elem("3/-6").unwrap().to_text(), "-1/2");
        assert!(q.parse_elem("1/0").is_err());
        assert!(q.parse_elem("x").is_err());
    }

    #[test]
    fn prime_residues_are_canonical() {
        let f = FieldSpec::Prime(3);
        assert!(f.parse_elem("-1").is_err());
        assert!(f.parse_elem("3").is_err());
        let a = f.from_i64(-1);
        assert_eq!(a, f.parse_elem("2").unwrap());
        assert_eq!(a.to_text(), "2");
        assert_eq!((&a * &a).to_text(), "1");
        assert_eq!(a.inv().unwrap(), a);
        assert!(f.zero().inv().is_none());
        assert_eq!(-f.zero(), f.zero());
    }

    #[test]
    fn inverses_in_f7() {
        let f = FieldSpec::Prime(7);
        for v in 1..7 {
            let a = f.from_i64(v);
            assert!((&a * &a.inv().unwrap()).is_one());
        }
    }
}
