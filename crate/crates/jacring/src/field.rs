//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Every scalar is kept in canonical form (reduced fraction with positive
//! denominator, or residue in `[0, p)`), so equality of scalars is equality
//! of mathematical values and no operation ever rounds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A coefficient field: `Q` (characteristic 0) or `F_p` for a prime `p < 2^31`.
///
/// Products of residues then fit in 64-bit intermediates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    /// Builds a field from its characteristic: 0 means `Q`, otherwise a prime.
    pub fn from_characteristic(c: u64) -> Result<Field> {
        if c == 0 {
            return Ok(Field::Rationals);
        }
        if c < (1 << 31) && is_prime(c as u32) {
            Ok(Field::Prime(c as u32))
        } else {
            Err(Error::InvalidCharacteristic(c))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Modular {
                residue: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    /// The image of an integer in this field.
    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = *p as i64;
                Scalar::Modular {
                    residue: n.rem_euclid(m) as u64,
                    modulus: *p,
                }
            }
        }
    }

    /// The image of a big integer in this field.
    pub fn big_integer(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                let digits = r.to_u64_digits().1;
                Scalar::Modular {
                    residue: digits.first().copied().unwrap_or(0),
                    modulus: *p,
                }
            }
        }
    }

    /// The image of the fraction `num/den`; fails when `den` maps to zero.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.big_integer(den);
        if d.is_zero() {
            return Err(Error::BadDenominator(den.to_string(), self.to_string()));
        }
        self.big_integer(num).checked_div(&d)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q` (or `q`, `0`) and `F<p>` (or a bare prime).
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let digits = s.strip_prefix(['F', 'f']).unwrap_or(s);
        let c: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidCharacteristic(u64::MAX))?;
        Field::from_characteristic(c)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.clone() + other.clone())
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.clone() - other.clone())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.clone() * other.clone())
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.clone() * other.inverse()?)
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: mod_inverse(*residue, *modulus as u64),
                modulus: *modulus,
            },
        })
    }

    /// Exact fraction `num/den` of a rational scalar, as `(numer, denom)`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Modular { residue, .. } => Some(*residue),
        }
    }

    /// True for rational scalars strictly below zero (used only for display).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    /// Absolute value over `Q`; identity over `F_p`.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            m @ Scalar::Modular { .. } => m.clone(),
        }
    }
}

// Extended Euclid; `a` nonzero mod `p`, `p` prime.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of a nonunit");
    old_s.rem_euclid(p as i128) as u64
}

// Internal arithmetic assumes both operands share a field; a mismatch is a
// programming error, caught by the checked_* entry points at the boundaries.
impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular {
                    residue: a,
                    modulus: p,
                },
                Scalar::Modular {
                    residue: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Modular {
                    residue: (a + b) % p as u64,
                    modulus: p,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular {
                    residue: a,
                    modulus: p,
                },
                Scalar::Modular {
                    residue: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Modular {
                    residue: (a * b) % p as u64,
                    modulus: p,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { residue, modulus } => Scalar::Modular {
                residue: if residue == 0 {
                    0
                } else {
                    modulus as u64 - residue
                },
                modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rationals
            .fraction(&BigInt::from(n), &BigInt::from(d))
            .unwrap()
    }

    #[test]
    fn rational_addition_is_exact() {
        // 1/2 + 1/3 = 5/6
        assert_eq!(q(1, 2).checked_add(&q(1, 3)).unwrap(), q(5, 6));
    }

    #[test]
    fn prime_field_division() {
        // 1/3 = 5 in F_7 since 3*5 = 15 = 1 (mod 7)
        let f7 = Field::Prime(7);
        let r = f7.integer(1).checked_div(&f7.integer(3)).unwrap();
        assert_eq!(r, f7.integer(5));
    }

    #[test]
    fn multiplicative_identity() {
        for field in [Field::Rationals, Field::Prime(2), Field::Prime(10007)] {
            let x = field.integer(-17);
            assert_eq!(x.checked_mul(&field.one()).unwrap(), x);
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            q(1, 1).checked_div(&Field::Rationals.zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mixed_fields_are_an_error() {
        let err = Field::Rationals.one().checked_add(&Field::Prime(5).one());
        assert!(matches!(err, Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("F10007".parse::<Field>().unwrap(), Field::Prime(10007));
        assert_eq!("2".parse::<Field>().unwrap(), Field::Prime(2));
        assert!("F4".parse::<Field>().is_err());
        assert!("F2147483648".parse::<Field>().is_err());
    }

    #[test]
    fn canonical_forms_are_unique() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2), q(-1, 2));
        assert_eq!(Field::Prime(7).integer(-3), Field::Prime(7).integer(4));
    }

    #[test]
    fn inverse_round_trips_over_f_p() {
        let f = Field::Prime(10007);
        for n in 1..200 {
            let x = f.integer(n);
            assert_eq!(x.clone() * x.inverse().unwrap(), f.one());
        }
    }
}
