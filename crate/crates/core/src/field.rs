//! Exact scalar arithmetic over the rationals and prime fields.
//!
//! Every scalar is kept in a unique canonical form (reduced fraction with
//! positive denominator, or residue in `[0, p)`), so equality is structural
//! and all downstream linear algebra is bit-reproducible.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted prime modulus; keeps products inside `u64` via `u128`
/// and trial-division primality cheap.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Ground field of a computation: ℚ or 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => {
                if p > MAX_MODULUS {
                    return Err(Error::ModulusTooLarge(p));
                }
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                Ok(())
            }
        }
    }

    /// 0 for ℚ, p for 𝔽_p.
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime { p } => Scalar::Prime { residue: 0, modulus: p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime { p } => Scalar::Prime {
                residue: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime { p } => write!(f, "prime:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Immutable; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { residue, .. } => *residue == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { residue: a, modulus: p }, Scalar::Prime { residue: b, modulus: q }) => {
                assert_eq!(p, q, "scalars from different prime fields");
                Scalar::Prime { residue: (a + b) % p, modulus: *p }
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { residue: a, modulus: p }, Scalar::Prime { residue: b, modulus: q }) => {
                assert_eq!(p, q, "scalars from different prime fields");
                Scalar::Prime {
                    residue: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: mod_pow(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Whether this is a "negative-looking" value, used only for pretty
    /// printing of linear combinations.
    pub fn is_display_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { residue, .. } => write!(f, "{residue}"),
        }
    }
}

/// Parses `[-]?digits` or `[-]?digits/digits`; over 𝔽_p the fraction a/b
/// becomes a·b⁻¹ mod p.
pub fn parse_scalar(text: &str, field: &FieldSpec) -> Result<Scalar> {
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_int(num_text, true).ok_or_else(|| Error::ScalarParse(text.to_string()))?;
    let denom = match den_text {
        None => BigInt::one(),
        Some(d) => {
            let d = parse_int(d, false).ok_or_else(|| Error::ScalarParse(text.to_string()))?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            d
        }
    };
    match *field {
        FieldSpec::Rational => Ok(Scalar::Rational(BigRational::new(numer, denom))),
        FieldSpec::Prime { p } => {
            let pb = BigInt::from(p);
            let n = ((numer % &pb) + &pb) % &pb;
            let d = ((denom % &pb) + &pb) % &pb;
            let n: u64 = n.try_into().expect("reduced residue fits u64");
            let d: u64 = d.try_into().expect("reduced residue fits u64");
            if d == 0 {
                return Err(Error::NonInvertibleDenominator {
                    literal: text.to_string(),
                    modulus: p,
                });
            }
            Ok(Scalar::Prime {
                residue: ((n as u128 * mod_pow(d, p - 2, p) as u128) % p as u128) as u64,
                modulus: p,
            })
        }
    }
}

fn parse_int(text: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match text.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if text.starts_with('-') { -v } else { v })
}
