//! Exact rational coefficient vectors in the simple-root basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical wire form: `p/q` reduced with `q > 0`, bare `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let bad = |message: String| Error::Parse { position: 0, message };
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad(format!("bad rational {trimmed:?}")))?;
    let den = BigInt::from_str(den).map_err(|_| bad(format!("bad rational {trimmed:?}")))?;
    if den.is_zero() {
        return Err(bad(format!("zero denominator in {trimmed:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Coefficients `α_1..α_n` of a vector `Σ α_i v_i` in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<Rational>);

impl LatticeVector {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        LatticeVector(coefficients)
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector(vec![Rational::zero(); dim])
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        LatticeVector(coefficients.iter().map(|&c| int(c)).collect())
    }

    /// The simple root `v_i` of a lattice of rank `dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coefficients(self) -> Vec<Rational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// True iff the vector lies in the root lattice.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn all_negative(&self) -> bool {
        self.0.iter().all(Signed::is_negative)
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Least common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()))
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        LatticeVector(self.0.iter().map(|c| c * factor).collect())
    }

    /// `self + factor * v_i`.
    pub fn add_basis_multiple(&self, i: usize, factor: &Rational) -> Self {
        let mut out = self.clone();
        out.0[i] += factor;
        out
    }

    pub fn slice(&self, start: usize, len: usize) -> Self {
        LatticeVector(self.0[start..start + len].to_vec())
    }

    pub fn concat<'a, I: IntoIterator<Item = &'a LatticeVector>>(parts: I) -> Self {
        LatticeVector(parts.into_iter().flat_map(|p| p.0.iter().cloned()).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// Parses a comma-separated list of rationals, e.g. `-1/2,0,-1/2`.
impl FromStr for LatticeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(LatticeVector(Vec::new()));
        }
        let mut offset = 0;
        let mut out = Vec::new();
        for token in s.split(',') {
            let value = parse_rational(token).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse {
                    position: offset,
                    message,
                },
                other => other,
            })?;
            out.push(value);
            offset += token.len() + 1;
        }
        Ok(LatticeVector(out))
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticeVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        strings
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(LatticeVector)
            .map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &'a LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;

    fn sub(self, rhs: &'a LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

/// Serde helper for fields holding a single rational as `"p/q"`.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
