//! Laurent polynomials in q and t with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::symcore::SymError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn one() -> Self {
        Self::mono(0, 0, 1)
    }
    /// c * q^i t^j
    pub fn mono(i: i64, j: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, BigInt::from(c));
        p
    }
    pub fn q(i: i64) -> Self {
        Self::mono(i, 0, 1)
    }
    pub fn t(j: i64) -> Self {
        Self::mono(0, j, 1)
    }
    pub fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }
    /// Value at q = t = 1.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
    /// Substitute q -> q^-1.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((-i, j), c.clone())).collect(),
        }
    }
    /// Substitute t -> t^-1.
    pub fn invert_t(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i, -j), c.clone())).collect(),
        }
    }
    /// Lowest q-exponent among nonzero terms.
    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().map(|&(i, _)| i).min()
    }
    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().map(|&(i, _)| i).max()
    }
    /// Collapse the bigrading: q^i t^j -> q^(i + n j).
    pub fn collapse(&self, n: i64) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i + n * j, 0, c.clone());
        }
        out
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    fn key(i: i64, j: i64) -> String {
        format!("q^{} t^{}", i, j)
    }

    fn parse_key(k: &str) -> Option<(i64, i64)> {
        let mut i = 0;
        let mut j = 0;
        for tok in k.split_whitespace() {
            if let Some(r) = tok.strip_prefix("q^") {
                i = r.parse().ok()?;
            } else if let Some(r) = tok.strip_prefix("t^") {
                j = r.parse().ok()?;
            } else if tok == "q" {
                i = 1;
            } else if tok == "t" {
                j = 1;
            } else if tok != "1" {
                return None;
            }
        }
        Some((i, j))
    }

    pub fn from_json_map(map: &BTreeMap<String, i64>) -> Result<Self, SymError> {
        let mut out = Self::zero();
        for (k, &c) in map {
            let (i, j) = Self::parse_key(k).ok_or_else(|| SymError::Parse(k.clone()))?;
            out.add_term(i, j, BigInt::from(c));
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (&(i, j), c) in &self.terms {
            // coefficients are serialized as JSON numbers when they fit
            match i64::try_from(c) {
                Ok(v) => m.serialize_entry(&Self::key(i, j), &v)?,
                Err(_) => m.serialize_entry(&Self::key(i, j), &c.to_string())?,
            }
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, serde_json::Value> = BTreeMap::deserialize(d)?;
        let mut out = Self::zero();
        for (k, v) in raw {
            let (i, j) = Self::parse_key(&k)
                .ok_or_else(|| serde::de::Error::custom(format!("bad key {:?}", k)))?;
            let c: BigInt = match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| serde::de::Error::custom("non-integer coefficient"))?,
                serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom)?,
                _ => return Err(serde::de::Error::custom("bad coefficient")),
            };
            out.add_term(i, j, c);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let mut mono = String::new();
            if i != 0 {
                mono.push_str(&if i == 1 { "q".to_string() } else { format!("q^{}", i) });
            }
            if j != 0 {
                mono.push_str(&if j == 1 { "t".to_string() } else { format!("t^{}", j) });
            }
            let a = c.abs();
            let body = if mono.is_empty() {
                a.to_string()
            } else if a.is_one() {
                mono
            } else {
                format!("{}{}", a, mono)
            };
            let neg = c.is_negative();
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}
impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}
impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}
impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}
impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}
impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}
impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
