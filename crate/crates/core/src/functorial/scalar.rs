//! Products of differences of the deformation parameters, kept in a normal form:
//! a global sign times prod_{i<j} (l_i - l_j)^{e_ij}.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::symcore::poly::{Poly, Var};

/// Sorted 0-based indices into Sigma = {l_1, ..., l_N}.
pub type Subset = Vec<usize>;

/// {l_1, ..., l_a}.
pub fn prefix(a: usize) -> Subset {
    (0..a).collect()
}

pub fn minus(x: &[usize], y: &[usize]) -> Subset {
    x.iter().copied().filter(|i| !y.contains(i)).collect()
}

pub fn union(x: &[usize], y: &[usize]) -> Subset {
    let mut out: Subset = x.iter().chain(y).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn is_subset(x: &[usize], y: &[usize]) -> bool {
    x.iter().all(|i| y.contains(i))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalarExpr {
    zero: bool,
    odd: bool,
    pairs: BTreeMap<(usize, usize), i64>,
}

impl ScalarExpr {
    pub fn one() -> Self {
        ScalarExpr { zero: false, odd: false, pairs: BTreeMap::new() }
    }
    pub fn zero() -> Self {
        ScalarExpr { zero: true, odd: false, pairs: BTreeMap::new() }
    }
    /// (-1)^e
    pub fn sign(e: i64) -> Self {
        ScalarExpr { odd: e.rem_euclid(2) == 1, ..Self::one() }
    }
    pub fn is_zero(&self) -> bool {
        self.zero
    }
    pub fn is_one(&self) -> bool {
        !self.zero && !self.odd && self.pairs.is_empty()
    }
    pub fn is_sign(&self) -> bool {
        !self.zero && self.pairs.is_empty()
    }
    pub fn is_negative_sign(&self) -> bool {
        self.is_sign() && self.odd
    }

    fn push(&mut self, x: usize, y: usize, e: i64) {
        let key = if x < y {
            (x, y)
        } else {
            if e % 2 != 0 {
                self.odd = !self.odd;
            }
            (y, x)
        };
        let slot = self.pairs.entry(key).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.pairs.remove(&key);
        }
    }

    /// r(X, Y) = prod_{x in X, y in Y} (x - y).
    pub fn r(x: &[usize], y: &[usize]) -> Self {
        let mut out = Self::one();
        for &i in x {
            for &j in y {
                if i == j {
                    return Self::zero();
                }
                out.push(i, j, 1);
            }
        }
        out
    }

    /// omega_A = (-1)^{C(a,2)} r(A, Sigma \ A).
    pub fn omega(a: &[usize], n: usize) -> Self {
        let k = a.len() as i64;
        &Self::sign(k * (k - 1) / 2) * &Self::r(a, &minus(&prefix(n), a))
    }

    pub fn negate(&self) -> Self {
        &Self::sign(1) * self
    }

    /// None for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.zero {
            return None;
        }
        Some(ScalarExpr {
            zero: false,
            odd: self.odd,
            pairs: self.pairs.iter().map(|(&k, &e)| (k, -e)).collect(),
        })
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Some(out)
    }

    /// Number at numeric Sigma; None when a negative power vanishes.
    pub fn eval(&self, sigma: &[BigRational]) -> Option<BigRational> {
        if self.zero {
            return Some(BigRational::zero());
        }
        let mut out = if self.odd { -BigRational::one() } else { BigRational::one() };
        for (&(i, j), &e) in &self.pairs {
            let d = &sigma[i] - &sigma[j];
            if d.is_zero() {
                return None;
            }
            for _ in 0..e.unsigned_abs() {
                out = if e > 0 { out * &d } else { out / &d };
            }
        }
        Some(out)
    }

    /// Expansion as a polynomial in l_1.. when all exponents are nonnegative.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.zero {
            return Some(Poly::zero());
        }
        let mut out = if self.odd { Poly::int(-1) } else { Poly::one() };
        for (&(i, j), &e) in &self.pairs {
            if e < 0 {
                return None;
            }
            let d = &Poly::var(Var::lam(i + 1)) - &Poly::var(Var::lam(j + 1));
            out = &out * &d.pow(e as u32);
        }
        Some(out)
    }
}

impl<'a> std::ops::Mul<&'a ScalarExpr> for &'a ScalarExpr {
    type Output = ScalarExpr;
    fn mul(self, rhs: &ScalarExpr) -> ScalarExpr {
        if self.zero || rhs.zero {
            return ScalarExpr::zero();
        }
        let mut out = self.clone();
        out.odd ^= rhs.odd;
        for (&(i, j), &e) in &rhs.pairs {
            out.push(i, j, e);
        }
        out
    }
}

impl fmt::Display for ScalarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return write!(f, "0");
        }
        let show = |(&(i, j), &e): (&(usize, usize), &i64)| {
            let base = format!("(l{}-l{})", i + 1, j + 1);
            if e.abs() == 1 {
                base
            } else {
                format!("{base}^{}", e.abs())
            }
        };
        let num: Vec<String> = self.pairs.iter().filter(|(_, &e)| e > 0).map(show).collect();
        let den: Vec<String> = self.pairs.iter().filter(|(_, &e)| e < 0).map(show).collect();
        let mut s = if self.odd { "-".to_string() } else { String::new() };
        s.push_str(&if num.is_empty() { "1".to_string() } else { num.join("") });
        if !den.is_empty() {
            s.push('/');
            s.push_str(&den.join(""));
        }
        write!(f, "{s}")
    }
}

impl Serialize for ScalarExpr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The ring value r(X, Y) at numeric Sigma.
pub fn r_number(x: &[usize], y: &[usize], sigma: &[BigRational]) -> BigRational {
    let mut out = BigRational::one();
    for &i in x {
        for &j in y {
            out *= &sigma[i] - &sigma[j];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_forms() {
        assert_eq!(ScalarExpr::r(&[0], &[1]).to_string(), "(l1-l2)");
        assert_eq!(ScalarExpr::r(&[1], &[0]).to_string(), "-(l1-l2)");
        assert!(ScalarExpr::r(&[0], &[0, 1]).is_zero());
        let w = ScalarExpr::omega(&[0], 3);
        assert_eq!(w.to_string(), "(l1-l2)(l1-l3)");
        let x = &w * &w.inverse().unwrap();
        assert!(x.is_one());
        assert!(ScalarExpr::zero().inverse().is_none());
    }

    #[test]
    fn display_with_powers() {
        let r = ScalarExpr::r(&[0], &[1]).pow(2).unwrap();
        let s = &r * &ScalarExpr::r(&[2], &[0]).inverse().unwrap();
        assert_eq!(s.to_string(), "-(l1-l2)^2/(l1-l3)");
    }
}
