//! Symmetric functions in the Schur basis over polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::symcore::lr::lr_product;
use crate::symcore::poly::{rat, Monomial, Poly, Var};
use crate::symcore::{Partition, SymError};

/// Element of Sym in an alphabet of size `rows`, in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElt {
    rows: usize,
    terms: BTreeMap<Partition, Poly>,
}

impl SymElt {
    pub fn zero(rows: usize) -> Self {
        SymElt { rows, terms: BTreeMap::new() }
    }
    pub fn one(rows: usize) -> Self {
        Self::schur(Partition::empty(), rows)
    }
    /// s_alpha; identically zero when alpha has more than `rows` rows.
    pub fn schur(alpha: Partition, rows: usize) -> Self {
        let mut x = Self::zero(rows);
        x.add_term(alpha, Poly::one());
        x
    }
    pub fn from_terms(rows: usize, terms: impl IntoIterator<Item = (Partition, Poly)>) -> Self {
        let mut x = Self::zero(rows);
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Poly)> {
        self.terms.iter()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coeff(&self, p: &Partition) -> Poly {
        self.terms.get(p).cloned().unwrap_or_default()
    }
    pub fn add_term(&mut self, p: Partition, c: Poly) {
        if p.len() > self.rows || c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }
    pub fn add(&self, other: &SymElt) -> Result<SymElt, SymError> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }
    pub fn sub(&self, other: &SymElt) -> Result<SymElt, SymError> {
        self.add(&other.scale(&Poly::int(-1)))
    }
    pub fn scale(&self, c: &Poly) -> SymElt {
        let mut out = SymElt::zero(self.rows);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }
    /// Same element viewed in a larger alphabet.
    pub fn with_rows(&self, rows: usize) -> SymElt {
        SymElt::from_terms(rows, self.terms.iter().map(|(p, c)| (p.clone(), c.clone())))
    }
    fn check(&self, other: &SymElt) -> Result<(), SymError> {
        if self.rows != other.rows {
            return Err(SymError::AlphabetMismatch(self.rows, other.rows));
        }
        Ok(())
    }

    /// Schur-basis product, truncated to partitions with at most `rows` rows.
    pub fn mul(&self, other: &SymElt) -> Result<SymElt, SymError> {
        self.check(other)?;
        let mut out = SymElt::zero(self.rows);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (g, n) in lr_product(a, b, self.rows).iter() {
                    out.add_term(g.clone(), c.scale(&rat(*n as i64)));
                }
            }
        }
        Ok(out)
    }

    /// Monomial expansion in the given variables (one per alphabet letter).
    pub fn expand(&self, vars: &[Var]) -> Poly {
        assert_eq!(vars.len(), self.rows, "one variable per alphabet letter");
        let mut out = Poly::zero();
        for (p, c) in &self.terms {
            out += &(&schur_poly(p, vars) * c);
        }
        out
    }

    /// Exact evaluation at numeric alphabet values; coefficient variables use `coeffs`.
    pub fn eval(
        &self,
        values: &[BigRational],
        coeffs: &dyn Fn(Var) -> Option<BigRational>,
    ) -> Result<BigRational, SymError> {
        if values.len() != self.rows {
            return Err(SymError::AlphabetMismatch(self.rows, values.len()));
        }
        let vars: Vec<Var> = (1..=self.rows).map(Var::x).collect();
        let poly = self.expand(&vars);
        poly.eval(&|v| {
            if v.kind() == Var::x(1).kind() && v.index() <= values.len() {
                Some(values[v.index() - 1].clone())
            } else {
                coeffs(v)
            }
        })
    }

    /// Substitute into all coefficients.
    pub fn map_coeffs(&self, f: &dyn Fn(&Poly) -> Poly) -> SymElt {
        SymElt::from_terms(self.rows, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }
}

impl fmt::Display for SymElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                if *c == Poly::one() {
                    format!("s{}", p)
                } else {
                    format!("({})*s{}", c, p)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Schur polynomial s_alpha(vars) as a sum over semistandard tableaux.
pub fn schur_poly(alpha: &Partition, vars: &[Var]) -> Poly {
    let n = vars.len();
    if alpha.len() > n {
        return Poly::zero();
    }
    if alpha.is_empty() {
        return Poly::one();
    }
    let cells: Vec<(usize, usize)> = (0..alpha.len())
        .flat_map(|r| (0..alpha.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut fill = vec![vec![0usize; alpha.part(0) as usize]; alpha.len()];
    let mut exps = vec![0u32; n];
    let mut out = Poly::zero();
    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<usize>>,
        exps: &mut Vec<u32>,
        n: usize,
        vars: &[Var],
        out: &mut Poly,
    ) {
        if i == cells.len() {
            let m = Monomial::from_pairs(vars.iter().zip(exps.iter()).map(|(&v, &e)| (v, e)));
            out.add_term(m, BigRational::one());
            return;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 0 };
        let lo = lo_row.max(lo_col);
        // leave room for the rows below in this column
        for v in lo..n {
            fill[r][c] = v;
            exps[v] += 1;
            rec(i + 1, cells, fill, exps, n, vars, out);
            exps[v] -= 1;
        }
    }
    rec(0, &cells, &mut fill, &mut exps, n, vars, &mut out);
    out
}

/// Variables A1..Aa.
pub fn alpha_vars(a: usize) -> Vec<Var> {
    (1..=a).map(Var::a).collect()
}
/// Variables B1..Bb.
pub fn beta_vars(b: usize) -> Vec<Var> {
    (1..=b).map(Var::b).collect()
}

/// Sign (-1)^n as a rational.
pub fn sign_rat(n: i64) -> BigRational {
    if n.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &[u32]) -> Partition {
        Partition::from_slice(s)
    }

    #[test]
    fn unit_and_truncation() {
        let s1 = SymElt::schur(p(&[1]), 1);
        let sq = s1.mul(&s1).unwrap();
        assert_eq!(sq, SymElt::schur(p(&[2]), 1));
        let s1 = SymElt::schur(p(&[1]), 2);
        let sq = s1.mul(&s1).unwrap();
        let expect = SymElt::schur(p(&[2]), 2).add(&SymElt::schur(p(&[1, 1]), 2)).unwrap();
        assert_eq!(sq, expect);
        let x = SymElt::schur(p(&[2, 1]), 3);
        assert_eq!(SymElt::one(3).mul(&x).unwrap(), x);
    }

    #[test]
    fn mismatched_bounds() {
        assert!(SymElt::one(2).mul(&SymElt::one(3)).is_err());
    }

    #[test]
    fn small_evaluations() {
        let none = |_| None;
        let v = SymElt::schur(p(&[1]), 1).eval(&[rat(3)], &none).unwrap();
        assert_eq!(v, rat(3));
        let v = SymElt::schur(p(&[1, 1]), 2).eval(&[rat(2), rat(5)], &none).unwrap();
        assert_eq!(v, rat(10));
    }

    #[test]
    fn schur_term_counts() {
        // number of SSYT of shape (2,1) with entries <= 3 is 8
        let s = schur_poly(&p(&[2, 1]), &alpha_vars(3));
        let total: BigRational = s.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, rat(8));
    }
}
