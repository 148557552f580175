//! H*_{GL_N}(Gr_a) = Sym(A|S) / <h_{N-a+i}(A - S)>, basis s_alpha(A) for alpha in the
//! a x (N-a) box, coefficients polynomials in e_1(S), ..., e_N(S).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::grassmann::GrassError;
use crate::symcore::lr::lr_coeff;
use crate::symcore::poly::{det, rat, Poly, Var};
use crate::symcore::{Partition, SymElt};

/// Element of the Grassmannian algebra in the box-bounded Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannElt {
    pub n: usize,
    pub a: usize,
    terms: BTreeMap<Partition, Poly>,
}

impl GrassmannElt {
    pub fn zero(n: usize, a: usize) -> Self {
        GrassmannElt { n, a, terms: BTreeMap::new() }
    }
    pub fn one(n: usize, a: usize) -> Self {
        Self::basis(n, a, Partition::empty())
    }
    pub fn basis(n: usize, a: usize, alpha: Partition) -> Self {
        assert!(alpha.fits(a, (n - a) as u32), "basis index outside the box");
        let mut x = Self::zero(n, a);
        x.add_term(alpha, Poly::one());
        x
    }
    pub fn add_term(&mut self, p: Partition, c: Poly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Poly)> {
        self.terms.iter()
    }
    pub fn coeff(&self, p: &Partition) -> Poly {
        self.terms.get(p).cloned().unwrap_or_default()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Poly::int(-1)))
    }
    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.n, self.a);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }
    pub fn map_coeffs(&self, f: &dyn Fn(&Poly) -> Poly) -> Self {
        let mut out = Self::zero(self.n, self.a);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), f(x));
        }
        out
    }
    /// Replace e_i(S) by the given polynomials (e.g. e_i of numeric or symbolic parameters).
    pub fn specialize(&self, e_values: &[Poly]) -> Self {
        self.map_coeffs(&|c| subst_e(c, e_values))
    }
    pub fn as_symelt(&self) -> SymElt {
        SymElt::from_terms(self.a, self.terms.iter().map(|(p, c)| (p.clone(), c.clone())))
    }
}

pub(crate) fn subst_e(c: &Poly, e_values: &[Poly]) -> Poly {
    c.substitute(&|v| {
        if v.kind() == Var::e(1).kind() {
            Some(e_values.get(v.index() - 1).cloned().unwrap_or_else(Poly::zero))
        } else {
            None
        }
    })
}

impl fmt::Display for GrassmannElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_symelt())
    }
}

impl Serialize for GrassmannElt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            m.serialize_entry(&p.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

/// e_k(S) as a polynomial in the generators; zero outside 0..=n.
fn e_s(k: i64, n: usize) -> Poly {
    if k == 0 {
        Poly::one()
    } else if k < 0 || k as usize > n {
        Poly::zero()
    } else {
        Poly::var(Var::e(k as usize))
    }
}

/// s_{nu^T}(S) = det(e_{nu_i - i + j}(S)).
fn schur_transpose_s(nu: &Partition, n: usize) -> Poly {
    let l = nu.len();
    let m: Vec<Vec<Poly>> = (0..l)
        .map(|i| (0..l).map(|j| e_s(nu.part(i) as i64 - i as i64 + j as i64, n)).collect())
        .collect();
    det(&m)
}

/// s_gamma(A - S) = sum_{delta in gamma} s_delta(A) (-1)^{|gamma/delta|} s_{(gamma/delta)^T}(S).
/// Returns the coefficient list (delta, poly in e(S)).
pub fn difference_split(gamma: &Partition, n: usize) -> Vec<(Partition, Poly)> {
    let mut out = Vec::new();
    let mut subs = Vec::new();
    for size in 0..=gamma.size() {
        for delta in Partition::of_size(size, gamma.len()) {
            if gamma.contains(&delta) {
                subs.push(delta);
            }
        }
    }
    for delta in subs {
        let k = gamma.size() - delta.size();
        let mut c = Poly::zero();
        for nu in Partition::of_size(k, gamma.len()) {
            if !gamma.contains(&nu) {
                continue;
            }
            let m = lr_coeff(&delta, &nu, gamma);
            if m > 0 {
                c += &schur_transpose_s(&nu, n).scale(&rat(m as i64));
            }
        }
        if k % 2 == 1 {
            c = c.scale(&rat(-1));
        }
        if !c.is_zero() {
            out.push((delta, c));
        }
    }
    out
}

/// The algebra for fixed (N, a) with cached structure constants.
#[derive(Debug)]
pub struct GrassmannAlgebra {
    pub n: usize,
    pub a: usize,
    basis: Vec<Partition>,
    index: HashMap<Partition, usize>,
    rewrite: Mutex<HashMap<Partition, Arc<Vec<(Partition, Poly)>>>>,
    table: Vec<Vec<GrassmannElt>>,
}

fn registry() -> &'static Mutex<HashMap<(usize, usize), Arc<GrassmannAlgebra>>> {
    static REG: OnceLock<Mutex<HashMap<(usize, usize), Arc<GrassmannAlgebra>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl GrassmannAlgebra {
    /// Shared instance for (N, a).
    pub fn get(n: usize, a: usize) -> Result<Arc<GrassmannAlgebra>, GrassError> {
        if a > n {
            return Err(GrassError::BadLabel { n, a });
        }
        if let Some(alg) = registry().lock().unwrap().get(&(n, a)) {
            return Ok(alg.clone());
        }
        let alg = Arc::new(Self::build(n, a));
        registry().lock().unwrap().insert((n, a), alg.clone());
        Ok(alg)
    }

    fn build(n: usize, a: usize) -> Self {
        let basis = Partition::in_box(a, (n - a) as u32);
        let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut alg = GrassmannAlgebra {
            n,
            a,
            basis,
            index,
            rewrite: Mutex::new(HashMap::new()),
            table: Vec::new(),
        };
        let k = alg.basis.len();
        let mut table = vec![vec![GrassmannElt::zero(n, a); k]; k];
        for i in 0..k {
            for j in i..k {
                let x = SymElt::schur(alg.basis[i].clone(), a);
                let y = SymElt::schur(alg.basis[j].clone(), a);
                let prod = alg.reduce(&x.mul(&y).expect("same alphabet"));
                table[i][j] = prod.clone();
                table[j][i] = prod;
            }
        }
        alg.table = table;
        alg
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
    pub fn box_partition(&self) -> Partition {
        Partition::rect(self.a, (self.n - self.a) as u32)
    }
    fn in_box(&self, p: &Partition) -> bool {
        p.fits(self.a, (self.n - self.a) as u32)
    }

    /// Expansion of an out-of-box s_gamma(A) in strictly smaller partitions.
    fn rewrite_rule(&self, gamma: &Partition) -> Arc<Vec<(Partition, Poly)>> {
        if let Some(r) = self.rewrite.lock().unwrap().get(gamma) {
            return r.clone();
        }
        let rule: Vec<(Partition, Poly)> = difference_split(gamma, self.n)
            .into_iter()
            .filter(|(d, _)| d != gamma)
            .map(|(d, c)| (d, c.scale(&rat(-1))))
            .collect();
        let rule = Arc::new(rule);
        self.rewrite.lock().unwrap().insert(gamma.clone(), rule.clone());
        rule
    }

    /// Normal form modulo the ideal, by descending induction on |gamma|.
    pub fn reduce(&self, x: &SymElt) -> GrassmannElt {
        let mut work: BTreeMap<(u32, Partition), Poly> = BTreeMap::new();
        for (p, c) in x.terms() {
            if p.len() <= self.a {
                add_into(&mut work, p.clone(), c.clone());
            }
        }
        let mut out = GrassmannElt::zero(self.n, self.a);
        while let Some(((_, gamma), c)) = work.pop_last() {
            if self.in_box(&gamma) {
                out.add_term(gamma, c);
                continue;
            }
            for (delta, d) in self.rewrite_rule(&gamma).iter() {
                add_into(&mut work, delta.clone(), &c * d);
            }
        }
        out
    }

    pub fn check(&self, x: &GrassmannElt) -> Result<(), GrassError> {
        if x.n != self.n || x.a != self.a {
            return Err(GrassError::Mismatch { left: (self.n, self.a), right: (x.n, x.a) });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &GrassmannElt, y: &GrassmannElt) -> Result<GrassmannElt, GrassError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = GrassmannElt::zero(self.n, self.a);
        for (p, c) in x.terms() {
            for (q, d) in y.terms() {
                let t = &self.table[self.index[p]][self.index[q]];
                let cd = c * d;
                for (r, e) in t.terms() {
                    out.add_term(r.clone(), &cd * e);
                }
            }
        }
        Ok(out)
    }

    /// Multiplication with coefficients after e_i(S) -> given values.
    pub fn multiply_specialized(
        &self,
        x: &GrassmannElt,
        y: &GrassmannElt,
        e_values: &[Poly],
    ) -> Result<GrassmannElt, GrassError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = GrassmannElt::zero(self.n, self.a);
        for (p, c) in x.terms() {
            for (q, d) in y.terms() {
                let t = &self.table[self.index[p]][self.index[q]];
                let cd = c * d;
                for (r, e) in t.terms() {
                    out.add_term(r.clone(), &cd * &subst_e(e, e_values));
                }
            }
        }
        Ok(out)
    }

    /// Structure constant of s_p s_q along s_r.
    pub fn structure_constant(&self, p: &Partition, q: &Partition, r: &Partition) -> Poly {
        self.table[self.index[p]][self.index[q]].coeff(r)
    }

    /// tr_a: (-1)^{C(a,2)} times the coefficient of the full box.
    pub fn trace(&self, x: &GrassmannElt) -> Result<Poly, GrassError> {
        self.check(x)?;
        let c = x.coeff(&self.box_partition());
        let sign = if (self.a * self.a.saturating_sub(1) / 2).is_multiple_of(2) { 1 } else { -1 };
        Ok(c.scale(&rat(sign)))
    }

    /// s_beta(A - S) reduced into the basis.
    pub fn difference_basis(&self, beta: &Partition) -> GrassmannElt {
        let x = SymElt::from_terms(self.a, difference_split(beta, self.n));
        self.reduce(&x)
    }

    /// Reduce an arbitrary Schur expression s_gamma(A).
    pub fn schur(&self, gamma: &Partition) -> GrassmannElt {
        self.reduce(&SymElt::schur(gamma.clone(), self.a))
    }
}

fn add_into(work: &mut BTreeMap<(u32, Partition), Poly>, p: Partition, c: Poly) {
    if c.is_zero() {
        return;
    }
    let key = (p.size(), p);
    let e = work.entry(key.clone()).or_default();
    *e += &c;
    if e.is_zero() {
        work.remove(&key);
    }
}

/// e_1..e_n of a list of polynomials.
pub fn elementary_of(values: &[Poly]) -> Vec<Poly> {
    let n = values.len();
    let mut e = vec![Poly::zero(); n + 1];
    e[0] = Poly::one();
    for v in values {
        for k in (1..=n).rev() {
            let t = &e[k - 1] * v;
            e[k] += &t;
        }
    }
    e.remove(0);
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &[u32]) -> Partition {
        Partition::from_slice(s)
    }

    #[test]
    fn quadratic_relation_n2() {
        let alg = GrassmannAlgebra::get(2, 1).unwrap();
        let r = alg.schur(&p(&[2]));
        let mut expect = GrassmannElt::zero(2, 1);
        expect.add_term(p(&[1]), Poly::var(Var::e(1)));
        expect.add_term(Partition::empty(), Poly::var(Var::e(2)).scale(&rat(-1)));
        assert_eq!(r, expect);
        let s1 = GrassmannElt::basis(2, 1, p(&[1]));
        assert_eq!(alg.multiply(&s1, &s1).unwrap(), expect);
    }

    #[test]
    fn in_box_is_fixed() {
        let alg = GrassmannAlgebra::get(4, 2).unwrap();
        for b in alg.basis() {
            assert_eq!(alg.schur(b), GrassmannElt::basis(4, 2, b.clone()));
        }
    }

    #[test]
    fn trace_values() {
        let alg = GrassmannAlgebra::get(2, 1).unwrap();
        assert!(alg.trace(&GrassmannElt::one(2, 1)).unwrap().is_zero());
        let alg = GrassmannAlgebra::get(4, 2).unwrap();
        let top = GrassmannElt::basis(4, 2, p(&[2, 2]));
        assert_eq!(alg.trace(&top).unwrap(), Poly::int(-1));
    }

    #[test]
    fn elementary_values() {
        let e = elementary_of(&[Poly::int(1), Poly::int(2), Poly::int(3)]);
        assert_eq!(e, vec![Poly::int(6), Poly::int(11), Poly::int(6)]);
    }
}
