//! Sylvester operator zeta: Sym(A) (x) Sym(B) -> Sym(A u B),
//! zeta(f) = sum over S_{a+b}/(S_a x S_b) of sigma(f / prod_{x in A, y in B}(x - y)).
//!
//! Computed through alternants: s_alpha(A) V(A) s_beta(B) V(B) is a signed sum of
//! monomials, each antisymmetrizing to +-a_{lambda + delta}, i.e. +-s_lambda V(A u B).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::grassmann::algebra::GrassmannAlgebra;
use crate::grassmann::GrassError;
use crate::symcore::poly::Poly;
use crate::symcore::{Partition, SymElt};

/// Signed exponent vectors of the alternant a_{alpha + delta}.
fn alternant(alpha: &Partition, a: usize) -> Vec<(Vec<u32>, i64)> {
    let shifted: Vec<u32> = (0..a).map(|i| alpha.part(i) + (a - 1 - i) as u32).collect();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..a).collect();
    for_each_permutation(a, &mut perm, &mut |p, sign| {
        out.push((p.iter().map(|&i| shifted[i]).collect(), sign));
    });
    out
}

/// Visit every permutation of `perm` together with its sign.
fn for_each_permutation(n: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], i64)) {
    fn rec(k: usize, perm: &mut Vec<usize>, sign: i64, f: &mut dyn FnMut(&[usize], i64)) {
        if k <= 1 {
            f(perm, sign);
            return;
        }
        for i in 0..k {
            perm.swap(i, k - 1);
            let s = if i == k - 1 { sign } else { -sign };
            rec(k - 1, perm, s, f);
            perm.swap(i, k - 1);
        }
    }
    rec(n, perm, 1, f);
}

/// Sort decreasingly with sign; None if two entries coincide.
fn sort_sign(v: &[u32]) -> Option<(Vec<u32>, i64)> {
    let mut v = v.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] < v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// zeta(s_alpha(A) s_beta(B)) as coefficients on s_lambda(A u B).
pub fn sylvester_basis(alpha: &Partition, a: usize, beta: &Partition, b: usize) -> BTreeMap<Partition, BigRational> {
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    if alpha.len() > a || beta.len() > b {
        return BTreeMap::new();
    }
    let n = a + b;
    let ea = alternant(alpha, a);
    let eb = alternant(beta, b);
    for (xa, sa) in &ea {
        for (xb, sb) in &eb {
            let mu: Vec<u32> = xa.iter().chain(xb.iter()).copied().collect();
            if let Some((sorted, s)) = sort_sign(&mu) {
                let lam: Vec<u32> = sorted.iter().enumerate().map(|(i, &m)| m - (n - 1 - i) as u32).collect();
                let p = Partition::new(lam).expect("sorted minus staircase is a partition");
                *acc.entry(p).or_insert_with(BigInt::zero) += BigInt::from(sa * sb * s);
            }
        }
    }
    let d = factorial(a) * factorial(b);
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p, BigRational::new(c, d.clone())))
        .collect()
}

/// Bilinear extension: p in Sym(A) (a rows), q in Sym(B) (b rows) -> Sym(A u B).
pub fn sylvester(p: &SymElt, q: &SymElt) -> SymElt {
    let (a, b) = (p.rows(), q.rows());
    let mut out = SymElt::zero(a + b);
    for (alpha, ca) in p.terms() {
        for (beta, cb) in q.terms() {
            let c = ca * cb;
            for (lam, k) in sylvester_basis(alpha, a, beta, b) {
                out.add_term(lam, c.scale(&k));
            }
        }
    }
    out
}

/// Theta foam with decorations p, q, r on facets labelled a, b, a+b:
/// tr_{a+b}(r * zeta(p q)).
pub fn theta_eval(p: &SymElt, q: &SymElt, r: &SymElt, n: usize) -> Result<Poly, GrassError> {
    let ab = p.rows() + q.rows();
    if ab > n {
        return Err(GrassError::BadLabel { n, a: ab });
    }
    if r.rows() != ab {
        return Err(GrassError::Mismatch { left: (n, ab), right: (n, r.rows()) });
    }
    let z = sylvester(p, q);
    let prod = r.mul(&z).map_err(GrassError::Sym)?;
    let alg = GrassmannAlgebra::get(n, ab)?;
    alg.trace(&alg.reduce(&prod))
}

/// The value predicted for basis inputs: (-1)^{|complement-transpose alpha|} delta.
pub fn sylvester_expected(alpha: &Partition, a: usize, beta: &Partition, b: usize) -> BigRational {
    match beta.complement_transpose(b, a as u32) {
        Some(ct) if &ct == alpha => {
            let k = alpha.complement_transpose(a, b as u32).unwrap().size();
            if k.is_multiple_of(2) {
                BigRational::one()
            } else {
                -BigRational::one()
            }
        }
        _ => BigRational::zero(),
    }
}
