//! Idempotents of the Sigma-specialized algebra, one per a-subset of Sigma.
//!
//! Evaluation at an a-subset is an algebra map, so e_A is the interpolant with
//! e_A(B) = delta_{A,B}; it is found by inverting the evaluation matrix.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::grassmann::algebra::{elementary_of, GrassmannAlgebra, GrassmannElt};
use crate::grassmann::GrassError;
use crate::symcore::poly::{det, Poly, Var};
use crate::symcore::sym::schur_poly;
use crate::symcore::Partition;

/// e_A = numer / denom.
#[derive(Clone, Debug)]
pub struct Idempotent {
    pub subset: Vec<usize>,
    pub numer: GrassmannElt,
    pub denom: Poly,
}

/// s_alpha evaluated at the given alphabet values.
pub fn schur_at(alpha: &Partition, values: &[Poly]) -> Poly {
    let vars: Vec<Var> = (1..=values.len()).map(Var::x).collect();
    schur_poly(alpha, &vars).substitute(&|v| Some(values[v.index() - 1].clone()))
}

/// Evaluate a basis expansion at an a-subset (coefficients already specialized).
pub fn eval_at(x: &GrassmannElt, values: &[Poly]) -> Poly {
    let mut out = Poly::zero();
    for (p, c) in x.terms() {
        out += &(c * &schur_at(p, values));
    }
    out
}

fn check_distinct(sigma: &[Poly]) -> Result<(), GrassError> {
    for (i, j) in (0..sigma.len()).tuple_combinations() {
        let d = &sigma[i] - &sigma[j];
        if d.is_zero() {
            return Err(GrassError::RepeatedSigma(sigma[i].to_string()));
        }
    }
    Ok(())
}

/// Idempotents for Sigma given as numbers or indeterminates (as polynomials).
pub fn idempotents(sigma: &[Poly], a: usize) -> Result<Vec<Idempotent>, GrassError> {
    let n = sigma.len();
    check_distinct(sigma)?;
    let alg = GrassmannAlgebra::get(n, a)?;
    let basis = alg.basis().to_vec();
    let subsets: Vec<Vec<usize>> = (0..n).combinations(a).collect();
    let m: Vec<Vec<Poly>> = subsets
        .iter()
        .map(|s| {
            let vals: Vec<Poly> = s.iter().map(|&i| sigma[i].clone()).collect();
            basis.iter().map(|b| schur_at(b, &vals)).collect()
        })
        .collect();
    let numeric = m.iter().flatten().all(|p| p.as_constant().is_some());
    let (inv, denom) = if numeric { invert_numeric(&m)? } else { invert_adjugate(&m)? };
    let mut out = Vec::new();
    for (i, s) in subsets.into_iter().enumerate() {
        let mut numer = GrassmannElt::zero(n, a);
        for (j, b) in basis.iter().enumerate() {
            numer.add_term(b.clone(), inv[j][i].clone());
        }
        out.push(Idempotent { subset: s, numer, denom: denom.clone() });
    }
    Ok(out)
}

/// e_1..e_N of Sigma, for specializing structure constants.
pub fn sigma_elementary(sigma: &[Poly]) -> Vec<Poly> {
    elementary_of(sigma)
}

fn invert_numeric(m: &[Vec<Poly>]) -> Result<(Vec<Vec<Poly>>, Poly), GrassError> {
    let k = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|p| p.as_constant().unwrap()).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero()).ok_or(GrassError::Singular)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..k {
            a[col][j] = &a[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..k {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Ok((
        inv.into_iter().map(|row| row.into_iter().map(Poly::constant).collect()).collect(),
        Poly::one(),
    ))
}

/// M^{-1} = adj(M) / det(M) over a polynomial ring.
fn invert_adjugate(m: &[Vec<Poly>]) -> Result<(Vec<Vec<Poly>>, Poly), GrassError> {
    let k = m.len();
    let d = det(m);
    if d.is_zero() {
        return Err(GrassError::Singular);
    }
    let mut adj = vec![vec![Poly::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let minor: Vec<Vec<Poly>> = (0..k)
                .filter(|&r| r != i)
                .map(|r| (0..k).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                .collect();
            let c = det(&minor);
            adj[j][i] = if (i + j) % 2 == 0 { c } else { -&c };
        }
    }
    Ok((adj, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::poly::rat;

    #[test]
    fn rank_two_closed_form() {
        let l1 = Poly::var(Var::lam(1));
        let l2 = Poly::var(Var::lam(2));
        let ids = idempotents(&[l1.clone(), l2.clone()], 1).unwrap();
        let e = &ids[0];
        assert_eq!(e.subset, vec![0]);
        // numer / denom = (s_(1) - l2) / (l1 - l2) up to a common factor
        let s1 = Partition::from_slice(&[1]);
        let ratio_top = &e.numer.coeff(&s1) * &(&l1 - &l2);
        assert_eq!(ratio_top, e.denom);
        let ratio_const = &e.numer.coeff(&Partition::empty()) * &(&l1 - &l2);
        assert_eq!(ratio_const, -&(&l2 * &e.denom));
    }

    #[test]
    fn repeated_values_rejected() {
        assert!(idempotents(&[Poly::int(1), Poly::int(1)], 1).is_err());
    }

    #[test]
    fn full_label_is_unit() {
        let ids = idempotents(&[Poly::int(1), Poly::int(3), Poly::constant(rat(5))], 3).unwrap();
        assert_eq!(ids.len(), 1);
        assert_eq!(ids[0].numer, GrassmannElt::one(3, 3));
    }
}
