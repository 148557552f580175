//! Complete and Schur functions of a difference alphabet A - B.
//!
//! sum_k h_k(A - B) x^k = prod_{b in B} (1 - b x) / prod_{a in A} (1 - a x)

use crate::symcore::poly::{complete, det, elementary, Poly, Var};
use crate::symcore::sym::{alpha_vars, beta_vars};
use crate::symcore::{Partition, SymError};

/// h_k(A - B) in explicit variables; zero for negative k.
pub fn h_difference_in(k: i64, a: &[Var], b: &[Var]) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    let k = k as usize;
    let mut out = Poly::zero();
    for j in 0..=k.min(b.len()) {
        let term = &complete(k - j, a) * &elementary(j, b);
        if j % 2 == 0 {
            out += &term;
        } else {
            out = &out - &term;
        }
    }
    out
}

/// h_k(A - B) with A = {A1..Aa}, B = {B1..Bb}.
pub fn h_difference(k: i64, a: usize, b: usize) -> Poly {
    h_difference_in(k, &alpha_vars(a), &beta_vars(b))
}

/// s_alpha(A - B) = det(h_{alpha_i + j - i}(A - B)) in explicit variables.
pub fn schur_difference_in(alpha: &Partition, a: &[Var], b: &[Var]) -> Result<Poly, SymError> {
    if alpha.len() > a.len() {
        return Err(SymError::TooManyRows(alpha.to_string(), a.len()));
    }
    let l = alpha.len();
    let m: Vec<Vec<Poly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| h_difference_in(alpha.part(i) as i64 + j as i64 - i as i64, a, b))
                .collect()
        })
        .collect();
    Ok(det(&m))
}

pub fn schur_difference(alpha: &Partition, a: usize, b: usize) -> Result<Poly, SymError> {
    schur_difference_in(alpha, &alpha_vars(a), &beta_vars(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::poly::rat;

    #[test]
    fn low_degree_values() {
        let (a1, a2, b1) = (Poly::var(Var::a(1)), Poly::var(Var::a(2)), Poly::var(Var::b(1)));
        assert_eq!(h_difference(0, 3, 2), Poly::one());
        assert_eq!(h_difference(1, 2, 1), &(&a1 + &a2) - &b1);
        let expect = &(&(&a1.pow(2) + &(&a1 * &a2)) + &a2.pow(2)) - &(&(&a1 + &a2) * &b1);
        assert_eq!(h_difference(2, 2, 1), expect);
    }

    #[test]
    fn h2_at_point() {
        let v = h_difference(2, 2, 1)
            .eval(&|v| {
                Some(match (v.kind(), v.index()) {
                    (0, 1) => rat(1),
                    (0, 2) => rat(2),
                    _ => rat(3),
                })
            })
            .unwrap();
        assert_eq!(v, rat(-2));
    }

    #[test]
    fn schur_difference_basics() {
        assert_eq!(schur_difference(&Partition::empty(), 2, 1).unwrap(), Poly::one());
        assert_eq!(
            schur_difference(&Partition::from_slice(&[1]), 2, 1).unwrap(),
            h_difference(1, 2, 1)
        );
        assert!(schur_difference(&Partition::from_slice(&[1, 1, 1]), 2, 1).is_err());
    }
}
