//! Balanced quantum binomials, symmetric under q <-> q^-1.

use crate::symcore::{LaurentPoly, SymError};

/// [n] = q^(1-n) + q^(3-n) + ... + q^(n-1)
pub fn qint(n: u32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..n as i64 {
        out = &out + &LaurentPoly::q(1 - n as i64 + 2 * i);
    }
    out
}

/// Balanced Gaussian binomial via [n,k] = q^-k [n-1,k] + q^(n-k) [n-1,k-1].
pub fn qbinomial(n: i64, k: i64) -> Result<LaurentPoly, SymError> {
    if n < 0 || k < 0 || k > n {
        return Err(SymError::Invalid(format!("qbinomial({}, {})", n, k)));
    }
    let (n, k) = (n as usize, k as usize);
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let mut v = LaurentPoly::zero();
            if j < row.len() && j < m {
                v = &v + &(&LaurentPoly::q(-(j as i64)) * &row[j]);
            }
            if j >= 1 {
                v = &v + &(&LaurentPoly::q((m - j) as i64) * &row[j - 1]);
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row[k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(qbinomial(2, 1).unwrap(), &LaurentPoly::q(-1) + &LaurentPoly::q(1));
        assert_eq!(qbinomial(5, 0).unwrap(), LaurentPoly::one());
        assert_eq!(qbinomial(3, 1).unwrap(), qint(3));
        assert!(qbinomial(2, 3).is_err());
    }
}
