//! Expressions such as `2*s[2,1] - e1*s[1] + 1/2`, read into a Grassmannian algebra.
//! Schur factors outside the box are reduced; several Schur factors multiply.

use crate::grassmann::algebra::{GrassmannAlgebra, GrassmannElt};
use crate::grassmann::GrassError;
use crate::symcore::poly::{parse_rational, Poly, Var};
use crate::symcore::{Partition, SymError};

fn split_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.trim_end().ends_with('*') {
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
            continue;
        }
        if depth == 0 && (ch == '+' || ch == '-') && cur.trim().is_empty() {
            neg ^= ch == '-';
            continue;
        }
        cur.push(ch);
    }
    out.push((neg, cur));
    out
}

pub fn parse_elt(s: &str, alg: &GrassmannAlgebra) -> Result<GrassmannElt, GrassError> {
    let bad = |t: &str| GrassError::Sym(SymError::Parse(format!("term {t:?} in {s:?}")));
    let mut out = GrassmannElt::zero(alg.n, alg.a);
    for (neg, term) in split_terms(s) {
        let term = term.trim();
        if term.is_empty() {
            return Err(bad(term));
        }
        let mut coeff = if neg { Poly::int(-1) } else { Poly::one() };
        let mut x = GrassmannElt::one(alg.n, alg.a);
        for factor in term.split('*').map(str::trim) {
            if let Some(rest) = factor.strip_prefix('s') {
                let p: Partition = rest.parse().map_err(|_| bad(factor))?;
                x = alg.multiply(&x, &alg.schur(&p))?;
            } else if let Some(c) = parse_rational(factor) {
                coeff = coeff.scale(&c);
            } else if let Some(v) = Var::parse(factor) {
                coeff = &coeff * &Poly::var(v);
            } else {
                return Err(bad(factor));
            }
        }
        out = out.add(&x.scale(&coeff));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums() {
        let alg = GrassmannAlgebra::get(3, 1).unwrap();
        let x = parse_elt("2*s[1]*s[1] - e1*s[1] + 1/2", &alg).unwrap();
        let s1 = alg.schur(&Partition::from_slice(&[1]));
        let want = alg
            .multiply(&s1, &s1)
            .unwrap()
            .scale(&Poly::int(2))
            .sub(&s1.scale(&Poly::var(Var::e(1))))
            .add(&GrassmannElt::one(3, 1).scale(&Poly::constant(parse_rational("1/2").unwrap())));
        assert_eq!(x, want);
        assert_eq!(parse_elt("-s[2]", &alg).unwrap(), alg.schur(&Partition::from_slice(&[2])).scale(&Poly::int(-1)));
        assert!(parse_elt("s[1] + q", &alg).is_err());
        assert!(parse_elt("", &alg).is_err());
    }
}
