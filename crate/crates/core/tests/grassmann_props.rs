use foamcalc::grassmann::idempotent::sigma_elementary;
use foamcalc::grassmann::{parse_elt, GrassmannAlgebra, GrassmannElt};
use foamcalc::symcore::poly::Poly;
use proptest::prelude::*;

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn ranks() {
    for n in 0..=6 {
        for a in 0..=n {
            assert_eq!(GrassmannAlgebra::get(n, a).unwrap().rank(), binom(n, a));
        }
    }
    assert!(GrassmannAlgebra::get(2, 3).is_err());
}

#[test]
fn projective_line() {
    // N = 2, a = 1: s_1^2 = e1 s_1 - e2
    let alg = GrassmannAlgebra::get(2, 1).unwrap();
    let x = parse_elt("s[1]", &alg).unwrap();
    assert_eq!(alg.multiply(&x, &x).unwrap(), parse_elt("e1*s[1] - e2", &alg).unwrap());
    assert_eq!(alg.trace(&x).unwrap(), Poly::one());
    let sigma = [Poly::int(1), Poly::int(2)];
    let e = sigma_elementary(&sigma);
    assert_eq!(alg.multiply_specialized(&x, &x, &e).unwrap(), parse_elt("3*s[1] - 2", &alg).unwrap());
}

#[test]
fn mismatched_algebras_rejected() {
    let alg = GrassmannAlgebra::get(3, 1).unwrap();
    assert!(alg.multiply(&GrassmannElt::one(3, 1), &GrassmannElt::one(3, 2)).is_err());
}

fn elt(n: usize, a: usize) -> impl Strategy<Value = GrassmannElt> {
    let alg = GrassmannAlgebra::get(n, a).unwrap();
    let basis = alg.basis().to_vec();
    proptest::collection::vec(-3i64..=3, basis.len()).prop_map(move |cs| {
        let mut x = GrassmannElt::zero(n, a);
        for (p, c) in basis.iter().zip(cs) {
            x.add_term(p.clone(), Poly::int(c));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutative_with_unit(x in elt(5, 2), y in elt(5, 2)) {
        let alg = GrassmannAlgebra::get(5, 2).unwrap();
        prop_assert_eq!(alg.multiply(&x, &y).unwrap(), alg.multiply(&y, &x).unwrap());
        prop_assert_eq!(alg.multiply(&x, &GrassmannElt::one(5, 2)).unwrap(), x);
    }

    #[test]
    fn specializing_commutes(x in elt(4, 2), y in elt(4, 2), s in proptest::collection::btree_set(-9i64..9, 4)) {
        let alg = GrassmannAlgebra::get(4, 2).unwrap();
        let sigma: Vec<Poly> = s.into_iter().map(Poly::int).collect();
        let e = sigma_elementary(&sigma);
        let late = alg.multiply(&x, &y).unwrap().specialize(&e);
        prop_assert_eq!(alg.multiply_specialized(&x, &y, &e).unwrap(), late);
    }
}
