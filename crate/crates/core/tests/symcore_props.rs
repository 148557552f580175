use foamcalc::symcore::poly::{rat, Poly, Var};
use foamcalc::symcore::sym::{alpha_vars, schur_poly};
use foamcalc::symcore::{h_difference, lr_coeff, lr_product, qbinomial, schur_difference, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|k| {
        let all = Partition::of_size(k, k as usize);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

#[test]
fn worked_products() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    let t = lr_product(&p("[1]"), &p("[1]"), usize::MAX);
    assert_eq!(t.iter().map(|(g, c)| (g.to_string(), *c)).collect::<Vec<_>>(), vec![("[1,1]".into(), 1), ("[2]".into(), 1)]);
    assert_eq!(lr_coeff(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")), 2);
    let t = lr_product(&p("[]"), &p("[3]"), usize::MAX);
    assert_eq!(t.len(), 1);
}

#[test]
fn difference_at_a_point() {
    let h2 = h_difference(2, 2, 1);
    let v = h2
        .eval(&|v| [(Var::a(1), 1), (Var::a(2), 2), (Var::b(1), 3)].iter().find(|p| p.0 == v).map(|p| rat(p.1)))
        .unwrap();
    assert_eq!(v, rat(-2));
}

#[test]
fn classical_schur_recovered() {
    for k in 0..=6u32 {
        for alpha in Partition::of_size(k, 3) {
            let d = schur_difference(&alpha, 3, 2).unwrap();
            let b0 = d.substitute(&|v| if v == Var::b(1) || v == Var::b(2) { Some(Poly::zero()) } else { None });
            assert_eq!(b0, schur_poly(&alpha, &alpha_vars(3)), "{alpha}");
        }
    }
    assert!(schur_difference(&Partition::from_slice(&[1, 1, 1]), 2, 1).is_err());
}

#[test]
fn qbinomial_shape() {
    for n in 0..=7i64 {
        for k in 0..=n {
            let q = qbinomial(n, k).unwrap();
            assert_eq!(q, qbinomial(n, n - k).unwrap());
            assert_eq!(q, q.invert_q());
            let x = k * (n - k);
            assert_eq!(q.min_q(), Some(-x));
            assert_eq!(q.coeff(-x, 0), BigInt::from(1));
        }
    }
    assert!(qbinomial(2, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_symmetric_and_supported(a in partition(5), b in partition(5)) {
        let ab = lr_product(&a, &b, usize::MAX);
        let ba = lr_product(&b, &a, usize::MAX);
        prop_assert_eq!(ab.iter().collect::<Vec<_>>(), ba.iter().collect::<Vec<_>>());
        for (g, c) in ab.iter() {
            prop_assert!(g.contains(&a) && g.contains(&b));
            prop_assert_eq!(lr_coeff(&a, &b, g), *c);
        }
    }

    #[test]
    fn row_bound_truncates(a in partition(4), b in partition(4), rows in 1usize..4) {
        let all = lr_product(&a, &b, usize::MAX);
        let cut = lr_product(&a, &b, rows);
        let kept: Vec<_> = all.iter().filter(|(g, _)| g.len() <= rows).collect();
        prop_assert_eq!(cut.iter().collect::<Vec<_>>(), kept);
    }
}
