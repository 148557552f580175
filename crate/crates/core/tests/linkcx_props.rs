use foamcalc::linkcx::cube::{cube_size, koszul_sign, reorder_sign};
use foamcalc::linkcx::{crossing_complex, cube, euler_char, reidemeister_corpus, ColoredDiagram};
use foamcalc::symcore::{qbinomial, LaurentPoly};
use foamcalc::webmoy::Web;
use proptest::prelude::*;

fn braid(n: usize, w: &[i32], c: &[u32]) -> ColoredDiagram {
    ColoredDiagram::braid_closure(n, w, c).unwrap()
}

#[test]
fn corpus_pairs_agree() {
    let corpus = reidemeister_corpus();
    assert!(corpus.len() >= 10);
    for p in &corpus {
        for n in p.max_color()..=3 {
            let l = euler_char(&p.left, n).unwrap();
            let r = euler_char(&p.right, n).unwrap();
            assert_eq!(l, r, "{} at N={}", p.name, n);
        }
    }
}

#[test]
fn unknot_values() {
    for n in 1..=4u32 {
        for a in 1..=n {
            let want = qbinomial(n as i64, a as i64).unwrap();
            assert_eq!(euler_char(&braid(1, &[], &[a]), n).unwrap(), want);
            assert_eq!(euler_char(&braid(2, &[1], &[a, a]), n).unwrap(), want);
        }
    }
}

#[test]
fn split_union_multiplies() {
    let hopf = braid(2, &[1, 1], &[1, 1]);
    let trefoil = braid(2, &[1, 1, 1], &[1, 1]);
    let both = braid(4, &[1, 1, 3, 3, 3], &[1, 1, 1, 1]);
    for n in 2..=3 {
        let prod = &euler_char(&hopf, n).unwrap() * &euler_char(&trefoil, n).unwrap();
        assert_eq!(euler_char(&both, n).unwrap(), prod);
    }
}

#[test]
fn trefoil_at_two() {
    // right-handed trefoil, unnormalized: [2] times the Jones polynomial
    let t = braid(2, &[1, 1, 1], &[1, 1]);
    let want = [(-9, -1), (-5, 1), (-3, 1), (-1, 1)]
        .iter()
        .fold(LaurentPoly::zero(), |acc, &(e, c)| &acc + &LaurentPoly::mono(e, 0, c));
    assert_eq!(euler_char(&t, 2).unwrap(), want);
}

#[test]
fn mirror_inverts_q() {
    for p in reidemeister_corpus() {
        let d = &p.right;
        for n in p.max_color()..=3 {
            assert_eq!(euler_char(&d.mirror(), n).unwrap(), euler_char(d, n).unwrap().invert_q(), "{}", p.name);
        }
        let c = cube(d, 3).unwrap();
        let cm = cube(&d.mirror(), 3).unwrap();
        let ts: Vec<i64> = c.objects.iter().map(|o| -o.t_degree).collect();
        let tm: Vec<i64> = cm.objects.iter().map(|o| o.t_degree).collect();
        assert_eq!(ts, tm);
    }
}

#[test]
fn crossing_complex_shapes() {
    let c = crossing_complex(1, 1, 1, 2).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!((c[0].q_shift, c[0].t_degree), (-1, 0));
    assert_eq!((c[1].q_shift, c[1].t_degree), (-2, 1));
    assert!(c[0].web.vertices.is_empty());
    assert_eq!(c[1].web.vertices.len(), 2);

    let c = crossing_complex(1, 2, 1, 3).unwrap();
    let t: Vec<i64> = c.iter().map(|o| o.t_degree).collect();
    assert_eq!(t, vec![0, 1]);
    assert_eq!(c[0].q_shift, -2);

    let pos = crossing_complex(1, 2, 2, 4).unwrap();
    let neg = crossing_complex(-1, 2, 2, 4).unwrap();
    for (p, m) in pos.iter().zip(neg.iter()) {
        assert_eq!(p.q_shift, -m.q_shift);
        assert_eq!(p.t_degree, -m.t_degree);
        assert_eq!(p.web, m.web);
    }
}

#[test]
fn hopf_cube() {
    let h = braid(2, &[1, 1], &[1, 1]);
    let c = cube(&h, 2).unwrap();
    let mut t: Vec<i64> = c.objects.iter().map(|o| o.t_degree).collect();
    t.sort();
    assert_eq!(t, vec![0, 1, 1, 2]);
    assert_eq!(c.differentials.len(), 4);
    // squares anticommute: the two paths from (0,0) to (1,1) carry opposite signs
    let sign = |s: &[u32], tgt: &[u32]| c.differentials.iter().find(|d| d.source == s && d.target == tgt).unwrap().sign;
    let p1 = sign(&[0, 0], &[1, 0]) * sign(&[1, 0], &[1, 1]);
    let p2 = sign(&[0, 0], &[0, 1]) * sign(&[0, 1], &[1, 1]);
    assert_eq!(p1, -p2);
}

#[test]
fn empty_diagram() {
    let d = ColoredDiagram { components: vec![], arcs: vec![], crossings: vec![], boundary: None };
    let c = cube(&d, 3).unwrap();
    assert_eq!(c.objects.len(), 1);
    assert_eq!((c.objects[0].q_shift, c.objects[0].t_degree), (0, 0));
    assert_eq!(euler_char(&d, 3).unwrap(), LaurentPoly::one());
    assert_eq!(c.objects[0].web, Web::default());
}

#[test]
fn reorder_signs() {
    assert_eq!(reorder_sign(&[1, 1], &[1, 0]), -1);
    assert_eq!(reorder_sign(&[1, 2], &[1, 0]), 1);
    assert_eq!(reorder_sign(&[0, 1], &[1, 0]), 1);
    assert_eq!(koszul_sign(&[1, 1], 0), -1);
    assert_eq!(koszul_sign(&[1, 1], 1), 1);
    // reordering crossings leaves the Euler characteristic alone
    let d = braid(3, &[1, -2, 1, -2], &[1, 1, 1]);
    let r = d.reorder(&[3, 1, 0, 2]).unwrap();
    assert_eq!(euler_char(&d, 3).unwrap(), euler_char(&r, 3).unwrap());
}

#[test]
fn open_diagram_rejected() {
    let d = ColoredDiagram::from_json(
        r#"{"components":[{"id":0,"color":1}],"arcs":[{"id":0,"component":0}],"crossings":[],
            "boundary":{"bottom":[0],"top":[0]}}"#,
    )
    .unwrap();
    assert!(euler_char(&d, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cube_size_is_product(word in proptest::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)], 0..5),
                            c in 1u32..=2) {
        let d = braid(3, &word, &[c, c, c]);
        let expect: usize = (0..word.len()).map(|_| (c + 1) as usize).product();
        prop_assert_eq!(cube_size(&d).unwrap(), expect);
        prop_assert_eq!(cube(&d, 3).unwrap().objects.len(), expect);
    }

    #[test]
    fn conjugation_invariance(word in proptest::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)], 0..4),
                              g in prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)]) {
        // g w g^-1 is related to w by R2 moves after closing
        let mut conj = vec![g];
        conj.extend(&word);
        conj.push(-g);
        let a = braid(3, &word, &[1, 1, 1]);
        let b = braid(3, &conj, &[1, 1, 1]);
        prop_assert_eq!(euler_char(&a, 2).unwrap(), euler_char(&b, 2).unwrap());
    }
}
