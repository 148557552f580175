use std::collections::BTreeMap;

use foamcalc::deformed::{
    colored_resolution, crossing_shift, deformed_homology, deformed_summands, simple_resolution, SigmaSpec,
};
use foamcalc::linkcx::diagram::TangleBoundary;
use foamcalc::linkcx::{reidemeister_corpus, ColoredDiagram};
use foamcalc::symcore::LaurentPoly;
use foamcalc::webmoy::VertexKind;
use num_bigint::BigInt;
use proptest::prelude::*;

fn braid(n: usize, w: &[i32], c: &[u32]) -> ColoredDiagram {
    ColoredDiagram::braid_closure(n, w, c).unwrap()
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn unknots_and_knots() {
    for n in 1..=4usize {
        let sigma = SigmaSpec::standard(n);
        for a in 1..=n as u32 {
            let want = LaurentPoly::mono(0, 0, binom(n as u64, a as u64) as i64);
            assert_eq!(deformed_homology(&braid(1, &[], &[a]), &sigma).unwrap(), want);
        }
        let knot = LaurentPoly::mono(0, 0, n as i64);
        for w in [&[1, 1, 1][..], &[1, -2, 1, -2], &[1, 1, 2, -1, 2]] {
            let k = braid(3.max(1 + w.iter().map(|g: &i32| g.unsigned_abs() as usize).max().unwrap()), w, &[1, 1, 1]);
            if k.components.len() == 1 {
                assert_eq!(deformed_homology(&k, &sigma).unwrap(), knot);
            }
        }
    }
}

#[test]
fn positive_hopf() {
    let sigma: SigmaSpec = "1,-1".parse().unwrap();
    let h = braid(2, &[1, 1], &[1, 1]);
    let want = &LaurentPoly::mono(0, 0, 2) + &LaurentPoly::mono(0, 2, 2);
    assert_eq!(deformed_homology(&h, &sigma).unwrap(), want);
}

/// Independent oracle: for colors 1 and N = 2 each component picks one of two
/// points; the degree is twice the sum of linking numbers across differing pairs.
fn lee_degrees(d: &ColoredDiagram) -> Vec<i64> {
    let lk = d.linking_numbers().unwrap();
    let ids: Vec<usize> = d.components.iter().map(|c| c.id).collect();
    let mut out = Vec::new();
    for bits in 0..(1u32 << ids.len()) {
        let mut deg = 0;
        for (&(x, y), &l) in &lk {
            let px = ids.iter().position(|&i| i == x).unwrap();
            let py = ids.iter().position(|&i| i == y).unwrap();
            if (bits >> px & 1) != (bits >> py & 1) {
                deg += 2 * l;
            }
        }
        out.push(deg);
    }
    out.sort();
    out
}

#[test]
fn linking_number_formula() {
    let sigma = SigmaSpec::standard(2);
    let mut checked = 0;
    for p in reidemeister_corpus() {
        for d in [&p.left, &p.right] {
            if d.components.iter().any(|c| c.color != 1) {
                continue;
            }
            let mut got: Vec<i64> = Vec::new();
            for s in deformed_summands(d, &sigma).unwrap() {
                got.push(s.t_degree);
            }
            got.sort();
            assert_eq!(got, lee_degrees(d), "{}", p.name);
            checked += 1;
        }
    }
    assert!(checked >= 8);
}

#[test]
fn corpus_invariance() {
    for p in reidemeister_corpus() {
        for n in p.max_color() as usize..=3 {
            let sigma = SigmaSpec::standard(n);
            assert_eq!(
                deformed_homology(&p.left, &sigma).unwrap(),
                deformed_homology(&p.right, &sigma).unwrap(),
                "{}",
                p.name
            );
        }
    }
}

#[test]
fn symbolic_sigma_rejected() {
    let h = braid(2, &[1, 1], &[1, 1]);
    assert!(deformed_homology(&h, &SigmaSpec::symbolic(2)).is_err());
    assert!(deformed_homology(&braid(1, &[], &[3]), &SigmaSpec::standard(2)).is_err());
}

fn single_crossing(sign: i8, a: u32, b: u32) -> ColoredDiagram {
    // over strand arcs 0 -> 1, under strand arcs 2 -> 3
    let (bottom, top) = if sign > 0 { (vec![0, 2], vec![3, 1]) } else { (vec![2, 0], vec![1, 3]) };
    let json = serde_json::json!({
        "components": [{"id": 0, "color": a}, {"id": 1, "color": b}],
        "arcs": [{"id": 0, "component": 0}, {"id": 1, "component": 0}, {"id": 2, "component": 1}, {"id": 3, "component": 1}],
        "crossings": [{"sign": sign, "over": [0, 1], "under": [2, 3]}],
        "boundary": {"bottom": bottom, "top": top}
    });
    ColoredDiagram::from_json(&json.to_string()).unwrap()
}

#[test]
fn simple_resolution_of_crossing() {
    for sign in [1i8, -1] {
        for (a, b) in [(2u32, 1u32), (3, 1), (3, 2), (1, 2)] {
            let w = simple_resolution(&single_crossing(sign, a, b)).unwrap();
            w.validate().unwrap();
            // a split and a merge joined by the difference edge
            let kinds: Vec<VertexKind> = w.vertices.iter().map(|v| v.kind).collect();
            assert_eq!(kinds.len(), 2);
            let (hi, lo) = (a.max(b) as usize, a.min(b) as usize);
            let rung = w.edges.iter().find(|e| e.label == (hi - lo) as u32 && e.tail.is_some() && e.head.is_some());
            let rung = rung.expect("difference edge");
            assert_eq!(rung.color.clone().unwrap(), (lo..hi).collect::<Vec<_>>());
        }
        // equal labels: two parallel strands, nothing else
        let w = simple_resolution(&single_crossing(sign, 2, 2)).unwrap();
        assert!(w.vertices.is_empty());
        assert_eq!(w.edges.len(), 2);
    }
}

#[test]
fn trivial_tangle_is_itself() {
    let d = ColoredDiagram {
        components: vec![foamcalc::linkcx::diagram::Component { id: 0, color: 2 }],
        arcs: vec![foamcalc::linkcx::diagram::Arc { id: 0, component: 0 }],
        crossings: vec![],
        boundary: Some(TangleBoundary { bottom: vec![0], top: vec![0] }),
    };
    let w = simple_resolution(&d).unwrap();
    assert_eq!(w.edges.len(), 1);
    assert!(w.vertices.is_empty());
    assert_eq!(w.edges[0].color, Some(vec![0, 1]));
}

#[test]
fn colored_summand_webs_are_admissible() {
    let d = braid(3, &[1, -2, 1], &[2, 1, 2]);
    let n = 3;
    let mut seen: BTreeMap<i64, usize> = BTreeMap::new();
    for s in deformed_summands(&d, &SigmaSpec::standard(n)).unwrap() {
        let w = colored_resolution(&d, &s.coloring, n).unwrap();
        assert!(w.edges.iter().all(|e| e.color.as_ref().map(|c| c.len() as u32) == Some(e.label)));
        *seen.entry(s.t_degree).or_default() += 1;
    }
    assert_eq!(seen.values().sum::<usize>(), 9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shift_is_symmetric_and_bounded(a in proptest::collection::btree_set(0usize..6, 0..4),
                                      b in proptest::collection::btree_set(0usize..6, 0..4),
                                      sign in prop_oneof![Just(1i8), Just(-1)]) {
        let (a, b): (Vec<usize>, Vec<usize>) = (a.into_iter().collect(), b.into_iter().collect());
        let s = crossing_shift(sign, &a, &b);
        prop_assert_eq!(s, crossing_shift(sign, &b, &a));
        prop_assert!(s.abs() <= a.len().min(b.len()) as i64);
        prop_assert_eq!(crossing_shift(-sign, &a, &b), -s);
    }

    #[test]
    fn total_rank_is_product(word in proptest::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)], 0..5),
                             n in 2usize..=4) {
        let d = braid(3, &word, &[1, 1, 1]);
        let v = deformed_homology(&d, &SigmaSpec::standard(n)).unwrap();
        let want: u64 = d.components.iter().map(|c| binom(n as u64, c.color as u64)).product();
        prop_assert_eq!(v.at_one(), BigInt::from(want));
    }
}
