use foamcalc::functorial::scalar::{minus, prefix, union};
use foamcalc::functorial::{
    omega, r_number, r_scalar, reidemeister_scalar, verify_identity, verify_movie_moves, verify_movie_moves_with,
    Catalog, Entry, Foam, Move, RelationId, RelationStep, ScalarExpr, Step,
};
use foamcalc::symcore::poly::{Poly, Var};
use foamcalc::symcore::sym::schur_poly;
use foamcalc::symcore::Partition;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn lam_diff_product(x: &[usize], y: &[usize]) -> Poly {
    let mut out = Poly::one();
    for &i in x {
        for &j in y {
            out = &out * &(&Poly::var(Var::lam(i + 1)) - &Poly::var(Var::lam(j + 1)));
        }
    }
    out
}

fn lam(set: &[usize]) -> Vec<Var> {
    set.iter().map(|&i| Var::lam(i + 1)).collect()
}

#[test]
fn r_examples() {
    let r = r_scalar(&[0], &[1]);
    assert_eq!(r.to_poly().unwrap(), &Poly::var(Var::lam(1)) - &Poly::var(Var::lam(2)));
    assert!(r_scalar(&[0], &[0, 1]).is_zero());
    let w = omega(&[0], 3);
    assert_eq!(w.to_poly().unwrap(), lam_diff_product(&[0], &[1, 2]));
}

#[test]
fn r_matches_schur_sum() {
    // r(A,B) = sum over alpha in the a x b box of (-1)^{|alpha^ct|} s_alpha(A) s_{alpha^ct}(B)
    for a in 0..=3usize {
        for b in 0..=3usize {
            let x: Vec<usize> = (0..a).collect();
            let y: Vec<usize> = (a..a + b).collect();
            let mut sum = Poly::zero();
            for alpha in Partition::in_box(a, b as u32) {
                let ct = alpha.complement_transpose(a, b as u32).unwrap();
                let term = &schur_poly(&alpha, &lam(&x)) * &schur_poly(&ct, &lam(&y));
                sum = if ct.size() % 2 == 0 { &sum + &term } else { &sum - &term };
            }
            assert_eq!(sum, r_scalar(&x, &y).to_poly().unwrap(), "a={a} b={b}");
        }
    }
}

#[test]
fn omega_coherence() {
    // omega_A omega_B = omega_{A u B} r(A,B)^2 for disjoint A, B
    for n in 1..=6usize {
        for mask_a in 0u32..(1 << n) {
            for mask_b in 0u32..(1 << n) {
                if mask_a & mask_b != 0 {
                    continue;
                }
                let a: Vec<usize> = (0..n).filter(|i| mask_a >> i & 1 == 1).collect();
                let b: Vec<usize> = (0..n).filter(|i| mask_b >> i & 1 == 1).collect();
                let lhs = &omega(&a, n) * &omega(&b, n);
                let rhs = &omega(&union(&a, &b), n) * &r_scalar(&a, &b).pow(2).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

fn subset(n: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=max.min(n))
}

fn setup() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>, Vec<usize>)> {
    (1usize..=8).prop_flat_map(|n| (Just(n), subset(n, 4), subset(n, 4), subset(n, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn r_identities((n, a, b, x) in setup()) {
        let r = r_scalar(&a, &b);
        prop_assert_eq!(r.to_poly().unwrap(), lam_diff_product(&a, &b));
        let swapped = &ScalarExpr::sign((a.len() * b.len()) as i64) * &r;
        prop_assert_eq!(r_scalar(&b, &a), swapped);
        prop_assert_eq!(r.is_zero(), a.iter().any(|i| b.contains(i)));
        if b.iter().all(|i| !x.contains(i)) {
            prop_assert_eq!(r_scalar(&a, &union(&b, &x)), &r * &r_scalar(&a, &x));
        }
        let w = omega(&a, n);
        prop_assert!(!w.is_zero());
        prop_assert!(!w.to_poly().unwrap().is_zero());
        let sigma: Vec<BigRational> = (0..n).map(|i| BigRational::from_integer((3 * i as i64 - 5).into())).collect();
        prop_assert_eq!(r.eval(&sigma).unwrap(), r_number(&a, &b, &sigma));
        prop_assert!(!w.eval(&sigma).unwrap().is_zero());
    }

    #[test]
    fn relations_cancel_with_their_inverse((n, a, b, x) in setup(), second in any::<bool>()) {
        let c = Catalog::standard();
        let xa = minus(&a, &b);
        let xs = x.iter().copied().filter(|i| a.contains(i)).collect::<Vec<_>>();
        for id in RelationId::ALL {
            let mut step = RelationStep { id, form: 1, a: a.clone(), b: xa.clone(), x: xs.clone(), inverse: false };
            if second {
                step = step.second_form();
            }
            let Ok(f) = step.factor(n, &c) else { continue };
            if f.is_zero() {
                continue;
            }
            let g = step.clone().inv().factor(n, &c).unwrap();
            prop_assert!((&f * &g).is_one(), "{:?}", id);
        }
    }
}

#[test]
fn normalization_examples() {
    let c = Catalog::standard();
    let s = reidemeister_scalar(&Move::R1 { label: 2, increasing: true, scaled: Foam::F }, 4, &c).unwrap();
    assert_eq!(s.f.to_expr(4), omega(&prefix(2), 4));
    assert!(s.g.is_one());
    for (a, b) in [(2u32, 1u32), (3, 1), (3, 2), (1, 3), (2, 2)] {
        let s = reidemeister_scalar(&Move::R2Parallel { labels: [a, b], over_first: true }, 4, &c).unwrap();
        let e = (a.min(b) as i64) * (a as i64 - b as i64);
        assert_eq!(s.f.to_expr(4), ScalarExpr::sign(e));
    }
    let s = reidemeister_scalar(&Move::R3Cyclic { labels: [3, 2, 1] }, 4, &c).unwrap();
    assert!(s.f.is_one() && s.g.is_one());
    assert!(reidemeister_scalar(&Move::R2Opposite { labels: [1, 1], variant: 3 }, 4, &c).is_err());
}

#[test]
fn displayed_identities() {
    let c = Catalog::standard();
    let n = 6;
    assert!(verify_identity(&[], &ScalarExpr::one(), n, &c).unwrap().holds);
    let gap = |x: usize, y: usize| minus(&prefix(x), &prefix(y));
    for (a, b, cc) in [(3usize, 2usize, 1usize), (3, 1, 1), (2, 2, 1), (3, 2, 2)] {
        let (ab, bc) = (gap(a, b), gap(b, cc));
        // r(AB,BC)^{-1} then the KLR factor r(BC,AB), against the antisymmetry sign
        let steps = vec![
            Step::Rel(RelationStep::klr2(bc.clone(), ab.clone()).inv()),
            Step::Rel(RelationStep::klr(bc.clone(), ab.clone())),
        ];
        let sign = ScalarExpr::sign(((a - b) * (b - cc)) as i64);
        assert!(verify_identity(&steps, &sign, n, &c).unwrap().holds);
    }
    for (a, b) in [(3usize, 1usize), (2, 1), (3, 2), (2, 2)] {
        // MM8: (-1)^{b(a-b)} omega_B against the annulus sign and the sphere
        let init = &ScalarExpr::sign((b * (a - b)) as i64) * &omega(&prefix(b), n);
        let steps = vec![
            Step::Rel(RelationStep::disc(prefix(a), prefix(b))),
            Step::Rel(RelationStep::sphere(prefix(b))),
        ];
        assert!(verify_identity(&steps, &init, n, &c).unwrap().holds);
        // R2 opposite pair: epsilon against the saddle-reverse factor
        let steps = vec![
            Step::Map { mv: Move::R2Opposite { labels: [a as u32, b as u32], variant: 1 }, foam: Foam::F },
            Step::Map { mv: Move::R2Opposite { labels: [a as u32, b as u32], variant: 1 }, foam: Foam::G },
            Step::Rel(RelationStep::saddle_reverse(prefix(b), prefix(a), gap(a, b))),
        ];
        assert!(verify_identity(&steps, &ScalarExpr::one(), n, &c).unwrap().holds);
    }
    let bad = vec![Step::Rel(RelationStep::disc(prefix(2), prefix(1)))];
    let o = verify_identity(&bad, &ScalarExpr::one(), n, &c).unwrap();
    assert!(!o.holds && o.residual.is_negative_sign());
}

#[test]
fn movie_moves_hold() {
    let report = verify_movie_moves(3, 6).unwrap();
    assert!(report.all_pass(), "{:?}", report.cases.iter().find(|c| c.status != "pass"));
    for name in ["R1", "R2+", "R2-", "R3+", "R3-", "MM6", "MM7", "MM8", "MM9", "MM10", "MM12", "MM13", "MM14", "MM15"] {
        assert!(report.cases.iter().any(|c| c.name == name), "{name}");
    }
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["cases"][0]["status"], "pass");
    assert!(json["cases"][0]["move"].is_string());
    assert!(verify_movie_moves(4, 3).is_err());
}

#[test]
fn mutations_are_caught() {
    for e in Entry::signed() {
        let report = verify_movie_moves_with(3, 6, &Catalog::flipping(e)).unwrap();
        assert!(report.failed > 0, "{e:?} went unnoticed");
        let bad = report.cases.iter().find(|c| c.status == "fail").unwrap();
        assert_ne!(bad.residual, "1");
    }
}

#[test]
fn normalizations_lie_in_the_omega_lattice() {
    let c = Catalog::standard();
    let moves = foamcalc::functorial::reidemeister_scripts(3)
        .into_iter()
        .chain(foamcalc::functorial::movie_move_scripts(3))
        .flat_map(|s| s.lhs.into_iter().chain(s.rhs))
        .filter_map(|s| match s {
            Step::Map { mv, .. } => Some(mv),
            _ => None,
        });
    for mv in moves {
        let s = reidemeister_scalar(&mv, 6, &c).unwrap();
        for side in [s.f, s.g] {
            let mut rebuilt = ScalarExpr::sign(side.negative as i64);
            for (set, k) in &side.omegas {
                assert!(set == &prefix(set.len()));
                rebuilt = &rebuilt * &omega(set, 6).pow(*k).unwrap();
            }
            assert_eq!(rebuilt, side.to_expr(6));
        }
    }
}
