//! Scalar scripts for Reidemeister inverse pairs and movie moves on simple
//! resolutions, and the sweep that checks they all reduce to one.

use num_rational::BigRational;
use num_traits::One;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::functorial::catalog::{r3_cyclic_template, reidemeister_scalar, Catalog, Foam, Move, RelationStep};
use crate::functorial::scalar::{minus, prefix, union, ScalarExpr, Subset};
use crate::functorial::FuncError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "step")]
pub enum Step {
    /// A Reidemeister or Morse map, contributing its normalization.
    Map { mv: Move, foam: Foam },
    Rel(RelationStep),
    /// The accumulated scalar must equal this value here.
    #[serde(skip)]
    Expect(ScalarExpr),
}

/// Reversible moves compare `lhs` with the identity; the others compare both sides.
#[derive(Clone, Debug)]
pub struct Script {
    pub name: String,
    pub variant: String,
    pub labels: Vec<u32>,
    pub lhs: Vec<Step>,
    pub rhs: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub holds: bool,
    /// Accumulated scalar at the end, or at the first failed checkpoint.
    pub residual: ScalarExpr,
    pub failed_checkpoint: Option<usize>,
}

fn accumulate(steps: &[Step], initial: &ScalarExpr, n: usize, catalog: &Catalog) -> Result<Outcome, FuncError> {
    let mut acc = initial.clone();
    for (i, step) in steps.iter().enumerate() {
        match step {
            Step::Map { mv, foam } => {
                let s = reidemeister_scalar(mv, n, catalog)?.pick(*foam);
                acc = &acc * &s.to_expr(n);
            }
            Step::Rel(r) => acc = &acc * &r.factor(n, catalog)?,
            Step::Expect(want) => {
                if &acc != want {
                    let residual = &acc * &want.inverse().unwrap_or_else(ScalarExpr::zero);
                    return Ok(Outcome { holds: false, residual, failed_checkpoint: Some(i) });
                }
            }
        }
    }
    Ok(Outcome { holds: acc.is_one(), residual: acc, failed_checkpoint: None })
}

/// Multiply out a script starting from `initial`; holds when the product is one.
pub fn verify_identity(steps: &[Step], initial: &ScalarExpr, n: usize, catalog: &Catalog) -> Result<Outcome, FuncError> {
    accumulate(steps, initial, n, catalog)
}

impl Script {
    pub fn run(&self, n: usize, catalog: &Catalog) -> Result<Outcome, FuncError> {
        let left = accumulate(&self.lhs, &ScalarExpr::one(), n, catalog)?;
        if left.failed_checkpoint.is_some() {
            return Ok(left);
        }
        let right = accumulate(&self.rhs, &ScalarExpr::one(), n, catalog)?;
        if right.failed_checkpoint.is_some() {
            return Ok(right);
        }
        let inv = right
            .residual
            .inverse()
            .ok_or_else(|| FuncError::Malformed(format!("{}: right side vanishes", self.name)))?;
        let residual = &left.residual * &inv;
        Ok(Outcome { holds: residual.is_one(), residual, failed_checkpoint: None })
    }
}

fn numeric_product(steps: &[Step], n: usize, catalog: &Catalog, sigma: &[BigRational]) -> Result<BigRational, FuncError> {
    let mut acc = BigRational::one();
    for step in steps {
        let f = match step {
            Step::Map { mv, foam } => reidemeister_scalar(mv, n, catalog)?.pick(*foam).to_expr(n),
            Step::Rel(r) => r.factor(n, catalog)?,
            Step::Expect(_) => continue,
        };
        acc *= f.eval(sigma).ok_or_else(|| FuncError::Malformed("factor vanishes at Sigma".into()))?;
    }
    Ok(acc)
}

/// Seeded Sigma of N distinct integers in [-50, 50).
pub fn random_sigma(n: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample(&mut rng, 100, n).into_iter().map(|i| BigRational::from_integer((i as i64 - 50).into())).collect()
}

/// Multiply every script out factor by factor as numbers at a random Sigma.
/// Returns the names of scripts whose two sides disagree.
pub fn numeric_spot_check(max_label: u32, n: usize, seed: u64) -> Result<Vec<String>, FuncError> {
    let sigma = random_sigma(n, seed);
    let catalog = Catalog::standard();
    let mut scripts = reidemeister_scripts(max_label);
    scripts.extend(movie_move_scripts(max_label));
    let mut bad = Vec::new();
    for s in &scripts {
        let l = numeric_product(&s.lhs, n, &catalog, &sigma)?;
        let r = numeric_product(&s.rhs, n, &catalog, &sigma)?;
        if l != r {
            bad.push(format!("{} {} {:?}", s.name, s.variant, s.labels));
        }
    }
    Ok(bad)
}

fn map(mv: Move, foam: Foam) -> Step {
    Step::Map { mv, foam }
}

fn rel(r: RelationStep) -> Step {
    Step::Rel(r)
}

fn p(a: u32) -> Subset {
    prefix(a as usize)
}

/// Favourite set of the larger label minus that of the smaller.
fn gap(a: u32, b: u32) -> Subset {
    minus(&p(a.max(b)), &p(a.min(b)))
}

fn script(name: &str, variant: &str, labels: &[u32], lhs: Vec<Step>) -> Script {
    Script { name: name.into(), variant: variant.into(), labels: labels.to_vec(), lhs, rhs: vec![] }
}

fn both_orders(mv: Move, rels: Vec<Step>) -> [Vec<Step>; 2] {
    let mut gf = vec![map(mv.clone(), Foam::F), map(mv.clone(), Foam::G)];
    gf.extend(rels.iter().cloned());
    let mut fg = vec![map(mv.clone(), Foam::G), map(mv, Foam::F)];
    fg.extend(rels);
    [gf, fg]
}

/// Relations collapsing G o F of an R1 move: the neck-cut bubble for writhe-raising kinks.
fn r1_relations(label: u32, increasing: bool) -> Vec<Step> {
    if increasing {
        vec![rel(RelationStep::bubble(p(label)).inv())]
    } else {
        vec![]
    }
}

fn r2_parallel_relations(a: u32, b: u32) -> Vec<Step> {
    vec![rel(RelationStep::disc(p(a), p(b)))]
}

fn r2_opposite_relations(a: u32, b: u32) -> Vec<Step> {
    let (big, small) = (p(a.max(b)), p(a.min(b)));
    vec![rel(RelationStep::saddle_reverse(small, big, gap(a, b)))]
}

/// Relations collapsing G o F of a braid-like R3 move.
fn r3_relations(labels: [u32; 3]) -> Vec<Step> {
    let [a, b, c] = labels;
    let mut sorted = labels;
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    let [hi, mid, lo] = sorted;
    let hm = gap(hi, mid);
    let ml = gap(mid, lo);
    let monotone = (a >= b && b >= c) || (c >= b && b >= a);
    if monotone {
        let first = RelationStep::klr2(ml.clone(), hm.clone()).inv();
        return vec![
            rel(first),
            Step::Expect(ScalarExpr::r(&hm, &ml).inverse().unwrap()),
            rel(RelationStep::klr(hm, ml)),
        ];
    }
    // middle strand is the extreme one: the seam sign comes from the gap on its side
    let d = if b <= a.min(c) { ml.clone() } else { hm.clone() };
    let low = p(lo);
    let big = union(&low, &d);
    let sign = ScalarExpr::sign((lo as i64) * d.len() as i64);
    vec![
        rel(RelationStep::mp()),
        rel(RelationStep::disc2(low.clone(), big.clone(), d.clone())),
        Step::Expect(sign),
        rel(RelationStep::klr2(ml.clone(), hm.clone())),
        rel(RelationStep::saddle_reverse(low, big, d)),
        Step::Expect(ScalarExpr::r(&hm, &ml)),
        rel(RelationStep::klr2(ml, hm).inv()),
    ]
}

fn r3_cyclic_steps(labels: [u32; 3]) -> Vec<Step> {
    let [a, b, c] = labels;
    let (forward, backward) = r3_cyclic_template(labels);
    let mut steps: Vec<Step> = forward.into_iter().chain(backward).map(|(m, f)| map(m, f)).collect();
    // inverse pairs nest: innermost R2 opposite, then R2 parallel, R3, R2 parallel, R2 opposite
    steps.extend(r2_opposite_relations(a, b));
    steps.extend(r2_parallel_relations(a, c));
    // checkpoints of the inner R3 are absolute, so they do not apply inside the composite
    steps.extend(r3_relations(labels).into_iter().filter(|s| !matches!(s, Step::Expect(_))));
    steps.extend(r2_parallel_relations(a, c));
    steps.extend(r2_opposite_relations(a, b));
    steps
}

fn tuples(k: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=max).map(move |l| {
                    let mut t = t.clone();
                    t.push(l);
                    t
                })
            })
            .collect();
    }
    out
}

fn decreasing(t: &[u32]) -> bool {
    t.windows(2).all(|w| w[0] >= w[1])
}

/// Inverse-pair identities G o F = 1 and F o G = 1 for every Reidemeister move.
pub fn reidemeister_scripts(max_label: u32) -> Vec<Script> {
    let mut out = Vec::new();
    let orders = ["GF", "FG"];
    for a in 1..=max_label {
        for increasing in [true, false] {
            for scaled in [Foam::F, Foam::G] {
                let mv = Move::R1 { label: a, increasing, scaled };
                let v = format!("{}writhe, scaled {:?}", if increasing { "+" } else { "-" }, scaled);
                for (o, steps) in orders.iter().zip(both_orders(mv, r1_relations(a, increasing))) {
                    out.push(script("R1", &format!("{v}, {o}"), &[a], steps));
                }
            }
        }
    }
    for t in tuples(2, max_label) {
        let (a, b) = (t[0], t[1]);
        for over_first in [true, false] {
            let mv = Move::R2Parallel { labels: [a, b], over_first };
            for (o, steps) in orders.iter().zip(both_orders(mv, r2_parallel_relations(a, b))) {
                out.push(script("R2+", &format!("over {}, {o}", if over_first { "first" } else { "second" }), &t, steps));
            }
        }
        for variant in [1, 2] {
            let mv = Move::R2Opposite { labels: [a, b], variant };
            for (o, steps) in orders.iter().zip(both_orders(mv, r2_opposite_relations(a, b))) {
                out.push(script("R2-", &format!("variant {variant}, {o}"), &t, steps));
            }
        }
    }
    for t in tuples(3, max_label) {
        let labels = [t[0], t[1], t[2]];
        for (o, steps) in orders.iter().zip(both_orders(Move::R3Braidlike { labels }, r3_relations(labels))) {
            out.push(script("R3+", o, &t, steps));
        }
        out.push(script("R3-", "GF", &t, r3_cyclic_steps(labels)));
    }
    out
}

fn mm6(max_label: u32) -> Vec<Script> {
    let mut out = Vec::new();
    for t in tuples(3, max_label).into_iter().filter(|t| decreasing(t)) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let (ab, bc) = (gap(a, b), gap(b, c));
        let eps = ScalarExpr::sign((c * (b - c)) as i64);
        let r3 = Move::R3Braidlike { labels: [a, b, c] };
        let r2 = Move::R2Parallel { labels: [b, c], over_first: true };
        let lhs = vec![
            map(r2.clone(), Foam::F),
            map(r3.clone(), Foam::F),
            map(r3.clone(), Foam::G),
            map(r2, Foam::G),
            rel(RelationStep::mp()),
            Step::Expect(eps.clone()),
            rel(RelationStep::klr2(ab.clone(), bc.clone()).inv()),
            Step::Expect(&eps * &ScalarExpr::r(&bc, &ab).inverse().unwrap()),
            rel(RelationStep::disc2(p(c), p(b), bc.clone())),
            rel(RelationStep::klr(bc, ab)),
        ];
        out.push(script("MM6", "parallel R2", &t, lhs));

        // the opposite-orientation version reduces to the absence of monodromy around two R3 moves
        let (ab, bc) = (gap(a, b), gap(b, c));
        let low = p(c);
        let big = union(&low, &ab);
        let sign = ScalarExpr::sign((c * (a - b)) as i64);
        let lhs = vec![
            map(r3.clone(), Foam::F),
            map(Move::R2Parallel { labels: [a, c], over_first: true }, Foam::F),
            map(r3, Foam::F),
            map(Move::R2Parallel { labels: [a, c], over_first: false }, Foam::G),
            rel(RelationStep::mp()),
            rel(RelationStep::disc2(low.clone(), big.clone(), ab.clone())),
            Step::Expect(sign),
            rel(RelationStep::klr2(bc.clone(), ab.clone())),
            rel(RelationStep::saddle_reverse(low, big, ab.clone())),
            Step::Expect(ScalarExpr::r(&ab, &bc)),
            rel(RelationStep::klr2(bc, ab).inv()),
            rel(RelationStep::mp()),
        ];
        out.push(script("MM6", "opposite R2", &t, lhs));
    }
    out
}

fn mm7(max_label: u32) -> Vec<Script> {
    (1..=max_label)
        .map(|a| {
            let lhs = vec![
                map(Move::R1 { label: a, increasing: false, scaled: Foam::F }, Foam::F),
                map(Move::R1 { label: a, increasing: true, scaled: Foam::F }, Foam::F),
                map(Move::R2Opposite { labels: [a, a], variant: 2 }, Foam::G),
                rel(RelationStep::sphere(p(a))),
            ];
            script("MM7", "displayed", &[a], lhs)
        })
        .collect()
}

fn mm8(max_label: u32) -> Vec<Script> {
    tuples(2, max_label)
        .into_iter()
        .map(|t| {
            let (a, b) = (t[0], t[1]);
            let lhs = vec![
                map(Move::R1 { label: b, increasing: true, scaled: Foam::F }, Foam::F),
                map(Move::R2Parallel { labels: [a, b], over_first: true }, Foam::F),
                map(Move::R3Braidlike { labels: [a, b, b] }, Foam::G),
                map(Move::R2Opposite { labels: [a, b], variant: 2 }, Foam::G),
                map(Move::R1 { label: b, increasing: true, scaled: Foam::F }, Foam::G),
                rel(RelationStep::disc(p(a), p(b))),
                rel(RelationStep::sphere(p(b))),
            ];
            script("MM8", if a >= b { "a>=b" } else { "a<b" }, &t, lhs)
        })
        .collect()
}

fn mm9(max_label: u32) -> Vec<Script> {
    let mut out = Vec::new();
    for t in tuples(2, max_label) {
        let l = [t[0], t[1]];
        let lhs = vec![
            map(Move::R2Parallel { labels: l, over_first: true }, Foam::F),
            map(Move::R2Parallel { labels: l, over_first: false }, Foam::G),
        ];
        out.push(script("MM9", "parallel", &t, lhs));
        let lhs = vec![
            map(Move::R2Opposite { labels: l, variant: 2 }, Foam::F),
            map(Move::R2Opposite { labels: l, variant: 1 }, Foam::G),
        ];
        out.push(script("MM9", "opposite", &t, lhs));
    }
    out
}

fn mm10(max_label: u32) -> Vec<Script> {
    let mut out = Vec::new();
    for t in tuples(4, max_label).into_iter().filter(|t| decreasing(t)) {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let (ab, bc, cd) = (gap(a, b), gap(b, c), gap(c, d));
        let (ac, bd) = (gap(a, c), gap(b, d));
        let y = union(&ab, &cd);
        let r = ScalarExpr::r;
        let labels = [[a, b, c], [a, b, d], [a, c, d], [b, c, d]];
        let mut lhs: Vec<Step> = labels.iter().map(|l| map(Move::R3Braidlike { labels: *l }, Foam::G)).collect();
        lhs.extend(labels.iter().rev().map(|l| map(Move::R3Braidlike { labels: *l }, Foam::F)));
        let sign_abc = ScalarExpr::sign(((a - b) * (b - c)) as i64);
        lhs.extend([
            // the upright facets
            rel(RelationStep::klr(cd.clone(), ac.clone())),
            Step::Expect(r(&cd, &ac)),
            rel(RelationStep::saddle_reverse(bc.clone(), ac.clone(), ab.clone())),
            rel(RelationStep::disc2(cd.clone(), union(&cd, &ab), ab.clone()).second_form()),
            rel(RelationStep::klr(cd.clone(), bc.clone()).inv()),
            Step::Expect(&r(&ab, &bd) * &r(&bc, &ab).inverse().unwrap()),
            // two local moves through the middle facets, each undone
            rel(RelationStep::pitchfork3(bc.clone(), y.clone())),
            rel(RelationStep::pitchfork3(bc.clone(), y.clone()).inv()),
            rel(RelationStep::pitchfork3(bc.clone(), y.clone())),
            rel(RelationStep::pitchfork3(bc.clone(), y).inv()),
            rel(RelationStep::klr(ab.clone(), cd.clone()).inv()),
            rel(RelationStep::klr2(ab.clone(), cd.clone()).inv()),
            Step::Expect(&sign_abc * &r(&cd, &ab).inverse().unwrap()),
            // the remaining diagram is an identity foam in disguise
            rel(RelationStep::saddle_reverse(bc, ac, ab.clone())),
            rel(RelationStep::klr2(ab, cd)),
        ]);
        out.push(script("MM10", "displayed", &t, lhs));
    }
    out
}

fn morse_moves(max_label: u32) -> Vec<Script> {
    let mut out = Vec::new();
    for a in 1..=max_label {
        let cup = || map(Move::Cup { label: a }, Foam::F);
        let cap = |normalized| map(Move::Cap { label: a, normalized }, Foam::F);
        let saddle = || map(Move::Saddle { label: a }, Foam::F);
        out.push(script("MM12", "sphere", &[a], vec![cup(), cap(true), rel(RelationStep::sphere(p(a)))]));
        out.push(Script {
            name: "MM12".into(),
            variant: "sides".into(),
            labels: vec![a],
            lhs: vec![cup(), cup(), cap(true), cap(false)],
            rhs: vec![cup(), cup(), cap(false), cap(true)],
        });
        out.push(Script {
            name: "MM13".into(),
            variant: "sides".into(),
            labels: vec![a],
            lhs: vec![cup(), saddle(), cap(true), saddle()],
            rhs: vec![cup(), saddle(), cap(true), saddle()],
        });
    }
    for t in tuples(2, max_label) {
        let l = [t[0], t[1]];
        let cup = map(Move::Cup { label: l[1] }, Foam::F);
        let cap = map(Move::Cap { label: l[1], normalized: false }, Foam::F);
        let par = Move::R2Parallel { labels: l, over_first: true };
        let opp = Move::R2Opposite { labels: l, variant: 2 };
        for (dir, lhs, rhs) in [
            ("forward", vec![cup.clone(), map(par.clone(), Foam::F)], vec![cup.clone(), map(opp.clone(), Foam::F)]),
            ("backward", vec![map(par, Foam::G), cap.clone()], vec![map(opp, Foam::G), cap.clone()]),
        ] {
            out.push(Script { name: "MM14".into(), variant: dir.into(), labels: t.clone(), lhs, rhs });
        }
        let saddle = map(Move::Saddle { label: l[0] }, Foam::F);
        let par = Move::R2Parallel { labels: l, over_first: false };
        let opp = Move::R2Opposite { labels: l, variant: 1 };
        for (dir, lhs, rhs) in [
            ("forward", vec![map(par.clone(), Foam::F), saddle.clone()], vec![map(opp.clone(), Foam::F), saddle.clone()]),
            ("backward", vec![saddle.clone(), map(par, Foam::G)], vec![saddle.clone(), map(opp, Foam::G)]),
        ] {
            out.push(Script { name: "MM15".into(), variant: dir.into(), labels: t.clone(), lhs, rhs });
        }
    }
    out
}

pub fn movie_move_scripts(max_label: u32) -> Vec<Script> {
    let mut out = mm6(max_label);
    out.extend(mm7(max_label));
    out.extend(mm8(max_label));
    out.extend(mm9(max_label));
    out.extend(mm10(max_label));
    out.extend(morse_moves(max_label));
    out
}

/// Variants that are not encoded as scripts.
pub const UNTRANSCRIBED: &[&str] = &[
    "MM6 with label orders other than a>=b>=c",
    "MM6 opposite version: the R2 detours removed through inverse pairs and MM9 are not replayed",
    "MM10 variants other than a>=b>=c>=d, reduced to MM6 by far-commutation",
    "MM11, an isotopy relation",
    "orientation and height variants of MM7, MM12-MM15 beyond the displayed ones",
];

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    #[serde(rename = "move")]
    pub name: String,
    pub variant: String,
    pub labels: Vec<u32>,
    pub status: String,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub max_label: u32,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseReport>,
    pub untranscribed: Vec<String>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

pub fn verify_movie_moves(max_label: u32, n: usize) -> Result<Report, FuncError> {
    verify_movie_moves_with(max_label, n, &Catalog::standard())
}

pub fn verify_movie_moves_with(max_label: u32, n: usize, catalog: &Catalog) -> Result<Report, FuncError> {
    if max_label == 0 || max_label as usize > n {
        return Err(FuncError::Malformed(format!("max label {max_label} must lie in 1..={n}")));
    }
    let mut scripts = reidemeister_scripts(max_label);
    scripts.extend(movie_move_scripts(max_label));
    let cases: Vec<CaseReport> = scripts
        .par_iter()
        .map(|s| {
            let o = s.run(n, catalog)?;
            Ok(CaseReport {
                name: s.name.clone(),
                variant: s.variant.clone(),
                labels: s.labels.clone(),
                status: if o.holds { "pass" } else { "fail" }.into(),
                residual: o.residual.to_string(),
            })
        })
        .collect::<Result<_, FuncError>>()?;
    let passed = cases.iter().filter(|c| c.status == "pass").count();
    Ok(Report {
        n,
        max_label,
        passed,
        failed: cases.len() - passed,
        cases,
        untranscribed: UNTRANSCRIBED.iter().map(|s| s.to_string()).collect(),
    })
}
