//! Crossing complexes, the cube of resolutions and graded Euler characteristics.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::linkcx::diagram::{ColoredDiagram, Frame};
use crate::linkcx::LinkError;
use crate::symcore::LaurentPoly;
use crate::webmoy::web::{disjoint, join, Web};
use crate::webmoy::{moy_eval, BoundaryPoint};

/// One term of a crossing complex: the k-th ladder web with its shifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingTerm {
    pub k: u32,
    pub q_shift: i64,
    pub t_degree: i64,
    #[serde(skip)]
    pub web: Web,
}

/// x = m(N - m) for the smaller label m.
pub fn crossing_x(a: u32, b: u32, n: u32) -> i64 {
    let m = a.min(b) as i64;
    m * (n as i64 - m)
}

/// Bottom labels (left, right) of the crossing seen with both strands upwards.
fn frame_labels(sign: i8, over: u32, under: u32) -> (u32, u32) {
    if sign > 0 {
        (over, under)
    } else {
        (under, over)
    }
}

/// q-shift of the k-th term: q^{-x-k} for positive crossings, inverted for negative.
///
/// Adjacent ladder webs are joined by foams of degree one, so degree-zero
/// differentials lower the shift by one per rung; starting at q^{-x} this is the
/// normalization under which the kink relation holds.
pub fn q_shift(sign: i8, k: u32, x: i64) -> i64 {
    let s = -x - k as i64;
    if sign > 0 {
        s
    } else {
        -s
    }
}

/// Objects of the complex of a crossing with over label `over`, under label `under`.
pub fn crossing_complex(sign: i8, over: u32, under: u32, n: u32) -> Result<Vec<CrossingTerm>, LinkError> {
    if over == 0 || under == 0 {
        return Err(LinkError::Invalid("labels must be positive".into()));
    }
    let (l, r) = frame_labels(sign, over, under);
    let x = crossing_x(over, under, n);
    (0..=over.min(under))
        .map(|k| {
            let web = Web::ladder(l, r, k)?;
            let t = if sign > 0 { k as i64 } else { -(k as i64) };
            Ok(CrossingTerm { k, q_shift: q_shift(sign, k, x), t_degree: t, web })
        })
        .collect()
}

/// Resolution web of a diagram at a state (rung index per crossing).
pub fn resolution(d: &ColoredDiagram, state: &[u32]) -> Result<Web, LinkError> {
    resolution_tagged(d, state, &BTreeMap::new())
}

/// As `resolution`, tagging the edges coming from the given arcs with colors.
pub fn resolution_tagged(
    d: &ColoredDiagram,
    state: &[u32],
    arc_colors: &BTreeMap<usize, Vec<usize>>,
) -> Result<Web, LinkError> {
    if state.len() != d.crossings.len() {
        return Err(LinkError::Invalid("state length differs from crossing count".into()));
    }
    let mut pieces: Vec<Web> = Vec::new();
    let mut frames: Vec<Frame> = Vec::new();
    for (c, x) in d.crossings.iter().enumerate() {
        let (o, u) = d.labels(c)?;
        let (l, r) = frame_labels(x.sign, o, u);
        if state[c] > o.min(u) {
            return Err(LinkError::Invalid(format!("state {} out of range at crossing {}", state[c], c)));
        }
        let mut w = Web::ladder(l, r, state[c])?;
        let f = x.frame();
        for (dart, arc) in [(w.bottom[0], f.bl), (w.bottom[1], f.br), (w.top[0], f.tl), (w.top[1], f.tr)] {
            if let Some(col) = arc_colors.get(&arc) {
                w.edges[dart / 2].color = Some(col.clone());
            }
        }
        pieces.push(w);
        frames.push(f);
    }
    let nc = pieces.len();
    // where each arc starts (crossing, top slot) and ends (crossing, bottom slot)
    let mut starts: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut ends: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (c, f) in frames.iter().enumerate() {
        starts.insert(f.tl, (c, 0));
        starts.insert(f.tr, (c, 1));
        ends.insert(f.bl, (c, 0));
        ends.insert(f.br, (c, 1));
    }
    // arcs touching the boundary or free of crossings become bare edges
    let mut bare: BTreeMap<usize, usize> = BTreeMap::new();
    let mut strands = Web::default();
    let mut loops = Vec::new();
    for a in &d.arcs {
        let (s, e) = (starts.contains_key(&a.id), ends.contains_key(&a.id));
        if s && e {
            continue;
        }
        let label = d.color_of_arc(a.id)?;
        let on_boundary = d
            .boundary
            .as_ref()
            .is_some_and(|b| b.bottom.contains(&a.id) || b.top.contains(&a.id));
        if !s && !e && !on_boundary {
            let mut c = Web::circle(label);
            c.edges[0].color = arc_colors.get(&a.id).cloned();
            loops.push(c);
            continue;
        }
        let mut pts = Web::identity(&[BoundaryPoint { label, up: true }]);
        pts.edges[0].color = arc_colors.get(&a.id).cloned();
        bare.insert(a.id, strands.edges.len());
        strands = Web::tensor(&strands, &pts);
    }
    let mut parts: Vec<&Web> = pieces.iter().collect();
    parts.push(&strands);
    let (mut w, off) = disjoint(&parts);
    let so = off[nc];
    let mut pairs = Vec::new();
    for a in &d.arcs {
        let st = starts.get(&a.id);
        let en = ends.get(&a.id);
        match (st, en) {
            (Some(&(c1, s1)), Some(&(c2, s2))) => {
                pairs.push((pieces[c1].top[s1] + off[c1], pieces[c2].bottom[s2] + off[c2]));
            }
            _ => {
                if let Some(&e) = bare.get(&a.id) {
                    if let Some(&(c1, s1)) = st {
                        pairs.push((pieces[c1].top[s1] + off[c1], so + 2 * e));
                    }
                    if let Some(&(c2, s2)) = en {
                        pairs.push((so + 2 * e + 1, pieces[c2].bottom[s2] + off[c2]));
                    }
                }
            }
        }
    }
    // boundary darts: the free end of each boundary arc
    let mut used: BTreeMap<usize, u32> = BTreeMap::new();
    let mut free_end = |a: usize| -> Result<usize, LinkError> {
        let e = *bare.get(&a).ok_or(LinkError::UnknownArc(a))?;
        let k = used.entry(a).or_insert(0);
        *k += 1;
        let dart = match (starts.contains_key(&a), ends.contains_key(&a)) {
            (true, false) => so + 2 * e + 1,
            (false, true) => so + 2 * e,
            // both ends free: first listed occurrence is the tail
            _ => so + 2 * e + if *k == 1 { 0 } else { 1 },
        };
        Ok(dart)
    };
    let (mut bottom, mut top) = (Vec::new(), Vec::new());
    if let Some(b) = &d.boundary {
        for &a in &b.bottom {
            bottom.push(free_end(a)?);
        }
        for &a in &b.top {
            top.push(free_end(a)?);
        }
    }
    w.vertices.shrink_to_fit();
    let mut out = join(w, &pairs, bottom, top)?;
    for l in loops {
        out = Web::tensor(&out, &l);
    }
    out.assign_kinds();
    Ok(out)
}

/// Size of the cube: product of (min(a,b) + 1).
pub fn cube_size(d: &ColoredDiagram) -> Result<usize, LinkError> {
    let mut s = 1usize;
    for c in 0..d.crossings.len() {
        let (o, u) = d.labels(c)?;
        s *= (o.min(u) + 1) as usize;
    }
    Ok(s)
}

/// States in lexicographic order.
pub fn states(d: &ColoredDiagram) -> Result<Vec<Vec<u32>>, LinkError> {
    let mut ranges = Vec::new();
    for c in 0..d.crossings.len() {
        let (o, u) = d.labels(c)?;
        ranges.push(o.min(u));
    }
    let mut out = vec![vec![]];
    for &m in &ranges {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..=m).map(move |k| {
                    let mut t = s.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedObject {
    pub state: Vec<u32>,
    pub q_shift: i64,
    pub t_degree: i64,
    #[serde(skip)]
    pub web: Web,
}

/// A differential component between adjacent states, with its Koszul sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialSlot {
    pub source: Vec<u32>,
    pub target: Vec<u32>,
    pub crossing: usize,
    pub generator: String,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cube {
    pub objects: Vec<GradedObject>,
    pub differentials: Vec<DifferentialSlot>,
}

fn local_degrees(d: &ColoredDiagram, state: &[u32], n: u32) -> Result<Vec<(i64, i64)>, LinkError> {
    state
        .iter()
        .enumerate()
        .map(|(c, &k)| {
            let (o, u) = d.labels(c)?;
            let s = d.crossings[c].sign;
            let x = crossing_x(o, u, n);
            Ok((q_shift(s, k, x), if s > 0 { k as i64 } else { -(k as i64) }))
        })
        .collect()
}

pub fn object(d: &ColoredDiagram, state: &[u32], n: u32) -> Result<GradedObject, LinkError> {
    let degs = local_degrees(d, state, n)?;
    Ok(GradedObject {
        state: state.to_vec(),
        q_shift: degs.iter().map(|p| p.0).sum(),
        t_degree: degs.iter().map(|p| p.1).sum(),
        web: resolution(d, state)?,
    })
}

/// Koszul sign of the differential acting in tensor factor i: the parity of the
/// homological degrees of the later factors.
pub fn koszul_sign(t: &[i64], i: usize) -> i8 {
    if t[i + 1..].iter().sum::<i64>().rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the isomorphism induced by reordering tensor factors with the given
/// degrees: new position j holds old factor perm[j].
pub fn reorder_sign(t: &[i64], perm: &[usize]) -> i8 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && (t[perm[i]] * t[perm[j]]).rem_euclid(2) == 1 {
                s = -s;
            }
        }
    }
    s
}

pub fn cube(d: &ColoredDiagram, n: u32) -> Result<Cube, LinkError> {
    let mut objects = Vec::new();
    let mut differentials = Vec::new();
    for st in states(d)? {
        let obj = object(d, &st, n)?;
        let t: Vec<i64> = local_degrees(d, &st, n)?.iter().map(|p| p.1).collect();
        for c in 0..st.len() {
            let (o, u) = d.labels(c)?;
            let positive = d.crossings[c].sign > 0;
            // positive crossings raise k, negative ones lower it
            let target = if positive {
                (st[c] < o.min(u)).then(|| st[c] + 1)
            } else {
                st[c].checked_sub(1)
            };
            if let Some(k2) = target {
                let mut tgt = st.clone();
                tgt[c] = k2;
                differentials.push(DifferentialSlot {
                    source: st.clone(),
                    target: tgt,
                    crossing: c,
                    generator: format!("d{}_{}", if positive { "+" } else { "-" }, st[c].min(k2)),
                    sign: koszul_sign(&t, c),
                });
            }
        }
        objects.push(obj);
    }
    Ok(Cube { objects, differentials })
}

/// Graded Euler characteristic: sum over states of (-1)^t q^shift MOY(resolution).
pub fn euler_char(d: &ColoredDiagram, n: u32) -> Result<LaurentPoly, LinkError> {
    if !d.is_closed() {
        return Err(LinkError::OpenBoundary);
    }
    d.validate()?;
    if let Some(c) = d.components.iter().find(|c| c.color > n) {
        return Err(LinkError::ColorTooLarge { color: c.color, n });
    }
    let sts = states(d)?;
    let parts: Result<Vec<LaurentPoly>, LinkError> = sts
        .par_iter()
        .map(|st| {
            let degs = local_degrees(d, st, n)?;
            let web = resolution(d, st)?;
            if web.edges.iter().any(|e| e.label > n) {
                return Ok(LaurentPoly::zero());
            }
            let q: i64 = degs.iter().map(|p| p.0).sum();
            let t: i64 = degs.iter().map(|p| p.1).sum();
            let m = moy_eval(&web, n)?;
            let sign = if t.rem_euclid(2) == 0 { 1 } else { -1 };
            Ok(&(&m * &LaurentPoly::q(q)) * &LaurentPoly::mono(0, 0, sign))
        })
        .collect();
    let mut out = LaurentPoly::zero();
    for p in parts? {
        out = &out + &p;
    }
    Ok(out)
}
