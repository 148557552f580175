//! Admissible subset flows and the MOY state sum.
//!
//! A flow assigns to every edge a subset of {1..N} (a bitmask) of the edge's size,
//! with the two small subsets at each vertex partitioning the big one. For a fixed
//! flow and pigment i, the edges containing i form disjoint oriented cycles; the
//! weight of a flow is
//!
//!   1/2 * sum_vertices (pi(L,R) - pi(R,L)) + sum_i (N + 1 - 2i) * rot_i
//!
//! where L, R are the subsets on the left and right small edges and
//! pi(X,Y) = #{(x,y) in X x Y : x > y}.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::symcore::LaurentPoly;
use crate::webmoy::web::{edge_of, is_tail, VertexKind, Web};
use crate::webmoy::WebError;

pub type Flow = Vec<u32>;

fn subsets_of(universe: u32, size: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let bits: Vec<u32> = (0..32).filter(|b| universe >> b & 1 == 1).collect();
    if size as usize > bits.len() {
        return out;
    }
    fn rec(bits: &[u32], start: usize, left: u32, acc: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..bits.len() {
            if bits.len() - i < left as usize {
                break;
            }
            rec(bits, i + 1, left - 1, acc | 1 << bits[i], out);
        }
    }
    rec(&bits, 0, size, 0, &mut out);
    out
}

/// Darts at a trivalent vertex as (big, first small, second small) in ccw order.
fn big_first(w: &Web, v: usize) -> (usize, usize, usize) {
    let c = &w.vertices[v].ccw;
    let want_tail = w.vertices[v].kind == VertexKind::Merge;
    let p = c.iter().position(|&d| is_tail(d) == want_tail).unwrap();
    (c[p], c[(p + 1) % 3], c[(p + 2) % 3])
}

struct Search<'a> {
    web: &'a Web,
    n: u32,
    full: u32,
    order: Vec<usize>,
    /// vertices touching each edge
    touch: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(web: &'a Web, n: u32) -> Self {
        let ne = web.edges.len();
        let mut touch = vec![Vec::new(); ne];
        for (v, vert) in web.vertices.iter().enumerate() {
            for &d in &vert.ccw {
                if !touch[edge_of(d)].contains(&v) {
                    touch[edge_of(d)].push(v);
                }
            }
        }
        // breadth-first edge order so that propagation bites early
        let mut order = Vec::with_capacity(ne);
        let mut seen = vec![false; ne];
        for s in 0..ne {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(e) = queue.pop_front() {
                order.push(e);
                for &v in &touch[e] {
                    for &d in &web.vertices[v].ccw {
                        let f = edge_of(d);
                        if !seen[f] {
                            seen[f] = true;
                            queue.push_back(f);
                        }
                    }
                }
            }
        }
        let full = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
        Search { web, n, full, order, touch }
    }

    /// Fill in forced edges; false on contradiction.
    fn propagate(&self, asg: &mut [u32], start: &[usize]) -> bool {
        let mut stack: Vec<usize> = start.to_vec();
        while let Some(v) = stack.pop() {
            let vert = &self.web.vertices[v];
            let label = |d: usize| self.web.edges[edge_of(d)].label;
            let (darts, big): (Vec<usize>, Option<usize>) = match vert.kind {
                VertexKind::Pass => (vert.ccw.clone(), None),
                _ => {
                    let (b, x, y) = big_first(self.web, v);
                    (vec![b, x, y], Some(b))
                }
            };
            let unknown: Vec<usize> = darts.iter().copied().filter(|&d| asg[edge_of(d)] == 0).collect();
            let fixed = match (big, unknown.len()) {
                (_, 0) => {
                    let ok = match big {
                        None => asg[edge_of(darts[0])] == asg[edge_of(darts[1])],
                        Some(_) => {
                            let (b, x, y) = (asg[edge_of(darts[0])], asg[edge_of(darts[1])], asg[edge_of(darts[2])]);
                            x & y == 0 && x | y == b
                        }
                    };
                    if !ok {
                        return false;
                    }
                    None
                }
                (None, 1) => {
                    let other = darts.iter().copied().find(|&d| d != unknown[0]).unwrap();
                    Some((unknown[0], asg[edge_of(other)]))
                }
                (Some(b), 1) => {
                    let u = unknown[0];
                    let others: Vec<u32> = darts[1..].iter().filter(|&&d| d != u).map(|&d| asg[edge_of(d)]).collect();
                    if u == b {
                        let (x, y) = (asg[edge_of(darts[1])], asg[edge_of(darts[2])]);
                        if x & y != 0 {
                            return false;
                        }
                        Some((u, x | y))
                    } else {
                        let bm = asg[edge_of(b)];
                        let o = others[0];
                        if o & !bm != 0 {
                            return false;
                        }
                        Some((u, bm & !o))
                    }
                }
                _ => None,
            };
            if let Some((d, m)) = fixed {
                let e = edge_of(d);
                if m.count_ones() != label(d) || m == 0 {
                    return false;
                }
                asg[e] = m;
                for &u in &self.touch[e] {
                    stack.push(u);
                }
            }
        }
        true
    }

    /// Candidate subsets for an unassigned edge given its neighbours.
    fn universe(&self, asg: &[u32], e: usize) -> u32 {
        let mut u = self.full;
        for &v in &self.touch[e] {
            if self.web.vertices[v].kind == VertexKind::Pass {
                continue;
            }
            let (b, x, y) = big_first(self.web, v);
            let (bm, xm, ym) = (asg[edge_of(b)], asg[edge_of(x)], asg[edge_of(y)]);
            if edge_of(b) != e {
                if bm != 0 {
                    u &= bm;
                }
                let sib = if edge_of(x) == e { ym } else { xm };
                u &= !sib;
            }
        }
        u
    }

    fn run(&self, asg: &mut Vec<u32>, out: &mut Vec<Flow>) {
        let Some(&e) = self.order.iter().find(|&&e| asg[e] == 0) else {
            out.push(asg.clone());
            return;
        };
        let uni = self.universe(asg, e);
        for m in subsets_of(uni, self.web.edges[e].label) {
            let mut next = asg.clone();
            next[e] = m;
            if self.propagate(&mut next, &self.touch[e]) {
                self.run(&mut next, out);
            }
        }
    }

    fn all(&self) -> Vec<Flow> {
        if self.web.edges.iter().any(|e| e.label > self.n) {
            return Vec::new();
        }
        let ne = self.web.edges.len();
        let asg = vec![0u32; ne];
        let Some(&e0) = self.order.first() else {
            return vec![asg];
        };
        // split on the first edge's subset choice
        let firsts = subsets_of(self.full, self.web.edges[e0].label);
        firsts
            .into_par_iter()
            .flat_map_iter(|m| {
                let mut out = Vec::new();
                let mut a = asg.clone();
                a[e0] = m;
                if self.propagate(&mut a, &self.touch[e0]) {
                    self.run(&mut a, &mut out);
                }
                out
            })
            .collect()
    }
}

/// All admissible flows agreeing with a partial assignment (0 = unknown); the
/// web may have boundary, whose edges are then best fixed in `partial`.
pub fn extend_flow(web: &Web, n: u32, partial: &[u32]) -> Result<Vec<Flow>, WebError> {
    web.validate()?;
    if partial.len() != web.edges.len() {
        return Err(WebError::Malformed("partial flow has wrong length".into()));
    }
    let s = Search::new(web, n);
    let mut asg = partial.to_vec();
    for (e, &m) in partial.iter().enumerate() {
        if m != 0 && (m.count_ones() != web.edges[e].label || m & !s.full != 0) {
            return Ok(Vec::new());
        }
    }
    let all: Vec<usize> = (0..web.vertices.len()).collect();
    let mut out = Vec::new();
    if s.propagate(&mut asg, &all) {
        s.run(&mut asg, &mut out);
    }
    Ok(out)
}

/// All admissible flows of a closed web.
pub fn enumerate_flows(web: &Web, n: u32) -> Result<Vec<Flow>, WebError> {
    if !web.is_closed() {
        return Err(WebError::NotClosed);
    }
    web.validate()?;
    Ok(Search::new(web, n).all())
}

/// Face structure of one connected component of a closed web on the sphere.
struct Faces {
    face: Vec<usize>,
    count: usize,
    outer: usize,
    /// edges of the component
    edges: Vec<usize>,
}

fn components(web: &Web) -> Vec<Vec<usize>> {
    let nv = web.vertices.len();
    let mut comp = vec![usize::MAX; nv];
    let mut out = Vec::new();
    for s in 0..nv {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut stack = vec![s];
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for &d in &web.vertices[v].ccw {
                if let Some(u) = web.vertex_of(d ^ 1) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn faces(web: &Web, verts: &[usize], outer_dart: Option<usize>) -> Result<Faces, WebError> {
    let nd = 2 * web.edges.len();
    let mut pos = vec![(usize::MAX, usize::MAX); nd];
    let mut edges = Vec::new();
    for &v in verts {
        for (i, &d) in web.vertices[v].ccw.iter().enumerate() {
            pos[d] = (v, i);
            if is_tail(d) {
                edges.push(edge_of(d));
            }
        }
    }
    // cw-next of the opposite dart
    let phi = |d: usize| {
        let o = d ^ 1;
        let (v, i) = pos[o];
        let c = &web.vertices[v].ccw;
        c[(i + c.len() - 1) % c.len()]
    };
    let mut face = vec![usize::MAX; nd];
    let mut count = 0;
    for &v in verts {
        for &d in &web.vertices[v].ccw {
            if face[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            while face[x] == usize::MAX {
                face[x] = count;
                x = phi(x);
            }
            count += 1;
        }
    }
    let nv = verts.len() as i64;
    let ne = edges.len() as i64;
    if nv - ne + count as i64 != 2 {
        return Err(WebError::NotPlanar);
    }
    let first = web.vertices[verts[0]].ccw[0];
    let outer = face[outer_dart.unwrap_or(first)];
    Ok(Faces { face, count, outer, edges })
}

impl Faces {
    /// +1 if the cycle runs counterclockwise around the region away from the outer face.
    fn rotation(&self, cycle: &[usize], in_cycle: &[bool]) -> i64 {
        let mut seen = vec![false; self.count];
        let mut stack = Vec::new();
        for &e in cycle {
            let f = self.face[2 * e];
            if !seen[f] {
                seen[f] = true;
                stack.push(f);
            }
        }
        // adjacency across edges not on the cycle
        while let Some(f) = stack.pop() {
            for &e in &self.edges {
                if in_cycle[e] {
                    continue;
                }
                let (a, b) = (self.face[2 * e], self.face[2 * e + 1]);
                for (x, y) in [(a, b), (b, a)] {
                    if x == f && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if seen[self.outer] {
            -1
        } else {
            1
        }
    }
}

fn pi(x: u32, y: u32) -> i64 {
    let mut c = 0;
    let mut xs = x;
    while xs != 0 {
        let b = xs.trailing_zeros();
        xs &= xs - 1;
        c += (y & ((1u32 << b) - 1)).count_ones() as i64;
    }
    c
}

/// State sum of one connected component.
fn component_eval(web: &Web, verts: &[usize], n: u32, outer_dart: Option<usize>) -> Result<LaurentPoly, WebError> {
    let sub = restrict(web, verts);
    let f = faces(&sub, &(0..sub.vertices.len()).collect::<Vec<_>>(), outer_dart)?;
    let flows = Search::new(&sub, n).all();
    let ne = sub.edges.len();
    let mut rot_cache: HashMap<Vec<usize>, i64> = HashMap::new();
    let mut acc: HashMap<i64, i64> = HashMap::new();
    let out_dart: Vec<Vec<usize>> = sub
        .vertices
        .iter()
        .map(|v| v.ccw.iter().copied().filter(|&d| is_tail(d)).collect())
        .collect();
    for flow in &flows {
        let mut w2: i64 = 0;
        for v in 0..sub.vertices.len() {
            let kind = sub.vertices[v].kind;
            if kind == VertexKind::Pass {
                continue;
            }
            let (_, x, y) = big_first(&sub, v);
            let (l, r) = if kind == VertexKind::Merge { (x, y) } else { (y, x) };
            let (lm, rm) = (flow[edge_of(l)], flow[edge_of(r)]);
            w2 += pi(lm, rm) - pi(rm, lm);
        }
        for i in 0..n {
            let bit = 1u32 << i;
            let mut used = vec![false; ne];
            for s in 0..ne {
                if used[s] || flow[s] & bit == 0 {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut e = s;
                loop {
                    used[e] = true;
                    cycle.push(e);
                    let h = sub.edges[e].head.unwrap();
                    e = out_dart[h].iter().map(|&d| edge_of(d)).find(|&g| flow[g] & bit != 0).unwrap();
                    if e == s {
                        break;
                    }
                }
                cycle.sort_unstable();
                let rot = *rot_cache.entry(cycle.clone()).or_insert_with(|| {
                    let mut in_cycle = vec![false; ne];
                    for &e in &cycle {
                        in_cycle[e] = true;
                    }
                    f.rotation(&cycle, &in_cycle)
                });
                w2 += 2 * (n as i64 + 1 - 2 * (i as i64 + 1)) * rot;
            }
        }
        if w2 % 2 != 0 {
            return Err(WebError::Malformed("odd flow weight".into()));
        }
        *acc.entry(w2 / 2).or_insert(0) += 1;
    }
    let mut out = LaurentPoly::zero();
    for (e, c) in acc {
        out.add_term(e, 0, BigInt::from(c));
    }
    Ok(out)
}

/// The sub-web spanned by a set of vertices, renumbered.
fn restrict(web: &Web, verts: &[usize]) -> Web {
    let mut vmap = vec![usize::MAX; web.vertices.len()];
    for (i, &v) in verts.iter().enumerate() {
        vmap[v] = i;
    }
    let mut emap = vec![usize::MAX; web.edges.len()];
    let mut out = Web::default();
    for (e, edge) in web.edges.iter().enumerate() {
        if edge.tail.map(|v| vmap[v] != usize::MAX).unwrap_or(false) {
            emap[e] = out.edges.len();
            let mut ed = edge.clone();
            ed.tail = ed.tail.map(|v| vmap[v]);
            ed.head = ed.head.map(|v| vmap[v]);
            out.edges.push(ed);
        }
    }
    for &v in verts {
        let mut vert = web.vertices[v].clone();
        for d in &mut vert.ccw {
            *d = 2 * emap[edge_of(*d)] + (*d & 1);
        }
        out.vertices.push(vert);
    }
    out
}

/// MOY evaluation of a closed web: product over connected components.
pub fn moy_eval(web: &Web, n: u32) -> Result<LaurentPoly, WebError> {
    moy_eval_with_outer(web, n, None)
}

/// As `moy_eval`, with the outer face of every component chosen as the face left
/// of the given dart (when it belongs to that component).
pub fn moy_eval_with_outer(web: &Web, n: u32, outer_dart: Option<usize>) -> Result<LaurentPoly, WebError> {
    if !web.is_closed() {
        return Err(WebError::NotClosed);
    }
    web.validate()?;
    if let Some(e) = web.edges.iter().find(|e| e.label > n) {
        return Err(WebError::LabelTooLarge { label: e.label, n });
    }
    let mut out = LaurentPoly::one();
    for comp in components(web) {
        let od = outer_dart.and_then(|d| {
            let v = web.vertex_of(d)?;
            let pos = comp.iter().position(|&u| u == v)?;
            // translate into the restricted numbering
            let sub = restrict(web, &comp);
            let i = web.vertices[v].ccw.iter().position(|&x| x == d)?;
            Some(sub.vertices[pos].ccw[i])
        });
        out = &out * &component_eval(web, &comp, n, od)?;
    }
    Ok(out)
}

/// One dart per face of every component, for choosing alternative outer faces.
pub fn face_darts(web: &Web) -> Result<Vec<usize>, WebError> {
    let mut reps = Vec::new();
    for comp in components(web) {
        let f = faces(web, &comp, None)?;
        let mut seen = vec![false; f.count];
        for &v in &comp {
            for &d in &web.vertices[v].ccw {
                if !seen[f.face[d]] {
                    seen[f.face[d]] = true;
                    reps.push(d);
                }
            }
        }
    }
    Ok(reps)
}

/// Graded dimension of Hom(V, W): MOY value of W glued to the dual of V,
/// shifted by half the bending contributions a(N-a) over boundary points.
pub fn hom_dim(v: &Web, w: &Web, n: u32) -> Result<LaurentPoly, WebError> {
    let closed = w.glue_dual(v)?;
    let m = moy_eval(&closed, n)?;
    let shift: i64 = w
        .bottom_points()
        .iter()
        .chain(w.top_points().iter())
        .map(|p| p.label as i64 * (n as i64 - p.label as i64))
        .sum();
    if shift % 2 != 0 {
        return Err(WebError::Malformed("odd boundary shift".into()));
    }
    Ok(&m * &LaurentPoly::q(shift / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::qbinomial;

    fn qb(n: u32, k: u32) -> LaurentPoly {
        qbinomial(n as i64, k as i64).unwrap()
    }

    #[test]
    fn circle_values() {
        for n in 1..=5 {
            for a in 1..=n {
                let c = Web::circle(a);
                assert_eq!(moy_eval(&c, n).unwrap(), qb(n, a), "N={} a={}", n, a);
            }
        }
    }

    #[test]
    fn theta_values() {
        for n in 2..=5 {
            for a in 1..n {
                for b in 1..=(n - a) {
                    let digon = Web::compose(&Web::merge(a, b), &Web::split(a, b)).unwrap();
                    let theta = digon.closure().unwrap();
                    let want = &qb(n, a + b) * &qb(a + b, a);
                    assert_eq!(moy_eval(&theta, n).unwrap(), want);
                    assert_eq!(BigInt::from(enumerate_flows(&theta, n).unwrap().len()), want.at_one());
                }
            }
        }
    }

    #[test]
    fn too_large_label() {
        assert!(enumerate_flows(&Web::circle(3), 2).unwrap().is_empty());
        assert!(moy_eval(&Web::circle(3), 2).is_err());
    }

    #[test]
    fn hom_dim_examples() {
        let up = crate::webmoy::web::BoundaryPoint { label: 1, up: true };
        let id = Web::identity(&[up]);
        let h = hom_dim(&id, &id, 3).unwrap();
        assert_eq!(h.coeff(0, 0), 1.into());
        assert_eq!(h.min_q(), Some(0));
    }
}
