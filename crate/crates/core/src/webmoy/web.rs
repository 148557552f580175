//! Webs as oriented planar maps with boundary.
//!
//! Every edge has two ends ("darts"): dart 2e is the tail of edge e, dart 2e+1 its head.
//! A dart is attached either to a vertex (listed in that vertex's counterclockwise
//! order) or to a boundary point. Boundary points are split into a bottom row and a
//! top row, each read left to right, so the counterclockwise boundary order is
//! bottom followed by the reversed top row.

use serde::{Deserialize, Serialize};

use crate::webmoy::WebError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Merge,
    Split,
    /// Bivalent point on a strand, used to anchor closed loops.
    Pass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    /// Darts in counterclockwise order.
    pub ccw: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub label: u32,
    pub tail: Option<usize>,
    pub head: Option<usize>,
    /// Optional subset coloring (indices into Sigma), used by simple resolutions.
    pub color: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Web {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub bottom: Vec<usize>,
    pub top: Vec<usize>,
}

/// Label and orientation of a boundary point; `up` means the strand crosses the
/// point going upwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub label: u32,
    pub up: bool,
}

pub fn edge_of(d: usize) -> usize {
    d / 2
}
pub fn is_tail(d: usize) -> bool {
    d.is_multiple_of(2)
}

impl Web {
    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    pub fn vertex_of(&self, d: usize) -> Option<usize> {
        let e = &self.edges[edge_of(d)];
        if is_tail(d) {
            e.tail
        } else {
            e.head
        }
    }

    fn point(&self, d: usize, on_top: bool) -> BoundaryPoint {
        let label = self.edges[edge_of(d)].label;
        // a tail on the bottom row or a head on the top row points upwards
        let up = if on_top { !is_tail(d) } else { is_tail(d) };
        BoundaryPoint { label, up }
    }
    pub fn bottom_points(&self) -> Vec<BoundaryPoint> {
        self.bottom.iter().map(|&d| self.point(d, false)).collect()
    }
    pub fn top_points(&self) -> Vec<BoundaryPoint> {
        self.top.iter().map(|&d| self.point(d, true)).collect()
    }

    fn add_vertex(&mut self, kind: VertexKind) -> usize {
        self.vertices.push(Vertex { kind, ccw: Vec::new() });
        self.vertices.len() - 1
    }
    fn add_edge(&mut self, label: u32, tail: Option<usize>, head: Option<usize>) -> usize {
        self.edges.push(Edge { label, tail, head, color: None });
        self.edges.len() - 1
    }

    /// Flow condition, rotation consistency and kinds.
    pub fn validate(&self) -> Result<(), WebError> {
        let mut seen = vec![0u8; 2 * self.edges.len()];
        for (v, vert) in self.vertices.iter().enumerate() {
            let mut ins = Vec::new();
            let mut outs = Vec::new();
            for &d in &vert.ccw {
                if d >= seen.len() || self.vertex_of(d) != Some(v) {
                    return Err(WebError::Malformed(format!("dart {} not at vertex {}", d, v)));
                }
                seen[d] += 1;
                let lab = self.edges[edge_of(d)].label;
                if is_tail(d) {
                    outs.push(lab);
                } else {
                    ins.push(lab);
                }
            }
            let ok = match vert.kind {
                VertexKind::Merge => ins.len() == 2 && outs.len() == 1 && ins[0] + ins[1] == outs[0],
                VertexKind::Split => ins.len() == 1 && outs.len() == 2 && outs[0] + outs[1] == ins[0],
                VertexKind::Pass => ins.len() == 1 && outs.len() == 1 && ins[0] == outs[0],
            };
            if !ok {
                return Err(WebError::Flow(v));
            }
        }
        for &d in self.bottom.iter().chain(self.top.iter()) {
            if d >= seen.len() || self.vertex_of(d).is_some() {
                return Err(WebError::Malformed(format!("boundary dart {}", d)));
            }
            seen[d] += 1;
        }
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.label == 0 {
                return Err(WebError::Malformed(format!("edge {} has label 0", e)));
            }
            for d in [2 * e, 2 * e + 1] {
                if seen[d] != 1 {
                    return Err(WebError::Malformed(format!("dart {} attached {} times", d, seen[d])));
                }
            }
        }
        Ok(())
    }

    // ----- elementary webs -----

    /// Identity strands with the given boundary data.
    pub fn identity(points: &[BoundaryPoint]) -> Web {
        let mut w = Web::default();
        for p in points {
            let e = w.add_edge(p.label, None, None);
            if p.up {
                w.bottom.push(2 * e);
                w.top.push(2 * e + 1);
            } else {
                w.bottom.push(2 * e + 1);
                w.top.push(2 * e);
            }
        }
        w
    }

    /// Upward merge of a (left) and b (right) into a+b.
    pub fn merge(a: u32, b: u32) -> Web {
        let mut w = Web::default();
        let v = w.add_vertex(VertexKind::Merge);
        let ea = w.add_edge(a, None, Some(v));
        let eb = w.add_edge(b, None, Some(v));
        let ec = w.add_edge(a + b, Some(v), None);
        // big edge north, a from south-west, b from south-east
        w.vertices[v].ccw = vec![2 * ec, 2 * ea + 1, 2 * eb + 1];
        w.bottom = vec![2 * ea, 2 * eb];
        w.top = vec![2 * ec + 1];
        w
    }

    /// Upward split of a+b into a (left) and b (right).
    pub fn split(a: u32, b: u32) -> Web {
        let mut w = Web::default();
        let v = w.add_vertex(VertexKind::Split);
        let ec = w.add_edge(a + b, None, Some(v));
        let ea = w.add_edge(a, Some(v), None);
        let eb = w.add_edge(b, Some(v), None);
        // big edge south, b to north-east, a to north-west
        w.vertices[v].ccw = vec![2 * ec + 1, 2 * eb, 2 * ea];
        w.bottom = vec![2 * ec];
        w.top = vec![2 * ea + 1, 2 * eb + 1];
        w
    }

    /// Cap joining two bottom points; `rightward` orients it from left to right.
    pub fn cap(label: u32, rightward: bool) -> Web {
        let mut w = Web::default();
        let e = w.add_edge(label, None, None);
        w.bottom = if rightward { vec![2 * e, 2 * e + 1] } else { vec![2 * e + 1, 2 * e] };
        w
    }

    /// Cup joining two top points; `rightward` orients it from left to right.
    pub fn cup(label: u32, rightward: bool) -> Web {
        let mut w = Web::default();
        let e = w.add_edge(label, None, None);
        w.top = if rightward { vec![2 * e, 2 * e + 1] } else { vec![2 * e + 1, 2 * e] };
        w
    }

    /// Closed a-labelled circle.
    pub fn circle(label: u32) -> Web {
        let mut w = Web::default();
        let v = w.add_vertex(VertexKind::Pass);
        let e = w.add_edge(label, Some(v), Some(v));
        w.vertices[v].ccw = vec![2 * e, 2 * e + 1];
        w
    }

    /// Ladder web from bottom labels (l, r) to top labels (r, l), rung index k.
    /// The larger side first sends l-r+k (or r-l+k) across, then k comes back.
    pub fn ladder(l: u32, r: u32, k: u32) -> Result<Web, WebError> {
        let m = l.min(r);
        if k > m {
            return Err(WebError::Malformed(format!("rung index {} exceeds {}", k, m)));
        }
        let (rung1, rung2, mid_l, mid_r, first_rightward) = if l >= r {
            (l - r + k, k, r - k, l + k, true)
        } else {
            (r - l + k, k, r + k, l - k, false)
        };
        let mut w = Web::default();
        let ll = w.add_vertex(VertexKind::Pass);
        let lr = w.add_vertex(VertexKind::Pass);
        let ul = w.add_vertex(VertexKind::Pass);
        let ur = w.add_vertex(VertexKind::Pass);
        let bl = w.add_edge(l, None, Some(ll));
        let br = w.add_edge(r, None, Some(lr));
        let tl = w.add_edge(r, Some(ul), None);
        let tr = w.add_edge(l, Some(ur), None);
        let mut ccw_ll = vec![2 * bl + 1];
        let mut ccw_lr = vec![2 * br + 1];
        let mut ccw_ul = vec![];
        let mut ccw_ur = vec![];
        let r1 = if rung1 > 0 {
            Some(if first_rightward {
                w.add_edge(rung1, Some(ll), Some(lr))
            } else {
                w.add_edge(rung1, Some(lr), Some(ll))
            })
        } else {
            None
        };
        let r2 = if rung2 > 0 {
            Some(if first_rightward {
                w.add_edge(rung2, Some(ur), Some(ul))
            } else {
                w.add_edge(rung2, Some(ul), Some(ur))
            })
        } else {
            None
        };
        let ml = (mid_l > 0).then(|| w.add_edge(mid_l, Some(ll), Some(ul)));
        let mr = (mid_r > 0).then(|| w.add_edge(mid_r, Some(lr), Some(ur)));
        let dart_at = |w: &Web, e: usize, v: usize| {
            if w.edges[e].tail == Some(v) {
                2 * e
            } else {
                2 * e + 1
            }
        };
        // LL: south, east, north
        if let Some(e) = r1 {
            ccw_ll.push(dart_at(&w, e, ll));
        }
        if let Some(e) = ml {
            ccw_ll.push(2 * e);
        }
        // LR: south, north, west
        if let Some(e) = mr {
            ccw_lr.push(2 * e);
        }
        if let Some(e) = r1 {
            ccw_lr.push(dart_at(&w, e, lr));
        }
        // UL: south, east, north
        if let Some(e) = ml {
            ccw_ul.push(2 * e + 1);
        }
        if let Some(e) = r2 {
            ccw_ul.push(dart_at(&w, e, ul));
        }
        ccw_ul.push(2 * tl);
        // UR: south, north, west
        if let Some(e) = mr {
            ccw_ur.push(2 * e + 1);
        }
        ccw_ur.push(2 * tr);
        if let Some(e) = r2 {
            ccw_ur.push(dart_at(&w, e, ur));
        }
        w.vertices[ll].ccw = ccw_ll;
        w.vertices[lr].ccw = ccw_lr;
        w.vertices[ul].ccw = ccw_ul;
        w.vertices[ur].ccw = ccw_ur;
        w.bottom = vec![2 * bl, 2 * br];
        w.top = vec![2 * tl + 1, 2 * tr + 1];
        w.assign_kinds();
        Ok(w.contract_passes())
    }

    /// Set vertex kinds from incident orientations.
    pub fn assign_kinds(&mut self) {
        for v in 0..self.vertices.len() {
            let ins = self.vertices[v].ccw.iter().filter(|&&d| !is_tail(d)).count();
            let outs = self.vertices[v].ccw.len() - ins;
            self.vertices[v].kind = match (ins, outs) {
                (2, 1) => VertexKind::Merge,
                (1, 2) => VertexKind::Split,
                _ => VertexKind::Pass,
            };
        }
    }

    /// Remove bivalent vertices, fusing their edges; a loop keeps one anchor.
    pub fn contract_passes(&self) -> Web {
        let mut w = self.clone();
        loop {
            let pos = w.vertices.iter().position(|vert| {
                vert.kind == VertexKind::Pass && {
                    let e_in = edge_of(vert.ccw.iter().copied().find(|&d| !is_tail(d)).unwrap());
                    let e_out = edge_of(vert.ccw.iter().copied().find(|&d| is_tail(d)).unwrap());
                    e_in != e_out && w.edges[e_in].color == w.edges[e_out].color
                }
            });
            let Some(v) = pos else { break };
            let vert = w.vertices[v].clone();
            let e_in = edge_of(vert.ccw.iter().copied().find(|&d| !is_tail(d)).unwrap());
            let e_out = edge_of(vert.ccw.iter().copied().find(|&d| is_tail(d)).unwrap());
            // e_in absorbs e_out: its head becomes e_out's head
            let new_head = w.edges[e_out].head;
            w.edges[e_in].head = new_head;
            w.replace_dart(2 * e_out + 1, 2 * e_in + 1);
            w.remove_edge(e_out);
            w.remove_vertex(v);
        }
        w
    }

    fn replace_dart(&mut self, old: usize, new: usize) {
        for vert in &mut self.vertices {
            for d in &mut vert.ccw {
                if *d == old {
                    *d = new;
                }
            }
        }
        for d in self.bottom.iter_mut().chain(self.top.iter_mut()) {
            if *d == old {
                *d = new;
            }
        }
    }

    /// Remove an edge whose darts are no longer referenced; renumbers the last edge.
    fn remove_edge(&mut self, e: usize) {
        let last = self.edges.len() - 1;
        if e != last {
            self.replace_dart(2 * last, 2 * e);
            self.replace_dart(2 * last + 1, 2 * e + 1);
            self.edges.swap(e, last);
        }
        self.edges.pop();
    }

    fn remove_vertex(&mut self, v: usize) {
        let last = self.vertices.len() - 1;
        if v != last {
            self.vertices.swap(v, last);
            for e in &mut self.edges {
                if e.tail == Some(last) {
                    e.tail = Some(v);
                }
                if e.head == Some(last) {
                    e.head = Some(v);
                }
            }
        }
        self.vertices.pop();
    }

    /// Reflect in a horizontal line and reverse all orientations (the dual web).
    pub fn dual(&self) -> Web {
        let mut w = self.clone();
        for vert in &mut w.vertices {
            vert.ccw.reverse();
            for d in &mut vert.ccw {
                *d ^= 1;
            }
        }
        for e in &mut w.edges {
            std::mem::swap(&mut e.tail, &mut e.head);
        }
        w.bottom = self.top.iter().map(|d| d ^ 1).collect();
        w.top = self.bottom.iter().map(|d| d ^ 1).collect();
        w.assign_kinds();
        w
    }
}

/// Disjoint union of webs with darts renumbered; returns the dart offsets.
pub(crate) fn disjoint(parts: &[&Web]) -> (Web, Vec<usize>) {
    let mut out = Web::default();
    let mut offsets = Vec::new();
    for p in parts {
        let voff = out.vertices.len();
        let eoff = out.edges.len();
        offsets.push(2 * eoff);
        for v in &p.vertices {
            out.vertices.push(Vertex { kind: v.kind, ccw: v.ccw.iter().map(|d| d + 2 * eoff).collect() });
        }
        for e in &p.edges {
            out.edges.push(Edge {
                label: e.label,
                tail: e.tail.map(|v| v + voff),
                head: e.head.map(|v| v + voff),
                color: e.color.clone(),
            });
        }
    }
    (out, offsets)
}

/// Join pairs of boundary darts (already in the numbering of `w`), fusing the
/// edge chains they create. Chains closing up without vertices get a pass vertex.
pub(crate) fn join(mut w: Web, pairs: &[(usize, usize)], bottom: Vec<usize>, top: Vec<usize>) -> Result<Web, WebError> {
    let ne = w.edges.len();
    // partner[d] = dart glued to d
    let mut partner = vec![usize::MAX; 2 * ne];
    for &(x, y) in pairs {
        let (ex, ey) = (&w.edges[edge_of(x)], &w.edges[edge_of(y)]);
        if ex.label != ey.label || is_tail(x) == is_tail(y) {
            return Err(WebError::BoundaryMismatch(format!(
                "label {} vs {} or orientation clash",
                ex.label, ey.label
            )));
        }
        partner[x] = y;
        partner[y] = x;
    }
    // walk chains: start at edges whose tail is not glued
    let mut new_id = vec![usize::MAX; ne];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let visit = |start: usize, new_id: &mut Vec<usize>, chains: &mut Vec<Vec<usize>>| {
        let mut chain = vec![start];
        new_id[start] = chains.len();
        let mut e = start;
        loop {
            let h = 2 * e + 1;
            if partner[h] == usize::MAX {
                break;
            }
            let nxt = edge_of(partner[h]);
            if new_id[nxt] != usize::MAX {
                break;
            }
            new_id[nxt] = chains.len();
            chain.push(nxt);
            e = nxt;
        }
        chains.push(chain);
    };
    for e in 0..ne {
        if new_id[e] == usize::MAX && partner[2 * e] == usize::MAX {
            visit(e, &mut new_id, &mut chains);
        }
    }
    for e in 0..ne {
        if new_id[e] == usize::MAX {
            visit(e, &mut new_id, &mut chains);
        }
    }
    let mut out = Web { vertices: w.vertices.clone(), edges: Vec::new(), bottom: Vec::new(), top: Vec::new() };
    let mut dart_map = vec![usize::MAX; 2 * ne];
    for (c, chain) in chains.iter().enumerate() {
        let first = chain[0];
        let last = *chain.last().unwrap();
        let closed = partner[2 * first] != usize::MAX;
        let mut edge = Edge {
            label: w.edges[first].label,
            tail: w.edges[first].tail,
            head: w.edges[last].head,
            color: chain.iter().find_map(|&e| w.edges[e].color.clone()),
        };
        if closed {
            let v = out.vertices.len();
            out.vertices.push(Vertex { kind: VertexKind::Pass, ccw: vec![2 * c, 2 * c + 1] });
            edge.tail = Some(v);
            edge.head = Some(v);
        }
        out.edges.push(edge);
        dart_map[2 * first] = 2 * c;
        dart_map[2 * last + 1] = 2 * c + 1;
    }
    for v in 0..w.vertices.len() {
        for d in &mut out.vertices[v].ccw {
            *d = dart_map[*d];
        }
    }
    out.bottom = bottom.into_iter().map(|d| dart_map[d]).collect();
    out.top = top.into_iter().map(|d| dart_map[d]).collect();
    w.edges.clear();
    if out.bottom.iter().chain(out.top.iter()).any(|&d| d == usize::MAX) {
        return Err(WebError::Malformed("boundary dart lost in gluing".into()));
    }
    Ok(out)
}

impl Web {
    /// `upper` stacked on top of `lower`.
    pub fn compose(upper: &Web, lower: &Web) -> Result<Web, WebError> {
        if lower.top_points() != upper.bottom_points() {
            return Err(WebError::BoundaryMismatch(format!(
                "{:?} vs {:?}",
                lower.top_points(),
                upper.bottom_points()
            )));
        }
        let (w, off) = disjoint(&[lower, upper]);
        let pairs: Vec<(usize, usize)> = lower
            .top
            .iter()
            .zip(upper.bottom.iter())
            .map(|(&x, &y)| (x + off[0], y + off[1]))
            .collect();
        let bottom = lower.bottom.iter().map(|d| d + off[0]).collect();
        let top = upper.top.iter().map(|d| d + off[1]).collect();
        join(w, &pairs, bottom, top)
    }

    /// Side-by-side juxtaposition.
    pub fn tensor(left: &Web, right: &Web) -> Web {
        let (mut w, off) = disjoint(&[left, right]);
        w.bottom = left.bottom.iter().map(|d| d + off[0]).chain(right.bottom.iter().map(|d| d + off[1])).collect();
        w.top = left.top.iter().map(|d| d + off[0]).chain(right.top.iter().map(|d| d + off[1])).collect();
        w
    }

    /// Closed web obtained by gluing `self` to the dual of `other` along the
    /// whole boundary circle.
    pub fn glue_dual(&self, other: &Web) -> Result<Web, WebError> {
        if self.bottom_points() != other.bottom_points() || self.top_points() != other.top_points() {
            return Err(WebError::BoundaryMismatch("boundary data differ".into()));
        }
        let bar = other.dual();
        let (w, off) = disjoint(&[self, &bar]);
        // bar.top corresponds to other.bottom, bar.bottom to other.top
        let mut pairs = Vec::new();
        for (x, y) in self.bottom.iter().zip(bar.top.iter()) {
            pairs.push((x + off[0], y + off[1]));
        }
        for (x, y) in self.top.iter().zip(bar.bottom.iter()) {
            pairs.push((x + off[0], y + off[1]));
        }
        join(w, &pairs, vec![], vec![])
    }

    /// Planar closure joining top point i to bottom point i around the right side.
    pub fn closure(&self) -> Result<Web, WebError> {
        if self.top_points() != self.bottom_points() {
            return Err(WebError::BoundaryMismatch("closure needs equal top and bottom".into()));
        }
        let pairs: Vec<(usize, usize)> = self.top.iter().zip(self.bottom.iter()).map(|(&x, &y)| (x, y)).collect();
        join(self.clone(), &pairs, vec![], vec![])
    }

    /// Insert a digon (split into a and label-a, then merge) on edge e.
    pub fn insert_digon(&self, e: usize, a: u32) -> Result<Web, WebError> {
        let lab = self.edges[e].label;
        if a == 0 || a >= lab {
            return Err(WebError::Malformed(format!("digon part {} of {}", a, lab)));
        }
        let mut w = self.clone();
        let s = w.add_vertex(VertexKind::Split);
        let m = w.add_vertex(VertexKind::Merge);
        // e now ends at the split; a fresh edge leaves the merge towards e's old head
        let old_head = w.edges[e].head;
        let f = w.add_edge(lab, Some(m), old_head);
        w.replace_dart(2 * e + 1, 2 * f + 1);
        w.edges[e].head = Some(s);
        let left = w.add_edge(a, Some(s), Some(m));
        let right = w.add_edge(lab - a, Some(s), Some(m));
        w.vertices[s].ccw = vec![2 * e + 1, 2 * right, 2 * left];
        w.vertices[m].ccw = vec![2 * f, 2 * left + 1, 2 * right + 1];
        Ok(w)
    }
}
