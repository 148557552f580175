//! Colored diagrams in extended PD form: every crossing lists its over and under
//! arcs as (incoming, outgoing) pairs together with its sign.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linkcx::LinkError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: usize,
    pub color: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub id: usize,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: i8,
    pub over: [usize; 2],
    pub under: [usize; 2],
}

/// Boundary of a tangle: arcs meeting the bottom and top edges, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TangleBoundary {
    pub bottom: Vec<usize>,
    pub top: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredDiagram {
    pub components: Vec<Component>,
    pub arcs: Vec<Arc>,
    pub crossings: Vec<Crossing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<TangleBoundary>,
}

/// The four arcs at a crossing seen with both strands pointing up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub bl: usize,
    pub br: usize,
    pub tl: usize,
    pub tr: usize,
}

impl Crossing {
    pub fn frame(&self) -> Frame {
        let [oi, oo] = self.over;
        let [ui, uo] = self.under;
        if self.sign > 0 {
            Frame { bl: oi, br: ui, tl: uo, tr: oo }
        } else {
            Frame { bl: ui, br: oi, tl: oo, tr: uo }
        }
    }
}

impl ColoredDiagram {
    pub fn from_json(s: &str) -> Result<Self, LinkError> {
        let d: ColoredDiagram = serde_json::from_str(s).map_err(|e| LinkError::Parse(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serializes")
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.as_ref().is_none_or(|b| b.bottom.is_empty() && b.top.is_empty())
    }

    fn arc_index(&self) -> BTreeMap<usize, usize> {
        self.arcs.iter().enumerate().map(|(i, a)| (a.id, i)).collect()
    }

    pub fn color_of_arc(&self, arc: usize) -> Result<u32, LinkError> {
        let a = self.arcs.iter().find(|a| a.id == arc).ok_or(LinkError::UnknownArc(arc))?;
        self.components
            .iter()
            .find(|c| c.id == a.component)
            .map(|c| c.color)
            .ok_or(LinkError::UnknownComponent(a.component))
    }

    pub fn component_of_arc(&self, arc: usize) -> Result<usize, LinkError> {
        self.arcs.iter().find(|a| a.id == arc).map(|a| a.component).ok_or(LinkError::UnknownArc(arc))
    }

    /// Labels of (over, under) strands at crossing c.
    pub fn labels(&self, c: usize) -> Result<(u32, u32), LinkError> {
        let x = &self.crossings[c];
        Ok((self.color_of_arc(x.over[0])?, self.color_of_arc(x.under[0])?))
    }

    pub fn validate(&self) -> Result<(), LinkError> {
        let idx = self.arc_index();
        if idx.len() != self.arcs.len() {
            return Err(LinkError::Invalid("repeated arc id".into()));
        }
        for c in &self.components {
            if c.color == 0 {
                return Err(LinkError::Invalid(format!("component {} has color 0", c.id)));
            }
        }
        for a in &self.arcs {
            if !self.components.iter().any(|c| c.id == a.component) {
                return Err(LinkError::UnknownComponent(a.component));
            }
        }
        let mut ins = vec![0u32; self.arcs.len()];
        let mut outs = vec![0u32; self.arcs.len()];
        for (ci, x) in self.crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                return Err(LinkError::Invalid(format!("crossing {} has sign {}", ci, x.sign)));
            }
            for pair in [x.over, x.under] {
                let i = *idx.get(&pair[0]).ok_or(LinkError::UnknownArc(pair[0]))?;
                let o = *idx.get(&pair[1]).ok_or(LinkError::UnknownArc(pair[1]))?;
                if self.arcs[i].component != self.arcs[o].component {
                    return Err(LinkError::Invalid(format!("crossing {} strand changes component", ci)));
                }
                ins[i] += 1;
                outs[o] += 1;
            }
        }
        let (bottom, top) = match &self.boundary {
            Some(b) => (b.bottom.clone(), b.top.clone()),
            None => (vec![], vec![]),
        };
        for &a in bottom.iter().chain(top.iter()) {
            let i = *idx.get(&a).ok_or(LinkError::UnknownArc(a))?;
            // an arc on the boundary is missing its crossing at that end
            if ins[i] + outs[i] >= 2 {
                return Err(LinkError::Invalid(format!("boundary arc {} has no free end", a)));
            }
        }
        for (i, a) in self.arcs.iter().enumerate() {
            if ins[i] > 1 || outs[i] > 1 {
                return Err(LinkError::Invalid(format!("arc {} used twice", a.id)));
            }
            let ends = bottom.iter().chain(top.iter()).filter(|&&b| b == a.id).count() as u32;
            if ins[i] + outs[i] + ends != 2 && !(ins[i] + outs[i] == 0 && ends == 0) {
                return Err(LinkError::Invalid(format!("arc {} has a dangling end", a.id)));
            }
        }
        Ok(())
    }

    /// Swap over and under everywhere; the mirror image.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for x in &mut d.crossings {
            std::mem::swap(&mut x.over, &mut x.under);
            x.sign = -x.sign;
        }
        d
    }

    /// Permute the crossing order: new position i holds old crossing perm[i].
    pub fn reorder(&self, perm: &[usize]) -> Result<Self, LinkError> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.crossings.len()).collect::<Vec<_>>() {
            return Err(LinkError::Invalid("not a permutation of the crossings".into()));
        }
        let mut d = self.clone();
        d.crossings = perm.iter().map(|&i| self.crossings[i].clone()).collect();
        Ok(d)
    }

    /// Linking numbers between distinct components (sum of signs of mixed crossings / 2).
    pub fn linking_numbers(&self) -> Result<BTreeMap<(usize, usize), i64>, LinkError> {
        let mut out = BTreeMap::new();
        for x in &self.crossings {
            let a = self.component_of_arc(x.over[0])?;
            let b = self.component_of_arc(x.under[0])?;
            if a != b {
                *out.entry((a.min(b), a.max(b))).or_insert(0) += x.sign as i64;
            }
        }
        for v in out.values_mut() {
            *v /= 2;
        }
        Ok(out)
    }

    /// Closure of a braid word on n strands; generator +i is sigma_i, -i its inverse
    /// (1-based). `colors[j]` colors the component through starting position j.
    pub fn braid_closure(n: usize, word: &[i32], colors: &[u32]) -> Result<Self, LinkError> {
        if colors.len() != n {
            return Err(LinkError::Invalid("one color per strand position".into()));
        }
        let mut pos: Vec<usize> = (0..n).collect();
        let mut next = n;
        let mut raw = Vec::new();
        // strand permutation to find components
        let mut perm: Vec<usize> = (0..n).collect();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if i == 0 || i >= n {
                return Err(LinkError::Invalid(format!("generator {} out of range", g)));
            }
            let (l, r) = (pos[i - 1], pos[i]);
            let (nl, nr) = (next, next + 1);
            next += 2;
            let x = if g > 0 {
                Crossing { sign: 1, over: [l, nr], under: [r, nl] }
            } else {
                Crossing { sign: -1, over: [r, nl], under: [l, nr] }
            };
            raw.push(x);
            pos[i - 1] = nl;
            pos[i] = nr;
            perm.swap(i - 1, i);
        }
        // perm[p] = starting position of the strand now at p; close p back to p
        let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
        for (p, &a) in pos.iter().enumerate() {
            if a != p {
                rename.insert(a, p);
            }
        }
        let ren = |a: usize| *rename.get(&a).unwrap_or(&a);
        let crossings: Vec<Crossing> = raw
            .into_iter()
            .map(|x| Crossing { sign: x.sign, over: [ren(x.over[0]), ren(x.over[1])], under: [ren(x.under[0]), ren(x.under[1])] })
            .collect();
        // components: cycles of the closing permutation start -> end position
        let mut end_of_start = vec![0; n];
        for (p, &s) in perm.iter().enumerate() {
            end_of_start[s] = p;
        }
        let mut comp_of_start = vec![usize::MAX; n];
        let mut components = Vec::new();
        for s in 0..n {
            if comp_of_start[s] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut j = s;
            while comp_of_start[j] == usize::MAX {
                comp_of_start[j] = id;
                j = end_of_start[j];
            }
            components.push(Component { id, color: colors[s] });
        }
        for s in 0..n {
            if colors[s] != components[comp_of_start[s]].color {
                return Err(LinkError::Invalid("colors differ along a component".into()));
            }
        }
        // walk each strand to attach arcs to components
        let mut arcs: BTreeMap<usize, usize> = BTreeMap::new();
        let mut start_at: Vec<usize> = (0..n).collect();
        for p in 0..n {
            arcs.insert(p, comp_of_start[p]);
        }
        let mut nid = n;
        for &g in word {
            let i = g.unsigned_abs() as usize;
            let (sl, sr) = (start_at[i - 1], start_at[i]);
            let (nl, nr) = (ren(nid), ren(nid + 1));
            nid += 2;
            // the strand from the left moves right and vice versa
            arcs.insert(nr, comp_of_start[sl]);
            arcs.insert(nl, comp_of_start[sr]);
            start_at.swap(i - 1, i);
        }
        let d = ColoredDiagram {
            components,
            arcs: arcs.into_iter().map(|(id, component)| Arc { id, component }).collect(),
            crossings,
            boundary: None,
        };
        d.validate()?;
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_closures() {
        let unknot = ColoredDiagram::braid_closure(2, &[1], &[1, 1]).unwrap();
        assert_eq!(unknot.components.len(), 1);
        let hopf = ColoredDiagram::braid_closure(2, &[1, 1], &[1, 2]).unwrap();
        assert_eq!(hopf.components.len(), 2);
        assert_eq!(hopf.linking_numbers().unwrap().values().copied().collect::<Vec<_>>(), vec![1]);
        let trefoil = ColoredDiagram::braid_closure(2, &[1, 1, 1], &[1, 1]).unwrap();
        assert_eq!(trefoil.components.len(), 1);
        assert!(ColoredDiagram::braid_closure(2, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let d = ColoredDiagram::braid_closure(3, &[1, -2, 1], &[1, 1, 1]).unwrap();
        assert_eq!(ColoredDiagram::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn mirror_flips_signs() {
        let d = ColoredDiagram::braid_closure(2, &[1, 1], &[1, 1]).unwrap();
        let m = d.mirror();
        assert!(m.crossings.iter().all(|x| x.sign == -1));
        assert_eq!(m.mirror(), d);
    }
}
