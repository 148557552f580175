//! Generic deformation at pairwise distinct Sigma: idempotent colorings, the
//! decomposition of crossing complexes into single colored webs, deformed
//! Poincare polynomials and simple resolutions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::linkcx::cube::{crossing_x, q_shift, resolution_tagged};
use crate::linkcx::{ColoredDiagram, LinkError};
use crate::symcore::poly::{parse_rational, Poly, Var};
use crate::symcore::LaurentPoly;
use crate::webmoy::{extend_flow, Web};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum DeformError {
    #[error("Sigma entries must be pairwise distinct ({0} repeats)")]
    Repeated(String),
    #[error("cannot parse Sigma entry {0:?}")]
    Parse(String),
    #[error("color {color} exceeds N = {n}")]
    ColorTooLarge { color: u32, n: usize },
    #[error("deformed homology needs numeric Sigma")]
    Symbolic,
    #[error("no admissible coloring of the resolution")]
    NoColoring,
    #[error(transparent)]
    Link(#[from] LinkError),
}

/// Ordered Sigma = (lambda_1, ..., lambda_N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaSpec {
    values: Vec<Poly>,
}

impl SigmaSpec {
    pub fn new(values: Vec<Poly>) -> Result<Self, DeformError> {
        for (i, j) in (0..values.len()).tuple_combinations() {
            if values[i] == values[j] {
                return Err(DeformError::Repeated(values[i].to_string()));
            }
        }
        Ok(SigmaSpec { values })
    }
    /// Sigma = {1, 2, ..., N}.
    pub fn standard(n: usize) -> Self {
        SigmaSpec { values: (1..=n as i64).map(Poly::int).collect() }
    }
    /// Indeterminates lambda_1, ..., lambda_N.
    pub fn symbolic(n: usize) -> Self {
        SigmaSpec { values: (1..=n).map(|i| Poly::var(Var::lam(i))).collect() }
    }
    pub fn n(&self) -> usize {
        self.values.len()
    }
    pub fn values(&self) -> &[Poly] {
        &self.values
    }
    pub fn is_numeric(&self) -> bool {
        self.values.iter().all(|p| p.as_constant().is_some())
    }
}

impl FromStr for SigmaSpec {
    type Err = DeformError;
    fn from_str(s: &str) -> Result<Self, DeformError> {
        let values = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                parse_rational(t)
                    .map(Poly::constant)
                    .or_else(|| Var::parse(t).map(Poly::var))
                    .ok_or_else(|| DeformError::Parse(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SigmaSpec::new(values)
    }
}

impl fmt::Display for SigmaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().map(|p| p.to_string()).join(","))
    }
}

/// Homological shift of a crossing whose over strand is colored `a` and under
/// strand `b` (index sets into Sigma): sign * min(|a \ b|, |b \ a|).
pub fn crossing_shift(sign: i8, a: &[usize], b: &[usize]) -> i64 {
    let ab = a.iter().filter(|x| !b.contains(x)).count();
    let ba = b.iter().filter(|x| !a.contains(x)).count();
    sign as i64 * ab.min(ba) as i64
}

fn mask(s: &[usize]) -> u32 {
    s.iter().fold(0, |m, &i| m | 1 << i)
}
fn unmask(m: u32) -> Vec<usize> {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

/// A subset of Sigma for every component, in component order.
pub type ColoringState = Vec<Vec<usize>>;

/// Surviving summand of one coloring: homological degree, ambient q-shift
/// (a filtration level, not a grading) and the rung index at every crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub coloring: ColoringState,
    pub t_degree: i64,
    pub q_level: i64,
    pub state: Vec<u32>,
}

fn check_colors(d: &ColoredDiagram, n: usize) -> Result<(), DeformError> {
    if let Some(c) = d.components.iter().find(|c| c.color as usize > n) {
        return Err(DeformError::ColorTooLarge { color: c.color, n });
    }
    Ok(())
}

/// Every component colored by an |color|-subset of Sigma.
pub fn colorings(d: &ColoredDiagram, n: usize) -> Result<Vec<ColoringState>, DeformError> {
    check_colors(d, n)?;
    let per: Vec<Vec<Vec<usize>>> =
        d.components.iter().map(|c| (0..n).combinations(c.color as usize).collect()).collect();
    Ok(per.into_iter().multi_cartesian_product().collect::<Vec<_>>()).map(|v| {
        if d.components.is_empty() {
            vec![vec![]]
        } else {
            v
        }
    })
}

fn arc_subsets(d: &ColoredDiagram, coloring: &ColoringState) -> Result<BTreeMap<usize, Vec<usize>>, DeformError> {
    let pos: BTreeMap<usize, usize> = d.components.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
    d.arcs
        .iter()
        .map(|a| {
            let i = *pos.get(&a.component).ok_or(LinkError::UnknownComponent(a.component))?;
            Ok((a.id, coloring[i].clone()))
        })
        .collect()
}

/// The summand of a coloring after the crossing complexes split.
pub fn summand(d: &ColoredDiagram, coloring: &ColoringState, n: usize) -> Result<Summand, DeformError> {
    let arcs = arc_subsets(d, coloring)?;
    let mut t = 0;
    let mut q = 0;
    let mut state = Vec::new();
    for (c, x) in d.crossings.iter().enumerate() {
        let a = &arcs[&x.over[0]];
        let b = &arcs[&x.under[0]];
        let k = crossing_shift(1, a, b) as u32;
        let (o, u) = d.labels(c)?;
        t += crossing_shift(x.sign, a, b);
        q += q_shift(x.sign, k, crossing_x(o, u, n as u32));
        state.push(k);
    }
    Ok(Summand { coloring: coloring.clone(), t_degree: t, q_level: q, state })
}

/// Poincare polynomial in t of the deformed invariant of a link.
pub fn deformed_homology(d: &ColoredDiagram, sigma: &SigmaSpec) -> Result<LaurentPoly, DeformError> {
    if !sigma.is_numeric() {
        return Err(DeformError::Symbolic);
    }
    if !d.is_closed() {
        return Err(LinkError::OpenBoundary.into());
    }
    d.validate()?;
    let n = sigma.n();
    let mut out = LaurentPoly::zero();
    for col in colorings(d, n)? {
        let s = summand(d, &col, n)?;
        out = &out + &LaurentPoly::t(s.t_degree);
    }
    Ok(out)
}

/// All surviving summands, in coloring order.
pub fn deformed_summands(d: &ColoredDiagram, sigma: &SigmaSpec) -> Result<Vec<Summand>, DeformError> {
    let n = sigma.n();
    colorings(d, n)?.iter().map(|c| summand(d, c, n)).collect()
}

/// The colored web of a summand: its resolution with every edge carrying the
/// subset forced by admissibility.
pub fn colored_resolution(d: &ColoredDiagram, coloring: &ColoringState, n: usize) -> Result<Web, DeformError> {
    let s = summand(d, coloring, n)?;
    let arcs = arc_subsets(d, coloring)?;
    let web = resolution_tagged(d, &s.state, &arcs)?;
    let partial: Vec<u32> = web.edges.iter().map(|e| e.color.as_deref().map_or(0, mask)).collect();
    let flows = extend_flow(&web, n as u32, &partial).map_err(LinkError::from)?;
    let [flow] = flows.as_slice() else {
        return Err(DeformError::NoColoring);
    };
    let mut out = web;
    for (e, &m) in flow.iter().enumerate() {
        out.edges[e].color = Some(unmask(m));
    }
    Ok(out)
}

/// Favourite coloring: every a-labelled component gets {lambda_1..lambda_a}.
pub fn favourite_coloring(d: &ColoredDiagram) -> ColoringState {
    d.components.iter().map(|c| (0..c.color as usize).collect()).collect()
}

/// The single colored web surviving under the favourite coloring.
pub fn simple_resolution(d: &ColoredDiagram) -> Result<Web, DeformError> {
    let n = d.components.iter().map(|c| c.color as usize).max().unwrap_or(0);
    colored_resolution(d, &favourite_coloring(d), n)
}
