//! Local foam relations with their scalar factors, and the normalization
//! scalars carried by Reidemeister and Morse foams on simple resolutions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::functorial::scalar::{is_subset, minus, prefix, ScalarExpr, Subset};
use crate::functorial::FuncError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationId {
    /// Facet pair A, B: r(A, B).
    Klr,
    /// Facet pair A, B: r(B, A).
    Klr2,
    /// Annulus between facets of labels a >= b: (-1)^{b(a-b)}.
    Disc,
    /// X in A, B: r(X,B)/r(A\X,X), second form r(B,X)/r(X,A\X).
    Disc2,
    /// X in A, B: r(B,X)/r(X,A\X), second form r(X,B)/r(A\X,X).
    SaddleReverse,
    /// Neck-cut bubble: omega_A.
    Bubble,
    /// Idempotent-colored sphere: omega_A^{-1}.
    Sphere,
    /// r(A, C).
    Pitchfork3,
    /// Associativity and MP moves: scalar one.
    Mp,
    /// Pitchfork moves without idempotents: scalar one.
    Pitchfork,
    /// Colored blister: r(A, B).
    Blister,
}

impl RelationId {
    pub const ALL: [RelationId; 11] = [
        RelationId::Klr,
        RelationId::Klr2,
        RelationId::Disc,
        RelationId::Disc2,
        RelationId::SaddleReverse,
        RelationId::Bubble,
        RelationId::Sphere,
        RelationId::Pitchfork3,
        RelationId::Mp,
        RelationId::Pitchfork,
        RelationId::Blister,
    ];
}

/// One application of a catalogued relation. Unused subsets stay empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationStep {
    pub id: RelationId,
    #[serde(default = "one_u8")]
    pub form: u8,
    #[serde(default)]
    pub a: Subset,
    #[serde(default)]
    pub b: Subset,
    #[serde(default)]
    pub x: Subset,
    /// Applied right to left: contributes the inverse factor.
    #[serde(default)]
    pub inverse: bool,
}

fn one_u8() -> u8 {
    1
}

impl RelationStep {
    fn new(id: RelationId, a: Subset, b: Subset, x: Subset) -> Self {
        RelationStep { id, form: 1, a, b, x, inverse: false }
    }
    pub fn klr(a: Subset, b: Subset) -> Self {
        Self::new(RelationId::Klr, a, b, vec![])
    }
    pub fn klr2(a: Subset, b: Subset) -> Self {
        Self::new(RelationId::Klr2, a, b, vec![])
    }
    pub fn disc(a: Subset, b: Subset) -> Self {
        Self::new(RelationId::Disc, a, b, vec![])
    }
    pub fn disc2(x: Subset, a: Subset, b: Subset) -> Self {
        Self::new(RelationId::Disc2, a, b, x)
    }
    pub fn saddle_reverse(x: Subset, a: Subset, b: Subset) -> Self {
        Self::new(RelationId::SaddleReverse, a, b, x)
    }
    pub fn bubble(a: Subset) -> Self {
        Self::new(RelationId::Bubble, a, vec![], vec![])
    }
    pub fn sphere(a: Subset) -> Self {
        Self::new(RelationId::Sphere, a, vec![], vec![])
    }
    pub fn pitchfork3(a: Subset, c: Subset) -> Self {
        Self::new(RelationId::Pitchfork3, a, c, vec![])
    }
    pub fn mp() -> Self {
        Self::new(RelationId::Mp, vec![], vec![], vec![])
    }
    pub fn blister(a: Subset, b: Subset) -> Self {
        Self::new(RelationId::Blister, a, b, vec![])
    }
    pub fn second_form(mut self) -> Self {
        self.form = 2;
        self
    }
    pub fn inv(mut self) -> Self {
        self.inverse = !self.inverse;
        self
    }

    /// The factor picked up when the step is applied, before inversion.
    fn raw_factor(&self, n: usize) -> Result<ScalarExpr, FuncError> {
        let sigma = prefix(n);
        for s in [&self.a, &self.b, &self.x] {
            if !is_subset(s, &sigma) {
                return Err(FuncError::Malformed(format!("{s:?} is not a subset of Sigma for N = {n}")));
            }
        }
        let (a, b, x) = (&self.a, &self.b, &self.x);
        let r = ScalarExpr::r;
        let ratio = |p: ScalarExpr, q: ScalarExpr| q.inverse().map(|qi| &p * &qi);
        Ok(match self.id {
            RelationId::Klr | RelationId::Blister | RelationId::Pitchfork3 => r(a, b),
            RelationId::Klr2 => r(b, a),
            RelationId::Disc => {
                let (hi, lo) = (a.len().max(b.len()) as i64, a.len().min(b.len()) as i64);
                ScalarExpr::sign(lo * (hi - lo))
            }
            RelationId::Disc2 | RelationId::SaddleReverse => {
                if !is_subset(x, a) {
                    return Err(FuncError::Malformed(format!("{x:?} is not contained in {a:?}")));
                }
                let rest = minus(a, x);
                let first = (self.id == RelationId::Disc2) == (self.form == 1);
                let v = if first { ratio(r(x, b), r(&rest, x)) } else { ratio(r(b, x), r(x, &rest)) };
                v.ok_or_else(|| FuncError::Malformed(format!("{:?} divides by zero", self.id)))?
            }
            RelationId::Bubble => ScalarExpr::omega(a, n),
            RelationId::Sphere => ScalarExpr::omega(a, n).inverse().expect("omega is never zero"),
            RelationId::Mp | RelationId::Pitchfork => ScalarExpr::one(),
        })
    }

    pub fn factor(&self, n: usize, catalog: &Catalog) -> Result<ScalarExpr, FuncError> {
        let mut f = self.raw_factor(n)?;
        if catalog.is_flipped(Entry::Relation(self.id)) {
            f = f.negate();
        }
        if self.inverse {
            f = f.inverse().ok_or_else(|| FuncError::Malformed(format!("inverting a vanishing {:?}", self.id)))?;
        }
        Ok(f)
    }
}

/// Something in the catalog that carries a scalar and can be mutated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Entry {
    Relation(RelationId),
    R1Norm,
    R2ParallelNorm,
    R2OppositeNorm,
    CapNorm,
}

impl Entry {
    /// Entries whose scalar involves a sign.
    pub fn signed() -> Vec<Entry> {
        vec![
            Entry::Relation(RelationId::Disc),
            Entry::Relation(RelationId::Disc2),
            Entry::Relation(RelationId::SaddleReverse),
            Entry::Relation(RelationId::Bubble),
            Entry::Relation(RelationId::Sphere),
            Entry::R1Norm,
            Entry::R2ParallelNorm,
            Entry::R2OppositeNorm,
            Entry::CapNorm,
        ]
    }
}

/// The relation catalog, optionally with some entries negated for mutation testing.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    flipped: BTreeSet<Entry>,
}

impl Catalog {
    pub fn standard() -> Self {
        Catalog::default()
    }
    pub fn flipping(entry: Entry) -> Self {
        Catalog { flipped: [entry].into_iter().collect() }
    }
    pub fn is_flipped(&self, e: Entry) -> bool {
        self.flipped.contains(&e)
    }
}

/// +-prod omega_X^k: the shape of every normalization scalar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeScalar {
    pub negative: bool,
    pub omegas: Vec<(Subset, i64)>,
}

impl LatticeScalar {
    pub fn one() -> Self {
        LatticeScalar { negative: false, omegas: vec![] }
    }
    pub fn sign(e: i64) -> Self {
        LatticeScalar { negative: e.rem_euclid(2) == 1, omegas: vec![] }
    }
    pub fn omega(a: Subset) -> Self {
        LatticeScalar { negative: false, omegas: vec![(a, 1)] }
    }
    pub fn times(&self, other: &LatticeScalar) -> LatticeScalar {
        let mut omegas = self.omegas.clone();
        for (s, k) in &other.omegas {
            match omegas.iter_mut().find(|(t, _)| t == s) {
                Some(slot) => slot.1 += k,
                None => omegas.push((s.clone(), *k)),
            }
        }
        omegas.retain(|(_, k)| *k != 0);
        omegas.sort();
        LatticeScalar { negative: self.negative != other.negative, omegas }
    }
    fn negated(&self) -> LatticeScalar {
        LatticeScalar { negative: !self.negative, omegas: self.omegas.clone() }
    }
    pub fn is_one(&self) -> bool {
        !self.negative && self.omegas.is_empty()
    }
    pub fn to_expr(&self, n: usize) -> ScalarExpr {
        let mut out = ScalarExpr::sign(self.negative as i64);
        for (s, k) in &self.omegas {
            out = &out * &ScalarExpr::omega(s, n).pow(*k).expect("omega is never zero");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Foam {
    F,
    G,
}

/// Elementary moves between movie frames, with the data their scalars depend on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "kebab-case")]
pub enum Move {
    /// `increasing`: the move adds a kink that raises the writhe.
    /// `scaled` names the foam carrying omega_A.
    R1 { label: u32, increasing: bool, scaled: Foam },
    /// Parallel strands; `over_first` selects the strand pushed over, which decides where epsilon sits.
    R2Parallel { labels: [u32; 2], over_first: bool },
    /// Opposite strands; variant 1 scales G, variant 2 scales F.
    R2Opposite { labels: [u32; 2], variant: u8 },
    /// Three outgoing boundary points followed by three incoming ones.
    R3Braidlike { labels: [u32; 3] },
    /// Alternating boundary orientations, realised through R2 and braid-like R3 moves.
    R3Cyclic { labels: [u32; 3] },
    Cup { label: u32 },
    Saddle { label: u32 },
    /// `normalized` caps close an idempotent sphere and carry omega_A.
    Cap { label: u32, normalized: bool },
}

/// Scalars on the two foams F, G of a move (for Morse moves F = G is the map itself).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveScalars {
    pub f: LatticeScalar,
    pub g: LatticeScalar,
}

fn epsilon(a: u32, b: u32) -> LatticeScalar {
    let (a, b) = (a as i64, b as i64);
    LatticeScalar::sign(a.min(b) * (a - b))
}

/// The maps composing the cyclic R3 move on simple resolutions, forward then backward.
pub fn r3_cyclic_template(labels: [u32; 3]) -> (Vec<(Move, Foam)>, Vec<(Move, Foam)>) {
    let [a, b, c] = labels;
    let opp1 = Move::R2Opposite { labels: [a, b], variant: 1 };
    let par1 = Move::R2Parallel { labels: [a, c], over_first: false };
    let r3 = Move::R3Braidlike { labels };
    let par2 = Move::R2Parallel { labels: [a, c], over_first: true };
    let opp2 = Move::R2Opposite { labels: [a, b], variant: 2 };
    let forward = vec![
        (opp1.clone(), Foam::F),
        (par1.clone(), Foam::F),
        (r3.clone(), Foam::F),
        (par2.clone(), Foam::G),
        (opp2.clone(), Foam::G),
    ];
    let backward = vec![(opp2, Foam::F), (par2, Foam::F), (r3, Foam::G), (par1, Foam::G), (opp1, Foam::G)];
    (forward, backward)
}

/// Normalization scalars of a move under the favourite coloring.
pub fn reidemeister_scalar(mv: &Move, n: usize, catalog: &Catalog) -> Result<MoveScalars, FuncError> {
    let check = |l: u32| {
        if l == 0 || l as usize > n {
            Err(FuncError::Malformed(format!("label {l} outside 1..={n}")))
        } else {
            Ok(())
        }
    };
    let flip = |s: LatticeScalar, e: Entry| if catalog.is_flipped(e) { s.negated() } else { s };
    let one = LatticeScalar::one();
    Ok(match mv {
        Move::R1 { label, increasing, scaled } => {
            check(*label)?;
            if !increasing {
                MoveScalars { f: one.clone(), g: one }
            } else {
                let w = flip(LatticeScalar::omega(prefix(*label as usize)), Entry::R1Norm);
                match scaled {
                    Foam::F => MoveScalars { f: w, g: one },
                    Foam::G => MoveScalars { f: one, g: w },
                }
            }
        }
        Move::R2Parallel { labels: [a, b], over_first } => {
            check(*a)?;
            check(*b)?;
            let e = flip(epsilon(*a, *b), Entry::R2ParallelNorm);
            if *over_first {
                MoveScalars { f: e, g: one }
            } else {
                MoveScalars { f: one, g: e }
            }
        }
        Move::R2Opposite { labels: [a, b], variant } => {
            check(*a)?;
            check(*b)?;
            let e = flip(epsilon(*a, *b), Entry::R2OppositeNorm);
            match variant {
                1 => MoveScalars { f: one, g: e },
                2 => MoveScalars { f: e, g: one },
                v => return Err(FuncError::Unsupported(format!("R2 opposite variant {v}"))),
            }
        }
        Move::R3Braidlike { labels } => {
            for l in labels {
                check(*l)?;
            }
            MoveScalars { f: one.clone(), g: one }
        }
        Move::R3Cyclic { labels } => {
            let (forward, backward) = r3_cyclic_template(*labels);
            let mut f = LatticeScalar::one();
            let mut g = LatticeScalar::one();
            for (m, side) in forward {
                f = f.times(&reidemeister_scalar(&m, n, catalog)?.pick(side));
            }
            for (m, side) in backward {
                g = g.times(&reidemeister_scalar(&m, n, catalog)?.pick(side));
            }
            MoveScalars { f, g }
        }
        Move::Cup { label } | Move::Saddle { label } => {
            check(*label)?;
            MoveScalars { f: one.clone(), g: one }
        }
        Move::Cap { label, normalized } => {
            check(*label)?;
            let s = if *normalized {
                flip(LatticeScalar::omega(prefix(*label as usize)), Entry::CapNorm)
            } else {
                one
            };
            MoveScalars { f: s.clone(), g: s }
        }
    })
}

impl MoveScalars {
    pub fn pick(&self, side: Foam) -> LatticeScalar {
        match side {
            Foam::F => self.f.clone(),
            Foam::G => self.g.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r2_signs() {
        let c = Catalog::standard();
        let s = reidemeister_scalar(&Move::R2Parallel { labels: [2, 1], over_first: true }, 3, &c).unwrap();
        assert!(s.f.negative && s.g.is_one());
        let s = reidemeister_scalar(&Move::R2Parallel { labels: [2, 2], over_first: true }, 3, &c).unwrap();
        assert!(s.f.is_one());
        let s = reidemeister_scalar(&Move::R2Parallel { labels: [3, 1], over_first: true }, 3, &c).unwrap();
        assert!(s.f.is_one());
    }

    #[test]
    fn r1_scalar_sits_on_one_side() {
        let c = Catalog::standard();
        let s = reidemeister_scalar(&Move::R1 { label: 2, increasing: true, scaled: Foam::F }, 4, &c).unwrap();
        assert_eq!(s.f, LatticeScalar::omega(vec![0, 1]));
        assert!(s.g.is_one());
    }

    #[test]
    fn relation_inverts() {
        let c = Catalog::standard();
        let step = RelationStep::disc2(vec![0], vec![0, 1], vec![2]);
        let f = step.factor(3, &c).unwrap();
        let g = step.clone().inv().factor(3, &c).unwrap();
        assert!((&f * &g).is_one());
        assert!(RelationStep::disc2(vec![2], vec![0, 1], vec![]).factor(3, &c).is_err());
    }
}
