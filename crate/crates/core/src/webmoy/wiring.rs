//! Planar composition: a wiring is an expression in stacking, juxtaposition and
//! closure, with numbered slots into which webs are inserted.

use serde::{Deserialize, Serialize};

use crate::webmoy::web::{BoundaryPoint, Web};
use crate::webmoy::WebError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Wiring {
    Slot { index: usize },
    Identity { points: Vec<BoundaryPoint> },
    Compose { upper: Box<Wiring>, lower: Box<Wiring> },
    Tensor { left: Box<Wiring>, right: Box<Wiring> },
    Closure { inner: Box<Wiring> },
}

impl Wiring {
    pub fn slot(index: usize) -> Self {
        Wiring::Slot { index }
    }
    pub fn compose(upper: Wiring, lower: Wiring) -> Self {
        Wiring::Compose { upper: Box::new(upper), lower: Box::new(lower) }
    }
    pub fn tensor(left: Wiring, right: Wiring) -> Self {
        Wiring::Tensor { left: Box::new(left), right: Box::new(right) }
    }
    pub fn closure(inner: Wiring) -> Self {
        Wiring::Closure { inner: Box::new(inner) }
    }
}

/// Insert the inner webs into the slots of the wiring.
pub fn glue(outer: &Wiring, inners: &[Web]) -> Result<Web, WebError> {
    match outer {
        Wiring::Slot { index } => inners
            .get(*index)
            .cloned()
            .ok_or_else(|| WebError::Malformed(format!("no web for slot {}", index))),
        Wiring::Identity { points } => Ok(Web::identity(points)),
        Wiring::Compose { upper, lower } => Web::compose(&glue(upper, inners)?, &glue(lower, inners)?),
        Wiring::Tensor { left, right } => Ok(Web::tensor(&glue(left, inners)?, &glue(right, inners)?)),
        Wiring::Closure { inner } => glue(inner, inners)?.closure(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webmoy::moy::moy_eval;

    #[test]
    fn identity_wiring_is_neutral() {
        let m = Web::merge(1, 2);
        let pts = m.top_points();
        let w = Wiring::compose(Wiring::Identity { points: pts }, Wiring::slot(0));
        let g = glue(&w, std::slice::from_ref(&m)).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.bottom_points(), m.bottom_points());
        assert_eq!(g.top_points(), m.top_points());
    }

    #[test]
    fn associativity_on_values() {
        let a = Web::split(1, 1);
        let b = Web::merge(1, 1);
        let c = Web::split(1, 1);
        let left = Wiring::compose(Wiring::compose(Wiring::slot(2), Wiring::slot(1)), Wiring::slot(0));
        let right = Wiring::compose(Wiring::slot(2), Wiring::compose(Wiring::slot(1), Wiring::slot(0)));
        let cap = Web::merge(1, 1);
        let webs = [a, b, c];
        let l = Web::compose(&cap, &glue(&left, &webs).unwrap()).unwrap().closure().unwrap();
        let r = Web::compose(&cap, &glue(&right, &webs).unwrap()).unwrap().closure().unwrap();
        assert_eq!(moy_eval(&l, 3).unwrap(), moy_eval(&r, 3).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let w = Wiring::tensor(Wiring::slot(0), Wiring::closure(Wiring::slot(1)));
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(serde_json::from_str::<Wiring>(&s).unwrap(), w);
    }
}
