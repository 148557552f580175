//! JSON form of webs. Darts are written as {"edge": e, "end": "tail" | "head"};
//! an edge end with no vertex ("from"/"to" null) sits on the boundary.

use serde::{Deserialize, Serialize};

use crate::webmoy::web::{Edge, Vertex, VertexKind, Web};
use crate::webmoy::WebError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Tail,
    Head,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartJson {
    pub edge: usize,
    pub end: End,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub kind: VertexKind,
    pub ccw: Vec<DartJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: Option<usize>,
    pub to: Option<usize>,
    pub label: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WebJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    #[serde(default)]
    pub bottom: Vec<DartJson>,
    #[serde(default)]
    pub top: Vec<DartJson>,
}

fn to_dart(d: &DartJson) -> usize {
    2 * d.edge + usize::from(d.end == End::Head)
}
fn from_dart(d: usize) -> DartJson {
    DartJson { edge: d / 2, end: if d.is_multiple_of(2) { End::Tail } else { End::Head } }
}

impl From<&Web> for WebJson {
    fn from(w: &Web) -> Self {
        WebJson {
            vertices: w
                .vertices
                .iter()
                .map(|v| VertexJson { kind: v.kind, ccw: v.ccw.iter().map(|&d| from_dart(d)).collect() })
                .collect(),
            edges: w
                .edges
                .iter()
                .map(|e| EdgeJson { from: e.tail, to: e.head, label: e.label, color: e.color.clone() })
                .collect(),
            bottom: w.bottom.iter().map(|&d| from_dart(d)).collect(),
            top: w.top.iter().map(|&d| from_dart(d)).collect(),
        }
    }
}

impl TryFrom<WebJson> for Web {
    type Error = WebError;
    fn try_from(j: WebJson) -> Result<Web, WebError> {
        let ne = j.edges.len();
        let check = |d: &DartJson| {
            if d.edge < ne {
                Ok(to_dart(d))
            } else {
                Err(WebError::Malformed(format!("edge {} out of range", d.edge)))
            }
        };
        let mut w = Web::default();
        for v in &j.vertices {
            w.vertices.push(Vertex { kind: v.kind, ccw: v.ccw.iter().map(check).collect::<Result<_, _>>()? });
        }
        for e in &j.edges {
            for v in [e.from, e.to].into_iter().flatten() {
                if v >= j.vertices.len() {
                    return Err(WebError::Malformed(format!("vertex {} out of range", v)));
                }
            }
            w.edges.push(Edge { label: e.label, tail: e.from, head: e.to, color: e.color.clone() });
        }
        w.bottom = j.bottom.iter().map(check).collect::<Result<_, _>>()?;
        w.top = j.top.iter().map(check).collect::<Result<_, _>>()?;
        w.validate()?;
        Ok(w)
    }
}

impl Web {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&WebJson::from(self)).expect("web serializes")
    }
    pub fn from_json(s: &str) -> Result<Web, WebError> {
        let j: WebJson = serde_json::from_str(s).map_err(|e| WebError::Malformed(e.to_string()))?;
        Web::try_from(j)
    }
}
