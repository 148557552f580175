//! Bundled pairs of diagrams related by Reidemeister moves.

use serde::Deserialize;

use crate::linkcx::diagram::ColoredDiagram;

#[derive(Clone, Debug, Deserialize)]
pub struct CorpusPair {
    pub name: String,
    #[serde(rename = "move")]
    pub kind: String,
    pub left: ColoredDiagram,
    pub right: ColoredDiagram,
}

#[derive(Deserialize)]
struct CorpusFile {
    pairs: Vec<CorpusPair>,
}

const REIDEMEISTER: &str = include_str!("../../corpus/reidemeister.json");

pub fn reidemeister_corpus() -> Vec<CorpusPair> {
    let f: CorpusFile = serde_json::from_str(REIDEMEISTER).expect("bundled corpus parses");
    f.pairs
}

impl CorpusPair {
    pub fn max_color(&self) -> u32 {
        self.left.components.iter().chain(self.right.components.iter()).map(|c| c.color).max().unwrap_or(1)
    }
}
