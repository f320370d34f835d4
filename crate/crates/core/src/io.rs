//! JSON file formats for shapes and colorings.

use serde::{Deserialize, Serialize};

use crate::graph6;
use crate::host::{Coloring, EdgeSet, PartiteShape};
use crate::Result;

/// `{"shape":{"parts":[...]},"red_edges":[[u,v],...]}`, vertices in the
/// host's linear order. `red_graph6` is informational and checked on read
/// when present.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoringFile {
    pub shape: PartiteShape,
    pub red_edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub red_graph6: Option<String>,
}

impl ColoringFile {
    pub fn from_coloring(c: &Coloring) -> Self {
        ColoringFile {
            shape: c.shape().clone(),
            red_edges: c.red().pairs().into_iter().map(|(u, v)| [u, v]).collect(),
            red_graph6: Some(graph6::encode_graph6(c.red())),
        }
    }

    pub fn to_coloring(&self) -> Result<Coloring> {
        let red = EdgeSet::from_pairs(&self.shape, self.red_edges.iter().map(|e| (e[0], e[1])))?;
        if let Some(g6) = &self.red_graph6 {
            let decoded = graph6::decode_graph6(g6, &self.shape)?;
            if decoded != red {
                return Err(crate::Error::Parse(
                    "red_graph6 disagrees with red_edges".into(),
                ));
            }
        }
        Ok(Coloring::new(red))
    }
}

pub fn coloring_to_json(c: &Coloring) -> String {
    serde_json::to_string_pretty(&ColoringFile::from_coloring(c)).expect("serializable")
}

pub fn coloring_from_json(text: &str) -> Result<Coloring> {
    let file: ColoringFile = serde_json::from_str(text)?;
    file.to_coloring()
}

pub fn shape_to_json(shape: &PartiteShape) -> String {
    serde_json::to_string(shape).expect("serializable")
}

pub fn shape_from_json(text: &str) -> Result<PartiteShape> {
    Ok(serde_json::from_str(text)?)
}
