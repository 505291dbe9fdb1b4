//! JSON form of an automorphism: generator images by vertex name plus the
//! content hash of the graph they live on.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{verify_automorphism, Automorphism};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismDoc {
    pub graph_hash: String,
    /// Vertex name to image word, in vertex order.
    pub images: IndexMap<String, String>,
    pub inverse_images: IndexMap<String, String>,
}

pub fn automorphism_to_json(g: &Graph, f: &Automorphism) -> String {
    let map = |list: &[crate::words::NormalForm]| {
        g.vertices()
            .map(|v| (g.name(v).to_string(), list[v].to_text(g)))
            .collect()
    };
    let doc = AutomorphismDoc {
        graph_hash: g.content_hash(),
        images: map(f.images()),
        inverse_images: map(f.inverse_images()),
    };
    serde_json::to_string_pretty(&doc).expect("string maps always serialize")
}

/// Parses and re-verifies; the hash must match `g`.
pub fn automorphism_from_json(g: &Graph, text: &str) -> Result<Automorphism> {
    let doc: AutomorphismDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    if doc.graph_hash != g.content_hash() {
        return Err(Error::GraphMismatch {
            expected: g.content_hash(),
            found: doc.graph_hash,
        });
    }
    let read = |map: &IndexMap<String, String>| -> Result<Vec<Word>> {
        if map.len() != g.len() {
            return Err(Error::NotAnAutomorphism(format!(
                "expected {} images, found {}",
                g.len(),
                map.len()
            )));
        }
        g.names()
            .iter()
            .map(|name| {
                let text = map
                    .get(name)
                    .ok_or_else(|| Error::NotAnAutomorphism(format!("no image for `{name}`")))?;
                Word::parse(g, text)
            })
            .collect()
    };
    let f = Automorphism::from_images(g, &read(&doc.images)?, &read(&doc.inverse_images)?)?;
    let report = verify_automorphism(g, &f);
    if report.is_ok() {
        Ok(f)
    } else {
        Err(Error::NotAnAutomorphism(report.describe(g)))
    }
}
