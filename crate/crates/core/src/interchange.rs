//! The `{"m": .., "facets": [[..], ..]}` text format for complexes, and
//! corpora as JSON arrays of such objects.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexRecord {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexRecord {
    /// Canonical record: facets sorted lexicographically.
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexRecord { m: k.m(), facets: k.facets().iter().map(|f| f.to_vec()).collect() }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if self.m == 0 || self.m > MAX_VERTICES {
            return Err(Error::AmbientSize { m: self.m, max: MAX_VERTICES });
        }
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut sorted = f.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::Input(format!("repeated vertex in facet {f:?}")));
                }
                VertexSet::from_vertices(sorted)
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(self.m, facets)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(ComplexRecord),
    Many(Vec<ComplexRecord>),
}

fn parse_records(text: &str) -> Result<Vec<ComplexRecord>> {
    let parsed: OneOrMany =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("not a complex or corpus: {e}")))?;
    Ok(match parsed {
        OneOrMany::One(r) => vec![r],
        OneOrMany::Many(rs) => rs,
    })
}

/// Parses a single complex object.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let record: ComplexRecord =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("not a complex: {e}")))?;
    record.to_complex()
}

/// Parses either one complex object or an array of them.
pub fn parse_corpus(text: &str) -> Result<Vec<SimplicialComplex>> {
    parse_records(text)?.iter().map(ComplexRecord::to_complex).collect()
}

pub fn complex_to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexRecord::from_complex(k)).expect("records always serialize")
}

/// One complex per line inside a JSON array.
pub fn corpus_to_json(corpus: &[SimplicialComplex]) -> String {
    if corpus.is_empty() {
        return "[]\n".to_string();
    }
    let lines: Vec<String> = corpus.iter().map(|k| format!("  {}", complex_to_json(k))).collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}
