//! JSON matroid descriptors, the ingestion format for every command.
//!
//! ```json
//! {"type":"linear","field":"GF(2)","matrix":[[1,0,1],[0,1,1]]}
//! {"type":"uniform","r":2,"n":4}
//! {"type":"graphic","edges":[[0,1],[1,2],[0,2]]}
//! {"type":"bases","n":3,"bases":[[0,1],[0,2],[1,2]]}
//! ```
//!
//! Matrix columns are indexed by the ground set; the matroid is the column
//! matroid. Entries are JSON integers or strings such as `"-3"` or `"2/5"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Backing, Matroid};
use crate::error::{Result, WorkbenchError};
use crate::field::FieldSpec;
use crate::subset::ElementSet;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum Descriptor {
    Linear {
        field: String,
        matrix: Vec<Vec<serde_json::Value>>,
    },
    Uniform {
        r: usize,
        n: usize,
    },
    Graphic {
        edges: Vec<[usize; 2]>,
    },
    Bases {
        n: usize,
        bases: Vec<Vec<usize>>,
    },
}

fn parse_entry(v: &serde_json::Value) -> Result<BigRational> {
    let bad = || WorkbenchError::invalid(format!("matrix entry {v} is not an exact rational"));
    match v {
        serde_json::Value::Number(n) => {
            let i = n.as_i64().ok_or_else(bad)?;
            Ok(BigRational::from_integer(i.into()))
        }
        serde_json::Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((a, b)) => {
                    let num: BigInt = a.trim().parse().map_err(|_| bad())?;
                    let den: BigInt = b.trim().parse().map_err(|_| bad())?;
                    if den == BigInt::from(0) {
                        return Err(bad());
                    }
                    Ok(BigRational::new(num, den))
                }
                None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
            }
        }
        _ => Err(bad()),
    }
}

impl Descriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| WorkbenchError::invalid(format!("bad matroid descriptor: {e}")))
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        match self {
            Descriptor::Linear { field, matrix } => {
                let field = FieldSpec::parse(field)?;
                let width = matrix.first().map_or(0, Vec::len);
                if matrix.iter().any(|r| r.len() != width) {
                    return Err(WorkbenchError::invalid("matrix rows have unequal lengths"));
                }
                let rows = matrix
                    .iter()
                    .map(|r| r.iter().map(parse_entry).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_matrix(field, rows)
            }
            Descriptor::Uniform { r, n } => Matroid::uniform(*r, *n),
            Descriptor::Graphic { edges } => {
                let edges: Vec<(usize, usize)> = edges.iter().map(|[u, v]| (*u, *v)).collect();
                Matroid::graphic(&edges)
            }
            Descriptor::Bases { n, bases } => {
                let mut sets = Vec::with_capacity(bases.len());
                for b in bases {
                    if let Some(&e) = b.iter().find(|&&e| e >= *n) {
                        return Err(WorkbenchError::invalid(format!("basis element {e} out of range")));
                    }
                    let s: ElementSet = b.iter().copied().collect();
                    if s.len() != b.len() {
                        return Err(WorkbenchError::invalid(format!("basis {b:?} repeats an element")));
                    }
                    sets.push(s);
                }
                Matroid::from_bases(*n, sets)
            }
        }
    }

    /// A descriptor reproducing `m`'s backing.
    pub fn from_matroid(m: &Matroid) -> Self {
        match m.backing() {
            Backing::Linear(l) => Descriptor::Linear {
                field: l.field_spec().to_string(),
                matrix: l
                    .entries()
                    .into_iter()
                    .map(|r| r.into_iter().map(serde_json::Value::String).collect())
                    .collect(),
            },
            Backing::Uniform { rank } => Descriptor::Uniform { r: *rank, n: m.size() },
            Backing::Graphic(g) => Descriptor::Graphic {
                edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            },
            Backing::Bases(b) => Descriptor::Bases {
                n: m.size(),
                bases: b.bases().iter().map(|s| s.to_vec()).collect(),
            },
        }
    }
}
