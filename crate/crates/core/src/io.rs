//! JSON module files.
//!
//! ```json
//! {"dim": 2, "summands": [{"generators": [["0","0"]]}, {"generators": [["2","-1"],["0","3"]]}]}
//! ```
//!
//! Coordinates are rational strings `"p/q"` or `"n"`. Output lists summands
//! and generators in canonical sorted order, so isomorphic modules serialize
//! to identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::Module;
use crate::rational::Rational;
use crate::upset::{Point, Upset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dim: usize,
    pub summands: Vec<SummandFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandFile {
    pub generators: Vec<Vec<String>>,
}

impl ModuleFile {
    pub fn from_module(m: &Module) -> Self {
        let canonical = m.canonical();
        ModuleFile {
            dim: m.dim(),
            summands: canonical
                .summands()
                .iter()
                .map(|u| SummandFile {
                    generators: u
                        .generators()
                        .iter()
                        .map(|g| g.coords().iter().map(Rational::to_string).collect())
                        .collect(),
                })
                .collect(),
        }
    }

    /// Validates shapes and builds the module. Malformed rationals are parse
    /// errors; shape problems are validation errors.
    pub fn to_module(&self) -> Result<Module> {
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut summands = Vec::with_capacity(self.summands.len());
        for s in &self.summands {
            let mut points = Vec::with_capacity(s.generators.len());
            for g in &s.generators {
                if g.len() != self.dim {
                    return Err(Error::DimensionMismatch {
                        expected: self.dim,
                        found: g.len(),
                    });
                }
                let coords = g
                    .iter()
                    .map(|c| c.parse())
                    .collect::<Result<Vec<Rational>>>()?;
                points.push(Point::new(coords)?);
            }
            summands.push(Upset::new(&points)?);
        }
        Module::new(self.dim, summands)
    }
}

pub fn parse_module(text: &str) -> Result<Module> {
    let file: ModuleFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid module file: {e}")))?;
    file.to_module()
}

/// Pretty-printed JSON with a trailing newline.
pub fn module_to_json(m: &Module) -> String {
    let mut out = serde_json::to_string_pretty(&ModuleFile::from_module(m))
        .expect("module files always serialize");
    out.push('\n');
    out
}
