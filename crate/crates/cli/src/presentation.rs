//! JSON manifests describing a presentation matrix.
//!
//! ```json
//! {
//!   "name": "curve_5_7_9_13",
//!   "generators": [5, 7, 9, 13],
//!   "variables": ["X", "Y", "Z", "W"],
//!   "blocks": { "l": 1, "m": 0, "q": 2 },
//!   "rows": [["W", "X^2", …], ["X^2", "Y", …]]
//! }
//! ```
//!
//! Variable `i` gets weight `generators[i]`. Without `variables` the names
//! default to `X, Y, Z, W` (or `X1, …, Xn`).

use std::path::Path;

use agl_core::toric::{Blocks, PolyMatrix, WeightedPolyRing};
use agl_core::NumericalSemigroup;
use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

pub const CURVE_5_7_9_13: &str = include_str!("../data/curve_5_7_9_13.json");
pub const CURVE_4_9_11_14: &str = include_str!("../data/curve_4_9_11_14.json");

/// The manifests shipped with the binary.
pub fn bundled(name: &str) -> Option<&'static str> {
    match name {
        "curve_5_7_9_13" => Some(CURVE_5_7_9_13),
        "curve_4_9_11_14" => Some(CURVE_4_9_11_14),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct BlockSpec {
    pub l: usize,
    pub m: usize,
    pub q: usize,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PresentationManifest {
    #[serde(default)]
    pub name: String,
    pub generators: Vec<u64>,
    #[serde(default)]
    pub variables: Option<Vec<String>>,
    pub blocks: BlockSpec,
    pub rows: Vec<Vec<String>>,
}

impl PresentationManifest {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed presentation manifest")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_json(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        Ok(NumericalSemigroup::from_generators(&self.generators)?)
    }

    pub fn ring(&self, s: &NumericalSemigroup) -> Result<WeightedPolyRing> {
        match &self.variables {
            None => Ok(WeightedPolyRing::for_semigroup(s)),
            Some(names) => {
                if names.len() != self.generators.len() {
                    bail!(
                        "{} variable names for {} generators",
                        names.len(),
                        self.generators.len()
                    );
                }
                Ok(WeightedPolyRing::new(
                    names.iter().cloned().zip(self.generators.iter().copied()),
                ))
            }
        }
    }

    pub fn matrix(&self, ring: &WeightedPolyRing) -> Result<PolyMatrix> {
        let rows: Vec<Vec<&str>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(String::as_str).collect())
            .collect();
        Ok(PolyMatrix::parse(ring, &rows)?)
    }

    pub fn blocks(&self) -> Blocks {
        Blocks {
            l: self.blocks.l,
            m: self.blocks.m,
            q: self.blocks.q,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_manifests_parse() {
        for name in ["curve_5_7_9_13", "curve_4_9_11_14"] {
            let m = PresentationManifest::from_json(bundled(name).unwrap()).unwrap();
            let s = m.semigroup().unwrap();
            let ring = m.ring(&s).unwrap();
            let mat = m.matrix(&ring).unwrap();
            assert_eq!(mat.nrows(), 1 + m.blocks.l + m.blocks.m);
        }
        assert!(bundled("ex9").is_none());
    }

    #[test]
    fn malformed_input() {
        assert!(PresentationManifest::from_json("{").is_err());
        assert!(PresentationManifest::from_json(r#"{"generators":[3],"blocks":{"l":1,"m":0,"q":0},"rows":[],"extra":1}"#).is_err());
        let m = PresentationManifest::from_json(
            r#"{"generators":[3,7,8],"variables":["X"],"blocks":{"l":1,"m":0,"q":0},"rows":[]}"#,
        )
        .unwrap();
        assert!(m.ring(&m.semigroup().unwrap()).is_err());
    }
}
