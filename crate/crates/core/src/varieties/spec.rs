//! JSON variety specs and the builtin fixture catalog.
//!
//! ```json
//! {
//!   "label": "twisted-cubic",
//!   "variables": ["t"],
//!   "coordinates": ["1", "t", "t^2", "t^3"],
//!   "omega": { "dimU": 1, "entries": [{ "i": 0, "j": 1, "uVector": ["1"] }] }
//! }
//! ```
//!
//! `omega` is optional; indices are zero-based and entries not listed are zero.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::VarietyChart;
use crate::algebra::{format_scalar, int, parse_scalar, Scalar};
use crate::error::{Error, Result};
use crate::metabelian::OmegaForm;

pub const BUILTIN_PREFIX: &str = "builtin:";

/// A rational given either as a JSON integer or as a string `"a/b"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn to_scalar(&self) -> Result<Scalar> {
        match self {
            ScalarText::Int(n) => Ok(int(*n)),
            ScalarText::Text(s) => parse_scalar(s),
        }
    }

    pub fn from_scalar(s: &Scalar) -> Self {
        ScalarText::Text(format_scalar(s))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OmegaEntry {
    pub i: usize,
    pub j: usize,
    pub u_vector: Vec<ScalarText>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OmegaSpec {
    pub dim_u: usize,
    pub entries: Vec<OmegaEntry>,
}

impl OmegaSpec {
    pub fn to_form(&self, dim_w: usize) -> Result<OmegaForm> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let v = e
                    .u_vector
                    .iter()
                    .map(ScalarText::to_scalar)
                    .collect::<Result<Vec<_>>>()?;
                Ok((e.i, e.j, v))
            })
            .collect::<Result<Vec<_>>>()?;
        OmegaForm::from_entries(dim_w, self.dim_u, &entries)
    }

    pub fn from_form(omega: &OmegaForm) -> Self {
        let n = omega.dim_w();
        let entries = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let v = omega.entry(i, j);
                (!crate::algebra::is_zero_vec(&v)).then(|| OmegaEntry {
                    i,
                    j,
                    u_vector: v.iter().map(ScalarText::from_scalar).collect(),
                })
            })
            .collect();
        OmegaSpec {
            dim_u: omega.dim_u(),
            entries,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VarietySpec {
    pub label: String,
    pub variables: Vec<String>,
    pub coordinates: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<OmegaSpec>,
}

/// A chart together with an optional explicitly supplied `ω`; when absent,
/// `ω` is constructed from the tangent planes of the chart.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub chart: VarietyChart,
    pub omega: Option<OmegaForm>,
}

impl VarietySpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_fixture(&self) -> Result<Fixture> {
        let chart = VarietyChart::parse(&self.label, &self.variables, &self.coordinates)?;
        let omega = self
            .omega
            .as_ref()
            .map(|o| o.to_form(chart.ambient_dim()))
            .transpose()?;
        Ok(Fixture { chart, omega })
    }
}

/// Names accepted after `builtin:`.
pub const BUILTIN_NAMES: &[&str] = &[
    "veronese-2-3",
    "veronese-2-4",
    "veronese-3-3",
    "flat-conic",
    "flat-linear-3",
    "v3-conic",
    "adversarial-cubic",
];

/// Veronese charts in the catalog: `(r, k) ∈ {(2,3), (2,4), (3,3)}`.
pub fn builtin_veronese(r: usize, k: usize) -> Result<VarietyChart> {
    match (r, k) {
        (2, 3) | (2, 4) | (3, 3) => VarietyChart::veronese(r, k as u32),
        _ => Err(Error::UnsupportedVeronese { r, k }),
    }
}

/// Every builtin chart, in catalog order.
pub fn builtin_charts() -> Vec<VarietyChart> {
    BUILTIN_NAMES
        .iter()
        .map(|name| builtin(name).expect("catalog entry").chart)
        .collect()
}

pub fn builtin(name: &str) -> Result<Fixture> {
    let plain = |chart: VarietyChart| Fixture { chart, omega: None };
    Ok(match name {
        "veronese-2-3" | "twisted-cubic" => plain(builtin_veronese(2, 3)?),
        "veronese-2-4" | "rational-normal-quartic" => plain(builtin_veronese(2, 4)?),
        "veronese-3-3" => plain(builtin_veronese(3, 3)?),
        "flat-conic" => plain(VarietyChart::plane_conic().with_label("flat-conic")),
        "flat-linear-3" => plain(VarietyChart::full_linear(3).with_label("flat-linear-3")),
        "v3-conic" => plain(VarietyChart::plane_conic().compose_veronese(3).with_label("v3-conic")),
        "adversarial-cubic" => Fixture {
            chart: builtin_veronese(2, 3)?.with_label("adversarial-cubic"),
            omega: Some(OmegaForm::from_entries(4, 1, &[(0, 1, vec![int(1)])])?),
        },
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    })
}

/// Resolves `builtin:<name>` or a path to a JSON variety spec.
pub fn resolve(spec_ref: &str) -> Result<Fixture> {
    match spec_ref.strip_prefix(BUILTIN_PREFIX) {
        Some(name) => builtin(name),
        None => load(Path::new(spec_ref)),
    }
}

pub fn load(path: &Path) -> Result<Fixture> {
    let text = std::fs::read_to_string(path)?;
    VarietySpec::from_json(&text)?.to_fixture()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn parses_spec_with_omega() {
        let text = r#"{
            "label": "cubic",
            "variables": ["t"],
            "coordinates": ["1", "t", "t^2", "t^3"],
            "omega": {"dimU": 1, "entries": [{"i": 0, "j": 1, "uVector": ["1/2"]}, {"i": 3, "j": 2, "uVector": [2]}]}
        }"#;
        let fixture = VarietySpec::from_json(text).unwrap().to_fixture().unwrap();
        assert_eq!(fixture.chart.ambient_dim(), 4);
        let omega = fixture.omega.unwrap();
        assert_eq!(omega.entry(0, 1), vec![q(1, 2)]);
        assert_eq!(omega.entry(2, 3), vec![int(-2)]);
    }

    #[test]
    fn rejects_bad_polynomials() {
        let text = r#"{"label": "x", "variables": ["t"], "coordinates": ["1", "t +"]}"#;
        assert!(VarietySpec::from_json(text).unwrap().to_fixture().is_err());
        assert!(VarietySpec::from_json("{not json").is_err());
    }

    #[test]
    fn omega_spec_round_trip() {
        let omega = OmegaForm::from_entries(3, 2, &[(0, 2, vec![q(3, 4), int(-1)])]).unwrap();
        let spec = OmegaSpec::from_form(&omega);
        let json = serde_json::to_string(&spec).unwrap();
        let back: OmegaSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_form(3).unwrap(), omega);
    }

    #[test]
    fn catalog_resolves() {
        for name in BUILTIN_NAMES {
            assert!(resolve(&format!("builtin:{name}")).is_ok(), "{name}");
        }
        assert!(matches!(resolve("builtin:nope"), Err(Error::UnknownBuiltin(_))));
        assert!(builtin_veronese(3, 4).is_err());
        assert_eq!(builtin_charts().len(), BUILTIN_NAMES.len());
    }
}
