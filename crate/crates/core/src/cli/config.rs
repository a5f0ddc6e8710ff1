//! JSON real-form configurations and the bundled examples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{GramForm, Rational, WeightVector};
use crate::kstruct::RealFormData;
use crate::rootsys::{build_from_cartan_label, default_positive, Lattice, RootSystemData};

/// On-disk description of a real form. Rationals are strings such as `"-1/2"`.
///
/// Either `cartan_label` (with optional `central_rank`) or explicit `roots`
/// plus `gram` must be present. `positive` defaults to a generic choice and
/// `lattice_basis` to the standard lattice.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealFormConfig {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan_label: Option<String>,
    #[serde(default)]
    pub central_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<WeightVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<WeightVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive: Option<Vec<WeightVector>>,
    #[serde(default)]
    pub compact_roots: Vec<WeightVector>,
    #[serde(default)]
    pub k_positive: Vec<WeightVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice_basis: Option<Vec<WeightVector>>,
    #[serde(default)]
    pub notes: String,
}

pub const BUNDLED: [(&str, &str); 4] = [
    ("sl2", include_str!("../../configs/sl2.json")),
    ("sp4", include_str!("../../configs/sp4.json")),
    ("u11", include_str!("../../configs/u11.json")),
    ("su21", include_str!("../../configs/su21.json")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

/// One of `sl2`, `sp4`, `u11`, `su21`.
pub fn bundled(name: &str) -> Result<RealFormData> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Config(format!("no bundled config named {name:?}")))?;
    RealFormConfig::from_json(text)?.build()
}

pub fn all_bundled() -> Result<Vec<RealFormData>> {
    BUNDLED.iter().map(|(n, _)| bundled(n)).collect()
}

/// A bundled name, or else a path to a JSON file.
pub fn load(name_or_path: &str) -> Result<RealFormData> {
    if BUNDLED.iter().any(|(n, _)| *n == name_or_path) {
        return bundled(name_or_path);
    }
    let text = std::fs::read_to_string(name_or_path)
        .map_err(|e| Error::Config(format!("cannot read {name_or_path}: {e}")))?;
    RealFormConfig::from_json(&text)?.build()
}

fn gram_from_rows(rows: &[WeightVector]) -> Result<GramForm> {
    GramForm::new(rows.iter().map(|r| r.coords().to_vec()).collect::<Vec<Vec<Rational>>>())
}

impl RealFormConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn build(&self) -> Result<RealFormData> {
        let g = self.build_roots()?;
        let lattice = match &self.lattice_basis {
            Some(b) => Lattice::new(b.clone())?,
            None => Lattice::standard(g.rank()),
        };
        let name = if self.name.is_empty() { "custom" } else { &self.name };
        RealFormData::new(name, g, self.compact_roots.clone(), self.k_positive.clone(), lattice)
    }

    fn build_roots(&self) -> Result<RootSystemData> {
        match (&self.cartan_label, &self.roots) {
            (Some(_), Some(_)) => Err(Error::Config("give either cartan_label or roots, not both".into())),
            (None, None) => Err(Error::Config("missing cartan_label or roots".into())),
            (Some(label), None) => {
                let g = build_from_cartan_label(label, self.central_rank)?;
                if let Some(rows) = &self.gram {
                    if gram_from_rows(rows)? != *g.form() {
                        return Err(Error::Config(format!("gram does not match the form used for {label}")));
                    }
                }
                match &self.positive {
                    Some(p) => g.with_positive(p.clone()),
                    None => Ok(g),
                }
            }
            (None, Some(roots)) => {
                let rows = self.gram.as_ref().ok_or_else(|| Error::Config("explicit roots need a gram matrix".into()))?;
                let form = gram_from_rows(rows)?;
                let positive = self.positive.clone().unwrap_or_else(|| default_positive(roots));
                RootSystemData::new(roots.clone(), form, positive)
            }
        }
    }
}
