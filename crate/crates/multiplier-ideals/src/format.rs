//! JSON input documents and parsing.
//!
//! The input schema:
//!
//! ```json
//! {
//!   "name": "two-cusps",
//!   "exceptional": 5,
//!   "total": 5,
//!   "matrix": [[-5, 0, 1, 0, 1], ...],
//!   "f": [4, 5, 10, 5, 10],
//!   "labels": ["E1", "E2", "E3", "E4", "E5"],
//!   "notes": "optional free-form metadata"
//! }
//! ```
//!
//! `matrix` holds the `exceptional` rows of the intersection pairing against
//! all `total` components; `labels` and `notes` are optional. Rationals in
//! any JSON output are strings, `"p/q"` or `"p"`.

use serde::{Deserialize, Serialize};

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::resolution::ResolutionData;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolutionDoc {
    pub name: String,
    pub exceptional: usize,
    pub total: usize,
    pub matrix: Vec<Vec<i64>>,
    pub f: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl ResolutionDoc {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn to_resolution(&self) -> Result<ResolutionData> {
        if self.f.len() != self.total {
            return Err(Error::InvalidInput(format!(
                "f has {} values, expected total = {}",
                self.f.len(),
                self.total
            )));
        }
        ResolutionData::new(
            self.name.clone(),
            self.exceptional,
            self.matrix.clone(),
            Divisor::from_ints(&self.f),
            self.labels.clone(),
        )
    }

    pub fn from_resolution(data: &ResolutionData) -> Result<Self> {
        let f = data
            .f()
            .iter()
            .map(|v| {
                if !v.is_integer() {
                    return Err(Error::NonIntegral(data.f().clone()));
                }
                i64::try_from(v.numer().clone())
                    .map_err(|_| Error::InvalidInput("F value exceeds the document range".into()))
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(ResolutionDoc {
            name: data.name().to_string(),
            exceptional: data.exceptional_count(),
            total: data.total_count(),
            matrix: data.matrix().to_vec(),
            f,
            labels: Some(data.labels().to_vec()),
            notes: None,
        })
    }
}

/// Parses an input document and validates it; the report travels with the
/// error when a mandatory check fails.
pub fn parse_resolution(json: &str) -> Result<(ResolutionData, ResolutionDoc)> {
    let doc = ResolutionDoc::parse(json)?;
    let data = doc.to_resolution()?;
    let report = data.validate();
    if !report.is_valid() {
        return Err(Error::Validation(report));
    }
    Ok((data, doc))
}

/// Renders a reduced divisor as a sum of component labels, e.g. `E1+E3+E5`.
pub fn support_sum(data: &ResolutionData, g: &Divisor) -> String {
    let support = g.support();
    if support.is_empty() {
        return "0".to_string();
    }
    support.iter().map(|&i| data.label(i)).collect::<Vec<_>>().join("+")
}

/// Parses a divisor given as a `0/1` bitmask (`01101`), as a `+`- or
/// comma-separated list of component labels, or as a comma-separated list
/// of rational values of full length.
pub fn parse_divisor_arg(data: &ResolutionData, arg: &str) -> Result<Divisor> {
    let s = data.total_count();
    let arg = arg.trim();
    if arg == "0" {
        return Ok(Divisor::zeros(s));
    }
    if arg.len() == s && arg.chars().all(|c| c == '0' || c == '1') {
        let support: Vec<usize> =
            arg.chars().enumerate().filter_map(|(i, c)| (c == '1').then_some(i)).collect();
        return Ok(Divisor::from_support(s, &support));
    }
    let parts: Vec<&str> = arg.split([',', '+']).map(str::trim).filter(|p| !p.is_empty()).collect();
    if !parts.is_empty() && parts.iter().all(|p| data.label_index(p).is_some()) {
        let support: Vec<usize> =
            parts.iter().map(|p| data.label_index(p).expect("checked above")).collect();
        return Ok(Divisor::from_support(s, &support));
    }
    if parts.len() == s {
        let values = parts
            .iter()
            .map(|p| p.parse::<Rational>().map_err(|e| Error::InvalidInput(e.to_string())))
            .collect::<Result<Vec<Rational>>>()?;
        return Ok(Divisor::from_values(values));
    }
    Err(Error::InvalidInput(format!(
        "cannot read divisor {arg:?}: expected a {s}-character 0/1 mask, component labels, or {s} comma-separated values"
    )))
}
