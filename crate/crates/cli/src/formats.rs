//! Quiver files, vector arguments, and the JSON/CSV encodings of results.

use std::path::Path;

use num_bigint::BigInt;
use quiverkac_core::quiver::builtin;
use quiverkac_core::{DimVector, Poly, Quiver, RationalFunction};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"vertices": [...], "arrows": [{"from": .., "to": ..}, ...]}`; repeated arrows add multiplicity.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub from: String,
    pub to: String,
}

impl QuiverFile {
    pub fn parse(text: &str) -> Result<Quiver, CliError> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| CliError::Domain(format!("malformed quiver file: {e}")))?;
        let arrows: Vec<(String, String)> = file.arrows.into_iter().map(|a| (a.from, a.to)).collect();
        Ok(Quiver::new(&file.vertices, &arrows)?)
    }

    pub fn from_quiver(q: &Quiver) -> Self {
        let v = q.vertices();
        QuiverFile {
            vertices: v.to_vec(),
            arrows: q.arrows().iter().map(|&(s, t)| ArrowEntry { from: v[s].clone(), to: v[t].clone() }).collect(),
        }
    }
}

/// A path to a quiver file, or one of the built-in names when no such file exists.
pub fn load_quiver(spec: &str) -> Result<Quiver, CliError> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("cannot read {spec}: {e}")))?;
        return QuiverFile::parse(&text);
    }
    builtin::by_name(spec).ok_or_else(|| {
        CliError::Domain(format!(
            "{spec:?} is neither a quiver file nor a built-in name (a1, a2, a3, d4, kronecker<m>, triangle)"
        ))
    })
}

/// Parses `1,0,2` into a vector.
pub fn parse_vector(s: &str) -> Result<DimVector, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("{t:?} is not a non-negative integer")))
        .collect::<Result<Vec<_>, _>>()
        .map(DimVector::new)
}

pub fn entries(v: &DimVector) -> Vec<u32> {
    v.entries().to_vec()
}

pub fn int_strings(coeffs: &[BigInt]) -> Vec<String> {
    coeffs.iter().map(|c| c.to_string()).collect()
}

/// `{"num": [...], "den": [...]}` with ascending coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl RationalJson {
    pub fn of(f: &RationalFunction) -> Self {
        RationalJson { num: int_strings(f.numerator().coeffs()), den: int_strings(f.denominator().coeffs()) }
    }

    pub fn of_poly(p: &Poly) -> Self {
        Self::of(&RationalFunction::from_poly(p.clone()))
    }
}

/// Joins a list for a single CSV cell.
pub fn cell<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

/// A command result in both encodings.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: String,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new<T: Serialize>(value: &T, csv_header: Vec<&'static str>, csv_rows: Vec<Vec<String>>) -> Self {
        let json = serde_json::to_string(value).expect("reports serialize");
        Report { json, csv_header, csv_rows }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.csv_header).expect("in-memory write");
        for row in &self.csv_rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}
