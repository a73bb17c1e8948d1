//! The colouring document exchanged on the command line, and its verifier.
//!
//! ```json
//! {"version":1,"P":4,"distances":[5],"b":1,"c":1,"colors":"BBWW",
//!  "construction":{"per_prime":[{"q":2,"t":1,"modulus":4,"residues":[1]}],
//!                  "crt":[1],"lifted":[5]}}
//! ```
//!
//! `colors` is omitted when only a multitiling certificate exists; the
//! certificate then appears under `multitiling`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::admissibility::{check_graph_condition, AdmissibilityError, ConstructionWitness};
use crate::coloring::{is_perfect_coloring, structured_tile, CirculantSpec, Coloring, ColoringError};
use crate::tiling::{verify_multitiling, MultitilingWitness, Tile, TilingError};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported document version {0}")]
    Version(u32),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Admissibility(#[from] AdmissibilityError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeResiduesDoc {
    pub q: u64,
    pub t: u32,
    pub modulus: u64,
    pub residues: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionDoc {
    pub per_prime: Vec<PrimeResiduesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crt: Option<Vec<u64>>,
    pub lifted: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultitilingDoc {
    pub values: Vec<i64>,
    /// Coefficients of `R_v`, ascending.
    pub multiplier: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub version: u32,
    #[serde(rename = "P")]
    pub modulus: u64,
    pub distances: Vec<u64>,
    pub b: u64,
    pub c: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multitiling: Option<MultitilingDoc>,
}

impl ColoringDocument {
    pub fn from_coloring(spec: &CirculantSpec, coloring: &Coloring) -> Self {
        Self {
            version: DOCUMENT_VERSION,
            modulus: spec.modulus(),
            distances: spec.distances().to_vec(),
            b: coloring.b(),
            c: coloring.c(),
            colors: Some(coloring.to_string()),
            construction: None,
            multitiling: None,
        }
    }

    pub fn from_witness(witness: &ConstructionWitness, multitiling: Option<&MultitilingWitness>) -> Self {
        let per_prime = witness
            .per_prime
            .iter()
            .map(|p| PrimeResiduesDoc {
                q: p.q,
                t: p.t,
                modulus: p.modulus,
                residues: p.residues.clone(),
            })
            .collect();
        Self {
            version: DOCUMENT_VERSION,
            modulus: witness.spec.modulus(),
            distances: witness.spec.distances().to_vec(),
            b: witness.params.b(),
            c: witness.params.c(),
            colors: witness.coloring.as_ref().map(|c| c.to_string()),
            construction: Some(ConstructionDoc {
                per_prime,
                crt: Some(witness.crt_distances.clone()),
                lifted: witness.spec.distances().to_vec(),
            }),
            multitiling: multitiling.map(|m| MultitilingDoc {
                values: m.tile.values().to_vec(),
                multiplier: m.multiplier.coeffs().to_vec(),
            }),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text)?;
        if doc.version != DOCUMENT_VERSION {
            return Err(DocumentError::Version(doc.version));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn spec(&self) -> Result<CirculantSpec, ColoringError> {
        CirculantSpec::new(self.modulus, self.distances.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub checks: Vec<Check>,
}

/// Re-checks every claim a document makes from scratch.
///
/// Structural problems (bad colour string, empty distance list, zero
/// parameters) are errors; mathematical failures are reported as failed
/// checks.
pub fn verify_document(doc: &ColoringDocument) -> Result<VerifyReport, DocumentError> {
    let spec = doc.spec()?;
    let mut checks = Vec::new();
    let mut check = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    if let Some(colors) = &doc.colors {
        let coloring = Coloring::parse(colors, doc.b, doc.c)?;
        if coloring.modulus() != spec.modulus() {
            check(
                "colors_length",
                false,
                format!("{} colours for P = {}", coloring.modulus(), spec.modulus()),
            );
        } else {
            let perfect = is_perfect_coloring(&spec, &coloring)?;
            check("perfect_coloring", perfect, format!("({}, {}) on {} vertices", doc.b, doc.c, spec.modulus()));
        }
    }

    if spec.modulus() >= 2 {
        let graph = check_graph_condition(&spec, doc.b, doc.c)?;
        check(
            "graph_condition",
            graph.passes,
            format!("S̃_P(1) = {}, N = {}", graph.s_tilde_at_one, graph.reduced_sum),
        );
    }

    if let Some(cons) = &doc.construction {
        let k = spec.distances().len();
        let congruent = cons.per_prime.iter().all(|p| {
            p.modulus > 0
                && p.residues.len() == k
                && spec
                    .distances()
                    .iter()
                    .zip(&p.residues)
                    .all(|(l, r)| l % p.modulus == r % p.modulus)
        });
        check("residues", congruent, format!("{} prime factors", cons.per_prime.len()));
        check(
            "lifted",
            cons.lifted == spec.distances(),
            "lifted distances match the graph".to_string(),
        );
        if let Some(crt) = &cons.crt {
            let lifts = crt.len() == k
                && crt
                    .iter()
                    .zip(spec.distances())
                    .all(|(a, l)| a <= l && (l - a) % spec.modulus() == 0);
            check("crt", lifts, "distances lift the CRT solutions by multiples of P".to_string());
        }
    }

    if let Some(mt) = &doc.multitiling {
        let v = Tile::new(mt.values.clone())?;
        let u = structured_tile(&spec, doc.b, doc.c);
        let ok = v.modulus() == u.modulus() && verify_multitiling(&u, &v, doc.c as i64)?;
        check("multitiling", ok, format!("{}-multitiling by the structured tile", doc.c));
    }

    let valid = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { valid, checks })
}
