//! Run certificates: canonical JSON records of a construction that can be
//! re-checked from their raw data alone.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::groebner::buchberger;
use crate::linsys::{normalize_point, Point};
use crate::pipeline::{Construction, CoordinateChange, Pencil, RunState};
use crate::poly::{Monomial, Ring, SparsePoly};
use crate::verify::{verify_construction, Status, Verdicts};

pub const SCHEMA_VERSION: &str = "1";

/// Sparse polynomial in `x, y, z`: `[[a, b, c], coeff]` pairs in decreasing
/// term order, plus a readable rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub terms: Vec<([u16; 3], u32)>,
    pub text: String,
}

impl PolyRecord {
    pub fn from_poly(f: &SparsePoly) -> Self {
        assert_eq!(f.ring().nvars, 3);
        PolyRecord {
            terms: f
                .terms()
                .iter()
                .map(|(m, c)| ([m.exp(0), m.exp(1), m.exp(2)], c.value()))
                .collect(),
            text: f.to_string(),
        }
    }

    pub fn to_poly(&self, field: PrimeField) -> Result<SparsePoly> {
        let p = field.modulus();
        if let Some((_, c)) = self.terms.iter().find(|(_, c)| *c == 0 || *c >= p) {
            return Err(Error::Schema(format!("coefficient {c} outside 1..{p}")));
        }
        let terms: Vec<(Monomial, FieldElement)> = self
            .terms
            .iter()
            .map(|(e, c)| (Monomial::new(e), field.elem(*c as u64)))
            .collect();
        let f = SparsePoly::from_terms(Ring::plane(field), terms);
        if f.len() != self.terms.len() {
            return Err(Error::Schema("repeated monomial".into()));
        }
        Ok(f)
    }
}

/// Complete record of one run. Points are in the original coordinates;
/// polynomials are in working coordinates `w = A·v` with `A` the
/// coordinate change.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: String,
    pub prime: u32,
    pub seed: u64,
    pub retry_budget: u32,
    pub run: RunState,
    pub status: Status,
    pub coordinate_change: Vec<[u32; 3]>,
    pub points_p: Vec<[u32; 3]>,
    pub points_r: Vec<[u32; 3]>,
    pub pencil: Vec<PolyRecord>,
    /// Generators of the homogeneous ideal of `Q`.
    pub ideal_q: Vec<PolyRecord>,
    pub octic: Option<PolyRecord>,
    pub verdicts: Option<Verdicts>,
}

fn encode_point(p: &Point) -> [u32; 3] {
    p.map(|c| c.value())
}

impl Certificate {
    pub fn new(
        prime: u32,
        seed: u64,
        retry_budget: u32,
        run: RunState,
        status: Status,
        construction: Option<&Construction>,
        verdicts: Option<Verdicts>,
    ) -> Self {
        let mut cert = Certificate {
            schema_version: SCHEMA_VERSION.to_string(),
            prime,
            seed,
            retry_budget,
            run,
            status,
            coordinate_change: Vec::new(),
            points_p: Vec::new(),
            points_r: Vec::new(),
            pencil: Vec::new(),
            ideal_q: Vec::new(),
            octic: None,
            verdicts,
        };
        if let Some(c) = construction {
            let plane = Ring::plane(c.field);
            cert.coordinate_change = c
                .change
                .matrix()
                .iter()
                .map(|r| r.map(|x| x.value()))
                .collect();
            cert.points_p = c.original_p.iter().map(encode_point).collect();
            cert.points_r = c.original_r.iter().map(encode_point).collect();
            cert.pencil = vec![
                PolyRecord::from_poly(&c.pencil.f1),
                PolyRecord::from_poly(&c.pencil.f2),
            ];
            cert.ideal_q = c
                .ideal_q
                .elements()
                .iter()
                .map(|g| {
                    PolyRecord::from_poly(&g.homogenize(2, plane, g.total_degree().unwrap_or(0)))
                })
                .collect();
            cert.octic = Some(PolyRecord::from_poly(&c.octic));
        }
        cert
    }

    pub fn is_success(&self) -> bool {
        self.status == Status::Success
    }

    /// Canonical text: sorted keys, decimal integers, two-space indent,
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cert: Certificate = serde_json::from_str(text)?;
        if cert.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!(
                "unsupported schema version {:?}",
                cert.schema_version
            )));
        }
        Ok(cert)
    }

    /// Writes the canonical text; returns the number of bytes written.
    pub fn write(&self, path: impl AsRef<Path>) -> Result<usize> {
        let text = self.to_json();
        std::fs::write(path, &text)?;
        Ok(text.len())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Rebuilds the construction from the raw fields, or `None` when the
    /// certificate carries no construction data.
    pub fn construction(&self) -> Result<Option<Construction>> {
        if self.octic.is_none() && self.pencil.is_empty() {
            return Ok(None);
        }
        let field = PrimeField::new(self.prime)?;
        let elem = |v: u32| {
            if v < self.prime {
                Ok(field.elem(v as u64))
            } else {
                Err(Error::Schema(format!(
                    "coordinate {v} not reduced mod {}",
                    self.prime
                )))
            }
        };
        let point = |p: &[u32; 3]| -> Result<Point> {
            let raw = [elem(p[0])?, elem(p[1])?, elem(p[2])?];
            normalize_point(field, raw).ok_or_else(|| Error::Schema("zero point".into()))
        };
        if self.coordinate_change.len() != 3 {
            return Err(Error::Schema("coordinate change must be 3x3".into()));
        }
        let mut a = [[FieldElement::ZERO; 3]; 3];
        for (i, row) in self.coordinate_change.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                a[i][j] = elem(v)?;
            }
        }
        let change = CoordinateChange::new(field, a)?;
        let original_p = self
            .points_p
            .iter()
            .map(point)
            .collect::<Result<Vec<_>>>()?;
        let original_r = self
            .points_r
            .iter()
            .map(point)
            .collect::<Result<Vec<_>>>()?;
        let p: Vec<Point> = original_p.iter().map(|q| change.apply(q)).collect();
        let r: Vec<Point> = original_r.iter().map(|q| change.apply(q)).collect();
        if p.iter().chain(&r).any(|q| q[2].is_zero()) {
            return Err(Error::ChartViolation("recorded point lies on z = 0".into()));
        }
        let [f1, f2] = self.pencil.as_slice() else {
            return Err(Error::Schema("pencil must have two members".into()));
        };
        let pencil = Pencil {
            f1: f1.to_poly(field)?,
            f2: f2.to_poly(field)?,
        };
        let chart = Ring::chart(field);
        let q_gens = self
            .ideal_q
            .iter()
            .map(|g| Ok(g.to_poly(field)?.dehomogenize(2, chart)))
            .collect::<Result<Vec<_>>>()?;
        let octic = self
            .octic
            .as_ref()
            .ok_or_else(|| Error::Schema("missing octic".into()))?
            .to_poly(field)?;
        Ok(Some(Construction {
            field,
            change,
            original_p,
            original_r,
            p,
            r,
            pencil,
            ideal_q: buchberger(chart, &q_gens),
            octic,
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Every stored verdict was recomputed and matches.
    Reproduced,
    /// Some stored verdict disagrees with the recomputation.
    Tampered,
    /// Recomputation matches but a reducedness test was inconclusive.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverifyReport {
    /// One entry per recorded check: name and whether it was reproduced.
    pub checks: Vec<(String, bool)>,
    pub status: Status,
    pub outcome: Outcome,
}

impl ReverifyReport {
    pub fn mismatches(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

/// Recomputes every verdict from the raw data of `cert` and compares with
/// the stored ones. Nothing stored is trusted.
pub fn reverify(cert: &Certificate) -> Result<ReverifyReport> {
    let construction = cert.construction()?;
    let recomputed = construction
        .as_ref()
        .map(|c| verify_construction(c, cert.seed));
    let mut checks = Vec::new();
    match (&recomputed, &cert.verdicts) {
        (Some(new), Some(old)) => {
            let (new_v, old_v) = (serde_json::to_value(new)?, serde_json::to_value(old)?);
            let (new_m, old_m) = (new_v.as_object().unwrap(), old_v.as_object().unwrap());
            for (name, value) in new_m {
                checks.push((name.clone(), old_m.get(name) == Some(value)));
            }
            for name in old_m.keys().filter(|k| !new_m.contains_key(*k)) {
                checks.push((name.clone(), false));
            }
        }
        (None, None) => {}
        _ => checks.push(("verdicts".to_string(), false)),
    }
    let status = match &recomputed {
        Some(v) => v.status(),
        None => match &cert.status {
            // without data only a failure before any construction is possible
            Status::Failed { .. } if cert.run.exhausted => cert.status.clone(),
            _ => Status::failed("certificate", "no construction data"),
        },
    };
    checks.push(("status".to_string(), status == cert.status));
    let outcome = if checks.iter().any(|(_, ok)| !ok) {
        Outcome::Tampered
    } else if matches!(status, Status::Undecided { .. }) {
        Outcome::Undecided
    } else {
        Outcome::Reproduced
    };
    Ok(ReverifyReport {
        checks,
        status,
        outcome,
    })
}

pub fn reverify_path(path: impl AsRef<Path>) -> Result<ReverifyReport> {
    reverify(&Certificate::read(path)?)
}
