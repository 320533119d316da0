//! JSON forms of the public data types, pinned to the exact rational
//! scalar.
//!
//! Coefficients and bounds are strings in reduced `p/q` form (`/q` omitted
//! when the denominator is one); polynomial entries are comma-separated
//! coefficient lists, constant term first; permutations use the one-line
//! ASCII form with `-` for a bar. Serialization is canonical: parsing and
//! re-serializing any accepted input yields a stable byte string.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::bases::{BasisFamily, BasisId};
use crate::chen::{ChenError, Window};
use crate::model::Model;
use crate::perm::{PermError, SignedPermutation, SubsetMask};
use crate::poly::{Matrix, Poly, PolyMatrix, Projector};
use crate::series::GradedSeries;
use crate::{Rat, RatElement, RatModel, RatPoly, RatSeries};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot parse {0:?} as an exact rational")]
    Rational(String),
    #[error("model projector entries must be 0 or 1")]
    ProjectorEntry,
    #[error("model matrix must be {0}x{0}")]
    MatrixShape(usize),
    #[error("unknown basis family {0:?}")]
    Family(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Chen(#[from] ChenError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub fn parse_rational(s: &str) -> Result<Rat, IoError> {
    Rat::from_str(s.trim()).map_err(|_| IoError::Rational(s.to_string()))
}

pub fn rational_string(r: &Rat) -> String {
    r.to_string()
}

pub fn poly_string(p: &RatPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .map(rational_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn poly_from_string(s: &str) -> Result<RatPoly, IoError> {
    let coeffs = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermJson {
    pub perm: String,
    pub coef: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ElementJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

pub fn element_to_json(e: &RatElement) -> ElementJson {
    ElementJson {
        degree: e.degree(),
        terms: e
            .terms()
            .map(|(p, c)| TermJson {
                perm: p.to_string(),
                coef: rational_string(c),
            })
            .collect(),
    }
}

pub fn element_from_json(j: &ElementJson) -> Result<RatElement, IoError> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        let p: SignedPermutation = t.perm.parse()?;
        terms.push((p, parse_rational(&t.coef)?));
    }
    Ok(AlgebraElement::from_terms(j.degree, terms)?)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SeriesJson {
    pub parts: Vec<ElementJson>,
}

pub fn series_to_json(s: &RatSeries) -> SeriesJson {
    SeriesJson {
        parts: s.parts().map(element_to_json).collect(),
    }
}

pub fn series_from_json(j: &SeriesJson) -> Result<RatSeries, IoError> {
    let mut s = GradedSeries::zero();
    for part in &j.parts {
        s.set_part(element_from_json(part)?);
    }
    Ok(s)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BasisIdJson {
    pub family: String,
    pub n: usize,
    #[serde(rename = "S")]
    pub subset: Vec<usize>,
}

pub fn basis_id_to_json(id: &BasisId) -> BasisIdJson {
    BasisIdJson {
        family: id.family.to_string(),
        n: id.n,
        subset: id.subset.members(),
    }
}

pub fn basis_id_from_json(j: &BasisIdJson) -> Result<BasisId, IoError> {
    let family = match j.family.as_str() {
        "R" => BasisFamily::R,
        "T" => BasisFamily::T,
        "D" => BasisFamily::D,
        other => return Err(IoError::Family(other.to_string())),
    };
    let subset = SubsetMask::new(j.n, &j.subset)?;
    Ok(BasisId::new(family, j.n, subset)?)
}

/// On-disk model: `H` as a dim x dim array of polynomial strings, `P` as a
/// diagonal 0/1 pattern, bounds as exact rational strings.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ModelJson {
    pub dim: usize,
    #[serde(rename = "H")]
    pub h: Vec<Vec<String>>,
    #[serde(rename = "P")]
    pub p: Vec<u8>,
    pub lower: String,
    pub upper: String,
}

pub fn model_to_json(m: &RatModel) -> ModelJson {
    let dim = m.dim();
    let h = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| poly_string(m.perturbation().get(r, c)))
                .collect()
        })
        .collect();
    ModelJson {
        dim,
        h,
        p: m.projector().diag().iter().map(|&b| u8::from(b)).collect(),
        lower: rational_string(m.window().lower()),
        upper: rational_string(m.window().upper()),
    }
}

pub fn model_from_json(j: &ModelJson) -> Result<RatModel, IoError> {
    if j.h.len() != j.dim || j.h.iter().any(|row| row.len() != j.dim) || j.p.len() != j.dim {
        return Err(IoError::MatrixShape(j.dim));
    }
    let mut h = PolyMatrix::zero(j.dim);
    for (r, row) in j.h.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            h.set(r, c, poly_from_string(entry)?);
        }
    }
    let diag =
        j.p.iter()
            .map(|&v| match v {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(IoError::ProjectorEntry),
            })
            .collect::<Result<Vec<_>, _>>()?;
    let window = Window::new(parse_rational(&j.lower)?, parse_rational(&j.upper)?)?;
    Ok(Model::new(h, Projector::new(diag), window)?)
}

pub fn matrix_rows(m: &Matrix<Rat>) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|row| row.iter().map(rational_string).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&ratio(-1, 2)), "-1/2");
        assert_eq!(rational_string(&int(3)), "3");
        assert_eq!(parse_rational("3/1").unwrap(), int(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn element_roundtrip() {
        let mut e = RatElement::zero(2);
        e.add_term("2 -1".parse().unwrap(), ratio(1, 2));
        e.add_term("1 2".parse().unwrap(), int(-3));
        let j = element_to_json(&e);
        assert_eq!(element_from_json(&j).unwrap(), e);
        let s = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&s).unwrap();
        assert_eq!(element_from_json(&back).unwrap(), e);
    }

    #[test]
    fn model_roundtrip_is_canonical() {
        let text = r#"{
            "dim": 2,
            "H": [["0,1", "2"], ["-1/2,0,3", "0"]],
            "P": [1, 0],
            "lower": "-1",
            "upper": "0"
        }"#;
        let j: ModelJson = serde_json::from_str(text).unwrap();
        let m = model_from_json(&j).unwrap();
        let out = serde_json::to_string(&model_to_json(&m)).unwrap();
        let again: ModelJson = serde_json::from_str(&out).unwrap();
        assert_eq!(
            serde_json::to_string(&model_to_json(&model_from_json(&again).unwrap())).unwrap(),
            out
        );
        assert!(model_from_json(&ModelJson {
            p: vec![2, 0],
            ..j.clone()
        })
        .is_err());
        let bad_shape = ModelJson {
            h: vec![vec!["0".into()]],
            ..j
        };
        assert!(model_from_json(&bad_shape).is_err());
    }

    #[test]
    fn basis_id_json() {
        let id = basis_id_from_json(&BasisIdJson {
            family: "T".into(),
            n: 3,
            subset: vec![1],
        })
        .unwrap();
        let j = basis_id_to_json(&id);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"family":"T","n":3,"S":[1]}"#
        );
        assert!(basis_id_from_json(&BasisIdJson {
            family: "Q".into(),
            n: 1,
            subset: vec![]
        })
        .is_err());
    }
}
