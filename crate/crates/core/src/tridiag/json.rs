//! JSON operator format:
//! `{"diag": [{"re": x, "im": y}, ...], "sub": [...], "sup": [...], "pseudo_symmetric": bool}`.

use serde::{Deserialize, Serialize};

use super::TridiagonalOperator;
use crate::error::{Error, Result};
use crate::scalar::Cplx;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Cplx<f64>> for ComplexJson {
    fn from(z: Cplx<f64>) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Cplx<f64> {
    fn from(z: ComplexJson) -> Self {
        Cplx::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorJson {
    pub diag: Vec<ComplexJson>,
    pub sub: Vec<ComplexJson>,
    pub sup: Vec<ComplexJson>,
    #[serde(default)]
    pub pseudo_symmetric: bool,
}

impl From<&TridiagonalOperator<f64>> for OperatorJson {
    fn from(op: &TridiagonalOperator<f64>) -> Self {
        let conv = |v: &[Cplx<f64>]| v.iter().map(|&z| z.into()).collect();
        Self { diag: conv(op.diag()), sub: conv(op.sub()), sup: conv(op.sup()), pseudo_symmetric: op.is_pseudo_symmetric() }
    }
}

impl TryFrom<OperatorJson> for TridiagonalOperator<f64> {
    type Error = Error;

    fn try_from(j: OperatorJson) -> Result<Self> {
        let conv = |v: Vec<ComplexJson>| v.into_iter().map(Cplx::from).collect();
        TridiagonalOperator::new(conv(j.diag), conv(j.sub), conv(j.sup))?.with_pseudo_symmetric(j.pseudo_symmetric)
    }
}

impl TridiagonalOperator<f64> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&OperatorJson::from(self)).expect("operator serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: OperatorJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        j.try_into()
    }
}
