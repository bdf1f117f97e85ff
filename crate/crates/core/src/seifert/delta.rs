//! Dispatch for `delta` over lens spaces and three-fiber data.

use serde::Serialize;

use super::engine::{delta_engine_with, SearchConfig};
use super::table::{classify, delta_table, Classification, DeltaCaseId};
use super::{LensSpace, SeifertData, SeifertError, SpinAssignment};
use crate::arith::Int;
use crate::sigma::sigma;

#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Lens(LensSpace),
    Seifert(SeifertData, SpinAssignment),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaReport {
    #[serde(with = "crate::arith::json_int")]
    pub delta: Int,
    pub row: DeltaCaseId,
    pub reversed: bool,
    /// Engine value, present when its search found a representative.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_int")]
    pub engine: Option<Int>,
}

fn opt_int<S: serde::Serializer>(v: &Option<Int>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => crate::arith::json_int::serialize(x, s),
        None => s.serialize_none(),
    }
}

pub fn delta(t: &Target) -> Result<DeltaReport, SeifertError> {
    match t {
        Target::Lens(l) => delta_lens(l),
        Target::Seifert(s, c) => delta_seifert(s, c, &SearchConfig::from_env()),
    }
}

pub fn delta_lens(l: &LensSpace) -> Result<DeltaReport, SeifertError> {
    let v = sigma(&l.q, &l.p, l.eps)?;
    Ok(DeltaReport { delta: v, row: DeltaCaseId::lens(l), reversed: false, engine: None })
}

/// Table value for the classified row, checked against the engine whenever
/// the engine finds a representative.
pub fn delta_seifert(s: &SeifertData, c: &SpinAssignment, cfg: &SearchConfig) -> Result<DeltaReport, SeifertError> {
    let Classification { id, reversed } = classify(s, c)?;
    let t = delta_table(&id)?;
    let value = if reversed { -t } else { t };
    let engine = match delta_engine_with(s, c, cfg) {
        Ok(v) => Some(v),
        Err(SeifertError::NoAdmissibleRearrangement { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(e) = &engine {
        if *e != value {
            return Err(SeifertError::InternalDisagreement { table: value, engine: e.clone(), input: format!("{s} {c}") });
        }
    }
    Ok(DeltaReport { delta: value, row: id, reversed, engine })
}
