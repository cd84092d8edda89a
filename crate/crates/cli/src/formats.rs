//! Versioned JSON formats. Every document names its schema and unknown
//! fields are rejected.

use std::collections::BTreeMap;

use lrc_core::code::LocalStructure;
use lrc_core::verify::{Mode, Verdict, VerifyReport, Witness};
use lrc_core::{FieldSpec, Graph, LinearCode, Mat, Role};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::CliError;

pub const CODE_SCHEMA: &str = "lrc.code/v1";
pub const MATRIX_SCHEMA: &str = "lrc.matrix/v1";
pub const GRAPH_SCHEMA: &str = "lrc.graph/v1";
pub const VERIFY_SCHEMA: &str = "lrc.verify/v1";
pub const BOUND_SCHEMA: &str = "lrc.bound/v1";
pub const MANIFEST_SCHEMA: &str = "lrc.manifest/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub p: u32,
    pub m: u32,
    /// Lowest degree first, leading 1 included; empty for prime fields.
    pub modulus: Vec<u32>,
}

impl FieldJson {
    pub fn of(spec: &FieldSpec) -> Self {
        FieldJson { p: spec.p(), m: spec.m(), modulus: spec.modulus().to_vec() }
    }

    pub fn spec(&self) -> Result<FieldSpec, CliError> {
        Ok(FieldSpec::new(self.p, self.m, Some(&self.modulus))?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub schema: String,
    pub field: FieldJson,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u32>>,
}

impl MatrixJson {
    pub fn of(m: &Mat) -> Self {
        MatrixJson {
            schema: MATRIX_SCHEMA.into(),
            field: FieldJson::of(m.spec()),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.to_rows(),
        }
    }

    pub fn to_mat(&self) -> Result<Mat, CliError> {
        check_schema(&self.schema, MATRIX_SCHEMA)?;
        let spec = self.field.spec()?;
        let m = matrix_from_rows(&spec, &self.entries, self.cols)?;
        if m.rows() != self.rows {
            return Err(CliError::Format(format!("declared {} rows, found {}", self.rows, m.rows())));
        }
        Ok(m)
    }
}

fn matrix_from_rows(spec: &FieldSpec, rows: &[Vec<u32>], cols: usize) -> Result<Mat, CliError> {
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Format(format!("every row must have {cols} entries")));
    }
    if rows.is_empty() {
        return Ok(Mat::zeros(spec, 0, cols));
    }
    Ok(Mat::from_rows(spec, rows)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalJson {
    pub groups: Vec<Vec<usize>>,
    pub local_parities: usize,
    pub global_parities: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeJson {
    pub schema: String,
    pub field: FieldJson,
    pub n: usize,
    pub k: usize,
    pub parity_check: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_min: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local: Option<LocalJson>,
    /// Free-form construction details; carried along, never interpreted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
}

impl CodeJson {
    pub fn of(c: &LinearCode, provenance: Option<Value>) -> Self {
        CodeJson {
            schema: CODE_SCHEMA.into(),
            field: FieldJson::of(c.spec()),
            n: c.n(),
            k: c.k(),
            parity_check: c.parity_check().to_rows(),
            r: c.params.r,
            t: c.params.t,
            d_min: c.params.d_min,
            role: c.params.role.map(|r| r.as_str().to_owned()),
            local: c.local.as_ref().map(|l| LocalJson {
                groups: l.groups.clone(),
                local_parities: l.local_parities,
                global_parities: l.global_parities,
            }),
            provenance,
        }
    }

    pub fn to_code(&self) -> Result<LinearCode, CliError> {
        check_schema(&self.schema, CODE_SCHEMA)?;
        let spec = self.field.spec()?;
        let h = matrix_from_rows(&spec, &self.parity_check, self.n)?;
        let mut c = LinearCode::from_parity(h);
        if c.k() != self.k {
            return Err(CliError::Format(format!("declared k = {}, parity-check matrix gives {}", self.k, c.k())));
        }
        let role = match &self.role {
            Some(s) => Some(Role::parse(s).ok_or_else(|| CliError::Format(format!("unknown role {s:?}")))?),
            None => None,
        };
        c.params.r = self.r;
        c.params.t = self.t;
        c.params.d_min = self.d_min;
        c.params.role = role;
        if let Some(l) = &self.local {
            if let Some(&bad) = l.groups.iter().flatten().find(|&&j| j >= self.n) {
                return Err(CliError::Format(format!("group index {bad} out of range")));
            }
            c = c.with_local(LocalStructure {
                groups: l.groups.clone(),
                local_parities: l.local_parities,
                global_parities: l.global_parities,
            });
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub schema: String,
    pub nodes: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub labels: BTreeMap<String, Vec<usize>>,
}

impl GraphJson {
    pub fn of(g: &Graph) -> Self {
        GraphJson {
            schema: GRAPH_SCHEMA.into(),
            nodes: g.node_count(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            labels: g.labels.clone(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, CliError> {
        check_schema(&self.schema, GRAPH_SCHEMA)?;
        let mut g = Graph::new(self.nodes, self.edges.iter().map(|e| (e[0], e[1])).collect())?;
        g.labels = self.labels.clone();
        Ok(g)
    }
}

fn check_schema(found: &str, want: &str) -> Result<(), CliError> {
    if found == want {
        Ok(())
    } else {
        Err(CliError::Format(format!("schema {found:?}, expected {want:?}")))
    }
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Pattern(p) => json!({ "kind": "pattern", "indices": p }),
        Witness::Cycle(c) => json!({ "kind": "cycle", "columns": c }),
        Witness::Coordinate(i) => json!({ "kind": "coordinate", "index": i }),
        Witness::Profile(p) => json!({ "kind": "staircase", "s": p.s, "cols": p.cols, "rows": p.rows }),
        Witness::Partition(p) => json!({ "kind": "partition", "mds_blocks": p.mds_blocks, "graph_part": p.graph_part }),
        Witness::Note(s) => json!({ "kind": "note", "text": s }),
    }
}

pub fn report_json(rep: &VerifyReport) -> Value {
    let mode = match rep.mode {
        Mode::Exhaustive => json!({ "kind": "exhaustive" }),
        Mode::Certificate => json!({ "kind": "certificate" }),
        Mode::Sampled { seed, samples } => json!({ "kind": "sampled", "seed": seed, "samples": samples }),
    };
    json!({
        "schema": VERIFY_SCHEMA,
        "property": rep.property,
        "verdict": if rep.verdict == Verdict::Pass { "pass" } else { "fail" },
        "mode": mode,
        "witness": rep.witness.as_ref().map(witness_json),
        // u128 does not fit every JSON reader; strings keep it exact
        "checked": rep.checked.to_string(),
        "budget": rep.budget.to_string(),
        "notes": rep.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lrc_core::construct_seq::moore_code;
    use lrc_core::mr::mr_rdelta2;

    #[test]
    fn code_survives_json() {
        for c in [moore_code(2, 4).unwrap(), mr_rdelta2(2, 2, 2, 4).unwrap()] {
            let text = serde_json::to_string(&CodeJson::of(&c, None)).unwrap();
            let back: CodeJson = serde_json::from_str(&text).unwrap();
            let d = back.to_code().unwrap();
            assert_eq!(d.parity_check(), c.parity_check());
            assert_eq!(d.params, c.params);
            assert_eq!(d.local, c.local);
        }
    }

    #[test]
    fn unknown_fields_and_schemas_rejected() {
        let c = moore_code(2, 4).unwrap();
        let mut v = serde_json::to_value(CodeJson::of(&c, None)).unwrap();
        v["extra"] = json!(1);
        assert!(serde_json::from_value::<CodeJson>(v).is_err());
        let mut j = CodeJson::of(&c, None);
        j.schema = "lrc.code/v0".into();
        assert!(matches!(j.to_code(), Err(CliError::Format(_))));
        let mut j = CodeJson::of(&c, None);
        j.k += 1;
        assert!(j.to_code().is_err());
    }

    #[test]
    fn graph_and_matrix_read_back() {
        let g = lrc_core::graph::petersen();
        assert_eq!(GraphJson::of(&g).to_graph().unwrap(), g);
        let m = moore_code(2, 4).unwrap().parity_check().clone();
        assert_eq!(MatrixJson::of(&m).to_mat().unwrap(), m);
    }
}
