//! Drivers behind the command-line subcommands. Every report serializes
//! to JSON; the text format flattens the same JSON into `path = value`
//! lines.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::chartab::block::BlockJson;
use crate::chartab::{block_data, CharacterTable, TableJson};
use crate::error::{Error, Result};
use crate::groups::FamilyTag;
use crate::isometry::{group_report, perf_enumerate, GroupReport};
use crate::matring::{normalizer_report, NormalizerMethod, NormalizerReport, OddShape};
use crate::picassembly::{ingredient_report_for_sl28, verify_case, CaseSpec, Sl28Report, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartabReport {
    /// Absent for blocks given only by decomposition data.
    pub table: Option<TableJson>,
    pub principal_block: BlockJson,
    /// Table rows in the principal block; other rows lie outside it.
    pub block_rows: Vec<usize>,
}

pub fn cmd_chartab(family: &str) -> Result<ChartabReport> {
    let tag: FamilyTag = family.parse()?;
    let block = block_data(&tag)?;
    let table = match &block.table {
        Some(t) => Some(t.to_json()),
        None if tag == FamilyTag::AutSL28 => None,
        None => Some(CharacterTable::for_family(&tag)?.to_json()),
    };
    Ok(ChartabReport {
        table,
        principal_block: block.to_json(),
        block_rows: block.chars.clone(),
    })
}

pub fn cmd_perf(family: &str) -> Result<GroupReport> {
    let tag: FamilyTag = family.parse()?;
    let block = block_data(&tag)?;
    let e = perf_enumerate(&block)?;
    group_report(&block.name, &e.group, Some(e.stats))
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyBundle {
    pub reports: Vec<VerificationReport>,
    /// Present when verifying every case.
    pub sl28_ingredients: Option<Sl28Report>,
    pub all_passed: bool,
}

fn sl28_ok(r: &Sl28Report) -> bool {
    r.hom_part_order == 3
        && r.normalizer_quotient_order == 1
        && r.fixed_degrees == [21, 27]
        && r.cycle_type == [1, 1, 3, 3]
        && r.distinct_permutations == 3
        && r.decomposition_compatible
        && r.cells_preserved
}

/// `spec` is a case tag or `all`.
pub fn cmd_verify(spec: &str, max_n: u32, max_p: usize) -> Result<VerifyBundle> {
    if spec == "all" {
        let cases = CaseSpec::all(max_n, max_p);
        let reports = cases
            .par_iter()
            .map(|c| verify_case(c).map_err(|e| with_case(c, e)))
            .collect::<Result<Vec<_>>>()?;
        let sl = ingredient_report_for_sl28()?;
        let all_passed = reports.iter().all(|r| r.passed) && sl28_ok(&sl);
        return Ok(VerifyBundle {
            reports,
            sl28_ingredients: Some(sl),
            all_passed,
        });
    }
    let case: CaseSpec = spec.parse()?;
    case.check_caps(max_n, max_p)?;
    let r = verify_case(&case).map_err(|e| with_case(&case, e))?;
    Ok(VerifyBundle {
        all_passed: r.passed,
        reports: vec![r],
        sl28_ingredients: None,
    })
}

fn with_case(c: &CaseSpec, e: Error) -> Error {
    match e {
        Error::Verification { claim, .. } => Error::Verification {
            case: c.to_string(),
            claim,
        },
        other => other,
    }
}

pub fn cmd_outgrp(k: usize, n: u32, subgroup: &str) -> Result<NormalizerReport> {
    normalizer_report(k, n, OddShape::parse(subgroup)?, NormalizerMethod::Auto)
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        _ => out.push(format!("{prefix} = {v}")),
    }
}

/// Renders a report; output is byte-stable for equal inputs.
pub fn render<T: Serialize>(report: &T, format: Format) -> Result<String> {
    let v = serde_json::to_value(report).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))? + "\n",
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", &v, &mut lines);
            lines.join("\n") + "\n"
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drivers() {
        let t = cmd_chartab("A5").unwrap();
        assert_eq!(t.block_rows, vec![0, 1, 2, 4]);
        assert_eq!(t.table.unwrap().characters[3].degree, 4);
        assert_eq!(cmd_chartab("P(1)xG(1)").unwrap().table.unwrap().characters.len(), 8);
        assert_eq!(cmd_perf("G(1)").unwrap().order, 48);
        let v = cmd_verify("thm-main-v,n=1", 2, 4).unwrap();
        assert!(v.all_passed);
        assert_eq!(v.reports[0].order, 21);
        assert_eq!(cmd_outgrp(3, 1, "C7:C3").unwrap().quotient_order, 1);
        assert!(render(&cmd_outgrp(2, 1, "C3").unwrap(), Format::Text).unwrap().contains("quotient_order = 2"));
    }
}
