//! Verification of an assembled realization.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{assemble, focal_subgroup, out_dff, CaseSpec, PicRealization, GeneratorSource};
use crate::error::Result;
use crate::groups::iso_test;
use crate::isometry::{morita_constraints, PerfectnessChecker};
use crate::matring::NormalizerMethod;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceAccounting {
    pub out_da_order: usize,
    pub trivial_source_order: usize,
    pub out_dff_order: usize,
    /// `|T(B)| / |Out_D(A)|`, the image in `Out(D, F)`.
    pub image_order: usize,
    pub image_full: bool,
    pub out_da_normal: bool,
    /// `|D / foc(D)|`.
    pub hom_defect_order: usize,
    /// `|Pic| / |T(B)|`.
    pub linear_over_trivial: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerFeit {
    pub defect_order: usize,
    pub trivial_source_order: usize,
    /// `|Pic| <= (|D|^2)! |T(B)|`.
    pub bound: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub case: String,
    pub parameters: CaseSpec,
    pub block: String,
    pub order: usize,
    pub claimed_type: String,
    pub claimed_order: usize,
    pub iso_type_matched: bool,
    pub picent_trivial: bool,
    pub perfectness_all: bool,
    pub generator_injectivity: bool,
    pub morita_cells_preserved: bool,
    pub sequence_accounting: SequenceAccounting,
    pub brauer_feit_bound: BrauerFeit,
    /// Claims that failed; empty when everything holds.
    pub failures: Vec<String>,
    pub passed: bool,
}

fn injective(r: &PicRealization, keep: fn(&GeneratorSource) -> bool) -> bool {
    let perms: Vec<_> = r.generators.iter().filter(|(_, p)| keep(p)).map(|(g, _)| g).collect();
    let distinct: HashSet<_> = perms.iter().collect();
    distinct.len() == perms.len() && perms.iter().all(|p| !p.is_identity())
}

/// `r <= m!`, without computing `m!` when it is large.
fn below_factorial(r: usize, m: usize) -> bool {
    let mut f: usize = 1;
    for i in 1..=m {
        if f >= r {
            return true;
        }
        f = f.saturating_mul(i);
    }
    f >= r
}

pub fn verify(r: &PicRealization) -> Result<VerificationReport> {
    let case = r.case.to_string();
    let mut failures = Vec::new();
    let mut claim = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
        ok
    };

    let order = r.group.order();
    let claimed_order = r.claimed.group.order();
    claim(order == claimed_order, "realized order equals the claimed order");
    let iso = order == claimed_order && iso_test(&r.group.table_group()?, &r.claimed.group);
    claim(iso, "realization is isomorphic to the claimed type");

    let all_positive = r.group.elements.iter().all(|e| e.all_positive());
    claim(all_positive, "Morita generators act with positive signs");
    let picent = r.group.point_kernel().len() == 1;
    claim(picent, "Picent(B) = 1");

    let checker = PerfectnessChecker::new(&r.block, &r.block)?;
    let perfect = r.group.elements.par_iter().all(|e| checker.is_perfect(e));
    claim(perfect, "every Morita auto-equivalence induces a perfect isometry");

    let inj = injective(r, |p| matches!(p, GeneratorSource::LinearCharTensor(_)))
        && injective(r, |p| matches!(p, GeneratorSource::HomDFocTensor(_)));
    claim(inj, "distinct linear characters give distinct elements");

    let cells = morita_constraints(&r.block);
    let cells_ok = r.generators.iter().all(|(g, _)| cells.preserved_by(g));
    claim(cells_ok, "generators preserve the Morita cell partition");

    let foc = focal_subgroup(&r.defect)?;
    let out = out_dff(&r.defect, NormalizerMethod::Auto)?;
    let l = r.out_da.order();
    let t = r.trivial_source.order();
    let normal = r
        .trivial_source
        .generators
        .iter()
        .all(|(g, _)| r.out_da.generators.iter().all(|(x, _)| r.out_da.contains(&g.compose(x).compose(&g.inverse()))));
    let image = t / l;
    let seq = SequenceAccounting {
        out_da_order: l,
        trivial_source_order: t,
        out_dff_order: out.order(),
        image_order: image,
        image_full: image == out.order(),
        out_da_normal: normal,
        hom_defect_order: foc.quotient_order(),
        linear_over_trivial: order / t,
        holds: normal
            && t.is_multiple_of(l)
            && out.order() % image == 0
            && order.is_multiple_of(t)
            && order / t == foc.quotient_order(),
    };
    claim(seq.holds, "exact-sequence order accounting");

    let d = r.defect.order();
    let bf = BrauerFeit {
        defect_order: d,
        trivial_source_order: t,
        bound: format!("({}^2)! * {t}", d),
        holds: order.is_multiple_of(t) && below_factorial(order / t, d * d),
    };
    claim(bf.holds, "Brauer-Feit type bound");

    let passed = failures.is_empty();
    Ok(VerificationReport {
        case,
        parameters: r.case.clone(),
        block: r.block.name.clone(),
        order,
        claimed_type: r.claimed.descriptor.clone(),
        claimed_order,
        iso_type_matched: iso,
        picent_trivial: picent,
        perfectness_all: perfect,
        generator_injectivity: inj,
        morita_cells_preserved: cells_ok,
        sequence_accounting: seq,
        brauer_feit_bound: bf,
        failures,
        passed,
    })
}

pub fn verify_case(case: &CaseSpec) -> Result<VerificationReport> {
    verify(&assemble(case)?)
}
