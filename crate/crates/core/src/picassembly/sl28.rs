//! Character-level ingredients for `B_0(O Aut(SL_2(8)))`.

use itertools::Itertools;
use serde::Serialize;

use super::claimed::homomorphisms_to_cyclic;
use crate::chartab::BlockData;
use crate::error::{Error, Result};
use crate::groups::SignedPerm;
use crate::isometry::morita_constraints;
use crate::matring::{self, NormalizerMethod, OddShape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl28Report {
    /// `|Hom(C_7 x| C_3, C^×)|`.
    pub hom_part_order: usize,
    /// `|N_{GL_3(2)}(C_7 x| C_3) / (C_7 x| C_3)|`.
    pub normalizer_quotient_order: usize,
    pub degrees: Vec<i64>,
    /// Image of each character under tensoring with each linear character.
    pub tensor_permutations: Vec<Vec<usize>>,
    pub distinct_permutations: usize,
    /// Degrees fixed by the nontrivial tensorings.
    pub fixed_degrees: Vec<i64>,
    /// Cycle lengths of a nontrivial tensoring, sorted.
    pub cycle_type: Vec<usize>,
    /// Each tensoring permutes the Brauer characters compatibly with the
    /// decomposition matrix.
    pub decomposition_compatible: bool,
    pub cells_preserved: bool,
    pub pairing_invariants: Vec<i64>,
    pub cartan: Vec<Vec<i64>>,
    /// Order of the realized group of character permutations.
    pub realized_order: usize,
    /// The stable-equivalence step bounding Pic from above is not checked.
    pub stable_equivalence_checked: bool,
}

/// `λ_j ⊗ χ`: characters extended from `SL_2(8)` shift their twist by `j`,
/// induced ones absorb `λ_j`.
fn tensor_by(b: &BlockData, j: u32) -> Result<Vec<usize>> {
    let cl = b
        .clifford
        .as_ref()
        .ok_or_else(|| Error::Unsupported(format!("{} has no Clifford labels", b.name)))?;
    cl.iter()
        .map(|(fam, tw)| {
            let target = if fam.starts_with("ind") {
                (fam.clone(), *tw)
            } else {
                (fam.clone(), (tw + j) % 3)
            };
            cl.iter()
                .position(|x| *x == target)
                .ok_or_else(|| Error::Verification {
                    case: b.name.clone(),
                    claim: "tensoring permutes the Clifford labels".into(),
                })
        })
        .collect()
}

fn compatible(b: &BlockData, sigma: &[usize]) -> bool {
    let k = b.ibr_count();
    (0..k).permutations(k).any(|tau| {
        (0..b.len()).all(|a| (0..k).all(|j| b.decomposition[sigma[a]][tau[j]] == b.decomposition[a][j]))
    })
}

fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable();
    out
}

pub fn ingredient_report_for_sl28() -> Result<Sl28Report> {
    let e = matring::lift_odd_subgroup(3, 1, OddShape::F21)?;
    let (et, _) = e.table_group()?;
    let hom_part_order = homomorphisms_to_cyclic(&et).1.len();
    let nr = matring::normalizer_report(3, 1, OddShape::F21, NormalizerMethod::Auto)?;
    let b = BlockData::aut_sl2_8();
    let perms: Vec<Vec<usize>> = (0..3).map(|j| tensor_by(&b, j)).collect::<Result<_>>()?;
    let distinct = perms.iter().unique().count();
    let fixed_degrees = (0..b.len()).filter(|&a| perms[1][a] == a).map(|a| b.degrees[a]).collect();
    let cells = morita_constraints(&b);
    let signed: Vec<SignedPerm> = perms.iter().map(|p| SignedPerm::from_perm(p.clone())).collect::<Result<_>>()?;
    let group = crate::groups::SignedPermGroup::closure(
        b.len(),
        signed.iter().map(|s| (s.clone(), "linear tensoring".to_string())).collect(),
    )?;
    Ok(Sl28Report {
        hom_part_order,
        normalizer_quotient_order: nr.quotient_order,
        degrees: b.degrees.clone(),
        cycle_type: cycle_type(&perms[1]),
        distinct_permutations: distinct,
        fixed_degrees,
        decomposition_compatible: perms.iter().all(|p| compatible(&b, p)),
        cells_preserved: signed.iter().all(|s| cells.preserved_by(s)),
        pairing_invariants: (0..b.len()).map(|a| b.pairing_invariant(a)).collect(),
        cartan: b.cartan(),
        realized_order: group.order(),
        tensor_permutations: perms,
        stable_equivalence_checked: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ingredients() {
        let r = ingredient_report_for_sl28().unwrap();
        assert_eq!(r.hom_part_order, 3);
        assert_eq!(r.normalizer_quotient_order, 1);
        assert_eq!(r.fixed_degrees, vec![21, 27]);
        assert_eq!(r.cycle_type, vec![1, 1, 3, 3]);
        assert_eq!(r.distinct_permutations, 3);
        assert_eq!(r.realized_order, 3);
        assert!(r.decomposition_compatible);
        assert!(r.cells_preserved);
    }
}
