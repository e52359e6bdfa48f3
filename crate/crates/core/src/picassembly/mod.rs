//! Realizations of Picard groups as groups of character permutations,
//! generated by tensoring with linear characters and by group
//! automorphisms.

pub mod case;
pub mod claimed;
pub mod fusion;
pub mod sl28;
pub mod verify;

use std::sync::Arc;

use serde::Serialize;

use crate::chartab::{block_data, BlockData, CharacterTable};
use crate::error::{Error, Result};
use crate::groups::factor::{Factor, FactorKind};
use crate::groups::table::{standard, TableGroup};
use crate::groups::{AutomorphismGroup, FiniteGroup, SignedPerm, SignedPermGroup};
use crate::matring::{self, MatSubgroup, NormalizerMethod};

pub use case::CaseSpec;
pub use fusion::{focal_subgroup, out_dff, DefectAction, FocalReport, OutDF};
pub use sl28::{ingredient_report_for_sl28, Sl28Report};
pub use verify::{verify, verify_case, VerificationReport};

/// Where a generator comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorSource {
    /// `χ -> λ ⊗ χ` with `λ` trivial on 2-elements.
    LinearCharTensor(String),
    /// `χ -> χ ∘ φ^{-1}`.
    GroupAutomorphism(String),
    /// `χ -> μ ⊗ χ` with `μ` trivial on odd-order elements.
    HomDFocTensor(String),
}

impl GeneratorSource {
    pub fn label(&self) -> &str {
        match self {
            GeneratorSource::LinearCharTensor(s) | GeneratorSource::GroupAutomorphism(s) | GeneratorSource::HomDFocTensor(s) => s,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClaimedType {
    pub descriptor: String,
    pub group: TableGroup,
}

#[derive(Clone, Debug)]
pub struct PicRealization {
    pub case: CaseSpec,
    pub block: BlockData,
    pub generators: Vec<(SignedPerm, GeneratorSource)>,
    /// Generated by the `LinearCharTensor` generators.
    pub out_da: SignedPermGroup,
    /// Generated by `LinearCharTensor` and `GroupAutomorphism` generators.
    pub trivial_source: SignedPermGroup,
    /// Generated by everything.
    pub group: SignedPermGroup,
    pub claimed: ClaimedType,
    pub defect: DefectAction,
}

/// Automorphism of a product group: component `i` of the image is
/// `maps[i]` applied to component `source[i]`.
struct ProductAuto {
    maps: Vec<Option<Vec<u32>>>,
    source: Vec<usize>,
}

impl ProductAuto {
    fn on_factor(g: &FiniteGroup, i: usize, map: Vec<u32>) -> Self {
        let mut maps = vec![None; g.factors.len()];
        maps[i] = Some(map);
        ProductAuto {
            maps,
            source: (0..g.factors.len()).collect(),
        }
    }

    fn swap(g: &FiniteGroup, i: usize, j: usize) -> Self {
        let mut source: Vec<usize> = (0..g.factors.len()).collect();
        source.swap(i, j);
        ProductAuto {
            maps: vec![None; g.factors.len()],
            source,
        }
    }
}

fn block_position(block: &BlockData, t: &CharacterTable, row: &[Vec<i64>], what: &str) -> Result<usize> {
    let idx = t.find_row(row).ok_or_else(|| Error::Verification {
        case: block.name.clone(),
        claim: format!("{what} maps irreducible characters to irreducible characters"),
    })?;
    block.chars.iter().position(|&c| c == idx).ok_or_else(|| Error::Verification {
        case: block.name.clone(),
        claim: format!("{what} preserves the block"),
    })
}

/// Permutation `χ -> λ ⊗ χ` of the block characters.
pub fn tensor_permutation(block: &BlockData, lambda: usize) -> Result<SignedPerm> {
    let t = block.table()?;
    let perm = block
        .chars
        .iter()
        .map(|&c| block_position(block, t, &t.tensor_values(lambda, c), "tensoring"))
        .collect::<Result<Vec<_>>>()?;
    SignedPerm::from_perm(perm)
}

fn automorphism_permutation(block: &BlockData, g: &FiniteGroup, a: &ProductAuto) -> Result<SignedPerm> {
    let t = block.table()?;
    let cd = &t.classes;
    // class of φ(rep_c) for every class c
    let image: Vec<usize> = cd
        .reps
        .iter()
        .map(|&r| {
            let parts = g.decompose(r);
            let fc: Vec<usize> = (0..parts.len())
                .map(|i| {
                    let x = parts[a.source[i]];
                    let y = a.maps[i].as_ref().map_or(x, |m| m[x] as usize);
                    g.factors[i].classes.class_of[y] as usize
                })
                .collect();
            cd.class_from_factor_classes(&fc)
        })
        .collect();
    let perm = block
        .chars
        .iter()
        .map(|&c| {
            let row: Vec<Vec<i64>> = image.iter().map(|&k| t.int_values[c][k].clone()).collect();
            block_position(block, t, &row, "a group automorphism")
        })
        .collect::<Result<Vec<_>>>()?;
    // χ -> χ ∘ φ is the inverse of χ -> χ ∘ φ^{-1}
    Ok(SignedPerm::from_perm(perm)?.inverse())
}

/// Inertial subgroup and its normalizer for a factor `D x| E`.
pub fn factor_normalizer(f: &Factor) -> Result<Option<(MatSubgroup, MatSubgroup)>> {
    let FactorKind::Semidirect {
        moduli,
        top: Some(top),
        action,
    } = &f.kind
    else {
        return Ok(None);
    };
    let gens = top.generators.iter().map(|&g| action[g]).collect();
    let e = MatSubgroup::generated(moduli.len(), moduli[0], format!("E({})", f.tag), gens)?;
    let n = matring::normalizer(&e, NormalizerMethod::Auto)?;
    Ok(Some((e, n)))
}

fn a5_transposition_conjugation(f: &Factor) -> Vec<u32> {
    let FactorKind::Perm { perms, .. } = &f.kind else {
        unreachable!("only called on permutation factors")
    };
    let s = [1usize, 0, 2, 3, 4];
    perms
        .iter()
        .map(|p| {
            let q: Vec<u8> = (0..5).map(|i| s[p[s[i]] as usize] as u8).collect();
            perms.iter().position(|x| *x == q).expect("A5 is normal in S5") as u32
        })
        .collect()
}

fn is_one(v: &[i64]) -> bool {
    v[0] == 1 && v[1..].iter().all(|&x| x == 0)
}

/// Assembles the realization for a case within the default caps.
pub fn assemble(case: &CaseSpec) -> Result<PicRealization> {
    case.check_caps(case::MAX_N, case::MAX_P)?;
    let tag = case.family()?;
    let block = block_data(&tag)?;
    let g: Arc<FiniteGroup> = block.group.clone().ok_or_else(|| Error::Unsupported(tag.to_string()))?;
    let t = block.table()?;
    let cd = &t.classes;
    let mut generators: Vec<(SignedPerm, GeneratorSource)> = Vec::new();

    // linear characters
    for l in t.linear_characters() {
        let vals = &t.int_values[l];
        if (0..cd.len()).all(|c| is_one(&vals[c])) {
            continue;
        }
        let on_two = (0..cd.len()).filter(|&c| cd.element_orders[c].is_power_of_two()).all(|c| is_one(&vals[c]));
        let on_odd = (0..cd.len()).filter(|&c| cd.element_orders[c] % 2 == 1).all(|c| is_one(&vals[c]));
        let label = t.labels[l].clone();
        let p = tensor_permutation(&block, l)?;
        if on_two {
            generators.push((p, GeneratorSource::LinearCharTensor(label)));
        } else if on_odd {
            generators.push((p, GeneratorSource::HomDFocTensor(label)));
        }
    }

    // automorphisms, factor by factor
    let mut normalizers = Vec::new();
    for (i, f) in g.factors.iter().enumerate() {
        let nz = factor_normalizer(f)?;
        match (&f.kind, &nz) {
            (_, Some((_, n))) => {
                for (j, m) in n.generators.iter().enumerate() {
                    let map = f.automorphism_from_matrix(m).ok_or_else(|| Error::Verification {
                        case: case.to_string(),
                        claim: "normalizer elements induce group automorphisms".into(),
                    })?;
                    let p = automorphism_permutation(&block, &g, &ProductAuto::on_factor(&g, i, map))?;
                    generators.push((p, GeneratorSource::GroupAutomorphism(format!("N(E) generator {j} on {}", f.tag))));
                }
            }
            (FactorKind::Perm { .. }, None) => {
                let map = a5_transposition_conjugation(f);
                let p = automorphism_permutation(&block, &g, &ProductAuto::on_factor(&g, i, map))?;
                generators.push((p, GeneratorSource::GroupAutomorphism("conjugation by (12) on A5".into())));
            }
            (FactorKind::Semidirect { .. }, None) if f.order() > 1 => {
                let aut = AutomorphismGroup::compute(&f.table)?;
                for (j, a) in aut.table.small_generating_set().into_iter().enumerate() {
                    let map = aut.maps[a].clone();
                    let p = automorphism_permutation(&block, &g, &ProductAuto::on_factor(&g, i, map))?;
                    generators.push((p, GeneratorSource::GroupAutomorphism(format!("Aut(P) generator {j}"))));
                }
            }
            _ => {}
        }
        normalizers.push(nz);
    }
    for i in 0..g.factors.len() {
        for j in i + 1..g.factors.len() {
            if g.factors[i].tag == g.factors[j].tag {
                let p = automorphism_permutation(&block, &g, &ProductAuto::swap(&g, i, j))?;
                generators.push((p, GeneratorSource::GroupAutomorphism(format!("swap of factors {i} and {j}"))));
            }
        }
    }

    let n = block.len();
    let pick = |keep: &dyn Fn(&GeneratorSource) -> bool| -> Vec<(SignedPerm, String)> {
        generators
            .iter()
            .filter(|(_, pr)| keep(pr))
            .map(|(p, pr)| (p.clone(), pr.label().to_string()))
            .collect()
    };
    let out_da = SignedPermGroup::closure(n, pick(&|p| matches!(p, GeneratorSource::LinearCharTensor(_))))?;
    let trivial_source = SignedPermGroup::closure(n, pick(&|p| !matches!(p, GeneratorSource::HomDFocTensor(_))))?;
    let group = SignedPermGroup::closure(n, pick(&|_| true))?;
    let claimed = claimed_type(case, &g, &normalizers)?;
    let defect = DefectAction::of_group(&g)?;
    Ok(PicRealization {
        case: case.clone(),
        block,
        generators,
        out_da,
        trivial_source,
        group,
        claimed,
        defect,
    })
}

fn claimed_type(case: &CaseSpec, g: &FiniteGroup, nz: &[Option<(MatSubgroup, MatSubgroup)>]) -> Result<ClaimedType> {
    let lin_out = |i: usize| -> Result<TableGroup> {
        let (e, n) = nz[i].as_ref().ok_or_else(|| Error::Unsupported(format!("factor {i} has no inertial group")))?;
        Ok(claimed::dual_by_normalizer(e, n))
    };
    let p_part = || claimed::dual_by_automorphisms(&g.factors[0].table);
    let c2 = standard::cyclic(2);
    let (descriptor, group) = match case {
        CaseSpec::I { p, n } => {
            let q = lin_out(g.factors.len() - 1)?;
            let d = format!("(P ⋊ Aut(P)) × (C3 ⋊ Out(G_{n}))");
            if p.is_empty() {
                (d, q)
            } else {
                (d, p_part().direct_product(&q)?)
            }
        }
        CaseSpec::II { n1, n2 } => {
            let a = lin_out(0)?;
            if n1 == n2 {
                (format!("(C3 ⋊ Out(G_{n1})) ≀ S2"), standard::wreath_s2(&a))
            } else {
                let b = lin_out(1)?;
                (format!("(C3 ⋊ Out(G_{n1})) × (C3 ⋊ Out(G_{n2}))"), a.direct_product(&b)?)
            }
        }
        CaseSpec::III { p } => {
            let d = "(P ⋊ Aut(P)) × C2".to_string();
            if p.is_empty() {
                (d, c2)
            } else {
                (d, p_part().direct_product(&c2)?)
            }
        }
        CaseSpec::IV { n } => (format!("(C3 ⋊ Out(G_{n})) × C2"), lin_out(0)?.direct_product(&c2)?),
        CaseSpec::V { n } => (format!("C7 ⋊ Out((C_{}^3) ⋊ C7)", 1u32 << n), lin_out(0)?),
        CaseSpec::VI { n } => (format!("C3 ⋊ Out((C_{}^3) ⋊ (C7 ⋊ C3))", 1u32 << n), lin_out(0)?),
        CaseSpec::Borel { n } => (format!("C_{} ⋊ C_{n}", (1u32 << n) - 1), lin_out(0)?),
    };
    Ok(ClaimedType { descriptor, group })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(s: &str) -> VerificationReport {
        let r = verify_case(&s.parse().unwrap()).unwrap();
        assert!(r.passed, "{s}: {:?}", r.failures);
        r
    }

    #[test]
    fn small_cases() {
        assert_eq!(run("thm-main-i,P=1,n=1").order, 6);
        assert_eq!(run("thm-main-v,n=1").order, 21);
        assert_eq!(run("thm-main-iv,n=1").order, 12);
        assert_eq!(run("borel,n=2").order, 6);
        assert_eq!(run("thm-main-ii,n1=1,n2=1").order, 72);
    }
}
