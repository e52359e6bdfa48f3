//! Defect groups with their inertial action: focal subgroups and
//! `Out(D, F) = N_{Aut(D)}(E)/E`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::factor::{Factor, FactorKind};
use crate::groups::table::TableGroup;
use crate::groups::FiniteGroup;
use crate::matring::{self, Mat, MatSubgroup, NormalizerMethod};

/// Homocyclic piece of a defect group with the odd group acting on it.
#[derive(Clone, Debug)]
pub struct ActedPiece {
    pub k: usize,
    pub modulus: u32,
    pub e_gens: Vec<Mat>,
}

/// `D = P x D_1 x ... x D_r` with `E = E_1 x ... x E_r`, `E_i` acting on
/// `D_i` and trivially on `P`.
#[derive(Clone, Debug)]
pub struct DefectAction {
    /// Moduli of the part centralized by `E`.
    pub fixed: Vec<u32>,
    pub acted: Vec<ActedPiece>,
}

/// Defect data of one factor's principal block.
pub fn factor_defect(f: &Factor) -> Result<DefectAction> {
    match &f.kind {
        FactorKind::Perm { .. } => Ok(DefectAction {
            fixed: Vec::new(),
            acted: vec![ActedPiece {
                k: 2,
                modulus: 2,
                e_gens: vec![matring::c3_generator(2)],
            }],
        }),
        FactorKind::Semidirect { moduli, top, action } => match top {
            None => Ok(DefectAction {
                fixed: moduli.clone(),
                acted: Vec::new(),
            }),
            Some(t) => {
                if t.order() % 2 == 0 {
                    return Err(Error::Unsupported(format!("inertial group of {} has even order", f.tag)));
                }
                Ok(DefectAction {
                    fixed: Vec::new(),
                    acted: vec![ActedPiece {
                        k: moduli.len(),
                        modulus: moduli[0],
                        e_gens: t.generators.iter().map(|&g| action[g]).collect(),
                    }],
                })
            }
        },
    }
}

impl DefectAction {
    pub fn of_group(g: &FiniteGroup) -> Result<Self> {
        let mut out = DefectAction {
            fixed: Vec::new(),
            acted: Vec::new(),
        };
        for f in &g.factors {
            let d = factor_defect(f)?;
            out.fixed.extend(d.fixed);
            out.acted.extend(d.acted);
        }
        Ok(out)
    }

    /// All coordinate moduli, fixed part first.
    pub fn moduli(&self) -> Vec<u32> {
        let mut m = self.fixed.clone();
        for p in &self.acted {
            m.extend(std::iter::repeat_n(p.modulus, p.k));
        }
        m
    }

    pub fn order(&self) -> usize {
        self.moduli().iter().map(|&m| m as usize).product()
    }

    /// Generators of `E` as maps on coordinate vectors.
    fn e_maps(&self) -> Vec<Box<dyn Fn(&[u32]) -> Vec<u32> + '_>> {
        let mut out: Vec<Box<dyn Fn(&[u32]) -> Vec<u32> + '_>> = Vec::new();
        let mut off = self.fixed.len();
        for p in &self.acted {
            for g in &p.e_gens {
                let o = off;
                let k = p.k;
                out.push(Box::new(move |v: &[u32]| {
                    let mut w = v.to_vec();
                    w[o..o + k].copy_from_slice(&g.apply(&v[o..o + k]));
                    w
                }));
            }
            off += p.k;
        }
        out
    }
}

fn vec_index(moduli: &[u32], v: &[u32]) -> usize {
    v.iter().zip(moduli).fold(0, |acc, (&x, &m)| acc * m as usize + x as usize)
}

fn index_vec(moduli: &[u32], mut i: usize) -> Vec<u32> {
    let mut v = vec![0u32; moduli.len()];
    for j in (0..moduli.len()).rev() {
        v[j] = (i % moduli[j] as usize) as u32;
        i /= moduli[j] as usize;
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct FocalReport {
    pub defect_order: usize,
    pub focal_order: usize,
    /// Invariants of `D / foc(D)`.
    pub quotient_invariants: Vec<u32>,
}

impl FocalReport {
    pub fn quotient_order(&self) -> usize {
        self.defect_order / self.focal_order
    }
}

/// `foc(D) = [D, E]`, generated by `e(x) - x` over generators `e` and
/// coordinate vectors `x`.
pub fn focal_subgroup(d: &DefectAction) -> Result<FocalReport> {
    let moduli = d.moduli();
    let n = d.order();
    let table = TableGroup::from_fn(n, |a, b| {
        let (va, vb) = (index_vec(&moduli, a), index_vec(&moduli, b));
        let s: Vec<u32> = (0..moduli.len()).map(|i| (va[i] + vb[i]) % moduli[i]).collect();
        vec_index(&moduli, &s)
    })?;
    let mut gens = Vec::new();
    for e in d.e_maps() {
        for i in 0..moduli.len() {
            let mut x = vec![0u32; moduli.len()];
            x[i] = 1;
            let y = e(&x);
            let diff: Vec<u32> = (0..moduli.len()).map(|j| (y[j] + moduli[j] - x[j]) % moduli[j]).collect();
            gens.push(vec_index(&moduli, &diff));
        }
    }
    let foc = table.subgroup(&gens);
    let q = table.quotient(&foc)?;
    Ok(FocalReport {
        defect_order: n,
        focal_order: foc.len(),
        quotient_invariants: q.abelian_invariants(),
    })
}

/// `N_{GL_K(Z/m)}(E)` for the pieces of one modulus, `E` block diagonal.
#[derive(Clone, Debug)]
pub struct NormalizedPiece {
    pub modulus: u32,
    pub e: MatSubgroup,
    pub normalizer: MatSubgroup,
}

impl NormalizedPiece {
    pub fn out_order(&self) -> usize {
        self.normalizer.order() / self.e.order()
    }
}

fn block_diagonal(pieces: &[&ActedPiece]) -> Result<(usize, Vec<Mat>)> {
    let total: usize = pieces.iter().map(|p| p.k).sum();
    if total > 4 {
        return Err(Error::Unsupported(format!("acted part of rank {total}")));
    }
    let m = pieces[0].modulus;
    let mut gens = Vec::new();
    let mut off = 0;
    for p in pieces {
        for g in &p.e_gens {
            let mut e = vec![0i64; total * total];
            for i in 0..total {
                e[i * total + i] = 1;
            }
            for i in 0..p.k {
                for j in 0..p.k {
                    e[(off + i) * total + off + j] = g.get(i, j) as i64;
                }
            }
            gens.push(Mat::new(total, m, &e));
        }
        off += p.k;
    }
    Ok((total, gens))
}

/// `Out(D, F)` for the principal block: `Aut(P)` times the normalizer
/// quotients of the acted part, grouped by modulus.
#[derive(Clone, Debug)]
pub struct OutDF {
    pub aut_fixed_order: usize,
    pub pieces: Vec<NormalizedPiece>,
}

impl OutDF {
    pub fn order(&self) -> usize {
        self.aut_fixed_order * self.pieces.iter().map(|p| p.out_order()).product::<usize>()
    }
}

/// Automorphisms of an abelian group given by moduli; brute force.
pub fn abelian_automorphism_count(moduli: &[u32]) -> Result<usize> {
    let n: usize = moduli.iter().map(|&m| m as usize).product();
    let t = TableGroup::from_fn(n, |a, b| {
        let (va, vb) = (index_vec(moduli, a), index_vec(moduli, b));
        let s: Vec<u32> = (0..moduli.len()).map(|i| (va[i] + vb[i]) % moduli[i]).collect();
        vec_index(moduli, &s)
    })?;
    Ok(t.automorphisms().len())
}

pub fn out_dff(d: &DefectAction, method: NormalizerMethod) -> Result<OutDF> {
    let mut by_mod: BTreeMap<u32, Vec<&ActedPiece>> = BTreeMap::new();
    for p in &d.acted {
        by_mod.entry(p.modulus).or_default().push(p);
    }
    let mut pieces = Vec::new();
    for (m, ps) in by_mod {
        let (k, gens) = block_diagonal(&ps)?;
        let e = MatSubgroup::generated(k, m, "E", gens)?;
        let normalizer = matring::normalizer(&e, method)?;
        pieces.push(NormalizedPiece {
            modulus: m,
            e,
            normalizer,
        });
    }
    Ok(OutDF {
        aut_fixed_order: abelian_automorphism_count(&d.fixed)?,
        pieces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    fn defect(s: &str) -> DefectAction {
        DefectAction::of_group(&FiniteGroup::build(&s.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn focal_examples() {
        let f = focal_subgroup(&defect("G(1)")).unwrap();
        assert_eq!((f.focal_order, f.quotient_order()), (4, 1));
        let f = focal_subgroup(&defect("P(1,2)xG(2)")).unwrap();
        assert_eq!(f.quotient_invariants, vec![2, 4]);
        assert_eq!(f.quotient_order(), 8);
        let f = focal_subgroup(&defect("E8:C7")).unwrap();
        assert_eq!(f.quotient_order(), 1);
    }

    #[test]
    fn out_dff_orders() {
        let o = |s: &str| out_dff(&defect(s), NormalizerMethod::Auto).unwrap().order();
        assert_eq!(o("G(1)"), 2);
        assert_eq!(o("G(2)"), 8);
        assert_eq!(o("E8:C7"), 3);
        assert_eq!(o("E8:F21"), 1);
        assert_eq!(o("P(1,1)xG(1)"), 12);
        assert_eq!(o("G(1)xG(1)"), 8);
        assert_eq!(o("G(1)xA5"), 8);
        assert_eq!(o("B(3)"), 3);
    }
}
