//! Principal 2-blocks: characters, Brauer labels and decomposition
//! matrices.
//!
//! For `N x| E` with `N` a 2-group and `E` of odd order the block is the
//! whole group algebra, `IBr = Irr(E)` and `D_{χ,μ} = ⟨χ|_E, μ⟩_E`.
//! `B_0(A_5)` and `B_0(Aut(SL_2(8)))` are hardcoded. Products use the
//! Kronecker product, rows ordered `i * k_2 + j`.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::clifford::{factor_table, FactorTable};
use super::CharacterTable;
use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::groups::factor::{Factor, FactorKind};
use crate::groups::{FamilyTag, FiniteGroup};

#[derive(Clone, Debug)]
pub struct BlockData {
    pub name: String,
    pub group: Option<Arc<FiniteGroup>>,
    pub table: Option<Arc<CharacterTable>>,
    /// Table rows belonging to the block.
    pub chars: Vec<usize>,
    pub labels: Vec<String>,
    pub degrees: Vec<i64>,
    pub ibr_labels: Vec<String>,
    /// Rows indexed by block characters, columns by Brauer characters.
    pub decomposition: Vec<Vec<i64>>,
    /// `(Clifford family, twist)` per character; only for blocks given
    /// without a character table.
    pub clifford: Option<Vec<(String, u32)>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockJson {
    pub name: String,
    pub characters: Vec<String>,
    pub degrees: Vec<i64>,
    pub ibr: Vec<String>,
    pub decomposition: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
}

struct FactorBlock {
    chars: Vec<usize>,
    ibr: Vec<String>,
    dec: Vec<Vec<i64>>,
}

fn is_two_power(m: u32) -> bool {
    m.is_power_of_two()
}

fn factor_block(f: &Factor, t: &FactorTable) -> Result<FactorBlock> {
    match &f.kind {
        FactorKind::Perm { .. } => Ok(FactorBlock {
            chars: vec![0, 1, 2, 4],
            ibr: vec!["φ1".into(), "φ2".into(), "φ3".into()],
            dec: vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]],
        }),
        FactorKind::Semidirect { moduli, top, .. } => {
            if !moduli.iter().all(|&m| is_two_power(m)) {
                return Err(Error::Unsupported(format!("principal block of {}", f.tag)));
            }
            let Some(top) = top else {
                return Ok(FactorBlock {
                    chars: (0..t.irr.len()).collect(),
                    ibr: vec!["φ1".into()],
                    dec: vec![vec![1]; t.irr.len()],
                });
            };
            let tt = factor_table(top)?;
            let n = t.conductor;
            let order = BigRational::from_integer((top.order() as i64).into());
            let mut dec = Vec::with_capacity(t.irr.len());
            for row in &t.irr {
                let mut out = Vec::with_capacity(tt.irr.len());
                for mu in &tt.irr {
                    let mut acc = CycNum::zero(n);
                    for e in 0..top.order() {
                        // (0, e) has factor index e
                        let chi = &row[f.classes.class_of[e] as usize];
                        let m = mu[top.classes.class_of[e] as usize].lift(n).conj();
                        acc = &acc + &(chi * &m);
                    }
                    let v = acc
                        .to_rational()
                        .map(|r| r / &order)
                        .filter(|r| r.is_integer() && !r.is_negative())
                        .ok_or_else(|| Error::Verification {
                            case: format!("block of {}", f.tag),
                            claim: "restriction multiplicities are non-negative integers".into(),
                        })?;
                    out.push(v.to_integer().to_i64().expect("small multiplicity"));
                }
                dec.push(out);
            }
            Ok(FactorBlock {
                chars: (0..t.irr.len()).collect(),
                ibr: tt.labels.iter().map(|l| format!("φ[{l}]")).collect(),
                dec,
            })
        }
    }
}

impl BlockData {
    /// Principal block of a group, as the tensor product of the factor
    /// blocks.
    pub fn principal(g: Arc<FiniteGroup>, table: Arc<CharacterTable>) -> Result<Self> {
        let mut chars = vec![0usize];
        let mut dec: Vec<Vec<i64>> = vec![vec![1]];
        let mut ibr: Vec<String> = vec![String::new()];
        let mut row_count = 1usize;
        for f in &g.factors {
            let ft = factor_table(f)?;
            let fb = factor_block(f, &ft)?;
            let k = ft.irr.len();
            chars = chars
                .iter()
                .flat_map(|&a| fb.chars.iter().map(move |&b| a * k + b))
                .collect();
            dec = dec
                .iter()
                .flat_map(|ra| {
                    fb.dec.iter().map(move |rb| {
                        ra.iter().flat_map(|&x| rb.iter().map(move |&y| x * y)).collect::<Vec<i64>>()
                    })
                })
                .collect();
            ibr = ibr
                .iter()
                .flat_map(|a| {
                    fb.ibr.iter().map(move |b| if a.is_empty() { b.clone() } else { format!("{a}⊗{b}") })
                })
                .collect();
            row_count *= k;
        }
        debug_assert_eq!(row_count, table.len());
        let labels = chars.iter().map(|&c| table.labels[c].clone()).collect();
        let degrees = chars.iter().map(|&c| table.degree(c)).collect();
        Ok(BlockData {
            name: format!("B0({})", g.tag),
            group: Some(g),
            table: Some(table),
            chars,
            labels,
            degrees,
            ibr_labels: ibr,
            decomposition: dec,
            clifford: None,
        })
    }

    /// `B_0(Aut(SL_2(8)))`: degrees `1,1,1,7,7,7,21,27`, Brauer characters
    /// `I, 1, 1*, 6, 12`.
    pub fn aut_sl2_8() -> Self {
        let dec = vec![
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![1, 0, 0, 1, 0],
            vec![0, 1, 0, 1, 0],
            vec![0, 0, 1, 1, 0],
            vec![1, 1, 1, 1, 1],
            vec![1, 1, 1, 2, 1],
        ];
        let clifford: Vec<(String, u32)> = vec![
            ("lin".into(), 0),
            ("lin".into(), 1),
            ("lin".into(), 2),
            ("ext7".into(), 0),
            ("ext7".into(), 1),
            ("ext7".into(), 2),
            ("ind21".into(), 0),
            ("ind27".into(), 0),
        ];
        BlockData {
            name: "B0(AutSL28)".into(),
            group: None,
            table: None,
            chars: (0..8).collect(),
            labels: ["1a", "1b", "1c", "7a", "7b", "7c", "21", "27"].iter().map(|s| s.to_string()).collect(),
            degrees: vec![1, 1, 1, 7, 7, 7, 21, 27],
            ibr_labels: ["I", "1", "1*", "6", "12"].iter().map(|s| s.to_string()).collect(),
            decomposition: dec,
            clifford: Some(clifford),
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn ibr_count(&self) -> usize {
        self.ibr_labels.len()
    }

    pub fn table(&self) -> Result<&CharacterTable> {
        self.table
            .as_deref()
            .ok_or_else(|| Error::Unsupported(format!("{} has no character table", self.name)))
    }

    /// `D^T D`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let l = self.ibr_count();
        (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| self.decomposition.iter().map(|r| r[i] * r[j]).sum())
                    .collect()
            })
            .collect()
    }

    /// Coefficients of the projective character of Brauer character `j`.
    pub fn projective(&self, j: usize) -> Vec<i64> {
        self.decomposition.iter().map(|r| r[j]).collect()
    }

    /// `Σ_φ D_{χ,φ} (Σ_ξ D_{ξ,φ})`.
    pub fn pairing_invariant(&self, chi: usize) -> i64 {
        let col: Vec<i64> = (0..self.ibr_count())
            .map(|j| self.decomposition.iter().map(|r| r[j]).sum())
            .collect();
        self.decomposition[chi].iter().zip(&col).map(|(a, b)| a * b).sum()
    }

    /// Non-negative non-zero rows and a positive definite Cartan matrix.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |claim: &str| Error::Verification {
            case: self.name.clone(),
            claim: claim.into(),
        };
        if self.decomposition.iter().any(|r| r.iter().any(|&x| x < 0) || r.iter().all(|&x| x == 0)) {
            return Err(fail("decomposition rows are non-negative and non-zero"));
        }
        let c = self.cartan();
        for k in 1..=c.len() {
            let minor: Vec<Vec<BigRational>> = (0..k)
                .map(|i| (0..k).map(|j| BigRational::from_integer(c[i][j].into())).collect())
                .collect();
            if !det_rational(minor).is_positive() {
                return Err(fail("Cartan matrix is positive definite"));
            }
        }
        if let Some(t) = &self.table {
            // projective characters vanish off 2-regular classes
            for j in 0..self.ibr_count() {
                for cl in 0..t.classes.len() {
                    if t.classes.two_regular[cl] {
                        continue;
                    }
                    let mut acc = CycNum::zero(t.conductor);
                    for (a, &chi) in self.chars.iter().enumerate() {
                        let d = self.decomposition[a][j];
                        if d != 0 {
                            acc = &acc + &(&CycNum::from_int(t.conductor, d) * &t.irr[chi][cl]);
                        }
                    }
                    if !acc.is_zero() {
                        return Err(fail("projective characters vanish on 2-singular classes"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Block characters whose kernel contains the normal subgroup `p`
    /// (element indices of the block's group).
    pub fn irr_fixed_by(&self, p: &[usize]) -> Result<Vec<usize>> {
        let g = self
            .group
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{} has no explicit group", self.name)))?;
        let t = self.table()?;
        let mut inside = vec![false; g.order()];
        for &x in p {
            inside[x] = true;
        }
        for &x in p {
            for s in g.generators() {
                if !inside[g.mul(g.mul(s, x), g.inv(s))] {
                    return Err(Error::NotNormal);
                }
            }
        }
        let mut classes: Vec<usize> = p.iter().map(|&x| g.class_of_with(&t.classes, x)).collect();
        classes.sort_unstable();
        classes.dedup();
        Ok((0..self.len()).filter(|&a| t.kernel_contains(self.chars[a], &classes)).collect())
    }

    pub fn to_json(&self) -> BlockJson {
        BlockJson {
            name: self.name.clone(),
            characters: self.labels.clone(),
            degrees: self.degrees.clone(),
            ibr: self.ibr_labels.clone(),
            decomposition: self.decomposition.clone(),
            cartan: self.cartan(),
        }
    }
}

fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::from_integer(1.into());
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Principal block for a family tag.
pub fn block_data(tag: &FamilyTag) -> Result<BlockData> {
    if *tag == FamilyTag::AutSL28 {
        return Ok(BlockData::aut_sl2_8());
    }
    if tag.factors().contains(&FamilyTag::AutSL28) {
        return Err(Error::Unsupported("AutSL28 only as a standalone block".into()));
    }
    let g = Arc::new(FiniteGroup::build(tag)?);
    let t = Arc::new(CharacterTable::build(&g)?);
    BlockData::principal(g, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(s: &str) -> BlockData {
        block_data(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a4_and_a5() {
        let b = block("G(1)");
        assert_eq!(b.decomposition, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]);
        b.check_invariants().unwrap();
        let a5 = block("A5");
        assert_eq!(a5.degrees, vec![1, 3, 3, 5]);
        assert_eq!(a5.pairing_invariant(0), 4);
        a5.check_invariants().unwrap();
    }

    #[test]
    fn aut_sl28_rows() {
        let b = block("AutSL28");
        assert_eq!(b.decomposition[7], vec![1, 1, 1, 2, 1]);
        b.check_invariants().unwrap();
    }

    #[test]
    fn product_projectives_have_norm_two_p() {
        let b = block("P(1)xG(1)");
        b.check_invariants().unwrap();
        let c = b.cartan();
        for i in 0..3 {
            assert_eq!(c[i][i], 4);
        }
    }

    #[test]
    fn fixed_by_normal_subgroups() {
        let b = block("G(1)");
        let g = b.group.clone().unwrap();
        let o2 = g.factors[0].normal_part();
        assert_eq!(b.irr_fixed_by(&o2).unwrap().len(), 3);
        assert_eq!(b.irr_fixed_by(&[0]).unwrap().len(), 4);
        let e = block("E8:C7");
        let d = e.group.clone().unwrap().factors[0].normal_part();
        assert_eq!(e.irr_fixed_by(&d).unwrap().len(), 7);
        // the complement C3 is not normal
        assert_eq!(b.irr_fixed_by(&[0, 1, 2]), Err(Error::NotNormal));
    }
}
