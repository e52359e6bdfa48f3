//! Character tables and block data.

pub mod block;
pub mod clifford;

use num_rational::BigRational;
use serde::Serialize;

use crate::cyclo::{ring, CycNum};
use crate::error::{Error, Result};
use crate::groups::{ConjugacyData, FamilyTag, FiniteGroup};

pub use block::{block_data, BlockData};
pub use clifford::FactorTable;

/// Linear characters of `C_3` are labelled so that `μ1` takes the value
/// `ζ_3` on the generator; the `A_4` columns `(123)` and `(132)` are the
/// classes of the generator and its inverse.
pub const OMEGA_CONVENTION: &str = "μ1 takes the value ζ_3 = ω on the C3 generator";

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub tag: FamilyTag,
    pub group_order: usize,
    pub conductor: u32,
    pub classes: ConjugacyData,
    /// `irr[χ][class]`.
    pub irr: Vec<Vec<CycNum>>,
    pub labels: Vec<String>,
    /// Integer power-basis coordinates of every value.
    pub int_values: Vec<Vec<Vec<i64>>>,
}

impl CharacterTable {
    pub fn build(g: &FiniteGroup) -> Result<Self> {
        let tables = g
            .factors
            .iter()
            .map(|f| clifford::factor_table(f))
            .collect::<Result<Vec<_>>>()?;
        let classes = g.conjugacy();
        let conductor = g.exponent();
        let counts: Vec<usize> = tables.iter().map(|t| t.irr.len()).collect();
        let total: usize = counts.iter().product();
        let r = ring(conductor);
        // factor tables lifted to the common conductor, as integer coordinates
        let lifted: Vec<Vec<Vec<Vec<i64>>>> = tables
            .iter()
            .map(|t| {
                t.irr
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| v.lift(conductor).to_int_coords().expect("integral character value"))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut irr = Vec::with_capacity(total);
        let mut labels = Vec::with_capacity(total);
        let mut int_values = Vec::with_capacity(total);
        for idx in 0..total {
            let mut parts = vec![0; counts.len()];
            let mut rest = idx;
            for i in (0..counts.len()).rev() {
                parts[i] = rest % counts[i];
                rest /= counts[i];
            }
            let row: Vec<Vec<i64>> = (0..classes.len())
                .map(|c| {
                    let mut acc = r.power(0).to_vec();
                    for (f, &p) in parts.iter().enumerate() {
                        acc = r.mul(&acc, &lifted[f][p][classes.factor_classes[f][c]]);
                    }
                    acc
                })
                .collect();
            irr.push(row.iter().map(|v| CycNum::from_int_coords(conductor, v)).collect());
            int_values.push(row);
            let l: Vec<&str> = parts.iter().enumerate().map(|(f, &p)| tables[f].labels[p].as_str()).collect();
            labels.push(l.join("⊗"));
        }
        Ok(CharacterTable {
            tag: g.tag.clone(),
            group_order: g.order(),
            conductor,
            classes,
            irr,
            labels,
            int_values,
        })
    }

    pub fn for_family(tag: &FamilyTag) -> Result<Self> {
        Self::build(&FiniteGroup::build(tag)?)
    }

    pub fn len(&self) -> usize {
        self.irr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irr.is_empty()
    }

    pub fn degree(&self, chi: usize) -> i64 {
        let v = self.irr[chi][0].to_rational().expect("degree is rational");
        v.to_integer().try_into().expect("small degree")
    }

    pub fn degrees(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.degree(i)).collect()
    }

    /// `⟨φ, ψ⟩ = (1/|G|) Σ_g φ(g) conj(ψ(g))` for class functions.
    pub fn inner(&self, phi: &[CycNum], psi: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero(self.conductor);
        for c in 0..self.classes.len() {
            let term = &phi[c] * &psi[c].conj();
            let size = CycNum::from_int(self.conductor, self.classes.sizes[c] as i64);
            acc = &acc + &(&term * &size);
        }
        let inv = BigRational::new(1.into(), (self.group_order as i64).into());
        &acc * &CycNum::from_rational(self.conductor, inv)
    }

    /// Exact row and column orthogonality.
    pub fn check_orthogonality(&self) -> Result<()> {
        let fail = |claim: String| Error::Verification {
            case: format!("character table of {}", self.tag),
            claim,
        };
        let k = self.len();
        if k != self.classes.len() {
            return Err(fail(format!("{k} characters for {} classes", self.classes.len())));
        }
        let r = ring(self.conductor);
        let n = self.group_order as i64;
        for i in 0..k {
            for j in i..k {
                let mut acc = vec![0i64; r.phi()];
                for c in 0..k {
                    let t = r.mul(&self.int_values[i][c], &r.conj(&self.int_values[j][c]));
                    for (a, b) in acc.iter_mut().zip(t) {
                        *a += b * self.classes.sizes[c] as i64;
                    }
                }
                let want = if i == j { n } else { 0 };
                if acc[0] != want || acc[1..].iter().any(|&x| x != 0) {
                    return Err(fail(format!("rows {i} and {j} orthogonal")));
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let mut acc = vec![0i64; r.phi()];
                for i in 0..k {
                    let t = r.mul(&self.int_values[i][c], &r.conj(&self.int_values[i][d]));
                    for (a, b) in acc.iter_mut().zip(t) {
                        *a += b;
                    }
                }
                let want = if c == d { self.classes.centralizer_orders[c] as i64 } else { 0 };
                if acc[0] != want || acc[1..].iter().any(|&x| x != 0) {
                    return Err(fail(format!("columns {c} and {d} orthogonal")));
                }
            }
        }
        let sq: i64 = self.degrees().iter().map(|d| d * d).sum();
        if sq != n {
            return Err(fail("sum of squared degrees equals |G|".into()));
        }
        Ok(())
    }

    /// Characters whose kernel contains the normal subgroup given by its
    /// classes: `χ(h) = χ(1)` on all of them.
    pub fn kernel_contains(&self, chi: usize, classes: &[usize]) -> bool {
        classes.iter().all(|&c| self.irr[chi][c] == self.irr[chi][0])
    }

    /// Linear characters (degree 1), by index.
    pub fn linear_characters(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degree(i) == 1).collect()
    }

    /// Row index of a class function, if it is an irreducible character.
    pub fn find_row(&self, values: &[Vec<i64>]) -> Option<usize> {
        self.int_values.iter().position(|row| row.as_slice() == values)
    }

    /// `λ ⊗ χ` as integer coordinates.
    pub fn tensor_values(&self, lambda: usize, chi: usize) -> Vec<Vec<i64>> {
        let r = ring(self.conductor);
        (0..self.classes.len())
            .map(|c| r.mul(&self.int_values[lambda][c], &self.int_values[chi][c]))
            .collect()
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            group: self.tag.to_string(),
            order: self.group_order,
            conductor: self.conductor,
            omega_convention: OMEGA_CONVENTION.into(),
            classes: (0..self.classes.len())
                .map(|c| ClassJson {
                    order: self.classes.element_orders[c],
                    size: self.classes.sizes[c],
                    two_regular: self.classes.two_regular[c],
                })
                .collect(),
            characters: (0..self.len())
                .map(|i| CharacterJson {
                    label: self.labels[i].clone(),
                    degree: self.degree(i),
                    values: self.int_values[i]
                        .iter()
                        .map(|v| ValueJson {
                            conductor: self.conductor,
                            coords: v.clone(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassJson {
    pub order: u32,
    pub size: usize,
    pub two_regular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueJson {
    pub conductor: u32,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterJson {
    pub label: String,
    pub degree: i64,
    pub values: Vec<ValueJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableJson {
    pub group: String,
    pub order: usize,
    pub conductor: u32,
    pub omega_convention: String,
    pub classes: Vec<ClassJson>,
    pub characters: Vec<CharacterJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str) -> CharacterTable {
        CharacterTable::for_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn degrees_and_orthogonality() {
        let cases: [(&str, Vec<i64>); 6] = [
            ("G(1)", vec![1, 1, 1, 3]),
            ("G(2)", vec![1, 1, 1, 3, 3, 3, 3, 3]),
            ("E8:C7", vec![1, 1, 1, 1, 1, 1, 1, 7]),
            ("A5", vec![1, 3, 3, 4, 5]),
            ("F21", vec![1, 1, 1, 3, 3]),
            ("P(2)", vec![1, 1, 1, 1]),
        ];
        for (s, deg) in cases {
            let t = table(s);
            t.check_orthogonality().unwrap();
            let mut d = t.degrees();
            d.sort();
            assert_eq!(d, deg, "{s}");
        }
    }

    #[test]
    fn a4_matches_printed_table() {
        let t = table("G(1)");
        let w = CycNum::root(t.conductor, 3, 1).unwrap();
        let w2 = CycNum::root(t.conductor, 3, 2).unwrap();
        let i = |v| CycNum::from_int(t.conductor, v);
        let mut rows: Vec<Vec<CycNum>> = t.irr.clone();
        rows.sort_by_key(|r| r[0].to_rational().unwrap());
        assert_eq!(rows[3], vec![i(3), i(-1), i(0), i(0)]);
        let lin: Vec<Vec<CycNum>> = rows[..3].to_vec();
        assert!(lin.contains(&vec![i(1), i(1), i(1), i(1)]));
        assert!(lin.contains(&vec![i(1), i(1), w.clone(), w2.clone()]));
        assert!(lin.contains(&vec![i(1), i(1), w2, w]));
    }

    #[test]
    fn products_and_larger_families() {
        for s in ["P(1)xG(1)", "G(1)xA5", "E(2):C7", "E8:F21", "B(3)", "P(1,1)", "G(1)xG(1)"] {
            table(s).check_orthogonality().unwrap();
        }
        assert_eq!(table("E8:F21").len(), 8);
        assert_eq!(table("P(1)xG(1)").len(), 8);
    }
}
