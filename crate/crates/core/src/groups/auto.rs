//! Brute-force automorphism groups of small groups.

use std::collections::HashMap;

use serde::Serialize;

use super::table::{Fingerprint, TableGroup};
use crate::error::{Error, Result};

/// Largest group whose automorphisms are enumerated.
pub const AUT_BOUND: usize = 200;

#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    /// Element maps, sorted; the identity map is first.
    pub maps: Vec<Vec<u32>>,
    /// Indices into `maps` of the inner automorphisms.
    pub inner: Vec<usize>,
    /// `Aut(G)` with index `i` meaning `maps[i]`; product is composition
    /// `(a * b)(x) = a(b(x))`.
    pub table: TableGroup,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismReport {
    pub group_order: usize,
    pub aut_order: usize,
    pub inn_order: usize,
    pub out_order: usize,
    pub out_fingerprint: Fingerprint,
}

impl AutomorphismGroup {
    pub fn compute(g: &TableGroup) -> Result<Self> {
        if g.order() > AUT_BOUND {
            return Err(Error::OrderBound {
                what: "automorphism search".into(),
                order: g.order(),
                bound: AUT_BOUND,
            });
        }
        let maps = g.automorphisms();
        let pos: HashMap<&Vec<u32>, usize> = maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let n = g.order();
        let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { (0..n).map(|x| a[b[x] as usize]).collect() };
        let table = TableGroup::from_fn(maps.len(), |a, b| pos[&compose(&maps[a], &maps[b])])?;
        let mut inner: Vec<usize> = (0..n)
            .map(|h| {
                let m: Vec<u32> = (0..n).map(|x| g.conj(h, x) as u32).collect();
                pos[&m]
            })
            .collect();
        inner.sort_unstable();
        inner.dedup();
        Ok(AutomorphismGroup { maps, inner, table })
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn out_group(&self) -> Result<TableGroup> {
        self.table.quotient(&self.inner)
    }

    pub fn report(&self, group_order: usize) -> Result<AutomorphismReport> {
        let out = self.out_group()?;
        Ok(AutomorphismReport {
            group_order,
            aut_order: self.order(),
            inn_order: self.inner.len(),
            out_order: out.order(),
            out_fingerprint: out.fingerprint(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    #[test]
    fn small_examples() {
        let a4 = FiniteGroup::build(&"G(1)".parse().unwrap()).unwrap().table_group().unwrap();
        let aut = AutomorphismGroup::compute(&a4).unwrap();
        assert_eq!(aut.order(), 24);
        assert_eq!(aut.out_group().unwrap().order(), 2);
        let v4 = FiniteGroup::build(&"P(1,1)".parse().unwrap()).unwrap().table_group().unwrap();
        assert_eq!(AutomorphismGroup::compute(&v4).unwrap().order(), 6);
    }
}
