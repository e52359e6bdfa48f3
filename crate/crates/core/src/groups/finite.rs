//! Direct products of factors with their conjugacy data.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use super::factor::{build_factor, Factor};
use super::family::FamilyTag;
use super::table::{TableGroup, TABLE_BOUND};
use crate::error::{Error, Result};

/// Largest group built explicitly.
pub const GROUP_BOUND: usize = 100_000;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub tag: FamilyTag,
    pub factors: Vec<Arc<Factor>>,
    order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyData {
    /// Smallest element index of each class.
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub centralizer_orders: Vec<usize>,
    pub element_orders: Vec<u32>,
    /// Element order odd.
    pub two_regular: Vec<bool>,
    /// Class of `x^{-1}`.
    pub inverse_class: Vec<usize>,
    /// Class of `x^p` for every prime `p` dividing the group order.
    pub power_maps: BTreeMap<u32, Vec<usize>>,
    /// Per factor, the factor class of each class.
    pub factor_classes: Vec<Vec<usize>>,
    #[serde(skip)]
    class_lookup: Vec<usize>,
    #[serde(skip)]
    factor_class_counts: Vec<usize>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class index from the per-factor class tuple.
    pub fn class_from_factor_classes(&self, fc: &[usize]) -> usize {
        let mut idx = 0;
        for (c, n) in fc.iter().zip(&self.factor_class_counts) {
            idx = idx * n + c;
        }
        self.class_lookup[idx]
    }
}

impl FiniteGroup {
    pub fn build(tag: &FamilyTag) -> Result<Self> {
        let factors = tag.factors().iter().map(build_factor).collect::<Result<Vec<_>>>()?;
        Self::from_factors(tag.clone(), factors)
    }

    pub fn from_factors(tag: FamilyTag, factors: Vec<Arc<Factor>>) -> Result<Self> {
        let order = factors.iter().map(|f| f.order()).product();
        if order > GROUP_BOUND {
            return Err(Error::OrderBound {
                what: format!("group {tag}"),
                order,
                bound: GROUP_BOUND,
            });
        }
        Ok(FiniteGroup { tag, factors, order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn decompose(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (i, f) in self.factors.iter().enumerate().rev() {
            out[i] = x % f.order();
            x /= f.order();
        }
        out
    }

    pub fn compose(&self, parts: &[usize]) -> usize {
        parts
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&p, f)| acc * f.order() + p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (self.decompose(a), self.decompose(b));
        let parts: Vec<usize> = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| f.table.mul(pa[i], pb[i]))
            .collect();
        self.compose(&parts)
    }

    pub fn inv(&self, a: usize) -> usize {
        let pa = self.decompose(a);
        let parts: Vec<usize> = self.factors.iter().enumerate().map(|(i, f)| f.table.inv(pa[i])).collect();
        self.compose(&parts)
    }

    pub fn elem_order(&self, a: usize) -> u32 {
        let pa = self.decompose(a);
        self.factors
            .iter()
            .enumerate()
            .fold(1u32, |acc, (i, f)| acc.lcm(&f.table.elem_order(pa[i])))
    }

    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1u32, |acc, f| {
            (0..f.order()).fold(acc, |a, x| a.lcm(&f.table.elem_order(x)))
        })
    }

    /// Generators: each factor's generators, embedded.
    pub fn generators(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            for &g in &f.generators {
                let mut parts = vec![0; self.factors.len()];
                parts[i] = g;
                out.push(self.compose(&parts));
            }
        }
        out
    }

    pub fn table_group(&self) -> Result<TableGroup> {
        if self.order > TABLE_BOUND {
            return Err(Error::OrderBound {
                what: format!("table of {}", self.tag),
                order: self.order,
                bound: TABLE_BOUND,
            });
        }
        TableGroup::from_fn(self.order, |a, b| self.mul(a, b))
    }

    pub fn conjugacy(&self) -> ConjugacyData {
        let counts: Vec<usize> = self.factors.iter().map(|f| f.classes.reps.len()).collect();
        let total: usize = counts.iter().product();
        // all class tuples in mixed-radix order
        let tuples: Vec<Vec<usize>> = (0..total)
            .map(|mut idx| {
                let mut t = vec![0; counts.len()];
                for i in (0..counts.len()).rev() {
                    t[i] = idx % counts[i];
                    idx /= counts[i];
                }
                t
            })
            .collect();
        let key = |t: &[usize]| -> (u32, usize) {
            let parts: Vec<usize> = t
                .iter()
                .enumerate()
                .map(|(i, &c)| self.factors[i].classes.min_index[c])
                .collect();
            let rep = self.compose(&parts);
            (self.elem_order(rep), rep)
        };
        let mut perm: Vec<usize> = (0..total).collect();
        perm.sort_by_key(|&i| key(&tuples[i]));
        let mut class_lookup = vec![0; total];
        for (c, &i) in perm.iter().enumerate() {
            class_lookup[i] = c;
        }
        let mut reps = Vec::with_capacity(total);
        let mut sizes = Vec::with_capacity(total);
        let mut factor_classes = vec![Vec::with_capacity(total); counts.len()];
        for &i in &perm {
            let t = &tuples[i];
            reps.push(key(t).1);
            sizes.push(t.iter().enumerate().map(|(j, &c)| self.factors[j].classes.sizes[c]).product());
            for (j, &c) in t.iter().enumerate() {
                factor_classes[j].push(c);
            }
        }
        let mut data = ConjugacyData {
            centralizer_orders: sizes.iter().map(|s| self.order / s).collect(),
            element_orders: reps.iter().map(|&r| self.elem_order(r)).collect(),
            two_regular: reps.iter().map(|&r| self.elem_order(r) % 2 == 1).collect(),
            inverse_class: Vec::new(),
            power_maps: BTreeMap::new(),
            reps,
            sizes,
            factor_classes,
            class_lookup,
            factor_class_counts: counts,
        };
        data.inverse_class = (0..total).map(|c| self.class_of_with(&data, self.inv(data.reps[c]))).collect();
        let mut primes = Vec::new();
        let mut m = self.order;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                primes.push(p as u32);
                while m.is_multiple_of(p) {
                    m /= p;
                }
            }
            p += 1;
        }
        for p in primes {
            let map = (0..total)
                .map(|c| {
                    let mut y = 0;
                    for _ in 0..p {
                        y = self.mul(y, data.reps[c]);
                    }
                    self.class_of_with(&data, y)
                })
                .collect();
            data.power_maps.insert(p, map);
        }
        data
    }

    /// Class of an element.
    pub fn class_of_with(&self, data: &ConjugacyData, x: usize) -> usize {
        let parts = self.decompose(x);
        let fc: Vec<usize> = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| self.factors[i].classes.class_of[p] as usize)
            .collect();
        data.class_from_factor_classes(&fc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_brute(tag: &str) {
        let g = FiniteGroup::build(&tag.parse().unwrap()).unwrap();
        let cd = g.conjugacy();
        let tg = g.table_group().unwrap();
        let sizes = tg.class_sizes();
        assert_eq!(cd.sizes.iter().sum::<usize>(), g.order());
        for (c, &r) in cd.reps.iter().enumerate() {
            assert_eq!(sizes[r], cd.sizes[c], "{tag}");
            assert_eq!(cd.sizes[c] * cd.centralizer_orders[c], g.order());
            assert_eq!(cd.two_regular[c], cd.element_orders[c] % 2 == 1);
        }
        // every element lands in a class with the same size and order
        for x in 0..g.order() {
            let c = g.class_of_with(&cd, x);
            assert_eq!(tg.elem_order(x), cd.element_orders[c]);
            assert_eq!(sizes[x], cd.sizes[c]);
        }
    }

    #[test]
    fn products_match_brute_force() {
        for t in ["G(1)", "P(1)xG(1)", "G(1)xG(1)", "P(1,1)xA5", "E8:C7"] {
            check_brute(t);
        }
        let g = FiniteGroup::build(&"G(1)xA5".parse().unwrap()).unwrap();
        assert_eq!(g.conjugacy().len(), 20);
    }
}
