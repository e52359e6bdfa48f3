//! Indecomposable building blocks: `N x| T` with `N` abelian given by
//! moduli and `T` another factor acting through matrices, and `A_5` as a
//! permutation group.
//!
//! Elements are indexed `n_index * |T| + t_index`, with `n_index` the
//! big-endian mixed-radix index of the coordinate vector.

use std::collections::VecDeque;
use std::sync::Arc;

use num_integer::Integer;

use super::family::FamilyTag;
use super::table::{TableGroup, TABLE_BOUND};
use crate::error::{Error, Result};
use crate::matring::{self, Mat};

#[derive(Clone, Debug)]
pub enum FactorKind {
    Semidirect {
        moduli: Vec<u32>,
        top: Option<Arc<Factor>>,
        /// Action matrix for every element of `top`, by index.
        action: Vec<Mat>,
    },
    Perm {
        degree: usize,
        perms: Vec<Vec<u8>>,
    },
}

/// Class partition of a single factor.
#[derive(Clone, Debug)]
pub struct FactorClasses {
    pub class_of: Vec<u32>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub min_index: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub tag: FamilyTag,
    pub kind: FactorKind,
    pub table: TableGroup,
    pub generators: Vec<usize>,
    pub classes: FactorClasses,
}

fn classes_of(t: &TableGroup) -> FactorClasses {
    let n = t.order();
    let mut class_of = vec![u32::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != u32::MAX {
            continue;
        }
        let mut cls: Vec<usize> = (0..n).map(|g| t.conj(g, x)).collect();
        cls.sort_unstable();
        cls.dedup();
        for &y in &cls {
            class_of[y] = raw.len() as u32;
        }
        raw.push(cls);
    }
    // identity first, then by element order and smallest member
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&c| (t.elem_order(raw[c][0]), raw[c][0]));
    let mut rank = vec![0u32; raw.len()];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r as u32;
    }
    let class_of = class_of.into_iter().map(|c| rank[c as usize]).collect();
    let reps: Vec<usize> = order.iter().map(|&c| raw[c][0]).collect();
    FactorClasses {
        class_of,
        sizes: order.iter().map(|&c| raw[c].len()).collect(),
        min_index: reps.clone(),
        reps,
    }
}

impl Factor {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    fn finish(tag: FamilyTag, kind: FactorKind, table: TableGroup, generators: Vec<usize>) -> Arc<Self> {
        let classes = classes_of(&table);
        Arc::new(Factor {
            tag,
            kind,
            table,
            generators,
            classes,
        })
    }

    /// Abelian group `Z/m_1 x ... x Z/m_r`.
    pub fn abelian(tag: FamilyTag, moduli: Vec<u32>) -> Result<Arc<Self>> {
        Self::semidirect(tag, moduli, None, Vec::new())
    }

    /// `N x| top`, with `gen_actions[i]` the action of `top.generators[i]`.
    pub fn semidirect(
        tag: FamilyTag,
        moduli: Vec<u32>,
        top: Option<Arc<Factor>>,
        gen_actions: Vec<Mat>,
    ) -> Result<Arc<Self>> {
        let n_order: usize = moduli.iter().map(|&m| m as usize).product();
        let t_order = top.as_ref().map_or(1, |t| t.order());
        let order = n_order * t_order;
        if order > TABLE_BOUND {
            return Err(Error::OrderBound {
                what: format!("group {tag}"),
                order,
                bound: TABLE_BOUND,
            });
        }
        let action = match &top {
            None => Vec::new(),
            Some(t) => {
                let m = moduli[0];
                if moduli.iter().any(|&x| x != m) {
                    return Err(Error::InvalidAction("acted-on part must be homogeneous".into()));
                }
                if n_order.gcd(&t_order) != 1 {
                    return Err(Error::NotCoprime(format!("|N| = {n_order}, |T| = {t_order}")));
                }
                extend_action(t, &gen_actions, moduli.len(), m)?
            }
        };
        let radix = moduli.clone();
        let split = |x: usize| -> (Vec<u32>, usize) {
            let (mut ni, ti) = (x / t_order, x % t_order);
            let mut v = vec![0u32; radix.len()];
            for i in (0..radix.len()).rev() {
                v[i] = (ni % radix[i] as usize) as u32;
                ni /= radix[i] as usize;
            }
            (v, ti)
        };
        let join = |v: &[u32], t: usize| -> usize {
            let mut ni = 0usize;
            for (i, &x) in v.iter().enumerate() {
                ni = ni * radix[i] as usize + x as usize;
            }
            ni * t_order + t
        };
        let table = TableGroup::from_fn(order, |a, b| {
            let (da, ta) = split(a);
            let (db, tb) = split(b);
            let moved = match &top {
                Some(_) => action[ta].apply(&db),
                None => db,
            };
            let d: Vec<u32> = (0..radix.len()).map(|i| (da[i] + moved[i]) % radix[i]).collect();
            let t = top.as_ref().map_or(0, |tp| tp.table.mul(ta, tb));
            join(&d, t)
        })?;
        let mut generators = Vec::new();
        for i in 0..moduli.len() {
            let mut v = vec![0u32; moduli.len()];
            v[i] = 1;
            generators.push(join(&v, 0));
        }
        if let Some(t) = &top {
            generators.extend(t.generators.iter().copied());
        }
        let kind = FactorKind::Semidirect { moduli, top, action };
        Ok(Self::finish(tag, kind, table, generators))
    }

    pub fn alternating5() -> Arc<Self> {
        let id: Vec<u8> = (0..5).collect();
        let gens = vec![vec![1u8, 2, 3, 4, 0], vec![1u8, 2, 0, 3, 4]];
        let mul = |a: &Vec<u8>, b: &Vec<u8>| -> Vec<u8> { (0..5).map(|i| a[b[i] as usize]).collect() };
        let (table, perms) = TableGroup::from_closure(id, &gens, mul, 100).expect("A5 has order 60");
        let generators = vec![perms.iter().position(|p| *p == gens[0]).unwrap(), perms.iter().position(|p| *p == gens[1]).unwrap()];
        Self::finish(FamilyTag::A5, FactorKind::Perm { degree: 5, perms }, table, generators)
    }

    /// The moduli of the abelian normal part (empty for permutation groups).
    pub fn normal_moduli(&self) -> &[u32] {
        match &self.kind {
            FactorKind::Semidirect { moduli, .. } => moduli,
            FactorKind::Perm { .. } => &[],
        }
    }

    pub fn top(&self) -> Option<&Arc<Factor>> {
        match &self.kind {
            FactorKind::Semidirect { top, .. } => top.as_ref(),
            FactorKind::Perm { .. } => None,
        }
    }

    pub fn top_order(&self) -> usize {
        self.top().map_or(1, |t| t.order())
    }

    /// Action matrices indexed by top element.
    pub fn action(&self) -> &[Mat] {
        match &self.kind {
            FactorKind::Semidirect { action, .. } => action,
            FactorKind::Perm { .. } => &[],
        }
    }

    /// `(normal coordinates, top index)` of an element.
    pub fn split(&self, x: usize) -> (Vec<u32>, usize) {
        let radix = self.normal_moduli();
        let t_order = self.top_order();
        let (mut ni, ti) = (x / t_order, x % t_order);
        let mut v = vec![0u32; radix.len()];
        for i in (0..radix.len()).rev() {
            v[i] = (ni % radix[i] as usize) as u32;
            ni /= radix[i] as usize;
        }
        (v, ti)
    }

    pub fn join(&self, v: &[u32], t: usize) -> usize {
        let radix = self.normal_moduli();
        let mut ni = 0usize;
        for (i, &x) in v.iter().enumerate() {
            ni = ni * radix[i] as usize + (x % radix[i]) as usize;
        }
        ni * self.top_order() + t
    }

    /// Indices of the abelian normal part.
    pub fn normal_part(&self) -> Vec<usize> {
        let t = self.top_order();
        (0..self.order()).filter(|x| x % t == 0).collect()
    }

    /// Automorphism `(d, t) -> (A d, t')` with `A_{t'} = A A_t A^{-1}`, as an
    /// element map; `None` if `A` does not normalize the action image or the
    /// action is not faithful.
    pub fn automorphism_from_matrix(&self, a: &Mat) -> Option<Vec<u32>> {
        let action = self.action();
        let ai = a.inverse()?;
        let t_order = self.top_order();
        let mut tmap = vec![0usize; t_order];
        for (t, m) in action.iter().enumerate() {
            let target = a.mul(m).mul(&ai);
            let hits: Vec<usize> = (0..t_order).filter(|&s| action[s] == target).collect();
            if hits.len() != 1 {
                return None;
            }
            tmap[t] = hits[0];
        }
        if action.is_empty() {
            tmap[0] = 0;
        }
        Some(
            (0..self.order())
                .map(|x| {
                    let (d, t) = self.split(x);
                    self.join(&a.apply(&d), tmap[t]) as u32
                })
                .collect(),
        )
    }
}

fn extend_action(top: &Factor, gen_actions: &[Mat], k: usize, m: u32) -> Result<Vec<Mat>> {
    if gen_actions.len() != top.generators.len() {
        return Err(Error::InvalidAction("one matrix per top generator".into()));
    }
    for a in gen_actions {
        if a.dim() != k || a.modulus() != m || !a.is_invertible() {
            return Err(Error::InvalidAction("action matrices must be invertible of matching shape".into()));
        }
    }
    let n = top.order();
    let mut act: Vec<Option<Mat>> = vec![None; n];
    act[0] = Some(Mat::identity(k, m));
    let mut q = VecDeque::from([0usize]);
    while let Some(x) = q.pop_front() {
        let ax = act[x].unwrap();
        for (g, ag) in top.generators.iter().zip(gen_actions) {
            let y = top.table.mul(x, *g);
            let ay = ax.mul(ag);
            match act[y] {
                None => {
                    act[y] = Some(ay);
                    q.push_back(y);
                }
                Some(prev) if prev != ay => {
                    return Err(Error::InvalidAction("matrices do not define a homomorphism".into()));
                }
                _ => {}
            }
        }
    }
    Ok(act.into_iter().map(|a| a.expect("generators generate")).collect())
}

/// Builds the factor for a non-product tag.
pub fn build_factor(tag: &FamilyTag) -> Result<Arc<Factor>> {
    let cyc = |m: u32| Factor::abelian(FamilyTag::Cyclic(m), vec![m]);
    match tag {
        FamilyTag::Trivial => Factor::abelian(FamilyTag::Trivial, Vec::new()),
        FamilyTag::Abelian(e) => Factor::abelian(tag.clone(), e.iter().map(|&x| 1u32 << x).collect()),
        FamilyTag::Cyclic(m) => cyc(*m),
        FamilyTag::G(n) => {
            let m = 1u32 << n;
            Factor::semidirect(tag.clone(), vec![m, m], Some(cyc(3)?), vec![matring::c3_generator(m)])
        }
        FamilyTag::F21 => Factor::semidirect(tag.clone(), vec![7], Some(cyc(3)?), vec![Mat::new(1, 7, &[2])]),
        FamilyTag::E7(n) => {
            let m = 1u32 << n;
            Factor::semidirect(tag.clone(), vec![m; 3], Some(cyc(7)?), vec![matring::c7_generator(*n)])
        }
        FamilyTag::E21(n) => {
            let m = 1u32 << n;
            let c = matring::c7_generator(*n);
            let mm = matring::f21_normalizing_element(&c, *n)?;
            let top = build_factor(&FamilyTag::F21)?;
            // F21 generators: the C_7 unit vector, then the C_3 generator
            Factor::semidirect(tag.clone(), vec![m; 3], Some(top), vec![c, mm])
        }
        FamilyTag::Borel(n) => {
            let s = matring::singer_cycle(*n as usize)?;
            let q = (1u32 << n) - 1;
            Factor::semidirect(tag.clone(), vec![2; *n as usize], Some(cyc(q)?), vec![s])
        }
        FamilyTag::A5 => Ok(Factor::alternating5()),
        FamilyTag::AutSL28 => Err(Error::Unsupported(
            "AutSL28 is available as block data only".into(),
        )),
        FamilyTag::Product(_) => Err(Error::Unsupported("products are not factors".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_class_counts() {
        let cases = [
            ("G(1)", 12, 4),
            ("G(2)", 48, 8),
            ("E8:C7", 56, 8),
            ("F21", 21, 5),
            ("A5", 60, 5),
            ("B(2)", 12, 4),
        ];
        for (s, order, classes) in cases {
            let f = build_factor(&s.parse().unwrap()).unwrap();
            assert_eq!(f.order(), order, "{s}");
            assert_eq!(f.classes.reps.len(), classes, "{s}");
            assert_eq!(f.classes.sizes.iter().sum::<usize>(), order);
        }
    }

    #[test]
    fn a4_class_shapes() {
        let f = build_factor(&FamilyTag::G(1)).unwrap();
        let orders: Vec<u32> = f.classes.reps.iter().map(|&r| f.table.elem_order(r)).collect();
        assert_eq!(orders, vec![1, 2, 3, 3]);
        assert_eq!(f.classes.sizes, vec![1, 3, 4, 4]);
    }

    #[test]
    fn normalizer_matrices_give_automorphisms() {
        let f = build_factor(&FamilyTag::G(1)).unwrap();
        let a = Mat::new(2, 2, &[0, 1, 1, 0]);
        let phi = f.automorphism_from_matrix(&a).unwrap();
        for x in 0..12 {
            for y in 0..12 {
                assert_eq!(phi[f.table.mul(x, y)] as usize, f.table.mul(phi[x] as usize, phi[y] as usize));
            }
        }
    }
}
