//! Groups given by an explicit multiplication table.
//!
//! Every concrete group in the crate (explicit families, matrix groups,
//! signed-permutation groups, quotients) can be flattened into a
//! [`TableGroup`]; fingerprints, isomorphism tests and brute-force
//! automorphism groups are implemented once, here.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest group that is ever flattened into a table.
pub const TABLE_BOUND: usize = 10_000;

#[derive(Clone, Debug)]
pub struct TableGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

/// Isomorphism invariants of a finite group. Equal fingerprints are
/// necessary for isomorphism, not sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs in increasing order.
    pub order_histogram: Vec<(u32, usize)>,
    /// Elementary divisors of the abelianization (prime powers, sorted).
    pub abelian_invariants: Vec<u32>,
    /// Orders of `G, G', G'', ...` until the series stabilizes.
    pub derived_series: Vec<usize>,
    pub center_order: usize,
}

impl TableGroup {
    /// Builds the table from a complete multiplication function on `0..n`,
    /// with `0` the identity.
    pub fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if n > TABLE_BOUND {
            return Err(Error::OrderBound {
                what: "table group".into(),
                order: n,
                bound: TABLE_BOUND,
            });
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = mul(a, b) as u32;
            }
        }
        Ok(Self::from_table(n, table))
    }

    fn from_table(n: usize, table: Vec<u32>) -> Self {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = table[x * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
        }
        TableGroup {
            n,
            table,
            inv,
            orders,
        }
    }

    /// Closure of `gens` under `mul`. Returns the table group and the
    /// element list (index 0 is `identity`, then breadth-first order).
    pub fn from_closure<T, F>(identity: T, gens: &[T], mul: F, bound: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let elems = closure(identity, gens, &mul, bound)?;
        let index: HashMap<&T, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let g = Self::from_fn(elems.len(), |a, b| index[&mul(&elems[a], &elems[b])])?;
        Ok((g, elems))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elem_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut q = VecDeque::from([0usize]);
        while let Some(x) = q.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    q.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let mut mark = vec![false; self.n];
        for &s in sub {
            mark[s] = true;
        }
        (0..self.n).all(|g| sub.iter().all(|&s| mark[self.conj(g, s)]))
    }

    /// Quotient by a normal subgroup; cosets are labelled by their smallest
    /// element.
    pub fn quotient(&self, normal: &[usize]) -> Result<Self> {
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let mut label = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if label[g] == usize::MAX {
                let id = reps.len();
                reps.push(g);
                for &s in normal {
                    label[self.mul(g, s)] = id;
                }
            }
        }
        Self::from_fn(reps.len(), |a, b| label[self.mul(reps[a], reps[b])])
    }

    pub fn direct_product(&self, other: &Self) -> Result<Self> {
        let m = other.n;
        Self::from_fn(self.n * m, |a, b| {
            self.mul(a / m, b / m) * m + other.mul(a % m, b % m)
        })
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comm = vec![false; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comm[c] = true;
            }
        }
        let gens: Vec<usize> = (0..self.n).filter(|&c| comm[c]).collect();
        self.subgroup(&gens)
    }

    fn restrict(&self, sub: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = sub.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        // sub is sorted and contains 0 first
        let k = sub.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in sub.iter().enumerate() {
            for (j, &b) in sub.iter().enumerate() {
                table[i * k + j] = pos[&self.mul(a, b)] as u32;
            }
        }
        Self::from_table(k, table)
    }

    pub fn derived_series(&self) -> Vec<usize> {
        let mut out = vec![self.n];
        let mut cur = self.clone();
        loop {
            let d = cur.derived_subgroup();
            if d.len() == cur.n {
                break;
            }
            out.push(d.len());
            if d.len() == 1 {
                break;
            }
            cur = cur.restrict(&d);
        }
        out
    }

    pub fn abelian_invariants(&self) -> Vec<u32> {
        let d = self.derived_subgroup();
        let q = self.quotient(&d).expect("derived subgroup is normal");
        abelian_invariants_of(&q)
    }

    pub fn order_histogram(&self) -> Vec<(u32, usize)> {
        let mut h: BTreeMap<u32, usize> = BTreeMap::new();
        for &o in &self.orders {
            *h.entry(o).or_default() += 1;
        }
        h.into_iter().collect()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.n,
            order_histogram: self.order_histogram(),
            abelian_invariants: self.abelian_invariants(),
            derived_series: self.derived_series(),
            center_order: self.center().len(),
        }
    }

    /// Conjugacy class size of every element.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut size = vec![0usize; self.n];
        let mut done = vec![false; self.n];
        for x in 0..self.n {
            if done[x] {
                continue;
            }
            let mut cls: Vec<usize> = (0..self.n).map(|g| self.conj(g, x)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                done[y] = true;
                size[y] = cls.len();
            }
        }
        size
    }

    /// Greedy small generating set: repeatedly adjoin the element that
    /// enlarges the generated subgroup the most.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = vec![0usize];
        while cur.len() < self.n {
            let mut inside = vec![false; self.n];
            for &x in &cur {
                inside[x] = true;
            }
            let mut best: Option<(usize, usize)> = None;
            for x in 0..self.n {
                if inside[x] {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(x);
                let size = self.subgroup(&trial).len();
                if best.is_none_or(|(s, _)| size > s) {
                    best = Some((size, x));
                    if size == self.n {
                        break;
                    }
                }
            }
            let (_, x) = best.expect("proper subgroup has an outside element");
            gens.push(x);
            cur = self.subgroup(&gens);
        }
        gens
    }

    /// Extends `gens[i] -> images[i]` to a homomorphism on the generated
    /// subgroup; `None` if the assignment is inconsistent.
    fn extend_hom(&self, other: &Self, gens: &[usize], images: &[usize]) -> Option<Vec<u32>> {
        let mut phi = vec![u32::MAX; self.n];
        phi[0] = 0;
        let mut q = VecDeque::from([0usize]);
        while let Some(x) = q.pop_front() {
            let px = phi[x] as usize;
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let py = other.mul(px, h) as u32;
                if phi[y] == u32::MAX {
                    phi[y] = py;
                    q.push_back(y);
                } else if phi[y] != py {
                    return None;
                }
            }
        }
        Some(phi)
    }

    fn signatures(&self) -> Vec<(u32, usize)> {
        let sizes = self.class_sizes();
        (0..self.n).map(|x| (self.orders[x], sizes[x])).collect()
    }

    /// Backtracking over generator images. `stop_first` returns after the
    /// first bijective homomorphism.
    fn search_isos(&self, other: &Self, stop_first: bool) -> Vec<Vec<u32>> {
        let mut found = Vec::new();
        if self.n != other.n {
            return found;
        }
        let gens = self.small_generating_set();
        let sig_a = self.signatures();
        let sig_b = other.signatures();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| (0..other.n).filter(|&h| sig_b[h] == sig_a[g]).collect())
            .collect();
        let mut images = Vec::with_capacity(gens.len());
        self.iso_rec(other, &gens, &candidates, &mut images, &mut found, stop_first);
        found
    }

    fn iso_rec(
        &self,
        other: &Self,
        gens: &[usize],
        cands: &[Vec<usize>],
        images: &mut Vec<usize>,
        found: &mut Vec<Vec<u32>>,
        stop_first: bool,
    ) -> bool {
        let depth = images.len();
        if depth == gens.len() {
            let phi = match self.extend_hom(other, gens, images) {
                Some(p) => p,
                None => return false,
            };
            let mut hit = vec![false; other.n];
            for &y in &phi {
                if hit[y as usize] {
                    return false;
                }
                hit[y as usize] = true;
            }
            found.push(phi);
            return stop_first;
        }
        for &h in &cands[depth] {
            images.push(h);
            let ok = self.extend_hom(other, &gens[..=depth], images).is_some();
            if ok && self.iso_rec(other, gens, cands, images, found, stop_first) {
                images.pop();
                return true;
            }
            images.pop();
        }
        false
    }

    /// An isomorphism `self -> other` as an element map, if one exists.
    pub fn isomorphism(&self, other: &Self) -> Option<Vec<u32>> {
        if self.fingerprint() != other.fingerprint() {
            return None;
        }
        self.search_isos(other, true).into_iter().next()
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.isomorphism(other).is_some()
    }

    /// All automorphisms, as element maps.
    pub fn automorphisms(&self) -> Vec<Vec<u32>> {
        let mut all = self.search_isos(self, false);
        all.sort();
        all
    }
}

/// Elementary divisors of an abelian table group.
pub fn abelian_invariants_of(q: &TableGroup) -> Vec<u32> {
    let n = q.order();
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2usize;
    while m > 1 {
        if !m.is_multiple_of(p) {
            p += 1;
            continue;
        }
        while m.is_multiple_of(p) {
            m /= p;
        }
        // c_j = log_p #{x : x^(p^j) = 1}
        let mut c = vec![0u32];
        let mut j = 1u32;
        loop {
            let pj = p.pow(j) as u32;
            let cnt = (0..n).filter(|&x| pj.is_multiple_of(q.elem_order(x))).count();
            let mut e = 0;
            let mut t = cnt;
            while t > 1 {
                t /= p;
                e += 1;
            }
            c.push(e);
            if c[j as usize] == c[j as usize - 1] {
                break;
            }
            j += 1;
        }
        let at_least: Vec<u32> = (1..c.len()).map(|j| c[j] - c[j - 1]).collect();
        for j in 1..=at_least.len() {
            let ge = at_least[j - 1];
            let ge_next = at_least.get(j).copied().unwrap_or(0);
            for _ in 0..(ge - ge_next) {
                out.push(p.pow(j as u32) as u32);
            }
        }
        p += 1;
    }
    out.sort_unstable();
    out
}

/// Breadth-first closure of `gens` under `mul`.
pub fn closure<T, F>(identity: T, gens: &[T], mul: &F, bound: usize) -> Result<Vec<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut index: HashMap<T, ()> = HashMap::new();
    index.insert(identity.clone(), ());
    let mut elems = vec![identity];
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        head += 1;
        for g in gens {
            let y = mul(&x, g);
            if !index.contains_key(&y) {
                if elems.len() >= bound {
                    return Err(Error::OrderBound {
                        what: "closure".into(),
                        order: elems.len() + 1,
                        bound,
                    });
                }
                index.insert(y.clone(), ());
                elems.push(y);
            }
        }
    }
    Ok(elems)
}

/// Standard small groups used as comparison targets.
pub mod standard {
    use super::*;

    fn perm_group(degree: usize, gens: &[Vec<usize>]) -> TableGroup {
        let id: Vec<usize> = (0..degree).collect();
        let mul = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { (0..a.len()).map(|i| a[b[i]]).collect() };
        TableGroup::from_closure(id, gens, mul, TABLE_BOUND)
            .expect("standard groups are small")
            .0
    }

    pub fn cyclic(m: usize) -> TableGroup {
        TableGroup::from_fn(m, |a, b| (a + b) % m).expect("small")
    }

    pub fn symmetric(k: usize) -> TableGroup {
        if k <= 1 {
            return cyclic(1);
        }
        let mut cyc: Vec<usize> = (1..k).collect();
        cyc.push(0);
        let mut tr: Vec<usize> = (0..k).collect();
        tr.swap(0, 1);
        perm_group(k, &[cyc, tr])
    }

    pub fn dihedral(order: usize) -> TableGroup {
        let m = order / 2;
        let rot: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
        let refl: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
        perm_group(m, &[rot, refl])
    }

    /// `K wr S_2`: pairs with a swap.
    pub fn wreath_s2(k: &TableGroup) -> TableGroup {
        let n = k.order();
        TableGroup::from_fn(2 * n * n, |a, b| {
            let (sa, a1, a2) = (a / (n * n), (a / n) % n, a % n);
            let (sb, b1, b2) = (b / (n * n), (b / n) % n, b % n);
            // (x1, x2; s) acts by permuting coordinates after multiplying
            let (b1, b2) = if sa == 1 { (b2, b1) } else { (b1, b2) };
            let s = sa ^ sb;
            s * n * n + k.mul(a1, b1) * n + k.mul(a2, b2)
        })
        .expect("small wreath product")
    }

    /// `Z/m x| Q` where `q` acts on `Z/m` by multiplication with `unit(q)`.
    pub fn cyclic_by(m: usize, q: &TableGroup, unit: impl Fn(usize) -> usize) -> TableGroup {
        let k = q.order();
        let units: Vec<usize> = (0..k).map(|x| unit(x) % m).collect();
        TableGroup::from_fn(m * k, |a, b| {
            let (a0, a1) = (a / k, a % k);
            let (b0, b1) = (b / k, b % k);
            ((a0 + units[a1] * b0) % m) * k + q.mul(a1, b1)
        })
        .expect("small semidirect product")
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;

    #[test]
    fn basic_invariants() {
        let s4 = symmetric(4);
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.abelian_invariants(), vec![2]);
        assert_eq!(s4.derived_series(), vec![24, 12, 4, 1]);
        assert_eq!(s4.center().len(), 1);
        let c2c2 = cyclic(2).direct_product(&cyclic(2)).unwrap();
        assert_eq!(c2c2.abelian_invariants(), vec![2, 2]);
        let c12 = cyclic(12);
        assert_eq!(c12.abelian_invariants(), vec![3, 4]);
    }

    #[test]
    fn iso_examples() {
        assert!(!cyclic(4).is_isomorphic(&cyclic(2).direct_product(&cyclic(2)).unwrap()));
        assert!(dihedral(8).is_isomorphic(&wreath_s2(&cyclic(2))));
        assert!(symmetric(3).is_isomorphic(&dihedral(6)));
        assert!(cyclic(6).is_isomorphic(&cyclic(2).direct_product(&cyclic(3)).unwrap()));
        assert!(!symmetric(3).is_isomorphic(&cyclic(6)));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(cyclic(2).direct_product(&cyclic(2)).unwrap().automorphisms().len(), 6);
        assert_eq!(symmetric(3).automorphisms().len(), 6);
        assert_eq!(cyclic(8).automorphisms().len(), 4);
        assert_eq!(dihedral(8).automorphisms().len(), 8);
    }

    #[test]
    fn quotient_and_semidirect() {
        let s4 = symmetric(4);
        let d = s4.derived_subgroup();
        assert_eq!(s4.quotient(&d).unwrap().order(), 2);
        let f21 = cyclic_by(7, &cyclic(3), |x| [1, 2, 4][x]);
        assert_eq!(f21.order(), 21);
        assert_eq!(f21.center().len(), 1);
        let c7c3 = cyclic_by(7, &cyclic(3), |_| 1);
        assert!(c7c3.is_abelian());
    }
}
