//! Signed permutations of an indexed character list.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::table::TableGroup;
use crate::error::{Error, Result};

/// Guard on closures of signed-permutation groups.
pub const CLOSURE_BOUND: usize = 1_000_000;

/// `i -> signs[i] * perm[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SignedPerm {
    pub perm: Vec<u16>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n as u16).collect(),
            signs: vec![1; n],
        }
    }

    pub fn negation(n: usize) -> Self {
        SignedPerm {
            perm: (0..n as u16).collect(),
            signs: vec![-1; n],
        }
    }

    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::MalformedBijection("sign and permutation lengths differ".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::MalformedBijection(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::MalformedBijection("signs must be +1 or -1".into()));
        }
        Ok(SignedPerm {
            perm: perm.into_iter().map(|p| p as u16).collect(),
            signs,
        })
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> (usize, i8) {
        (self.perm[i] as usize, self.signs[i])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.degree();
        let mut perm = vec![0u16; n];
        let mut signs = vec![0i8; n];
        for i in 0..n {
            let (j, s) = other.image(i);
            let (k, t) = self.image(j);
            perm[i] = k as u16;
            signs[i] = s * t;
        }
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.degree();
        let mut perm = vec![0u16; n];
        let mut signs = vec![0i8; n];
        for i in 0..n {
            let (j, s) = self.image(i);
            perm[j] = i as u16;
            signs[j] = s;
        }
        SignedPerm { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn all_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn all_negative(&self) -> bool {
        self.signs.iter().all(|&s| s == -1)
    }

    /// The underlying permutation fixes every point.
    pub fn fixes_all_points(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn order(&self) -> usize {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
        }
        k
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.degree())
            .map(|i| {
                let (j, s) = self.image(i);
                format!("{i}->{}{j}", if s < 0 { "-" } else { "" })
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SignedPermGroup {
    pub degree: usize,
    pub generators: Vec<(SignedPerm, String)>,
    /// Identity first, then breadth-first order.
    #[serde(skip)]
    pub elements: Vec<SignedPerm>,
    #[serde(skip)]
    index: HashMap<SignedPerm, usize>,
}

impl SignedPermGroup {
    pub fn closure(degree: usize, generators: Vec<(SignedPerm, String)>) -> Result<Self> {
        Self::closure_bounded(degree, generators, CLOSURE_BOUND)
    }

    pub fn closure_bounded(degree: usize, generators: Vec<(SignedPerm, String)>, bound: usize) -> Result<Self> {
        if let Some((g, _)) = generators.iter().find(|(g, _)| g.degree() != degree) {
            return Err(Error::MalformedBijection(format!("generator {g} has the wrong degree")));
        }
        let gens: Vec<SignedPerm> = generators.iter().map(|(g, _)| g.clone()).collect();
        let elements =
            super::table::closure(SignedPerm::identity(degree), &gens, &|a: &SignedPerm, b: &SignedPerm| a.compose(b), bound)?;
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Ok(SignedPermGroup {
            degree,
            generators,
            elements,
            index,
        })
    }

    /// Group on an explicit element list, which must be closed.
    pub fn from_elements(degree: usize, mut elements: Vec<SignedPerm>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let id = SignedPerm::identity(degree);
        let pos = elements
            .iter()
            .position(|e| *e == id)
            .ok_or_else(|| Error::Verification {
                case: "signed-permutation set".into(),
                claim: "contains the identity".into(),
            })?;
        elements.swap(0, pos);
        elements[1..].sort();
        let index: HashMap<SignedPerm, usize> = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        for a in &elements {
            for b in &elements {
                if !index.contains_key(&a.compose(b)) {
                    return Err(Error::Verification {
                        case: "signed-permutation set".into(),
                        claim: "closed under composition".into(),
                    });
                }
            }
        }
        let mut g = SignedPermGroup {
            degree,
            generators: Vec::new(),
            elements,
            index,
        };
        let tg = g.table_group()?;
        g.generators = tg
            .small_generating_set()
            .into_iter()
            .map(|i| (g.elements[i].clone(), "element".to_string()))
            .collect();
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &SignedPerm) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &SignedPerm) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Sorted element list; canonical regardless of generators.
    pub fn sorted_elements(&self) -> Vec<SignedPerm> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }

    pub fn table_group(&self) -> Result<TableGroup> {
        TableGroup::from_fn(self.order(), |a, b| self.index[&self.elements[a].compose(&self.elements[b])])
    }

    /// Subgroup generated by some elements.
    pub fn subgroup(&self, gens: Vec<(SignedPerm, String)>) -> Result<Self> {
        Self::closure(self.degree, gens)
    }

    /// Elements fixing every point (any signs); for positive groups this is
    /// the kernel of the action on the character set.
    pub fn point_kernel(&self) -> Vec<&SignedPerm> {
        self.elements.iter().filter(|e| e.fixes_all_points()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let g = SignedPermGroup::closure(1, vec![(SignedPerm::negation(1), "neg".into())]).unwrap();
        assert_eq!(g.order(), 2);
        let g = SignedPermGroup::closure(3, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        let s4 = vec![
            (SignedPerm::from_perm(vec![1, 2, 3, 0]).unwrap(), "4-cycle".into()),
            (SignedPerm::from_perm(vec![1, 0, 2, 3]).unwrap(), "transposition".into()),
            (SignedPerm::negation(4), "sign".into()),
        ];
        assert_eq!(SignedPermGroup::closure(4, s4).unwrap().order(), 48);
    }

    #[test]
    fn compose_and_inverse() {
        let a = SignedPerm::new(vec![1, 2, 0], vec![1, -1, 1]).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.order(), 6);
        assert!(SignedPerm::new(vec![0, 0], vec![1, 1]).is_err());
    }
}
