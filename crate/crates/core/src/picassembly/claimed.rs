//! Abstract groups of the shape `Hom(E, C^×) x| Q`, built without any
//! reference to characters of the block.

use std::collections::VecDeque;

use crate::groups::table::{standard, TableGroup};
use crate::matring::{Mat, MatSubgroup};

/// All homomorphisms `g -> Z/e` with `e` the exponent of `g`, as value
/// vectors over the elements. The trivial homomorphism is first.
pub fn homomorphisms_to_cyclic(g: &TableGroup) -> (u32, Vec<Vec<u32>>) {
    let e = (0..g.order()).map(|x| g.elem_order(x)).fold(1u32, num_integer::lcm);
    let gens = g.small_generating_set();
    let mut out = Vec::new();
    let total = (e as usize).pow(gens.len() as u32);
    'assign: for code in 0..total {
        let mut vals = vec![0u32; gens.len()];
        let mut c = code;
        for v in vals.iter_mut() {
            *v = (c % e as usize) as u32;
            c /= e as usize;
        }
        let mut h = vec![u32::MAX; g.order()];
        h[0] = 0;
        let mut q = VecDeque::from([0usize]);
        while let Some(x) = q.pop_front() {
            for (&s, &v) in gens.iter().zip(&vals) {
                let y = g.mul(x, s);
                let w = (h[x] + v) % e;
                if h[y] == u32::MAX {
                    h[y] = w;
                    q.push_back(y);
                } else if h[y] != w {
                    continue 'assign;
                }
            }
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if h[g.mul(a, b)] != (h[a] + h[b]) % e {
                    continue 'assign;
                }
            }
        }
        out.push(h);
    }
    out.sort();
    (e, out)
}

/// `Hom(g, C^×) x| Q` where `q` acts on `g` through the automorphisms
/// `autos[q]` (element maps) and on homomorphisms by `λ -> λ ∘ a_q^{-1}`.
pub fn dual_semidirect(g: &TableGroup, q: &TableGroup, autos: &[Vec<u32>]) -> TableGroup {
    let (e, homs) = homomorphisms_to_cyclic(g);
    let h = homs.len();
    let pos = |v: &[u32]| homs.iter().position(|x| x.as_slice() == v).expect("closed under the action");
    let add: Vec<Vec<usize>> = (0..h)
        .map(|a| {
            (0..h)
                .map(|b| pos(&homs[a].iter().zip(&homs[b]).map(|(x, y)| (x + y) % e).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let act: Vec<Vec<usize>> = autos
        .iter()
        .map(|a| {
            let mut inv = vec![0usize; a.len()];
            for (x, &y) in a.iter().enumerate() {
                inv[y as usize] = x;
            }
            (0..h)
                .map(|l| pos(&inv.iter().map(|&x| homs[l][x]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let k = q.order();
    TableGroup::from_fn(h * k, |x, y| {
        let (l1, q1) = (x / k, x % k);
        let (l2, q2) = (y / k, y % k);
        add[l1][act[q1][l2]] * k + q.mul(q1, q2)
    })
    .expect("small semidirect product")
}

/// `Hom(P, C^×) x| Aut(P)` for an abelian group `P`.
pub fn dual_by_automorphisms(p: &TableGroup) -> TableGroup {
    let autos = p.automorphisms();
    let pos = |m: &Vec<u32>| autos.iter().position(|a| a == m).expect("automorphisms are closed");
    let n = p.order();
    let q = TableGroup::from_fn(autos.len(), |a, b| {
        pos(&(0..n).map(|x| autos[a][autos[b][x] as usize]).collect())
    })
    .expect("small automorphism group");
    dual_semidirect(p, &q, &autos)
}

/// `Hom(E, C^×) x| N/E` for `E` normal in `N`, with `N/E` acting by
/// conjugation through coset representatives.
pub fn dual_by_normalizer(e: &MatSubgroup, n: &MatSubgroup) -> TableGroup {
    let (et, el) = e.table_group().expect("small subgroup");
    let (nt, nl) = n.table_group().expect("small normalizer");
    let epos = |m: &Mat| el.iter().position(|x| x == m).expect("normalized subgroup");
    let mut label = vec![usize::MAX; nl.len()];
    let mut reps = Vec::new();
    for g in 0..nl.len() {
        if label[g] == usize::MAX {
            let id = reps.len();
            reps.push(g);
            for s in &el {
                label[nl.iter().position(|x| *x == nl[g].mul(s)).expect("coset in normalizer")] = id;
            }
        }
    }
    let q = TableGroup::from_fn(reps.len(), |a, b| label[nt.mul(reps[a], reps[b])]).expect("small quotient");
    let autos: Vec<Vec<u32>> = reps
        .iter()
        .map(|&r| {
            let a = nl[r];
            let ai = a.inverse().expect("invertible");
            el.iter().map(|x| epos(&x.conj_by(&a, &ai)) as u32).collect()
        })
        .collect();
    dual_semidirect(&et, &q, &autos)
}

/// `C_m x| C_n` with the generator acting by `x -> x^2`.
pub fn frobenius_type(m: usize, n: usize) -> TableGroup {
    let q = standard::cyclic(n);
    standard::cyclic_by(m, &q, |x| {
        let mut u = 1usize;
        for _ in 0..x {
            u = u * 2 % m;
        }
        u
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::iso_test;

    #[test]
    fn duals_of_small_groups() {
        let c4 = standard::cyclic(4);
        assert_eq!(homomorphisms_to_cyclic(&c4).1.len(), 4);
        let c4x1 = c4.direct_product(&standard::cyclic(1)).unwrap();
        assert_eq!(dual_by_automorphisms(&c4x1).order(), 8);
        let k = standard::cyclic(2).direct_product(&standard::cyclic(2)).unwrap();
        assert!(iso_test(&dual_by_automorphisms(&k), &standard::symmetric(4)));
        assert!(iso_test(&frobenius_type(3, 2), &standard::symmetric(3)));
    }
}
