//! Character tables of single factors.
//!
//! `N x| T` with `N` abelian and `|N|`, `|T|` coprime: every character is
//! induced from `N x| S` where `S` is the stabilizer of a linear character
//! `λ` of `N`, extended trivially on `S`. Only `S = T` and cyclic `S` are
//! supported, which covers every family here.

use num_integer::Integer;

use crate::cyclo::{ring, CycNum};
use crate::error::{Error, Result};
use crate::groups::factor::{Factor, FactorKind};
use crate::matring::Mat;

/// Irreducible characters of one factor, columns indexed by factor classes.
#[derive(Clone, Debug)]
pub struct FactorTable {
    pub conductor: u32,
    pub irr: Vec<Vec<CycNum>>,
    pub labels: Vec<String>,
}

pub fn factor_exponent(f: &Factor) -> u32 {
    (0..f.order()).fold(1u32, |acc, x| acc.lcm(&f.table.elem_order(x)))
}

fn vec_label(y: &[u32]) -> String {
    let parts: Vec<String> = y.iter().map(|v| v.to_string()).collect();
    format!("λ({})", parts.join(","))
}

/// Mixed-radix index helpers for dual vectors.
fn dual_vectors(moduli: &[u32]) -> Vec<Vec<u32>> {
    let total: usize = moduli.iter().map(|&m| m as usize).product();
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0u32; moduli.len()];
            for i in (0..moduli.len()).rev() {
                v[i] = (idx % moduli[i] as usize) as u32;
                idx /= moduli[i] as usize;
            }
            v
        })
        .collect()
}

pub fn factor_table(f: &Factor) -> Result<FactorTable> {
    match &f.kind {
        FactorKind::Perm { .. } => Ok(alternating5_table()),
        FactorKind::Semidirect { moduli, top, action } => match top {
            None => Ok(abelian_table(f, moduli)),
            Some(t) => semidirect_table(f, moduli, t, action),
        },
    }
}

fn abelian_table(f: &Factor, moduli: &[u32]) -> FactorTable {
    let n = factor_exponent(f);
    let r = ring(n);
    let ys = dual_vectors(moduli);
    let reps = &f.classes.reps;
    let mut irr = Vec::with_capacity(ys.len());
    let mut labels = Vec::with_capacity(ys.len());
    for y in &ys {
        let row = reps
            .iter()
            .map(|&x| {
                let (d, _) = f.split(x);
                let e: i64 = (0..moduli.len())
                    .map(|i| (y[i] as i64) * (d[i] as i64) * (n / moduli[i]) as i64)
                    .sum();
                CycNum::from_int_coords(n, r.power(e))
            })
            .collect();
        irr.push(row);
        labels.push(if y.iter().all(|&v| v == 0) { "1".to_string() } else { vec_label(y) });
    }
    FactorTable {
        conductor: n,
        irr,
        labels,
    }
}

fn semidirect_table(f: &Factor, moduli: &[u32], top: &Factor, action: &[Mat]) -> Result<FactorTable> {
    let n = factor_exponent(f);
    let r = ring(n);
    let phi = r.phi();
    let m = moduli[0];
    let k = moduli.len();
    let top_table = factor_table(top)?;
    // top values lifted into Q(ζ_n), per top element
    let top_vals: Vec<Vec<Vec<i64>>> = top_table
        .irr
        .iter()
        .map(|row| {
            (0..top.order())
                .map(|t| {
                    row[top.classes.class_of[t] as usize]
                        .lift(n)
                        .to_int_coords()
                        .expect("character values are integral")
                })
                .collect()
        })
        .collect();
    let t_order = top.order();
    // dual action: (t.λ)(d) = λ(A_t^{-1} d), i.e. y -> (A_t^{-1})^T y
    let dual: Vec<Mat> = action
        .iter()
        .map(|a| {
            let ai = a.inverse().expect("action matrices are invertible");
            let e = ai.entries();
            let mut tr = vec![0i64; k * k];
            for i in 0..k {
                for j in 0..k {
                    tr[i * k + j] = e[j * k + i];
                }
            }
            Mat::new(k, m, &tr)
        })
        .collect();
    let ys = dual_vectors(moduli);
    let y_index = |y: &[u32]| -> usize { y.iter().fold(0usize, |acc, &v| acc * m as usize + v as usize) };
    let mut seen = vec![false; ys.len()];
    let lam = |y: &[u32], d: &[u32]| -> i64 {
        let dot: i64 = y.iter().zip(d).map(|(&a, &b)| a as i64 * b as i64).sum();
        dot * (n / m) as i64
    };
    let mut irr = Vec::new();
    let mut labels = Vec::new();
    let reps = &f.classes.reps;
    for (yi, y) in ys.iter().enumerate() {
        if seen[yi] {
            continue;
        }
        let mut stab = Vec::new();
        for t in 0..t_order {
            let z = dual[t].apply(y);
            seen[y_index(&z)] = true;
            if z == *y {
                stab.push(t);
            }
        }
        let trivial = y.iter().all(|&v| v == 0);
        if stab.len() == t_order {
            for (mi, mu) in top_vals.iter().enumerate() {
                let row = reps
                    .iter()
                    .map(|&x| {
                        let (d, t) = f.split(x);
                        CycNum::from_int_coords(n, &r.mul(r.power(lam(y, &d)), &mu[t]))
                    })
                    .collect();
                irr.push(row);
                labels.push(if trivial {
                    top_table.labels[mi].clone()
                } else {
                    format!("{}·{}", vec_label(y), top_table.labels[mi])
                });
            }
            continue;
        }
        // cyclic stabilizer with generator s
        let s_order = stab.len();
        let s_gen = stab
            .iter()
            .copied()
            .find(|&s| top.table.elem_order(s) as usize == s_order)
            .ok_or(Error::StabilizerTable(s_order))?;
        let mut dlog = vec![usize::MAX; t_order];
        let mut x = 0usize;
        for i in 0..s_order {
            dlog[x] = i;
            x = top.table.mul(x, s_gen);
        }
        let in_s: Vec<bool> = (0..t_order).map(|t| dlog[t] != usize::MAX).collect();
        let mut covered = vec![false; t_order];
        let mut transversal = Vec::new();
        for t in 0..t_order {
            if !covered[t] {
                transversal.push(t);
                for &s in &stab {
                    covered[top.table.mul(t, s)] = true;
                }
            }
        }
        for j in 0..s_order {
            let row = reps
                .iter()
                .map(|&x| {
                    let (d, t) = f.split(x);
                    let mut acc = vec![0i64; phi];
                    for &rr in &transversal {
                        let ri = top.table.inv(rr);
                        let conj = top.table.mul(top.table.mul(ri, t), rr);
                        if !in_s[conj] {
                            continue;
                        }
                        let dd = action[ri].apply(&d);
                        let e = lam(y, &dd) + (dlog[conj] * j) as i64 * (n as i64 / s_order as i64);
                        for (a, b) in acc.iter_mut().zip(r.power(e)) {
                            *a += b;
                        }
                    }
                    CycNum::from_int_coords(n, &acc)
                })
                .collect();
            irr.push(row);
            labels.push(if s_order == 1 {
                format!("Ind[{}]", vec_label(y))
            } else {
                format!("Ind[{}·μ{j}]", vec_label(y))
            });
        }
    }
    Ok(FactorTable {
        conductor: n,
        irr,
        labels,
    })
}

/// Classes: `1, (12)(34), (123), 5a, 5b`; rows of degree 1, 3, 3, 4, 5.
pub fn alternating5_table() -> FactorTable {
    let n = 30;
    let z5 = |e: i64| CycNum::root(n, 5, e).expect("5 divides 30");
    let i = |v: i64| CycNum::from_int(n, v);
    // (1 ± √5)/2
    let b5 = &(&i(1) + &z5(1)) + &z5(4);
    let b5s = &(&i(1) + &z5(2)) + &z5(3);
    let irr = vec![
        vec![i(1), i(1), i(1), i(1), i(1)],
        vec![i(3), i(-1), i(0), b5.clone(), b5s.clone()],
        vec![i(3), i(-1), i(0), b5s, b5],
        vec![i(4), i(0), i(1), i(-1), i(-1)],
        vec![i(5), i(1), i(-1), i(0), i(0)],
    ];
    FactorTable {
        conductor: n,
        irr,
        labels: ["ψ1", "ψ2", "ψ3", "ψ4", "ψ5"].iter().map(|s| s.to_string()).collect(),
    }
}
