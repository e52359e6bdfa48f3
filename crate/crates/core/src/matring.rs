//! Matrix groups `GL_k(Z/mZ)` for small `k`, with `m` a power of two for
//! everything touching `Aut((C_{2^n})^k)`.
//!
//! Odd-order subgroups are built from Hensel-lifted companion matrices and
//! normalizers are computed either by a full scan or by lifting one 2-adic
//! layer at a time.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::table::{Fingerprint, TableGroup};

pub const MAX_K: usize = 4;

/// Largest search space scanned exhaustively.
pub const EXHAUSTIVE_BOUND: u64 = 1 << 26;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat {
    k: u8,
    modulus: u32,
    e: [u32; MAX_K * MAX_K],
}

pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1 || m == 1).then(|| s0.rem_euclid(m))
}

fn det_i64(a: &[i64], k: usize) -> i64 {
    match k {
        0 => 1,
        1 => a[0],
        2 => a[0] * a[3] - a[1] * a[2],
        _ => {
            let mut total = 0;
            let mut minor = Vec::with_capacity((k - 1) * (k - 1));
            for c in 0..k {
                minor.clear();
                for i in 1..k {
                    for j in 0..k {
                        if j != c {
                            minor.push(a[i * k + j]);
                        }
                    }
                }
                let sign = if c % 2 == 0 { 1 } else { -1 };
                total += sign * a[c] * det_i64(&minor, k - 1);
            }
            total
        }
    }
}

impl Mat {
    /// Row-major entries, reduced mod `modulus`.
    pub fn new(k: usize, modulus: u32, entries: &[i64]) -> Self {
        assert!(k <= MAX_K && entries.len() == k * k, "bad matrix shape");
        let mut e = [0u32; MAX_K * MAX_K];
        for (i, &x) in entries.iter().enumerate() {
            e[i] = x.rem_euclid(modulus as i64) as u32;
        }
        Mat {
            k: k as u8,
            modulus,
            e,
        }
    }

    pub fn identity(k: usize, modulus: u32) -> Self {
        let mut v = vec![0i64; k * k];
        for i in 0..k {
            v[i * k + i] = 1;
        }
        Self::new(k, modulus, &v)
    }

    /// Companion matrix of the monic polynomial with low-order
    /// coefficients `c` (`x^k + c[k-1] x^{k-1} + ... + c[0]`).
    pub fn companion(modulus: u32, c: &[i64]) -> Self {
        let k = c.len();
        let mut v = vec![0i64; k * k];
        for i in 1..k {
            v[i * k + (i - 1)] = 1;
        }
        for (i, &ci) in c.iter().enumerate() {
            v[i * k + (k - 1)] = -ci;
        }
        Self::new(k, modulus, &v)
    }

    pub fn dim(&self) -> usize {
        self.k as usize
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.dim() + j]
    }

    pub fn entries(&self) -> Vec<i64> {
        let k = self.dim();
        self.e[..k * k].iter().map(|&x| x as i64).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let k = self.dim();
        (0..k).map(|i| self.e[i * k..(i + 1) * k].to_vec()).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!((self.k, self.modulus), (o.k, o.modulus));
        let k = self.dim();
        let m = self.modulus as u64;
        let mut e = [0u32; MAX_K * MAX_K];
        for i in 0..k {
            for j in 0..k {
                let mut s = 0u64;
                for l in 0..k {
                    s += self.e[i * k + l] as u64 * o.e[l * k + j] as u64;
                }
                e[i * k + j] = (s % m) as u32;
            }
        }
        Mat { e, ..*self }
    }

    pub fn add_scaled(&self, scale: u32, o: &Self) -> Self {
        let k = self.dim();
        let m = self.modulus as u64;
        let mut e = self.e;
        for i in 0..k * k {
            e[i] = ((e[i] as u64 + scale as u64 * o.e[i] as u64) % m) as u32;
        }
        Mat { e, ..*self }
    }

    /// Reduction to a divisor of the modulus.
    pub fn reduce(&self, modulus: u32) -> Self {
        assert!(self.modulus.is_multiple_of(modulus), "reduction to a non-divisor");
        Self::new(self.dim(), modulus, &self.entries())
    }

    /// The same entries read modulo a multiple of the modulus.
    pub fn embed(&self, modulus: u32) -> Self {
        Self::new(self.dim(), modulus, &self.entries())
    }

    pub fn det(&self) -> u32 {
        det_i64(&self.entries(), self.dim()).rem_euclid(self.modulus as i64) as u32
    }

    pub fn is_invertible(&self) -> bool {
        mod_inverse(self.det() as i64, self.modulus as i64).is_some()
    }

    pub fn inverse(&self) -> Option<Self> {
        let k = self.dim();
        let m = self.modulus as i64;
        let dinv = mod_inverse(self.det() as i64, m)?;
        let a = self.entries();
        let mut adj = vec![0i64; k * k];
        let mut minor = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                minor.clear();
                for r in 0..k {
                    for c in 0..k {
                        if r != j && c != i {
                            minor.push(a[r * k + c]);
                        }
                    }
                }
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[i * k + j] = (sign * det_i64(&minor, k - 1)).rem_euclid(m) * dinv % m;
            }
        }
        Some(Self::new(k, self.modulus, &adj))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim(), self.modulus)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::identity(self.dim(), self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order; `None` if singular.
    pub fn order(&self) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut x = *self;
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        Some(n)
    }

    pub fn conj_by(&self, a: &Self, a_inv: &Self) -> Self {
        a.mul(self).mul(a_inv)
    }

    /// `M v` for a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let k = self.dim();
        let m = self.modulus as u64;
        (0..k)
            .map(|i| ((0..k).map(|j| self.e[i * k + j] as u64 * v[j] as u64).sum::<u64>() % m) as u32)
            .collect()
    }

    fn from_index(k: usize, modulus: u32, mut idx: u64) -> Self {
        let mut v = vec![0i64; k * k];
        for x in v.iter_mut() {
            *x = (idx % modulus as u64) as i64;
            idx /= modulus as u64;
        }
        Self::new(k, modulus, &v)
    }
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Every invertible `k x k` matrix mod `modulus`, sorted.
pub fn general_linear(k: usize, modulus: u32) -> Result<Vec<Mat>> {
    let space = (modulus as u64).pow((k * k) as u32);
    if space > EXHAUSTIVE_BOUND {
        return Err(Error::OrderBound {
            what: format!("GL_{k}(Z/{modulus})"),
            order: space as usize,
            bound: EXHAUSTIVE_BOUND as usize,
        });
    }
    let mut out: Vec<Mat> = (0..space)
        .into_par_iter()
        .map(|i| Mat::from_index(k, modulus, i))
        .filter(|m| m.is_invertible())
        .collect();
    out.sort();
    Ok(out)
}

/// `|GL_k(Z/2^n)| = |GL_k(2)| 2^{(n-1)k^2}`.
pub fn gl_order_formula(k: u32, n: u32) -> u64 {
    let q = 2u64;
    let mut gl2 = 1u64;
    for i in 0..k {
        gl2 *= q.pow(k) - q.pow(i);
    }
    gl2 << ((n - 1) * k * k)
}

/// Order of the kernel of reduction `GL_k(Z/2^n) -> GL_k(2)`, by count.
pub fn congruence_kernel_order(k: usize, n: u32) -> Result<usize> {
    let m = 1u32 << n;
    Ok(general_linear(k, m)?
        .into_iter()
        .filter(|a| a.reduce(2).is_identity())
        .count())
}

// Polynomials over Z/2^n, low-order coefficients first.

fn poly_trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn poly_mul(a: &[i64], b: &[i64], m: i64) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y).rem_euclid(m);
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[i64], b: &[i64], m: i64) -> Vec<i64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0)).rem_euclid(m))
        .collect();
    poly_trim(out)
}

/// Division by a monic polynomial mod `m`.
fn poly_divrem(a: &[i64], b: &[i64], m: i64) -> (Vec<i64>, Vec<i64>) {
    let db = b.len() - 1;
    assert_eq!(b[db].rem_euclid(m), 1, "divisor must be monic");
    let mut r: Vec<i64> = a.iter().map(|x| x.rem_euclid(m)).collect();
    if r.len() <= db {
        return (vec![0], poly_trim(r));
    }
    let mut q = vec![0i64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for j in 0..=db {
            r[i + j] = (r[i + j] - c * b[j]).rem_euclid(m);
        }
    }
    r.truncate(db.max(1));
    (poly_trim(q), poly_trim(r))
}

/// `s, t` with `s a + t b = 1` over `F_2`, for coprime `a, b`.
fn bezout_f2(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let (mut r0, mut r1) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1i64], vec![0i64]);
    let (mut t0, mut t1) = (vec![0i64], vec![1i64]);
    while !(r1.len() == 1 && r1[0] == 0) {
        let (q, r) = poly_divrem(&r0, &r1, 2);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1, 2), 2);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1, 2), 2);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    assert!(r0 == vec![1], "polynomials are not coprime mod 2");
    (s0, t0)
}

/// Hensel lift to `Z/2^n` of the factorization `F = f0 g0 (mod 2)` with
/// monic coprime factors. Returns the lift of `f0`.
pub fn hensel_lift(big_f: &[i64], f0: &[i64], n: u32) -> Vec<i64> {
    let (g0, r) = poly_divrem(big_f, f0, 2);
    assert!(r == vec![0], "f0 does not divide F mod 2");
    let (s, t) = bezout_f2(f0, &g0);
    let (mut f, mut g) = (f0.to_vec(), g0.clone());
    for j in 1..n {
        let pj = 1i64 << j;
        let m = pj * 2;
        let diff = poly_sub(big_f, &poly_mul(&f, &g, m), m);
        // diff is divisible by 2^j
        let e: Vec<i64> = diff.iter().map(|c| (c / pj).rem_euclid(2)).collect();
        let a = poly_divrem(&poly_mul(&t, &e, 2), f0, 2).1;
        let b = poly_divrem(&poly_mul(&s, &e, 2), &g0, 2).1;
        let bump = |p: &[i64], d: &[i64]| -> Vec<i64> {
            let len = p.len().max(d.len());
            (0..len)
                .map(|i| (p.get(i).copied().unwrap_or(0) + pj * d.get(i).copied().unwrap_or(0)).rem_euclid(m))
                .collect()
        };
        f = bump(&f, &a);
        g = bump(&g, &b);
    }
    f
}

/// Monic cubic dividing `x^7 - 1` mod `2^n` and reducing to `x^3 + x + 1`.
pub fn c7_cubic(n: u32) -> Vec<i64> {
    hensel_lift(&[-1, 0, 0, 0, 0, 0, 0, 1], &[1, 1, 0, 1], n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OddShape {
    C3,
    C7,
    F21,
}

impl OddShape {
    pub fn label(&self) -> &'static str {
        match self {
            OddShape::C3 => "C3",
            OddShape::C7 => "C7",
            OddShape::F21 => "C7:C3",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            OddShape::C3 => 3,
            OddShape::C7 => 7,
            OddShape::F21 => 21,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "C3" => Ok(OddShape::C3),
            "C7" => Ok(OddShape::C7),
            "C7:C3" | "F21" => Ok(OddShape::F21),
            other => Err(Error::Parse(format!("unknown subgroup shape {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MatSubgroup {
    pub k: usize,
    pub modulus: u32,
    pub label: String,
    pub generators: Vec<Mat>,
    #[serde(skip)]
    pub elements: Vec<Mat>,
}

impl MatSubgroup {
    pub fn generated(k: usize, modulus: u32, label: impl Into<String>, generators: Vec<Mat>) -> Result<Self> {
        let id = Mat::identity(k, modulus);
        let mut elements = crate::groups::table::closure(id, &generators, &|a: &Mat, b: &Mat| a.mul(b), 1 << 20)?;
        elements.sort();
        Ok(MatSubgroup {
            k,
            modulus,
            label: label.into(),
            generators,
            elements,
        })
    }

    fn from_elements(k: usize, modulus: u32, label: impl Into<String>, mut elements: Vec<Mat>) -> Self {
        elements.sort();
        let generators = small_gens(&elements, k, modulus);
        MatSubgroup {
            k,
            modulus,
            label: label.into(),
            generators,
            elements,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    /// Image under reduction mod a divisor of the modulus.
    pub fn reduce(&self, modulus: u32) -> Self {
        let mut el: Vec<Mat> = self.elements.iter().map(|a| a.reduce(modulus)).collect();
        el.sort();
        el.dedup();
        MatSubgroup {
            k: self.k,
            modulus,
            label: self.label.clone(),
            generators: self.generators.iter().map(|a| a.reduce(modulus)).collect(),
            elements: el,
        }
    }

    pub fn normalized_by(&self, a: &Mat) -> bool {
        let Some(ai) = a.inverse() else { return false };
        self.generators.iter().all(|g| self.contains(&g.conj_by(a, &ai)))
    }

    /// Multiplication table with the identity first; returns the element
    /// order used for the indices.
    pub fn table_group(&self) -> Result<(TableGroup, Vec<Mat>)> {
        let id = Mat::identity(self.k, self.modulus);
        let mut el = vec![id];
        el.extend(self.elements.iter().copied().filter(|m| *m != id));
        let pos: HashMap<Mat, usize> = el.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let g = TableGroup::from_fn(el.len(), |a, b| pos[&el[a].mul(&el[b])])?;
        Ok((g, el))
    }
}

fn small_gens(elements: &[Mat], k: usize, modulus: u32) -> Vec<Mat> {
    let set: HashSet<Mat> = elements.iter().copied().collect();
    let mut gens = Vec::new();
    let mut cur: HashSet<Mat> = HashSet::from([Mat::identity(k, modulus)]);
    for m in elements {
        if cur.len() == set.len() {
            break;
        }
        if !cur.contains(m) {
            gens.push(*m);
            let id = Mat::identity(k, modulus);
            cur = crate::groups::table::closure(id, &gens, &|a: &Mat, b: &Mat| a.mul(b), set.len() + 1)
                .expect("subgroup of a finite group")
                .into_iter()
                .collect();
        }
    }
    gens
}

/// Generator of the order-3 subgroup permuting `a, b, (ab)^{-1}`.
pub fn c3_generator(modulus: u32) -> Mat {
    Mat::new(2, modulus, &[0, -1, 1, -1])
}

pub fn c7_generator(n: u32) -> Mat {
    let f = c7_cubic(n);
    Mat::companion(1 << n, &f[..3])
}

/// `M` of order 3 with `M C M^{-1} = C^2`, lifted layer by layer from a
/// mod-2 solution.
pub fn f21_normalizing_element(c: &Mat, n: u32) -> Result<Mat> {
    let k = c.dim();
    let holds = |m: &Mat, c: &Mat| m.mul(c) == c.mul(c).mul(m);
    let c2 = c.reduce(2);
    let mut m = general_linear(k, 2)?
        .into_iter()
        .find(|a| holds(a, &c2) && a.order() == Some(3))
        .ok_or(Error::Lifting {
            level: 1,
            what: "order-3 element normalizing C7".into(),
        })?;
    for j in 1..n {
        let modulus = 1u32 << (j + 1);
        let cj = c.reduce(modulus);
        let base = m.embed(modulus);
        let step = 1u32 << j;
        let next = (0u64..(1 << (k * k)))
            .map(|x| base.add_scaled(step, &Mat::from_index(k, 2, x).embed(modulus)))
            .find(|a| holds(a, &cj))
            .ok_or(Error::Lifting {
                level: j + 1,
                what: "conjugation equation M C = C^2 M".into(),
            })?;
        m = next;
    }
    // order is 3 * 2^a; keep the 3-part and restore the exponent 2
    let ord = m.order().expect("lift of an invertible matrix");
    let two_part = ord / 3;
    let mut t = m.pow(two_part);
    let cc = c.reduce(1 << n);
    if !holds(&t, &cc) {
        t = t.mul(&t);
    }
    debug_assert!(holds(&t, &cc) && t.order() == Some(3));
    Ok(t)
}

pub fn lift_odd_subgroup(k: usize, n: u32, target: OddShape) -> Result<MatSubgroup> {
    let modulus = 1u32 << n;
    match (target, k) {
        (OddShape::C3, 2) => MatSubgroup::generated(2, modulus, "C3", vec![c3_generator(modulus)]),
        (OddShape::C7, 3) => {
            let c = c7_generator(n);
            if c.order() != Some(7) {
                return Err(Error::Lifting {
                    level: n,
                    what: "companion matrix of order 7".into(),
                });
            }
            MatSubgroup::generated(3, modulus, "C7", vec![c])
        }
        (OddShape::F21, 3) => {
            let c = c7_generator(n);
            let m = f21_normalizing_element(&c, n)?;
            MatSubgroup::generated(3, modulus, "C7:C3", vec![c, m])
        }
        _ => Err(Error::Unsupported(format!(
            "subgroup {} in dimension {k}",
            target.label()
        ))),
    }
}

/// Singer cycle of `GL_n(2)` for `2 <= n <= 4`.
pub fn singer_cycle(n: usize) -> Result<Mat> {
    let c: &[i64] = match n {
        2 => &[1, 1],
        3 => &[1, 1, 0],
        4 => &[1, 1, 0, 0],
        _ => return Err(Error::Unsupported(format!("Singer cycle for n = {n}"))),
    };
    Ok(Mat::companion(2, c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NormalizerMethod {
    Exhaustive,
    Layered,
    /// Layered, plus the exhaustive scan as a cross-check when feasible
    /// and `n <= 2`.
    Auto,
}

fn normalizer_exhaustive(s: &MatSubgroup) -> Result<Vec<Mat>> {
    let gl = general_linear(s.k, s.modulus)?;
    let mut out: Vec<Mat> = gl.into_par_iter().filter(|a| s.normalized_by(a)).collect();
    out.sort();
    Ok(out)
}

fn normalizer_layered(s: &MatSubgroup) -> Result<Vec<Mat>> {
    let k = s.k;
    let n = s.modulus.trailing_zeros();
    if !s.modulus.is_power_of_two() {
        return Err(Error::Unsupported("layered lifting needs a 2-power modulus".into()));
    }
    let mut cur = normalizer_exhaustive(&s.reduce(2))?;
    for j in 1..n {
        let modulus = 1u32 << (j + 1);
        let sj = s.reduce(modulus);
        let step = 1u32 << j;
        let kernel: Vec<Mat> = (0u64..(1 << (k * k)))
            .map(|x| Mat::from_index(k, 2, x).embed(modulus))
            .collect();
        let mut next: Vec<Mat> = cur
            .par_iter()
            .flat_map_iter(|a| {
                let base = a.embed(modulus);
                kernel
                    .iter()
                    .map(move |x| base.add_scaled(step, x))
                    .filter(|b| sj.normalized_by(b))
                    .collect::<Vec<_>>()
            })
            .collect();
        next.sort();
        cur = next;
    }
    Ok(cur)
}

pub fn normalizer(s: &MatSubgroup, method: NormalizerMethod) -> Result<MatSubgroup> {
    let label = format!("N({})", s.label);
    let el = match method {
        NormalizerMethod::Exhaustive => normalizer_exhaustive(s)?,
        NormalizerMethod::Layered => normalizer_layered(s)?,
        NormalizerMethod::Auto => {
            let layered = normalizer_layered(s)?;
            let space = (s.modulus as u64).pow((s.k * s.k) as u32);
            if s.modulus <= 4 && space <= EXHAUSTIVE_BOUND {
                let ex = normalizer_exhaustive(s)?;
                if ex != layered {
                    return Err(Error::Verification {
                        case: label,
                        claim: "exhaustive and layered normalizers agree".into(),
                    });
                }
            }
            layered
        }
    };
    Ok(MatSubgroup::from_elements(s.k, s.modulus, label, el))
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizerReport {
    pub k: usize,
    pub n: u32,
    pub subgroup: String,
    pub subgroup_order: usize,
    pub normalizer_order: usize,
    pub quotient_order: usize,
    pub quotient_fingerprint: Fingerprint,
    pub method: NormalizerMethod,
}

/// `N/S` as a table group, with the normalizer itself.
pub fn normalizer_quotient(s: &MatSubgroup, method: NormalizerMethod) -> Result<(MatSubgroup, TableGroup)> {
    let nz = normalizer(s, method)?;
    let (tg, el) = nz.table_group()?;
    let sub: Vec<usize> = (0..el.len()).filter(|&i| s.contains(&el[i])).collect();
    let q = tg.quotient(&sub)?;
    Ok((nz, q))
}

pub fn normalizer_report(k: usize, n: u32, shape: OddShape, method: NormalizerMethod) -> Result<NormalizerReport> {
    let s = lift_odd_subgroup(k, n, shape)?;
    let (nz, q) = normalizer_quotient(&s, method)?;
    Ok(NormalizerReport {
        k,
        n,
        subgroup: shape.label().into(),
        subgroup_order: s.order(),
        normalizer_order: nz.order(),
        quotient_order: q.order(),
        quotient_fingerprint: q.fingerprint(),
        method,
    })
}

/// Number of conjugacy classes of subgroups of the given shape in
/// `GL_k(Z/2^n)`.
pub fn subgroup_conjugacy_count(shape: OddShape, k: usize, n: u32) -> Result<usize> {
    let modulus = 1u32 << n;
    let gl = general_linear(k, modulus)?;
    if gl.len() > 10_000 {
        return Err(Error::OrderBound {
            what: "ambient matrix group".into(),
            order: gl.len(),
            bound: 10_000,
        });
    }
    let cyclic = |g: &Mat| -> Vec<Mat> {
        let mut v = vec![Mat::identity(k, modulus)];
        let mut x = *g;
        while !x.is_identity() {
            v.push(x);
            x = x.mul(g);
        }
        v.sort();
        v
    };
    let mut subgroups: HashSet<Vec<Mat>> = HashSet::new();
    match shape {
        OddShape::C3 | OddShape::C7 => {
            for g in &gl {
                if g.order() == Some(shape.order() as u64) {
                    subgroups.insert(cyclic(g));
                }
            }
        }
        OddShape::F21 => {
            let sevens: Vec<&Mat> = gl.iter().filter(|g| g.order() == Some(7)).collect();
            let threes: Vec<&Mat> = gl.iter().filter(|g| g.order() == Some(3)).collect();
            for c in &sevens {
                let cy = cyclic(c);
                for m in &threes {
                    let conj = c.conj_by(m, &m.inverse().unwrap());
                    if cy.binary_search(&conj).is_ok() && conj != **c {
                        let h = MatSubgroup::generated(k, modulus, "C7:C3", vec![**c, **m])?;
                        if h.order() == 21 {
                            subgroups.insert(h.elements);
                        }
                    }
                }
            }
        }
    }
    let mut remaining: Vec<Vec<Mat>> = subgroups.into_iter().collect();
    remaining.sort();
    let mut classes = 0;
    let mut seen: HashSet<Vec<Mat>> = HashSet::new();
    for h in &remaining {
        if seen.contains(h) {
            continue;
        }
        classes += 1;
        for a in &gl {
            let ai = a.inverse().unwrap();
            let mut c: Vec<Mat> = h.iter().map(|x| x.conj_by(a, &ai)).collect();
            c.sort();
            seen.insert(c);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_order() {
        let c = c3_generator(8);
        assert_eq!(c.order(), Some(3));
        let ci = c.inverse().unwrap();
        assert!(c.mul(&ci).is_identity());
        let a = Mat::new(3, 4, &[1, 2, 3, 0, 1, 2, 1, 0, 3]);
        if let Some(ai) = a.inverse() {
            assert!(a.mul(&ai).is_identity());
        }
        assert_eq!(Mat::new(1, 7, &[2]).order(), Some(3));
    }

    #[test]
    fn hensel_cubic_divides() {
        for n in 1..=4 {
            let f = c7_cubic(n);
            let m = 1i64 << n;
            let (_, r) = poly_divrem(&[-1, 0, 0, 0, 0, 0, 0, 1], &f, m);
            assert_eq!(r, vec![0], "n = {n}");
            assert_eq!(c7_generator(n).order(), Some(7));
        }
        // brute-force oracle: the lift is the unique one mod 4
        let hits: Vec<Vec<i64>> = itertools::iproduct!(0..4i64, 0..4i64, 0..4i64)
            .map(|(a, b, c)| vec![a, b, c, 1])
            .filter(|f| f.iter().zip([1, 1, 0, 1]).all(|(x, y)| x % 2 == y))
            .filter(|f| poly_divrem(&[-1, 0, 0, 0, 0, 0, 0, 1], f, 4).1 == vec![0])
            .collect();
        assert_eq!(hits, vec![c7_cubic(2)]);
    }

    #[test]
    fn small_gl_orders() {
        assert_eq!(general_linear(2, 2).unwrap().len(), 6);
        assert_eq!(general_linear(3, 2).unwrap().len(), 168);
        assert_eq!(general_linear(2, 4).unwrap().len(), 96);
        assert_eq!(gl_order_formula(2, 2), 96);
    }

    #[test]
    fn f21_lifts() {
        for n in 1..=3 {
            let s = lift_odd_subgroup(3, n, OddShape::F21).unwrap();
            assert_eq!(s.order(), 21, "n = {n}");
        }
    }

    #[test]
    fn normalizers_mod_two() {
        let r = normalizer_report(2, 1, OddShape::C3, NormalizerMethod::Auto).unwrap();
        assert_eq!((r.normalizer_order, r.quotient_order), (6, 2));
        let r = normalizer_report(3, 1, OddShape::C7, NormalizerMethod::Auto).unwrap();
        assert_eq!((r.normalizer_order, r.quotient_order), (21, 3));
        let r = normalizer_report(3, 1, OddShape::F21, NormalizerMethod::Auto).unwrap();
        assert_eq!(r.quotient_order, 1);
    }
}
