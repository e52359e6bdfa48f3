//! Perfect isometries between blocks and enumeration of perfect
//! self-isometry groups.
//!
//! A signed bijection `I` is perfect iff
//! - for every class `h` of the source and `g` of the target,
//!   `Σ_a s_a χ_a(h^{-1}) ψ_{π(a)}(g) ∈ 2^{v_2|C(h)|} O`, and the same for
//!   `I^{-1}`;
//! - `I` maps `Z prj(B)` onto `Z prj(C)`: the transition matrix between the
//!   projective characters exists over `Z` and is unimodular.

use std::collections::{BTreeSet, HashMap};
use std::hash::{Hash, Hasher};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::BlockData;
use crate::cyclo::{int_in_2m_o, ring};
use crate::error::{Error, Result};
use crate::groups::table::standard;
use crate::groups::{Fingerprint, SignedPerm, SignedPermGroup, TableGroup};

/// Largest block handled by the enumeration.
pub const MAX_IRR: usize = 16;

/// Largest half in the meet-in-the-middle stage.
pub const MAX_HALF: usize = 1 << 22;

/// Largest block handled by the unpruned oracle.
pub const MAX_ORACLE_IRR: usize = 6;

/// Budget (in `i64` entries) for caching per-pair CF contributions.
const PAIR_CACHE_BUDGET: usize = 1 << 23;

/// A signed bijection `Z Irr(B) -> Z Irr(C)`.
#[derive(Clone, Debug)]
pub struct SignedBijection<'a> {
    pub source: &'a BlockData,
    pub target: &'a BlockData,
    pub map: SignedPerm,
}

impl<'a> SignedBijection<'a> {
    pub fn new(source: &'a BlockData, target: &'a BlockData, map: SignedPerm) -> Result<Self> {
        if source.len() != target.len() || map.degree() != source.len() {
            return Err(Error::MalformedBijection(format!(
                "{} -> {} with a map on {} points",
                source.name,
                target.name,
                map.degree()
            )));
        }
        Ok(SignedBijection { source, target, map })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectVerdict {
    pub perfect: bool,
    /// First failing condition, if any.
    pub diagnostic: Option<String>,
}

impl PerfectVerdict {
    fn ok() -> Self {
        PerfectVerdict {
            perfect: true,
            diagnostic: None,
        }
    }

    fn fail(msg: String) -> Self {
        PerfectVerdict {
            perfect: false,
            diagnostic: Some(msg),
        }
    }
}

fn v2(n: usize) -> u32 {
    n.trailing_zeros()
}

/// Integer data of one direction `B -> C`.
struct Direction {
    phi: usize,
    /// `χ_a(h^{-1})` per source character and class.
    src_inv: Vec<Vec<Vec<i64>>>,
    /// `ψ_b(g)` per target character and class.
    tgt: Vec<Vec<Vec<i64>>>,
    /// `v_2 |C(h)|` per source class.
    src_val: Vec<u32>,
    src_orders: Vec<u32>,
    conductor: u32,
    /// Cached `χ_a(h^{-1}) ψ_b(g)` flattened over `(h, g, coord)`.
    pairs: Option<Vec<Vec<Vec<i64>>>>,
}

impl Direction {
    fn new(src: &BlockData, tgt: &BlockData) -> Result<Self> {
        let (ts, tt) = (src.table()?, tgt.table()?);
        let n = num_integer::lcm(ts.conductor, tt.conductor);
        let r = ring(n);
        let lift = |v: &crate::cyclo::CycNum| v.lift(n).to_int_coords().expect("integral value");
        let src_inv = src
            .chars
            .iter()
            .map(|&c| (0..ts.classes.len()).map(|h| lift(&ts.irr[c][ts.classes.inverse_class[h]])).collect())
            .collect();
        let tgt_v = tgt
            .chars
            .iter()
            .map(|&c| (0..tt.classes.len()).map(|g| lift(&tt.irr[c][g])).collect())
            .collect();
        let mut d = Direction {
            phi: r.phi(),
            src_inv,
            tgt: tgt_v,
            src_val: ts.classes.centralizer_orders.iter().map(|&c| v2(c)).collect(),
            src_orders: ts.classes.element_orders.clone(),
            conductor: n,
            pairs: None,
        };
        let hc = ts.classes.len();
        let gc = tt.classes.len();
        let k = src.len();
        if k * k * hc * gc * d.phi <= PAIR_CACHE_BUDGET {
            let pairs = (0..k)
                .map(|a| (0..k).map(|b| d.pair_vector(a, b)).collect())
                .collect();
            d.pairs = Some(pairs);
        }
        Ok(d)
    }

    fn hc(&self) -> usize {
        self.src_val.len()
    }

    fn gc(&self) -> usize {
        self.tgt[0].len()
    }

    fn pair_vector(&self, a: usize, b: usize) -> Vec<i64> {
        let r = ring(self.conductor);
        let mut out = vec![0i64; self.hc() * self.gc() * self.phi];
        for h in 0..self.hc() {
            for g in 0..self.gc() {
                let off = (h * self.gc() + g) * self.phi;
                r.mul_add(&self.src_inv[a][h], &self.tgt[b][g], &mut out[off..off + self.phi]);
            }
        }
        out
    }

    /// First `(h, g)` where the CF condition fails.
    fn cf_failure(&self, map: &SignedPerm) -> Option<(usize, usize)> {
        let k = map.degree();
        let (hc, gc, phi) = (self.hc(), self.gc(), self.phi);
        if let Some(pairs) = &self.pairs {
            let mut acc = vec![0i64; hc * gc * phi];
            for a in 0..k {
                let (b, s) = map.image(a);
                for (x, y) in acc.iter_mut().zip(&pairs[a][b]) {
                    *x += s as i64 * y;
                }
            }
            for h in 0..hc {
                for g in 0..gc {
                    let off = (h * gc + g) * phi;
                    if !int_in_2m_o(&acc[off..off + phi], self.src_val[h]) {
                        return Some((h, g));
                    }
                }
            }
            return None;
        }
        let r = ring(self.conductor);
        let mut acc = vec![0i64; phi];
        for h in 0..hc {
            for g in 0..gc {
                acc.iter_mut().for_each(|x| *x = 0);
                for a in 0..k {
                    let (b, s) = map.image(a);
                    if s > 0 {
                        r.mul_add(&self.src_inv[a][h], &self.tgt[b][g], &mut acc);
                    } else {
                        let neg: Vec<i64> = self.src_inv[a][h].iter().map(|x| -x).collect();
                        r.mul_add(&neg, &self.tgt[b][g], &mut acc);
                    }
                }
                if !int_in_2m_o(&acc, self.src_val[h]) {
                    return Some((h, g));
                }
            }
        }
        None
    }
}

/// Exact solution of `D X = V` over `Z` for a full-column-rank `D`.
struct Lattice {
    dec: Vec<Vec<i64>>,
    /// `adj(D^T D)` and `det(D^T D)`.
    adj: Vec<Vec<i128>>,
    det: i128,
}

fn rational_inverse(m: &[Vec<i64>]) -> (Vec<Vec<BigRational>>, BigRational) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("Cartan matrix is nonsingular");
        if p != c {
            a.swap(p, c);
            inv.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for j in 0..n {
            a[c][j] = &a[c][j] / &piv;
            inv[c][j] = &inv[c][j] / &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let (x, y) = (&f * &a[c][j], &f * &inv[c][j]);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    (inv, det)
}

/// Bareiss determinant.
pub fn det_int(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

impl Lattice {
    fn new(dec: &[Vec<i64>]) -> Self {
        let l = dec[0].len();
        let c: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| dec.iter().map(|r| r[i] * r[j]).sum()).collect())
            .collect();
        let (inv, det) = rational_inverse(&c);
        let adj = inv
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| (x * &det).to_integer().to_i128().expect("small adjugate"))
                    .collect()
            })
            .collect();
        Lattice {
            dec: dec.to_vec(),
            adj,
            det: det.to_integer().to_i128().expect("small determinant"),
        }
    }

    /// Integer `X` with `D X = V`, if any.
    fn solve(&self, v: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
        let l = self.adj.len();
        let cols = v[0].len();
        // D^T V
        let dtv: Vec<Vec<i128>> = (0..l)
            .map(|i| (0..cols).map(|j| self.dec.iter().zip(v).map(|(d, w)| (d[i] * w[j]) as i128).sum()).collect())
            .collect();
        let mut x = vec![vec![0i64; cols]; l];
        for i in 0..l {
            for j in 0..cols {
                let num: i128 = (0..l).map(|k| self.adj[i][k] * dtv[k][j]).sum();
                if num % self.det != 0 {
                    return None;
                }
                x[i][j] = (num / self.det) as i64;
            }
        }
        for (drow, vrow) in self.dec.iter().zip(v) {
            for j in 0..cols {
                let s: i64 = (0..l).map(|k| drow[k] * x[k][j]).sum();
                if s != vrow[j] {
                    return None;
                }
            }
        }
        Some(x)
    }
}

/// Reusable test for perfectness of maps `B -> C`.
pub struct PerfectnessChecker {
    fwd: Direction,
    bwd: Direction,
    src_dec: Vec<Vec<i64>>,
    tgt_dec: Vec<Vec<i64>>,
    src_lat: Lattice,
    tgt_lat: Lattice,
}

impl PerfectnessChecker {
    pub fn new(source: &BlockData, target: &BlockData) -> Result<Self> {
        if source.len() != target.len() {
            return Err(Error::MalformedBijection("blocks of different sizes".into()));
        }
        Ok(PerfectnessChecker {
            fwd: Direction::new(source, target)?,
            bwd: Direction::new(target, source)?,
            src_dec: source.decomposition.clone(),
            tgt_dec: target.decomposition.clone(),
            src_lat: Lattice::new(&source.decomposition),
            tgt_lat: Lattice::new(&target.decomposition),
        })
    }

    pub fn degree(&self) -> usize {
        self.src_dec.len()
    }

    fn pprime(&self, map: &SignedPerm, from: &[Vec<i64>], to: &Lattice) -> std::result::Result<(), String> {
        let k = map.degree();
        let l = from[0].len();
        let mut v = vec![vec![0i64; l]; k];
        for a in 0..k {
            let (b, s) = map.image(a);
            for j in 0..l {
                v[b][j] = s as i64 * from[a][j];
            }
        }
        let x = to
            .solve(&v)
            .ok_or_else(|| "image of a projective character is not in Z prj".to_string())?;
        if x.len() != l || det_int(&x).abs() != 1 {
            return Err("transition matrix between projectives is not unimodular".into());
        }
        Ok(())
    }

    pub fn check(&self, map: &SignedPerm) -> PerfectVerdict {
        if map.degree() != self.degree() {
            return PerfectVerdict::fail("map has the wrong degree".into());
        }
        if let Some((h, g)) = self.fwd.cf_failure(map) {
            return PerfectVerdict::fail(format!(
                "CF: source class {h} (element order {}) against target class {g} not in 2^{}O",
                self.fwd.src_orders[h], self.fwd.src_val[h]
            ));
        }
        let inv = map.inverse();
        if let Some((g, h)) = self.bwd.cf_failure(&inv) {
            return PerfectVerdict::fail(format!(
                "CF (inverse): target class {g} (element order {}) against source class {h} not in 2^{}O",
                self.bwd.src_orders[g], self.bwd.src_val[g]
            ));
        }
        if let Err(e) = self.pprime(map, &self.src_dec, &self.tgt_lat) {
            return PerfectVerdict::fail(format!("p': {e}"));
        }
        if let Err(e) = self.pprime(&inv, &self.tgt_dec, &self.src_lat) {
            return PerfectVerdict::fail(format!("p' (inverse): {e}"));
        }
        PerfectVerdict::ok()
    }

    pub fn is_perfect(&self, map: &SignedPerm) -> bool {
        self.check(map).perfect
    }
}

pub fn is_perfect(i: &SignedBijection) -> Result<PerfectVerdict> {
    Ok(PerfectnessChecker::new(i.source, i.target)?.check(&i.map))
}

/// Integer vectors `x` with `x^T C x = target`.
fn norm_vectors(c: &[Vec<i64>], target: i64) -> Vec<Vec<i64>> {
    let l = c.len();
    let (inv, _) = rational_inverse(c);
    let bounds: Vec<i64> = (0..l)
        .map(|i| {
            let b = (&inv[i][i] * BigRational::from_integer(target.into())).to_f64().unwrap_or(0.0);
            (b.max(0.0).sqrt() + 1e-9).floor() as i64
        })
        .collect();
    let ranges: Vec<Vec<i64>> = bounds.iter().map(|&b| (-b..=b).collect()).collect();
    ranges
        .into_iter()
        .multi_cartesian_product()
        .filter(|x| quad(c, x, x) == target)
        .collect()
}

fn quad(c: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let l = c.len();
    let mut s = 0;
    for i in 0..l {
        for j in 0..l {
            s += x[i] * c[i][j] * y[j];
        }
    }
    s
}

/// Column tuples `X` with `X^T C X = C` and `det X = ±1`.
fn stage_one(c: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    let l = c.len();
    let cands: Vec<Vec<Vec<i64>>> = (0..l).map(|j| norm_vectors(c, c[j][j])).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Vec<i64>> = Vec::new();
    fn rec(
        c: &[Vec<i64>],
        cands: &[Vec<Vec<i64>>],
        cur: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        let j = cur.len();
        if j == c.len() {
            // columns -> matrix
            let l = c.len();
            let x: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|k| cur[k][i]).collect()).collect();
            if det_int(&x).abs() == 1 {
                out.push(x);
            }
            return;
        }
        for v in &cands[j] {
            if (0..j).all(|k| quad(c, &cur[k], v) == c[k][j]) {
                cur.push(v.clone());
                rec(c, cands, cur, out);
                cur.pop();
            }
        }
    }
    rec(c, &cands, &mut cur, &mut out);
    out
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct EnumerationStats {
    pub projective_images: usize,
    pub row_matchings: usize,
    pub cf_survivors: usize,
    pub perfect: usize,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub group: SignedPermGroup,
    pub stats: EnumerationStats,
}

fn hash_vec(v: &[i64]) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    v.hash(&mut h);
    h.finish()
}

/// Moduli `2^{a_h}` expanded over `(h, g, coord)`.
fn masks(d: &Direction) -> Vec<i64> {
    let mut out = Vec::with_capacity(d.hc() * d.gc() * d.phi);
    for h in 0..d.hc() {
        for _ in 0..d.gc() * d.phi {
            out.push((1i64 << d.src_val[h].min(62)) - 1);
        }
    }
    out
}

fn reduce_into(acc: &mut [i64], masks: &[i64]) {
    for (x, m) in acc.iter_mut().zip(masks) {
        *x &= m;
    }
}

/// All perfect self-isometries of a block.
pub fn perf_enumerate(b: &BlockData) -> Result<Enumeration> {
    let k = b.len();
    if k > MAX_IRR {
        return Err(Error::Feasibility(format!("{} has {k} > {MAX_IRR} characters", b.name)));
    }
    let checker = PerfectnessChecker::new(b, b)?;
    let dir = &checker.fwd;
    let pairs = dir
        .pairs
        .as_ref()
        .ok_or_else(|| Error::Feasibility(format!("{} is too large for the CF cache", b.name)))?;
    let masks = masks(dir);
    let c = b.cartan();
    let xs = stage_one(&c);
    let mut stats = EnumerationStats {
        projective_images: xs.len(),
        ..Default::default()
    };
    // rows of D grouped by equality
    let mut row_classes: Vec<(Vec<i64>, Vec<usize>)> = Vec::new();
    for a in 0..k {
        match row_classes.iter_mut().find(|(r, _)| *r == b.decomposition[a]) {
            Some((_, v)) => v.push(a),
            None => row_classes.push((b.decomposition[a].clone(), vec![a])),
        }
    }
    // ascending cell size, then canonical index
    row_classes.sort_by_key(|(_, v)| (v.len(), v[0]));
    let mut found: BTreeSet<SignedPerm> = BTreeSet::new();
    for x in &xs {
        let l = c.len();
        // V = D X
        let v: Vec<Vec<i64>> = b
            .decomposition
            .iter()
            .map(|row| (0..l).map(|j| (0..l).map(|i| row[i] * x[i][j]).sum()).collect())
            .collect();
        // per row class: target characters and their signs
        let mut targets: Vec<Vec<(usize, i8)>> = Vec::new();
        let mut ok = true;
        for (r, members) in &row_classes {
            let neg: Vec<i64> = r.iter().map(|y| -y).collect();
            let t: Vec<(usize, i8)> = (0..k)
                .filter_map(|bb| {
                    if v[bb] == *r {
                        Some((bb, 1))
                    } else if v[bb] == neg {
                        Some((bb, -1))
                    } else {
                        None
                    }
                })
                .collect();
            if t.len() != members.len() {
                ok = false;
                break;
            }
            targets.push(t);
        }
        if !ok {
            continue;
        }
        stats.row_matchings += 1;
        // options per class: (assignment list, reduced contribution)
        let options: Vec<Vec<Vec<(usize, usize, i8)>>> = row_classes
            .iter()
            .zip(&targets)
            .map(|((_, members), t)| {
                t.iter()
                    .permutations(t.len())
                    .map(|p| members.iter().zip(p).map(|(&a, &(bb, s))| (a, bb, s)).collect())
                    .collect()
            })
            .collect();
        let contrib = |assign: &[(usize, usize, i8)], acc: &mut Vec<i64>| {
            for &(a, bb, s) in assign {
                for (x, y) in acc.iter_mut().zip(&pairs[a][bb]) {
                    *x += s as i64 * y;
                }
            }
        };
        // balanced split of the classes
        let sizes: Vec<f64> = options.iter().map(|o| (o.len() as f64).ln()).collect();
        let total: f64 = sizes.iter().sum();
        let mut split = 0;
        let mut run = 0.0;
        while split < options.len() && run + sizes[split] <= total / 2.0 {
            run += sizes[split];
            split += 1;
        }
        let half = |range: &[Vec<Vec<(usize, usize, i8)>>]| -> Result<Vec<Vec<usize>>> {
            let count: usize = range.iter().map(|o| o.len()).product();
            if count > MAX_HALF {
                return Err(Error::Feasibility(format!("{count} combinations in one half")));
            }
            Ok(range.iter().map(|o| (0..o.len()).collect::<Vec<_>>()).multi_cartesian_product().collect())
        };
        let (left, right) = options.split_at(split);
        let left_combos = if left.is_empty() { vec![vec![]] } else { half(left)? };
        let right_combos = if right.is_empty() { vec![vec![]] } else { half(right)? };
        let vec_len = masks.len();
        let sum_of = |opts: &[Vec<Vec<(usize, usize, i8)>>], combo: &[usize], negate: bool| -> Vec<i64> {
            let mut acc = vec![0i64; vec_len];
            for (o, &i) in opts.iter().zip(combo) {
                contrib(&o[i], &mut acc);
            }
            if negate {
                acc.iter_mut().for_each(|x| *x = -*x);
            }
            reduce_into(&mut acc, &masks);
            acc
        };
        let mut table: HashMap<u64, Vec<usize>> = HashMap::new();
        for (i, combo) in left_combos.iter().enumerate() {
            table.entry(hash_vec(&sum_of(left, combo, false))).or_default().push(i);
        }
        let hits: Vec<SignedPerm> = right_combos
            .par_iter()
            .flat_map_iter(|rc| {
                let want = sum_of(right, rc, true);
                let key = hash_vec(&want);
                let mut out = Vec::new();
                if let Some(ls) = table.get(&key) {
                    for &li in ls {
                        if sum_of(left, &left_combos[li], false) != want {
                            continue;
                        }
                        let mut perm = vec![0usize; k];
                        let mut signs = vec![0i8; k];
                        for (o, &i) in left.iter().zip(&left_combos[li]).chain(right.iter().zip(rc)) {
                            for &(a, bb, s) in &o[i] {
                                perm[a] = bb;
                                signs[a] = s;
                            }
                        }
                        out.push(SignedPerm::new(perm, signs).expect("row matching is a bijection"));
                    }
                }
                out
            })
            .collect();
        stats.cf_survivors += hits.len();
        for h in hits {
            if checker.is_perfect(&h) {
                found.insert(h);
            }
        }
    }
    stats.perfect = found.len();
    let group = SignedPermGroup::from_elements(k, found.into_iter().collect())?;
    Ok(Enumeration { group, stats })
}

/// Unpruned oracle: every signed permutation, filtered by `is_perfect`.
pub fn perf_exhaustive(b: &BlockData) -> Result<SignedPermGroup> {
    let k = b.len();
    if k > MAX_ORACLE_IRR {
        return Err(Error::Feasibility(format!("oracle limited to {MAX_ORACLE_IRR} characters")));
    }
    let checker = PerfectnessChecker::new(b, b)?;
    let mut found = Vec::new();
    for p in (0..k).permutations(k) {
        for mask in 0..(1u32 << k) {
            let signs = (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let m = SignedPerm::new(p.clone(), signs)?;
            if checker.is_perfect(&m) {
                found.push(m);
            }
        }
    }
    SignedPermGroup::from_elements(k, found)
}

/// Small catalogue of named groups for reports.
pub fn catalogue(order: usize) -> Vec<(&'static str, TableGroup)> {
    fn prod(a: TableGroup, b: TableGroup) -> TableGroup {
        a.direct_product(&b).expect("small product")
    }
    use standard::{cyclic, dihedral, symmetric};
    let all: [(&str, usize, fn() -> TableGroup); 13] = [
        ("C1", 1, || cyclic(1)),
        ("C2", 2, || cyclic(2)),
        ("C3", 3, || cyclic(3)),
        ("C2xC2", 4, || prod(cyclic(2), cyclic(2))),
        ("C4", 4, || cyclic(4)),
        ("S3", 6, || symmetric(3)),
        ("C6", 6, || cyclic(6)),
        ("D8", 8, || dihedral(8)),
        ("S3xC2", 12, || prod(symmetric(3), cyclic(2))),
        ("D8xC2", 16, || prod(dihedral(8), cyclic(2))),
        ("S4", 24, || symmetric(4)),
        ("S4xC2", 48, || prod(symmetric(4), cyclic(2))),
        ("S4xC2xC2", 96, || prod(prod(symmetric(4), cyclic(2)), cyclic(2))),
    ];
    all.into_iter()
        .filter(|(_, o, _)| *o == order)
        .map(|(n, _, f)| (n, f()))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub block: String,
    pub order: usize,
    pub generators: Vec<SignedPerm>,
    pub fingerprint: Fingerprint,
    pub matched_iso_type: Option<String>,
    pub stats: Option<EnumerationStats>,
}

pub fn group_report(block: &str, g: &SignedPermGroup, stats: Option<EnumerationStats>) -> Result<GroupReport> {
    let tg = g.table_group()?;
    let matched = catalogue(g.order())
        .into_iter()
        .find(|(_, h)| tg.is_isomorphic(h))
        .map(|(n, _)| n.to_string());
    Ok(GroupReport {
        block: block.into(),
        order: g.order(),
        generators: tg.small_generating_set().into_iter().map(|i| g.elements[i].clone()).collect(),
        fingerprint: tg.fingerprint(),
        matched_iso_type: matched,
        stats,
    })
}

/// Cells any Morita-induced bijection of `Irr(B)` must permute.
#[derive(Clone, Debug, Serialize)]
pub struct MoritaCells {
    /// Characters with equal decomposition rows.
    pub cells: Vec<Vec<usize>>,
    /// Cells grouped by the invariant `(sorted row, pairing invariant)`;
    /// a bijection may only move a cell within its group.
    pub groups: Vec<Vec<usize>>,
}

impl MoritaCells {
    fn cell_of(&self, a: usize) -> usize {
        self.cells.iter().position(|c| c.contains(&a)).expect("partition")
    }

    /// Whether a signed permutation maps cells to cells within their group.
    pub fn preserved_by(&self, p: &SignedPerm) -> bool {
        self.cells.iter().enumerate().all(|(ci, cell)| {
            let target = self.cell_of(p.image(cell[0]).0);
            let same_group = self.groups.iter().any(|g| g.contains(&ci) && g.contains(&target));
            same_group && cell.iter().all(|&a| self.cell_of(p.image(a).0) == target)
        })
    }
}

pub fn morita_constraints(b: &BlockData) -> MoritaCells {
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut rows: Vec<&Vec<i64>> = Vec::new();
    for a in 0..b.len() {
        match rows.iter().position(|r| **r == b.decomposition[a]) {
            Some(i) => cells[i].push(a),
            None => {
                rows.push(&b.decomposition[a]);
                cells.push(vec![a]);
            }
        }
    }
    let key = |ci: usize| {
        let mut r = rows[ci].clone();
        r.sort_unstable();
        (r, b.pairing_invariant(cells[ci][0]), cells[ci].len())
    };
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut keys = Vec::new();
    for ci in 0..cells.len() {
        let kk = key(ci);
        match keys.iter().position(|x| *x == kk) {
            Some(i) => groups[i].push(ci),
            None => {
                keys.push(kk);
                groups.push(vec![ci]);
            }
        }
    }
    MoritaCells { cells, groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::block_data;

    fn block(s: &str) -> BlockData {
        block_data(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a4_examples() {
        let b = block("G(1)");
        let chk = PerfectnessChecker::new(&b, &b).unwrap();
        assert!(chk.is_perfect(&SignedPerm::identity(4)));
        let i = SignedPerm::new(vec![3, 1, 2, 0], vec![-1, 1, 1, -1]).unwrap();
        assert!(chk.is_perfect(&i));
        let bad = SignedPerm::from_perm(vec![3, 1, 2, 0]).unwrap();
        let v = chk.check(&bad);
        assert!(!v.perfect);
        assert!(v.diagnostic.unwrap().starts_with("CF"));
    }

    #[test]
    fn enumeration_matches_oracle_small() {
        for s in ["P(1)", "G(1)"] {
            let b = block(s);
            let e = perf_enumerate(&b).unwrap();
            let o = perf_exhaustive(&b).unwrap();
            assert_eq!(e.group.sorted_elements(), o.sorted_elements(), "{s}");
        }
    }

    #[test]
    fn bareiss() {
        assert_eq!(det_int(&[vec![2, 1], vec![1, 2]]), 3);
        assert_eq!(det_int(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det_int(&[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]), 4);
    }

    #[test]
    fn morita_cells_a5() {
        let m = morita_constraints(&block("A5"));
        let g = m.groups.iter().find(|g| g.contains(&0)).unwrap();
        assert_eq!(g.len(), 1);
    }
}
