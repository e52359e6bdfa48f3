//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(N)-1)` with
//! `z = zeta_N`, coordinates are arbitrary-precision rationals. The power
//! basis is an integral basis, so an element is an algebraic integer iff all
//! of its coordinates are integers.
//!
//! [`CycRing`] is an allocation-light integer path over the same basis used
//! by the hot loops of the isometry search; character values are algebraic
//! integers so they always fit it.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    debug_assert_eq!(lead.abs(), 1);
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd] / lead;
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Precomputed data for one conductor: `phi(N)` and the power-basis
/// coordinates of `z^k` for `0 <= k < max(N, 2 phi(N))`.
#[derive(Debug)]
pub struct CycRing {
    conductor: u32,
    phi: usize,
    powers: Vec<Vec<i64>>,
}

impl CycRing {
    fn new(conductor: u32) -> Self {
        let phi = euler_phi(conductor) as usize;
        let poly = cyclotomic_polynomial(conductor);
        let count = (conductor as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by z and reduce with the monic Phi_N
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        CycRing {
            conductor,
            phi,
            powers,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    /// Coordinates of `z^k` (any integer `k`).
    pub fn power(&self, k: i64) -> &[i64] {
        let k = k.rem_euclid(self.conductor as i64) as usize;
        &self.powers[k]
    }

    /// `out += a * b`
    pub fn mul_add(&self, a: &[i64], b: &[i64], out: &mut [i64]) {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = x * y;
                if i + j < self.phi {
                    out[i + j] += c;
                } else {
                    for (o, &r) in out.iter_mut().zip(&self.powers[i + j]) {
                        *o += c * r;
                    }
                }
            }
        }
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.phi];
        self.mul_add(a, b, &mut out);
        out
    }

    /// Image of `a` under `z -> z^g`, `gcd(g, N) = 1`.
    pub fn galois(&self, a: &[i64], g: i64) -> Vec<i64> {
        let mut out = vec![0; self.phi];
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                for (o, &r) in out.iter_mut().zip(self.power(g * i as i64)) {
                    *o += x * r;
                }
            }
        }
        out
    }

    pub fn conj(&self, a: &[i64]) -> Vec<i64> {
        self.galois(a, -1)
    }
}

/// Shared ring data for conductor `n`.
pub fn ring(n: u32) -> Arc<CycRing> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycRing>>>> = OnceLock::new();
    assert!(n > 0, "conductor must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(CycRing::new(n)))
        .clone()
}

/// `true` iff every integer coordinate is divisible by `2^m`.
pub fn int_in_2m_o(coords: &[i64], m: u32) -> bool {
    if m >= 63 {
        return coords.iter().all(|&c| c == 0);
    }
    let mask = (1i64 << m) - 1;
    coords.iter().all(|&c| c & mask == 0)
}

/// An element of `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct CycNum {
    conductor: u32,
    coords: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(conductor: u32) -> Self {
        let phi = euler_phi(conductor) as usize;
        CycNum {
            conductor,
            coords: vec![BigRational::zero(); phi],
        }
    }

    pub fn from_int(conductor: u32, v: i64) -> Self {
        let mut x = Self::zero(conductor);
        x.coords[0] = BigRational::from_integer(BigInt::from(v));
        x
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_int(conductor, 1)
    }

    pub fn from_rational(conductor: u32, v: BigRational) -> Self {
        let mut x = Self::zero(conductor);
        x.coords[0] = v;
        x
    }

    /// Builds an element from integer power-basis coordinates.
    pub fn from_int_coords(conductor: u32, coords: &[i64]) -> Self {
        assert_eq!(coords.len(), euler_phi(conductor) as usize);
        CycNum {
            conductor,
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// Builds an element from rational coordinates; fails on a length mismatch.
    pub fn from_coords(conductor: u32, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != euler_phi(conductor) as usize {
            return Err(Error::Unsupported(format!(
                "expected {} coordinates for conductor {conductor}",
                euler_phi(conductor)
            )));
        }
        Ok(CycNum { conductor, coords })
    }

    /// `zeta_order ^ power` inside `Q(zeta_conductor)`, with
    /// `zeta_order = zeta_conductor ^ (conductor / order)`.
    pub fn root(conductor: u32, order: u32, power: i64) -> Result<Self> {
        if order == 0 || !conductor.is_multiple_of(order) {
            return Err(Error::RootOrder { conductor, order });
        }
        let r = ring(conductor);
        let k = power * (conductor / order) as i64;
        Ok(Self::from_int_coords(conductor, r.power(k)))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, when every coordinate fits an `i64`.
    pub fn to_int_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// The rational value if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(zeta_target)`; `conductor | target`.
    pub fn lift(&self, target: u32) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {target}",
            self.conductor
        );
        let step = (target / self.conductor) as i64;
        let r = ring(target);
        let mut out = Self::zero(target);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.coords.iter_mut().zip(r.power(step * i as i64)) {
                if p != 0 {
                    *o += c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        out
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let l = a.conductor.lcm(&b.conductor);
        (a.lift(l), b.lift(l))
    }

    /// Image under the automorphism `zeta_N -> zeta_N^g`.
    pub fn galois(&self, g: i64) -> Self {
        assert_eq!(
            (g.rem_euclid(self.conductor as i64) as u32).gcd(&self.conductor),
            1,
            "galois exponent must be a unit"
        );
        let r = ring(self.conductor);
        let mut out = Self::zero(self.conductor);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.coords.iter_mut().zip(r.power(g * i as i64)) {
                if p != 0 {
                    *o += c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        out
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.conductor);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.coords.len();
        // columns: self * z^j
        let r = ring(self.conductor);
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for j in 0..n {
            let zj = Self::from_int_coords(self.conductor, r.power(j as i64));
            cols.push((self * &zj).coords);
        }
        // augmented matrix rows i: [cols[0][i] .. cols[n-1][i] | e_0[i]]
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..n).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let inv = m[c][c].recip();
            for v in m[c].iter_mut() {
                *v *= &inv;
            }
            for r2 in 0..n {
                if r2 != c && !m[r2][c].is_zero() {
                    let f = m[r2][c].clone();
                    for k in c..=n {
                        let t = &m[c][k] * &f;
                        m[r2][k] -= t;
                    }
                }
            }
        }
        Some(CycNum {
            conductor: self.conductor,
            coords: m.into_iter().map(|mut row| row.pop().unwrap()).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        let (a, b) = Self::common(self, other);
        Some(&a * &b.inverse()?)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.coords == b.coords
    }
}

impl Eq for CycNum {}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (mut a, b) = CycNum::common(self, rhs);
        for (x, y) in a.coords.iter_mut().zip(b.coords) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let (mut a, b) = CycNum::common(self, rhs);
        for (x, y) in a.coords.iter_mut().zip(b.coords) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let (a, b) = CycNum::common(self, rhs);
        let r = ring(a.conductor);
        let phi = r.phi();
        let mut out = CycNum::zero(a.conductor);
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                if i + j < phi {
                    out.coords[i + j] += c;
                } else {
                    for (o, &p) in out.coords.iter_mut().zip(r.power((i + j) as i64)) {
                        if p != 0 {
                            *o += &c * BigRational::from_integer(BigInt::from(p));
                        }
                    }
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z{}^{i}", self.conductor)?,
                (_, false) => write!(f, "{a}*z{}^{i}", self.conductor)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `zeta_order ^ power` embedded in `Q(zeta_conductor)`.
pub fn embed_root(conductor: u32, order: u32, power: i64) -> Result<CycNum> {
    CycNum::root(conductor, order, power)
}

fn two_adic_valuation(x: &BigInt) -> Option<u64> {
    if x.is_zero() {
        None
    } else {
        x.trailing_zeros()
    }
}

/// Membership of `x` in `2^m O`, tested at every prime above 2 at once:
/// each power-basis coordinate must have 2-adic valuation at least `m`.
pub fn in_2m_o(x: &CycNum, m: u32) -> bool {
    x.coords.iter().all(|c| {
        if c.is_zero() {
            return true;
        }
        let vn = two_adic_valuation(c.numer()).unwrap_or(0) as i64;
        let vd = two_adic_valuation(c.denom()).unwrap_or(0) as i64;
        vn - vd >= m as i64
    })
}

/// Outcome of testing a sum of `2^m` roots of unity against the
/// "all equal or vanishing" dichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum RootSumVerdict {
    AllEqual,
    SumZero,
    HypothesisFails,
    /// In `2^m O` yet neither all equal nor zero.
    Counterexample,
}

/// Classifies `sum_i zeta^{l_i}` for a primitive `2^n`-th root `zeta` and
/// `2^m` exponents.
pub fn check_root_sum(n: u32, m: u32, exponents: &[i64]) -> RootSumVerdict {
    assert_eq!(exponents.len(), 1usize << m, "need 2^m exponents");
    let conductor = 1u32 << n;
    let r = ring(conductor);
    let mut s = vec![0i64; r.phi()];
    for &l in exponents {
        for (o, &p) in s.iter_mut().zip(r.power(l)) {
            *o += p;
        }
    }
    if !int_in_2m_o(&s, m) {
        return RootSumVerdict::HypothesisFails;
    }
    let q = conductor as i64;
    let first = exponents[0].rem_euclid(q);
    if exponents.iter().all(|l| l.rem_euclid(q) == first) {
        RootSumVerdict::AllEqual
    } else if s.iter().all(|&c| c == 0) {
        RootSumVerdict::SumZero
    } else {
        RootSumVerdict::Counterexample
    }
}

/// Exhaustive scan over all `2^m`-tuples of `2^n`-th roots of unity,
/// with the first exponent fixed to 0 (the verdict is invariant under
/// multiplying by a root). Returns `(tuples checked, counterexamples)`.
pub fn root_sum_scan(n: u32, m: u32) -> (usize, Vec<Vec<i64>>) {
    let q = 1i64 << n;
    let len = 1usize << m;
    let total = (q as usize).pow(len as u32 - 1);
    let mut bad = Vec::new();
    for code in 0..total {
        let mut ex = vec![0i64; len];
        let mut c = code;
        for e in ex.iter_mut().skip(1) {
            *e = (c % q as usize) as i64;
            c /= q as usize;
        }
        if check_root_sum(n, m, &ex) == RootSumVerdict::Counterexample {
            bad.push(ex);
        }
    }
    (total, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(euler_phi(120), 32);
    }

    #[test]
    fn roots() {
        let w = embed_root(12, 3, 1).unwrap();
        let w2 = embed_root(12, 3, 2).unwrap();
        assert_eq!(&w + &w2, CycNum::from_int(12, -1));
        assert_eq!(embed_root(4, 4, 2).unwrap(), CycNum::from_int(4, -1));
        assert_eq!(embed_root(8, 8, 1).unwrap().pow(8), CycNum::one(8));
        assert!(matches!(
            embed_root(12, 8, 1),
            Err(Error::RootOrder { .. })
        ));
    }

    #[test]
    fn two_adic_membership() {
        let z = embed_root(8, 8, 1).unwrap();
        let four_z = &CycNum::from_int(8, 4) * &z;
        assert!(in_2m_o(&four_z, 2));
        assert!(!in_2m_o(&four_z, 3));
        let i = embed_root(4, 4, 1).unwrap();
        let one_plus_i = &CycNum::one(4) + &i;
        assert!(!in_2m_o(&one_plus_i, 1));
        let w = embed_root(12, 3, 1).unwrap();
        let zero = &(&w + &w.pow(2)) + &CycNum::one(12);
        for m in 0..10 {
            assert!(in_2m_o(&zero, m));
        }
        // odd denominators are units
        let third = CycNum::from_rational(4, BigRational::new(4.into(), 3.into()));
        assert!(in_2m_o(&third, 2));
        assert!(!in_2m_o(&CycNum::from_rational(4, BigRational::new(1.into(), 2.into())), 0));
    }

    #[test]
    fn root_sum_examples() {
        assert_eq!(check_root_sum(2, 1, &[1, 3]), RootSumVerdict::SumZero);
        assert_eq!(check_root_sum(2, 1, &[1, 1]), RootSumVerdict::AllEqual);
        assert_eq!(check_root_sum(2, 1, &[0, 1]), RootSumVerdict::HypothesisFails);
    }

    #[test]
    fn lifting_mixes_conductors() {
        let w = embed_root(3, 3, 1).unwrap();
        let i = embed_root(4, 4, 1).unwrap();
        let p = &w * &i;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p.pow(12), CycNum::one(12));
        assert_eq!(p.pow(6), CycNum::from_int(12, -1));
        // sqrt5 from zeta_5 times a 2-power root
        let z5 = embed_root(5, 5, 1).unwrap();
        let s5 = &(&z5 + &z5.pow(4)) - &(&z5.pow(2) + &z5.pow(3));
        assert_eq!(&s5 * &s5, CycNum::from_int(5, 5));
        let lifted = s5.lift(40);
        assert_eq!(&lifted * &lifted, CycNum::from_int(40, 5));
    }

    #[test]
    fn inverse_and_display() {
        let z = embed_root(8, 8, 1).unwrap();
        let x = &CycNum::from_int(8, 3) + &z;
        let y = x.inverse().unwrap();
        assert_eq!(&x * &y, CycNum::one(8));
        assert!(CycNum::zero(8).inverse().is_none());
        assert_eq!(format!("{}", &CycNum::from_int(8, 2) - &z), "2 - z8^1");
    }

    #[test]
    fn int_ring_matches_bigrational() {
        let r = ring(60);
        let a = r.power(7).to_vec();
        let b = r.power(41).to_vec();
        let p = r.mul(&a, &b);
        assert_eq!(p, r.power(48));
        let x = CycNum::from_int_coords(60, &a);
        assert_eq!(x.conj(), CycNum::from_int_coords(60, &r.conj(&a)));
    }
}
