//! Exact arithmetic in cyclotomic fields `Q(ζ_N) = Q[x]/Φ_N(x)`.
//!
//! Elements are dense coefficient vectors of length `φ(N)` over the
//! rationals, always reduced modulo the monic integer polynomial `Φ_N`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense integer polynomial, ascending coefficients.
pub type IntPoly = Vec<BigInt>;

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, computed as `x^n - 1` divided exactly
/// by `Φ_d` for every proper divisor `d` of `n`.
///
/// Results are cached process-wide; the cache only ever grows.
pub fn cyclotomic_polynomial(n: u32) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num: IntPoly = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = div_exact_monic(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    poly_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| p.clone())
        .clone()
}

fn div_exact_monic(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dd = den.len() - 1;
    let mut rem = num.clone();
    let qlen = num.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(
        rem.iter().all(|c| c.is_zero()),
        "inexact cyclotomic division"
    );
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: Arc<IntPoly>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<CyclotomicField>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

impl CyclotomicField {
    pub fn get(order: u32) -> Arc<CyclotomicField> {
        if let Some(f) = field_cache().read().unwrap().get(&order) {
            return f.clone();
        }
        let field = Arc::new(CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        });
        field_cache()
            .write()
            .unwrap()
            .entry(order)
            .or_insert(field)
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn zero(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.degree()]
    }

    pub fn from_rational(&self, r: BigRational) -> Vec<BigRational> {
        let mut v = self.zero();
        v[0] = r;
        v
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Vec<BigRational> {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut v = vec![BigRational::zero(); e.max(self.degree()) + 1];
        v[e] = BigRational::one();
        self.reduce(v)
    }

    /// Reduces an arbitrary-length coefficient vector modulo `Φ_N`.
    pub fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for i in (d..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[i], BigRational::zero());
            for (j, mj) in self.modulus[..d].iter().enumerate() {
                if !mj.is_zero() {
                    v[i - d + j] -= &c * BigRational::from_integer(mj.clone());
                }
            }
        }
        v.resize(d, BigRational::zero());
        v
    }

    pub fn add(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &[BigRational]) -> Vec<BigRational> {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let d = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inverse(&self, a: &[BigRational]) -> Option<Vec<BigRational>> {
        let a = trim(a.to_vec());
        if a.is_empty() {
            return None;
        }
        let m: Vec<BigRational> = self
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = qpoly_div_rem(&r0, &r1);
            let s2 = trim(qpoly_sub(&s0, &qpoly_mul(&q, &s1)));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let g = r0[0].clone();
        let inv: Vec<BigRational> = s0.iter().map(|c| c / &g).collect();
        let mut padded = inv;
        padded.resize(padded.len().max(self.degree()), BigRational::zero());
        Some(self.reduce(padded))
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect()
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
