use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::base::Coeff;
use super::{same_ring, Ring, RingError};

/// Element of a ring described by a [`RingDescriptor`](super::RingDescriptor): a finite sum of
/// coefficient times Laurent monomial. Scalars are the zero-variable case.
///
/// Terms are keyed by exponent vectors (one slot per variable) and kept in
/// lexicographic order; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Ring,
    terms: BTreeMap<Vec<i32>, Coeff>,
}

pub type LaurentPoly = RingElement;

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring).is_ok() && self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn zero(ring: &Ring) -> Self {
        RingElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_coeff(ring, ring.base().one())
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::from_bigint(ring, &BigInt::from(n))
    }

    pub fn from_bigint(ring: &Ring, n: &BigInt) -> Self {
        Self::from_coeff(ring, ring.base().from_bigint(n))
    }

    pub fn from_coeff(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, c, vec![0; ring.nvars()])
    }

    pub fn monomial(ring: &Ring, c: Coeff, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !ring.base().is_zero(&c) {
            terms.insert(exps, c);
        }
        RingElement {
            ring: ring.clone(),
            terms,
        }
    }

    /// The unit monomial `t^exps` with coefficient one.
    pub fn unit_monomial(ring: &Ring, exps: Vec<i32>) -> Self {
        Self::monomial(ring, ring.base().one(), exps)
    }

    pub fn variable(ring: &Ring, name: &str) -> Result<Self, RingError> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; ring.nvars()];
        exps[idx] = 1;
        Ok(Self::unit_monomial(ring, exps))
    }

    /// `ζ_N^k` in a ring over `Q(ζ_N)`.
    pub fn zeta_pow(ring: &Ring, k: i64) -> Result<Self, RingError> {
        let c = ring
            .base()
            .zeta_pow(k)
            .ok_or_else(|| RingError::UnknownVariable("zeta".to_string()))?;
        Ok(Self::from_coeff(ring, c))
    }

    pub(crate) fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Vec<i32>, Coeff)>,
    ) -> Self {
        let base = ring.base();
        let mut map: BTreeMap<Vec<i32>, Coeff> = BTreeMap::new();
        for (e, c) in terms {
            debug_assert_eq!(e.len(), ring.nvars());
            match map.get_mut(&e) {
                Some(existing) => *existing = base.add(existing, &c),
                None => {
                    map.insert(e, c);
                }
            }
        }
        map.retain(|_, c| !base.is_zero(c));
        RingElement {
            ring: ring.clone(),
            terms: map,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.ring)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Coeff)> {
        self.terms.iter()
    }

    /// The lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<i32>, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Coefficient and exponent vector when the element is a single term.
    pub fn as_monomial(&self) -> Option<(&Coeff, &Vec<i32>)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    /// Per-variable minimum exponent; `None` for zero.
    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.clone();
        for e in it {
            for (a, x) in acc.iter_mut().zip(e) {
                *a = (*a).min(*x);
            }
        }
        Some(acc)
    }

    /// Per-variable maximum exponent; `None` for zero.
    pub fn max_exponents(&self) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.clone();
        for e in it {
            for (a, x) in acc.iter_mut().zip(e) {
                *a = (*a).max(*x);
            }
        }
        Some(acc)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        same_ring(&self.ring, &other.ring)?;
        let base = self.ring.base();
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(x) => {
                    let s = base.add(x, c);
                    if base.is_zero(&s) {
                        terms.remove(e);
                    } else {
                        *x = s;
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        Ok(RingElement {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        same_ring(&self.ring, &other.ring)?;
        let base = self.ring.base();
        let mut terms: BTreeMap<Vec<i32>, Coeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = base.mul(ca, cb);
                match terms.get_mut(&e) {
                    Some(x) => *x = base.add(x, &c),
                    None => {
                        terms.insert(e, c);
                    }
                }
            }
        }
        terms.retain(|_, c| !base.is_zero(c));
        Ok(RingElement {
            ring: self.ring.clone(),
            terms,
        })
    }

    fn neg_ref(&self) -> Self {
        let base = self.ring.base();
        RingElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), base.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let base = self.ring.base();
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(e, x)| (e.clone(), base.mul(x, c))),
        )
    }

    /// Multiplies by the unit monomial `t^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        RingElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self.as_monomial() {
            Some((c, _)) => self.ring.base().is_unit(c),
            None => false,
        }
    }

    /// Inverse of a unit: a nonzero scalar over a field, `±1` over `Z`, or a
    /// unit monomial in a Laurent ring.
    pub fn invert_unit(&self) -> Result<Self, RingError> {
        let not_unit = || RingError::NotInvertible(self.to_string());
        let (c, e) = self.as_monomial().ok_or_else(not_unit)?;
        let inv = self.ring.base().inverse(c).ok_or_else(not_unit)?;
        Ok(Self::monomial(
            &self.ring,
            inv,
            e.iter().map(|x| -x).collect(),
        ))
    }

    pub fn pow(&self, exp: i64) -> Result<Self, RingError> {
        let (mut base, mut e) = if exp < 0 {
            (self.invert_unit()?, exp.unsigned_abs())
        } else {
            (self.clone(), exp as u64)
        };
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`, or `Ok(None)` when the divisor does
    /// not divide.
    ///
    /// Trial division by the lexicographic leading term. In a Laurent ring
    /// over a domain every exponent of a quotient lies between
    /// `min(self) - min(divisor)` and `max(self) - max(divisor)` per
    /// variable; leaving that box means non-divisibility, which also bounds
    /// the loop.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Option<Self>, RingError> {
        same_ring(&self.ring, &divisor.ring)?;
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let base = self.ring.base();
        let (lo, hi) = {
            let (amin, amax) = (self.min_exponents().unwrap(), self.max_exponents().unwrap());
            let (dmin, dmax) = (
                divisor.min_exponents().unwrap(),
                divisor.max_exponents().unwrap(),
            );
            let lo: Vec<i32> = amin.iter().zip(&dmin).map(|(a, d)| a - d).collect();
            let hi: Vec<i32> = amax.iter().zip(&dmax).map(|(a, d)| a - d).collect();
            (lo, hi)
        };
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Ok(None);
        }
        let (dlead_e, dlead_c) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot: Vec<(Vec<i32>, Coeff)> = Vec::new();
        while let Some((re, rc)) = rem.leading_term() {
            let e: Vec<i32> = re.iter().zip(dlead_e).map(|(a, b)| a - b).collect();
            if e.iter()
                .zip(lo.iter().zip(&hi))
                .any(|(x, (l, h))| x < l || x > h)
            {
                return Ok(None);
            }
            let Some(c) = base.div_exact(rc, dlead_c) else {
                return Ok(None);
            };
            let term = Self::monomial(&self.ring, c.clone(), e.clone());
            rem = &rem - &(&term * divisor);
            quot.push((e, c));
        }
        Ok(Some(Self::from_terms(&self.ring, quot)))
    }

    /// Canonical representative of the orbit under multiplication by unit
    /// monomials: every variable shifted to minimum exponent zero, then the
    /// lexicographically leading coefficient made positive (over `Z`) or one
    /// (over a field).
    pub fn unit_normal_form(&self) -> Result<Self, RingError> {
        let min = self.min_exponents().ok_or(RingError::ZeroPolynomial)?;
        let neg: Vec<i32> = min.iter().map(|x| -x).collect();
        let shifted = self.shift(&neg);
        let (_, lead) = shifted.leading_term().unwrap();
        let u = self.ring.base().normalizing_unit(lead);
        Ok(shifted.scale(&u))
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        if same_ring(&self.ring, &other.ring).is_err() {
            return false;
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => self.unit_normal_form().ok() == other.unit_normal_form().ok(),
            _ => false,
        }
    }

    /// Embeds into a ring with the same base whose variables extend this
    /// ring's variables (new variables get exponent zero).
    pub fn lift(&self, target: &Ring) -> Result<Self, RingError> {
        if same_ring(&self.ring, target).is_ok() {
            return Ok(self.clone());
        }
        let extends = self.ring.base() == target.base()
            && target.nvars() >= self.ring.nvars()
            && target.vars()[..self.ring.nvars()] == *self.ring.vars();
        if !extends {
            return Err(RingError::DescriptorMismatch {
                left: self.ring.to_string(),
                right: target.to_string(),
            });
        }
        let pad = target.nvars() - self.ring.nvars();
        Ok(RingElement {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.extend(std::iter::repeat_n(0, pad));
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Degree range `(min, max)` of a univariate element.
    fn univariate_span(&self) -> Option<(i32, i32)> {
        Some((self.min_exponents()?[0], self.max_exponents()?[0]))
    }
}

/// Division with remainder in `K[t]` (all exponents nonnegative).
fn univariate_div_rem(a: &RingElement, b: &RingElement) -> (RingElement, RingElement) {
    let ring = a.ring();
    let base = ring.base();
    let (be, bc) = b.leading_term().expect("division by zero polynomial");
    let (be, binv) = (
        be[0],
        base.inverse(bc).expect("leading coefficient in a field"),
    );
    let mut rem = a.clone();
    let mut quot = RingElement::zero(ring);
    while let Some((re, rc)) = rem.leading_term() {
        if re[0] < be {
            break;
        }
        let term = RingElement::monomial(ring, base.mul(rc, &binv), vec![re[0] - be]);
        rem = &rem - &(&term * b);
        quot = &quot + &term;
    }
    (quot, rem)
}

/// Greatest common divisor of univariate Laurent polynomials over a field,
/// normalized by [`RingElement::unit_normal_form`]. Monomial factors are
/// units and are cleared first.
pub fn univariate_gcd(a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
    same_ring(a.ring(), b.ring())?;
    let ring = a.ring();
    if ring.nvars() != 1 || !ring.base().is_field() {
        return Err(RingError::InvalidDescriptor(format!(
            "univariate gcd needs one variable over a field, got {ring}"
        )));
    }
    let normalize = |p: &RingElement| -> RingElement {
        match p.univariate_span() {
            Some((lo, _)) => p.shift(&[-lo]),
            None => p.clone(),
        }
    };
    let (mut x, mut y) = (normalize(a), normalize(b));
    while !y.is_zero() {
        let (_, r) = univariate_div_rem(&x, &y);
        x = std::mem::replace(&mut y, normalize(&r));
    }
    if x.is_zero() {
        return Ok(x);
    }
    x.unit_normal_form()
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::literal::format_element(self))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.neg_ref()
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.neg_ref()
    }
}
