//! Coefficient domains: `Z`, `Q`, `F_p` and `Q(ζ_N)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::CyclotomicField;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Cyc(Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseRing {
    Integer,
    Rational,
    PrimeField(u64),
    Cyclotomic(Arc<CyclotomicField>),
}

/// Printable pieces of a coefficient: sign, absolute text, and whether the
/// text is a sum that needs parentheses when used as a factor.
pub(crate) struct CoeffText {
    pub negative: bool,
    pub body: String,
    pub compound: bool,
}

impl BaseRing {
    pub fn is_field(&self) -> bool {
        !matches!(self, BaseRing::Integer)
    }

    pub fn zero(&self) -> Coeff {
        match self {
            BaseRing::Integer => Coeff::Int(BigInt::zero()),
            BaseRing::Rational => Coeff::Rat(BigRational::zero()),
            BaseRing::PrimeField(_) => Coeff::Mod(0),
            BaseRing::Cyclotomic(f) => Coeff::Cyc(f.zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_bigint(&BigInt::one())
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            BaseRing::Integer => Coeff::Int(n.clone()),
            BaseRing::Rational => Coeff::Rat(BigRational::from_integer(n.clone())),
            BaseRing::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coeff::Mod(r.to_u64().unwrap())
            }
            BaseRing::Cyclotomic(f) => {
                Coeff::Cyc(f.from_rational(BigRational::from_integer(n.clone())))
            }
        }
    }

    /// `ζ_N^k`, only in cyclotomic fields.
    pub fn zeta_pow(&self, k: i64) -> Option<Coeff> {
        match self {
            BaseRing::Cyclotomic(f) => Some(Coeff::Cyc(f.zeta_pow(k))),
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Int(x) => x.is_zero(),
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Mod(x) => *x == 0,
            Coeff::Cyc(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (_, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (BaseRing::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (BaseRing::Cyclotomic(f), Coeff::Cyc(x), Coeff::Cyc(y)) => Coeff::Cyc(f.add(x, y)),
            _ => unreachable!("coefficient kind does not match base ring"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (_, Coeff::Int(x)) => Coeff::Int(-x),
            (_, Coeff::Rat(x)) => Coeff::Rat(-x),
            (BaseRing::PrimeField(p), Coeff::Mod(x)) => Coeff::Mod(if *x == 0 { 0 } else { p - x }),
            (BaseRing::Cyclotomic(f), Coeff::Cyc(x)) => Coeff::Cyc(f.neg(x)),
            _ => unreachable!("coefficient kind does not match base ring"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (_, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (_, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (BaseRing::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (BaseRing::Cyclotomic(f), Coeff::Cyc(x), Coeff::Cyc(y)) => Coeff::Cyc(f.mul(x, y)),
            _ => unreachable!("coefficient kind does not match base ring"),
        }
    }

    pub fn inverse(&self, a: &Coeff) -> Option<Coeff> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (_, Coeff::Int(x)) => {
                if x.is_one() || (-x).is_one() {
                    Some(Coeff::Int(x.clone()))
                } else {
                    None
                }
            }
            (_, Coeff::Rat(x)) => Some(Coeff::Rat(x.recip())),
            (BaseRing::PrimeField(p), Coeff::Mod(x)) => Some(Coeff::Mod(mod_pow(*x, p - 2, *p))),
            (BaseRing::Cyclotomic(f), Coeff::Cyc(x)) => f.inverse(x).map(Coeff::Cyc),
            _ => unreachable!("coefficient kind does not match base ring"),
        }
    }

    pub fn is_unit(&self, a: &Coeff) -> bool {
        self.inverse(a).is_some()
    }

    /// `a / b` when the quotient exists in the base ring.
    pub fn div_exact(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => {
                if y.is_zero() {
                    return None;
                }
                let (q, r) = x.div_rem(y);
                r.is_zero().then_some(Coeff::Int(q))
            }
            _ => self.inverse(b).map(|inv| self.mul(a, &inv)),
        }
    }

    /// The unit `u` such that `u * lead` is the canonical associate of `lead`:
    /// positive over `Z`, one over a field.
    pub fn normalizing_unit(&self, lead: &Coeff) -> Coeff {
        match lead {
            Coeff::Int(x) if x.is_negative() => Coeff::Int(-BigInt::one()),
            Coeff::Int(_) => Coeff::Int(BigInt::one()),
            _ => self.inverse(lead).expect("normalizing a zero coefficient"),
        }
    }

    pub(crate) fn text(&self, a: &Coeff) -> CoeffText {
        match a {
            Coeff::Int(x) => CoeffText {
                negative: x.is_negative(),
                body: x.abs().to_string(),
                compound: false,
            },
            Coeff::Rat(x) => CoeffText {
                negative: x.is_negative(),
                body: rational_text(&x.abs()),
                compound: false,
            },
            Coeff::Mod(x) => CoeffText {
                negative: false,
                body: x.to_string(),
                compound: false,
            },
            Coeff::Cyc(v) => cyclotomic_text(v),
        }
    }

    pub fn format(&self, a: &Coeff) -> String {
        let t = self.text(a);
        if t.negative {
            format!("-{}", t.body)
        } else {
            t.body
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integer => write!(f, "Z"),
            BaseRing::Rational => write!(f, "Q"),
            BaseRing::PrimeField(p) => write!(f, "F_{p}"),
            BaseRing::Cyclotomic(c) => write!(f, "Q(zeta_{})", c.order()),
        }
    }
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc: u128 = 1;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

fn rational_text(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn zeta_monomial(i: usize) -> String {
    match i {
        0 => String::new(),
        1 => "zeta".to_string(),
        _ => format!("zeta^{i}"),
    }
}

fn cyclotomic_text(v: &[BigRational]) -> CoeffText {
    let nonzero: Vec<(usize, &BigRational)> =
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let single = |i: usize, c: &BigRational| -> String {
        let m = zeta_monomial(i);
        let abs = c.abs();
        if m.is_empty() {
            rational_text(&abs)
        } else if abs.is_one() {
            m
        } else {
            format!("{}*{}", rational_text(&abs), m)
        }
    };
    match nonzero.as_slice() {
        [] => CoeffText {
            negative: false,
            body: "0".into(),
            compound: false,
        },
        [(i, c)] => CoeffText {
            negative: c.is_negative(),
            body: single(*i, c),
            compound: false,
        },
        terms => {
            let mut s = String::new();
            for (k, (i, c)) in terms.iter().enumerate() {
                let piece = single(*i, c);
                if k == 0 {
                    if c.is_negative() {
                        s.push('-');
                    }
                    s.push_str(&piece);
                } else {
                    s.push_str(if c.is_negative() { " - " } else { " + " });
                    s.push_str(&piece);
                }
            }
            CoeffText {
                negative: false,
                body: s,
                compound: true,
            }
        }
    }
}
