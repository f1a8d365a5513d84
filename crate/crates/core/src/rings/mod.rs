//! Exact commutative rings: `Z`, `Q`, `F_p`, `Q(ζ_N)` and multivariate
//! Laurent polynomial rings over any of them.
//!
//! Every ring is described by a [`RingDescriptor`]: a base coefficient domain
//! plus a (possibly empty) list of Laurent variables. A scalar ring is the
//! zero-variable case, so `Z[s^±1][t^±1]` and `Z[s^±1, t^±1]` are the same
//! descriptor and nesting never occurs.

mod base;
pub mod cyclotomic;
mod element;
mod literal;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use base::{BaseRing, Coeff};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField, IntPoly};
pub use element::{univariate_gcd, LaurentPoly, RingElement};
pub use literal::parse_element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },
    #[error("{0} is not a unit")]
    NotInvertible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no unit normal form")]
    ZeroPolynomial,
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

/// Shared handle to a ring descriptor; elements and matrices carry one.
pub type Ring = Arc<RingDescriptor>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor {
    base: BaseRing,
    vars: Vec<String>,
}

/// Serialized form used by representation and presentation files, e.g.
/// `"int"`, `{"prime_field": 7}`, `{"cyclotomic": 12}` or
/// `{"laurent": {"vars": ["s"], "base": "int"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingSpec {
    Int,
    Rational,
    PrimeField(u64),
    Cyclotomic(u32),
    Laurent {
        vars: Vec<String>,
        base: Box<RingSpec>,
    },
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "zeta"
}

impl RingDescriptor {
    pub fn integers() -> Ring {
        Arc::new(RingDescriptor {
            base: BaseRing::Integer,
            vars: Vec::new(),
        })
    }

    pub fn rationals() -> Ring {
        Arc::new(RingDescriptor {
            base: BaseRing::Rational,
            vars: Vec::new(),
        })
    }

    pub fn prime_field(p: u64) -> Result<Ring, RingError> {
        if !cyclotomic::is_prime(p) || p > u32::MAX as u64 {
            return Err(RingError::InvalidDescriptor(format!(
                "prime field modulus {p} must be a prime below 2^32"
            )));
        }
        Ok(Arc::new(RingDescriptor {
            base: BaseRing::PrimeField(p),
            vars: Vec::new(),
        }))
    }

    pub fn cyclotomic(order: u32) -> Result<Ring, RingError> {
        if order == 0 {
            return Err(RingError::InvalidDescriptor(
                "cyclotomic order must be positive".into(),
            ));
        }
        Ok(Arc::new(RingDescriptor {
            base: BaseRing::Cyclotomic(CyclotomicField::get(order)),
            vars: Vec::new(),
        }))
    }

    /// Laurent ring in `vars` over `base`; a Laurent base is flattened so the
    /// new variables follow the base's own.
    pub fn laurent<S: AsRef<str>>(base: &RingDescriptor, vars: &[S]) -> Result<Ring, RingError> {
        let mut all = base.vars.clone();
        for v in vars {
            let v = v.as_ref();
            if !valid_var_name(v) {
                return Err(RingError::InvalidDescriptor(format!(
                    "invalid variable name `{v}`"
                )));
            }
            if all.iter().any(|w| w == v) {
                return Err(RingError::InvalidDescriptor(format!(
                    "duplicate variable `{v}`"
                )));
            }
            all.push(v.to_string());
        }
        Ok(Arc::new(RingDescriptor {
            base: base.base.clone(),
            vars: all,
        }))
    }

    pub fn from_spec(spec: &RingSpec) -> Result<Ring, RingError> {
        match spec {
            RingSpec::Int => Ok(Self::integers()),
            RingSpec::Rational => Ok(Self::rationals()),
            RingSpec::PrimeField(p) => Self::prime_field(*p),
            RingSpec::Cyclotomic(n) => Self::cyclotomic(*n),
            RingSpec::Laurent { vars, base } => Self::laurent(&*Self::from_spec(base)?, vars),
        }
    }

    pub fn to_spec(&self) -> RingSpec {
        let base = match &self.base {
            BaseRing::Integer => RingSpec::Int,
            BaseRing::Rational => RingSpec::Rational,
            BaseRing::PrimeField(p) => RingSpec::PrimeField(*p),
            BaseRing::Cyclotomic(f) => RingSpec::Cyclotomic(f.order()),
        };
        if self.vars.is_empty() {
            base
        } else {
            RingSpec::Laurent {
                vars: self.vars.clone(),
                base: Box::new(base),
            }
        }
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// True for `Z`, `Q`, `F_p`, `Q(ζ_N)` and Laurent rings over them. Every
    /// constructible descriptor is a domain; kept as a query for callers that
    /// document the requirement.
    pub fn is_domain(&self) -> bool {
        true
    }

    pub fn is_field(&self) -> bool {
        self.vars.is_empty() && self.base.is_field()
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.vars.is_empty() {
            let vs: Vec<String> = self.vars.iter().map(|v| format!("{v}^±1")).collect();
            write!(f, "[{}]", vs.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> Result<(), RingError> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(RingError::DescriptorMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_flatten_and_reject_bad_input() {
        let zs = RingDescriptor::laurent(&RingDescriptor::integers(), &["s"]).unwrap();
        let zst = RingDescriptor::laurent(&zs, &["t"]).unwrap();
        assert_eq!(zst.vars(), &["s".to_string(), "t".to_string()]);
        assert_eq!(zst.to_string(), "Z[s^±1, t^±1]");
        assert!(RingDescriptor::laurent(&zs, &["s"]).is_err());
        assert!(RingDescriptor::laurent(&zs, &["zeta"]).is_err());
        assert!(RingDescriptor::prime_field(6).is_err());
        assert!(RingDescriptor::prime_field(7).is_ok());
        assert!(RingDescriptor::cyclotomic(0).is_err());
    }

    #[test]
    fn ring_spec_json_shapes() {
        let spec: RingSpec =
            serde_json::from_str(r#"{"laurent": {"vars": ["s"], "base": "int"}}"#).unwrap();
        let ring = RingDescriptor::from_spec(&spec).unwrap();
        assert_eq!(ring.to_spec(), spec);
        let f7: RingSpec = serde_json::from_str(r#"{"prime_field": 7}"#).unwrap();
        assert_eq!(f7, RingSpec::PrimeField(7));
        let c12: RingSpec = serde_json::from_str(r#"{"cyclotomic": 12}"#).unwrap();
        assert_eq!(serde_json::to_string(&c12).unwrap(), r#"{"cyclotomic":12}"#);
    }
}
