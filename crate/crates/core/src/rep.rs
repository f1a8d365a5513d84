//! Representations `ρ: B_n ⋉ F_n -> GL_k(R)` given by the images of the
//! Artin generators `σ_i` and the free generators `x_j`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::braid::{act, BraidWord};
use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, AlphabetKind, FreeWord};
use crate::matrix::RingMatrix;
use crate::rings::{Ring, RingDescriptor, RingSpec};

/// On-disk JSON form of a [`Representation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub n: usize,
    pub k: usize,
    pub ring: RingSpec,
    pub sigma: Vec<Vec<Vec<String>>>,
    pub x: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Representation {
    n: usize,
    k: usize,
    ring: Ring,
    sigma: Vec<RingMatrix>,
    sigma_inv: Vec<RingMatrix>,
    x: Vec<RingMatrix>,
    x_inv: Vec<RingMatrix>,
    g: Vec<RingMatrix>,
    g_inv: Vec<RingMatrix>,
    label: Option<String>,
    violations: OnceLock<Vec<String>>,
}

impl Representation {
    /// Checks shapes and invertibility; relations are checked lazily by
    /// [`Representation::validate_semidirect`].
    pub fn new(
        n: usize,
        k: usize,
        ring: &Ring,
        sigma: Vec<RingMatrix>,
        x: Vec<RingMatrix>,
        label: Option<String>,
    ) -> Result<Self> {
        let mut problems = Vec::new();
        if n == 0 || k == 0 {
            problems.push("n and k must be positive".to_string());
        }
        if sigma.len() + 1 != n {
            problems.push(format!(
                "expected {} sigma images, found {}",
                n.saturating_sub(1),
                sigma.len()
            ));
        }
        if x.len() != n {
            problems.push(format!("expected {n} x images, found {}", x.len()));
        }
        if !problems.is_empty() {
            return Err(Error::InvalidRepresentation(problems));
        }
        let named = sigma
            .iter()
            .enumerate()
            .map(|(i, m)| (format!("s{}", i + 1), m))
            .chain(
                x.iter()
                    .enumerate()
                    .map(|(j, m)| (format!("x{}", j + 1), m)),
            );
        let mut inverses = Vec::with_capacity(sigma.len() + x.len());
        for (name, m) in named {
            if m.ring() != ring {
                problems.push(format!(
                    "image of {name} is over {}, expected {ring}",
                    m.ring()
                ));
            } else if (m.rows(), m.cols()) != (k, k) {
                problems.push(format!(
                    "image of {name} is {}x{}, expected {k}x{k}",
                    m.rows(),
                    m.cols()
                ));
            } else {
                match m.inverse() {
                    Ok(inv) => inverses.push(inv),
                    Err(_) => problems.push(format!("image of {name} is not invertible")),
                }
            }
        }
        if !problems.is_empty() {
            return Err(Error::InvalidRepresentation(problems));
        }
        let x_inv = inverses.split_off(sigma.len());
        let sigma_inv = inverses;
        let mut g = Vec::with_capacity(n);
        let mut g_inv = Vec::with_capacity(n);
        let mut acc = RingMatrix::identity(ring, k);
        let mut acc_inv = RingMatrix::identity(ring, k);
        for j in 0..n {
            acc = acc.mul(&x[j])?;
            acc_inv = x_inv[j].mul(&acc_inv)?;
            g.push(acc.clone());
            g_inv.push(acc_inv.clone());
        }
        Ok(Representation {
            n,
            k,
            ring: ring.clone(),
            sigma,
            sigma_inv,
            x,
            x_inv,
            g,
            g_inv,
            label,
            violations: OnceLock::new(),
        })
    }

    /// The one-dimensional trivial representation over `Z`.
    pub fn trivial(n: usize) -> Result<Self> {
        let z = RingDescriptor::integers();
        let one = RingMatrix::identity(&z, 1);
        Self::new(
            n,
            1,
            &z,
            vec![one.clone(); n.saturating_sub(1)],
            vec![one; n],
            Some(format!("trivial_{n}")),
        )
    }

    pub fn from_file(file: &RepresentationFile) -> Result<Self> {
        let ring = RingDescriptor::from_spec(&file.ring)?;
        let parse = |ms: &[Vec<Vec<String>>]| -> Result<Vec<RingMatrix>> {
            ms.iter()
                .map(|m| RingMatrix::from_literals(&ring, m))
                .collect()
        };
        Self::new(
            file.n,
            file.k,
            &ring,
            parse(&file.sigma)?,
            parse(&file.x)?,
            file.label.clone(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: RepresentationFile = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("representation JSON: {e}")))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> RepresentationFile {
        RepresentationFile {
            n: self.n,
            k: self.k,
            ring: self.ring.to_spec(),
            sigma: self.sigma.iter().map(|m| m.to_literals()).collect(),
            x: self.x.iter().map(|m| m.to_literals()).collect(),
            label: self.label.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("representation serializes")
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `ρ(σ_i)`, 1-based.
    pub fn sigma(&self, i: usize) -> &RingMatrix {
        &self.sigma[i - 1]
    }

    /// `ρ(x_j)`, 1-based.
    pub fn x(&self, j: usize) -> &RingMatrix {
        &self.x[j - 1]
    }

    /// Images and inverse images of the generators of the given alphabet.
    pub fn generator_images(&self, kind: AlphabetKind) -> (&[RingMatrix], &[RingMatrix]) {
        match kind {
            AlphabetKind::X => (&self.x, &self.x_inv),
            AlphabetKind::G => (&self.g, &self.g_inv),
        }
    }

    /// Multiplicative evaluation of a free-group word in either alphabet.
    pub fn evaluate_word(&self, w: &FreeWord) -> Result<RingMatrix> {
        if w.alphabet().rank() != self.n {
            return Err(Error::StrandMismatch {
                expected: self.n,
                found: w.alphabet().rank(),
            });
        }
        let (img, inv) = self.generator_images(w.alphabet().kind());
        let mut acc = RingMatrix::identity(&self.ring, self.k);
        for s in w.syllables() {
            let m = if s.exp > 0 {
                &img[s.gen - 1]
            } else {
                &inv[s.gen - 1]
            };
            for _ in 0..s.exp.unsigned_abs() {
                acc = acc.mul(m)?;
            }
        }
        Ok(acc)
    }

    pub fn evaluate_braid(&self, b: &BraidWord) -> Result<RingMatrix> {
        if b.strands() != self.n {
            return Err(Error::StrandMismatch {
                expected: self.n,
                found: b.strands(),
            });
        }
        let mut acc = RingMatrix::identity(&self.ring, self.k);
        for l in b.letters() {
            let m = if l.exp > 0 {
                &self.sigma[l.gen - 1]
            } else {
                &self.sigma_inv[l.gen - 1]
            };
            for _ in 0..l.exp.unsigned_abs() {
                acc = acc.mul(m)?;
            }
        }
        Ok(acc)
    }

    /// Violated defining relations of `B_n ⋉ F_n`; empty when `ρ` is a
    /// well-defined representation. Computed once and cached.
    pub fn validate_semidirect(&self) -> &[String] {
        self.violations.get_or_init(|| self.compute_violations())
    }

    pub fn is_valid(&self) -> bool {
        self.validate_semidirect().is_empty()
    }

    /// Errors with the violation list unless the relations hold.
    pub fn require_valid(&self) -> Result<()> {
        let v = self.validate_semidirect();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidRepresentation(v.to_vec()))
        }
    }

    fn compute_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let s = &self.sigma;
        let prod = |ms: &[&RingMatrix]| -> RingMatrix {
            ms.iter()
                .fold(RingMatrix::identity(&self.ring, self.k), |acc, m| {
                    acc.mul(m).expect("square images")
                })
        };
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if j == i + 1 {
                    if prod(&[&s[i], &s[j], &s[i]]) != prod(&[&s[j], &s[i], &s[j]]) {
                        out.push(format!(
                            "braid relation s{a} s{b} s{a} = s{b} s{a} s{b}",
                            a = i + 1,
                            b = j + 1
                        ));
                    }
                } else if prod(&[&s[i], &s[j]]) != prod(&[&s[j], &s[i]]) {
                    out.push(format!(
                        "commutation s{a} s{b} = s{b} s{a}",
                        a = i + 1,
                        b = j + 1
                    ));
                }
            }
        }
        let alphabet = Alphabet::x(self.n);
        for i in 1..self.n {
            let sigma = BraidWord::new(self.n, &[(i, 1)]).expect("generator in range");
            for j in 1..=self.n {
                let xj = FreeWord::generator(alphabet, j).expect("generator in range");
                let image = act(&xj, &sigma).expect("ranks agree");
                let rhs = self.sigma[i - 1]
                    .mul(&self.evaluate_word(&image).expect("ranks agree"))
                    .expect("square images");
                if self.x[j - 1]
                    .mul(&self.sigma[i - 1])
                    .expect("square images")
                    != rhs
                {
                    out.push(format!("semidirect relation x{j} s{i} = s{i} ({image})"));
                }
            }
        }
        out
    }

    /// True iff `ρ(x_i) = ρ(x_i · b)` for every `i`, i.e. `ρ` restricted to
    /// `F_n` descends to the group of the closure of `b`.
    pub fn factors_through_closure(&self, b: &BraidWord) -> Result<bool> {
        Ok(self.closure_failures(b)?.is_empty())
    }

    /// Generators `x_i` with `ρ(x_i) != ρ(x_i · b)`.
    pub fn closure_failures(&self, b: &BraidWord) -> Result<Vec<usize>> {
        if b.strands() != self.n {
            return Err(Error::StrandMismatch {
                expected: self.n,
                found: b.strands(),
            });
        }
        let images = crate::braid::generator_images(b, AlphabetKind::X);
        let mut out = Vec::new();
        for (i, w) in images.iter().enumerate() {
            if &self.evaluate_word(w)? != self.x(i + 1) {
                out.push(i + 1);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::parse_word;

    fn burau_trefoil() -> Representation {
        let r = RingDescriptor::laurent(&RingDescriptor::integers(), &["s"]).unwrap();
        let m = |rows: [[&str; 2]; 2]| {
            let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
            RingMatrix::from_literals(&r, &rows).unwrap()
        };
        Representation::new(
            2,
            2,
            &r,
            vec![m([["0", "1"], ["-1", "1"]])],
            vec![m([["-s", "1"], ["0", "1"]]), m([["1", "0"], ["s", "-s"]])],
            None,
        )
        .unwrap()
    }

    #[test]
    fn burau_derived_rep_is_valid() {
        let rep = burau_trefoil();
        assert!(
            rep.validate_semidirect().is_empty(),
            "{:?}",
            rep.validate_semidirect()
        );
        assert!(rep
            .factors_through_closure(&BraidWord::parse("s1^3", 2).unwrap())
            .unwrap());
        assert!(!rep
            .factors_through_closure(&BraidWord::parse("s1", 2).unwrap())
            .unwrap());
    }

    #[test]
    fn word_evaluation() {
        let rep = burau_trefoil();
        let g2 = rep
            .evaluate_word(&parse_word("g2", Alphabet::g(2)).unwrap())
            .unwrap();
        let expected = rep.x(1).mul(rep.x(2)).unwrap();
        assert_eq!(g2, expected);
        assert_eq!(g2.to_literals(), vec![vec!["0", "-s"], vec!["s", "-s"]]);
        assert!(rep
            .evaluate_word(&FreeWord::identity(Alphabet::x(2)))
            .unwrap()
            .is_identity());
        let b = rep
            .evaluate_braid(&BraidWord::parse("s1^3", 2).unwrap())
            .unwrap();
        let s = rep.sigma(1);
        assert_eq!(b, s.mul(s).unwrap().mul(s).unwrap());
        let w = parse_word("x1 x2^-1 x1^-2", Alphabet::x(2)).unwrap();
        let p = rep
            .evaluate_word(&w)
            .unwrap()
            .mul(&rep.evaluate_word(&w.invert()).unwrap())
            .unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn broken_braid_relation_is_reported() {
        let f7 = RingDescriptor::prime_field(7).unwrap();
        let m = |rows: [[&str; 2]; 2]| {
            let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
            RingMatrix::from_literals(&f7, &rows).unwrap()
        };
        let rep = Representation::new(
            3,
            2,
            &f7,
            vec![RingMatrix::identity(&f7, 2), m([["4", "0"], ["0", "2"]])],
            vec![
                m([["2", "0"], ["0", "4"]]),
                m([["1", "1"], ["4", "5"]]),
                m([["1", "2"], ["2", "5"]]),
            ],
            None,
        )
        .unwrap();
        let v = rep.validate_semidirect();
        assert!(v.iter().any(|s| s.starts_with("braid relation")), "{v:?}");
        assert!(matches!(
            rep.require_valid(),
            Err(Error::InvalidRepresentation(_))
        ));
    }

    #[test]
    fn trivial_rep_and_json_round_trip() {
        for n in 1..=4 {
            assert!(Representation::trivial(n).unwrap().is_valid());
        }
        let rep = burau_trefoil();
        let back = Representation::from_json(&rep.to_json()).unwrap();
        assert_eq!(back.x(2), rep.x(2));
        assert_eq!(back.sigma(1), rep.sigma(1));
    }

    #[test]
    fn construction_errors() {
        let z = RingDescriptor::integers();
        let two = RingMatrix::identity(&z, 1)
            .scale(&crate::rings::RingElement::from_int(&z, 2))
            .unwrap();
        let err = Representation::new(
            2,
            1,
            &z,
            vec![two],
            vec![RingMatrix::identity(&z, 1); 2],
            None,
        );
        assert!(
            matches!(err, Err(Error::InvalidRepresentation(v)) if v[0].contains("not invertible"))
        );
        assert!(Representation::new(2, 1, &z, vec![], vec![], None).is_err());
    }
}
