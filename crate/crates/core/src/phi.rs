//! Abelianizations onto `H = Z^μ` and the evaluation map
//! `Φ = ρ ⊗ α: Z[F_n] -> M_k(R[t_1^±1, .., t_μ^±1])`.

use crate::braid::Coloring;
use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, AlphabetKind, FreeWord, GroupRingElement};
use crate::matrix::RingMatrix;
use crate::rings::{parse_element, Coeff, Ring, RingDescriptor, RingElement};

/// Images of the generators of a free group in `H`, as exponent vectors in
/// the variables `vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianizationMap {
    vars: Vec<String>,
    images: Vec<Vec<i32>>,
}

impl AbelianizationMap {
    pub fn new(vars: Vec<String>, images: Vec<Vec<i32>>) -> Result<Self> {
        if images.iter().any(|v| v.len() != vars.len()) {
            return Err(Error::Shape(
                "abelianization image has the wrong number of exponents".into(),
            ));
        }
        Ok(AbelianizationMap { vars, images })
    }

    /// Reads each image from a monomial literal such as `t1*t2^-1` over the
    /// Laurent ring `Z[vars]`.
    pub fn from_literals<S: AsRef<str>>(vars: &[String], literals: &[S]) -> Result<Self> {
        let ring = RingDescriptor::laurent(&RingDescriptor::integers(), vars)?;
        let mut images = Vec::with_capacity(literals.len());
        for lit in literals {
            let e = parse_element(lit.as_ref(), &ring)?;
            match e.as_monomial() {
                Some((c, exps)) if *c == Coeff::Int(1.into()) => images.push(exps.clone()),
                _ => {
                    return Err(Error::Invalid(format!(
                        "abelianization image `{}` is not a monomial with coefficient 1",
                        lit.as_ref()
                    )))
                }
            }
        }
        Self::new(vars.to_vec(), images)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Exponent vector of generator `j` (1-based).
    pub fn image(&self, j: usize) -> &[i32] {
        &self.images[j - 1]
    }

    /// Exponent vector of a whole word.
    pub fn evaluate(&self, w: &FreeWord) -> Vec<i32> {
        let mut acc = vec![0i32; self.vars.len()];
        for s in w.syllables() {
            for (a, e) in acc.iter_mut().zip(&self.images[s.gen - 1]) {
                *a += e * s.exp as i32;
            }
        }
        acc
    }
}

/// The colored augmentation restricted to `F_n`: `x_i ↦ t_{c_i}`, and on the
/// other alphabet `g_i ↦ t_{c_1} ... t_{c_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredAugmentation {
    coloring: Coloring,
    vars: Vec<String>,
}

impl ColoredAugmentation {
    /// Variables are `t` for a single color and `t1..tμ` otherwise.
    pub fn new(coloring: &Coloring) -> Self {
        let mu = coloring.palette_size();
        let vars = if mu == 1 {
            vec!["t".to_string()]
        } else {
            (1..=mu).map(|i| format!("t{i}")).collect()
        };
        ColoredAugmentation {
            coloring: coloring.clone(),
            vars,
        }
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// `R[t_1^±1, .., t_μ^±1]` over the representation ring.
    pub fn target_ring(&self, base: &Ring) -> Result<Ring> {
        for v in &self.vars {
            if base.var_index(v).is_some() {
                return Err(Error::Invalid(format!(
                    "representation ring {base} already uses the variable name `{v}`"
                )));
            }
        }
        Ok(RingDescriptor::laurent(base, &self.vars)?)
    }

    pub fn abelianization(&self, kind: AlphabetKind) -> AbelianizationMap {
        let mu = self.vars.len();
        let n = self.coloring.strands();
        let mut images = Vec::with_capacity(n);
        let mut acc = vec![0i32; mu];
        for i in 1..=n {
            let c = self.coloring.color(i) - 1;
            match kind {
                AlphabetKind::X => {
                    let mut v = vec![0i32; mu];
                    v[c] = 1;
                    images.push(v);
                }
                AlphabetKind::G => {
                    acc[c] += 1;
                    images.push(acc.clone());
                }
            }
        }
        AbelianizationMap {
            vars: self.vars.clone(),
            images,
        }
    }
}

/// `Φ` on one alphabet: generator images `ρ(y) α(y)` lifted into `R[H]`.
#[derive(Debug, Clone)]
pub struct Phi {
    ring: Ring,
    alphabet: Alphabet,
    k: usize,
    images: Vec<RingMatrix>,
    inverses: Vec<RingMatrix>,
}

impl Phi {
    /// `rho` and `rho_inv` hold `ρ(y_j)` and `ρ(y_j)^-1` over the
    /// representation ring; `target` must extend that ring by the
    /// abelianization's variables.
    pub fn new(
        target: &Ring,
        alphabet: Alphabet,
        rho: &[RingMatrix],
        rho_inv: &[RingMatrix],
        ab: &AbelianizationMap,
    ) -> Result<Self> {
        if rho.len() != alphabet.rank() || ab.rank() != alphabet.rank() {
            return Err(Error::StrandMismatch {
                expected: alphabet.rank(),
                found: rho.len().min(ab.rank()),
            });
        }
        let k = rho.first().map_or(0, |m| m.rows());
        let nbase = target.nvars() - ab.vars().len();
        let monomial = |exps: &[i32], sign: i32| {
            let mut v = vec![0i32; nbase];
            v.extend(exps.iter().map(|e| e * sign));
            RingElement::unit_monomial(target, v)
        };
        let mut images = Vec::with_capacity(rho.len());
        let mut inverses = Vec::with_capacity(rho.len());
        for j in 0..rho.len() {
            let a = ab.image(j + 1);
            images.push(rho[j].lift(target)?.scale(&monomial(a, 1))?);
            inverses.push(rho_inv[j].lift(target)?.scale(&monomial(a, -1))?);
        }
        Ok(Phi {
            ring: target.clone(),
            alphabet,
            k,
            images,
            inverses,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn check(&self, a: Alphabet) -> Result<()> {
        if a == self.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: a.to_string(),
            })
        }
    }

    pub fn eval_word(&self, w: &FreeWord) -> Result<RingMatrix> {
        self.check(w.alphabet())?;
        let mut acc = RingMatrix::identity(&self.ring, self.k);
        for s in w.syllables() {
            let m = if s.exp > 0 {
                &self.images[s.gen - 1]
            } else {
                &self.inverses[s.gen - 1]
            };
            for _ in 0..s.exp.unsigned_abs() {
                acc = acc.mul(m)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, e: &GroupRingElement) -> Result<RingMatrix> {
        self.check(e.alphabet())?;
        let mut acc = RingMatrix::zero(&self.ring, self.k, self.k);
        for (w, c) in e.terms() {
            let scalar = RingElement::from_bigint(&self.ring, c);
            acc = acc.add(&self.eval_word(w)?.scale(&scalar)?)?;
        }
        Ok(acc)
    }

    /// `Φ(∂w/∂y_j)` for every `j`, together with `Φ(w)`, in a single pass
    /// over the word: the running prefix image is added to (or, for inverse
    /// letters, subtracted from) the derivative of the current generator.
    pub fn fox_row(&self, w: &FreeWord) -> Result<(Vec<RingMatrix>, RingMatrix)> {
        self.check(w.alphabet())?;
        let zero = RingMatrix::zero(&self.ring, self.k, self.k);
        let mut row = vec![zero; self.alphabet.rank()];
        let mut prefix = RingMatrix::identity(&self.ring, self.k);
        for s in w.syllables() {
            let j = s.gen - 1;
            if s.exp > 0 {
                for _ in 0..s.exp {
                    row[j] = row[j].add(&prefix)?;
                    prefix = prefix.mul(&self.images[j])?;
                }
            } else {
                for _ in 0..(-s.exp) {
                    prefix = prefix.mul(&self.inverses[j])?;
                    row[j] = row[j].sub(&prefix)?;
                }
            }
        }
        Ok((row, prefix))
    }
}

/// Linear extension of `w ↦ ρ(w) α(w)` for a representation and
/// abelianization given on the alphabet of `e`.
pub fn evaluate_phi(
    rep: &crate::rep::Representation,
    ab: &AbelianizationMap,
    e: &GroupRingElement,
) -> Result<RingMatrix> {
    let alphabet = e.alphabet();
    if alphabet.rank() != rep.strands() {
        return Err(Error::StrandMismatch {
            expected: rep.strands(),
            found: alphabet.rank(),
        });
    }
    let target = RingDescriptor::laurent(rep.ring(), ab.vars())?;
    let (img, inv) = rep.generator_images(alphabet.kind());
    Phi::new(&target, alphabet, img, inv, ab)?.eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::fox_derivative;
    use crate::freegroup::parse_word;
    use crate::rep::Representation;

    fn trefoil_rep() -> Representation {
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
    fn augmentation_images() {
        let aug = ColoredAugmentation::new(&Coloring::parse("1,2,1").unwrap());
        assert_eq!(aug.vars(), &["t1", "t2"]);
        let x = aug.abelianization(AlphabetKind::X);
        assert_eq!(x.image(3), &[1, 0]);
        let g = aug.abelianization(AlphabetKind::G);
        assert_eq!(g.image(2), &[1, 1]);
        assert_eq!(g.image(3), &[2, 1]);
        let w = parse_word("x1 x2^-2 x3", Alphabet::x(3)).unwrap();
        assert_eq!(x.evaluate(&w), vec![2, -2]);
        let mono = ColoredAugmentation::new(&Coloring::parse("1,1").unwrap());
        assert_eq!(mono.vars(), &["t"]);
    }

    #[test]
    fn abelianization_from_literals() {
        let vars = vec!["t1".to_string(), "t2".to_string()];
        let ab = AbelianizationMap::from_literals(&vars, &["t1", "t1*t2^-1"]).unwrap();
        assert_eq!(ab.image(2), &[1, -1]);
        assert!(AbelianizationMap::from_literals(&vars, &["2*t1"]).is_err());
        assert!(AbelianizationMap::from_literals(&vars, &["t1 + t2"]).is_err());
    }

    #[test]
    fn phi_of_g2_minus_one() {
        let rep = trefoil_rep();
        let aug = ColoredAugmentation::new(&Coloring::parse("1,1").unwrap());
        let ab = aug.abelianization(AlphabetKind::G);
        let g = Alphabet::g(2);
        let e = GroupRingElement::from_word(&parse_word("g2", g).unwrap())
            .sub(&GroupRingElement::one(g))
            .unwrap();
        let m = evaluate_phi(&rep, &ab, &e).unwrap();
        assert_eq!(
            m.to_literals(),
            vec![vec!["-1", "-s*t^2"], vec!["s*t^2", "-1 - s*t^2"]]
        );
        let one = evaluate_phi(&rep, &ab, &GroupRingElement::one(g)).unwrap();
        assert!(one.is_identity());
    }

    #[test]
    fn trivial_rep_sends_generators_to_variables() {
        let rep = Representation::trivial(3).unwrap();
        let aug = ColoredAugmentation::new(&Coloring::parse("1,2,2").unwrap());
        let ab = aug.abelianization(AlphabetKind::X);
        for (j, var) in [(1, "t1"), (2, "t2"), (3, "t2")] {
            let w = FreeWord::generator(Alphabet::x(3), j).unwrap();
            let m = evaluate_phi(&rep, &ab, &GroupRingElement::from_word(&w)).unwrap();
            assert_eq!(m.to_literals(), vec![vec![var.to_string()]]);
        }
    }

    #[test]
    fn fused_fox_row_matches_group_ring_route() {
        let rep = trefoil_rep();
        let aug = ColoredAugmentation::new(&Coloring::parse("1,1").unwrap());
        let ab = aug.abelianization(AlphabetKind::G);
        let target = aug.target_ring(rep.ring()).unwrap();
        let (img, inv) = rep.generator_images(AlphabetKind::G);
        let phi = Phi::new(&target, Alphabet::g(2), img, inv, &ab).unwrap();
        let w = parse_word("g2^2 g1^-1 g2^-3 g1 g2", Alphabet::g(2)).unwrap();
        let (row, whole) = phi.fox_row(&w).unwrap();
        assert_eq!(whole, phi.eval_word(&w).unwrap());
        for j in 1..=2 {
            assert_eq!(
                row[j - 1],
                phi.eval(&fox_derivative(&w, j).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn variable_collision_is_rejected() {
        let base = RingDescriptor::laurent(&RingDescriptor::integers(), &["t"]).unwrap();
        let aug = ColoredAugmentation::new(&Coloring::parse("1,1").unwrap());
        assert!(aug.target_ring(&base).is_err());
    }
}
