//! The multivariable Long-Moody construction and the twisted Burau matrix.
//!
//! For a representation `ρ` of `B_n ⋉ F_n` and a coloring `c`, the
//! unreduced matrix of a `c`-colored braid `b` has `(i, j)` block
//! `ρ(b) Φ(∂(x_i·b)/∂x_j)`; the reduced one uses the `g`-alphabet and keeps
//! only `1 <= i, j <= n-1`.

use crate::braid::{generator_images, is_colored, BraidWord, Coloring};
use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, AlphabetKind};
use crate::matrix::RingMatrix;
use crate::phi::{ColoredAugmentation, Phi};
use crate::rep::Representation;
use crate::rings::Ring;

/// Precomputed data for evaluating the construction on many braids with
/// one representation and coloring.
#[derive(Debug, Clone)]
pub struct LongMoody {
    rep: Representation,
    aug: ColoredAugmentation,
    ring: Ring,
    phi_x: Phi,
    phi_g: Phi,
}

impl LongMoody {
    pub fn new(rep: &Representation, coloring: &Coloring) -> Result<Self> {
        if coloring.strands() != rep.strands() {
            return Err(Error::StrandMismatch {
                expected: rep.strands(),
                found: coloring.strands(),
            });
        }
        rep.require_valid()?;
        let aug = ColoredAugmentation::new(coloring);
        let ring = aug.target_ring(rep.ring())?;
        let n = rep.strands();
        let phi = |kind: AlphabetKind| {
            let (img, inv) = rep.generator_images(kind);
            Phi::new(
                &ring,
                Alphabet::new(n, kind)?,
                img,
                inv,
                &aug.abelianization(kind),
            )
        };
        let phi_x = phi(AlphabetKind::X)?;
        let phi_g = phi(AlphabetKind::G)?;
        Ok(LongMoody {
            rep: rep.clone(),
            aug,
            ring,
            phi_x,
            phi_g,
        })
    }

    /// `R[t_1^±1, .., t_μ^±1]`, the ring of every output matrix.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn augmentation(&self) -> &ColoredAugmentation {
        &self.aug
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn phi(&self, kind: AlphabetKind) -> &Phi {
        match kind {
            AlphabetKind::X => &self.phi_x,
            AlphabetKind::G => &self.phi_g,
        }
    }

    fn check_colored(&self, b: &BraidWord) -> Result<()> {
        if is_colored(b, self.aug.coloring())? {
            Ok(())
        } else {
            Err(Error::NotColored {
                braid: b.to_string(),
                coloring: self.aug.coloring().to_string(),
            })
        }
    }

    /// `ρ(b)` over the output ring.
    pub fn rho_braid(&self, b: &BraidWord) -> Result<RingMatrix> {
        self.rep.evaluate_braid(b)?.lift(&self.ring)
    }

    /// Block matrix of `Φ(∂(y_i·b)/∂y_j)` for `i, j <= size`, optionally
    /// left-multiplied blockwise by `ρ(b)`.
    fn fox_blocks(
        &self,
        b: &BraidWord,
        kind: AlphabetKind,
        size: usize,
        with_rho: bool,
    ) -> Result<RingMatrix> {
        self.check_colored(b)?;
        let phi = self.phi(kind);
        let rho_b = if with_rho {
            Some(self.rho_braid(b)?)
        } else {
            None
        };
        let images = generator_images(b, kind);
        let mut grid = Vec::with_capacity(size);
        for w in images.iter().take(size) {
            let (row, _) = phi.fox_row(w)?;
            let row = row
                .into_iter()
                .take(size)
                .map(|m| match &rho_b {
                    Some(r) => r.mul(&m),
                    None => Ok(m),
                })
                .collect::<Result<Vec<_>>>()?;
            grid.push(row);
        }
        if size == 0 {
            return Ok(RingMatrix::zero(&self.ring, 0, 0));
        }
        RingMatrix::from_blocks(&self.ring, &grid)
    }

    /// `nk x nk` matrix in the `x`-basis.
    pub fn unreduced(&self, b: &BraidWord) -> Result<RingMatrix> {
        self.fox_blocks(b, AlphabetKind::X, self.rep.strands(), true)
    }

    /// `(n-1)k x (n-1)k` matrix in the `g`-basis.
    pub fn reduced(&self, b: &BraidWord) -> Result<RingMatrix> {
        self.fox_blocks(b, AlphabetKind::G, self.rep.strands() - 1, true)
    }

    /// The unreduced matrix without the `Diag(ρ(b), ..., ρ(b))` factor.
    pub fn twisted_burau(&self, b: &BraidWord) -> Result<RingMatrix> {
        self.fox_blocks(b, AlphabetKind::X, self.rep.strands(), false)
    }

    /// `Diag(ρ(b), ..., ρ(b))` with `count` blocks.
    pub fn rho_block_diag(&self, b: &BraidWord, count: usize) -> Result<RingMatrix> {
        let r = self.rho_braid(b)?;
        RingMatrix::block_diag(&self.ring, &vec![r; count])
    }
}

pub fn lm_unreduced(
    rep: &Representation,
    coloring: &Coloring,
    b: &BraidWord,
) -> Result<RingMatrix> {
    LongMoody::new(rep, coloring)?.unreduced(b)
}

pub fn lm_reduced(rep: &Representation, coloring: &Coloring, b: &BraidWord) -> Result<RingMatrix> {
    LongMoody::new(rep, coloring)?.reduced(b)
}

pub fn twisted_burau(
    rep: &Representation,
    coloring: &Coloring,
    b: &BraidWord,
) -> Result<RingMatrix> {
    LongMoody::new(rep, coloring)?.twisted_burau(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::RingDescriptor;

    fn braid(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    fn colors(s: &str) -> Coloring {
        Coloring::parse(s).unwrap()
    }

    fn literals(m: &RingMatrix) -> Vec<Vec<String>> {
        m.to_literals()
    }

    #[test]
    fn trivial_rep_sigma1_is_unreduced_burau() {
        let rep = Representation::trivial(2).unwrap();
        let m = lm_unreduced(&rep, &colors("1,1"), &braid("s1", 2)).unwrap();
        assert_eq!(literals(&m), vec![vec!["1 - t", "t"], vec!["1", "0"]]);
    }

    #[test]
    fn trivial_rep_gassner_sigma1_squared() {
        let rep = Representation::trivial(2).unwrap();
        let m = lm_unreduced(&rep, &colors("1,2"), &braid("s1^2", 2)).unwrap();
        // x1·σ1² = x1 x2 x1 x2^-1 x1^-1 and x2·σ1² = x1 x2 x1^-1
        let ring = RingDescriptor::laurent(&RingDescriptor::integers(), &["t1", "t2"]).unwrap();
        let expected = RingMatrix::from_literals(
            &ring,
            &[vec!["1 - t1 + t1*t2", "t1 - t1^2"], vec!["1 - t2", "t1"]],
        )
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn identity_braid_gives_identity() {
        let rep = Representation::trivial(3).unwrap();
        let lm = LongMoody::new(&rep, &colors("1,2,1")).unwrap();
        assert!(lm.unreduced(&braid("e", 3)).unwrap().is_identity());
        assert!(lm.reduced(&braid("e", 3)).unwrap().is_identity());
        assert!(lm.twisted_burau(&braid("e", 3)).unwrap().is_identity());
    }

    #[test]
    fn reduced_trivial_rep_is_reduced_burau() {
        // row i of the reduced matrix of σ_i is (.., t, -t, 1, ..) in columns i-1, i, i+1
        let n = 4;
        let rep = Representation::trivial(n).unwrap();
        let lm = LongMoody::new(&rep, &Coloring::monochrome(n).unwrap()).unwrap();
        for i in 1..n {
            let m = lm.reduced(&BraidWord::new(n, &[(i, 1)]).unwrap()).unwrap();
            for r in 1..n {
                for c in 1..n {
                    let expected = if r != i {
                        if r == c {
                            "1"
                        } else {
                            "0"
                        }
                    } else if c + 1 == i {
                        "t"
                    } else if c == i {
                        "-t"
                    } else if c == i + 1 {
                        "1"
                    } else {
                        "0"
                    };
                    assert_eq!(
                        m.get(r - 1, c - 1).to_string(),
                        expected,
                        "sigma{i} entry ({r},{c})"
                    );
                }
            }
        }
    }

    #[test]
    fn coloring_violation() {
        let rep = Representation::trivial(2).unwrap();
        let err = lm_unreduced(&rep, &colors("1,2"), &braid("s1", 2)).unwrap_err();
        assert!(matches!(err, Error::NotColored { .. }));
    }

    #[test]
    fn unreduced_factors_through_block_diag() {
        let rep = Representation::trivial(3).unwrap();
        let lm = LongMoody::new(&rep, &colors("1,1,1")).unwrap();
        let b = braid("s1 s2^-1 s1", 3);
        let lhs = lm.unreduced(&b).unwrap();
        let rhs = lm
            .rho_block_diag(&b, 3)
            .unwrap()
            .mul(&lm.twisted_burau(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
