//! Alexander matrices of finite presentations, twisted Alexander invariants,
//! presentations of braid closures, and the comparison between the invariant
//! of a closure and the reduced Long-Moody determinant quotient.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::braid::{generator_images, is_colored, BraidWord, Coloring};
use crate::error::{Error, Result};
use crate::freegroup::{parse_word, Alphabet, AlphabetKind, FreeWord};
use crate::longmoody::LongMoody;
use crate::matrix::RingMatrix;
use crate::phi::{AbelianizationMap, Phi};
use crate::rep::Representation;
use crate::rings::{univariate_gcd, Ring, RingDescriptor, RingElement, RingSpec};

/// `⟨y_1, .., y_n | r_1, .., r_m⟩` over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    alphabet: Alphabet,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(alphabet: Alphabet, relators: Vec<FreeWord>) -> Result<Self> {
        for r in &relators {
            if r.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    left: alphabet.to_string(),
                    right: r.alphabet().to_string(),
                });
            }
        }
        Ok(GroupPresentation { alphabet, relators })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn generators(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.alphabet.kind().letter();
        let gens: Vec<String> = (1..=self.alphabet.rank())
            .map(|i| format!("{l}{i}"))
            .collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// Presentation of the group of the closure of `b`: relators
/// `(y_i·b) y_i^-1`, for all `i` on the `x`-alphabet and for `i <= n-1` on
/// the `g`-alphabet (where `g_n` is fixed by every braid).
pub fn closure_presentation(b: &BraidWord, kind: AlphabetKind) -> GroupPresentation {
    let n = b.strands();
    let alphabet = Alphabet::new(n, kind).expect("braid has at least one strand");
    let count = match kind {
        AlphabetKind::X => n,
        AlphabetKind::G => n - 1,
    };
    let relators = generator_images(b, kind)
        .into_iter()
        .take(count)
        .enumerate()
        .map(|(i, w)| {
            let y = FreeWord::generator(alphabet, i + 1).expect("generator in range");
            w.multiply(&y.invert()).expect("same alphabet")
        })
        .collect();
    GroupPresentation { alphabet, relators }
}

/// Matrices `ρ(y_j)` for the generators of a presentation.
#[derive(Debug, Clone)]
pub struct GeneratorImages {
    ring: Ring,
    k: usize,
    images: Vec<RingMatrix>,
    inverses: Vec<RingMatrix>,
}

impl GeneratorImages {
    pub fn new(ring: &Ring, images: Vec<RingMatrix>) -> Result<Self> {
        let k = images.first().map_or(0, |m| m.rows());
        let mut inverses = Vec::with_capacity(images.len());
        for (j, m) in images.iter().enumerate() {
            crate::rings::same_ring(ring, m.ring())?;
            if (m.rows(), m.cols()) != (k, k) {
                return Err(Error::Shape(format!(
                    "image of generator {} is not {k}x{k}",
                    j + 1
                )));
            }
            inverses.push(m.inverse().map_err(|_| {
                Error::NotInvertible(format!("image of generator {} is not invertible", j + 1))
            })?);
        }
        Ok(GeneratorImages {
            ring: ring.clone(),
            k,
            images,
            inverses,
        })
    }

    pub fn from_representation(rep: &Representation, kind: AlphabetKind) -> Self {
        let (img, inv) = rep.generator_images(kind);
        GeneratorImages {
            ring: rep.ring().clone(),
            k: rep.dim(),
            images: img.to_vec(),
            inverses: inv.to_vec(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

/// The Alexander matrix together with the evaluation map that produced it.
#[derive(Debug, Clone)]
pub struct AlexanderMatrix {
    matrix: RingMatrix,
    phi: Phi,
    relators: usize,
    generators: usize,
}

impl AlexanderMatrix {
    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    pub fn ring(&self) -> &Ring {
        self.phi.ring()
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    /// `det Φ(y_j - 1)` for 1-based `j`.
    pub fn denominator(&self, j: usize) -> Result<RingElement> {
        let y = FreeWord::generator(self.phi.alphabet(), j)?;
        let m = self.phi.eval_word(&y)?;
        m.sub(&RingMatrix::identity(self.ring(), self.dim()))?
            .determinant()
    }

    /// Generators whose denominator is nonzero.
    pub fn usable_generators(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for j in 1..=self.generators {
            if !self.denominator(j)?.is_zero() {
                out.push(j);
            }
        }
        Ok(out)
    }

    fn nonzero_denominator(&self, j: usize) -> Result<RingElement> {
        if j == 0 || j > self.generators {
            return Err(Error::GeneratorOutOfRange {
                index: j,
                rank: self.generators,
            });
        }
        let den = self.denominator(j)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator {
                generator: j,
                alternatives: self.usable_generators()?,
            });
        }
        Ok(den)
    }

    /// `M_j`: the matrix with block column `j` removed.
    pub fn without_column(&self, j: usize) -> RingMatrix {
        let k = self.dim();
        let rows: Vec<usize> = (0..self.relators * k).collect();
        let cols: Vec<usize> = (0..self.generators * k)
            .filter(|c| c / k != j - 1)
            .collect();
        self.matrix.select(&rows, &cols)
    }

    /// `det M_j^I` for the 0-based scalar row selection `rows`.
    pub fn minor(&self, j: usize, rows: &[usize]) -> Result<RingElement> {
        let mj = self.without_column(j);
        let cols: Vec<usize> = (0..mj.cols()).collect();
        if rows.len() != cols.len() || rows.iter().any(|&r| r >= mj.rows()) {
            return Err(Error::Shape(format!(
                "row selection must pick {} of {} rows",
                cols.len(),
                mj.rows()
            )));
        }
        mj.select(rows, &cols).determinant()
    }

    /// The invariant computed with generator `j` removed.
    pub fn invariant(&self, j: usize) -> Result<InvariantValue> {
        let den = self.nonzero_denominator(j)?;
        let ring = self.ring().clone();
        let (m, n, k) = (self.relators, self.generators, self.dim());
        if m + 1 < n {
            return Ok(InvariantValue::new(RingElement::zero(&ring), den));
        }
        let size = (n - 1) * k;
        if m + 1 == n {
            let rows: Vec<usize> = (0..size).collect();
            return Ok(InvariantValue::new(self.minor(j, &rows)?, den));
        }
        let minors = (0..m * k)
            .combinations(size)
            .map(|rows| self.minor(j, &rows))
            .collect::<Result<Vec<_>>>()?;
        if ring.nvars() != 1 || !ring.base().is_field() {
            return Err(Error::GcdNotSupported {
                minors: minors.iter().map(|p| p.to_string()).collect(),
            });
        }
        let mut g = RingElement::zero(&ring);
        for p in &minors {
            g = univariate_gcd(&g, p)?;
        }
        Ok(InvariantValue::new(g, den))
    }

    /// `det M_i^I det Φ(y_j - 1) = ± det M_j^I det Φ(y_i - 1)`.
    pub fn minor_consistency(&self, i: usize, j: usize, rows: &[usize]) -> Result<bool> {
        let di = self.nonzero_denominator(i)?;
        let dj = self.nonzero_denominator(j)?;
        let lhs = &self.minor(i, rows)? * &dj;
        let rhs = &self.minor(j, rows)? * &di;
        Ok(lhs == rhs || lhs == -rhs)
    }
}

/// `Φ(∂r_i/∂y_j)` as an `mk x nk` matrix over `R[H]`. Every relator must be
/// killed by `α` and by `ρ`.
pub fn alexander_matrix(
    pres: &GroupPresentation,
    images: &GeneratorImages,
    ab: &AbelianizationMap,
) -> Result<AlexanderMatrix> {
    let n = pres.generators();
    if images.len() != n || ab.rank() != n {
        return Err(Error::InconsistentData(format!(
            "presentation has {n} generators but {} matrix images and {} abelianization images",
            images.len(),
            ab.rank()
        )));
    }
    let target = RingDescriptor::laurent(images.ring(), ab.vars())?;
    let phi = Phi::new(
        &target,
        pres.alphabet(),
        &images.images,
        &images.inverses,
        ab,
    )?;
    let mut grid = Vec::with_capacity(pres.relators().len());
    for r in pres.relators() {
        if ab.evaluate(r).iter().any(|&e| e != 0) {
            return Err(Error::InconsistentData(format!(
                "relator {r} is not killed by the abelianization"
            )));
        }
        let (row, whole) = phi.fox_row(r)?;
        if !whole.is_identity() {
            return Err(Error::InconsistentData(format!(
                "relator {r} is not killed by the representation"
            )));
        }
        grid.push(row);
    }
    let matrix = if grid.is_empty() {
        RingMatrix::zero(&target, 0, n * images.dim())
    } else {
        RingMatrix::from_blocks(&target, &grid)?
    };
    Ok(AlexanderMatrix {
        matrix,
        phi,
        relators: pres.relators().len(),
        generators: n,
    })
}

/// Quotient `gcd_I(det M_j^I) / det Φ(y_j - 1)`.
pub fn twisted_alexander(
    pres: &GroupPresentation,
    images: &GeneratorImages,
    ab: &AbelianizationMap,
    j: usize,
) -> Result<InvariantValue> {
    alexander_matrix(pres, images, ab)?.invariant(j)
}

pub fn minor_consistency_check(
    pres: &GroupPresentation,
    images: &GeneratorImages,
    ab: &AbelianizationMap,
    i: usize,
    j: usize,
    rows: &[usize],
) -> Result<bool> {
    alexander_matrix(pres, images, ab)?.minor_consistency(i, j, rows)
}

/// A quotient of two Laurent polynomials, with the exact quotient when the
/// division succeeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    pub numerator: RingElement,
    pub denominator: RingElement,
    pub simplified: Option<RingElement>,
}

impl InvariantValue {
    pub fn new(numerator: RingElement, denominator: RingElement) -> Self {
        let simplified = numerator.exact_divide(&denominator).ok().flatten();
        InvariantValue {
            numerator,
            denominator,
            simplified,
        }
    }

    pub fn ring(&self) -> &Ring {
        self.numerator.ring()
    }

    /// Cross-multiplied comparison up to a unit monomial.
    pub fn equal_up_to_unit(&self, other: &InvariantValue) -> bool {
        let a = &self.numerator * &other.denominator;
        let b = &other.numerator * &self.denominator;
        if a.is_zero() || b.is_zero() {
            return a.is_zero() && b.is_zero();
        }
        a.equal_up_to_unit(&b)
    }

    /// Numerator and denominator in unit normal form (zero stays zero).
    pub fn normal_forms(&self) -> (RingElement, RingElement) {
        let nf = |p: &RingElement| p.unit_normal_form().unwrap_or_else(|_| p.clone());
        (nf(&self.numerator), nf(&self.denominator))
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

fn hypothesis_checks(rep: &Representation, coloring: &Coloring, b: &BraidWord) -> Result<()> {
    if coloring.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            expected: coloring.strands(),
            found: b.strands(),
        });
    }
    if !is_colored(b, coloring)? {
        return Err(Error::NotColored {
            braid: b.to_string(),
            coloring: coloring.to_string(),
        });
    }
    let failures = rep.closure_failures(b)?;
    if !failures.is_empty() {
        let names: Vec<String> = failures.iter().map(|i| format!("x{i}")).collect();
        return Err(Error::Hypothesis(format!(
            "the representation does not factor through the closure group: rho(y) != rho(y.b) for y in {{{}}}",
            names.join(", ")
        )));
    }
    Ok(())
}

/// `det(LM_red(b) - Diag(ρ(b), ..)) / det(ρ(x_1 ⋯ x_n) t_{c_1} ⋯ t_{c_n} - I)`.
pub fn closure_formula_rhs(
    rep: &Representation,
    coloring: &Coloring,
    b: &BraidWord,
) -> Result<InvariantValue> {
    closure_formula_rhs_with(&LongMoody::new(rep, coloring)?, b)
}

/// As [`closure_formula_rhs`], reusing a prepared construction.
pub fn closure_formula_rhs_with(lm: &LongMoody, b: &BraidWord) -> Result<InvariantValue> {
    let rep = lm.representation();
    hypothesis_checks(rep, lm.augmentation().coloring(), b)?;
    let n = rep.strands();
    let reduced = lm.reduced(b)?;
    let diag = lm.rho_block_diag(b, n - 1)?;
    let numerator = reduced.sub(&diag)?.determinant()?;
    let gn = FreeWord::generator(Alphabet::g(n), n)?;
    let whole = lm.phi(AlphabetKind::G).eval_word(&gn)?;
    let denominator = whole
        .sub(&RingMatrix::identity(lm.ring(), rep.dim()))?
        .determinant()?;
    if denominator.is_zero() {
        return Err(Error::Hypothesis(
            "det(rho(x1 ... xn) t_c1 ... t_cn - I) vanishes".into(),
        ));
    }
    Ok(InvariantValue::new(numerator, denominator))
}

#[derive(Debug, Clone)]
pub struct ClosureFormulaReport {
    /// Invariant of the closure computed from its `g`-presentation.
    pub lhs: InvariantValue,
    /// Determinant quotient built from the reduced construction.
    pub rhs: InvariantValue,
    /// Generator removed on the presentation side.
    pub removed_generator: usize,
    pub equal: bool,
}

impl ClosureFormulaReport {
    pub fn lhs_normal(&self) -> (RingElement, RingElement) {
        self.lhs.normal_forms()
    }

    pub fn rhs_normal(&self) -> (RingElement, RingElement) {
        self.rhs.normal_forms()
    }
}

/// Invariant of the closure of a colored braid from its `g`-presentation,
/// removing `g_n` when possible and otherwise the first usable generator.
pub fn closure_invariant(lm: &LongMoody, b: &BraidWord) -> Result<(InvariantValue, usize)> {
    let rep = lm.representation();
    hypothesis_checks(rep, lm.augmentation().coloring(), b)?;
    let n = rep.strands();
    let pres = closure_presentation(b, AlphabetKind::G);
    let images = GeneratorImages::from_representation(rep, AlphabetKind::G);
    let ab = lm.augmentation().abelianization(AlphabetKind::G);
    let am = alexander_matrix(&pres, &images, &ab)?;
    let j = if !am.denominator(n)?.is_zero() {
        n
    } else {
        match am.usable_generators()?.first() {
            Some(&j) => j,
            None => {
                return Err(Error::ZeroDenominator {
                    generator: n,
                    alternatives: Vec::new(),
                })
            }
        }
    };
    Ok((am.invariant(j)?, j))
}

pub fn verify_closure_formula(
    rep: &Representation,
    coloring: &Coloring,
    b: &BraidWord,
) -> Result<ClosureFormulaReport> {
    verify_closure_formula_with(&LongMoody::new(rep, coloring)?, b)
}

pub fn verify_closure_formula_with(lm: &LongMoody, b: &BraidWord) -> Result<ClosureFormulaReport> {
    let rhs = closure_formula_rhs_with(lm, b)?;
    let (lhs, removed_generator) = closure_invariant(lm, b)?;
    let equal = lhs.equal_up_to_unit(&rhs);
    Ok(ClosureFormulaReport {
        lhs,
        rhs,
        removed_generator,
        equal,
    })
}

/// JSON form of a general presentation with its representation data:
/// generators `x1..xn` (or `g1..gn`), relators in word syntax, one monomial
/// per generator for the abelianization and one matrix per generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub ring: RingSpec,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    pub variables: Vec<String>,
    pub abelianization: Vec<String>,
    pub images: Vec<Vec<Vec<String>>>,
}

/// Parsed contents of a [`PresentationFile`].
#[derive(Debug, Clone)]
pub struct PresentationData {
    pub presentation: GroupPresentation,
    pub images: GeneratorImages,
    pub abelianization: AbelianizationMap,
}

impl PresentationData {
    pub fn from_file(file: &PresentationFile) -> Result<Self> {
        let n = file.generators.len();
        let kind = match file.generators.first().and_then(|g| g.chars().next()) {
            Some('g') => AlphabetKind::G,
            _ => AlphabetKind::X,
        };
        let alphabet = Alphabet::new(n, kind)?;
        for (i, g) in file.generators.iter().enumerate() {
            let expected = format!("{}{}", kind.letter(), i + 1);
            if *g != expected {
                return Err(Error::Invalid(format!(
                    "generator {} should be named `{expected}`, found `{g}`",
                    i + 1
                )));
            }
        }
        let relators = file
            .relators
            .iter()
            .map(|r| parse_word(r, alphabet))
            .collect::<Result<Vec<_>>>()?;
        let ring = RingDescriptor::from_spec(&file.ring)?;
        let matrices = file
            .images
            .iter()
            .map(|m| RingMatrix::from_literals(&ring, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(PresentationData {
            presentation: GroupPresentation::new(alphabet, relators)?,
            images: GeneratorImages::new(&ring, matrices)?,
            abelianization: AbelianizationMap::from_literals(
                &file.variables,
                &file.abelianization,
            )?,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("presentation JSON: {e}")))?;
        Self::from_file(&file)
    }

    pub fn alexander_matrix(&self) -> Result<AlexanderMatrix> {
        alexander_matrix(&self.presentation, &self.images, &self.abelianization)
    }
}
