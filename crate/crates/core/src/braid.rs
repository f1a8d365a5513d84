//! Braid words in the Artin generators, colorings of strands, and the right
//! action of `B_n` on the free group in either alphabet.

use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::freegroup::{
    push_syllable, scan_syllables, substitute, Alphabet, AlphabetKind, FreeWord, Syllable,
};

/// A run `σ_gen^exp` with `exp` nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub gen: usize,
    pub exp: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, &[])
    }

    /// Builds a braid from `(generator, exponent)` pairs, merging adjacent
    /// runs of the same generator.
    pub fn new(strands: usize, letters: &[(usize, i64)]) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        let mut stack: Vec<Syllable> = Vec::new();
        for &(gen, exp) in letters {
            if gen == 0 || gen >= strands {
                return Err(Error::GeneratorOutOfRange {
                    index: gen,
                    rank: strands - 1,
                });
            }
            push_syllable(&mut stack, Syllable::new(gen, exp));
        }
        Ok(BraidWord {
            strands,
            letters: stack
                .into_iter()
                .map(|s| BraidLetter {
                    gen: s.gen,
                    exp: s.exp,
                })
                .collect(),
        })
    }

    /// Parses `s1^3 s2^-1`; empty input or `e` is the identity.
    pub fn parse(input: &str, strands: usize) -> Result<Self> {
        let raw = scan_syllables(input, &['s'])?;
        for &(pos, _, idx, _) in &raw {
            if idx == 0 || idx >= strands {
                return Err(ParseError::new(
                    pos,
                    format!("generator s{idx} out of range for {strands} strands"),
                )
                .into());
            }
        }
        let pairs: Vec<(usize, i64)> = raw.iter().map(|&(_, _, g, e)| (g, e)).collect();
        Self::new(strands, &pairs)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of Artin letters, `sum |exp|`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        check_strands(self.strands, other.strands)?;
        let pairs: Vec<(usize, i64)> = self
            .letters
            .iter()
            .chain(&other.letters)
            .map(|l| (l.gen, l.exp))
            .collect();
        Self::new(self.strands, &pairs)
    }

    /// Letters expanded to single `σ_i^±1` steps.
    pub fn unit_letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.letters
            .iter()
            .flat_map(|l| std::iter::repeat_n((l.gen, l.exp > 0), l.exp.unsigned_abs() as usize))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    format!("s{}", l.gen)
                } else {
                    format!("s{}^{}", l.gen, l.exp)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn check_strands(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::StrandMismatch { expected, found })
    }
}

/// Surjective assignment of colors `1..=μ` to strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::InvalidColoring("coloring is empty".into()));
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0) {
            return Err(Error::InvalidColoring(format!("color {c} is not positive")));
        }
        let palette = *colors.iter().max().unwrap();
        let missing: Vec<String> = (1..=palette)
            .filter(|k| !colors.contains(k))
            .map(|k| k.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::InvalidColoring(format!(
                "colors must cover 1..{palette}; missing {}",
                missing.join(", ")
            )));
        }
        Ok(Coloring { colors, palette })
    }

    /// All strands the same color.
    pub fn monochrome(strands: usize) -> Result<Self> {
        Self::new(vec![1; strands])
    }

    /// Parses `1,2,1`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut colors = Vec::new();
        let mut offset = 0;
        for part in input.split(',') {
            let trimmed = part.trim();
            let lead = part.len() - part.trim_start().len();
            let c: usize = trimmed.parse().map_err(|_| {
                ParseError::new(
                    offset + lead,
                    format!("expected a positive color, found `{trimmed}`"),
                )
            })?;
            colors.push(c);
            offset += part.len() + 1;
        }
        Self::new(colors)
    }

    pub fn strands(&self) -> usize {
        self.colors.len()
    }

    pub fn palette_size(&self) -> usize {
        self.palette
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color of strand `k` (1-based).
    pub fn color(&self, k: usize) -> usize {
        self.colors[k - 1]
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Permutation of `1..=n` stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn image(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k - 1] {
                seen[k - 1] = true;
                cycle.push(k);
                k = self.image(k);
            }
            out.push(cycle);
        }
        out
    }
}

/// Image in the symmetric group. Each `σ_i^±1` swaps entries `i` and `i+1`
/// of the running image vector, so `σ_1 σ_2^-1 σ_1 σ_2^-1` sends
/// `1 -> 3 -> 2 -> 1`.
pub fn permutation(b: &BraidWord) -> Permutation {
    let mut v: Vec<usize> = (1..=b.strands).collect();
    for l in &b.letters {
        if l.exp % 2 != 0 {
            v.swap(l.gen - 1, l.gen);
        }
    }
    Permutation(v)
}

pub fn exponent_sum(b: &BraidWord) -> i64 {
    b.letters.iter().map(|l| l.exp).sum()
}

pub fn is_colored(b: &BraidWord, c: &Coloring) -> Result<bool> {
    check_strands(b.strands, c.strands())?;
    let p = permutation(b);
    Ok((1..=b.strands).all(|k| c.color(p.image(k)) == c.color(k)))
}

pub fn closure_component_count(b: &BraidWord) -> usize {
    permutation(b).cycles().len()
}

/// The substitution performed by a single `σ_i^±1` on generators
/// `1..=n` of the given alphabet.
fn letter_images(n: usize, kind: AlphabetKind, i: usize, positive: bool) -> Vec<Vec<Syllable>> {
    let mut images: Vec<Vec<Syllable>> = (1..=n).map(|k| vec![Syllable::new(k, 1)]).collect();
    let s = Syllable::new;
    match (kind, positive) {
        (AlphabetKind::X, true) => {
            images[i - 1] = vec![s(i, 1), s(i + 1, 1), s(i, -1)];
            images[i] = vec![s(i, 1)];
        }
        (AlphabetKind::X, false) => {
            images[i - 1] = vec![s(i + 1, 1)];
            images[i] = vec![s(i + 1, -1), s(i, 1), s(i + 1, 1)];
        }
        (AlphabetKind::G, true) => {
            let mut img = vec![s(i + 1, 1), s(i, -1)];
            if i > 1 {
                img.push(s(i - 1, 1));
            }
            images[i - 1] = img;
        }
        (AlphabetKind::G, false) => {
            let mut img = Vec::new();
            if i > 1 {
                img.push(s(i - 1, 1));
            }
            img.extend([s(i, -1), s(i + 1, 1)]);
            images[i - 1] = img;
        }
    }
    images
}

/// Images `act(y_k, b)` of every generator of the alphabet.
pub fn generator_images(b: &BraidWord, kind: AlphabetKind) -> Vec<FreeWord> {
    let n = b.strands;
    let alphabet = Alphabet::new(n, kind).expect("braid has at least one strand");
    let mut images: Vec<Vec<Syllable>> = (1..=n).map(|k| vec![Syllable::new(k, 1)]).collect();
    for (i, positive) in b.unit_letters() {
        let step = letter_images(n, kind, i, positive);
        images = images.iter().map(|w| substitute(w, &step)).collect();
    }
    images
        .into_iter()
        .map(|w| FreeWord::from_reduced(alphabet, w))
        .collect()
}

/// Right action `w · b`, so that `act(w, b1 b2) = act(act(w, b1), b2)`.
pub fn act(w: &FreeWord, b: &BraidWord) -> Result<FreeWord> {
    check_strands(b.strands, w.alphabet().rank())?;
    let images: Vec<Vec<Syllable>> = generator_images(b, w.alphabet().kind())
        .into_iter()
        .map(|f| f.syllables().to_vec())
        .collect();
    Ok(FreeWord::from_reduced(
        w.alphabet(),
        substitute(w.syllables(), &images),
    ))
}
