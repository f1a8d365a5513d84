//! Reduced words in the free group `F_n`, written either in the puncture
//! loops `x_1..x_n` or in the products `g_i = x_1 ... x_i`, and the integral
//! group ring `Z[F_n]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlphabetKind {
    X,
    G,
}

impl AlphabetKind {
    pub fn letter(self) -> char {
        match self {
            AlphabetKind::X => 'x',
            AlphabetKind::G => 'g',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    rank: usize,
    kind: AlphabetKind,
}

impl Alphabet {
    pub fn new(rank: usize, kind: AlphabetKind) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("alphabet rank must be at least 1".into()));
        }
        Ok(Alphabet { rank, kind })
    }

    pub fn x(rank: usize) -> Self {
        Self::new(rank, AlphabetKind::X).expect("positive rank")
    }

    pub fn g(rank: usize) -> Self {
        Self::new(rank, AlphabetKind::G).expect("positive rank")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> AlphabetKind {
        self.kind
    }

    fn check(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.kind.letter();
        write!(f, "{{{l}1..{l}{}}}", self.rank)
    }
}

/// A power `gen^exp` of one generator; `gen` is 1-based, `exp` nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

impl Syllable {
    pub fn new(gen: usize, exp: i64) -> Self {
        Syllable { gen, exp }
    }
}

/// Freely reduced word in syllable (run-length) form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    alphabet: Alphabet,
    syllables: Vec<Syllable>,
}

/// Appends a syllable to an already reduced syllable list, merging and
/// cancelling at the junction.
pub(crate) fn push_syllable(stack: &mut Vec<Syllable>, s: Syllable) {
    if s.exp == 0 {
        return;
    }
    match stack.last_mut() {
        Some(top) if top.gen == s.gen => {
            top.exp += s.exp;
            if top.exp == 0 {
                stack.pop();
            }
        }
        _ => stack.push(s),
    }
}

impl FreeWord {
    pub fn identity(alphabet: Alphabet) -> Self {
        FreeWord {
            alphabet,
            syllables: Vec::new(),
        }
    }

    /// Single generator `gen` (1-based).
    pub fn generator(alphabet: Alphabet, gen: usize) -> Result<Self> {
        Self::reduce(&[Syllable::new(gen, 1)], alphabet)
    }

    /// Freely reduces a raw syllable list.
    pub fn reduce(raw: &[Syllable], alphabet: Alphabet) -> Result<Self> {
        let mut stack = Vec::with_capacity(raw.len());
        for s in raw {
            if s.gen == 0 || s.gen > alphabet.rank {
                return Err(Error::GeneratorOutOfRange {
                    index: s.gen,
                    rank: alphabet.rank,
                });
            }
            push_syllable(&mut stack, *s);
        }
        Ok(FreeWord {
            alphabet,
            syllables: stack,
        })
    }

    pub(crate) fn from_reduced(alphabet: Alphabet, syllables: Vec<Syllable>) -> Self {
        debug_assert!(syllables.windows(2).all(|w| w[0].gen != w[1].gen));
        FreeWord {
            alphabet,
            syllables,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Total number of letters, `sum |exp|`.
    pub fn letter_count(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.alphabet.check(&other.alphabet)?;
        let mut stack = self.syllables.clone();
        for s in &other.syllables {
            push_syllable(&mut stack, *s);
        }
        Ok(FreeWord {
            alphabet: self.alphabet,
            syllables: stack,
        })
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            alphabet: self.alphabet,
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.gen, -s.exp))
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut stack = Vec::new();
        for _ in 0..n.unsigned_abs() {
            for s in &base.syllables {
                push_syllable(&mut stack, *s);
            }
        }
        FreeWord {
            alphabet: self.alphabet,
            syllables: stack,
        }
    }

    /// Rewrites the word in the other alphabet of the same rank, using
    /// `g_i = x_1 ... x_i`, `x_1 = g_1` and `x_i = g_{i-1}^-1 g_i`.
    pub fn convert_alphabet(&self, target: AlphabetKind) -> FreeWord {
        if target == self.alphabet.kind {
            return self.clone();
        }
        let images: Vec<Vec<Syllable>> = (1..=self.alphabet.rank)
            .map(|i| match target {
                AlphabetKind::X => (1..=i).map(|j| Syllable::new(j, 1)).collect(),
                AlphabetKind::G if i == 1 => vec![Syllable::new(1, 1)],
                AlphabetKind::G => vec![Syllable::new(i - 1, -1), Syllable::new(i, 1)],
            })
            .collect();
        let alphabet = Alphabet {
            rank: self.alphabet.rank,
            kind: target,
        };
        FreeWord::from_reduced(alphabet, substitute(&self.syllables, &images))
    }
}

/// Applies the endomorphism `gen_i -> images[i-1]` to a syllable list.
pub(crate) fn substitute(word: &[Syllable], images: &[Vec<Syllable>]) -> Vec<Syllable> {
    let mut stack = Vec::new();
    for s in word {
        let img = &images[s.gen - 1];
        if s.exp > 0 {
            for _ in 0..s.exp {
                for t in img {
                    push_syllable(&mut stack, *t);
                }
            }
        } else {
            for _ in 0..(-s.exp) {
                for t in img.iter().rev() {
                    push_syllable(&mut stack, Syllable::new(t.gen, -t.exp));
                }
            }
        }
    }
    stack
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "e");
        }
        let l = self.alphabet.kind.letter();
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| {
                if s.exp == 1 {
                    format!("{l}{}", s.gen)
                } else {
                    format!("{l}{}^{}", s.gen, s.exp)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Scans `<letter><index>[^<signed int>]` tokens separated by optional
/// whitespace; `e` alone (or empty input) is the identity. Shared by the
/// word and braid syntaxes.
pub(crate) fn scan_syllables(
    input: &str,
    letters: &[char],
) -> std::result::Result<Vec<(usize, char, usize, i64)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    let read_int = |i: &mut usize| -> Option<i64> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    skip_ws(&mut i);
    if i < chars.len() && chars[i] == 'e' {
        let mut j = i + 1;
        skip_ws(&mut j);
        if j == chars.len() {
            return Ok(out);
        }
    }
    while i < chars.len() {
        let start = i;
        let letter = chars[i];
        if !letters.contains(&letter) {
            let expected: Vec<String> = letters.iter().map(|c| format!("`{c}`")).collect();
            return Err(ParseError::new(
                i,
                format!("expected generator {}", expected.join(" or ")),
            ));
        }
        i += 1;
        let idx = read_int(&mut i).ok_or_else(|| ParseError::new(i, "expected generator index"))?;
        let mut exp = 1i64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let neg = if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                i += 1;
                chars[i - 1] == '-'
            } else {
                false
            };
            let e =
                read_int(&mut i).ok_or_else(|| ParseError::new(i, "expected integer exponent"))?;
            exp = if neg { -e } else { e };
        }
        if i < chars.len() && !chars[i].is_whitespace() && !letters.contains(&chars[i]) {
            return Err(ParseError::new(
                i,
                format!("unexpected character `{}`", chars[i]),
            ));
        }
        out.push((start, letter, idx as usize, exp));
        skip_ws(&mut i);
    }
    Ok(out)
}

/// Parses word syntax such as `x1 x2^-1 x1^3`, `g1^-1 g2` or `e`.
pub fn parse_word(input: &str, alphabet: Alphabet) -> Result<FreeWord> {
    let letter = alphabet.kind.letter();
    let raw = scan_syllables(input, &[letter])?;
    let mut syl = Vec::with_capacity(raw.len());
    for (pos, _, idx, exp) in raw {
        if idx == 0 || idx > alphabet.rank {
            return Err(ParseError::new(
                pos,
                format!(
                    "generator {letter}{idx} out of range for rank {}",
                    alphabet.rank
                ),
            )
            .into());
        }
        syl.push(Syllable::new(idx, exp));
    }
    FreeWord::reduce(&syl, alphabet)
}

/// Element of `Z[F_n]`: finite integer combination of reduced words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    alphabet: Alphabet,
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero(alphabet: Alphabet) -> Self {
        GroupRingElement {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::from_word(&FreeWord::identity(alphabet))
    }

    pub fn from_word(w: &FreeWord) -> Self {
        Self::from_scaled_word(w, BigInt::one())
    }

    pub fn from_scaled_word(w: &FreeWord, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w.clone(), c);
        }
        GroupRingElement {
            alphabet: w.alphabet,
            terms,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, w: FreeWord, c: BigInt) {
        debug_assert_eq!(w.alphabet, self.alphabet);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.alphabet.check(&other.alphabet)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.alphabet);
        }
        GroupRingElement {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.alphabet.check(&other.alphabet)?;
        let mut out = Self::zero(self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.multiply(v)?, a * b);
            }
        }
        Ok(out)
    }

    /// Sum of coefficients (the augmentation `Z[F_n] -> Z`).
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = match (abs.is_one(), w.is_identity()) {
                (true, true) => "1".to_string(),
                (true, false) => format!("{w}"),
                (false, true) => abs.to_string(),
                (false, false) => format!("{abs}*({w})"),
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}
