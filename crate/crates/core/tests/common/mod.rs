#![allow(dead_code)]

use foxbraid::freegroup::{Alphabet, FreeWord, Syllable};
use foxbraid::{is_colored, BraidWord, Coloring};
use rand::Rng;

pub fn random_word<R: Rng>(rng: &mut R, alphabet: Alphabet, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let raw: Vec<Syllable> = (0..len)
        .map(|_| {
            let e = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            Syllable::new(rng.gen_range(1..=alphabet.rank()), e)
        })
        .collect();
    FreeWord::reduce(&raw, alphabet).unwrap()
}

pub fn random_braid<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n).unwrap();
    }
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i64)> = (0..len)
        .map(|_| (rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    BraidWord::new(n, &letters).unwrap()
}

/// Rejection-samples a braid preserving the coloring.
pub fn random_colored_braid<R: Rng>(rng: &mut R, c: &Coloring, max_len: usize) -> BraidWord {
    loop {
        let b = random_braid(rng, c.strands(), max_len);
        if is_colored(&b, c).unwrap() {
            return b;
        }
    }
}

/// A random surjective coloring of `n` strands.
pub fn random_coloring<R: Rng>(rng: &mut R, n: usize) -> Coloring {
    loop {
        let mu = rng.gen_range(1..=n);
        let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=mu)).collect();
        if let Ok(c) = Coloring::new(colors) {
            return c;
        }
    }
}
