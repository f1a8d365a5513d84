//! Fox free differential calculus on `Z[F_n]`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::freegroup::{push_syllable, FreeWord, GroupRingElement, Syllable};

/// Calls `emit(prefix, sign)` once per term of `∂w/∂y_j`, with `prefix` the
/// reduced group element carried by that term. Uses the closed forms
/// `∂(y^m)/∂y = 1 + y + ... + y^(m-1)` and
/// `∂(y^-m)/∂y = -(y^-1 + ... + y^-m)`.
pub(crate) fn for_each_fox_term(word: &FreeWord, j: usize, mut emit: impl FnMut(&[Syllable], i64)) {
    let mut prefix: Vec<Syllable> = Vec::new();
    for s in word.syllables() {
        if s.gen == j {
            if s.exp > 0 {
                for k in 0..s.exp {
                    let mut p = prefix.clone();
                    push_syllable(&mut p, Syllable::new(j, k));
                    emit(&p, 1);
                }
            } else {
                for k in 1..=(-s.exp) {
                    let mut p = prefix.clone();
                    push_syllable(&mut p, Syllable::new(j, -k));
                    emit(&p, -1);
                }
            }
        }
        push_syllable(&mut prefix, *s);
    }
}

fn check_index(w: &FreeWord, j: usize) -> Result<()> {
    let rank = w.alphabet().rank();
    if j == 0 || j > rank {
        return Err(Error::GeneratorOutOfRange { index: j, rank });
    }
    Ok(())
}

/// `∂w/∂y_j` for the generator `y_j` (1-based) of `w`'s alphabet.
pub fn fox_derivative(w: &FreeWord, j: usize) -> Result<GroupRingElement> {
    check_index(w, j)?;
    let alphabet = w.alphabet();
    let mut out = GroupRingElement::zero(alphabet);
    for_each_fox_term(w, j, |p, sign| {
        out.add_term(
            FreeWord::from_reduced(alphabet, p.to_vec()),
            BigInt::from(sign),
        );
    });
    Ok(out)
}

/// Linear extension of [`fox_derivative`] to the group ring.
pub fn fox_derivative_linear(e: &GroupRingElement, j: usize) -> Result<GroupRingElement> {
    let mut out = GroupRingElement::zero(e.alphabet());
    for (w, c) in e.terms() {
        out = out.add(&fox_derivative(w, j)?.scale(c))?;
    }
    Ok(out)
}

/// Checks `w - 1 = Σ_j (∂w/∂y_j)(y_j - 1)` in `Z[F_n]`.
pub fn check_fundamental_formula(w: &FreeWord) -> Result<bool> {
    let alphabet = w.alphabet();
    let one = GroupRingElement::one(alphabet);
    let mut rhs = GroupRingElement::zero(alphabet);
    for j in 1..=alphabet.rank() {
        let y = GroupRingElement::from_word(&FreeWord::generator(alphabet, j)?);
        rhs = rhs.add(&fox_derivative(w, j)?.mul(&y.sub(&one)?)?)?;
    }
    let lhs = GroupRingElement::from_word(w).add(&one.scale(&-BigInt::one()))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::{parse_word, Alphabet};

    fn d(w: &str, n: usize, j: usize) -> String {
        fox_derivative(&parse_word(w, Alphabet::x(n)).unwrap(), j)
            .unwrap()
            .to_string()
    }

    #[test]
    fn hand_computed_derivatives() {
        assert_eq!(d("x1", 2, 1), "1");
        assert_eq!(d("x1", 2, 2), "0");
        assert_eq!(d("x1^-1", 2, 1), "-x1^-1");
        assert_eq!(d("x1^3", 2, 1), "1 + x1 + x1^2");
        // x1 x2 x1^-1: 1 - x1 x2 x1^-1
        assert_eq!(d("x1 x2 x1^-1", 2, 1), "1 - x1 x2 x1^-1");
        assert_eq!(d("x1 x2 x1^-1", 2, 2), "x1");
        assert_eq!(d("e", 2, 1), "0");
    }

    #[test]
    fn index_out_of_range() {
        let w = parse_word("x1", Alphabet::x(2)).unwrap();
        assert!(fox_derivative(&w, 0).is_err());
        assert!(fox_derivative(&w, 3).is_err());
    }

    #[test]
    fn leibniz_rule_on_examples() {
        let a = Alphabet::x(3);
        let u = parse_word("x1^2 x3^-1 x2", a).unwrap();
        let v = parse_word("x2^-2 x1 x3^3", a).unwrap();
        for j in 1..=3 {
            let lhs = fox_derivative(&u.multiply(&v).unwrap(), j).unwrap();
            let rhs = fox_derivative(&u, j)
                .unwrap()
                .add(
                    &GroupRingElement::from_word(&u)
                        .mul(&fox_derivative(&v, j).unwrap())
                        .unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn fundamental_formula_on_examples() {
        for w in ["e", "x1", "x2^-3 x1^2 x2", "x1 x2 x1^-1 x2^-1"] {
            assert!(check_fundamental_formula(&parse_word(w, Alphabet::x(2)).unwrap()).unwrap());
        }
    }
}
