mod common;

use foxbraid::freegroup::{Alphabet, AlphabetKind, GroupRingElement};
use foxbraid::presets::preset_representation;
use foxbraid::{evaluate_phi, BraidWord, ColoredAugmentation, Coloring, LongMoody, Representation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_colored_braid, random_coloring, random_word};

fn check_homomorphism(lm: &LongMoody, a: &BraidWord, b: &BraidWord) {
    let ab = a.concat(b).unwrap();
    let lhs = lm.unreduced(&ab).unwrap();
    assert_eq!(
        lhs,
        lm.unreduced(a)
            .unwrap()
            .mul(&lm.unreduced(b).unwrap())
            .unwrap(),
        "{a} * {b}"
    );
    let lhs = lm.reduced(&ab).unwrap();
    assert_eq!(
        lhs,
        lm.reduced(a).unwrap().mul(&lm.reduced(b).unwrap()).unwrap(),
        "{a} * {b}"
    );
}

#[test]
fn homomorphism_for_trivial_rep() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for case in 0..60 {
        let n = 2 + case % 3;
        let c = random_coloring(&mut rng, n);
        let lm = LongMoody::new(&Representation::trivial(n).unwrap(), &c).unwrap();
        let a = random_colored_braid(&mut rng, &c, 8);
        let b = random_colored_braid(&mut rng, &c, 8);
        check_homomorphism(&lm, &a, &b);
        let id = lm.unreduced(&a.concat(&a.inverse()).unwrap()).unwrap();
        assert!(id.is_identity());
        assert!(lm
            .unreduced(&a)
            .unwrap()
            .mul(&lm.unreduced(&a.inverse()).unwrap())
            .unwrap()
            .is_identity());
    }
}

#[test]
fn homomorphism_for_worked_example_reps() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for name in ["trefoil_burau", "fig8_f7"] {
        let rep = preset_representation(name, None).unwrap();
        let c = Coloring::monochrome(rep.strands()).unwrap();
        let lm = LongMoody::new(&rep, &c).unwrap();
        for _ in 0..15 {
            let a = random_colored_braid(&mut rng, &c, 5);
            let b = random_colored_braid(&mut rng, &c, 5);
            check_homomorphism(&lm, &a, &b);
        }
    }
}

#[test]
fn factorization_and_variables() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let rep = preset_representation("trefoil_burau", None).unwrap();
    let c = Coloring::monochrome(2).unwrap();
    let lm = LongMoody::new(&rep, &c).unwrap();
    assert_eq!(lm.ring().vars(), &["s", "t"]);
    for _ in 0..10 {
        let b = random_colored_braid(&mut rng, &c, 6);
        let lhs = lm.unreduced(&b).unwrap();
        let rhs = lm
            .rho_block_diag(&b, 2)
            .unwrap()
            .mul(&lm.twisted_burau(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn burau_matrices_satisfy_braid_relations() {
    for n in 2..=4 {
        let rep = Representation::trivial(n).unwrap();
        let lm = LongMoody::new(&rep, &Coloring::monochrome(n).unwrap()).unwrap();
        let s = |i: usize| BraidWord::new(n, &[(i, 1)]).unwrap();
        for reduced in [false, true] {
            let m = |b: &BraidWord| {
                if reduced {
                    lm.reduced(b).unwrap()
                } else {
                    lm.unreduced(b).unwrap()
                }
            };
            for i in 1..n {
                for j in i + 1..n {
                    let (a, b) = (m(&s(i)), m(&s(j)));
                    if j == i + 1 {
                        let l = a.mul(&b).unwrap().mul(&a).unwrap();
                        let r = b.mul(&a).unwrap().mul(&b).unwrap();
                        assert_eq!(l, r);
                    } else {
                        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn phi_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let rep = preset_representation("fig8_cyclotomic12", None).unwrap();
    let c = Coloring::monochrome(3).unwrap();
    for kind in [AlphabetKind::X, AlphabetKind::G] {
        let ab = ColoredAugmentation::new(&c).abelianization(kind);
        let a = Alphabet::new(3, kind).unwrap();
        for _ in 0..10 {
            let (u, v) = (random_word(&mut rng, a, 5), random_word(&mut rng, a, 5));
            let phi = |w| evaluate_phi(&rep, &ab, &GroupRingElement::from_word(w)).unwrap();
            assert_eq!(
                phi(&u.multiply(&v).unwrap()),
                phi(&u).mul(&phi(&v)).unwrap()
            );
        }
    }
}
