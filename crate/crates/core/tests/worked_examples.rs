use foxbraid::alexander::closure_invariant;
use foxbraid::presets::{preset, torus_r_values};
use foxbraid::{
    lm_reduced, lm_unreduced, parse_element, verify_closure_formula, BraidWord, Coloring,
    LongMoody, Representation, RingMatrix,
};

fn braid(s: &str, n: usize) -> BraidWord {
    BraidWord::parse(s, n).unwrap()
}

fn assert_preset_passes(name: &str, qr: Option<(u32, u32)>) {
    let p = preset(name, qr).unwrap();
    let run = p.run().unwrap();
    for c in &run.checks {
        assert!(c.passed, "{}: {} failed: {}", run.name, c.name, c.detail);
    }
}

#[test]
fn trefoil_burau_preset() {
    assert_preset_passes("trefoil_burau", None);
    let p = preset("trefoil_burau", None).unwrap();
    let run = p.run().unwrap();
    let ring = run.reduced.ring().clone();
    let e = |s: &str| parse_element(s, &ring).unwrap();
    assert_eq!(run.report.rhs.numerator, e("1 - s^3*t^6"));
    assert_eq!(run.report.rhs.denominator, e("1 + s*t^2 + s^2*t^4"));
    assert_eq!(run.report.rhs.simplified, Some(e("1 - s*t^2")));
}

#[test]
fn figure_eight_presets() {
    assert_preset_passes("fig8_f7", None);
    assert_preset_passes("fig8_cyclotomic12", None);
}

#[test]
fn figure_eight_over_f7_and_cyclotomic_agree() {
    let a = preset("fig8_f7", None).unwrap().run().unwrap();
    let b = preset("fig8_cyclotomic12", None).unwrap().run().unwrap();
    let da = a.report.rhs.simplified.unwrap();
    let db = b.report.rhs.simplified.unwrap();
    // both are (t+1)^2 up to a unit, each in its own coefficient field
    assert_eq!(da.unit_normal_form().unwrap().to_string(), "1 + 2*t + t^2");
    assert_eq!(db.unit_normal_form().unwrap().to_string(), "1 + 2*t + t^2");
}

#[test]
fn figure_eight_f7_reduced_matrix_two_routes() {
    // group-ring Fox derivatives evaluated term by term against the fused evaluator
    use foxbraid::freegroup::{Alphabet, AlphabetKind, FreeWord};
    use foxbraid::{act, evaluate_phi, fox_derivative, ColoredAugmentation};
    let p = preset("fig8_f7", None).unwrap();
    let lm = LongMoody::new(&p.rep, &p.coloring).unwrap();
    let fused = lm.reduced(&p.braid).unwrap();
    let ab = ColoredAugmentation::new(&p.coloring).abelianization(AlphabetKind::G);
    let rho_b = lm.rho_braid(&p.braid).unwrap();
    let mut grid = Vec::new();
    for i in 1..=2 {
        let gi = FreeWord::generator(Alphabet::g(3), i).unwrap();
        let image = act(&gi, &p.braid).unwrap();
        let row: Vec<RingMatrix> = (1..=2)
            .map(|j| {
                let d = fox_derivative(&image, j).unwrap();
                rho_b.mul(&evaluate_phi(&p.rep, &ab, &d).unwrap()).unwrap()
            })
            .collect();
        grid.push(row);
    }
    assert_eq!(RingMatrix::from_blocks(lm.ring(), &grid).unwrap(), fused);
}

#[test]
fn torus_knots_all_parameters() {
    for q in [3u32, 5, 7] {
        for r in torus_r_values(q) {
            assert_preset_passes("torus2q", Some((q, r)));
        }
    }
}

#[test]
fn trivial_rep_identity_braid_and_gassner() {
    let rep = Representation::trivial(3).unwrap();
    let c = Coloring::parse("1,2,3").unwrap();
    assert!(lm_unreduced(&rep, &c, &braid("e", 3))
        .unwrap()
        .is_identity());
    assert!(lm_reduced(&rep, &c, &braid("e", 3)).unwrap().is_identity());
}

#[test]
fn hopf_link_value_is_one() {
    let rep = Representation::trivial(2).unwrap();
    let c = Coloring::parse("1,2").unwrap();
    let report = verify_closure_formula(&rep, &c, &braid("s1^2", 2)).unwrap();
    assert!(report.equal);
    let lm = LongMoody::new(&rep, &c).unwrap();
    let (v, removed) = closure_invariant(&lm, &braid("s1^2", 2)).unwrap();
    assert_eq!(removed, 2);
    assert!(v.simplified.unwrap().is_unit());
}
