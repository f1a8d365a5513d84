use foxbraid::rings::{parse_element, Ring, RingDescriptor, RingElement};
use proptest::prelude::*;

fn rings() -> Vec<Ring> {
    let z = RingDescriptor::integers();
    vec![
        z.clone(),
        RingDescriptor::rationals(),
        RingDescriptor::prime_field(7).unwrap(),
        RingDescriptor::cyclotomic(12).unwrap(),
        RingDescriptor::laurent(&z, &["t"]).unwrap(),
        RingDescriptor::laurent(&z, &["s", "t"]).unwrap(),
        RingDescriptor::laurent(&RingDescriptor::prime_field(7).unwrap(), &["t"]).unwrap(),
        RingDescriptor::laurent(&RingDescriptor::cyclotomic(12).unwrap(), &["t"]).unwrap(),
        RingDescriptor::laurent(&RingDescriptor::rationals(), &["t1", "t2"]).unwrap(),
    ]
}

type Terms = Vec<(i64, i64, Vec<i32>)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec(
        (-4i64..=4, 0i64..12, prop::collection::vec(-2i32..=2, 2)),
        0..5,
    )
}

/// Sum of `c * zeta^z * monomial`; outside cyclotomic bases `zeta` is
/// dropped, and field coefficients are halved on odd `z`.
fn build(ring: &Ring, t: &Terms) -> RingElement {
    let mut acc = RingElement::zero(ring);
    for (c, z, exps) in t {
        let mut coeff = RingElement::from_int(ring, *c);
        if let Ok(root) = RingElement::zeta_pow(ring, *z) {
            coeff = &coeff * &root;
        } else if ring.base().is_field() && z % 2 == 1 {
            coeff = coeff
                .exact_divide(&RingElement::from_int(ring, 2))
                .unwrap()
                .unwrap();
        }
        let exps: Vec<i32> = exps.iter().take(ring.nvars()).copied().collect();
        acc = &acc + &(&coeff * &RingElement::unit_monomial(ring, exps));
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutative_ring_axioms(a in terms(), b in terms(), c in terms()) {
        for ring in rings() {
            let (a, b, c) = (build(&ring, &a), build(&ring, &b), build(&ring, &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
        }
    }

    #[test]
    fn exact_division_recovers_factor(a in terms(), b in terms()) {
        for ring in rings() {
            let (a, b) = (build(&ring, &a), build(&ring, &b));
            if b.is_zero() {
                continue;
            }
            prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), Some(a.clone()));
        }
    }

    #[test]
    fn unit_equality_is_an_equivalence(a in terms(), b in terms(), shift in prop::collection::vec(-3i32..=3, 2)) {
        for ring in rings() {
            let (a, b) = (build(&ring, &a), build(&ring, &b));
            prop_assert!(a.equal_up_to_unit(&a));
            prop_assert_eq!(a.equal_up_to_unit(&b), b.equal_up_to_unit(&a));
            let exps: Vec<i32> = shift.iter().take(ring.nvars()).copied().collect();
            let unit = -RingElement::unit_monomial(&ring, exps);
            prop_assert!(a.equal_up_to_unit(&(&a * &unit)));
            if !a.is_zero() {
                prop_assert_eq!(a.unit_normal_form().unwrap(), (&a * &unit).unit_normal_form().unwrap());
            }
        }
    }

    #[test]
    fn printing_round_trips(a in terms()) {
        for ring in rings() {
            let a = build(&ring, &a);
            prop_assert_eq!(parse_element(&a.to_string(), &ring).unwrap(), a);
        }
    }
}

#[test]
fn worked_ring_identities() {
    let f7 = RingDescriptor::prime_field(7).unwrap();
    assert_eq!(
        parse_element("4*5", &f7).unwrap(),
        parse_element("6", &f7).unwrap()
    );
    let zst = RingDescriptor::laurent(&RingDescriptor::integers(), &["s", "t"]).unwrap();
    let p = |s: &str| parse_element(s, &zst).unwrap();
    assert_eq!(
        &p("1 - s*t^2") * &p("1 + s*t^2 + s^2*t^4"),
        p("1 - s^3*t^6")
    );
    assert_eq!(
        p("1 - s^3*t^6")
            .exact_divide(&p("1 + s*t^2 + s^2*t^4"))
            .unwrap(),
        Some(p("1 - s*t^2"))
    );
    assert!(p("1 - s*t^2").equal_up_to_unit(&p("-s*t^2 + 1")));
    assert!(p("1 - s*t^2").equal_up_to_unit(&p("t^4*(1 - s*t^2)")));
    assert!(!p("1 - s*t^2").equal_up_to_unit(&p("1 + s*t^2")));
    assert!(p("-s*t^3 + s^2*t^3").equal_up_to_unit(&p("1 - s")));
    let c12 = RingDescriptor::cyclotomic(12).unwrap();
    assert!(parse_element("zeta^8 + zeta^4 + 1", &c12)
        .unwrap()
        .is_zero());
    let f7t = RingDescriptor::laurent(&f7, &["t"]).unwrap();
    let q = |s: &str| parse_element(s, &f7t).unwrap();
    assert!(q("(t+1)^4*(t+2)^2*(t+4)^2*t^-4").equal_up_to_unit(&q("(t+1)^4*(t+2)^2*(t+4)^2")));
    assert!(q("6 + 6*t^3").equal_up_to_unit(&q("1 + t^3")));
    assert_eq!(q("(t+1)*(t+2)*(t+4)"), q("t^3 + 1"));
    let zt = RingDescriptor::laurent(&RingDescriptor::integers(), &["t"]).unwrap();
    let r = |s: &str| parse_element(s, &zt).unwrap();
    assert_eq!(
        r("t + 1").exact_divide(&r("t^2")).unwrap(),
        Some(r("t^-2*(t + 1)"))
    );
}
