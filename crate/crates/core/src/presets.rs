//! Worked examples shipped with the library, each with its pinned expected
//! values so a run can check itself.

use crate::alexander::{verify_closure_formula_with, ClosureFormulaReport, InvariantValue};
use crate::braid::{BraidWord, Coloring};
use crate::error::{Error, Result};
use crate::longmoody::LongMoody;
use crate::matrix::RingMatrix;
use crate::rep::Representation;
use crate::rings::{parse_element, Ring, RingDescriptor, RingElement};

const TREFOIL_BURAU: &str = include_str!("../presets/trefoil_burau.json");
const FIG8_F7: &str = include_str!("../presets/fig8_f7.json");
const FIG8_CYCLOTOMIC12: &str = include_str!("../presets/fig8_cyclotomic12.json");

pub const PRESET_NAMES: [&str; 4] = ["trefoil_burau", "fig8_f7", "fig8_cyclotomic12", "torus2q"];

/// Values a preset must reproduce. Literals are read over the ring of the
/// construction, `R[t^±1]`.
#[derive(Debug, Clone)]
pub struct Expected {
    pub numerator: String,
    pub denominator: String,
    /// Numerator and denominator must match exactly rather than up to a unit.
    pub exact: bool,
    /// Expected simplified invariant, compared up to a unit.
    pub delta: Option<String>,
    /// The quotient must be a Laurent polynomial.
    pub divisible: bool,
    /// Expected reduced Long-Moody matrix of the braid.
    pub reduced: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub rep: Representation,
    pub braid: BraidWord,
    pub coloring: Coloring,
    pub expected: Expected,
}

fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

/// Representation of one of the named presets; `torus2q` needs `(q, r)`.
pub fn preset_representation(name: &str, qr: Option<(u32, u32)>) -> Result<Representation> {
    match name {
        "trefoil_burau" => Representation::from_json(TREFOIL_BURAU),
        "fig8_f7" => Representation::from_json(FIG8_F7),
        "fig8_cyclotomic12" => Representation::from_json(FIG8_CYCLOTOMIC12),
        "torus2q" => {
            let (q, r) = qr.ok_or_else(|| Error::Invalid("torus2q needs --q and --r".into()))?;
            torus2q_representation(q, r)
        }
        other => Err(Error::Invalid(format!(
            "unknown preset `{other}`; expected one of {}",
            PRESET_NAMES.join(", ")
        ))),
    }
}

pub fn preset(name: &str, qr: Option<(u32, u32)>) -> Result<Preset> {
    let rep = preset_representation(name, qr)?;
    let fig8 = |rep: Representation, expected: Expected| -> Result<Preset> {
        Ok(Preset {
            name: name.to_string(),
            rep,
            braid: BraidWord::parse("s1 s2^-1 s1 s2^-1", 3)?,
            coloring: Coloring::monochrome(3)?,
            expected,
        })
    };
    match name {
        "trefoil_burau" => Ok(Preset {
            name: name.to_string(),
            rep,
            braid: BraidWord::parse("s1^3", 2)?,
            coloring: Coloring::monochrome(2)?,
            expected: Expected {
                numerator: "1 - s^3*t^6".into(),
                denominator: "1 + s*t^2 + s^2*t^4".into(),
                exact: true,
                delta: Some("1 - s*t^2".into()),
                divisible: true,
                reduced: Some(strings(&[
                    &["s*t^3", "-s*t^3 + s^2*t^3"],
                    &["s*t^3", "-s*t^3"],
                ])),
            },
        }),
        "fig8_f7" => fig8(
            rep,
            Expected {
                numerator: "(t+1)^4*(t+2)^2*(t+4)^2".into(),
                denominator: "(t+1)^2*(t+2)^2*(t+4)^2".into(),
                exact: false,
                delta: Some("(t+1)^2".into()),
                divisible: true,
                reduced: None,
            },
        ),
        "fig8_cyclotomic12" => fig8(
            rep,
            Expected {
                numerator: "(1+t)^4*(1-t+t^2)^2".into(),
                denominator: "(1+t)^2*(1-t+t^2)^2".into(),
                exact: false,
                delta: Some("(t+1)^2".into()),
                divisible: true,
                reduced: None,
            },
        ),
        "torus2q" => {
            let (q, r) = qr.expect("checked by preset_representation");
            Ok(Preset {
                name: format!("torus2q(q={q}, r={r})"),
                rep,
                braid: BraidWord::new(2, &[(1, q as i64)])?,
                coloring: Coloring::monochrome(2)?,
                expected: Expected {
                    numerator: format!("1 + t^{}", 2 * q),
                    denominator: format!("(1 - zeta^{e}*t^2)*(1 - zeta^(-{e})*t^2)", e = 2 * r),
                    exact: false,
                    delta: None,
                    divisible: true,
                    reduced: None,
                },
            })
        }
        _ => unreachable!("name validated by preset_representation"),
    }
}

/// Checks `q` odd and at least 3, and `r` odd with `0 < r < q`.
pub fn check_torus_parameters(q: u32, r: u32) -> Result<()> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::Invalid(format!(
            "q must be odd and at least 3, got {q}"
        )));
    }
    if r == 0 || r >= q || r.is_multiple_of(2) {
        return Err(Error::Invalid(format!(
            "r must be odd with 0 < r < q, got r = {r} for q = {q}"
        )));
    }
    Ok(())
}

/// Valid `r` for a given `q`.
pub fn torus_r_values(q: u32) -> Vec<u32> {
    (1..q).step_by(2).collect()
}

/// Representation of `B_2 ⋉ F_2` for the `(2, q)` torus knot over
/// `Q(ζ_{4q})[s^±1]`, with `ξ_r = ζ^{2r}`, `ξ_r^{1/2} = ζ^r` and
/// `√-1 = ζ^q`. Generated from `ρ(x) = [[s, 1], [-1-s^2, -s]]`,
/// `ρ(y) = Diag(ξ_r, ξ_r^-1)` with `g_1 = x^-1 y^{m+1}` and `g_2 = y`.
pub fn torus2q_representation(q: u32, r: u32) -> Result<Representation> {
    check_torus_parameters(q, r)?;
    let field = RingDescriptor::cyclotomic(4 * q)?;
    let ring = RingDescriptor::laurent(&field, &["s"])?;
    let lit = |rows: &[&[&str]]| RingMatrix::from_literals(&ring, &strings(rows));
    let (q, r) = (q as i64, r as i64);
    let m = (q - 1) / 2;
    let x = lit(&[&["s", "1"], &["-1 - s^2", "-s"]])?;
    let y = RingMatrix::from_rows(
        &ring,
        vec![
            vec![
                RingElement::zeta_pow(&ring, 2 * r)?,
                RingElement::zero(&ring),
            ],
            vec![
                RingElement::zero(&ring),
                RingElement::zeta_pow(&ring, -2 * r)?,
            ],
        ],
    )?;
    let mut g1 = RingMatrix::identity(&ring, 2);
    for _ in 0..=m {
        g1 = g1.mul(&y)?;
    }
    let g1 = g1.mul(&x.inverse()?)?;
    let x1 = g1.clone();
    let x2 = g1.inverse()?.mul(&y)?;
    let sigma = RingMatrix::from_rows(
        &ring,
        vec![
            vec![
                RingElement::zeta_pow(&ring, q - r)?,
                RingElement::zero(&ring),
            ],
            vec![
                RingElement::zero(&ring),
                -RingElement::zeta_pow(&ring, q + r)?,
            ],
        ],
    )?;
    Representation::new(
        2,
        2,
        &ring,
        vec![sigma],
        vec![x1, x2],
        Some(format!("torus2q_q{q}_r{r}")),
    )
}

/// Outcome of one named check within a preset run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct PresetRun {
    pub name: String,
    pub reduced: RingMatrix,
    pub report: ClosureFormulaReport,
    pub checks: Vec<CheckResult>,
}

impl PresetRun {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn normal(p: &RingElement) -> String {
    p.unit_normal_form()
        .map_or_else(|_| p.to_string(), |n| n.to_string())
}

fn compare(name: &str, got: &RingElement, want: &RingElement, exact: bool) -> CheckResult {
    let passed = if exact {
        got == want
    } else {
        got.equal_up_to_unit(want)
    };
    let detail = if passed {
        got.to_string()
    } else if exact {
        format!("expected {want}, got {got}")
    } else {
        format!("expected ≐ {}, got ≐ {}", normal(want), normal(got))
    };
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn check(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

impl Preset {
    /// Runs the full pipeline and compares every pinned value.
    pub fn run(&self) -> Result<PresetRun> {
        let mut checks = Vec::new();
        let violations = self.rep.validate_semidirect();
        checks.push(check(
            "representation",
            violations.is_empty(),
            if violations.is_empty() {
                "valid".into()
            } else {
                violations.join("; ")
            },
        ));
        self.rep.require_valid()?;
        let lm = LongMoody::new(&self.rep, &self.coloring)?;
        let ring: &Ring = lm.ring();
        let p = |s: &str| parse_element(s, ring).map_err(Error::from);
        let reduced = lm.reduced(&self.braid)?;
        if let Some(rows) = &self.expected.reduced {
            let want = RingMatrix::from_literals(ring, rows)?;
            let passed = want == reduced;
            let detail = if passed {
                "matches".to_string()
            } else {
                format!(
                    "expected {:?}, got {:?}",
                    want.to_literals(),
                    reduced.to_literals()
                )
            };
            checks.push(check("reduced matrix", passed, detail));
        }
        let report = verify_closure_formula_with(&lm, &self.braid)?;
        let rhs = &report.rhs;
        let e = &self.expected;
        checks.push(compare(
            "numerator",
            &rhs.numerator,
            &p(&e.numerator)?,
            e.exact,
        ));
        checks.push(compare(
            "denominator",
            &rhs.denominator,
            &p(&e.denominator)?,
            e.exact,
        ));
        let expected_value = InvariantValue::new(p(&e.numerator)?, p(&e.denominator)?);
        if e.divisible {
            checks.push(check(
                "laurent polynomial",
                rhs.simplified.is_some(),
                match &rhs.simplified {
                    Some(d) => d.to_string(),
                    None => "numerator is not divisible by denominator".into(),
                },
            ));
        }
        match (&e.delta, &rhs.simplified) {
            (Some(delta), Some(got)) => checks.push(compare("delta", got, &p(delta)?, false)),
            (Some(_), None) => checks.push(check(
                "delta",
                false,
                "quotient is not a Laurent polynomial".into(),
            )),
            (None, _) => {
                let passed = rhs.equal_up_to_unit(&expected_value);
                checks.push(check(
                    "delta",
                    passed,
                    if passed {
                        "matches the pinned quotient".into()
                    } else {
                        format!("got {rhs}")
                    },
                ));
            }
        }
        checks.push(check(
            "closure invariant agrees",
            report.equal,
            format!("removed g{}: {}", report.removed_generator, report.lhs),
        ));
        Ok(PresetRun {
            name: self.name.clone(),
            reduced,
            report,
            checks,
        })
    }
}
