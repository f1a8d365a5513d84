use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use foxbraid::alexander::{closure_formula_rhs_with, closure_invariant, PresentationData};
use foxbraid::presets::{self, PresetRun, PRESET_NAMES};
use foxbraid::rings::RingElement;
use foxbraid::{BraidWord, Coloring, Error, InvariantValue, LongMoody, Representation, RingMatrix};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "foxbraid",
    version,
    about = "Long-Moody representations and twisted Alexander invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Long-Moody matrix of a colored braid.
    Lm {
        #[command(flatten)]
        input: BraidInput,
        /// Print the reduced construction instead of the unreduced one.
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Twisted Alexander invariant of a braid closure or of a presentation file.
    Alexander {
        #[command(flatten)]
        input: BraidInput,
        /// Presentation JSON file, used instead of --braid.
        #[arg(long, conflicts_with_all = ["braid", "rep", "colors"])]
        presentation: Option<String>,
        #[arg(long, value_enum, default_value_t = Via::Both)]
        via: Via,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a shipped worked example against its pinned values.
    Preset {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(PRESET_NAMES))]
        name: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        /// Run every valid r for the given q (torus2q only).
        #[arg(long, conflicts_with = "r")]
        sweep: bool,
    },
}

#[derive(clap::Args)]
struct BraidInput {
    /// Braid word such as `s1^3` or `s1 s2^-1`; empty or `e` is the identity.
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Strand colors such as `1,1` or `1,2`; defaults to one color.
    #[arg(long)]
    colors: Option<String>,
    /// Preset name, `trivial`, or a representation JSON file.
    #[arg(long, default_value = "trivial")]
    rep: String,
    /// Strand count when neither --colors nor the representation fixes it.
    #[arg(long)]
    strands: Option<usize>,
    /// Torus preset parameters when --rep torus2q.
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Definition,
    Longmoody,
    Both,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::Ring(_) | Error::Invalid(_) | Error::StrandMismatch { .. } => {
                2
            }
            Error::GeneratorOutOfRange { .. } | Error::AlphabetMismatch { .. } => 2,
            Error::InvalidColoring(_) | Error::NotColored { .. } => 3,
            Error::InvalidRepresentation(_) | Error::Shape(_) | Error::NotInvertible(_) => 4,
            Error::InconsistentData(_) => 4,
            Error::Hypothesis(_) | Error::ZeroDenominator { .. } => 5,
            _ => 1,
        };
        let message = match e {
            Error::InvalidRepresentation(v) => {
                format!(
                    "invalid representation; violated relations:\n  {}",
                    v.join("\n  ")
                )
            }
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<(String, bool), Failure>;

struct Resolved {
    rep: Representation,
    coloring: Coloring,
    braid: BraidWord,
}

fn load_rep(input: &BraidInput, strands: Option<usize>) -> Result<Representation, Failure> {
    let qr = match (input.q, input.r) {
        (Some(q), Some(r)) => Some((q, r)),
        (None, None) => None,
        _ => return Err(usage("--q and --r must be given together")),
    };
    match input.rep.as_str() {
        "trivial" => {
            let n = strands
                .ok_or_else(|| usage("the trivial representation needs --colors or --strands"))?;
            Ok(Representation::trivial(n)?)
        }
        name if PRESET_NAMES.contains(&name) => Ok(presets::preset_representation(name, qr)?),
        path => {
            let text = std::fs::read_to_string(Path::new(path))
                .map_err(|e| usage(format!("cannot read representation `{path}`: {e}")))?;
            Ok(Representation::from_json(&text)?)
        }
    }
}

fn resolve(input: &BraidInput) -> Result<Resolved, Failure> {
    let coloring = input.colors.as_deref().map(Coloring::parse).transpose()?;
    let strands = coloring.as_ref().map(|c| c.strands()).or(input.strands);
    let rep = load_rep(input, strands)?;
    let n = rep.strands();
    let coloring = match coloring {
        Some(c) => c,
        None => Coloring::monochrome(n)?,
    };
    let braid = BraidWord::parse(input.braid.as_deref().unwrap_or(""), n)?;
    Ok(Resolved {
        rep,
        coloring,
        braid,
    })
}

fn matrix_json(m: &RingMatrix) -> Value {
    json!({ "ring": m.ring().to_spec(), "matrix": m.to_literals() })
}

fn cmd_lm(input: &BraidInput, reduced: bool, format: Format) -> Outcome {
    let r = resolve(input)?;
    let lm = LongMoody::new(&r.rep, &r.coloring)?;
    let m = if reduced {
        lm.reduced(&r.braid)?
    } else {
        lm.unreduced(&r.braid)?
    };
    let out = match format {
        Format::Text => format!("{m}\n"),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&matrix_json(&m)).expect("json")
        ),
    };
    Ok((out, true))
}

fn unit_normal(p: &RingElement) -> String {
    p.unit_normal_form()
        .map_or_else(|_| p.to_string(), |n| n.to_string())
}

fn invariant_json(v: &InvariantValue) -> Value {
    let (num, den) = v.normal_forms();
    json!({
        "numerator": v.numerator.to_string(),
        "denominator": v.denominator.to_string(),
        "simplified": v.simplified.as_ref().map(|s| s.to_string()),
        "simplified_unit_normal": v.simplified.as_ref().map(unit_normal),
        "normal_numerator": num.to_string(),
        "normal_denominator": den.to_string(),
    })
}

fn invariant_text(out: &mut String, title: &str, v: &InvariantValue) {
    let (num, den) = v.normal_forms();
    let _ = writeln!(out, "{title}:");
    let _ = writeln!(out, "  numerator: {}", v.numerator);
    let _ = writeln!(out, "  denominator: {}", v.denominator);
    match &v.simplified {
        Some(s) => {
            let _ = writeln!(out, "  simplified: {s}");
            let _ = writeln!(out, "  simplified unit-normal: {}", unit_normal(s));
        }
        None => {
            let _ = writeln!(out, "  simplified: none (not a Laurent polynomial)");
        }
    }
    let _ = writeln!(out, "  unit-normal: ({num}) / ({den})");
}

fn cmd_alexander(
    input: &BraidInput,
    presentation: Option<&str>,
    via: Via,
    format: Format,
) -> Outcome {
    let mut sections: Vec<(String, InvariantValue)> = Vec::new();
    let ring;
    if let Some(path) = presentation {
        if via == Via::Longmoody {
            return Err(usage("--via longmoody needs a braid, not a presentation"));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
        let data = PresentationData::from_json(&text)?;
        let am = data.alexander_matrix()?;
        ring = am.ring().clone();
        let usable = am.usable_generators()?;
        let j = *usable.last().ok_or(Error::ZeroDenominator {
            generator: data.presentation.generators(),
            alternatives: Vec::new(),
        })?;
        sections.push((
            format!("definition (removed generator {j})"),
            am.invariant(j)?,
        ));
    } else {
        let r = resolve(input)?;
        let lm = LongMoody::new(&r.rep, &r.coloring)?;
        ring = lm.ring().clone();
        if via != Via::Longmoody {
            let (v, j) = closure_invariant(&lm, &r.braid)?;
            sections.push((format!("definition (removed g{j})"), v));
        }
        if via != Via::Definition {
            sections.push((
                "longmoody".to_string(),
                closure_formula_rhs_with(&lm, &r.braid)?,
            ));
        }
    }
    let verdict = (sections.len() == 2).then(|| sections[0].1.equal_up_to_unit(&sections[1].1));
    let out = match format {
        Format::Text => {
            let mut out = format!(
                "ring: {}\n",
                serde_json::to_string(&ring.to_spec()).expect("json")
            );
            for (title, v) in &sections {
                invariant_text(&mut out, title, v);
            }
            if let Some(eq) = verdict {
                let _ = writeln!(out, "equal_up_to_unit: {eq}");
            }
            out
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("ring".into(), json!(ring.to_spec()));
            for (title, v) in &sections {
                let key = title.split_whitespace().next().unwrap_or(title);
                obj.insert(key.to_string(), invariant_json(v));
            }
            if let Some(eq) = verdict {
                obj.insert("equal_up_to_unit".into(), json!(eq));
            }
            format!(
                "{}\n",
                serde_json::to_string_pretty(&Value::Object(obj)).expect("json")
            )
        }
    };
    Ok((out, verdict.unwrap_or(true)))
}

fn render_run(run: &PresetRun) -> String {
    let mut out = format!("preset {}\n", run.name);
    for c in &run.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "  {status} {}: {}", c.name, c.detail);
    }
    let (num, den) = run.report.rhs_normal();
    let _ = writeln!(out, "  delta ≐ ({num}) / ({den})");
    if let Some(s) = &run.report.rhs.simplified {
        let _ = writeln!(out, "  simplified ≐ {}", unit_normal(s));
    }
    let _ = writeln!(
        out,
        "  result: {}",
        if run.passed() { "PASS" } else { "FAIL" }
    );
    out
}

fn run_one(name: &str, qr: Option<(u32, u32)>) -> Outcome {
    let run = presets::preset(name, qr)?.run()?;
    Ok((render_run(&run), run.passed()))
}

fn thread_cap() -> Result<usize, Failure> {
    match std::env::var("FOXBRAID_THREADS") {
        Ok(v) if !v.trim().is_empty() => v.trim().parse().map_err(|_| {
            usage(format!(
                "FOXBRAID_THREADS must be a non-negative integer, got `{v}`"
            ))
        }),
        _ => Ok(0),
    }
}

fn cmd_preset(name: &str, q: Option<u32>, r: Option<u32>, sweep: bool) -> Outcome {
    if name != "torus2q" {
        if q.is_some() || r.is_some() || sweep {
            return Err(usage(format!(
                "--q, --r and --sweep only apply to torus2q, not {name}"
            )));
        }
        return run_one(name, None);
    }
    let q = q.ok_or_else(|| usage("torus2q needs --q"))?;
    presets::check_torus_parameters(q, 1)?;
    let rs = if sweep {
        presets::torus_r_values(q)
    } else {
        let r = r.ok_or_else(|| usage("torus2q needs --r or --sweep"))?;
        presets::check_torus_parameters(q, r)?;
        vec![r]
    };
    let threads = thread_cap()?;
    let results: Vec<Outcome> = if threads == 0 || rs.len() < 2 {
        rs.iter().map(|&r| run_one(name, Some((q, r)))).collect()
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| usage(format!("thread pool: {e}")))?;
        pool.install(|| {
            rs.par_iter()
                .map(|&r| run_one(name, Some((q, r))))
                .collect()
        })
    };
    let mut out = String::new();
    let mut ok = true;
    for res in results {
        let (text, passed) = res?;
        out.push_str(&text);
        ok &= passed;
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Lm {
            input,
            reduced,
            format,
        } => cmd_lm(input, *reduced, *format),
        Command::Alexander {
            input,
            presentation,
            via,
            format,
        } => cmd_alexander(input, presentation.as_deref(), *via, *format),
        Command::Preset { name, q, r, sweep } => cmd_preset(name, *q, *r, *sweep),
    };
    match outcome {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
