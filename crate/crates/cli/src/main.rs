//! `g25`: construct, certify and scan constantly curved degree-6 spheres in G(2,5).

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use g25::algebra::bigfloat::parse_rational;
use g25::algebra::{BigFloat, Rational, Scalar, Surd};
use g25::moduli::{self, AnyConstruction};
use g25::paperlab::{self, SuiteOptions};
use g25::Error;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "g25", version, about = "Constantly curved holomorphic 2-spheres of degree 6 in G(2,5)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Working precision of the float path, in bits.
    #[arg(long, default_value_t = g25::DEFAULT_PRECISION, value_parser = parse_precision)]
    precision: usize,
    /// Residual and defect threshold of the float path.
    #[arg(long, default_value_t = g25::DEFAULT_TOL)]
    tol: f64,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and certify the curve over a moduli point, or a member of the
    /// one-parameter family through the standard curve.
    Construct {
        /// Moduli point `t0,t1,t6` (rationals `a/b` or decimals).
        #[arg(long, value_name = "T0,T1,T6", conflicts_with = "family33", required_unless_present = "family33")]
        t: Option<String>,
        /// Angle theta of the family member, in radians.
        #[arg(long, value_name = "THETA", allow_hyphen_values = true)]
        family33: Option<String>,
        /// Which of the (at most two) curves over the point.
        #[arg(long, default_value_t = 0)]
        branch: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Certify a pencil read from a JSON file.
    Certify {
        /// Pencil JSON, as written by `construct`.
        #[arg(value_name = "FILE")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Level set of g over a grid of t0.
    Scan {
        #[arg(long)]
        g: String,
        /// Grid `lo:hi:n`.
        #[arg(long = "t0-range", value_name = "LO:HI:N")]
        t0_range: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// The two arcs of the level set g = 1, t6 = t1^3/t0^2, for t0 in [1, 11/6].
    Levelset {
        #[arg(long = "t0-range", value_name = "LO:HI:N", default_value = "1:11/6:12")]
        t0_range: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form and numerical value of the total squared second fundamental form.
    Functional {
        #[arg(long, value_name = "T0,T1,T6")]
        t: String,
        #[arg(long, default_value_t = 0)]
        branch: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the verification groups and report every check.
    VerifyPaper {
        /// Restrict to these groups (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

/// Failure classes and their exit codes.
#[derive(Debug)]
enum Fail {
    Parse(String),
    Infeasible(String),
    Verify(String),
    Compute(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Parse(_) => 1,
            Fail::Infeasible(_) => 2,
            Fail::Verify(_) => 3,
            Fail::Compute(_) => 4,
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Argument(_) | Error::Transcription(_) => Fail::Parse(e.to_string()),
            Error::Infeasible(_) => Fail::Infeasible(e.to_string()),
            Error::Inconsistent(_) | Error::Contract(_) => Fail::Verify(e.to_string()),
            Error::Degenerate(_) | Error::Numeric(_) => Fail::Compute(e.to_string()),
        }
    }
}

type Outcome = Result<(), Fail>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let msg = match &f {
                Fail::Parse(m) | Fail::Infeasible(m) | Fail::Verify(m) | Fail::Compute(m) => m,
            };
            eprintln!("g25: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Construct { t, family33, branch, common } => match (t, family33) {
            (Some(t), _) => construct(&parse_triple(&t)?, branch, &common),
            (None, Some(th)) => construct_family33(&th, &common),
            (None, None) => Err(Fail::Parse("either --t or --family33 is required".into())),
        },
        Command::Certify { input, common } => certify(&input, &common),
        Command::Scan { g, t0_range, format, common } => scan(&parse_value(&g)?, &t0_range, format, &common),
        Command::Levelset { t0_range, format, common } => levelset(&t0_range, format, &common),
        Command::Functional { t, branch, common } => functional(&parse_triple(&t)?, branch, &common),
        Command::VerifyPaper { only, common } => verify(&only, &common),
    }
}

fn parse_precision(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p) if (53..=4096).contains(&p) => Ok(p),
        _ => Err(format!("precision must be an integer between 53 and 4096, got {s:?}")),
    }
}

fn parse_value(s: &str) -> Result<Rational, Fail> {
    parse_rational(s).ok_or_else(|| Fail::Parse(format!("cannot parse {s:?} as a rational or decimal number")))
}

fn parse_triple(s: &str) -> Result<[Rational; 3], Fail> {
    let v: Vec<Rational> = s.split(',').map(parse_value).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| Fail::Parse(format!("expected three comma-separated values, got {s:?}")))
}

fn parse_range(s: &str) -> Result<(Rational, Rational, usize), Fail> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err(Fail::Parse(format!("expected lo:hi:n, got {s:?}")));
    };
    let n: usize = n.parse().map_err(|_| Fail::Parse(format!("bad sample count {n:?}")))?;
    Ok((parse_value(lo)?, parse_value(hi)?, n))
}

fn emit(text: &str, common: &Common) -> Outcome {
    match &common.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::Compute(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(v: &Value, common: &Common) -> Outcome {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    emit(&s, common)
}

fn construct(t: &[Rational; 3], branch: usize, common: &Common) -> Outcome {
    let c = moduli::construct_rational(t, branch, common.precision, common.tol)?;
    let count = moduli::count_solutions_rational(t)?;
    let input = json!({ "t": t.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "branch": branch });
    let doc = match &c {
        AnyConstruction::Exact(c) => render::construction(input, c, count),
        AnyConstruction::Float(c) => render::construction(input, c, count),
    };
    emit_json(&doc, common)?;
    certified(c.certificate().passes())
}

fn construct_family33(theta: &str, common: &Common) -> Outcome {
    let th = BigFloat::parse(theta, common.precision)
        .ok_or_else(|| Fail::Parse(format!("cannot parse angle {theta:?}")))?;
    let f = moduli::family33_theta(&th, common.tol)?;
    let g = th.one_like();
    let w = moduli::w_closed(&f.t[0], &f.t[1], &g)?.to_f64();
    let cert = g25::grassmann::certify(&f.curve, common.tol, Some(w * std::f64::consts::PI))?;
    let doc = render::family_member(theta, &f, &cert, w);
    emit_json(&doc, common)?;
    certified(cert.passes())
}

fn certified(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Fail::Verify("the curve failed certification".into()))
    }
}

fn certify(path: &PathBuf, common: &Common) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Fail::Parse(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Fail::Parse(format!("invalid JSON: {e}")))?;
    let rows = v.get("pencil").unwrap_or(&v);
    let cert = match render::parse_pencil::<Surd>(rows, |s| s.parse::<Surd>().ok()) {
        Ok(p) => g25::grassmann::certify(&g25::grassmann::wedge_pencil(&p)?, common.tol, None)?,
        Err(_) => {
            let prec = common.precision;
            let p = render::parse_pencil::<BigFloat>(rows, |s| BigFloat::parse(s, prec)).map_err(Fail::Parse)?;
            g25::grassmann::certify(&g25::grassmann::wedge_pencil(&p)?, common.tol, None)?
        }
    };
    emit_json(&json!({ "certificate": cert, "passes": cert.passes() }), common)?;
    certified(cert.passes())
}

fn scan(g: &Rational, range: &str, format: Format, common: &Common) -> Outcome {
    let (lo, hi, n) = parse_range(range)?;
    let samples = moduli::scan(g, &lo, &hi, n, common.precision, common.tol)?;
    match format {
        Format::Csv => emit(&moduli::scan_csv(&samples), common),
        Format::Dat => emit(&moduli::scan_dat(&samples), common),
        Format::Json => emit_json(&json!({ "g": g.to_string(), "samples": samples }), common),
    }
}

fn levelset(range: &str, format: Format, common: &Common) -> Outcome {
    let (lo, hi, n) = parse_range(range)?;
    let grid = moduli::grid(&lo, &hi, n)?;
    let mut rows = Vec::with_capacity(grid.len());
    for s in &grid {
        let x = BigFloat::from_rational(s, common.precision);
        let b = moduli::level_set_s1(&x)?;
        let r1 = moduli::s1_residual(&x, &b.f1)?;
        let r2 = moduli::s1_residual(&x, &b.f2)?;
        rows.push([x.to_f64(), b.f1.to_f64(), b.f2.to_f64(), r1, r2]);
    }
    let names = ["t0", "t1_upper", "t1_lower", "residual_upper", "residual_lower"];
    let cell = |k: usize, v: f64| if k < 3 { moduli::fmt_sig(v, 12) } else { format!("{v:.3e}") };
    match format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(names.iter().enumerate().map(|(k, n)| (n.to_string(), json!(cell(k, r[k])))).collect()))
                .collect();
            emit_json(&json!({ "g": "1", "points": items }), common)
        }
        Format::Csv | Format::Dat => {
            let sep = if format == Format::Csv { "," } else { " " };
            let mut out = if format == Format::Csv { names.join(",") } else { format!("# {}", names.join(" ")) };
            out.push('\n');
            for r in &rows {
                out.push_str(&(0..5).map(|k| cell(k, r[k])).collect::<Vec<_>>().join(sep));
                out.push('\n');
            }
            emit(&out, common)
        }
    }
}

fn functional(t: &[Rational; 3], branch: usize, common: &Common) -> Outcome {
    let c = moduli::construct_rational(t, branch, common.precision, common.tol)?;
    let s = t.clone().map(Surd::from_rational);
    let g = moduli::g_of(&s)?;
    let exact = moduli::w_closed(&s[0], &s[1], &g)?;
    let w = c.w_over_pi() * std::f64::consts::PI;
    let numeric = c.certificate().w_numeric;
    let doc = json!({
        "t": t.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "branch": branch,
        "w_over_pi": exact.to_string(),
        "w_closed": moduli::fmt_sig(w, 12),
        "w_numeric": numeric.map(|x| moduli::fmt_sig(x, 12)),
        "relative_difference": numeric.map(|x| format!("{:.3e}", (x / w - 1.0).abs())),
    });
    emit_json(&doc, common)
}

fn verify(only: &[String], common: &Common) -> Outcome {
    let o = SuiteOptions { precision: common.precision, tol: common.tol };
    let rep = paperlab::verify_paper(if only.is_empty() { None } else { Some(only) }, &o)?;
    let failures: Vec<String> = rep.failures().iter().map(|c| c.check_name.clone()).collect();
    emit_json(&json!({ "precision_bits": common.precision, "passed": failures.is_empty(), "checks": rep.checks }), common)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Fail::Verify(format!("{} check(s) failed: {}", failures.len(), failures.join(", "))))
    }
}
