mod output;

use angleworks::angles::{angle_table, BetaParam};
use angleworks::polytope::{
    beta_polytope_fvector, betaprime_polytope_fvector, poisson_polytope_fvector, reitzner_ball, reitzner_sphere,
    typical_voronoi_fvector, zero_cell_fvector, FVector,
};
use angleworks::verify::{run_suite, Suite};
use angleworks::Family;
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{Format, Row, Table};
use serde_json::json;
use std::process::ExitCode;
use std::time::Instant;

/// Exact and numeric angle sums of beta and beta' simplices, and the
/// expected f-vectors built from them.
#[derive(Parser)]
#[command(name = "angleworks", version)]
struct Cli {
    /// Report wall-clock time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expected internal angle sums J_{n,k}(beta) or J~_{n,k}(beta).
    Angles(AnglesArgs),
    /// Expected f-vectors of random polytopes and typical cells.
    Fvector(FvectorArgs),
    /// Reitzner constants for random polytopes in the ball or on the sphere.
    Reitzner(ReitznerArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Beta,
    Betaprime,
}

#[derive(Args)]
struct AnglesArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: u32,
    /// A single k; the whole row 1..n when omitted.
    #[arg(long)]
    k: Option<u32>,
    /// P/Q, an integer, or a decimal (decimals use quadrature).
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    /// Force the quadrature path.
    #[arg(long)]
    numeric: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Decimal places for the decimal column.
    #[arg(long)]
    digits: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Voronoi,
    Zerocell,
    Poisson,
    Beta,
    Betaprime,
}

#[derive(Args)]
struct FvectorArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    d: u32,
    /// Poisson polytope exponent.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Beta / beta' parameter as P/Q, an integer, or a decimal.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Number of points for beta / beta' polytopes.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long)]
    digits: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    Ball,
    Sphere,
}

#[derive(Args)]
struct ReitznerArgs {
    #[arg(long, value_enum)]
    surface: Surface,
    #[arg(long)]
    d: u32,
    /// A single k; all of 0..d-1 when omitted.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value_t = 15)]
    digits: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Relations,
    Crosscheck,
    Montecarlo,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 20000)]
    trials: u64,
    #[arg(long, default_value_t = 8)]
    max_n: u32,
}

/// Failure with an exit code and a one-line reason.
struct Fail(u8, String);

impl From<angleworks::Error> for Fail {
    fn from(e: angleworks::Error) -> Self {
        Fail(2, e.to_string())
    }
}

fn bad(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

/// Exact half-integers stay exact; anything else goes to quadrature with a notice.
fn parse_beta(s: &str, force_numeric: bool) -> Result<BetaParam, Fail> {
    let s = s.trim();
    let exact = if s.contains(['.', 'e', 'E']) {
        None
    } else {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad(format!("cannot parse beta '{s}'")))?;
        let q: i64 = q.parse().map_err(|_| bad(format!("cannot parse beta '{s}'")))?;
        if q <= 0 {
            return Err(bad(format!("beta '{s}' needs a positive denominator")));
        }
        Some((p, q))
    };
    match exact {
        Some((p, q)) if (2 * p) % q == 0 && !force_numeric => Ok(BetaParam::HalfInteger(2 * p / q)),
        Some((p, q)) => {
            if !force_numeric {
                eprintln!("note: beta = {s} is not a half-integer; using the numeric path");
            }
            Ok(BetaParam::Real(p as f64 / q as f64))
        }
        None => {
            let v: f64 = s.parse().map_err(|_| bad(format!("cannot parse beta '{s}'")))?;
            if !v.is_finite() {
                return Err(bad(format!("beta '{s}' is not finite")));
            }
            if !force_numeric {
                eprintln!("note: decimal beta {s} uses the numeric path");
            }
            Ok(BetaParam::Real(v))
        }
    }
}

fn beta_json(b: BetaParam) -> serde_json::Value {
    json!(b.to_string())
}

fn angles(a: &AnglesArgs) -> Result<String, Fail> {
    let family = match a.family {
        FamilyArg::Beta => Family::Beta,
        FamilyArg::Betaprime => Family::BetaPrime,
    };
    if let Some(k) = a.k {
        if k < 1 || k > a.n {
            return Err(bad(format!("need 1 <= k <= n, got n={}, k={k}", a.n)));
        }
    }
    let beta = parse_beta(&a.beta, a.numeric)?;
    let table = angle_table(family, a.n, beta)?;
    let rows = table
        .entries
        .iter()
        .filter(|e| a.k.map_or(true, |k| k == e.k))
        .map(|e| row(e.k, &e.value, e.provenance.name(), None))
        .collect();
    let t = Table {
        command: "angles",
        params: vec![("family", json!(family.name())), ("n", json!(a.n)), ("beta", beta_json(beta))],
        index_name: "k",
        tag_name: "provenance",
        rows,
        decimal_first: false,
    };
    Ok(t.render(a.format, a.digits))
}

fn row(index: u32, v: &angleworks::angles::AngleValue, tag: &'static str, factor: Option<angleworks::PiNumber>) -> Row {
    use angleworks::angles::AngleValue;
    match v {
        AngleValue::Exact(x) => Row { index, exact: Some(x.clone()), float: x.to_f64(), abs_error: None, tag, factor },
        AngleValue::Float { value, abs_error } => {
            Row { index, exact: None, float: *value, abs_error: Some(*abs_error), tag, factor }
        }
    }
}

fn fvector(a: &FvectorArgs) -> Result<String, Fail> {
    let need_beta = || -> Result<(BetaParam, u32), Fail> {
        let b = a.beta.as_deref().ok_or_else(|| bad("this model needs --beta"))?;
        let n = a.n.ok_or_else(|| bad("this model needs --n"))?;
        Ok((parse_beta(b, false)?, n))
    };
    let f: FVector = match a.model {
        ModelArg::Voronoi => typical_voronoi_fvector(a.d)?,
        ModelArg::Zerocell => zero_cell_fvector(a.d)?,
        ModelArg::Poisson => {
            let s = a.alpha.as_deref().ok_or_else(|| bad("the poisson model needs --alpha"))?;
            let alpha: f64 = s.parse().map_err(|_| bad(format!("cannot parse alpha '{s}'")))?;
            poisson_polytope_fvector(a.d, alpha)?
        }
        ModelArg::Beta => {
            let (b, n) = need_beta()?;
            beta_polytope_fvector(n, a.d, b)?
        }
        ModelArg::Betaprime => {
            let (b, n) = need_beta()?;
            betaprime_polytope_fvector(n, a.d, b)?
        }
    };
    let mut params = vec![("model", json!(f.model.to_string())), ("d", json!(a.d))];
    if let Some(alpha) = f.alpha {
        params.push(("alpha", json!(alpha)));
    }
    if let Some(n) = f.n {
        params.push(("n", json!(n)));
    }
    if let Some(b) = f.beta {
        params.push(("beta", beta_json(b)));
    }
    let rows = f.entries.iter().map(|e| row(e.ell, &e.value, e.route.name(), None)).collect();
    let t = Table { command: "fvector", params, index_name: "l", tag_name: "route", rows, decimal_first: false };
    Ok(t.render(a.format, a.digits))
}

fn reitzner(a: &ReitznerArgs) -> Result<String, Fail> {
    let ks: Vec<u32> = match a.k {
        Some(k) => vec![k],
        None => (0..a.d).collect(),
    };
    let mut rows = Vec::new();
    for k in ks {
        let c = match a.surface {
            Surface::Ball => reitzner_ball(a.d, k)?,
            Surface::Sphere => reitzner_sphere(a.d, k)?,
        };
        let tag = if c.exact.is_some() { "exact" } else { "float_prefactor" };
        rows.push(Row { index: k, exact: c.exact, float: c.value, abs_error: None, tag, factor: Some(c.angle_factor) });
    }
    let surface = match a.surface {
        Surface::Ball => "ball",
        Surface::Sphere => "sphere",
    };
    let t = Table {
        command: "reitzner",
        params: vec![("surface", json!(surface)), ("d", json!(a.d))],
        index_name: "k",
        tag_name: "kind",
        decimal_first: matches!(a.surface, Surface::Ball),
        rows,
    };
    Ok(t.render(a.format, Some(a.digits)))
}

fn verify(a: &VerifyArgs) -> Result<String, Fail> {
    if a.trials == 0 {
        return Err(bad("--trials must be positive"));
    }
    if !(2..=12).contains(&a.max_n) {
        return Err(bad("--max-n must lie in 2..=12"));
    }
    let suite = match a.suite {
        SuiteArg::Relations => Suite::Relations,
        SuiteArg::Crosscheck => Suite::Crosscheck,
        SuiteArg::Montecarlo => Suite::MonteCarlo,
    };
    let checks = run_suite(suite, a.seed, a.trials, a.max_n);
    let mut out = String::new();
    for c in &checks {
        out.push_str(&format!("{c}\n"));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    out.push_str(&format!("# {} checks, {failed} failed\n", checks.len()));
    if failed > 0 {
        print!("{out}");
        return Err(Fail(1, format!("{failed} verification checks failed")));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("ANGLEWORKS_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let start = Instant::now();
    let result = match &cli.cmd {
        Cmd::Angles(a) => angles(a),
        Cmd::Fvector(a) => fvector(a),
        Cmd::Reitzner(a) => reitzner(a),
        Cmd::Verify(a) => verify(a),
    };
    if cli.timing {
        eprintln!("# time: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    match result {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
