//! `splitsig`: signatures of colored links and splitting-number bounds.
//!
//! Exit codes: 0 success, 2 input error, 3 data-invariant violation.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use splitsig::{
    build_gss, linking_number_bound, lt_signature_from_multivariable, parse_fraction, predicted_splitting,
    rank_obstruction, signature_nullity, splitting_bound_lt, splitting_bound_multivariable, torus_scan,
    unlinking_bound, BoundKind, BoundReport, Catalog, ComponentInvariants, ComponentValue, ConwayForm, Error,
    FixtureKind, FixtureRecord, GeneralizedSeifertSystem, ObstructionSample, TorusPoint, DEFAULT_TOL,
};

const MAX_SCAN_COLORS: usize = 3;

#[derive(Parser)]
#[command(
    name = "splitsig",
    version,
    about = "Multivariable link signatures and splitting-number bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signature and nullity of a system at a torus point.
    Sig {
        /// System JSON file or catalog name (e.g. "C(4,3,2)", "Hopf").
        input: String,
        /// Angle fractions p/q, one per color, meaning exp(2 pi i p/q).
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// Treat --omega as a single fraction and report the Levine-Tristram
        /// signature of the underlying link (needs linking numbers).
        #[arg(long)]
        lt: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Evaluate a lower bound from a fixture file or inline values.
    Bound(BoundArgs),
    /// Sample signature, nullity and |det H| on a grid of the torus.
    Scan {
        input: String,
        /// Samples per axis; fractions k/(R+1) for k = 1..R.
        #[arg(long)]
        res: usize,
        /// CSV destination; written to stdout when omitted.
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Splitting number of a two-bridge link C(2a_1, b_1, ..., 2a_n).
    Twobridge {
        /// Comma-separated Conway coefficients, e.g. 4,3,2.
        form: String,
        /// Evaluate at this point instead of (-1,-1).
        #[arg(long)]
        omega: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Check a system file against its structural invariants.
    Validate { input: String },
    /// List the shipped fixtures and their bound values.
    Catalog,
}

#[derive(Args)]
struct BoundArgs {
    /// split-multi | split-lt | linking | rank | unlink
    kind: String,
    /// Fixture JSON file or catalog fixture name.
    fixture: Option<String>,
    #[arg(long)]
    mu: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<i64>,
    #[arg(long)]
    eta: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    total_lk: Option<i64>,
    /// Component data "sigma:eta", once per color; unknots when omitted.
    #[arg(long = "comp", allow_hyphen_values = true)]
    comps: Vec<String>,
    /// Pairwise linking numbers in the order 12,13,...,1mu,23,...
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    lk: Vec<i64>,
    /// Pairs "i-j" (1-based) that are non-split.
    #[arg(long)]
    nonsplit: Vec<String>,
    /// Pairs "i-j" (1-based) that are split.
    #[arg(long)]
    split: Vec<String>,
    #[arg(long)]
    beta: Option<u32>,
    /// Parity (0 or 1) of the total linking number.
    #[arg(long)]
    lk_parity: Option<u8>,
    #[arg(long)]
    omega: Option<String>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn invariant(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidSystem(_) => CliError::invariant(err.to_string()),
            other => CliError::input(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let catalog = Catalog::builtin().map_err(|e| CliError::invariant(format!("catalog: {e}")))?;
    let failures = catalog.self_check();
    if !failures.is_empty() {
        return Err(CliError::invariant(format!(
            "catalog self-check failed: {}",
            failures.join("; ")
        )));
    }

    match cli.command {
        Command::Sig { input, omega, lt, tol } => cmd_sig(&catalog, &input, &omega, lt, tol),
        Command::Bound(args) => cmd_bound(&catalog, args),
        Command::Scan { input, res, out, tol } => cmd_scan(&catalog, &input, res, out.as_deref(), tol),
        Command::Twobridge { form, omega, tol } => cmd_twobridge(&form, omega.as_deref(), tol),
        Command::Validate { input } => {
            let gss = read_system(&catalog, &input)?;
            let violations = gss.validate();
            if violations.is_empty() {
                println!("ok");
                Ok(())
            } else {
                for v in &violations {
                    println!("{v}");
                }
                Err(CliError::invariant(format!("{} violation(s)", violations.len())))
            }
        }
        Command::Catalog => {
            for name in catalog.system_names() {
                println!("system {name}");
            }
            for record in catalog.fixtures() {
                let report = record.evaluate()?;
                println!(
                    "fixture {} kind={} omega={} value={}",
                    record.name, report.bound, record.omega, report.value
                );
            }
            Ok(())
        }
    }
}

/// Loads a system file or a catalog entry, rejecting invalid systems with
/// their violations listed.
fn load_system(catalog: &Catalog, input: &str) -> CliResult<GeneralizedSeifertSystem> {
    let gss = read_system(catalog, input)?;
    let violations = gss.validate();
    if !violations.is_empty() {
        let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(CliError::invariant(format!(
            "invalid system {input}:\n  {}",
            lines.join("\n  ")
        )));
    }
    Ok(gss)
}

fn read_system(catalog: &Catalog, input: &str) -> CliResult<GeneralizedSeifertSystem> {
    if Path::new(input).is_file() {
        let text = fs::read_to_string(input).map_err(|e| CliError::input(format!("{input}: {e}")))?;
        return GeneralizedSeifertSystem::from_json(&text).map_err(|e| CliError::input(format!("{input}: {e}")));
    }
    catalog
        .system(input)
        .ok_or_else(|| CliError::input(format!("{input:?} is neither a readable file nor a catalog system")))
}

fn cmd_sig(catalog: &Catalog, input: &str, omega: &str, lt: bool, tol: f64) -> CliResult<()> {
    let gss = load_system(catalog, input)?;
    if lt {
        let q = parse_fraction(omega)?;
        let (sigma, eta) = lt_signature_from_multivariable(&gss, q, tol)?;
        println!("sigma={sigma} eta={eta}");
        return Ok(());
    }
    let omega: TorusPoint = omega.parse()?;
    let r = signature_nullity(&gss, &omega, tol)?;
    println!("sigma={} eta={}", r.signature, r.nullity);
    Ok(())
}

fn cmd_scan(catalog: &Catalog, input: &str, res: usize, out: Option<&str>, tol: f64) -> CliResult<()> {
    let gss = load_system(catalog, input)?;
    if gss.mu > MAX_SCAN_COLORS {
        return Err(CliError::input(format!(
            "scan supports at most {MAX_SCAN_COLORS} colors, system has {}",
            gss.mu
        )));
    }
    if res == 0 {
        return Err(CliError::input("--res must be at least 1"));
    }
    let grid = torus_scan(&gss, res, tol)?;
    let summary = format!(
        "samples={} min_eta={} det_zero={} unexplained_jumps={}",
        grid.len(),
        grid.min_eta().map_or("-".to_string(), |e| e.to_string()),
        grid.det_zero_count(),
        grid.unexplained_jumps().len()
    );
    match out {
        Some(path) => {
            fs::write(path, grid.to_csv()).map_err(|e| CliError::input(format!("{path}: {e}")))?;
            println!("{summary}");
        }
        None => {
            print!("{}", grid.to_csv());
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn cmd_twobridge(form: &str, omega: Option<&str>, tol: f64) -> CliResult<()> {
    let form: ConwayForm = form.parse()?;
    let gss = build_gss(&form)?;
    let point = match omega {
        Some(text) => text.parse::<TorusPoint>()?,
        None => TorusPoint::all_minus_one(2),
    };
    let r = signature_nullity(&gss, &point, tol)?;
    let bound = splitting_bound_multivariable(2, r.signature, r.nullity as u32, &ComponentInvariants::unknots(2))?;
    let sp = predicted_splitting(&form);
    println!(
        "s={} sigma={} eta={} bound={} sp={}",
        form.clasps(),
        r.signature,
        r.nullity,
        bound.value,
        sp
    );
    if omega.is_some() {
        println!("omega={point}");
    }
    println!("agreement={}", if bound.value == sp { "yes" } else { "no" });
    Ok(())
}

fn parse_comp(text: &str) -> CliResult<ComponentValue> {
    let (s, e) = text
        .split_once(':')
        .ok_or_else(|| CliError::input(format!("--comp {text:?}: expected sigma:eta")))?;
    let sigma = s
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("--comp {text:?}: bad sigma")))?;
    let eta = e
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("--comp {text:?}: bad eta")))?;
    Ok(ComponentValue::new(sigma, eta))
}

fn parse_pair(text: &str, mu: usize) -> CliResult<(usize, usize)> {
    let bad = || CliError::input(format!("pair {text:?}: expected i-j with 1 <= i < j <= {mu}"));
    let (i, j) = text.split_once('-').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 || i > mu || j > mu || i == j {
        return Err(bad());
    }
    Ok((i.min(j) - 1, i.max(j) - 1))
}

fn require<T>(value: Option<T>, flag: &str, kind: BoundKind) -> CliResult<T> {
    value.ok_or_else(|| CliError::input(format!("bound {kind}: missing --{flag}")))
}

/// `mu` from a list of `mu (mu - 1) / 2` pairwise values.
fn mu_from_pairs(count: usize) -> Option<usize> {
    (1..=64).find(|&mu| mu * (mu - 1) / 2 == count)
}

fn linking_matrix(values: &[i64], mu: usize) -> CliResult<Vec<Vec<i64>>> {
    if values.len() != mu * (mu - 1) / 2 {
        return Err(CliError::input(format!(
            "--lk needs {} pairwise values for mu = {mu}, got {}",
            mu * (mu - 1) / 2,
            values.len()
        )));
    }
    let mut lk = vec![vec![0; mu]; mu];
    let mut it = values.iter();
    for i in 0..mu {
        for j in i + 1..mu {
            let v = *it.next().expect("length checked");
            lk[i][j] = v;
            lk[j][i] = v;
        }
    }
    Ok(lk)
}

fn read_fixture(catalog: &Catalog, input: &str) -> CliResult<FixtureRecord> {
    if Path::new(input).is_file() {
        let text = fs::read_to_string(input).map_err(|e| CliError::input(format!("{input}: {e}")))?;
        return FixtureRecord::from_json(&text).map_err(|e| CliError::input(format!("{input}: {e}")));
    }
    catalog
        .fixture(input)
        .cloned()
        .ok_or_else(|| CliError::input(format!("{input:?} is neither a readable file nor a catalog fixture")))
}

fn cmd_bound(catalog: &Catalog, args: BoundArgs) -> CliResult<()> {
    let kind: BoundKind = args.kind.parse().map_err(|_| {
        CliError::input(format!(
            "unknown bound {:?}; expected split-multi, split-lt, linking, rank or unlink",
            args.kind
        ))
    })?;
    let report = match &args.fixture {
        Some(path) => bound_from_fixture(kind, read_fixture(catalog, path)?)?,
        None => bound_inline(kind, &args)?,
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{report}");
    }
    Ok(())
}

fn bound_from_fixture(kind: BoundKind, mut record: FixtureRecord) -> CliResult<BoundReport> {
    let two_color_lk = |record: &FixtureRecord| -> CliResult<Vec<Vec<i64>>> {
        match (record.mu, record.total_lk) {
            (2, Some(lk)) => Ok(vec![vec![0, lk], vec![lk, 0]]),
            _ => Err(CliError::input(format!(
                "bound {kind}: fixture {} does not carry pairwise linking numbers",
                record.name
            ))),
        }
    };
    let report = match kind {
        BoundKind::SplitMulti | BoundKind::SplitLt | BoundKind::Rank => {
            record.kind = match kind {
                BoundKind::SplitMulti => FixtureKind::Multi,
                BoundKind::SplitLt => FixtureKind::Lt,
                _ => FixtureKind::Rank,
            };
            record.evaluate()?
        }
        BoundKind::Linking => {
            let lk = two_color_lk(&record)?;
            linking_number_bound(&lk, &BTreeMap::from([((0, 1), true)]))?.with_omega(record.omega.clone())
        }
        BoundKind::Unlink => {
            let lk = two_color_lk(&record)?;
            unlinking_bound(record.mu, record.sigma_l, record.eta_l, &lk)?.with_omega(record.omega.clone())
        }
    };
    Ok(report)
}

fn bound_inline(kind: BoundKind, args: &BoundArgs) -> CliResult<BoundReport> {
    let omega = args.omega.as_deref().map(str::parse::<TorusPoint>).transpose()?;
    let mu = match (args.mu, kind) {
        (Some(mu), _) => mu,
        (None, BoundKind::Linking) => mu_from_pairs(args.lk.len())
            .ok_or_else(|| CliError::input("bound linking: --lk needs mu(mu-1)/2 values"))?,
        (None, _) => match &omega {
            Some(w) => w.mu(),
            None => return Err(CliError::input(format!("bound {kind}: missing --mu"))),
        },
    };
    if mu == 0 {
        return Err(CliError::input("--mu must be at least 1"));
    }
    let comps = if args.comps.is_empty() {
        ComponentInvariants::unknots(mu)
    } else {
        ComponentInvariants(
            args.comps
                .iter()
                .map(|c| parse_comp(c))
                .collect::<CliResult<Vec<_>>>()?,
        )
    };
    let parity = args.total_lk.or(args.lk_parity.map(i64::from));

    let report = match kind {
        BoundKind::SplitMulti => {
            let sigma = require(args.sigma, "sigma", kind)?;
            let eta = require(args.eta, "eta", kind)?;
            let r = splitting_bound_multivariable(mu, sigma, eta, &comps)?;
            match args.total_lk {
                Some(lk) => r.with_linking_parity(lk),
                None => r,
            }
        }
        BoundKind::SplitLt => {
            let sigma = require(args.sigma, "sigma", kind)?;
            let eta = require(args.eta, "eta", kind)?;
            let lk = require(args.total_lk, "total-lk", kind)?;
            splitting_bound_lt(mu, sigma, eta, lk, &comps)?
        }
        BoundKind::Linking => {
            let lk = linking_matrix(&args.lk, mu)?;
            let mut flags = BTreeMap::new();
            for p in &args.nonsplit {
                flags.insert(parse_pair(p, mu)?, true);
            }
            for p in &args.split {
                flags.insert(parse_pair(p, mu)?, false);
            }
            linking_number_bound(&lk, &flags)?
        }
        BoundKind::Rank => {
            let beta = require(args.beta, "beta", kind)?;
            let samples = match args.sigma {
                Some(sigma) => vec![ObstructionSample {
                    omega: require(omega.clone(), "omega", kind)?,
                    sigma_l: sigma,
                    eta_l: args.eta.unwrap_or(beta),
                    components: comps,
                }],
                None => Vec::new(),
            };
            rank_obstruction(mu, beta, &samples, parity)?
        }
        BoundKind::Unlink => {
            let sigma = require(args.sigma, "sigma", kind)?;
            let eta = require(args.eta, "eta", kind)?;
            unlinking_bound(mu, sigma, eta, &linking_matrix(&args.lk, mu)?)?
        }
    };
    Ok(match omega {
        Some(w) => report.with_omega(w),
        None => report,
    })
}
