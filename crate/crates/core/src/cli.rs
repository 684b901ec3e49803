//! Command-line front end.
//!
//! Exit codes: 0 when every applicable claim holds, 1 on a claim failure,
//! 2 on usage, parse or input errors, 3 when a resource cap aborts a run.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ideal_file::IdealFile;
use crate::lab::{self, fixtures};
use crate::local::{self, PrimeWitness, DEFAULT_ORDER_CAP};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};
use crate::report::VerificationReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sympow",
    version,
    about = "Symbolic powers, intersections and orders of vanishing over polynomial rings"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Maximum number of terms in any intermediate polynomial.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    term_cap: Option<u64>,
    /// Include per-step timings (makes output non-deterministic).
    #[arg(long, global = true)]
    timings: bool,
    /// Worker threads for batch verification.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Ideal file.
    #[arg(short = 'f', long = "file")]
    file: PathBuf,
    /// Name of an ideal in the file.
    #[arg(short = 'i', long = "ideal")]
    ideal: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "grevlex", value_parser = ["lex", "grlex", "grevlex"])]
        order: String,
    },
    /// Ideal membership of a polynomial.
    Member {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
    },
    /// Intersection of two or more named ideals.
    Intersect {
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        #[arg(short = 'i', long = "ideal", required = true, num_args = 1)]
        ideals: Vec<String>,
    },
    /// Saturation `I : f^∞`.
    Saturate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        by: String,
    },
    /// Krull dimension of the quotient.
    Dim {
        #[command(flatten)]
        input: Input,
    },
    /// Symbolic power of a prime.
    SymbolicPower {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'm', long = "power", value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
    },
    /// Order of vanishing of a polynomial along a prime.
    Ord {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: u32,
    },
    /// Multiplicity of the quotient at the origin (homogeneous ideals).
    Mult {
        #[command(flatten)]
        input: Input,
        /// Report the degree of the projective closure instead; accepts
        /// non-homogeneous ideals.
        #[arg(long)]
        affine: bool,
    },
    /// Associativity formula for a monomial ideal.
    AssocCheck {
        #[command(flatten)]
        input: Input,
    },
    /// Theorem checks.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Sp1,
    Sp2,
    Multi,
    Regular,
    Ci,
    Affine,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    mode: Mode,
    /// Run the bundled fixture suite.
    #[arg(long)]
    fixtures: bool,
    #[arg(short = 'f', long = "file")]
    file: Option<PathBuf>,
    /// Named ideals, in order (two for pairwise modes, any number for multi).
    #[arg(short = 'i', long = "ideal")]
    ideals: Vec<String>,
    #[arg(short = 'm', default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(short = 'n', default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Exponents for `multi`, comma separated.
    #[arg(long, value_delimiter = ',')]
    exponents: Vec<u32>,
    /// Polynomial for `affine`.
    #[arg(long)]
    poly: Option<String>,
    /// Largest exponent in fixture batches.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    max_exp: u32,
    /// Number of seeded random coordinate pairs added to the batch.
    #[arg(long, default_value_t = 0)]
    random: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    PolyRing::set_default_term_cap(cli.global.term_cap.map(|c| c as usize));
    let result = dispatch(&cli);
    PolyRing::set_default_term_cap(None);
    match result {
        Ok(out) => {
            let text = out.render(&cli.global);
            for note in &out.warnings {
                eprintln!("warning: {note}");
            }
            if let Err(e) = emit(&cli.global, &text) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_resource_cap() {
                EXIT_RESOURCE
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn emit(global: &GlobalOpts, text: &str) -> std::io::Result<()> {
    match &global.out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

/// What a command produced, in all three renderings.
struct Output {
    json: Value,
    text: String,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    status: i32,
    warnings: Vec<String>,
}

impl Output {
    /// Scalar results: `key,value` rows in CSV.
    fn simple(json: Value, text: String) -> Self {
        let rows = match &json {
            Value::Object(map) => map.iter().map(|(k, v)| vec![k.clone(), scalar(v)]).collect(),
            _ => Vec::new(),
        };
        Output {
            json,
            text,
            header: vec!["key".into(), "value".into()],
            rows,
            status: EXIT_OK,
            warnings: Vec::new(),
        }
    }

    fn render(&self, global: &GlobalOpts) -> String {
        if global.json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
            s.push('\n');
            s
        } else if global.csv {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&self.header).expect("in-memory write");
            for r in &self.rows {
                w.write_record(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        } else {
            self.text.clone()
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn lines(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

fn load(path: &PathBuf) -> Result<IdealFile> {
    IdealFile::read(path, None)
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Gb { input, order } => {
            let file = load(&input.file)?;
            let entry = file.get(&input.ideal)?;
            let order = MonomialOrder::parse(order)?;
            let gb = entry.ideal.groebner(&order)?;
            Ok(Output::simple(
                json!({
                    "command": "gb",
                    "ideal": input.ideal,
                    "order": order.to_string(),
                    "basis": strings(gb.elements()),
                }),
                lines(gb.elements()),
            ))
        }
        Command::Member { input, poly } => {
            let file = load(&input.file)?;
            let entry = file.get(&input.ideal)?;
            let f = Polynomial::parse(poly, &file.ring)?;
            let gb = entry.ideal.gb()?;
            let nf = gb.normal_form(&f)?;
            let member = nf.is_zero();
            Ok(Output::simple(
                json!({
                    "command": "member",
                    "ideal": input.ideal,
                    "poly": f.to_string(),
                    "member": member,
                    "normal_form": nf.to_string(),
                }),
                format!("{member}\n"),
            ))
        }
        Command::Intersect { file, ideals } => {
            let file = load(file)?;
            let mut acc: Option<Ideal> = None;
            for name in ideals {
                let i = file.get(name)?.ideal.clone();
                acc = Some(match acc {
                    None => i,
                    Some(a) => a.intersection(&i)?,
                });
            }
            let meet = acc.expect("clap requires at least one ideal");
            let gb = meet.gb()?;
            Ok(Output::simple(
                json!({
                    "command": "intersect",
                    "ideals": ideals,
                    "generators": strings(gb.elements()),
                }),
                lines(gb.elements()),
            ))
        }
        Command::Saturate { input, by } => {
            let file = load(&input.file)?;
            let entry = file.get(&input.ideal)?;
            let f = Polynomial::parse(by, &file.ring)?;
            let (sat, index) = entry.ideal.saturation(&f)?;
            let gb = sat.gb()?;
            Ok(Output::simple(
                json!({
                    "command": "saturate",
                    "ideal": input.ideal,
                    "by": f.to_string(),
                    "generators": strings(gb.elements()),
                    "index": index,
                }),
                lines(gb.elements()),
            ))
        }
        Command::Dim { input } => {
            let file = load(&input.file)?;
            let d = file.get(&input.ideal)?.ideal.krull_dimension()?;
            Ok(Output::simple(
                json!({ "command": "dim", "ideal": input.ideal, "dimension": d }),
                format!("{d}\n"),
            ))
        }
        Command::SymbolicPower { input, power } => {
            let file = load(&input.file)?;
            let prime = file.get(&input.ideal)?.prime()?;
            let sp = prime.symbolic_power_unchecked(*power)?;
            let gb = sp.ideal.gb()?;
            let ordinary = sp.ideal.equals(&prime.ideal().power(*power)?)?;
            let mut out = Output::simple(
                json!({
                    "command": "symbolic-power",
                    "ideal": input.ideal,
                    "power": power,
                    "generators": strings(gb.elements()),
                    "certified": sp.certified,
                    "saturation_index": sp.saturation_index,
                    "equals_ordinary_power": ordinary,
                    "violations": sp.violations,
                }),
                lines(gb.elements()),
            );
            if !sp.certified {
                out.warnings.push("symbolic power is not certified".into());
            }
            out.warnings.extend(sp.violations.iter().cloned());
            if !sp.violations.is_empty() {
                out.status = EXIT_CLAIM_FAILED;
            }
            Ok(out)
        }
        Command::Ord { input, poly, cap } => {
            let file = load(&input.file)?;
            let prime = file.get(&input.ideal)?.prime()?;
            let f = Polynomial::parse(poly, &file.ring)?;
            let k = prime.ord_along_capped(&f, *cap)?;
            Ok(Output::simple(
                json!({
                    "command": "ord",
                    "ideal": input.ideal,
                    "poly": f.to_string(),
                    "order": k,
                    "order_at_origin": f.order_at_origin(),
                }),
                format!("{k}\n"),
            ))
        }
        Command::Mult { input, affine } => {
            let file = load(&input.file)?;
            let ideal = &file.get(&input.ideal)?.ideal;
            let e = if *affine {
                local::affine_degree(ideal)?
            } else {
                local::multiplicity_graded(ideal)?
            };
            let h = local::hilbert_data(ideal)?;
            Ok(Output::simple(
                json!({
                    "command": "mult",
                    "ideal": input.ideal,
                    "multiplicity": e,
                    "hilbert_numerator": h.numerator,
                    "hilbert_dimension": h.dimension,
                    "affine": affine,
                }),
                format!("{e}\n"),
            ))
        }
        Command::AssocCheck { input } => {
            let file = load(&input.file)?;
            let r = local::associativity_check(&file.get(&input.ideal)?.ideal)?;
            let cases = vec![(input.ideal.clone(), r)];
            Ok(report_output("assoc-check", None, None, &cases, cli.global.timings))
        }
        Command::Verify(args) => verify(args, &cli.global),
    }
}

type CaseFn = Box<dyn Fn() -> Result<VerificationReport> + Send + Sync>;

struct Case {
    id: String,
    run: CaseFn,
}

fn case(id: String, run: impl Fn() -> Result<VerificationReport> + Send + Sync + 'static) -> Case {
    Case { id, run: Box::new(run) }
}

fn verify(args: &VerifyArgs, global: &GlobalOpts) -> Result<Output> {
    let mut cases = Vec::new();
    if args.fixtures {
        cases.extend(fixture_cases(args)?);
    }
    if args.random > 0 {
        let pairs = fixtures::random_coordinate_pairs(args.seed, args.random, 5)?;
        cases.extend(pair_cases(args.mode, pairs, args.max_exp));
    }
    if let Some(path) = &args.file {
        cases.push(file_case(args, &load(path)?)?);
    }
    if cases.is_empty() {
        return Err(Error::InvalidInput(
            "nothing to verify: pass --fixtures, --random or -f with -i".into(),
        ));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(global.threads as usize)
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    let results: Vec<Result<VerificationReport>> = pool.install(|| cases.par_iter().map(|c| (c.run)()).collect());
    let mut reports = Vec::with_capacity(results.len());
    for (c, r) in cases.iter().zip(results) {
        // resource-cap errors keep their variant so the exit code survives
        let r = r.map_err(|e| {
            if e.is_resource_cap() {
                e
            } else {
                Error::InvalidInput(format!("case {}: {e}", c.id))
            }
        })?;
        reports.push((c.id.clone(), r));
    }
    let seed = (args.random > 0).then_some(args.seed);
    let mode = format!("{:?}", args.mode).to_lowercase();
    Ok(report_output("verify", Some(&mode), seed, &reports, global.timings))
}

fn exponent_grid(mode: Mode, max: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=max {
        if mode == Mode::Sp1 {
            out.push((m, 1));
            continue;
        }
        for n in 1..=max {
            out.push((m, n));
        }
    }
    out
}

fn pair_cases(mode: Mode, pairs: Vec<fixtures::PrimePair>, max: u32) -> Vec<Case> {
    let mut out = Vec::new();
    for pr in pairs {
        let p = Arc::new(pr.p);
        let q = Arc::new(pr.q);
        match mode {
            Mode::Multi => {
                let (p, q) = (p.clone(), q.clone());
                for (m, n) in exponent_grid(Mode::Sp2, max) {
                    let primes = vec![(*p).clone(), (*q).clone()];
                    out.push(case(format!("{}/m{m}n{n}", pr.name), move || {
                        lab::verify_multi(&primes, &[m, n])
                    }));
                }
            }
            Mode::Regular => {
                if !matches!(p.kind(), local::PrimeKind::Coordinate(_)) {
                    continue;
                }
                for (m, n) in exponent_grid(mode, max) {
                    let (p, q) = (p.clone(), q.clone());
                    out.push(case(format!("{}/m{m}n{n}", pr.name), move || {
                        lab::verify_regular_case(&p, &q, m, n)
                    }));
                }
            }
            Mode::Affine => {
                let (p, q) = (p.clone(), q.clone());
                out.push(case(format!("{}/product", pr.name), move || {
                    let f = p.ideal().generators()[0].multiply(&q.ideal().generators()[0])?;
                    lab::affine_vanishing_report(&f, &p, &q)
                }));
            }
            Mode::Ci => {
                let (i, j) = (p.ideal().clone(), q.ideal().clone());
                for (m, n) in exponent_grid(mode, max) {
                    let (i, j) = (i.clone(), j.clone());
                    out.push(case(format!("{}/m{m}n{n}", pr.name), move || {
                        lab::verify_ci_product(&i, &j, m, n)
                    }));
                }
            }
            Mode::Sp1 | Mode::Sp2 => {
                for (m, n) in exponent_grid(mode, max) {
                    let (p, q) = (p.clone(), q.clone());
                    out.push(case(format!("{}/m{m}n{n}", pr.name), move || {
                        if mode == Mode::Sp1 {
                            lab::verify_sp1(&p, &q, m)
                        } else {
                            lab::verify_sp2(&p, &q, m, n)
                        }
                    }));
                }
            }
        }
    }
    out
}

fn fixture_cases(args: &VerifyArgs) -> Result<Vec<Case>> {
    let max = args.max_exp;
    let mut out = Vec::new();
    match args.mode {
        Mode::Sp1 | Mode::Sp2 | Mode::Multi | Mode::Affine => {
            let mut pairs = vec![fixtures::coplanar_lines()?];
            pairs.extend(fixtures::transverse_coordinate_splits(4)?);
            pairs.extend(fixtures::theorem_pairs()?);
            out.extend(pair_cases(args.mode, pairs, max));
            if args.mode == Mode::Multi {
                out.extend(multi_fixture_cases()?);
            }
            if args.mode == Mode::Affine {
                out.extend(affine_fixture_cases()?);
            }
        }
        Mode::Regular => {
            out.extend(pair_cases(Mode::Regular, fixtures::regular_case_pairs()?, max));
        }
        Mode::Ci => {
            let mut pairs = fixtures::ci_pairs()?;
            pairs.push(fixtures::ungraded_ci_pair()?);
            for pr in pairs {
                for (m, n) in exponent_grid(Mode::Ci, max) {
                    let (i, j) = (pr.i.clone(), pr.j.clone());
                    out.push(case(format!("{}/m{m}n{n}", pr.name), move || {
                        lab::verify_ci_product(&i, &j, m, n)
                    }));
                }
            }
        }
    }
    Ok(out)
}

fn multi_fixture_cases() -> Result<Vec<Case>> {
    let x3 = PolyRing::indexed("x", 3)?;
    let x4 = PolyRing::indexed("x", 4)?;
    let axes: Vec<PrimeWitness> = (0..3)
        .map(|v| PrimeWitness::coordinate(&x3, &[v]))
        .collect::<Result<_>>()?;
    let planes = vec![
        PrimeWitness::coordinate(&x4, &[0, 1])?,
        PrimeWitness::coordinate(&x4, &[2, 3])?,
    ];
    let mixed = vec![
        PrimeWitness::coordinate(&x4, &[0])?,
        PrimeWitness::coordinate(&x4, &[1, 2])?,
        PrimeWitness::coordinate(&x4, &[3])?,
    ];
    Ok(vec![
        case("coordinate_hyperplanes/1,1,1".into(), move || {
            lab::verify_multi(&axes, &[1, 1, 1])
        }),
        case("planes_in_four_space/2,1".into(), move || {
            lab::verify_multi(&planes, &[2, 1])
        }),
        case("three_coordinate_primes/1,2,1".into(), move || {
            lab::verify_multi(&mixed, &[1, 2, 1])
        }),
    ])
}

fn affine_fixture_cases() -> Result<Vec<Case>> {
    let xyz = PolyRing::rationals(&["x", "y", "z"])?;
    let curve = Arc::new(lab::monomial_curve_prime(&[3, 4, 5], &xyz)?);
    let plane = Arc::new(PrimeWitness::coordinate(&xyz, &[2])?);
    let lines = fixtures::coplanar_lines()?;
    let (p, q) = (lines.p, lines.q);
    let mut out = vec![case("coplanar_lines/shared_variable".into(), move || {
        let f = Polynomial::variable(p.ideal().ring(), 1);
        lab::affine_vanishing_report(&f, &p, &q)
    })];
    let count = curve.symbolic_power(2)?.ideal.generators().len();
    for k in 0..count {
        let (p, q) = (curve.clone(), plane.clone());
        out.push(case(format!("curve345_square_generator_{k}_times_z"), move || {
            let g = p.symbolic_power(2)?.ideal.generators()[k].clone();
            let f = g.multiply(&Polynomial::variable(p.ideal().ring(), 2))?;
            lab::affine_vanishing_report(&f, &p, &q)
        }));
    }
    Ok(out)
}

fn file_case(args: &VerifyArgs, file: &IdealFile) -> Result<Case> {
    let need = |k: usize| -> Result<()> {
        if args.ideals.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{:?} needs exactly {k} ideals (-i), got {}",
                args.mode,
                args.ideals.len()
            )))
        }
    };
    let (m, n) = (args.m, args.n);
    let id = format!("{}/{}", file_label(args), args.ideals.join(","));
    Ok(match args.mode {
        Mode::Multi => {
            if args.ideals.is_empty() || args.exponents.len() != args.ideals.len() {
                return Err(Error::InvalidInput(
                    "multi needs one --exponents entry per ideal".into(),
                ));
            }
            let primes: Vec<PrimeWitness> = args
                .ideals
                .iter()
                .map(|name| file.get(name)?.prime())
                .collect::<Result<_>>()?;
            let exps = args.exponents.clone();
            case(id, move || lab::verify_multi(&primes, &exps))
        }
        Mode::Ci => {
            need(2)?;
            let i = file.get(&args.ideals[0])?.ideal.clone();
            let j = file.get(&args.ideals[1])?.ideal.clone();
            case(id, move || lab::verify_ci_product(&i, &j, m, n))
        }
        mode => {
            need(2)?;
            let p = file.get(&args.ideals[0])?.prime()?;
            let q = file.get(&args.ideals[1])?.prime()?;
            match mode {
                Mode::Sp1 => case(id, move || lab::verify_sp1(&p, &q, m)),
                Mode::Sp2 => case(id, move || lab::verify_sp2(&p, &q, m, n)),
                Mode::Regular => case(id, move || lab::verify_regular_case(&p, &q, m, n)),
                Mode::Affine => {
                    let text = args
                        .poly
                        .as_ref()
                        .ok_or_else(|| Error::InvalidInput("affine needs --poly".into()))?;
                    let f = Polynomial::parse(text, &file.ring)?;
                    case(id, move || lab::affine_vanishing_report(&f, &p, &q))
                }
                Mode::Multi | Mode::Ci => unreachable!("handled above"),
            }
        }
    })
}

fn file_label(args: &VerifyArgs) -> String {
    args.file
        .as_ref()
        .and_then(|p| p.file_stem())
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn report_output(
    command: &str,
    mode: Option<&str>,
    seed: Option<u64>,
    reports: &[(String, VerificationReport)],
    timings: bool,
) -> Output {
    let plain: Vec<VerificationReport> = reports.iter().map(|(_, r)| r.clone()).collect();
    let summary = lab::summarize(&plain);
    let failed = plain.iter().any(|r| r.outcome().is_failure());

    let cases: Vec<Value> = reports
        .iter()
        .map(|(id, r)| json!({ "case": id, "report": r.to_json(timings) }))
        .collect();
    let mut top = json!({
        "command": command,
        "seed": seed,
        "summary": summary,
        "cases": cases,
    });
    if let Some(m) = mode {
        top["mode"] = json!(m);
    }

    let mut text = String::new();
    for (id, r) in reports {
        text.push_str(&format!("{id}: {}", r.outcome()));
        if let Some(w) = &r.witness {
            text.push_str(&format!(" witness={w}"));
        }
        if let Some(h) = &r.hypotheses {
            if !h.all_hold() {
                text.push_str(&format!(
                    " [radical_sum_is_maximal={} dims={:?} dims_sum_to_d={}]",
                    h.radical_sum_is_maximal, h.dims, h.dims_sum_to_d
                ));
            }
        }
        if timings {
            let total: f64 = r.timings.iter().map(|(_, d)| d.as_secs_f64()).sum();
            text.push_str(&format!(" time={total:.6}s"));
        }
        text.push('\n');
    }
    text.push_str(&format!(
        "summary: total={} holds={} inapplicable={} inconclusive={} fails={}",
        summary["total"], summary["holds"], summary["inapplicable"], summary["inconclusive"], summary["fails"]
    ));
    if let Some(s) = seed {
        text.push_str(&format!(" seed={s}"));
    }
    text.push('\n');

    let mut header: Vec<String> = [
        "case",
        "claim",
        "outcome",
        "holds",
        "applicable",
        "certified",
        "witness",
        "radical_sum_is_maximal",
        "dims",
        "dims_sum_to_d",
        "details",
        "notes",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    if timings {
        header.push("timings".into());
    }
    let rows = reports
        .iter()
        .map(|(id, r)| {
            let h = r.hypotheses.as_ref();
            let mut row = vec![
                id.clone(),
                r.claim.clone(),
                r.outcome().to_string(),
                r.holds.to_string(),
                r.applicable.to_string(),
                r.certified.to_string(),
                r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
                h.map(|h| h.radical_sum_is_maximal.to_string()).unwrap_or_default(),
                h.map(|h| h.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default(),
                h.map(|h| h.dims_sum_to_d.to_string()).unwrap_or_default(),
                serde_json::to_string(&r.details).expect("serializable"),
                r.notes.join("; "),
            ];
            if timings {
                row.push(r.to_json(true)["timings"].to_string());
            }
            row
        })
        .collect();

    Output {
        json: top,
        text,
        header,
        rows,
        status: if failed { EXIT_CLAIM_FAILED } else { EXIT_OK },
        warnings: Vec::new(),
    }
}
