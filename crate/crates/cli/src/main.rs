//! `qtcomb`: enumerate decorated families, compute statistics and
//! enumerators, evaluate `F_{n,k;p}^{(d,l)}`, run the bijections and the
//! verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtcomb::bijections::{dyck_to_poly, poly_to_dyck, rise_to_fall, sweep, sweep_inv, zeta, zeta_inv};
use qtcomb::dyck::{
    area, bistatistic, bounce, bounce_word, dd_qt_table, dinv_decorated, dinv_labelled,
    enumerate_dd_filtered, enumerate_pld, features, r_statistic, reading_word,
    shuffle_labellings, DdFilter,
};
use qtcomb::json::{dyck_to_json, pld_to_json, polyomino_to_json};
use qtcomb::polyomino::{
    enumerate_rp, format_path, format_word, poly_bounce_word, poly_dinv, poly_r, rp_qt, PolyFlavor,
};
use qtcomb::verify::{run_suite_with_jobs, Suite};
use qtcomb::{DeltaError, DeltaObject, DyckFlavor, FEvaluator, FIndex, QtPoly};

#[derive(Parser, Debug)]
#[command(name = "qtcomb", version, about = "Decorated Dyck paths, polyominoes and their q,t-enumerators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every object of a family as JSON lines.
    Enumerate(EnumerateArgs),
    /// Statistics of one object given as JSON.
    Stats(InputArgs),
    /// Evaluate F_{n,k;p}^{(d,l)}.
    Fpoly {
        n: u32,
        k: u32,
        p: u32,
        d: u32,
        l: u32,
        #[arg(long)]
        pretty: bool,
    },
    /// Sum of F_{n,k;p}^{(d,l)} over k = 1..=n-l.
    Schroeder {
        n: u32,
        l: u32,
        p: u32,
        d: u32,
        #[arg(long)]
        pretty: bool,
    },
    /// Apply a bijection (or its inverse) to one object.
    Bij(BijArgs),
    /// Run a verification suite and print its JSON report.
    Verify(VerifyArgs),
    /// Write enumerator tables as JSON lines.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    Ddd,
    DdbStar,
    DdbTriangle,
    RpStar,
    RpCirc,
    Pld,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(value_enum)]
    family: Family,
    /// Zero valleys (Dyck families), width (polyominoes) or blank labels (pld).
    #[arg(short = 'm', long = "zero-valleys", default_value_t = 0)]
    first_size: usize,
    /// Other rows (Dyck families), height (polyominoes) or labels (pld).
    #[arg(short = 'n', long = "rows", default_value_t = 0)]
    second_size: usize,
    /// Required value of the r statistic.
    #[arg(short = 'r', long = "r-stat", conflicts_with = "all_r")]
    r_stat: Option<usize>,
    /// Accept every value of r (the default when -r is absent).
    #[arg(long)]
    all_r: bool,
    /// Decorated rises / falls (Dyck families).
    #[arg(short = 'a', long = "rise-marks", default_value_t = 0)]
    rise_marks: usize,
    /// Decorated peaks (Dyck families).
    #[arg(short = 'b', long = "peak-marks", default_value_t = 0)]
    peak_marks: usize,
    /// Decorated unbarred rises / green peaks (polyominoes) or decorated rises (pld).
    #[arg(short = 'k', long = "unbarred-marks", default_value_t = 0)]
    unbarred_marks: usize,
    /// Decorated barred rises / red valleys (polyominoes).
    #[arg(short = 'j', long = "barred-marks", default_value_t = 0)]
    barred_marks: usize,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// A JSON object, `@path` to read one from a file, or `-` for stdin.
    #[arg(long)]
    input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum BijName {
    /// ddd → ddb_triangle (inverse: ddb_triangle → ddd).
    Sweep,
    /// circ polyomino → star polyomino (inverse: star → circ).
    Zeta,
    /// star polyomino → ddd path (inverse: ddd → star).
    #[value(alias = "poly-dyck")]
    PolyDyck,
    /// Fall column matched to a rise row of a path (needs --row).
    #[value(alias = "rise-fall")]
    RiseFall,
}

#[derive(Args, Debug)]
struct BijArgs {
    #[arg(value_enum)]
    name: BijName,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    inverse: bool,
    /// Rise row for `rise_fall`.
    #[arg(long)]
    row: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// recursion, dinv-area, area-bounce, polyomino, sweep, zeta, poly-dyck or all.
    suite: String,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    /// Worker threads (default 1: sequential, reproducible ordering).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Table {
    F,
    Ddd,
    DdbStar,
    DdbTriangle,
    RpStar,
    RpCirc,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(value_enum)]
    table: Table,
    #[arg(long, default_value_t = 5)]
    max_size: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Failure modes of a command, mapped to exit codes.
enum Failure {
    Domain(String),
    Verification,
    /// The reader closed stdout early (e.g. `| head`); not an error.
    Closed,
}

impl From<DeltaError> for Failure {
    fn from(e: DeltaError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Domain(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Enumerate(args) => cmd_enumerate(&args),
        Command::Stats(args) => cmd_stats(&args),
        Command::Fpoly {
            n,
            k,
            p,
            d,
            l,
            pretty,
        } => {
            let value = FEvaluator::from_env().eval(FIndex::new(n, k, p, d, l))?;
            print_poly(&value, pretty)
        }
        Command::Schroeder { n, l, p, d, pretty } => {
            let value = FEvaluator::from_env().schroeder_sum(n, l, p, d)?;
            print_poly(&value, pretty)
        }
        Command::Bij(args) => cmd_bij(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Export(args) => cmd_export(&args),
    }
}

fn sink(output: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match output {
        Some(path) => Box::new(BufWriter::new(fs::File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_input(spec: &str) -> Result<DeltaObject, Failure> {
    let text = if spec == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else if let Some(path) = spec.strip_prefix('@') {
        fs::read_to_string(path)?
    } else {
        spec.to_string()
    };
    Ok(DeltaObject::from_json(text.trim())?)
}

fn print_poly(value: &QtPoly, pretty: bool) -> CmdResult {
    if pretty {
        println!("{}", value.to_pretty());
    } else {
        println!("{}", value.to_json());
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs) -> CmdResult {
    let mut out = sink(&args.output)?;
    let r_stat = if args.all_r { None } else { args.r_stat };
    let dyck_flavor = match args.family {
        Family::Ddd => Some(DyckFlavor::Ddd),
        Family::DdbStar => Some(DyckFlavor::DdbStar),
        Family::DdbTriangle => Some(DyckFlavor::DdbTriangle),
        _ => None,
    };
    if let Some(flavor) = dyck_flavor {
        let filter = DdFilter {
            r_stat,
            rise_marks: Some(args.rise_marks),
            peak_marks: Some(args.peak_marks),
        };
        for path in enumerate_dd_filtered(args.first_size, args.second_size, filter, flavor) {
            writeln!(out, "{}", dyck_to_json(&path))?;
        }
    } else if args.family == Family::Pld {
        for labelled in enumerate_pld(args.first_size, args.second_size, args.unbarred_marks) {
            writeln!(out, "{}", pld_to_json(&labelled))?;
        }
    } else {
        let flavor = if args.family == Family::RpStar {
            PolyFlavor::Star
        } else {
            PolyFlavor::Circ
        };
        for poly in enumerate_rp(
            args.first_size,
            r_stat,
            args.second_size,
            args.unbarred_marks,
            args.barred_marks,
            flavor,
        ) {
            writeln!(out, "{}", polyomino_to_json(&poly))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_stats(args: &InputArgs) -> CmdResult {
    let report = match read_input(&args.input)? {
        DeltaObject::Dyck(d) => dyck_stats(&d)?,
        DeltaObject::Labelled(d, l) => {
            let mut v = dyck_stats(&d)?;
            v["dinv_labelled"] = json!(dinv_labelled(&l));
            v["reading_word"] = json!(reading_word(&l));
            v
        }
        DeltaObject::Polyomino(p) => {
            let bounce = poly_bounce_word(&p);
            let (q_stat, t_stat) = qtcomb::polyomino::poly_bistatistic(&p)?;
            let undecorated_area: u64 = p.word().iter().map(|l| u64::from(l.value)).sum();
            json!({
                "kind": "polyomino",
                "flavor": p.flavor(),
                "width": p.width(),
                "height": p.height(),
                "area_word": format_word(p.word()),
                "red_path": format_path(&p.red_path()),
                "green_path": format_path(&p.green_path()),
                "bounce_word": format_word(&bounce.word),
                "undecorated_area": undecorated_area,
                "dinv": poly_dinv(&p),
                "r": poly_r(&p),
                "bistatistic": [q_stat, t_stat],
                "unbarred_rises": p.unbarred_rises(),
                "barred_rises": p.barred_rises(),
                "green_peaks": p.green_peaks(),
                "red_valleys": p.red_valleys(),
            })
        }
    };
    println!("{}", serde_json::to_string(&report).expect("stats serialize"));
    Ok(())
}

fn dyck_stats(d: &qtcomb::DecoratedDyckPath) -> Result<Value, Failure> {
    let mut v = json!({
        "kind": "dyck",
        "flavor": d.flavor(),
        "size": d.size(),
        "area": area(d),
        "r": r_statistic(d),
        "bistatistic": bistatistic(d),
        "features": features(d.path()),
    });
    match d.flavor() {
        DyckFlavor::Ddd => {
            v["dinv"] = json!(dinv_decorated(d)?);
            let labelled = shuffle_labellings(d)?;
            v["shuffle_labels"] = json!(labelled[0].labels());
            v["reading_word"] = json!(reading_word(&labelled[0]));
        }
        DyckFlavor::DdbStar | DyckFlavor::DdbTriangle => {
            v["bounce"] = json!(bounce(d)?);
            v["bounce_word"] = json!(bounce_word(d.path(), d.zval()).word());
            v["fake_falls"] = json!(d.path().fake_falls(d.zval()));
        }
    }
    Ok(v)
}

fn cmd_bij(args: &BijArgs) -> CmdResult {
    let object = read_input(&args.input.input)?;
    let text = match (args.name, args.inverse) {
        (BijName::Sweep, false) => dyck_to_json(&sweep(&object.into_dyck()?)?),
        (BijName::Sweep, true) => dyck_to_json(&sweep_inv(&object.into_dyck()?)?),
        (BijName::Zeta, false) => polyomino_to_json(&zeta(&object.into_polyomino()?)?),
        (BijName::Zeta, true) => polyomino_to_json(&zeta_inv(&object.into_polyomino()?)?),
        (BijName::PolyDyck, false) => dyck_to_json(&poly_to_dyck(&object.into_polyomino()?)?),
        (BijName::PolyDyck, true) => polyomino_to_json(&dyck_to_poly(&object.into_dyck()?)?),
        (BijName::RiseFall, inverse) => {
            if inverse {
                return Err(Failure::Domain("rise_fall has no --inverse".into()));
            }
            let row = args
                .row
                .ok_or_else(|| Failure::Domain("rise_fall needs --row".into()))?;
            let d = object.into_dyck()?;
            json!({"row": row, "fall_column": rise_to_fall(d.path(), row)?}).to_string()
        }
    };
    println!("{text}");
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let suite: Suite = args.suite.parse()?;
    let report = run_suite_with_jobs(suite, args.max_size, args.jobs)?;
    let mut out = sink(&args.output)?;
    writeln!(out, "{}", report.to_json_pretty())?;
    out.flush()?;
    if report.is_pass() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_export(args: &ExportArgs) -> CmdResult {
    let mut out = sink(&args.output)?;
    let max = args.max_size;
    match args.table {
        Table::F => {
            let ev = FEvaluator::from_env();
            for n in 0..=max as u32 {
                for p in 0..=(max as u32 - n) {
                    for k in 0..=n {
                        for l in 0..=(n - k) {
                            for d in 0..=(n + p) {
                                let idx = FIndex::new(n, k, p, d, l);
                                let value = ev.eval(idx)?;
                                if value.is_zero() {
                                    continue;
                                }
                                let line = json!({"n": n, "k": k, "p": p, "d": d, "l": l, "poly": value});
                                writeln!(out, "{line}")?;
                            }
                        }
                    }
                }
            }
        }
        Table::Ddd | Table::DdbStar | Table::DdbTriangle => {
            let flavor = match args.table {
                Table::Ddd => DyckFlavor::Ddd,
                Table::DdbStar => DyckFlavor::DdbStar,
                _ => DyckFlavor::DdbTriangle,
            };
            for total in 0..=max {
                for m in 0..=total {
                    let n = total - m;
                    for ((r, a, b), value) in dd_qt_table(m, n, flavor) {
                        let line = json!({"flavor": flavor, "m": m, "n": n, "r": r, "a": a, "b": b, "poly": value});
                        writeln!(out, "{line}")?;
                    }
                }
            }
        }
        Table::RpStar | Table::RpCirc => {
            let flavor = if args.table == Table::RpStar {
                PolyFlavor::Star
            } else {
                PolyFlavor::Circ
            };
            for total in 0..=max {
                for m in 0..=total {
                    let n = total - m;
                    for r in 1..=m + 1 {
                        for k in 0..=m + 1 {
                            for j in 0..=n {
                                let value = rp_qt(m, r, n, k, j, flavor);
                                if value.is_zero() {
                                    continue;
                                }
                                let line = json!({"flavor": flavor, "m": m, "r": r, "n": n, "k": k, "j": j, "poly": value});
                                writeln!(out, "{line}")?;
                            }
                        }
                    }
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}
