use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gendelta::delta_side::{self, DeltaSide, Flavor};
use gendelta::macdonald::Macdonald;
use gendelta::omp::{self, Omp, Restriction, Stat};
use gendelta::paths::{enumerate_pld, PldPath};
use gendelta::symfunc::{Basis, Partition};
use gendelta::verify::{self, Verifier};

const THREADS_ENV: &str = "GENDELTA_THREADS";

/// Exact computations with Delta operators at q=0 or t=0, decorated Dyck
/// paths and ordered multiset partitions.
///
/// The thread count is taken from GENDELTA_THREADS (default: all cores).
/// The resolved configuration of every run is echoed to stderr as a line
/// starting with '#'.
#[derive(Parser, Debug)]
#[command(name = "gendelta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List PLD(m,n)^{*k}: paths with m zero labels, n positive labels and k decorated rises.
    EnumeratePaths {
        #[command(flatten)]
        size: Size,
        /// Largest positive label [default: n]
        #[arg(long)]
        max_label: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List OP(m,n)^k: m zeros, n positive letters from 1..n, m+k blocks.
    EnumerateOmps {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = RestrictionArg::None)]
        restriction: RestrictionArg,
        /// Only standard partitions (each letter 1..n once)
        #[arg(long)]
        standard: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Statistics of single objects, or of every partition in OP(m,n)^k.
    ///
    /// With --omp or --path, prints (object, inv, dinv, maj) or (object, area,
    /// dinv). Otherwise tabulates OP(m,n)^k; with --stat it prints the
    /// enumerator sum q^stat x^pi in the monomial basis instead.
    Stat {
        /// Ordered multiset partition such as "10|1|320|21" (repeatable)
        #[arg(long)]
        omp: Vec<Omp>,
        /// Path such as "NNEE [1,2] *{2}" (repeatable)
        #[arg(long)]
        path: Vec<PldPath>,
        #[command(flatten)]
        size: OptSize,
        #[arg(long, value_enum, default_value_t = RestrictionArg::None)]
        restriction: RestrictionArg,
        #[arg(long, value_enum)]
        stat: Option<StatArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply one map: xi and eta send paths to partitions (or back with
    /// --inverse), phi and theta act on partitions.
    Bijection {
        #[arg(long, value_enum)]
        map: MapArg,
        #[arg(long)]
        inverse: bool,
        /// The object, in printed form
        object: String,
    },
    /// Delta_{h_m} Delta'_{e_{k-1}} e_n at t=0 (--flavor q) or q=0 (--flavor t), in the monomial basis.
    Delta {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, value_enum, default_value_t = FlavorArg::Q)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every verification suite up to the given total size; exit 1 on any failure.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_total: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Only the main theorem
        #[arg(long)]
        main_only: bool,
        /// Include wall times (output is then no longer reproducible)
        #[arg(long)]
        timing: bool,
    },
    /// Schur expansions of the modified Macdonald polynomials of degree n, as JSON.
    DumpMacdonald {
        #[arg(long)]
        n: u32,
    },
    /// Focused identity checks.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// The identities on the Delta side, as CSV (identity, parameters, result).
    DeltaSide {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
}

#[derive(Args, Debug)]
struct Size {
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
}

#[derive(Args, Debug)]
struct OptSize {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RestrictionArg {
    None,
    #[value(name = "L")]
    L,
    #[value(name = "R")]
    R,
}

impl From<RestrictionArg> for Restriction {
    fn from(r: RestrictionArg) -> Self {
        match r {
            RestrictionArg::None => Restriction::None,
            RestrictionArg::L => Restriction::L,
            RestrictionArg::R => Restriction::R,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StatArg {
    Inv,
    Dinv,
    Maj,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Self {
        match s {
            StatArg::Inv => Stat::Inv,
            StatArg::Dinv => Stat::Dinv,
            StatArg::Maj => Stat::Maj,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Q,
    T,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapArg {
    Xi,
    Eta,
    Phi,
    Theta,
}

type Run = Result<(String, bool), String>;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn omp_row(pi: &Omp) -> (String, u32, u32, u32) {
    (pi.to_string(), omp::inv(pi), omp::dinv(pi), omp::maj(pi))
}

fn omp_table(objs: &[Omp], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for pi in objs {
                let (s, i, d, m) = omp_row(pi);
                writeln!(out, "{s}  inv={i}  dinv={d}  maj={m}").unwrap();
            }
        }
        Format::Csv => {
            out.push_str("omp,inv,dinv,maj\n");
            for pi in objs {
                let (s, i, d, m) = omp_row(pi);
                writeln!(out, "\"{s}\",{i},{d},{m}").unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<_> = objs
                .iter()
                .map(|pi| {
                    let (s, i, d, m) = omp_row(pi);
                    json!({"omp": s, "inv": i, "dinv": d, "maj": m})
                })
                .collect();
            out = serde_json::to_string_pretty(&rows).unwrap() + "\n";
        }
    }
    out
}

fn path_table(paths: &[PldPath], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for p in paths {
                writeln!(out, "{p}  area={}  dinv={}", p.area(), p.dinv()).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("path,area,dinv\n");
            for p in paths {
                writeln!(out, "\"{p}\",{},{}", p.area(), p.dinv()).unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<_> = paths.iter().map(|p| json!({"path": p, "area": p.area(), "dinv": p.dinv()})).collect();
            out = serde_json::to_string_pretty(&rows).unwrap() + "\n";
        }
    }
    out
}

fn bijection(map: MapArg, inverse: bool, object: &str) -> Run {
    let out = match (map, inverse) {
        (MapArg::Xi, false) => omp::xi(&object.parse::<PldPath>().map_err(err)?).map_err(err)?.to_string(),
        (MapArg::Eta, false) => omp::eta(&object.parse::<PldPath>().map_err(err)?).map_err(err)?.to_string(),
        (MapArg::Xi, true) => omp::xi_inv(&object.parse::<Omp>().map_err(err)?).map_err(err)?.to_string(),
        (MapArg::Eta, true) => omp::eta_inv(&object.parse::<Omp>().map_err(err)?).map_err(err)?.to_string(),
        (MapArg::Phi, false) => omp::phi(&object.parse::<Omp>().map_err(err)?).to_string(),
        (MapArg::Theta, false) => omp::theta(&object.parse::<Omp>().map_err(err)?).to_string(),
        (MapArg::Phi | MapArg::Theta, true) => return Err("phi and theta have no --inverse here".into()),
    };
    Ok((out + "\n", true))
}

fn run(cmd: Command) -> Run {
    match cmd {
        Command::EnumeratePaths { size, max_label, format } => {
            let paths = enumerate_pld(size.m, size.n, size.k, max_label.unwrap_or(size.n as u32));
            Ok((path_table(&paths, format), true))
        }
        Command::EnumerateOmps { size, restriction, standard, format } => {
            let objs = omp::enumerate_omp(size.m, size.n, size.k, restriction.into(), standard);
            Ok((omp_table(&objs, format), true))
        }
        Command::Stat { omp, path, size, restriction, stat, format } => {
            if !omp.is_empty() || !path.is_empty() {
                let mut out = String::new();
                if !omp.is_empty() {
                    out += &omp_table(&omp, format);
                }
                if !path.is_empty() {
                    out += &path_table(&path, format);
                }
                return Ok((out, true));
            }
            let (Some(m), Some(n), Some(k)) = (size.m, size.n, size.k) else {
                return Err("give --omp, --path, or all of --m --n --k".into());
            };
            match stat {
                Some(s) => {
                    let f = omp::omp_qenum_symfun(m, n, k, s.into(), restriction.into());
                    let out = match format {
                        Format::Text => format!("{f}\n"),
                        Format::Json => f.to_json() + "\n",
                        Format::Csv => format!("m,n,k,stat,restriction,polynomial\n{m},{n},{k},{},{},\"{f}\"\n", Stat::from(s), Restriction::from(restriction).name()),
                    };
                    Ok((out, true))
                }
                None => Ok((omp_table(&omp::enumerate_omp(m, n, k, restriction.into(), false), format), true)),
            }
        }
        Command::Bijection { map, inverse, object } => bijection(map, inverse, &object),
        Command::Delta { n, k, m, flavor, format } => {
            let flavor = match flavor {
                FlavorArg::Q => Flavor::QSide,
                FlavorArg::T => Flavor::TSide,
            };
            let c = DeltaSide::new(n).cpoly(n, k, m, flavor).map_err(err)?;
            let f = c.value.to_basis(Basis::M);
            let out = match format {
                Format::Text => format!("{f}\n"),
                Format::Json => f.to_json() + "\n",
                Format::Csv => format!("n,k,m,flavor,polynomial\n{n},{k},{m},{},\"{f}\"\n", flavor.name()),
            };
            Ok((out, true))
        }
        Command::Verify { max_total, format, main_only, timing } => {
            let v = Verifier::new(max_total);
            let reports = if main_only { v.verify_main_theorem(max_total) } else { v.verify_all(max_total) };
            let out = match format {
                ReportFormat::Json => verify::to_json(&reports, timing) + "\n",
                ReportFormat::Csv => verify::to_csv(&reports, timing),
            };
            Ok((out, verify::all_passed(&reports)))
        }
        Command::DumpMacdonald { n } => {
            let mac = Macdonald::new(n);
            let mut entries = Vec::new();
            for mu in Partition::all(n) {
                let h = mac.htilde(&mu).map_err(err)?;
                entries.push(json!({"mu": mu, "schur": h.to_json_value()}));
            }
            Ok((serde_json::to_string_pretty(&json!({"n": n, "entries": entries})).unwrap() + "\n", true))
        }
        Command::Check { what: CheckCommand::DeltaSide { max_n } } => {
            let rows = DeltaSide::new(max_n).run_suite(max_n);
            let ok = rows.iter().all(|r| r.passed);
            Ok((delta_side::to_csv(&rows), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let threads = match std::env::var(THREADS_ENV) {
        Ok(s) => match s.parse::<usize>() {
            Ok(t) => t,
            Err(_) => {
                eprintln!("error: {THREADS_ENV} must be a nonnegative integer, got {s:?}");
                return ExitCode::from(2);
            }
        },
        Err(_) => 0,
    };
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    eprintln!("# threads={} {:?}", rayon::current_num_threads(), cli.command);
    match run(cli.command) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
