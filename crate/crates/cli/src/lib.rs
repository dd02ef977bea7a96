//! The `horadam` command-line tool.

pub mod cache;
pub mod error;
pub mod specs;
pub mod suite;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use horadam_core::binomials::{fbinomial, fmultinomial, BinomialTable};
use horadam_core::horadam::{HoradamSpec, SequenceCache};
use horadam_core::oracles;
use horadam_core::recurrences::CoeffFamily;
use horadam_core::report::{Report, Status};
use horadam_core::RingScalar;
use serde::Serialize;
use serde_json::{json, Value};

pub use error::CliError;
use specs::parse_spec;
use suite::{family_report, run_suite, SuiteConfig, VWEIGHTED};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleKind {
    Binomial,
    MultinomialSlice,
}

impl TriangleKind {
    fn tag(self, slice: usize) -> String {
        match self {
            Self::Binomial => "binomial".into(),
            Self::MultinomialSlice => format!("multinomial-slice:{slice}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "horadam", version, about = "Exact Ward-Horadam sequences and generalized binomial arrays")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Triangle cache file (JSON lines). Defaults to $HORADAM_CACHE_DIR/triangles.jsonl.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Upper bound on n.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print H_0 ..= H_N.
    Seq {
        #[arg(long)]
        spec: String,
    },
    /// One F-binomial (n; k), or an F-multinomial with --parts.
    Binom {
        #[arg(long)]
        spec: String,
        #[arg(long, required_unless_present = "parts")]
        n: Option<usize>,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "parts")]
        k: Option<i64>,
        /// Comma-separated parts, e.g. 2,1,1.
        #[arg(long, allow_negative_numbers = true, value_delimiter = ',', conflicts_with_all = ["n", "k"])]
        parts: Option<Vec<i64>>,
    },
    /// Emit the triangle of cells (n, k) for n <= N.
    Triangle {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value = "binomial")]
        kind: TriangleKind,
        /// Fixed last part j of the multinomial slice (n; k, n-k-j, j).
        #[arg(long, default_value_t = 1)]
        slice: usize,
    },
    /// Check the Pascal-type recurrence for a coefficient family.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        spec: String,
    },
    /// Run a brute-force oracle.
    Oracle {
        #[arg(long)]
        which: String,
        /// Comma-separated arguments.
        #[arg(long, allow_negative_numbers = true, value_delimiter = ',')]
        args: Vec<String>,
    },
    /// Run a verification suite from a JSON config (defaults when omitted).
    Suite {
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

/// Report as emitted by the tool, with a wall-clock stamp outside the compared content.
#[derive(Serialize)]
struct Envelope<'a> {
    generated_at_unix: u64,
    #[serde(flatten)]
    report: &'a Report,
}

fn now_unix() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

fn write_report(out: &mut dyn Write, report: &Report, format: Format) -> Result<(), CliError> {
    let io = CliError::io("writing output");
    match format {
        Format::Json => {
            let env = Envelope { generated_at_unix: now_unix(), report };
            let text = serde_json::to_string_pretty(&env).expect("reports serialize");
            writeln!(out, "{text}").map_err(io)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "indices", "status", "lhs", "rhs", "note"])?;
            for rec in &report.records {
                let idx = rec.indices.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
                let side = |v: &Option<Value>| v.as_ref().map(compact).unwrap_or_default();
                w.write_record([
                    rec.check.as_str(),
                    &idx,
                    status_word(rec.status),
                    &side(&rec.lhs),
                    &side(&rec.rhs),
                    rec.note.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush().map_err(io)
        }
        Format::Text => {
            let s = &report.summary;
            let mut text = format!(
                "{}: {} checks, {} passed, {} failed, {} skipped\n",
                report.engine_version, s.total, s.passed, s.failed, s.skipped
            );
            for rec in report.failures() {
                text.push_str(&format!(
                    "FAIL {} {:?}: {} != {}{}\n",
                    rec.check,
                    rec.indices,
                    rec.lhs.as_ref().map(compact).unwrap_or_default(),
                    rec.rhs.as_ref().map(compact).unwrap_or_default(),
                    rec.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
                ));
            }
            out.write_all(text.as_bytes()).map_err(io)
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

/// Strings without quotes, everything else as compact JSON.
fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn report_exit(report: &Report) -> u8 {
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn triangle_cells(
    spec: &HoradamSpec,
    kind: TriangleKind,
    slice: usize,
    max_n: usize,
) -> Result<Vec<(usize, usize, RingScalar)>, CliError> {
    let mut cells = Vec::new();
    match kind {
        TriangleKind::Binomial => {
            let table = BinomialTable::build(spec, max_n)?;
            cells.extend(table.cells().map(|(n, k, v)| (n, k, v.clone())));
        }
        TriangleKind::MultinomialSlice => {
            let seq = SequenceCache::new(spec.clone());
            for n in 0..=max_n {
                for k in 0..=n {
                    let middle = n as i64 - k as i64 - slice as i64;
                    cells.push((n, k, fmultinomial(&seq, &[k as i64, middle, slice as i64])?));
                }
            }
        }
    }
    Ok(cells)
}

fn emit_triangle(
    out: &mut dyn Write,
    spec: &HoradamSpec,
    kind: TriangleKind,
    slice: usize,
    max_n: usize,
    format: Format,
    cache_path: Option<&Path>,
) -> Result<(), CliError> {
    let mut cache = match cache_path {
        Some(path) => Some(cache::TriangleCache::open(path, cache::spec_hash(&kind.tag(slice), spec))?),
        None => None,
    };
    let complete = cache.as_ref().is_some_and(|c| (0..=max_n).all(|n| (0..=n).all(|k| c.get(n, k).is_some())));
    let cells = if complete {
        let c = cache.as_ref().expect("checked");
        (0..=max_n)
            .flat_map(|n| (0..=n).map(move |k| (n, k)))
            .map(|(n, k)| (n, k, c.get(n, k).expect("checked").clone()))
            .collect()
    } else {
        let cells = triangle_cells(spec, kind, slice, max_n)?;
        if let Some(c) = cache.as_mut() {
            let missing = cells.iter().filter(|(n, k, _)| c.get(*n, *k).is_none()).cloned().collect();
            c.append(missing)?;
        }
        cells
    };

    let io = CliError::io("writing output");
    match format {
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "k", "value"])?;
            for (n, k, v) in &cells {
                w.write_record([n.to_string(), k.to_string(), v.to_wire()])?;
            }
            w.flush().map_err(io)
        }
        Format::Json => {
            let rows: Vec<Value> = cells.iter().map(|(n, k, v)| json!({"n": n, "k": k, "value": v})).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("cells serialize")).map_err(io)
        }
    }
}

fn usize_arg(args: &[String], i: usize, which: &str) -> Result<usize, CliError> {
    args.get(i)
        .ok_or_else(|| CliError::Usage(format!("oracle {which} expects more arguments")))?
        .trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("oracle {which} argument {}: {e}", i + 1)))
}

fn scalar_arg(args: &[String], i: usize, which: &str) -> Result<RingScalar, CliError> {
    let text = args.get(i).ok_or_else(|| CliError::Usage(format!("oracle {which} expects more arguments")))?;
    RingScalar::from_wire(text).map_err(|e| CliError::Usage(format!("oracle {which} argument {}: {e}", i + 1)))
}

/// Oracle names accepted by `oracle --which`.
pub const ORACLES: [&str; 10] = [
    "box-partitions",
    "zigzag-area",
    "inversions",
    "gaussian",
    "subspaces",
    "tilings",
    "bracelets",
    "md-fibonomial",
    "errata-fibonomial",
    "md-ubinomial",
];

fn run_oracle(which: &str, args: &[String]) -> Result<Value, CliError> {
    let n = |i| usize_arg(args, i, which);
    let expect = |count: usize| {
        if args.len() == count {
            Ok(())
        } else {
            Err(CliError::Usage(format!("oracle {which} takes {count} arguments, got {}", args.len())))
        }
    };
    let poly = |p| serde_json::to_value(RingScalar::from_poly(p)).expect("scalars serialize");
    let value = match which {
        "box-partitions" => {
            expect(2)?;
            poly(oracles::partitions_in_box_gf(n(0)?, n(1)?))
        }
        "zigzag-area" | "inversions" | "gaussian" => {
            expect(2)?;
            let (a, b) = (n(0)?, n(1)?);
            if b > a {
                return Err(CliError::Usage(format!("oracle {which} needs k <= n")));
            }
            match which {
                "zigzag-area" => poly(oracles::zigzag_area_gf(a, b)),
                "inversions" => poly(oracles::inversion_gf(a, b)),
                _ => poly(oracles::gaussian_binomial(a, b)?),
            }
        }
        "subspaces" => {
            expect(3)?;
            json!(oracles::subspace_count(n(0)?, n(1)?, n(2)? as u32)?)
        }
        "tilings" => {
            expect(3)?;
            json!(oracles::colored_tilings(n(0)?, n(1)? as u32, n(2)? as u32))
        }
        "bracelets" => {
            expect(3)?;
            json!(oracles::colored_bracelets(n(0)?, n(1)? as u32, n(2)? as u32)?)
        }
        "md-fibonomial" => {
            expect(2)?;
            json!(oracles::md_fibonomial(n(0)?, n(1)?).to_string())
        }
        "errata-fibonomial" => {
            expect(2)?;
            json!(oracles::errata_fibonomial(n(0)?, n(1)?)?.to_string())
        }
        "md-ubinomial" => {
            expect(4)?;
            let (s, t) = (scalar_arg(args, 2, which)?, scalar_arg(args, 3, which)?);
            serde_json::to_value(oracles::md_ubinomial(n(0)?, n(1)?, &s, &t)).expect("scalars serialize")
        }
        other => {
            return Err(CliError::Usage(format!("unknown oracle {other:?}; expected one of {}", ORACLES.join(", "))))
        }
    };
    Ok(json!({"oracle": which, "args": args, "value": value}))
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("values serialize")).map_err(CliError::io("writing output"))
}

fn run_command(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let io = || CliError::io("writing output");
    let cache_path = cache::resolve_path(cli.cache.as_deref());
    match &cli.command {
        Command::Seq { spec } => {
            let spec = parse_spec(spec)?;
            let max_n = cli.max_n.unwrap_or(10);
            let values = SequenceCache::new(spec).prefix(max_n);
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => {
                    let rows: Vec<Value> = values.iter().enumerate().map(|(n, v)| json!({"n": n, "value": v})).collect();
                    write_json(out, &Value::Array(rows))?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["n", "value"])?;
                    for (n, v) in values.iter().enumerate() {
                        w.write_record([n.to_string(), v.to_wire()])?;
                    }
                    w.flush().map_err(io())?;
                }
                Format::Text => {
                    let text: String = values.iter().enumerate().map(|(n, v)| format!("{n} {v}\n")).collect();
                    out.write_all(text.as_bytes()).map_err(io())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Binom { spec, n, k, parts } => {
            let spec = parse_spec(spec)?;
            let value = match (parts, n, k) {
                (Some(parts), _, _) => fmultinomial(&spec, parts)?,
                (None, Some(n), Some(k)) => fbinomial(&spec, *n, *k)?,
                _ => return Err(CliError::Usage("binom needs --n and --k, or --parts".into())),
            };
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => write_json(out, &json!({"value": value}))?,
                _ => writeln!(out, "{}", value.to_wire()).map_err(io())?,
            }
            Ok(EXIT_OK)
        }
        Command::Triangle { spec, kind, slice } => {
            let spec = parse_spec(spec)?;
            let format = cli.format.unwrap_or(Format::Csv);
            emit_triangle(out, &spec, *kind, *slice, cli.max_n.unwrap_or(10), format, cache_path.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Verify { family, spec } => {
            if family != VWEIGHTED && !CoeffFamily::NAMES.contains(&family.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown family {family:?}; expected one of {}, {VWEIGHTED}",
                    CoeffFamily::NAMES.join(", ")
                )));
            }
            let spec = parse_spec(spec)?;
            let report = family_report(&spec, family, cli.max_n.unwrap_or(10))?;
            write_report(out, &report, cli.format.unwrap_or(Format::Json))?;
            Ok(report_exit(&report))
        }
        Command::Oracle { which, args } => {
            let value = run_oracle(which, args)?;
            write_json(out, &value)?;
            Ok(EXIT_OK)
        }
        Command::Suite { config } => {
            let mut config = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        CliError::Usage(format!("cannot read config {}: {e}", path.display()))
                    })?;
                    SuiteConfig::from_json(&text)?
                }
                None => SuiteConfig::default(),
            };
            if let Some(n) = cli.max_n {
                config.max_n = n;
            }
            if cli.cache.is_some() {
                config.cache = cli.cache.clone();
            }
            let format = match (cli.format, config.format.as_deref()) {
                (Some(f), _) => f,
                (None, None) => Format::Json,
                (None, Some(name)) => Format::from_str(name, true)
                    .map_err(|_| CliError::Usage(format!("unknown format {name:?} in config")))?,
            };
            let report = run_suite(&config)?;
            write_report(out, &report, format)?;
            Ok(report_exit(&report))
        }
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match run_command(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "horadam: {e}");
            e.exit_code()
        }
    }
}
