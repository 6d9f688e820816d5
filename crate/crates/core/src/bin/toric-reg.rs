use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use toric_reg::analysis::{analyze, corpus_csv, AnalyzeOptions};
use toric_reg::classify::{classify, Verdict};
use toric_reg::cm_reg::{degree, eg_check, reg, RegOptions};
use toric_reg::generate::{generate, Family, GenParams};
use toric_reg::homology::Field;
use toric_reg::instance::{instance_hash, instance_json, read_instance};
use toric_reg::lattice::{hilbert_function, SumsetTower, DEFAULT_MAX_SLICE};
use toric_reg::plot::sumset_svg;
use toric_reg::sumset_reg::{normal_frame, sigma, verify_sigma_bounds};
use toric_reg::{Error, GeneratorSet, Result};

#[derive(Parser)]
#[command(name = "toric-reg", version, about = "Sumsets and regularity of simplicial toric varieties")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Coefficient field for homology: q, f2 or f32003.
    #[arg(long, global = true, default_value = "q")]
    field: Field,
    /// Last level swept for sets that are neither smooth nor one-singular.
    #[arg(long, global = true)]
    cutoff: Option<u32>,
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest simplex slice, in lattice points.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SLICE)]
    max_slice: u64,
    /// Leave stage timings out of the output.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classification, σ, reg, degree and the Eisenbud–Goto check.
    Analyze { path: PathBuf },
    /// Emit an instance of a family.
    Gen(GenArgs),
    /// SVG of sA inside Δ_{s,e} (d = 2 only).
    Plot {
        path: PathBuf,
        #[arg(long)]
        s: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Points of sA, or only their number.
    Sumset {
        path: PathBuf,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        count: bool,
    },
    /// |sA| for s = 0..=s-max.
    Hilbert {
        path: PathBuf,
        #[arg(long)]
        s_max: u32,
    },
    Classify { path: PathBuf },
    Sigma { path: PathBuf },
    Reg { path: PathBuf },
    Degree { path: PathBuf },
    EgCheck { path: PathBuf },
    /// One CSV row per *.json file in a directory.
    Corpus { dir: PathBuf },
}

#[derive(Args)]
struct GenArgs {
    /// minimal-smooth, veronese, one-singular, smooth-superset, paper-sec1, ex1sing
    /// or ex1sing2.
    family: Family,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long = "D", default_value_t = 4)]
    degree: i64,
    #[arg(long, default_value_t = 1)]
    e: i64,
    #[arg(long, default_value_t = 0)]
    extra: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Serialize)]
struct Tagged<T: Serialize> {
    schema: &'static str,
    instance_hash: String,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(a: &GeneratorSet, body: T) -> Result<()> {
    let v = Tagged {
        schema: toric_reg::analysis::SCHEMA,
        instance_hash: instance_hash(a),
        body,
    };
    print_out(&(serde_json::to_string_pretty(&v)? + "\n"))
}

fn print_out(s: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => print_out(text),
    }
}

fn reg_options(c: &Common) -> RegOptions {
    RegOptions {
        field: c.field,
        cutoff: c.cutoff,
        max_slice: c.max_slice,
        ..RegOptions::default()
    }
}

fn run(cli: Cli) -> Result<()> {
    let c = &cli.common;
    if let Some(n) = c.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Parameter(e.to_string()))?;
    }
    let opts = AnalyzeOptions {
        reg: reg_options(c),
        timings: !c.no_timings,
    };
    match &cli.cmd {
        Cmd::Analyze { path } => {
            let b = analyze(&read_instance(path)?, &opts)?;
            print_out(&(serde_json::to_string_pretty(&b)? + "\n"))
        }
        Cmd::Gen(g) => {
            let p = GenParams {
                d: g.d,
                degree: g.degree,
                e: g.e,
                extra: g.extra,
                seed: g.seed,
            };
            write_or_print(g.output.as_deref(), &instance_json(&generate(g.family, &p)?))
        }
        Cmd::Plot { path, s, output } => {
            let mut t = SumsetTower::with_max_slice(read_instance(path)?, c.max_slice);
            let (svg, counts) = sumset_svg(&mut t, *s)?;
            eprintln!("{} filled, {} hollow", counts.filled, counts.hollow);
            write_or_print(output.as_deref(), &svg)
        }
        Cmd::Sumset { path, s, count } => {
            let a = read_instance(path)?;
            let mut t = SumsetTower::with_max_slice(a.clone(), c.max_slice);
            let lv = t.sumset(*s)?;
            let points: Option<Vec<Vec<i64>>> = (!count).then(|| lv.points().map(Vec::from).collect());
            emit(
                &a,
                serde_json::json!({
                    "s": s,
                    "cardinality": lv.cardinality(),
                    "slice_size": lv.slice().size(),
                    "points": points,
                }),
            )
        }
        Cmd::Hilbert { path, s_max } => {
            let a = read_instance(path)?;
            let mut t = SumsetTower::with_max_slice(a.clone(), c.max_slice);
            let h = hilbert_function(&mut t, *s_max)?;
            emit(&a, serde_json::json!({ "hilbert": h }))
        }
        Cmd::Classify { path } => {
            let a = read_instance(path)?;
            emit(&a, classify(&a)?)
        }
        Cmd::Sigma { path } => {
            let a = read_instance(path)?;
            let r = classify(&a)?;
            if r.verdict == Verdict::Other {
                return Err(Error::Unsupported("σ is defined for smooth and one-singular sets".into()));
            }
            let mut t = SumsetTower::with_max_slice(normal_frame(&a, &r)?, c.max_slice);
            let s = sigma(&mut t, &r)?;
            let check = verify_sigma_bounds(&s);
            emit(&a, serde_json::json!({ "sigma": s, "bounds_check": check, "frame_vertex": r.singular_vertex.unwrap_or(0) }))
        }
        Cmd::Reg { path } => {
            let a = read_instance(path)?;
            emit(&a, reg(&a, &reg_options(c))?)
        }
        Cmd::Degree { path } => {
            let a = read_instance(path)?;
            emit(&a, degree(&a)?)
        }
        Cmd::EgCheck { path } => {
            let a = read_instance(path)?;
            let r = reg(&a, &reg_options(c))?;
            let verdict = if a.coordinate_gcd() == 1 { Some(classify(&a)?.verdict) } else { None };
            let deg = degree(&a)?;
            emit(&a, eg_check(r.reg, &deg, verdict, a.dim())?)
        }
        Cmd::Corpus { dir } => print_out(&corpus_csv(dir, &opts)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("toric-reg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
