use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sigb::bench::{self, EngineKind, ReportRow, SystemSpec, TableFormat, VariantConfig};
use sigb::f4engine::matrixf5;
use sigb::{Error, ModuleOrderKind, ReductionMode, Result, RewriteOrder};

#[derive(Parser)]
#[command(name = "sigb", version, about = "Signature-based Gröbner basis benchmarks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a named benchmark system (cyclic, eco, katsura, noon).
    Gen {
        name: String,
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Homogenize with an extra last variable `h`.
        #[arg(long)]
        homogenize: bool,
    },
    /// Write a seeded random dense system.
    Random {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        dmin: u32,
        #[arg(long)]
        dmax: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        homogeneous: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run one engine variant and print its statistics as JSON.
    Run(RunArgs),
    /// Collect stats JSON files into a grid.
    Table {
        files: Vec<PathBuf>,
        #[arg(long, default_value = "md")]
        format: String,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// System file, or a named system such as `cyclic-7`.
    #[arg(short, long)]
    system: String,
    #[arg(long, default_value = "pot")]
    module_order: ModuleOrderKind,
    #[arg(long, default_value = "add")]
    rewrite: RewriteOrder,
    #[arg(long, default_value = "top")]
    reduction: ReductionMode,
    #[arg(long, default_value = "rb")]
    engine: EngineKind,
    /// F5C-style interreduction between incremental steps (pot only).
    #[arg(long)]
    interreduce: bool,
    /// Add principal syzygy signatures for every new basis element.
    #[arg(long)]
    gvw2013: bool,
    /// Treat lower generator indices as greater.
    #[arg(long)]
    legacy_index: bool,
    /// Homogenize the system before running.
    #[arg(long)]
    homogenize: bool,
    /// Compare the result against the Buchberger oracle.
    #[arg(long)]
    verify: bool,
    /// Also write the statistics to this file.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Print the basis after the statistics.
    #[arg(long)]
    print_basis: bool,
    /// Run the degree-by-degree Macaulay-matrix mode instead (homogeneous input).
    #[arg(long)]
    matrixf5: bool,
    #[arg(long, requires = "matrixf5")]
    degree_bound: Option<u32>,
}

/// Accepts the single-dash long flags `-dmin` and `-dmax`.
fn normalize_args(args: impl IntoIterator<Item = String>) -> Vec<String> {
    args.into_iter()
        .map(|a| match a.as_str() {
            "-dmin" | "-dmax" => format!("-{a}"),
            _ if a.starts_with("-dmin=") || a.starts_with("-dmax=") => format!("-{a}"),
            _ => a,
        })
        .collect()
}

fn write_out(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn load_system(s: &str) -> Result<SystemSpec> {
    let path = Path::new(s);
    if path.exists() {
        return bench::parse_system(&read(path)?);
    }
    match s.rsplit_once('-') {
        Some((name, n)) if n.parse::<usize>().is_ok() => bench::gen_named(name, n.parse().unwrap()),
        _ => Err(Error::InvalidArgument(format!("no such file or named system `{s}`"))),
    }
}

fn run(a: RunArgs) -> Result<()> {
    let mut spec = load_system(&a.system)?;
    if a.homogenize {
        spec = bench::homogenize(&spec);
    }
    if a.matrixf5 {
        let bound = a.degree_bound.ok_or_else(|| Error::InvalidArgument("--matrixf5 needs --degree-bound".into()))?;
        let st = matrixf5(&spec.ring, &spec.gens, a.module_order, bound, a.reduction)?;
        let steps: Vec<serde_json::Value> = st
            .steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "degree": s.degree,
                    "rows": s.dims.0,
                    "cols": s.dims.1,
                    "deleted_rows": s.deleted_rows.len(),
                    "new_elements": s.new_elements.iter().map(|(g, p)| format!("{} -> {}", g.display_with(&spec.ring.vars), p.display(&spec.ring))).collect::<Vec<_>>(),
                })
            })
            .collect();
        let out = serde_json::json!({ "system": spec.label(), "stats": st.stats, "steps": steps });
        let text = serde_json::to_string_pretty(&out).expect("json") + "\n";
        if let Some(p) = &a.stats {
            write_out(&text, Some(p))?;
        }
        print!("{text}");
        return Ok(());
    }
    let cfg = VariantConfig {
        module_order: a.module_order,
        rewrite: a.rewrite,
        reduction: a.reduction,
        engine: a.engine,
        interreduce: a.interreduce,
        gvw2013: a.gvw2013,
        legacy_index_direction: a.legacy_index,
        verify: a.verify,
    };
    let row = bench::run_variant(&spec, &cfg)?;
    let text = serde_json::to_string_pretty(&row).expect("json") + "\n";
    if let Some(p) = &a.stats {
        write_out(&text, Some(p))?;
    }
    print!("{text}");
    if a.print_basis {
        let basis = match a.engine {
            EngineKind::Buchberger => {
                let mut st = sigb::RunStats::default();
                sigb::buchberger(&spec.ring, &spec.gens, Default::default(), &mut st)?
            }
            _ => sigb::compute(&spec.ring, &spec.gens, &cfg.engine_config())?.polys(),
        };
        for p in basis {
            println!("{}", p.display(&spec.ring));
        }
    }
    if row.verified == Some(false) {
        return Err(Error::InvalidArgument("result differs from the Buchberger oracle".into()));
    }
    Ok(())
}

fn table(files: &[PathBuf], format: &str) -> Result<()> {
    let format: TableFormat = format.parse()?;
    let mut rows: Vec<ReportRow> = Vec::new();
    for f in files {
        let text = read(f)?;
        let bad = |e: serde_json::Error| Error::InvalidArgument(format!("{}: {e}", f.display()));
        if text.trim_start().starts_with('[') {
            rows.extend(serde_json::from_str::<Vec<ReportRow>>(&text).map_err(bad)?);
        } else {
            rows.push(serde_json::from_str(&text).map_err(bad)?);
        }
    }
    let mut out = bench::emit_table(&rows, format);
    if !out.ends_with('\n') {
        out.push('\n');
    }
    write_out(&out, None)
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(normalize_args(std::env::args()));
    let res = match cli.cmd {
        Cmd::Gen {
            name,
            n,
            output,
            homogenize,
        } => bench::gen_named(&name, n).and_then(|s| {
            let s = if homogenize { bench::homogenize(&s) } else { s };
            write_out(&bench::emit_system(&s), output.as_deref())
        }),
        Cmd::Random {
            n,
            dmin,
            dmax,
            seed,
            homogeneous,
            output,
        } => bench::gen_random(n, dmin, dmax, seed, homogeneous).and_then(|s| write_out(&bench::emit_system(&s), output.as_deref())),
        Cmd::Run(a) => run(a),
        Cmd::Table { files, format } => table(&files, &format),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sigb: {e}");
            ExitCode::FAILURE
        }
    }
}
