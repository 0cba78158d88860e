//! Command-line front end: validate specification files, generate kernel
//! trees, run simulations and benchmark predictor variants.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pdegen::codegen::{self, MANIFEST_PATH};
use pdegen::kernels::memory::temp_memory_report;
use pdegen::runtime::{run, KernelBinding};
use pdegen::spec::{load_and_validate, PredictorVariant, Specification};
use pdegen::template::{DirLoader, TemplateLoader};
use pdegen::user::UserSolver;

#[derive(Parser)]
#[command(
    name = "pdegen",
    about = "Specification-driven ADER-DG kernel generator and reference runtime"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print progress details.
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kernels {
    Generic,
    Generated,
}

#[derive(Subcommand)]
enum Command {
    /// Check a specification file; exit 0 iff it is valid.
    Validate {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Render the kernel/glue tree for a specification.
    Generate {
        #[arg(long)]
        spec: PathBuf,
        /// Output root (defaults to the spec's output_dir).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Load templates from a directory instead of the embedded corpus.
        #[arg(long)]
        templates: Option<PathBuf>,
    },
    /// Run the solver described by a specification.
    Run {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "generic")]
        kernels: Kernels,
        /// Output root (defaults to the spec's output_dir).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare predictor variants: wall time, temporary memory, max-abs
    /// state difference.
    Bench {
        #[arg(long)]
        spec: PathBuf,
        /// Output root (defaults to the spec's output_dir).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { spec } => cmd_validate(&spec),
        Command::Generate {
            spec,
            out,
            templates,
        } => cmd_generate(&spec, out.as_deref(), templates.as_deref(), cli.verbose),
        Command::Run { spec, kernels, out } => cmd_run(&spec, kernels, out.as_deref(), cli.verbose),
        Command::Bench { spec, out } => cmd_bench(&spec, out.as_deref()),
    }
}

fn read_spec(path: &Path) -> Result<Specification, ExitCode> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(ExitCode::from(2));
        }
    };
    let (spec, report) = match load_and_validate(&text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Err(ExitCode::from(1));
        }
    };
    if !report.valid() {
        for e in &report.errors {
            eprintln!("{}: {}", e.path, e.message);
        }
        return Err(ExitCode::from(1));
    }
    Ok(spec)
}

fn cmd_validate(path: &Path) -> ExitCode {
    match read_spec(path) {
        Ok(_) => {
            println!("OK");
            ExitCode::SUCCESS
        }
        Err(code) => code,
    }
}

fn cmd_generate(
    path: &Path,
    out: Option<&Path>,
    templates: Option<&Path>,
    verbose: bool,
) -> ExitCode {
    let spec = match read_spec(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let embedded = codegen::embedded_loader();
    let dir_loader = templates.map(|t| DirLoader(t.to_path_buf()));
    let loader: &dyn TemplateLoader = match &dir_loader {
        Some(d) => d,
        None => &embedded,
    };
    let tree = match codegen::generate_all(&spec, loader) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let out_dir = out.unwrap_or_else(|| Path::new(&spec.output_dir));
    if let Err(e) = codegen::write_tree(&tree, out_dir) {
        eprintln!("error: cannot write {}: {e}", out_dir.display());
        return ExitCode::from(2);
    }
    if verbose {
        for f in &tree.manifest.files {
            println!("wrote {}", out_dir.join(f).display());
        }
    }
    println!(
        "generated {} files under {}",
        tree.files.len(),
        out_dir.display()
    );
    ExitCode::SUCCESS
}

fn resolve_app(project: &str) -> Option<Box<dyn UserSolver>> {
    pdegen::apps::resolve(project)
}

fn cmd_run(path: &Path, kernels: Kernels, out: Option<&Path>, verbose: bool) -> ExitCode {
    let spec = match read_spec(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let user = match resolve_app(&spec.project_name) {
        Some(u) => u,
        None => {
            eprintln!(
                "error: no example application matches project '{}'",
                spec.project_name
            );
            return ExitCode::from(2);
        }
    };
    let out_dir = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(&spec.output_dir));
    let binding = match kernels {
        Kernels::Generic => KernelBinding::Generic,
        Kernels::Generated => {
            if !out_dir.join(MANIFEST_PATH).exists() {
                eprintln!(
                    "error: missing manifest {}; run `pdegen generate` first",
                    out_dir.join(MANIFEST_PATH).display()
                );
                return ExitCode::from(2);
            }
            match pdegen::generated_fixtures::lookup(&spec.project_name) {
                Some(set) => KernelBinding::Generated(set),
                None => {
                    eprintln!(
                        "error: no compiled kernel set for project '{}'; \
                         rebuild with its generated tree registered",
                        spec.project_name
                    );
                    return ExitCode::from(2);
                }
            }
        }
    };
    let result = match run(&spec, user.as_ref(), &binding) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = std::fs::create_dir_all(&out_dir) {
        eprintln!("error: cannot create {}: {e}", out_dir.display());
        return ExitCode::from(2);
    }
    let csv_path = out_dir.join("run.csv");
    if let Err(e) = std::fs::write(&csv_path, &result.csv) {
        eprintln!("error: cannot write {}: {e}", csv_path.display());
        return ExitCode::from(2);
    }
    for (label, text) in &result.dumps {
        let p = out_dir.join(format!("dump_{label}.txt"));
        if let Err(e) = std::fs::write(&p, text) {
            eprintln!("error: cannot write {}: {e}", p.display());
            return ExitCode::from(2);
        }
    }
    if verbose {
        println!("{}", result.csv);
    }
    println!(
        "ran {} steps to t = {:?}; wrote {}",
        result.steps,
        result.mesh.time,
        csv_path.display()
    );
    ExitCode::SUCCESS
}

fn run_with_variant(
    spec: &Specification,
    user: &dyn UserSolver,
    variant: PredictorVariant,
) -> Result<(Vec<f64>, f64), String> {
    let mut s = spec.clone();
    s.predictor_variant = variant;
    let t0 = std::time::Instant::now();
    let result = run(&s, user, &KernelBinding::Generic).map_err(|e| e.to_string())?;
    let wall = t0.elapsed().as_secs_f64();
    let mut state = Vec::new();
    for c in &result.mesh.cells {
        state.extend_from_slice(&c.dofs);
    }
    Ok((state, wall))
}

fn cmd_bench(path: &Path, out: Option<&Path>) -> ExitCode {
    let spec = match read_spec(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let user = match resolve_app(&spec.project_name) {
        Some(u) => u,
        None => {
            eprintln!(
                "error: no example application matches project '{}'",
                spec.project_name
            );
            return ExitCode::from(2);
        }
    };
    let variants: Vec<PredictorVariant> = if spec.linear {
        vec![PredictorVariant::Ck, PredictorVariant::Otf]
    } else {
        vec![PredictorVariant::Picard]
    };
    if !spec.linear {
        println!("note: nonlinear specification; ck/otf rows skipped");
    }
    let n = spec.order as usize;
    let d = spec.dimension as usize;
    let q = spec.quantities as usize;
    let mut rows = Vec::new();
    let mut reference: Option<Vec<f64>> = None;
    let mut max_diff = 0.0f64;
    for v in &variants {
        let (state, wall) = match run_with_variant(&spec, user.as_ref(), *v) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        };
        let report = temp_memory_report(n, d, q, *v);
        let diff = match &reference {
            None => {
                reference = Some(state);
                0.0
            }
            Some(r) => r
                .iter()
                .zip(&state)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max),
        };
        max_diff = max_diff.max(diff);
        rows.push((format!("{v:?}").to_lowercase(), wall, report.bytes, diff));
    }
    println!(
        "{:<8} {:>12} {:>14} {:>14}",
        "variant", "wall_s", "temp_bytes", "max_abs_diff"
    );
    let mut csv = String::from("variant,wall_s,temp_bytes,max_abs_diff\n");
    for (name, wall, bytes, diff) in &rows {
        println!("{name:<8} {wall:>12.6} {bytes:>14} {diff:>14.3e}");
        csv.push_str(&format!("{name},{wall:?},{bytes},{diff:?}\n"));
    }
    if spec.linear && spec.order > 1 {
        let ck = rows.iter().find(|r| r.0 == "ck").unwrap();
        let otf = rows.iter().find(|r| r.0 == "otf").unwrap();
        if otf.2 >= ck.2 {
            eprintln!("FAIL: otf temp bytes not below ck");
            return ExitCode::from(1);
        }
    } else if spec.linear {
        println!("note: order 1; ck and otf temporary footprints are identical (ratio 1.0)");
    }
    if max_diff > 1e-11 {
        eprintln!("FAIL: variant states differ by {max_diff:.3e} > 1e-11");
        return ExitCode::from(1);
    }
    let out_dir = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(&spec.output_dir));
    if std::fs::create_dir_all(&out_dir).is_err()
        || std::fs::write(out_dir.join("bench.csv"), &csv).is_err()
    {
        eprintln!("error: cannot write bench.csv under {}", out_dir.display());
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
