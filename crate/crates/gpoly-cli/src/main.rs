//! `gpoly`: generate polytopes, compute their polynomial invariants, and
//! verify the identities relating them. JSON reports go to stdout, a human
//! summary to stderr; exit code 0 means every check passed, 1 a check
//! failure, 2 an input error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand};
use gpoly_cli::checks::{run_check, CheckKind};
use gpoly_cli::format::PolytopeFile;
use gpoly_cli::genexpr::parse_family;
use gpoly_cli::report::{
    poly_coeffs, to_stdout_json, BatchEntry, BatchReport, BatchSummary, CheckOutcome,
    ComputeReport, FaceReport, Status, VerifyReport,
};
use gpoly_cli::selector::FaceSelector;
use gpoly_cli::{check_guardrails, memo_limit, CliError};
use gpoly_core::gpoly::GContext;
use gpoly_core::stress::{
    affine_dependence_matrix, g1_geometric, g2_geometric, stress_matrix,
};
use gpoly_core::{FlagIndex, Polytope};

#[derive(Parser)]
#[command(name = "gpoly", version, about = "Exact g-polynomials of convex polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated polytope as a JSON file.
    ///
    /// Families: simplex D, cube D, cross D, polygon N, point, segment,
    /// square, pyramid EXPR, prism EXPR, join EXPR EXPR (nested freely).
    Gen {
        /// Family expression, e.g. `cube 3` or `join point square`.
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Override the desk-scale guardrails.
        #[arg(long)]
        force: bool,
    },
    /// Compute g, h, gbar, the f-vector and optional per-face data.
    Compute {
        file: PathBuf,
        /// Face selector: `empty`, `top`, `vertex:0`, `2:5`, or `0,3,5`.
        #[arg(long)]
        face: Option<String>,
        /// Flag-number dimension list, e.g. `0,2`; repeatable.
        #[arg(long = "flag")]
        flags: Vec<String>,
        /// Marked position (1-based) for relative flag numbers; needs --face.
        #[arg(long)]
        mark: Option<usize>,
        /// Dump stress and affine-dependence matrices to stderr.
        #[arg(long)]
        dump_stress: bool,
        #[arg(long)]
        force: bool,
        /// Record wall-clock time in the report (breaks byte reproducibility).
        #[arg(long)]
        timing: bool,
    },
    /// Run identity and inequality checks over all faces of one polytope.
    Verify {
        file: PathBuf,
        /// Comma-separated subset of: stanley, inversion, decomposition,
        /// kalai, nonneg, relnonneg, thm5, joinunit; or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Run checks over every `.json` file in a directory.
    Batch {
        dir: PathBuf,
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads; defaults to 1.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        timing: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen {
            family,
            output,
            force,
        } => cmd_gen(&family, output.as_deref(), force),
        Command::Compute {
            file,
            face,
            flags,
            mark,
            dump_stress,
            force,
            timing,
        } => cmd_compute(&file, face.as_deref(), &flags, mark, dump_stress, force, timing),
        Command::Verify {
            file,
            checks,
            force,
            timing,
        } => cmd_verify(&file, &checks, force, timing),
        Command::Batch {
            dir,
            checks,
            jobs,
            force,
            timing,
        } => cmd_batch(&dir, &checks, jobs, force, timing),
    }
}

fn load_polytope(path: &Path, force: bool) -> Result<(PolytopeFile, Polytope), CliError> {
    let file = PolytopeFile::load(path)?;
    check_guardrails(file.n_vertices(), file.ambient_dim(), force)?;
    let polytope = file.to_polytope()?;
    Ok((file, polytope))
}

fn cmd_gen(family: &[String], output: Option<&Path>, force: bool) -> Result<ExitCode, CliError> {
    let generated = parse_family(family)?;
    check_guardrails(
        generated.polytope.n_vertices(),
        generated.polytope.ambient_dim(),
        force,
    )?;
    let file = PolytopeFile::from_polytope(
        &generated.name,
        &generated.polytope,
        generated.join_faces.clone(),
    );
    match output {
        Some(path) => file.save(path)?,
        None => print!("{}", file.to_json()),
    }
    eprintln!(
        "{}: {} vertices, dimension {}{}",
        generated.name,
        generated.polytope.n_vertices(),
        generated.polytope.dim(),
        output
            .map(|p| format!(", written to {}", p.display()))
            .unwrap_or_default()
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_flag_dims(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|part| part.trim().parse::<i64>())
        .collect::<Result<Vec<i64>, _>>()
        .map_err(|_| CliError::Parse(format!("bad flag index {:?}", text)))
}

fn cmd_compute(
    path: &Path,
    face: Option<&str>,
    flags: &[String],
    mark: Option<usize>,
    dump_stress: bool,
    force: bool,
    timing: bool,
) -> Result<ExitCode, CliError> {
    let start = Instant::now();
    let (file, polytope) = load_polytope(path, force)?;
    let lattice = polytope.face_lattice();
    let ctx = match memo_limit() {
        Some(limit) => GContext::with_memo_limit(lattice, limit),
        None => GContext::new(lattice),
    };

    let mut flag_numbers = BTreeMap::new();
    let mut relative_flag_numbers = BTreeMap::new();
    let mut flag_indices = Vec::new();
    for text in flags {
        let dims = parse_flag_dims(text)?;
        let key = dims
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let index = FlagIndex::new(dims).map_err(CliError::GPoly)?;
        flag_numbers.insert(key.clone(), ctx.flag_number(&index).to_string());
        flag_indices.push((key, index));
    }

    let face_report = match face {
        None => None,
        Some(selector_text) => {
            let selector: FaceSelector = selector_text.parse()?;
            let f = selector.resolve(lattice)?;
            if let Some(k) = mark {
                for (key, index) in &flag_indices {
                    let marked = index.clone().with_mark(k).map_err(CliError::GPoly)?;
                    let value = ctx.relative_flag_number(f, &marked).map_err(CliError::GPoly)?;
                    relative_flag_numbers.insert(format!("{}|k={}", key, k), value.to_string());
                }
            }
            if dump_stress {
                let embedding =
                    polytope.subframework_embedding(f, Default::default());
                eprintln!("stress matrix of the facet-union framework:");
                eprint!("{}", stress_matrix(&embedding.framework));
            }
            Some(FaceReport {
                selector: selector_text.to_string(),
                vertices: lattice.vertex_set(f).to_vec(),
                dim: lattice.dim_of(f),
                g_relative: poly_coeffs(&ctx.g_relative(f).map_err(CliError::GPoly)?)?,
                g1_geometric: g1_geometric(&polytope, f),
                g2_geometric: g2_geometric(&polytope, f),
            })
        }
    };

    if dump_stress {
        eprintln!("stress matrix of the full framework:");
        eprint!("{}", stress_matrix(&polytope.framework()));
        eprintln!("affine dependence matrix:");
        eprint!("{}", affine_dependence_matrix(polytope.coords()));
    }

    let g = ctx.g();
    let report = ComputeReport {
        name: file.name.clone(),
        file: path.display().to_string(),
        dim: polytope.dim(),
        ambient_dim: polytope.ambient_dim(),
        n_vertices: polytope.n_vertices(),
        f_vector: lattice.counts_by_dim(),
        g: poly_coeffs(&g)?,
        h: poly_coeffs(&ctx.h())?,
        gbar: poly_coeffs(&ctx.gbar())?,
        flag_numbers,
        relative_flag_numbers,
        face: face_report,
        timing_ms: timing.then(|| start.elapsed().as_millis()),
    };
    to_stdout_json(&report);
    eprintln!(
        "{}: dimension {}, {} vertices, g = {} ({} ms)",
        report.name,
        report.dim,
        report.n_vertices,
        g,
        start.elapsed().as_millis()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    path: &Path,
    checks_text: &str,
    force: bool,
    timing: bool,
) -> Result<ExitCode, CliError> {
    let start = Instant::now();
    let kinds = CheckKind::parse_list(checks_text)?;
    let (file, polytope) = load_polytope(path, force)?;
    let limit = memo_limit();
    let checks: Vec<CheckOutcome> = kinds
        .iter()
        .map(|&kind| run_check(kind, &polytope, &file, limit))
        .collect();
    let failures = checks.iter().filter(|c| c.status == Status::Fail).count();
    for outcome in &checks {
        eprintln!(
            "{} {}: {} ({} cases)",
            file.name,
            outcome.check,
            match outcome.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "error",
            },
            outcome.cases
        );
    }
    let report = VerifyReport {
        name: file.name.clone(),
        file: path.display().to_string(),
        dim: polytope.dim(),
        n_vertices: polytope.n_vertices(),
        checks,
        failures,
        timing_ms: timing.then(|| start.elapsed().as_millis()),
    };
    to_stdout_json(&report);
    eprintln!(
        "{}: {} check(s), {} failure(s) ({} ms)",
        file.name,
        report.checks.len(),
        failures,
        start.elapsed().as_millis()
    );
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn process_batch_file(
    path: &Path,
    kinds: &[CheckKind],
    limit: Option<usize>,
    force: bool,
) -> Vec<BatchEntry> {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    match load_polytope(path, force) {
        Err(e) => vec![BatchEntry {
            file: name,
            check: "input".to_string(),
            status: Status::Error,
            note: Some(e.to_string()),
        }],
        Ok((file, polytope)) => kinds
            .iter()
            .map(|&kind| {
                let outcome = run_check(kind, &polytope, &file, limit);
                BatchEntry {
                    file: name.clone(),
                    check: outcome.check,
                    status: outcome.status,
                    note: outcome.failures.first().cloned(),
                }
            })
            .collect(),
    }
}

fn cmd_batch(
    dir: &Path,
    checks_text: &str,
    jobs: Option<usize>,
    force: bool,
    timing: bool,
) -> Result<ExitCode, CliError> {
    let start = Instant::now();
    let kinds = CheckKind::parse_list(checks_text)?;
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();

    let limit = memo_limit();
    let jobs = jobs.unwrap_or(1).clamp(1, files.len().max(1));
    let next = AtomicUsize::new(0);
    let collected: Mutex<Vec<(usize, Vec<BatchEntry>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= files.len() {
                    break;
                }
                let entries = process_batch_file(&files[i], &kinds, limit, force);
                collected.lock().expect("batch worker").push((i, entries));
            });
        }
    });
    let mut collected = collected.into_inner().expect("batch workers finished");
    collected.sort_by_key(|(i, _)| *i);
    let entries: Vec<BatchEntry> = collected.into_iter().flat_map(|(_, e)| e).collect();

    for entry in &entries {
        eprintln!(
            "{} {}: {}",
            entry.file,
            entry.check,
            match entry.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "error",
            }
        );
    }
    let errors = entries.iter().filter(|e| e.status == Status::Error).count();
    let failures = entries.iter().filter(|e| e.status == Status::Fail).count();
    let summary = BatchSummary {
        files: files.len(),
        checks_run: entries.iter().filter(|e| e.status != Status::Error).count(),
        failures,
        errors,
    };
    let report = BatchReport {
        entries,
        summary,
        timing_ms: timing.then(|| start.elapsed().as_millis()),
    };
    to_stdout_json(&report);
    eprintln!(
        "{} file(s), {} failure(s), {} error(s) ({} ms)",
        files.len(),
        failures,
        errors,
        start.elapsed().as_millis()
    );
    Ok(if errors > 0 {
        ExitCode::from(2)
    } else if failures > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
