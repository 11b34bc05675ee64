use anyhow::Context;
use clap::{Parser, Subcommand};
use finetope_cli::batch::{run_batch, BatchMode};
use finetope_cli::input::{grdb_dump_import, parse_polytope_file, PolytopeInput};
use finetope_cli::report::{emit_report, Format};
use finetope_core::ehrhart::{ehrhart_profile, phi_vector};
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact classification of lattice 3-topes by their Fine interiors.
#[derive(Parser)]
#[command(name = "finetope", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single polytope and print a human-readable report.
    Analyze {
        /// Vertex-list file (first record is used).
        file: PathBuf,
    },
    /// Classify every record of a vertex-list file or database dump.
    Batch {
        file: PathBuf,
        /// Force the `id: x,y,z; ...` dump format (auto-detected otherwise).
        #[arg(long)]
        dump: bool,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Hollow-mode analysis: width, Fine interior, support, canonical hull.
    Hollow {
        file: PathBuf,
        #[arg(long)]
        dump: bool,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Ehrhart profile only: counts, psi, phi, normalized volume.
    Ehrhart {
        file: PathBuf,
    },
    /// Run the embedded reference corpus and diff against expected records.
    Fixtures {
        /// Golden report file to byte-compare the emitted JSON against.
        #[arg(long)]
        expect: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn read_inputs(file: &PathBuf, force_dump: bool) -> anyhow::Result<Vec<PolytopeInput>> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("cannot read {}", file.display()))?;
    let looks_like_dump = force_dump
        || text
            .lines()
            .find(|l| !l.trim().is_empty())
            .map(|l| l.contains(':'))
            .unwrap_or(false);
    let inputs = if looks_like_dump {
        grdb_dump_import(BufReader::new(text.as_bytes()))?
    } else {
        parse_polytope_file(&text)?
    };
    Ok(inputs)
}

fn exit_code_for(report: &finetope_cli::report::BatchReport) -> ExitCode {
    if report.records.iter().any(|r| r.error.is_some()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_analyze(file: PathBuf) -> anyhow::Result<ExitCode> {
    let inputs = read_inputs(&file, false)?;
    let Some(first) = inputs.first() else {
        anyhow::bail!("no records in {}", file.display());
    };
    let report = run_batch(std::slice::from_ref(first), 1, BatchMode::Classify);
    let r = &report.records[0];
    if let Some(err) = &r.error {
        println!("error: {err}");
        return Ok(ExitCode::from(1));
    }
    println!("id:                 {}", r.id.clone().unwrap_or_else(|| "-".into()));
    println!("regime:             {}", r.regime.clone().unwrap_or_default());
    println!("fi_dim:             {}", r.fi_dim.unwrap_or(-2));
    let fmt_vecs = |vs: &Option<Vec<Vec<finetope_cli::report::Scalar>>>| -> String {
        vs.as_deref()
            .map(|rows| {
                rows.iter()
                    .map(|v| {
                        format!(
                            "({})",
                            v.iter()
                                .map(|c| match c {
                                    finetope_cli::report::Scalar::Num(n) => n.to_string(),
                                    finetope_cli::report::Scalar::Str(s) => s.clone(),
                                })
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_default()
    };
    println!("fi_vertices:        {}", fmt_vecs(&r.fi_vertices));
    if let Some(v) = &r.v_delta {
        println!("v_delta:            {}", fmt_vecs(&Some(vec![v.clone()])));
    }
    if let Some(l) = &r.lambda {
        println!(
            "lambda:             {}",
            match l {
                finetope_cli::report::Scalar::Num(n) => n.to_string(),
                finetope_cli::report::Scalar::Str(s) => s.clone(),
            }
        );
    }
    if let Some(t) = &r.facet_type {
        println!("facet_type:         {t}");
    }
    if let Some(t) = &r.projection_type {
        println!("projection_type:    {t}");
    }
    if let Some(p) = &r.pi1_order {
        println!(
            "pi1_order:          {}",
            match p {
                finetope_cli::report::Scalar::Num(n) => n.to_string(),
                finetope_cli::report::Scalar::Str(s) => s.clone(),
            }
        );
    }
    println!("supp:               {}", fmt_vecs(&r.supp));
    println!("canonical_hull:     {}", fmt_vecs(&r.canonical_hull_vertices));
    println!(
        "hull integral:      {}",
        r.canonical_hull_integral.unwrap_or(false)
    );
    println!(
        "equals hull:        {}",
        r.equals_canonical_hull.unwrap_or(false)
    );
    if let Some(psi) = &r.psi {
        println!("psi:                {}", fmt_vecs(&Some(vec![psi.clone()])));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_batch(
    file: PathBuf,
    dump: bool,
    format: Format,
    jobs: usize,
    mode: BatchMode,
) -> anyhow::Result<ExitCode> {
    let inputs = read_inputs(&file, dump)?;
    let report = run_batch(&inputs, jobs, mode);
    print!("{}", emit_report(&report, format));
    eprintln!(
        "# {} records in {:.3}s; summary: {:?}",
        report.records.len(),
        report.elapsed.as_secs_f64(),
        report.summary
    );
    Ok(exit_code_for(&report))
}

fn cmd_ehrhart(file: PathBuf) -> anyhow::Result<ExitCode> {
    let inputs = read_inputs(&file, false)?;
    let mut failed = false;
    for input in &inputs {
        let label = input.id.clone().unwrap_or_else(|| "-".into());
        let poly = match finetope_core::LatticePolytope::hull(&input.vertices) {
            Ok(p) => p,
            Err(e) => {
                println!("{label}: error: {e}");
                failed = true;
                continue;
            }
        };
        match ehrhart_profile(&poly) {
            Ok(e) => {
                let phi = phi_vector(&e);
                println!(
                    "{label}: counts={:?} interior={:?} psi={:?} phi={:?} volume={}",
                    e.point_counts, e.interior_counts, e.psi, phi, e.volume
                );
            }
            Err(e) => {
                println!("{label}: error: {e}");
                failed = true;
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_fixtures(expect: Option<PathBuf>, format: Format, jobs: usize) -> anyhow::Result<ExitCode> {
    let outcomes = finetope_cli::fixtures_run::run_all();
    let mut failed = 0usize;
    for o in &outcomes {
        if o.ok() {
            println!("ok   {}", o.name);
        } else {
            failed += 1;
            println!("FAIL {}", o.name);
            for f in &o.failures {
                println!("     {f}");
            }
        }
    }
    println!("{} fixtures, {} failed", outcomes.len(), failed);
    if let Some(golden) = expect {
        let inputs: Vec<PolytopeInput> = finetope_core::fixtures::ASYM
            .iter()
            .map(|f| PolytopeInput {
                id: Some(f.id.to_string()),
                dim: 3,
                vertices: finetope_core::fixtures::to_vectors(&f.vertices),
                affine: None,
            })
            .chain(finetope_core::fixtures::SYM.iter().map(|f| PolytopeInput {
                id: Some(f.id.to_string()),
                dim: 3,
                vertices: finetope_core::fixtures::to_vectors(f.vertices),
                affine: None,
            }))
            .chain(finetope_core::fixtures::DIM3.iter().map(|f| PolytopeInput {
                id: Some(f.id.to_string()),
                dim: 3,
                vertices: finetope_core::fixtures::to_vectors(f.vertices),
                affine: None,
            }))
            .collect();
        let report = run_batch(&inputs, jobs, BatchMode::Classify);
        let emitted = emit_report(&report, format);
        let golden_text = std::fs::read_to_string(&golden)
            .with_context(|| format!("cannot read {}", golden.display()))?;
        if emitted != golden_text {
            println!("golden mismatch against {}", golden.display());
            return Ok(ExitCode::from(1));
        }
        println!("golden match: {}", golden.display());
    }
    Ok(if failed > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { file } => cmd_analyze(file),
        Command::Batch {
            file,
            dump,
            format,
            jobs,
        } => cmd_batch(file, dump, format, jobs, BatchMode::Classify),
        Command::Hollow {
            file,
            dump,
            format,
            jobs,
        } => cmd_batch(file, dump, format, jobs, BatchMode::Hollow),
        Command::Ehrhart { file } => cmd_ehrhart(file),
        Command::Fixtures {
            expect,
            format,
            jobs,
        } => cmd_fixtures(expect, format, jobs),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
