//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error (a violated precondition, named in
//! the message), 2 parse error (flags, beta syntax, or configuration
//! files).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use bubblegrid_core::beta::{Beta, BetaValue};
use bubblegrid_core::classify::{class_energy, classify, ClassLabel};
use bubblegrid_core::geometry::min_symmetric_difference;
use bubblegrid_core::lattice::{energy, perimeter};
use bubblegrid_core::oracle::{self, verify_formula};
use bubblegrid_core::regularize::{regularize_columns, regularize_rows, remove_empty_lines};
use bubblegrid_core::solver::{
    build_class4_family, build_explicit, continuum_energy, min_perimeter, wulff_rectangles,
};

use crate::format::{parse_beta, parse_config, write_config, BetaSpecError, ConfigFile};
use crate::parallel::{enumerate_minimisers_parallel, thread_cap};
use crate::render::{render_ascii, render_svg};

const EXIT_OK: i32 = 0;
const EXIT_DOMAIN: i32 = 1;
const EXIT_PARSE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "bubblegrid",
    version,
    about = "Exact two-phase minimal-perimeter configurations on the square lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal perimeter for N_A = N_B = N, with the explicit optimal
    /// configuration on request.
    Solve {
        /// Common phase size N.
        #[arg(long, conflicts_with = "k")]
        n: Option<u64>,
        /// Interface weight, `p/q` or `~x`.
        #[arg(long)]
        beta: String,
        /// Build at this height instead of the smallest optimal one.
        #[arg(long, requires = "n")]
        h: Option<u64>,
        /// Emit the optimal Class IV family member at scale k instead
        /// (exact rational beta <= 1/2 only).
        #[arg(long)]
        k: Option<u64>,
        /// Write the built configuration to FILE in the shared text format.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Exhaustive ground-truth minimiser search at small sizes.
    Enumerate {
        #[arg(long)]
        na: u32,
        #[arg(long)]
        nb: u32,
        #[arg(long)]
        beta: String,
        /// Also print the minimisers themselves, separated by `---`.
        #[arg(long)]
        all: bool,
        /// List minimisers with A/B relabeling identified.
        #[arg(long = "swap-identify")]
        swap_identify: bool,
        /// Search budget on N_A + N_B (default 11).
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Energy and perimeter of a configuration file.
    Energy { file: PathBuf },
    /// Class I..V taxonomy of a configuration file.
    Classify { file: PathBuf },
    /// Close empty lines and apply the row/column rearrangement.
    Regularize {
        file: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Isometry-minimised symmetric difference between two files.
    Compare { file1: PathBuf, file2: PathBuf },
    /// Draw a configuration file.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Continuum Wulff rectangles and minimal energy.
    Wulff {
        #[arg(long)]
        beta: String,
    },
    /// Check the closed-form minimal perimeter against the oracle.
    Verify {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[arg(long)]
        beta: String,
        /// Point budget on 2N (default 10).
        #[arg(long)]
        budget: Option<u32>,
    },
}

enum CmdError {
    Domain(String),
    Parse(String),
}

impl CmdError {
    fn code(&self) -> i32 {
        match self {
            CmdError::Domain(_) => EXIT_DOMAIN,
            CmdError::Parse(_) => EXIT_PARSE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Domain(m) | CmdError::Parse(m) => m,
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> CmdError {
    CmdError::Domain(e.to_string())
}

fn beta_arg(spec: &str) -> Result<Beta, CmdError> {
    parse_beta(spec).map_err(|e| match e {
        BetaSpecError::Syntax => CmdError::Parse(format!("bad --beta value: {e}")),
        BetaSpecError::Invalid(err) => CmdError::Domain(err.to_string()),
    })
}

fn load(path: &Path) -> Result<ConfigFile, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text).map_err(|e| CmdError::Parse(format!("{}: {e}", path.display())))
}

fn emit_or_print(out: &mut String, emit: &Option<PathBuf>, text: &str) -> Result<(), CmdError> {
    match emit {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CmdError::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            out.push_str(text);
            Ok(())
        }
    }
}

fn format_value(v: &BetaValue) -> String {
    v.to_string()
}

fn format_heights(hs: &[u64]) -> String {
    let mut s = String::from("h={");
    for (i, h) in hs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{h}");
    }
    s.push('}');
    s
}

fn cmd_solve(
    out: &mut String,
    n: Option<u64>,
    beta_spec: &str,
    h: Option<u64>,
    k: Option<u64>,
    emit: &Option<PathBuf>,
) -> Result<(), CmdError> {
    let beta = beta_arg(beta_spec)?;
    if let Some(k) = k {
        let fam = build_class4_family(&beta, k).map_err(domain)?;
        let p = perimeter(&fam.config).eval(&beta);
        writeln!(
            out,
            "N={} P={} r={} s={} class=IV",
            fam.n,
            format_value(&p),
            fam.r,
            fam.s
        )
        .unwrap();
        if emit.is_some() {
            let text = write_config(&ConfigFile { beta, config: fam.config });
            emit_or_print(out, emit, &text)?;
        }
        return Ok(());
    }
    let n = n.ok_or_else(|| CmdError::Parse("solve needs --n or --k".into()))?;
    let result = min_perimeter(n, &beta).map_err(domain)?;
    if !result.certified_optimal {
        eprintln!(
            "note: beta > 1/2, printing the formula value; optimality is proven for beta <= 1/2"
        );
    }
    writeln!(
        out,
        "P_min={} {}",
        format_value(&result.min_perimeter),
        format_heights(&result.optimal_heights)
    )
    .unwrap();
    if emit.is_some() {
        let build_h = match h {
            Some(h) => {
                if h == 0 || h > n {
                    return Err(CmdError::Domain(format!("--h must lie in [1, {n}]")));
                }
                h
            }
            None => result.optimal_heights[0],
        };
        let config = build_explicit(n, build_h).map_err(domain)?;
        let text = write_config(&ConfigFile { beta, config });
        emit_or_print(out, emit, &text)?;
    }
    Ok(())
}

fn cmd_enumerate(
    out: &mut String,
    na: u32,
    nb: u32,
    beta_spec: &str,
    all: bool,
    swap_identify: bool,
    budget: Option<u32>,
) -> Result<(), CmdError> {
    let beta = beta_arg(beta_spec)?;
    let budget = budget.unwrap_or(oracle::DEFAULT_BUDGET);
    if na + nb > oracle::WARN_THRESHOLD {
        eprintln!(
            "warning: {} points is a large search; expect a long runtime",
            na + nb
        );
    }
    let report =
        enumerate_minimisers_parallel(na, nb, &beta, budget, thread_cap()).map_err(domain)?;
    writeln!(out, "E_min={}", format_value(&report.min_energy)).unwrap();
    writeln!(out, "count_no_swap={}", report.minimisers_no_swap.len()).unwrap();
    writeln!(out, "count_swap={}", report.minimisers_with_swap.len()).unwrap();
    if all {
        let list = if swap_identify {
            &report.minimisers_with_swap
        } else {
            &report.minimisers_no_swap
        };
        for (i, cfg) in list.iter().enumerate() {
            if i > 0 {
                writeln!(out, "---").unwrap();
            }
            out.push_str(&write_config(&ConfigFile { beta, config: cfg.clone() }));
        }
    }
    Ok(())
}

fn cmd_energy(out: &mut String, path: &Path) -> Result<(), CmdError> {
    let file = load(path)?;
    writeln!(out, "E={} P={}", energy(&file.config), perimeter(&file.config)).unwrap();
    Ok(())
}

fn cmd_classify(out: &mut String, path: &Path) -> Result<(), CmdError> {
    let file = load(path)?;
    let cls = classify(&file.config);
    if cls.label == ClassLabel::NotAdmissible {
        let report = bubblegrid_core::regularize::check_admissible(&file.config);
        let mut msg = String::from("configuration is not admissible");
        for v in &report.violations {
            let _ = write!(msg, "; {v}");
        }
        if report.is_admissible() {
            msg = "classification needs both phases nonempty".into();
        }
        return Err(CmdError::Domain(msg));
    }
    let p = cls.params;
    let e = class_energy(cls.label, &p, file.config.n_a() as u64, file.config.n_b() as u64)
        .map_err(domain)?;
    writeln!(
        out,
        "class={} l=({},{},{}) h=({},{},{}) energy={}",
        cls.label, p.l1, p.l2, p.l3, p.h1, p.h2, p.h3, e
    )
    .unwrap();
    Ok(())
}

fn cmd_regularize(out: &mut String, path: &Path, emit: &Option<PathBuf>) -> Result<(), CmdError> {
    let file = load(path)?;
    let before = energy(&file.config);
    let result = regularize_columns(&regularize_rows(&remove_empty_lines(&file.config)));
    let after = energy(&result);
    writeln!(out, "E_before={before} E_after={after}").unwrap();
    let text = write_config(&ConfigFile { beta: file.beta, config: result });
    emit_or_print(out, emit, &text)
}

fn cmd_compare(out: &mut String, p1: &Path, p2: &Path) -> Result<(), CmdError> {
    let f1 = load(p1)?;
    let f2 = load(p2)?;
    writeln!(out, "symdiff={}", min_symmetric_difference(&f1.config, &f2.config)).unwrap();
    Ok(())
}

fn cmd_render(
    out: &mut String,
    path: &Path,
    format: RenderFormat,
    emit: &Option<PathBuf>,
) -> Result<(), CmdError> {
    let file = load(path)?;
    let text = match format {
        RenderFormat::Ascii => render_ascii(&file.config),
        RenderFormat::Svg => render_svg(&file.config),
    };
    emit_or_print(out, emit, &text)
}

fn cmd_wulff(out: &mut String, beta_spec: &str) -> Result<(), CmdError> {
    let beta = beta_arg(beta_spec)?;
    if !beta.at_most_half() {
        eprintln!("note: the continuum optimum is proven for beta <= 1/2");
    }
    let (a, b) = wulff_rectangles(&beta);
    writeln!(
        out,
        "rectA=({:.6},{:.6})x({:.6},{:.6}) rectB=({:.6},{:.6})x({:.6},{:.6}) E_continuum={:.6}",
        a.x0,
        a.x1,
        a.y0,
        a.y1,
        b.x0,
        b.x1,
        b.y0,
        b.y1,
        continuum_energy(&beta)
    )
    .unwrap();
    Ok(())
}

fn cmd_verify(
    out: &mut String,
    nmax: u32,
    beta_spec: &str,
    budget: Option<u32>,
) -> Result<(), CmdError> {
    let beta = beta_arg(beta_spec)?;
    let budget = budget.unwrap_or(oracle::VERIFY_BUDGET);
    let report = verify_formula(nmax, &beta, budget).map_err(domain)?;
    for c in &report.checks {
        writeln!(
            out,
            "N={} P_oracle={} P_formula={} {}",
            c.n,
            c.oracle_perimeter,
            c.formula_perimeter,
            if c.ok { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    if report.all_ok() {
        writeln!(out, "verify: all N <= {nmax} match").unwrap();
        Ok(())
    } else {
        Err(CmdError::Domain("formula/oracle mismatch".into()))
    }
}

/// Run the CLI on `argv` (including the program name); returns the process
/// exit code and appends all stdout text to `out`.
pub fn run<I, S>(argv: I, out: &mut String) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version through the error path.
            if e.use_stderr() {
                eprintln!("{e}");
                return EXIT_PARSE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let result = match &cli.command {
        Command::Solve { n, beta, h, k, emit } => cmd_solve(out, *n, beta, *h, *k, emit),
        Command::Enumerate { na, nb, beta, all, swap_identify, budget } => {
            cmd_enumerate(out, *na, *nb, beta, *all, *swap_identify, *budget)
        }
        Command::Energy { file } => cmd_energy(out, file),
        Command::Classify { file } => cmd_classify(out, file),
        Command::Regularize { file, emit } => cmd_regularize(out, file, emit),
        Command::Compare { file1, file2 } => cmd_compare(out, file1, file2),
        Command::Render { file, format, emit } => cmd_render(out, file, *format, emit),
        Command::Wulff { beta } => cmd_wulff(out, beta),
        Command::Verify { nmax, beta, budget } => cmd_verify(out, *nmax, beta, *budget),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}
