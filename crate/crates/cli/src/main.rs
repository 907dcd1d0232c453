//! `hhht`: exact win-probability gaps for the HH versus HT coin game.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hhht::analysis::ContourConfig;
use hhht::export::{self, Format, DP_CAP};
use hhht::verify::{self, Bounds, Suite};
use hhht::{exactdp, recurrence, Rational};

/// Relative `--out` paths resolve against this directory when it is set.
const OUT_DIR_VAR: &str = "HHHT_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "hhht", version, about = "Exact win-probability gaps for the HH versus HT coin game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Δn = P(Bob wins) - P(Alice wins).
    Delta {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Export the distribution of Alice's score minus Bob's after n flips.
    Dist {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Largest n accepted.
        #[arg(long, default_value_t = DP_CAP)]
        cap: u32,
        /// Re-read the output and confirm the probabilities sum to exactly 1.
        #[arg(long)]
        check: bool,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a table of Δn, win probabilities, asymptotics and e_n.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Win probabilities are filled in up to this n.
        #[arg(long, default_value_t = DP_CAP)]
        dp_cap: u32,
    },
    /// Run verification suites. Exit code 0 on pass, 1 on failure, 2 on a bad configuration.
    Verify {
        /// all, asymptotics, contour, dp, lattice, recurrence or series.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Overrides the main bound of the chosen suite.
        #[arg(long)]
        max_n: Option<usize>,
        /// Contour radius, in (0, 1).
        #[arg(long)]
        radius: Option<f64>,
        /// Contour quadrature nodes, at least 64.
        #[arg(long)]
        points: Option<usize>,
        /// Print reports as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { suite, max_n, radius, points, json } => return run_verify(&suite, max_n, radius, points, json),
        Command::Delta { n, mode } => run_delta(n, mode),
        Command::Dist { n, format, cap, check, out } => run_dist(n, format.into(), cap, check, out),
        Command::Table { max_n, out, format, dp_cap } => run_table(max_n, &out, format.into(), dp_cap),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run_delta(n: u64, mode: Mode) -> anyhow::Result<()> {
    let n = usize::try_from(n)?;
    match mode {
        Mode::Exact => println!("{}", recurrence::delta_exact(n)?),
        Mode::Float => {
            let d = recurrence::FloatDeltas::new().nth(n).expect("infinite iterator");
            println!("{d}");
        }
    }
    Ok(())
}

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn run_dist(n: u32, format: Format, cap: u32, check: bool, out: Option<PathBuf>) -> anyhow::Result<()> {
    if n > cap {
        bail!("n = {n} is over the DP cap of {cap}; raise --cap to run it anyway");
    }
    let d = exactdp::distribution(n)?;
    let mut buf = Vec::new();
    export::write_dist(&d, format, &mut buf)?;
    if check {
        let total = export::dist_total(format, buf.as_slice())?;
        if total != Rational::from_integer(1.into()) {
            bail!("probabilities sum to {total}, not 1");
        }
        eprintln!("check: probabilities sum to exactly 1");
    }
    match out {
        Some(path) => {
            let path = resolve(&path);
            let mut w = create(&path)?;
            w.write_all(&buf)?;
            w.flush()?;
        }
        None => io::stdout().lock().write_all(&buf)?,
    }
    Ok(())
}

fn run_table(max_n: u64, out: &Path, format: Format, dp_cap: u32) -> anyhow::Result<()> {
    let rows = export::build_table(usize::try_from(max_n)?, dp_cap)?;
    let path = resolve(out);
    let mut w = create(&path)?;
    export::write_table(&rows, format, &mut w)?;
    w.flush()?;
    Ok(())
}

fn run_verify(suite: &str, max_n: Option<usize>, radius: Option<f64>, points: Option<usize>, json: bool) -> ExitCode {
    let config_error = |msg: String| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    };
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match suite.parse() {
            Ok(s) => vec![s],
            Err(e) => return config_error(e.to_string()),
        }
    };
    let mut bounds = Bounds::default();
    if let Some(n) = max_n {
        for &s in &suites {
            bounds = bounds.with_max_n(s, n);
        }
    }
    if radius.is_some() || points.is_some() {
        let base = ContourConfig::default();
        match ContourConfig::new(radius.unwrap_or(base.radius()), points.unwrap_or(base.points())) {
            Ok(cfg) => bounds.contour = cfg,
            Err(e) => return config_error(e.to_string()),
        }
    }
    if let Err(e) = bounds.validate() {
        return config_error(e.to_string());
    }

    let reports = verify::run_suites(&suites, &bounds);
    let text = if json {
        match serde_json::to_string_pretty(&reports) {
            Ok(s) => s + "\n",
            Err(e) => return config_error(e.to_string()),
        }
    } else {
        reports.iter().map(ToString::to_string).collect()
    };
    // A closed pipe (`| head`) is not a verification failure.
    let _ = io::stdout().lock().write_all(text.as_bytes());
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
