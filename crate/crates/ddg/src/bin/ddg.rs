//! Thin command-line wrapper around the library: generate datasets, run the
//! baseline benchmark harness, inspect event logs, and export density grids.

use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use ddg::config::{parse_config, preset, ScenarioConfig};
use ddg::density::density_grid;
use ddg::engine::{run, Engine, LogHeader};
use ddg::evaluation::{baseline_optimize, metrics_report, IntraClusterDistance};
use ddg::export::{
    density_csv, event_log_string, read_event_log, records_csv, window_csv,
};
use ddg::stochastics::{RandomStream, Substream};
use ddg::{Error, Result};

#[derive(Parser)]
#[command(
    name = "ddg",
    version,
    about = "Dynamic dataset generator for clustering benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ScenarioArgs {
    /// Scenario TOML file.
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Built-in preset name (see `ddg generate --preset help`).
    #[arg(long)]
    preset: Option<String>,
    /// Master seed override.
    #[arg(long)]
    seed: Option<u64>,
    /// Tick budget override.
    #[arg(long)]
    ticks: Option<u64>,
}

impl ScenarioArgs {
    fn load(&self) -> Result<ScenarioConfig> {
        let mut config = match (&self.config, &self.preset) {
            (Some(path), _) => parse_config(&fs::read_to_string(path)?)?,
            (None, Some(name)) if name == "help" => {
                println!("available presets:");
                for name in ddg::PRESET_NAMES {
                    println!("  {name}");
                }
                std::process::exit(0);
            }
            (None, Some(name)) => preset(name)?,
            (None, None) => ScenarioConfig::default(),
        };
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(ticks) = self.ticks {
            config.ticks = ticks;
        }
        for warning in config.validate()? {
            eprintln!("warning: {warning}");
        }
        Ok(config)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the generator and export the dataset, snapshots, and event log.
    Generate {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Output directory.
        #[arg(long, default_value = "ddg-out")]
        out: PathBuf,
        /// Snapshot the window every N ticks (overrides the config).
        #[arg(long)]
        snapshot_every: Option<u64>,
    },
    /// Run the generator under the baseline optimizer and report metrics.
    Run {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(long, default_value = "ddg-out")]
        out: PathBuf,
        #[arg(long)]
        snapshot_every: Option<u64>,
        /// Optimization algorithm; only `baseline` ships.
        #[arg(long, default_value = "baseline")]
        algorithm: String,
        /// Evaluation budget, one engine tick each (defaults to the tick budget).
        #[arg(long)]
        budget: Option<u64>,
        /// Acceptable-quality threshold for robustness-over-time scoring.
        #[arg(long)]
        root_threshold: f64,
    },
    /// Summarize an event log.
    Inspect {
        /// Path to an events.jsonl file.
        log: PathBuf,
    },
    /// Export a grid-evaluated mixture density CSV (2-D scenarios only).
    ExportDensity {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Cells per axis.
        #[arg(long, default_value_t = 200)]
        resolution: usize,
        #[arg(long, default_value = "density.csv")]
        out: PathBuf,
    },
}

fn main() {
    if let Err(e) = dispatch(Cli::parse()) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate {
            scenario,
            out,
            snapshot_every,
        } => generate(scenario, out, snapshot_every),
        Command::Run {
            scenario,
            out,
            snapshot_every,
            algorithm,
            budget,
            root_threshold,
        } => run_benchmark(scenario, out, snapshot_every, algorithm, budget, root_threshold),
        Command::Inspect { log } => inspect(&log),
        Command::ExportDensity {
            scenario,
            resolution,
            out,
        } => export_density(scenario, resolution, &out),
    }
}

fn write_common_artifacts(
    out: &Path,
    header: &LogHeader,
    events: &[ddg::ChangeEvent],
    window: &ddg::DatasetWindow,
    dims: usize,
) -> Result<()> {
    fs::create_dir_all(out)?;
    fs::write(
        out.join("manifest.json"),
        serde_json::to_string_pretty(header).map_err(|e| Error::ConfigSyntax(e.to_string()))?,
    )?;
    fs::write(out.join("events.jsonl"), event_log_string(header, events)?)?;
    fs::write(
        out.join("dataset.csv"),
        window_csv(&window.to_points(), dims),
    )?;
    Ok(())
}

fn generate(scenario: ScenarioArgs, out: PathBuf, snapshot_every: Option<u64>) -> Result<()> {
    let mut config = scenario.load()?;
    if let Some(every) = snapshot_every {
        config.snapshots.every = every;
    }
    let output = run(&config, None, None)?;
    write_common_artifacts(
        &out,
        &output.header,
        &output.events,
        &output.window,
        output.state.dims,
    )?;
    for snapshot in &output.snapshots {
        let dims = snapshot.points.first().map_or(output.state.dims, |p| p.coords.len());
        fs::write(
            out.join(format!("snapshot_{:08}.csv", snapshot.tick)),
            window_csv(&snapshot.points, dims),
        )?;
    }
    println!(
        "generated {} ticks: {} events, window of {} points, {} snapshots -> {}",
        config.ticks,
        output.events.len(),
        output.window.len(),
        output.snapshots.len(),
        out.display()
    );
    Ok(())
}

fn run_benchmark(
    scenario: ScenarioArgs,
    out: PathBuf,
    snapshot_every: Option<u64>,
    algorithm: String,
    budget: Option<u64>,
    root_threshold: f64,
) -> Result<()> {
    if algorithm != "baseline" {
        return Err(Error::Config {
            path: "algorithm".into(),
            constraint: format!("unknown algorithm `{algorithm}`; only `baseline` ships"),
        });
    }
    let mut config = scenario.load()?;
    if let Some(every) = snapshot_every {
        config.snapshots.every = every;
    }
    let budget = budget.unwrap_or(config.ticks);
    config.ticks = budget;

    let header = LogHeader::for_config(&config)?;
    let mut engine = Engine::from_config(&config)?;
    let mut optimizer_stream = RandomStream::new(config.seed, Substream::Optimizer);
    let records = baseline_optimize(
        &mut engine,
        &IntraClusterDistance,
        budget,
        root_threshold,
        &mut optimizer_stream,
    )?;
    let report = metrics_report(&records, engine.events(), root_threshold);

    write_common_artifacts(&out, &header, engine.events(), &engine.window, engine.state.dims)?;
    fs::write(out.join("records.csv"), records_csv(&records))?;
    fs::write(out.join("report.txt"), &report)?;
    print!("{report}");
    println!("artifacts -> {}", out.display());
    Ok(())
}

fn inspect(log: &Path) -> Result<()> {
    let file = fs::File::open(log)?;
    let (header, events) = read_event_log(BufReader::new(file))?;
    println!("schema:      {}", header.schema);
    println!("prng:        {}", header.prng);
    println!("seed:        {}", header.seed);
    println!("config hash: {}", header.config_hash);
    println!("events:      {}", events.len());
    if let (Some(first), Some(last)) = (events.first(), events.last()) {
        println!("tick span:   {}..{}", first.tick, last.tick);
    }
    let mut counts = std::collections::BTreeMap::new();
    for event in &events {
        *counts.entry(event.kind.name()).or_insert(0usize) += 1;
    }
    for (name, count) in counts {
        println!("  {name}: {count}");
    }
    Ok(())
}

fn export_density(scenario: ScenarioArgs, resolution: usize, out: &Path) -> Result<()> {
    let config = scenario.load()?;
    let engine = Engine::from_config(&config)?;
    let grid = density_grid(&engine.state, resolution)?;
    if let Some(parent) = out.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(out, density_csv(&grid))?;
    println!(
        "density grid {resolution}x{resolution}, integral {:.4} -> {}",
        grid.integral(),
        out.display()
    );
    Ok(())
}
