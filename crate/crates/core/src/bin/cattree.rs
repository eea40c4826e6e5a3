use std::path::{Path, PathBuf};
use std::process::ExitCode;

use category_trees::cli::{
    cmd_bench, cmd_classify, cmd_recluster, cmd_train, OutputFormat, Overrides, RunConfig,
};
use category_trees::{Forest, Result};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "cattree", version, about = "Category Trees clustering and variance analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Train a forest and write forest.json + summary.json
    Train {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Secondary clustering, reclustering and the before/after variance table
    Recluster {
        #[arg(long)]
        config: PathBuf,
        /// Reuse a trained forest instead of training one
        #[arg(long)]
        forest: Option<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Print one predicted category per input row
    Classify {
        #[arg(long)]
        config: PathBuf,
        /// CSV with a header naming the feature columns
        #[arg(long)]
        input: PathBuf,
        /// Forest JSON (defaults to <output_dir>/forest.json)
        #[arg(long)]
        forest: Option<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Train-set and seeded hold-out accuracy
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
}

fn load(config: &Path, overrides: &Overrides) -> Result<RunConfig> {
    let mut cfg = RunConfig::load(config)?;
    cfg.apply(overrides)?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Train { config, overrides } => {
            let cfg = load(&config, &overrides)?;
            let out = cmd_train(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&out.summary)?);
        }
        Command::Recluster {
            config,
            forest,
            overrides,
        } => {
            let cfg = load(&config, &overrides)?;
            let out = cmd_recluster(&cfg, forest.as_deref())?;
            if !out.report.row_count_matches() {
                eprintln!(
                    "warning: expected {} rows after cleaning, got {}",
                    out.report.expected_rows.unwrap_or_default(),
                    out.report.rows
                );
            }
            match cfg.report.format {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&out.report)?),
                OutputFormat::Table => {
                    let noun = cfg.report.cluster_noun.as_deref().unwrap_or("Cluster");
                    print!("{}", out.render_table(noun));
                }
            }
        }
        Command::Classify {
            config,
            input,
            forest,
            overrides,
        } => {
            let cfg = load(&config, &overrides)?;
            let path = forest.unwrap_or_else(|| cfg.forest_path());
            let text = std::fs::read_to_string(&path)
                .map_err(|e| category_trees::Error::Config(format!("{}: {e}", path.display())))?;
            let forest = Forest::from_json(&text)?;
            for category in cmd_classify(&forest, &input)? {
                println!("{category}");
            }
        }
        Command::Bench { config, overrides } => {
            let cfg = load(&config, &overrides)?;
            let summary = cmd_bench(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&summary)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
