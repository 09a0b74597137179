//! `supereasy`: enumeration, law checks, closures, group sampling and
//! Hom-space reports for the signed partition calculus.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a
//! usage error.

mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use supereasy::verify::{header, TOOL_NAME, TOOL_VERSION};
use supereasy::{Family, PartitionClass, Sign, SuperSpace};

#[derive(Parser, Debug)]
#[command(name = "supereasy", version, about = "Signed partition calculus over super-spaces")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Largest total number of legs considered.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_points: usize,
    /// Largest space dimension accepted.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct SpaceArgs {
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value_t = 0)]
    pub q: usize,
    #[arg(long, default_value = "+1", allow_hyphen_values = true)]
    pub eps: Sign,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count partitions of a class per (k, l), or list one (k, l).
    Enumerate {
        #[arg(long, default_value = "p_even")]
        class: PartitionClass,
        #[arg(long, requires = "l")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        l: Option<usize>,
    },
    /// Evaluate the signed symbol of a partition on 1-based indices.
    Delta {
        #[command(flatten)]
        space: SpaceArgs,
        /// Alias, inline JSON or a JSON file.
        #[arg(long)]
        partition: String,
        #[arg(long, value_delimiter = ',')]
        upper: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        lower: Vec<usize>,
    },
    /// Build the sparse map of a partition.
    BuildT {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        partition: String,
        /// Only report the number of nonzero entries.
        #[arg(long)]
        count: bool,
    },
    /// Identity, tensor, adjoint and composition laws on one space.
    Laws {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "p_even")]
        class: PartitionClass,
    },
    /// Closure of generators within a leg bound, optionally compared with a class.
    Closure {
        /// Aliases, inline JSON or JSON files; comma separated or repeated.
        #[arg(long = "gen", value_delimiter = ',')]
        generators: Vec<String>,
        /// Defaults to --max-points.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        compare: Option<PartitionClass>,
    },
    /// Draw one group element and report its membership residuals.
    Sample {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Lie algebra dimension of O-bar or B-bar.
    Liedim {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Enumerate the super-symmetric group and compare its order.
    EnumSbar {
        #[command(flatten)]
        space: SpaceArgs,
        /// Also print the matrices.
        #[arg(long)]
        list: bool,
    },
    /// The Gamma conjugator and its residuals at an eps = +1 space.
    Gamma {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Span rank against commutant dimension for one (family, class, k, l).
    Homreport {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        class: PartitionClass,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
    /// The full acceptance battery.
    Suite {
        /// Smaller sizes for a fast run.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
}

/// One rendered result: a body per format plus what goes into the header.
pub struct Report {
    pub command: &'static str,
    pub config: Vec<(String, String)>,
    pub tags: Vec<String>,
    pub text: String,
    pub csv: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            config: Vec::new(),
            tags: Vec::new(),
            text: String::new(),
            csv: String::new(),
            json: Value::Null,
            ok: true,
        }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.config.push((key.to_string(), value.to_string()));
    }

    pub fn space(&mut self, s: &SuperSpace) {
        self.set("p", s.p());
        self.set("q", s.q());
        self.set("eps", s.epsilon());
    }

    fn render(&self, common: &Common) -> String {
        let mut config = vec![
            ("seed".to_string(), common.seed.to_string()),
            ("tol".to_string(), format!("{:e}", common.tol)),
            ("max_points".to_string(), common.max_points.to_string()),
            ("max_n".to_string(), common.max_n.to_string()),
            ("format".to_string(), common.format.name().to_string()),
        ];
        config.extend(self.config.iter().cloned());
        match common.format {
            Format::Json => {
                let mut cfg = Map::new();
                for (k, v) in &config {
                    cfg.insert(k.clone(), Value::String(v.clone()));
                }
                let doc = json!({
                    "tool": TOOL_NAME,
                    "version": TOOL_VERSION,
                    "command": self.command,
                    "config": cfg,
                    "checks": self.tags,
                    "passed": self.ok,
                    "result": self.json,
                });
                serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
            }
            Format::Csv | Format::Text => {
                let echo: Vec<String> = config.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let tags: Vec<&str> = self.tags.iter().map(String::as_str).collect();
                let body = if common.format == Format::Csv { &self.csv } else { &self.text };
                header(self.command, &echo.join(" "), &tags) + body
            }
        }
    }
}

pub fn space_of(args: &SpaceArgs, common: &Common) -> supereasy::Result<SuperSpace> {
    let s = SuperSpace::new(args.p, args.q, args.eps)?;
    if s.n() > common.max_n {
        return Err(supereasy::Error::BoundExceeded { points: s.n(), bound: common.max_n });
    }
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match commands::run(&cli.command, &cli.common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = report.render(&cli.common);
    let written = match &cli.common.out {
        Some(path) => fs::write(path, &rendered),
        None => std::io::stdout().lock().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
