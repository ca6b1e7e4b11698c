//! `jack`: exact Jack symmetric function computations and verification
//! suites from the command line.
//!
//! Exit codes: 0 on success (and on fully verified suites), 1 when a
//! verification suite finds a failing case, 2 on usage errors.

mod render;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use jacklr::hooks::{self, Variant};
use jacklr::jack;
use jacklr::lr;
use jacklr::partition::Partition;

#[derive(Parser)]
#[command(
    name = "jack",
    about = "Exact integral-form Jack polynomials, Littlewood-Richardson tables, hook-product formulas, and identity verification suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Render the indeterminate as a Greek letter instead of "alpha".
    #[arg(long, global = true)]
    unicode: bool,

    /// Worker threads for verification suites (output order is
    /// deterministic regardless).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

impl OutputOpts {
    fn var(&self) -> &'static str {
        if self.unicode {
            "\u{03b1}"
        } else {
            "alpha"
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    A,
    B,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::A => Variant::A,
            VariantArg::B => Variant::B,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the monomial and power-sum expansions of J_lambda.
    Expand {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Full Littlewood-Richardson table of J_mu J_nu with Stanley
    /// coefficients, factored where possible.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// One Stanley structure coefficient <J_mu J_nu, J_lambda>.
    Stanley {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Hook-assignment formulas (U/L grids plus the product value).
    #[command(subcommand)]
    Hooks(HooksCommand),
    /// Exhaustive verification suites; exit 1 when a case fails.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum HooksCommand {
    /// Rectangular case: mu inside an m x n rectangle.
    Rect {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::A)]
        variant: VariantArg,
        /// Also print the Littlewood-Richardson fraction form.
        #[arg(long)]
        lr_form: bool,
    },
    /// Rectangular-union case: generic mu against an m x n rectangle.
    RectUnion {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::A)]
        variant: VariantArg,
        #[arg(long)]
        lr_form: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Sum-product identity for all pairs with |mu| + |nu| <= max-size.
    SumProduct {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Norm formula (inner product vs hook product) for all |lambda| <= max-size.
    Norms {
        #[arg(long, default_value_t = 7)]
        max_size: usize,
    },
    /// Flip and mirror rules for all shapes inside one rectangle.
    Flip {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Rectangular-union hook formula for all generic shapes with
    /// |mu union rectangle| <= max-size (rectangles up to 4 x 4).
    RectUnion {
        #[arg(long, default_value_t = 9)]
        max_size: usize,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: jacklr::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    load_cache();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    };
    save_cache();
    code
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let out = &cli.out;
    match &cli.command {
        Command::Expand { lambda } => {
            render::expand(lambda, out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Lr { mu, nu } => {
            render::lr_table(mu, nu, out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Stanley { mu, nu, lambda } => {
            let value = lr::stanley_coeff(mu, nu, lambda).map_err(|e| e.to_string())?;
            render::stanley(mu, nu, lambda, &value, out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Hooks(h) => {
            match h {
                HooksCommand::Rect {
                    mu,
                    m,
                    n,
                    variant,
                    lr_form,
                } => {
                    let sp = hooks::rectangular_assignment(mu, *m, *n, (*variant).into())
                        .map_err(|e| e.to_string())?;
                    render::stanley_product(&sp, *lr_form, out);
                }
                HooksCommand::RectUnion {
                    mu,
                    m,
                    n,
                    variant,
                    lr_form,
                } => {
                    let sp = hooks::rect_union_assignment(mu, *m, *n, (*variant).into())
                        .map_err(|e| e.to_string())?;
                    render::stanley_product(&sp, *lr_form, out);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(v) => {
            let outcome = match v {
                VerifyCommand::SumProduct { max_size } => {
                    suites::sum_product(*max_size, out)
                }
                VerifyCommand::Norms { max_size } => suites::norms(*max_size, out),
                VerifyCommand::Flip { m, n } => suites::flip(*m, *n, out),
                VerifyCommand::RectUnion { max_size } => suites::rect_union(*max_size, out),
            };
            Ok(if outcome {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Loads persisted Jack expansion tables from `JACK_CACHE_DIR`, if set.
fn load_cache() {
    let Ok(dir) = std::env::var("JACK_CACHE_DIR") else {
        return;
    };
    let Ok(entries) = std::fs::read_dir(&dir) else {
        return;
    };
    for entry in entries.flatten() {
        let path = entry.path();
        let name = entry.file_name();
        let name = name.to_string_lossy();
        if !(name.starts_with("jack-degree-") && name.ends_with(".json")) {
            continue;
        }
        let Ok(text) = std::fs::read_to_string(&path) else {
            continue;
        };
        let Ok(value) = serde_json::from_str(&text) else {
            continue;
        };
        // Invalid or stale files are ignored; tables are rebuilt on demand.
        let _ = jack::preload_degree_table(&value);
    }
}

/// Persists any freshly computed degree tables back to `JACK_CACHE_DIR`.
fn save_cache() {
    let Ok(dir) = std::env::var("JACK_CACHE_DIR") else {
        return;
    };
    if std::fs::create_dir_all(&dir).is_err() {
        return;
    }
    for n in jack::cached_degree_list() {
        let path = std::path::Path::new(&dir).join(format!("jack-degree-{n}.json"));
        if path.exists() {
            continue;
        }
        let value = jack::degree_table_json(n);
        let _ = std::fs::write(path, serde_json::to_string(&value).unwrap());
    }
}
