mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mirrorcheck_core::{Error, OrderKind};

#[derive(Parser, Debug)]
#[command(
    name = "mirrorcheck",
    version,
    about = "Exact checks for the deformed Fermat potential and its hypersurface"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Emit the versioned JSON schema instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include per-sector data, full hom tables and matrices.
    #[arg(long, global = true)]
    pub full: bool,
    #[arg(long, global = true, env = "MIRRORCHECK_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, default_value = "degrevlex", value_parser = parse_order)]
    pub order: OrderKind,
    /// Take the non-identity sectors from the closed-form criterion.
    #[arg(long, global = true)]
    pub trust_sector_criterion: bool,
    /// Wall-clock budget for `sweep`.
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
}

fn parse_order(s: &str) -> Result<OrderKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Params {
    #[arg(short = 'n')]
    pub n: u32,
    #[arg(short = 'a')]
    pub a: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compare dim HH* with dim QH* and run the side checks.
    Verify(Params),
    /// Orbifold Hochschild dimensions.
    Hh(Params),
    /// Primitive Hodge numbers and the index bijection counts.
    Hodge(Params),
    /// Hom ranks between thimbles.
    Homs {
        #[command(flatten)]
        params: Params,
        /// Source index, e.g. `1,1,1`.
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
    },
    /// Connectivity of the graph of nonzero homs.
    Graph(Params),
    /// Build and verify the Koszul matrix factorization.
    Koszul(Params),
    /// Milnor number of the deformed (or Fermat) potential.
    Milnor {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        fermat: bool,
        /// Global Jacobian ring instead of the local algebra at the origin.
        #[arg(long)]
        global: bool,
    },
    /// The three degree bounds.
    Bounds(Params),
    /// Run `verify` over ranges of n and a.
    Sweep {
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 3)]
        a_min: u32,
        #[arg(long, default_value_t = 10)]
        a_max: u32,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(err) => {
            let code = match err.downcast_ref::<Error>() {
                Some(e) if e.is_resource_cap() => EXIT_RESOURCE,
                Some(
                    Error::InvalidParameters(_)
                    | Error::IndexOutOfRange(_)
                    | Error::Parse(_)
                    | Error::ArityMismatch { .. },
                ) => EXIT_USAGE,
                _ => EXIT_CHECK_FAILED,
            };
            if cli.global.json {
                println!("{}", render::error_json(&err, code));
            }
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
