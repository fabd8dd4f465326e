use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use peiffer::commands::{
    cmd_check_crossed, cmd_check_theorems, cmd_commutator, cmd_coproduct, cmd_generate, cmd_product, cmd_reflect,
    cmd_validate, Format, Output,
};
use peiffer::generate::{GenConfig, VarietyChoice};
use peiffer::limits::{set_limits, Limits, DEFAULT_MAX_DIM, DEFAULT_MAX_ORDER};
use peiffer::theorems::SuiteConfig;

#[derive(Parser)]
#[command(name = "peiffer", version, about = "Peiffer commutators and crossed-module constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group order; raising it above 64 also raises the size cap.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Largest algebra dimension; raising it above 12 also raises the size cap.
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = VarietyArg::Mixed)]
    variety: VarietyArg,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Directory for output files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarietyArg {
    Groups,
    Algebras,
    Mixed,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an object, action, module or morphism file.
    Validate { path: PathBuf },
    /// Test the Peiffer identity.
    CheckCrossed { path: PathBuf },
    /// Peiffer commutator of two subobjects given as `all`, `none` or a JSON
    /// list of generators.
    Commutator {
        path: PathBuf,
        #[arg(default_value = "all")]
        x: String,
        #[arg(default_value = "all")]
        y: String,
    },
    /// Peiffer product of two modules over the same base.
    Product { x: PathBuf, y: PathBuf },
    /// Crossed-module reflection.
    Reflect { path: PathBuf },
    /// Coproduct of two crossed modules.
    Coproduct { x: PathBuf, y: PathBuf },
    /// Run the theorem checks on the catalog and on random instances.
    CheckTheorems {
        /// Random instances on top of the catalog.
        #[arg(long, default_value_t = 0)]
        count: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        /// Add an instance that violates the pre-crossed condition.
        #[arg(long)]
        inject_corrupt: bool,
        /// Include wall time per report.
        #[arg(long)]
        timings: bool,
    },
    /// Emit validated random pre-crossed modules.
    Generate {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

fn gen_config(g: &Global, count: usize, budget: usize) -> GenConfig {
    let d = GenConfig::default();
    GenConfig {
        seed: g.seed,
        count,
        variety: match g.variety {
            VarietyArg::Groups => VarietyChoice::Groups,
            VarietyArg::Algebras => VarietyChoice::Algebras,
            VarietyArg::Mixed => VarietyChoice::Mixed,
        },
        max_order: g.max_order.unwrap_or(d.max_order),
        max_dim: g.max_dim.unwrap_or(d.max_dim),
        budget,
    }
}

fn raise_caps(g: &Global) -> Option<String> {
    let limits = Limits {
        max_order: g.max_order.unwrap_or(0).max(DEFAULT_MAX_ORDER),
        max_dim: g.max_dim.unwrap_or(0).max(DEFAULT_MAX_DIM),
    };
    set_limits(limits);
    (limits != Limits::default()).then(|| {
        format!(
            "warning: size caps raised to order {} and dimension {}; this may be slow\n",
            limits.max_order, limits.max_dim
        )
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let warning = raise_caps(g);
    let format = match g.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let out = g.out.as_deref();
    let result: Output = match &cli.command {
        Command::Validate { path } => cmd_validate(path, format),
        Command::CheckCrossed { path } => cmd_check_crossed(path, format),
        Command::Commutator { path, x, y } => cmd_commutator(path, x, y, format),
        Command::Product { x, y } => cmd_product(x, y, format, out),
        Command::Reflect { path } => cmd_reflect(path, format, out),
        Command::Coproduct { x, y } => cmd_coproduct(x, y, format, out),
        Command::CheckTheorems {
            count,
            budget,
            inject_corrupt,
            timings,
        } => cmd_check_theorems(
            &SuiteConfig {
                generate: gen_config(g, *count, *budget),
                random: *count,
                inject_corrupt: *inject_corrupt,
                timings: *timings,
            },
            format,
        ),
        Command::Generate { count, budget } => cmd_generate(&gen_config(g, *count, *budget), format, out),
    };
    let mut stderr = std::io::stderr().lock();
    if let Some(w) = warning {
        let _ = stderr.write_all(w.as_bytes());
    }
    let _ = stderr.write_all(result.stderr.as_bytes());
    let _ = std::io::stdout().lock().write_all(result.stdout.as_bytes());
    ExitCode::from(result.code as u8)
}
