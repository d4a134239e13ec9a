use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dicke_ising_sweep::{
    execute, read_config, Axis, Command, FigureRecipe, Format, PartialConfig, SizeAxis,
    SweepConfig,
};

#[derive(Parser)]
#[command(name = "dicke-ising", version, about = "Ising chain and Dicke-Ising polariton sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Single-particle energies of the chain (exact, Bose, first-order HP)
    IsingSpectrum(Args),
    /// Lower and upper polaritons against k / k_c
    Polaritons(Args),
    /// First-order over Bose effective coupling against |eta|
    Saturation(Args),
    /// Finite-size shift of the lower polariton: grid sum and closed form
    FnCorrection(Args),
    /// Exact-diagonalization and BdG cross-checks
    Oracle(Args),
}

#[derive(clap::Args)]
struct Args {
    /// TOML config file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads (0 = all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Frozen figure parameter set
    #[arg(long)]
    recipe: Option<FigureRecipe>,
    /// Chain lengths: N, N1,N2,... or start:stop:count
    #[arg(long, allow_hyphen_values = true)]
    n: Option<SizeAxis>,
    /// J / w0, same forms as --n
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<Axis>,
    /// Omega_0 / w0
    #[arg(long)]
    nu: Option<Axis>,
    /// Zone-edge photon frequency / w0
    #[arg(long)]
    delta: Option<Axis>,
    /// Photon momenta per polariton curve
    #[arg(long)]
    k_points: Option<usize>,
    /// Comma list of F, B, Bt, Bc
    #[arg(long, value_delimiter = ',')]
    schemes: Option<Vec<String>>,
    /// Evaluate polaritons on the Pekar grid of each N
    #[arg(long)]
    finite_n: bool,
}

impl Args {
    fn layer(&self) -> PartialConfig {
        let mut p = PartialConfig::default();
        p.threads = self.threads;
        p.recipe = self.recipe;
        p.schemes = self.schemes.clone();
        p.chain.n = self.n.clone();
        p.chain.eta = self.eta.clone();
        p.cavity.nu = self.nu.clone();
        p.cavity.delta = self.delta.clone();
        p.cavity.k_points = self.k_points;
        p.cavity.finite_n = self.finite_n.then_some(true);
        p.output.format = self.format;
        p.output.path = self.out.clone();
        p
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match &cli.command {
        Sub::IsingSpectrum(a) => (Command::IsingSpectrum, a),
        Sub::Polaritons(a) => (Command::Polaritons, a),
        Sub::Saturation(a) => (Command::Saturation, a),
        Sub::FnCorrection(a) => (Command::FnCorrection, a),
        Sub::Oracle(a) => (Command::Oracle, a),
    };
    let result = args
        .config
        .as_deref()
        .map(read_config)
        .transpose()
        .and_then(|file| SweepConfig::resolve(command, file, args.layer()))
        .and_then(|cfg| execute(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
