use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use qalg::json::{EnsembleJson, QuantityJson, ValuationJson};
use qalg::{AlgebraContext, AlgebraKind, AutomorphismFamily};
use qalg_cli::demos::{self, HydrogenParams, MoonParams};

#[derive(Parser)]
#[command(
    name = "qalg",
    about = "Q-algebra toolkit: quantities, ensembles, Bell correlations, effects, states and dynamics",
    version
)]
struct Cli {
    /// Machine-readable JSON output with the same numeric content as the
    /// human format.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every randomized check (printed in the output).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Override the pass tolerance of the selected command's report.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// JSON input file for the file-driven commands.
    #[arg(long, global = true)]
    file: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// CHSH correlators for the built-in spin pair, or for a quadruple and
    /// ensemble supplied with --file.
    Chsh,
    /// Sign-assignment enumeration for the anticommuting quadruple.
    MerminPeres,
    /// Ground-state radial moments of hydrogen by adaptive quadrature.
    Hydrogen {
        /// Bohr radius in meters.
        #[arg(long, default_value_t = demos::BOHR_RADIUS_M)]
        r0: f64,
        /// Integration cutoff in units of r0.
        #[arg(long, default_value_t = 40.0)]
        cutoff: f64,
    },
    /// Center-of-mass uncertainty of the Moon.
    Moon {
        /// Moon mass in kg.
        #[arg(long, default_value_t = demos::MOON_MASS_KG)]
        moon_mass: f64,
        /// Proton mass in kg.
        #[arg(long, default_value_t = demos::PROTON_MASS_KG)]
        proton_mass: f64,
        /// Mean atom mass in proton masses.
        #[arg(long, default_value_t = demos::ATOM_MASS_RATIO)]
        atom_mass_ratio: f64,
    },
    /// Exact weak-law scaling for qubit events over tensor powers.
    WeakLaw,
    /// Complementarity certificate for the Pauli pair, or for a pair
    /// supplied with --file.
    Complementarity {
        /// Half-width of the search box (file-driven runs default to
        /// 2(|f|+|g|)+1).
        #[arg(long)]
        range: Option<f64>,
        /// Coarse grid steps per axis.
        #[arg(long, default_value_t = 61)]
        steps: usize,
    },
    /// Apply an automorphism family to a quantity or state from --file.
    Evolve {
        /// Evolution time (overrides the value in the file).
        #[arg(long)]
        t: Option<f64>,
    },
    /// Randomized verification of the algebra, ensemble and automorphism
    /// laws.
    Axioms {
        #[arg(long, value_parser = parse_kind, default_value = "matrix")]
        kind: AlgebraKind,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Probability of an effect: built-in squared-amplitude demo, or an
    /// ensemble and effect supplied with --file.
    Probability,
}

fn parse_kind(s: &str) -> Result<AlgebraKind, String> {
    match s {
        "matrix" => Ok(AlgebraKind::Matrix),
        "diagonal" => Ok(AlgebraKind::Diagonal),
        other => Err(format!("unknown algebra kind {other:?}")),
    }
}

enum CliError {
    /// Exit code 2: I/O or parse problems.
    Parse(String),
    /// Exit code 1: a verified invariant failed or inputs violate a
    /// precondition.
    Invariant(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Parse(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(format!("json: {e}"))
    }
}

impl From<qalg::Error> for CliError {
    fn from(e: qalg::Error) -> Self {
        match e {
            qalg::Error::Parse { .. } => CliError::Parse(e.to_string()),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<qalg_cli::quad::QuadratureError> for CliError {
    fn from(e: qalg_cli::quad::QuadratureError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

// ---- file-driven inputs ----------------------------------------------------

#[derive(Deserialize)]
struct ChshSpec {
    ensemble: EnsembleJson,
    quadruple: [QuantityJson; 4],
}

#[derive(Deserialize)]
struct PairSpec {
    f: QuantityJson,
    g: QuantityJson,
}

#[derive(Deserialize)]
struct ProbabilitySpec {
    ensemble: EnsembleJson,
    effect: QuantityJson,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum FamilyJson {
    Hamiltonian {
        h: QuantityJson,
        #[serde(default = "default_hbar")]
        hbar: f64,
    },
    Scattering {
        s: QuantityJson,
    },
}

fn default_hbar() -> f64 {
    1.0
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum TargetJson {
    Quantity { quantity: QuantityJson },
    State { state: ValuationJson },
}

#[derive(Deserialize)]
struct EvolveSpec {
    family: FamilyJson,
    target: TargetJson,
    #[serde(default)]
    t: Option<f64>,
}

#[derive(Serialize)]
struct EvolveOutput {
    t: f64,
    evolved: TargetJson,
    residuals: qalg::AutomorphismResiduals,
}

fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    Ok(std::fs::read_to_string(path)?)
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, as_json: bool) -> Result<(), CliError> {
    if as_json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        println!("{value}");
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Chsh => {
            if let Some(path) = &cli.file {
                let spec: ChshSpec = serde_json::from_str(&read_file(path)?)?;
                let ensemble = spec.ensemble.to_ensemble()?;
                let quadruple = [
                    spec.quadruple[0].to_quantity()?,
                    spec.quadruple[1].to_quantity()?,
                    spec.quadruple[2].to_quantity()?,
                    spec.quadruple[3].to_quantity()?,
                ];
                let report = qalg::chsh(&ensemble, &quadruple)?;
                emit_report(&report, cli.json)?;
                Ok(report.tsirelson_ok)
            } else {
                let result = demos::cmd_chsh(seed, cli.tol.unwrap_or(1e-10));
                emit(&result, cli.json)?;
                Ok(result.pass)
            }
        }
        Command::MerminPeres => {
            let result = demos::cmd_mermin_peres(seed, cli.tol.unwrap_or(1e-12));
            emit(&result, cli.json)?;
            Ok(result.pass)
        }
        Command::Hydrogen { r0, cutoff } => {
            let params = HydrogenParams {
                r0_m: *r0,
                cutoff: *cutoff,
                ..HydrogenParams::default()
            };
            let result = demos::cmd_hydrogen(params, seed, cli.tol.unwrap_or(1e-6))?;
            emit(&result, cli.json)?;
            Ok(result.pass)
        }
        Command::Moon {
            moon_mass,
            proton_mass,
            atom_mass_ratio,
        } => {
            let params = MoonParams {
                moon_mass_kg: *moon_mass,
                proton_mass_kg: *proton_mass,
                atom_mass_ratio: *atom_mass_ratio,
                ..MoonParams::default()
            };
            let result = demos::cmd_moon(params, seed, cli.tol.unwrap_or(5e-3));
            emit(&result, cli.json)?;
            Ok(result.pass)
        }
        Command::WeakLaw => {
            let result = demos::cmd_weak_law(seed, cli.tol.unwrap_or(1e-10));
            emit(&result, cli.json)?;
            Ok(result.pass)
        }
        Command::Complementarity { range, steps } => {
            if let Some(path) = &cli.file {
                let spec: PairSpec = serde_json::from_str(&read_file(path)?)?;
                let f = spec.f.to_quantity()?;
                let g = spec.g.to_quantity()?;
                let box_range = range
                    .unwrap_or_else(|| 2.0 * (f.spectral_norm() + g.spectral_norm()) + 1.0);
                let cert = qalg::certify_complementarity(&f, &g, box_range, *steps)?;
                emit_report(&cert, cli.json)?;
                Ok(true)
            } else {
                let result = demos::cmd_complementarity(seed, cli.tol.unwrap_or(1e-6));
                emit(&result, cli.json)?;
                Ok(result.pass)
            }
        }
        Command::Evolve { t } => {
            let path = cli.file.clone().unwrap_or_default();
            let spec: EvolveSpec = if cli.file.is_some() {
                serde_json::from_str(&read_file(&path)?)?
            } else {
                // built-in demo: precession of σ1 under H = σ3 for a quarter
                // period
                EvolveSpec {
                    family: FamilyJson::Hamiltonian {
                        h: QuantityJson::from_quantity(&qalg::Quantity::pauli_z()),
                        hbar: 1.0,
                    },
                    target: TargetJson::Quantity {
                        quantity: QuantityJson::from_quantity(&qalg::Quantity::pauli_x()),
                    },
                    t: Some(std::f64::consts::FRAC_PI_2),
                }
            };
            let family = match &spec.family {
                FamilyJson::Hamiltonian { h, hbar } => {
                    AutomorphismFamily::hamiltonian(h.to_quantity()?, *hbar)?
                }
                FamilyJson::Scattering { s } => AutomorphismFamily::scattering(s.to_quantity()?)?,
            };
            let time = t.or(spec.t).unwrap_or(0.0);
            let evolved = match &spec.target {
                TargetJson::Quantity { quantity } => TargetJson::Quantity {
                    quantity: QuantityJson::from_quantity(&qalg::evolve_quantity(
                        &family,
                        &quantity.to_quantity()?,
                        time,
                    )?),
                },
                TargetJson::State { state } => TargetJson::State {
                    state: ValuationJson::from_valuation(&qalg::evolve_state(
                        &family,
                        &state.to_valuation()?,
                        time,
                    )?),
                },
            };
            let residuals = qalg::automorphism_residuals(&family, 25, seed)?;
            let output = EvolveOutput {
                t: time,
                evolved,
                residuals,
            };
            println!("{}", serde_json::to_string_pretty(&output)?);
            Ok(output.residuals.pass)
        }
        Command::Axioms { kind, dim, samples } => {
            let ctx = if let Some(path) = &cli.file {
                let parsed: qalg::json::ContextJson = serde_json::from_str(&read_file(path)?)?;
                parsed.to_context()?
            } else {
                AlgebraContext::new(*kind, *dim)?
            };
            let report = demos::cmd_axioms(ctx, *samples, seed)?;
            // always machine-readable on stdout
            println!("{}", serde_json::to_string_pretty(&report)?);
            if !report.pass {
                let first = report
                    .algebra
                    .first_failure()
                    .or(report.ensembles.first_failure());
                if let Some(check) = first {
                    eprintln!("first failing axiom: {}", check.name);
                }
            }
            Ok(report.pass)
        }
        Command::Probability => {
            if let Some(path) = &cli.file {
                let spec: ProbabilitySpec = serde_json::from_str(&read_file(path)?)?;
                let ensemble = spec.ensemble.to_ensemble()?;
                let effect = spec.effect.to_effect()?;
                let p = qalg::probability(&ensemble, &effect)?;
                if cli.json {
                    println!("{}", serde_json::json!({ "probability": p }));
                } else {
                    println!("probability: {p:.15}");
                }
                Ok(true)
            } else {
                let result = demos::cmd_probability(seed, cli.tol.unwrap_or(1e-12));
                emit(&result, cli.json)?;
                Ok(result.pass)
            }
        }
    }
}

fn emit_report<T: Serialize>(value: &T, _as_json: bool) -> Result<(), CliError> {
    // file-driven reports are emitted as JSON in both modes
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
