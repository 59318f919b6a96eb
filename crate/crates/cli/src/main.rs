use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_core::bench::{self, BenchConfig, DEFAULT_M_MAX};
use hecke_core::verify::{self, Options, Suite};
use hecke_core::{HeckeElement, HeckeZ, Permutation, RingCtx, Tower};

type BoxResult<T> = Result<T, Box<dyn std::error::Error>>;

const SEED_VAR: &str = "HECKE_SEED";

#[derive(Parser)]
#[command(
    name = "hecke",
    version,
    about = "Tower arithmetic and Iwahori-Hecke algebra multiplication in type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic on towers, written as digit lists like [1,2,1,3].
    Tower {
        #[command(subcommand)]
        action: TowerAction,
    },
    /// Multiply two Hecke algebra elements given as JSON (inline, a file path, or - for stdin).
    Hecke {
        left: String,
        right: String,
        /// Representation used for the product; defaults to that of the left operand.
        #[arg(long, value_enum)]
        repr: Option<ReprArg>,
        /// Count ring operations and append `ops=N`.
        #[arg(long)]
        count: bool,
    },
    /// Count operations for random dense products and print CSV.
    Bench {
        #[arg(long, default_value_t = 2)]
        m_min: usize,
        #[arg(long, default_value_t = DEFAULT_M_MAX)]
        m_max: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// RNG seed; the HECKE_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow m = 6.
        #[arg(long)]
        big: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Fill the wall_ns column (makes the output nondeterministic).
        #[arg(long)]
        timing: bool,
        /// Write the CSV here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run the built-in acceptance checks.
    Verify {
        /// Run a single suite: towers, hecke, cost or bench.
        #[arg(long)]
        only: Option<Suite>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum TowerAction {
    /// Tower of the product w w'.
    Mult { left: Tower, right: Tower },
    /// Tower of the inverse.
    Inv { tower: Tower },
    /// Coxeter length.
    Len { tower: Tower },
    /// Indices i of the left descents s_i.
    Descents { tower: Tower },
    /// Reduced word in the simple reflections.
    Word { tower: Tower },
    /// The permutation, in cycle notation unless --images is given.
    Perm {
        tower: Tower,
        #[arg(long)]
        images: bool,
    },
    /// Tower of a permutation given as [images] or (cycles).
    Fromperm { perm: Permutation },
    /// ASCII tower diagram.
    Diagram { tower: Tower },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReprArg {
    Simple,
    Nested,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> BoxResult<ExitCode> {
    let mut out = io::stdout().lock();
    match command {
        Command::Tower { action } => writeln!(out, "{}", tower(action)?)?,
        Command::Hecke {
            left,
            right,
            repr,
            count,
        } => {
            write!(out, "{}", hecke(&left, &right, repr, count)?)?;
        }
        Command::Bench {
            m_min,
            m_max,
            trials,
            seed,
            big,
            jobs,
            timing,
            output,
        } => {
            let seed = match std::env::var(SEED_VAR) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|e| format!("{SEED_VAR}={v:?} is not a valid seed: {e}"))?,
                Err(_) => seed,
            };
            let config = BenchConfig {
                m_min,
                m_max,
                trials,
                seed,
                timing,
                big,
                jobs,
            };
            let csv = bench::to_csv(&bench::run(&config)?);
            match output {
                Some(path) => {
                    fs::write(&path, csv).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => out.write_all(csv.as_bytes())?,
            }
        }
        Command::Verify { only, jobs } => {
            let mut opts = Options {
                only,
                ..Default::default()
            };
            if let Some(j) = jobs {
                opts.jobs = j;
            }
            let report = verify::run_with(&opts, |o| {
                println!("{o}");
            });
            writeln!(out, "{}", report.summary())?;
            if let Some(f) = report.first_failure() {
                eprintln!(
                    "verify failed at criterion {} ({}/{}): {}",
                    f.criterion.id, f.criterion.suite, f.criterion.name, f.detail
                );
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn tower(action: TowerAction) -> BoxResult<String> {
    Ok(match action {
        TowerAction::Mult { left, right } => left.product(&right).to_string(),
        TowerAction::Inv { tower } => tower.inverse().to_string(),
        TowerAction::Len { tower } => tower.length().to_string(),
        TowerAction::Descents { tower } => {
            let d: Vec<String> = tower.descent_set().iter().map(|i| i.to_string()).collect();
            format!("[{}]", d.join(","))
        }
        TowerAction::Word { tower } => tower.reduced_word().to_string(),
        TowerAction::Perm { tower, images } => {
            let p = tower.to_permutation(tower.digits().len() + 1)?;
            if images {
                let im: Vec<String> = p.images().iter().map(|i| i.to_string()).collect();
                format!("[{}]", im.join(","))
            } else {
                p.to_string()
            }
        }
        TowerAction::Fromperm { perm } => Tower::from_permutation(&perm).to_string(),
        TowerAction::Diagram { tower } => tower.diagram().trim_end_matches('\n').to_string(),
    })
}

fn read_element(arg: &str, stdin_used: &mut bool) -> BoxResult<HeckeZ> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        if std::mem::replace(stdin_used, true) {
            return Err("only one operand can be read from stdin".into());
        }
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    };
    Ok(text.parse()?)
}

fn hecke(left: &str, right: &str, repr: Option<ReprArg>, count: bool) -> BoxResult<String> {
    let mut stdin_used = false;
    let h = read_element(left, &mut stdin_used)?;
    let g = read_element(right, &mut stdin_used)?;
    let repr = repr.unwrap_or(match h {
        HeckeElement::Simple(_) => ReprArg::Simple,
        HeckeElement::Nested(_) => ReprArg::Nested,
    });
    let ctx = if count {
        RingCtx::counting()
    } else {
        RingCtx::plain()
    };
    let product = match repr {
        ReprArg::Simple => HeckeElement::Simple(h.to_simple().multiply(&g.to_simple(), &ctx)?),
        ReprArg::Nested => HeckeElement::Nested(h.to_nested().multiply(&g.to_nested(), &ctx)?),
    };
    let mut text = format!("{}\n", product.to_json());
    if count {
        text.push_str(&format!("ops={}\n", ctx.counts().total()));
    }
    Ok(text)
}
