mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use trivsource::export::{cache_key, BrauerTableArtifact, LabeledMatrix};
use trivsource::monomial::monomial_pairs;
use trivsource::permgroup::named::parse_group;
use trivsource::permgroup::{is_prime, Group, DEFAULT_ORDER_CAP};
use trivsource::tsring::verify::verify_all;
use trivsource::tsring::TsContext;
use trivsource::Error;

use cache::Cache;

/// Exact species tables, idempotents and linearization matrices of trivial source rings.
#[derive(Parser)]
#[command(name = "trivsource", version)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Named group ("S4", "dihedral 8", "C3 x C3") or generators in cycle notation.
    #[arg(long, global = true)]
    group: Option<String>,
    /// The characteristic.
    #[arg(short = 'p', long = "prime", global = true)]
    p: Option<u32>,
    /// Seed for the randomized module decomposition.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cache directory; defaults to $TRIVSOURCE_CACHE_DIR, then $XDG_CACHE_HOME/trivsource,
    /// then ~/.cache/trivsource.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    /// Refuse groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    max_order: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible and projective Brauer characters of N_G(P)/P.
    BrauerTable {
        /// Index of the p-subgroup class, in increasing order; 0 is the trivial subgroup.
        #[arg(long, default_value_t = 0)]
        psubgroup: usize,
    },
    /// The species table N: rows (Q, [s]), columns (P, phi).
    SpeciesTable,
    /// Primitive idempotents expanded in the canonical basis.
    Idempotents,
    /// Images of the monomial Burnside basis under linearization.
    Linmap,
    /// Runs every exact property check.
    Verify,
}

struct SessionConfig {
    group: Arc<Group>,
    p: u32,
    seed: u64,
    format: Format,
    cache: Cache,
}

impl SessionConfig {
    fn new(args: ConfigArgs) -> anyhow::Result<SessionConfig> {
        let spec = args
            .group
            .ok_or_else(|| Error::Parse("--group is required".into()))?;
        let p = args
            .p
            .ok_or_else(|| Error::Parse("-p is required".into()))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p).into());
        }
        let group = Arc::new(parse_group(&spec, args.max_order)?);
        if group.order() % p as usize != 0 {
            eprintln!(
                "warning: {p} does not divide |G| = {}; the Sylow subgroup is trivial",
                group.order()
            );
        }
        let dir = if args.no_cache {
            None
        } else {
            args.cache_dir.or_else(default_cache_dir)
        };
        Ok(SessionConfig {
            group,
            p,
            seed: args.seed,
            format: args.format,
            cache: Cache::new(dir),
        })
    }

    fn context(&self) -> anyhow::Result<TsContext> {
        Ok(TsContext::new(self.group.clone(), self.p, self.seed)?)
    }

    fn key(&self, kind: &str) -> String {
        cache_key(&self.group, self.p, self.seed, kind)
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    let env = |k: &str| {
        std::env::var_os(k)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    };
    env("TRIVSOURCE_CACHE_DIR")
        .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("trivsource")))
        .or_else(|| env("HOME").map(|d| d.join(".cache").join("trivsource")))
}

fn json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn render_matrix(
    cfg: &SessionConfig,
    mat: &LabeledMatrix,
    text: impl Fn(&LabeledMatrix) -> String,
) -> anyhow::Result<String> {
    match cfg.format {
        Format::Text => Ok(text(mat)),
        Format::Json => json(mat),
        Format::Csv => render::matrix_csv(mat),
    }
}

/// Returns the rendered output and whether every check passed.
fn run(command: Command, cfg: &SessionConfig) -> anyhow::Result<(String, bool)> {
    let out = match command {
        Command::BrauerTable { psubgroup } => {
            let bt: BrauerTableArtifact = cfg.cache.get_or_compute(
                &cfg.key(&format!("brauer-table/{psubgroup}")),
                || {
                    let ctx = cfg.context()?;
                    if psubgroup >= ctx.locals().len() {
                        return Err(Error::Parse(format!(
                            "--psubgroup {psubgroup} out of range: there are {} p-subgroup classes",
                            ctx.locals().len()
                        ))
                        .into());
                    }
                    Ok(BrauerTableArtifact::new(&ctx, psubgroup))
                },
            )?;
            match cfg.format {
                Format::Text => render::brauer_text(&bt),
                Format::Json => json(&bt)?,
                Format::Csv => render::brauer_csv(&bt)?,
            }
        }
        Command::SpeciesTable => {
            let mat: LabeledMatrix = cfg.cache.get_or_compute(&cfg.key("species-table"), || {
                let ctx = cfg.context()?;
                Ok(LabeledMatrix::species_table(&ctx, &ctx.matrix_n()?))
            })?;
            render_matrix(cfg, &mat, |m| {
                render::matrix_text("species table: rows (Q, [s]), columns (P, phi)", m)
            })?
        }
        Command::Idempotents => {
            let mat: LabeledMatrix = cfg.cache.get_or_compute(&cfg.key("idempotents"), || {
                let ctx = cfg.context()?;
                Ok(LabeledMatrix::idempotents(&ctx, &ctx.idempotents()?))
            })?;
            render_matrix(cfg, &mat, render::idempotents_text)?
        }
        Command::Linmap => {
            let mat: LabeledMatrix = cfg.cache.get_or_compute(&cfg.key("linmap"), || {
                let ctx = cfg.context()?;
                let rows = monomial_pairs(&ctx)
                    .iter()
                    .map(|pair| ctx.lin_row(pair))
                    .collect::<trivsource::Result<Vec<_>>>()?;
                Ok(LabeledMatrix::linmap(&ctx, &rows))
            })?;
            render_matrix(cfg, &mat, |m| {
                render::matrix_text("linearization: rows (V, nu), columns (P, phi)", m)
            })?
        }
        Command::Verify => {
            let ctx = cfg.context()?;
            let report = verify_all(&ctx).context("verification aborted")?;
            let text = match cfg.format {
                Format::Text => render::report_text(&report),
                Format::Json => json(&report)?,
                Format::Csv => render::report_csv(&report)?,
            };
            return Ok((text, report.passed()));
        }
    };
    Ok((out, true))
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::Parse(_)
            | Error::NotPrime(_)
            | Error::NotAPermutation(_)
            | Error::DegreeMismatch { .. },
        ) => 2,
        Some(Error::OrderCapExceeded { .. }) => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = SessionConfig::new(cli.config).and_then(|cfg| run(cli.command, &cfg));
    match result {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
