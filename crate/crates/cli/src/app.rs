use std::fmt;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kostka::class::class_breakdown;
use kostka::partition::{adjacent_transfer_chain, compositions_of, MoveKind};
use kostka::tableau::count_ssyt;
use kostka::verify::{full_suite, Report};
use kostka::{
    cover_chain, covers, partitions_of, Composition, Count, KostkaEngine, Partition, SkewShape,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

/// Bad arguments: exits with status 2.
#[derive(Debug)]
pub struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_err(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

#[derive(Parser, Debug)]
#[command(name = "kostka", version, about = "Kostka numbers and the dominance order on partitions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for parallel loops; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    parallelism: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kostka number of a (skew) shape and a content.
    Compute {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Content composition, e.g. 1,1,1.
        #[arg(long)]
        content: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full Kostka matrix over the partitions of n.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Partitions covered by MU in the dominance order.
    Covers {
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// A chain of covers from MU down to NU.
    Chain {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Also list the single-transfer compositions inside each column move.
        #[arg(long)]
        transfers: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tableaux of CONTENT and of its transfer at I, grouped by their entries
    /// other than I and I+1.
    Classes {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        content: String,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every verification suite up to MAX_N.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time the strip recursion against brute-force enumeration.
    Bench {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct ShapeArgs {
    /// Outer partition, e.g. 3,2.
    #[arg(long)]
    shape: String,
    /// Inner partition removed from the shape; omitted means a straight shape.
    #[arg(long)]
    skew_inner: Option<String>,
}

impl ShapeArgs {
    fn parse(&self) -> Result<SkewShape> {
        let outer = parse_partition("--shape", &self.shape)?;
        let inner = match &self.skew_inner {
            Some(s) => parse_partition("--skew-inner", s)?,
            None => Partition::empty(),
        };
        SkewShape::new(outer, inner).map_err(|e| input_err(format!("invalid --skew-inner: {e}")))
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

fn parse_partition(flag: &str, s: &str) -> Result<Partition> {
    s.parse()
        .map_err(|e| input_err(format!("invalid {flag} {s:?}: {e}")))
}

fn parse_composition(flag: &str, s: &str) -> Result<Composition> {
    s.parse()
        .map_err(|e| input_err(format!("invalid {flag} {s:?}: {e}")))
}

fn no_csv(format: Format, command: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(input_err(format!("--format csv is only available for matrix, not {command}")));
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallelism)
        .build()
        .context("building thread pool")?;
    pool.install(|| dispatch(cli.command, &mut std::io::stdout().lock()))
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<ExitCode> {
    match command {
        Command::Compute {
            shape,
            content,
            format,
        } => {
            no_csv(format, "compute")?;
            let s = shape.parse()?;
            let mu = parse_composition("--content", &content)?;
            let k = KostkaEngine::new()
                .kostka(&s, &mu)
                .map_err(|e| input_err(format!("--content {content:?} does not fit --shape: {e}")))?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "shape": s.outer().to_text(),
                        "skew_inner": s.inner().to_text(),
                        "content": mu.to_text(),
                        "kostka": k.to_string(),
                    })
                )?,
                _ => writeln!(out, "{k}")?,
            }
        }
        Command::Matrix { n, format } => {
            let m = KostkaEngine::new().matrix(n);
            match format {
                Format::Text => write!(out, "{}", m.to_text())?,
                Format::Csv => write!(out, "{}", m.to_csv())?,
                Format::Json => writeln!(out, "{}", m.to_json())?,
            }
        }
        Command::Covers { mu, format } => {
            no_csv(format, "covers")?;
            let p = parse_partition("--mu", &mu)?;
            let list = covers(&p);
            match format {
                Format::Json => {
                    let items: Vec<_> = list
                        .iter()
                        .map(|(mv, nu)| json!({"partition": nu.to_text(), "move": mv}))
                        .collect();
                    writeln!(out, "{}", json!({"mu": p.to_text(), "covers": items}))?;
                }
                _ => {
                    for (mv, nu) in &list {
                        writeln!(out, "{nu}  [{mv}]")?;
                    }
                }
            }
        }
        Command::Chain {
            mu,
            nu,
            transfers,
            format,
        } => {
            no_csv(format, "chain")?;
            let from = parse_partition("--mu", &mu)?;
            let to = parse_partition("--nu", &nu)?;
            let chain = cover_chain(&from, &to)
                .map_err(|e| input_err(format!("no chain from --mu to --nu: {e}")))?;
            let mut steps = Vec::new();
            for w in chain.windows(2) {
                let (mv, _) = covers(&w[0])
                    .into_iter()
                    .find(|(_, p)| p == &w[1])
                    .expect("chain steps are covers");
                let xi = if mv.kind == MoveKind::AdjacentColumn {
                    adjacent_transfer_chain(&w[0], &mv)?
                } else {
                    Vec::new()
                };
                steps.push((mv, w[1].clone(), xi));
            }
            match format {
                Format::Json => {
                    let items: Vec<_> = steps
                        .iter()
                        .map(|(mv, p, xi)| {
                            json!({
                                "partition": p.to_text(),
                                "move": mv,
                                "transfers": xi.iter().map(Composition::to_text).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({"mu": from.to_text(), "nu": to.to_text(), "steps": items}))?;
                }
                _ => {
                    writeln!(out, "{from}")?;
                    for (mv, p, xi) in &steps {
                        if transfers {
                            for c in xi {
                                writeln!(out, "  via {c}")?;
                            }
                        }
                        writeln!(out, "{p}  [{mv}]")?;
                    }
                }
            }
        }
        Command::Classes {
            shape,
            content,
            i,
            format,
        } => {
            no_csv(format, "classes")?;
            let s = shape.parse()?;
            let mu = parse_composition("--content", &content)?;
            if mu.size() != s.size() {
                return Err(input_err(format!(
                    "--content {content:?} has size {}, --shape has {} cells",
                    mu.size(),
                    s.size()
                )));
            }
            let nu = mu
                .adjacent_transfer(i)
                .map_err(|e| input_err(format!("invalid --i {i}: {e}")))?;
            let rows = class_breakdown(&s, &mu, i)?;
            let k_mu: Count = rows.iter().map(|r| &r.mu_count).sum();
            let k_nu: Count = rows.iter().map(|r| &r.nu_count).sum();
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "shape": s.outer().to_text(),
                        "skew_inner": s.inner().to_text(),
                        "mu": mu.to_text(),
                        "nu": nu.to_text(),
                        "i": i,
                        "classes": rows,
                        "k_mu": k_mu.to_string(),
                        "k_nu": k_nu.to_string(),
                    })
                )?,
                _ => {
                    writeln!(out, "shape {s}  mu {mu}  nu {nu}  i = {i}")?;
                    for (n, row) in rows.iter().enumerate() {
                        let x: Vec<String> = row.row_counts.iter().map(usize::to_string).collect();
                        writeln!(
                            out,
                            "class {}: d = {}  x = ({})  mu: {}  nu: {}",
                            n + 1,
                            row.forced_pairs,
                            x.join(","),
                            row.mu_count,
                            row.nu_count
                        )?;
                        for line in row.skeleton.lines() {
                            writeln!(out, "  {line}")?;
                        }
                    }
                    writeln!(out, "total: K(mu) = {k_mu}  K(nu) = {k_nu}")?;
                }
            }
        }
        Command::Verify { max_n, format } => {
            no_csv(format, "verify")?;
            let reports = full_suite(max_n);
            let failed: usize = reports.iter().map(|r| r.violations.len()).sum();
            match format {
                Format::Json => writeln!(out, "{}", verify_json(max_n, &reports))?,
                _ => {
                    for r in &reports {
                        writeln!(out, "{}", r.to_text())?;
                    }
                    writeln!(out, "total: {failed} violations")?;
                }
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            max_n,
            samples,
            seed,
            format,
        } => {
            no_csv(format, "bench")?;
            return bench(max_n, samples, seed, format, out);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_json(max_n: usize, reports: &[Report]) -> serde_json::Value {
    let violations: Vec<_> = reports
        .iter()
        .flat_map(|r| {
            r.violations
                .iter()
                .map(move |v| json!({"suite": r.suite, "subject": v.subject, "detail": v.detail}))
        })
        .collect();
    json!({"max_n": max_n, "suites": reports, "violations": violations})
}

fn bench(max_n: usize, samples: usize, seed: u64, format: Format, out: &mut impl Write) -> Result<ExitCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut workload = Vec::with_capacity(samples);
    for _ in 0..samples {
        let m = rng.gen_range(0..=max_n);
        let lambdas = partitions_of(m);
        let lambda = lambdas[rng.gen_range(0..lambdas.len())].clone();
        let contents = compositions_of(m, m);
        let mu = contents[rng.gen_range(0..contents.len())].clone();
        workload.push((SkewShape::straight(lambda), mu));
    }

    let start = Instant::now();
    let engine = KostkaEngine::new();
    let dp: Vec<Count> = workload
        .iter()
        .map(|(s, mu)| engine.kostka(s, mu))
        .collect::<kostka::Result<_>>()?;
    let dp_time = start.elapsed();

    let start = Instant::now();
    let brute: Vec<Count> = workload
        .iter()
        .map(|(s, mu)| count_ssyt(s, mu).map(Count::from))
        .collect::<kostka::Result<_>>()?;
    let brute_time = start.elapsed();

    let mismatches = dp.iter().zip(&brute).filter(|(a, b)| a != b).count();
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "samples": samples,
                "max_n": max_n,
                "seed": seed,
                "dp_seconds": dp_time.as_secs_f64(),
                "enumeration_seconds": brute_time.as_secs_f64(),
                "mismatches": mismatches,
            })
        )?,
        _ => {
            writeln!(out, "workload: {samples} pairs, n <= {max_n}, seed {seed}")?;
            writeln!(out, "strip recursion: {dp_time:.2?}")?;
            writeln!(out, "enumeration:     {brute_time:.2?}")?;
            writeln!(out, "mismatches: {mismatches}")?;
        }
    }
    Ok(if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
