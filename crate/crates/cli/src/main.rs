use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chowso::poly::parse_poly;
use chowso::ring::{express_in_generators, ChowRing, CohRing, E2Sign};
use chowso::verify::{verify, verify_upto, VerifyReport};
use chowso::weights::{
    euler_coefficient_closed, euler_coefficient_product_with, weights_dplus_extreme,
    weights_lambda, weights_standard, WeightSystem, MAX_PRODUCT_RANK,
};
use chowso::weyl::{pushforward_flag_with, weyl_d_order};
use chowso::Execution;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

const MAX_CHERN_RANK: usize = 6;

#[derive(Parser)]
#[command(name = "chowso")]
#[command(about = "Exact checks on the Chow ring of BSO(2n)")]
#[command(version)]
struct Cli {
    /// Sign of the square relation: consistent gives e^2 = (-1)^n c_{2n}, paper gives e^2 = c_{2n}
    #[arg(long, global = true, value_enum, default_value_t = SignArg::Consistent)]
    e2_sign: SignArg,

    /// Run everything on the calling thread
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Run the verification suite for one rank or for 2..=K
    #[command(group(ArgGroup::new("range").required(true).args(["n", "upto"])))]
    Verify {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        upto: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Table of d_n against the closed form and the Weyl group order
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Torus-level pushforward along the isotropic flag bundle
    Pushforward {
        #[arg(long)]
        n: usize,
        #[arg(long = "poly", value_name = "S")]
        poly_flag: Option<String>,
        #[arg(value_name = "POLY", conflicts_with = "poly_flag")]
        poly: Option<String>,
    },
    /// Total Chern class of a representation at the maximal torus
    Chern {
        /// std, lambda:K or dplus
        #[arg(long, value_parser = parse_rep)]
        rep: Rep,
        #[arg(long)]
        n: usize,
        /// Rewrite in c_2, ..., c_{2n} and e
        #[arg(long)]
        in_generators: bool,
    },
    /// Canonical form of an expression in the Chow ring or the cohomology subring
    NormalForm {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[arg(long)]
        n: usize,
        #[arg(long = "expr", value_name = "S")]
        expr_flag: Option<String>,
        #[arg(value_name = "EXPR", conflicts_with = "expr_flag")]
        expr: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Paper,
    Consistent,
}

impl From<SignArg> for E2Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Paper => E2Sign::Paper,
            SignArg::Consistent => E2Sign::Consistent,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Chow,
    Cohomology,
}

#[derive(Clone, Copy, Debug)]
enum Rep {
    Std,
    Lambda(usize),
    Dplus,
}

fn parse_rep(s: &str) -> Result<Rep, String> {
    match s {
        "std" => Ok(Rep::Std),
        "dplus" => Ok(Rep::Dplus),
        _ => match s.strip_prefix("lambda:") {
            Some(k) => k
                .parse()
                .map(Rep::Lambda)
                .map_err(|_| format!("bad exterior degree in {s:?}")),
            None => Err(format!(
                "unknown representation {s:?}; expected std, lambda:K or dplus"
            )),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let sign = E2Sign::from(cli.e2_sign);
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let mut out = io::stdout().lock();
    match cli.command {
        Commands::Verify { n, upto, format } => {
            let reports = match (n, upto) {
                (Some(n), _) => vec![verify(n, sign, exec)?],
                (None, Some(k)) => verify_upto(k, sign, exec)?,
                (None, None) => unreachable!("clap requires one of --n and --upto"),
            };
            for r in &reports {
                write_report(&mut out, r, format)?;
            }
            let ok = reports.iter().all(VerifyReport::passed);
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
        Commands::Table { max_n, format } => write_table(&mut out, max_n, format, exec)?,
        Commands::Pushforward { n, poly_flag, poly } => {
            let text = poly_flag.or(poly).context("missing polynomial")?;
            let f = parse_poly(&text, n)?;
            writeln!(out, "{}", pushforward_flag_with(&f, n, exec)?.value)?;
        }
        Commands::Chern {
            rep,
            n,
            in_generators,
        } => {
            let system = weight_system(rep, n)?;
            let total = system.total_chern();
            if in_generators {
                let ring = CohRing::with_sign(n, sign)?;
                let expressed = express_in_generators(&total, &ring)
                    .context("total Chern class is not W(D_n)-invariant")?;
                writeln!(out, "{expressed}")?;
            } else {
                writeln!(out, "{total}")?;
            }
        }
        Commands::NormalForm {
            ring,
            n,
            expr_flag,
            expr,
        } => {
            let text = expr_flag.or(expr).context("missing expression")?;
            let shown = match ring {
                RingArg::Chow => ChowRing::with_sign(n, sign)?.parse(&text)?.to_string(),
                RingArg::Cohomology => CohRing::with_sign(n, sign)?.parse(&text)?.to_string(),
            };
            writeln!(out, "{shown}")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn weight_system(rep: Rep, n: usize) -> Result<WeightSystem> {
    if !(1..=MAX_CHERN_RANK).contains(&n) {
        bail!("rank {n} outside the supported range 1..={MAX_CHERN_RANK}");
    }
    Ok(match rep {
        Rep::Std => weights_standard(n),
        Rep::Lambda(k) => weights_lambda(n, k)?,
        Rep::Dplus => weights_dplus_extreme(n),
    })
}

fn write_report(out: &mut impl Write, r: &VerifyReport, format: Format) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
        Format::Tsv => {
            for c in &r.checks {
                writeln!(out, "{}\t{}\t{}\t{}", r.n, c.name, c.status, c.witness)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Row {
    n: usize,
    d: i128,
    closed: i128,
    weyl_order: i128,
    weyl_over_n: i128,
}

#[derive(Serialize)]
struct Table {
    rows: Vec<Row>,
}

fn small(x: &BigInt) -> i128 {
    x.to_i128()
        .expect("table entries fit in i128 up to the product bound")
}

fn write_table(out: &mut impl Write, max_n: usize, format: Format, exec: Execution) -> Result<()> {
    if !(2..=MAX_PRODUCT_RANK).contains(&max_n) {
        bail!("max-n {max_n} outside the supported range 2..={MAX_PRODUCT_RANK}");
    }
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let d = euler_coefficient_product_with(n, exec)?;
        let closed = euler_coefficient_closed(n)?;
        let order = weyl_d_order(n);
        let over_n = &order / BigInt::from(n);
        rows.push(Row {
            n,
            d: small(&d),
            closed: small(&closed),
            weyl_order: small(&order),
            weyl_over_n: small(&over_n),
        });
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&Table { rows })?)?,
        Format::Tsv => {
            writeln!(out, "n\td\tclosed\tweyl_order\tweyl_over_n")?;
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    r.n, r.d, r.closed, r.weyl_order, r.weyl_over_n
                )?;
            }
        }
    }
    Ok(())
}
