//! Command-line front end.

use std::io::Write;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::{is_prime, jacobi, sqrt_mod_p, PrimeCtx};
use crate::curves::{char_sum, CubicCurve};
use crate::error::{Error, Result};
use crate::legendre::{legendre_eval, PolyArg};
use crate::par::Parallelism;
use crate::quadform::cornacchia;
use crate::report::{render, Format, RunHeader, VerdictReport};
use crate::theorems::{primes_in, select, verify_primes, PrimeData, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "supercong",
    version,
    about = "Check binomial-sum congruences over ranges of primes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify statements over a range of primes.
    Verify(VerifyArgs),
    /// Print S(m) mod p^2 and P_[p/4](t) for both roots t.
    Sum {
        #[arg(long, allow_hyphen_values = true)]
        m: i128,
        #[arg(long)]
        p: u64,
    },
    /// Character sum of a monic cubic, given as 1,a,b,c.
    Charsum {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        cubic: Vec<i128>,
        #[arg(long)]
        p: u64,
    },
    /// Solve p = x^2 + d y^2.
    Cornacchia {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        p: u64,
    },
    /// Jacobi symbol (a/n).
    Jacobi {
        #[arg(long, allow_hyphen_values = true)]
        a: i128,
        #[arg(long)]
        n: i128,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Jsonl,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated ids, `all`, `all-proven` or `all-conjectures`.
    #[arg(long, default_value = "all-proven")]
    pub theorems: String,
    /// Inclusive range `pmin..pmax`.
    #[arg(long, value_parser = parse_range)]
    pub primes: RangeInclusive<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// 0 picks the thread count automatically.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    #[arg(long, default_value_t = VerifyOptions::default().seed)]
    pub seed: u64,
    #[arg(long, default_value_t = VerifyOptions::default().samples)]
    pub samples: usize,
    /// Stop after the first prime with a failing proven statement.
    #[arg(long)]
    pub fail_fast: bool,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or("expected pmin..pmax")?;
    let a: u64 = a.trim().parse().map_err(|e| format!("pmin: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("pmax: {e}"))?;
    Ok(a..=b)
}

/// A validated verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub theorems: Vec<String>,
    pub pmin: u64,
    pub pmax: u64,
    pub format: Format,
    pub workers: usize,
    pub options: VerifyOptions,
    pub fail_fast: bool,
}

impl RunConfig {
    pub fn from_args(args: &VerifyArgs) -> Result<Self> {
        let (pmin, pmax) = (*args.primes.start(), *args.primes.end());
        if pmin <= 3 || pmin > pmax {
            return Err(Error::InvalidArgument(format!(
                "prime range {pmin}..{pmax} must satisfy 3 < pmin <= pmax"
            )));
        }
        if pmax >= 1 << 32 {
            return Err(Error::InvalidArgument(format!(
                "pmax {pmax} is too large for a sweep"
            )));
        }
        let specs = select(&args.theorems)?;
        if specs.is_empty() {
            return Err(Error::InvalidArgument("no theorems selected".into()));
        }
        Ok(Self {
            theorems: specs.iter().map(|s| s.id.to_string()).collect(),
            pmin,
            pmax,
            format: args.format.into(),
            workers: args.workers,
            options: VerifyOptions {
                seed: args.seed,
                samples: args.samples,
            },
            fail_fast: args.fail_fast,
        })
    }

    pub fn header(&self) -> RunHeader {
        RunHeader {
            theorems: self.theorems.clone(),
            pmin: self.pmin,
            pmax: self.pmax,
            seed: self.options.seed,
            samples: self.options.samples,
        }
    }
}

/// Runs the sweep. Returns the reports in output order.
pub fn run_verify(config: &RunConfig) -> Result<Vec<VerdictReport>> {
    let specs = select(&config.theorems.join(","))?;
    let mode = Parallelism::from_workers(config.workers);
    let primes = primes_in(config.pmin, config.pmax);
    if !config.fail_fast {
        return verify_primes(&specs, &primes, &config.options, mode);
    }
    let chunk = 64;
    let mut out = Vec::new();
    for block in primes.chunks(chunk) {
        let reports = verify_primes(&specs, block, &config.options, mode)?;
        if let Some(bad) = reports.iter().find(|r| r.is_failure()) {
            let stop = bad.p;
            out.extend(reports.into_iter().take_while(|r| r.p <= stop));
            return Ok(out);
        }
        out.extend(reports);
    }
    Ok(out)
}

pub fn cmd_verify(config: &RunConfig) -> Result<ExitCode> {
    let reports = run_verify(config)?;
    let text = render(&reports, config.format, &config.header());
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| Error::InvalidArgument(format!("writing report: {e}")))?;
    let mut failed = false;
    for r in &reports {
        if r.is_failure() {
            failed = true;
            eprintln!("FAIL {} p={} [{}]", r.theorem, r.p, r.branch);
        } else if r.is_candidate() {
            eprintln!(
                "COUNTEREXAMPLE-CANDIDATE {} p={} [{}]",
                r.theorem, r.p, r.branch
            );
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

pub fn cmd_sum(m: i128, p: u64) -> Result<String> {
    if is_prime(p) && m % p as i128 == 0 {
        return Err(Error::PrimeDividesParameter { p, m });
    }
    let data = PrimeData::new(p)?;
    let ctx = &data.ctx;
    let s = data.sum_s(m)?;
    let mut out = format!("S({m}) = {s} (mod {})\n", ctx.p2());
    let inv_m = ctx.inv_p(m)?;
    let a = ctx.sub_p(1, ctx.mul_p(256 % p, inv_m));
    let roots = sqrt_mod_p(a, ctx);
    if roots.is_empty() {
        out.push_str(&format!("1 - 256/m = {a} is not a square mod {p}\n"));
    }
    for (i, t) in roots.into_iter().enumerate() {
        let v = legendre_eval(ctx.qcap(), &PolyArg::from_root(t, i as u8, ctx), ctx);
        out.push_str(&format!("P_{}({t}) = {v} (mod {p})\n", ctx.qcap()));
    }
    Ok(out)
}

pub fn cmd_charsum(cubic: &[i128], p: u64) -> Result<i64> {
    let [lead, a, b, c] = cubic else {
        return Err(Error::InvalidArgument(
            "--cubic takes four coefficients 1,a,b,c".into(),
        ));
    };
    if *lead != 1 {
        return Err(Error::InvalidArgument("the cubic must be monic".into()));
    }
    let ctx = PrimeCtx::new(p)?;
    Ok(char_sum(&CubicCurve::new(*a, *b, *c, &ctx), &ctx))
}

pub fn cmd_cornacchia(d: u64, p: u64) -> Result<Option<(i64, i64)>> {
    Ok(cornacchia(d, p)?.map(|r| (r.x(), r.y())))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Verify(args) => RunConfig::from_args(&args).and_then(|c| cmd_verify(&c)),
        Command::Sum { m, p } => cmd_sum(m, p).map(|s| {
            print!("{s}");
            ExitCode::SUCCESS
        }),
        Command::Charsum { cubic, p } => cmd_charsum(&cubic, p).map(|v| {
            println!("{v}");
            ExitCode::SUCCESS
        }),
        Command::Cornacchia { d, p } => cmd_cornacchia(d, p).map(|r| {
            match r {
                Some((x, y)) => println!("({x},{y})"),
                None => println!("none"),
            }
            ExitCode::SUCCESS
        }),
        Command::Jacobi { a, n } => jacobi(a, n).map(|v| {
            println!("{v}");
            ExitCode::SUCCESS
        }),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("5..500").unwrap(), 5..=500);
        assert!(parse_range("5-500").is_err());
        assert!(parse_range("a..5").is_err());
    }

    #[test]
    fn config_validation() {
        let cli = Cli::try_parse_from(["supercong", "verify", "--primes", "3..10"]).unwrap();
        let Command::Verify(args) = cli.command else {
            panic!()
        };
        assert!(RunConfig::from_args(&args).is_err());
        let cli = Cli::try_parse_from([
            "supercong",
            "verify",
            "--theorems",
            "T3.1,RV256",
            "--primes",
            "5..10",
        ])
        .unwrap();
        let Command::Verify(args) = cli.command else {
            panic!()
        };
        let c = RunConfig::from_args(&args).unwrap();
        assert_eq!(c.theorems, ["RV256", "T3.1"]);
    }

    #[test]
    fn sum_examples() {
        assert!(cmd_sum(256, 11)
            .unwrap()
            .starts_with("S(256) = 14 (mod 121)"));
        assert!(cmd_sum(81, 13).unwrap().starts_with("S(81) = 0 (mod 169)"));
        assert!(matches!(
            cmd_sum(81, 3),
            Err(Error::PrimeDividesParameter { p: 3, m: 81 })
        ));
        assert!(matches!(cmd_sum(80, 3), Err(Error::PrimeTooSmall(3))));
        assert!(matches!(
            cmd_sum(81 * 5, 5),
            Err(Error::PrimeDividesParameter { .. })
        ));
    }

    #[test]
    fn tool_examples() {
        assert_eq!(cmd_charsum(&[1, 21, 112, 0], 11).unwrap(), -4);
        assert!(cmd_charsum(&[2, 21, 112, 0], 11).is_err());
        assert!(cmd_charsum(&[1, 21, 112], 11).is_err());
        assert_eq!(cmd_cornacchia(7, 11).unwrap(), Some((2, 1)));
        assert_eq!(jacobi(2, 7).unwrap(), 1);
    }
}
