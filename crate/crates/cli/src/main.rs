use clap::{Args, Parser, Subcommand, ValueEnum};
use hepta::{
    eigen_decomposition, inverse, power_structured, power_with_path, spectrum, HeptaParams,
    PowerPath,
};
use hepta_cli::bench::{bench_row, bench_sizes, BENCH_HEADER};
use hepta_cli::instance::parse_instance;
use hepta_cli::output::{eigvecs_report, matrix_report, path_name, spectrum_report, Format};
use hepta_cli::random::InstanceGenerator;
use hepta_cli::verify::{verify_instance, verify_random};
use hepta_cli::CliError;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hepta",
    version,
    about = "Eigenpairs, inverses and integer powers of banded persymmetric Hankel matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sorted eigenvalues with brackets and family tags
    Spectrum {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Eigenvalues and unit eigenvectors
    Eigvecs {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Explicit inverse
    Inverse {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Integer power H^m
    Power {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, allow_negative_numbers = true)]
        m: i32,
        /// Fail instead of powering through the eigendecomposition
        #[arg(long)]
        no_fallback: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the structured paths against the dense oracle
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Number of random instances instead of a single instance
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Shift for the characteristic polynomial check on a single instance
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        t: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Timing CSV, structured against oracle
    Bench {
        #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance file with `n`, `a`, `b`, `c`, `d` as `key = value` lines
    instance: Option<PathBuf>,
    #[arg(long, conflicts_with = "instance")]
    n: Option<usize>,
    #[arg(long, requires = "n", allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, requires = "n", allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long, requires = "n", allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, requires = "n", allow_negative_numbers = true)]
    d: Option<f64>,
}

impl InstanceArgs {
    fn is_given(&self) -> bool {
        self.instance.is_some() || self.n.is_some()
    }

    fn load(&self) -> Result<HeptaParams, CliError> {
        if let Some(path) = &self.instance {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            return parse_instance(&text);
        }
        let n = self
            .n
            .ok_or_else(|| CliError::Usage("give an instance file or --n".into()))?;
        let coeff = |x: Option<f64>| x.unwrap_or(0.0);
        Ok(HeptaParams::new(
            n,
            coeff(self.a),
            coeff(self.b),
            coeff(self.c),
            coeff(self.d),
        )?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum { instance, output } => {
            let params = instance.load()?;
            let sp = spectrum(&params)?;
            emit(&output.out, &spectrum_report(&params, &sp, output.format()))
        }
        Command::Eigvecs { instance, output } => {
            let params = instance.load()?;
            let eig = eigen_decomposition(&params)?;
            emit(&output.out, &eigvecs_report(&params, &eig, output.format()))
        }
        Command::Inverse { instance, output } => {
            let params = instance.load()?;
            let inv = inverse(&params)?;
            emit(
                &output.out,
                &matrix_report("inverse", &params, &[], &inv, output.format()),
            )
        }
        Command::Power {
            instance,
            m,
            no_fallback,
            output,
        } => {
            let params = instance.load()?;
            let (matrix, path) = if no_fallback {
                let path = if m == 0 {
                    PowerPath::Identity
                } else {
                    PowerPath::Alternant
                };
                (power_structured(&params, m)?, path)
            } else {
                power_with_path(&params, m)?
            };
            let mut extra = vec![
                ("m", m.to_string()),
                ("path", format!("\"{}\"", path_name(path))),
            ];
            if path == PowerPath::EigenFallback {
                extra.push((
                    "note",
                    "\"distinctness hypotheses fail; powered through the eigendecomposition\""
                        .into(),
                ));
                eprintln!(
                    "note: distinctness hypotheses fail; powered through the eigendecomposition"
                );
            }
            emit(
                &output.out,
                &matrix_report("power", &params, &extra, &matrix, output.format()),
            )
        }
        Command::Verify {
            instance,
            random,
            max_n,
            seed,
            t,
            output,
        } => {
            let report = match (random, instance.is_given()) {
                (Some(_), true) => {
                    return Err(CliError::Usage(
                        "--random and an instance are exclusive".into(),
                    ))
                }
                (Some(count), false) => verify_random(count, max_n as usize, seed),
                (None, _) => verify_instance(&instance.load()?, t),
            };
            emit(&output.out, &report.render(output.format()))?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::VerifyFailed)
            }
        }
        Command::Bench { max_n, seed, out } => {
            let mut text = format!("{BENCH_HEADER}\n");
            // rows are written as they finish when printing to stdout
            if out.is_none() {
                print!("{text}");
            }
            let sizes = bench_sizes(max_n as usize);
            let mut rng = InstanceGenerator::new(seed);
            for n in sizes {
                let row = bench_row(&mut rng, n).csv();
                if out.is_none() {
                    println!("{row}");
                }
                text.push_str(&row);
                text.push('\n');
            }
            match out {
                Some(path) => Ok(std::fs::write(path, text)?),
                None => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerifyFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
