use clap::{Args, Parser, Subcommand, ValueEnum};

use boolfourier::derivatives::{
    derivative_distribution_counted, derivative_distribution_spectral, discrete_derivative,
    expectation_of_derivative, influence, influence_profile,
};
use boolfourier::scan::{run_scan, ScanConfig};
use boolfourier::{
    equivalence_predicates, expected_abs_sum, fwht, majority, majority_profile, BooleanFunction,
    Dyadic, Error, Family, FunctionAnalysis, Result,
};

use crate::output::{
    AnalyzePayload, DerivativePayload, EquivPayload, MajPayload, OutputDocument, SpectrumEntry,
};

#[derive(Debug, Parser)]
#[command(
    name = "boolfourier",
    version,
    about = "Exact Fourier analysis of Boolean-valued functions"
)]
pub struct Cli {
    /// Emit compact JSON instead of pretty-printed output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree, linear sum, influences and the majority bound for one function.
    Analyze {
        #[command(flatten)]
        function: FunctionArgs,
        /// Include every nonzero Fourier coefficient.
        #[arg(long)]
        spectrum: bool,
    },
    /// Profile of the majority function on D bits.
    Maj {
        #[arg(long)]
        d: u32,
        /// Include the hex truth table (D <= 16).
        #[arg(long)]
        table: bool,
    },
    /// Distribution of the i-th discrete derivative, counted and from the spectrum.
    Derivative {
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long)]
        i: u32,
    },
    /// The bound and its three derivative reformulations against Maj_D.
    Equiv {
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long)]
        d: u32,
    },
    /// Enumerate functions and check the bound on each.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct FunctionArgs {
    /// Truth table in hex, most significant digit first.
    #[arg(long, requires = "n", conflicts_with = "function")]
    pub hex: Option<String>,
    /// Arity for --hex.
    #[arg(long)]
    pub n: Option<u32>,
    /// Built-in family: maj:d, parity:n, dictator:i:n, and:n, or:n, const:+:n, const:-:n.
    #[arg(long = "fn", value_name = "FAMILY:PARAMS")]
    pub function: Option<String>,
}

impl FunctionArgs {
    fn resolve(&self) -> Result<BooleanFunction> {
        match (&self.hex, self.n, &self.function) {
            (Some(hex), Some(n), None) => BooleanFunction::from_hex(hex, n),
            (None, _, Some(spec)) => spec.parse::<Family>()?.build(),
            _ => Err(Error::BadParams {
                family: "function".into(),
                reason: "give either --hex H --n N or --fn FAMILY:PARAMS".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Number of samples (random mode).
    #[arg(long)]
    pub samples: Option<u64>,
    /// Generator seed (random mode).
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Size of each contiguous work range.
    #[arg(long)]
    pub chunk_size: Option<u64>,
    /// Comma-separated majority arities to check the reformulations against.
    #[arg(long, value_delimiter = ',', conflicts_with = "no_equiv")]
    pub equiv_d: Option<Vec<u32>>,
    /// Skip the reformulation check.
    #[arg(long)]
    pub no_equiv: bool,
    /// Only report functions of this exact degree.
    #[arg(long)]
    pub degree: Option<u32>,
    /// Permit the 2^32-function exhaustive scan at n = 5.
    #[arg(long)]
    pub allow_huge: bool,
}

impl ScanArgs {
    fn config(&self) -> Result<ScanConfig> {
        let mut config = match self.mode {
            Mode::Exhaustive => {
                if self.samples.is_some() {
                    return Err(Error::InvalidConfig(
                        "--samples requires --mode random".into(),
                    ));
                }
                ScanConfig::exhaustive(self.n)
            }
            Mode::Random => {
                let samples = self.samples.ok_or_else(|| {
                    Error::InvalidConfig("--mode random requires --samples".into())
                })?;
                ScanConfig::random(self.n, samples, self.seed)
            }
        };
        let jobs = self
            .jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        config = config.workers(jobs).allow_huge(self.allow_huge);
        if let Some(chunk) = self.chunk_size {
            config = config.chunk_size(chunk);
        }
        if let Some(ds) = &self.equiv_d {
            config = config.equivalence(ds.iter().copied());
        }
        if self.no_equiv {
            config = config.without_equivalence();
        }
        if let Some(d) = self.degree {
            config = config.degree_filter(d);
        }
        config.validate()?;
        Ok(config)
    }
}

pub struct Outcome {
    pub document: OutputDocument,
    /// Set when the run detected a bug-class failure (exit status 2).
    pub failed: bool,
}

impl Outcome {
    fn ok(document: OutputDocument) -> Self {
        Outcome {
            document,
            failed: false,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze { function, spectrum } => analyze(&function.resolve()?, *spectrum),
        Command::Maj { d, table } => maj(*d, *table),
        Command::Derivative { function, i } => derivative(&function.resolve()?, *i),
        Command::Equiv { function, d } => equiv(&function.resolve()?, *d),
        Command::Scan(args) => scan(&args.config()?),
    }
}

fn analyze(f: &BooleanFunction, with_spectrum: bool) -> Result<Outcome> {
    let spec = fwht(f);
    spec.check_invariants()?;
    let profile = influence_profile(&spec)?;
    let report = FunctionAnalysis::new(f).report()?;
    if profile.total > Dyadic::from_int(report.degree as i64) {
        return Err(Error::Invariant("total influence exceeds degree".into()));
    }
    let spectrum = with_spectrum.then(|| {
        spec.nonzero()
            .map(|(mask, coefficient)| SpectrumEntry {
                mask: mask.0,
                subset: mask.coordinates(),
                coefficient,
            })
            .collect()
    });
    Ok(Outcome::ok(OutputDocument::new(
        "analyze",
        AnalyzePayload {
            n: f.arity(),
            hex: f.to_hex(),
            degree: report.degree,
            linear_sum: report.linear_sum,
            total_influence: profile.total,
            influences: profile.per_coordinate,
            bound_m: report.bound_m,
            gap: report.gap,
            satisfied: report.satisfied,
            spectrum,
        },
    )))
}

const MAX_TABLE_ARITY: u32 = 16;

fn maj(d: u32, with_table: bool) -> Result<Outcome> {
    if with_table && d > MAX_TABLE_ARITY {
        return Err(Error::BadParams {
            family: "maj".into(),
            reason: format!("--table is limited to d <= {MAX_TABLE_ARITY}"),
        });
    }
    let profile = majority_profile(d)?;
    let table = if with_table {
        Some(majority(d)?.to_hex())
    } else {
        None
    };
    Ok(Outcome::ok(OutputDocument::new(
        "maj",
        MajPayload {
            d,
            linear_coefficient: profile.linear_coefficient,
            bound_m: profile.bound_m,
            total_influence: profile.total_influence,
            p_plus_per_coordinate: profile.p_plus_per_coordinate,
            derivative_distribution: profile.derivative_distribution,
            expected_abs_sum: expected_abs_sum(d)?,
            table,
        },
    )))
}

fn derivative(f: &BooleanFunction, i: u32) -> Result<Outcome> {
    let spec = fwht(f);
    let counted = derivative_distribution_counted(f, i)?;
    let spectral = derivative_distribution_spectral(&spec, i)?;
    let table = discrete_derivative(f, i)?;
    let expectation = expectation_of_derivative(&table);
    let linear_coefficient = spec.linear_coefficient(i)?;
    let agree = counted == spectral && expectation == linear_coefficient;
    Ok(Outcome {
        document: OutputDocument::new(
            "derivative",
            DerivativePayload {
                n: f.arity(),
                hex: f.to_hex(),
                i,
                counted,
                spectral,
                agree,
                linear_coefficient,
                expectation,
                influence: influence(&spec, i)?,
            },
        ),
        failed: !agree,
    })
}

fn equiv(f: &BooleanFunction, d: u32) -> Result<Outcome> {
    let predicates = equivalence_predicates(f, d)?;
    let failed = !predicates.agreement;
    Ok(Outcome {
        document: OutputDocument::new(
            "equiv",
            EquivPayload {
                n: f.arity(),
                hex: f.to_hex(),
                d,
                predicates,
            },
        ),
        failed,
    })
}

fn scan(config: &ScanConfig) -> Result<Outcome> {
    let result = run_scan(config)?;
    if !result.conjecture_violations.is_empty() {
        eprintln!("================ CONJECTURE VIOLATION WITNESSES ================");
        for v in &result.conjecture_violations {
            eprintln!(
                "  n={} hex={} degree={} linear_sum={} bound={} gap={}",
                v.n, v.hex, v.degree, v.linear_sum, v.bound_m, v.gap
            );
        }
        eprintln!("================================================================");
    }
    if !result.is_consistent() {
        eprintln!(
            "error: {} equivalence failures (implementation bug)",
            result.equivalence_failures.len()
        );
    }
    let failed = !result.is_consistent();
    Ok(Outcome {
        document: OutputDocument::new("scan", result),
        failed,
    })
}
