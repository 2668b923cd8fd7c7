//! Exhaustive and sampled enumeration of truth tables.
//!
//! Work is split into contiguous ranges of an index space (truth-table
//! integers for exhaustive mode, sample numbers for random mode). Each range is
//! folded into its own [`ScanResult`] and the partial results are combined with
//! [`merge_results`], which is associative and commutative, so the final
//! result does not depend on the number of workers or the chunk size.
//!
//! Random mode draws sample `j` from a ChaCha8 stream seeded with `seed` and
//! positioned at stream number `j`. Each table is filled with consecutive
//! `u64` words from that stream (bits above `2^n` masked off), so a sample
//! depends only on `(seed, j, n)`.

use std::ops::Range;
use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::conjecture::{EquivalencePredicates, FunctionAnalysis};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::function::{BooleanFunction, MAX_ARITY};
use crate::majority::{maj_bound, majority_profile};

/// Largest arity enumerated without `allow_huge`.
pub const DEFAULT_EXHAUSTIVE_CEILING: u32 = 4;
/// Hard ceiling for exhaustive mode (2^32 functions).
pub const MAX_EXHAUSTIVE_ARITY: u32 = 5;
pub const MAX_RANDOM_ARITY: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub n: u32,
    pub mode: ScanMode,
    /// Only report functions of exactly this degree.
    pub degree_filter: Option<u32>,
    pub workers: usize,
    /// Size of each contiguous range; `None` picks one from `workers`.
    pub chunk_size: Option<u64>,
    pub equivalence_check: bool,
    pub equivalence_d_range: Vec<u32>,
    /// Required for exhaustive scans above [`DEFAULT_EXHAUSTIVE_CEILING`].
    pub allow_huge: bool,
}

impl ScanConfig {
    fn with_mode(n: u32, mode: ScanMode) -> Self {
        ScanConfig {
            n,
            mode,
            degree_filter: None,
            workers: 1,
            chunk_size: None,
            equivalence_check: n <= 3,
            equivalence_d_range: (1..=(n + 1).min(MAX_ARITY)).collect(),
            allow_huge: false,
        }
    }

    pub fn exhaustive(n: u32) -> Self {
        Self::with_mode(n, ScanMode::Exhaustive)
    }

    pub fn random(n: u32, samples: u64, seed: u64) -> Self {
        Self::with_mode(n, ScanMode::Random { samples, seed })
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn chunk_size(mut self, chunk: u64) -> Self {
        self.chunk_size = Some(chunk);
        self
    }

    pub fn equivalence(mut self, d_range: impl IntoIterator<Item = u32>) -> Self {
        self.equivalence_check = true;
        self.equivalence_d_range = d_range.into_iter().collect();
        self
    }

    pub fn without_equivalence(mut self) -> Self {
        self.equivalence_check = false;
        self
    }

    pub fn degree_filter(mut self, d: u32) -> Self {
        self.degree_filter = Some(d);
        self
    }

    pub fn allow_huge(mut self, allow: bool) -> Self {
        self.allow_huge = allow;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        match self.mode {
            ScanMode::Exhaustive => {
                if self.n > MAX_EXHAUSTIVE_ARITY {
                    return bad(format!(
                        "exhaustive mode supports n <= {MAX_EXHAUSTIVE_ARITY}, got {}",
                        self.n
                    ));
                }
                if self.n > DEFAULT_EXHAUSTIVE_CEILING && !self.allow_huge {
                    return bad(format!(
                        "exhaustive n={} enumerates 2^{} functions; pass allow_huge to proceed",
                        self.n,
                        1u32 << self.n
                    ));
                }
            }
            ScanMode::Random { samples, .. } => {
                if self.n > MAX_RANDOM_ARITY {
                    return bad(format!(
                        "random mode supports n <= {MAX_RANDOM_ARITY}, got {}",
                        self.n
                    ));
                }
                if samples == 0 {
                    return bad("sample count must be at least 1".into());
                }
            }
        }
        if self.workers == 0 {
            return bad("worker count must be at least 1".into());
        }
        if self.chunk_size == Some(0) {
            return bad("chunk size must be at least 1".into());
        }
        if let Some(d) = self.degree_filter {
            if d > self.n {
                return bad(format!("degree filter {d} exceeds n={}", self.n));
            }
        }
        if self.equivalence_check {
            if self.equivalence_d_range.is_empty() {
                return bad("equivalence d range is empty".into());
            }
            if let Some(d) = self
                .equivalence_d_range
                .iter()
                .find(|&&d| d == 0 || d > MAX_ARITY)
            {
                return bad(format!("equivalence d={d} outside 1..={MAX_ARITY}"));
            }
        }
        Ok(())
    }

    /// Size of the index space being partitioned.
    fn total(&self) -> u64 {
        match self.mode {
            ScanMode::Exhaustive => 1u64 << (1u32 << self.n),
            ScanMode::Random { samples, .. } => samples,
        }
    }

    fn chunks(&self) -> Vec<Range<u64>> {
        let total = self.total();
        let chunk = self
            .chunk_size
            .unwrap_or_else(|| total.div_ceil(self.workers as u64 * 16).clamp(1, 1 << 22));
        let mut out = Vec::with_capacity(total.div_ceil(chunk) as usize);
        let mut start = 0;
        while start < total {
            let end = start.saturating_add(chunk).min(total);
            out.push(start..end);
            start = end;
        }
        out
    }

    fn echo(&self) -> ConfigEcho {
        let (mode, samples, seed) = match self.mode {
            ScanMode::Exhaustive => ("exhaustive", None, None),
            ScanMode::Random { samples, seed } => ("random", Some(samples), Some(seed)),
        };
        ConfigEcho {
            n: self.n,
            mode,
            samples,
            seed,
            degree_filter: self.degree_filter,
            equivalence_check: self.equivalence_check,
            equivalence_d_range: if self.equivalence_check {
                self.equivalence_d_range.clone()
            } else {
                Vec::new()
            },
        }
    }
}

/// The parts of a [`ScanConfig`] that determine the result. Worker count and
/// chunk size are deliberately absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub n: u32,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub degree_filter: Option<u32>,
    pub equivalence_check: bool,
    pub equivalence_d_range: Vec<u32>,
}

fn as_hex<S: Serializer>(f: &BooleanFunction, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_hex())
}

fn as_opt_hex<S: Serializer>(
    f: &Option<BooleanFunction>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match f {
        Some(f) => s.serialize_some(&f.to_hex()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeExtremal {
    pub degree: u32,
    /// How many examined functions have exactly this degree.
    pub functions: u64,
    pub max_linear_sum: Option<Dyadic>,
    /// Smallest table (equivalently, smallest canonical hex) attaining the max.
    #[serde(serialize_with = "as_opt_hex")]
    pub witness: Option<BooleanFunction>,
    pub witness_count: u64,
    pub bound_m: Dyadic,
    pub margin: Option<Dyadic>,
}

impl DegreeExtremal {
    fn empty(degree: u32) -> Result<Self> {
        Ok(DegreeExtremal {
            degree,
            functions: 0,
            max_linear_sum: None,
            witness: None,
            witness_count: 0,
            bound_m: maj_bound(degree)?,
            margin: None,
        })
    }

    fn offer(&mut self, linear_sum: Dyadic, f: &BooleanFunction) {
        self.functions += 1;
        match self.max_linear_sum {
            Some(max) if linear_sum < max => {}
            Some(max) if linear_sum == max => {
                self.witness_count += 1;
                if let Some(w) = &self.witness {
                    if f.cmp_table(w).is_lt() {
                        self.witness = Some(f.clone());
                    }
                }
            }
            _ => {
                self.max_linear_sum = Some(linear_sum);
                self.witness = Some(f.clone());
                self.witness_count = 1;
                self.margin = Some(self.bound_m - linear_sum);
            }
        }
    }

    fn merge(mut self, other: DegreeExtremal) -> DegreeExtremal {
        self.functions += other.functions;
        match (self.max_linear_sum, other.max_linear_sum) {
            (_, None) => {}
            (None, Some(_)) => {
                self.max_linear_sum = other.max_linear_sum;
                self.witness = other.witness;
                self.witness_count = other.witness_count;
                self.margin = other.margin;
            }
            (Some(a), Some(b)) if b > a => {
                self.max_linear_sum = other.max_linear_sum;
                self.witness = other.witness;
                self.witness_count = other.witness_count;
                self.margin = other.margin;
            }
            (Some(a), Some(b)) if a == b => {
                self.witness_count += other.witness_count;
                let (w1, w2) = (self.witness.take().unwrap(), other.witness.unwrap());
                self.witness = Some(if w2.cmp_table(&w1).is_lt() { w2 } else { w1 });
            }
            _ => {}
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureViolation {
    #[serde(serialize_with = "as_hex")]
    pub hex: BooleanFunction,
    pub n: u32,
    pub degree: u32,
    pub linear_sum: Dyadic,
    pub bound_m: Dyadic,
    pub gap: Dyadic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceFailure {
    #[serde(serialize_with = "as_hex")]
    pub hex: BooleanFunction,
    pub n: u32,
    pub d: u32,
    pub predicates: EquivalencePredicates,
}

fn serialize_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub config: ConfigEcho,
    pub functions_examined: u64,
    pub per_degree: Vec<DegreeExtremal>,
    pub conjecture_violations: Vec<ConjectureViolation>,
    pub equivalence_failures: Vec<EquivalenceFailure>,
    #[serde(rename = "wall_time_ms", serialize_with = "serialize_millis")]
    pub wall_time: Duration,
}

impl ScanResult {
    /// The identity element for [`merge_results`].
    pub fn empty(config: &ScanConfig) -> Result<Self> {
        let degrees: Vec<u32> = match config.degree_filter {
            Some(d) => vec![d],
            None => (0..=config.n).collect(),
        };
        Ok(ScanResult {
            config: config.echo(),
            functions_examined: 0,
            per_degree: degrees
                .into_iter()
                .map(DegreeExtremal::empty)
                .collect::<Result<_>>()?,
            conjecture_violations: Vec::new(),
            equivalence_failures: Vec::new(),
            wall_time: Duration::ZERO,
        })
    }

    /// Same result with the timing zeroed, for comparisons.
    pub fn without_timing(mut self) -> Self {
        self.wall_time = Duration::ZERO;
        self
    }

    pub fn degree(&self, d: u32) -> Option<&DegreeExtremal> {
        self.per_degree.iter().find(|e| e.degree == d)
    }

    /// No equivalence failures. Conjecture violations do not count against this.
    pub fn is_consistent(&self) -> bool {
        self.equivalence_failures.is_empty()
    }
}

/// Combines results from disjoint partitions of the same configuration.
pub fn merge_results(a: ScanResult, b: ScanResult) -> Result<ScanResult> {
    if a.config != b.config {
        return Err(Error::ConfigMismatch);
    }
    let degrees_match = a.per_degree.len() == b.per_degree.len()
        && a.per_degree
            .iter()
            .zip(&b.per_degree)
            .all(|(x, y)| x.degree == y.degree);
    if !degrees_match {
        return Err(Error::ConfigMismatch);
    }
    let per_degree = a
        .per_degree
        .into_iter()
        .zip(b.per_degree)
        .map(|(x, y)| x.merge(y))
        .collect();
    let mut conjecture_violations = a.conjecture_violations;
    conjecture_violations.extend(b.conjecture_violations);
    conjecture_violations.sort_by(|x, y| x.hex.cmp_table(&y.hex));
    let mut equivalence_failures = a.equivalence_failures;
    equivalence_failures.extend(b.equivalence_failures);
    equivalence_failures.sort_by(|x, y| x.hex.cmp_table(&y.hex).then(x.d.cmp(&y.d)));
    Ok(ScanResult {
        config: a.config,
        functions_examined: a.functions_examined + b.functions_examined,
        per_degree,
        conjecture_violations,
        equivalence_failures,
        wall_time: a.wall_time.max(b.wall_time),
    })
}

/// Per-worker state: the partial result plus scratch space.
struct Accumulator<'a> {
    config: &'a ScanConfig,
    result: ScanResult,
    bounds: Vec<Dyadic>,
    spectrum: Vec<i32>,
}

impl<'a> Accumulator<'a> {
    fn new(config: &'a ScanConfig) -> Result<Self> {
        Ok(Accumulator {
            config,
            result: ScanResult::empty(config)?,
            bounds: (0..=config.n).map(maj_bound).collect::<Result<_>>()?,
            spectrum: Vec::with_capacity(1 << config.n),
        })
    }

    fn observe(&mut self, f: &BooleanFunction) -> Result<()> {
        let analysis = FunctionAnalysis::with_buffer(f, &mut self.spectrum);
        self.result.functions_examined += 1;

        if self.config.equivalence_check {
            for &d in &self.config.equivalence_d_range {
                let predicates = analysis.predicates(d)?;
                if !predicates.agreement {
                    self.result.equivalence_failures.push(EquivalenceFailure {
                        hex: f.clone(),
                        n: f.arity(),
                        d,
                        predicates,
                    });
                }
            }
        }

        if self
            .config
            .degree_filter
            .is_some_and(|d| d != analysis.degree)
        {
            return Ok(());
        }
        let slot = match self.config.degree_filter {
            Some(_) => 0,
            None => analysis.degree as usize,
        };
        self.result.per_degree[slot].offer(analysis.linear_sum, f);

        let bound_m = self.bounds[analysis.degree as usize];
        if analysis.linear_sum > bound_m {
            self.result.conjecture_violations.push(ConjectureViolation {
                hex: f.clone(),
                n: f.arity(),
                degree: analysis.degree,
                linear_sum: analysis.linear_sum,
                bound_m,
                gap: bound_m - analysis.linear_sum,
            });
        }
        Ok(())
    }
}

fn scan_exhaustive_range(config: &ScanConfig, range: Range<u64>) -> Result<ScanResult> {
    let mut acc = Accumulator::new(config)?;
    for table in range {
        acc.observe(&BooleanFunction::from_table_int(table, config.n)?)?;
    }
    Ok(acc.result)
}

/// Sample `index` of the random stream for `seed`.
pub fn random_function(n: u32, seed: u64, index: u64) -> Result<BooleanFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let len = 1usize << n;
    let mut words: Vec<u64> = (0..len.div_ceil(64)).map(|_| rng.next_u64()).collect();
    if len < 64 {
        words[0] &= (1u64 << len) - 1;
    }
    BooleanFunction::from_words(words, n)
}

fn scan_random_range(config: &ScanConfig, seed: u64, range: Range<u64>) -> Result<ScanResult> {
    let mut acc = Accumulator::new(config)?;
    for index in range {
        acc.observe(&random_function(config.n, seed, index)?)?;
    }
    Ok(acc.result)
}

fn fold_sequential<F>(config: &ScanConfig, chunks: Vec<Range<u64>>, work: F) -> Result<ScanResult>
where
    F: Fn(Range<u64>) -> Result<ScanResult>,
{
    chunks
        .into_iter()
        .try_fold(ScanResult::empty(config)?, |acc, r| {
            merge_results(acc, work(r)?)
        })
}

#[cfg(feature = "parallel")]
fn fold_chunks<F>(config: &ScanConfig, chunks: Vec<Range<u64>>, work: F) -> Result<ScanResult>
where
    F: Fn(Range<u64>) -> Result<ScanResult> + Sync,
{
    use rayon::prelude::*;

    if config.workers == 1 {
        return fold_sequential(config, chunks, work);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))?;
    let empty = ScanResult::empty(config)?;
    pool.install(|| {
        chunks
            .into_par_iter()
            .map(&work)
            .try_reduce(|| empty.clone(), merge_results)
    })
}

#[cfg(not(feature = "parallel"))]
fn fold_chunks<F>(config: &ScanConfig, chunks: Vec<Range<u64>>, work: F) -> Result<ScanResult>
where
    F: Fn(Range<u64>) -> Result<ScanResult> + Sync,
{
    fold_sequential(config, chunks, work)
}

fn warm_majority_memo(config: &ScanConfig) -> Result<()> {
    if config.equivalence_check {
        for &d in &config.equivalence_d_range {
            majority_profile(d)?;
        }
    }
    Ok(())
}

/// Analyzes every truth table on `n` bits exactly once.
pub fn exhaustive_scan(config: &ScanConfig) -> Result<ScanResult> {
    if config.mode != ScanMode::Exhaustive {
        return Err(Error::InvalidConfig("expected exhaustive mode".into()));
    }
    config.validate()?;
    warm_majority_memo(config)?;
    let start = Instant::now();
    let mut result = fold_chunks(config, config.chunks(), |r| {
        scan_exhaustive_range(config, r)
    })?;
    result.wall_time = start.elapsed();
    Ok(result)
}

/// Analyzes `samples` uniformly drawn truth tables (with replacement).
pub fn random_scan(config: &ScanConfig) -> Result<ScanResult> {
    let ScanMode::Random { seed, .. } = config.mode else {
        return Err(Error::InvalidConfig("expected random mode".into()));
    };
    config.validate()?;
    warm_majority_memo(config)?;
    let start = Instant::now();
    let mut result = fold_chunks(config, config.chunks(), |r| {
        scan_random_range(config, seed, r)
    })?;
    result.wall_time = start.elapsed();
    Ok(result)
}

pub fn run_scan(config: &ScanConfig) -> Result<ScanResult> {
    match config.mode {
        ScanMode::Exhaustive => exhaustive_scan(config),
        ScanMode::Random { .. } => random_scan(config),
    }
}
