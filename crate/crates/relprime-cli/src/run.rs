//! Argument types and implementations of the subcommands.

use std::error::Error;

use clap::Args;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use relprime::arith::{self, SpfSieve};
use relprime::identities::{check_identity, CheckOptions, IdentityId, IdentityReport};
use relprime::inversion::{forward_transform, inverse_transform, MultiArgFunction};
use relprime::oracle::{count_subsets_with_cap, SubsetPredicate};
use relprime::phi::{
    phi_interval_eval, phi_k_interval_eval, phi_k_prefix_union_eval, phi_k_union_eval,
    phi_prefix_union_eval, phi_union_eval, psi2_anchored_eval, psi2_k_anchored_eval,
    psi_anchored_eval, psi_k_anchored_eval, EvalOptions, Evaluation, Interval, PhiQuery,
    UnionDomain,
};
use relprime::Count;

use crate::output::{Emitter, Format, OutputRecord, RunSummary, TraceRecord};

pub type CliResult = Result<i32, Box<dyn Error>>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 2;

/// Default seed of the sampling commands, chosen once and kept stable so
/// that default runs are reproducible: 0x52454C50.
pub const DEFAULT_SEED: u64 = 0x5245_4C50;

/// Process-wide switches taken from the environment.
pub struct Runtime {
    /// `PHI_FAULT_FLIP_MU`: corrupt the sign of mu in every divisor-sum
    /// evaluation and identity check. Self-test hook; it exists so the
    /// mismatch exit code can be exercised end to end.
    pub flip_mu: bool,
    /// `PHI_ORACLE_CAP`: element cap of the enumeration oracle.
    pub oracle_cap: u64,
}

impl Runtime {
    fn eval_options(&self, trace: bool) -> EvalOptions {
        EvalOptions { trace, flip_mu_sign: self.flip_mu }
    }

    fn check_options<'s>(&self, sieve: Option<&'s SpfSieve>) -> CheckOptions<'s> {
        CheckOptions { flip_mu_sign: self.flip_mu, sieve }
    }
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    /// Lower endpoint of the (first) interval
    #[arg(long)]
    pub l1: u64,
    /// Upper endpoint of the (first) interval
    #[arg(long)]
    pub m1: u64,
    /// Lower endpoint of the second interval (requires --m2)
    #[arg(long)]
    pub l2: Option<u64>,
    /// Upper endpoint of the second interval (requires --l2)
    #[arg(long)]
    pub m2: Option<u64>,
    /// Coprimality modulus
    #[arg(long)]
    pub n: u64,
    /// Count only subsets of exactly this size
    #[arg(short = 'k', long = "k")]
    pub k: Option<u64>,
    /// Print one line per divisor term
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct PsiArgs {
    /// Lower endpoint, required member of every counted subset
    #[arg(long)]
    pub l: u64,
    /// Upper endpoint
    #[arg(long)]
    pub m: u64,
    /// Coprimality modulus
    #[arg(long)]
    pub n: u64,
    /// Count only subsets of exactly this size
    #[arg(short = 'k', long = "k")]
    pub k: Option<u64>,
    /// Print one line per divisor term
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct Psi2Args {
    /// Lower endpoint of the first interval, forced into every subset
    #[arg(long)]
    pub l1: u64,
    /// Upper endpoint of the first interval
    #[arg(long)]
    pub m1: u64,
    /// Lower endpoint of the second interval, forced into every subset
    #[arg(long)]
    pub l2: u64,
    /// Upper endpoint of the second interval
    #[arg(long)]
    pub m2: u64,
    /// Coprimality modulus
    #[arg(long)]
    pub n: u64,
    /// Count only subsets of exactly this size (at least 2)
    #[arg(short = 'k', long = "k")]
    pub k: Option<u64>,
    /// Print one line per divisor term
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct UnaryArgs {
    /// Argument of the arithmetic function
    #[arg(long)]
    pub n: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepTarget {
    Basic,
    Tau,
    Lambda,
    Theorem4,
    Theorem5,
    All,
}

impl SweepTarget {
    fn identities(self) -> Vec<IdentityId> {
        match self {
            SweepTarget::Basic => vec![IdentityId::BasicMobius],
            SweepTarget::Tau => vec![IdentityId::TauConvolution],
            SweepTarget::Lambda => vec![IdentityId::LambdaConvolution],
            SweepTarget::Theorem4 => vec![IdentityId::Theorem4],
            SweepTarget::Theorem5 => vec![IdentityId::Theorem5],
            SweepTarget::All => IdentityId::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckTarget {
    Basic,
    Tau,
    Lambda,
    Theorem4,
    Theorem5,
}

impl CheckTarget {
    fn identity(self) -> IdentityId {
        match self {
            CheckTarget::Basic => IdentityId::BasicMobius,
            CheckTarget::Tau => IdentityId::TauConvolution,
            CheckTarget::Lambda => IdentityId::LambdaConvolution,
            CheckTarget::Theorem4 => IdentityId::Theorem4,
            CheckTarget::Theorem5 => IdentityId::Theorem5,
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Which identity family to sweep
    #[arg(value_enum)]
    pub target: SweepTarget,
    /// Largest m of the two-parameter grids
    #[arg(long, default_value_t = 50)]
    pub m_max: u64,
    /// Largest modulus n
    #[arg(long, default_value_t = 50)]
    pub n_max: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Which identity to check
    #[arg(value_enum)]
    pub target: CheckTarget,
    /// First parameter (required for theorem4 and theorem5)
    #[arg(long)]
    pub m: Option<u64>,
    /// Modulus
    #[arg(long)]
    pub n: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest interval endpoint of the generated instances
    #[arg(long, default_value_t = 10)]
    pub max_endpoint: u64,
    /// Largest modulus
    #[arg(long, default_value_t = 12)]
    pub max_n: u64,
    /// Largest fixed subset size to compare
    #[arg(long, default_value_t = 4)]
    pub max_k: u64,
    /// Sample this many instances instead of sweeping exhaustively
    /// (implied, with 1000 samples, when --max-endpoint exceeds 14)
    #[arg(long)]
    pub samples: Option<u64>,
    /// Seed of the instance sampler
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct InvertDemoArgs {
    /// Number of exactly divided leading variables
    #[arg(long, default_value_t = 1)]
    pub a: u64,
    /// Number of floor-divided trailing variables
    #[arg(long, default_value_t = 1)]
    pub b: u64,
    /// Largest coordinate of the evaluation grid
    #[arg(long, default_value_t = 12)]
    pub grid: u64,
    /// How many seeded pseudorandom functions to round-trip
    #[arg(long, default_value_t = 5)]
    pub functions: u64,
    /// Seed of the function family
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub format: FormatArg,
}

fn emitter_for(format: &FormatArg, trace: bool) -> Result<Emitter, Box<dyn Error>> {
    if trace && format.format == Format::Csv {
        return Err("divisor traces are not representable in csv; use plain or json".into());
    }
    Ok(Emitter::new(format.format))
}

fn attach_trace(record: &mut OutputRecord, ev: &Evaluation, trace: bool) {
    if trace {
        record.trace = Some(ev.terms.iter().map(TraceRecord::from_term).collect());
    }
}

pub fn cmd_phi(args: &PhiArgs, rt: &Runtime) -> CliResult {
    let mut emitter = emitter_for(&args.format, args.trace)?;
    emitter.bare_result = true;
    let opts = rt.eval_options(args.trace);

    let domain = match (args.l2, args.m2) {
        (None, None) => UnionDomain::single(Interval::new(args.l1, args.m1)?),
        (Some(l2), Some(m2)) => {
            if args.m1 >= l2 {
                return Err(format!(
                    "the intervals must be ordered: --m1 {} is not below --l2 {l2}",
                    args.m1
                )
                .into());
            }
            UnionDomain::union(Interval::new(args.l1, args.m1)?, Interval::new(l2, m2)?)
        }
        _ => return Err("--l2 and --m2 must be given together".into()),
    };

    let query = PhiQuery { domain, n: args.n, k: args.k };
    let ev = query.evaluate_with(&opts)?;

    let mut record = OutputRecord::new("phi", ev.value.to_string());
    record.l1 = Some(args.l1);
    record.m1 = Some(args.m1);
    record.l2 = args.l2;
    record.m2 = args.m2;
    record.n = Some(args.n);
    record.k = args.k;
    attach_trace(&mut record, &ev, args.trace);
    emitter.record(&record);
    Ok(EXIT_OK)
}

pub fn cmd_psi(args: &PsiArgs, rt: &Runtime) -> CliResult {
    let mut emitter = emitter_for(&args.format, args.trace)?;
    emitter.bare_result = true;
    let opts = rt.eval_options(args.trace);

    let ev = match args.k {
        None => psi_anchored_eval(args.l, args.m, args.n, &opts)?,
        Some(k) => psi_k_anchored_eval(args.l, args.m, args.n, k, &opts)?,
    };

    let mut record = OutputRecord::new("psi", ev.value.to_string());
    record.l1 = Some(args.l);
    record.m1 = Some(args.m);
    record.n = Some(args.n);
    record.k = args.k;
    attach_trace(&mut record, &ev, args.trace);
    emitter.record(&record);
    Ok(EXIT_OK)
}

pub fn cmd_psi2(args: &Psi2Args, rt: &Runtime) -> CliResult {
    let mut emitter = emitter_for(&args.format, args.trace)?;
    emitter.bare_result = true;
    let opts = rt.eval_options(args.trace);

    let ev = match args.k {
        None => psi2_anchored_eval(args.l1, args.m1, args.l2, args.m2, args.n, &opts)?,
        Some(k) => psi2_k_anchored_eval(args.l1, args.m1, args.l2, args.m2, args.n, k, &opts)?,
    };

    let mut record = OutputRecord::new("psi2", ev.value.to_string());
    record.l1 = Some(args.l1);
    record.m1 = Some(args.m1);
    record.l2 = Some(args.l2);
    record.m2 = Some(args.m2);
    record.n = Some(args.n);
    record.k = args.k;
    attach_trace(&mut record, &ev, args.trace);
    emitter.record(&record);
    Ok(EXIT_OK)
}

pub fn cmd_unary(name: &str, args: &UnaryArgs) -> CliResult {
    let mut emitter = emitter_for(&args.format, false)?;
    emitter.bare_result = true;
    let value = match name {
        "mobius" => arith::mobius(args.n)? as i64,
        "tau" => arith::tau(args.n)? as i64,
        "lambda" => arith::liouville(args.n)? as i64,
        _ => unreachable!("unary command name"),
    };
    let mut record = OutputRecord::new(name, value.to_string());
    record.n = Some(args.n);
    emitter.record(&record);
    Ok(EXIT_OK)
}

fn identity_record(report: &IdentityReport, command: String) -> OutputRecord {
    let lhs = report
        .lhs_values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let mut record = OutputRecord::new(command, lhs);
    record.m1 = report.m;
    record.n = Some(report.n);
    record.matched = Some(report.matched);
    record
}

pub fn cmd_check(args: &CheckArgs, rt: &Runtime) -> CliResult {
    let mut emitter = emitter_for(&args.format, false)?;
    let id = args.target.identity();
    let report = check_identity(id, args.m, args.n, &rt.check_options(None))?;
    emitter.record(&identity_record(&report, format!("check:{}", id.name())));
    if args.format.format == Format::Plain {
        let expected = report
            .expected
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("expected={expected}");
    }
    Ok(if report.matched { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn cmd_sweep(args: &SweepArgs, rt: &Runtime) -> CliResult {
    let mut emitter = emitter_for(&args.format, false)?;
    let sieve = SpfSieve::new(args.n_max.max(2));
    let opts = rt.check_options(Some(&sieve));

    let mut checked = 0u64;
    let mut failed = 0u64;
    for id in args.target.identities() {
        let command = format!("sweep:{}", id.name());
        if id.takes_m() {
            for m in 1..=args.m_max {
                for n in 2..=args.n_max {
                    let report = check_identity(id, Some(m), n, &opts)?;
                    checked += 1;
                    failed += u64::from(!report.matched);
                    emitter.record(&identity_record(&report, command.clone()));
                }
            }
        } else {
            for n in 1..=args.n_max {
                let report = check_identity(id, None, n, &opts)?;
                checked += 1;
                failed += u64::from(!report.matched);
                emitter.record(&identity_record(&report, command.clone()));
            }
        }
    }

    emitter.summary(&RunSummary { command: "sweep".into(), checked, failed, seed: None });
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

/// One generated verification instance.
enum Shape {
    Interval(u64, u64),
    Union(u64, u64, u64, u64),
}

impl Shape {
    fn domain(&self) -> UnionDomain {
        match *self {
            Shape::Interval(l, m) => UnionDomain::single(Interval::new(l, m).expect("shape")),
            Shape::Union(l1, m1, l2, m2) => UnionDomain::union(
                Interval::new(l1, m1).expect("shape"),
                Interval::new(l2, m2).expect("shape"),
            ),
        }
    }

    fn size(&self) -> u64 {
        match *self {
            Shape::Interval(l, m) => m - l + 1,
            Shape::Union(l1, m1, l2, m2) => (m1 - l1 + 1) + (m2 - l2 + 1),
        }
    }
}

/// Largest endpoint for which `verify` sweeps every shape exhaustively.
const EXHAUSTIVE_ENDPOINT_LIMIT: u64 = 14;

fn exhaustive_shapes(max_endpoint: u64) -> Vec<Shape> {
    let mut shapes = Vec::new();
    for l in 1..=max_endpoint {
        for m in l..=max_endpoint {
            shapes.push(Shape::Interval(l, m));
        }
    }
    for l1 in 1..=max_endpoint {
        for m1 in l1..=max_endpoint {
            for l2 in m1 + 1..=max_endpoint {
                for m2 in l2..=max_endpoint {
                    shapes.push(Shape::Union(l1, m1, l2, m2));
                }
            }
        }
    }
    shapes
}

fn sampled_shapes(
    samples: u64,
    max_endpoint: u64,
    cap: u64,
    seed: u64,
) -> Result<Vec<Shape>, Box<dyn Error>> {
    if cap == 0 {
        return Err("the oracle cap leaves no room for any domain".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shapes = Vec::new();
    let mut attempts = 0u64;
    while (shapes.len() as u64) < samples {
        attempts += 1;
        if attempts > samples.saturating_mul(10_000) {
            return Err("could not sample shapes within the oracle cap; \
                 lower --max-endpoint or raise PHI_ORACLE_CAP"
                .into());
        }
        let want_union = max_endpoint >= 3 && shapes.len() % 2 == 0;
        let shape = if want_union {
            let mut c = [0u64; 4];
            for v in c.iter_mut() {
                *v = rng.random_range(1..=max_endpoint);
            }
            c.sort_unstable();
            if c[1] == c[2] {
                continue; // need m1 < l2
            }
            Shape::Union(c[0], c[1], c[2], c[3])
        } else {
            let a = rng.random_range(1..=max_endpoint);
            let b = rng.random_range(1..=max_endpoint);
            Shape::Interval(a.min(b), a.max(b))
        };
        if shape.size() <= cap {
            shapes.push(shape);
        }
    }
    Ok(shapes)
}

struct VerifyState<'a> {
    rt: &'a Runtime,
    opts: EvalOptions,
    max_k: u64,
    failures: Vec<String>,
}

impl VerifyState<'_> {
    fn oracle(
        &self,
        domain: &UnionDomain,
        n: u64,
        k: Option<u64>,
        required: &[u64],
    ) -> Result<Count, Box<dyn Error>> {
        let mut pred = SubsetPredicate::coprime_to(n)?;
        for &r in required {
            pred = pred.require(r)?;
        }
        if let Some(k) = k {
            pred = pred.with_exact_size(k)?;
        }
        Ok(count_subsets_with_cap(domain, &pred, self.rt.oracle_cap)?)
    }

    fn compare(
        &mut self,
        label: String,
        closed: Evaluation,
        reference: Count,
    ) -> bool {
        if closed.value == BigInt::from(reference) {
            true
        } else {
            self.failures.push(label);
            false
        }
    }

    /// Runs every applicable evaluator against the oracle; returns whether
    /// all of them agreed, plus the headline all-sizes count.
    fn check_instance(&mut self, shape: &Shape, n: u64) -> Result<(bool, String), Box<dyn Error>> {
        let domain = shape.domain();
        let mut ok = true;
        let headline;
        match *shape {
            Shape::Interval(l, m) => {
                let all = phi_interval_eval(l, m, n, &self.opts)?;
                headline = all.value.to_string();
                let reference = self.oracle(&domain, n, None, &[])?;
                ok &= self.compare(format!("phi_interval({l},{m},{n})"), all, reference);

                let reference = self.oracle(&domain, n, None, &[l])?;
                let anchored = psi_anchored_eval(l, m, n, &self.opts)?;
                ok &= self.compare(format!("psi({l},{m},{n})"), anchored, reference);

                for k in 1..=self.max_k {
                    let reference = self.oracle(&domain, n, Some(k), &[])?;
                    let sized = phi_k_interval_eval(l, m, n, k, &self.opts)?;
                    ok &= self.compare(format!("phi_k_interval({l},{m},{n},{k})"), sized, reference);

                    let reference = self.oracle(&domain, n, Some(k), &[l])?;
                    let sized = psi_k_anchored_eval(l, m, n, k, &self.opts)?;
                    ok &= self.compare(format!("psi_k({l},{m},{n},{k})"), sized, reference);
                }
            }
            Shape::Union(l1, m1, l2, m2) => {
                let all = phi_union_eval(l1, m1, l2, m2, n, &self.opts)?;
                headline = all.value.to_string();
                let reference = self.oracle(&domain, n, None, &[])?;
                ok &= self.compare(format!("phi_union({l1},{m1},{l2},{m2},{n})"), all, reference);

                let reference = self.oracle(&domain, n, None, &[l1, l2])?;
                let anchored = psi2_anchored_eval(l1, m1, l2, m2, n, &self.opts)?;
                ok &= self.compare(format!("psi2({l1},{m1},{l2},{m2},{n})"), anchored, reference);

                for k in 1..=self.max_k {
                    let reference = self.oracle(&domain, n, Some(k), &[])?;
                    let sized = phi_k_union_eval(l1, m1, l2, m2, n, k, &self.opts)?;
                    ok &= self.compare(
                        format!("phi_k_union({l1},{m1},{l2},{m2},{n},{k})"),
                        sized,
                        reference,
                    );
                    if k >= 2 {
                        let reference = self.oracle(&domain, n, Some(k), &[l1, l2])?;
                        let sized = psi2_k_anchored_eval(l1, m1, l2, m2, n, k, &self.opts)?;
                        ok &= self.compare(
                            format!("psi2_k({l1},{m1},{l2},{m2},{n},{k})"),
                            sized,
                            reference,
                        );
                    }
                }

                if l1 == 1 {
                    let reference = self.oracle(&domain, n, None, &[])?;
                    let prefix = phi_prefix_union_eval(m1, l2, m2, n, &self.opts)?;
                    ok &= self.compare(
                        format!("phi_prefix_union({m1},{l2},{m2},{n})"),
                        prefix,
                        reference,
                    );
                    for k in 1..=self.max_k {
                        let reference = self.oracle(&domain, n, Some(k), &[])?;
                        let prefix = phi_k_prefix_union_eval(m1, l2, m2, n, k, &self.opts)?;
                        ok &= self.compare(
                            format!("phi_k_prefix_union({m1},{l2},{m2},{n},{k})"),
                            prefix,
                            reference,
                        );
                    }
                }
            }
        }
        Ok((ok, headline))
    }
}

pub fn cmd_verify(args: &VerifyArgs, rt: &Runtime) -> CliResult {
    let mut emitter = emitter_for(&args.format, false)?;

    let sampled = args.samples.is_some() || args.max_endpoint > EXHAUSTIVE_ENDPOINT_LIMIT;
    let shapes = if sampled {
        let samples = args.samples.unwrap_or(1000);
        sampled_shapes(samples, args.max_endpoint, rt.oracle_cap, args.seed)?
    } else {
        if args.max_endpoint > rt.oracle_cap {
            return Err(format!(
                "exhaustive verification up to endpoint {} exceeds the oracle cap {}; \
                 lower --max-endpoint, use --samples, or raise PHI_ORACLE_CAP",
                args.max_endpoint, rt.oracle_cap
            )
            .into());
        }
        exhaustive_shapes(args.max_endpoint)
    };

    let mut state = VerifyState {
        rt,
        opts: rt.eval_options(false),
        max_k: args.max_k,
        failures: Vec::new(),
    };

    let mut checked = 0u64;
    let mut failed = 0u64;
    for shape in &shapes {
        for n in 1..=args.max_n {
            let (ok, headline) = state.check_instance(shape, n)?;
            checked += 1;
            failed += u64::from(!ok);
            let mut record = OutputRecord::new("verify", headline);
            match *shape {
                Shape::Interval(l, m) => {
                    record.l1 = Some(l);
                    record.m1 = Some(m);
                }
                Shape::Union(l1, m1, l2, m2) => {
                    record.l1 = Some(l1);
                    record.m1 = Some(m1);
                    record.l2 = Some(l2);
                    record.m2 = Some(m2);
                }
            }
            record.n = Some(n);
            record.matched = Some(ok);
            emitter.record(&record);
        }
    }

    for failure in &state.failures {
        eprintln!("mismatch: {failure}");
    }
    emitter.summary(&RunSummary {
        command: "verify".into(),
        checked,
        failed,
        seed: sampled.then_some(args.seed),
    });
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

/// Deterministic value in [-100, 100] mixed from a seed and a tuple; the
/// "random arithmetical function" family of `invert-demo`.
fn mixed(seed: u64, args: &[u64]) -> i64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &a in args {
        h ^= a.wrapping_add(0xbf58_476d_1ce4_e5b9).wrapping_mul(h | 1);
        h = h.rotate_left(27).wrapping_mul(0x94d0_49bb_1331_11eb);
    }
    h ^= h >> 31;
    (h % 201) as i64 - 100
}

/// Evaluation points with each coordinate at most `bound`: the full grid
/// for up to two variables, a coarser deterministic slice above that.
fn grid_points(arity: usize, bound: u64) -> Vec<Vec<u64>> {
    let step = if arity <= 2 { 1 } else { 3 };
    let mut points = Vec::new();
    let mut current = vec![1u64; arity];
    loop {
        points.push(current.clone());
        let mut i = 0;
        loop {
            current[i] += step;
            if current[i] <= bound {
                break;
            }
            current[i] = 1;
            i += 1;
            if i == arity {
                return points;
            }
        }
    }
}

pub fn cmd_invert_demo(args: &InvertDemoArgs) -> CliResult {
    let mut emitter = emitter_for(&args.format, false)?;
    let exact = args.a as usize;
    let floored = args.b as usize;
    if exact == 0 {
        return Err("--a must be at least 1: the divisor index is the gcd of the exact variables"
            .into());
    }
    if args.grid == 0 {
        return Err("--grid must be at least 1".into());
    }

    let points = grid_points(exact + floored, args.grid);
    let command = format!("invert-demo:a{}b{}", args.a, args.b);
    let mut checked = 0u64;
    let mut failed = 0u64;
    for index in 0..args.functions {
        let seed = args.seed.wrapping_add(index);
        let f = MultiArgFunction::new(exact, floored, move |t: &[u64]| {
            BigInt::from(mixed(seed, t))
        })?
        .memoized();
        let forward = MultiArgFunction::new(exact, floored, |t: &[u64]| {
            forward_transform(&f, t).expect("forward transform on valid points")
        })?
        .memoized();
        let inverse = MultiArgFunction::new(exact, floored, |t: &[u64]| {
            inverse_transform(&f, t).expect("inverse transform on valid points")
        })?
        .memoized();

        let mut round_trips = true;
        for point in &points {
            let original = f.eval(point)?;
            round_trips &= inverse_transform(&forward, point)? == original;
            round_trips &= forward_transform(&inverse, point)? == original;
        }

        checked += 2 * points.len() as u64;
        failed += u64::from(!round_trips);
        let mut record = OutputRecord::new(command.clone(), (2 * points.len()).to_string());
        record.seed = Some(seed);
        record.matched = Some(round_trips);
        emitter.record(&record);
    }

    emitter.summary(&RunSummary {
        command: "invert-demo".into(),
        checked,
        failed,
        seed: Some(args.seed),
    });
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
