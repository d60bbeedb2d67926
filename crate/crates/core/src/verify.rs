//! Exhaustive identity sweeps and their reports.
//!
//! A sweep walks every partition of `1..=n_max` (crossed with each `d` in
//! the dimension set where the identity needs one) plus a batch of seeded
//! random sequences for the Vershik identities. Work fans out over a rayon
//! pool; results are gathered in enumeration order, so the report body does
//! not depend on the worker count.
//!
//! Random sequences come from `ChaCha8Rng::seed_from_u64(seed)` and are all
//! drawn up front on one thread, in trial order.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::identities::{
    check_branching, check_final1, check_final2, check_qwithhook, check_ssyt_syt, IdentityCheck,
    IdentityId,
};
use crate::partitions::{partitions_of, Partition};
use crate::tableaux::{ssyt_count, FillingDimension};
use crate::vershik::{
    all_pairs, all_triples, identity1_lhs, identity2_sides, normalization_residual,
    random_sequence, recursion_residual, PairSequence, SequenceBounds,
};
use crate::{Error, ExactRational, Result};

pub const GENERATOR: &str = "ChaCha8Rng::seed_from_u64 (rand_chacha 0.3)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workers {
    /// One worker per available core.
    Auto,
    Fixed(usize),
}

impl std::str::FromStr for Workers {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Workers::Auto);
        }
        match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Workers::Fixed(n)),
            _ => Err(Error::Config(format!(
                "workers must be AUTO or a positive integer, got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub d_set: BTreeSet<u32>,
    pub identities: BTreeSet<IdentityId>,
    pub seed: u64,
    pub trial_count: usize,
    pub workers: Workers,
    pub sequence_bounds: SequenceBounds,
}

impl Default for SweepConfig {
    /// The full acceptance sweep: `n ≤ 12`, `d ∈ 1..=6`, every identity,
    /// 200 random sequences from seed 42.
    fn default() -> Self {
        SweepConfig {
            n_max: 12,
            d_set: (1..=6).collect(),
            identities: IdentityId::ALL.into_iter().collect(),
            seed: 42,
            trial_count: 200,
            workers: Workers::Fixed(1),
            sequence_bounds: SequenceBounds::default(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 1 {
            return Err(Error::Config("n_max must be at least 1".into()));
        }
        if self.identities.is_empty() {
            return Err(Error::Config("no identities selected".into()));
        }
        if self.identities.iter().any(|id| id.needs_dimension()) && self.d_set.is_empty() {
            return Err(Error::Config(
                "d_set is empty but SSYT_SYT or BRANCHING needs it".into(),
            ));
        }
        if self.d_set.contains(&0) {
            return Err(Error::Config("d_set entries must be at least 1".into()));
        }
        if self.identities.contains(&IdentityId::VershikRandom) {
            if self.trial_count < 1 {
                return Err(Error::Config("trial_count must be at least 1".into()));
            }
            let b = self.sequence_bounds;
            if b.max_s < 1 || b.max_numerator < 1 || b.max_denominator < 1 {
                return Err(Error::Config("sequence bounds must be positive".into()));
            }
        }
        if self.workers == Workers::Fixed(0) {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub n_max: usize,
    pub d_set: Vec<u32>,
    pub identities: Vec<IdentityId>,
    pub seed: u64,
    pub trials: usize,
    pub sequence_bounds: SequenceBounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentitySummary {
    pub identity: IdentityId,
    pub checked: u64,
    pub passed: u64,
    pub skipped: u64,
    pub failed: u64,
}

/// A failed check with its operands in exchange text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: IdentityId,
    /// Partition (`4,3,1`) or sequence (`1/2,3,...`).
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u32>,
    pub detail: String,
    pub lhs: String,
    pub rhs: String,
}

/// Sweep outcome. Everything but `elapsed` is serialized into the report
/// body, which is a pure function of the configuration minus its worker count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub generator: &'static str,
    pub config: ConfigEcho,
    pub summary: Vec<IdentitySummary>,
    pub failures: Vec<Failure>,
    pub status: &'static str,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn failed(&self) -> u64 {
        self.summary.iter().map(|s| s.failed).sum()
    }

    pub fn passed_all(&self) -> bool {
        self.failed() == 0
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed_all() {
            0
        } else {
            1
        }
    }

    /// Pretty JSON with fixed field order, newline-terminated.
    pub fn to_report_text(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<16} {:>9} {:>9} {:>9} {:>9}",
            "identity", "checked", "passed", "skipped", "failed"
        );
        for s in &self.summary {
            let _ = writeln!(
                out,
                "{:<16} {:>9} {:>9} {:>9} {:>9}",
                s.identity.as_str(),
                s.checked,
                s.passed,
                s.skipped,
                s.failed
            );
        }
        for f in &self.failures {
            let d = f.dimension.map(|d| format!(" d={d}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "FAIL {} [{}]{} {}: lhs={} rhs={}",
                f.identity, f.subject, d, f.detail, f.lhs, f.rhs
            );
        }
        let _ = writeln!(out, "status: {}", self.status);
        let _ = writeln!(out, "elapsed: {:.3}s", self.elapsed.as_secs_f64());
        out
    }
}

enum Task {
    Shape {
        identity: IdentityId,
        lambda: Partition,
        d: Option<FillingDimension>,
    },
    Trial {
        index: usize,
        sequence: PairSequence,
    },
}

#[derive(Default)]
struct Tally {
    checked: u64,
    passed: u64,
    skipped: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn record(&mut self, failure: Option<Failure>) {
        self.checked += 1;
        match failure {
            None => self.passed += 1,
            Some(f) => self.failures.push(f),
        }
    }
}

/// Runs the sweep described by `config`.
pub fn run_sweep(config: &SweepConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();

    let tasks = build_tasks(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(match config.workers {
            Workers::Auto => 0,
            Workers::Fixed(n) => n,
        })
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<(IdentityId, Tally)> =
        pool.install(|| tasks.par_iter().map(run_task).collect());

    let mut summary: Vec<IdentitySummary> = Vec::new();
    let mut failures = Vec::new();
    for id in &config.identities {
        let mut s = IdentitySummary {
            identity: *id,
            checked: 0,
            passed: 0,
            skipped: 0,
            failed: 0,
        };
        for (_, t) in outcomes.iter().filter(|(oid, _)| oid == id) {
            s.checked += t.checked;
            s.passed += t.passed;
            s.skipped += t.skipped;
            s.failed += t.failures.len() as u64;
            failures.extend(t.failures.iter().cloned());
        }
        summary.push(s);
    }

    let status = if failures.is_empty() { "pass" } else { "fail" };
    Ok(Report {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        generator: GENERATOR,
        config: ConfigEcho {
            n_max: config.n_max,
            d_set: config.d_set.iter().copied().collect(),
            identities: config.identities.iter().copied().collect(),
            seed: config.seed,
            trials: config.trial_count,
            sequence_bounds: config.sequence_bounds,
        },
        summary,
        failures,
        status,
        elapsed: start.elapsed(),
    })
}

/// The random sequences a sweep with this seed and size would check.
pub fn seeded_sequences(seed: u64, count: usize, bounds: SequenceBounds) -> Vec<PairSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_sequence(&mut rng, bounds))
        .collect()
}

fn build_tasks(config: &SweepConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for &identity in &config.identities {
        if identity == IdentityId::VershikRandom {
            let seqs = seeded_sequences(config.seed, config.trial_count, config.sequence_bounds);
            tasks.extend(
                seqs.into_iter()
                    .enumerate()
                    .map(|(index, sequence)| Task::Trial { index, sequence }),
            );
            continue;
        }
        for n in 1..=config.n_max {
            for lambda in partitions_of(n) {
                if identity.needs_dimension() {
                    for &d in &config.d_set {
                        tasks.push(Task::Shape {
                            identity,
                            lambda: lambda.clone(),
                            d: Some(FillingDimension::new(d).expect("validated")),
                        });
                    }
                } else {
                    tasks.push(Task::Shape {
                        identity,
                        lambda,
                        d: None,
                    });
                }
            }
        }
    }
    tasks
}

fn run_task(task: &Task) -> (IdentityId, Tally) {
    match task {
        Task::Shape {
            identity,
            lambda,
            d,
        } => (*identity, run_shape(*identity, lambda, *d)),
        Task::Trial { index, sequence } => (IdentityId::VershikRandom, run_trial(*index, sequence)),
    }
}

fn check_failure(check: &IdentityCheck, detail: String) -> Option<Failure> {
    if check.pass {
        return None;
    }
    Some(Failure {
        identity: check.identity,
        subject: check.subject.to_string(),
        dimension: check.dimension.map(FillingDimension::get),
        detail,
        lhs: check.lhs.to_string(),
        rhs: check.rhs.to_string(),
    })
}

fn error_failure(
    identity: IdentityId,
    subject: String,
    dimension: Option<u32>,
    e: &Error,
) -> Failure {
    Failure {
        identity,
        subject,
        dimension,
        detail: format!("error: {e}"),
        lhs: String::new(),
        rhs: String::new(),
    }
}

fn run_shape(identity: IdentityId, lambda: &Partition, d: Option<FillingDimension>) -> Tally {
    let mut tally = Tally::default();
    let dv = d.map(FillingDimension::get);
    let fail_err = |e: &Error| error_failure(identity, lambda.to_string(), dv, e);
    match identity {
        IdentityId::QWithHook => match check_qwithhook(lambda) {
            Ok(checks) => {
                for c in &checks {
                    let detail = format!("corner j={}", c.corner.unwrap_or_default());
                    tally.record(check_failure(c, detail));
                }
            }
            Err(e) => tally.record(Some(fail_err(&e))),
        },
        IdentityId::Final1 => {
            tally.record(check_failure(&check_final1(lambda), "first moment".into()))
        }
        IdentityId::Final2 => {
            tally.record(check_failure(&check_final2(lambda), "second moment".into()))
        }
        IdentityId::SsytSyt => {
            let d = d.expect("SSYT_SYT tasks carry d");
            match ssyt_count(lambda, d) {
                Ok(c) if c.is_zero() => tally.skipped += 1,
                Ok(_) => match check_ssyt_syt(lambda, d) {
                    Ok(c) => tally.record(check_failure(&c, "squared ratio sum".into())),
                    Err(e) => tally.record(Some(fail_err(&e))),
                },
                Err(e) => tally.record(Some(fail_err(&e))),
            }
        }
        IdentityId::Branching => {
            let d = d.expect("BRANCHING tasks carry d");
            match check_branching(lambda, d) {
                Ok(c) => tally.record(check_failure(&c, "branching sum".into())),
                Err(e) => tally.record(Some(fail_err(&e))),
            }
        }
        IdentityId::VershikRandom => unreachable!("random trials are separate tasks"),
    }
    tally
}

fn run_trial(index: usize, a: &PairSequence) -> Tally {
    let mut tally = Tally::default();
    let zero = ExactRational::from_integer(0.into());
    let residual_failure = |detail: String, r: Result<ExactRational>| -> Option<Failure> {
        match r {
            Ok(v) if v == zero => None,
            Ok(v) => Some(Failure {
                identity: IdentityId::VershikRandom,
                subject: a.to_string(),
                dimension: None,
                detail: format!("trial {index}: {detail}"),
                lhs: v.to_string(),
                rhs: "0".into(),
            }),
            Err(e) => Some(error_failure(
                IdentityId::VershikRandom,
                a.to_string(),
                None,
                &e,
            )),
        }
    };

    for t in all_triples(a.s()) {
        tally.record(residual_failure(
            format!("recursion {t}"),
            recursion_residual(a, t),
        ));
    }
    for (m, n) in all_pairs(a.s()) {
        tally.record(residual_failure(
            format!("normalization (m={m}, n={n})"),
            normalization_residual(a, m, n),
        ));
        tally.record(residual_failure(
            format!("first moment (m={m}, n={n})"),
            identity1_lhs(a, m, n),
        ));
        let second = match identity2_sides(a, m, n) {
            Ok((lhs, rhs)) if lhs == rhs => None,
            Ok((lhs, rhs)) => Some(Failure {
                identity: IdentityId::VershikRandom,
                subject: a.to_string(),
                dimension: None,
                detail: format!("trial {index}: second moment (m={m}, n={n})"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
            Err(e) => Some(error_failure(
                IdentityId::VershikRandom,
                a.to_string(),
                None,
                &e,
            )),
        };
        tally.record(second);
    }
    tally
}
