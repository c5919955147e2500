//! Randomized falsification sweeps over generated polygon corpora.
//!
//! Each trial generates one generic convex polygon from a per-trial seed,
//! evaluates every selected claim on it (including all per-diagonal claims
//! over every valid diagonal) plus one random 4-point circle/half-plane
//! configuration, and aggregates the records. Any failed record becomes a
//! violation carrying full reproduction data: the trial seed, vertex count
//! and diagonal pin down the exact failing configuration.
//!
//! Trials are partitioned into contiguous chunks across worker threads.
//! Per-trial seeds are derived independently of execution order and chunk
//! outputs are merged in trial order, so the emitted record stream and the
//! report body are byte-identical for a fixed config regardless of the
//! worker count.

use crate::decomposition::{claim, ClaimSelection, VerificationRecord};
use crate::generator::{random_generic_convex, GenSpec, SplitMix64};
use crate::point::Point;
use crate::predicates::prop24_verify;
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;
use thiserror::Error;

/// Parameters of one search sweep.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub trials: u64,
    /// Inclusive vertex-count range; trials cycle through it round-robin.
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub claims: ClaimSelection,
    /// Worker override; `None` reads `VERTEX_EXTREMA_THREADS`, falling back
    /// to the available parallelism.
    pub threads: Option<usize>,
}

impl SearchConfig {
    pub fn new(trials: u64, n_min: usize, n_max: usize, seed: u64) -> Self {
        SearchConfig {
            trials,
            n_min,
            n_max,
            seed,
            claims: ClaimSelection::all(),
            threads: None,
        }
    }
}

/// Aggregate outcome counts for one claim tag.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClaimStats {
    pub records: u64,
    pub hypotheses_fired: u64,
    pub violations: u64,
}

/// One failed record with everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub claim: String,
    /// Generator seed of the offending trial.
    pub seed: u64,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<(usize, usize)>,
    pub witness: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub trials_run: u64,
    pub records_evaluated: u64,
    pub violations: Vec<Violation>,
    pub claim_stats: BTreeMap<String, ClaimStats>,
    pub elapsed_seconds: f64,
}

impl SearchReport {
    pub fn all_passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
    #[error("failed to write records: {0}")]
    Io(#[from] std::io::Error),
}

/// Per-trial polygon seed, computable independently for any trial index.
fn trial_seed(base: u64, trial: u64) -> u64 {
    SplitMix64::new(base.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))).next_u64()
}

struct TrialOutput {
    records_evaluated: u64,
    stats: BTreeMap<String, ClaimStats>,
    violations: Vec<Violation>,
    lines: Option<String>,
}

fn run_trial(cfg: &SearchConfig, trial: u64, want_lines: bool) -> TrialOutput {
    let seed = trial_seed(cfg.seed, trial);
    let span = (cfg.n_max - cfg.n_min + 1) as u64;
    let n = cfg.n_min + (trial % span) as usize;

    let mut records: Vec<VerificationRecord> = Vec::new();
    let outcome = random_generic_convex(&GenSpec::new(n, seed))
        .map_err(|e| e.to_string())
        .and_then(|polygon| {
            crate::decomposition::verify_polygon(&polygon, &cfg.claims)
                .map_err(|e| e.to_string())
        });
    match outcome {
        Ok(recs) => records.extend(recs),
        // Never expected for generated input; a failure here is itself a
        // reportable finding, not a crash.
        Err(message) => records.push(VerificationRecord::new(
            claim::INTERNAL_ERROR,
            n,
            None,
            true,
            false,
            json!({ "error": message }),
        )),
    }
    if cfg.claims.includes(claim::PROP_2_4) {
        records.push(prop24_trial_record(seed));
    }

    let mut out = TrialOutput {
        records_evaluated: 0,
        stats: BTreeMap::new(),
        violations: Vec::new(),
        lines: want_lines.then(String::new),
    };
    for rec in &records {
        out.records_evaluated += 1;
        let stats = out.stats.entry(rec.claim.clone()).or_default();
        stats.records += 1;
        if rec.hypotheses {
            stats.hypotheses_fired += 1;
        }
        if !rec.passed {
            stats.violations += 1;
            out.violations.push(Violation {
                claim: rec.claim.clone(),
                seed,
                n: rec.n,
                diagonal: rec.diagonal,
                witness: rec.witness.clone(),
            });
        }
        if let Some(lines) = &mut out.lines {
            lines.push_str(&rec.to_json_line());
            lines.push('\n');
        }
    }
    out
}

/// One random generic 4-point configuration for the circle/half-plane
/// implication check.
fn prop24_trial_record(seed: u64) -> VerificationRecord {
    let mut rng = SplitMix64::new(seed ^ 0x4C1F_0524_7061_D24B);
    loop {
        let points: Vec<Point> = (0..4)
            .map(|_| Point::from_ints(rng.int_in(1_000_000), rng.int_in(1_000_000)))
            .collect();
        if let Ok(holds) = prop24_verify(&points[0], &points[1], &points[2], &points[3]) {
            let coords: Vec<[String; 2]> = points
                .iter()
                .map(|p| [p.x.numer().to_string(), p.y.numer().to_string()])
                .collect();
            return VerificationRecord::new(
                claim::PROP_2_4,
                4,
                None,
                true,
                holds,
                json!({ "points": coords }),
            );
        }
        // Degenerate draw (collinear or concyclic); redraw all four.
    }
}

fn resolve_threads(cfg: &SearchConfig) -> usize {
    let from_env = || {
        std::env::var("VERTEX_EXTREMA_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&v| v > 0)
    };
    let threads = cfg
        .threads
        .or_else(from_env)
        .or_else(|| std::thread::available_parallelism().ok().map(|p| p.get()))
        .unwrap_or(1);
    threads.clamp(1, cfg.trials.max(1) as usize)
}

/// Runs the sweep, optionally streaming every record as a JSON line.
///
/// The record stream and report body are deterministic functions of the
/// config (the report's `elapsed_seconds` excepted).
pub fn execute_search(
    cfg: &SearchConfig,
    mut record_sink: Option<&mut dyn Write>,
) -> Result<SearchReport, SearchError> {
    if cfg.trials == 0 {
        return Err(SearchError::InvalidConfig("trials must be at least 1".into()));
    }
    if cfg.n_min < 4 {
        return Err(SearchError::InvalidConfig(format!(
            "n_min must be at least 4, got {}",
            cfg.n_min
        )));
    }
    if cfg.n_max < cfg.n_min {
        return Err(SearchError::InvalidConfig(format!(
            "n_max {} is below n_min {}",
            cfg.n_max, cfg.n_min
        )));
    }
    let started = Instant::now();
    let want_lines = record_sink.is_some();
    let workers = resolve_threads(cfg);

    // Contiguous chunks per worker, merged in worker order, keep the
    // output in trial order without any post-sort.
    let per_worker = cfg.trials.div_ceil(workers as u64);
    let chunks: Vec<(u64, u64)> = (0..workers as u64)
        .map(|w| {
            let start = w * per_worker;
            (start, ((w + 1) * per_worker).min(cfg.trials))
        })
        .filter(|(s, e)| s < e)
        .collect();

    let outputs: Vec<Vec<TrialOutput>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|&(start, end)| {
                scope.spawn(move || {
                    (start..end)
                        .map(|trial| run_trial(cfg, trial, want_lines))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut report = SearchReport {
        trials_run: cfg.trials,
        records_evaluated: 0,
        violations: Vec::new(),
        claim_stats: BTreeMap::new(),
        elapsed_seconds: 0.0,
    };
    for trial_out in outputs.into_iter().flatten() {
        report.records_evaluated += trial_out.records_evaluated;
        for (tag, stats) in trial_out.stats {
            let agg = report.claim_stats.entry(tag).or_default();
            agg.records += stats.records;
            agg.hypotheses_fired += stats.hypotheses_fired;
            agg.violations += stats.violations;
        }
        report.violations.extend(trial_out.violations);
        if let (Some(sink), Some(lines)) = (record_sink.as_mut(), trial_out.lines) {
            sink.write_all(lines.as_bytes())?;
        }
    }
    report.elapsed_seconds = started.elapsed().as_secs_f64();
    Ok(report)
}
