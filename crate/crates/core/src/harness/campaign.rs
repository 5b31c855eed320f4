use std::cmp::Ordering;
use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use super::{
    CampaignConfig, CampaignError, CampaignResult, Check, GraphRecord, Source, Violation, DOMINANCE_TOL, STEP_TOL,
};
use crate::bounds::{bound_hong_shu_fang, min_phi, BoundReport, PhiSequence};
use crate::equality::{classify_equality, tight_levels};
use crate::graph::{enumerate_connected, parse_edge_list_corpus, parse_graph6, Graph};
use crate::replay::row_sums_scaled;
use crate::spectral::{spectral_radius_power, PowerOptions};

const CHUNK: usize = 4096;

/// Result of every enabled check on one connected graph.
#[derive(Debug, Clone)]
pub struct GraphOutcome {
    pub record: GraphRecord,
    pub violations: Vec<Violation>,
    /// Checks that held with equality on this graph.
    pub tight: Vec<Check>,
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignResult, CampaignError> {
    run_campaign_with(cfg, |_| {})
}

/// Runs the campaign, handing each connected graph's record to `sink` in
/// source order.
pub fn run_campaign_with<F>(cfg: &CampaignConfig, mut sink: F) -> Result<CampaignResult, CampaignError>
where
    F: FnMut(&GraphRecord),
{
    cfg.validate()?;
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CampaignError::Config(e.to_string()))?;

    let mut result = CampaignResult {
        graphs_checked: 0,
        skipped_disconnected: 0,
        checks: cfg.checks.iter().copied().collect(),
        violations: Vec::new(),
        tight_instances: cfg.checks.iter().map(|&c| (c, 0)).collect(),
        wall_time: Default::default(),
    };

    let mut process = |batch: Vec<(usize, Graph)>, result: &mut CampaignResult| {
        let outcomes: Vec<Option<GraphOutcome>> = pool.install(|| {
            batch
                .par_iter()
                .map(|(index, g)| g.is_connected().then(|| evaluate_graph(g, *index, cfg)))
                .collect()
        });
        for outcome in outcomes {
            let Some(outcome) = outcome else {
                result.skipped_disconnected += 1;
                continue;
            };
            result.graphs_checked += 1;
            for check in &outcome.tight {
                *result.tight_instances.entry(*check).or_default() += 1;
            }
            result.violations.extend(outcome.violations);
            sink(&outcome.record);
        }
    };

    match &cfg.source {
        Source::Enumerate { n, allow_large } => {
            let stream = enumerate_connected(*n, *allow_large).map_err(|e| CampaignError::Config(e.to_string()))?;
            let mut batch = Vec::with_capacity(CHUNK);
            for (index, (_, g)) in stream.enumerate() {
                batch.push((index, g));
                if batch.len() == CHUNK {
                    process(std::mem::take(&mut batch), &mut result);
                }
            }
            process(batch, &mut result);
        }
        Source::Graph6File(path) => {
            let text = read(path)?;
            let mut graphs = Vec::new();
            for (line_no, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let g = parse_graph6(line).map_err(|source| CampaignError::Parse { record: line_no + 1, source })?;
                graphs.push((graphs.len(), g));
            }
            for batch in graphs.chunks(CHUNK) {
                process(batch.to_vec(), &mut result);
            }
        }
        Source::EdgeListFile(path) => {
            let text = read(path)?;
            let mut graphs = Vec::new();
            for (line, parsed) in parse_edge_list_corpus(&text) {
                let g = parsed.map_err(|source| CampaignError::Parse { record: line, source })?;
                graphs.push((graphs.len(), g));
            }
            for batch in graphs.chunks(CHUNK) {
                process(batch.to_vec(), &mut result);
            }
        }
    }

    result.wall_time = started.elapsed();
    Ok(result)
}

fn read(path: &Path) -> Result<String, CampaignError> {
    fs::read_to_string(path).map_err(|source| CampaignError::Io { path: path.to_path_buf(), source })
}

/// Applies the enabled checks to one connected graph.
pub fn evaluate_graph(g: &Graph, index: usize, cfg: &CampaignConfig) -> GraphOutcome {
    let id = g.to_graph6();
    let seq = g.degree_sequence();
    let n = seq.len();
    let mut violations = Vec::new();
    let mut tight = Vec::new();
    let mut fail = |check: Check, details: String| violations.push(Violation { index, id: id.clone(), check, details });

    let rho = match spectral_radius_power::<f64>(g, &PowerOptions::default()) {
        Ok(r) => Some(r.rho),
        Err(e) => {
            fail(Check::Soundness, format!("spectral oracle failed: {e}"));
            None
        }
    };
    let report = BoundReport::new(&seq, rho);
    let phis = PhiSequence::<f64>::new(&seq);
    let certificate = classify_equality(&seq).ok();

    if let Some(rho) = rho {
        if cfg.checks.contains(&Check::Soundness) {
            for (level, &v) in phis.values.iter().enumerate() {
                if rho > v + cfg.tol {
                    fail(Check::Soundness, format!("rho {rho} exceeds phi_{} = {v}", level + 1));
                }
            }
            for name in report.violations(cfg.tol) {
                if name != "phi" {
                    fail(Check::Soundness, format!("rho {rho} exceeds the {name} bound"));
                }
            }
            if (report.phi_min - rho).abs() <= cfg.equality_tol {
                tight.push(Check::Soundness);
            }
        }

        if cfg.checks.contains(&Check::Equality) {
            if let Some(cert) = &certificate {
                let numeric = tight_levels(&phis, rho, cfg.equality_tol);
                if numeric != cert.predicted_tight_levels {
                    fail(
                        Check::Equality,
                        format!("certificate {} predicts {:?}, numeric tight set {:?}", cert.kind, cert.predicted_tight_levels, numeric),
                    );
                }
                if !numeric.is_empty() {
                    tight.push(Check::Equality);
                }
            }
        }

        if cfg.checks.contains(&Check::Replay) {
            let mut all_rows_tight = false;
            for level in 1..=n {
                match row_sums_scaled::<f64>(g, level, cfg.tol) {
                    Ok(cert) => {
                        if rho > cert.max_row_sum + cfg.tol {
                            fail(Check::Replay, format!("rho {rho} exceeds max scaled row sum {} at level {level}", cert.max_row_sum));
                        }
                        all_rows_tight |= cert.row_sums.iter().all(|&r| (r - cert.phi).abs() <= cfg.equality_tol);
                    }
                    Err(e) => fail(Check::Replay, format!("level {level}: {e}")),
                }
            }
            if all_rows_tight {
                tight.push(Check::Replay);
            }
        }
    }

    if cfg.checks.contains(&Check::Dominance) {
        for (level, (&p, &sw)) in phis.values.iter().zip(&report.shu_wu).enumerate() {
            if p > sw + DOMINANCE_TOL {
                fail(Check::Dominance, format!("phi_{} = {p} exceeds Shu-Wu bound {sw}", level + 1));
            }
        }
        let hsf: f64 = bound_hong_shu_fang(&seq);
        if ulps_apart(phis.value(n), hsf) > 1 {
            fail(Check::Dominance, format!("phi_n = {} differs from Hong-Shu-Fang bound {hsf}", phis.value(n)));
        }
        if (report.phi_min - report.shu_wu_min()).abs() <= cfg.equality_tol {
            tight.push(Check::Dominance);
        }
    }

    if cfg.checks.contains(&Check::Unimodality) {
        for problem in shape_problems(&seq, &phis) {
            fail(Check::Unimodality, problem);
        }
        if phis.pivot.is_none() {
            tight.push(Check::Unimodality);
        }
    }

    GraphOutcome { record: GraphRecord::new(index, id.clone(), report, certificate), violations, tight }
}

/// Cross-checks the integer step test, the valley shape and the pivot-based
/// minimiser against plain float evaluation.
pub(crate) fn shape_problems(seq: &crate::DegreeSequence, phis: &PhiSequence<f64>) -> Vec<String> {
    let mut problems = Vec::new();
    for (i, &step) in phis.steps.iter().enumerate() {
        let (a, b) = (phis.values[i], phis.values[i + 1]);
        let float_order = if (a - b).abs() <= STEP_TOL { Ordering::Equal } else { a.partial_cmp(&b).unwrap() };
        if float_order != step {
            problems.push(format!("step {}: integer test says {step:?}, values {a} vs {b}", i + 1));
        }
    }
    if !phis.is_unimodal() {
        problems.push(format!("steps {:?} are not valley-shaped", phis.steps));
    }
    let scanned_min = phis.values.iter().copied().fold(f64::INFINITY, f64::min);
    let scanned: Vec<usize> = (1..=phis.len()).filter(|&l| phis.value(l) <= scanned_min + STEP_TOL).collect();
    let minimum = min_phi::<f64>(seq);
    if (minimum.value - scanned_min).abs() > STEP_TOL {
        problems.push(format!("pivot minimum {} differs from scanned minimum {scanned_min}", minimum.value));
    }
    if minimum.argmin_levels != scanned {
        problems.push(format!("pivot argmin {:?} differs from scanned argmin {scanned:?}", minimum.argmin_levels));
    }
    if phis.argmin_levels != scanned {
        problems.push(format!("step-derived argmin {:?} differs from scanned argmin {scanned:?}", phis.argmin_levels));
    }
    problems
}

pub(crate) fn ulps_apart(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    if a.is_sign_negative() != b.is_sign_negative() {
        return u64::MAX;
    }
    a.to_bits().abs_diff(b.to_bits())
}
