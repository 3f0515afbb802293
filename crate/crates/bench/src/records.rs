//! Per-trial result rows and their CSV persistence. The per-trial file is
//! the source of truth; aggregates and charts are derived views.

use std::fmt::Write as _;

use anyhow::{bail, Context};

pub const TRIALS_HEADER: &str =
    "function,dim,T,trial_index,seed,method,mu_hat,f_hat,error,eval_count,wall_ms,generator_version";

pub const AGGREGATE_HEADER: &str =
    "function,dim,T,method,trials,mean_error,median_error,q1_error,q3_error";

/// One persisted experiment row. `wall_ms` is the only nondeterministic
/// field; everything else reproduces from the config and the trial index.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub function: String,
    pub dim: usize,
    pub t: usize,
    pub trial_index: usize,
    pub seed: u64,
    pub method: String,
    pub mu_hat: Option<f64>,
    pub f_hat: f64,
    pub error: f64,
    pub eval_count: usize,
    pub wall_ms: f64,
    pub generator_version: String,
}

pub fn trials_to_csv(records: &[TrialRecord]) -> String {
    let mut out = String::new();
    out.push_str(TRIALS_HEADER);
    out.push('\n');
    for r in records {
        let mu = r.mu_hat.map(|m| m.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.function,
            r.dim,
            r.t,
            r.trial_index,
            r.seed,
            r.method,
            mu,
            r.f_hat,
            r.error,
            r.eval_count,
            r.wall_ms,
            r.generator_version
        )
        .expect("string write");
    }
    out
}

pub fn trials_from_csv(text: &str) -> anyhow::Result<Vec<TrialRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == TRIALS_HEADER => {}
        other => bail!("bad trials header: {other:?}"),
    }
    let mut out = Vec::new();
    for (n, line) in lines.enumerate() {
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 12 {
            bail!("line {}: expected 12 columns, got {}", n + 2, cols.len());
        }
        let ctx = || format!("line {}", n + 2);
        out.push(TrialRecord {
            function: cols[0].to_string(),
            dim: cols[1].parse().with_context(ctx)?,
            t: cols[2].parse().with_context(ctx)?,
            trial_index: cols[3].parse().with_context(ctx)?,
            seed: cols[4].parse().with_context(ctx)?,
            method: cols[5].to_string(),
            mu_hat: if cols[6].is_empty() {
                None
            } else {
                Some(cols[6].parse().with_context(ctx)?)
            },
            f_hat: cols[7].parse().with_context(ctx)?,
            error: cols[8].parse().with_context(ctx)?,
            eval_count: cols[9].parse().with_context(ctx)?,
            wall_ms: cols[10].parse().with_context(ctx)?,
            generator_version: cols[11].to_string(),
        });
    }
    Ok(out)
}

/// Summary statistics for one `(function, dim, T, method)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub function: String,
    pub dim: usize,
    pub t: usize,
    pub method: String,
    pub trials: usize,
    pub mean_error: f64,
    pub median_error: f64,
    pub q1_error: f64,
    pub q3_error: f64,
}

/// Linear-interpolation quantile of a sorted slice (the common "type 7").
fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let pos = q * (n - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] + (sorted[hi] - sorted[lo]) * frac
}

/// Groups records by `(function, dim, T, method)` in first-appearance order
/// and summarizes the error column.
pub fn aggregate(records: &[TrialRecord]) -> Vec<AggregateRow> {
    let mut keys: Vec<(String, usize, usize, String)> = Vec::new();
    let mut groups: Vec<Vec<f64>> = Vec::new();
    for r in records {
        let key = (r.function.clone(), r.dim, r.t, r.method.clone());
        match keys.iter().position(|k| *k == key) {
            Some(i) => groups[i].push(r.error),
            None => {
                keys.push(key);
                groups.push(vec![r.error]);
            }
        }
    }
    keys.into_iter()
        .zip(groups)
        .map(|((function, dim, t, method), mut errs)| {
            errs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mean = errs.iter().sum::<f64>() / errs.len() as f64;
            AggregateRow {
                function,
                dim,
                t,
                method,
                trials: errs.len(),
                mean_error: mean,
                median_error: quantile_sorted(&errs, 0.5),
                q1_error: quantile_sorted(&errs, 0.25),
                q3_error: quantile_sorted(&errs, 0.75),
            }
        })
        .collect()
}

pub fn aggregate_to_csv(rows: &[AggregateRow]) -> String {
    let mut out = String::new();
    out.push_str(AGGREGATE_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.function,
            r.dim,
            r.t,
            r.method,
            r.trials,
            r.mean_error,
            r.median_error,
            r.q1_error,
            r.q3_error
        )
        .expect("string write");
    }
    out
}

pub fn aggregate_from_csv(text: &str) -> anyhow::Result<Vec<AggregateRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == AGGREGATE_HEADER => {}
        other => bail!("bad aggregate header: {other:?}"),
    }
    let mut out = Vec::new();
    for (n, line) in lines.enumerate() {
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 9 {
            bail!("line {}: expected 9 columns, got {}", n + 2, cols.len());
        }
        let ctx = || format!("line {}", n + 2);
        out.push(AggregateRow {
            function: cols[0].to_string(),
            dim: cols[1].parse().with_context(ctx)?,
            t: cols[2].parse().with_context(ctx)?,
            method: cols[3].to_string(),
            trials: cols[4].parse().with_context(ctx)?,
            mean_error: cols[5].parse().with_context(ctx)?,
            median_error: cols[6].parse().with_context(ctx)?,
            q1_error: cols[7].parse().with_context(ctx)?,
            q3_error: cols[8].parse().with_context(ctx)?,
        });
    }
    Ok(out)
}
