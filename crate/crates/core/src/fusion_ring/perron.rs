//! Power iteration for the Perron root of a nonnegative matrix.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PerronError {
    #[error("power iteration did not converge within {iterations} iterations (last change {last_delta:e})")]
    NoConvergence { iterations: usize, last_delta: f64 },
    #[error("starting vector must be strictly positive")]
    BadStart,
    #[error("matrix annihilates the iterate; no positive eigenvector reachable")]
    Annihilated,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerronOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PerronOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerronResult {
    pub eigenvalue: f64,
    /// Eigenvector normalized to unit ℓ¹ norm.
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// Diagonal shift the converged run used (0 unless the plain iteration oscillated).
    pub shift: f64,
}

/// An unshifted run that fails to cut its step size by 5% over this many
/// iterations is declared oscillating.
const OSCILLATION_WINDOW: usize = 64;
/// Iterations without a new minimum after which a run at tolerance level stops.
const STAGNATION_WINDOW: usize = 200;

/// Largest nonnegative eigenvalue and eigenvector of `a` (rows act on column
/// vectors), starting from the strictly positive vector `start`.
///
/// Runs unshifted first. A periodic matrix makes the plain iteration cycle,
/// so when no progress is seen over a window the run restarts on `a + I`,
/// whose only eigenvalue of maximal modulus is the shifted Perron root.
pub fn perron(a: &[Vec<f64>], start: &[f64], opts: &PerronOptions) -> Result<PerronResult, PerronError> {
    if start.len() != a.len() || start.iter().any(|&x| x.is_nan() || x <= 0.0) {
        return Err(PerronError::BadStart);
    }
    match run(a, start, 0.0, opts, true) {
        Ok(r) => Ok(r),
        Err(Attempt::Oscillating) => match run(a, start, 1.0, opts, false) {
            Ok(r) => Ok(r),
            Err(Attempt::Failed(e)) => Err(e),
            Err(Attempt::Oscillating) => unreachable!("shifted run never reports oscillation"),
        },
        Err(Attempt::Failed(e)) => Err(e),
    }
}

enum Attempt {
    Oscillating,
    Failed(PerronError),
}

fn run(a: &[Vec<f64>], start: &[f64], shift: f64, opts: &PerronOptions, watch: bool) -> Result<PerronResult, Attempt> {
    let n = a.len();
    let norm1 = |v: &[f64]| v.iter().map(|x| x.abs()).sum::<f64>();
    let s = norm1(start);
    let mut v: Vec<f64> = start.iter().map(|x| x / s).collect();
    let target = (opts.tolerance * 1e-3).max(f64::EPSILON * 8.0);
    let mut best = f64::INFINITY;
    let mut best_at = 0;
    let mut history: Vec<f64> = Vec::new();
    let mut delta = f64::INFINITY;

    for it in 1..=opts.max_iterations {
        let w: Vec<f64> = (0..n)
            .map(|i| a[i].iter().zip(&v).map(|(x, y)| x * y).sum::<f64>() + shift * v[i])
            .collect();
        let wn = norm1(&w);
        if wn == 0.0 || !wn.is_finite() {
            return Err(if watch {
                Attempt::Oscillating
            } else {
                Attempt::Failed(PerronError::Annihilated)
            });
        }
        let lambda = wn - shift;
        let next: Vec<f64> = w.iter().map(|x| x / wn).collect();
        delta = next.iter().zip(&v).map(|(x, y)| (x - y).abs()).sum::<f64>();
        v = next;

        if delta <= target {
            return Ok(finish(lambda, v, it, shift));
        }
        if delta < best {
            best = delta;
            best_at = it;
        } else if best <= opts.tolerance && it - best_at > STAGNATION_WINDOW {
            return Ok(finish(lambda, v, it, shift));
        }
        if watch {
            history.push(delta);
            if it >= OSCILLATION_WINDOW && delta >= 0.95 * history[it - OSCILLATION_WINDOW] {
                return Err(Attempt::Oscillating);
            }
        }
    }
    Err(Attempt::Failed(PerronError::NoConvergence {
        iterations: opts.max_iterations,
        last_delta: delta,
    }))
}

fn finish(lambda: f64, v: Vec<f64>, iterations: usize, shift: f64) -> PerronResult {
    PerronResult {
        eigenvalue: lambda,
        vector: v,
        iterations,
        shift,
    }
}
