//! Numerical exploration of the extremal-density conjecture: minimize
//! P(0 < X < delta) over piecewise-linear concave log-densities on a fixed
//! grid, standardized implicitly to mean 0, variance 1.
//!
//! Concavity is enforced by construction: cell slopes are parameterized as
//! an initial slope minus cumulative nonnegative decrements, so every
//! candidate is feasible and the optimizer works in an unconstrained
//! orthant with a monotone pattern search.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A piecewise-linear log-density on n+1 uniform knots over [-a, b];
/// the density is exp(phi) inside and 0 outside.
#[derive(Debug, Clone)]
pub struct ConcaveLogDensity {
    pub a: f64,
    pub b: f64,
    /// Log-density at the knots, unnormalized.
    pub values: Vec<f64>,
}

impl ConcaveLogDensity {
    pub fn n_cells(&self) -> usize {
        self.values.len() - 1
    }

    pub fn dx(&self) -> f64 {
        (self.b + self.a) / self.n_cells() as f64
    }

    pub fn knot(&self, i: usize) -> f64 {
        -self.a + i as f64 * self.dx()
    }

    /// Builds knot values from an initial slope and nonnegative slope
    /// decrements (one per interior knot); phi(knot 0) = 0.
    pub fn from_slopes(a: f64, b: f64, s1: f64, decrements: &[f64]) -> Self {
        let n = decrements.len() + 1;
        let dx = (b + a) / n as f64;
        let mut values = vec![0.0];
        let mut slope = s1;
        for i in 0..n {
            if i > 0 {
                slope -= decrements[i - 1].max(0.0);
            }
            values.push(values[i] + slope * dx);
        }
        ConcaveLogDensity { a, b, values }
    }

    /// Largest violation of the second-difference concavity constraints
    /// (0 for feasible candidates, up to rounding).
    pub fn concavity_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 1..self.values.len() - 1 {
            let second = self.values[i - 1] - 2.0 * self.values[i] + self.values[i + 1];
            worst = worst.max(second);
        }
        worst
    }
}

/// Exact cell integrals of t^k e^{s t} over [0, L] for k = 0, 1, 2; series
/// form near s = 0 keeps them stable.
fn cell_integrals(s: f64, l: f64) -> (f64, f64, f64) {
    let z = s * l;
    if z.abs() < 0.1 {
        // series sum_m z^m / (m! (m+k+1)); the closed forms below lose
        // up to 1/z^2 of their precision to cancellation for small z
        let mut i0 = 0.0;
        let mut i1 = 0.0;
        let mut i2 = 0.0;
        let mut zm_over_mfact = 1.0;
        for m in 0..=9u32 {
            if m > 0 {
                zm_over_mfact *= z / m as f64;
            }
            i0 += zm_over_mfact / (m + 1) as f64;
            i1 += zm_over_mfact / (m + 2) as f64;
            i2 += zm_over_mfact / (m + 3) as f64;
        }
        (l * i0, l * l * i1, l * l * l * i2)
    } else {
        let e = z.exp();
        let i0 = l * z.exp_m1() / z;
        let i1 = (l * e) / s - i0 / s;
        let i2 = (l * l * e) / s - 2.0 * i1 / s;
        (i0, i1, i2)
    }
}

/// (mass, mean, second moment) of the unnormalized density, by exact
/// closed forms on each log-linear cell.
pub fn density_moments(d: &ConcaveLogDensity) -> (f64, f64, f64) {
    let dx = d.dx();
    let (mut mass, mut m1, mut m2) = (0.0, 0.0, 0.0);
    for i in 0..d.n_cells() {
        let x1 = d.knot(i);
        let s = (d.values[i + 1] - d.values[i]) / dx;
        let w = d.values[i].exp();
        if w == 0.0 {
            continue;
        }
        let (i0, i1, i2) = cell_integrals(s, dx);
        mass += w * i0;
        m1 += w * (x1 * i0 + i1);
        m2 += w * (x1 * x1 * i0 + 2.0 * x1 * i1 + i2);
    }
    let mean = m1 / mass;
    (mass, mean, m2 / mass)
}

/// Unnormalized cdf at x, from the same closed forms.
fn cdf_unnormalized(d: &ConcaveLogDensity, x: f64) -> f64 {
    let dx = d.dx();
    if x <= -d.a {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..d.n_cells() {
        let x1 = d.knot(i);
        let x2 = x1 + dx;
        if x <= x1 {
            break;
        }
        let s = (d.values[i + 1] - d.values[i]) / dx;
        let w = d.values[i].exp();
        let upto = if x >= x2 { dx } else { x - x1 };
        let (i0, _, _) = cell_integrals(s, upto);
        acc += w * i0;
    }
    acc
}

/// P(0 < X_std < delta) for the standardized member induced by `d`.
pub fn objective(d: &ConcaveLogDensity, delta: f64) -> Result<f64, String> {
    let (mass, mean, m2) = density_moments(d);
    if !(mass > 0.0) || !mass.is_finite() {
        return Err("degenerate density: nonpositive or infinite mass".into());
    }
    let var = m2 - mean * mean;
    if !(var > 0.0) {
        return Err("degenerate density: zero variance".into());
    }
    let sigma = var.sqrt();
    Ok((cdf_unnormalized(d, mean + sigma * delta) - cdf_unnormalized(d, mean)) / mass)
}

#[derive(Debug, Clone)]
pub struct ExplorerConfig {
    pub delta: f64,
    pub knots: usize,
    pub a: f64,
    pub b: f64,
    pub restarts: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_iters: usize,
}

impl ExplorerConfig {
    pub fn new(delta: f64, knots: usize, a: f64, b: f64, restarts: usize, seed: u64) -> Result<Self, String> {
        if !(delta > 0.0) {
            return Err("delta must be positive".into());
        }
        if knots < 8 {
            return Err("knot count must be at least 8".into());
        }
        if a < 6.0 || b < 6.0 {
            return Err("support half-extents must be at least 6".into());
        }
        if restarts == 0 {
            return Err("at least one restart required".into());
        }
        Ok(ExplorerConfig {
            delta,
            knots,
            a,
            b,
            restarts,
            seed,
            tol: 1e-7,
            max_iters: 400,
        })
    }
}

#[derive(Debug, Clone)]
pub struct RestartTrace {
    pub index: usize,
    pub start_objective: f64,
    pub final_objective: f64,
    pub sweeps: usize,
}

#[derive(Debug, Clone)]
pub struct ExplorerResult {
    pub config: ExplorerConfig,
    pub best: f64,
    pub density: ConcaveLogDensity,
    pub mu: f64,
    pub sigma: f64,
    pub traces: Vec<RestartTrace>,
    pub p_floor: f64,
    pub conjectured: f64,
    /// Objective of the deterministic exponential-shaped start (upper anchor).
    pub anchor: f64,
}

/// Slope parameters of the exponential-shaped start: steep rise up to the
/// knot nearest -1, then constant slope -1 (the conjectured optimum's
/// log-density shape, truncated).
fn exponential_start(cfg: &ExplorerConfig) -> (f64, Vec<f64>) {
    let n = cfg.knots;
    let dx = (cfg.b + cfg.a) / n as f64;
    let mut decs = vec![0.0; n - 1];
    let rise = 30.0;
    // index of the first interior knot at or beyond -1
    let kink = (((-1.0 + cfg.a) / dx).round() as usize).clamp(1, n - 1);
    decs[kink - 1] = rise + 1.0;
    (rise, decs)
}

fn gaussian_start(cfg: &ExplorerConfig) -> (f64, Vec<f64>) {
    let n = cfg.knots;
    let dx = (cfg.b + cfg.a) / n as f64;
    // phi = -x^2/2: slope at the first cell midpoint, then constant decrement
    let first_mid = -cfg.a + 0.5 * dx;
    (-first_mid, vec![dx; n - 1])
}

fn build(cfg: &ExplorerConfig, s1: f64, decs: &[f64]) -> ConcaveLogDensity {
    ConcaveLogDensity::from_slopes(cfg.a, cfg.b, s1, decs)
}

/// Monotone coordinate pattern search over (s1, decrements >= 0); steps
/// are accepted only on strict improvement, so the objective trace is
/// nonincreasing.
fn local_search(
    cfg: &ExplorerConfig,
    mut s1: f64,
    mut decs: Vec<f64>,
) -> (f64, f64, Vec<f64>, usize) {
    let eval = |s1: f64, decs: &[f64]| -> f64 {
        objective(&build(cfg, s1, decs), cfg.delta).unwrap_or(f64::INFINITY)
    };
    let mut best = eval(s1, &decs);
    let mut step = 0.5;
    let mut sweeps = 0;
    while step > cfg.tol && sweeps < cfg.max_iters {
        let mut improved = false;
        for k in 0..=decs.len() {
            for dir in [step, -step] {
                let (cand_s1, cand_decs);
                if k == 0 {
                    cand_s1 = s1 + dir;
                    cand_decs = decs.clone();
                } else {
                    let mut d = decs.clone();
                    d[k - 1] = (d[k - 1] + dir).max(0.0);
                    if d[k - 1] == decs[k - 1] {
                        continue;
                    }
                    cand_s1 = s1;
                    cand_decs = d;
                }
                let v = eval(cand_s1, &cand_decs);
                if v < best {
                    best = v;
                    s1 = cand_s1;
                    decs = cand_decs;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
        sweeps += 1;
    }
    (best, s1, decs, sweeps)
}

pub fn minimize(cfg: &ExplorerConfig) -> Result<ExplorerResult, String> {
    let p_floor = crate::distributions::p_of(cfg.delta);
    let conjectured = (1.0f64).exp().recip() * (1.0 - (-cfg.delta).exp());

    let mut starts: Vec<(f64, Vec<f64>)> = vec![exponential_start(cfg)];
    if cfg.restarts > 1 {
        starts.push(gaussian_start(cfg));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    while starts.len() < cfg.restarts {
        let s1: f64 = rng.gen_range(0.0..3.0);
        let decs: Vec<f64> = (0..cfg.knots - 1)
            .map(|_| {
                let r: f64 = rng.gen_range(0.0..1.0);
                0.3 * r * r
            })
            .collect();
        starts.push((s1, decs));
    }

    let anchor = {
        let (s1, decs) = exponential_start(cfg);
        objective(&build(cfg, s1, &decs), cfg.delta)?
    };

    let mut traces = Vec::new();
    let mut best: Option<(f64, f64, Vec<f64>)> = None;
    for (index, (s1, decs)) in starts.into_iter().enumerate() {
        let start_objective = objective(&build(cfg, s1, &decs), cfg.delta)?;
        let (v, fs1, fdecs, sweeps) = local_search(cfg, s1, decs);
        traces.push(RestartTrace {
            index,
            start_objective,
            final_objective: v,
            sweeps,
        });
        let better = match &best {
            None => true,
            Some((bv, _, _)) => v < *bv,
        };
        if better {
            best = Some((v, fs1, fdecs));
        }
    }
    let (best_v, s1, decs) = best.ok_or("no restart converged")?;

    if best_v < p_floor {
        return Err(format!(
            "objective {best_v} fell below the proven floor p(delta) = {p_floor}; this indicates a bug"
        ));
    }

    let density = build(cfg, s1, &decs);
    let (mass, mean, m2) = density_moments(&density);
    let sigma = (m2 - mean * mean).sqrt();
    let _ = mass;
    Ok(ExplorerResult {
        config: cfg.clone(),
        best: best_v,
        density,
        mu: mean,
        sigma,
        traces,
        p_floor,
        conjectured,
        anchor,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    CounterexampleCandidate,
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub gap: f64,
    pub verdict: Verdict,
}

/// Gap of the best value against the conjectured minimum; strongly
/// negative gaps flag a counterexample candidate.
pub fn compare_to_conjecture(res: &ExplorerResult) -> ConjectureReport {
    let gap = res.best - res.conjectured;
    let verdict = if gap >= -1e-3 {
        Verdict::Consistent
    } else {
        Verdict::CounterexampleCandidate
    };
    ConjectureReport { gap, verdict }
}
