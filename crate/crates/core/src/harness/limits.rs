//! Floating-point asymptotics for the discretization factors: each report
//! tracks a sequence of evaluations against the analytic limit over a grid
//! of N values. Products are accumulated in log space with sign tracking so
//! nothing overflows for N in the tens of thousands.

use std::collections::BTreeMap;

use serde::Serialize;
use statrs::function::gamma::ln_gamma;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LimitSample {
    pub n: u64,
    pub value: f64,
    pub err: f64,
}

/// Convergence record for one limit instance. `pass` requires the final
/// error within tolerance and non-increasing errors over the last three
/// sampled N.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LimitReport {
    pub limit: String,
    pub params: BTreeMap<String, String>,
    pub samples: Vec<LimitSample>,
    pub tol: f64,
    pub pass: bool,
}

impl LimitReport {
    fn assemble(
        limit: &str,
        params: BTreeMap<String, String>,
        samples: Vec<LimitSample>,
        tol: f64,
    ) -> Self {
        // Instances whose ratio is exact in float arithmetic leave only
        // accumulated rounding noise, which may drift upward with N; below
        // the noise floor an error counts as converged.
        const NOISE_FLOOR: f64 = 1e-9;
        let final_ok = samples.last().map(|s| s.err <= tol).unwrap_or(false);
        let tail = samples.iter().rev().take(3).collect::<Vec<_>>();
        let monotone = tail
            .windows(2)
            .all(|w| w[0].err <= w[1].err || w[0].err <= NOISE_FLOOR);
        LimitReport {
            limit: limit.to_string(),
            params,
            samples,
            tol,
            pass: final_ok && monotone,
        }
    }
}

/// `(top)_count / (bottom)_count` as a float, via log-magnitude sums with
/// sign tracking; exact zeros short-circuit.
fn pochhammer_ratio(top: f64, bottom: f64, count: u64) -> f64 {
    let mut log_mag = 0.0f64;
    let mut sign = 1.0f64;
    for j in 0..count {
        let (t, b) = (top + j as f64, bottom + j as f64);
        if t == 0.0 {
            return 0.0;
        }
        assert!(b != 0.0, "vanishing denominator factor at j = {j}");
        log_mag += t.abs().ln() - b.abs().ln();
        if t < 0.0 {
            sign = -sign;
        }
        if b < 0.0 {
            sign = -sign;
        }
    }
    sign * log_mag.exp()
}

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// Convergence of the discretized power `(1+n)_{N-n} / (a+n)_{N-n}` with
/// `n = round(tN)` to the limit `t^{a-1}`.
pub fn limit_disc_power(a: f64, t: f64, grid: &[u64], tol: f64) -> LimitReport {
    assert!(t > 0.0 && t < 1.0, "t must lie in (0, 1)");
    let target = t.powf(a - 1.0);
    let samples = grid
        .iter()
        .map(|&n_big| {
            let n = (t * n_big as f64).round() as u64;
            let value = pochhammer_ratio(1.0 + n as f64, a + n as f64, n_big - n);
            LimitSample { n: n_big, value, err: (value - target).abs() }
        })
        .collect();
    let params = BTreeMap::from([
        ("a".to_string(), fmt_f64(a)),
        ("t".to_string(), fmt_f64(t)),
        ("target".to_string(), fmt_f64(target)),
    ]);
    LimitReport::assemble("disc-power", params, samples, tol)
}

/// Convergence of the truncated binomial closed form
/// `(a + N/z - N)_N / (N/z - N)_N` to `(1-z)^{-a}` for `z < 1`, `z != 0`.
pub fn limit_t1f0(a: f64, z: f64, grid: &[u64], tol: f64) -> LimitReport {
    assert!(z < 1.0 && z != 0.0, "need z < 1 and z nonzero");
    let target = (1.0 - z).powf(-a);
    let samples = grid
        .iter()
        .map(|&n_big| {
            let w = n_big as f64 / z;
            let base = w - n_big as f64;
            let value = pochhammer_ratio(a + base, base, n_big);
            LimitSample { n: n_big, value, err: (value - target).abs() }
        })
        .collect();
    let params = BTreeMap::from([
        ("a".to_string(), fmt_f64(a)),
        ("z".to_string(), fmt_f64(z)),
        ("target".to_string(), fmt_f64(target)),
    ]);
    LimitReport::assemble("t1f0", params, samples, tol)
}

/// Convergence of the discretized beta sum
/// `(1/N) sum_n (1+n)_{N-n}/(a+n)_{N-n} (1+N-n)_n/(b+N-n)_n` to the beta
/// value `exp(lnGamma(a) + lnGamma(b) - lnGamma(a+b))`, for `a, b > 0`.
pub fn limit_aar_beta(a: f64, b: f64, grid: &[u64], tol: f64) -> LimitReport {
    assert!(a > 0.0 && b > 0.0, "need positive parameters");
    let target = (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp();
    let samples = grid
        .iter()
        .map(|&n_big| {
            let nf = n_big as f64;
            // Incremental term updates keep the whole sum O(N).
            let mut left = pochhammer_ratio(1.0, a, n_big);
            let mut right = 1.0f64;
            let mut sum = 0.0f64;
            for n in 0..=n_big {
                sum += left * right;
                let nf_n = n as f64;
                left *= (a + nf_n) / (1.0 + nf_n);
                right *= (nf - nf_n) / (b + nf - nf_n - 1.0);
            }
            let value = sum / nf;
            LimitSample { n: n_big, value, err: (value - target).abs() }
        })
        .collect();
    let params = BTreeMap::from([
        ("a".to_string(), fmt_f64(a)),
        ("b".to_string(), fmt_f64(b)),
        ("target".to_string(), fmt_f64(target)),
    ]);
    LimitReport::assemble("aar-beta", params, samples, tol)
}

/// Default grid for the limit suite.
pub const DEFAULT_GRID: [u64; 3] = [100, 1_000, 10_000];

/// Default tolerance at the largest grid point.
pub const DEFAULT_TOL: f64 = 1e-2;

/// The full limit suite over the default parameter sets.
pub fn run_limits(grid: &[u64], tol: f64) -> Vec<LimitReport> {
    let mut out = Vec::new();
    for (a, t) in [(1.0, 0.5), (2.0, 0.5), (0.5, 0.25), (1.5, 2.0 / 3.0)] {
        out.push(limit_disc_power(a, t, grid, tol));
    }
    for (a, z) in [(0.0, 0.5), (1.0, 0.5), (2.0, -1.0), (0.5, 1.0 / 3.0)] {
        out.push(limit_t1f0(a, z, grid, tol));
    }
    for (a, b) in [(1.0, 1.0), (2.0, 1.0), (0.5, 0.5)] {
        out.push(limit_aar_beta(a, b, grid, tol));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_parameter_is_exact() {
        let report = limit_disc_power(1.0, 0.5, &DEFAULT_GRID, DEFAULT_TOL);
        assert!(report.pass);
        assert!(report.samples.iter().all(|s| s.err == 0.0));

        let report = limit_t1f0(0.0, 0.5, &DEFAULT_GRID, DEFAULT_TOL);
        assert!(report.pass);
        assert!(report.samples.iter().all(|s| s.err == 0.0));
    }

    #[test]
    fn disc_power_converges() {
        let report = limit_disc_power(2.0, 0.5, &DEFAULT_GRID, DEFAULT_TOL);
        assert!(report.pass, "{report:?}");
        assert!(report.samples.last().unwrap().err <= 1e-2);

        let report = limit_disc_power(0.5, 0.25, &DEFAULT_GRID, DEFAULT_TOL);
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn t1f0_converges_for_negative_argument() {
        let report = limit_t1f0(2.0, -1.0, &DEFAULT_GRID, DEFAULT_TOL);
        assert!(report.pass, "{report:?}");
        let last = report.samples.last().unwrap();
        assert!((last.value - 0.25).abs() <= 1e-2);
    }

    #[test]
    fn beta_sum_converges() {
        let report = limit_aar_beta(1.0, 1.0, &[1_000], DEFAULT_TOL);
        assert!((report.samples[0].value - 1.0).abs() <= 1e-2);

        let report = limit_aar_beta(2.0, 1.0, &DEFAULT_GRID, DEFAULT_TOL);
        assert!(report.pass, "{report:?}");
        assert!((report.samples.last().unwrap().value - 0.5).abs() <= 1e-2);

        let report = limit_aar_beta(0.5, 0.5, &DEFAULT_GRID, DEFAULT_TOL);
        assert!(report.pass, "{report:?}");
        assert!((report.samples.last().unwrap().value - std::f64::consts::PI).abs() <= 1e-2);
    }

    #[test]
    fn full_suite_passes_defaults() {
        let reports = run_limits(&DEFAULT_GRID, DEFAULT_TOL);
        assert_eq!(reports.len(), 11);
        for r in &reports {
            assert!(r.pass, "{} {:?} failed", r.limit, r.params);
        }
    }
}
