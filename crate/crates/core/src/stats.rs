//! Descriptive statistics, Welch's unequal-variance t-test and success rates.

use serde::{Deserialize, Serialize};

use crate::algorithms::RunResult;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator); 0 for a single value.
    pub std_dev: f64,
}

impl SampleSummary {
    pub fn variance(&self) -> f64 {
        self.std_dev * self.std_dev
    }
}

pub fn summarize(samples: &[f64]) -> Result<SampleSummary> {
    if samples.is_empty() {
        return Err(Error::InvalidInput("cannot summarize an empty sample".into()));
    }
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    let std_dev = if n == 1 {
        0.0
    } else {
        (samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1) as f64).sqrt()
    };
    Ok(SampleSummary { n, mean, std_dev })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TTestResult {
    /// `(mean(a) - mean(b)) / se`; infinite when both samples are constant and differ.
    #[serde(with = "crate::harness::float_repr")]
    pub t_statistic: f64,
    /// Two-tailed.
    pub p_value: f64,
    pub degrees_of_freedom: f64,
}

/// Welch's t-test with Welch-Satterthwaite degrees of freedom.
///
/// When both samples have zero variance the test degenerates: equal means
/// give `t = 0, p = 1`, unequal means give `t = ±inf, p = 0`, and the
/// degrees of freedom fall back to `n_a + n_b - 2`.
pub fn welch_t_test(a: &[f64], b: &[f64]) -> Result<TTestResult> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "Welch's t-test needs at least 2 values per sample, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let (sa, sb) = (summarize(a)?, summarize(b)?);
    let (na, nb) = (sa.n as f64, sb.n as f64);
    let (qa, qb) = (sa.variance() / na, sb.variance() / nb);
    let diff = sa.mean - sb.mean;
    let se2 = qa + qb;

    if se2 == 0.0 {
        let df = na + nb - 2.0;
        return Ok(if diff == 0.0 {
            TTestResult { t_statistic: 0.0, p_value: 1.0, degrees_of_freedom: df }
        } else {
            TTestResult {
                t_statistic: f64::INFINITY.copysign(diff),
                p_value: 0.0,
                degrees_of_freedom: df,
            }
        });
    }

    let t = diff / se2.sqrt();
    let df = se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
    Ok(TTestResult {
        t_statistic: t,
        p_value: student_t_two_tailed(t, df),
        degrees_of_freedom: df,
    })
}

/// Two-tailed p-value `P(|T| >= |t|)` for Student's t with `df` degrees of freedom.
pub fn student_t_two_tailed(t: f64, df: f64) -> f64 {
    if t.is_infinite() {
        return 0.0;
    }
    if t == 0.0 {
        return 1.0;
    }
    let x = df / (df + t * t);
    regularized_incomplete_beta(0.5 * df, 0.5, x).clamp(0.0, 1.0)
}

/// Paper-style marker: `***` for p < 0.01, `**` for p < 0.05.
pub fn significance_marker(p_value: f64) -> &'static str {
    if p_value < 0.01 {
        "***"
    } else if p_value < 0.05 {
        "**"
    } else {
        ""
    }
}

/// Fraction of runs whose best fitness is within `tolerance` of `target`.
pub fn success_rate(results: &[RunResult], target: f64, tolerance: f64) -> Result<f64> {
    let values: Vec<f64> = results.iter().map(|r| r.best_fitness).collect();
    fraction_within(&values, target, tolerance)
}

pub fn fraction_within(values: &[f64], target: f64, tolerance: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::InvalidInput("success rate of an empty result set".into()));
    }
    if !(tolerance > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tolerance}")));
    }
    let hits = values.iter().filter(|v| (*v - target).abs() <= tolerance).count();
    Ok(hits as f64 / values.len() as f64)
}

/// ln Γ(x) for x > 0 (Lanczos, g = 7, n = 9).
pub fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // Reflection.
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Regularized incomplete beta I_x(a, b), continued fraction (modified Lentz).
pub fn regularized_incomplete_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    // The fraction converges fast for x < (a + 1) / (a + b + 2); otherwise use symmetry.
    if x < (a + 1.0) / (a + b + 2.0) {
        ln_front.exp() * beta_continued_fraction(a, b, x) / a
    } else {
        1.0 - ln_front.exp() * beta_continued_fraction(b, a, 1.0 - x) / b
    }
}

fn beta_continued_fraction(a: f64, b: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    let (qab, qap, qam) = (a + b, a + 1.0, a - 1.0);
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=500 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn summarize_examples() {
        let s = summarize(&[5.0, 5.0, 5.0]).unwrap();
        assert_eq!((s.mean, s.std_dev), (5.0, 0.0));
        let s = summarize(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(s.mean, 2.5);
        // sqrt(5/3) by hand.
        assert_relative_eq!(s.std_dev, 1.290_994_448_735_805_6, epsilon = 1e-12);
        let s = summarize(&[7.0]).unwrap();
        assert_eq!((s.n, s.mean, s.std_dev), (1, 7.0, 0.0));
        assert!(summarize(&[]).is_err());
    }

    #[test]
    fn welch_degenerate_cases() {
        let r = welch_t_test(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!((r.t_statistic, r.p_value), (0.0, 1.0));
        let r = welch_t_test(&[0.0, 0.0, 0.0], &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!((r.t_statistic, r.p_value), (f64::NEG_INFINITY, 0.0));
        let r = welch_t_test(&[5.0, 5.0], &[5.0, 5.0]).unwrap();
        assert_eq!((r.t_statistic, r.p_value), (0.0, 1.0));
        assert!(welch_t_test(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn ln_gamma_known_values() {
        assert_relative_eq!(ln_gamma(1.0), 0.0, epsilon = 1e-14);
        assert_relative_eq!(ln_gamma(0.5), std::f64::consts::PI.sqrt().ln(), epsilon = 1e-14);
        assert_relative_eq!(ln_gamma(10.0), (362_880.0_f64).ln(), epsilon = 1e-12);
    }

    #[test]
    fn t_tail_closed_forms() {
        // df = 1 is Cauchy: p = 1 - 2 atan(|t|) / pi.
        for t in [0.1_f64, 1.0, 3.0, 40.0] {
            let exact = 1.0 - 2.0 * f64::atan(t) / std::f64::consts::PI;
            assert_relative_eq!(student_t_two_tailed(t, 1.0), exact, epsilon = 1e-13);
        }
        // df = 2: p = 1 - |t| / sqrt(2 + t^2).
        for t in [0.2_f64, 1.5, 7.0] {
            let exact = 1.0 - t / (2.0 + t * t).sqrt();
            assert_relative_eq!(student_t_two_tailed(t, 2.0), exact, epsilon = 1e-13);
        }
    }

    #[test]
    fn markers() {
        assert_eq!(significance_marker(0.001), "***");
        assert_eq!(significance_marker(0.03), "**");
        assert_eq!(significance_marker(0.2), "");
    }

    #[test]
    fn fraction_examples() {
        assert_eq!(fraction_within(&[0.0; 4], 0.0, 1e-3).unwrap(), 1.0);
        assert_eq!(fraction_within(&[1.0, 2.0], 0.0, 1e-3).unwrap(), 0.0);
        let v: Vec<f64> = (0..10).map(|i| if i < 7 { 1e-4 } else { 1.0 }).collect();
        assert_eq!(fraction_within(&v, 0.0, 1e-3).unwrap(), 0.7);
        assert!(fraction_within(&[], 0.0, 1e-3).is_err());
    }
}
