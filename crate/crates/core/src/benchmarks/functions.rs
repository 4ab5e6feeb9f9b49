//! Objective formulas. Two-argument functions read `x[0]` and `x[1]` only.

use std::f64::consts::{E, PI};

pub fn sphere(x: &[f64]) -> f64 {
    x[0] * x[0] + x[1] * x[1]
}

/// `sin(x0) + cos(x1)`; extra coordinates are ignored.
pub fn sinusoidal(x: &[f64]) -> f64 {
    x[0].sin() + x[1].cos()
}

/// `sin(x0) + sin(x1)`; extra coordinates are ignored.
pub fn sinusoidal_alt(x: &[f64]) -> f64 {
    x[0].sin() + x[1].sin()
}

/// Ackley with a = 20, b = 0.2, c = 2π.
pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    -20.0 * (-0.2 * (sum_sq / n).sqrt()).exp() - (sum_cos / n).exp() + 20.0 + E
}

pub fn bukin_n6(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    100.0 * (b - 0.01 * a * a).abs().sqrt() + 0.01 * (a + 10.0).abs()
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

pub fn cross_in_tray(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let expo = (100.0 - (a * a + b * b).sqrt() / PI).abs();
    -0.0001 * ((a.sin() * b.sin() * expo.exp()).abs() + 1.0).powf(0.1)
}

/// Levy N.13.
pub fn levy_n13(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let s = |v: f64| v.sin() * v.sin();
    s(3.0 * PI * a)
        + (a - 1.0).powi(2) * (1.0 + s(3.0 * PI * b))
        + (b - 1.0).powi(2) * (1.0 + s(2.0 * PI * b))
}

pub fn eggholder(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -(b + 47.0) * (b + a / 2.0 + 47.0).abs().sqrt().sin() - a * (a - (b + 47.0)).abs().sqrt().sin()
}

pub fn schaffer_n2(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let s = (a * a - b * b).sin();
    let d = 1.0 + 0.001 * (a * a + b * b);
    0.5 + (s * s - 0.5) / (d * d)
}

/// Two-dimensional Schwefel with the rounded constant 418.9829.
pub fn schwefel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    418.9829 * 2.0 - a * a.abs().sqrt().sin() - b * b.abs().sqrt().sin()
}

pub fn shubert(x: &[f64]) -> f64 {
    let factor = |v: f64| {
        (1..=5)
            .map(|i| {
                let i = i as f64;
                i * ((i + 1.0) * v + i).cos()
            })
            .sum::<f64>()
    };
    factor(x[0]) * factor(x[1])
}

pub fn drop_wave(x: &[f64]) -> f64 {
    let r2 = x[0] * x[0] + x[1] * x[1];
    -(1.0 + (12.0 * r2.sqrt()).cos()) / (0.5 * r2 + 2.0)
}

pub fn himmelblau(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (a * a + b - 11.0).powi(2) + (a + b * b - 7.0).powi(2)
}

pub fn booth(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (a + 2.0 * b - 7.0).powi(2) + (2.0 * a + b - 5.0).powi(2)
}

pub fn matyas(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    0.26 * (a * a + b * b) - 0.48 * a * b
}

pub fn mccormick(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (a + b).sin() + (a - b).powi(2) - 1.5 * a + 2.5 * b + 1.0
}

pub fn three_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    2.0 * a * a - 1.05 * a.powi(4) + a.powi(6) / 6.0 + a * b + b * b
}

pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (4.0 - 2.1 * a * a + a.powi(4) / 3.0) * a * a + a * b + (-4.0 + 4.0 * b * b) * b * b
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

pub fn dixon_price(x: &[f64]) -> f64 {
    let head = (x[0] - 1.0).powi(2);
    head + x
        .windows(2)
        .enumerate()
        .map(|(k, w)| (k + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2))
        .sum::<f64>()
}

pub fn beale(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (1.5 - a + a * b).powi(2) + (2.25 - a + a * b * b).powi(2) + (2.625 - a + a * b.powi(3)).powi(2)
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let first = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let second = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    first * second
}

fn forrester_1d(v: f64) -> f64 {
    (6.0 * v - 2.0).powi(2) * (12.0 * v - 4.0).sin()
}

/// Separable sum of the one-dimensional Forrester function over both coordinates.
pub fn forrester(x: &[f64]) -> f64 {
    forrester_1d(x[0]) + forrester_1d(x[1])
}

const DVG02_SAMPLES: usize = 24;

/// Parameters that generate the DeVilliers-Glasser 02 targets.
pub const DVG02_TRUE_PARAMS: [f64; 5] = [53.81, 1.27, 3.012, 2.13, 0.507];

fn dvg02_model(p: &[f64], t: f64) -> f64 {
    p[0] * p[1].powf(t) * (p[2] * t + (p[3] * t).sin()).tanh() * (t * p[4].exp()).cos()
}

/// Least-squares residual of a five-parameter damped oscillation fit,
/// sampled at t = 0.0, 0.1, ..., 2.3.
pub fn devilliers_glasser_02(x: &[f64]) -> f64 {
    (0..DVG02_SAMPLES)
        .map(|i| {
            let t = 0.1 * i as f64;
            let r = dvg02_model(x, t) - dvg02_model(&DVG02_TRUE_PARAMS, t);
            r * r
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn booth_at_origin_is_74() {
        assert_eq!(booth(&[0.0, 0.0]), 74.0);
    }

    #[test]
    fn forrester_components_add() {
        let v = forrester(&[0.2, 0.9]);
        assert_eq!(v, forrester_1d(0.2) + forrester_1d(0.9));
    }

    #[test]
    fn sinusoidal_ignores_extra_coordinates() {
        assert_eq!(sinusoidal(&[1.0, 2.0]), sinusoidal(&[1.0, 2.0, 300.0, -7.0]));
    }
}
