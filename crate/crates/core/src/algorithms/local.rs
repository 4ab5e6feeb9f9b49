//! Bounded quasi-Newton descent with finite-difference gradients.
//!
//! A projected BFGS iteration: variables sitting on a bound with the
//! gradient pushing outward are frozen for the step, the search direction
//! comes from an inverse-Hessian approximation, and trial points are
//! projected back into the box before an Armijo backtracking test. The
//! result never has a higher objective value than the starting point.

use crate::space::{Bounds, RealVector};

pub const DEFAULT_LOCAL_BUDGET: usize = 100;

const ARMIJO: f64 = 1e-4;
const MAX_BACKTRACKS: usize = 40;
const PG_TOL: f64 = 1e-10;
const REL_FTOL: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq)]
pub struct Refinement {
    pub position: RealVector,
    pub fitness: f64,
    /// Objective evaluations spent, including the one for the start point
    /// when it was not supplied.
    pub evaluations: usize,
}

/// Refines `x` (which must lie in `bounds`) using at most `budget` evaluations.
pub fn local_refine(
    x: &RealVector,
    objective: impl Fn(&[f64]) -> f64,
    bounds: &Bounds,
    budget: usize,
) -> Refinement {
    if budget == 0 {
        return Refinement {
            position: x.clone(),
            fitness: f64::NAN,
            evaluations: 0,
        };
    }
    let fx = objective(x);
    let mut r = refine_from(x, fx, objective, bounds, budget - 1);
    r.evaluations += 1;
    r
}

/// Like [`local_refine`] when `f(x)` is already known.
pub fn refine_from(
    x: &RealVector,
    fx: f64,
    objective: impl Fn(&[f64]) -> f64,
    bounds: &Bounds,
    budget: usize,
) -> Refinement {
    let mut search = Search {
        objective: &objective,
        bounds,
        budget,
        used: 0,
    };
    let (position, fitness) = match search.run(x.as_slice(), fx) {
        Some((p, f)) if f < fx && f.is_finite() && p.iter().all(|v| v.is_finite()) => {
            (RealVector::from_vec_unchecked(p), f)
        }
        _ => (x.clone(), fx),
    };
    Refinement {
        position,
        fitness,
        evaluations: search.used,
    }
}

struct Search<'a, F> {
    objective: &'a F,
    bounds: &'a Bounds,
    budget: usize,
    used: usize,
}

impl<F: Fn(&[f64]) -> f64> Search<'_, F> {
    fn remaining(&self) -> usize {
        self.budget - self.used
    }

    fn eval(&mut self, x: &[f64]) -> f64 {
        self.used += 1;
        (self.objective)(x)
    }

    /// Central differences, falling back to one-sided steps at a bound.
    fn gradient(&mut self, x: &[f64], fx: f64) -> Option<Vec<f64>> {
        let n = x.len();
        if self.remaining() < 2 * n {
            return None;
        }
        let mut g = vec![0.0; n];
        let mut probe = x.to_vec();
        for j in 0..n {
            let iv = self.bounds.intervals()[j];
            let h = 1e-6 * x[j].abs().max(1.0);
            let up = (x[j] + h).min(iv.high);
            let down = (x[j] - h).max(iv.low);
            probe[j] = up;
            let f_up = if up > x[j] { self.eval(&probe) } else { fx };
            probe[j] = down;
            let f_down = if down < x[j] { self.eval(&probe) } else { fx };
            probe[j] = x[j];
            let span = up - down;
            if span <= 0.0 {
                return None;
            }
            g[j] = (f_up - f_down) / span;
            if !g[j].is_finite() {
                return None;
            }
        }
        Some(g)
    }

    fn run(&mut self, start: &[f64], f_start: f64) -> Option<(Vec<f64>, f64)> {
        if !f_start.is_finite() {
            return None;
        }
        let n = start.len();
        let mut x = start.to_vec();
        let mut fx = f_start;
        let mut g = self.gradient(&x, fx)?;
        let mut h = identity(n);
        let mut fresh = true;

        loop {
            let free: Vec<bool> = (0..n)
                .map(|j| {
                    let iv = self.bounds.intervals()[j];
                    !((x[j] <= iv.low && g[j] > 0.0) || (x[j] >= iv.high && g[j] < 0.0))
                })
                .collect();
            let pg_norm = (0..n)
                .filter(|&j| free[j])
                .map(|j| g[j] * g[j])
                .sum::<f64>()
                .sqrt();
            if pg_norm < PG_TOL {
                break;
            }

            let mut d = mat_vec(&h, &g);
            for j in 0..n {
                d[j] = if free[j] { -d[j] } else { 0.0 };
            }
            if dot(&d, &g) >= 0.0 {
                h = identity(n);
                fresh = true;
                d = (0..n).map(|j| if free[j] { -g[j] } else { 0.0 }).collect();
            }

            // With no curvature information yet, cap the first step length.
            let mut alpha = if fresh {
                (1.0 / d.iter().fold(0.0_f64, |m, v| m.max(v.abs()))).min(1.0)
            } else {
                1.0
            };

            let mut accepted = None;
            for _ in 0..MAX_BACKTRACKS {
                if self.remaining() == 0 {
                    break;
                }
                let mut trial: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + alpha * b).collect();
                self.bounds.project_in_place(&mut trial);
                let step: Vec<f64> = trial.iter().zip(&x).map(|(a, b)| a - b).collect();
                if step.iter().all(|s| *s == 0.0) {
                    break;
                }
                let ft = self.eval(&trial);
                if ft.is_finite() && ft <= fx + ARMIJO * dot(&g, &step) && ft < fx {
                    accepted = Some((trial, ft, step));
                    break;
                }
                alpha *= 0.5;
            }

            let Some((x_new, f_new, s)) = accepted else {
                if fresh {
                    break;
                }
                h = identity(n);
                fresh = true;
                continue;
            };

            let f_old = fx;
            x = x_new;
            fx = f_new;
            if (f_old - fx) <= REL_FTOL * f_old.abs().max(fx.abs()).max(1.0) {
                break;
            }
            let Some(g_new) = self.gradient(&x, fx) else {
                break;
            };
            let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
            let sy = dot(&s, &y);
            if sy > 1e-12 * norm(&s) * norm(&y) {
                if fresh {
                    let scale = sy / dot(&y, &y);
                    h = identity(n);
                    h.iter_mut().for_each(|row| row.iter_mut().for_each(|v| *v *= scale));
                }
                bfgs_update(&mut h, &s, &y, sy);
                fresh = false;
            }
            g = g_new;
        }
        Some((x, fx))
    }
}

fn identity(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Inverse-Hessian BFGS update: H <- (I - r s y') H (I - r y s') + r s s'.
fn bfgs_update(h: &mut [Vec<f64>], s: &[f64], y: &[f64], sy: f64) {
    let n = s.len();
    let r = 1.0 / sy;
    let hy = mat_vec(h, y);
    let yhy = dot(y, &hy);
    for i in 0..n {
        for j in 0..n {
            h[i][j] += -r * (s[i] * hy[j] + hy[i] * s[j]) + (r * r * yhy + r) * s[i] * s[j];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::functions as f;

    fn v(x: &[f64]) -> RealVector {
        RealVector::new(x.to_vec()).unwrap()
    }

    #[test]
    fn optimum_is_a_fixed_point() {
        let b = Bounds::uniform(-5.12, 5.12, 2).unwrap();
        let r = local_refine(&v(&[0.0, 0.0]), f::rastrigin, &b, 100);
        assert_eq!(r.position.as_slice(), &[0.0, 0.0]);
        assert_eq!(r.fitness, 0.0);
    }

    #[test]
    fn sphere_converges_to_origin() {
        let b = Bounds::uniform(-10.0, 10.0, 2).unwrap();
        let r = local_refine(&v(&[3.0, 4.0]), f::sphere, &b, 100);
        assert!(r.position.iter().all(|c| c.abs() < 1e-6), "{:?}", r.position);
        assert!(r.evaluations <= 100);
    }

    #[test]
    fn booth_decreases_from_origin() {
        let b = Bounds::uniform(-10.0, 10.0, 2).unwrap();
        let r = local_refine(&v(&[0.0, 0.0]), f::booth, &b, 100);
        assert!(r.fitness < 74.0);
        assert!(r.fitness < 1e-6, "{}", r.fitness);
    }

    #[test]
    fn respects_active_bounds() {
        // Unconstrained minimum at (1, 3) is outside this box.
        let b = Bounds::new([(-10.0, 10.0), (-10.0, 2.0)]).unwrap();
        let r = local_refine(&v(&[0.0, 0.0]), f::booth, &b, 100);
        assert!(b.contains(&r.position));
        assert!(r.fitness < 74.0);
        assert!((r.position[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn budget_is_honored() {
        let b = Bounds::uniform(-5.0, 10.0, 2).unwrap();
        for budget in [1, 2, 5, 7, 30] {
            let r = local_refine(&v(&[-3.0, 8.0]), f::rosenbrock, &b, budget);
            assert!(r.evaluations <= budget, "{} > {budget}", r.evaluations);
        }
    }

    #[test]
    fn non_finite_objective_returns_input() {
        let b = Bounds::uniform(-1.0, 1.0, 2).unwrap();
        let r = local_refine(&v(&[0.5, 0.5]), |_| f64::NAN, &b, 50);
        assert_eq!(r.position.as_slice(), &[0.5, 0.5]);
    }
}
