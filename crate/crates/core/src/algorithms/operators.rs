//! Rate schedules and variation operators shared by both optimizers.

use crate::error::{Error, Result};
use crate::population::{Individual, MIN_POPULATION};
use crate::rng::RngStream;
use crate::space::{Bounds, RealVector};

fn check_schedule(generation: usize, max_generations: usize) -> Result<f64> {
    if max_generations == 0 {
        return Err(Error::InvalidInput("max_generations must be positive".into()));
    }
    if generation > max_generations {
        return Err(Error::InvalidInput(format!(
            "generation {generation} exceeds max_generations {max_generations}"
        )));
    }
    Ok(generation as f64 / max_generations as f64)
}

/// Mutation scale decaying linearly from `initial` at generation 0 to 0 at `max_generations`.
pub fn adaptive_mutation_rate(generation: usize, max_generations: usize, initial: f64) -> Result<f64> {
    let progress = check_schedule(generation, max_generations)?;
    Ok(initial * (1.0 - progress))
}

/// Crossover rate ramping linearly from 0 at generation 0 to `initial` at `max_generations`.
pub fn adaptive_crossover_rate(generation: usize, max_generations: usize, initial: f64) -> Result<f64> {
    let progress = check_schedule(generation, max_generations)?;
    Ok(initial * progress)
}

/// rand/1 donor: `x_r1 + F (x_r2 - x_r3)` with r1, r2, r3 distinct from
/// each other and from `target`, projected onto `bounds`.
pub fn de_mutation(
    members: &[Individual],
    target: usize,
    factor: f64,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Result<RealVector> {
    let n = members.len();
    if n < MIN_POPULATION {
        return Err(Error::InvalidConfiguration(format!(
            "rand/1 mutation needs at least {MIN_POPULATION} members, got {n}"
        )));
    }
    if target >= n {
        return Err(Error::InvalidInput(format!("target index {target} out of range")));
    }
    let r1 = rng.index_excluding(n, &[target]);
    let r2 = rng.index_excluding(n, &[target, r1]);
    let r3 = rng.index_excluding(n, &[target, r1, r2]);
    let (a, b, c) = (&members[r1].position, &members[r2].position, &members[r3].position);
    let mut v: Vec<f64> = a
        .iter()
        .zip(b.iter().zip(c.iter()))
        .map(|(a, (b, c))| a + factor * (b - c))
        .collect();
    bounds.project_in_place(&mut v);
    Ok(RealVector::from_vec_unchecked(v))
}

/// Per-component Bernoulli(`rate`) choice between `trial` and `target`.
///
/// One uniform draw is consumed per component regardless of `rate`. There is
/// no forced trial component, so `rate = 0` returns `target` unchanged.
pub fn binomial_crossover(
    target: &RealVector,
    trial: &RealVector,
    rate: f64,
    rng: &mut RngStream,
) -> Result<RealVector> {
    if target.dimension() != trial.dimension() {
        return Err(Error::InvalidInput(format!(
            "crossover dimension mismatch: {} vs {}",
            target.dimension(),
            trial.dimension()
        )));
    }
    if !(0.0..=1.0).contains(&rate) {
        return Err(Error::InvalidInput(format!("crossover rate {rate} outside [0, 1]")));
    }
    let u = target
        .iter()
        .zip(trial.iter())
        .map(|(&x, &v)| if rng.unit() < rate { v } else { x })
        .collect();
    Ok(RealVector::from_vec_unchecked(u))
}

/// Neighbor-attraction trial `x_i + F (n1 - x_i) + F (n2 - x_i)`.
///
/// The two neighbors are distinct from each other but either may be the
/// target itself. The result is projected onto `bounds`.
pub fn adeds_trial(
    members: &[Individual],
    index: usize,
    factor: f64,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Result<RealVector> {
    let n = members.len();
    if n < 3 {
        return Err(Error::InvalidConfiguration(format!(
            "neighbor trial needs at least 3 members, got {n}"
        )));
    }
    if index >= n {
        return Err(Error::InvalidInput(format!("index {index} out of range")));
    }
    let k1 = rng.index(n);
    let k2 = rng.index_excluding(n, &[k1]);
    let x = &members[index].position;
    let (n1, n2) = (&members[k1].position, &members[k2].position);
    let mut v: Vec<f64> = x
        .iter()
        .zip(n1.iter().zip(n2.iter()))
        .map(|(&xi, (&a, &b))| xi + factor * (a - xi) + factor * (b - xi))
        .collect();
    bounds.project_in_place(&mut v);
    Ok(RealVector::from_vec_unchecked(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ind(x: &[f64]) -> Individual {
        Individual {
            position: RealVector::new(x.to_vec()).unwrap(),
            fitness: 0.0,
        }
    }

    fn wide() -> Bounds {
        Bounds::uniform(-100.0, 100.0, 2).unwrap()
    }

    #[test]
    fn mutation_schedule_examples() {
        assert_eq!(adaptive_mutation_rate(0, 100, 0.5).unwrap(), 0.5);
        assert_eq!(adaptive_mutation_rate(100, 100, 0.5).unwrap(), 0.0);
        assert!((adaptive_mutation_rate(50, 100, 0.8).unwrap() - 0.4).abs() < 1e-15);
        assert!(adaptive_mutation_rate(101, 100, 0.5).is_err());
    }

    #[test]
    fn crossover_schedule_examples() {
        assert_eq!(adaptive_crossover_rate(0, 100, 0.9).unwrap(), 0.0);
        assert_eq!(adaptive_crossover_rate(100, 100, 0.9).unwrap(), 0.9);
        assert!((adaptive_crossover_rate(25, 100, 0.8).unwrap() - 0.2).abs() < 1e-15);
        assert!(adaptive_crossover_rate(101, 100, 0.9).is_err());
    }

    #[test]
    fn de_mutation_fixed_donors() {
        // Target 0; the other three members are the only possible donors.
        // Whatever order r1, r2, r3 are drawn in, enumerate the outcomes.
        let members = vec![ind(&[9.0, 9.0]), ind(&[1.0, 1.0]), ind(&[3.0, 3.0]), ind(&[1.0, 1.0])];
        let mut rng = RngStream::new(11, 0);
        for _ in 0..50 {
            let v = de_mutation(&members, 0, 0.5, &wide(), &mut rng).unwrap();
            let ok = [[2.0, 2.0], [0.0, 0.0], [1.0, 1.0], [3.0, 3.0]];
            assert!(ok.iter().any(|o| o == v.as_slice()), "{v:?}");
        }
    }

    #[test]
    fn de_mutation_with_zero_factor_returns_a_donor() {
        let members: Vec<_> = (0..6).map(|i| ind(&[i as f64, -(i as f64)])).collect();
        let mut rng = RngStream::new(3, 0);
        for _ in 0..50 {
            let v = de_mutation(&members, 2, 0.0, &wide(), &mut rng).unwrap();
            assert!(members.iter().enumerate().any(|(i, m)| i != 2 && m.position == v));
        }
    }

    #[test]
    fn de_mutation_identical_members() {
        let members = vec![ind(&[0.3, -0.7]); 5];
        let v = de_mutation(&members, 1, 0.9, &wide(), &mut RngStream::new(1, 1)).unwrap();
        assert_eq!(v.as_slice(), &[0.3, -0.7]);
    }

    #[test]
    fn de_mutation_rejects_small_population() {
        let members = vec![ind(&[0.0, 0.0]); 3];
        assert!(matches!(
            de_mutation(&members, 0, 0.5, &wide(), &mut RngStream::new(0, 0)),
            Err(Error::InvalidConfiguration(_))
        ));
    }

    #[test]
    fn de_mutation_is_clamped() {
        let members = vec![ind(&[9.0, 9.0]), ind(&[10.0, 10.0]), ind(&[10.0, 10.0]), ind(&[-10.0, -10.0])];
        let b = Bounds::uniform(-10.0, 10.0, 2).unwrap();
        let mut rng = RngStream::new(4, 0);
        for _ in 0..50 {
            let v = de_mutation(&members, 0, 2.0, &b, &mut rng).unwrap();
            assert!(b.contains(&v));
        }
    }

    #[test]
    fn crossover_extremes() {
        let x = RealVector::new(vec![1.0, 2.0, 3.0]).unwrap();
        let v = RealVector::new(vec![-1.0, -2.0, -3.0]).unwrap();
        let mut rng = RngStream::new(8, 0);
        assert_eq!(binomial_crossover(&x, &v, 1.0, &mut rng).unwrap(), v);
        assert_eq!(binomial_crossover(&x, &v, 0.0, &mut rng).unwrap(), x);
    }

    #[test]
    fn crossover_replays_seeded_draws() {
        let x = RealVector::new(vec![1.0, 2.0]).unwrap();
        let v = RealVector::new(vec![10.0, 20.0]).unwrap();
        let mut replay = RngStream::new(2024, 0);
        let expected: Vec<f64> = [(1.0, 10.0), (2.0, 20.0)]
            .iter()
            .map(|&(a, b)| if replay.unit() < 0.5 { b } else { a })
            .collect();
        let got = binomial_crossover(&x, &v, 0.5, &mut RngStream::new(2024, 0)).unwrap();
        assert_eq!(got.as_slice(), expected.as_slice());
        // Frozen: the first two draws of stream (2024, 0).
        assert_eq!(got.as_slice(), FROZEN_CR_HALF_MIX);
    }

    const FROZEN_CR_HALF_MIX: &[f64] = &[10.0, 2.0];

    #[test]
    fn crossover_dimension_mismatch() {
        let x = RealVector::new(vec![1.0, 2.0]).unwrap();
        let v = RealVector::new(vec![1.0]).unwrap();
        assert!(matches!(
            binomial_crossover(&x, &v, 0.5, &mut RngStream::new(0, 0)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn adeds_trial_zero_factor_is_identity() {
        let members: Vec<_> = (0..5).map(|i| ind(&[i as f64, 2.0 * i as f64])).collect();
        let v = adeds_trial(&members, 3, 0.0, &wide(), &mut RngStream::new(5, 0)).unwrap();
        assert_eq!(v, members[3].position);
    }

    #[test]
    fn adeds_trial_arithmetic() {
        // Three members: target (0,0) plus (1,0) and (0,1). Enumerate every
        // admissible neighbor pair and check the trial is one of the outcomes.
        let members = vec![ind(&[0.0, 0.0]), ind(&[1.0, 0.0]), ind(&[0.0, 1.0])];
        let mut rng = RngStream::new(6, 0);
        let mut saw_both_others = false;
        for _ in 0..200 {
            let v = adeds_trial(&members, 0, 0.5, &wide(), &mut rng).unwrap();
            let ok = [[0.5, 0.5], [0.5, 0.0], [0.0, 0.5]];
            assert!(ok.iter().any(|o| o == v.as_slice()), "{v:?}");
            saw_both_others |= v.as_slice() == [0.5, 0.5];
        }
        assert!(saw_both_others);
    }

    #[test]
    fn adeds_trial_identical_members() {
        let members = vec![ind(&[4.0, -4.0]); 4];
        let v = adeds_trial(&members, 0, 0.7, &wide(), &mut RngStream::new(0, 0)).unwrap();
        assert_eq!(v.as_slice(), &[4.0, -4.0]);
    }

    #[test]
    fn adeds_trial_rejects_two_members() {
        let members = vec![ind(&[0.0, 0.0]); 2];
        assert!(adeds_trial(&members, 0, 0.5, &wide(), &mut RngStream::new(0, 0)).is_err());
    }
}
