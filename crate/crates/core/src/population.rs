use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::space::{Bounds, RealVector};

/// Smallest population that still leaves three distinct donors for rand/1.
pub const MIN_POPULATION: usize = 4;

/// A candidate solution with its cached objective value (lower is better).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Individual {
    pub position: RealVector,
    pub fitness: f64,
}

impl Individual {
    pub fn evaluate(position: RealVector, objective: impl Fn(&[f64]) -> f64) -> Self {
        let fitness = objective(&position);
        Individual { position, fitness }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    members: Vec<Individual>,
    generation: usize,
}

impl Population {
    pub fn from_members(members: Vec<Individual>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::InvalidInput("population must be nonempty".into()));
        };
        let dim = first.position.dimension();
        if members.iter().any(|m| m.position.dimension() != dim) {
            return Err(Error::InvalidInput(
                "all members must share one dimension".into(),
            ));
        }
        Ok(Population {
            members,
            generation: 0,
        })
    }

    /// Draws `size` members uniformly from `bounds`, one objective evaluation each.
    pub fn initialize(
        size: usize,
        bounds: &Bounds,
        objective: impl Fn(&[f64]) -> f64,
        rng: &mut RngStream,
    ) -> Result<Self> {
        if size < MIN_POPULATION {
            return Err(Error::InvalidConfiguration(format!(
                "population size {size} is below the minimum of {MIN_POPULATION}"
            )));
        }
        let members = (0..size)
            .map(|_| {
                let x: Vec<f64> = bounds
                    .intervals()
                    .iter()
                    .map(|iv| rng.uniform(iv.low, iv.high))
                    .collect();
                Individual::evaluate(RealVector::from_vec_unchecked(x), &objective)
            })
            .collect();
        Ok(Population {
            members,
            generation: 0,
        })
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub(crate) fn members_mut(&mut self) -> &mut [Individual] {
        &mut self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.members[0].position.dimension()
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub(crate) fn advance_generation(&mut self) {
        self.generation += 1;
    }

    /// Index of the fittest member. Ties go to the lowest index.
    pub fn best_index(&self) -> usize {
        let mut best = 0;
        for (i, m) in self.members.iter().enumerate().skip(1) {
            if m.fitness < self.members[best].fitness {
                best = i;
            }
        }
        best
    }

    pub fn best(&self) -> &Individual {
        &self.members[self.best_index()]
    }
}

/// Mean pairwise Euclidean distance over all unordered member pairs.
/// A single-member population has diversity 0.
pub fn diversity(members: &[Individual]) -> Result<f64> {
    let n = members.len();
    if n == 0 {
        return Err(Error::InvalidInput("diversity of an empty population".into()));
    }
    if n == 1 {
        return Ok(0.0);
    }
    let mut total = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            total += members[i].position.distance(&members[j].position);
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok(total / pairs)
}
