//! Seeded search for linear forms that avoid a list of primes and cut
//! `S/a` down to dimension zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::idealops::{dimension, Ideal};
use crate::polyring::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SopSearchConfig {
    pub seed: u64,
    /// Smallest coefficient drawn for random forms.
    pub pool_min: i64,
    /// Largest coefficient drawn for random forms.
    pub pool_max: i64,
    pub max_attempts: usize,
}

impl Default for SopSearchConfig {
    fn default() -> Self {
        SopSearchConfig {
            seed: 0,
            pool_min: -3,
            pool_max: 3,
            max_attempts: 200,
        }
    }
}

impl SopSearchConfig {
    pub fn with_seed(seed: u64) -> Self {
        SopSearchConfig {
            seed,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.pool_min > self.pool_max {
            return Err(Error::InvalidArgument("coefficient pool is empty".into()));
        }
        if self.pool_min == 0 && self.pool_max == 0 {
            return Err(Error::InvalidArgument("coefficient pool contains only zero".into()));
        }
        if self.max_attempts == 0 {
            return Err(Error::InvalidArgument("max_attempts must be at least 1".into()));
        }
        Ok(())
    }
}

fn dim_or_unit(i: &Ideal) -> Result<Option<usize>> {
    match dimension(i) {
        Ok(d) => Ok(Some(d)),
        Err(Error::UnitIdeal) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Finds `count = dim S/a` linear forms, none lying in any of `primes`,
/// such that `dim S/(a + forms) = 0`. Coordinate variables are tried first,
/// in ring order, then random integer combinations drawn from the pool.
pub fn find_linear_sop(a: &Ideal, primes: &[Ideal], count: usize, cfg: &SopSearchConfig) -> Result<Vec<Polynomial>> {
    cfg.validate()?;
    let ring = a.ring();
    if primes.iter().any(|p| !p.ring().compatible(ring)) {
        return Err(Error::RingMismatch);
    }
    let dim = dimension(a)?;
    if dim != count {
        return Err(Error::InvalidArgument(format!(
            "count {count} differs from dim S/a = {dim}"
        )));
    }
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut chosen: Vec<Polynomial> = Vec::new();
    let mut current = a.clone();
    let mut next_coordinate = 0;
    let mut attempts = 0;
    while chosen.len() < count {
        if attempts == cfg.max_attempts {
            return Err(Error::Exhausted(attempts));
        }
        attempts += 1;
        let candidate = if next_coordinate < n {
            next_coordinate += 1;
            Polynomial::var(ring, next_coordinate - 1)
        } else {
            let mut form = Polynomial::zero(ring);
            for v in 0..n {
                let c = rng.gen_range(cfg.pool_min..=cfg.pool_max);
                if c != 0 {
                    form = &form + &(&Polynomial::from_int(ring, c) * &Polynomial::var(ring, v));
                }
            }
            form
        };
        if candidate.is_zero() || chosen.contains(&candidate) {
            continue;
        }
        let mut avoids = true;
        for p in primes {
            if p.contains(&candidate)? {
                avoids = false;
                break;
            }
        }
        if !avoids {
            continue;
        }
        let next = current.add_generators(std::slice::from_ref(&candidate))?;
        if dim_or_unit(&next)? == Some(count - chosen.len() - 1) {
            chosen.push(candidate);
            current = next;
        }
    }
    Ok(chosen)
}
