//! Isotropic phases (compliance + unit cost) and ordered phase sets with
//! volume fractions.
//!
//! Compliances are strictly increasing; `κ = +∞` encodes void and at most one
//! phase may be void (it is then the last one).

use crate::tensor::StressTensor;
use thiserror::Error;

pub const FRACTION_SUM_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum PhaseError {
    #[error("phase compliance must be positive, got {0}")]
    NonPositiveKappa(f64),
    #[error("phase set is empty")]
    Empty,
    #[error("compliances must be strictly increasing")]
    NotOrdered,
    #[error("at most one phase may be void")]
    MultipleVoids,
    #[error("need one fraction per phase ({phases} phases, {fractions} fractions)")]
    FractionCount { phases: usize, fractions: usize },
    #[error("fractions must lie in [0,1], got {0}")]
    FractionRange(f64),
    #[error("fractions must sum to 1, got {0}")]
    FractionSum(f64),
    #[error("void cannot carry stress")]
    VoidStress,
    #[error("all phases are void")]
    AllVoid,
}

/// Isotropic material: compliance `κ` (`+∞` = void) and unit cost `γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phase {
    pub kappa: f64,
    pub cost: f64,
}

impl Phase {
    pub fn new(kappa: f64, cost: f64) -> Result<Self, PhaseError> {
        if !(kappa > 0.0) {
            return Err(PhaseError::NonPositiveKappa(kappa));
        }
        Ok(Self { kappa, cost })
    }

    pub fn is_void(&self) -> bool {
        self.kappa.is_infinite()
    }
}

/// Ordered collection of phases with volume fractions summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSet {
    phases: Vec<Phase>,
    fractions: Vec<f64>,
}

impl PhaseSet {
    pub fn new(phases: Vec<Phase>, fractions: Vec<f64>) -> Result<Self, PhaseError> {
        if phases.is_empty() {
            return Err(PhaseError::Empty);
        }
        for w in phases.windows(2) {
            if !(w[0].kappa < w[1].kappa) {
                return Err(PhaseError::NotOrdered);
            }
        }
        if phases.iter().filter(|p| p.is_void()).count() > 1 {
            return Err(PhaseError::MultipleVoids);
        }
        if phases.len() != fractions.len() {
            return Err(PhaseError::FractionCount {
                phases: phases.len(),
                fractions: fractions.len(),
            });
        }
        let mut sum = 0.0;
        for &m in &fractions {
            if !(-FRACTION_SUM_TOL..=1.0 + FRACTION_SUM_TOL).contains(&m) {
                return Err(PhaseError::FractionRange(m));
            }
            sum += m;
        }
        if (sum - 1.0).abs() > FRACTION_SUM_TOL {
            return Err(PhaseError::FractionSum(sum));
        }
        Ok(Self { phases, fractions })
    }

    /// Convenience constructor from parallel `κ` / `γ` / `m` lists.
    pub fn from_lists(kappa: &[f64], cost: &[f64], fractions: &[f64]) -> Result<Self, PhaseError> {
        let phases = kappa
            .iter()
            .zip(cost)
            .map(|(&k, &g)| Phase::new(k, g))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(phases, fractions.to_vec())
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    pub fn fractions(&self) -> &[f64] {
        &self.fractions
    }

    pub fn phase(&self, i: usize) -> Phase {
        self.phases[i]
    }

    pub fn fraction(&self, i: usize) -> f64 {
        self.fractions[i]
    }

    pub fn has_void(&self) -> bool {
        self.phases.iter().any(|p| p.is_void())
    }
}

/// Finite set of supporting stresses attributed to one well.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportSet {
    pub points: Vec<StressTensor>,
    /// Index of the owning phase within its `PhaseSet`.
    pub owner: usize,
}

impl SupportSet {
    pub fn new(points: Vec<StressTensor>, owner: usize) -> Self {
        Self { points, owner }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unordered_kappa() {
        let p = vec![Phase::new(2.0, 0.0).unwrap(), Phase::new(1.0, 0.0).unwrap()];
        assert_eq!(
            PhaseSet::new(p, vec![0.5, 0.5]).unwrap_err(),
            PhaseError::NotOrdered
        );
    }

    #[test]
    fn rejects_bad_fraction_sum() {
        let err = PhaseSet::from_lists(&[1.0, 2.0], &[1.0, 0.5], &[0.5, 0.6]).unwrap_err();
        assert!(matches!(err, PhaseError::FractionSum(_)));
    }

    #[test]
    fn void_is_last_and_unique() {
        let set = PhaseSet::from_lists(
            &[1.0, 2.0, f64::INFINITY],
            &[1.0, 0.6, 0.0],
            &[0.2, 0.3, 0.5],
        )
        .unwrap();
        assert!(set.has_void());
        assert!(set.phase(2).is_void());

        let err = PhaseSet::from_lists(
            &[1.0, f64::INFINITY, f64::INFINITY],
            &[1.0, 0.0, 0.0],
            &[0.2, 0.3, 0.5],
        )
        .unwrap_err();
        // Two infinities also violate strict ordering; either error is fine,
        // but the ordering check fires first.
        assert_eq!(err, PhaseError::NotOrdered);
    }

    #[test]
    fn kappa_must_be_positive() {
        assert!(Phase::new(0.0, 1.0).is_err());
        assert!(Phase::new(-1.0, 1.0).is_err());
        assert!(Phase::new(f64::INFINITY, 0.0).is_ok());
    }
}
