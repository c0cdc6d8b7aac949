//! Lower probability of the intersection of two random-set credal sets,
//! by exact minimization over the transportation polytope of joint mass
//! matrices with forbidden empty-intersection cells.
//!
//! Applied to the two possibility marginals of a cloud this is an
//! independent route to the cloud's exact lower probability, used as an
//! oracle against the direct simplex on the constraint rows.

use num::{One, Zero};

use crate::cloud::{Cloud, PossibilityDistribution};
use crate::credal::{LpResult, MassFunction};
use crate::error::Error;
use crate::rational::Rat;
use crate::simplex::{Lp, LpOutcome, Relation};
use crate::space::EventSet;

/// The consonant random set of a possibility distribution: nested focal
/// sets are the strict cuts at the attained levels, masses the consecutive
/// level gaps. Its belief function equals the necessity measure.
pub fn possibility_to_randomset(dist: &PossibilityDistribution) -> MassFunction {
    let levels = dist.levels_with_zero();
    let mut focal = Vec::new();
    for i in 0..levels.len() - 1 {
        let cut = dist.strict_cut(&levels[i]).expect("level in range");
        focal.push((cut, &levels[i + 1] - &levels[i]));
    }
    MassFunction::new(dist.space().clone(), focal)
        .expect("strict cuts below 1 are non-empty and gaps sum to 1")
}

/// A two-marginal joint-mass minimization problem. Cells whose focal sets
/// have empty intersection are forbidden (forced to zero mass).
#[derive(Debug, Clone)]
pub struct JointMassProblem {
    rows: Vec<(EventSet, Rat)>,
    cols: Vec<(EventSet, Rat)>,
    allowed: Vec<(usize, usize)>,
}

/// An optimal joint matrix witnessing a transport minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportWitness {
    pub value: Rat,
    /// Full `rows x cols` matrix; forbidden cells hold exact zeros.
    pub joint: Vec<Vec<Rat>>,
}

impl JointMassProblem {
    pub fn new(p1: &MassFunction, p2: &MassFunction) -> Result<Self, Error> {
        if p1.space() != p2.space() {
            return Err(Error::MarginalSpaceMismatch);
        }
        let rows: Vec<(EventSet, Rat)> = p1.focal().to_vec();
        let cols: Vec<(EventSet, Rat)> = p2.focal().to_vec();
        let mut allowed = Vec::new();
        for (i, (f, _)) in rows.iter().enumerate() {
            for (j, (g, _)) in cols.iter().enumerate() {
                if !f.intersection(*g).is_empty() {
                    allowed.push((i, j));
                }
            }
        }
        Ok(JointMassProblem {
            rows,
            cols,
            allowed,
        })
    }

    pub fn forbidden(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            for j in 0..self.cols.len() {
                if !self.allowed.contains(&(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn program(&self) -> Lp {
        let nvars = self.allowed.len();
        let mut lp = Lp::new(nvars);
        for (i, (_, mass)) in self.rows.iter().enumerate() {
            let coeffs: Vec<Rat> = self
                .allowed
                .iter()
                .map(|&(r, _)| if r == i { Rat::one() } else { Rat::zero() })
                .collect();
            lp.add(coeffs, Relation::Eq, mass.clone());
        }
        for (j, (_, mass)) in self.cols.iter().enumerate() {
            let coeffs: Vec<Rat> = self
                .allowed
                .iter()
                .map(|&(_, c)| if c == j { Rat::one() } else { Rat::zero() })
                .collect();
            lp.add(coeffs, Relation::Eq, mass.clone());
        }
        lp
    }

    fn objective(&self, event: EventSet) -> Vec<Rat> {
        self.allowed
            .iter()
            .map(|&(i, j)| {
                let cell = self.rows[i].0.intersection(self.cols[j].0);
                if cell.is_subset(event) {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect()
    }

    /// `min Bel_Q(A)` over the polytope, or infeasible when no normalized
    /// joint mass exists (exactly when the two credal sets are disjoint).
    pub fn lower_bel(&self, event: EventSet) -> LpResult {
        match self.program().minimize(&self.objective(event)) {
            LpOutcome::Optimal { value, .. } => LpResult::Feasible(value),
            LpOutcome::Infeasible => LpResult::Infeasible,
            LpOutcome::Unbounded => unreachable!("transport polytope is bounded"),
        }
    }

    /// As [`JointMassProblem::lower_bel`], returning the optimal matrix.
    pub fn lower_bel_witness(&self, event: EventSet) -> Option<TransportWitness> {
        match self.program().minimize(&self.objective(event)) {
            LpOutcome::Optimal { value, x } => {
                let mut joint = vec![vec![Rat::zero(); self.cols.len()]; self.rows.len()];
                for (var, &(i, j)) in self.allowed.iter().enumerate() {
                    joint[i][j] = x[var].clone();
                }
                Some(TransportWitness { value, joint })
            }
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("transport polytope is bounded"),
        }
    }
}

/// Exact minimum of `Bel_Q(A)` over joint masses with the given marginals.
pub fn transport_lower_bel(
    p1: &MassFunction,
    p2: &MassFunction,
    event: EventSet,
) -> Result<LpResult, Error> {
    Ok(JointMassProblem::new(p1, p2)?.lower_bel(event))
}

/// The cloud's exact lower probability computed through its two marginal
/// belief functions, the random sets of `pi` and `1 - delta`.
pub fn cloud_lower_via_transport(cloud: &Cloud, event: EventSet) -> LpResult {
    let (upper, complement) = cloud.possibility_pair();
    let p1 = possibility_to_randomset(&upper);
    let p2 = possibility_to_randomset(&complement);
    JointMassProblem::new(&p1, &p2)
        .expect("marginals share the cloud's space")
        .lower_bel(event)
}
