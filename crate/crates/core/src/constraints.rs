//! Event-wise probability bounds describing a credal set.

use num::{One, Zero};

use crate::cloud::{Cloud, PossibilityDistribution};
use crate::error::Error;
use crate::rational::{in_unit, Rat};
use crate::space::{EventSet, OutcomeSpace};

/// One two-sided bound `lo <= P(event) <= hi`.
///
/// A row with `lo > hi` is permitted and simply denotes an infeasible
/// constraint; emptiness is a meaningful outcome (thin clouds produce such
/// rows) and must survive into the LP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintRow {
    pub event: EventSet,
    pub lo: Rat,
    pub hi: Rat,
}

/// A conjunction of event-wise bounds over one outcome space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CredalConstraints {
    space: OutcomeSpace,
    rows: Vec<ConstraintRow>,
}

impl CredalConstraints {
    pub fn new(space: OutcomeSpace, rows: Vec<ConstraintRow>) -> Result<Self, Error> {
        for row in &rows {
            if !in_unit(&row.lo) {
                return Err(Error::BoundOutOfUnit(row.lo.to_string()));
            }
            if !in_unit(&row.hi) {
                return Err(Error::BoundOutOfUnit(row.hi.to_string()));
            }
        }
        Ok(CredalConstraints { space, rows })
    }

    pub fn empty(space: OutcomeSpace) -> Self {
        CredalConstraints {
            space,
            rows: Vec::new(),
        }
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn rows(&self) -> &[ConstraintRow] {
        &self.rows
    }

    /// Concatenates two constraint sets over the same space, merging rows on
    /// a common event by keeping the tighter bounds.
    pub fn merge(&self, other: &CredalConstraints) -> Result<CredalConstraints, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut rows = self.rows.clone();
        for row in &other.rows {
            match rows.iter_mut().find(|r| r.event == row.event) {
                Some(existing) => {
                    if row.lo > existing.lo {
                        existing.lo = row.lo.clone();
                    }
                    if row.hi < existing.hi {
                        existing.hi = row.hi.clone();
                    }
                }
                None => rows.push(row.clone()),
            }
        }
        Ok(CredalConstraints {
            space: self.space.clone(),
            rows,
        })
    }
}

/// Expresses a cloud's credal set as the finite family of level-cut bounds.
///
/// For each level `gamma_i` the regular lower cut `C` gets
/// `P(C) <= 1 - gamma_i` and the strict upper cut `B` gets
/// `P(B) >= 1 - gamma_i`. The opposite side of every row is then tightened
/// to the best bound implied by cut nesting, and rows on the empty or full
/// event are dropped (they are always vacuous given the cloud invariants).
pub fn cloud_constraints(cloud: &Cloud) -> CredalConstraints {
    let space = cloud.space().clone();
    let levels = cloud.level_values();
    let gammas = levels.values();
    let one = Rat::one();

    // (event, primary bound) for both cut families, indexed by level.
    let mut lower_cuts = Vec::new(); // C_{gamma_i}: P <= 1 - gamma_i
    let mut upper_cuts = Vec::new(); // B-bar_{gamma_i}: P >= 1 - gamma_i
    for gamma in gammas {
        let bound = &one - gamma;
        lower_cuts.push((
            cloud.lower_cut(gamma, false).expect("level in range"),
            bound.clone(),
        ));
        upper_cuts.push((cloud.upper_cut(gamma, true).expect("level in range"), bound));
    }

    let mut rows = Vec::new();
    for (event, hi) in &lower_cuts {
        if event.is_empty() || event.is_full() {
            continue;
        }
        // Tightest implied lower bound: a strict upper cut nested inside.
        let lo = upper_cuts
            .iter()
            .filter(|(b, _)| b.is_subset(*event))
            .map(|(_, bound)| bound.clone())
            .max()
            .unwrap_or_else(Rat::zero);
        rows.push(ConstraintRow {
            event: *event,
            lo,
            hi: hi.clone(),
        });
    }
    for (event, lo) in &upper_cuts {
        if event.is_empty() || event.is_full() {
            continue;
        }
        // Tightest implied upper bound: a regular lower cut containing it.
        let hi = lower_cuts
            .iter()
            .filter(|(c, _)| event.is_subset(*c))
            .map(|(_, bound)| bound.clone())
            .min()
            .unwrap_or_else(Rat::one);
        rows.push(ConstraintRow {
            event: *event,
            lo: lo.clone(),
            hi,
        });
    }
    CredalConstraints { space, rows }
}

/// The constraint rows of a single possibility distribution: at every
/// attained level `v` (plus 0), `P({pi > v}) >= 1 - v`.
pub fn possibility_constraints(dist: &PossibilityDistribution) -> CredalConstraints {
    let space = dist.space().clone();
    let one = Rat::one();
    let mut rows = Vec::new();
    for level in dist.levels_with_zero() {
        let event = dist.strict_cut(&level).expect("level in range");
        if event.is_empty() || event.is_full() {
            continue;
        }
        rows.push(ConstraintRow {
            event,
            lo: &one - &level,
            hi: Rat::one(),
        });
    }
    CredalConstraints { space, rows }
}
