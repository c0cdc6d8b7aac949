//! Exact lower/upper probabilities over credal sets, set functions, the
//! Möbius transform and monotonicity checks.

use num::{One, Signed, Zero};

use crate::constraints::CredalConstraints;
use crate::error::Error;
use crate::rational::Rat;
use crate::simplex::{Lp, LpOutcome, Relation};
use crate::space::{EventSet, OutcomeSpace};

/// Default cap for materializing a set function on all `2^n` events.
pub const DEFAULT_SET_FUNCTION_CAP: usize = 12;
/// Default cap for the exhaustive `4^n` 2-monotonicity pair scan.
pub const DEFAULT_PAIR_SCAN_CAP: usize = 8;

/// Outcome of an exact optimization over a credal set. Emptiness is an
/// answer, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Feasible(Rat),
    Infeasible,
}

impl LpResult {
    pub fn feasible(&self) -> Option<&Rat> {
        match self {
            LpResult::Feasible(v) => Some(v),
            LpResult::Infeasible => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpResult::Infeasible)
    }

    /// Unwraps the value; panics on an empty credal set.
    pub fn expect_feasible(self) -> Rat {
        match self {
            LpResult::Feasible(v) => v,
            LpResult::Infeasible => panic!("credal set is empty"),
        }
    }
}

fn simplex_program(constraints: &CredalConstraints) -> Lp {
    let n = constraints.space().len();
    let mut lp = Lp::new(n);
    let row = |event: EventSet| -> Vec<Rat> {
        let mut coeffs = vec![Rat::zero(); n];
        for i in event.iter() {
            coeffs[i] = Rat::one();
        }
        coeffs
    };
    lp.add(vec![Rat::one(); n], Relation::Eq, Rat::one());
    for c in constraints.rows() {
        if c.lo.is_positive() {
            lp.add(row(c.event), Relation::Ge, c.lo.clone());
        }
        if c.hi < Rat::one() {
            lp.add(row(c.event), Relation::Le, c.hi.clone());
        }
    }
    lp
}

fn event_objective(n: usize, event: EventSet) -> Vec<Rat> {
    let mut obj = vec![Rat::zero(); n];
    for i in event.iter() {
        obj[i] = Rat::one();
    }
    obj
}

/// `min P(A)` over the credal set, or [`LpResult::Infeasible`] when the
/// constraint polytope is empty.
pub fn lp_lower(constraints: &CredalConstraints, event: EventSet) -> LpResult {
    let lp = simplex_program(constraints);
    match lp.minimize(&event_objective(constraints.space().len(), event)) {
        LpOutcome::Optimal { value, .. } => LpResult::Feasible(value),
        LpOutcome::Infeasible => LpResult::Infeasible,
        LpOutcome::Unbounded => unreachable!("probability simplex is bounded"),
    }
}

/// `max P(A)`, computed as `1 - lp_lower(A^c)`.
pub fn lp_upper(constraints: &CredalConstraints, event: EventSet) -> LpResult {
    match lp_lower(constraints, event.complement()) {
        LpResult::Feasible(v) => LpResult::Feasible(Rat::one() - v),
        LpResult::Infeasible => LpResult::Infeasible,
    }
}

/// True when the constraints admit at least one probability distribution.
pub fn is_feasible(constraints: &CredalConstraints) -> bool {
    simplex_program(constraints).is_feasible()
}

/// A witness distribution from the credal set, if any.
pub fn feasible_point(constraints: &CredalConstraints) -> Option<Vec<Rat>> {
    let n = constraints.space().len();
    match simplex_program(constraints).minimize(&vec![Rat::zero(); n]) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

/// A set function on all events of a space, e.g. a materialized lower
/// probability. Values are indexed by event bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunction {
    space: OutcomeSpace,
    values: Vec<Rat>,
}

impl SetFunction {
    pub fn new(space: OutcomeSpace, values: Vec<Rat>) -> Result<Self, Error> {
        if values.len() != 1 << space.len() {
            return Err(Error::MissingValue(format!(
                "set function needs {} values, got {}",
                1u128 << space.len(),
                values.len()
            )));
        }
        Ok(SetFunction { space, values })
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn value(&self, event: EventSet) -> &Rat {
        &self.values[event.bits() as usize]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// Materializes `lp_lower` on every event. Errors when the space exceeds
/// `cap` or the credal set is empty.
pub fn lower_prob_function(
    constraints: &CredalConstraints,
    cap: usize,
) -> Result<SetFunction, Error> {
    let space = constraints.space().clone();
    let n = space.len();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut values = Vec::with_capacity(1 << n);
    for event in space.all_events() {
        match lp_lower(constraints, event) {
            LpResult::Feasible(v) => values.push(v),
            LpResult::Infeasible => return Err(Error::EmptyCredalSet),
        }
    }
    Ok(SetFunction { space, values })
}

/// Result of a 2-monotonicity check: either the function is 2-monotone or a
/// lexicographically first violating pair of events is returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoMonotone {
    Yes,
    CounterExample(EventSet, EventSet),
}

impl TwoMonotone {
    pub fn holds(&self) -> bool {
        matches!(self, TwoMonotone::Yes)
    }
}

/// Scans all `4^n` event pairs for `g(A) + g(B) <= g(A u B) + g(A n B)`.
pub fn is_2_monotone(f: &SetFunction, cap: usize) -> Result<TwoMonotone, Error> {
    let n = f.space.len();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    for a in f.space.all_events() {
        for b in f.space.all_events() {
            let lhs = f.value(a) + f.value(b);
            let rhs = f.value(a.union(b)) + f.value(a.intersection(b));
            if lhs > rhs {
                return Ok(TwoMonotone::CounterExample(a, b));
            }
        }
    }
    Ok(TwoMonotone::Yes)
}

/// The signed Möbius inverse of a set function:
/// `m(E) = sum_{B subset E} (-1)^{|E \ B|} f(B)`.
///
/// Computed with the in-place subset transform; reconstruction via
/// [`zeta_transform`] is exact.
pub fn mobius_transform(f: &SetFunction) -> Vec<(EventSet, Rat)> {
    let n = f.space.len();
    let mut values = f.values.clone();
    for bit in 0..n {
        let step = 1usize << bit;
        for mask in 0..values.len() {
            if mask & step != 0 {
                let lower = values[mask ^ step].clone();
                values[mask] -= lower;
            }
        }
    }
    values
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(mask, v)| (f.space.event_from_bits(mask as u128), v))
        .collect()
}

/// Rebuilds the set function from a (possibly signed) mass assignment.
pub fn zeta_transform(space: &OutcomeSpace, masses: &[(EventSet, Rat)]) -> SetFunction {
    let n = space.len();
    let mut values = vec![Rat::zero(); 1 << n];
    for (event, mass) in masses {
        values[event.bits() as usize] += mass;
    }
    for bit in 0..n {
        let step = 1usize << bit;
        for mask in 0..values.len() {
            if mask & step != 0 {
                let lower = values[mask ^ step].clone();
                values[mask] += lower;
            }
        }
    }
    SetFunction {
        space: space.clone(),
        values,
    }
}

/// A random set: positive masses on non-empty focal sets, summing to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassFunction {
    space: OutcomeSpace,
    focal: Vec<(EventSet, Rat)>,
}

impl MassFunction {
    /// Builds a mass function, merging duplicate focal sets. The result is
    /// sorted by event bitmask so iteration order is deterministic.
    pub fn new(space: OutcomeSpace, focal: Vec<(EventSet, Rat)>) -> Result<Self, Error> {
        let mut merged: Vec<(EventSet, Rat)> = Vec::new();
        for (event, mass) in focal {
            if event.is_empty() {
                return Err(Error::MassOnEmpty);
            }
            match merged.iter_mut().find(|(e, _)| *e == event) {
                Some((_, m)) => *m += mass,
                None => merged.push((event, mass)),
            }
        }
        let mut total = Rat::zero();
        for (_, mass) in &merged {
            if !mass.is_positive() {
                return Err(Error::BadMass);
            }
            total += mass;
        }
        if !total.is_one() {
            return Err(Error::BadMass);
        }
        merged.sort_by_key(|(event, _)| event.bits());
        Ok(MassFunction {
            space,
            focal: merged,
        })
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn focal(&self) -> &[(EventSet, Rat)] {
        &self.focal
    }

    /// `Bel(A) = sum of masses of focal sets inside A`.
    pub fn bel(&self, event: EventSet) -> Rat {
        self.focal
            .iter()
            .filter(|(e, _)| e.is_subset(event))
            .map(|(_, m)| m.clone())
            .sum()
    }

    /// `Pl(A) = 1 - Bel(A^c)`, the mass of focal sets hitting A.
    pub fn pl(&self, event: EventSet) -> Rat {
        Rat::one() - self.bel(event.complement())
    }

    /// Bel on every event, for monotonicity analysis.
    pub fn bel_function(&self) -> SetFunction {
        zeta_transform(&self.space, &self.focal)
    }
}
