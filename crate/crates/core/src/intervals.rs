//! Probability intervals and their transformations into possibility
//! distributions, clouds and generalized p-boxes.

use num::{One, Signed, Zero};

use crate::cloud::{Cloud, PossibilityDistribution};
use crate::cloudops::GeneralizedPBox;
use crate::constraints::{ConstraintRow, CredalConstraints};
use crate::error::Error;
use crate::rational::{in_unit, Rat};
use crate::simplex::{Lp, LpOutcome, Relation};
use crate::space::OutcomeSpace;

/// Default cap on the space size before linear-extension enumeration is
/// refused (the count can be factorial).
pub const DEFAULT_EXTENSION_CAP: usize = 10;

/// Per-element probability bounds `l(x) <= p(x) <= u(x)` with a non-empty
/// credal set (`sum l <= 1 <= sum u`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityInterval {
    space: OutcomeSpace,
    l: Vec<Rat>,
    u: Vec<Rat>,
}

impl ProbabilityInterval {
    pub fn new(space: OutcomeSpace, l: Vec<Rat>, u: Vec<Rat>) -> Result<Self, Error> {
        let n = space.len();
        if l.len() != n || u.len() != n {
            return Err(Error::MissingValue(format!(
                "expected {n} values, got {} l / {} u",
                l.len(),
                u.len()
            )));
        }
        for i in 0..n {
            for v in [&l[i], &u[i]] {
                if !in_unit(v) {
                    return Err(Error::ValueOutOfUnit {
                        element: space.label(i).to_owned(),
                        value: v.to_string(),
                    });
                }
            }
            if l[i] > u[i] {
                return Err(Error::LowerExceedsUpper(space.label(i).to_owned()));
            }
        }
        let sum_l: Rat = l.iter().cloned().sum();
        let sum_u: Rat = u.iter().cloned().sum();
        if sum_l > Rat::one() || sum_u < Rat::one() {
            return Err(Error::IntervalsInfeasible);
        }
        Ok(ProbabilityInterval { space, l, u })
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn lower(&self, i: usize) -> &Rat {
        &self.l[i]
    }

    pub fn upper(&self, i: usize) -> &Rat {
        &self.u[i]
    }

    pub fn lower_values(&self) -> &[Rat] {
        &self.l
    }

    pub fn upper_values(&self) -> &[Rat] {
        &self.u
    }

    /// The defining singleton constraint rows.
    pub fn constraints(&self) -> CredalConstraints {
        let mut rows = Vec::new();
        for i in 0..self.space.len() {
            if self.l[i].is_zero() && self.u[i].is_one() {
                continue;
            }
            rows.push(ConstraintRow {
                event: self.space.event_from_indices(&[i]),
                lo: self.l[i].clone(),
                hi: self.u[i].clone(),
            });
        }
        CredalConstraints::new(self.space.clone(), rows).expect("bounds validated")
    }
}

/// The strict part of the interval order `x <_L y iff u(x) <= l(y)`.
///
/// Mutual pairs (which force both intervals to the same point) are treated
/// as ties, not as precedences, so the relation stays irreflexive and
/// acyclic and its linear extensions may order them either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartialOrder {
    space: OutcomeSpace,
    /// preds[y] = bitmask of elements strictly preceding y.
    preds: Vec<u128>,
}

impl IntervalPartialOrder {
    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.preds[y] & (1 << x) != 0
    }

    /// All strict precedence pairs `(x, y)` in storage order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.space.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.less(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Derives the interval order of a probability interval.
pub fn interval_partial_order(intervals: &ProbabilityInterval) -> IntervalPartialOrder {
    let n = intervals.space.len();
    let mut preds = vec![0u128; n];
    for (y, pred) in preds.iter_mut().enumerate() {
        for x in 0..n {
            if x == y {
                continue;
            }
            let forward = intervals.u[x] <= intervals.l[y];
            let backward = intervals.u[y] <= intervals.l[x];
            if forward && !backward {
                *pred |= 1 << x;
            }
        }
    }
    IntervalPartialOrder {
        space: intervals.space.clone(),
        preds,
    }
}

/// Streams the linear extensions of a partial order in lexicographic order
/// of storage indices. Errors when the space exceeds `cap`.
pub fn linear_extensions(
    order: &IntervalPartialOrder,
    cap: usize,
) -> Result<LinearExtensionIter, Error> {
    let n = order.space.len();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(LinearExtensionIter {
        n,
        preds: order.preds.clone(),
        prefix: Vec::with_capacity(n),
        used: 0,
        cursors: vec![0],
        done: false,
    })
}

/// Backtracking enumerator over linear extensions; see [`linear_extensions`].
pub struct LinearExtensionIter {
    n: usize,
    preds: Vec<u128>,
    prefix: Vec<usize>,
    used: u128,
    cursors: Vec<usize>,
    done: bool,
}

impl LinearExtensionIter {
    fn backtrack(&mut self) {
        if let Some(last) = self.prefix.pop() {
            self.used &= !(1 << last);
            self.cursors.pop();
        } else {
            self.done = true;
        }
    }
}

impl Iterator for LinearExtensionIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = self.prefix.clone();
                self.backtrack();
                if self.prefix.is_empty() && self.cursors.last() == Some(&self.n) {
                    self.done = true;
                }
                return Some(out);
            }
            let start = self.cursors[depth];
            let candidate = (start..self.n).find(|&c| {
                let bit = 1u128 << c;
                self.used & bit == 0 && self.preds[c] & !self.used == 0
            });
            match candidate {
                Some(c) => {
                    self.cursors[depth] = c + 1;
                    self.prefix.push(c);
                    self.used |= 1 << c;
                    self.cursors.push(0);
                }
                None => {
                    if depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.backtrack();
                }
            }
        }
    }
}

/// The chain-constrained program shared by both transformations: `p` in the
/// intervals, summing to one, nondecreasing along the extension.
fn chain_program(intervals: &ProbabilityInterval, extension: &[usize]) -> Lp {
    let n = intervals.space.len();
    let mut lp = Lp::new(n);
    lp.add(vec![Rat::one(); n], Relation::Eq, Rat::one());
    for i in 0..n {
        if intervals.l[i].is_positive() {
            let mut coeffs = vec![Rat::zero(); n];
            coeffs[i] = Rat::one();
            lp.add(coeffs, Relation::Ge, intervals.l[i].clone());
        }
        if intervals.u[i] < Rat::one() {
            let mut coeffs = vec![Rat::zero(); n];
            coeffs[i] = Rat::one();
            lp.add(coeffs, Relation::Le, intervals.u[i].clone());
        }
    }
    for w in extension.windows(2) {
        let mut coeffs = vec![Rat::zero(); n];
        coeffs[w[0]] = Rat::one();
        coeffs[w[1]] = -Rat::one();
        lp.add(coeffs, Relation::Le, Rat::zero());
    }
    lp
}

fn maximize_prefixes(
    intervals: &ProbabilityInterval,
    extension: &[usize],
    reversed: bool,
) -> Option<Vec<Rat>> {
    let n = intervals.space.len();
    let lp = chain_program(intervals, extension);
    let mut out = vec![Rat::zero(); n];
    for (rank, &element) in extension.iter().enumerate() {
        let mut objective = vec![Rat::zero(); n];
        for (r, &y) in extension.iter().enumerate() {
            let include = if reversed { r >= rank } else { r <= rank };
            if include {
                objective[y] = Rat::one();
            }
        }
        match lp.maximize(&objective) {
            LpOutcome::Optimal { value, .. } => out[element] = value,
            LpOutcome::Infeasible => return None,
            LpOutcome::Unbounded => unreachable!("probability simplex is bounded"),
        }
    }
    Some(out)
}

/// Per-extension values of the upper transformation:
/// `pi^l(x) = max sum_{rank(y) <= rank(x)} p(y)` under the chain program.
/// `None` when the extension admits no feasible chain.
pub fn md_extension_upper(
    intervals: &ProbabilityInterval,
    extension: &[usize],
) -> Option<Vec<Rat>> {
    maximize_prefixes(intervals, extension, false)
}

/// Per-extension values of the reversed-summation transformation:
/// `pi_delta^l(x) = max sum_{rank(y) >= rank(x)} p(y)`.
pub fn md_extension_lower(
    intervals: &ProbabilityInterval,
    extension: &[usize],
) -> Option<Vec<Rat>> {
    maximize_prefixes(intervals, extension, true)
}

fn md_possibility(
    intervals: &ProbabilityInterval,
    cap: usize,
    reversed: bool,
) -> Result<PossibilityDistribution, Error> {
    let order = interval_partial_order(intervals);
    let n = intervals.space.len();
    let mut best = vec![Rat::zero(); n];
    for extension in linear_extensions(&order, cap)? {
        let Some(values) = maximize_prefixes(intervals, &extension, reversed) else {
            continue;
        };
        for (b, v) in best.iter_mut().zip(values) {
            if v > *b {
                *b = v;
            }
        }
    }
    PossibilityDistribution::new(intervals.space.clone(), best)
}

/// The most informative possibility distribution dominating every
/// per-extension distribution of the upper transformation.
pub fn md_upper_possibility(
    intervals: &ProbabilityInterval,
    cap: usize,
) -> Result<PossibilityDistribution, Error> {
    md_possibility(intervals, cap, false)
}

/// The reversed-summation counterpart `pi_delta`; `1 - pi_delta` is the
/// lower distribution of the outer-approximating cloud.
pub fn md_lower_possibility(
    intervals: &ProbabilityInterval,
    cap: usize,
) -> Result<PossibilityDistribution, Error> {
    md_possibility(intervals, cap, true)
}

/// The cloud `[1 - pi_delta, pi]` outer-approximating the probability
/// interval; for a precise distribution with distinct masses its credal set
/// is that single distribution.
pub fn intervals_to_cloud(intervals: &ProbabilityInterval, cap: usize) -> Result<Cloud, Error> {
    let pi = md_upper_possibility(intervals, cap)?;
    let pi_delta = md_lower_possibility(intervals, cap)?;
    let one = Rat::one();
    let delta: Vec<Rat> = pi_delta.values().iter().map(|v| &one - v).collect();
    Cloud::new(intervals.space.clone(), delta, pi.values().to_vec())
}

/// The generalized p-box of the cumulative chain along a caller-supplied
/// total order: `flow = max(sum of l inside, 1 - sum of u outside)` and
/// `fhigh = min(sum of u inside, 1 - sum of l outside)` on each prefix.
pub fn intervals_to_genpbox(
    intervals: &ProbabilityInterval,
    order: &[usize],
) -> Result<GeneralizedPBox, Error> {
    let n = intervals.space.len();
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n || seen[i] {
            return Err(Error::BadOrder);
        }
        seen[i] = true;
    }
    if order.len() != n {
        return Err(Error::BadOrder);
    }
    let sum_l: Rat = intervals.l.iter().cloned().sum();
    let sum_u: Rat = intervals.u.iter().cloned().sum();
    let one = Rat::one();
    let mut flow = vec![Rat::zero(); n];
    let mut fhigh = vec![Rat::zero(); n];
    let mut in_l = Rat::zero();
    let mut in_u = Rat::zero();
    for &i in order {
        in_l += &intervals.l[i];
        in_u += &intervals.u[i];
        let out_l = &sum_l - &in_l;
        let out_u = &sum_u - &in_u;
        flow[i] = in_l.clone().max(&one - out_u);
        fhigh[i] = in_u.clone().min(&one - out_l);
    }
    let preorder: Vec<Vec<usize>> = order.iter().map(|&i| vec![i]).collect();
    GeneralizedPBox::new(intervals.space.clone(), flow, fhigh, preorder)
}

/// The union of the chain constraints of [`intervals_to_genpbox`] over the
/// supplied orders, merged per event. Lets callers measure the event-wise
/// gap between a family of such p-boxes and the original intervals.
pub fn multi_order_intersection(
    intervals: &ProbabilityInterval,
    orders: &[Vec<usize>],
) -> Result<CredalConstraints, Error> {
    let mut merged = CredalConstraints::empty(intervals.space.clone());
    for order in orders {
        let gpb = intervals_to_genpbox(intervals, order)?;
        merged = merged.merge(&gpb.constraints())?;
    }
    Ok(merged)
}
