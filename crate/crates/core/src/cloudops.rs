//! Cloud-specific algorithms: emptiness, comonotonicity, conversions to
//! generalized p-boxes and random sets, outer/inner approximations, and the
//! constructive 2-monotonicity-violation search.

use num::{One, Zero};

use crate::cloud::{Cloud, PossibilityDistribution};
use crate::constraints::{cloud_constraints, ConstraintRow, CredalConstraints};
use crate::credal::{
    is_2_monotone, is_feasible, lower_prob_function, lp_lower, LpResult, MassFunction, TwoMonotone,
};
use crate::error::Error;
use crate::rational::Rat;
use crate::space::{EventSet, OutcomeSpace};

/// A comonotone pair `flow <= fhigh` of cumulative-like mappings together
/// with the complete preorder (list of rank classes, ascending) that fixes
/// the nested chain of events it bounds.
///
/// The preorder is stored explicitly: distinct rank classes may share their
/// `(flow, fhigh)` pair, and collapsing them would silently drop chain
/// constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedPBox {
    space: OutcomeSpace,
    flow: Vec<Rat>,
    fhigh: Vec<Rat>,
    preorder: Vec<Vec<usize>>,
}

impl GeneralizedPBox {
    pub fn new(
        space: OutcomeSpace,
        flow: Vec<Rat>,
        fhigh: Vec<Rat>,
        preorder: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        let n = space.len();
        if flow.len() != n || fhigh.len() != n {
            return Err(Error::MissingValue(format!(
                "expected {n} values, got {} flow / {} fhigh",
                flow.len(),
                fhigh.len()
            )));
        }
        let mut seen = vec![false; n];
        for class in &preorder {
            for &i in class {
                if i >= n || seen[i] {
                    return Err(Error::BadOrder);
                }
                seen[i] = true;
            }
            if class.is_empty() {
                return Err(Error::BadOrder);
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::BadOrder);
        }
        for i in 0..n {
            if flow[i] > fhigh[i] {
                return Err(Error::FlowExceedsFhigh(space.label(i).to_owned()));
            }
        }
        // Both mappings constant on each class and nondecreasing across
        // classes; the last class must reach flow = fhigh = 1.
        let mut prev: Option<(&Rat, &Rat)> = None;
        for class in &preorder {
            let first = class[0];
            for &i in class {
                if flow[i] != flow[first] || fhigh[i] != fhigh[first] {
                    return Err(Error::PreorderInconsistent(space.label(i).to_owned()));
                }
            }
            if let Some((pf, ph)) = prev {
                if flow[first] < *pf || fhigh[first] < *ph {
                    return Err(Error::PreorderInconsistent(space.label(first).to_owned()));
                }
            }
            prev = Some((&flow[first], &fhigh[first]));
        }
        let last = *preorder.last().ok_or(Error::BadOrder)?.first().unwrap();
        if !flow[last].is_one() || !fhigh[last].is_one() {
            return Err(Error::PboxNotNormalized);
        }
        Ok(GeneralizedPBox {
            space,
            flow,
            fhigh,
            preorder,
        })
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn flow(&self, i: usize) -> &Rat {
        &self.flow[i]
    }

    pub fn fhigh(&self, i: usize) -> &Rat {
        &self.fhigh[i]
    }

    pub fn flow_values(&self) -> &[Rat] {
        &self.flow
    }

    pub fn fhigh_values(&self) -> &[Rat] {
        &self.fhigh
    }

    pub fn preorder(&self) -> &[Vec<usize>] {
        &self.preorder
    }

    /// The nested chain `A_1 subset ... subset A_K = X` of class prefixes.
    pub fn chain_events(&self) -> Vec<EventSet> {
        let mut bits = 0u128;
        let mut chain = Vec::with_capacity(self.preorder.len());
        for class in &self.preorder {
            for &i in class {
                bits |= 1 << i;
            }
            chain.push(self.space.event_from_bits(bits));
        }
        chain
    }

    /// Constraint rows `alpha_k <= P(A_k) <= beta_k` along the chain.
    pub fn constraints(&self) -> CredalConstraints {
        let mut rows = Vec::new();
        for (class, event) in self.preorder.iter().zip(self.chain_events()) {
            if event.is_empty() || event.is_full() {
                continue;
            }
            let witness = class[0];
            rows.push(ConstraintRow {
                event,
                lo: self.flow[witness].clone(),
                hi: self.fhigh[witness].clone(),
            });
        }
        CredalConstraints::new(self.space.clone(), rows).expect("bounds validated on construction")
    }
}

fn sorted_by(values: &[Rat]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]).then(a.cmp(&b)));
    order
}

/// Checks `max_{x in A} pi(x) >= min_{y not in A} delta(y)` for every event
/// by scanning the prefixes of the pi-ascending order (every prefix is
/// evaluated, including boundaries between tied elements).
fn nonempty_scan(pi: &[Rat], delta: &[Rat]) -> bool {
    let n = pi.len();
    if n <= 1 {
        return true;
    }
    let order = sorted_by(pi);
    // suffix_min[i] = min delta over order[i..].
    let mut suffix_min: Vec<Rat> = vec![Rat::one(); n];
    suffix_min[n - 1] = delta[order[n - 1]].clone();
    for i in (0..n - 1).rev() {
        suffix_min[i] = suffix_min[i + 1].clone().min(delta[order[i]].clone());
    }
    for i in 0..n - 1 {
        if pi[order[i]] < suffix_min[i + 1] {
            return false;
        }
    }
    true
}

/// Non-emptiness of a cloud's credal set via the `n - 1` prefix
/// inequalities; equivalent to LP feasibility of [`cloud_constraints`].
pub fn is_nonempty(cloud: &Cloud) -> bool {
    nonempty_scan(cloud.pi_values(), cloud.delta_values())
}

/// Non-emptiness of the intersection of two possibility credal sets:
/// `Pi_1(A) + Pi_2(A^c) >= 1` for every event, run as a prefix scan with
/// `delta := 1 - pi_2`.
pub fn pair_nonempty(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<bool, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let one = Rat::one();
    let delta: Vec<Rat> = pi2.values().iter().map(|v| &one - v).collect();
    Ok(nonempty_scan(pi1.values(), &delta))
}

/// The most restrictive lower distribution compatible with `pi` along the
/// given total order (storage indices): `delta(x_i) = pi(x_{i-1})`, zero at
/// the first element. Requires `pi` nondecreasing along the order.
pub fn tightest_lower_distribution(
    pi: &PossibilityDistribution,
    order: &[usize],
) -> Result<Cloud, Error> {
    let n = pi.space().len();
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
    for w in order.windows(2) {
        if pi.value(w[0]) > pi.value(w[1]) {
            return Err(Error::OrderInconsistent);
        }
    }
    let mut delta = vec![Rat::zero(); n];
    for (rank, &i) in order.iter().enumerate() {
        if rank > 0 {
            delta[i] = pi.value(order[rank - 1]).clone();
        }
    }
    Cloud::new(pi.space().clone(), delta, pi.values().to_vec())
}

/// True when no pair of elements is ordered oppositely by `delta` and `pi`.
pub fn is_comonotonic(cloud: &Cloud) -> bool {
    let n = cloud.space().len();
    for x in 0..n {
        for y in 0..n {
            if cloud.delta(x) < cloud.delta(y) && cloud.pi(x) > cloud.pi(y) {
                return false;
            }
        }
    }
    true
}

/// True when the family of strict upper cuts and regular lower cuts is
/// totally ordered by inclusion. Agrees with [`is_comonotonic`] on every
/// cloud.
pub fn cuts_nested(cloud: &Cloud) -> bool {
    let levels = cloud.level_values();
    let mut cuts: Vec<EventSet> = Vec::new();
    for gamma in levels.values() {
        cuts.push(cloud.upper_cut(gamma, true).expect("level in range"));
        cuts.push(cloud.lower_cut(gamma, false).expect("level in range"));
    }
    cuts.sort_by_key(|e| e.len());
    cuts.windows(2).all(|w| w[0].is_subset(w[1]))
}

/// Rank classes of the complete preorder jointly induced by `(delta, pi)`,
/// ascending. Two elements share a class exactly when their value pairs
/// coincide. Fails on non-comonotonic clouds, where the joint preorder is
/// not complete.
fn joint_preorder(cloud: &Cloud) -> Result<Vec<Vec<usize>>, Error> {
    if !is_comonotonic(cloud) {
        return Err(Error::NotComonotone);
    }
    let n = cloud.space().len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        cloud
            .delta(a)
            .cmp(cloud.delta(b))
            .then_with(|| cloud.pi(a).cmp(cloud.pi(b)))
            .then(a.cmp(&b))
    });
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match classes.last_mut() {
            Some(class)
                if cloud.delta(class[0]) == cloud.delta(i) && cloud.pi(class[0]) == cloud.pi(i) =>
            {
                class.push(i)
            }
            _ => classes.push(vec![i]),
        }
    }
    Ok(classes)
}

/// Encodes a comonotonic cloud as the generalized p-box with the same
/// credal set: `fhigh = pi`, and `flow(x)` is the least `delta` strictly
/// above `x` in the joint preorder (1 past the top).
///
/// Errors with [`Error::NotComonotone`] on non-comonotonic input and with
/// [`Error::EmptyCredalSet`] when the cloud is comonotonic but empty (the
/// translation would need `flow > fhigh`).
pub fn cloud_to_genpbox(cloud: &Cloud) -> Result<GeneralizedPBox, Error> {
    let classes = joint_preorder(cloud)?;
    let n = cloud.space().len();
    let mut flow = vec![Rat::one(); n];
    let fhigh = cloud.pi_values().to_vec();
    for (k, class) in classes.iter().enumerate() {
        let above = classes.get(k + 1).map(|next| cloud.delta(next[0]).clone());
        let alpha = above.unwrap_or_else(Rat::one);
        for &i in class {
            if alpha > fhigh[i] {
                return Err(Error::EmptyCredalSet);
            }
            flow[i] = alpha.clone();
        }
    }
    GeneralizedPBox::new(cloud.space().clone(), flow, fhigh, classes)
}

/// The comonotonic cloud with the same credal set as a generalized p-box:
/// `pi = fhigh`, and `delta(x)` is the largest `flow` strictly below `x` in
/// the preorder (0 below the bottom class).
pub fn genpbox_to_cloud(gpb: &GeneralizedPBox) -> Cloud {
    let n = gpb.space().len();
    let mut delta = vec![Rat::zero(); n];
    let classes = gpb.preorder();
    for (k, class) in classes.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let below = gpb.flow(classes[k - 1][0]).clone();
        for &i in class {
            delta[i] = below.clone();
        }
    }
    Cloud::new(gpb.space().clone(), delta, gpb.fhigh_values().to_vec())
        .expect("p-box invariants guarantee a valid cloud")
}

/// The random set with focal sets `E_j = B_{gamma_j} \ C_{gamma_j}` and
/// masses `gamma_j - gamma_{j-1}`. Exact for comonotonic clouds, an inner
/// approximation otherwise. Equal focal sets merge by summing masses.
pub fn cloud_to_randomset(cloud: &Cloud) -> Result<MassFunction, Error> {
    let levels = cloud.level_values();
    let gammas = levels.values();
    let mut focal = Vec::new();
    for j in 1..gammas.len() {
        let b = cloud.upper_cut(&gammas[j], false).expect("level in range");
        let c = cloud.lower_cut(&gammas[j], false).expect("level in range");
        let event = b.difference(c);
        if event.is_empty() {
            return Err(Error::EmptyFocal(j));
        }
        focal.push((event, &gammas[j] - &gammas[j - 1]));
    }
    MassFunction::new(cloud.space().clone(), focal)
}

/// The possibility/necessity outer bounds on `P(A)`:
/// `(max(N_pi, N_{1-delta}), min(Pi_pi, Pi_{1-delta}))`. Always contains
/// the exact interval `[lp_lower, lp_upper]` when the cloud is non-empty.
pub fn outer_bounds(cloud: &Cloud, event: EventSet) -> (Rat, Rat) {
    let (upper, complement) = cloud.possibility_pair();
    let lo = upper.necessity(event).max(complement.necessity(event));
    let hi = upper.possibility(event).min(complement.possibility(event));
    (lo, hi)
}

/// Searches for a pair of events witnessing that the cloud's lower
/// probability is not 2-monotone.
///
/// The constructive candidates `(B-bar_i, C_j^c)` from just-overlapping cut
/// pairs are tried first and verified with four exact LPs; if none is
/// confirmed, the exhaustive pair scan runs. `Ok(None)` means 2-monotone.
pub fn find_2monotone_violation(
    cloud: &Cloud,
    set_function_cap: usize,
    pair_scan_cap: usize,
) -> Result<Option<(EventSet, EventSet)>, Error> {
    let constraints = cloud_constraints(cloud);
    if !is_feasible(&constraints) {
        return Err(Error::EmptyCredalSet);
    }
    let levels = cloud.level_values();
    let gammas = levels.values();
    let full = cloud.space().full_event();

    let lower = |event: EventSet| -> Rat {
        match lp_lower(&constraints, event) {
            LpResult::Feasible(v) => v,
            LpResult::Infeasible => unreachable!("feasibility checked above"),
        }
    };

    for gamma_i in gammas {
        let b = cloud.upper_cut(gamma_i, true).expect("level in range");
        for gamma_j in gammas {
            let c = cloud.lower_cut(gamma_j, false).expect("level in range");
            let inter = b.intersection(c);
            if inter.is_empty() || inter == b || inter == c || b.union(c) == full {
                continue;
            }
            let (a_ev, b_ev) = (b, c.complement());
            let lhs = lower(a_ev) + lower(b_ev);
            let rhs = lower(a_ev.union(b_ev)) + lower(a_ev.intersection(b_ev));
            if lhs > rhs {
                return Ok(Some((a_ev, b_ev)));
            }
        }
    }

    let f = lower_prob_function(&constraints, set_function_cap)?;
    match is_2_monotone(&f, pair_scan_cap)? {
        TwoMonotone::Yes => Ok(None),
        TwoMonotone::CounterExample(a, b) => Ok(Some((a, b))),
    }
}
