//! Shared fixtures, random model generators and the vertex-enumeration
//! oracle used by the integration suites.

#![allow(dead_code)]

use credal_core::rational::{rat, rint, Rat};
use credal_core::{Cloud, CredalConstraints, EventSet, OutcomeSpace, ProbabilityInterval};
use num::{One, Zero};
use rand::Rng;

/// The six-element comonotonic cloud used throughout the worked examples.
pub fn comonotone_cloud() -> Cloud {
    let space = OutcomeSpace::new(["u", "v", "w", "x", "y", "z"]).unwrap();
    Cloud::new(
        space,
        vec![rat(1, 2), rat(1, 2), rat(3, 4), rat(1, 2), rint(0), rint(0)],
        vec![rat(3, 4), rint(1), rint(1), rat(3, 4), rat(3, 4), rat(1, 2)],
    )
    .unwrap()
}

/// The five-element non-comonotonic cloud whose lower probability is not
/// 2-monotone.
pub fn noncomonotone_cloud() -> Cloud {
    let space = OutcomeSpace::new(["v", "w", "x", "y", "z"]).unwrap();
    Cloud::new(
        space,
        vec![rint(0), rat(1, 2), rat(1, 4), rint(0), rint(0)],
        vec![rint(1), rint(1), rat(1, 2), rat(1, 2), rat(1, 4)],
    )
    .unwrap()
}

/// The four-level construction where the possibility/necessity outer bound
/// degenerates to 0 on `B-bar_1 ∩ C_2^c` while the exact lower probability
/// is `gamma_2 - gamma_1 = 1/4`.
pub fn outer_gap_cloud() -> Cloud {
    let space = OutcomeSpace::new(["a", "b", "c", "d"]).unwrap();
    Cloud::new(
        space,
        vec![rint(0), rat(1, 2), rat(1, 4), rint(0)],
        vec![rint(1), rint(1), rat(1, 2), rat(1, 4)],
    )
    .unwrap()
}

pub fn vacuous_cloud(n: usize) -> Cloud {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    Cloud::new(space, vec![rint(0); n], vec![rint(1); n]).unwrap()
}

/// The probability interval of the transformation examples:
/// w [0.10, 0.28], x [0.34, 0.56], y [0.25, 0.46], z [0, 0.08].
pub fn md_intervals() -> ProbabilityInterval {
    let space = OutcomeSpace::new(["w", "x", "y", "z"]).unwrap();
    ProbabilityInterval::new(
        space,
        vec![rat(1, 10), rat(17, 50), rat(1, 4), rint(0)],
        vec![rat(7, 25), rat(14, 25), rat(23, 50), rat(2, 25)],
    )
    .unwrap()
}

fn random_unit(rng: &mut impl Rng, denom: i64) -> Rat {
    rat(rng.gen_range(0..=denom), denom)
}

/// A random valid cloud with values on a small grid.
pub fn random_cloud(rng: &mut impl Rng, n: usize, denom: i64) -> Cloud {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    let mut pi: Vec<Rat> = (0..n).map(|_| random_unit(rng, denom)).collect();
    pi[rng.gen_range(0..n)] = Rat::one();
    let mut delta: Vec<Rat> = pi
        .iter()
        .map(|p| {
            let cap = (p * rint(denom)).to_integer();
            let cap: i64 = i64::try_from(&cap).unwrap();
            rat(rng.gen_range(0..=cap), denom)
        })
        .collect();
    delta[rng.gen_range(0..n)] = Rat::zero();
    Cloud::new(space, delta, pi).unwrap()
}

/// A random thin cloud (`delta = pi`); always induces an empty credal set
/// on a finite space.
pub fn random_thin_cloud(rng: &mut impl Rng, n: usize, denom: i64) -> Cloud {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    let mut pi: Vec<Rat> = (0..n).map(|_| random_unit(rng, denom)).collect();
    pi[rng.gen_range(0..n)] = Rat::one();
    let zero_at = rng.gen_range(0..n);
    pi[zero_at] = Rat::zero();
    if !pi.iter().any(|v| v.is_one()) {
        let at = (zero_at + 1) % n;
        pi[at] = Rat::one();
    }
    Cloud::new(space, pi.clone(), pi).unwrap()
}

/// A random cloud at (or one grid step around) the tightest lower
/// distribution `delta_pi` for an injective pi: `bump = 0` sits exactly on
/// the non-emptiness boundary, `+1` pushes one value above it (empty),
/// `-1` relaxes one value (still non-empty).
pub fn random_boundary_cloud(rng: &mut impl Rng, n: usize, bump: i64) -> Cloud {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    let denom = 2 * n as i64 + 2;
    // Injective nondecreasing pi along a random permutation.
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut steps: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(1..=2)).collect();
    steps.push(0);
    let total: i64 = steps.iter().sum();
    let mut pi = vec![Rat::zero(); n];
    let mut acc = denom - total;
    for (rank, &element) in order.iter().enumerate() {
        pi[element] = rat(acc, denom);
        acc += steps[rank];
    }
    let mut delta = vec![Rat::zero(); n];
    for (rank, &element) in order.iter().enumerate() {
        if rank > 0 {
            delta[element] = pi[order[rank - 1]].clone();
        }
    }
    if bump != 0 && n >= 2 {
        let rank = rng.gen_range(1..n);
        let element = order[rank];
        let stepped = &delta[element] + rat(bump, denom);
        if stepped >= Rat::zero() && stepped <= pi[element] {
            delta[element] = stepped;
        }
    }
    Cloud::new(space, delta, pi).unwrap()
}

/// A random non-empty comonotonic cloud: per rank class, `pi` is kept at
/// least as large as the next class's `delta`.
pub fn random_comonotonic_cloud(rng: &mut impl Rng, n: usize, denom: i64) -> Cloud {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    let classes = rng.gen_range(1..=n);
    let mut assignment: Vec<usize> = (0..n).map(|i| i % classes).collect();
    for i in (1..n).rev() {
        assignment.swap(i, rng.gen_range(0..=i));
    }
    let mut deltas: Vec<i64> = (0..classes).map(|_| rng.gen_range(0..=denom)).collect();
    deltas.sort();
    deltas[0] = 0;
    let mut pis: Vec<i64> = Vec::with_capacity(classes);
    let mut prev = 0i64;
    for k in 0..classes {
        let next_delta = if k + 1 < classes {
            deltas[k + 1]
        } else {
            denom
        };
        let floor = prev.max(next_delta).max(deltas[k]);
        let p = rng.gen_range(floor..=denom);
        pis.push(p);
        prev = p;
    }
    *pis.last_mut().unwrap() = denom;
    let delta: Vec<Rat> = assignment.iter().map(|&k| rat(deltas[k], denom)).collect();
    let pi: Vec<Rat> = assignment.iter().map(|&k| rat(pis[k], denom)).collect();
    Cloud::new(space, delta, pi).unwrap()
}

/// A random normalized possibility distribution on a small grid.
pub fn random_possibility(
    rng: &mut impl Rng,
    n: usize,
    denom: i64,
) -> credal_core::PossibilityDistribution {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    let mut pi: Vec<Rat> = (0..n).map(|_| random_unit(rng, denom)).collect();
    pi[rng.gen_range(0..n)] = Rat::one();
    credal_core::PossibilityDistribution::new(space, pi).unwrap()
}

/// A random probability interval built around a random distribution, so
/// the credal set is never empty.
pub fn random_probability_interval(rng: &mut impl Rng, n: usize) -> ProbabilityInterval {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    let mut l = Vec::with_capacity(n);
    let mut u = Vec::with_capacity(n);
    for w in weights {
        let p = rat(w, total);
        let slack_down = rat(rng.gen_range(0..=w), 2 * total);
        let slack_up = rat(rng.gen_range(0..=3), 2 * total);
        l.push((&p - slack_down).max(Rat::zero()));
        u.push((&p + slack_up).min(Rat::one()));
    }
    ProbabilityInterval::new(space, l, u).unwrap()
}

/// A random precise distribution with pairwise-distinct masses.
pub fn random_precise_distinct(rng: &mut impl Rng, n: usize) -> ProbabilityInterval {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let space = OutcomeSpace::new(labels).unwrap();
    let mut weights: Vec<i64> = Vec::with_capacity(n);
    while weights.len() < n {
        let w = rng.gen_range(1..=40);
        if !weights.contains(&w) {
            weights.push(w);
        }
    }
    let total: i64 = weights.iter().sum();
    let p: Vec<Rat> = weights.into_iter().map(|w| rat(w, total)).collect();
    ProbabilityInterval::new(space, p.clone(), p).unwrap()
}

// ---------------------------------------------------------------------------
// Vertex-enumeration oracle: solves min/max P(A) by enumerating all basic
// feasible points of the constraint polytope with exact Gaussian
// elimination. Independent of the simplex implementation.
// ---------------------------------------------------------------------------

/// Solves the square system `m x = b` exactly; `None` when singular.
fn solve_square(mut m: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rat::one() / m[col][col].clone();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let pivot_row = m[col].clone();
            for (c, cell) in m[r].iter_mut().enumerate() {
                let delta = &factor * &pivot_row[c];
                *cell -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

struct Halfspace {
    coeffs: Vec<Rat>,
    rhs: Rat,
    // coeffs . p >= rhs when true, <= otherwise
    lower: bool,
}

impl Halfspace {
    fn satisfied(&self, p: &[Rat]) -> bool {
        let value: Rat = self.coeffs.iter().zip(p).map(|(c, x)| c * x).sum();
        if self.lower {
            value >= self.rhs
        } else {
            value <= self.rhs
        }
    }
}

/// `(lower, upper)` of `P(event)` over the polytope, or `None` when empty.
pub fn vertex_oracle(constraints: &CredalConstraints, event: EventSet) -> Option<(Rat, Rat)> {
    let n = constraints.space().len();
    let mut halfspaces: Vec<Halfspace> = Vec::new();
    for i in 0..n {
        let mut coeffs = vec![Rat::zero(); n];
        coeffs[i] = Rat::one();
        halfspaces.push(Halfspace {
            coeffs,
            rhs: Rat::zero(),
            lower: true,
        });
    }
    for row in constraints.rows() {
        let mut coeffs = vec![Rat::zero(); n];
        for i in row.event.iter() {
            coeffs[i] = Rat::one();
        }
        halfspaces.push(Halfspace {
            coeffs: coeffs.clone(),
            rhs: row.lo.clone(),
            lower: true,
        });
        halfspaces.push(Halfspace {
            coeffs,
            rhs: row.hi.clone(),
            lower: false,
        });
    }

    let mut best: Option<(Rat, Rat)> = None;
    let k = halfspaces.len();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    fn build(
        subsets: &mut Vec<Vec<usize>>,
        current: &mut Vec<usize>,
        start: usize,
        left: usize,
        k: usize,
    ) {
        if left == 0 {
            subsets.push(current.clone());
            return;
        }
        for i in start..k {
            current.push(i);
            build(subsets, current, i + 1, left - 1, k);
            current.pop();
        }
    }
    build(&mut subsets, &mut Vec::new(), 0, n - 1, k);

    for subset in subsets {
        let mut m = vec![vec![Rat::one(); n]];
        let mut b = vec![Rat::one()];
        for &i in &subset {
            m.push(halfspaces[i].coeffs.clone());
            b.push(halfspaces[i].rhs.clone());
        }
        let Some(p) = solve_square(m, b) else {
            continue;
        };
        if !halfspaces.iter().all(|h| h.satisfied(&p)) {
            continue;
        }
        let value: Rat = event.iter().map(|i| p[i].clone()).sum();
        best = Some(match best {
            None => (value.clone(), value),
            Some((lo, hi)) => (lo.min(value.clone()), hi.max(value)),
        });
    }
    best
}
