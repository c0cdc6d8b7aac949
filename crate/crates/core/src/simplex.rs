//! Exact two-phase primal simplex over big rationals.
//!
//! Bland's rule everywhere: entering variable is the lowest-index column
//! with a negative reduced cost, the leaving row breaks ratio ties by the
//! lowest basic-variable index. That makes cycling impossible and every
//! run bit-identical.

use num::{One, Signed, Zero};

use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, x: Vec<Rat> },
    Infeasible,
    Unbounded,
}

/// A linear program over `n` nonnegative structural variables.
#[derive(Debug, Clone)]
pub struct Lp {
    n: usize,
    rows: Vec<(Vec<Rat>, Relation, Rat)>,
}

impl Lp {
    pub fn new(n: usize) -> Self {
        Lp {
            n,
            rows: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<Rat>, relation: Relation, rhs: Rat) {
        debug_assert_eq!(coeffs.len(), self.n);
        self.rows.push((coeffs, relation, rhs));
    }

    /// Minimizes `objective . x` subject to the accumulated rows and `x >= 0`.
    pub fn minimize(&self, objective: &[Rat]) -> LpOutcome {
        debug_assert_eq!(objective.len(), self.n);
        Tableau::build(self).solve(objective)
    }

    /// Maximizes `objective . x`; same machinery with the sign flipped.
    pub fn maximize(&self, objective: &[Rat]) -> LpOutcome {
        let negated: Vec<Rat> = objective.iter().map(|c| -c).collect();
        match self.minimize(&negated) {
            LpOutcome::Optimal { value, x } => LpOutcome::Optimal { value: -value, x },
            other => other,
        }
    }

    /// True when the feasible region is non-empty (phase 1 only).
    pub fn is_feasible(&self) -> bool {
        !matches!(
            self.minimize(&vec![Rat::zero(); self.n]),
            LpOutcome::Infeasible
        )
    }
}

struct Tableau {
    /// rows[r] has `cols` coefficients followed by the rhs.
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    n_structural: usize,
    cols: usize,
}

impl Tableau {
    /// Standard form: slack/surplus columns appended, rhs made nonnegative,
    /// then one artificial per row forming the starting basis.
    fn build(lp: &Lp) -> Tableau {
        let m = lp.rows.len();
        let n = lp.n;
        let n_slack = lp
            .rows
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Eq)
            .count();
        let cols = n + n_slack + m;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack_at = n;
        for (r, (coeffs, relation, rhs)) in lp.rows.iter().enumerate() {
            let mut row = vec![Rat::zero(); cols + 1];
            row[..n].clone_from_slice(coeffs);
            match relation {
                Relation::Le => {
                    row[slack_at] = Rat::one();
                    slack_at += 1;
                }
                Relation::Ge => {
                    row[slack_at] = -Rat::one();
                    slack_at += 1;
                }
                Relation::Eq => {}
            }
            row[cols] = rhs.clone();
            if row[cols].is_negative() {
                for v in row.iter_mut() {
                    let negated = -&*v;
                    *v = negated;
                }
            }
            let artificial = n + n_slack + r;
            row[artificial] = Rat::one();
            basis.push(artificial);
            rows.push(row);
        }
        Tableau {
            rows,
            basis,
            n_structural: n,
            cols,
        }
    }

    fn solve(mut self, objective: &[Rat]) -> LpOutcome {
        let first_artificial = self.cols - self.rows.len();

        // Phase 1: minimize the sum of artificials.
        let mut phase1 = vec![Rat::zero(); self.cols];
        for c in phase1.iter_mut().take(self.cols).skip(first_artificial) {
            *c = Rat::one();
        }
        if self.optimize(&phase1, self.cols) == Step::Unbounded {
            unreachable!("phase-1 objective is bounded below by zero");
        }
        let residue = self.objective_value(&phase1);
        if !residue.is_zero() {
            return LpOutcome::Infeasible;
        }
        self.evict_artificials(first_artificial);

        // Phase 2 over the original columns only.
        let mut cost = vec![Rat::zero(); self.cols];
        cost[..self.n_structural].clone_from_slice(objective);
        if self.optimize(&cost, first_artificial) == Step::Unbounded {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Rat::zero(); self.n_structural];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.n_structural {
                x[b] = self.rows[r][self.cols].clone();
            }
        }
        LpOutcome::Optimal {
            value: self.objective_value(&cost),
            x,
        }
    }

    fn objective_value(&self, cost: &[Rat]) -> Rat {
        let mut value = Rat::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                value += &cost[b] * &self.rows[r][self.cols];
            }
        }
        value
    }

    /// Runs simplex iterations until optimal or unbounded, considering only
    /// columns below `col_limit` as candidates to enter.
    fn optimize(&mut self, cost: &[Rat], col_limit: usize) -> Step {
        loop {
            let reduced = self.reduced_costs(cost, col_limit);
            let entering = reduced
                .iter()
                .enumerate()
                .find(|(_, c)| c.is_negative())
                .map(|(j, _)| j);
            let Some(entering) = entering else {
                return Step::Optimal;
            };
            let Some(leaving) = self.leaving_row(entering) else {
                return Step::Unbounded;
            };
            self.pivot(leaving, entering);
        }
    }

    fn reduced_costs(&self, cost: &[Rat], col_limit: usize) -> Vec<Rat> {
        // c_j - c_B . B^{-1} A_j, computed directly off the current tableau.
        let mut reduced: Vec<Rat> = cost[..col_limit].to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            let row = &self.rows[r];
            for (j, red) in reduced.iter_mut().enumerate() {
                if !row[j].is_zero() {
                    *red -= &cost[b] * &row[j];
                }
            }
        }
        reduced
    }

    fn leaving_row(&self, entering: usize) -> Option<usize> {
        let mut best: Option<(Rat, usize, usize)> = None; // (ratio, basis var, row)
        for (r, row) in self.rows.iter().enumerate() {
            if row[entering].is_positive() {
                let ratio = &row[self.cols] / &row[entering];
                let candidate = (ratio, self.basis[r], r);
                best = match best {
                    None => Some(candidate),
                    Some(current) => {
                        if candidate.0 < current.0
                            || (candidate.0 == current.0 && candidate.1 < current.1)
                        {
                            Some(candidate)
                        } else {
                            Some(current)
                        }
                    }
                };
            }
        }
        best.map(|(_, _, r)| r)
    }

    fn pivot(&mut self, leaving: usize, entering: usize) {
        let inv = {
            let cell = &self.rows[leaving][entering];
            Rat::one() / cell
        };
        for v in self.rows[leaving].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[leaving].clone();
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r == leaving || row[entering].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut row[entering], Rat::zero());
            for (j, v) in row.iter_mut().enumerate() {
                if j != entering && !pivot_row[j].is_zero() {
                    *v -= &factor * &pivot_row[j];
                }
            }
        }
        self.basis[leaving] = entering;
    }

    /// After a zero-residue phase 1, pivots basic artificials out; rows where
    /// that is impossible are redundant and get dropped.
    fn evict_artificials(&mut self, first_artificial: usize) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < first_artificial {
                r += 1;
                continue;
            }
            let entering = (0..first_artificial).find(|&j| !self.rows[r][j].is_zero());
            match entering {
                Some(j) => {
                    self.pivot(r, j);
                    r += 1;
                }
                None => {
                    self.rows.remove(r);
                    self.basis.remove(r);
                }
            }
        }
    }
}

#[derive(Debug, PartialEq, Eq, Clone, Copy)]
enum Step {
    Optimal,
    Unbounded,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    #[test]
    fn solves_a_textbook_problem() {
        // max 2x + 3y st x + y <= 4, x + 3y <= 6  =>  x = 3, y = 1.
        let mut lp = Lp::new(2);
        lp.add(vec![rint(1), rint(1)], Relation::Le, rint(4));
        lp.add(vec![rint(1), rint(3)], Relation::Le, rint(6));
        match lp.maximize(&[rint(2), rint(3)]) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, rint(9));
                assert_eq!(x, vec![rint(3), rint(1)]);
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn detects_infeasibility() {
        let mut lp = Lp::new(1);
        lp.add(vec![rint(1)], Relation::Ge, rint(2));
        lp.add(vec![rint(1)], Relation::Le, rint(1));
        assert_eq!(lp.minimize(&[rint(0)]), LpOutcome::Infeasible);
        assert!(!lp.is_feasible());
    }

    #[test]
    fn detects_unboundedness() {
        let mut lp = Lp::new(2);
        lp.add(vec![rint(1), -rint(1)], Relation::Le, rint(1));
        assert_eq!(lp.minimize(&[-rint(1), rint(0)]), LpOutcome::Unbounded);
    }

    #[test]
    fn handles_redundant_equalities() {
        let mut lp = Lp::new(2);
        lp.add(vec![rint(1), rint(1)], Relation::Eq, rint(1));
        lp.add(vec![rint(2), rint(2)], Relation::Eq, rint(2));
        match lp.minimize(&[rint(1), rint(2)]) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, rint(1));
                assert_eq!(x, vec![rint(1), rint(0)]);
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn exact_fractions_survive() {
        // min x st x >= 1/3, over the segment x + y = 1.
        let mut lp = Lp::new(2);
        lp.add(vec![rint(1), rint(1)], Relation::Eq, rint(1));
        lp.add(vec![rint(1), rint(0)], Relation::Ge, rat(1, 3));
        match lp.minimize(&[rint(1), rint(0)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1, 3)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
