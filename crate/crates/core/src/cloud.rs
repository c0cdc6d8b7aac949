//! Clouds and possibility distributions on finite spaces, with the level-cut
//! machinery both are built from.

use num::{One, Zero};

use crate::error::Error;
use crate::rational::{in_unit, Rat};
use crate::space::{EventSet, OutcomeSpace};

/// A pair of distributions `delta <= pi` with `pi` reaching 1 and `delta`
/// reaching 0. `delta` is the lower distribution, `pi` the upper one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cloud {
    space: OutcomeSpace,
    delta: Vec<Rat>,
    pi: Vec<Rat>,
}

impl Cloud {
    /// Builds a cloud from per-element values in storage order, checking
    /// every invariant of the representation.
    pub fn new(space: OutcomeSpace, delta: Vec<Rat>, pi: Vec<Rat>) -> Result<Self, Error> {
        let n = space.len();
        if delta.len() != n || pi.len() != n {
            return Err(Error::MissingValue(format!(
                "expected {n} values, got {} delta / {} pi",
                delta.len(),
                pi.len()
            )));
        }
        for i in 0..n {
            for v in [&delta[i], &pi[i]] {
                if !in_unit(v) {
                    return Err(Error::ValueOutOfUnit {
                        element: space.label(i).to_owned(),
                        value: v.to_string(),
                    });
                }
            }
            if delta[i] > pi[i] {
                return Err(Error::DeltaExceedsPi(space.label(i).to_owned()));
            }
        }
        if !pi.iter().any(|v| v.is_one()) {
            return Err(Error::PiNotNormalized);
        }
        if !delta.iter().any(|v| v.is_zero()) {
            return Err(Error::DeltaNeverZero);
        }
        Ok(Cloud { space, delta, pi })
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn delta(&self, i: usize) -> &Rat {
        &self.delta[i]
    }

    pub fn pi(&self, i: usize) -> &Rat {
        &self.pi[i]
    }

    pub fn delta_values(&self) -> &[Rat] {
        &self.delta
    }

    pub fn pi_values(&self) -> &[Rat] {
        &self.pi
    }

    /// The sorted distinct values taken by `delta` and `pi`, together with
    /// the boundary values 0 and 1.
    pub fn level_values(&self) -> LevelSequence {
        let mut gammas: Vec<Rat> = Vec::with_capacity(2 * self.space.len() + 2);
        gammas.push(Rat::zero());
        gammas.push(Rat::one());
        gammas.extend(self.delta.iter().cloned());
        gammas.extend(self.pi.iter().cloned());
        gammas.sort();
        gammas.dedup();
        LevelSequence { gammas }
    }

    /// The cut of the upper distribution at `gamma`: `{x : pi(x) > gamma}`
    /// when strict, `{x : pi(x) >= gamma}` otherwise.
    pub fn upper_cut(&self, gamma: &Rat, strict: bool) -> Result<EventSet, Error> {
        cut(&self.space, &self.pi, gamma, strict)
    }

    /// The cut of the lower distribution at `gamma`, as [`Cloud::upper_cut`]
    /// but over `delta`.
    pub fn lower_cut(&self, gamma: &Rat, strict: bool) -> Result<EventSet, Error> {
        cut(&self.space, &self.delta, gamma, strict)
    }

    /// The mirror cloud `[1 - pi, 1 - delta]`, which induces the same
    /// credal set.
    pub fn mirror(&self) -> Cloud {
        let one = Rat::one();
        Cloud {
            space: self.space.clone(),
            delta: self.pi.iter().map(|v| &one - v).collect(),
            pi: self.delta.iter().map(|v| &one - v).collect(),
        }
    }

    /// The pair of possibility distributions `(pi, 1 - delta)` whose credal
    /// sets intersect to this cloud's credal set.
    pub fn possibility_pair(&self) -> (PossibilityDistribution, PossibilityDistribution) {
        let one = Rat::one();
        let upper = PossibilityDistribution {
            space: self.space.clone(),
            pi: self.pi.clone(),
        };
        let complement = PossibilityDistribution {
            space: self.space.clone(),
            pi: self.delta.iter().map(|v| &one - v).collect(),
        };
        (upper, complement)
    }

    /// True when `delta = pi` pointwise.
    pub fn is_thin(&self) -> bool {
        self.delta == self.pi
    }

    /// True when `delta = 0` everywhere.
    pub fn is_fuzzy(&self) -> bool {
        self.delta.iter().all(Rat::is_zero)
    }
}

fn cut(space: &OutcomeSpace, values: &[Rat], gamma: &Rat, strict: bool) -> Result<EventSet, Error> {
    if !in_unit(gamma) {
        return Err(Error::LevelOutOfRange(gamma.to_string()));
    }
    let mut bits = 0u128;
    for (i, v) in values.iter().enumerate() {
        let inside = if strict { v > gamma } else { v >= gamma };
        if inside {
            bits |= 1 << i;
        }
    }
    Ok(space.event_from_bits(bits))
}

/// The ordered distinct levels `0 = gamma_0 < ... < gamma_M = 1` of a cloud.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSequence {
    gammas: Vec<Rat>,
}

impl LevelSequence {
    pub fn values(&self) -> &[Rat] {
        &self.gammas
    }

    /// Number of levels above 0, i.e. the `M` in `gamma_0..gamma_M`.
    pub fn top_index(&self) -> usize {
        self.gammas.len() - 1
    }
}

/// A normalized mapping `pi : X -> [0,1]` with `max pi = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PossibilityDistribution {
    space: OutcomeSpace,
    pi: Vec<Rat>,
}

impl PossibilityDistribution {
    pub fn new(space: OutcomeSpace, pi: Vec<Rat>) -> Result<Self, Error> {
        if pi.len() != space.len() {
            return Err(Error::MissingValue(format!(
                "expected {} values, got {}",
                space.len(),
                pi.len()
            )));
        }
        for (i, v) in pi.iter().enumerate() {
            if !in_unit(v) {
                return Err(Error::ValueOutOfUnit {
                    element: space.label(i).to_owned(),
                    value: v.to_string(),
                });
            }
        }
        if !pi.iter().any(|v| v.is_one()) {
            return Err(Error::PiNotNormalized);
        }
        Ok(PossibilityDistribution { space, pi })
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn value(&self, i: usize) -> &Rat {
        &self.pi[i]
    }

    pub fn values(&self) -> &[Rat] {
        &self.pi
    }

    /// `Pi(A) = max_{x in A} pi(x)`, 0 on the empty event.
    pub fn possibility(&self, event: EventSet) -> Rat {
        event
            .iter()
            .map(|i| self.pi[i].clone())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// `N(A) = 1 - Pi(A^c)`.
    pub fn necessity(&self, event: EventSet) -> Rat {
        Rat::one() - self.possibility(event.complement())
    }

    /// Strict cut `{x : pi(x) > gamma}`.
    pub fn strict_cut(&self, gamma: &Rat) -> Result<EventSet, Error> {
        cut(&self.space, &self.pi, gamma, true)
    }

    /// Sorted distinct values taken by `pi`, with 0 prepended when absent.
    pub fn levels_with_zero(&self) -> Vec<Rat> {
        let mut levels: Vec<Rat> = self.pi.to_vec();
        levels.push(Rat::zero());
        levels.sort();
        levels.dedup();
        levels
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    pub(crate) fn comonotone_cloud() -> Cloud {
        let space = OutcomeSpace::new(["u", "v", "w", "x", "y", "z"]).unwrap();
        Cloud::new(
            space,
            vec![rat(1, 2), rat(1, 2), rat(3, 4), rat(1, 2), rint(0), rint(0)],
            vec![rat(3, 4), rint(1), rint(1), rat(3, 4), rat(3, 4), rat(1, 2)],
        )
        .unwrap()
    }

    fn vacuous(n: usize) -> Cloud {
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let space = OutcomeSpace::new(labels).unwrap();
        Cloud::new(space, vec![rint(0); n], vec![rint(1); n]).unwrap()
    }

    #[test]
    fn invariants_are_enforced() {
        let space = OutcomeSpace::new(["a", "b"]).unwrap();
        assert_eq!(
            Cloud::new(
                space.clone(),
                vec![rat(3, 4), rint(0)],
                vec![rat(1, 2), rint(1)]
            )
            .unwrap_err(),
            Error::DeltaExceedsPi("a".into())
        );
        assert_eq!(
            Cloud::new(
                space.clone(),
                vec![rint(0), rint(0)],
                vec![rat(1, 2), rat(1, 2)]
            )
            .unwrap_err(),
            Error::PiNotNormalized
        );
        assert_eq!(
            Cloud::new(space, vec![rat(1, 4), rat(1, 2)], vec![rint(1), rint(1)]).unwrap_err(),
            Error::DeltaNeverZero
        );
    }

    #[test]
    fn worked_cloud_levels() {
        let cloud = comonotone_cloud();
        let levels = cloud.level_values();
        assert_eq!(levels.values(), &[rint(0), rat(1, 2), rat(3, 4), rint(1)]);
        assert_eq!(levels.top_index(), 3);
    }

    #[test]
    fn vacuous_levels_are_boundaries_only() {
        assert_eq!(vacuous(3).level_values().values(), &[rint(0), rint(1)]);
    }

    #[test]
    fn random_levels_match_scan_oracle() {
        // Independent oracle: collect values by direct scan, then sort+dedupe.
        let space = OutcomeSpace::new(["a", "b", "c", "d", "e"]).unwrap();
        let delta = vec![rint(0), rat(1, 5), rat(1, 5), rat(2, 5), rat(3, 5)];
        let pi = vec![rat(2, 5), rat(3, 5), rint(1), rat(4, 5), rint(1)];
        let cloud = Cloud::new(space, delta.clone(), pi.clone()).unwrap();
        let mut expected: Vec<Rat> = delta.into_iter().chain(pi).collect();
        expected.push(rint(0));
        expected.push(rint(1));
        expected.sort();
        expected.dedup();
        assert_eq!(cloud.level_values().values(), &expected[..]);
    }

    #[test]
    fn worked_cloud_cuts() {
        let cloud = comonotone_cloud();
        let space = cloud.space().clone();
        assert_eq!(
            cloud.upper_cut(&rat(3, 4), true).unwrap(),
            space.event(["v", "w"]).unwrap()
        );
        assert_eq!(
            cloud.lower_cut(&rat(1, 2), false).unwrap(),
            space.event(["u", "v", "w", "x"]).unwrap()
        );
        assert_eq!(
            cloud.upper_cut(&rint(0), false).unwrap(),
            space.full_event()
        );
        assert_eq!(
            cloud.lower_cut(&rint(1), true).unwrap(),
            space.empty_event()
        );
        assert!(cloud.upper_cut(&rat(5, 4), true).is_err());
    }

    #[test]
    fn finite_case_cut_identities() {
        // In the finite case strict cuts step to the next level:
        // B-bar at gamma_i equals B at gamma_{i+1}, same for C.
        let cloud = comonotone_cloud();
        let levels = cloud.level_values();
        let gammas = levels.values();
        for i in 0..levels.top_index() {
            assert_eq!(
                cloud.upper_cut(&gammas[i], true).unwrap(),
                cloud.upper_cut(&gammas[i + 1], false).unwrap()
            );
            assert_eq!(
                cloud.lower_cut(&gammas[i], true).unwrap(),
                cloud.lower_cut(&gammas[i + 1], false).unwrap()
            );
        }
        for gamma in gammas {
            let c = cloud.lower_cut(gamma, false).unwrap();
            let b = cloud.upper_cut(gamma, false).unwrap();
            assert!(c.is_subset(b));
        }
    }

    #[test]
    fn possibility_pair_matches_table() {
        let cloud = comonotone_cloud();
        let (upper, complement) = cloud.possibility_pair();
        assert_eq!(upper.values(), cloud.pi_values());
        assert_eq!(
            complement.values(),
            &[rat(1, 2), rat(1, 2), rat(1, 4), rat(1, 2), rint(1), rint(1)]
        );
    }

    #[test]
    fn vacuous_possibility_pair_is_all_ones() {
        let v = vacuous(3);
        let (upper, complement) = v.possibility_pair();
        assert!(upper.values().iter().all(|x| x == &rint(1)));
        assert!(complement.values().iter().all(|x| x == &rint(1)));
    }

    #[test]
    fn mirror_is_an_involution() {
        let cloud = comonotone_cloud();
        let mirrored = cloud.mirror();
        assert_eq!(mirrored.delta(0), &rat(1, 4));
        assert_eq!(mirrored.pi(0), &rat(1, 2));
        assert_eq!(mirrored.mirror(), cloud);
        let v = vacuous(4);
        assert_eq!(v.mirror(), v);
    }

    #[test]
    fn measures() {
        let cloud = comonotone_cloud();
        let (_, complement) = cloud.possibility_pair();
        let space = cloud.space().clone();
        let uv = space.event(["u", "v"]).unwrap();
        assert_eq!(complement.possibility(uv), rat(1, 2));
        assert_eq!(complement.possibility(space.full_event()), rint(1));
        assert_eq!(complement.necessity(space.empty_event()), rint(0));
        // N(A) <= Pi(A) on every event.
        for event in space.all_events() {
            assert!(complement.necessity(event) <= complement.possibility(event));
        }
    }
}
