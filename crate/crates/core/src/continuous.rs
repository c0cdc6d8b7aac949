//! Clouds on a bounded real interval, restricted to continuous
//! piecewise-linear distributions with rational breakpoints so that every
//! cut, pseudo-inverse and level measure is exact.

use num::{One, Signed, Zero};

use crate::cloud::Cloud;
use crate::error::Error;
use crate::rational::{in_unit, Rat};
use crate::simplex::{Lp, LpOutcome, Relation};
use crate::space::{EventSet, OutcomeSpace};

/// A continuous piecewise-linear function on `[support_lo, support_hi]`
/// with values in `[0,1]`, given by its breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinear {
    points: Vec<(Rat, Rat)>,
}

impl PiecewiseLinear {
    pub fn new(points: Vec<(Rat, Rat)>) -> Result<Self, Error> {
        if points.len() < 2 {
            return Err(Error::TooFewBreakpoints);
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::BreakpointsNotIncreasing);
            }
        }
        for (_, y) in &points {
            if !in_unit(y) {
                return Err(Error::PlValueOutOfUnit(y.to_string()));
            }
        }
        Ok(PiecewiseLinear { points })
    }

    pub fn breakpoints(&self) -> &[(Rat, Rat)] {
        &self.points
    }

    pub fn support(&self) -> (&Rat, &Rat) {
        (&self.points[0].0, &self.points[self.points.len() - 1].0)
    }

    pub fn max_value(&self) -> &Rat {
        self.points.iter().map(|(_, y)| y).max().expect("non-empty")
    }

    pub fn min_value(&self) -> &Rat {
        self.points.iter().map(|(_, y)| y).min().expect("non-empty")
    }

    /// Exact value at `x`; clamps to the boundary values outside support.
    pub fn eval(&self, x: &Rat) -> Rat {
        let points = &self.points;
        if *x <= points[0].0 {
            return points[0].1.clone();
        }
        let last = points.len() - 1;
        if *x >= points[last].0 {
            return points[last].1.clone();
        }
        let mut i = 0;
        while points[i + 1].0 < *x {
            i += 1;
        }
        let (x0, y0) = &points[i];
        let (x1, y1) = &points[i + 1];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// `{x : f(x) cmp level}` as an exact interval union.
    pub fn region(&self, level: &Rat, cmp: Cmp) -> IntervalUnion {
        let mut parts = Vec::new();
        for w in self.points.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            if let Some(iv) = piece_region(x0, y0, x1, y1, level, cmp) {
                parts.push(iv);
            }
        }
        IntervalUnion::from_parts(parts)
    }

    /// Left-continuous pseudo-inverse `inf {x : f(x) >= level}`, for
    /// nondecreasing `f`; the right support end when the level is never
    /// reached.
    pub fn quantile(&self, level: &Rat) -> Rat {
        debug_assert!(self.is_nondecreasing());
        if self.points[0].1 >= *level {
            return self.points[0].0.clone();
        }
        for w in self.points.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            if y1 >= level {
                if y1 == y0 {
                    return x0.clone();
                }
                return x0 + (x1 - x0) * (level - y0) / (y1 - y0);
            }
        }
        self.points[self.points.len() - 1].0.clone()
    }

    /// Pointwise convex combination `weight * self + (1 - weight) * other`
    /// over the union of breakpoints.
    pub fn mix(&self, other: &PiecewiseLinear, weight: &Rat) -> Result<PiecewiseLinear, Error> {
        if !in_unit(weight) {
            return Err(Error::LambdaOutOfRange(weight.to_string()));
        }
        if self.support() != other.support() {
            return Err(Error::SupportMismatch);
        }
        let mut xs: Vec<Rat> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|(x, _)| x.clone())
            .collect();
        xs.sort();
        xs.dedup();
        let one = Rat::one();
        let points = xs
            .into_iter()
            .map(|x| {
                let y = weight * self.eval(&x) + (&one - weight) * other.eval(&x);
                (x, y)
            })
            .collect();
        PiecewiseLinear::new(points)
    }
}

/// Comparison operator for [`PiecewiseLinear::region`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Ge,
    Gt,
    Le,
    Lt,
}

fn piece_region(x0: &Rat, y0: &Rat, x1: &Rat, y1: &Rat, level: &Rat, cmp: Cmp) -> Option<Interval> {
    let holds = |y: &Rat| match cmp {
        Cmp::Ge => y >= level,
        Cmp::Gt => y > level,
        Cmp::Le => y <= level,
        Cmp::Lt => y < level,
    };
    if y0 == y1 {
        return holds(y0).then(|| Interval::closed(x0.clone(), x1.clone()));
    }
    let at0 = holds(y0);
    let at1 = holds(y1);
    if at0 && at1 {
        return Some(Interval::closed(x0.clone(), x1.clone()));
    }
    if !at0 && !at1 {
        return None;
    }
    // The predicate switches exactly once, at the root of f = level.
    let root = x0 + (x1 - x0) * (level - y0) / (y1 - y0);
    let boundary_in = matches!(cmp, Cmp::Ge | Cmp::Le);
    if at0 {
        Some(Interval {
            lo: x0.clone(),
            hi: root,
            lo_closed: true,
            hi_closed: boundary_in,
        })
    } else {
        Some(Interval {
            lo: root,
            hi: x1.clone(),
            lo_closed: boundary_in,
            hi_closed: true,
        })
    }
}

/// A rational interval with individually open or closed endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: Rat, hi: Rat) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn point(x: Rat) -> Self {
        Interval::closed(x.clone(), x)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi && self.lo_closed && self.hi_closed
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let above = *x > self.lo || (self.lo_closed && *x == self.lo);
        let below = *x < self.hi || (self.hi_closed && *x == self.hi);
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo);
        }
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{}{},{}{}", open, self.lo, self.hi, close)
    }
}

/// A normalized finite union of disjoint intervals, sorted left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalUnion {
    parts: Vec<Interval>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        IntervalUnion { parts: Vec::new() }
    }

    /// Normalizes: drops empty parts, sorts, merges touching intervals.
    pub fn from_parts(mut parts: Vec<Interval>) -> Self {
        parts.retain(|iv| !iv.is_empty());
        parts.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut merged: Vec<Interval> = Vec::new();
        for part in parts {
            match merged.last_mut() {
                Some(prev)
                    if part.lo < prev.hi
                        || (part.lo == prev.hi && (prev.hi_closed || part.lo_closed)) =>
                {
                    if part.hi > prev.hi || (part.hi == prev.hi && part.hi_closed) {
                        prev.hi = part.hi;
                        prev.hi_closed = part.hi_closed;
                    }
                }
                _ => merged.push(part),
            }
        }
        IntervalUnion { parts: merged }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.parts.iter().any(|iv| iv.contains(x))
    }

    pub fn intersect(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut parts = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                parts.push(a.intersect(b));
            }
        }
        IntervalUnion::from_parts(parts)
    }

    pub fn is_subset(&self, other: &IntervalUnion) -> bool {
        self.intersect(other) == *self
    }
}

impl std::fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{{}}");
        }
        let rendered: Vec<String> = self.parts.iter().map(|iv| iv.to_string()).collect();
        write!(f, "{}", rendered.join(" u "))
    }
}

/// A cloud on a bounded real interval: continuous piecewise-linear
/// `delta <= pi` with `sup pi = 1` and `inf delta = 0` attained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousCloud {
    delta: PiecewiseLinear,
    pi: PiecewiseLinear,
}

impl ContinuousCloud {
    pub fn new(delta: PiecewiseLinear, pi: PiecewiseLinear) -> Result<Self, Error> {
        if delta.support() != pi.support() {
            return Err(Error::SupportMismatch);
        }
        // delta <= pi needs checking at the union of breakpoints only.
        let mut xs: Vec<Rat> = delta
            .points
            .iter()
            .chain(pi.points.iter())
            .map(|(x, _)| x.clone())
            .collect();
        xs.sort();
        xs.dedup();
        for x in &xs {
            if delta.eval(x) > pi.eval(x) {
                return Err(Error::DeltaExceedsPi(x.to_string()));
            }
        }
        if !pi.max_value().is_one() {
            return Err(Error::PiNotNormalized);
        }
        if !delta.min_value().is_zero() {
            return Err(Error::DeltaNeverZero);
        }
        Ok(ContinuousCloud { delta, pi })
    }

    pub fn delta(&self) -> &PiecewiseLinear {
        &self.delta
    }

    pub fn pi(&self) -> &PiecewiseLinear {
        &self.pi
    }

    pub fn support(&self) -> (&Rat, &Rat) {
        self.pi.support()
    }
}

/// The focal set `E_alpha = {r : pi(r) >= alpha and delta(r) < alpha}` of
/// the continuous random-set representation, solved exactly.
pub fn alpha_focal(cloud: &ContinuousCloud, alpha: &Rat) -> Result<IntervalUnion, Error> {
    if !alpha.is_positive() || *alpha > Rat::one() {
        return Err(Error::LevelOutOfRange(alpha.to_string()));
    }
    let upper = cloud.pi.region(alpha, Cmp::Ge);
    let lower = cloud.delta.region(alpha, Cmp::Lt);
    Ok(upper.intersect(&lower))
}

/// One cell of a discretization: a boundary point or an open interval
/// between adjacent boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Point(Rat),
    Open(Rat, Rat),
}

impl Cell {
    pub fn to_interval(&self) -> Interval {
        match self {
            Cell::Point(x) => Interval::point(x.clone()),
            Cell::Open(a, b) => Interval {
                lo: a.clone(),
                hi: b.clone(),
                lo_closed: false,
                hi_closed: false,
            },
        }
    }

    fn representative(&self) -> Rat {
        match self {
            Cell::Point(x) => x.clone(),
            Cell::Open(a, b) => (a + b) / crate::rational::rint(2),
        }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Point(x) => write!(f, "{{{x}}}"),
            Cell::Open(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// The pair of finite clouds obtained by rounding a continuous cloud to an
/// equidistant level grid, over the cell partition where all rounded
/// distributions are constant.
#[derive(Debug, Clone)]
pub struct Discretization {
    pub space: OutcomeSpace,
    pub cells: Vec<Cell>,
    /// Wider rounding (`pi` up, `delta` down): credal set contains the
    /// continuous one.
    pub outer: Cloud,
    /// Narrower rounding (`pi` down, `delta` up); `None` when the rounded
    /// pair violates `delta <= pi` and therefore has an empty credal set.
    pub inner: Option<Cloud>,
}

impl Discretization {
    /// Maps an interval union onto the cell partition. Errors when some
    /// cell straddles the boundary of the union.
    pub fn event_covering(&self, region: &IntervalUnion) -> Result<EventSet, Error> {
        let mut indices = Vec::new();
        for (i, cell) in self.cells.iter().enumerate() {
            let as_union = IntervalUnion::from_parts(vec![cell.to_interval()]);
            let overlap = as_union.intersect(region);
            if overlap.is_empty() {
                continue;
            }
            if overlap != as_union {
                return Err(Error::EventNotCellAligned);
            }
            indices.push(i);
        }
        Ok(self.space.event_from_indices(&indices))
    }
}

fn round_to_grid(v: &Rat, n: i64, up: bool) -> Rat {
    let steps = v * crate::rational::rint(n);
    let k = if up { steps.ceil() } else { steps.floor() };
    k / crate::rational::rint(n)
}

/// Discretizes a continuous cloud on the `n + 1` equidistant levels `k/n`,
/// returning inner and outer finite clouds over the induced cell partition.
pub fn discretize(cloud: &ContinuousCloud, n: usize) -> Result<Discretization, Error> {
    if n == 0 {
        return Err(Error::ZeroLevels);
    }
    let n_i64 = i64::try_from(n).expect("level count fits in i64");
    let (lo, hi) = cloud.support();
    let mut boundaries: Vec<Rat> = vec![lo.clone(), hi.clone()];
    for f in [&cloud.pi, &cloud.delta] {
        for (x, _) in f.breakpoints() {
            boundaries.push(x.clone());
        }
        for k in 0..=n_i64 {
            let level = crate::rational::rat(k, n_i64);
            for w in f.points.windows(2) {
                let (x0, y0) = &w[0];
                let (x1, y1) = &w[1];
                if y0 == y1 {
                    continue;
                }
                let root = x0 + (x1 - x0) * (&level - y0) / (y1 - y0);
                if root > *x0 && root < *x1 {
                    boundaries.push(root);
                }
            }
        }
    }
    boundaries.sort();
    boundaries.dedup();

    let mut cells = Vec::with_capacity(2 * boundaries.len() - 1);
    for (i, b) in boundaries.iter().enumerate() {
        if i > 0 {
            cells.push(Cell::Open(boundaries[i - 1].clone(), b.clone()));
        }
        cells.push(Cell::Point(b.clone()));
    }

    let width = cells.len().to_string().len();
    let labels: Vec<String> = (0..cells.len()).map(|i| format!("c{i:0width$}")).collect();
    let space = OutcomeSpace::new(labels)?;

    let mut outer_delta = Vec::with_capacity(cells.len());
    let mut outer_pi = Vec::with_capacity(cells.len());
    let mut inner_delta = Vec::with_capacity(cells.len());
    let mut inner_pi = Vec::with_capacity(cells.len());
    for cell in &cells {
        let rep = cell.representative();
        let d = cloud.delta.eval(&rep);
        let p = cloud.pi.eval(&rep);
        outer_delta.push(round_to_grid(&d, n_i64, false));
        outer_pi.push(round_to_grid(&p, n_i64, true));
        inner_delta.push(round_to_grid(&d, n_i64, true));
        inner_pi.push(round_to_grid(&p, n_i64, false));
    }
    let outer = Cloud::new(space.clone(), outer_delta, outer_pi)
        .expect("outer rounding always yields a valid cloud");
    let inner = inner_delta
        .iter()
        .zip(&inner_pi)
        .all(|(d, p)| d <= p)
        .then(|| {
            Cloud::new(space.clone(), inner_delta, inner_pi)
                .expect("pointwise-valid inner rounding keeps the boundary values")
        });

    Ok(Discretization {
        space,
        cells,
        outer,
        inner,
    })
}

/// The alpha-focal `[x(alpha), y(alpha)]` of a continuous p-box, via the
/// left-continuous pseudo-inverses of the two cumulative functions.
pub fn pbox_focal(
    flow: &PiecewiseLinear,
    fhigh: &PiecewiseLinear,
    alpha: &Rat,
) -> Result<Interval, Error> {
    if !in_unit(alpha) {
        return Err(Error::LevelOutOfRange(alpha.to_string()));
    }
    if !flow.is_nondecreasing() || !fhigh.is_nondecreasing() {
        return Err(Error::NotMonotone);
    }
    Ok(Interval::closed(
        fhigh.quantile(alpha),
        flow.quantile(alpha),
    ))
}

/// Belief and plausibility of the event `(-inf, t]` under the continuous
/// random set of a p-box: the Lebesgue measure of the alpha-levels whose
/// focal lies inside (touches) the event.
pub fn pbox_bel_upto(
    flow: &PiecewiseLinear,
    fhigh: &PiecewiseLinear,
    t: &Rat,
) -> Result<(Rat, Rat), Error> {
    if !flow.is_nondecreasing() || !fhigh.is_nondecreasing() {
        return Err(Error::NotMonotone);
    }
    Ok((level_measure_upto(flow, t), level_measure_upto(fhigh, t)))
}

/// `Leb {alpha in (0,1] : quantile(f, alpha) <= t}` for nondecreasing `f`.
fn level_measure_upto(f: &PiecewiseLinear, t: &Rat) -> Rat {
    let mut best = Rat::zero();
    for w in f.points.windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        let candidate = if x1 <= t {
            Some(y1.clone())
        } else if x0 <= t && y1 > y0 {
            Some(y0 + (y1 - y0) * (t - x0) / (x1 - x0))
        } else if x0 <= t {
            Some(y0.clone())
        } else {
            None
        };
        if let Some(c) = candidate {
            if c > best {
                best = c;
            }
        }
    }
    best
}

/// The extreme cumulative distributions of a thin cloud built from a
/// unimodal `pi`: `F_plus` concentrates mass on the left cut endpoints
/// `x(alpha)`, `F_minus` on the right endpoints `y(alpha)`. Any mixture of
/// the two stays in the thin cloud's credal set.
pub fn thin_cloud_cdfs(pi: &PiecewiseLinear) -> Result<(PiecewiseLinear, PiecewiseLinear), Error> {
    if !pi.max_value().is_one() {
        return Err(Error::PiNotNormalized);
    }
    // Unimodal: no strict rise after a strict fall.
    let mut fallen = false;
    for w in pi.points.windows(2) {
        if w[1].1 < w[0].1 {
            fallen = true;
        } else if w[1].1 > w[0].1 && fallen {
            return Err(Error::NotUnimodal);
        }
    }
    // The endpoint construction needs every positive-level cut to stay
    // interior: a boundary atom would violate the upper level constraints.
    if !pi.points[0].1.is_zero() || !pi.points[pi.points.len() - 1].1.is_zero() {
        return Err(Error::BoundaryNotZero);
    }
    let (lo, hi) = pi.support();
    let first_peak = pi
        .points
        .iter()
        .find(|(_, y)| y.is_one())
        .expect("normalized")
        .0
        .clone();
    let last_peak = pi
        .points
        .iter()
        .rev()
        .find(|(_, y)| y.is_one())
        .expect("normalized")
        .0
        .clone();

    let mut plus: Vec<(Rat, Rat)> = pi
        .points
        .iter()
        .filter(|(x, _)| *x <= first_peak)
        .cloned()
        .collect();
    if first_peak < *hi {
        plus.push((hi.clone(), Rat::one()));
    }

    let one = Rat::one();
    let mut minus: Vec<(Rat, Rat)> = Vec::new();
    if *lo < last_peak {
        minus.push((lo.clone(), Rat::zero()));
    }
    for (x, y) in pi.points.iter().filter(|(x, _)| *x >= last_peak) {
        minus.push((x.clone(), &one - y));
    }

    Ok((
        PiecewiseLinear::new(plus).expect("rising branch forms a valid cdf"),
        PiecewiseLinear::new(minus).expect("falling branch forms a valid cdf"),
    ))
}

/// Comonotonicity classification of a continuous cloud.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comonotonicity {
    Comonotonic,
    WeaklyComonotonic,
    Neither,
}

struct Segment {
    d0: Rat,
    d1: Rat,
    p0: Rat,
    p1: Rat,
}

/// Classifies a continuous cloud as comonotonic, weakly comonotonic (slope
/// signs never oppose but some pair is ordered oppositely), or neither.
/// Exact for piecewise-linear inputs: each segment pair is checked with a
/// small feasibility LP instead of sampling.
pub fn comonotonicity_continuous(cloud: &ContinuousCloud) -> Comonotonicity {
    let mut xs: Vec<Rat> = cloud
        .delta
        .points
        .iter()
        .chain(cloud.pi.points.iter())
        .map(|(x, _)| x.clone())
        .collect();
    xs.sort();
    xs.dedup();
    let segments: Vec<Segment> = xs
        .windows(2)
        .map(|w| Segment {
            d0: cloud.delta.eval(&w[0]),
            d1: cloud.delta.eval(&w[1]),
            p0: cloud.pi.eval(&w[0]),
            p1: cloud.pi.eval(&w[1]),
        })
        .collect();

    for s in &segments {
        let d_slope = &s.d1 - &s.d0;
        let p_slope = &s.p1 - &s.p0;
        if (d_slope.is_positive() && p_slope.is_negative())
            || (d_slope.is_negative() && p_slope.is_positive())
        {
            return Comonotonicity::Neither;
        }
    }

    for a in &segments {
        for b in &segments {
            if segment_pair_violates(a, b) {
                return Comonotonicity::WeaklyComonotonic;
            }
        }
    }
    Comonotonicity::Comonotonic
}

/// Does some `r` in segment `a` and `r'` in segment `b` satisfy
/// `delta(r) < delta(r')` and `pi(r) > pi(r')`? Decided exactly by
/// maximizing the margin `eps` in the two strict inequalities over the
/// parameter box.
fn segment_pair_violates(a: &Segment, b: &Segment) -> bool {
    let zero = Rat::zero();
    let one = Rat::one();
    // Variables (s, t, eps) >= 0 with s, t <= 1:
    //   delta_a(s) - delta_b(t) + eps <= 0
    //   pi_b(t) - pi_a(s) + eps <= 0
    let da = &a.d1 - &a.d0;
    let db = &b.d1 - &b.d0;
    let pa = &a.p1 - &a.p0;
    let pb = &b.p1 - &b.p0;
    let mut lp = Lp::new(3);
    lp.add(
        vec![one.clone(), zero.clone(), zero.clone()],
        Relation::Le,
        one.clone(),
    );
    lp.add(
        vec![zero.clone(), one.clone(), zero.clone()],
        Relation::Le,
        one.clone(),
    );
    lp.add(
        vec![da.clone(), -db.clone(), one.clone()],
        Relation::Le,
        &b.d0 - &a.d0,
    );
    lp.add(
        vec![-pa.clone(), pb.clone(), one.clone()],
        Relation::Le,
        &a.p0 - &b.p0,
    );
    match lp.maximize(&[zero.clone(), zero, one]) {
        LpOutcome::Optimal { value, .. } => value.is_positive(),
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => unreachable!("eps is bounded by the unit box"),
    }
}
