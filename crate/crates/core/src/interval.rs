//! Motions of compact subsets of the unit interval.
//!
//! A subset with finitely many components is determined up to motion by its
//! word (one `a` per point, one `b` per interval, left to right) together with
//! whether it contains 0 and 1. Between two subsets with the same data there
//! is exactly one motion class, so every hom-set has 0 or 1 element.

use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::groupoid::{Congruence, Groupoid, Magmoid};
use crate::pl::{Ambient, PlFlow, PlHomeo, Worldline};
use crate::scalar::Scalar;
use crate::subset::CompactSubset;

pub fn word_of<S: Scalar>(n: &CompactSubset<S>) -> String {
    n.word()
}

/// Size of the hom-set from `n` to `n2` in the motion groupoid of `[0, 1]`.
pub fn hom_cardinality<S: Scalar>(n: &CompactSubset<S>, n2: &CompactSubset<S>) -> usize {
    let same = n.word() == n2.word() && n.contains_zero() == n2.contains_zero() && n.contains_one() == n2.contains_one();
    usize::from(same)
}

/// The straight-line motion whose endpoint sends the boundary points of `n`
/// to those of `n2` in order and is linear in between.
pub fn canonical_motion<S: Scalar>(n: &CompactSubset<S>, n2: &CompactSubset<S>) -> Result<PlFlow<S>> {
    if hom_cardinality(n, n2) == 0 {
        return Err(Error::NoMotionExists);
    }
    let mut pts: Vec<(S, S)> = vec![(S::zero(), S::zero())];
    for (x, y) in n.boundary_points().into_iter().zip(n2.boundary_points()) {
        if x.is_zero() || x.is_one() {
            continue;
        }
        pts.push((x, y));
    }
    pts.push((S::one(), S::one()));
    PlFlow::two_frame(PlHomeo::new(Ambient::Interval, pts)?)
}

/// Whether `f` carries `n` onto `n2`.
pub fn is_motion<S: Scalar>(f: &PlFlow<S>, n: &CompactSubset<S>, n2: &CompactSubset<S>) -> bool {
    f.ambient() == Ambient::Interval && f.endpoint().image(n).map(|m| m == *n2).unwrap_or(false)
}

/// Whether `f` fixes every boundary and isolated point of `n` at all times.
/// Trajectories are linear between key times, so comparing the key frames
/// decides it.
pub fn is_stationary<S: Scalar>(f: &PlFlow<S>, n: &CompactSubset<S>) -> bool {
    n.boundary_points()
        .iter()
        .all(|x| f.frames().iter().all(|h| h.eval(x).map(|y| y == *x).unwrap_or(false)))
}

/// Any two motions between the same pair of subsets are equivalent; this
/// checks that both really are motions `n -> n2`.
pub fn motions_equivalent<S: Scalar>(
    f: &PlFlow<S>,
    g: &PlFlow<S>,
    n: &CompactSubset<S>,
    n2: &CompactSubset<S>,
) -> Result<bool> {
    if !is_motion(f, n, n2) || !is_motion(g, n, n2) {
        return Err(Error::NotAMotion);
    }
    Ok(true)
}

/// A flow of `[0, 1]` together with the subset it moves and its image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalMotion<S> {
    pub flow: PlFlow<S>,
    pub source: CompactSubset<S>,
    pub target: CompactSubset<S>,
}

impl<S: Scalar> IntervalMotion<S> {
    pub fn new(flow: PlFlow<S>, source: CompactSubset<S>) -> Result<Self> {
        if flow.ambient() != Ambient::Interval {
            return Err(Error::AmbientMismatch(Ambient::Interval.to_string(), flow.ambient().to_string()));
        }
        let target = flow.endpoint().image(&source)?;
        Ok(IntervalMotion { flow, source, target })
    }

    pub fn worldline(&self) -> Result<Worldline<S>> {
        Worldline::of(&self.flow, &self.source)
    }
}

/// Motions of the interval under `*`, with the identity flow as unit and the
/// reversed flow as inverse. The groupoid laws hold only up to
/// [`MotionEquivalence`].
#[derive(Clone, Copy, Debug)]
pub struct IntervalMotionMagmoid<S>(PhantomData<S>);

impl<S> IntervalMotionMagmoid<S> {
    pub fn new() -> Self {
        IntervalMotionMagmoid(PhantomData)
    }
}

impl<S> Default for IntervalMotionMagmoid<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> Magmoid for IntervalMotionMagmoid<S> {
    type Object = CompactSubset<S>;
    type Morphism = IntervalMotion<S>;

    fn source(&self, f: &IntervalMotion<S>) -> CompactSubset<S> {
        f.source.clone()
    }

    fn target(&self, f: &IntervalMotion<S>) -> CompactSubset<S> {
        f.target.clone()
    }

    fn compose(&self, f: &IntervalMotion<S>, g: &IntervalMotion<S>) -> Option<IntervalMotion<S>> {
        if f.target != g.source {
            return None;
        }
        let flow = PlFlow::star_compose(&f.flow, &g.flow).ok()?;
        Some(IntervalMotion { flow, source: f.source.clone(), target: g.target.clone() })
    }
}

impl<S: Scalar> Groupoid for IntervalMotionMagmoid<S> {
    fn identity(&self, x: &CompactSubset<S>) -> IntervalMotion<S> {
        IntervalMotion { flow: PlFlow::identity(Ambient::Interval), source: x.clone(), target: x.clone() }
    }

    fn inverse(&self, f: &IntervalMotion<S>) -> IntervalMotion<S> {
        IntervalMotion { flow: f.flow.reverse(), source: f.target.clone(), target: f.source.clone() }
    }
}

/// Motion equivalence on interval motions, decided by [`motions_equivalent`].
#[derive(Clone, Copy, Debug, Default)]
pub struct MotionEquivalence;

impl<S: Scalar> Congruence<IntervalMotionMagmoid<S>> for MotionEquivalence {
    fn equivalent(&self, _m: &IntervalMotionMagmoid<S>, f: &IntervalMotion<S>, g: &IntervalMotion<S>) -> bool {
        f.source == g.source
            && f.target == g.target
            && motions_equivalent(&f.flow, &g.flow, &f.source, &f.target).unwrap_or(false)
    }
}
