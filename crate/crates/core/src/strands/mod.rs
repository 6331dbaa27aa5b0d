//! Strand sets: time-parametrised families of embeddings of a finite point
//! set into the open unit square, one PL path per point.

mod connect;
mod extract;

pub use connect::connect_configs;
pub use extract::{
    braid_word_of, braid_word_with_shear, crossings, crossings_with_shear, sheared, strands_equivalent, Crossing, SHEARS,
};

use std::cmp::Ordering;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::groupoid::{Congruence, Groupoid, Magmoid};
use crate::scalar::{cmp, Scalar};

pub type Point<S> = (S, S);

pub(crate) fn lex<S: Scalar>(a: &Point<S>, b: &Point<S>) -> Ordering {
    cmp(&a.0, &b.0).then_with(|| cmp(&a.1, &b.1))
}

fn interior<S: Scalar>(p: &Point<S>) -> bool {
    p.0 > S::zero() && p.0 < S::one() && p.1 > S::zero() && p.1 < S::one()
}

/// An ordered list of distinct points strictly inside the unit square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointConfig<S> {
    points: Vec<Point<S>>,
}

impl<S: Scalar> PointConfig<S> {
    pub fn new(points: Vec<Point<S>>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if !interior(p) {
                return Err(Error::InvalidConfig(format!("point {i} is not inside the open unit square")));
            }
            if points[..i].contains(p) {
                return Err(Error::InvalidConfig(format!("point {i} repeats an earlier point")));
            }
        }
        Ok(PointConfig { points })
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points in lexicographic `(x, y)` order.
    pub fn sorted(&self) -> Vec<Point<S>> {
        let mut pts = self.points.clone();
        pts.sort_by(lex);
        pts
    }

    /// Equality as unordered sets.
    pub fn same_set(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

/// A PL path in the plane with vertices at strictly increasing times from 0
/// to 1; collinear vertices (in `(t, x, y)`) are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Strand<S> {
    times: Vec<S>,
    verts: Vec<Point<S>>,
}

fn collinear3<S: Scalar>(t: [&S; 3], p: [&Point<S>; 3]) -> bool {
    // (p1 - p0) (t2 - t0) == (p2 - p0) (t1 - t0) componentwise
    let dt1 = t[1].clone() - t[0].clone();
    let dt2 = t[2].clone() - t[0].clone();
    (p[1].0.clone() - p[0].0.clone()) * dt2.clone() == (p[2].0.clone() - p[0].0.clone()) * dt1.clone()
        && (p[1].1.clone() - p[0].1.clone()) * dt2 == (p[2].1.clone() - p[0].1.clone()) * dt1
}

impl<S: Scalar> Strand<S> {
    pub fn new(times: Vec<S>, verts: Vec<Point<S>>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidStrands(msg.to_string()));
        if times.len() != verts.len() || times.len() < 2 {
            return bad("a strand needs matching times and vertices, at least two of each");
        }
        if !times[0].is_zero() || !times[times.len() - 1].is_one() || times.windows(2).any(|w| w[0] >= w[1]) {
            return bad("strand times must increase from 0 to 1");
        }
        if !verts.iter().all(interior) {
            return bad("strand leaves the open unit square");
        }
        let mut t_out: Vec<S> = Vec::with_capacity(times.len());
        let mut v_out: Vec<Point<S>> = Vec::with_capacity(verts.len());
        for (t, v) in times.into_iter().zip(verts) {
            while t_out.len() >= 2 {
                let n = t_out.len();
                if !collinear3([&t_out[n - 2], &t_out[n - 1], &t], [&v_out[n - 2], &v_out[n - 1], &v]) {
                    break;
                }
                t_out.pop();
                v_out.pop();
            }
            t_out.push(t);
            v_out.push(v);
        }
        Ok(Strand { times: t_out, verts: v_out })
    }

    pub fn constant(p: Point<S>) -> Self {
        Strand { times: vec![S::zero(), S::one()], verts: vec![p.clone(), p] }
    }

    pub fn times(&self) -> &[S] {
        &self.times
    }

    pub fn verts(&self) -> &[Point<S>] {
        &self.verts
    }

    pub fn start(&self) -> &Point<S> {
        &self.verts[0]
    }

    pub fn end(&self) -> &Point<S> {
        &self.verts[self.verts.len() - 1]
    }

    pub fn at(&self, t: &S) -> Point<S> {
        let i = self.times[1..].iter().position(|k| *t <= *k).unwrap_or(self.times.len() - 2);
        let (t0, t1) = (&self.times[i], &self.times[i + 1]);
        let lambda = (t.clone() - t0.clone()) / (t1.clone() - t0.clone());
        let (a, b) = (&self.verts[i], &self.verts[i + 1]);
        (
            crate::scalar::lerp(&a.0, &b.0, &lambda),
            crate::scalar::lerp(&a.1, &b.1, &lambda),
        )
    }

    fn reversed(&self) -> Self {
        Strand {
            times: self.times.iter().rev().map(|t| S::one() - t.clone()).collect(),
            verts: self.verts.iter().rev().cloned().collect(),
        }
    }

    /// `self` on `[0, 1/2]`, then `next` on `[1/2, 1]`.
    fn then(&self, next: &Self) -> Self {
        let half = S::half();
        let mut times: Vec<S> = self.times.iter().map(|t| t.clone() * half.clone()).collect();
        let mut verts = self.verts.clone();
        for (t, v) in next.times.iter().zip(&next.verts).skip(1) {
            times.push(half.clone() + t.clone() * half.clone());
            verts.push(v.clone());
        }
        Strand::new(times, verts).expect("concatenation of valid strands")
    }

    /// The path with its time axis changed by the increasing PL map through
    /// `(old, new)` pairs, which must cover every vertex time.
    fn retime(&self, grid_old: &[S], grid_new: &[S]) -> Self {
        let mut times = Vec::with_capacity(grid_old.len());
        let mut verts = Vec::with_capacity(grid_old.len());
        for (o, n) in grid_old.iter().zip(grid_new) {
            if times.last() == Some(n) {
                continue;
            }
            times.push(n.clone());
            verts.push(self.at(o));
        }
        Strand::new(times, verts).expect("retiming keeps a valid strand")
    }
}

/// Does the straight motion `a0 -> a1` meet `b0 -> b1` at the same moment?
fn segments_meet<S: Scalar>(a0: &Point<S>, a1: &Point<S>, b0: &Point<S>, b1: &Point<S>) -> bool {
    let d0 = (a0.0.clone() - b0.0.clone(), a0.1.clone() - b0.1.clone());
    let d1 = (a1.0.clone() - b1.0.clone(), a1.1.clone() - b1.1.clone());
    let zero = |d: &Point<S>| d.0.is_zero() && d.1.is_zero();
    if zero(&d0) || zero(&d1) {
        return true;
    }
    // d(λ) = d0 + λ (d1 - d0) vanishes in (0, 1) iff d0 and d1 point in opposite directions
    let cross = d0.0.clone() * d1.1.clone() - d0.1.clone() * d1.0.clone();
    let dot = d0.0.clone() * d1.0.clone() + d0.1.clone() * d1.1.clone();
    cross.is_zero() && dot < S::zero()
}

pub(crate) fn merge_times<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut out: Vec<S> = a.iter().chain(b).cloned().collect();
    out.sort_by(cmp);
    out.dedup();
    out
}

/// First time at which two strands coincide, if any.
fn first_collision<S: Scalar>(a: &Strand<S>, b: &Strand<S>) -> Option<S> {
    let grid = merge_times(&a.times, &b.times);
    for w in grid.windows(2) {
        if segments_meet(&a.at(&w[0]), &a.at(&w[1]), &b.at(&w[0]), &b.at(&w[1])) {
            return Some(w[0].clone());
        }
    }
    None
}

/// A fake motion of a finite point set: strands that are pairwise disjoint at
/// every time. Strands are kept in lexicographic order of their start points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrandSet<S> {
    strands: Vec<Strand<S>>,
}

impl<S: Scalar> StrandSet<S> {
    pub fn new(mut strands: Vec<Strand<S>>) -> Result<Self> {
        strands.sort_by(|a, b| lex(a.start(), b.start()));
        for i in 0..strands.len() {
            for j in 0..i {
                if let Some(t) = first_collision(&strands[j], &strands[i]) {
                    return Err(Error::InvalidStrands(format!(
                        "strands starting at {} and {} collide near t = {}",
                        fmt_point(strands[j].start()),
                        fmt_point(strands[i].start()),
                        t.to_exact_string()
                    )));
                }
            }
        }
        Ok(StrandSet { strands })
    }

    /// Every point stays put.
    pub fn identity(k: &PointConfig<S>) -> Self {
        StrandSet::new(k.points().iter().cloned().map(Strand::constant).collect()).expect("distinct points")
    }

    /// Exchanges two points by a half turn about their midpoint, each moving
    /// along two sides of the square with diagonal `a b`.
    pub fn half_twist(k: &PointConfig<S>, i: usize, j: usize, clockwise: bool) -> Result<Self> {
        let pts = k.points();
        if i >= pts.len() || j >= pts.len() || i == j {
            return Err(Error::InvalidConfig("half twist needs two distinct point indices".into()));
        }
        let (a, b) = (pts[i].clone(), pts[j].clone());
        let half = S::half();
        let mid = ((a.0.clone() + b.0.clone()) * half.clone(), (a.1.clone() + b.1.clone()) * half.clone());
        // a rotated a quarter turn about the midpoint
        let (dx, dy) = (a.0.clone() - mid.0.clone(), a.1.clone() - mid.1.clone());
        let (qx, qy) = if clockwise { (dy, -dx) } else { (-dy, dx) };
        let via_a = (mid.0.clone() + qx.clone(), mid.1.clone() + qy.clone());
        let via_b = (mid.0.clone() - qx, mid.1.clone() - qy);
        let times = vec![S::zero(), half, S::one()];
        let mut strands = Vec::with_capacity(pts.len());
        for (n, p) in pts.iter().enumerate() {
            strands.push(if n == i {
                Strand::new(times.clone(), vec![a.clone(), via_a.clone(), b.clone()])?
            } else if n == j {
                Strand::new(times.clone(), vec![b.clone(), via_b.clone(), a.clone()])?
            } else {
                Strand::constant(p.clone())
            });
        }
        StrandSet::new(strands)
    }

    pub fn strands(&self) -> &[Strand<S>] {
        &self.strands
    }

    pub fn len(&self) -> usize {
        self.strands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strands.is_empty()
    }

    pub fn start(&self) -> PointConfig<S> {
        PointConfig { points: self.strands.iter().map(|s| s.start().clone()).collect() }
    }

    pub fn end(&self) -> PointConfig<S> {
        PointConfig { points: self.strands.iter().map(|s| s.end().clone()).collect() }
    }

    pub fn positions_at(&self, t: &S) -> Vec<Point<S>> {
        self.strands.iter().map(|s| s.at(t)).collect()
    }

    /// `g ⊡ f`: run `f` on `[0, 1/2]` and then `g` from where each point ended.
    pub fn box_compose(f: &Self, g: &Self) -> Result<Self> {
        if f.len() != g.len() || !f.end().same_set(&g.start()) {
            return Err(Error::ConfigMismatch("end of the first strand set is not the start of the second".into()));
        }
        let mut strands = Vec::with_capacity(f.len());
        for s in &f.strands {
            let next = g
                .strands
                .iter()
                .find(|r| r.start() == s.end())
                .expect("configurations match as sets");
            strands.push(s.then(next));
        }
        StrandSet::new(strands)
    }

    /// Runs time backwards, starting from the end configuration.
    pub fn reverse(&self) -> Self {
        StrandSet::new(self.strands.iter().map(Strand::reversed).collect()).expect("reversal keeps strands disjoint")
    }

    /// Drops the time intervals in which nothing moves and spreads the rest
    /// uniformly over `[0, 1]` by total moving time.
    pub fn normalize_time(&self) -> Self {
        let mut grid: Vec<S> = Vec::new();
        for s in &self.strands {
            grid = merge_times(&grid, &s.times);
        }
        let moving: Vec<bool> = grid
            .windows(2)
            .map(|w| self.strands.iter().any(|s| s.at(&w[0]) != s.at(&w[1])))
            .collect();
        let total = grid
            .windows(2)
            .zip(&moving)
            .filter(|(_, &m)| m)
            .fold(S::zero(), |acc, (w, _)| acc + (w[1].clone() - w[0].clone()));
        if total.is_zero() {
            return StrandSet::new(self.strands.iter().map(|s| Strand::constant(s.start().clone())).collect())
                .expect("constant strands");
        }
        let mut new_grid = vec![S::zero()];
        let mut acc = S::zero();
        for (w, &m) in grid.windows(2).zip(&moving) {
            if m {
                acc = acc + (w[1].clone() - w[0].clone());
            }
            new_grid.push(acc.clone() / total.clone());
        }
        StrandSet::new(self.strands.iter().map(|s| s.retime(&grid, &new_grid)).collect())
            .expect("retiming keeps strands disjoint")
    }

    /// `true` when no point ever moves.
    pub fn is_stationary(&self) -> bool {
        self.strands.iter().all(|s| s.verts.iter().all(|v| v == s.start()))
    }
}

/// Strand sets under `⊡`, with configurations (as sets, stored sorted) for
/// objects. The groupoid laws hold up to [`StrandEquivalence`].
#[derive(Clone, Copy, Debug, Default)]
pub struct StrandMagmoid<S>(PhantomData<S>);

impl<S> StrandMagmoid<S> {
    pub fn new() -> Self {
        StrandMagmoid(PhantomData)
    }
}

fn as_object<S: Scalar>(k: &PointConfig<S>) -> PointConfig<S> {
    PointConfig { points: k.sorted() }
}

impl<S: Scalar> Magmoid for StrandMagmoid<S> {
    type Object = PointConfig<S>;
    type Morphism = StrandSet<S>;

    fn source(&self, f: &StrandSet<S>) -> PointConfig<S> {
        as_object(&f.start())
    }

    fn target(&self, f: &StrandSet<S>) -> PointConfig<S> {
        as_object(&f.end())
    }

    fn compose(&self, f: &StrandSet<S>, g: &StrandSet<S>) -> Option<StrandSet<S>> {
        StrandSet::box_compose(f, g).ok()
    }
}

impl<S: Scalar> Groupoid for StrandMagmoid<S> {
    fn identity(&self, x: &PointConfig<S>) -> StrandSet<S> {
        StrandSet::identity(x)
    }

    fn inverse(&self, f: &StrandSet<S>) -> StrandSet<S> {
        f.reverse()
    }
}

/// Equivalence of fake motions, decided by [`strands_equivalent`].
#[derive(Clone, Copy, Debug, Default)]
pub struct StrandEquivalence;

impl<S: Scalar> Congruence<StrandMagmoid<S>> for StrandEquivalence {
    fn equivalent(&self, _m: &StrandMagmoid<S>, f: &StrandSet<S>, g: &StrandSet<S>) -> bool {
        strands_equivalent(f, g).unwrap_or(false)
    }
}

pub(crate) fn fmt_point<S: Scalar>(p: &Point<S>) -> String {
    format!("({}, {})", p.0.to_exact_string(), p.1.to_exact_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn pair() -> PointConfig<Rational> {
        PointConfig::new(vec![(q(1, 4), q(1, 2)), (q(3, 4), q(1, 2))]).unwrap()
    }

    #[test]
    fn configs_validate() {
        assert!(PointConfig::new(vec![(q(0, 1), q(1, 2))]).is_err());
        assert!(PointConfig::new(vec![(q(1, 2), q(1, 2)), (q(1, 2), q(1, 2))]).is_err());
        let k = pair();
        let swapped = PointConfig::new(vec![(q(3, 4), q(1, 2)), (q(1, 4), q(1, 2))]).unwrap();
        assert!(k.same_set(&swapped));
        assert_ne!(k, swapped);
    }

    #[test]
    fn collisions_are_detected_exactly() {
        let a = Strand::new(vec![q(0, 1), q(1, 1)], vec![(q(1, 4), q(1, 2)), (q(3, 4), q(1, 2))]).unwrap();
        let b = Strand::new(vec![q(0, 1), q(1, 1)], vec![(q(3, 4), q(1, 2)), (q(1, 4), q(1, 2))]).unwrap();
        assert!(StrandSet::new(vec![a.clone(), b]).is_err());
        // same paths at different speeds never meet at the same moment
        let c = Strand::new(vec![q(0, 1), q(1, 1)], vec![(q(1, 2), q(1, 4)), (q(1, 2), q(3, 4))]).unwrap();
        assert!(StrandSet::new(vec![a, c]).is_err());
        let d = Strand::new(vec![q(0, 1), q(1, 2), q(1, 1)], vec![(q(1, 2), q(1, 4)), (q(1, 2), q(1, 4)), (q(1, 2), q(3, 4))])
            .unwrap();
        let e = Strand::new(vec![q(0, 1), q(1, 1)], vec![(q(1, 4), q(1, 2)), (q(3, 4), q(1, 2))]).unwrap();
        assert!(StrandSet::new(vec![d, e]).is_ok());
    }

    #[test]
    fn half_twist_swaps_the_points() {
        let k = pair();
        let h = StrandSet::half_twist(&k, 0, 1, true).unwrap();
        assert!(h.end().same_set(&k));
        assert_eq!(h.positions_at(&q(1, 2)), vec![(q(1, 2), q(3, 4)), (q(1, 2), q(1, 4))]);
        let full = StrandSet::box_compose(&h, &h).unwrap();
        assert_eq!(full.end(), k);
    }

    #[test]
    fn identity_and_reverse() {
        let k = pair();
        let id = StrandSet::identity(&k);
        assert_eq!(id.reverse(), id);
        let h = StrandSet::half_twist(&k, 0, 1, false).unwrap();
        assert_eq!(h.reverse().reverse(), h);
        let padded = StrandSet::box_compose(&id, &h).unwrap();
        assert_ne!(padded, h);
        assert_eq!(padded.normalize_time(), h.normalize_time());
        assert!(matches!(
            StrandSet::box_compose(&h, &StrandSet::identity(&PointConfig::new(vec![(q(1, 3), q(1, 3))]).unwrap())),
            Err(Error::ConfigMismatch(_))
        ));
    }
}
