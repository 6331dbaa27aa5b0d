//! Seeded random generators for maps, flows, subsets and strand sets, used by
//! the property tests and the acceptance suite.
//!
//! All coordinates are rationals with small denominators, so generated
//! objects stay cheap to compute with while still hitting coincidences.

use rand::seq::index::sample as sample_indices;
use rand::Rng;

use crate::pl::{Ambient, PlFlow, PlHomeo};
use crate::scalar::Scalar;
use crate::strands::{Point, PointConfig, Strand, StrandSet};
use crate::subset::{CompactSubset, Component};

/// `k / den` with `0 < k < den`.
pub fn unit<S: Scalar, R: Rng + ?Sized>(rng: &mut R, den: i64) -> S {
    S::from_ratio(rng.gen_range(1..den), den)
}

/// `count` distinct values `k / den` in `(0, 1)`, increasing.
pub fn distinct_units<S: Scalar, R: Rng + ?Sized>(rng: &mut R, count: usize, den: i64) -> Vec<S> {
    let slots = (den - 1) as usize;
    assert!(count <= slots, "not enough room for {count} values below 1 with denominator {den}");
    let mut ks: Vec<usize> = sample_indices(rng, slots, count).into_vec();
    ks.sort_unstable();
    ks.into_iter().map(|k| S::from_ratio(k as i64 + 1, den)).collect()
}

/// An increasing PL homeomorphism of `[0, 1]` with at most `max_kinks` kinks.
pub fn interval_homeo<S: Scalar, R: Rng + ?Sized>(rng: &mut R, max_kinks: usize) -> PlHomeo<S> {
    let k = rng.gen_range(0..=max_kinks);
    let xs = distinct_units::<S, _>(rng, k, 24);
    let ys = distinct_units::<S, _>(rng, k, 24);
    let mut pts = vec![(S::zero(), S::zero())];
    pts.extend(xs.into_iter().zip(ys));
    pts.push((S::one(), S::one()));
    PlHomeo::new(Ambient::Interval, pts).expect("increasing vertices")
}

/// A lift of an orientation-preserving PL homeomorphism of the circle.
pub fn circle_lift<S: Scalar, R: Rng + ?Sized>(rng: &mut R, max_kinks: usize) -> PlHomeo<S> {
    let k = rng.gen_range(0..=max_kinks);
    let c = S::from_ratio(rng.gen_range(-12..12), 12);
    let xs = distinct_units::<S, _>(rng, k, 24);
    let ys = distinct_units::<S, _>(rng, k, 24);
    let mut pts = vec![(S::zero(), c.clone())];
    pts.extend(xs.into_iter().zip(ys.into_iter().map(|y| y + c.clone())));
    pts.push((S::one(), S::one() + c));
    PlHomeo::new(Ambient::Circle, pts).expect("increasing lift")
}

/// A circle lift of either degree.
pub fn circle_lift_any<S: Scalar, R: Rng + ?Sized>(rng: &mut R, max_kinks: usize) -> PlHomeo<S> {
    let h = circle_lift(rng, max_kinks);
    if rng.gen_bool(0.5) {
        h
    } else {
        let r = PlHomeo::reflection(Ambient::Circle).expect("circle reflection");
        r.after(&h).expect("composable")
    }
}

/// An increasing PL homeomorphism of the line, kinks in `(-2, 2)`.
pub fn line_homeo<S: Scalar, R: Rng + ?Sized>(rng: &mut R, max_kinks: usize) -> PlHomeo<S> {
    let k = rng.gen_range(0..=max_kinks);
    let four = S::from_int(4);
    let two = S::from_int(2);
    let xs: Vec<S> = distinct_units::<S, _>(rng, k + 2, 48).into_iter().map(|u| u * four.clone() - two.clone()).collect();
    let mut y = S::from_ratio(rng.gen_range(-24..24), 12);
    let mut pts = Vec::with_capacity(xs.len());
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            let slope = S::from_ratio(rng.gen_range(1..=12), 4);
            y = y + slope * (x.clone() - xs[i - 1].clone());
        }
        pts.push((x.clone(), y.clone()));
    }
    PlHomeo::new(Ambient::Line, pts).expect("increasing vertices")
}

/// A homeomorphism of the line sending each integer `k` to `k + n`: a random
/// map on each of the cells `[-1, 0]` and `[0, 1]`, a translation elsewhere.
pub fn z_preserving<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: i64, max_kinks: usize) -> PlHomeo<S> {
    let shift = S::from_int(n);
    let mut pts = vec![(S::from_int(-2), S::from_int(-2) + shift.clone())];
    for cell in [-1i64, 0] {
        let base = S::from_int(cell);
        for (x, y) in interval_homeo::<S, _>(rng, max_kinks).points() {
            if x.is_one() {
                continue;
            }
            pts.push((base.clone() + x.clone(), base.clone() + y.clone() + shift.clone()));
        }
    }
    pts.push((S::one(), S::one() + shift.clone()));
    pts.push((S::from_int(2), S::from_int(2) + shift));
    PlHomeo::new(Ambient::Line, pts).expect("increasing vertices")
}

/// An increasing map of `[0, 1]` fixing each of `fixed`, random on the gaps
/// between them.
pub fn fixing_homeo<S: Scalar, R: Rng + ?Sized>(rng: &mut R, fixed: &[S], max_kinks: usize) -> PlHomeo<S> {
    let mut knots = vec![S::zero()];
    knots.extend(fixed.iter().filter(|x| !x.is_zero() && !x.is_one()).cloned());
    knots.push(S::one());
    let mut pts = vec![(S::zero(), S::zero())];
    for w in knots.windows(2) {
        let len = w[1].clone() - w[0].clone();
        for (x, y) in &interval_homeo::<S, _>(rng, max_kinks).points()[1..] {
            pts.push((w[0].clone() + len.clone() * x.clone(), w[0].clone() + len.clone() * y.clone()));
        }
    }
    PlHomeo::new(Ambient::Interval, pts).expect("increasing vertices")
}

/// A flow of `[0, 1]` every frame of which fixes the boundary points of `n`.
pub fn stationary_flow<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: &CompactSubset<S>, max_inner: usize) -> PlFlow<S> {
    let fixed = n.boundary_points();
    let inner = rng.gen_range(0..=max_inner);
    let mut times = vec![S::zero()];
    times.extend(distinct_units::<S, _>(rng, inner, 12));
    times.push(S::one());
    let mut frames = vec![PlHomeo::identity(Ambient::Interval)];
    for _ in 1..times.len() {
        frames.push(fixing_homeo(rng, &fixed, 2));
    }
    PlFlow::new(Ambient::Interval, times, frames).expect("valid key frames")
}

/// A homeomorphism of the given ambient suitable as a flow frame.
pub fn frame<S: Scalar, R: Rng + ?Sized>(rng: &mut R, ambient: Ambient, max_kinks: usize) -> PlHomeo<S> {
    match ambient {
        Ambient::Interval => interval_homeo(rng, max_kinks),
        Ambient::Circle => circle_lift(rng, max_kinks),
        Ambient::Line => line_homeo(rng, max_kinks),
    }
}

/// A flow with up to `max_inner` key times strictly between 0 and 1.
pub fn flow<S: Scalar, R: Rng + ?Sized>(rng: &mut R, ambient: Ambient, max_inner: usize, max_kinks: usize) -> PlFlow<S> {
    let inner = rng.gen_range(0..=max_inner);
    let mut times = vec![S::zero()];
    times.extend(distinct_units::<S, _>(rng, inner, 12));
    times.push(S::one());
    let mut frames = vec![PlHomeo::identity(ambient)];
    for _ in 1..times.len() {
        frames.push(frame(rng, ambient, max_kinks));
    }
    PlFlow::new(ambient, times, frames).expect("valid key frames")
}

/// A flow of the line ending in a `Z`-preserving map with shift `n`.
pub fn z_flow<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: i64, max_inner: usize, max_kinks: usize) -> PlFlow<S> {
    let f = flow::<S, _>(rng, Ambient::Line, max_inner, max_kinks);
    let mut times = f.key_times().to_vec();
    let mut frames = f.frames().to_vec();
    times.pop();
    frames.pop();
    times.push(S::one());
    frames.push(z_preserving(rng, n, max_kinks));
    PlFlow::new(Ambient::Line, times, frames).expect("valid key frames")
}

/// A compact subset of `[0, 1]` with at most `max_components` components,
/// containing 0 or 1 now and then.
pub fn compact_subset<S: Scalar, R: Rng + ?Sized>(rng: &mut R, max_components: usize) -> CompactSubset<S> {
    let c = rng.gen_range(0..=max_components);
    if c == 0 {
        return CompactSubset::empty();
    }
    let den = 4 * c as i64 + 4;
    let mut ends: Vec<S> = distinct_units(rng, 2 * c, den);
    if rng.gen_bool(0.25) {
        ends[0] = S::zero();
    }
    if rng.gen_bool(0.25) {
        ends[2 * c - 1] = S::one();
    }
    let comps = ends
        .chunks(2)
        .map(|pair| {
            if rng.gen_bool(0.5) {
                Component::Interval(pair[0].clone(), pair[1].clone())
            } else if pair[1].is_one() {
                Component::Point(pair[1].clone())
            } else {
                Component::Point(pair[0].clone())
            }
        })
        .collect();
    CompactSubset::new(comps).expect("separated components")
}

/// `n` distinct points of the open square with coordinates `k / den`.
pub fn point_config<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, den: i64) -> PointConfig<S> {
    let mut pts: Vec<Point<S>> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (unit(rng, den), unit(rng, den));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointConfig::new(pts).expect("distinct interior points")
}

/// A strand set starting at `start` with `moves` random intermediate
/// positions per strand. Draws are repeated until the strands are disjoint.
pub fn strands_from<S: Scalar, R: Rng + ?Sized>(rng: &mut R, start: &PointConfig<S>, moves: usize) -> StrandSet<S> {
    let n = start.len();
    let mut times = vec![S::zero()];
    times.extend(distinct_units::<S, _>(rng, moves, 16));
    times.push(S::one());
    loop {
        let mut strands = Vec::with_capacity(n);
        for p in start.points() {
            let mut verts = vec![p.clone()];
            for _ in 1..times.len() {
                verts.push((unit(rng, 97), unit(rng, 89)));
            }
            strands.push(Strand::new(times.clone(), verts).expect("interior vertices"));
        }
        if let Ok(s) = StrandSet::new(strands) {
            return s;
        }
    }
}

/// A random strand set on `n` points.
pub fn strand_set<S: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize, moves: usize) -> StrandSet<S> {
    let start = point_config(rng, n, 29);
    strands_from(rng, &start, moves)
}
