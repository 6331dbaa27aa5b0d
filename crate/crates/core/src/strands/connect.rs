//! A fake motion between any two configurations of the same size.
//!
//! Points move one at a time: first each point of `k` to a parking spot on a
//! horizontal line that meets neither configuration, then each parking spot
//! to its point of `k2`. A straight move that would pass through a resting
//! point is bent at its midpoint.

use super::{Point, PointConfig, Strand, StrandSet};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Is `p` on the closed segment `a b`?
fn on_segment<S: Scalar>(p: &Point<S>, a: &Point<S>, b: &Point<S>) -> bool {
    let (ux, uy) = (b.0.clone() - a.0.clone(), b.1.clone() - a.1.clone());
    let (vx, vy) = (p.0.clone() - a.0.clone(), p.1.clone() - a.1.clone());
    if ux.clone() * vy.clone() != uy.clone() * vx.clone() {
        return false;
    }
    let dot = ux.clone() * vx + uy.clone() * vy;
    dot >= S::zero() && dot <= ux.clone() * ux + uy.clone() * uy
}

fn inside<S: Scalar>(p: &Point<S>) -> bool {
    p.0 > S::zero() && p.0 < S::one() && p.1 > S::zero() && p.1 < S::one()
}

/// Path from `a` to `b` missing every obstacle: the straight segment, or two
/// segments through a point pushed off the midpoint.
fn route<S: Scalar>(a: &Point<S>, b: &Point<S>, obstacles: &[Point<S>]) -> Vec<Point<S>> {
    let clear = |p: &Point<S>, q: &Point<S>| obstacles.iter().all(|o| !on_segment(o, p, q));
    if clear(a, b) {
        return vec![a.clone(), b.clone()];
    }
    let half = S::half();
    let mid = ((a.0.clone() + b.0.clone()) * half.clone(), (a.1.clone() + b.1.clone()) * half);
    let perp = (a.1.clone() - b.1.clone(), b.0.clone() - a.0.clone());
    // each obstacle rules out at most one offset, so this terminates
    for m in 2.. {
        for sign in [1, -1] {
            let delta = S::from_ratio(sign, m);
            let via = (mid.0.clone() + delta.clone() * perp.0.clone(), mid.1.clone() + delta * perp.1.clone());
            if inside(&via) && clear(a, &via) && clear(&via, b) {
                return vec![a.clone(), via, b.clone()];
            }
        }
    }
    unreachable!()
}

/// A height `j / m` used by no point of either configuration.
fn parking_height<S: Scalar>(used: &[Point<S>]) -> S {
    for m in 2i64.. {
        for j in 1..m {
            let y = S::from_ratio(j, m);
            if used.iter().all(|p| p.1 != y) {
                return y;
            }
        }
    }
    unreachable!()
}

/// A strand set taking the `i`-th point of `k` to the `i`-th point of `k2`.
/// Identical lists give the identity.
pub fn connect_configs<S: Scalar>(k: &PointConfig<S>, k2: &PointConfig<S>) -> Result<StrandSet<S>> {
    let n = k.len();
    if n != k2.len() {
        return Err(Error::ConfigMismatch(format!("{n} points cannot move onto {}", k2.len())));
    }
    if k == k2 {
        return Ok(StrandSet::identity(k));
    }
    let all: Vec<Point<S>> = k.points().iter().chain(k2.points()).cloned().collect();
    let y = parking_height(&all);
    let spots: Vec<Point<S>> = (0..n).map(|i| (S::from_ratio(i as i64 + 1, n as i64 + 1), y.clone())).collect();

    // current position of every point, and the vertices of its path so far
    let mut here: Vec<Point<S>> = k.points().to_vec();
    let mut paths: Vec<Vec<(S, Point<S>)>> = here.iter().map(|p| vec![(S::zero(), p.clone())]).collect();
    let slots = 2 * n as i64;
    let targets = spots.iter().chain(k2.points());
    for (step, target) in targets.enumerate() {
        let i = step % n;
        let t0 = S::from_ratio(step as i64, slots);
        let t1 = S::from_ratio(step as i64 + 1, slots);
        let obstacles: Vec<Point<S>> = (0..n).filter(|&j| j != i).map(|j| here[j].clone()).collect();
        let path = route(&here[i], target, &obstacles);
        for (j, p) in paths.iter_mut().enumerate() {
            if j == i {
                p.push((t0.clone(), here[i].clone()));
                if path.len() == 3 {
                    p.push(((t0.clone() + t1.clone()) * S::half(), path[1].clone()));
                }
                p.push((t1.clone(), target.clone()));
            } else {
                p.push((t1.clone(), here[j].clone()));
            }
        }
        here[i] = target.clone();
    }
    let strands = paths
        .into_iter()
        .map(|p| {
            let mut times: Vec<S> = Vec::with_capacity(p.len());
            let mut verts = Vec::with_capacity(p.len());
            for (t, v) in p {
                if times.last() == Some(&t) {
                    continue;
                }
                times.push(t);
                verts.push(v);
            }
            Strand::new(times, verts)
        })
        .collect::<Result<Vec<_>>>()?;
    StrandSet::new(strands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strands::braid_word_of;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn same_list_is_identity() {
        let k = PointConfig::new(vec![(q(1, 3), q(1, 2)), (q(2, 3), q(1, 2))]).unwrap();
        assert_eq!(connect_configs(&k, &k).unwrap(), StrandSet::identity(&k));
    }

    #[test]
    fn swap_is_odd() {
        let k = PointConfig::new(vec![(q(1, 3), q(1, 2)), (q(2, 3), q(1, 2))]).unwrap();
        let k2 = PointConfig::new(vec![(q(2, 3), q(1, 2)), (q(1, 3), q(1, 2))]).unwrap();
        let f = connect_configs(&k, &k2).unwrap();
        assert_eq!(f.positions_at(&q(1, 1)), k2.points());
        let w = braid_word_of(&f).unwrap();
        assert_eq!(w.exponent_sum().rem_euclid(2), 1);
        assert!(!w.permutation().is_identity());
    }

    #[test]
    fn collinear_points_force_detours() {
        let k = PointConfig::new(vec![(q(1, 5), q(1, 5)), (q(2, 5), q(2, 5)), (q(3, 5), q(3, 5))]).unwrap();
        let k2 = PointConfig::new(vec![(q(3, 5), q(3, 5)), (q(2, 5), q(2, 5)), (q(1, 5), q(1, 5))]).unwrap();
        let f = connect_configs(&k, &k2).unwrap();
        assert!(f.end().same_set(&k2));
        assert!(braid_word_of(&f).is_ok());
    }
}
