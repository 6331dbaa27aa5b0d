//! Reading off a braid word from a strand set by projecting to the x-axis.
//!
//! Strands are labelled by the lexicographic order of their start points.
//! Each time two x-adjacent strands swap sides a generator is emitted: its
//! index is the rank of the left strand, and it is positive when the left
//! strand has the larger y at the crossing (it passes in front).

use std::cmp::Ordering;

use super::{lex, merge_times, StrandSet};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::scalar::{cmp, Scalar};

/// Shear denominators tried in order; `0` means no shear, otherwise the
/// projection is `x + y / d`.
pub const SHEARS: [i64; 16] = [0, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173];

/// One crossing in the projection: when and where it happens, the letter it
/// contributes, and the strand (by index) passing in front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing<S> {
    pub time: S,
    pub x: S,
    pub letter: i32,
    pub over: usize,
}

struct Event<S> {
    time: S,
    x: S,
    left: usize,
    right: usize,
}

/// The projected coordinate `x + eps y`.
pub fn sheared<S: Scalar>(p: &(S, S), eps: &S) -> S {
    p.0.clone() + eps.clone() * p.1.clone()
}

/// The crossings seen with projection `x + y / denominator`, in time order.
pub fn crossings_with_shear<S: Scalar>(f: &StrandSet<S>, denominator: i64) -> Result<Vec<Crossing<S>>> {
    let degenerate = |why: &str| Err(Error::DegenerateProjection(why.to_string()));
    let n = f.len();
    if n == 0 {
        return degenerate("no strands");
    }
    let eps = if denominator == 0 { S::zero() } else { S::from_ratio(1, denominator) };
    let strands = f.strands();

    // endpoint order in the projection must be strict and agree with the
    // lexicographic order, so that shears never relabel the ends
    for t in [S::zero(), S::one()] {
        let pts = f.positions_at(&t);
        let mut by_lex: Vec<usize> = (0..n).collect();
        by_lex.sort_by(|&a, &b| lex(&pts[a], &pts[b]));
        for w in by_lex.windows(2) {
            if sheared(&pts[w[0]], &eps) >= sheared(&pts[w[1]], &eps) {
                return degenerate("endpoint order changes under the projection");
            }
        }
    }

    let mut events: Vec<Event<S>> = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let grid = merge_times(strands[j].times(), strands[k].times());
            let diff = |t: &S| sheared(&strands[j].at(t), &eps) - sheared(&strands[k].at(t), &eps);
            let d: Vec<S> = grid.iter().map(&diff).collect();
            let last = d.len() - 1;
            if d[0].is_zero() || d[last].is_zero() {
                return degenerate("strands share an x-coordinate at an end");
            }
            let push = |time: S, events: &mut Vec<Event<S>>, before: &S| {
                let x = sheared(&strands[j].at(&time), &eps);
                // before the crossing, the strand with smaller x is on the left
                let (left, right) = if *before < S::zero() { (j, k) } else { (k, j) };
                events.push(Event { time, x, left, right });
            };
            for i in 0..last {
                let (d0, d1) = (&d[i], &d[i + 1]);
                if d0.is_zero() && d1.is_zero() {
                    return degenerate("strands overlap in projection over an interval");
                }
                if d1.is_zero() {
                    let d2 = &d[i + 2];
                    if d2.is_zero() {
                        continue; // reported on the next segment
                    }
                    if (*d0 < S::zero()) == (*d2 < S::zero()) {
                        return degenerate("tangential coincidence in projection");
                    }
                    push(grid[i + 1].clone(), &mut events, d0);
                } else if !d0.is_zero() && (*d0 < S::zero()) != (*d1 < S::zero()) {
                    let (t0, t1) = (&grid[i], &grid[i + 1]);
                    let time = t0.clone() + d0.clone() / (d0.clone() - d1.clone()) * (t1.clone() - t0.clone());
                    push(time, &mut events, d0);
                }
            }
        }
    }
    events.sort_by(|a, b| cmp(&a.time, &b.time).then_with(|| cmp(&a.x, &b.x)));
    for w in events.windows(2) {
        if w[0].time == w[1].time {
            let shared = [w[0].left, w[0].right].iter().any(|s| *s == w[1].left || *s == w[1].right);
            if shared || w[0].x == w[1].x {
                return degenerate("simultaneous crossings interfere");
            }
        }
    }

    let start = f.positions_at(&S::zero());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cmp(&sheared(&start[a], &eps), &sheared(&start[b], &eps)));
    let mut out = Vec::with_capacity(events.len());
    for e in events {
        let at = order.iter().position(|&s| s == e.left).expect("strand present");
        if at + 1 >= n || order[at + 1] != e.right {
            return degenerate("crossing strands are not adjacent");
        }
        let (l, r) = (strands[e.left].at(&e.time), strands[e.right].at(&e.time));
        let gen = at as i32 + 1;
        let letter = match cmp(&l.1, &r.1) {
            Ordering::Greater => gen,
            Ordering::Less => -gen,
            Ordering::Equal => unreachable!("distinct points with equal projection differ in y"),
        };
        out.push(Crossing { time: e.time, x: e.x, letter, over: if letter > 0 { e.left } else { e.right } });
        order.swap(at, at + 1);
    }
    Ok(out)
}

/// The braid word read with projection `x + y / denominator` (no shear for
/// `0`), or `DegenerateProjection` if that projection is not generic.
pub fn braid_word_with_shear<S: Scalar>(f: &StrandSet<S>, denominator: i64) -> Result<BraidWord> {
    let crossings = crossings_with_shear(f, denominator)?;
    BraidWord::new(f.len(), crossings.iter().map(|c| c.letter).collect())
}

/// The first shear denominator in [`SHEARS`] giving a generic projection,
/// with the crossings seen through it.
pub fn crossings<S: Scalar>(f: &StrandSet<S>) -> Result<(i64, Vec<Crossing<S>>)> {
    let mut last = Error::DegenerateProjection("no shear tried".into());
    for d in SHEARS {
        match crossings_with_shear(f, d) {
            Ok(c) => return Ok((d, c)),
            Err(e @ Error::DegenerateProjection(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// The braid word of `f`, using the first shear in [`SHEARS`] that makes the
/// projection generic.
pub fn braid_word_of<S: Scalar>(f: &StrandSet<S>) -> Result<BraidWord> {
    let (_, crossings) = crossings(f)?;
    BraidWord::new(f.len(), crossings.iter().map(|c| c.letter).collect())
}

/// Whether `f` and `g` are equivalent fake motions: `f` followed by `g`
/// backwards must be a trivial braid.
pub fn strands_equivalent<S: Scalar>(f: &StrandSet<S>, g: &StrandSet<S>) -> Result<bool> {
    if f.len() != g.len() || !f.start().same_set(&g.start()) || !f.end().same_set(&g.end()) {
        return Err(Error::ConfigMismatch("strand sets do not share their end configurations".into()));
    }
    let loop_ = StrandSet::box_compose(f, &g.reverse())?;
    Ok(braid_word_of(&loop_)?.is_trivial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strands::{PointConfig, Strand};
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn pair() -> PointConfig<Rational> {
        PointConfig::new(vec![(q(1, 4), q(1, 2)), (q(3, 4), q(1, 2))]).unwrap()
    }

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn half_twists() {
        let k = pair();
        assert_eq!(braid_word_of(&StrandSet::identity(&k)).unwrap(), BraidWord::identity(2));
        let cw = StrandSet::half_twist(&k, 0, 1, true).unwrap();
        let ccw = StrandSet::half_twist(&k, 0, 1, false).unwrap();
        assert_eq!(braid_word_of(&cw).unwrap(), word(2, &[1]));
        assert_eq!(braid_word_of(&ccw).unwrap(), word(2, &[-1]));
        assert_eq!(braid_word_of(&cw.reverse()).unwrap(), word(2, &[-1]));
        let full = StrandSet::box_compose(&cw, &cw).unwrap();
        let w = braid_word_of(&full).unwrap();
        assert_eq!(w, word(2, &[1, 1]));
        assert!(!w.is_trivial());
        assert!(w.permutation().is_identity());
        assert!(!strands_equivalent(&cw, &ccw).unwrap());
        assert!(strands_equivalent(&cw, &cw).unwrap());
    }

    #[test]
    fn vertical_pair_needs_lexicographic_labels() {
        // same x at the start: the lower point is labelled first
        let k = PointConfig::new(vec![(q(1, 2), q(1, 4)), (q(1, 2), q(3, 4))]).unwrap();
        let h = StrandSet::half_twist(&k, 0, 1, true).unwrap();
        let w = braid_word_of(&h).unwrap();
        assert_eq!(w.len(), 1);
        assert!(braid_word_with_shear(&h, 0).is_err());
    }

    #[test]
    fn detour_with_same_crossing_pattern_is_equivalent() {
        let k = pair();
        let cw = StrandSet::half_twist(&k, 0, 1, true).unwrap();
        let t = vec![q(0, 1), q(1, 3), q(2, 3), q(1, 1)];
        let a = Strand::new(t.clone(), vec![(q(1, 4), q(1, 2)), (q(1, 3), q(7, 8)), (q(2, 3), q(5, 6)), (q(3, 4), q(1, 2))])
            .unwrap();
        let b = Strand::new(t, vec![(q(3, 4), q(1, 2)), (q(2, 3), q(1, 8)), (q(1, 3), q(1, 5)), (q(1, 4), q(1, 2))]).unwrap();
        let other = StrandSet::new(vec![a, b]).unwrap();
        assert!(strands_equivalent(&cw, &other).unwrap());
        let lone = StrandSet::identity(&PointConfig::new(vec![(q(1, 3), q(1, 3))]).unwrap());
        assert!(matches!(strands_equivalent(&cw, &lone), Err(Error::ConfigMismatch(_))));
    }
}
