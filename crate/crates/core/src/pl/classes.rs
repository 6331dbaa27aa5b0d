//! Integer and sign invariants of 1-D flows, and the Alexander isotopy.

use super::flow::PlFlow;
use super::homeo::{Ambient, PlHomeo};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `+1` if the lift preserves orientation, `-1` otherwise. Two circle maps are
/// isotopic exactly when their degrees agree.
pub fn circle_degree<S: Scalar>(h: &PlHomeo<S>) -> i32 {
    h.degree()
}

/// Net number of turns made by the basepoint `p` along a loop of the circle.
pub fn winding_class<S: Scalar>(f: &PlFlow<S>, p: &S) -> Result<i64> {
    if f.ambient() != Ambient::Circle {
        return Err(Error::AmbientMismatch(Ambient::Circle.to_string(), f.ambient().to_string()));
    }
    let shift = f.endpoint().eval(p)? - p.clone();
    shift
        .to_i64()
        .ok_or_else(|| Error::NotALoop(format!("{} moves by {}", p.to_exact_string(), shift.to_exact_string())))
}

/// For a flow of the line whose endpoint preserves the integers, the integer
/// `n = f_1(0)`; the endpoint then acts on `Z` as `k -> k + n`.
pub fn translation_class<S: Scalar>(f: &PlFlow<S>) -> Result<i64> {
    if f.ambient() != Ambient::Line {
        return Err(Error::AmbientMismatch(Ambient::Line.to_string(), f.ambient().to_string()));
    }
    let h = f.endpoint();
    let not_z = |msg: String| Err(Error::NotZPreserving(msg));
    let pts = h.points();
    let (first, last) = (&pts[0], &pts[pts.len() - 1]);
    let (second, penult) = (&pts[1], &pts[pts.len() - 2]);
    let slope = |a: &(S, S), b: &(S, S)| (b.1.clone() - a.1.clone()) / (b.0.clone() - a.0.clone());
    // Outside the kinks the map is affine; it preserves Z there only with slope 1.
    if !slope(first, second).is_one() || !slope(penult, last).is_one() {
        return not_z("tails are not unit-slope translations".into());
    }
    let n = h.eval(&S::zero())?;
    let Some(n_int) = n.to_i64() else {
        return not_z(format!("0 is sent to {}", n.to_exact_string()));
    };
    let lo = first.0.floor() - S::one();
    let hi = last.0.floor() + S::one();
    let mut k = lo;
    while k <= hi {
        let image = h.eval(&k)?;
        if image != k.clone() + n.clone() {
            return not_z(format!("{} is sent to {}", k.to_exact_string(), image.to_exact_string()));
        }
        k = k + S::one();
    }
    Ok(n_int)
}

/// The coning isotopy `f_t(x) = t h(x / t)` for `x <= t` and `x` otherwise.
///
/// Key frames sit at `t = 0`, at each kink of `h`, and at `t = 1`. They are
/// exact; between them the family is interpolated, so the frames at
/// intermediate times only approximate the cone.
pub fn alexander_flow<S: Scalar>(h: &PlHomeo<S>) -> Result<PlFlow<S>> {
    if h.ambient() != Ambient::Interval || !h.is_increasing() {
        return Err(Error::NotBoundaryFixing);
    }
    let kinks = h.kinks();
    let mut times = vec![S::zero()];
    times.extend(kinks.iter().cloned());
    times.push(S::one());
    let mut frames = vec![PlHomeo::identity(Ambient::Interval)];
    for t in &times[1..] {
        let mut pts = vec![(S::zero(), S::zero())];
        for u in &kinks {
            pts.push((u.clone() * t.clone(), t.clone() * h.eval(u)?));
        }
        if !t.is_one() {
            pts.push((t.clone(), t.clone()));
        }
        pts.push((S::one(), S::one()));
        frames.push(PlHomeo::new(Ambient::Interval, pts)?);
    }
    PlFlow::new(Ambient::Interval, times, frames)
}
