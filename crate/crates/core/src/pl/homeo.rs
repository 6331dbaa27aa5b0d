use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{cmp, Scalar};
use crate::subset::CompactSubset;

/// The 1-D manifold a map acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `[0, 1]`
    Interval,
    /// The real line; maps are affine outside their breakpoints.
    Line,
    /// The circle `R/Z`, handled through lifts `f(x + 1) = f(x) + d`.
    Circle,
}

impl Ambient {
    pub fn name(self) -> &'static str {
        match self {
            Ambient::Interval => "interval",
            Ambient::Line => "line",
            Ambient::Circle => "circle",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "interval" => Ok(Ambient::Interval),
            "line" => Ok(Ambient::Line),
            "circle" => Ok(Ambient::Circle),
            other => Err(Error::Parse(format!("unknown ambient {other:?}"))),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A piecewise-linear self-homeomorphism of a 1-D ambient, stored in
/// canonical form so that derived equality is equality of maps.
///
/// Interval and circle maps always carry points at `x = 0` and `x = 1` and no
/// collinear interior points. A line map with no kinks is stored by its values
/// at 0 and 1; otherwise by its kinks flanked by one point on each tail, at
/// unit distance from the outermost kinks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlHomeo<S> {
    ambient: Ambient,
    points: Vec<(S, S)>,
}

fn collinear<S: Scalar>(a: &(S, S), b: &(S, S), c: &(S, S)) -> bool {
    (b.0.clone() - a.0.clone()) * (c.1.clone() - a.1.clone()) == (c.0.clone() - a.0.clone()) * (b.1.clone() - a.1.clone())
}

/// Drops interior vertices that lie on the segment joining their neighbours.
pub(crate) fn remove_collinear<S: Scalar>(points: Vec<(S, S)>) -> Vec<(S, S)> {
    let mut out: Vec<(S, S)> = Vec::with_capacity(points.len());
    for p in points {
        while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], &p) {
            out.pop();
        }
        out.push(p);
    }
    out
}

/// Value on the segment through `a` and `b` (extended beyond them).
fn on_line<S: Scalar>(a: &(S, S), b: &(S, S), x: &S) -> S {
    a.1.clone() + (x.clone() - a.0.clone()) * (b.1.clone() - a.1.clone()) / (b.0.clone() - a.0.clone())
}

/// Inverse of [`on_line`].
fn on_line_inverse<S: Scalar>(a: &(S, S), b: &(S, S), y: &S) -> S {
    a.0.clone() + (y.clone() - a.1.clone()) * (b.0.clone() - a.0.clone()) / (b.1.clone() - a.1.clone())
}

fn sorted_unique<S: Scalar>(mut xs: Vec<S>) -> Vec<S> {
    xs.sort_by(cmp);
    xs.dedup();
    xs
}

impl<S: Scalar> PlHomeo<S> {
    /// Validates and canonicalises a list of `(x, f(x))` vertices.
    pub fn new(ambient: Ambient, points: Vec<(S, S)>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidMap(msg.to_string()));
        if points.len() < 2 {
            return bad("need at least two vertices");
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return bad("x-coordinates must be strictly increasing");
        }
        let increasing = points[0].1 < points[1].1;
        let monotone = points.windows(2).all(|w| if increasing { w[0].1 < w[1].1 } else { w[0].1 > w[1].1 });
        if !monotone {
            return bad("values must be strictly monotone");
        }
        let (first, last) = (&points[0], &points[points.len() - 1]);
        match ambient {
            Ambient::Interval => {
                if !first.0.is_zero() || !last.0.is_one() {
                    return bad("interval map must be given on exactly [0, 1]");
                }
                let ends_ok = if increasing {
                    first.1.is_zero() && last.1.is_one()
                } else {
                    first.1.is_one() && last.1.is_zero()
                };
                if !ends_ok {
                    return bad("interval map must send {0, 1} onto {0, 1}");
                }
            }
            Ambient::Circle => {
                if !first.0.is_zero() || !last.0.is_one() {
                    return bad("circle lift must be given on exactly [0, 1]");
                }
                let step = last.1.clone() - first.1.clone();
                let want = if increasing { S::one() } else { -S::one() };
                if step != want {
                    return bad("circle lift must satisfy f(1) = f(0) + degree");
                }
            }
            Ambient::Line => {}
        }
        Ok(Self::canonical(ambient, points))
    }

    fn canonical(ambient: Ambient, points: Vec<(S, S)>) -> Self {
        let points = remove_collinear(points);
        let points = match ambient {
            Ambient::Interval | Ambient::Circle => points,
            Ambient::Line => {
                let (a, b) = (&points[0], &points[points.len() - 1]);
                let at = |x: S| {
                    let y = on_line(a, b, &x);
                    (x, y)
                };
                if points.len() == 2 {
                    vec![at(S::zero()), at(S::one())]
                } else {
                    let kinks = &points[1..points.len() - 1];
                    let lo = kinks[0].0.clone() - S::one();
                    let hi = kinks[kinks.len() - 1].0.clone() + S::one();
                    let lo_pt = (lo.clone(), on_line(&points[0], &points[1], &lo));
                    let n = points.len();
                    let hi_pt = (hi.clone(), on_line(&points[n - 2], &points[n - 1], &hi));
                    let mut out = Vec::with_capacity(kinks.len() + 2);
                    out.push(lo_pt);
                    out.extend(kinks.iter().cloned());
                    out.push(hi_pt);
                    out
                }
            }
        };
        PlHomeo { ambient, points }
    }

    /// Builds the map that agrees with `eval` at every `xs`, interpolating
    /// linearly in between. `xs` must contain every kink of the target map.
    pub fn from_samples<F>(ambient: Ambient, xs: Vec<S>, mut eval: F) -> Result<Self>
    where
        F: FnMut(&S) -> Result<S>,
    {
        let mut xs = xs;
        match ambient {
            Ambient::Interval | Ambient::Circle => {
                xs.retain(|x| *x >= S::zero() && *x <= S::one());
                xs.push(S::zero());
                xs.push(S::one());
            }
            Ambient::Line => {
                xs.push(S::zero());
                xs.push(S::one());
                let xs_sorted = sorted_unique(xs.clone());
                xs.push(xs_sorted[0].clone() - S::one());
                xs.push(xs_sorted[xs_sorted.len() - 1].clone() + S::one());
            }
        }
        let xs = sorted_unique(xs);
        let mut points = Vec::with_capacity(xs.len());
        for x in xs {
            let y = eval(&x)?;
            points.push((x, y));
        }
        Self::new(ambient, points)
    }

    pub fn identity(ambient: Ambient) -> Self {
        let pts = vec![(S::zero(), S::zero()), (S::one(), S::one())];
        PlHomeo { ambient, points: pts }
    }

    /// `x -> x + c` on the line or as a circle lift.
    pub fn translation(ambient: Ambient, c: S) -> Result<Self> {
        if ambient == Ambient::Interval && !c.is_zero() {
            return Err(Error::InvalidMap("translations do not preserve [0, 1]".into()));
        }
        Self::new(ambient, vec![(S::zero(), c.clone()), (S::one(), S::one() + c)])
    }

    /// `x -> -x` (circle or line).
    pub fn reflection(ambient: Ambient) -> Result<Self> {
        match ambient {
            Ambient::Interval => Self::new(ambient, vec![(S::zero(), S::one()), (S::one(), S::zero())]),
            _ => Self::new(ambient, vec![(S::zero(), S::zero()), (S::one(), -S::one())]),
        }
    }

    /// The two-segment map of `[0, 1]` through `(x, x2)`.
    pub fn pivot(x: S, x2: S) -> Result<Self> {
        Self::new(Ambient::Interval, vec![(S::zero(), S::zero()), (x, x2), (S::one(), S::one())])
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Canonical vertices.
    pub fn points(&self) -> &[(S, S)] {
        &self.points
    }

    /// Breakpoint x-coordinates, including the stored end vertices.
    pub fn breakpoints(&self) -> Vec<S> {
        self.points.iter().map(|p| p.0.clone()).collect()
    }

    /// Interior kinks only.
    pub fn kinks(&self) -> Vec<S> {
        match self.ambient {
            Ambient::Line if self.points.len() == 2 => Vec::new(),
            _ => self.points[1..self.points.len() - 1].iter().map(|p| p.0.clone()).collect(),
        }
    }

    pub fn is_increasing(&self) -> bool {
        self.points[0].1 < self.points[1].1
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ambient)
    }

    /// `+1` for orientation-preserving maps, `-1` otherwise.
    pub fn degree(&self) -> i32 {
        if self.is_increasing() {
            1
        } else {
            -1
        }
    }

    fn segment_eval(&self, x: &S) -> S {
        let pts = &self.points;
        let n = pts.len();
        let i = match pts.iter().position(|p| p.0 >= *x) {
            Some(0) => 0,
            Some(i) => i - 1,
            None => n - 2,
        };
        let i = i.min(n - 2);
        if pts[i].0 == *x {
            return pts[i].1.clone();
        }
        on_line(&pts[i], &pts[i + 1], x)
    }

    pub fn eval(&self, x: &S) -> Result<S> {
        match self.ambient {
            Ambient::Interval => {
                if *x < S::zero() || *x > S::one() {
                    return Err(Error::OutOfDomain(format!("{} is not in [0, 1]", x.to_exact_string())));
                }
                Ok(self.segment_eval(x))
            }
            Ambient::Line => Ok(self.segment_eval(x)),
            Ambient::Circle => {
                let k = x.floor();
                let r = x.clone() - k.clone();
                let d = S::from_int(self.degree() as i64);
                Ok(self.segment_eval(&r) + d * k)
            }
        }
    }

    fn segment_solve(&self, y: &S) -> S {
        let pts = &self.points;
        let n = pts.len();
        let inc = self.is_increasing();
        let past = |p: &(S, S)| if inc { p.1 >= *y } else { p.1 <= *y };
        let i = match pts.iter().position(past) {
            Some(0) => 0,
            Some(i) => i - 1,
            None => n - 2,
        };
        let i = i.min(n - 2);
        if pts[i].1 == *y {
            return pts[i].0.clone();
        }
        on_line_inverse(&pts[i], &pts[i + 1], y)
    }

    /// The unique `x` with `f(x) = y`.
    pub fn eval_inverse(&self, y: &S) -> Result<S> {
        match self.ambient {
            Ambient::Interval => {
                if *y < S::zero() || *y > S::one() {
                    return Err(Error::OutOfDomain(format!("{} is not in [0, 1]", y.to_exact_string())));
                }
                Ok(self.segment_solve(y))
            }
            Ambient::Line => Ok(self.segment_solve(y)),
            Ambient::Circle => {
                let f0 = &self.points[0].1;
                let f1 = &self.points[self.points.len() - 1].1;
                let lo = if f0 < f1 { f0.clone() } else { f1.clone() };
                let m = (y.clone() - lo).floor();
                let x0 = self.segment_solve(&(y.clone() - m.clone()));
                Ok(x0 + m * S::from_int(self.degree() as i64))
            }
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient.to_string(), other.ambient.to_string()));
        }
        Ok(())
    }

    /// Every `x` in `[0, 1]` with `inner(x)` congruent to a breakpoint of
    /// `self` modulo the ambient's period.
    fn preimages_of_breakpoints(&self, inner: &Self) -> Result<Vec<S>> {
        let mut out = Vec::new();
        match self.ambient {
            Ambient::Interval | Ambient::Line => {
                for p in &self.points {
                    out.push(inner.eval_inverse(&p.0)?);
                }
            }
            Ambient::Circle => {
                let f0 = inner.points[0].1.clone();
                let f1 = inner.points[inner.points.len() - 1].1.clone();
                let (lo, hi) = if f0 < f1 { (f0, f1) } else { (f1, f0) };
                let k_lo = lo.floor() - S::one();
                let k_hi = hi.floor() + S::one();
                for p in &self.points {
                    let mut k = k_lo.clone();
                    while k <= k_hi {
                        let y = p.0.clone() + k.clone();
                        if lo <= y && y <= hi {
                            out.push(inner.eval_inverse(&y)?);
                        }
                        k = k + S::one();
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &Self) -> Result<Self> {
        self.check_ambient(inner)?;
        let mut xs = inner.breakpoints();
        xs.extend(self.preimages_of_breakpoints(inner)?);
        Self::from_samples(self.ambient, xs, |x| self.eval(&inner.eval(x)?))
    }

    pub fn inverse(&self) -> Self {
        match self.ambient {
            Ambient::Interval | Ambient::Line => {
                let mut pts: Vec<(S, S)> = self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
                if !self.is_increasing() {
                    pts.reverse();
                }
                Self::new(self.ambient, pts).expect("inverse of a valid map")
            }
            Ambient::Circle => {
                // kinks of the inverse are our breakpoint values reduced mod 1
                let ys: Vec<S> = self.points.iter().map(|p| p.1.clone() - p.1.floor()).collect();
                Self::from_samples(Ambient::Circle, ys, |y| self.eval_inverse(y)).expect("inverse of a valid lift")
            }
        }
    }

    /// Pointwise `(1 - lambda) a + lambda b` of two orientation-preserving maps.
    pub fn interpolate(a: &Self, b: &Self, lambda: &S) -> Result<Self> {
        a.check_ambient(b)?;
        if lambda.is_zero() {
            return Ok(a.clone());
        }
        if lambda.is_one() {
            return Ok(b.clone());
        }
        let mut xs = a.breakpoints();
        xs.extend(b.breakpoints());
        Self::from_samples(a.ambient, xs, |x| {
            let (ya, yb) = (a.eval(x)?, b.eval(x)?);
            Ok(crate::scalar::lerp(&ya, &yb, lambda))
        })
    }

    /// Image of a compact subset.
    pub fn image(&self, n: &CompactSubset<S>) -> Result<CompactSubset<S>> {
        n.map_monotone(|x| self.eval(x))
    }
}

impl<S: Scalar> fmt::Display for PlHomeo<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|(x, y)| format!("({}, {})", x.to_exact_string(), y.to_exact_string()))
            .collect();
        write!(f, "{}[{}]", self.ambient, parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn interval(pts: &[(i64, i64, i64, i64)]) -> PlHomeo<Rational> {
        PlHomeo::new(Ambient::Interval, pts.iter().map(|&(a, b, c, d)| (q(a, b), q(c, d))).collect()).unwrap()
    }

    #[test]
    fn collinear_points_are_dropped() {
        let f = interval(&[(0, 1, 0, 1), (1, 4, 1, 4), (1, 2, 1, 2), (1, 1, 1, 1)]);
        assert!(f.is_identity());
        assert_eq!(f.points().len(), 2);
    }

    #[test]
    fn invalid_maps_are_rejected() {
        assert!(PlHomeo::new(Ambient::Interval, vec![(q(0, 1), q(0, 1)), (q(1, 1), q(1, 2))]).is_err());
        assert!(PlHomeo::new(Ambient::Interval, vec![(q(0, 1), q(0, 1)), (q(1, 2), q(3, 4)), (q(1, 1), q(1, 2))]).is_err());
        assert!(PlHomeo::new(Ambient::Circle, vec![(q(0, 1), q(0, 1)), (q(1, 1), q(2, 1))]).is_err());
        assert!(PlHomeo::<Rational>::new(Ambient::Line, vec![(q(0, 1), q(0, 1))]).is_err());
    }

    #[test]
    fn evaluation_and_inverse() {
        let f = interval(&[(0, 1, 0, 1), (1, 2, 1, 4), (1, 1, 1, 1)]);
        assert_eq!(f.eval(&q(1, 2)).unwrap(), q(1, 4));
        assert_eq!(f.eval(&q(3, 4)).unwrap(), q(5, 8));
        assert!(f.eval(&q(2, 1)).is_err());
        let g = f.inverse();
        assert_eq!(g, interval(&[(0, 1, 0, 1), (1, 4, 1, 2), (1, 1, 1, 1)]));
        assert!(g.after(&f).unwrap().is_identity());
        assert!(f.after(&g).unwrap().is_identity());
    }

    #[test]
    fn line_maps_extend_affinely() {
        let t = PlHomeo::translation(Ambient::Line, q(3, 1)).unwrap();
        assert_eq!(t.eval(&q(-10, 1)).unwrap(), q(-7, 1));
        // a kinked line map written with far-away end vertices is canonicalised
        let f = PlHomeo::new(
            Ambient::Line,
            vec![(q(-5, 1), q(-5, 1)), (q(0, 1), q(0, 1)), (q(1, 1), q(2, 1)), (q(9, 1), q(10, 1))],
        )
        .unwrap();
        let g = PlHomeo::new(Ambient::Line, vec![(q(-1, 1), q(-1, 1)), (q(0, 1), q(0, 1)), (q(1, 1), q(2, 1)), (q(2, 1), q(3, 1))])
            .unwrap();
        assert_eq!(f, g);
        assert_eq!(f.eval(&q(100, 1)).unwrap(), q(101, 1));
        assert!(f.inverse().after(&f).unwrap().is_identity());
    }

    #[test]
    fn circle_lifts() {
        let r = PlHomeo::<Rational>::reflection(Ambient::Circle).unwrap();
        assert_eq!(r.degree(), -1);
        assert_eq!(r.eval(&q(5, 2)).unwrap(), q(-5, 2));
        assert!(r.after(&r).unwrap().is_identity());
        let bump = PlHomeo::new(Ambient::Circle, vec![(q(0, 1), q(1, 3)), (q(1, 2), q(1, 2)), (q(1, 1), q(4, 3))]).unwrap();
        assert_eq!(bump.eval(&q(3, 2)).unwrap(), q(3, 2));
        let inv = bump.inverse();
        for x in [q(0, 1), q(1, 5), q(7, 3), q(-4, 7)] {
            assert_eq!(inv.eval(&bump.eval(&x).unwrap()).unwrap(), x);
        }
        assert!(inv.after(&bump).unwrap().is_identity());
        assert!(bump.after(&r).unwrap().after(&bump.after(&r).unwrap()).is_ok());
    }

    #[test]
    fn interpolation_is_pointwise() {
        let f = interval(&[(0, 1, 0, 1), (1, 2, 1, 4), (1, 1, 1, 1)]);
        let id = PlHomeo::identity(Ambient::Interval);
        let mid = PlHomeo::interpolate(&id, &f, &q(1, 2)).unwrap();
        assert_eq!(mid.eval(&q(1, 2)).unwrap(), q(3, 8));
        assert!(mid.is_increasing());
    }
}
