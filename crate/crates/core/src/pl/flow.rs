use super::homeo::{Ambient, PlHomeo};
use crate::error::{Error, Result};
use crate::scalar::{lerp, Scalar};

/// A flow given by key frames: `f_t` is the pointwise linear interpolation of
/// the frames at the surrounding key times.
///
/// The canonical form drops every key frame that already equals the
/// interpolation of its neighbours, so derived equality compares the families
/// `t -> f_t` themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlFlow<S> {
    ambient: Ambient,
    key_times: Vec<S>,
    frames: Vec<PlHomeo<S>>,
}

impl<S: Scalar> PlFlow<S> {
    pub fn new(ambient: Ambient, key_times: Vec<S>, frames: Vec<PlHomeo<S>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidFlow(msg));
        if key_times.len() != frames.len() {
            return bad(format!("{} key times but {} frames", key_times.len(), frames.len()));
        }
        if key_times.len() < 2 {
            return bad("need key frames at t = 0 and t = 1".into());
        }
        if !key_times[0].is_zero() || !key_times[key_times.len() - 1].is_one() {
            return bad("key times must run from 0 to 1".into());
        }
        if key_times.windows(2).any(|w| w[0] >= w[1]) {
            return bad("key times must be strictly increasing".into());
        }
        for (i, f) in frames.iter().enumerate() {
            if f.ambient() != ambient {
                return Err(Error::AmbientMismatch(ambient.to_string(), f.ambient().to_string()));
            }
            if !f.is_increasing() {
                return bad(format!("frame {i} reverses orientation"));
            }
        }
        if !frames[0].is_identity() {
            return bad("frame at t = 0 must be the identity".into());
        }
        Ok(Self::canonical(ambient, key_times, frames))
    }

    fn canonical(ambient: Ambient, key_times: Vec<S>, frames: Vec<PlHomeo<S>>) -> Self {
        let mut times: Vec<S> = Vec::with_capacity(key_times.len());
        let mut kept: Vec<PlHomeo<S>> = Vec::with_capacity(frames.len());
        for (t, f) in key_times.into_iter().zip(frames) {
            while kept.len() >= 2 {
                let n = kept.len();
                let (t0, t1) = (&times[n - 2], &times[n - 1]);
                let lambda = (t1.clone() - t0.clone()) / (t.clone() - t0.clone());
                let redundant = PlHomeo::interpolate(&kept[n - 2], &f, &lambda)
                    .map(|mid| mid == kept[n - 1])
                    .unwrap_or(false);
                if !redundant {
                    break;
                }
                times.pop();
                kept.pop();
            }
            times.push(t);
            kept.push(f);
        }
        PlFlow { ambient, key_times: times, frames: kept }
    }

    /// The constant flow `f_t = id`.
    pub fn identity(ambient: Ambient) -> Self {
        PlFlow {
            ambient,
            key_times: vec![S::zero(), S::one()],
            frames: vec![PlHomeo::identity(ambient), PlHomeo::identity(ambient)],
        }
    }

    /// The straight-line flow from the identity to `h`.
    pub fn two_frame(h: PlHomeo<S>) -> Result<Self> {
        let ambient = h.ambient();
        Self::new(ambient, vec![S::zero(), S::one()], vec![PlHomeo::identity(ambient), h])
    }

    /// `f_t(x) = x + t c` on the line or circle.
    pub fn translation(ambient: Ambient, c: S) -> Result<Self> {
        Self::two_frame(PlHomeo::translation(ambient, c)?)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn key_times(&self) -> &[S] {
        &self.key_times
    }

    pub fn frames(&self) -> &[PlHomeo<S>] {
        &self.frames
    }

    pub fn endpoint(&self) -> &PlHomeo<S> {
        &self.frames[self.frames.len() - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.frames.iter().all(PlHomeo::is_identity)
    }

    fn check_time(t: &S) -> Result<()> {
        if *t < S::zero() || *t > S::one() {
            return Err(Error::OutOfDomain(format!("time {} is not in [0, 1]", t.to_exact_string())));
        }
        Ok(())
    }

    /// Index `i` with `t_i <= t <= t_{i+1}` and the interpolation weight.
    fn locate(&self, t: &S) -> (usize, S) {
        let n = self.key_times.len();
        let i = self.key_times[1..].iter().position(|k| *t <= *k).unwrap_or(n - 2);
        let (t0, t1) = (&self.key_times[i], &self.key_times[i + 1]);
        let lambda = (t.clone() - t0.clone()) / (t1.clone() - t0.clone());
        (i, lambda)
    }

    /// `f_t(x)`.
    pub fn eval(&self, t: &S, x: &S) -> Result<S> {
        Self::check_time(t)?;
        let (i, lambda) = self.locate(t);
        let a = self.frames[i].eval(x)?;
        if lambda.is_zero() {
            return Ok(a);
        }
        let b = self.frames[i + 1].eval(x)?;
        Ok(lerp(&a, &b, &lambda))
    }

    /// The map `f_t`.
    pub fn frame_at(&self, t: &S) -> Result<PlHomeo<S>> {
        Self::check_time(t)?;
        let (i, lambda) = self.locate(t);
        PlHomeo::interpolate(&self.frames[i], &self.frames[i + 1], &lambda)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient.to_string(), other.ambient.to_string()));
        }
        Ok(())
    }

    /// `g * f`: run `f` on `[0, 1/2]`, then `g` after `f_1` on `[1/2, 1]`.
    /// Exact, since precomposing with the fixed map `f_1` commutes with
    /// pointwise interpolation.
    pub fn star_compose(f: &Self, g: &Self) -> Result<Self> {
        f.check_ambient(g)?;
        let half = S::half();
        let f1 = f.endpoint();
        let mut times: Vec<S> = f.key_times.iter().map(|t| t.clone() * half.clone()).collect();
        let mut frames: Vec<PlHomeo<S>> = f.frames.clone();
        for (t, gt) in g.key_times.iter().zip(&g.frames).skip(1) {
            times.push(half.clone() + t.clone() * half.clone());
            frames.push(gt.after(f1)?);
        }
        Self::new(f.ambient, times, frames)
    }

    /// `g · f` sampled at the union of key times: each key frame is exactly
    /// `g_t ∘ f_t`; between key times the frames are interpolated, which in
    /// general only approximates the pointwise composite.
    pub fn dot_compose(f: &Self, g: &Self) -> Result<Self> {
        f.check_ambient(g)?;
        let times = merge_times(&f.key_times, &g.key_times);
        let mut frames = Vec::with_capacity(times.len());
        for t in &times {
            frames.push(g.frame_at(t)?.after(&f.frame_at(t)?)?);
        }
        Self::new(f.ambient, times, frames)
    }

    /// `f̄_t = f_{1-t} ∘ f_1^{-1}`; exact.
    pub fn reverse(&self) -> Self {
        let inv = self.endpoint().inverse();
        let times: Vec<S> = self.key_times.iter().rev().map(|t| S::one() - t.clone()).collect();
        let frames: Vec<PlHomeo<S>> = self
            .frames
            .iter()
            .rev()
            .map(|f| f.after(&inv).expect("frames share the ambient"))
            .collect();
        Self::new(self.ambient, times, frames).expect("reverse of a valid flow")
    }

    /// `t -> f_t^{-1}`, exact at key times and interpolated in between.
    pub fn pointwise_inverse(&self) -> Self {
        let frames = self.frames.iter().map(PlHomeo::inverse).collect();
        Self::new(self.ambient, self.key_times.clone(), frames).expect("inverse of a valid flow")
    }

    /// Vertices `(t_i, f_{t_i}(x))` of the trajectory of `x`.
    pub fn trajectory(&self, x: &S) -> Result<Vec<(S, S)>> {
        self.key_times
            .iter()
            .zip(&self.frames)
            .map(|(t, f)| Ok((t.clone(), f.eval(x)?)))
            .collect()
    }
}

/// Sorted union of two key-time lists.
pub(crate) fn merge_times<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut out: Vec<S> = a.iter().chain(b).cloned().collect();
    out.sort_by(crate::scalar::cmp);
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn squash() -> PlHomeo<Rational> {
        PlHomeo::new(Ambient::Interval, vec![(q(0, 1), q(0, 1)), (q(1, 2), q(1, 4)), (q(1, 1), q(1, 1))]).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let id = PlFlow::<Rational>::identity(Ambient::Interval);
        assert_eq!(id.eval(&q(1, 3), &q(2, 7)).unwrap(), q(2, 7));
        let shift = PlFlow::translation(Ambient::Line, q(3, 1)).unwrap();
        assert_eq!(shift.eval(&q(1, 2), &q(0, 1)).unwrap(), q(3, 2));
        let f = PlFlow::two_frame(squash()).unwrap();
        assert_eq!(f.eval(&q(1, 1), &q(1, 2)).unwrap(), q(1, 4));
        assert!(f.eval(&q(2, 1), &q(1, 2)).is_err());
    }

    #[test]
    fn redundant_key_frames_are_merged() {
        let h = squash();
        let mid = PlHomeo::interpolate(&PlHomeo::identity(Ambient::Interval), &h, &q(1, 3)).unwrap();
        let f = PlFlow::new(
            Ambient::Interval,
            vec![q(0, 1), q(1, 3), q(1, 1)],
            vec![PlHomeo::identity(Ambient::Interval), mid, h.clone()],
        )
        .unwrap();
        assert_eq!(f, PlFlow::two_frame(h).unwrap());
        assert_eq!(f.key_times().len(), 2);
    }

    #[test]
    fn invalid_flows_are_rejected() {
        let h = squash();
        assert!(PlFlow::new(Ambient::Interval, vec![q(0, 1), q(1, 1)], vec![h.clone(), h.clone()]).is_err());
        assert!(PlFlow::new(Ambient::Interval, vec![q(0, 1), q(1, 2)], vec![PlHomeo::identity(Ambient::Interval), h.clone()])
            .is_err());
        let flip = PlHomeo::<Rational>::reflection(Ambient::Interval).unwrap();
        assert!(PlFlow::two_frame(flip).is_err());
        let line = PlFlow::<Rational>::identity(Ambient::Line);
        assert!(PlFlow::star_compose(&PlFlow::two_frame(h).unwrap(), &line).is_err());
    }

    #[test]
    fn compositions_of_translations() {
        let a = PlFlow::translation(Ambient::Line, q(1, 1)).unwrap();
        let b = PlFlow::translation(Ambient::Line, q(2, 1)).unwrap();
        let ab = PlFlow::star_compose(&a, &b).unwrap();
        assert_eq!(*ab.endpoint(), PlHomeo::translation(Ambient::Line, q(3, 1)).unwrap());
        assert_eq!(ab.eval(&q(1, 2), &q(0, 1)).unwrap(), q(1, 1));
        let id = PlFlow::<Rational>::identity(Ambient::Interval);
        assert_eq!(PlFlow::star_compose(&id, &id).unwrap(), id);
        let back = a.reverse();
        assert_eq!(*back.endpoint(), PlHomeo::translation(Ambient::Line, q(-1, 1)).unwrap());
    }

    #[test]
    fn inverse_and_dot() {
        let f = PlFlow::two_frame(squash()).unwrap();
        let inv = f.pointwise_inverse();
        assert_eq!(
            *inv.endpoint(),
            PlHomeo::new(Ambient::Interval, vec![(q(0, 1), q(0, 1)), (q(1, 4), q(1, 2)), (q(1, 1), q(1, 1))]).unwrap()
        );
        let dot = PlFlow::dot_compose(&f, &inv).unwrap();
        assert!(dot.frames().iter().all(PlHomeo::is_identity));
        let id = PlFlow::identity(Ambient::Interval);
        assert_eq!(PlFlow::dot_compose(&f, &id).unwrap(), f);
        assert_eq!(f.reverse().reverse(), f);
    }
}
