//! Compact subsets of a 1-D ambient with finitely many components.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{cmp, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component<S> {
    Point(S),
    Interval(S, S),
}

impl<S: Scalar> Component<S> {
    pub fn lo(&self) -> &S {
        match self {
            Component::Point(x) => x,
            Component::Interval(a, _) => a,
        }
    }

    pub fn hi(&self) -> &S {
        match self {
            Component::Point(x) => x,
            Component::Interval(_, b) => b,
        }
    }

    pub fn letter(&self) -> char {
        match self {
            Component::Point(_) => 'a',
            Component::Interval(..) => 'b',
        }
    }

    pub fn contains(&self, x: &S) -> bool {
        self.lo() <= x && x <= self.hi()
    }
}

/// A finite, sorted, pairwise disjoint union of points and closed intervals.
///
/// Subsets of the unit interval are built with [`CompactSubset::new`]; subsets
/// of a line or circle lift with [`CompactSubset::unbounded`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompactSubset<S> {
    components: Vec<Component<S>>,
}

impl<S: Scalar> CompactSubset<S> {
    /// Components inside `[0, 1]`, in any order.
    pub fn new(components: Vec<Component<S>>) -> Result<Self> {
        let set = Self::unbounded(components)?;
        if let (Some(first), Some(last)) = (set.components.first(), set.components.last()) {
            if *first.lo() < S::zero() || *last.hi() > S::one() {
                return Err(Error::InvalidSubset("component outside [0, 1]".into()));
            }
        }
        Ok(set)
    }

    pub fn unbounded(mut components: Vec<Component<S>>) -> Result<Self> {
        for c in &components {
            if let Component::Interval(a, b) = c {
                if a >= b {
                    return Err(Error::InvalidSubset(format!(
                        "interval [{}, {}] is empty or degenerate",
                        a.to_exact_string(),
                        b.to_exact_string()
                    )));
                }
            }
        }
        components.sort_by(|p, q| cmp(p.lo(), q.lo()));
        for w in components.windows(2) {
            if w[0].hi() >= w[1].lo() {
                return Err(Error::InvalidSubset(format!(
                    "components meet at {}",
                    w[1].lo().to_exact_string()
                )));
            }
        }
        Ok(CompactSubset { components })
    }

    pub fn empty() -> Self {
        CompactSubset { components: Vec::new() }
    }

    pub fn points(xs: &[S]) -> Result<Self> {
        Self::unbounded(xs.iter().cloned().map(Component::Point).collect())
    }

    pub fn components(&self) -> &[Component<S>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// One letter per component in ambient order: `a` for a point, `b` for an
    /// interval.
    pub fn word(&self) -> String {
        self.components.iter().map(Component::letter).collect()
    }

    pub fn contains(&self, x: &S) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&S::zero())
    }

    pub fn contains_one(&self) -> bool {
        self.contains(&S::one())
    }

    /// Isolated points and interval endpoints, in order.
    pub fn boundary_points(&self) -> Vec<S> {
        let mut out = Vec::new();
        for c in &self.components {
            match c {
                Component::Point(x) => out.push(x.clone()),
                Component::Interval(a, b) => {
                    out.push(a.clone());
                    out.push(b.clone());
                }
            }
        }
        out
    }

    /// Image under a monotone map given pointwise.
    pub fn map_monotone<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&S) -> Result<S>,
    {
        let mut out = Vec::with_capacity(self.components.len());
        for c in &self.components {
            out.push(match c {
                Component::Point(x) => Component::Point(f(x)?),
                Component::Interval(a, b) => {
                    let (fa, fb) = (f(a)?, f(b)?);
                    if fa < fb {
                        Component::Interval(fa, fb)
                    } else {
                        Component::Interval(fb, fa)
                    }
                }
            });
        }
        Self::unbounded(out)
    }
}

impl<S: Scalar> fmt::Display for CompactSubset<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| match c {
                Component::Point(x) => format!("{{{}}}", x.to_exact_string()),
                Component::Interval(a, b) => format!("[{}, {}]", a.to_exact_string(), b.to_exact_string()),
            })
            .collect();
        f.write_str(&parts.join(" u "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn words_follow_component_order() {
        assert_eq!(CompactSubset::<Rational>::empty().word(), "");
        let n = CompactSubset::new(vec![Component::Interval(q(3, 8), q(1, 2)), Component::Point(q(1, 4))]).unwrap();
        assert_eq!(n.word(), "ab");
        let n = CompactSubset::new(vec![
            Component::Interval(q(1, 8), q(1, 4)),
            Component::Point(q(1, 2)),
            Component::Interval(q(5, 8), q(3, 4)),
        ])
        .unwrap();
        assert_eq!(n.word(), "bab");
    }

    #[test]
    fn overlapping_or_out_of_range_components_are_rejected() {
        assert!(CompactSubset::new(vec![Component::Interval(q(0, 1), q(1, 2)), Component::Point(q(1, 2))]).is_err());
        assert!(CompactSubset::new(vec![Component::Interval(q(1, 2), q(1, 2))]).is_err());
        assert!(CompactSubset::new(vec![Component::Point(q(3, 2))]).is_err());
        assert!(CompactSubset::unbounded(vec![Component::Point(q(3, 2))]).is_ok());
    }

    #[test]
    fn boundary_membership() {
        let n = CompactSubset::new(vec![Component::Point(q(0, 1)), Component::Interval(q(1, 2), q(1, 1))]).unwrap();
        assert!(n.contains_zero() && n.contains_one());
        assert_eq!(n.boundary_points(), vec![q(0, 1), q(1, 2), q(1, 1)]);
    }
}
