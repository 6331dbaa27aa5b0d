use super::flow::PlFlow;
use super::homeo::remove_collinear;
use crate::error::{Error, Result};
use crate::scalar::{cmp, Scalar};
use crate::subset::{CompactSubset, Component};

/// A PL path `t -> x(t)` over `[0, 1]`, stored as `(t, x)` vertices with no
/// collinear interior vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trajectory<S> {
    vertices: Vec<(S, S)>,
}

impl<S: Scalar> Trajectory<S> {
    pub fn new(vertices: Vec<(S, S)>) -> Result<Self> {
        if vertices.len() < 2 || !vertices[0].0.is_zero() || !vertices[vertices.len() - 1].0.is_one() {
            return Err(Error::InvalidFlow("trajectory must span t in [0, 1]".into()));
        }
        if vertices.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidFlow("trajectory times must increase".into()));
        }
        Ok(Trajectory { vertices: remove_collinear(vertices) })
    }

    pub fn constant(x: S) -> Self {
        Trajectory { vertices: vec![(S::zero(), x.clone()), (S::one(), x)] }
    }

    pub fn vertices(&self) -> &[(S, S)] {
        &self.vertices
    }

    pub fn start(&self) -> &S {
        &self.vertices[0].1
    }

    pub fn end(&self) -> &S {
        &self.vertices[self.vertices.len() - 1].1
    }

    pub fn is_constant(&self) -> bool {
        self.vertices.len() == 2 && self.vertices[0].1 == self.vertices[1].1
    }

    pub fn at(&self, t: &S) -> S {
        let v = &self.vertices;
        let i = v[1..].iter().position(|p| *t <= p.0).unwrap_or(v.len() - 2);
        let (a, b) = (&v[i], &v[i + 1]);
        a.1.clone() + (t.clone() - a.0.clone()) * (b.1.clone() - a.1.clone()) / (b.0.clone() - a.0.clone())
    }

    /// This path on `[0, 1/2]` followed by `next` on `[1/2, 1]`.
    fn concat(&self, next: &Self) -> Self {
        let half = S::half();
        let mut vertices: Vec<(S, S)> = self.vertices.iter().map(|(t, x)| (t.clone() * half.clone(), x.clone())).collect();
        vertices.extend(
            next.vertices
                .iter()
                .skip(1)
                .map(|(t, x)| (half.clone() + t.clone() * half.clone(), x.clone())),
        );
        Trajectory { vertices: remove_collinear(vertices) }
    }
}

/// One connected piece of a worldline: the trace of a point, or the region
/// swept by an interval between the traces of its ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WorldlineComponent<S> {
    Arc(Trajectory<S>),
    Band { lower: Trajectory<S>, upper: Trajectory<S> },
}

impl<S: Scalar> WorldlineComponent<S> {
    fn slice(&self, t: &S) -> Component<S> {
        match self {
            WorldlineComponent::Arc(p) => Component::Point(p.at(t)),
            WorldlineComponent::Band { lower, upper } => Component::Interval(lower.at(t), upper.at(t)),
        }
    }

    fn bottom(&self) -> Component<S> {
        match self {
            WorldlineComponent::Arc(p) => Component::Point(p.start().clone()),
            WorldlineComponent::Band { lower, upper } => Component::Interval(lower.start().clone(), upper.start().clone()),
        }
    }

    fn top(&self) -> Component<S> {
        match self {
            WorldlineComponent::Arc(p) => Component::Point(p.end().clone()),
            WorldlineComponent::Band { lower, upper } => Component::Interval(lower.end().clone(), upper.end().clone()),
        }
    }

    pub fn is_vertical(&self) -> bool {
        match self {
            WorldlineComponent::Arc(p) => p.is_constant(),
            WorldlineComponent::Band { lower, upper } => lower.is_constant() && upper.is_constant(),
        }
    }
}

/// The trace `⋃_t f_t(N) × {t}` of a compact subset under a flow, as exact
/// PL arcs and bands in `M × [0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Worldline<S> {
    components: Vec<WorldlineComponent<S>>,
}

impl<S: Scalar> Worldline<S> {
    /// Components are ordered by their position at `t = 0`.
    pub fn new(mut components: Vec<WorldlineComponent<S>>) -> Self {
        components.sort_by(|a, b| cmp(a.bottom().lo(), b.bottom().lo()));
        Worldline { components }
    }

    /// `N × [0, 1]`.
    pub fn product(n: &CompactSubset<S>) -> Self {
        let components = n
            .components()
            .iter()
            .map(|c| match c {
                Component::Point(x) => WorldlineComponent::Arc(Trajectory::constant(x.clone())),
                Component::Interval(a, b) => WorldlineComponent::Band {
                    lower: Trajectory::constant(a.clone()),
                    upper: Trajectory::constant(b.clone()),
                },
            })
            .collect();
        Worldline::new(components)
    }

    /// Worldline of `n` under `f`; each trajectory has its vertices at the
    /// key times of `f`.
    pub fn of(f: &PlFlow<S>, n: &CompactSubset<S>) -> Result<Self> {
        let path = |x: &S| -> Result<Trajectory<S>> { Trajectory::new(f.trajectory(x)?) };
        let mut components = Vec::with_capacity(n.len());
        for c in n.components() {
            components.push(match c {
                Component::Point(x) => WorldlineComponent::Arc(path(x)?),
                Component::Interval(a, b) => WorldlineComponent::Band { lower: path(a)?, upper: path(b)? },
            });
        }
        Ok(Worldline::new(components))
    }

    pub fn components(&self) -> &[WorldlineComponent<S>] {
        &self.components
    }

    pub fn slice(&self, t: &S) -> Result<CompactSubset<S>> {
        CompactSubset::unbounded(self.components.iter().map(|c| c.slice(t)).collect())
    }

    pub fn bottom(&self) -> Result<CompactSubset<S>> {
        CompactSubset::unbounded(self.components.iter().map(WorldlineComponent::bottom).collect())
    }

    pub fn top(&self) -> Result<CompactSubset<S>> {
        CompactSubset::unbounded(self.components.iter().map(WorldlineComponent::top).collect())
    }

    /// `true` when every component is constant in time.
    pub fn is_product(&self) -> bool {
        self.components.iter().all(WorldlineComponent::is_vertical)
    }

    /// Stacks `self` under `next`, rescaling time by `t/2` and `1/2 + t/2`.
    pub fn concat(&self, next: &Self) -> Result<Self> {
        if self.top()? != next.bottom()? {
            return Err(Error::SliceMismatch);
        }
        let mut components = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let top = c.top();
            let d = next
                .components
                .iter()
                .find(|d| d.bottom() == top)
                .ok_or(Error::SliceMismatch)?;
            components.push(match (c, d) {
                (WorldlineComponent::Arc(p), WorldlineComponent::Arc(r)) => WorldlineComponent::Arc(p.concat(r)),
                (WorldlineComponent::Band { lower: l1, upper: u1 }, WorldlineComponent::Band { lower: l2, upper: u2 }) => {
                    WorldlineComponent::Band { lower: l1.concat(l2), upper: u1.concat(u2) }
                }
                _ => return Err(Error::SliceMismatch),
            });
        }
        Ok(Worldline::new(components))
    }
}
