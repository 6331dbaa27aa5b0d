//! Edge paths in a finite multigraph. Free reduction is the homotopy normal
//! form for 1-complexes, so quotienting the path magmoid by [`FreeReduction`]
//! yields the fundamental groupoid of the graph.

use std::fmt;

use super::{Congruence, Groupoid, Magmoid};
use crate::error::{Error, Result};

/// Finite directed multigraph; every edge also has a formal inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    names: Vec<String>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: Vec::new(), names: Vec::new() }
    }

    /// Adds a named edge `from -> to` and returns its index.
    pub fn add_edge(&mut self, name: &str, from: usize, to: usize) -> usize {
        assert!(from < self.vertex_count && to < self.vertex_count, "edge endpoint out of range");
        self.edges.push((from, to));
        self.names.push(name.to_string());
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn step_ends(&self, step: EdgeStep) -> (usize, usize) {
        let (a, b) = self.edges[step.edge];
        if step.inverted {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// Parses `"a b^-1 c"` into steps.
    pub fn parse_steps(&self, text: &str) -> Result<Vec<EdgeStep>> {
        text.split_whitespace()
            .map(|tok| {
                let (name, inverted) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                let edge = self
                    .edge_by_name(name)
                    .ok_or_else(|| Error::MalformedPath(format!("unknown edge {name:?}")))?;
                Ok(EdgeStep { edge, inverted })
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeStep {
    pub edge: usize,
    pub inverted: bool,
}

impl EdgeStep {
    pub fn inverse(self) -> EdgeStep {
        EdgeStep { edge: self.edge, inverted: !self.inverted }
    }
}

/// A well-formed edge path `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphEdgePath {
    source: usize,
    target: usize,
    steps: Vec<EdgeStep>,
}

impl GraphEdgePath {
    pub fn new(graph: &Graph, source: usize, steps: Vec<EdgeStep>) -> Result<Self> {
        if source >= graph.vertex_count {
            return Err(Error::MalformedPath(format!("vertex {source} not in graph")));
        }
        let mut at = source;
        for (i, step) in steps.iter().enumerate() {
            if step.edge >= graph.edges.len() {
                return Err(Error::MalformedPath(format!("edge {} not in graph", step.edge)));
            }
            let (from, to) = graph.step_ends(*step);
            if from != at {
                return Err(Error::MalformedPath(format!("step {i} starts at {from}, path is at {at}")));
            }
            at = to;
        }
        Ok(GraphEdgePath { source, target: at, steps })
    }

    pub fn parse(graph: &Graph, source: usize, text: &str) -> Result<Self> {
        GraphEdgePath::new(graph, source, graph.parse_steps(text)?)
    }

    pub fn empty(vertex: usize) -> Self {
        GraphEdgePath { source: vertex, target: vertex, steps: Vec::new() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn steps(&self) -> &[EdgeStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Concatenation; `None` unless the paths meet.
    pub fn concat(&self, next: &GraphEdgePath) -> Option<GraphEdgePath> {
        (self.target == next.source).then(|| GraphEdgePath {
            source: self.source,
            target: next.target,
            steps: self.steps.iter().chain(&next.steps).copied().collect(),
        })
    }

    pub fn reversed(&self) -> GraphEdgePath {
        GraphEdgePath {
            source: self.target,
            target: self.source,
            steps: self.steps.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// Freely reduced form: no step is followed by its own inverse.
    pub fn reduce(&self) -> GraphEdgePath {
        let mut stack: Vec<EdgeStep> = Vec::with_capacity(self.steps.len());
        for &step in &self.steps {
            if stack.last() == Some(&step.inverse()) {
                stack.pop();
            } else {
                stack.push(step);
            }
        }
        GraphEdgePath { source: self.source, target: self.target, steps: stack }
    }

    pub fn is_reduced(&self) -> bool {
        self.steps.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Net number of traversals of `edge` (forward minus backward).
    pub fn exponent_sum(&self, edge: usize) -> i64 {
        self.steps
            .iter()
            .filter(|s| s.edge == edge)
            .map(|s| if s.inverted { -1 } else { 1 })
            .sum()
    }

    pub fn display<'a>(&'a self, graph: &'a Graph) -> impl fmt::Display + 'a {
        PathDisplay { path: self, graph }
    }
}

struct PathDisplay<'a> {
    path: &'a GraphEdgePath,
    graph: &'a Graph,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .path
            .steps
            .iter()
            .map(|s| {
                let name = &self.graph.names[s.edge];
                if s.inverted {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect();
        write!(f, "{}", words.join(" "))
    }
}

/// Unreduced edge paths of a graph under concatenation.
#[derive(Clone, Copy, Debug)]
pub struct PathMagmoid<'g> {
    pub graph: &'g Graph,
}

impl<'g> PathMagmoid<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        PathMagmoid { graph }
    }

    /// Every well-formed path from `source` with at most `max_len` steps.
    pub fn paths_from(&self, source: usize, max_len: usize) -> Vec<GraphEdgePath> {
        let mut out = vec![GraphEdgePath::empty(source)];
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for edge in 0..self.graph.edge_count() {
                    for inverted in [false, true] {
                        let step = EdgeStep { edge, inverted };
                        let (from, to) = self.graph.step_ends(step);
                        if from == p.target {
                            let mut steps = p.steps.clone();
                            steps.push(step);
                            next.push(GraphEdgePath { source: p.source, target: to, steps });
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl Magmoid for PathMagmoid<'_> {
    type Object = usize;
    type Morphism = GraphEdgePath;

    fn source(&self, f: &GraphEdgePath) -> usize {
        f.source
    }

    fn target(&self, f: &GraphEdgePath) -> usize {
        f.target
    }

    fn compose(&self, f: &GraphEdgePath, g: &GraphEdgePath) -> Option<GraphEdgePath> {
        f.concat(g)
    }
}

impl Groupoid for PathMagmoid<'_> {
    fn identity(&self, x: &usize) -> GraphEdgePath {
        GraphEdgePath::empty(*x)
    }

    fn inverse(&self, f: &GraphEdgePath) -> GraphEdgePath {
        f.reversed()
    }
}

/// Paths are equivalent when their free reductions agree.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeReduction;

impl<M> Congruence<M> for FreeReduction
where
    M: Magmoid<Morphism = GraphEdgePath>,
{
    fn equivalent(&self, _m: &M, f: &GraphEdgePath, g: &GraphEdgePath) -> bool {
        f.source == g.source && f.target == g.target && f.reduce() == g.reduce()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{quotient, SamplingPolicy};
    use proptest::prelude::*;

    fn wedge() -> Graph {
        let mut g = Graph::new(1);
        g.add_edge("a", 0, 0);
        g.add_edge("b", 0, 0);
        g
    }

    fn two_cycle() -> Graph {
        let mut g = Graph::new(2);
        g.add_edge("a", 0, 1);
        g.add_edge("b", 1, 0);
        g
    }

    #[test]
    fn reduction_examples() {
        let g = wedge();
        let p = GraphEdgePath::parse(&g, 0, "a a^-1 b").unwrap();
        assert_eq!(p.reduce().display(&g).to_string(), "b");
        let p = GraphEdgePath::parse(&g, 0, "").unwrap();
        assert!(p.reduce().is_empty());
        let p = GraphEdgePath::parse(&g, 0, "a b b^-1 a").unwrap();
        assert_eq!(p.reduce().display(&g).to_string(), "a a");
    }

    #[test]
    fn malformed_paths_are_rejected() {
        let g = two_cycle();
        assert!(GraphEdgePath::parse(&g, 0, "a a").is_err());
        assert!(GraphEdgePath::parse(&g, 0, "c").is_err());
        assert!(GraphEdgePath::parse(&g, 5, "").is_err());
        let p = GraphEdgePath::parse(&g, 0, "a b a").unwrap();
        assert_eq!(p.target(), 1);
    }

    #[test]
    fn fundamental_groupoid_of_two_cycle() {
        let g = two_cycle();
        let m = PathMagmoid::new(&g);
        let sample: Vec<GraphEdgePath> = (0..2).flat_map(|v| m.paths_from(v, 4)).collect();
        let q = quotient(m, FreeReduction, &sample, &SamplingPolicy::default()).unwrap();
        q.check_groupoid_axioms(&sample, &SamplingPolicy::default()).unwrap();

        // Oracle: in hom(0,0) the reduced words of length <= 4 are (ab)^k and
        // (b^-1 a^-1)^k, k <= 2, so the classes are indexed by k in -2..=2.
        let classes = q.hom_classes(&0, &0, &sample);
        let mut windings: Vec<i64> = classes.iter().map(|p| p.exponent_sum(0)).collect();
        windings.sort_unstable();
        assert_eq!(windings, vec![-2, -1, 0, 1, 2]);
        // hom(0,1): a (ab)^k with length <= 4 gives k in {-2,..,1}: a, abab... = a b a, etc.
        let classes01 = q.hom_classes(&0, &1, &sample);
        let mut sums: Vec<i64> = classes01.iter().map(|p| p.exponent_sum(0)).collect();
        sums.sort_unstable();
        assert_eq!(sums, vec![-1, 0, 1, 2]);
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_and_compatible(
            w1 in proptest::collection::vec((0usize..2, any::<bool>()), 0..12),
            w2 in proptest::collection::vec((0usize..2, any::<bool>()), 0..12),
        ) {
            let g = wedge();
            let mk = |w: &Vec<(usize, bool)>| GraphEdgePath::new(
                &g, 0, w.iter().map(|&(edge, inverted)| EdgeStep { edge, inverted }).collect()
            ).unwrap();
            let (p, q) = (mk(&w1), mk(&w2));
            let r = p.reduce();
            prop_assert!(r.is_reduced());
            prop_assert_eq!(r.reduce(), r.clone());
            let lhs = p.concat(&q).unwrap().reduce();
            let rhs = r.concat(&q.reduce()).unwrap().reduce();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(p.concat(&p.reversed()).unwrap().reduce().is_empty());
        }
    }
}
