use std::fmt::Debug;

use super::{FiniteGroupoid, Groupoid, Magmoid};
use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
pub trait Group {
    type Elem: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Elem;
    /// `a * b`, where `b` acts first.
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn elements(&self) -> Vec<Self::Elem>;
}

/// Z/n under addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicGroup {
    pub order: u64,
}

impl CyclicGroup {
    pub fn new(order: u64) -> Self {
        assert!(order > 0, "cyclic group of order 0");
        CyclicGroup { order }
    }
}

impl Group for CyclicGroup {
    type Elem = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn multiply(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.order
    }

    fn inverse(&self, a: &u64) -> u64 {
        (self.order - a % self.order) % self.order
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.order).collect()
    }
}

/// Morphism `(p, s, p·s)` of an action groupoid.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionMorphism<E, S> {
    pub element: E,
    pub source: S,
    pub target: S,
}

/// The action groupoid of a finite group acting on a finite set: objects are
/// the points of the set, morphisms are triples `(p, s, act(p, s))`.
pub struct ActionGroupoid<G: Group, S, A> {
    group: G,
    points: Vec<S>,
    act: A,
}

impl<G, S, A> ActionGroupoid<G, S, A>
where
    G: Group,
    S: Clone + PartialEq + Debug,
    A: Fn(&G::Elem, &S) -> S,
{
    /// Builds the groupoid after checking the action axioms on every group
    /// element and point (the data are finite, so the check is exhaustive).
    pub fn new(group: G, points: Vec<S>, act: A) -> Result<Self> {
        let e = group.identity();
        let elems = group.elements();
        for s in &points {
            if act(&e, s) != *s {
                return Err(Error::NotAnAction(format!("identity moves {s:?}")));
            }
            for p in &elems {
                let ps = act(p, s);
                if !points.contains(&ps) {
                    return Err(Error::NotAnAction(format!("{p:?} sends {s:?} outside the set")));
                }
                for q in &elems {
                    if act(q, &ps) != act(&group.multiply(q, p), s) {
                        return Err(Error::NotAnAction(format!(
                            "acting by {p:?} then {q:?} differs from their product on {s:?}"
                        )));
                    }
                }
            }
        }
        Ok(ActionGroupoid { group, points, act })
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn morphism(&self, element: G::Elem, source: S) -> ActionMorphism<G::Elem, S> {
        let target = (self.act)(&element, &source);
        ActionMorphism { element, source, target }
    }

    /// Objects with no morphisms between distinct points and trivial vertex
    /// groups form a discrete groupoid.
    pub fn is_discrete(&self) -> bool {
        self.points.iter().all(|x| self.hom(x, x).len() == 1)
            && self
                .points
                .iter()
                .all(|x| self.points.iter().all(|y| x == y || self.hom(x, y).is_empty()))
    }

    pub fn is_connected(&self) -> bool {
        let Some(first) = self.points.first() else { return true };
        self.points.iter().all(|y| !self.hom(first, y).is_empty())
    }
}

impl<G, S, A> Magmoid for ActionGroupoid<G, S, A>
where
    G: Group,
    S: Clone + PartialEq + Debug,
    A: Fn(&G::Elem, &S) -> S,
{
    type Object = S;
    type Morphism = ActionMorphism<G::Elem, S>;

    fn source(&self, f: &Self::Morphism) -> S {
        f.source.clone()
    }

    fn target(&self, f: &Self::Morphism) -> S {
        f.target.clone()
    }

    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Option<Self::Morphism> {
        (f.target == g.source).then(|| ActionMorphism {
            element: self.group.multiply(&g.element, &f.element),
            source: f.source.clone(),
            target: g.target.clone(),
        })
    }
}

impl<G, S, A> Groupoid for ActionGroupoid<G, S, A>
where
    G: Group,
    S: Clone + PartialEq + Debug,
    A: Fn(&G::Elem, &S) -> S,
{
    fn identity(&self, x: &S) -> Self::Morphism {
        self.morphism(self.group.identity(), x.clone())
    }

    fn inverse(&self, f: &Self::Morphism) -> Self::Morphism {
        ActionMorphism {
            element: self.group.inverse(&f.element),
            source: f.target.clone(),
            target: f.source.clone(),
        }
    }
}

impl<G, S, A> FiniteGroupoid for ActionGroupoid<G, S, A>
where
    G: Group,
    S: Clone + PartialEq + Debug,
    A: Fn(&G::Elem, &S) -> S,
{
    fn objects(&self) -> Vec<S> {
        self.points.clone()
    }

    fn hom(&self, x: &S, y: &S) -> Vec<Self::Morphism> {
        self.group
            .elements()
            .into_iter()
            .map(|p| self.morphism(p, x.clone()))
            .filter(|m| m.target == *y)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{check_groupoid_axioms, EqualityCongruence, SamplingPolicy};

    #[test]
    fn swap_action_is_connected_with_trivial_vertex_groups() {
        let g = ActionGroupoid::new(CyclicGroup::new(2), vec![0u8, 1], |p: &u64, s: &u8| {
            if *p == 1 { 1 - s } else { *s }
        })
        .unwrap();
        // brute force: 2 elements x 2 objects = 4 morphisms, one per ordered pair
        for x in [0u8, 1] {
            for y in [0u8, 1] {
                assert_eq!(g.hom(&x, &y).len(), 1);
            }
        }
        assert!(g.is_connected());
        assert!(!g.is_discrete());
        let all = g.all_morphisms();
        assert_eq!(all.len(), 4);
        check_groupoid_axioms(&g, &EqualityCongruence, &all, &SamplingPolicy::default()).unwrap();
    }

    #[test]
    fn trivial_group_gives_discrete_groupoid() {
        let g = ActionGroupoid::new(CyclicGroup::new(1), vec!['a', 'b', 'c'], |_: &u64, s: &char| *s).unwrap();
        assert!(g.is_discrete());
        assert_eq!(g.all_morphisms().len(), 3);
    }

    #[test]
    fn trivial_action_of_z3_on_a_point() {
        let g = ActionGroupoid::new(CyclicGroup::new(3), vec![()], |_: &u64, s: &()| *s).unwrap();
        assert_eq!(g.hom(&(), &()).len(), 3);
        let all = g.all_morphisms();
        check_groupoid_axioms(&g, &EqualityCongruence, &all, &SamplingPolicy::default()).unwrap();
    }

    #[test]
    fn non_action_is_rejected() {
        // Z/3 "acting" on {0,1,2} by x -> x + p^2 is not compatible with the product.
        let err = ActionGroupoid::new(CyclicGroup::new(3), vec![0u64, 1, 2], |p: &u64, s: &u64| (s + p * p) % 3)
            .err()
            .unwrap();
        assert!(matches!(err, Error::NotAnAction(_)));
        let err = ActionGroupoid::new(CyclicGroup::new(2), vec![0u64, 1], |_: &u64, s: &u64| 1 - s)
            .err()
            .unwrap();
        assert!(matches!(err, Error::NotAnAction(msg) if msg.contains("identity")));
    }
}
