use super::{same_hom, AxiomReport, Congruence, Groupoid, SamplingPolicy};
use crate::error::{Error, Result};

/// Congruence induced by a wide, totally disconnected, normal sub-groupoid
/// `H`: `f ~ f'` iff they share a hom-set and `f ; f'^-1` lies in `H`.
#[derive(Clone)]
pub struct NormalSubgroupoidCongruence<P> {
    member: P,
    report: AxiomReport,
}

impl<P> std::fmt::Debug for NormalSubgroupoidCongruence<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NormalSubgroupoidCongruence").field("report", &self.report).finish_non_exhaustive()
    }
}

impl<P> NormalSubgroupoidCongruence<P> {
    pub fn report(&self) -> AxiomReport {
        self.report
    }
}

impl<G, P> Congruence<G> for NormalSubgroupoidCongruence<P>
where
    G: Groupoid,
    P: Fn(&G::Morphism) -> bool,
{
    fn equivalent(&self, g: &G, f: &G::Morphism, f2: &G::Morphism) -> bool {
        if !same_hom(g, f, f2) {
            return false;
        }
        match g.compose(f, &g.inverse(f2)) {
            Some(loop_) => (self.member)(&loop_),
            None => false,
        }
    }
}

/// Validates `member` as a normal sub-groupoid on the sample and returns the
/// induced congruence. `sample` should include the members of `H` to test.
///
/// Checked: every identity of a sampled object is in `H` (wide), members are
/// endomorphisms (totally disconnected), `H` is closed under the groupoid
/// inverse on the sample, and the conjugate `f^-1 ; k ; f` is in `H` for
/// every sampled `f` and every sampled member `k` at the source of `f`.
pub fn congruence_from_normal_subgroupoid<G, P>(
    g: &G,
    member: P,
    sample: &[G::Morphism],
    policy: &SamplingPolicy,
) -> Result<NormalSubgroupoidCongruence<P>>
where
    G: Groupoid,
    P: Fn(&G::Morphism) -> bool,
{
    let mut checked = 0usize;
    let mut objects: Vec<G::Object> = Vec::new();
    for f in sample {
        for x in [g.source(f), g.target(f)] {
            if !objects.contains(&x) {
                objects.push(x);
            }
        }
    }
    for x in &objects {
        checked += 1;
        if !member(&g.identity(x)) {
            return Err(Error::NotNormal(format!("identity at {x:?} is not a member")));
        }
    }

    let members: Vec<&G::Morphism> = sample.iter().filter(|k| member(k)).collect();
    for k in &members {
        checked += 1;
        if g.source(k) != g.target(k) {
            return Err(Error::NotTotallyDisconnected(format!("{k:?} joins distinct objects")));
        }
        if !member(&g.inverse(k)) {
            return Err(Error::NotNormal(format!("inverse of {k:?} is not a member")));
        }
    }

    // Conjugates f^-1 ; k ; f of members k at source(f), as in x --f--> y.
    let mut conj = Vec::new();
    for (i, f) in sample.iter().enumerate() {
        let x = g.source(f);
        for (j, k) in members.iter().enumerate() {
            if g.target(k) == x {
                conj.push((i, j));
            }
        }
    }
    let total = conj.len();
    let picks: Vec<(usize, usize)> = if total <= policy.exhaustive_bound {
        conj
    } else {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(policy.seed);
        conj.choose_multiple(&mut rng, policy.random_trials).copied().collect()
    };
    for &(i, j) in &picks {
        let f = &sample[i];
        let k = members[j];
        let conjugate = g
            .compose(&g.inverse(f), k)
            .and_then(|fk| g.compose(&fk, f))
            .ok_or_else(|| Error::NotNormal(format!("conjugate of {k:?} by {f:?} undefined")))?;
        if !member(&conjugate) {
            return Err(Error::NotNormal(format!("conjugate of {k:?} by {f:?} leaves the sub-groupoid")));
        }
    }
    checked += picks.len();
    Ok(NormalSubgroupoidCongruence {
        member,
        report: AxiomReport { tuples_checked: checked, exhaustive: total <= policy.exhaustive_bound },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{quotient, EdgeStep, Graph, GraphEdgePath, PathMagmoid};

    fn loop_graph() -> Graph {
        let mut g = Graph::new(1);
        g.add_edge("a", 0, 0);
        g
    }

    fn words(m: &PathMagmoid<'_>, max: usize) -> Vec<GraphEdgePath> {
        m.paths_from(0, max)
    }

    #[test]
    fn even_winding_subgroup_gives_parity_classes() {
        let g = loop_graph();
        let m = PathMagmoid::new(&g);
        let sample = words(&m, 6);
        let even = |p: &GraphEdgePath| p.exponent_sum(0) % 2 == 0;
        let c = congruence_from_normal_subgroupoid(&m, even, &sample, &SamplingPolicy::default()).unwrap();
        let q = quotient(m, c, &sample, &SamplingPolicy::default()).unwrap();
        assert_eq!(q.hom_classes(&0, &0, &sample).len(), 2);
    }

    #[test]
    fn trivial_and_full_subgroupoids() {
        let g = loop_graph();
        let m = PathMagmoid::new(&g);
        let sample = words(&m, 4);
        let trivial = |p: &GraphEdgePath| p.exponent_sum(0) == 0;
        let c = congruence_from_normal_subgroupoid(&m, trivial, &sample, &SamplingPolicy::default()).unwrap();
        let q = quotient(m, c, &sample, &SamplingPolicy::default()).unwrap();
        // classes are indexed by winding number -4..=4
        assert_eq!(q.hom_classes(&0, &0, &sample).len(), 9);

        let all = |_: &GraphEdgePath| true;
        let c = congruence_from_normal_subgroupoid(&m, all, &sample, &SamplingPolicy::default()).unwrap();
        let q = quotient(m, c, &sample, &SamplingPolicy::default()).unwrap();
        assert_eq!(q.hom_classes(&0, &0, &sample).len(), 1);
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        // In the free group on a, b the subgroup generated by a is not normal:
        // b^-1 a b is not a power of a.
        let mut g = Graph::new(1);
        g.add_edge("a", 0, 0);
        g.add_edge("b", 0, 0);
        let m = PathMagmoid::new(&g);
        let sample = m.paths_from(0, 3);
        let powers_of_a = |p: &GraphEdgePath| p.reduce().steps().iter().all(|s| s.edge == 0);
        let err = congruence_from_normal_subgroupoid(&m, powers_of_a, &sample, &SamplingPolicy::default()).unwrap_err();
        assert!(matches!(err, Error::NotNormal(_)));
    }

    #[test]
    fn connecting_member_is_rejected() {
        let mut g = Graph::new(2);
        g.add_edge("a", 0, 1);
        let m = PathMagmoid::new(&g);
        let a = GraphEdgePath::new(&g, 0, vec![EdgeStep { edge: 0, inverted: false }]).unwrap();
        let sample = vec![a, GraphEdgePath::empty(0), GraphEdgePath::empty(1)];
        let err = congruence_from_normal_subgroupoid(&m, |_: &GraphEdgePath| true, &sample, &SamplingPolicy::default())
            .unwrap_err();
        assert!(matches!(err, Error::NotTotallyDisconnected(_)));
    }
}
