//! Magmoids, congruences, quotients and groupoids.
//!
//! Hom-sets are usually infinite (flows, strand sets, words), so nothing here
//! materialises them. A magmoid supplies composition, a [`Congruence`] supplies
//! a decidable equivalence on each hom-set, and the axioms are checked against a
//! finite sample of morphisms: exhaustively when the number of tuples is within
//! [`SamplingPolicy::exhaustive_bound`], by seeded random draws otherwise. A
//! passing check is reported as "verified on samples", never as a proof.

mod action;
mod graph;
mod normal;

pub use action::{ActionGroupoid, ActionMorphism, CyclicGroup, Group};
pub use graph::{EdgeStep, FreeReduction, Graph, GraphEdgePath, PathMagmoid};
pub use normal::{congruence_from_normal_subgroupoid, NormalSubgroupoidCongruence};

use std::fmt::Debug;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Objects, morphisms and a partial composition. No unit or associativity is
/// assumed.
pub trait Magmoid {
    type Object: Clone + PartialEq + Debug;
    type Morphism: Clone + Debug;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;

    /// Composite of `f` followed by `g`; `None` unless `target(f) == source(g)`.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Option<Self::Morphism>;
}

/// A magmoid with chosen identities and inverses. The groupoid laws are only
/// required to hold up to whatever congruence the caller quotients by.
pub trait Groupoid: Magmoid {
    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    fn inverse(&self, f: &Self::Morphism) -> Self::Morphism;
}

/// A finite groupoid whose hom-sets can be listed.
pub trait FiniteGroupoid: Groupoid {
    fn objects(&self) -> Vec<Self::Object>;
    fn hom(&self, x: &Self::Object, y: &Self::Object) -> Vec<Self::Morphism>;

    fn all_morphisms(&self) -> Vec<Self::Morphism> {
        let objects = self.objects();
        let mut out = Vec::new();
        for x in &objects {
            for y in &objects {
                out.extend(self.hom(x, y));
            }
        }
        out
    }
}

/// Decidable equivalence on each hom-set of `M`.
pub trait Congruence<M: Magmoid + ?Sized> {
    fn equivalent(&self, m: &M, f: &M::Morphism, g: &M::Morphism) -> bool;
}

/// Wraps a closure as a congruence.
#[derive(Clone, Copy)]
pub struct FnCongruence<F>(pub F);

impl<F> Debug for FnCongruence<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("FnCongruence(..)")
    }
}

impl<M, F> Congruence<M> for FnCongruence<F>
where
    M: Magmoid,
    F: Fn(&M::Morphism, &M::Morphism) -> bool,
{
    fn equivalent(&self, _m: &M, f: &M::Morphism, g: &M::Morphism) -> bool {
        (self.0)(f, g)
    }
}

/// Identifies all morphisms sharing a hom-set.
#[derive(Clone, Copy, Debug, Default)]
pub struct TotalCongruence;

impl<M: Magmoid> Congruence<M> for TotalCongruence {
    fn equivalent(&self, m: &M, f: &M::Morphism, g: &M::Morphism) -> bool {
        same_hom(m, f, g)
    }
}

/// Identifies only equal morphisms.
#[derive(Clone, Copy, Debug, Default)]
pub struct EqualityCongruence;

impl<M> Congruence<M> for EqualityCongruence
where
    M: Magmoid,
    M::Morphism: PartialEq,
{
    fn equivalent(&self, _m: &M, f: &M::Morphism, g: &M::Morphism) -> bool {
        f == g
    }
}

pub fn same_hom<M: Magmoid + ?Sized>(m: &M, f: &M::Morphism, g: &M::Morphism) -> bool {
    m.source(f) == m.source(g) && m.target(f) == m.target(g)
}

/// How universally quantified axioms are checked against a sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingPolicy {
    /// Enumerate every tuple when there are at most this many.
    pub exhaustive_bound: usize,
    /// Number of random tuples drawn above the bound.
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for SamplingPolicy {
    fn default() -> Self {
        SamplingPolicy {
            exhaustive_bound: 20_000,
            random_trials: 2_000,
            seed: 0x5eed,
        }
    }
}

/// Outcome of a successful sampled check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub tuples_checked: usize,
    /// `true` when every tuple of the sample was examined.
    pub exhaustive: bool,
}

impl AxiomReport {
    fn merge(self, other: AxiomReport) -> AxiomReport {
        AxiomReport {
            tuples_checked: self.tuples_checked + other.tuples_checked,
            exhaustive: self.exhaustive && other.exhaustive,
        }
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mode = if self.exhaustive { "exhaustive" } else { "randomized" };
        write!(f, "verified on samples ({} tuples, {mode})", self.tuples_checked)
    }
}

/// Visits either every tuple from `tuples` or a random subset of them.
fn visit<T, F>(tuples: Vec<T>, policy: &SamplingPolicy, rng: &mut ChaCha8Rng, mut f: F) -> Result<AxiomReport>
where
    F: FnMut(&T) -> Result<()>,
{
    if tuples.len() <= policy.exhaustive_bound {
        for t in &tuples {
            f(t)?;
        }
        Ok(AxiomReport { tuples_checked: tuples.len(), exhaustive: true })
    } else {
        for _ in 0..policy.random_trials {
            let t = &tuples[rng.gen_range(0..tuples.len())];
            f(t)?;
        }
        Ok(AxiomReport { tuples_checked: policy.random_trials, exhaustive: false })
    }
}

/// Indices of the sample grouped by hom-set.
fn hom_groups<M: Magmoid + ?Sized>(m: &M, sample: &[M::Morphism]) -> Vec<Vec<usize>> {
    let mut keys: Vec<(M::Object, M::Object)> = Vec::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, f) in sample.iter().enumerate() {
        let key = (m.source(f), m.target(f));
        match keys.iter().position(|k| *k == key) {
            Some(pos) => groups[pos].push(i),
            None => {
                keys.push(key);
                groups.push(vec![i]);
            }
        }
    }
    groups
}

/// Checks that `c` is an equivalence on each hom-set and is compatible with
/// composition, on the given sample.
pub fn check_congruence<M, C>(m: &M, c: &C, sample: &[M::Morphism], policy: &SamplingPolicy) -> Result<AxiomReport>
where
    M: Magmoid + ?Sized,
    C: Congruence<M> + ?Sized,
{
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    let groups = hom_groups(m, sample);
    let violation = |what: &str| Err(Error::CongruenceViolation(what.to_string()));

    let mut report = visit((0..sample.len()).collect(), policy, &mut rng, |&i| {
        if c.equivalent(m, &sample[i], &sample[i]) {
            Ok(())
        } else {
            violation(&format!("reflexivity fails for {:?}", sample[i]))
        }
    })?;

    // Evaluate the relation once per pair inside each hom-set.
    let mut related: Vec<(usize, usize)> = Vec::new();
    let mut pairs = Vec::new();
    for g in &groups {
        for &i in g {
            for &j in g {
                pairs.push((i, j));
            }
        }
    }
    let pair_report = visit(pairs, policy, &mut rng, |&(i, j)| {
        let ij = c.equivalent(m, &sample[i], &sample[j]);
        let ji = c.equivalent(m, &sample[j], &sample[i]);
        if ij != ji {
            return violation(&format!("symmetry fails for {:?} and {:?}", sample[i], sample[j]));
        }
        if ij {
            related.push((i, j));
        }
        Ok(())
    })?;
    report = report.merge(pair_report);

    let mut triples = Vec::new();
    for g in &groups {
        for &i in g {
            for &j in g {
                for &k in g {
                    triples.push((i, j, k));
                }
            }
        }
    }
    related.sort_unstable();
    let is_related = |i: usize, j: usize| related.binary_search(&(i, j)).is_ok();
    let exhaustive_pairs = pair_report.exhaustive;
    let triple_report = visit(triples, policy, &mut rng, |&(i, j, k)| {
        let (ij, jk) = if exhaustive_pairs {
            (is_related(i, j), is_related(j, k))
        } else {
            (c.equivalent(m, &sample[i], &sample[j]), c.equivalent(m, &sample[j], &sample[k]))
        };
        if ij && jk && !c.equivalent(m, &sample[i], &sample[k]) {
            return violation(&format!(
                "transitivity fails for {:?}, {:?}, {:?}",
                sample[i], sample[j], sample[k]
            ));
        }
        Ok(())
    })?;
    report = report.merge(triple_report);

    let mut compat = Vec::new();
    for &(a, a2) in &related {
        let mid = m.target(&sample[a]);
        for &(b, b2) in &related {
            if m.source(&sample[b]) == mid {
                compat.push((a, a2, b, b2));
            }
        }
    }
    let compat_report = visit(compat, policy, &mut rng, |&(a, a2, b, b2)| {
        let left = m.compose(&sample[a], &sample[b]);
        let right = m.compose(&sample[a2], &sample[b2]);
        match (left, right) {
            (Some(l), Some(r)) if c.equivalent(m, &l, &r) => Ok(()),
            (Some(_), Some(_)) => violation(&format!(
                "composites of related pairs are unrelated: ({:?}, {:?}) vs ({:?}, {:?})",
                sample[a], sample[b], sample[a2], sample[b2]
            )),
            _ => violation("composition undefined on composable pair"),
        }
    })?;
    Ok(report.merge(compat_report))
}

/// Checks identity, associativity and inverse laws (up to `c`) on the sample.
pub fn check_groupoid_axioms<M, C>(m: &M, c: &C, sample: &[M::Morphism], policy: &SamplingPolicy) -> Result<AxiomReport>
where
    M: Groupoid + ?Sized,
    C: Congruence<M> + ?Sized,
{
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed ^ 0x9e37_79b9);
    let fail = |what: String| Err(Error::AxiomViolation(what));

    let mut report = visit((0..sample.len()).collect(), policy, &mut rng, |&i| {
        let f = &sample[i];
        let (x, y) = (m.source(f), m.target(f));
        let id_x = m.identity(&x);
        let id_y = m.identity(&y);
        if m.source(&id_x) != x || m.target(&id_x) != x {
            return fail(format!("identity at {x:?} is not an endomorphism"));
        }
        let left = m.compose(&id_x, f);
        let right = m.compose(f, &id_y);
        match (left, right) {
            (Some(l), Some(r)) if c.equivalent(m, &l, f) && c.equivalent(m, &r, f) => {}
            _ => return fail(format!("identity law fails for {f:?}")),
        }
        let inv = m.inverse(f);
        if m.source(&inv) != y || m.target(&inv) != x {
            return fail(format!("inverse of {f:?} has the wrong type"));
        }
        let there = m.compose(f, &inv);
        let back = m.compose(&inv, f);
        match (there, back) {
            (Some(a), Some(b)) if c.equivalent(m, &a, &id_x) && c.equivalent(m, &b, &id_y) => Ok(()),
            _ => fail(format!("inverse law fails for {f:?}")),
        }
    })?;

    let mut triples = Vec::new();
    for (i, f) in sample.iter().enumerate() {
        let y = m.target(f);
        for (j, g) in sample.iter().enumerate() {
            if m.source(g) != y {
                continue;
            }
            let z = m.target(g);
            for (k, h) in sample.iter().enumerate() {
                if m.source(h) == z {
                    triples.push((i, j, k));
                }
            }
        }
    }
    let assoc = visit(triples, policy, &mut rng, |&(i, j, k)| {
        let (f, g, h) = (&sample[i], &sample[j], &sample[k]);
        let left = m.compose(f, g).and_then(|fg| m.compose(&fg, h));
        let right = m.compose(g, h).and_then(|gh| m.compose(f, &gh));
        match (left, right) {
            (Some(l), Some(r)) if c.equivalent(m, &l, &r) => Ok(()),
            _ => fail(format!("associativity fails for {f:?}, {g:?}, {h:?}")),
        }
    })?;
    report = report.merge(assoc);
    Ok(report)
}

/// The quotient of a magmoid by a congruence. Morphisms are representatives;
/// two representatives denote the same morphism exactly when the congruence
/// relates them.
#[derive(Clone, Debug)]
pub struct Quotient<M, C> {
    magmoid: M,
    congruence: C,
    report: AxiomReport,
}

/// Builds the quotient after checking `c` on `sample`.
pub fn quotient<M, C>(m: M, c: C, sample: &[M::Morphism], policy: &SamplingPolicy) -> Result<Quotient<M, C>>
where
    M: Magmoid,
    C: Congruence<M>,
{
    let report = check_congruence(&m, &c, sample, policy)?;
    Ok(Quotient { magmoid: m, congruence: c, report })
}

impl<M: Magmoid, C: Congruence<M>> Quotient<M, C> {
    pub fn magmoid(&self) -> &M {
        &self.magmoid
    }

    pub fn congruence(&self) -> &C {
        &self.congruence
    }

    /// How the congruence was verified when the quotient was built.
    pub fn report(&self) -> AxiomReport {
        self.report
    }

    pub fn same_class(&self, f: &M::Morphism, g: &M::Morphism) -> bool {
        same_hom(&self.magmoid, f, g) && self.congruence.equivalent(&self.magmoid, f, g)
    }

    /// One representative per class, in order of first appearance.
    pub fn class_representatives(&self, morphisms: &[M::Morphism]) -> Vec<M::Morphism> {
        let mut reps: Vec<M::Morphism> = Vec::new();
        for f in morphisms {
            if !reps.iter().any(|r| self.same_class(r, f)) {
                reps.push(f.clone());
            }
        }
        reps
    }

    /// Representatives of the classes in hom(x, y) met among `morphisms`.
    pub fn hom_classes(&self, x: &M::Object, y: &M::Object, morphisms: &[M::Morphism]) -> Vec<M::Morphism> {
        let in_hom: Vec<M::Morphism> = morphisms
            .iter()
            .filter(|f| self.magmoid.source(f) == *x && self.magmoid.target(f) == *y)
            .cloned()
            .collect();
        self.class_representatives(&in_hom)
    }

    /// The representative in `reps` of the class of `f`, if any.
    pub fn canonical<'a>(&self, f: &M::Morphism, reps: &'a [M::Morphism]) -> Option<&'a M::Morphism> {
        reps.iter().find(|r| self.same_class(r, f))
    }
}

impl<M: Groupoid, C: Congruence<M>> Quotient<M, C> {
    /// Checks the groupoid laws on the classes of `sample`.
    pub fn check_groupoid_axioms(&self, sample: &[M::Morphism], policy: &SamplingPolicy) -> Result<AxiomReport> {
        check_groupoid_axioms(&self.magmoid, &self.congruence, sample, policy)
    }
}

impl<M: Magmoid, C: Congruence<M>> Magmoid for Quotient<M, C> {
    type Object = M::Object;
    type Morphism = M::Morphism;

    fn source(&self, f: &M::Morphism) -> M::Object {
        self.magmoid.source(f)
    }

    fn target(&self, f: &M::Morphism) -> M::Object {
        self.magmoid.target(f)
    }

    fn compose(&self, f: &M::Morphism, g: &M::Morphism) -> Option<M::Morphism> {
        self.magmoid.compose(f, g)
    }
}

impl<M: Groupoid, C: Congruence<M>> Groupoid for Quotient<M, C> {
    fn identity(&self, x: &M::Object) -> M::Morphism {
        self.magmoid.identity(x)
    }

    fn inverse(&self, f: &M::Morphism) -> M::Morphism {
        self.magmoid.inverse(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integers mod 6 as a one-object groupoid, morphisms stored unreduced.
    #[derive(Clone, Debug)]
    struct Mod6;

    impl Magmoid for Mod6 {
        type Object = ();
        type Morphism = i64;
        fn source(&self, _: &i64) {}
        fn target(&self, _: &i64) {}
        fn compose(&self, f: &i64, g: &i64) -> Option<i64> {
            Some(f + g)
        }
    }

    impl Groupoid for Mod6 {
        fn identity(&self, _: &()) -> i64 {
            0
        }
        fn inverse(&self, f: &i64) -> i64 {
            -f
        }
    }

    fn mod_n(n: i64) -> FnCongruence<impl Fn(&i64, &i64) -> bool> {
        FnCongruence(move |a: &i64, b: &i64| (a - b).rem_euclid(n) == 0)
    }

    #[test]
    fn residue_congruence_quotient_is_a_groupoid() {
        let sample: Vec<i64> = (-12..12).collect();
        let q = quotient(Mod6, mod_n(6), &sample, &SamplingPolicy::default()).unwrap();
        assert!(q.report().exhaustive);
        assert_eq!(q.class_representatives(&sample).len(), 6);
        q.check_groupoid_axioms(&sample, &SamplingPolicy::default()).unwrap();
    }

    #[test]
    fn incompatible_relation_is_rejected() {
        // "same sign" is an equivalence on the sample but not compatible with +.
        let sign = FnCongruence(|a: &i64, b: &i64| a.signum() == b.signum());
        let sample: Vec<i64> = vec![-3, -1, 0, 2, 5];
        let err = quotient(Mod6, sign, &sample, &SamplingPolicy::default()).unwrap_err();
        assert!(matches!(err, Error::CongruenceViolation(_)));
    }

    #[test]
    fn non_transitive_relation_is_rejected() {
        let near = FnCongruence(|a: &i64, b: &i64| (a - b).abs() <= 1);
        let sample: Vec<i64> = vec![0, 1, 2];
        let err = quotient(Mod6, near, &sample, &SamplingPolicy::default()).unwrap_err();
        assert!(matches!(err, Error::CongruenceViolation(msg) if msg.contains("transitivity")));
    }

    #[test]
    fn total_and_equality_congruences() {
        let sample: Vec<i64> = (0..10).collect();
        let total = quotient(Mod6, TotalCongruence, &sample, &SamplingPolicy::default()).unwrap();
        assert_eq!(total.hom_classes(&(), &(), &sample).len(), 1);
        let eq = quotient(Mod6, EqualityCongruence, &sample, &SamplingPolicy::default()).unwrap();
        assert_eq!(eq.hom_classes(&(), &(), &sample).len(), sample.len());
        assert_eq!(eq.canonical(&4, &sample), Some(&4));
    }

    #[test]
    fn randomized_mode_above_bound() {
        let sample: Vec<i64> = (0..40).collect();
        let policy = SamplingPolicy { exhaustive_bound: 100, random_trials: 300, seed: 7 };
        let q = quotient(Mod6, mod_n(3), &sample, &policy).unwrap();
        assert!(!q.report().exhaustive);
        let report = q.check_groupoid_axioms(&sample, &policy).unwrap();
        assert!(!report.exhaustive);
        assert!(report.to_string().starts_with("verified on samples"));
    }

    #[test]
    fn broken_inverse_is_detected() {
        #[derive(Clone, Debug)]
        struct NoInverse;
        impl Magmoid for NoInverse {
            type Object = ();
            type Morphism = i64;
            fn source(&self, _: &i64) {}
            fn target(&self, _: &i64) {}
            fn compose(&self, f: &i64, g: &i64) -> Option<i64> {
                Some(f + g)
            }
        }
        impl Groupoid for NoInverse {
            fn identity(&self, _: &()) -> i64 {
                0
            }
            fn inverse(&self, f: &i64) -> i64 {
                *f
            }
        }
        let sample = vec![1, 2];
        let err = check_groupoid_axioms(&NoInverse, &EqualityCongruence, &sample, &SamplingPolicy::default())
            .unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
    }
}
