//! Property tests. Structured values come from the seeded generators in
//! `motion_core::sample`; proptest drives the seeds and the small integer knobs.

use motion_core::braid::BraidWord;
use motion_core::interval::{canonical_motion, hom_cardinality, is_motion};
use motion_core::pl::{Ambient, PlFlow, PlHomeo};
use motion_core::sample;
use motion_core::scalar::{self, Scalar};
use motion_core::strands::{braid_word_of, braid_word_with_shear, crossings, StrandSet, SHEARS};
use motion_core::subset::CompactSubset;
use motion_core::Rational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ambient() -> impl Strategy<Value = Ambient> {
    prop_oneof![Just(Ambient::Interval), Just(Ambient::Line), Just(Ambient::Circle)]
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

/// Rank of each point in lexicographic order.
fn ranks(points: &[(Q, Q)]) -> Vec<usize> {
    points
        .iter()
        .map(|p| points.iter().filter(|o| (&o.0, &o.1) < (&p.0, &p.1)).count())
        .collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn composition_is_associative(seed: u64, amb in ambient()) {
        let mut r = rng(seed);
        let f: PlFlow<Q> = sample::flow(&mut r, amb, 2, 3);
        let (a, b, c) = (f.frames()[0].clone(), f.endpoint().clone(), sample::flow::<Q, _>(&mut r, amb, 1, 3).endpoint().clone());
        prop_assert_eq!(a.after(&b)?.after(&c)?, a.after(&b.after(&c)?)?);
    }

    #[test]
    fn inverse_undoes_the_map(seed: u64, amb in ambient(), x in -40i64..40) {
        let mut r = rng(seed);
        let h = sample::flow::<Q, _>(&mut r, amb, 1, 4).endpoint().clone();
        prop_assert!(h.after(&h.inverse())?.is_identity());
        prop_assert!(h.inverse().after(&h)?.is_identity());
        let x = match amb {
            Ambient::Interval => Q::from_ratio(x.abs() % 21, 20),
            _ => Q::from_ratio(x, 7),
        };
        prop_assert_eq!(h.eval_inverse(&h.eval(&x)?)?, x.clone());
        prop_assert_eq!(h.inverse().eval(&x)?, h.eval_inverse(&x)?);
    }

    #[test]
    fn vertices_are_canonical(seed: u64, amb in ambient()) {
        let mut r = rng(seed);
        let h = sample::flow::<Q, _>(&mut r, amb, 1, 4).endpoint().clone();
        prop_assert_eq!(PlHomeo::new(amb, h.points().to_vec())?, h.clone());
        // adding a vertex on a segment does not change the map
        let p = &h.points()[..2];
        let mid = (scalar::lerp(&p[0].0, &p[1].0, &Q::from_ratio(1, 3)), scalar::lerp(&p[0].1, &p[1].1, &Q::from_ratio(1, 3)));
        let mut more = h.points().to_vec();
        more.insert(1, mid);
        prop_assert_eq!(PlHomeo::new(amb, more)?, h);
    }

    #[test]
    fn hom_sets_are_symmetric(seed: u64) {
        let mut r = rng(seed);
        let n: CompactSubset<Q> = sample::compact_subset(&mut r, 4);
        let n2 = sample::interval_homeo::<Q, _>(&mut r, 3).image(&n)?;
        prop_assert_eq!(hom_cardinality(&n, &n2), 1);
        prop_assert_eq!(hom_cardinality(&n2, &n), 1);
        let back = canonical_motion(&n, &n2)?.reverse();
        prop_assert!(is_motion(&back, &n2, &n));
        let other: CompactSubset<Q> = sample::compact_subset(&mut r, 4);
        prop_assert_eq!(hom_cardinality(&n, &other), hom_cardinality(&other, &n));
    }

    #[test]
    fn extraction_is_a_homomorphism(seed: u64, n in 1usize..=4) {
        let mut r = rng(seed);
        let f: StrandSet<Q> = sample::strand_set(&mut r, n, 2);
        let g: StrandSet<Q> = sample::strands_from(&mut r, &f.end(), 2);
        let whole = braid_word_of(&StrandSet::box_compose(&f, &g)?)?;
        let parts = braid_word_of(&f)?.compose(&braid_word_of(&g)?)?;
        prop_assert!(whole.equivalent(&parts));
    }

    #[test]
    fn reverse_inverts_the_word(seed: u64, n in 1usize..=4) {
        let mut r = rng(seed);
        let f: StrandSet<Q> = sample::strand_set(&mut r, n, 3);
        let w = braid_word_of(&f)?;
        prop_assert!(braid_word_of(&f.reverse())?.equivalent(&w.invert()));
        prop_assert!(braid_word_of(&StrandSet::box_compose(&f, &f.reverse())?)?.is_trivial());
    }

    #[test]
    fn word_does_not_depend_on_the_shear(seed: u64, n in 1usize..=4) {
        let mut r = rng(seed);
        let f: StrandSet<Q> = sample::strand_set(&mut r, n, 3);
        let words: Vec<BraidWord> = SHEARS.iter().filter_map(|&d| braid_word_with_shear(&f, d).ok()).collect();
        prop_assert!(words.len() >= 2);
        for w in &words[1..] {
            prop_assert!(w.equivalent(&words[0]));
        }
    }

    #[test]
    fn permutation_follows_the_strands(seed: u64, n in 1usize..=5) {
        let mut r = rng(seed);
        let f: StrandSet<Q> = sample::strand_set(&mut r, n, 3);
        let starts: Vec<_> = f.strands().iter().map(|s| s.start().clone()).collect();
        let ends: Vec<_> = f.strands().iter().map(|s| s.end().clone()).collect();
        let (from, to) = (ranks(&starts), ranks(&ends));
        let perm = braid_word_of(&f)?.permutation();
        for i in 0..n {
            prop_assert_eq!(perm.apply(to[i]), from[i]);
        }
    }

    #[test]
    fn dense_sampling_sees_no_collision(seed: u64, n in 2usize..=4) {
        let mut r = rng(seed);
        let f: StrandSet<Q> = sample::strand_set(&mut r, n, 3);
        for i in 0..=1000 {
            let t = Q::from_ratio(i, 1000);
            let at = f.positions_at(&t);
            for a in 0..n {
                for b in a + 1..n {
                    prop_assert_ne!(&at[a], &at[b]);
                }
            }
        }
        // every crossing happens strictly inside the time interval
        let (_, cs) = crossings(&f)?;
        for c in cs {
            prop_assert!(scalar::cmp(&c.time, &Q::from_int(0)).is_gt() && scalar::cmp(&c.time, &Q::from_int(1)).is_lt());
        }
    }
}
