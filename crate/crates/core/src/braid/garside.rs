//! Left-greedy normal form `Δ^k A_1 ... A_r`.
//!
//! Simple factors (positive braids in which each pair of strands crosses at
//! most once) are stored as position maps: `p[i]` is where the strand starting
//! in position `i` ends up. For a product `A B` (A first) the map is `B ∘ A`.

use std::fmt;

use super::BraidWord;

type Perm = Vec<usize>;

fn delta(n: usize) -> Perm {
    (0..n).rev().collect()
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &j)| i == j)
}

fn is_delta(p: &[usize]) -> bool {
    let n = p.len();
    p.iter().enumerate().all(|(i, &j)| j == n - 1 - i)
}

/// Conjugation by Δ, which sends `s_i` to `s_(n-i)`.
fn tau(p: &[usize]) -> Perm {
    let n = p.len();
    (0..n).map(|i| n - 1 - p[n - 1 - i]).collect()
}

fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

fn swap_value(v: usize, i: usize) -> usize {
    if v == i {
        i + 1
    } else if v == i + 1 {
        i
    } else {
        v
    }
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut changed = false;
    'outer: loop {
        let a_inv = inverse(a);
        for i in 0..n - 1 {
            // s_i starts b, and the strands ending at i, i+1 in a have not crossed
            if b[i] > b[i + 1] && a_inv[i] < a_inv[i + 1] {
                for v in a.iter_mut() {
                    *v = swap_value(*v, i);
                }
                b.swap(i, i + 1);
                changed = true;
                continue 'outer;
            }
        }
        return changed;
    }
}

/// Appends a simple factor to a left-weighted sequence and restores the
/// left-weighting by sweeping right to left.
fn push_simple(factors: &mut Vec<Perm>, x: Perm) {
    factors.push(x);
    loop {
        let mut changed = false;
        for j in (0..factors.len() - 1).rev() {
            let (head, tail) = factors.split_at_mut(j + 1);
            changed |= left_weight(&mut head[j], &mut tail[0]);
        }
        if !changed {
            break;
        }
    }
}

/// The simple factor as a positive word, leftmost descent first.
fn simple_word(p: &[usize]) -> Vec<i32> {
    let mut p = p.to_vec();
    let mut out = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        out.push(i as i32 + 1);
        p.swap(i, i + 1);
    }
    out
}

/// Canonical form of a braid: equal for two words exactly when they
/// represent the same element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Perm>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Exponent `k` of the leading `Δ^k`.
    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    /// Simple factors after the Δ power, as position maps.
    pub fn factors(&self) -> &[Vec<usize>] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// A word spelling the normal form: `Δ^k` written out, then each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta_word: Vec<i32> = (1..n).rev().flat_map(|m| 1..=m as i32).collect();
        let mut letters = Vec::new();
        for _ in 0..self.delta_power.unsigned_abs() {
            if self.delta_power > 0 {
                letters.extend(&delta_word);
            } else {
                letters.extend(delta_word.iter().rev().map(|l| -l));
            }
        }
        for f in &self.factors {
            letters.extend(simple_word(f));
        }
        BraidWord::new(n, letters).expect("normal form letters are in range")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for factor in &self.factors {
            let word = BraidWord::new(self.strands, simple_word(factor)).expect("in range");
            write!(f, " . {word}")?;
        }
        Ok(())
    }
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    if n == 1 {
        return NormalForm { strands: 1, delta_power: 0, factors: Vec::new() };
    }
    // s_i^-1 = Δ^-1 (Δ s_i^-1); every Δ^-1 is moved to the front, applying τ
    // to the simple factors it passes.
    let letters = w.letters();
    let negatives = letters.iter().filter(|&&l| l < 0).count();
    let mut later_negatives = negatives;
    let mut factors: Vec<Perm> = Vec::new();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        let simple: Perm = if l > 0 {
            let mut p: Perm = (0..n).collect();
            p.swap(i, i + 1);
            p
        } else {
            later_negatives -= 1;
            delta(n).into_iter().map(|v| swap_value(v, i)).collect()
        };
        let simple = if later_negatives % 2 == 1 { tau(&simple) } else { simple };
        push_simple(&mut factors, simple);
    }
    let leading = factors.iter().take_while(|p| is_delta(p)).count();
    let rest: Vec<Perm> = factors.into_iter().skip(leading).filter(|p| !is_identity(p)).collect();
    NormalForm { strands: n, delta_power: leading as i64 - negatives as i64, factors: rest }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn artin_relations() {
        assert_eq!(normal_form(&w(3, &[1, 2, 1])), normal_form(&w(3, &[2, 1, 2])));
        assert_eq!(normal_form(&w(4, &[1, 3])), normal_form(&w(4, &[3, 1])));
        assert_ne!(normal_form(&w(3, &[1, 2])), normal_form(&w(3, &[2, 1])));
        assert!(w(3, &[1, 2, 1, -2, -1, -2]).is_trivial());
        assert!(!w(2, &[1, 1]).is_trivial());
    }

    #[test]
    fn delta_bookkeeping() {
        let nf = normal_form(&w(3, &[1, 2, 1]));
        assert_eq!(nf.delta_power(), 1);
        assert!(nf.factors().is_empty());
        let nf = normal_form(&w(3, &[-1]));
        assert_eq!(nf.delta_power(), -1);
        assert_eq!(nf.factors().len(), 1);
        // the spelled-out word has the same normal form
        for letters in [&[1, -2, -2, 1][..], &[-1, -2, 1], &[2, 2, -1, 2]] {
            let word = w(3, letters);
            assert_eq!(normal_form(&word.normal_form().to_word()), normal_form(&word));
        }
    }

    #[test]
    fn two_strands_reduce_to_exponent_sum() {
        let nf = normal_form(&w(2, &[1, -1, 1, 1, -1, 1]));
        assert_eq!(nf.delta_power(), 2);
        assert!(nf.factors().is_empty());
        assert_eq!(nf.to_string(), "D^2");
    }

    #[test]
    fn one_strand() {
        assert!(BraidWord::identity(1).is_trivial());
    }
}
