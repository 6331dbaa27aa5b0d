//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use motion_core::braid::{BraidWord, NormalForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_LEN: usize = 10;
const CHECK_LEN: usize = 6;

// letters 0..4 stand for s1, s1^-1, s2, s2^-1
const TO_BRAID: [i32; 4] = [1, -1, 2, -2];

fn inverse_letter(l: u8) -> u8 {
    l ^ 1
}

struct Words {
    offsets: Vec<usize>,
}

impl Words {
    fn new(max_len: usize) -> Self {
        let mut offsets = vec![0];
        for len in 0..=max_len {
            offsets.push(offsets[len] + 4usize.pow(len as u32));
        }
        Words { offsets }
    }

    fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn index(&self, word: &[u8]) -> usize {
        let code = word.iter().fold(0usize, |acc, &l| acc * 4 + l as usize);
        self.offsets[word.len()] + code
    }

    fn decode(&self, len: usize, mut code: usize) -> Vec<u8> {
        let mut word = vec![0u8; len];
        for slot in word.iter_mut().rev() {
            *slot = (code % 4) as u8;
            code /= 4;
        }
        word
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

fn union(parent: &mut [u32], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a as u32), find(parent, b as u32));
    if ra != rb {
        parent[ra.max(rb) as usize] = ra.min(rb);
    }
}

fn oracle_classes() -> (Words, Vec<u32>) {
    let words = Words::new(MAX_LEN);
    let mut parent: Vec<u32> = (0..words.total() as u32).collect();
    let relations: [([u8; 3], [u8; 3]); 2] = [([0, 2, 0], [2, 0, 2]), ([1, 3, 1], [3, 1, 3])];
    for len in 0..=MAX_LEN {
        for code in 0..4usize.pow(len as u32) {
            let word = words.decode(len, code);
            let here = words.offsets[len] + code;
            for i in 0..len.saturating_sub(1) {
                if word[i + 1] == inverse_letter(word[i]) {
                    let mut shorter = word.clone();
                    shorter.drain(i..i + 2);
                    union(&mut parent, here, words.index(&shorter));
                }
            }
            for i in 0..len.saturating_sub(2) {
                for (lhs, rhs) in &relations {
                    if word[i..i + 3] == lhs[..] {
                        let mut other = word.clone();
                        other[i..i + 3].copy_from_slice(rhs);
                        union(&mut parent, here, words.index(&other));
                    }
                }
            }
        }
    }
    (words, parent)
}

fn braid(word: &[u8]) -> BraidWord {
    BraidWord::new(3, word.iter().map(|&l| TO_BRAID[l as usize]).collect()).unwrap()
}

/// Checks that normal forms separate exactly the classes of the rewriting
/// closure, over every three-strand word up to `CHECK_LEN` letters. Returns
/// the number of words checked.
pub fn b3_agreement() -> Result<usize, String> {
    let (words, mut parent) = oracle_classes();
    let mut by_nf: HashMap<NormalForm, u32> = HashMap::new();
    let mut by_root: HashMap<u32, NormalForm> = HashMap::new();
    let mut checked = 0;
    for len in 0..=CHECK_LEN {
        for code in 0..4usize.pow(len as u32) {
            let word = words.decode(len, code);
            let root = find(&mut parent, words.index(&word) as u32);
            let nf = braid(&word).normal_form();
            let seen_root = *by_nf.entry(nf.clone()).or_insert(root);
            if seen_root != root {
                return Err(format!("normal form identifies words the oracle separates: {}", braid(&word)));
            }
            let seen_nf = by_root.entry(root).or_insert(nf.clone());
            if *seen_nf != nf {
                return Err(format!("oracle identifies words with different normal forms: {}", braid(&word)));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// On `count` random two-strand words, the normal form is `Δ^e` with `e` the
/// exponent sum.
pub fn b2_exponent_sum(count: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..count {
        let len = rng.gen_range(0..40);
        let letters: Vec<i32> = (0..len).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let w = BraidWord::new(2, letters).unwrap();
        let nf = w.normal_form();
        if nf.delta_power() != w.exponent_sum() || !nf.factors().is_empty() {
            return Err(format!("{w} has normal form {nf}"));
        }
    }
    Ok(())
}

