//! Artin braid groups: words in the generators `s1 .. s(n-1)`, their
//! permutations, and a normal form deciding equality.
//!
//! Relations used: `s_i s_j = s_j s_i` for `|i - j| >= 2` and
//! `s_i s_(i+1) s_i = s_(i+1) s_i s_(i+1)`. Words are read left to right, the
//! leftmost letter happening first.

mod garside;

pub use garside::{normal_form, NormalForm};

use std::fmt;

use crate::error::{Error, Result};

/// A word in the Artin generators. Letter `i` is `s_i`, letter `-i` its
/// inverse; `1 <= |i| < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        if let Some(bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::InvalidBraid(format!("generator {bad} out of range for {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &BraidWord) -> Result<BraidWord> {
        if self.strands != next.strands {
            return Err(Error::StrandMismatch(self.strands, next.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&next.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Image in the symmetric group: the product `t_(i1) ∘ t_(i2) ∘ ...` of
    /// the transpositions `t_i = (i i+1)`, one per letter.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // composing on the right: (p ∘ t)(x) = p(t(x))
        for l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            images.swap(i, i + 1);
        }
        Permutation { images }
    }

    pub fn normal_form(&self) -> NormalForm {
        normal_form(self)
    }

    pub fn is_trivial(&self) -> bool {
        self.normal_form().is_identity()
    }

    /// Equality in the braid group.
    pub fn equivalent(&self, other: &BraidWord) -> bool {
        self.strands == other.strands && self.normal_form() == other.normal_form()
    }

    /// Parses `"s1 s2^-1 s1"`; `"e"` or blank is the empty word. A leading
    /// `strands n` line overrides `strands`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty()).peekable();
        let mut n = strands;
        if let Some(first) = lines.peek() {
            if let Some(rest) = first.strip_prefix("strands") {
                let parsed = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad strand header {first:?}")))?;
                n = Some(parsed);
                lines.next();
            }
        }
        let mut letters = Vec::new();
        for line in lines {
            for tok in line.split_whitespace() {
                if tok == "e" {
                    continue;
                }
                let (body, inverse) = match tok.strip_suffix("^-1") {
                    Some(b) => (b, true),
                    None => (tok, false),
                };
                let index: i32 = body
                    .strip_prefix('s')
                    .and_then(|d| d.parse().ok())
                    .filter(|&i: &i32| i > 0)
                    .ok_or_else(|| Error::Parse(format!("bad generator {tok:?}")))?;
                letters.push(if inverse { -index } else { index });
            }
        }
        let n = match n {
            Some(n) => n,
            None => letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1),
        };
        BraidWord::new(n, letters)
    }

    /// The word alone, `"e"` when empty.
    pub fn word_text(&self) -> String {
        if self.letters.is_empty() {
            return "e".into();
        }
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) })
            .collect();
        toks.join(" ")
    }

    /// `strands n` header line followed by the word.
    pub fn to_text(&self) -> String {
        format!("strands {}\n{}\n", self.strands, self.word_text())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_text())
    }
}

/// A permutation of `{0, .., n-1}` in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidBraid(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles with 1-based labels, fixed points omitted; `()` for the
    /// identity.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.images.len()];
        let mut out = String::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.images[i];
            }
            out.push_str(&format!("({})", cycle.join(" ")));
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycles())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn composition_and_inversion() {
        let e = BraidWord::identity(3);
        let a = w(3, &[1, -2]);
        assert_eq!(e.compose(&a).unwrap(), a);
        assert!(w(2, &[1]).compose(&w(2, &[-1])).unwrap().is_trivial());
        assert_eq!(w(3, &[1]).compose(&w(3, &[2])).unwrap(), w(3, &[1, 2]));
        assert!(matches!(w(3, &[1]).compose(&w(4, &[1])), Err(Error::StrandMismatch(3, 4))));
        assert_eq!(w(3, &[1, 2]).invert(), w(3, &[-2, -1]));
        assert_eq!(a.invert().invert(), a);
        assert_eq!(BraidWord::identity(4).invert(), BraidWord::identity(4));
    }

    #[test]
    fn permutations() {
        assert!(BraidWord::identity(3).permutation().is_identity());
        assert!(w(2, &[1, 1]).permutation().is_identity());
        assert_eq!(w(3, &[1, 2]).permutation().cycles(), "(1 2 3)");
        assert_eq!(w(3, &[1, -1, 2]).permutation().cycles(), "(2 3)");
    }

    #[test]
    fn text_round_trip() {
        let a = BraidWord::parse("s1 s2^-1 s1", Some(3)).unwrap();
        assert_eq!(a, w(3, &[1, -2, 1]));
        assert_eq!(BraidWord::parse(&a.to_text(), None).unwrap(), a);
        let e = BraidWord::parse("strands 4\ne\n", None).unwrap();
        assert_eq!(e, BraidWord::identity(4));
        assert_eq!(e.to_text(), "strands 4\ne\n");
        assert!(BraidWord::parse("s0", Some(3)).is_err());
        assert!(BraidWord::parse("s3", Some(3)).is_err());
        assert!(BraidWord::parse("x1", Some(3)).is_err());
        assert_eq!(BraidWord::parse("s2", None).unwrap().strands(), 3);
    }

    #[test]
    fn invalid_letters_are_rejected() {
        assert!(BraidWord::new(0, vec![]).is_err());
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(2, vec![0]).is_err());
    }
}
