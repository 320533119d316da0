//! Decorated words and the shuffle product.
//!
//! A letter is a positive integer carrying one of three decorations: plain,
//! barred, or hatted. In integrand descriptors a plain letter stands for the
//! off-space operator `A`, a barred letter for the model-space operator `B`,
//! and a hatted letter for the full perturbation `H`. The ASCII forms are
//! `k`, `-k` and `^k`.

use std::collections::BTreeMap;
use std::fmt;

use crate::perm::{PermError, SignedPermutation};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Decoration {
    Plain,
    Bar,
    Hat,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub value: usize,
    pub decor: Decoration,
}

impl Letter {
    pub fn plain(value: usize) -> Self {
        Self {
            value,
            decor: Decoration::Plain,
        }
    }

    pub fn barred(value: usize) -> Self {
        Self {
            value,
            decor: Decoration::Bar,
        }
    }

    pub fn hatted(value: usize) -> Self {
        Self {
            value,
            decor: Decoration::Hat,
        }
    }

    pub fn parse(tok: &str) -> Result<Self, PermError> {
        let err = || PermError::Parse(tok.to_string());
        if let Some(rest) = tok.strip_prefix('^') {
            let v: usize = rest.parse().map_err(|_| err())?;
            if v == 0 {
                return Err(err());
            }
            Ok(Self::hatted(v))
        } else {
            let k: i64 = tok.parse().map_err(|_| err())?;
            if k == 0 {
                return Err(err());
            }
            let v = k.unsigned_abs() as usize;
            Ok(if k < 0 {
                Self::barred(v)
            } else {
                Self::plain(v)
            })
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.decor {
            Decoration::Plain => write!(f, "{}", self.value),
            Decoration::Bar => write!(f, "-{}", self.value),
            Decoration::Hat => write!(f, "^{}", self.value),
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type Word = Vec<Letter>;

pub fn parse_word(s: &str) -> Result<Word, PermError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(Letter::parse)
        .collect()
}

pub fn format_word(w: &[Letter]) -> String {
    w.iter()
        .map(Letter::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// The one-line word of a signed permutation, values shifted by `offset`.
pub fn perm_word(p: &SignedPermutation, offset: usize) -> Word {
    p.values()
        .iter()
        .zip(p.bars())
        .map(|(&v, &b)| {
            if b {
                Letter::barred(v + offset)
            } else {
                Letter::plain(v + offset)
            }
        })
        .collect()
}

/// Interpret a plain/barred word whose values form a permutation.
pub fn word_perm(w: &[Letter]) -> Result<SignedPermutation, PermError> {
    let mut values = Vec::with_capacity(w.len());
    let mut bars = Vec::with_capacity(w.len());
    for l in w {
        match l.decor {
            Decoration::Plain => bars.push(false),
            Decoration::Bar => bars.push(true),
            Decoration::Hat => return Err(PermError::Parse(format_word(w))),
        }
        values.push(l.value);
    }
    SignedPermutation::new(values, bars)
}

/// A formal integer combination of words, the codomain of the shuffle
/// product. Multiplicities can exceed one as soon as letters repeat.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WordSum {
    terms: BTreeMap<Word, i64>,
}

impl WordSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(word: Word) -> Self {
        let mut s = Self::new();
        s.add_word(word, 1);
        s
    }

    pub fn add_word(&mut self, word: Word, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// Recursive shuffle: `aA' ⧢ bB' = a(A' ⧢ bB') + b(aA' ⧢ B')`.
pub fn shuffle(left: &[Letter], right: &[Letter]) -> WordSum {
    if left.is_empty() {
        return WordSum::singleton(right.to_vec());
    }
    if right.is_empty() {
        return WordSum::singleton(left.to_vec());
    }
    let mut out = WordSum::new();
    for (head, tail_sum) in [
        (left[0], shuffle(&left[1..], right)),
        (right[0], shuffle(left, &right[1..])),
    ] {
        for (w, m) in tail_sum.terms() {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(head);
            word.extend_from_slice(w);
            out.add_word(word, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn shuffle_two_singletons() {
        let s = shuffle(&w("1"), &w("2"));
        let words: Vec<_> = s.terms().map(|(word, m)| (format_word(word), m)).collect();
        assert_eq!(words, vec![("1 2".into(), 1), ("2 1".into(), 1)]);
    }

    #[test]
    fn shuffle_repeated_letters_carry_multiplicity() {
        let s = shuffle(&w("1"), &w("1"));
        assert_eq!(s.support_size(), 1);
        assert_eq!(s.total_multiplicity(), 2);
    }

    #[test]
    fn shuffle_support_bound() {
        // |u ⧢ v| <= C(|u|+|v|, |u|), with equality for disjoint letters.
        let u = w("1 -2");
        let v = w("^3 4");
        let s = shuffle(&u, &v);
        assert_eq!(s.support_size() as i64, binomial(4i64, 2));
        let t = shuffle(&w("1 2"), &w("2 1"));
        assert!(t.support_size() as i64 <= binomial(4i64, 2));
        assert_eq!(t.total_multiplicity(), binomial(4i64, 2));
    }

    #[test]
    fn letters_parse_and_print() {
        for s in ["1", "-3", "^2"] {
            assert_eq!(Letter::parse(s).unwrap().to_string(), s);
        }
        assert!(Letter::parse("0").is_err());
        assert!(Letter::parse("^0").is_err());
        assert!(Letter::parse("x").is_err());
    }

    #[test]
    fn word_perm_roundtrip() {
        let p: SignedPermutation = "2 -3 1".parse().unwrap();
        assert_eq!(word_perm(&perm_word(&p, 0)).unwrap(), p);
        let shifted = perm_word(&p, 2);
        assert_eq!(format_word(&shifted), "4 -5 3");
        assert!(word_perm(&w("^1")).is_err());
    }
}
