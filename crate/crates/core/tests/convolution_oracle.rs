//! Independent brute-force checks of the convolution product: enumerate the
//! whole target group and keep the elements whose standardized prefix and
//! suffix reproduce the factors, then compare against the constructive
//! implementation.

use std::collections::{BTreeSet, HashMap};

use hyperchen_core::algebra::{convolve, AlgebraElement};
use hyperchen_core::perm::{signed_permutations, standardize, SignedPermutation};
use hyperchen_core::scalar::int;
use hyperchen_core::word::{shuffle, Letter, WordSum};
use hyperchen_core::{Rat, RatElement};

type PairKey = (SignedPermutation, SignedPermutation);

fn oracle_buckets(n: usize, m: usize) -> HashMap<PairKey, BTreeSet<SignedPermutation>> {
    let mut buckets: HashMap<PairKey, BTreeSet<SignedPermutation>> = HashMap::new();
    for tau in signed_permutations(n + m) {
        let prefix = standardize(&tau.values()[..n], &tau.bars()[..n]).unwrap();
        let suffix = standardize(&tau.values()[n..], &tau.bars()[n..]).unwrap();
        buckets.entry((prefix, suffix)).or_default().insert(tau);
    }
    buckets
}

#[test]
fn brute_force_oracle_matches_up_to_total_degree_six() {
    for n in 1..6 {
        for m in 1..=6 - n {
            let buckets = oracle_buckets(n, m);
            for sigma in signed_permutations(n) {
                for beta in signed_permutations(m) {
                    let prod: RatElement = convolve(
                        &AlgebraElement::basis(sigma.clone()),
                        &AlgebraElement::basis(beta.clone()),
                    );
                    let support: BTreeSet<SignedPermutation> =
                        prod.terms().map(|(p, _)| p.clone()).collect();
                    let expected = buckets
                        .get(&(sigma.clone(), beta.clone()))
                        .cloned()
                        .unwrap_or_default();
                    assert_eq!(support, expected, "support of {sigma:?} * {beta:?}");
                    assert!(
                        prod.terms().all(|(_, c)| c == &int::<Rat>(1)),
                        "all coefficients must be 1 for basis products"
                    );
                }
            }
        }
    }
}

#[test]
fn convolution_is_associative_on_basis_triples() {
    for a in 1..4 {
        for b in 1..4 {
            for c in 1..4 {
                if a + b + c > 5 {
                    continue;
                }
                for x in signed_permutations(a) {
                    for y in signed_permutations(b) {
                        for z in signed_permutations(c) {
                            let ex: RatElement = AlgebraElement::basis(x.clone());
                            let ey = AlgebraElement::basis(y.clone());
                            let ez = AlgebraElement::basis(z.clone());
                            let left = convolve(&convolve(&ex, &ey), &ez);
                            let right = convolve(&ex, &convolve(&ey, &ez));
                            assert_eq!(left, right, "({x:?} * {y:?}) * {z:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn graduation_is_additive() {
    let x: RatElement = AlgebraElement::basis("2 -1".parse().unwrap());
    let y: RatElement = AlgebraElement::basis("1 3 2".parse().unwrap());
    assert_eq!(convolve(&x, &y).degree(), 5);
}

/// The alternative recursion for the shuffle product, used as an
/// independent implementation: `a_1..a_k ⧢ b b_2..b_l` expands by the
/// position after which `b` is inserted.
fn shuffle_by_insertion(u: &[Letter], v: &[Letter]) -> WordSum {
    if v.is_empty() {
        return WordSum::singleton(u.to_vec());
    }
    let b = v[0];
    let mut out = WordSum::new();
    for i in 0..=u.len() {
        for (w, mult) in shuffle_by_insertion(&u[i..], &v[1..]).terms() {
            let mut word = u[..i].to_vec();
            word.push(b);
            word.extend_from_slice(w);
            out.add_word(word, mult);
        }
    }
    out
}

#[test]
fn shuffle_recursions_agree_on_short_words() {
    // all word pairs of total length at most 4 over a three-letter,
    // three-decoration alphabet
    let alphabet = [
        Letter::plain(1),
        Letter::barred(2),
        Letter::hatted(3),
        Letter::plain(2),
    ];
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    for u in &words {
        for v in &words {
            if u.len() + v.len() > 4 {
                continue;
            }
            assert_eq!(shuffle(u, v), shuffle_by_insertion(u, v), "{u:?} vs {v:?}");
        }
    }
}
