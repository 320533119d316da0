//! Signed permutations in one-line notation.
//!
//! An element of the hyperoctahedral group `B_n` is a permutation of
//! `{1,..,n}` whose positions may carry a bar. We store the underlying
//! permutation and a parallel vector of bar flags; the ASCII form writes a
//! bar as a minus sign, so `"2 -3 1"` is the signed permutation (2, 3̄, 1).
//! The derived ordering (lexicographic on values, then on bars) is the
//! canonical order used for serialization everywhere in this crate.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("values are not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("values and bar flags have different lengths")]
    LengthMismatch,
    #[error("duplicate undecorated entry {0}")]
    DuplicateEntry(usize),
    #[error("barred entry at position {0} where an unsigned permutation is required")]
    SignedInput(usize),
    #[error("cannot parse {0:?} as a signed permutation")]
    Parse(String),
    #[error("subset member {0} outside 1..{1}")]
    SubsetRange(usize, usize),
}

/// An element of `B_n` (of `S_n` when all bars are off). Degree 0 is the
/// empty permutation, the unit of the graded convolution algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    values: Vec<usize>,
    bars: Vec<bool>,
}

impl SignedPermutation {
    /// Build from one-line values (1-based) and per-position bar flags.
    pub fn new(values: Vec<usize>, bars: Vec<bool>) -> Result<Self, PermError> {
        if values.len() != bars.len() {
            return Err(PermError::LengthMismatch);
        }
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Self { values, bars })
    }

    /// An unsigned permutation (all bars off).
    pub fn unsigned(values: Vec<usize>) -> Result<Self, PermError> {
        let bars = vec![false; values.len()];
        Self::new(values, bars)
    }

    pub(crate) fn from_parts_unchecked(values: Vec<usize>, bars: Vec<bool>) -> Self {
        debug_assert_eq!(values.len(), bars.len());
        Self { values, bars }
    }

    /// The empty permutation, unit of degree 0.
    pub fn empty() -> Self {
        Self {
            values: Vec::new(),
            bars: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
            bars: vec![false; n],
        }
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn bars(&self) -> &[bool] {
        &self.bars
    }

    /// `|sigma(i)|` at the 1-based position `i`.
    pub fn value_at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Bar flag at the 1-based position `i`.
    pub fn bar_at(&self, i: usize) -> bool {
        self.bars[i - 1]
    }

    pub fn is_unsigned(&self) -> bool {
        self.bars.iter().all(|&b| !b)
    }

    /// Bar erasure: the underlying unsigned permutation.
    pub fn forget_bars(&self) -> Self {
        Self {
            values: self.values.clone(),
            bars: vec![false; self.values.len()],
        }
    }

    /// Group law of `B_n`: apply `inner` first, then `self`. The result bar
    /// at position `i` is the XOR of `inner`'s bar at `i` and `self`'s bar
    /// at position `|inner(i)|`.
    pub fn compose(&self, inner: &Self) -> Result<Self, PermError> {
        if self.degree() != inner.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), inner.degree()));
        }
        let n = self.degree();
        let mut values = Vec::with_capacity(n);
        let mut bars = Vec::with_capacity(n);
        for i in 0..n {
            let v = inner.values[i];
            values.push(self.values[v - 1]);
            bars.push(inner.bars[i] ^ self.bars[v - 1]);
        }
        Ok(Self { values, bars })
    }

    /// Group inverse: `compose(s, s.inverse())` is the identity.
    pub fn inverse(&self) -> Self {
        let n = self.degree();
        let mut values = vec![0; n];
        let mut bars = vec![false; n];
        for i in 0..n {
            values[self.values[i] - 1] = i + 1;
            bars[self.values[i] - 1] = self.bars[i];
        }
        Self { values, bars }
    }

    /// Descent set `{i < n : sigma(i) > sigma(i+1)}` of an unsigned
    /// permutation. Signed input is rejected: the regression statistic, not
    /// the order-based descent statistic, is the right notion on `B_n`.
    pub fn descent_set(&self) -> Result<SubsetMask, PermError> {
        if let Some(i) = self.bars.iter().position(|&b| b) {
            return Err(PermError::SignedInput(i + 1));
        }
        let n = self.degree();
        let mut set = SubsetMask::empty(n);
        for i in 1..n {
            if self.values[i - 1] > self.values[i] {
                set.insert(i);
            }
        }
        Ok(set)
    }

    /// Regression set. Position `i` carries a progression when
    /// `|sigma(i)| < |sigma(i+1)|` and position `i+1` is unbarred, or
    /// `|sigma(i)| > |sigma(i+1)|` and position `i+1` is barred; every other
    /// position is a regression.
    pub fn regression_set(&self) -> SubsetMask {
        let n = self.degree();
        let mut set = SubsetMask::empty(n);
        for i in 1..n {
            let ascending = self.values[i - 1] < self.values[i];
            let progression = if self.bars[i] { !ascending } else { ascending };
            if !progression {
                set.insert(i);
            }
        }
        set
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, b) in self.values.iter().zip(&self.bars) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if *b {
                write!(f, "-{v}")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SignedPermutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let (values, bars) = parse_decorated(s)?;
        Self::new(values, bars)
    }
}

/// Parse a space- or comma-separated list of nonzero integers into absolute
/// values and bar flags (`-k` means `k` barred). The empty string is the
/// empty sequence.
pub fn parse_decorated(s: &str) -> Result<(Vec<usize>, Vec<bool>), PermError> {
    let mut values = Vec::new();
    let mut bars = Vec::new();
    for tok in s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let k: i64 = tok.parse().map_err(|_| PermError::Parse(s.to_string()))?;
        if k == 0 {
            return Err(PermError::Parse(s.to_string()));
        }
        values.push(k.unsigned_abs() as usize);
        bars.push(k < 0);
    }
    Ok((values, bars))
}

/// Standardization: entry `j` is replaced by the rank of `values[j]` in the
/// increasing order of all entries, bars staying at their positions.
/// Duplicate undecorated entries are rejected; sequences standardized inside
/// the convolution product always have distinct entries.
pub fn standardize(values: &[usize], bars: &[bool]) -> Result<SignedPermutation, PermError> {
    if values.len() != bars.len() {
        return Err(PermError::LengthMismatch);
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by_key(|&i| values[i]);
    for w in idx.windows(2) {
        if values[w[0]] == values[w[1]] {
            return Err(PermError::DuplicateEntry(values[w[0]]));
        }
    }
    Ok(ranked(values, bars, idx))
}

/// Standardization with ties resolved by first occurrence: among equal
/// entries the earlier position gets the lower rank, e.g.
/// (2̄, 7, 1̄, 2) becomes (2̄, 4, 1̄, 3).
pub fn standardize_with_ties(
    values: &[usize],
    bars: &[bool],
) -> Result<SignedPermutation, PermError> {
    if values.len() != bars.len() {
        return Err(PermError::LengthMismatch);
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    // stable sort: equal values keep their left-to-right order
    idx.sort_by_key(|&i| values[i]);
    Ok(ranked(values, bars, idx))
}

fn ranked(values: &[usize], bars: &[bool], idx: Vec<usize>) -> SignedPermutation {
    let mut out = vec![0; values.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    SignedPermutation::from_parts_unchecked(out, bars.to_vec())
}

/// All of `S_n` in an unspecified but deterministic order.
pub fn unsigned_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    (1..=n)
        .permutations(n)
        .map(move |values| SignedPermutation::from_parts_unchecked(values, vec![false; n]))
}

/// All of `B_n` (`2^n n!` elements).
pub fn signed_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    (1..=n).permutations(n).flat_map(move |values| {
        (0u64..1 << n).map(move |mask| {
            let bars = (0..n).map(|i| mask >> i & 1 == 1).collect();
            SignedPermutation::from_parts_unchecked(values.clone(), bars)
        })
    })
}

/// A subset of `{1,..,n-1}`, the index set for descent and regression
/// statistics in degree `n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    n: usize,
    mask: u64,
}

impl SubsetMask {
    pub fn empty(n: usize) -> Self {
        Self { n, mask: 0 }
    }

    pub fn new(n: usize, members: &[usize]) -> Result<Self, PermError> {
        let mut set = Self::empty(n);
        for &i in members {
            if i == 0 || i >= n {
                return Err(PermError::SubsetRange(i, n));
            }
            set.insert(i);
        }
        Ok(set)
    }

    /// Degree of the ambient statistic (members range over `1..n`).
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i >= 1 && i < self.n);
        self.mask |= 1 << (i - 1);
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.mask >> (i - 1) & 1 == 1
    }

    pub fn card(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn members(&self) -> Vec<usize> {
        (1..self.n.max(1)).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.n == other.n && self.mask & !other.mask == 0
    }

    /// All subsets of this set (including itself and the empty set), in
    /// increasing mask order via the `(s - mask) & mask` submask walk.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        let n = self.n;
        let mask = self.mask;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == mask {
                None
            } else {
                Some(s.wrapping_sub(mask) & mask)
            };
            Some(SubsetMask { n, mask: s })
        })
    }

    /// All subsets of `{1,..,n-1}`.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        let top: u64 = if n == 0 { 1 } else { 1 << (n - 1) };
        (0..top).map(move |mask| SubsetMask { n, mask })
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.n)
    }
}
