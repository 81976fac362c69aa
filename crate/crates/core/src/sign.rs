//! Sign vectors over a finite ground set and their calculus: composition,
//! negation, separating sets, and the covector partial order.
//!
//! A sign vector is an element of `{-,0,+}^E`. It is stored as a pair of
//! bitmasks (plus entries, minus entries), so composition, separation, and
//! order comparisons are word-parallel mask operations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One entry of a sign vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Result<Sign> {
        match c {
            '-' => Ok(Sign::Minus),
            '0' => Ok(Sign::Zero),
            '+' => Ok(Sign::Plus),
            other => Err(Error::InvalidSignChar(other)),
        }
    }

    /// Canonical entry order used throughout: `- < 0 < +`.
    fn rank(self) -> u8 {
        match self {
            Sign::Minus => 0,
            Sign::Zero => 1,
            Sign::Plus => 2,
        }
    }
}

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A set of ground-set indices, backed by a multi-word bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    words: Vec<u64>,
}

impl IndexSet {
    pub fn empty(n: usize) -> IndexSet {
        IndexSet { n, words: vec![0; words_for(n)] }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.n && self.words[e / WORD_BITS] >> (e % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        debug_assert!(e < self.n);
        self.words[e / WORD_BITS] |= 1 << (e % WORD_BITS);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&e| self.contains(e))
    }
}

/// An element of `{-,0,+}^E`, stored as disjoint plus/minus bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    n: usize,
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl SignVector {
    /// The all-zero sign vector of length `n`.
    pub fn zero(n: usize) -> SignVector {
        SignVector { n, plus: vec![0; words_for(n)], minus: vec![0; words_for(n)] }
    }

    pub fn from_signs(signs: &[Sign]) -> SignVector {
        let mut sv = SignVector::zero(signs.len());
        for (e, &s) in signs.iter().enumerate() {
            sv.set(e, s);
        }
        sv
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn sign(&self, e: usize) -> Sign {
        debug_assert!(e < self.n);
        let (w, b) = (e / WORD_BITS, e % WORD_BITS);
        if self.plus[w] >> b & 1 == 1 {
            Sign::Plus
        } else if self.minus[w] >> b & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn set(&mut self, e: usize, s: Sign) {
        debug_assert!(e < self.n);
        let (w, b) = (e / WORD_BITS, e % WORD_BITS);
        self.plus[w] &= !(1 << b);
        self.minus[w] &= !(1 << b);
        match s {
            Sign::Plus => self.plus[w] |= 1 << b,
            Sign::Minus => self.minus[w] |= 1 << b,
            Sign::Zero => {}
        }
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.n).map(move |e| self.sign(e))
    }

    /// Indices with nonzero entry.
    pub fn support(&self) -> IndexSet {
        let words = self.plus.iter().zip(&self.minus).map(|(p, m)| p | m).collect();
        IndexSet { n: self.n, words }
    }

    /// Indices with zero entry.
    pub fn zeros(&self) -> IndexSet {
        let mut words: Vec<u64> =
            self.plus.iter().zip(&self.minus).map(|(p, m)| !(p | m)).collect();
        if self.n % WORD_BITS != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (self.n % WORD_BITS)) - 1;
            }
        }
        IndexSet { n: self.n, words }
    }

    pub fn is_zero(&self) -> bool {
        self.support().is_empty()
    }

    fn check_len(&self, other: &SignVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Composition: entry `e` is this vector's entry when nonzero, else
    /// `other`'s entry.
    pub fn compose(&self, other: &SignVector) -> Result<SignVector> {
        self.check_len(other)?;
        let mut out = SignVector::zero(self.n);
        for w in 0..self.plus.len() {
            let support = self.plus[w] | self.minus[w];
            out.plus[w] = self.plus[w] | (other.plus[w] & !support);
            out.minus[w] = self.minus[w] | (other.minus[w] & !support);
        }
        Ok(out)
    }

    /// Entrywise sign flip.
    pub fn negate(&self) -> SignVector {
        SignVector { n: self.n, plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// The separating set: indices where the two vectors carry strictly
    /// opposite signs.
    pub fn separator(&self, other: &SignVector) -> Result<IndexSet> {
        self.check_len(other)?;
        let words = (0..self.plus.len())
            .map(|w| (self.plus[w] & other.minus[w]) | (self.minus[w] & other.plus[w]))
            .collect();
        Ok(IndexSet { n: self.n, words })
    }

    /// The covector partial order: `X <= Y` iff `X o Y = Y`, equivalently
    /// every nonzero entry of `X` agrees with `Y`.
    pub fn leq(&self, other: &SignVector) -> Result<bool> {
        self.check_len(other)?;
        Ok((0..self.plus.len()).all(|w| {
            self.plus[w] & !other.plus[w] == 0 && self.minus[w] & !other.minus[w] == 0
        }))
    }

    /// Restriction to the listed coordinates, in the order given.
    pub fn restrict(&self, coords: &[usize]) -> SignVector {
        let signs: Vec<Sign> = coords.iter().map(|&e| self.sign(e)).collect();
        SignVector::from_signs(&signs)
    }
}

/// Canonical total order: entrywise with `- < 0 < +`. This is the order used
/// for sorted covector lists, witness tie-breaking, and serialized output.
impl Ord for SignVector {
    fn cmp(&self, other: &SignVector) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for e in 0..self.n {
                match self.sign(e).rank().cmp(&other.sign(e).rank()) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &SignVector) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignVector> {
        let signs = s.chars().map(Sign::from_char).collect::<Result<Vec<_>>>()?;
        Ok(SignVector::from_signs(&signs))
    }
}

/// Shorthand used pervasively in tests: parse a sign vector, panicking on
/// malformed input.
pub fn sv(s: &str) -> SignVector {
    s.parse().expect("valid sign string")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_examples() {
        assert_eq!(sv("0-").compose(&sv("++")).unwrap(), sv("+-"));
        assert_eq!(sv("--").compose(&sv("0+")).unwrap(), sv("--"));
        let x = sv("+0-");
        assert_eq!(x.compose(&x).unwrap(), x);
    }

    #[test]
    fn compose_length_mismatch() {
        assert!(matches!(
            sv("+").compose(&sv("++")),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(sv("+0-").negate(), sv("-0+"));
        assert_eq!(sv("+0-").negate().negate(), sv("+0-"));
        assert_eq!(sv("00").negate(), sv("00"));
    }

    #[test]
    fn separator_examples() {
        let sep = sv("--").separator(&sv("++")).unwrap();
        assert_eq!(sep.iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(sv("+0-").separator(&sv("+0-")).unwrap().is_empty());
        assert!(sv("0-").separator(&sv("+-")).unwrap().is_empty());
    }

    #[test]
    fn leq_examples() {
        assert!(sv("0-").leq(&sv("+-")).unwrap());
        assert!(sv("+-").leq(&sv("+-")).unwrap());
        assert!(!sv("+-").leq(&sv("0-")).unwrap());
    }

    #[test]
    fn parse_round_trip_and_rejects() {
        assert_eq!(sv("+0-").to_string(), "+0-");
        assert!(matches!("+x-".parse::<SignVector>(), Err(Error::InvalidSignChar('x'))));
        assert!(matches!("+ -".parse::<SignVector>(), Err(Error::InvalidSignChar(' '))));
    }

    #[test]
    fn canonical_order_is_entrywise() {
        let mut v = vec![sv("++"), sv("--"), sv("+0"), sv("0-"), sv("+-")];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, vec!["--", "0-", "+-", "+0", "++"]);
    }

    #[test]
    fn support_and_zeros_partition() {
        let x = sv("+0-0+");
        assert_eq!(x.support().iter().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(x.zeros().iter().collect::<Vec<_>>(), vec![1, 3]);
        assert!(x.support().is_disjoint(&x.zeros()));
    }

    #[test]
    fn separator_with_negation_is_support() {
        let x = sv("+0-+0");
        let sep = x.separator(&x.negate()).unwrap();
        assert_eq!(sep, x.support());
    }

    #[test]
    fn wide_vectors_cross_word_boundary() {
        let s: String = std::iter::repeat("+0-").take(50).collect();
        let x = sv(&s);
        assert_eq!(x.len(), 150);
        assert_eq!(x.to_string(), s);
        assert_eq!(x.negate().negate(), x);
        assert_eq!(x.support().len(), 100);
        assert!(x.compose(&x.negate()).unwrap().eq(&x));
    }
}
