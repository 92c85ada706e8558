//! Words over a finite alphabet, bimonomials and monomial orderings.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Variable names with optional non-negative weights (all 1 by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let weights = vec![1; names.len()];
        Self::with_weights(names, weights)
    }

    pub fn with_weights<S: AsRef<str>>(names: &[S], weights: Vec<u32>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("no variables".into()));
        }
        if names.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet("too many variables".into()));
        }
        if weights.len() != names.len() {
            return Err(Error::InvalidAlphabet(format!("{} weights for {} variables", weights.len(), names.len())));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidAlphabet(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Alphabet { names, weights })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.names[letter as usize]
    }

    /// All words of exactly `len` letters, in lexicographic order of indices.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::one()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * self.len());
            for w in &out {
                for l in 0..self.len() as u8 {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}

/// A word of the free monoid, stored as letter indices. The empty word is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(SmallVec<[u8; 16]>);

impl std::borrow::Borrow<[u8]> for Word {
    fn borrow(&self) -> &[u8] {
        &self.0
    }
}

impl Word {
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: u8) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left * self * right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut v: SmallVec<[u8; 16]> = SmallVec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters(&self.0[start..end])
    }

    /// Start positions of all occurrences of `sub` in `self`, left to right.
    pub fn occurrences<'a>(&'a self, sub: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = self.len();
        let k = sub.len();
        let upper = if k <= n { n - k + 1 } else { 0 };
        (0..upper).filter(move |&i| self.0[i..i + k] == sub.0[..])
    }

    pub fn first_occurrence(&self, sub: &Word) -> Option<usize> {
        self.occurrences(sub).next()
    }

    pub fn contains(&self, sub: &Word) -> bool {
        self.first_occurrence(sub).is_some()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().map(|&l| weights[l as usize] as u64).sum()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0.as_slice())
    }
}

/// `left (x) right`, acting on words and polynomials by `t -> left*t*right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Bimonomial {
    pub left: Word,
    pub right: Word,
}

impl Bimonomial {
    pub fn new(left: Word, right: Word) -> Self {
        Bimonomial { left, right }
    }

    pub fn identity() -> Self {
        Bimonomial::default()
    }

    pub fn is_identity(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.sandwich(&self.left, &self.right)
    }

    /// `self` followed by `outer`: `outer . self`.
    pub fn then(&self, outer: &Bimonomial) -> Bimonomial {
        Bimonomial { left: outer.left.concat(&self.left), right: self.right.concat(&outer.right) }
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Length first, then left-to-right comparison by variable rank.
    DegLeftLex,
    /// Length first, then right-to-left comparison by variable rank.
    DegRightLex,
    /// Weighted degree, then length, then left-to-right comparison.
    WeightedDegLeftLex,
}

/// Sort key of a word under a [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey(u64, u64, SmallVec<[u8; 16]>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// rank[letter]; a larger rank is a larger variable.
    rank: Vec<u8>,
    weights: Vec<u32>,
}

impl MonomialOrder {
    /// `ranking` lists letters from largest to smallest variable.
    pub fn new(kind: OrderKind, alphabet: &Alphabet, ranking: &[u8]) -> Result<Self> {
        let n = alphabet.len();
        if ranking.len() != n {
            return Err(Error::InvalidOrdering(format!("ranking has {} entries for {} variables", ranking.len(), n)));
        }
        let mut rank = vec![u8::MAX; n];
        for (pos, &l) in ranking.iter().enumerate() {
            let l = l as usize;
            if l >= n || rank[l] != u8::MAX {
                return Err(Error::InvalidOrdering("ranking is not a permutation".into()));
            }
            rank[l] = (n - 1 - pos) as u8;
        }
        Ok(MonomialOrder { kind, rank, weights: alphabet.weights().to_vec() })
    }

    /// Ranking in declaration order: the first variable is the largest.
    pub fn declaration(kind: OrderKind, alphabet: &Alphabet) -> Self {
        let ranking: Vec<u8> = (0..alphabet.len() as u8).collect();
        Self::new(kind, alphabet, &ranking).expect("identity ranking")
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn is_length_compatible(&self) -> bool {
        !matches!(self.kind, OrderKind::WeightedDegLeftLex) || self.weights.iter().all(|&w| w == 1)
    }

    fn left_lex(&self, u: &[u8], v: &[u8]) -> Ordering {
        for (a, b) in u.iter().zip(v) {
            if a != b {
                return self.rank[*a as usize].cmp(&self.rank[*b as usize]);
            }
        }
        Ordering::Equal
    }

    fn right_lex(&self, u: &[u8], v: &[u8]) -> Ordering {
        for (a, b) in u.iter().rev().zip(v.iter().rev()) {
            if a != b {
                return self.rank[*a as usize].cmp(&self.rank[*b as usize]);
            }
        }
        Ordering::Equal
    }

    /// A key whose natural ordering agrees with `cmp`.
    pub fn key(&self, w: &Word) -> OrderKey {
        let ranks = w.letters().iter().map(|&l| self.rank[l as usize]);
        match self.kind {
            OrderKind::DegLeftLex => OrderKey(0, w.len() as u64, ranks.collect()),
            OrderKind::DegRightLex => OrderKey(0, w.len() as u64, ranks.rev().collect()),
            OrderKind::WeightedDegLeftLex => {
                OrderKey(w.weighted_degree(&self.weights), w.len() as u64, ranks.collect())
            }
        }
    }

    pub fn cmp(&self, u: &Word, v: &Word) -> Ordering {
        let (a, b) = (u.letters(), v.letters());
        match self.kind {
            OrderKind::DegLeftLex => a.len().cmp(&b.len()).then_with(|| self.left_lex(a, b)),
            OrderKind::DegRightLex => a.len().cmp(&b.len()).then_with(|| self.right_lex(a, b)),
            OrderKind::WeightedDegLeftLex => u
                .weighted_degree(&self.weights)
                .cmp(&v.weighted_degree(&self.weights))
                .then_with(|| a.len().cmp(&b.len()))
                .then_with(|| self.left_lex(a, b)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &[u8]) -> Word {
        Word::from_letters(s)
    }

    fn xy() -> Alphabet {
        Alphabet::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn compare_examples() {
        let a = xy();
        let dl = MonomialOrder::declaration(OrderKind::DegLeftLex, &a);
        let dr = MonomialOrder::declaration(OrderKind::DegRightLex, &a);
        // x > y
        assert_eq!(dl.cmp(&w(&[0]), &w(&[1])), Ordering::Greater);
        // xy vs yx
        assert_eq!(dl.cmp(&w(&[0, 1]), &w(&[1, 0])), Ordering::Greater);
        assert_eq!(dr.cmp(&w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
        // weighted: x weight 1, q weight 0
        let aq = Alphabet::with_weights(&["x", "q"], vec![1, 0]).unwrap();
        let wo = MonomialOrder::declaration(OrderKind::WeightedDegLeftLex, &aq);
        assert_eq!(wo.cmp(&w(&[0]), &w(&[1, 1])), Ordering::Greater);
        assert_eq!(wo.cmp(&w(&[1, 0]), &w(&[0, 1])), Ordering::Less);
        assert!(!wo.is_length_compatible());
    }

    #[test]
    fn ranking_must_be_permutation() {
        let a = xy();
        assert!(MonomialOrder::new(OrderKind::DegLeftLex, &a, &[0, 0]).is_err());
        assert!(MonomialOrder::new(OrderKind::DegLeftLex, &a, &[0]).is_err());
        let o = MonomialOrder::new(OrderKind::DegLeftLex, &a, &[1, 0]).unwrap();
        assert_eq!(o.cmp(&w(&[1]), &w(&[0])), Ordering::Greater);
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new::<&str>(&[]).is_err());
        assert!(Alphabet::new(&["x", "x"]).is_err());
        assert!(Alphabet::with_weights(&["x"], vec![1, 2]).is_err());
    }

    #[test]
    fn occurrences_scan() {
        let v = w(&[0, 1, 1]);
        assert_eq!(v.occurrences(&w(&[1])).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(w(&[0, 1, 0]).occurrences(&w(&[0, 0])).count(), 0);
        assert_eq!(v.occurrences(&Word::one()).count(), 4);
    }

    /// Number of words strictly below `v` in a degree order: all shorter
    /// words plus the words of the same length ranked below `v`.
    #[test]
    fn finitely_many_words_below() {
        let a = Alphabet::new(&["x", "y", "z"]).unwrap();
        for kind in [OrderKind::DegLeftLex, OrderKind::DegRightLex] {
            let o = MonomialOrder::declaration(kind, &a);
            let v = w(&[1, 2, 0]);
            let mut below = 0usize;
            for len in 0..=v.len() {
                below += a.words_of_length(len).iter().filter(|u| o.cmp(u, &v) == Ordering::Less).count();
            }
            let same_len_below = a.words_of_length(3).iter().filter(|u| o.cmp(u, &v) == Ordering::Less).count();
            assert_eq!(below, 1 + 3 + 9 + same_len_below);
        }
    }

    fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..3, 0..=max_len).prop_map(|v| Word::from_letters(&v))
    }

    fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
        (0usize..3, Just(())).prop_map(|(k, _)| {
            let a = Alphabet::with_weights(&["x", "y", "z"], vec![1, 2, 0]).unwrap();
            let kind = [OrderKind::DegLeftLex, OrderKind::DegRightLex, OrderKind::WeightedDegLeftLex][k];
            MonomialOrder::new(kind, &a, &[1, 0, 2]).unwrap()
        })
    }

    proptest! {
        #[test]
        fn totality(o in order_strategy(), u in word_strategy(5), v in word_strategy(5)) {
            let c = o.cmp(&u, &v);
            prop_assert_eq!(c == Ordering::Equal, u == v);
            prop_assert_eq!(o.cmp(&v, &u), c.reverse());
            prop_assert_eq!(o.key(&u).cmp(&o.key(&v)), c);
        }

        #[test]
        fn length_compatible(u in word_strategy(5), v in word_strategy(5)) {
            let a = Alphabet::new(&["x", "y", "z"]).unwrap();
            for kind in [OrderKind::DegLeftLex, OrderKind::DegRightLex] {
                let o = MonomialOrder::declaration(kind, &a);
                if o.cmp(&u, &v) == Ordering::Less {
                    prop_assert!(u.len() <= v.len());
                }
            }
        }

        #[test]
        fn multiplicative(o in order_strategy(), u in word_strategy(4), v in word_strategy(4),
                          l in word_strategy(3), r in word_strategy(3)) {
            let c = o.cmp(&u, &v);
            prop_assert_eq!(o.cmp(&u.sandwich(&l, &r), &v.sandwich(&l, &r)), c);
        }
    }
}
