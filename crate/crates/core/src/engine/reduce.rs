use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use smallvec::SmallVec;

use crate::coeff::CoeffRing;
use crate::poly::{FreeAlgebra, Poly, Polynomial};
use crate::word::{Bimonomial, OrderKey, Word};

/// One lm-reduction `h -> h - a*tau.g` where `g` is reducer number `index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep<E> {
    pub index: usize,
    pub tau: Bimonomial,
    pub a: E,
}

/// Basis polynomials with stable indices and a hash index on leading words.
#[derive(Clone, Debug)]
pub struct Reducers<E> {
    polys: Vec<Option<Polynomial<E>>>,
    by_lm: HashMap<Word, Vec<usize>>,
    trie: Trie,
    max_lm_len: usize,
    alive: usize,
}

impl<E: Clone> Default for Reducers<E> {
    fn default() -> Self {
        Reducers { polys: Vec::new(), by_lm: HashMap::new(), trie: Trie::default(), max_lm_len: 0, alive: 0 }
    }
}

impl<E: Clone> Reducers<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_polys<'a>(polys: impl IntoIterator<Item = &'a Polynomial<E>>) -> Self
    where
        E: 'a,
    {
        let mut r = Self::new();
        for p in polys {
            if !p.is_zero() {
                r.push(p.clone());
            }
        }
        r
    }

    pub fn push(&mut self, p: Polynomial<E>) -> usize {
        let idx = self.polys.len();
        let lm = p.lm().expect("nonzero reducer").clone();
        self.max_lm_len = self.max_lm_len.max(lm.len());
        self.trie.insert(lm.letters(), idx);
        self.by_lm.entry(lm).or_default().push(idx);
        self.polys.push(Some(p));
        self.alive += 1;
        idx
    }

    pub fn remove(&mut self, idx: usize) -> Option<Polynomial<E>> {
        let p = self.polys.get_mut(idx)?.take()?;
        let lm = p.lm().unwrap();
        self.trie.remove(lm.letters(), idx);
        if let Some(v) = self.by_lm.get_mut(lm) {
            v.retain(|&i| i != idx);
            if v.is_empty() {
                self.by_lm.remove(lm);
            }
        }
        self.alive -= 1;
        Some(p)
    }

    pub fn get(&self, idx: usize) -> Option<&Polynomial<E>> {
        self.polys.get(idx).and_then(|p| p.as_ref())
    }

    pub fn is_alive(&self, idx: usize) -> bool {
        self.get(idx).is_some()
    }

    pub fn len_alive(&self) -> usize {
        self.alive
    }

    /// Number of indices ever handed out.
    pub fn capacity(&self) -> usize {
        self.polys.len()
    }

    pub fn max_lm_len(&self) -> usize {
        self.max_lm_len
    }

    pub fn alive(&self) -> impl Iterator<Item = (usize, &Polynomial<E>)> {
        self.polys.iter().enumerate().filter_map(|(i, p)| p.as_ref().map(|p| (i, p)))
    }

    pub fn into_alive(self) -> Vec<Polynomial<E>> {
        self.polys.into_iter().flatten().collect()
    }

    /// Indices of reducers whose leading word is exactly `w`.
    pub fn with_lm(&self, w: &Word) -> &[usize] {
        self.by_lm.get(w).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// `(index, position)` of every reducer whose leading word occurs in `w`,
    /// sorted by index and then position.
    pub fn divisors_of(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out = self.divisors_small(w).into_vec();
        out.sort_unstable();
        out
    }

    fn divisors_small(&self, w: &Word) -> SmallVec<[(usize, usize); 8]> {
        let letters = w.letters();
        let mut out = SmallVec::new();
        for s in 0..=letters.len() {
            self.trie.matches(&letters[s..], |i| out.push((i, s)));
        }
        out
    }
}

/// Prefix tree over leading words; `ends[n]` lists the reducers whose
/// leading word spells the path to node `n`.
#[derive(Clone, Debug)]
struct Trie {
    children: Vec<Vec<(u8, usize)>>,
    ends: Vec<Vec<usize>>,
}

impl Default for Trie {
    fn default() -> Self {
        Trie { children: vec![Vec::new()], ends: vec![Vec::new()] }
    }
}

impl Trie {
    fn child(&self, node: usize, l: u8) -> Option<usize> {
        self.children[node].iter().find(|(c, _)| *c == l).map(|&(_, n)| n)
    }

    fn insert(&mut self, word: &[u8], idx: usize) {
        let mut node = 0;
        for &l in word {
            node = match self.child(node, l) {
                Some(n) => n,
                None => {
                    let n = self.children.len();
                    self.children.push(Vec::new());
                    self.ends.push(Vec::new());
                    self.children[node].push((l, n));
                    n
                }
            };
        }
        self.ends[node].push(idx);
    }

    fn remove(&mut self, word: &[u8], idx: usize) {
        let mut node = 0;
        for &l in word {
            match self.child(node, l) {
                Some(n) => node = n,
                None => return,
            }
        }
        self.ends[node].retain(|&i| i != idx);
    }

    /// Calls `f` for every reducer whose leading word is a prefix of `word`.
    fn matches(&self, word: &[u8], mut f: impl FnMut(usize)) {
        let mut node = 0;
        self.ends[node].iter().for_each(|&i| f(i));
        for &l in word {
            match self.child(node, l) {
                Some(n) => node = n,
                None => return,
            }
            self.ends[node].iter().for_each(|&i| f(i));
        }
    }
}

/// First reducer (in index order, leftmost occurrence) that lm-reduces the
/// term `c*w`.
pub fn find_reducer<R: CoeffRing>(
    ring: &R,
    reducers: &Reducers<R::Elem>,
    c: &R::Elem,
    w: &Word,
) -> Option<ReductionStep<R::Elem>> {
    let mut candidates = reducers.divisors_small(w);
    candidates.sort_unstable();
    for (idx, pos) in candidates {
        let g = reducers.get(idx).unwrap();
        let (cg, lm) = g.terms().first().unwrap();
        if let Some((a, _)) = ring.reduce_quotient(c, cg) {
            let tau = Bimonomial::new(w.slice(0, pos), w.slice(pos + lm.len(), w.len()));
            return Some(ReductionStep { index: idx, tau, a });
        }
    }
    None
}

/// One lm-reduction of `f` by `g`, using the leftmost occurrence of `LM(g)`.
pub fn lm_reduce_step<R: CoeffRing>(alg: &FreeAlgebra<R>, f: &Poly<R>, g: &Poly<R>) -> Option<Poly<R>> {
    let (cf, u) = f.leading().ok()?;
    let (cg, v) = g.leading().ok()?;
    let pos = u.first_occurrence(&v)?;
    let (a, _) = alg.ring().reduce_quotient(&cf, &cg)?;
    let tau = Bimonomial::new(u.slice(0, pos), u.slice(pos + v.len(), u.len()));
    Some(alg.add_scaled_sandwich(f, &alg.ring().neg(&a), &tau, g))
}

/// Normal form against an indexed reducer set, optionally recording the
/// reduction steps taken.
pub fn normal_form_with<R: CoeffRing>(
    alg: &FreeAlgebra<R>,
    f: &Poly<R>,
    reducers: &Reducers<R::Elem>,
    tail_reduce: bool,
    mut trace: Option<&mut Vec<ReductionStep<R::Elem>>>,
) -> Poly<R> {
    let ring = alg.ring();
    let order = alg.order();
    // Pending terms keyed by the ordering; the leading term is the last entry.
    let mut work: BTreeMap<OrderKey, (Word, R::Elem)> =
        f.terms().iter().map(|(c, w)| (order.key(w), (w.clone(), c.clone()))).collect();
    let mut done: Vec<(R::Elem, Word)> = Vec::new();
    while let Some((key, (w, c))) = work.pop_last() {
        match find_reducer(ring, reducers, &c, &w) {
            Some(step) => {
                let g = reducers.get(step.index).unwrap();
                let minus_a = ring.neg(&step.a);
                let mut terms = g.terms().iter();
                let (cg, _) = terms.next().unwrap();
                let rest = ring.add(&c, &ring.mul(&minus_a, cg));
                if !ring.is_zero(&rest) {
                    work.insert(key, (w, rest));
                }
                for (cg, wg) in terms {
                    let d = ring.mul(&minus_a, cg);
                    let wg = step.tau.apply(wg);
                    match work.entry(order.key(&wg)) {
                        Entry::Vacant(e) => {
                            if !ring.is_zero(&d) {
                                e.insert((wg, d));
                            }
                        }
                        Entry::Occupied(mut e) => {
                            let sum = ring.add(&e.get().1, &d);
                            if ring.is_zero(&sum) {
                                e.remove();
                            } else {
                                e.get_mut().1 = sum;
                            }
                        }
                    }
                }
                if let Some(t) = trace.as_deref_mut() {
                    t.push(step);
                }
            }
            None => {
                done.push((c, w));
                if !tail_reduce {
                    break;
                }
            }
        }
    }
    done.extend(work.into_values().rev().map(|(w, c)| (c, w)));
    Polynomial::from_sorted_unchecked(done)
}

/// Normal form of `f` with respect to `g` (reducers tried in list order).
pub fn normal_form<R: CoeffRing>(alg: &FreeAlgebra<R>, f: &Poly<R>, g: &[Poly<R>], tail_reduce: bool) -> Poly<R> {
    normal_form_with(alg, f, &Reducers::from_polys(g), tail_reduce, None)
}
