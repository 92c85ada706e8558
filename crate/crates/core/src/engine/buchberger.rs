use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use super::criteria::{chain_criterion, coeff_criterion, pair_replacement, ChainKind, Placed};
use super::post::{completeness_flag, interreduce, sort_basis, tail_reduce_all};
use super::reduce::{normal_form_with, Reducers};
use super::{DiscardReason, DiscardedPair, GBResult, Options, Stats};
use crate::coeff::EuclideanCoeffs;
use crate::error::{Error, Result};
use crate::overlap::{combine, overlaps, Cofactors, Overlap, PairKind};
use crate::poly::{FreeAlgebra, Poly};
use crate::word::{Bimonomial, Word};

enum Task {
    /// First-type S- or G-pair at a fixed overlap.
    Overlap { i: usize, j: usize, overlap: Overlap, kind: PairKind },
    /// All second-type pairs `(i, j, w)` with `|w| = gap`; re-queued with
    /// `gap + 1` once expanded.
    Family { i: usize, j: usize, gap: usize, s: bool, g: bool },
}

struct Queued {
    weight: usize,
    seq: u64,
    task: Task,
}

impl PartialEq for Queued {
    fn eq(&self, other: &Self) -> bool {
        (self.weight, self.seq) == (other.weight, other.seq)
    }
}

impl Eq for Queued {}

impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Reversed: BinaryHeap is a max-heap and we want the lightest, oldest task.
impl Ord for Queued {
    fn cmp(&self, other: &Self) -> Ordering {
        (other.weight, other.seq).cmp(&(self.weight, self.seq))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Origin {
    Generator,
    Pair,
    /// Removed from the basis because a new leading term divides its own.
    Evicted(Word),
}

struct Completion<'a, R: EuclideanCoeffs> {
    alg: &'a FreeAlgebra<R>,
    bound: usize,
    opts: &'a Options,
    basis: Reducers<R::Elem>,
    queue: BinaryHeap<Queued>,
    seq: u64,
    stats: Stats,
    discarded: Vec<DiscardedPair<R::Elem>>,
    field: bool,
}

/// Strong Gröbner basis of the two-sided ideal generated by `gens`, complete
/// for all critical pairs whose common multiple has length at most `bound`.
pub fn buchberger<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    gens: &[Poly<R>],
    bound: usize,
    opts: &Options,
) -> Result<GBResult<R::Elem>> {
    let needed = gens.iter().map(|g| g.max_len()).max().unwrap_or(0);
    if bound < needed {
        return Err(Error::BoundTooSmall { bound, needed });
    }
    let mut c = Completion {
        alg,
        bound,
        opts,
        basis: Reducers::new(),
        queue: BinaryHeap::new(),
        seq: 0,
        stats: Stats::default(),
        discarded: Vec::new(),
        field: alg.ring().is_field(),
    };
    c.add(gens.iter().filter(|g| !g.is_zero()).map(|g| (g.clone(), Origin::Generator)).collect());
    while let Some(q) = c.queue.pop() {
        c.process(q.task);
    }
    let Completion { basis, stats, discarded, .. } = c;
    let mut basis = basis.into_alive();
    if opts.reduce {
        basis = interreduce(alg, basis);
    }
    if opts.tail_reduce {
        basis = tail_reduce_all(alg, basis);
    }
    let mut basis: Vec<Poly<R>> = basis.iter().map(|g| alg.normalize(g)).collect();
    sort_basis(alg, &mut basis);
    let flag = completeness_flag(&basis, bound);
    Ok(GBResult { basis, bound, flag, stats, discarded, warnings: Vec::new() })
}

fn words_up_to(n: usize, max_gap: usize) -> u64 {
    let mut total: u64 = 0;
    let mut p: u64 = 1;
    for _ in 0..=max_gap {
        total = total.saturating_add(p);
        p = p.saturating_mul(n as u64);
    }
    total
}

impl<R: EuclideanCoeffs> Completion<'_, R> {
    fn push(&mut self, weight: usize, task: Task) {
        self.seq += 1;
        self.queue.push(Queued { weight, seq: self.seq, task });
        self.stats.peak_queue_size = self.stats.peak_queue_size.max(self.queue.len() as u64);
    }

    fn record(&mut self, kind: PairKind, reason: DiscardReason, poly: impl FnOnce() -> Poly<R>) {
        if self.opts.test_mode {
            self.discarded.push(DiscardedPair { kind, reason, poly: poly() });
        }
    }

    fn poly(&self, i: usize) -> Poly<R> {
        self.basis.get(i).expect("live basis element").clone()
    }

    /// Reduce and insert polynomials, keeping leading words unique and the
    /// leading terms minimal.
    fn add(&mut self, items: Vec<(Poly<R>, Origin)>) {
        let alg = self.alg;
        let ring = alg.ring();
        let mut work: VecDeque<(Poly<R>, Origin)> = items.into();
        while let Some((p, origin)) = work.pop_front() {
            let h = normal_form_with(alg, &p, &self.basis, false, None);
            if h.is_zero() {
                if origin == Origin::Pair {
                    self.stats.reductions_to_zero += 1;
                }
                continue;
            }
            let h = alg.normalize(&h);
            let (ch, lm) = h.leading().expect("nonzero");
            if let Some(&gi) = self.basis.with_lm(&lm).first() {
                let g = self.poly(gi);
                if !ring.divides(&ch, g.lc().unwrap()) {
                    let (s, gp) = pair_replacement(alg, &h, &g).expect("equal leading words");
                    self.basis.remove(gi);
                    work.push_back((gp, origin.clone()));
                    work.push_back((s, origin));
                    continue;
                }
            }
            let k = self.basis.push(h);
            let counted = match &origin {
                Origin::Generator => false,
                Origin::Pair => true,
                Origin::Evicted(old) => *old != lm,
            };
            if counted {
                self.stats.basis_insertions += 1;
                *self.stats.insertions_by_length.entry(lm.len()).or_default() += 1;
            }
            let victims: Vec<usize> = self
                .basis
                .alive()
                .filter(|(i, g)| {
                    let (cg, w) = g.terms().first().unwrap();
                    *i != k && w.len() >= lm.len() && w.contains(&lm) && ring.divides(&ch, cg)
                })
                .map(|(i, _)| i)
                .collect();
            for v in victims {
                let g = self.basis.remove(v).unwrap();
                let old = g.lm().unwrap().clone();
                work.push_back((g, Origin::Evicted(old)));
            }
            self.make_pairs(k);
        }
    }

    fn make_pairs(&mut self, k: usize) {
        let f = self.poly(k);
        let u = f.lm().unwrap().clone();
        let others: Vec<usize> = self.basis.alive().map(|(i, _)| i).collect();
        for j in others {
            let g = self.poly(j);
            let v = g.lm().unwrap().clone();
            for o in overlaps(&u, &v) {
                if o.t.len() > self.bound {
                    continue;
                }
                let weight = o.t.len();
                self.stats.pairs_created += 1;
                if self.field {
                    self.push(weight, Task::Overlap { i: k, j, overlap: o, kind: PairKind::S1 });
                    continue;
                }
                self.push(weight, Task::Overlap { i: k, j, overlap: o.clone(), kind: PairKind::S1 });
                self.stats.pairs_created += 1;
                if coeff_criterion(self.alg.ring(), &f, &g) {
                    self.stats.pairs_discarded_coeff += 1;
                    let alg = self.alg;
                    self.record(PairKind::G1, DiscardReason::Coefficient, || {
                        pair_poly(alg, PairKind::G1, &f, &o.tau_u, &g, &o.tau_v)
                    });
                } else {
                    self.push(weight, Task::Overlap { i: k, j, overlap: o, kind: PairKind::G1 });
                }
            }
            if !self.field && !u.is_empty() && !v.is_empty() {
                self.make_family(k, j);
                if j != k {
                    self.make_family(j, k);
                }
            }
        }
    }

    fn make_family(&mut self, a: usize, b: usize) {
        let (fa, fb) = (self.poly(a), self.poly(b));
        let (ca, ua) = fa.leading().unwrap();
        let (cb, ub) = fb.leading().unwrap();
        let base = ua.len() + ub.len();
        if base > self.bound {
            return;
        }
        let ring = self.alg.ring();
        let s = !(self.opts.product_criterion && ring.is_unit(&ring.gcd(&ca, &cb)));
        let g = !coeff_criterion(ring, &fa, &fb);
        let max_gap = self.bound - base;
        let n = self.alg.alphabet().len();
        let total = words_up_to(n, max_gap);
        for (needed, kind) in [(s, PairKind::S2), (g, PairKind::G2)] {
            if needed {
                continue;
            }
            self.stats.pairs_created = self.stats.pairs_created.saturating_add(total);
            let reason = if kind == PairKind::S2 {
                self.stats.pairs_discarded_product = self.stats.pairs_discarded_product.saturating_add(total);
                DiscardReason::Product
            } else {
                self.stats.pairs_discarded_coeff = self.stats.pairs_discarded_coeff.saturating_add(total);
                DiscardReason::Coefficient
            };
            if self.opts.test_mode {
                for gap in 0..=max_gap {
                    for w in self.alg.alphabet().words_of_length(gap) {
                        let (tf, tg) = second_type_taus(&ua, &w, &ub);
                        let alg = self.alg;
                        self.record(kind, reason, || pair_poly(alg, kind, &fa, &tf, &fb, &tg));
                    }
                }
            }
        }
        if s || g {
            self.push(base, Task::Family { i: a, j: b, gap: 0, s, g });
        }
    }

    /// Chain criterion against every live basis element occurring in `t`.
    fn chain_discards(&self, i: usize, j: usize, t: &Word, p: usize, q: usize, kind: ChainKind) -> bool {
        let (fi, fj) = (self.basis.get(i).unwrap(), self.basis.get(j).unwrap());
        let (ci, u) = fi.terms().first().unwrap();
        let (cj, v) = fj.terms().first().unwrap();
        if u.is_empty() || v.is_empty() {
            return false;
        }
        let pi = Placed { lm: u, pos: p };
        let pj = Placed { lm: v, pos: q };
        let ring = self.alg.ring();
        for len in 1..=self.basis.max_lm_len().min(t.len()) {
            for s in 0..=(t.len() - len) {
                let sub = t.slice(s, s + len);
                for &f in self.basis.with_lm(&sub) {
                    if f == i || f == j {
                        continue;
                    }
                    let cf = self.basis.get(f).unwrap().lc().unwrap();
                    if chain_criterion(ring, kind, t, [cf, ci, cj], Placed { lm: &sub, pos: s }, pi, pj) {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn process(&mut self, task: Task) {
        match task {
            Task::Overlap { i, j, overlap, kind } => {
                if !self.basis.is_alive(i) || !self.basis.is_alive(j) {
                    return;
                }
                let (f, g) = (self.poly(i), self.poly(j));
                let ck = if kind == PairKind::S1 { ChainKind::S } else { ChainKind::G };
                if self.opts.chain_criterion
                    && self.chain_discards(i, j, &overlap.t, overlap.pos_u(), overlap.pos_v(), ck)
                {
                    self.stats.pairs_discarded_chain += 1;
                    let alg = self.alg;
                    self.record(kind, DiscardReason::Chain, || {
                        pair_poly(alg, kind, &f, &overlap.tau_u, &g, &overlap.tau_v)
                    });
                    return;
                }
                self.stats.pairs_processed += 1;
                let poly = pair_poly(self.alg, kind, &f, &overlap.tau_u, &g, &overlap.tau_v);
                self.add(vec![(poly, Origin::Pair)]);
            }
            Task::Family { i, j, gap, s, g } => {
                if !self.basis.is_alive(i) || !self.basis.is_alive(j) {
                    return;
                }
                let (fi, fj) = (self.poly(i), self.poly(j));
                let (u, v) = (fi.lm().unwrap().clone(), fj.lm().unwrap().clone());
                let kinds: Vec<PairKind> =
                    [(s, PairKind::S2), (g, PairKind::G2)].into_iter().filter(|(b, _)| *b).map(|(_, k)| k).collect();
                for w in self.alg.alphabet().words_of_length(gap) {
                    let (tf, tg) = second_type_taus(&u, &w, &v);
                    let t = tf.apply(&u);
                    for &kind in &kinds {
                        if !self.basis.is_alive(i) || !self.basis.is_alive(j) {
                            return;
                        }
                        self.stats.pairs_created += 1;
                        let ck = if kind == PairKind::S2 { ChainKind::S } else { ChainKind::G };
                        if self.opts.chain_criterion && self.chain_discards(i, j, &t, 0, u.len() + gap, ck) {
                            self.stats.pairs_discarded_chain += 1;
                            let alg = self.alg;
                            self.record(kind, DiscardReason::Chain, || pair_poly(alg, kind, &fi, &tf, &fj, &tg));
                            continue;
                        }
                        self.stats.pairs_processed += 1;
                        let poly = pair_poly(self.alg, kind, &fi, &tf, &fj, &tg);
                        self.add(vec![(poly, Origin::Pair)]);
                    }
                }
                let next = u.len() + v.len() + gap + 1;
                if next <= self.bound {
                    self.push(next, Task::Family { i, j, gap: gap + 1, s, g });
                }
            }
        }
    }
}

/// `(1 (x) w*v, u*w (x) 1)`: the embeddings of a second-type pair.
pub(crate) fn second_type_taus(u: &Word, w: &Word, v: &Word) -> (Bimonomial, Bimonomial) {
    (Bimonomial::new(Word::one(), w.concat(v)), Bimonomial::new(u.concat(w), Word::one()))
}

/// The S- or G-polynomial of `f` and `g` for the given embeddings.
pub(crate) fn pair_poly<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    kind: PairKind,
    f: &Poly<R>,
    tau_f: &Bimonomial,
    g: &Poly<R>,
    tau_g: &Bimonomial,
) -> Poly<R> {
    let ring = alg.ring();
    let cof = Cofactors::new(ring, f.lc().unwrap(), g.lc().unwrap());
    match kind {
        PairKind::S1 | PairKind::S2 => combine(alg, &cof.a_f, tau_f, f, &ring.neg(&cof.a_g), tau_g, g),
        PairKind::G1 | PairKind::G2 => combine(alg, &cof.b_f, tau_f, f, &cof.b_g, tau_g, g),
    }
}
