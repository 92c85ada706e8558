use std::collections::BTreeSet;

use super::buchberger::{pair_poly, second_type_taus};
use super::reduce::{normal_form_with, Reducers};
use super::CompletenessFlag;
use crate::coeff::{CoeffRing, EuclideanCoeffs};
use crate::overlap::{overlaps, Connection, PairKind};
use crate::poly::{FreeAlgebra, Poly, Polynomial};
use crate::word::Word;

/// Drop every element whose leading term is divisible by the leading term
/// of another (the earlier one wins on equal leading terms).
pub fn interreduce<R: CoeffRing>(alg: &FreeAlgebra<R>, basis: Vec<Poly<R>>) -> Vec<Poly<R>> {
    let ring = alg.ring();
    let basis: Vec<Poly<R>> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    let lts: Vec<(R::Elem, Word)> = basis.iter().map(|g| g.leading().unwrap()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            let (ci, wi) = &lts[i];
            !(0..basis.len()).any(|j| {
                if i == j {
                    return false;
                }
                let (cj, wj) = &lts[j];
                let divides = wi.contains(wj) && ring.divides(cj, ci);
                let mutual = wj.contains(wi) && ring.divides(ci, cj);
                divides && (!mutual || j < i)
            })
        })
        .collect();
    basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

/// Reduce the tail of every element against the others.
pub fn tail_reduce_all<R: CoeffRing>(alg: &FreeAlgebra<R>, basis: Vec<Poly<R>>) -> Vec<Poly<R>> {
    let mut out = basis.clone();
    for i in 0..out.len() {
        let others = Reducers::from_polys(out.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g));
        let g = &out[i];
        let (c, w) = g.leading().unwrap();
        let tail = normal_form_with(alg, &g.tail(), &others, true, None);
        out[i] = alg.add(&alg.monomial(c, w), &tail);
    }
    out
}

/// Ascending leading word, then text.
pub fn sort_basis<R: CoeffRing>(alg: &FreeAlgebra<R>, basis: &mut [Poly<R>]) {
    basis.sort_by(|f, g| match (f.lm(), g.lm()) {
        (Some(a), Some(b)) => alg.cmp_words(a, b).then_with(|| alg.render(f).cmp(&alg.render(g))),
        _ => f.is_zero().cmp(&g.is_zero()),
    });
}

/// Heuristic flag: the bound reaches `3*d - 1` where `d` is the longest
/// leading word of the output.
pub fn completeness_flag<E: Clone>(basis: &[Polynomial<E>], bound: usize) -> CompletenessFlag {
    let d = basis.iter().filter_map(|g| g.lm().map(|w| w.len())).max().unwrap_or(0);
    if (3 * d).saturating_sub(1) <= bound {
        CompletenessFlag::ConjecturallyComplete
    } else {
        CompletenessFlag::Truncated
    }
}

/// Leading terms with the coefficient replaced by its canonical associate.
pub fn leading_terms<R: CoeffRing>(alg: &FreeAlgebra<R>, basis: &[Poly<R>]) -> Vec<(R::Elem, Word)> {
    let ring = alg.ring();
    basis.iter().filter_map(|g| g.leading().ok()).map(|(c, w)| (ring.mul(&ring.normal_unit(&c), &c), w)).collect()
}

/// Leading terms not divisible by another leading term, restricted to
/// words of length at most `bound`, sorted.
pub fn minimal_leading_terms<R: CoeffRing>(
    alg: &FreeAlgebra<R>,
    basis: &[Poly<R>],
    bound: usize,
) -> Vec<(R::Elem, Word)> {
    let ring = alg.ring();
    let lts: Vec<(R::Elem, Word)> = leading_terms(alg, basis).into_iter().filter(|(_, w)| w.len() <= bound).collect();
    let mut out: Vec<(R::Elem, Word)> = Vec::new();
    for (i, (c, w)) in lts.iter().enumerate() {
        let redundant = lts.iter().enumerate().any(|(j, (c2, w2))| {
            if i == j || !(w.contains(w2) && ring.divides(c2, c)) {
                return false;
            }
            let mutual = w2.contains(w) && ring.divides(c, c2);
            !mutual || j < i
        });
        if !redundant {
            out.push((c.clone(), w.clone()));
        }
    }
    out.sort_by(|a, b| alg.cmp_words(&a.1, &b.1).then_with(|| format!("{:?}", a.0).cmp(&format!("{:?}", b.0))));
    out
}

/// Do `g1` and `g2` describe the same ideal up to the bound? Every element
/// of each reduces to zero by the other and the minimal leading terms agree.
pub fn gb_equivalent<R: CoeffRing>(alg: &FreeAlgebra<R>, g1: &[Poly<R>], g2: &[Poly<R>], bound: usize) -> bool {
    let r1 = Reducers::from_polys(g1);
    let r2 = Reducers::from_polys(g2);
    let zero_by =
        |gs: &[Poly<R>], r: &Reducers<R::Elem>| gs.iter().all(|g| normal_form_with(alg, g, r, false, None).is_zero());
    zero_by(g1, &r2)
        && zero_by(g2, &r1)
        && minimal_leading_terms(alg, g1, bound) == minimal_leading_terms(alg, g2, bound)
}

/// Words of length at most `d` containing no leading word of `basis`,
/// ascending in the ordering.
pub fn monomial_basis<R: CoeffRing>(alg: &FreeAlgebra<R>, basis: &[Poly<R>], d: usize) -> Vec<Word> {
    let lms: BTreeSet<Word> = basis.iter().filter_map(|g| g.lm().cloned()).collect();
    if lms.contains(&Word::one()) {
        return Vec::new();
    }
    let n = alg.alphabet().len() as u8;
    let mut out = vec![Word::one()];
    let mut layer = vec![Word::one()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..n {
                let mut w2 = w.clone();
                w2.push(l);
                let len = w2.len();
                if !(0..len).any(|s| lms.contains(&w2.slice(s, len))) {
                    next.push(w2);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort_by(|a, b| alg.cmp_words(a, b));
    out
}

/// A critical pair of a basis whose polynomial does not reduce to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<E> {
    pub kind: PairKind,
    pub pair: (usize, usize),
    pub connection: Connection,
    pub remainder: Polynomial<E>,
}

/// Computes every first- and second-type S- and G-polynomial of `basis`
/// whose common multiple has length at most `bound` and returns those with
/// a nonzero normal form. No criterion is applied.
pub fn verify_basis<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    basis: &[Poly<R>],
    bound: usize,
) -> Vec<Violation<R::Elem>> {
    let basis: Vec<Poly<R>> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let reducers = Reducers::from_polys(&basis);
    let field = alg.ring().is_field();
    let mut out = Vec::new();
    let mut check = |kind: PairKind, pair: (usize, usize), connection: Connection, p: Poly<R>| {
        let r = normal_form_with(alg, &p, &reducers, false, None);
        if !r.is_zero() {
            out.push(Violation { kind, pair, connection, remainder: r });
        }
    };
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            let (u, v) = (f.lm().unwrap(), g.lm().unwrap());
            for o in overlaps(u, v) {
                if o.t.len() > bound {
                    continue;
                }
                let kinds: &[PairKind] = if field { &[PairKind::S1] } else { &[PairKind::S1, PairKind::G1] };
                for &kind in kinds {
                    let p = pair_poly(alg, kind, f, &o.tau_u, g, &o.tau_v);
                    check(kind, (i, j), Connection::Overlap(o.clone()), p);
                }
            }
        }
    }
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            let (u, v) = (f.lm().unwrap(), g.lm().unwrap());
            if u.is_empty() || v.is_empty() || u.len() + v.len() > bound {
                continue;
            }
            for gap in 0..=(bound - u.len() - v.len()) {
                for w in alg.alphabet().words_of_length(gap) {
                    let (tf, tg) = second_type_taus(u, &w, v);
                    let kinds: &[PairKind] = if field { &[PairKind::S2] } else { &[PairKind::S2, PairKind::G2] };
                    for &kind in kinds {
                        let p = pair_poly(alg, kind, f, &tf, g, &tg);
                        check(kind, (i, j), Connection::Word(w.clone()), p);
                    }
                }
            }
        }
    }
    out
}
