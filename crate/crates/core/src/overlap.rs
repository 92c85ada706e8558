//! Word divisibility, minimal overlaps of two leading words, and the S- and
//! G-polynomials built from them.

use crate::coeff::EuclideanCoeffs;
use crate::error::{Error, Result};
use crate::poly::{FreeAlgebra, Poly, Polynomial};
use crate::word::{Bimonomial, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapCase {
    /// A suffix of `u` is a prefix of `v`.
    LeftRight,
    /// A suffix of `v` is a prefix of `u`.
    RightLeft,
    UDividesV,
    VDividesU,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub t: Word,
    pub tau_u: Bimonomial,
    pub tau_v: Bimonomial,
    pub case: OverlapCase,
}

impl Overlap {
    /// Start of `u` inside `t`.
    pub fn pos_u(&self) -> usize {
        self.tau_u.left.len()
    }

    /// Start of `v` inside `t`.
    pub fn pos_v(&self) -> usize {
        self.tau_v.left.len()
    }
}

/// All `(l, r)` with `l*u*r = v`, left to right.
pub fn divides_word(u: &Word, v: &Word) -> Vec<Bimonomial> {
    v.occurrences(u).map(|p| Bimonomial::new(v.slice(0, p), v.slice(p + u.len(), v.len()))).collect()
}

/// Placement of `v` starting at offset `k` relative to `u`, if the letters
/// agree on the intersection. Intervals are assumed to intersect.
pub(crate) fn placement(u: &Word, v: &Word, k: isize) -> Option<Overlap> {
    let (lu, lv) = (u.len() as isize, v.len() as isize);
    let lo = k.max(0);
    let hi = lu.min(k + lv);
    for x in lo..hi {
        if u.letters()[x as usize] != v.letters()[(x - k) as usize] {
            return None;
        }
    }
    let start = k.min(0);
    let end = lu.max(k + lv);
    let mut t = Word::one();
    for x in start..end {
        let l = if x >= 0 && x < lu { u.letters()[x as usize] } else { v.letters()[(x - k) as usize] };
        t.push(l);
    }
    let at = |p: isize, len: isize| {
        let p = (p - start) as usize;
        Bimonomial::new(t.slice(0, p), t.slice(p + len as usize, t.len()))
    };
    let tau_u = at(0, lu);
    let tau_v = at(k, lv);
    let case = if k >= 0 && k + lv <= lu {
        OverlapCase::VDividesU
    } else if k <= 0 && k + lv >= lu {
        OverlapCase::UDividesV
    } else if k > 0 {
        OverlapCase::LeftRight
    } else {
        OverlapCase::RightLeft
    };
    Some(Overlap { t, tau_u, tau_v, case })
}

/// Minimal nontrivial overlaps of `u` and `v`, ordered by `|t|`, then case,
/// then position. For `u = v` the identity embedding is left out and each
/// self-overlap is reported once. An empty word overlaps the other word
/// exactly once, at its left end.
pub fn overlaps(u: &Word, v: &Word) -> Vec<Overlap> {
    if u.is_empty() || v.is_empty() {
        if u.is_empty() && v.is_empty() {
            return Vec::new();
        }
        return if u.is_empty() {
            vec![Overlap {
                t: v.clone(),
                tau_u: Bimonomial::new(v.clone(), Word::one()),
                tau_v: Bimonomial::identity(),
                case: OverlapCase::UDividesV,
            }]
        } else {
            vec![Overlap {
                t: u.clone(),
                tau_u: Bimonomial::identity(),
                tau_v: Bimonomial::new(u.clone(), Word::one()),
                case: OverlapCase::VDividesU,
            }]
        };
    }
    let same = u == v;
    let (lu, lv) = (u.len() as isize, v.len() as isize);
    let lowest = if same { 1 } else { 1 - lv };
    let candidates: Vec<Overlap> = (lowest..lu).filter_map(|k| placement(u, v, k)).collect();
    let mut out: Vec<Overlap> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|o| o.t.len() < c.t.len() && c.t.contains(&o.t)))
        .cloned()
        .collect();
    out.sort_by_key(|a| (a.t.len(), a.case, a.pos_u(), a.pos_v()));
    out
}

/// Is `v` placed at offset `k` relative to `u` one of the minimal overlaps?
pub fn is_minimal_overlap(u: &Word, v: &Word, k: isize) -> bool {
    overlaps(u, v).iter().any(|o| o.pos_v() as isize - o.pos_u() as isize == k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    S1,
    G1,
    S2,
    G2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Connection {
    Overlap(Overlap),
    /// The connecting word of a second-type pair.
    Word(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub pair: Option<(usize, usize)>,
    pub kind: u8,
    pub connection: Connection,
}

/// `a_f*c_f = a_g*c_g = lcm` and `b_f*c_f + b_g*c_g = gcd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactors<E> {
    pub a_f: E,
    pub a_g: E,
    pub b_f: E,
    pub b_g: E,
    pub gcd: E,
}

impl<E: Clone> Cofactors<E> {
    pub fn new<R: EuclideanCoeffs<Elem = E>>(ring: &R, c_f: &E, c_g: &E) -> Self {
        let (a_f, a_g) = ring.lcm_cofactors(c_f, c_g);
        let (gcd, b_f, b_g) = ring.bezout(c_f, c_g);
        Cofactors { a_f, a_g, b_f, b_g, gcd }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SGResult<E> {
    pub spoly: Polynomial<E>,
    pub gpoly: Option<Polynomial<E>>,
    pub cofactors: Cofactors<E>,
    pub provenance: Provenance,
}

/// `x*tau_f.f + y*tau_g.g`.
pub fn combine<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    x: &R::Elem,
    tau_f: &Bimonomial,
    f: &Poly<R>,
    y: &R::Elem,
    tau_g: &Bimonomial,
    g: &Poly<R>,
) -> Poly<R> {
    let p = alg.scale_apply(x, tau_f, f);
    alg.add_scaled_sandwich(&p, y, tau_g, g)
}

fn needs_gpoly<R: EuclideanCoeffs>(ring: &R, c_f: &R::Elem, c_g: &R::Elem) -> bool {
    !ring.is_field() && !ring.divides(c_f, c_g) && !ring.divides(c_g, c_f)
}

fn build<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    f: &Poly<R>,
    tau_f: &Bimonomial,
    g: &Poly<R>,
    tau_g: &Bimonomial,
    kind: u8,
    connection: Connection,
) -> Result<SGResult<R::Elem>> {
    let ring = alg.ring();
    let (c_f, _) = f.leading()?;
    let (c_g, _) = g.leading()?;
    let cof = Cofactors::new(ring, &c_f, &c_g);
    let spoly = combine(alg, &cof.a_f, tau_f, f, &ring.neg(&cof.a_g), tau_g, g);
    let gpoly = needs_gpoly(ring, &c_f, &c_g).then(|| combine(alg, &cof.b_f, tau_f, f, &cof.b_g, tau_g, g));
    Ok(SGResult { spoly, gpoly, cofactors: cof, provenance: Provenance { pair: None, kind, connection } })
}

/// First-type S- and G-polynomial of `f` and `g` at the overlap `o` of their
/// leading words.
pub fn spoly1<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    f: &Poly<R>,
    g: &Poly<R>,
    o: &Overlap,
) -> Result<SGResult<R::Elem>> {
    let (_, u) = f.leading()?;
    let (_, v) = g.leading()?;
    if o.tau_u.apply(&u) != o.t || o.tau_v.apply(&v) != o.t {
        return Err(Error::InconsistentOverlap);
    }
    build(alg, f, &o.tau_u, g, &o.tau_v, 1, Connection::Overlap(o.clone()))
}

/// Second-type S- and G-polynomial: `f*w*LM(g)` against `LM(f)*w*g`.
pub fn spoly2<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    f: &Poly<R>,
    g: &Poly<R>,
    w: &Word,
) -> Result<SGResult<R::Elem>> {
    let (_, u) = f.leading()?;
    let (_, v) = g.leading()?;
    let tau_f = Bimonomial::new(Word::one(), w.concat(&v));
    let tau_g = Bimonomial::new(u.concat(w), Word::one());
    build(alg, f, &tau_f, g, &tau_g, 2, Connection::Word(w.clone()))
}
