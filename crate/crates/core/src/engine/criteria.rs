use crate::coeff::{CoeffRing, EuclideanCoeffs};
use crate::overlap::{combine, is_minimal_overlap, overlaps, Cofactors};
use crate::poly::{FreeAlgebra, Poly};
use crate::word::{Bimonomial, Word};

/// True when the G-pair of `f` and `g` is redundant: one leading
/// coefficient divides the other. Always true over a field.
pub fn coeff_criterion<R: CoeffRing>(ring: &R, f: &Poly<R>, g: &Poly<R>) -> bool {
    if ring.is_field() {
        return true;
    }
    match (f.lc(), g.lc()) {
        (Some(a), Some(b)) => ring.divides(a, b) || ring.divides(b, a),
        _ => true,
    }
}

/// Product criterion for the second-type S-pair `(f, g, w)`: coprime
/// leading coefficients, no overlap of the leading words, and no collision
/// `LM(tail^i f)*w*LM(g) = LM(f)*w*LM(tail^j g)`.
pub fn product_criterion<R: EuclideanCoeffs>(alg: &FreeAlgebra<R>, f: &Poly<R>, g: &Poly<R>, w: &Word) -> bool {
    let ring = alg.ring();
    let (Some((cf, u)), Some((cg, v))) = (f.terms().first(), g.terms().first()) else {
        return false;
    };
    if !ring.is_unit(&ring.gcd(cf, cg)) {
        return false;
    }
    if !overlaps(u, v).is_empty() {
        return false;
    }
    let left: Vec<Word> = f.terms()[1..].iter().map(|(_, t)| t.concat(w).concat(v)).collect();
    let uw = u.concat(w);
    !g.terms()[1..].iter().any(|(_, t)| left.contains(&uw.concat(t)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    S,
    G,
}

/// Position of a leading word inside a common multiple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placed<'a> {
    pub lm: &'a Word,
    pub pos: usize,
}

impl Placed<'_> {
    fn end(&self) -> usize {
        self.pos + self.lm.len()
    }
}

/// Is the joint placement of `x` and `f` one the completion treats as a
/// pair: a minimal overlap when the two intervals meet, a second-type
/// connection otherwise?
fn treated_pair(x: Placed, f: Placed) -> bool {
    if x.lm.is_empty() || f.lm.is_empty() {
        return false;
    }
    if x.pos < f.end() && f.pos < x.end() {
        is_minimal_overlap(x.lm, f.lm, f.pos as isize - x.pos as isize)
    } else {
        true
    }
}

fn span(x: Placed, f: Placed) -> usize {
    x.end().max(f.end()) - x.pos.min(f.pos)
}

/// Chain criterion: the `(g, h)` pair at the common multiple `t` is redundant
/// when `f` occurs in `t` so that both `(g, f)` and `(h, f)` live on strictly
/// shorter words and `LC(f)` divides the lcm (S) or gcd (G) of `LC(g)`,
/// `LC(h)`.
pub fn chain_criterion<R: EuclideanCoeffs>(
    ring: &R,
    kind: ChainKind,
    t: &Word,
    lc: [&R::Elem; 3],
    f: Placed,
    g: Placed,
    h: Placed,
) -> bool {
    let [cf, cg, ch] = lc;
    let target = match kind {
        ChainKind::S => ring.lcm(cg, ch),
        ChainKind::G => ring.gcd(cg, ch),
    };
    if !ring.divides(cf, &target) {
        return false;
    }
    if f.end() > t.len() || t.slice(f.pos, f.end()) != *f.lm {
        return false;
    }
    span(g, f) < t.len() && span(h, f) < t.len() && treated_pair(g, f) && treated_pair(h, f)
}

pub fn chain_criterion_s<R: EuclideanCoeffs>(
    ring: &R,
    t: &Word,
    lc: [&R::Elem; 3],
    f: Placed,
    g: Placed,
    h: Placed,
) -> bool {
    chain_criterion(ring, ChainKind::S, t, lc, f, g, h)
}

pub fn chain_criterion_g<R: EuclideanCoeffs>(
    ring: &R,
    t: &Word,
    lc: [&R::Elem; 3],
    f: Placed,
    g: Placed,
    h: Placed,
) -> bool {
    chain_criterion(ring, ChainKind::G, t, lc, f, g, h)
}

/// For two polynomials with the same leading word, the unimodular pair
/// `(spoly, gpoly)` that may replace them. `None` over a field or when the
/// leading words differ.
pub fn pair_replacement<R: EuclideanCoeffs>(
    alg: &FreeAlgebra<R>,
    f: &Poly<R>,
    g: &Poly<R>,
) -> Option<(Poly<R>, Poly<R>)> {
    let ring = alg.ring();
    if ring.is_field() {
        return None;
    }
    let (cf, u) = f.leading().ok()?;
    let (cg, v) = g.leading().ok()?;
    if u != v {
        return None;
    }
    let cof = Cofactors::new(ring, &cf, &cg);
    let id = Bimonomial::identity();
    let s = combine(alg, &cof.a_f, &id, f, &ring.neg(&cof.a_g), &id, g);
    let gp = combine(alg, &cof.b_f, &id, f, &cof.b_g, &id, g);
    Some((s, gp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Integers, Rationals};
    use crate::word::{Alphabet, MonomialOrder, OrderKind};
    use ibig::IBig;

    fn w(s: &str) -> Word {
        Word::from_letters(&s.bytes().map(|b| b - b'a').collect::<Vec<_>>())
    }

    fn alg() -> FreeAlgebra<Integers> {
        let a = Alphabet::new(&["a", "b", "c", "d"]).unwrap();
        let o = MonomialOrder::declaration(OrderKind::DegLeftLex, &a);
        FreeAlgebra::new(Integers, a, o)
    }

    fn p(a: &FreeAlgebra<Integers>, terms: &[(i64, &str)]) -> Poly<Integers> {
        a.from_terms(terms.iter().map(|(c, s)| (IBig::from(*c), w(s))).collect())
    }

    #[test]
    fn coefficient_criterion_examples() {
        let a = alg();
        assert!(coeff_criterion(&Integers, &p(&a, &[(2, "a")]), &p(&a, &[(6, "b")])));
        assert!(!coeff_criterion(&Integers, &p(&a, &[(4, "ab"), (1, "a")]), &p(&a, &[(6, "cb"), (1, "c")])));
        let q = a.with_ring(Rationals);
        let f = q.from_terms(vec![(Rationals.from_i64(4), w("ab"))]);
        let g = q.from_terms(vec![(Rationals.from_i64(6), w("cb"))]);
        assert!(coeff_criterion(&Rationals, &f, &g));
    }

    #[test]
    fn product_criterion_examples() {
        let a = alg();
        let f = p(&a, &[(2, "a"), (1, "")]);
        let g = p(&a, &[(3, "b"), (1, "")]);
        for gap in ["", "c", "dd"] {
            assert!(product_criterion(&a, &f, &g, &w(gap)));
        }
        assert!(!product_criterion(&a, &p(&a, &[(4, "ab"), (1, "a")]), &p(&a, &[(6, "cb"), (1, "c")]), &Word::one()));
        assert!(!product_criterion(&a, &p(&a, &[(2, "ab")]), &p(&a, &[(3, "bc")]), &Word::one()));
    }

    #[test]
    fn chain_coefficient_conditions() {
        let t = w("abc");
        let (f, g, h) = (w("b"), w("ab"), w("bc"));
        let pf = Placed { lm: &f, pos: 1 };
        let pg = Placed { lm: &g, pos: 0 };
        let ph = Placed { lm: &h, pos: 1 };
        let (c2, c3, c4, c6) = (IBig::from(2), IBig::from(3), IBig::from(4), IBig::from(6));
        assert!(chain_criterion_s(&Integers, &t, [&c2, &c4, &c6], pf, pg, ph));
        assert!(chain_criterion_g(&Integers, &t, [&c2, &c4, &c6], pf, pg, ph));
        assert!(!chain_criterion_g(&Integers, &t, [&c3, &c4, &c6], pf, pg, ph));
        let one = IBig::from(1);
        assert!(chain_criterion_s(&Integers, &t, [&one, &c4, &c6], pf, pg, ph));
    }

    #[test]
    fn chain_needs_shorter_spans() {
        let t = w("abcd");
        let (f, g, h) = (w("bc"), w("ab"), w("cd"));
        let one = IBig::from(1);
        let pf = Placed { lm: &f, pos: 1 };
        let pg = Placed { lm: &g, pos: 0 };
        let ph = Placed { lm: &h, pos: 2 };
        assert!(chain_criterion_s(&Integers, &t, [&one, &one, &one], pf, pg, ph));
        let f2 = w("abcd");
        let pf2 = Placed { lm: &f2, pos: 0 };
        assert!(!chain_criterion_s(&Integers, &t, [&one, &one, &one], pf2, pg, ph));
    }

    #[test]
    fn pair_replacement_examples() {
        let a = alg();
        let (s, g) = pair_replacement(&a, &p(&a, &[(2, "ab")]), &p(&a, &[(3, "ab")])).unwrap();
        assert!(s.is_zero());
        assert_eq!(g, p(&a, &[(1, "ab")]));
        let f = p(&a, &[(4, "a"), (1, "b")]);
        let g = p(&a, &[(6, "a"), (1, "c")]);
        let (s, gp) = pair_replacement(&a, &f, &g).unwrap();
        assert_eq!(s, p(&a, &[(3, "b"), (-2, "c")]));
        assert_eq!(gp, p(&a, &[(2, "a"), (-1, "b"), (1, "c")]));
        let (s, gp) = pair_replacement(&a, &f, &f).unwrap();
        assert!(s.is_zero());
        assert_eq!(gp, f);
    }
}
