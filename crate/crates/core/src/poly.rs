//! Polynomials of the free algebra in canonical form, and the algebra
//! context that owns the coefficient domain, the alphabet and the ordering.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::coeff::CoeffRing;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Bimonomial, MonomialOrder, Word};

/// Terms strictly descending in the active ordering, no zero coefficients.
/// The zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    terms: Vec<(E, Word)>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(E, Word)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn lm(&self) -> Option<&Word> {
        self.terms.first().map(|(_, w)| w)
    }

    pub fn lc(&self) -> Option<&E> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Longest word occurring in any term.
    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(E, Word)>) -> Self {
        Polynomial { terms }
    }

    pub fn into_terms(self) -> Vec<(E, Word)> {
        self.terms
    }
}

impl<E: Clone> Polynomial<E> {
    /// `(LC, LM)`.
    pub fn leading(&self) -> Result<(E, Word)> {
        self.terms.first().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn tail(&self) -> Polynomial<E> {
        Polynomial { terms: self.terms.iter().skip(1).cloned().collect() }
    }

    /// `tail` applied `i` times.
    pub fn tail_iter(&self, i: usize) -> Polynomial<E> {
        Polynomial { terms: self.terms.iter().skip(i).cloned().collect() }
    }
}

/// A free associative algebra over a coefficient domain.
#[derive(Clone, Debug)]
pub struct FreeAlgebra<R: CoeffRing> {
    ring: R,
    alphabet: Alphabet,
    order: MonomialOrder,
}

pub type Poly<R> = Polynomial<<R as CoeffRing>::Elem>;

impl<R: CoeffRing> FreeAlgebra<R> {
    pub fn new(ring: R, alphabet: Alphabet, order: MonomialOrder) -> Self {
        FreeAlgebra { ring, alphabet, order }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The same alphabet and ordering over another coefficient domain.
    pub fn with_ring<S: CoeffRing>(&self, ring: S) -> FreeAlgebra<S> {
        FreeAlgebra { ring, alphabet: self.alphabet.clone(), order: self.order.clone() }
    }

    pub fn cmp_words(&self, u: &Word, v: &Word) -> Ordering {
        self.order.cmp(u, v)
    }

    /// Canonical form of an arbitrary term list.
    pub fn from_terms(&self, mut terms: Vec<(R::Elem, Word)>) -> Poly<R> {
        terms.sort_by(|a, b| self.order.cmp(&b.1, &a.1));
        let mut out: Vec<(R::Elem, Word)> = Vec::with_capacity(terms.len());
        for (c, w) in terms {
            match out.last_mut() {
                Some((c0, w0)) if *w0 == w => *c0 = self.ring.add(c0, &c),
                _ => out.push((c, w)),
            }
        }
        out.retain(|(c, _)| !self.ring.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R> {
        self.monomial(c, Word::one())
    }

    pub fn one(&self) -> Poly<R> {
        self.constant(self.ring.one())
    }

    pub fn monomial(&self, c: R::Elem, w: Word) -> Poly<R> {
        if self.ring.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(c, w)] }
        }
    }

    pub fn variable(&self, letter: u8) -> Poly<R> {
        self.monomial(self.ring.one(), Word::from_letters(&[letter]))
    }

    pub fn is_canonical(&self, f: &Poly<R>) -> bool {
        f.terms.iter().all(|(c, _)| !self.ring.is_zero(c))
            && f.terms.windows(2).all(|p| self.order.cmp(&p[0].1, &p[1].1) == Ordering::Greater)
    }

    /// `f + s*g` for canonical `f`, `g`, by merging.
    pub fn add_scaled(&self, f: &Poly<R>, s: &R::Elem, g: &Poly<R>) -> Poly<R> {
        self.add_scaled_sandwich(f, s, &Bimonomial::identity(), g)
    }

    /// `f + s * (left*g*right)`. Multiplication by words preserves the
    /// ordering, so the merge works on `g`'s term order directly.
    pub fn add_scaled_sandwich(&self, f: &Poly<R>, s: &R::Elem, tau: &Bimonomial, g: &Poly<R>) -> Poly<R> {
        let ring = &self.ring;
        if ring.is_zero(s) || g.is_zero() {
            return f.clone();
        }
        let shift = !tau.is_identity();
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(c, w)| {
            let w = if shift { tau.apply(w) } else { w.clone() };
            (ring.mul(s, c), w)
        });
        let mut next_g = gi.next();
        while let Some((cg, wg)) = next_g.take() {
            if ring.is_zero(&cg) {
                next_g = gi.next();
                continue;
            }
            while i < f.terms.len() && self.order.cmp(&f.terms[i].1, &wg) == Ordering::Greater {
                out.push(f.terms[i].clone());
                i += 1;
            }
            if i < f.terms.len() && f.terms[i].1 == wg {
                let c = ring.add(&f.terms[i].0, &cg);
                if !ring.is_zero(&c) {
                    out.push((c, wg));
                }
                i += 1;
            } else {
                out.push((cg, wg));
            }
            next_g = gi.next();
        }
        out.extend_from_slice(&f.terms[i..]);
        let p = Polynomial { terms: out };
        debug_assert!(self.is_canonical(&p));
        p
    }

    pub fn add(&self, f: &Poly<R>, g: &Poly<R>) -> Poly<R> {
        self.add_scaled(f, &self.ring.one(), g)
    }

    pub fn sub(&self, f: &Poly<R>, g: &Poly<R>) -> Poly<R> {
        self.add_scaled(f, &self.ring.neg(&self.ring.one()), g)
    }

    pub fn neg(&self, f: &Poly<R>) -> Poly<R> {
        Polynomial { terms: f.terms.iter().map(|(c, w)| (self.ring.neg(c), w.clone())).collect() }
    }

    pub fn scale(&self, c: &R::Elem, f: &Poly<R>) -> Poly<R> {
        let terms: Vec<_> = f
            .terms
            .iter()
            .map(|(a, w)| (self.ring.mul(c, a), w.clone()))
            .filter(|(a, _)| !self.ring.is_zero(a))
            .collect();
        Polynomial { terms }
    }

    /// `tau . f`: every word `w` becomes `left*w*right`.
    pub fn apply(&self, tau: &Bimonomial, f: &Poly<R>) -> Poly<R> {
        let p = Polynomial { terms: f.terms.iter().map(|(c, w)| (c.clone(), tau.apply(w))).collect() };
        debug_assert!(self.is_canonical(&p));
        p
    }

    /// `c * tau . f`.
    pub fn scale_apply(&self, c: &R::Elem, tau: &Bimonomial, f: &Poly<R>) -> Poly<R> {
        self.add_scaled_sandwich(&Polynomial::zero(), c, tau, f)
    }

    /// Non-commutative product: bilinear extension of concatenation.
    pub fn mul(&self, f: &Poly<R>, g: &Poly<R>) -> Poly<R> {
        let mut acc = Polynomial::zero();
        for (c, w) in &f.terms {
            let tau = Bimonomial::new(w.clone(), Word::one());
            acc = self.add_scaled_sandwich(&acc, c, &tau, g);
        }
        acc
    }

    pub fn pow(&self, f: &Poly<R>, e: u32) -> Poly<R> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Multiply by the unit that makes the leading coefficient canonical.
    pub fn normalize(&self, f: &Poly<R>) -> Poly<R> {
        match f.lc() {
            None => Polynomial::zero(),
            Some(c) => {
                let u = self.ring.normal_unit(c);
                self.scale(&u, f)
            }
        }
    }

    /// Map coefficients into another domain over the same alphabet/ordering.
    pub fn map_into<S: CoeffRing>(
        &self,
        target: &FreeAlgebra<S>,
        f: &Poly<R>,
        map: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S> {
        let terms: Vec<_> =
            f.terms.iter().map(|(c, w)| (map(c), w.clone())).filter(|(c, _)| !target.ring.is_zero(c)).collect();
        Polynomial { terms }
    }

    pub fn render_word(&self, w: &Word) -> String {
        let mut s = String::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i + 1;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(self.alphabet.name(letters[i]));
            if j - i > 1 {
                let _ = write!(s, "^{}", j - i);
            }
            i = j;
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Text form: `2*x*y^2 - 3*z`.
    pub fn render(&self, f: &Poly<R>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (c, w)) in f.terms.iter().enumerate() {
            let (neg, mag) = self.ring.render(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                s.push_str(&mag);
            } else {
                if mag != "1" {
                    s.push_str(&mag);
                    s.push('*');
                }
                s.push_str(&self.render_word(w));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Integers;
    use crate::word::OrderKind;
    use ibig::IBig;
    use proptest::prelude::*;

    fn alg() -> FreeAlgebra<Integers> {
        let a = Alphabet::new(&["x", "y", "z"]).unwrap();
        let o = MonomialOrder::declaration(OrderKind::DegLeftLex, &a);
        FreeAlgebra::new(Integers, a, o)
    }

    fn p(alg: &FreeAlgebra<Integers>, terms: &[(i64, &[u8])]) -> Poly<Integers> {
        alg.from_terms(terms.iter().map(|(c, w)| (IBig::from(*c), Word::from_letters(w))).collect())
    }

    #[test]
    fn apply_examples() {
        let a = alg();
        let f = p(&a, &[(3, &[0]), (1, &[])]);
        assert_eq!(a.apply(&Bimonomial::identity(), &f), f);
        let two_y = p(&a, &[(2, &[1])]);
        let tau = Bimonomial::new(Word::from_letters(&[0]), Word::from_letters(&[2]));
        assert_eq!(a.render(&a.apply(&tau, &two_y)), "2*x*y*z");
        let tau = Bimonomial::new(Word::one(), Word::from_letters(&[1, 0]));
        assert_eq!(a.render(&a.apply(&tau, &f)), "3*x*y*x + y*x");
    }

    #[test]
    fn arithmetic_examples() {
        let a = alg();
        let f = p(&a, &[(2, &[0])]);
        assert!(a.add(&f, &a.neg(&f)).is_zero());
        let x = a.variable(0);
        let y = a.variable(1);
        assert_eq!(a.render(&a.mul(&x, &y)), "x*y");
        assert_ne!(a.mul(&x, &y), a.mul(&y, &x));
        assert_eq!(a.render(&a.scale(&IBig::from(3), &p(&a, &[(2, &[0, 1])]))), "6*x*y");
    }

    #[test]
    fn leading_and_tail() {
        let a = alg();
        let f = p(&a, &[(2, &[0, 1, 0]), (1, &[1])]);
        assert_eq!(f.leading().unwrap(), (IBig::from(2), Word::from_letters(&[0, 1, 0])));
        let g = p(&a, &[(4, &[0, 1]), (1, &[0])]);
        assert_eq!(a.render(&g.tail()), "x");
        assert!(g.tail_iter(g.num_terms()).is_zero());
        assert_eq!(Polynomial::<IBig>::zero().leading(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rendering() {
        let a = alg();
        let f = p(&a, &[(2, &[0, 1, 1]), (-3, &[2]), (-1, &[])]);
        assert_eq!(a.render(&f), "2*x*y^2 - 3*z - 1");
        assert_eq!(a.render(&Polynomial::zero()), "0");
        assert_eq!(a.render(&p(&a, &[(-1, &[0, 0])])), "-x^2");
    }

    fn poly_strategy() -> impl Strategy<Value = Vec<(i64, Vec<u8>)>> {
        prop::collection::vec((-5i64..=5, prop::collection::vec(0u8..3, 0..3)), 0..4)
    }

    fn build(a: &FreeAlgebra<Integers>, t: &[(i64, Vec<u8>)]) -> Poly<Integers> {
        a.from_terms(t.iter().map(|(c, w)| (IBig::from(*c), Word::from_letters(w))).collect())
    }

    proptest! {
        #[test]
        fn ring_axioms(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
            let a = alg();
            let (f, g, h) = (build(&a, &f), build(&a, &g), build(&a, &h));
            prop_assert_eq!(a.mul(&a.mul(&f, &g), &h), a.mul(&f, &a.mul(&g, &h)));
            prop_assert_eq!(a.mul(&f, &a.add(&g, &h)), a.add(&a.mul(&f, &g), &a.mul(&f, &h)));
            prop_assert_eq!(a.mul(&a.add(&g, &h), &f), a.add(&a.mul(&g, &f), &a.mul(&h, &f)));
            prop_assert_eq!(a.mul(&a.one(), &f), f.clone());
            prop_assert_eq!(a.mul(&f, &a.one()), f.clone());
            prop_assert!(a.is_canonical(&a.mul(&f, &g)));
        }

        #[test]
        fn leading_word_is_multiplicative(f in poly_strategy(), g in poly_strategy()) {
            let a = alg();
            let (f, g) = (build(&a, &f), build(&a, &g));
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = a.mul(&f, &g);
            prop_assert_eq!(fg.lm().unwrap(), &f.lm().unwrap().concat(g.lm().unwrap()));
        }
    }
}
