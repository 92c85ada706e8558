//! Coefficient domains: the integers, the rationals, prime fields and
//! residue rings `Z/mZ`.
//!
//! Domains are runtime values implementing [`CoeffRing`]; their elements are
//! plain data. Operations that only make sense over a Euclidean domain
//! (Bezout cofactors, least common multiples) live in [`EuclideanCoeffs`],
//! which residue rings with zero divisors do not implement.

use std::fmt::Debug;
use std::hash::Hash;

use ibig::ops::{Abs, DivRemEuclid};
use ibig::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which coefficient domain a job runs over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Integers,
    Rationals,
    Residue(u64),
}

impl DomainKind {
    pub fn residue(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(DomainKind::Residue(m))
    }
}

pub trait CoeffRing: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, v: &IBig) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_int(&IBig::from(v))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn is_field(&self) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// `a | b`.
    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// Division step of an lm-reduction: `(a, b)` with `c_f = a*c_g + b`,
    /// `a != 0` and `b` strictly smaller than `c_f`, or `None` when the
    /// leading coefficient `c_f` cannot be shrunk by `c_g`.
    fn reduce_quotient(&self, c_f: &Self::Elem, c_g: &Self::Elem) -> Option<(Self::Elem, Self::Elem)>;

    /// A unit `u` such that `u*a` is the canonical associate of `a`
    /// (positive over Z, one over a field).
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// Sign and magnitude used by the text renderer.
    fn render(&self, a: &Self::Elem) -> (bool, String);

    fn kind(&self) -> DomainKind;
}

/// Cofactor data for S- and G-polynomials.
pub trait EuclideanCoeffs: CoeffRing {
    /// `(a_f, a_g)` with `a_f*c_f = a_g*c_g` equal to the lcm (over a field:
    /// equal to one).
    fn lcm_cofactors(&self, c_f: &Self::Elem, c_g: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// `(gcd, b_f, b_g)` with `gcd = b_f*c_f + b_g*c_g`.
    fn bezout(&self, c_f: &Self::Elem, c_g: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem);
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.bezout(a, b).0
    }
    fn lcm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (af, _) = self.lcm_cofactors(a, b);
        self.mul(&af, a)
    }
}

// ---------------------------------------------------------------------------
// Integer arithmetic

fn int_zero() -> IBig {
    IBig::from(0u8)
}

fn is_int_zero(a: &IBig) -> bool {
    *a == int_zero()
}

/// Extended gcd over Z with a fixed cofactor convention: `g > 0`,
/// `g = s*a + t*b`, `|s|` minimal and ties broken toward `s >= 0`.
/// When `b = 0` the result is `(|a|, sign(a), 0)` (symmetrically for `a = 0`).
pub fn ext_gcd(a: &IBig, b: &IBig) -> Result<(IBig, IBig, IBig)> {
    if is_int_zero(a) && is_int_zero(b) {
        return Err(Error::GcdUndefined);
    }
    if is_int_zero(b) {
        return Ok((a.clone().abs(), a.signum(), int_zero()));
    }
    if is_int_zero(a) {
        return Ok((b.clone().abs(), int_zero(), b.signum()));
    }
    let (g, s, t) = a.extended_gcd(b);
    // All solutions: s + k*(b/g), t - k*(a/g).
    let step_s = b / &g;
    let step_t = a / &g;
    let period = step_s.clone().abs();
    let (_, mut s_min) = s.clone().div_rem_euclid(&period);
    // s_min in [0, period); the other candidate is s_min - period.
    let alt = &s_min - &period;
    if alt.clone().abs() < s_min {
        s_min = alt;
    }
    // Recover t from the shift applied to s.
    let k = (&s_min - &s) / &step_s;
    let t_new = &t - &k * &step_t;
    debug_assert_eq!(&s_min * a + &t_new * b, g);
    Ok((g, s_min, t_new))
}

/// Positive least common multiple of two nonzero integers.
pub fn lcm_coeff(a: &IBig, b: &IBig) -> Result<IBig> {
    if is_int_zero(a) || is_int_zero(b) {
        return Err(Error::ZeroLcm);
    }
    let (g, _, _) = ext_gcd(a, b)?;
    Ok((a / &g * b).abs())
}

/// Nearest-integer quotient with ties toward a non-negative remainder.
/// Returns `(a, b)` with `c_f = a*c_g + b` when `a != 0` and `|b| < |c_f|`.
pub fn reduce_quotient_int(c_f: &IBig, c_g: &IBig) -> Option<(IBig, IBig)> {
    if is_int_zero(c_f) || is_int_zero(c_g) {
        return None;
    }
    let (q, r) = c_f.clone().div_rem_euclid(c_g);
    // c_f = q*c_g + r with 0 <= r < |c_g|; the other candidate moves r by |c_g|.
    let abs_g = c_g.clone().abs();
    let (q2, r2) =
        if c_g > &int_zero() { (&q + IBig::from(1u8), &r - &abs_g) } else { (&q - IBig::from(1u8), &r - &abs_g) };
    let ra = r.clone().abs();
    let r2a = r2.clone().abs();
    let (a, b) = if r2a < ra { (q2, r2) } else { (q, r) };
    if is_int_zero(&a) || b.clone().abs() >= c_f.clone().abs() {
        return None;
    }
    Some((a, b))
}

/// Euclidean norm over Z.
pub fn norm(c: &IBig) -> IBig {
    c.clone().abs()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl CoeffRing for Integers {
    type Elem = IBig;

    fn zero(&self) -> IBig {
        int_zero()
    }
    fn one(&self) -> IBig {
        IBig::from(1u8)
    }
    fn from_int(&self, v: &IBig) -> IBig {
        v.clone()
    }
    fn is_zero(&self, a: &IBig) -> bool {
        is_int_zero(a)
    }
    fn add(&self, a: &IBig, b: &IBig) -> IBig {
        a + b
    }
    fn sub(&self, a: &IBig, b: &IBig) -> IBig {
        a - b
    }
    fn mul(&self, a: &IBig, b: &IBig) -> IBig {
        a * b
    }
    fn neg(&self, a: &IBig) -> IBig {
        -a
    }
    fn is_field(&self) -> bool {
        false
    }
    fn is_unit(&self, a: &IBig) -> bool {
        a.clone().abs() == IBig::from(1u8)
    }
    fn divides(&self, a: &IBig, b: &IBig) -> bool {
        if is_int_zero(a) {
            return is_int_zero(b);
        }
        is_int_zero(&(b % a))
    }
    fn reduce_quotient(&self, c_f: &IBig, c_g: &IBig) -> Option<(IBig, IBig)> {
        reduce_quotient_int(c_f, c_g)
    }
    fn normal_unit(&self, a: &IBig) -> IBig {
        if a < &int_zero() {
            IBig::from(-1i8)
        } else {
            IBig::from(1u8)
        }
    }
    fn render(&self, a: &IBig) -> (bool, String) {
        (a < &int_zero(), a.clone().abs().to_string())
    }
    fn kind(&self) -> DomainKind {
        DomainKind::Integers
    }
}

impl EuclideanCoeffs for Integers {
    fn lcm_cofactors(&self, c_f: &IBig, c_g: &IBig) -> (IBig, IBig) {
        let l = lcm_coeff(c_f, c_g).expect("nonzero leading coefficients");
        (&l / c_f, &l / c_g)
    }
    fn bezout(&self, c_f: &IBig, c_g: &IBig) -> (IBig, IBig, IBig) {
        ext_gcd(c_f, c_g).expect("nonzero leading coefficients")
    }
}

// ---------------------------------------------------------------------------
// Rationals

pub fn ibig_to_bigint(v: &IBig) -> BigInt {
    v.to_string().parse().expect("decimal integer")
}

pub fn bigint_to_ibig(v: &BigInt) -> IBig {
    v.to_string().parse().expect("decimal integer")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl CoeffRing for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, v: &IBig) -> BigRational {
        BigRational::from_integer(ibig_to_bigint(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_field(&self) -> bool {
        true
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn divides(&self, a: &BigRational, b: &BigRational) -> bool {
        !a.is_zero() || b.is_zero()
    }
    fn reduce_quotient(&self, c_f: &BigRational, c_g: &BigRational) -> Option<(BigRational, BigRational)> {
        if c_f.is_zero() || c_g.is_zero() {
            return None;
        }
        Some((c_f / c_g, BigRational::zero()))
    }
    fn normal_unit(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn render(&self, a: &BigRational) -> (bool, String) {
        let abs = a.abs();
        let s = if abs.denom().is_one() { abs.numer().to_string() } else { format!("{}/{}", abs.numer(), abs.denom()) };
        (a.is_negative(), s)
    }
    fn kind(&self) -> DomainKind {
        DomainKind::Rationals
    }
}

impl EuclideanCoeffs for Rationals {
    fn lcm_cofactors(&self, c_f: &BigRational, c_g: &BigRational) -> (BigRational, BigRational) {
        (c_f.recip(), c_g.recip())
    }
    fn bezout(&self, c_f: &BigRational, _c_g: &BigRational) -> (BigRational, BigRational, BigRational) {
        (BigRational::one(), c_f.recip(), BigRational::zero())
    }
}

// ---------------------------------------------------------------------------
// Residues

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, s, _) = ext_gcd(&IBig::from(a % m), &IBig::from(m)).ok()?;
    if g != IBig::from(1u8) {
        return None;
    }
    let (_, r) = s.div_rem_euclid(IBig::from(m));
    u64::try_from(r).ok()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn residue_of(v: &IBig, m: u64) -> u64 {
    let (_, r) = v.clone().div_rem_euclid(IBig::from(m));
    u64::try_from(r).expect("residue fits in u64")
}

/// The field with `p` elements, `p` prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }
    pub fn modulus(&self) -> u64 {
        self.p
    }
    pub fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.p).expect("nonzero element of a prime field")
    }
}

impl CoeffRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, v: &IBig) -> u64 {
        residue_of(v, self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b) as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn is_field(&self) -> bool {
        true
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn divides(&self, a: &u64, b: &u64) -> bool {
        *a != 0 || *b == 0
    }
    fn reduce_quotient(&self, c_f: &u64, c_g: &u64) -> Option<(u64, u64)> {
        if *c_f == 0 || *c_g == 0 {
            return None;
        }
        Some((mul_mod(*c_f, self.inv(*c_g), self.p), 0))
    }
    fn normal_unit(&self, a: &u64) -> u64 {
        self.inv(*a)
    }
    fn render(&self, a: &u64) -> (bool, String) {
        (false, a.to_string())
    }
    fn kind(&self) -> DomainKind {
        DomainKind::Residue(self.p)
    }
}

impl EuclideanCoeffs for PrimeField {
    fn lcm_cofactors(&self, c_f: &u64, c_g: &u64) -> (u64, u64) {
        (self.inv(*c_f), self.inv(*c_g))
    }
    fn bezout(&self, c_f: &u64, _c_g: &u64) -> (u64, u64, u64) {
        (1, self.inv(*c_f), 0)
    }
}

/// `Z/mZ` for an arbitrary modulus `m >= 2`. Only exact division is used for
/// reduction: `c_g` reduces `c_f` iff `gcd(c_g, m)` divides `c_f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueRing {
    m: u64,
}

impl ResidueRing {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(ResidueRing { m })
    }
    pub fn modulus(&self) -> u64 {
        self.m
    }
    /// Positive representative of the ideal generated by `a`: `gcd(a, m)`.
    pub fn ideal_generator(&self, a: u64) -> u64 {
        gcd_u64(a % self.m, self.m)
    }
    pub fn from_u64(&self, v: u64) -> u64 {
        v % self.m
    }
}

impl CoeffRing for ResidueRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, v: &IBig) -> u64 {
        residue_of(v, self.m)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.m as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.m - *b) as u128) % self.m as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.m)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.m - *a
        }
    }
    fn is_field(&self) -> bool {
        is_prime(self.m)
    }
    fn is_unit(&self, a: &u64) -> bool {
        gcd_u64(*a, self.m) == 1
    }
    fn divides(&self, a: &u64, b: &u64) -> bool {
        (*b).is_multiple_of(self.ideal_generator(*a))
    }
    fn reduce_quotient(&self, c_f: &u64, c_g: &u64) -> Option<(u64, u64)> {
        if *c_f == 0 || *c_g == 0 {
            return None;
        }
        let g = self.ideal_generator(*c_g);
        if !(*c_f).is_multiple_of(g) {
            return None;
        }
        // Solve a*c_g = c_f (mod m): divide through by g.
        let m_red = self.m / g;
        let a = if m_red == 1 {
            0
        } else {
            let inv = inv_mod((*c_g / g) % m_red, m_red)?;
            mul_mod((*c_f / g) % m_red, inv, m_red)
        };
        if a == 0 {
            return None;
        }
        debug_assert_eq!(self.mul(&a, c_g), *c_f);
        Some((a, 0))
    }
    fn normal_unit(&self, a: &u64) -> u64 {
        // A unit u with u*a = gcd(a, m) (mod m).
        let g = self.ideal_generator(*a);
        if g == 0 || *a == 0 {
            return 1;
        }
        let m_red = self.m / g;
        if m_red == 1 {
            return 1;
        }
        let u0 = inv_mod((*a / g) % m_red, m_red).expect("coprime cofactor");
        // Lift u0 to a unit modulo m.
        let mut u = u0;
        while gcd_u64(u, self.m) != 1 {
            u += m_red;
        }
        u % self.m
    }
    fn render(&self, a: &u64) -> (bool, String) {
        (false, a.to_string())
    }
    fn kind(&self) -> DomainKind {
        DomainKind::Residue(self.m)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
