//! Gröbner bases over `Z/mZ` for squarefree `m`: field computations modulo
//! each prime, recombined along a balanced tree of coprime splits.

use ibig::IBig;

use crate::coeff::{ext_gcd, CoeffRing, PrimeField, ResidueRing};
use crate::engine::{buchberger, completeness_flag, interreduce, sort_basis, GBResult, Options, Stats};
use crate::error::{Error, Result};
use crate::overlap::placement;
use crate::poly::{FreeAlgebra, Poly, Polynomial};
use crate::word::{Bimonomial, Word};

/// `a*r + b*s = 1` for one split `n = a*b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub a: u64,
    pub b: u64,
    pub r: i64,
    pub s: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    Leaf(u64),
    Node { split: Split, left: Box<SplitTree>, right: Box<SplitTree> },
}

impl SplitTree {
    pub fn modulus(&self) -> u64 {
        match self {
            SplitTree::Leaf(p) => *p,
            SplitTree::Node { split, .. } => split.a * split.b,
        }
    }

    fn collect_splits(&self, out: &mut Vec<Split>) {
        if let SplitTree::Node { split, left, right } = self {
            out.push(split.clone());
            left.collect_splits(out);
            right.collect_splits(out);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusPlan {
    pub m: u64,
    pub factors: Vec<u64>,
    pub tree: SplitTree,
}

impl ModulusPlan {
    /// Splits in pre-order, root first.
    pub fn splits(&self) -> Vec<Split> {
        let mut out = Vec::new();
        self.tree.collect_splits(&mut out);
        out
    }
}

fn build_tree(factors: &[u64]) -> Result<SplitTree> {
    if factors.len() == 1 {
        return Ok(SplitTree::Leaf(factors[0]));
    }
    let (lf, rf) = factors.split_at(factors.len() / 2);
    let a: u64 = lf.iter().product();
    let b: u64 = rf.iter().product();
    let (g, r, s) = ext_gcd(&IBig::from(a), &IBig::from(b))?;
    debug_assert_eq!(g, IBig::from(1u8));
    let r = i64::try_from(r).expect("cofactor fits");
    let s = i64::try_from(s).expect("cofactor fits");
    if a as i128 * r as i128 + b as i128 * s as i128 != 1 {
        return Err(Error::SideCondition(format!("{a}*{r} + {b}*{s} != 1")));
    }
    Ok(SplitTree::Node {
        split: Split { a, b, r, s },
        left: Box::new(build_tree(lf)?),
        right: Box::new(build_tree(rf)?),
    })
}

/// Factor `m` into distinct primes and fix the Bezout data of a balanced
/// split tree.
pub fn plan_modulus(m: u64) -> Result<ModulusPlan> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let mut factors = Vec::new();
    let mut n = m;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Err(Error::PrimePowerModulus(m));
            }
            factors.push(p);
        }
        p += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let tree = build_tree(&factors)?;
    Ok(ModulusPlan { m, factors, tree })
}

/// Field Gröbner basis of the images of `gens` modulo the prime `p`, with
/// monic elements, as residues modulo `p`.
pub fn gb_mod_prime(
    alg: &FreeAlgebra<ResidueRing>,
    gens: &[Poly<ResidueRing>],
    p: u64,
    d: usize,
) -> Result<Vec<Polynomial<u64>>> {
    Ok(gb_mod_prime_full(alg, gens, p, d)?.basis)
}

fn gb_mod_prime_full(
    alg: &FreeAlgebra<ResidueRing>,
    gens: &[Poly<ResidueRing>],
    p: u64,
    d: usize,
) -> Result<GBResult<u64>> {
    let field = PrimeField::new(p)?;
    let falg = alg.with_ring(field);
    let images: Vec<Polynomial<u64>> = gens.iter().map(|g| alg.map_into(&falg, g, |c| c % p)).collect();
    buchberger(&falg, &images, d, &Options::default())
}

/// Scale every element so its leading coefficient is the canonical divisor
/// of the modulus.
fn normalize_lcs(alg: &FreeAlgebra<ResidueRing>, g: &[Polynomial<u64>]) -> Vec<Polynomial<u64>> {
    g.iter().filter(|p| !p.is_zero()).map(|p| alg.normalize(p)).collect()
}

fn check_side_conditions(g: &[Polynomial<u64>], a: u64) -> Result<()> {
    for p in g {
        let c = *p.lc().unwrap();
        if c == 0 || !a.is_multiple_of(c) {
            return Err(Error::SideCondition(format!("leading coefficient {c} does not divide {a}")));
        }
        if c % a == 0 {
            return Err(Error::SideCondition(format!("{a} divides leading coefficient {c}")));
        }
    }
    Ok(())
}

/// Every joint placement of `u` and `v` inside a word of length at most `d`:
/// overlapping, containing, or separated by a gap word.
fn all_placements(alg: &FreeAlgebra<ResidueRing>, u: &Word, v: &Word, d: usize) -> Vec<(Bimonomial, Bimonomial)> {
    if u.is_empty() || v.is_empty() {
        let t = if u.is_empty() { v.clone() } else { u.clone() };
        let tau_u = if u.is_empty() { Bimonomial::new(t.clone(), Word::one()) } else { Bimonomial::identity() };
        let tau_v = if v.is_empty() { Bimonomial::new(t.clone(), Word::one()) } else { Bimonomial::identity() };
        return vec![(tau_u, tau_v)];
    }
    let (p, q) = (u.len() as isize, v.len() as isize);
    let mut out = Vec::new();
    for k in (1 - q)..p {
        if let Some(o) = placement(u, v, k) {
            if o.t.len() <= d {
                out.push((o.tau_u, o.tau_v));
            }
        }
    }
    if u.len() + v.len() <= d {
        for gap in 0..=(d - u.len() - v.len()) {
            for w in alg.alphabet().words_of_length(gap) {
                out.push((Bimonomial::new(Word::one(), w.concat(v)), Bimonomial::new(u.concat(&w), Word::one())));
                out.push((Bimonomial::new(v.concat(&w), Word::one()), Bimonomial::new(Word::one(), w.concat(u))));
            }
        }
    }
    out
}

/// Recombine bases of `J + aP` and `J + bP` (given modulo `a` and `b`) into
/// a strong basis of `J` over `Z/(ab)`. `ga` and `gb` must already contain
/// the constants `a` and `b`. Pairs whose leading coefficients multiply to
/// zero are skipped and reported in `warnings`.
pub fn lift_combine(
    alg: &FreeAlgebra<ResidueRing>,
    ga: &[Polynomial<u64>],
    gb: &[Polynomial<u64>],
    split: &Split,
    d: usize,
    warnings: &mut Vec<String>,
) -> Result<Vec<Polynomial<u64>>> {
    let Split { a, b, r, s } = *split;
    let n = a * b;
    let ring = ResidueRing::new(n)?;
    let nalg = alg.with_ring(ring);
    let is_const =
        |p: &Polynomial<u64>, c: u64| p.num_terms() == 1 && p.lm().unwrap().is_empty() && *p.lc().unwrap() == c;
    let nonconst_a: Vec<_> = ga.iter().filter(|p| !is_const(p, a)).cloned().collect();
    let nonconst_b: Vec<_> = gb.iter().filter(|p| !is_const(p, b)).cloned().collect();
    check_side_conditions(&nonconst_a, a)?;
    check_side_conditions(&nonconst_b, b)?;
    let ar = ring.mul(&ring.from_u64(a), &ring.from_int(&IBig::from(r)));
    let bs = ring.mul(&ring.from_u64(b), &ring.from_int(&IBig::from(s)));
    let mut out = Vec::new();
    let mut skipped = 0usize;
    for gi in ga {
        for gj in gb {
            let (ci, cj) = (*gi.lc().unwrap(), *gj.lc().unwrap());
            if ring.mul(&ci, &cj) == 0 {
                skipped += 1;
                continue;
            }
            let x = ring.mul(&ar, &ci);
            let y = ring.mul(&bs, &cj);
            for (tau_i, tau_j) in all_placements(alg, gi.lm().unwrap(), gj.lm().unwrap(), d) {
                let f = nalg.scale_apply(&x, &tau_j, gj);
                let f = nalg.add_scaled_sandwich(&f, &y, &tau_i, gi);
                if !f.is_zero() {
                    out.push(f);
                }
            }
        }
    }
    if skipped > 0 {
        warnings.push(format!("modulus {n}: skipped {skipped} pair(s) whose leading coefficients multiply to zero"));
    }
    let out = normalize_lcs(&nalg, &out);
    Ok(interreduce(&nalg, out))
}

fn solve(
    alg: &FreeAlgebra<ResidueRing>,
    gens: &[Poly<ResidueRing>],
    tree: &SplitTree,
    d: usize,
    stats: &mut Stats,
    warnings: &mut Vec<String>,
) -> Result<Vec<Polynomial<u64>>> {
    match tree {
        SplitTree::Leaf(p) => {
            let res = gb_mod_prime_full(alg, gens, *p, d)?;
            add_stats(stats, &res.stats);
            Ok(res.basis)
        }
        SplitTree::Node { split, left, right } => {
            let ga = solve(alg, gens, left, d, stats, warnings)?;
            let gb = solve(alg, gens, right, d, stats, warnings)?;
            let aalg = alg.with_ring(ResidueRing::new(split.a)?);
            let balg = alg.with_ring(ResidueRing::new(split.b)?);
            let mut ga = normalize_lcs(&aalg, &ga);
            let mut gb = normalize_lcs(&balg, &gb);
            ga.push(Polynomial::from_sorted_unchecked(vec![(split.a, Word::one())]));
            gb.push(Polynomial::from_sorted_unchecked(vec![(split.b, Word::one())]));
            lift_combine(alg, &ga, &gb, split, d, warnings)
        }
    }
}

fn add_stats(acc: &mut Stats, s: &Stats) {
    acc.pairs_created += s.pairs_created;
    acc.pairs_discarded_product += s.pairs_discarded_product;
    acc.pairs_discarded_chain += s.pairs_discarded_chain;
    acc.pairs_discarded_coeff += s.pairs_discarded_coeff;
    acc.pairs_processed += s.pairs_processed;
    acc.reductions_to_zero += s.reductions_to_zero;
    acc.basis_insertions += s.basis_insertions;
    acc.peak_queue_size = acc.peak_queue_size.max(s.peak_queue_size);
    for (k, v) in &s.insertions_by_length {
        *acc.insertions_by_length.entry(*k).or_default() += v;
    }
}

/// Strong Gröbner basis over `Z/mZ` (the ring of `alg`) up to length `d`.
pub fn gb_zmod(alg: &FreeAlgebra<ResidueRing>, gens: &[Poly<ResidueRing>], d: usize) -> Result<GBResult<u64>> {
    let m = alg.ring().modulus();
    let plan = plan_modulus(m)?;
    let needed = gens.iter().map(|g| g.max_len()).max().unwrap_or(0);
    if d < needed {
        return Err(Error::BoundTooSmall { bound: d, needed });
    }
    let mut stats = Stats::default();
    let mut warnings = Vec::new();
    let basis = solve(alg, gens, &plan.tree, d, &mut stats, &mut warnings)?;
    let basis = normalize_lcs(alg, &basis);
    let mut basis = interreduce(alg, basis);
    sort_basis(alg, &mut basis);
    let flag = completeness_flag(&basis, d);
    Ok(GBResult { basis, bound: d, flag, stats, discarded: Vec::new(), warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::normal_form;
    use crate::word::{Alphabet, MonomialOrder, OrderKind};

    fn zalg(m: u64) -> FreeAlgebra<ResidueRing> {
        let a = Alphabet::new(&["x", "y"]).unwrap();
        let o = MonomialOrder::declaration(OrderKind::DegLeftLex, &a);
        FreeAlgebra::new(ResidueRing::new(m).unwrap(), a, o)
    }

    fn p(a: &FreeAlgebra<ResidueRing>, terms: &[(i64, &[u8])]) -> Poly<ResidueRing> {
        a.from_terms(terms.iter().map(|(c, w)| (a.ring().from_i64(*c), Word::from_letters(w))).collect())
    }

    #[test]
    fn plan_examples() {
        let plan = plan_modulus(6).unwrap();
        assert_eq!(plan.factors, vec![2, 3]);
        assert_eq!(plan.splits(), vec![Split { a: 2, b: 3, r: -1, s: 1 }]);
        let plan = plan_modulus(30).unwrap();
        assert_eq!(plan.factors, vec![2, 3, 5]);
        let splits = plan.splits();
        assert_eq!(splits.len(), 2);
        for sp in &splits {
            assert_eq!(sp.a as i64 * sp.r + sp.b as i64 * sp.s, 1);
        }
        assert_eq!(plan_modulus(4), Err(Error::PrimePowerModulus(4)));
        assert!(plan_modulus(4).unwrap_err().to_string().contains("prime-power moduli unsupported"));
        assert_eq!(plan_modulus(1), Err(Error::InvalidModulus(1)));
        assert_eq!(plan_modulus(7).unwrap().tree, SplitTree::Leaf(7));
    }

    #[test]
    fn prime_leaf_examples() {
        let a = zalg(6);
        assert!(gb_mod_prime(&a, &[p(&a, &[(2, &[0])])], 2, 3).unwrap().is_empty());
        let g = gb_mod_prime(&a, &[p(&a, &[(3, &[0])])], 2, 3).unwrap();
        assert_eq!(g, vec![Polynomial::from_sorted_unchecked(vec![(1, Word::from_letters(&[0]))])]);
        let g = gb_mod_prime(&a, &[p(&a, &[(1, &[0]), (1, &[1])]), p(&a, &[(1, &[0]), (-1, &[1])])], 2, 3).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn unit_ideal() {
        for m in [6, 10, 30] {
            let a = zalg(m);
            let g = gb_zmod(&a, &[p(&a, &[(1, &[])])], 3).unwrap();
            assert_eq!(g.basis, vec![a.one()]);
        }
    }

    #[test]
    fn constant_two_mod_six() {
        let a = zalg(6);
        let g = gb_zmod(&a, &[p(&a, &[(2, &[])])], 3).unwrap();
        for c in 0..6i64 {
            for w in [&[][..], &[0], &[1, 0]] {
                let f = p(&a, &[(c, w)]);
                let zero = normal_form(&a, &f, &g.basis, false).is_zero();
                assert_eq!(zero, c % 2 == 0, "c = {c}");
            }
        }
    }

    #[test]
    fn mixed_generators_mod_six() {
        let a = zalg(6);
        let gens = [p(&a, &[(3, &[0])]), p(&a, &[(2, &[1])])];
        let g = gb_zmod(&a, &gens, 3).unwrap();
        for f in &gens {
            assert!(normal_form(&a, f, &g.basis, false).is_zero());
        }
        let xy = p(&a, &[(1, &[0, 1])]);
        assert!(normal_form(&a, &xy, &g.basis, false).is_zero());
        let x = p(&a, &[(1, &[0])]);
        assert!(!normal_form(&a, &x, &g.basis, false).is_zero());
    }

    #[test]
    fn prime_modulus_matches_leaf() {
        let a = zalg(5);
        let gens = [p(&a, &[(2, &[0, 1]), (1, &[1])]), p(&a, &[(1, &[1, 0]), (3, &[])])];
        let full = gb_zmod(&a, &gens, 4).unwrap();
        let mut leaf = gb_mod_prime(&a, &gens, 5, 4).unwrap();
        sort_basis(&a, &mut leaf);
        assert_eq!(full.basis, leaf);
    }
}
