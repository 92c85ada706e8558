use ncgb_core::engine::{gb_equivalent, normal_form};
use ncgb_core::modlift::{gb_mod_prime, gb_zmod, plan_modulus};
use ncgb_core::{Alphabet, Bimonomial, Error, FreeAlgebra, MonomialOrder, OrderKind, Poly, ResidueRing, Word};
use proptest::prelude::*;

const D: usize = 3;

fn alg(m: u64) -> FreeAlgebra<ResidueRing> {
    let a = Alphabet::new(&["x", "y"]).unwrap();
    let o = MonomialOrder::declaration(OrderKind::DegLeftLex, &a);
    FreeAlgebra::new(ResidueRing::new(m).unwrap(), a, o)
}

fn build(alg: &FreeAlgebra<ResidueRing>, terms: &[(u64, Vec<u8>)]) -> Poly<ResidueRing> {
    alg.from_terms(terms.iter().map(|(c, w)| (alg.ring().from_u64(*c), Word::from_letters(w))).collect())
}

fn ideal_strategy() -> impl Strategy<Value = Vec<Vec<(u64, Vec<u8>)>>> {
    prop::collection::vec(prop::collection::vec((1u64..30, prop::collection::vec(0u8..2, 0..=2)), 1..=2), 1..=2)
}

fn words() -> Vec<Word> {
    let mut out = vec![Word::one()];
    for l in 0..2u8 {
        out.push(Word::from_letters(&[l]));
        for k in 0..2u8 {
            out.push(Word::from_letters(&[l, k]));
        }
    }
    out
}

#[test]
fn prime_power_is_rejected() {
    let a = alg(12);
    let g = vec![build(&a, &[(1, vec![0])])];
    assert_eq!(gb_zmod(&a, &g, D).unwrap_err(), Error::PrimePowerModulus(12));
    assert!(matches!(plan_modulus(9), Err(Error::PrimePowerModulus(9))));
}

#[test]
fn constant_two_mod_six() {
    let a = alg(6);
    let res = gb_zmod(&a, &[build(&a, &[(2, vec![])])], D).unwrap();
    for w in words() {
        for c in 1..6u64 {
            let e = a.monomial(c, w.clone());
            let zero = normal_form(&a, &e, &res.basis, false).is_zero();
            assert_eq!(zero, c % 2 == 0, "{c}*{}", a.render_word(&w));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn projections_and_membership(m in prop::sample::select(vec![6u64, 10, 15, 30]), gens in ideal_strategy()) {
        let a = alg(m);
        let gens: Vec<_> = gens.iter().map(|t| build(&a, t)).filter(|g: &Poly<ResidueRing>| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let res = gb_zmod(&a, &gens, D).unwrap();
        for p in plan_modulus(m).unwrap().factors {
            let fa = a.with_ring(ResidueRing::new(p).unwrap());
            let proj: Vec<_> = res.basis.iter().map(|g| a.map_into(&fa, g, |c| c % p)).filter(|g: &Poly<ResidueRing>| !g.is_zero()).collect();
            let pg: Vec<_> = gens.iter().map(|g| a.map_into(&fa, g, |c| c % p)).collect();
            let leaf = gb_mod_prime(&fa, &pg, p, D).unwrap();
            prop_assert!(gb_equivalent(&fa, &proj, &leaf, D), "projection mod {} differs", p);
        }
        for g in &gens {
            for l in words() {
                for r in words() {
                    if l.len() + r.len() + g.max_len() > D {
                        continue;
                    }
                    let e = a.apply(&Bimonomial::new(l.clone(), r), g);
                    for c in 1..m {
                        let e = a.scale(&c, &e);
                        prop_assert!(normal_form(&a, &e, &res.basis, false).is_zero(), "{} survives", a.render(&e));
                    }
                }
            }
        }
    }
}
