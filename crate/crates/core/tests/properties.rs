use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use dscop::associator::lyndon::{lyndon_eval, lyndon_words};
use dscop::braid_lie::oracle::QuotientOracle;
use dscop::braid_lie::{SmashElem, Tag};
use dscop::freegrp::{gen, gen_inv, Gens, Group, GroupAlgF, GroupWord};
use dscop::morphism_lab::{rho, varpi, varpi_bar, BettiRho};
use dscop::racinet::{circledast, theta};
use dscop::sphere_braid::{p5_alg, pr_group, theta_act, P5Elem};
use dscop::w_algebras::YSeries;
use dscop::{q, Ring, TensorSeries, TruncSeries};

const CAP: usize = 5;

fn config() -> Config {
    Config { cases: 100, rng_seed: RngSeed::Fixed(0xd5c0b), failure_persistence: None, ..Config::default() }
}

fn word(gens: Gens, max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0..gens.rank(), any::<bool>()), 0..=max_len)
        .prop_map(move |v| GroupWord::reduce(gens, &v.into_iter().map(|(i, inv)| if inv { gen_inv(i) } else { gen(i) }).collect::<Vec<_>>()).unwrap())
}

fn p5_elem(max_len: usize) -> impl Strategy<Value = P5Elem> {
    (word(Gens::F2, max_len), word(Gens::F3, max_len)).prop_map(|(f, w)| P5Elem::new(f, w).unwrap())
}

/// `exp` of a Lie series: integer multiples of Lyndon brackets up to length 3.
fn grouplike() -> impl Strategy<Value = TruncSeries> {
    let basis: Vec<Vec<u8>> = (1..=3).flat_map(lyndon_words).collect();
    prop::collection::vec(-2i64..=2, basis.len()).prop_map(move |cs| {
        let (e0, e1) = (TruncSeries::e0(CAP), TruncSeries::e1(CAP));
        let lie = basis.iter().zip(cs).fold(e0.zero_like(), |acc, (w, c)| acc.plus(&lyndon_eval(w, &e0, &e1).scale(&q(c))));
        lie.exp().unwrap()
    })
}

/// Sums of up to three monomials of length <= 3 in `e0, e1`.
fn series() -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec((prop::collection::vec(0u8..2, 0..=3), -3i64..=3), 1..=3).prop_map(|terms| {
        let mut s = TruncSeries::e_zero(CAP);
        for (w, c) in terms {
            s.add_term(w, q(c));
        }
        s
    })
}

fn smash(tag: Tag, cap: usize) -> impl Strategy<Value = SmashElem> {
    let names = SmashElem::all_generator_names(tag);
    let n = names.len();
    prop::collection::vec((prop::collection::vec(0..n, 1..=2), -2i64..=2), 1..=3).prop_map(move |terms| {
        terms.into_iter().fold(SmashElem::zero(tag, cap), |acc, (ix, c)| {
            let m = ix.iter().fold(SmashElem::one(tag, cap), |m, &i| m.times(&SmashElem::generator(tag, cap, names[i]).unwrap()));
            acc.plus(&m.scale(&q(c)))
        })
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn circledast_is_associative(g in grouplike(), h in grouplike(), k in grouplike()) {
        let l = circledast(&circledast(&g, &h).unwrap(), &k).unwrap();
        let r = circledast(&g, &circledast(&h, &k).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn theta_is_a_group_morphism(g in grouplike(), h in grouplike()) {
        let l = theta(&circledast(&g, &h).unwrap()).unwrap();
        let r = circledast(&theta(&g).unwrap(), &theta(&h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn exp_log_round_trip(g in grouplike()) {
        let l = g.log().unwrap();
        prop_assert_eq!(l.exp().unwrap(), g);
    }

    #[test]
    fn series_ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
    }

    #[test]
    fn tensor_legs_commute(a in series(), b in series()) {
        let (l, r) = (TensorSeries::left(&a), TensorSeries::right(&b));
        prop_assert_eq!(l.times(&r), r.times(&l));
    }

    #[test]
    fn harmonic_coproduct_is_multiplicative(a in series(), b in series()) {
        let y = |s: &TruncSeries| YSeries::from_e(&s.times(&TruncSeries::e1(CAP))).unwrap();
        let (ya, yb) = (y(&a), y(&b));
        prop_assert_eq!(ya.times(&yb).delta_star(), ya.delta_star().times(&yb.delta_star()));
    }

    #[test]
    fn fox_identity(w in word(Gens::F3, 12)) {
        prop_assert_eq!(GroupAlgF::fox_recompose(&GroupAlgF::fox_word(&w)), GroupAlgF::minus_one(&w));
    }

    #[test]
    fn theta_action_composes(g in word(Gens::F2, 5), h in word(Gens::F2, 5), w in word(Gens::F3, 5)) {
        prop_assert_eq!(theta_act(&g.mul(&h), &w), theta_act(&h, &theta_act(&g, &w)));
    }

    #[test]
    fn p5_is_a_group(a in p5_elem(4), b in p5_elem(4), c in p5_elem(4)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_identity());
    }

    #[test]
    fn projections_are_homomorphisms(a in p5_elem(4), b in p5_elem(4)) {
        for i in [1, 2, 5] {
            let ab = pr_group(i, &a.mul(&b)).unwrap();
            prop_assert_eq!(ab, pr_group(i, &a).unwrap().mul(&pr_group(i, &b).unwrap()));
        }
    }

    #[test]
    fn varpi_is_multiplicative(a in smash(Tag::P5, 4), b in smash(Tag::P5, 4)) {
        prop_assert_eq!(varpi(&a.times(&b)), varpi(&a).times(&varpi(&b)));
    }

    #[test]
    fn varpi_bar_is_multiplicative(a in p5_elem(3), b in p5_elem(3), c in -2i64..=2) {
        let x = p5_alg(&a).plus(&p5_alg(&b).scale(&q(c)));
        let y = p5_alg(&b);
        prop_assert_eq!(varpi_bar(&x.times(&y)), varpi_bar(&x).times(&varpi_bar(&y)));
    }

    #[test]
    fn rho_is_multiplicative(a in series(), b in series()) {
        prop_assert_eq!(rho(&a.times(&b)), rho(&a).times(&rho(&b)));
    }

    #[test]
    fn rho_bar_is_multiplicative(f in word(Gens::F2, 4), g in word(Gens::F2, 4)) {
        let r = BettiRho::new();
        let (f, g) = (GroupAlgF::minus_one(&f), GroupAlgF::word(&g));
        prop_assert_eq!(r.rho(&f.times(&g)), r.rho(&f).times(&r.rho(&g)));
    }

    #[test]
    fn smash_product_matches_quotient_oracle(a in smash(Tag::P5, 3), b in smash(Tag::P5, 3)) {
        let o = QuotientOracle::new(Tag::P5, 3);
        prop_assert!(o.is_zero(&o.lift(&a.times(&b)).minus(&o.lift(&a).times(&o.lift(&b)))));
    }
}
