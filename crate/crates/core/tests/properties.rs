mod common;

use pnwords::analysis::{
    abelian_complexity, is_prefix_normal, is_prefix_normal_0, is_prenecklace_prefix, min_density,
    pnf0, pnf1, FactorExtremes,
};
use pnwords::generators::{flipext, lazy_alpha_flipext, mechanical_lower};
use pnwords::{compute_profile, FiniteWord, PrefixProfile, Rational, SlopeSpec};
use proptest::prelude::*;

fn words(max_len: usize) -> impl Strategy<Value = FiniteWord> {
    prop::collection::vec(0u8..=1, 1..=max_len).prop_map(|b| FiniteWord::new(b).unwrap())
}

/// Prefix normal words containing a 1, as 1-forms of arbitrary words.
fn prefix_normal_words(max_len: usize) -> impl Strategy<Value = FiniteWord> {
    words(max_len)
        .prop_filter("needs a 1", |w| w.weight() > 0)
        .prop_map(|w| pnf1(&compute_profile(&w).unwrap()))
}

fn profile(w: &FiniteWord) -> PrefixProfile {
    compute_profile(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn forms_are_idempotent(w in words(512)) {
        let p = profile(&w);
        let one = pnf1(&p);
        let zero = pnf0(&p);
        prop_assert_eq!(&pnf1(&profile(&one)), &one);
        prop_assert_eq!(&pnf0(&profile(&zero)), &zero);
        prop_assert!(is_prefix_normal(&one));
        prop_assert!(is_prefix_normal_0(&zero).is_normal());
        // Same maximum-1s resp. maximum-0s function.
        let p1 = profile(&one);
        prop_assert_eq!(p1.max_ones_slice(), p.max_ones_slice());
        let pz = profile(&zero);
        prop_assert!((1..=w.len()).all(|i| pz.max_zeros(i) == p.max_zeros(i)));
    }

    #[test]
    fn forms_sandwich_the_word(w in words(256)) {
        let p = profile(&w);
        let (hi, lo) = (pnf1(&p), pnf0(&p));
        for n in 1..=w.len() {
            let pw = w.prefix_weight(n).unwrap();
            prop_assert!(lo.prefix_weight(n).unwrap() <= pw);
            prop_assert!(pw <= hi.prefix_weight(n).unwrap());
            prop_assert_eq!(hi.prefix_weight(n).unwrap(), p.max_ones(n));
            prop_assert_eq!(lo.prefix_weight(n).unwrap(), p.min_ones(n));
        }
    }

    #[test]
    fn abelian_identity(w in words(512)) {
        let p = profile(&w);
        let vectors = common::parikh_vectors(w.bits());
        for n in 1..=w.len().min(64) {
            let brute = vectors.iter().filter(|(z, o)| z + o == n).count();
            prop_assert_eq!(abelian_complexity(&p, n).unwrap(), brute);
        }
    }

    #[test]
    fn forms_bound_extreme_factors(w in words(300)) {
        let p = profile(&w);
        let (hi, lo) = (pnf1(&p), pnf0(&p));
        let table = FactorExtremes::new(&w);
        for n in 1..=w.len() {
            let max = table.max_word(n).unwrap();
            let min = table.min_word(n).unwrap();
            prop_assert!(max.lex_compare(&hi.prefix(n).unwrap()).is_le());
            prop_assert!(lo.prefix(n).unwrap().lex_compare(&min).is_le());
        }
    }

    #[test]
    fn prefix_normal_implies_prenecklace(w in prefix_normal_words(256)) {
        prop_assert!(is_prenecklace_prefix(&w));
    }

    #[test]
    fn flipext_keeps_density_data(w in prefix_normal_words(64)) {
        let before = min_density(&w).unwrap();
        let mut cur = w;
        for _ in 0..10 {
            cur = flipext(&cur).unwrap();
            prop_assert!(common::prefix_normal(cur.bits()));
            prop_assert_eq!(&min_density(&cur).unwrap(), &before);
        }
    }

    #[test]
    fn lazy_flipext_respects_slope(
        (p, q) in (1i64..20).prop_flat_map(|q| (1..=q, Just(q))),
        w in prefix_normal_words(40),
    ) {
        // The slope may not exceed the seed's minimum density.
        let ratio = Rational::from_ratio(p, q).min(min_density(&w).unwrap().delta);
        let alpha = SlopeSpec::Rational(ratio.clone());
        let next = lazy_alpha_flipext(&w, &alpha).unwrap();
        let without_one = next.prefix(next.len() - 1).unwrap();
        prop_assert!(min_density(&without_one).unwrap().delta >= ratio);
        // One more 0 would push the density below the slope.
        let longer = without_one.concat(&FiniteWord::zeros(1));
        prop_assert!(min_density(&longer).unwrap().delta < ratio);
    }

    #[test]
    fn rational_mechanical_matches_integer_floor(
        (p, q) in (1i64..30).prop_flat_map(|q| (0..=q, Just(q))),
        n in 1usize..200,
    ) {
        let alpha = SlopeSpec::rational(p, q).unwrap();
        let w = mechanical_lower(&alpha, &Rational::zero(), n).unwrap();
        let want: Vec<u8> =
            (1..=n as i64).map(|k| ((p * k) / q - (p * (k - 1)) / q) as u8).collect();
        prop_assert_eq!(w.bits(), &want[..]);
    }

    #[test]
    fn profile_arrays_round_trip(w in words(128)) {
        let p = profile(&w);
        let again = PrefixProfile::from_arrays(p.max_ones_slice(), p.min_ones_slice()).unwrap();
        prop_assert_eq!(again, p);
    }
}
