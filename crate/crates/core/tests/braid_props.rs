use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use platforge::braid::{braid_equal, BraidWord, Letter};

const SEED: u64 = 0x0b5a_1d00;

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() }
}

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let letters = ls.into_iter().map(|(i, p)| if p { Letter::pos(i) } else { Letter::neg(i) });
            BraidWord::new(n, letters).unwrap()
        })
    })
}

fn pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    word(max_n, max_len).prop_flat_map(move |a| {
        let n = a.strands();
        prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let letters = ls.into_iter().map(|(i, p)| if p { Letter::pos(i) } else { Letter::neg(i) });
            (a.clone(), BraidWord::new(n, letters).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn skew_is_an_involution(b in word(12, 40)) {
        prop_assert_eq!(b.skew().skew(), b);
    }

    #[test]
    fn skew_reverses_products((a, b) in pair(9, 15)) {
        prop_assert_eq!(a.concat(&b).unwrap().skew(), b.skew().concat(&a.skew()).unwrap());
    }

    #[test]
    fn tilde_is_skew_palindromic(b in word(10, 20)) {
        let t = b.tilde();
        prop_assert!(t.is_skew_palindromic());
        prop_assert_eq!(t.len(), 2 * b.len());
        prop_assert!(braid_equal(&t, &t.skew()).unwrap());
    }

    #[test]
    fn permutation_is_a_homomorphism((a, b) in pair(8, 12)) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(ab.permutation(), a.permutation().compose(&b.permutation()).unwrap());
    }

    #[test]
    fn inverse_is_a_group_inverse(b in word(7, 15)) {
        let id = BraidWord::identity(b.strands());
        prop_assert!(braid_equal(&b.concat(&b.inverse()).unwrap(), &id).unwrap());
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn artin_relations_inside_words((a, b) in pair(7, 6), i in 1usize..6) {
        let n = a.strands();
        prop_assume!(i + 1 < n);
        let lhs = BraidWord::new(n, [Letter::pos(i), Letter::pos(i + 1), Letter::pos(i)]).unwrap();
        let rhs = BraidWord::new(n, [Letter::pos(i + 1), Letter::pos(i), Letter::pos(i + 1)]).unwrap();
        let x = a.concat(&lhs).unwrap().concat(&b).unwrap();
        let y = a.concat(&rhs).unwrap().concat(&b).unwrap();
        prop_assert!(braid_equal(&x, &y).unwrap());
        prop_assert_eq!(x.permutation(), y.permutation());
    }
}

#[test]
fn far_commutation() {
    for n in 4..=8 {
        for i in 1..n {
            for j in i + 2..n {
                let a = BraidWord::new(n, [Letter::pos(i), Letter::neg(j)]).unwrap();
                let b = BraidWord::new(n, [Letter::neg(j), Letter::pos(i)]).unwrap();
                assert!(braid_equal(&a, &b).unwrap());
            }
        }
    }
}
