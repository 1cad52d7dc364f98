mod common;

use extset::invariants::{
    covering_number, degree_profile, is_intersecting, is_trivial, matching_number, min_t_degree,
    t_degree_table,
};
use extset::search::{canonical_form, canonical_labeling};
use extset::Family;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_family(rng: &mut impl Rng, n: usize, k: usize, p: f64) -> Family {
    let m: Vec<u64> = common::universe(n, k)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    common::to_family(n, k, &m)
}

fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// 1-indexed images, as `Family::relabel` wants them.
fn one_indexed(p: &[usize]) -> Vec<usize> {
    p.iter().map(|x| x + 1).collect()
}

fn arb_family() -> impl Strategy<Value = Family> {
    (3usize..=9)
        .prop_flat_map(|n| (Just(n), 1usize..=n.min(4)))
        .prop_flat_map(|(n, k)| {
            let uni = common::universe(n, k);
            let len = uni.len();
            (Just(n), Just(k), proptest::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(n, k, keep)| {
            let uni = common::universe(n, k);
            let m: Vec<u64> = uni.iter().zip(keep).filter(|(_, b)| *b).map(|(m, _)| *m).collect();
            common::to_family(n, k, &m)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn handshake(f in arb_family()) {
        let d = degree_profile(&f);
        prop_assert_eq!(d.degrees.iter().sum::<usize>(), f.k() * f.len());
        prop_assert_eq!(d.degrees, common::degrees(f.n(), &common::masks(&f)));
    }

    #[test]
    fn t_degree_sum(f in arb_family(), t in 1usize..=3) {
        prop_assume!(t <= f.k());
        let table = t_degree_table(&f, t).unwrap();
        let total: u64 = table.iter().map(|&x| x as u64).sum();
        prop_assert_eq!(total, common::binom(f.k() as u64, t as u64) * f.len() as u64);
        prop_assert_eq!(
            min_t_degree(&f, t).unwrap().min,
            common::min_t_degree(f.n(), t, &common::masks(&f))
        );
    }

    #[test]
    fn matching_and_cover_chain(f in arb_family()) {
        prop_assume!(!f.is_empty());
        let nu = matching_number(&f);
        let tau = covering_number(&f).unwrap();
        prop_assert!(nu <= tau && tau <= f.k() * nu, "nu {} tau {}", nu, tau);
    }

    #[test]
    fn predicates_agree_with_oracle(f in arb_family()) {
        let m = common::masks(&f);
        prop_assert_eq!(is_intersecting(&f), common::intersecting(&m));
        if !f.is_empty() {
            prop_assert_eq!(is_trivial(&f).unwrap(), common::trivial(&m));
        }
    }
}

#[test]
fn nu_and_tau_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.gen_range(4..=9);
        let k = rng.gen_range(1..=n.min(4));
        let p = rng.gen_range(0.05..0.6);
        let f = random_family(&mut rng, n, k, p);
        if f.is_empty() {
            continue;
        }
        let m = common::masks(&f);
        assert_eq!(matching_number(&f), common::matching_number(&m), "{f:?}");
        assert_eq!(covering_number(&f).unwrap(), common::covering_number(n, &m), "{f:?}");
    }
}

#[test]
fn canonical_form_ignores_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=12);
        let k = rng.gen_range(1..=n.min(4));
        let p = rng.gen_range(0.02..0.5);
        let f = random_family(&mut rng, n, k, p);
        let g = f.relabel(&one_indexed(&random_perm(&mut rng, n))).unwrap();
        assert_eq!(canonical_form(&f).unwrap(), canonical_form(&g).unwrap(), "{f:?}");
    }
}

#[test]
fn canonical_labeling_maps_onto_a_fixed_family() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(4..=10);
        let k = rng.gen_range(2..=n.min(4));
        let f = random_family(&mut rng, n, k, 0.3);
        let g = f.relabel(&one_indexed(&random_perm(&mut rng, n))).unwrap();
        let (lf, lg) = (canonical_labeling(&f).unwrap(), canonical_labeling(&g).unwrap());
        let (cf, cg) = (f.relabel(&lf.perm).unwrap(), g.relabel(&lg.perm).unwrap());
        let mut a = common::masks(&cf);
        let mut b = common::masks(&cg);
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}

#[test]
fn canonical_equality_is_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 3..=6 {
        let perms = common::permutations(n);
        for _ in 0..150 {
            let k = rng.gen_range(1..=n.min(3));
            let p = rng.gen_range(0.1..0.6);
            let f = random_family(&mut rng, n, k, p);
            // Half the time a relabeled copy, otherwise an unrelated family
            // of the same size (which is often still isomorphic for small n).
            let g = if rng.gen_bool(0.5) {
                f.relabel(&one_indexed(&random_perm(&mut rng, n))).unwrap()
            } else {
                let mut uni = common::universe(n, k);
                uni.shuffle(&mut rng);
                uni.truncate(f.len());
                common::to_family(n, k, &uni)
            };
            let brute = common::brute_canonical(n, &common::masks(&f), &perms)
                == common::brute_canonical(n, &common::masks(&g), &perms);
            let fast = canonical_form(&f).unwrap() == canonical_form(&g).unwrap();
            assert_eq!(fast, brute, "{f:?} vs {g:?}");
        }
    }
}
