use proptest::prelude::*;

use picard::chartab::block_data;
use picard::cyclo::{check_root_sum, in_2m_o, CycNum, RootSumVerdict};
use picard::groups::SignedPerm;
use picard::isometry::{is_perfect, perf_enumerate, PerfectnessChecker, SignedBijection};

const CONDUCTORS: [u32; 5] = [4, 8, 12, 15, 24];

fn cyc(cond: u32) -> impl Strategy<Value = CycNum> {
    let phi = picard::cyclo::ring(cond).phi();
    prop::collection::vec(-20i64..=20, phi).prop_map(move |c| CycNum::from_int_coords(cond, &c))
}

fn triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (cyc(n), cyc(n), cyc(n)))
}

fn units(n: u32) -> Vec<i64> {
    (1..n as i64).filter(|g| num_integer::gcd(*g, n as i64) == 1).collect()
}

fn signed_perm(k: usize) -> impl Strategy<Value = SignedPerm> {
    (Just((0..k).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(prop::bool::ANY, k))
        .prop_map(|(p, s)| SignedPerm::new(p, s.iter().map(|&b| if b { -1 } else { 1 }).collect()).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &CycNum::one(a.conductor()), a.clone());
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(&a * &inv, CycNum::one(a.conductor()));
        }
    }

    #[test]
    fn galois_is_a_ring_automorphism((a, b, _) in triple(), pick in any::<prop::sample::Index>()) {
        let u = units(a.conductor());
        let g = u[pick.index(u.len())];
        prop_assert_eq!((&a * &b).galois(g), &a.galois(g) * &b.galois(g));
        prop_assert_eq!((&a + &b).galois(g), &a.galois(g) + &b.galois(g));
    }

    #[test]
    fn membership_is_galois_stable((a, _, _) in triple(), m in 0u32..4, shift in 0u32..3, pick in any::<prop::sample::Index>()) {
        let scaled = &a * &CycNum::from_int(a.conductor(), 1 << shift);
        let u = units(a.conductor());
        let g = u[pick.index(u.len())];
        prop_assert_eq!(in_2m_o(&scaled, m), in_2m_o(&scaled.galois(g), m));
        prop_assert!(in_2m_o(&scaled, shift));
    }

    #[test]
    fn root_sums_obey_the_dichotomy(n in 1u32..=3, m in 1u32..=2, seed in prop::collection::vec(0i64..64, 4)) {
        let ex: Vec<i64> = seed.into_iter().take(1 << m).collect();
        let v = check_root_sum(n, m, &ex);
        prop_assert_ne!(v, RootSumVerdict::Counterexample);
        let shifted: Vec<i64> = ex.iter().map(|l| l + 1).collect();
        prop_assert_eq!(v, check_root_sum(n, m, &shifted));
    }

    #[test]
    fn perfect_maps_form_a_group(x in signed_perm(4), y in signed_perm(4)) {
        let b = block_data(&"G(1)".parse().unwrap()).unwrap();
        let c = PerfectnessChecker::new(&b, &b).unwrap();
        let verdict = is_perfect(&SignedBijection::new(&b, &b, x.clone()).unwrap()).unwrap();
        prop_assert_eq!(verdict.perfect, c.is_perfect(&x));
        prop_assert_eq!(verdict.perfect, verdict.diagnostic.is_none());
        if c.is_perfect(&x) {
            prop_assert!(c.is_perfect(&x.inverse()));
            if c.is_perfect(&y) {
                prop_assert!(c.is_perfect(&x.compose(&y)));
            }
        }
    }
}

#[test]
fn enumerated_maps_are_perfect() {
    let b = block_data(&"G(1)".parse().unwrap()).unwrap();
    let g = perf_enumerate(&b).unwrap().group;
    let c = PerfectnessChecker::new(&b, &b).unwrap();
    assert!(g.elements.iter().all(|x| c.is_perfect(x)));
    assert!(g.contains(&SignedPerm::identity(4)));
}
