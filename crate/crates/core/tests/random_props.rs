//! Randomized checks of the arithmetic helpers and the cohomology formulas
//! against brute-force enumeration.

use num_traits::ToPrimitive;
use proptest::prelude::*;
use tameram::arith::{self, Nat};
use tameram::cyccoh::CyclicAction;

/// A valid action `(m, n, a)` plus a parameter `x` in `0..m`.
fn action_with_parameter(m_max: u64, n_max: u64) -> impl Strategy<Value = (CyclicAction, u64)> {
    (1..=m_max, 1..=n_max)
        .prop_flat_map(|(m, n)| {
            let units: Vec<u64> =
                (1..=m).filter(|&a| CyclicAction::from_u64(m, n, a).is_ok()).collect();
            let count = units.len();
            (Just(m), Just(n), Just(units), 0..count, 0..m)
        })
        .prop_map(|(m, n, units, i, x)| (CyclicAction::from_u64(m, n, units[i]).unwrap(), x))
}

fn as_u64(x: &Nat) -> u64 {
    x.to_u64().expect("test values fit in u64")
}

proptest! {
    #[test]
    fn linear_congruences_enumerate_their_full_solution_set(
        a in 0u64..60,
        b in 0u64..60,
        m in 1u64..60,
    ) {
        let brute: Vec<u64> = (0..m).filter(|x| (a * x) % m == b % m).collect();
        match arith::solve_linear_congruence(&Nat::from(a), &Nat::from(b), &Nat::from(m)).unwrap() {
            None => prop_assert!(brute.is_empty()),
            Some(sol) => {
                let base = as_u64(&sol.base);
                let step = as_u64(&sol.step);
                prop_assert!(step >= 1 && m % step == 0);
                let generated: Vec<u64> = (base..m).step_by(step as usize).collect();
                prop_assert_eq!(brute, generated);
            }
        }
    }

    #[test]
    fn geometric_sums_match_the_naive_sum(a in 0u64..100, n in 0u64..40, m in 1u64..100) {
        let mut naive = 0u64;
        let mut power = 1u64 % m;
        for _ in 0..n {
            naive = (naive + power) % m;
            power = (power * a) % m;
        }
        let fast = arith::geometric_sum_mod(&Nat::from(a), n, &Nat::from(m)).unwrap();
        prop_assert_eq!(as_u64(&fast), naive);
    }

    #[test]
    fn additive_orders_are_least_annihilators(x in 0u64..80, m in 1u64..80) {
        let ord = as_u64(&arith::additive_order(&Nat::from(x), &Nat::from(m)).unwrap());
        prop_assert!(ord >= 1 && m % ord == 0);
        prop_assert_eq!((x * ord) % m, 0);
        for d in 1..ord {
            prop_assert_ne!((x * d) % m, 0, "x={} m={} d={}", x, m, d);
        }
    }

    #[test]
    fn prime_powers_factor_and_mixed_composites_do_not(
        pi in 0usize..6,
        qi in 0usize..6,
        r in 1u32..5,
    ) {
        const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
        let p = PRIMES[pi];
        let pp = arith::factor_prime_power(p.pow(r)).unwrap().unwrap();
        prop_assert_eq!((pp.q(), pp.p(), pp.r()), (p.pow(r), p, r));
        let q = PRIMES[qi];
        if p != q {
            prop_assert!(arith::factor_prime_power(p * q).unwrap().is_none());
        }
    }

    #[test]
    fn cohomology_formulas_match_independent_counts(
        (action, _) in action_with_parameter(48, 8),
    ) {
        let m = as_u64(action.m());
        let a = as_u64(action.a());
        let s = as_u64(&action.norm_sum());

        let kernel_of = |mult: u64| (0..m).filter(|x| (mult * x) % m == 0).count() as u64;
        let image_of = |mult: u64| {
            let mut values: Vec<u64> = (0..m).map(|x| (mult * x) % m).collect();
            values.sort_unstable();
            values.dedup();
            values.len() as u64
        };

        let twist = (a + m - 1) % m;
        prop_assert_eq!(as_u64(&action.h1_order()), kernel_of(s) / image_of(twist));
        prop_assert_eq!(as_u64(&action.h2_order()), kernel_of(twist) / image_of(s));
    }

    #[test]
    fn classes_canonicalize_and_trivialising_multipliers_form_a_lattice(
        (action, raw) in action_with_parameter(24, 6),
    ) {
        let m = as_u64(action.m());
        let a = as_u64(action.a());
        // Classes only exist for action-fixed parameters, the multiples of
        // m / gcd(a - 1, m); fold the raw sample onto that submodule.
        let fixed_count = arith::gcd(&Nat::from((a + m - 1) % m), &Nat::from(m));
        let x = (raw % as_u64(&fixed_count)) * (m / as_u64(&fixed_count));

        let d = as_u64(&action.norm_image_generator());
        let class = action.class_of(&Nat::from(x)).unwrap();

        prop_assert_eq!(as_u64(class.rep()), x % d);
        let translated = action.class_of(&Nat::from(x + d)).unwrap();
        prop_assert_eq!(class.rep(), translated.rep());

        let rep = as_u64(class.rep());
        let order = as_u64(&arith::additive_order(&Nat::from(rep), &Nat::from(d)).unwrap());
        prop_assert_eq!(as_u64(&class.order()), order);

        let kill = as_u64(&arith::additive_order(&Nat::from(rep), &Nat::from(m)).unwrap());
        let trivialising: Vec<u64> =
            (1..=2 * m).filter(|&c| class.inflate(c).unwrap().is_trivial()).collect();
        prop_assert!(trivialising.contains(&kill));
        let least = trivialising[0];
        prop_assert!(least % order == 0 && kill % least == 0);
        let multiples: Vec<u64> = (1..=2 * m).filter(|c| c % least == 0).collect();
        prop_assert_eq!(trivialising, multiples);
    }
}
