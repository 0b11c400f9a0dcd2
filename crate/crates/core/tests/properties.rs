//! Property-based checks: parser round-trips over randomly generated
//! presentations, algebraic identities over a pool of groups, and table
//! invariants over random abelian constructions.

use proptest::prelude::*;

use outc_core::abelian::{elementary_divisors, prime_power};
use outc_core::automorphism::enumerate_class_preserving;
use outc_core::construct;
use outc_core::group::parse_table_str;
use outc_core::presentation::{parse_presentation, Presentation, Word};
use outc_core::structure::{exponent, minimal_generating_tuple};
use outc_core::GroupTable;

fn word_strategy(ngens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..ngens, prop_oneof![-4i64..0, 1i64..=4]), 1..6)
        .prop_map(|f| Word::from_factors(&f))
        .prop_filter("relator must not normalize away", |w| !w.is_identity())
}

fn presentation_strategy() -> impl Strategy<Value = Presentation> {
    (1..=4usize)
        .prop_flat_map(|ngens| {
            let gens: Vec<String> = (0..ngens).map(|i| format!("g{i}")).collect();
            prop::collection::vec(word_strategy(ngens), 1..6)
                .prop_map(move |relators| Presentation { gens: gens.clone(), relators })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rendered_presentations_reparse_identically(pres in presentation_strategy()) {
        let text = pres.to_string();
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(back.gens, pres.gens);
        prop_assert_eq!(back.relators, pres.relators);
    }

    #[test]
    fn random_abelian_tables_behave(
        factors in prop::collection::vec(2..=6usize, 1..4)
            .prop_filter("generating-tuple search caps at order 64", |f| {
                f.iter().product::<usize>() <= 64
            })
    ) {
        let t = construct::abelian(&factors);
        prop_assert!(t.is_abelian());

        // Serialization round-trips.
        let back = parse_table_str(&t.to_table_string()).unwrap();
        prop_assert_eq!(back.order(), t.order());

        // Elementary divisors multiply back to the order and ascend as
        // prime powers.
        let members: Vec<usize> = (0..t.order()).collect();
        let divisors = elementary_divisors(&t, &members).unwrap();
        let product: usize = divisors.iter().product();
        prop_assert_eq!(product, t.order());
        for w in divisors.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        for &d in &divisors {
            prop_assert!(prime_power(d).is_some());
        }

        // The exponent is the largest divisor and every element obeys it.
        let e = exponent(&t);
        prop_assert_eq!(e, divisors.iter().fold(1, |acc, &d| num_lcm(acc, d)));
        for x in 0..t.order() {
            prop_assert_eq!(t.pow(x, e as i64), 0);
        }

        // Conjugation never moves anything, so the class-preserving
        // enumeration finds only the identity.
        let gens = minimal_generating_tuple(&t).unwrap();
        let autc = enumerate_class_preserving(&t, &gens).unwrap();
        prop_assert_eq!(autc.len(), 1);
    }
}

fn num_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

fn pool() -> Vec<GroupTable> {
    vec![
        construct::dihedral(8),
        construct::dicyclic(2),
        construct::metacyclic(3, 2, 0, 2).unwrap(), // S3
        construct::dicyclic(3),
        construct::heisenberg(3),
        construct::semidihedral(4),
        construct::cyclic(12),
        construct::abelian(&[4, 2]),
        construct::dihedral(16),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn commutator_identities(which in 0..9usize, seed in any::<u64>()) {
        let t = &pool()[which];
        let n = t.order();
        let x = (seed % n as u64) as usize;
        let y = ((seed / 7) % n as u64) as usize;
        let z = ((seed / 131) % n as u64) as usize;

        // [x, y]^-1 = [y, x]
        prop_assert_eq!(t.inv(t.commutator(x, y)), t.commutator(y, x));
        // x^y = x * [x, y]
        prop_assert_eq!(t.conj(x, y), t.mul(x, t.commutator(x, y)));
        // [x*y, z] = [x, z]^y * [y, z]
        let lhs = t.commutator(t.mul(x, y), z);
        let rhs = t.mul(t.conj(t.commutator(x, z), y), t.commutator(y, z));
        prop_assert_eq!(lhs, rhs);
        // Orbit-stabilizer for x.
        let classes = t.conjugacy_classes();
        let class_size = classes.classes[classes.class_of[x]].len();
        prop_assert_eq!(class_size * t.centralizer(x).len(), n);
        // Element orders divide the group order.
        prop_assert_eq!(n % t.element_order(x), 0);
        prop_assert_eq!(t.pow(x, t.element_order(x) as i64), 0);
    }

    #[test]
    fn closures_are_subgroups(which in 0..9usize, picks in prop::collection::vec(any::<u64>(), 1..4)) {
        let t = &pool()[which];
        let n = t.order();
        let gens: Vec<usize> = picks.iter().map(|&s| (s % n as u64) as usize).collect();
        let sub = t.closure(&gens);
        // Closed under product and inverse.
        for &a in sub.members() {
            prop_assert!(sub.contains(t.inv(a)));
            for &b in sub.members() {
                prop_assert!(sub.contains(t.mul(a, b)));
            }
        }
        // Lagrange.
        prop_assert_eq!(n % sub.len(), 0);
    }
}
