//! Finite abelian group invariants: cyclic decomposition and counting of
//! homomorphism groups, used for the |Hom(G/G′, Z(G))| cross-checks.

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};

/// Prime factorization by trial division, ascending primes.
pub fn factor(mut n: usize) -> Vec<(usize, u32)> {
    assert!(n >= 1, "factor(0) is undefined");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` when `n = p^k` for a prime p and k ≥ 1.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    match factor(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Cyclic prime-power invariants (elementary divisors) of the abelian
/// group formed by `members` inside `t`, sorted ascending.  The members
/// must form an abelian subgroup.
///
/// The decomposition is read off from counts: if aᵏ = #{x : x^(p^k) = 1},
/// then log_p(aᵏ) − log_p(aᵏ⁻¹) is the number of cyclic factors of order
/// at least p^k.
pub fn elementary_divisors(t: &GroupTable, members: &[Elem]) -> Result<Vec<usize>> {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if t.mul(a, b) != t.mul(b, a) {
                return Err(Error::Input(format!(
                    "elementary divisors need an abelian group, but elements {a} and {b} \
                     do not commute"
                )));
            }
        }
    }
    let n = members.len();
    let mut divisors = Vec::new();
    for (p, v) in factor(n) {
        let p_part = p.pow(v);
        // at_least[k] = number of cyclic factors of order ≥ p^(k+1)
        let mut at_least = Vec::new();
        let mut prev_log = 0u32;
        let mut pk = 1usize;
        loop {
            pk *= p;
            let count = members
                .iter()
                .filter(|&&x| t.pow(x, pk as i64) == 0)
                .count();
            let log = log_exact(count, p);
            at_least.push(log - prev_log);
            prev_log = log;
            if count == p_part || pk >= p_part {
                break;
            }
        }
        for k in 0..at_least.len() {
            let next = if k + 1 < at_least.len() { at_least[k + 1] } else { 0 };
            for _ in 0..(at_least[k] - next) {
                divisors.push(p.pow(k as u32 + 1));
            }
        }
    }
    divisors.sort_unstable();
    Ok(divisors)
}

fn log_exact(mut n: usize, p: usize) -> u32 {
    let mut k = 0;
    while n > 1 {
        assert!(n % p == 0, "subgroup count {n} is not a power of {p}");
        n /= p;
        k += 1;
    }
    k
}

/// |Hom(A, B)| for abelian groups given by their cyclic invariant lists:
/// the product of gcd(aᵢ, bⱼ) over all pairs.
pub fn hom_count(a: &[usize], b: &[usize]) -> u128 {
    let mut total: u128 = 1;
    for &x in a {
        for &y in b {
            total *= gcd(x, y) as u128;
        }
    }
    total
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// |Aut(A)| for an abelian group given by its elementary divisor list
/// (ascending prime powers, as produced by [`elementary_divisors`]).
///
/// Per prime: for the type p^{e₁} ≤ … ≤ p^{eₙ} with dₖ = max{l : eₗ = eₖ}
/// and cₖ = min{l : eₗ = eₖ},
///
///   |Aut| = ∏ₖ (p^{dₖ} − p^{k−1}) · ∏ⱼ p^{eⱼ·(n−dⱼ)} · ∏ᵢ p^{(eᵢ−1)·(n−cᵢ+1)}
///
/// The automorphism group of the whole abelian group is the direct product
/// over its primary components.
pub fn aut_order_abelian(divisors: &[usize]) -> u128 {
    use std::collections::BTreeMap;
    // Group exponents by prime.
    let mut by_prime: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for &d in divisors {
        let (p, k) = prime_power(d).expect("elementary divisors are prime powers");
        by_prime.entry(p).or_default().push(k);
    }
    let mut total: u128 = 1;
    for (p, mut es) in by_prime {
        es.sort_unstable();
        let n = es.len();
        let p = p as u128;
        let mut d = vec![0usize; n];
        let mut c = vec![0usize; n];
        for k in 0..n {
            d[k] = (0..n).filter(|&l| es[l] == es[k]).max_by_key(|&l| l).unwrap() + 1;
            c[k] = (0..n).find(|&l| es[l] == es[k]).unwrap() + 1;
        }
        for k in 0..n {
            total *= p.pow(d[k] as u32) - p.pow(k as u32);
        }
        for j in 0..n {
            total *= p.pow(es[j] * (n - d[j]) as u32);
        }
        for i in 0..n {
            total *= p.pow((es[i] - 1) * (n - c[i] + 1) as u32);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn divisors_of(t: &GroupTable) -> Vec<usize> {
        let members: Vec<Elem> = (0..t.order()).collect();
        elementary_divisors(t, &members).unwrap()
    }

    #[test]
    fn factorization() {
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factor(243), vec![(3, 5)]);
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(97), Some((97, 1)));
    }

    #[test]
    fn cyclic_decompositions() {
        assert_eq!(divisors_of(&construct::cyclic(1)), vec![]);
        assert_eq!(divisors_of(&construct::cyclic(12)), vec![3, 4]);
        assert_eq!(divisors_of(&construct::abelian(&[2, 4])), vec![2, 4]);
        assert_eq!(divisors_of(&construct::abelian(&[2, 2, 2])), vec![2, 2, 2]);
        assert_eq!(divisors_of(&construct::abelian(&[6, 4])), vec![2, 3, 4]);
        assert_eq!(divisors_of(&construct::abelian(&[9, 3, 3])), vec![3, 3, 9]);
    }

    #[test]
    fn divisors_of_a_subgroup() {
        // The subgroup {1, r^2, s, r^2 s} of D8 is a Klein four-group.
        let d8 = construct::dihedral(8);
        let sub = d8.closure(&[2, 4]);
        assert_eq!(
            elementary_divisors(&d8, sub.members()).unwrap(),
            vec![2, 2]
        );
    }

    #[test]
    fn nonabelian_input_rejected() {
        let d8 = construct::dihedral(8);
        let all: Vec<Elem> = (0..8).collect();
        assert!(elementary_divisors(&d8, &all).is_err());
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom_count(&[2, 2], &[2]), 4);
        assert_eq!(hom_count(&[3, 3], &[3]), 9);
        assert_eq!(hom_count(&[6], &[4]), 2);
        assert_eq!(hom_count(&[], &[8]), 1);
        assert_eq!(hom_count(&[4, 2], &[2, 4]), 2 * 4 * 2 * 2);
    }

    #[test]
    fn hom_count_matches_exhaustive_count_on_cyclic_pairs() {
        // Hom(C_a, C_b) by direct count of valid generator images.
        for a in 1..=12usize {
            for b in 1..=12usize {
                let direct = (0..b).filter(|y| (y * a) % b == 0).count();
                assert_eq!(hom_count(&[a], &[b]), direct as u128, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn aut_order_closed_form_values() {
        assert_eq!(aut_order_abelian(&[]), 1);
        assert_eq!(aut_order_abelian(&[8]), 4); // phi(8)
        assert_eq!(aut_order_abelian(&[2, 2]), 6); // GL(2, 2)
        assert_eq!(aut_order_abelian(&[2, 2, 2]), 168); // GL(3, 2)
        assert_eq!(aut_order_abelian(&[3, 3]), 48); // GL(2, 3)
        assert_eq!(aut_order_abelian(&[2, 3]), 2); // C6
        assert_eq!(aut_order_abelian(&[2, 2, 2, 2, 2]), 9999360); // GL(5, 2)
    }

    #[test]
    fn aut_order_matches_enumeration() {
        // On an abelian group every automorphism is central, so the
        // enumeration of central automorphisms is an exhaustive oracle.
        for factors in [
            vec![2, 2],
            vec![4, 2],
            vec![2, 2, 2],
            vec![8],
            vec![9, 3],
            vec![3, 3],
            vec![4, 4],
            vec![6],
            vec![12],
            vec![2, 6],
        ] {
            let t = construct::abelian(&factors);
            let enumerated = crate::automorphism::central_automorphisms(&t).unwrap();
            let formula = aut_order_abelian(&divisors_of(&t));
            assert_eq!(formula, enumerated.len() as u128, "{factors:?}");
        }
    }
}
