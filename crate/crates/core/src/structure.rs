//! Structural invariants: center, derived and lower central series,
//! Frattini subgroup, minimal generation, commutator sets, Camina pairs,
//! and the abelian-subgroup searches the automorphism analysis leans on.
//!
//! Everything here is a pure function of an immutable [`GroupTable`].
//! Where a p-group shortcut exists (Frattini via G′Gᵖ, generation via the
//! basis theorem) it is used, but cross-checked against a definition-level
//! computation at small orders so the shortcut never goes unvalidated.

use std::collections::BTreeSet;

use crate::abelian::{self, prime_power};
use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable, SubgroupSet};

/// Elements commuting with everything.
pub fn center(t: &GroupTable) -> SubgroupSet {
    let n = t.order();
    let members: Vec<Elem> = (0..n)
        .filter(|&x| (0..n).all(|y| t.mul(x, y) == t.mul(y, x)))
        .collect();
    SubgroupSet::trusted(n, members)
}

/// G′ = ⟨[a,b] : a, b ∈ G⟩.
pub fn derived_subgroup(t: &GroupTable) -> SubgroupSet {
    let n = t.order();
    let mut comms: Vec<Elem> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            comms.push(t.commutator(a, b));
        }
    }
    comms.sort_unstable();
    comms.dedup();
    t.closure(&comms)
}

/// γ₁ = G, γᵢ₊₁ = ⟨[γᵢ, G]⟩, computed until the series stabilizes.  The
/// last entry is trivial exactly when the group is nilpotent; a
/// non-nilpotent group's series ends at its stable term.
pub fn lower_central_series(t: &GroupTable) -> Vec<SubgroupSet> {
    let n = t.order();
    let mut series = vec![SubgroupSet::trusted(n, (0..n).collect())];
    loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let mut gens: Vec<Elem> = Vec::new();
        for &x in last.members() {
            for g in 0..n {
                gens.push(t.commutator(x, g));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let next = t.closure(&gens);
        if next.len() == last.len() {
            break;
        }
        series.push(next);
    }
    series
}

/// Nilpotency class, or `None` for a non-nilpotent group.
pub fn nilpotency_class(t: &GroupTable) -> Option<usize> {
    let series = lower_central_series(t);
    if series.last().unwrap().is_trivial() {
        Some(series.len() - 1)
    } else {
        None
    }
}

/// A small (not necessarily minimal) generating set, grown greedily by
/// adjoining the smallest outside element.  Each step at least doubles the
/// subgroup, so the result has at most log₂|G| elements.
pub fn greedy_generating_set(t: &GroupTable) -> Vec<Elem> {
    let n = t.order();
    let mut gens: Vec<Elem> = Vec::new();
    let mut h = t.closure(&[]);
    while h.len() < n {
        let x = (0..n).find(|&x| !h.contains(x)).unwrap();
        gens.push(x);
        h = t.closure(&gens);
    }
    gens
}

/// All homomorphisms G → Z/m, returned as value vectors, enumerated from
/// images of `gens` (which must generate).  Candidate images are pruned to
/// those whose additive order divides the generator's order; each
/// surviving tuple is extended over the Cayley graph with every edge
/// checked for consistency.
fn homs_to_cyclic(t: &GroupTable, gens: &[Elem], m: usize) -> Vec<Vec<u32>> {
    let n = t.order();
    if gens.is_empty() {
        return vec![vec![0; n]];
    }
    let allowed: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            let ord = t.element_order(g);
            (0..m as u32).filter(|&c| (c as usize * ord) % m == 0).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    'tuples: loop {
        let images: Vec<u32> = idx.iter().zip(&allowed).map(|(&i, a)| a[i]).collect();
        if let Some(f) = extend_to_cyclic(t, gens, &images, m) {
            out.push(f);
        }
        // odometer over the allowed lists
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < allowed[k].len() {
                continue 'tuples;
            }
            idx[k] = 0;
        }
        break;
    }
    out
}

fn extend_to_cyclic(
    t: &GroupTable,
    gens: &[Elem],
    images: &[u32],
    m: usize,
) -> Option<Vec<u32>> {
    const UNSET: u32 = u32::MAX;
    let n = t.order();
    let mut f = vec![UNSET; n];
    f[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &g) in gens.iter().enumerate() {
            let y = t.mul(x, g);
            let v = (f[x] + images[i]) % m as u32;
            if f[y] == UNSET {
                f[y] = v;
                queue.push(y);
            } else if f[y] != v {
                return None;
            }
        }
    }
    debug_assert_eq!(queue.len(), n, "generators fail to generate");
    Some(f)
}

/// Φ(G).  For p-groups this is ⟨G′, xᵖ⟩, cross-checked at order ≤ 512
/// against the intersection of the maximal subgroups, where the maximal
/// subgroups are recovered independently as kernels of the nontrivial
/// homomorphisms onto C_p.  Other groups use the subgroup lattice.
pub fn frattini(t: &GroupTable) -> Result<SubgroupSet> {
    let n = t.order();
    if n == 1 {
        return Ok(t.closure(&[]));
    }
    match prime_power(n) {
        Some((p, _)) => {
            let mut gens: Vec<Elem> = derived_subgroup(t).members().to_vec();
            for x in 0..n {
                gens.push(t.pow(x, p as i64));
            }
            gens.sort_unstable();
            gens.dedup();
            let phi = t.closure(&gens);

            if n <= 512 {
                let dual = frattini_from_hom_kernels(t, p);
                assert_eq!(
                    phi.members(),
                    dual.members(),
                    "Frattini computations disagree: ⟨G', G^p⟩ vs maximal-subgroup \
                     intersection"
                );
            }
            Ok(phi)
        }
        None => {
            let subs = all_subgroups(t)?;
            let maximals = maximal_of(&subs);
            Ok(intersect_all(t, &maximals))
        }
    }
}

fn frattini_from_hom_kernels(t: &GroupTable, p: usize) -> SubgroupSet {
    let n = t.order();
    let gens = greedy_generating_set(t);
    let mut mask = vec![true; n];
    for f in homs_to_cyclic(t, &gens, p) {
        if f.iter().all(|&v| v == 0) {
            continue;
        }
        for x in 0..n {
            if f[x] != 0 {
                mask[x] = false;
            }
        }
    }
    let members: Vec<Elem> = (0..n).filter(|&x| mask[x]).collect();
    SubgroupSet::trusted(n, members)
}

fn maximal_of(subs: &[SubgroupSet]) -> Vec<SubgroupSet> {
    subs.iter()
        .filter(|s| !s.is_whole_group())
        .filter(|s| {
            !subs
                .iter()
                .any(|o| !o.is_whole_group() && s.is_proper_subset_of(o))
        })
        .cloned()
        .collect()
}

fn intersect_all(t: &GroupTable, subs: &[SubgroupSet]) -> SubgroupSet {
    let n = t.order();
    let mut acc = SubgroupSet::trusted(n, (0..n).collect());
    for s in subs {
        acc = acc.intersection(s);
    }
    acc
}

/// Every subgroup, found by closing each known subgroup with each outside
/// element.  Guarded by an order cap and a lattice-size cap; intended for
/// small groups only.
pub fn all_subgroups(t: &GroupTable) -> Result<Vec<SubgroupSet>> {
    const LATTICE_CAP: usize = 100_000;
    let n = t.order();
    if n > 512 {
        return Err(Error::OrderCap { order: n, cap: 512 });
    }
    let trivial = t.closure(&[]);
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    seen.insert(trivial.members().to_vec());
    // Each entry carries a generating set so closures stay cheap.
    let mut work: Vec<(Vec<Elem>, SubgroupSet)> = vec![(Vec::new(), trivial)];
    let mut out = Vec::new();
    while let Some((gens, sub)) = work.pop() {
        for x in 0..n {
            if sub.contains(x) {
                continue;
            }
            let mut g2 = gens.clone();
            g2.push(x);
            let bigger = t.closure(&g2);
            if seen.insert(bigger.members().to_vec()) {
                if seen.len() > LATTICE_CAP {
                    return Err(Error::Table(format!(
                        "subgroup lattice exceeds {LATTICE_CAP} subgroups"
                    )));
                }
                work.push((g2, bigger));
            }
        }
        out.push(sub);
    }
    out.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    Ok(out)
}

/// A minimal-size generating tuple, deterministic.  For p-groups the basis
/// theorem applies: elements chosen greedily outside Φ(G) and the running
/// span, exactly d(G) = log_p(|G|/|Φ|) of them.  Other groups (order ≤ 64)
/// fall back to exhaustive search over tuples in ascending order.
pub fn minimal_generating_tuple(t: &GroupTable) -> Result<Vec<Elem>> {
    let n = t.order();
    if n == 1 {
        return Ok(Vec::new());
    }
    if let Some((p, _)) = prime_power(n) {
        let phi = frattini(t)?;
        let d = abelian::factor(n / phi.len())
            .first()
            .map(|&(_, k)| k as usize)
            .unwrap_or(0);
        let mut tuple: Vec<Elem> = Vec::new();
        let mut span = phi.clone();
        while !span.is_whole_group() {
            let x = (0..n).find(|&x| !span.contains(x)).unwrap();
            tuple.push(x);
            let mut seed = span.members().to_vec();
            seed.push(x);
            span = t.closure(&seed);
        }
        assert_eq!(
            tuple.len(),
            d,
            "generating tuple length disagrees with log_p(|G|/|Φ|)"
        );
        assert_eq!(n / phi.len(), p.pow(d as u32));
        assert!(
            t.closure(&tuple).is_whole_group(),
            "basis-theorem tuple fails to generate on its own"
        );
        return Ok(tuple);
    }
    if n > 64 {
        return Err(Error::OrderCap { order: n, cap: 64 });
    }
    for size in 1..=n {
        let mut tuple = vec![0usize; size];
        if let Some(found) = search_tuple(t, &mut tuple, 0, 1) {
            return Ok(found);
        }
    }
    unreachable!("the whole group always generates itself");
}

fn search_tuple(
    t: &GroupTable,
    tuple: &mut Vec<Elem>,
    pos: usize,
    start: Elem,
) -> Option<Vec<Elem>> {
    if pos == tuple.len() {
        return if t.closure(tuple).is_whole_group() {
            Some(tuple.clone())
        } else {
            None
        };
    }
    for x in start..t.order() {
        tuple[pos] = x;
        if let Some(found) = search_tuple(t, tuple, pos + 1, x + 1) {
            return Some(found);
        }
    }
    None
}

/// d(G): size of a minimal generating set.
pub fn rank_d(t: &GroupTable) -> Result<usize> {
    Ok(minimal_generating_tuple(t)?.len())
}

/// lcm of all element orders.
pub fn exponent(t: &GroupTable) -> usize {
    let mut e: usize = 1;
    for x in 0..t.order() {
        let o = t.element_order(x);
        e = e / gcd(e, o) * o;
    }
    e
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// [x,G] = {[x,g] : g ∈ G}, sorted.  Always the same size as the
/// conjugacy class of x ([x,g] = x⁻¹·xᵍ), which is asserted.
pub fn commutator_set(t: &GroupTable, x: Elem) -> Vec<Elem> {
    let n = t.order();
    let mut set: Vec<Elem> = (0..n).map(|g| t.commutator(x, g)).collect();
    set.sort_unstable();
    set.dedup();
    let mut class: Vec<Elem> = (0..n).map(|g| t.conj(x, g)).collect();
    class.sort_unstable();
    class.dedup();
    assert_eq!(
        set.len(),
        class.len(),
        "|[x,G]| differs from |x^G| — table is corrupt"
    );
    set
}

/// Verdict for the Camina-pair condition H ⊆ [x,G] for all x ∈ G − H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaminaVerdict {
    pub holds: bool,
    /// On failure: (x, z) with x ∈ G − H and z ∈ H but z ∉ [x,G].
    pub witness: Option<(Elem, Elem)>,
}

/// Decide whether (G, H) is a Camina pair.  H must be a proper,
/// non-trivial normal subgroup.
pub fn is_camina_pair(t: &GroupTable, h: &SubgroupSet) -> Result<CaminaVerdict> {
    if h.parent_order() != t.order() {
        return Err(Error::Input("subgroup belongs to a different group".into()));
    }
    if h.is_trivial() || h.is_whole_group() {
        return Err(Error::Input(
            "Camina pair needs a proper non-trivial subgroup".into(),
        ));
    }
    if !h.is_normal(t) {
        return Err(Error::Input("Camina pair needs a normal subgroup".into()));
    }
    let n = t.order();
    for x in 0..n {
        if h.contains(x) {
            continue;
        }
        let mut in_comm = vec![false; n];
        for g in 0..n {
            in_comm[t.commutator(x, g)] = true;
        }
        for &z in h.members() {
            if !in_comm[z] {
                return Ok(CaminaVerdict { holds: false, witness: Some((x, z)) });
            }
        }
    }
    Ok(CaminaVerdict { holds: true, witness: None })
}

/// Search for an abelian subgroup of index p in a p-group.  An abelian G
/// is returned whole (the index-1 special case).  Otherwise the search
/// runs breadth-first over abelian subgroups containing the center —
/// every abelian subgroup of index p contains Z(G), since otherwise G
/// would be the product of it with the center and hence abelian — with
/// extensions in ascending element order, so the first hit is
/// deterministic.
pub fn find_abelian_subgroup_of_index_p(t: &GroupTable) -> Result<Option<SubgroupSet>> {
    let n = t.order();
    if t.is_abelian() {
        return Ok(Some(SubgroupSet::trusted(n, (0..n).collect())));
    }
    let (p, _) = prime_power(n).ok_or_else(|| {
        Error::Input(format!(
            "abelian-subgroup search expects a group of prime-power order, got {n}"
        ))
    })?;
    let target = n / p;
    let z = center(t);
    debug_assert!(z.len() < target);
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    seen.insert(z.members().to_vec());
    let mut frontier = vec![z];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for k in &frontier {
            let cent = t.centralizer_of_set(k.members());
            for &x in cent.members() {
                if k.contains(x) {
                    continue;
                }
                let mut seed = k.members().to_vec();
                seed.push(x);
                let bigger = t.closure(&seed);
                debug_assert!(bigger.is_abelian(t));
                if bigger.len() == target {
                    return Ok(Some(bigger));
                }
                if bigger.len() < target && seen.insert(bigger.members().to_vec()) {
                    next.push(bigger);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// True when G has no non-trivial abelian direct factor.
///
/// A factor G = A × B with A abelian splits off a cyclic direct factor
/// generated by a central element a, and such a factor exists exactly when
/// some homomorphism G → Z/ord(a) sends a to a unit (its kernel is then a
/// normal complement).  So it suffices to scan cyclic central subgroups
/// and enumerate homomorphisms onto cyclic groups.
pub fn is_purely_nonabelian(t: &GroupTable) -> Result<bool> {
    let n = t.order();
    if n == 1 {
        return Ok(true);
    }
    if t.is_abelian() {
        return Ok(false);
    }
    let gens = greedy_generating_set(t);
    let z = center(t);
    let mut tried: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for &a in z.members() {
        if a == 0 {
            continue;
        }
        let cyc = t.closure(&[a]);
        if !tried.insert(cyc.members().to_vec()) {
            continue;
        }
        let m = t.element_order(a);
        for f in homs_to_cyclic(t, &gens, m) {
            if gcd(f[a] as usize, m) == 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The full invariant bundle for one group.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub order: usize,
    pub prime_power: Option<(usize, u32)>,
    pub center: SubgroupSet,
    pub derived: SubgroupSet,
    pub lower_central: Vec<SubgroupSet>,
    pub frattini: SubgroupSet,
    pub nilpotency_class: Option<usize>,
    pub rank_d: usize,
    pub exponent: usize,
    pub generating_tuple: Vec<Elem>,
}

impl StructureReport {
    pub fn compute(t: &GroupTable) -> Result<StructureReport> {
        let order = t.order();
        let lower_central = lower_central_series(t);
        let derived = derived_subgroup(t);
        if lower_central.len() > 1 {
            assert_eq!(derived.members(), lower_central[1].members());
        }
        for w in lower_central.windows(2) {
            assert!(w[1].is_proper_subset_of(&w[0]));
        }
        let nilpotency_class = if lower_central.last().unwrap().is_trivial() {
            Some(lower_central.len() - 1)
        } else {
            None
        };
        let pp = prime_power(order);
        if pp.is_some() {
            assert!(nilpotency_class.is_some(), "p-groups are nilpotent");
        }
        let generating_tuple = minimal_generating_tuple(t)?;
        Ok(StructureReport {
            order,
            prime_power: pp,
            center: center(t),
            derived,
            frattini: frattini(t)?,
            nilpotency_class,
            rank_d: generating_tuple.len(),
            exponent: exponent(t),
            lower_central,
            generating_tuple,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn centers() {
        let d8 = construct::dihedral(8);
        assert_eq!(center(&d8).members(), &[0, 2]);
        let q8 = construct::dicyclic(2);
        assert_eq!(center(&q8).members(), &[0, 2]);
        let c6 = construct::cyclic(6);
        assert_eq!(center(&c6).len(), 6);
        let h27 = construct::heisenberg(3);
        assert_eq!(center(&h27).len(), 3);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(derived_subgroup(&construct::dihedral(8)).members(), &[0, 2]);
        assert_eq!(derived_subgroup(&construct::cyclic(12)).len(), 1);
        assert_eq!(derived_subgroup(&construct::heisenberg(3)).len(), 3);
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(nilpotency_class(&construct::cyclic(9)), Some(1));
        assert_eq!(nilpotency_class(&construct::dihedral(8)), Some(2));
        assert_eq!(nilpotency_class(&construct::dihedral(16)), Some(3));
        assert_eq!(nilpotency_class(&construct::dihedral(32)), Some(4));
        assert_eq!(nilpotency_class(&construct::heisenberg(3)), Some(2));
        assert_eq!(nilpotency_class(&construct::cyclic(1)), Some(0));
        // S3 is not nilpotent.
        let s3 = construct::metacyclic(3, 2, 0, 2).unwrap();
        assert_eq!(nilpotency_class(&s3), None);
    }

    #[test]
    fn frattini_and_rank() {
        let d8 = construct::dihedral(8);
        assert_eq!(frattini(&d8).unwrap().members(), &[0, 2]);
        assert_eq!(rank_d(&d8).unwrap(), 2);

        assert_eq!(frattini(&construct::cyclic(5)).unwrap().len(), 1);
        assert_eq!(rank_d(&construct::cyclic(5)).unwrap(), 1);

        let e27 = construct::abelian(&[3, 3, 3]);
        assert_eq!(frattini(&e27).unwrap().len(), 1);
        assert_eq!(rank_d(&e27).unwrap(), 3);

        let c4x2 = construct::abelian(&[4, 2]);
        assert_eq!(frattini(&c4x2).unwrap().len(), 2);
        assert_eq!(rank_d(&c4x2).unwrap(), 2);

        // Non-prime-power order goes through the lattice path.
        let s3 = construct::metacyclic(3, 2, 0, 2).unwrap();
        assert_eq!(frattini(&s3).unwrap().len(), 1);
        assert_eq!(rank_d(&s3).unwrap(), 2);
    }

    #[test]
    fn generating_tuples_generate() {
        for t in [
            construct::dihedral(8),
            construct::dicyclic(2),
            construct::heisenberg(3),
            construct::abelian(&[2, 4, 2]),
            construct::cyclic(16),
        ] {
            let tuple = minimal_generating_tuple(&t).unwrap();
            assert!(t.closure(&tuple).is_whole_group());
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(exponent(&construct::dicyclic(2)), 4);
        assert_eq!(exponent(&construct::dihedral(8)), 4);
        assert_eq!(exponent(&construct::heisenberg(3)), 3);
        assert_eq!(exponent(&construct::abelian(&[6, 4])), 12);
        assert_eq!(exponent(&construct::cyclic(1)), 1);
    }

    #[test]
    fn commutator_sets() {
        let d8 = construct::dihedral(8);
        // x = r: [r, G] = {1, r²}.
        assert_eq!(commutator_set(&d8, 1), vec![0, 2]);
        // central x.
        assert_eq!(commutator_set(&d8, 2), vec![0]);
        // a reflection also has commutator set {1, r²}.
        assert_eq!(commutator_set(&d8, 4), vec![0, 2]);
    }

    #[test]
    fn camina_pairs() {
        let d8 = construct::dihedral(8);
        let z = center(&d8);
        let v = is_camina_pair(&d8, &z).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, None);

        // Abelian G: [x,G] = {1} never contains a non-trivial subgroup.
        let a = construct::abelian(&[4, 2]);
        let h = a.closure(&[4]);
        assert!(!h.is_trivial() && !h.is_whole_group());
        let v = is_camina_pair(&a, &h).unwrap();
        assert!(!v.holds);
        assert!(v.witness.is_some());

        // Precondition violations.
        let triv = d8.closure(&[]);
        assert!(is_camina_pair(&d8, &triv).is_err());
        let whole = d8.closure(&[1, 4]);
        assert!(is_camina_pair(&d8, &whole).is_err());
    }

    #[test]
    fn abelian_index_p_subgroups() {
        // Abelian: the whole group.
        let a = construct::abelian(&[9, 3]);
        let found = find_abelian_subgroup_of_index_p(&a).unwrap().unwrap();
        assert!(found.is_whole_group());

        // D8: the rotation subgroup, found first.
        let d8 = construct::dihedral(8);
        let found = find_abelian_subgroup_of_index_p(&d8).unwrap().unwrap();
        assert_eq!(found.members(), &[0, 1, 2, 3]);

        // Q16: the cyclic half.
        let q16 = construct::dicyclic(4);
        let found = find_abelian_subgroup_of_index_p(&q16).unwrap().unwrap();
        assert_eq!(found.len(), 8);
        assert!(found.is_abelian(&q16));

        // Heisenberg group of order 27: ⟨Z, a⟩ of order 9 exists.
        let h27 = construct::heisenberg(3);
        let found = find_abelian_subgroup_of_index_p(&h27).unwrap().unwrap();
        assert_eq!(found.len(), 9);
        assert!(found.is_abelian(&h27));
    }

    #[test]
    fn purely_nonabelian() {
        assert!(is_purely_nonabelian(&construct::dicyclic(2)).unwrap());
        assert!(is_purely_nonabelian(&construct::dihedral(8)).unwrap());
        assert!(!is_purely_nonabelian(&construct::cyclic(8)).unwrap());
        let c2xd8 = construct::direct_product(&construct::cyclic(2), &construct::dihedral(8));
        assert!(!is_purely_nonabelian(&c2xd8).unwrap());
        // Q8 × C4: the C4 splits off even though every order-2 central
        // element lies inside the Frattini subgroup.
        let q8xc4 = construct::direct_product(&construct::dicyclic(2), &construct::cyclic(4));
        assert!(!is_purely_nonabelian(&q8xc4).unwrap());
    }

    #[test]
    fn subgroup_lattices() {
        // D8 has exactly 10 subgroups.
        assert_eq!(all_subgroups(&construct::dihedral(8)).unwrap().len(), 10);
        // Q8 has 6: 1, ⟨-1⟩, three C4s, Q8.
        assert_eq!(all_subgroups(&construct::dicyclic(2)).unwrap().len(), 6);
        // C2 × C2 × C2 has 1 + 7 + 7 + 1 = 16.
        assert_eq!(all_subgroups(&construct::abelian(&[2, 2, 2])).unwrap().len(), 16);
    }

    #[test]
    fn structure_report_on_heisenberg() {
        let h = construct::heisenberg(3);
        let r = StructureReport::compute(&h).unwrap();
        assert_eq!(r.order, 27);
        assert_eq!(r.prime_power, Some((3, 3)));
        assert_eq!(r.center.len(), 3);
        assert_eq!(r.derived.len(), 3);
        assert_eq!(r.nilpotency_class, Some(2));
        assert_eq!(r.rank_d, 2);
        assert_eq!(r.exponent, 3);
        assert_eq!(r.lower_central.len(), 3);
    }
}
