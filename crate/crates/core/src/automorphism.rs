//! Automorphism enumeration: inner, class-preserving, and central maps,
//! their intersections, and the order formula
//! |Aut_c| = |Aut_c ∩ Aut_z| · |Inn| / |Z(Inn)| together with its
//! factorization certificate.
//!
//! The main enumeration backtracks over generator images restricted to the
//! generators' conjugacy classes.  That restriction is necessary but not
//! sufficient, so every candidate map is still verified class-preserving
//! element by element, with explicit conjugator witnesses.  An independent
//! brute-force path (unrestricted generator images, different extension
//! code, full multiplicativity recheck) serves as the oracle for small
//! orders.

use rayon::prelude::*;

use crate::abelian;
use crate::error::{Error, Result};
use crate::group::{quotient, ConjugacyClasses, Elem, GroupTable, SubgroupSet};
use crate::structure;

/// A bijective endomorphism, as its full image vector, with lazily filled
/// classification flags (`None` = not checked).
#[derive(Debug, Clone)]
pub struct Automorphism {
    pub image: Vec<Elem>,
    pub is_inner: Option<bool>,
    pub is_class_preserving: Option<bool>,
    pub is_central: Option<bool>,
    /// When class-preserving: for each x an element g with g⁻¹xg = α(x).
    pub conjugators: Option<Vec<Elem>>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image
    }
}
impl Eq for Automorphism {}
impl PartialOrd for Automorphism {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Automorphism {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.image.cmp(&other.image)
    }
}

impl Automorphism {
    pub fn identity(n: usize) -> Automorphism {
        Automorphism {
            image: (0..n).collect(),
            is_inner: Some(true),
            is_class_preserving: Some(true),
            is_central: Some(true),
            conjugators: Some(vec![0; n]),
        }
    }

    fn from_image(image: Vec<Elem>) -> Automorphism {
        Automorphism {
            image,
            is_inner: None,
            is_class_preserving: None,
            is_central: None,
            conjugators: None,
        }
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    /// (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism::from_image(other.image.iter().map(|&x| self.image[x]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Automorphism::from_image(image)
    }

    /// Full check: fixes the identity, bijective, multiplicative on every
    /// pair.  Quadratic — used by oracles and asserts, not hot paths.
    pub fn verify_automorphism(&self, t: &GroupTable) -> bool {
        let n = t.order();
        if self.image.len() != n || self.image[0] != 0 {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &self.image {
            if y >= n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if self.image[t.mul(a, b)] != t.mul(self.image[a], self.image[b]) {
                    return false;
                }
            }
        }
        true
    }

    /// x⁻¹α(x) ∈ Z for all x.
    pub fn is_central_map(&self, t: &GroupTable, z: &SubgroupSet) -> bool {
        (0..t.order()).all(|x| z.contains(t.mul(t.inv(x), self.image[x])))
    }
}

/// Conjugator witnesses for a class-preserving map: the smallest g with
/// g⁻¹xg = image[x], per element.  `None` if some image leaves its class.
fn find_conjugators(t: &GroupTable, image: &[Elem]) -> Option<Vec<Elem>> {
    let n = t.order();
    let mut out = Vec::with_capacity(n);
    for x in 0..n {
        let g = (0..n).find(|&g| t.conj(x, g) == image[x])?;
        out.push(g);
    }
    Some(out)
}

/// A deduplicated, image-sorted set of automorphisms of one group.
#[derive(Debug, Clone)]
pub struct AutomorphismSet {
    n: usize,
    elements: Vec<Automorphism>,
}

impl PartialEq for AutomorphismSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.elements == other.elements
    }
}
impl Eq for AutomorphismSet {}

impl AutomorphismSet {
    pub fn from_vec(n: usize, mut elements: Vec<Automorphism>) -> AutomorphismSet {
        elements.sort();
        elements.dedup();
        AutomorphismSet { n, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Automorphism> {
        self.elements.iter()
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.elements[i]
    }

    pub fn contains_image(&self, image: &[Elem]) -> bool {
        self.elements
            .binary_search_by(|a| a.image.as_slice().cmp(image))
            .is_ok()
    }

    /// Contains the identity and is closed under composition and inverse.
    pub fn is_group(&self) -> bool {
        let id: Vec<Elem> = (0..self.n).collect();
        if !self.contains_image(&id) {
            return false;
        }
        for a in &self.elements {
            if !self.contains_image(&a.inverse().image) {
                return false;
            }
            for b in &self.elements {
                if !self.contains_image(&a.compose(b).image) {
                    return false;
                }
            }
        }
        true
    }

    /// Sorted-merge intersection by image, keeping the more complete flag
    /// set from either side.
    pub fn intersect(&self, other: &AutomorphismSet) -> AutomorphismSet {
        assert_eq!(self.n, other.n, "intersection of sets over different groups");
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].image.cmp(&other.elements[j].image) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let a = &self.elements[i];
                    let b = &other.elements[j];
                    out.push(Automorphism {
                        image: a.image.clone(),
                        is_inner: a.is_inner.or(b.is_inner),
                        is_class_preserving: a.is_class_preserving.or(b.is_class_preserving),
                        is_central: a.is_central.or(b.is_central),
                        conjugators: a.conjugators.clone().or_else(|| b.conjugators.clone()),
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        AutomorphismSet { n: self.n, elements: out }
    }
}

/// {conjugation by g : g ∈ G}, size |G|/|Z(G)|.
pub fn inner_automorphisms(t: &GroupTable) -> AutomorphismSet {
    let n = t.order();
    let mut maps = Vec::with_capacity(n);
    for g in 0..n {
        let image: Vec<Elem> = (0..n).map(|x| t.conj(x, g)).collect();
        maps.push(Automorphism {
            image,
            is_inner: Some(true),
            is_class_preserving: Some(true),
            is_central: None,
            conjugators: Some(vec![g; n]),
        });
    }
    let set = AutomorphismSet::from_vec(n, maps);
    let z = structure::center(t).len();
    assert_eq!(set.len(), n / z, "|Inn| must equal |G|/|Z|");
    set
}

/// Extend generator images to a full map by breadth-first closure over the
/// Cayley graph, checking every edge; then demand bijectivity.  A `Some`
/// result is a genuine automorphism (every product x·gᵢ was checked, and
/// multiplicativity on generators propagates to all of G).
fn extend_images(t: &GroupTable, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    const UNSET: usize = usize::MAX;
    let n = t.order();
    let mut phi = vec![UNSET; n];
    phi[0] = 0;
    let mut queue = Vec::with_capacity(n);
    queue.push(0usize);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &g) in gens.iter().enumerate() {
            let y = t.mul(x, g);
            let v = t.mul(phi[x], images[i]);
            if phi[y] == UNSET {
                phi[y] = v;
                queue.push(y);
            } else if phi[y] != v {
                return None;
            }
        }
    }
    debug_assert_eq!(queue.len(), n, "generators fail to generate");
    let mut seen = vec![false; n];
    for &y in &phi {
        if seen[y] {
            return None;
        }
        seen[y] = true;
    }
    Some(phi)
}

/// All class-preserving automorphisms: backtracking over generator images
/// within the generators' conjugacy classes, homomorphic extension, and a
/// mandatory element-by-element class check with conjugator witnesses.
pub fn enumerate_class_preserving(t: &GroupTable, gens: &[Elem]) -> Result<AutomorphismSet> {
    let n = t.order();
    if gens.is_empty() {
        if n == 1 {
            return Ok(AutomorphismSet::from_vec(1, vec![Automorphism::identity(1)]));
        }
        return Err(Error::Input("empty generating tuple".into()));
    }
    if !t.closure(gens).is_whole_group() {
        return Err(Error::Input(format!(
            "tuple {gens:?} does not generate the group"
        )));
    }
    let classes = t.conjugacy_classes();
    let cands: Vec<&[Elem]> = gens
        .iter()
        .map(|&g| classes.classes[classes.class_of[g]].as_slice())
        .collect();

    let first = cands[0];
    let rest = &cands[1..];
    let found: Vec<Vec<Automorphism>> = first
        .par_iter()
        .map(|&c0| {
            let mut images = vec![c0; gens.len()];
            let mut idx = vec![0usize; rest.len()];
            let mut local = Vec::new();
            'tuples: loop {
                for (k, &i) in idx.iter().enumerate() {
                    images[k + 1] = rest[k][i];
                }
                if let Some(auto) = try_tuple(t, gens, &images, &classes) {
                    local.push(auto);
                }
                for k in (0..idx.len()).rev() {
                    idx[k] += 1;
                    if idx[k] < rest[k].len() {
                        continue 'tuples;
                    }
                    idx[k] = 0;
                }
                break;
            }
            local
        })
        .collect();

    let set = AutomorphismSet::from_vec(n, found.into_iter().flatten().collect());
    debug_assert!(set.contains_image(&(0..n).collect::<Vec<_>>()));
    Ok(set)
}

fn try_tuple(
    t: &GroupTable,
    gens: &[Elem],
    images: &[Elem],
    classes: &ConjugacyClasses,
) -> Option<Automorphism> {
    let phi = extend_images(t, gens, images)?;
    // The class restriction on generators does not imply the map is
    // class-preserving — check every element.
    for (x, &y) in phi.iter().enumerate() {
        if !classes.same_class(x, y) {
            return None;
        }
    }
    let conjugators = find_conjugators(t, &phi).expect("classes just verified");
    Some(Automorphism {
        image: phi,
        is_inner: None,
        is_class_preserving: Some(true),
        is_central: None,
        conjugators: Some(conjugators),
    })
}

/// Cap on candidate homomorphism tuples in `central_automorphisms`.
pub const CENTRAL_ENUM_CAP: usize = 1 << 20;

/// All central automorphisms x ↦ x·f(xG′), for homomorphisms
/// f: G/G′ → Z(G) whose lift is bijective.  The number of homomorphisms
/// found by extension is asserted against the arithmetic count
/// |Hom(G/G′, Z)|, and for purely non-abelian G every lift must be an
/// automorphism, which is asserted too.
pub fn central_automorphisms(t: &GroupTable) -> Result<AutomorphismSet> {
    central_automorphisms_with(t, CENTRAL_ENUM_CAP)
}

pub fn central_automorphisms_with(t: &GroupTable, cap: usize) -> Result<AutomorphismSet> {
    let n = t.order();
    let z = structure::center(t);
    let der = structure::derived_subgroup(t);
    let q = quotient(t, &der)?;
    let qt = &q.table;
    let qgens = structure::minimal_generating_tuple(qt)?;

    let cands: Vec<Vec<Elem>> = qgens
        .iter()
        .map(|&qg| {
            let ord = qt.element_order(qg);
            z.members()
                .iter()
                .copied()
                .filter(|&zx| ord % t.element_order(zx) == 0)
                .collect()
        })
        .collect();
    let count: u128 = cands.iter().map(|c| c.len() as u128).product();
    if count > cap as u128 {
        return Err(Error::OrderCap {
            order: count.min(usize::MAX as u128) as usize,
            cap,
        });
    }

    let mut homs_found: u128 = 0;
    let mut autos = Vec::new();
    let mut idx = vec![0usize; qgens.len()];
    'tuples: loop {
        let images: Vec<Elem> = idx.iter().zip(&cands).map(|(&i, c)| c[i]).collect();
        if let Some(f) = extend_central_hom(t, qt, &qgens, &images) {
            homs_found += 1;
            let image: Vec<Elem> = (0..n).map(|x| t.mul(x, f[q.projection[x]])).collect();
            let mut seen = vec![false; n];
            if image.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                autos.push(Automorphism {
                    image,
                    is_inner: None,
                    is_class_preserving: None,
                    is_central: Some(true),
                    conjugators: None,
                });
            }
        }
        if qgens.is_empty() {
            break;
        }
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                continue 'tuples;
            }
            idx[k] = 0;
        }
        break;
    }

    let q_members: Vec<Elem> = (0..qt.order()).collect();
    let expected = abelian::hom_count(
        &abelian::elementary_divisors(qt, &q_members)?,
        &abelian::elementary_divisors(t, z.members())?,
    );
    assert_eq!(
        homs_found, expected,
        "homomorphism extension disagrees with |Hom(G/G', Z)|"
    );
    if structure::is_purely_nonabelian(t)? {
        assert_eq!(
            autos.len() as u128,
            homs_found,
            "for a purely non-abelian group every central lift must be bijective"
        );
    }
    Ok(AutomorphismSet::from_vec(n, autos))
}

/// Extend quotient-generator images (central elements of G) to a
/// homomorphism G/G′ → Z(G), as a value vector indexed by quotient
/// elements.  Multiplication of values happens in G; every quotient Cayley
/// edge is checked.
fn extend_central_hom(
    t: &GroupTable,
    qt: &GroupTable,
    qgens: &[Elem],
    images: &[Elem],
) -> Option<Vec<Elem>> {
    const UNSET: usize = usize::MAX;
    let qn = qt.order();
    let mut f = vec![UNSET; qn];
    f[0] = 0;
    let mut queue = Vec::with_capacity(qn);
    queue.push(0usize);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &g) in qgens.iter().enumerate() {
            let y = qt.mul(x, g);
            let v = t.mul(f[x], images[i]);
            if f[y] == UNSET {
                f[y] = v;
                queue.push(y);
            } else if f[y] != v {
                return None;
            }
        }
    }
    debug_assert_eq!(queue.len(), qn);
    Some(f)
}

/// |Out_c| = |Aut_c| / |Inn|, with Inn ⊆ Aut_c and exact divisibility
/// asserted.
pub fn outc_order(t: &GroupTable, gens: &[Elem]) -> Result<usize> {
    let autc = enumerate_class_preserving(t, gens)?;
    let inn = inner_automorphisms(t);
    for a in inn.iter() {
        assert!(
            autc.contains_image(&a.image),
            "an inner automorphism is missing from the class-preserving enumeration"
        );
    }
    assert_eq!(autc.len() % inn.len(), 0, "|Inn| must divide |Aut_c|");
    Ok(autc.len() / inn.len())
}

/// The order-formula report: hypothesis, the four orders, and whether the
/// formula and the factorization both check out.
#[derive(Debug, Clone)]
pub struct OrderFormulaReport {
    /// The class-preserving outer group of G/Z(G) is trivial.
    pub hypothesis_verified: bool,
    pub autc_order: usize,
    pub intersection_order: usize,
    pub inn_order: usize,
    pub z_inn_order: usize,
    pub formula_holds: bool,
    /// Every class-preserving α decomposes as conjugation ∘ central map.
    pub factorization_verified: bool,
    pub holds: bool,
}

/// Verify |Aut_c| · |Z(Inn)| = |Aut_c ∩ Aut_z| · |Inn| under the
/// hypothesis Out_c(G/Z) = 1, plus the factorization α = i_a ∘ β with β
/// central and class-preserving.
pub fn order_formula_check(t: &GroupTable, gens: &[Elem]) -> Result<OrderFormulaReport> {
    let n = t.order();
    let z = structure::center(t);

    let hypothesis_verified = if z.is_whole_group() {
        true // abelian: the quotient is trivial
    } else if z.is_trivial() {
        // G/Z ≅ G: no smaller group to recurse into, compute directly.
        outc_order(t, gens)? == 1
    } else {
        let q = quotient(t, &z)?;
        let qgens = structure::minimal_generating_tuple(&q.table)?;
        outc_order(&q.table, &qgens)? == 1
    };

    let autc = enumerate_class_preserving(t, gens)?;
    let inn = inner_automorphisms(t);

    let z_inn_order = inn
        .iter()
        .filter(|a| inn.iter().all(|b| a.compose(b).image == b.compose(a).image))
        .count();

    let intersection_order = autc.iter().filter(|a| a.is_central_map(t, &z)).count();

    let formula_holds =
        autc.len() * z_inn_order == intersection_order * inn.len();

    let mut factorization_verified = true;
    'maps: for alpha in autc.iter() {
        for a in 0..n {
            // β(x) = a·α(x)·a⁻¹, so that α = i_a ∘ β with i_a(y) = a⁻¹ya.
            let ainv = t.inv(a);
            let central = (0..n).all(|x| {
                let beta_x = t.mul(t.mul(a, alpha.image[x]), ainv);
                z.contains(t.mul(t.inv(x), beta_x))
            });
            if central {
                continue 'maps;
            }
        }
        factorization_verified = false;
        break;
    }

    Ok(OrderFormulaReport {
        hypothesis_verified,
        autc_order: autc.len(),
        intersection_order,
        inn_order: inn.len(),
        z_inn_order,
        formula_holds,
        factorization_verified,
        holds: hypothesis_verified && formula_holds && factorization_verified,
    })
}

/// First (in image order) class-preserving automorphism that is not
/// inner, certified by absence from the full inner set, with conjugator
/// witnesses attached.  `None` when Out_c = 1.
pub fn find_noninner_witness(t: &GroupTable, gens: &[Elem]) -> Result<Option<Automorphism>> {
    let autc = enumerate_class_preserving(t, gens)?;
    let inn = inner_automorphisms(t);
    for a in autc.iter() {
        if !inn.contains_image(&a.image) {
            let mut w = a.clone();
            w.is_inner = Some(false);
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Default order cap for the brute-force oracle.
pub const BRUTE_FORCE_CAP: usize = 16;

/// Oracle path: enumerate ALL automorphisms from unrestricted generator
/// images, using a worklist product-closure (a different extension
/// algorithm than the main path) plus a full quadratic multiplicativity
/// recheck, then filter by the class-preserving predicate.
pub fn brute_force_class_preserving(t: &GroupTable) -> Result<AutomorphismSet> {
    brute_force_class_preserving_with(t, BRUTE_FORCE_CAP)
}

pub fn brute_force_class_preserving_with(
    t: &GroupTable,
    cap: usize,
) -> Result<AutomorphismSet> {
    let n = t.order();
    if n > cap {
        return Err(Error::OrderCap { order: n, cap });
    }
    let gens = structure::minimal_generating_tuple(t)?;
    if gens.is_empty() {
        return Ok(AutomorphismSet::from_vec(1, vec![Automorphism::identity(1)]));
    }
    let classes = t.conjugacy_classes();
    let d = gens.len();
    let mut found = Vec::new();
    let mut idx = vec![0usize; d];
    'tuples: loop {
        let images: Vec<Elem> = idx.to_vec();
        if let Some(phi) = worklist_extend(t, &gens, &images) {
            let auto = Automorphism::from_image(phi);
            if auto.verify_automorphism(t)
                && auto.image.iter().enumerate().all(|(x, &y)| classes.same_class(x, y))
            {
                let mut a = auto;
                a.is_class_preserving = Some(true);
                a.conjugators = find_conjugators(t, &a.image);
                found.push(a);
            }
        }
        for k in (0..d).rev() {
            idx[k] += 1;
            if idx[k] < n {
                continue 'tuples;
            }
            idx[k] = 0;
        }
        break;
    }
    Ok(AutomorphismSet::from_vec(n, found))
}

/// Product-closure extension: seed the map on the generators, then close
/// under products of all already-defined pairs until stable.
fn worklist_extend(t: &GroupTable, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    const UNSET: usize = usize::MAX;
    let n = t.order();
    let mut phi = vec![UNSET; n];
    phi[0] = 0;
    let mut defined: Vec<Elem> = vec![0];
    for (&g, &c) in gens.iter().zip(images) {
        if phi[g] == UNSET {
            phi[g] = c;
            defined.push(g);
        } else if phi[g] != c {
            return None;
        }
    }
    let mut head = 0;
    while head < defined.len() {
        let x = defined[head];
        head += 1;
        let snapshot = defined.len();
        for i in 0..snapshot {
            let y = defined[i];
            for (u, v) in [(x, y), (y, x)] {
                let prod = t.mul(u, v);
                let val = t.mul(phi[u], phi[v]);
                if phi[prod] == UNSET {
                    phi[prod] = val;
                    defined.push(prod);
                } else if phi[prod] != val {
                    return None;
                }
            }
        }
    }
    if defined.len() != n {
        return None; // tuple failed to generate under closure — cannot happen
    }
    Some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::structure::minimal_generating_tuple;

    fn autc(t: &GroupTable) -> AutomorphismSet {
        let gens = minimal_generating_tuple(t).unwrap();
        enumerate_class_preserving(t, &gens).unwrap()
    }

    #[test]
    fn inner_sizes() {
        assert_eq!(inner_automorphisms(&construct::dihedral(8)).len(), 4);
        assert_eq!(inner_automorphisms(&construct::dicyclic(2)).len(), 4);
        assert_eq!(inner_automorphisms(&construct::cyclic(12)).len(), 1);
        assert_eq!(inner_automorphisms(&construct::heisenberg(3)).len(), 9);
    }

    #[test]
    fn class_preserving_of_d8_is_inner() {
        let d8 = construct::dihedral(8);
        let set = autc(&d8);
        assert_eq!(set.len(), 4);
        assert_eq!(set, inner_automorphisms(&d8));
        assert!(set.is_group());
    }

    #[test]
    fn class_preserving_of_abelian_is_trivial() {
        let a = construct::abelian(&[4, 2]);
        let set = autc(&a);
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn extraspecial_27_has_no_outer_class_preserving() {
        let h = construct::heisenberg(3);
        let gens = minimal_generating_tuple(&h).unwrap();
        assert_eq!(outc_order(&h, &gens).unwrap(), 1);
    }

    #[test]
    fn conjugator_witnesses_are_valid() {
        let q8 = construct::dicyclic(2);
        for a in autc(&q8).iter() {
            let conj = a.conjugators.as_ref().unwrap();
            for x in 0..8 {
                assert_eq!(q8.conj(x, conj[x]), a.image[x]);
            }
        }
    }

    #[test]
    fn central_automorphisms_of_q8() {
        // Q8 is purely non-abelian with G/G' ≅ C2×C2 and Z ≅ C2, so
        // |Aut_z| = |Hom(C2×C2, C2)| = 4, all bijective.
        let q8 = construct::dicyclic(2);
        let set = central_automorphisms(&q8).unwrap();
        assert_eq!(set.len(), 4);
        for a in set.iter() {
            assert!(a.verify_automorphism(&q8));
        }
    }

    #[test]
    fn central_automorphisms_of_d8() {
        let d8 = construct::dihedral(8);
        let set = central_automorphisms(&d8).unwrap();
        assert_eq!(set.len(), 4);
        let z = structure::center(&d8);
        for a in set.iter() {
            assert!(a.is_central_map(&d8, &z));
        }
    }

    #[test]
    fn order_formula_on_d8() {
        // Inn(D8) ≅ C2×C2 is abelian, so Z(Inn) is all of Inn; and since
        // G' ⊆ Z every class-preserving map is also central.  All four
        // orders are 4 and the formula reads 4·4 = 4·4.
        let d8 = construct::dihedral(8);
        let gens = minimal_generating_tuple(&d8).unwrap();
        let r = order_formula_check(&d8, &gens).unwrap();
        assert!(r.hypothesis_verified);
        assert_eq!(r.autc_order, 4);
        assert_eq!(r.intersection_order, 4);
        assert_eq!(r.inn_order, 4);
        assert_eq!(r.z_inn_order, 4);
        assert!(r.formula_holds);
        assert!(r.factorization_verified);
        assert!(r.holds);
    }

    #[test]
    fn order_formula_on_heisenberg() {
        let h = construct::heisenberg(3);
        let gens = minimal_generating_tuple(&h).unwrap();
        let r = order_formula_check(&h, &gens).unwrap();
        assert!(r.holds);
        assert_eq!(r.inn_order, 9);
    }

    #[test]
    fn no_witness_when_everything_is_inner() {
        let d8 = construct::dihedral(8);
        let gens = minimal_generating_tuple(&d8).unwrap();
        assert!(find_noninner_witness(&d8, &gens).unwrap().is_none());
    }

    #[test]
    fn oracle_agrees_on_small_groups() {
        for t in [
            construct::dihedral(8),
            construct::dicyclic(2),
            construct::cyclic(8),
            construct::abelian(&[2, 2]),
            construct::abelian(&[2, 2, 2]),
            construct::dihedral(12),
            construct::cyclic(15),
        ] {
            let brute = brute_force_class_preserving(&t).unwrap();
            let fast = autc(&t);
            assert_eq!(brute, fast, "order {}", t.order());
        }
    }

    #[test]
    fn brute_force_respects_cap() {
        let t = construct::dihedral(40);
        assert!(matches!(
            brute_force_class_preserving(&t),
            Err(Error::OrderCap { order: 40, cap: 16 })
        ));
    }

    #[test]
    fn compose_and_inverse() {
        let d8 = construct::dihedral(8);
        let set = autc(&d8);
        for a in set.iter() {
            let inv = a.inverse();
            let id = a.compose(&inv);
            assert_eq!(id.image, (0..8).collect::<Vec<_>>());
            assert!(inv.verify_automorphism(&d8));
        }
    }
}
