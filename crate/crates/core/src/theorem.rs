//! The order-p⁵ decision procedure: evaluate the structural conditions
//! under which a group of order p⁵ has a non-inner class-preserving
//! automorphism, and cross-validate every prediction against direct
//! enumeration.  A disagreement is a fatal error carrying a full
//! structural dump — that error path is the falsification channel for the
//! whole artifact, so it is never downgraded to a log line.
//!
//! The decision criterion: Out_c(G) ≠ 1 for |G| = p⁵ exactly when
//! |Z| = p, Z < G′, and either (cl = 3 with d = 3) or (cl = 4 with
//! Z ⊆ [x,G] for every x outside G′).  Flagged groups must come out with
//! |Out_c| = p, and a concrete non-inner witness is attached.

use rayon::prelude::*;

use crate::abelian::{self, prime_power};
use crate::automorphism::{self, Automorphism};
use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};
use crate::structure;

/// The evaluated hypotheses of the decision criterion.
#[derive(Debug, Clone)]
pub struct TheoremConditions {
    pub center_order: usize,
    /// Z(G) is a proper subgroup of G′.
    pub center_lt_derived: bool,
    pub class: usize,
    pub rank: usize,
    /// Z ⊆ [x,G] for every x ∈ G − G′; only evaluated when class = 4.
    pub camina_on_nonderived: Option<bool>,
    /// When the class-4 condition fails: (x, z) with x ∉ G′ and
    /// z ∈ Z − [x,G].
    pub camina_witness: Option<(Elem, Elem)>,
}

/// Prediction plus (after `verify`) the enumerated ground truth.
#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub order: usize,
    pub prime: usize,
    pub conditions: TheoremConditions,
    pub predicted_nontrivial: bool,
    pub computed_outc_order: Option<usize>,
    pub agree: Option<bool>,
    pub witness: Option<Automorphism>,
}

fn expect_p5(t: &GroupTable) -> Result<usize> {
    let n = t.order();
    match prime_power(n) {
        Some((p, 5)) => Ok(p),
        _ => Err(Error::Input(format!(
            "expected a group of order p^5 for a prime p, got order {n}"
        ))),
    }
}

/// Evaluate the structural conditions only; `computed_outc_order` is left
/// empty.  The condition-(ii) quantifier runs literally over every element
/// outside G′ — cosets of G′ need not share commutator sets, so no
/// representative shortcut is taken.
pub fn evaluate_conditions(t: &GroupTable) -> Result<TheoremVerdict> {
    let p = expect_p5(t)?;
    let n = t.order();
    let z = structure::center(t);
    let der = structure::derived_subgroup(t);
    let class = structure::nilpotency_class(t).expect("p-groups are nilpotent");
    let rank = structure::rank_d(t)?;

    let (camina_on_nonderived, camina_witness) = if class == 4 {
        let mut verdict = (Some(true), None);
        'outer: for x in 0..n {
            if der.contains(x) {
                continue;
            }
            let mut in_comm = vec![false; n];
            for g in 0..n {
                in_comm[t.commutator(x, g)] = true;
            }
            for &zx in z.members() {
                if !in_comm[zx] {
                    verdict = (Some(false), Some((x, zx)));
                    break 'outer;
                }
            }
        }
        verdict
    } else {
        (None, None)
    };

    let conditions = TheoremConditions {
        center_order: z.len(),
        center_lt_derived: z.is_proper_subset_of(&der),
        class,
        rank,
        camina_on_nonderived,
        camina_witness,
    };
    let predicted_nontrivial = conditions.center_order == p
        && conditions.center_lt_derived
        && ((conditions.class == 3 && conditions.rank == 3)
            || (conditions.class == 4 && conditions.camina_on_nonderived == Some(true)));

    Ok(TheoremVerdict {
        order: n,
        prime: p,
        conditions,
        predicted_nontrivial,
        computed_outc_order: None,
        agree: None,
        witness: None,
    })
}

fn structural_dump(v: &TheoremVerdict) -> String {
    format!(
        "order {}, p = {}, |Z| = {}, Z < G' = {}, cl = {}, d = {}, \
         class-4 commutator condition = {}, predicted non-trivial = {}, \
         computed |Out_c| = {}",
        v.order,
        v.prime,
        v.conditions.center_order,
        v.conditions.center_lt_derived,
        v.conditions.class,
        v.conditions.rank,
        match v.conditions.camina_on_nonderived {
            Some(b) => b.to_string(),
            None => "not-evaluated".into(),
        },
        v.predicted_nontrivial,
        match v.computed_outc_order {
            Some(k) => k.to_string(),
            None => "not-computed".into(),
        },
    )
}

/// Evaluate the conditions AND enumerate, then demand agreement.  For a
/// flagged group the enumerated order must be exactly p and a non-inner
/// witness must exist; flagged class-3 groups additionally get |G′| = p²
/// and the Camina-pair property of (G, Z) checked.
pub fn verify(t: &GroupTable, gens: &[Elem]) -> Result<TheoremVerdict> {
    let mut v = evaluate_conditions(t)?;
    let computed = automorphism::outc_order(t, gens)?;
    v.computed_outc_order = Some(computed);
    let agree = v.predicted_nontrivial == (computed > 1);
    v.agree = Some(agree);
    if !agree {
        return Err(Error::Disagreement(format!(
            "prediction contradicts enumeration: {}",
            structural_dump(&v)
        )));
    }
    if v.predicted_nontrivial {
        if computed != v.prime {
            return Err(Error::Disagreement(format!(
                "flagged group must have |Out_c| = p: {}",
                structural_dump(&v)
            )));
        }
        if !(2..=3).contains(&v.conditions.rank) {
            return Err(Error::Disagreement(format!(
                "flagged group with impossible rank: {}",
                structural_dump(&v)
            )));
        }
        let z = structure::center(t);
        let der = structure::derived_subgroup(t);
        if v.conditions.class == 3 {
            if der.len() != v.prime * v.prime {
                return Err(Error::Disagreement(format!(
                    "flagged class-3 group must have |G'| = p²: {}",
                    structural_dump(&v)
                )));
            }
            let cam = structure::is_camina_pair(t, &z)?;
            if !cam.holds {
                return Err(Error::Disagreement(format!(
                    "flagged class-3 group must make (G, Z) a Camina pair: {}",
                    structural_dump(&v)
                )));
            }
        }
        let witness = automorphism::find_noninner_witness(t, gens)?;
        if witness.is_none() {
            return Err(Error::Disagreement(format!(
                "non-trivial Out_c but no non-inner witness found: {}",
                structural_dump(&v)
            )));
        }
        v.witness = witness;
    }
    Ok(v)
}

/// One database entry's outcome.
#[derive(Debug, Clone)]
pub struct ScanRecord {
    pub name: String,
    pub verdict: TheoremVerdict,
}

/// Whole-database scan result, in input order.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    /// Names of groups predicted (and confirmed) to have Out_c ≠ 1.
    pub flagged: Vec<String>,
}

/// Run `verify` over a database of groups of one common order p⁵.
/// Verification is per-group parallel; records keep input order.
pub fn scan_database(groups: &[(String, GroupTable)]) -> Result<ScanReport> {
    if groups.is_empty() {
        return Ok(ScanReport { records: Vec::new(), flagged: Vec::new() });
    }
    let order0 = groups[0].1.order();
    for (name, t) in groups {
        if t.order() != order0 {
            return Err(Error::Input(format!(
                "mixed orders in database: {name} has order {}, expected {order0}",
                t.order()
            )));
        }
    }
    let verdicts: Vec<Result<TheoremVerdict>> = groups
        .par_iter()
        .map(|(_, t)| {
            let gens = structure::minimal_generating_tuple(t)?;
            verify(t, &gens)
        })
        .collect();
    let mut records = Vec::with_capacity(groups.len());
    for ((name, _), verdict) in groups.iter().zip(verdicts) {
        let verdict = verdict.map_err(|e| match e {
            Error::Disagreement(msg) => Error::Disagreement(format!("{name}: {msg}")),
            other => other,
        })?;
        records.push(ScanRecord { name: name.clone(), verdict });
    }
    let flagged = records
        .iter()
        .filter(|r| r.verdict.predicted_nontrivial)
        .map(|r| r.name.clone())
        .collect();
    Ok(ScanReport { records, flagged })
}

/// Which mechanism settles Out_c = 1 for a large-center group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LargeCenterBranch {
    Abelian,
    /// An abelian subgroup of index p exists (quotient by it is cyclic).
    MaximalAbelianSubgroup,
    /// Class 2 with cyclic derived subgroup.
    CyclicDerived,
    /// The remaining class-3 analysis.
    ClassThree,
}

#[derive(Debug, Clone)]
pub struct LargeCenterReport {
    pub center_order: usize,
    pub class: usize,
    pub outc: usize,
    pub branch: LargeCenterBranch,
    pub abelian_subgroup_order: Option<usize>,
    pub cyclic_derived: bool,
}

/// For |G| = p⁵ with |Z| ≥ p²: assert Out_c = 1 by enumeration and report
/// which mechanism applies.  Where the underlying construction guarantees
/// an abelian subgroup of index p — |Z| ≥ p³, or class 2 with
/// Z = G′ ≅ Cp×Cp — its absence is a fatal disagreement.
pub fn large_center_check(t: &GroupTable, gens: &[Elem]) -> Result<LargeCenterReport> {
    let p = expect_p5(t)?;
    let z = structure::center(t);
    if z.len() < p * p {
        return Err(Error::Input(format!(
            "check applies to |Z| ≥ p² only; this group has |Z| = {}",
            z.len()
        )));
    }
    let outc = automorphism::outc_order(t, gens)?;
    if outc != 1 {
        return Err(Error::Disagreement(format!(
            "group of order p^5 with |Z| = {} ≥ p² has |Out_c| = {outc}",
            z.len()
        )));
    }
    let class = structure::nilpotency_class(t).expect("p-groups are nilpotent");
    if class > 3 {
        return Err(Error::Disagreement(format!(
            "|Z| ≥ p² forces class ≤ 3, got class {class}"
        )));
    }
    let der = structure::derived_subgroup(t);
    let cyclic_derived = der.is_cyclic(t);
    let found = structure::find_abelian_subgroup_of_index_p(t)?;

    if z.len() >= p * p * p && found.is_none() {
        return Err(Error::Disagreement(
            "an abelian subgroup of index p must exist when |Z| ≥ p³".into(),
        ));
    }
    if class == 2 && z.members() == der.members() {
        let divisors = abelian::elementary_divisors(t, z.members())?;
        if divisors == vec![p, p] && found.is_none() {
            return Err(Error::Disagreement(
                "class-2 groups with Z = G' ≅ Cp×Cp always have a maximal abelian \
                 subgroup of index p"
                    .into(),
            ));
        }
    }

    let branch = if t.is_abelian() {
        LargeCenterBranch::Abelian
    } else if found.is_some() {
        LargeCenterBranch::MaximalAbelianSubgroup
    } else if class == 2 && cyclic_derived {
        LargeCenterBranch::CyclicDerived
    } else {
        LargeCenterBranch::ClassThree
    };

    Ok(LargeCenterReport {
        center_order: z.len(),
        class,
        outc,
        branch,
        abelian_subgroup_order: found.map(|s| s.len()),
        cyclic_derived,
    })
}
