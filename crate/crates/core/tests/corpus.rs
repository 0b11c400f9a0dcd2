//! Validation of the bundled corpus: every presentation must enumerate to
//! its documented order, and a sample of groups is cross-checked against
//! independent direct constructions.

mod common;

use common::{corpus_dir, group, CORPUS};
use outc_core::abelian::elementary_divisors;
use outc_core::automorphism::outc_order;
use outc_core::construct;
use outc_core::group::parse_table_str;
use outc_core::structure::{
    center, derived_subgroup, exponent, nilpotency_class, rank_d, StructureReport,
};
use outc_core::GroupTable;

const EXPECTED_ORDERS: &[(&str, usize)] = &[
    ("c1", 1),
    ("c2", 2),
    ("c3", 3),
    ("c4", 4),
    ("klein4", 4),
    ("c5", 5),
    ("c6", 6),
    ("s3", 6),
    ("c7", 7),
    ("c8", 8),
    ("c4x2", 8),
    ("c2x2x2", 8),
    ("d8", 8),
    ("q8", 8),
    ("c9", 9),
    ("c3x3", 9),
    ("c10", 10),
    ("d10", 10),
    ("c11", 11),
    ("c12", 12),
    ("c6x2", 12),
    ("d12", 12),
    ("dic3", 12),
    ("a4", 12),
    ("c13", 13),
    ("c14", 14),
    ("d14", 14),
    ("c15", 15),
    ("c16", 16),
    ("c8x2", 16),
    ("c4x4", 16),
    ("c4x2x2", 16),
    ("c2_4", 16),
    ("d16", 16),
    ("sd16", 16),
    ("q16", 16),
    ("mod16", 16),
    ("d8x2", 16),
    ("q8x2", 16),
    ("c4sdc4", 16),
    ("pauli16", 16),
    ("g16_3", 16),
    ("c27", 27),
    ("c9x3", 27),
    ("c3x3x3", 27),
    ("heis27", 27),
    ("m27", 27),
    ("c32", 32),
    ("c16x2", 32),
    ("c8x4", 32),
    ("c8x2x2", 32),
    ("c4x4x2", 32),
    ("c4x2x2x2", 32),
    ("c2_5", 32),
    ("d32", 32),
    ("sd32", 32),
    ("q32", 32),
    ("mod32", 32),
    ("hol_c8", 32),
    ("q16rc2", 32),
    ("es32p", 32),
    ("es32m", 32),
    ("d16x2", 32),
    ("q16x2", 32),
    ("sd16x2", 32),
    ("mod16x2", 32),
    ("d8x4", 32),
    ("q8x4", 32),
    ("d8x2x2", 32),
    ("q8x2x2", 32),
    ("c4sdc4x2", 32),
    ("pauli16x2", 32),
    ("g16_3x2", 32),
    ("c8sdc4", 32),
    ("c8sdc4i", 32),
    ("c8sdc4m", 32),
    ("c4wrc2", 32),
    ("c81", 81),
    ("c27x3", 81),
    ("c9x9", 81),
    ("c9x3x3", 81),
    ("c3_4", 81),
    ("m81", 81),
    ("heis27xc3", 81),
    ("m27xc3", 81),
    ("wr33", 81),
    ("c9sdc9", 81),
    ("c243", 243),
    ("c3_5", 243),
    ("c81x3", 243),
    ("c9x9x3", 243),
    ("es243p", 243),
    ("es243m", 243),
    ("m243", 243),
    ("c27sdc9", 243),
    ("wr33xc3", 243),
    ("heis27xc9", 243),
    ("heis27xc3xc3", 243),
    ("c9sdc9xc3", 243),
    ("m81xc3", 243),
];

fn order_multiset(t: &GroupTable) -> Vec<usize> {
    let mut v: Vec<usize> = (0..t.order()).map(|x| t.element_order(x)).collect();
    v.sort_unstable();
    v
}

#[test]
fn every_bundled_presentation_enumerates_to_its_order() {
    assert_eq!(
        CORPUS.len(),
        EXPECTED_ORDERS.len(),
        "corpus contents drifted from the expected list: {:?}",
        CORPUS.keys().collect::<Vec<_>>()
    );
    for &(name, order) in EXPECTED_ORDERS {
        assert_eq!(group(name).table.order(), order, "order mismatch for {name}");
    }
}

#[test]
fn presentations_agree_with_direct_constructions() {
    let checks: &[(&str, GroupTable)] = &[
        ("d8", construct::dihedral(8)),
        ("q8", construct::dicyclic(2)),
        ("d16", construct::dihedral(16)),
        ("sd16", construct::semidihedral(4)),
        ("q16", construct::dicyclic(4)),
        ("d32", construct::dihedral(32)),
        ("sd32", construct::semidihedral(5)),
        ("q32", construct::dicyclic(8)),
        ("heis27", construct::heisenberg(3)),
        ("dic3", construct::dicyclic(3)),
        ("c12", construct::cyclic(12)),
        ("c4x2", construct::abelian(&[4, 2])),
    ];
    for (name, reference) in checks {
        let t = &group(name).table;
        assert_eq!(t.order(), reference.order(), "{name}");
        assert_eq!(order_multiset(t), order_multiset(reference), "{name}");
        assert_eq!(
            t.conjugacy_classes().count(),
            reference.conjugacy_classes().count(),
            "{name}"
        );
        assert_eq!(center(t).len(), center(reference).len(), "{name}");
        assert_eq!(nilpotency_class(t), nilpotency_class(reference), "{name}");
    }
}

#[test]
fn structural_spot_checks() {
    // The two order-32 groups built to carry non-inner class-preserving
    // automorphisms: centre of order 2 inside a derived subgroup of order
    // 4, class 3, three generators needed.
    for name in ["hol_c8", "q16rc2"] {
        let t = &group(name).table;
        let z = center(t);
        let der = derived_subgroup(t);
        assert_eq!(z.len(), 2, "{name}");
        assert_eq!(der.len(), 4, "{name}");
        assert!(z.is_proper_subset_of(&der), "{name}");
        assert!(der.is_cyclic(t), "{name}");
        assert_eq!(nilpotency_class(t), Some(3), "{name}");
        assert_eq!(rank_d(t).unwrap(), 3, "{name}");
    }
    // They are not isomorphic: involution counts differ.
    let invs = |t: &GroupTable| (1..t.order()).filter(|&x| t.mul(x, x) == 0).count();
    assert_eq!(invs(&group("hol_c8").table), 15);
    assert_eq!(invs(&group("q16rc2").table), 7);

    // Extraspecial families: Z = G' of order p, class 2, expected exponents.
    for (name, p, expo) in [
        ("heis27", 3, 3),
        ("m27", 3, 9),
        ("es32p", 2, 4),
        ("es32m", 2, 4),
        ("es243p", 3, 3),
        ("es243m", 3, 9),
    ] {
        let t = &group(name).table;
        let z = center(t);
        let der = derived_subgroup(t);
        assert_eq!(z.len(), p, "{name}");
        assert_eq!(z.members(), der.members(), "{name}");
        assert_eq!(nilpotency_class(t), Some(2), "{name}");
        assert_eq!(exponent(t), expo, "{name}");
    }

    // Maximal class at order 81.
    assert_eq!(nilpotency_class(&group("wr33").table), Some(3));
    assert_eq!(center(&group("wr33").table).len(), 3);

    // Metacyclic with small centre at order 243: class 3 but rank 2.
    let t = &group("c27sdc9").table;
    assert_eq!(center(t).len(), 3);
    assert_eq!(nilpotency_class(t), Some(3));
    assert_eq!(rank_d(t).unwrap(), 2);

    // g16_3 is none of the other order-16 groups: |Z| = 4 with G/G' of
    // type [2, 4] and seven involutions.
    let t = &group("g16_3").table;
    assert_eq!(center(t).len(), 4);
    let der = derived_subgroup(t);
    assert_eq!(der.len(), 2);
    let quot = outc_core::group::quotient(t, &der).unwrap();
    assert_eq!(
        elementary_divisors(&quot.table, &(0..quot.table.order()).collect::<Vec<_>>()).unwrap(),
        vec![2, 4]
    );
    assert_eq!((1..16).filter(|&x| t.mul(x, x) == 0).count(), 7);
}

#[test]
fn generator_images_generate() {
    for (name, entry) in CORPUS.iter() {
        let closure = entry.table.closure(&entry.gens);
        assert_eq!(closure.len(), entry.table.order(), "{name}");
    }
}

#[test]
fn bundled_tables_parse_and_match() {
    let dir = corpus_dir().join("tables");
    let c5 = parse_table_str(&std::fs::read_to_string(dir.join("c5.tbl")).unwrap()).unwrap();
    assert_eq!(c5.order(), 5);
    assert_eq!(order_multiset(&c5), order_multiset(&construct::cyclic(5)));
    assert_eq!(c5.label_of(2), "x^2");

    let k4 = parse_table_str(&std::fs::read_to_string(dir.join("klein4.tbl")).unwrap()).unwrap();
    assert_eq!(k4.order(), 4);
    assert!(k4.is_abelian());
    assert_eq!(exponent(&k4), 2);

    let d8 = parse_table_str(&std::fs::read_to_string(dir.join("d8.tbl")).unwrap()).unwrap();
    assert_eq!(d8.order(), 8);
    assert_eq!(order_multiset(&d8), order_multiset(&construct::dihedral(8)));
    assert_eq!(center(&d8).len(), 2);
    assert_eq!(d8.label_of(5), "r*s");
    // The labelled table is the same group the bundled presentation gives.
    let from_pres = &group("d8").table;
    assert_eq!(order_multiset(&d8), order_multiset(from_pres));
    assert_eq!(
        d8.conjugacy_classes().count(),
        from_pres.conjugacy_classes().count()
    );
}

#[test]
fn structure_reports_compute_on_every_corpus_group() {
    for (name, entry) in CORPUS.iter() {
        let report = StructureReport::compute(&entry.table)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(report.order, entry.table.order(), "{name}");
    }
}

#[test]
fn known_outc_values_on_selected_groups() {
    // Direct checks feeding the later whole-corpus sweeps: extraspecial
    // groups and every group of order p^4 here have no non-inner
    // class-preserving automorphism; the two engineered order-32 groups do.
    for name in ["d8", "q8", "heis27", "m27", "es32p", "es32m", "d16", "q16", "sd16", "mod16"] {
        let entry = group(name);
        assert_eq!(outc_order(&entry.table, &entry.gens).unwrap(), 1, "{name}");
    }
    for name in ["hol_c8", "q16rc2"] {
        let entry = group(name);
        assert_eq!(outc_order(&entry.table, &entry.gens).unwrap(), 2, "{name}");
    }
}
