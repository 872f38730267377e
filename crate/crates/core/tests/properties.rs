mod common;

use proptest::prelude::*;
use racklab::knot::{self, fixtures};
use racklab::lattice::{self, enumerate_subracks, enumerate_subracks_exhaustive, DEFAULT_CAP};
use racklab::quandle::{self, corresponding_quandle, iota, iota_quandle};
use racklab::rack::{conjugation_identity_check, is_homomorphism};
use racklab::st::{self, STParams};
use racklab::{families, ElementSet, RackTable};

fn sample_racks() -> Vec<RackTable> {
    vec![
        families::st_rack(9, 3, 1).unwrap(),
        families::st_rack(20, 2, 9).unwrap(),
        families::parity_shift(10).unwrap(),
        families::dihedral(12).unwrap(),
        families::alexander(11, 4).unwrap(),
        families::core(&families::symmetric_group_3().0, &families::symmetric_group_3().1)
            .unwrap(),
        families::permutation_rack(&[1, 2, 0, 4, 3, 5]).unwrap(),
    ]
}

fn rack_and_set() -> impl Strategy<Value = (usize, Vec<bool>, Vec<bool>)> {
    (0..sample_racks().len(), prop::collection::vec(any::<bool>(), 20), prop::collection::vec(any::<bool>(), 20))
}

fn mask(r: &RackTable, bits: &[bool]) -> ElementSet {
    ElementSet::from_elements(r.n(), (0..r.n()).filter(|&i| bits[i]))
}

proptest! {
    #[test]
    fn generation_is_a_closure_operator((i, a, b) in rack_and_set()) {
        let r = &sample_racks()[i];
        let s = mask(r, &a);
        let t = s.union(&mask(r, &b));
        let gs = lattice::generate(r, &s);
        prop_assert!(s.is_subset(&gs));
        prop_assert!(lattice::is_subrack(r, &gs));
        prop_assert_eq!(lattice::generate(r, &gs), gs.clone());
        prop_assert!(gs.is_subset(&lattice::generate(r, &t)));
    }

    #[test]
    fn subracks_absorb_atoms((i, a, _b) in rack_and_set()) {
        let r = &sample_racks()[i];
        let q = lattice::generate(r, &mask(r, &a));
        for x in q.iter() {
            prop_assert!(lattice::atom_set(r, x).is_subset(&q));
        }
    }

    #[test]
    fn st_closed_forms_match_generic_machinery(n in 1usize..=40, pick in any::<prop::sample::Index>()) {
        let all = STParams::all_for_modulus(n);
        let p = all[pick.index(all.len())];
        let r = p.rack().unwrap();
        let cq = corresponding_quandle(&r).unwrap();
        for a in 0..n {
            let generic = lattice::atom_of(&r, a).unwrap().to_vec();
            prop_assert_eq!(&st::st_atom(&p, a as u64), &generic);
            prop_assert_eq!(&st::st_atom_inverse_form(&p, a as u64), &generic);
        }
        for x in 0..n {
            for y in 0..n {
                let class = st::class_op_closed_form(&p, x as u64, y as u64);
                let expected = cq.classes()[cq.quandle().op(cq.class_of(x), cq.class_of(y))].clone();
                prop_assert_eq!(class, expected);
            }
        }
    }

    #[test]
    fn st_power_beyond_the_exhaustive_range(n in 65usize..=200, pick in any::<prop::sample::Index>(),
                                            a in any::<prop::sample::Index>(), k in -400i64..=400) {
        let all = STParams::all_for_modulus(n);
        let p = all[pick.index(all.len())];
        let a = a.index(n);
        let r = p.rack().unwrap();
        prop_assert_eq!(st::st_power(&p, a as u64, k) as usize, r.translate_pow(a, k, a));
    }
}

#[test]
fn corpus_invariants() {
    for entry in common::corpus() {
        let r = &entry.rack;
        let name = &entry.name;
        assert_eq!(conjugation_identity_check(r), None, "{name}");

        // Atoms partition the carrier, and each lies inside one orbit.
        let atoms = lattice::atoms(r);
        let total: usize = atoms.iter().map(|a| a.len()).sum();
        assert_eq!(total, r.n(), "{name}");
        let orbits = lattice::orbits(r);
        for atom in &atoms {
            let containing = orbits
                .iter()
                .filter(|o| !atom.members().is_disjoint(o.members()))
                .count();
            assert_eq!(containing, 1, "{name}");
            assert!(orbits.iter().any(|o| atom.members().is_subset(o.members())));
            for x in atom.members().iter() {
                assert_eq!(lattice::atom_of(r, x).unwrap(), *atom, "{name}");
            }
        }
        for o in &orbits {
            assert!(lattice::is_subrack(r, o.members()), "{name}");
        }

        let cq = corresponding_quandle(r).unwrap();
        assert!(cq.quandle().is_quandle(), "{name}");
        assert!(is_homomorphism(cq.projection(), r, cq.quandle()).unwrap(), "{name}");

        let i = iota(r);
        assert!(i.is_automorphism_of(r), "{name}");
        let iq = iota_quandle(r).unwrap();
        assert!(iq.is_quandle());

        if r.is_quandle() {
            for a in 0..r.n() {
                assert_eq!(r.translation(a).unwrap().apply(a), a);
            }
        }
    }
}

#[test]
fn enumeration_matches_exhaustive_filter() {
    for entry in common::corpus() {
        let fast = enumerate_subracks(&entry.rack, DEFAULT_CAP).unwrap();
        let slow = enumerate_subracks_exhaustive(&entry.rack);
        assert_eq!(fast.sets(), slow.sets(), "{}", entry.name);
    }
    // Carriers up to 12 elements.
    let st12: Vec<RackTable> = STParams::all_for_modulus(12)
        .iter()
        .filter(|p| p.s() != 0)
        .map(|p| p.rack().unwrap())
        .collect();
    assert!(!st12.is_empty());
    for r in st12.into_iter().chain([
        families::dihedral(12).unwrap(),
        families::parity_shift(12).unwrap(),
        families::alexander(11, 2).unwrap(),
    ]) {
        let fast = enumerate_subracks(&r, DEFAULT_CAP).unwrap();
        assert_eq!(fast.sets(), enumerate_subracks_exhaustive(&r).sets());
    }
}

#[test]
fn every_rack_subrack_is_an_iota_subrack() {
    for entry in common::corpus() {
        let rep = quandle::subrack_inclusion_report(&entry.rack, DEFAULT_CAP).unwrap();
        assert!(rep.included, "{}: {:?}", entry.name, rep.missing);
        if entry.rack.is_quandle() {
            assert!(!rep.strict, "{}", entry.name);
        }
    }
}

#[test]
fn laurent_identity_for_every_small_triple() {
    use racklab::st::IntPoly;
    let polys = [
        IntPoly(vec![1]),
        IntPoly(vec![0, 1]),
        IntPoly(vec![3, -2, 0, 5]),
        IntPoly(vec![-7, 0, 0, 0, 0, 0, 1]),
    ];
    for n in 1..=30 {
        for p in STParams::all_for_modulus(n) {
            for h in &polys {
                for g in &polys {
                    assert!(st::laurent_identity_check(&p, h, g), "{p:?} {h:?} {g:?}");
                }
            }
        }
    }
}

fn corpus_quandles() -> Vec<(String, RackTable)> {
    let mut out = Vec::new();
    for e in common::corpus() {
        if e.rack.is_quandle() {
            out.push((e.name.clone(), e.rack.clone()));
        } else {
            let cq = corresponding_quandle(&e.rack).unwrap();
            out.push((format!("corresponding({})", e.name), cq.quandle().clone()));
        }
    }
    out
}

#[test]
fn search_matches_brute_force_counts() {
    let diagrams = [
        fixtures::unknot(),
        fixtures::trefoil(),
        fixtures::trefoil_r1(),
        fixtures::trefoil_r2(),
        fixtures::knot_5_1(),
        fixtures::knot_5_2(),
    ];
    for (name, q) in corpus_quandles() {
        for d in &diagrams {
            let fast = knot::count_colorings(d, &q).unwrap();
            assert!(fast >= q.n() as u64, "{name}");
            if (q.n() as f64).powi(d.arc_count() as i32) <= 1e7 {
                assert_eq!(fast, knot::count_colorings_exhaustive(d, &q).unwrap(), "{name}");
            }
            let rev = d.reversed_constraints();
            assert_eq!(fast, knot::count_colorings(&rev, &q).unwrap(), "{name}");
        }
    }
}
