mod support;

use std::collections::HashSet;

use proptest::prelude::*;

use bcells::area::{in_area, in_area_reduced, Area};
use bcells::descent::{rdes, rxi};
use bcells::group::{element_at, enumerate, group_order, index_of};
use bcells::kl::kl_basis;
use bcells::knuth::{applicable_moves, knuth_classes, KnuthKind};
use bcells::report::recording_fibers;
use bcells::tableau::{insertion_bitableau, rs_generalized, rs_generalized_inverse};
use bcells::vogan::{
    build_epsilon, build_psi, refine, refine_alternating, star_by_definition, star_closed, vogan_classes_from,
    xi_orbits_from, CellOracle, OrderPolicy, XiMaps,
};
use bcells::{Gen, GroupPartition, WeightFunction};

use support::*;

fn w(a: u32, b: u32) -> WeightFunction {
    WeightFunction::new(a, b).unwrap()
}

/// Weights on both sides of each threshold that matters for rank `n`.
fn sample_weights(n: usize) -> Vec<WeightFunction> {
    let mut out = vec![w(1, 1), w(2, 1), w(3, 2)];
    for k in 1..=n as u32 {
        out.push(w(1, k));
        out.push(w(2, 2 * k + 1));
    }
    out
}

#[test]
fn rxi_is_constant_on_oracle_left_cells() {
    for n in 2..=4 {
        for weight in sample_weights(n) {
            let cells = kl_basis(n, weight).unwrap().left_cells();
            let elements = enumerate(n).unwrap();
            for class in cells.classes() {
                let first = rxi(&elements[class[0] as usize], weight);
                assert!(
                    class.iter().all(|&i| rxi(&elements[i as usize], weight) == first),
                    "n = {n}, {weight}: R^Ξ varies on the cell of {}",
                    elements[class[0] as usize]
                );
            }
        }
    }
}

#[test]
fn descent_sets_match_length_oracle() {
    for n in 1..=5 {
        for x in all_windows(n) {
            let p = perm(&x);
            let by_length: Vec<usize> = (0..n).filter(|&i| length(&times_gen(&x, i)) < length(&x)).collect();
            let ours: Vec<usize> = rdes(&p).iter().map(|g| g.0 as usize).collect();
            assert_eq!(ours, by_length, "{p}");
            assert_eq!(p.length(), length(&x), "{p}");
        }
    }
}

#[test]
fn area_is_a_union_of_vogan_classes() {
    for n in 2..=6 {
        let area = Area::new(n).unwrap().indices();
        for weight in [WeightFunction::asymptotic(n), w(1, n as u32 - 1), w(2, 2 * n as u32 - 3)] {
            let classes = vogan_classes_from(&XiMaps::new(n, weight, OrderPolicy::default()).unwrap())
                .unwrap()
                .final_classes;
            assert!(classes.saturates(&area), "n = {n}, {weight}");
        }
    }
}

#[test]
fn orbits_are_right_cells_exactly_off_reduced_area() {
    for n in 2..=5 {
        let orbits = xi_orbits_from(&XiMaps::new(n, WeightFunction::asymptotic(n), OrderPolicy::default()).unwrap())
            .unwrap()
            .right;
        let elements = enumerate(n).unwrap();
        let fibers = GroupPartition::from_labels(n, &elements.iter().map(insertion_bitableau).collect::<Vec<_>>());
        assert!(orbits.refines(&fibers), "n = {n}: an orbit leaves its right cell");
        let orbit_sizes = orbits.sizes();
        let fiber_sizes = fibers.sizes();
        for (i, x) in elements.iter().enumerate() {
            let same = orbit_sizes[orbits.class_of(i) as usize] == fiber_sizes[fibers.class_of(i) as usize];
            assert_eq!(same, !in_area_reduced(x), "n = {n}: {x}");
        }
    }
}

#[test]
fn star_closed_form_matches_definition() {
    for n in 2..=5 {
        let orbits = xi_orbits_from(&XiMaps::new(n, WeightFunction::asymptotic(n), OrderPolicy::default()).unwrap())
            .unwrap();
        let by_def = star_by_definition(&orbits).unwrap();
        for (i, x) in enumerate(n).unwrap().iter().enumerate() {
            assert_eq!(by_def[i], star_closed(x), "n = {n}: {x}");
        }
    }
}

#[test]
fn alternating_refinement_agrees_with_simultaneous() {
    for n in 2..=4 {
        for weight in [WeightFunction::asymptotic(n), w(1, n as u32 - 1)] {
            let maps = XiMaps::new(n, weight, OrderPolicy::default()).unwrap();
            let start = bcells::descent::rxi_partition(n, weight).unwrap();
            let simultaneous = refine(n, start.clone(), &[&maps.eps, &maps.psi]).pop().unwrap();
            assert_eq!(refine_alternating(n, start, &[&maps.eps, &maps.psi]), simultaneous, "n = {n}, {weight}");
        }
    }
}

#[test]
fn parabolic_cells_from_hecke_algebra_match_rs() {
    for n in 2..=4 {
        let eps = build_epsilon(n, OrderPolicy::default()).unwrap();
        let kl = CellOracle::from_kl(&eps, w(1, 1)).unwrap();
        let rs = CellOracle::from_rs(&eps);
        assert_eq!((kl.left, kl.right), (rs.left, rs.right), "ε, n = {n}");
        let weight = WeightFunction::asymptotic(n);
        let psi = build_psi(n, weight, OrderPolicy::default()).unwrap();
        let kl = CellOracle::from_kl(&psi, weight).unwrap();
        let rs = CellOracle::from_rs(&psi);
        assert_eq!((kl.left, kl.right), (rs.left, rs.right), "ψ, n = {n}");
    }
}

#[test]
fn intermediate_classes_merge_asymptotic_cells_only_inside_area() {
    for n in 2..=6 {
        let maps = XiMaps::new(n, WeightFunction::asymptotic(n), OrderPolicy::default()).unwrap();
        let asym = vogan_classes_from(&maps).unwrap().final_classes;
        assert_eq!(asym, recording_fibers(n).unwrap(), "n = {n}");
        let inter = vogan_classes_from(&maps.reweighted(w(1, n as u32 - 1)).unwrap()).unwrap().final_classes;
        assert!(asym.refines(&inter));
        let elements = enumerate(n).unwrap();
        let kept: HashSet<Vec<u32>> = inter.classes().into_iter().collect();
        for cell in asym.classes() {
            assert_eq!(kept.contains(&cell), !in_area(&elements[cell[0] as usize]), "n = {n}");
        }
    }
}

#[test]
fn restricted_knuth_classes_keep_the_coset_representative() {
    use bcells::group::{coset_decompose, Parabolic};
    for n in 2..=4 {
        let kinds = [(KnuthKind::I, n - 1), (KnuthKind::II, n - 1), (KnuthKind::III, n - 1)];
        let classes = knuth_classes(n, &kinds).unwrap();
        let elements = enumerate(n).unwrap();
        let key = |x: &bcells::SignedPerm| {
            let d = coset_decompose(x, Parabolic::K);
            (d.rep, insertion_bitableau(&d.part.restrict_to(n - 1)))
        };
        for class in classes.classes() {
            let first = key(&elements[class[0] as usize]);
            assert!(class.iter().all(|&i| key(&elements[i as usize]) == first), "n = {n}");
        }
    }
}

proptest! {
    #[test]
    fn rs_round_trip(n in 1usize..=7, seed in any::<u64>()) {
        let x = element_at(n, (seed % group_order(n) as u64) as usize);
        let (a, b) = rs_generalized(&x);
        prop_assert_eq!(a.shape(), b.shape());
        prop_assert_eq!(rs_generalized_inverse(&a, &b).unwrap(), x);
        prop_assert_eq!(rs_generalized(&x.inverse()), (b, a));
    }

    #[test]
    fn knuth_moves_keep_insertion_bitableau(n in 2usize..=7, seed in any::<u64>()) {
        let x = element_at(n, (seed % group_order(n) as u64) as usize);
        let kinds = [(KnuthKind::I, n), (KnuthKind::II, n), (KnuthKind::III, n)];
        for (_, y) in applicable_moves(&x, &kinds) {
            prop_assert_eq!(insertion_bitableau(&y), insertion_bitableau(&x));
        }
    }

    #[test]
    fn index_round_trip(n in 1usize..=7, seed in any::<u64>()) {
        let i = (seed % group_order(n) as u64) as usize;
        let x = element_at(n, i);
        prop_assert_eq!(index_of(&x), i);
        prop_assert_eq!(x.length(), length(x.window()));
        prop_assert_eq!(x.mul_gen_right(Gen::T).window().to_vec(), times_gen(x.window(), 0));
    }
}
