//! Frozen numeric fixtures: inverse Cartan matrices, highest-root
//! coefficients, center structure, and the worked small-rank journeys the
//! library is calibrated against.

mod support;

use abstrata_core::{
    ab_compare, build_root_system, dominant_representative, enumerate_between, is_superharmonic,
    minimal_support, plan_moves, profile, profile_superharmonic, qi, qr, reduce_by_one, reflect,
    validate_plan, ABPair, AbOrder, CorootFunction, Family, GroupContext, Move, Q,
    RootSystemSpec, Vertex, VertexSet,
};

use support::vset;

fn data(family: Family, rank: usize) -> abstrata_core::RootSystemData {
    build_root_system(RootSystemSpec::new(family, rank).unwrap())
}

fn q(p: i64, d: i64) -> Q {
    qr(p, d)
}

#[test]
fn inverse_cartan_matrices_match_the_frozen_tables() {
    let b3 = data(Family::B, 3);
    assert_eq!(
        b3.cartan_inverse(),
        &[
            vec![qi(1), qi(1), qi(1)],
            vec![qi(1), qi(2), qi(2)],
            vec![q(1, 2), qi(1), q(3, 2)],
        ]
    );

    let c3 = data(Family::C, 3);
    assert_eq!(
        c3.cartan_inverse(),
        &[
            vec![qi(1), qi(1), q(1, 2)],
            vec![qi(1), qi(2), qi(1)],
            vec![qi(1), qi(2), q(3, 2)],
        ]
    );

    let f4 = data(Family::F, 4);
    assert_eq!(
        f4.cartan_inverse(),
        &[
            vec![qi(2), qi(3), qi(4), qi(2)],
            vec![qi(3), qi(6), qi(8), qi(4)],
            vec![qi(2), qi(4), qi(6), qi(3)],
            vec![qi(1), qi(2), qi(3), qi(2)],
        ]
    );

    let g2 = data(Family::G, 2);
    assert_eq!(
        g2.cartan_inverse(),
        &[vec![qi(2), qi(1)], vec![qi(3), qi(2)]]
    );
}

#[test]
fn highest_root_coefficients_match_the_frozen_tables() {
    let cases: Vec<(Family, usize, Vec<i64>, Vec<i64>)> = vec![
        (Family::A, 5, vec![1; 5], vec![1; 5]),
        (Family::B, 2, vec![1, 2], vec![1, 1]),
        (Family::B, 5, vec![1, 2, 2, 2, 2], vec![1, 2, 2, 2, 1]),
        (Family::C, 4, vec![2, 2, 2, 1], vec![1, 1, 1, 1]),
        (Family::D, 6, vec![1, 2, 2, 2, 1, 1], vec![1, 2, 2, 2, 1, 1]),
        (Family::E, 6, vec![1, 2, 2, 3, 2, 1], vec![1, 2, 2, 3, 2, 1]),
        (Family::E, 7, vec![2, 2, 3, 4, 3, 2, 1], vec![2, 2, 3, 4, 3, 2, 1]),
        (
            Family::E,
            8,
            vec![2, 3, 4, 6, 5, 4, 3, 2],
            vec![2, 3, 4, 6, 5, 4, 3, 2],
        ),
        (Family::F, 4, vec![2, 3, 4, 2], vec![2, 3, 2, 1]),
        (Family::G, 2, vec![3, 2], vec![1, 2]),
    ];
    for (family, rank, h, g) in cases {
        let root = data(family, rank).highest_root();
        assert_eq!(root.h, h, "marks of {family:?}{rank}");
        assert_eq!(root.g, g, "comarks of {family:?}{rank}");
    }
}

#[test]
fn center_orders_match_the_classification() {
    let expected: Vec<(Family, usize, u64)> = vec![
        (Family::A, 1, 2),
        (Family::A, 4, 5),
        (Family::B, 4, 2),
        (Family::C, 5, 2),
        (Family::D, 5, 4),
        (Family::D, 6, 4),
        (Family::E, 6, 3),
        (Family::E, 7, 2),
        (Family::E, 8, 1),
        (Family::F, 4, 1),
        (Family::G, 2, 1),
    ];
    for (family, rank, order) in expected {
        assert_eq!(
            data(family, rank).center_order(),
            order,
            "center of {family:?}{rank}"
        );
    }
    // D even is the Klein four-group: two generators; D odd is cyclic.
    assert_eq!(data(Family::D, 6).center_generators().len(), 2);
    assert_eq!(data(Family::D, 5).center_generators().len(), 1);
}

#[test]
fn positive_root_counts_match_the_classification() {
    let expected: Vec<(Family, usize, usize)> = vec![
        (Family::A, 4, 10),
        (Family::B, 3, 9),
        (Family::C, 3, 9),
        (Family::D, 4, 12),
        (Family::F, 4, 24),
        (Family::G, 2, 6),
        (Family::E, 6, 36),
    ];
    for (family, rank, count) in expected {
        assert_eq!(
            data(family, rank).positive_roots().len(),
            count,
            "positive roots of {family:?}{rank}"
        );
    }
}

#[test]
fn sl3_journey_reproduces_the_worked_example() {
    let context = GroupContext::simply_connected(data(Family::A, 2));
    let mu = CorootFunction::new(vec![qi(2), qi(1)]);
    let mu_prime = CorootFunction::new(vec![qi(1), qi(1)]);

    assert_eq!(minimal_support(&context, &mu).unwrap(), vset(&[0]));
    assert_eq!(minimal_support(&context, &mu_prime).unwrap(), vset(&[0, 1]));
    assert_eq!(ab_compare(&context, &mu, &mu_prime), AbOrder::Greater);

    let between = enumerate_between(&context, &mu, &mu_prime).unwrap();
    assert_eq!(
        between.iter().map(|f| f.values().to_vec()).collect::<Vec<_>>(),
        vec![vec![qi(1), qi(1)], vec![qi(2), qi(1)]]
    );

    let start = ABPair::new(context.clone(), mu, vset(&[0])).unwrap();
    let end = ABPair::new(context.clone(), mu_prime, vset(&[0, 1])).unwrap();
    let plan = plan_moves(&start, &end).unwrap();
    assert_eq!(
        plan.moves,
        vec![
            Move::Type1 {
                vertex: Vertex(1),
                value: qi(1)
            },
            Move::Type3 {
                vertex: Vertex(0),
                value: qi(1)
            },
        ]
    );
    let certificates = validate_plan(&plan).unwrap();
    // Replay trace: start, after the support growth, after the drop.
    assert_eq!(certificates.intermediates.len(), 3);
    assert_eq!(certificates.intermediates.first().unwrap(), &start);
    assert_eq!(certificates.intermediates.last().unwrap(), &end);
    assert_eq!(certificates.adjacency.len(), 1);
    assert_eq!(certificates.unit_decompositions, vec![(1, 1)]);

    // Elementary modifications walk the same pair down to zero.
    let step = reduce_by_one(&start, Vertex(0)).unwrap();
    assert_eq!(step.f().values(), &[qi(1), q(1, 2)]);
    let step = reduce_by_one(&step, Vertex(0)).unwrap();
    assert_eq!(step.f().values(), &[qi(0), qi(0)]);
}

#[test]
fn dominant_reduction_replays_its_word() {
    let a2 = data(Family::A, 2);
    let f = CorootFunction::new(vec![qi(-1), qi(0)]);
    let (dominant, word) = dominant_representative(&a2, &f);
    assert_eq!(dominant.values(), &[qi(1), qi(1)]);
    assert_eq!(word, vec![Vertex(0), Vertex(1)]);

    let mut replay = f;
    for v in &word {
        replay = reflect(&a2, &replay, *v);
    }
    assert_eq!(replay, dominant);
}

#[test]
fn profile_and_defect_routes_agree_on_the_b2_boundary_case() {
    let b2 = data(Family::B, 2);
    // Harmonic at the long root: defect 2*1 - 2*(1/2)... the borderline
    // superharmonic example and the violating one straddle value 3/2.
    let good = CorootFunction::new(vec![qi(1), qi(1)]);
    let bad = CorootFunction::new(vec![qi(1), q(3, 2)]);
    for (f, expected) in [(&good, true), (&bad, false)] {
        let algebraic = is_superharmonic(&b2, f).verdict;
        let piecewise = profile_superharmonic(&profile(&b2, f));
        assert_eq!(algebraic, expected);
        assert_eq!(piecewise, expected, "routes disagree on {f}");
    }
}

#[test]
fn e8_has_one_special_root_at_the_trivalent_vertex() {
    let e8 = data(Family::E, 8);
    let report = abstrata_core::special_roots(&e8);
    assert_eq!(report.special, VertexSet::single(Vertex(3)));
}
