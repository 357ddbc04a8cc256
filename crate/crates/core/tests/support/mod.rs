//! Shared helpers for the integration suites: an independent convex-hull
//! membership oracle for the orbit order, and seeded random generators.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num::{Signed, Zero};
use rand::Rng;

use abstrata_core::{
    build_root_system, compare_pointwise, extend_harmonic, q0, q1, qi, qr, reflect, ABPair,
    CorootFunction, Family, GroupContext, PointwiseCmp, Q, RootSystemData, RootSystemSpec,
    Vertex, VertexSet,
};

/// Every simple root system with rank at most `max`.
pub fn specs_up_to(max: usize) -> Vec<RootSystemSpec> {
    let mut specs = Vec::new();
    for rank in 1..=max {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            if let Ok(spec) = RootSystemSpec::new(family, rank) {
                specs.push(spec);
            }
        }
    }
    for rank in [6, 7, 8] {
        if rank <= max {
            specs.push(RootSystemSpec::new(Family::E, rank).unwrap());
        }
    }
    if max >= 4 {
        specs.push(RootSystemSpec::new(Family::F, 4).unwrap());
    }
    if max >= 2 {
        specs.push(RootSystemSpec::new(Family::G, 2).unwrap());
    }
    specs
}

/// A random rational with numerator in [-12, 12] and denominator dividing 12.
pub fn rational(rng: &mut impl Rng) -> Q {
    let numerator = rng.gen_range(-12..=12);
    let denominator = [1, 2, 3, 4, 6, 12][rng.gen_range(0..6)];
    qr(numerator, denominator)
}

/// A random function with `rational` entries.
pub fn random_function(rng: &mut impl Rng, rank: usize) -> CorootFunction {
    CorootFunction::new((0..rank).map(|_| rational(rng)).collect())
}

/// The full Weyl orbit of `f`, closed under simple reflections.
pub fn weyl_orbit(data: &RootSystemData, f: &CorootFunction) -> Vec<CorootFunction> {
    let mut seen: BTreeSet<Vec<Q>> = BTreeSet::new();
    seen.insert(f.values().to_vec());
    let mut frontier = vec![f.clone()];
    while let Some(g) = frontier.pop() {
        for v in data.vertices() {
            let h = reflect(data, &g, v);
            if seen.insert(h.values().to_vec()) {
                frontier.push(h);
            }
        }
    }
    seen.into_iter().map(CorootFunction::new).collect()
}

/// Exact membership of `target` in the convex hull of `points`: phase-1
/// simplex with Bland's rule on `sum lambda_j p_j = target, sum lambda_j = 1,
/// lambda >= 0`. Bland's rule guarantees termination; rational arithmetic
/// makes the verdict exact.
pub fn in_convex_hull(points: &[CorootFunction], target: &CorootFunction) -> bool {
    let m = points.len();
    assert!(m > 0, "hull of an empty set is empty");
    let d = target.len();
    let rows = d + 1;
    let cols = m + rows;

    let mut a: Vec<Vec<Q>> = vec![vec![q0(); cols]; rows];
    let mut b: Vec<Q> = vec![q0(); rows];
    for i in 0..d {
        for (j, p) in points.iter().enumerate() {
            a[i][j] = p.values()[i].clone();
        }
        b[i] = target.values()[i].clone();
    }
    for j in 0..m {
        a[d][j] = q1();
    }
    b[d] = q1();

    // Flip rows to nonnegative right-hand sides, then append the artificial
    // identity block.
    for i in 0..rows {
        if b[i].is_negative() {
            for j in 0..m {
                a[i][j] = -a[i][j].clone();
            }
            b[i] = -b[i].clone();
        }
        a[i][m + i] = q1();
    }

    let mut basis: Vec<usize> = (m..cols).collect();
    let is_artificial = |j: usize| j >= m;
    loop {
        // Bland: enter the lowest-index column with negative reduced cost.
        let mut entering = None;
        for j in 0..cols {
            if basis.contains(&j) {
                continue;
            }
            let mut rc = if is_artificial(j) { q1() } else { q0() };
            for i in 0..rows {
                if is_artificial(basis[i]) {
                    rc = rc - &a[i][j];
                }
            }
            if rc.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(e) = entering else { break };

        // Ratio test; ties leave the lowest basis index (Bland again).
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for i in 0..rows {
            if !a[i][e].is_positive() {
                continue;
            }
            let ratio = &b[i] / &a[i][e];
            let better = match (&best, leave) {
                (None, _) => true,
                (Some(r), Some(l)) => ratio < *r || (ratio == *r && basis[i] < basis[l]),
                _ => unreachable!(),
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        let l = leave.expect("phase-1 objective is bounded below by zero");

        let pivot = a[l][e].clone();
        for j in 0..cols {
            a[l][j] = &a[l][j] / &pivot;
        }
        b[l] = &b[l] / &pivot;
        for i in 0..rows {
            if i == l || a[i][e].is_zero() {
                continue;
            }
            let factor = a[i][e].clone();
            for j in 0..cols {
                a[i][j] = &a[i][j] - &factor * &a[l][j];
            }
            b[i] = &b[i] - &factor * &b[l];
        }
        basis[l] = e;
    }

    let mut objective = q0();
    for i in 0..rows {
        if is_artificial(basis[i]) {
            objective = objective + &b[i];
        }
    }
    objective.is_zero()
}

/// Every element of the center, the trivial one included, generated by
/// closing the generator set under addition.
pub fn all_central_classes(data: &RootSystemData) -> Vec<abstrata_core::CentralElement> {
    let generators = data.center_generators();
    let mut seen: BTreeSet<Vec<Q>> = BTreeSet::new();
    let trivial = abstrata_core::CentralElement::trivial(data.rank());
    seen.insert(trivial.residues().to_vec());
    let mut all = vec![trivial];
    let mut frontier = all.clone();
    while let Some(c) = frontier.pop() {
        for g in &generators {
            let next = c.add(g, data);
            if seen.insert(next.residues().to_vec()) {
                all.push(next.clone());
                frontier.push(next);
            }
        }
    }
    all
}

/// A random pointwise-comparable pair `start >= end` of valid pairs in the
/// context. The start is a harmonic extension of congruent values
/// `residue + {0,1}`; the end drops a random subset of those boundary values
/// by integers. Rejection keeps only pointwise-comparable outcomes, and the
/// zero pair is the deterministic fallback.
pub fn random_comparable_pair(
    rng: &mut impl Rng,
    context: &GroupContext,
) -> (ABPair, ABPair) {
    let data = context.data();
    for _ in 0..64 {
        let mut upper_set = VertexSet::empty();
        for v in data.vertices() {
            if rng.gen_bool(0.5) {
                upper_set.insert(v);
            }
        }
        let upper_values: Vec<Q> = upper_set
            .iter()
            .map(|v| context.class().residue(v) + qi(rng.gen_range(0..=1)))
            .collect();
        let start_f = extend_harmonic(data, upper_set, &upper_values);
        let Ok(start) = ABPair::new(context.clone(), start_f.clone(), upper_set) else {
            continue;
        };

        let mut lower_set = VertexSet::empty();
        for v in upper_set.iter() {
            if rng.gen_bool(0.7) {
                lower_set.insert(v);
            }
        }
        let lower_values: Vec<Q> = lower_set
            .iter()
            .map(|v| start_f.value(v) - qi(rng.gen_range(0..=1)))
            .collect();
        let end_f = extend_harmonic(data, lower_set, &lower_values);
        match compare_pointwise(&start_f, &end_f) {
            PointwiseCmp::Greater | PointwiseCmp::Equal => {
                if let Ok(end) = ABPair::new(context.clone(), end_f, lower_set) {
                    return (start, end);
                }
            }
            _ => continue,
        }
    }
    let zero = ABPair::new(
        context.clone(),
        CorootFunction::zero(data.rank()),
        VertexSet::empty(),
    )
    .expect("the zero pair is always valid");
    (zero.clone(), zero)
}

/// Convenience: the simply connected context for a family and rank.
pub fn simply_connected(family: Family, rank: usize) -> GroupContext {
    let data = build_root_system(RootSystemSpec::new(family, rank).unwrap());
    GroupContext::simply_connected(data)
}

/// Convenience: a vertex set from indices.
pub fn vset(indices: &[usize]) -> VertexSet {
    let mut s = VertexSet::empty();
    for &i in indices {
        s.insert(Vertex(i));
    }
    s
}
