//! Maximal-parabolic strata: special roots, the canonical single-vertex
//! points mu_{c,alpha}, their partial order, the poset with its Hasse
//! diagram, the minimally unstable points found by search, and the
//! hard-coded catalog of answers for the quotient groups, kept separate so
//! the two routes can be compared.

use num::Zero;
use thiserror::Error;

use crate::abpoints::{ABPair, AbOrder, GroupContext};
use crate::harmonic::{extend_harmonic, is_superharmonic};
use crate::linalg::{q1, qr};
use crate::rootsystem::{Family, RootLength, RootSystemData, Vertex, VertexSet};

/// The three defining conditions of a special root, used as failure
/// witnesses: every component of the diagram minus the root must be a
/// simply laced chain, the root must meet each component at an end, and the
/// root must be long.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCondition {
    ComponentNotTypeA,
    MeetsComponentOffEnd,
    NotLong,
}

/// Which roots are special, plus, for each non-special root, the conditions
/// it fails (in definition order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialRootReport {
    pub special: VertexSet,
    pub failures: Vec<(Vertex, Vec<SpecialCondition>)>,
}

/// Connected components of the diagram with one vertex removed.
fn components_without(data: &RootSystemData, removed: Vertex) -> Vec<Vec<Vertex>> {
    let mut seen = VertexSet::single(removed);
    let mut components = Vec::new();
    for start in data.vertices() {
        if seen.contains(start) {
            continue;
        }
        let mut component = vec![start];
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for &w in data.neighbors(v) {
                if !seen.contains(w) {
                    seen.insert(w);
                    component.push(w);
                    frontier.push(w);
                }
            }
        }
        component.sort();
        components.push(component);
    }
    components
}

/// Classify every simple root against the three special-root conditions.
/// Type A diagrams have only special roots; every other simple type has
/// exactly one, which is asserted.
pub fn special_roots(data: &RootSystemData) -> SpecialRootReport {
    let mut special = VertexSet::empty();
    let mut failures = Vec::new();
    for alpha in data.vertices() {
        let mut fails = Vec::new();

        let components = components_without(data, alpha);
        let chain_like = components.iter().all(|component| {
            let degrees_ok = component.iter().all(|&u| {
                data.neighbors(u).iter().filter(|&&w| w != alpha).count() <= 2
            });
            let bonds_simple = data.bonds().iter().all(|bond| {
                bond.multiplicity == 1
                    || !(component.contains(&bond.a) && component.contains(&bond.b))
            });
            degrees_ok && bonds_simple
        });
        if !chain_like {
            fails.push(SpecialCondition::ComponentNotTypeA);
        }

        // Each component of the complement holds exactly one neighbor of
        // alpha (diagrams are trees), so meeting at an end means every
        // neighbor keeps degree at most one after alpha is removed.
        let meets_ends = data
            .neighbors(alpha)
            .iter()
            .all(|&u| data.neighbors(u).len() <= 2);
        if !meets_ends {
            fails.push(SpecialCondition::MeetsComponentOffEnd);
        }

        if data.length(alpha) == RootLength::Short {
            fails.push(SpecialCondition::NotLong);
        }

        if fails.is_empty() {
            special.insert(alpha);
        } else {
            failures.push((alpha, fails));
        }
    }

    if data.spec().family() == Family::A {
        assert_eq!(
            special.len(),
            data.rank(),
            "every type A root is special"
        );
    } else {
        assert_eq!(special.len(), 1, "non-A types have one special root");
    }
    SpecialRootReport { special, failures }
}

/// The canonical single-vertex point of the class at `vertex`: the least
/// value in (0, 1] congruent to the class residue there (1 when the residue
/// is 0), harmonically extended. Always superharmonic, since the defect at
/// the vertex is the value divided by the inverse Cartan diagonal entry.
pub fn mu_c_alpha(context: &GroupContext, vertex: Vertex) -> ABPair {
    assert!(vertex.0 < context.rank(), "vertex is outside the diagram");
    let residue = context.class().residue(vertex);
    let value = if residue.is_zero() {
        q1()
    } else {
        residue.clone()
    };
    let support = VertexSet::single(vertex);
    let f = extend_harmonic(context.data(), support, &[value]);
    ABPair::new(context.clone(), f, support)
        .expect("a congruent single-vertex extension is a valid pair")
}

/// Rejections of the single-vertex order test.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Order1Error {
    #[error("pairs belong to different group contexts")]
    ContextMismatch,
    #[error("support of a compared pair is not a single vertex")]
    NotSingleton,
    #[error("compared pair is not superharmonic (violated at {vertex})")]
    NotSuperharmonic { vertex: Vertex },
}

/// Compare two superharmonic single-vertex pairs: `a <= b` exactly when
/// `f_a <= f_b` at a's own support vertex, and symmetrically. This is the
/// two-evaluation shortcut for the full pointwise order on such pairs; it is
/// cross-checked against the general order elsewhere, not defined by it.
pub fn order1_compare(a: &ABPair, b: &ABPair) -> Result<AbOrder, Order1Error> {
    if a.context() != b.context() {
        return Err(Order1Error::ContextMismatch);
    }
    let alpha = singleton(a)?;
    let beta = singleton(b)?;
    for pair in [a, b] {
        let cert = is_superharmonic(pair.context().data(), pair.f());
        if let Some(vertex) = cert.first_violation {
            return Err(Order1Error::NotSuperharmonic { vertex });
        }
    }
    let a_below = a.f().value(alpha) <= b.f().value(alpha);
    let b_below = b.f().value(beta) <= a.f().value(beta);
    Ok(match (a_below, b_below) {
        (true, true) => AbOrder::Equal,
        (true, false) => AbOrder::Less,
        (false, true) => AbOrder::Greater,
        (false, false) => AbOrder::Incomparable,
    })
}

fn singleton(pair: &ABPair) -> Result<Vertex, Order1Error> {
    let support = pair.support();
    if support.len() != 1 {
        return Err(Order1Error::NotSingleton);
    }
    let vertex = support.iter().next().expect("support has one vertex");
    Ok(vertex)
}

/// The poset of the points `mu_{c,alpha}` over all vertices: nodes indexed
/// by vertex, strict relations `(i, j)` meaning node i < node j, the Hasse
/// covers among them, and the minimal node indices.
#[derive(Debug, Clone, PartialEq)]
pub struct MuPoset {
    pub nodes: Vec<ABPair>,
    pub relations: Vec<(usize, usize)>,
    pub hasse: Vec<(usize, usize)>,
    pub minimal: Vec<usize>,
}

/// Build the poset of canonical single-vertex points for the context.
pub fn mu_poset(context: &GroupContext) -> MuPoset {
    let nodes: Vec<ABPair> = context
        .data()
        .vertices()
        .map(|v| mu_c_alpha(context, v))
        .collect();
    let n = nodes.len();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            match order1_compare(&nodes[i], &nodes[j])
                .expect("canonical points are superharmonic singletons")
            {
                AbOrder::Less => relations.push((i, j)),
                AbOrder::Greater => relations.push((j, i)),
                AbOrder::Incomparable => {}
                AbOrder::Equal => {
                    unreachable!("distinct vertices give distinct extensions")
                }
            }
        }
    }
    let less = |i: usize, j: usize| relations.contains(&(i, j));
    let hasse = relations
        .iter()
        .copied()
        .filter(|&(i, j)| !(0..n).any(|k| less(i, k) && less(k, j)))
        .collect();
    let minimal = (0..n)
        .filter(|&i| !(0..n).any(|j| less(j, i)))
        .collect();
    MuPoset {
        nodes,
        relations,
        hasse,
        minimal,
    }
}

/// The minimally unstable points of the class, by search: minimal elements
/// of the canonical-point poset. The candidate set is complete because a
/// minimal unstable point has single-vertex support and value at most one
/// there.
pub fn minimally_unstable(context: &GroupContext) -> Vec<ABPair> {
    let poset = mu_poset(context);
    poset
        .minimal
        .iter()
        .map(|&i| poset.nodes[i].clone())
        .collect()
}

/// Contexts the answer catalog does not cover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog row covers this family and central class")]
    NotCataloged,
}

/// The hard-coded catalog of minimally unstable points for the quotient
/// groups, one row per family and nontrivial class shape. Values are
/// produced by `mu_c_alpha` at the named vertices; membership in a row and
/// the expected residues are asserted. Anything else, including every
/// trivial class, reports `NotCataloged` (the search oracle still applies).
pub fn catalog(context: &GroupContext) -> Result<Vec<ABPair>, CatalogError> {
    let data = context.data();
    let class = context.class();
    if class.is_trivial() {
        return Err(CatalogError::NotCataloged);
    }
    let rank = data.rank();
    let order = class.order();

    let vertices: Vec<Vertex> = match data.spec().family() {
        Family::A => {
            // Quotient of SL(n) by a class of order d: one point at each
            // vertex whose residue is exactly 1/d; there are n/d of them.
            let n = rank + 1;
            let target = qr(1, order as i64);
            let picked: Vec<Vertex> = data
                .vertices()
                .filter(|&v| class.residue(v) == &target)
                .collect();
            assert_eq!(
                picked.len() as u64,
                n as u64 / order,
                "one point per residue-1/d vertex"
            );
            picked
        }
        Family::B => {
            // Odd orthogonal group: the unique short simple root.
            assert_eq!(order, 2);
            vec![Vertex(rank - 1)]
        }
        Family::C => {
            // Projective symplectic group: the long end root for odd rank,
            // its neighbor for even rank.
            assert_eq!(order, 2);
            if rank % 2 == 1 {
                vec![Vertex(rank - 1)]
            } else {
                vec![Vertex(rank - 2)]
            }
        }
        Family::D => {
            let ears = [Vertex(rank - 2), Vertex(rank - 1)];
            match order {
                2 => {
                    let half = qr(1, 2);
                    if ears.iter().all(|&e| class.residue(e) == &half) {
                        // Even orthogonal group: both ears.
                        ears.to_vec()
                    } else if rank == 4 {
                        // Half-spin quotient of the triality rank: the two
                        // residue-1/2 vertices are exchanged by triality and
                        // are incomparable, so both are minimal.
                        data.vertices()
                            .filter(|&v| class.residue(v) == &half)
                            .collect()
                    } else {
                        // Half-spin quotient: the vertex next to the
                        // trivalent vertex on the long arm.
                        let v = Vertex(rank - 4);
                        assert_eq!(class.residue(v), &qr(1, 2));
                        vec![v]
                    }
                }
                4 => {
                    // Spin of twice an odd number, order-4 class: the ear
                    // with residue exactly 1/4.
                    let quarter = qr(1, 4);
                    let picked: Vec<Vertex> = ears
                        .iter()
                        .copied()
                        .filter(|&e| class.residue(e) == &quarter)
                        .collect();
                    assert_eq!(picked.len(), 1, "one ear has residue 1/4");
                    picked
                }
                _ => return Err(CatalogError::NotCataloged),
            }
        }
        Family::E => match (rank, order) {
            (6, 3) => {
                // Adjoint E6: the long-arm vertex next to the trivalent one
                // with residue 1/3 (the other arm serves the inverse class).
                let third = qr(1, 3);
                let picked: Vec<Vertex> = [Vertex(2), Vertex(4)]
                    .into_iter()
                    .filter(|&v| class.residue(v) == &third)
                    .collect();
                assert_eq!(picked.len(), 1, "one arm vertex has residue 1/3");
                picked
            }
            (7, 2) => {
                // Adjoint E7: the long-arm vertex next to the trivalent one.
                let v = Vertex(4);
                assert_eq!(class.residue(v), &qr(1, 2));
                vec![v]
            }
            _ => return Err(CatalogError::NotCataloged),
        },
        Family::F | Family::G => return Err(CatalogError::NotCataloged),
    };

    Ok(vertices
        .into_iter()
        .map(|v| mu_c_alpha(context, v))
        .collect())
}
