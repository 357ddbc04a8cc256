//! Atiyah-Bott points: coroot functions harmonic outside a support set and
//! congruent to a central class there, the dominance order on them through
//! Weyl reduction, and exhaustive enumeration between two comparable points.

use std::collections::BTreeSet;
use std::sync::Arc;

use num::{Signed, Zero};
use thiserror::Error;

use crate::harmonic::{
    compare_pointwise, extend_harmonic, root_value, CorootFunction, PointwiseCmp,
};
use crate::linalg::{q0, q1, Q};
use crate::rootsystem::{frac_part, CenterError, CentralElement, RootSystemData, Vertex, VertexSet};

/// A group context: diagram data plus a central class of the simply
/// connected cover, with an opaque character label. Contexts with different
/// labels never compare equal, mirroring the reduction of reductive groups
/// to their semisimple part plus a character.
#[derive(Debug, Clone)]
pub struct GroupContext {
    data: Arc<RootSystemData>,
    class: CentralElement,
    label: String,
}

impl GroupContext {
    /// Build a context, re-validating the class against the diagram.
    pub fn new(data: RootSystemData, class: CentralElement) -> Result<Self, CenterError> {
        let class = CentralElement::from_residues(&data, class.residues().to_vec())?;
        let label = class.order().to_string();
        Ok(GroupContext {
            data: Arc::new(data),
            class,
            label,
        })
    }

    /// The simply connected context: trivial class.
    pub fn simply_connected(data: RootSystemData) -> Self {
        let class = CentralElement::trivial(data.rank());
        GroupContext {
            class,
            label: "1".to_string(),
            data: Arc::new(data),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn data(&self) -> &RootSystemData {
        &self.data
    }

    pub fn class(&self) -> &CentralElement {
        &self.class
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }
}

impl PartialEq for GroupContext {
    fn eq(&self, other: &Self) -> bool {
        self.data.spec() == other.data.spec()
            && self.class == other.class
            && self.label == other.label
    }
}

impl Eq for GroupContext {}

/// Violations of the Atiyah-Bott pair conditions, reported lowest vertex
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbPairError {
    #[error("rank mismatch: function has length {got}, diagram rank is {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("support names {vertex}, which is outside the diagram")]
    SupportOutOfRange { vertex: Vertex },
    #[error("not harmonic off the support: nonzero defect at {vertex}")]
    NotHarmonicAt { vertex: Vertex },
    #[error("congruence fails at support vertex {vertex}: {value} is not {residue} mod 1")]
    CongruenceAt { vertex: Vertex, value: Q, residue: Q },
    #[error("not of Atiyah-Bott type: nonzero defect and broken congruence at {vertex}")]
    NotAbType { vertex: Vertex },
}

/// Check the defining conditions of an Atiyah-Bott pair: harmonic at every
/// vertex outside the support, and congruent to the class residues on the
/// support. Vertices are scanned in index order and the first violation is
/// returned.
pub fn is_ab_pair(
    context: &GroupContext,
    f: &CorootFunction,
    support: VertexSet,
) -> Result<(), AbPairError> {
    let data = context.data();
    if f.len() != data.rank() {
        return Err(AbPairError::RankMismatch {
            got: f.len(),
            rank: data.rank(),
        });
    }
    if let Some(v) = support.iter().find(|v| v.0 >= data.rank()) {
        return Err(AbPairError::SupportOutOfRange { vertex: v });
    }
    for v in data.vertices() {
        if support.contains(v) {
            let residue = context.class().residue(v);
            if !frac_part(f.value(v) - residue).is_zero() {
                return Err(AbPairError::CongruenceAt {
                    vertex: v,
                    value: f.value(v).clone(),
                    residue: residue.clone(),
                });
            }
        } else if !root_value(data, f, v).is_zero() {
            return Err(AbPairError::NotHarmonicAt { vertex: v });
        }
    }
    Ok(())
}

/// An Atiyah-Bott pair: a validated point together with a support set and
/// its group context. The support need not be minimal.
#[derive(Debug, Clone, PartialEq)]
pub struct ABPair {
    context: GroupContext,
    f: CorootFunction,
    support: VertexSet,
}

impl ABPair {
    pub fn new(
        context: GroupContext,
        f: CorootFunction,
        support: VertexSet,
    ) -> Result<Self, AbPairError> {
        is_ab_pair(&context, &f, support)?;
        Ok(ABPair {
            context,
            f,
            support,
        })
    }

    pub fn context(&self) -> &GroupContext {
        &self.context
    }

    pub fn f(&self) -> &CorootFunction {
        &self.f
    }

    pub fn support(&self) -> VertexSet {
        self.support
    }
}

/// The minimal support of an Atiyah-Bott point: exactly the vertices with
/// nonzero defect. Errors when `f` is not of Atiyah-Bott type for the class,
/// naming a vertex where harmonicity fails and the congruence fails too.
pub fn minimal_support(context: &GroupContext, f: &CorootFunction) -> Result<VertexSet, AbPairError> {
    let data = context.data();
    if f.len() != data.rank() {
        return Err(AbPairError::RankMismatch {
            got: f.len(),
            rank: data.rank(),
        });
    }
    let mut support = VertexSet::empty();
    for v in data.vertices() {
        if !root_value(data, f, v).is_zero() {
            let residue = context.class().residue(v);
            if !frac_part(f.value(v) - residue).is_zero() {
                return Err(AbPairError::NotAbType { vertex: v });
            }
            support.insert(v);
        }
    }
    Ok(support)
}

/// Reduce a point into the dominant cone by simple reflections, always
/// reflecting at the lowest vertex with negative defect. Returns the
/// dominant representative and the reflection word in application order:
/// replaying the word from the input reproduces the output.
///
/// A simple reflection at `v` changes only the value at `v`, subtracting the
/// defect there.
pub fn dominant_representative(
    data: &RootSystemData,
    f: &CorootFunction,
) -> (CorootFunction, Vec<Vertex>) {
    let mut cur = f.clone();
    let mut word = Vec::new();
    loop {
        let negative = data
            .vertices()
            .find(|v| root_value(data, &cur, *v).is_negative());
        let Some(v) = negative else {
            return (cur, word);
        };
        let defect = root_value(data, &cur, v);
        let new_value = cur.value(v) - defect;
        cur.set(v, new_value);
        word.push(v);
    }
}

/// Apply one simple reflection at `v`.
pub fn reflect(data: &RootSystemData, f: &CorootFunction, v: Vertex) -> CorootFunction {
    let mut out = f.clone();
    let defect = root_value(data, f, v);
    let new_value = out.value(v) - defect;
    out.set(v, new_value);
    out
}

/// Verdicts of the Atiyah-Bott dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbOrder {
    Equal,
    Greater,
    Less,
    Incomparable,
}

/// Compare two points in the Atiyah-Bott order: reduce both to dominant
/// representatives and compare coordinatewise there. Two points are equal
/// exactly when they are Weyl conjugate.
pub fn ab_compare(context: &GroupContext, f: &CorootFunction, g: &CorootFunction) -> AbOrder {
    let data = context.data();
    let (df, _) = dominant_representative(data, f);
    let (dg, _) = dominant_representative(data, g);
    match compare_pointwise(&df, &dg) {
        PointwiseCmp::Equal => AbOrder::Equal,
        PointwiseCmp::Greater => AbOrder::Greater,
        PointwiseCmp::Less => AbOrder::Less,
        PointwiseCmp::Incomparable => AbOrder::Incomparable,
    }
}

/// Errors from `enumerate_between`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BetweenError {
    #[error("upper bound does not dominate the lower bound pointwise")]
    UpperNotAboveLower,
}

/// All Atiyah-Bott points `nu` for the context's class with
/// `upper >= f_nu >= lower` pointwise, in ascending lexicographic order.
///
/// For each subset of the diagram, support values run over the residue
/// classes clipped to the bounds, are extended harmonically, and survive a
/// full pointwise sandwich check; duplicates collapse on the exact rational
/// vector.
pub fn enumerate_between(
    context: &GroupContext,
    upper: &CorootFunction,
    lower: &CorootFunction,
) -> Result<Vec<CorootFunction>, BetweenError> {
    let data = context.data();
    assert_eq!(upper.len(), data.rank(), "upper length must equal rank");
    assert_eq!(lower.len(), data.rank(), "lower length must equal rank");
    match compare_pointwise(upper, lower) {
        PointwiseCmp::Equal | PointwiseCmp::Greater => {}
        _ => return Err(BetweenError::UpperNotAboveLower),
    }

    let n = data.rank();
    let mut found: BTreeSet<Vec<Q>> = BTreeSet::new();

    for mask in 0..(1u32 << n) {
        let support = VertexSet::from_mask(mask);
        let verts: Vec<Vertex> = support.iter().collect();

        // Candidate values at each support vertex: the residue class of the
        // central class, clipped to [lower, upper] there.
        let mut grids: Vec<Vec<Q>> = Vec::with_capacity(verts.len());
        let mut feasible = true;
        for v in &verts {
            let residue = context.class().residue(*v);
            let lo = lower.value(*v);
            let hi = upper.value(*v);
            let first = residue + (lo - residue).ceil();
            let mut vals = Vec::new();
            let mut x = first;
            while &x <= hi {
                vals.push(x.clone());
                x += q1();
            }
            if vals.is_empty() {
                feasible = false;
                break;
            }
            grids.push(vals);
        }
        if !feasible {
            continue;
        }

        // Indicator extensions: the point is linear in its support values.
        let basis: Vec<Vec<Q>> = verts
            .iter()
            .map(|v| {
                let boundary: Vec<Q> = verts
                    .iter()
                    .map(|w| if w == v { q1() } else { q0() })
                    .collect();
                extend_harmonic(data, support, &boundary)
                    .values()
                    .to_vec()
            })
            .collect();

        // Minimal and maximal completions from each depth, for pruning.
        let t = verts.len();
        let mut suffix_min = vec![vec![q0(); n]; t + 1];
        let mut suffix_max = vec![vec![q0(); n]; t + 1];
        for k in (0..t).rev() {
            let vmin = grids[k].first().expect("grids are nonempty");
            let vmax = grids[k].last().expect("grids are nonempty");
            for c in 0..n {
                suffix_min[k][c] = &suffix_min[k + 1][c] + vmin * &basis[k][c];
                suffix_max[k][c] = &suffix_max[k + 1][c] + vmax * &basis[k][c];
            }
        }

        let mut partial = vec![vec![q0(); n]; t + 1];
        dfs_grid(
            0,
            t,
            n,
            &grids,
            &basis,
            &suffix_min,
            &suffix_max,
            upper,
            lower,
            &mut partial,
            &mut found,
        );
    }

    Ok(found
        .into_iter()
        .map(CorootFunction::new)
        .collect())
}

#[allow(clippy::too_many_arguments)]
fn dfs_grid(
    k: usize,
    t: usize,
    n: usize,
    grids: &[Vec<Q>],
    basis: &[Vec<Q>],
    suffix_min: &[Vec<Q>],
    suffix_max: &[Vec<Q>],
    upper: &CorootFunction,
    lower: &CorootFunction,
    partial: &mut Vec<Vec<Q>>,
    found: &mut BTreeSet<Vec<Q>>,
) {
    if k == t {
        let f = &partial[t];
        let inside = (0..n).all(|c| {
            &f[c] <= upper.value(Vertex(c)) && &f[c] >= lower.value(Vertex(c))
        });
        if inside {
            found.insert(f.clone());
        }
        return;
    }
    for val in &grids[k] {
        let mut prune_upper = false;
        let mut prune_lower = false;
        for c in 0..n {
            let next = &partial[k][c] + val * &basis[k][c];
            // Indicator extensions are nonnegative, so deeper values only
            // raise the function: compare against the extreme completions.
            if &next + &suffix_min[k + 1][c] > *upper.value(Vertex(c)) {
                prune_upper = true;
            }
            if &next + &suffix_max[k + 1][c] < *lower.value(Vertex(c)) {
                prune_lower = true;
            }
            partial[k + 1][c] = next;
        }
        if prune_upper {
            // Values iterate in ascending order; larger ones stay pruned.
            break;
        }
        if prune_lower {
            continue;
        }
        dfs_grid(
            k + 1,
            t,
            n,
            grids,
            basis,
            suffix_min,
            suffix_max,
            upper,
            lower,
            partial,
            found,
        );
    }
}
