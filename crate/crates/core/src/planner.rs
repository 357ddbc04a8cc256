//! The descent planner: factor a pointwise decrease between two Atiyah-Bott
//! pairs into support-growing, support-shrinking and value-lowering moves,
//! apply single moves with full validation, and certify whole plans.

use num::{Signed, Zero};
use thiserror::Error;

use crate::abpoints::{
    enumerate_between, minimal_support, ABPair, AbPairError, GroupContext,
};
use crate::harmonic::{compare_pointwise, extend_harmonic, root_value, CorootFunction, PointwiseCmp};
use crate::linalg::{q1, Q};
use crate::rootsystem::{frac_part, Vertex, VertexSet};

/// One move of the descent theorem.
///
/// A type 1 move adds a vertex to the support with a prescribed value there,
/// keeping all old support values and re-extending harmonically; the result
/// must be subharmonic at the added vertex and adjacent to the input (no
/// strictly intermediate point of the class). A type 2 move shrinks the
/// support, keeping the values on the new support and re-extending. A type 3
/// move lowers the value at one support vertex, keeping the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Type1 { vertex: Vertex, value: Q },
    Type2 { support: VertexSet },
    Type3 { vertex: Vertex, value: Q },
}

/// Rejections of a single move.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MoveError {
    #[error("vertex {vertex} is outside the diagram")]
    OutOfRange { vertex: Vertex },
    #[error("type 1 move adds {vertex}, which is already in the support")]
    AlreadyInSupport { vertex: Vertex },
    #[error("type 2 move keeps {vertex}, which is not in the old support")]
    NotASubset { vertex: Vertex },
    #[error("move names {vertex}, which is not in the support")]
    NotInSupport { vertex: Vertex },
    #[error("type 3 move must lower the value at {vertex}: {new} is not below {old}")]
    NotDecreasing { vertex: Vertex, new: Q, old: Q },
    #[error("value {value} at {vertex} breaks the congruence with residue {residue}")]
    CongruenceFailure { vertex: Vertex, value: Q, residue: Q },
    #[error("type 1 value leaves a positive defect {defect} at {vertex}")]
    NotSubharmonic { vertex: Vertex, defect: Q },
    #[error("type 1 move skips the intermediate point {witness}")]
    NotAdjacent { witness: CorootFunction },
    #[error("move result is not a valid pair: {0}")]
    InvalidResult(#[from] AbPairError),
}

/// A validated move application: the new pair, plus how its function
/// compares pointwise to the input's.
#[derive(Debug, Clone, PartialEq)]
pub struct MoveOutcome {
    pub pair: ABPair,
    pub relation_to_input: PointwiseCmp,
}

/// Apply one move to a pair, enforcing the move invariants: structure,
/// congruence of any newly set value, subharmonicity at a type 1 vertex,
/// and the type 1 adjacency clause (checked by enumeration).
pub fn apply_move(pair: &ABPair, mv: &Move) -> Result<MoveOutcome, MoveError> {
    let context = pair.context();
    let data = context.data();
    let f = pair.f();
    let support = pair.support();

    let (new_f, new_support) = match mv {
        Move::Type1 { vertex, value } => {
            let vertex = *vertex;
            if vertex.0 >= data.rank() {
                return Err(MoveError::OutOfRange { vertex });
            }
            if support.contains(vertex) {
                return Err(MoveError::AlreadyInSupport { vertex });
            }
            check_congruence(context, vertex, value)?;
            let new_support = support.with(vertex);
            let boundary: Vec<Q> = new_support
                .iter()
                .map(|w| {
                    if w == vertex {
                        value.clone()
                    } else {
                        f.value(w).clone()
                    }
                })
                .collect();
            let g = extend_harmonic(data, new_support, &boundary);
            let defect = root_value(data, &g, vertex);
            if defect.is_positive() {
                return Err(MoveError::NotSubharmonic { vertex, defect });
            }
            // Subharmonicity at the added vertex means the new value is at
            // most the old harmonic value there, so g <= f and the interval
            // is well ordered for enumeration.
            let between = enumerate_between(context, f, &g)
                .expect("a subharmonic type 1 result is dominated by its input");
            if let Some(witness) = between.iter().find(|p| *p != f && **p != g) {
                return Err(MoveError::NotAdjacent {
                    witness: witness.clone(),
                });
            }
            (g, new_support)
        }
        Move::Type2 {
            support: new_support,
        } => {
            let new_support = *new_support;
            if let Some(vertex) = new_support.difference(support).iter().next() {
                return Err(MoveError::NotASubset { vertex });
            }
            let boundary: Vec<Q> = new_support.iter().map(|w| f.value(w).clone()).collect();
            let g = extend_harmonic(data, new_support, &boundary);
            (g, new_support)
        }
        Move::Type3 { vertex, value } => {
            let vertex = *vertex;
            if !support.contains(vertex) {
                return Err(MoveError::NotInSupport { vertex });
            }
            let old = f.value(vertex);
            if value >= old {
                return Err(MoveError::NotDecreasing {
                    vertex,
                    new: value.clone(),
                    old: old.clone(),
                });
            }
            check_congruence(context, vertex, value)?;
            let boundary: Vec<Q> = support
                .iter()
                .map(|w| {
                    if w == vertex {
                        value.clone()
                    } else {
                        f.value(w).clone()
                    }
                })
                .collect();
            let g = extend_harmonic(data, support, &boundary);
            (g, support)
        }
    };

    let relation_to_input = compare_pointwise(&new_f, f);
    let pair = ABPair::new(context.clone(), new_f, new_support)?;
    Ok(MoveOutcome {
        pair,
        relation_to_input,
    })
}

fn check_congruence(context: &GroupContext, vertex: Vertex, value: &Q) -> Result<(), MoveError> {
    let residue = context.class().residue(vertex);
    if frac_part(value - residue).is_zero() {
        Ok(())
    } else {
        Err(MoveError::CongruenceFailure {
            vertex,
            value: value.clone(),
            residue: residue.clone(),
        })
    }
}

/// The unit decrement: lower the value at a support vertex by one and
/// re-extend off the same support. The drop is integral, so the congruence
/// is preserved automatically.
pub fn reduce_by_one(pair: &ABPair, vertex: Vertex) -> Result<ABPair, MoveError> {
    if !pair.support().contains(vertex) {
        return Err(MoveError::NotInSupport { vertex });
    }
    let data = pair.context().data();
    let boundary: Vec<Q> = pair
        .support()
        .iter()
        .map(|w| {
            if w == vertex {
                pair.f().value(w) - q1()
            } else {
                pair.f().value(w).clone()
            }
        })
        .collect();
    let g = extend_harmonic(data, pair.support(), &boundary);
    Ok(ABPair::new(pair.context().clone(), g, pair.support())?)
}

/// A move sequence from `start` down to `end`. Intermediate pairs are
/// recomputed by replay, never stored as ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct MovePlan {
    pub start: ABPair,
    pub end: ABPair,
    pub moves: Vec<Move>,
}

impl MovePlan {
    /// Replay the plan, returning every pair along the way (the first entry
    /// is `start`).
    pub fn intermediates(&self) -> Result<Vec<ABPair>, PlanError> {
        let mut out = vec![self.start.clone()];
        let mut cur = self.start.clone();
        for (index, mv) in self.moves.iter().enumerate() {
            let outcome =
                apply_move(&cur, mv).map_err(|source| PlanError::Move { index, source })?;
            cur = outcome.pair;
            out.push(cur.clone());
        }
        Ok(out)
    }
}

/// Failures of planning or plan validation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanError {
    #[error("start and end pairs belong to different group contexts")]
    ContextMismatch,
    #[error("start does not dominate end pointwise")]
    StartBelowEnd,
    #[error("move {index} failed: {source}")]
    Move { index: usize, source: MoveError },
    #[error("move {index} does not decrease the function pointwise")]
    NotMonotone { index: usize },
    #[error("type 3 move {index} drops by {drop}, which is not a positive integer")]
    NonIntegralDrop { index: usize, drop: Q },
    #[error("type 3 move {index} disagrees with its unit-decrement replay")]
    ReplayMismatch { index: usize },
    #[error("the plan does not land on the end pair")]
    EndpointMismatch,
}

/// Produce a move plan from `start` down to `end`.
///
/// The descent is factored through a maximal chain of points of the class
/// sandwiched between the endpoints, built greedily from the top by taking
/// the pointwise-largest strictly smaller point (lexicographic tie-break),
/// which makes consecutive chain points adjacent. Each adjacent step grows
/// the support with type 1 moves (target value taken from the lower point,
/// lowest-index vertex first, retrying at the lowest failing vertex), lowers
/// differing values with type 3 moves, and reconciles the support with one
/// trailing type 2 move.
pub fn plan_moves(start: &ABPair, end: &ABPair) -> Result<MovePlan, PlanError> {
    if start.context() != end.context() {
        return Err(PlanError::ContextMismatch);
    }
    match compare_pointwise(start.f(), end.f()) {
        PointwiseCmp::Equal | PointwiseCmp::Greater => {}
        _ => return Err(PlanError::StartBelowEnd),
    }
    let context = start.context();
    let points = enumerate_between(context, start.f(), end.f())
        .expect("dominance was checked above");

    // Greedy maximal chain from the top. Inside the loop cur > end holds,
    // so end itself is always a candidate and the chain reaches it.
    let mut chain: Vec<CorootFunction> = vec![start.f().clone()];
    let mut cur = start.f().clone();
    while &cur != end.f() {
        let candidates: Vec<&CorootFunction> = points
            .iter()
            .filter(|p| compare_pointwise(&cur, p) == PointwiseCmp::Greater)
            .filter(|p| {
                matches!(
                    compare_pointwise(p, end.f()),
                    PointwiseCmp::Greater | PointwiseCmp::Equal
                )
            })
            .collect();
        let next = candidates
            .iter()
            .filter(|p| {
                !candidates
                    .iter()
                    .any(|q| compare_pointwise(q, p) == PointwiseCmp::Greater)
            })
            .max()
            .expect("end lies strictly below cur")
            .to_owned()
            .clone();
        chain.push(next.clone());
        cur = next;
    }

    // Segment targets: interior chain points carry their minimal support,
    // the last segment lands on the end pair's declared support. A chain of
    // one point still needs a segment when only the supports differ.
    let mut segments: Vec<(CorootFunction, VertexSet)> = Vec::new();
    for (i, point) in chain.iter().enumerate().skip(1) {
        let target_support = if i + 1 == chain.len() {
            end.support()
        } else {
            minimal_support(context, point).expect("enumerated points are of the class type")
        };
        segments.push((point.clone(), target_support));
    }
    if segments.is_empty() && start.support() != end.support() {
        segments.push((end.f().clone(), end.support()));
    }

    let mut moves = Vec::new();
    let mut cur_f = start.f().clone();
    let mut cur_support = start.support();
    for (target_f, target_support) in segments {
        plan_segment(
            context,
            &mut cur_f,
            &mut cur_support,
            &target_f,
            target_support,
            &mut moves,
        );
    }

    Ok(MovePlan {
        start: start.clone(),
        end: end.clone(),
        moves,
    })
}

/// Emit the moves taking `(cur_f, cur_support)` to `(target_f,
/// target_support)`, assuming `cur_f >= target_f` pointwise with no strictly
/// intermediate point of the class.
fn plan_segment(
    context: &GroupContext,
    cur_f: &mut CorootFunction,
    cur_support: &mut VertexSet,
    target_f: &CorootFunction,
    target_support: VertexSet,
    moves: &mut Vec<Move>,
) {
    let data = context.data();

    while !target_support.is_subset(*cur_support) {
        let candidates: Vec<Vertex> = target_support.difference(*cur_support).iter().collect();
        let mut attempt = candidates[0];
        let mut previous: Option<CorootFunction> = None;
        let mut guard = 0usize;
        let (g, vertex) = loop {
            let grown = cur_support.with(attempt);
            let boundary: Vec<Q> = grown
                .iter()
                .map(|w| {
                    if w == attempt {
                        target_f.value(attempt).clone()
                    } else {
                        cur_f.value(w).clone()
                    }
                })
                .collect();
            let g = extend_harmonic(data, grown, &boundary);
            match compare_pointwise(&g, target_f) {
                PointwiseCmp::Greater | PointwiseCmp::Equal => break (g, attempt),
                _ => {
                    // Retry at the lowest vertex where the attempt dipped
                    // below the target; the descent argument guarantees the
                    // attempts strictly increase, hence terminate.
                    let retry = candidates
                        .iter()
                        .copied()
                        .find(|b| *b != attempt && g.value(*b) < target_f.value(*b))
                        .expect("a failing attempt dips below the target at another candidate");
                    if let Some(prev) = &previous {
                        assert_eq!(
                            compare_pointwise(&g, prev),
                            PointwiseCmp::Greater,
                            "retried attempts must strictly increase"
                        );
                    }
                    previous = Some(g);
                    attempt = retry;
                    guard += 1;
                    assert!(guard < 10_000, "vertex selection failed to terminate");
                }
            }
        };
        moves.push(Move::Type1 {
            vertex,
            value: target_f.value(vertex).clone(),
        });
        *cur_support = cur_support.with(vertex);
        *cur_f = g;
    }

    for a in target_support.iter() {
        if cur_f.value(a) > target_f.value(a) {
            moves.push(Move::Type3 {
                vertex: a,
                value: target_f.value(a).clone(),
            });
            let boundary: Vec<Q> = cur_support
                .iter()
                .map(|w| {
                    if w == a {
                        target_f.value(a).clone()
                    } else {
                        cur_f.value(w).clone()
                    }
                })
                .collect();
            *cur_f = extend_harmonic(data, *cur_support, &boundary);
        }
    }

    if *cur_support != target_support {
        moves.push(Move::Type2 {
            support: target_support,
        });
        let boundary: Vec<Q> = target_support
            .iter()
            .map(|w| cur_f.value(w).clone())
            .collect();
        *cur_f = extend_harmonic(data, target_support, &boundary);
        *cur_support = target_support;
    }

    assert_eq!(
        cur_f, target_f,
        "segment planning must land on its target function"
    );
}

/// A per-move adjacency certificate: the full enumeration of class points
/// between the move's endpoints. Valid when it contains only the endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyCertificate {
    pub move_index: usize,
    pub points: Vec<CorootFunction>,
}

/// Everything a successful validation produces: the replayed pairs, one
/// adjacency certificate per type 1 move, and the unit-decrement length of
/// every type 3 move.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanCertificates {
    pub intermediates: Vec<ABPair>,
    pub adjacency: Vec<AdjacencyCertificate>,
    pub unit_decompositions: Vec<(usize, u64)>,
}

/// Replay a plan move by move and check every invariant: each application
/// succeeds, the function decreases weakly, each type 1 move is adjacent
/// (certified by enumeration), each type 3 drop is a positive integer whose
/// unit-decrement replay reproduces the move, and the final pair equals the
/// declared end.
pub fn validate_plan(plan: &MovePlan) -> Result<PlanCertificates, PlanError> {
    let mut intermediates = vec![plan.start.clone()];
    let mut adjacency = Vec::new();
    let mut unit_decompositions = Vec::new();
    let mut cur = plan.start.clone();

    for (index, mv) in plan.moves.iter().enumerate() {
        let outcome = apply_move(&cur, mv).map_err(|source| PlanError::Move { index, source })?;
        match outcome.relation_to_input {
            PointwiseCmp::Less | PointwiseCmp::Equal => {}
            _ => return Err(PlanError::NotMonotone { index }),
        }
        match mv {
            Move::Type1 { .. } => {
                // apply_move has already rejected non-adjacent moves; record
                // the enumeration as the certificate.
                let points = enumerate_between(cur.context(), cur.f(), outcome.pair.f())
                    .expect("monotone move endpoints are ordered");
                adjacency.push(AdjacencyCertificate {
                    move_index: index,
                    points,
                });
            }
            Move::Type3 { vertex, value } => {
                let drop = cur.f().value(*vertex) - value;
                if !drop.is_integer() || !drop.is_positive() {
                    return Err(PlanError::NonIntegralDrop { index, drop });
                }
                let steps = u64::try_from(drop.to_integer()).expect("drop fits in u64");
                let mut replay = cur.clone();
                for _ in 0..steps {
                    replay = reduce_by_one(&replay, *vertex)
                        .map_err(|source| PlanError::Move { index, source })?;
                }
                if replay.f() != outcome.pair.f() {
                    return Err(PlanError::ReplayMismatch { index });
                }
                unit_decompositions.push((index, steps));
            }
            Move::Type2 { .. } => {}
        }
        cur = outcome.pair;
        intermediates.push(cur.clone());
    }

    if cur != plan.end {
        return Err(PlanError::EndpointMismatch);
    }
    Ok(PlanCertificates {
        intermediates,
        adjacency,
        unit_decompositions,
    })
}
