//! Exact-arithmetic calculus of Atiyah-Bott points on Dynkin diagrams.
//!
//! A point is a rational-valued function on the simple coroots of a root
//! system. The library builds the diagram data for the classical and
//! exceptional families ([`rootsystem`]), evaluates defects and harmonic
//! extensions and superharmonicity certificates ([`harmonic`]), validates
//! and enumerates Atiyah-Bott pairs for a central class and orders them up
//! to Weyl conjugacy ([`abpoints`]), plans and validates decreasing move
//! sequences between comparable pairs ([`planner`]), and computes special
//! roots, canonical single-vertex points, their poset, and the minimally
//! unstable points both by search and from a fixed catalog ([`strata`]).
//!
//! All arithmetic is exact. Values are [`Q`], arbitrary-precision rationals;
//! nothing in the crate rounds or approximates.
//!
//! ```
//! use abstrata_core::{
//!     build_root_system, plan_moves, ABPair, CorootFunction, Family,
//!     GroupContext, RootSystemSpec, Vertex, VertexSet, qi,
//! };
//!
//! let spec = RootSystemSpec::new(Family::A, 2)?;
//! let context = GroupContext::simply_connected(build_root_system(spec));
//! let start = ABPair::new(
//!     context.clone(),
//!     CorootFunction::new(vec![qi(2), qi(1)]),
//!     VertexSet::single(Vertex(0)),
//! )?;
//! let end = ABPair::new(
//!     context,
//!     CorootFunction::new(vec![qi(1), qi(1)]),
//!     VertexSet::full(2),
//! )?;
//! let plan = plan_moves(&start, &end)?;
//! assert_eq!(plan.moves.len(), 2);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod abpoints;
pub mod harmonic;
pub mod linalg;
pub mod planner;
pub mod rootsystem;
pub mod strata;

pub use abpoints::{
    ab_compare, dominant_representative, enumerate_between, is_ab_pair, minimal_support,
    reflect, ABPair, AbOrder, AbPairError, BetweenError, GroupContext,
};
pub use harmonic::{
    compare_pointwise, comparison_principle_check, defects, extend_harmonic, is_superharmonic,
    profile, profile_harmonic_at, profile_superharmonic, root_value, ComparisonError,
    CorootFunction, MultibondJunction, PiecewiseProfile, PointwiseCmp, ProfileSegment,
    ProfileShape, SuperharmonicCertificate, TripodJunction,
};
pub use linalg::{q0, q1, qi, qr, Q};
pub use planner::{
    apply_move, plan_moves, reduce_by_one, validate_plan, AdjacencyCertificate, Move, MoveError,
    MoveOutcome, MovePlan, PlanCertificates, PlanError,
};
pub use rootsystem::{
    build_root_system, frac_part, Bond, CentralElement, CenterError, Family, HighestRootData,
    RootLength, RootSystemData, RootSystemSpec, SpecError, Vertex, VertexSet,
};
pub use strata::{
    catalog, minimally_unstable, mu_c_alpha, mu_poset, order1_compare, special_roots,
    CatalogError, MuPoset, Order1Error, SpecialCondition, SpecialRootReport,
};
