//! Socle-projective representations of posets of type A.
//!
//! The crate classifies the indecomposable socle-projective representations
//! (peak spaces) of a finite poset of type A, certifies their stability with
//! exact arithmetic along two independent routes, and realizes the same
//! category inside a convex polygon model attached to an A_n quiver with
//! alien arrows.
//!
//! Everything is computed over exact scalars: machine integers for dimension
//! vectors and weights, big integers for incidence matrices and bilinear
//! forms, big rationals for subspace bases and slopes. Floating point only
//! appears when rendering SVG coordinates.

pub mod emit;
pub mod enumeration;
pub mod geometry;
pub mod linalg;
pub mod poset;
pub mod repr;
pub mod stability;

pub use emit::{
    ar_quiver_dot, classes_listing, polygon_prime_svg, polygon_svg, translation_quiver_dot,
};
pub use enumeration::{
    all_orientations, connected_posets, random_posets, valid_alien_sets, valid_extended_quivers,
};
pub use geometry::{
    angle_stability_general, angle_stability_sincere, ar_quiver, bi_fan, build_polygon,
    build_polygon_prime, charge_general, charge_sincere, classify_segments, fence_weights,
    frozen_segments, interval_socle_projective, omega_support, overline_segments, pivots,
    shape_poset, sincere_weights, sp_segments, star_segments, suitable_segments, translate,
    translation_quiver, underline_segments, AngleReport, ArQuiver, FenceWeightError, GeometryError,
    Polygon, Segment, SegmentClasses, TranslationQuiver,
};
pub use linalg::{Int, IntMat, Rat, RatMat, Subspace};
pub use poset::{
    bilinear_form, incidence_matrix, incidence_matrix_ordered, is_type_a, poset_of_quiver,
    validate_alien_set, weight_kappa, weight_w, AlienViolation, ExtendedQuiver, Incidence, Poset,
    PosetError, QuiverA, QuiverError, TypeAViolation,
};
pub use repr::{
    admissible_blocks_for, enumerate_indecomposables, explicit_indecomposable, lift_rep,
    proper_subobjects, quotient_dims, sincere_rep, sincere_subposets, ExplicitPeakSpace, Fence,
    FenceKind, Indecomposable, PeakSpaceError, Subobject,
};
pub use stability::{
    extend_positive, hat_weight, hn_filtration, is_mu_stable, is_theta_stable, jh_filtration,
    lift_weight, slope, theta_of, weight_value, Filtration, StabilityError, StabilityReport,
    Verdict, Weight, Witness,
};
