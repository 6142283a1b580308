//! SU(2) representations of braid closures: the braid action on tuples of
//! unit quaternions, enumeration of irreducible fixed classes, their
//! intersection signs and the Casson-Lin invariant `h_L(α)`.

mod action;
mod class;
mod crossing;
mod error;
mod invariant;
mod long;
mod probe;
mod quat;
mod sign;
mod solver;

pub use action::{abelian_rep, braid_act_su2, braid_act_tangent, is_abelian, max_commutator, product};
pub use class::{canonicalize, distance_to_abelian_orbit, fingerprint, fingerprint_distance, RepClass};
pub use error::CassonLinError;
pub use invariant::{casson_lin, find_fixed_classes, intersection_sign, FixedPointResult, SignedClass};
pub use quat::{cross, dot3, norm3, tangent_frame, Quat, Quat64};
pub use sign::{intersection_sign_at, LocalSign, ORIENTATION_SIGN};
pub use solver::{fixed_residual, search_fixed_classes, solve_from, strand_angles, Orientation, SearchStats, SolverOptions};
pub use crossing::{crossing_delta, CrossingReport};
pub use long::{action_jacobian, long_check_all_signs, long_differential_check, permutation_matrix, LongReport, FD_STEP, LONG_TOLERANCE};
pub use probe::{reducibility_probe, ProbeReport};
