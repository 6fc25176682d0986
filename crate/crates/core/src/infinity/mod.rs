//! Sets that are intriguing at infinity: block decompositions at a deleted
//! point set, (a1, a2) profiles, table predictions, the resolvent identities
//! at a perp and completion of negative sets to hemisystems.

mod blocks;
mod complete;
mod evidence;
mod icky;
mod predict;
mod profile;
mod spread;

pub use blocks::BlockDecomposition;
pub use complete::{complete_to_hemisystem, Completion};
pub use evidence::{
    classify_negative_set, hemi_negint2_evidence, negative_filter, negint_minusperp_evidence, nice_hemi_evidence,
    Evidence, NegativeSetClass,
};
pub use icky::{icky_identities, perp_resolvent, resolvent_closed_form, IckyReport};
pub use predict::{predict_infinity_params, Prediction, Scenario, SetKind, Transition};
pub use profile::{check_atinfinity, infinity_profile, AtInfinityVerdict, Constancy, InfinityAnalysis};
pub use spread::{partial_spread_infinity, scan_partial_spreads, SpreadScan, SpreadVerdict};
