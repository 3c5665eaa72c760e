//! Functions and atomic complex measures on the finite index sets G and G/H,
//! with their norms, the integration pairing, translations, and the
//! embeddings of functions into measures.

mod haar;
mod norms;
mod ops;
mod space;

pub use haar::{HaarStructure, Weights};
pub use norms::{functional_norm, lp_norm, riesz_pair, sup_norm, tv_norm, Exponent};
pub use ops::{
    embed_function_cosets, embed_function_group, translate_function_cosets,
    translate_function_group, translate_function_right_group, translate_measure_left_cosets,
    translate_measure_left_group, translate_measure_right_group,
};
pub use space::{FunctionOn, MeasureOn, SpaceId, SpaceKind};
