//! Explicit polynomial embeddings: a small catalog (Plücker, Whitney,
//! linear, Veronese), exact jets, osculating flags with type numbers and
//! height, fundamental forms, and the Whitney pullback identity.

mod flag;
mod grassmann;
mod map;
mod whitney;

pub use flag::{
    constant_type, fundamental_forms, jet, osculating_flag, random_points, span_equal, FFTower,
    FundamentalForm, OsculatingFlag,
};
pub use grassmann::minor_forms;
pub use map::{
    linear, plucker, plucker_var, veronese, whitney_ball, whitney_hat, CatalogSpec, PointChoice,
    PolyMap,
};
pub use whitney::{boundary_form, pullback_identity, whitney_pullback_check};
