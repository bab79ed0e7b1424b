//! Rational generating functions of occurrence counts between periodic words.

mod bivariate;
mod closed_forms;
mod construct;
mod poly;
mod rational;
mod series;

pub use bivariate::{BivariatePoly, Monomial};
pub use closed_forms::{
    c_recurrence, periodic_entropy_estimate, periodic_entropy_estimate_with, power_is_most_frequent, verify_closed_forms,
    ClosedFormReport, Mismatch, PeriodicEstimate,
};
pub use construct::{gf_construct, gf_construct_with};
pub use poly::{bareiss_det, Ring, UPoly};
pub use rational::RationalGF;
pub use series::{gf_series, occ_row_periodic, occ_table_periodic, occ_table_periodic_with, OccMatrix};

pub const DEFAULT_MAX_V_LEN: usize = 14;
pub const DEFAULT_SERIES_BUDGET: u64 = 100_000_000;

/// Size caps for construction and tabulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfLimits {
    /// Longest `v` whose compositions are enumerated.
    pub max_v_len: usize,
    /// Cap on `M * R * |w| * |v|` for tables.
    pub series_budget: u64,
}

impl Default for GfLimits {
    fn default() -> Self {
        GfLimits { max_v_len: DEFAULT_MAX_V_LEN, series_budget: DEFAULT_SERIES_BUDGET }
    }
}
