//! Experiments around the Frobenius/covering-function relationship: the
//! interval `min(b,c)·N - a <= f <= (b+c)·N`, the `(abc)^{5/8}` conjecture and
//! the inverse-pair family that breaks it, window searches and density scans.

mod bez;
mod density;
mod family;
mod prop1;
mod rng;
mod window;

pub use bez::{bez_bound, bez_test, bez_violated, is_near_progression, FamilyTag, ScanRecord};
pub use density::{admissible_pairs, density_scan, DensityResult};
pub use family::{
    bez_scan, family_scan, first_bez_violation, inverse_pairs, FamilyRow, FamilyScan,
};
pub use prop1::{
    prop1_interval, prop1_region, violation_report, Prop1Interval, VIOLATION_REPORT_MAX,
};
pub use rng::Lcg64;
pub use window::window_search;
