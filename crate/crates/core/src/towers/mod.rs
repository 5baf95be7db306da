//! Normaliser towers, automorphism towers, and the suites that check them.

mod automorphism;
mod normaliser;
mod suites;

pub use automorphism::{
    automorphism_tower, AutTowerRecord, LevelSummary, Termination, TowerCaps, TowerLevel,
    DEFAULT_SIZE_CAP, DEFAULT_STEP_CAP,
};
pub use normaliser::{normaliser_tower, NormaliserTowerRecord};
pub use suites::{
    factor_absorption, ntower_report, tau_report, verify_alt_incompatibility,
    verify_product_tower, verify_psl_correspondence, verify_remark_incompatibility,
    verify_wreath_tower, SuiteOptions,
};
