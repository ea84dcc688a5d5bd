//! Generalized binary trees over group elements, zigzags, windows with
//! partner assignment, and the tree-building procedure.

pub mod build;
pub mod labeled;
pub mod tree;
pub mod window;
pub mod zigzag;

pub use build::{build_trees, BuildReport, TreeColor};
pub use labeled::{check_ray_separation, label_rays, LabeledTree, RaySeparationReport};
pub use tree::{generate_random_gbt, Gbt, GbtViolation, VertexKind};
pub use window::{assign_partners, Partner, PartnerMap, PartnerMode, Window, WindowParams};
pub use zigzag::{validate_zigzag, ZigzagReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GbtError {
    #[error("window too thin to host partners: xi budget {budget} < step {p}")]
    WindowTooThin { budget: i64, p: i64 },
    #[error("backend '{backend}' has no height function, required for windows")]
    NoHeight { backend: &'static str },
    #[error("labeling precondition violated at edge ({parent}, {child}): {reason}")]
    BadLabel { parent: usize, child: usize, reason: String },
    #[error("partner map inconsistent at {at}: {reason}")]
    BadPartner { at: String, reason: String },
    #[error(transparent)]
    Backend(#[from] crate::backends::BackendError),
}
