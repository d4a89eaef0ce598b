//! Finite groups and finite commutative rings as explicit operation tables,
//! plus ideal machinery and the compact spec strings used on the command
//! line.

mod group;
mod ideal;
mod ring;
mod spec;

use thiserror::Error;

pub use group::{FiniteGroup, GROUP_ORDER_CAP};
pub use ideal::{
    all_ideals, describe_ideal, ideal_generated, ideal_sum, is_comaximal, jacobson_radical,
    maximal_ideals, Ideal, IDEAL_ENUM_CAP,
};
pub use ring::{FiniteRing, RING_SIZE_CAP};
pub use spec::{parse_group_spec, parse_ring_spec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("axiom violated: {0}")]
    AxiomViolated(String),
    #[error("element index {index} out of range for a structure of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("ring of size {size} exceeds the ideal enumeration cap of {cap}")]
    RingTooLarge { size: usize, cap: usize },
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("ring is local (fewer than two maximal ideals)")]
    LocalRingUnsupported,
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("invalid spec {input:?} at offset {offset}: {message}")]
    Syntax {
        input: String,
        offset: usize,
        message: String,
    },
}
