//! Crystals of level-1 integrable modules of affine `sl2`, realized both on
//! 2-regular charged partitions and on Lakshmibai-Seshadri paths, together
//! with tensor products `B(λ) ⊗ B(Λ0)` and their Kostant-Kumar sub-crystals.

pub mod cli;
pub mod concat;
pub mod error;
pub mod iso;
pub mod kk;
pub mod oracle;
pub mod partition;
pub mod path;
pub mod tensor;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
