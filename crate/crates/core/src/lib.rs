pub mod algebra;
pub mod cache;
pub mod conditions;
pub mod error;
pub mod injection;
pub mod logconcavity;
pub mod lr;
pub mod par;
pub mod partition;
pub mod qring;
pub mod schur;

pub use cache::LrCache;
pub use error::{Error, Result};
pub use par::Execution;
pub use partition::{Cell, IntVector, Partition};
pub use schur::SchurExpansion;
