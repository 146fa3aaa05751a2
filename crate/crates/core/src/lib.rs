//! Finite groups, small sumsets and the isoperimetric method.
//!
//! Groups are stored as full multiplication tables with the identity at
//! index 0, and subsets as bitsets over element indices. On top of that the
//! crate computes boundaries, isoperimetric numbers, fragments and atoms,
//! quotient graphs with their arc-connectivity, and classifies sets with
//! small doubling.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod example;
pub mod flow;
pub mod group;
pub mod gtf;
pub mod oracle;
pub mod par;
pub mod quotient;
pub mod report;
pub mod search;
pub mod subset;
pub mod sumset;
pub mod verify;

pub use error::{ClassifyError, ExampleError, GraphError, GroupError, SumsetError, VerifyError};
pub use group::FiniteGroup;
pub use par::Exec;
pub use subset::GroupSubset;
