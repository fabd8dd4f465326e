//! Named groups, algebras and pre-crossed modules used by the examples and
//! the check suite.

pub mod algebras;
pub mod groups;
pub mod instances;
