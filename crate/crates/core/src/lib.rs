pub mod algebra;
pub mod catalog;
pub mod commands;
pub mod error;
pub mod field;
pub mod generate;
pub mod group;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod peiffer;
pub mod pxmod;
pub mod theorems;
pub mod variety;

pub use error::{Error, Result};
pub use peiffer::{
    coproduct_xmod, induced_morphism, peiffer_commutator, peiffer_product, peiffer_words, reflect,
    symmetric_comparison, Induced, PeifferProduct, Reflection,
};
pub use pxmod::{
    pcm_validate, px_cokernel_of_kernel, px_factorize, px_join, px_kernel, px_pullback, Pcm, PreCrossedModule,
    PxMorphism, SubPcm,
};
pub use variety::{Algebras, Groups, Variety};
