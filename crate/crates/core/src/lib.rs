//! Tamely ramified extensions of local fields, computed exactly.

pub mod arith;
pub mod cyccoh;
pub mod error;
pub mod groups;
pub mod l3;
pub mod mass;
pub mod tame;

pub use arith::{Nat, PrimePower};
pub use cyccoh::{CyclicAction, H2Class};
pub use error::{Error, Result};
pub use groups::{GroupElement, GroupName, MetacyclicPresentation, StructureReport};
pub use l3::{classify_l3, L3Extension, L3Narrative, L3Report};
pub use mass::{tame_mass, tame_wild_reduction, MassReport};
pub use tame::{
    ClassifyReport, ExtensionClass, KummerSubgroup, LineParam, LocalField, OrbitReport, TameShape,
};
