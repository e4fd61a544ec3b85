//! Finite quasigroups and loops on Cayley tables, built around the cross
//! inverse property: Keedwell CIPQ construction over abelian groups,
//! holomorphs and their inverse-property characterizations, isotopes from a
//! secret `(alpha, beta, psi)`, and the resulting two-layer cipher.
//!
//! Everything is a pure function over immutable tables; all operations are
//! safe to evaluate concurrently without coordination. Element names are
//! the indices `0..n-1` throughout.
//!
//! ```
//! use cipq::algebra::Property;
//! use cipq::{corpus, keedwell};
//!
//! // a o b = 3a + 4b mod 11 on the cyclic group of order 11
//! let table = keedwell::keedwell_table(&corpus::cyclic_group(11), 3, 4)?;
//! assert!(table.predicate(Property::Cip).holds());
//!
//! // the right crossed inverse is the power map x -> 6x, u = (-3)^3 mod 11
//! let maps = table.inverse_maps().unwrap();
//! assert_eq!(maps.j_rho.apply(1), 6);
//! assert_eq!(table.mul(table.mul(5, 9)?, maps.j_rho.apply(5))?, 9);
//! # Ok::<(), cipq::keedwell::KeedwellError>(())
//! ```

pub mod algebra;
pub mod corpus;
pub mod crypto;
pub mod files;
pub mod holomorph;
pub mod isotopy;
pub mod keedwell;
pub mod morphism;
pub mod verify;

pub use algebra::{
    CayleyTable, InverseKind, InverseMaps, LoopStructure, Property, PropertyStatus, StructureReport,
};
pub use crypto::{CipherEnvelope, KeyBundle};
pub use holomorph::Holomorph;
pub use isotopy::{DerivedMaps, IsotopyKey};
pub use keedwell::{AbelianGroupSpec, KeedwellParams};
pub use morphism::{MappingTriple, PermGroup, Permutation};
