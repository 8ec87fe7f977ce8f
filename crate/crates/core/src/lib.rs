//! Exact construction and analysis of cyclic and constacyclic linear codes over
//! finite chain rings.
//!
//! Codes of length `ℓ` with `gcd(ℓ, q) = 1` are described through trace-evaluation
//! codes indexed by `q`-cyclotomic cosets. Cyclic codes of length `uℓ` whose
//! defining sets sit in a single residue class modulo `u` contract to
//! `γ`-constacyclic codes of length `ℓ`. The [`oracle`] module recomputes every
//! structural claim by brute-force enumeration.

pub mod arith;
pub mod chainring;
pub mod contraction;
pub mod cosets;
pub mod document;
pub mod error;
pub mod galois;
pub mod linalg;
pub mod modcodes;
pub mod oracle;
mod poly;
pub mod tracecodes;

pub use chainring::{ChainRing, ChainRingSpec, Elem, Family};
pub use contraction::{contract_code, contract_dual, Contraction, ContractionContext};
pub use cosets::{CosetSet, CosetUniverse, CyclotomicPartition};
pub use document::{CodeDocument, ElemRepr, ExtensionDocument, PartitionDocument};
pub use error::{Error, Result};
pub use galois::GaloisExtension;
pub use modcodes::LinearCode;
pub use oracle::Budget;
pub use tracecodes::{count_cyclic_codes, EvalBasis};
