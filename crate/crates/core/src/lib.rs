//! Exact invariants and isomorphism decisions for antipodal point
//! arrangements, normal systems and affine hyperplane arrangements over
//! ordered fields.
//!
//! All arithmetic is exact. Algorithms are generic over [`OrderedField`];
//! the rationals and single real quadratic extensions are provided.

pub mod arrangement;
pub mod combinat;
pub mod cycles;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod fm;
pub mod formats;
pub mod linalg;
pub mod normal;
pub mod sphere;
pub mod symbols;

pub use arrangement::{ConcurrencySignMap, HyperplaneArrangement, Region, SigmaBranch};
pub use combinat::{Perm, SignedBijection};
pub use cycles::{CycleInvariantSet, CycleKey, LineCycle};
pub use error::{Error, FieldError, Result};
pub use field::{FieldTag, FieldValue, OrderedField, QuadExt, Rational, Sign};
pub use linalg::{Matrix, ProjectorPair};
pub use normal::{IsoWitness, NormalSystem};
pub use sphere::{AntipodalArrangement, PositiveCombination, SpherePoint};
pub use symbols::{Generator, Symbol};
