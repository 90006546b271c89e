//! Homological invariants of Nakayama algebras: Kupisch series, syzygies and
//! global dimension, the resolution quiver, the relation complex, the
//! degree-`n` slice of cyclic homology of the radical, and unamalgamation.
//!
//! ```
//! use nakayama::{NakayamaAlgebra, KupischSeries, ResolutionQuiver, SimplicialComplex};
//!
//! let alg = NakayamaAlgebra::from_kupisch(&KupischSeries::new(vec![3, 2, 2, 4, 3]).unwrap());
//! let rq = ResolutionQuiver::build(&alg);
//! assert_eq!(rq.weights(), vec![1]);
//! assert_eq!(SimplicialComplex::build(&alg).euler_characteristic(), 1);
//! assert!(alg.global_dimension().is_finite());
//! ```

pub mod algebra;
pub mod complex;
pub mod cyclic;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod resolution;
pub mod schema;
pub mod unamalgamation;

pub use algebra::{AlgebraClass, KupischSeries, NakayamaAlgebra, ProjDim, Relation, UniserialModule};
pub use complex::{ReducedBetti, SimplicialComplex};
pub use cyclic::{CyclicComplex, MorphismCycle};
pub use error::{Error, Result};
pub use harness::{sweep, verify, Check, SweepConfig, TheoremReport};
pub use resolution::{Component, ResolutionQuiver};
pub use unamalgamation::{reduce_fully, unamalgamate, Reduction, Terminal, UnamalgamationStep};
