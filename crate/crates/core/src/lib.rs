//! Exact computation in the first Weyl algebra `A1 = Q<X, Y | YX - XY = 1>`.
//!
//! Elements are stored in the normal basis `Y^i X^j`. On top of the
//! arithmetic kernel the crate provides the graded (generalized Weyl
//! algebra) view over `Q[H]` with `H = YX`, weighted degree functions and
//! Newton polygons, linear maps such as inner derivations together with
//! their drops, exact windowed linear algebra (eigenspaces, centralizers,
//! nilpotent closures), endomorphism recipes and a suite of checks that
//! exercises structural facts about pairs `(x, y)` with `[y, x] = 1`.
//!
//! ```
//! use weyl::{parse, WeylElement};
//!
//! let xy = parse("X*Y").unwrap();
//! assert_eq!(xy.to_string(), "-1 + Y*X");
//! assert_eq!(parse("[Y,X]").unwrap(), WeylElement::one());
//! ```

pub mod checks;
pub mod cli;
pub mod degree;
pub mod doc;
pub mod element;
pub mod endo;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod maps;
pub mod membership;
pub mod newton;
pub mod parse;
pub mod recipe;
pub mod scalar;
pub mod semigroup;
pub mod spectral;
pub mod window;

pub use degree::Degree;
pub use element::{Monomial, WeylElement};
pub use endo::{apply_endo, build_endo, EndoPair};
pub use error::{Error, Result};
pub use graded::{GradedElement, LocalizedElement, PolyH, RatH};
pub use maps::MapSpec;
pub use newton::Weight;
pub use parse::parse;
pub use scalar::Rat;
pub use window::{Subspace, Window};
