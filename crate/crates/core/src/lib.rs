//! Exact-arithmetic toolkit for the character theory of simple complex Lie
//! groups on torsion elements of a principal torus.
//!
//! The crate is organized around the pipeline:
//!
//! * [`rootdata`] — root data for all simple types in Bourbaki conventions,
//!   Weyl-group actions and root subsystems;
//! * [`laurent`] — integer Laurent polynomials and exact evaluation at roots
//!   of unity through cyclotomic quotient rings;
//! * [`sl2restrict`] — restriction of an irreducible highest-weight
//!   representation to the principal `SL(2)` as a Laurent polynomial;
//! * [`torsionchar`] — character values on the principal torsion elements
//!   `C_m`, by direct cyclotomic evaluation and by the structural
//!   sign · d_λ / d_m route, with conjugacy witnesses;
//! * [`kacsearch`] — finite-order conjugacy classes via extended-diagram
//!   (Kac) coordinates and classical eigenvalue patterns, with
//!   minimal-centralizer searches;
//! * [`diffset`] — difference-multiset combinatorics of integer sets and the
//!   collision search behind equal principal restrictions in type A;
//! * [`oracle`] — deliberately naive reference evaluators used by tests.

pub mod diffset;
pub mod kacsearch;
pub mod laurent;
pub mod oracle;
pub mod rootdata;
pub mod sl2restrict;
pub mod torsionchar;

pub use laurent::{CyclotomicInteger, LaurentPolynomial};
pub use rootdata::{CartanType, Family, RootDatum, Weight, WeylElement};
