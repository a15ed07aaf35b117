//! Computational commutative algebra for numerical and affine semigroups:
//! toric ideals, Gröbner and standard bases, Cohen-Macaulay and Gorenstein
//! verdicts, multigraded Betti degrees, and checks of gluing, extension and
//! join constructions on concrete instances.

pub mod deadline;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod population;
pub mod resolution;
pub mod semigroups;
pub mod toric;
pub mod theorems;
pub mod verdicts;

pub use deadline::Deadline;
pub use error::{Error, Result};
