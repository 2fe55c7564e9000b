pub mod approximation;
pub mod arithmetic;
pub mod cli;
pub mod composition;
pub mod error;
pub mod measures;
pub mod multivariate;
pub mod poly;
pub mod quadrature;
pub mod resultant;
pub mod roots;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use poly::{ComplexPoly, IntPoly};
pub use quadrature::QuadratureConfig;
pub use roots::{find_roots, RootSet};
