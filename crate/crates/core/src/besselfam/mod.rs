//! Bessel-type functions: the normalized classical Bessel function, its
//! Dunkl and (-1) variants, the normalized second and third q-Bessel
//! functions, the Jackson q-Bessel functions, and residual checks of their
//! differential and difference equations.

mod classical;
mod qbessel;
mod series;

pub use classical::*;
pub use qbessel::*;
pub use series::TruncSeries;
