//! Exact construction of Macdonald-Koornwinder and multivariable big/little
//! q-Jacobi polynomials from their difference operators, together with their
//! evaluation and norm formulas and the dimension formulas for spherical
//! representations of (quantum, real, complex and p-adic) Grassmannians.
//!
//! All arithmetic is over exact rationals. Identities in the formal
//! parameters `a, b, c, d, q, t` are checked by specializing the parameters
//! to certified-generic rationals, see [`exactalg::sample_generic_params`].

pub mod cli;
pub mod closedforms;
pub mod combinatorics;
pub mod dimensions;
mod error;
pub mod exactalg;
pub mod ops_polys;

pub use combinatorics::Partition;
pub use error::{Error, Result};
pub use exactalg::{Family, ParamPoint, Rat, SymPoly};
