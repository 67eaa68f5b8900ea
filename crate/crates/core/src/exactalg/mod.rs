//! Exact scalars, parameter specializations and symmetric polynomials.

pub mod laurent;
mod params;
mod points;
mod rat;
mod sympoly;

pub use params::{sample_generic_params, Family, ParamPoint, SampledParams, MAX_SAMPLING_ATTEMPTS};
pub use points::{substitute_geometric_point, PointKind};
pub use rat::{rat, Rat};
pub use sympoly::{orbit, BasisKind, SymPoly};

/// `p · r` in the common monomial basis.
pub fn sympoly_mul(p: &SymPoly, r: &SymPoly) -> crate::Result<SymPoly> {
    p.mul(r)
}

/// `p(point)`, exactly.
pub fn sympoly_eval(p: &SymPoly, point: &[Rat]) -> crate::Result<Rat> {
    p.eval(point)
}
