//! Dimension formulas: the generalized dimension `D_q`, its `q = 0`
//! degeneration and the p-adic dimensions, the Weyl and q-Weyl formulas,
//! and the complex, real and quantum Grassmannian cases.

mod classical;
mod generalized;
mod padic;
mod table;

pub use classical::{
    complex_dim, natural_embedding, q_dim_schur, q_weyl_dim, q_weyl_product, quantum_dim,
    quantum_dim_via_little, quantum_fundamental, quantum_product, quantum_symbols, real_dim,
    real_dim_via_little, real_symbols, schur_alternant, weyl_dim,
};
pub use generalized::{
    fundamental_form, generalized_dim_fundamental, generalized_dim_product, generalized_dim_via_little,
    product_form, q0_factors, via_little_product,
};
pub use padic::{
    geometric_sum_sides, padic_dim_closed, padic_fundamental, padic_projective, padic_sum_identity,
    padic_sum_sides, padicfor,
};
pub use table::{dim_table, records_to_csv, records_to_table, DimParams, DimRecord, Space, APPROX_DIGITS};

use crate::{Error, Result};

/// Grassmannians `Gr(n, d)` are taken with `1 ≤ n ≤ d/2`.
fn check_rank(n: usize, d: usize) -> Result<()> {
    if n == 0 || 2 * n > d {
        return Err(Error::InvalidInput(format!("need 1 ≤ n ≤ d/2, got n = {n}, d = {d}")));
    }
    Ok(())
}
