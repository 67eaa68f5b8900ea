//! Closed-form evaluations, quadratic norms, `Δ_λ`, the algebraic
//! functionals `h` and the terminating basic hypergeometric sums behind the
//! rank-one formulas.

mod formulas;
mod product;
mod series;

pub use formulas::{
    big_evaluation, big_norm, delta_product, koornwinder_evaluation, koornwinder_norm,
    little_evaluation, little_norm, Symbols,
};
pub use product::{Factor, FactorProduct, Mono};
pub use series::{
    askey_wilson_rank_one, big_rank_one, little_rank_one_via_2phi1, little_rank_one_via_3phi2,
    terminating_phi, verify_terminating_series, SeriesIdentity,
};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{dominance_leq, Partition};
use crate::exactalg::{Family, ParamPoint, PointKind, Rat, SymPoly};
use crate::ops_polys::Eigenbasis;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosedFormKind {
    Evaluation,
    Norm,
    Delta,
}

/// One closed-form product to evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormRequest {
    pub family: Family,
    pub kind: ClosedFormKind,
    pub point_kind: Option<PointKind>,
    pub lambda: Partition,
    pub params: ParamPoint,
    pub n: usize,
}

impl ClosedFormRequest {
    pub fn evaluation(point: PointKind, lambda: Partition, params: ParamPoint) -> ClosedFormRequest {
        ClosedFormRequest {
            family: params.family,
            kind: ClosedFormKind::Evaluation,
            point_kind: Some(point),
            n: lambda.context_n(),
            lambda,
            params,
        }
    }

    pub fn norm(lambda: Partition, params: ParamPoint) -> ClosedFormRequest {
        ClosedFormRequest {
            family: params.family,
            kind: ClosedFormKind::Norm,
            point_kind: None,
            n: lambda.context_n(),
            lambda,
            params,
        }
    }

    fn check(&self, kind: ClosedFormKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::InvalidInput(format!(
                "expected a {kind:?} request, got {:?}",
                self.kind
            )));
        }
        if self.lambda.context_n() != self.n {
            return Err(Error::MismatchedContext { left: self.n, right: self.lambda.context_n() });
        }
        Ok(())
    }
}

/// The evaluation product for `req`.
pub fn evaluation_product(req: &ClosedFormRequest) -> Result<FactorProduct> {
    req.check(ClosedFormKind::Evaluation)?;
    let point = req
        .point_kind
        .ok_or_else(|| Error::InvalidInput("evaluation request without a point".into()))?;
    if !PointKind::admissible(req.family).contains(&point) {
        return Err(Error::InvalidInput(format!(
            "point {point} is not admissible for the {} family",
            req.family
        )));
    }
    let s = Symbols::from_params(&req.params);
    match req.family {
        Family::Mk => koornwinder_evaluation(&req.lambda, &s),
        Family::Little => little_evaluation(point, &req.lambda, &s),
        Family::Big => big_evaluation(point, &req.lambda, &s),
    }
}

/// Closed value of `P_λ` at the requested special point.
pub fn closed_evaluation(req: &ClosedFormRequest) -> Result<Rat> {
    evaluation_product(req)?.value()
}

/// Closed value of `N_K(λ)`, `N_L(λ)` or `N_B(λ)`.
pub fn closed_norm(req: &ClosedFormRequest) -> Result<Rat> {
    req.check(ClosedFormKind::Norm)?;
    let s = Symbols::from_params(&req.params);
    let fp = match req.family {
        Family::Mk => koornwinder_norm(&req.lambda, &s)?,
        Family::Little => little_norm(&req.lambda, &s)?,
        Family::Big => big_norm(&req.lambda, &s)?,
    };
    fp.value()
}

/// `Δ_λ(a, b; q, t)` at the parameter point.
pub fn delta_factor(lambda: &Partition, params: &ParamPoint, n: usize) -> Result<Rat> {
    if lambda.context_n() != n {
        return Err(Error::MismatchedContext { left: n, right: lambda.context_n() });
    }
    delta_product(lambda, &Symbols::from_params(params))?.value()
}

/// `h(p)`: the coefficient of `P_0` when `p` is expanded in the
/// eigenpolynomial basis.
pub fn h_functional(
    family: Family,
    p: &SymPoly,
    params: &ParamPoint,
    degree_bound: &Partition,
) -> Result<Rat> {
    for mu in p.coeffs().keys() {
        if !dominance_leq(mu, degree_bound)? {
            return Err(Error::InvalidInput(format!(
                "support element {mu} is not below the bound {degree_bound}"
            )));
        }
    }
    Eigenbasis::new(family, params, p.n())?.h(p)
}

/// `⟨p1, p2⟩ = h(p1 p2)`. Conjugation acts trivially on invariant
/// polynomials with rational coefficients.
pub fn inner_product(family: Family, p1: &SymPoly, p2: &SymPoly, params: &ParamPoint) -> Result<Rat> {
    Eigenbasis::new(family, params, p1.n())?.inner_product(p1, p2)
}
