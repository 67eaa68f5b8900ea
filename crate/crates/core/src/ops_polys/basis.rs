use std::collections::BTreeMap;

use serde::Serialize;

use super::{eigenvalue, Operator};
use crate::combinatorics::{dominance_leq, enumerate_below, Partition};
use crate::exactalg::{Family, ParamPoint, Rat, SymPoly};
use crate::{Error, Result};

/// Operator matrix on the monomial basis below `top`; `entries[ν][μ]` is
/// the coefficient of `m_μ` in `D m_ν`, rows and columns in `order`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OperatorMatrix {
    pub family: Family,
    pub top: Partition,
    pub order: Vec<Partition>,
    #[serde(rename = "rows")]
    pub entries: Vec<Vec<Rat>>,
}

/// Per-job cache of operator images and eigenpolynomials for one family,
/// parameter point and rank. Not shared between threads.
pub struct Eigenbasis {
    params: ParamPoint,
    op: Operator,
    images: BTreeMap<Partition, SymPoly>,
    polys: BTreeMap<Partition, SymPoly>,
}

impl Eigenbasis {
    pub fn new(family: Family, params: &ParamPoint, n: usize) -> Result<Eigenbasis> {
        Ok(Eigenbasis {
            params: params.clone(),
            op: Operator::new(family, params, n)?,
            images: BTreeMap::new(),
            polys: BTreeMap::new(),
        })
    }

    pub fn family(&self) -> Family {
        self.op.family()
    }

    pub fn n(&self) -> usize {
        self.op.n()
    }

    pub fn params(&self) -> &ParamPoint {
        &self.params
    }

    pub fn operator(&self) -> &Operator {
        &self.op
    }

    fn check_context(&self, lambda: &Partition) -> Result<()> {
        if lambda.context_n() != self.n() {
            return Err(Error::MismatchedContext { left: self.n(), right: lambda.context_n() });
        }
        Ok(())
    }

    /// `D m_ν`, checked to be triangular with the eigenvalue on the diagonal.
    pub fn image(&mut self, nu: &Partition) -> Result<&SymPoly> {
        self.check_context(nu)?;
        if !self.images.contains_key(nu) {
            let m = SymPoly::monomial(self.family().basis(), nu);
            let img = self.op.apply(&m)?;
            for mu in img.coeffs().keys() {
                if !dominance_leq(mu, nu)? {
                    return Err(Error::Triangularity { row: nu.to_string(), col: mu.to_string() });
                }
            }
            let expected = eigenvalue(self.family(), nu, &self.params)?;
            let found = img.coeff(nu);
            if found != expected {
                return Err(Error::DiagonalMismatch {
                    lambda: nu.to_string(),
                    found: found.to_string(),
                    expected: expected.to_string(),
                });
            }
            self.images.insert(nu.clone(), img);
        }
        Ok(&self.images[nu])
    }

    pub fn matrix(&mut self, top: &Partition) -> Result<OperatorMatrix> {
        let order = enumerate_below(top);
        let mut entries = Vec::with_capacity(order.len());
        for nu in &order {
            let img = self.image(nu)?.clone();
            entries.push(order.iter().map(|mu| img.coeff(mu)).collect());
        }
        Ok(OperatorMatrix { family: self.family(), top: top.clone(), order, entries })
    }

    /// `P_λ` by back-substitution
    /// `c_μ = Σ_{μ<ν≤λ} [D m_ν]_μ c_ν / (E_λ − E_μ)`.
    pub fn polynomial(&mut self, lambda: &Partition) -> Result<SymPoly> {
        self.check_context(lambda)?;
        if let Some(p) = self.polys.get(lambda) {
            return Ok(p.clone());
        }
        let below = enumerate_below(lambda);
        let e_top = eigenvalue(self.family(), lambda, &self.params)?;
        let mut coeffs: Vec<(Partition, Rat)> = vec![(lambda.clone(), Rat::one())];
        for mu in below.iter().rev().skip(1) {
            let mut sum = Rat::zero();
            for (nu, c) in &coeffs {
                let entry = self.image(nu)?.coeff(mu);
                if !entry.is_zero() {
                    sum += entry * c;
                }
            }
            let gap = &e_top - eigenvalue(self.family(), mu, &self.params)?;
            if gap.is_zero() {
                return Err(Error::DegenerateSpecialization(format!(
                    "eigenvalues of {lambda} and {mu} coincide"
                )));
            }
            coeffs.push((mu.clone(), sum / gap));
        }
        // the top row is needed for the diagonal check even when nothing lies below
        self.image(lambda)?;
        let p = SymPoly::from_coeffs(self.family().basis(), self.n(), coeffs)?;
        self.polys.insert(lambda.clone(), p.clone());
        Ok(p)
    }

    /// Coefficients of `p` in the basis `{P_μ}`.
    pub fn expand(&mut self, p: &SymPoly) -> Result<BTreeMap<Partition, Rat>> {
        if p.basis() != self.family().basis() {
            return Err(Error::BasisMismatch(format!(
                "{} polynomial in the {} basis",
                p.basis(),
                self.family()
            )));
        }
        let mut rest = p.clone();
        let mut out = BTreeMap::new();
        while let Some((mu, c)) = rest.leading() {
            let (mu, c) = (mu.clone(), c.clone());
            let pm = self.polynomial(&mu)?;
            rest = rest.sub(&pm.scale(&c))?;
            out.insert(mu, c);
        }
        Ok(out)
    }

    /// The functional with `h(P_0) = 1` and `h(P_μ) = 0` for `μ ≠ 0`.
    pub fn h(&mut self, p: &SymPoly) -> Result<Rat> {
        let zero = Partition::zero(self.n());
        Ok(self.expand(p)?.remove(&zero).unwrap_or_else(Rat::zero))
    }

    /// `⟨p1, p2⟩ = h(p1 p2)`.
    pub fn inner_product(&mut self, p1: &SymPoly, p2: &SymPoly) -> Result<Rat> {
        let prod = p1.mul(p2)?;
        self.h(&prod)
    }
}
