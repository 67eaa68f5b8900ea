//! Sparse multivariate Laurent polynomials over `Rat`.
//!
//! This is the working representation of the operator engine: operator
//! coefficients, shifted polynomials and the exact division by denominator
//! factors all happen here before results are folded back into the
//! symmetric monomial basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use super::Rat;

pub type Exponent = Vec<i32>;

/// Terms are keyed by exponent vectors in lexicographic order, so the last
/// entry is the lex-leading term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl LPoly {
    pub fn zero(nvars: usize) -> LPoly {
        LPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> LPoly {
        LPoly::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exponent, c: Rat) -> LPoly {
        let mut p = LPoly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// `c · z_var^power`.
    pub fn var_power(nvars: usize, var: usize, power: i32, c: Rat) -> LPoly {
        let mut e = vec![0; nvars];
        e[var] = power;
        LPoly::monomial(e, c)
    }

    /// Builds `Σ c · z^e` from `(e, c)` pairs, merging duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Rat)>) -> LPoly {
        let mut p = LPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, exp: Exponent, c: Rat) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Exponent, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> LPoly {
        if s.is_zero() {
            return LPoly::zero(self.nvars);
        }
        LPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &LPoly) -> LPoly {
        let mut acc: HashMap<Exponent, Rat> = HashMap::with_capacity(self.len() * other.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                let prod = c1 * c2;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        LPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LPoly {
        let mut acc = LPoly::constant(self.nvars, Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> LPoly {
        LPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `z_j ↦ z_j^{-1}` in every variable.
    pub fn invert_variables(&self) -> LPoly {
        LPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `z_var ↦ s · z_var`.
    pub fn dilate(&self, var: usize, s: &Rat) -> LPoly {
        LPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s.pow(e[var] as i64)))
                .collect(),
        }
    }

    /// Componentwise minimum of the exponents (zero vector for the zero polynomial).
    pub fn min_exponents(&self) -> Exponent {
        let mut out: Option<Exponent> = None;
        for e in self.terms.keys() {
            out = Some(match out {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        out.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// Splits `self = lc · z^content · primitive` where `primitive` has
    /// nonnegative exponents, is divisible by no variable and has
    /// lex-leading coefficient one.
    pub fn normalize(&self) -> Option<(Rat, Exponent, LPoly)> {
        let lc = self.leading()?.1.clone();
        let content = self.min_exponents();
        let neg: Vec<i32> = content.iter().map(|x| -x).collect();
        let lc_inv = lc.inv()?;
        let primitive = self.shift(&neg).scale(&lc_inv);
        Some((lc, content, primitive))
    }

    /// Exact quotient `self / divisor` for a primitive polynomial divisor
    /// (as returned by [`LPoly::normalize`]); `None` when the division
    /// leaves a remainder.
    pub fn div_exact(&self, divisor: &LPoly) -> Option<LPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lead_exp, lead_c) = divisor.leading()?;
        let lead_inv = lead_c.inv()?;
        let offset = self.min_exponents();
        let neg: Vec<i32> = offset.iter().map(|x| -x).collect();
        let mut rem = self.shift(&neg);
        let mut quotient = LPoly::zero(self.nvars);
        while let Some((e, c)) = rem.leading() {
            if e.iter().zip(lead_exp).any(|(x, y)| x < y) {
                return None;
            }
            let qe: Exponent = e.iter().zip(lead_exp).map(|(x, y)| x - y).collect();
            let qc = c * &lead_inv;
            for (de, dc) in &divisor.terms {
                let te: Exponent = qe.iter().zip(de).map(|(x, y)| x + y).collect();
                rem.add_term(te, -(&qc * dc));
            }
            quotient.add_term(qe, qc);
        }
        Some(quotient.shift(&offset))
    }

    /// Exact evaluation at a point with nonzero coordinates.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                term *= x.checked_pow(k as i64)?;
            }
            acc += term;
        }
        Some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn x(p: i32) -> LPoly {
        LPoly::var_power(2, 0, p, Rat::one())
    }
    fn y(p: i32) -> LPoly {
        LPoly::var_power(2, 1, p, Rat::one())
    }
    fn one() -> LPoly {
        LPoly::constant(2, Rat::one())
    }

    #[test]
    fn multiply_and_divide() {
        let f = x(1).sub(&y(1)); // x - y
        let g = x(2).add(&y(-1)).add(&one()); // x^2 + 1/y + 1
        let prod = f.mul(&g);
        let (_, _, prim) = f.normalize().unwrap();
        assert_eq!(prod.div_exact(&prim).unwrap(), g);
    }

    #[test]
    fn division_detects_remainder() {
        let f = x(1).sub(&y(1));
        let (_, _, prim) = f.normalize().unwrap();
        assert!(x(2).add(&one()).div_exact(&prim).is_none());
    }

    #[test]
    fn normalize_extracts_content() {
        // 1 - y/x = x^{-1}(x - y)
        let f = one().sub(&x(-1).mul(&y(1)));
        let (lc, content, prim) = f.normalize().unwrap();
        assert_eq!(content, vec![-1, 0]);
        assert_eq!(prim, x(1).sub(&y(1)));
        assert_eq!(lc, Rat::one());
        let back = prim.shift(&content).scale(&lc);
        assert_eq!(back, f);
    }

    #[test]
    fn dilation_and_evaluation() {
        let f = x(2).add(&y(-1).scale(&rat(3, 1)));
        let g = f.dilate(1, &rat(1, 2));
        let pt = [rat(2, 1), rat(5, 1)];
        assert_eq!(g.eval(&pt).unwrap(), rat(4, 1) + rat(6, 5));
        assert!(f.eval(&[rat(1, 1), Rat::zero()]).is_none());
    }
}
