use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::laurent::{Exponent, LPoly};
use super::Rat;
use crate::combinatorics::Partition;
use crate::{Error, Result};

/// Which monomial basis a [`SymPoly`] is expanded in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisKind {
    /// `m_λ`: orbit sums under signed permutations (Laurent, `W`-invariant).
    #[serde(rename = "laurent_W_invariant")]
    LaurentWInvariant,
    /// `m̃_λ`: orbit sums under permutations (polynomial, `S_n`-invariant).
    #[serde(rename = "poly_S_invariant")]
    PolySInvariant,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisKind::LaurentWInvariant => "laurent_W_invariant",
            BasisKind::PolySInvariant => "poly_S_invariant",
        })
    }
}

/// All exponent vectors in the orbit of `parts`.
pub fn orbit(basis: BasisKind, parts: &[u32]) -> Vec<Exponent> {
    let mut perm: Vec<i32> = parts.iter().map(|&p| p as i32).collect();
    perm.sort_unstable();
    let mut perms = Vec::new();
    loop {
        perms.push(perm.clone());
        if !next_permutation(&mut perm) {
            break;
        }
    }
    match basis {
        BasisKind::PolySInvariant => perms,
        BasisKind::LaurentWInvariant => {
            let mut out = BTreeSet::new();
            for p in perms {
                let nonzero: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
                for mask in 0u32..(1 << nonzero.len()) {
                    let mut e = p.clone();
                    for (bit, &i) in nonzero.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            e[i] = -e[i];
                        }
                    }
                    out.insert(e);
                }
            }
            out.into_iter().collect()
        }
    }
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn is_dominant(basis: BasisKind, e: &[i32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
        && match basis {
            BasisKind::PolySInvariant => e.iter().all(|&x| x >= 0),
            BasisKind::LaurentWInvariant => e.last().is_none_or(|&x| x >= 0),
        }
}

/// A symmetric (Laurent) polynomial in `z_1..z_n`, stored by the
/// coefficients of the monomial symmetric functions of its dominant
/// exponents. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    basis: BasisKind,
    n: usize,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymPoly {
    pub fn zero(basis: BasisKind, n: usize) -> SymPoly {
        SymPoly { basis, n, coeffs: BTreeMap::new() }
    }

    pub fn constant(basis: BasisKind, n: usize, c: Rat) -> SymPoly {
        let mut p = SymPoly::zero(basis, n);
        p.add_term(Partition::zero(n), c);
        p
    }

    pub fn one(basis: BasisKind, n: usize) -> SymPoly {
        SymPoly::constant(basis, n, Rat::one())
    }

    /// The monomial symmetric function `m_λ` (or `m̃_λ`).
    pub fn monomial(basis: BasisKind, lambda: &Partition) -> SymPoly {
        let mut p = SymPoly::zero(basis, lambda.context_n());
        p.add_term(lambda.clone(), Rat::one());
        p
    }

    pub fn from_coeffs(
        basis: BasisKind,
        n: usize,
        coeffs: impl IntoIterator<Item = (Partition, Rat)>,
    ) -> Result<SymPoly> {
        let mut p = SymPoly::zero(basis, n);
        for (mu, c) in coeffs {
            if mu.context_n() != n {
                return Err(Error::MismatchedContext { left: n, right: mu.context_n() });
            }
            p.add_term(mu, c);
        }
        Ok(p)
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> Rat {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The graded-lex largest term.
    pub fn leading(&self) -> Option<(&Partition, &Rat)> {
        self.coeffs.iter().next_back()
    }

    pub fn add_term(&mut self, mu: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(mu.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&mu);
        }
    }

    fn check_compatible(&self, other: &SymPoly) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!("{} vs {}", self.basis, other.basis)));
        }
        if self.n != other.n {
            return Err(Error::MismatchedContext { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term(mu.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymPoly) -> Result<SymPoly> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> SymPoly {
        let mut out = SymPoly::zero(self.basis, self.n);
        for (mu, c) in &self.coeffs {
            out.add_term(mu.clone(), c * s);
        }
        out
    }

    /// Exact product, re-expanded by orbit convolution: the coefficient of
    /// `m_ν` in `m_λ m_μ` counts pairs `(α, β)` in the two orbits with
    /// `α + β = ν`.
    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check_compatible(other)?;
        let mut out = SymPoly::zero(self.basis, self.n);
        let orbits: BTreeMap<&Partition, Vec<Exponent>> = other
            .coeffs
            .keys()
            .map(|mu| (mu, orbit(self.basis, &mu.padded())))
            .collect();
        for (lam, c1) in &self.coeffs {
            let left = orbit(self.basis, &lam.padded());
            for (mu, c2) in &other.coeffs {
                let mut counts: BTreeMap<Exponent, i64> = BTreeMap::new();
                for a in &left {
                    for b in &orbits[mu] {
                        let s: Exponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if is_dominant(self.basis, &s) {
                            *counts.entry(s).or_insert(0) += 1;
                        }
                    }
                }
                let c = c1 * c2;
                for (e, k) in counts {
                    let parts: Vec<u32> = e.iter().map(|&x| x as u32).collect();
                    let nu = Partition::new(&parts, self.n)?;
                    out.add_term(nu, &c * Rat::from_int(k));
                }
            }
        }
        Ok(out)
    }

    /// Exact value at a point; Laurent polynomials need nonzero coordinates.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.n
            )));
        }
        if self.basis == BasisKind::LaurentWInvariant && point.iter().any(Rat::is_zero) {
            return Err(Error::InvalidInput(
                "zero coordinate for a Laurent polynomial".into(),
            ));
        }
        let mut acc = Rat::zero();
        for (mu, c) in &self.coeffs {
            let mut m = Rat::zero();
            for e in orbit(self.basis, &mu.padded()) {
                m += e
                    .iter()
                    .zip(point)
                    .map(|(&k, x)| x.pow(k as i64))
                    .product::<Rat>();
            }
            acc += c * m;
        }
        Ok(acc)
    }

    /// Full expansion into monomials `z^e`.
    pub fn to_laurent(&self) -> LPoly {
        let mut out = LPoly::zero(self.n);
        for (mu, c) in &self.coeffs {
            for e in orbit(self.basis, &mu.padded()) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Folds an expanded polynomial back into the monomial basis, checking
    /// that it is invariant (and, for the polynomial basis, that no negative
    /// exponents occur).
    pub fn from_laurent(basis: BasisKind, p: &LPoly) -> Result<SymPoly> {
        let n = p.nvars();
        let mut out = SymPoly::zero(basis, n);
        for (e, c) in p.terms() {
            if basis == BasisKind::PolySInvariant && e.iter().any(|&x| x < 0) {
                return Err(Error::BasisMismatch(format!(
                    "negative exponent {e:?} in a polynomial expansion"
                )));
            }
            if is_dominant(basis, e) {
                let parts: Vec<u32> = e.iter().map(|&x| x as u32).collect();
                out.add_term(Partition::new(&parts, n)?, c.clone());
            }
        }
        if out.to_laurent() != *p {
            return Err(Error::BasisMismatch(format!("expansion is not {basis}")));
        }
        Ok(out)
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[{}; ", self.basis)?;
        for (i, (mu, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·m{mu}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    mu: Partition,
    coeff: Rat,
}

#[derive(Serialize, Deserialize)]
struct SymPolyRepr {
    basis: BasisKind,
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymPolyRepr {
            basis: self.basis,
            n: self.n,
            terms: self
                .coeffs
                .iter()
                .map(|(mu, c)| TermRepr { mu: mu.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<SymPoly, D::Error> {
        let repr = SymPolyRepr::deserialize(d)?;
        SymPoly::from_coeffs(repr.basis, repr.n, repr.terms.into_iter().map(|t| (t.mu, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn part(p: &[u32], n: usize) -> Partition {
        Partition::new(p, n).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit(BasisKind::PolySInvariant, &[1, 0]).len(), 2);
        assert_eq!(orbit(BasisKind::LaurentWInvariant, &[1, 0]).len(), 4);
        assert_eq!(orbit(BasisKind::LaurentWInvariant, &[2, 1, 0]).len(), 24);
        assert_eq!(orbit(BasisKind::PolySInvariant, &[1, 1]).len(), 1);
    }

    #[test]
    fn multiplication_examples() {
        let s = BasisKind::PolySInvariant;
        let z = SymPoly::monomial(s, &part(&[1], 1));
        assert_eq!(z.mul(&z).unwrap(), SymPoly::monomial(s, &part(&[2], 1)));

        let e1 = SymPoly::monomial(s, &part(&[1, 0], 2));
        let sq = e1.mul(&e1).unwrap();
        let expected = SymPoly::from_coeffs(
            s,
            2,
            [(part(&[2], 2), Rat::one()), (part(&[1, 1], 2), rat(2, 1))],
        )
        .unwrap();
        assert_eq!(sq, expected);
        assert_eq!(e1.mul(&SymPoly::one(s, 2)).unwrap(), e1);
    }

    #[test]
    fn laurent_multiplication_has_constant_term() {
        // (z + 1/z)^2 = m_2 + 2
        let w = BasisKind::LaurentWInvariant;
        let m1 = SymPoly::monomial(w, &part(&[1], 1));
        let sq = m1.mul(&m1).unwrap();
        assert_eq!(sq.coeff(&part(&[2], 1)), Rat::one());
        assert_eq!(sq.coeff(&Partition::zero(1)), rat(2, 1));
    }

    #[test]
    fn evaluation_examples() {
        let w = BasisKind::LaurentWInvariant;
        let pt = [rat(2, 1), rat(3, 1)];
        assert_eq!(SymPoly::one(w, 2).eval(&pt).unwrap(), Rat::one());
        assert_eq!(
            SymPoly::monomial(w, &part(&[1, 0], 2)).eval(&pt).unwrap(),
            rat(35, 6)
        );
        let s = BasisKind::PolySInvariant;
        assert_eq!(
            SymPoly::monomial(s, &part(&[1, 1], 2)).eval(&pt).unwrap(),
            rat(6, 1)
        );
        assert!(SymPoly::one(w, 2).eval(&[rat(1, 1), Rat::zero()]).is_err());
    }

    #[test]
    fn laurent_roundtrip_checks_invariance() {
        let s = BasisKind::PolySInvariant;
        let p = SymPoly::monomial(s, &part(&[2, 1], 2));
        assert_eq!(SymPoly::from_laurent(s, &p.to_laurent()).unwrap(), p);
        let lopsided = LPoly::monomial(vec![2, 1], Rat::one());
        assert!(SymPoly::from_laurent(s, &lopsided).is_err());
    }

    #[test]
    fn json_schema() {
        let s = BasisKind::PolySInvariant;
        let p = SymPoly::from_coeffs(
            s,
            2,
            [(part(&[1], 2), rat(-1, 2)), (Partition::zero(2), rat(3, 1))],
        )
        .unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"{"basis":"poly_S_invariant","n":2,"terms":[{"mu":[0,0],"coeff":"3"},{"mu":[1,0],"coeff":"-1/2"}]}"#
        );
        let back: SymPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
