//! Terminating basic hypergeometric series, the two classical summations
//! used by the rank-one evaluations, and the rank-one polynomials written
//! as explicit series.

use crate::combinatorics::q_pochhammer;
use crate::exactalg::Rat;
use crate::{Error, Result};

/// `_{r+1}φ_r(q^{-m}, upper; lower; q, z)`, summed exactly. The series
/// stops after the `m`-th term because `(q^{-m}; q)_k = 0` for `k > m`.
pub fn terminating_phi(m: u32, upper: &[Rat], lower: &[Rat], q: &Rat, z: &Rat) -> Result<Rat> {
    if upper.len() != lower.len() {
        return Err(Error::InvalidInput(format!(
            "a balanced series needs {} lower parameters, got {}",
            upper.len(),
            lower.len()
        )));
    }
    let qm = q
        .checked_pow(-(m as i64))
        .ok_or_else(|| Error::DegenerateSpecialization("q = 0 in a terminating series".into()))?;
    let one = Rat::one();
    let mut term = Rat::one();
    let mut sum = Rat::one();
    for k in 0..m as i64 {
        let qk = q.pow(k);
        let mut num = (&one - &qm * &qk) * z;
        let mut den = &one - q * &qk;
        for u in upper {
            num *= &one - u * &qk;
        }
        for l in lower {
            den *= &one - l * &qk;
        }
        if den.is_zero() {
            return Err(Error::VanishingDenominator { label: format!("series term {}", k + 1) });
        }
        term = term * num / den;
        sum += &term;
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesIdentity {
    /// `₂φ₁(q^{-m}, a; c; q, q) = (c/a; q)_m a^m / (c; q)_m`, free parameters `[a, c]`.
    QVandermonde,
    /// `₃φ₂(q^{-m}, a, b; c, abq^{1-m}/c; q, q) = (c/a, c/b; q)_m / (c, c/ab; q)_m`,
    /// free parameters `[a, b, c]`.
    QSaalschutz,
}

impl SeriesIdentity {
    pub const ALL: [SeriesIdentity; 2] = [SeriesIdentity::QVandermonde, SeriesIdentity::QSaalschutz];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesIdentity::QVandermonde => "q_vandermonde",
            SeriesIdentity::QSaalschutz => "q_saalschutz",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            SeriesIdentity::QVandermonde => 2,
            SeriesIdentity::QSaalschutz => 3,
        }
    }

    /// Both sides of the identity.
    pub fn sides(self, m: u32, free: &[Rat], q: &Rat) -> Result<(Rat, Rat)> {
        if free.len() != self.arity() {
            return Err(Error::InvalidInput(format!(
                "{} takes {} free parameters, got {}",
                self.as_str(),
                self.arity(),
                free.len()
            )));
        }
        let nonzero = |x: &Rat, what: &str| -> Result<Rat> {
            x.inv().ok_or_else(|| Error::VanishingDenominator { label: what.into() })
        };
        match self {
            SeriesIdentity::QVandermonde => {
                let (a, c) = (&free[0], &free[1]);
                let lhs = terminating_phi(m, std::slice::from_ref(a), std::slice::from_ref(c), q, q)?;
                let den = q_pochhammer(c, q, m);
                let rhs = q_pochhammer(&(c * nonzero(a, "a")?), q, m)
                    * a.pow(m as i64)
                    * nonzero(&den, "(c;q)_m")?;
                Ok((lhs, rhs))
            }
            SeriesIdentity::QSaalschutz => {
                let (a, b, c) = (&free[0], &free[1], &free[2]);
                let inv_c = nonzero(c, "c")?;
                let lower = [c.clone(), a * b * q.pow(1 - m as i64) * &inv_c];
                let lhs = terminating_phi(m, &[a.clone(), b.clone()], &lower, q, q)?;
                let num = q_pochhammer(&(c * nonzero(a, "a")?), q, m)
                    * q_pochhammer(&(c * nonzero(b, "b")?), q, m);
                let den = q_pochhammer(c, q, m) * q_pochhammer(&(c * nonzero(&(a * b), "ab")?), q, m);
                Ok((lhs, num * nonzero(&den, "(c, c/ab;q)_m")?))
            }
        }
    }
}

/// Exact check of a summation formula. Parameter points where either side
/// is undefined count as failures.
pub fn verify_terminating_series(identity: SeriesIdentity, m: u32, free_params: &[Rat], q: &Rat) -> bool {
    matches!(identity.sides(m, free_params, q), Ok((lhs, rhs)) if lhs == rhs)
}

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

fn sign(m: u32) -> Rat {
    if m.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn checked_div(num: Rat, den: Rat, label: &str) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::VanishingDenominator { label: label.into() });
    }
    Ok(num / den)
}

/// The monic Askey-Wilson polynomial of degree `m` at `z`:
/// `(ab, ac, ad; q)_m / (a^m (q^{m-1}abcd; q)_m) · ₄φ₃(q^{-m}, q^{m-1}abcd, az, a/z; ab, ac, ad; q, q)`.
pub fn askey_wilson_rank_one(m: u32, abcd: [&Rat; 4], q: &Rat, z: &Rat) -> Result<Rat> {
    let [a, b, c, d] = abcd;
    let top = q.pow(m as i64 - 1) * a * b * c * d;
    let inv_z = z.inv().ok_or_else(|| Error::InvalidInput("z = 0 in a Laurent polynomial".into()))?;
    let lower = [a * b, a * c, a * d];
    let phi = terminating_phi(m, &[top.clone(), a * z, a * inv_z], &lower, q, q)?;
    let pre = q_pochhammer(&lower[0], q, m) * q_pochhammer(&lower[1], q, m) * q_pochhammer(&lower[2], q, m);
    checked_div(pre * phi, a.pow(m as i64) * q_pochhammer(&top, q, m), "a^m (q^{m-1}abcd;q)_m")
}

/// The monic one-variable big q-Jacobi polynomial of degree `m` at `z`:
/// `(qa, −qad/c; q)_m / ((q^{m+1}ab; q)_m (qa/c)^m) · ₃φ₂(q^{-m}, q^{m+1}ab, qaz/c; qa, −qad/c; q, q)`.
pub fn big_rank_one(m: u32, abcd: [&Rat; 4], q: &Rat, z: &Rat) -> Result<Rat> {
    let [a, b, c, d] = abcd;
    let inv_c = c.inv().ok_or_else(|| Error::DegenerateSpecialization("c = 0".into()))?;
    let qa = q * a;
    let lower = [qa.clone(), -(&qa * d * &inv_c)];
    let top = q.pow(m as i64 + 1) * a * b;
    let phi = terminating_phi(m, &[top.clone(), &qa * z * &inv_c], &lower, q, q)?;
    let pre = q_pochhammer(&lower[0], q, m) * q_pochhammer(&lower[1], q, m);
    checked_div(
        pre * phi,
        q_pochhammer(&top, q, m) * (&qa * &inv_c).pow(m as i64),
        "(q^{m+1}ab;q)_m (qa/c)^m",
    )
}

/// `Π_{s<k} (1 − x q^s z)` as coefficients of `1, z, z², …`.
fn pochhammer_in_z(x: &Rat, q: &Rat, k: u32) -> Vec<Rat> {
    let mut poly = vec![Rat::one()];
    for s in 0..k as i64 {
        let root = x * q.pow(s);
        let mut next = vec![Rat::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c * &root;
        }
        poly = next;
    }
    poly
}

/// Coefficients of `P_m^L(z)` from
/// `(qb;q)_m / ((q^{m+1}ab;q)_m (qb)^m) · ₃φ₂(q^{-m}, q^{m+1}ab, qbz; qb, 0; q, q)`.
pub fn little_rank_one_via_3phi2(m: u32, a: &Rat, b: &Rat, q: &Rat) -> Result<Vec<Rat>> {
    let one = Rat::one();
    let qb = q * b;
    let top = q.pow(m as i64 + 1) * a * b;
    let qm = q.pow(-(m as i64));
    let mut coeffs = vec![Rat::zero(); m as usize + 1];
    let mut scalar = Rat::one();
    for k in 0..=m {
        if k > 0 {
            let qk = q.pow(k as i64 - 1);
            let num = (&one - &qm * &qk) * (&one - &top * &qk) * q;
            let den = (&one - &qb * &qk) * (&one - q * &qk);
            scalar = checked_div(scalar * num, den, "(qb, q;q)_k")?;
        }
        for (i, c) in pochhammer_in_z(&qb, q, k).iter().enumerate() {
            coeffs[i] += &scalar * c;
        }
    }
    let pre = checked_div(
        q_pochhammer(&qb, q, m),
        q_pochhammer(&top, q, m) * qb.pow(m as i64),
        "(q^{m+1}ab;q)_m (qb)^m",
    )?;
    Ok(coeffs.into_iter().map(|c| c * &pre).collect())
}

/// Coefficients of `P_m^L(z)` from
/// `(qa;q)_m / (q^{m+1}ab;q)_m (−1)^m q^{C(m,2)} ₂φ₁(q^{-m}, q^{m+1}ab; qa; q, qz)`.
pub fn little_rank_one_via_2phi1(m: u32, a: &Rat, b: &Rat, q: &Rat) -> Result<Vec<Rat>> {
    let one = Rat::one();
    let qa = q * a;
    let top = q.pow(m as i64 + 1) * a * b;
    let qm = q.pow(-(m as i64));
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut scalar = Rat::one();
    for k in 0..=m {
        if k > 0 {
            let qk = q.pow(k as i64 - 1);
            let num = (&one - &qm * &qk) * (&one - &top * &qk) * q;
            let den = (&one - &qa * &qk) * (&one - q * &qk);
            scalar = checked_div(scalar * num, den, "(qa, q;q)_k")?;
        }
        coeffs.push(scalar.clone());
    }
    let pre = checked_div(
        q_pochhammer(&qa, q, m) * sign(m) * q.pow(binom2(m as i64)),
        q_pochhammer(&top, q, m),
        "(q^{m+1}ab;q)_m",
    )?;
    Ok(coeffs.into_iter().map(|c| c * &pre).collect())
}
