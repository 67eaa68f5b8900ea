//! Dimensions of the spherical representations of p-adic Grassmannians,
//! and the `q = 0` generalized dimension `D_0(λ; a, b; t)` in closed form.

use super::check_rank;
use crate::combinatorics::{enumerate_contained, q_binomial, q_multinomial, q_pochhammer, Partition};
use crate::exactalg::Rat;
use crate::{Error, Result};

fn nonzero(x: Rat, label: &str) -> Result<Rat> {
    if x.is_zero() {
        return Err(Error::VanishingDenominator { label: label.into() });
    }
    Ok(x)
}

fn columns(lambda: &Partition) -> (i64, i64) {
    let conj = lambda.conjugate();
    (conj.part(0) as i64, conj.part(1) as i64)
}

fn multinomial(lambda: &Partition, t: &Rat) -> Result<Rat> {
    q_multinomial(lambda.context_n() as u32, &lambda.conjugate_differences(), t)
}

/// `D_0(λ; a, b; t)` in the simplified closed form
/// `a^{-|λ|} t^{-2(ρ,λ)} [n; ∂λ']_t (at^{n-λ'_1}; t)_{λ'_1} (abt^{2n-λ'_1-λ'_2}; t)_{λ'_1+λ'_2}
///  / (bt^{n-λ'_1}, abt^{n-λ'_1-1}; t)_{λ'_1} · (1 − abt^{2n-2λ'_1-1}) / (1 − abt^{2n-1})`.
pub fn padicfor(lambda: &Partition, a: &Rat, b: &Rat, t: &Rat) -> Result<Rat> {
    let n = lambda.context_n() as i64;
    let (c1, c2) = columns(lambda);
    let one = Rat::one();
    let ab = a * b;
    let a_inv = nonzero(a.clone(), "a")?.pow(-1);
    let t_inv = nonzero(t.clone(), "t")?.pow(-1);
    let num = q_pochhammer(&(a * t.pow(n - c1)), t, c1 as u32)
        * q_pochhammer(&(&ab * t.pow(2 * n - c1 - c2)), t, (c1 + c2) as u32)
        * (&one - &ab * t.pow(2 * n - 2 * c1 - 1));
    let den = q_pochhammer(&(b * t.pow(n - c1)), t, c1 as u32)
        * q_pochhammer(&(&ab * t.pow(n - c1 - 1)), t, c1 as u32)
        * (&one - &ab * t.pow(2 * n - 1));
    let prefactor = a_inv.pow(lambda.weight() as i64) * t_inv.pow(2 * lambda.rho_pairing());
    Ok(prefactor * multinomial(lambda, t)? * num / nonzero(den, "(bt^{n-λ'_1}, abt^{n-λ'_1-1};t)_{λ'_1}(1-abt^{2n-1})")?)
}

/// `Dim V_λ` for the Grassmannian `Gr(n, d)` over a non-Archimedean local
/// field with `t = |O/p|^{-1}`.
pub fn padic_dim_closed(lambda: &Partition, t: &Rat, d: usize) -> Result<Rat> {
    let n = lambda.context_n();
    check_rank(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let (c1, c2) = columns(lambda);
    let one = Rat::one();
    let t_inv = nonzero(t.clone(), "t")?.pow(-1);
    let num = q_pochhammer(&t.pow(d - c1 - c2 + 2), t, (c1 + c2) as u32) * (&one - t.pow(d - 2 * c1 + 1));
    let den = q_pochhammer(&t.pow(n - c1 + 1), t, c1 as u32) * (&one - t.pow(d + 1));
    let prefactor = t_inv.pow((d - 2 * n + 1) * lambda.weight() as i64 + 2 * lambda.rho_pairing());
    Ok(prefactor * multinomial(lambda, t)? * num / nonzero(den, "(t^{n-λ'_1+1};t)_{λ'_1}(1-t^{d+1})")?)
}

/// `(d choose r)_{1/t} − (d choose r−1)_{1/t}`.
pub fn padic_fundamental(r: usize, d: usize, t: &Rat) -> Result<Rat> {
    let s = nonzero(t.clone(), "t")?.pow(-1);
    let (r, d) = (r as u32, d as u32);
    let lower = if r == 0 { Rat::zero() } else { q_binomial(d, r - 1, &s)? };
    Ok(q_binomial(d, r, &s)? - lower)
}

/// `t^{-(d-1)k} (1 − t^{d-1})(1 − t^d) / (1 − t)` for `λ = (k)`, `k ≥ 2`.
pub fn padic_projective(k: u32, d: usize, t: &Rat) -> Result<Rat> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("the projective-space formula needs k ≥ 2, got {k}")));
    }
    let d = d as i64;
    let one = Rat::one();
    let t_inv = nonzero(t.clone(), "t")?.pow(-1);
    let num = (&one - t.pow(d - 1)) * (&one - t.pow(d));
    Ok(t_inv.pow((d - 1) * k as i64) * num / nonzero(&one - t, "1 - t")?)
}

/// Both sides of `Σ_{λ ⊆ kⁿ} Dim V_λ = t^{-n(d-n)(k-1)} (d choose n)_{1/t}`.
pub fn padic_sum_sides(n: usize, d: usize, k: u32, t: &Rat) -> Result<(Rat, Rat)> {
    if k == 0 {
        return Err(Error::InvalidInput("the sum identity needs k ≥ 1".into()));
    }
    check_rank(n, d)?;
    let mut lhs = Rat::zero();
    for lambda in enumerate_contained(k, n) {
        lhs += padic_dim_closed(&lambda, t, d)?;
    }
    let t_inv = nonzero(t.clone(), "t")?.pow(-1);
    let rhs = t_inv.pow((n * (d - n)) as i64 * (k as i64 - 1)) * q_binomial(d as u32, n as u32, &t_inv)?;
    Ok((lhs, rhs))
}

/// Exact check of the sum identity.
pub fn padic_sum_identity(n: usize, d: usize, k: u32, t: &Rat) -> Result<bool> {
    let (lhs, rhs) = padic_sum_sides(n, d, k, t)?;
    Ok(lhs == rhs)
}

/// The `n = 1` geometric sum
/// `1 + t^{1-d}(1−t^{d-1})/(1−t) + (1−t^{d-1})(1−t^d)/(1−t) Σ_{m=2}^k t^{(1-d)m}`
/// and its value `t^{(1-d)k}(1−t^d)/(1−t)`.
pub fn geometric_sum_sides(d: usize, k: u32, t: &Rat) -> Result<(Rat, Rat)> {
    let one = Rat::one();
    let d = d as i64;
    let s = nonzero(t.clone(), "t")?.pow(1 - d);
    let den = nonzero(&one - t, "1 - t")?;
    let mut lhs = &one + &s * (&one - t.pow(d - 1)) / &den;
    let tail: Rat = (2..=k as i64).map(|m| s.pow(m)).sum();
    lhs += (&one - t.pow(d - 1)) * (&one - t.pow(d)) / &den * tail;
    let rhs = s.pow(k as i64) * (&one - t.pow(d)) / den;
    Ok((lhs, rhs))
}
