//! The generalized dimension `D_q(λ; a, b; t)` along three routes: the
//! little q-Jacobi ratio, the `v`/`w^±` product and, for fundamental
//! weights, the single product.

use crate::closedforms::{little_evaluation, little_norm, FactorProduct, Mono, Symbols};
use crate::combinatorics::Partition;
use crate::exactalg::{PointKind, Rat};
use crate::{Error, Result};

fn parts(lambda: &Partition) -> (i64, Vec<i64>) {
    let n = lambda.context_n() as i64;
    (n, (0..n as usize).map(|i| lambda.part(i) as i64).collect())
}

/// `P^L_λ(0)² / N_L(λ)` at `(q^{-1}a, q^{-1}b; q, t)`, as a factor product.
pub fn via_little_product(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let qinv = s.q.inv()?;
    let shifted = Symbols::little(s.a.mul(&qinv), s.b.mul(&qinv), s.q.clone(), s.t.clone());
    let mut fp = little_evaluation(PointKind::Zero, lambda, &shifted)?.squared();
    fp.divide_by(&little_norm(lambda, &shifted)?)?;
    Ok(fp)
}

/// `a^{-|λ|} t^{-2(ρ,λ)} Π_i v_i(λ_i) Π_{j<k} w⁺_{jk}(λ_j+λ_k) w⁻_{jk}(λ_j−λ_k)`.
/// Factors with `m = 0` equal one and are left out.
pub fn product_form(lambda: &Partition, s: &Symbols) -> Result<FactorProduct> {
    let (n, lam) = parts(lambda);
    let (a, b, q, t) = (&s.a, &s.b, &s.q, &s.t);
    let ab = a.mul(b);
    let ab_q = ab.mul(&q.inv()?);
    let mut fp = FactorProduct::one();
    fp.scale(&a.pow(-(lambda.weight() as i64))?);
    fp.scale(&t.pow(-2 * lambda.rho_pairing())?);
    for i in 1..=n {
        let m = lam[i as usize - 1];
        if m == 0 {
            continue;
        }
        let ti = t.pow(n - i)?;
        let mu = m as u32;
        fp.num_pochhammer(&a.mul(&ti), q, mu, &format!("a·t^{}", n - i));
        fp.num_pochhammer(&ab_q.mul(&ti), q, mu, &format!("ab/q·t^{}", n - i));
        fp.den_pochhammer(&q.mul(&ti), q, mu, &format!("q·t^{}", n - i));
        fp.den_pochhammer(&b.mul(&ti), q, mu, &format!("b·t^{}", n - i));
        let t2 = t.pow(2 * (n - i))?;
        fp.num_factor(q.pow(2 * m - 1)?.mul(&ab).mul(&t2), format!("q^{}ab·t^{}", 2 * m - 1, 2 * (n - i)));
        fp.den_factor(ab_q.mul(&t2), format!("ab/q·t^{}", 2 * (n - i)));
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let (lj, lk) = (lam[j as usize - 1], lam[k as usize - 1]);
            let e = 2 * n - j - k;
            let plus = lj + lk;
            if plus > 0 {
                let mu = plus as u32;
                fp.num_pochhammer(&ab_q.mul(&t.pow(e + 1)?), q, mu, &format!("ab/q·t^{}", e + 1));
                fp.den_pochhammer(&ab.mul(&t.pow(e - 1)?), q, mu, &format!("ab·t^{}", e - 1));
                fp.num_factor(q.pow(plus - 1)?.mul(&ab).mul(&t.pow(e)?), format!("q^{}ab·t^{e}", plus - 1));
                fp.den_factor(ab_q.mul(&t.pow(e)?), format!("ab/q·t^{e}"));
            }
            let f = k - j;
            let minus = lj - lk;
            if minus > 0 {
                let mu = minus as u32;
                fp.num_pochhammer(&t.pow(f + 1)?, q, mu, &format!("t^{}", f + 1));
                fp.den_pochhammer(&q.mul(&t.pow(f - 1)?), q, mu, &format!("q·t^{}", f - 1));
                fp.num_factor(q.pow(minus)?.mul(&t.pow(f)?), format!("q^{minus}·t^{f}"));
                fp.den_factor(t.pow(f)?, format!("t^{f}"));
            }
        }
    }
    Ok(fp)
}

/// `D_q(ω_r)` as a single product in base `t`.
pub fn fundamental_form(r: usize, n: usize, s: &Symbols) -> Result<FactorProduct> {
    if r > n {
        return Err(Error::InvalidPartition(format!("ω_{r} needs r ≤ n = {n}")));
    }
    let (a, b, q, t) = (&s.a, &s.b, &s.q, &s.t);
    let (r, n) = (r as i64, n as i64);
    let ab = a.mul(b);
    let len = r as u32;
    let mut fp = FactorProduct::one();
    let tp = |k: i64| t.pow(k);
    fp.num_pochhammer(&q.mul(&ab).mul(&tp(2 * n - r - 1)?), t, len, "qab·t^{2n-r-1}");
    fp.num_pochhammer(&tp(n + 1 - r)?, t, len, "t^{n+1-r}");
    fp.num_pochhammer(&a.mul(&tp(n - r)?), t, len, "a·t^{n-r}");
    fp.num_pochhammer(&ab.mul(&tp(2 * n - r)?), t, len, "ab·t^{2n-r}");
    fp.den_pochhammer(q, t, len, "q");
    fp.den_pochhammer(t, t, len, "t");
    fp.den_pochhammer(&b.mul(&tp(n - r)?), t, len, "b·t^{n-r}");
    fp.den_pochhammer(&ab.mul(&tp(n - r - 1)?), t, len, "ab·t^{n-r-1}");
    fp.num_factor(ab.mul(&tp(2 * n - 2 * r - 1)?), "ab·t^{2n-2r-1}");
    fp.den_factor(ab.mul(&tp(2 * n - 1)?), "ab·t^{2n-1}");
    fp.scale(&a.pow(-r)?);
    fp.scale(&tp(r * (r + 1 - 2 * n))?);
    Ok(fp)
}

/// Symbols for rational `(a, b, q, t)`; at `q = 0` the variable `x`
/// stands for `q` so that `limit_at_zero` gives the `q → 0` value.
fn symbols(a: &Rat, b: &Rat, q: &Rat, t: &Rat) -> (Symbols, bool) {
    let at_zero = q.is_zero();
    let qm = if at_zero { Mono::power_of_x(1) } else { Mono::constant(q.clone()) };
    let s = Symbols::little(Mono::constant(a.clone()), Mono::constant(b.clone()), qm, Mono::constant(t.clone()));
    (s, at_zero)
}

fn settle(fp: FactorProduct, at_zero: bool) -> Result<Rat> {
    if at_zero {
        fp.limit_at_zero()
    } else {
        fp.value()
    }
}

/// `D_q(λ; a, b; t) = P^L_λ(0; q^{-1}a, q^{-1}b)² / N_L(λ; q^{-1}a, q^{-1}b)`.
pub fn generalized_dim_via_little(lambda: &Partition, a: &Rat, b: &Rat, q: &Rat, t: &Rat) -> Result<Rat> {
    if q.is_zero() {
        return Err(Error::DegenerateSpecialization(
            "the little q-Jacobi ratio needs q ≠ 0; use the product form".into(),
        ));
    }
    let (s, _) = symbols(a, b, q, t);
    via_little_product(lambda, &s)?.value()
}

/// `D_q(λ)` from the `v`/`w^±` product; `q = 0` gives `D_0(λ)` as an
/// exact limit.
pub fn generalized_dim_product(lambda: &Partition, a: &Rat, b: &Rat, q: &Rat, t: &Rat) -> Result<Rat> {
    let (s, at_zero) = symbols(a, b, q, t);
    settle(product_form(lambda, &s)?, at_zero)
}

/// `D_q(ω_r)` from the single fundamental-weight product.
pub fn generalized_dim_fundamental(r: usize, n: usize, a: &Rat, b: &Rat, q: &Rat, t: &Rat) -> Result<Rat> {
    let (s, at_zero) = symbols(a, b, q, t);
    settle(fundamental_form(r, n, &s)?, at_zero)
}

/// `D_0(λ)` assembled from the constant terms of `v_i`, `w⁺`, `w⁻` at `q = 0`.
pub fn q0_factors(lambda: &Partition, a: &Rat, b: &Rat, t: &Rat) -> Result<Rat> {
    let (n, lam) = parts(lambda);
    let one = Rat::one();
    let ab = a * b;
    let div = |num: Rat, den: Rat, label: String| -> Result<Rat> {
        if den.is_zero() {
            return Err(Error::VanishingDenominator { label });
        }
        Ok(num / den)
    };
    let a_inv = a.inv().ok_or_else(|| Error::VanishingDenominator { label: "a".into() })?;
    let t_inv = t.inv().ok_or_else(|| Error::VanishingDenominator { label: "t".into() })?;
    let mut value = a_inv.pow(lambda.weight() as i64) * t_inv.pow(2 * lambda.rho_pairing());
    for i in 1..=n {
        let m = lam[i as usize - 1];
        if m == 0 {
            continue;
        }
        let ti = t.pow(n - i);
        let tail = if m == 1 { one.clone() } else { &one - &ab * &ti };
        value *= div(&one - a * &ti, &one - b * &ti, format!("1 - b·t^{}", n - i))? * t_inv.pow(n - i) * tail;
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let (lj, lk) = (lam[j as usize - 1], lam[k as usize - 1]);
            let e = 2 * n - j - k;
            if lj + lk > 0 {
                let shift = if lj + lk == 1 { 0 } else { 1 };
                value *= div(&one - &ab * t.pow(e + shift), &one - &ab * t.pow(e - 1), format!("1 - ab·t^{}", e - 1))?
                    * t;
            }
            if lj > lk {
                let f = k - j;
                value *= div(&one - t.pow(f + 1), &one - t.pow(f), format!("1 - t^{f}"))?;
            }
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn lam(p: &[u32], n: usize) -> Partition {
        Partition::new(p, n).unwrap()
    }

    fn sample() -> (Rat, Rat, Rat, Rat) {
        (rat(2, 3), rat(-3, 7), rat(1, 5), rat(3, 4))
    }

    #[test]
    fn zero_partition() {
        let (a, b, q, t) = sample();
        for n in 1..4 {
            let z = Partition::zero(n);
            assert_eq!(generalized_dim_product(&z, &a, &b, &q, &t).unwrap(), Rat::one());
            assert_eq!(generalized_dim_via_little(&z, &a, &b, &q, &t).unwrap(), Rat::one());
            assert_eq!(generalized_dim_fundamental(0, n, &a, &b, &q, &t).unwrap(), Rat::one());
            assert_eq!(q0_factors(&z, &a, &b, &t).unwrap(), Rat::one());
        }
    }

    #[test]
    fn routes_agree_in_low_rank() {
        let (a, b, q, t) = sample();
        for p in [lam(&[1], 1), lam(&[2], 1), lam(&[1, 0], 2), lam(&[2, 1], 2), lam(&[1, 1, 1], 3)] {
            assert_eq!(
                generalized_dim_product(&p, &a, &b, &q, &t).unwrap(),
                generalized_dim_via_little(&p, &a, &b, &q, &t).unwrap(),
                "{p}"
            );
        }
        for n in 1..4 {
            for r in 0..=n {
                let w = Partition::fundamental(r, n).unwrap();
                assert_eq!(
                    generalized_dim_fundamental(r, n, &a, &b, &q, &t).unwrap(),
                    generalized_dim_product(&w, &a, &b, &q, &t).unwrap()
                );
            }
        }
    }

    #[test]
    fn q_zero_rank_one_example() {
        let (a, b, _, t) = sample();
        let zero = Rat::zero();
        let one = Rat::one();
        let expected = (&one - &a) * (&one - &a * &b) / ((&one - &b) * a.pow(2));
        assert_eq!(generalized_dim_product(&lam(&[2], 1), &a, &b, &zero, &t).unwrap(), expected);
        let expected = (&one - &a) / ((&one - &b) * &a);
        assert_eq!(q0_factors(&lam(&[1], 1), &a, &b, &t).unwrap(), expected);
        let expected = (&one - &a) * (&one - &a * &b) / ((&one - &b) * a.pow(3));
        assert_eq!(q0_factors(&lam(&[3], 1), &a, &b, &t).unwrap(), expected);
    }

    #[test]
    fn q_zero_regularity() {
        let (a, b, _, t) = sample();
        let zero = Rat::zero();
        for p in [lam(&[1, 0], 2), lam(&[2, 1], 2), lam(&[2, 2], 2), lam(&[3, 1, 1], 3)] {
            assert_eq!(
                generalized_dim_product(&p, &a, &b, &zero, &t).unwrap(),
                q0_factors(&p, &a, &b, &t).unwrap()
            );
        }
        assert!(generalized_dim_via_little(&lam(&[1], 1), &a, &b, &zero, &t).is_err());
    }
}
