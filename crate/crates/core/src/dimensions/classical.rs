//! Weyl and q-Weyl dimensions, the complex, real and quantum Grassmannian
//! dimensions, and their `q → 1` limits.

use super::check_rank;
use super::generalized::{product_form, via_little_product};
use crate::closedforms::{FactorProduct, Mono, Symbols};
use crate::combinatorics::{q_binomial, Partition};
use crate::exactalg::Rat;
use crate::{Error, Result};

fn check_dominant(mu: &[i64]) -> Result<()> {
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!("{mu:?} is not dominant")));
    }
    Ok(())
}

/// `Π_{i<j} (μ_i − μ_j + j − i) / (j − i)`.
pub fn weyl_dim(mu: &[i64]) -> Result<Rat> {
    check_dominant(mu)?;
    let mut value = Rat::one();
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let gap = (j - i) as i64;
            value *= Rat::new(mu[i] - mu[j] + gap, gap);
        }
    }
    Ok(value)
}

/// `λ^♮ = (λ_1, …, λ_n, 0^{d-2n}, −λ_n, …, −λ_1)`.
pub fn natural_embedding(lambda: &Partition, d: usize) -> Result<Vec<i64>> {
    let n = lambda.context_n();
    check_rank(n, d)?;
    let head: Vec<i64> = lambda.padded().iter().map(|&p| p as i64).collect();
    let mut out = head.clone();
    out.extend(std::iter::repeat_n(0, d - 2 * n));
    out.extend(head.iter().rev().map(|p| -p));
    Ok(out)
}

/// The staircase product for `Dim V_λ` on the complex Grassmannian.
pub fn complex_dim(lambda: &Partition, d: usize) -> Result<Rat> {
    let n = lambda.context_n();
    check_rank(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let lam: Vec<i64> = lambda.padded().iter().map(|&p| p as i64).collect();
    let rho = |i: i64| n - i;
    let e = d - 2 * n + 1;
    let mut value = Rat::one();
    for i in 1..=n {
        let (l, r) = (lam[i as usize - 1], rho(i));
        value *= Rat::new(e + 2 * (l + r), e + 2 * r);
        for j in 1..=d - 2 * n {
            value *= Rat::new(j + l + r, j + r).pow(2);
        }
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let (lj, lk, rj, rk) = (lam[j as usize - 1], lam[k as usize - 1], rho(j), rho(k));
            value *= Rat::new(e + lj + lk + rj + rk, e + rj + rk).pow(2);
            value *= Rat::new(lj - lk + rj - rk, rj - rk).pow(2);
        }
    }
    Ok(value)
}

/// `D_{q²}(λ; q^{d-2n+1}, q; q)` with `x = q`, as a factor product.
pub fn real_symbols(n: usize, d: usize) -> Symbols {
    let e = d as i64 - 2 * n as i64 + 1;
    Symbols::little(Mono::power_of_x(e), Mono::power_of_x(1), Mono::power_of_x(2), Mono::power_of_x(1))
}

/// `D_{q²}(λ; q^{2(d-2n+1)}, q²; q²)` with `x = q`.
pub fn quantum_symbols(n: usize, d: usize) -> Symbols {
    let e = d as i64 - 2 * n as i64 + 1;
    Symbols::little(Mono::power_of_x(2 * e), Mono::power_of_x(2), Mono::power_of_x(2), Mono::power_of_x(2))
}

/// `Dim V_λ` on the real Grassmannian: the `q → 1` limit of
/// `D_{q²}(λ; q^{d-2n+1}, q; q)`, taken factor by factor on the product form.
pub fn real_dim(lambda: &Partition, d: usize) -> Result<Rat> {
    let n = lambda.context_n();
    check_rank(n, d)?;
    product_form(lambda, &real_symbols(n, d))?.limit_at_one()
}

/// The same limit taken on the little q-Jacobi ratio.
pub fn real_dim_via_little(lambda: &Partition, d: usize) -> Result<Rat> {
    let n = lambda.context_n();
    check_rank(n, d)?;
    via_little_product(lambda, &real_symbols(n, d))?.limit_at_one()
}

/// The closed product for the quantum dimension `Dim_q V_λ^q`, in `x = q`.
pub fn quantum_product(lambda: &Partition, d: usize) -> Result<FactorProduct> {
    let n = lambda.context_n();
    check_rank(n, d)?;
    let (n, d) = (n as i64, d as i64);
    let lam: Vec<i64> = lambda.padded().iter().map(|&p| p as i64).collect();
    let rho = |i: i64| n - i;
    let e = d - 2 * n + 1;
    let x = Mono::power_of_x;
    let step = x(2);
    let mut fp = FactorProduct::one();
    fp.scale(&x(2 * (2 * n - d - 1) * lambda.weight() as i64 - 4 * lambda.rho_pairing()));
    for i in 1..=n {
        let (l, r) = (lam[i as usize - 1], rho(i));
        let len = (d - 2 * n) as u32;
        for _ in 0..2 {
            fp.num_pochhammer(&x(2 * (1 + l + r)), &step, len, &format!("q^{}", 2 * (1 + l + r)));
            fp.den_pochhammer(&x(2 * (1 + r)), &step, len, &format!("q^{}", 2 * (1 + r)));
        }
        fp.num_factor(x(2 * (e + 2 * (l + r))), format!("q^{}", 2 * (e + 2 * (l + r))));
        fp.den_factor(x(2 * (e + 2 * r)), format!("q^{}", 2 * (e + 2 * r)));
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let (lj, lk, rj, rk) = (lam[j as usize - 1], lam[k as usize - 1], rho(j), rho(k));
            for _ in 0..2 {
                fp.num_factor(x(2 * (e + lj + lk + rj + rk)), "sum");
                fp.den_factor(x(2 * (e + rj + rk)), "sum");
                fp.num_factor(x(2 * (lj - lk + rj - rk)), "difference");
                fp.den_factor(x(2 * (rj - rk)), "difference");
            }
        }
    }
    Ok(fp)
}

/// `Dim_q V_λ^q` at a rational `q`.
pub fn quantum_dim(lambda: &Partition, d: usize, q: &Rat) -> Result<Rat> {
    quantum_product(lambda, d)?.eval(q)
}

/// `D_{q²}(λ; q^{2(d-2n+1)}, q²; q²)` from the little q-Jacobi ratio.
pub fn quantum_dim_via_little(lambda: &Partition, d: usize, q: &Rat) -> Result<Rat> {
    let n = lambda.context_n();
    check_rank(n, d)?;
    via_little_product(lambda, &quantum_symbols(n, d))?.eval(q)
}

/// `q^{2r(d-r)} (d choose r)²_{q^{-2}} − q^{2(r-1)(d-r+1)} (d choose r−1)²_{q^{-2}}`.
pub fn quantum_fundamental(r: usize, d: usize, q: &Rat) -> Result<Rat> {
    let s = q
        .checked_pow(-2)
        .ok_or_else(|| Error::VanishingDenominator { label: "q".into() })?;
    let (r, d) = (r as i64, d as i64);
    let term = |k: i64| -> Result<Rat> {
        if k < 0 {
            return Ok(Rat::zero());
        }
        Ok(q.pow(2 * k * (d - k)) * q_binomial(d as u32, k as u32, &s)?.pow(2))
    };
    Ok(term(r)? - term(r - 1)?)
}

/// `q^{-2⟨δ,μ⟩} Π_{i<j} (1 − q^{2(μ_i−μ_j+j−i)}) / (1 − q^{2(j−i)})` in `x = q`.
pub fn q_weyl_product(mu: &[i64]) -> Result<FactorProduct> {
    check_dominant(mu)?;
    let d = mu.len() as i64;
    let pairing: i64 = mu.iter().enumerate().map(|(i, m)| (d - 1 - 2 * i as i64) * m).sum();
    let mut fp = FactorProduct::one();
    fp.scale(&Mono::power_of_x(-pairing));
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let gap = (j - i) as i64;
            fp.num_factor(Mono::power_of_x(2 * (mu[i] - mu[j] + gap)), format!("({i},{j})"));
            fp.den_factor(Mono::power_of_x(2 * gap), format!("({i},{j})"));
        }
    }
    Ok(fp)
}

/// `Dim_q L_μ^q` from the q-Weyl product at a rational `q`.
pub fn q_weyl_dim(mu: &[i64], q: &Rat) -> Result<Rat> {
    q_weyl_product(mu)?.eval(q)
}

fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let size = m.len();
    let mut det = Rat::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (target, source) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *target -= &f * source;
            }
        }
    }
    det
}

/// `s_μ(x)` as a ratio of alternants. Negative parts are handled by
/// shifting `μ` to a partition and dividing by a power of `Π x_i`.
pub fn schur_alternant(mu: &[i64], x: &[Rat]) -> Result<Rat> {
    check_dominant(mu)?;
    if mu.len() != x.len() {
        return Err(Error::InvalidInput("weight and point lengths differ".into()));
    }
    let d = mu.len();
    let shift = mu.last().map_or(0, |&m| (-m).max(0));
    let alternant = |exps: &dyn Fn(usize) -> i64| -> Rat {
        determinant(
            x.iter()
                .map(|xi| (0..d).map(|j| xi.pow(exps(j))).collect())
                .collect(),
        )
    };
    let num = alternant(&|j| mu[j] + shift + (d - 1 - j) as i64);
    let den = alternant(&|j| (d - 1 - j) as i64);
    if den.is_zero() {
        return Err(Error::VanishingDenominator { label: "Vandermonde determinant".into() });
    }
    let prod: Rat = x.iter().cloned().product();
    let scale = prod
        .checked_pow(-shift)
        .ok_or_else(|| Error::VanishingDenominator { label: "coordinate product".into() })?;
    Ok(num / den * scale)
}

/// `s_μ(q^{2δ})` with `q^{2δ} = (q^{d-1}, q^{d-3}, …, q^{1-d})`.
pub fn q_dim_schur(mu: &[i64], q: &Rat) -> Result<Rat> {
    let d = mu.len() as i64;
    if q.is_zero() {
        return Err(Error::DegenerateSpecialization("q = 0".into()));
    }
    let point: Vec<Rat> = (1..=d).map(|i| q.pow(d + 1 - 2 * i)).collect();
    schur_alternant(mu, &point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn lam(p: &[u32], n: usize) -> Partition {
        Partition::new(p, n).unwrap()
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dim(&[0, 0, 0]).unwrap(), Rat::one());
        assert_eq!(weyl_dim(&[1, 0]).unwrap(), rat(2, 1));
        assert_eq!(weyl_dim(&[2, 1, 0]).unwrap(), rat(8, 1));
        assert!(weyl_dim(&[0, 1]).is_err());
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(natural_embedding(&lam(&[1], 1), 2).unwrap(), vec![1, -1]);
        assert_eq!(natural_embedding(&lam(&[2, 1], 2), 5).unwrap(), vec![2, 1, 0, -1, -2]);
        assert!(natural_embedding(&lam(&[1, 1], 2), 3).is_err());
    }

    #[test]
    fn complex_examples() {
        assert_eq!(complex_dim(&lam(&[1], 1), 2).unwrap(), rat(3, 1));
        assert_eq!(complex_dim(&lam(&[1], 1), 3).unwrap(), rat(8, 1));
        let p = lam(&[2, 1], 2);
        assert_eq!(complex_dim(&p, 5).unwrap(), weyl_dim(&natural_embedding(&p, 5).unwrap()).unwrap());
    }

    #[test]
    fn real_examples() {
        assert_eq!(real_dim(&Partition::zero(1), 3).unwrap(), Rat::one());
        assert_eq!(real_dim(&lam(&[1], 1), 2).unwrap(), rat(2, 1));
        // degree-two harmonics on the sphere S²
        assert_eq!(real_dim(&lam(&[1], 1), 3).unwrap(), rat(5, 1));
        assert_eq!(real_dim_via_little(&lam(&[2, 1], 2), 5).unwrap(), real_dim(&lam(&[2, 1], 2), 5).unwrap());
    }

    #[test]
    fn quantum_examples() {
        let q = rat(1, 2);
        assert_eq!(quantum_dim(&Partition::zero(2), 5, &q).unwrap(), Rat::one());
        let w = lam(&[1], 1);
        assert_eq!(quantum_dim(&w, 2, &q).unwrap(), quantum_fundamental(1, 2, &q).unwrap());
        assert_eq!(quantum_dim(&w, 2, &q).unwrap(), quantum_dim_via_little(&w, 2, &q).unwrap());
        assert_eq!(quantum_product(&w, 2).unwrap().limit_at_one().unwrap(), complex_dim(&w, 2).unwrap());
    }

    #[test]
    fn q_weyl_examples() {
        let q = rat(2, 3);
        assert_eq!(q_weyl_dim(&[0, 0], &q).unwrap(), Rat::one());
        assert_eq!(q_weyl_dim(&[1, 0], &q).unwrap(), q.pow(-1) + &q);
        assert_eq!(q_weyl_dim(&[1, -1], &q).unwrap(), q.pow(-2) + Rat::one() + q.pow(2));
        assert_eq!(q_dim_schur(&[1, -1], &q).unwrap(), q.pow(-2) + Rat::one() + q.pow(2));
        assert_eq!(q_weyl_product(&[2, 1, 0]).unwrap().limit_at_one().unwrap(), rat(8, 1));
    }
}
