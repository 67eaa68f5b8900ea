//! q-shifted factorials, q-integers and q-binomial/multinomial coefficients.

use crate::exactalg::Rat;
use crate::{Error, Result};

/// `(x;q)_j = Π_{s<j} (1 - x q^s)`.
pub fn q_pochhammer(x: &Rat, q: &Rat, j: u32) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..j {
        acc *= Rat::one() - &term;
        term *= q;
    }
    acc
}

/// `[j]_q = (1-q^j)/(1-q)`, with `[j]_1 = j`.
pub fn q_integer(j: u32, q: &Rat) -> Rat {
    let mut acc = Rat::zero();
    let mut pw = Rat::one();
    for _ in 0..j {
        acc += &pw;
        pw *= q;
    }
    acc
}

/// `[m]_q! = [1]_q [2]_q ⋯ [m]_q`.
pub fn q_factorial(m: u32, q: &Rat) -> Rat {
    (1..=m).map(|j| q_integer(j, q)).product()
}

fn nonzero_factorial(m: u32, q: &Rat) -> Result<Rat> {
    let f = q_factorial(m, q);
    if f.is_zero() {
        return Err(Error::DegenerateSpecialization(format!(
            "[{m}]_q! vanishes at q = {q}"
        )));
    }
    Ok(f)
}

/// Gaussian binomial `[m]_q! / ([l]_q! [m-l]_q!)`.
pub fn q_binomial(m: u32, l: u32, q: &Rat) -> Result<Rat> {
    if l > m {
        return Err(Error::InvalidInput(format!("q-binomial ({m} over {l})")));
    }
    let top = nonzero_factorial(m, q)?;
    Ok(top / (q_factorial(l, q) * q_factorial(m - l, q)))
}

/// Like [`q_binomial`] but zero outside `0 ≤ l ≤ m`.
pub fn q_binomial_or_zero(m: i64, l: i64, q: &Rat) -> Result<Rat> {
    if m < 0 || l < 0 || l > m {
        return Ok(Rat::zero());
    }
    q_binomial(m as u32, l as u32, q)
}

/// q-multinomial `[n]_q! / Π_s [l_s]_q!`.
pub fn q_multinomial(n: u32, parts: &[u32], q: &Rat) -> Result<Rat> {
    if parts.iter().map(|&p| p as u64).sum::<u64>() != n as u64 {
        return Err(Error::InvalidInput(format!(
            "q-multinomial parts {parts:?} do not sum to {n}"
        )));
    }
    let top = nonzero_factorial(n, q)?;
    let bottom: Rat = parts.iter().map(|&l| q_factorial(l, q)).product();
    Ok(top / bottom)
}

/// Checks `[m]_q! = q^{m(m-1)/2} (q^{-1};q^{-1})_m / (1-q^{-1})^m` exactly.
pub fn verify_q_factorial_identity(m: u32, q: &Rat) -> bool {
    let Some(qi) = q.inv() else { return false };
    let base = Rat::one() - &qi;
    if base.is_zero() {
        return false;
    }
    let m64 = m as i64;
    let rhs = q.pow(m64 * (m64 - 1) / 2) * q_pochhammer(&qi, &qi, m) / base.pow(m64);
    q_factorial(m, q) == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(&rat(5, 3), &rat(1, 2), 0), Rat::one());
        assert_eq!(q_pochhammer(&Rat::one(), &rat(2, 7), 3), Rat::zero());
        assert_eq!(q_pochhammer(&rat(1, 2), &rat(1, 3), 2), rat(5, 12));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(q_binomial(4, 2, &Rat::one()).unwrap(), rat(6, 1));
        assert_eq!(q_binomial(7, 0, &rat(3, 5)).unwrap(), Rat::one());
        assert_eq!(q_binomial(4, 2, &rat(2, 1)).unwrap(), rat(35, 1));
        assert!(q_binomial(2, 1, &rat(-1, 1)).is_err());
    }

    #[test]
    fn multinomial_examples() {
        let q = rat(3, 7);
        assert_eq!(q_multinomial(2, &[1, 1], &q).unwrap(), Rat::one() + &q);
        assert_eq!(q_multinomial(4, &[4], &q).unwrap(), Rat::one());
        assert_eq!(q_multinomial(3, &[1, 2], &rat(2, 1)).unwrap(), rat(7, 1));
        assert!(q_multinomial(3, &[1, 1], &q).is_err());
    }

    #[test]
    fn factorial_identity_examples() {
        assert!(verify_q_factorial_identity(0, &rat(5, 2)));
        assert!(verify_q_factorial_identity(3, &rat(2, 1)));
        assert_eq!(q_factorial(3, &rat(2, 1)), rat(21, 1));
        assert!(verify_q_factorial_identity(5, &rat(3, 2)));
    }
}
