//! Products of factors `(1 − c·x^e)` with a monomial prefactor.
//!
//! Every closed form in the crate is assembled in this shape before it is
//! multiplied out. With all exponents zero it is an ordinary rational
//! product; with `x` standing for `q` (or a root of it) the same structure
//! supports exact limits at `x → 0` and `x → 1`, factor by factor.

use std::fmt;

use crate::exactalg::Rat;
use crate::{Error, Result};

/// `coeff · x^exp`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mono {
    pub coeff: Rat,
    pub exp: i64,
}

impl Mono {
    pub fn new(coeff: Rat, exp: i64) -> Mono {
        Mono { coeff, exp }
    }

    /// A rational constant.
    pub fn constant(coeff: Rat) -> Mono {
        Mono { coeff, exp: 0 }
    }

    pub fn one() -> Mono {
        Mono::constant(Rat::one())
    }

    /// `x^exp`.
    pub fn power_of_x(exp: i64) -> Mono {
        Mono { coeff: Rat::one(), exp }
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono { coeff: &self.coeff * &other.coeff, exp: self.exp + other.exp }
    }

    pub fn neg(&self) -> Mono {
        Mono { coeff: -&self.coeff, exp: self.exp }
    }

    pub fn pow(&self, k: i64) -> Result<Mono> {
        let coeff = self.coeff.checked_pow(k).ok_or_else(|| Error::VanishingDenominator {
            label: "zero raised to a negative power".into(),
        })?;
        Ok(Mono { coeff, exp: self.exp * k })
    }

    pub fn inv(&self) -> Result<Mono> {
        self.pow(-1)
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let xp = x.checked_pow(self.exp).ok_or_else(|| Error::VanishingDenominator {
            label: "x = 0 in a negative power".into(),
        })?;
        Ok(&self.coeff * xp)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            0 => write!(f, "{}", self.coeff),
            e => write!(f, "{}·x^{}", self.coeff, e),
        }
    }
}

/// The factor `1 − mono`, tagged with a human-readable label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub mono: Mono,
    pub label: String,
}

/// `scalar · Π num / Π den`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorProduct {
    pub scalar: Mono,
    pub num: Vec<Factor>,
    pub den: Vec<Factor>,
}

impl Default for FactorProduct {
    fn default() -> Self {
        FactorProduct::one()
    }
}

impl FactorProduct {
    pub fn one() -> FactorProduct {
        FactorProduct { scalar: Mono::one(), num: Vec::new(), den: Vec::new() }
    }

    pub fn scale(&mut self, m: &Mono) {
        self.scalar = self.scalar.mul(m);
    }

    pub fn times(&mut self, other: &FactorProduct) {
        self.scalar = self.scalar.mul(&other.scalar);
        self.num.extend(other.num.iter().cloned());
        self.den.extend(other.den.iter().cloned());
    }

    pub fn divide_by(&mut self, other: &FactorProduct) -> Result<()> {
        self.scalar = self.scalar.mul(&other.scalar.inv()?);
        self.num.extend(other.den.iter().cloned());
        self.den.extend(other.num.iter().cloned());
        Ok(())
    }

    pub fn squared(&self) -> FactorProduct {
        let mut out = self.clone();
        out.times(self);
        out
    }

    /// Multiplies by `1 − m`.
    pub fn num_factor(&mut self, m: Mono, label: impl Into<String>) {
        self.num.push(Factor { mono: m, label: label.into() });
    }

    /// Divides by `1 − m`.
    pub fn den_factor(&mut self, m: Mono, label: impl Into<String>) {
        self.den.push(Factor { mono: m, label: label.into() });
    }

    /// Multiplies by `(A; B)_len = Π_{s<len} (1 − A B^s)`.
    pub fn num_pochhammer(&mut self, base_arg: &Mono, step: &Mono, len: u32, label: &str) {
        let mut m = base_arg.clone();
        for s in 0..len {
            self.num_factor(m.clone(), format!("({label})_{len}[{s}]"));
            m = m.mul(step);
        }
    }

    /// Divides by `(A; B)_len`.
    pub fn den_pochhammer(&mut self, base_arg: &Mono, step: &Mono, len: u32, label: &str) {
        let mut m = base_arg.clone();
        for s in 0..len {
            self.den_factor(m.clone(), format!("({label})_{len}[{s}]"));
            m = m.mul(step);
        }
    }

    /// Exact value at `x`, reporting the first vanishing denominator factor.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let one = Rat::one();
        let mut den = Rat::one();
        for f in &self.den {
            let v = &one - f.mono.eval(x)?;
            if v.is_zero() {
                return Err(Error::VanishingDenominator { label: f.label.clone() });
            }
            den *= v;
        }
        let mut num = self.scalar.eval(x)?;
        for f in &self.num {
            num *= &one - f.mono.eval(x)?;
        }
        Ok(num / den)
    }

    /// Value when every monomial is a constant (all exponents zero).
    pub fn value(&self) -> Result<Rat> {
        self.eval(&Rat::one())
    }

    /// Cancels factors that occur identically in numerator and denominator.
    pub fn cancelled(&self) -> FactorProduct {
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for f in &self.den {
            match num.iter().position(|g| g.mono == f.mono) {
                Some(i) => {
                    num.swap_remove(i);
                }
                None => den.push(f.clone()),
            }
        }
        FactorProduct { scalar: self.scalar.clone(), num, den }
    }

    /// Exact `lim_{x→0}`, from the leading term of each factor.
    pub fn limit_at_zero(&self) -> Result<Rat> {
        let p = self.cancelled();
        let one = Rat::one();
        let lead = |f: &Factor| -> Result<(Rat, i64)> {
            match f.mono.exp {
                e if e > 0 => Ok((one.clone(), 0)),
                0 => {
                    let v = &one - &f.mono.coeff;
                    if v.is_zero() {
                        Err(Error::VanishingDenominator { label: f.label.clone() })
                    } else {
                        Ok((v, 0))
                    }
                }
                e => Ok((-&f.mono.coeff, e)),
            }
        };
        let mut value = p.scalar.coeff.clone();
        let mut order = p.scalar.exp;
        for f in &p.num {
            let (c, e) = match lead(f) {
                Ok(v) => v,
                // an identically vanishing numerator factor
                Err(_) => return Ok(Rat::zero()),
            };
            value *= c;
            order += e;
        }
        for f in &p.den {
            let (c, e) = lead(f)?;
            value /= c;
            order -= e;
        }
        match order {
            0 => Ok(value),
            o if o > 0 => Ok(Rat::zero()),
            o => Err(Error::SingularLimit(format!("pole of order {} at x = 0", -o))),
        }
    }

    /// Exact `lim_{x→1}`: factors `(1 − x^s)` are matched up between
    /// numerator and denominator and contribute `s` each; other factors
    /// contribute their value at `x = 1`.
    pub fn limit_at_one(&self) -> Result<Rat> {
        let p = self.cancelled();
        let one = Rat::one();
        let mut value = p.scalar.coeff.clone();
        let mut order: i64 = 0;
        for (f, is_num) in p.num.iter().map(|f| (f, true)).chain(p.den.iter().map(|f| (f, false))) {
            let contribution = if f.mono.coeff == one {
                if f.mono.exp == 0 {
                    if is_num {
                        return Ok(Rat::zero());
                    }
                    return Err(Error::VanishingDenominator { label: f.label.clone() });
                }
                order += if is_num { 1 } else { -1 };
                Rat::from_int(f.mono.exp)
            } else {
                &one - &f.mono.coeff
            };
            if is_num {
                value *= contribution;
            } else {
                value /= contribution;
            }
        }
        match order {
            0 => Ok(value),
            o if o > 0 => Ok(Rat::zero()),
            o => Err(Error::SingularLimit(format!("pole of order {} at x = 1", -o))),
        }
    }
}
