//! Laurent polynomials in s with ordinary powers of z, and the conversion to
//! (x, z) through the basis p_k(x) = s^k + s^-k.

use super::{BiPoly, IntPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Terms keyed by (s-exponent in Z, z-exponent >= 0); no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, u32), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, 0, BigInt::one())
    }

    pub fn constant(c: i64) -> LaurentPoly {
        LaurentPoly::monomial(0, 0, BigInt::from(c))
    }

    /// s^k for any integer k (negative allowed).
    pub fn s_power(k: i32) -> LaurentPoly {
        LaurentPoly::monomial(k, 0, BigInt::one())
    }

    pub fn z() -> LaurentPoly {
        LaurentPoly::monomial(0, 1, BigInt::one())
    }

    pub fn monomial(s_exp: i32, z_exp: u32, c: BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_term(s_exp, z_exp, c);
        out
    }

    /// Embed an IntPoly in z.
    pub fn from_z_poly(f: &IntPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (j, c) in f.coeffs().iter().enumerate() {
            out.add_term(0, j as u32, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, s_exp: i32, z_exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((s_exp, z_exp)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(s_exp, z_exp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s_exp: i32, z_exp: u32) -> BigInt {
        self.terms
            .get(&(s_exp, z_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Invariance under s -> s^-1.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(k, j), c)| self.coeff(-k, j) == *c)
    }

    /// Substitute s -> s^-1.
    pub fn bar(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(k, j), c) in &self.terms {
            out.add_term(-k, j, c.clone());
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(k, j), c) in &rhs.terms {
            out.add_term(k, j, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(k, j), c) in &rhs.terms {
            out.add_term(k, j, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(k1, j1), c1) in &self.terms {
            for (&(k2, j2), c2) in &rhs.terms {
                out.add_term(k1 + k2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(k, j), c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = !mag.is_one() || (k == 0 && j == 0);
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{k}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{j}")?,
            }
        }
        Ok(())
    }
}

/// Rewrite a symmetric Laurent polynomial in the basis p_k(x) = s^k + s^-k
/// (p_0 = 2, p_1 = x, p_k = x*p_{k-1} - p_{k-2}), yielding a polynomial in
/// (x, z) under x = s + s^-1.
pub fn laurent_to_x(f: &LaurentPoly) -> Result<BiPoly> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let max_s = f.terms.keys().map(|&(k, _)| k.unsigned_abs()).max().unwrap_or(0);
    // p_k(x) as IntPoly in x
    let mut p: Vec<IntPoly> = Vec::with_capacity(max_s as usize + 1);
    p.push(IntPoly::constant(2));
    if max_s >= 1 {
        p.push(IntPoly::x());
    }
    for k in 2..=max_s as usize {
        p.push(&(&IntPoly::x() * &p[k - 1]) - &p[k - 2]);
    }
    let mut out = BiPoly::zero();
    for (&(k, j), c) in &f.terms {
        if k < 0 {
            continue; // paired with the k > 0 mirror term
        }
        if k == 0 {
            // the s^0 term appears once and maps to the constant (in x) c
            out.add_term(0, j, c.clone());
            continue;
        }
        // c*(s^k + s^-k) maps to c * p_k(x)
        for (i, pc) in p[k as usize].coeffs().iter().enumerate() {
            out.add_term(i as u32, j, c * pc);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pk_example(k: i32) -> LaurentPoly {
        &LaurentPoly::s_power(k) + &LaurentPoly::s_power(-k)
    }

    #[test]
    fn units_and_symmetry() {
        let unit = &LaurentPoly::s_power(1) * &LaurentPoly::s_power(-1);
        assert_eq!(unit, LaurentPoly::one());
        assert!(pk_example(3).is_symmetric());
        assert!(!LaurentPoly::s_power(2).is_symmetric());
        assert_eq!(LaurentPoly::s_power(2).bar(), LaurentPoly::s_power(-2));
    }

    #[test]
    fn conversion_examples() {
        // s^2 + s^-2 -> x^2 - 2
        let f = laurent_to_x(&pk_example(2)).unwrap();
        assert_eq!(f.eval_z(&BigInt::zero()), IntPoly::from_i64(&[-2, 0, 1]));
        // s^4 + s^-4 -> x^4 - 4x^2 + 2
        let g = laurent_to_x(&pk_example(4)).unwrap();
        assert_eq!(g.eval_z(&BigInt::zero()), IntPoly::from_i64(&[2, 0, -4, 0, 1]));
        // constants pass through
        assert_eq!(laurent_to_x(&LaurentPoly::one()).unwrap(), BiPoly::one());
        assert_eq!(laurent_to_x(&LaurentPoly::s_power(1)), Err(Error::NotSymmetric));
    }

    #[test]
    fn substitution_round_trip() {
        // substituting specific integer s into both sides agrees
        let f = &(&pk_example(3) * &LaurentPoly::z()) + &LaurentPoly::constant(5);
        let g = laurent_to_x(&f).unwrap();
        for s in [2i64, 3, 5] {
            // x = s + s^-1 is rational, so compare both sides scaled by s^3
            // (the x-degree of g): Laurent side is 7*(s^3 + s^-3) + 5.
            let x_num = BigInt::from(s * s + 1); // x = (s^2+1)/s
            let lhs = (BigInt::from(s).pow(6) + 1) * 7 + BigInt::from(s).pow(3) * 5;
            let mut rhs = BigInt::zero();
            for ((i, j), c) in g.terms_graded_lex() {
                rhs += c * x_num.pow(i) * BigInt::from(s).pow(3 - i) * BigInt::from(7).pow(j);
            }
            assert_eq!(lhs, rhs);
        }
    }
}
