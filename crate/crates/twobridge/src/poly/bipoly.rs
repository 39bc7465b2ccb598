//! Sparse bivariate polynomials in (x, z) over the integers.

use super::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Terms keyed by (x-exponent, z-exponent); no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::monomial(0, 0, BigInt::one())
    }

    pub fn x() -> BiPoly {
        BiPoly::monomial(1, 0, BigInt::one())
    }

    pub fn z() -> BiPoly {
        BiPoly::monomial(0, 1, BigInt::one())
    }

    pub fn monomial(x_exp: u32, z_exp: u32, c: BigInt) -> BiPoly {
        let mut out = BiPoly::zero();
        out.add_term(x_exp, z_exp, c);
        out
    }

    /// Embed an IntPoly in z (x-degree 0).
    pub fn from_z_poly(f: &IntPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (j, c) in f.coeffs().iter().enumerate() {
            out.add_term(0, j as u32, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, x_exp: u32, z_exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((x_exp, z_exp)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(x_exp, z_exp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_exp: u32, z_exp: u32) -> BigInt {
        self.terms
            .get(&(x_exp, z_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_z(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// The coefficient of x^k as a polynomial in z.
    pub fn coeff_of_x(&self, x_exp: u32) -> IntPoly {
        let deg = self
            .terms
            .keys()
            .filter(|&&(i, _)| i == x_exp)
            .map(|&(_, j)| j)
            .max();
        let Some(deg) = deg else {
            return IntPoly::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            if i == x_exp {
                coeffs[j as usize] = c.clone();
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// True iff every x-exponent is even.
    pub fn is_even_in_x(&self) -> bool {
        self.terms.keys().all(|&(i, _)| i % 2 == 0)
    }

    /// Substitute an integer for x, producing a polynomial in z.
    pub fn eval_x(&self, x: &BigInt) -> IntPoly {
        let deg = self.degree_z().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[j as usize] += c * x.pow(i);
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Substitute an integer for z, producing a polynomial in x.
    pub fn eval_z(&self, z: &BigInt) -> IntPoly {
        let deg = self.degree_x().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[i as usize] += c * z.pow(j);
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &BigInt, z: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i) * z.pow(j))
            .sum()
    }

    /// Terms in graded lexicographic order (total degree descending, then
    /// x-exponent descending) for display and serialization.
    pub fn terms_graded_lex(&self) -> Vec<((u32, u32), BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c.clone())).collect();
        v.sort_by(|((i1, j1), _), ((i2, j2), _)| {
            (i2 + j2, i2).cmp(&(i1 + j1, i1))
        });
        v
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(mut self) -> BiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::fmt::Display for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms_graded_lex() {
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
            let show_coeff = !mag.is_one() || (i == 0 && j == 0);
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arith_and_display() {
        let f = &(&BiPoly::x() * &BiPoly::x()) - &(&BiPoly::z() * &BiPoly::from_z_poly(&IntPoly::from_i64(&[3])));
        assert_eq!(f.coeff(2, 0), BigInt::from(1));
        assert_eq!(f.coeff(0, 1), BigInt::from(-3));
        assert_eq!(f.to_string(), "x^2-3z");
        assert!(f.is_even_in_x());
        assert_eq!(f.eval(&BigInt::from(2), &BigInt::from(1)), BigInt::from(1));
    }

    #[test]
    fn coeff_of_x_slices() {
        // x^4*(z-2) + x^2*z + 7
        let zp = BiPoly::from_z_poly(&IntPoly::from_i64(&[-2, 1]));
        let f = &(&BiPoly::monomial(4, 0, BigInt::one()) * &zp)
            + &(&(&BiPoly::monomial(2, 0, BigInt::one()) * &BiPoly::z()) + &BiPoly::monomial(0, 0, BigInt::from(7)));
        assert_eq!(f.coeff_of_x(4), IntPoly::from_i64(&[-2, 1]));
        assert_eq!(f.coeff_of_x(2), IntPoly::from_i64(&[0, 1]));
        assert_eq!(f.coeff_of_x(0), IntPoly::from_i64(&[7]));
        assert_eq!(f.coeff_of_x(1), IntPoly::zero());
        assert_eq!(f.degree_x(), Some(4));
    }

    #[test]
    fn graded_lex_order() {
        let mut f = BiPoly::zero();
        f.add_term(4, 0, BigInt::one());
        f.add_term(2, 2, BigInt::one());
        f.add_term(0, 4, BigInt::one());
        f.add_term(1, 0, BigInt::one());
        let order: Vec<(u32, u32)> = f.terms_graded_lex().into_iter().map(|(k, _)| k).collect();
        assert_eq!(order, vec![(4, 0), (2, 2), (0, 4), (1, 0)]);
    }
}
