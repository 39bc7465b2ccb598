//! Exact polynomial arithmetic: univariate over the integers, bivariate in
//! (x,z), Laurent in s with z.

mod bipoly;
mod factor;
mod gcd;
mod laurent;
mod square;
pub mod text;

pub use bipoly::BiPoly;
pub use factor::{factor_integers, poly_is_irreducible, Factorization, FACTOR_DEGREE_CAP};
pub use gcd::{gcd_poly, squarefree_decomposition, squarefree_part};
pub use laurent::{laurent_to_x, LaurentPoly};
pub use square::is_perfect_square;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Invariant: the coefficient vector has no trailing zero (zero = empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> IntPoly {
        IntPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// The variable itself.
    pub fn x() -> IntPoly {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, exp: usize) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    /// Coefficients in ascending exponent order; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// self / content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Multiply every exponent's coefficient by an integer.
    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Reverse the coefficient sequence (t -> 1/t times t^deg).
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::from_coeffs(c)
    }

    /// True iff the coefficient sequence is palindromic up to an overall sign.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        let r = self.reversed();
        r == *self || r == -self.clone()
    }

    /// Exact division over the integers.
    pub fn divide_exact(&self, b: &IntPoly) -> Result<IntPoly> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let ca = self.content();
        let cb = b.content();
        // content of the quotient must be integral
        let (cq, crem) = ca.div_rem(&cb);
        if !crem.is_zero() {
            return Err(Error::NotDivisible);
        }
        let pa = self.primitive_part();
        let pb = b.primitive_part();
        // Gauss: if pb | pa over the rationals the quotient is integral, so
        // long division with exact leading-coefficient division suffices.
        let mut rem = pa;
        let db = pb.degree().unwrap();
        let lb = pb.leading();
        let mut q = vec![BigInt::zero(); rem.degree().unwrap().saturating_sub(db) + 1];
        while !rem.is_zero() && rem.degree().unwrap() >= db {
            let dr = rem.degree().unwrap();
            let (qc, qrem) = rem.leading().div_rem(&lb);
            if !qrem.is_zero() {
                return Err(Error::NotDivisible);
            }
            q[dr - db] = qc.clone();
            rem = &rem - &pb.mul_shifted(&qc, dr - db);
        }
        if !rem.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(q).scale(&cq))
    }

    /// self * c * t^shift
    fn mul_shifted(&self, c: &BigInt, shift: usize) -> IntPoly {
        if c.is_zero() || self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + shift];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + shift] = a * c;
        }
        IntPoly::from_coeffs(out)
    }

    /// Pseudo-remainder: lb^(da-db+1) * a = q*b + r with deg r < deg b.
    pub(crate) fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero");
        let lb = b.leading();
        let mut rem = self.clone();
        let mut steps = self.degree().map_or(0, |da| da.saturating_sub(db) + 1);
        while !rem.is_zero() && rem.degree().unwrap() >= db {
            let dr = rem.degree().unwrap();
            let lr = rem.leading();
            rem = &rem.scale(&lb) - &b.mul_shifted(&lr, dr - db);
            steps -= 1;
        }
        // keep the classical normalization lb^(da-db+1) * a mod b
        for _ in 0..steps {
            rem = rem.scale(&lb);
        }
        rem
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", text::format_poly(self, "t"))
    }
}
