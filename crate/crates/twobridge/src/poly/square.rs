//! Perfect-square detection for integer polynomials.

use super::IntPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// If f (or -f, when its leading coefficient is negative) is the square of a
/// polynomial over the rationals, return that square root; otherwise None.
/// Any rational square root of an integer polynomial is integral.
pub fn is_perfect_square(f: &IntPoly) -> Option<IntPoly> {
    if f.is_zero() {
        return None;
    }
    let g = if f.leading().is_negative() {
        -f.clone()
    } else {
        f.clone()
    };
    let deg = g.degree().unwrap();
    if deg % 2 != 0 {
        return None;
    }
    let n = deg / 2;
    let lead = g.leading();
    let s = lead.sqrt();
    if &s * &s != lead {
        return None;
    }
    // The candidate root is determined top-down: the x^(n+i) coefficient of
    // h^2 is 2*h_n*h_i plus products of already-known higher coefficients.
    // A rational root of an integral polynomial is integral, so non-exact
    // division means there is no root.
    let two_s = BigInt::from(2) * &s;
    let mut h = vec![BigInt::zero(); n + 1];
    h[n] = s.clone();
    for i in (0..n).rev() {
        let mut acc = g.coeff(n + i);
        for j in (i + 1)..n {
            let k = n + i - j;
            if k < j || k >= n {
                continue;
            }
            if k == j {
                acc -= &h[j] * &h[j];
            } else {
                acc -= BigInt::from(2) * &h[j] * &h[k];
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&acc, &two_s);
        if !r.is_zero() {
            return None;
        }
        h[i] = q;
    }
    let root = IntPoly::from_coeffs(h);
    if (&root * &root) == g {
        Some(root)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_examples() {
        assert_eq!(
            is_perfect_square(&IntPoly::from_i64(&[1, -2, 1])),
            Some(IntPoly::from_i64(&[-1, 1]))
        );
        assert_eq!(is_perfect_square(&IntPoly::from_i64(&[0, 0, 0, 1])), None);
        assert_eq!(is_perfect_square(&IntPoly::from_i64(&[0, 0, 2])), None);
        // negative leading coefficient: -(z-1)^2 counts as a square up to sign
        assert!(is_perfect_square(&IntPoly::from_i64(&[-1, 2, -1])).is_some());
        let h = IntPoly::from_i64(&[3, -5, 0, 7, 2]);
        assert_eq!(is_perfect_square(&(&h * &h)), Some(h));
    }
}
