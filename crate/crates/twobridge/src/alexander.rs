//! Alexander polynomials of two-bridge knots via the Minkus alternating sum,
//! plus the determinant, divisibility, and irreducibility criteria.

use crate::error::Result;
use crate::knot::TwoBridgeKnot;
use crate::poly::{factor_integers, IntPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Canonicalized Alexander polynomial: lowest exponent 0, positive leading
/// coefficient. For knots, |value(1)| = 1, |value(-1)| = p, and the
/// coefficient sequence is palindromic up to sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexPoly(IntPoly);

impl AlexPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }
}

impl std::fmt::Display for AlexPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Minkus alternating sum: with the odd orbit representative q* of the knot,
/// eps_i = (-1)^floor(i q*/p), sigma_k = eps_1 + .. + eps_k, and
/// Delta = sum_k (-1)^k t^(sigma_k), then canonicalize. Trivial knot -> 1.
pub fn alexander_poly(k: &TwoBridgeKnot) -> AlexPoly {
    if k.is_trivial() {
        return AlexPoly(IntPoly::one());
    }
    let p = k.p();
    let qs = k.odd_representative();
    // track exponents sigma_k, which may go negative before normalization
    let mut terms: Vec<(i64, i64)> = Vec::with_capacity(p as usize); // (exponent, coefficient)
    let mut sigma = 0i64;
    terms.push((0, 1));
    for i in 1..p {
        let eps = if (i * qs / p) % 2 == 0 { 1 } else { -1 };
        sigma += eps;
        terms.push((sigma, if i % 2 == 0 { 1 } else { -1 }));
    }
    let min_exp = terms.iter().map(|&(e, _)| e).min().unwrap();
    let max_exp = terms.iter().map(|&(e, _)| e).max().unwrap();
    let mut coeffs = vec![BigInt::zero(); (max_exp - min_exp + 1) as usize];
    for (e, c) in terms {
        coeffs[(e - min_exp) as usize] += c;
    }
    let mut f = IntPoly::from_coeffs(coeffs);
    // canonicalize: strip any zero valuation, make the leading coefficient positive
    let shift = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        f = IntPoly::from_coeffs(f.coeffs()[shift..].to_vec());
    }
    if f.leading().is_negative() {
        f = -f;
    }
    AlexPoly(f)
}

/// |Delta(-1)|; always equals p for a two-bridge knot (asserted).
pub fn determinant(k: &TwoBridgeKnot) -> BigInt {
    let d = alexander_poly(k).0.eval(&BigInt::from(-1)).abs();
    assert_eq!(
        d,
        BigInt::from(k.p()),
        "Alexander determinant does not match p for b({},{})",
        k.p(),
        k.q()
    );
    d
}

/// True iff the target's Alexander polynomial divides the source's exactly.
pub fn divides_alexander(source: &TwoBridgeKnot, target: &TwoBridgeKnot) -> bool {
    alexander_poly(source)
        .0
        .divide_exact(&alexander_poly(target).0)
        .is_ok()
}

/// True iff the Alexander polynomial is irreducible over the integers.
pub fn alexander_irreducible(k: &TwoBridgeKnot) -> Result<bool> {
    let f = alexander_poly(k).0;
    if f.is_one() {
        return Ok(false);
    }
    Ok(factor_integers(&f)?.is_irreducible_poly())
}

pub fn alexander_degree(k: &TwoBridgeKnot) -> usize {
    alexander_poly(k).degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::knot::enumerate_knots;

    fn knot(p: i64, q: i64) -> TwoBridgeKnot {
        TwoBridgeKnot::new(p, q).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(alexander_poly(&knot(3, 1)).0, IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(alexander_poly(&knot(15, 4)).0, IntPoly::from_i64(&[4, -7, 4]));
        assert_eq!(alexander_poly(&knot(5, 2)).0, IntPoly::from_i64(&[1, -3, 1]));
        assert_eq!(alexander_poly(&TwoBridgeKnot::trivial()).0, IntPoly::one());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&knot(3, 1)), BigInt::from(3));
        assert_eq!(determinant(&knot(45, 14)), BigInt::from(45));
        assert_eq!(determinant(&knot(5, 2)), BigInt::from(5));
    }

    #[test]
    fn invariants_up_to_199() {
        for k in enumerate_knots(199) {
            let d = alexander_poly(&k).0;
            assert!(d.eval(&BigInt::one()).abs().is_one(), "Delta(1) != +-1 for {k:?}");
            assert_eq!(d.eval(&BigInt::from(-1)).abs(), BigInt::from(k.p()));
            assert!(d.is_palindromic_up_to_sign(), "not palindromic: {k:?}");
            // orbit invariance
            for q in k.orbit() {
                assert_eq!(alexander_poly(&knot(k.p(), q)).0, d);
            }
        }
    }

    #[test]
    fn double_twist_formula() {
        // J(2k,2k) = b(4k^2-1, 2k): Delta = k^2 t^2 - (2k^2-1) t + k^2
        for k in 1..=10i64 {
            let f = alexander_poly(&knot(4 * k * k - 1, 2 * k)).0;
            assert_eq!(f, IntPoly::from_i64(&[k * k, -(2 * k * k - 1), k * k]));
        }
    }

    #[test]
    fn torus_formula() {
        // b(p,1): Delta = (t^p+1)/(t+1)
        for p in (3..=99i64).step_by(2) {
            let mut c = vec![BigInt::zero(); p as usize + 1];
            c[0] = BigInt::one();
            c[p as usize] = BigInt::one();
            let expected = IntPoly::from_coeffs(c)
                .divide_exact(&IntPoly::from_i64(&[1, 1]))
                .unwrap();
            assert_eq!(alexander_poly(&knot(p, 1)).0, expected);
        }
    }

    #[test]
    fn divisibility_examples() {
        assert!(divides_alexander(&knot(45, 14), &knot(9, 2)));
        assert!(divides_alexander(&knot(45, 14), &knot(5, 1)));
        assert!(!divides_alexander(&knot(15, 4), &knot(3, 1)));
        assert!(divides_alexander(&knot(51, 16), &knot(3, 1)));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(alexander_irreducible(&knot(15, 4)).unwrap());
        assert!(!alexander_irreducible(&knot(9, 1)).unwrap());
        assert!(alexander_irreducible(&knot(5, 2)).unwrap());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(alexander_degree(&knot(5, 2)), 2);
        assert_eq!(alexander_degree(&knot(7, 3)), 2);
        assert_eq!(alexander_poly(&knot(7, 3)).0, IntPoly::from_i64(&[2, -3, 2]));
        assert_eq!(alexander_degree(&knot(45, 14)), 6);
    }
}
