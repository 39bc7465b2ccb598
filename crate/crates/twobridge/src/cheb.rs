//! Chebyshev polynomials of the second kind S_k and SL(2) power formulas.
//!
//! S_0 = 1, S_1 = y, S_k = y*S_{k-1} - S_{k-2}, extended to negative indices
//! by running the recursion backwards (S_{-1} = 0, S_{-2} = -1).

use crate::error::{Error, Result};
use crate::poly::{BiPoly, IntPoly, LaurentPoly};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Minimal commutative-ring interface needed by the symbolic matrix code.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_bigint(c: &BigInt) -> Self;
}

impl Ring for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn from_bigint(c: &BigInt) -> Self {
        IntPoly::from_coeffs(vec![c.clone()])
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn from_bigint(c: &BigInt) -> Self {
        BiPoly::monomial(0, 0, c.clone())
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn from_bigint(c: &BigInt) -> Self {
        LaurentPoly::monomial(0, 0, c.clone())
    }
}

/// 2x2 matrix over a commutative ring; used for SL(2) images.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<T: Ring> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Mat2<T> {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Mat2<T> {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn mul(&self, rhs: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        )
    }

    pub fn sub(&self, rhs: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.sub(&rhs.a),
            self.b.sub(&rhs.b),
            self.c.sub(&rhs.c),
            self.d.sub(&rhs.d),
        )
    }

    pub fn scale(&self, k: &T) -> Mat2<T> {
        Mat2::new(k.mul(&self.a), k.mul(&self.b), k.mul(&self.c), k.mul(&self.d))
    }

    pub fn det(&self) -> T {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn trace(&self) -> T {
        self.a.add(&self.d)
    }

    /// SL(2) inverse [d, -b; -c, a]; valid when det = 1.
    pub fn sl2_inverse(&self) -> Mat2<T> {
        Mat2::new(self.d.clone(), self.b.neg(), self.c.neg(), self.a.clone())
    }
}

/// S_k(y) as an exact integer polynomial, any integer index.
pub fn cheb_s(k: i64) -> IntPoly {
    assert!(k.abs() <= 10_000, "Chebyshev index out of supported range");
    if k == -1 {
        return IntPoly::zero();
    }
    if k < 0 {
        // reverse recursion gives S_{-k} = -S_{k-2}; here -k - 2 >= 0
        return -cheb_s(-k - 2);
    }
    let y = IntPoly::x();
    let (mut prev, mut cur) = (IntPoly::zero(), IntPoly::one()); // S_{-1}, S_0
    for _ in 0..k {
        let next = &(&y * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Closed-form values S_k(2) = k+1 and S_k(-2) = (-1)^k (k+1).
pub fn cheb_eval_special(k: i64, point: i64) -> BigInt {
    match point {
        2 => BigInt::from(k + 1),
        -2 => {
            let v = BigInt::from(k + 1);
            if k.rem_euclid(2) == 0 {
                v
            } else {
                -v
            }
        }
        _ => panic!("cheb_eval_special only supports the points 2 and -2"),
    }
}

/// Pell-type identity S_k^2 + S_{k-1}^2 - y*S_k*S_{k-1} = 1, exactly.
pub fn verify_pell(k: i64) -> bool {
    assert!(k.abs() <= 500);
    let sk = cheb_s(k);
    let sk1 = cheb_s(k - 1);
    let lhs = &(&(&sk * &sk) + &(&sk1 * &sk1)) - &(&IntPoly::x() * &(&sk * &sk1));
    lhs.is_one()
}

/// Floating-point check that 2cos(j*pi/(k+1)), j = 1..k, are roots of S_k.
/// The only numeric computation in the crate.
pub fn verify_root_product(k: i64, tolerance: f64) -> bool {
    assert!((1..=64).contains(&k));
    let f = cheb_s(k);
    let coeffs: Vec<f64> = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().expect("coefficient within f64 range"))
        .collect();
    (1..=k).all(|j| {
        let y = 2.0 * (std::f64::consts::PI * j as f64 / (k as f64 + 1.0)).cos();
        let mut acc = 0.0;
        let mut scale = 0.0;
        for c in coeffs.iter().rev() {
            acc = acc * y + c;
            scale = scale * y.abs() + c.abs();
        }
        // relative residual: the coefficients grow to ~1e18 at k = 64, so an
        // absolute bound is meaningless in f64
        acc.abs() <= tolerance * scale.max(1.0)
    })
}

/// Evaluate an integer polynomial at a ring element.
pub fn eval_in_ring<T: Ring>(f: &IntPoly, at: &T) -> T {
    let mut acc = T::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(at).add(&T::from_bigint(c));
    }
    acc
}

/// M^k for an exact SL(2) matrix via the closed form
/// M^k = S_{k-1}(y) M - S_{k-2}(y) I with y = tr M.
pub fn sl2_power<T: Ring>(m: &Mat2<T>, k: i64) -> Result<Mat2<T>> {
    if m.det() != T::one() {
        return Err(Error::DeterminantNotOne);
    }
    let (base, k) = if k < 0 {
        (m.sl2_inverse(), -k)
    } else {
        (m.clone(), k)
    };
    let y = base.trace();
    let s1 = eval_in_ring(&cheb_s(k - 1), &y);
    let s2 = eval_in_ring(&cheb_s(k - 2), &y);
    Ok(base.scale(&s1).sub(&Mat2::identity().scale(&s2)))
}

/// z - 1 divides S_n(z) iff n = 2 (mod 3) (used by the reducibility checks).
pub fn z_minus_one_divides_s(n: i64) -> bool {
    let z_minus_1 = IntPoly::from_i64(&[-1, 1]);
    cheb_s(n).divide_exact(&z_minus_1).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gcd_poly;

    #[test]
    fn base_cases_and_recursion() {
        assert!(cheb_s(-1).is_zero());
        assert_eq!(cheb_s(-2), IntPoly::from_i64(&[-1]));
        assert_eq!(cheb_s(0), IntPoly::one());
        assert_eq!(cheb_s(1), IntPoly::x());
        assert_eq!(cheb_s(3), IntPoly::from_i64(&[0, -2, 0, 1]));
        for k in -20..=20i64 {
            let lhs = cheb_s(k);
            let rhs = &(&IntPoly::x() * &cheb_s(k - 1)) - &cheb_s(k - 2);
            assert_eq!(lhs, rhs, "recursion fails at k={k}");
        }
    }

    #[test]
    fn special_values() {
        assert_eq!(cheb_eval_special(5, 2), BigInt::from(6));
        assert_eq!(cheb_eval_special(0, -2), BigInt::from(1));
        assert_eq!(cheb_eval_special(3, -2), BigInt::from(-4));
        for k in 0..40i64 {
            assert_eq!(cheb_s(k).eval(&BigInt::from(2)), cheb_eval_special(k, 2));
            assert_eq!(cheb_s(k).eval(&BigInt::from(-2)), cheb_eval_special(k, -2));
        }
    }

    #[test]
    fn pell_identity() {
        for k in [-3, 0, 1, 2, 7, 25, -10] {
            assert!(verify_pell(k), "Pell identity fails at k={k}");
        }
    }

    #[test]
    fn root_product() {
        for k in [1, 2, 5, 12, 33, 64] {
            assert!(verify_root_product(k, 1e-9));
        }
    }

    #[test]
    fn coprime_and_squarefree() {
        for k in 1..=100i64 {
            assert!(gcd_poly(&cheb_s(k), &cheb_s(k - 1)).is_one());
        }
        for k in 1..=100i64 {
            let f = cheb_s(k);
            assert!(gcd_poly(&f, &f.derivative()).is_one(), "S_{k} not squarefree");
        }
    }

    #[test]
    fn powers_match_repeated_multiplication() {
        // companion-style SL2 matrix [[0,-1],[1,y]]
        let m = Mat2::new(
            IntPoly::zero(),
            IntPoly::from_i64(&[-1]),
            IntPoly::one(),
            IntPoly::x(),
        );
        assert!(m.det().is_one());
        let mut acc = Mat2::identity();
        for k in 0..=12i64 {
            assert_eq!(sl2_power(&m, k).unwrap(), acc, "power {k}");
            acc = acc.mul(&m);
        }
        for k in 0..=12i64 {
            let fwd = sl2_power(&m, k).unwrap();
            let bwd = sl2_power(&m, -k).unwrap();
            assert_eq!(fwd.mul(&bwd), Mat2::identity());
        }
    }

    #[test]
    fn unipotent_power() {
        let m = Mat2::new(
            IntPoly::one(),
            IntPoly::one(),
            IntPoly::zero(),
            IntPoly::one(),
        );
        let p5 = sl2_power(&m, 5).unwrap();
        assert_eq!(p5.b, IntPoly::from_i64(&[5]));
        assert_eq!(p5.a, IntPoly::one());
    }

    #[test]
    fn determinant_guard() {
        let m = Mat2::new(IntPoly::x(), IntPoly::zero(), IntPoly::zero(), IntPoly::x());
        assert_eq!(sl2_power(&m, 3), Err(Error::DeterminantNotOne));
    }

    #[test]
    fn z_minus_one_pattern() {
        for n in 0..=300i64 {
            assert_eq!(z_minus_one_divides_s(n), n % 3 == 2, "pattern fails at n={n}");
        }
    }
}
