//! Primitive polynomial gcd via the subresultant remainder sequence.

use super::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Primitive gcd with positive leading coefficient. gcd(0,0) = 0.
pub fn gcd_poly(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    if g.is_zero() {
        return make_positive(f);
    }
    // subresultant PRS on the primitive inputs
    let mut h = BigInt::one();
    let mut s = BigInt::one();
    loop {
        let delta = f.degree().unwrap() - g.degree().unwrap();
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            return make_positive(g.primitive_part());
        }
        if r.degree() == Some(0) {
            return IntPoly::one();
        }
        let divisor = &s * pow(&h, delta as u32);
        f = g;
        g = IntPoly::from_coeffs(
            r.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!((c % &divisor).is_zero(), "subresultant division not exact");
                    c / &divisor
                })
                .collect(),
        );
        s = f.leading();
        h = if delta == 0 {
            h
        } else {
            // h = s^delta / h^(delta-1)
            pow(&s, delta as u32) / pow(&h, delta as u32 - 1)
        };
    }
}

fn pow(b: &BigInt, e: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn make_positive(f: IntPoly) -> IntPoly {
    if f.leading().is_negative() {
        -f
    } else {
        f
    }
}

/// Squarefree part: f / gcd(f, f').
pub fn squarefree_part(f: &IntPoly) -> IntPoly {
    let g = gcd_poly(f, &f.derivative());
    f.primitive_part().divide_exact(&g).expect("gcd divides f")
}

/// Yun's squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: returns [(g1,1), (g2,2), ...] with f = prod gi^i and
/// the gi squarefree, pairwise coprime (constant gi omitted).
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let mut a = gcd_poly(f, &df);
    let mut b = f.divide_exact(&a).expect("gcd divides");
    let mut c = df.divide_exact(&a).expect("gcd divides derivative");
    let mut i = 1;
    loop {
        let d = &c - &b.derivative();
        if d.is_zero() {
            if b.degree().unwrap_or(0) > 0 {
                out.push((b, i));
            }
            return out;
        }
        a = gcd_poly(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.divide_exact(&a).expect("gcd divides");
        c = d.divide_exact(&a).expect("gcd divides");
        i += 1;
    }
}
