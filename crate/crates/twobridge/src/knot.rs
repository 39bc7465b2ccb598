//! Schubert normal forms and enumeration of two-bridge knots b(p,q).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A reduced fraction q/p with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    /// Reduce and normalize so that den > 0. `den == 0` is rejected.
    pub fn new(num: i64, den: i64) -> Result<Fraction> {
        if den == 0 {
            return Err(Error::DegenerateValue);
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Fraction { num, den })
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Modular inverse of `a` mod `m` (m >= 1), if gcd(a,m) = 1.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        None
    } else {
        Some(t0.rem_euclid(m))
    }
}

/// A two-bridge knot in canonical Schubert form: p odd, q the minimum of the
/// orbit {q, p-q, q^-1, p-q^-1} mod p. The trivial knot is (1,0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoBridgeKnot {
    p: i64,
    q: i64,
}

impl TwoBridgeKnot {
    /// Canonical representative of b(p,q). Rejects even p and non-coprime pairs.
    pub fn new(p: i64, q: i64) -> Result<TwoBridgeKnot> {
        if p < 1 {
            return Err(Error::InvalidInput(format!("p must be >= 1, got {p}")));
        }
        if p % 2 == 0 {
            return Err(Error::LinkNotKnot { p, q });
        }
        if p == 1 {
            return Ok(TwoBridgeKnot { p: 1, q: 0 });
        }
        let q = q.rem_euclid(p);
        if gcd(p as u64, q as u64) != 1 {
            return Err(Error::NotReduced { p, q });
        }
        let qi = mod_inverse(q, p).expect("coprime q is invertible");
        let qmin = [q, p - q, qi, p - qi].into_iter().min().unwrap();
        Ok(TwoBridgeKnot { p, q: qmin })
    }

    pub fn trivial() -> TwoBridgeKnot {
        TwoBridgeKnot { p: 1, q: 0 }
    }

    pub fn is_trivial(&self) -> bool {
        self.p == 1
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The distinct Schubert orbit representatives {q, p-q, q^-1, p-q^-1},
    /// sorted ascending.
    pub fn orbit(&self) -> Vec<i64> {
        if self.p == 1 {
            return vec![0];
        }
        let (p, q) = (self.p, self.q);
        let qi = mod_inverse(q, p).expect("canonical q is coprime");
        let mut v = vec![q, p - q, qi, p - qi];
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The odd member of {q, p-q}; this is the representative required by the
    /// alternating-sum Alexander polynomial formula.
    pub fn odd_representative(&self) -> i64 {
        if self.q % 2 == 1 {
            self.q
        } else {
            self.p - self.q
        }
    }
}

impl std::fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "b({},{})", self.p, self.q)
    }
}

/// True iff b(p,q) and b(p',q') are the same knot under Schubert's theorem:
/// p = p' and q = +-q' or qq' = +-1 (mod p).
pub fn schubert_equivalent(a: (i64, i64), b: (i64, i64)) -> Result<bool> {
    let ka = TwoBridgeKnot::new(a.0, a.1)?;
    let kb = TwoBridgeKnot::new(b.0, b.1)?;
    Ok(ka == kb)
}

/// All canonical two-bridge knots with 3 <= p <= max_p, sorted by (p,q).
pub fn enumerate_knots(max_p: i64) -> Vec<TwoBridgeKnot> {
    let mut out = Vec::new();
    let mut p = 3;
    while p <= max_p {
        for q in 1..p {
            if gcd(p as u64, q as u64) == 1 {
                let k = TwoBridgeKnot::new(p, q).expect("coprime odd pair");
                if k.q == q {
                    out.push(k);
                }
            }
        }
        p += 2;
    }
    out
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        assert_eq!(TwoBridgeKnot::new(27, 22).unwrap(), TwoBridgeKnot::new(27, 5).unwrap());
        assert_eq!(TwoBridgeKnot::new(3, 1).unwrap().q(), 1);
        let k = TwoBridgeKnot::new(85, 38).unwrap();
        assert_eq!((k.p(), k.q()), (85, 38));
    }

    #[test]
    fn canonical_errors() {
        assert!(matches!(TwoBridgeKnot::new(4, 1), Err(Error::LinkNotKnot { .. })));
        assert!(matches!(TwoBridgeKnot::new(9, 3), Err(Error::NotReduced { .. })));
    }

    #[test]
    fn schubert_examples() {
        assert!(schubert_equivalent((7, 3), (7, 5)).unwrap());
        assert!(schubert_equivalent((7, 3), (7, 3)).unwrap());
        assert!(!schubert_equivalent((85, 9), (85, 38)).unwrap());
    }

    #[test]
    fn enumerate_small() {
        let ks = enumerate_knots(5);
        let pairs: Vec<_> = ks.iter().map(|k| (k.p(), k.q())).collect();
        assert_eq!(pairs, vec![(3, 1), (5, 1), (5, 2)]);
        assert!(enumerate_knots(2).is_empty());
    }

    #[test]
    fn canonical_idempotent_and_orbit_constant() {
        let mut p = 3;
        while p <= 199 {
            for q in 1..p {
                if gcd(p as u64, q as u64) != 1 {
                    continue;
                }
                let k = TwoBridgeKnot::new(p, q).unwrap();
                let k2 = TwoBridgeKnot::new(k.p(), k.q()).unwrap();
                assert_eq!(k, k2);
                for r in k.orbit() {
                    assert_eq!(TwoBridgeKnot::new(p, r).unwrap(), k);
                }
                // canonical q is minimal in the orbit
                assert!(k.q() <= p - k.q());
                assert!(k.q() <= mod_inverse(k.q(), p).unwrap());
            }
            p += 2;
        }
    }

    #[test]
    fn primality() {
        assert!(!is_prime(9));
        assert!(is_prime(31));
        assert!(!is_prime(91));
        assert!(!is_prime(1));
    }
}
