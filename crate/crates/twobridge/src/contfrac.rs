//! Continued fractions in the bracket convention
//! value([a1,...,an]) = 1/(a1 + 1/(a2 + ... + 1/an)),
//! positive canonical expansions, and crossing numbers.

use crate::error::{Error, Result};
use crate::knot::{Fraction, TwoBridgeKnot};

/// Evaluate a continued fraction in the bracket convention, with formal
/// infinity propagation. Returns the reduced value with positive denominator.
pub fn eval_cf(entries: &[i64]) -> Result<Fraction> {
    if entries.is_empty() {
        return Err(Error::InvalidInput("empty continued fraction".into()));
    }
    let (n, d) = eval_cf_raw(entries)?;
    if d == 0 {
        return Err(Error::DegenerateValue);
    }
    let n = i64::try_from(n).map_err(|_| Error::InvalidInput("overflow in evaluation".into()))?;
    let d = i64::try_from(d).map_err(|_| Error::InvalidInput("overflow in evaluation".into()))?;
    Fraction::new(n, d)
}

/// Projective evaluation: returns coprime (num, den); den = 0 encodes infinity.
/// Errors only on the indeterminate form 0/0.
pub(crate) fn eval_cf_raw(entries: &[i64]) -> Result<(i128, i128)> {
    // value(empty) = 0; v -> 1/(a + v) maps (n,d) to (d, a*d + n)
    let (mut n, mut d) = (0i128, 1i128);
    for &a in entries.iter().rev() {
        (n, d) = (d, a as i128 * d + n);
        if n == 0 && d == 0 {
            return Err(Error::DegenerateValue);
        }
    }
    Ok((n, d))
}

/// The unique expansion of q/p (0 < q < p reduced) with all entries >= 1 and
/// last entry >= 2.
pub fn positive_cf(f: Fraction) -> Result<Vec<i64>> {
    if f.num <= 0 || f.num >= f.den {
        return Err(Error::InvalidInput(format!(
            "positive expansion requires 0 < q < p, got {f}"
        )));
    }
    let mut out = Vec::new();
    let (mut num, mut den) = (f.den, f.num);
    while den != 0 {
        out.push(num / den);
        (num, den) = (den, num % den);
    }
    if out.len() > 1 && out[out.len() - 1] == 1 {
        out.pop();
        *out.last_mut().unwrap() += 1;
    }
    Ok(out)
}

/// Minimal crossing number of a two-bridge knot: the minimum over Schubert
/// orbit representatives q' of the entry sum of the positive expansion of q'/p.
pub fn crossing_number(k: &TwoBridgeKnot) -> Result<i64> {
    if k.is_trivial() {
        return Err(Error::DefinedAsZero);
    }
    k.orbit()
        .into_iter()
        .map(|q| positive_cf(Fraction::new(q, k.p())?).map(|e| e.iter().sum()))
        .try_fold(i64::MAX, |acc, s| Ok(acc.min(s?)))
}

/// Sign variant of the 5/(30k +- 3) expansion family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySign {
    Plus3,
    Minus3,
}

/// The expansion [3,0,3,0,...,0,3, +-2, -+3] with 4k-1 leading alternating
/// entries; evaluates to 5/(30k+3) for `Plus3` and 5/(30k-3) for `Minus3`.
pub fn expand_paper_family(k: i64, sign: FamilySign) -> Vec<i64> {
    assert!(k >= 1);
    let mut out = Vec::with_capacity(4 * k as usize + 1);
    for i in 0..(4 * k - 1) {
        out.push(if i % 2 == 0 { 3 } else { 0 });
    }
    match sign {
        FamilySign::Plus3 => out.extend_from_slice(&[2, -3]),
        FamilySign::Minus3 => out.extend_from_slice(&[-2, 3]),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        assert_eq!(eval_cf(&[6, 2, -3]).unwrap(), Fraction::new(5, 33).unwrap());
        assert_eq!(eval_cf(&[3]).unwrap(), Fraction::new(1, 3).unwrap());
        assert_eq!(eval_cf(&[3, 0, 3, 2, -3]).unwrap(), Fraction::new(5, 33).unwrap());
    }

    #[test]
    fn eval_degenerate() {
        // [0] evaluates to 1/0
        assert_eq!(eval_cf(&[0]), Err(Error::DegenerateValue));
        assert_eq!(eval_cf(&[1, -1]), Err(Error::DegenerateValue));
        // an intermediate formal infinity that recovers is fine: the zero
        // entry collapses [3,-3,0] to [3 + 0] = [3]
        assert_eq!(eval_cf(&[3, -3, 0]).unwrap(), Fraction::new(1, 3).unwrap());
    }

    #[test]
    fn positive_examples() {
        assert_eq!(positive_cf(Fraction::new(14, 45).unwrap()).unwrap(), vec![3, 4, 1, 2]);
        assert_eq!(positive_cf(Fraction::new(1, 3).unwrap()).unwrap(), vec![3]);
        assert_eq!(positive_cf(Fraction::new(2, 5).unwrap()).unwrap(), vec![2, 2]);
    }

    #[test]
    fn positive_round_trip() {
        for p in 2..=199i64 {
            for q in 1..p {
                if crate::knot::gcd(p as u64, q as u64) != 1 {
                    continue;
                }
                let f = Fraction::new(q, p).unwrap();
                let e = positive_cf(f).unwrap();
                assert!(e.iter().all(|&x| x >= 1));
                assert!(*e.last().unwrap() >= 2 || e.len() == 1);
                assert_eq!(eval_cf(&e).unwrap(), f);
            }
        }
    }

    #[test]
    fn crossing_examples() {
        let cn = |p, q| crossing_number(&TwoBridgeKnot::new(p, q).unwrap()).unwrap();
        assert_eq!(cn(45, 14), 10);
        assert_eq!(cn(3, 1), 3);
        assert_eq!(cn(51, 16), 11);
        assert_eq!(crossing_number(&TwoBridgeKnot::trivial()), Err(Error::DefinedAsZero));
    }

    #[test]
    fn paper_family_expansions() {
        assert_eq!(expand_paper_family(1, FamilySign::Plus3), vec![3, 0, 3, 2, -3]);
        assert_eq!(eval_cf(&expand_paper_family(1, FamilySign::Minus3)).unwrap(), Fraction::new(5, 27).unwrap());
        assert_eq!(expand_paper_family(2, FamilySign::Plus3), vec![3, 0, 3, 0, 3, 0, 3, 2, -3]);
        for k in 1..=20 {
            assert_eq!(
                eval_cf(&expand_paper_family(k, FamilySign::Plus3)).unwrap(),
                Fraction::new(5, 30 * k + 3).unwrap()
            );
            assert_eq!(
                eval_cf(&expand_paper_family(k, FamilySign::Minus3)).unwrap(),
                Fraction::new(5, 30 * k - 3).unwrap()
            );
        }
    }
}
