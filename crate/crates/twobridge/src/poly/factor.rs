//! Complete factorization over the integers: squarefree split, factorization
//! modulo a good prime, Hensel lifting past the coefficient bound, and
//! exhaustive subset recombination.

use super::gcd::squarefree_decomposition;
use super::IntPoly;
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Degree cap for `factor_integers`; generous enough for the Alexander
/// polynomial of any knot handled by this crate (p <= 199 gives degree <= 198).
pub const FACTOR_DEGREE_CAP: usize = 200;

/// Result of `factor_integers`: `content * prod factor^multiplicity == input`.
/// Factors are primitive with positive leading coefficient, sorted by degree
/// then coefficients; the sign of the input lives in `content`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> IntPoly {
        let mut acc = IntPoly::from_coeffs(vec![self.content.clone()]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn is_irreducible_poly(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factor a nonzero integer polynomial into irreducibles over Z.
pub fn factor_integers(f: &IntPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let degree = f.degree().unwrap();
    if degree > FACTOR_DEGREE_CAP {
        return Err(Error::DegreeCap { degree, cap: FACTOR_DEGREE_CAP });
    }
    let mut content = f.content();
    let mut pp = f.primitive_part();
    if pp.leading().is_negative() {
        content = -content;
        pp = -pp;
    }
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    // strip powers of t
    let shift = pp.coeffs().iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        pp = IntPoly::from_coeffs(pp.coeffs()[shift..].to_vec());
        factors.push((IntPoly::x(), shift));
    }
    if pp.degree() == Some(0) {
        return Ok(Factorization { content, factors });
    }
    for (g, mult) in squarefree_decomposition(&pp) {
        let g = if g.leading().is_negative() { -g } else { g };
        for irr in factor_squarefree(&g) {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| {
        let da = a.0.degree();
        let db = b.0.degree();
        da.cmp(&db)
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
            .then_with(|| a.1.cmp(&b.1))
    });
    Ok(Factorization { content, factors })
}

/// True iff the polynomial is irreducible over Z (primitive part, degree >= 1).
pub fn poly_is_irreducible(f: &IntPoly) -> Result<bool> {
    Ok(factor_integers(f)?.is_irreducible_poly())
}

fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.degree().unwrap();
    if n <= 1 {
        return vec![f.clone()];
    }
    // Smallest odd primes keeping f squarefree with unit leading coefficient;
    // two are always collected for the degree-set intersection fast path, and
    // the candidate with the fewest modular factors is kept for lifting.
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut degree_sets: Vec<u128> = Vec::new();
    let mut p = 3u64;
    let mut good = 0;
    while good < 3 {
        if is_prime_u64(p) && good_prime(f, p) {
            let fp = ModPoly::from_intpoly(f, p).monic();
            let fac = factor_mod_p(&fp, p);
            degree_sets.push(subset_degree_set(&fac));
            if best.as_ref().is_none_or(|(_, b)| fac.len() < b.len()) {
                best = Some((p, fac));
            }
            good += 1;
        }
        p += 2;
    }
    let proper: u128 = ((1u128 << n) - 2) & degree_sets.iter().fold(!0u128, |a, b| a & b);
    if proper == 0 {
        return vec![f.clone()];
    }
    let (p, modular) = best.unwrap();
    zassenhaus_recombine(f, p, modular, proper)
}

fn good_prime(f: &IntPoly, p: u64) -> bool {
    if (f.leading() % BigInt::from(p)).is_zero() {
        return false;
    }
    let fp = ModPoly::from_intpoly(f, p);
    if fp.degree() != f.degree().map(|d| d as i64).unwrap_or(-1) {
        return false;
    }
    let d = fp.derivative();
    fp.gcd(&d).deg() == 0
}

/// Bitmask of degrees achievable as subset sums of the modular factor degrees.
fn subset_degree_set(factors: &[ModPoly]) -> u128 {
    let mut set: u128 = 1;
    for f in factors {
        set |= set << f.deg();
    }
    set
}

fn zassenhaus_recombine(f: &IntPoly, p: u64, modular: Vec<ModPoly>, proper: u128) -> Vec<IntPoly> {
    let n = f.degree().unwrap();
    // modulus must exceed twice the Landau-Mignotte style bound on the
    // coefficients of lc(f) * (any monic rational factor)
    let norm: BigInt = f.coeffs().iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound: BigInt = (BigInt::from(n + 1).sqrt() + 1)
        * (BigInt::one() << n)
        * norm
        * f.leading().abs();
    let mut modulus = BigInt::from(p);
    let mut k = 1u32;
    while modulus <= BigInt::from(2) * &bound {
        modulus = &modulus * &modulus;
        k *= 2;
    }
    let lifted = hensel_lift_tree(f, &modular, p, k, &modulus);

    let mut live: Vec<Vec<BigInt>> = lifted;
    live.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut g = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= live.len() {
        let idxs: Vec<usize> = (0..live.len()).collect();
        for combo in Combinations::new(idxs.len(), size) {
            let dsum: usize = combo.iter().map(|&i| live[idxs[i]].len() - 1).sum();
            if proper & (1u128 << dsum) == 0 {
                continue;
            }
            let cand = symmetric_product(&g.leading(), combo.iter().map(|&i| &live[idxs[i]]), &modulus);
            let cand = cand.primitive_part();
            if let Ok(q) = g.divide_exact(&cand) {
                out.push(if cand.leading().is_negative() { -cand } else { cand });
                g = if q.leading().is_negative() { -q } else { q };
                let mut remove: Vec<usize> = combo.iter().map(|&i| idxs[i]).collect();
                remove.sort_unstable_by(|a, b| b.cmp(a));
                for r in remove {
                    live.remove(r);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if g.degree().unwrap_or(0) >= 1 {
        out.push(g);
    }
    out
}

/// lc * prod(factors) reduced into the symmetric range (-m/2, m/2].
fn symmetric_product<'a>(
    lc: &BigInt,
    factors: impl Iterator<Item = &'a Vec<BigInt>>,
    modulus: &BigInt,
) -> IntPoly {
    let mut acc = vec![lc.mod_floor(modulus)];
    for f in factors {
        let mut next = vec![BigInt::zero(); acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        for c in &mut next {
            *c = c.mod_floor(modulus);
        }
        acc = next;
    }
    let half = modulus / 2;
    for c in &mut acc {
        if *c > half {
            *c -= modulus;
        }
    }
    IntPoly::from_coeffs(acc)
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic factorizations, quadratic steps)

/// Lift the monic factorization of f mod p to mod p^k (k a power of two,
/// `modulus` = p^k). Returns monic factors as ascending coefficient vectors.
fn hensel_lift_tree(
    f: &IntPoly,
    modular: &[ModPoly],
    p: u64,
    _k: u32,
    modulus: &BigInt,
) -> Vec<Vec<BigInt>> {
    // normalize f to a monic polynomial mod `modulus`
    let lc_inv = mod_inverse_big(&f.leading().mod_floor(modulus), modulus)
        .expect("leading coefficient invertible mod p^k");
    let fm: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * &lc_inv).mod_floor(modulus))
        .collect();
    let mut out = Vec::new();
    lift_rec(&fm, modular, p, modulus, &mut out);
    out
}

fn lift_rec(f: &[BigInt], factors: &[ModPoly], p: u64, target: &BigInt, out: &mut Vec<Vec<BigInt>>) {
    if factors.len() == 1 {
        out.push(f.to_vec());
        return;
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let g0 = ModPoly::product(left, p);
    let h0 = ModPoly::product(right, p);
    let (s0, t0) = g0.extended_gcd_bezout(&h0);
    let mut g: Vec<BigInt> = g0.to_bigint();
    let mut h: Vec<BigInt> = h0.to_bigint();
    let mut s: Vec<BigInt> = s0.to_bigint();
    let mut t: Vec<BigInt> = t0.to_bigint();
    let mut m = BigInt::from(p);
    while &m < target {
        let m2 = &m * &m;
        // e = f - g*h
        let e = poly_sub_mod(f, &poly_mul_mod(&g, &h, &m2), &m2);
        // (q, r) = divrem(s*e, h); g' = g + t*e + q*g; h' = h + r
        let se = poly_mul_mod(&s, &e, &m2);
        let (q, r) = poly_divrem_monic(&se, &h, &m2);
        let mut g1 = poly_add_mod(&g, &poly_mul_mod(&t, &e, &m2), &m2);
        g1 = poly_add_mod(&g1, &poly_mul_mod(&q, &g, &m2), &m2);
        let h1 = poly_add_mod(&h, &r, &m2);
        // refresh the Bezout pair: b = s*g1 + t*h1 - 1
        let mut b = poly_add_mod(
            &poly_mul_mod(&s, &g1, &m2),
            &poly_mul_mod(&t, &h1, &m2),
            &m2,
        );
        if b.is_empty() {
            b = vec![BigInt::zero()];
        }
        b[0] -= BigInt::one();
        b[0] = b[0].mod_floor(&m2);
        let b = trim(b);
        let sb = poly_mul_mod(&s, &b, &m2);
        let (c, d) = poly_divrem_monic(&sb, &h1, &m2);
        let s1 = poly_sub_mod(&s, &d, &m2);
        let mut t1 = poly_sub_mod(&t, &poly_mul_mod(&t, &b, &m2), &m2);
        t1 = poly_sub_mod(&t1, &poly_mul_mod(&c, &g1, &m2), &m2);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    // recurse with the lifted halves (reduced into the final modulus)
    let gm: Vec<BigInt> = trim(g.iter().map(|c| c.mod_floor(target)).collect());
    let hm: Vec<BigInt> = trim(h.iter().map(|c| c.mod_floor(target)).collect());
    lift_rec(&gm, left, p, target, out);
    lift_rec(&hm, right, p, target, out);
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    for c in &mut out {
        *c = c.mod_floor(m);
    }
    trim(out)
}

fn poly_add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            + b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x.mod_floor(m));
    }
    trim(out)
}

fn poly_sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            - b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x.mod_floor(m));
    }
    trim(out)
}

/// Division with remainder by a monic polynomial, coefficients mod m.
fn poly_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(!b.is_empty() && b.last().unwrap().is_one(), "divisor must be monic");
    let db = b.len() - 1;
    let mut rem: Vec<BigInt> = a.to_vec();
    if rem.len() <= db {
        return (vec![], trim(rem));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - db] = c.clone();
        for j in 0..=db {
            let v = &rem[i - db + j] - &c * &b[j];
            rem[i - db + j] = v.mod_floor(m);
        }
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

/// Lexicographic k-subsets of {0, .., n-1}.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.idx.clone();
        let k = self.idx.len();
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Arithmetic in GF(p)[x] for small odd primes

#[derive(Debug, Clone, PartialEq, Eq)]
struct ModPoly {
    c: Vec<u64>, // ascending, no trailing zeros
    p: u64,
}

impl ModPoly {
    fn new(mut c: Vec<u64>, p: u64) -> ModPoly {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { c, p }
    }

    fn from_intpoly(f: &IntPoly, p: u64) -> ModPoly {
        let pb = BigInt::from(p);
        ModPoly::new(
            f.coeffs()
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&pb);
                    let (_, digits) = r.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                })
                .collect(),
            p,
        )
    }

    fn zero(p: u64) -> ModPoly {
        ModPoly { c: vec![], p }
    }

    fn one(p: u64) -> ModPoly {
        ModPoly { c: vec![1], p }
    }

    fn xpoly(p: u64) -> ModPoly {
        ModPoly { c: vec![0, 1], p }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree as i64; -1 for zero.
    fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    fn mul(&self, rhs: &ModPoly) -> ModPoly {
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        ModPoly::new(out.into_iter().map(|x| x as u64).collect(), self.p)
    }

    fn sub(&self, rhs: &ModPoly) -> ModPoly {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = rhs.c.get(i).copied().unwrap_or(0);
            out.push((a + self.p - b) % self.p);
        }
        ModPoly::new(out, self.p)
    }

    fn scale(&self, k: u64) -> ModPoly {
        let p = self.p as u128;
        ModPoly::new(
            self.c.iter().map(|&x| ((x as u128 * k as u128) % p) as u64).collect(),
            self.p,
        )
    }

    fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(mod_inv_u64(self.lc(), self.p))
    }

    fn divrem(&self, b: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!b.is_zero());
        let db = b.deg();
        let binv = mod_inv_u64(b.lc(), self.p);
        let p = self.p as u128;
        let mut rem = self.c.clone();
        if rem.len() < b.c.len() {
            return (ModPoly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = ((c as u128 * binv as u128) % p) as u64;
            quot[i - db] = q;
            for j in 0..=db {
                let sub = (q as u128 * b.c[j] as u128) % p;
                let idx = i - db + j;
                rem[idx] = ((rem[idx] as u128 + p - sub) % p) as u64;
            }
        }
        rem.truncate(db);
        (ModPoly::new(quot, self.p), ModPoly::new(rem, self.p))
    }

    fn rem(&self, b: &ModPoly) -> ModPoly {
        self.divrem(b).1
    }

    fn gcd(&self, rhs: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Bezout pair (s,t) with s*self + t*rhs = 1; requires gcd = 1.
    fn extended_gcd_bezout(&self, rhs: &ModPoly) -> (ModPoly, ModPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        assert_eq!(r0.deg(), 0, "factors must be coprime mod p");
        let inv = mod_inv_u64(r0.lc(), p);
        (s0.scale(inv), t0.scale(inv))
    }

    fn derivative(&self) -> ModPoly {
        if self.c.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        let p = self.p as u128;
        ModPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| ((c as u128 * (i as u128 + 1)) % p) as u64)
                .collect(),
            self.p,
        )
    }

    /// self^e mod f, with a big exponent.
    fn pow_mod(&self, e: &BigUint, f: &ModPoly) -> ModPoly {
        let mut base = self.rem(f);
        let mut acc = ModPoly::one(self.p);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(f);
            }
            base = base.mul(&base).rem(f);
        }
        acc
    }

    fn product(list: &[ModPoly], p: u64) -> ModPoly {
        let mut acc = ModPoly::one(p);
        for f in list {
            acc = acc.mul(f);
        }
        acc
    }

    fn to_bigint(&self) -> Vec<BigInt> {
        self.c.iter().map(|&x| BigInt::from(x)).collect()
    }
}

fn mod_inv_u64(a: u64, p: u64) -> u64 {
    // Fermat
    let mut acc: u128 = 1;
    let mut base: u128 = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Factor a squarefree monic polynomial over GF(p) into monic irreducibles,
/// deterministically ordered.
fn factor_mod_p(f: &ModPoly, p: u64) -> Vec<ModPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ModPoly::xpoly(p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.deg() >= 1 {
        d += 1;
        if rest.deg() < 2 * d {
            out.push(rest.monic());
            break;
        }
        h = h.pow_mod(&BigUint::from(p), &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            equal_degree_split(&g, d, p, &mut out);
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
    out
}

/// Cantor-Zassenhaus equal-degree splitting with a deterministic trial
/// sequence (p is odd).
fn equal_degree_split(f: &ModPoly, d: usize, p: u64, out: &mut Vec<ModPoly>) {
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    let mut seed: u64 = 0x9e3779b97f4a7c15;
    loop {
        // deterministic pseudo-random trial polynomial of degree <= 2d-1
        let mut coeffs = Vec::with_capacity(2 * d);
        for _ in 0..2 * d {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            coeffs.push(seed % p);
        }
        let w = ModPoly::new(coeffs, p);
        if w.deg() == 0 || w.is_zero() {
            continue;
        }
        let mut r = w.pow_mod(&e, f);
        if r.is_zero() {
            continue;
        }
        r.c[0] = (r.c[0] + p - 1) % p;
        let r = ModPoly::new(r.c, p);
        let g = r.gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.divrem(&g).0;
            equal_degree_split(&g, d, p, out);
            equal_degree_split(&h, d, p, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fz(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn irreducible_quadratic() {
        let f = fz(&[1, -1, 1]); // t^2-t+1
        let fac = factor_integers(&f).unwrap();
        assert!(fac.is_irreducible_poly());
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn splits_difference_of_squares() {
        let f = fz(&[-1, 0, 1]);
        let fac = factor_integers(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(), f);
        assert_eq!(fac.factors[0].0, fz(&[-1, 1]));
        assert_eq!(fac.factors[1].0, fz(&[1, 1]));
    }

    #[test]
    fn cyclotomic_15() {
        // (t^15+1)/(t+1) = Phi_6 * Phi_10 * Phi_30: degrees 2, 4, 8
        let mut c = vec![BigInt::from(0); 16];
        c[0] = BigInt::from(1);
        c[15] = BigInt::from(1);
        let f = IntPoly::from_coeffs(c)
            .divide_exact(&fz(&[1, 1]))
            .unwrap();
        let fac = factor_integers(&f).unwrap();
        let mut degs: Vec<usize> = fac.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 4, 8]);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn with_content_and_multiplicity() {
        // 6 * (t-1)^2 * (t^2+t+1)
        let f = fz(&[6]) * fz(&[1, -2, 1]) * fz(&[1, 1, 1]);
        let fac = factor_integers(&f).unwrap();
        assert_eq!(fac.content, BigInt::from(6));
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn power_of_x_and_sign() {
        let f = fz(&[0, 0, -3, -3]); // -3 t^2 (t+1)
        let fac = factor_integers(&f).unwrap();
        assert_eq!(fac.content, BigInt::from(-3));
        assert_eq!(fac.product(), f);
    }
}
