//! Ohtsuki-Riley-Sakuma epimorphism witnesses: word grammar, evaluation,
//! candidate-target filtering, and a deterministic witness search.
//!
//! An ORS word over a target continued fraction a = [a1..ak] is the entry
//! list eps_1*a, 2c_1, eps_2*a~, 2c_2, eps_3*a, ... with m >= 2 signed
//! segments (a~ is the reversed entry list) joined by even connectors. When
//! such a word evaluates to a fraction Schubert-equivalent to b(p,q), the ORS
//! construction provides an epimorphism G(b(p,q)) -> G(target).

use crate::alexander::divides_alexander;
use crate::contfrac::{crossing_number, eval_cf, positive_cf};
use crate::error::{Error, Result};
use crate::knot::{Fraction, TwoBridgeKnot};
use std::collections::HashMap;

/// Search bounds: maximum number of segments and maximum |connector|.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_segments: usize,
    pub max_connector: i64,
}

impl Default for SearchBounds {
    fn default() -> SearchBounds {
        SearchBounds {
            max_segments: 9,
            max_connector: 4,
        }
    }
}

/// Full exhaustion is performed for segment counts up to this value; beyond
/// it only the connector-sparse probe phase runs (the known larger witnesses
/// are all connector-sparse).
pub const EXHAUSTIVE_SEGMENT_CAP: usize = 9;

/// Cost budget (sum of |connectors| plus sign flips) for the probe phase.
const PROBE_BUDGET: i64 = 4;

/// A concrete ORS word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrsWord {
    /// Positive continued-fraction entries of the target representative.
    pub target_cf: Vec<i64>,
    /// Segment signs, length m >= 2.
    pub signs: Vec<i8>,
    /// Connectors c_i (the expansion inserts 2*c_i), length m - 1.
    pub connectors: Vec<i64>,
    /// Whether even-index segments use the reversed entry list (the cited
    /// construction); only observable for non-palindromic targets.
    pub alternate: bool,
}

impl OrsWord {
    pub fn segments(&self) -> usize {
        self.signs.len()
    }
}

/// An epimorphism witness: an ORS word over `target` whose evaluation is
/// Schubert-equivalent to `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpimorphismWitness {
    pub source: TwoBridgeKnot,
    pub target: TwoBridgeKnot,
    pub word: OrsWord,
    pub value: Fraction,
}

/// Concatenated entry list of an ORS word.
pub fn ors_expand(word: &OrsWord) -> Result<Vec<i64>> {
    let m = word.segments();
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "an ORS word needs at least 2 segments, got {m}"
        )));
    }
    if word.connectors.len() != m - 1 {
        return Err(Error::InvalidInput(format!(
            "expected {} connectors for {m} segments, got {}",
            m - 1,
            word.connectors.len()
        )));
    }
    let forward = word.target_cf.clone();
    let mut backward = forward.clone();
    backward.reverse();
    let mut out = Vec::with_capacity(m * (forward.len() + 1));
    for i in 0..m {
        if i > 0 {
            out.push(2 * word.connectors[i - 1]);
        }
        let seg = if word.alternate && i % 2 == 1 {
            &backward
        } else {
            &forward
        };
        let sign = word.signs[i] as i64;
        out.extend(seg.iter().map(|&a| sign * a));
    }
    Ok(out)
}

/// eval_cf of the expansion; DegenerateValue surfaces for collapsed words.
pub fn ors_evaluate(word: &OrsWord) -> Result<Fraction> {
    eval_cf(&ors_expand(word)?)
}

/// All canonical targets passing the three necessary conditions: p' a proper
/// divisor of p with p' >= 3, Alexander divisibility, and crossing number of
/// the source at least three times that of the target.
pub fn candidate_targets(source: &TwoBridgeKnot) -> Vec<TwoBridgeKnot> {
    let p = source.p();
    let cr_source = match crossing_number(source) {
        Ok(c) => c,
        Err(_) => return vec![],
    };
    let mut out = Vec::new();
    for pp in (3..p).filter(|d| p % d == 0) {
        let mut seen = Vec::new();
        for q in 1..pp {
            let Ok(t) = TwoBridgeKnot::new(pp, q) else {
                continue;
            };
            if seen.contains(&t.q()) {
                continue;
            }
            seen.push(t.q());
            if !divides_alexander(source, &t) {
                continue;
            }
            let cr_t = crossing_number(&t).expect("nontrivial target");
            if cr_source >= 3 * cr_t {
                out.push(t);
            }
        }
    }
    out.sort_by_key(|t| (t.p(), t.q()));
    out
}

/// 2x2 integer matrix acting on continued-fraction evaluation states:
/// the entry a contributes L(a) = [[0,1],[1,a]], and the value of the entry
/// list e_1..e_k is the second column of L(e_1)...L(e_k) as (num, den).
type Mat = [[i128; 2]; 2];

const IDENT: Mat = [[1, 0], [0, 1]];

fn entry_mat(a: i64) -> Mat {
    [[0, 1], [1, a as i128]]
}

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    [
        [
            x[0][0] * y[0][0] + x[0][1] * y[1][0],
            x[0][0] * y[0][1] + x[0][1] * y[1][1],
        ],
        [
            x[1][0] * y[0][0] + x[1][1] * y[1][0],
            x[1][0] * y[0][1] + x[1][1] * y[1][1],
        ],
    ]
}

fn entries_mat(entries: &[i64]) -> Mat {
    entries.iter().fold(IDENT, |m, &a| mat_mul(&m, &entry_mat(a)))
}

/// Connector values in spiral order 0, 1, -1, 2, -2, ..., so that the
/// sparsest (and paper-preferred) words are tried first.
fn connector_order(max: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(2 * max as usize + 1);
    out.push(0);
    for c in 1..=max {
        out.push(c);
        out.push(-c);
    }
    out
}

/// Per-(target cf, variant) precomputed segment matrices indexed by
/// [parity][sign] with sign 0 = plus, 1 = minus.
struct SegmentMats {
    mats: [[Mat; 2]; 2],
}

impl SegmentMats {
    fn new(cf: &[i64], alternate: bool) -> SegmentMats {
        let forward = cf.to_vec();
        let mut backward = forward.clone();
        backward.reverse();
        let neg = |v: &[i64]| v.iter().map(|&a| -a).collect::<Vec<_>>();
        let even_seg = &forward;
        let odd_seg: &Vec<i64> = if alternate { &backward } else { &forward };
        SegmentMats {
            mats: [
                [entries_mat(even_seg), entries_mat(&neg(even_seg))],
                [entries_mat(odd_seg), entries_mat(&neg(odd_seg))],
            ],
        }
    }

    fn get(&self, seg_index: usize, sign: i8) -> &Mat {
        &self.mats[seg_index % 2][if sign > 0 { 0 } else { 1 }]
    }
}

struct SearchCtx<'a> {
    source: &'a TwoBridgeKnot,
    target: &'a TwoBridgeKnot,
    cf: Vec<i64>,
    alternate: bool,
    segs: SegmentMats,
    orbit: Vec<i64>,
    max_connector: i64,
}

impl SearchCtx<'_> {
    /// Check a fully assembled evaluation vector (num, den); on success,
    /// build the witness.
    fn accept(&self, num: i128, den: i128, signs: &[i8], conns: &[i64]) -> Option<EpimorphismWitness> {
        let p = self.source.p() as i128;
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if den != p {
            return None;
        }
        let r = num.rem_euclid(p) as i64;
        if !self.orbit.contains(&r) {
            return None;
        }
        let word = OrsWord {
            target_cf: self.cf.clone(),
            signs: signs.to_vec(),
            connectors: conns.to_vec(),
            alternate: self.alternate,
        };
        let value = ors_evaluate(&word).ok()?;
        Some(EpimorphismWitness {
            source: *self.source,
            target: *self.target,
            word,
            value,
        })
    }

    /// Probe phase: enumerate only connector-sparse, flip-sparse words
    /// (sum |c_i| + sign flips <= budget), in lexicographic order.
    fn probe(&self, m: usize, budget: i64) -> Option<EpimorphismWitness> {
        let mut signs = vec![1i8; m];
        let mut conns = vec![0i64; m - 1];
        self.probe_rec(m, 1, &entry_mats_start(&self.segs), budget, &mut signs, &mut conns)
    }

    fn probe_rec(
        &self,
        m: usize,
        idx: usize,
        acc: &Mat,
        budget: i64,
        signs: &mut Vec<i8>,
        conns: &mut Vec<i64>,
    ) -> Option<EpimorphismWitness> {
        if idx == m {
            return self.accept(acc[0][1], acc[1][1], signs, conns);
        }
        let prev_sign = signs[idx - 1];
        for flip in [false, true] {
            let flip_cost = if flip { 1 } else { 0 };
            if flip_cost > budget {
                continue;
            }
            let sign = if flip { -prev_sign } else { prev_sign };
            signs[idx] = sign;
            let cmax = (budget - flip_cost).min(self.max_connector);
            for c in connector_order(cmax) {
                conns[idx - 1] = c;
                let next = mat_mul(
                    &mat_mul(acc, &entry_mat(2 * c)),
                    self.segs.get(idx, sign),
                );
                if let Some(w) = self.probe_rec(
                    m,
                    idx + 1,
                    &next,
                    budget - flip_cost - c.abs(),
                    signs,
                    conns,
                ) {
                    return Some(w);
                }
            }
        }
        signs[idx] = prev_sign;
        None
    }

    /// Full exhaustion by meet-in-the-middle: split after segment j and its
    /// connector. Right halves are bucketed by (projective class of u mod p,
    /// u2 mod p); a left half determines the projective class that makes the
    /// denominator vanish mod p, and the orbit constraint on the numerator
    /// residue pins u2 mod p to at most |orbit| values, so only right halves
    /// that are correct mod p are ever compared exactly.
    fn exhaustive(&self, m: usize) -> Option<EpimorphismWitness> {
        let p = self.source.p();
        let j = m / 2; // left: segments 0..j plus connector c_j; right: j..m
        let mut right: Vec<(i128, i128, Vec<i8>, Vec<i64>)> = Vec::new();
        let mut signs = Vec::new();
        let mut conns = Vec::new();
        self.enum_right(m, j, j, &IDENT, &mut signs, &mut conns, &mut right);
        // key: the right-half state vector reduced mod p
        let mut buckets: HashMap<(i64, i64), Vec<u32>> = HashMap::new();
        for (i, (u1, u2, _, _)) in right.iter().enumerate() {
            let a = (*u1).rem_euclid(p as i128) as i64;
            let b = (*u2).rem_euclid(p as i128) as i64;
            buckets.entry((a, b)).or_default().push(i as u32);
        }
        let mut lsigns = vec![1i8];
        let mut lconns = Vec::new();
        self.scan_left(
            j,
            1,
            self.segs.get(0, 1),
            &mut lsigns,
            &mut lconns,
            p,
            &right,
            &buckets,
        )
    }

    /// Enumerate right-half products Q (segments j..m with internal
    /// connectors); push the state vector u = second column of Q.
    #[allow(clippy::too_many_arguments)]
    fn enum_right(
        &self,
        m: usize,
        _j: usize,
        idx: usize,
        acc: &Mat,
        signs: &mut Vec<i8>,
        conns: &mut Vec<i64>,
        out: &mut Vec<(i128, i128, Vec<i8>, Vec<i64>)>,
    ) {
        if idx == m {
            out.push((acc[0][1], acc[1][1], signs.clone(), conns.clone()));
            return;
        }
        for sign in [1i8, -1] {
            signs.push(sign);
            let with_seg = mat_mul(acc, self.segs.get(idx, sign));
            if idx + 1 == m {
                self.enum_right(m, _j, idx + 1, &with_seg, signs, conns, out);
            } else {
                for c in connector_order(self.max_connector) {
                    conns.push(c);
                    let next = mat_mul(&with_seg, &entry_mat(2 * c));
                    self.enum_right(m, _j, idx + 1, &next, signs, conns, out);
                    conns.pop();
                }
            }
            signs.pop();
        }
    }

    /// Enumerate left-half products P (segments 0..j, first sign fixed +1,
    /// including the trailing connector c_j) and probe the right buckets.
    #[allow(clippy::too_many_arguments)]
    fn scan_left(
        &self,
        j: usize,
        idx: usize,
        acc: &Mat,
        signs: &mut Vec<i8>,
        conns: &mut Vec<i64>,
        p: i64,
        right: &[(i128, i128, Vec<i8>, Vec<i64>)],
        buckets: &HashMap<(i64, i64), Vec<u32>>,
    ) -> Option<EpimorphismWitness> {
        if idx == j {
            // P complete except the middle connector
            for c in connector_order(self.max_connector) {
                conns.push(c);
                let pm = mat_mul(acc, &entry_mat(2 * c));
                let p21 = pm[1][0].rem_euclid(p as i128) as i64;
                let p22 = pm[1][1].rem_euclid(p as i128) as i64;
                // pm is unimodular, so requiring den = 0 and num = r mod p
                // determines u mod p uniquely: u = det(pm) * adj(pm) (r, 0)
                let det = (pm[0][0] * pm[1][1] - pm[0][1] * pm[1][0]) as i64;
                debug_assert!(det == 1 || det == -1);
                for &r in &self.orbit {
                    let key = (
                        (det * p22 % p * r).rem_euclid(p),
                        (-det * p21 % p * r).rem_euclid(p),
                    );
                    if let Some(bucket) = buckets.get(&key) {
                        for &ri in bucket {
                            let (u1, u2, ref rsigns, ref rconns) = right[ri as usize];
                            let den = pm[1][0] * u1 + pm[1][1] * u2;
                            if den.abs() != p as i128 {
                                continue;
                            }
                            let num = pm[0][0] * u1 + pm[0][1] * u2;
                            let mut all_signs = signs.clone();
                            all_signs.extend_from_slice(rsigns);
                            let mut all_conns = conns.clone();
                            all_conns.extend_from_slice(rconns);
                            if let Some(w) = self.accept(num, den, &all_signs, &all_conns) {
                                conns.pop();
                                return Some(w);
                            }
                        }
                    }
                }
                conns.pop();
            }
            return None;
        }
        for sign in [1i8, -1] {
            signs.push(sign);
            for c in connector_order(self.max_connector) {
                conns.push(c);
                let next = mat_mul(
                    &mat_mul(acc, &entry_mat(2 * c)),
                    self.segs.get(idx, sign),
                );
                // note: connector precedes the segment it joins to
                if let Some(w) = self.scan_left(j, idx + 1, &next, signs, conns, p, right, buckets) {
                    return Some(w);
                }
                conns.pop();
            }
            signs.pop();
        }
        None
    }
}

fn entry_mats_start(segs: &SegmentMats) -> Mat {
    *segs.get(0, 1)
}

/// Deterministic witness search: for each target orbit representative and
/// grammar variant, a connector-sparse probe over all segment counts, then
/// full exhaustion for m <= EXHAUSTIVE_SEGMENT_CAP. The first sign is fixed
/// +1 (global negation maps the value q/p to (p-q)/p, which is in the same
/// Schubert orbit).
pub fn search_witness(
    source: &TwoBridgeKnot,
    target: &TwoBridgeKnot,
    bounds: SearchBounds,
) -> Option<EpimorphismWitness> {
    search_witness_multi(source, std::slice::from_ref(target), bounds)
}

/// Search several targets at once: the cheap probe phase runs across all
/// targets (in segment-count order) before any target is exhausted, so
/// easy witnesses on later targets are found before expensive exhaustion of
/// earlier ones.
pub fn search_witness_multi(
    source: &TwoBridgeKnot,
    targets: &[TwoBridgeKnot],
    bounds: SearchBounds,
) -> Option<EpimorphismWitness> {
    let ctxs = build_ctxs(source, targets, bounds);
    probe_phase(&ctxs, bounds).or_else(|| exhaustive_phase(&ctxs, bounds))
}

/// The cheap connector-sparse phase alone: finds every cost-bounded witness
/// (all-zero-connector quotients of torus knots, the section-3 family words)
/// without paying for full exhaustion. Used as the first classification pass.
pub fn search_witness_probe(
    source: &TwoBridgeKnot,
    targets: &[TwoBridgeKnot],
    bounds: SearchBounds,
) -> Option<EpimorphismWitness> {
    probe_phase(&build_ctxs(source, targets, bounds), bounds)
}

fn build_ctxs<'a>(
    source: &'a TwoBridgeKnot,
    targets: &'a [TwoBridgeKnot],
    bounds: SearchBounds,
) -> Vec<SearchCtx<'a>> {
    let orbit = source.orbit();
    let mut ctxs = Vec::new();
    for target in targets {
        if target.is_trivial() || source.p() % target.p() != 0 || source.p() == target.p() {
            continue;
        }
        let mut reps: Vec<Vec<i64>> = Vec::new();
        for q in target.orbit() {
            let Ok(frac) = Fraction::new(q, target.p()) else {
                continue;
            };
            let Ok(cf) = positive_cf(frac) else {
                continue;
            };
            if !reps.contains(&cf) {
                reps.push(cf);
            }
        }
        // Strictly alternating a, a~, a, ... only: relaxing the alternation
        // admits words outside the cited construction and is unsound (it
        // reaches e.g. [1,2,6,-1,-2] = 35/51, but no epimorphism
        // b(51,16) -> b(3,1) exists).
        for cf in &reps {
            ctxs.push(SearchCtx {
                source,
                target,
                cf: cf.clone(),
                alternate: true,
                segs: SegmentMats::new(cf, true),
                orbit: orbit.clone(),
                max_connector: bounds.max_connector,
            });
        }
    }
    ctxs
}

fn probe_phase(ctxs: &[SearchCtx], bounds: SearchBounds) -> Option<EpimorphismWitness> {
    for m in 2..=bounds.max_segments {
        for ctx in ctxs {
            if let Some(w) = ctx.probe(m, PROBE_BUDGET) {
                return Some(w);
            }
        }
    }
    None
}

fn exhaustive_phase(ctxs: &[SearchCtx], bounds: SearchBounds) -> Option<EpimorphismWitness> {
    for m in 2..=bounds.max_segments.min(EXHAUSTIVE_SEGMENT_CAP) {
        for ctx in ctxs {
            let found = if m <= 3 {
                ctx.probe(m, i64::MAX / 2)
            } else {
                ctx.exhaustive(m)
            };
            if let Some(w) = found {
                return Some(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(p: i64, q: i64) -> TwoBridgeKnot {
        TwoBridgeKnot::new(p, q).unwrap()
    }

    fn word(cf: &[i64], signs: &[i8], conns: &[i64]) -> OrsWord {
        OrsWord {
            target_cf: cf.to_vec(),
            signs: signs.to_vec(),
            connectors: conns.to_vec(),
            alternate: true,
        }
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            ors_expand(&word(&[3], &[1, 1, -1], &[0, 1])).unwrap(),
            vec![3, 0, 3, 2, -3]
        );
        assert_eq!(
            ors_expand(&word(&[3], &[1, 1, 1], &[0, 0])).unwrap(),
            vec![3, 0, 3, 0, 3]
        );
        assert!(ors_expand(&word(&[3], &[1], &[])).is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            ors_evaluate(&word(&[3], &[1, 1, -1], &[0, 1])).unwrap(),
            Fraction::new(5, 33).unwrap()
        );
        assert_eq!(
            ors_evaluate(&word(&[3], &[1, 1, 1], &[0, 0])).unwrap(),
            Fraction::new(1, 9).unwrap()
        );
        // [3,0,-3,...] style collapses must yield an error or a value, not panic
        let w = word(&[3], &[1, -1, 1], &[0, 0]);
        let _ = ors_evaluate(&w);
    }

    #[test]
    fn candidate_examples() {
        assert!(candidate_targets(&knot(45, 14)).is_empty());
        assert_eq!(candidate_targets(&knot(9, 1)), vec![knot(3, 1)]);
        assert_eq!(candidate_targets(&knot(51, 16)), vec![knot(3, 1)]);
    }

    #[test]
    fn search_examples() {
        let w = search_witness(&knot(33, 5), &knot(3, 1), SearchBounds::default()).unwrap();
        assert_eq!(ors_expand(&w.word).unwrap(), vec![3, 0, 3, 2, -3]);
        let w = search_witness(&knot(9, 1), &knot(3, 1), SearchBounds::default()).unwrap();
        assert_eq!(ors_expand(&w.word).unwrap(), vec![3, 0, 3, 0, 3]);
        assert!(search_witness(&knot(51, 16), &knot(3, 1), SearchBounds::default()).is_none());
    }

    #[test]
    fn search_is_deterministic() {
        let a = search_witness(&knot(45, 19), &knot(9, 2), SearchBounds::default());
        let b = search_witness(&knot(45, 19), &knot(9, 2), SearchBounds::default());
        assert_eq!(a, b);
    }

    #[test]
    fn paper_family_witnesses() {
        // 5/(30k+-3) -> trefoil for k <= 10 with enlarged segment bounds
        for k in 1..=10i64 {
            for p in [30 * k + 3, 30 * k - 3] {
                let src = knot(p, 5);
                let bounds = SearchBounds {
                    max_segments: 2 * k as usize + 1,
                    max_connector: 4,
                };
                let w = search_witness(&src, &knot(3, 1), bounds);
                assert!(w.is_some(), "no witness for b({p},5) -> trefoil");
            }
        }
    }
}
