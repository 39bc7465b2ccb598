//! Minimality classifier: combines the torus rule, ORS witness search, and
//! the sufficiency criteria into an evidence-based verdict, plus an
//! independent oracle encoding the source tabulation (Theorems A and B).

use crate::alexander::{alexander_degree, alexander_irreducible};
use crate::knot::{enumerate_knots, is_prime, TwoBridgeKnot};
use crate::ors::{
    candidate_targets, search_witness_multi, search_witness_probe, EpimorphismWitness,
    SearchBounds,
};

/// Verdict of the evidence engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Minimal,
    NonMinimal,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Minimal => "Minimal",
            Status::NonMinimal => "NonMinimal",
            Status::Undecided => "Undecided",
        }
    }
}

/// Why a verdict was reached, in the order the rules were applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReasonCode {
    /// Torus knot b(p,1) with p prime.
    TorusPrime,
    /// Torus knot b(p,1) with p composite: never minimal.
    TorusComposite,
    /// A concrete ORS witness was found.
    OrsWitness,
    /// No quotient passes the divisor/Alexander/crossing filters.
    NoCandidates,
    /// Orbit contains 2: twist knots are minimal.
    TwistKnot,
    /// p = +-1 mod some orbit representative q' >= 2: b(kq+-1, q) is minimal.
    DoubleTwistRule,
    /// Alexander polynomial has degree 2.
    AlexDegree2,
    /// Alexander polynomial is irreducible over the integers.
    AlexIrreducible,
    /// q = 5 family rule: p = 5k +- 3 with k not divisible by 6.
    FamilyQ5Rule,
    /// All candidate searches were exhausted without a witness.
    SearchExhausted,
}

impl ReasonCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReasonCode::TorusPrime => "TorusPrime",
            ReasonCode::TorusComposite => "TorusComposite",
            ReasonCode::OrsWitness => "OrsWitness",
            ReasonCode::NoCandidates => "NoCandidates",
            ReasonCode::TwistKnot => "TwistKnot",
            ReasonCode::DoubleTwistRule => "DoubleTwistRule",
            ReasonCode::AlexDegree2 => "AlexDegree2",
            ReasonCode::AlexIrreducible => "AlexIrreducible",
            ReasonCode::FamilyQ5Rule => "FamilyQ5Rule",
            ReasonCode::SearchExhausted => "SearchExhausted",
        }
    }
}

/// Classification outcome with its full evidence trace.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub knot: TwoBridgeKnot,
    pub status: Status,
    pub reasons: Vec<ReasonCode>,
    pub witness: Option<EpimorphismWitness>,
    pub candidates_remaining: Vec<TwoBridgeKnot>,
}

/// Evidence-based classification. Decision order: trivial knot; torus class
/// (minimal iff p prime); ORS witness search over the filtered candidate
/// targets; sufficiency rules; otherwise Undecided.
pub fn classify(k: &TwoBridgeKnot, bounds: SearchBounds) -> ClassificationReport {
    if k.is_trivial() {
        return ClassificationReport {
            knot: *k,
            status: Status::Minimal,
            reasons: vec![ReasonCode::NoCandidates],
            witness: None,
            candidates_remaining: vec![],
        };
    }
    let orbit = k.orbit();
    let p = k.p();
    if orbit.contains(&1) {
        if is_prime(p) {
            return ClassificationReport {
                knot: *k,
                status: Status::Minimal,
                reasons: vec![ReasonCode::TorusPrime],
                witness: None,
                candidates_remaining: vec![],
            };
        }
        // composite torus knots are never minimal; attach a witness when the
        // cheap probe finds one (the all-zero-connector quotient word, found
        // whenever the smallest prime factor fits in max_segments)
        let candidates = candidate_targets(k);
        let witness = search_witness_probe(k, &candidates, bounds);
        let mut reasons = vec![ReasonCode::TorusComposite];
        if witness.is_some() {
            reasons.push(ReasonCode::OrsWitness);
        }
        return ClassificationReport {
            knot: *k,
            status: Status::NonMinimal,
            reasons,
            witness,
            candidates_remaining: vec![],
        };
    }
    let candidates = candidate_targets(k);
    // cheap connector-sparse pass first; full exhaustion is deferred until
    // the sufficiency rules have had their chance (they are sound, so a knot
    // they certify minimal cannot have a witness)
    if !candidates.is_empty() {
        if let Some(w) = search_witness_probe(k, &candidates, bounds) {
            return ClassificationReport {
                knot: *k,
                status: Status::NonMinimal,
                reasons: vec![ReasonCode::OrsWitness],
                witness: Some(w),
                candidates_remaining: vec![],
            };
        }
    }
    let mut reasons = Vec::new();
    if candidates.is_empty() {
        reasons.push(ReasonCode::NoCandidates);
    }
    if orbit.contains(&2) {
        reasons.push(ReasonCode::TwistKnot);
    }
    if orbit
        .iter()
        .any(|&q| q >= 2 && (p % q == 1 || p % q == q - 1))
    {
        reasons.push(ReasonCode::DoubleTwistRule);
    }
    if alexander_degree(k) == 2 {
        reasons.push(ReasonCode::AlexDegree2);
    }
    if alexander_irreducible(k).unwrap_or(false) {
        reasons.push(ReasonCode::AlexIrreducible);
    }
    if orbit.contains(&5) {
        let family_k = if p % 5 == 3 {
            Some((p - 3) / 5)
        } else if p % 5 == 2 {
            Some((p + 3) / 5)
        } else {
            None
        };
        if let Some(fk) = family_k {
            if fk % 6 != 0 {
                reasons.push(ReasonCode::FamilyQ5Rule);
            }
        }
    }
    if !reasons.is_empty() {
        return ClassificationReport {
            knot: *k,
            status: Status::Minimal,
            reasons,
            witness: None,
            candidates_remaining: candidates,
        };
    }
    // no rule fired: pay for the full meet-in-the-middle exhaustion
    if !candidates.is_empty() {
        if let Some(w) = search_witness_multi(k, &candidates, bounds) {
            return ClassificationReport {
                knot: *k,
                status: Status::NonMinimal,
                reasons: vec![ReasonCode::OrsWitness],
                witness: Some(w),
                candidates_remaining: vec![],
            };
        }
    }
    ClassificationReport {
        knot: *k,
        status: Status::Undecided,
        reasons: vec![ReasonCode::SearchExhausted],
        witness: None,
        candidates_remaining: candidates,
    }
}

/// Classify every canonical knot with p <= max_p, in (p, q) order.
pub fn build_table(max_p: i64, bounds: SearchBounds) -> Vec<ClassificationReport> {
    enumerate_knots(max_p)
        .into_iter()
        .map(|k| classify(&k, bounds))
        .collect()
}

/// Verdict of the theorem-encoded oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Minimal,
    NonMinimal,
    OutOfTheoremScope,
}

impl OracleVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleVerdict::Minimal => "Minimal",
            OracleVerdict::NonMinimal => "NonMinimal",
            OracleVerdict::OutOfTheoremScope => "OutOfTheoremScope",
        }
    }
}

/// Embedded tabulation fixture: the 47 printed non-minimal pairs for
/// p <= 100 (one "p,q" per line, # comments).
pub const THEOREM_B_FIXTURE: &str = include_str!("../fixtures/theorem_b.txt");

/// Parse the fixture into (p, q) pairs.
pub fn theorem_b_pairs() -> Vec<(i64, i64)> {
    THEOREM_B_FIXTURE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (p, q) = l.split_once(',').expect("fixture line is p,q");
            (
                p.trim().parse().expect("fixture p"),
                q.trim().parse().expect("fixture q"),
            )
        })
        .collect()
}

/// Theorem-encoded oracle, independent of the evidence engine: the q <= 6
/// band rule (NonMinimal iff torus with composite p, or q = 5 class with
/// p = +-3 mod 30), then the p <= 100 tabulation lookup.
pub fn theorem_oracle(k: &TwoBridgeKnot) -> OracleVerdict {
    if k.is_trivial() {
        return OracleVerdict::Minimal;
    }
    let orbit = k.orbit();
    let p = k.p();
    if orbit.iter().any(|&q| q <= 6) {
        let torus_rule = orbit.contains(&1) && !is_prime(p);
        let q5_rule = orbit.contains(&5) && (p % 30 == 3 || p % 30 == 27);
        return if torus_rule || q5_rule {
            OracleVerdict::NonMinimal
        } else {
            OracleVerdict::Minimal
        };
    }
    if p <= 100 {
        let listed = theorem_b_pairs().iter().any(|&(fp, fq)| {
            fp == p
                && TwoBridgeKnot::new(fp, fq)
                    .map(|t| t.q() == k.q())
                    .unwrap_or(false)
        });
        return if listed {
            OracleVerdict::NonMinimal
        } else {
            OracleVerdict::Minimal
        };
    }
    OracleVerdict::OutOfTheoremScope
}
