//! Acceptance suite: one test (and one printed PASS/FAIL line) per
//! criterion. Criteria correspond to the published results this library
//! reproduces: the p <= 100 tabulation, the q <= 6 band theorem, the
//! determinant law, the Riley character-variety family, the Chebyshev lemma
//! identities, the section-4 worked examples, and the factorization oracle.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use twobridge::alexander::{determinant, divides_alexander};
use twobridge::charvar::{family_cross_check, lemma2_obligations, reducibility_check, FamilyVariant};
use twobridge::cheb::{verify_pell, z_minus_one_divides_s};
use twobridge::classify::{build_table, theorem_b_pairs, theorem_oracle, OracleVerdict, Status};
use twobridge::contfrac::{crossing_number, eval_cf, expand_paper_family, FamilySign};
use twobridge::knot::{enumerate_knots, is_prime, Fraction};
use twobridge::ors::{candidate_targets, ors_evaluate, search_witness, OrsWord, SearchBounds};
use twobridge::poly::{factor_integers, poly_is_irreducible, IntPoly};
use twobridge::TwoBridgeKnot;

fn report(criterion: u32, ok: bool, detail: &str, started: Instant) -> bool {
    println!(
        "ACCEPTANCE {criterion}: {} ({detail}; {:.1}s)",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed().as_secs_f64()
    );
    ok
}

/// Criterion 1: the p <= 100 table yields NonMinimal for exactly the 47
/// listed pairs, every NonMinimal verdict carries evidence, and Undecided
/// knots are oracle-minimal.
///
/// Known discrepancy: the published list omits (25, 1), yet b(25, 1) is the
/// (2, 25) torus knot with 25 = 5^2 composite, which the same source proves
/// non-minimal (torus rule), and the explicit quotient word
/// [5,0,5,0,5,0,5,0,5] -> 1/25 onto b(5, 1) confirms it. The classifier is
/// kept mathematically correct, so this criterion fails on exactly that pair.
#[test]
fn criterion_1_theorem_b_table() {
    let t0 = Instant::now();
    let bounds = SearchBounds::default();
    let table = build_table(100, bounds);

    let got: Vec<(i64, i64)> = table
        .iter()
        .filter(|r| r.status == Status::NonMinimal)
        .map(|r| (r.knot.p(), r.knot.q()))
        .collect();
    let mut expected: Vec<(i64, i64)> = theorem_b_pairs()
        .into_iter()
        .map(|(p, q)| {
            let k = TwoBridgeKnot::new(p, q).expect("fixture pair");
            (k.p(), k.q())
        })
        .collect();
    expected.sort_unstable();
    assert_eq!(expected.len(), 47, "fixture must hold 47 pairs");

    let missing: Vec<_> = expected.iter().filter(|x| !got.contains(x)).cloned().collect();
    let extra: Vec<_> = got.iter().filter(|x| !expected.contains(x)).cloned().collect();

    let evidence_ok = table
        .iter()
        .filter(|r| r.status == Status::NonMinimal)
        .all(|r| {
            r.witness.is_some()
                || r.reasons
                    .contains(&twobridge::classify::ReasonCode::TorusComposite)
        });

    let undecided: Vec<(i64, i64)> = table
        .iter()
        .filter(|r| r.status == Status::Undecided)
        .map(|r| (r.knot.p(), r.knot.q()))
        .collect();
    let undecided_ok = undecided
        .iter()
        .all(|&(p, q)| {
            theorem_oracle(&TwoBridgeKnot::new(p, q).unwrap()) == OracleVerdict::Minimal
        });

    let exact_match = missing.is_empty() && extra.is_empty();
    let ok = exact_match && evidence_ok && undecided_ok;
    report(
        1,
        ok,
        &format!(
            "non-minimal {}/47 expected, extra {extra:?}, missing {missing:?}, \
             {} undecided (all oracle-minimal: {undecided_ok}): {undecided:?}",
            expected.len() - missing.len(),
            undecided.len()
        ),
        t0,
    );
    assert!(evidence_ok, "a NonMinimal verdict lacks evidence");
    assert!(undecided_ok, "an Undecided knot is not oracle-minimal");
    assert!(missing.is_empty(), "published pairs not reproduced: {missing:?}");
    assert!(
        extra.is_empty(),
        "classifier finds non-minimal pairs beyond the published 47: {extra:?}. \
         For (25,1) this is a known discrepancy in the published list: the \
         (2,25) torus knot has composite 25 = 5^2 and admits the quotient \
         word [5,0,5,0,5,0,5,0,5] -> 1/25 onto b(5,1), so it is provably \
         non-minimal by the same torus criterion that places (9,1), (15,1), \
         ... in the list; the classifier is intentionally left correct."
    );
}

/// Criterion 2: the q <= 6 band for p <= 300 matches the band theorem, and
/// the section-3 expansion-based trefoil witnesses exist for p = 30k +- 3.
#[test]
fn criterion_2_band_theorem() {
    let t0 = Instant::now();
    let bounds = SearchBounds {
        max_segments: 21,
        max_connector: 4,
    };
    let mut ok = true;
    let mut checked = 0usize;
    for k in enumerate_knots(300) {
        let orbit = k.orbit();
        if !orbit.iter().any(|&q| q <= 6) {
            continue;
        }
        checked += 1;
        let expect_nonminimal = (orbit.contains(&1) && !is_prime(k.p()))
            || (orbit.contains(&5) && (k.p() % 30 == 3 || k.p() % 30 == 27));
        let got = twobridge::classify::classify(&k, bounds).status == Status::NonMinimal;
        if got != expect_nonminimal {
            println!(
                "  band mismatch at b({},{}): classifier non-minimal = {got}, theorem = {expect_nonminimal}",
                k.p(),
                k.q()
            );
            ok = false;
        }
    }

    // section-3 witnesses: the displayed expansion evaluates to 5/(30k +- 3)
    // and is a valid ORS word, and the search finds a trefoil witness
    let trefoil = TwoBridgeKnot::new(3, 1).unwrap();
    let mut witnesses_ok = true;
    for k in 1..=10i64 {
        for (p, sign) in [(30 * k + 3, FamilySign::Plus3), (30 * k - 3, FamilySign::Minus3)] {
            if p > 300 {
                continue;
            }
            let expansion = expand_paper_family(k, sign);
            let v = eval_cf(&expansion).unwrap();
            if v != Fraction::new(5, p).unwrap() {
                println!("  section-3 expansion for p={p} evaluates to {v}, expected 5/{p}");
                witnesses_ok = false;
            }
            // the same expansion as a structured ORS word over [3]: the
            // 4k-1 leading entries hold 2k threes, plus the final segment
            let m = 2 * k as usize + 1;
            let mut signs = vec![1i8; m];
            let mut connectors = vec![0i64; m - 1];
            match sign {
                FamilySign::Plus3 => {
                    signs[m - 1] = -1;
                    connectors[m - 2] = 1;
                }
                FamilySign::Minus3 => {
                    connectors[m - 2] = -1;
                }
            }
            let word = OrsWord {
                target_cf: vec![3],
                signs,
                connectors,
                alternate: true,
            };
            if ors_evaluate(&word).unwrap() != Fraction::new(5, p).unwrap() {
                println!("  structured ORS word for p={p} does not evaluate to 5/{p}");
                witnesses_ok = false;
            }
            let src = TwoBridgeKnot::new(p, 5).unwrap();
            if search_witness(&src, &trefoil, bounds).is_none() {
                println!("  no trefoil witness found for b({p},5) within bounds");
                witnesses_ok = false;
            }
        }
    }
    ok &= witnesses_ok;
    report(
        2,
        ok,
        &format!("{checked} band knots checked, section-3 witnesses for p = 30k+-3 <= 300"),
        t0,
    );
    assert!(ok);
}

/// Criterion 3: |Delta(-1)| = p for every canonical knot with p <= 199.
#[test]
fn criterion_3_determinant_law() {
    let t0 = Instant::now();
    let mut count = 0usize;
    let mut ok = true;
    for k in enumerate_knots(199) {
        count += 1;
        if determinant(&k) != BigInt::from(k.p()) {
            println!("  determinant law fails for b({},{})", k.p(), k.q());
            ok = false;
        }
    }
    report(3, ok, &format!("{count} canonical knots, p <= 199"), t0);
    assert!(ok);
}

/// Criterion 4: the Riley family defect matches the closed-form
/// alpha x^4 + beta x^2 + gamma for n = 0..6, and the mod-3 reducibility
/// patterns hold for both the +2 and -2 variants.
#[test]
fn criterion_4_riley_family() {
    let t0 = Instant::now();
    let mut ok = true;
    for n in 0..=6i64 {
        if !family_cross_check(n).unwrap() {
            println!("  defect/closed-form mismatch at n={n}");
            ok = false;
        }
        let plus = reducibility_check(n, FamilyVariant::Plus2).unwrap();
        if plus != (n % 3 == 2) {
            println!("  +2 reducibility pattern fails at n={n}");
            ok = false;
        }
        let minus = reducibility_check(n, FamilyVariant::Minus2).unwrap();
        if minus != (n % 3 == 0) {
            println!("  -2 reducibility pattern fails at n={n}");
            ok = false;
        }
    }
    report(4, ok, "n = 0..6, defect cross-check and both variants", t0);
    assert!(ok);
}

/// Criterion 5: the Chebyshev lemma suite — Pell identity, z-1 divisibility
/// pattern, the discriminant product identity (never a perfect square), and
/// gamma(2) = 1.
#[test]
fn criterion_5_lemma_suite() {
    let t0 = Instant::now();
    let pell = (-500..=500).all(verify_pell);
    let zm1 = (0..=300).all(|n| z_minus_one_divides_s(n) == (n % 3 == 2));
    let lemma2 = (0..=10).all(|n| {
        let rep = lemma2_obligations(n);
        if !rep.all_pass() {
            println!("  lemma obligations fail at n={n}: {rep:?}");
        }
        rep.all_pass()
    });
    let ok = pell && zm1 && lemma2;
    report(
        5,
        ok,
        &format!("pell |k|<=500: {pell}, z-1 | S_n pattern n<=300: {zm1}, discriminant suite n<=10: {lemma2}"),
        t0,
    );
    assert!(ok);
}

/// Criterion 6: the section-4 worked examples — b(45,14) has crossing number
/// 10 and no candidate targets; b(51,16) passes the necessary conditions for
/// a trefoil quotient yet the search proves no witness exists within bounds,
/// and the classifier never calls it NonMinimal.
#[test]
fn criterion_6_worked_examples() {
    let t0 = Instant::now();
    let b45 = TwoBridgeKnot::new(45, 14).unwrap();
    let cr45 = crossing_number(&b45).unwrap();
    let cand45 = candidate_targets(&b45);

    let b51 = TwoBridgeKnot::new(51, 16).unwrap();
    let trefoil = TwoBridgeKnot::new(3, 1).unwrap();
    let div51 = divides_alexander(&b51, &trefoil);
    let cr51 = crossing_number(&b51).unwrap();
    let search51 = search_witness(&b51, &trefoil, SearchBounds::default());
    let status51 = twobridge::classify::classify(&b51, SearchBounds::default()).status;

    let ok = cr45 == 10
        && cand45.is_empty()
        && div51
        && cr51 == 11
        && search51.is_none()
        && status51 != Status::NonMinimal;
    report(
        6,
        ok,
        &format!(
            "b(45,14): crossing {cr45}, candidates {:?}; b(51,16): divides {div51}, crossing {cr51}, \
             witness {:?}, status {:?}",
            cand45
                .iter()
                .map(|t| (t.p(), t.q()))
                .collect::<Vec<_>>(),
            search51.as_ref().map(|w| (w.target.p(), w.target.q())),
            status51
        ),
        t0,
    );
    assert!(ok);
}

/// Deterministic xorshift for reproducible random factorization inputs.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Criterion 7: factorization oracle equivalence — 500 seeded products of
/// known irreducibles round-trip through factor_integers, and the factor
/// counts of (t^p + 1)/(t + 1) match the cyclotomic divisor count tau(p) - 1
/// for odd p <= 99.
#[test]
fn criterion_7_factorization_oracle() {
    let t0 = Instant::now();
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);

    // build a pool of primitive irreducibles with positive leading term
    let mut pool: Vec<IntPoly> = Vec::new();
    while pool.len() < 24 {
        let deg = 1 + rng.below(6) as usize;
        let mut coeffs = vec![0i64; deg + 1];
        for c in coeffs.iter_mut() {
            *c = rng.below(11) as i64 - 5;
        }
        coeffs[deg] = 1 + rng.below(4) as i64;
        if coeffs[0] == 0 {
            coeffs[0] = 1;
        }
        let f = IntPoly::from_i64(&coeffs).primitive_part();
        if poly_is_irreducible(&f).unwrap_or(false) && !pool.contains(&f) {
            pool.push(f);
        }
    }

    let mut trips_ok = true;
    for trial in 0..500 {
        // multiset of up to 4 pool members with total degree <= 24
        let mut chosen: Vec<IntPoly> = Vec::new();
        let mut total_deg = 0usize;
        let n_factors = 1 + rng.below(4) as usize;
        for _ in 0..n_factors {
            let f = pool[rng.below(pool.len() as u64) as usize].clone();
            let d = f.degree().unwrap();
            if total_deg + d > 24 {
                break;
            }
            total_deg += d;
            chosen.push(f);
        }
        if chosen.is_empty() {
            continue;
        }
        let content = BigInt::from(rng.below(9) as i64 - 4);
        let content = if content == BigInt::from(0) { BigInt::one() } else { content };
        let mut product = IntPoly::from_coeffs(vec![content.clone()]);
        for f in &chosen {
            product = &product * f;
        }

        let fact = factor_integers(&product).unwrap();
        // expected multiset
        let mut expected: Vec<(IntPoly, usize)> = Vec::new();
        for f in &chosen {
            match expected.iter_mut().find(|(g, _)| g == f) {
                Some((_, m)) => *m += 1,
                None => expected.push((f.clone(), 1)),
            }
        }
        expected.sort_by(|a, b| {
            (a.0.degree(), a.0.coeffs().to_vec(), a.1)
                .cmp(&(b.0.degree(), b.0.coeffs().to_vec(), b.1))
        });
        let mut got = fact.factors.clone();
        got.sort_by(|a, b| {
            (a.0.degree(), a.0.coeffs().to_vec(), a.1)
                .cmp(&(b.0.degree(), b.0.coeffs().to_vec(), b.1))
        });
        if got != expected || fact.content != content {
            println!(
                "  round trip {trial} failed: built {:?} * {content}, factored to {:?} * {}",
                expected, got, fact.content
            );
            trips_ok = false;
        }
        // the product of the output must reproduce the input exactly
        if fact.product() != product {
            println!("  product reconstruction failed on trial {trial}");
            trips_ok = false;
        }
    }

    // cyclotomic oracle: (t^p + 1)/(t + 1) = prod_{d | p, d > 1} Phi_2d(t)
    let mut cyc_ok = true;
    for p in (3..=99i64).step_by(2) {
        let mut coeffs = vec![BigInt::from(0); p as usize + 1];
        coeffs[0] = BigInt::one();
        coeffs[p as usize] = BigInt::one();
        let f = IntPoly::from_coeffs(coeffs)
            .divide_exact(&IntPoly::from_i64(&[1, 1]))
            .unwrap();
        let fact = factor_integers(&f).unwrap();
        let n_factors: usize = fact.factors.iter().map(|(_, m)| m).sum();
        let tau = (1..=p).filter(|d| p % d == 0).count();
        if n_factors != tau - 1 {
            println!("  cyclotomic count mismatch at p={p}: {n_factors} factors, expected {}", tau - 1);
            cyc_ok = false;
        }
    }

    let ok = trips_ok && cyc_ok;
    report(
        7,
        ok,
        &format!("500 seeded round trips: {trips_ok}, cyclotomic counts odd p <= 99: {cyc_ok}"),
        t0,
    );
    assert!(ok);
}
