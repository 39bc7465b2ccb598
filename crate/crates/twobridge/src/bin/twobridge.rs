//! Command-line front end for the two-bridge knot minimality toolkit.
//!
//! Exit codes: 0 success, 1 domain error (invalid knot, degenerate value,
//! ...), 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::process::ExitCode;
use twobridge::alexander::{alexander_poly, determinant};
use twobridge::charvar::{
    extract_r, family_coeffs, family_word, generic_riley, riley_defect, FamilyVariant,
};
use twobridge::classify::{
    build_table, classify, theorem_b_pairs, theorem_oracle, ClassificationReport, Status,
};
use twobridge::contfrac::{crossing_number, eval_cf, expand_paper_family, positive_cf, FamilySign};
use twobridge::error::Error;
use twobridge::knot::Fraction;
use twobridge::ors::{candidate_targets, ors_expand, search_witness, SearchBounds};
use twobridge::poly::text::{bipoly_to_json, format_poly, poly_to_json};
use twobridge::poly::{factor_integers, gcd_poly, IntPoly};
use twobridge::TwoBridgeKnot;

#[derive(Parser)]
#[command(
    name = "twobridge",
    version,
    about = "Minimality of two-bridge knots: Alexander criteria, Riley character varieties, ORS epimorphism search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Identities,
    Riley,
    Table,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical Schubert form, orbit, and crossing number of b(p,q)
    Knot {
        p: i64,
        q: i64,
        #[arg(long)]
        json: bool,
    },
    /// Continued-fraction utilities
    #[command(subcommand)]
    Cf (CfCommand),
    /// Alexander polynomial of b(p,q)
    Alexander {
        p: i64,
        q: i64,
        /// Evaluate at an integer point instead of printing the polynomial
        #[arg(long)]
        eval: Option<i64>,
        /// Print the factorization over the integers
        #[arg(long)]
        factor: bool,
        #[arg(long)]
        json: bool,
    },
    /// Riley character-variety polynomial R(x,z)
    Riley {
        /// Knot parameters p q (omit when using --family)
        #[arg(num_args = 0..=2)]
        pq: Vec<i64>,
        /// Family index n for the q = 5 family b(5(2n+1)+-2, 5)
        #[arg(long)]
        family: Option<i64>,
        #[arg(long, value_enum, default_value = "plus")]
        variant: VariantArg,
    },
    /// Search for an ORS epimorphism witness from b(p,q)
    OrsSearch {
        p: i64,
        q: i64,
        /// Restrict to one target p' q'
        #[arg(long, num_args = 2)]
        target: Option<Vec<i64>>,
        #[arg(long)]
        max_segments: Option<usize>,
        #[arg(long)]
        max_connector: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Classify b(p,q) as Minimal / NonMinimal / Undecided with evidence
    Classify {
        p: i64,
        q: i64,
        /// Search bounds as "max_segments,max_connector"
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Classify all canonical knots with p <= max-p
    Table {
        #[arg(long, default_value_t = 100)]
        max_p: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Theorem-encoded oracle verdict for b(p,q)
    Oracle { p: i64, q: i64 },
    /// Run an acceptance suite and print pass/fail per item
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum CfCommand {
    /// Evaluate a comma-separated entry list in the bracket convention
    Eval { entries: String },
    /// Positive continued-fraction expansion of q/p
    Positive { p: i64, q: i64 },
    /// The [3,0,...,3,+-2,-+3] expansion of 5/(30k+-3)
    Family {
        k: i64,
        #[arg(long, value_enum, default_value = "plus")]
        variant: VariantArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_bounds(spec: &Option<String>) -> Result<SearchBounds, Error> {
    let mut b = SearchBounds::default();
    let from_env = std::env::var("TWOBRIDGE_BOUNDS").ok();
    let chosen = spec.clone().or(from_env);
    if let Some(s) = chosen {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::InvalidInput(format!(
                "bounds must be \"max_segments,max_connector\", got {s:?}"
            )));
        }
        b.max_segments = parts[0]
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad max_segments {:?}", parts[0])))?;
        b.max_connector = parts[1]
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad max_connector {:?}", parts[1])))?;
    }
    Ok(b)
}

fn envelope(command: &str, inputs: Value, results: Value) -> Value {
    json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "inputs": inputs,
        "results": results,
    })
}

fn witness_json(w: &twobridge::ors::EpimorphismWitness) -> Value {
    json!({
        "target": { "p": w.target.p(), "q": w.target.q() },
        "target_cf": w.word.target_cf,
        "signs": w.word.signs,
        "connectors": w.word.connectors,
        "alternate": w.word.alternate,
        "expansion": ors_expand(&w.word).unwrap_or_default(),
        "value": w.value.to_string(),
    })
}

fn report_json(r: &ClassificationReport, bounds: SearchBounds) -> Value {
    json!({
        "p": r.knot.p(),
        "q": r.knot.q(),
        "status": r.status.as_str(),
        "reasons": r.reasons.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "witness": r.witness.as_ref().map(witness_json),
        "candidates_remaining": r.candidates_remaining.iter()
            .map(|t| json!({"p": t.p(), "q": t.q()})).collect::<Vec<_>>(),
        "bounds": { "max_segments": bounds.max_segments, "max_connector": bounds.max_connector },
    })
}

fn report_csv_row(r: &ClassificationReport) -> String {
    let reasons = r
        .reasons
        .iter()
        .map(|c| c.as_str())
        .collect::<Vec<_>>()
        .join("+");
    let (expansion, tp, tq) = match &r.witness {
        Some(w) => (
            ors_expand(&w.word)
                .unwrap_or_default()
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            w.target.p().to_string(),
            w.target.q().to_string(),
        ),
        None => (String::new(), String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{},{}",
        r.knot.p(),
        r.knot.q(),
        r.status.as_str(),
        reasons,
        expansion,
        tp,
        tq
    )
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Knot { p, q, json } => {
            let k = TwoBridgeKnot::new(p, q)?;
            let cn = crossing_number(&k).ok();
            if json {
                let v = envelope(
                    "knot",
                    json!({"p": p, "q": q}),
                    json!({
                        "canonical_p": k.p(),
                        "canonical_q": k.q(),
                        "trivial": k.is_trivial(),
                        "orbit": k.orbit(),
                        "odd_representative": if k.is_trivial() { None } else { Some(k.odd_representative()) },
                        "crossing_number": cn,
                        "determinant": k.p(),
                    }),
                );
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("b({},{}) canonical b({},{})", p, q, k.p(), k.q());
                println!("orbit: {:?}", k.orbit());
                match cn {
                    Some(c) => println!("crossing number: {c}"),
                    None => println!("crossing number: undefined (trivial knot)"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cf(sub) => run_cf(sub),
        Command::Alexander {
            p,
            q,
            eval,
            factor,
            json,
        } => {
            let k = TwoBridgeKnot::new(p, q)?;
            let d = alexander_poly(&k);
            let mut results = json!({
                "polynomial": format_poly(d.poly(), "t"),
                "polynomial_json": poly_to_json(d.poly(), "t"),
                "degree": d.degree(),
                "determinant": determinant(&k).to_string(),
            });
            if let Some(t0) = eval {
                results["value"] = json!(d.poly().eval(&BigInt::from(t0)).to_string());
            }
            if factor {
                let f = factor_integers(d.poly())?;
                results["factors"] = json!(f
                    .factors
                    .iter()
                    .map(|(g, m)| json!({"factor": format_poly(g, "t"), "multiplicity": m}))
                    .collect::<Vec<_>>());
                results["content"] = json!(f.content.to_string());
                results["irreducible"] = json!(f.is_irreducible_poly());
            }
            if json {
                let v = envelope("alexander", json!({"p": p, "q": q}), results);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                match eval {
                    Some(t0) => println!(
                        "Delta_b({},{})({t0}) = {}",
                        k.p(),
                        k.q(),
                        d.poly().eval(&BigInt::from(t0))
                    ),
                    None => println!("{}", format_poly(d.poly(), "t")),
                }
                if factor {
                    let f = factor_integers(d.poly())?;
                    for (g, m) in &f.factors {
                        if *m == 1 {
                            println!("factor: {}", format_poly(g, "t"));
                        } else {
                            println!("factor: ({})^{m}", format_poly(g, "t"));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Riley { pq, family, variant } => {
            let r = match (family, pq.as_slice()) {
                (Some(n), []) => {
                    let var = match variant {
                        VariantArg::Plus => FamilyVariant::Plus2,
                        VariantArg::Minus => FamilyVariant::Minus2,
                    };
                    let c = family_coeffs(n, var)?;
                    let r = c.as_bipoly();
                    let g = gcd_poly(&gcd_poly(&c.alpha, &c.beta), &c.gamma);
                    let zm1 = IntPoly::from_i64(&[-1, 1]);
                    let v = envelope(
                        "riley",
                        json!({"family": n, "variant": match variant { VariantArg::Plus => "plus", VariantArg::Minus => "minus" }, "p": var.p(n), "q": 5}),
                        json!({
                            "R": bipoly_to_json(&r),
                            "alpha": format_poly(&c.alpha, "z"),
                            "beta": format_poly(&c.beta, "z"),
                            "gamma": format_poly(&c.gamma, "z"),
                            "coeff_gcd": format_poly(&g, "z"),
                            "z_minus_1_divides_R": g.divide_exact(&zm1).is_ok(),
                        }),
                    );
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                    return Ok(ExitCode::SUCCESS);
                }
                (None, [p, q]) => {
                    let k = TwoBridgeKnot::new(*p, *q)?;
                    generic_riley(&k)?
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "riley needs either `riley p q` or `riley --family n`".into(),
                    ))
                }
            };
            let v = envelope(
                "riley",
                json!({"p": pq[0], "q": pq[1]}),
                json!({
                    "R": bipoly_to_json(&r),
                    "degree_x": r.degree_x(),
                    "degree_z": r.degree_z(),
                }),
            );
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::OrsSearch {
            p,
            q,
            target,
            max_segments,
            max_connector,
            json: json_out,
        } => {
            let source = TwoBridgeKnot::new(p, q)?;
            let mut bounds = parse_bounds(&None)?;
            if let Some(m) = max_segments {
                bounds.max_segments = m;
            }
            if let Some(c) = max_connector {
                bounds.max_connector = c;
            }
            let targets = match target {
                Some(t) => vec![TwoBridgeKnot::new(t[0], t[1])?],
                None => candidate_targets(&source),
            };
            let mut found = None;
            for t in &targets {
                if let Some(w) = search_witness(&source, t, bounds) {
                    found = Some(w);
                    break;
                }
            }
            if json_out {
                let v = envelope(
                    "ors-search",
                    json!({"p": p, "q": q,
                           "bounds": {"max_segments": bounds.max_segments, "max_connector": bounds.max_connector},
                           "targets": targets.iter().map(|t| json!({"p": t.p(), "q": t.q()})).collect::<Vec<_>>()}),
                    json!({"witness": found.as_ref().map(witness_json)}),
                );
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                match &found {
                    Some(w) => println!(
                        "witness: b({},{}) -> b({},{}) via {:?} = {}",
                        p,
                        q,
                        w.target.p(),
                        w.target.q(),
                        ors_expand(&w.word).unwrap_or_default(),
                        w.value
                    ),
                    None => println!("no witness within bounds ({} segments, connectors +-{})", bounds.max_segments, bounds.max_connector),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { p, q, bounds, json } => {
            let k = TwoBridgeKnot::new(p, q)?;
            let b = parse_bounds(&bounds)?;
            let r = classify(&k, b);
            if json {
                let v = envelope("classify", json!({"p": p, "q": q}), report_json(&r, b));
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                print_report_text(&r);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            max_p,
            format,
            bounds,
        } => {
            let b = parse_bounds(&bounds)?;
            let table = build_table(max_p, b);
            match format {
                TableFormat::Text => {
                    for r in &table {
                        print_report_text(r);
                    }
                    let non_minimal = table.iter().filter(|r| r.status == Status::NonMinimal).count();
                    let undecided = table.iter().filter(|r| r.status == Status::Undecided).count();
                    println!(
                        "total {} knots: {} non-minimal, {} undecided",
                        table.len(),
                        non_minimal,
                        undecided
                    );
                }
                TableFormat::Csv => {
                    println!("p,q,status,reasons,witness_expansion,target_p,target_q");
                    for r in &table {
                        println!("{}", report_csv_row(r));
                    }
                }
                TableFormat::Json => {
                    let v = envelope(
                        "table",
                        json!({"max_p": max_p,
                               "bounds": {"max_segments": b.max_segments, "max_connector": b.max_connector}}),
                        json!(table.iter().map(|r| report_json(r, b)).collect::<Vec<_>>()),
                    );
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { p, q } => {
            let k = TwoBridgeKnot::new(p, q)?;
            println!("{}", theorem_oracle(&k).as_str());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let ok = match suite {
                VerifySuite::Identities => verify_identities(),
                VerifySuite::Riley => verify_riley(),
                VerifySuite::Table => verify_table(),
                VerifySuite::All => {
                    let a = verify_identities();
                    let b = verify_riley();
                    let c = verify_table();
                    a && b && c
                }
            };
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_cf(cmd: CfCommand) -> Result<ExitCode, Error> {
    match cmd {
        CfCommand::Eval { entries } => {
            let parsed: Result<Vec<i64>, _> = entries
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect();
            let parsed =
                parsed.map_err(|_| Error::InvalidInput(format!("bad entry list {entries:?}")))?;
            let v = eval_cf(&parsed)?;
            println!("{v}");
        }
        CfCommand::Positive { p, q } => {
            let e = positive_cf(Fraction::new(q, p)?)?;
            println!(
                "[{}]",
                e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            );
        }
        CfCommand::Family { k, variant } => {
            let sign = match variant {
                VariantArg::Plus => FamilySign::Plus3,
                VariantArg::Minus => FamilySign::Minus3,
            };
            let e = expand_paper_family(k, sign);
            let v = eval_cf(&e)?;
            println!(
                "[{}] = {}",
                e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                v
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report_text(r: &ClassificationReport) {
    let reasons = r
        .reasons
        .iter()
        .map(|c| c.as_str())
        .collect::<Vec<_>>()
        .join(", ");
    match &r.witness {
        Some(w) => println!(
            "b({},{}): {} [{}] -> b({},{}) via {:?}",
            r.knot.p(),
            r.knot.q(),
            r.status.as_str(),
            reasons,
            w.target.p(),
            w.target.q(),
            ors_expand(&w.word).unwrap_or_default(),
        ),
        None => println!(
            "b({},{}): {} [{}]",
            r.knot.p(),
            r.knot.q(),
            r.status.as_str(),
            reasons
        ),
    }
}

fn check(name: &str, ok: bool) -> bool {
    println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
    ok
}

fn verify_identities() -> bool {
    use twobridge::cheb::{cheb_s, verify_pell, verify_root_product, z_minus_one_divides_s};
    let mut ok = true;
    ok &= check(
        "Pell identity S_k^2 + S_{k-1}^2 - y S_k S_{k-1} = 1 for |k| <= 500",
        (-500..=500).all(verify_pell),
    );
    ok &= check(
        "z-1 | S_n(z) iff n = 2 (mod 3), n <= 300",
        (0..=300).all(|n| z_minus_one_divides_s(n) == (n % 3 == 2)),
    );
    ok &= check(
        "S_k roots are 2cos(j pi/(k+1)) for k <= 64 (tolerance 1e-9)",
        (1..=64).all(|k| verify_root_product(k, 1e-9)),
    );
    ok &= check(
        "gcd(S_k, S_{k-1}) = 1 for k <= 100",
        (1..=100).all(|k| gcd_poly(&cheb_s(k), &cheb_s(k - 1)).is_one()),
    );
    ok
}

fn verify_riley() -> bool {
    use twobridge::charvar::{family_cross_check, lemma2_obligations, reducibility_check};
    let mut ok = true;
    ok &= check(
        "family defect matches alpha x^4 + beta x^2 + gamma for n <= 6",
        (0..=6).all(|n| family_cross_check(n).unwrap_or(false)),
    );
    ok &= check(
        "+2 variant: z-1 | R iff n = 2 (mod 3), n <= 6",
        (0..=6).all(|n| {
            reducibility_check(n, FamilyVariant::Plus2).map(|r| r == (n % 3 == 2)).unwrap_or(false)
        }),
    );
    ok &= check(
        "-2 variant: z-1 | R iff n = 0 (mod 3), n <= 6",
        (0..=6).all(|n| {
            reducibility_check(n, FamilyVariant::Minus2).map(|r| r == (n % 3 == 0)).unwrap_or(false)
        }),
    );
    ok &= check(
        "discriminant product identity, non-squareness, gamma(2) = 1 for n <= 10",
        (0..=10).all(|n| lemma2_obligations(n).all_pass()),
    );
    ok &= check("defect has the displayed off-diagonal shape (n <= 6)", {
        (0..=6).all(|n| {
            riley_defect(&family_word(n))
                .and_then(|d| extract_r(&d))
                .is_ok()
        })
    });
    ok
}

fn verify_table() -> bool {
    let bounds = SearchBounds::default();
    let table = build_table(100, bounds);
    let got: Vec<(i64, i64)> = table
        .iter()
        .filter(|r| r.status == Status::NonMinimal)
        .map(|r| (r.knot.p(), r.knot.q()))
        .collect();
    let expected: Vec<(i64, i64)> = {
        let mut v: Vec<(i64, i64)> = theorem_b_pairs()
            .into_iter()
            .map(|(p, q)| {
                let k = TwoBridgeKnot::new(p, q).expect("fixture pair");
                (k.p(), k.q())
            })
            .collect();
        v.sort_unstable();
        v
    };
    let mut ok = true;
    let missing: Vec<_> = expected.iter().filter(|pq| !got.contains(pq)).collect();
    let extra: Vec<_> = got.iter().filter(|pq| !expected.contains(pq)).collect();
    ok &= check(
        &format!(
            "non-minimal set matches the 47 fixture pairs ({}/{} found{}{})",
            expected.len() - missing.len(),
            expected.len(),
            if extra.is_empty() {
                String::new()
            } else {
                format!("; extra: {extra:?}")
            },
            if missing.is_empty() {
                String::new()
            } else {
                format!("; missing: {missing:?}")
            },
        ),
        missing.is_empty() && extra.is_empty(),
    );
    ok &= check(
        "every non-minimal verdict carries a witness or the torus rule",
        table.iter().filter(|r| r.status == Status::NonMinimal).all(|r| {
            r.witness.is_some()
                || r.reasons
                    .contains(&twobridge::classify::ReasonCode::TorusComposite)
        }),
    );
    let undecided: Vec<_> = table
        .iter()
        .filter(|r| r.status == Status::Undecided)
        .collect();
    ok &= check(
        &format!(
            "all {} undecided knots are oracle-minimal: {:?}",
            undecided.len(),
            undecided.iter().map(|r| (r.knot.p(), r.knot.q())).collect::<Vec<_>>()
        ),
        undecided
            .iter()
            .all(|r| theorem_oracle(&r.knot) == twobridge::classify::OracleVerdict::Minimal),
    );
    ok
}
