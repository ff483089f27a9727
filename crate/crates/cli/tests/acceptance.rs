//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. All comparisons are exact; the only tolerances are the
//! wall-clock bounds pinned below.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::Value;

use qschur::hooks::verify_prop6;
use qschur::macdonald_you::{g_from_my, my_terms, Variant};
use qschur::schubert::{g_row, restrict_with, staircase_duality_holds, GRoute};
use qschur::symfunc::bases::q_function;
use qschur::symfunc::expand_in_p;
use qschur::{f_coeff, partitions_of, strict_partitions_of, Partition, Rational};
use qschur_cli::args::Identity;
use qschur_cli::verify::{self, Scope, VerificationReport};

/// Runtime bound for the flagship restriction by both routes.
const FLAGSHIP_BUDGET: Duration = Duration::from_secs(600);
/// Runtime bound for the whole acceptance run.
const DESK_SCALE_BUDGET: Duration = Duration::from_secs(1800);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Negative values seen anywhere in the run, for the nonnegativity sweep.
#[derive(Default)]
struct Negatives(Vec<String>);

impl Negatives {
    fn scan<'a>(&mut self, what: &str, values: impl IntoIterator<Item = &'a BigInt>) -> usize {
        let mut n = 0;
        for v in values {
            n += 1;
            if v.is_negative() {
                self.0.push(format!("{what}: {v}"));
            }
        }
        n
    }
}

fn fixture(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).expect("fixture exists")).expect("fixture parses")
}

fn flagship() -> Partition {
    "5^3,3,1^3".parse().unwrap()
}

fn run_identity(id: Identity, max_weight: Option<usize>, n: Option<usize>, mu: Option<Partition>) -> VerificationReport {
    let scope = Scope {
        mu,
        max_weight,
        n,
        budget: None,
    };
    verify::run(id, &scope, None).expect("verification runs")
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!("{} {}/{}", r.identity.name(), r.passed, r.total);
    if let Some(f) = r.failures().next() {
        s.push_str(&format!(", first failure: {}", f.input));
    }
    s
}

fn criterion_1(neg: &mut Negatives) -> Outcome {
    let start = Instant::now();
    let mu = flagship();
    let n = mu.weight();
    let Ok(my) = restrict_with(&mu, n, GRoute::MacdonaldYou) else {
        return outcome(false, "Macdonald–You route failed");
    };
    let Ok(eta) = restrict_with(&mu, n, GRoute::Eta) else {
        return outcome(false, "η route failed");
    };
    let elapsed = start.elapsed();
    let expected = fixture("restrict_5^3,3,1^3.json");
    let got = serde_json::to_value(my.to_json()).unwrap();
    neg.scan("flagship restriction", my.terms().map(|(_, c)| c));
    let pass = got == expected && my == eta && elapsed <= FLAGSHIP_BUDGET;
    outcome(
        pass,
        format!(
            "{} terms, fixture {}, routes agree {}, {:.2?} ≤ {:?}",
            my.terms().filter(|(_, c)| !c.is_zero()).count(),
            if got == expected { "matched" } else { "MISMATCH" },
            my == eta,
            elapsed,
            FLAGSHIP_BUDGET
        ),
    )
}

fn criterion_2() -> Outcome {
    let listed = |variant: Variant| -> Value {
        let terms: Vec<Value> = my_terms(&flagship(), variant)
            .iter()
            .filter_map(|t| t.straightened())
            .map(|(s, a, b)| {
                serde_json::json!({"sign": s.to_string(), "removed": a.parts(), "remaining": b.parts()})
            })
            .collect();
        Value::Array(terms)
    };
    let ab_ok = listed(Variant::AB) == fixture("terms_ab_5^3,3,1^3.json")["terms"];
    let cd_ok = listed(Variant::CD) == fixture("terms_cd_5^3,3,1^3.json")["terms"];
    let report = run_identity(Identity::Eq16, None, None, Some(flagship()));
    outcome(
        ab_ok && cd_ok && report.all_passed(),
        format!("AB terms {ab_ok}, CD terms {cd_ok}, {}", report_text(&report)),
    )
}

fn criterion_3(neg: &mut Negatives) -> Outcome {
    let mut pairs = 0;
    let mut bad = None;
    for w in 0..=8 {
        for mu in partitions_of(w) {
            let rows: Vec<_> = GRoute::ALL.iter().map(|&r| g_row(&mu, r).expect("g row")).collect();
            for lambda in strict_partitions_of(w) {
                let vals: Vec<BigInt> = rows.iter().map(|r| r.coeff(&lambda)).collect();
                pairs += neg.scan("g", &vals);
                if vals.iter().any(|v| v != &vals[0]) && bad.is_none() {
                    bad = Some(format!("λ = {lambda:?}, μ = {mu:?}: {vals:?}"));
                }
            }
        }
    }
    pairs /= 3;
    match bad {
        None => outcome(true, format!("{pairs} (λ, μ) pairs, |μ| ≤ 8, exact agreement")),
        Some(b) => outcome(false, b),
    }
}

fn criterion_4(neg: &mut Negatives) -> Outcome {
    let mut checked = 0;
    for total in 0..=10 {
        for a in 0..=total {
            for mu in strict_partitions_of(a) {
                for nu in strict_partitions_of(total - a) {
                    let product = (&*q_function(&mu) * &*q_function(&nu)).to_m();
                    let scale = Rational::new(BigInt::from(1), BigInt::from(1) << (mu.len() + nu.len()));
                    let Ok(p) = expand_in_p(&product.scale(&scale)) else {
                        return outcome(false, format!("P_{mu:?}·P_{nu:?} left the P-span"));
                    };
                    for lambda in strict_partitions_of(total) {
                        let tableau = Rational::from_integer(BigInt::from(f_coeff(&mu, &nu, &lambda)));
                        let coeff = p.coeff(&lambda);
                        if !coeff.is_integer() || coeff != tableau {
                            return outcome(
                                false,
                                format!("f^{lambda:?}_{{{mu:?},{nu:?}}}: tableaux {tableau}, P-basis {coeff}"),
                            );
                        }
                        checked += neg.scan("f", [&coeff.to_integer()]);
                    }
                }
            }
        }
    }
    outcome(true, format!("{checked} coefficients, |μ|+|ν| ≤ 10, exact agreement"))
}

fn criterion_5() -> Outcome {
    let eq16 = run_identity(Identity::Eq16, Some(10), None, None);
    let eq20 = run_identity(Identity::Eq20, Some(8), None, None);
    // eq16 instances include the divisibility by 2^n; recheck it directly.
    let divisible = (0..=10).flat_map(partitions_of).all(|mu| g_from_my(&mu).is_ok());
    outcome(
        eq16.all_passed() && eq20.all_passed() && divisible,
        format!("{}, {}, divisible by 2^n {divisible}", report_text(&eq16), report_text(&eq20)),
    )
}

fn criterion_6() -> Outcome {
    let n2 = run_identity(Identity::Eq24, None, Some(2), None);
    let n3 = run_identity(Identity::Eq24, None, Some(3), None);
    let duality: Vec<bool> = (1..=4).map(staircase_duality_holds).collect();
    let dual_ok = duality.iter().all(|&b| b);
    outcome(
        n2.all_passed() && n3.all_passed() && dual_ok,
        format!("n=2 {}, n=3 {}, staircase duality n ≤ 4 {duality:?}", report_text(&n2), report_text(&n3)),
    )
}

fn criterion_7() -> Outcome {
    let lemma = run_identity(Identity::Lemma3, Some(10), None, None);
    let eq30 = run_identity(Identity::Eq30, Some(12), None, None);
    let flagship_ok = verify_prop6(&flagship());
    outcome(
        lemma.all_passed() && eq30.all_passed() && flagship_ok,
        format!("{}, {}, μ = (5^3,3,1^3) {flagship_ok}", report_text(&lemma), report_text(&eq30)),
    )
}

fn criterion_8(neg: &Negatives) -> Outcome {
    let sweep = run_identity(Identity::Nonneg, Some(8), None, None);
    let stable = (1..=8).flat_map(partitions_of).all(|mu| {
        let base = restrict_with(&mu, mu.weight(), GRoute::Tableau).expect("restriction");
        (mu.len().max(mu.part(0))..mu.weight()).all(|n| {
            let small = restrict_with(&mu, n, GRoute::Tableau).expect("restriction");
            let same = small.terms().all(|(l, c)| base.coeff(l) == *c);
            same
        })
    });
    outcome(
        sweep.all_passed() && neg.0.is_empty() && stable,
        format!(
            "{}, negatives among earlier coefficients {}, restriction stable in n {stable}",
            report_text(&sweep),
            neg.0.len()
        ),
    )
}

fn criterion_9(elapsed: Duration, earlier: &[bool]) -> Outcome {
    let all = earlier.iter().all(|&b| b);
    outcome(
        all && elapsed <= DESK_SCALE_BUDGET,
        format!("criteria 1–8 reproduced in {:.2?} ≤ {:?} on this machine", elapsed, DESK_SCALE_BUDGET),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut neg = Negatives::default();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut push = |id, name, o: Outcome| {
        println!("{} {id}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((id, name, o));
    };
    push(1, "flagship restriction by both routes", criterion_1(&mut neg));
    push(2, "signed Macdonald–You terms", criterion_2());
    push(3, "three-way g agreement", criterion_3(&mut neg));
    push(4, "f by tableaux equals P-basis products", criterion_4(&mut neg));
    push(5, "twin identity and linear relations", criterion_5());
    push(6, "pushforward identity and staircase duality", criterion_6());
    push(7, "hook suite", criterion_7());
    push(8, "nonnegativity", criterion_8(&neg));
    let earlier: Vec<bool> = results.iter().map(|(_, _, o)| o.pass).collect();
    let last = criterion_9(start.elapsed(), &earlier);
    println!("{} 9. desk-scale reproduction: {}", if last.pass { "PASS" } else { "FAIL" }, last.detail);
    let failed = earlier.iter().filter(|&&p| !p).count() + usize::from(!last.pass);
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
