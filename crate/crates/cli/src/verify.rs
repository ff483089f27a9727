//! Identity verification over ranges of inputs.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use qschur::hooks::{
    count_shifted_syt, count_syt, fbar_parts, gbar_parts, hooks_ordinary, hooks_shifted,
    specialize_q, specialize_q_function, specialize_schur, verify_prop6,
};
use qschur::macdonald_you::{g_from_my, verify_eq12, verify_prop3, verify_prop4};
use qschur::partition::{partitions_in_box, strict_partitions_in_staircase};
use qschur::schubert::{pushforward, restrict_with, verify_eq24, GRoute};
use qschur::symfunc::bases::q_function;
use qschur::symfunc::{expand_in_q, expand_in_schur, pfun_to_m, qfun_to_m};
use qschur::{partitions_of, strict_partitions_of, Partition, Rational, StrictPartition};

use crate::args::Identity;
use crate::CliError;

/// Largest tableau counts cross-checked by enumeration in `lemma3`.
const SYT_CHECK_WEIGHT: usize = 8;

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Eq12 => "eq12",
            Identity::Eq16 => "eq16",
            Identity::Eq20 => "eq20",
            Identity::Eq24 => "eq24",
            Identity::Eq30 => "eq30",
            Identity::Lemma3 => "lemma3",
            Identity::Nonneg => "nonneg",
        }
    }

    pub fn from_prop(prop: u8) -> Option<Identity> {
        match prop {
            3 => Some(Identity::Eq16),
            4 => Some(Identity::Eq20),
            5 => Some(Identity::Eq24),
            6 => Some(Identity::Eq30),
            _ => None,
        }
    }

    pub fn default_max_weight(self) -> usize {
        match self {
            Identity::Eq12 | Identity::Eq16 | Identity::Lemma3 => 10,
            Identity::Eq20 | Identity::Nonneg => 8,
            Identity::Eq30 => 12,
            Identity::Eq24 => 0,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Scope {
    pub mu: Option<Partition>,
    pub max_weight: Option<usize>,
    pub n: Option<usize>,
    pub budget: Option<Duration>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InstanceResult {
    /// A command line that replays this instance.
    pub input: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub range: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub incomplete: bool,
    pub wall_clock_ms: u64,
    pub instances: Vec<InstanceResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && !self.incomplete
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.instances.iter().filter(|i| !i.pass)
    }

    pub fn summary_line(&self) -> String {
        let verdict = if self.failed > 0 {
            "FAIL"
        } else if self.incomplete {
            "INCOMPLETE"
        } else {
            "PASS"
        };
        format!(
            "{} {} ({}): {}/{} instances passed",
            self.identity.name(),
            verdict,
            self.range,
            self.passed,
            self.total
        )
    }
}

#[derive(Clone, Debug)]
enum Instance {
    Mu(Partition),
    Shape(Partition),
    Strict(StrictPartition),
    Product(StrictPartition, StrictPartition),
    Lagrangian(usize, StrictPartition),
}

type Check = Result<(), String>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn nonneg_z<'a>(what: &str, values: impl IntoIterator<Item = &'a BigInt>) -> Check {
    match values.into_iter().find(|c| c.is_negative()) {
        Some(c) => Err(format!("{what} has negative coefficient {c}")),
        None => Ok(()),
    }
}

fn instances(identity: Identity, scope: &Scope) -> (Vec<Instance>, String) {
    let max = scope.max_weight.unwrap_or_else(|| identity.default_max_weight());
    let shapes = |max: usize| -> Vec<Partition> { (0..=max).flat_map(partitions_of).collect() };
    match identity {
        Identity::Eq24 => {
            let ns: Vec<usize> = match scope.n {
                Some(n) => vec![n],
                None => vec![2, 3],
            };
            let range = format!("n ∈ {ns:?}");
            let list = ns
                .into_iter()
                .flat_map(|n| {
                    (0..=n * (n + 1) / 2)
                        .flat_map(move |w| strict_partitions_in_staircase(w, n))
                        .map(move |l| Instance::Lagrangian(n, l))
                })
                .collect();
            (list, range)
        }
        Identity::Lemma3 => {
            if let Some(mu) = &scope.mu {
                let mut list = vec![Instance::Shape(mu.clone())];
                if let Some(s) = mu.to_strict() {
                    list.push(Instance::Strict(s));
                }
                return (list, format!("shape {mu}"));
            }
            let mut list: Vec<Instance> = shapes(max).into_iter().map(Instance::Shape).collect();
            list.extend((0..=max).flat_map(strict_partitions_of).map(Instance::Strict));
            (list, format!("|shape| ≤ {max}"))
        }
        Identity::Nonneg => {
            if let Some(mu) = &scope.mu {
                let mut list = vec![Instance::Mu(mu.clone())];
                if let Some(s) = mu.to_strict() {
                    list.push(Instance::Strict(s));
                }
                return (list, format!("μ = {mu}"));
            }
            let mut list: Vec<Instance> = shapes(max).into_iter().map(Instance::Mu).collect();
            list.extend((0..=max).flat_map(strict_partitions_of).map(Instance::Strict));
            for total in 0..=max {
                for a in 0..=total {
                    for x in strict_partitions_of(a) {
                        for y in strict_partitions_of(total - a) {
                            list.push(Instance::Product(x.clone(), y));
                        }
                    }
                }
            }
            for n in 1..=3 {
                for w in 0..=n * (n + 1) / 2 {
                    list.extend(
                        strict_partitions_in_staircase(w, n).into_iter().map(|l| Instance::Lagrangian(n, l)),
                    );
                }
            }
            (list, format!("weight ≤ {max}, pushforward n ≤ 3"))
        }
        _ => match &scope.mu {
            Some(mu) => (vec![Instance::Mu(mu.clone())], format!("μ = {mu}")),
            None => (
                shapes(max).into_iter().map(Instance::Mu).collect(),
                format!("|μ| ≤ {max}"),
            ),
        },
    }
}

fn replay(identity: Identity, instance: &Instance) -> String {
    match instance {
        Instance::Mu(mu) => format!("qschur verify {} --mu '{}'", identity.name(), mu.to_exponent_string()),
        Instance::Shape(mu) => format!("qschur hooks --shape '{mu}' --cross-check"),
        Instance::Strict(l) if identity == Identity::Lemma3 => {
            format!("qschur hooks --shape '{l}' --shifted --cross-check")
        }
        Instance::Strict(l) => format!("qschur expand q --lambda '{l}'"),
        Instance::Product(x, y) => format!("qschur expand product --mu '{x}' --nu '{y}'"),
        Instance::Lagrangian(n, l) if identity == Identity::Eq24 => format!("qschur verify eq24 --n {n} # λ = ({l})"),
        Instance::Lagrangian(n, l) => format!("qschur expand pushforward --lambda '{l}' --n {n}"),
    }
}

fn check(identity: Identity, instance: &Instance) -> Check {
    match (identity, instance) {
        (Identity::Eq12, Instance::Mu(mu)) => ensure(verify_eq12(mu), || "2^n η(s_μ) differs from the sum".into()),
        (Identity::Eq16, Instance::Mu(mu)) => {
            ensure(verify_prop3(mu), || "AB and CD sums differ".into())?;
            g_from_my(mu).map(|_| ()).map_err(|e| e.to_string())
        }
        (Identity::Eq20, Instance::Mu(mu)) => {
            for lambda in strict_partitions_of(mu.weight()) {
                ensure(verify_prop4(mu, &lambda), || format!("fails at λ = ({lambda})"))?;
            }
            Ok(())
        }
        (Identity::Eq30, Instance::Mu(mu)) => ensure(verify_prop6(mu), || "hook identity fails".into()),
        (Identity::Eq24, Instance::Lagrangian(n, lambda)) => {
            let weight = lambda.weight() + n * (n - 1) / 2;
            for mu in partitions_in_box(weight, *n) {
                ensure(verify_eq24(lambda, &mu, *n), || format!("fails at μ = ({mu})"))?;
            }
            Ok(())
        }
        (Identity::Lemma3, Instance::Shape(mu)) => {
            let h = hooks_ordinary(mu);
            ensure(fbar_parts(mu, mu.len()).ok() == Some(h.bar.clone()), || "parts formula differs".into())?;
            ensure(specialize_schur(mu) == h.bar, || "specialization differs".into())?;
            if mu.weight() <= SYT_CHECK_WEIGHT {
                ensure(count_syt(mu).ok() == Some(h.degree()), || "tableau count differs".into())?;
            }
            Ok(())
        }
        (Identity::Lemma3, Instance::Strict(lambda)) => {
            let h = hooks_shifted(lambda);
            ensure(gbar_parts(lambda) == h.bar, || "parts formula differs".into())?;
            ensure(specialize_q_function(lambda) == h.bar, || "Pfaffian specialization differs".into())?;
            let via_q = specialize_q(&qfun_to_m::<Rational>(lambda)).map_err(|e| e.to_string())?;
            ensure(via_q == h.bar, || "Q-span specialization differs".into())?;
            if lambda.weight() <= SYT_CHECK_WEIGHT {
                ensure(count_shifted_syt(lambda).ok() == Some(h.degree()), || "tableau count differs".into())?;
            }
            Ok(())
        }
        (Identity::Nonneg, Instance::Mu(mu)) => {
            let n = mu.weight().max(1);
            for route in [GRoute::Tableau, GRoute::Eta, GRoute::MacdonaldYou] {
                let r = restrict_with(mu, n, route).map_err(|e| e.to_string())?;
                nonneg_z(&format!("restriction by {route:?}"), r.terms().map(|(_, c)| c))?;
            }
            Ok(())
        }
        (Identity::Nonneg, Instance::Strict(lambda)) => {
            let q = qfun_to_m::<BigInt>(lambda);
            nonneg_z("Q_λ in monomials", q.terms().map(|(_, c)| c))?;
            let p = expand_in_schur(&pfun_to_m::<BigInt>(lambda).map_err(|e| e.to_string())?);
            nonneg_z("P_λ in Schur functions", p.terms().map(|(_, c)| c))
        }
        (Identity::Nonneg, Instance::Product(x, y)) => {
            let product = (&*q_function(x) * &*q_function(y)).to_m();
            let product = product.try_cast::<BigInt>().ok_or("non-integral product")?;
            let e = expand_in_q(&product).map_err(|e| e.to_string())?;
            nonneg_z("Q_μ·Q_ν in the Q basis", e.terms().map(|(_, c)| c))
        }
        (Identity::Nonneg, Instance::Lagrangian(n, lambda)) => {
            let push = pushforward(lambda, *n).map_err(|e| e.to_string())?;
            nonneg_z("pushforward", push.terms().map(|(_, c)| c))
        }
        (id, inst) => Err(format!("instance {inst:?} does not apply to {}", id.name())),
    }
}

/// Runs every instance of `identity` in `scope` on a pool of `jobs` threads.
pub fn run(identity: Identity, scope: &Scope, jobs: Option<usize>) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    let deadline = scope.budget.map(|b| start + b);
    let (list, range) = instances(identity, scope);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs:?} worker threads: {e}")))?;
    let results: Vec<Option<InstanceResult>> = pool.install(|| {
        list.par_iter()
            .map(|inst| {
                if deadline.is_some_and(|d| Instant::now() > d) {
                    return None;
                }
                let outcome = check(identity, inst);
                Some(InstanceResult {
                    input: replay(identity, inst),
                    pass: outcome.is_ok(),
                    detail: outcome.err(),
                })
            })
            .collect()
    });
    let incomplete = results.iter().any(Option::is_none);
    let instances: Vec<InstanceResult> = results.into_iter().flatten().collect();
    let passed = instances.iter().filter(|i| i.pass).count();
    Ok(VerificationReport {
        identity,
        range,
        total: list.len(),
        passed,
        failed: instances.len() - passed,
        incomplete,
        wall_clock_ms: start.elapsed().as_millis() as u64,
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for id in [Identity::Eq12, Identity::Eq16, Identity::Eq20, Identity::Eq30, Identity::Lemma3, Identity::Nonneg] {
            let scope = Scope {
                max_weight: Some(4),
                ..Scope::default()
            };
            let report = run(id, &scope, Some(2)).unwrap();
            assert!(report.all_passed(), "{}", report.summary_line());
            assert!(report.total > 0);
        }
        let scope = Scope {
            n: Some(2),
            ..Scope::default()
        };
        assert!(run(Identity::Eq24, &scope, None).unwrap().all_passed());
    }

    #[test]
    fn zero_budget_is_incomplete() {
        let scope = Scope {
            max_weight: Some(6),
            budget: Some(Duration::ZERO),
            ..Scope::default()
        };
        let report = run(Identity::Eq16, &scope, Some(1)).unwrap();
        assert!(report.incomplete);
        assert!(!report.all_passed());
    }

    #[test]
    fn prop_numbers() {
        assert_eq!(Identity::from_prop(3), Some(Identity::Eq16));
        assert_eq!(Identity::from_prop(6), Some(Identity::Eq30));
        assert_eq!(Identity::from_prop(7), None);
    }
}
