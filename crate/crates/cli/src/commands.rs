//! Subcommand implementations. Each returns the text to print and the exit
//! status; nothing here writes to stdout directly.

use std::time::Duration;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use qschur::hooks::{
    count_shifted_syt, count_syt, fbar_parts, gbar_parts, hooks_ordinary, hooks_shifted,
    specialize_q, specialize_schur, HookData,
};
use qschur::macdonald_you::{g_from_my, my_expansion, my_terms, Variant};
use qschur::partition::straighten;
use qschur::scalar::format_exact;
use qschur::schubert::{
    g_row, pairing_lg, pushforward, restrict_with, GRoute, SchubertExpansionLG,
};
use qschur::symfunc::bases::q_function;
use qschur::symfunc::{
    eta_schur, expand_in_q, expand_in_schur, pfun_to_m, qfun_to_m, BasisTag, JsonExpansion,
};
use qschur::{e_coeff, f_coeff, g_coeff, IntSequence, Partition, Rational, StrictPartition};

use crate::args::{
    CoeffArgs, CoeffKind, Command, ExpandArgs, ExpandWhat, Format, FrobeniusArgs, ShapeArgs,
    VariantArg, VerifyArgs,
};
use crate::cache::{Cache, CacheKind};
use crate::verify::{self, Scope};
use crate::{CliError, Status};

pub struct Output {
    pub text: String,
    pub status: Status,
}

impl Output {
    fn ok(text: String) -> Output {
        Output {
            text,
            status: Status::Ok,
        }
    }
}

pub struct Context {
    pub format: Format,
    pub cache: Cache,
    pub jobs: Option<usize>,
}

pub fn run(command: &Command, ctx: &Context) -> Result<Output, CliError> {
    match command {
        Command::Coeff(a) => coeff(a, ctx),
        Command::Expand(a) => expand(a, ctx),
        Command::Verify(a) => verify_cmd(a, ctx),
        Command::Hooks(a) => hooks(a, ctx),
        Command::Degree(a) => degree(a, ctx),
        Command::Frobenius(a) => frobenius(a, ctx),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn required<'a, T>(value: &'a Option<T>, flag: &str, command: &str) -> Result<&'a T, CliError> {
    value
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("`{command}` needs --{flag}")))
}

fn strict(p: &Partition, flag: &str) -> Result<StrictPartition, CliError> {
    p.to_strict()
        .ok_or_else(|| CliError::Usage(format!("--{flag} ({p}) must be a strict partition")))
}

/// Every value in `values` must agree; otherwise a consistency failure
/// naming each route and its value.
fn agree<T: PartialEq + std::fmt::Display>(what: &str, values: &[(&str, T)]) -> Result<(), CliError> {
    let first = &values[0].1;
    if values.iter().all(|(_, v)| v == first) {
        return Ok(());
    }
    let listing: Vec<String> = values.iter().map(|(r, v)| format!("{r} = {v}")).collect();
    Err(CliError::Consistency(format!("{what}: {}", listing.join(", "))))
}

fn key(parts: &[&Partition], n: Option<usize>) -> String {
    let mut text: Vec<String> = parts.iter().map(|p| p.to_exponent_string()).collect();
    if let Some(n) = n {
        text.push(format!("n={n}"));
    }
    text.join(";")
}

/// Coefficient of `Q_λ` in `Q_μ Q_ν`, which is `e^λ_{μν}`.
fn e_via_product(mu: &StrictPartition, nu: &StrictPartition, lambda: &StrictPartition) -> Result<BigInt, CliError> {
    let product = (&*q_function(mu) * &*q_function(nu)).to_m();
    let product = product
        .try_cast::<BigInt>()
        .ok_or_else(|| CliError::Consistency(format!("Q_{mu:?}·Q_{nu:?} has a non-integral coefficient")))?;
    Ok(expand_in_q(&product)?.coeff(lambda))
}

#[derive(Serialize)]
struct CoeffOutput {
    kind: &'static str,
    indices: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    value: String,
    routes: Vec<&'static str>,
}

/// A deferred coefficient computation: value and the routes it used.
type Compute = Box<dyn Fn() -> Result<(String, Vec<&'static str>), CliError>>;

fn coeff(a: &CoeffArgs, ctx: &Context) -> Result<Output, CliError> {
    let (kind, cache_kind, indices, n, cache_key, compute): (
        &'static str,
        CacheKind,
        Vec<Vec<usize>>,
        Option<usize>,
        String,
        Compute,
    ) = match a.kind {
        CoeffKind::G => {
            let lambda_p = required(&a.lambda, "lambda", "coeff g")?.clone();
            let lambda = strict(&lambda_p, "lambda")?;
            let mu = required(&a.mu, "mu", "coeff g")?.clone();
            let cross = a.cross_check;
            let k = key(&[&lambda_p, &mu], None);
            let indices = vec![lambda.parts().to_vec(), mu.parts().to_vec()];
            let f = move || {
                let value = BigInt::from(g_coeff(&lambda, &mu));
                if !cross {
                    return Ok((value.to_string(), vec!["tableau"]));
                }
                let eta = g_row(&mu, GRoute::Eta)?.coeff(&lambda);
                let my = if lambda.weight() == mu.weight() {
                    g_from_my(&mu)?.coeff(&lambda)
                } else {
                    BigInt::zero()
                };
                agree(
                    &format!("g_{{{lambda:?},{mu:?}}}"),
                    &[("tableau", &value), ("eta", &eta), ("macdonald-you", &my)],
                )?;
                Ok((value.to_string(), vec!["tableau", "eta", "macdonald-you"]))
            };
            ("g", CacheKind::G, indices, None, k, Box::new(f))
        }
        CoeffKind::F | CoeffKind::E => {
            let name = if a.kind == CoeffKind::F { "coeff f" } else { "coeff e" };
            let mu_p = required(&a.mu, "mu", name)?.clone();
            let nu_p = required(&a.nu, "nu", name)?.clone();
            let lambda_p = required(&a.lambda, "lambda", name)?.clone();
            let (mu, nu, lambda) = (strict(&mu_p, "mu")?, strict(&nu_p, "nu")?, strict(&lambda_p, "lambda")?);
            let is_f = a.kind == CoeffKind::F;
            let cross = a.cross_check;
            let k = key(&[&mu_p, &nu_p, &lambda_p], None);
            let indices = vec![mu.parts().to_vec(), nu.parts().to_vec(), lambda.parts().to_vec()];
            let f = move || {
                let value = if is_f {
                    BigInt::from(f_coeff(&mu, &nu, &lambda))
                } else {
                    BigInt::from(e_coeff(&mu, &nu, &lambda)?)
                };
                if !cross {
                    return Ok((value.to_string(), vec!["tableau"]));
                }
                let e = e_via_product(&mu, &nu, &lambda)?;
                // Compare e with 2^{l(μ)+l(ν)−l(λ)} f rather than dividing.
                let scaled = match (is_f, (mu.len() + nu.len()).checked_sub(lambda.len())) {
                    (false, _) => value.clone(),
                    (true, Some(shift)) => &value << shift,
                    (true, None) => value.clone(),
                };
                agree("structure constant (as e)", &[("tableau", &scaled), ("q-product", &e)])?;
                Ok((value.to_string(), vec!["tableau", "q-product"]))
            };
            let (kind, ck) = if is_f { ("f", CacheKind::F) } else { ("e", CacheKind::E) };
            (kind, ck, indices, None, k, Box::new(f))
        }
        CoeffKind::Restrict => {
            let mu = required(&a.mu, "mu", "coeff restrict")?.clone();
            let lambda_p = required(&a.lambda, "lambda", "coeff restrict")?.clone();
            let lambda = strict(&lambda_p, "lambda")?;
            let n = a.n.unwrap_or(mu.weight().max(1));
            let cross = a.cross_check;
            let k = key(&[&mu, &lambda_p], Some(n));
            let indices = vec![mu.parts().to_vec(), lambda.parts().to_vec()];
            let f = move || {
                let routes: &[GRoute] = if cross { &GRoute::ALL } else { &[GRoute::Tableau] };
                let mut values = Vec::new();
                for &route in routes {
                    values.push((route_name(route), restrict_with(&mu, n, route)?.coeff(&lambda)));
                }
                agree("restriction coefficient", &values)?;
                Ok((values[0].1.to_string(), values.iter().map(|(r, _)| *r).collect()))
            };
            ("restrict", CacheKind::Restrict, indices, Some(n), k, Box::new(f))
        }
        CoeffKind::Pushforward => {
            let lambda_p = required(&a.lambda, "lambda", "coeff pushforward")?.clone();
            let lambda = strict(&lambda_p, "lambda")?;
            let mu = required(&a.mu, "mu", "coeff pushforward")?.clone();
            let n = *required(&a.n, "n", "coeff pushforward")?;
            let cross = a.cross_check;
            let k = key(&[&lambda_p, &mu], Some(n));
            let indices = vec![lambda.parts().to_vec(), mu.parts().to_vec()];
            let f = move || {
                let value = pushforward(&lambda, n)?.coeff(&mu);
                if !cross {
                    return Ok((value.to_string(), vec!["complement"]));
                }
                // ∫ i_*(σ'_λ) σ_{μ^★} = ∫ σ'_λ i^*(σ_{μ^★}).
                let star = mu.complement_box(n)?;
                let paired = if mu.fits_box(n) {
                    let class = SchubertExpansionLG::basis_class(n, lambda.clone())?;
                    pairing_lg(&class, &restrict_with(&star, n, GRoute::Tableau)?)?
                } else {
                    BigInt::zero()
                };
                agree("pushforward coefficient", &[("complement", &value), ("pairing", &paired)])?;
                Ok((value.to_string(), vec!["complement", "pairing"]))
            };
            ("pushforward", CacheKind::Pushforward, indices, Some(n), k, Box::new(f))
        }
    };

    // Cross-checked values bypass the cache so every route actually runs.
    let (value, routes) = if a.cross_check {
        let (value, routes) = compute()?;
        if let Some(hit) = ctx.cache.lookup(cache_kind, &cache_key) {
            agree("cached value", &[("cache", &hit), ("fresh", &value)])?;
        }
        (value, routes)
    } else {
        let mut routes = Vec::new();
        let value = ctx.cache.get_or_compute(cache_kind, &cache_key, || {
            let (v, r) = compute()?;
            routes = r;
            Ok(v)
        })?;
        if routes.is_empty() {
            routes.push("cache");
        }
        (value, routes)
    };

    let text = match ctx.format {
        Format::Text => format!("{value}\nroutes: {}\n", routes.join(", ")),
        Format::Json => {
            to_json(&CoeffOutput {
                kind,
                indices,
                n,
                value,
                routes,
            }) + "\n"
        }
    };
    Ok(Output::ok(text))
}

fn route_name(route: GRoute) -> &'static str {
    match route {
        GRoute::Tableau => "tableau",
        GRoute::Eta => "eta",
        GRoute::MacdonaldYou => "macdonald-you",
    }
}

fn render(json: &JsonExpansion, format: Format) -> String {
    match format {
        Format::Text => json.to_text() + "\n",
        Format::Json => to_json(json) + "\n",
    }
}

#[derive(Serialize)]
struct SignedTerm {
    sign: String,
    removed: Vec<usize>,
    remaining: Vec<usize>,
}

#[derive(Serialize)]
struct TermList {
    mu: Vec<usize>,
    variant: &'static str,
    terms: Vec<SignedTerm>,
}

fn expand(a: &ExpandArgs, ctx: &Context) -> Result<Output, CliError> {
    let json = match a.what {
        ExpandWhat::Eta => {
            let mu = required(&a.mu, "mu", "expand eta")?;
            let eta = expand_in_q(&eta_schur::<BigInt>(mu))?;
            if a.cross_check {
                let n = mu.frobenius().rank();
                let my = g_from_my(mu)?.map_coeffs(|_, c| c << n);
                let scaled = eta.map_coeffs(|_, c| c << n);
                if my != scaled {
                    return Err(CliError::Consistency(format!(
                        "η route gives {eta:?}, Macdonald–You route gives 2^{n}·{:?}",
                        g_from_my(mu)?
                    )));
                }
            }
            JsonExpansion::from_expansion(BasisTag::Q, &eta)
        }
        ExpandWhat::My => {
            let mu = required(&a.mu, "mu", "expand my")?;
            let variant = match a.variant {
                VariantArg::Ab => Variant::AB,
                VariantArg::Cd => Variant::CD,
            };
            if a.terms {
                return Ok(Output::ok(term_list(mu, variant, ctx.format)));
            }
            let e = my_expansion(mu, variant)?;
            if a.cross_check {
                let other = match variant {
                    Variant::AB => Variant::CD,
                    Variant::CD => Variant::AB,
                };
                if my_expansion(mu, other)? != e {
                    return Err(CliError::Consistency(format!("AB and CD sums differ for μ = {mu:?}")));
                }
            }
            JsonExpansion::from_expansion(BasisTag::Q, &e)
        }
        ExpandWhat::Restrict => {
            let mu = required(&a.mu, "mu", "expand restrict")?;
            let n = a.n.unwrap_or(mu.weight().max(1));
            let result = restrict_with(mu, n, GRoute::Tableau)?;
            if a.cross_check {
                for route in [GRoute::Eta, GRoute::MacdonaldYou] {
                    let other = restrict_with(mu, n, route)?;
                    if other != result {
                        return Err(CliError::Consistency(format!(
                            "restriction of σ_{mu:?}: tableau route {:?}, {} route {:?}",
                            result.expansion(),
                            route_name(route),
                            other.expansion()
                        )));
                    }
                }
            }
            result.to_json()
        }
        ExpandWhat::Pushforward => {
            let lambda = strict(required(&a.lambda, "lambda", "expand pushforward")?, "lambda")?;
            let n = *required(&a.n, "n", "expand pushforward")?;
            let result = pushforward(&lambda, n)?;
            if a.cross_check {
                let class = SchubertExpansionLG::basis_class(n, lambda.clone())?;
                for (mu, c) in result.terms() {
                    let star = mu.complement_box(n)?;
                    let paired = pairing_lg(&class, &restrict_with(&star, n, GRoute::Tableau)?)?;
                    agree(&format!("coefficient of σ_{mu:?}"), &[("complement", c), ("pairing", &paired)])?;
                }
            }
            result.to_json()
        }
        ExpandWhat::Q => {
            let lambda = strict(required(&a.lambda, "lambda", "expand q")?, "lambda")?;
            JsonExpansion::from_symfunc(&qfun_to_m::<BigInt>(&lambda))
        }
        ExpandWhat::P => {
            let lambda = strict(required(&a.lambda, "lambda", "expand p")?, "lambda")?;
            JsonExpansion::from_expansion(BasisTag::Schur, &expand_in_schur(&pfun_to_m::<BigInt>(&lambda)?))
        }
        ExpandWhat::Product => {
            let mu = strict(required(&a.mu, "mu", "expand product")?, "mu")?;
            let nu = strict(required(&a.nu, "nu", "expand product")?, "nu")?;
            let product = (&*q_function(&mu) * &*q_function(&nu)).to_m();
            let product = product
                .try_cast::<BigInt>()
                .ok_or_else(|| CliError::Consistency("non-integral Q product".into()))?;
            JsonExpansion::from_expansion(BasisTag::Q, &expand_in_q(&product)?)
        }
    };
    Ok(Output::ok(render(&json, ctx.format)))
}

fn term_list(mu: &Partition, variant: Variant, format: Format) -> String {
    let mut terms = Vec::new();
    for t in my_terms(mu, variant) {
        if let Some((sign, left, right)) = t.straightened() {
            terms.push((sign, left, right));
        }
    }
    match format {
        Format::Text => {
            let mut out = String::new();
            for (i, (sign, left, right)) in terms.iter().enumerate() {
                let sign = sign.to_string();
                if i > 0 || sign == "-" {
                    out.push_str(if i == 0 { "-" } else if sign == "-" { " - " } else { " + " });
                }
                let factors: Vec<String> = [left, right]
                    .iter()
                    .filter(|f| !f.is_empty())
                    .map(|f| format!("Q({f})"))
                    .collect();
                out.push_str(&if factors.is_empty() { "1".to_string() } else { factors.concat() });
            }
            if terms.is_empty() {
                out.push('0');
            }
            out + "\n"
        }
        Format::Json => {
            let list = TermList {
                mu: mu.parts().to_vec(),
                variant: match variant {
                    Variant::AB => "ab",
                    Variant::CD => "cd",
                },
                terms: terms
                    .into_iter()
                    .map(|(sign, left, right)| SignedTerm {
                        sign: sign.to_string(),
                        removed: left.parts().to_vec(),
                        remaining: right.parts().to_vec(),
                    })
                    .collect(),
            };
            to_json(&list) + "\n"
        }
    }
}

fn verify_cmd(a: &VerifyArgs, ctx: &Context) -> Result<Output, CliError> {
    let identity = match (a.identity, a.prop) {
        (Some(id), None) => id,
        (None, Some(p)) => crate::args::Identity::from_prop(p)
            .ok_or_else(|| CliError::Usage(format!("--prop {p}: expected 3, 4, 5 or 6")))?,
        (Some(_), Some(_)) => return Err(CliError::Usage("give an identity or --prop, not both".into())),
        (None, None) => return Err(CliError::Usage("`verify` needs an identity or --prop".into())),
    };
    let scope = Scope {
        mu: a.mu.clone(),
        max_weight: a.max_weight,
        n: a.n,
        budget: a.budget_secs.map(Duration::from_secs),
    };
    let report = verify::run(identity, &scope, ctx.jobs)?;
    let status = if report.all_passed() {
        Status::Ok
    } else {
        Status::IdentityFailure
    };
    let text = match ctx.format {
        Format::Json => to_json(&report) + "\n",
        Format::Text => {
            let mut out = report.summary_line() + "\n";
            for f in report.failures() {
                out.push_str(&format!(
                    "  failed: {}  [{}]\n",
                    f.input,
                    f.detail.as_deref().unwrap_or("")
                ));
            }
            if report.incomplete {
                out.push_str("  budget exhausted before every instance ran\n");
            }
            out
        }
    };
    Ok(Output { text, status })
}

fn shape_data(a: &ShapeArgs) -> Result<HookData, CliError> {
    if a.shifted {
        Ok(hooks_shifted(&strict(&a.shape, "shape")?))
    } else {
        Ok(hooks_ordinary(&a.shape))
    }
}

/// Hook product against the parts formula and the specialization.
fn check_hooks(a: &ShapeArgs, h: &HookData) -> Result<(), CliError> {
    let (parts, special) = if a.shifted {
        let lambda = strict(&a.shape, "shape")?;
        (gbar_parts(&lambda), specialize_q(&qfun_to_m::<Rational>(&lambda))?)
    } else {
        (fbar_parts(&a.shape, a.shape.len())?, specialize_schur(&a.shape))
    };
    agree(
        "hook product",
        &[("hooks", &h.bar), ("parts", &parts), ("specialization", &special)],
    )
}

fn check_degree(a: &ShapeArgs, h: &HookData) -> Result<(), CliError> {
    let count = if a.shifted {
        count_shifted_syt(&strict(&a.shape, "shape")?)?
    } else {
        count_syt(&a.shape)?
    };
    agree("degree", &[("hooks", &h.degree()), ("enumeration", &count)])
}

#[derive(Serialize)]
struct HookOutput {
    shape: Vec<usize>,
    shifted: bool,
    hooks: Vec<[usize; 3]>,
    bar: String,
    degree: String,
}

fn hooks(a: &ShapeArgs, ctx: &Context) -> Result<Output, CliError> {
    let h = shape_data(a)?;
    if a.cross_check {
        check_hooks(a, &h)?;
        check_degree(a, &h)?;
    }
    let key = format!("{}{}", a.shape.to_exponent_string(), if a.shifted { ";shifted" } else { "" });
    let bar = ctx.cache.get_or_compute(CacheKind::Hook, &key, || Ok(format_exact(&h.bar)))?;
    let text = match ctx.format {
        Format::Json => {
            to_json(&HookOutput {
                shape: h.shape.parts().to_vec(),
                shifted: h.shifted,
                hooks: h.hooks.iter().map(|&((r, c), x)| [r, c, x]).collect(),
                bar,
                degree: h.degree().to_string(),
            }) + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            let mut row = usize::MAX;
            for &((r, c), x) in &h.hooks {
                if r != row {
                    if row != usize::MAX {
                        out.push('\n');
                    }
                    row = r;
                    out.push_str(&"   ".repeat(if h.shifted { c } else { 0 }));
                } else {
                    out.push(' ');
                }
                out.push_str(&format!("{x:>2}"));
            }
            out.push('\n');
            out.push_str(&format!("product 1/h = {bar}\n"));
            out
        }
    };
    Ok(Output::ok(text))
}

fn degree(a: &ShapeArgs, ctx: &Context) -> Result<Output, CliError> {
    let h = shape_data(a)?;
    if a.cross_check {
        check_degree(a, &h)?;
    }
    let d = h.degree();
    let text = match ctx.format {
        Format::Text => format!("{d}\n"),
        Format::Json => {
            to_json(&json!({
                "shape": h.shape.parts(),
                "shifted": h.shifted,
                "degree": d.to_string(),
            })) + "\n"
        }
    };
    Ok(Output::ok(text))
}

fn seq_text(s: &IntSequence) -> String {
    s.to_string()
}

fn frobenius(a: &FrobeniusArgs, ctx: &Context) -> Result<Output, CliError> {
    let form = a.mu.frobenius();
    let (x, y) = form.ab_sequences();
    let (c, d) = form.cd_sequences();
    let ab = qschur::macdonald_you::interleave(&x, &y)?;
    let cd = qschur::macdonald_you::interleave(&c, &d)?;
    let text = match ctx.format {
        Format::Text => {
            let sign = |s: &IntSequence| match straighten(s) {
                Some((sign, l)) => format!("{sign}({l})"),
                None => "0".to_string(),
            };
            format!(
                "form {form}\nrank {}\nA {}\nB {}\nC {}\nD {}\nA#B {}\nC#D {}\nstraightened A#B {}\nstraightened C#D {}\n",
                form.rank(),
                seq_text(&x),
                seq_text(&y),
                seq_text(&c),
                seq_text(&d),
                seq_text(&ab),
                seq_text(&cd),
                sign(&ab),
                sign(&cd),
            )
        }
        Format::Json => {
            to_json(&json!({
                "mu": a.mu.parts(),
                "alpha": form.alpha,
                "beta": form.beta,
                "rank": form.rank(),
                "A": x.0, "B": y.0, "C": c.0, "D": d.0,
                "AB": ab.0, "CD": cd.0,
            })) + "\n"
        }
    };
    Ok(Output::ok(text))
}
