//! Text and JSON rendering for CLI results.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use jacklr::alpha::{expand_factors, factor_linear, AlphaPoly, AlphaRat, Rational};
use jacklr::hooks::{HookAssignment, StanleyProduct};
use jacklr::jack::{jack_j, jack_j_powersum, jack_norm, SymFunc};
use jacklr::json as wire;
use jacklr::lr::jack_lr;
use jacklr::partition::{BoxCoord, Partition};

use crate::{Format, OutputOpts};

/// Factoring window: hook brackets of a degree-n coefficient live well
/// inside this bound.
fn factor_bound(n: usize) -> i64 {
    n as i64 + 2
}

/// Parenthesizes a coefficient only when it is a sum or a fraction.
fn coeff_str(c: &AlphaRat, var: &str) -> String {
    let s = c.to_string_with(var);
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

fn symfunc_line(name: &str, lambda: &Partition, f: &SymFunc, var: &str) -> String {
    let sym = f.basis().symbol();
    let terms: Vec<String> = f
        .terms_revlex()
        .iter()
        .map(|(p, c)| {
            if c.is_one() {
                format!("{sym}{p}")
            } else {
                format!("{}*{sym}{p}", coeff_str(c, var))
            }
        })
        .collect();
    format!("{name}{lambda} = {}", terms.join(" + "))
}

fn factored_string(c: &Rational, factors: &BTreeMap<BoxCoord, usize>) -> String {
    let mut parts = vec![c.to_string()];
    for (b, m) in factors {
        if *m == 1 {
            parts.push(format!("[{},{}]", b.x, b.y));
        } else {
            parts.push(format!("[{},{}]^{}", b.x, b.y, m));
        }
    }
    parts.join(" ")
}

fn factored_json(p: &AlphaPoly, bound: i64) -> Value {
    match factor_linear(p, bound) {
        Some((c, factors)) => {
            debug_assert_eq!(expand_factors(&c, &factors), *p);
            wire::factored_to_json(&c, &factors)
        }
        None => Value::Null,
    }
}

pub fn expand(lambda: &Partition, out: &OutputOpts) {
    let monomial = jack_j(lambda);
    let powersum = jack_j_powersum(lambda);
    match out.format {
        Format::Text => {
            println!("{}", symfunc_line("J", lambda, &monomial, out.var()));
            println!("{}", symfunc_line("J", lambda, &powersum, out.var()));
        }
        Format::Json => {
            let doc = json!({
                "lambda": wire::partition_to_json(lambda),
                "monomial": wire::symfunc_to_json(&monomial),
                "powersum": wire::symfunc_to_json(&powersum),
            });
            println!("{doc}");
        }
    }
}

pub fn lr_table(mu: &Partition, nu: &Partition, out: &OutputOpts) {
    let table = jack_lr(mu, nu);
    let n = mu.size() + nu.size();
    let mut gammas: Vec<&Partition> = table.entries().keys().collect();
    gammas.sort_by(|a, b| jacklr::partition::revlex_desc(a, b));
    match out.format {
        Format::Text => {
            for gamma in gammas {
                let g = table.get(gamma);
                let stanley = stanley_poly(&g, gamma);
                let mut line = format!(
                    "gamma={gamma} g={} stanley={}",
                    g.to_string_with(out.var()),
                    stanley.to_string_with(out.var())
                );
                if let Some((c, factors)) = factor_linear(&stanley, factor_bound(n)) {
                    line.push_str(&format!(" factored={}", factored_string(&c, &factors)));
                }
                println!("{line}");
            }
        }
        Format::Json => {
            let entries: Vec<Value> = gammas
                .iter()
                .map(|gamma| {
                    let g = table.get(gamma);
                    let stanley = stanley_poly(&g, gamma);
                    json!({
                        "gamma": wire::partition_to_json(gamma),
                        "g": wire::alpharat_to_json(&g),
                        "stanley": wire::poly_to_json(&stanley),
                        "factored": factored_json(&stanley, factor_bound(n)),
                    })
                })
                .collect();
            let doc = json!({
                "mu": wire::partition_to_json(mu),
                "nu": wire::partition_to_json(nu),
                "entries": entries,
            });
            println!("{doc}");
        }
    }
}

/// `g * <J_gamma, J_gamma>`, which is a polynomial in alpha.
fn stanley_poly(g: &AlphaRat, gamma: &Partition) -> AlphaPoly {
    let prod = g * &AlphaRat::from_poly(jack_norm(gamma));
    prod.as_poly()
        .cloned()
        .expect("Stanley coefficients are polynomials in alpha")
}

pub fn stanley(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    value: &AlphaRat,
    out: &OutputOpts,
) {
    let bound = factor_bound(lambda.size());
    let poly = value
        .as_poly()
        .cloned()
        .expect("Stanley coefficients are polynomials in alpha");
    match out.format {
        Format::Text => {
            println!(
                "stanley(mu={mu}, nu={nu}, lambda={lambda}) = {}",
                poly.to_string_with(out.var())
            );
            if let Some((c, factors)) = factor_linear(&poly, bound) {
                println!("factored = {}", factored_string(&c, &factors));
            }
        }
        Format::Json => {
            let doc = json!({
                "mu": wire::partition_to_json(mu),
                "nu": wire::partition_to_json(nu),
                "lambda": wire::partition_to_json(lambda),
                "value": wire::poly_to_json(&poly),
                "factored": factored_json(&poly, bound),
            });
            println!("{doc}");
        }
    }
}

fn assignment_json(a: &HookAssignment) -> Value {
    json!({
        "shape": wire::partition_to_json(a.shape()),
        "choices": a
            .choices()
            .iter()
            .map(|(b, c)| json!([b.x, b.y, c.to_string()]))
            .collect::<Vec<_>>(),
    })
}

pub fn stanley_product(sp: &StanleyProduct, lr_form: bool, out: &OutputOpts) {
    let bound = factor_bound(sp.lambda_factor.shape().size());
    match out.format {
        Format::Text => {
            println!("mu factor:\n{}", sp.mu_factor.grid());
            println!("nu factor:\n{}", sp.nu_factor.grid());
            println!("lambda factor:\n{}", sp.lambda_factor.grid());
            println!("value = {}", sp.value.to_string_with(out.var()));
            if let Some((c, factors)) = factor_linear(&sp.value, bound) {
                println!("factored = {}", factored_string(&c, &factors));
            }
            if lr_form {
                let frac = sp.as_lr_fraction();
                println!(
                    "lr denominator (hooks flipped):\n{}",
                    frac.denominator.grid()
                );
                println!("lr value = {}", frac.value().to_string_with(out.var()));
            }
        }
        Format::Json => {
            let mut doc = json!({
                "mu_factor": assignment_json(&sp.mu_factor),
                "nu_factor": assignment_json(&sp.nu_factor),
                "lambda_factor": assignment_json(&sp.lambda_factor),
                "value": wire::poly_to_json(&sp.value),
                "factored": factored_json(&sp.value, bound),
            });
            if lr_form {
                let frac = sp.as_lr_fraction();
                doc["lr_denominator"] = assignment_json(&frac.denominator);
                doc["lr_value"] = wire::alpharat_to_json(&frac.value());
            }
            println!("{doc}");
        }
    }
}
