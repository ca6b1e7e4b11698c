//! Verification suites: exhaustive sweeps with one line per case and a
//! deterministic summary, optionally spread over a worker pool.

use serde_json::{json, Value};

use jacklr::alpha::AlphaRat;
use jacklr::hooks::{rect_union_assignment, Variant};
use jacklr::jack::{hall_inner, jack_j, jack_norm};
use jacklr::lattice::{flip_rule_check, mirror_rule_check, verify_sum_product};
use jacklr::lr::stanley_coeff;
use jacklr::partition::{
    decompose_wrt_rectangle, partitions_in_rectangle, partitions_of, Partition,
};

use crate::{Format, OutputOpts};

struct CaseResult {
    label: String,
    ok: bool,
    /// Structured detail for JSON output (reports with witnesses).
    detail: Option<Value>,
}

impl CaseResult {
    fn plain(label: String, ok: bool) -> Self {
        CaseResult {
            label,
            ok,
            detail: None,
        }
    }
}

/// Runs `f` over the cases on `jobs` workers; results keep input order.
fn run_cases<T, F>(cases: Vec<T>, jobs: usize, f: F) -> Vec<CaseResult>
where
    T: Send + Sync,
    F: Fn(&T) -> CaseResult + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 || cases.len() < 2 {
        return cases.iter().map(&f).collect();
    }
    let chunk = cases.len().div_ceil(jobs);
    let mut indexed: Vec<(usize, CaseResult)> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (w, slice) in cases.chunks(chunk).enumerate() {
            let f = &f;
            handles.push(scope.spawn(move || {
                slice
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (w * chunk + i, f(c)))
                    .collect::<Vec<_>>()
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, r)| r).collect()
}

/// Prints the suite report; returns whether every case passed.
fn report(suite: &str, params: Value, results: Vec<CaseResult>, out: &OutputOpts) -> bool {
    let ok = results.iter().all(|r| r.ok);
    match out.format {
        Format::Text => {
            for r in &results {
                println!("{} {}", if r.ok { "ok  " } else { "FAIL" }, r.label);
            }
            println!(
                "{suite}: {} of {} cases verified{}",
                results.iter().filter(|r| r.ok).count(),
                results.len(),
                if ok { "" } else { " (FAILURES ABOVE)" }
            );
        }
        Format::Json => {
            let doc = json!({
                "suite": suite,
                "params": params,
                "cases": results
                    .iter()
                    .map(|r| {
                        let mut v = json!({"case": r.label, "ok": r.ok});
                        if let Some(d) = &r.detail {
                            v["report"] = d.clone();
                        }
                        v
                    })
                    .collect::<Vec<_>>(),
                "total": results.len(),
                "ok": ok,
            });
            println!("{doc}");
        }
    }
    ok
}

pub fn sum_product(max_size: usize, out: &OutputOpts) -> bool {
    let mut cases = Vec::new();
    for total in 0..=max_size {
        for a in 0..=total {
            for mu in partitions_of(a) {
                for nu in partitions_of(total - a) {
                    cases.push((mu.clone(), nu));
                }
            }
        }
    }
    let json_mode = out.format == Format::Json;
    let results = run_cases(cases, out.jobs, |(mu, nu)| {
        let r = verify_sum_product(mu, nu);
        CaseResult {
            label: format!("sum-product mu={mu} nu={nu}"),
            ok: r.holds,
            detail: json_mode.then(|| jacklr::json::sum_product_report_to_json(&r)),
        }
    });
    report(
        "sum-product",
        json!({"max_size": max_size}),
        results,
        out,
    )
}

pub fn norms(max_size: usize, out: &OutputOpts) -> bool {
    let mut cases = Vec::new();
    for n in 1..=max_size {
        cases.extend(partitions_of(n));
    }
    let results = run_cases(cases, out.jobs, |lambda| {
        let j = jack_j(lambda);
        let ok = hall_inner(&j, &j) == AlphaRat::from_poly(jack_norm(lambda));
        CaseResult::plain(format!("norm lambda={lambda}"), ok)
    });
    report("norms", json!({"max_size": max_size}), results, out)
}

pub fn flip(m: usize, n: usize, out: &OutputOpts) -> bool {
    let cases = partitions_in_rectangle(m, n);
    let results = run_cases(cases, out.jobs, |sigma| {
        let mirror = mirror_rule_check(sigma, m, n).unwrap_or(false);
        let flips = sigma
            .inner_corners()
            .into_iter()
            .all(|t| flip_rule_check(sigma, t, m, n).unwrap_or(false));
        CaseResult::plain(format!("flip/mirror sigma={sigma}"), mirror && flips)
    });
    report("flip", json!({"m": m, "n": n}), results, out)
}

pub fn rect_union(max_size: usize, out: &OutputOpts) -> bool {
    let mut cases = Vec::new();
    for m in 1..=4usize {
        for n in 1..=4usize {
            let rect = Partition::rectangle(m, n);
            for size in 0..=max_size {
                for mu in partitions_of(size) {
                    if decompose_wrt_rectangle(&mu, m, n).is_err() {
                        continue;
                    }
                    if mu.union(&rect).size() > max_size {
                        continue;
                    }
                    cases.push((mu, m, n));
                }
            }
        }
    }
    let results = run_cases(cases, out.jobs, |(mu, m, n)| {
        let label = format!("rect-union mu={mu} rect={m}x{n}");
        let ok = (|| {
            let d = decompose_wrt_rectangle(mu, *m, *n).ok()?;
            let lambda = mu.union(&Partition::rectangle(*m, *n));
            let want = stanley_coeff(mu, &d.sigma_bar, &lambda).ok()?;
            for variant in [Variant::A, Variant::B] {
                let sp = rect_union_assignment(mu, *m, *n, variant).ok()?;
                if AlphaRat::from_poly(sp.value.clone()) != want || !sp.is_balanced() {
                    return None;
                }
            }
            Some(())
        })()
        .is_some();
        CaseResult::plain(label, ok)
    });
    report("rect-union", json!({"max_size": max_size}), results, out)
}
