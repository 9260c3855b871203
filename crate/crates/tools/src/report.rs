//! Structured-text and JSON rendering of certificates, bound reports,
//! distribution audits, and explorer results. Text output is a
//! machine-readable key/value tree; values that come from exact
//! arithmetic are printed as "num/den" fractions, with a 12-significant-
//! digit decimal beside them where a decimal aids reading.

use logconc_core::bounds::BoundReport;
use logconc_core::certify::Certificate;
use logconc_core::rational::{self, Rational};
use serde_json::{json, Value};

use crate::conjecture::{ConjectureReport, ExplorerResult, Verdict};
use crate::distributions::CheckResult;

/// 12-significant-digit decimal rendering.
pub fn dec12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{:.11e}", x);
    // normalize exponent form like 2.67608218582e-3
    s
}

pub fn frac_and_dec(r: &Rational) -> String {
    format!("{} ({})", rational::to_fraction_string(r), dec12(rational::to_f64(r)))
}

pub fn certificates_to_text(certs: &[Certificate]) -> String {
    let mut out = String::new();
    for c in certs {
        out.push_str("certificate:\n");
        out.push_str(&format!("  name: {}\n", c.name));
        out.push_str(&format!("  status: {}\n", c.status.as_str()));
        for s in &c.steps {
            out.push_str("  step:\n");
            out.push_str(&format!("    description: {}\n", s.description));
            out.push_str(&format!("    claim: {}\n", s.claim));
            out.push_str(&format!("    passed: {}\n", s.passed));
            for (k, v) in &s.witnesses {
                out.push_str(&format!("    witness: {} = {}\n", k, v));
            }
        }
    }
    out
}

pub fn certificates_to_json(certs: &[Certificate]) -> Value {
    Value::Array(
        certs
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": c.status.as_str(),
                    "steps": c.steps.iter().map(|s| json!({
                        "description": s.description,
                        "claim": s.claim,
                        "passed": s.passed,
                        "witnesses": s.witnesses.iter()
                            .map(|(k, v)| json!({"name": k, "value": v}))
                            .collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn bounds_to_text(r: &BoundReport) -> String {
    let mut out = String::new();
    out.push_str("bounds:\n");
    out.push_str(&format!("  delta: {}\n", frac_and_dec(&r.delta)));
    out.push_str(&format!("  p: {}\n", frac_and_dec(&r.p)));
    out.push_str(&format!("  p1: {}\n", frac_and_dec(&r.p1)));
    out.push_str(&format!("  p1_branch: {}\n", r.p1_branch));
    out.push_str(&format!("  b_star: {}\n", frac_and_dec(&r.b_star)));
    out.push_str(&format!("  ratio_r1: {}\n", frac_and_dec(&r.ratio_r1)));
    if let Some(s) = &r.shifted {
        out.push_str("  shifted:\n");
        out.push_str(&format!("    u: {}\n", frac_and_dec(&s.u)));
        out.push_str(&format!("    h: {}\n", frac_and_dec(&s.h)));
        out.push_str(&format!("    branch: {}\n", s.branch));
        out.push_str(&format!("    p1_shifted: {}\n", frac_and_dec(&s.p1_shifted)));
        out.push_str(&format!("    p_u: {}\n", frac_and_dec(&s.p_u)));
    }
    out
}

pub fn check_results_to_text(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str("distribution:\n");
        out.push_str(&format!("  family: {}\n", r.tag));
        out.push_str(&format!("  f0: {}\n", dec12(r.f0)));
        out.push_str(&format!("  mean_abs: {}\n", dec12(r.mean_abs)));
        out.push_str(&format!("  median: {}\n", dec12(r.median)));
        for row in &r.rows {
            out.push_str(&format!(
                "  row: delta={} P={} p={} margin={}\n",
                dec12(row.delta),
                dec12(row.lhs),
                dec12(row.rhs),
                dec12(row.margin)
            ));
        }
        for v in &r.violations {
            out.push_str(&format!("  violation: {}\n", v));
        }
    }
    out
}

pub fn check_results_to_csv(results: &[CheckResult]) -> String {
    let mut out = String::from("family,delta,P,p,margin\n");
    for r in results {
        for row in &r.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.tag,
                dec12(row.delta),
                dec12(row.lhs),
                dec12(row.rhs),
                dec12(row.margin)
            ));
        }
    }
    out
}

pub fn explorer_to_text(res: &ExplorerResult, cmp: &ConjectureReport) -> String {
    let mut out = String::new();
    out.push_str("conjecture:\n");
    out.push_str(&format!("  delta: {}\n", dec12(res.config.delta)));
    out.push_str(&format!("  knots: {}\n", res.config.knots));
    out.push_str(&format!("  support: [-{}, {}]\n", res.config.a, res.config.b));
    out.push_str(&format!("  restarts: {}\n", res.config.restarts));
    out.push_str(&format!("  seed: {}\n", res.config.seed));
    out.push_str(&format!("  best: {}\n", dec12(res.best)));
    out.push_str(&format!("  p_floor: {}\n", dec12(res.p_floor)));
    out.push_str(&format!("  conjectured: {}\n", dec12(res.conjectured)));
    out.push_str(&format!("  anchor: {}\n", dec12(res.anchor)));
    out.push_str(&format!("  gap: {}\n", dec12(cmp.gap)));
    out.push_str(&format!(
        "  verdict: {}\n",
        match cmp.verdict {
            Verdict::Consistent => "consistent",
            Verdict::CounterexampleCandidate => "counterexample candidate",
        }
    ));
    out.push_str(&format!("  mu: {}\n", dec12(res.mu)));
    out.push_str(&format!("  sigma: {}\n", dec12(res.sigma)));
    for t in &res.traces {
        out.push_str(&format!(
            "  restart: index={} start={} final={} sweeps={}\n",
            t.index,
            dec12(t.start_objective),
            dec12(t.final_objective),
            t.sweeps
        ));
    }
    out.push_str("  density:\n");
    for (i, v) in res.density.values.iter().enumerate() {
        out.push_str(&format!(
            "    knot: x={} phi={}\n",
            dec12(res.density.knot(i)),
            dec12(*v)
        ));
    }
    out
}
