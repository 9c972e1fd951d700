use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use varwreath::oracle::{verify_items, ShieldCheck};
use varwreath::shield::params_from_chain;
use varwreath::{
    baumslag_obstruction, decide_equal, fingerprint, kp_series, parse_abelian, parse_passive_items,
    separation_witness, AbelianGroupSpec, Cardinal, DecisionInput, Error, Fingerprint, PassiveGroupSpec,
    PrimaryFactor, SeparationWitness, Verdict,
};

use crate::report::{Exit, Report};
use crate::DecideArgs;

type Outcome = Result<Report, Report>;

fn abelian(arg: &str, text: &str) -> Result<AbelianGroupSpec, Report> {
    parse_abelian(text).map_err(|e| Report::from_error(&e, Some((arg, text))))
}

fn passive(arg: &str, text: &str) -> Result<PassiveGroupSpec, Report> {
    parse_passive_items(text)
        .and_then(PassiveGroupSpec::from_items)
        .map_err(|e| Report::from_error(&e, Some((arg, text))))
}

fn lib<T>(r: varwreath::Result<T>) -> Result<T, Report> {
    r.map_err(|e| Report::from_error(&e, None))
}

fn cardinal_json(c: Cardinal) -> Value {
    match c.finite() {
        Some(n) => json!(n),
        None => json!(c.to_string()),
    }
}

fn cycle(p: u64, u: u32) -> String {
    PrimaryFactor::finite(p, u, 1).to_string()
}

pub fn parse(expr: &str) -> Report {
    parse_inner(expr).unwrap_or_else(|r| r)
}

fn parse_inner(expr: &str) -> Outcome {
    let b = abelian("expression", expr)?;
    if b.is_trivial() {
        return Ok(Report::new(
            Exit::Success,
            json!({ "input": expr, "normalized": "1", "trivial": true, "finite": true, "exponent": 1, "primes": [] }),
            "trivial group\n".into(),
        ));
    }
    let exponent = lib(b.exponent())?;
    let mut text = format!("normalized: {b}\nexponent: {exponent}\n");
    let mut primes = Vec::new();
    for p in b.primes() {
        let component = b.p_component(p);
        let factors = component.factors();
        let first_infinite = factors.iter().position(|f| f.mult.is_infinite());
        let _ = writeln!(text, "p = {p}\n  {:>3}  {:>3}  {}", "i", "u", "multiplicity");
        for (i, f) in factors.iter().enumerate() {
            let _ = writeln!(text, "  {:>3}  {:>3}  {}", i + 1, f.u, f.mult);
        }
        match first_infinite {
            Some(k) => {
                let _ = writeln!(text, "  first infinite factor: {} (i = {})", factors[k], k + 1);
            }
            None => text.push_str("  no infinite factor\n"),
        }
        primes.push(json!({
            "p": p,
            "factors": factors
                .iter()
                .enumerate()
                .map(|(i, f)| json!({ "i": i + 1, "u": f.u, "mult": cardinal_json(f.mult) }))
                .collect::<Vec<_>>(),
            "first_infinite": first_infinite.map(|k| k + 1),
        }));
    }
    Ok(Report::new(
        Exit::Success,
        json!({
            "input": expr,
            "normalized": b.to_string(),
            "trivial": false,
            "finite": b.is_finite(),
            "exponent": exponent,
            "primes": primes,
        }),
        text,
    ))
}

fn fingerprint_text(f: &Fingerprint) -> String {
    let class = match f.class {
        Some(c) => format!("class {c}"),
        None => "not nilpotent".into(),
    };
    let solubility = match f.solubility_bound {
        Some(s) => format!("solubility <= {s}"),
        None => "solubility unknown".into(),
    };
    format!("exponent {}, {class}, {solubility}", f.exponent)
}

pub fn classify(passive_text: &str, active_text: &str) -> Report {
    classify_inner(passive_text, active_text).unwrap_or_else(|r| r)
}

fn classify_inner(passive_text: &str, active_text: &str) -> Outcome {
    let a = passive("--passive", passive_text)?;
    let b = abelian("--active", active_text)?;
    let fp = lib(fingerprint(&a, &b))?;
    let mut text = format!("A Wr B with A = {a}, B = {b}\n");
    if let Some(reason) = lib(baumslag_obstruction(&a, &b))? {
        let _ = writeln!(text, "not nilpotent (Baumslag: {reason})");
        let _ = writeln!(text, "exponent = {}", fp.exponent);
        if let Some(s) = fp.solubility_bound {
            let _ = writeln!(text, "solubility bound = {s}");
        }
        return Ok(Report::new(
            Exit::Hypothesis,
            json!({
                "passive": a.to_string(),
                "active": b.to_string(),
                "nilpotent": false,
                "obstruction": reason,
                "exponent": fp.exponent,
                "solubility_bound": fp.solubility_bound,
            }),
            text,
        ));
    }
    let part = &a.parts()[0];
    let p = part.p();
    let chain = lib(kp_series(&b, p))?;
    let params = lib(params_from_chain(&chain))?;
    let class = lib(params.class_for(part))?;

    let _ = writeln!(text, "K_{p}-series of B:");
    for (i, term) in chain.terms.iter().enumerate() {
        let _ = writeln!(text, "  K_{} = {term}", i + 1);
    }
    let _ = writeln!(text, "d = {}", params.d);
    let e: Vec<String> = params.e.iter().enumerate().map(|(s, e)| format!("e({}) = {e}", s + 1)).collect();
    let _ = writeln!(text, "{}", e.join(", "));
    let _ = writeln!(text, "a = {}, b = {}", params.a, params.b);
    let s: Vec<String> = part.s().iter().enumerate().map(|(h, s)| format!("s({}) = {s}", h + 1)).collect();
    let _ = writeln!(text, "{}", s.join(", "));
    let terms: Vec<String> = part
        .s()
        .iter()
        .enumerate()
        .map(|(h, &s)| format!("{}", params.a * (h as u64 + 1) + u64::from(s - 1) * params.b))
        .collect();
    let _ = writeln!(text, "class = max{{{}}} = {class}", terms.join(", "));
    let _ = writeln!(text, "exponent = {}", fp.exponent);
    if let Some(s) = fp.solubility_bound {
        let _ = writeln!(text, "solubility bound = {s}");
    }
    Ok(Report::new(
        Exit::Success,
        json!({
            "passive": a.to_string(),
            "active": b.to_string(),
            "p": p,
            "nilpotent": true,
            "chain": chain.terms.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "d": params.d,
            "e": params.e,
            "a": params.a,
            "b": params.b,
            "s": part.s(),
            "class": class,
            "exponent": fp.exponent,
            "solubility_bound": fp.solubility_bound,
        }),
        text,
    ))
}

fn decision_input(args: &DecideArgs) -> Result<DecisionInput, Report> {
    Ok(DecisionInput {
        a1: passive("--a1", &args.a1)?,
        a2: passive("--a2", &args.a2)?,
        b1: abelian("--b1", &args.b1)?,
        b2: abelian("--b2", &args.b2)?,
        assert_passive_var_equal: args.assert_var_equal,
    })
}

fn union_primes(b1: &AbelianGroupSpec, b2: &AbelianGroupSpec) -> BTreeSet<u64> {
    b1.primes().into_iter().chain(b2.primes()).collect()
}

fn witness_json(w: &SeparationWitness) -> Value {
    let mut v = serde_json::to_value(w).expect("witness serializes");
    v["reduced_b1"] = json!(w.reduced_b1.to_string());
    v["reduced_b2"] = json!(w.reduced_b2.to_string());
    v["swapped"] = json!(w.swapped);
    v["separating_variety"] = json!(w.separating.to_string());
    v
}

/// Sides named as in the input: the dominant side of the witness is `B2`
/// when `swapped`.
fn witness_lines(w: &SeparationWitness) -> String {
    let (big, small) = if w.swapped { ("2", "1") } else { ("1", "2") };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "prime {}: first divergence at factor t = {}, w = {} (cycle {})",
        w.p,
        w.t,
        w.w,
        cycle(w.p, w.w)
    );
    let _ = writeln!(text, "  more copies of {} in B{big}", cycle(w.p, w.w));
    let _ = writeln!(
        text,
        "  reduced active groups: B{big} -> {}, B{small} -> {}",
        w.reduced_b1, w.reduced_b2
    );
    let _ = writeln!(
        text,
        "  reduced classes: {} > {}",
        w.reduced_class_b1, w.reduced_class_b2
    );
    let _ = writeln!(
        text,
        "  A{small} Wr B{small} lies in {}, A{big} Wr B{big} does not",
        w.separating
    );
    text
}

pub fn decide(args: &DecideArgs) -> Report {
    decide_inner(args).unwrap_or_else(|r| r)
}

fn decide_inner(args: &DecideArgs) -> Outcome {
    let input = decision_input(args)?;
    let d = lib(decide_equal(&input))?;
    let b_primes = union_primes(&input.b1, &input.b2);
    let ignored: Vec<u64> = match d.verdict {
        Verdict::NotApplicable(_) => Vec::new(),
        _ => input.a1.primes().into_iter().filter(|p| !b_primes.contains(p)).collect(),
    };

    let mut text = String::from("hypotheses:\n");
    for h in &d.hypotheses {
        let mark = if h.holds { "ok" } else { "FAIL" };
        let _ = writeln!(text, "  [{mark}] {}: {}", h.name, h.detail);
    }
    if !d.per_prime.is_empty() {
        text.push_str("per prime:\n");
        for v in &d.per_prime {
            if v.equivalent {
                let _ = writeln!(text, "  p={}: equivalent", v.p);
            } else {
                let _ = writeln!(
                    text,
                    "  p={}: NOT equivalent (t={}, w={})",
                    v.p,
                    v.t.unwrap_or_default(),
                    v.w.unwrap_or_default()
                );
            }
        }
    }
    if !ignored.is_empty() {
        let ignored: Vec<String> = ignored.iter().map(u64::to_string).collect();
        let _ = writeln!(text, "ignored primes (divide m, not n): {}", ignored.join(", "));
    }
    let conclusion = match &d.verdict {
        Verdict::Equal => "varieties coincide".to_string(),
        Verdict::Unequal => "varieties distinct".to_string(),
        Verdict::NotApplicable(reason) => format!("criterion not applicable: {reason}"),
    };
    let _ = writeln!(text, "verdict: {} ({conclusion})", d.verdict.as_str());
    if let Some(w) = &d.witness {
        text.push_str("witness:\n");
        for line in witness_lines(w).lines() {
            let _ = writeln!(text, "  {line}");
        }
    }
    if d.fingerprints.len() == 2 {
        text.push_str("fingerprints:\n");
        let _ = writeln!(text, "  A1 Wr B1: {}", fingerprint_text(&d.fingerprints[0]));
        let _ = writeln!(text, "  A2 Wr B2: {}", fingerprint_text(&d.fingerprints[1]));
    }

    let mut value = serde_json::to_value(&d).expect("decision serializes");
    value["reason"] = match &d.verdict {
        Verdict::NotApplicable(reason) => json!(reason),
        _ => Value::Null,
    };
    value["ignored_primes"] = json!(ignored);
    if let Some(w) = &d.witness {
        value["witness"] = witness_json(w);
    }
    let exit = match d.verdict {
        Verdict::Equal => Exit::Success,
        Verdict::Unequal => Exit::Unequal,
        Verdict::NotApplicable(_) => Exit::Hypothesis,
    };
    Ok(Report::new(exit, value, text))
}

pub fn witness(args: &DecideArgs, prime: Option<u64>) -> Report {
    witness_inner(args, prime).unwrap_or_else(|r| r)
}

fn witness_inner(args: &DecideArgs, prime: Option<u64>) -> Outcome {
    let input = decision_input(args)?;
    let p = match prime {
        Some(p) => p,
        None => union_primes(&input.b1, &input.b2)
            .into_iter()
            .find(|&p| input.b1.divergence(&input.b2, p).is_some())
            .ok_or_else(|| {
                Report::failure(
                    Exit::Hypothesis,
                    "precondition",
                    "the active groups have equivalent components at every prime",
                )
            })?,
    };
    let w = lib(separation_witness(&input.a1, &input.b1, &input.b2, p))?;
    Ok(Report::new(Exit::Unequal, witness_json(&w), witness_lines(&w)))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LineStatus {
    Match,
    Mismatch,
    Skipped,
    ParseError,
    Error,
}

impl LineStatus {
    fn as_str(self) -> &'static str {
        match self {
            LineStatus::Match => "match",
            LineStatus::Mismatch => "mismatch",
            LineStatus::Skipped => "skipped",
            LineStatus::ParseError => "parse_error",
            LineStatus::Error => "error",
        }
    }
}

fn check_summary(r: &ShieldCheck) -> String {
    let class = r.oracle_class.map_or("none".into(), |c| c.to_string());
    format!(
        "class {}/{class}, exponent {}/{}, K-chain {:?}/{:?}, order {}",
        r.shield_class, r.spec_exponent, r.oracle_exponent, r.symbolic_chain, r.concrete_chain, r.order
    )
}

fn manifest_line(line: &str, budget: usize) -> (LineStatus, Value, String) {
    let Some((lhs, rhs)) = line.split_once("Wr") else {
        let message = "expected `<passive> Wr <active>`";
        return (LineStatus::ParseError, json!({ "message": message }), message.into());
    };
    let (lhs, rhs) = (lhs.trim(), rhs.trim());
    let parsed = parse_passive_items(lhs)
        .map_err(|e| (e, lhs))
        .and_then(|items| parse_abelian(rhs).map(|b| (items, b)).map_err(|e| (e, rhs)));
    let (items, b) = match parsed {
        Ok(v) => v,
        Err((e, part)) => {
            let position = match &e {
                Error::Syntax { position, .. } => Some(*position),
                _ => None,
            };
            let mut text = format!("{e}");
            if let Some(pos) = position {
                let _ = write!(text, "\n    {part}\n    {}^", " ".repeat(part.get(..pos).map_or(pos, |s| s.chars().count())));
            }
            return (
                LineStatus::ParseError,
                json!({ "message": e.to_string(), "input": part, "position": position }),
                text,
            );
        }
    };
    match verify_items(&items, &b, budget) {
        Ok(r) => {
            let status = if r.all_equal() { LineStatus::Match } else { LineStatus::Mismatch };
            let text = check_summary(&r);
            (status, serde_json::to_value(&r).expect("report serializes"), text)
        }
        Err(Error::BudgetExceeded { needed, budget, .. }) => (
            LineStatus::Skipped,
            json!({ "reason": "budget exceeded", "needed": needed, "budget": budget }),
            format!("budget exceeded ({needed} elements, budget {budget})"),
        ),
        Err(e @ Error::SpecMismatch(_)) => (LineStatus::Mismatch, json!({ "message": e.to_string() }), e.to_string()),
        Err(e) => (LineStatus::Error, json!({ "message": e.to_string() }), e.to_string()),
    }
}

pub fn oracle_verify(manifest: &Path, budget: usize) -> Report {
    if budget == 0 {
        return Report::failure(Exit::Parse, "usage", "budget must be positive");
    }
    let content = match std::fs::read_to_string(manifest) {
        Ok(c) => c,
        Err(e) => {
            return Report::failure(Exit::Parse, "io", format!("cannot read {}: {e}", manifest.display()));
        }
    };
    let mut entries = Vec::new();
    let mut text = String::new();
    let mut counts = [0usize; 5];
    for (i, raw) in content.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (status, detail, summary) = manifest_line(line, budget);
        counts[status as usize] += 1;
        let _ = writeln!(text, "line {}: {line}: {}: {summary}", i + 1, status.as_str());
        entries.push(json!({
            "line": i + 1,
            "input": line,
            "status": status.as_str(),
            "detail": detail,
        }));
    }
    let [matched, mismatched, skipped, parse_errors, errors] = counts;
    if entries.is_empty() {
        text.push_str("no entries\n");
    } else {
        let _ = writeln!(
            text,
            "{} entries: {matched} match, {mismatched} mismatch, {skipped} skipped, {} errors",
            entries.len(),
            parse_errors + errors
        );
    }
    let exit = if mismatched > 0 {
        Exit::Mismatch
    } else if parse_errors > 0 {
        Exit::Parse
    } else if errors > 0 {
        Exit::Hypothesis
    } else {
        Exit::Success
    };
    Report::new(
        exit,
        json!({
            "budget": budget,
            "entries": entries,
            "summary": {
                "match": matched,
                "mismatch": mismatched,
                "skipped": skipped,
                "parse_error": parse_errors,
                "error": errors,
            },
        }),
        text,
    )
}
