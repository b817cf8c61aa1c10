//! JSON and CSV renderings. Undefined decomposition fields are `null` in JSON
//! and `-` in CSV; counts are exact JSON numbers of any size.

use std::io::Write;

use serde_json::{json, Map, Number, Value};

use lexext_core::verify::{CertificateKind, RangeSummary, SharpnessCertificate};
use lexext_core::{BoundReport, Count, Graph, IndependenceProfile};

pub fn count_value(c: &Count) -> Value {
    Value::Number(c.to_string().parse::<Number>().expect("decimal digits form a JSON number"))
}

fn decomposition_fields(report: &BoundReport) -> [Option<u64>; 4] {
    [
        report.sds.map(|d| d.depth),
        report.sds.map(|d| d.last_part),
        report.erdos.map(|e| e.base),
        report.erdos.map(|e| e.remainder),
    ]
}

pub fn bound_json(report: &BoundReport) -> String {
    let [k, p_k, s, t] = decomposition_fields(report);
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "r": e.r,
                "ir_upper_lex": count_value(&e.lex),
                "ir_upper_erdos": count_value(&e.erdos),
            })
        })
        .collect();
    json!({
        "n": report.n,
        "m": report.m,
        "k": k,
        "p_k": p_k,
        "s": s,
        "t": t,
        "alpha_upper": report.alpha_upper,
        "s_relation": report.s_relation.map(|r| r.as_str()),
        "i_r": entries,
    })
    .to_string()
}

fn dash(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn bound_csv(report: &BoundReport, out: &mut dyn Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "n", "m", "k", "p_k", "s", "t", "alpha_upper", "s_relation", "r", "ir_upper_lex",
        "ir_upper_erdos",
    ])?;
    let [k, p_k, s, t] = decomposition_fields(report).map(dash);
    let relation = report.s_relation.map_or("-", |r| r.as_str());
    for e in &report.entries {
        w.write_record([
            report.n.to_string(),
            report.m.to_string(),
            k.clone(),
            p_k.clone(),
            s.clone(),
            t.clone(),
            report.alpha_upper.to_string(),
            relation.to_string(),
            e.r.to_string(),
            e.lex.to_string(),
            e.erdos.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// One row per report: `m,k,p_k,s,t,alpha_upper,ir_upper`.
pub fn table_csv(rows: &[BoundReport], out: &mut dyn Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["m", "k", "p_k", "s", "t", "alpha_upper", "ir_upper"])?;
    for report in rows {
        let [k, p_k, s, t] = decomposition_fields(report).map(dash);
        w.write_record([
            report.m.to_string(),
            k,
            p_k,
            s,
            t,
            report.alpha_upper.to_string(),
            report.entries[0].lex.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn table_row_json(report: &BoundReport) -> String {
    let [k, p_k, s, t] = decomposition_fields(report);
    json!({
        "m": report.m,
        "k": k,
        "p_k": p_k,
        "s": s,
        "t": t,
        "alpha_upper": report.alpha_upper,
        "ir_upper": count_value(&report.entries[0].lex),
    })
    .to_string()
}

pub fn count_json(g: &Graph, profile: &IndependenceProfile, r: Option<usize>) -> String {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(g.order()));
    obj.insert("m".into(), json!(g.edge_count()));
    obj.insert("alpha".into(), json!(profile.independence_number()));
    match r {
        Some(r) => {
            obj.insert("r".into(), json!(r));
            obj.insert("i_r".into(), count_value(&profile.get(r)));
        }
        None => {
            let counts: Vec<Value> = profile.counts().iter().map(count_value).collect();
            obj.insert("profile".into(), Value::Array(counts));
            obj.insert("total".into(), count_value(&profile.total()));
        }
    }
    Value::Object(obj).to_string()
}

pub fn certificate_json(c: &SharpnessCertificate) -> String {
    json!({
        "kind": c.kind.name(),
        "n": c.n,
        "m": c.m,
        "r": match c.kind {
            CertificateKind::IndependentSets { r } => Some(r),
            _ => None,
        },
        "bound": count_value(&c.bound),
        "max_observed": count_value(&c.max_observed),
        "lex_value": count_value(&c.lex_value),
        "attained_by_lex": c.attained_by_lex,
        "valid": c.valid(),
        "sharp": c.sharp(),
        "passed": c.passed(),
        "extremal_graph_count": c.extremal_graph_count,
        "graphs_checked": c.graphs_checked,
        "counterexample": c.counterexample,
    })
    .to_string()
}

pub fn refusal_json(n: u64, m: u64, reason: &lexext_core::Error) -> String {
    let required = match reason {
        lexext_core::Error::BudgetExceeded { required, .. } => count_value(required),
        _ => Value::Null,
    };
    json!({
        "kind": "refusal",
        "n": n,
        "m": m,
        "required": required,
        "reason": reason.to_string(),
    })
    .to_string()
}

pub fn summary_json(s: &RangeSummary) -> String {
    json!({
        "kind": "summary",
        "cells_checked": s.cells_checked,
        "cells_refused": s.cells_refused,
        "certificates": s.certificates,
        "failures": s.failures,
        "graphs_checked": s.graphs_checked,
        "passed": s.all_passed(),
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lexext_core::bounds::bound_report_for;

    #[test]
    fn big_counts_are_exact_numbers() {
        let c = lexext_core::arith::binom(300, 150);
        let text = count_value(&c).to_string();
        assert_eq!(text, c.to_string());
    }

    #[test]
    fn bound_json_fields() {
        let v: Value = serde_json::from_str(&bound_json(&bound_report_for(5, 6, &[3]).unwrap())).unwrap();
        assert_eq!(v["alpha_upper"], 3);
        assert_eq!((v["k"].as_u64(), v["p_k"].as_u64()), (Some(2), Some(2)));
        assert_eq!((v["s"].as_u64(), v["t"].as_u64()), (Some(3), Some(1)));
        assert_eq!(v["s_relation"], "S_EQUALS_ALPHA_U");
        assert_eq!(v["i_r"][0]["ir_upper_lex"], 1);
        assert_eq!(v["i_r"][0]["ir_upper_erdos"], 1);

        let v: Value = serde_json::from_str(&bound_json(&bound_report_for(5, 0, &[3]).unwrap())).unwrap();
        assert!(v["k"].is_null() && v["s"].is_null() && v["s_relation"].is_null());
        assert_eq!(v["i_r"][0]["ir_upper_lex"], 10);
    }

    #[test]
    fn table_rows() {
        let rows: Vec<_> = (0..=10).map(|m| bound_report_for(5, m, &[3]).unwrap()).collect();
        let mut buf = Vec::new();
        table_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 12);
        assert_eq!(lines[0], "m,k,p_k,s,t,alpha_upper,ir_upper");
        assert_eq!(lines[1], "0,-,-,-,-,5,10");
        assert_eq!(lines[7], "6,2,2,3,1,3,1");
        assert_eq!(lines[11], "10,4,1,-,-,1,0");
    }
}
