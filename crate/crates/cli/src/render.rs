//! Text and JSON rendering of Betti tables and reports.

use std::collections::BTreeMap;

use betti_core::forest::TheoremReport;
use betti_core::{BettiTable, MonomialIdeal, MultigradedBettiMap, SimplicialComplex};
use serde_json::{json, Value};

/// Renders a graded table in the Macaulay2 layout: columns are homological
/// degrees, rows are `j - i` strata, plus a total row.
pub fn betti_table_text(t: &BettiTable) -> String {
    if t.is_empty() {
        return "empty Betti table (zero ideal)\n".to_string();
    }
    let max_i = t.max_homological_degree().unwrap();
    let strata: Vec<isize> = {
        let s: std::collections::BTreeSet<isize> = t
            .entries()
            .map(|((i, j), _)| j as isize - i as isize)
            .collect();
        (*s.first().unwrap()..=*s.last().unwrap()).collect()
    };
    let totals = t.totals();

    let cell = |value: u64| {
        if value == 0 {
            ".".to_string()
        } else {
            value.to_string()
        }
    };
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    rows.push((
        "total:".to_string(),
        (0..=max_i)
            .map(|i| cell(totals.get(&i).copied().unwrap_or(0)))
            .collect(),
    ));
    for &r in &strata {
        let cells: Vec<String> = (0..=max_i)
            .map(|i| {
                let j = r + i as isize;
                cell(if j < 0 { 0 } else { t.get(i, j as usize) })
            })
            .collect();
        rows.push((format!("{r}:"), cells));
    }

    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap();
    let mut col_width = vec![0usize; max_i + 1];
    for (i, w) in col_width.iter_mut().enumerate() {
        *w = i.to_string().len();
    }
    for (_, cells) in &rows {
        for (i, c) in cells.iter().enumerate() {
            col_width[i] = col_width[i].max(c.len());
        }
    }

    let mut out = String::new();
    out.push_str(&" ".repeat(label_width));
    for (i, width) in col_width.iter().enumerate() {
        out.push_str(&format!(" {i:>width$}"));
    }
    out.push('\n');
    for (label, cells) in &rows {
        out.push_str(&format!("{label:>label_width$}"));
        for (i, c) in cells.iter().enumerate() {
            out.push_str(&format!(" {:>width$}", c, width = col_width[i]));
        }
        out.push('\n');
    }
    out
}

pub fn betti_table_json(t: &BettiTable) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .map(|((i, j), v)| json!({"i": i, "j": j, "value": v}))
        .collect();
    let totals: BTreeMap<String, u64> = t
        .totals()
        .into_iter()
        .map(|(i, v)| (i.to_string(), v))
        .collect();
    json!({"command": "betti", "entries": entries, "totals": totals})
}

/// Nonzero multigraded entries as `(i, label, value)` triples sorted by
/// (degree, label, homological degree).
pub fn multigraded_lines(map: &MultigradedBettiMap, ideal: &MonomialIdeal) -> Vec<(usize, String, u64)> {
    let mut lines: Vec<(usize, usize, String, u64)> = map
        .entries()
        .map(|(i, m, v)| (m.degree(), i, ideal.monomial_to_string(m), v))
        .collect();
    lines.sort_by(|a, b| (a.0, &a.2, a.1).cmp(&(b.0, &b.2, b.1)));
    lines.into_iter().map(|(_, i, label, v)| (i, label, v)).collect()
}

pub fn multigraded_text(map: &MultigradedBettiMap, ideal: &MonomialIdeal) -> String {
    let mut out = String::new();
    for (i, label, v) in multigraded_lines(map, ideal) {
        out.push_str(&format!("{i} {label} {v}\n"));
    }
    out
}

pub fn multigraded_json(map: &MultigradedBettiMap, ideal: &MonomialIdeal) -> Value {
    let entries: Vec<Value> = multigraded_lines(map, ideal)
        .into_iter()
        .map(|(i, label, v)| json!({"i": i, "m": label, "value": v}))
        .collect();
    json!({"command": "multigraded", "entries": entries})
}

pub fn facet_lists(g: &SimplicialComplex, indices: &[usize]) -> Vec<Vec<String>> {
    indices
        .iter()
        .map(|&i| {
            g.facets()[i]
                .iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect()
        })
        .collect()
}

pub fn report_text(report: &TheoremReport, with_oracle: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("candidates checked: {}\n", report.candidates_checked));
    for r in &report.records {
        let entries: Vec<String> = r
            .entries
            .iter()
            .map(|(i, v)| format!("i={i} value={v}"))
            .collect();
        let oracle = match r.oracle_agrees {
            Some(true) => " [oracle: agree]",
            Some(false) => " [oracle: DISAGREE]",
            None => "",
        };
        out.push_str(&format!("{}: {}{}\n", r.label, entries.join(", "), oracle));
    }
    let verdict = if report.holds { "holds" } else { "violated" };
    out.push_str(&format!("verdict: {verdict}\n"));
    if with_oracle {
        let agreement = match report.oracle_agreement() {
            Some(true) => "oracle agreement: yes",
            Some(false) => "oracle agreement: NO",
            None => "oracle agreement: not checked",
        };
        out.push_str(&format!("{agreement}\n"));
    }
    out
}

pub fn report_json(report: &TheoremReport) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            let entries: Vec<Value> = r
                .entries
                .iter()
                .map(|(i, v)| json!({"i": i, "value": v}))
                .collect();
            json!({
                "m": r.label,
                "entries": entries,
                "oracle_agrees": r.oracle_agrees,
            })
        })
        .collect();
    json!({
        "command": "verify",
        "holds": report.holds,
        "oracle_agreement": report.oracle_agreement(),
        "candidates_checked": report.candidates_checked,
        "records": records,
    })
}
