use std::fmt::Write as _;

use mirrorcheck_core::hodge::BijectionWitness;
use mirrorcheck_core::thimbles::HomGraphSummary;
use mirrorcheck_core::{
    DegreeBoundReport, HHReport, HodgeReport, HomDescriptor, MfReport, ThimbleIndex,
    VerificationReport,
};
use serde_json::json;

use crate::commands::{HomTable, SweepOutput};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn error_json(err: &anyhow::Error, code: u8) -> String {
    let doc = json!({
        "schema": mirrorcheck_core::REPORT_SCHEMA,
        "error": { "exit_code": code, "message": format!("{err:#}") },
    });
    serde_json::to_string_pretty(&doc).unwrap_or_default()
}

fn hh_lines(out: &mut String, r: &HHReport) {
    let _ = writeln!(
        out,
        "  {:<28}{} / {}",
        "HH* even / odd", r.hh_even, r.hh_odd
    );
    let _ = writeln!(out, "  {:<28}{}", "identity sector", r.identity_sector_dim);
    let _ = writeln!(out, "  {:<28}{}", "free sectors", r.free_sector_count);
    let _ = writeln!(out, "  {:<28}{}", "other sectors", r.other_sector_total);
    let _ = writeln!(
        out,
        "  {:<28}{}",
        "sector values",
        if r.trusted_sector_criterion {
            "closed form (identity computed)"
        } else {
            "computed"
        }
    );
}

fn hodge_lines(out: &mut String, r: &HodgeReport) {
    let prim: Vec<String> = r.prim.iter().map(u64::to_string).collect();
    let _ = writeln!(
        out,
        "  {:<28}{} / {}",
        "QH* even / odd", r.total_even, r.total_odd
    );
    let _ = writeln!(out, "  {:<28}[{}]", "primitive Hodge", prim.join(", "));
}

fn bijection_lines(out: &mut String, ws: &[BijectionWitness]) {
    for w in ws {
        let _ = writeln!(
            out,
            "  {:<28}{} {} {}",
            format!("bijection p={}", w.p),
            w.count_i,
            if w.equal { "=" } else { "!=" },
            w.count_j
        );
    }
}

fn bound_lines(out: &mut String, r: &DegreeBoundReport) {
    for item in &r.items {
        let _ = writeln!(
            out,
            "  {:<28}{}  {}",
            format!("bound {}", item.name),
            pass(item.pass),
            item.detail
        );
    }
}

pub fn verification(r: &VerificationReport) -> String {
    let mut out = format!("n = {}, a = {}\n", r.n, r.a);
    hh_lines(&mut out, &r.hh);
    hodge_lines(&mut out, &r.hodge);
    let _ = writeln!(
        out,
        "  {:<28}{} ({} vs {})",
        "equal total",
        yes(r.equal_total),
        r.hh.total(),
        r.hodge.qh_dim
    );
    let _ = writeln!(out, "  {:<28}{}", "equal parity", yes(r.equal_parity));
    bound_lines(&mut out, &r.bounds);
    bijection_lines(&mut out, &r.bijection);
    for f in &r.failures {
        let _ = writeln!(out, "  failure: {f}");
    }
    let _ = writeln!(out, "result: {}", pass(r.all_pass()));
    out
}

pub fn hh(r: &HHReport, full: bool) -> String {
    let mut out = format!("n = {}, a = {}\n", r.n, r.a);
    hh_lines(&mut out, r);
    let _ = writeln!(out, "  {:<28}{}", "total", r.total());
    if full {
        let _ = writeln!(
            out,
            "  {:<20} {:<14} {:>5} {:>6}",
            "gamma", "fixed", "dimN", "contr"
        );
        for s in r.sectors.iter().filter(|s| s.contribution > 0) {
            let fixed: Vec<String> = s.fixed.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "  {:<20} {:<14} {:>5} {:>6}",
                s.gamma.to_string(),
                format!("{{{}}}", fixed.join(",")),
                s.normal_dim,
                s.contribution
            );
        }
    }
    out
}

pub fn hodge(r: &HodgeReport, ws: &[BijectionWitness]) -> String {
    let mut out = format!("n = {}, a = {}\n", r.n, r.a);
    hodge_lines(&mut out, r);
    let _ = writeln!(out, "  {:<28}{}", "dim QH*", r.qh_dim);
    bijection_lines(&mut out, ws);
    out
}

pub fn hom(from: &ThimbleIndex, to: &ThimbleIndex, h: &HomDescriptor) -> String {
    let words: Vec<String> = h.generators.iter().map(ToString::to_string).collect();
    format!(
        "Hom(L{:?}, L{:?}): rank {} ({:?}), generators [{}]\n",
        from.entries(),
        to.entries(),
        h.rank,
        h.case,
        words.join(", ")
    )
}

pub fn hom_table(t: &HomTable) -> String {
    let mut out = format!("n = {}, a = {}\n", t.n, t.a);
    let _ = writeln!(out, "  {:<28}{}  (rank 2)", "diagonal", t.diagonal);
    let _ = writeln!(out, "  {:<28}{}  (rank 1)", "forward", t.forward);
    let _ = writeln!(out, "  {:<28}{}  (rank 1)", "backward", t.backward);
    let _ = writeln!(out, "  {:<28}{}  (rank 0)", "disjoint", t.disjoint);
    for e in t.entries.iter().flatten() {
        out.push_str("  ");
        out.push_str(&hom(&e.from, &e.to, &e.hom));
    }
    out
}

pub fn graph(s: &HomGraphSummary) -> String {
    format!(
        "n = {}, a = {}: {} thimbles, {} nonzero off-diagonal pairs, {} component(s)\n",
        s.n, s.a, s.vertices, s.edges, s.components
    )
}

pub fn bounds(r: &DegreeBoundReport) -> String {
    let mut out = format!("n = {}, a = {}\n", r.n, r.a);
    bound_lines(&mut out, r);
    let _ = writeln!(out, "result: {}", pass(r.all_pass));
    out
}

pub fn koszul(r: &MfReport) -> String {
    let mut out = format!("Koszul factorization of rank {}\n", r.rank);
    let _ = writeln!(out, "  {:<28}{}", "PQ = w Id", yes(r.pq_identity));
    let _ = writeln!(out, "  {:<28}{}", "QP = w Id", yes(r.qp_identity));
    let _ = writeln!(out, "  {:<28}{}", "homogeneous", yes(r.homogeneous));
    if let Some(f) = &r.first_failure {
        let _ = writeln!(
            out,
            "  first failure: {} at ({}, {}): {}",
            f.check, f.row, f.col, f.detail
        );
    }
    let _ = writeln!(out, "result: {}", pass(r.pass));
    out
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn sweep(s: &SweepOutput) -> String {
    let mut out = format!(
        "{:>3} {:>4} {:>10} {:>10} {:>10} {:>10} {:>6} {:>6} {:>6}  result\n",
        "n", "a", "hh_even", "hh_odd", "qh_even", "qh_odd", "total", "parity", "bounds"
    );
    for r in &s.rows {
        let _ = writeln!(
            out,
            "{:>3} {:>4} {:>10} {:>10} {:>10} {:>10} {:>6} {:>6} {:>6}  {}{}",
            r.n,
            r.a,
            opt(r.hh_even),
            opt(r.hh_odd),
            opt(r.qh_even),
            opt(r.qh_odd),
            yes(r.equal_total),
            yes(r.equal_parity),
            yes(r.bounds_pass),
            pass(r.pass),
            r.error
                .as_deref()
                .map(|e| format!(" ({e})"))
                .unwrap_or_default()
        );
    }
    if s.truncated {
        let _ = writeln!(out, "budget exhausted; skipped {} pair(s)", s.skipped.len());
    }
    out
}

pub fn sweep_csv(s: &SweepOutput) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "a",
        "hh_even",
        "hh_odd",
        "qh_even",
        "qh_odd",
        "equal_total",
        "equal_parity",
        "bounds_pass",
        "pass",
        "error",
    ])?;
    for r in &s.rows {
        w.write_record([
            r.n.to_string(),
            r.a.to_string(),
            opt(r.hh_even),
            opt(r.hh_odd),
            opt(r.qh_even),
            opt(r.qh_odd),
            r.equal_total.to_string(),
            r.equal_parity.to_string(),
            r.bounds_pass.to_string(),
            r.pass.to_string(),
            r.error.clone().unwrap_or_default(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
