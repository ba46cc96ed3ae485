//! Deterministic text rendering of analysis results, verification reports,
//! and certified generator outputs.

use std::fmt::Write as _;

use okings_core::construct::CertifiedGraph;
use okings_core::dominance::{self, DominanceReport};
use okings_core::enumerate::{decode, RealizabilityTable, VerificationReport};
use okings_core::graph::OrientedGraph;

use crate::format::serialize_graph;

pub fn fmt_set(vs: &[usize]) -> String {
    let mut s = String::from("{");
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{v}");
    }
    s.push('}');
    s
}

pub fn render_analysis(g: &OrientedGraph, report: &DominanceReport) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    let _ = writeln!(out, "n = {n}");
    for v in 1..=n {
        let r = g.vertex_report(v).unwrap();
        let _ = writeln!(
            out,
            "vertex {v}: out {}, in {}, ties {}, score {}",
            r.out_degree, r.in_degree, r.tie_degree, r.score
        );
    }
    let _ = writeln!(out, "score sequence: {}", g.score_sequence());
    let _ = writeln!(out, "tournament: {}", if g.is_tournament() { "yes" } else { "no" });
    let _ = writeln!(out, "kings: {}", fmt_set(&report.kings));
    let _ = writeln!(out, "serfs: {}", fmt_set(&report.serfs));
    let _ = writeln!(out, "weak kings: {}", fmt_set(&report.weak_kings));
    let _ = writeln!(out, "weak serfs: {}", fmt_set(&report.weak_serfs));
    let _ = writeln!(out, "transmitters: {}", fmt_set(&report.transmitters));
    let _ = writeln!(out, "(k, s, b) = ({}, {}, {})", report.k, report.s, report.b);
    let (transitive, intransitive) = dominance::triple_census(g);
    let _ = writeln!(
        out,
        "triples: {} total, {transitive} transitive, {intransitive} intransitive",
        transitive + intransitive
    );
    out
}

fn fmt_arcs(g: &OrientedGraph) -> String {
    let mut s = String::from("[");
    for (i, (u, v)) in g.arcs().iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{u}->{v}");
    }
    s.push(']');
    s
}

/// Line-oriented report form: one header line, then notes, then one line per
/// retained counterexample (code, decoded arc list, diagnostic).
pub fn render_verification(report: &VerificationReport) -> String {
    let mut out = String::new();
    let elapsed = report
        .elapsed
        .map(|d| format!("{:.3}s", d.as_secs_f64()))
        .unwrap_or_else(|| String::from("-"));
    let _ = writeln!(
        out,
        "claim={} nmax={} scanned={} counterexamples={} elapsed={elapsed}",
        report.claim.id(),
        report.n_max,
        report.scanned,
        report.total_counterexamples
    );
    let _ = writeln!(out, "note: {}", report.claim.description());
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    if report.counterexamples.len() as u64 != report.total_counterexamples {
        let _ = writeln!(
            out,
            "note: showing first {} of {} counterexamples",
            report.counterexamples.len(),
            report.total_counterexamples
        );
    }
    for ce in &report.counterexamples {
        match ce.code {
            Some(code) => {
                let arcs = decode(&code)
                    .map(|g| fmt_arcs(&g))
                    .unwrap_or_else(|_| String::from("[?]"));
                let _ = writeln!(
                    out,
                    "counterexample: n={} code={} arcs={arcs} :: {}",
                    code.n, code.code, ce.detail
                );
            }
            None => {
                let _ = writeln!(out, "counterexample: (missing witness) :: {}", ce.detail);
            }
        }
    }
    out
}

pub fn render_certified(generator: &str, cert: &CertifiedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "generator: {generator}");
    let _ = writeln!(out, "graph:");
    out.push_str(&serialize_graph(&cert.graph));
    if !cert.labels.is_empty() {
        let _ = writeln!(out, "legend:");
        for (v, label) in &cert.labels {
            let _ = writeln!(out, "  {v} = {label}");
        }
    }
    let _ = writeln!(out, "claimed: {}", cert.claimed);
    let _ = writeln!(out, "kings: {}", fmt_set(&cert.report.kings));
    let _ = writeln!(out, "serfs: {}", fmt_set(&cert.report.serfs));
    let _ = writeln!(out, "weak kings: {}", fmt_set(&cert.report.weak_kings));
    let _ = writeln!(out, "weak serfs: {}", fmt_set(&cert.report.weak_serfs));
    let _ = writeln!(
        out,
        "(k, s, b) = ({}, {}, {})",
        cert.report.k, cert.report.s, cert.report.b
    );
    let _ = writeln!(
        out,
        "certification: {}",
        if cert.verified { "PASS" } else { "FAIL" }
    );
    out
}

/// Graph document with the legend and certification summary as comments, for
/// `--out` files; parses back to the same graph.
pub fn render_graph_file(generator: &str, cert: &CertifiedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# generator: {generator}");
    for (v, label) in &cert.labels {
        let _ = writeln!(out, "# {v} = {label}");
    }
    let _ = writeln!(
        out,
        "# certification: {}",
        if cert.verified { "PASS" } else { "FAIL" }
    );
    out.push_str(&serialize_graph(&cert.graph));
    out
}

pub fn render_realizability(table: &RealizabilityTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n={} realizable (k, s, b) triples: {}", table.n, table.entries.len());
    for t in &table.entries {
        let _ = writeln!(out, "({}, {}, {}) witness code={}", t.k, t.s, t.b, t.witness.code);
    }
    out
}
