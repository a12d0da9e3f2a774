//! Human-readable text rendering of the report payloads.

use std::fmt::Write;

use crate::report::{ClassifyReport, ReportDocument, ScanReport, VerifyReport};

pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", doc.command);
    if let Some(c) = &doc.classify {
        out.push_str(&render_classify(c));
    }
    if let Some(s) = &doc.scan {
        out.push_str(&render_scan(s));
    }
    if let Some(ch) = &doc.chars {
        let _ = writeln!(out, "{} (order {})", ch.group, ch.order);
        out.push_str(&ch.rendered);
    }
    if let Some(v) = &doc.verify_example {
        out.push_str(&render_verify(v));
    }
    if let Some(ms) = doc.timings_ms {
        let _ = writeln!(out, "elapsed: {} ms", ms);
    }
    out
}

fn render_classify(report: &ClassifyReport) -> String {
    let mut out = String::new();
    let l = &report.locus;
    let _ = writeln!(out, "p = {}, k = {}", l.p, l.k);
    let _ = writeln!(
        out,
        "d = {} (v2(d) = {}, v2(p+1) = {}), (1+p) mod 8 = {}",
        l.d, l.v2_d, l.v2_p_plus_1, l.hatada_residue
    );
    if let Some(ap_zero) = l.ap_zero_mod_p {
        let _ = writeln!(
            out,
            "a_p ≡ 0 (mod p): {}",
            if ap_zero { "yes" } else { "no" }
        );
    }
    let _ = writeln!(out, "theorem 1 verdict: {}", l.theorem1.verdict);
    for msg in &l.theorem1.obstruction_messages {
        let _ = writeln!(out, "  obstruction: {}", msg);
    }
    let _ = writeln!(out, "admissible (G, D, I) pairs:");
    for pair in &l.admissible_pairs {
        let marker = match pair.matches_d {
            Some(true) => "  * ",
            _ => "    ",
        };
        let _ = writeln!(
            out,
            "{}{}: D = {}, I = {} ({}), d = {}",
            marker, pair.global, pair.decomposition, pair.inertia, pair.inertia_generator, pair.d
        );
    }
    if !report.eigensystems.is_empty() {
        let _ = writeln!(out, "eigensystems mod p: {}", report.eigensystems.len());
        for sys in &report.eigensystems {
            let _ = writeln!(
                out,
                "  residue degree {}, a_p = {}",
                sys.residue_degree,
                sys.a_p.as_deref().unwrap_or("(not computed)")
            );
            if let Some(cons) = &sys.consistency {
                let _ = writeln!(
                    out,
                    "  u-statistic over {} primes: S4-consistent: {}, A5-consistent: {}, \
                     dihedral-consistent: {}",
                    cons.primes_tested,
                    cons.s4_consistent,
                    cons.a5_consistent,
                    cons.dihedral_consistent
                );
            }
        }
    }
    if let Some(t2) = &report.theorem2 {
        let _ = writeln!(out, "nicely exceptional: {}", t2.nicely_exceptional);
        let _ = writeln!(out, "theorem 2 verdict: {}", t2.theorem2);
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {}", note);
    }
    out
}

fn render_scan(report: &ScanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "scanned {} pairs (p <= {}, {})",
        report.pairs_scanned, report.p_max, report.weight_policy
    );
    if report.hits.is_empty() {
        let _ = writeln!(out, "no a_p ≡ 0 (mod p) hits");
    } else {
        let _ = writeln!(out, "a_p ≡ 0 (mod p) hits:");
        for hit in &report.hits {
            let _ = writeln!(
                out,
                "  (p, k) = ({}, {})  dim S_k = {}  d = {}  (1+p) mod 8 = {}",
                hit.p, hit.k, hit.dim, hit.d, hit.hatada_residue
            );
        }
    }
    out
}

fn render_verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    for stage in &report.stages {
        let _ = writeln!(
            out,
            "[{}] {}: {}",
            if stage.passed { "PASS" } else { "FAIL" },
            stage.stage,
            stage.detail
        );
    }
    let _ = writeln!(
        out,
        "verify-example: {}",
        if report.passed { "PASS" } else { "FAIL" }
    );
    out
}
