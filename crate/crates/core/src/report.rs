//! Report rendering: a stable-key structured format (JSON) and an aligned
//! text table with a ring × theorem summary matrix.
//!
//! Rendering is fully deterministic: key order is fixed, collections are
//! emitted in their (already sorted) order, and no floating point is
//! involved, so two runs over the same configuration are byte-identical.

use crate::error::Caps;
use crate::harness::{Exactness, TheoremReport};

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Serializes reports as JSON with stable key order.
pub fn render_json(reports: &[TheoremReport], caps: &Caps, seed: u64) -> String {
    let mut s = String::new();
    s.push_str("{\n");
    s.push_str(&format!(
        "  \"config\": {{\"kmax\": {}, \"max_module\": {}, \"max_ring\": {}, \"seed\": {}}},\n",
        caps.kmax, caps.max_module, caps.max_ring, seed
    ));
    s.push_str("  \"reports\": [\n");
    for (i, r) in reports.iter().enumerate() {
        s.push_str("    {\n");
        s.push_str(&format!("      \"agreement\": {},\n", r.agreement));
        s.push_str("      \"conditions\": [\n");
        for (j, c) in r.conditions.iter().enumerate() {
            let value = match c.value {
                Some(v) => v.to_string(),
                None => "null".to_string(),
            };
            s.push_str(&format!(
                "        {{\"exactness\": \"{}\", \"name\": \"{}\", \"value\": {}}}{}\n",
                c.exactness.as_str(),
                json_escape(c.name),
                value,
                if j + 1 < r.conditions.len() { "," } else { "" }
            ));
        }
        s.push_str("      ],\n");
        s.push_str(&format!("      \"ring\": \"{}\",\n", json_escape(&r.ring)));
        s.push_str(&format!("      \"theorem\": \"{}\",\n", json_escape(r.theorem)));
        s.push_str("      \"witnesses\": [");
        for (j, w) in r.witnesses.iter().enumerate() {
            if j > 0 {
                s.push_str(", ");
            }
            s.push_str(&format!("\"{}\"", json_escape(w)));
        }
        s.push_str("]\n");
        s.push_str(&format!(
            "    }}{}\n",
            if i + 1 < reports.len() { "," } else { "" }
        ));
    }
    s.push_str("  ],\n");
    let agreed = reports.iter().filter(|r| r.agreement).count();
    s.push_str(&format!(
        "  \"summary\": {{\"agreed\": {}, \"failed\": {}, \"total\": {}}}\n",
        agreed,
        reports.len() - agreed,
        reports.len()
    ));
    s.push_str("}\n");
    s
}

/// Renders reports as an aligned table followed by a ring × theorem matrix.
pub fn render_table(reports: &[TheoremReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!(
            "{} {:28} {:20} ",
            if r.agreement { "ok  " } else { "FAIL" },
            r.ring,
            r.theorem
        ));
        let conds: Vec<String> = r
            .conditions
            .iter()
            .map(|c| {
                let v = match c.value {
                    Some(true) => "T",
                    Some(false) => "F",
                    None => "-",
                };
                let marker = match c.exactness {
                    Exactness::Exact => "",
                    Exactness::CorpusBounded => "~",
                    Exactness::NotEvaluated => "",
                };
                format!("{}={}{}", c.name, v, marker)
            })
            .collect();
        s.push_str(&conds.join(" "));
        s.push('\n');
        for w in &r.witnesses {
            s.push_str(&format!("       · {w}\n"));
        }
    }
    // summary matrix
    let mut rings: Vec<&str> = reports.iter().map(|r| r.ring.as_str()).collect();
    rings.sort_unstable();
    rings.dedup();
    let mut theorems: Vec<&str> = reports.iter().map(|r| r.theorem).collect();
    theorems.sort_unstable();
    theorems.dedup();
    if rings.len() > 1 || theorems.len() > 1 {
        s.push('\n');
        let ring_width = rings.iter().map(|r| r.len()).max().unwrap_or(4).max(4);
        s.push_str(&format!("{:width$}", "ring", width = ring_width + 2));
        for t in &theorems {
            s.push_str(&format!("{:>width$}", short_theorem(t), width = 8));
        }
        s.push('\n');
        for ring in &rings {
            s.push_str(&format!("{:width$}", ring, width = ring_width + 2));
            for t in &theorems {
                let cell = match reports
                    .iter()
                    .find(|r| r.ring == *ring && r.theorem == *t)
                {
                    Some(r) if r.agreement => "ok",
                    Some(_) => "FAIL",
                    None => "-",
                };
                s.push_str(&format!("{:>8}", cell));
            }
            s.push('\n');
        }
    }
    let agreed = reports.iter().filter(|r| r.agreement).count();
    s.push_str(&format!(
        "\n{} reports, {} agreed, {} failed\n",
        reports.len(),
        agreed,
        reports.len() - agreed
    ));
    s
}

fn short_theorem(id: &str) -> &str {
    match id {
        "lemma-fp-cogenerator" => "cogen",
        "lemma-group-ring-lift" => "lift",
        "prop-annihilators" => "annih",
        "thm-fp-injective" => "fpinj",
        "thm-group-ring" => "grring",
        "thm-wqf" => "wqf",
        other => other,
    }
}
