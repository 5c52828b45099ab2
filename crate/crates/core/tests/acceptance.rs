//! Acceptance gate: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::Instant;

use levi_casimir::error::Error;
use levi_casimir::golden;
use levi_casimir::grading::alpha_grading;
use levi_casimir::involution::inner_involution;
use levi_casimir::rat::parse_rat;
use levi_casimir::report::Report;
use levi_casimir::rootsys::{build_root_system, SimpleType};
use levi_casimir::suite;

const BIN: &str = env!("CARGO_BIN_EXE_levi-casimir");

struct Gate {
    lines: Vec<String>,
    failed: usize,
}

impl Gate {
    fn record(&mut self, n: usize, title: &str, passed: bool, detail: String) {
        let status = if passed { "PASS" } else { "FAIL" };
        let line = format!("{status} criterion {n}: {title} ({detail})");
        println!("{line}");
        self.lines.push(line);
        if !passed {
            self.failed += 1;
        }
    }

    fn report(&mut self, n: usize, title: &str, reports: &[Report], extra: &str, started: Instant) {
        let total: usize = reports.iter().map(Report::len).sum();
        let failures: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures().map(ToString::to_string))
            .collect();
        let mut detail = format!("{total} checks, {} failed", failures.len());
        if !extra.is_empty() {
            detail.push_str(&format!(", {extra}"));
        }
        detail.push_str(&format!(", {:.2}s", started.elapsed().as_secs_f64()));
        for f in failures.iter().take(5) {
            println!("    {f}");
        }
        self.record(n, title, failures.is_empty() && total > 0, detail);
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.expect("valid csv"))
        .collect()
}

fn types(max_rank: usize) -> Vec<SimpleType> {
    SimpleType::all_up_to(max_rank)
}

/// Diffs `table --kind gamma --format csv` against the reference rows.
fn gamma_table_diff(max_rank: usize) -> Report {
    let mut r = Report::new();
    let (code, text) = cli(&["table", "--kind", "gamma", "--format", "csv", "--rank", &max_rank.to_string()]);
    r.check("table --kind gamma exits 0", code == 0, format!("exit {code}"));
    let emitted = csv_rows(&text);
    let mut matched = 0;
    for t in types(max_rank) {
        let want = suite::reference_rows(t).expect("reference rows");
        for w in &want {
            let row = emitted
                .iter()
                .find(|e| &e[0] == t.to_string().as_str() && e[1] == w.alpha.to_string());
            let Some(row) = row else {
                r.check(format!("{t} α{}: emitted", w.alpha), false, "missing row");
                continue;
            };
            let gamma: Vec<_> = row[3].split(' ').map(|x| parse_rat(x).expect("fraction")).collect();
            let q: Vec<i64> = row[4].split(' ').map(|x| x.parse().expect("int")).collect();
            let mut ok = row[2] == w.d.to_string() && gamma == w.gamma && q == w.q;
            if let Some(h) = w.h_star {
                ok &= row[5] == h.to_string();
            }
            if let Some(rr) = w.r {
                ok &= row[6] == rr.to_string();
            }
            if let Some(g0) = &w.g0 {
                ok &= golden::normalize_label(&row[7]) == golden::normalize_label(g0);
            }
            matched += 1;
            r.check(format!("{t} α{}: emitted row", w.alpha), ok, row.iter().collect::<Vec<_>>().join(","));
        }
    }
    // every emitted row is either listed or the mirror of a listed row
    for e in &emitted {
        let t: SimpleType = e[0].parse().expect("type");
        let a: usize = e[1].parse().expect("alpha");
        let rep = golden::listed_representative(t, a);
        let listed = suite::reference_rows(t).expect("rows").iter().any(|w| w.alpha == rep);
        r.check(format!("{t} α{a}: has a reference"), listed, format!("listed as α{rep}"));
    }
    r.check("rows matched", matched > 0, matched.to_string());
    r
}

fn q_table_diff(max_rank: usize) -> Report {
    let mut r = Report::new();
    let (code, text) = cli(&["table", "--kind", "q", "--format", "csv", "--rank", &max_rank.to_string()]);
    r.check("table --kind q exits 0", code == 0, format!("exit {code}"));
    let emitted = csv_rows(&text);
    for t in suite::q_list_types(max_rank) {
        let (h, hs, q) = golden::q_list(t).expect("q-list");
        let want = q.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let found = emitted.iter().find(|e| &e[0] == t.to_string().as_str());
        let ok = found.is_some_and(|e| e[1] == h.to_string() && e[2] == hs.to_string() && e[3] == want);
        r.check(format!("{t}: emitted q-list"), ok, want);
    }
    r
}

fn table1_diff() -> Report {
    let mut r = Report::new();
    let mut emitted_bad = Vec::new();
    for t in suite::exceptional() {
        let (code, text) = cli(&["table", "--kind", "abelian", "--type", &t.to_string(), "--format", "csv"]);
        r.check(format!("{t}: table --kind abelian exits 0"), code == 0, format!("exit {code}"));
        for e in csv_rows(&text) {
            if &e[5] == "no" {
                emitted_bad.push(format!("{},{},{},{},{}", &e[0], &e[1], &e[2], &e[3], &e[4]));
            }
        }
    }
    // E6 has no bad case, so no mirrored rows appear here
    let mut want: Vec<String> = golden::exceptional_bad_cases()
        .expect("bad cases")
        .iter()
        .map(|b| format!("{},{},{},{},{}", b.simple_type, b.alpha, b.d, b.m, b.max))
        .collect();
    want.sort();
    emitted_bad.sort();
    r.check("bad-case rows", emitted_bad == want, emitted_bad.join("; "));
    r
}

fn outer_refused() -> Report {
    let mut r = Report::new();
    for t in types(8) {
        let rs = build_root_system(t);
        for a in 0..rs.rank() {
            let g = alpha_grading(&rs, a).expect("grading");
            if g.d() > 2 {
                let refused = matches!(inner_involution(&g), Err(Error::Unsupported(_)));
                r.check(format!("{t} α{}: d = {} refused", a + 1, g.d()), refused, "");
            }
        }
    }
    r
}

#[test]
fn acceptance() {
    let mut gate = Gate {
        lines: Vec::new(),
        failed: 0,
    };
    let all = types(8);

    let t = Instant::now();
    let reports = [
        suite::gamma_table_reproduction(&types(12)).expect("gamma-table"),
        gamma_table_diff(12),
        q_table_diff(8),
    ];
    gate.report(1, "γ/q tables reproduced (classical up to rank 12)", &reports, "", t);

    let t = Instant::now();
    let reports = [suite::q_lists(&suite::q_list_types(8)).expect("q-lists")];
    gate.report(2, "q-lists for A–G, classical ranks 2..8", &reports, "", t);

    let t = Instant::now();
    let reports = [suite::three_way(&all).expect("three-way")];
    let cases = reports[0].len().to_string() + " (type, α, k) cases";
    gate.report(3, "three-way γ agreement, rank ≤ 8", &reports, &cases, t);

    let t = Instant::now();
    let reports = [suite::identities(&all).expect("identities")];
    gate.report(4, "identity suite, rank ≤ 8", &reports, "", t);

    let t = Instant::now();
    let reports = [suite::abelian_classification(&all).expect("abelian"), table1_diff()];
    gate.report(5, "abelian classification and bad cases", &reports, "", t);

    let t = Instant::now();
    let reports = [suite::spin(&all).expect("spin")];
    let involutions = reports[0]
        .checks
        .iter()
        .filter(|c| c.name.ends_with("spin eigenvalue = dim g1/16"))
        .count();
    gate.report(6, "spin eigenvalue = dim g1/16, d ≤ 2, rank ≤ 8", &reports, &format!("{involutions} involutions"), t);

    let t = Instant::now();
    let reports = [suite::properties(&all).expect("properties")];
    let downgraded = reports[0].checks.iter().filter(|c| c.detail.contains("downgraded")).count();
    gate.report(
        7,
        "abelian ideal count, multiplicity freeness, wedge-2 (m ≤ 30)",
        &reports,
        &format!("{downgraded} wedge-2 pair identities downgraded to inequality"),
        t,
    );

    let t = Instant::now();
    let reports = [outer_refused()];
    gate.report(
        8,
        "outer involutions out of scope: d ≥ 3 refused, inner case covered by 6",
        &reports,
        "",
        t,
    );

    assert_eq!(gate.lines.len(), 8);
    assert_eq!(gate.failed, 0, "{}", gate.lines.join("\n"));
}
