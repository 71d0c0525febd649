//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

use isocx::cli::{run, CaseRecord, Report, Suite, SuiteConfig};

fn select<'a>(report: &'a Report, suite: &str, case: &str, filter: impl Fn(&CaseRecord) -> bool) -> Vec<&'a CaseRecord> {
    report
        .records
        .iter()
        .filter(|r| r.suite == suite && r.case == case && filter(r))
        .collect()
}

fn param(r: &CaseRecord, key: &str) -> u64 {
    r.params[key].as_u64().unwrap_or(0)
}

/// All selected records pass and there are exactly `count` of them.
fn all_pass(records: &[&CaseRecord], count: usize) -> bool {
    records.len() == count && records.iter().all(|r| r.pass)
}

fn main() -> ExitCode {
    let mut base = SuiteConfig { jobs: 2, ..SuiteConfig::default() };
    base.primes = vec![2, 3];
    let full = run(&base).expect("default configuration is valid");
    let five = run(&SuiteConfig { suites: vec![Suite::Main], primes: vec![5], r_max: 3, ..base.clone() })
        .expect("p = 5 configuration is valid");

    let mut lines: Vec<(u32, &str, bool)> = Vec::new();

    // 1: closed point, ranks 1, p+1, p, 0, 0
    {
        let small = select(&full, "main", "closed-point", |_| true);
        let p5 = select(&five, "main", "closed-point", |_| true);
        lines.push((1, "main theorem concentration", all_pass(&small, 10) && all_pass(&p5, 4)));
    }
    // 2: every point of F_p and F_{p^2}, r ≤ 3
    {
        let cases = select(&full, "main", "specialization", |r| param(r, "r") <= 3);
        lines.push((2, "specialization sweep", all_pass(&cases, 2 * 2 * 4)));
    }
    // 3: dims against (f(T) − 1)^q
    {
        let cases = select(&full, "main", "rank-bookkeeping", |r| param(r, "r_max") == 5);
        lines.push((3, "rank bookkeeping", all_pass(&cases, 2)));
    }
    // 4: coker(u_1) → coker(s)
    {
        let a = select(&full, "main", "cokernel", |_| true);
        let b = select(&five, "main", "cokernel", |_| true);
        lines.push((4, "cokernel identification", all_pass(&a, 2) && all_pass(&b, 1)));
    }
    // 5: Γ structure
    {
        let basis = select(&full, "gamma", "basis", |_| true);
        let span = select(&full, "gamma", "span", |_| true);
        let duality = select(&full, "gamma", "duality", |r| param(r, "r") + param(r, "r2") <= 4);
        let assoc = select(&full, "gamma", "associativity", |r| param(r, "triples") >= 1000);
        let nf = select(&full, "gamma", "normal-form", |_| true);
        let rewrites_checked = assoc.iter().all(|r| r.detail["order_checks"].as_u64().unwrap_or(0) > 0);
        // 15 (r, r2) pairs with r + r2 ≤ 4, plus exact duplicates for totals ≤ 2
        let ok = all_pass(&basis, 2 * 2 * 5)
            && all_pass(&span, 2 * 2 * 5)
            && all_pass(&duality, 2 * 2 * (15 + 6))
            && all_pass(&assoc, 4)
            && all_pass(&nf, 2 * 2 * 5)
            && rewrites_checked;
        lines.push((5, "gamma ring structure", ok));
    }
    // 6: bar homology and graded pieces
    {
        let h = select(&full, "bar", "homology", |_| true);
        let gr = select(&full, "bar", "graded-pieces", |_| true);
        lines.push((6, "bar complex duality", all_pass(&h, 10) && all_pass(&gr, 8)));
    }
    // 7: order complexes over ℤ
    {
        let cases = select(&full, "groups", "order-complex", |_| true);
        let steinberg8 = cases.iter().any(|r| {
            param(r, "p") == 2 && r.params["group"].as_array().is_some_and(|g| g.len() == 3) && r.computed == serde_json::json!([[1, 8, []]])
        });
        lines.push((7, "Solomon-Tits", all_pass(&cases, 14) && steinberg8));
    }
    // 8: subgroup complex and product decomposition, M = r
    {
        let gc = select(&full, "groups", "group-complex", |r| param(r, "torsion") == param(r, "r"));
        let dec = select(&full, "groups", "decomposition", |r| param(r, "torsion") == param(r, "r"));
        lines.push((8, "case (A) complex and product decomposition", all_pass(&gc, 6) && all_pass(&dec, 6)));
    }
    // 9: ideal membership for mn ≤ 16, closure over ℤ/n, n ≤ 30, m_max = 6
    {
        let mem = select(&full, "appendix", "membership", |r| param(r, "m") * param(r, "n") <= 16);
        let pairs: usize = (1..=16).map(|m| 16 / m).sum();
        let zn = select(&full, "appendix", "closure", |r| {
            r.params["ring"].as_str().is_some_and(|s| s.starts_with("Z/")) && param(r, "m_max") == 6
        });
        lines.push((9, "appendix", all_pass(&mem, pairs) && all_pass(&zn, 30)));
    }
    // 10: socle and relations sequence
    {
        let socle = select(&full, "main", "socle", |_| true);
        let socle5 = select(&five, "main", "socle", |_| true);
        let rel = select(&full, "main", "relations", |_| true);
        let rel5 = select(&five, "main", "relations", |_| true);
        let ok = all_pass(&socle, 6) && all_pass(&socle5, 3) && all_pass(&rel, 2) && all_pass(&rel5, 1);
        lines.push((10, "socle and relations lemmas", ok));
    }
    // 11: byte-identical reports
    {
        let again = run(&base).expect("valid");
        let a = full.to_json().expect("serializable");
        let b = again.to_json().expect("serializable");
        lines.push((11, "determinism", a == b));
    }

    let mut failed = 0;
    for (n, name, ok) in &lines {
        println!("criterion {n:>2} [{}] {name}", if *ok { "PASS" } else { "FAIL" });
        failed += usize::from(!ok);
    }
    for r in full.failures().chain(five.failures()) {
        println!("  failing case: {} {} {}", r.suite, r.case, r.params);
    }
    println!("{} of {} criteria passed", lines.len() - failed, lines.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
