//! Pass/fail suites over the designer and the oracle.
//!
//! Each suite returns a [`Report`] listing named checks; nothing here panics
//! on a failed check.

use serde::Serialize;

use crate::design::published::{PublishedRecord, PublishedRow, PublishedTable, TABLES};
use crate::design::{
    aqsc_parameters, enumerate_admissible, rate_ratio, theorem41_check, CodeParameters, Rational, TABLE5_FAMILIES,
};
use crate::geometry::opposite_edge_distance;
use crate::oracle::{
    build_klein, build_polygon_code, build_projective, build_toric, confirm_record, css_from_complex, cycle_distances,
    exhaustive_distances, SurfaceComplex, EXHAUSTIVE_MAX_QUBITS,
};
use crate::{Orientability, SchlafliSymbol, Surface};

/// Tolerance for reals printed to four decimals.
pub const PRINTED_TOLERANCE: f64 = 5e-4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

fn sym(p: u32, q: u32) -> SchlafliSymbol {
    SchlafliSymbol::new(p, q).expect("p, q >= 3")
}

fn record_tuple(r: &CodeParameters) -> (u64, u64, u32, u32) {
    (r.n, r.k, r.d_z, r.d_x)
}

fn printed_tuple(r: &PublishedRecord) -> (u64, u64, u32, u32) {
    (r.n, r.k, r.d_z, r.d_x)
}

/// Reproduces one published table: caption, every row, every record and the
/// dual swap of each pair.
pub fn check_table(table: &PublishedTable) -> Report {
    let mut report = Report::new("tables");
    let surface = Surface::non_orientable(table.genus).expect("table genera are positive");
    let t = table.number;

    match opposite_edge_distance(surface.polygon_sides()) {
        Ok(d_h) => report.check(
            format!("table {t} d_h"),
            (d_h - table.d_h).abs() <= PRINTED_TOLERANCE,
            format!("computed {d_h:.6}, printed {:.4}", table.d_h),
        ),
        Err(e) => report.check(format!("table {t} d_h"), false, e.to_string()),
    }

    let computed = |row: &PublishedRow| aqsc_parameters(surface, sym(row.p, row.q));
    for row in table.rows {
        let name = format!("table {t} {{{}, {}}}", row.p, row.q);
        let record = match computed(row) {
            Ok(r) => r,
            Err(e) => {
                report.check(format!("{name} admissible"), false, e.to_string());
                continue;
            }
        };
        report.check(
            format!("{name} n_f"),
            record.n_f == row.n_f,
            format!("computed {}, printed {}", record.n_f, row.n_f),
        );
        report.check(
            format!("{name} l(p,q)"),
            (record.l_pq - row.l_pq).abs() <= PRINTED_TOLERANCE,
            format!("computed {:.6}, printed {:.4}", record.l_pq, row.l_pq),
        );
    }

    for (a, b) in table.pairs() {
        let (Ok(ra), Ok(rb)) = (computed(a), computed(b)) else {
            continue;
        };
        let (owner, printed) = match (a.record, b.record) {
            (Some(r), _) => (a, r),
            (_, Some(r)) => (b, r),
            _ => continue,
        };
        let (small, large) = if a.p < a.q { (&ra, &rb) } else { (&rb, &ra) };
        let name = format!("table {t} {{{}, {}}}", owner.p, owner.q);
        report.check(
            format!("{name} record"),
            record_tuple(small) == printed_tuple(&printed),
            format!("computed {}, printed {}", small.notation(), notation(&printed)),
        );
        report.check(
            format!("table {t} {{{}, {}}}/{{{}, {}}} duality", a.p, a.q, b.p, b.q),
            (large.n, large.k, large.d_x, large.d_z) == (small.n, small.k, small.d_z, small.d_x),
            format!("{} vs {}", small.notation(), large.notation()),
        );
    }
    report
}

fn notation(r: &PublishedRecord) -> String {
    format!("[[{}, {}, {}/{}]]", r.n, r.k, r.d_z, r.d_x)
}

/// Closed-form families against the exact designer for `g` in `genera`.
pub fn check_families(genera: impl IntoIterator<Item = u32> + Clone) -> Report {
    let mut report = Report::new("tables");
    for family in &TABLE5_FAMILIES {
        let mut bad = Vec::new();
        for g in genera.clone() {
            let closed = family.evaluate(g);
            let surface = Surface::non_orientable(g).expect("g >= 1");
            match aqsc_parameters(surface, family.symbol()) {
                Ok(r) if (r.n_f, r.n) == (closed.n_f, closed.n) => {}
                Ok(r) => bad.push(format!("g={g}: ({}, {}) vs ({}, {})", r.n_f, r.n, closed.n_f, closed.n)),
                Err(e) => bad.push(format!("g={g}: {e}")),
            }
        }
        report.check(format!("table 5 {}", family.symbol()), bad.is_empty(), bad.join("; "));
    }
    report
}

/// Every published table plus the closed-form families for `g = 3..=30`.
pub fn verify_tables() -> Report {
    let mut report = Report::new("tables");
    for table in &TABLES {
        report.merge(check_table(table));
    }
    report.merge(check_families(3..=30));
    report
}

/// Orientable genus `h` against non-orientable genus `2h`, for every `{p,q}`
/// with `p, q <= pq_max` admissible on the orientable surface.
pub fn check_double_genus(h: u32, pq_max: u32) -> Check {
    let surface = Surface::orientable(h).expect("h >= 1");
    let mut bad = Vec::new();
    let symbols: Vec<_> = enumerate_admissible(surface, pq_max, pq_max)
        .iter()
        .map(|r| r.symbol)
        .collect();
    for &s in &symbols {
        match theorem41_check(h, s) {
            Ok(true) => {}
            Ok(false) => bad.push(s.to_string()),
            Err(e) => bad.push(format!("{s}: {e}")),
        }
    }
    Check {
        name: format!("orientable h={h} matches non-orientable g={}", 2 * h),
        passed: bad.is_empty() && !symbols.is_empty(),
        detail: if bad.is_empty() {
            format!("{} symbols", symbols.len())
        } else {
            bad.join(", ")
        },
    }
}

/// `r1/r2 = (g-2)/(g-1)` and `r2 > r1`, with `r2` read off an actual record.
pub fn check_rate_gain(g: u32, symbols: &[SchlafliSymbol]) -> Check {
    let expected = Rational::new(i64::from(g) - 2, i64::from(g) - 1);
    let mut bad = Vec::new();
    for &s in symbols {
        let cmp = match rate_ratio(g, s) {
            Ok(c) => c,
            Err(e) => {
                bad.push(format!("{s}: {e}"));
                continue;
            }
        };
        let record_rate = aqsc_parameters(Surface::non_orientable(g).expect("g >= 1"), s).map(|r| r.rate());
        if cmp.ratio != expected || cmp.r2 <= cmp.r1 || record_rate.as_ref().ok() != Some(&cmp.r2) {
            bad.push(format!("{s}: r1={} r2={} ratio={}", cmp.r1, cmp.r2, cmp.ratio));
        }
    }
    Check {
        name: format!("non-orientable rate gain g={g}"),
        passed: bad.is_empty() && !symbols.is_empty(),
        detail: if bad.is_empty() {
            format!("{} symbols, ratio {expected}", symbols.len())
        } else {
            bad.join(", ")
        },
    }
}

/// Up to `count` admissible symbols on the non-orientable genus-`g` surface,
/// spread evenly over the sorted admissible list with `p, q <= pq_max`.
pub fn sample_admissible(g: u32, pq_max: u32, count: usize) -> Vec<SchlafliSymbol> {
    let all = enumerate_admissible(Surface::non_orientable(g).expect("g >= 1"), pq_max, pq_max);
    if all.len() <= count {
        return all.iter().map(|r| r.symbol).collect();
    }
    (0..count).map(|i| all[i * all.len() / count].symbol).collect()
}

pub fn verify_theorems(h_max: u32, pq_max: u32, g_max: u32) -> Report {
    let mut report = Report::new("theorems");
    for h in 2..=h_max {
        report.checks.push(check_double_genus(h, pq_max));
    }
    for g in 3..=g_max {
        let symbols = sample_admissible(g, pq_max.max(3), 10);
        report.checks.push(check_rate_gain(g, &symbols));
    }
    report
}

fn expect_counts(report: &mut Report, name: String, complex: &SurfaceComplex, k: usize) {
    match css_from_complex(complex) {
        Ok(code) => {
            let found = code.logical_count();
            report.check(
                name,
                found == k && code.commutes(),
                format!("k = {found}, expected {k}, commutes = {}", code.commutes()),
            );
        }
        Err(e) => report.check(name, false, e.to_string()),
    }
}

/// Toric law up to `toric_max`, logical counts of the other builders and
/// oracle confirmation of the fundamental-polygon records.
pub fn verify_oracle(toric_max: usize) -> Report {
    let mut report = Report::new("oracle");
    for l in 2..=toric_max {
        let complex = build_toric(l).expect("l >= 2");
        let Ok(code) = css_from_complex(&complex) else {
            report.check(format!("toric l={l}"), false, "not closed");
            continue;
        };
        let k = code.logical_count();
        let cycle = cycle_distances(&complex);
        let exhaustive = (code.n <= EXHAUSTIVE_MAX_QUBITS).then(|| exhaustive_distances(&code));
        let mut passed = code.n == 2 * l * l && k == 2 && code.commutes();
        let mut detail = format!("n = {}, k = {k}", code.n);
        match &cycle {
            Ok(d) => {
                passed &= d.d_x == l && d.d_z == l;
                detail += &format!(", cycle d_x = {}, d_z = {}", d.d_x, d.d_z);
            }
            Err(e) => {
                passed = false;
                detail += &format!(", cycle: {e}");
            }
        }
        match (&exhaustive, &cycle) {
            (Some(Ok(e)), Ok(c)) => {
                passed &= (e.d_x, e.d_z) == (c.d_x, c.d_z);
                detail += &format!(", exhaustive d_x = {}, d_z = {}", e.d_x, e.d_z);
            }
            (Some(Err(e)), _) => {
                passed = false;
                detail += &format!(", exhaustive: {e}");
            }
            _ => {}
        }
        report.check(format!("toric l={l}"), passed, detail);
    }
    for l in 2..=6 {
        expect_counts(&mut report, format!("klein l={l}"), &build_klein(l).expect("l >= 2"), 2);
        expect_counts(
            &mut report,
            format!("projective l={l}"),
            &build_projective(l).expect("l >= 2"),
            1,
        );
    }
    for h in 1..=6 {
        let surface = Surface::orientable(h).expect("h >= 1");
        expect_counts(
            &mut report,
            format!("polygon {surface}"),
            &build_polygon_code(surface),
            2 * h as usize,
        );
    }
    for g in 1..=12 {
        let surface = Surface::non_orientable(g).expect("g >= 1");
        expect_counts(
            &mut report,
            format!("polygon {surface}"),
            &build_polygon_code(surface),
            g as usize,
        );
    }
    for orientability in [Orientability::Orientable, Orientability::NonOrientable] {
        for genus in 3..=6 {
            let surface = Surface::new(genus, orientability).expect("genus >= 1");
            let n = surface.polygon_sides() as u32;
            let name = format!("fundamental {{{n}, {n}}} on the {surface}");
            match aqsc_parameters(surface, sym(n, n))
                .map_err(|e| e.to_string())
                .and_then(|r| confirm_record(&r).map_err(|e| e.to_string()))
            {
                Ok(r) => report.check(name, true, r.notation()),
                Err(e) => report.check(name, false, e),
            }
        }
    }
    report
}
