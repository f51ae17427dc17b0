//! Command-line front end over `aqsc-core`.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 inadmissible surface or
//! tessellation, `2 + failures` (at most 125) when a verification suite fails.

use std::io::{self, Write};

use aqsc_core::design::published::{self, PublishedTable};
use aqsc_core::design::{
    aqsc_parameters, asymmetry_curve, enumerate_admissible, rate_series, DesignError, TABLE5_FAMILIES,
};
use aqsc_core::geometry::opposite_edge_distance;
use aqsc_core::oracle::{
    brute_force_distances, build_klein, build_polygon_code, build_projective, build_toric, confirm_record,
    css_from_complex, parse_complex, write_complex, SurfaceComplex,
};
use aqsc_core::verify::{self, Report};
use aqsc_core::{Orientability, SchlafliSymbol, Surface};

pub mod args;
pub mod output;

pub use args::{Cli, Command, Format, Source, Suite};
use output::{FamilyRow, GapRow, OracleSummary, OutputRecord, RateRow, ReproducedTable, TableRow};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INADMISSIBLE: u8 = 2;
const EXIT_CAP: u8 = 125;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Inadmissible(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => EXIT_USAGE,
            Failure::Inadmissible(_) => EXIT_INADMISSIBLE,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Inadmissible(m) => format!("inadmissible: {m}"),
            Failure::Io(e) => e.to_string(),
        }
    }
}

fn design_failure(e: DesignError) -> Failure {
    match e {
        DesignError::NotAdmissible { reason, .. } => Failure::Inadmissible(format!("{} ({e})", reason.code())),
        DesignError::SurfaceNotHyperbolic(_) | DesignError::SymbolNotHyperbolic(_) => {
            Failure::Inadmissible(format!("NotHyperbolic ({e})"))
        }
        other => Failure::Usage(other.to_string()),
    }
}

/// Verification exit status: 0, or `2 + failures` capped.
pub fn verification_exit_code(failures: usize) -> u8 {
    if failures == 0 {
        0
    } else {
        (2 + failures).min(EXIT_CAP as usize) as u8
    }
}

fn surface(genus: u32, orientability: Orientability) -> Result<Surface, Failure> {
    Surface::new(genus, orientability).map_err(|e| Failure::Usage(e.to_string()))
}

fn symbol(p: u32, q: u32) -> Result<SchlafliSymbol, Failure> {
    SchlafliSymbol::new(p, q).map_err(|e| Failure::Usage(e.to_string()))
}

/// Runs one command, writing to `out`. Returns the exit status.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<u8, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Params {
            orientation,
            genus,
            p,
            q,
            confirm,
        } => {
            let s = surface(*genus, orientation.value())?;
            let mut record = aqsc_parameters(s, symbol(*p, *q)?).map_err(design_failure)?;
            if *confirm {
                record = confirm_record(&record).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            output::write_records(out, format, &[OutputRecord::from(&record)])?;
        }
        Command::Tables { which: 5, genus: None } => {
            let rows: Vec<_> = TABLE5_FAMILIES
                .iter()
                .map(|f| FamilyRow::new(f.p, f.q, f.faces_per_step, f.qubits_per_step))
                .collect();
            output::write_families(out, format, &rows)?;
        }
        Command::Tables {
            which: 5,
            genus: Some(g),
        } => {
            let s = surface(*g, Orientability::NonOrientable)?;
            let records = TABLE5_FAMILIES
                .iter()
                .map(|f| aqsc_parameters(s, f.symbol()).map(|r| OutputRecord::from(&r)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(design_failure)?;
            output::write_records(out, format, &records)?;
        }
        Command::Tables { which, genus } => {
            if genus.is_some() {
                return Err(Failure::Usage("--genus applies to table 5 only".into()));
            }
            let table = published::table(*which).ok_or_else(|| Failure::Usage(format!("no table {which}")))?;
            output::write_table(out, format, &reproduce(table)?)?;
        }
        Command::Figures {
            which,
            g_min,
            g_max,
            symbol: sym,
        } => {
            let genera: Vec<u32> = (*g_min..=*g_max).filter(|g| g % 2 == 1 && *g >= 3).collect();
            if genera.is_empty() {
                return Err(Failure::Usage("no odd genus >= 3 in range".into()));
            }
            if *which == 5 {
                let families: Vec<_> = TABLE5_FAMILIES.iter().map(|f| f.symbol()).collect();
                let rows: Vec<_> = rate_series(&families, &genera)
                    .map_err(design_failure)?
                    .into_iter()
                    .map(|pt| RateRow {
                        p: pt.symbol.p(),
                        q: pt.symbol.q(),
                        genus: pt.genus,
                        r1: pt.r1.to_string(),
                        r2: pt.r2.to_string(),
                        ratio: pt.ratio.to_string(),
                        r1_value: *pt.r1.numer() as f64 / *pt.r1.denom() as f64,
                        r2_value: *pt.r2.numer() as f64 / *pt.r2.denom() as f64,
                    })
                    .collect();
                output::write_rates(out, format, &rows)?;
            } else {
                let curve = asymmetry_curve(*sym, &genera, Orientability::NonOrientable).map_err(design_failure)?;
                let rows: Vec<_> = curve
                    .points
                    .iter()
                    .map(|pt| GapRow {
                        genus: pt.genus,
                        d_z: pt.d_z,
                        d_x: pt.d_x,
                        gap: pt.gap,
                    })
                    .collect();
                output::write_gaps(out, format, *sym, &rows)?;
            }
        }
        Command::Verify { suite } => {
            let report = match suite {
                Suite::Theorems { h_max, pq_max, g_max } => verify::verify_theorems(*h_max, *pq_max, *g_max),
                Suite::Oracle { toric_max } => {
                    if *toric_max < 2 {
                        return Err(Failure::Usage("--toric-max must be at least 2".into()));
                    }
                    verify::verify_oracle(*toric_max)
                }
                Suite::Tables => verify::verify_tables(),
            };
            write_report(out, format, &report)?;
            return Ok(verification_exit_code(report.failures().len()));
        }
        Command::Enumerate {
            orientation,
            genus,
            max,
            p_max,
            q_max,
            min_rate,
        } => {
            let s = surface(*genus, orientation.value())?;
            let records: Vec<_> = enumerate_admissible(s, p_max.unwrap_or(*max), q_max.unwrap_or(*max))
                .iter()
                .filter(|r| min_rate.is_none_or(|m| r.k as f64 / r.n as f64 >= m))
                .map(OutputRecord::from)
                .collect();
            output::write_records(out, format, &records)?;
        }
        Command::Oracle { source, dump } => {
            let (name, complex) = build(source)?;
            if *dump {
                out.write_all(write_complex(&complex).as_bytes())?;
            } else {
                output::write_oracle(out, format, &analyse(name, &complex)?)?;
            }
        }
    }
    Ok(0)
}

fn reproduce(table: &PublishedTable) -> Result<ReproducedTable, Failure> {
    let s = surface(table.genus, Orientability::NonOrientable)?;
    let d_h = opposite_edge_distance(s.polygon_sides()).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut rows = Vec::with_capacity(table.rows.len());
    for (a, b) in table.pairs() {
        let owner = if a.p < a.q { a } else { b };
        let record = aqsc_parameters(s, symbol(owner.p, owner.q)?).map_err(design_failure)?;
        let record = OutputRecord::from(&record);
        for row in [a, b] {
            let computed = aqsc_parameters(s, symbol(row.p, row.q)?).map_err(design_failure)?;
            let printed = row.record;
            rows.push(TableRow {
                p: row.p,
                q: row.q,
                n_f: computed.n_f,
                l_pq: computed.l_pq,
                record: printed.map(|_| record.clone()),
                matches_printed: printed
                    .map(|pr| (pr.n, pr.k, pr.d_z, pr.d_x) == (record.n, record.k, record.d_z, record.d_x)),
                printed: printed.map(Into::into),
            });
        }
    }
    Ok(ReproducedTable {
        table: table.number,
        genus: table.genus,
        orientability: Orientability::NonOrientable,
        d_h,
        printed_d_h: table.d_h,
        rows,
    })
}

fn build(source: &Source) -> Result<(String, SurfaceComplex), Failure> {
    let lattice =
        |r: Result<SurfaceComplex, _>| r.map_err(|e: aqsc_core::oracle::OracleError| Failure::Usage(e.to_string()));
    Ok(match source {
        Source::Toric { l } => (format!("toric l={l}"), lattice(build_toric(*l))?),
        Source::Klein { l } => (format!("klein l={l}"), lattice(build_klein(*l))?),
        Source::Projective { l } => (format!("projective l={l}"), lattice(build_projective(*l))?),
        Source::Polygon { orientation, genus } => {
            let s = surface(*genus, orientation.value())?;
            (format!("polygon {s}"), build_polygon_code(s))
        }
        Source::File { path } => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let complex = parse_complex(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), complex)
        }
    })
}

fn analyse(source: String, complex: &SurfaceComplex) -> Result<OracleSummary, Failure> {
    let code = css_from_complex(complex).map_err(|e| Failure::Inadmissible(e.to_string()))?;
    let distances = brute_force_distances(complex).map_err(|e| Failure::Inadmissible(e.to_string()))?;
    let method = serde_json::to_value(distances.method)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    Ok(OracleSummary {
        source,
        vertices: complex.n_vertices(),
        edges: complex.n_edges(),
        faces: complex.n_faces(),
        euler_characteristic: complex.euler_characteristic(),
        n: code.n,
        k: code.logical_count(),
        d_x: distances.d_x,
        d_z: distances.d_z,
        method,
        commutes: code.commutes(),
    })
}

fn write_report<W: Write>(out: &mut W, format: Format, report: &Report) -> io::Result<()> {
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "suite": report.suite,
                "passed": report.passed(),
                "failures": report.failures().len(),
                "checks": report.checks,
            });
            serde_json::to_writer_pretty(&mut *out, &value)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut *out);
            for c in &report.checks {
                w.serialize(c)?;
            }
            w.flush()
        }
        Format::Table => {
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status}  {}  {}", c.name, c.detail)?;
            }
            writeln!(
                out,
                "{}: {} checks, {} failed",
                report.suite,
                report.checks.len(),
                report.failures().len()
            )
        }
    }
}
