//! Row types and the three emitters. Markdown and CSV print reals to four
//! decimals; JSON keeps full precision.

use std::io::{self, Write};

use aqsc_core::design::published::PublishedRecord;
use aqsc_core::design::{CodeParameters, Provenance};
use aqsc_core::{Orientability, SchlafliSymbol, Surface};
use serde::{Deserialize, Serialize};

use crate::args::Format;

pub fn real(x: f64) -> String {
    format!("{x:.4}")
}

/// One code record, flattened.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub genus: u32,
    pub orientability: Orientability,
    pub p: u32,
    pub q: u32,
    pub n_f: u64,
    pub vertices: u64,
    pub l_pq: f64,
    pub l_qp: f64,
    pub d_h: f64,
    pub n: u64,
    pub k: u64,
    pub d_z: u32,
    pub d_x: u32,
    pub provenance: Provenance,
}

impl From<&CodeParameters> for OutputRecord {
    fn from(r: &CodeParameters) -> Self {
        OutputRecord {
            genus: r.surface.genus(),
            orientability: r.surface.orientability(),
            p: r.symbol.p(),
            q: r.symbol.q(),
            n_f: r.n_f,
            vertices: r.vertices,
            l_pq: r.l_pq,
            l_qp: r.l_qp,
            d_h: r.d_h,
            n: r.n,
            k: r.k,
            d_z: r.d_z,
            d_x: r.d_x,
            provenance: r.provenance,
        }
    }
}

impl OutputRecord {
    pub fn notation(&self) -> String {
        format!("[[{}, {}, {}/{}]]", self.n, self.k, self.d_z, self.d_x)
    }
}

/// `p,q,n_f,l_pq,n,k,d_z,d_x`; the record columns may be empty.
#[derive(Debug, Serialize)]
struct CsvRow {
    p: u32,
    q: u32,
    n_f: u64,
    l_pq: String,
    n: Option<u64>,
    k: Option<u64>,
    d_z: Option<u32>,
    d_x: Option<u32>,
}

fn csv_row(p: u32, q: u32, n_f: u64, l_pq: f64, record: Option<&OutputRecord>) -> CsvRow {
    CsvRow {
        p,
        q,
        n_f,
        l_pq: real(l_pq),
        n: record.map(|r| r.n),
        k: record.map(|r| r.k),
        d_z: record.map(|r| r.d_z),
        d_x: record.map(|r| r.d_x),
    }
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn json<W: Write, T: Serialize + ?Sized>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn symbol(p: u32, q: u32) -> String {
    format!("{{{p}, {q}}}")
}

pub fn write_records<W: Write>(out: &mut W, format: Format, records: &[OutputRecord]) -> io::Result<()> {
    match format {
        Format::Json => json(out, records),
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            for r in records {
                w.serialize(csv_row(r.p, r.q, r.n_f, r.l_pq, Some(r)))?;
            }
            if records.is_empty() {
                w.write_record(["p", "q", "n_f", "l_pq", "n", "k", "d_z", "d_x"])?;
            }
            w.flush()
        }
        Format::Table => {
            writeln!(
                out,
                "| {{p, q}} | surface | n_f | l(p, q) | [[n, k, d_z/d_x]] | distances |"
            )?;
            writeln!(out, "|---|---|---:|---:|---|---|")?;
            for r in records {
                let surface = Surface::new(r.genus, r.orientability).map_err(io::Error::other)?;
                let provenance = match r.provenance {
                    Provenance::Formula => "formula",
                    Provenance::Oracle => "oracle",
                };
                writeln!(
                    out,
                    "| {} | {surface} | {} | {} | {} | {provenance} |",
                    symbol(r.p, r.q),
                    r.n_f,
                    real(r.l_pq),
                    r.notation()
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PrintedRecord {
    pub n: u64,
    pub k: u64,
    pub d_z: u32,
    pub d_x: u32,
    pub printed_single_bracket: bool,
}

impl From<PublishedRecord> for PrintedRecord {
    fn from(r: PublishedRecord) -> Self {
        PrintedRecord {
            n: r.n,
            k: r.k,
            d_z: r.d_z,
            d_x: r.d_x,
            printed_single_bracket: r.single_bracket,
        }
    }
}

/// A reproduced table row. The record, when present, is the computed record
/// of the pair's `p < q` member, placed on the row the table prints it on.
#[derive(Debug, Serialize)]
pub struct TableRow {
    pub p: u32,
    pub q: u32,
    pub n_f: u64,
    pub l_pq: f64,
    pub record: Option<OutputRecord>,
    pub printed: Option<PrintedRecord>,
    pub matches_printed: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct ReproducedTable {
    pub table: u8,
    pub genus: u32,
    pub orientability: Orientability,
    pub d_h: f64,
    pub printed_d_h: f64,
    pub rows: Vec<TableRow>,
}

pub fn write_table<W: Write>(out: &mut W, format: Format, t: &ReproducedTable) -> io::Result<()> {
    match format {
        Format::Json => json(out, t),
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            for row in &t.rows {
                w.serialize(csv_row(row.p, row.q, row.n_f, row.l_pq, row.record.as_ref()))?;
            }
            w.flush()
        }
        Format::Table => {
            writeln!(
                out,
                "Table {}: non-orientable genus {}, d_h = {}",
                t.table,
                t.genus,
                real(t.d_h)
            )?;
            writeln!(out)?;
            writeln!(out, "| {{p, q}} | n_f | l(p, q) | [[n, k, d_z/d_x]] |")?;
            writeln!(out, "|---|---:|---:|---|")?;
            let mut notes = Vec::new();
            for row in &t.rows {
                let mut cell = row.record.as_ref().map(OutputRecord::notation).unwrap_or_default();
                if let Some(printed) = &row.printed {
                    let mut marks = String::new();
                    if row.matches_printed == Some(false) {
                        marks.push('*');
                        notes.push(format!(
                            "\\* {} printed as [[{}, {}, {}/{}]]",
                            symbol(row.p, row.q),
                            printed.n,
                            printed.k,
                            printed.d_z,
                            printed.d_x
                        ));
                    }
                    if printed.printed_single_bracket {
                        marks.push('†');
                        notes.push(format!("† {} printed with single brackets", symbol(row.p, row.q)));
                    }
                    cell += &marks;
                }
                writeln!(
                    out,
                    "| {} | {} | {} | {cell} |",
                    symbol(row.p, row.q),
                    row.n_f,
                    real(row.l_pq)
                )?;
            }
            if !notes.is_empty() {
                writeln!(out)?;
                for note in notes {
                    writeln!(out, "{note}")?;
                }
            }
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyRow {
    pub p: u32,
    pub q: u32,
    pub faces_per_step: u64,
    pub qubits_per_step: u64,
    pub n_f: String,
    pub n: String,
}

fn multiple(c: u64) -> String {
    if c == 1 {
        "(g - 2)".to_string()
    } else {
        format!("{c}(g - 2)")
    }
}

impl FamilyRow {
    pub fn new(p: u32, q: u32, faces_per_step: u64, qubits_per_step: u64) -> Self {
        FamilyRow {
            p,
            q,
            faces_per_step,
            qubits_per_step,
            n_f: multiple(faces_per_step),
            n: multiple(qubits_per_step),
        }
    }
}

pub fn write_families<W: Write>(out: &mut W, format: Format, rows: &[FamilyRow]) -> io::Result<()> {
    match format {
        Format::Json => json(out, rows),
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()
        }
        Format::Table => {
            writeln!(out, "Closed forms on the non-orientable genus-g surface")?;
            writeln!(out)?;
            writeln!(out, "| {{p, q}} | n_f | [[n, k, d_z/d_x]] |")?;
            writeln!(out, "|---|---|---|")?;
            for r in rows {
                writeln!(out, "| {} | {} | [[{}, g, d_z/d_x]] |", symbol(r.p, r.q), r.n_f, r.n)?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RateRow {
    pub p: u32,
    pub q: u32,
    pub genus: u32,
    /// Exact rates and their ratio as fractions.
    pub r1: String,
    pub r2: String,
    pub ratio: String,
    pub r1_value: f64,
    pub r2_value: f64,
}

pub fn write_rates<W: Write>(out: &mut W, format: Format, rows: &[RateRow]) -> io::Result<()> {
    match format {
        Format::Json => json(out, rows),
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            w.write_record(["p", "q", "g", "r1", "r2", "ratio"])?;
            for r in rows {
                w.write_record([
                    r.p.to_string(),
                    r.q.to_string(),
                    r.genus.to_string(),
                    real(r.r1_value),
                    real(r.r2_value),
                    r.ratio.clone(),
                ])?;
            }
            w.flush()
        }
        Format::Table => {
            writeln!(out, "| {{p, q}} | g | k/n orientable | k/n non-orientable | ratio |")?;
            writeln!(out, "|---|---:|---:|---:|---:|")?;
            for r in rows {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    symbol(r.p, r.q),
                    r.genus,
                    real(r.r1_value),
                    real(r.r2_value),
                    r.ratio
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GapRow {
    pub genus: u32,
    pub d_z: u32,
    pub d_x: u32,
    pub gap: i64,
}

pub fn write_gaps<W: Write>(out: &mut W, format: Format, sym: SchlafliSymbol, rows: &[GapRow]) -> io::Result<()> {
    match format {
        Format::Json => json(out, &serde_json::json!({ "p": sym.p(), "q": sym.q(), "points": rows })),
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            w.write_record(["g", "d_z", "d_x", "gap"])?;
            for r in rows {
                w.write_record([
                    r.genus.to_string(),
                    r.d_z.to_string(),
                    r.d_x.to_string(),
                    r.gap.to_string(),
                ])?;
            }
            w.flush()
        }
        Format::Table => {
            writeln!(out, "d_z - d_x for {sym} on non-orientable surfaces")?;
            writeln!(out)?;
            writeln!(out, "| g | d_z | d_x | d_z - d_x |")?;
            writeln!(out, "|---:|---:|---:|---:|")?;
            for r in rows {
                writeln!(out, "| {} | {} | {} | {} |", r.genus, r.d_z, r.d_x, r.gap)?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub n: usize,
    pub k: usize,
    pub d_x: usize,
    pub d_z: usize,
    pub method: String,
    pub commutes: bool,
}

pub fn write_oracle<W: Write>(out: &mut W, format: Format, s: &OracleSummary) -> io::Result<()> {
    match format {
        Format::Json => json(out, s),
        Format::Csv => {
            let mut w = csv_writer(&mut *out);
            w.serialize(s)?;
            w.flush()
        }
        Format::Table => {
            writeln!(out, "| source | V | E | F | χ | n | k | d_z | d_x | method |")?;
            writeln!(out, "|---|---:|---:|---:|---:|---:|---:|---:|---:|---|")?;
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                s.source, s.vertices, s.edges, s.faces, s.euler_characteristic, s.n, s.k, s.d_z, s.d_x, s.method
            )
        }
    }
}
