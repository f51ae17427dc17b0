use super::{brute_force_distances, build_polygon_code, css_from_complex, OracleError};
use crate::design::{CodeParameters, Provenance};

/// Recomputes `k`, `d_x` and `d_z` on the explicit complex when the
/// tessellation is the fundamental polygon itself (`n_f = 1`), and marks the
/// record as oracle-confirmed if everything agrees. Other records are
/// returned unchanged.
pub fn confirm_record(record: &CodeParameters) -> Result<CodeParameters, OracleError> {
    if record.n_f != 1 {
        return Ok(record.clone());
    }
    let complex = build_polygon_code(record.surface);
    let code = css_from_complex(&complex)?;
    let k = code.logical_count() as u64;
    let d = brute_force_distances(&complex)?;
    let found = (code.n as u64, k, d.d_z as u32, d.d_x as u32);
    let expected = (record.n, record.k, record.d_z, record.d_x);
    if found != expected {
        return Err(OracleError::RecordMismatch {
            formula: record.notation(),
            oracle: format!("[[{}, {}, {}/{}]]", found.0, found.1, found.2, found.3),
        });
    }
    Ok(CodeParameters {
        provenance: Provenance::Oracle,
        ..record.clone()
    })
}
