use super::{BinaryMatrix, OracleError, SurfaceComplex};

/// CSS code on the edges of a complex: `h_x` has one row per vertex, `h_z`
/// one row per face, entries are incidence counts mod 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssCode {
    pub n: usize,
    pub h_x: BinaryMatrix,
    pub h_z: BinaryMatrix,
}

impl CssCode {
    /// `h_x · h_zᵀ = 0`.
    pub fn commutes(&self) -> bool {
        self.h_x.mul_transpose(&self.h_z).is_zero()
    }

    pub fn logical_count(&self) -> usize {
        self.n - self.h_x.rank() - self.h_z.rank()
    }
}

pub fn css_from_complex(complex: &SurfaceComplex) -> Result<CssCode, OracleError> {
    complex.check_closed()?;
    let n = complex.n_edges();
    let mut h_x = BinaryMatrix::zeros(complex.n_vertices(), n);
    for (e, &[u, v]) in complex.edges().iter().enumerate() {
        h_x.toggle(u, e);
        h_x.toggle(v, e);
    }
    let mut h_z = BinaryMatrix::zeros(complex.n_faces(), n);
    for (f, boundary) in complex.faces().iter().enumerate() {
        for &e in boundary {
            h_z.toggle(f, e);
        }
    }
    Ok(CssCode { n, h_x, h_z })
}

/// `k = n - rank H_x - rank H_z`.
pub fn logical_count(code: &CssCode) -> usize {
    code.logical_count()
}
