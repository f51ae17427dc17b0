use serde::Serialize;

use super::DesignError;
use crate::geometry::SchlafliSymbol;

/// Closed forms `n_f = a(g - 2)`, `n = b(g - 2)` for tessellations of the
/// non-orientable genus-`g` surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub p: u32,
    pub q: u32,
    pub faces_per_step: u64,
    pub qubits_per_step: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyValues {
    pub n_f: u64,
    pub n: u64,
}

pub const TABLE5_FAMILIES: [ClosedForm; 7] = [
    ClosedForm {
        p: 7,
        q: 3,
        faces_per_step: 6,
        qubits_per_step: 21,
    },
    ClosedForm {
        p: 8,
        q: 3,
        faces_per_step: 3,
        qubits_per_step: 12,
    },
    ClosedForm {
        p: 9,
        q: 3,
        faces_per_step: 2,
        qubits_per_step: 9,
    },
    ClosedForm {
        p: 12,
        q: 3,
        faces_per_step: 1,
        qubits_per_step: 6,
    },
    ClosedForm {
        p: 5,
        q: 4,
        faces_per_step: 4,
        qubits_per_step: 10,
    },
    ClosedForm {
        p: 6,
        q: 4,
        faces_per_step: 2,
        qubits_per_step: 6,
    },
    ClosedForm {
        p: 8,
        q: 4,
        faces_per_step: 1,
        qubits_per_step: 4,
    },
];

impl ClosedForm {
    pub fn symbol(&self) -> SchlafliSymbol {
        SchlafliSymbol::new(self.p, self.q).expect("table entries are valid")
    }

    pub fn evaluate(&self, g: u32) -> FamilyValues {
        let step = u64::from(g - 2);
        FamilyValues {
            n_f: self.faces_per_step * step,
            n: self.qubits_per_step * step,
        }
    }
}

pub fn table5_closed_forms(sym: SchlafliSymbol, g: u32) -> Result<FamilyValues, DesignError> {
    let family = TABLE5_FAMILIES
        .iter()
        .find(|f| f.p == sym.p() && f.q == sym.q())
        .ok_or(DesignError::UnsupportedSymbol(sym))?;
    if g < 3 {
        return Err(DesignError::DegenerateGenus(g));
    }
    Ok(family.evaluate(g))
}
