use super::{aqsc_parameters, CodeParameters};
use crate::geometry::{SchlafliSymbol, MAX_SIDES};
use crate::Surface;

/// Every admissible `{p,q}` with `3 <= p <= p_max` and `3 <= q <= q_max`,
/// sorted by `(p, q)`. Bounds above [`MAX_SIDES`] are clamped.
pub fn enumerate_admissible(surface: Surface, p_max: u32, q_max: u32) -> Vec<CodeParameters> {
    let mut out = Vec::new();
    for p in 3..=p_max.min(MAX_SIDES) {
        for q in 3..=q_max.min(MAX_SIDES) {
            let sym = SchlafliSymbol::new(p, q).expect("p, q >= 3");
            if let Ok(record) = aqsc_parameters(surface, sym) {
                out.push(record);
            }
        }
    }
    out
}
