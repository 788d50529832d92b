use super::betti::hochster_betti;
use super::complex::FieldTag;
use crate::error::OracleError;
use crate::ideal::SquarefreeIdeal;

/// `S/I` is Cohen-Macaulay iff `pd(S/I) = ht(I)` (Auslander-Buchsbaum).
pub fn is_cohen_macaulay(ideal: &SquarefreeIdeal, field: FieldTag) -> Result<bool, OracleError> {
    let pd = hochster_betti(ideal, field)?.reg_pd()?.pd_quotient;
    Ok(pd == ideal.height()?)
}

/// All generators in one degree `d` and `reg(I) = d`.
pub fn has_linear_resolution(ideal: &SquarefreeIdeal, field: FieldTag) -> Result<bool, OracleError> {
    let table = hochster_betti(ideal, field)?;
    let Some(d) = ideal.generation_degree() else {
        return Ok(false);
    };
    Ok(table.reg_pd()?.reg_ideal == d)
}

/// Every nonzero squarefree component `I_[d]` has a linear resolution.
pub fn is_componentwise_linear(
    ideal: &SquarefreeIdeal,
    field: FieldTag,
) -> Result<bool, OracleError> {
    let Some(start) = ideal.indeg() else {
        return Err(crate::error::IdealError::ZeroIdeal("componentwise linearity").into());
    };
    for d in start..=ideal.ambient() {
        let component = ideal.squarefree_component(d)?;
        if !component.is_zero() && !has_linear_resolution(&component, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `S/I` is sequentially Cohen-Macaulay iff the Alexander dual of `I` is
/// componentwise linear.
pub fn is_sequentially_cm(ideal: &SquarefreeIdeal, field: FieldTag) -> Result<bool, OracleError> {
    is_componentwise_linear(&ideal.alexander_dual()?, field)
}
