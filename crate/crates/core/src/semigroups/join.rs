use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::NatVector;
use crate::semigroups::{AffineSemigroup, NumericalSemigroup};

/// `Γ1 ⊔ Γ2`: the semigroup generated by both generating sets, whose
/// extremal rays are jointly linearly independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Join {
    pub left: AffineSemigroup,
    pub right: AffineSemigroup,
    /// Generators of `left` followed by those of `right`.
    pub semigroup: AffineSemigroup,
    /// `dim(Γ1 ⊔ Γ2) = dim Γ1 + dim Γ2`.
    pub dimension_adds: bool,
}

pub fn join(left: &AffineSemigroup, right: &AffineSemigroup) -> Result<Join> {
    if left.dim() != right.dim() {
        return Err(Error::DimensionMismatch { expected: left.dim(), got: right.dim() });
    }
    if let Some(g) = left.generators().iter().find(|g| right.generators().contains(g)) {
        return Err(Error::InvalidJoin(format!("generator {g} is shared")));
    }
    let rays: Vec<Vec<i64>> = left
        .extremal_rays()
        .into_iter()
        .chain(right.extremal_rays())
        .map(|r| r.entries().iter().map(|&x| x as i64).collect())
        .collect();
    if !linalg::linearly_independent(&rays) {
        return Err(Error::InvalidJoin("extremal rays of the factors are linearly dependent".into()));
    }
    let gens: Vec<NatVector> = left.generators().iter().chain(right.generators()).cloned().collect();
    let semigroup = AffineSemigroup::new(gens).map_err(|e| Error::InvalidJoin(e.to_string()))?;
    let dimension_adds = semigroup.krull_dimension() == left.krull_dimension() + right.krull_dimension();
    Ok(Join {
        left: left.clone(),
        right: right.clone(),
        semigroup,
        dimension_adds,
    })
}

/// Embeds two numerical semigroups on the coordinate axes of `N^2` and joins them.
pub fn axis_join(left: &NumericalSemigroup, right: &NumericalSemigroup) -> Result<Join> {
    let l = AffineSemigroup::new(left.generators().iter().map(|&g| NatVector::new(vec![g, 0])).collect())?;
    let r = AffineSemigroup::new(right.generators().iter().map(|&g| NatVector::new(vec![0, g])).collect())?;
    join(&l, &r)
}
