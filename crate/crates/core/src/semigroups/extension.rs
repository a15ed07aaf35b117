use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::NatVector;
use crate::semigroups::AffineSemigroup;

/// `E = ⟨l a_1, ..., l a_n, a⟩` with `a = Σ u_i a_i ∈ Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub base: AffineSemigroup,
    pub l: u64,
    pub u: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub spec: ExtensionSpec,
    /// The added generator `a`.
    pub a: NatVector,
    /// Generators `l a_1, ..., l a_n, a` in this order.
    pub semigroup: AffineSemigroup,
}

impl ExtensionSpec {
    pub fn new(base: AffineSemigroup, l: u64, u: Vec<u64>) -> Self {
        ExtensionSpec { base, l, u }
    }

    /// `a = Σ u_i a_i`.
    pub fn a(&self) -> Result<NatVector> {
        if self.u.len() != self.base.num_generators() {
            return Err(Error::InvalidExtension(format!(
                "witness has {} entries for {} generators",
                self.u.len(),
                self.base.num_generators()
            )));
        }
        let mut acc = NatVector::zero(self.base.dim());
        for (g, &c) in self.base.generators().iter().zip(&self.u) {
            acc = acc.checked_add(&g.checked_scale(c)?)?;
        }
        Ok(acc)
    }

    pub fn extend(&self) -> Result<Extension> {
        if self.l == 0 {
            return Err(Error::InvalidExtension("l must be positive".into()));
        }
        let a = self.a()?;
        if a.is_zero() {
            return Err(Error::InvalidExtension("a must be a nonzero element".into()));
        }
        if !a.entries().iter().any(|&c| c.gcd(&self.l) == 1) {
            return Err(Error::InvalidExtension(format!(
                "l={} shares a factor with every component of a={a}",
                self.l
            )));
        }
        let mut gens = self
            .base
            .generators()
            .iter()
            .map(|g| g.checked_scale(self.l))
            .collect::<Result<Vec<_>>>()?;
        gens.push(a.clone());
        let semigroup = AffineSemigroup::new(gens).map_err(|e| Error::InvalidExtension(e.to_string()))?;
        Ok(Extension {
            spec: self.clone(),
            a,
            semigroup,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u64]) -> NatVector {
        NatVector::new(e.to_vec())
    }

    fn matrix_a() -> AffineSemigroup {
        AffineSemigroup::new(vec![v(&[3, 0]), v(&[5, 0]), v(&[0, 1]), v(&[1, 3]), v(&[2, 3])]).unwrap()
    }

    #[test]
    fn matrix_example_extends_to_matrix_b() {
        // a = (6, 9) = 3 * (2, 3)
        let e = ExtensionSpec::new(matrix_a(), 2, vec![0, 0, 0, 0, 3]).extend().unwrap();
        assert_eq!(e.a, v(&[6, 9]));
        let expected = vec![v(&[6, 0]), v(&[10, 0]), v(&[0, 2]), v(&[2, 6]), v(&[4, 6]), v(&[6, 9])];
        assert_eq!(e.semigroup.generators(), expected.as_slice());
        assert_eq!(e.semigroup.generator_sum(), v(&[28, 23]));
    }

    #[test]
    fn degenerate_extensions_are_rejected() {
        // l = 1 makes a redundant
        assert!(ExtensionSpec::new(matrix_a(), 1, vec![1, 0, 0, 0, 0]).extend().is_err());
        assert!(ExtensionSpec::new(matrix_a(), 2, vec![0; 5]).extend().is_err());
        assert!(ExtensionSpec::new(matrix_a(), 2, vec![1]).extend().is_err());
    }

    #[test]
    fn numerical_extension() {
        let base = AffineSemigroup::new(vec![v(&[3]), v(&[5])]).unwrap();
        // a = 8 shares the factor 2 with l = 2
        assert!(matches!(
            ExtensionSpec::new(base.clone(), 2, vec![1, 1]).extend(),
            Err(Error::InvalidExtension(_))
        ));
        let e = ExtensionSpec::new(base, 2, vec![3, 0]).extend().unwrap();
        assert_eq!(e.semigroup.generators(), &[v(&[6]), v(&[10]), v(&[9])]);
    }
}
