use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{self, ConeFacets};
use crate::monomial::NatVector;

/// A finitely generated submonoid of `N^d`, stored by its minimal generators.
#[derive(Clone)]
pub struct AffineSemigroup {
    gens: Vec<NatVector>,
    dim: usize,
    facets: OnceLock<Option<ConeFacets>>,
}

impl PartialEq for AffineSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for AffineSemigroup {}

impl fmt::Debug for AffineSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineSemigroup{self}")
    }
}

impl fmt::Display for AffineSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", s.join(", "))
    }
}

/// Depth-first search for `z` with `Σ z_i gens[i] = target`.
///
/// Generators are tried in order with decreasing multiplicity; partial sums
/// exceeding the target in any coordinate are cut, and residuals already shown
/// unreachable from a given generator index are memoized.
fn find_witness(gens: &[NatVector], target: &NatVector) -> Option<Vec<u64>> {
    fn go(
        gens: &[NatVector],
        k: usize,
        rest: &NatVector,
        z: &mut Vec<u64>,
        failed: &mut HashSet<(usize, NatVector)>,
    ) -> bool {
        if rest.is_zero() {
            return true;
        }
        if k == gens.len() || failed.contains(&(k, rest.clone())) {
            return false;
        }
        let g = &gens[k];
        let max_c = g
            .entries()
            .iter()
            .zip(rest.entries())
            .filter(|(a, _)| **a > 0)
            .map(|(a, r)| r / a)
            .min()
            .unwrap_or(0);
        for c in (0..=max_c).rev() {
            let Some(r) = rest.checked_sub(&g.checked_scale(c).expect("bounded by target")) else {
                continue;
            };
            z[k] = c;
            if go(gens, k + 1, &r, z, failed) {
                return true;
            }
        }
        z[k] = 0;
        failed.insert((k, rest.clone()));
        false
    }
    let mut z = vec![0; gens.len()];
    let mut failed = HashSet::new();
    go(gens, 0, target, &mut z, &mut failed).then_some(z)
}

impl AffineSemigroup {
    pub fn new(gens: Vec<NatVector>) -> Result<Self> {
        let dim = match gens.first() {
            Some(g) => g.dim(),
            None => return Err(Error::InvalidSemigroup("no generators".into())),
        };
        if dim == 0 {
            return Err(Error::InvalidSemigroup("generators must have positive dimension".into()));
        }
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.dim() });
            }
            if g.is_zero() {
                return Err(Error::InvalidSemigroup("zero generator".into()));
            }
        }
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) {
                return Err(Error::InvalidSemigroup(format!("repeated generator {g}")));
            }
            let others: Vec<NatVector> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            if find_witness(&others, g).is_some() {
                return Err(Error::InvalidSemigroup(format!(
                    "generating set is not minimal: {g} is a combination of the others"
                )));
            }
        }
        Ok(AffineSemigroup {
            gens,
            dim,
            facets: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[NatVector] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub(crate) fn raw_generators(&self) -> Vec<Vec<u64>> {
        self.gens.iter().map(|g| g.entries().to_vec()).collect()
    }

    pub fn generator_sum(&self) -> NatVector {
        NatVector::sum(self.dim, &self.gens).expect("generator sum fits in u64")
    }

    /// Largest coordinate of any generator, per coordinate.
    pub fn max_generator_coordinates(&self) -> NatVector {
        NatVector::new(
            (0..self.dim)
                .map(|i| self.gens.iter().map(|g| g.entries()[i]).max().unwrap_or(0))
                .collect(),
        )
    }

    pub fn contains(&self, x: &NatVector) -> bool {
        self.witness(x).is_some()
    }

    /// A factorization `z` with `Σ z_i a_i = x`, if one exists.
    pub fn witness(&self, x: &NatVector) -> Option<Vec<u64>> {
        if x.dim() != self.dim {
            return None;
        }
        find_witness(&self.gens, x)
    }

    /// Krull dimension of `K[Γ]`: the rank of the generator matrix.
    pub fn krull_dimension(&self) -> usize {
        let rows: Vec<Vec<i64>> = self
            .gens
            .iter()
            .map(|g| g.entries().iter().map(|&v| v as i64).collect())
            .collect();
        linalg::rank(&rows)
    }

    fn facets(&self) -> Option<&ConeFacets> {
        self.facets
            .get_or_init(|| (self.dim <= 3).then(|| ConeFacets::new(&self.raw_generators(), self.dim)))
            .as_ref()
    }

    /// Exact membership in `Cone(Γ) = Q_{>=0}`-span of the generators.
    pub fn cone_contains(&self, x: &NatVector) -> bool {
        if x.dim() != self.dim {
            return false;
        }
        match self.facets() {
            Some(f) => f.contains(x.entries()),
            None => linalg::simplex_feasible(&self.raw_generators(), x.entries()),
        }
    }

    /// Indices of generators lying on an extremal ray of the cone.
    pub fn extremal_generator_indices(&self) -> Vec<usize> {
        let raw = self.raw_generators();
        (0..raw.len())
            .filter(|&i| {
                let dir = linalg::primitive(&raw[i]);
                let others: Vec<Vec<u64>> = raw
                    .iter()
                    .filter(|g| linalg::primitive(g) != dir)
                    .cloned()
                    .collect();
                others.is_empty() || !linalg::cone_contains(&others, &raw[i])
            })
            .collect()
    }

    /// Primitive vectors spanning the extremal rays, in generator order.
    pub fn extremal_rays(&self) -> Vec<NatVector> {
        let mut rays: Vec<NatVector> = Vec::new();
        for i in self.extremal_generator_indices() {
            let r = NatVector::new(linalg::primitive(self.gens[i].entries()));
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
        rays
    }

    /// All elements of Γ inside the box `[0, bound]`.
    pub fn elements_in_box(&self, bound: &NatVector) -> Result<ElementSet> {
        ElementSet::new(self, bound)
    }

    /// `H(Γ) ∩ [0, bound]` together with a finiteness flag: the flag is set
    /// when no gap lies in the outer shell of the box whose thickness is the
    /// largest generator coordinate.
    pub fn gap_set(&self, bound: &NatVector) -> Result<GapSet> {
        self.scan_gaps(bound, false)
    }

    /// Gaps lying in the group `ZΓ`. Every pseudo-Frobenius element lies there
    /// (`f + a_1 ∈ Γ`), and the set is finite for MPD semigroups whose group is
    /// a proper sublattice of `Z^d`, where `H(Γ)` itself is infinite.
    pub fn group_gap_set(&self, bound: &NatVector) -> Result<GapSet> {
        self.scan_gaps(bound, true)
    }

    fn scan_gaps(&self, bound: &NatVector, in_group: bool) -> Result<GapSet> {
        if bound.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: bound.dim() });
        }
        let elems = self.elements_in_box(bound)?;
        let thick = self.max_generator_coordinates();
        let lattice = in_group.then(|| {
            let rows: Vec<Vec<u64>> = self.gens.iter().map(|g| g.entries().to_vec()).collect();
            linalg::IntegerLattice::new(&rows, self.dim)
        });
        let mut gaps = Vec::new();
        let mut shell_clean = true;
        for x in elems.points() {
            if elems.contains(&x) || !self.cone_contains(&x) {
                continue;
            }
            if lattice.as_ref().is_some_and(|l| !l.contains(x.entries())) {
                continue;
            }
            let in_shell = x
                .entries()
                .iter()
                .zip(bound.entries())
                .zip(thick.entries())
                .any(|((&xi, &bi), &ti)| xi + ti > bi);
            if in_shell {
                shell_clean = false;
            }
            gaps.push(x);
        }
        Ok(GapSet {
            gaps,
            shell_clean,
            bound: bound.clone(),
        })
    }

    /// Pseudo-Frobenius elements read off the gaps in `ZΓ`; requires a certified box.
    pub fn pseudo_frobenius_direct(&self, bound: &NatVector) -> Result<Vec<NatVector>> {
        let (pf, certified) = self.pseudo_frobenius_scan(bound)?;
        if !certified {
            return Err(Error::UncertifiedBox(bound.to_string()));
        }
        Ok(pf)
    }

    /// Pseudo-Frobenius elements inside the box, with the certification flag
    /// of the underlying gap scan. Without the flag the list is only `PF ∩ box`
    /// if the gap set is finite.
    pub fn pseudo_frobenius_scan(&self, bound: &NatVector) -> Result<(Vec<NatVector>, bool)> {
        let gs = self.group_gap_set(bound)?;
        let pf = gs
            .gaps
            .iter()
            .filter(|f| self.gens.iter().all(|a| self.contains(&(*f + a))))
            .cloned()
            .collect();
        Ok((pf, gs.shell_clean))
    }
}

/// Result of scanning a box for elements of `Cone(Γ) ∖ Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSet {
    pub gaps: Vec<NatVector>,
    pub shell_clean: bool,
    pub bound: NatVector,
}

/// Largest box the dense element table is allowed to cover.
pub const MAX_BOX_POINTS: u64 = 1 << 28;

/// Dense membership table of Γ ∩ `[0, bound]`.
#[derive(Clone, Debug)]
pub struct ElementSet {
    bound: Vec<u64>,
    strides: Vec<u64>,
    bits: Vec<u64>,
}

impl ElementSet {
    pub fn new(s: &AffineSemigroup, bound: &NatVector) -> Result<Self> {
        Self::with_budget(s, bound, MAX_BOX_POINTS)
    }

    pub fn with_budget(s: &AffineSemigroup, bound: &NatVector, budget: u64) -> Result<Self> {
        if bound.dim() != s.dim() {
            return Err(Error::DimensionMismatch { expected: s.dim(), got: bound.dim() });
        }
        let b = bound.entries().to_vec();
        let d = b.len();
        let mut strides = vec![1u64; d];
        let mut total: u64 = 1;
        for i in (0..d).rev() {
            strides[i] = total;
            total = total
                .checked_mul(b[i] + 1)
                .filter(|&t| t <= budget)
                .ok_or(Error::ScanBudget { points: total.saturating_mul(b[i] + 1), budget })?;
        }
        let mut bits = vec![0u64; total.div_ceil(64) as usize];
        let offsets: Vec<(Vec<u64>, u64)> = s
            .generators()
            .iter()
            .map(|g| {
                let off = g.entries().iter().zip(&strides).map(|(a, st)| a * st).sum();
                (g.entries().to_vec(), off)
            })
            .collect();
        let mut coord = vec![0u64; d];
        for idx in 0..total {
            let member = idx == 0
                || offsets.iter().any(|(g, off)| {
                    g.iter().zip(&coord).all(|(a, c)| a <= c) && {
                        let j = idx - off;
                        bits[(j / 64) as usize] >> (j % 64) & 1 == 1
                    }
                });
            if member {
                bits[(idx / 64) as usize] |= 1 << (idx % 64);
            }
            for i in (0..d).rev() {
                if coord[i] < b[i] {
                    coord[i] += 1;
                    break;
                }
                coord[i] = 0;
            }
        }
        Ok(ElementSet { bound: b, strides, bits })
    }

    pub fn bound(&self) -> NatVector {
        NatVector::new(self.bound.clone())
    }

    pub fn in_box(&self, x: &[u64]) -> bool {
        x.len() == self.bound.len() && x.iter().zip(&self.bound).all(|(a, b)| a <= b)
    }

    /// Membership for points inside the box; points outside return `false`.
    pub fn contains(&self, x: &NatVector) -> bool {
        self.contains_raw(x.entries())
    }

    pub fn contains_raw(&self, x: &[u64]) -> bool {
        if !self.in_box(x) {
            return false;
        }
        let idx: u64 = x.iter().zip(&self.strides).map(|(a, s)| a * s).sum();
        self.bits[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    /// Every lattice point of the box, in row-major order.
    pub fn points(&self) -> impl Iterator<Item = NatVector> + '_ {
        let total: u64 = self.bound.iter().map(|b| b + 1).product();
        (0..total).map(move |mut idx| {
            let mut c = vec![0u64; self.bound.len()];
            for (i, st) in self.strides.iter().enumerate() {
                c[i] = idx / st;
                idx %= st;
            }
            NatVector::new(c)
        })
    }

    /// Elements of Γ in the box, in row-major order.
    pub fn members(&self) -> impl Iterator<Item = NatVector> + '_ {
        self.points().filter(|p| self.contains(p))
    }
}
