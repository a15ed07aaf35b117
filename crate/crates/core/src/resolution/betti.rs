use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::NatVector;
use crate::resolution::complex::{divisor_complex_in, homology_ranks, MAX_VERTICES};
use crate::semigroups::{AffineSemigroup, ElementSet, TermOrderNd, MAX_BOX_POINTS};

/// Multigraded Betti numbers `β_{i,b}` of a semigroup ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    /// `rows[i]` maps each degree in `B_i` to its multiplicity.
    rows: Vec<BTreeMap<NatVector, u64>>,
}

impl BettiTable {
    pub fn from_rows(rows: Vec<BTreeMap<NatVector, u64>>) -> Self {
        let mut t = BettiTable { rows };
        t.trim();
        t
    }

    fn trim(&mut self) {
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    pub fn rows(&self) -> &[BTreeMap<NatVector, u64>] {
        &self.rows
    }

    /// `B_i` as a sorted list of distinct degrees.
    pub fn degrees(&self, i: usize) -> Vec<NatVector> {
        self.rows.get(i).map(|r| r.keys().cloned().collect()).unwrap_or_default()
    }

    /// `B_i` as a sorted multiset.
    pub fn degrees_with_multiplicity(&self, i: usize) -> Vec<NatVector> {
        self.rows
            .get(i)
            .map(|r| r.iter().flat_map(|(b, &m)| std::iter::repeat_n(b.clone(), m as usize)).collect())
            .unwrap_or_default()
    }

    pub fn totals(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.values().sum()).collect()
    }

    pub fn projective_dimension(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// Degrees of the last nonzero module.
    pub fn top_degrees(&self) -> Vec<NatVector> {
        self.degrees(self.projective_dimension())
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            let degs: Vec<String> = row
                .iter()
                .map(|(b, &m)| if m == 1 { b.to_string() } else { format!("{b}^{m}") })
                .collect();
            writeln!(f, "B_{i} ({}): {}", row.values().sum::<u64>(), degs.join(" "))?;
        }
        Ok(())
    }
}

/// Region of `Γ` scanned for Betti degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiBound {
    pub bound: NatVector,
    /// Optional linear cut `Σ w_k b_k <= limit` inside the box.
    pub weight_limit: Option<(Vec<u64>, u64)>,
    /// Whether every Betti degree is known to lie inside the region; the
    /// boundary-shell test is skipped then.
    pub certified: bool,
    /// Largest number of box points the scan may allocate.
    pub budget: u64,
}

impl BettiBound {
    pub fn boxed(bound: NatVector) -> Self {
        BettiBound { bound, weight_limit: None, certified: false, budget: MAX_BOX_POINTS }
    }

    /// For one-dimensional semigroups `c_i · r` on a primitive ray `r`: the
    /// certified bound `g (F + Σ c_i / g) · r` with `g = gcd(c_i)`. Such rings
    /// are Cohen–Macaulay, so shifts increase strictly along the resolution and
    /// all lie below the top one. Otherwise the box `n · Σ a_i` (a pd-guess of
    /// `n - 1`, plus one).
    pub fn default_for(s: &AffineSemigroup) -> Result<Self> {
        let n = s.num_generators() as u64;
        if s.krull_dimension() == 1 {
            let ray = linalg::primitive(s.generators()[0].entries());
            let k = ray.iter().position(|&x| x > 0).expect("generators are nonzero");
            let coeffs: Vec<u64> = s.generators().iter().map(|g| g.entries()[k] / ray[k]).collect();
            let g = coeffs.iter().fold(0u64, |g, &x| num_integer::gcd(g, x));
            let reduced: Vec<u64> = coeffs.iter().map(|c| c / g).collect();
            let ns = crate::semigroups::NumericalSemigroup::generated_by(&reduced)?;
            let top = g * (ns.frobenius().unwrap_or(0) + reduced.iter().sum::<u64>());
            return Ok(BettiBound {
                bound: NatVector::new(ray.clone()).checked_scale(top)?,
                weight_limit: None,
                certified: true,
                budget: MAX_BOX_POINTS,
            });
        }
        Ok(Self::boxed(s.generator_sum().checked_scale(n)?))
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn admits(&self, b: &[u64]) -> bool {
        match &self.weight_limit {
            None => true,
            Some((w, lim)) => b.iter().zip(w).map(|(x, y)| x * y).sum::<u64>() <= *lim,
        }
    }

    /// Points within one generator step of the region's outer boundary.
    fn on_shell(&self, b: &[u64], step: &[u64], step_weight: u64) -> bool {
        b.iter().zip(self.bound.entries()).zip(step).any(|((x, bd), st)| x + st > *bd)
            || match &self.weight_limit {
                None => false,
                Some((w, lim)) => b.iter().zip(w).map(|(x, y)| x * y).sum::<u64>() + step_weight > *lim,
            }
    }
}

/// Betti degrees over the default region.
pub fn betti_degrees(s: &AffineSemigroup) -> Result<BettiTable> {
    betti_degrees_within(s, &BettiBound::default_for(s)?, Deadline::NONE)
}

/// `β_{i,b} = dim H̃_{i-1}(Δ_b)` summed over all `b ∈ Γ` in the region.
///
/// Degrees are scanned in parallel and assembled in sorted order, so the table
/// does not depend on the thread count. Unless the region is certified, a
/// nonzero Betti number within one generator step of the boundary is reported
/// as [`Error::BoundInsufficient`].
pub fn betti_degrees_within(s: &AffineSemigroup, bound: &BettiBound, deadline: Deadline) -> Result<BettiTable> {
    crate::monomial::check_dim(s.dim(), bound.bound.dim())?;
    if s.num_generators() > MAX_VERTICES {
        return Err(Error::Invariant(format!("{} generators exceed the face-mask width", s.num_generators())));
    }
    let set = ElementSet::with_budget(s, &bound.bound, bound.budget)?;
    let gens = s.generators();
    let candidates: Vec<Vec<u64>> = set
        .members()
        .map(NatVector::into_entries)
        .filter(|b| bound.admits(b))
        .filter(|b| {
            b.iter().all(|&x| x == 0) || {
                // at least two vertices, else Δ_b is a point or empty
                gens.iter()
                    .filter(|g| {
                        let r: Option<Vec<u64>> = b.iter().zip(g.entries()).map(|(x, a)| x.checked_sub(*a)).collect();
                        r.is_some_and(|r| set.contains_raw(&r))
                    })
                    .nth(1)
                    .is_some()
            }
        })
        .collect();
    let results: Vec<Option<(Vec<u64>, Vec<u64>)>> = candidates
        .par_iter()
        .map(|b| {
            deadline.check()?;
            let k = divisor_complex_in(gens, &set, b);
            if k.cone_apex().is_some() {
                return Ok(None);
            }
            let h = homology_ranks(&k);
            Ok(h.iter().any(|&x| x > 0).then(|| (b.clone(), h)))
        })
        .collect::<Result<_>>()?;
    let max = s.max_generator_coordinates();
    let step_weight = match &bound.weight_limit {
        None => 0,
        Some((w, _)) => gens
            .iter()
            .map(|g| g.entries().iter().zip(w).map(|(x, y)| x * y).sum::<u64>())
            .max()
            .unwrap_or(0),
    };
    let mut rows: Vec<BTreeMap<NatVector, u64>> = Vec::new();
    for (b, h) in results.into_iter().flatten() {
        if !bound.certified && h.iter().any(|&x| x > 0) && b.iter().any(|&x| x > 0) && bound.on_shell(&b, max.entries(), step_weight) {
            return Err(Error::BoundInsufficient {
                bound: bound.bound.to_string(),
                degree: NatVector::new(b).to_string(),
            });
        }
        for (i, &m) in h.iter().enumerate() {
            if m > 0 {
                if rows.len() <= i {
                    rows.resize(i + 1, BTreeMap::new());
                }
                *rows[i].entry(NatVector::new(b.clone())).or_insert(0) += m;
            }
        }
    }
    Ok(BettiTable::from_rows(rows))
}

/// Homological invariants read off a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolutionSummary {
    pub pd: usize,
    pub depth: usize,
    pub dim: usize,
    pub cm: bool,
    pub gorenstein: bool,
}

/// `depth = n - pd` (Auslander–Buchsbaum) and `dim = rank ZΓ`.
pub fn resolution_summary(s: &AffineSemigroup, table: &BettiTable) -> ResolutionSummary {
    let n = s.num_generators();
    let pd = table.projective_dimension();
    let depth = n - pd;
    let dim = s.krull_dimension();
    let cm = depth == dim;
    let gorenstein = cm && table.totals().last() == Some(&1);
    ResolutionSummary { pd, depth, dim, cm, gorenstein }
}

/// `{b - Σ a_i : b ∈ B_pd}`, valid when `pd = n - 1`.
pub fn pf_via_betti(s: &AffineSemigroup, table: &BettiTable) -> Result<Vec<NatVector>> {
    let (pd, n) = (table.projective_dimension(), s.num_generators());
    if pd + 1 != n {
        return Err(Error::NotMpd { pd, n });
    }
    let sum = s.generator_sum();
    table
        .top_degrees()
        .iter()
        .map(|b| b.checked_sub(&sum).ok_or_else(|| Error::Invariant(format!("top degree {b} below {sum}"))))
        .collect()
}

/// A box certifying the gap set of an MPD semigroup: every gap lies below some
/// pseudo-Frobenius element, so the box reaches one generator beyond them.
pub fn certifying_gap_box(s: &AffineSemigroup, table: &BettiTable) -> Result<NatVector> {
    let pf = pf_via_betti(s, table)?;
    let thick = s.max_generator_coordinates();
    let entries = (0..s.dim())
        .map(|j| pf.iter().map(|f| f.entries()[j]).max().unwrap_or(0) + thick.entries()[j] + 1)
        .collect();
    Ok(NatVector::new(entries))
}

/// `|PF| = 1` and the single pseudo-Frobenius element is `max_≺` of the gaps
/// in `ZΓ`.
pub fn is_prec_symmetric(
    s: &AffineSemigroup,
    table: &BettiTable,
    order: &TermOrderNd,
    gap_box: &NatVector,
) -> Result<bool> {
    let gaps = s.group_gap_set(gap_box)?;
    if !gaps.shell_clean {
        return Err(Error::UncertifiedBox(gap_box.to_string()));
    }
    let pf = pf_via_betti(s, table)?;
    Ok(pf.len() == 1 && order.max(&gaps.gaps) == Some(&pf[0]))
}

/// First pair `b, b'` in some `B_i` (`i ≥ 1`) whose difference lies in `Γ`.
///
/// A degree occurring with multiplicity above one counts as a violation, since
/// `b - b = 0 ∈ Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SifrReport {
    pub holds: bool,
    pub violation: Option<(usize, NatVector, NatVector)>,
}

pub fn sifr_check(s: &AffineSemigroup, table: &BettiTable) -> SifrReport {
    for (i, row) in table.rows().iter().enumerate().skip(1) {
        for (b, &m) in row {
            if m > 1 {
                return SifrReport { holds: false, violation: Some((i, b.clone(), b.clone())) };
            }
        }
        let degs: Vec<&NatVector> = row.keys().collect();
        for x in 0..degs.len() {
            for y in 0..degs.len() {
                if x == y {
                    continue;
                }
                if let Some(d) = degs[x].checked_sub(degs[y]) {
                    if s.contains(&d) {
                        return SifrReport { holds: false, violation: Some((i, degs[x].clone(), degs[y].clone())) };
                    }
                }
            }
        }
    }
    SifrReport { holds: true, violation: None }
}

/// Betti table of a tensor product: row `i` collects `B_p + B_q` over `p + q = i`.
pub fn tensor_betti(t1: &BettiTable, t2: &BettiTable) -> Result<BettiTable> {
    let (r1, r2) = (t1.rows(), t2.rows());
    if r1.is_empty() || r2.is_empty() {
        return Ok(BettiTable::default());
    }
    let mut rows: Vec<BTreeMap<NatVector, u64>> = vec![BTreeMap::new(); r1.len() + r2.len() - 1];
    for (p, a) in r1.iter().enumerate() {
        for (q, b) in r2.iter().enumerate() {
            for (x, &mx) in a {
                for (y, &my) in b {
                    *rows[p + q].entry(x.checked_add(y)?).or_insert(0) += mx * my;
                }
            }
        }
    }
    Ok(BettiTable::from_rows(rows))
}

/// Number of minimal generators of the toric ideal, `β_1`, from a Betti table.
pub fn minimal_relations(table: &BettiTable) -> u64 {
    table.totals().get(1).copied().unwrap_or(0)
}

/// Rank of the group generated by the semigroup.
pub fn group_rank(s: &AffineSemigroup) -> usize {
    let rows: Vec<Vec<i64>> = s.generators().iter().map(|g| g.entries().iter().map(|&x| x as i64).collect()).collect();
    linalg::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroups::{axis_join, NumericalSemigroup};
    use proptest::prelude::*;

    fn v(e: &[u64]) -> NatVector {
        NatVector::new(e.to_vec())
    }

    fn numerical(g: &[u64]) -> AffineSemigroup {
        NumericalSemigroup::new(g.to_vec()).unwrap().to_affine()
    }

    fn matrix_a() -> AffineSemigroup {
        AffineSemigroup::new(vec![v(&[3, 0]), v(&[5, 0]), v(&[0, 1]), v(&[1, 3]), v(&[2, 3])]).unwrap()
    }

    fn scalars(xs: &[u64]) -> Vec<NatVector> {
        xs.iter().map(|&x| NatVector::scalar(x)).collect()
    }

    #[test]
    fn three_five_seven() {
        let s = numerical(&[3, 5, 7]);
        let t = betti_degrees(&s).unwrap();
        assert_eq!(t.totals(), vec![1, 3, 2]);
        assert_eq!(t.degrees(1), scalars(&[10, 12, 14]));
        assert_eq!(t.degrees(2), scalars(&[17, 19]));
        assert_eq!(pf_via_betti(&s, &t).unwrap(), scalars(&[2, 4]));
        let sum = resolution_summary(&s, &t);
        assert_eq!((sum.pd, sum.depth, sum.dim, sum.cm, sum.gorenstein), (2, 1, 1, true, false));
        assert!(sifr_check(&s, &t).holds);
    }

    #[test]
    fn two_generated_is_a_hypersurface() {
        let s = numerical(&[2, 3]);
        let t = betti_degrees(&s).unwrap();
        assert_eq!(t.totals(), vec![1, 1]);
        assert_eq!(t.degrees(1), scalars(&[6]));
        let sum = resolution_summary(&s, &t);
        assert!(sum.cm && sum.gorenstein && sum.pd == 1);
        assert!(sifr_check(&s, &t).holds);
    }

    #[test]
    fn matrix_example_is_mpd() {
        let s = matrix_a();
        let t = betti_degrees(&s).unwrap();
        assert_eq!(t.totals(), vec![1, 7, 11, 6, 1]);
        assert_eq!(t.top_degrees(), vec![v(&[18, 9])]);
        assert_eq!(pf_via_betti(&s, &t).unwrap(), vec![v(&[7, 2])]);
        let sum = resolution_summary(&s, &t);
        assert_eq!((sum.pd, sum.depth, sum.dim, sum.cm), (4, 1, 2, false));
        assert!(is_prec_symmetric(&s, &t, &TermOrderNd::graded_lex(2), &v(&[30, 30])).unwrap());
    }

    #[test]
    fn non_symmetric_numerical_is_not_prec_symmetric() {
        let s = numerical(&[3, 5, 7]);
        let t = betti_degrees(&s).unwrap();
        assert!(!is_prec_symmetric(&s, &t, &TermOrderNd::graded_lex(1), &v(&[20])).unwrap());
    }

    #[test]
    fn small_box_is_detected() {
        let s = matrix_a();
        let err = betti_degrees_within(&s, &BettiBound::boxed(v(&[18, 10])), Deadline::NONE).unwrap_err();
        assert!(matches!(err, Error::BoundInsufficient { .. }), "{err}");
    }

    #[test]
    fn tensor_convolves_totals() {
        let t1 = betti_degrees(&numerical(&[3, 5, 7])).unwrap();
        let t2 = betti_degrees(&numerical(&[2, 3])).unwrap();
        assert_eq!(tensor_betti(&t1, &t2).unwrap().totals(), vec![1, 4, 5, 2]);
        let unit = BettiTable::from_rows(vec![BTreeMap::from([(NatVector::scalar(0), 1)])]);
        assert_eq!(tensor_betti(&t1, &unit).unwrap(), t1);
    }

    #[test]
    fn join_resolution_is_tensor_product() {
        let (a, b) = (NumericalSemigroup::new(vec![3, 5, 7]).unwrap(), NumericalSemigroup::new(vec![2, 5]).unwrap());
        let j = axis_join(&a, &b).unwrap();
        let whole = betti_degrees(&j.semigroup).unwrap();
        let prod = tensor_betti(&betti_degrees(&j.left).unwrap(), &betti_degrees(&j.right).unwrap()).unwrap();
        assert_eq!(whole, prod);
    }

    #[test]
    fn table_is_thread_count_independent() {
        let s = matrix_a();
        let many = betti_degrees(&s).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let one = pool.install(|| betti_degrees(&s).unwrap());
        assert_eq!(many, one);
    }

    #[test]
    fn repeated_degrees_break_sifr() {
        // ⟨4,5,6,7⟩ has two minimal relations of the same degree
        let found = [[4u64, 5, 6, 7], [5, 6, 7, 8], [4, 6, 7, 9]]
            .iter()
            .map(|g| {
                let s = numerical(g);
                let t = betti_degrees(&s).unwrap();
                sifr_check(&s, &t)
            })
            .find(|r| !r.holds);
        let r = found.expect("a small semigroup without SIFR");
        assert!(r.violation.is_some());
    }

    fn small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
        proptest::collection::vec(2u64..20, 2..5).prop_filter_map("valid", |g| NumericalSemigroup::generated_by(&g).ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(25))]

        /// Σ_i (-1)^i Σ_b β_{i,b} t^b = H(t) Π (1 - t^{n_i}) up to the scan bound.
        #[test]
        fn k_polynomial_matches_hilbert_series(ns in small_semigroup()) {
            let s = ns.to_affine();
            let t = betti_degrees(&s).unwrap();
            let top: u64 = ns.frobenius().unwrap_or(0) + ns.generators().iter().sum::<u64>();
            let len = top as usize + 1;
            let mut series: Vec<i64> = (0..len as u64).map(|x| ns.contains(x) as i64).collect();
            for &g in ns.generators() {
                for k in (g as usize..len).rev() {
                    series[k] -= series[k - g as usize];
                }
            }
            let mut kpoly = vec![0i64; len];
            for (i, row) in t.rows().iter().enumerate() {
                for (b, &m) in row {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    kpoly[b.entries()[0] as usize] += sign * m as i64;
                }
            }
            prop_assert_eq!(kpoly, series);
            prop_assert_eq!(t.projective_dimension(), ns.embedding_dimension() - 1);
            let pf: Vec<u64> = pf_via_betti(&s, &t).unwrap().iter().map(|x| x.entries()[0]).collect();
            prop_assert_eq!(pf, ns.pseudo_frobenius());
        }
    }
}
