//! Cohen–Macaulay and Gorenstein verdicts with independent cross-checks.
//!
//! Every verdict comes from one primary method. The other methods run as
//! cross-checks; when one completes and disagrees the verdict is marked as a
//! conflict instead of picking a side.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::groebner::{hilbert_function_monomial, standard_basis_local, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder, NatVector};
use crate::resolution::{betti_degrees_within, resolution_summary, BettiBound};
use crate::semigroups::{AffineSemigroup, FactorizationLengths, NumericalSemigroup};
use crate::toric::{show_monomial, toric_basis, toric_ideal_numerical, numbered_names};

/// Largest number of semigroup points a Betti cross-check may scan.
pub const DEFAULT_BETTI_BUDGET: u64 = 3_000_000;

#[derive(Clone, Copy, Debug)]
pub struct VerdictOptions {
    pub deadline: Deadline,
    /// Point budget for cross-checks that scan Betti degrees.
    pub betti_budget: u64,
    /// Order used for the tangent-cone standard basis.
    pub tangent_order: TangentOrder,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        VerdictOptions { deadline: Deadline::NONE, betti_budget: DEFAULT_BETTI_BUDGET, tangent_order: TangentOrder::NegDegRevlex }
    }
}

/// Local order for the tangent-cone criterion; both make `x1` the lowest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TangentOrder {
    #[default]
    NegDegRevlex,
    NegDegLex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Completed(bool),
    /// The method did not finish within its budget or deadline.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub method: &'static str,
    pub outcome: CheckOutcome,
    pub detail: Option<String>,
}

impl CrossCheck {
    fn done(method: &'static str, value: bool, detail: Option<String>) -> Self {
        CrossCheck { method, outcome: CheckOutcome::Completed(value), detail }
    }

    fn from_result(method: &'static str, r: Result<(bool, Option<String>)>) -> Result<Self> {
        match r {
            Ok((v, d)) => Ok(Self::done(method, v, d)),
            Err(e) if e.is_resource_failure() => {
                Ok(CrossCheck { method, outcome: CheckOutcome::Skipped(e.to_string()), detail: None })
            }
            Err(e) => Err(e),
        }
    }

    pub fn value(&self) -> Option<bool> {
        match self.outcome {
            CheckOutcome::Completed(v) => Some(v),
            CheckOutcome::Skipped(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub property: &'static str,
    pub holds: bool,
    pub method: &'static str,
    /// The certificate behind a negative answer (offending element, failing degree, ...).
    pub witness: Option<String>,
    pub cross_checks: Vec<CrossCheck>,
}

impl Verdict {
    /// Some completed cross-check disagrees with the primary method.
    pub fn is_conflict(&self) -> bool {
        self.cross_checks.iter().any(|c| c.value().is_some_and(|v| v != self.holds))
    }

    pub fn cross_check(&self, method: &str) -> Option<&CrossCheck> {
        self.cross_checks.iter().find(|c| c.method == method)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.property, self.holds, self.method)?;
        if self.is_conflict() {
            write!(f, " CONFLICT")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for c in &self.cross_checks {
            match &c.outcome {
                CheckOutcome::Completed(v) => write!(f, "\n  {}: {v}", c.method)?,
                CheckOutcome::Skipped(why) => write!(f, "\n  {}: skipped ({why})", c.method)?,
            }
            if let Some(d) = &c.detail {
                write!(f, " [{d}]")?;
            }
        }
        Ok(())
    }
}

pub const ACM_GB: &str = "largest-generator variable divides no leading monomial";
pub const ACM_SOCLE: &str = "no socle monomial in the initial ideal of the closure";
pub const ACM_DEPTH: &str = "depth of the closure semigroup ring from its Betti table";
pub const ACM_APERY: &str = "Apéry set of the closure has n_e elements";

/// Whether the projective closure of the monomial curve is arithmetically
/// Cohen–Macaulay: the reduced degrevlex basis of `p(Γ)` (largest generator
/// lowest) has no leading monomial divisible by `x_e`.
pub fn acm_projective_closure(s: &NumericalSemigroup, opts: &VerdictOptions) -> Result<Verdict> {
    let p = toric_ideal_numerical(s, opts.deadline)?;
    let gb = p.canonical_basis()?;
    let (holds, witness) = acm_by_leads(&gb, p.var_names());
    let cross_checks = vec![
        CrossCheck::from_result(ACM_SOCLE, acm_by_socle(s, opts.deadline).map(|v| (v, None)))?,
        CrossCheck::from_result(
            ACM_DEPTH,
            closure_summary(s, opts).map(|(cm, pd, depth)| (cm, Some(format!("pd={pd}, depth={depth}")))),
        )?,
        CrossCheck::from_result(
            ACM_APERY,
            closure_apery(s, opts.deadline).map(|ap| (ap.cm, Some(format!("{} elements", ap.elements.len())))),
        )?,
    ];
    Ok(Verdict { property: "arithmetically Cohen-Macaulay projective closure", holds, method: ACM_GB, witness, cross_checks })
}

fn acm_by_leads(gb: &GroebnerBasis, names: &[String]) -> (bool, Option<String>) {
    let last = gb.order().nvars() - 1;
    match gb.var_divides_some_lead(last) {
        None => (true, None),
        Some(b) => (false, Some(format!("{} - {}", show_monomial(&b.lead, names), show_monomial(&b.tail, names)))),
    }
}

/// Depth of `K[x]/L'` is positive, where `L'` is the lead ideal of an
/// independently computed basis of the closure ideal with `x0` set to zero.
///
/// A socle monomial `u ∉ L'` with `x_i u ∈ L'` for all `i` is divisible, for
/// each `i`, by some `(g - e_i)^+` with `g` a minimal generator; minimal
/// candidates are lcms of one such choice per variable.
pub fn acm_by_socle(s: &NumericalSemigroup, deadline: Deadline) -> Result<bool> {
    let closure = crate::toric::projective_closure_semigroup(s);
    let gb = toric_basis(closure.generators(), deadline)?;
    let e = s.embedding_dimension();
    // x0 is the last variable and lowest; x0 never divides a lead of the homogeneous basis
    let leads: Vec<Monomial> = gb
        .leads()
        .into_iter()
        .filter(|m| m.exponent(e) == 0)
        .map(|m| m.drop_var(e))
        .collect();
    let leads = crate::groebner::minimal_monomials(&leads);
    Ok(find_socle(&leads, e, deadline)?.is_none())
}

fn in_ideal(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

fn find_socle(gens: &[Monomial], nvars: usize, deadline: Deadline) -> Result<Option<Monomial>> {
    // per variable: the colon generators (g - e_i)^+
    let colon: Vec<Vec<Monomial>> = (0..nvars)
        .map(|i| {
            let mut c: Vec<Monomial> = gens
                .iter()
                .map(|g| {
                    let mut ex = g.exponents().to_vec();
                    ex[i] = ex[i].saturating_sub(1);
                    Monomial::new(ex)
                })
                .collect();
            c = crate::groebner::minimal_monomials(&c);
            c
        })
        .collect();
    let mut level: HashSet<Monomial> = HashSet::from([Monomial::one(nvars)]);
    for c in &colon {
        deadline.check()?;
        let mut next = HashSet::new();
        for u in &level {
            for g in c {
                let l = u.lcm(g);
                if !in_ideal(&l, gens) {
                    next.insert(l);
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        level = next;
    }
    let mut found: Vec<Monomial> = level.into_iter().collect();
    found.sort();
    Ok(found.into_iter().next())
}

/// `Γ̄` re-coordinatized as `(u, k)` with `k` the standard degree: generators
/// `(n_i, 1)` and `(0, 1)`.
fn graded_closure(s: &NumericalSemigroup) -> AffineSemigroup {
    let mut gens: Vec<NatVector> = s.generators().iter().map(|&n| NatVector::new(vec![n, 1])).collect();
    gens.push(NatVector::new(vec![0, 1]));
    AffineSemigroup::new(gens).expect("distinct generators")
}

/// `(cm, pd, depth)` of `K[Γ̄]`. Shifts of the closure ideal are bounded by the
/// regularity bound for nondegenerate curves, so degrees up to `n_e + 1` suffice.
fn closure_summary(s: &NumericalSemigroup, opts: &VerdictOptions) -> Result<(bool, usize, usize)> {
    let g = graded_closure(s);
    let ne = s.largest_generator();
    let kmax = ne + 1;
    // members of degree k number at most k·n_e + 1
    let estimate = ne.saturating_mul(kmax).saturating_mul(kmax) / 2;
    if estimate > opts.betti_budget {
        return Err(Error::ScanBudget { points: estimate, budget: opts.betti_budget });
    }
    let bound = BettiBound {
        bound: NatVector::new(vec![ne * kmax, kmax]),
        weight_limit: None,
        certified: true,
        budget: crate::semigroups::MAX_BOX_POINTS,
    };
    let table = betti_degrees_within(&g, &bound, opts.deadline)?;
    let sum = resolution_summary(&g, &table);
    if sum.gorenstein && table.totals().last() != Some(&1) {
        return Err(Error::Invariant("Gorenstein flag without unit top Betti number".into()));
    }
    Ok((sum.cm, sum.pd, sum.depth))
}

/// Top total Betti number of `K[Γ̄]`, when the scan fits the budget.
pub fn closure_betti_totals(s: &NumericalSemigroup, opts: &VerdictOptions) -> Result<Vec<u64>> {
    let g = graded_closure(s);
    let ne = s.largest_generator();
    let kmax = ne + 1;
    let estimate = ne.saturating_mul(kmax).saturating_mul(kmax) / 2;
    if estimate > opts.betti_budget {
        return Err(Error::ScanBudget { points: estimate, budget: opts.betti_budget });
    }
    let bound = BettiBound {
        bound: NatVector::new(vec![ne * kmax, kmax]),
        weight_limit: None,
        certified: true,
        budget: crate::semigroups::MAX_BOX_POINTS,
    };
    Ok(betti_degrees_within(&g, &bound, opts.deadline)?.totals())
}

/// Apéry set of `Γ̄` with respect to its two extremal generators `(n_e, 0)` and `(0, n_e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureApery {
    /// Elements `(u, v)` in breadth-first order from the origin.
    pub elements: Vec<NatVector>,
    /// `|AP| = n_e`.
    pub cm: bool,
    /// Number of maximal elements under the semigroup order (the CM type when `cm`).
    pub maximal: usize,
}

/// Membership in `Γ̄`, written as `(u, k)` with `k` the standard degree:
/// `u ∈ Γ` with a factorization of length at most `k`.
struct ClosureMembership<'a> {
    s: &'a NumericalSemigroup,
    lengths: FactorizationLengths,
}

impl ClosureMembership<'_> {
    fn contains(&mut self, u: u64, k: u64) -> bool {
        if self.lengths.limit() < u as usize {
            self.lengths = FactorizationLengths::new(self.s, 2 * u as usize);
        }
        self.lengths.min_len(u).is_some_and(|m| m as u64 <= k)
    }
}

/// Breadth-first enumeration of the Apéry set of `Γ̄`, which is closed under
/// removing interior generators.
pub fn closure_apery(s: &NumericalSemigroup, deadline: Deadline) -> Result<ClosureApery> {
    let ne = s.largest_generator();
    let interior: Vec<u64> = s.generators().iter().copied().filter(|&n| n != ne).collect();
    let mut mem = ClosureMembership { s, lengths: FactorizationLengths::new(s, 4 * ne as usize) };
    // (u, k) with v = k n_e - u
    let in_ap = |u: u64, k: u64, mem: &mut ClosureMembership| {
        let minus_e = u >= ne && mem.contains(u - ne, k - 1);
        let minus_0 = k * ne - u >= ne && mem.contains(u, k - 1);
        !minus_e && !minus_0
    };
    let mut seen: HashSet<(u64, u64)> = HashSet::from([(0, 0)]);
    let mut queue = VecDeque::from([(0u64, 0u64)]);
    let mut ap: Vec<(u64, u64)> = Vec::new();
    while let Some((u, k)) = queue.pop_front() {
        deadline.check()?;
        ap.push((u, k));
        for &n in &interior {
            let next = (u + n, k + 1);
            if seen.insert(next) && in_ap(next.0, next.1, &mut mem) {
                queue.push_back(next);
            }
        }
    }
    let mut maximal = 0;
    for (i, a) in ap.iter().enumerate() {
        let dominated = ap.iter().enumerate().any(|(j, b)| {
            i != j && b.0 >= a.0 && b.1 >= a.1 && (b.1 - a.1) * ne >= b.0 - a.0 && mem.contains(b.0 - a.0, b.1 - a.1)
        });
        if !dominated {
            maximal += 1;
        }
    }
    Ok(ClosureApery {
        cm: ap.len() as u64 == ne,
        maximal,
        elements: ap.into_iter().map(|(u, k)| NatVector::new(vec![u, k * ne - u])).collect(),
    })
}

pub const TC_LOCAL: &str = "smallest-generator variable divides no local leading monomial";
pub const TC_ORD: &str = "ord(s + n1) = ord(s) + 1 on the oracle window";

/// Whether the tangent cone of the monomial curve is Cohen–Macaulay: no lead
/// of a minimal standard basis of `p(Γ)` under a negative-degree order with
/// `x1` lowest is divisible by `x1`.
pub fn cm_tangent_cone(s: &NumericalSemigroup, opts: &VerdictOptions) -> Result<Verdict> {
    let p = toric_ideal_numerical(s, opts.deadline)?;
    let e = s.embedding_dimension();
    let prio: Vec<usize> = (0..e).rev().collect();
    let order = match opts.tangent_order {
        TangentOrder::NegDegRevlex => MonomialOrder::negdegrevlex_with(prio)?,
        TangentOrder::NegDegLex => MonomialOrder::negdeglex_with(prio)?,
    };
    let sb = standard_basis_local(p.generators(), &order, opts.deadline)?;
    let (holds, witness) = match sb.var_divides_some_lead(0) {
        None => (true, None),
        Some(b) => (false, Some(p.show(b))),
    };
    let (ord_ok, ord_witness) = ord_oracle(s, ord_oracle_bound(s))?;
    let cross_checks = vec![CrossCheck::done(TC_ORD, ord_ok, ord_witness.map(|x| format!("fails at s={x}")))];
    // The lead ideal must have the Hilbert function of the associated graded ring.
    let r = s.reduction_number() as usize;
    let upto = r + 2;
    let hf_leads = hilbert_function_monomial(&sb.leads(), e, upto);
    let hf = s.hilbert_gr(upto);
    if hf_leads != hf {
        return Err(Error::Invariant(format!(
            "lead ideal Hilbert function {hf_leads:?} differs from the associated graded ring's {hf:?}"
        )));
    }
    Ok(Verdict { property: "Cohen-Macaulay tangent cone", holds, method: TC_LOCAL, witness, cross_checks })
}

/// `n1 · n_k · (k - 1)`.
pub fn ord_oracle_bound(s: &NumericalSemigroup) -> u64 {
    let k = s.embedding_dimension() as u64;
    s.multiplicity() * s.largest_generator() * (k - 1).max(1)
}

/// Whether `ord(s + n1) = ord(s) + 1` for every element `s <= bound`; the first
/// failing element otherwise.
pub fn ord_oracle(s: &NumericalSemigroup, bound: u64) -> Result<(bool, Option<u64>)> {
    let n1 = s.multiplicity();
    let limit = usize::try_from(bound + n1).map_err(|_| Error::Overflow("ord oracle window"))?;
    let t = FactorizationLengths::new(s, limit);
    for x in 0..=bound {
        if let Some(o) = t.max_len(x) {
            if t.max_len(x + n1) != Some(o + 1) {
                return Ok((false, Some(x)));
            }
        }
    }
    Ok((true, None))
}

pub const GOR_SYMMETRIC: &str = "symmetry of the gap set";
pub const GOR_PF: &str = "exactly one pseudo-Frobenius number";

/// Gorenstein-ness of `K[Γ]`, i.e. symmetry of `Γ`.
pub fn gorenstein_numerical(s: &NumericalSemigroup) -> Verdict {
    let holds = s.is_symmetric();
    let witness = if holds {
        None
    } else {
        let f = s.frobenius().expect("N is symmetric");
        (0..=f).find(|&z| s.contains(z) == s.contains(f - z)).map(|z| format!("z={z}, F-z={}", f - z))
    };
    let pf = s.pseudo_frobenius();
    let cross_checks = vec![CrossCheck::done(GOR_PF, pf.len() <= 1, Some(format!("PF={pf:?}")))];
    Verdict { property: "Gorenstein semigroup ring", holds, method: GOR_SYMMETRIC, witness, cross_checks }
}

pub const GOR_CLOSURE_BETTI: &str = "ACM and top total Betti number of the closure is 1";
pub const GOR_CLOSURE_APERY: &str = "Apéry set of the closure has n_e elements and a unique maximum";

/// Gorenstein-ness of the projective closure: ACM with top total Betti number
/// one. When the Betti scan exceeds its budget, the Apéry criterion decides.
pub fn gorenstein_projective_closure(s: &NumericalSemigroup, opts: &VerdictOptions) -> Result<Verdict> {
    let acm = acm_projective_closure(s, opts)?;
    let betti = if acm.holds {
        closure_betti_totals(s, opts).map(|t| (t.last() == Some(&1), Some(format!("totals {t:?}"))))
    } else {
        Ok((false, Some("not ACM".into())))
    };
    let apery = closure_apery(s, opts.deadline).map(|ap| (ap.cm && ap.maximal == 1, Some(format!("{} maximal", ap.maximal))));
    let betti = CrossCheck::from_result(GOR_CLOSURE_BETTI, betti)?;
    let apery = CrossCheck::from_result(GOR_CLOSURE_APERY, apery)?;
    let (primary, other) = match betti.value() {
        Some(_) => (betti, apery),
        None => (apery, betti),
    };
    let holds = primary.value().ok_or(Error::DeadlineExceeded)?;
    let witness = if holds { None } else { primary.detail.clone() };
    Ok(Verdict { property: "Gorenstein projective closure", holds, method: primary.method, witness, cross_checks: vec![other] })
}

/// Variable names `x1..xe` for a numerical semigroup.
pub fn variable_names(s: &NumericalSemigroup) -> Vec<String> {
    numbered_names("x", s.embedding_dimension())
}

/// Certified monotonicity of the Hilbert function of the associated graded ring.
pub fn hilbert_nondecreasing(s: &NumericalSemigroup) -> Result<(bool, Vec<u64>)> {
    let r = s.reduction_number() as usize;
    let h = s.hilbert_gr(r.max(1) + 1);
    Ok((s.hilbert_nondecreasing(r)?, h))
}
