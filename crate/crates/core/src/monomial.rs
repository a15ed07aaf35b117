//! Exponent vectors, monomials, pure-difference binomials and monomial orders.
//!
//! Every ideal handled by this crate is generated by binomials `x^a - x^b`
//! with unit coefficients, so a [`Binomial`] is just an ordered pair of
//! monomials. S-pairs and reductions of such binomials are again pure
//! differences, which is why no coefficient field appears anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// An element of `N^d`: semigroup elements, generator vectors, Γ-degrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct NatVector(Vec<u64>);

impl NatVector {
    pub fn new(entries: Vec<u64>) -> Self {
        NatVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        NatVector(vec![0; dim])
    }

    pub fn scalar(v: u64) -> Self {
        NatVector(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &NatVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &NatVector) -> Result<NatVector> {
        check_dim(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("vector addition")))
            .collect::<Result<Vec<_>>>()
            .map(NatVector)
    }

    /// `self - other`, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &NatVector) -> Option<NatVector> {
        if self.dim() != other.dim() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(NatVector)
    }

    pub fn checked_scale(&self, k: u64) -> Result<NatVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow("vector scaling")))
            .collect::<Result<Vec<_>>>()
            .map(NatVector)
    }

    pub fn sum<'a>(dim: usize, items: impl IntoIterator<Item = &'a NatVector>) -> Result<NatVector> {
        items
            .into_iter()
            .try_fold(NatVector::zero(dim), |acc, v| acc.checked_add(v))
    }

    pub fn max_entry(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Add for &NatVector {
    type Output = NatVector;

    /// Panics on dimension mismatch or overflow; use [`NatVector::checked_add`] on untrusted data.
    fn add(self, rhs: &NatVector) -> NatVector {
        self.checked_add(rhs).expect("NatVector addition")
    }
}

impl From<Vec<u64>> for NatVector {
    fn from(v: Vec<u64>) -> Self {
        NatVector(v)
    }
}

impl fmt::Display for NatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::VariableMismatch { left, right })
    }
}

/// A monomial `x_1^{e_1} ... x_n^{e_n}` over a fixed, ordered variable set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / divisor`; fails unless `divisor | self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        check_dim(self.nvars(), divisor.nvars())?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                divisor: divisor.to_string(),
                dividend: self.to_string(),
            });
        }
        Ok(self.quotient_unchecked(divisor))
    }

    pub(crate) fn quotient_unchecked(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    /// Product with `x_var^k`.
    pub fn times_var(&self, var: usize, k: u32) -> Monomial {
        let mut e = self.0.clone();
        e[var] = e[var].checked_add(k).expect("exponent overflow");
        Monomial(e)
    }

    /// Same exponents, `extra` fresh variables appended with exponent 0.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(self.0.len() + extra, 0);
        Monomial(e)
    }

    /// Places this monomial's variables at `offset..offset+nvars` of an `total`-variable ring.
    pub fn embed(&self, offset: usize, total: usize) -> Monomial {
        let mut e = vec![0; total];
        e[offset..offset + self.0.len()].copy_from_slice(&self.0);
        Monomial(e)
    }

    pub fn drop_var(&self, var: usize) -> Monomial {
        let mut e = self.0.clone();
        e.remove(var);
        Monomial(e)
    }

    /// Γ-degree of this monomial when variable `i` has degree `degrees[i]`.
    pub fn weighted_degree(&self, degrees: &[NatVector]) -> Result<NatVector> {
        check_dim(self.nvars(), degrees.len())?;
        let dim = degrees.first().map_or(0, |d| d.dim());
        let mut acc = NatVector::zero(dim);
        for (e, d) in self.0.iter().zip(degrees) {
            if *e > 0 {
                acc = acc.checked_add(&d.checked_scale(*e as u64)?)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `lead - tail` with unit coefficients. `lead != tail` always; the zero
/// binomial is represented by `None` wherever it can arise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Binomial {
    pub lead: Monomial,
    pub tail: Monomial,
}

impl Binomial {
    /// `lead - tail` as given, without consulting an order.
    pub fn new(lead: Monomial, tail: Monomial) -> Result<Binomial> {
        check_dim(lead.nvars(), tail.nvars())?;
        if lead == tail {
            return Err(Error::Invariant(format!("degenerate binomial {lead} - {tail}")));
        }
        Ok(Binomial { lead, tail })
    }

    /// `a - b` with the order-larger monomial placed first, or `None` when `a == b`.
    pub fn normalized(a: Monomial, b: Monomial, order: &MonomialOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, tail: b }),
            Ordering::Less => Some(Binomial { lead: b, tail: a }),
        }
    }

    pub fn normalize(self, order: &MonomialOrder) -> Binomial {
        Binomial::normalized(self.lead, self.tail, order).expect("binomial sides are distinct")
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.tail.degree()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.lead.exponent(var) > 0 || self.tail.exponent(var) > 0
    }

    pub fn embed(&self, offset: usize, total: usize) -> Binomial {
        Binomial {
            lead: self.lead.embed(offset, total),
            tail: self.tail.embed(offset, total),
        }
    }

    pub fn extend(&self, extra: usize) -> Binomial {
        Binomial {
            lead: self.lead.extend(extra),
            tail: self.tail.extend(extra),
        }
    }

    /// True when both sides have the same Γ-degree under `degrees`.
    pub fn is_graded(&self, degrees: &[NatVector]) -> Result<bool> {
        Ok(self.lead.weighted_degree(degrees)? == self.tail.weighted_degree(degrees)?)
    }

    /// Same binomial, sides swapped (the negated polynomial).
    pub fn flipped(&self) -> Binomial {
        Binomial {
            lead: self.tail.clone(),
            tail: self.lead.clone(),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.tail)
    }
}

/// How total degree enters a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    /// Larger total degree wins.
    Degree,
    /// Smaller total degree wins; the order is local, not a well-order.
    NegativeDegree,
    /// No degree comparison; the tie-break alone decides.
    None,
    /// Global lift of a negative-degree order to a ring with one extra
    /// homogenizing variable `h`: larger total degree wins, then smaller
    /// degree in the variables other than `h` wins.
    LiftedNegative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TieBreak {
    Lex,
    Revlex,
}

/// A monomial order on a fixed variable set.
///
/// `priority` lists the variables from highest to lowest. Revlex follows the
/// convention `m1 > m2` iff the last nonzero entry of `m1 - m2`, read along
/// `priority`, is negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub grading: Grading,
    pub tiebreak: TieBreak,
    pub priority: Vec<usize>,
    /// Homogenizing variable, if the ring carries one.
    pub homog_var: Option<usize>,
    /// Variables whose combined degree is compared before anything else
    /// (block elimination order). Empty for ordinary orders.
    pub eliminate: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(grading: Grading, tiebreak: TieBreak, priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &v in &priority {
            if v >= n || seen[v] {
                return Err(Error::WrongOrder(format!(
                    "priority {priority:?} is not a permutation of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder {
            grading,
            tiebreak,
            priority,
            homog_var: None,
            eliminate: Vec::new(),
        })
    }

    fn identity(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    /// degrevlex with `x_1 > x_2 > ... > x_n`.
    pub fn degrevlex(n: usize) -> Self {
        Self::new(Grading::Degree, TieBreak::Revlex, Self::identity(n)).unwrap()
    }

    pub fn deglex(n: usize) -> Self {
        Self::new(Grading::Degree, TieBreak::Lex, Self::identity(n)).unwrap()
    }

    pub fn lex(n: usize) -> Self {
        Self::new(Grading::None, TieBreak::Lex, Self::identity(n)).unwrap()
    }

    pub fn degrevlex_with(priority: Vec<usize>) -> Result<Self> {
        Self::new(Grading::Degree, TieBreak::Revlex, priority)
    }

    pub fn negdegrevlex_with(priority: Vec<usize>) -> Result<Self> {
        Self::new(Grading::NegativeDegree, TieBreak::Revlex, priority)
    }

    pub fn negdeglex_with(priority: Vec<usize>) -> Result<Self> {
        Self::new(Grading::NegativeDegree, TieBreak::Lex, priority)
    }

    /// Block order: degree in `eliminate` first, then `self`.
    pub fn with_elimination(mut self, eliminate: Vec<usize>) -> Self {
        self.eliminate = eliminate;
        self
    }

    pub fn with_homog_var(mut self, var: usize) -> Self {
        self.homog_var = Some(var);
        self
    }

    /// This order on a ring with one more variable, appended as the lowest.
    pub fn extended_lowest(&self) -> MonomialOrder {
        let n = self.nvars();
        let mut priority = self.priority.clone();
        priority.push(n);
        MonomialOrder {
            grading: self.grading,
            tiebreak: self.tiebreak,
            priority,
            homog_var: Some(n),
            eliminate: self.eliminate.clone(),
        }
    }

    /// Global order on `K[x, h]` (h appended) whose leading terms on
    /// homogeneous polynomials dehomogenize to leading terms under `self`.
    pub fn lazard_lift(&self) -> Result<MonomialOrder> {
        if self.grading != Grading::NegativeDegree {
            return Err(Error::WrongOrder("lift requires a negative-degree order".into()));
        }
        let mut lifted = self.extended_lowest();
        lifted.grading = Grading::LiftedNegative;
        Ok(lifted)
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// Negative-degree orders are local and must go through standard bases.
    pub fn is_local(&self) -> bool {
        self.grading == Grading::NegativeDegree
    }

    pub fn is_global(&self) -> bool {
        !self.is_local() && !(self.grading == Grading::None && self.tiebreak == TieBreak::Revlex)
    }

    pub fn name(&self) -> &'static str {
        match (self.grading, self.tiebreak) {
            (Grading::Degree, TieBreak::Revlex) => "degrevlex",
            (Grading::Degree, TieBreak::Lex) => "deglex",
            (Grading::NegativeDegree, TieBreak::Revlex) => "negdegrevlex",
            (Grading::NegativeDegree, TieBreak::Lex) => "negdeglex",
            (Grading::None, TieBreak::Lex) => "lex",
            (Grading::None, TieBreak::Revlex) => "revlex",
            (Grading::LiftedNegative, TieBreak::Revlex) => "lifted-negdegrevlex",
            (Grading::LiftedNegative, TieBreak::Lex) => "lifted-negdeglex",
        }
    }

    /// Checked comparison.
    pub fn compare(&self, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
        check_dim(self.nvars(), m1.nvars())?;
        check_dim(self.nvars(), m2.nvars())?;
        Ok(self.cmp(m1, m2))
    }

    /// Unchecked comparison; callers guarantee matching variable counts.
    pub fn cmp(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        let (a, b) = (m1.exponents(), m2.exponents());
        if !self.eliminate.is_empty() {
            let da: u64 = self.eliminate.iter().map(|&v| a[v] as u64).sum();
            let db: u64 = self.eliminate.iter().map(|&v| b[v] as u64).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match self.grading {
            Grading::Degree => match m1.degree().cmp(&m2.degree()) {
                Ordering::Equal => {}
                o => return o,
            },
            Grading::NegativeDegree => match m2.degree().cmp(&m1.degree()) {
                Ordering::Equal => {}
                o => return o,
            },
            Grading::LiftedNegative => {
                match m1.degree().cmp(&m2.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                let h = self.homog_var.expect("lifted order carries its homogenizing variable");
                let xa = m1.degree() - a[h] as u64;
                let xb = m2.degree() - b[h] as u64;
                match xb.cmp(&xa) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            Grading::None => {}
        }
        match self.tiebreak {
            TieBreak::Lex => {
                for &v in &self.priority {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
            }
            TieBreak::Revlex => {
                for &v in self.priority.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
            }
        }
        Ordering::Equal
    }
}

/// `S(f, g) = (L/LM f) f - (L/LM g) g` with `L = lcm(LM f, LM g)`.
///
/// Both inputs must be normalized under `order`. The leading terms cancel,
/// leaving the pure difference `(L/LM g) tail(g) - (L/LM f) tail(f)`.
pub fn s_pair(f: &Binomial, g: &Binomial, order: &MonomialOrder) -> Option<Binomial> {
    let l = f.lead.lcm(&g.lead);
    let from_f = l.quotient_unchecked(&f.lead).mul(&f.tail);
    let from_g = l.quotient_unchecked(&g.lead).mul(&g.tail);
    Binomial::normalized(from_g, from_f, order)
}

/// Pads the lower-degree side with powers of `x0` so both sides share a degree.
pub fn homogenize(b: &Binomial, x0: usize) -> Result<Binomial> {
    if x0 >= b.nvars() {
        return Err(Error::VariableMismatch {
            left: x0 + 1,
            right: b.nvars(),
        });
    }
    if b.uses_var(x0) {
        return Err(Error::HomogenizingVariableInUse(x0));
    }
    let (dl, dt) = (b.lead.degree(), b.tail.degree());
    let pad = |m: &Monomial, k: u64| -> Result<Monomial> {
        let k = u32::try_from(k).map_err(|_| Error::Overflow("homogenization"))?;
        Ok(m.times_var(x0, k))
    };
    Ok(match dl.cmp(&dt) {
        Ordering::Equal => b.clone(),
        Ordering::Greater => Binomial {
            lead: b.lead.clone(),
            tail: pad(&b.tail, dl - dt)?,
        },
        Ordering::Less => Binomial {
            lead: pad(&b.lead, dt - dl)?,
            tail: b.tail.clone(),
        },
    })
}

/// Sets `x0 = 1`. Returns `None` when both sides collapse to the same monomial.
pub fn dehomogenize(b: &Binomial, x0: usize) -> Option<Binomial> {
    let strip = |m: &Monomial| {
        let mut e = m.exponents().to_vec();
        e[x0] = 0;
        Monomial::new(e)
    };
    let (lead, tail) = (strip(&b.lead), strip(&b.tail));
    if lead == tail {
        None
    } else {
        Some(Binomial { lead, tail })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_prefers_smaller_last_exponent() {
        let o = MonomialOrder::degrevlex(3);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[1, 1, 0])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn negative_degree_prefers_lower_degree() {
        // variables (x1, x2) with x2 > x1
        let o = MonomialOrder::negdegrevlex_with(vec![1, 0]).unwrap();
        assert_eq!(o.compare(&m(&[3, 0]), &m(&[0, 2])).unwrap(), Ordering::Less);
        assert!(o.is_local());
    }

    #[test]
    fn compare_rejects_mismatched_rings() {
        let o = MonomialOrder::degrevlex(3);
        assert!(matches!(
            o.compare(&m(&[1, 0]), &m(&[1, 0, 0])),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn priority_must_be_permutation() {
        assert!(MonomialOrder::degrevlex_with(vec![0, 0, 1]).is_err());
        assert!(MonomialOrder::degrevlex_with(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn lcm_divides_quotient() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 1, 1]));
        assert!(m(&[1, 0, 0]).divides(&a));
        assert_eq!(a.quotient(&m(&[1, 0, 0])).unwrap(), m(&[1, 1, 0]));
        assert!(matches!(a.quotient(&b), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn s_pair_of_identical_binomials_vanishes() {
        let o = MonomialOrder::degrevlex(3);
        let f = Binomial::normalized(m(&[0, 2, 0]), m(&[1, 0, 1]), &o).unwrap();
        assert_eq!(s_pair(&f, &f, &o), None);
    }

    #[test]
    fn s_pair_by_hand() {
        // f = x2^2 - x1 x3, g = x1^4 - x2 x3, lcm = x1^4 x2^2
        // S = x2^2 (x2 x3) ... = x1^4 x2^2/x1^4 * (x2 x3) - x1^4 x2^2/x2^2 * (x1 x3)
        //   = x2^3 x3 - x1^5 x3
        let o = MonomialOrder::degrevlex(3);
        let f = Binomial::normalized(m(&[0, 2, 0]), m(&[1, 0, 1]), &o).unwrap();
        let g = Binomial::normalized(m(&[4, 0, 0]), m(&[0, 1, 1]), &o).unwrap();
        let s = s_pair(&f, &g, &o).unwrap();
        assert_eq!(s.lead, m(&[5, 0, 1]));
        assert_eq!(s.tail, m(&[0, 3, 1]));
    }

    #[test]
    fn homogenize_pads_lower_side() {
        // x1^5 - x2^3 in (x0, x1, x2) with x0 at index 0
        let b = Binomial::new(m(&[0, 5, 0]), m(&[0, 0, 3])).unwrap();
        let h = homogenize(&b, 0).unwrap();
        assert_eq!(h.lead, m(&[0, 5, 0]));
        assert_eq!(h.tail, m(&[2, 0, 3]));
        assert_eq!(dehomogenize(&h, 0).unwrap(), b);

        let homog = Binomial::new(m(&[0, 2, 0]), m(&[0, 1, 1])).unwrap();
        assert_eq!(homogenize(&homog, 0).unwrap(), homog);
        assert_eq!(homogenize(&h, 0), Err(Error::HomogenizingVariableInUse(0)));
    }

    fn all_monomials(nvars: usize, max_deg: u32) -> Vec<Monomial> {
        let mut out = vec![Vec::new()];
        for _ in 0..nvars {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    let used: u32 = p.iter().sum();
                    (0..=max_deg - used).map(move |e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(Monomial::new).collect()
    }

    fn check_axioms(o: &MonomialOrder, mons: &[Monomial]) {
        let one = Monomial::one(o.nvars());
        for a in mons {
            assert_ne!(o.cmp(a, &one), Ordering::Less, "1 must be minimal: {a}");
            for b in mons {
                let ab = o.cmp(a, b);
                assert_eq!(ab == Ordering::Equal, a == b);
                assert_eq!(ab, o.cmp(b, a).reverse());
                for c in mons.iter().take(12) {
                    assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), ab, "compatibility");
                }
            }
        }
        // transitivity via sort consistency
        let mut sorted = mons.to_vec();
        sorted.sort_by(|a, b| o.cmp(a, b));
        for w in sorted.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn global_orders_satisfy_axioms_up_to_degree_four() {
        for n in 1..=4 {
            let max = if n == 4 { 3 } else { 4 };
            let mons = all_monomials(n, max);
            let rev: Vec<usize> = (0..n).rev().collect();
            for o in [
                MonomialOrder::degrevlex(n),
                MonomialOrder::deglex(n),
                MonomialOrder::lex(n),
                MonomialOrder::degrevlex_with(rev.clone()).unwrap(),
                MonomialOrder::new(Grading::None, TieBreak::Lex, rev).unwrap(),
            ] {
                check_axioms(&o, &mons);
            }
        }
    }

    #[test]
    fn negative_degree_orders_are_total_and_compatible() {
        let mons = all_monomials(3, 4);
        let o = MonomialOrder::negdegrevlex_with(vec![2, 1, 0]).unwrap();
        let one = Monomial::one(3);
        for a in &mons {
            if !a.is_one() {
                assert_eq!(o.cmp(a, &one), Ordering::Less, "local: 1 is maximal");
            }
            for b in &mons {
                assert_eq!(o.cmp(a, b) == Ordering::Equal, a == b);
                assert_eq!(o.cmp(&a.mul(&m(&[1, 0, 2])), &b.mul(&m(&[1, 0, 2]))), o.cmp(a, b));
            }
        }
    }

    proptest! {
        #[test]
        fn homogenize_roundtrip(a in proptest::collection::vec(0u32..6, 3), b in proptest::collection::vec(0u32..6, 3)) {
            prop_assume!(a != b);
            let mut ea = a.clone(); ea.insert(0, 0);
            let mut eb = b.clone(); eb.insert(0, 0);
            let bin = Binomial::new(Monomial::new(ea), Monomial::new(eb)).unwrap();
            let h = homogenize(&bin, 0).unwrap();
            prop_assert!(h.is_homogeneous());
            prop_assert_eq!(dehomogenize(&h, 0).unwrap(), bin.clone());
            prop_assert_eq!(homogenize(&dehomogenize(&h, 0).unwrap(), 0).unwrap(), h);
        }

        #[test]
        fn s_pair_is_pure_difference(
            a in proptest::collection::vec(0u32..5, 3), b in proptest::collection::vec(0u32..5, 3),
            c in proptest::collection::vec(0u32..5, 3), d in proptest::collection::vec(0u32..5, 3),
        ) {
            let o = MonomialOrder::degrevlex(3);
            let f = Binomial::normalized(Monomial::new(a), Monomial::new(b), &o);
            let g = Binomial::normalized(Monomial::new(c), Monomial::new(d), &o);
            if let (Some(f), Some(g)) = (f, g) {
                if let Some(s) = s_pair(&f, &g, &o) {
                    prop_assert_ne!(&s.lead, &s.tail);
                    prop_assert_eq!(o.cmp(&s.lead, &s.tail), Ordering::Greater);
                    let l = f.lead.lcm(&g.lead);
                    prop_assert_eq!(o.cmp(&s.lead, &l), Ordering::Less);
                }
            }
        }
    }
}
