//! Buchberger's algorithm for pure-difference binomial ideals, standard bases
//! for local orders through homogenization, and Hilbert functions of monomial
//! quotients.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::monomial::{dehomogenize, homogenize, s_pair, Binomial, Grading, Monomial, MonomialOrder, TieBreak};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
    reduced: bool,
    minimal: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn leads(&self) -> Vec<Monomial> {
        self.elements.iter().map(|b| b.lead.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when some leading monomial involves `var`.
    pub fn var_divides_some_lead(&self, var: usize) -> Option<&Binomial> {
        self.elements.iter().find(|b| b.lead.exponent(var) > 0)
    }
}

fn require_global(order: &MonomialOrder) -> Result<()> {
    if order.is_local() {
        Err(Error::WrongOrder(format!(
            "{} is local; use the standard-basis route",
            order.name()
        )))
    } else {
        Ok(())
    }
}

/// Rewrites `m` by the basis until no leading monomial divides it. Divisors
/// are tried in basis order.
pub fn reduce_monomial(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut cur = m.clone();
    'outer: loop {
        for g in basis {
            if g.lead.divides(&cur) {
                cur = cur.quotient_unchecked(&g.lead).mul(&g.tail);
                continue 'outer;
            }
        }
        return cur;
    }
}

fn nf_unchecked(b: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    let u = reduce_monomial(&b.lead, basis);
    let v = reduce_monomial(&b.tail, basis);
    Binomial::normalized(u, v, order)
}

/// Remainder of `b` on division by `basis`; `None` is the zero binomial.
///
/// Each monomial of a pure difference reduces independently: replacing `u` by
/// `(u / LM g) · tail(g)` changes `u - v` by a multiple of `g`.
pub fn normal_form(b: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Result<Option<Binomial>> {
    require_global(order)?;
    for g in basis {
        crate::monomial::check_dim(g.nvars(), b.nvars())?;
    }
    Ok(nf_unchecked(b, basis, order))
}

/// Knobs for a Buchberger run.
#[derive(Clone, Debug, Default)]
pub struct BuchbergerOptions {
    pub deadline: Deadline,
    /// Variable weights used to rank S-pairs (normal strategy). Total degree when absent.
    pub selection_weights: Option<Vec<u64>>,
}

fn weight(m: &Monomial, w: &Option<Vec<u64>>) -> u64 {
    match w {
        None => m.degree(),
        Some(w) => m.exponents().iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum(),
    }
}

pub fn buchberger(gens: &[Binomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, &BuchbergerOptions::default())
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by smallest lcm weight, FIFO among ties; pairs with
/// coprime leads and pairs covered by the chain criterion are skipped.
pub fn buchberger_with(gens: &[Binomial], order: &MonomialOrder, opts: &BuchbergerOptions) -> Result<GroebnerBasis> {
    require_global(order)?;
    let n = order.nvars();
    for g in gens {
        crate::monomial::check_dim(n, g.nvars())?;
    }
    let mut basis: Vec<Binomial> = Vec::new();
    let mut seen: HashSet<Binomial> = HashSet::new();
    for g in gens {
        if let Some(b) = Binomial::normalized(g.lead.clone(), g.tail.clone(), order) {
            if seen.insert(b.clone()) {
                basis.push(b);
            }
        }
    }
    let mut queue: BTreeSet<(u64, u64, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut seq: u64 = 0;
    let mut push = |queue: &mut BTreeSet<_>, pending: &mut HashSet<_>, basis: &[Binomial], i: usize, j: usize| {
        let l = basis[i].lead.lcm(&basis[j].lead);
        queue.insert((weight(&l, &opts.selection_weights), seq, i, j));
        pending.insert((i, j));
        seq += 1;
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push(&mut queue, &mut pending, &basis, i, j);
        }
    }
    while let Some(entry) = queue.pop_first() {
        opts.deadline.check()?;
        let (_, _, i, j) = entry;
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lead.is_coprime(&fj.lead) {
            continue;
        }
        let l = fi.lead.lcm(&fj.lead);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let Some(s) = s_pair(fi, fj, order) else { continue };
        let Some(h) = nf_unchecked(&s, &basis, order) else { continue };
        let new = basis.len();
        basis.push(h);
        for k in 0..new {
            push(&mut queue, &mut pending, &basis, k, new);
        }
    }
    Ok(reduce_basis(basis, order))
}

/// Minimalizes and tail-reduces a Gröbner basis, then sorts it by leading monomial.
fn reduce_basis(basis: Vec<Binomial>, order: &MonomialOrder) -> GroebnerBasis {
    let mut min = minimalize(basis, order);
    for idx in 0..min.len() {
        let others: Vec<Binomial> = min
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, b)| b.clone())
            .collect();
        let tail = reduce_monomial(&min[idx].tail, &others);
        min[idx].tail = tail;
    }
    min.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    GroebnerBasis {
        order: order.clone(),
        elements: min,
        reduced: true,
        minimal: true,
    }
}

/// Drops elements whose leading monomial is divisible by another leading
/// monomial (keeping the first of equal leads). Divisibility is checked in
/// both directions since under local orders multiples sort first.
fn minimalize(basis: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(&a.lead, &b.lead).then_with(|| order.cmp(&a.tail, &b.tail)));
    let keep: Vec<bool> = (0..sorted.len())
        .map(|i| {
            !sorted.iter().enumerate().any(|(j, c)| {
                j != i && c.lead.divides(&sorted[i].lead) && (c.lead != sorted[i].lead || j < i)
            })
        })
        .collect();
    sorted.into_iter().zip(keep).filter(|(_, k)| *k).map(|(b, _)| b).collect()
}

/// Buchberger's criterion without shortcuts: every S-pair reduces to zero.
pub fn is_groebner(candidate: &[Binomial], order: &MonomialOrder) -> Result<bool> {
    require_global(order)?;
    let elems: Vec<Binomial> = candidate
        .iter()
        .filter_map(|b| Binomial::normalized(b.lead.clone(), b.tail.clone(), order))
        .collect();
    for j in 0..elems.len() {
        for i in 0..j {
            if let Some(s) = s_pair(&elems[i], &elems[j], order) {
                if nf_unchecked(&s, &elems, order).is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether `basis` is a reduced Gröbner basis in the strict sense.
pub fn check_reduced(basis: &[Binomial], order: &MonomialOrder) -> bool {
    basis.iter().enumerate().all(|(i, b)| {
        order.cmp(&b.lead, &b.tail) == Ordering::Greater
            && basis.iter().enumerate().all(|(j, c)| {
                i == j || (!c.lead.divides(&b.lead) && !c.lead.divides(&b.tail))
            })
    })
}

/// Homogenizes a reduced degree-revlex basis with a new variable appended as
/// the lowest one. The result is again a reduced Gröbner basis with the same
/// leading monomials.
pub fn homogenize_ideal(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    let o = gb.order();
    if o.grading != Grading::Degree || o.tiebreak != TieBreak::Revlex || !o.eliminate.is_empty() {
        return Err(Error::WrongOrder(format!(
            "homogenization needs a degree reverse lexicographic basis, got {}",
            o.name()
        )));
    }
    if !gb.is_reduced() {
        return Err(Error::NotReduced("homogenization needs the reduced basis".into()));
    }
    let order = o.extended_lowest();
    let x0 = o.nvars();
    let mut elements = Vec::with_capacity(gb.len());
    for b in gb.elements() {
        let h = homogenize(&b.extend(1), x0)?;
        if h.lead != b.lead.extend(1) || order.cmp(&h.lead, &h.tail) != Ordering::Greater {
            return Err(Error::Invariant(format!("homogenization moved the leading term of {b}")));
        }
        elements.push(h);
    }
    Ok(GroebnerBasis {
        order,
        elements,
        reduced: true,
        minimal: true,
    })
}

/// Standard basis for a local (negative-degree) order.
///
/// The generators are homogenized with an extra variable `h`, a Gröbner basis
/// is computed for the lifted global order (total degree, then smaller degree
/// outside `h`, then the local tie-break), and the result is dehomogenized and
/// minimalized. Leading monomials are those of the local order.
pub fn standard_basis_local(gens: &[Binomial], local: &MonomialOrder, deadline: Deadline) -> Result<GroebnerBasis> {
    if local.grading != Grading::NegativeDegree {
        return Err(Error::WrongOrder(format!("{} is not a negative-degree order", local.name())));
    }
    let n = local.nvars();
    let lifted = local.lazard_lift()?;
    let mut hom = Vec::with_capacity(gens.len());
    for g in gens {
        crate::monomial::check_dim(n, g.nvars())?;
        hom.push(homogenize(&g.extend(1), n)?);
    }
    let opts = BuchbergerOptions {
        deadline,
        selection_weights: None,
    };
    let gb = buchberger_with(&hom, &lifted, &opts)?;
    let mut out = Vec::new();
    for b in gb.elements() {
        if let Some(d) = dehomogenize(b, n) {
            let d = Binomial {
                lead: d.lead.drop_var(n),
                tail: d.tail.drop_var(n),
            };
            out.push(d.normalize(local));
        }
    }
    let elements = minimalize(out, local);
    Ok(GroebnerBasis {
        order: local.clone(),
        elements,
        reduced: false,
        minimal: true,
    })
}

/// Lowest-degree homogeneous part `f*` of a binomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InitialForm {
    Monomial(Monomial),
    Binomial(Binomial),
}

/// Initial forms of the elements of a local standard basis; they generate the
/// ideal of the tangent cone.
pub fn initial_forms_ideal(sb: &GroebnerBasis) -> Result<Vec<InitialForm>> {
    if !sb.order().is_local() {
        return Err(Error::WrongOrder("initial forms need a local standard basis".into()));
    }
    Ok(sb
        .elements()
        .iter()
        .map(|b| {
            let (dl, dt) = (b.lead.degree(), b.tail.degree());
            match dl.cmp(&dt) {
                Ordering::Equal => InitialForm::Binomial(b.clone()),
                Ordering::Less => InitialForm::Monomial(b.lead.clone()),
                Ordering::Greater => InitialForm::Monomial(b.tail.clone()),
            }
        })
        .collect())
}

/// Minimal generators of the monomial ideal generated by `ms`.
pub fn minimal_monomials(ms: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = ms.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn binomial_coeff(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Hilbert function of `K[x_1..x_nvars] / ⟨gens⟩` in degrees `0..=upto`, by
/// inclusion–exclusion over subsets of the minimal generators. Subsets whose
/// lcm exceeds `upto` in degree are pruned together with all their supersets.
pub fn hilbert_function_monomial(gens: &[Monomial], nvars: usize, upto: usize) -> Vec<u64> {
    let mins = minimal_monomials(gens);
    // coeff[d] = Σ (-1)^{|S|} over subsets with deg lcm(S) = d
    let mut coeff = vec![0i128; upto + 1];
    fn walk(mins: &[Monomial], start: usize, cur: &Monomial, sign: i128, upto: usize, coeff: &mut [i128]) {
        for i in start..mins.len() {
            let l = cur.lcm(&mins[i]);
            let d = l.degree() as usize;
            if d > upto {
                continue;
            }
            coeff[d] -= sign;
            walk(mins, i + 1, &l, -sign, upto, coeff);
        }
    }
    coeff[0] = 1;
    walk(&mins, 0, &Monomial::one(nvars), 1, upto, &mut coeff);
    (0..=upto)
        .map(|n| {
            let v: i128 = (0..=n)
                .filter(|&d| coeff[d] != 0)
                .map(|d| {
                    if nvars == 0 {
                        if n == d {
                            coeff[d]
                        } else {
                            0
                        }
                    } else {
                        coeff[d] * binomial_coeff((n - d + nvars - 1) as u64, (nvars - 1) as u64)
                    }
                })
                .sum();
            v as u64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn bin(a: &[u32], b: &[u32], o: &MonomialOrder) -> Binomial {
        Binomial::normalized(m(a), m(b), o).unwrap()
    }

    /// p(⟨3,5,7⟩) generators: x2^2 - x1 x3, x2 x3 - x1^4, x3^2 - x1^3 x2.
    fn p357(o: &MonomialOrder) -> Vec<Binomial> {
        vec![
            bin(&[0, 2, 0], &[1, 0, 1], o),
            bin(&[0, 1, 1], &[4, 0, 0], o),
            bin(&[0, 0, 2], &[3, 1, 0], o),
        ]
    }

    #[test]
    fn normal_form_examples() {
        let o = MonomialOrder::degrevlex(2);
        let f = bin(&[5, 0], &[0, 3], &o);
        assert_eq!(normal_form(&f, std::slice::from_ref(&f), &o).unwrap(), None);
        let g = bin(&[7, 0], &[2, 3], &o);
        assert_eq!(normal_form(&g, &[f], &o).unwrap(), None);
        let local = MonomialOrder::negdegrevlex_with(vec![1, 0]).unwrap();
        assert!(matches!(normal_form(&g, &[], &local), Err(Error::WrongOrder(_))));
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let o = MonomialOrder::degrevlex(2);
        let f = bin(&[5, 0], &[0, 3], &o);
        let gb = buchberger(std::slice::from_ref(&f), &o).unwrap();
        assert_eq!(gb.elements(), &[f]);
    }

    #[test]
    fn basis_of_357() {
        let o = MonomialOrder::degrevlex(3);
        let gb = buchberger(&p357(&o), &o).unwrap();
        let mut leads = gb.leads();
        leads.sort();
        let mut expected = vec![m(&[0, 2, 0]), m(&[4, 0, 0]), m(&[3, 1, 0])];
        expected.sort();
        assert_eq!(leads, expected);
        assert!(is_groebner(gb.elements(), &o).unwrap());
        assert!(check_reduced(gb.elements(), &o));
        // dropping an element breaks the criterion
        let mut short = gb.elements().to_vec();
        short.remove(0);
        assert!(!is_groebner(&short, &o).unwrap());
    }

    #[test]
    fn s_pair_from_hand_example_reduces_to_zero() {
        let o = MonomialOrder::degrevlex(3);
        let gb = buchberger(&p357(&o), &o).unwrap();
        let f = bin(&[0, 2, 0], &[1, 0, 1], &o);
        let g = bin(&[4, 0, 0], &[0, 1, 1], &o);
        let s = crate::monomial::s_pair(&f, &g, &o).unwrap();
        assert_eq!(normal_form(&s, gb.elements(), &o).unwrap(), None);
    }

    #[test]
    fn homogenize_principal() {
        let o = MonomialOrder::degrevlex(2);
        let gb = buchberger(&[bin(&[5, 0], &[0, 3], &o)], &o).unwrap();
        let h = homogenize_ideal(&gb).unwrap();
        assert_eq!(h.elements()[0].lead, m(&[5, 0, 0]));
        assert_eq!(h.elements()[0].tail, m(&[0, 3, 2]));
        assert!(is_groebner(h.elements(), h.order()).unwrap());
        let lex = buchberger(&[bin(&[5, 0], &[0, 3], &o)], &MonomialOrder::lex(2)).unwrap();
        assert!(matches!(homogenize_ideal(&lex), Err(Error::WrongOrder(_))));
    }

    #[test]
    fn local_basis_is_minimal() {
        let local = MonomialOrder::negdegrevlex_with(vec![4, 3, 2, 1, 0]).unwrap();
        let deg = [87u64, 145, 203, 252, 308].map(crate::monomial::NatVector::scalar);
        let p = crate::toric::toric_basis(&deg, Deadline::NONE).unwrap();
        let sb = standard_basis_local(p.elements(), &local, Deadline::NONE).unwrap();
        let leads = sb.leads();
        for (i, a) in leads.iter().enumerate() {
            for (j, b) in leads.iter().enumerate() {
                assert!(i == j || !a.divides(b), "{a} divides {b}");
            }
        }
        assert!(sb.var_divides_some_lead(0).is_none());
    }

    #[test]
    fn local_basis_of_357_avoids_smallest_variable() {
        let local = MonomialOrder::negdegrevlex_with(vec![2, 1, 0]).unwrap();
        let sb = standard_basis_local(&p357(&MonomialOrder::degrevlex(3)), &local, Deadline::NONE).unwrap();
        assert!(sb.var_divides_some_lead(0).is_none(), "{:?}", sb.elements());
    }

    #[test]
    fn initial_form_of_principal() {
        let local = MonomialOrder::negdegrevlex_with(vec![1, 0]).unwrap();
        let f = Binomial::new(m(&[5, 0]), m(&[0, 3])).unwrap();
        let sb = standard_basis_local(&[f], &local, Deadline::NONE).unwrap();
        let forms = initial_forms_ideal(&sb).unwrap();
        assert_eq!(forms, vec![InitialForm::Monomial(m(&[0, 3]))]);
    }

    #[test]
    fn hilbert_function_of_monomial_quotients() {
        // K[x,y]/(y^3): 1,2,3,3,3
        assert_eq!(hilbert_function_monomial(&[m(&[0, 3])], 2, 4), vec![1, 2, 3, 3, 3]);
        // K[x,y,z]/(x,y,z) = K
        let max = [m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])];
        assert_eq!(hilbert_function_monomial(&max, 3, 3), vec![1, 0, 0, 0]);
        assert_eq!(hilbert_function_monomial(&[], 2, 3), vec![1, 2, 3, 4]);
    }

    fn brute_hf(gens: &[Monomial], nvars: usize, upto: usize) -> Vec<u64> {
        let mut out = vec![0u64; upto + 1];
        let mut stack = vec![Vec::<u32>::new()];
        while let Some(p) = stack.pop() {
            if p.len() == nvars {
                let mon = Monomial::new(p.clone());
                if !gens.iter().any(|g| g.divides(&mon)) {
                    out[mon.degree() as usize] += 1;
                }
                continue;
            }
            let used: u32 = p.iter().sum();
            for e in 0..=(upto as u32 - used) {
                let mut q = p.clone();
                q.push(e);
                stack.push(q);
            }
        }
        out
    }

    fn random_binomials(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>)>> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..4, n), proptest::collection::vec(0u32..4, n)),
            1..4,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn hilbert_inclusion_exclusion_matches_enumeration(
            gens in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 0..6)
        ) {
            let ms: Vec<Monomial> = gens.into_iter().map(Monomial::new).filter(|m| !m.is_one()).collect();
            prop_assert_eq!(hilbert_function_monomial(&ms, 3, 7), brute_hf(&ms, 3, 7));
        }

        #[test]
        fn reduced_basis_is_unique_and_valid(pairs in random_binomials(3)) {
            let o = MonomialOrder::degrevlex(3);
            let gens: Vec<Binomial> = pairs
                .into_iter()
                .filter_map(|(a, b)| Binomial::normalized(Monomial::new(a), Monomial::new(b), &o))
                .collect();
            let gb = buchberger(&gens, &o).unwrap();
            prop_assert!(is_groebner(gb.elements(), &o).unwrap());
            prop_assert!(check_reduced(gb.elements(), &o));
            for g in &gens {
                prop_assert_eq!(normal_form(g, gb.elements(), &o).unwrap(), None);
            }
            let mut rev = gens.clone();
            rev.reverse();
            let again = buchberger(&rev, &o).unwrap();
            prop_assert_eq!(again.elements(), gb.elements());
        }
    }
}
