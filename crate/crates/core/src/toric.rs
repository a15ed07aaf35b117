//! Defining binomial ideals of semigroup rings, computed by elimination.

use std::fmt;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_with, homogenize_ideal, BuchbergerOptions, GroebnerBasis};
use crate::monomial::{Binomial, Monomial, MonomialOrder, NatVector};
use crate::semigroups::{AffineSemigroup, GluingSpec, NumericalSemigroup};

/// A binomial ideal together with the semigroup degree of every variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialIdeal {
    var_names: Vec<String>,
    generators: Vec<Binomial>,
    degree_map: Vec<NatVector>,
}

impl BinomialIdeal {
    /// Checks that every generator is homogeneous for `degree_map`.
    pub fn new(var_names: Vec<String>, generators: Vec<Binomial>, degree_map: Vec<NatVector>) -> Result<Self> {
        if var_names.len() != degree_map.len() {
            return Err(Error::VariableMismatch { left: var_names.len(), right: degree_map.len() });
        }
        for g in &generators {
            crate::monomial::check_dim(var_names.len(), g.nvars())?;
            if !g.is_graded(&degree_map)? {
                return Err(Error::Invariant(format!("{g} is not homogeneous for the semigroup grading")));
            }
        }
        Ok(BinomialIdeal { var_names, generators, degree_map })
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn degree_map(&self) -> &[NatVector] {
        &self.degree_map
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    /// Reduced Gröbner basis under degrevlex in the ambient variable order.
    pub fn canonical_basis(&self) -> Result<GroebnerBasis> {
        buchberger(&self.generators, &MonomialOrder::degrevlex(self.nvars()))
    }

    /// Renders a binomial with this ideal's variable names.
    pub fn show(&self, b: &Binomial) -> String {
        format!("{} - {}", show_monomial(&b.lead, &self.var_names), show_monomial(&b.tail, &self.var_names))
    }
}

impl fmt::Display for BinomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|b| self.show(b)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

pub fn show_monomial(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn numbered_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn to_u32(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Overflow("monomial exponent"))
}

/// Kernel of `x_i ↦ t^{degrees[i]}`, as the reduced degrevlex basis in the given
/// variable order.
///
/// Buchberger runs on `{x_i - t^{a_i}}` under an order eliminating the `t`
/// block; S-pairs are selected by the grading `deg x_i = |a_i|`, `deg t_j = 1`,
/// for which every input is homogeneous.
pub fn toric_basis(degrees: &[NatVector], deadline: Deadline) -> Result<GroebnerBasis> {
    let n = degrees.len();
    let d = degrees.first().map_or(0, |g| g.dim());
    let total = n + d;
    let mut gens = Vec::with_capacity(n);
    for (i, a) in degrees.iter().enumerate() {
        crate::monomial::check_dim(d, a.dim())?;
        let mut t = vec![0u32; total];
        for (j, &c) in a.entries().iter().enumerate() {
            t[n + j] = to_u32(c)?;
        }
        gens.push(Binomial::new(Monomial::var(i, total), Monomial::new(t))?);
    }
    let order = MonomialOrder::degrevlex(total).with_elimination((n..total).collect());
    let mut weights: Vec<u64> = degrees.iter().map(|a| a.entries().iter().sum()).collect();
    weights.extend(std::iter::repeat_n(1, d));
    let opts = BuchbergerOptions { deadline, selection_weights: Some(weights) };
    let gb = buchberger_with(&gens, &order, &opts)?;
    let free: Vec<Binomial> = gb
        .elements()
        .iter()
        .filter(|b| !(n..total).any(|v| b.uses_var(v)))
        .map(|b| Binomial {
            lead: Monomial::new(b.lead.exponents()[..n].to_vec()),
            tail: Monomial::new(b.tail.exponents()[..n].to_vec()),
        })
        .collect();
    buchberger(&free, &MonomialOrder::degrevlex(n))
}

pub fn toric_ideal_of(names: Vec<String>, degrees: Vec<NatVector>, deadline: Deadline) -> Result<BinomialIdeal> {
    let gb = toric_basis(&degrees, deadline)?;
    BinomialIdeal::new(names, gb.into_elements(), degrees)
}

/// `p(Γ)` in variables `x1..xe` ordered like the (sorted) generators.
pub fn toric_ideal_numerical(s: &NumericalSemigroup, deadline: Deadline) -> Result<BinomialIdeal> {
    let degrees = s.generators().iter().map(|&g| NatVector::scalar(g)).collect();
    toric_ideal_of(numbered_names("x", s.embedding_dimension()), degrees, deadline)
}

/// `I(Γ)` in variables `x1..xn` ordered like the generators.
pub fn toric_ideal(s: &AffineSemigroup, deadline: Deadline) -> Result<BinomialIdeal> {
    toric_ideal_of(numbered_names("x", s.num_generators()), s.generators().to_vec(), deadline)
}

/// `Γ̄ ⊂ N²` generated by `(n_i, n_e - n_i)` followed by `(0, n_e)`.
pub fn projective_closure_semigroup(s: &NumericalSemigroup) -> AffineSemigroup {
    let ne = s.largest_generator();
    let mut gens: Vec<NatVector> = s.generators().iter().map(|&n| NatVector::new(vec![n, ne - n])).collect();
    gens.push(NatVector::new(vec![0, ne]));
    AffineSemigroup::new(gens).expect("projective closure generators are distinct and nonzero")
}

/// Reduced basis of the projective-closure ideal: the degrevlex basis of `p(Γ)`
/// homogenized by `x0`, which is appended as the last and lowest variable.
pub fn projective_closure_basis(s: &NumericalSemigroup, deadline: Deadline) -> Result<GroebnerBasis> {
    let p = toric_ideal_numerical(s, deadline)?;
    homogenize_ideal(&p.canonical_basis()?)
}

/// The projective-closure ideal with `x0 ↦ (0, n_e)` and `x_i ↦ (n_i, n_e - n_i)`.
pub fn projective_closure_ideal(s: &NumericalSemigroup, deadline: Deadline) -> Result<BinomialIdeal> {
    let gb = projective_closure_basis(s, deadline)?;
    let closure = projective_closure_semigroup(s);
    let mut names = numbered_names("x", s.embedding_dimension());
    names.push("x0".into());
    BinomialIdeal::new(names, gb.into_elements(), closure.generators().to_vec())
}

/// `G1 ∪ G2 ∪ {x^b - y^a}` in variables `x1..xl, y1..yk` (gluing order).
pub fn glued_ideal_generators(spec: &GluingSpec, left: &BinomialIdeal, right: &BinomialIdeal) -> Result<BinomialIdeal> {
    let glued = spec.glue()?;
    let (l, k) = (left.nvars(), right.nvars());
    if l != spec.left.embedding_dimension() {
        return Err(Error::VariableMismatch { left: l, right: spec.left.embedding_dimension() });
    }
    if k != spec.right.embedding_dimension() {
        return Err(Error::VariableMismatch { left: k, right: spec.right.embedding_dimension() });
    }
    let total = l + k;
    let mut gens: Vec<Binomial> = left.generators().iter().map(|b| b.embed(0, total)).collect();
    gens.extend(right.generators().iter().map(|b| b.embed(l, total)));
    gens.push(gluing_binomial(spec)?);
    let mut names = numbered_names("x", l);
    names.extend(numbered_names("y", k));
    let degrees = glued.generators_in_gluing_order().into_iter().map(NatVector::scalar).collect();
    BinomialIdeal::new(names, gens, degrees)
}

/// `ρ = x^b - y^a` over `x1..xl, y1..yk`.
pub fn gluing_binomial(spec: &GluingSpec) -> Result<Binomial> {
    let mut lead: Vec<u32> = spec.b.iter().map(|&c| to_u32(c)).collect::<Result<_>>()?;
    let tail_right: Vec<u32> = spec.a.iter().map(|&c| to_u32(c)).collect::<Result<_>>()?;
    let l = lead.len();
    lead.extend(std::iter::repeat_n(0, tail_right.len()));
    let mut tail = vec![0u32; l];
    tail.extend(tail_right);
    Binomial::new(Monomial::new(lead), Monomial::new(tail))
}

/// A minimal generating set, chosen greedily in increasing semigroup degree.
pub fn minimal_generators(i: &BinomialIdeal, deadline: Deadline) -> Result<Vec<Binomial>> {
    let order = MonomialOrder::degrevlex(i.nvars());
    let mut cands: Vec<(u64, Binomial)> = Vec::new();
    for b in i.canonical_basis()?.elements() {
        let deg = b.lead.weighted_degree(i.degree_map())?;
        cands.push((deg.entries().iter().sum(), b.clone()));
    }
    cands.sort_by_key(|x| x.0);
    let mut kept: Vec<Binomial> = Vec::new();
    let mut gb: Vec<Binomial> = Vec::new();
    for (_, b) in cands {
        deadline.check()?;
        if crate::groebner::normal_form(&b, &gb, &order)?.is_some() {
            kept.push(b);
            gb = buchberger(&kept, &order)?.into_elements();
        }
    }
    Ok(kept)
}

/// Equality of ideals by comparing reduced degrevlex bases.
pub fn ideal_equals(i: &BinomialIdeal, j: &BinomialIdeal) -> Result<bool> {
    if i.nvars() != j.nvars() {
        return Err(Error::VariableMismatch { left: i.nvars(), right: j.nvars() });
    }
    Ok(i.canonical_basis()?.elements() == j.canonical_basis()?.elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::is_groebner;
    use proptest::prelude::*;

    fn ns(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g.to_vec()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn two_generated_is_principal() {
        let i = toric_ideal_numerical(&ns(&[3, 5]), Deadline::NONE).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.show(&i.generators()[0]), "x1^5 - x2^3");
    }

    #[test]
    fn three_five_seven() {
        let i = toric_ideal_numerical(&ns(&[3, 5, 7]), Deadline::NONE).unwrap();
        let mut got: Vec<String> = i.generators().iter().map(|b| i.show(b)).collect();
        got.sort();
        assert_eq!(got, vec!["x1^3*x2 - x3^2", "x1^4 - x2*x3", "x2^2 - x1*x3"]);
    }

    #[test]
    fn closure_of_two_three() {
        let i = projective_closure_ideal(&ns(&[2, 3]), Deadline::NONE).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.show(&i.generators()[0]), "x1^3 - x2^2*x0");
        assert_eq!(i.degree_map()[2], NatVector::new(vec![0, 3]));
    }

    #[test]
    fn glued_generators_match_toric_ideal() {
        let spec = GluingSpec::new(ns(&[3, 5]), ns(&[7, 12]), vec![1, 1], vec![1, 1]);
        let g = spec.glue().unwrap();
        assert_eq!(g.generators_in_gluing_order(), vec![57, 95, 56, 96]);
        let left = toric_ideal_numerical(&spec.left, Deadline::NONE).unwrap();
        let right = toric_ideal_numerical(&spec.right, Deadline::NONE).unwrap();
        let glued = glued_ideal_generators(&spec, &left, &right).unwrap();
        assert_eq!(glued.generators().len(), 3);
        assert_eq!(glued.show(&glued.generators()[2]), "x1*x2 - y1*y2");
        let direct = toric_ideal_of(glued.var_names().to_vec(), glued.degree_map().to_vec(), Deadline::NONE).unwrap();
        assert!(ideal_equals(&glued, &direct).unwrap());
    }

    #[test]
    fn affine_matrix_ideal_is_homogeneous_and_groebner() {
        let a = crate::semigroups::AffineSemigroup::new(
            [[3, 0], [5, 0], [0, 1], [1, 3], [2, 3]].iter().map(|v| NatVector::new(v.to_vec())).collect(),
        )
        .unwrap();
        let i = toric_ideal(&a, Deadline::NONE).unwrap();
        assert!(is_groebner(i.generators(), &MonomialOrder::degrevlex(5)).unwrap());
        // x1^5 - x2^3 lives in the ideal
        let f = Binomial::new(m(&[5, 0, 0, 0, 0]), m(&[0, 3, 0, 0, 0])).unwrap();
        let gb = i.canonical_basis().unwrap();
        let o = MonomialOrder::degrevlex(5);
        assert_eq!(crate::groebner::normal_form(&f, gb.elements(), &o).unwrap(), None);
    }

    #[test]
    fn join_ideal_is_union_of_factor_ideals() {
        let j = crate::semigroups::axis_join(&ns(&[3, 5, 7]), &ns(&[2, 5])).unwrap();
        let whole = toric_ideal(&j.semigroup, Deadline::NONE).unwrap();
        let l = toric_ideal_numerical(&ns(&[3, 5, 7]), Deadline::NONE).unwrap();
        let r = toric_ideal_numerical(&ns(&[2, 5]), Deadline::NONE).unwrap();
        let mut gens: Vec<Binomial> = l.generators().iter().map(|b| b.embed(0, 5)).collect();
        gens.extend(r.generators().iter().map(|b| b.embed(3, 5)));
        let union = BinomialIdeal::new(whole.var_names().to_vec(), gens, whole.degree_map().to_vec()).unwrap();
        assert!(ideal_equals(&whole, &union).unwrap());
    }

    #[test]
    fn deadline_is_honoured() {
        let past = Deadline::at(std::time::Instant::now() - std::time::Duration::from_secs(1));
        assert_eq!(
            toric_ideal_numerical(&ns(&[250, 350, 425, 476, 550]), past).unwrap_err(),
            Error::DeadlineExceeded
        );
    }

    fn small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
        proptest::collection::vec(2u64..30, 2..5).prop_filter_map("needs a valid semigroup", |g| {
            NumericalSemigroup::generated_by(&g).ok().filter(|s| s.embedding_dimension() >= 2)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(30))]

        #[test]
        fn generators_vanish_and_ideal_is_order_independent(s in small_semigroup()) {
            let i = toric_ideal_numerical(&s, Deadline::NONE).unwrap();
            for b in i.generators() {
                prop_assert!(b.is_graded(i.degree_map()).unwrap());
            }
            // reversing the variable order gives the same ideal after relabelling
            let mut rev_deg = i.degree_map().to_vec();
            rev_deg.reverse();
            let rev = toric_ideal_of(numbered_names("x", rev_deg.len()), rev_deg, Deadline::NONE).unwrap();
            let n = i.nvars();
            let back: Vec<Binomial> = rev
                .generators()
                .iter()
                .map(|b| {
                    let flip = |m: &Monomial| Monomial::new(m.exponents().iter().rev().copied().collect());
                    Binomial::new(flip(&b.lead), flip(&b.tail)).unwrap()
                })
                .collect();
            let relabelled = BinomialIdeal::new(numbered_names("x", n), back, i.degree_map().to_vec()).unwrap();
            prop_assert!(ideal_equals(&i, &relabelled).unwrap());
        }

        #[test]
        fn three_generated_non_ci_has_three_generators(s in small_semigroup()) {
            prop_assume!(s.embedding_dimension() == 3);
            let i = toric_ideal_numerical(&s, Deadline::NONE).unwrap();
            let symmetric = s.is_symmetric();
            // minimal generators: 2 for complete intersections (symmetric), 3 otherwise
            let gens = minimal_generators(&i, Deadline::NONE).unwrap().len();
            prop_assert_eq!(gens, if symmetric { 2 } else { 3 });
        }
    }
}
