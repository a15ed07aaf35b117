use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::semigroups::NumericalSemigroup;

/// Which factor of a gluing a generator or variable comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// One violated condition of the gluing definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingViolation {
    CoefficientCount { side: Side, expected: usize, got: usize },
    ZeroCombination { side: Side },
    NotCoprime { p: u64, q: u64, gcd: u64 },
    PIsGenerator(u64),
    QIsGenerator(u64),
    Collision(u64),
    Overflow,
    NotMinimal(String),
}

impl fmt::Display for GluingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GluingViolation::CoefficientCount { side, expected, got } => {
                write!(f, "{side} coefficient vector has length {got}, expected {expected}")
            }
            GluingViolation::ZeroCombination { side } => {
                write!(f, "{side} combination is zero; p and q must be positive")
            }
            GluingViolation::NotCoprime { p, q, gcd } => write!(f, "gcd(p={p}, q={q}) = {gcd}, not 1"),
            GluingViolation::PIsGenerator(p) => write!(f, "p={p} is a generator of the left semigroup"),
            GluingViolation::QIsGenerator(q) => write!(f, "q={q} is a generator of the right semigroup"),
            GluingViolation::Collision(v) => write!(f, "{v} occurs as both q*m_i and p*n_j"),
            GluingViolation::Overflow => write!(f, "glued generators overflow 64 bits"),
            GluingViolation::NotMinimal(why) => write!(f, "glued set is not a minimal generating set: {why}"),
        }
    }
}

/// `Γ1 #_{p,q} Γ2` with `p = Σ b_i m_i` and `q = Σ a_j n_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingSpec {
    pub left: NumericalSemigroup,
    pub right: NumericalSemigroup,
    pub b: Vec<u64>,
    pub a: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceClass {
    /// `q = a_1 n_1` and `Σ b_i >= a_1`.
    Nice,
    /// `Σ b_i > Σ a_j`.
    GeneralizedNice,
    Neither,
}

impl fmt::Display for NiceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NiceClass::Nice => "nice",
            NiceClass::GeneralizedNice => "generalized nice",
            NiceClass::Neither => "neither",
        })
    }
}

fn combination(gens: &[u64], coeffs: &[u64]) -> Option<u64> {
    gens.iter()
        .zip(coeffs)
        .try_fold(0u64, |acc, (g, c)| acc.checked_add(g.checked_mul(*c)?))
}

impl GluingSpec {
    pub fn new(left: NumericalSemigroup, right: NumericalSemigroup, b: Vec<u64>, a: Vec<u64>) -> Self {
        GluingSpec { left, right, b, a }
    }

    pub fn p(&self) -> Option<u64> {
        combination(self.left.generators(), &self.b)
    }

    pub fn q(&self) -> Option<u64> {
        combination(self.right.generators(), &self.a)
    }

    pub fn sum_b(&self) -> u64 {
        self.b.iter().sum()
    }

    pub fn sum_a(&self) -> u64 {
        self.a.iter().sum()
    }

    /// Every violated condition of the definition (empty when valid).
    pub fn violations(&self) -> Vec<GluingViolation> {
        let mut out = Vec::new();
        let (l, k) = (self.left.embedding_dimension(), self.right.embedding_dimension());
        if self.b.len() != l {
            out.push(GluingViolation::CoefficientCount { side: Side::Left, expected: l, got: self.b.len() });
        }
        if self.a.len() != k {
            out.push(GluingViolation::CoefficientCount { side: Side::Right, expected: k, got: self.a.len() });
        }
        if !out.is_empty() {
            return out;
        }
        let (Some(p), Some(q)) = (self.p(), self.q()) else {
            out.push(GluingViolation::Overflow);
            return out;
        };
        if p == 0 {
            out.push(GluingViolation::ZeroCombination { side: Side::Left });
        }
        if q == 0 {
            out.push(GluingViolation::ZeroCombination { side: Side::Right });
        }
        let g = p.gcd(&q);
        if g != 1 {
            out.push(GluingViolation::NotCoprime { p, q, gcd: g });
        }
        if self.left.generators().contains(&p) {
            out.push(GluingViolation::PIsGenerator(p));
        }
        if self.right.generators().contains(&q) {
            out.push(GluingViolation::QIsGenerator(q));
        }
        let (Some(lhs), Some(rhs)) = (self.scaled_left(q), self.scaled_right(p)) else {
            out.push(GluingViolation::Overflow);
            return out;
        };
        for v in &lhs {
            if rhs.contains(v) {
                out.push(GluingViolation::Collision(*v));
            }
        }
        out
    }

    fn scaled_left(&self, q: u64) -> Option<Vec<u64>> {
        self.left.generators().iter().map(|m| m.checked_mul(q)).collect()
    }

    fn scaled_right(&self, p: u64) -> Option<Vec<u64>> {
        self.right.generators().iter().map(|n| n.checked_mul(p)).collect()
    }

    pub fn glue(&self) -> Result<GluedSemigroup> {
        let v = self.violations();
        if !v.is_empty() {
            return Err(Error::InvalidGluing(v));
        }
        let (p, q) = (self.p().unwrap(), self.q().unwrap());
        let left_part = self.scaled_left(q).unwrap();
        let right_part = self.scaled_right(p).unwrap();
        let all: Vec<u64> = left_part.iter().chain(&right_part).copied().collect();
        let semigroup = NumericalSemigroup::new(all).map_err(|e| {
            Error::InvalidGluing(vec![GluingViolation::NotMinimal(e.to_string())])
        })?;
        Ok(GluedSemigroup {
            spec: self.clone(),
            semigroup,
            left_part,
            right_part,
            p,
            q,
        })
    }

    pub fn nice_class(&self) -> NiceClass {
        let nonzero_tail = self.a.iter().skip(1).any(|&x| x > 0);
        if !nonzero_tail && self.sum_b() >= self.a.first().copied().unwrap_or(0) {
            NiceClass::Nice
        } else if self.sum_b() > self.sum_a() {
            NiceClass::GeneralizedNice
        } else {
            NiceClass::Neither
        }
    }

    pub fn is_generalized_nice(&self) -> bool {
        self.sum_b() > self.sum_a()
    }

    /// `Σ a_j < Σ b_i`.
    pub fn is_star(&self) -> bool {
        self.sum_a() < self.sum_b()
    }
}

/// Result of a gluing, with provenance of every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedSemigroup {
    pub spec: GluingSpec,
    pub semigroup: NumericalSemigroup,
    /// `q m_1, ..., q m_l`.
    pub left_part: Vec<u64>,
    /// `p n_1, ..., p n_k`.
    pub right_part: Vec<u64>,
    pub p: u64,
    pub q: u64,
}

impl GluedSemigroup {
    /// Generators in gluing order: `q m_1..q m_l, p n_1..p n_k`.
    pub fn generators_in_gluing_order(&self) -> Vec<u64> {
        self.left_part.iter().chain(&self.right_part).copied().collect()
    }

    /// Side holding the largest generator (`q m_l` or `p n_k`).
    pub fn largest_side(&self) -> Side {
        if self.left_part.last() > self.right_part.last() {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Side holding the smallest generator (`q m_1` or `p n_1`).
    pub fn smallest_side(&self) -> Side {
        if self.left_part[0] < self.right_part[0] {
            Side::Left
        } else {
            Side::Right
        }
    }
}

/// How `lcm(m, 0)` is read when testing the lcm conditions on leading exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcmConvention {
    /// `lcm(m, 0) = m`.
    ZeroIsNeutral,
    /// `lcm(m, 0) = 0`, the number-theoretic convention.
    ZeroAbsorbs,
}

fn lcm_with(m: u64, n: u64, conv: LcmConvention) -> u64 {
    match (m, n, conv) {
        (0, x, LcmConvention::ZeroIsNeutral) | (x, 0, LcmConvention::ZeroIsNeutral) => x,
        (0, _, LcmConvention::ZeroAbsorbs) | (_, 0, LcmConvention::ZeroAbsorbs) => 0,
        _ => m.lcm(&n),
    }
}

/// Outcome of the literal test `lcm(c_i, α_i) != c_i for all i` over every
/// leading exponent `α` of a reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmConditionReport {
    pub convention: LcmConvention,
    pub holds: bool,
    /// First failing (lead index, coordinate) pair.
    pub first_failure: Option<(usize, usize)>,
}

pub fn lcm_condition(coeffs: &[u64], gb: &GroebnerBasis, conv: LcmConvention) -> Result<LcmConditionReport> {
    if !gb.is_reduced() {
        return Err(Error::NotReduced("lcm condition needs the reduced basis".into()));
    }
    for (idx, el) in gb.elements().iter().enumerate() {
        let alpha = el.lead.exponents();
        if alpha.len() != coeffs.len() {
            return Err(Error::VariableMismatch { left: coeffs.len(), right: alpha.len() });
        }
        for (i, (&c, &al)) in coeffs.iter().zip(alpha).enumerate() {
            if lcm_with(c, al as u64, conv) == c {
                return Ok(LcmConditionReport {
                    convention: conv,
                    holds: false,
                    first_failure: Some((idx, i)),
                });
            }
        }
    }
    Ok(LcmConditionReport {
        convention: conv,
        holds: true,
        first_failure: None,
    })
}

/// The lcm condition on the left factor's leads against `b`.
pub fn condition_a(spec: &GluingSpec, gb_left: &GroebnerBasis, conv: LcmConvention) -> Result<LcmConditionReport> {
    lcm_condition(&spec.b, gb_left, conv)
}

/// The lcm condition on the right factor's leads against `a`.
pub fn condition_b(spec: &GluingSpec, gb_right: &GroebnerBasis, conv: LcmConvention) -> Result<LcmConditionReport> {
    lcm_condition(&spec.a, gb_right, conv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g.to_vec()).unwrap()
    }

    fn spec(l: &[u64], r: &[u64], b: &[u64], a: &[u64]) -> GluingSpec {
        GluingSpec::new(ns(l), ns(r), b.to_vec(), a.to_vec())
    }

    #[test]
    fn worked_gluings() {
        let g = spec(&[3, 5], &[7, 12], &[1, 1], &[1, 1]).glue().unwrap();
        assert_eq!((g.p, g.q), (8, 19));
        assert_eq!(g.generators_in_gluing_order(), vec![57, 95, 56, 96]);

        let g = spec(&[5, 7, 11], &[25, 28], &[2, 1, 0], &[2, 0]).glue().unwrap();
        assert_eq!(g.generators_in_gluing_order(), vec![250, 350, 550, 425, 476]);
        assert_eq!(g.largest_side(), Side::Left);

        let g = spec(&[3, 5, 7], &[9, 11], &[3, 1, 0], &[2, 1]).glue().unwrap();
        assert_eq!(g.generators_in_gluing_order(), vec![87, 145, 203, 126, 154]);
        assert_eq!(g.largest_side(), Side::Left);

        let g = spec(&[3, 5, 7], &[9, 11], &[2, 3, 0], &[2, 1]).glue().unwrap();
        assert_eq!(g.generators_in_gluing_order(), vec![87, 145, 203, 189, 231]);
        assert_eq!(g.largest_side(), Side::Right);
    }

    #[test]
    fn star_instance_generators_are_recomputed() {
        let g = spec(&[3, 5, 7], &[9, 11], &[0, 0, 4], &[2, 1]).glue().unwrap();
        assert_eq!((g.p, g.q), (28, 29));
        assert_eq!(g.generators_in_gluing_order(), vec![87, 145, 203, 252, 308]);
        assert!(g.spec.is_star());
        assert_eq!(g.smallest_side(), Side::Left);
    }

    #[test]
    fn classification() {
        assert_eq!(spec(&[3, 5, 7], &[9, 11], &[2, 3, 0], &[2, 1]).nice_class(), NiceClass::GeneralizedNice);
        assert_eq!(spec(&[3, 5], &[2, 3], &[1, 1], &[2, 0]).nice_class(), NiceClass::Nice);
        assert!(spec(&[3, 5, 7], &[9, 11], &[0, 0, 4], &[2, 1]).is_star());
        assert_eq!(spec(&[5, 12], &[7, 8], &[1, 1], &[3, 0]).nice_class(), NiceClass::Neither);
    }

    #[test]
    fn violations_are_reported_individually() {
        let s = spec(&[3, 5], &[7, 12], &[1, 0], &[0, 1]);
        let v = s.violations();
        assert!(v.contains(&GluingViolation::PIsGenerator(3)));
        assert!(v.contains(&GluingViolation::QIsGenerator(12)));
        assert!(v.contains(&GluingViolation::NotCoprime { p: 3, q: 12, gcd: 3 }));
        assert!(matches!(s.glue(), Err(Error::InvalidGluing(_))));

        let s = spec(&[3, 5], &[7, 12], &[1], &[1, 1]);
        assert!(matches!(s.violations()[0], GluingViolation::CoefficientCount { side: Side::Left, .. }));
    }

    #[test]
    fn lcm_conventions() {
        assert_eq!(lcm_with(3, 0, LcmConvention::ZeroIsNeutral), 3);
        assert_eq!(lcm_with(0, 2, LcmConvention::ZeroIsNeutral), 2);
        assert_eq!(lcm_with(3, 0, LcmConvention::ZeroAbsorbs), 0);
        assert_eq!(lcm_with(4, 6, LcmConvention::ZeroAbsorbs), 12);
    }
}
