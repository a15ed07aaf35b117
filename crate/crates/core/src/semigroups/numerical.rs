use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::NatVector;
use crate::semigroups::AffineSemigroup;

/// A numerical semigroup `⟨n_1 < ... < n_e⟩` with `gcd = 1`, stored by its
/// minimal generators.
#[derive(Clone)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    apery: OnceLock<Vec<u64>>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.gens)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", s.join(","))
    }
}

/// Least elements of each residue class modulo `m` reachable from 0 by adding
/// generators (Dijkstra on the residue graph).
fn residue_minima(gens: &[u64], m: u64) -> Vec<Option<u64>> {
    let m_us = m as usize;
    let mut dist: Vec<Option<u64>> = vec![None; m_us];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nr = (r + (g % m) as usize) % m_us;
            if dist[nr].is_none_or(|cur| nd < cur) {
                dist[nr] = Some(nd);
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// True when `x` is a non-negative integer combination of `gens`.
fn representable(gens: &[u64], x: u64) -> bool {
    let mut reach = vec![false; x as usize + 1];
    reach[0] = true;
    for v in 1..=x as usize {
        reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[x as usize]
}

impl NumericalSemigroup {
    /// Validates and sorts a minimal generating set.
    pub fn new(mut gens: Vec<u64>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidSemigroup("no generators".into()));
        }
        gens.sort_unstable();
        if gens[0] == 0 {
            return Err(Error::InvalidSemigroup("generators must be positive".into()));
        }
        if let Some(w) = gens.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSemigroup(format!("repeated generator {}", w[0])));
        }
        let g = gens.iter().fold(0u64, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidSemigroup(format!("generators have gcd {g}, not 1")));
        }
        let s = NumericalSemigroup {
            gens,
            apery: OnceLock::new(),
        };
        for (i, &n) in s.gens.iter().enumerate() {
            let others: Vec<u64> = s.gens[..i].to_vec();
            if i > 0 && s.contains_with(&others, n) {
                return Err(Error::InvalidSemigroup(format!(
                    "generating set is not minimal: {n} is a combination of smaller generators"
                )));
            }
        }
        Ok(s)
    }

    /// The semigroup generated by an arbitrary set, keeping only minimal generators.
    pub fn generated_by(candidates: &[u64]) -> Result<Self> {
        let mut sorted: Vec<u64> = candidates.iter().copied().filter(|&c| c > 0).collect();
        sorted.sort_unstable();
        sorted.dedup();
        let mut minimal: Vec<u64> = Vec::new();
        for c in sorted {
            if minimal.is_empty() || !representable(&minimal, c) {
                minimal.push(c);
            }
        }
        Self::new(minimal)
    }

    fn contains_with(&self, gens: &[u64], x: u64) -> bool {
        // Smaller generators only; plain DP keeps validation independent of Apéry caches.
        representable(gens, x)
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn largest_generator(&self) -> u64 {
        *self.gens.last().unwrap()
    }

    fn apery_of_multiplicity(&self) -> &[u64] {
        self.apery.get_or_init(|| {
            residue_minima(&self.gens, self.gens[0])
                .into_iter()
                .map(|d| d.expect("gcd 1 reaches every residue"))
                .collect()
        })
    }

    pub fn contains(&self, x: u64) -> bool {
        let ap = self.apery_of_multiplicity();
        x >= ap[(x % self.gens[0]) as usize]
    }

    /// Apéry set of `m`, indexed by residue: entry `i` is the least element `≡ i (mod m)`.
    pub fn apery(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotAMember(m.to_string()));
        }
        Ok(residue_minima(&self.gens, m)
            .into_iter()
            .map(|d| d.expect("gcd 1 reaches every residue"))
            .collect())
    }

    /// Largest gap, or `None` when the semigroup is all of `N`.
    pub fn frobenius(&self) -> Option<u64> {
        let max = *self.apery_of_multiplicity().iter().max().unwrap();
        max.checked_sub(self.gens[0])
    }

    /// Least `c` with `c + N ⊆ Γ`.
    pub fn conductor(&self) -> u64 {
        self.frobenius().map_or(0, |f| f + 1)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor()).filter(|&x| !self.contains(x)).collect()
    }

    /// Gaps `f` with `f + n_i ∈ Γ` for every generator.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        self.gaps()
            .into_iter()
            .filter(|&f| self.gens.iter().all(|&g| self.contains(f + g)))
            .collect()
    }

    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    /// Exactly one of `z`, `F - z` lies in Γ for every `0 <= z <= F`.
    pub fn is_symmetric(&self) -> bool {
        match self.frobenius() {
            None => true,
            Some(f) => (0..=f).all(|z| self.contains(z) != self.contains(f - z)),
        }
    }

    /// Maximal factorization length of `s`.
    pub fn ord(&self, s: u64) -> Result<u64> {
        if !self.contains(s) {
            return Err(Error::NotAMember(s.to_string()));
        }
        let t = FactorizationLengths::new(self, s as usize);
        Ok(t.max_len(s).unwrap() as u64)
    }

    /// `H(n) = #{s ∈ Γ : ord(s) = n}` for `n = 0..=upto`.
    pub fn hilbert_gr(&self, upto: usize) -> Vec<u64> {
        let limit = upto * self.largest_generator() as usize;
        let t = FactorizationLengths::new(self, limit);
        let mut h = vec![0u64; upto + 1];
        for s in 0..=limit {
            if let Some(o) = t.max_len(s as u64) {
                if (o as usize) <= upto {
                    h[o as usize] += 1;
                }
            }
        }
        h
    }

    /// Least `r` with `{ord >= r+1} = n_1 + {ord >= r}`; from there on the
    /// Hilbert function of the associated graded ring is constantly `n_1`.
    pub fn reduction_number(&self) -> u64 {
        let n1 = self.gens[0];
        let max_ap = *self.apery_of_multiplicity().iter().max().unwrap();
        let mut r: u64 = 0;
        let mut table = FactorizationLengths::new(self, (max_ap + 2 * n1) as usize);
        loop {
            // Elements s >= w(s mod n1) + (r+1) n1 satisfy the condition automatically.
            let window = max_ap + (r + 1) * n1;
            if table.limit() < window as usize {
                table = FactorizationLengths::new(self, 2 * window as usize);
            }
            let ok = (0..window).all(|s| match table.max_len(s) {
                Some(o) if o as u64 > r => s
                    .checked_sub(n1)
                    .and_then(|t| table.max_len(t))
                    .is_some_and(|ot| ot as u64 >= r),
                _ => true,
            });
            if ok {
                return r;
            }
            r += 1;
        }
    }

    /// Whether `hilbert_gr` never decreases. The answer is certified: the
    /// function is constant from the reduction number on, which `upto` must reach.
    pub fn hilbert_nondecreasing(&self, upto: usize) -> Result<bool> {
        let r = self.reduction_number() as usize;
        if upto < r {
            return Err(Error::WindowTooSmall { needed: r, given: upto });
        }
        let h = self.hilbert_gr(r.max(1));
        Ok(h.windows(2).all(|w| w[0] <= w[1]))
    }

    /// The same semigroup as a submonoid of `N^1`.
    pub fn to_affine(&self) -> AffineSemigroup {
        AffineSemigroup::new(self.gens.iter().map(|&g| NatVector::scalar(g)).collect())
            .expect("minimal numerical generators are minimal in N^1")
    }
}

/// Maximal and minimal factorization lengths for every integer up to a limit.
#[derive(Clone, Debug)]
pub struct FactorizationLengths {
    max: Vec<u32>,
    min: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl FactorizationLengths {
    pub fn new(s: &NumericalSemigroup, limit: usize) -> Self {
        let mut max = vec![NONE; limit + 1];
        let mut min = vec![NONE; limit + 1];
        max[0] = 0;
        min[0] = 0;
        for v in 1..=limit {
            for &g in s.generators() {
                let g = g as usize;
                if g > v || max[v - g] == NONE {
                    continue;
                }
                let (a, b) = (max[v - g] + 1, min[v - g] + 1);
                if max[v] == NONE || a > max[v] {
                    max[v] = a;
                }
                if min[v] == NONE || b < min[v] {
                    min[v] = b;
                }
            }
        }
        FactorizationLengths { max, min }
    }

    pub fn limit(&self) -> usize {
        self.max.len() - 1
    }

    pub fn max_len(&self, s: u64) -> Option<u32> {
        self.max.get(s as usize).copied().filter(|&v| v != NONE)
    }

    pub fn min_len(&self, s: u64) -> Option<u32> {
        self.min.get(s as usize).copied().filter(|&v| v != NONE)
    }
}
