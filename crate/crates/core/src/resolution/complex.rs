use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::NatVector;
use crate::semigroups::{AffineSemigroup, ElementSet};

/// Largest vertex count for which faces are stored as bitmasks.
pub const MAX_VERTICES: usize = 24;

/// A simplicial complex on vertices `0..n`, stored as its full face list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// Faces as bitmasks, sorted by size then value. The empty face is included
    /// unless the complex is void.
    faces: Vec<u32>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Invariant(format!("{n} vertices exceed the face-mask width")));
        }
        let mut faces = Vec::new();
        let mut seen = vec![false; 1 << n];
        for f in facets {
            let mut mask = 0u32;
            for &v in f {
                if v >= n {
                    return Err(Error::Invariant(format!("vertex {v} out of range 0..{n}")));
                }
                mask |= 1 << v;
            }
            // enumerate submasks
            let mut sub = mask;
            loop {
                if !seen[sub as usize] {
                    seen[sub as usize] = true;
                    faces.push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        Ok(Self::from_faces(n, faces))
    }

    fn from_faces(n: usize, mut faces: Vec<u32>) -> Self {
        faces.sort_by_key(|&f| (f.count_ones(), f));
        SimplicialComplex { n, faces }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn contains_face(&self, mask: u32) -> bool {
        self.faces.binary_search_by_key(&(mask.count_ones(), mask), |&f| (f.count_ones(), f)).is_ok()
    }

    /// Maximal faces as sorted vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .faces
            .iter()
            .filter(|&&f| !self.faces.iter().any(|&g| g != f && g & f == f))
            .map(|&f| (0..self.n).filter(|&v| f >> v & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    /// A vertex `v` with `F ∪ {v}` a face for every face `F`; such complexes are acyclic.
    pub fn cone_apex(&self) -> Option<usize> {
        let all = self.faces.iter().fold(0u32, |acc, &f| acc | f);
        (0..self.n)
            .filter(|&v| all >> v & 1 == 1)
            .find(|&v| self.faces.iter().all(|&f| self.contains_face(f | 1 << v)))
    }
}

/// Ranks of reduced rational homology `H̃_k`, for `k = -1 ..= dim`, at index `k + 1`.
///
/// Boundary matrices have entries `±1`; ranks come from exact fraction-free
/// elimination.
pub fn homology_ranks(k: &SimplicialComplex) -> Vec<u64> {
    if k.faces.is_empty() {
        return Vec::new();
    }
    let top = k.faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] = faces with s vertices (dimension s - 1)
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in &k.faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank of ∂: C_{s} → C_{s-1} for s = 1..=top (sizes)
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_size[s - 1].len()];
                let mut sign = 1i64;
                for v in 0..k.n {
                    if f >> v & 1 == 1 {
                        let g = f & !(1 << v);
                        let idx = by_size[s - 1].binary_search(&g).expect("complex is closed");
                        row[idx] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        ranks[s] = if rows.is_empty() || by_size[s - 1].is_empty() { 0 } else { linalg::rank(&rows) };
    }
    (0..=top)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

/// `Δ_b = {F : b - Σ_{i∈F} a_i ∈ Γ}`; errors when `b ∉ Γ`.
pub fn sq_divisor_complex(s: &AffineSemigroup, b: &NatVector) -> Result<SimplicialComplex> {
    crate::monomial::check_dim(s.dim(), b.dim())?;
    if s.num_generators() > MAX_VERTICES {
        return Err(Error::Invariant(format!("{} generators exceed the face-mask width", s.num_generators())));
    }
    let set = ElementSet::new(s, b)?;
    if !set.contains(b) {
        return Err(Error::NotAMember(b.to_string()));
    }
    Ok(divisor_complex_in(s.generators(), &set, b.entries()))
}

/// `Δ_b` using a precomputed membership table whose box contains `b`.
pub(crate) fn divisor_complex_in(gens: &[NatVector], set: &ElementSet, b: &[u64]) -> SimplicialComplex {
    let mut faces = Vec::new();
    let mut stack: Vec<(u32, usize, Vec<u64>)> = vec![(0, 0, b.to_vec())];
    while let Some((mask, next, rest)) = stack.pop() {
        faces.push(mask);
        for (j, g) in gens.iter().enumerate().skip(next) {
            let Some(r) = rest
                .iter()
                .zip(g.entries())
                .map(|(x, a)| x.checked_sub(*a))
                .collect::<Option<Vec<u64>>>()
            else {
                continue;
            };
            if set.contains_raw(&r) {
                stack.push((mask | 1 << j, j + 1, r));
            }
        }
    }
    SimplicialComplex::from_faces(gens.len(), faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_is_acyclic() {
        let k = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(homology_ranks(&k), vec![0, 0, 0, 0]);
        assert_eq!(k.cone_apex(), Some(0));
    }

    #[test]
    fn two_points_and_hollow_triangle() {
        let pts = SimplicialComplex::from_facets(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(homology_ranks(&pts), vec![0, 1]);
        assert_eq!(pts.cone_apex(), None);
        let tri = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(homology_ranks(&tri), vec![0, 0, 1]);
        assert_eq!(tri.facets(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn empty_face_only_has_minus_one_homology() {
        let k = SimplicialComplex::from_facets(3, &[vec![]]).unwrap();
        assert_eq!(homology_ranks(&k), vec![1]);
    }

    #[test]
    fn hollow_tetrahedron_and_torus_like() {
        let facets: Vec<Vec<usize>> = (0..4).map(|skip| (0..4).filter(|&v| v != skip).collect()).collect();
        let k = SimplicialComplex::from_facets(4, &facets).unwrap();
        assert_eq!(homology_ranks(&k), vec![0, 0, 0, 1]);
        // two disjoint edges plus an isolated vertex: three components
        let k = SimplicialComplex::from_facets(5, &[vec![0, 1], vec![2, 3], vec![4]]).unwrap();
        assert_eq!(homology_ranks(&k), vec![0, 2, 0]);
    }

    #[test]
    fn divisor_complex_of_three_five_seven() {
        let s = crate::semigroups::NumericalSemigroup::new(vec![3, 5, 7]).unwrap().to_affine();
        let zero = sq_divisor_complex(&s, &NatVector::scalar(0)).unwrap();
        assert_eq!(zero.faces(), &[0]);
        // 10 = 3 + 7 = 5 + 5: faces {x1, x3} and {x2}
        let k = sq_divisor_complex(&s, &NatVector::scalar(10)).unwrap();
        assert_eq!(k.facets(), vec![vec![0, 2], vec![1]]);
        assert_eq!(homology_ranks(&k), vec![0, 1, 0]);
        assert!(matches!(sq_divisor_complex(&s, &NatVector::scalar(4)), Err(Error::NotAMember(_))));
    }
}
