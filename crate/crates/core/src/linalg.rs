//! Exact integer and rational linear algebra: ranks, cone descriptions, and
//! LP feasibility. Everything here is exact; no floating point is involved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank over Q of an integer matrix.
///
/// Fraction-free (Bareiss) elimination on `i128`; on overflow the computation
/// restarts with big integers.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    match bareiss_small(&mut m) {
        Some(r) => r,
        None => rank_big(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()),
    }
}

fn bareiss_small(m: &mut [Vec<i128>]) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = m[rank][col]
                    .checked_mul(m[r][c])?
                    .checked_sub(m[r][col].checked_mul(m[rank][c])?)?;
                m[r][c] = v / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

pub fn rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

pub fn linearly_independent(vectors: &[Vec<i64>]) -> bool {
    rank(vectors) == vectors.len()
}

/// `v / gcd(v)`; the zero vector is returned unchanged.
pub fn primitive(v: &[u64]) -> Vec<u64> {
    let g = v.iter().fold(0u64, |g, &x| g.gcd(&x));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

fn normalize_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// H-representation of `Cone(a_1, ..., a_n) ⊂ Q^d`: `x` is in the cone iff
/// every equality row vanishes on `x` and every inequality row is `>= 0`.
#[derive(Clone, Debug)]
pub struct ConeFacets {
    dim: usize,
    equalities: Vec<Vec<BigInt>>,
    inequalities: Vec<Vec<BigInt>>,
}

impl ConeFacets {
    /// Fourier–Motzkin projection of `{(λ, x) : x = Σ λ_j a_j, λ >= 0}` onto `x`.
    pub fn new(gens: &[Vec<u64>], dim: usize) -> ConeFacets {
        let n = gens.len();
        let width = n + dim;
        // Equality rows: Σ_j a_j[i] λ_j - x_i = 0.
        let mut eqs: Vec<Vec<BigInt>> = (0..dim)
            .map(|i| {
                let mut row = vec![BigInt::zero(); width];
                for (j, g) in gens.iter().enumerate() {
                    row[j] = BigInt::from(g[i]);
                }
                row[n + i] = BigInt::from(-1);
                row
            })
            .collect();
        let mut ineqs: Vec<Vec<BigInt>> = (0..n)
            .map(|j| {
                let mut row = vec![BigInt::zero(); width];
                row[j] = BigInt::one();
                row
            })
            .collect();
        let mut alive: Vec<bool> = vec![true; n];

        // Gaussian elimination of λ through the equalities.
        let mut x_only_eqs = Vec::new();
        while let Some(e) = eqs.pop() {
            let Some(p) = (0..n).find(|&j| !e[j].is_zero()) else {
                if e.iter().any(|v| !v.is_zero()) {
                    x_only_eqs.push(e);
                }
                continue;
            };
            let mut e = e;
            if e[p].is_negative() {
                e.iter_mut().for_each(|v| *v = -&*v);
            }
            let c = e[p].clone();
            let substitute = |row: &mut Vec<BigInt>| {
                if row[p].is_zero() {
                    return;
                }
                let r = row[p].clone();
                for (k, v) in row.iter_mut().enumerate() {
                    *v = &c * &*v - &r * &e[k];
                }
                normalize_row(row);
            };
            eqs.iter_mut().for_each(substitute);
            ineqs.iter_mut().for_each(substitute);
            alive[p] = false;
        }

        // Fourier–Motzkin on the remaining λ.
        for k in 0..n {
            if !alive[k] {
                continue;
            }
            let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
            for row in ineqs.drain(..) {
                if row[k].is_positive() {
                    pos.push(row);
                } else if row[k].is_negative() {
                    neg.push(row);
                } else {
                    zero.push(row);
                }
            }
            for p in &pos {
                for q in &neg {
                    let (a, b) = (p[k].clone(), -q[k].clone());
                    let mut row: Vec<BigInt> = p.iter().zip(q).map(|(u, v)| &b * u + &a * v).collect();
                    normalize_row(&mut row);
                    zero.push(row);
                }
            }
            zero.retain(|r| r.iter().any(|v| !v.is_zero()));
            zero.sort();
            zero.dedup();
            ineqs = zero;
            alive[k] = false;
        }

        let project = |rows: Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
            let mut out: Vec<Vec<BigInt>> = rows
                .into_iter()
                .map(|r| r[n..].to_vec())
                .filter(|r| r.iter().any(|v| !v.is_zero()))
                .collect();
            out.sort();
            out.dedup();
            out
        };
        ConeFacets {
            dim,
            equalities: project(x_only_eqs),
            inequalities: project(ineqs),
        }
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        debug_assert_eq!(x.len(), self.dim);
        let dot = |row: &Vec<BigInt>| -> BigInt { row.iter().zip(x).map(|(a, &b)| a * BigInt::from(b)).sum() };
        self.equalities.iter().all(|r| dot(r).is_zero()) && self.inequalities.iter().all(|r| !dot(r).is_negative())
    }

    pub fn num_inequalities(&self) -> usize {
        self.inequalities.len()
    }
}

/// Is `x = Σ λ_j a_j` feasible with rational `λ >= 0`? Phase-one simplex with
/// Bland's rule on an exact rational tableau.
pub fn simplex_feasible(gens: &[Vec<u64>], x: &[u64]) -> bool {
    let n = gens.len();
    let d = x.len();
    if x.iter().all(|&v| v == 0) {
        return true;
    }
    // Columns: λ_0..λ_{n-1}, s_0..s_{d-1}; last column is the right-hand side.
    let q = |v: u64| BigRational::from_integer(BigInt::from(v));
    let width = n + d + 1;
    let mut t: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row = vec![BigRational::zero(); width];
            for (j, g) in gens.iter().enumerate() {
                row[j] = q(g[i]);
            }
            row[n + i] = BigRational::one();
            row[width - 1] = q(x[i]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + d).collect();
    // Objective: minimize Σ s_i, i.e. reduced costs c_j = -Σ_i t[i][j] for non-artificials.
    let mut obj: Vec<BigRational> = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..width {
            if j < n || j == width - 1 {
                obj[j] -= &row[j];
            }
        }
    }
    while let Some(enter) = (0..n + d).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // Unbounded direction cannot occur for a minimization bounded below by 0.
            break;
        };
        let piv = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v = &*v / &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (v, p) in obj.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        basis[r] = enter;
    }
    // obj[rhs] holds -(current Σ s).
    obj[width - 1].is_zero()
}

/// Exact cone membership: Fourier–Motzkin for `d <= 3`, simplex otherwise.
pub fn cone_contains(gens: &[Vec<u64>], x: &[u64]) -> bool {
    if x.len() <= 3 {
        ConeFacets::new(gens, x.len()).contains(x)
    } else {
        simplex_feasible(gens, x)
    }
}

/// The subgroup of `Z^d` generated by nonnegative vectors, in row echelon
/// (Hermite-style) form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    /// Echelon rows with their pivot columns, pivots positive.
    rows: Vec<(usize, Vec<i128>)>,
    dim: usize,
}

impl IntegerLattice {
    pub fn new(gens: &[Vec<u64>], dim: usize) -> Self {
        let mut m: Vec<Vec<i128>> = gens.iter().map(|g| g.iter().map(|&x| x as i128).collect()).collect();
        let mut rows = Vec::new();
        for col in 0..dim {
            // Euclid on column `col` across the remaining rows
            loop {
                m.retain(|r| r.iter().any(|&x| x != 0));
                let mut nz: Vec<usize> = (0..m.len()).filter(|&i| m[i][col] != 0).collect();
                if nz.len() <= 1 {
                    break;
                }
                nz.sort_by_key(|&i| m[i][col].abs());
                let p = nz[0];
                for &i in &nz[1..] {
                    let q = m[i][col] / m[p][col];
                    let prow = m[p].clone();
                    for (x, y) in m[i].iter_mut().zip(&prow) {
                        *x -= q * y;
                    }
                }
            }
            if let Some(i) = (0..m.len()).find(|&i| m[i][col] != 0) {
                let mut r = m.swap_remove(i);
                if r[col] < 0 {
                    r.iter_mut().for_each(|x| *x = -*x);
                }
                rows.push((col, r));
            }
        }
        IntegerLattice { rows, dim }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        assert_eq!(x.len(), self.dim, "lattice dimension mismatch");
        let mut v: Vec<i128> = x.iter().map(|&c| c as i128).collect();
        for (col, r) in &self.rows {
            if v[*col] % r[*col] != 0 {
                return false;
            }
            let q = v[*col] / r[*col];
            for (a, b) in v.iter_mut().zip(r) {
                *a -= q * b;
            }
        }
        v.iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![3, 5, 0, 1, 2], vec![0, 0, 1, 3, 3]]), 2);
    }

    #[test]
    fn rank_falls_back_to_big_integers() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, big - 1, 3], vec![big - 7, big, 5], vec![1, 1, big]];
        assert_eq!(rank(&m), 3);
        let dep = vec![vec![big, big - 1], vec![big, big - 1]];
        assert_eq!(rank(&dep), 1);
    }

    #[test]
    fn quadrant_cone() {
        let gens = vec![vec![3, 0], vec![5, 0], vec![0, 1], vec![1, 3], vec![2, 3]];
        let c = ConeFacets::new(&gens, 2);
        assert!(c.contains(&[7, 2]));
        assert!(c.contains(&[0, 0]));
        assert!(simplex_feasible(&gens, &[7, 2]));
    }

    #[test]
    fn wedge_cone() {
        let gens = vec![vec![1, 1], vec![1, 2]];
        assert!(cone_contains(&gens, &[2, 3]));
        assert!(!cone_contains(&gens, &[1, 0]));
        assert!(!cone_contains(&gens, &[1, 3]));
        assert!(!simplex_feasible(&gens, &[1, 3]));
    }

    #[test]
    fn lower_dimensional_cone() {
        // a ray in Q^3
        let gens = vec![vec![2, 4, 6]];
        assert!(cone_contains(&gens, &[1, 2, 3]));
        assert!(!cone_contains(&gens, &[1, 2, 4]));
        assert!(simplex_feasible(&gens, &[1, 2, 3]));
        assert!(!simplex_feasible(&gens, &[1, 2, 4]));
    }

    proptest! {
        #[test]
        fn fourier_motzkin_agrees_with_simplex(
            gens in proptest::collection::vec(proptest::collection::vec(0u64..5, 3), 1..5),
            x in proptest::collection::vec(0u64..8, 3),
        ) {
            prop_assert_eq!(ConeFacets::new(&gens, 3).contains(&x), simplex_feasible(&gens, &x));
        }

        #[test]
        fn generators_lie_in_their_cone(gens in proptest::collection::vec(proptest::collection::vec(0u64..6, 4), 1..5)) {
            for g in &gens {
                prop_assert!(simplex_feasible(&gens, g));
            }
        }
    }

    #[test]
    fn lattice_membership() {
        let l = IntegerLattice::new(&[vec![6, 0], vec![10, 0], vec![0, 2], vec![2, 6], vec![4, 6], vec![6, 9]], 2);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[2, 1]) && l.contains(&[0, 0]) && l.contains(&[20, 13]));
        assert!(!l.contains(&[1, 0]) && !l.contains(&[7, 2]));
        let n = IntegerLattice::new(&[vec![4], vec![6]], 1);
        assert!(n.contains(&[2]) && !n.contains(&[3]));
        let flat = IntegerLattice::new(&[vec![1, 1], vec![2, 2]], 2);
        assert_eq!(flat.rank(), 1);
        assert!(flat.contains(&[5, 5]) && !flat.contains(&[5, 4]));
    }
}
