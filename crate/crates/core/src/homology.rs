//! Integral simplicial homology via Smith normal form, with acyclicity and
//! greedy-collapse certificates.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                *m.at_mut(i, j) = BigInt::from(v);
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Multiplies `self * other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let product = self.at(i, k) * other.at(k, j);
                    *out.at_mut(i, j) += product;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) and the rank of
/// an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// Diagonalizes by unimodular row/column operations, always pivoting on the
/// smallest-magnitude nonzero entry of the remaining submatrix to limit
/// coefficient growth, with the divisibility chain enforced.
pub fn smith_normal_form(matrix: &IntMatrix) -> SmithNormalForm {
    let mut m = matrix.clone();
    let bound = m.rows.min(m.cols);
    let mut factors = Vec::new();
    for k in 0..bound {
        'pivot: loop {
            // Smallest-magnitude nonzero entry of the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..m.rows {
                for j in k..m.cols {
                    if !m.at(i, j).is_zero()
                        && pivot.is_none_or(|(pi, pj)| m.at(i, j).abs() < m.at(pi, pj).abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return SmithNormalForm { factors, rank: k };
            };
            m.swap_rows(k, pi);
            m.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..m.rows {
                if !m.at(i, k).is_zero() {
                    let q = m.at(i, k) / m.at(k, k);
                    if !q.is_zero() {
                        for j in k..m.cols {
                            let delta = &q * m.at(k, j);
                            *m.at_mut(i, j) -= delta;
                        }
                    }
                    if !m.at(i, k).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..m.cols {
                if !m.at(k, j).is_zero() {
                    let q = m.at(k, j) / m.at(k, k);
                    if !q.is_zero() {
                        for i in k..m.rows {
                            let delta = &q * m.at(i, k);
                            *m.at_mut(i, j) -= delta;
                        }
                    }
                    if !m.at(k, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot; // residues are strictly smaller; re-pivot
            }
            // Enforce d_k | every remaining entry.
            for i in k + 1..m.rows {
                for j in k + 1..m.cols {
                    if !(m.at(i, j) % m.at(k, k)).is_zero() {
                        for col in k..m.cols {
                            let add = m.at(i, col).clone();
                            *m.at_mut(k, col) += add;
                        }
                        continue 'pivot;
                    }
                }
            }
            factors.push(m.at(k, k).abs());
            break;
        }
    }
    let rank = factors.len();
    SmithNormalForm { factors, rank }
}

/// Boundary matrices of a simplicial complex, one per positive degree,
/// oriented by the global vertex order. `boundaries[k-1]` maps `k`-chains
/// to `(k-1)`-chains.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub counts: Vec<usize>,
    pub boundaries: Vec<IntMatrix>,
}

pub fn boundary_matrices(complex: &SimplicialComplex) -> ChainComplex {
    let counts = complex.face_counts();
    let dim = counts.len().saturating_sub(1);
    let mut boundaries = Vec::new();
    for k in 1..=dim {
        let rows_list = complex.simplices_of_dim(k - 1);
        let cols_list = complex.simplices_of_dim(k);
        let row_index: std::collections::HashMap<&Vec<usize>, usize> =
            rows_list.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut m = IntMatrix::zeros(rows_list.len(), cols_list.len());
        for (j, simplex) in cols_list.iter().enumerate() {
            for drop in 0..simplex.len() {
                let mut face: Vec<usize> = (*simplex).clone();
                face.remove(drop);
                let i = row_index[&face];
                *m.at_mut(i, j) = if drop % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            }
        }
        boundaries.push(m);
    }
    ChainComplex { counts, boundaries }
}

impl ChainComplex {
    /// `d_{k-1} . d_k = 0` for every consecutive pair.
    pub fn boundary_squared_is_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|pair| pair[0].mul(&pair[1]).is_zero())
    }
}

/// Betti numbers and torsion coefficients per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    /// Reduced Betti numbers: degree zero drops by one.
    pub fn reduced_betti(&self) -> Vec<usize> {
        let mut out = self.betti.clone();
        if let Some(first) = out.first_mut() {
            *first = first.saturating_sub(1);
        }
        out
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    /// Betti vector truncated/padded with zeros to the requested length.
    pub fn betti_padded(&self, len: usize) -> Vec<usize> {
        let mut out = self.betti.clone();
        out.resize(len, 0);
        out
    }

    /// Alternating sum of Betti numbers (equals the Euler characteristic).
    pub fn euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Sparse integer elimination for one boundary matrix. Pivots on unit
/// entries chosen from the sparsest columns (each such pivot contributes an
/// invariant factor of 1 and shrinks the matrix by one row and column);
/// whatever remains when no unit entry is left goes through the dense Smith
/// normal form. Exact throughout, so torsion survives.
fn invariant_factors_sparse(
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
) -> SmithNormalForm {
    use std::collections::{BTreeSet, HashMap, HashSet};

    let mut row_data: Vec<HashMap<usize, BigInt>> = vec![HashMap::new(); rows];
    let mut col_rows: Vec<HashSet<usize>> = vec![HashSet::new(); cols];
    let mut unit_count: Vec<usize> = vec![0; cols];
    for (r, c, v) in entries {
        debug_assert!(v != 0);
        row_data[r].insert(c, BigInt::from(v));
        col_rows[c].insert(r);
        if v.abs() == 1 {
            unit_count[c] += 1;
        }
    }
    let mut col_queue: BTreeSet<(usize, usize)> =
        (0..cols).filter(|&c| !col_rows[c].is_empty()).map(|c| (col_rows[c].len(), c)).collect();
    let mut col_alive = vec![true; cols];
    let mut units = 0usize;

    // Keeps row_data, col_rows, unit_count, and col_queue consistent while
    // adding `delta` to entry (r, c).
    fn add_to_entry(
        r: usize,
        c: usize,
        delta: &BigInt,
        row_data: &mut [HashMap<usize, BigInt>],
        col_rows: &mut [HashSet<usize>],
        unit_count: &mut [usize],
        col_queue: &mut BTreeSet<(usize, usize)>,
    ) {
        let old = row_data[r].remove(&c).unwrap_or_else(BigInt::zero);
        let was_unit = old.abs().is_one();
        let new = old + delta;
        if was_unit {
            unit_count[c] -= 1;
        }
        if new.is_zero() {
            if col_rows[c].remove(&r) {
                col_queue.remove(&(col_rows[c].len() + 1, c));
                if !col_rows[c].is_empty() {
                    col_queue.insert((col_rows[c].len(), c));
                }
            }
        } else {
            if new.abs().is_one() {
                unit_count[c] += 1;
            }
            if col_rows[c].insert(r) {
                if col_rows[c].len() > 1 {
                    col_queue.remove(&(col_rows[c].len() - 1, c));
                }
                col_queue.insert((col_rows[c].len(), c));
            }
            row_data[r].insert(c, new);
        }
    }

    loop {
        // Sparsest column holding a unit entry; within it, the unit row
        // with the fewest nonzeros.
        let Some(&(_, pivot_col)) = col_queue
            .iter()
            .find(|&&(_, c)| col_alive[c] && unit_count[c] > 0)
        else {
            break;
        };
        let pivot_row = col_rows[pivot_col]
            .iter()
            .filter(|&&r| row_data[r][&pivot_col].abs().is_one())
            .min_by_key(|&&r| (row_data[r].len(), r))
            .copied()
            .expect("column with unit_count > 0 has a unit entry");
        let pivot_val = row_data[pivot_row][&pivot_col].clone();
        let pivot_entries: Vec<(usize, BigInt)> =
            row_data[pivot_row].iter().map(|(&c, v)| (c, v.clone())).collect();

        let targets: Vec<usize> =
            col_rows[pivot_col].iter().copied().filter(|&r| r != pivot_row).collect();
        for r in targets {
            // factor = entry / pivot; pivot is a unit, so this is exact.
            let factor = &row_data[r][&pivot_col] * &pivot_val;
            for (c, v) in &pivot_entries {
                let delta = -(&factor * v);
                add_to_entry(r, *c, &delta, &mut row_data, &mut col_rows, &mut unit_count, &mut col_queue);
            }
        }
        // Detach the pivot row and column entirely.
        for (c, v) in &pivot_entries {
            if col_rows[*c].remove(&pivot_row) {
                col_queue.remove(&(col_rows[*c].len() + 1, *c));
                if !col_rows[*c].is_empty() {
                    col_queue.insert((col_rows[*c].len(), *c));
                }
                if v.abs().is_one() {
                    unit_count[*c] -= 1;
                }
            }
        }
        row_data[pivot_row].clear();
        col_alive[pivot_col] = false;
        units += 1;
    }

    // Dense Smith normal form on the unit-free remainder (tiny in practice).
    let live_rows: Vec<usize> = (0..rows).filter(|&r| !row_data[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols)
        .filter(|&c| col_alive[c] && !col_rows[c].is_empty())
        .collect();
    let col_of: std::collections::HashMap<usize, usize> =
        live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut rest = IntMatrix::zeros(live_rows.len(), live_cols.len());
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &row_data[r] {
            *rest.at_mut(i, col_of[c]) = v.clone();
        }
    }
    let tail = smith_normal_form(&rest);
    let mut factors = vec![BigInt::one(); units];
    factors.extend(tail.factors);
    let rank = units + tail.rank;
    SmithNormalForm { factors, rank }
}

fn sparse_boundary_entries(
    complex: &SimplicialComplex,
    k: usize,
) -> (usize, usize, Vec<(usize, usize, i64)>) {
    let rows_list = complex.simplices_of_dim(k - 1);
    let cols_list = complex.simplices_of_dim(k);
    let row_index: std::collections::HashMap<&Vec<usize>, usize> =
        rows_list.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut entries = Vec::with_capacity(cols_list.len() * (k + 1));
    for (j, simplex) in cols_list.iter().enumerate() {
        for drop in 0..simplex.len() {
            let mut face: Vec<usize> = (*simplex).clone();
            face.remove(drop);
            entries.push((row_index[&face], j, if drop % 2 == 0 { 1 } else { -1 }));
        }
    }
    (rows_list.len(), cols_list.len(), entries)
}

/// Integral homology of a complex: reduced by exact sparse elimination on
/// each boundary matrix, with the Smith normal form finishing the job.
pub fn betti(complex: &SimplicialComplex) -> HomologyProfile {
    if complex.is_empty() {
        return HomologyProfile { betti: Vec::new(), torsion: Vec::new() };
    }
    let dim = complex.dim().expect("nonempty");
    let counts = complex.face_counts();
    let snfs: Vec<SmithNormalForm> = (1..=dim)
        .map(|k| {
            let (r, c, entries) = sparse_boundary_entries(complex, k);
            invariant_factors_sparse(r, c, entries)
        })
        .collect();
    let rank = |k: usize| -> usize {
        if k == 0 || k > snfs.len() {
            0
        } else {
            snfs[k - 1].rank
        }
    };
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for k in 0..=dim {
        let n_k = counts.get(k).copied().unwrap_or(0);
        betti.push(n_k - rank(k) - rank(k + 1));
        let t = if k + 1 <= snfs.len() {
            snfs[k].factors.iter().filter(|d| !d.is_one()).cloned().collect()
        } else {
            Vec::new()
        };
        torsion.push(t);
    }
    HomologyProfile { betti, torsion }
}

/// Whether reduced integral homology vanishes in every degree.
pub fn is_reduced_acyclic(complex: &SimplicialComplex) -> Result<bool> {
    if complex.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let profile = betti(complex);
    Ok(profile.betti[0] == 1
        && profile.betti[1..].iter().all(|&b| b == 0)
        && !profile.has_torsion())
}

#[cfg(test)]
mod tests {
    use num::Integer;

    use super::*;
    use crate::complex::SimplicialComplex;

    fn named(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    fn complex(n: usize, simplices: Vec<Vec<usize>>) -> SimplicialComplex {
        SimplicialComplex::new(named(n), simplices).unwrap()
    }

    #[test]
    fn single_edge_boundary_column() {
        let chain = boundary_matrices(&complex(2, vec![vec![0, 1]]));
        let d1 = &chain.boundaries[0];
        assert_eq!((d1.rows, d1.cols), (2, 1));
        assert_eq!(*d1.at(0, 0), BigInt::from(-1));
        assert_eq!(*d1.at(1, 0), BigInt::from(1));
    }

    #[test]
    fn hollow_triangle_boundary_rank() {
        let chain =
            boundary_matrices(&complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]));
        let snf = smith_normal_form(&chain.boundaries[0]);
        assert_eq!(snf.rank, 2);
    }

    #[test]
    fn point_has_no_boundary_matrices() {
        let chain = boundary_matrices(&complex(1, vec![vec![0]]));
        assert!(chain.boundaries.is_empty());
    }

    #[test]
    fn snf_examples() {
        // Determinantal divisors of diag(2,3): gcd of 1x1 minors is 1,
        // the single 2x2 minor is 6, so the invariant factors are (1, 6).
        let snf = smith_normal_form(&IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(snf.factors, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(snf.rank, 2);

        let identity = IntMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let snf = smith_normal_form(&identity);
        assert_eq!(snf.factors, vec![BigInt::one(); 3]);

        let zero = IntMatrix::zeros(3, 2);
        assert_eq!(smith_normal_form(&zero).rank, 0);
    }

    #[test]
    fn snf_factors_match_determinantal_divisors() {
        // Independent oracle: the product of the first k invariant factors
        // equals the gcd of all k x k minors.
        fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
            fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
                if k == 0 {
                    return vec![vec![]];
                }
                let mut out = Vec::new();
                for first in 0..n {
                    for mut rest in combos(n, k - 1) {
                        if rest.first().is_none_or(|&r| r > first) {
                            rest.insert(0, first);
                            out.push(rest);
                        }
                    }
                }
                out.into_iter().filter(|c| c.len() == k).collect()
            }
            fn det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
                if rows.len() == 1 {
                    return m.at(rows[0], cols[0]).clone();
                }
                let mut acc = BigInt::zero();
                for (idx, &r) in rows.iter().enumerate() {
                    let rest: Vec<usize> =
                        rows.iter().copied().filter(|&x| x != r).collect();
                    let sub = det(m, &rest, &cols[1..]);
                    let term = m.at(r, cols[0]) * sub;
                    if idx % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            }
            let mut g = BigInt::zero();
            for rows in combos(m.rows, k) {
                for cols in combos(m.cols, k) {
                    g = g.gcd(&det(m, &rows, &cols));
                }
            }
            g
        }

        let samples = vec![
            IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]),
            IntMatrix::from_rows(vec![vec![0, 0], vec![0, 0]]),
            IntMatrix::from_rows(vec![vec![3, 1, -2], vec![1, -1, 4]]),
            IntMatrix::from_rows(vec![vec![6, 10], vec![15, 4], vec![9, -3]]),
        ];
        for m in samples {
            let snf = smith_normal_form(&m);
            let mut product = BigInt::one();
            for (k, d) in snf.factors.iter().enumerate() {
                product *= d;
                assert_eq!(product, minor_gcd(&m, k + 1), "k={} of {m:?}", k + 1);
            }
            if snf.rank < m.rows.min(m.cols) {
                assert!(minor_gcd(&m, snf.rank + 1).is_zero());
            }
        }
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let profile = betti(&complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]));
        assert_eq!(profile.betti, vec![1, 1]);
        assert!(!profile.has_torsion());
    }

    #[test]
    fn tetrahedron_boundary_is_a_sphere() {
        let c = complex(
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        );
        let profile = betti(&c);
        assert_eq!(profile.betti, vec![1, 0, 1]);
        assert!(!is_reduced_acyclic(&c).unwrap());
    }

    #[test]
    fn two_disjoint_points() {
        let c = complex(2, vec![vec![0], vec![1]]);
        assert_eq!(betti(&c).betti, vec![2]);
        assert!(!is_reduced_acyclic(&c).unwrap());
    }

    #[test]
    fn cone_is_acyclic() {
        let c = complex(
            4,
            vec![vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3], vec![0, 1], vec![1, 2], vec![0, 2]],
        );
        assert!(is_reduced_acyclic(&c).unwrap());
        assert_eq!(betti(&c).betti, vec![1, 0, 0]);
    }

    #[test]
    fn projective_plane_torsion_is_detected() {
        // Minimal 6-vertex triangulation of the real projective plane:
        // every edge lies in exactly two of these ten triangles.
        let rp2 = complex(
            6,
            vec![
                vec![0, 1, 4],
                vec![0, 1, 5],
                vec![0, 2, 3],
                vec![0, 2, 5],
                vec![0, 3, 4],
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 5],
                vec![2, 4, 5],
                vec![3, 4, 5],
            ],
        );
        let profile = betti(&rp2);
        assert_eq!(profile.betti, vec![1, 0, 0]);
        assert_eq!(profile.torsion[1], vec![BigInt::from(2)]);
        assert!(!is_reduced_acyclic(&rp2).unwrap());
    }

    #[test]
    fn empty_complex_errors() {
        let c = SimplicialComplex::new(Vec::new(), Vec::new()).unwrap();
        assert!(matches!(is_reduced_acyclic(&c), Err(Error::EmptyComplex)));
    }

    #[test]
    fn alternating_betti_sum_is_euler_characteristic() {
        for c in [
            complex(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
            complex(4, vec![vec![0, 1, 2], vec![2, 3]]),
            complex(5, vec![vec![0], vec![1, 2], vec![3, 4], vec![2, 3]]),
        ] {
            assert_eq!(betti(&c).euler(), c.euler_characteristic());
        }
    }

    #[test]
    fn betti_is_invariant_under_vertex_permutation() {
        let c = complex(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]]);
        let p = c.permute_vertices(&[3, 0, 2, 1]).unwrap();
        assert_eq!(betti(&c), betti(&p));
    }
}
