//! Independent classical predictions for an arrangement with `K = V`: the
//! intersection poset of flats, its Moebius function, the Poincare
//! polynomial of the complexified complement, and the Zaslavsky region
//! count. These never touch the covector pipeline, so they serve as an
//! external check on it.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{Arrangement, Rat};

/// A nonempty affine subspace, stored as the reduced row echelon form of
/// its defining system `a . v = rhs` (rows are `[a_1 .. a_d, rhs]`). The
/// canonical form makes equality a plain comparison; rank is the number of
/// pivot rows, i.e. the codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    rows: Vec<Vec<Rat>>,
    dim: usize,
}

/// Reduced row echelon form; returns `None` when the system is
/// inconsistent (the subspace is empty).
fn rref(mut rows: Vec<Vec<Rat>>, dim: usize) -> Option<Vec<Vec<Rat>>> {
    let mut pivot_row = 0;
    for col in 0..dim {
        let Some(found) =
            (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())
        else {
            continue;
        };
        rows.swap(pivot_row, found);
        let scale = rows[pivot_row][col].clone().recip();
        for entry in rows[pivot_row].iter_mut() {
            *entry *= &scale;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..=dim {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    for row in &rows[pivot_row..] {
        if !row[dim].is_zero() {
            return None;
        }
    }
    rows.truncate(pivot_row);
    Some(rows)
}

impl Flat {
    fn whole_space(dim: usize) -> Flat {
        Flat { rows: Vec::new(), dim }
    }

    /// Codimension of the flat.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Intersection with the hyperplane `a . v + b = 0`, or `None` when
    /// empty.
    fn intersect(&self, a: &[Rat], b: &Rat) -> Option<Flat> {
        let mut rows = self.rows.clone();
        let mut new_row: Vec<Rat> = a.to_vec();
        new_row.push(-b.clone());
        rows.push(new_row);
        rref(rows, self.dim).map(|rows| Flat { rows, dim: self.dim })
    }

    /// Whether this flat contains `other` as a point set: every defining
    /// equation of `self` must be implied by `other`'s system, i.e. adding
    /// them changes neither rank nor consistency.
    pub fn contains(&self, other: &Flat) -> bool {
        let mut rows = other.rows.clone();
        rows.extend(self.rows.iter().cloned());
        match rref(rows, self.dim) {
            Some(reduced) => reduced.len() == other.rank(),
            None => false,
        }
    }
}

/// Flats of an arrangement ordered by reverse inclusion, with the whole
/// space at the bottom.
#[derive(Debug, Clone)]
pub struct IntersectionPoset {
    flats: Vec<Flat>,
}

/// Closes the hyperplane set under intersection, discarding empty ones.
/// Requires `K = V`: the classical formulas below speak about the full
/// complement only.
pub fn intersection_poset(arrangement: &Arrangement) -> Result<IntersectionPoset> {
    if !arrangement.is_full_space() {
        return Err(Error::OracleNeedsFullSpace);
    }
    let dim = arrangement.dim();
    let mut flats = vec![Flat::whole_space(dim)];
    let mut queue = vec![0usize];
    while let Some(idx) = queue.pop() {
        for h in arrangement.hyperplanes() {
            if let Some(flat) = flats[idx].intersect(&h.a, &h.b) {
                if !flats.contains(&flat) {
                    flats.push(flat.clone());
                    queue.push(flats.len() - 1);
                }
            }
        }
    }
    flats.sort_by(|x, y| x.rank().cmp(&y.rank()).then_with(|| x.rows.cmp(&y.rows)));
    Ok(IntersectionPoset { flats })
}

impl IntersectionPoset {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Order relation: `i <= j` iff flat `i` contains flat `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i].contains(&self.flats[j])
    }

    /// Moebius function `mu(V, x)` for every flat, by the defining
    /// recursion `mu(V, x) = -sum of mu(V, y) over V <= y < x`.
    pub fn mobius(&self) -> Vec<i64> {
        let n = self.flats.len();
        let mut mu = vec![0i64; n];
        // Flats are sorted by rank, so predecessors appear earlier.
        for x in 0..n {
            if self.flats[x].rank() == 0 {
                mu[x] = 1;
                continue;
            }
            let mut acc = 0i64;
            for y in 0..n {
                if y != x && self.leq(y, x) {
                    acc += mu[y];
                }
            }
            mu[x] = -acc;
        }
        mu
    }

    /// Coefficients of the Poincare polynomial: coefficient `k` is the sum
    /// of `|mu|` over flats of codimension `k`.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        let mu = self.mobius();
        let top = self.flats.iter().map(Flat::rank).max().unwrap_or(0);
        let mut coeffs = vec![0i64; top + 1];
        for (flat, m) in self.flats.iter().zip(&mu) {
            coeffs[flat.rank()] += m.abs();
        }
        coeffs
    }

    /// Zaslavsky's chamber count: the Poincare polynomial evaluated at 1.
    pub fn region_count(&self) -> i64 {
        self.poincare_polynomial().iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat_int, AffineForm};

    fn line_points(points: &[i64]) -> Arrangement {
        Arrangement::full_space(
            1,
            points
                .iter()
                .map(|&p| AffineForm::new(vec![rat_int(1)], rat_int(-p)))
                .collect(),
        )
        .unwrap()
    }

    fn plane_lines(lines: &[(i64, i64, i64)]) -> Arrangement {
        Arrangement::full_space(
            2,
            lines
                .iter()
                .map(|&(a, b, c)| AffineForm::new(vec![rat_int(a), rat_int(b)], rat_int(c)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_points_on_a_line() {
        let p = intersection_poset(&line_points(&[-1, 1])).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.poincare_polynomial(), vec![1, 2]);
        assert_eq!(p.region_count(), 3);
    }

    #[test]
    fn three_concurrent_lines() {
        let p = intersection_poset(&plane_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, 0)])).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.poincare_polynomial(), vec![1, 3, 2]);
        assert_eq!(p.region_count(), 6);
    }

    #[test]
    fn three_generic_lines() {
        let p = intersection_poset(&plane_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)])).unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.poincare_polynomial(), vec![1, 3, 3]);
        assert_eq!(p.region_count(), 7);
    }

    #[test]
    fn parallel_lines_have_no_common_flat() {
        let p = intersection_poset(&plane_lines(&[(1, 0, 0), (1, 0, -1)])).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.poincare_polynomial(), vec![1, 2]);
        assert_eq!(p.region_count(), 3);
    }

    #[test]
    fn duplicate_hyperplanes_collapse_to_one_flat() {
        let p = intersection_poset(&line_points(&[2, 2])).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.region_count(), 2);
    }

    #[test]
    fn empty_arrangement() {
        let a = Arrangement::full_space(2, vec![]).unwrap();
        let p = intersection_poset(&a).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.poincare_polynomial(), vec![1]);
        assert_eq!(p.region_count(), 1);
    }

    #[test]
    fn oracle_rejects_restricted_regions() {
        use crate::geom::{Constraint, Region};
        let restricted = line_points(&[0])
            .with_region(
                Region::new(
                    1,
                    vec![Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(1)))],
                )
                .unwrap(),
            )
            .unwrap();
        assert!(matches!(
            intersection_poset(&restricted),
            Err(Error::OracleNeedsFullSpace)
        ));
    }

    #[test]
    fn mobius_alternates_in_sign_with_rank() {
        for a in [
            line_points(&[-1, 0, 1]),
            plane_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 3)]),
        ] {
            let p = intersection_poset(&a).unwrap();
            for (flat, mu) in p.flats().iter().zip(p.mobius()) {
                let signed = if flat.rank() % 2 == 0 { mu } else { -mu };
                assert!(signed >= 0, "rank {} mu {}", flat.rank(), mu);
            }
        }
    }

    #[test]
    fn rank_strictly_increases_along_covers() {
        let p =
            intersection_poset(&plane_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)])).unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                if i != j && p.leq(i, j) {
                    assert!(p.flats()[i].rank() < p.flats()[j].rank());
                }
            }
        }
    }

    #[test]
    fn tope_count_matches_zaslavsky() {
        for a in [
            line_points(&[-1, 1]),
            plane_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)]),
            plane_lines(&[(1, 0, 0), (0, 1, 0), (1, 1, 0)]),
        ] {
            let (com, _) = a.enumerate_covectors().unwrap();
            let p = intersection_poset(&a).unwrap();
            assert_eq!(com.topes().len() as i64, p.region_count());
        }
    }
}
