//! Finite simplicial complexes stored as explicit simplex lists.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A simplicial complex on vertices `0..n_vertices`, with every simplex
/// materialized (not just facets). Simplices are sorted vertex lists and the
/// list is closed under taking subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: Vec<Vec<usize>>,
}

fn simplex_key(s: &[usize]) -> (usize, Vec<usize>) {
    (s.len(), s.to_vec())
}

impl SimplicialComplex {
    /// Builds a complex from an arbitrary simplex collection, adding all
    /// missing faces, deduplicating, and sorting canonically by
    /// (dimension, vertex list).
    pub fn new(labels: Vec<String>, simplices: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
        let n = labels.len();
        let mut closed: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = Vec::new();
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if s.iter().any(|&v| v >= n) {
                return Err(Error::Internal(format!(
                    "simplex {s:?} references a vertex outside 0..{n}"
                )));
            }
            stack.push(s);
        }
        while let Some(s) = stack.pop() {
            if s.is_empty() || !closed.insert(simplex_key(&s)) {
                continue;
            }
            if s.len() > 1 {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    stack.push(face);
                }
            }
        }
        Ok(SimplicialComplex {
            labels,
            simplices: closed.into_iter().map(|(_, s)| s).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// All simplices, canonically ordered by (dimension, vertex list).
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension of the complex, or `None` when it has no simplices.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }

    /// Simplices of a fixed dimension, in canonical order.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<&Vec<usize>> {
        self.simplices.iter().filter(|s| s.len() == k + 1).collect()
    }

    /// Count of simplices per dimension (index = dimension).
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for s in &self.simplices {
            let d = s.len() - 1;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }

    /// Euler characteristic as the alternating sum of face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// The simplex set with vertices replaced by their labels. Two complexes
    /// describe the same labeled complex iff these sets are equal.
    pub fn labeled_simplices(&self) -> BTreeSet<BTreeSet<String>> {
        self.simplices
            .iter()
            .map(|s| s.iter().map(|&v| self.labels[v].clone()).collect())
            .collect()
    }

    /// Rebuilds the complex under a vertex permutation: vertex `v` becomes
    /// `perm[v]`. Labels travel with their vertices.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        if perm.len() != self.labels.len() {
            return Err(Error::NotABijection);
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::NotABijection);
            }
            seen[p] = true;
        }
        let mut labels = vec![String::new(); self.labels.len()];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v].clone();
        }
        let simplices = self
            .simplices
            .iter()
            .map(|s| s.iter().map(|&v| perm[v]).collect())
            .collect();
        SimplicialComplex::new(labels, simplices)
    }

    /// Greedy elementary collapse: repeatedly removes a free pair
    /// (a simplex contained in exactly one other simplex, together with that
    /// unique coface), taking the smallest free face each time. Returns the
    /// remaining simplices. Homotopy type is preserved at every step.
    pub fn collapse_core(&self) -> SimplicialComplex {
        let mut alive: BTreeSet<(usize, Vec<usize>)> =
            self.simplices.iter().map(|s| simplex_key(s)).collect();
        // Proper-coface counts and immediate-coface lists.
        let mut coface_count: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut immediate: BTreeMap<(usize, Vec<usize>), BTreeSet<(usize, Vec<usize>)>> =
            BTreeMap::new();
        for key in &alive {
            coface_count.entry(key.clone()).or_insert(0);
            immediate.entry(key.clone()).or_default();
        }
        for (len, s) in &alive {
            for sub in proper_subsets(s) {
                *coface_count.get_mut(&simplex_key(&sub)).unwrap() += 1;
                if sub.len() + 1 == *len {
                    immediate
                        .get_mut(&simplex_key(&sub))
                        .unwrap()
                        .insert((*len, s.clone()));
                }
            }
        }
        let mut candidates: BTreeSet<(usize, Vec<usize>)> = alive
            .iter()
            .filter(|k| coface_count[*k] == 1)
            .cloned()
            .collect();
        while let Some(free) = candidates.iter().next().cloned() {
            candidates.remove(&free);
            if !alive.contains(&free) || coface_count[&free] != 1 {
                continue;
            }
            // With exactly one proper coface, that coface has codimension 1.
            let coface = immediate[&free]
                .iter()
                .find(|c| alive.contains(*c))
                .expect("free face has a live immediate coface")
                .clone();
            for key in [&free, &coface] {
                alive.remove(key);
                for sub in proper_subsets(&key.1) {
                    let sub_key = simplex_key(&sub);
                    let cnt = coface_count.get_mut(&sub_key).unwrap();
                    *cnt -= 1;
                    if sub.len() + 1 == key.0 {
                        immediate.get_mut(&sub_key).unwrap().remove(key);
                    }
                    if *cnt == 1 && alive.contains(&sub_key) {
                        candidates.insert(sub_key);
                    }
                }
            }
        }
        SimplicialComplex {
            labels: self.labels.clone(),
            simplices: alive.into_iter().map(|(_, s)| s).collect(),
        }
    }

    /// Whether greedy elementary collapses reduce the complex to a single
    /// vertex. `false` is inconclusive, never a disproof of contractibility.
    pub fn try_collapse(&self) -> bool {
        let core = self.collapse_core();
        core.simplices.len() == 1 && core.simplices[0].len() == 1
    }
}

fn proper_subsets(s: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let full = (1u32 << s.len()) - 1;
    for mask in 1..full {
        out.push(
            (0..s.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| s[i])
                .collect(),
        );
    }
    out
}
