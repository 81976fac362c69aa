//! Finite posets: Hasse diagrams, order complexes, opposites, and order
//! isomorphism checks.

use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A finite poset on an indexed list of labels. The relation is stored as
/// bitset rows (`up[i]` = everything above element `i`, inclusively) and is
/// validated to be a partial order on construction.
#[derive(Debug, Clone)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    up: Vec<Vec<u64>>,
}

const WORD_BITS: usize = 64;

fn bit(row: &[u64], j: usize) -> bool {
    row[j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
}

fn set_bit(row: &mut [u64], j: usize) {
    row[j / WORD_BITS] |= 1 << (j % WORD_BITS);
}

impl<T: fmt::Display> FinitePoset<T> {
    /// Builds the poset with `leq(x, y)` as the order relation, checking
    /// reflexivity, antisymmetry, and transitivity.
    pub fn new(elements: Vec<T>, mut leq: impl FnMut(&T, &T) -> bool) -> Result<FinitePoset<T>> {
        let n = elements.len();
        let words = n.div_ceil(WORD_BITS).max(1);
        let mut up = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in 0..n {
                if leq(&elements[i], &elements[j]) {
                    set_bit(&mut up[i], j);
                }
            }
        }
        let poset = FinitePoset { elements, up };
        poset.validate()?;
        Ok(poset)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            if !bit(&self.up[i], i) {
                return Err(Error::NotAPartialOrder(format!(
                    "not reflexive at {}",
                    self.elements[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && bit(&self.up[i], j) && bit(&self.up[j], i) {
                    return Err(Error::NotAPartialOrder(format!(
                        "antisymmetry fails on {} and {}",
                        self.elements[i], self.elements[j]
                    )));
                }
            }
        }
        // Transitivity: i <= j forces up[j] to be a subset of up[i].
        for i in 0..n {
            for j in 0..n {
                if bit(&self.up[i], j) {
                    for w in 0..self.up[i].len() {
                        if self.up[j][w] & !self.up[i][w] != 0 {
                            return Err(Error::NotAPartialOrder(format!(
                                "transitivity fails through {} <= {}",
                                self.elements[i], self.elements[j]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T> FinitePoset<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        bit(&self.up[i], j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Covering relations `x <. y`: pairs with `x < y` and nothing strictly
    /// between, in (lower index, upper index) lexicographic order.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            'next: for j in 0..n {
                if !self.lt(i, j) {
                    continue;
                }
                for k in 0..n {
                    if k != i && k != j && self.lt(i, k) && self.lt(k, j) {
                        continue 'next;
                    }
                }
                edges.push((i, j));
            }
        }
        edges
    }

    /// Maximal elements (no element strictly above).
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(i, j)))
            .collect()
    }

    /// The poset with the reversed relation on the same elements.
    pub fn opposite(&self) -> FinitePoset<T>
    where
        T: Clone,
    {
        let n = self.len();
        let words = self.up.first().map_or(1, |r| r.len());
        let mut up = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in 0..n {
                if bit(&self.up[i], j) {
                    set_bit(&mut up[j], i);
                }
            }
        }
        FinitePoset { elements: self.elements.clone(), up }
    }

    /// Induced subposet on the listed element indices (kept in the order
    /// given). Returns the subposet and the index map back into `self`.
    pub fn induced(&self, indices: &[usize]) -> FinitePoset<T>
    where
        T: Clone,
    {
        let n = indices.len();
        let words = n.div_ceil(WORD_BITS).max(1);
        let mut up = vec![vec![0u64; words]; n];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                if self.leq(i, j) {
                    set_bit(&mut up[a], b);
                }
            }
        }
        let elements = indices.iter().map(|&i| self.elements[i].clone()).collect();
        FinitePoset { elements, up }
    }

    /// The order complex: one vertex per element, one `r`-simplex per chain
    /// `x_0 < x_1 < ... < x_r`.
    pub fn order_complex(&self) -> SimplicialComplex
    where
        T: fmt::Display,
    {
        let n = self.len();
        let strict_up: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| self.lt(i, j)).collect())
            .collect();
        let mut chains: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            for &j in &strict_up[last] {
                let mut longer = chain.clone();
                longer.push(j);
                stack.push(longer);
            }
            chains.push(chain);
        }
        let labels = self.elements.iter().map(|e| e.to_string()).collect();
        SimplicialComplex::new(labels, chains).expect("chains are valid simplices")
    }

    /// DOT rendering of the Hasse diagram, edges directed lower to upper.
    pub fn hasse_dot(&self, graph_name: &str) -> String
    where
        T: fmt::Display,
    {
        let mut out = String::new();
        out.push_str(&format!("digraph {graph_name} {{\n  rankdir=BT;\n"));
        for (i, e) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{e}\"];\n"));
        }
        for (i, j) in self.hasse() {
            out.push_str(&format!("  n{i} -> n{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Checks that the index map `f` (element `i` of `p` maps to element `f[i]`
/// of `q`) is an order isomorphism: a bijection with `x <= y` iff
/// `f(x) <= f(y)`.
pub fn verify_order_iso<A, B>(f: &[usize], p: &FinitePoset<A>, q: &FinitePoset<B>) -> Result<bool> {
    if f.len() != p.len() || p.len() != q.len() {
        return Err(Error::NotABijection);
    }
    let mut seen = vec![false; q.len()];
    for &img in f {
        if img >= q.len() || seen[img] {
            return Err(Error::NotABijection);
        }
        seen[img] = true;
    }
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.leq(i, j) != q.leq(f[i], f[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset<usize> {
        FinitePoset::new((0..n).collect(), |a, b| a <= b).unwrap()
    }

    fn divisibility(upto: usize) -> FinitePoset<usize> {
        FinitePoset::new((1..=upto).collect(), |a, b| b % a == 0).unwrap()
    }

    #[test]
    fn chain_hasse_edges() {
        assert_eq!(chain(3).hasse(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn antichain_order_complex_is_isolated_points() {
        let p = FinitePoset::new(vec![0, 1, 2, 3], |a, b| a == b).unwrap();
        let c = p.order_complex();
        assert_eq!(c.face_counts(), vec![4]);
    }

    #[test]
    fn rejects_non_partial_orders() {
        // Symmetric relation fails antisymmetry.
        assert!(matches!(
            FinitePoset::new(vec![0, 1], |_, _| true),
            Err(Error::NotAPartialOrder(_))
        ));
        // Missing transitive closure: 0<=1, 1<=2 but not 0<=2.
        assert!(matches!(
            FinitePoset::new(vec![0usize, 1, 2], |a, b| a == b || (*a + 1 == *b)),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn opposite_is_involutive_and_shares_order_complex() {
        let p = divisibility(12);
        let op = p.opposite();
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(p.leq(i, j), op.leq(j, i));
                assert_eq!(p.leq(i, j), op.opposite().leq(i, j));
            }
        }
        assert_eq!(
            p.order_complex().labeled_simplices(),
            op.order_complex().labeled_simplices()
        );
    }

    #[test]
    fn hasse_generates_order_by_transitive_closure() {
        let p = divisibility(12);
        let n = p.len();
        let edges = p.hasse();
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            reach[i][i] = true;
        }
        for _ in 0..n {
            for &(a, b) in &edges {
                for t in 0..n {
                    if reach[t][a] {
                        reach[t][b] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(p.leq(i, j), reach[i][j]);
            }
        }
    }

    #[test]
    fn order_iso_examples() {
        let p = chain(3);
        let ident: Vec<usize> = (0..3).collect();
        assert!(verify_order_iso(&ident, &p, &p).unwrap());
        let q = FinitePoset::new(vec![10usize, 11, 12], |a, b| a >= b).unwrap();
        // q is the chain upside down, so reversal is the isomorphism.
        assert!(verify_order_iso(&[2, 1, 0], &p, &q).unwrap());
        assert!(!verify_order_iso(&[0, 1, 2], &p, &q).unwrap());
        assert!(matches!(verify_order_iso(&[0, 0, 1], &p, &q), Err(Error::NotABijection)));
    }

    #[test]
    fn top_element_gives_collapsible_order_complex() {
        let p = divisibility(8);
        // 1 divides everything and 8 is divisible by 1,2,4,8 -- but 3,5,6,7
        // spoil a unique top, so restrict to divisors of 8.
        let divisors = FinitePoset::new(vec![1usize, 2, 4, 8], |a, b| b % a == 0).unwrap();
        assert!(divisors.order_complex().try_collapse());
        assert!(p.order_complex().euler_characteristic() == 1);
    }
}
