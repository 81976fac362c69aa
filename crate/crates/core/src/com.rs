//! Conditional oriented matroids as finite covector sets: axiom checking
//! with explicit witnesses, topes, the covector poset, and
//! semisimplification.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::sign::{Sign, SignVector};

/// A nonempty, canonically sorted, deduplicated set of covectors of uniform
/// length. Construction validates shape only; the axioms are the business of
/// [`check_com`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Com {
    n: usize,
    covectors: Vec<SignVector>,
}

impl Com {
    pub fn new(n: usize, covectors: Vec<SignVector>) -> Result<Com> {
        if covectors.is_empty() {
            return Err(Error::EmptyCovectorSet);
        }
        for c in &covectors {
            if c.len() != n {
                return Err(Error::LengthMismatch { left: n, right: c.len() });
            }
        }
        let mut covectors = covectors;
        covectors.sort();
        covectors.dedup();
        Ok(Com { n, covectors })
    }

    /// Parses the newline-separated sign-string format.
    pub fn parse(text: &str) -> Result<Com> {
        let mut covectors = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            covectors.push(line.parse()?);
        }
        let n = covectors.first().map(SignVector::len).ok_or(Error::EmptyCovectorSet)?;
        Com::new(n, covectors)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        self.covectors.binary_search(x).is_ok()
    }

    /// Runs the covector axioms over this set.
    pub fn check(&self) -> AxiomReport {
        check_com_sorted(&self.covectors)
    }

    /// Whether the set contains the all-zero vector. Meaningful once
    /// [`Com::check`] passes: a conditional oriented matroid is an oriented
    /// matroid exactly when it contains zero.
    pub fn is_oriented_matroid(&self) -> bool {
        self.contains(&SignVector::zero(self.n))
    }

    /// Covectors maximal under the covector order.
    pub fn topes(&self) -> Vec<SignVector> {
        self.covectors
            .iter()
            .filter(|x| {
                self.covectors
                    .iter()
                    .all(|y| *x == y || !x.leq(y).expect("uniform length"))
            })
            .cloned()
            .collect()
    }

    /// The poset of covectors under `X <= Y  iff  X o Y = Y`.
    pub fn face_poset(&self) -> FinitePoset<SignVector> {
        FinitePoset::new(self.covectors.clone(), |x, y| {
            x.leq(y).expect("uniform length")
        })
        .expect("covector order is a partial order")
    }

    /// Serializes as newline-separated sign strings in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.covectors {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    /// Removes coordinates whose sign function is constant on the set and
    /// merges groups of coordinates with identical sign functions, keeping
    /// the least index of each group.
    pub fn semisimplify(&self) -> Semisimplification {
        let columns: Vec<Vec<Sign>> = (0..self.n)
            .map(|e| self.covectors.iter().map(|c| c.sign(e)).collect())
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        let mut assignment: Vec<Option<usize>> = vec![None; self.n];
        for e in 0..self.n {
            if columns[e].iter().all(|&s| s == columns[e][0]) {
                continue; // constant coordinate
            }
            if let Some(pos) = kept.iter().position(|&k| columns[k] == columns[e]) {
                assignment[e] = Some(pos);
            } else {
                assignment[e] = Some(kept.len());
                kept.push(e);
            }
        }
        let covectors: Vec<SignVector> =
            self.covectors.iter().map(|c| c.restrict(&kept)).collect();
        let com = Com::new(kept.len(), covectors).expect("restriction of a nonempty set");
        debug_assert_eq!(com.len(), self.len(), "restriction must stay a bijection");
        Semisimplification { com, kept, assignment }
    }
}

impl fmt::Display for Com {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Result of [`Com::semisimplify`]: the reduced set plus the coordinate map.
/// `assignment[e]` is the new index carrying original coordinate `e`, or
/// `None` when `e` was dropped as constant; `kept[j]` is the least original
/// index mapped to new coordinate `j`.
#[derive(Debug, Clone)]
pub struct Semisimplification {
    pub com: Com,
    pub kept: Vec<usize>,
    pub assignment: Vec<Option<usize>>,
}

impl Semisimplification {
    /// Image of a covector of the original set under the restriction map.
    pub fn map_covector(&self, x: &SignVector) -> SignVector {
        x.restrict(&self.kept)
    }

    pub fn is_identity(&self) -> bool {
        self.kept.len() == self.assignment.len()
            && self.kept.iter().enumerate().all(|(j, &e)| j == e)
    }
}

/// Outcome of the axiom check. `fs` is closure under reorienting
/// composition (`X o (-Y)` stays in the set); `se` is strong elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub fs_witness: Option<(SignVector, SignVector)>,
    pub se_witness: Option<(SignVector, SignVector, usize)>,
}

impl AxiomReport {
    pub fn fs_ok(&self) -> bool {
        self.fs_witness.is_none()
    }

    pub fn se_ok(&self) -> bool {
        self.se_witness.is_none()
    }

    pub fn ok(&self) -> bool {
        self.fs_ok() && self.se_ok()
    }

    pub fn describe(&self) -> String {
        match (&self.fs_witness, &self.se_witness) {
            (None, None) => "fs ok, se ok".to_string(),
            (Some((x, y)), None) => format!("fs fails on (X={x}, Y={y})"),
            (None, Some((x, y, e))) => format!("se fails on (X={x}, Y={y}, e={e})"),
            (Some((fx, fy)), Some((x, y, e))) => format!(
                "fs fails on (X={fx}, Y={fy}); se fails on (X={x}, Y={y}, e={e})"
            ),
        }
    }
}

/// Checks the two covector axioms on a nonempty uniform-length set.
///
/// The face-symmetry witness is the first failing pair scanning both
/// covectors in canonical order. The strong-elimination witness is chosen as
/// the failing triple `(X, Y, e)` whose requirement on the missing covector
/// `Z` constrains the fewest coordinates outside the separating set (the
/// most unconditional violation), tie-broken by `(e, X, Y)` in canonical
/// order.
pub fn check_com(covectors: &[SignVector]) -> Result<AxiomReport> {
    if covectors.is_empty() {
        return Err(Error::EmptyCovectorSet);
    }
    let n = covectors[0].len();
    for c in covectors {
        if c.len() != n {
            return Err(Error::LengthMismatch { left: n, right: c.len() });
        }
    }
    let mut sorted = covectors.to_vec();
    sorted.sort();
    sorted.dedup();
    Ok(check_com_sorted(&sorted))
}

fn check_com_sorted(covectors: &[SignVector]) -> AxiomReport {
    let n = covectors[0].len();
    let set: HashSet<&SignVector> = covectors.iter().collect();

    let mut fs_witness = None;
    'fs: for x in covectors {
        for y in covectors {
            let composed = x.compose(&y.negate()).expect("uniform length");
            if !set.contains(&composed) {
                fs_witness = Some((x.clone(), y.clone()));
                break 'fs;
            }
        }
    }

    // Failing strong-elimination triple minimizing (#constrained
    // coordinates, e, X, Y).
    let mut se_witness: Option<(usize, usize, SignVector, SignVector)> = None;
    for x in covectors {
        for y in covectors {
            let sep = x.separator(y).expect("uniform length");
            if sep.is_empty() {
                continue;
            }
            let composed = x.compose(y).expect("uniform length");
            let constrained = n - sep.len();
            for e in sep.iter() {
                let eliminated = covectors.iter().any(|z| {
                    z.sign(e) == Sign::Zero
                        && (0..n).all(|f| sep.contains(f) || z.sign(f) == composed.sign(f))
                });
                if eliminated {
                    continue;
                }
                let key = (constrained, e, x.clone(), y.clone());
                if se_witness.as_ref().is_none_or(|best| key < *best) {
                    se_witness = Some(key);
                }
            }
        }
    }

    AxiomReport {
        fs_witness,
        se_witness: se_witness.map(|(_, e, x, y)| (x, y, e)),
    }
}
