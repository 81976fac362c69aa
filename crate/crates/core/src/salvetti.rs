//! The Salvetti poset and complex of a conditional oriented matroid.

use std::fmt;

use crate::com::Com;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::sign::SignVector;

/// An element of the Salvetti poset: a covector together with a tope above
/// it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SalElement {
    pub covector: SignVector,
    pub tope: SignVector,
}

impl fmt::Display for SalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.covector, self.tope)
    }
}

/// The order on Salvetti elements:
/// `(X,T) <= (X',T')  iff  X <= X'  and  X' o T = T'`.
pub fn sal_leq(a: &SalElement, b: &SalElement) -> bool {
    a.covector.leq(&b.covector).expect("uniform length")
        && b.covector.compose(&a.tope).expect("uniform length") == b.tope
}

/// Builds the Salvetti poset: all pairs `(X, T)` with `X` a covector lying
/// below the tope `T`, under [`sal_leq`]. The covector axioms are
/// re-validated first and the order axioms are re-validated by the poset
/// constructor.
pub fn salvetti_poset(com: &Com) -> Result<FinitePoset<SalElement>> {
    let report = com.check();
    if !report.ok() {
        return Err(Error::AxiomsFail(report.describe()));
    }
    let topes = com.topes();
    let mut elements = Vec::new();
    for covector in com.covectors() {
        for tope in &topes {
            if covector.leq(tope).expect("uniform length") {
                elements.push(SalElement { covector: covector.clone(), tope: tope.clone() });
            }
        }
    }
    elements.sort();
    FinitePoset::new(elements, |a, b| sal_leq(a, b))
}

/// The Salvetti complex: the order complex of the Salvetti poset.
pub fn salvetti_complex(com: &Com) -> Result<SimplicialComplex> {
    Ok(salvetti_poset(com)?.order_complex())
}
