//! Conditional oriented matroids of affine hyperplane arrangements
//! restricted to an open convex polyhedral region, their Salvetti
//! complexes, and machine verification of the combinatorics that drive
//! their topology: covector axioms, acyclicity of order complexes, the
//! nerve hypothesis for the canonical cover, and homology agreement with
//! classical intersection-poset oracles.

pub mod com;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod geom;
pub mod homology;
pub mod oracle;
pub mod poset;
pub mod salvetti;
pub mod sign;
pub mod zcover;

pub use com::{check_com, AxiomReport, Com, Semisimplification};
pub use complex::SimplicialComplex;
pub use corpus::CorpusParams;
pub use error::{Error, Result};
pub use geom::{
    feasible, parse_rat, rat, rat_int, rat_to_string, region_subset, AffineForm, Arrangement,
    Constraint, FeasibilityResult, Point, Rat, Region, Rel, WitnessTable,
};
pub use homology::{betti, boundary_matrices, is_reduced_acyclic, smith_normal_form, ChainComplex, HomologyProfile, IntMatrix, SmithNormalForm};
pub use oracle::{intersection_poset, Flat, IntersectionPoset};
pub use poset::{verify_order_iso, FinitePoset};
pub use salvetti::{sal_leq, salvetti_complex, salvetti_poset, SalElement};
pub use sign::{IndexSet, Sign, SignVector};
pub use zcover::{
    cover_conditions, fiber, in_cover, local_region, sal_at, verify_nerve, z_equiv,
    z_equiv_by_region, CoverConditions, NerveFailure, NerveReport, ZPoint,
};
