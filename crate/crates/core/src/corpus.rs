//! Seeded random arrangement corpus used by the verification suites and
//! the CLI. The seed fully determines the corpus.

use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::geom::{AffineForm, Arrangement, Constraint, Rat};

/// Corpus shape knobs. `dim` and `hyperplanes` are per-instance maxima;
/// each instance draws its own size within them.
#[derive(Debug, Clone, Copy)]
pub struct CorpusParams {
    pub seed: u64,
    pub count: usize,
    pub dim: usize,
    pub hyperplanes: usize,
    pub coeff_bound: i64,
}

impl Default for CorpusParams {
    fn default() -> CorpusParams {
        CorpusParams { seed: 42, count: 25, dim: 3, hyperplanes: 5, coeff_bound: 3 }
    }
}

fn random_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let numer = rng.gen_range(-bound..=bound);
    let denom = rng.gen_range(1..=bound);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn random_form(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> AffineForm {
    AffineForm::new(
        (0..dim).map(|_| random_rat(rng, bound)).collect(),
        random_rat(rng, bound),
    )
}

fn random_hyperplane(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> AffineForm {
    loop {
        let form = random_form(rng, dim, bound);
        if !form.has_zero_normal() {
            return form;
        }
    }
}

/// Generates the corpus: rational coefficients with numerators in
/// `[-B, B]` and denominators in `[1, B]`, a region of zero to three random
/// strict halfspaces redrawn until feasible, and each hyperplane after the
/// first duplicated from an earlier one with probability 0.1 to keep
/// multiset handling honest.
pub fn generate(params: &CorpusParams) -> Result<Vec<Arrangement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut out = Vec::with_capacity(params.count);
    for _ in 0..params.count {
        let dim = rng.gen_range(1..=params.dim.max(1));
        let m = rng.gen_range(1..=params.hyperplanes.max(1));
        let mut hyperplanes: Vec<AffineForm> = Vec::with_capacity(m);
        for i in 0..m {
            if i > 0 && rng.gen_bool(0.1) {
                let source = rng.gen_range(0..i);
                hyperplanes.push(hyperplanes[source].clone());
            } else {
                hyperplanes.push(random_hyperplane(&mut rng, dim, params.coeff_bound));
            }
        }
        let arrangement = loop {
            let k = rng.gen_range(0..=3usize);
            let constraints: Vec<Constraint> = (0..k)
                .map(|_| Constraint::strict(random_hyperplane(&mut rng, dim, params.coeff_bound)))
                .collect();
            match Arrangement::new(dim, hyperplanes.clone(), constraints) {
                Ok(a) => break a,
                Err(_) => continue, // region came out empty; redraw it
            }
        };
        out.push(arrangement);
    }
    Ok(out)
}
