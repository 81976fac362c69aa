//! Exact rational geometry: affine forms, open polyhedral regions,
//! Fourier-Motzkin feasibility with interior witnesses, cooriented
//! arrangements, and covector enumeration.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::com::Com;
use crate::error::{Error, Result};
use crate::sign::{Sign, SignVector};

pub type Rat = BigRational;
pub type Point = Vec<Rat>;

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    BigRational::from_integer(BigInt::from(num))
}

/// Parses an integer or a `p/q` string into a canonical rational.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(text.to_string());
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((num, den)) => {
            let num = num.trim().parse::<BigInt>().map_err(|_| bad())?;
            let den = den.trim().parse::<BigInt>().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
    }
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The affine function `v -> a . v + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineForm {
    pub a: Vec<Rat>,
    pub b: Rat,
}

impl AffineForm {
    pub fn new(a: Vec<Rat>, b: Rat) -> AffineForm {
        AffineForm { a, b }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn has_zero_normal(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    pub fn evaluate(&self, v: &[Rat]) -> Rat {
        debug_assert_eq!(v.len(), self.a.len());
        let mut acc = self.b.clone();
        for (c, x) in self.a.iter().zip(v) {
            acc += c * x;
        }
        acc
    }

    pub fn negated(&self) -> AffineForm {
        AffineForm { a: self.a.iter().map(|c| -c).collect(), b: -self.b.clone() }
    }

    fn scaled(&self, s: &Rat) -> AffineForm {
        AffineForm { a: self.a.iter().map(|c| c * s).collect(), b: &self.b * s }
    }

    fn plus(&self, other: &AffineForm) -> AffineForm {
        AffineForm {
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
            b: &self.b + &other.b,
        }
    }

    /// Primitive integer rescaling `(a, b) * s` with `s > 0` chosen so all
    /// entries become coprime integers. Positive scaling preserves both
    /// relations, so this keys syntactic constraint identity.
    fn primitive_key(&self) -> (Vec<BigInt>, BigInt) {
        let mut denom_lcm = BigInt::one();
        for c in self.a.iter().chain(std::iter::once(&self.b)) {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .a
            .iter()
            .chain(std::iter::once(&self.b))
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for i in &ints {
            gcd = gcd.gcd(i);
        }
        if gcd.is_zero() {
            gcd = BigInt::one();
        }
        let mut ints: Vec<BigInt> = ints.into_iter().map(|i| i / &gcd).collect();
        let b = ints.pop().unwrap();
        (ints, b)
    }
}

/// Relation of a region constraint: `f > 0` or `f = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rel {
    StrictPos,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub form: AffineForm,
    pub rel: Rel,
}

impl Constraint {
    pub fn strict(form: AffineForm) -> Constraint {
        Constraint { form, rel: Rel::StrictPos }
    }

    pub fn equality(form: AffineForm) -> Constraint {
        Constraint { form, rel: Rel::Zero }
    }

    pub fn holds_at(&self, v: &[Rat]) -> bool {
        let value = self.form.evaluate(v);
        match self.rel {
            Rel::StrictPos => value.is_positive(),
            Rel::Zero => value.is_zero(),
        }
    }

    /// Canonical syntactic key: primitive integer form, with equalities
    /// additionally sign-normalized (first nonzero entry positive).
    fn canonical_key(&self) -> (Rel, Vec<BigInt>, BigInt) {
        let (mut a, mut b) = self.form.primitive_key();
        if self.rel == Rel::Zero {
            let negative_lead = a
                .iter()
                .chain(std::iter::once(&b))
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.is_negative());
            if negative_lead {
                for c in &mut a {
                    *c = -std::mem::take(c);
                }
                b = -b;
            }
        }
        (self.rel, a, b)
    }
}

/// An intersection of open halfspaces and hyperplanes in a fixed ambient
/// dimension; convex by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl Region {
    /// The whole ambient space.
    pub fn full(dim: usize) -> Region {
        Region { dim, constraints: Vec::new() }
    }

    pub fn new(dim: usize, constraints: Vec<Constraint>) -> Result<Region> {
        for c in &constraints {
            if c.form.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: c.form.dim() });
            }
        }
        Ok(Region { dim, constraints })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(&mut self, c: Constraint) {
        debug_assert_eq!(c.form.dim(), self.dim);
        self.constraints.push(c);
    }

    pub fn with(&self, c: Constraint) -> Region {
        let mut r = self.clone();
        r.push(c);
        r
    }

    pub fn contains_point(&self, v: &[Rat]) -> bool {
        v.len() == self.dim && self.constraints.iter().all(|c| c.holds_at(v))
    }
}

/// Outcome of a feasibility query. The witness, present exactly when the
/// region is nonempty, lies in the relative interior of the solution set
/// and satisfies every constraint exactly.
#[derive(Debug, Clone)]
pub struct FeasibilityResult {
    pub feasible: bool,
    pub witness: Option<Point>,
}

enum Step {
    Subst { var: usize, expr: AffineForm },
    Interval { var: usize, lowers: Vec<AffineForm>, uppers: Vec<AffineForm> },
}

/// Decides nonemptiness of a region by exact Fourier-Motzkin elimination
/// over the mixed strict/equality constraints, eliminating variables in
/// ascending index order. On success the witness is rebuilt by
/// back-substitution, taking the midpoint of each variable's allowed open
/// interval (bound plus or minus one when half-unbounded, zero when free).
pub fn feasible(region: &Region) -> Result<FeasibilityResult> {
    for c in &region.constraints {
        if c.form.dim() != region.dim {
            return Err(Error::DimensionMismatch { expected: region.dim, found: c.form.dim() });
        }
    }
    let infeasible = FeasibilityResult { feasible: false, witness: None };

    type Seen = std::collections::BTreeSet<(Rel, Vec<BigInt>, BigInt)>;
    // Constant constraints resolve immediately; duplicates are dropped.
    // Returns false on a contradictory constant.
    fn retain(c: Constraint, active: &mut Vec<Constraint>, seen: &mut Seen) -> bool {
        if c.form.has_zero_normal() {
            return match c.rel {
                Rel::StrictPos => c.form.b.is_positive(),
                Rel::Zero => c.form.b.is_zero(),
            };
        }
        if seen.insert(c.canonical_key()) {
            active.push(c);
        }
        true
    }

    let mut active: Vec<Constraint> = Vec::new();
    let mut seen = Seen::new();
    for c in &region.constraints {
        if !retain(c.clone(), &mut active, &mut seen) {
            return Ok(infeasible);
        }
    }

    let mut steps: Vec<Step> = Vec::new();
    for var in 0..region.dim {
        let eq_idx = active
            .iter()
            .position(|c| c.rel == Rel::Zero && !c.form.a[var].is_zero());
        let previous = std::mem::take(&mut active);
        seen.clear();
        if let Some(idx) = eq_idx {
            // Solve the equality for this variable and substitute.
            let eq = previous[idx].clone();
            let coeff = eq.form.a[var].clone();
            let mut expr = eq.form.scaled(&(-coeff.recip()));
            expr.a[var] = Rat::zero();
            for (i, c) in previous.into_iter().enumerate() {
                if i == idx {
                    continue;
                }
                let k = c.form.a[var].clone();
                let mut form = if k.is_zero() { c.form } else { c.form.plus(&expr.scaled(&k)) };
                form.a[var] = Rat::zero();
                if !retain(Constraint { form, rel: c.rel }, &mut active, &mut seen) {
                    return Ok(infeasible);
                }
            }
            steps.push(Step::Subst { var, expr });
        } else {
            let mut lowers: Vec<AffineForm> = Vec::new();
            let mut uppers: Vec<AffineForm> = Vec::new();
            let mut lower_cs: Vec<Constraint> = Vec::new();
            let mut upper_cs: Vec<Constraint> = Vec::new();
            for c in previous {
                let k = &c.form.a[var];
                if k.is_zero() {
                    if !retain(c, &mut active, &mut seen) {
                        return Ok(infeasible);
                    }
                    continue;
                }
                // c: k*x + rest > 0, so x > -rest/k (k > 0) or x < -rest/k.
                let mut bound = c.form.scaled(&(-k.clone().recip()));
                bound.a[var] = Rat::zero();
                if k.is_positive() {
                    lowers.push(bound);
                    lower_cs.push(c);
                } else {
                    uppers.push(bound);
                    upper_cs.push(c);
                }
            }
            for lo in &lower_cs {
                for up in &upper_cs {
                    let scale_lo = -up.form.a[var].clone();
                    let scale_up = lo.form.a[var].clone();
                    let mut form = lo.form.scaled(&scale_lo).plus(&up.form.scaled(&scale_up));
                    form.a[var] = Rat::zero();
                    if !retain(Constraint::strict(form), &mut active, &mut seen) {
                        return Ok(infeasible);
                    }
                }
            }
            steps.push(Step::Interval { var, lowers, uppers });
        }
    }

    // All variables eliminated; anything left is a constant constraint and
    // was already resolved by `retain`.
    debug_assert!(active.is_empty());

    let mut witness = vec![Rat::zero(); region.dim];
    for step in steps.iter().rev() {
        match step {
            Step::Subst { var, expr } => {
                witness[*var] = expr.evaluate(&witness);
            }
            Step::Interval { var, lowers, uppers } => {
                let lower = lowers.iter().map(|f| f.evaluate(&witness)).max();
                let upper = uppers.iter().map(|f| f.evaluate(&witness)).min();
                witness[*var] = match (lower, upper) {
                    (Some(lo), Some(up)) => (lo + up) / rat_int(2),
                    (Some(lo), None) => lo + Rat::one(),
                    (None, Some(up)) => up - Rat::one(),
                    (None, None) => Rat::zero(),
                };
            }
        }
    }
    debug_assert!(region.contains_point(&witness), "witness must satisfy the region exactly");
    Ok(FeasibilityResult { feasible: true, witness: Some(witness) })
}

/// Whether `r1` is contained in `r2`, decided constraint by constraint:
/// `r1` lies in a constraint's solution set iff `r1` intersected with the
/// constraint's negation (split into strict/equality branches) is empty.
pub fn region_subset(r1: &Region, r2: &Region) -> Result<bool> {
    if r1.dim != r2.dim {
        return Err(Error::DimensionMismatch { expected: r1.dim, found: r2.dim });
    }
    let keys1: Vec<(Rel, Vec<BigInt>, BigInt)> =
        r1.constraints.iter().map(Constraint::canonical_key).collect();
    let mut r1_nonempty: Option<bool> = None;
    let mut r1_is_nonempty = |r1: &Region| -> Result<bool> {
        if r1_nonempty.is_none() {
            r1_nonempty = Some(feasible(r1)?.feasible);
        }
        Ok(r1_nonempty.unwrap())
    };
    for c in &r2.constraints {
        if keys1.contains(&c.canonical_key()) {
            continue; // syntactically present, hence implied
        }
        let branches = match c.rel {
            Rel::StrictPos => vec![
                Constraint::strict(c.form.negated()),
                Constraint::equality(c.form.clone()),
            ],
            Rel::Zero => vec![
                Constraint::strict(c.form.clone()),
                Constraint::strict(c.form.negated()),
            ],
        };
        for branch in branches {
            if keys1.contains(&branch.canonical_key()) {
                // A constraint of r1 already implies this branch of the
                // negation, so r1 meets the constraint set iff r1 is empty.
                if r1_is_nonempty(r1)? {
                    return Ok(false);
                }
                return Ok(true);
            }
            if feasible(&r1.with(branch))?.feasible {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A finite multiset of cooriented affine hyperplanes together with the
/// nonempty open polyhedral region the covectors are conditioned on.
#[derive(Debug, Clone)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<AffineForm>,
    region: Region,
}

impl Arrangement {
    /// Validates dimensions, rejects degenerate hyperplanes, drops
    /// tautological region constraints, and confirms the region is a
    /// nonempty open set.
    pub fn new(
        dim: usize,
        hyperplanes: Vec<AffineForm>,
        region_constraints: Vec<Constraint>,
    ) -> Result<Arrangement> {
        for (index, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
            }
            if h.has_zero_normal() {
                return Err(Error::ZeroNormal { index });
            }
        }
        let mut kept = Vec::new();
        for (index, c) in region_constraints.into_iter().enumerate() {
            if c.form.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: c.form.dim() });
            }
            if c.rel != Rel::StrictPos {
                return Err(Error::NonOpenRegion { index });
            }
            if c.form.has_zero_normal() {
                if c.form.b.is_positive() {
                    continue; // tautology
                }
                return Err(Error::UnsatisfiableConstraint {
                    index,
                    constant: rat_to_string(&c.form.b),
                });
            }
            kept.push(c);
        }
        let region = Region::new(dim, kept)?;
        if !feasible(&region)?.feasible {
            return Err(Error::EmptyRegion);
        }
        Ok(Arrangement { dim, hyperplanes, region })
    }

    /// Arrangement conditioned on the whole space.
    pub fn full_space(dim: usize, hyperplanes: Vec<AffineForm>) -> Result<Arrangement> {
        Arrangement::new(dim, hyperplanes, Vec::new())
    }

    /// Same hyperplanes, region replaced by the whole space.
    pub fn forget_region(&self) -> Arrangement {
        Arrangement {
            dim: self.dim,
            hyperplanes: self.hyperplanes.clone(),
            region: Region::full(self.dim),
        }
    }

    /// Same hyperplanes conditioned on a different open region.
    pub fn with_region(&self, region: Region) -> Result<Arrangement> {
        Arrangement::new(self.dim, self.hyperplanes.clone(), region.constraints.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[AffineForm] {
        &self.hyperplanes
    }

    pub fn ground_size(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn is_full_space(&self) -> bool {
        self.region.constraints.is_empty()
    }

    /// Sign vector of a point against all hyperplanes.
    pub fn sign_at(&self, v: &[Rat]) -> SignVector {
        let signs: Vec<Sign> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let value = h.evaluate(v);
                if value.is_positive() {
                    Sign::Plus
                } else if value.is_negative() {
                    Sign::Minus
                } else {
                    Sign::Zero
                }
            })
            .collect();
        SignVector::from_signs(&signs)
    }

    fn sign_constraint(&self, e: usize, s: Sign) -> Constraint {
        match s {
            Sign::Plus => Constraint::strict(self.hyperplanes[e].clone()),
            Sign::Minus => Constraint::strict(self.hyperplanes[e].negated()),
            Sign::Zero => Constraint::equality(self.hyperplanes[e].clone()),
        }
    }

    /// The region `F_X` intersected with the conditioning region.
    pub fn face_region(&self, x: &SignVector) -> Region {
        let mut r = self.region.clone();
        for e in 0..self.ground_size() {
            r.push(self.sign_constraint(e, x.sign(e)));
        }
        r
    }

    /// The cone obtained from the region by fixing, for every hyperplane on
    /// which `x` vanishes, the strict side named by the tope `t`.
    pub fn subregion(&self, x: &SignVector, t: &SignVector) -> Result<Region> {
        if x.len() != self.ground_size() || t.len() != self.ground_size() {
            return Err(Error::LengthMismatch {
                left: x.len().max(t.len()),
                right: self.ground_size(),
            });
        }
        let mut r = self.region.clone();
        for e in x.zeros().iter() {
            match t.sign(e) {
                Sign::Zero => return Err(Error::UndefinedComponent { index: e }),
                s => r.push(self.sign_constraint(e, s)),
            }
        }
        Ok(r)
    }

    /// All sign vectors whose face meets the region, found by depth-first
    /// sign assignment with infeasible prefixes pruned, each paired with an
    /// interior witness point of its face.
    pub fn enumerate_covectors(&self) -> Result<(Com, WitnessTable)> {
        let mut found: BTreeMap<SignVector, Point> = BTreeMap::new();
        let mut signs = vec![Sign::Zero; self.ground_size()];
        let region = self.region.clone();
        self.dfs(0, &region, &mut signs, &mut found)?;
        let covectors: Vec<SignVector> = found.keys().cloned().collect();
        let com = Com::new(self.ground_size(), covectors)
            .expect("the region is nonempty, so at least one face meets it");
        Ok((com, WitnessTable { map: found }))
    }

    fn dfs(
        &self,
        depth: usize,
        region: &Region,
        signs: &mut [Sign],
        found: &mut BTreeMap<SignVector, Point>,
    ) -> Result<()> {
        let result = feasible(region)?;
        if !result.feasible {
            return Ok(());
        }
        if depth == self.ground_size() {
            let witness = result.witness.expect("feasible result carries a witness");
            found.insert(SignVector::from_signs(signs), witness);
            return Ok(());
        }
        for s in [Sign::Minus, Sign::Zero, Sign::Plus] {
            signs[depth] = s;
            let extended = region.with(self.sign_constraint(depth, s));
            self.dfs(depth + 1, &extended, signs, found)?;
        }
        Ok(())
    }

    /// Reference scan over all `3^|E|` sign vectors, one feasibility query
    /// each, with no pruning. Used by the verification suites as the slow
    /// oracle for [`Arrangement::enumerate_covectors`].
    pub fn enumerate_covectors_exhaustive(&self) -> Result<Com> {
        let m = self.ground_size();
        let mut covectors = Vec::new();
        let mut signs = vec![Sign::Zero; m];
        let total = 3usize.pow(m as u32);
        for code in 0..total {
            let mut rest = code;
            for s in signs.iter_mut() {
                *s = [Sign::Minus, Sign::Zero, Sign::Plus][rest % 3];
                rest /= 3;
            }
            if feasible(&self.face_region(&SignVector::from_signs(&signs)))?.feasible {
                covectors.push(SignVector::from_signs(&signs));
            }
        }
        Com::new(m, covectors)
    }
}

/// Interior witness points keyed by covector, in canonical order.
#[derive(Debug, Clone)]
pub struct WitnessTable {
    map: BTreeMap<SignVector, Point>,
}

impl WitnessTable {
    pub fn get(&self, x: &SignVector) -> Option<&Point> {
        self.map.get(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignVector, &Point)> {
        self.map.iter()
    }
}

// ---------------------------------------------------------------------------
// File format: { "dim": d, "hyperplanes": [{"a": [...], "b": ...}, ...],
// "region": [{"a": [...], "b": ..., "rel": ">" | "="}, ...] }
// Rationals are integers or "p/q" strings; "region" may be omitted for K = V.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RatRepr {
    Int(i64),
    Str(String),
}

impl RatRepr {
    fn parse(&self) -> Result<Rat> {
        match self {
            RatRepr::Int(i) => Ok(rat_int(*i)),
            RatRepr::Str(s) => parse_rat(s),
        }
    }

    fn of(r: &Rat) -> RatRepr {
        if r.denom().is_one() {
            if let Ok(i) = i64::try_from(r.numer().clone()) {
                return RatRepr::Int(i);
            }
        }
        RatRepr::Str(rat_to_string(r))
    }
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    a: Vec<RatRepr>,
    b: RatRepr,
}

#[derive(Serialize, Deserialize)]
struct ConstraintRepr {
    a: Vec<RatRepr>,
    b: RatRepr,
    rel: String,
}

#[derive(Serialize, Deserialize)]
struct ArrangementRepr {
    dim: usize,
    hyperplanes: Vec<FormRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    region: Option<Vec<ConstraintRepr>>,
}

fn parse_form(repr: &FormRepr) -> Result<AffineForm> {
    let a = repr.a.iter().map(RatRepr::parse).collect::<Result<Vec<_>>>()?;
    Ok(AffineForm::new(a, repr.b.parse()?))
}

impl Arrangement {
    pub fn from_json(text: &str) -> Result<Arrangement> {
        let repr: ArrangementRepr = serde_json::from_str(text)
            .map_err(|e| Error::InvalidRational(format!("cannot parse arrangement file: {e}")))?;
        let hyperplanes =
            repr.hyperplanes.iter().map(parse_form).collect::<Result<Vec<_>>>()?;
        let mut constraints = Vec::new();
        for (index, c) in repr.region.iter().flatten().enumerate() {
            let a = c.a.iter().map(RatRepr::parse).collect::<Result<Vec<_>>>()?;
            let form = AffineForm::new(a, c.b.parse()?);
            let rel = match c.rel.as_str() {
                ">" => Rel::StrictPos,
                "=" => Rel::Zero,
                other => {
                    return Err(Error::InvalidRational(format!(
                        "region constraint {index} has unknown relation {other:?}"
                    )))
                }
            };
            constraints.push(Constraint { form, rel });
        }
        Arrangement::new(repr.dim, hyperplanes, constraints)
    }

    pub fn to_json(&self) -> String {
        let repr = ArrangementRepr {
            dim: self.dim,
            hyperplanes: self
                .hyperplanes
                .iter()
                .map(|h| FormRepr {
                    a: h.a.iter().map(RatRepr::of).collect(),
                    b: RatRepr::of(&h.b),
                })
                .collect(),
            region: if self.region.constraints.is_empty() {
                None
            } else {
                Some(
                    self.region
                        .constraints
                        .iter()
                        .map(|c| ConstraintRepr {
                            a: c.form.a.iter().map(RatRepr::of).collect(),
                            b: RatRepr::of(&c.form.b),
                            rel: match c.rel {
                                Rel::StrictPos => ">".to_string(),
                                Rel::Zero => "=".to_string(),
                            },
                        })
                        .collect(),
                )
            },
        };
        serde_json::to_string_pretty(&repr).expect("arrangement serializes")
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "arrangement: dim {}, {} hyperplanes, {} region constraints",
            self.dim,
            self.hyperplanes.len(),
            self.region.constraints.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::sv;

    /// Two points at -1 and +1 on a line, positive side to the right.
    pub fn two_points() -> Arrangement {
        Arrangement::full_space(
            1,
            vec![
                AffineForm::new(vec![rat_int(1)], rat_int(1)),
                AffineForm::new(vec![rat_int(1)], rat_int(-1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rat("3").unwrap(), rat_int(3));
        assert_eq!(parse_rat("-4/6").unwrap(), rat(-2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
        assert_eq!(rat_to_string(&rat(-2, 3)), "-2/3");
        assert_eq!(rat_to_string(&rat(4, 2)), "2");
    }

    #[test]
    fn feasible_contradictory_rays() {
        let r = Region::new(
            1,
            vec![
                Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0))),
                Constraint::strict(AffineForm::new(vec![rat_int(-1)], rat_int(-1))),
            ],
        )
        .unwrap();
        assert!(!feasible(&r).unwrap().feasible);
    }

    #[test]
    fn feasible_forced_point() {
        let r = Region::new(
            1,
            vec![Constraint::equality(AffineForm::new(vec![rat_int(1)], rat_int(1)))],
        )
        .unwrap();
        let result = feasible(&r).unwrap();
        assert_eq!(result.witness, Some(vec![rat_int(-1)]));
    }

    #[test]
    fn feasible_midpoint_witness() {
        let r = Region::new(
            1,
            vec![
                Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(1))),
                Constraint::strict(AffineForm::new(vec![rat_int(-1)], rat_int(1))),
            ],
        )
        .unwrap();
        let result = feasible(&r).unwrap();
        assert_eq!(result.witness, Some(vec![rat_int(0)]));
    }

    #[test]
    fn feasible_mixed_equality_and_strict_in_2d() {
        // x + y = 1, x > 0, y > 0: open segment.
        let r = Region::new(
            2,
            vec![
                Constraint::equality(AffineForm::new(vec![rat_int(1), rat_int(1)], rat_int(-1))),
                Constraint::strict(AffineForm::new(vec![rat_int(1), rat_int(0)], rat_int(0))),
                Constraint::strict(AffineForm::new(vec![rat_int(0), rat_int(1)], rat_int(0))),
            ],
        )
        .unwrap();
        let result = feasible(&r).unwrap();
        let w = result.witness.unwrap();
        assert!(r.contains_point(&w));
        assert_eq!(&w[0] + &w[1], rat_int(1));
    }

    #[test]
    fn region_subset_examples() {
        let v_pos = Region::new(
            1,
            vec![Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0)))],
        )
        .unwrap();
        let v_above_minus_one = Region::new(
            1,
            vec![Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(1)))],
        )
        .unwrap();
        assert!(region_subset(&v_pos, &v_above_minus_one).unwrap());
        assert!(!region_subset(&v_above_minus_one, &v_pos).unwrap());
        assert!(region_subset(&v_pos, &Region::full(1)).unwrap());
    }

    #[test]
    fn empty_region_is_subset_of_anything() {
        let empty = Region::new(
            1,
            vec![
                Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0))),
                Constraint::strict(AffineForm::new(vec![rat_int(-1)], rat_int(0))),
            ],
        )
        .unwrap();
        let v_pos = Region::new(
            1,
            vec![Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0)))],
        )
        .unwrap();
        assert!(region_subset(&empty, &v_pos).unwrap());
    }

    #[test]
    fn two_point_line_covectors() {
        let (com, witnesses) = two_points().enumerate_covectors().unwrap();
        let listed: Vec<String> = com.covectors().iter().map(|c| c.to_string()).collect();
        assert_eq!(listed, vec!["--", "0-", "+-", "+0", "++"]);
        for (x, w) in witnesses.iter() {
            assert_eq!(&two_points().sign_at(w), x);
        }
    }

    #[test]
    fn two_point_line_restricted_covectors() {
        let restricted = two_points()
            .with_region(
                Region::new(
                    1,
                    vec![Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0)))],
                )
                .unwrap(),
            )
            .unwrap();
        let (com, _) = restricted.enumerate_covectors().unwrap();
        let listed: Vec<String> = com.covectors().iter().map(|c| c.to_string()).collect();
        assert_eq!(listed, vec!["+-", "+0", "++"]);
    }

    #[test]
    fn empty_arrangement_has_one_covector() {
        let a = Arrangement::full_space(1, vec![]).unwrap();
        let (com, _) = a.enumerate_covectors().unwrap();
        assert_eq!(com.len(), 1);
        assert_eq!(com.ground_size(), 0);
    }

    #[test]
    fn infeasible_region_is_rejected() {
        let err = Arrangement::new(
            1,
            vec![AffineForm::new(vec![rat_int(1)], rat_int(0))],
            vec![
                Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0))),
                Constraint::strict(AffineForm::new(vec![rat_int(-1)], rat_int(-1))),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::EmptyRegion));
    }

    #[test]
    fn zero_normal_hyperplane_is_rejected() {
        let err = Arrangement::full_space(
            1,
            vec![AffineForm::new(vec![rat_int(0)], rat_int(1))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ZeroNormal { index: 0 }));
    }

    #[test]
    fn tautological_region_constraint_is_dropped() {
        let a = Arrangement::new(
            1,
            vec![AffineForm::new(vec![rat_int(1)], rat_int(0))],
            vec![Constraint::strict(AffineForm::new(vec![rat_int(0)], rat_int(2)))],
        )
        .unwrap();
        assert!(a.is_full_space());
        let err = Arrangement::new(
            1,
            vec![AffineForm::new(vec![rat_int(1)], rat_int(0))],
            vec![Constraint::strict(AffineForm::new(vec![rat_int(0)], rat_int(-2)))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnsatisfiableConstraint { index: 0, .. }));
    }

    #[test]
    fn subregion_of_two_point_line() {
        let a = two_points();
        let k_hb = a.subregion(&sv("0-"), &sv("+-")).unwrap();
        // {v + 1 > 0}
        assert!(k_hb.contains_point(&[rat_int(0)]));
        assert!(k_hb.contains_point(&[rat_int(5)]));
        assert!(!k_hb.contains_point(&[rat_int(-1)]));
        assert!(!k_hb.contains_point(&[rat_int(-2)]));

        let k_ha = a.subregion(&sv("0-"), &sv("--")).unwrap();
        assert!(k_ha.contains_point(&[rat_int(-2)]));
        assert!(!k_ha.contains_point(&[rat_int(0)]));

        // A tope has no zeros, so the cone is the whole region.
        let k_tope = a.subregion(&sv("+-"), &sv("+-")).unwrap();
        assert_eq!(k_tope.constraints().len(), 0);

        let err = a.subregion(&sv("0-"), &sv("0-")).unwrap_err();
        assert!(matches!(err, Error::UndefinedComponent { index: 0 }));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "dim": 1,
            "hyperplanes": [ {"a": [1], "b": 1}, {"a": ["1"], "b": "-1"} ],
            "region": [ {"a": ["1/1"], "b": 0, "rel": ">"} ]
        }"#;
        let a = Arrangement::from_json(text).unwrap();
        assert_eq!(a.ground_size(), 2);
        assert_eq!(a.region().constraints().len(), 1);
        let round = Arrangement::from_json(&a.to_json()).unwrap();
        assert_eq!(round.hyperplanes(), a.hyperplanes());
    }

    #[test]
    fn json_rejects_floats_and_bad_rel() {
        assert!(Arrangement::from_json(
            r#"{"dim":1,"hyperplanes":[{"a":[1.5],"b":0}]}"#
        )
        .is_err());
        assert!(Arrangement::from_json(
            r#"{"dim":1,"hyperplanes":[{"a":[1],"b":0}],"region":[{"a":[1],"b":0,"rel":">="}]}"#
        )
        .is_err());
    }
}
