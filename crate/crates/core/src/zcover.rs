//! Combinatorial model of the glued space over an arrangement: z-points,
//! fibers, the canonical cover indexed by the Salvetti poset, and the
//! machine checks behind the nerve argument.
//!
//! The glued space is never materialized. Cover membership of a z-point in
//! a Salvetti element admits four formulations (pure sign arithmetic, a
//! region containment, entrywise side agreements, and a rational-point
//! membership test); all four are implemented and must agree. Membership
//! depends on a z-point only through its covector and tope class, so one
//! representative per Salvetti element exhausts every distinct local poset,
//! and that reduction is itself asserted against a second witness point
//! whenever the face is positive-dimensional.

use std::collections::BTreeSet;
use std::fmt;

use num::Zero;

use crate::com::{check_com, Com};
use crate::error::{Error, Result};
use crate::geom::{
    feasible, rat_int, region_subset, AffineForm, Arrangement, Constraint, Point, Rat, Region,
};
use crate::poset::{verify_order_iso, FinitePoset};
use crate::salvetti::{salvetti_poset, SalElement};
use crate::sign::SignVector;

/// A point of the glued space: a rational base point in the region, the
/// covector it realizes, and a tope. The tope is stored normalized by
/// composition with the covector, so the covector always lies below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoint {
    covector: SignVector,
    tope: SignVector,
    point: Point,
}

impl ZPoint {
    pub fn new(arrangement: &Arrangement, point: Point, tope: SignVector) -> Result<ZPoint> {
        if tope.len() != arrangement.ground_size() {
            return Err(Error::LengthMismatch {
                left: tope.len(),
                right: arrangement.ground_size(),
            });
        }
        if !arrangement.region().contains_point(&point) {
            return Err(Error::WitnessMismatch);
        }
        let covector = arrangement.sign_at(&point);
        let tope = covector.compose(&tope)?;
        Ok(ZPoint { covector, tope, point })
    }

    pub fn covector(&self) -> &SignVector {
        &self.covector
    }

    pub fn tope(&self) -> &SignVector {
        &self.tope
    }

    pub fn point(&self) -> &Point {
        &self.point
    }
}

impl fmt::Display for ZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z=({},{})", self.covector, self.tope)
    }
}

/// Whether two z-points over the same base point are glued together: no
/// hyperplane through the base point separates their topes.
pub fn z_equiv(z1: &ZPoint, z2: &ZPoint) -> Result<bool> {
    if z1.point != z2.point {
        return Err(Error::DifferentBasePoints);
    }
    let sep = z1.tope.separator(&z2.tope)?;
    Ok(sep.is_disjoint(&z1.covector.zeros()))
}

/// The same question decided geometrically: the two local cones coincide as
/// regions. Cross-check for [`z_equiv`].
pub fn z_equiv_by_region(arrangement: &Arrangement, z1: &ZPoint, z2: &ZPoint) -> Result<bool> {
    if z1.point != z2.point {
        return Err(Error::DifferentBasePoints);
    }
    let r1 = arrangement.subregion(&z1.covector, &z1.tope)?;
    let r2 = arrangement.subregion(&z2.covector, &z2.tope)?;
    Ok(region_subset(&r1, &r2)? && region_subset(&r2, &r1)?)
}

/// Topes lying above a covector: the fiber of the projection to the region
/// over any point of that covector's face.
pub fn fiber(com: &Com, covector: &SignVector) -> Result<Vec<SignVector>> {
    if !com.contains(covector) {
        return Err(Error::NotACovector(covector.to_string()));
    }
    Ok(com
        .topes()
        .into_iter()
        .filter(|t| covector.leq(t).expect("uniform length"))
        .collect())
}

/// The cone attached to a z-point: the region sharpened by the strict sides
/// its tope picks on every hyperplane through the base point.
pub fn local_region(arrangement: &Arrangement, z: &ZPoint) -> Result<Region> {
    arrangement.subregion(&z.covector, &z.tope)
}

/// The four formulations of cover membership, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverConditions {
    /// `T = X o Y` and `S = Y o X` (pure sign arithmetic).
    pub by_composition: bool,
    /// `T = X o Y` and the face of `X` within the region is contained in
    /// the z-point's cone.
    pub by_region: bool,
    /// Side agreements: the z-covector and `T` agree on every hyperplane
    /// through the face of `X`, and `X` and the z-tope agree on every
    /// hyperplane through the z-point's face.
    pub by_sides: bool,
    /// The base point lies in the cone of `(X, T)` and the z-point is glued
    /// to `(v, T)`.
    pub by_point: bool,
}

impl CoverConditions {
    pub fn agree(&self) -> bool {
        self.by_composition == self.by_region
            && self.by_region == self.by_sides
            && self.by_sides == self.by_point
    }
}

/// Evaluates all four membership conditions of a z-point in the cover set
/// of a Salvetti element.
pub fn cover_conditions(
    arrangement: &Arrangement,
    z: &ZPoint,
    element: &SalElement,
) -> Result<CoverConditions> {
    let kz = local_region(arrangement, z)?;
    cover_conditions_in(arrangement, z, element, &kz)
}

fn cover_conditions_in(
    arrangement: &Arrangement,
    z: &ZPoint,
    element: &SalElement,
    kz: &Region,
) -> Result<CoverConditions> {
    let x = &element.covector;
    let t = &element.tope;
    let y = &z.covector;
    let s = &z.tope;

    let tope_matches = *t == x.compose(y)?;
    let by_composition = tope_matches && *s == y.compose(x)?;

    let by_region =
        tope_matches && region_subset(&arrangement.face_region(x), kz)?;

    let by_sides = x.zeros().iter().all(|e| y.sign(e) == t.sign(e))
        && y.zeros().iter().all(|e| x.sign(e) == s.sign(e));

    let cone = arrangement.subregion(x, t)?;
    let glued = s.separator(t)?.is_disjoint(&y.zeros());
    let by_point = cone.contains_point(&z.point) && glued;

    Ok(CoverConditions { by_composition, by_region, by_sides, by_point })
}

/// Cover membership. The production answer is the sign-arithmetic
/// condition; the other three run as cross-checks and any disagreement is
/// an internal invariant violation.
pub fn in_cover(arrangement: &Arrangement, z: &ZPoint, element: &SalElement) -> Result<bool> {
    let conditions = cover_conditions(arrangement, z, element)?;
    if !conditions.agree() {
        return Err(Error::Internal(format!(
            "cover membership conditions disagree for {z} in {element}: {conditions:?}"
        )));
    }
    Ok(conditions.by_composition)
}

/// The induced subposet of Salvetti elements whose cover set contains the
/// z-point.
pub fn sal_at(
    arrangement: &Arrangement,
    z: &ZPoint,
    sal: &FinitePoset<SalElement>,
) -> Result<FinitePoset<SalElement>> {
    let mut members = Vec::new();
    for i in 0..sal.len() {
        if in_cover(arrangement, z, sal.element(i))? {
            members.push(i);
        }
    }
    Ok(sal.induced(&members))
}

/// One verification failure, with enough context to replay it.
#[derive(Debug, Clone)]
pub enum NerveFailure {
    AxiomsFail { detail: String },
    LocalComInvalid { z: String, detail: String },
    BijectionMismatch { z: String, missing: Vec<String>, extra: Vec<String> },
    NotOrderIso { z: String },
    NotAcyclic { z: String, betti: Vec<usize> },
    FourWayDisagreement { z: String, element: String, detail: String },
    CoverNotMonotone { z: String, lower: String, upper: String },
    ConeNotContained { lower: String, upper: String },
    KzDisagreement { covector: String, tope_a: String, tope_b: String, by_sign: bool, by_region: bool },
    RepresentativeDependsOnPoint { z: String },
}

impl fmt::Display for NerveFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NerveFailure::AxiomsFail { detail } => {
                write!(f, "covector axioms fail: {detail}")
            }
            NerveFailure::LocalComInvalid { z, detail } => {
                write!(f, "{z}: local covector set is not a valid covector system: {detail}")
            }
            NerveFailure::BijectionMismatch { z, missing, extra } => write!(
                f,
                "{z}: cover poset mismatch, missing [{}], extra [{}]",
                missing.join(", "),
                extra.join(", ")
            ),
            NerveFailure::NotOrderIso { z } => {
                write!(f, "{z}: covector-to-cover map is not an order isomorphism")
            }
            NerveFailure::NotAcyclic { z, betti } => {
                write!(f, "{z}: local cover poset is not reduced-acyclic (betti {betti:?})")
            }
            NerveFailure::FourWayDisagreement { z, element, detail } => {
                write!(f, "{z}: membership conditions disagree on {element}: {detail}")
            }
            NerveFailure::CoverNotMonotone { z, lower, upper } => {
                write!(f, "{z}: member {lower} below non-member {upper}")
            }
            NerveFailure::ConeNotContained { lower, upper } => {
                write!(f, "cone of {lower} is not contained in cone of {upper}")
            }
            NerveFailure::KzDisagreement { covector, tope_a, tope_b, by_sign, by_region } => write!(
                f,
                "gluing of ({covector};{tope_a},{tope_b}): sign test {by_sign}, region test {by_region}"
            ),
            NerveFailure::RepresentativeDependsOnPoint { z } => {
                write!(f, "{z}: cover membership changed with the witness point")
            }
        }
    }
}

/// Outcome of [`verify_nerve`]: the number of z-representatives examined
/// and every failure found.
#[derive(Debug, Clone)]
pub struct NerveReport {
    pub z_count: usize,
    pub failures: Vec<NerveFailure>,
}

impl NerveReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for NerveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "nerve checks pass over {} z-representatives", self.z_count)
        } else {
            writeln!(
                f,
                "nerve checks fail ({} failures over {} z-representatives):",
                self.failures.len(),
                self.z_count
            )?;
            for failure in &self.failures {
                writeln!(f, "  {failure}")?;
            }
            Ok(())
        }
    }
}

/// A second interior point of the covector's face, when the face has
/// positive dimension: the face region re-solved with one coordinate pushed
/// strictly off the first witness.
fn second_interior_point(
    arrangement: &Arrangement,
    covector: &SignVector,
    first: &Point,
) -> Result<Option<Point>> {
    let face = arrangement.face_region(covector);
    for i in 0..arrangement.dim() {
        for dir in [1i64, -1] {
            let mut coeffs = vec![Rat::zero(); arrangement.dim()];
            coeffs[i] = rat_int(dir);
            let shift = AffineForm::new(coeffs, rat_int(-dir) * &first[i]);
            let result = feasible(&face.with(Constraint::strict(shift)))?;
            if let Some(point) = result.witness {
                return Ok(Some(point));
            }
        }
    }
    Ok(None)
}

/// Runs every combinatorial check behind the nerve argument on one
/// arrangement. Failures land in the report; only genuine usage errors
/// (infeasible input and the like) surface as `Err`.
///
/// Per z-representative (one per Salvetti element, based at the witness of
/// its covector): the covectors of the arrangement restricted to the local
/// cone must map bijectively and order-isomorphically onto the cover
/// subposet, that subposet's order complex must be reduced-acyclic, the
/// four membership formulations must agree everywhere, and membership must
/// be monotone along the Salvetti order. Cone containment along the order
/// and the two formulations of gluing are checked arrangement-wide.
pub fn verify_nerve(arrangement: &Arrangement) -> Result<NerveReport> {
    let mut failures = Vec::new();
    let (com, witnesses) = arrangement.enumerate_covectors()?;

    let axiom_report = com.check();
    if !axiom_report.ok() {
        return Ok(NerveReport {
            z_count: 0,
            failures: vec![NerveFailure::AxiomsFail { detail: axiom_report.describe() }],
        });
    }
    let sal = salvetti_poset(&com)?;

    let related: Vec<(usize, usize)> = (0..sal.len())
        .flat_map(|i| (0..sal.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && sal.leq(i, j))
        .collect();

    // Cone containment along the Salvetti order (z-independent half).
    for &(i, j) in &related {
        let lower = sal.element(i);
        let upper = sal.element(j);
        let cone_lower = arrangement.subregion(&lower.covector, &lower.tope)?;
        let cone_upper = arrangement.subregion(&upper.covector, &upper.tope)?;
        if !region_subset(&cone_lower, &cone_upper)? {
            failures.push(NerveFailure::ConeNotContained {
                lower: lower.to_string(),
                upper: upper.to_string(),
            });
        }
    }

    // Gluing criterion: the separating-set test and the cone-equality test
    // must agree for every covector and pair of topes over its face.
    let topes = com.topes();
    for y in com.covectors() {
        let base = witnesses.get(y).expect("every covector has a witness").clone();
        for (ai, a) in topes.iter().enumerate() {
            for b in &topes[ai + 1..] {
                let za = ZPoint::new(arrangement, base.clone(), a.clone())?;
                let zb = ZPoint::new(arrangement, base.clone(), b.clone())?;
                let by_sign = z_equiv(&za, &zb)?;
                let by_region = z_equiv_by_region(arrangement, &za, &zb)?;
                if by_sign != by_region {
                    failures.push(NerveFailure::KzDisagreement {
                        covector: y.to_string(),
                        tope_a: a.to_string(),
                        tope_b: b.to_string(),
                        by_sign,
                        by_region,
                    });
                }
            }
        }
    }

    // Second witness per covector, for the point-independence assertion.
    let mut alternates: Vec<Option<Point>> = Vec::new();
    for y in com.covectors() {
        alternates.push(second_interior_point(arrangement, y, witnesses.get(y).unwrap())?);
    }

    let mut z_count = 0;
    for rep in 0..sal.len() {
        let SalElement { covector: y, tope: s } = sal.element(rep).clone();
        let y_index = com.covectors().iter().position(|c| *c == y).unwrap();
        let base = witnesses.get(&y).unwrap().clone();
        let z = ZPoint::new(arrangement, base, s.clone())?;
        let z_name = z.to_string();
        z_count += 1;

        let kz = local_region(arrangement, &z)?;

        // Membership of every Salvetti element, all four ways.
        let mut members = Vec::new();
        for i in 0..sal.len() {
            let conditions = cover_conditions_in(arrangement, &z, sal.element(i), &kz)?;
            if !conditions.agree() {
                failures.push(NerveFailure::FourWayDisagreement {
                    z: z_name.clone(),
                    element: sal.element(i).to_string(),
                    detail: format!("{conditions:?}"),
                });
            }
            if conditions.by_composition {
                members.push(i);
            }
        }

        // Monotonicity: membership is upward closed along the order.
        for &(i, j) in &related {
            if members.contains(&i) && !members.contains(&j) {
                failures.push(NerveFailure::CoverNotMonotone {
                    z: z_name.clone(),
                    lower: sal.element(i).to_string(),
                    upper: sal.element(j).to_string(),
                });
            }
        }

        // Membership must not depend on which interior point represents z.
        if let Some(second) = &alternates[y_index] {
            let z2 = ZPoint::new(arrangement, second.clone(), s.clone())?;
            let mut members2 = Vec::new();
            for i in 0..sal.len() {
                let conditions = cover_conditions_in(arrangement, &z2, sal.element(i), &kz)?;
                if !conditions.agree() {
                    failures.push(NerveFailure::FourWayDisagreement {
                        z: z2.to_string(),
                        element: sal.element(i).to_string(),
                        detail: format!("{conditions:?}"),
                    });
                }
                if conditions.by_composition {
                    members2.push(i);
                }
            }
            if members2 != members {
                failures.push(NerveFailure::RepresentativeDependsOnPoint { z: z_name.clone() });
            }
        }

        // Covectors of the arrangement over the local cone, geometrically.
        let restricted = arrangement.with_region(kz.clone())?;
        let mut local: Vec<SignVector> = Vec::new();
        for x in com.covectors() {
            if feasible(&restricted.face_region(x))?.feasible {
                local.push(x.clone());
            }
        }

        let local_report = check_com(&local)?;
        if !local_report.ok() {
            failures.push(NerveFailure::LocalComInvalid {
                z: z_name.clone(),
                detail: local_report.describe(),
            });
        }

        // The map X -> (X, X o Y) must carry the local covectors exactly
        // onto the cover subposet, as an order isomorphism.
        let mapped: BTreeSet<SalElement> = local
            .iter()
            .map(|x| {
                Ok(SalElement { covector: x.clone(), tope: x.compose(&y)? })
            })
            .collect::<Result<_>>()?;
        let member_set: BTreeSet<SalElement> =
            members.iter().map(|&i| sal.element(i).clone()).collect();
        if mapped != member_set {
            failures.push(NerveFailure::BijectionMismatch {
                z: z_name.clone(),
                missing: member_set.difference(&mapped).map(|e| e.to_string()).collect(),
                extra: mapped.difference(&member_set).map(|e| e.to_string()).collect(),
            });
            continue;
        }

        let local_poset =
            FinitePoset::new(local.clone(), |a, b| a.leq(b).expect("uniform length"))?;
        let cover_poset = sal.induced(&members);
        let map: Vec<usize> = local
            .iter()
            .map(|x| {
                let image = SalElement {
                    covector: x.clone(),
                    tope: x.compose(&y).expect("uniform length"),
                };
                cover_poset
                    .elements()
                    .iter()
                    .position(|e| *e == image)
                    .expect("image is a member")
            })
            .collect();
        if !verify_order_iso(&map, &local_poset, &cover_poset)? {
            failures.push(NerveFailure::NotOrderIso { z: z_name.clone() });
        }

        // Contractibility proxy: reduced integral acyclicity of the cover
        // subposet's order complex.
        let complex = cover_poset.order_complex();
        if complex.is_empty() {
            failures.push(NerveFailure::NotAcyclic { z: z_name.clone(), betti: Vec::new() });
        } else {
            let profile = crate::homology::betti(&complex);
            let acyclic = profile.betti[0] == 1
                && profile.betti[1..].iter().all(|&b| b == 0)
                && !profile.has_torsion();
            if !acyclic {
                failures.push(NerveFailure::NotAcyclic { z: z_name, betti: profile.betti });
            }
        }
    }

    Ok(NerveReport { z_count, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat_int;
    use crate::sign::sv;

    fn two_points() -> Arrangement {
        Arrangement::full_space(
            1,
            vec![
                AffineForm::new(vec![rat_int(1)], rat_int(1)),
                AffineForm::new(vec![rat_int(1)], rat_int(-1)),
            ],
        )
        .unwrap()
    }

    fn z_at_first_point(tope: &str) -> ZPoint {
        ZPoint::new(&two_points(), vec![rat_int(-1)], sv(tope)).unwrap()
    }

    #[test]
    fn zpoint_normalizes_tope_over_the_covector() {
        let z = z_at_first_point("++");
        assert_eq!(z.covector(), &sv("0-"));
        // (0-) o (++) = (+-): the class of C over the first point is B's.
        assert_eq!(z.tope(), &sv("+-"));
    }

    #[test]
    fn zpoint_rejects_points_outside_the_region()
    {
        use crate::geom::Region;
        let restricted = two_points()
            .with_region(
                Region::new(
                    1,
                    vec![Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0)))],
                )
                .unwrap(),
            )
            .unwrap();
        assert!(matches!(
            ZPoint::new(&restricted, vec![rat_int(-1)], sv("+-")),
            Err(Error::WitnessMismatch)
        ));
    }

    #[test]
    fn gluing_at_the_first_point() {
        let zb = z_at_first_point("+-");
        let zc = z_at_first_point("++");
        let za = z_at_first_point("--");
        assert!(z_equiv(&zb, &zc).unwrap());
        assert!(!z_equiv(&za, &zb).unwrap());
        assert!(z_equiv(&za, &za).unwrap());

        let a = two_points();
        assert!(z_equiv_by_region(&a, &zb, &zc).unwrap());
        assert!(!z_equiv_by_region(&a, &za, &zb).unwrap());
    }

    #[test]
    fn z_equiv_requires_shared_base_point() {
        let a = two_points();
        let z1 = ZPoint::new(&a, vec![rat_int(-1)], sv("+-")).unwrap();
        let z2 = ZPoint::new(&a, vec![rat_int(0)], sv("+-")).unwrap();
        assert!(matches!(z_equiv(&z1, &z2), Err(Error::DifferentBasePoints)));
    }

    #[test]
    fn fibers_of_the_double_points() {
        let (com, _) = two_points().enumerate_covectors().unwrap();
        assert_eq!(fiber(&com, &sv("0-")).unwrap(), vec![sv("--"), sv("+-")]);
        assert_eq!(fiber(&com, &sv("+0")).unwrap(), vec![sv("+-"), sv("++")]);
        assert_eq!(fiber(&com, &sv("+-")).unwrap(), vec![sv("+-")]);
        assert!(matches!(
            fiber(&com, &sv("-+")),
            Err(Error::NotACovector(_))
        ));
        // Two fibers of size two, all others singletons.
        let sizes: Vec<usize> = com
            .covectors()
            .iter()
            .map(|y| fiber(&com, y).unwrap().len())
            .collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 2);
        assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 3);
    }

    #[test]
    fn local_regions_at_the_first_point() {
        let a = two_points();
        let right = local_region(&a, &z_at_first_point("+-")).unwrap();
        assert!(right.contains_point(&[rat_int(0)]));
        assert!(!right.contains_point(&[rat_int(-2)]));
        let left = local_region(&a, &z_at_first_point("--")).unwrap();
        assert!(left.contains_point(&[rat_int(-2)]));
        assert!(!left.contains_point(&[rat_int(0)]));
        // Over a tope the cone is the whole region.
        let z = ZPoint::new(&a, vec![rat_int(0)], sv("+-")).unwrap();
        assert!(local_region(&a, &z).unwrap().constraints().is_empty());
    }

    #[test]
    fn cover_membership_examples() {
        let a = two_points();
        let z = z_at_first_point("+-");
        let member =
            |x: &str, t: &str| SalElement { covector: sv(x), tope: sv(t) };
        assert!(in_cover(&a, &z, &member("+-", "+-")).unwrap());
        assert!(in_cover(&a, &z, &member("+0", "+-")).unwrap());
        assert!(in_cover(&a, &z, &member("++", "++")).unwrap());
        assert!(!in_cover(&a, &z, &member("--", "--")).unwrap());
        assert!(!in_cover(&a, &z, &member("0-", "+-")).unwrap());
        assert!(!in_cover(&a, &z, &member("+0", "++")).unwrap());
    }

    #[test]
    fn sal_at_the_first_point() {
        let a = two_points();
        let (com, _) = a.enumerate_covectors().unwrap();
        let sal = salvetti_poset(&com).unwrap();
        let sub = sal_at(&a, &z_at_first_point("+-"), &sal).unwrap();
        let shown: Vec<String> = sub.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, vec!["(+-,+-)", "(+0,+-)", "(++,++)"]);
        assert_eq!(sub.hasse().len(), 2);
        // (+0,+-) sits below both maximal members.
        assert!(sub.leq(1, 0));
        assert!(sub.leq(1, 2));
    }

    #[test]
    fn sal_at_over_a_tope_contains_its_pair() {
        let a = two_points();
        let (com, _) = a.enumerate_covectors().unwrap();
        let sal = salvetti_poset(&com).unwrap();
        let z = ZPoint::new(&a, vec![rat_int(0)], sv("+-")).unwrap();
        let sub = sal_at(&a, &z, &sal).unwrap();
        assert!(sub
            .elements()
            .iter()
            .any(|e| e.covector == sv("+-") && e.tope == sv("+-")));
    }

    #[test]
    fn nerve_verifier_accepts_two_point_line() {
        let report = verify_nerve(&two_points()).unwrap();
        assert!(report.ok(), "{report}");
        assert_eq!(report.z_count, 7);
    }

    #[test]
    fn nerve_verifier_accepts_restricted_region() {
        use crate::geom::Region;
        let restricted = two_points()
            .with_region(
                Region::new(
                    1,
                    vec![Constraint::strict(AffineForm::new(vec![rat_int(1)], rat_int(0)))],
                )
                .unwrap(),
            )
            .unwrap();
        let report = verify_nerve(&restricted).unwrap();
        assert!(report.ok(), "{report}");
        assert_eq!(report.z_count, 4);
    }

    #[test]
    fn nerve_verifier_accepts_empty_arrangement() {
        let a = Arrangement::full_space(1, vec![]).unwrap();
        let report = verify_nerve(&a).unwrap();
        assert!(report.ok(), "{report}");
        assert_eq!(report.z_count, 1);
    }
}
