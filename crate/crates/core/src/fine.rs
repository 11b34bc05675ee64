//! The core pipeline: ord, Fine interior, support, canonical hull,
//! reflexive hull, the tau iteration, and almost-reflexivity.

use crate::arith::{Int, Rat};
use crate::cone::{fan_hilbert_union, normal_fan};
use crate::error::{Error, Result};
use crate::geom::bounding_box;
use crate::lattice::{LatticeVector, RationalVector};
use crate::polytope::{HalfSpace, LatticePolytope, RationalPolytope};
use num::One;

/// ord(n) = min over the polytope of <x, n>; attained at a vertex.
pub fn ord(p: &LatticePolytope, n: &LatticeVector) -> Int {
    p.vertices()
        .iter()
        .map(|v| v.dot(n))
        .min()
        .expect("polytope has vertices")
}

/// Fine interior plus derived data.
#[derive(Clone, Debug)]
pub struct FineInteriorResult {
    pub fi: RationalPolytope,
    /// Constraint directions whose shifted inequality is tight on the Fine
    /// interior; empty when the Fine interior is empty.
    pub support: Vec<LatticeVector>,
    pub canonical_hull: Option<RationalPolytope>,
    pub canonical_hull_integral: bool,
    /// The constraint set that was intersected: Hilbert-basis directions of
    /// the maximal normal-fan cones with their ord values.
    pub constraints: Vec<(LatticeVector, Int)>,
}

fn fi_constraints(
    p: &LatticePolytope,
    include_edge_cones: bool,
) -> Result<Vec<(LatticeVector, Int)>> {
    let fan = normal_fan(p)?;
    let union = fan_hilbert_union(&fan, include_edge_cones)?;
    Ok(union.into_iter().map(|n| (ord(p, &n), n)).map(|(o, n)| (n, o)).collect())
}

fn intersect_shifted(
    p: &LatticePolytope,
    constraints: &[(LatticeVector, Int)],
) -> Result<RationalPolytope> {
    let hs: Vec<HalfSpace> = constraints
        .iter()
        .map(|(n, o)| HalfSpace {
            normal: n.clone(),
            offset: Rat::from_integer(o + Int::one()),
        })
        .collect();
    let rational: Vec<RationalVector> = p.vertices().iter().map(|v| v.to_rational()).collect();
    let (lo, hi) = bounding_box(&rational);
    match RationalPolytope::from_halfspaces_hinted(&hs, p.ambient(), Some((&lo, &hi))) {
        Ok(fi) => Ok(fi),
        // the normal fan is complete, so the intersection cannot be unbounded
        Err(Error::Unbounded) => Err(Error::Internal("unbounded Fine interior")),
        Err(e) => Err(e),
    }
}

/// The Fine interior of a lattice polytope.
///
/// For ambient dimension 3 the polytope must be full-dimensional and the
/// constraint set is the Hilbert union over the maximal normal-fan cones;
/// for dimension <= 2 the Fine interior equals the convex hull of the
/// interior lattice points.
pub fn fine_interior(p: &LatticePolytope) -> Result<RationalPolytope> {
    Ok(fine_interior_result(p)?.fi)
}

/// As `fine_interior` but with the constraint set enlarged by the Hilbert
/// bases of the 2-dimensional (edge) cones; the result must be identical.
pub fn fine_interior_with_edge_cones(p: &LatticePolytope) -> Result<RationalPolytope> {
    let constraints = fi_constraints(p, true)?;
    intersect_shifted(p, &constraints)
}

fn low_dim_fine_interior(p: &LatticePolytope) -> RationalPolytope {
    let pts = p.interior_lattice_points();
    if pts.is_empty() {
        return RationalPolytope::empty(p.ambient());
    }
    let rational: Vec<RationalVector> = pts.iter().map(|v| v.to_rational()).collect();
    RationalPolytope::hull(&rational).expect("nonempty")
}

/// Full pipeline: Fine interior, support, canonical hull.
pub fn fine_interior_result(p: &LatticePolytope) -> Result<FineInteriorResult> {
    if p.ambient() <= 2 || p.dim() < 3 {
        if p.ambient() > 2 {
            return Err(Error::NotFullDimensional {
                found: p.dim(),
                ambient: p.ambient(),
            });
        }
        let fi = low_dim_fine_interior(p);
        return Ok(FineInteriorResult {
            fi,
            support: vec![],
            canonical_hull: None,
            canonical_hull_integral: false,
            constraints: vec![],
        });
    }
    let constraints = fi_constraints(p, false)?;
    let fi = intersect_shifted(p, &constraints)?;
    if fi.is_empty() {
        return Ok(FineInteriorResult {
            fi,
            support: vec![],
            canonical_hull: None,
            canonical_hull_integral: false,
            constraints,
        });
    }
    let support = support_from_constraints(&fi, &constraints);
    let canonical = canonical_hull(p, &support)?;
    let integral = canonical.is_integral();
    Ok(FineInteriorResult {
        fi,
        support,
        canonical_hull: Some(canonical),
        canonical_hull_integral: integral,
        constraints,
    })
}

fn support_from_constraints(
    fi: &RationalPolytope,
    constraints: &[(LatticeVector, Int)],
) -> Vec<LatticeVector> {
    let mut out: Vec<LatticeVector> = constraints
        .iter()
        .filter(|(n, o)| {
            let min = fi
                .vertices()
                .iter()
                .map(|x| x.dot_lattice(n))
                .min()
                .expect("fi nonempty");
            min == Rat::from_integer(o + Int::one())
        })
        .map(|(n, _)| n.clone())
        .collect();
    out.sort();
    out
}

/// Directions of the Hilbert union whose shifted inequality is tight on the
/// Fine interior. Irreducibility of support vectors justifies restricting
/// to the Hilbert union.
pub fn support(p: &LatticePolytope, fi: &RationalPolytope) -> Result<Vec<LatticeVector>> {
    if fi.is_empty() {
        return Err(Error::EmptyFineInterior);
    }
    let constraints = fi_constraints(p, false)?;
    Ok(support_from_constraints(fi, &constraints))
}

/// Intersection of the unshifted support halfspaces; contains the polytope.
/// Errors with Unbounded when the support does not positively span.
pub fn canonical_hull(
    p: &LatticePolytope,
    support: &[LatticeVector],
) -> Result<RationalPolytope> {
    if support.is_empty() {
        return Err(Error::EmptyInput);
    }
    let hs: Vec<HalfSpace> = support
        .iter()
        .map(|n| HalfSpace {
            normal: n.clone(),
            offset: Rat::from_integer(ord(p, n)),
        })
        .collect();
    RationalPolytope::from_halfspaces(&hs, p.ambient())
}

/// The smallest reflexive polytope containing an almost reflexive polytope:
/// the dual of conv(dual ∩ N). Errors when conv(dual ∩ N) is not reflexive.
pub fn reflexive_hull(p: &LatticePolytope) -> Result<LatticePolytope> {
    let idh = p.integral_dual_hull()?;
    if !idh.is_full_dim() {
        return Err(Error::NotAlmostReflexive);
    }
    match idh.is_reflexive() {
        Ok(true) => {}
        Ok(false) => return Err(Error::NotAlmostReflexive),
        Err(Error::OriginNotInterior) => return Err(Error::NotAlmostReflexive),
        Err(e) => return Err(e),
    }
    let dual = idh.dual_polytope()?;
    dual.to_lattice()
        .ok_or(Error::Internal("dual of a reflexive polytope is integral"))
}

/// conv of the interior lattice points of the second dilate.
pub fn tau(p: &LatticePolytope) -> Result<LatticePolytope> {
    let doubled = p.dilate(&Int::from(2));
    let pts = doubled.interior_lattice_points();
    if pts.is_empty() {
        return Err(Error::NoInteriorPoints);
    }
    LatticePolytope::hull(&pts)
}

/// Iterates tau until the reflexive hull is reached; the chain stabilizes
/// within a handful of steps on canonical Fano inputs (capped defensively).
pub fn tau_chain(p: &LatticePolytope, cap: usize) -> Result<Vec<LatticePolytope>> {
    let target = reflexive_hull(p)?;
    let mut chain = vec![p.clone()];
    loop {
        let last = chain.last().unwrap();
        if last == &target {
            return Ok(chain);
        }
        if chain.len() > cap {
            return Err(Error::IterationLimit("tau iteration did not stabilize"));
        }
        chain.push(tau(last)?);
    }
}

/// Verdict of the almost-reflexivity test along with the individual
/// conditions that were evaluated (each pair is a condition label and its
/// truth value); the conditions must agree.
#[derive(Clone, Debug)]
pub struct AlmostReflexive {
    pub verdict: bool,
    pub conditions: Vec<(&'static str, bool)>,
}

/// Evaluates the equivalent almost-reflexivity conditions for a canonical
/// Fano 3-tope (translated so the interior lattice point is the origin):
/// (i) the Fine interior is {0}; (ii) 0 is interior to conv(dual ∩ N);
/// (v) conv((2P)° ∩ M) has exactly one interior lattice point.
pub fn is_almost_reflexive(p: &LatticePolytope) -> Result<AlmostReflexive> {
    let interior = p.interior_lattice_points();
    if interior.len() != 1 {
        return Err(Error::NotCanonicalFano(interior.len()));
    }
    if !interior[0].is_zero() {
        return Err(Error::OriginNotInterior);
    }
    let fi = fine_interior(p)?;
    let zero = RationalVector::zero(p.ambient());
    let cond_i = fi.dim() == 0 && fi.vertices() == [zero];
    let idh = p.integral_dual_hull()?;
    let cond_ii = idh.is_full_dim() && idh.origin_interior()?;
    let t = tau(p)?;
    let cond_v = t.interior_lattice_points().len() == 1;
    if cond_i != cond_ii || cond_i != cond_v {
        return Err(Error::Internal("almost-reflexivity conditions disagree"));
    }
    Ok(AlmostReflexive {
        verdict: cond_i,
        conditions: vec![("fi={0}", cond_i), ("0 in int [dual]", cond_ii), ("tau unique interior", cond_v)],
    })
}
