//! Classification of canonical Fano 3-topes by the dimension of the Fine
//! interior, with the axis data, facet and projection types, fundamental
//! group order, and weight relations; plus the hollow-polytope analysis.

use crate::arith::{rat, Int, Rat};
use crate::cone::pi1_order;
use crate::error::{Error, Result};
use crate::fine::{fine_interior_result, reflexive_hull, FineInteriorResult};
use crate::lattice::{complete_to_basis, quotient_coords, LatticeVector, RationalVector};
use crate::matrix::IntegerMatrix;
use crate::polygon::{
    classify_facet_polygon, classify_projection_polygon, hull_cycle_2d, polygon_contains_strict,
    PolygonType,
};
use crate::polytope::{HalfSpace, LatticePolytope};
use num::{One, Signed};

/// The classification regimes. A 2-dimensional Fine interior on a canonical
/// Fano input would contradict the observed trichotomy and is flagged as
/// nonstandard rather than silently accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Empty,
    K3,
    EllipticSymmetric,
    EllipticAsymmetric,
    GeneralType,
    Nonstandard,
}

impl Regime {
    pub fn label(&self) -> &'static str {
        match self {
            Regime::Empty => "empty",
            Regime::K3 => "K3",
            Regime::EllipticSymmetric => "elliptic_symmetric",
            Regime::EllipticAsymmetric => "elliptic_asymmetric",
            Regime::GeneralType => "general_type",
            Regime::Nonstandard => "nonstandard",
        }
    }
}

/// Full per-polytope report.
#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub id: Option<String>,
    pub fi_dim: i32,
    pub regime: Regime,
    pub fi_vertices: Vec<RationalVector>,
    pub v_delta: Option<LatticeVector>,
    pub lambda: Option<Rat>,
    pub symmetric: Option<bool>,
    pub facet_type_plus: Option<PolygonType>,
    pub facet_type_minus: Option<PolygonType>,
    pub theta_plus_vertices: Option<Vec<LatticeVector>>,
    pub theta_minus_vertices: Option<Vec<LatticeVector>>,
    pub projection_type: Option<PolygonType>,
    pub pi1_order: Int,
    pub supp: Vec<LatticeVector>,
    pub canonical_hull_vertices: Vec<RationalVector>,
    pub canonical_hull_integral: bool,
    pub equals_canonical_hull: bool,
    pub reflexive_hull_vertices: Option<Vec<LatticeVector>>,
    pub psi: Option<[Int; 4]>,
    pub kodaira_label: Option<&'static str>,
    /// Raw segment scale when it falls outside {1/2, 2/3}.
    pub nonstandard_lambda: Option<Rat>,
    /// Translation applied to bring the interior lattice point to the
    /// origin (zero when none was needed).
    pub translation: LatticeVector,
}

/// Axis data of a 1-dimensional Fine interior: the primitive direction, the
/// scale, and whether 0 is the midpoint (symmetric) or a vertex
/// (asymmetric).
pub fn fi_axis_data(
    fi: &crate::polytope::RationalPolytope,
) -> Result<(LatticeVector, Rat, bool)> {
    if fi.dim() != 1 || fi.vertices().len() != 2 {
        return Err(Error::NotAxisSegment);
    }
    let a = &fi.vertices()[0];
    let b = &fi.vertices()[1];
    let zero = RationalVector::zero(a.dim());
    if !fi.contains_rational(&zero) {
        return Err(Error::NotAxisSegment);
    }
    let symmetric = a.add(b).is_zero();
    if symmetric {
        let e = a.max(b);
        let (scale, dir) = e.primitive_direction()?;
        return Ok((dir, scale, true));
    }
    if a.is_zero() || b.is_zero() {
        let e = if a.is_zero() { b } else { a };
        let (scale, dir) = e.primitive_direction()?;
        return Ok((dir, scale, false));
    }
    Err(Error::NotAxisSegment)
}

/// 2D lattice coordinates of a facet polygon, together with the planar
/// image of one extra point lying on the facet plane.
fn facet_plane_coords(
    p: &LatticePolytope,
    facet: &HalfSpace,
    extra: &LatticeVector,
) -> Result<(Vec<LatticeVector>, LatticeVector)> {
    let verts = p.facet_vertices(facet);
    if verts.is_empty() {
        return Err(Error::Internal("facet without vertices"));
    }
    let w = complete_to_basis(&facet.normal)?;
    let origin = &verts[0];
    let project = |x: &LatticeVector| -> LatticeVector {
        let coords = w.mul_vec(&x.sub(origin).0);
        LatticeVector(coords[1..].to_vec())
    };
    Ok((verts.iter().map(&project).collect(), project(extra)))
}

/// The facet containing the given lattice point in its relative interior.
pub fn facet_containing_in_relint(
    p: &LatticePolytope,
    x: &LatticeVector,
) -> Result<(HalfSpace, Vec<LatticeVector>)> {
    for facet in p.facets()? {
        if Rat::from_integer(facet.eval_lattice(x)) != facet.offset {
            continue;
        }
        let (planar, px) = facet_plane_coords(p, facet, x)?;
        let cycle = hull_cycle_2d(&planar);
        if cycle.len() >= 3 && polygon_contains_strict(&cycle, &px) {
            return Ok((facet.clone(), p.facet_vertices(facet)));
        }
    }
    Err(Error::NoMatchingFacet)
}

/// The reflexive facet containing v in its relative interior, typed against
/// the three reference facet polygons.
pub fn reflexive_facet(
    p: &LatticePolytope,
    v: &LatticeVector,
) -> Result<(HalfSpace, Vec<LatticeVector>, PolygonType)> {
    let (facet, verts) = facet_containing_in_relint(p, v)?;
    let (planar, _) = facet_plane_coords(p, &facet, v)?;
    let t = classify_facet_polygon(&planar)?;
    Ok((facet, verts, t))
}

/// Normal form key of a facet polygon, for lattice-isomorphism comparisons.
pub fn facet_polygon_normal_form(
    p: &LatticePolytope,
    facet: &HalfSpace,
) -> Result<Vec<LatticeVector>> {
    let (planar, _) = facet_plane_coords(p, facet, &LatticeVector::zero(p.ambient()))?;
    crate::polygon::polygon_normal_form(&planar)
}

/// Projection of the polytope along a primitive direction onto M/Zv, typed
/// against the three reference projection polygons.
pub fn project_along(
    p: &LatticePolytope,
    v: &LatticeVector,
) -> Result<(Vec<LatticeVector>, PolygonType)> {
    let w = complete_to_basis(v)?;
    let w_inv = w.inverse_unimodular()?;
    let images: Vec<LatticeVector> = p
        .vertices()
        .iter()
        .map(|x| quotient_coords(&w_inv, x))
        .collect();
    let cycle = hull_cycle_2d(&images);
    if cycle.len() < 3 {
        return Err(Error::DegenerateProjection);
    }
    let t = classify_projection_polygon(&cycle)?;
    Ok((cycle, t))
}

/// Primitive positive integer relation among the four vertices of a
/// 3-simplex with the origin in its interior, as a sorted multiset.
pub fn vertex_weight_relation(p: &LatticePolytope) -> Result<Vec<Int>> {
    let verts: Vec<LatticeVector> = p.vertices().to_vec();
    positive_relation(&verts, p)
}

/// Primitive positive integer relation among the four facet normals of a
/// 3-simplex.
pub fn facet_normal_relation(p: &LatticePolytope) -> Result<Vec<Int>> {
    let normals: Vec<LatticeVector> = p.facets()?.iter().map(|f| f.normal.clone()).collect();
    positive_relation(&normals, p)
}

fn positive_relation(vecs: &[LatticeVector], p: &LatticePolytope) -> Result<Vec<Int>> {
    if p.ambient() != 3 || !p.is_full_dim() || p.vertices().len() != 4 || vecs.len() != 4 {
        return Err(Error::NotSimplex);
    }
    // kernel of the 3x4 matrix with the vectors as columns, by cofactors
    let mut q: Vec<Int> = Vec::with_capacity(4);
    for skip in 0..4 {
        let cols: Vec<&LatticeVector> = (0..4).filter(|&i| i != skip).map(|i| &vecs[i]).collect();
        let det = IntegerMatrix::from_rows(&[
            cols[0].0.clone(),
            cols[1].0.clone(),
            cols[2].0.clone(),
        ])
        .det();
        let sign = if skip % 2 == 0 { Int::one() } else { -Int::one() };
        q.push(sign * det);
    }
    // verify the relation
    let mut acc = LatticeVector::zero(3);
    for (qi, v) in q.iter().zip(vecs) {
        acc = acc.add(&v.scale(qi));
    }
    if !acc.is_zero() {
        return Err(Error::Internal("cofactor relation failed"));
    }
    if q.iter().all(|c| c.is_negative()) {
        for c in q.iter_mut() {
            *c = -c.clone();
        }
    }
    if !q.iter().all(|c| c.is_positive()) {
        return Err(Error::IndefiniteRelation);
    }
    let g = crate::arith::content(&q);
    let mut out: Vec<Int> = q.into_iter().map(|c| c / &g).collect();
    out.sort();
    Ok(out)
}

/// No lattice points in the relative interior.
pub fn is_hollow(p: &LatticePolytope) -> bool {
    p.interior_lattice_points().is_empty()
}

/// Report for a hollow 3-tope.
#[derive(Clone, Debug)]
pub struct HollowRecord {
    pub index: Option<u32>,
    pub width: Int,
    pub width_direction: LatticeVector,
    pub fi_dim: i32,
    pub fi_vertices: Vec<RationalVector>,
    pub supp: Option<Vec<LatticeVector>>,
    pub canonical_hull_vertices: Option<Vec<RationalVector>>,
    pub pi1_order: Option<Int>,
}

/// Width, Fine interior, and (when the Fine interior is nonempty) support,
/// canonical hull, and fundamental group order of a hollow 3-tope.
pub fn analyze_hollow(p: &LatticePolytope, index: Option<u32>) -> Result<HollowRecord> {
    if !is_hollow(p) {
        return Err(Error::Internal("input has interior lattice points"));
    }
    let (width, width_direction) = p.lattice_width()?;
    let r = fine_interior_result(p)?;
    if r.fi.is_empty() {
        return Ok(HollowRecord {
            index,
            width,
            width_direction,
            fi_dim: -1,
            fi_vertices: vec![],
            supp: None,
            canonical_hull_vertices: None,
            pi1_order: None,
        });
    }
    let can = r.canonical_hull.as_ref().expect("nonempty fi");
    Ok(HollowRecord {
        index,
        width,
        width_direction,
        fi_dim: r.fi.dim(),
        fi_vertices: r.fi.vertices().to_vec(),
        supp: Some(r.support.clone()),
        canonical_hull_vertices: Some(can.vertices().to_vec()),
        pi1_order: Some(pi1_order(p)?),
    })
}

fn allowed_lambda(l: &Rat) -> bool {
    *l == rat(1, 2) || *l == rat(2, 3)
}

/// Classifies a canonical Fano 3-tope. Inputs whose unique interior lattice
/// point is not the origin are translated first; the translation is
/// recorded for coordinate transport.
pub fn classify(p: &LatticePolytope) -> Result<ClassificationRecord> {
    classify_with_id(p, None)
}

pub fn classify_with_id(
    p: &LatticePolytope,
    id: Option<String>,
) -> Result<ClassificationRecord> {
    if p.ambient() != 3 || !p.is_full_dim() {
        return Err(Error::NotFullDimensional {
            found: p.dim(),
            ambient: p.ambient(),
        });
    }
    let interior = p.interior_lattice_points();
    if interior.len() != 1 {
        return Err(Error::NotCanonicalFano(interior.len()));
    }
    let translation = interior[0].neg();
    let work = if translation.is_zero() {
        p.clone()
    } else {
        p.translate(&translation)
    };

    let r: FineInteriorResult = fine_interior_result(&work)?;
    let pi1 = pi1_order(&work)?;
    let psi = crate::ehrhart::ehrhart_profile(&work).ok().map(|e| e.psi);
    let can = r.canonical_hull.as_ref();
    let can_vertices = can.map(|c| c.vertices().to_vec()).unwrap_or_default();
    let equals_can = can
        .map(|c| {
            let own: Vec<RationalVector> =
                work.vertices().iter().map(|v| v.to_rational()).collect();
            c.vertices() == &own[..]
        })
        .unwrap_or(false);

    let mut record = ClassificationRecord {
        id,
        fi_dim: r.fi.dim(),
        regime: Regime::Nonstandard,
        fi_vertices: r.fi.vertices().to_vec(),
        v_delta: None,
        lambda: None,
        symmetric: None,
        facet_type_plus: None,
        facet_type_minus: None,
        theta_plus_vertices: None,
        theta_minus_vertices: None,
        projection_type: None,
        pi1_order: pi1,
        supp: r.support.clone(),
        canonical_hull_vertices: can_vertices,
        canonical_hull_integral: r.canonical_hull_integral,
        equals_canonical_hull: equals_can,
        reflexive_hull_vertices: None,
        psi,
        kodaira_label: None,
        nonstandard_lambda: None,
        translation,
    };

    match r.fi.dim() {
        -1 => {
            record.regime = Regime::Empty;
        }
        0 => {
            let zero = RationalVector::zero(3);
            if r.fi.vertices() == [zero] {
                record.regime = Regime::K3;
                record.kodaira_label = Some("κ=0");
                let hull = reflexive_hull(&work)?;
                record.reflexive_hull_vertices = Some(hull.vertices().to_vec());
            }
        }
        1 => match fi_axis_data(&r.fi) {
            Ok((v, lambda, symmetric)) => {
                record.v_delta = Some(v.clone());
                record.symmetric = Some(symmetric);
                if allowed_lambda(&lambda) {
                    record.lambda = Some(lambda);
                    record.regime = if symmetric {
                        Regime::EllipticSymmetric
                    } else {
                        Regime::EllipticAsymmetric
                    };
                    record.kodaira_label = Some("κ=1");
                } else {
                    record.nonstandard_lambda = Some(lambda);
                }
                match reflexive_facet(&work, &v) {
                    Ok((_, verts, t)) => {
                        record.facet_type_plus = Some(t);
                        record.theta_plus_vertices = Some(verts);
                    }
                    Err(Error::NoMatchingFacet) | Err(Error::UnrecognizedFacetType) => {
                        record.regime = Regime::Nonstandard;
                    }
                    Err(e) => return Err(e),
                }
                if symmetric {
                    match reflexive_facet(&work, &v.neg()) {
                        Ok((_, verts, t)) => {
                            record.facet_type_minus = Some(t);
                            record.theta_minus_vertices = Some(verts);
                        }
                        Err(Error::NoMatchingFacet) | Err(Error::UnrecognizedFacetType) => {
                            record.regime = Regime::Nonstandard;
                        }
                        Err(e) => return Err(e),
                    }
                }
                match project_along(&work, &v) {
                    Ok((_, t)) => {
                        record.projection_type = Some(t);
                        if record.facet_type_plus != Some(t) {
                            // the projection is dual to the facet; the
                            // reference types pair a-a, b-b, c-c
                            record.regime = Regime::Nonstandard;
                        }
                    }
                    Err(Error::DegenerateProjection) | Err(Error::UnrecognizedFacetType) => {
                        record.regime = Regime::Nonstandard;
                    }
                    Err(e) => return Err(e),
                }
            }
            Err(Error::NotAxisSegment) => {
                record.regime = Regime::Nonstandard;
            }
            Err(e) => return Err(e),
        },
        2 => {
            record.regime = Regime::Nonstandard;
        }
        3 => {
            record.regime = Regime::GeneralType;
            record.kodaira_label = Some("κ=2");
        }
        _ => return Err(Error::Internal("impossible Fine interior dimension")),
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn lp(rows: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64(rows)
    }

    #[test]
    fn classify_reflexive_simplex() {
        let p = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        let r = classify(&p).unwrap();
        assert_eq!(r.fi_dim, 0);
        assert_eq!(r.regime, Regime::K3);
        assert_eq!(r.pi1_order, int(1));
        assert!(r.equals_canonical_hull);
        assert!(r.canonical_hull_integral);
        assert_eq!(
            r.reflexive_hull_vertices.as_deref().unwrap(),
            p.vertices()
        );
        assert_eq!(r.kodaira_label, Some("κ=0"));
    }

    #[test]
    fn classify_547324_asymmetric() {
        let p = lp(&[&[2, 3, 8], &[1, 0, 0], &[0, 1, 0], &[-1, -1, -1]]);
        let r = classify(&p).unwrap();
        assert_eq!(r.fi_dim, 1);
        assert_eq!(r.regime, Regime::EllipticAsymmetric);
        assert_eq!(r.v_delta.unwrap(), LatticeVector::from_i64(&[1, 1, 2]));
        assert_eq!(r.lambda.unwrap(), rat(1, 2));
        assert_eq!(r.symmetric, Some(false));
        assert_eq!(r.facet_type_plus, Some(PolygonType::B));
        assert_eq!(r.projection_type, Some(PolygonType::B));
        let theta: Vec<LatticeVector> = [[2, 3, 8], [1, 0, 0], [0, 1, 0]]
            .iter()
            .map(|c| LatticeVector::from_i64(c))
            .collect();
        let mut got = r.theta_plus_vertices.unwrap();
        got.sort();
        let mut want = theta;
        want.sort();
        assert_eq!(got, want);
        assert_eq!(r.pi1_order, int(1));
        assert_eq!(r.kodaira_label, Some("κ=1"));
    }

    #[test]
    fn classify_547323_type_a() {
        let p = lp(&[&[-1, 1, -2], &[1, -2, 3], &[1, 0, 0], &[-2, 5, -3]]);
        let r = classify(&p).unwrap();
        assert_eq!(r.regime, Regime::EllipticAsymmetric);
        assert_eq!(r.v_delta.unwrap(), LatticeVector::from_i64(&[0, 1, 0]));
        assert_eq!(r.lambda.unwrap(), rat(2, 3));
        assert_eq!(r.facet_type_plus, Some(PolygonType::A));
    }

    #[test]
    fn classify_547393_symmetric() {
        let p = lp(&[&[0, 1, 0], &[2, 1, 1], &[-2, -3, -5], &[2, 1, 9]]);
        let r = classify(&p).unwrap();
        assert_eq!(r.regime, Regime::EllipticSymmetric);
        assert_eq!(r.lambda.unwrap(), rat(1, 2));
        let v = r.v_delta.unwrap();
        assert!(v == LatticeVector::from_i64(&[0, 0, 1]) || v == LatticeVector::from_i64(&[0, 0, -1]));
        assert_eq!(r.pi1_order, int(2));
        assert_eq!(r.facet_type_plus, Some(PolygonType::B));
        assert_eq!(r.facet_type_minus, Some(PolygonType::B));
        assert!(r.equals_canonical_hull);
    }

    #[test]
    fn classify_547444_general_type() {
        let p = lp(&[&[1, 0, 0], &[-2, -4, -5], &[1, 2, 4], &[1, 4, 2]]);
        let r = classify(&p).unwrap();
        assert_eq!(r.fi_dim, 3);
        assert_eq!(r.regime, Regime::GeneralType);
        assert_eq!(r.pi1_order, int(1));
        assert!(r.equals_canonical_hull);
        assert_eq!(r.kodaira_label, Some("κ=2"));
    }

    #[test]
    fn kanev_relations() {
        let p = lp(&[&[1, 0, 0], &[-2, -4, -5], &[1, 2, 4], &[1, 4, 2]]);
        assert_eq!(
            facet_normal_relation(&p).unwrap(),
            vec![int(1), int(1), int(1), int(2)]
        );
        let todorov = lp(&[&[-3, -2, -2], &[1, 0, 0], &[1, 3, 1], &[1, 1, 3]]);
        assert_eq!(
            facet_normal_relation(&todorov).unwrap(),
            vec![int(1), int(1), int(2), int(2)]
        );
        let p386 = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        assert_eq!(
            vertex_weight_relation(&p386).unwrap(),
            vec![int(1), int(1), int(1), int(1)]
        );
        assert_eq!(
            vertex_weight_relation(&lp(&[&[2, 3, 8], &[1, 0, 0], &[0, 1, 0], &[-1, -1, -1]]))
                .unwrap(),
            vec![int(1), int(5), int(6), int(8)]
        );
    }

    #[test]
    fn hollow_analysis() {
        let d1 = lp(&[&[0, 0, 0], &[6, 0, 0], &[3, 3, 0], &[4, 0, 2]]);
        assert!(is_hollow(&d1));
        let r = analyze_hollow(&d1, Some(1)).unwrap();
        assert_eq!(r.width, int(2));
        assert_eq!(r.fi_dim, -1);
        assert!(r.pi1_order.is_none());

        let d4 = lp(&[&[0, 0, 0], &[4, 0, 0], &[2, 4, 0], &[3, 0, 2]]);
        let r = analyze_hollow(&d4, Some(4)).unwrap();
        assert_eq!(r.fi_dim, 0);
        assert_eq!(
            r.fi_vertices,
            vec![RationalVector::from_i64_pairs(&[(5, 2), (1, 1), (1, 1)])]
        );
        assert_eq!(r.pi1_order, Some(int(2)));

        let not_hollow = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        assert!(!is_hollow(&not_hollow));
    }

    #[test]
    fn pi1_examples() {
        // Reid's simplex in normalized coordinates comes from the fixture
        // path; the Todorov simplex has order 2
        let todorov = lp(&[&[-3, -2, -2], &[1, 0, 0], &[1, 3, 1], &[1, 1, 3]]);
        assert_eq!(pi1_order(&todorov).unwrap(), int(2));
        // symmetric with mu = 2/3 has order 3
        let p409 = lp(&[&[-4, 2, 9], &[1, 0, 0], &[0, 1, 0], &[7, -6, -18]]);
        assert_eq!(pi1_order(&p409).unwrap(), int(3));
    }

    #[test]
    fn non_canonical_fano_rejected() {
        let hollow = lp(&[&[0, 0, 0], &[6, 0, 0], &[3, 3, 0], &[4, 0, 2]]);
        assert!(matches!(
            classify(&hollow),
            Err(Error::NotCanonicalFano(0))
        ));
    }

    #[test]
    fn translation_is_recorded() {
        let p = lp(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2], &[0, 0, 0]]);
        // interior point is (1,1,1)
        let r = classify(&p).unwrap();
        assert_eq!(r.translation, LatticeVector::from_i64(&[-1, -1, -1]));
        assert_eq!(r.regime, Regime::K3);
    }
}
