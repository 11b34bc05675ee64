//! 2D lattice polygons: hull cycles, a canonical normal form for
//! affine-unimodular equivalence, and typing against the three reference
//! facet and projection polygons.

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use num::{Integer, One, Signed, Zero};
use std::sync::OnceLock;

fn cross(a: &LatticeVector, b: &LatticeVector) -> Int {
    &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0]
}

/// Counterclockwise vertex cycle of the convex hull of 2D lattice points;
/// collinear non-vertex points are dropped.
pub fn hull_cycle_2d(points: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut pts: Vec<LatticeVector> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let turn = |o: &LatticeVector, a: &LatticeVector, b: &LatticeVector| -> Int {
        cross(&a.sub(o), &b.sub(o))
    };
    let mut lower: Vec<LatticeVector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticeVector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Strict interior test against the CCW cycle.
pub fn polygon_contains_strict(cycle: &[LatticeVector], p: &LatticeVector) -> bool {
    let k = cycle.len();
    (0..k).all(|i| {
        let a = &cycle[i];
        let b = &cycle[(i + 1) % k];
        cross(&b.sub(a), &p.sub(a)).is_positive()
    })
}

pub fn polygon_contains(cycle: &[LatticeVector], p: &LatticeVector) -> bool {
    let k = cycle.len();
    (0..k).all(|i| {
        let a = &cycle[i];
        let b = &cycle[(i + 1) % k];
        !cross(&b.sub(a), &p.sub(a)).is_negative()
    })
}

/// det +1 matrix mapping the primitive vector p to (1, 0).
fn primitive_to_e1(p: &LatticeVector) -> [[Int; 2]; 2] {
    let (a, b) = (&p.0[0], &p.0[1]);
    let e = a.extended_gcd(b);
    // e.x * a + e.y * b = 1
    [
        [e.x.clone(), e.y.clone()],
        [-b.clone(), a.clone()],
    ]
}

fn apply(m: &[[Int; 2]; 2], v: &LatticeVector) -> LatticeVector {
    LatticeVector(vec![
        &m[0][0] * &v.0[0] + &m[0][1] * &v.0[1],
        &m[1][0] * &v.0[0] + &m[1][1] * &v.0[1],
    ])
}

/// Canonicalizes one CCW edge sequence under det +1 transforms fixing the
/// first edge to the positive x-axis: the residual shear freedom is pinned
/// by reducing the second edge's x-coordinate modulo its y-coordinate.
fn canonical_sequence(edges: &[LatticeVector]) -> Vec<LatticeVector> {
    let f0 = &edges[0];
    let g = crate::arith::content(&f0.0);
    let prim = LatticeVector(vec![&f0.0[0] / &g, &f0.0[1] / &g]);
    let u0 = primitive_to_e1(&prim);
    let f1 = apply(&u0, &edges[1]);
    let y1 = f1.0[1].clone();
    debug_assert!(y1.is_positive());
    let x1 = &f1.0[0];
    let m = (x1.mod_floor(&y1) - x1) / &y1;
    let shear = [
        [Int::one(), m],
        [Int::zero(), Int::one()],
    ];
    let full = [
        [
            &shear[0][0] * &u0[0][0] + &shear[0][1] * &u0[1][0],
            &shear[0][0] * &u0[0][1] + &shear[0][1] * &u0[1][1],
        ],
        [u0[1][0].clone(), u0[1][1].clone()],
    ];
    edges.iter().map(|e| apply(&full, e)).collect()
}

fn flatten(seq: &[LatticeVector]) -> Vec<Int> {
    seq.iter().flat_map(|v| v.0.iter().cloned()).collect()
}

/// Canonical representative of the affine-unimodular equivalence class of a
/// 2D lattice polygon: the lexicographically minimal canonicalized boundary
/// edge-vector sequence over all starting edges and both orientations,
/// re-anchored at the origin. Two polygons get equal output iff equivalent.
pub fn polygon_normal_form(points: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    for p in points {
        if p.dim() != 2 {
            return Err(Error::NotPolygon);
        }
    }
    let cycle = hull_cycle_2d(points);
    if cycle.len() < 3 {
        return Err(Error::NotPolygon);
    }
    let k = cycle.len();
    let edges: Vec<LatticeVector> = (0..k).map(|i| cycle[(i + 1) % k].sub(&cycle[i])).collect();
    // Reflected traversal: reverse and negate, then fix orientation with a
    // single reflection so det +1 canonicalization applies to both orbits.
    let reflected: Vec<LatticeVector> = edges
        .iter()
        .rev()
        .map(|e| LatticeVector(vec![-e.0[0].clone(), e.0[1].clone()]))
        .collect();
    let mut best: Option<(Vec<Int>, Vec<LatticeVector>)> = None;
    for base in [&edges, &reflected] {
        for start in 0..k {
            let rotated: Vec<LatticeVector> = (0..k)
                .map(|i| base[(start + i) % k].clone())
                .collect();
            let seq = canonical_sequence(&rotated);
            let key = flatten(&seq);
            if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
                best = Some((key, seq));
            }
        }
    }
    let (_, seq) = best.unwrap();
    let mut vertices = Vec::with_capacity(k);
    let mut cur = LatticeVector::from_i64(&[0, 0]);
    for e in &seq {
        vertices.push(cur.clone());
        cur = cur.add(e);
    }
    debug_assert!(cur.is_zero());
    Ok(vertices)
}

/// The three reference reflexive facet polygons and the three reference
/// projection polygons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolygonType {
    A,
    B,
    C,
}

impl PolygonType {
    pub fn label(&self) -> &'static str {
        match self {
            PolygonType::A => "a",
            PolygonType::B => "b",
            PolygonType::C => "c",
        }
    }
}

pub fn reference_facet_polygon(t: PolygonType) -> Vec<LatticeVector> {
    let rows: &[[i64; 2]] = match t {
        PolygonType::A => &[[1, 0], [0, 1], [-1, -1]],
        PolygonType::B => &[[1, 0], [-1, 1], [-1, -1]],
        PolygonType::C => &[[1, 0], [-1, 0], [0, 1], [0, -1]],
    };
    rows.iter().map(|r| LatticeVector::from_i64(r)).collect()
}

pub fn reference_projection_polygon(t: PolygonType) -> Vec<LatticeVector> {
    let rows: &[[i64; 2]] = match t {
        PolygonType::A => &[[-1, 2], [-1, -1], [2, -1]],
        PolygonType::B => &[[-2, -1], [0, 1], [2, -1]],
        PolygonType::C => &[[1, 1], [1, -1], [-1, 1], [-1, -1]],
    };
    rows.iter().map(|r| LatticeVector::from_i64(r)).collect()
}

fn facet_forms() -> &'static [(PolygonType, Vec<LatticeVector>)] {
    static FORMS: OnceLock<Vec<(PolygonType, Vec<LatticeVector>)>> = OnceLock::new();
    FORMS.get_or_init(|| {
        [PolygonType::A, PolygonType::B, PolygonType::C]
            .into_iter()
            .map(|t| (t, polygon_normal_form(&reference_facet_polygon(t)).unwrap()))
            .collect()
    })
}

fn projection_forms() -> &'static [(PolygonType, Vec<LatticeVector>)] {
    static FORMS: OnceLock<Vec<(PolygonType, Vec<LatticeVector>)>> = OnceLock::new();
    FORMS.get_or_init(|| {
        [PolygonType::A, PolygonType::B, PolygonType::C]
            .into_iter()
            .map(|t| {
                (
                    t,
                    polygon_normal_form(&reference_projection_polygon(t)).unwrap(),
                )
            })
            .collect()
    })
}

/// Matches a polygon against the three reference facet types.
pub fn classify_facet_polygon(points: &[LatticeVector]) -> Result<PolygonType> {
    let nf = polygon_normal_form(points)?;
    facet_forms()
        .iter()
        .find(|(_, form)| *form == nf)
        .map(|(t, _)| *t)
        .ok_or(Error::UnrecognizedFacetType)
}

/// Matches a polygon against the three reference projection types.
pub fn classify_projection_polygon(points: &[LatticeVector]) -> Result<PolygonType> {
    let nf = polygon_normal_form(points)?;
    projection_forms()
        .iter()
        .find(|(_, form)| *form == nf)
        .map(|(t, _)| *t)
        .ok_or(Error::UnrecognizedFacetType)
}

/// Dual of a reflexive 2D lattice polygon with 0 interior, as a lattice
/// polygon (errors if the dual is not integral).
pub fn polygon_dual(points: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let cycle = hull_cycle_2d(points);
    if cycle.len() < 3 {
        return Err(Error::NotPolygon);
    }
    let rational: Vec<crate::lattice::RationalVector> =
        cycle.iter().map(|p| p.to_rational()).collect();
    let poly = crate::polytope::RationalPolytope::hull(&rational)?;
    let dual = poly.dual_polytope()?;
    let mut out = Vec::new();
    for v in dual.vertices() {
        match v.to_lattice() {
            Some(l) => out.push(l),
            None => return Err(Error::Internal("dual polygon is not integral")),
        }
    }
    Ok(out)
}

/// Area doubled (integer for lattice polygons), via the shoelace formula.
pub fn double_area(cycle: &[LatticeVector]) -> Int {
    let k = cycle.len();
    let mut acc = Int::zero();
    for i in 0..k {
        acc += cross(&cycle[i], &cycle[(i + 1) % k]);
    }
    acc.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    #[test]
    fn hull_cycle_is_ccw() {
        let cycle = hull_cycle_2d(&[lv(&[0, 0]), lv(&[2, 0]), lv(&[1, 0]), lv(&[0, 2]), lv(&[1, 1])]);
        assert_eq!(cycle.len(), 3);
        assert!(double_area(&cycle) > Int::zero());
    }

    #[test]
    fn normal_form_invariant_under_translation() {
        let p1 = reference_facet_polygon(PolygonType::A);
        let shifted: Vec<LatticeVector> = p1.iter().map(|v| v.add(&lv(&[5, -7]))).collect();
        assert_eq!(
            polygon_normal_form(&p1).unwrap(),
            polygon_normal_form(&shifted).unwrap()
        );
    }

    #[test]
    fn normal_form_invariant_under_unimodular_map() {
        // x -> (2x+y, x+y) is unimodular
        let p = reference_facet_polygon(PolygonType::B);
        let mapped: Vec<LatticeVector> = p
            .iter()
            .map(|v| {
                LatticeVector(vec![
                    &v.0[0] * 2 + &v.0[1],
                    v.0[0].clone() + &v.0[1],
                ])
            })
            .collect();
        assert_eq!(
            polygon_normal_form(&p).unwrap(),
            polygon_normal_form(&mapped).unwrap()
        );
    }

    #[test]
    fn normal_form_invariant_under_reflection() {
        let p = reference_projection_polygon(PolygonType::A);
        let mirrored: Vec<LatticeVector> = p
            .iter()
            .map(|v| LatticeVector(vec![v.0[1].clone(), v.0[0].clone()]))
            .collect();
        assert_eq!(
            polygon_normal_form(&p).unwrap(),
            polygon_normal_form(&mirrored).unwrap()
        );
    }

    #[test]
    fn six_reference_polygons_are_pairwise_distinct() {
        let mut forms = Vec::new();
        for t in [PolygonType::A, PolygonType::B, PolygonType::C] {
            forms.push(polygon_normal_form(&reference_facet_polygon(t)).unwrap());
            forms.push(polygon_normal_form(&reference_projection_polygon(t)).unwrap());
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                assert_ne!(forms[i], forms[j], "forms {i} and {j} collide");
            }
        }
    }

    #[test]
    fn facet_types_classify() {
        for t in [PolygonType::A, PolygonType::B, PolygonType::C] {
            assert_eq!(classify_facet_polygon(&reference_facet_polygon(t)).unwrap(), t);
            assert_eq!(
                classify_projection_polygon(&reference_projection_polygon(t)).unwrap(),
                t
            );
        }
        // projection polygons are not facet polygons
        assert!(classify_facet_polygon(&reference_projection_polygon(PolygonType::A)).is_err());
    }

    #[test]
    fn facet_duals_are_projection_types() {
        // the paper pairs facet type (x) with projection type (x)
        for t in [PolygonType::A, PolygonType::B, PolygonType::C] {
            let dual = polygon_dual(&reference_facet_polygon(t)).unwrap();
            assert_eq!(classify_projection_polygon(&dual).unwrap(), t);
        }
    }

    #[test]
    fn degenerate_polygon_rejected() {
        assert!(polygon_normal_form(&[lv(&[0, 0]), lv(&[1, 0]), lv(&[2, 0])]).is_err());
    }
}
