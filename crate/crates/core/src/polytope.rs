//! V- and H-representations of lattice and rational polytopes in ambient
//! dimension <= 4: hulls, facet systems, duals, dilation, lattice-point
//! enumeration, and lattice width.

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::geom::{
    affine_span, bounding_box, convex_hull, enumerate_box, intersect_halfspaces,
    EmbeddedCoords,
};
use crate::lattice::{LatticeVector, RationalVector};
use crate::matrix::{smith_normal_form, IntegerMatrix};
use num::{One, Signed, Zero};
use std::sync::OnceLock;

pub use crate::geom::HalfSpace;

/// A polytope with lattice vertices. Vertices are stored sorted and minimal;
/// the facet system is computed lazily for full-dimensional polytopes.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    vertices: Vec<LatticeVector>,
    dim: i32,
    ambient: usize,
    facets: OnceLock<Vec<HalfSpace>>,
    tester: OnceLock<Tester>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.ambient == other.ambient
    }
}
impl Eq for LatticePolytope {}

/// A polytope with rational vertices; may be empty (dim -1), a point, a
/// segment, a polygon, or full-dimensional.
#[derive(Clone, Debug)]
pub struct RationalPolytope {
    vertices: Vec<RationalVector>,
    dim: i32,
    ambient: usize,
    facets: OnceLock<Option<Vec<HalfSpace>>>,
    tester: OnceLock<Tester>,
}

impl PartialEq for RationalPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.ambient == other.ambient
    }
}
impl Eq for RationalPolytope {}

/// Recursive containment tester: full-dimensional levels test facet
/// inequalities; embedded levels check the affine span and recurse on an
/// injective coordinate projection.
#[derive(Clone, Debug)]
enum Tester {
    Empty,
    Point(RationalVector),
    FullDim(Vec<HalfSpace>),
    Embedded {
        coords: EmbeddedCoords,
        inner: Box<Tester>,
    },
}

impl Tester {
    fn build(vertices: &[RationalVector], ambient: usize) -> Result<Tester> {
        if vertices.is_empty() {
            return Ok(Tester::Empty);
        }
        let (adim, _) = affine_span(vertices);
        if adim == 0 {
            return Ok(Tester::Point(vertices[0].clone()));
        }
        if adim == ambient {
            let hull = convex_hull(vertices)?;
            return Ok(Tester::FullDim(hull.facets.expect("full-dim hull")));
        }
        let coords = EmbeddedCoords::new(vertices, adim)?;
        let projected: Vec<RationalVector> = vertices.iter().map(|p| coords.project(p)).collect();
        let inner = Tester::build(&projected, adim)?;
        Ok(Tester::Embedded {
            coords,
            inner: Box::new(inner),
        })
    }

    fn contains(&self, p: &RationalVector) -> bool {
        match self {
            Tester::Empty => false,
            Tester::Point(q) => p == q,
            Tester::FullDim(facets) => facets.iter().all(|f| f.contains_rational(p)),
            Tester::Embedded { coords, inner } => {
                coords.in_span(p) && inner.contains(&coords.project(p))
            }
        }
    }

    /// Relative-interior membership; for a point the relative interior is
    /// the point itself.
    fn contains_relative_interior(&self, p: &RationalVector) -> bool {
        match self {
            Tester::Empty => false,
            Tester::Point(q) => p == q,
            Tester::FullDim(facets) => facets.iter().all(|f| f.contains_rational_strict(p)),
            Tester::Embedded { coords, inner } => {
                coords.in_span(p) && inner.contains_relative_interior(&coords.project(p))
            }
        }
    }
}

impl LatticePolytope {
    /// Convex hull of lattice points; extracts the minimal vertex set.
    pub fn hull(points: &[LatticeVector]) -> Result<LatticePolytope> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ambient = points[0].dim();
        let rational: Vec<RationalVector> = points.iter().map(|p| p.to_rational()).collect();
        let hull = convex_hull(&rational)?;
        let vertices: Vec<LatticeVector> = hull
            .vertices
            .iter()
            .map(|v| v.to_lattice().expect("hull of lattice points has lattice vertices"))
            .collect();
        let p = LatticePolytope {
            vertices,
            dim: hull.dim,
            ambient,
            facets: OnceLock::new(),
            tester: OnceLock::new(),
        };
        if let Some(f) = hull.facets {
            let _ = p.facets.set(f);
        }
        Ok(p)
    }

    pub fn from_i64(rows: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<LatticeVector> = rows.iter().map(|r| LatticeVector::from_i64(r)).collect();
        LatticePolytope::hull(&pts).expect("nonempty vertex list")
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim == self.ambient as i32
    }

    /// Inward facet halfspaces with offset = ord over the facet normal.
    /// Requires a full-dimensional polytope.
    pub fn facets(&self) -> Result<&[HalfSpace]> {
        if !self.is_full_dim() {
            return Err(Error::NotFullDimensional {
                found: self.dim,
                ambient: self.ambient,
            });
        }
        Ok(self.facets.get_or_init(|| {
            let rational: Vec<RationalVector> =
                self.vertices.iter().map(|p| p.to_rational()).collect();
            convex_hull(&rational)
                .expect("vertices nonempty")
                .facets
                .expect("full-dim")
        }))
    }

    /// Vertices lying on a facet hyperplane.
    pub fn facet_vertices(&self, facet: &HalfSpace) -> Vec<LatticeVector> {
        self.vertices
            .iter()
            .filter(|v| Rat::from_integer(facet.eval_lattice(v)) == facet.offset)
            .cloned()
            .collect()
    }

    fn tester(&self) -> &Tester {
        self.tester.get_or_init(|| {
            let rational: Vec<RationalVector> =
                self.vertices.iter().map(|p| p.to_rational()).collect();
            Tester::build(&rational, self.ambient).expect("tester")
        })
    }

    pub fn contains_lattice(&self, p: &LatticeVector) -> bool {
        self.tester().contains(&p.to_rational())
    }

    pub fn contains_rational(&self, p: &RationalVector) -> bool {
        self.tester().contains(p)
    }

    pub fn to_rational(&self) -> RationalPolytope {
        RationalPolytope::hull(
            &self
                .vertices
                .iter()
                .map(|v| v.to_rational())
                .collect::<Vec<_>>(),
        )
        .expect("nonempty")
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        lattice_points_impl(
            &self.vertices.iter().map(|v| v.to_rational()).collect::<Vec<_>>(),
            self.tester(),
            false,
        )
    }

    /// Lattice points in the relative interior, in lexicographic order.
    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        lattice_points_impl(
            &self.vertices.iter().map(|v| v.to_rational()).collect::<Vec<_>>(),
            self.tester(),
            true,
        )
    }

    pub fn dilate(&self, k: &Int) -> LatticePolytope {
        assert!(k.is_positive(), "dilation factor must be positive");
        let pts: Vec<LatticeVector> = self.vertices.iter().map(|v| v.scale(k)).collect();
        LatticePolytope::hull(&pts).expect("nonempty")
    }

    pub fn translate(&self, t: &LatticeVector) -> LatticePolytope {
        let pts: Vec<LatticeVector> = self.vertices.iter().map(|v| v.add(t)).collect();
        LatticePolytope::hull(&pts).expect("nonempty")
    }

    /// Whether the origin is strictly interior (requires full dimension).
    pub fn origin_interior(&self) -> Result<bool> {
        let facets = self.facets()?;
        Ok(facets.iter().all(|f| f.offset.is_negative()))
    }

    /// The dual polytope { y : <x, y> >= -1 for all x }. Requires 0 in the
    /// interior.
    pub fn dual_polytope(&self) -> Result<RationalPolytope> {
        if !self.origin_interior()? {
            return Err(Error::OriginNotInterior);
        }
        dual_from_vertices(
            &self.vertices.iter().map(|v| v.to_rational()).collect::<Vec<_>>(),
            self.ambient,
        )
    }

    /// conv(dual ∩ N): the integral hull of the dual polytope; may be
    /// lower-dimensional.
    pub fn integral_dual_hull(&self) -> Result<LatticePolytope> {
        let dual = self.dual_polytope()?;
        let pts = dual.lattice_points();
        if pts.is_empty() {
            return Err(Error::Internal("dual polytope has no lattice points"));
        }
        LatticePolytope::hull(&pts)
    }

    /// Reflexivity: every facet lies at lattice distance 1, i.e. offset -1.
    pub fn is_reflexive(&self) -> Result<bool> {
        if !self.origin_interior()? {
            return Err(Error::OriginNotInterior);
        }
        let minus_one = -Rat::one();
        Ok(self.facets()?.iter().all(|f| f.offset == minus_one))
    }

    /// Lattice width and a witness direction. For polytopes of lower
    /// dimension the width is taken within the affine-hull lattice and the
    /// witness is lifted back to the ambient dual lattice.
    pub fn lattice_width(&self) -> Result<(Int, LatticeVector)> {
        lattice_width(self)
    }
}

impl RationalPolytope {
    pub fn empty(ambient: usize) -> RationalPolytope {
        RationalPolytope {
            vertices: vec![],
            dim: -1,
            ambient,
            facets: OnceLock::new(),
            tester: OnceLock::new(),
        }
    }

    /// Convex hull with minimal vertex set; errors on an empty input list
    /// (the empty polytope is constructed explicitly, not via hull).
    pub fn hull(points: &[RationalVector]) -> Result<RationalPolytope> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let ambient = points[0].dim();
        let hull = convex_hull(points)?;
        let p = RationalPolytope {
            vertices: hull.vertices,
            dim: hull.dim,
            ambient,
            facets: OnceLock::new(),
            tester: OnceLock::new(),
        };
        let _ = p.facets.set(hull.facets);
        Ok(p)
    }

    /// Intersection of inward halfspaces, in vertex form. Detects empty
    /// (dim -1) and reports unbounded intersections as a distinct error.
    pub fn from_halfspaces(hs: &[HalfSpace], ambient: usize) -> Result<RationalPolytope> {
        Self::from_halfspaces_hinted(hs, ambient, None)
    }

    /// Same as `from_halfspaces` with a bounding-box hint that must contain
    /// the intersection; the hint only prunes candidate points.
    pub fn from_halfspaces_hinted(
        hs: &[HalfSpace],
        ambient: usize,
        bbox_hint: Option<(&[Int], &[Int])>,
    ) -> Result<RationalPolytope> {
        let points = intersect_halfspaces(hs, ambient, bbox_hint)?;
        if points.is_empty() {
            return Ok(RationalPolytope::empty(ambient));
        }
        RationalPolytope::hull(&points)
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim == self.ambient as i32
    }

    pub fn facets(&self) -> Result<&[HalfSpace]> {
        if !self.is_full_dim() {
            return Err(Error::NotFullDimensional {
                found: self.dim,
                ambient: self.ambient,
            });
        }
        let f = self.facets.get_or_init(|| {
            convex_hull(&self.vertices).expect("nonempty").facets
        });
        Ok(f.as_ref().expect("full-dim"))
    }

    fn tester(&self) -> &Tester {
        self.tester
            .get_or_init(|| Tester::build(&self.vertices, self.ambient).expect("tester"))
    }

    pub fn contains_rational(&self, p: &RationalVector) -> bool {
        self.tester().contains(p)
    }

    pub fn contains_lattice(&self, p: &LatticeVector) -> bool {
        self.tester().contains(&p.to_rational())
    }

    pub fn contains_relative_interior(&self, p: &RationalVector) -> bool {
        self.tester().contains_relative_interior(p)
    }

    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        if self.is_empty() {
            return vec![];
        }
        lattice_points_impl(&self.vertices, self.tester(), false)
    }

    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        if self.is_empty() {
            return vec![];
        }
        lattice_points_impl(&self.vertices, self.tester(), true)
    }

    pub fn dilate(&self, k: &Int) -> RationalPolytope {
        assert!(k.is_positive(), "dilation factor must be positive");
        if self.is_empty() {
            return self.clone();
        }
        let f = Rat::from_integer(k.clone());
        let pts: Vec<RationalVector> = self.vertices.iter().map(|v| v.scale(&f)).collect();
        RationalPolytope::hull(&pts).expect("nonempty")
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| v.is_integral())
    }

    pub fn to_lattice(&self) -> Option<LatticePolytope> {
        if self.is_empty() || !self.is_integral() {
            return None;
        }
        let pts: Vec<LatticeVector> = self
            .vertices
            .iter()
            .map(|v| v.to_lattice().unwrap())
            .collect();
        Some(LatticePolytope::hull(&pts).expect("nonempty"))
    }

    pub fn origin_interior(&self) -> Result<bool> {
        let facets = self.facets()?;
        Ok(facets.iter().all(|f| f.offset.is_negative()))
    }

    pub fn dual_polytope(&self) -> Result<RationalPolytope> {
        if !self.origin_interior()? {
            return Err(Error::OriginNotInterior);
        }
        dual_from_vertices(&self.vertices, self.ambient)
    }
}

fn dual_from_vertices(vertices: &[RationalVector], ambient: usize) -> Result<RationalPolytope> {
    let mut hs = Vec::with_capacity(vertices.len());
    for v in vertices {
        let (scale, prim) = v.primitive_direction()?;
        hs.push(HalfSpace {
            normal: prim,
            offset: -scale.recip(),
        });
    }
    let dual = RationalPolytope::from_halfspaces(&hs, ambient)?;
    if dual.is_empty() {
        return Err(Error::Internal("dual of a polytope with 0 interior is nonempty"));
    }
    Ok(dual)
}

fn lattice_points_impl(
    vertices: &[RationalVector],
    tester: &Tester,
    relative_interior: bool,
) -> Vec<LatticeVector> {
    if vertices.is_empty() {
        return vec![];
    }
    let (lo, hi) = bounding_box(vertices);
    let mut out = Vec::new();
    enumerate_box(&lo, &hi, |p| {
        let q = p.to_rational();
        let inside = if relative_interior {
            tester.contains_relative_interior(&q)
        } else {
            tester.contains(&q)
        };
        if inside {
            out.push(p.clone());
        }
    });
    out
}

/// Intersection of halfspaces as a free function mirroring the hull API.
pub fn vertices_from_halfspaces(hs: &[HalfSpace], ambient: usize) -> Result<RationalPolytope> {
    RationalPolytope::from_halfspaces(hs, ambient)
}

fn width_along(vertices: &[LatticeVector], u: &LatticeVector) -> Int {
    let vals: Vec<Int> = vertices.iter().map(|v| v.dot(u)).collect();
    let min = vals.iter().min().unwrap().clone();
    let max = vals.iter().max().unwrap().clone();
    max - min
}

fn canonical_sign(u: &LatticeVector) -> LatticeVector {
    match u.0.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => u.neg(),
        _ => u.clone(),
    }
}

fn lattice_width(p: &LatticePolytope) -> Result<(Int, LatticeVector)> {
    if p.vertices().is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = p.ambient();
    if p.dim() <= 0 {
        // a single point: width 0 in every direction
        let mut e = vec![Int::zero(); d];
        e[0] = Int::one();
        return Ok((Int::zero(), LatticeVector(e)));
    }
    if (p.dim() as usize) < d {
        return lattice_width_lower_dim(p);
    }
    let verts = p.vertices();
    // upper bound from coordinate axes
    let mut best_w: Option<Int> = None;
    let mut best_u: Option<LatticeVector> = None;
    for j in 0..d {
        let mut e = vec![Int::zero(); d];
        e[j] = Int::one();
        let u = LatticeVector(e);
        let w = width_along(verts, &u);
        if best_w.as_ref().map_or(true, |b| w < *b) {
            best_w = Some(w);
            best_u = Some(u);
        }
    }
    let w0 = best_w.clone().unwrap();
    // three affinely independent difference vectors
    let rational: Vec<RationalVector> = verts.iter().map(|v| v.to_rational()).collect();
    let (_, span) = affine_span(&rational);
    let base = &verts[span[0]];
    let diffs: Vec<LatticeVector> = span[1..].iter().map(|&i| verts[i].sub(base)).collect();
    let m = IntegerMatrix::from_rows(&diffs.iter().map(|v| v.0.clone()).collect::<Vec<_>>());
    let m_inv_exists = !m.det().is_zero();
    if !m_inv_exists {
        return Err(Error::Internal("difference vectors not independent"));
    }
    // search the region |<w_i, u>| <= W0: any direction outside it has
    // width exceeding W0
    let lo = vec![-w0.clone(); d];
    let hi = vec![w0.clone(); d];
    enumerate_box(&lo, &hi, |a| {
        let rhs: Vec<Rat> = a.0.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let u = match crate::matrix::solve_rational(&m, &rhs) {
            Some(u) => RationalVector(u),
            None => return,
        };
        let u = match u.to_lattice() {
            Some(u) => u,
            None => return,
        };
        if u.is_zero() {
            return;
        }
        let u = canonical_sign(&u);
        let w = width_along(verts, &u);
        let better = match (&best_w, &best_u) {
            (Some(bw), Some(bu)) => w < *bw || (w == *bw && u < *bu),
            _ => true,
        };
        if better {
            best_w = Some(w);
            best_u = Some(u);
        }
    });
    Ok((best_w.unwrap(), best_u.unwrap()))
}

/// Width of a lower-dimensional polytope, computed inside its affine-hull
/// lattice; the witness functional is lifted back to the ambient space by a
/// unimodular extension of the saturated hull basis.
fn lattice_width_lower_dim(p: &LatticePolytope) -> Result<(Int, LatticeVector)> {
    let verts = p.vertices();
    let d = p.ambient();
    let k = p.dim() as usize;
    let base = &verts[0];
    let diffs: Vec<Vec<Int>> = verts[1..].iter().map(|v| v.sub(base).0.clone()).collect();
    // saturated basis of the linear span intersected with Z^d
    let diff_matrix = IntegerMatrix::from_rows(&diffs);
    let (s, _, _v) = smith_normal_form(&diff_matrix);
    let r = (0..diff_matrix.rows().min(d))
        .filter(|&i| !s.get(i, i).is_zero())
        .count();
    debug_assert_eq!(r, k);
    // Saturate: equations of the span are the integer kernel of the
    // difference matrix; the span lattice is the kernel of those equations.
    let eqs = crate::matrix::kernel_basis(&diff_matrix);
    let eq_matrix = IntegerMatrix::from_rows(&eqs);
    let basis_rows = crate::matrix::kernel_basis(&eq_matrix);
    debug_assert_eq!(basis_rows.len(), k);
    let basis = IntegerMatrix::from_rows(&basis_rows);
    // coordinates of the polytope in the saturated basis
    let small_verts: Vec<LatticeVector> = verts
        .iter()
        .map(|vtx| {
            let diff: Vec<Rat> = vtx
                .sub(base)
                .0
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect();
            let sol = crate::matrix::solve_rational(&basis.transpose(), &diff)
                .expect("vertex in span");
            RationalVector(sol)
                .to_lattice()
                .expect("saturated basis spans the lattice")
        })
        .collect();
    let small = LatticePolytope::hull(&small_verts)?;
    let (w, u_small) = lattice_width(&small)?;
    // lift: find w_amb with <basis_i, w_amb> = u_small_i and zero on a
    // complement; extend the basis rows to a unimodular matrix.
    let ext = extend_to_unimodular(&basis)?;
    let ext_inv = ext.inverse_unimodular()?;
    let mut rhs: Vec<Int> = u_small.0.clone();
    rhs.resize(d, Int::zero());
    let lifted = LatticeVector(ext_inv.mul_vec(&rhs));
    debug_assert_eq!(width_along(verts, &lifted), w);
    Ok((w, canonical_sign(&lifted)))
}

/// Extends the rows of a saturated k x d basis to a d x d unimodular matrix
/// whose first k rows are the given basis.
fn extend_to_unimodular(basis: &IntegerMatrix) -> Result<IntegerMatrix> {
    let k = basis.rows();
    let d = basis.cols();
    let (s, u, v) = smith_normal_form(basis);
    for i in 0..k {
        if !s.get(i, i).is_one() {
            return Err(Error::Internal("basis is not saturated"));
        }
    }
    // basis = U^{-1} [I 0] V^{-1}; stack with the last d-k rows of V^{-1}
    let _ = u;
    let v_inv = v.inverse_unimodular()?;
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(d);
    for i in 0..k {
        rows.push(basis.row(i));
    }
    for i in k..d {
        rows.push(v_inv.row(i));
    }
    let m = IntegerMatrix::from_rows(&rows);
    if !m.det().abs().is_one() {
        return Err(Error::Internal("unimodular extension failed"));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, rat_int};

    fn lp(rows: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64(rows)
    }

    #[test]
    fn hull_unit_simplex_facets() {
        let p = lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(p.dim(), 3);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().unwrap().len(), 4);
    }

    #[test]
    fn hull_segment() {
        let p = lp(&[&[0, 0, 0], &[1, 0, 0], &[2, 0, 0]]);
        assert_eq!(p.dim(), 1);
        assert_eq!(
            p.vertices(),
            &[
                LatticeVector::from_i64(&[0, 0, 0]),
                LatticeVector::from_i64(&[2, 0, 0])
            ]
        );
        assert_eq!(p.lattice_points().len(), 3);
    }

    #[test]
    fn simplex_547386_contains_origin() {
        let p = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        assert_eq!(p.vertices().len(), 4);
        let with_origin = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1], &[0, 0, 0]]);
        assert_eq!(with_origin.vertices(), p.vertices());
        assert_eq!(p.lattice_points().len(), 5);
        assert_eq!(
            p.interior_lattice_points(),
            vec![LatticeVector::zero(3)]
        );
    }

    #[test]
    fn cube_facets_have_inward_normals() {
        let p = lp(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        let facets = p.facets().unwrap();
        assert_eq!(facets.len(), 6);
        for f in facets {
            assert!(f.offset == rat_int(0) || f.offset == rat_int(-1));
            for v in p.vertices() {
                assert!(f.contains_lattice(v));
            }
        }
    }

    #[test]
    fn dual_of_cross_polytope_is_cube() {
        let p = lp(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        let dual = p.dual_polytope().unwrap();
        assert_eq!(dual.vertices().len(), 8);
        assert!(dual.is_integral());
        for v in dual.vertices() {
            for c in &v.0 {
                assert_eq!(c.clone().abs(), rat_int(1).abs());
            }
        }
        assert!(p.is_reflexive().unwrap());
    }

    #[test]
    fn duality_involution() {
        let p = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        let dual = p.dual_polytope().unwrap();
        let back = dual.dual_polytope().unwrap();
        assert_eq!(back, p.to_rational());
    }

    #[test]
    fn almost_reflexive_dual_has_fractional_vertex() {
        let p = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -2]]);
        assert!(!p.is_reflexive().unwrap());
        let dual = p.dual_polytope().unwrap();
        assert!(!dual.is_integral());
        let idh = p.integral_dual_hull().unwrap();
        assert!(idh.is_reflexive().unwrap());
    }

    #[test]
    fn dilate_counts() {
        let p = lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let d2 = p.dilate(&int(2));
        assert_eq!(d2.lattice_points().len(), 10);
        let d1 = p.dilate(&int(1));
        assert_eq!(d1, p);
    }

    #[test]
    fn halfspace_roundtrip_cube() {
        let p = lp(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        let q = vertices_from_halfspaces(p.facets().unwrap(), 3).unwrap();
        let expect: Vec<RationalVector> = p.vertices().iter().map(|v| v.to_rational()).collect();
        assert_eq!(q.vertices(), &expect[..]);
    }

    #[test]
    fn halfspace_intersection_flat_segment() {
        // x in [0, 1/2], y = 0, z = 0: a rational segment
        let hs = vec![
            HalfSpace {
                normal: LatticeVector::from_i64(&[1, 0, 0]),
                offset: rat_int(0),
            },
            HalfSpace {
                normal: LatticeVector::from_i64(&[-2, 0, 0]),
                offset: rat_int(-1),
            },
            HalfSpace {
                normal: LatticeVector::from_i64(&[0, 1, 0]),
                offset: rat_int(0),
            },
            HalfSpace {
                normal: LatticeVector::from_i64(&[0, -1, 0]),
                offset: rat_int(0),
            },
            HalfSpace {
                normal: LatticeVector::from_i64(&[0, 0, 1]),
                offset: rat_int(0),
            },
            HalfSpace {
                normal: LatticeVector::from_i64(&[0, 0, -1]),
                offset: rat_int(0),
            },
        ];
        let p = vertices_from_halfspaces(&hs, 3).unwrap();
        assert_eq!(p.dim(), 1);
        let expect = vec![
            RationalVector::from_i64_pairs(&[(0, 1), (0, 1), (0, 1)]),
            RationalVector::from_i64_pairs(&[(1, 2), (0, 1), (0, 1)]),
        ];
        assert_eq!(p.vertices(), &expect[..]);
    }

    #[test]
    fn width_of_segment() {
        let p = lp(&[&[0, 0, 0], &[1, 0, 0]]);
        let (w, u) = p.lattice_width().unwrap();
        assert_eq!(w, int(1));
        assert_eq!(u, LatticeVector::from_i64(&[1, 0, 0]));
    }

    #[test]
    fn width_of_hollow_fixtures() {
        let d1 = lp(&[&[0, 0, 0], &[6, 0, 0], &[3, 3, 0], &[4, 0, 2]]);
        assert_eq!(d1.lattice_width().unwrap().0, int(2));
        let d9 = lp(&[&[0, 0, 0], &[3, 0, 0], &[1, 3, 0], &[2, 0, 3]]);
        assert_eq!(d9.lattice_width().unwrap().0, int(3));
    }

    #[test]
    fn rational_hull_dedupes_and_sorts() {
        let pts = vec![
            RationalVector::from_i64_pairs(&[(1, 2), (0, 1)]),
            RationalVector::from_i64_pairs(&[(0, 1), (0, 1)]),
            RationalVector::from_i64_pairs(&[(1, 2), (0, 1)]),
            RationalVector::from_i64_pairs(&[(1, 4), (0, 1)]),
        ];
        let p = RationalPolytope::hull(&pts).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.vertices()[1], RationalVector::from_i64_pairs(&[(1, 2), (0, 1)]));
        let _ = rat(1, 2);
    }
}
