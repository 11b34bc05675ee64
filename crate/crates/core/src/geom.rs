//! Exact convex-geometry engine shared by the polytope layer: affine
//! dimension, convex hulls with facet systems, halfspace intersection, and
//! point containment, all over arbitrary-precision rationals with an i128
//! fast path for the hot intersection kernel.

use crate::arith::{ceil_int, content, floor_int, Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, RationalVector};
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

/// Inward halfspace { x : <x, normal> >= offset } with a primitive integer
/// normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: LatticeVector,
    pub offset: Rat,
}

impl HalfSpace {
    pub fn eval_rational(&self, p: &RationalVector) -> Rat {
        p.dot_lattice(&self.normal)
    }

    pub fn contains_rational(&self, p: &RationalVector) -> bool {
        self.eval_rational(p) >= self.offset
    }

    pub fn contains_rational_strict(&self, p: &RationalVector) -> bool {
        self.eval_rational(p) > self.offset
    }

    pub fn eval_lattice(&self, p: &LatticeVector) -> Int {
        p.dot(&self.normal)
    }

    pub fn contains_lattice(&self, p: &LatticeVector) -> bool {
        Rat::from_integer(self.eval_lattice(p)) >= self.offset
    }

    pub fn contains_lattice_strict(&self, p: &LatticeVector) -> bool {
        Rat::from_integer(self.eval_lattice(p)) > self.offset
    }

    pub fn is_tight_rational(&self, p: &RationalVector) -> bool {
        self.eval_rational(p) == self.offset
    }
}

/// Result of a convex hull computation. `facets` is present exactly when the
/// hull is full-dimensional in its ambient space.
#[derive(Clone, Debug)]
pub struct ConvexHull {
    pub dim: i32,
    pub vertices: Vec<RationalVector>,
    pub facets: Option<Vec<HalfSpace>>,
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Clears denominators of a rational vector, returning the integer vector
/// scaled by the lcm of denominators (direction preserved).
fn scale_to_integer(v: &RationalVector) -> Vec<Int> {
    let l = v
        .0
        .iter()
        .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
    v.0.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// Generalized cross product: given d-1 independent integer vectors in
/// dimension d, returns an integer vector orthogonal to all of them
/// (cofactor expansion). Zero iff the inputs are linearly dependent.
fn wedge(rows: &[Vec<Int>], d: usize) -> Vec<Int> {
    debug_assert_eq!(rows.len(), d - 1);
    match d {
        1 => vec![Int::one()],
        2 => vec![-rows[0][1].clone(), rows[0][0].clone()],
        3 => {
            let (a, b) = (&rows[0], &rows[1]);
            vec![
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ]
        }
        _ => {
            // cofactors of the (d-1) x d matrix
            let mut out = Vec::with_capacity(d);
            for j in 0..d {
                let minor: Vec<Vec<Int>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let m = crate::matrix::IntegerMatrix::from_rows(&minor);
                let sign = if j % 2 == 0 { Int::one() } else { -Int::one() };
                out.push(sign * m.det());
            }
            out
        }
    }
}

/// Affine dimension of a point set together with the indices of an affinely
/// independent spanning subset (first entry is the chosen origin).
pub fn affine_span(points: &[RationalVector]) -> (usize, Vec<usize>) {
    if points.is_empty() {
        return (0, vec![]);
    }
    let d = points[0].dim();
    let mut span: Vec<usize> = vec![0];
    let mut basis: Vec<Vec<Rat>> = Vec::new(); // row-reduced difference directions
    for (i, p) in points.iter().enumerate().skip(1) {
        if basis.len() == d {
            break;
        }
        let mut diff: Vec<Rat> = p.sub(&points[0]).0;
        // reduce against current basis
        for b in &basis {
            let lead = b.iter().position(|c| !c.is_zero()).unwrap();
            if !diff[lead].is_zero() {
                let f = &diff[lead] / &b[lead];
                for (x, y) in diff.iter_mut().zip(b) {
                    *x = &*x - &f * y;
                }
            }
        }
        if diff.iter().any(|c| !c.is_zero()) {
            basis.push(diff);
            span.push(i);
        }
    }
    (basis.len(), span)
}

/// Hyperplane through the given point subset, provided the subset is
/// affinely independent and spans a hyperplane: returns the primitive
/// integer normal and the offset.
fn hyperplane_through(points: &[RationalVector], subset: &[usize]) -> Option<(LatticeVector, Rat)> {
    let d = points[subset[0]].dim();
    debug_assert_eq!(subset.len(), d);
    let diffs: Vec<Vec<Int>> = subset[1..]
        .iter()
        .map(|&i| scale_to_integer(&points[i].sub(&points[subset[0]])))
        .collect();
    let n = wedge(&diffs, d);
    if n.iter().all(|c| c.is_zero()) {
        return None;
    }
    let g = content(&n);
    let normal = LatticeVector(n.iter().map(|c| c / &g).collect());
    let offset = points[subset[0]].dot_lattice(&normal);
    Some((normal, offset))
}

/// Facet system of the convex hull of a full-dimensional point set, by
/// supporting-plane enumeration over d-subsets. Exact and insensitive to
/// degeneracies; intended for small point sets.
fn facets_of_full_dim(points: &[RationalVector], d: usize) -> Vec<HalfSpace> {
    let mut seen = std::collections::HashSet::new();
    let mut facets = Vec::new();
    combinations(points.len(), d, |subset| {
        let Some((normal, offset)) = hyperplane_through(points, subset) else {
            return;
        };
        let mut has_above = false;
        let mut has_below = false;
        for p in points {
            match p.dot_lattice(&normal).cmp(&offset) {
                std::cmp::Ordering::Greater => has_above = true,
                std::cmp::Ordering::Less => has_below = true,
                std::cmp::Ordering::Equal => {}
            }
            if has_above && has_below {
                return;
            }
        }
        let (normal, offset) = if has_below {
            (normal.neg(), -offset)
        } else {
            (normal, offset)
        };
        if seen.insert((normal.clone(), offset.clone())) {
            facets.push(HalfSpace { normal, offset });
        }
    });
    facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
    facets
}

/// Keeps the points whose tight facet normals span the full space; those are
/// exactly the vertices.
fn filter_vertices(
    points: Vec<RationalVector>,
    facets: &[HalfSpace],
    d: usize,
) -> Vec<RationalVector> {
    points
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<Int>> = facets
                .iter()
                .filter(|f| f.is_tight_rational(p))
                .map(|f| f.normal.0.clone())
                .collect();
            if tight.len() < d {
                return false;
            }
            crate::matrix::rank(&crate::matrix::IntegerMatrix::from_rows(&tight)) == d
        })
        .collect()
}

fn hull_full_dim(points: &[RationalVector], d: usize) -> (Vec<RationalVector>, Vec<HalfSpace>) {
    let (dim0, seed) = affine_span(points);
    debug_assert_eq!(dim0, d);
    let mut active: Vec<RationalVector> = seed.iter().map(|&i| points[i].clone()).collect();
    let mut facets = facets_of_full_dim(&active, d);
    let seed_set: std::collections::HashSet<usize> = seed.into_iter().collect();
    for (i, p) in points.iter().enumerate() {
        if seed_set.contains(&i) {
            continue;
        }
        if facets.iter().all(|f| f.contains_rational(p)) {
            continue;
        }
        active.push(p.clone());
        facets = facets_of_full_dim(&active, d);
        active = filter_vertices(active, &facets, d);
    }
    active = filter_vertices(active, &facets, d);
    active.sort();
    (active, facets)
}

/// Convex hull of a point set in any ambient dimension <= 4. The vertex list
/// is minimal and sorted; facets are computed when the hull is
/// full-dimensional.
pub fn convex_hull(input: &[RationalVector]) -> Result<ConvexHull> {
    if input.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = input[0].dim();
    for p in input {
        if p.dim() != d {
            return Err(Error::DimensionMismatch(p.dim(), d));
        }
    }
    let mut points: Vec<RationalVector> = input.to_vec();
    points.sort();
    points.dedup();

    let (adim, _) = affine_span(&points);
    if adim == 0 {
        return Ok(ConvexHull {
            dim: 0,
            vertices: vec![points[0].clone()],
            facets: None,
        });
    }
    if adim == 1 {
        // endpoints along the line
        let dir = points[1].sub(&points[0]);
        let t = |p: &RationalVector| -> Rat {
            let diff = p.sub(&points[0]);
            let j = dir.0.iter().position(|c| !c.is_zero()).unwrap();
            &diff.0[j] / &dir.0[j]
        };
        let min = points.iter().min_by_key(|p| t(p)).unwrap().clone();
        let max = points.iter().max_by_key(|p| t(p)).unwrap().clone();
        let mut vertices = vec![min, max];
        vertices.sort();
        let facets = if d == 1 {
            Some(facets_of_full_dim(&vertices, 1))
        } else {
            None
        };
        return Ok(ConvexHull {
            dim: 1,
            vertices,
            facets,
        });
    }
    if adim == d {
        let (vertices, facets) = hull_full_dim(&points, d);
        return Ok(ConvexHull {
            dim: adim as i32,
            vertices,
            facets: Some(facets),
        });
    }
    // Lower-dimensional hull: compute in affine coordinates of the span.
    let embedded = EmbeddedCoords::new(&points, adim)?;
    let projected: Vec<RationalVector> = points.iter().map(|p| embedded.project(p)).collect();
    let (verts_low, _) = hull_full_dim(&projected, adim);
    // map back: a projected vertex corresponds to the original point(s)
    let mut vertices: Vec<RationalVector> = Vec::new();
    for (p, q) in points.iter().zip(&projected) {
        if verts_low.contains(q) {
            vertices.push(p.clone());
        }
    }
    vertices.sort();
    vertices.dedup();
    Ok(ConvexHull {
        dim: adim as i32,
        vertices,
        facets: None,
    })
}

/// Injective linear projection of an affine subspace onto coordinate axes:
/// picks `dim` coordinates such that the restriction to the span is
/// invertible, so convexity and containment questions transfer.
#[derive(Clone, Debug)]
pub struct EmbeddedCoords {
    pub coords: Vec<usize>,
    origin: RationalVector,
    /// Basis of the linear span as rows (rational).
    basis: Vec<RationalVector>,
}

impl EmbeddedCoords {
    pub fn new(points: &[RationalVector], adim: usize) -> Result<Self> {
        let (check, span_idx) = affine_span(points);
        if check != adim {
            return Err(Error::Internal("affine dimension changed"));
        }
        let origin = points[span_idx[0]].clone();
        let basis: Vec<RationalVector> = span_idx[1..]
            .iter()
            .map(|&i| points[i].sub(&origin))
            .collect();
        // choose coordinate subset with invertible minor
        let d = origin.dim();
        let mut chosen: Vec<usize> = Vec::new();
        let mut reduced: Vec<Vec<Rat>> = basis.iter().map(|b| b.0.clone()).collect();
        let mut used_rows: Vec<usize> = Vec::new();
        for col in 0..d {
            if chosen.len() == adim {
                break;
            }
            if let Some(r) = (0..reduced.len())
                .find(|r| !used_rows.contains(r) && !reduced[*r][col].is_zero())
            {
                // eliminate this column from other rows
                for r2 in 0..reduced.len() {
                    if r2 != r && !reduced[r2][col].is_zero() {
                        let f = &reduced[r2][col] / &reduced[r][col];
                        for c in 0..d {
                            reduced[r2][c] = &reduced[r2][c] - &f * &reduced[r][c];
                        }
                    }
                }
                used_rows.push(r);
                chosen.push(col);
            }
        }
        if chosen.len() != adim {
            return Err(Error::Internal("could not choose projection coordinates"));
        }
        Ok(EmbeddedCoords {
            coords: chosen,
            origin,
            basis,
        })
    }

    pub fn project(&self, p: &RationalVector) -> RationalVector {
        RationalVector(self.coords.iter().map(|&j| p.0[j].clone()).collect())
    }

    /// Whether p lies in the affine span: solve for coefficients over the
    /// basis using the chosen coordinates, then verify every coordinate.
    pub fn in_span(&self, p: &RationalVector) -> bool {
        let diff = p.sub(&self.origin);
        let k = self.basis.len();
        let mut coeffs = vec![Rat::zero(); k];
        // system: sum_r coeff_r * basis[r][coords[c]] = diff[coords[c]]
        let mut sys: Vec<Vec<Rat>> = (0..k)
            .map(|c| {
                let mut row: Vec<Rat> = (0..k)
                    .map(|r| self.basis[r].0[self.coords[c]].clone())
                    .collect();
                row.push(diff.0[self.coords[c]].clone());
                row
            })
            .collect();
        for col in 0..k {
            let piv = (col..k).find(|&r| !sys[r][col].is_zero());
            let piv = match piv {
                Some(p) => p,
                None => return false,
            };
            sys.swap(col, piv);
            let dv = sys[col][col].clone();
            for c in col..=k {
                sys[col][c] = &sys[col][c] / &dv;
            }
            for r in 0..k {
                if r != col && !sys[r][col].is_zero() {
                    let f = sys[r][col].clone();
                    for c in col..=k {
                        sys[r][c] = &sys[r][c] - &f * &sys[col][c];
                    }
                }
            }
        }
        for r in 0..k {
            coeffs[r] = sys[r][k].clone();
        }
        // verify reconstruction across all coordinates
        let d = self.origin.dim();
        for j in 0..d {
            let mut acc = Rat::zero();
            for r in 0..k {
                acc += &coeffs[r] * &self.basis[r].0[j];
            }
            if acc != diff.0[j] {
                return false;
            }
        }
        true
    }
}

/// Integer bounding box of a rational point set.
pub fn bounding_box(points: &[RationalVector]) -> (Vec<Int>, Vec<Int>) {
    let d = points[0].dim();
    let mut lo = vec![Int::zero(); d];
    let mut hi = vec![Int::zero(); d];
    for j in 0..d {
        let min = points.iter().map(|p| &p.0[j]).min().unwrap();
        let max = points.iter().map(|p| &p.0[j]).max().unwrap();
        lo[j] = ceil_int(min);
        hi[j] = floor_int(max);
    }
    (lo, hi)
}

/// Lex-ordered iteration over the integer points of a box.
pub fn enumerate_box(lo: &[Int], hi: &[Int], mut f: impl FnMut(&LatticeVector)) {
    let d = lo.len();
    if (0..d).any(|j| lo[j] > hi[j]) {
        return;
    }
    let mut cur: Vec<Int> = lo.to_vec();
    loop {
        f(&LatticeVector(cur.clone()));
        let mut j = d;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if cur[j] < hi[j] {
                cur[j] += 1;
                for k in j + 1..d {
                    cur[k] = lo[k].clone();
                }
                break;
            }
        }
    }
}

/// True iff the integer vectors positively span the ambient space, i.e. the
/// origin is strictly inside their convex hull.
pub fn positively_spans(normals: &[LatticeVector], d: usize) -> bool {
    if normals.is_empty() {
        return false;
    }
    let pts: Vec<RationalVector> = normals.iter().map(|n| n.to_rational()).collect();
    let hull = match convex_hull(&pts) {
        Ok(h) => h,
        Err(_) => return false,
    };
    if hull.dim != d as i32 {
        return false;
    }
    hull.facets
        .as_ref()
        .unwrap()
        .iter()
        .all(|f| f.offset < Rat::zero())
}

/// Feasibility of { x : <x, n_i> >= b_i } by Fourier-Motzkin elimination.
/// Only used when the normals fail to positively span (small systems).
pub fn fourier_motzkin_feasible(constraints: &[(Vec<Rat>, Rat)]) -> bool {
    let d = match constraints.first() {
        Some((n, _)) => n.len(),
        None => return true,
    };
    let mut cs: Vec<(Vec<Rat>, Rat)> = constraints.to_vec();
    for var in (1..d).rev() {
        let mut lower = Vec::new(); // coefficient > 0: x_var >= ...
        let mut upper = Vec::new();
        let mut keep = Vec::new();
        for (n, b) in cs {
            match n[var].numer().sign() {
                num::bigint::Sign::Plus => lower.push((n, b)),
                num::bigint::Sign::Minus => upper.push((n, b)),
                num::bigint::Sign::NoSign => keep.push((n, b)),
            }
        }
        for (ln, lb) in &lower {
            for (un, ub) in &upper {
                // combine to eliminate x_var
                let a = ln[var].clone();
                let c = -un[var].clone();
                let mut n: Vec<Rat> = (0..var)
                    .map(|j| &c * &ln[j] + &a * &un[j])
                    .collect();
                n.resize(var, Rat::zero());
                let b = &c * lb + &a * ub;
                keep.push((n, b));
            }
        }
        for (n, b) in &mut keep {
            n.truncate(var);
            let _ = b;
        }
        cs = keep;
        if cs.len() > 20_000 {
            // inputs this large never reach the elimination path
            return true;
        }
    }
    // one variable left: max lower bound <= min upper bound
    let mut max_lower: Option<Rat> = None;
    let mut min_upper: Option<Rat> = None;
    for (n, b) in &cs {
        let c = &n[0];
        match c.numer().sign() {
            num::bigint::Sign::Plus => {
                let bound = b / c;
                if max_lower.as_ref().map_or(true, |m| bound > *m) {
                    max_lower = Some(bound);
                }
            }
            num::bigint::Sign::Minus => {
                let bound = b / c;
                if min_upper.as_ref().map_or(true, |m| bound < *m) {
                    min_upper = Some(bound);
                }
            }
            num::bigint::Sign::NoSign => {
                if b > &Rat::zero() {
                    return false; // 0 >= b with b > 0
                }
            }
        }
    }
    match (max_lower, min_upper) {
        (Some(lo), Some(hi)) => lo <= hi,
        _ => true,
    }
}

/// Integer-form constraint <x, coeffs> >= rhs used by the intersection
/// kernel (normals scaled so offsets are integers).
struct IntConstraint {
    coeffs: Vec<Int>,
    rhs: Int,
}

fn to_int_constraints(hs: &[HalfSpace]) -> Vec<IntConstraint> {
    hs.iter()
        .map(|h| {
            let q = h.offset.denom().clone();
            IntConstraint {
                coeffs: h.normal.0.iter().map(|c| c * &q).collect(),
                rhs: h.offset.numer().clone(),
            }
        })
        .collect()
}

const FAST_LIMIT: i128 = 1 << 20;

fn to_i128_constraints(cs: &[IntConstraint]) -> Option<Vec<(Vec<i128>, i128)>> {
    let mut out = Vec::with_capacity(cs.len());
    for c in cs {
        let mut coeffs = Vec::with_capacity(c.coeffs.len());
        for v in &c.coeffs {
            let v = v.to_i128()?;
            if v.abs() > FAST_LIMIT {
                return None;
            }
            coeffs.push(v);
        }
        let rhs = c.rhs.to_i128()?;
        if rhs.abs() > FAST_LIMIT {
            return None;
        }
        out.push((coeffs, rhs));
    }
    Some(out)
}

fn det3_i128(m: &[[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// 3D intersection kernel over i128: enumerates tight triples, solves by
/// Cramer, and feasibility-filters. All magnitudes are bounded well below
/// overflow by FAST_LIMIT.
fn intersect_fast_3d(
    cs: &[(Vec<i128>, i128)],
    bbox: Option<(&[Int], &[Int])>,
) -> Option<Vec<RationalVector>> {
    let m = cs.len();
    let bbox128: Option<(Vec<i128>, Vec<i128>)> = match bbox {
        Some((lo, hi)) => {
            let lo: Option<Vec<i128>> = lo.iter().map(|v| v.to_i128()).collect();
            let hi: Option<Vec<i128>> = hi.iter().map(|v| v.to_i128()).collect();
            match (lo, hi) {
                (Some(lo), Some(hi))
                    if lo.iter().chain(hi.iter()).all(|v| v.abs() <= FAST_LIMIT) =>
                {
                    Some((lo, hi))
                }
                _ => return None,
            }
        }
        None => None,
    };
    let mut feasible: std::collections::HashSet<Vec<(i128, i128)>> =
        std::collections::HashSet::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let mat = [
                    [cs[i].0[0], cs[i].0[1], cs[i].0[2]],
                    [cs[j].0[0], cs[j].0[1], cs[j].0[2]],
                    [cs[k].0[0], cs[k].0[1], cs[k].0[2]],
                ];
                let det = det3_i128(&mat);
                if det == 0 {
                    continue;
                }
                let rhs = [cs[i].1, cs[j].1, cs[k].1];
                let mut nums = [0i128; 3];
                for col in 0..3 {
                    let mut mm = mat;
                    for row in 0..3 {
                        mm[row][col] = rhs[row];
                    }
                    nums[col] = det3_i128(&mm);
                }
                let (nums, det) = if det < 0 {
                    ([-nums[0], -nums[1], -nums[2]], -det)
                } else {
                    (nums, det)
                };
                if let Some((lo, hi)) = &bbox128 {
                    let mut out = false;
                    for c in 0..3 {
                        if nums[c] < lo[c] * det || nums[c] > hi[c] * det {
                            out = true;
                            break;
                        }
                    }
                    if out {
                        continue;
                    }
                }
                let ok = cs.iter().all(|(n, b)| {
                    n[0] * nums[0] + n[1] * nums[1] + n[2] * nums[2] >= b * det
                });
                if !ok {
                    continue;
                }
                let key: Vec<(i128, i128)> = nums
                    .iter()
                    .map(|&v| {
                        let g = gcd_i128(v, det).max(1);
                        (v / g, det / g)
                    })
                    .collect();
                feasible.insert(key);
            }
        }
    }
    Some(
        feasible
            .into_iter()
            .map(|coords| {
                RationalVector(
                    coords
                        .into_iter()
                        .map(|(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// General-dimension intersection kernel over BigInt.
fn intersect_general(
    cs: &[IntConstraint],
    d: usize,
    bbox: Option<(&[Int], &[Int])>,
) -> Vec<RationalVector> {
    let m = cs.len();
    let mut feasible: std::collections::HashSet<RationalVector> = std::collections::HashSet::new();
    combinations(m, d, |subset| {
        let a = crate::matrix::IntegerMatrix::from_rows(
            &subset.iter().map(|&i| cs[i].coeffs.clone()).collect::<Vec<_>>(),
        );
        if a.det().is_zero() {
            return;
        }
        let b: Vec<Rat> = subset
            .iter()
            .map(|&i| Rat::from_integer(cs[i].rhs.clone()))
            .collect();
        let x = match crate::matrix::solve_rational(&a, &b) {
            Some(x) => RationalVector(x),
            None => return,
        };
        if let Some((lo, hi)) = bbox {
            for c in 0..d {
                if x.0[c] < Rat::from_integer(lo[c].clone())
                    || x.0[c] > Rat::from_integer(hi[c].clone())
                {
                    return;
                }
            }
        }
        let ok = cs.iter().all(|c| {
            let lhs: Rat = x
                .0
                .iter()
                .zip(&c.coeffs)
                .map(|(xi, ci)| xi * Rat::from_integer(ci.clone()))
                .sum();
            lhs >= Rat::from_integer(c.rhs.clone())
        });
        if ok {
            feasible.insert(x);
        }
    });
    feasible.into_iter().collect()
}

/// Vertices of the intersection of inward halfspaces. `bbox_hint`, when
/// given, must contain the intersection; it only prunes candidates.
///
/// Returns Ok(empty vec) for an empty intersection and Err(Unbounded) when
/// the intersection is nonempty but unbounded.
pub fn intersect_halfspaces(
    hs: &[HalfSpace],
    d: usize,
    bbox_hint: Option<(&[Int], &[Int])>,
) -> Result<Vec<RationalVector>> {
    if hs.is_empty() {
        return Err(Error::EmptyInput);
    }
    // keep the strongest constraint per normal direction
    let mut strongest: std::collections::HashMap<LatticeVector, Rat> =
        std::collections::HashMap::new();
    for h in hs {
        strongest
            .entry(h.normal.clone())
            .and_modify(|b| {
                if h.offset > *b {
                    *b = h.offset.clone();
                }
            })
            .or_insert_with(|| h.offset.clone());
    }
    let mut dedup: Vec<HalfSpace> = strongest
        .into_iter()
        .map(|(normal, offset)| HalfSpace { normal, offset })
        .collect();
    dedup.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));

    let normals: Vec<LatticeVector> = dedup.iter().map(|h| h.normal.clone()).collect();
    if !positively_spans(&normals, d) {
        let cs: Vec<(Vec<Rat>, Rat)> = dedup
            .iter()
            .map(|h| {
                (
                    h.normal
                        .0
                        .iter()
                        .map(|c| Rat::from_integer(c.clone()))
                        .collect(),
                    h.offset.clone(),
                )
            })
            .collect();
        if fourier_motzkin_feasible(&cs) {
            return Err(Error::Unbounded);
        }
        return Ok(vec![]);
    }

    let ics = to_int_constraints(&dedup);
    if d == 3 {
        if let Some(fast) = to_i128_constraints(&ics) {
            if let Some(points) = intersect_fast_3d(&fast, bbox_hint) {
                return Ok(points);
            }
        }
    }
    Ok(intersect_general(&ics, d, bbox_hint))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};

    fn rv(coords: &[i64]) -> RationalVector {
        LatticeVector::from_i64(coords).to_rational()
    }

    #[test]
    fn hull_unit_simplex() {
        let pts = vec![rv(&[0, 0, 0]), rv(&[1, 0, 0]), rv(&[0, 1, 0]), rv(&[0, 0, 1])];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.dim, 3);
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.facets.as_ref().unwrap().len(), 4);
    }

    #[test]
    fn hull_drops_collinear_point() {
        let pts = vec![rv(&[0, 0, 0]), rv(&[1, 0, 0]), rv(&[2, 0, 0])];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.dim, 1);
        assert_eq!(h.vertices, vec![rv(&[0, 0, 0]), rv(&[2, 0, 0])]);
    }

    #[test]
    fn hull_interior_point_dropped() {
        let pts = vec![
            rv(&[1, 0, 0]),
            rv(&[0, 1, 0]),
            rv(&[0, 0, 1]),
            rv(&[-1, -1, -1]),
            rv(&[0, 0, 0]),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertices.len(), 4);
        assert!(!h.vertices.contains(&rv(&[0, 0, 0])));
    }

    #[test]
    fn intersect_cube() {
        let mut hs = Vec::new();
        for axis in 0..3 {
            for sign in [1i64, -1] {
                let mut n = [0i64; 3];
                n[axis] = sign;
                hs.push(HalfSpace {
                    normal: LatticeVector::from_i64(&n),
                    offset: rat_int(if sign == 1 { 0 } else { -1 }),
                });
            }
        }
        let pts = intersect_halfspaces(&hs, 3, None).unwrap();
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.vertices.len(), 8);
        assert_eq!(hull.dim, 3);
    }

    #[test]
    fn intersect_empty_and_unbounded() {
        let bx = |n: [i64; 3], b: i64| HalfSpace {
            normal: LatticeVector::from_i64(&n),
            offset: rat_int(b),
        };
        // box plus inconsistent pair
        let mut hs = vec![
            bx([1, 0, 0], 0),
            bx([-1, 0, 0], -5),
            bx([0, 1, 0], 0),
            bx([0, -1, 0], -5),
            bx([0, 0, 1], 0),
            bx([0, 0, -1], -5),
        ];
        hs.push(bx([1, 0, 0], 1));
        hs.push(bx([-1, 0, 0], 0));
        let out = intersect_halfspaces(&hs, 3, None).unwrap();
        assert!(out.is_empty());

        let open = vec![bx([1, 0, 0], 0), bx([0, 1, 0], 0), bx([0, 0, 1], 0)];
        assert_eq!(intersect_halfspaces(&open, 3, None), Err(Error::Unbounded));
    }

    #[test]
    fn box_enumeration_is_lex() {
        let lo = vec![int(0), int(0)];
        let hi = vec![int(1), int(1)];
        let mut seen = Vec::new();
        enumerate_box(&lo, &hi, |p| seen.push(p.clone()));
        assert_eq!(
            seen,
            vec![
                LatticeVector::from_i64(&[0, 0]),
                LatticeVector::from_i64(&[0, 1]),
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[1, 1]),
            ]
        );
    }

    #[test]
    fn spanning_check() {
        let ns = vec![
            LatticeVector::from_i64(&[1, 0, 0]),
            LatticeVector::from_i64(&[0, 1, 0]),
            LatticeVector::from_i64(&[0, 0, 1]),
            LatticeVector::from_i64(&[-1, -1, -1]),
        ];
        assert!(positively_spans(&ns, 3));
        assert!(!positively_spans(&ns[..3], 3));
    }
}
