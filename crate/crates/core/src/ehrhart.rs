//! Ehrhart data of lattice 3-topes: psi- and phi-vectors, normalized
//! volume, the counting criterion for reflexivity in dimensions 3 and 4,
//! palindromy, and geometric genus.

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::complete_to_basis;
use crate::polytope::LatticePolytope;
use num::{One, Signed, Zero};

/// Counts and derived vectors for a full-dimensional lattice 3-tope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartProfile {
    /// |k Delta ∩ M| for k = 0..=3.
    pub point_counts: [Int; 4],
    /// |(k Delta)° ∩ M| for k = 1, 2.
    pub interior_counts: [Int; 2],
    /// Numerator coefficients of the Ehrhart series.
    pub psi: [Int; 4],
    /// Normalized volume 3! vol = sum of psi.
    pub volume: Int,
}

fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || k > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Counts by enumeration for k = 0..3, psi by the finite-difference
/// transform of the counts, cross-checked against the closed forms and the
/// normalized volume.
pub fn ehrhart_profile(p: &LatticePolytope) -> Result<EhrhartProfile> {
    if p.ambient() != 3 || !p.is_full_dim() {
        return Err(Error::NotFullDimensional {
            found: p.dim(),
            ambient: p.ambient(),
        });
    }
    let mut point_counts = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
    point_counts[0] = Int::one();
    let mut interior_counts = [Int::zero(), Int::zero()];
    for k in 1..=3usize {
        let dilated = p.dilate(&Int::from(k as i64));
        point_counts[k] = Int::from(dilated.lattice_points().len() as i64);
        if k <= 2 {
            interior_counts[k - 1] = Int::from(dilated.interior_lattice_points().len() as i64);
        }
    }
    // P(t) (1-t)^4 = sum psi_j t^j  =>  psi_j = sum_i (-1)^i C(4,i) L(j-i)
    let mut psi = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
    for (j, slot) in psi.iter_mut().enumerate() {
        let mut acc = Int::zero();
        for i in 0..=j {
            let sign = if i % 2 == 0 { Int::one() } else { -Int::one() };
            acc += sign * binomial(4, i as i64) * &point_counts[j - i];
        }
        *slot = acc;
    }
    if psi.iter().any(|c| c.is_negative()) {
        return Err(Error::Internal("negative psi coefficient"));
    }
    // closed forms
    if !psi[0].is_one() {
        return Err(Error::Internal("psi_0 != 1"));
    }
    if psi[1] != &point_counts[1] - Int::from(4) {
        return Err(Error::Internal("psi_1 closed form mismatch"));
    }
    if psi[3] != interior_counts[0] {
        return Err(Error::Internal("psi_3 closed form mismatch"));
    }
    if psi[2] != &interior_counts[1] - Int::from(4) * &interior_counts[0] {
        return Err(Error::Internal("psi_2 closed form mismatch"));
    }
    let volume: Int = psi.iter().sum();
    if volume != normalized_volume(p)? {
        return Err(Error::Internal("psi sum differs from normalized volume"));
    }
    Ok(EhrhartProfile {
        point_counts,
        interior_counts,
        psi,
        volume,
    })
}

/// 3! vol by signed-tetrahedron decomposition over the facet fan from the
/// first vertex.
pub fn normalized_volume(p: &LatticePolytope) -> Result<Int> {
    let apex = &p.vertices()[0];
    let mut total = Int::zero();
    for facet in p.facets()? {
        let cycle = facet_cycle(p, facet)?;
        if cycle.iter().any(|v| v == apex) {
            continue;
        }
        let mut facet_sum = Int::zero();
        for i in 1..cycle.len() - 1 {
            let a = cycle[0].sub(apex);
            let b = cycle[i].sub(apex);
            let c = cycle[i + 1].sub(apex);
            let det = crate::matrix::IntegerMatrix::from_rows(&[a.0, b.0, c.0]).det();
            facet_sum += det;
        }
        total += facet_sum.abs();
    }
    Ok(total)
}

/// Vertices of a facet in boundary cycle order, via lattice coordinates on
/// the facet plane.
pub fn facet_cycle(
    p: &LatticePolytope,
    facet: &crate::polytope::HalfSpace,
) -> Result<Vec<crate::lattice::LatticeVector>> {
    let verts = p.facet_vertices(facet);
    let w = complete_to_basis(&facet.normal)?;
    let origin = &verts[0];
    let planar: Vec<crate::lattice::LatticeVector> = verts
        .iter()
        .map(|v| {
            let coords = w.mul_vec(&v.sub(origin).0);
            crate::lattice::LatticeVector(coords[1..].to_vec())
        })
        .collect();
    let cycle2d = crate::polygon::hull_cycle_2d(&planar);
    let mut out = Vec::with_capacity(cycle2d.len());
    for q in &cycle2d {
        let idx = planar
            .iter()
            .position(|x| x == q)
            .ok_or(Error::Internal("cycle vertex missing"))?;
        out.push(verts[idx].clone());
    }
    Ok(out)
}

/// Reflexivity by lattice-point counting, valid for canonical Fano d-topes
/// with d in {3, 4}: |P ∩ M| = |(2P)° ∩ M|.
pub fn reflexive_by_count(p: &LatticePolytope) -> Result<bool> {
    let d = p.ambient();
    if !(d == 3 || d == 4) || !p.is_full_dim() {
        return Err(Error::NotFullDimensional {
            found: p.dim(),
            ambient: d,
        });
    }
    let interior = p.interior_lattice_points();
    if interior.len() != 1 {
        return Err(Error::NotCanonicalFano(interior.len()));
    }
    let total = p.lattice_points().len();
    let doubled_interior = p.dilate(&Int::from(2)).interior_lattice_points().len();
    Ok(total == doubled_interior)
}

/// psi_i = psi_{d-i} for all i.
pub fn psi_palindrome(profile: &EhrhartProfile) -> bool {
    profile.psi[0] == profile.psi[3] && profile.psi[1] == profile.psi[2]
}

/// phi_0 = 0 and phi_i = psi_{d+1-i} for 1 <= i <= d+1.
pub fn phi_vector(profile: &EhrhartProfile) -> [Int; 5] {
    [
        Int::zero(),
        profile.psi[3].clone(),
        profile.psi[2].clone(),
        profile.psi[1].clone(),
        profile.psi[0].clone(),
    ]
}

/// Geometric genus: the number of interior lattice points.
pub fn geometric_genus(p: &LatticePolytope) -> Int {
    Int::from(p.interior_lattice_points().len() as i64)
}

/// Exact cubic interpolation of the Ehrhart polynomial from the counts at
/// k = 0..3, evaluated at an arbitrary rational argument. Used for the
/// reciprocity checks.
pub fn ehrhart_polynomial_eval(profile: &EhrhartProfile, at: &Rat) -> Rat {
    // Lagrange interpolation on nodes 0, 1, 2, 3
    let mut acc = Rat::zero();
    for (i, li) in profile.point_counts.iter().enumerate() {
        let mut term = Rat::from_integer(li.clone());
        for j in 0..4 {
            if i == j {
                continue;
            }
            let num = at - Rat::from_integer(Int::from(j as i64));
            let den = Rat::from_integer(Int::from(i as i64 - j as i64));
            term = term * num / den;
        }
        acc += term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};

    fn lp(rows: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64(rows)
    }

    #[test]
    fn unit_simplex_profile() {
        let p = lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let e = ehrhart_profile(&p).unwrap();
        assert_eq!(e.psi, [int(1), int(0), int(0), int(0)]);
        assert_eq!(e.volume, int(1));
        assert!(!psi_palindrome(&e));
    }

    #[test]
    fn profile_547386() {
        let p = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        let e = ehrhart_profile(&p).unwrap();
        assert_eq!(e.point_counts[1], int(5));
        assert_eq!(e.interior_counts[1], int(5));
        assert_eq!(e.psi, [int(1), int(1), int(1), int(1)]);
        assert_eq!(e.volume, int(4));
        assert!(psi_palindrome(&e));
        assert!(reflexive_by_count(&p).unwrap());
        assert_eq!(
            phi_vector(&e),
            [int(0), int(1), int(1), int(1), int(1)]
        );
        assert_eq!(geometric_genus(&p), int(1));
    }

    #[test]
    fn profile_547385() {
        let p = lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -2]]);
        let e = ehrhart_profile(&p).unwrap();
        assert_eq!(e.psi[3], int(1));
        assert_eq!(e.psi[1], int(1));
        assert!(!psi_palindrome(&e));
        assert!(!reflexive_by_count(&p).unwrap());
        // psi_2 = |(2P)° ∩ M| - 4
        assert_eq!(e.psi[2], &e.interior_counts[1] - int(4));
    }

    #[test]
    fn reciprocity_at_one_and_two() {
        for p in [
            lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
            lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -2]]),
            lp(&[&[2, 3, 8], &[1, 0, 0], &[0, 1, 0], &[-1, -1, -1]]),
        ] {
            let e = ehrhart_profile(&p).unwrap();
            for k in 1..=2i64 {
                let val = ehrhart_polynomial_eval(&e, &rat_int(-k));
                let expect = -Rat::from_integer(e.interior_counts[(k - 1) as usize].clone());
                assert_eq!(val, expect, "reciprocity at k={k}");
            }
        }
    }

    #[test]
    fn reflexive_4d_criterion() {
        // the 4-simplex x_i >= -1, sum x <= 1 is reflexive; adding the cut
        // x_1 <= 2 breaks it
        let simplex = LatticePolytope::from_i64(&[
            &[-1, -1, -1, -1],
            &[4, -1, -1, -1],
            &[-1, 4, -1, -1],
            &[-1, -1, 4, -1],
            &[-1, -1, -1, 4],
        ]);
        assert!(reflexive_by_count(&simplex).unwrap());
        let cut = LatticePolytope::from_i64(&[
            &[-1, -1, -1, -1],
            &[-1, 4, -1, -1],
            &[-1, -1, 4, -1],
            &[-1, -1, -1, 4],
            &[2, -1, -1, -1],
            &[2, 1, -1, -1],
            &[2, -1, 1, -1],
            &[2, -1, -1, 1],
        ]);
        assert!(!reflexive_by_count(&cut).unwrap());
    }
}
