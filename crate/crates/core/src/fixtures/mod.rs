//! Embedded reference corpus: the canonical Fano 3-topes with
//! 1-dimensional (asymmetric and symmetric) and 3-dimensional Fine
//! interiors, the twelve maximal hollow 3-topes, and the worked examples on
//! affine lattices.

use crate::arith::rat;
use crate::lattice::{AffineLatticeSpec, LatticeVector, RationalVector};
use crate::polytope::LatticePolytope;
use std::fmt::Write as _;

mod asym;
mod dim3;
mod hollow;
mod sym;

pub use asym::ASYM;
pub use dim3::DIM3;
pub use hollow::HOLLOW;
pub use sym::SYM;

/// Canonical Fano 3-tope with asymmetric 1-dimensional Fine interior.
#[derive(Clone, Copy, Debug)]
pub struct AsymFixture {
    pub id: u32,
    pub vertices: [[i64; 3]; 4],
    pub lambda_: (i64, i64),
    pub v_delta: [i64; 3],
    pub weights: [i64; 4],
    pub facet_normals: [[i64; 3]; 4],
    pub theta_plus: [[i64; 3]; 3],
    pub n_theta_plus: [i64; 3],
    /// Facet of conv(dual ∩ N) containing the origin in its relative
    /// interior.
    pub theta_cap: [[i64; 3]; 3],
    pub supp: &'static [[i64; 3]],
    pub can_extra: &'static [[i64; 3]],
    pub can_drop: &'static [[i64; 3]],
}

/// Canonical Fano 3-tope with symmetric 1-dimensional Fine interior; the
/// canonical hull always equals the polytope itself.
#[derive(Clone, Copy, Debug)]
pub struct SymFixture {
    pub id: u32,
    pub vertices: &'static [[i64; 3]],
    pub lambda_: (i64, i64),
    pub v_delta: [i64; 3],
    /// The two reflexive facets, in unspecified order.
    pub theta_pair: [&'static [[i64; 3]]; 2],
    pub supp: &'static [[i64; 3]],
}

/// Canonical Fano 3-tope with 3-dimensional Fine interior.
#[derive(Clone, Copy, Debug)]
pub struct Dim3Fixture {
    pub id: u32,
    pub vertices: &'static [[i64; 3]],
    pub fi_vertices: &'static [[(i64, i64); 3]],
    pub supp: &'static [[i64; 3]],
    pub can_extra: &'static [[i64; 3]],
    pub can_drop: &'static [[i64; 3]],
    pub pi1: i64,
}

/// Maximal hollow 3-tope.
#[derive(Clone, Copy, Debug)]
pub struct HollowFixture {
    pub index: u32,
    pub vertices: &'static [[i64; 3]],
    pub width: i64,
    pub fi_dim: i32,
    pub fi_vertices: &'static [[(i64, i64); 3]],
    pub pi1: i64,
    pub supp: &'static [[i64; 3]],
    /// Normal-fan rays, where tabulated.
    pub fan_rays: &'static [[i64; 3]],
}

pub fn to_vectors(rows: &[[i64; 3]]) -> Vec<LatticeVector> {
    rows.iter().map(|r| LatticeVector::from_i64(r)).collect()
}

pub fn to_rationals(rows: &[[(i64, i64); 3]]) -> Vec<RationalVector> {
    rows.iter()
        .map(|r| RationalVector(vec![rat(r[0].0, r[0].1), rat(r[1].0, r[1].1), rat(r[2].0, r[2].1)]))
        .collect()
}

fn polytope_from(rows: &[[i64; 3]]) -> LatticePolytope {
    LatticePolytope::hull(&to_vectors(rows)).expect("fixture vertices")
}

fn expected_can(
    vertices: &[[i64; 3]],
    extra: &[[i64; 3]],
    drop: &[[i64; 3]],
) -> Vec<RationalVector> {
    let drops = to_vectors(drop);
    let mut out: Vec<RationalVector> = to_vectors(vertices)
        .into_iter()
        .filter(|v| !drops.contains(v))
        .chain(to_vectors(extra))
        .map(|v| v.to_rational())
        .collect();
    out.sort();
    out.dedup();
    out
}

impl AsymFixture {
    pub fn polytope(&self) -> LatticePolytope {
        polytope_from(&self.vertices)
    }

    pub fn expected_fi(&self) -> Vec<RationalVector> {
        let v = LatticeVector::from_i64(&self.v_delta).to_rational();
        let l = rat(self.lambda_.0, self.lambda_.1);
        let mut out = vec![RationalVector::zero(3), v.scale(&l)];
        out.sort();
        out
    }

    pub fn expected_can(&self) -> Vec<RationalVector> {
        expected_can(&self.vertices, self.can_extra, self.can_drop)
    }
}

impl SymFixture {
    pub fn polytope(&self) -> LatticePolytope {
        polytope_from(self.vertices)
    }

    pub fn expected_fi(&self) -> Vec<RationalVector> {
        let v = LatticeVector::from_i64(&self.v_delta).to_rational();
        let l = rat(self.lambda_.0, self.lambda_.1);
        let mut out = vec![v.scale(&l).neg(), v.scale(&l)];
        out.sort();
        out
    }

    /// The symmetric fixtures obey the lambda law: pi1 = 2 at 1/2 and 3 at
    /// 2/3.
    pub fn expected_pi1(&self) -> i64 {
        if self.lambda_ == (1, 2) {
            2
        } else {
            3
        }
    }
}

impl Dim3Fixture {
    pub fn polytope(&self) -> LatticePolytope {
        polytope_from(self.vertices)
    }

    pub fn expected_fi(&self) -> Vec<RationalVector> {
        let mut out = to_rationals(self.fi_vertices);
        out.sort();
        out
    }

    pub fn expected_can(&self) -> Vec<RationalVector> {
        expected_can(self.vertices, self.can_extra, self.can_drop)
    }
}

impl HollowFixture {
    pub fn polytope(&self) -> LatticePolytope {
        polytope_from(self.vertices)
    }

    pub fn expected_fi(&self) -> Vec<RationalVector> {
        let mut out = to_rationals(self.fi_vertices);
        out.sort();
        out
    }
}

/// The quintic affine-lattice example: level sum 5 with a mod-5 congruence.
pub fn reid_input() -> (AffineLatticeSpec, Vec<LatticeVector>) {
    (
        AffineLatticeSpec::new_i64(&[1, 1, 1, 1], 5, &[1, 2, 3, 4], 5),
        vec![
            LatticeVector::from_i64(&[5, 0, 0, 0]),
            LatticeVector::from_i64(&[0, 5, 0, 0]),
            LatticeVector::from_i64(&[0, 0, 5, 0]),
            LatticeVector::from_i64(&[0, 0, 0, 5]),
        ],
    )
}

/// Weighted sextic example: level m1+m2+m3+2m4 = 6 with a mod-3 congruence;
/// identified with ID 547444.
pub fn kanev_input() -> (AffineLatticeSpec, Vec<LatticeVector>) {
    (
        AffineLatticeSpec::new_i64(&[1, 1, 1, 2], 6, &[0, 1, 2, 0], 3),
        vec![
            LatticeVector::from_i64(&[6, 0, 0, 0]),
            LatticeVector::from_i64(&[0, 6, 0, 0]),
            LatticeVector::from_i64(&[0, 0, 6, 0]),
            LatticeVector::from_i64(&[0, 0, 0, 3]),
        ],
    )
}

/// Weighted octic example: level m1+m2+2m3+2m4 = 8 with a mod-4 congruence;
/// identified with ID 547465.
pub fn todorov_input() -> (AffineLatticeSpec, Vec<LatticeVector>) {
    (
        AffineLatticeSpec::new_i64(&[1, 1, 2, 2], 8, &[0, 3, 1, 3], 4),
        vec![
            LatticeVector::from_i64(&[8, 0, 0, 0]),
            LatticeVector::from_i64(&[0, 8, 0, 0]),
            LatticeVector::from_i64(&[0, 0, 4, 0]),
            LatticeVector::from_i64(&[0, 0, 0, 4]),
        ],
    )
}

/// 4-tope cut from the reflexive 4-simplex by x1 <= 2; its tau iterate
/// reaches the reflexive hull only at the second step.
pub fn truncated_4_simplex() -> LatticePolytope {
    LatticePolytope::from_i64(&[
        &[-1, -1, -1, -1],
        &[-1, 4, -1, -1],
        &[-1, -1, 4, -1],
        &[-1, -1, -1, 4],
        &[2, -1, -1, -1],
        &[2, 1, -1, -1],
        &[2, -1, 1, -1],
        &[2, -1, -1, 1],
    ])
}

/// The reflexive 4-simplex x_i >= -1, sum x_i <= 1.
pub fn reflexive_4_simplex() -> LatticePolytope {
    LatticePolytope::from_i64(&[
        &[-1, -1, -1, -1],
        &[4, -1, -1, -1],
        &[-1, 4, -1, -1],
        &[-1, -1, 4, -1],
        &[-1, -1, -1, 4],
    ])
}

/// ID 547386: the reflexive simplex.
pub fn simplex_547386() -> LatticePolytope {
    LatticePolytope::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]])
}

/// ID 547385: almost reflexive, not reflexive.
pub fn simplex_547385() -> LatticePolytope {
    LatticePolytope::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -2]])
}

/// Stable text rendering of the whole embedded corpus; hashed by the
/// integrity test to guard against transcription drift.
pub fn corpus_digest_input() -> String {
    let mut s = String::new();
    let v3 = |s: &mut String, v: &[i64; 3]| write!(s, "({},{},{})", v[0], v[1], v[2]).unwrap();
    for f in &ASYM {
        write!(s, "asym {} l={}/{} ", f.id, f.lambda_.0, f.lambda_.1).unwrap();
        for v in &f.vertices {
            v3(&mut s, v);
        }
        s.push(';');
        v3(&mut s, &f.v_delta);
        write!(s, " w={:?} n=", f.weights).unwrap();
        for v in &f.facet_normals {
            v3(&mut s, v);
        }
        s.push_str(" th=");
        for v in &f.theta_plus {
            v3(&mut s, v);
        }
        v3(&mut s, &f.n_theta_plus);
        s.push_str(" TH=");
        for v in &f.theta_cap {
            v3(&mut s, v);
        }
        s.push_str(" supp=");
        for v in f.supp {
            v3(&mut s, v);
        }
        s.push_str(" can+");
        for v in f.can_extra {
            v3(&mut s, v);
        }
        s.push_str(" can-");
        for v in f.can_drop {
            v3(&mut s, v);
        }
        s.push('\n');
    }
    for f in &SYM {
        write!(s, "sym {} l={}/{} ", f.id, f.lambda_.0, f.lambda_.1).unwrap();
        for v in f.vertices {
            v3(&mut s, v);
        }
        s.push(';');
        v3(&mut s, &f.v_delta);
        s.push_str(" th0=");
        for v in f.theta_pair[0] {
            v3(&mut s, v);
        }
        s.push_str(" th1=");
        for v in f.theta_pair[1] {
            v3(&mut s, v);
        }
        s.push_str(" supp=");
        for v in f.supp {
            v3(&mut s, v);
        }
        s.push('\n');
    }
    for f in &DIM3 {
        write!(s, "dim3 {} pi1={} ", f.id, f.pi1).unwrap();
        for v in f.vertices {
            v3(&mut s, v);
        }
        s.push_str(" fi=");
        for r in f.fi_vertices {
            write!(
                s,
                "({}/{},{}/{},{}/{})",
                r[0].0, r[0].1, r[1].0, r[1].1, r[2].0, r[2].1
            )
            .unwrap();
        }
        s.push_str(" supp=");
        for v in f.supp {
            v3(&mut s, v);
        }
        s.push_str(" can+");
        for v in f.can_extra {
            v3(&mut s, v);
        }
        s.push_str(" can-");
        for v in f.can_drop {
            v3(&mut s, v);
        }
        s.push('\n');
    }
    for f in &HOLLOW {
        write!(s, "hollow {} w={} dim={} pi1={} ", f.index, f.width, f.fi_dim, f.pi1).unwrap();
        for v in f.vertices {
            v3(&mut s, v);
        }
        s.push_str(" fi=");
        for r in f.fi_vertices {
            write!(
                s,
                "({}/{},{}/{},{}/{})",
                r[0].0, r[0].1, r[1].0, r[1].1, r[2].0, r[2].1
            )
            .unwrap();
        }
        s.push_str(" supp=");
        for v in f.supp {
            v3(&mut s, v);
        }
        s.push_str(" rays=");
        for v in f.fan_rays {
            v3(&mut s, v);
        }
        s.push('\n');
    }
    s
}

/// Frozen SHA-256 of `corpus_digest_input`, stored beside the sources.
pub const CORPUS_SHA256: &str = include_str!("corpus.sha256");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_counts() {
        assert_eq!(ASYM.len(), 9);
        assert_eq!(SYM.len(), 20);
        assert_eq!(DIM3.len(), 49);
        assert_eq!(HOLLOW.len(), 12);
        assert_eq!(DIM3.iter().filter(|f| f.pi1 == 2).count(), 3);
    }

    #[test]
    fn fixture_polytopes_are_canonical_fano() {
        for f in &ASYM {
            let p = f.polytope();
            assert_eq!(p.interior_lattice_points(), vec![LatticeVector::zero(3)], "id {}", f.id);
        }
        for f in &SYM {
            let p = f.polytope();
            assert_eq!(p.interior_lattice_points(), vec![LatticeVector::zero(3)], "id {}", f.id);
        }
        for f in &DIM3 {
            let p = f.polytope();
            assert_eq!(p.interior_lattice_points(), vec![LatticeVector::zero(3)], "id {}", f.id);
        }
        for f in &HOLLOW {
            assert!(f.polytope().interior_lattice_points().is_empty(), "index {}", f.index);
        }
    }

    #[test]
    fn affine_inputs_satisfy_constraints() {
        for (spec, pts) in [reid_input(), kanev_input(), todorov_input()] {
            for p in &pts {
                assert!(spec.contains(p));
            }
        }
    }
}
