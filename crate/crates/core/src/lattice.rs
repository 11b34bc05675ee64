//! Lattice and rational vectors, the pairing between M and N, basis
//! completion, and affine-lattice normalization onto Z^3.

use crate::arith::{content, Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{hermite_normal_form, kernel_basis, solve_rational, IntegerMatrix};
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// A point of the lattice M (or of its dual N); coordinates are
/// arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<Int>);

/// A point of M_Q or N_Q; each coordinate is kept in lowest terms with a
/// positive denominator (num's canonical form), so equality is
/// coordinate-wise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<Rat>);

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", crate::arith::rat_to_string(c))?;
        }
        write!(f, ")")
    }
}

impl LatticeVector {
    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector(vec![Int::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &LatticeVector) -> Int {
        assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Int) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Division by the gcd of the coordinates.
    pub fn primitive(&self) -> Result<LatticeVector> {
        let g = content(&self.0);
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(LatticeVector(self.0.iter().map(|c| c / &g).collect()))
    }

    pub fn is_primitive(&self) -> bool {
        content(&self.0).is_one()
    }

    pub fn max_abs(&self) -> Int {
        self.0
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }
}

impl RationalVector {
    pub fn from_i64_pairs(coords: &[(i64, i64)]) -> Self {
        RationalVector(coords.iter().map(|&(n, d)| crate::arith::rat(n, d)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &RationalVector) -> Rat {
        assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_lattice(&self, other: &LatticeVector) -> Rat {
        assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * Rat::from_integer(b.clone()))
            .sum()
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Rat) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticeVector> {
        if self.is_integral() {
            Some(LatticeVector(self.0.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    /// Writes the vector as scale * primitive-integer-direction with
    /// scale > 0. Errors on the zero vector.
    pub fn primitive_direction(&self) -> Result<(Rat, LatticeVector)> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let denom_lcm = self
            .0
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Int> = self
            .0
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let g = content(&ints);
        let prim = LatticeVector(ints.iter().map(|c| c / &g).collect());
        Ok((Rat::new(g, denom_lcm), prim))
    }
}

/// The natural pairing M_Q x N_Q -> Q.
pub fn pairing(x: &RationalVector, n: &RationalVector) -> Result<Rat> {
    if x.dim() != n.dim() {
        return Err(Error::DimensionMismatch(x.dim(), n.dim()));
    }
    Ok(x.dot(n))
}

/// Unimodular matrix whose first row is the given primitive vector; the
/// remaining rows descend to a basis of the quotient lattice.
pub fn complete_to_basis(v: &LatticeVector) -> Result<IntegerMatrix> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !v.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let a = IntegerMatrix::from_rows(&[v.0.clone()]);
    let (s, u, vmat) = crate::matrix::smith_normal_form(&a);
    debug_assert!(s.get(0, 0).is_one());
    // u is 1x1 with entry ±1 and  v · vmat = ±e1, so ±v is the first row of
    // vmat^{-1}.
    let mut w = vmat.inverse_unimodular()?;
    if u.get(0, 0).is_negative() {
        for j in 0..w.cols() {
            let x = -w.get(0, j).clone();
            w.set(0, j, x);
        }
    }
    debug_assert_eq!(w.row(0), v.0);
    Ok(w)
}

/// Image of a point under the quotient map M -> M/Zv, using the basis
/// completion W of v: the coordinates of x in the rows of W, with the
/// v-coordinate dropped.
pub fn quotient_coords(w_inv: &IntegerMatrix, x: &LatticeVector) -> LatticeVector {
    let coords = w_inv.vec_mul(&x.0);
    LatticeVector(coords[1..].to_vec())
}

/// A nonempty affine sublattice of Z^dim cut out by one level equation and
/// one congruence.
#[derive(Clone, Debug)]
pub struct AffineLatticeSpec {
    pub dim: usize,
    pub level_coeffs: Vec<Int>,
    pub level_rhs: Int,
    pub congruence_coeffs: Vec<Int>,
    pub modulus: Int,
}

impl AffineLatticeSpec {
    pub fn new_i64(level: &[i64], rhs: i64, congruence: &[i64], modulus: i64) -> Self {
        AffineLatticeSpec {
            dim: level.len(),
            level_coeffs: level.iter().map(|&c| Int::from(c)).collect(),
            level_rhs: Int::from(rhs),
            congruence_coeffs: congruence.iter().map(|&c| Int::from(c)).collect(),
            modulus: Int::from(modulus),
        }
    }

    pub fn contains(&self, p: &LatticeVector) -> bool {
        if p.dim() != self.dim {
            return false;
        }
        let level: Int = p
            .0
            .iter()
            .zip(&self.level_coeffs)
            .map(|(a, b)| a * b)
            .sum();
        if level != self.level_rhs {
            return false;
        }
        let cong: Int = p
            .0
            .iter()
            .zip(&self.congruence_coeffs)
            .map(|(a, b)| a * b)
            .sum();
        cong.mod_floor(&self.modulus).is_zero()
    }
}

/// Affine-lattice isomorphism onto Z^(dim-1), anchored at a base point:
/// ambient = base + coords * basis_rows.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    pub base: LatticeVector,
    /// Rows are a basis of the difference lattice, HNF-reduced.
    pub basis: IntegerMatrix,
}

impl CoordinateMap {
    pub fn to_ambient_lattice(&self, x: &LatticeVector) -> LatticeVector {
        let img = self.basis.vec_mul(&x.0);
        LatticeVector(img.iter().zip(&self.base.0).map(|(a, b)| a + b).collect())
    }

    pub fn to_ambient_rational(&self, x: &RationalVector) -> RationalVector {
        let cols = self.basis.cols();
        let mut out = vec![Rat::zero(); cols];
        for j in 0..cols {
            let mut acc = Rat::from_integer(self.base.0[j].clone());
            for (i, xi) in x.0.iter().enumerate() {
                acc += xi * Rat::from_integer(self.basis.get(i, j).clone());
            }
            out[j] = acc;
        }
        RationalVector(out)
    }

    pub fn from_ambient(&self, p: &LatticeVector) -> Result<LatticeVector> {
        let diff: Vec<Rat> = p
            .0
            .iter()
            .zip(&self.base.0)
            .map(|(a, b)| Rat::from_integer(a - b))
            .collect();
        let bt = self.basis.transpose();
        let sol = solve_rational(&bt, &diff)
            .ok_or(Error::AffineConstraintViolated(format!("{p:?}")))?;
        let v = RationalVector(sol);
        v.to_lattice()
            .ok_or(Error::AffineConstraintViolated(format!("{p:?}")))
    }
}

/// Maps points of the affine lattice onto Z^(dim-1) coordinates via the
/// HNF-reduced basis of the difference lattice anchored at the first point.
/// The returned map transports invariants back to the ambient lattice.
pub fn normalize_affine_lattice(
    spec: &AffineLatticeSpec,
    points: &[LatticeVector],
) -> Result<(Vec<LatticeVector>, CoordinateMap)> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for p in points {
        if !spec.contains(p) {
            return Err(Error::AffineConstraintViolated(format!("{p:?}")));
        }
    }
    // Difference lattice: level equation becomes homogeneous, congruence
    // becomes <c, z> = 0 mod q. Solve <c, z> + q t = 0 jointly with the
    // level equation and drop the auxiliary t column.
    let d = spec.dim;
    let mut level_row: Vec<Int> = spec.level_coeffs.clone();
    level_row.push(Int::zero());
    let mut cong_row: Vec<Int> = spec.congruence_coeffs.clone();
    cong_row.push(spec.modulus.clone());
    let system = IntegerMatrix::from_rows(&[level_row, cong_row]);
    let kernel = kernel_basis(&system);
    let gens: Vec<Vec<Int>> = kernel.iter().map(|k| k[..d].to_vec()).collect();
    let gen_matrix = IntegerMatrix::from_rows(&gens);
    let (hnf, _) = hermite_normal_form(&gen_matrix);
    let mut basis_rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..hnf.rows() {
        let row = hnf.row(i);
        if row.iter().any(|c| !c.is_zero()) {
            basis_rows.push(row);
        }
    }
    let expected = d - 1;
    if basis_rows.len() != expected {
        return Err(Error::AffineRank(basis_rows.len(), expected));
    }
    let map = CoordinateMap {
        base: points[0].clone(),
        basis: IntegerMatrix::from_rows(&basis_rows),
    };
    let images = points
        .iter()
        .map(|p| map.from_ambient(p))
        .collect::<Result<Vec<_>>>()?;
    Ok((images, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn pairing_examples() {
        let x = LatticeVector::from_i64(&[1, 0, 0]).to_rational();
        let n = LatticeVector::from_i64(&[-2, -1, 2]).to_rational();
        assert_eq!(pairing(&x, &n).unwrap(), rat(-2, 1));

        let x = LatticeVector::from_i64(&[2, 3, 8]).to_rational();
        let n = LatticeVector::from_i64(&[-2, -2, 1]).to_rational();
        assert_eq!(pairing(&x, &n).unwrap(), rat(-2, 1));

        let zero = RationalVector::zero(3);
        assert_eq!(pairing(&zero, &n).unwrap(), rat(0, 1));

        let short = RationalVector::zero(2);
        assert!(pairing(&short, &n).is_err());
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(
            LatticeVector::from_i64(&[2, 2, 4]).primitive().unwrap(),
            LatticeVector::from_i64(&[1, 1, 2])
        );
        assert_eq!(
            LatticeVector::from_i64(&[0, 0, -3]).primitive().unwrap(),
            LatticeVector::from_i64(&[0, 0, -1])
        );
        assert_eq!(
            LatticeVector::from_i64(&[5, -4, -15]).primitive().unwrap(),
            LatticeVector::from_i64(&[5, -4, -15])
        );
        assert!(LatticeVector::zero(3).primitive().is_err());
    }

    #[test]
    fn complete_to_basis_examples() {
        let w = complete_to_basis(&LatticeVector::from_i64(&[1, 0, 0])).unwrap();
        assert_eq!(w.row(0), LatticeVector::from_i64(&[1, 0, 0]).0);
        assert!(w.det().abs() == int(1));

        let v = LatticeVector::from_i64(&[1, 1, 2]);
        let w = complete_to_basis(&v).unwrap();
        assert_eq!(w.row(0), v.0);
        assert!(w.det().abs() == int(1));

        let v = LatticeVector::from_i64(&[0, 1, 0]);
        let w = complete_to_basis(&v).unwrap();
        assert_eq!(w.row(0), v.0);
        assert!(w.det().abs() == int(1));

        assert!(complete_to_basis(&LatticeVector::from_i64(&[2, 0, 0])).is_err());
    }

    #[test]
    fn primitive_direction_of_rational() {
        let v = RationalVector::from_i64_pairs(&[(1, 2), (1, 2), (1, 1)]);
        let (scale, prim) = v.primitive_direction().unwrap();
        assert_eq!(prim, LatticeVector::from_i64(&[1, 1, 2]));
        assert_eq!(scale, rat(1, 2));
    }

    #[test]
    fn affine_lattice_rejects_bad_points() {
        let spec = AffineLatticeSpec::new_i64(&[1, 1, 1, 1], 5, &[1, 2, 3, 4], 5);
        let good = LatticeVector::from_i64(&[5, 0, 0, 0]);
        assert!(spec.contains(&good));
        let bad = LatticeVector::from_i64(&[4, 0, 0, 0]);
        assert!(!spec.contains(&bad));
        assert!(normalize_affine_lattice(&spec, &[bad]).is_err());
    }

    #[test]
    fn affine_lattice_roundtrip() {
        let spec = AffineLatticeSpec::new_i64(&[1, 1, 1, 1], 5, &[1, 2, 3, 4], 5);
        let pts = vec![
            LatticeVector::from_i64(&[5, 0, 0, 0]),
            LatticeVector::from_i64(&[0, 5, 0, 0]),
            LatticeVector::from_i64(&[0, 0, 5, 0]),
            LatticeVector::from_i64(&[0, 0, 0, 5]),
        ];
        let (images, map) = normalize_affine_lattice(&spec, &pts).unwrap();
        assert_eq!(images.len(), 4);
        assert_eq!(images[0], LatticeVector::zero(3));
        for (img, orig) in images.iter().zip(&pts) {
            assert_eq!(&map.to_ambient_lattice(img), orig);
        }
    }
}
