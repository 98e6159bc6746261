use crate::field::Field;
use crate::linalg::Matrix;
use crate::poly::MultiPoly;

use super::{CoordPermutation, GeomError, LinearSubspace, ProjPoint, WeightedProjSpace};

/// A quadric hypersurface presented by its symmetric Gram matrix: the
/// defining form is `v * M * v^T`, so off-diagonal entries are half the
/// mixed coefficients. Always nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricForm<K: Field> {
    space: WeightedProjSpace,
    gram: Matrix<K>,
}

impl<K: Field> QuadricForm<K> {
    pub fn from_gram(space: &WeightedProjSpace, gram: Matrix<K>) -> Result<Self, GeomError> {
        let n = space.nvars();
        if gram.rows() != n || gram.cols() != n {
            return Err(GeomError::DimensionMismatch { expected: n, got: gram.rows() });
        }
        if !gram.is_symmetric() {
            return Err(GeomError::NotQuadratic);
        }
        if (0..n).all(|i| (0..n).all(|j| gram[(i, j)].is_zero())) {
            return Err(GeomError::AllZero);
        }
        Ok(QuadricForm { space: space.clone(), gram })
    }

    pub fn from_poly(space: &WeightedProjSpace, p: &MultiPoly<K>) -> Result<Self, GeomError> {
        let n = space.nvars();
        if p.nvars() != n {
            return Err(GeomError::DimensionMismatch { expected: n, got: p.nvars() });
        }
        if p.is_zero() {
            return Err(GeomError::AllZero);
        }
        if p.homogeneous_degree() != Some(2) {
            return Err(GeomError::NotQuadratic);
        }
        let half = K::from_int(2).inv().expect("2 is invertible");
        let mut gram = Matrix::zero(n, n);
        for (exps, coeff) in p.terms() {
            let vars: Vec<usize> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect();
            match vars.as_slice() {
                [i] => gram[(*i, *i)] = coeff.clone(),
                [i, j] => {
                    gram[(*i, *j)] = coeff.clone() * half.clone();
                    gram[(*j, *i)] = coeff.clone() * half.clone();
                }
                _ => unreachable!("degree-2 terms touch at most two variables"),
            }
        }
        Ok(QuadricForm { space: space.clone(), gram })
    }

    pub fn space(&self) -> &WeightedProjSpace {
        &self.space
    }

    pub fn gram(&self) -> &Matrix<K> {
        &self.gram
    }

    /// The defining form `v * M * v^T`.
    pub fn to_poly(&self) -> MultiPoly<K> {
        let n = self.space.nvars();
        let mut out = MultiPoly::zero(n);
        for i in 0..n {
            for j in i..n {
                let coeff = if i == j {
                    self.gram[(i, i)].clone()
                } else {
                    self.gram[(i, j)].clone() + self.gram[(j, i)].clone()
                };
                if coeff.is_zero() {
                    continue;
                }
                let mut exps = vec![0u32; n];
                exps[i] += 1;
                exps[j] += 1;
                out = out.add(&MultiPoly::monomial(n, exps, coeff));
            }
        }
        out
    }

    pub fn text(&self) -> String {
        self.space.text(&self.to_poly())
    }

    pub fn vanishes_at(&self, p: &ProjPoint<K>) -> bool {
        p.eval(&self.to_poly()).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn corank(&self) -> usize {
        self.space.nvars() - self.rank()
    }

    pub fn is_smooth(&self) -> bool {
        !self.gram.determinant().is_zero()
    }

    /// The singular locus: the projectivized kernel of the Gram matrix,
    /// or `None` for a smooth quadric.
    pub fn singular_locus(&self) -> Option<LinearSubspace<K>> {
        let kernel = self.gram.kernel_basis();
        if kernel.is_empty() {
            return None;
        }
        let points = kernel
            .into_iter()
            .map(|v| ProjPoint::new(v).expect("kernel basis vectors are nonzero"))
            .collect();
        Some(
            LinearSubspace::from_spanning_points(&self.space, points)
                .expect("kernel basis is independent"),
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self, GeomError> {
        QuadricForm::from_gram(&self.space, self.gram.add(&other.gram))
    }

    pub fn scale(&self, k: &K) -> Result<Self, GeomError> {
        QuadricForm::from_gram(&self.space, self.gram.scale(k))
    }

    pub fn apply_permutation(&self, perm: &CoordPermutation) -> Self {
        let idx = perm.indices();
        let gram = Matrix::from_fn(self.gram.rows(), self.gram.cols(), |i, j| {
            self.gram[(idx[i], idx[j])].clone()
        });
        QuadricForm { space: self.space.clone(), gram }
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> QuadricForm<L> {
        QuadricForm {
            space: self.space.clone(),
            gram: self.gram.map(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn var(i: usize) -> MultiPoly<Rational> {
        MultiPoly::variable(5, i)
    }

    /// y0*y6 - y3^2.
    pub(crate) fn q0_poly() -> MultiPoly<Rational> {
        var(0).mul(&var(4)).sub(&var(2).mul(&var(2)))
    }

    /// y3^2 - y1*y5.
    pub(crate) fn qinf_poly() -> MultiPoly<Rational> {
        var(2).mul(&var(2)).sub(&var(1).mul(&var(3)))
    }

    #[test]
    fn gram_of_first_generator() {
        let space = WeightedProjSpace::y_space();
        let q = QuadricForm::from_poly(&space, &q0_poly()).unwrap();
        let half = Rational::from((1, 2));
        assert_eq!(q.gram()[(0, 4)], half);
        assert_eq!(q.gram()[(4, 0)], half);
        assert_eq!(q.gram()[(2, 2)], Rational::from(-1));
        assert_eq!(q.to_poly(), q0_poly());
        // y3^2 alone is the E_22 matrix
        let y3sq = QuadricForm::from_poly(&space, &var(2).mul(&var(2))).unwrap();
        assert_eq!(y3sq.gram()[(2, 2)], Rational::one());
        assert_eq!(y3sq.rank(), 1);
    }

    #[test]
    fn non_quadratic_inputs_are_rejected() {
        let space = WeightedProjSpace::y_space();
        assert!(matches!(
            QuadricForm::from_poly(&space, &var(0)),
            Err(GeomError::NotQuadratic)
        ));
        assert!(matches!(
            QuadricForm::from_poly(&space, &MultiPoly::<Rational>::zero(5)),
            Err(GeomError::AllZero)
        ));
    }

    #[test]
    fn singular_loci_of_pencil_members() {
        let space = WeightedProjSpace::y_space();
        // rank-4 member y0*y6 - y1*y5: vertex at (0:0:1:0:0)
        let q1 = QuadricForm::from_poly(&space, &q0_poly().add(&qinf_poly())).unwrap();
        let locus = q1.singular_locus().unwrap();
        assert_eq!(locus.dim(), 0);
        assert_eq!(locus.spanning_points()[0].to_string(), "(0 : 0 : 1 : 0 : 0)");
        // the generator itself is singular along the line {y0 = y3 = y6 = 0}
        let q0 = QuadricForm::from_poly(&space, &q0_poly()).unwrap();
        let locus = q0.singular_locus().unwrap();
        assert_eq!(locus.dim(), 1);
        assert!(locus.contains_point(&ProjPoint::from_ints(&[0, 1, 0, 0, 0]).unwrap()));
        assert!(locus.contains_point(&ProjPoint::from_ints(&[0, 0, 0, 1, 0]).unwrap()));
        // a generic member is smooth
        let qgen = QuadricForm::from_poly(
            &space,
            &q0_poly().add(&qinf_poly().scale(&Rational::from(2))),
        )
        .unwrap();
        assert!(qgen.is_smooth());
        assert!(qgen.singular_locus().is_none());
    }

    #[test]
    fn involution_fixes_both_generators() {
        let space = WeightedProjSpace::y_space();
        let perm = CoordPermutation::reversal(5);
        for poly in [q0_poly(), qinf_poly()] {
            let q = QuadricForm::from_poly(&space, &poly).unwrap();
            assert_eq!(q.apply_permutation(&perm), q);
        }
    }
}
