use crate::field::Field;
use crate::poly::MultiPoly;

use super::{GeomError, WeightedProjSpace};

/// A surface presented by an exact parametrization in two affine
/// parameters: one polynomial per ambient coordinate, with a declared
/// total-degree bound per coordinate (used to size implicitization
/// targets exactly).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSurface<K: Field> {
    space: WeightedProjSpace,
    coords: Vec<MultiPoly<K>>,
    degree_bounds: Vec<u32>,
}

impl<K: Field> ParamSurface<K> {
    pub fn new(space: &WeightedProjSpace, coords: Vec<MultiPoly<K>>) -> Result<Self, GeomError> {
        if coords.len() != space.nvars() {
            return Err(GeomError::DimensionMismatch {
                expected: space.nvars(),
                got: coords.len(),
            });
        }
        if coords.iter().any(|c| c.nvars() != 2) {
            return Err(GeomError::DimensionMismatch {
                expected: 2,
                got: coords.iter().map(MultiPoly::nvars).max().unwrap_or(0),
            });
        }
        if coords.iter().all(MultiPoly::is_zero) {
            return Err(GeomError::AllZero);
        }
        let degree_bounds = coords
            .iter()
            .map(|c| c.total_degree().unwrap_or(0))
            .collect();
        Ok(ParamSurface { space: space.clone(), coords, degree_bounds })
    }

    pub fn space(&self) -> &WeightedProjSpace {
        &self.space
    }

    pub fn coords(&self) -> &[MultiPoly<K>] {
        &self.coords
    }

    pub fn degree_bounds(&self) -> &[u32] {
        &self.degree_bounds
    }

    /// Substitutes the parametrization into an ambient polynomial,
    /// producing a polynomial in the two parameters.
    pub fn pullback(&self, p: &MultiPoly<K>) -> Result<MultiPoly<K>, GeomError> {
        Ok(p.substitute(&self.coords)?)
    }

    pub fn vanishes_on(&self, p: &MultiPoly<K>) -> Result<bool, GeomError> {
        Ok(self.pullback(p)?.is_zero())
    }

    /// The image of a parameter value.
    pub fn point_at(&self, a: &K, b: &K) -> Result<super::ProjPoint<K>, GeomError> {
        let coords: Result<Vec<K>, _> = self
            .coords
            .iter()
            .map(|c| c.eval(&[a.clone(), b.clone()]))
            .collect();
        super::ProjPoint::new(coords.map_err(GeomError::from)?)
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L + Copy) -> ParamSurface<L> {
        ParamSurface {
            space: self.space.clone(),
            coords: self.coords.iter().map(|c| c.map_coeffs(f)).collect(),
            degree_bounds: self.degree_bounds.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    /// The quotient parametrization `(1 : w1^2 : w1 w2 : w2^2 : w1^2 w2^2)`.
    pub(crate) fn quartic_surface() -> ParamSurface<Rational> {
        let space = WeightedProjSpace::y_space();
        let w1 = MultiPoly::<Rational>::variable(2, 0);
        let w2 = MultiPoly::<Rational>::variable(2, 1);
        ParamSurface::new(
            &space,
            vec![
                MultiPoly::one(2),
                w1.mul(&w1),
                w1.mul(&w2),
                w2.mul(&w2),
                w1.mul(&w1).mul(&w2).mul(&w2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn base_locus_parametrization_lies_on_both_quadrics() {
        let s = quartic_surface();
        assert_eq!(s.degree_bounds(), &[0, 2, 2, 2, 4]);
        let var = |i| MultiPoly::<Rational>::variable(5, i);
        let q0 = var(0).mul(&var(4)).sub(&var(2).mul(&var(2)));
        let qinf = var(2).mul(&var(2)).sub(&var(1).mul(&var(3)));
        assert!(s.vanishes_on(&q0).unwrap());
        assert!(s.vanishes_on(&qinf).unwrap());
        let q1 = q0.add(&qinf);
        assert!(s.vanishes_on(&q1).unwrap());
    }

    #[test]
    fn sign_flip_invariance() {
        let s = quartic_surface();
        let w1 = MultiPoly::<Rational>::variable(2, 0);
        let w2 = MultiPoly::<Rational>::variable(2, 1);
        let flipped = [w1.neg(), w2.neg()];
        for c in s.coords() {
            assert_eq!(c.substitute(&flipped).unwrap(), c.clone());
        }
    }
}
