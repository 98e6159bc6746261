use crate::field::Field;
use crate::poly::{BinaryForm, FactorizeOver, MultiPoly};

use super::{GeomError, P1Divisor, ProjPoint, WeightedProjSpace};

/// A rational curve in projective space presented by an exact
/// parametrization: one binary form per coordinate, the nonzero ones of a
/// common degree and with trivial common divisor, so the parametrization
/// hits every point of its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamCurve<K: Field> {
    space: WeightedProjSpace,
    forms: Vec<BinaryForm<K>>,
    degree: usize,
}

impl<K: Field> ParamCurve<K> {
    pub fn new(space: &WeightedProjSpace, forms: Vec<BinaryForm<K>>) -> Result<Self, GeomError> {
        if forms.len() != space.nvars() {
            return Err(GeomError::DimensionMismatch {
                expected: space.nvars(),
                got: forms.len(),
            });
        }
        let mut degree = None;
        for f in forms.iter().filter(|f| !f.is_zero()) {
            let d = f.degree().expect("nonzero form");
            if *degree.get_or_insert(d) != d {
                return Err(GeomError::MixedDegrees);
            }
        }
        let degree = degree.ok_or(GeomError::AllZero)?;
        let mut gcd = BinaryForm::zero();
        for f in forms.iter().filter(|f| !f.is_zero()) {
            gcd = gcd.gcd(f).expect("one side is nonzero");
        }
        if gcd.degree() != Some(0) {
            return Err(GeomError::CommonFactor(gcd.to_text(&["t0", "t1"])));
        }
        Ok(ParamCurve { space: space.clone(), forms, degree })
    }

    /// The monomial curve `(t0:t1) -> (.. : t0^(d - e_i) t1^(e_i) : ..)`
    /// for an increasing exponent sequence ending in the degree `d`.
    pub fn exponent_curve(space: &WeightedProjSpace, exponents: &[u32]) -> Result<Self, GeomError> {
        let d = *exponents.last().expect("nonempty exponent list") as usize;
        let forms = exponents
            .iter()
            .map(|&e| BinaryForm::monomial(d, e as usize))
            .collect();
        ParamCurve::new(space, forms)
    }

    /// The smooth rational sextic
    /// `(t0:t1) -> (t0^6 : t0^5 t1 : t0^3 t1^3 : t0 t1^5 : t1^6)`
    /// in the weighted space with weights `(0, 1, 3, 5, 6)`.
    pub fn sextic_gamma() -> ParamCurve<K> {
        ParamCurve::exponent_curve(&WeightedProjSpace::y_space(), &[0, 1, 3, 5, 6])
            .expect("the sextic parametrization is coprime")
    }

    pub fn space(&self) -> &WeightedProjSpace {
        &self.space
    }

    pub fn forms(&self) -> &[BinaryForm<K>] {
        &self.forms
    }

    /// Degree of the parametrization forms.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn forms_as_polys(&self) -> Vec<MultiPoly<K>> {
        self.forms.iter().map(BinaryForm::to_multipoly).collect()
    }

    /// The image of a parameter value.
    pub fn point_at(&self, t0: &K, t1: &K) -> Result<ProjPoint<K>, GeomError> {
        let coords: Vec<K> = self.forms.iter().map(|f| f.eval(t0, t1)).collect();
        ProjPoint::new(coords)
    }

    /// Pulls a homogeneous form back along the parametrization.
    pub fn pullback(&self, p: &MultiPoly<K>) -> Result<BinaryForm<K>, GeomError> {
        let substituted = p.substitute(&self.forms_as_polys())?;
        Ok(BinaryForm::from_multipoly(&substituted)?)
    }

    pub fn vanishes_on(&self, p: &MultiPoly<K>) -> Result<bool, GeomError> {
        Ok(self.pullback(p)?.is_zero())
    }

    /// Membership of a point in the image, decided by the vanishing of
    /// all 2x2 minors between the parametrization and the point: with
    /// coprime forms the parametrization never degenerates, so a common
    /// root of the minors exists iff the point lies on the curve.
    pub fn contains_point(&self, p: &ProjPoint<K>) -> Result<bool, GeomError> {
        if p.len() != self.forms.len() {
            return Err(GeomError::DimensionMismatch {
                expected: self.forms.len(),
                got: p.len(),
            });
        }
        let mut gcd = BinaryForm::zero();
        for i in 0..self.forms.len() {
            for j in i + 1..self.forms.len() {
                let minor = self.forms[i]
                    .scale(&p.coords()[j])
                    .sub(&self.forms[j].scale(&p.coords()[i]));
                if minor.is_zero() {
                    continue;
                }
                gcd = gcd.gcd(&minor).expect("nonzero side");
                if gcd.degree() == Some(0) {
                    return Ok(false);
                }
            }
        }
        // all minors identically zero cannot happen for a curve of
        // positive degree; a nonconstant gcd certifies a common root
        Ok(true)
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L + Copy) -> ParamCurve<L> {
        ParamCurve {
            space: self.space.clone(),
            forms: self.forms.iter().map(|b| b.map_coeffs(f)).collect(),
            degree: self.degree,
        }
    }
}

impl<K: FactorizeOver> ParamCurve<K> {
    /// The scheme intersection of the curve with the common zero locus of
    /// `cut`, as a divisor on the parameter line: the factorization of
    /// the gcd of the pullbacks. A curve contained in the locus is
    /// reported as an explicit error, not a divisor.
    pub fn intersection_divisor(
        &self,
        cut: &[MultiPoly<K>],
    ) -> Result<P1Divisor<K>, GeomError> {
        let mut gcd = BinaryForm::zero();
        for form in cut {
            let pulled = self.pullback(form)?;
            if pulled.is_zero() {
                continue;
            }
            gcd = gcd.gcd(&pulled).expect("nonzero side");
        }
        if gcd.is_zero() {
            return Err(GeomError::ContainedInSubspace);
        }
        if gcd.degree() == Some(0) {
            return Ok(P1Divisor::from_factors(Vec::new()));
        }
        Ok(P1Divisor::from_factors(gcd.factor()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn gamma() -> ParamCurve<Rational> {
        ParamCurve::sextic_gamma()
    }

    fn var(i: usize) -> MultiPoly<Rational> {
        MultiPoly::variable(5, i)
    }

    #[test]
    fn gamma_lies_on_both_generators() {
        let q0 = var(0).mul(&var(4)).sub(&var(2).mul(&var(2)));
        let qinf = var(2).mul(&var(2)).sub(&var(1).mul(&var(3)));
        assert!(gamma().vanishes_on(&q0).unwrap());
        assert!(gamma().vanishes_on(&qinf).unwrap());
        // but not on a random quadric
        let other = var(0).mul(&var(0));
        assert!(!gamma().vanishes_on(&other).unwrap());
    }

    #[test]
    fn common_factors_are_rejected() {
        let space = WeightedProjSpace::y_space();
        let t0 = BinaryForm::<Rational>::monomial(1, 0);
        let shared: Vec<BinaryForm<Rational>> =
            (0..5).map(|i| t0.pow(2).scale(&Rational::from(i + 1))).collect();
        assert!(matches!(
            ParamCurve::new(&space, shared),
            Err(GeomError::CommonFactor(_))
        ));
    }

    #[test]
    fn tangency_divisors_of_coordinate_lines() {
        // the line {y3 = y5 = y6 = 0} meets the sextic in 3*(1:0)
        let cut = vec![var(2), var(3), var(4)];
        let div = gamma().intersection_divisor(&cut).unwrap();
        assert_eq!(div.total_degree(), 3);
        assert_eq!(div.multiplicity_at(&(Rational::one(), Rational::zero())), 3);
        // and symmetrically {y0 = y1 = y3 = 0} in 3*(0:1)
        let cut = vec![var(0), var(1), var(2)];
        let div = gamma().intersection_divisor(&cut).unwrap();
        assert_eq!(div.total_degree(), 3);
        assert_eq!(div.multiplicity_at(&(Rational::zero(), Rational::one())), 3);
    }

    #[test]
    fn plane_sections_of_degree_five() {
        // y5 - 2 y0 and y6 - 2 y1 cut the divisor of t1^5 - 2 t0^5
        let lam = Rational::from(2);
        let cut = vec![
            var(3).sub(&var(0).scale(&lam)),
            var(4).sub(&var(1).scale(&lam)),
        ];
        let div = gamma().intersection_divisor(&cut).unwrap();
        assert_eq!(div.total_degree(), 5);
        assert!(div.is_squarefree());
    }

    #[test]
    fn containment_is_signalled() {
        let q0 = var(0).mul(&var(4)).sub(&var(2).mul(&var(2)));
        assert!(matches!(
            gamma().intersection_divisor(&[q0]),
            Err(GeomError::ContainedInSubspace)
        ));
    }

    #[test]
    fn point_membership_on_gamma() {
        let p0 = ProjPoint::from_ints(&[1, 0, 0, 0, 0]).unwrap();
        let p6 = ProjPoint::from_ints(&[0, 0, 0, 0, 1]).unwrap();
        let p1 = ProjPoint::from_ints(&[0, 1, 0, 0, 0]).unwrap();
        let p5 = ProjPoint::from_ints(&[0, 0, 0, 1, 0]).unwrap();
        assert!(gamma().contains_point(&p0).unwrap());
        assert!(gamma().contains_point(&p6).unwrap());
        assert!(!gamma().contains_point(&p1).unwrap());
        assert!(!gamma().contains_point(&p5).unwrap());
        // a generic image point is detected as well
        let img = gamma().point_at(&Rational::from(1), &Rational::from(2)).unwrap();
        assert!(gamma().contains_point(&img).unwrap());
    }
}
