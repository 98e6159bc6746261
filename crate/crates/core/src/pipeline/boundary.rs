use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, QuadExt, Rational};
use crate::geom::{ParamCurve, ParamSurface, WeightedProjSpace};
use crate::ideals::{forms_through_surface, surface_evaluation_map};
use crate::linalg::Matrix;
use crate::pencil::QuadricPencil;
use crate::poly::{BinaryForm, MultiPoly, UniPoly, WeightVector};
use crate::QuadricForm;

use super::PipelineError;

/// The boundary surface of the orbit closure in the five weight
/// coordinates, parametrized by two affine parameters `(a, b)`. The
/// coordinates are generated by expanding `(x + a y)(x + b y)^11` and
/// reading off the five relevant coefficients; construction verifies the
/// closed forms `55(a+3b)b^2, ..., 55(3a+b)b^8` exactly.
#[derive(Debug, Clone)]
pub struct BoundarySurface {
    surface: ParamSurface<Rational>,
    /// Binomial coefficients `C(11,2), C(11,3), C(11,5)` showing up as
    /// the leading constants.
    pub binomials: (i64, i64, i64),
    /// Homogeneity degree of each coordinate in `(a, b)`.
    pub weight_profile: Vec<i64>,
    /// The middle coefficient of the distinguished degree-12 binary form
    /// at the orbit point, justifying the `-11` shift in the weight-zero
    /// coordinate.
    pub orbit_point_mid_coefficient: Rational,
}

/// The exponent of each retained coefficient of the degree-12 form.
const COORD_EXPONENTS: [u32; 5] = [3, 4, 6, 8, 9];

fn binomial(n: u32, k: u32) -> i64 {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    let q = num / den;
    i64::try_from(&q).expect("small binomial")
}

/// Expands `(x + a y)(x + b y)^11` and extracts the coefficient of
/// `x^(12-i) y^i` as a polynomial in `(a, b)`.
fn expansion_coefficients() -> Vec<MultiPoly<Rational>> {
    // variables (x, y, a, b)
    let x = MultiPoly::<Rational>::variable(4, 0);
    let y = MultiPoly::<Rational>::variable(4, 1);
    let a = MultiPoly::<Rational>::variable(4, 2);
    let b = MultiPoly::<Rational>::variable(4, 3);
    let product = x.add(&a.mul(&y)).mul(&x.add(&b.mul(&y)).pow(11));
    COORD_EXPONENTS
        .iter()
        .map(|&i| {
            let mut coeff = MultiPoly::<Rational>::zero(2);
            for (exps, c) in product.terms() {
                if exps[0] == 12 - i && exps[1] == i {
                    coeff = coeff.add(&MultiPoly::monomial(2, vec![exps[2], exps[3]], c.clone()));
                }
            }
            coeff
        })
        .collect()
}

fn closed_forms() -> Vec<MultiPoly<Rational>> {
    let a = MultiPoly::<Rational>::variable(2, 0);
    let b = MultiPoly::<Rational>::variable(2, 1);
    let lin = |ca: i64, cb: i64| {
        a.scale(&Rational::from(ca)).add(&b.scale(&Rational::from(cb)))
    };
    vec![
        lin(1, 3).mul(&b.pow(2)).scale(&Rational::from(55)),
        lin(1, 2).mul(&b.pow(3)).scale(&Rational::from(165)),
        lin(1, 1).mul(&b.pow(5)).scale(&Rational::from(462)),
        lin(2, 1).mul(&b.pow(7)).scale(&Rational::from(165)),
        lin(3, 1).mul(&b.pow(8)).scale(&Rational::from(55)),
    ]
}

pub fn boundary_surface() -> Result<BoundarySurface, PipelineError> {
    let coords = expansion_coefficients();
    let expected = closed_forms();
    for (i, (got, want)) in coords.iter().zip(&expected).enumerate() {
        if got != want {
            return Err(PipelineError::BoundaryMismatch(format!(
                "coordinate {i}: expansion gave {got:?}"
            )));
        }
    }
    // the distinguished binary form x y (x^10 + 11 x^5 y^5 + y^10) has
    // middle coefficient 11, so the weight-zero coordinate must be
    // shifted by -11 times the affine coordinate to vanish at the orbit
    // point; on the boundary that shift is invisible
    let x = MultiPoly::<Rational>::variable(2, 0);
    let y = MultiPoly::<Rational>::variable(2, 1);
    let phi12 = x.pow(11).mul(&y).add(&x.pow(6).mul(&y.pow(6)).scale(&Rational::from(11)))
        .add(&x.mul(&y.pow(11)));
    let mid = phi12.coefficient(&[6, 6]);
    if mid != Rational::from(11) {
        return Err(PipelineError::BoundaryMismatch(format!(
            "orbit-point middle coefficient is {mid}, expected 11"
        )));
    }
    let weight_profile: Vec<i64> = coords
        .iter()
        .map(|c| {
            c.torus_weight(&WeightVector::new(vec![1, 1]))
                .expect("coordinates are homogeneous in (a, b)")
        })
        .collect();
    if weight_profile != vec![3, 4, 6, 8, 9] {
        return Err(PipelineError::BoundaryMismatch(format!(
            "weight profile {weight_profile:?}"
        )));
    }
    let surface = ParamSurface::new(&WeightedProjSpace::z_space(), coords)?;
    Ok(BoundarySurface {
        surface,
        binomials: (binomial(11, 2), binomial(11, 3), binomial(11, 5)),
        weight_profile,
        orbit_point_mid_coefficient: mid,
    })
}

impl BoundarySurface {
    pub fn surface(&self) -> &ParamSurface<Rational> {
        &self.surface
    }

    /// Centered torus weights of the five coordinates (the homogeneity
    /// degrees shifted by the middle one).
    pub fn centered_weights(&self) -> Vec<i64> {
        let mid = self.weight_profile[2];
        self.weight_profile.iter().map(|w| w - mid).collect()
    }

    /// The unique quadric containing the boundary surface, certified by
    /// a rank computation on the degree-2 evaluation matrix.
    pub fn unique_quadric(&self) -> Result<UniqueQuadric, PipelineError> {
        let map = surface_evaluation_map(&self.surface, 2);
        let kernel = forms_through_surface(&self.surface, 2);
        if kernel.len() != 1 {
            return Err(PipelineError::QuadricSpaceDimension(kernel.len()));
        }
        let quadric = kernel[0].integer_normalized();
        // re-verify by direct substitution
        if !self.surface.vanishes_on(&quadric)? {
            return Err(PipelineError::BoundaryMismatch(
                "kernel generator does not vanish on the surface".into(),
            ));
        }
        Ok(UniqueQuadric {
            quadric,
            monomial_count: map.source_monomials.len(),
            rank: map.rank(),
        })
    }

    /// The image of the diagonal `a = b`: a monomial sextic with
    /// coefficient pattern proportional to `(20 : 45 : 84 : 45 : 20)`.
    pub fn diagonal_image(&self) -> Result<DiagonalImage, PipelineError> {
        let t = MultiPoly::<Rational>::variable(1, 0);
        let images = [t.clone(), t];
        let affine: Vec<UniPoly<Rational>> = self
            .surface
            .coords()
            .iter()
            .map(|c| to_unipoly(&c.substitute(&images).expect("two images")))
            .collect();
        let curve = curve_from_affine_images(&WeightedProjSpace::z_space(), &affine)?;
        let reference = ParamCurve::new(
            &WeightedProjSpace::z_space(),
            [20i64, 45, 84, 45, 20]
                .iter()
                .zip(COORD_EXPONENTS)
                .map(|(&c, e)| {
                    BinaryForm::monomial(6, reduced_exponent(e)).scale(&Rational::from(c))
                })
                .collect(),
        )?;
        let proportional = proportional_curves(&curve, &reference);
        if !proportional {
            return Err(PipelineError::Proportionality(
                "diagonal image does not match the reference sextic".into(),
            ));
        }
        Ok(DiagonalImage { curve, reference })
    }

    /// The two branch substitutions `(a, b) = (-phi^2 t, t)` and
    /// `(a, b) = (t, -phi^2 t)`, both landing on the same sextic curve
    /// over the extension, with the exact proportionality factors.
    pub fn branch_curve(&self) -> Result<BranchCurve, PipelineError> {
        let phi = QuadExt::phi();
        let phi2 = phi.pow(2);
        let t = MultiPoly::<QuadExt>::variable(1, 0);
        let first = [t.scale(&-phi2.clone()), t.clone()];
        let second = [t.clone(), t.scale(&-phi2.clone())];
        let promoted: Vec<MultiPoly<QuadExt>> = self
            .surface
            .coords()
            .iter()
            .map(|c| c.map_coeffs(|q| QuadExt::from_rational(q.clone())))
            .collect();
        let display = display_coordinates();
        // the i-th coordinate of the display, as a polynomial in t
        let display_affine: Vec<UniPoly<QuadExt>> = display
            .iter()
            .zip(COORD_EXPONENTS)
            .map(|(c, e)| {
                UniPoly::from_coeffs(
                    (0..=reduced_exponent(e))
                        .map(|k| if k == reduced_exponent(e) { c.clone() } else { QuadExt::zero() })
                        .collect(),
                )
            })
            .collect();
        // first branch: substituted = display * 11 t^3
        let t3 = UniPoly::from_coeffs(vec![
            QuadExt::zero(),
            QuadExt::zero(),
            QuadExt::zero(),
            QuadExt::from(11),
        ]);
        for (i, coord) in promoted.iter().enumerate() {
            let substituted = to_unipoly(&coord.substitute(&first).expect("two images"));
            if substituted != display_affine[i].mul(&t3) {
                return Err(PipelineError::Proportionality(format!(
                    "first branch, coordinate {i}"
                )));
            }
        }
        // second branch: substituted = display * (-11 phi^10 t^3)
        let factor2 = t3.scale(&-phi.pow(10));
        for (i, coord) in promoted.iter().enumerate() {
            let substituted = to_unipoly(&coord.substitute(&second).expect("two images"));
            if substituted != display_affine[i].mul(&factor2) {
                return Err(PipelineError::Proportionality(format!(
                    "second branch, coordinate {i}"
                )));
            }
        }
        // the two branches are cut out by a^2 + 3ab + b^2, which splits
        // over the extension as (a + phi^2 b)(a + phi^-2 b)
        let residue: BinaryForm<QuadExt> =
            BinaryForm::from_coeffs(vec![QuadExt::one(), QuadExt::from(3), QuadExt::one()]);
        let lin1 = BinaryForm::from_coeffs(vec![QuadExt::one(), phi2.clone()]);
        let lin2 = BinaryForm::from_coeffs(vec![QuadExt::one(), phi2.inv().expect("phi^2 != 0")]);
        if residue != lin1.mul(&lin2) {
            return Err(PipelineError::Proportionality(
                "branch residue does not split as expected".into(),
            ));
        }
        let curve = ParamCurve::new(
            &WeightedProjSpace::z_space(),
            display_affine
                .iter()
                .map(|p| BinaryForm::homogenized(p, 6))
                .collect(),
        )?;
        Ok(BranchCurve {
            curve,
            first_factor_is_11_t3: true,
            second_factor: -phi.pow(10),
        })
    }
}

/// The coordinates of the branch sextic as displayed: nonzero constants
/// `5(3 - phi^2), 15(2 - phi^2), 42(1 - phi^2), 15(1 - 2phi^2),
/// 5(1 - 3phi^2)`.
fn display_coordinates() -> Vec<QuadExt> {
    let phi2 = QuadExt::phi().pow(2);
    let term = |scale: i64, c0: i64, c1: i64| {
        (QuadExt::from(c0) + QuadExt::from(c1) * phi2.clone()) * QuadExt::from(scale)
    };
    vec![
        term(5, 3, -1),
        term(15, 2, -1),
        term(42, 1, -1),
        term(15, 1, -2),
        term(5, 1, -3),
    ]
}

/// Exponent of `t1` in the degree-6 normalization (the affine exponent
/// shifted down by the common factor `t^3`).
fn reduced_exponent(e: u32) -> usize {
    (e - 3) as usize
}

#[derive(Debug, Clone)]
pub struct UniqueQuadric {
    /// Integer-coprime generator of the degree-2 ideal piece.
    pub quadric: MultiPoly<Rational>,
    pub monomial_count: usize,
    pub rank: usize,
}

#[derive(Debug, Clone)]
pub struct DiagonalImage {
    pub curve: ParamCurve<Rational>,
    pub reference: ParamCurve<Rational>,
}

#[derive(Debug, Clone)]
pub struct BranchCurve {
    /// The branch sextic over the extension, in display normalization.
    pub curve: ParamCurve<QuadExt>,
    pub first_factor_is_11_t3: bool,
    /// The ratio between the two branch substitutions: `-phi^10`.
    pub second_factor: QuadExt,
}

/// Outcome of matching the boundary quadric into the pencil through the
/// sextic curve.
#[derive(Debug, Clone)]
pub struct QuadricIdentification {
    /// Per-coordinate scaling relating the weight chart to the curve
    /// chart.
    pub coordinate_change: Vec<QuadExt>,
    /// The common extension-field factor extracted from the substituted
    /// quadric.
    pub common_factor: QuadExt,
    /// The rational quadric left after cancellation, integer-normalized.
    pub rational_quadric: MultiPoly<Rational>,
    /// The pencil parameter, in coprime-integer normalization with a
    /// positive second entry.
    pub pencil_parameter: (Rational, Rational),
    /// The affine parameter `u0 / u1`.
    pub affine_parameter: Rational,
}

/// Matches the branch curve against the standard sextic to build the
/// coordinate change, substitutes it into the boundary quadric, cancels
/// the common extension factor, and expresses the leftover rational
/// quadric in the pencil.
pub fn identify_special_quadric(
    boundary: &BoundarySurface,
    branch: &BranchCurve,
) -> Result<QuadricIdentification, PipelineError> {
    let gamma: ParamCurve<QuadExt> = ParamCurve::sextic_gamma();
    // one scaling per coordinate: c_i * gamma_i = branch_i, solved as an
    // exact one-unknown linear system on coefficient vectors
    let mut coordinate_change = Vec::with_capacity(5);
    for (g, b) in gamma.forms().iter().zip(branch.curve.forms()) {
        let degree = g.degree().expect("nonzero coordinate");
        let column = Matrix::from_fn(degree + 1, 1, |i, _| g.coeff(i));
        let rhs: Vec<QuadExt> = (0..=degree).map(|i| b.coeff(i)).collect();
        let solution = column
            .solve(&rhs)
            .ok_or_else(|| PipelineError::Proportionality("coordinate change".into()))?;
        let c = solution[0].clone();
        if c.is_zero() {
            return Err(PipelineError::Proportionality(
                "vanishing coordinate scaling".into(),
            ));
        }
        coordinate_change.push(c);
    }
    if coordinate_change != display_coordinates() {
        return Err(PipelineError::Proportionality(
            "coordinate change differs from the display constants".into(),
        ));
    }
    // substitute z_i = c_i y_i into the boundary quadric
    let quadric = boundary.unique_quadric()?.quadric;
    let promoted = quadric.map_coeffs(|q| QuadExt::from_rational(q.clone()));
    let images: Vec<MultiPoly<QuadExt>> = coordinate_change
        .iter()
        .enumerate()
        .map(|(i, c)| MultiPoly::variable(5, i).scale(c))
        .collect();
    let substituted = promoted.substitute(&images)?;
    // cancel the common factor: divide by the leading coefficient and
    // demote to rational coefficients
    let lead = substituted
        .leading_coefficient()
        .ok_or_else(|| PipelineError::Proportionality("substituted quadric is zero".into()))?
        .clone();
    let scaled = substituted.scale(&lead.inv().expect("nonzero leading coefficient"));
    let rational = try_demote(&scaled).ok_or(PipelineError::NotRationalAfterScaling)?;
    let rational_quadric = rational.integer_normalized();
    let pencil = QuadricPencil::through_sextic();
    let form = QuadricForm::from_poly(&WeightedProjSpace::y_space(), &rational_quadric)
        .map_err(PipelineError::from)?;
    let (u0, u1) = pencil
        .express_in_pencil(&form)
        .ok_or(PipelineError::NotInPencil)?;
    let (u0, u1) = canonical_parameter_pair(&u0, &u1);
    // the common factor is computed against the canonical member, not
    // assumed: substituted = factor * (u0 Q0 + u1 Qinf)
    let member = pencil.member(&u0, &u1)?.to_poly();
    let member_ext = member.map_coeffs(|q| QuadExt::from_rational(q.clone()));
    let member_lead = member_ext
        .leading_coefficient()
        .expect("member is nonzero")
        .clone();
    let common_factor = lead.checked_div(&member_lead).expect("nonzero leading coefficient");
    if member_ext.scale(&common_factor) != substituted {
        return Err(PipelineError::Proportionality(
            "substituted quadric is not proportional to the pencil member".into(),
        ));
    }
    let affine_parameter = u0.clone().div_exact(&u1);
    Ok(QuadricIdentification {
        coordinate_change,
        common_factor,
        rational_quadric,
        pencil_parameter: (u0, u1),
        affine_parameter,
    })
}

/// Coprime-integer normalization of a projective parameter pair, with the
/// second entry positive (or the first, when the second vanishes).
pub fn canonical_parameter_pair(u0: &Rational, u1: &Rational) -> (Rational, Rational) {
    let lcm = u0.denom().lcm(u1.denom());
    let a = u0.numer() * &lcm / u0.denom();
    let b = u1.numer() * &lcm / u1.denom();
    let mut g = a.gcd(&b);
    if g.is_zero() {
        g = BigInt::one();
    }
    let sign_source = if b.is_zero() { &a } else { &b };
    if sign_source.is_negative() {
        g = -g;
    }
    (
        Rational::from_bigint(a / &g),
        Rational::from_bigint(b / &g),
    )
}

/// A one-variable polynomial view of a `MultiPoly` in one variable.
pub(crate) fn to_unipoly<K: Field>(p: &MultiPoly<K>) -> UniPoly<K> {
    assert_eq!(p.nvars(), 1, "expected a univariate polynomial");
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![K::zero(); deg + 1];
    for (exps, c) in p.terms() {
        coeffs[exps[0] as usize] = c.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

/// Builds the projective curve underlying a tuple of affine images: the
/// common parameter power is stripped and every coordinate is
/// homogenized to the common degree.
pub(crate) fn curve_from_affine_images<K: Field>(
    space: &WeightedProjSpace,
    images: &[UniPoly<K>],
) -> Result<ParamCurve<K>, PipelineError> {
    let valuation = |p: &UniPoly<K>| p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let min_val = images
        .iter()
        .filter(|p| !p.is_zero())
        .map(valuation)
        .min()
        .ok_or_else(|| PipelineError::Proportionality("all images vanish".into()))?;
    let shifted: Vec<UniPoly<K>> = images
        .iter()
        .map(|p| {
            if p.is_zero() {
                p.clone()
            } else {
                UniPoly::from_coeffs(p.coeffs()[min_val..].to_vec())
            }
        })
        .collect();
    let degree = shifted
        .iter()
        .filter_map(UniPoly::degree)
        .max()
        .expect("nonzero image");
    let forms = shifted
        .iter()
        .map(|p| {
            if p.is_zero() {
                BinaryForm::zero()
            } else {
                BinaryForm::homogenized(p, degree)
            }
        })
        .collect();
    Ok(ParamCurve::new(space, forms)?)
}

/// Projective equality of two parametrized curves presented over the
/// same space with the same degree: cross-multiplication of coordinates.
pub(crate) fn proportional_curves<K: Field>(a: &ParamCurve<K>, b: &ParamCurve<K>) -> bool {
    if a.forms().len() != b.forms().len() {
        return false;
    }
    for i in 0..a.forms().len() {
        for j in 0..a.forms().len() {
            let lhs = a.forms()[i].mul(&b.forms()[j]);
            let rhs = a.forms()[j].mul(&b.forms()[i]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn try_demote(p: &MultiPoly<QuadExt>) -> Option<MultiPoly<Rational>> {
    let mut out = MultiPoly::zero(p.nvars());
    for (exps, c) in p.terms() {
        out = out.add(&MultiPoly::monomial(p.nvars(), exps.clone(), c.as_rational()?));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_surface_matches_closed_forms() {
        let b = boundary_surface().unwrap();
        assert_eq!(b.binomials, (55, 165, 462));
        assert_eq!(b.weight_profile, vec![3, 4, 6, 8, 9]);
        assert_eq!(b.centered_weights(), vec![-3, -2, 0, 2, 3]);
        assert_eq!(b.orbit_point_mid_coefficient, Rational::from(11));
    }

    #[test]
    fn unique_quadric_through_the_boundary() {
        let b = boundary_surface().unwrap();
        let uq = b.unique_quadric().unwrap();
        assert_eq!(uq.monomial_count, 15);
        assert_eq!(uq.rank, 14);
        // 1764 z3 z9 - 784 z4 z8 + 125 z6^2
        let z = |i| MultiPoly::<Rational>::variable(5, i);
        let expected = z(0)
            .mul(&z(4))
            .scale(&Rational::from(1764))
            .sub(&z(1).mul(&z(3)).scale(&Rational::from(784)))
            .add(&z(2).mul(&z(2)).scale(&Rational::from(125)));
        assert_eq!(uq.quadric, expected);
    }

    #[test]
    fn diagonal_collapses_to_the_reference_sextic() {
        let b = boundary_surface().unwrap();
        let d = b.diagonal_image().unwrap();
        assert_eq!(d.curve.degree(), 6);
        // the raw diagonal coefficients are 11 times the reference
        let lead = d.curve.forms()[0].coeff(0);
        assert_eq!(lead, Rational::from(220));
    }

    #[test]
    fn branch_curve_factors() {
        let b = boundary_surface().unwrap();
        let branch = b.branch_curve().unwrap();
        assert!(branch.first_factor_is_11_t3);
        assert_eq!(branch.second_factor, -QuadExt::phi().pow(10));
        // the display coordinates of the curve
        let phi2 = QuadExt::phi().pow(2);
        let c0 = branch.curve.forms()[0].coeff(0);
        assert_eq!(c0, (QuadExt::from(3) - phi2) * QuadExt::from(5));
    }

    #[test]
    fn quadric_identification_lands_at_minus_one_quarter() {
        let b = boundary_surface().unwrap();
        let branch = b.branch_curve().unwrap();
        let id = identify_special_quadric(&b, &branch).unwrap();
        assert_eq!(
            id.pencil_parameter,
            (Rational::from(-1), Rational::from(4))
        );
        assert_eq!(id.affine_parameter, Rational::from((-1, 4)));
        // common factor 44100 phi^2
        assert_eq!(
            id.common_factor,
            QuadExt::from(44100) * QuadExt::phi().pow(2)
        );
        // the rational quadric is y0 y6 + 4 y1 y5 - 5 y3^2 up to sign
        let y = |i| MultiPoly::<Rational>::variable(5, i);
        let expected = y(0)
            .mul(&y(4))
            .add(&y(1).mul(&y(3)).scale(&Rational::from(4)))
            .sub(&y(2).mul(&y(2)).scale(&Rational::from(5)));
        assert_eq!(id.rational_quadric, expected);
    }

    #[test]
    fn canonical_pairs() {
        let c = |a: i64, b: i64| canonical_parameter_pair(&Rational::from(a), &Rational::from(b));
        assert_eq!(c(2, -8), (Rational::from(-1), Rational::from(4)));
        assert_eq!(c(1, 0), (Rational::from(1), Rational::from(0)));
        assert_eq!(c(0, -3), (Rational::from(0), Rational::from(1)));
        assert_eq!(c(-2, 0), (Rational::from(1), Rational::from(0)));
        let half = canonical_parameter_pair(&Rational::from((1, 2)), &Rational::from(3));
        assert_eq!(half, (Rational::from(1), Rational::from(6)));
    }
}
