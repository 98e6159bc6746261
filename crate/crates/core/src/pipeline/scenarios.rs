use crate::field::{Field, QuadExt, Rational};
use crate::geom::{
    restrict_to_line, singular_on_family, Family, LinearSubspace, ParamCurve, ParamSurface,
    ProjPoint, QuadricForm, WeightedProjSpace,
};
use crate::ideals::forms_through_curve;
use crate::linalg::Matrix;
use crate::pencil::QuadricPencil;
use crate::poly::{BinaryForm, MultiPoly, WeightVector};

use super::bidegree::{surface_degree_by_bidegree_count, DegreeCert};
use super::boundary::BoundarySurface;
use super::PipelineError;

fn y_var(i: usize) -> MultiPoly<Rational> {
    MultiPoly::variable(5, i)
}

fn z_var(i: usize) -> MultiPoly<Rational> {
    MultiPoly::variable(5, i)
}

/// The 2:1 quotient parametrization of the pencil's base-locus surface:
/// `(w1, w2) -> (1 : w1^2 : w1 w2 : w2^2 : w1^2 w2^2)`.
pub fn quotient_parametrization() -> ParamSurface<Rational> {
    let w1 = MultiPoly::<Rational>::variable(2, 0);
    let w2 = MultiPoly::<Rational>::variable(2, 1);
    ParamSurface::new(
        &WeightedProjSpace::y_space(),
        vec![
            MultiPoly::one(2),
            w1.mul(&w1),
            w1.mul(&w2),
            w2.mul(&w2),
            w1.mul(&w1).mul(&w2).mul(&w2),
        ],
    )
    .expect("quotient parametrization is well formed")
}

/// The second defining equation of the boundary surface, a quintic.
pub fn boundary_quintic() -> MultiPoly<Rational> {
    let z = z_var;
    z(1).mul(&z(1))
        .mul(&z(2))
        .mul(&z(3))
        .mul(&z(3))
        .scale(&Rational::from(32))
        .sub(&z(0).mul(&z(0)).mul(&z(3).pow(3)).scale(&Rational::from(630)))
        .add(
            &z(0)
                .mul(&z(1))
                .mul(&z(2))
                .mul(&z(3))
                .mul(&z(4))
                .scale(&Rational::from(81)),
        )
        .sub(&z(1).pow(3).mul(&z(4)).mul(&z(4)).scale(&Rational::from(630)))
        .add(
            &z(0)
                .mul(&z(0))
                .mul(&z(2))
                .mul(&z(4))
                .mul(&z(4))
                .scale(&Rational::from(2187)),
        )
}

/// Certificate for the singular locus of the boundary surface: the
/// quintic cuts it together with the quadric, and the two coordinate
/// lines, the branch sextic, and the diagonal sextic are all singular on
/// the pair, while a generic surface point is a smooth point.
#[derive(Debug, Clone)]
pub struct SingularLociCert {
    pub quintic_vanishes: bool,
    pub quadric_vanishes: bool,
    /// (locus label, all minors vanish, number of minors checked)
    pub loci: Vec<(String, bool, usize)>,
    /// Jacobian rank of the defining pair at the sample smooth point.
    pub smooth_point_rank: usize,
    pub diagonal_matches_reference: bool,
}

pub fn verify_boundary_singularities(
    boundary: &BoundarySurface,
) -> Result<SingularLociCert, PipelineError> {
    let quadric = boundary.unique_quadric()?.quadric;
    let quintic = boundary_quintic();
    let quintic_vanishes = boundary.surface().vanishes_on(&quintic)?;
    let quadric_vanishes = boundary.surface().vanishes_on(&quadric)?;
    let equations = [quadric.clone(), quintic.clone()];
    let space = WeightedProjSpace::z_space();
    let mut loci = Vec::new();

    // the two coordinate lines
    let line_low = ParamCurve::new(
        &space,
        vec![
            BinaryForm::monomial(1, 0),
            BinaryForm::monomial(1, 1),
            BinaryForm::zero(),
            BinaryForm::zero(),
            BinaryForm::zero(),
        ],
    )?;
    let line_high = ParamCurve::new(
        &space,
        vec![
            BinaryForm::zero(),
            BinaryForm::zero(),
            BinaryForm::zero(),
            BinaryForm::monomial(1, 0),
            BinaryForm::monomial(1, 1),
        ],
    )?;
    for (label, line) in [("line z9=z8=z6=0", &line_low), ("line z6=z4=z3=0", &line_high)] {
        let cert = singular_on_family(&equations, &Family::Curve(line), 2)?;
        loci.push((label.to_string(), cert.singular, cert.minors_checked));
    }

    // the branch sextic over the extension
    let branch = boundary.branch_curve()?;
    let promoted: Vec<MultiPoly<QuadExt>> = equations
        .iter()
        .map(|e| e.map_coeffs(|c| QuadExt::from_rational(c.clone())))
        .collect();
    let cert = singular_on_family(&promoted, &Family::Curve(&branch.curve), 2)?;
    loci.push(("branch sextic".to_string(), cert.singular, cert.minors_checked));

    // the diagonal sextic
    let diagonal = boundary.diagonal_image()?;
    let cert = singular_on_family(&equations, &Family::Curve(&diagonal.reference), 2)?;
    loci.push(("diagonal sextic".to_string(), cert.singular, cert.minors_checked));

    // a generic point of the surface is smooth on the pair: the Jacobian
    // has full rank 2 there
    let sample = boundary
        .surface()
        .point_at(&Rational::from(1), &Rational::from(2))?;
    let jac = Matrix::from_fn(2, 5, |i, j| sample.eval(&equations[i].partial(j)));
    let smooth_point_rank = jac.rank();

    Ok(SingularLociCert {
        quintic_vanishes,
        quadric_vanishes,
        loci,
        smooth_point_rank,
        diagonal_matches_reference: true,
    })
}

/// Certificate for the base-locus surface of the pencil: containment of
/// the quotient parametrization, its sign-flip invariance, the four
/// singular points, the four lines, the curve's tangency pattern, and
/// the degree count.
#[derive(Debug, Clone)]
pub struct BaseLocusCert {
    pub parametrization_contained: bool,
    pub sign_flip_invariant: bool,
    /// (point display, lies on both quadrics, Jacobian rank drops)
    pub singular_points: Vec<(String, bool, bool)>,
    /// (coordinate pair, both generators restrict to zero)
    pub lines: Vec<((usize, usize), bool)>,
    /// (point display, lies on the sextic curve)
    pub curve_membership: Vec<(String, bool)>,
    /// (coordinate pair, divisor display, total degree, multiplicity)
    pub tangency: Vec<((usize, usize), String, usize, u32)>,
    pub degree: DegreeCert,
}

pub fn verify_base_locus_surface() -> Result<BaseLocusCert, PipelineError> {
    let pencil = QuadricPencil::through_sextic();
    let space = WeightedProjSpace::y_space();
    let surface = quotient_parametrization();
    let gamma: ParamCurve<Rational> = ParamCurve::sextic_gamma();

    let parametrization_contained = pencil.base_locus_contains_surface(&surface)?;

    let w1 = MultiPoly::<Rational>::variable(2, 0);
    let w2 = MultiPoly::<Rational>::variable(2, 1);
    let flipped = [w1.neg(), w2.neg()];
    let sign_flip_invariant = surface
        .coords()
        .iter()
        .all(|c| c.substitute(&flipped).expect("two images") == c.clone());

    // the four torus-fixed coordinate points are the singular points
    let generators = [pencil.q0().to_poly(), pencil.qinf().to_poly()];
    let mut singular_points = Vec::new();
    for idx in [0usize, 1, 3, 4] {
        let p: ProjPoint<Rational> = ProjPoint::coordinate(5, idx);
        let on_f = pencil.base_locus_contains_point(&p);
        let jac = Matrix::from_fn(2, 5, |i, j| p.eval(&generators[i].partial(j)));
        singular_points.push((p.to_string(), on_f, jac.rank() < 2));
    }

    // the four lines of the surface
    let mut lines = Vec::new();
    for (i, j) in [(0usize, 1usize), (1, 4), (4, 3), (3, 0)] {
        let line = LinearSubspace::coordinate_line(&space, i, j);
        let restricted = restrict_to_line(&generators, &line)?;
        lines.push(((i, j), restricted.iter().all(BinaryForm::is_zero)));
    }

    // curve membership at the four points
    let mut curve_membership = Vec::new();
    for idx in [0usize, 4, 1, 3] {
        let p: ProjPoint<Rational> = ProjPoint::coordinate(5, idx);
        curve_membership.push((p.to_string(), gamma.contains_point(&p)?));
    }

    // triple tangency along the two extreme lines
    let mut tangency = Vec::new();
    for (i, j) in [(0usize, 1usize), (4, 3)] {
        let line = LinearSubspace::coordinate_line(&space, i, j);
        let divisor = gamma.intersection_divisor(&line.cutting_forms())?;
        let mult = divisor
            .factors()
            .iter()
            .map(|(_, m)| *m)
            .max()
            .unwrap_or(0);
        tangency.push(((i, j), divisor.to_string(), divisor.total_degree(), mult));
    }

    let degree = surface_degree_by_bidegree_count()?;

    Ok(BaseLocusCert {
        parametrization_contained,
        sign_flip_invariant,
        singular_points,
        lines,
        curve_membership,
        tangency,
        degree,
    })
}

/// Certificate for the rank-4 degeneration: the sum of the generators is
/// a cone, its vertex sits off the base locus and the curve, and the
/// plane pencil inside the cone slices the sextic in five distinct
/// points while avoiding the tangency lines.
#[derive(Debug, Clone)]
pub struct ConeCert {
    pub sum_is_rank_four_cone: bool,
    pub vertex: String,
    pub vertex_corank: usize,
    pub vertex_on_base_locus: bool,
    pub vertex_on_curve: bool,
    /// `Pi_lambda` lies in the cone as a polynomial identity in lambda.
    pub plane_in_cone: bool,
    /// The vertex lies on every plane of the pencil.
    pub plane_through_vertex: bool,
    /// Both pullbacks factor as the parameter times a common quintic,
    /// identically in lambda.
    pub section_factorization: bool,
    /// (lambda, section degree, squarefree)
    pub sample_sections: Vec<(i64, usize, bool)>,
    /// (lambda, meets the low tangent line, meets the high tangent line)
    pub tangent_line_meets: Vec<(i64, bool, bool)>,
}

pub fn verify_cone_degeneration() -> Result<ConeCert, PipelineError> {
    let pencil = QuadricPencil::through_sextic();
    let space = WeightedProjSpace::y_space();
    let gamma: ParamCurve<Rational> = ParamCurve::sextic_gamma();

    let member = pencil.member(&Rational::from(1), &Rational::from(1))?;
    let cone_poly = y_var(0).mul(&y_var(4)).sub(&y_var(1).mul(&y_var(3)));
    let sum_is_rank_four_cone = member.to_poly() == cone_poly && member.rank() == 4;

    let locus = member.singular_locus().expect("the cone is singular");
    let vertex = locus.spanning_points()[0].clone();
    let vertex_corank = member.corank();
    let vertex_on_base_locus = pencil.base_locus_contains_point(&vertex);
    let vertex_on_curve = gamma.contains_point(&vertex)?;

    // symbolic plane pencil: parameters (s, t, r) and lambda as a fourth
    // variable; the plane is (s : t : r : lambda s : lambda t)
    let s = MultiPoly::<Rational>::variable(4, 0);
    let t = MultiPoly::<Rational>::variable(4, 1);
    let r = MultiPoly::<Rational>::variable(4, 2);
    let lam = MultiPoly::<Rational>::variable(4, 3);
    let plane_images = vec![
        s.clone(),
        t.clone(),
        r,
        lam.mul(&s),
        lam.mul(&t),
    ];
    let plane_in_cone = cone_poly.substitute(&plane_images)?.is_zero();
    // at (s, t, r) = (0, 0, 1) the plane passes through the vertex for
    // every lambda
    let plane_through_vertex = {
        let coords: Vec<MultiPoly<Rational>> = plane_images
            .iter()
            .map(|c| {
                c.substitute(&[
                    MultiPoly::zero(1),
                    MultiPoly::zero(1),
                    MultiPoly::one(1),
                    MultiPoly::variable(1, 0),
                ])
                .expect("four images")
            })
            .collect();
        coords[0].is_zero()
            && coords[1].is_zero()
            && coords[2] == MultiPoly::one(1)
            && coords[3].is_zero()
            && coords[4].is_zero()
    };

    // pullbacks of the plane's cutting forms along the curve, with
    // lambda symbolic: variables (t0, t1, lambda)
    let t0 = MultiPoly::<Rational>::variable(3, 0);
    let t1 = MultiPoly::<Rational>::variable(3, 1);
    let lam3 = MultiPoly::<Rational>::variable(3, 2);
    let curve_images: Vec<MultiPoly<Rational>> = [6u32, 5, 3, 1, 0]
        .iter()
        .map(|&e| t0.pow(e).mul(&t1.pow(6 - e)))
        .collect();
    let cut1 = y_var(3).sub(&y_var(0).mul(&MultiPoly::variable(5, 0)).mul(&MultiPoly::one(5)));
    let _ = cut1; // the symbolic cut is assembled directly below
    let pull1 = curve_images[3].sub(&lam3.mul(&curve_images[0]));
    let pull2 = curve_images[4].sub(&lam3.mul(&curve_images[1]));
    let quintic = t1.pow(5).sub(&lam3.mul(&t0.pow(5)));
    let section_factorization =
        pull1 == t0.mul(&quintic) && pull2 == t1.mul(&quintic);

    // numeric spot checks where factorization over the rationals is
    // available
    let mut sample_sections = Vec::new();
    let mut tangent_line_meets = Vec::new();
    for lambda in [2i64, 3] {
        let lam_k = Rational::from(lambda);
        let cut = vec![
            y_var(3).sub(&y_var(0).scale(&lam_k)),
            y_var(4).sub(&y_var(1).scale(&lam_k)),
        ];
        let divisor = gamma.intersection_divisor(&cut)?;
        sample_sections.push((lambda, divisor.total_degree(), divisor.is_squarefree()));

        let plane = LinearSubspace::from_cutting_forms(
            &space,
            vec![
                vec![
                    -lam_k.clone(),
                    Rational::zero(),
                    Rational::zero(),
                    Rational::one(),
                    Rational::zero(),
                ],
                vec![
                    Rational::zero(),
                    -lam_k.clone(),
                    Rational::zero(),
                    Rational::zero(),
                    Rational::one(),
                ],
            ],
        )?;
        let low = LinearSubspace::coordinate_line(&space, 0, 1);
        let high = LinearSubspace::coordinate_line(&space, 4, 3);
        tangent_line_meets.push((
            lambda,
            !plane.intersection_is_empty(&low),
            !plane.intersection_is_empty(&high),
        ));
    }

    Ok(ConeCert {
        sum_is_rank_four_cone,
        vertex: vertex.to_string(),
        vertex_corank,
        vertex_on_base_locus,
        vertex_on_curve,
        plane_in_cone,
        plane_through_vertex,
        section_factorization,
        sample_sections,
        tangent_line_meets,
    })
}

/// Certificate for the minimal model of the torus-orbit conic: in the
/// four relevant coordinates the orbit closure satisfies one linear and
/// one quadratic relation and is a degree-2 rational curve through the
/// orbit point and the two boundary points.
#[derive(Debug, Clone)]
pub struct OrbitConicCert {
    pub linear_relation_count: usize,
    pub linear_relation: String,
    pub quadric_vanishes: bool,
    pub curve_degree: usize,
    pub through_orbit_point: bool,
    pub boundary_points_on_curve: bool,
    pub weights_consistent: bool,
}

pub fn verify_orbit_conic() -> Result<OrbitConicCert, PipelineError> {
    // coordinates (z1, z6, z11, zc) with torus weights (-5, 0, 5, 0);
    // the orbit point has coordinates (1 : 11 : 1 : 1)
    let space = WeightedProjSpace::new(&["z1", "z6", "z11", "zc"], vec![-5, 0, 5, 0]);
    let curve = ParamCurve::<Rational>::new(
        &space,
        vec![
            BinaryForm::monomial(2, 0),
            BinaryForm::monomial(2, 1).scale(&Rational::from(11)),
            BinaryForm::monomial(2, 2),
            BinaryForm::monomial(2, 1),
        ],
    )?;
    let linear = forms_through_curve(&curve, 1);
    let v = |i| MultiPoly::<Rational>::variable(4, i);
    let expected_linear = v(1).sub(&v(3).scale(&Rational::from(11)));
    let linear_ok = linear.len() == 1
        && linear[0].proportional_to(&expected_linear);
    let quadric = v(0).mul(&v(2)).sub(&v(3).mul(&v(3)));
    let quadric_vanishes = curve.vanishes_on(&quadric)?;
    let through_orbit_point =
        curve.contains_point(&ProjPoint::from_ints(&[1, 11, 1, 1])?)?;
    let boundary_points_on_curve = curve
        .contains_point(&ProjPoint::coordinate(4, 0))?
        && curve.contains_point(&ProjPoint::coordinate(4, 2))?;
    // parameter weights (0, 5) reproduce the ambient weights up to the
    // common projective shift 5
    let param_weights = WeightVector::new(vec![0, 5]);
    let ambient = space.weights().0.clone();
    let weights_consistent = curve
        .forms()
        .iter()
        .zip(&ambient)
        .all(|(f, &w)| f.to_multipoly().torus_weight(&param_weights) == Some(w + 5));
    Ok(OrbitConicCert {
        linear_relation_count: linear.len(),
        linear_relation: space.text(&expected_linear),
        quadric_vanishes,
        curve_degree: curve.degree(),
        through_orbit_point,
        boundary_points_on_curve,
        weights_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::boundary_surface;

    #[test]
    fn boundary_singular_loci() {
        let b = boundary_surface().unwrap();
        let cert = verify_boundary_singularities(&b).unwrap();
        assert!(cert.quintic_vanishes);
        assert!(cert.quadric_vanishes);
        assert_eq!(cert.loci.len(), 4);
        for (label, singular, minors) in &cert.loci {
            assert!(singular, "locus {label} should be singular");
            assert_eq!(*minors, 10, "2x5 Jacobian has 10 order-2 minors");
        }
        assert_eq!(cert.smooth_point_rank, 2);
    }

    #[test]
    fn base_locus_certificate() {
        let cert = verify_base_locus_surface().unwrap();
        assert!(cert.parametrization_contained);
        assert!(cert.sign_flip_invariant);
        assert_eq!(cert.singular_points.len(), 4);
        assert!(cert.singular_points.iter().all(|(_, on, drop)| *on && *drop));
        assert!(cert.lines.iter().all(|(_, contained)| *contained));
        let memberships: Vec<bool> =
            cert.curve_membership.iter().map(|(_, m)| *m).collect();
        assert_eq!(memberships, vec![true, true, false, false]);
        for ((_, _), display, degree, mult) in &cert.tangency {
            assert_eq!(*degree, 3);
            assert_eq!(*mult, 3);
            assert!(display.starts_with("3*("), "{display}");
        }
        assert_eq!(cert.degree.quotient_degree, 4);
    }

    #[test]
    fn cone_degeneration_certificate() {
        let cert = verify_cone_degeneration().unwrap();
        assert!(cert.sum_is_rank_four_cone);
        assert_eq!(cert.vertex, "(0 : 0 : 1 : 0 : 0)");
        assert_eq!(cert.vertex_corank, 1);
        assert!(!cert.vertex_on_base_locus);
        assert!(!cert.vertex_on_curve);
        assert!(cert.plane_in_cone);
        assert!(cert.plane_through_vertex);
        assert!(cert.section_factorization);
        for (lambda, degree, squarefree) in &cert.sample_sections {
            assert_eq!(*degree, 5, "lambda = {lambda}");
            assert!(*squarefree, "lambda = {lambda}");
        }
        for (_, low, high) in &cert.tangent_line_meets {
            assert!(!low && !high);
        }
    }

    #[test]
    fn orbit_conic_certificate() {
        let cert = verify_orbit_conic().unwrap();
        assert_eq!(cert.linear_relation_count, 1);
        assert!(cert.quadric_vanishes);
        assert_eq!(cert.curve_degree, 2);
        assert!(cert.through_orbit_point);
        assert!(cert.boundary_points_on_curve);
        assert!(cert.weights_consistent);
    }
}
