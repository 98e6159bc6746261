//! Degree-graded pieces of ideals of parametrized varieties, computed as
//! kernels of exact evaluation matrices; quadratic normality and
//! multisecant certificates built on top of them.

use crate::field::Field;
use crate::geom::{GeomError, LinearSubspace, ParamCurve, ParamSurface};
use crate::linalg::Matrix;
use crate::poly::{FactorizeOver, MultiPoly};

/// All exponent vectors of total degree `d` in `nvars` variables, in
/// ascending lexicographic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if nvars == 1 {
            let mut full = prefix.clone();
            full.push(d);
            out.push(full);
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(nvars - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The restriction map from degree-`d` forms on the ambient space to
/// functions on a parametrized variety, in explicit matrix form: columns
/// are indexed by the source monomials, rows by the monomials on the
/// parameter space that actually occur (absent rows are identically zero
/// and constrain nothing).
#[derive(Debug, Clone)]
pub struct EvaluationMap<K: Field> {
    pub degree: u32,
    pub source_monomials: Vec<Vec<u32>>,
    pub target_monomials: Vec<Vec<u32>>,
    pub matrix: Matrix<K>,
}

impl<K: Field> EvaluationMap<K> {
    fn from_images(degree: u32, source_monomials: Vec<Vec<u32>>, images: Vec<MultiPoly<K>>) -> Self {
        let mut target: Vec<Vec<u32>> = images
            .iter()
            .flat_map(|p| p.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>())
            .collect();
        target.sort();
        target.dedup();
        let matrix = Matrix::from_fn(target.len(), images.len(), |i, j| {
            images[j].coefficient(&target[i])
        });
        EvaluationMap { degree, source_monomials, target_monomials: target, matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Kernel vectors reassembled as polynomials in the source monomials.
    pub fn kernel_forms(&self) -> Vec<MultiPoly<K>> {
        let nvars = self.source_monomials[0].len();
        self.matrix
            .kernel_basis()
            .into_iter()
            .map(|v| {
                let mut p = MultiPoly::zero(nvars);
                for (mono, c) in self.source_monomials.iter().zip(v) {
                    p = p.add(&MultiPoly::monomial(nvars, mono.clone(), c));
                }
                p
            })
            .collect()
    }
}

fn monomial_images<K: Field>(coords: &[MultiPoly<K>], source: &[Vec<u32>]) -> Vec<MultiPoly<K>> {
    source
        .iter()
        .map(|mono| {
            let mut img = MultiPoly::one(2);
            for (c, &e) in coords.iter().zip(mono) {
                if e > 0 {
                    img = img.mul(&c.pow(e));
                }
            }
            img
        })
        .collect()
}

/// The evaluation map of degree-`d` monomials on a parametrized curve.
pub fn curve_evaluation_map<K: Field>(curve: &ParamCurve<K>, d: u32) -> EvaluationMap<K> {
    let source = monomials_of_degree(curve.space().nvars(), d);
    let images = monomial_images(&curve.forms_as_polys(), &source);
    EvaluationMap::from_images(d, source, images)
}

/// The evaluation map of degree-`d` monomials on a parametrized surface.
pub fn surface_evaluation_map<K: Field>(surface: &ParamSurface<K>, d: u32) -> EvaluationMap<K> {
    let source = monomials_of_degree(surface.space().nvars(), d);
    let images = monomial_images(surface.coords(), &source);
    EvaluationMap::from_images(d, source, images)
}

/// Echelon-normalized basis of the degree-`d` forms vanishing on the
/// curve; every returned form is re-verified by direct substitution.
pub fn forms_through_curve<K: Field>(curve: &ParamCurve<K>, d: u32) -> Vec<MultiPoly<K>> {
    let forms = curve_evaluation_map(curve, d).kernel_forms();
    debug_assert!(forms
        .iter()
        .all(|f| curve.vanishes_on(f).expect("degree matches")));
    forms
}

/// Echelon-normalized basis of the degree-`d` forms vanishing on the
/// surface parametrization.
pub fn forms_through_surface<K: Field>(surface: &ParamSurface<K>, d: u32) -> Vec<MultiPoly<K>> {
    let forms = surface_evaluation_map(surface, d).kernel_forms();
    debug_assert!(forms
        .iter()
        .all(|f| surface.vanishes_on(f).expect("degree matches")));
    forms
}

/// Certificate for surjectivity of the degree-2 evaluation map, the
/// operational form of quadratic normality for a parametrized curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QnCertificate {
    pub surjective: bool,
    pub rank: usize,
    pub target_dim: usize,
    pub kernel_dim: usize,
}

pub fn is_quadratically_normal<K: Field>(curve: &ParamCurve<K>) -> QnCertificate {
    let map = curve_evaluation_map(curve, 2);
    // restrictions of quadrics are sections of a degree-2d line bundle on
    // the parameter line, a (2d + 1)-dimensional target
    let target_dim = 2 * curve.degree() + 1;
    let rank = map.rank();
    QnCertificate {
        surjective: rank == target_dim,
        rank,
        target_dim,
        kernel_dim: map.source_monomials.len() - rank,
    }
}

/// Total intersection degree of the curve with a line; errors if the
/// curve is contained in the line.
pub fn multisecant_degree<K: FactorizeOver>(
    curve: &ParamCurve<K>,
    line: &LinearSubspace<K>,
) -> Result<usize, GeomError> {
    let divisor = curve.intersection_divisor(&line.cutting_forms())?;
    Ok(divisor.total_degree())
}

/// Intersection degrees of the curve with every coordinate line, keyed by
/// the coordinate pair spanning the line.
pub fn coordinate_line_secancies<K: FactorizeOver>(
    curve: &ParamCurve<K>,
) -> Vec<((usize, usize), usize)> {
    let n = curve.space().nvars();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let line = LinearSubspace::coordinate_line(curve.space(), i, j);
            if let Ok(deg) = multisecant_degree(curve, &line) {
                out.push(((i, j), deg));
            }
        }
    }
    out
}

/// True if `p` lies in the linear span of `basis` (all in one ring),
/// decided by an exact rank comparison.
pub fn in_span<K: Field>(basis: &[MultiPoly<K>], p: &MultiPoly<K>) -> bool {
    if p.is_zero() {
        return true;
    }
    let mut monomials: Vec<Vec<u32>> = basis
        .iter()
        .chain(std::iter::once(p))
        .flat_map(|q| q.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>())
        .collect();
    monomials.sort();
    monomials.dedup();
    let row = |q: &MultiPoly<K>| -> Vec<K> {
        monomials.iter().map(|m| q.coefficient(m)).collect()
    };
    let base_rows: Vec<Vec<K>> = basis.iter().map(row).collect();
    let base_rank = Matrix::from_rows(base_rows.clone()).rank();
    let mut all_rows = base_rows;
    all_rows.push(row(p));
    Matrix::from_rows(all_rows).rank() == base_rank
}

/// Mutual containment of two spans.
pub fn same_span<K: Field>(a: &[MultiPoly<K>], b: &[MultiPoly<K>]) -> bool {
    a.iter().all(|p| in_span(b, p)) && b.iter().all(|p| in_span(a, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::geom::WeightedProjSpace;

    fn gamma() -> ParamCurve<Rational> {
        ParamCurve::sextic_gamma()
    }

    fn var(i: usize) -> MultiPoly<Rational> {
        MultiPoly::variable(5, i)
    }

    fn q0() -> MultiPoly<Rational> {
        var(0).mul(&var(4)).sub(&var(2).mul(&var(2)))
    }

    fn qinf() -> MultiPoly<Rational> {
        var(2).mul(&var(2)).sub(&var(1).mul(&var(3)))
    }

    /// Independent rank oracle for a monomial curve: the rank of the
    /// degree-`d` evaluation map is the number of distinct `d`-fold sums
    /// of the exponents.
    fn monomial_rank_oracle(exponents: &[u32], d: u32) -> usize {
        let mut sums = std::collections::BTreeSet::new();
        for mono in monomials_of_degree(exponents.len(), d) {
            let s: u32 = mono.iter().zip(exponents).map(|(m, e)| m * e).sum();
            sums.insert(s);
        }
        sums.len()
    }

    #[test]
    fn quadrics_through_the_sextic_form_the_pencil() {
        let forms = forms_through_curve(&gamma(), 2);
        assert_eq!(forms.len(), 2);
        assert!(same_span(&forms, &[q0(), qinf()]));
        // no linear forms vanish: the curve spans the space
        assert!(forms_through_curve(&gamma(), 1).is_empty());
    }

    #[test]
    fn surjectivity_certificate_for_the_sextic() {
        let cert = is_quadratically_normal(&gamma());
        assert_eq!(
            cert,
            QnCertificate { surjective: true, rank: 13, target_dim: 13, kernel_dim: 2 }
        );
        assert_eq!(monomial_rank_oracle(&[0, 1, 3, 5, 6], 2), 13);
    }

    #[test]
    fn bad_weight_ladders_fail_with_kernel_three() {
        for exps in [[0u32, 1, 2, 5, 6], [0, 1, 4, 5, 6]] {
            let labels: Vec<String> = exps.iter().map(|e| format!("y{e}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let space = WeightedProjSpace::new(
                &label_refs,
                exps.iter().map(|&e| i64::from(e)).collect(),
            );
            let curve = ParamCurve::<Rational>::exponent_curve(&space, &exps).unwrap();
            let cert = is_quadratically_normal(&curve);
            assert!(!cert.surjective);
            assert_eq!(cert.kernel_dim, 3);
            assert_eq!(cert.rank, monomial_rank_oracle(&exps, 2));
        }
    }

    #[test]
    fn cubics_through_the_sextic() {
        let map = curve_evaluation_map(&gamma(), 3);
        assert_eq!(map.source_monomials.len(), 35);
        // oracle: number of distinct triple sums of (0,1,3,5,6) is 19
        assert_eq!(monomial_rank_oracle(&[0, 1, 3, 5, 6], 3), 19);
        assert_eq!(map.rank(), 19);
        assert_eq!(forms_through_curve(&gamma(), 3).len(), 16);
    }

    #[test]
    fn multisecant_degrees_of_coordinate_lines() {
        let space = WeightedProjSpace::y_space();
        // the 3-tangent line through P0, P1
        let l01 = LinearSubspace::coordinate_line(&space, 0, 1);
        assert_eq!(multisecant_degree(&gamma(), &l01).unwrap(), 3);
        // the line through P1, P6 is a plain 1-secant
        let l16 = LinearSubspace::coordinate_line(&space, 1, 4);
        assert_eq!(multisecant_degree(&gamma(), &l16).unwrap(), 1);
        // quadratic normality caps coordinate-line secancy at 3
        let all = coordinate_line_secancies(&gamma());
        assert_eq!(all.len(), 10);
        assert_eq!(all.iter().map(|(_, d)| *d).max(), Some(3));
    }

    #[test]
    fn four_secant_witness_for_bad_ladders() {
        let exps = [0u32, 1, 2, 5, 6];
        let space = WeightedProjSpace::new(
            &["y0", "y1", "y2", "y5", "y6"],
            exps.iter().map(|&e| i64::from(e)).collect(),
        );
        let curve = ParamCurve::<Rational>::exponent_curve(&space, &exps).unwrap();
        let secancies = coordinate_line_secancies(&curve);
        let best = secancies.iter().max_by_key(|(_, d)| *d).unwrap();
        assert!(best.1 >= 4, "expected a 4-secant coordinate line");
        // the witness is the tangent line at the high-weight end
        assert_eq!(*best, ((3, 4), 4));
    }

    #[test]
    fn rank_nullity_on_every_map() {
        for d in 1..=3 {
            let map = curve_evaluation_map(&gamma(), d);
            assert_eq!(
                map.rank() + map.kernel_forms().len(),
                map.source_monomials.len()
            );
        }
    }
}
