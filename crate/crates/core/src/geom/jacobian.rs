use crate::field::Field;
use crate::poly::MultiPoly;

use super::{GeomError, ParamCurve, ParamSurface};

/// A one- or two-parameter family substituted into ambient equations.
#[derive(Debug, Clone, Copy)]
pub enum Family<'a, K: Field> {
    Curve(&'a ParamCurve<K>),
    Surface(&'a ParamSurface<K>),
}

impl<K: Field> Family<'_, K> {
    fn images(&self) -> Vec<MultiPoly<K>> {
        match self {
            Family::Curve(c) => c.forms_as_polys(),
            Family::Surface(s) => s.coords().to_vec(),
        }
    }
}

/// Outcome of a Jacobian singularity test along a family. When the test
/// fails, a nonzero witness minor (its row and column selections and the
/// pulled-back polynomial) is reported.
#[derive(Debug, Clone)]
pub struct SingularityCert<K: Field> {
    pub singular: bool,
    pub minors_checked: usize,
    pub witness: Option<(Vec<usize>, Vec<usize>, MultiPoly<K>)>,
}

/// Checks that the variety cut out by `equations` is singular along the
/// whole family: every `codim x codim` minor of the Jacobian matrix,
/// pulled back along the family's parametrization, must vanish
/// identically.
pub fn singular_on_family<K: Field>(
    equations: &[MultiPoly<K>],
    family: &Family<K>,
    codim: usize,
) -> Result<SingularityCert<K>, GeomError> {
    let images = family.images();
    let nvars = images.len();
    if equations.iter().any(|e| e.nvars() != nvars) {
        return Err(GeomError::DimensionMismatch {
            expected: nvars,
            got: equations.iter().map(MultiPoly::nvars).max().unwrap_or(0),
        });
    }
    let rows = equations.len();
    if codim == 0 || codim > rows || codim > nvars {
        return Err(GeomError::BadCodimension { codim, rows, cols: nvars });
    }
    // the Jacobian pulled back along the family
    let mut jac: Vec<Vec<MultiPoly<K>>> = Vec::with_capacity(rows);
    for eq in equations {
        let mut row = Vec::with_capacity(nvars);
        for j in 0..nvars {
            row.push(eq.partial(j).substitute(&images)?);
        }
        jac.push(row);
    }
    let row_sets = combinations(rows, codim);
    let col_sets = combinations(nvars, codim);
    let mut minors_checked = 0;
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<MultiPoly<K>>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let minor = poly_det(&sub);
            minors_checked += 1;
            if !minor.is_zero() {
                return Ok(SingularityCert {
                    singular: false,
                    minors_checked,
                    witness: Some((rs.clone(), cs.clone(), minor)),
                });
            }
        }
    }
    Ok(SingularityCert { singular: true, minors_checked, witness: None })
}

/// Determinant of a small square matrix of polynomials, by Laplace
/// expansion along the first row.
pub fn poly_det<K: Field>(m: &[Vec<MultiPoly<K>>]) -> MultiPoly<K> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix expected");
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = MultiPoly::zero(nvars);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly<K>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&poly_det(&minor));
        det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n - (k - i) {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::geom::WeightedProjSpace;
    use crate::poly::BinaryForm;

    #[test]
    fn cone_is_singular_along_its_ruling() {
        // the quadric cone x0*x2 - x1^2 in P^2 is smooth away from the
        // vertex; along the conic itself the 1x1 minors do not vanish
        let space = WeightedProjSpace::new(&["x0", "x1", "x2"], vec![0, 1, 2]);
        let x = |i| MultiPoly::<Rational>::variable(3, i);
        let cone = x(0).mul(&x(2)).sub(&x(1).mul(&x(1)));
        let conic = ParamCurve::exponent_curve(&space, &[0, 1, 2]).unwrap();
        let cert = singular_on_family(&[cone], &Family::Curve(&conic), 1).unwrap();
        assert!(!cert.singular);
        assert!(cert.witness.is_some());
    }

    #[test]
    fn pair_of_planes_is_singular_along_the_axis() {
        // x0 * x1 = 0 in P^3 is singular along {x0 = x1 = 0}
        let space = WeightedProjSpace::new(&["x0", "x1", "x2", "x3"], vec![0, 0, 0, 0]);
        let x = |i| MultiPoly::<Rational>::variable(4, i);
        let planes = x(0).mul(&x(1));
        let axis = ParamCurve::new(
            &space,
            vec![
                BinaryForm::zero(),
                BinaryForm::zero(),
                BinaryForm::monomial(1, 0),
                BinaryForm::monomial(1, 1),
            ],
        )
        .unwrap();
        let cert = singular_on_family(&[planes], &Family::Curve(&axis), 1).unwrap();
        assert!(cert.singular);
        assert_eq!(cert.minors_checked, 4);
    }

    #[test]
    fn poly_det_matches_cofactor_values() {
        let c = |v: i64| MultiPoly::<Rational>::constant(1, Rational::from(v));
        let m = vec![
            vec![c(1), c(2), c(3)],
            vec![c(4), c(5), c(6)],
            vec![c(7), c(8), c(10)],
        ];
        assert_eq!(poly_det(&m), c(-3));
    }
}
