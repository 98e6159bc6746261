//! Pencils of quadrics: membership, discriminants, singular members,
//! base-locus checks, and expressing a given quadric in pencil
//! coordinates.

use thiserror::Error;

use crate::field::Field;
use crate::geom::{GeomError, ParamCurve, ParamSurface, ProjPoint, QuadricForm, WeightedProjSpace};
use crate::linalg::Matrix;
use crate::poly::{BinaryForm, FactorizeOver, MultiPoly, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("generators live in different spaces")]
    SpaceMismatch,
    #[error("pencil parameter (0 : 0) is not a point of the line")]
    ZeroParameter,
    #[error("discriminant vanishes identically (degenerate pencil)")]
    DegeneratePencil,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A pencil of quadric hypersurfaces spanned by two independent
/// generators; the member at `(u0 : u1)` is `u0 * Q0 + u1 * Qinf`.
#[derive(Debug, Clone)]
pub struct QuadricPencil<K: Field> {
    q0: QuadricForm<K>,
    qinf: QuadricForm<K>,
}

/// A singular member of a pencil: its parameter on the pencil line, the
/// multiplicity of the discriminant root, and the corank of its Gram
/// matrix there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularMember<K: Field> {
    pub parameter: (K, K),
    pub multiplicity: u32,
    pub corank: usize,
}

impl<K: Field> QuadricPencil<K> {
    pub fn new(q0: QuadricForm<K>, qinf: QuadricForm<K>) -> Result<Self, PencilError> {
        if q0.space() != qinf.space() {
            return Err(PencilError::SpaceMismatch);
        }
        let rows = vec![gram_vector(&q0), gram_vector(&qinf)];
        if Matrix::from_rows(rows).rank() != 2 {
            return Err(PencilError::DependentGenerators);
        }
        Ok(QuadricPencil { q0, qinf })
    }

    pub fn q0(&self) -> &QuadricForm<K> {
        &self.q0
    }

    pub fn qinf(&self) -> &QuadricForm<K> {
        &self.qinf
    }

    pub fn space(&self) -> &WeightedProjSpace {
        self.q0.space()
    }

    pub fn member(&self, u0: &K, u1: &K) -> Result<QuadricForm<K>, PencilError> {
        if u0.is_zero() && u1.is_zero() {
            return Err(PencilError::ZeroParameter);
        }
        let gram = self.q0.gram().scale(u0).add(&self.qinf.gram().scale(u1));
        Ok(QuadricForm::from_gram(self.space(), gram)?)
    }

    /// The determinant of the pencil Gram matrix as a binary form of
    /// degree `n + 1` in the pencil parameter, computed by evaluation and
    /// Lagrange interpolation over the exact field.
    pub fn discriminant(&self) -> BinaryForm<K> {
        let n = self.space().nvars();
        // det(u0 M0 + u1 Minf) dehomogenizes at u0 = 1 to a polynomial of
        // degree <= n in u1, pinned down by n + 1 sample values
        let samples: Vec<(K, K)> = (0..=n as i64)
            .map(|i| {
                let x = K::from_int(i);
                let m = self.q0.gram().add(&self.qinf.gram().scale(&x));
                (x, m.determinant())
            })
            .collect();
        let dehom = UniPoly::interpolate(&samples);
        BinaryForm::homogenized(&dehom, n)
    }

    /// True iff both generators vanish on the point.
    pub fn base_locus_contains_point(&self, p: &ProjPoint<K>) -> bool {
        self.q0.vanishes_at(p) && self.qinf.vanishes_at(p)
    }

    /// True iff both generators pull back to zero on the curve.
    pub fn base_locus_contains_curve(&self, c: &ParamCurve<K>) -> Result<bool, GeomError> {
        Ok(c.vanishes_on(&self.q0.to_poly())? && c.vanishes_on(&self.qinf.to_poly())?)
    }

    /// True iff both generators pull back to zero on the surface.
    pub fn base_locus_contains_surface(&self, s: &ParamSurface<K>) -> Result<bool, GeomError> {
        Ok(s.vanishes_on(&self.q0.to_poly())? && s.vanishes_on(&self.qinf.to_poly())?)
    }

    /// The unique parameter with `q` proportional to the member there, if
    /// any: the kernel of the matrix with columns the vectorized Gram
    /// matrices of the generators and of `q`.
    pub fn express_in_pencil(&self, q: &QuadricForm<K>) -> Option<(K, K)> {
        let cols = vec![gram_vector(&self.q0), gram_vector(&self.qinf), gram_vector(q)];
        let matrix = Matrix::from_rows(cols).transpose();
        let kernel = matrix.kernel_basis();
        // independence of the generators keeps the kernel at most a line
        let v = match kernel.as_slice() {
            [v] => v,
            _ => return None,
        };
        if v[2].is_zero() {
            return None;
        }
        let point = ProjPoint::new(vec![v[0].clone(), v[1].clone()]).expect("kernel vector nonzero");
        Some((point.coords()[0].clone(), point.coords()[1].clone()))
    }
}

impl<K: FactorizeOver> QuadricPencil<K> {
    /// The parameters of the singular members found over the field:
    /// the linear factors of the discriminant with their coranks.
    pub fn singular_members(&self) -> Result<Vec<SingularMember<K>>, PencilError> {
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(PencilError::DegeneratePencil);
        }
        let mut out = Vec::new();
        for (factor, multiplicity) in disc.factor().map_err(GeomError::from)? {
            let Some((u0, u1)) = factor.linear_root() else {
                continue;
            };
            let member = self.member(&u0, &u1)?;
            out.push(SingularMember {
                parameter: (u0, u1),
                multiplicity,
                corank: member.corank(),
            });
        }
        Ok(out)
    }
}

impl QuadricPencil<crate::field::Rational> {
    /// The pencil of quadrics through the weighted sextic curve,
    /// generated by `y0*y6 - y3^2` and `y3^2 - y1*y5`.
    pub fn through_sextic() -> Self {
        use crate::field::Rational;
        let space = WeightedProjSpace::y_space();
        let var = |i| MultiPoly::<Rational>::variable(5, i);
        let q0 = QuadricForm::from_poly(&space, &var(0).mul(&var(4)).sub(&var(2).mul(&var(2))))
            .expect("quadric");
        let qinf = QuadricForm::from_poly(&space, &var(2).mul(&var(2)).sub(&var(1).mul(&var(3))))
            .expect("quadric");
        QuadricPencil::new(q0, qinf).expect("generators are independent")
    }
}

fn gram_vector<K: Field>(q: &QuadricForm<K>) -> Vec<K> {
    let n = q.space().nvars();
    let mut v = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            v.push(q.gram()[(i, j)].clone());
        }
    }
    v
}

impl<K: Field> UniPoly<K> {
    /// Lagrange interpolation through distinct sample points.
    pub fn interpolate(samples: &[(K, K)]) -> UniPoly<K> {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in samples.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::constant(K::one());
            let mut denom = K::one();
            for (j, (xj, _)) in samples.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&UniPoly::from_coeffs(vec![-xj.clone(), K::one()]));
                denom = denom * (xi.clone() - xj.clone());
            }
            acc = acc.add(&basis.scale(&yi.clone().div_exact(&denom)));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::geom::poly_det;

    fn pencil() -> QuadricPencil<Rational> {
        QuadricPencil::through_sextic()
    }

    /// Symbolic cofactor-expansion oracle for the discriminant: the
    /// determinant of the pencil Gram matrix with entries in the
    /// polynomial ring of the pencil parameters.
    fn discriminant_oracle(p: &QuadricPencil<Rational>) -> MultiPoly<Rational> {
        let n = p.space().nvars();
        let u0 = MultiPoly::<Rational>::variable(2, 0);
        let u1 = MultiPoly::<Rational>::variable(2, 1);
        let entries: Vec<Vec<MultiPoly<Rational>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        u0.scale(&p.q0().gram()[(i, j)])
                            .add(&u1.scale(&p.qinf().gram()[(i, j)]))
                    })
                    .collect()
            })
            .collect();
        poly_det(&entries)
    }

    #[test]
    fn discriminant_closed_form() {
        let disc = pencil().discriminant();
        // (1/16) u0^2 u1^2 (u1 - u0)
        let u0 = BinaryForm::<Rational>::monomial(1, 0);
        let u1 = BinaryForm::<Rational>::monomial(1, 1);
        let expected = u0
            .pow(2)
            .mul(&u1.pow(2))
            .mul(&u1.sub(&u0))
            .scale(&Rational::from((1, 16)));
        assert_eq!(disc, expected);
        // independent route: symbolic cofactor expansion
        assert_eq!(disc.to_multipoly(), discriminant_oracle(&pencil()));
    }

    #[test]
    fn singular_members_of_the_sextic_pencil() {
        let members = pencil().singular_members().unwrap();
        assert_eq!(members.len(), 3);
        let find = |u0: i64, u1: i64| {
            members
                .iter()
                .find(|m| m.parameter == (Rational::from(u0), Rational::from(u1)))
                .expect("parameter present")
        };
        assert_eq!(find(1, 0).corank, 2);
        assert_eq!(find(1, 0).multiplicity, 2);
        assert_eq!(find(0, 1).corank, 2);
        assert_eq!(find(0, 1).multiplicity, 2);
        assert_eq!(find(1, 1).corank, 1);
        assert_eq!(find(1, 1).multiplicity, 1);
        // smooth elsewhere, e.g. u = 1/2
        assert!(pencil()
            .member(&Rational::from(1), &Rational::from(2))
            .unwrap()
            .is_smooth());
    }

    #[test]
    fn diagonal_pencil_splits_completely() {
        let space = WeightedProjSpace::new(&["x0", "x1", "x2", "x3", "x4"], vec![0; 5]);
        let diag = |d: &[i64]| {
            let mut p = MultiPoly::<Rational>::zero(5);
            for (i, &c) in d.iter().enumerate() {
                let v = MultiPoly::variable(5, i);
                p = p.add(&v.mul(&v).scale(&Rational::from(c)));
            }
            QuadricForm::from_poly(&space, &p).unwrap()
        };
        let p = QuadricPencil::new(diag(&[1, 1, 1, 1, 1]), diag(&[0, 1, 2, 3, 4])).unwrap();
        // det(u0 I + u1 diag(0..4)) = prod (u0 + i u1)
        let u0 = BinaryForm::<Rational>::monomial(1, 0);
        let u1 = BinaryForm::<Rational>::monomial(1, 1);
        let mut expected = BinaryForm::constant(Rational::one());
        for i in 0..5i64 {
            expected = expected.mul(&u0.add(&u1.scale(&Rational::from(i))));
        }
        assert_eq!(p.discriminant(), expected);
        let members = p.singular_members().unwrap();
        assert_eq!(members.len(), 5);
        assert!(members.iter().all(|m| m.corank == 1 && m.multiplicity == 1));
    }

    #[test]
    fn express_in_pencil_examples() {
        let var = |i| MultiPoly::<Rational>::variable(5, i);
        let space = WeightedProjSpace::y_space();
        // -y0*y6 - 4*y1*y5 + 5*y3^2 sits at (-1 : 4)
        let q = QuadricForm::from_poly(
            &space,
            &var(0)
                .mul(&var(4))
                .neg()
                .sub(&var(1).mul(&var(3)).scale(&Rational::from(4)))
                .add(&var(2).mul(&var(2)).scale(&Rational::from(5))),
        )
        .unwrap();
        let (u0, u1) = pencil().express_in_pencil(&q).unwrap();
        // projective equality with (-1 : 4)
        assert_eq!(u0 * Rational::from(4), u1.clone() * Rational::from(-1));
        // a generator sits at its own slot
        let got = pencil().express_in_pencil(pencil().q0()).unwrap();
        assert_eq!(got, (Rational::one(), Rational::zero()));
        // y0^2 is not in the pencil
        let outside = QuadricForm::from_poly(&space, &var(0).mul(&var(0))).unwrap();
        assert_eq!(pencil().express_in_pencil(&outside), None);
    }

    #[test]
    fn express_in_pencil_round_trip() {
        let p = pencil();
        for (a, b) in [(1i64, 1i64), (2, -3), (7, 5), (0, 1), (1, 0), (-1, 4)] {
            let member = p.member(&Rational::from(a), &Rational::from(b)).unwrap();
            let (u0, u1) = p.express_in_pencil(&member).unwrap();
            assert_eq!(
                u0 * Rational::from(b),
                u1 * Rational::from(a),
                "round trip at ({a} : {b})"
            );
        }
    }

    #[test]
    fn discriminant_evaluates_to_member_determinants() {
        let p = pencil();
        let disc = p.discriminant();
        for (a, b) in [(3i64, 7i64), (-2, 5), (1, 1), (11, -4)] {
            let (u0, u1) = (Rational::from(a), Rational::from(b));
            let det = p.member(&u0, &u1).unwrap().gram().determinant();
            assert_eq!(disc.eval(&u0, &u1), det);
        }
    }
}
