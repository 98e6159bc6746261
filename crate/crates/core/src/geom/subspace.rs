use crate::field::Field;
use crate::linalg::Matrix;
use crate::poly::{BinaryForm, MultiPoly};

use super::{GeomError, ProjPoint, WeightedProjSpace};

/// A linear subspace of projective space, held in both of its natural
/// presentations: a spanning set of points and a cutting set of
/// independent linear forms. Either presentation determines the other by
/// a kernel computation, and the constructors fill in the missing one.
#[derive(Debug, Clone)]
pub struct LinearSubspace<K: Field> {
    space: WeightedProjSpace,
    spanning: Vec<ProjPoint<K>>,
    cutting: Vec<Vec<K>>,
}

impl<K: Field> LinearSubspace<K> {
    pub fn from_spanning_points(
        space: &WeightedProjSpace,
        points: Vec<ProjPoint<K>>,
    ) -> Result<Self, GeomError> {
        let n = space.nvars();
        if points.is_empty() || points.iter().any(|p| p.len() != n) {
            return Err(GeomError::DimensionMismatch {
                expected: n,
                got: points.first().map_or(0, ProjPoint::len),
            });
        }
        let rows = Matrix::from_rows(points.iter().map(|p| p.coords().to_vec()).collect());
        let rank = rows.rank();
        if rank != points.len() {
            return Err(GeomError::DegenerateSpan { rank, expected: points.len() });
        }
        // forms vanishing on every spanning point
        let cutting = rows.kernel_basis();
        Ok(LinearSubspace { space: space.clone(), spanning: points, cutting })
    }

    pub fn from_cutting_forms(
        space: &WeightedProjSpace,
        forms: Vec<Vec<K>>,
    ) -> Result<Self, GeomError> {
        let n = space.nvars();
        if forms.is_empty() || forms.iter().any(|f| f.len() != n) {
            return Err(GeomError::DimensionMismatch {
                expected: n,
                got: forms.first().map_or(0, Vec::len),
            });
        }
        let rows = Matrix::from_rows(forms.clone());
        let rank = rows.rank();
        if rank != forms.len() {
            return Err(GeomError::DegenerateSpan { rank, expected: forms.len() });
        }
        let spanning = rows
            .kernel_basis()
            .into_iter()
            .map(|v| ProjPoint::new(v).expect("kernel vectors are nonzero"))
            .collect();
        Ok(LinearSubspace { space: space.clone(), spanning, cutting: forms })
    }

    /// The line spanned by two points.
    pub fn line(
        space: &WeightedProjSpace,
        a: ProjPoint<K>,
        b: ProjPoint<K>,
    ) -> Result<Self, GeomError> {
        LinearSubspace::from_spanning_points(space, vec![a, b])
    }

    /// The coordinate line through `e_i` and `e_j`.
    pub fn coordinate_line(space: &WeightedProjSpace, i: usize, j: usize) -> Self {
        assert!(i != j, "a line needs two distinct coordinate points");
        let n = space.nvars();
        LinearSubspace::line(
            space,
            ProjPoint::coordinate(n, i),
            ProjPoint::coordinate(n, j),
        )
        .expect("coordinate points are independent")
    }

    pub fn space(&self) -> &WeightedProjSpace {
        &self.space
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.spanning.len() - 1
    }

    pub fn spanning_points(&self) -> &[ProjPoint<K>] {
        &self.spanning
    }

    pub fn cutting_form_vectors(&self) -> &[Vec<K>] {
        &self.cutting
    }

    pub fn cutting_forms(&self) -> Vec<MultiPoly<K>> {
        self.cutting
            .iter()
            .map(|f| self.space.linear_form(f))
            .collect()
    }

    pub fn contains_point(&self, p: &ProjPoint<K>) -> bool {
        self.cutting.iter().all(|f| {
            f.iter()
                .zip(p.coords())
                .fold(K::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
                .is_zero()
        })
    }

    /// True if the two subspaces have no common projective point, decided
    /// by an exact rank computation on the combined cutting forms.
    pub fn intersection_is_empty(&self, other: &Self) -> bool {
        let mut rows = self.cutting.clone();
        rows.extend(other.cutting.iter().cloned());
        let n = self.space.nvars();
        Matrix::from_rows(rows).rank() == n
    }
}

/// Pulls a list of homogeneous forms back to binary forms along the
/// parametrization `s * a + t * b` of a line.
pub fn restrict_to_line<K: Field>(
    forms: &[MultiPoly<K>],
    line: &LinearSubspace<K>,
) -> Result<Vec<BinaryForm<K>>, GeomError> {
    if line.dim() != 1 {
        return Err(GeomError::DegenerateSpan {
            rank: line.spanning.len(),
            expected: 2,
        });
    }
    let a = &line.spanning[0];
    let b = &line.spanning[1];
    let images: Vec<MultiPoly<K>> = a
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(ai, bi)| {
            MultiPoly::variable(2, 0)
                .scale(ai)
                .add(&MultiPoly::variable(2, 1).scale(bi))
        })
        .collect();
    forms
        .iter()
        .map(|f| {
            let pulled = f.substitute(&images)?;
            Ok(BinaryForm::from_multipoly(&pulled)?)
        })
        .collect()
}
