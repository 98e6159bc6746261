use std::fmt;

use crate::field::Field;
use crate::poly::{MultiPoly, WeightVector};

use super::GeomError;

/// A projective space with labelled coordinates and one integer torus
/// weight per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedProjSpace {
    labels: Vec<String>,
    weights: WeightVector,
}

impl WeightedProjSpace {
    pub fn new(labels: &[&str], weights: Vec<i64>) -> Self {
        assert_eq!(labels.len(), weights.len(), "one weight per coordinate");
        let mut seen = labels.to_vec();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), labels.len(), "coordinate labels must be distinct");
        WeightedProjSpace {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            weights: WeightVector::new(weights),
        }
    }

    /// The ambient space of the sextic curve: coordinates
    /// `y0, y1, y3, y5, y6` with torus weights `(0, 1, 3, 5, 6)`.
    pub fn y_space() -> Self {
        WeightedProjSpace::new(&["y0", "y1", "y3", "y5", "y6"], vec![0, 1, 3, 5, 6])
    }

    /// The weight-coordinate chart on the orbit-closure side:
    /// `z3, z4, z6, z8, z9` with centered weights `(-3, -2, 0, 2, 3)`.
    pub fn z_space() -> Self {
        WeightedProjSpace::new(&["z3", "z4", "z6", "z8", "z9"], vec![-3, -2, 0, 2, 3])
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.labels.len() - 1
    }

    /// Number of coordinates, `dim + 1`.
    pub fn nvars(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.labels.iter().map(String::as_str).collect()
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Renders a polynomial in this space's coordinates.
    pub fn text<K: Field>(&self, p: &MultiPoly<K>) -> String {
        p.to_text(&self.labels())
    }

    /// The linear form with the given coefficient vector.
    pub fn linear_form<K: Field>(&self, coeffs: &[K]) -> MultiPoly<K> {
        assert_eq!(coeffs.len(), self.nvars());
        let mut out = MultiPoly::zero(self.nvars());
        for (i, c) in coeffs.iter().enumerate() {
            out = out.add(&MultiPoly::variable(self.nvars(), i).scale(c));
        }
        out
    }
}

/// A point of projective space in canonical form: the first nonzero
/// coordinate is scaled to one, so equality of points is equality of
/// representations.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint<K: Field> {
    coords: Vec<K>,
}

impl<K: Field> ProjPoint<K> {
    pub fn new(coords: Vec<K>) -> Result<Self, GeomError> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(GeomError::AllZero)?;
        let inv = lead.inv().expect("nonzero coordinate");
        Ok(ProjPoint {
            coords: coords.iter().map(|c| c.clone() * inv.clone()).collect(),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, GeomError> {
        ProjPoint::new(coords.iter().map(|&c| K::from_int(c)).collect())
    }

    /// The coordinate point `e_i` in an `n`-coordinate space.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut coords = vec![K::zero(); n];
        coords[i] = K::one();
        ProjPoint { coords }
    }

    pub fn coords(&self) -> &[K] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> ProjPoint<L> {
        ProjPoint {
            coords: self.coords.iter().map(f).collect(),
        }
    }

    /// Evaluates a polynomial at this point (well defined up to scale;
    /// vanishing is scale-invariant).
    pub fn eval(&self, p: &MultiPoly<K>) -> K {
        p.eval(&self.coords).expect("point length matches the ring")
    }

    pub fn lies_on(&self, forms: &[MultiPoly<K>]) -> bool {
        forms.iter().all(|f| self.eval(f).is_zero())
    }
}

impl<K: Field> fmt::Display for ProjPoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

impl<K: Field> fmt::Debug for ProjPoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A permutation of projective coordinates, e.g. the involution swapping
/// the two ends of the weight ladder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordPermutation(Vec<usize>);

impl CoordPermutation {
    pub fn new(perm: Vec<usize>) -> Self {
        let mut seen = perm.clone();
        seen.sort_unstable();
        assert!(seen.iter().enumerate().all(|(i, &x)| i == x), "not a permutation");
        CoordPermutation(perm)
    }

    /// The order-reversing permutation; on the `y`-coordinates this is
    /// the involution `y0 <-> y6, y1 <-> y5` fixing `y3`.
    pub fn reversal(n: usize) -> Self {
        CoordPermutation((0..n).rev().collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| self.0[j] == i)
    }

    pub fn apply_poly<K: Field>(&self, p: &MultiPoly<K>) -> MultiPoly<K> {
        p.permute_vars(&self.0)
    }

    pub fn apply_point<K: Field>(&self, p: &ProjPoint<K>) -> ProjPoint<K> {
        let coords: Vec<K> = self.0.iter().map(|&j| p.coords()[j].clone()).collect();
        ProjPoint::new(coords).expect("permutation preserves nonzeroness")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn points_are_canonical() {
        let p: ProjPoint<Rational> =
            ProjPoint::new(vec![Rational::zero(), Rational::from(3), Rational::from(6)]).unwrap();
        assert_eq!(p.to_string(), "(0 : 1 : 2)");
        let q: ProjPoint<Rational> = ProjPoint::from_ints(&[0, 1, 2]).unwrap();
        assert_eq!(p, q);
        assert!(ProjPoint::<Rational>::from_ints(&[0, 0]).is_err());
    }

    #[test]
    fn reversal_is_an_involution_compatible_with_evaluation() {
        let perm = CoordPermutation::reversal(5);
        assert!(perm.is_involution());
        let p = MultiPoly::<Rational>::variable(5, 0)
            .mul(&MultiPoly::variable(5, 1))
            .add(&MultiPoly::variable(5, 4).mul(&MultiPoly::variable(5, 2)));
        // raw coordinates, no projective rescaling
        let v: Vec<Rational> = [1i64, 2, 3, 4, 5].iter().map(|&c| Rational::from(c)).collect();
        let permuted: Vec<Rational> = perm.indices().iter().map(|&j| v[j].clone()).collect();
        assert_eq!(
            perm.apply_poly(&p).eval(&permuted).unwrap(),
            p.eval(&v).unwrap()
        );
    }
}
