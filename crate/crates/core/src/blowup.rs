//! Numerical intersection theory on the blowup of a smooth threefold
//! along a smooth curve, and the rank-2 divisor lattice bookkeeping for
//! the two-ray link between the genus-12 threefold and the quadric.
//!
//! Everything here is plain integer arithmetic. Cubic intersection
//! numbers are only meaningful before the flop — the flop changes them —
//! so no operation compares numbers across it.

use std::ops::{Add, Mul, Neg, Sub};

/// Numerical input for a blowup: the halved anticanonical data of the
/// ambient threefold and the degree and genus of the blown-up curve.
/// `index` is the `r` with `K = -r * H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreefoldData {
    pub h3: i64,
    pub index: i64,
    pub curve_degree: i64,
    pub curve_genus: i64,
}

impl ThreefoldData {
    pub fn new(h3: i64, index: i64, curve_degree: i64, curve_genus: i64) -> Self {
        assert!(h3 > 0, "H^3 must be positive");
        assert!((1..=4).contains(&index), "Fano index is between 1 and 4");
        assert!(curve_degree >= 1, "curve degree must be positive");
        assert!(curve_genus >= 0, "genus is nonnegative");
        ThreefoldData { h3, index, curve_degree, curve_genus }
    }

    /// The genus-12 threefold (`H^3 = 22`, index 1) with a conic.
    pub fn genus12_with_conic() -> Self {
        ThreefoldData::new(22, 1, 2, 0)
    }

    /// The three-dimensional quadric (`H^3 = 2`, index 3) with the
    /// rational sextic.
    pub fn quadric_with_sextic() -> Self {
        ThreefoldData::new(2, 3, 6, 0)
    }

    /// Projective three-space with a line, the textbook case.
    pub fn p3_with_line() -> Self {
        ThreefoldData::new(1, 4, 1, 0)
    }

    /// `deg N = -K . C + 2g - 2`, the degree of the normal bundle of the
    /// curve.
    pub fn normal_bundle_degree(&self) -> i64 {
        self.index * self.curve_degree + 2 * self.curve_genus - 2
    }

    pub fn blowup_ring(&self) -> BlowupRing {
        BlowupRing {
            h3: self.h3,
            h2e: 0,
            he2: -self.curve_degree,
            e3: -self.normal_bundle_degree(),
        }
    }

    /// The anticanonical class on the blowup, `r H' - E`.
    pub fn anticanonical(&self) -> DivClass {
        DivClass::new(self.index, -1)
    }
}

/// The intersection quadruple `(H'^3, H'^2 E, H' E^2, E^3)` of the blowup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupRing {
    pub h3: i64,
    pub h2e: i64,
    pub he2: i64,
    pub e3: i64,
}

impl BlowupRing {
    /// Trilinear expansion of a triple product of divisor classes over
    /// the quadruple.
    pub fn triple_product(&self, a: DivClass, b: DivClass, c: DivClass) -> i64 {
        let hhh = a.h * b.h * c.h;
        let hhe = a.h * b.h * c.e + a.h * b.e * c.h + a.e * b.h * c.h;
        let hee = a.h * b.e * c.e + a.e * b.h * c.e + a.e * b.e * c.h;
        let eee = a.e * b.e * c.e;
        hhh * self.h3 + hhe * self.h2e + hee * self.he2 + eee * self.e3
    }

    pub fn cube(&self, a: DivClass) -> i64 {
        self.triple_product(a, a, a)
    }

    pub fn square_times(&self, a: DivClass, b: DivClass) -> i64 {
        self.triple_product(a, a, b)
    }
}

/// An integer divisor class `alpha * H' + beta * E` on the blowup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivClass {
    pub h: i64,
    pub e: i64,
}

impl DivClass {
    pub const fn new(h: i64, e: i64) -> Self {
        DivClass { h, e }
    }

    pub const H: DivClass = DivClass::new(1, 0);
    pub const E: DivClass = DivClass::new(0, 1);
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, rhs: DivClass) -> DivClass {
        DivClass::new(self.h + rhs.h, self.e + rhs.e)
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, rhs: DivClass) -> DivClass {
        DivClass::new(self.h - rhs.h, self.e - rhs.e)
    }
}

impl Neg for DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass::new(-self.h, -self.e)
    }
}

impl Mul<DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, rhs: DivClass) -> DivClass {
        DivClass::new(self * rhs.h, self * rhs.e)
    }
}

impl std::fmt::Display for DivClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*H' + {}*E", self.h, self.e)
    }
}

/// The dimension bookkeeping behind the linear-system bound on the
/// genus-12 side. The three cohomological inputs are imported constants
/// (flagged as axioms in reports); the bound and the quadric count are
/// recomputed from them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionCount {
    /// dim H^0 of the hyperplane class on the genus-12 threefold.
    pub axiom_h0_hyperplane: i64,
    /// dim H^0 of the degree-2 line bundle on the conic.
    pub axiom_h0_conic_degree2: i64,
    /// dim H^0 of the twisted conormal sheaf of the conic.
    pub axiom_h0_conormal_twist: i64,
    /// Projective dimension bound for the double-projection system:
    /// 13 - 3 - 6.
    pub system_dim_lower_bound: i64,
    /// dim of the space of quadrics on P^4.
    pub quadric_space_dim: i64,
    /// dim of degree-12 sections on the parameter line of the sextic.
    pub sextic_restriction_dim: i64,
    /// Projective dimension of the quadrics through the sextic:
    /// 15 - 13 - 1.
    pub quadrics_through_sextic_projective_dim: i64,
}

pub fn dimension_count() -> DimensionCount {
    let axiom_h0_hyperplane = 14;
    let axiom_h0_conic_degree2 = 3;
    let axiom_h0_conormal_twist = 6;
    let quadric_space_dim = 15;
    let sextic_restriction_dim = 13;
    DimensionCount {
        axiom_h0_hyperplane,
        axiom_h0_conic_degree2,
        axiom_h0_conormal_twist,
        system_dim_lower_bound: (axiom_h0_hyperplane - 1)
            - axiom_h0_conic_degree2
            - axiom_h0_conormal_twist,
        quadric_space_dim,
        sextic_restriction_dim,
        quadrics_through_sextic_projective_dim: quadric_space_dim - sextic_restriction_dim - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowup_quadruples() {
        assert_eq!(
            ThreefoldData::genus12_with_conic().blowup_ring(),
            BlowupRing { h3: 22, h2e: 0, he2: -2, e3: 0 }
        );
        assert_eq!(
            ThreefoldData::quadric_with_sextic().blowup_ring(),
            BlowupRing { h3: 2, h2e: 0, he2: -6, e3: -16 }
        );
        assert_eq!(
            ThreefoldData::p3_with_line().blowup_ring(),
            BlowupRing { h3: 1, h2e: 0, he2: -1, e3: -2 }
        );
    }

    #[test]
    fn degree_bound_on_the_quadric_side() {
        // (3H' - E)^2 . (2H' - mE) = 24 - 20m
        let ring = ThreefoldData::quadric_with_sextic().blowup_ring();
        let anti = DivClass::new(3, -1);
        for m in 1..=3 {
            let class = DivClass::new(2, -m);
            assert_eq!(ring.square_times(anti, class), 24 - 20 * m);
        }
        // the anticanonical cube on the blown-up quadric
        assert_eq!(ring.cube(anti), 16);
    }

    #[test]
    fn conic_side_numbers() {
        let data = ThreefoldData::genus12_with_conic();
        let ring = data.blowup_ring();
        // (H' - E)^2 . E = 4: the exceptional divisor is not contracted
        let anti = data.anticanonical();
        assert_eq!(anti, DivClass::new(1, -1));
        assert_eq!(ring.square_times(anti, DivClass::E), 4);
        // H'^3 = 22 = 2g - 2 for g = 12
        assert_eq!(ring.cube(DivClass::H), 22);
        // balanced normal bundle: E^3 = 0 iff deg N = 0
        assert_eq!(data.normal_bundle_degree(), 0);
        assert_eq!(ring.e3, 0);
    }

    #[test]
    fn lattice_identities() {
        let h = DivClass::H;
        let e = DivClass::E;
        // 2(H' - 2E) - (2H' - 5E) = E
        assert_eq!(2 * (h - 2 * e) - (2 * h - 5 * e), e);
        assert_ne!(h - e, h - 2 * e);
        // -K on the quadric side is 3H' - E
        assert_eq!(
            ThreefoldData::quadric_with_sextic().anticanonical(),
            DivClass::new(3, -1)
        );
    }

    #[test]
    fn triple_product_is_symmetric_and_trilinear() {
        let ring = ThreefoldData::quadric_with_sextic().blowup_ring();
        let classes = [
            DivClass::new(1, 0),
            DivClass::new(0, 1),
            DivClass::new(3, -1),
            DivClass::new(2, -5),
            DivClass::new(-1, 4),
        ];
        for &a in &classes {
            for &b in &classes {
                for &c in &classes {
                    let p = ring.triple_product(a, b, c);
                    assert_eq!(p, ring.triple_product(b, a, c));
                    assert_eq!(p, ring.triple_product(c, b, a));
                    // linearity in the first slot
                    let sum = ring.triple_product(a + b, b, c);
                    assert_eq!(sum, p + ring.triple_product(b, b, c));
                }
            }
        }
    }

    #[test]
    fn dimension_bookkeeping() {
        let d = dimension_count();
        assert_eq!(d.system_dim_lower_bound, 4);
        assert_eq!(d.quadrics_through_sextic_projective_dim, 1);
        assert_eq!(
            (d.axiom_h0_hyperplane, d.axiom_h0_conic_degree2, d.axiom_h0_conormal_twist),
            (14, 3, 6)
        );
    }
}
