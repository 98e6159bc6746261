use crate::field::Field;

use super::{FactorizeOver, MultiPoly, PolyError, UniPoly};

/// A homogeneous polynomial in two variables `(t0, t1)`, stored densely:
/// `coeffs[i]` is the coefficient of `t0^(d-i) * t1^i`. The zero form has
/// no coefficients (and no degree).
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> BinaryForm<K> {
    pub fn zero() -> Self {
        BinaryForm { coeffs: Vec::new() }
    }

    /// Builds a form of degree `coeffs.len() - 1`; an all-zero vector
    /// collapses to the zero form.
    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        if coeffs.iter().all(K::is_zero) {
            return BinaryForm::zero();
        }
        BinaryForm { coeffs }
    }

    /// `t0^(d-i) * t1^i`.
    pub fn monomial(degree: usize, i: usize) -> Self {
        assert!(i <= degree, "exponent exceeds degree");
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[i] = K::one();
        BinaryForm { coeffs }
    }

    pub fn constant(c: K) -> Self {
        BinaryForm::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn from_multipoly(p: &MultiPoly<K>) -> Result<Self, PolyError> {
        if p.nvars() != 2 {
            return Err(PolyError::ArityMismatch { expected: 2, got: p.nvars() });
        }
        if p.is_zero() {
            return Ok(BinaryForm::zero());
        }
        let d = p.homogeneous_degree().ok_or(PolyError::NotHomogeneous)? as usize;
        let mut coeffs = vec![K::zero(); d + 1];
        for (exps, c) in p.terms() {
            coeffs[exps[1] as usize] = c.clone();
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn to_multipoly(&self) -> MultiPoly<K> {
        let mut out = MultiPoly::zero(2);
        if let Some(d) = self.degree() {
            for (i, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out = out.add(&MultiPoly::monomial(
                        2,
                        vec![(d - i) as u32, i as u32],
                        c.clone(),
                    ));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree(), other.degree(), "degree mismatch in form addition");
        BinaryForm::from_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return BinaryForm::zero();
        }
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BinaryForm::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = BinaryForm::constant(K::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, t0: &K, t1: &K) -> K {
        let Some(d) = self.degree() else {
            return K::zero();
        };
        let mut acc = K::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc + c.clone() * t0.pow((d - i) as u32) * t1.pow(i as u32);
        }
        acc
    }

    pub fn derivative_t0(&self) -> Self {
        let Some(d) = self.degree() else {
            return BinaryForm::zero();
        };
        if d == 0 {
            return BinaryForm::zero();
        }
        let coeffs = self.coeffs[..d]
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * K::from_int((d - i) as i64))
            .collect();
        BinaryForm::from_coeffs(coeffs)
    }

    pub fn derivative_t1(&self) -> Self {
        let Some(d) = self.degree() else {
            return BinaryForm::zero();
        };
        if d == 0 {
            return BinaryForm::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * K::from_int((i + 1) as i64))
            .collect();
        BinaryForm::from_coeffs(coeffs)
    }

    /// The coefficient of the lexicographically largest term, i.e. the
    /// first nonzero coefficient (highest `t0` power).
    pub fn leading_coefficient(&self) -> Option<&K> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Scales so the lexicographically-leading coefficient is one.
    pub fn normalized(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    /// Splits off the exact powers of `t0` and `t1`: returns
    /// `(a, b, core)` with `self = t0^a * t1^b * core` and `core` having
    /// nonzero end coefficients. Requires a nonzero form.
    pub fn strip_monomial_factors(&self) -> (usize, usize, Self) {
        assert!(!self.is_zero(), "stripping the zero form");
        let b = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let a = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        let core = BinaryForm {
            coeffs: self.coeffs[b..self.coeffs.len() - a].to_vec(),
        };
        (a, b, core)
    }

    /// Dehomogenization `f(1, x)`. Faithful (degree-preserving) exactly
    /// when the form has no `t0` factor.
    pub fn dehomogenized(&self) -> UniPoly<K> {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// `t0^d * u(t1/t0)`, the homogenization of `u` to degree `d >= deg u`.
    pub fn homogenized(u: &UniPoly<K>, d: usize) -> Self {
        let mut coeffs = u.coeffs().to_vec();
        assert!(coeffs.len() <= d + 1, "degree too small to homogenize into");
        coeffs.resize(d + 1, K::zero());
        BinaryForm::from_coeffs(coeffs)
    }

    /// Greatest common divisor, normalized so the lexicographically
    /// leading coefficient is one. Errors when both inputs are zero.
    ///
    /// Powers of `t0` and `t1` are extracted explicitly; the cores then
    /// dehomogenize faithfully and a univariate Euclidean pass finishes
    /// the job.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(PolyError::GcdOfZeroForms),
            (true, false) => return Ok(other.normalized()),
            (false, true) => return Ok(self.normalized()),
            _ => {}
        }
        let (a1, b1, core1) = self.strip_monomial_factors();
        let (a2, b2, core2) = other.strip_monomial_factors();
        let g = core1.dehomogenized().gcd(&core2.dehomogenized());
        let gd = g.degree().expect("gcd of nonzero polynomials");
        let mut out = BinaryForm::homogenized(&g, gd);
        let t0 = BinaryForm::monomial(1, 0);
        let t1 = BinaryForm::monomial(1, 1);
        for _ in 0..a1.min(a2) {
            out = out.mul(&t0);
        }
        for _ in 0..b1.min(b2) {
            out = out.mul(&t1);
        }
        Ok(out.normalized())
    }

    /// Exact division, panicking if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by the zero form");
        if self.is_zero() {
            return BinaryForm::zero();
        }
        let (a1, b1, core1) = self.strip_monomial_factors();
        let (a2, b2, core2) = divisor.strip_monomial_factors();
        assert!(a1 >= a2 && b1 >= b2, "inexact binary-form division");
        let q = core1.dehomogenized().div_exact(&core2.dehomogenized());
        let d1 = core1.degree().unwrap();
        let d2 = core2.degree().unwrap();
        let mut out = BinaryForm::homogenized(&q, d1 - d2);
        let t0 = BinaryForm::monomial(1, 0);
        let t1 = BinaryForm::monomial(1, 1);
        for _ in 0..a1 - a2 {
            out = out.mul(&t0);
        }
        for _ in 0..b1 - b2 {
            out = out.mul(&t1);
        }
        out
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        if other.is_zero() {
            return true;
        }
        let (a1, b1, core1) = other.strip_monomial_factors();
        let (a2, b2, core2) = self.strip_monomial_factors();
        a1 >= a2 && b1 >= b2 && core2.dehomogenized().divides(&core1.dehomogenized())
    }

    /// A binary form is squarefree iff its two partials share no common
    /// projective root (the Euler identity ties the form itself in).
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroForm);
        }
        let g = self.derivative_t0().gcd(&self.derivative_t1())?;
        Ok(g.degree() == Some(0))
    }

    /// The projective root of a linear form, canonically scaled so the
    /// first nonzero coordinate is one.
    pub fn linear_root(&self) -> Option<(K, K)> {
        if self.degree() != Some(1) {
            return None;
        }
        // c0 t0 + c1 t1 vanishes at (t0 : t1) = (-c1 : c0)
        let x0 = -self.coeffs[1].clone();
        let x1 = self.coeffs[0].clone();
        if x0.is_zero() {
            let inv = x1.inv().expect("nonzero linear form");
            Some((K::zero(), x1 * inv))
        } else {
            let inv = x0.inv().expect("nonzero coordinate");
            Some((K::one(), x1 * inv))
        }
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> BinaryForm<L> {
        if self.is_zero() {
            return BinaryForm::zero();
        }
        BinaryForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn to_text(&self, labels: &[&str; 2]) -> String {
        self.to_multipoly().to_text(labels)
    }
}

impl<K: FactorizeOver> BinaryForm<K> {
    /// Complete factorization into normalized pairwise-coprime factors
    /// with multiplicities; the factors multiply back to the input up to
    /// a nonzero scalar. Over `QQ` the factors are irreducible; over the
    /// extension nonlinear factors are squarefree and rootless.
    pub fn factor(&self) -> Result<Vec<(BinaryForm<K>, u32)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroForm);
        }
        let (a, b, core) = self.strip_monomial_factors();
        let mut out: Vec<(BinaryForm<K>, u32)> = Vec::new();
        if a > 0 {
            out.push((BinaryForm::monomial(1, 0), a as u32));
        }
        if b > 0 {
            out.push((BinaryForm::monomial(1, 1), b as u32));
        }
        if core.degree() == Some(0) {
            out.sort_by_key(factor_sort_key);
            return Ok(out);
        }
        let dehom = core.dehomogenized();
        for (part, mult) in dehom.squarefree_decomposition() {
            for factor in K::factor_squarefree(&part) {
                let fd = factor.degree().expect("nonconstant factor");
                out.push((BinaryForm::homogenized(&factor, fd).normalized(), mult));
            }
        }
        out.sort_by_key(factor_sort_key);
        Ok(out)
    }
}

fn factor_sort_key<K: Field>(entry: &(BinaryForm<K>, u32)) -> (usize, Vec<String>) {
    let (form, _) = entry;
    (
        form.degree().unwrap_or(0),
        form.coeffs().iter().map(|c| c.to_string()).collect(),
    )
}

impl<K: Field> std::fmt::Debug for BinaryForm<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text(&["t0", "t1"]))
    }
}
