use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::field::Field;

use super::PolyError;

/// Integer torus weight per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `<exponents, weights>`.
    pub fn weight_of(&self, exps: &[u32]) -> i64 {
        exps.iter()
            .zip(&self.0)
            .map(|(e, w)| i64::from(*e) * w)
            .sum()
    }
}

/// A sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in a map from exponent vectors to nonzero coefficients;
/// the zero polynomial has an empty map. The map is ordered, so iteration
/// (and hence serialization) is deterministic: descending lexicographic
/// term order everywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<K: Field> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, K>,
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, value: K) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(vec![0; nvars], value);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, K::one())
    }

    /// The variable `x_i` as a polynomial.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        MultiPoly::monomial(nvars, exps, K::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: K) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length mismatch");
        let mut p = MultiPoly::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &K)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> K {
        self.terms.get(exps).cloned().unwrap_or_else(K::zero)
    }

    /// The coefficient of the lexicographically largest term, if any.
    pub fn leading_coefficient(&self) -> Option<&K> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    /// `Some(d)` iff the polynomial is nonzero and every term has total
    /// degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn insert_term(&mut self, exps: Vec<u32>, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * k.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Ring-homomorphic substitution: variable `x_i` is replaced by
    /// `images[i]`. All images must live in one common polynomial ring.
    pub fn substitute(&self, images: &[MultiPoly<K>]) -> Result<MultiPoly<K>, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target_vars = match images.first() {
            None => return Ok(MultiPoly::constant(0, self.coefficient(&[]))),
            Some(first) => first.nvars,
        };
        if images.iter().any(|im| im.nvars != target_vars) {
            return Err(PolyError::MixedVariableCounts);
        }
        // cache powers of each image up to the largest exponent it is raised to
        let mut max_exp = vec![0u32; self.nvars];
        for exps in self.terms.keys() {
            for (m, e) in max_exp.iter_mut().zip(exps) {
                *m = (*m).max(*e);
            }
        }
        let powers: Vec<Vec<MultiPoly<K>>> = images
            .iter()
            .zip(&max_exp)
            .map(|(im, &m)| {
                let mut pows = Vec::with_capacity(m as usize + 1);
                pows.push(MultiPoly::one(target_vars));
                for k in 1..=m {
                    let next = pows[(k - 1) as usize].mul(im);
                    pows.push(next);
                }
                pows
            })
            .collect();
        let mut out = MultiPoly::zero(target_vars);
        for (exps, coeff) in &self.terms {
            let mut term = MultiPoly::constant(target_vars, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[K]) -> Result<K, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = K::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in point.iter().zip(exps) {
                term = term * x.pow(e);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.nvars, "variable index out of range");
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, coeff) in &self.terms {
            let e = exps[i];
            if e == 0 {
                continue;
            }
            let mut dexps = exps.clone();
            dexps[i] = e - 1;
            out.insert_term(dexps, coeff.clone() * K::from_int(i64::from(e)));
        }
        out
    }

    /// All partial derivatives, one per variable.
    pub fn partials(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// `Some(k)` iff the polynomial is nonzero and every term has torus
    /// weight `k` under `w`; the zero polynomial yields `None`.
    pub fn torus_weight(&self, w: &WeightVector) -> Option<i64> {
        assert_eq!(w.len(), self.nvars, "weight vector length mismatch");
        let mut weights = self.terms.keys().map(|e| w.weight_of(e));
        let first = weights.next()?;
        weights.all(|k| k == first).then_some(first)
    }

    /// Applies a variable permutation: variable `i` of the result is
    /// variable `perm[i]` of the input.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars, "permutation length mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, coeff) in &self.terms {
            let new_exps: Vec<u32> = perm.iter().map(|&j| exps[j]).collect();
            out.insert_term(new_exps, coeff.clone());
        }
        out
    }

    /// Maps coefficients into another field, e.g. promoting rationals
    /// into the quadratic extension.
    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, coeff) in &self.terms {
            out.insert_term(exps.clone(), f(coeff));
        }
        out
    }

    /// Divides by the lexicographically-leading coefficient, fixing the
    /// scale of a nonzero polynomial canonically.
    pub fn normalized(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// True if `other` is a nonzero scalar multiple of `self`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    /// Canonical text form: terms in descending lexicographic order,
    /// e.g. `y0*y6 - y3^2`.
    pub fn to_text(&self, labels: &[&str]) -> String {
        assert_eq!(labels.len(), self.nvars, "label count mismatch");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let coeff_str = coeff.to_string();
            let (sign, mag) = match coeff_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff_str),
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {} ", sign);
            }
            let mut factors: Vec<String> = Vec::new();
            for (label, &e) in labels.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => factors.push((*label).to_string()),
                    _ => factors.push(format!("{label}^{e}")),
                }
            }
            if factors.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag == "1" {
                let _ = write!(out, "{}", factors.join("*"));
            } else {
                let _ = write!(out, "{}*{}", mag, factors.join("*"));
            }
        }
        out
    }
}

impl MultiPoly<crate::field::Rational> {
    /// Rescales a rational polynomial to coprime integer coefficients
    /// with a positive lexicographically-leading coefficient.
    pub fn integer_normalized(&self) -> Self {
        use crate::field::Rational;
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for (_, c) in self.terms() {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for (_, c) in self.terms() {
            gcd = gcd.gcd(&(c.numer() * &lcm / c.denom()));
        }
        let lead = self.leading_coefficient().expect("nonzero polynomial");
        if lead.is_negative() {
            gcd = -gcd;
        }
        let scale = Rational::from_bigint(lcm)
            * Rational::from_bigint(gcd).inv().expect("nonzero content");
        self.scale(&scale)
    }
}

impl<K: Field> std::fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.to_text(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn var(i: usize) -> MultiPoly<Rational> {
        MultiPoly::variable(5, i)
    }

    /// y0*y6 - y3^2 in coordinates (y0, y1, y3, y5, y6).
    pub(crate) fn q0() -> MultiPoly<Rational> {
        var(0).mul(&var(4)).sub(&var(2).mul(&var(2)))
    }

    /// y3^2 - y1*y5.
    pub(crate) fn qinf() -> MultiPoly<Rational> {
        var(2).mul(&var(2)).sub(&var(1).mul(&var(3)))
    }

    #[test]
    fn canonical_text_matches_descending_lex() {
        let labels = ["y0", "y1", "y3", "y5", "y6"];
        assert_eq!(q0().to_text(&labels), "y0*y6 - y3^2");
        // descending lex ranks y1*y5 above y3^2
        assert_eq!(qinf().to_text(&labels), "-y1*y5 + y3^2");
        assert_eq!(q0().add(&qinf()).to_text(&labels), "y0*y6 - y1*y5");
    }

    #[test]
    fn torus_weights_of_pencil_generators() {
        let w = WeightVector::new(vec![0, 1, 3, 5, 6]);
        assert_eq!(q0().torus_weight(&w), Some(6));
        assert_eq!(qinf().torus_weight(&w), Some(6));
        // mixed weights: y0*y6 + y1 has weights 6 and 1
        let mixed = var(0).mul(&var(4)).add(&var(1));
        assert_eq!(mixed.torus_weight(&w), None);
        assert_eq!(MultiPoly::<Rational>::zero(5).torus_weight(&w), None);
    }

    #[test]
    fn identity_substitution_is_identity() {
        let images: Vec<MultiPoly<Rational>> = (0..5).map(var).collect();
        assert_eq!(q0().substitute(&images).unwrap(), q0());
    }

    #[test]
    fn substitution_arity_checked() {
        let images: Vec<MultiPoly<Rational>> = (0..3).map(|i| MultiPoly::variable(3, i)).collect();
        assert!(matches!(
            q0().substitute(&images),
            Err(PolyError::ArityMismatch { expected: 5, got: 3 })
        ));
    }

    #[test]
    fn partials_of_rank_four_member() {
        // y0*y6 - y1*y5 -> (y6, -y5, 0, -y1, y0)
        let q1 = q0().add(&qinf());
        let parts = q1.partials();
        assert_eq!(parts[0], var(4));
        assert_eq!(parts[1], var(3).neg());
        assert!(parts[2].is_zero());
        assert_eq!(parts[3], var(1).neg());
        assert_eq!(parts[4], var(0));
        // constants die, y3^2 -> 2 y3 in slot 2
        assert!(MultiPoly::<Rational>::one(5).partials().iter().all(|p| p.is_zero()));
        let y3sq = var(2).mul(&var(2));
        assert_eq!(y3sq.partial(2), var(2).scale(&Rational::from(2)));
    }

    #[test]
    fn involution_swap_fixes_generators() {
        // (y0 <-> y6, y1 <-> y5, y3 fixed) is the reversal permutation
        let perm = [4, 3, 2, 1, 0];
        assert_eq!(q0().permute_vars(&perm), q0());
        assert_eq!(qinf().permute_vars(&perm), qinf());
        let twice = q0().permute_vars(&perm).permute_vars(&perm);
        assert_eq!(twice, q0());
    }
}
