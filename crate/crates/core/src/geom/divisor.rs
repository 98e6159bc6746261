use std::fmt;

use crate::field::Field;
use crate::poly::BinaryForm;

/// An effective divisor on the parameter line: pairwise-coprime factors
/// of a binary form with multiplicities. Linear factors expose their
/// projective root.
#[derive(Clone, PartialEq, Eq)]
pub struct P1Divisor<K: Field> {
    factors: Vec<(BinaryForm<K>, u32)>,
}

impl<K: Field> P1Divisor<K> {
    pub fn from_factors(factors: Vec<(BinaryForm<K>, u32)>) -> Self {
        debug_assert!(factors.iter().all(|(f, m)| !f.is_zero() && *m >= 1));
        P1Divisor { factors }
    }

    pub fn factors(&self) -> &[(BinaryForm<K>, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.degree().unwrap_or(0) * *m as usize)
            .sum()
    }

    /// All multiplicities are one (the factors themselves are squarefree
    /// by construction).
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    /// The points supporting linear factors, with multiplicities.
    pub fn rational_points(&self) -> Vec<((K, K), u32)> {
        self.factors
            .iter()
            .filter_map(|(f, m)| f.linear_root().map(|pt| (pt, *m)))
            .collect()
    }

    /// The multiplicity of a given point of the line.
    pub fn multiplicity_at(&self, point: &(K, K)) -> u32 {
        self.factors
            .iter()
            .filter_map(|(f, m)| (f.linear_root().as_ref() == Some(point)).then_some(*m))
            .sum()
    }
}

impl<K: Field> fmt::Display for P1Divisor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(form, m)| match form.linear_root() {
                Some((a, b)) => format!("{m}*({a} : {b})"),
                None => format!("{m}*[{}]", form.to_text(&["t0", "t1"])),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<K: Field> fmt::Debug for P1Divisor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
