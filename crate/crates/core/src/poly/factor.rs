//! Univariate factorization over the two coefficient fields.
//!
//! Rational polynomials are factored completely into irreducibles:
//! squarefree input is reduced to a primitive integer polynomial, factored
//! modulo a single prime chosen beyond twice the factor coefficient bound
//! (so no Hensel lifting is needed), and modular factors are recombined by
//! subset search with exact trial division. Over the quadratic extension
//! only linear factors are extracted — roots are found through the norm
//! polynomial and the quadratic formula on its rational quadratic factors
//! — and the rootless cofactor is returned as a single block.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, QuadExt, Rational};

use super::UniPoly;

/// A field over which squarefree univariate polynomials can be split.
pub trait FactorizeOver: Field {
    /// Factors a squarefree nonconstant polynomial into monic pairwise
    /// coprime factors whose product is a scalar multiple of the input.
    ///
    /// Over `QQ` every returned factor is irreducible. Over `QQ(sqrt5)`
    /// all linear factors are extracted and the remaining factor (if any)
    /// is squarefree with no roots in the field.
    fn factor_squarefree(p: &UniPoly<Self>) -> Vec<UniPoly<Self>>;
}

impl FactorizeOver for Rational {
    fn factor_squarefree(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
        let deg = p.degree().expect("factoring the zero polynomial");
        assert!(deg >= 1, "factoring a constant");
        assert!(p.is_squarefree(), "input must be squarefree");
        if deg == 1 {
            return vec![p.monic()];
        }
        let f = to_primitive_integer(p);
        let mut factors = factor_squarefree_integer(&f);
        factors.sort_by(compare_int_polys);
        factors.iter().map(|g| from_integer(g).monic()).collect()
    }
}

impl FactorizeOver for QuadExt {
    fn factor_squarefree(p: &UniPoly<QuadExt>) -> Vec<UniPoly<QuadExt>> {
        let deg = p.degree().expect("factoring the zero polynomial");
        assert!(deg >= 1, "factoring a constant");
        if deg == 1 {
            return vec![p.monic()];
        }
        let mut roots = roots_in_quadext(p);
        roots.sort_by_key(|r| r.to_string());
        roots.dedup();
        let mut out = Vec::new();
        let mut cofactor = p.monic();
        for root in roots {
            let linear = UniPoly::from_coeffs(vec![-root, QuadExt::one()]);
            cofactor = cofactor.div_exact(&linear);
            out.push(linear);
        }
        if !cofactor.is_constant() {
            out.push(cofactor);
        }
        out
    }
}

/// All roots of `p` lying in `QQ(sqrt5)`. The norm `p * conj(p)` has
/// rational coefficients and is divisible by the minimal polynomial of
/// every root of `p` in the extension, so rational linear and quadratic
/// factors of the norm enumerate all candidates.
fn roots_in_quadext(p: &UniPoly<QuadExt>) -> Vec<QuadExt> {
    let conj = p.map_coeffs(QuadExt::conj);
    let norm = p.mul(&conj).map_coeffs(|c| {
        c.as_rational()
            .expect("norm polynomial has rational coefficients")
    });
    let mut candidates: Vec<QuadExt> = Vec::new();
    for (part, _) in norm.squarefree_decomposition() {
        for factor in Rational::factor_squarefree(&part) {
            match factor.degree() {
                Some(1) => {
                    candidates.push(QuadExt::from_rational(-factor.coeff(0)));
                }
                Some(2) => {
                    // monic x^2 + bx + c with irrational roots (-b ± sqrt(disc))/2
                    let b = factor.coeff(1);
                    let c = factor.coeff(0);
                    let disc = b.clone() * b.clone() - Rational::from(4) * c;
                    if let Some(sq) = QuadExt::sqrt_of_rational(&disc) {
                        let half = QuadExt::from_rational(Rational::from((1, 2)));
                        let nb = QuadExt::from_rational(-b);
                        candidates.push((nb.clone() + sq.clone()) * half.clone());
                        candidates.push((nb - sq) * half);
                    }
                }
                _ => {}
            }
        }
    }
    candidates
        .into_iter()
        .filter(|r| p.eval(r).is_zero())
        .collect()
}

// ---------------------------------------------------------------------------
// integer polynomial layer

fn to_primitive_integer(p: &UniPoly<Rational>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * &lcm / c.denom())
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut content = BigInt::zero();
    for x in &c {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return c;
    }
    if c.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    c.into_iter().map(|x| x / &content).collect()
}

fn from_integer(c: &[BigInt]) -> UniPoly<Rational> {
    UniPoly::from_coeffs(c.iter().map(|x| Rational::from_bigint(x.clone())).collect())
}

fn compare_int_polys(a: &Vec<BigInt>, b: &Vec<BigInt>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Coefficient bound for `lc(f)` times any monic factor of `f`:
/// a comfortable overshoot of the Landau–Mignotte bound.
fn factor_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let one_norm: BigInt = f.iter().map(|c| c.abs()).sum();
    let lc = f.last().expect("nonzero polynomial").abs();
    (BigInt::from(4).pow(n as u32)) * one_norm * (lc + 1)
}

fn factor_squarefree_integer(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    let bound = factor_bound(f);
    // 2*bound + 1 is odd, and every prime we try exceeds twice the
    // coefficient bound, so symmetric lifts of true factors are exact
    let mut p: BigInt = bound * 2 + 1;
    loop {
        while !is_prime(&p) {
            p += 2;
        }
        // p exceeds |lc(f)|, so the leading coefficient stays a unit mod p;
        // only non-squarefree reduction forces another prime
        let fp = ModPoly::reduce(f, &p);
        if fp.gcd(&fp.derivative()).degree() == Some(0) {
            let modular = factor_mod_p(&fp);
            return recombine(f, modular, &p);
        }
        p += 2;
    }
}

fn recombine(f: &[BigInt], mut modular: Vec<ModPoly>, p: &BigInt) -> Vec<Vec<BigInt>> {
    modular.sort_by(|a, b| compare_int_polys(&a.coeffs, &b.coeffs));
    let mut current = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    'sizes: while 2 * size <= modular.len() {
        let mut combo = Combinations::new(modular.len(), size);
        while let Some(subset) = combo.next() {
            let lc = current.last().expect("nonzero").clone();
            let mut prod = ModPoly::constant(lc.mod_floor(p), p);
            for &i in subset {
                prod = prod.mul(&modular[i]);
            }
            let candidate = primitive_part(prod.symmetric_lift());
            if candidate.len() < 2 {
                continue;
            }
            if let Some(quotient) = exact_divide(&current, &candidate) {
                current = quotient;
                out.push(candidate);
                // drop the used modular factors and restart at this size
                let used: Vec<usize> = subset.to_vec();
                for &i in used.iter().rev() {
                    modular.remove(i);
                }
                continue 'sizes;
            }
        }
        size += 1;
    }
    if current.len() >= 2 {
        out.push(primitive_part(current));
    }
    out
}

/// Division in `ZZ[x]`, `Some(quotient)` iff exact.
fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = from_integer(num).divrem(&from_integer(den));
    if !r.is_zero() {
        return None;
    }
    let mut out = Vec::with_capacity(q.coeffs().len());
    for c in q.coeffs() {
        if !c.is_integer() {
            return None;
        }
        out.push(c.numer().clone());
    }
    Some(out)
}

struct Combinations {
    n: usize,
    indices: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, indices: (0..k).collect(), started: false }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.indices.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.indices[i] < self.n - (k - i) {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                return Some(&self.indices);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// arithmetic mod p

/// Monic-friendly dense polynomial over `Z/p`, coefficients in `[0, p)`.
#[derive(Clone, PartialEq, Eq)]
struct ModPoly {
    coeffs: Vec<BigInt>,
    p: BigInt,
}

impl ModPoly {
    fn reduce(c: &[BigInt], p: &BigInt) -> Self {
        let coeffs = c.iter().map(|x| x.mod_floor(p)).collect();
        ModPoly { coeffs, p: p.clone() }.trimmed()
    }

    fn constant(c: BigInt, p: &BigInt) -> Self {
        ModPoly { coeffs: vec![c.mod_floor(p)], p: p.clone() }.trimmed()
    }

    fn x(p: &BigInt) -> Self {
        ModPoly { coeffs: vec![BigInt::zero(), BigInt::one()], p: p.clone() }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    fn inv_scalar(&self, a: &BigInt) -> BigInt {
        // p prime: Fermat inverse
        a.modpow(&(&self.p - 2), &self.p)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) - other.coeff(i)).mod_floor(&self.p))
            .collect();
        ModPoly { coeffs, p: self.p.clone() }.trimmed()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ModPoly { coeffs: Vec::new(), p: self.p.clone() };
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        for c in &mut coeffs {
            *c = c.mod_floor(&self.p);
        }
        ModPoly { coeffs, p: self.p.clone() }.trimmed()
    }

    fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("mod-p division by zero");
        let lead_inv = self.inv_scalar(&divisor.coeffs[d]);
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return (
                ModPoly { coeffs: Vec::new(), p: self.p.clone() },
                self.clone(),
            );
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = (&rem[i] * &lead_inv).mod_floor(&self.p);
            if q.is_zero() {
                continue;
            }
            quot[i - d] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = (&rem[i - d + j] - &q * dc).mod_floor(&self.p);
            }
        }
        (
            ModPoly { coeffs: quot, p: self.p.clone() }.trimmed(),
            ModPoly { coeffs: rem, p: self.p.clone() }.trimmed(),
        )
    }

    fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.inv_scalar(lc);
                let coeffs = self
                    .coeffs
                    .iter()
                    .map(|c| (c * &inv).mod_floor(&self.p))
                    .collect();
                ModPoly { coeffs, p: self.p.clone() }
            }
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly { coeffs: Vec::new(), p: self.p.clone() };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (c * BigInt::from(i)).mod_floor(&self.p))
            .collect();
        ModPoly { coeffs, p: self.p.clone() }.trimmed()
    }

    /// `self^e mod m`.
    fn powmod(&self, e: &BigInt, m: &Self) -> Self {
        let mut acc = ModPoly::constant(BigInt::one(), &self.p);
        let base = self.divrem(m).1;
        let bits = e.to_str_radix(2);
        for bit in bits.bytes() {
            acc = acc.mul(&acc).divrem(m).1;
            if bit == b'1' {
                acc = acc.mul(&base).divrem(m).1;
            }
        }
        acc
    }

    /// Coefficients lifted to symmetric residues in `(-p/2, p/2)`.
    fn symmetric_lift(&self) -> Vec<BigInt> {
        let half = &self.p >> 1;
        self.coeffs
            .iter()
            .map(|c| if c > &half { c - &self.p } else { c.clone() })
            .collect()
    }
}

/// Distinct-degree then equal-degree splitting; input monic-izable and
/// squarefree mod p. Returns monic irreducible factors.
fn factor_mod_p(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.p.clone();
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut frob = ModPoly::x(&p); // x^(p^d) mod rest, advanced below
    let mut d = 0usize;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            out.push(rest.clone());
            break;
        }
        frob = frob.powmod(&p.clone(), &rest);
        let split = frob.sub(&ModPoly::x(&p)).gcd(&rest);
        if split.degree().unwrap_or(0) > 0 {
            equal_degree_split(&split, d, &mut out);
            rest = rest.divrem(&split).0.monic();
            frob = frob.divrem(&rest).1;
        }
    }
    out
}

/// Cantor–Zassenhaus split of a product of degree-`d` irreducibles, with a
/// deterministic trial sequence so factorization output is reproducible.
fn equal_degree_split(g: &ModPoly, d: usize, out: &mut Vec<ModPoly>) {
    let deg = g.degree().unwrap_or(0);
    if deg == d {
        out.push(g.monic());
        return;
    }
    let p = g.p.clone();
    let exponent = (p.pow(d as u32) - 1) >> 1;
    let mut rng_state: u64 = 0x9e37_79b9_7f4a_7c15 ^ (d as u64);
    loop {
        let trial = deterministic_poly(&p, deg - 1, &mut rng_state);
        if trial.degree().is_none() {
            continue;
        }
        let b = trial.powmod(&exponent, g);
        let b1 = b.sub(&ModPoly::constant(BigInt::one(), &p));
        let t = b1.gcd(g);
        let td = t.degree().unwrap_or(0);
        if td > 0 && td < deg {
            equal_degree_split(&t, d, out);
            equal_degree_split(&g.divrem(&t).0, d, out);
            return;
        }
    }
}

fn deterministic_poly(p: &BigInt, max_deg: usize, state: &mut u64) -> ModPoly {
    let mut coeffs = Vec::with_capacity(max_deg + 1);
    for _ in 0..=max_deg {
        // xorshift64* stream reduced mod p
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        coeffs.push(BigInt::from(*state).mod_floor(p));
    }
    ModPoly { coeffs, p: p.clone() }.trimmed()
}

/// Miller–Rabin with the standard small-prime witness set (deterministic
/// far beyond the prime sizes this crate ever draws).
fn is_prime(n: &BigInt) -> bool {
    let small: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < &BigInt::from(2) {
        return false;
    }
    for &q in &small {
        let q = BigInt::from(q);
        if n == &q {
            return true;
        }
        if (n % &q).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d: BigInt = &n_minus_1 >> s;
    'witness: for &a in &small {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn product(factors: &[UniPoly<Rational>]) -> UniPoly<Rational> {
        factors.iter().fold(UniPoly::one(), |acc, f| acc.mul(f))
    }

    #[test]
    fn fifth_roots_of_unity() {
        // x^5 - 1 = (x - 1)(x^4 + x^3 + x^2 + x + 1)
        let f = qpoly(&[-1, 0, 0, 0, 0, 1]);
        let factors = Rational::factor_squarefree(&f);
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], qpoly(&[-1, 1]));
        assert_eq!(factors[1], qpoly(&[1, 1, 1, 1, 1]));
        assert_eq!(product(&factors), f);
    }

    #[test]
    fn eisenstein_quintics_are_irreducible() {
        for c in [2i64, 3] {
            let f = qpoly(&[-c, 0, 0, 0, 0, 1]);
            let factors = Rational::factor_squarefree(&f);
            assert_eq!(factors.len(), 1, "x^5 - {c} is irreducible");
            assert_eq!(factors[0], f);
        }
    }

    #[test]
    fn rootless_but_reducible_products_split() {
        // (x^2 + 1)(x^2 + 2) has no rational roots but two quadratic factors
        let f = qpoly(&[1, 0, 1]).mul(&qpoly(&[2, 0, 1]));
        let factors = Rational::factor_squarefree(&f);
        assert_eq!(factors, vec![qpoly(&[1, 0, 1]), qpoly(&[2, 0, 1])]);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(3x + 2)(x^2 - x + 5)
        let f = qpoly(&[-1, 2]).mul(&qpoly(&[2, 3])).mul(&qpoly(&[5, -1, 1]));
        let factors = Rational::factor_squarefree(&f);
        assert_eq!(factors.len(), 3);
        assert!(product(&factors).proportional(&f));
    }

    impl UniPoly<Rational> {
        fn proportional(&self, other: &Self) -> bool {
            self.monic() == other.monic()
        }
    }

    #[test]
    fn golden_ratio_quadratic_splits_over_extension() {
        // x^2 + 3x + 1 = (x + phi^2)(x + phi^-2)
        let f: UniPoly<QuadExt> = UniPoly::from_coeffs(vec![
            QuadExt::one(),
            QuadExt::from(3),
            QuadExt::one(),
        ]);
        let factors = QuadExt::factor_squarefree(&f);
        assert_eq!(factors.len(), 2);
        let phi = QuadExt::phi();
        let roots: Vec<QuadExt> = factors.iter().map(|l| -l.coeff(0)).collect();
        assert!(roots.contains(&-phi.clone().pow(2)));
        assert!(roots.contains(&-phi.pow(2).inv().unwrap()));
    }

    #[test]
    fn extension_leaves_rootless_cofactor_whole() {
        // x^2 + 1 has no roots in a real field
        let f: UniPoly<QuadExt> =
            UniPoly::from_coeffs(vec![QuadExt::one(), QuadExt::zero(), QuadExt::one()]);
        let factors = QuadExt::factor_squarefree(&f);
        assert_eq!(factors, vec![f]);
        // x^2 - 5 splits
        let g: UniPoly<QuadExt> =
            UniPoly::from_coeffs(vec![QuadExt::from(-5), QuadExt::zero(), QuadExt::one()]);
        let factors = QuadExt::factor_squarefree(&g);
        assert_eq!(factors.len(), 2);
        for l in &factors {
            assert!(g.eval(&-l.coeff(0)).is_zero());
        }
    }

    #[test]
    fn primality_test_sanity() {
        assert!(is_prime(&BigInt::from(2)));
        assert!(is_prime(&BigInt::from(101)));
        assert!(is_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(561))); // Carmichael
        assert!(!is_prime(&BigInt::from(1_000_000_005u64)));
    }
}
