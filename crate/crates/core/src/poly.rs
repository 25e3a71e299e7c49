//! Sparse multivariate polynomials over ℚ.
//!
//! # Key Operations
//! - Exact ring arithmetic (`+`, `-`, `*`, scalar multiples, powers).
//! - Formal calculus: [`Polynomial::partial_derivative`],
//!   [`Polynomial::hessian_det`].
//! - The apolarity action [`Polynomial::apply_diff_operator`]: a polynomial
//!   in x₁…x_k acts on a polynomial in y₁…y_k by substituting ∂/∂yᵢ for xᵢ.
//! - Linear changes of variables [`Polynomial::linear_substitute`], which
//!   composes with the *inverse* of the given matrix (p ↦ p∘C⁻¹).
//!
//! # Design Notes
//! - Coefficients are arbitrary-precision rationals ([`Rat`]), always in
//!   lowest terms with positive denominator (guaranteed by the scalar type).
//! - Terms live in a `BTreeMap` keyed by [`Monomial`], whose intrinsic order
//!   is graded lexicographic; printing walks the map in descending order, so
//!   textual output is canonical and deterministic.
//! - Variables are positional (`nvars` slots); display names are supplied at
//!   the boundary via [`Polynomial::to_string_with`]. Mixing ambient sizes
//!   is a programming error and panics.
//! - Exponents are machine integers; degrees in scope stay tiny, and any
//!   overflow is a hard (panicking) error rather than silent wraparound.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::CoreError;
use crate::linalg::QMatrix;
use crate::rational::format_rational;

/// The coefficient scalar: an arbitrary-precision rational in lowest terms
/// with positive denominator.
pub type Rat = num_rational::BigRational;

/// An exponent vector; one slot per variable of the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// Monomial with the given exponent vector.
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    /// The single variable xᵢ (0-based index).
    ///
    /// # Panics
    /// Panics if `index >= nvars`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Monomial { exponents }
    }

    /// Number of variable slots.
    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    /// The exponent vector.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of the i-th variable.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Degree under per-variable weights: Σ wᵢ·eᵢ.
    ///
    /// # Panics
    /// Panics if `weights.len() != nvars`.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        assert_eq!(weights.len(), self.nvars(), "weight vector length mismatch");
        self.exponents
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * w)
            .sum()
    }

    /// True for the constant monomial.
    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Product of monomials (exponent-wise sum).
    ///
    /// # Panics
    /// Panics on ambient mismatch or exponent overflow (a hard error by
    /// design: in-scope degrees are tiny, so overflow signals a bug).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "ambient mismatch in monomial product");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exponents }
    }

    /// Whether `self` divides `other` exponent-wise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars()
            && self.exponents.iter().zip(&other.exponents).all(|(&a, &b)| a <= b)
    }

    /// Exact quotient `self / other`, or `None` when not divisible.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial { exponents })
    }

    /// Least common multiple (exponent-wise max).
    ///
    /// # Panics
    /// Panics on ambient mismatch.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "ambient mismatch in monomial lcm");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exponents }
    }
}

/// Intrinsic order: graded lexicographic (degree first, then exponent
/// vectors compared left to right). This is the storage and printing order;
/// Gröbner computations use an explicit [`crate::order::MonomialOrder`].
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars(), "ambient mismatch in monomial comparison");
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial with rational coefficients.
///
/// Invariants: no stored zero coefficients; every monomial has `nvars` slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    /// The zero polynomial in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rat::one())
    }

    /// A constant polynomial.
    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable xᵢ (0-based) as a polynomial.
    pub fn variable(nvars: usize, index: usize) -> Self {
        Polynomial::from_monomial(Monomial::variable(nvars, index), Rat::one())
    }

    /// A single term `c·m`.
    pub fn from_monomial(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Build from a term list; repeated monomials are summed, zeros dropped.
    ///
    /// # Panics
    /// Panics if any monomial has the wrong ambient length.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Convenience: build from `(coefficient, exponent-vector)` pairs.
    pub fn from_exps(nvars: usize, terms: &[(Rat, &[u32])]) -> Self {
        Polynomial::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), c.clone())),
        )
    }

    /// Number of ambient variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True when there are no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate over terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of the monomial with the given exponent vector.
    pub fn coeff_exps(&self, exps: &[u32]) -> Rat {
        self.coeff(&Monomial::new(exps.to_vec()))
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        assert_eq!(m.nvars(), self.nvars, "ambient mismatch in term insertion");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_ambient(&self, other: &Polynomial) {
        assert_eq!(
            self.nvars, other.nvars,
            "ambient mismatch: {} vs {} variables",
            self.nvars, other.nvars
        );
    }

    /// Scalar multiple `c·self`.
    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `self^k` by repeated multiplication (exponents in scope are tiny).
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the i-th variable.
    ///
    /// # Panics
    /// Panics if `var_index` is out of range.
    pub fn partial_derivative(&self, var_index: usize) -> Polynomial {
        assert!(var_index < self.nvars, "variable index out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var_index);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var_index] = e - 1;
            out.add_term(Monomial::new(exps), c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Determinant of the Hessian matrix of second partials, computed
    /// exactly by cofactor expansion (the ambient sizes in scope are small).
    pub fn hessian_det(&self) -> Polynomial {
        let n = self.nvars;
        assert!(n >= 1, "Hessian requires at least one variable");
        let firsts: Vec<Polynomial> = (0..n).map(|i| self.partial_derivative(i)).collect();
        let hess: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (0..n).map(|j| firsts[i].partial_derivative(j)).collect())
            .collect();
        poly_det(&hess, n)
    }

    /// Apolarity action: interpret `self` as a polynomial in operators
    /// ∂/∂y₁…∂/∂y_k (positionally matched) and apply it to `g`.
    ///
    /// Linear in `g`; a term c·x^α acts as c·∂^α.
    ///
    /// # Panics
    /// Panics if the ambient lengths differ.
    pub fn apply_diff_operator(&self, g: &Polynomial) -> Polynomial {
        assert_eq!(
            self.nvars,
            g.nvars(),
            "operator and operand must have the same number of variables"
        );
        let mut out = Polynomial::zero(g.nvars());
        for (alpha, c) in &self.terms {
            for (beta, b) in &g.terms {
                // ∂^α (y^β) = (∏ βᵢ!/(βᵢ−αᵢ)!) · y^(β−α) when α ≤ β, else 0.
                if !alpha.divides(beta) {
                    continue;
                }
                let mut factor = Rat::one();
                let mut exps = Vec::with_capacity(g.nvars());
                for i in 0..g.nvars() {
                    let (a, e) = (alpha.exponent(i), beta.exponent(i));
                    for f in (e - a + 1)..=e {
                        factor *= Rat::from_integer(f.into());
                    }
                    exps.push(e - a);
                }
                out.add_term(Monomial::new(exps), c * b * factor);
            }
        }
        out
    }

    /// Substitute each variable by the given polynomial (all images must
    /// share one ambient ring). Returns `self(images[0], …, images[n-1])`.
    ///
    /// # Panics
    /// Panics if `images.len() != self.nvars()` or the images disagree on
    /// their ambient size.
    pub fn compose(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable required");
        let target_nvars = images.first().map_or(0, Polynomial::nvars);
        for im in images {
            assert_eq!(im.nvars(), target_nvars, "images must share an ambient ring");
        }
        // Cache powers of each image up to the largest exponent used.
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|_| vec![Polynomial::one(target_nvars)]).collect();
        let mut out = Polynomial::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target_nvars, c.clone());
            for i in 0..self.nvars {
                let e = m.exponent(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Exact composition with the *inverse* of `c`: returns p∘C⁻¹, the
    /// polynomial w ↦ p(C⁻¹w).
    ///
    /// Errors when `c` is singular.
    ///
    /// # Panics
    /// Panics if `c` is not square of size `nvars`.
    pub fn linear_substitute(&self, c: &QMatrix) -> Result<Polynomial, CoreError> {
        assert_eq!(c.rows(), self.nvars, "matrix size must match the ambient ring");
        assert_eq!(c.cols(), self.nvars, "matrix must be square");
        let inv = c.inverse()?;
        let images: Vec<Polynomial> = (0..self.nvars)
            .map(|i| {
                Polynomial::from_terms(
                    self.nvars,
                    (0..self.nvars)
                        .map(|j| (Monomial::variable(self.nvars, j), inv.get(i, j).clone())),
                )
            })
            .collect();
        Ok(self.compose(&images))
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when all terms share one total degree (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree_if_homogeneous(&vec![1; self.nvars]).is_some() || self.is_zero()
    }

    /// The common weighted degree of all terms, if they share one
    /// (`Some(0)` for the zero polynomial).
    pub fn weighted_degree_if_homogeneous(&self, weights: &[u64]) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = match degrees.next() {
            None => return Some(0),
            Some(d) => d,
        };
        degrees.all(|d| d == first).then_some(first)
    }

    /// Evaluate at a rational point.
    ///
    /// # Panics
    /// Panics if `point.len() != nvars`.
    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "point length must match the ambient ring");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..self.nvars {
                for _ in 0..m.exponent(i) {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// If `self == c·other` for a rational `c`, return that `c`
    /// (`Some(1)` when both are zero). Requires identical supports and a
    /// single common coefficient ratio.
    pub fn proportional_scale(&self, other: &Polynomial) -> Option<Rat> {
        self.assert_same_ambient(other);
        if other.is_zero() {
            return self.is_zero().then(Rat::one);
        }
        if self.is_zero() {
            return None; // other ≠ 0 ⇒ only c = 0 works, excluded as degenerate
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let mut ratio: Option<Rat> = None;
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if ma != mb {
                return None;
            }
            let r = ca / cb;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev == r => {}
                Some(_) => return None,
            }
        }
        ratio
    }

    /// Render with the given variable names (must supply one per slot).
    /// The output uses only `+ - * ^`, integers and `p/q` literals, so it
    /// can be re-read by any parser honoring standard precedence.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable required");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for i in 0..self.nvars {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    e => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Determinant of a square polynomial matrix by first-row cofactor
/// expansion with zero-entry skipping.
fn poly_det(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(nvars);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry * &poly_det(&minor, nvars);
        if j % 2 == 0 {
            acc = &acc + &cofactor;
        } else {
            acc = &acc - &cofactor;
        }
    }
    acc
}

impl fmt::Display for Monomial {
    /// Default rendering with positional names x1…xn (`1` for the empty
    /// monomial).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    /// Default rendering with positional names x1…xn.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.to_string_with(&refs))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ambient(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ambient(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ambient(rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
