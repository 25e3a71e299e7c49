//! Nil-polynomials P = ω∘exp|_Π, their homogeneous components as forms on
//! filtration quotients, and Macaulay inverse systems (the restriction R
//! and the generalized expansion S) with apolarity verification.
//!
//! # Design Notes
//! - P is expanded monomial-by-monomial: U_k = ∏ vᵢ^{kᵢ} is computed
//!   through the multiplication table with each monomial generated from its
//!   unique "strip the first variable" parent, and zero products prune the
//!   whole subtree (a zero parent forces zero children). The coefficient of
//!   y^k in P is ω(U_k)/∏ kᵢ!.
//! - The homogeneous component P̂^[s] descends to 𝔪/𝔪^{ν+2−s}; the
//!   implementation verifies the polarized identity ω(𝔪^{s−1}·𝔪^{ν+2−s}) = 0
//!   (equivalent to descent in characteristic 0) before restricting.
//! - R requires a minimal presentation: the degree-one standard-monomial
//!   classes must number exactly the ambient variables and span 𝔪/𝔪²
//!   freely; otherwise the restriction is refused explicitly — the S
//!   expansion is the construction that still applies there.
//! - Every produced inverse system is verified: the ideal generators must
//!   annihilate it, and its iterated-derivative span must have dimension
//!   equal to dim A. A verification failure on a construction is reported
//!   as an internal error, never silently ignored.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{
    ideal_filtration, quotient_algebra, socle, IdealFiltration, QuotientAlgebra, SocleData,
};
use crate::error::CoreError;
use crate::linalg::{QMatrix, RowSpan};
use crate::poly::{Monomial, Polynomial, Rat};
use crate::rational::factorial;

/// A nil-polynomial P = ω∘exp|_Π together with the data that produced it.
#[derive(Debug, Clone)]
pub struct NilPolynomialData {
    algebra: QuotientAlgebra,
    filtration: IdealFiltration,
    socle_data: SocleData,
    pi_basis: Vec<Vec<Rat>>,
    omega: Vec<Rat>,
    poly: Polynomial,
    components: BTreeMap<usize, Polynomial>,
    nil_index: usize,
}

impl NilPolynomialData {
    /// The underlying algebra.
    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.algebra
    }

    /// The maximal-ideal filtration of the algebra.
    pub fn filtration(&self) -> &IdealFiltration {
        &self.filtration
    }

    /// The socle analysis of the algebra.
    pub fn socle_data(&self) -> &SocleData {
        &self.socle_data
    }

    /// The Π basis vectors (coordinates over the algebra basis); yᵢ is the
    /// coordinate dual to `pi_basis()[i]`.
    pub fn pi_basis(&self) -> &[Vec<Rat>] {
        &self.pi_basis
    }

    /// ω as a coordinate functional over the algebra basis.
    pub fn omega(&self) -> &[Rat] {
        &self.omega
    }

    /// The nil-polynomial P in y₁…y_{dim−2}.
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// All homogeneous components P̂^[s], s = 2…ν (zero components kept).
    pub fn components(&self) -> &BTreeMap<usize, Polynomial> {
        &self.components
    }

    /// The degree-s component, if 2 ≤ s ≤ ν.
    pub fn component(&self, s: usize) -> Option<&Polynomial> {
        self.components.get(&s)
    }

    /// The nil-index ν = deg P.
    pub fn nil_index(&self) -> usize {
        self.nil_index
    }
}

/// Which construction produced an inverse system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseSystemSource {
    /// Restriction of a nil-polynomial to degree-one classes.
    RestrictionR,
    /// The exp-expansion over the variable classes (no minimality needed).
    GeneralizedS,
    /// Restriction on a standard graded algebra (R comes out homogeneous).
    Homogeneous,
}

/// A verified Macaulay inverse system.
#[derive(Debug, Clone)]
pub struct InverseSystem {
    g: Polynomial,
    source: InverseSystemSource,
    report: AnnihilatorReport,
}

impl InverseSystem {
    /// The inverse system polynomial.
    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    /// Which construction produced it.
    pub fn source(&self) -> InverseSystemSource {
        self.source
    }

    /// The verification that Ann(g) equals the ideal.
    pub fn report(&self) -> &AnnihilatorReport {
        &self.report
    }
}

/// Result of checking Ann(g) = I by apolarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorReport {
    /// Both conditions hold.
    pub pass: bool,
    /// Condition (i): every ideal generator annihilates g.
    pub generators_annihilate: bool,
    /// Index of the first non-annihilating generator, if any.
    pub failing_generator: Option<usize>,
    /// Condition (ii): dimension of the span of all iterated partial
    /// derivatives of g (including g and the constants reached).
    pub span_dimension: usize,
    /// The required dimension, dim A.
    pub expected_dimension: usize,
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit_vector(dim: usize, j: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[j] = Rat::one();
    v
}

/// Expands ω((Σ yᵢvᵢ)^s)/s! for s in `degrees`, returning one homogeneous
/// polynomial per degree. ω(1) = 0 is a precondition, so no constant term
/// ever arises.
fn exp_components(
    a: &QuotientAlgebra,
    vectors: &[Vec<Rat>],
    omega: &[Rat],
    degrees: std::ops::RangeInclusive<usize>,
) -> BTreeMap<usize, Polynomial> {
    let m = vectors.len();
    let mut components = BTreeMap::new();

    // table: y-monomials k of the current degree with U_k = ∏ vᵢ^{kᵢ} ≠ 0.
    let mut table: BTreeMap<Monomial, Vec<Rat>> = BTreeMap::new();
    for (i, v) in vectors.iter().enumerate() {
        if v.iter().any(|c| !c.is_zero()) {
            table.insert(Monomial::variable(m, i), v.clone());
        }
    }
    let (lo, hi) = (*degrees.start(), *degrees.end());
    for s in 1..=hi {
        if s > 1 {
            let mut next: BTreeMap<Monomial, Vec<Rat>> = BTreeMap::new();
            for (mono, vec) in &table {
                // Each degree-s monomial is generated once, from the parent
                // obtained by stripping its first supported variable.
                let lead = mono
                    .exponents()
                    .iter()
                    .position(|&e| e > 0)
                    .expect("table monomials have positive degree");
                for i in 0..=lead {
                    let child_vec = a.mul_coords(&vectors[i], vec);
                    if child_vec.iter().any(|c| !c.is_zero()) {
                        next.insert(mono.mul(&Monomial::variable(m, i)), child_vec);
                    }
                }
            }
            table = next;
        }
        if s >= lo {
            // (1/s!)·multinomial(s; k) = 1/∏ kᵢ!.
            let terms = table.iter().filter_map(|(mono, vec)| {
                let w = dot(omega, vec);
                if w.is_zero() {
                    return None;
                }
                let denom: BigInt = mono
                    .exponents()
                    .iter()
                    .map(|&e| factorial(e as usize))
                    .product();
                Some((mono.clone(), w * Rat::new(BigInt::one(), denom)))
            });
            components.insert(s, Polynomial::from_terms(m, terms.collect::<Vec<_>>()));
        }
    }
    components
}

fn shared_checks(a: &QuotientAlgebra) -> Result<SocleData, CoreError> {
    if a.dim() <= 2 {
        return Err(CoreError::DimensionTooSmall(format!(
            "nil-polynomials need algebra dimension > 2, got {}",
            a.dim()
        )));
    }
    let sd = socle(a);
    if !sd.is_gorenstein() {
        return Err(CoreError::NotGorenstein { socle_dim: sd.dimension() });
    }
    Ok(sd)
}

fn assemble(
    a: QuotientAlgebra,
    filtration: IdealFiltration,
    socle_data: SocleData,
    pi_basis: Vec<Vec<Rat>>,
    omega: Vec<Rat>,
) -> Result<NilPolynomialData, CoreError> {
    let nu = filtration.nil_index();
    let components = exp_components(&a, &pi_basis, &omega, 2..=nu);
    let m = pi_basis.len();
    let poly = components
        .values()
        .fold(Polynomial::zero(m), |acc, c| &acc + c);
    if poly.total_degree() != Some(nu as u32) {
        return Err(CoreError::Internal(format!(
            "nil-polynomial must have degree ν = {nu}, got {:?}",
            poly.total_degree()
        )));
    }
    Ok(NilPolynomialData {
        algebra: a,
        filtration,
        socle_data,
        pi_basis,
        omega,
        poly,
        components,
        nil_index: nu,
    })
}

/// The canonical nil-polynomial of a Gorenstein algebra: Π is spanned by
/// all positive-degree standard-monomial classes except the socle pivot,
/// and ω is the canonical dual form (ω(v) = 1 on the canonical socle
/// generator, zero on every other basis class).
///
/// Errors: dimension ≤ 2, or a socle of dimension ≠ 1
/// ([`CoreError::NotGorenstein`]).
pub fn nil_polynomial(a: &QuotientAlgebra) -> Result<NilPolynomialData, CoreError> {
    let sd = shared_checks(a)?;
    let pivot = sd.pivot().expect("Gorenstein socle has a pivot");
    let pi_basis: Vec<Vec<Rat>> = (1..a.dim())
        .filter(|&j| j != pivot)
        .map(|j| unit_vector(a.dim(), j))
        .collect();
    let omega = sd.omega().expect("Gorenstein socle carries ω").to_vec();
    let filtration = ideal_filtration(a);
    assemble(a.clone(), filtration, sd, pi_basis, omega)
}

/// A nil-polynomial for a caller-specified hyperplane Π and linear form ω.
/// Requirements (checked, [`CoreError::InvalidInput`] otherwise): the
/// dim − 2 vectors of `pi_basis` are independent, lie in 𝔪, and are
/// annihilated by ω; ω(1) = 0; and ω does not vanish on the socle — i.e.
/// ker ω = ⟨Π, 1⟩ with Π complementary to the socle in 𝔪.
pub fn nil_polynomial_with(
    a: &QuotientAlgebra,
    pi_basis: &[Vec<Rat>],
    omega: &[Rat],
) -> Result<NilPolynomialData, CoreError> {
    let sd = shared_checks(a)?;
    let dim = a.dim();
    if pi_basis.len() != dim - 2 {
        return Err(CoreError::InvalidInput(format!(
            "Π needs {} basis vectors, got {}",
            dim - 2,
            pi_basis.len()
        )));
    }
    if omega.len() != dim {
        return Err(CoreError::InvalidInput(format!(
            "ω needs {dim} coordinates, got {}",
            omega.len()
        )));
    }
    let mut span = RowSpan::new(dim);
    for (i, v) in pi_basis.iter().enumerate() {
        if v.len() != dim {
            return Err(CoreError::InvalidInput(format!(
                "Π vector {} has length {}, expected {dim}",
                i + 1,
                v.len()
            )));
        }
        if !v[0].is_zero() {
            return Err(CoreError::InvalidInput(format!(
                "Π vector {} does not lie in the maximal ideal",
                i + 1
            )));
        }
        if !span.insert(v.clone()) {
            return Err(CoreError::InvalidInput(
                "Π vectors are linearly dependent".to_string(),
            ));
        }
        if !dot(omega, v).is_zero() {
            return Err(CoreError::InvalidInput(format!(
                "ω does not vanish on Π vector {}",
                i + 1
            )));
        }
    }
    if !omega[0].is_zero() {
        return Err(CoreError::InvalidInput(
            "ω does not vanish on the identity".to_string(),
        ));
    }
    let socle_vec = &sd.socle_basis()[0];
    if dot(omega, socle_vec).is_zero() {
        return Err(CoreError::InvalidInput(
            "ω vanishes on the socle".to_string(),
        ));
    }
    let filtration = ideal_filtration(a);
    assemble(
        a.clone(),
        filtration,
        sd,
        pi_basis.to_vec(),
        omega.to_vec(),
    )
}

/// Keeps only the variables listed in `keep` (dropping every term that
/// involves another variable) and renumbers them consecutively.
fn restrict_variables(p: &Polynomial, keep: &[usize]) -> Polynomial {
    let k = keep.len();
    let mut terms = Vec::new();
    'term: for (m, c) in p.terms() {
        let mut exps = vec![0u32; k];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                match keep.iter().position(|&s| s == i) {
                    Some(pos) => exps[pos] = e,
                    None => continue 'term,
                }
            }
        }
        terms.push((Monomial::new(exps), c.clone()));
    }
    Polynomial::from_terms(k, terms)
}

/// The component P̂^[s] as a form on 𝔪/𝔪^{ν+2−s}: well-definedness is
/// verified via the polarized identity ω(𝔪^{s−1}·𝔪^{ν+2−s}) = 0, then the
/// component is expressed in the surviving Π coordinates (those independent
/// modulo 𝔪^{ν+2−s}, renumbered consecutively).
///
/// Errors: s outside 2…ν.
pub fn component_form(npd: &NilPolynomialData, s: usize) -> Result<Polynomial, CoreError> {
    let nu = npd.nil_index;
    if s < 2 || s > nu {
        return Err(CoreError::InvalidInput(format!(
            "component degree must satisfy 2 ≤ s ≤ ν = {nu}, got {s}"
        )));
    }
    let level = nu + 2 - s;
    for x in npd.filtration.power_basis(s - 1) {
        for w in npd.filtration.power_basis(level) {
            let prod = npd.algebra.mul_coords(x, w);
            if !dot(&npd.omega, &prod).is_zero() {
                return Err(CoreError::Internal(format!(
                    "component of degree {s} fails to descend to 𝔪/𝔪^{level}"
                )));
            }
        }
    }
    let mut span = RowSpan::new(npd.algebra.dim());
    for w in npd.filtration.power_basis(level) {
        span.insert(w.clone());
    }
    let mut keep = Vec::new();
    for (i, v) in npd.pi_basis.iter().enumerate() {
        if span.insert(v.clone()) {
            keep.push(i);
        }
    }
    let comp = npd
        .components
        .get(&s)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(npd.pi_basis.len()));
    Ok(restrict_variables(&comp, &keep))
}

/// The inverse system R: the nil-polynomial restricted to L, the span of
/// the degree-one standard-monomial classes. Requires a minimal
/// presentation — the degree-one classes must number exactly the ambient
/// variables and be independent modulo 𝔪²
/// ([`CoreError::RestrictionUnavailable`] otherwise, e.g. when a variable
/// lies in 𝔪²; the S expansion still applies there). The result is
/// verified as an annihilator before being returned.
pub fn inverse_system_r(npd: &NilPolynomialData) -> Result<InverseSystem, CoreError> {
    let a = &npd.algebra;
    let dim = a.dim();
    let n = a.nvars();
    let deg1: Vec<usize> = (0..dim)
        .filter(|&j| a.basis()[j].degree() == 1)
        .collect();
    if deg1.len() != n {
        return Err(CoreError::RestrictionUnavailable(format!(
            "presentation is not minimal: {n} ambient variables but {} degree-one standard-monomial classes",
            deg1.len()
        )));
    }
    let mut span = RowSpan::new(dim);
    for w in npd.filtration.power_basis(2) {
        span.insert(w.clone());
    }
    for &j in &deg1 {
        if !span.insert(unit_vector(dim, j)) {
            return Err(CoreError::RestrictionUnavailable(format!(
                "the class of {} lies in 𝔪² modulo the others: degree-one classes do not span 𝔪/𝔪² freely",
                a.basis()[j]
            )));
        }
    }
    if span.dim() != dim - 1 {
        return Err(CoreError::RestrictionUnavailable(
            "degree-one standard-monomial classes fail to span 𝔪/𝔪²".to_string(),
        ));
    }

    // Decompose each L vector over (Π, v); the socle component is
    // irrelevant for the restriction since every component of P has
    // degree ≥ 2 and v annihilates 𝔪.
    let m = npd.pi_basis.len();
    let mut cols = QMatrix::zeros(dim, m + 1);
    for (c, v) in npd.pi_basis.iter().enumerate() {
        for (r, val) in v.iter().enumerate() {
            cols.set(r, c, val.clone());
        }
    }
    let gen = npd
        .socle_data
        .canonical_generator()
        .expect("nil-polynomial data comes from a Gorenstein algebra");
    for (r, val) in gen.iter().enumerate() {
        cols.set(r, m, val.clone());
    }
    let k = deg1.len();
    let mut images = vec![Vec::with_capacity(k); m];
    for &j in &deg1 {
        let sol = cols
            .solve(&unit_vector(dim, j))
            .expect("(Π, v) is a basis of the maximal ideal");
        for (i, img) in images.iter_mut().enumerate() {
            img.push(sol[i].clone());
        }
    }
    let image_polys: Vec<Polynomial> = images
        .into_iter()
        .map(|coeffs| {
            Polynomial::from_terms(
                k,
                coeffs
                    .into_iter()
                    .enumerate()
                    .map(|(j, c)| (Monomial::variable(k, j), c)),
            )
        })
        .collect();
    let g = npd.poly.compose(&image_polys);
    finish_inverse_system(
        g,
        if a.is_graded() {
            InverseSystemSource::Homogeneous
        } else {
            InverseSystemSource::RestrictionR
        },
        a,
        npd.nil_index,
    )
}

/// The generalized inverse system S(y₁…y_m) = Σ_{j=0}^{ν} ω((Σ yᵢeᵢ)^j)/j!
/// over the variable classes eᵢ, with the canonical ω. Applies to any
/// Artinian Gorenstein quotient, minimal presentation or not. The result
/// is verified as an annihilator before being returned.
pub fn inverse_system_s(gens: &[Polynomial]) -> Result<InverseSystem, CoreError> {
    let a = quotient_algebra(gens)?;
    let sd = socle(&a);
    if !sd.is_gorenstein() {
        return Err(CoreError::NotGorenstein { socle_dim: sd.dimension() });
    }
    let omega = sd.omega().expect("Gorenstein socle carries ω").to_vec();
    let filtration = ideal_filtration(&a);
    let nu = filtration.nil_index();
    let evecs: Vec<Vec<Rat>> = (0..a.nvars()).map(|v| a.variable_class(v)).collect();
    // The j = 0 term is ω(1) = 0 by construction of the canonical ω.
    let components = exp_components(&a, &evecs, &omega, 1..=nu);
    let g = components
        .values()
        .fold(Polynomial::zero(a.nvars()), |acc, c| &acc + c);
    finish_inverse_system(g, InverseSystemSource::GeneralizedS, &a, nu)
}

fn finish_inverse_system(
    g: Polynomial,
    source: InverseSystemSource,
    a: &QuotientAlgebra,
    nu: usize,
) -> Result<InverseSystem, CoreError> {
    if g.total_degree() != Some(nu as u32) {
        return Err(CoreError::Internal(format!(
            "inverse system must have degree ν = {nu}, got {:?}",
            g.total_degree()
        )));
    }
    let report = verify_annihilator(&g, a.gb().ideal_source(), a);
    if !report.pass {
        return Err(CoreError::Internal(format!(
            "constructed inverse system failed apolarity verification: {report:?}"
        )));
    }
    Ok(InverseSystem { g, source, report })
}

/// All divisors of a monomial (including 1 and the monomial itself).
fn divisor_monomials(m: &Monomial) -> Vec<Monomial> {
    let n = m.nvars();
    let mut out = vec![Vec::with_capacity(n)];
    for &e in m.exponents() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for exps in &out {
            for d in 0..=e {
                let mut ext = exps.clone();
                ext.push(d);
                next.push(ext);
            }
        }
        out = next;
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Checks Ann(g) = I by apolarity: (i) every generator f satisfies
/// f(∂)g = 0, and (ii) the span of all iterated partial derivatives of g
/// (with g itself and the constants reached) has dimension dim A. A FAIL
/// is a legal report, not an error.
///
/// # Panics
/// Panics if the variable counts of `g` and the generators differ.
pub fn verify_annihilator(
    g: &Polynomial,
    gens: &[Polynomial],
    a: &QuotientAlgebra,
) -> AnnihilatorReport {
    let mut generators_annihilate = true;
    let mut failing_generator = None;
    for (i, f) in gens.iter().enumerate() {
        if !f.apply_diff_operator(g).is_zero() {
            generators_annihilate = false;
            failing_generator = Some(i);
            break;
        }
    }

    // Columns: all divisors of the support of g (every iterated derivative
    // is supported there).
    let mut cols: BTreeMap<Monomial, usize> = BTreeMap::new();
    for (m, _) in g.terms() {
        for d in divisor_monomials(m) {
            let next = cols.len();
            cols.entry(d).or_insert(next);
        }
    }
    let width = cols.len().max(1);
    let to_vec = |p: &Polynomial| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); width];
        for (m, c) in p.terms() {
            v[cols[m]] = c.clone();
        }
        v
    };
    let mut span = RowSpan::new(width);
    let mut queue = Vec::new();
    if span.insert(to_vec(g)) {
        queue.push(g.clone());
    }
    while let Some(p) = queue.pop() {
        for v in 0..p.nvars() {
            let d = p.partial_derivative(v);
            if !d.is_zero() && span.insert(to_vec(&d)) {
                queue.push(d);
            }
        }
    }
    let span_dimension = span.dim();
    let expected_dimension = a.dim();
    AnnihilatorReport {
        pass: generators_annihilate && span_dimension == expected_dimension,
        generators_annihilate,
        failing_generator,
        span_dimension,
        expected_dimension,
    }
}
