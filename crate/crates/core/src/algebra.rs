//! Finite-dimensional local algebra analysis on top of normal forms:
//! multiplication tables, maximal-ideal filtrations, nil-index, socle,
//! Gorenstein detection, Hilbert functions and the ω-Gram matrix.
//!
//! # Design Notes
//! - The vector-space basis is the standard-monomial basis, sorted by
//!   (total degree, then lexicographically descending exponents), so the
//!   class of 1 comes first and e.g. a two-variable algebra starts
//!   1, x₁, x₂, x₁², x₁x₂, x₂², … — the indexing the worked examples use.
//! - The canonical socle generator of a Gorenstein algebra is the Hessian
//!   class for Milnor algebras of homogeneous forms, and otherwise the
//!   socle vector normalized to coefficient 1 at its highest basis
//!   monomial. ω is the dual form supported on that pivot monomial with
//!   ω(v) = 1, so ker ω contains the class of 1 and every other basis
//!   class.
//! - A quotient is treated as graded when every input generator is
//!   homogeneous; quasihomogeneous gradings are supported through an
//!   explicit per-variable weight vector.

use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::groebner::{buchberger, normal_form, standard_monomials, GroebnerBasis};
use crate::linalg::{QMatrix, RowSpan};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rat};

/// Sparse coordinate vector: (basis index, coefficient), sorted by index.
pub(crate) type SparseVec = Vec<(usize, Rat)>;

/// A finite-dimensional local algebra ℚ[x₁…x_n]/I presented by standard
/// monomials and a normal-form multiplication table.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    dim: usize,
    /// table[i][j] = coordinates of bᵢ·bⱼ (full symmetric table).
    table: Vec<Vec<SparseVec>>,
    /// var_rows[v][j] = coordinates of x_v·bⱼ.
    var_rows: Vec<Vec<SparseVec>>,
    weights: Option<Vec<u64>>,
    graded: bool,
    /// Coordinates of the Hessian class, for Milnor algebras of homogeneous
    /// forms (the canonical socle generator there).
    hessian_class: Option<Vec<Rat>>,
}

impl QuotientAlgebra {
    /// Vector-space dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Ambient polynomial-ring variable count.
    pub fn nvars(&self) -> usize {
        self.gb.nvars()
    }

    /// Standard-monomial basis; the class of 1 is `basis()[0]`.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// The underlying reduced Gröbner basis.
    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Whether every input generator was homogeneous (standard grading).
    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// The quasihomogeneous weights, when constructed with them.
    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    /// Coordinates of the Hessian class for Milnor algebras of homogeneous
    /// forms, `None` otherwise.
    pub fn hessian_class(&self) -> Option<&[Rat]> {
        self.hessian_class.as_deref()
    }

    /// Coordinates of the class of `p` over the basis.
    ///
    /// # Panics
    /// Panics on ambient mismatch.
    pub fn coords_of(&self, p: &Polynomial) -> Vec<Rat> {
        let nf = normal_form(p, &self.gb);
        let mut out = vec![Rat::zero(); self.dim];
        for (m, c) in nf.terms() {
            let idx = self
                .basis
                .iter()
                .position(|b| b == m)
                .expect("normal form supported on standard monomials");
            out[idx] = c.clone();
        }
        out
    }

    /// The polynomial Σ coords[i]·bᵢ (the distinguished coset
    /// representative).
    ///
    /// # Panics
    /// Panics if `coords.len() != dim`.
    pub fn rep(&self, coords: &[Rat]) -> Polynomial {
        assert_eq!(coords.len(), self.dim, "coordinate length mismatch");
        Polynomial::from_terms(
            self.nvars(),
            self.basis
                .iter()
                .zip(coords)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Coordinates of the identity class.
    pub fn identity_coords(&self) -> Vec<Rat> {
        let mut e = vec![Rat::zero(); self.dim];
        e[0] = Rat::one();
        e
    }

    /// Coordinates of the class of the variable x_v.
    pub fn variable_class(&self, v: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (idx, c) in &self.var_rows[v][0] {
            out[*idx] = c.clone();
        }
        out
    }

    /// Sparse coordinates of the basis product bᵢ·bⱼ.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.table[i][j]
    }

    /// Product of two coordinate vectors via the multiplication table.
    ///
    /// # Panics
    /// Panics on length mismatch.
    pub fn mul_coords(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        assert_eq!(a.len(), self.dim, "coordinate length mismatch");
        assert_eq!(b.len(), self.dim, "coordinate length mismatch");
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (idx, t) in &self.table[i][j] {
                    out[*idx] += &c * t;
                }
            }
        }
        out
    }

    /// Product of the class of x_v with a coordinate vector.
    ///
    /// # Panics
    /// Panics on length mismatch or variable index out of range.
    pub fn mul_by_variable(&self, v: usize, a: &[Rat]) -> Vec<Rat> {
        assert_eq!(a.len(), self.dim, "coordinate length mismatch");
        let mut out = vec![Rat::zero(); self.dim];
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for (idx, t) in &self.var_rows[v][j] {
                out[*idx] += aj * t;
            }
        }
        out
    }

    /// dim 𝔪/𝔪², the minimal number of algebra generators.
    pub fn embedding_dimension(&self) -> usize {
        let mut m2 = RowSpan::new(self.dim);
        for v in 0..self.nvars() {
            for j in 1..self.dim {
                let mut vec = vec![Rat::zero(); self.dim];
                for (idx, c) in &self.var_rows[v][j] {
                    vec[*idx] = c.clone();
                }
                m2.insert(vec);
            }
        }
        (self.dim - 1) - m2.dim()
    }
}

/// Bases of all powers of the maximal ideal, and the nil-index ν
/// (the largest k with 𝔪^k ≠ 0).
#[derive(Debug, Clone)]
pub struct IdealFiltration {
    /// spans[k-1] = 𝔪^k as an echelon row span; spans.len() = ν.
    spans: Vec<RowSpan>,
    nil_index: usize,
}

impl IdealFiltration {
    /// The nil-index ν.
    pub fn nil_index(&self) -> usize {
        self.nil_index
    }

    /// Echelon basis of 𝔪^k (k ≥ 1); empty above the nil-index.
    pub fn power_basis(&self, k: usize) -> &[Vec<Rat>] {
        assert!(k >= 1, "filtration starts at 𝔪^1");
        if k <= self.spans.len() {
            self.spans[k - 1].basis()
        } else {
            &[]
        }
    }

    /// dim 𝔪^k.
    pub fn power_dim(&self, k: usize) -> usize {
        self.power_basis(k).len()
    }

    /// Whether a coordinate vector lies in 𝔪^k.
    pub fn contains(&self, k: usize, v: &[Rat]) -> bool {
        assert!(k >= 1, "filtration starts at 𝔪^1");
        if k <= self.spans.len() {
            self.spans[k - 1].contains(v)
        } else {
            v.iter().all(Rat::is_zero)
        }
    }
}

/// Socle analysis: Ann(𝔪) with, in the Gorenstein case, the canonical
/// generator v and the dual linear form ω (ω(v) = 1, ω = 0 on every other
/// basis class and on 1).
#[derive(Debug, Clone)]
pub struct SocleData {
    socle_basis: Vec<Vec<Rat>>,
    canonical_generator: Option<Vec<Rat>>,
    omega: Option<Vec<Rat>>,
    pivot: Option<usize>,
}

impl SocleData {
    /// Echelon basis of Ann(𝔪) in algebra coordinates.
    pub fn socle_basis(&self) -> &[Vec<Rat>] {
        &self.socle_basis
    }

    /// dim Ann(𝔪).
    pub fn dimension(&self) -> usize {
        self.socle_basis.len()
    }

    /// Gorenstein ⟺ the socle is a line.
    pub fn is_gorenstein(&self) -> bool {
        self.socle_basis.len() == 1
    }

    /// The canonical socle generator (Gorenstein case only).
    pub fn canonical_generator(&self) -> Option<&[Rat]> {
        self.canonical_generator.as_deref()
    }

    /// ω as a coordinate functional over the basis (Gorenstein case only).
    pub fn omega(&self) -> Option<&[Rat]> {
        self.omega.as_deref()
    }

    /// Basis index of the pivot monomial ω is supported on.
    pub fn pivot(&self) -> Option<usize> {
        self.pivot
    }
}

fn check_local(gens: &[Polynomial]) -> Result<(), CoreError> {
    for g in gens {
        if !g.coeff(&Monomial::one(g.nvars())).is_zero() {
            return Err(CoreError::NotLocal);
        }
    }
    Ok(())
}

fn check_weights(gens: &[Polynomial], nvars: usize, weights: &[u64]) -> Result<(), CoreError> {
    if weights.len() != nvars {
        return Err(CoreError::InvalidInput(format!(
            "expected {nvars} weights, got {}",
            weights.len()
        )));
    }
    if weights.iter().any(|&w| w == 0) {
        return Err(CoreError::InvalidInput("weights must be positive".to_string()));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.weighted_degree_if_homogeneous(weights).is_none() {
            return Err(CoreError::InvalidInput(format!(
                "generator {} is not homogeneous for the given weights",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Shared constructor: Gröbner basis, sorted standard-monomial basis,
/// multiplication tables.
fn build(
    gens: &[Polynomial],
    weights: Option<Vec<u64>>,
    milnor: bool,
) -> Result<QuotientAlgebra, CoreError> {
    if gens.is_empty() {
        return Err(CoreError::InvalidInput("empty generator list".to_string()));
    }
    let nvars = gens[0].nvars();
    check_local(gens)?;
    if let Some(w) = &weights {
        check_weights(gens, nvars, w)?;
    }
    let gb = buchberger(gens, MonomialOrder::degrevlex(nvars))?;
    let mut basis = standard_monomials(&gb).map_err(|e| match e {
        CoreError::NotArtinian if milnor => CoreError::NotIsolated,
        other => other,
    })?;
    // Basis order: total degree, then lexicographically descending
    // exponents — 1, x₁, x₂, x₁², x₁x₂, x₂², … as in the worked examples.
    basis.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.exponents().cmp(a.exponents()))
    });
    let dim = basis.len();
    if dim < 2 {
        return Err(CoreError::DimensionTooSmall(format!(
            "quotient has dimension {dim}, need at least 2"
        )));
    }

    let index_of = |m: &Monomial| basis.iter().position(|b| b == m);
    let sparse_coords = |p: &Polynomial| -> SparseVec {
        let nf = normal_form(p, &gb);
        let mut v: SparseVec = nf
            .terms()
            .map(|(m, c)| {
                (
                    index_of(m).expect("normal form supported on standard monomials"),
                    c.clone(),
                )
            })
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };

    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let prod = Polynomial::from_monomial(basis[i].mul(&basis[j]), Rat::one());
            let v = sparse_coords(&prod);
            table[i][j] = v.clone();
            table[j][i] = v;
        }
    }
    let var_rows = (0..nvars)
        .map(|v| {
            (0..dim)
                .map(|j| {
                    let prod = Polynomial::from_monomial(
                        Monomial::variable(nvars, v).mul(&basis[j]),
                        Rat::one(),
                    );
                    sparse_coords(&prod)
                })
                .collect()
        })
        .collect();

    let graded = gens.iter().all(Polynomial::is_homogeneous);
    let a = QuotientAlgebra {
        gb,
        basis,
        dim,
        table,
        var_rows,
        weights,
        graded,
        hessian_class: None,
    };
    // Locality: the variable classes must be nilpotent (e.g. x² − x³ cuts
    // out an Artinian but non-local quotient).
    filtration_spans(&a)?;
    Ok(a)
}

/// The quotient ℚ[x₁…x_n]/(gens) as a local Artinian algebra.
///
/// Errors: empty input, generators with nonzero constant term
/// ([`CoreError::NotLocal`]), infinite-dimensional quotient
/// ([`CoreError::NotArtinian`]), or dimension < 2.
pub fn quotient_algebra(gens: &[Polynomial]) -> Result<QuotientAlgebra, CoreError> {
    build(gens, None, false)
}

/// [`quotient_algebra`] with a quasihomogeneous weight vector; every
/// generator must be homogeneous with respect to the weights, and the
/// Hilbert function is then computed as a weighted-degree census.
pub fn quotient_algebra_weighted(
    gens: &[Polynomial],
    weights: &[u64],
) -> Result<QuotientAlgebra, CoreError> {
    build(gens, Some(weights.to_vec()), false)
}

/// The Milnor algebra ℚ[z]/𝕁(Q): the quotient by the ideal of first
/// partials. Errors with [`CoreError::NotIsolated`] when the quotient is
/// infinite-dimensional (non-isolated singularity).
pub fn milnor_algebra(q: &Polynomial) -> Result<QuotientAlgebra, CoreError> {
    milnor_build(q, None)
}

/// [`milnor_algebra`] with a quasihomogeneous weight vector.
pub fn milnor_algebra_weighted(
    q: &Polynomial,
    weights: &[u64],
) -> Result<QuotientAlgebra, CoreError> {
    milnor_build(q, Some(weights.to_vec()))
}

fn milnor_build(q: &Polynomial, weights: Option<Vec<u64>>) -> Result<QuotientAlgebra, CoreError> {
    if q.total_degree().unwrap_or(0) < 1 {
        return Err(CoreError::InvalidInput(
            "the form must be nonconstant".to_string(),
        ));
    }
    let jacobian: Vec<Polynomial> = (0..q.nvars()).map(|i| q.partial_derivative(i)).collect();
    // Weight validation applies to the partials (degree d − wᵢ each).
    let mut a = build(&jacobian, weights, true)?;
    if q.is_homogeneous() {
        let h = a.coords_of(&q.hessian_det());
        if h.iter().any(|c| !c.is_zero()) {
            a.hessian_class = Some(h);
        }
    }
    Ok(a)
}

/// Computes the chain 𝔪 ⊇ 𝔪² ⊇ …; errors with [`CoreError::NotLocal`]
/// when the chain stabilizes above zero (a zero-constant-term Artinian
/// quotient is local exactly when its variable classes are nilpotent).
fn filtration_spans(a: &QuotientAlgebra) -> Result<Vec<RowSpan>, CoreError> {
    let dim = a.dim();
    let mut spans: Vec<RowSpan> = Vec::new();

    // 𝔪 itself: all positive-degree basis classes.
    let mut current = RowSpan::new(dim);
    for j in 1..dim {
        let mut v = vec![Rat::zero(); dim];
        v[j] = Rat::one();
        current.insert(v);
    }
    while current.dim() > 0 {
        if let Some(prev) = spans.last() {
            if current.dim() == prev.dim() {
                // 𝔪^{k+1} ⊆ 𝔪^k of equal dimension: stabilized nonzero.
                return Err(CoreError::NotLocal);
            }
        }
        spans.push(current.clone());
        let mut next = RowSpan::new(dim);
        for w in current.basis() {
            for v in 0..a.nvars() {
                next.insert(a.mul_by_variable(v, w));
            }
        }
        current = next;
    }
    Ok(spans)
}

/// Bases of all 𝔪^k and the nil-index, computed by iterated multiplication
/// with the variable classes (𝔪^{k+1} is spanned by x_v·w over basis
/// vectors w of 𝔪^k).
pub fn ideal_filtration(a: &QuotientAlgebra) -> IdealFiltration {
    let spans = filtration_spans(a).expect("constructor-validated algebras are local");
    let nil_index = spans.len();
    IdealFiltration { spans, nil_index }
}

/// Ann(𝔪) as the kernel of the joint multiplication-by-variables map on 𝔪,
/// with the canonical generator and dual form ω in the Gorenstein case.
pub fn socle(a: &QuotientAlgebra) -> SocleData {
    let dim = a.dim();
    let nvars = a.nvars();
    // Columns: coordinates over basis[1..] (the maximal ideal); rows:
    // stacked images under multiplication by each variable class.
    let mut m = QMatrix::zeros(nvars * dim, dim - 1);
    for j in 1..dim {
        let mut ej = vec![Rat::zero(); dim];
        ej[j] = Rat::one();
        for v in 0..nvars {
            let img = a.mul_by_variable(v, &ej);
            for (r, val) in img.into_iter().enumerate() {
                m.set(v * dim + r, j - 1, val);
            }
        }
    }
    let kernel = m.nullspace();
    let mut socle_basis = Vec::new();
    let mut echelon = RowSpan::new(dim);
    for k in kernel {
        let mut full = vec![Rat::zero(); dim];
        full[1..].clone_from_slice(&k);
        echelon.insert(full);
    }
    socle_basis.extend(echelon.basis().iter().cloned());

    if socle_basis.len() != 1 {
        return SocleData { socle_basis, canonical_generator: None, omega: None, pivot: None };
    }

    // Canonical generator: the Hessian class for Milnor algebras of
    // homogeneous forms; otherwise normalize at the highest basis monomial.
    let line = socle_basis[0].clone();
    let canonical = match a.hessian_class() {
        Some(h) => {
            let hv = h.to_vec();
            debug_assert!(
                line_multiple(&hv, &line),
                "Hessian class must span the socle of a Gorenstein Milnor algebra"
            );
            hv
        }
        None => {
            let pivot = top_nonzero(&line).expect("socle basis vector is nonzero");
            let scale = Rat::one() / line[pivot].clone();
            line.iter().map(|c| c * &scale).collect()
        }
    };
    let pivot = top_nonzero(&canonical).expect("canonical socle generator is nonzero");
    let mut omega = vec![Rat::zero(); dim];
    omega[pivot] = Rat::one() / canonical[pivot].clone();
    SocleData {
        socle_basis,
        canonical_generator: Some(canonical),
        omega: Some(omega),
        pivot: Some(pivot),
    }
}

/// Index of the last nonzero coordinate.
fn top_nonzero(v: &[Rat]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

/// Whether `a` is a nonzero rational multiple of `b`.
fn line_multiple(a: &[Rat], b: &[Rat]) -> bool {
    let pivot = match top_nonzero(b) {
        None => return false,
        Some(p) => p,
    };
    if a[pivot].is_zero() {
        return false;
    }
    let scale = &a[pivot] / &b[pivot];
    a.iter().zip(b).all(|(x, y)| *x == y * &scale)
}

/// The Hilbert function: a degree census of the standard-monomial basis in
/// the graded (or weighted) case, and the filtration quotients
/// dim 𝔪^k/𝔪^{k+1} otherwise. Entries sum to dim A.
pub fn hilbert_function(a: &QuotientAlgebra) -> Vec<usize> {
    if let Some(w) = a.weights() {
        return degree_census(a, |m| m.weighted_degree(w) as usize);
    }
    if a.is_graded() {
        return degree_census(a, |m| m.degree() as usize);
    }
    let filt = ideal_filtration(a);
    let nu = filt.nil_index();
    let mut out = Vec::with_capacity(nu + 1);
    let mut prev = a.dim();
    for k in 1..=nu + 1 {
        let cur = filt.power_dim(k);
        out.push(prev - cur);
        prev = cur;
    }
    out
}

fn degree_census(a: &QuotientAlgebra, degree: impl Fn(&Monomial) -> usize) -> Vec<usize> {
    let max = a.basis().iter().map(&degree).max().unwrap_or(0);
    let mut out = vec![0usize; max + 1];
    for m in a.basis() {
        out[degree(m)] += 1;
    }
    out
}

/// The Gram matrix ω(bᵢbⱼ) of the induced pairing on a Gorenstein algebra.
/// Errors with [`CoreError::NotGorenstein`] otherwise, and with an internal
/// consistency failure if the matrix were singular (non-degeneracy is a
/// theorem for Gorenstein algebras).
pub fn bilinear_form_gram(
    a: &QuotientAlgebra,
    socle_data: &SocleData,
) -> Result<QMatrix, CoreError> {
    let omega = socle_data
        .omega()
        .ok_or(CoreError::NotGorenstein { socle_dim: socle_data.dimension() })?;
    let dim = a.dim();
    let mut g = QMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let mut val = Rat::zero();
            for (idx, c) in a.basis_product(i, j) {
                val += c * &omega[*idx];
            }
            g.set(i, j, val.clone());
            g.set(j, i, val);
        }
    }
    if g.det().is_zero() {
        return Err(CoreError::Internal(
            "Gram matrix of a Gorenstein algebra is singular".to_string(),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn qi(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    fn fermat_cubic() -> Polynomial {
        Polynomial::from_exps(
            3,
            &[(qi(1), &[3, 0, 0]), (qi(1), &[0, 3, 0]), (qi(1), &[0, 0, 3])],
        )
    }

    fn cubic_family(t: i64) -> Polynomial {
        &fermat_cubic() + &Polynomial::from_exps(3, &[(qi(t), &[1, 1, 1])])
    }

    fn family_gens(t: i64) -> Vec<Polynomial> {
        vec![
            Polynomial::from_exps(2, &[(qi(2), &[3, 0]), (qi(t), &[1, 3])]),
            Polynomial::from_exps(2, &[(qi(t), &[2, 2]), (qi(2), &[0, 5])]),
        ]
    }

    #[test]
    fn fermat_milnor_dimension_and_grading() {
        let a = milnor_algebra(&fermat_cubic()).unwrap();
        assert_eq!(a.dim(), 8); // (m−1)^n = 2³, confirmed by enumeration
        assert!(a.is_graded());
        assert_eq!(hilbert_function(&a), vec![1, 3, 3, 1]);
        assert_eq!(a.embedding_dimension(), 3);
    }

    #[test]
    fn cubic_family_milnor_dimension() {
        let a = milnor_algebra(&cubic_family(1)).unwrap();
        assert_eq!(a.dim(), 8);
        assert_eq!(a.embedding_dimension(), 3);
    }

    #[test]
    fn degenerate_cubic_rejected_as_non_isolated() {
        assert!(matches!(
            milnor_algebra(&cubic_family(-3)),
            Err(CoreError::NotIsolated)
        ));
    }

    #[test]
    fn family_quotient_dimension_fifteen() {
        for t in [1i64, 3, -4] {
            let a = quotient_algebra(&family_gens(t)).unwrap();
            assert_eq!(a.dim(), 15, "t={t}");
            assert_eq!(a.embedding_dimension(), 2, "t={t}");
        }
    }

    #[test]
    fn one_relation_quotient_dim_two() {
        let a = quotient_algebra(&[Polynomial::from_exps(1, &[(qi(1), &[2])])]).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.basis(), &[Monomial::one(1), Monomial::new(vec![1])]);
    }

    #[test]
    fn dimension_below_two_rejected() {
        assert!(matches!(
            quotient_algebra(&[Polynomial::variable(1, 0)]),
            Err(CoreError::DimensionTooSmall(_))
        ));
    }

    #[test]
    fn non_local_generators_rejected() {
        let g = Polynomial::from_exps(1, &[(qi(1), &[2]), (qi(1), &[0])]);
        assert!(matches!(quotient_algebra(&[g]), Err(CoreError::NotLocal)));
    }

    #[test]
    fn non_local_idempotent_quotient_rejected() {
        // x² − x³ has zero constant term but ℚ[x]/(x²−x³) ≅ ℚ[x]/(x²) × ℚ
        // is not local: the filtration stabilizes at (x²) ≠ 0.
        let g = Polynomial::from_exps(1, &[(qi(1), &[2]), (qi(-1), &[3])]);
        assert!(matches!(quotient_algebra(&[g]), Err(CoreError::NotLocal)));
    }

    #[test]
    fn nil_index_of_fixtures() {
        let fermat = milnor_algebra(&fermat_cubic()).unwrap();
        assert_eq!(ideal_filtration(&fermat).nil_index(), 3); // n(m−2) = 3

        let a1 = quotient_algebra(&family_gens(1)).unwrap();
        assert_eq!(ideal_filtration(&a1).nil_index(), 7);

        let a0 = quotient_algebra(&family_gens(0)).unwrap();
        assert_eq!(a0.dim(), 15);
        assert_eq!(ideal_filtration(&a0).nil_index(), 6);
    }

    #[test]
    fn top_power_is_one_dimensional_on_gorenstein_fixtures() {
        for a in [
            milnor_algebra(&fermat_cubic()).unwrap(),
            milnor_algebra(&cubic_family(1)).unwrap(),
            quotient_algebra(&family_gens(1)).unwrap(),
        ] {
            let f = ideal_filtration(&a);
            assert_eq!(f.power_dim(f.nil_index()), 1);
            assert_eq!(f.power_dim(f.nil_index() + 1), 0);
        }
    }

    #[test]
    fn fermat_socle_is_triple_product_class() {
        let a = milnor_algebra(&fermat_cubic()).unwrap();
        let s = socle(&a);
        assert!(s.is_gorenstein());
        let triple = a.coords_of(&Polynomial::from_exps(3, &[(qi(1), &[1, 1, 1])]));
        assert!(line_multiple(&triple, &s.socle_basis()[0]));
        // Canonical generator is the Hessian class 216·[z₁z₂z₃].
        let v = s.canonical_generator().unwrap();
        assert_eq!(v.to_vec(), triple.iter().map(|c| c * qi(216)).collect::<Vec<_>>());
        // ω(v) = 1.
        let omega = s.omega().unwrap();
        let pairing: Rat = v.iter().zip(omega).map(|(a, b)| a * b).sum();
        assert_eq!(pairing, qi(1));
    }

    #[test]
    fn family_socle_is_last_basis_class() {
        // At t=1 the socle is spanned by the class of x₁²x₂⁴ (equal to
        // −2·[x₁⁴x₂] in standard-monomial coordinates).
        let a = quotient_algebra(&family_gens(1)).unwrap();
        let s = socle(&a);
        assert!(s.is_gorenstein());
        let display = a.coords_of(&Polynomial::from_exps(2, &[(qi(1), &[2, 4])]));
        assert!(line_multiple(&display, &s.socle_basis()[0]));
        assert_eq!(s.pivot(), Some(a.dim() - 1));
        assert_eq!(a.basis()[a.dim() - 1], Monomial::new(vec![4, 1]));
    }

    #[test]
    fn triple_point_socle_dimension_two() {
        let gens = vec![
            Polynomial::from_exps(2, &[(qi(1), &[2, 0])]),
            Polynomial::from_exps(2, &[(qi(1), &[1, 1])]),
            Polynomial::from_exps(2, &[(qi(1), &[0, 2])]),
        ];
        let a = quotient_algebra(&gens).unwrap();
        assert_eq!(a.dim(), 3);
        let s = socle(&a);
        assert_eq!(s.dimension(), 2);
        assert!(!s.is_gorenstein());
        assert!(s.canonical_generator().is_none());
    }

    #[test]
    fn hilbert_function_of_one_variable_cube() {
        let a = quotient_algebra(&[Polynomial::from_exps(1, &[(qi(1), &[3])])]).unwrap();
        assert_eq!(hilbert_function(&a), vec![1, 1, 1]);
    }

    #[test]
    fn weighted_hilbert_census_of_family() {
        // Weights (3, 2) make both generators weighted-homogeneous (degrees
        // 9 and 10); the census over weighted degrees 0..14 sums to 15.
        let a = quotient_algebra_weighted(&family_gens(1), &[3, 2]).unwrap();
        assert_eq!(
            hilbert_function(&a),
            vec![1, 0, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, 0, 1]
        );
        assert_eq!(hilbert_function(&a).iter().sum::<usize>(), a.dim());
    }

    #[test]
    fn wrong_weights_rejected() {
        assert!(matches!(
            quotient_algebra_weighted(&family_gens(1), &[5, 3]),
            Err(CoreError::InvalidInput(_))
        ));
    }

    #[test]
    fn unweighted_family_hilbert_uses_filtration() {
        let a = quotient_algebra(&family_gens(1)).unwrap();
        let h = hilbert_function(&a);
        assert_eq!(h.iter().sum::<usize>(), 15);
        assert_eq!(h[0], 1);
        assert_eq!(h.len(), 8); // k = 0..ν with ν = 7
    }

    #[test]
    fn gram_matrix_nonsingular_on_gorenstein_fixtures() {
        for a in [
            milnor_algebra(&fermat_cubic()).unwrap(),
            quotient_algebra(&family_gens(1)).unwrap(),
        ] {
            let s = socle(&a);
            let g = bilinear_form_gram(&a, &s).unwrap();
            assert_eq!(g.rows(), a.dim());
            assert!(!g.det().is_zero());
        }
    }

    #[test]
    fn gram_matrix_refused_for_non_gorenstein() {
        let gens = vec![
            Polynomial::from_exps(2, &[(qi(1), &[2, 0])]),
            Polynomial::from_exps(2, &[(qi(1), &[1, 1])]),
            Polynomial::from_exps(2, &[(qi(1), &[0, 2])]),
        ];
        let a = quotient_algebra(&gens).unwrap();
        let s = socle(&a);
        assert!(matches!(
            bilinear_form_gram(&a, &s),
            Err(CoreError::NotGorenstein { socle_dim: 2 })
        ));
    }

    #[test]
    fn multiplication_table_is_commutative_and_unital() {
        let a = quotient_algebra(&family_gens(1)).unwrap();
        let one = a.identity_coords();
        for i in 0..a.dim() {
            let mut ei = vec![Rat::zero(); a.dim()];
            ei[i] = Rat::one();
            assert_eq!(a.mul_coords(&one, &ei), ei);
            for j in 0..a.dim() {
                let mut ej = vec![Rat::zero(); a.dim()];
                ej[j] = Rat::one();
                assert_eq!(a.mul_coords(&ei, &ej), a.mul_coords(&ej, &ei));
            }
        }
    }

    #[test]
    fn coords_round_trip_through_representatives() {
        let a = quotient_algebra(&family_gens(3)).unwrap();
        let p = Polynomial::from_exps(2, &[(qi(1), &[3, 0]), (q(2, 7), &[1, 1])]);
        let coords = a.coords_of(&p);
        let back = a.coords_of(&a.rep(&coords));
        assert_eq!(coords, back);
    }
}
