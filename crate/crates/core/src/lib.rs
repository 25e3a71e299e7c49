//! Exact computer algebra for local Artinian algebras over ℚ.
//!
//! The crate is organised as a pipeline:
//!
//! * [`poly`] — sparse multivariate polynomials with arbitrary-precision
//!   rational coefficients, including formal differentiation, Hessian
//!   determinants, linear substitution and the apolarity action.
//! * [`order`] / [`groebner`] — monomial orders, Buchberger's algorithm,
//!   reduced Gröbner bases, normal forms and standard monomials.
//! * [`linalg`] — exact Gaussian elimination (rank, kernel, inverse, …).
//! * [`algebra`] — finite-dimensional quotient algebras: Milnor algebras,
//!   maximal-ideal filtrations, socles, Hilbert functions.
//! * [`nilpoly`] — nil-polynomials `P = ω ∘ exp|_Π`, their homogeneous
//!   components, and Macaulay inverse systems with apolarity verification.
//! * [`invariants`] — associated forms of homogeneous polynomials and the
//!   classical invariants I₄, I₆, Δ, j of Hesse-shape ternary cubics.
//! * [`verify`] — the executable acceptance suite tying everything to the
//!   two reference computations (a one-parameter family of dimension-15
//!   Gorenstein algebras, and the Ẽ₆ cubics z₁³+z₂³+z₃³+t·z₁z₂z₃).
//!
//! All arithmetic is exact; every result is bit-reproducible.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod nilpoly;
pub mod order;
pub mod poly;
pub mod rational;
pub mod verify;

pub use algebra::{
    bilinear_form_gram, hilbert_function, ideal_filtration, milnor_algebra,
    milnor_algebra_weighted, quotient_algebra, quotient_algebra_weighted, socle, IdealFiltration,
    QuotientAlgebra, SocleData,
};
pub use error::CoreError;
pub use groebner::{buchberger, is_artinian, normal_form, standard_monomials, GroebnerBasis};
pub use invariants::{
    associated_form, associated_form_in, binary_discriminant, evaluate_invariant_at_associated,
    ternary_cubic_invariants, AssociatedForm, NamedInvariant, TernaryCubicInvariants,
};
pub use linalg::QMatrix;
pub use nilpoly::{
    component_form, inverse_system_r, inverse_system_s, nil_polynomial, nil_polynomial_with,
    verify_annihilator, AnnihilatorReport, InverseSystem, InverseSystemSource, NilPolynomialData,
};
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Monomial, Polynomial, Rat};
pub use verify::{family_generators, hesse_cubic, run_all, CriterionResult};
