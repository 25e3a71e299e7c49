//! Associated forms of homogeneous polynomials with isolated critical
//! point, and the classical invariants I₄, I₆, Δ, j (and reciprocal 𝐣) of
//! Hesse-shape ternary cubics a·z₁³ + b·z₂³ + c·z₃³ + 6d·z₁z₂z₃.
//!
//! # Design Notes
//! - The default socle generator v for μ-extraction is the class of
//!   ∏ zᵢ^{m−2} (with the Hessian class as fallback when that class
//!   vanishes). This normalization gives μ_{1,1,1} = 1 for the Hesse
//!   family — the convention of the worked example; any other socle
//!   generator rescales the form, see [`associated_form_in`].
//! - The invariant catalog is closed: I₄/I₆ formulas are only valid on the
//!   4-parameter Hesse shape, which is preserved by the associated-form
//!   construction, so the evaluation pipeline never needs general ternary
//!   invariants.
//! - 𝐣 is the reciprocal of j: it is undefined whenever j is undefined
//!   (Δ = 0) or zero (I₄ = 0), and equals Δ/(64·I₄³) otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{ideal_filtration, milnor_algebra, QuotientAlgebra};
use crate::error::CoreError;
use crate::poly::{Monomial, Polynomial, Rat};
use crate::rational::multinomial;

/// The associated form of a homogeneous polynomial, with the socle
/// coordinates μ_k it was assembled from.
#[derive(Debug, Clone)]
pub struct AssociatedForm {
    source_q: Polynomial,
    mu: BTreeMap<Monomial, Rat>,
    form: Polynomial,
}

impl AssociatedForm {
    /// The input polynomial Q.
    pub fn source_q(&self) -> &Polynomial {
        &self.source_q
    }

    /// The nonzero socle coordinates μ_k, keyed by the exponent tuple k.
    pub fn mu(&self) -> &BTreeMap<Monomial, Rat> {
        &self.mu
    }

    /// μ_k for a specific exponent tuple (zero when absent).
    pub fn mu_value(&self, exponents: &[u32]) -> Rat {
        self.mu
            .get(&Monomial::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The associated form Σ μ_k·multinomial(ν; k)·w^k of degree n(m−2).
    pub fn form(&self) -> &Polynomial {
        &self.form
    }
}

/// The classical invariants of a Hesse-shape ternary cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryCubicInvariants {
    /// I₄ = abcd − d⁴.
    pub i4: Rat,
    /// I₆ = a²b²c² − 20abcd³ − 8d⁶.
    pub i6: Rat,
    /// Δ = I₆² + 64·I₄³.
    pub delta: Rat,
    /// j = 64·I₄³/Δ, defined only when Δ ≠ 0.
    pub j: Option<Rat>,
}

/// The closed catalog of named invariants evaluable at associated forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedInvariant {
    I4,
    I6,
    Delta,
    J,
    /// 𝐣 = 1/j.
    JInv,
}

fn top_nonzero(v: &[Rat]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

/// Validates Q and builds its Milnor algebra.
fn milnor_preflight(q: &Polynomial) -> Result<(QuotientAlgebra, usize, u32), CoreError> {
    let n = q.nvars();
    if n < 2 {
        return Err(CoreError::InvalidInput(
            "associated forms need at least 2 variables".to_string(),
        ));
    }
    if !q.is_homogeneous() {
        return Err(CoreError::InvalidInput(
            "the input form must be homogeneous".to_string(),
        ));
    }
    let m = match q.total_degree() {
        Some(m) if m >= 3 => m,
        _ => {
            return Err(CoreError::InvalidInput(
                "the input form must have degree at least 3".to_string(),
            ))
        }
    };
    let a = milnor_algebra(q)?;
    Ok((a, n, m))
}

/// Enumerate all exponent tuples of length `n` summing to `total`.
fn exponent_tuples(n: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for e in 0..=rem {
            cur[i] = e;
            rec(i + 1, rem - e, cur, out);
        }
    }
    rec(0, total, &mut cur, &mut out);
    out
}

fn assemble_form(
    q: &Polynomial,
    a: &QuotientAlgebra,
    v: Vec<Rat>,
    n: usize,
    m: u32,
) -> Result<AssociatedForm, CoreError> {
    let nu = n * (m as usize - 2);
    let filt = ideal_filtration(a);
    if filt.nil_index() != nu {
        return Err(CoreError::Internal(format!(
            "Milnor algebra of a degree-{m} form in {n} variables must have nil-index {nu}, got {}",
            filt.nil_index()
        )));
    }
    let pivot = top_nonzero(&v).expect("socle generator is nonzero");

    let mut mu = BTreeMap::new();
    let mut terms = Vec::new();
    for k in exponent_tuples(n, nu as u32) {
        let mono = Monomial::new(k.clone());
        let coords = a.coords_of(&Polynomial::from_monomial(mono.clone(), Rat::one()));
        let factor = &coords[pivot] / &v[pivot];
        // z^k has degree ν, so its class lies on the socle line ⟨v⟩.
        for (c, vc) in coords.iter().zip(&v) {
            if *c != vc * &factor {
                return Err(CoreError::Internal(format!(
                    "class of z^{k:?} is not a multiple of the socle generator"
                )));
            }
        }
        if factor.is_zero() {
            continue;
        }
        let parts: Vec<usize> = k.iter().map(|&e| e as usize).collect();
        let coeff = &factor * Rat::from_integer(multinomial(nu, &parts));
        terms.push((mono.clone(), coeff));
        mu.insert(mono, factor);
    }
    let form = Polynomial::from_terms(n, terms);
    if form.total_degree() != Some(nu as u32) {
        return Err(CoreError::Internal(format!(
            "associated form must have degree {nu}, got {:?}",
            form.total_degree()
        )));
    }
    Ok(AssociatedForm { source_q: q.clone(), mu, form })
}

/// The associated form of Q: μ_k is extracted from
/// e₁^{k₁}…e_n^{k_n} = μ_k·v in the Milnor algebra, with v the class of
/// ∏ zᵢ^{m−2} (Hessian class when that vanishes), and the form is
/// Σ μ_k·multinomial(n(m−2); k)·w^k.
///
/// Errors: non-homogeneous input, degree < 3, fewer than 2 variables, or a
/// non-isolated critical point ([`CoreError::NotIsolated`]).
pub fn associated_form(q: &Polynomial) -> Result<AssociatedForm, CoreError> {
    let (a, n, m) = milnor_preflight(q)?;
    let prod = Monomial::new(vec![m - 2; n]);
    let v = a.coords_of(&Polynomial::from_monomial(prod, Rat::one()));
    let v = if v.iter().any(|c| !c.is_zero()) {
        v
    } else {
        a.hessian_class()
            .ok_or_else(|| {
                CoreError::Internal(
                    "no socle generator available: product class and Hessian class both vanish"
                        .to_string(),
                )
            })?
            .to_vec()
    };
    assemble_form(q, &a, v, n, m)
}

/// [`associated_form`] with a caller-specified socle generator (a
/// polynomial in the z-variables). The class of `v_poly` must be nonzero
/// and annihilate the maximal ideal; different generators rescale the form
/// by the reciprocal factor.
pub fn associated_form_in(q: &Polynomial, v_poly: &Polynomial) -> Result<AssociatedForm, CoreError> {
    let (a, n, m) = milnor_preflight(q)?;
    let v = a.coords_of(v_poly);
    if v.iter().all(Rat::is_zero) {
        return Err(CoreError::InvalidInput(
            "the socle generator has zero class".to_string(),
        ));
    }
    for var in 0..n {
        if a.mul_by_variable(var, &v).iter().any(|c| !c.is_zero()) {
            return Err(CoreError::InvalidInput(format!(
                "the proposed generator does not annihilate the maximal ideal (variable {})",
                var + 1
            )));
        }
    }
    assemble_form(q, &a, v, n, m)
}

/// I₄, I₆, Δ and j of a Hesse-shape ternary cubic
/// a·z₁³ + b·z₂³ + c·z₃³ + 6d·z₁z₂z₃ (each coefficient may vanish).
///
/// Errors with [`CoreError::UnsupportedCubicShape`] for anything outside
/// that shape — the formulas are not valid for general ternary cubics.
pub fn ternary_cubic_invariants(q: &Polynomial) -> Result<TernaryCubicInvariants, CoreError> {
    if q.nvars() != 3 {
        return Err(CoreError::UnsupportedCubicShape(format!(
            "expected a ternary cubic, got {} variables",
            q.nvars()
        )));
    }
    let cube = |i: usize| {
        let mut e = vec![0u32; 3];
        e[i] = 3;
        Monomial::new(e)
    };
    let triple = Monomial::new(vec![1, 1, 1]);
    for (mono, _) in q.terms() {
        if *mono != triple && (0..3).all(|i| *mono != cube(i)) {
            return Err(CoreError::UnsupportedCubicShape(format!(
                "monomial {mono} is outside the shape a·z1^3 + b·z2^3 + c·z3^3 + 6d·z1*z2*z3"
            )));
        }
    }
    let a = q.coeff(&cube(0));
    let b = q.coeff(&cube(1));
    let c = q.coeff(&cube(2));
    let d = q.coeff(&triple) / Rat::from_integer(BigInt::from(6));

    let abc = &a * &b * &c;
    let d3 = &d * &d * &d;
    let i4 = &abc * &d - &d * &d3;
    let i6 = &abc * &abc
        - Rat::from_integer(BigInt::from(20)) * &abc * &d3
        - Rat::from_integer(BigInt::from(8)) * &d3 * &d3;
    let delta = &i6 * &i6 + Rat::from_integer(BigInt::from(64)) * &i4 * &i4 * &i4;
    let j = if delta.is_zero() {
        None
    } else {
        Some(Rat::from_integer(BigInt::from(64)) * &i4 * &i4 * &i4 / &delta)
    };
    Ok(TernaryCubicInvariants { i4, i6, delta, j })
}

/// Evaluates a named invariant at the associated form of Q. For the
/// reciprocal ratio 𝐣 = Δ/(64I₄³) it errors with
/// [`CoreError::UndefinedInvariant`] when Δ (j undefined) or I₄ (j = 0)
/// vanishes at the associated form.
pub fn evaluate_invariant_at_associated(
    q: &Polynomial,
    inv: NamedInvariant,
) -> Result<Rat, CoreError> {
    let af = associated_form(q)?;
    let tc = ternary_cubic_invariants(af.form())?;
    match inv {
        NamedInvariant::I4 => Ok(tc.i4),
        NamedInvariant::I6 => Ok(tc.i6),
        NamedInvariant::Delta => Ok(tc.delta),
        NamedInvariant::J => tc.j.ok_or(CoreError::UndefinedInvariant {
            denominator: "Delta".to_string(),
        }),
        NamedInvariant::JInv => {
            if tc.delta.is_zero() {
                return Err(CoreError::UndefinedInvariant {
                    denominator: "Delta".to_string(),
                });
            }
            // Within the Hesse shape Δ ≠ 0 forces I₄ ≠ 0 at associated
            // forms of the worked family, but the guard is kept: 𝐣 = 1/j
            // is undefined when j = 0.
            if tc.i4.is_zero() {
                return Err(CoreError::UndefinedInvariant {
                    denominator: "I4".to_string(),
                });
            }
            let sixty_four = Rat::from_integer(BigInt::from(64));
            Ok(tc.delta / (sixty_four * &tc.i4 * &tc.i4 * &tc.i4))
        }
    }
}

/// The discriminant-style resultant of a binary form: the homogeneous
/// Sylvester determinant of its two partial derivatives. Zero exactly when
/// the form has a repeated projective root — the isolated-singularity test
/// for binary forms. (Normalization differs from other conventions by a
/// nonzero scalar; only the vanishing locus is meaningful.)
pub fn binary_discriminant(q: &Polynomial) -> Result<Rat, CoreError> {
    if q.nvars() != 2 {
        return Err(CoreError::InvalidInput(format!(
            "expected a binary form, got {} variables",
            q.nvars()
        )));
    }
    if !q.is_homogeneous() {
        return Err(CoreError::InvalidInput(
            "the input form must be homogeneous".to_string(),
        ));
    }
    let m = match q.total_degree() {
        Some(m) if m >= 2 => m as usize,
        _ => {
            return Err(CoreError::InvalidInput(
                "the input form must have degree at least 2".to_string(),
            ))
        }
    };
    // Coefficient vectors of the two partials over z₁^{m−1−i} z₂^{i}.
    let coeff_vec = |p: &Polynomial| -> Vec<Rat> {
        (0..m).map(|i| {
            p.coeff(&Monomial::new(vec![(m - 1 - i) as u32, i as u32]))
        }).collect()
    };
    let f = coeff_vec(&q.partial_derivative(0));
    let g = coeff_vec(&q.partial_derivative(1));
    let size = 2 * (m - 1);
    let mut sylvester = crate::linalg::QMatrix::zeros(size, size);
    for row in 0..(m - 1) {
        for (col, val) in f.iter().enumerate() {
            sylvester.set(row, row + col, val.clone());
        }
        for (col, val) in g.iter().enumerate() {
            sylvester.set(m - 1 + row, row + col, val.clone());
        }
    }
    Ok(sylvester.det())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn qi(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    fn cubic_family(t: &Rat) -> Polynomial {
        Polynomial::from_terms(
            3,
            vec![
                (Monomial::new(vec![3, 0, 0]), qi(1)),
                (Monomial::new(vec![0, 3, 0]), qi(1)),
                (Monomial::new(vec![0, 0, 3]), qi(1)),
                (Monomial::new(vec![1, 1, 1]), t.clone()),
            ],
        )
    }

    /// −(t/3)(w₁³+w₂³+w₃³) + 6w₁w₂w₃.
    fn expected_associated(t: &Rat) -> Polynomial {
        let c = -t / qi(3);
        Polynomial::from_terms(
            3,
            vec![
                (Monomial::new(vec![3, 0, 0]), c.clone()),
                (Monomial::new(vec![0, 3, 0]), c.clone()),
                (Monomial::new(vec![0, 0, 3]), c),
                (Monomial::new(vec![1, 1, 1]), qi(6)),
            ],
        )
    }

    #[test]
    fn family_associated_form_closed_form() {
        for t in [qi(1), qi(2), qi(5), qi(-4), q(1, 2)] {
            let af = associated_form(&cubic_family(&t)).unwrap();
            assert_eq!(af.mu_value(&[3, 0, 0]), -&t / qi(3), "t={t}");
            assert_eq!(af.mu_value(&[0, 3, 0]), -&t / qi(3));
            assert_eq!(af.mu_value(&[0, 0, 3]), -&t / qi(3));
            assert_eq!(af.mu_value(&[1, 1, 1]), qi(1));
            assert_eq!(af.mu_value(&[2, 1, 0]), qi(0));
            let expected_len = if t.is_zero() { 1 } else { 4 };
            assert_eq!(af.mu().len(), expected_len);
            assert_eq!(af.form(), &expected_associated(&t));
        }
    }

    #[test]
    fn fermat_associated_form() {
        let af = associated_form(&cubic_family(&qi(0))).unwrap();
        assert_eq!(
            af.form(),
            &Polynomial::from_exps(3, &[(qi(6), &[1, 1, 1])])
        );
    }

    #[test]
    fn associated_form_ignores_scaling_of_q() {
        let base = associated_form(&cubic_family(&qi(2))).unwrap();
        let scaled = associated_form(&cubic_family(&qi(2)).scale(&qi(3))).unwrap();
        assert_eq!(base.form(), scaled.form());
    }

    #[test]
    fn binary_quartic_associated_form() {
        let quartic = Polynomial::from_exps(2, &[(qi(1), &[4, 0]), (qi(1), &[0, 4])]);
        let af = associated_form(&quartic).unwrap();
        assert_eq!(
            af.form(),
            &Polynomial::from_exps(2, &[(qi(6), &[2, 2])])
        );
        assert_eq!(af.form().total_degree(), Some(4)); // n(m−2) = 2·2
    }

    #[test]
    fn custom_socle_generator_rescales() {
        let qt = cubic_family(&qi(1));
        let base = associated_form(&qt).unwrap();
        // v′ = 5·z₁z₂z₃ as a polynomial: μ and the form divide by 5.
        let v = Polynomial::from_exps(3, &[(qi(5), &[1, 1, 1])]);
        let rescaled = associated_form_in(&qt, &v).unwrap();
        assert_eq!(rescaled.form(), &base.form().scale(&q(1, 5)));
        // The Hessian class is also a valid generator.
        let hess = qt.hessian_det();
        let via_hessian = associated_form_in(&qt, &hess).unwrap();
        assert_eq!(
            via_hessian.form(),
            &base.form().scale(&(qi(1) / (qi(8) * qi(28))))
        );
    }

    #[test]
    fn custom_socle_generator_validation() {
        let qt = cubic_family(&qi(1));
        // Zero class.
        let zero = Polynomial::from_exps(3, &[(qi(1), &[0, 0, 4])]);
        assert!(matches!(
            associated_form_in(&qt, &zero),
            Err(CoreError::InvalidInput(_))
        ));
        // Nonzero class outside the socle.
        let not_socle = Polynomial::variable(3, 0);
        assert!(matches!(
            associated_form_in(&qt, &not_socle),
            Err(CoreError::InvalidInput(_))
        ));
    }

    #[test]
    fn degenerate_member_rejected() {
        assert!(matches!(
            associated_form(&cubic_family(&qi(-3))),
            Err(CoreError::NotIsolated)
        ));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let p = Polynomial::from_exps(3, &[(qi(1), &[3, 0, 0]), (qi(1), &[1, 0, 0])]);
        assert!(matches!(
            associated_form(&p),
            Err(CoreError::InvalidInput(_))
        ));
    }

    #[test]
    fn hesse_invariants_of_family_member() {
        // t = 1: I₄ = 215/1296, Δ = (28/27)³, j = 9938375/37933056 — the
        // closed forms evaluated by hand.
        let tc = ternary_cubic_invariants(&cubic_family(&qi(1))).unwrap();
        assert_eq!(tc.i4, q(215, 1296));
        assert_eq!(tc.i6, q(5291, 5832));
        assert_eq!(tc.delta, q(21952, 19683));
        assert_eq!(tc.j, Some(q(9938375, 37933056)));
    }

    #[test]
    fn hesse_invariants_of_fermat() {
        let tc = ternary_cubic_invariants(&cubic_family(&qi(0))).unwrap();
        assert_eq!(tc.i4, qi(0));
        assert_eq!(tc.i6, qi(1));
        assert_eq!(tc.delta, qi(1));
        assert_eq!(tc.j, Some(qi(0)));
    }

    #[test]
    fn hesse_invariants_of_triple_product() {
        // z₁z₂z₃ alone: a = b = c = 0, d = 1/6.
        let p = Polynomial::from_exps(3, &[(qi(1), &[1, 1, 1])]);
        let tc = ternary_cubic_invariants(&p).unwrap();
        assert_eq!(tc.i4, q(-1, 1296));
        assert_eq!(tc.i6, q(-8, 46656));
        assert_eq!(tc.delta, qi(0));
        assert_eq!(tc.j, None);
    }

    #[test]
    fn unsupported_shapes_rejected() {
        let mixed = Polynomial::from_exps(3, &[(qi(1), &[3, 0, 0]), (qi(1), &[2, 1, 0])]);
        assert!(matches!(
            ternary_cubic_invariants(&mixed),
            Err(CoreError::UnsupportedCubicShape(_))
        ));
        let binary = Polynomial::from_exps(2, &[(qi(1), &[3, 0])]);
        assert!(matches!(
            ternary_cubic_invariants(&binary),
            Err(CoreError::UnsupportedCubicShape(_))
        ));
        let inhomogeneous =
            Polynomial::from_exps(3, &[(qi(1), &[3, 0, 0]), (qi(1), &[1, 1, 1]), (qi(1), &[0, 0, 0])]);
        assert!(matches!(
            ternary_cubic_invariants(&inhomogeneous),
            Err(CoreError::UnsupportedCubicShape(_))
        ));
    }

    #[test]
    fn reciprocal_j_at_associated_form_matches_j_of_source() {
        // 𝐣(associated(Q₁)) must equal j(Q₁).
        let jq = ternary_cubic_invariants(&cubic_family(&qi(1)))
            .unwrap()
            .j
            .unwrap();
        let jinv = evaluate_invariant_at_associated(&cubic_family(&qi(1)), NamedInvariant::JInv)
            .unwrap();
        assert_eq!(jinv, jq);
        assert_eq!(jinv, q(9938375, 37933056));
    }

    #[test]
    fn reciprocal_invariant_undefined_at_excluded_parameters() {
        // t = 0: the associated form is 6w₁w₂w₃ with Δ = 0.
        assert!(matches!(
            evaluate_invariant_at_associated(&cubic_family(&qi(0)), NamedInvariant::JInv),
            Err(CoreError::UndefinedInvariant { .. })
        ));
        // t = 6 (t³ = 216): Δ vanishes at the associated form as well.
        assert!(matches!(
            evaluate_invariant_at_associated(&cubic_family(&qi(6)), NamedInvariant::JInv),
            Err(CoreError::UndefinedInvariant { .. })
        ));
        // Direct invariants stay defined there.
        let i4 = evaluate_invariant_at_associated(&cubic_family(&qi(6)), NamedInvariant::I4)
            .unwrap();
        assert_eq!(i4, -(qi(216) + qi(27)) / qi(27));
    }

    #[test]
    fn binary_discriminant_examples() {
        let pair = Polynomial::from_exps(2, &[(qi(1), &[1, 1])]);
        assert_eq!(binary_discriminant(&pair).unwrap(), qi(-1));

        let double_line = Polynomial::from_exps(2, &[(qi(1), &[2, 0])]);
        assert_eq!(binary_discriminant(&double_line).unwrap(), qi(0));

        let quartic = Polynomial::from_exps(2, &[(qi(1), &[4, 0]), (qi(1), &[0, 4])]);
        assert_eq!(binary_discriminant(&quartic).unwrap(), qi(4096));

        let ternary = Polynomial::from_exps(3, &[(qi(1), &[2, 0, 0])]);
        assert!(matches!(
            binary_discriminant(&ternary),
            Err(CoreError::InvalidInput(_))
        ));
    }
}
