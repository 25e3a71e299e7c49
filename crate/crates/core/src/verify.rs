//! The executable acceptance suite: nine criteria pinning the library to
//! the two reference computations — a one-parameter family of local
//! Gorenstein algebras ℚ[x₁,x₂]/(2x₁³ + t·x₁x₂³, t·x₁²x₂² + 2x₂⁵) of
//! dimension 15, and the Ẽ₆ cubic family Q_t = z₁³ + z₂³ + z₃³ + t·z₁z₂z₃
//! — plus a structural property suite and negative controls.
//!
//! Each criterion returns a [`CriterionResult`] with a deterministic
//! detail string; [`run_all`] executes all nine in order.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    bilinear_form_gram, ideal_filtration, milnor_algebra, quotient_algebra, socle, QuotientAlgebra,
};
use crate::error::CoreError;
use crate::groebner::{buchberger, normal_form};
use crate::invariants::{
    associated_form, evaluate_invariant_at_associated, ternary_cubic_invariants, NamedInvariant,
};
use crate::linalg::QMatrix;
use crate::nilpoly::{
    component_form, inverse_system_r, nil_polynomial, nil_polynomial_with, NilPolynomialData,
};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rat};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    /// 1-based criterion number.
    pub index: usize,
    /// Short name of what is being checked.
    pub name: &'static str,
    /// Whether every assertion in the criterion held.
    pub pass: bool,
    /// Deterministic human-readable summary (or first failure).
    pub detail: String,
}

fn qi(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn qr(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn es(e: CoreError) -> String {
    e.to_string()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

// ---------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------

/// Generators (2x₁³ + t·x₁x₂³, t·x₁²x₂² + 2x₂⁵) of the dimension-15
/// reference family (Artinian for t ≠ ±2).
pub fn family_generators(t: &Rat) -> Vec<Polynomial> {
    vec![
        Polynomial::from_exps(2, &[(qi(2), &[3, 0]), (t.clone(), &[1, 3])]),
        Polynomial::from_exps(2, &[(t.clone(), &[2, 2]), (qi(2), &[0, 5])]),
    ]
}

/// The Hesse cubic Q_t = z₁³ + z₂³ + z₃³ + t·z₁z₂z₃ (isolated singularity
/// for t³ ≠ −27).
pub fn hesse_cubic(t: &Rat) -> Polynomial {
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

/// The reference basis e₁…e₁₄ of the maximal ideal of the family algebra,
/// as monomials in x₁, x₂ (their classes are a basis for every admissible
/// t, including t = 0).
const FAMILY_E_MONOMIALS: [[u32; 2]; 14] = [
    [1, 0],
    [0, 1],
    [2, 0],
    [1, 1],
    [0, 2],
    [2, 1],
    [1, 2],
    [0, 3],
    [1, 3],
    [2, 2],
    [0, 4],
    [2, 3],
    [1, 4],
    [2, 4],
];

/// Solve for the linear functional that vanishes on each of `zeros` and
/// takes `value` on `target`. The vectors together must determine the
/// functional uniquely (a square nonsingular system).
fn functional_with_values(
    zeros: &[Vec<Rat>],
    target: &[Rat],
    value: &Rat,
) -> Result<Vec<Rat>, String> {
    let mut rows: Vec<Vec<Rat>> = zeros.to_vec();
    rows.push(target.to_vec());
    ensure!(
        rows.len() == target.len(),
        "functional is underdetermined: {} conditions for dimension {}",
        rows.len(),
        target.len()
    );
    let mut rhs = vec![Rat::zero(); rows.len()];
    *rhs.last_mut().expect("nonempty") = value.clone();
    QMatrix::from_rows(rows)
        .solve(&rhs)
        .ok_or_else(|| "functional conditions are inconsistent".to_string())
}

/// Nil-polynomial of the family algebra in the reference presentation:
/// Π = ⟨[e₁], …, [e₁₃]⟩ and ω([e₁₄]) = sign (±1). The printed reference
/// coefficients correspond to sign = −1.
fn family_nil_polynomial_in(
    a: &QuotientAlgebra,
    sign: i64,
) -> Result<NilPolynomialData, String> {
    let class = |e: &[u32; 2]| {
        a.coords_of(&Polynomial::from_monomial(
            Monomial::new(e.to_vec()),
            Rat::one(),
        ))
    };
    let pi: Vec<Vec<Rat>> = FAMILY_E_MONOMIALS[..13].iter().map(class).collect();
    let target = class(&FAMILY_E_MONOMIALS[13]);
    let mut zeros = pi.clone();
    zeros.push(a.identity_coords());
    let omega = functional_with_values(&zeros, &target, &qi(sign))?;
    nil_polynomial_with(a, &pi, &omega).map_err(es)
}

fn family_nil_polynomial(t: &Rat, sign: i64) -> Result<NilPolynomialData, String> {
    let a = quotient_algebra(&family_generators(t)).map_err(es)?;
    family_nil_polynomial_in(&a, sign)
}

/// Monomial in the 13 variables y₁…y₁₃ given as (1-based index, power).
fn y_mono(pairs: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0u32; 13];
    for &(i, p) in pairs {
        e[i - 1] = p;
    }
    Monomial::new(e)
}

/// The printed degree-s component of the family nil-polynomial (sign = −1
/// convention); the degree-5, 6, 7 terms are printed in full — nine
/// monomial coefficients in total.
fn reference_component(t: &Rat, s: usize) -> Polynomial {
    let terms: Vec<(Monomial, Rat)> = match s {
        7 => vec![(y_mono(&[(2, 7)]), t / qi(10080))],
        6 => vec![
            (y_mono(&[(1, 2), (2, 4)]), qr(-1, 48)),
            (y_mono(&[(2, 5), (5, 1)]), t / qi(240)),
        ],
        5 => vec![
            (y_mono(&[(1, 4), (2, 1)]), t / qi(48)),
            (y_mono(&[(1, 2), (2, 2), (5, 1)]), qr(-1, 4)),
            (y_mono(&[(1, 1), (2, 3), (4, 1)]), qr(-1, 6)),
            (y_mono(&[(2, 3), (5, 2)]), t / qi(24)),
            (y_mono(&[(2, 4), (8, 1)]), t / qi(48)),
            (y_mono(&[(2, 4), (3, 1)]), qr(-1, 24)),
        ],
        _ => panic!("only degrees 5, 6, 7 are printed in full"),
    };
    Polynomial::from_terms(13, terms)
}

/// The printed inverse system R(y₁, y₂) of the family (sign = −1).
fn reference_r(t: &Rat) -> Polynomial {
    Polynomial::from_exps(
        2,
        &[
            (t / qi(10080), &[0, 7]),
            (qr(-1, 48), &[2, 4]),
            (t / qi(48), &[4, 1]),
        ],
    )
}

/// j(Q_t) = −t³(t³−216)³ / (1728(t³+27)³), valid for t³ ≠ −27.
fn reference_j(t: &Rat) -> Rat {
    let t3 = t * t * t;
    let num = -&t3 * (&t3 - qi(216)).pow(3);
    let den = qi(1728) * (&t3 + qi(27)).pow(3);
    num / den
}

/// −(t/3)(w₁³ + w₂³ + w₃³) + 6·w₁w₂w₃ — the associated form of Q_t.
fn reference_associated(t: &Rat) -> Polynomial {
    let c = -(t / qi(3));
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

/// t ∈ {±1, …, ±64} minus the exclusions, in ascending order.
fn parameter_sample(exclude: &[i64]) -> Vec<i64> {
    let mut out = Vec::new();
    for t in -64..=64i64 {
        if t != 0 && !exclude.contains(&t) {
            out.push(t);
        }
    }
    out
}

fn vectors_proportional(u: &[Rat], v: &[Rat]) -> bool {
    if u.len() != v.len() || u.iter().all(Rat::is_zero) {
        return false;
    }
    let Some(i) = v.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let scale = &u[i] / &v[i];
    u.iter().zip(v).all(|(a, b)| *a == b * &scale)
}

// ---------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------

fn wrap(
    index: usize,
    name: &'static str,
    body: impl FnOnce() -> Result<String, String>,
) -> CriterionResult {
    match body() {
        Ok(detail) => CriterionResult { index, name, pass: true, detail },
        Err(detail) => CriterionResult { index, name, pass: false, detail },
    }
}

fn c1() -> Result<String, String> {
    let sample = [1i64, 3, 4, 5, -1, -3, -4];
    for &t in &sample {
        let a = quotient_algebra(&family_generators(&qi(t))).map_err(es)?;
        ensure!(a.dim() == 15, "t = {t}: dimension {} ≠ 15", a.dim());
        let sd = socle(&a);
        ensure!(
            sd.is_gorenstein(),
            "t = {t}: socle dimension {} ≠ 1",
            sd.dimension()
        );
        let nu = ideal_filtration(&a).nil_index();
        ensure!(nu == 7, "t = {t}: nil-index {nu} ≠ 7");
    }
    let a0 = quotient_algebra(&family_generators(&qi(0))).map_err(es)?;
    ensure!(a0.dim() == 15, "t = 0: dimension {} ≠ 15", a0.dim());
    ensure!(socle(&a0).is_gorenstein(), "t = 0: not Gorenstein");
    let nu0 = ideal_filtration(&a0).nil_index();
    ensure!(nu0 == 6, "t = 0: nil-index {nu0} ≠ 6");
    Ok(format!(
        "dimension 15, Gorenstein, ν = 7 at t ∈ {sample:?}; ν = 6 at t = 0"
    ))
}

fn c2() -> Result<String, String> {
    let sample = [0i64, 1, 3, 4, 5, -1, -3, -4];
    for &t in &sample {
        let t = qi(t);
        for sign in [-1i64, 1] {
            let npd = family_nil_polynomial(&t, sign)?;
            for s in [5usize, 6, 7] {
                let got = npd
                    .component(s)
                    .cloned()
                    .unwrap_or_else(|| Polynomial::zero(13));
                // The printed coefficients correspond to ω(e₁₄) = −1;
                // flipping the sign negates every coefficient.
                let want = reference_component(&t, s).scale(&qi(-sign));
                ensure!(
                    got == want,
                    "t = {t}, ω(e₁₄) = {sign}: degree-{s} component is {got}, reference gives {want}"
                );
            }
        }
    }
    Ok(format!(
        "all nine printed degree-5/6/7 coefficients reproduced at t ∈ {sample:?} (both ω sign conventions; printed values correspond to ω(e₁₄) = −1)"
    ))
}

fn c3() -> Result<String, String> {
    let sample = [0i64, 1, 3, 4, 5, -1, -3, -4];
    for &t in &sample {
        let t = qi(t);
        for sign in [-1i64, 1] {
            let npd = family_nil_polynomial(&t, sign)?;
            let inv = inverse_system_r(&npd).map_err(es)?;
            let want = reference_r(&t).scale(&qi(-sign));
            ensure!(
                inv.g() == &want,
                "t = {t}, ω(e₁₄) = {sign}: R = {}, reference gives {want}",
                inv.g()
            );
            let report = inv.report();
            ensure!(
                report.pass && report.span_dimension == 15,
                "t = {t}: annihilator verification span {} ≠ 15",
                report.span_dimension
            );
        }
    }
    Ok(format!(
        "R = (t/10080)y₂⁷ − (1/48)y₁²y₂⁴ + (t/48)y₁⁴y₂ with derivative-span dimension 15 at t ∈ {sample:?}"
    ))
}

fn c4() -> Result<String, String> {
    let mut scales = Vec::new();
    for &t in &[1i64, 3, 4, 5, -1, -3, -4] {
        let t = qi(t);
        let npd = family_nil_polynomial(&t, -1)?;
        let top = component_form(&npd, 7).map_err(es)?;
        let target = Polynomial::from_exps(2, &[(&t / qi(10080), &[0, 7])]);
        let scale = top.proportional_scale(&target).ok_or(format!(
            "t = {t}: top component {top} is not proportional to (t/10080)y₂⁷"
        ))?;
        ensure!(!scale.is_zero(), "t = {t}: zero proportionality scale");
        scales.push(scale);
    }
    let npd0 = family_nil_polynomial(&qi(0), -1)?;
    let top0 = component_form(&npd0, 6).map_err(es)?;
    let target0 = Polynomial::from_exps(2, &[(qr(-1, 48), &[2, 4])]);
    let scale0 = top0.proportional_scale(&target0).ok_or(format!(
        "t = 0: top component {top0} is not proportional to −(1/48)y₁²y₂⁴"
    ))?;
    ensure!(!scale0.is_zero(), "t = 0: zero proportionality scale");
    let all_unit = scales.iter().all(|c| c.is_one()) && scale0.is_one();
    Ok(format!(
        "top component ∝ (t/10080)y₂⁷ (t ≠ 0) and ∝ −(1/48)y₁²y₂⁴ (t = 0){}",
        if all_unit { ", scale 1 throughout" } else { "" }
    ))
}

fn c5() -> Result<String, String> {
    let mut count = 0usize;
    let mut ts: Vec<i64> = parameter_sample(&[-3]);
    ts.push(0);
    for &t in &ts {
        let t = qi(t);
        let af = associated_form(&hesse_cubic(&t)).map_err(es)?;
        let diag = -(&t / qi(3));
        for k in [[3u32, 0, 0], [0, 3, 0], [0, 0, 3]] {
            ensure!(
                af.mu_value(&k) == diag,
                "t = {t}: μ_{k:?} = {} ≠ −t/3",
                af.mu_value(&k)
            );
        }
        ensure!(
            af.mu_value(&[1, 1, 1]).is_one(),
            "t = {t}: μ_(1,1,1) = {} ≠ 1",
            af.mu_value(&[1, 1, 1])
        );
        let expected_support = if t.is_zero() { 1 } else { 4 };
        ensure!(
            af.mu().len() == expected_support,
            "t = {t}: {} nonzero μ-values, expected {expected_support}",
            af.mu().len()
        );
        ensure!(
            af.form() == &reference_associated(&t),
            "t = {t}: associated form {} differs from the reference",
            af.form()
        );
        count += 1;
    }
    Ok(format!(
        "μ pattern (−t/3, −t/3, −t/3, 1) and form −(t/3)(w₁³+w₂³+w₃³)+6w₁w₂w₃ at {count} admissible parameter values"
    ))
}

fn c6() -> Result<String, String> {
    let mut count = 0usize;
    let mut ts: Vec<i64> = parameter_sample(&[-3]);
    ts.push(0);
    for &t in &ts {
        let t = qi(t);
        let tc = ternary_cubic_invariants(&hesse_cubic(&t)).map_err(es)?;
        let t3 = &t * &t * &t;
        let i4_expected = &t * (qi(216) - &t3) / qi(1296);
        ensure!(
            tc.i4 == i4_expected,
            "t = {t}: I₄ = {} ≠ t(216−t³)/1296",
            tc.i4
        );
        let j_expected = reference_j(&t);
        ensure!(
            tc.j == Some(j_expected.clone()),
            "t = {t}: j = {:?} ≠ {j_expected}",
            tc.j
        );
        count += 1;
    }
    Ok(format!(
        "j(Q_t) = −t³(t³−216)³/(1728(t³+27)³) via I₄, I₆, Δ at {count} admissible parameter values"
    ))
}

fn c7() -> Result<String, String> {
    let ts = parameter_sample(&[-3, 6]);
    for &t in &ts {
        let t = qi(t);
        let got = evaluate_invariant_at_associated(&hesse_cubic(&t), NamedInvariant::JInv)
            .map_err(|e| format!("t = {t}: {e}"))?;
        let want = reference_j(&t);
        ensure!(got == want, "t = {t}: 𝐣(associated form) = {got} ≠ j(Q_t) = {want}");
    }
    for t in [0i64, 6] {
        match evaluate_invariant_at_associated(&hesse_cubic(&qi(t)), NamedInvariant::JInv) {
            Err(CoreError::UndefinedInvariant { denominator }) => {
                ensure!(
                    denominator == "Delta",
                    "t = {t}: undefined via {denominator}, expected the vanishing Δ"
                );
            }
            Err(other) => return Err(format!("t = {t}: unexpected error {other}")),
            Ok(v) => return Err(format!("t = {t}: got value {v}, expected undefined")),
        }
    }
    Ok(format!(
        "𝐣(associated form) = j(Q_t) at {} parameter values; reported undefined (Δ = 0) at t = 0 and t = 6",
        ts.len()
    ))
}

// --- criterion 8: structural property suite ---

fn c8a() -> Result<String, String> {
    let gens = family_generators(&qi(1));
    let order2 = MonomialOrder::degrevlex(2);
    let reference = buchberger(&gens, order2.clone()).map_err(es)?;
    let swapped = buchberger(&[gens[1].clone(), gens[0].clone()], order2).map_err(es)?;
    ensure!(
        reference.generators() == swapped.generators(),
        "(a) reduced basis changed under generator swap"
    );

    let q = hesse_cubic(&qi(1));
    let parts: Vec<Polynomial> = (0..3).map(|i| q.partial_derivative(i)).collect();
    let order3 = MonomialOrder::degrevlex(3);
    let base = buchberger(&parts, order3.clone()).map_err(es)?;
    for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let permuted: Vec<Polynomial> = perm.iter().map(|&i| parts[i].clone()).collect();
        let gb = buchberger(&permuted, order3.clone()).map_err(es)?;
        ensure!(
            gb.generators() == base.generators(),
            "(a) reduced basis changed under permutation {perm:?}"
        );
    }
    Ok("(a) reduced basis stable under 7 generator permutations".to_string())
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> Polynomial {
    let nterms = rng.gen_range(1..=5);
    let terms = (0..nterms).map(|_| {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=3)).collect();
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=4);
        (Monomial::new(exps), qr(num, den))
    });
    Polynomial::from_terms(nvars, terms.collect::<Vec<_>>())
}

fn c8b() -> Result<String, String> {
    let gb = buchberger(&family_generators(&qi(1)), MonomialOrder::degrevlex(2)).map_err(es)?;
    let mut rng = ChaCha8Rng::seed_from_u64(20260815);
    for trial in 0..100 {
        let p = random_poly(&mut rng, 2);
        let r = random_poly(&mut rng, 2);
        let np = normal_form(&p, &gb);
        let nr = normal_form(&r, &gb);
        ensure!(
            normal_form(&np, &gb) == np,
            "(b) trial {trial}: normal form not idempotent"
        );
        ensure!(
            normal_form(&(&p + &r), &gb) == &np + &nr,
            "(b) trial {trial}: normal form not additive"
        );
        let c = qr(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4));
        ensure!(
            normal_form(&p.scale(&c), &gb) == np.scale(&c),
            "(b) trial {trial}: normal form not homogeneous under scaling"
        );
        ensure!(
            normal_form(&(&p * &r), &gb) == normal_form(&(&np * &nr), &gb),
            "(b) trial {trial}: normal form not multiplicative"
        );
    }
    Ok("(b) normal form idempotent/linear/multiplicative on 100 random pairs".to_string())
}

fn c8c() -> Result<String, String> {
    let binary_quartic = Polynomial::from_exps(2, &[(qi(1), &[4, 0]), (qi(1), &[0, 4])]);
    let nongraded = vec![
        Polynomial::from_exps(2, &[(qi(1), &[1, 0]), (qi(-1), &[0, 2])]),
        Polynomial::from_exps(2, &[(qi(1), &[0, 4])]),
    ];
    let fixtures: Vec<(&str, QuotientAlgebra)> = vec![
        ("family t=1", quotient_algebra(&family_generators(&qi(1))).map_err(es)?),
        ("family t=3", quotient_algebra(&family_generators(&qi(3))).map_err(es)?),
        ("family t=0", quotient_algebra(&family_generators(&qi(0))).map_err(es)?),
        ("cubic t=1", milnor_algebra(&hesse_cubic(&qi(1))).map_err(es)?),
        ("cubic t=0", milnor_algebra(&hesse_cubic(&qi(0))).map_err(es)?),
        ("binary quartic", milnor_algebra(&binary_quartic).map_err(es)?),
        ("non-graded intersection", quotient_algebra(&nongraded).map_err(es)?),
    ];
    for (name, a) in &fixtures {
        let sd = socle(a);
        let gram = bilinear_form_gram(a, &sd).map_err(|e| format!("(c) {name}: {e}"))?;
        ensure!(
            !gram.det().is_zero(),
            "(c) {name}: singular Gram matrix"
        );
    }
    Ok(format!("(c) nonsingular Gram matrix on {} Gorenstein fixtures", fixtures.len()))
}

fn c8d() -> Result<String, String> {
    let fixtures: Vec<(usize, u32, Polynomial)> = vec![
        (2, 3, Polynomial::from_exps(2, &[(qi(1), &[3, 0]), (qi(1), &[0, 3])])),
        (2, 4, Polynomial::from_exps(2, &[(qi(1), &[4, 0]), (qi(1), &[0, 4])])),
        (3, 3, hesse_cubic(&qi(1))),
        (
            3,
            4,
            Polynomial::from_exps(3, &[(qi(1), &[4, 0, 0]), (qi(1), &[0, 4, 0]), (qi(1), &[0, 0, 4])]),
        ),
    ];
    for (n, m, q) in &fixtures {
        let a = milnor_algebra(q).map_err(es)?;
        let nu = ideal_filtration(&a).nil_index();
        let expected = n * (*m as usize - 2);
        ensure!(
            nu == expected,
            "(d) n={n}, m={m}: ν = {nu} ≠ n(m−2) = {expected}"
        );
        let sd = socle(&a);
        ensure!(
            sd.dimension() == 1,
            "(d) n={n}, m={m}: socle dimension {}",
            sd.dimension()
        );
        let hess = a.coords_of(&q.hessian_det());
        ensure!(
            vectors_proportional(&hess, &sd.socle_basis()[0]),
            "(d) n={n}, m={m}: Hessian class does not span the socle"
        );
    }
    Ok("(d) ν = n(m−2) and socle = ⟨Hessian class⟩ for (n,m) ∈ {(2,3),(2,4),(3,3),(3,4)}".to_string())
}

fn c8e() -> Result<String, String> {
    let a = quotient_algebra(&family_generators(&qi(3))).map_err(es)?;
    let base = family_nil_polynomial_in(&a, -1)?;
    let r_base = inverse_system_r(&base).map_err(es)?;
    for c in [qi(2), qi(-3), qr(1, 5)] {
        let omega_scaled: Vec<Rat> = base.omega().iter().map(|w| w * &c).collect();
        let scaled =
            nil_polynomial_with(&a, base.pi_basis(), &omega_scaled).map_err(es)?;
        ensure!(
            scaled.poly() == &base.poly().scale(&c),
            "(e) c = {c}: P does not scale by c"
        );
        for (s, comp) in base.components() {
            ensure!(
                scaled.component(*s) == Some(&comp.scale(&c)),
                "(e) c = {c}: degree-{s} component does not scale by c"
            );
            let desc_base = component_form(&base, *s).map_err(es)?;
            let desc_scaled = component_form(&scaled, *s).map_err(es)?;
            ensure!(
                desc_scaled == desc_base.scale(&c),
                "(e) c = {c}: descended degree-{s} form does not scale by c"
            );
        }
        let r_scaled = inverse_system_r(&scaled).map_err(es)?;
        ensure!(
            r_scaled.g() == &r_base.g().scale(&c),
            "(e) c = {c}: R does not scale by c"
        );
    }
    Ok("(e) P, P^[s], R all scale by c under ω → cω for c ∈ {2, −3, 1/5}".to_string())
}

fn c8f() -> Result<String, String> {
    let q = hesse_cubic(&qi(2));
    let f_base = associated_form(&q).map_err(es)?.form().clone();
    let j_base = ternary_cubic_invariants(&f_base).map_err(es)?.j;
    ensure!(j_base.is_some(), "(f) reference j undefined");
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut done = 0usize;
    while done < 10 {
        let entries: Vec<Vec<Rat>> = (0..3)
            .map(|_| (0..3).map(|_| qi(rng.gen_range(-3i64..=3))).collect())
            .collect();
        if QMatrix::from_rows(entries.clone()).det().is_zero() {
            continue;
        }
        // Q∘C: variable i of Q receives Σ_j C[i][j]·z_j.
        let substitution: Vec<Polynomial> = (0..3)
            .map(|i| {
                Polynomial::from_terms(
                    3,
                    (0..3).map(|j| (Monomial::variable(3, j), entries[i][j].clone())).collect::<Vec<_>>(),
                )
            })
            .collect();
        let qc = q.compose(&substitution);
        let f_prime = associated_form(&qc).map_err(|e| format!("(f) change {done}: {e}"))?
            .form()
            .clone();
        // The associated form transforms contragrediently up to scale:
        // pulling F′ back along w ↦ Cᵀw must land on a multiple of F.
        let pullback: Vec<Polynomial> = (0..3)
            .map(|i| {
                Polynomial::from_terms(
                    3,
                    (0..3).map(|j| (Monomial::variable(3, j), entries[j][i].clone())).collect::<Vec<_>>(),
                )
            })
            .collect();
        let g = f_prime.compose(&pullback);
        let scale = g.proportional_scale(&f_base).ok_or(format!(
            "(f) change {done}: pulled-back associated form not proportional to the reference"
        ))?;
        ensure!(!scale.is_zero(), "(f) change {done}: zero scale");
        let j_g = ternary_cubic_invariants(&g).map_err(es)?.j;
        ensure!(
            j_g == j_base,
            "(f) change {done}: j changed under linear change of variables"
        );
        done += 1;
    }
    Ok("(f) j at the associated form invariant under 10 random invertible changes of variables".to_string())
}

fn c8() -> Result<String, String> {
    let parts = [c8a()?, c8b()?, c8c()?, c8d()?, c8e()?, c8f()?];
    Ok(parts.join("; "))
}

fn c9() -> Result<String, String> {
    match milnor_algebra(&hesse_cubic(&qi(-3))) {
        Err(CoreError::NotIsolated) => {}
        Err(other) => return Err(format!("t = −3: unexpected error {other}")),
        Ok(_) => return Err("t = −3: non-isolated member was accepted".to_string()),
    }
    let square_gens = vec![
        Polynomial::from_exps(2, &[(qi(1), &[2, 0])]),
        Polynomial::from_exps(2, &[(qi(1), &[1, 1])]),
        Polynomial::from_exps(2, &[(qi(1), &[0, 2])]),
    ];
    let a = quotient_algebra(&square_gens).map_err(es)?;
    let sd = socle(&a);
    ensure!(
        sd.dimension() == 2 && !sd.is_gorenstein(),
        "socle dimension {} ≠ 2",
        sd.dimension()
    );
    match nil_polynomial(&a) {
        Err(CoreError::NotGorenstein { socle_dim: 2 }) => {}
        Err(other) => return Err(format!("unexpected refusal {other}")),
        Ok(_) => return Err("non-Gorenstein quotient was accepted".to_string()),
    }
    Ok("non-isolated member rejected; non-Gorenstein quotient reported with socle dimension 2 and refused".to_string())
}

/// Criterion 1: quotient dimensions, Gorenstein property and nil-index of
/// the reference family across a parameter sample.
pub fn criterion_1() -> CriterionResult {
    wrap(1, "family quotient dimensions", c1)
}

/// Criterion 2: every printed degree-5/6/7 coefficient of the family
/// nil-polynomial, bit-exactly, under both ω sign conventions.
pub fn criterion_2() -> CriterionResult {
    wrap(2, "family nil-polynomial coefficients", c2)
}

/// Criterion 3: the printed inverse system R with a passing apolarity
/// verification of span dimension 15.
pub fn criterion_3() -> CriterionResult {
    wrap(3, "family inverse system", c3)
}

/// Criterion 4: the top component form, proportional to the printed form.
pub fn criterion_4() -> CriterionResult {
    wrap(4, "family top component form", c4)
}

/// Criterion 5: μ-values and associated forms of the cubic family over a
/// ≥ 64-point admissible sample.
pub fn criterion_5() -> CriterionResult {
    wrap(5, "cubic family associated forms", c5)
}

/// Criterion 6: the closed-form j-invariant of the cubic family.
pub fn criterion_6() -> CriterionResult {
    wrap(6, "cubic family j-invariant", c6)
}

/// Criterion 7: 𝐣 at the associated form equals j at the cubic itself;
/// excluded parameters report "undefined".
pub fn criterion_7() -> CriterionResult {
    wrap(7, "reciprocal j at associated forms", c7)
}

/// Criterion 8: the six-part structural property suite.
pub fn criterion_8() -> CriterionResult {
    wrap(8, "structural property suite", c8)
}

/// Criterion 9: negative controls (non-isolated member, non-Gorenstein
/// quotient).
pub fn criterion_9() -> CriterionResult {
    wrap(9, "negative controls", c9)
}

/// Run all nine criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functional_solver_fixes_reference_functional() {
        let a = quotient_algebra(&family_generators(&qi(1))).unwrap();
        let npd = family_nil_polynomial_in(&a, -1).unwrap();
        // ω vanishes on Π and 1, and takes −1 on [e₁₄] = [x₁²x₂⁴].
        let v = a.coords_of(&Polynomial::from_exps(2, &[(qi(1), &[2, 4])]));
        let omega = npd.omega();
        let val: Rat = v.iter().zip(omega).map(|(c, w)| c * w).sum();
        assert_eq!(val, qi(-1));
    }

    #[test]
    fn reference_component_degrees() {
        let t = qi(3);
        assert_eq!(reference_component(&t, 7).total_degree(), Some(7));
        assert_eq!(reference_component(&t, 6).total_degree(), Some(6));
        assert_eq!(reference_component(&t, 5).total_degree(), Some(5));
        assert_eq!(
            reference_component(&t, 5).terms().count()
                + reference_component(&t, 6).terms().count()
                + reference_component(&t, 7).terms().count(),
            9
        );
    }

    #[test]
    fn parameter_sample_sizes() {
        assert_eq!(parameter_sample(&[]).len(), 128);
        assert_eq!(parameter_sample(&[-3]).len(), 127);
        assert_eq!(parameter_sample(&[-3, 6]).len(), 126);
    }

    #[test]
    fn reference_j_at_unit() {
        assert_eq!(reference_j(&qi(1)), qr(9938375, 37933056));
        assert_eq!(reference_j(&qi(0)), qi(0));
    }
}
