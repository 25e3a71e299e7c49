//! Helpers for exact rational arithmetic: parsing/printing the `"p/q"`
//! wire format and small combinatorial quantities (factorials and
//! multinomial coefficients) used by the inverse-system formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Parse a rational from the wire format `"p"` or `"p/q"` (optional leading
/// `-` on `p`; `q` must be a positive integer). Whitespace around the
/// number and around `/` is tolerated.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer `{num_str}` in rational literal"))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| format!("invalid denominator `{d}` in rational literal"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err("zero denominator in rational literal".to_string());
    }
    if den.is_negative() {
        return Err("denominator must be positive".to_string());
    }
    Ok(BigRational::new(num, den))
}

/// Format a rational in the wire format: `"p"` when the denominator is 1,
/// otherwise `"p/q"` with q > 0 and gcd(p, q) = 1. `BigRational` keeps
/// values normalized, so this is a direct print.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// n! as a `BigInt`.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Multinomial coefficient n! / (k₁!·k₂!·…·k_r!).
///
/// # Panics
/// Panics if the parts do not sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    assert_eq!(total, n, "multinomial parts must sum to n");
    let mut acc = factorial(n);
    for &k in parts {
        acc /= factorial(k);
    }
    acc
}
