//! Monomial orders for Gröbner basis computations.
//!
//! Three classical orders are provided — degree-reverse-lexicographic (the
//! default), degree-lexicographic and pure lexicographic — each relative to
//! a variable *priority permutation*: `priority[0]` is the most significant
//! variable. All three are well-orders refining divisibility, as required
//! by the division algorithm.

use std::cmp::Ordering;

use crate::poly::Monomial;

/// The family of supported orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Degree first; ties broken by *smallest* exponent on the *least*
    /// significant variable winning (the standard degrevlex).
    DegRevLex,
    /// Degree first; ties broken lexicographically.
    DegLex,
    /// Pure lexicographic.
    Lex,
}

/// A total order on monomials: an [`OrderKind`] plus a variable priority
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `priority[i]` = index of the i-th most significant variable.
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// The default order: degrevlex with natural variable priority
    /// (x₁ most significant).
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder::new(OrderKind::DegRevLex, (0..nvars).collect())
    }

    /// Deglex with natural variable priority.
    pub fn deglex(nvars: usize) -> Self {
        MonomialOrder::new(OrderKind::DegLex, (0..nvars).collect())
    }

    /// Lex with natural variable priority.
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::new(OrderKind::Lex, (0..nvars).collect())
    }

    /// An order with an explicit priority permutation.
    ///
    /// # Panics
    /// Panics if `priority` is not a permutation of `0..n`.
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Self {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &v in &priority {
            assert!(v < n && !seen[v], "priority must be a permutation of 0..{n}");
            seen[v] = true;
        }
        MonomialOrder { kind, priority }
    }

    /// The order family.
    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Number of variables the order is defined on.
    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// The variable priority permutation (most significant first).
    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Compare two monomials.
    ///
    /// # Panics
    /// Panics if the monomials do not match the order's variable count.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), self.nvars(), "monomial/order ambient mismatch");
        assert_eq!(b.nvars(), self.nvars(), "monomial/order ambient mismatch");
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.lex_cmp(a, b)),
            OrderKind::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.revlex_tiebreak(a, b)),
        }
    }

    /// True when `a` is strictly greater than `b`.
    pub fn gt(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.priority {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Reverse-lex tie-break for equal degrees: scan from the *least*
    /// significant variable; at the first difference, the monomial with the
    /// smaller exponent is the larger one.
    fn revlex_tiebreak(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.priority.iter().rev() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_prefers_low_trailing_exponent() {
        let o = MonomialOrder::degrevlex(3);
        // Same degree 2: z₁z₂ beats z₃² because z₃² has the larger exponent
        // on the least significant variable.
        assert!(o.gt(&m(&[1, 1, 0]), &m(&[0, 0, 2])));
        // Degree dominates everything.
        assert!(o.gt(&m(&[0, 0, 3]), &m(&[1, 1, 0])));
        // Classic separating example: x₁x₂²x₃ vs x₁²x₃² (degree 4 each);
        // degrevlex ranks x₁x₂²x₃ higher (smaller x₃ exponent).
        assert!(o.gt(&m(&[1, 2, 1]), &m(&[2, 0, 2])));
    }

    #[test]
    fn deglex_vs_degrevlex_disagree_where_expected() {
        let deglex = MonomialOrder::deglex(3);
        let degrevlex = MonomialOrder::degrevlex(3);
        // x₁x₂²x₃ vs x₁²x₃²: deglex compares x₁ exponents first.
        assert!(deglex.gt(&m(&[2, 0, 2]), &m(&[1, 2, 1])));
        assert!(degrevlex.gt(&m(&[1, 2, 1]), &m(&[2, 0, 2])));
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::lex(2);
        assert!(o.gt(&m(&[1, 0]), &m(&[0, 9])));
    }

    #[test]
    fn priority_permutation_reorders_significance() {
        // Make x₂ the most significant variable.
        let o = MonomialOrder::new(OrderKind::Lex, vec![1, 0]);
        assert!(o.gt(&m(&[0, 1]), &m(&[5, 0])));
    }

    #[test]
    #[should_panic(expected = "permutation")]
    fn invalid_priority_rejected() {
        MonomialOrder::new(OrderKind::Lex, vec![0, 0]);
    }
}
