//! Brute-force structure constants from symmetric polynomials: Schur and
//! Schur P-polynomials are summed over their tableaux, multiplied, and
//! expanded back by leading-term elimination. Nothing here uses lattice
//! conditions or slides.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::Mul;

use crate::shapes::Partition;

/// Integer polynomial in `vars` variables with terms above `degree_bound`
/// dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPolynomial {
    vars: usize,
    degree_bound: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl TruncatedPolynomial {
    pub fn zero(vars: usize, degree_bound: usize) -> Self {
        TruncatedPolynomial {
            vars,
            degree_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize, degree_bound: usize) -> Self {
        let mut p = Self::zero(vars, degree_bound);
        p.add_monomial(vec![0; vars], 1);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coefficient(&self, exponent: &[u32]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_monomial(&mut self, exponent: Vec<u32>, c: i64) {
        assert_eq!(exponent.len(), self.vars, "exponent length");
        if exponent.iter().sum::<u32>() as usize > self.degree_bound {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Occupied(mut o) => {
                let v = o.get().checked_add(c).expect("oracle coefficient overflow");
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(slot) => {
                if c != 0 {
                    slot.insert(c);
                }
            }
        }
    }

    /// Drops every term of degree above `d` and keeps `d` as the bound.
    pub fn truncated(mut self, d: usize) -> Self {
        self.terms.retain(|e, _| e.iter().sum::<u32>() as usize <= d);
        self.degree_bound = self.degree_bound.min(d);
        self
    }

    /// `self - c * other`.
    pub fn subtract_scaled(&mut self, other: &TruncatedPolynomial, c: i64) {
        for (e, &k) in &other.terms {
            self.add_monomial(e.clone(), -c * k);
        }
    }

    /// Lexicographically largest exponent.
    pub fn leading(&self) -> Option<(&Vec<u32>, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// Sum of all coefficients.
    pub fn evaluate_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Mul for &TruncatedPolynomial {
    type Output = TruncatedPolynomial;

    fn mul(self, other: &TruncatedPolynomial) -> TruncatedPolynomial {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = TruncatedPolynomial::zero(self.vars, bound);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_monomial(e, x.checked_mul(y).expect("oracle coefficient overflow"));
            }
        }
        out
    }
}

/// Cells of a straight Young (or shifted) diagram in row-major order.
fn diagram(lambda: &Partition, shifted: bool) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &len) in lambda.parts().iter().enumerate() {
        let start = if shifted { i } else { 0 };
        for j in start..start + len {
            cells.push((i, j));
        }
    }
    cells
}

/// Fills `cells` left to right with letters from `letters`, subject to
/// `allowed(letter, left, above, on_diagonal)`, adding `x^{value}` per tableau.
fn tableau_sum(
    lambda: &Partition,
    vars: usize,
    shifted: bool,
    letters: &[u32],
    value: fn(u32) -> usize,
    allowed: fn(u32, Option<u32>, Option<u32>, bool) -> bool,
) -> TruncatedPolynomial {
    let cells = diagram(lambda, shifted);
    let mut filled: HashMap<(usize, usize), u32> = HashMap::new();
    let mut exponent = vec![0u32; vars];
    let mut out = TruncatedPolynomial::zero(vars, usize::MAX);
    #[allow(clippy::too_many_arguments)]
    fn go(
        at: usize,
        cells: &[(usize, usize)],
        letters: &[u32],
        value: fn(u32) -> usize,
        allowed: fn(u32, Option<u32>, Option<u32>, bool) -> bool,
        filled: &mut HashMap<(usize, usize), u32>,
        exponent: &mut Vec<u32>,
        out: &mut TruncatedPolynomial,
    ) {
        if at == cells.len() {
            out.add_monomial(exponent.clone(), 1);
            return;
        }
        let (r, c) = cells[at];
        let left = c.checked_sub(1).and_then(|cl| filled.get(&(r, cl)).copied());
        let above = r.checked_sub(1).and_then(|ra| filled.get(&(ra, c)).copied());
        for &x in letters {
            if !allowed(x, left, above, r == c) {
                continue;
            }
            filled.insert((r, c), x);
            exponent[value(x)] += 1;
            go(at + 1, cells, letters, value, allowed, filled, exponent, out);
            exponent[value(x)] -= 1;
            filled.remove(&(r, c));
        }
    }
    go(0, &cells, letters, value, allowed, &mut filled, &mut exponent, &mut out);
    out
}

/// `s_λ(x_1, ..., x_v)` as a sum over semistandard tableaux with entries
/// at most `v`; zero when `ℓ(λ) > v`.
pub fn schur_polynomial(lambda: &Partition, vars: usize) -> TruncatedPolynomial {
    let letters: Vec<u32> = (0..vars as u32).collect();
    tableau_sum(
        lambda,
        vars,
        false,
        &letters,
        |x| x as usize,
        |x, left, above, _| left.is_none_or(|l| l <= x) && above.is_none_or(|u| u < x),
    )
}

/// `P_λ(x_1, ..., x_v)` as a sum over marked shifted tableaux with entries
/// at most `v` and no mark on the diagonal. Letter `2i` stands for the
/// marked `i+1` and `2i+1` for the unmarked one.
pub fn p_function(lambda: &Partition, vars: usize) -> TruncatedPolynomial {
    let letters: Vec<u32> = (0..2 * vars as u32).collect();
    tableau_sum(
        lambda,
        vars,
        true,
        &letters,
        |x| (x / 2) as usize,
        |x, left, above, diagonal| {
            let marked = x % 2 == 0;
            !(diagonal && marked)
                && left.is_none_or(|l| l < x || (l == x && !marked))
                && above.is_none_or(|u| u < x || (u == x && marked))
        },
    )
}

/// Expands a symmetric polynomial in a basis whose element for `ν` has
/// leading monomial `x^ν` with coefficient 1.
fn eliminate(
    mut poly: TruncatedPolynomial,
    mut basis: impl FnMut(&Partition) -> TruncatedPolynomial,
) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = poly.leading() {
        let parts: Vec<usize> = lead.iter().map(|&e| e as usize).collect();
        let nu = Partition::new(parts).expect("leading exponent of a symmetric polynomial is a partition");
        let b = basis(&nu);
        assert_eq!(b.leading(), Some((lead, 1)), "basis element for {nu} is not unitriangular");
        let before = lead.clone();
        poly.subtract_scaled(&b, c);
        assert!(poly.leading().is_none_or(|(e, _)| *e < before), "elimination did not progress");
        out.insert(nu, c);
    }
    out
}

/// Coefficient of `s_ν` in `s_λ s_μ`.
pub fn schur_product_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    let vars = lambda.len().max(mu.len()).max(nu.len()).max(1);
    let d = nu.weight();
    let product = &schur_polynomial(lambda, vars).truncated(d) * &schur_polynomial(mu, vars).truncated(d);
    eliminate(product, |k| schur_polynomial(k, vars))
        .get(nu)
        .copied()
        .unwrap_or(0)
}

/// Coefficient of `P_ν` in `P_λ P_μ`, computed in `|λ|+|μ|` variables.
pub fn p_product_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    let vars = (lambda.weight() + mu.weight()).max(1);
    let d = nu.weight();
    let product = &p_function(lambda, vars).truncated(d) * &p_function(mu, vars).truncated(d);
    eliminate(product, |k| p_function(k, vars))
        .get(nu)
        .copied()
        .unwrap_or(0)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OracleKind {
    Schur,
    SchurP,
}

/// Caches basis polynomials and whole product expansions, for sweeps.
pub struct ProductOracle {
    kind: OracleKind,
    max_vars: usize,
    polys: HashMap<(Partition, usize), TruncatedPolynomial>,
    products: HashMap<(Partition, Partition), BTreeMap<Partition, i64>>,
}

impl ProductOracle {
    pub fn new(kind: OracleKind) -> Self {
        ProductOracle {
            kind,
            max_vars: usize::MAX,
            polys: HashMap::new(),
            products: HashMap::new(),
        }
    }

    /// Caps the variable count. Basis polynomials indexed by partitions of
    /// length at most the cap stay independent, so coefficients of those
    /// partitions are unchanged.
    pub fn with_max_vars(kind: OracleKind, max_vars: usize) -> Self {
        ProductOracle {
            max_vars: max_vars.max(1),
            ..Self::new(kind)
        }
    }

    fn poly(&mut self, lambda: &Partition, vars: usize) -> TruncatedPolynomial {
        let kind = self.kind;
        self.polys
            .entry((lambda.clone(), vars))
            .or_insert_with(|| match kind {
                OracleKind::Schur => schur_polynomial(lambda, vars),
                OracleKind::SchurP => p_function(lambda, vars),
            })
            .clone()
    }

    /// All nonzero `ν ↦ coefficient` of the product of the basis elements
    /// for `λ` and `μ`.
    pub fn expansion(&mut self, lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
        let key = (lambda.clone(), mu.clone());
        if let Some(hit) = self.products.get(&key) {
            return hit.clone();
        }
        let vars = match self.kind {
            OracleKind::Schur => lambda.len() + mu.len(),
            OracleKind::SchurP => lambda.weight() + mu.weight(),
        }
        .min(self.max_vars)
        .max(1);
        let d = lambda.weight() + mu.weight();
        let product = &self.poly(lambda, vars).truncated(d) * &self.poly(mu, vars).truncated(d);
        let out = eliminate(product, |k| self.poly(k, vars));
        self.products.insert(key, out.clone());
        out
    }

    pub fn coefficient(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        self.expansion(lambda, mu).get(nu).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(vars: usize, terms: &[(&[u32], i64)]) -> TruncatedPolynomial {
        let mut out = TruncatedPolynomial::zero(vars, usize::MAX);
        for (e, c) in terms {
            out.add_monomial(e.to_vec(), *c);
        }
        out
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_polynomial(&p("1"), 2).terms(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]).terms());
        assert_eq!(schur_polynomial(&p("1,1"), 2).terms(), poly(2, &[(&[1, 1], 1)]).terms());
        assert_eq!(schur_polynomial(&p("2,1"), 3).evaluate_at_ones(), 8);
        assert!(schur_polynomial(&p("1,1,1"), 2).is_zero());
        assert_eq!(schur_polynomial(&p(""), 2).terms(), TruncatedPolynomial::one(2, 0).terms());
    }

    #[test]
    fn p_examples() {
        assert_eq!(p_function(&p("1"), 2).terms(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]).terms());
        assert_eq!(
            p_function(&p("2"), 2).terms(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]).terms()
        );
        assert_eq!(p_function(&p(""), 3).terms(), TruncatedPolynomial::one(3, 0).terms());
    }

    #[test]
    fn truncation_drops_high_degree() {
        let x = poly(1, &[(&[1], 1)]);
        let bounded = x.clone().truncated(1);
        assert!((&bounded * &x).is_zero());
        assert!(poly(1, &[(&[2], 1)]).truncated(1).is_zero());
        assert_eq!((&x * &x).coefficient(&[2]), 1);
    }

    #[test]
    fn product_examples() {
        assert_eq!(schur_product_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(schur_product_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(schur_product_coefficient(&p("1"), &p("1"), &p("3")), 0);
        assert_eq!(p_product_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(p_product_coefficient(&p("2"), &p("2"), &p("3,1")), 2);
        assert_eq!(p_product_coefficient(&p("2"), &p("1"), &p("2,1")), 1);
    }

    #[test]
    fn cached_oracle_matches_direct_calls() {
        let mut schur = ProductOracle::new(OracleKind::Schur);
        let mut pp = ProductOracle::new(OracleKind::SchurP);
        for (l, m, n) in [("2,1", "2,1", "3,2,1"), ("1", "1", "2"), ("2", "1", "2,1")] {
            assert_eq!(schur.coefficient(&p(l), &p(m), &p(n)), schur_product_coefficient(&p(l), &p(m), &p(n)));
            assert_eq!(pp.coefficient(&p(l), &p(m), &p(n)), p_product_coefficient(&p(l), &p(m), &p(n)));
        }
        let mut capped = ProductOracle::with_max_vars(OracleKind::SchurP, 3);
        assert_eq!(capped.coefficient(&p("2"), &p("2"), &p("3,1")), 2);
        let e = schur.expansion(&p("1"), &p("1"));
        assert_eq!(e, [(p("2"), 1), (p("1,1"), 1)].into_iter().collect());
    }
}
