//! Hilbert series, Krull dimension, and degree (multiplicity) of `R/I`,
//! computed from the leading-term monomial ideal of a Gröbner basis.

use num::{BigInt, One, Signed, Zero};
use serde_json::{json, Value};

use crate::combinatorics::Count;
use crate::groebner::GroebnerBasis;
use crate::poly::{Monomial, MonomialOrder};
use crate::{Error, Result};

/// A monomial ideal presented by its minimal generators (pairwise
/// indivisible), in deterministic (grevlex-ascending) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n_vars: usize,
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generating set.
    pub fn new(n_vars: usize, gens: Vec<Monomial>) -> Self {
        let mut min: Vec<Monomial> = Vec::new();
        let mut gens = gens;
        gens.sort_by(|a, b| MonomialOrder::GrevLex.cmp(a, b));
        gens.dedup();
        for g in gens {
            debug_assert_eq!(g.n_vars(), n_vars);
            if !min.iter().any(|m| m.divides(&g)) {
                min.push(g);
            }
        }
        MonomialIdeal { n_vars, min_gens: min }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn contains_unit(&self) -> bool {
        self.min_gens.iter().any(|m| m.is_one())
    }

    /// True when the given monomial is divisible by some generator.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }
}

/// The leading-term ideal of a reduced Gröbner basis. For a reduced basis
/// the leading monomials are automatically pairwise indivisible.
pub fn leading_term_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.n_vars(), gb.leading_monomials())
}

/// The Hilbert series of `R/I` as `Q(t) / (1−t)^{n_vars}` with an integer
/// numerator. The zero module (when `1 ∈ I`) is represented by the zero
/// numerator and rejected by `dimension`/`degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    n_vars: usize,
    numerator: Vec<BigInt>,
}

impl HilbertSeries {
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Numerator coefficients, constant term first. Zero numerator = zero module.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn is_zero_module(&self) -> bool {
        self.numerator.iter().all(|c| c.is_zero())
    }

    fn factored(&self) -> Result<(usize, Vec<BigInt>)> {
        if self.is_zero_module() {
            return Err(Error::Domain(
                "dimension/degree of the zero ring are undefined".into(),
            ));
        }
        let mut q = trim(self.numerator.clone());
        let mut mult = 0usize;
        while eval_at_one(&q).is_zero() {
            q = divide_by_one_minus_t(&q).expect("t=1 is a root, division is exact");
            mult += 1;
        }
        Ok((mult, q))
    }

    /// Krull dimension of `R/I`: `n_vars` minus the multiplicity of the root
    /// `t = 1` in the numerator.
    pub fn dimension(&self) -> Result<usize> {
        let (mult, _) = self.factored()?;
        Ok(self.n_vars - mult)
    }

    /// Degree (multiplicity) of `R/I`: the value of the deflated numerator
    /// at `t = 1`. Always a positive integer.
    pub fn degree(&self) -> Result<Count> {
        let (_, q) = self.factored()?;
        let v = eval_at_one(&q);
        if !v.is_positive() {
            return Err(Error::Structural(format!(
                "deflated numerator evaluates to non-positive value {v}"
            )));
        }
        Ok(v.to_biguint().expect("positive"))
    }

    /// Coefficient of `t^d` in the power-series expansion of
    /// `Q(t)/(1−t)^{n_vars}`: the Hilbert function of `R/I` at degree `d`.
    pub fn hilbert_function(&self, d: usize) -> BigInt {
        // expand by n_vars cumulative sums of the numerator coefficients
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.numerator.iter().enumerate().take(d + 1) {
            coeffs[i] = c.clone();
        }
        for _ in 0..self.n_vars {
            for i in 1..=d {
                let prev = coeffs[i - 1].clone();
                coeffs[i] += prev;
            }
        }
        coeffs[d].clone()
    }

    pub fn to_json(&self) -> Result<Value> {
        let numerator: Vec<Value> = self
            .numerator
            .iter()
            .map(|c| {
                i64::try_from(c)
                    .map(Value::from)
                    .map_err(|_| Error::Structural("numerator coefficient exceeds i64".into()))
            })
            .collect::<Result<_>>()?;
        Ok(json!({
            "n_vars": self.n_vars,
            "numerator": numerator,
            "dim": self.dimension()?,
            "degree": self.degree()?.to_string().parse::<u64>().map_err(|_| {
                Error::Structural("degree exceeds u64".into())
            })?,
        }))
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        v.push(BigInt::zero());
    }
    v
}

fn eval_at_one(q: &[BigInt]) -> BigInt {
    q.iter().sum()
}

/// Divides a polynomial (dense, constant first) by `(1 − t)`; `None` if the
/// division is not exact.
fn divide_by_one_minus_t(q: &[BigInt]) -> Option<Vec<BigInt>> {
    // synthetic division: q(t) = (1 - t)·r(t) means r_i = q_0 + q_1 + … + q_i
    // truncated at deg(q) - 1, with the full sum vanishing
    if !eval_at_one(q).is_zero() {
        return None;
    }
    let mut out = Vec::with_capacity(q.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in &q[..q.len() - 1] {
        acc += c;
        out.push(acc.clone());
    }
    Some(trim(out))
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_shift_sub(a: &[BigInt], b: &[BigInt], shift: usize) -> Vec<BigInt> {
    // a - t^shift * b
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + shift)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    trim(out)
}

/// Exact Hilbert-series numerator of `R/I` for a monomial ideal, by the
/// standard pivot recursion `Q_I = Q_{I+(p)} + t^{deg p} · Q_{I:p}`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> HilbertSeries {
    let numerator = numerator_rec(&ideal.min_gens, ideal.n_vars);
    HilbertSeries { n_vars: ideal.n_vars, numerator: trim(numerator) }
}

fn numerator_rec(gens: &[Monomial], n_vars: usize) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![BigInt::zero()];
    }
    // pairwise-coprime base case: Q = Π (1 − t^{deg g})
    if pairwise_coprime(gens) {
        let mut q = vec![BigInt::one()];
        for g in gens {
            q = poly_shift_sub(&q, &q.clone(), g.deg() as usize);
        }
        return q;
    }

    // pivot: a variable of maximal occurrence among the generators
    let mut occurrence = vec![0usize; n_vars];
    for g in gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                occurrence[i] += 1;
            }
        }
    }
    let pivot_var = occurrence
        .iter()
        .enumerate()
        .max_by_key(|&(_, c)| c)
        .map(|(i, _)| i)
        .expect("n_vars > 0");
    let pivot = Monomial::var_pow(n_vars, pivot_var, 1);

    // I + (p): pivot plus the generators it does not divide
    let mut sum_gens = vec![pivot.clone()];
    sum_gens.extend(gens.iter().filter(|g| !pivot.divides(g)).cloned());
    let sum_ideal = MonomialIdeal::new(n_vars, sum_gens);

    // I : p, minimalized
    let colon_gens: Vec<Monomial> = gens
        .iter()
        .map(|g| g.try_div(&pivot).unwrap_or_else(|| g.clone()))
        .collect();
    let colon_ideal = MonomialIdeal::new(n_vars, colon_gens);

    let q_sum = numerator_rec(&sum_ideal.min_gens, n_vars);
    let q_colon = numerator_rec(&colon_ideal.min_gens, n_vars);
    // Q_I = Q_{I+(p)} + t·Q_{I:p}; combine via Q_sum - (−t·Q_colon)
    let mut shifted = vec![BigInt::zero()];
    shifted.extend(q_colon);
    poly_add(&q_sum, &shifted)
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let n = gens.first().map_or(0, |g| g.n_vars());
    let mut used = vec![false; n];
    for g in gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                if used[i] {
                    return false;
                }
                used[i] = true;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, Limits};
    use crate::idealgen::{vandermonde_ideal, VandermondeSpec};

    fn mono(exps: Vec<u32>) -> Monomial {
        Monomial::from_exps(exps)
    }

    fn series_of(gens: Vec<Monomial>, n: usize) -> HilbertSeries {
        hilbert_numerator(&MonomialIdeal::new(n, gens))
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn zero_ideal_series() {
        let h = series_of(vec![], 3);
        assert_eq!(h.numerator(), ints(&[1]));
        assert_eq!(h.dimension().unwrap(), 3);
        assert_eq!(h.degree().unwrap(), Count::one());
    }

    #[test]
    fn principal_monomial_ideal() {
        let h = series_of(vec![mono(vec![3, 0])], 2);
        assert_eq!(h.numerator(), ints(&[1, 0, 0, -1]));
        assert_eq!(h.dimension().unwrap(), 1);
        assert_eq!(h.degree().unwrap(), Count::from(3u32));
    }

    #[test]
    fn two_variables_in_three() {
        // (x1, x2) in 3 vars: R/I is a polynomial ring in one variable
        let h = series_of(vec![mono(vec![1, 0, 0]), mono(vec![0, 1, 0])], 3);
        assert_eq!(h.numerator(), ints(&[1, -2, 1]));
        assert_eq!(h.dimension().unwrap(), 1);
        assert_eq!(h.degree().unwrap(), Count::one());
    }

    #[test]
    fn unit_ideal_rejected() {
        let h = series_of(vec![mono(vec![0, 0])], 2);
        assert!(h.is_zero_module());
        assert!(h.dimension().is_err());
        assert!(h.degree().is_err());
    }

    #[test]
    fn minimalization() {
        let ideal = MonomialIdeal::new(2, vec![mono(vec![1, 0]), mono(vec![2, 1])]);
        assert_eq!(ideal.min_gens().len(), 1);
    }

    #[test]
    fn leading_term_ideal_of_linear_case() {
        let spec = VandermondeSpec::new(4, 1).unwrap();
        let gb = buchberger(
            &vandermonde_ideal(spec).unwrap(),
            MonomialOrder::GrevLex,
            Limits::default(),
        )
        .unwrap();
        let lt = leading_term_ideal(&gb);
        assert_eq!(lt.min_gens().len(), 3);
        assert!(lt.min_gens().iter().all(|m| m.deg() == 1));
    }

    #[test]
    fn leading_term_ideal_of_principal_case() {
        let spec = VandermondeSpec::new(3, 2).unwrap();
        let gb = buchberger(
            &vandermonde_ideal(spec).unwrap(),
            MonomialOrder::GrevLex,
            Limits::default(),
        )
        .unwrap();
        let lt = leading_term_ideal(&gb);
        assert_eq!(lt.min_gens().len(), 1);
        assert_eq!(lt.min_gens()[0].deg(), 3);
    }

    #[test]
    fn hilbert_function_matches_standard_monomial_count() {
        // brute-force oracle: count monomials of degree d outside the ideal
        fn standard_monomials(ideal: &MonomialIdeal, d: u32) -> u64 {
            fn rec(exps: &mut Vec<u32>, var: usize, rem: u32, ideal: &MonomialIdeal, acc: &mut u64) {
                if var + 1 == exps.capacity() {
                    exps.push(rem);
                    let m = Monomial::from_exps(exps.clone());
                    if !ideal.contains_monomial(&m) {
                        *acc += 1;
                    }
                    exps.pop();
                    return;
                }
                for e in 0..=rem {
                    exps.push(e);
                    rec(exps, var + 1, rem - e, ideal, acc);
                    exps.pop();
                }
            }
            let mut acc = 0;
            let mut exps = Vec::with_capacity(ideal.n_vars());
            rec(&mut exps, 0, d, ideal, &mut acc);
            acc
        }

        for (n, k) in [(3, 2), (4, 2), (4, 3), (5, 2)] {
            let spec = VandermondeSpec::new(n, k).unwrap();
            let gb = buchberger(
                &vandermonde_ideal(spec).unwrap(),
                MonomialOrder::GrevLex,
                Limits::default(),
            )
            .unwrap();
            let lt = leading_term_ideal(&gb);
            let h = hilbert_numerator(&lt);
            for d in 0..=8u32 {
                assert_eq!(
                    h.hilbert_function(d as usize),
                    BigInt::from(standard_monomials(&lt, d)),
                    "({n},{k}) degree {d}"
                );
            }
        }
    }

    #[test]
    fn dimension_and_degree_of_small_ideals() {
        // I_{6,2}: dim 2, degree 31; I_{n,1}: dim 1, degree 1; I_{4,3}: dim 3, degree 6
        let cases = [(6, 2, 2, 31u32), (4, 1, 1, 1), (4, 3, 3, 6), (5, 4, 4, 10)];
        for (n, k, dim, deg) in cases {
            let spec = VandermondeSpec::new(n, k).unwrap();
            let gb = buchberger(
                &vandermonde_ideal(spec).unwrap(),
                MonomialOrder::GrevLex,
                Limits::default(),
            )
            .unwrap();
            let h = hilbert_numerator(&leading_term_ideal(&gb));
            assert_eq!(h.dimension().unwrap(), dim, "dim ({n},{k})");
            assert_eq!(h.degree().unwrap(), Count::from(deg), "deg ({n},{k})");
        }
    }

    #[test]
    fn degree_is_order_independent() {
        let spec = VandermondeSpec::new(4, 2).unwrap();
        let i = vandermonde_ideal(spec).unwrap();
        let mut degrees = Vec::new();
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = buchberger(&i, order, Limits::default()).unwrap();
            let h = hilbert_numerator(&leading_term_ideal(&gb));
            degrees.push((h.dimension().unwrap(), h.degree().unwrap()));
        }
        assert_eq!(degrees[0], degrees[1]);
    }

    #[test]
    fn json_round_trip() {
        let h = series_of(vec![mono(vec![1, 0, 0]), mono(vec![0, 1, 0])], 3);
        let v = h.to_json().unwrap();
        assert_eq!(v["n_vars"], 3);
        assert_eq!(v["dim"], 1);
        assert_eq!(v["degree"], 1);
        let nums: Vec<i64> = v["numerator"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_i64().unwrap())
            .collect();
        assert_eq!(nums, vec![1, -2, 1]);
    }
}
