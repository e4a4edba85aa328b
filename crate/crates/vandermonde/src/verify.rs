//! End-to-end machine checks wiring the other modules into verifiable
//! statements: dimension and degree, the degree recurrence, radicality via
//! the partition-prime intersection, the fast reducedness certificate, and
//! the rank-locus vanishing behavior at rational points.

use std::time::Instant;

use num::{BigInt, BigRational, BigUint, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::{enumerate_partitions, stirling2, Count};
use crate::groebner::{buchberger, ideal_equal, intersect_many, Limits};
use crate::hilbert::{hilbert_numerator, leading_term_ideal, HilbertSeries};
use crate::idealgen::{
    partition_prime, specht_generators_hook, vandermonde_ideal, VandermondeSpec,
};
use crate::poly::MonomialOrder;
use crate::{Error, Result};

/// Outcome of one verification, serializable as a JSON line.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub n: usize,
    pub k: usize,
    pub passed: bool,
    pub witness: String,
    pub ms: u128,
}

impl VerificationReport {
    fn finish(claim: &str, spec: VandermondeSpec, passed: bool, witness: String, t0: Instant) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            n: spec.n(),
            k: spec.k(),
            passed,
            witness,
            ms: t0.elapsed().as_millis(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Hilbert series of `R/I_{n,k}` via the Gröbner route.
pub fn hilbert_series_of(spec: VandermondeSpec, limits: Limits) -> Result<HilbertSeries> {
    let ideal = vandermonde_ideal(spec)?;
    let gb = buchberger(&ideal, MonomialOrder::GrevLex, limits)?;
    Ok(hilbert_numerator(&leading_term_ideal(&gb)))
}

fn hilbert_degree(spec: VandermondeSpec, limits: Limits) -> Result<Count> {
    hilbert_series_of(spec, limits)?.degree()
}

/// Checks `dim R/I = k` and `deg R/I = S(n,k)` via Gröbner basis, leading-term
/// ideal, and Hilbert series.
pub fn verify_dimension_degree(spec: VandermondeSpec, limits: Limits) -> Result<VerificationReport> {
    let t0 = Instant::now();
    let h = hilbert_series_of(spec, limits)?;
    let dim = h.dimension()?;
    let deg = h.degree()?;
    let expected = stirling2(spec.n(), spec.k())?;
    let passed = dim == spec.k() && deg == expected;
    let witness = format!(
        "dim={dim} expected={}; deg={deg} expected=S({},{})={expected}",
        spec.k(),
        spec.n(),
        spec.k()
    );
    Ok(VerificationReport::finish("dim-deg", spec, passed, witness, t0))
}

/// Checks the degree recurrence `deg(n,k) = deg(n−1,k−1) + k·deg(n−1,k)` with
/// all three degrees computed by the Hilbert route.
pub fn verify_degree_recursion(n: usize, k: usize, limits: Limits) -> Result<VerificationReport> {
    if k < 2 || n <= k + 1 {
        return Err(Error::Domain(format!(
            "degree recurrence needs n - 1 > k >= 2, got n={n}, k={k}"
        )));
    }
    let t0 = Instant::now();
    let spec = VandermondeSpec::new(n, k)?;
    let deg = hilbert_degree(spec, limits)?;
    let left = hilbert_degree(VandermondeSpec::new(n - 1, k - 1)?, limits)?;
    let right = hilbert_degree(VandermondeSpec::new(n - 1, k)?, limits)?;
    let rhs = &left + BigUint::from(k as u64) * &right;
    let passed = deg == rhs;
    let witness = format!("{deg} = {left} + {k}*{right}");
    Ok(VerificationReport::finish("degree-recursion", spec, passed, witness, t0))
}

/// Gold-tier radicality: builds `⋂_Π P_Π` over all k-block partitions by
/// iterated elimination and compares with `I_{n,k}` as reduced Gröbner bases.
/// Guarded to small instances (`S(n,k) ≤ 60`).
pub fn verify_radical(spec: VandermondeSpec, limits: Limits) -> Result<VerificationReport> {
    let (n, k) = (spec.n(), spec.k());
    let count = stirling2(n, k)?;
    if count > Count::from(60u32) {
        return Err(Error::Resource(format!(
            "radical intersection guarded to S(n,k) <= 60, S({n},{k}) = {count}"
        )));
    }
    let t0 = Instant::now();
    let primes: Vec<_> = enumerate_partitions(n, k)?
        .iter()
        .map(partition_prime)
        .collect();
    let meet = intersect_many(primes.iter(), n, limits)?;
    let ideal = vandermonde_ideal(spec)?;
    let passed = ideal_equal(&ideal, &meet, MonomialOrder::GrevLex, limits)?;
    let witness = format!(
        "I = intersection of {count} partition primes: {}",
        if passed { "equal" } else { "NOT equal" }
    );
    Ok(VerificationReport::finish("radical", spec, passed, witness, t0))
}

/// Silver-tier reducedness certificate: (a) every generator vanishes under
/// every k-block representative substitution, and (b) the Hilbert degree
/// equals `S(n,k)`.
pub fn verify_containment_fast(spec: VandermondeSpec, limits: Limits) -> Result<VerificationReport> {
    let (n, k) = (spec.n(), spec.k());
    let t0 = Instant::now();
    let ideal = vandermonde_ideal(spec)?;

    let mut substitutions_ok = true;
    'outer: for part in enumerate_partitions(n, k)? {
        // substitute each variable by its block representative
        let mut map = vec![0usize; n];
        for block in part.blocks() {
            let rep = block[0] - 1;
            for &i in block {
                map[i - 1] = rep;
            }
        }
        for g in ideal.generators() {
            if !g.substitute_vars(&map)?.is_zero() {
                substitutions_ok = false;
                break 'outer;
            }
        }
    }

    let deg = hilbert_degree(spec, limits)?;
    let expected = stirling2(n, k)?;
    let degrees_match = deg == expected;
    let passed = substitutions_ok && degrees_match;
    let witness = format!(
        "all generators vanish on every {k}-block substitution: {substitutions_ok}; deg={deg} = S({n},{k})={expected}: {degrees_match}"
    );
    Ok(VerificationReport::finish("containment", spec, passed, witness, t0))
}

/// Rank-locus sampling: at points with ≤ k distinct coordinates every
/// generator vanishes; at points with ≥ k+1 distinct coordinates some
/// generator does not. Deterministic given the seed.
pub fn verify_rank_locus(
    spec: VandermondeSpec,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let (n, k) = (spec.n(), spec.k());
    let t0 = Instant::now();
    let ideal = specht_generators_hook(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passed = true;
    let mut witness = String::new();

    for trial in 0..trials {
        // low-rank point: at most k distinct coordinate values
        let distinct = rng.gen_range(1..=k);
        let values: Vec<BigRational> = (0..distinct)
            .map(|_| BigRational::from(BigInt::from(rng.gen_range(-3i64..=3))))
            .collect();
        let point: Vec<BigRational> = (0..n)
            .map(|_| values[rng.gen_range(0..distinct)].clone())
            .collect();
        let all_vanish = ideal
            .generators()
            .iter()
            .all(|g| g.evaluate(&point).map(|v| v.is_zero()).unwrap_or(false));
        if !all_vanish {
            passed = false;
            witness = format!("trial {trial}: generator nonzero at a {distinct}-value point");
            break;
        }

        // full-rank point: k+1 distinct values guaranteed to appear
        let mut values: Vec<i64> = Vec::new();
        let mut v = rng.gen_range(-3i64..=3);
        while values.len() < k + 1 {
            if !values.contains(&v) {
                values.push(v);
            }
            v += 1;
        }
        let point: Vec<BigRational> = (0..n)
            .map(|i| {
                let pick = if i <= k { values[i] } else { values[rng.gen_range(0..values.len())] };
                BigRational::from(BigInt::from(pick))
            })
            .collect();
        let some_nonzero = ideal
            .generators()
            .iter()
            .any(|g| g.evaluate(&point).map(|v| !v.is_zero()).unwrap_or(false));
        if !some_nonzero {
            passed = false;
            witness = format!("trial {trial}: all generators vanish at a {}-value point", k + 1);
            break;
        }
    }
    if passed {
        witness = format!("{trials} trials: low-rank points vanish, full-rank points do not");
    }
    Ok(VerificationReport::finish("rank-locus", spec, passed, witness, t0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, k: usize) -> VandermondeSpec {
        VandermondeSpec::new(n, k).unwrap()
    }

    #[test]
    fn dimension_degree_small() {
        let r = verify_dimension_degree(spec(4, 2), Limits::default()).unwrap();
        assert!(r.passed, "{}", r.witness);
        assert!(r.witness.contains("deg=7"));

        let r = verify_dimension_degree(spec(5, 4), Limits::default()).unwrap();
        assert!(r.passed, "{}", r.witness);
        assert!(r.witness.contains("deg=10"));
    }

    #[test]
    fn degree_recursion_small() {
        let r = verify_degree_recursion(5, 2, Limits::default()).unwrap();
        assert!(r.passed, "{}", r.witness);
        assert_eq!(r.witness, "15 = 1 + 2*7");

        let r = verify_degree_recursion(5, 3, Limits::default()).unwrap();
        assert!(r.passed, "{}", r.witness);
        assert_eq!(r.witness, "25 = 7 + 3*6");

        assert!(verify_degree_recursion(4, 3, Limits::default()).is_err());
    }

    #[test]
    fn radical_small() {
        for (n, k) in [(3, 2), (4, 3)] {
            let r = verify_radical(spec(n, k), Limits::default()).unwrap();
            assert!(r.passed, "({n},{k}): {}", r.witness);
        }
    }

    #[test]
    fn radical_guard() {
        // S(8,2) = 127 > 60
        let err = verify_radical(spec(8, 2), Limits::default());
        assert!(matches!(err, Err(Error::Resource(_))));
    }

    #[test]
    fn containment_fast_small() {
        for (n, k) in [(4, 2), (5, 3)] {
            let r = verify_containment_fast(spec(n, k), Limits::default()).unwrap();
            assert!(r.passed, "({n},{k}): {}", r.witness);
        }
    }

    #[test]
    fn containment_negative_control() {
        // perturbing a generator by +1 must break the substitution check:
        // the constant 1 survives every variable renaming
        use crate::poly::Polynomial;
        let ideal = vandermonde_ideal(spec(4, 2)).unwrap();
        let perturbed = ideal.generators()[0]
            .add(&Polynomial::one(4))
            .unwrap();
        let part = &enumerate_partitions(4, 2).unwrap()[0];
        let mut map = vec![0usize; 4];
        for block in part.blocks() {
            for &i in block {
                map[i - 1] = block[0] - 1;
            }
        }
        assert!(!perturbed.substitute_vars(&map).unwrap().is_zero());
    }

    #[test]
    fn rank_locus_small() {
        for (n, k) in [(4, 2), (5, 3), (4, 3)] {
            let r = verify_rank_locus(spec(n, k), 8, 42).unwrap();
            assert!(r.passed, "({n},{k}): {}", r.witness);
        }
    }

    #[test]
    fn rank_locus_deterministic() {
        let a = verify_rank_locus(spec(4, 2), 5, 7).unwrap();
        let b = verify_rank_locus(spec(4, 2), 5, 7).unwrap();
        assert_eq!(a.passed, b.passed);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn report_serializes_to_json_line() {
        let r = verify_dimension_degree(spec(3, 2), Limits::default()).unwrap();
        let line = r.to_json_line();
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["claim"], "dim-deg");
        assert_eq!(v["n"], 3);
        assert_eq!(v["passed"], true);
    }
}
