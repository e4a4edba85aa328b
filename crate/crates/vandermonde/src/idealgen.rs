//! Construction of the determinantal ideals and their companions: the power
//! matrix `M_{n,k}`, its reduced form `N_{n,k}`, maximal minors, the classical
//! Vandermonde product, hook-shape Specht generators, and the partition
//! primes `P_Π`.

use itertools::Itertools;
use serde_json::Value;

use crate::combinatorics::SetPartition;
use crate::poly::{MonomialOrder, PolyMatrix, Polynomial};
use crate::{Error, Result};

/// The parameter pair `(n, k)` with `n > k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VandermondeSpec {
    n: usize,
    k: usize,
}

impl VandermondeSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 1 || n <= k {
            return Err(Error::Domain(format!(
                "requires n > k >= 1, got n={n}, k={k}"
            )));
        }
        Ok(VandermondeSpec { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// An ideal presented by an ordered list of nonzero generators in a fixed
/// ambient variable count. Generator order is deterministic given the
/// construction parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    n_vars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(n_vars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::Structural("zero generator".into()));
            }
            if g.n_vars() != n_vars {
                return Err(Error::Structural("generator variable count mismatch".into()));
            }
        }
        Ok(Ideal { n_vars, generators })
    }

    pub fn zero(n_vars: usize) -> Self {
        Ideal { n_vars, generators: Vec::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// One generator per line, in the CLI text syntax.
    pub fn to_lines(&self) -> String {
        self.generators.iter().map(|g| g.to_string()).join("\n")
    }

    /// JSON array of generator strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.generators
                .iter()
                .map(|g| Value::String(g.to_string()))
                .collect(),
        )
    }
}

/// The `(k+1) × n` power matrix with entry `(r, c) = x_{c+1}^r`, `r = 0..k`.
pub fn vandermonde_matrix(spec: VandermondeSpec) -> PolyMatrix {
    let (n, k) = (spec.n, spec.k);
    let mut entries = Vec::with_capacity((k + 1) * n);
    for r in 0..=k as u32 {
        for c in 0..n {
            entries.push(Polynomial::monomial(
                n,
                num::BigRational::from(num::BigInt::from(1)),
                crate::poly::Monomial::var_pow(n, c, r),
            ));
        }
    }
    PolyMatrix::new(k + 1, n, entries).expect("dimensions are consistent")
}

/// The `k × (n−1)` reduced matrix with entry `(r, c) = x_{c+2}^r − x_1^r`
/// for `r = 1..k`, obtained from the power matrix by column operations.
pub fn reduced_matrix(spec: VandermondeSpec) -> PolyMatrix {
    let (n, k) = (spec.n, spec.k);
    let mut entries = Vec::with_capacity(k * (n - 1));
    for r in 1..=k as u32 {
        for c in 1..n {
            let pow_c = Polynomial::monomial(
                n,
                num::BigRational::from(num::BigInt::from(1)),
                crate::poly::Monomial::var_pow(n, c, r),
            );
            let pow_1 = Polynomial::monomial(
                n,
                num::BigRational::from(num::BigInt::from(1)),
                crate::poly::Monomial::var_pow(n, 0, r),
            );
            entries.push(pow_c.sub(&pow_1).expect("same ring"));
        }
    }
    PolyMatrix::new(k, n - 1, entries).expect("dimensions are consistent")
}

/// Determinants of all maximal square submatrices of a wide matrix, column
/// subsets in lexicographic order, normalized monic under grevlex. Zero
/// minors are dropped.
pub fn maximal_minors(m: &PolyMatrix) -> Result<Vec<Polynomial>> {
    if m.rows() > m.cols() {
        return Err(Error::Domain(format!(
            "maximal minors need rows <= cols, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mut out = Vec::new();
    for cols in (0..m.cols()).combinations(m.rows()) {
        let det = m.column_submatrix(&cols)?.determinant()?;
        if !det.is_zero() {
            out.push(det.make_monic(MonomialOrder::GrevLex)?);
        }
    }
    Ok(out)
}

/// The classical product `Π_{i<j ∈ cols} (x_j − x_i)`, fully expanded.
/// `cols` is 1-based and must have at least two elements.
pub fn vandermonde_product(n: usize, cols: &[usize]) -> Result<Polynomial> {
    if cols.len() < 2 {
        return Err(Error::Domain("need at least two columns".into()));
    }
    let mut cols = cols.to_vec();
    cols.sort_unstable();
    cols.dedup();
    if cols.first() < Some(&1) || cols.last() > Some(&n) {
        return Err(Error::Domain(format!("columns must lie in 1..={n}")));
    }
    let mut acc = Polynomial::one(n);
    for (a, b) in cols.iter().tuple_combinations() {
        let diff = Polynomial::variable(n, b - 1)
            .sub(&Polynomial::variable(n, a - 1))
            .expect("same ring");
        acc = acc.mul(&diff)?;
    }
    Ok(acc)
}

/// The determinantal ideal generated by the maximal minors of the reduced
/// matrix `N_{n,k}`: `C(n-1, k)` generators of degree `k(k+1)/2`.
pub fn vandermonde_ideal(spec: VandermondeSpec) -> Result<Ideal> {
    let gens = maximal_minors(&reduced_matrix(spec))?;
    Ideal::new(spec.n, gens)
}

/// Same ideal presented by the maximal minors of the full power matrix
/// `M_{n,k}`: `C(n, k+1)` generators.
pub fn vandermonde_ideal_full(spec: VandermondeSpec) -> Result<Ideal> {
    let gens = maximal_minors(&vandermonde_matrix(spec))?;
    Ideal::new(spec.n, gens)
}

/// Hook-shape Specht generators: the Vandermonde products over all
/// `(k+1)`-subsets of the columns, monic, subsets in lexicographic order.
/// Generates the same ideal as the maximal minors of `M_{n,k}`.
pub fn specht_generators_hook(spec: VandermondeSpec) -> Result<Ideal> {
    let (n, k) = (spec.n, spec.k);
    let mut gens = Vec::new();
    for cols in (1..=n).combinations(k + 1) {
        gens.push(vandermonde_product(n, &cols)?.make_monic(MonomialOrder::GrevLex)?);
    }
    Ideal::new(n, gens)
}

/// The prime of coordinate coincidences along a set partition: for each block
/// with minimum `m`, the differences `x_i − x_m` for the other members.
/// Generators are normalized monic under grevlex.
pub fn partition_prime(p: &SetPartition) -> Ideal {
    let n = p.n();
    let mut gens = Vec::new();
    for block in p.blocks() {
        let rep = block[0] - 1;
        for &i in &block[1..] {
            let diff = Polynomial::variable(n, i - 1)
                .sub(&Polynomial::variable(n, rep))
                .expect("same ring")
                .make_monic(MonomialOrder::GrevLex)
                .expect("nonzero");
            gens.push(diff);
        }
    }
    Ideal::new(n, gens).expect("generators are nonzero")
}
