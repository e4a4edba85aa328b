//! Exact integer combinatorics: Stirling numbers of the second kind, binomial
//! coefficients, weighted-composition counts, and set-partition enumeration.

use num::{BigUint, One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision nonnegative count.
pub type Count = BigUint;

/// A partition of `{1, …, n}` into nonempty blocks, stored in canonical form:
/// each block sorted ascending, blocks ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from a restricted growth string `rgs`, where
    /// `rgs[i]` is the (0-based) block index of element `i + 1`.
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        if rgs.is_empty() {
            return Err(Error::Domain("empty restricted growth string".into()));
        }
        let mut max_seen = 0usize;
        for (i, &b) in rgs.iter().enumerate() {
            let bound = if i == 0 { 0 } else { max_seen + 1 };
            if b > bound {
                return Err(Error::Structural(format!(
                    "not a restricted growth string: position {i} has block {b}"
                )));
            }
            max_seen = max_seen.max(b);
        }
        let mut blocks = vec![Vec::new(); max_seen + 1];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        Ok(SetPartition { n: rgs.len(), blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (i, e) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::Domain(format!(
            "stirling domain requires 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// Stirling number of the second kind `S(n, k)`: the number of partitions of
/// `{1, …, n}` into `k` nonempty blocks. Computed by the recurrence
/// `S(n,k) = S(n-1,k-1) + k·S(n-1,k)`.
pub fn stirling2(n: usize, k: usize) -> Result<Count> {
    check_nk(n, k)?;
    // row-by-row DP; after processing m, row[j] = S(m, j)
    let mut row: Vec<Count> = vec![Count::zero(); k + 1];
    row[1] = Count::one();
    for _m in 2..=n {
        for j in (1..=k).rev() {
            let carried = Count::from(j as u64) * &row[j];
            row[j] = carried + &row[j - 1];
        }
    }
    Ok(row[k].clone())
}

/// Binomial coefficient `C(m, r)`, with the convention that out-of-range `r`
/// (negative or above `m`) yields 0.
pub fn binomial(m: usize, r: i64) -> Count {
    if r < 0 || r as usize > m {
        return Count::zero();
    }
    let r = (r as usize).min(m - r as usize);
    let mut acc = Count::one();
    for t in 0..r {
        acc = acc * Count::from((m - t) as u64) / Count::from((t + 1) as u64);
    }
    acc
}

/// Counts tuples `(a_1, …, a_m)` of nonnegative integers with
/// `a_1 + ⋯ + a_m = i` and `a_1 + 2·a_2 + ⋯ + m·a_m = j`.
///
/// For `i = 0` this is the Kronecker delta `δ_{0,j}`. Nonzero exactly when
/// `i ≤ j ≤ i·m` (for `i ≥ 1`).
pub fn p_count(m: usize, i: usize, j: usize) -> Count {
    assert!(m >= 1, "p_count requires m >= 1");
    // dp[s][w] = tuples over the variables considered so far with sum s, weight w
    let mut dp = vec![vec![Count::zero(); j + 1]; i + 1];
    dp[0][0] = Count::one();
    for t in 1..=m {
        let mut next = vec![vec![Count::zero(); j + 1]; i + 1];
        for s in 0..=i {
            for w in 0..=j {
                if dp[s][w].is_zero() {
                    continue;
                }
                let mut a = 0usize;
                while s + a <= i && w + t * a <= j {
                    let v = dp[s][w].clone();
                    next[s + a][w + t * a] += v;
                    a += 1;
                }
            }
        }
        dp = next;
    }
    dp[i][j].clone()
}

/// Enumerates all partitions of `{1, …, n}` into exactly `k` nonempty blocks,
/// in restricted-growth-string lexicographic order.
pub fn enumerate_partitions(n: usize, k: usize) -> Result<Vec<SetPartition>> {
    check_nk(n, k)?;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(
        rgs: &mut Vec<usize>,
        pos: usize,
        max_seen: usize,
        n: usize,
        k: usize,
        out: &mut Vec<SetPartition>,
    ) {
        if pos == n {
            if max_seen + 1 == k {
                out.push(SetPartition::from_rgs(rgs).expect("rgs is valid by construction"));
            }
            return;
        }
        // blocks used so far plus remaining positions must be able to reach k
        let upper = (max_seen + 1).min(k - 1);
        for b in 0..=upper {
            let new_max = max_seen.max(b);
            // even opening a new block at every remaining step must reach k blocks
            if new_max + 1 + (n - pos - 1) < k {
                continue;
            }
            rgs[pos] = b;
            rec(rgs, pos + 1, new_max, n, k, out);
        }
    }
    // element 1 is always in block 0
    rec(&mut rgs, 1, 0, n, k, &mut out);
    Ok(out)
}
