use super::Polynomial;
use crate::{Error, Result};

/// A dense matrix of polynomials over a common ambient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    n_vars: usize,
    entries: Vec<Polynomial>,
}

/// Cofactor expansion stays cheap up to this size; above it the
/// fraction-free (Bareiss) elimination avoids intermediate blowup.
const COFACTOR_LIMIT: usize = 4;

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Structural("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Structural(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let n_vars = entries[0].n_vars();
        if entries.iter().any(|p| p.n_vars() != n_vars) {
            return Err(Error::Structural("entries disagree on variable count".into()));
        }
        Ok(PolyMatrix { rows, cols, n_vars, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// The submatrix on the given column indices (all rows).
    pub fn column_submatrix(&self, cols: &[usize]) -> Result<PolyMatrix> {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                if c >= self.cols {
                    return Err(Error::Structural(format!("column {c} out of range")));
                }
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix::new(self.rows, cols.len(), entries)
    }

    /// Exact determinant: cofactor expansion for small matrices,
    /// fraction-free Bareiss elimination beyond.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Structural(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows <= COFACTOR_LIMIT {
            let grid: Vec<Vec<Polynomial>> = (0..self.rows)
                .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
                .collect();
            cofactor_det(&grid, self.n_vars)
        } else {
            self.bareiss_det()
        }
    }

    fn bareiss_det(&self) -> Result<Polynomial> {
        let n = self.rows;
        let mut m: Vec<Vec<Polynomial>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev_pivot = Polynomial::one(self.n_vars);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Ok(Polynomial::zero(self.n_vars));
                };
                m.swap(k, swap);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = m[i][j].mul(&m[k][k])?;
                    let b = m[i][k].mul(&m[k][j])?;
                    m[i][j] = a.sub(&b)?.div_exact(&prev_pivot)?;
                }
                m[i][k] = Polynomial::zero(self.n_vars);
            }
            prev_pivot = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign_flip { det.neg() } else { det })
    }
}

fn cofactor_det(m: &[Vec<Polynomial>], n_vars: usize) -> Result<Polynomial> {
    let n = m.len();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = Polynomial::zero(n_vars);
    for (c, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sub = cofactor_det(&minor, n_vars)?;
        let term = pivot.mul(&sub)?;
        acc = if c % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}
