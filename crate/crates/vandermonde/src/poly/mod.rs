//! Sparse exact multivariate polynomial arithmetic over ℚ with pluggable
//! monomial orders, point evaluation, variable substitution, and
//! polynomial-matrix determinants.

mod matrix;
mod monomial;
mod order;
mod parse;

pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use order::MonomialOrder;

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// A sparse multivariate polynomial over ℚ. Terms are kept sorted strictly
/// descending under grevlex (the canonical storage order); no zero
/// coefficients, no duplicate monomials. The zero polynomial is the empty
/// term list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n_vars: usize,
    terms: Vec<(Coeff, Monomial)>,
}

const STORAGE_ORDER: MonomialOrder = MonomialOrder::GrevLex;

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial { n_vars, terms: Vec::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, Coeff::one())
    }

    pub fn constant(n_vars: usize, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(n_vars);
        }
        Polynomial { n_vars, terms: vec![(c, Monomial::one(n_vars))] }
    }

    /// The variable `x_{idx+1}` (0-based index).
    pub fn variable(n_vars: usize, idx: usize) -> Self {
        assert!(idx < n_vars);
        Polynomial {
            n_vars,
            terms: vec![(Coeff::one(), Monomial::var_pow(n_vars, idx, 1))],
        }
    }

    pub fn monomial(n_vars: usize, c: Coeff, m: Monomial) -> Self {
        debug_assert_eq!(m.n_vars(), n_vars);
        if c.is_zero() {
            return Self::zero(n_vars);
        }
        Polynomial { n_vars, terms: vec![(c, m)] }
    }

    /// Builds a polynomial from arbitrary terms: combines duplicates, drops
    /// zeros, sorts into canonical order.
    pub fn from_terms(n_vars: usize, terms: Vec<(Coeff, Monomial)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.1, &a.1));
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            debug_assert_eq!(m.n_vars(), n_vars);
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial { n_vars, terms: out }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (grevlex-descending) order.
    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.deg()).max()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::Structural(format!(
                "variable count mismatch: {} vs {}",
                self.n_vars, other.n_vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match STORAGE_ORDER.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial { n_vars: self.n_vars, terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(tc, m)| (tc * c, m.clone())).collect(),
        }
    }

    /// Multiplies by the single term `c·m`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        // multiplying every monomial by a fixed one preserves the sort order
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (tc * c, tm.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.n_vars));
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(self.n_vars);
        for (c, m) in &small.terms {
            acc = acc.add(&large.mul_term(c, m))?;
        }
        Ok(acc)
    }

    /// The maximal term under `order`. Errors on the zero polynomial.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(&Coeff, &Monomial)> {
        if self.is_zero() {
            return Err(Error::Domain("leading term of the zero polynomial".into()));
        }
        if order == STORAGE_ORDER {
            let (c, m) = &self.terms[0];
            return Ok((c, m));
        }
        Ok(self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(&a.1, &b.1))
            .map(|(c, m)| (c, m))
            .expect("nonzero polynomial has a maximal term"))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(order)?.1.clone())
    }

    /// Divides through by the leading coefficient under `order`.
    pub fn make_monic(&self, order: MonomialOrder) -> Result<Polynomial> {
        let (lc, _) = self.leading_term(order)?;
        let inv = lc.recip();
        Ok(self.scale(&inv))
    }

    /// Clears denominators and divides by the integer content; the sign is
    /// fixed so the leading coefficient under `order` is positive.
    pub fn make_primitive(&self, order: MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for (c, _) in &self.terms {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut content = BigInt::zero();
        for (c, _) in &self.terms {
            let int_coeff = c.numer() * (&denom_lcm / c.denom());
            content = num::integer::gcd(content, int_coeff);
        }
        debug_assert!(!content.is_zero());
        let factor = Coeff::new(denom_lcm, content);
        let scaled = self.scale(&factor);
        let (lc, _) = scaled.leading_term(order).expect("nonzero");
        if lc.is_negative() {
            scaled.neg()
        } else {
            scaled
        }
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.n_vars {
            return Err(Error::Structural(format!(
                "evaluation point has {} coordinates, expected {}",
                point.len(),
                self.n_vars
            )));
        }
        let mut total = Coeff::zero();
        for (c, m) in &self.terms {
            let mut v = c.clone();
            for (idx, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v *= num::pow::pow(point[idx].clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Renames variables: variable `i` becomes variable `map[i]` (0-based).
    /// Terms that collide are combined, so cancellation can occur.
    pub fn substitute_vars(&self, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.n_vars {
            return Err(Error::Structural(format!(
                "substitution map has {} entries, expected {}",
                map.len(),
                self.n_vars
            )));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= self.n_vars) {
            return Err(Error::Structural(format!("substitution target {bad} out of range")));
        }
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut exps = vec![0u32; self.n_vars];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[map[i]] += e;
                }
                (c.clone(), Monomial::from_exps(exps))
            })
            .collect();
        Ok(Polynomial::from_terms(self.n_vars, terms))
    }

    /// Re-embeds into a ring with one extra variable placed first
    /// (used as the elimination variable).
    pub fn with_prefix_var(&self) -> Polynomial {
        Polynomial {
            n_vars: self.n_vars + 1,
            terms: self
                .terms
                .iter()
                .map(|(c, m)| {
                    let mut exps = Vec::with_capacity(self.n_vars + 1);
                    exps.push(0);
                    exps.extend_from_slice(m.exps());
                    (c.clone(), Monomial::from_exps(exps))
                })
                .collect(),
        }
    }

    /// Drops the first variable; errors if it occurs anywhere.
    pub fn drop_prefix_var(&self) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            if m.exps()[0] != 0 {
                return Err(Error::Structural(
                    "polynomial still involves the elimination variable".into(),
                ));
            }
            terms.push((c.clone(), Monomial::from_exps(m.exps()[1..].to_vec())));
        }
        // dropping a variable that occurs nowhere preserves grevlex order
        Ok(Polynomial { n_vars: self.n_vars - 1, terms })
    }

    /// True when the first variable occurs in some term.
    pub fn involves_prefix_var(&self) -> bool {
        self.terms.iter().any(|(_, m)| m.exps()[0] != 0)
    }

    /// Exact division: returns `self / divisor`, erroring if the division
    /// leaves a remainder. Used by the fraction-free determinant.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Structural("division by the zero polynomial".into()));
        }
        let (dc, dm) = divisor.leading_term(STORAGE_ORDER)?;
        let (dc, dm) = (dc.clone(), dm.clone());
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        while !rem.is_zero() {
            let (rc, rm) = rem.leading_term(STORAGE_ORDER)?;
            let q_m = rm.try_div(&dm).ok_or_else(|| {
                Error::Structural("non-exact polynomial division".into())
            })?;
            let q_c = rc / &dc;
            rem = rem.sub(&divisor.mul_term(&q_c, &q_m))?;
            quot_terms.push((q_c, q_m));
        }
        Ok(Polynomial::from_terms(self.n_vars, quot_terms))
    }

    /// Parses the CLI text syntax, e.g. `-3/2*x1^2*x3 + x2`.
    pub fn parse(input: &str, n_vars: usize) -> Result<Polynomial> {
        parse::parse_polynomial(input, n_vars)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
