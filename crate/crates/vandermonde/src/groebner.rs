//! Buchberger's algorithm with reduced Gröbner bases, ideal membership and
//! equality, and pairwise/iterated ideal intersection by elimination.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num::One;

use crate::idealgen::Ideal;
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};
use crate::{Error, Result};

/// Resource guard for the Buchberger loop. Exceeding the budget is a
/// reported failure, never a wrong answer.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum number of S-pair reductions per `buchberger` call.
    pub max_reductions: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_reductions: 1_000_000 }
    }
}

/// A reduced Gröbner basis: monic, interreduced, sorted by ascending leading
/// monomial. This is a canonical form of the ideal under the given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    n_vars: usize,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("basis elements are nonzero"))
            .collect()
    }
}

/// Multivariate division: the remainder of `f` on division by `basis`.
/// Deterministic: always reduces the maximal reducible term by the first
/// eligible divisor in basis order. No term of the result is divisible by
/// any basis leading monomial.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let leads: Vec<(Coeff, Monomial)> = basis
        .iter()
        .map(|g| {
            let (c, m) = g.leading_term(order).expect("basis elements are nonzero");
            (c.clone(), m.clone())
        })
        .collect();
    normal_form_with(f, basis, &leads, order)
}

fn normal_form_with(
    f: &Polynomial,
    basis: &[Polynomial],
    leads: &[(Coeff, Monomial)],
    order: MonomialOrder,
) -> Polynomial {
    let mut work = f.clone();
    let mut remainder_terms: Vec<(Coeff, Monomial)> = Vec::new();
    'outer: while !work.is_zero() {
        let (wc, wm) = {
            let (c, m) = work.leading_term(order).expect("nonzero");
            (c.clone(), m.clone())
        };
        for (g, (gc, gm)) in basis.iter().zip(leads) {
            if gm.divides(&wm) {
                let q_m = wm.try_div(gm).expect("divisibility checked");
                let q_c = &wc / gc;
                work = work.sub(&g.mul_term(&q_c, &q_m)).expect("same ring");
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the remainder
        remainder_terms.push((wc.clone(), wm.clone()));
        work = work.sub(&Polynomial::monomial(work.n_vars(), wc, wm)).expect("same ring");
    }
    Polynomial::from_terms(f.n_vars(), remainder_terms)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    let (fc, fm) = f.leading_term(order)?;
    let (gc, gm) = g.leading_term(order)?;
    let lcm = fm.lcm(gm);
    let uf = lcm.try_div(fm).expect("lcm is divisible");
    let ug = lcm.try_div(gm).expect("lcm is divisible");
    let left = f.mul_term(&(Coeff::one() / fc), &uf);
    let right = g.mul_term(&(Coeff::one() / gc), &ug);
    left.sub(&right)
}

/// Pair queue key: normal selection strategy — minimal lcm total degree
/// first, ties broken by the lcm exponent vector, then by indices.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    deg: u32,
    lcm_exps: Vec<u32>,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.lcm_exps.cmp(&other.lcm_exps))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Computes the reduced Gröbner basis of `ideal` under `order`.
/// The zero ideal yields the empty basis.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder, limits: Limits) -> Result<GroebnerBasis> {
    let n_vars = ideal.n_vars();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        if !g.is_zero() {
            basis.push(g.make_primitive(order));
        }
    }
    basis.sort_by(|a, b| {
        let ma = a.leading_monomial(order).expect("nonzero");
        let mb = b.leading_monomial(order).expect("nonzero");
        order.cmp(&ma, &mb)
    });
    basis.dedup();

    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).expect("nonzero"))
        .collect();

    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    // pairs considered done: either processed or discarded by a criterion
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in 0..i {
            let lcm = lms[i].lcm(&lms[j]);
            queue.insert(Pair { deg: lcm.deg(), lcm_exps: lcm.exps().to_vec(), i: j, j: i });
        }
    }

    let mut reductions: u64 = 0;

    while let Some(pair) = queue.pop_first() {
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));

        let lcm = lms[i].lcm(&lms[j]);
        // first Buchberger criterion: coprime leading monomials
        if lms[i].coprime(&lms[j]) {
            continue;
        }
        // chain criterion: some h with LM(h) | lcm and both (i,h), (j,h) done
        let chained = (0..basis.len()).any(|h| {
            h != i
                && h != j
                && lms[h].divides(&lcm)
                && done.contains(&key(i, h))
                && done.contains(&key(j, h))
        });
        if chained {
            continue;
        }

        if reductions >= limits.max_reductions {
            return Err(Error::Resource(format!(
                "pair-reduction budget of {} exhausted ({} pairs left)",
                limits.max_reductions,
                queue.len() + 1
            )));
        }
        reductions += 1;

        let spoly = s_polynomial(&basis[i], &basis[j], order)?;
        let leads: Vec<(Coeff, Monomial)> = basis
            .iter()
            .zip(&lms)
            .map(|(g, m)| (g.leading_term(order).expect("nonzero").0.clone(), m.clone()))
            .collect();
        let reduced = normal_form_with(&spoly, &basis, &leads, order);
        if reduced.is_zero() {
            continue;
        }
        let reduced = reduced.make_primitive(order);
        let new_idx = basis.len();
        let new_lm = reduced.leading_monomial(order)?;
        for t in 0..new_idx {
            let lcm = lms[t].lcm(&new_lm);
            queue.insert(Pair {
                deg: lcm.deg(),
                lcm_exps: lcm.exps().to_vec(),
                i: t,
                j: new_idx,
            });
        }
        basis.push(reduced);
        lms.push(new_lm);
    }

    Ok(reduce_basis(basis, n_vars, order))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimizes and interreduces a Gröbner basis into the canonical reduced form.
fn reduce_basis(mut basis: Vec<Polynomial>, n_vars: usize, order: MonomialOrder) -> GroebnerBasis {
    // minimize: drop elements whose leading monomial is divisible by another's
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).expect("nonzero"))
        .collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && lms[j].divides(&lms[i])
                    && (lms[j] != lms[i] || j < i)
            })
        })
        .collect();
    let mut minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // interreduce: fully reduce each element against the others
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            let r = normal_form(&minimal[i], &others, order);
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        minimal.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }

    let mut reduced: Vec<Polynomial> = minimal
        .into_iter()
        .map(|g| g.make_monic(order).expect("nonzero"))
        .collect();
    reduced.sort_by(|a, b| {
        let ma = a.leading_monomial(order).expect("nonzero");
        let mb = b.leading_monomial(order).expect("nonzero");
        order.cmp(&ma, &mb)
    });
    GroebnerBasis { order, n_vars, basis: reduced }
}

/// True iff `f` lies in the ideal.
pub fn ideal_membership(
    f: &Polynomial,
    ideal: &Ideal,
    order: MonomialOrder,
    limits: Limits,
) -> Result<bool> {
    if f.n_vars() != ideal.n_vars() {
        return Err(Error::Structural("variable count mismatch".into()));
    }
    let gb = buchberger(ideal, order, limits)?;
    Ok(normal_form(f, gb.basis(), order).is_zero())
}

/// True iff the two ideals coincide, by comparing reduced Gröbner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal, order: MonomialOrder, limits: Limits) -> Result<bool> {
    if a.n_vars() != b.n_vars() {
        return Err(Error::Structural("variable count mismatch".into()));
    }
    let ga = buchberger(a, order, limits)?;
    let gb = buchberger(b, order, limits)?;
    Ok(ga == gb)
}

/// Generators of `a ∩ b`, computed by the elimination construction: adjoin an
/// auxiliary variable `t` placed first, form `t·a + (1−t)·b`, take a Gröbner
/// basis under the block order eliminating `t`, and keep the `t`-free part.
pub fn intersect(a: &Ideal, b: &Ideal, limits: Limits) -> Result<Ideal> {
    if a.n_vars() != b.n_vars() {
        return Err(Error::Structural("variable count mismatch".into()));
    }
    let n = a.n_vars();
    let ext = n + 1;
    let t = Polynomial::variable(ext, 0);
    let one_minus_t = Polynomial::one(ext).sub(&t)?;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(t.mul(&g.with_prefix_var())?);
    }
    for g in b.generators() {
        gens.push(one_minus_t.mul(&g.with_prefix_var())?);
    }
    let extended = Ideal::new(ext, gens)?;
    let gb = buchberger(&extended, MonomialOrder::Block { head: 1 }, limits)?;
    let mut out = Vec::new();
    for g in gb.basis() {
        if !g.involves_prefix_var() {
            out.push(g.drop_prefix_var()?);
        }
    }
    Ideal::new(n, out)
}

/// Left fold of `intersect` over a sequence of ideals, in the given order.
pub fn intersect_many<'a, I>(ideals: I, n_vars: usize, limits: Limits) -> Result<Ideal>
where
    I: IntoIterator<Item = &'a Ideal>,
{
    let mut iter = ideals.into_iter();
    let Some(first) = iter.next() else {
        return Ok(Ideal::zero(n_vars));
    };
    let mut acc = first.clone();
    for next in iter {
        acc = intersect(&acc, next, limits)?;
    }
    Ok(acc)
}

/// Post-hoc Buchberger criterion: every S-polynomial of the basis reduces
/// to zero. Exposed for the test suite.
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis) -> bool {
    let basis = gb.basis();
    for i in 0..basis.len() {
        for j in 0..i {
            let s = s_polynomial(&basis[i], &basis[j], gb.order()).expect("same ring");
            if !normal_form(&s, basis, gb.order()).is_zero() {
                return false;
            }
        }
    }
    true
}
