use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::monomial::Monomial;
use crate::Error;

/// A monomial order on exponent vectors of a fixed length. All variants are
/// total, multiplicative, and have 1 as the minimal element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x1 > x2 > … > xn`.
    #[default]
    GrevLex,
    /// Pure lexicographic with `x1 > x2 > … > xn`.
    Lex,
    /// Graded lexicographic.
    GrLex,
    /// Block elimination order: the first `head` variables are compared by
    /// grevlex among themselves, then the tail block by grevlex. Eliminates
    /// the head variables.
    Block { head: usize },
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // equal degree: the monomial with the smaller exponent in the last
    // differing variable is the larger one
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.n_vars(), b.n_vars());
        let (ea, eb) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Lex => cmp_lex(ea, eb),
            MonomialOrder::GrLex => a
                .deg()
                .cmp(&b.deg())
                .then_with(|| cmp_lex(ea, eb)),
            MonomialOrder::GrevLex => cmp_grevlex(ea, eb),
            MonomialOrder::Block { head } => {
                let h = (*head).min(ea.len());
                cmp_grevlex(&ea[..h], &eb[..h]).then_with(|| cmp_grevlex(&ea[h..], &eb[h..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrLex => "grlex".into(),
            MonomialOrder::Block { head } => format!("block{head}"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            other => Err(Error::Structural(format!("unknown monomial order `{other}`"))),
        }
    }
}
