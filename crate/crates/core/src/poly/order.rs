use std::cmp::Ordering;

use super::Monomial;

/// A monomial order on exponent vectors of a fixed arity.
///
/// Variables are ranked by index: index 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: the `front` variables are compared first (grevlex on
    /// that block), ties broken by grevlex on the remaining variables.
    Block { front: Vec<usize> },
}

impl MonomialOrder {
    pub fn block(front: impl IntoIterator<Item = usize>) -> Self {
        let mut front: Vec<usize> = front.into_iter().collect();
        front.sort_unstable();
        front.dedup();
        MonomialOrder::Block { front }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b, |_| true),
            MonomialOrder::Block { front } => {
                let inside = |i: usize| front.binary_search(&i).is_ok();
                grevlex(a, b, inside).then_with(|| grevlex(a, b, |i| !inside(i)))
            }
        }
    }
}

/// Grevlex on the variables selected by `keep`.
fn grevlex(a: &[i32], b: &[i32], keep: impl Fn(usize) -> bool) -> Ordering {
    let (mut da, mut db) = (0i64, 0i64);
    for i in 0..a.len() {
        if keep(i) {
            da += i64::from(a[i]);
            db += i64::from(b[i]);
        }
    }
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if keep(i) && a[i] != b[i] {
                // smaller exponent in the last differing variable is larger
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}
