use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::NatVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrderKind {
    GradedLex,
    Lex,
}

/// A term order on `N^d`, used to pick `max_≺` of a gap set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrderNd {
    pub kind: TermOrderKind,
    /// Coordinates from highest to lowest priority.
    pub priority: Vec<usize>,
}

impl TermOrderNd {
    pub fn new(kind: TermOrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= seen.len() || seen[p] {
                return Err(Error::WrongOrder(format!("{priority:?} is not a coordinate permutation")));
            }
            seen[p] = true;
        }
        Ok(TermOrderNd { kind, priority })
    }

    pub fn graded_lex(d: usize) -> Self {
        TermOrderNd {
            kind: TermOrderKind::GradedLex,
            priority: (0..d).collect(),
        }
    }

    pub fn cmp(&self, x: &NatVector, y: &NatVector) -> Ordering {
        let (a, b) = (x.entries(), y.entries());
        if self.kind == TermOrderKind::GradedLex {
            let (sa, sb): (u64, u64) = (a.iter().sum(), b.iter().sum());
            if sa != sb {
                return sa.cmp(&sb);
            }
        }
        for &i in &self.priority {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, items: impl IntoIterator<Item = &'a NatVector>) -> Option<&'a NatVector> {
        items.into_iter().max_by(|x, y| self.cmp(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_prefers_degree() {
        let o = TermOrderNd::graded_lex(2);
        let v = |a: u64, b: u64| NatVector::new(vec![a, b]);
        assert_eq!(o.cmp(&v(7, 2), &v(1, 7)), Ordering::Greater);
        assert_eq!(o.cmp(&v(2, 7), &v(7, 2)), Ordering::Less);
        let lex = TermOrderNd::new(TermOrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(lex.cmp(&v(7, 2), &v(1, 3)), Ordering::Less);
        assert!(TermOrderNd::new(TermOrderKind::Lex, vec![0, 0]).is_err());
    }
}
