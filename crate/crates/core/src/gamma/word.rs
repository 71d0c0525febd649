//! Words over {0, ..., p} and the monomial order.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A word (i_1, ..., i_r) naming the monomial P_{i_1}...P_{i_r}.
///
/// `Ord` is the monomial order on words of equal length: compare from the
/// right, and at the first difference the larger letter is the smaller word.
/// Words of different length are ordered by length first.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn new(letters: &[u8]) -> Word {
        Word(letters.to_vec())
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// All zeros form a prefix.
    pub fn is_admissible(&self) -> bool {
        self.rightmost_descent().is_none()
    }

    /// Largest k with i_k ≠ 0 and i_{k+1} = 0 (0-based position of i_k).
    pub fn rightmost_descent(&self) -> Option<usize> {
        self.0.windows(2).rposition(|w| w[0] != 0 && w[1] == 0)
    }

    /// 0-based positions k with i_k ≠ 0 and i_{k+1} = 0.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] != 0 && w[1] == 0)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn order_compare(a: &Word, b: &Word) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.cmp(b))
}

/// Admissible words of length r over {0..p}, ascending in the monomial order.
pub fn admissible_basis(p: u32, r: usize) -> Vec<Word> {
    all_words(p, r).into_iter().filter(Word::is_admissible).collect()
}

/// Every word of length r over {0..p}, ascending in the monomial order.
pub fn all_words(p: u32, r: usize) -> Vec<Word> {
    let base = p as usize + 1;
    let total = base.pow(r as u32);
    let mut out: Vec<Word> = (0..total)
        .map(|mut n| {
            let mut w = vec![0u8; r];
            for slot in w.iter_mut().rev() {
                *slot = (n % base) as u8;
                n /= base;
            }
            Word(w)
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[u8]) -> Word {
        Word::new(l)
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_compare(&w(&[2]), &w(&[1])).unwrap(), Ordering::Less);
        assert_eq!(order_compare(&w(&[0, 2]), &w(&[2, 1])).unwrap(), Ordering::Less);
        assert_eq!(order_compare(&w(&[1, 1]), &w(&[1, 1])).unwrap(), Ordering::Equal);
        assert!(order_compare(&w(&[1]), &w(&[1, 1])).is_err());
    }

    #[test]
    fn length_two_chain_for_p2() {
        let got = all_words(2, 2);
        let want: Vec<Word> = [
            [2, 2], [1, 2], [0, 2], [2, 1], [1, 1], [0, 1], [2, 0], [1, 0], [0, 0],
        ]
        .iter()
        .map(|l| w(l))
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn admissible_counts() {
        let b = admissible_basis(2, 2);
        let mut set: Vec<_> = b.iter().map(|x| x.0.clone()).collect();
        set.sort();
        assert_eq!(
            set,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(admissible_basis(2, 0), vec![Word::empty()]);
        assert_eq!(admissible_basis(3, 2).len(), 13);
        for p in [2u32, 3, 5] {
            for r in 0..=4 {
                let b = admissible_basis(p, r);
                assert_eq!(b.len(), crate::isogeny::sigma(p, r as u32));
                assert!(b.windows(2).all(|x| x[0] < x[1]));
                // zeros prefix of length z, then r - z letters from 1..=p
                let count: usize = (0..=r).map(|z| (p as usize).pow((r - z) as u32)).sum();
                assert_eq!(count, b.len());
            }
        }
    }

    #[test]
    fn descents() {
        assert_eq!(w(&[1, 0, 2, 0]).descents(), vec![0, 2]);
        assert_eq!(w(&[1, 0, 2, 0]).rightmost_descent(), Some(2));
        assert!(w(&[0, 0, 1, 2]).is_admissible());
        assert!(!w(&[0, 1, 0]).is_admissible());
    }
}
