use std::cmp::Ordering;

use super::alphabet::Letter;

/// A monomial of the free algebra. The empty word is the unit.
///
/// The derived ordering is degree-lexicographic on letter ids; it only
/// fixes storage order; rewriting uses a [`crate::rewrite::MonomialOrder`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn power(l: Letter, n: usize) -> Self {
        Word(vec![l; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Replaces `len` letters at `pos` by `mid`.
    pub fn splice(&self, pos: usize, len: usize, mid: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - len + mid.0.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// First position where `pat` occurs as a subword.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.0.len() > self.0.len() {
            return None;
        }
        self.0.windows(pat.0.len()).position(|w| w == pat.0.as_slice())
    }

    pub fn occurs_at(&self, pat: &[Letter], pos: usize) -> bool {
        pos + pat.len() <= self.0.len() && &self.0[pos..pos + pat.len()] == pat
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ids: &[u16]) -> Word {
        Word::new(ids.iter().map(|&i| Letter(i)).collect())
    }

    #[test]
    fn splice_and_find() {
        let x = w(&[0, 1, 2, 1, 2]);
        assert_eq!(x.find(&w(&[1, 2])), Some(1));
        assert_eq!(x.splice(1, 2, &w(&[7])), w(&[0, 7, 1, 2]));
        assert_eq!(x.find(&w(&[2, 0])), None);
        assert!(x.occurs_at(w(&[1, 2]).letters(), 3));
    }

    #[test]
    fn storage_order_is_deglex() {
        assert!(w(&[5]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[1, 0]));
        assert!(Word::one() < w(&[0]));
    }
}
