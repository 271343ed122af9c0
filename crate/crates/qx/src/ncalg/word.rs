use smallvec::SmallVec;
use std::cmp::Ordering;
use std::ops::Deref;

/// A word in generator indices. Ordered by length first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[u8; 16]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_slice(s: &[u8]) -> Word {
        Word(SmallVec::from_slice(s))
    }

    pub fn single(g: u8) -> Word {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn pushed(&self, g: u8) -> Word {
        let mut w = self.clone();
        w.0.push(g);
        w
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut w = self.clone();
        w.0.extend_from_slice(&o.0);
        w
    }

    pub fn prefix(&self) -> Word {
        Word::from_slice(&self.0[..self.0.len() - 1])
    }
}

impl Deref for Word {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Word) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.as_slice().cmp(o.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Word) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
