use std::fmt;

/// Strictly increasing list of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(v: Vec<usize>) -> Result<IndexSet, String> {
        if v.iter().any(|&i| i == 0) {
            return Err("indices are 1-based".into());
        }
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("index set {:?} is not strictly increasing", v));
        }
        Ok(IndexSet(v))
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted(mut v: Vec<usize>) -> IndexSet {
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn range(a: usize, b: usize) -> IndexSet {
        IndexSet((a..=b).collect())
    }

    pub fn full(n: usize) -> IndexSet {
        IndexSet::range(1, n)
    }

    pub fn empty() -> IndexSet {
        IndexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn complement(&self, n: usize) -> IndexSet {
        IndexSet((1..=n).filter(|i| !self.contains(*i)).collect())
    }

    pub fn union(&self, o: &IndexSet) -> IndexSet {
        IndexSet::from_unsorted(self.0.iter().chain(o.0.iter()).cloned().collect())
    }

    pub fn without(&self, i: usize) -> IndexSet {
        IndexSet(self.0.iter().cloned().filter(|&x| x != i).collect())
    }

    pub fn with(&self, i: usize) -> IndexSet {
        self.union(&IndexSet(vec![i]))
    }

    pub fn is_disjoint(&self, o: &IndexSet) -> bool {
        self.0.iter().all(|i| !o.contains(*i))
    }

    pub fn is_subset(&self, o: &IndexSet) -> bool {
        self.0.iter().all(|i| o.contains(*i))
    }

    /// All subsets of `{1..n}`, by size then lexicographically.
    pub fn all_subsets(n: usize) -> Vec<IndexSet> {
        let mut out: Vec<IndexSet> = (0u32..(1 << n))
            .map(|mask| IndexSet((1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Position of `i` in the set, 0-based.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl std::str::FromStr for IndexSet {
    type Err = String;
    /// Parses `1,3,4` (braces optional; empty string is the empty set).
    fn from_str(s: &str) -> Result<IndexSet, String> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if t.is_empty() {
            return Ok(IndexSet::empty());
        }
        let v: Result<Vec<usize>, _> = t.split(',').map(|p| p.trim().parse::<usize>()).collect();
        IndexSet::new(v.map_err(|_| format!("bad index list '{}'", s))?)
    }
}
