use std::fmt;

use serde::{Deserialize, Serialize};

/// Multiset of positive integers (factor degrees or cycle lengths), kept in
/// descending order so equal multisets compare and print identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeMultiset(Vec<usize>);

impl DegreeMultiset {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        DegreeMultiset(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn count(&self, part: usize) -> usize {
        self.0.iter().filter(|&&d| d == part).count()
    }

    pub fn contains(&self, part: usize) -> bool {
        self.0.contains(&part)
    }
}

impl From<Vec<usize>> for DegreeMultiset {
    fn from(parts: Vec<usize>) -> Self {
        DegreeMultiset::new(parts)
    }
}

impl From<DegreeMultiset> for Vec<usize> {
    fn from(m: DegreeMultiset) -> Self {
        m.0
    }
}

impl FromIterator<usize> for DegreeMultiset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        DegreeMultiset::new(iter.into_iter().collect())
    }
}

/// `{8,4}`
impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
