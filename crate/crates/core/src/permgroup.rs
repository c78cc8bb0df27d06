//! Permutation groups on 12 points, enumerated element by element.
//!
//! Composition is `(g∘h)(i) = g(h(i))`: the right factor acts first.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factorizer::DegreeMultiset;
use crate::polyring::Rat;

pub const DEGREE: usize = 12;
/// Closure refuses to enumerate more elements than this.
pub const ELEMENT_BOUND: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("bad cycle notation at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("group closure passed {0} elements")]
    BoundExceeded(usize),
}

/// Bijection of `{1, …, 12}`; stored 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; DEGREE]);

impl Perm {
    pub fn identity() -> Perm {
        let mut images = [0u8; DEGREE];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Perm(images)
    }

    /// From 1-based images: `images[i]` is the image of point `i + 1`.
    pub fn from_images(images: [u8; DEGREE]) -> Option<Perm> {
        let mut seen = [false; DEGREE];
        let mut out = [0u8; DEGREE];
        for (i, &v) in images.iter().enumerate() {
            if !(1..=DEGREE as u8).contains(&v) || seen[v as usize - 1] {
                return None;
            }
            seen[v as usize - 1] = true;
            out[i] = v - 1;
        }
        Some(Perm(out))
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Perm) -> Perm {
        let mut out = [0u8; DEGREE];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[rhs.0[i] as usize];
        }
        Perm(out)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = [0u8; DEGREE];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::identity()
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.apply(i) == i
    }

    pub fn has_fixed_point(&self) -> bool {
        self.0.iter().enumerate().any(|(i, &v)| i == v as usize)
    }

    /// Disjoint cycles of length at least 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; DEGREE];
        let mut out = Vec::new();
        for start in 0..DEGREE {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points; sums to 12.
    pub fn cycle_type(&self) -> DegreeMultiset {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        self.cycles()
            .iter()
            .map(Vec::len)
            .chain(std::iter::repeat(1).take(DEGREE - moved))
            .collect()
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// Parses disjoint cycles such as `(1,6,11)(2,7)`; whitespace is ignored and
/// omitted points are fixed. `()` or the empty string is the identity.
impl FromStr for Perm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Perm, PermError> {
        let err = |pos: usize, msg: &str| PermError::Parse { pos, msg: msg.to_string() };
        let mut images: [u8; DEGREE] = Perm::identity().0;
        let mut used = [false; DEGREE];
        let bytes = s.as_bytes();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        loop {
            skip_ws(&mut i);
            if i == bytes.len() {
                break;
            }
            if bytes[i] != b'(' {
                return Err(err(i, "expected '('"));
            }
            i += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                skip_ws(&mut i);
                if i < bytes.len() && bytes[i] == b')' && cycle.is_empty() {
                    break;
                }
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let point: usize = s[start..i].parse().map_err(|_| err(start, "expected a point"))?;
                if !(1..=DEGREE).contains(&point) {
                    return Err(err(start, "point out of range 1..=12"));
                }
                if used[point - 1] {
                    return Err(err(start, "point repeated; cycles must be disjoint"));
                }
                used[point - 1] = true;
                cycle.push(point - 1);
                skip_ws(&mut i);
                match bytes.get(i) {
                    Some(b',') => i += 1,
                    Some(b')') => break,
                    _ => return Err(err(i, "expected ',' or ')'")),
                }
            }
            i += 1;
            for (k, &a) in cycle.iter().enumerate() {
                images[a] = cycle[(k + 1) % cycle.len()] as u8;
            }
        }
        Ok(Perm(images))
    }
}

/// A finite group of permutations with every element listed.
#[derive(Clone, Debug)]
pub struct PermGroup {
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Breadth-first closure of `generators` under composition.
    pub fn close(generators: &[Perm]) -> Result<PermGroup, PermError> {
        let mut seen: HashSet<Perm> = HashSet::from([Perm::identity()]);
        let mut queue = VecDeque::from([Perm::identity()]);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let h = s.compose(&g);
                if seen.insert(h) {
                    if seen.len() > ELEMENT_BOUND {
                        return Err(PermError::BoundExceeded(ELEMENT_BOUND));
                    }
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            generators: generators.to_vec(),
            elements,
        })
    }

    pub fn trivial() -> PermGroup {
        PermGroup::close(&[]).expect("one element")
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements.iter().map(|g| g.apply(i)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All elements fixing the 1-based point `i`.
    pub fn stabilizer(&self, i: usize) -> Vec<Perm> {
        assert!((1..=DEGREE).contains(&i), "point out of range");
        self.elements.iter().filter(|g| g.fixes(i)).copied().collect()
    }

    /// Size of the union of all point stabilizers, i.e. the number of
    /// elements with at least one fixed point.
    pub fn stabilizer_union_size(&self) -> usize {
        self.elements.iter().filter(|g| g.has_fixed_point()).count()
    }

    /// `|⋃ᵢ Stab(i)| / |G|`.
    pub fn point_density(&self) -> Rat {
        Rat::new(self.stabilizer_union_size().into(), self.order().into())
    }

    /// Proportion of elements of each cycle type.
    pub fn cycle_type_distribution(&self) -> BTreeMap<DegreeMultiset, Rat> {
        let mut counts: BTreeMap<DegreeMultiset, usize> = BTreeMap::new();
        for g in &self.elements {
            *counts.entry(g.cycle_type()).or_default() += 1;
        }
        let n = self.order();
        counts
            .into_iter()
            .map(|(k, c)| (k, Rat::new(c.into(), n.into())))
            .collect()
    }

    /// `true` iff every generator commutes with `sigma`.
    pub fn centralizes(&self, sigma: &Perm) -> bool {
        self.generators.iter().all(|g| g.commutes_with(sigma))
    }
}

/// The four permutation groups attached to the generic cases of the
/// classification, acting on the 12 roots of `Φ₄(c, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseGroup {
    /// The full centralizer `(ℤ/4)≀S₃` of the three-4-cycle permutation.
    #[serde(rename = "W")]
    Wreath,
    #[serde(rename = "G")]
    Lambda,
    #[serde(rename = "H")]
    Eta,
    #[serde(rename = "I")]
    Rho,
}

impl CaseGroup {
    pub const ALL: [CaseGroup; 4] = [
        CaseGroup::Wreath,
        CaseGroup::Lambda,
        CaseGroup::Eta,
        CaseGroup::Rho,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseGroup::Wreath => "W",
            CaseGroup::Lambda => "G",
            CaseGroup::Eta => "H",
            CaseGroup::Rho => "I",
        }
    }

    pub fn from_label(label: &str) -> Option<CaseGroup> {
        CaseGroup::ALL.into_iter().find(|g| g.label().eq_ignore_ascii_case(label))
    }

    pub fn generator_text(self) -> &'static [&'static str] {
        match self {
            CaseGroup::Wreath => &["(1,6,11,2,7,12,3,8,9,4,5,10)", "(1,7,4,6,3,5,2,8)(9,10,11,12)"],
            CaseGroup::Lambda => &[
                "(5,8,7,6)(9,12,11,10)",
                "(1,3)(2,4)(5,10,7,12)(6,11,8,9)",
                "(1,12,7)(2,9,8)(3,10,5)(4,11,6)",
            ],
            CaseGroup::Eta => &[
                "(1,10,4,9,3,12,2,11)",
                "(1,9,3,11)(2,10,4,12)",
                "(1,11,4,10,3,9,2,12)(5,8,7,6)",
            ],
            CaseGroup::Rho => &[
                "(1,4,3,2)",
                "(9,10,11,12)",
                "(1,10,4,9,3,12,2,11)",
                "(1,10)(2,11)(3,12)(4,9)(5,7)(6,8)",
            ],
        }
    }

    /// Small-Groups library identifier `(order, index)`, as published.
    pub fn small_group_id(self) -> (u32, u32) {
        match self {
            CaseGroup::Wreath => (384, 5557),
            CaseGroup::Lambda => (192, 944),
            CaseGroup::Eta => (128, 490),
            CaseGroup::Rho => (64, 101),
        }
    }

    /// Published root density for the case, checked against
    /// [`PermGroup::point_density`] by the classifier.
    pub fn published_density(self) -> Rat {
        let (n, d) = match self {
            CaseGroup::Wreath => (85, 384),
            CaseGroup::Lambda => (43, 192),
            CaseGroup::Eta => (53, 128),
            CaseGroup::Rho => (39, 64),
        };
        Rat::new(n.into(), d.into())
    }

    /// The enumerated group, built once per process.
    pub fn group(self) -> &'static PermGroup {
        static CACHE: [OnceLock<PermGroup>; 4] =
            [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        CACHE[self as usize].get_or_init(|| {
            let gens: Vec<Perm> = self
                .generator_text()
                .iter()
                .map(|s| s.parse().expect("built-in generators parse"))
                .collect();
            PermGroup::close(&gens).expect("built-in groups are small")
        })
    }
}

impl fmt::Display for CaseGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `(1,2,3,4)(5,6,7,8)(9,10,11,12)`, whose centralizer in S₁₂ is the wreath
/// group.
pub fn three_four_cycles() -> Perm {
    "(1,2,3,4)(5,6,7,8)(9,10,11,12)".parse().expect("literal")
}

/// Sum of the distribution over cycle types with a part equal to 1.
pub fn fixed_point_mass(dist: &BTreeMap<DegreeMultiset, Rat>) -> Rat {
    dist.iter()
        .filter(|(k, _)| k.contains(1))
        .fold(Rat::zero(), |acc, (_, v)| acc + v)
}
