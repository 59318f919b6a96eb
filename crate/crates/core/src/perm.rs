//! Permutations in one-line notation.
//!
//! This is the independent representation that the tower code is checked
//! against. Products compose left to right: `p.then(&r)` applies `p` first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i - 1] is the image of point i
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its one-line images (1-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::PointOutOfRange {
                        point: x,
                        degree: n,
                    });
                }
                if touched[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in more than one cycle"
                    )));
                }
                touched[x - 1] = true;
                images[x - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of point `i`; points beyond the degree are fixed.
    pub fn image(&self, i: usize) -> usize {
        if i >= 1 && i <= self.images.len() {
            self.images[i - 1]
        } else {
            i
        }
    }

    /// The same permutation viewed in a larger symmetric group.
    pub fn extended(&self, n: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() + 1..=n);
        Self { images }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        let n = self.degree().max(other.degree());
        Self {
            images: (1..=n).map(|i| other.image(self.image(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Self { images }
    }

    /// Number of inversions, which is the Coxeter length in type A.
    pub fn inversions(&self) -> usize {
        let p = &self.images;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 1..=self.degree() {
            if seen[start - 1] || self.images[start - 1] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.images[start - 1];
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.images[x - 1];
            }
            out.push(cycle);
        }
        out
    }

    /// The adjacent transposition `(i, i+1)` in degree `n`.
    pub fn simple_reflection(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::ArgumentRange(format!(
                "s_{i} does not exist in degree {n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Self { images })
    }

    /// All permutations of degree `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Self {
            images: cur.clone(),
        }];
        loop {
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Self {
                images: cur.clone(),
            });
        }
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

fn parse_list(body: &str) -> Result<Vec<usize>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a point: {:?}", t.trim())))
        })
        .collect()
}

/// Accepts one-line images `[2,3,1]` or cycles `(1,2,3)(4,5)`.
///
/// Cycle input gets the smallest degree containing every listed point.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            return Self::from_images(parse_list(body)?);
        }
        if !s.starts_with('(') {
            return Err(Error::Parse(format!(
                "expected [images] or (cycles), got {s:?}"
            )));
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("unbalanced cycle notation in {s:?}")))?;
            cycles.push(parse_list(inner.0)?);
            rest = inner.1.trim_start();
        }
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        Self::from_cycles(&cycles, n)
    }
}
