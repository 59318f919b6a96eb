//! Tower normal forms for elements of `W(A_m) = Sym_{m+1}`.
//!
//! Every permutation factors uniquely as `a(1,a_1) a(2,a_2) ... a(m,a_m)`,
//! where `a(j,k) = s_j s_{j-1} ... s_{j-k+1}` runs over the minimal length
//! coset representatives of `W(A_{j-1})` in `W(A_j)`. The digit sequence
//! `(a_1, ..., a_m)` is the tower. Products compose left to right, so the
//! factor `a(1,a_1)` acts first.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `n!`, panicking on overflow.
pub fn factorial(n: usize) -> usize {
    (1..=n)
        .try_fold(1usize, |acc, k| acc.checked_mul(k))
        .expect("factorial overflow")
}

/// The coset representative `a(m, k) = s_m s_{m-1} ... s_{m-k+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CosetRep {
    m: usize,
    k: usize,
}

impl CosetRep {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if k > m {
            return Err(Error::ArgumentRange(format!("a({m},{k}) needs k <= m")));
        }
        Ok(Self { m, k })
    }

    /// The simple reflection `s_i = a(i, 1)`.
    pub fn simple(i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::ArgumentRange("s_0 does not exist".into()));
        }
        Ok(Self { m: i, k: 1 })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn length(&self) -> usize {
        self.k
    }

    /// The `(k+1)`-cycle `(m-k+1, m-k+2, ..., m+1)` in degree `n`.
    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        if n < self.m + 1 {
            return Err(Error::DegreeTooSmall {
                needed: self.m + 1,
                got: n,
            });
        }
        if self.k == 0 {
            return Ok(Permutation::identity(n));
        }
        let cycle: Vec<usize> = (self.m - self.k + 1..=self.m + 1).collect();
        Permutation::from_cycles(&[cycle], n)
    }

    pub fn word(&self) -> ReducedWord {
        ReducedWord((0..self.k).map(|t| self.m - t).collect())
    }

    /// The tower with a single nonzero digit `k` at position `m`.
    pub fn tower(&self) -> Tower {
        let mut digits = vec![0; self.m];
        if self.m > 0 {
            digits[self.m - 1] = self.k;
        }
        Tower::trimmed(digits)
    }

    fn apply(m: usize, k: usize, x: usize) -> usize {
        if k == 0 {
            x
        } else if x == m + 1 {
            m + 1 - k
        } else if x + k > m && x <= m {
            x + 1
        } else {
            x
        }
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.m, self.k)
    }
}

/// A word in the simple reflections, stored as generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Evaluates the word as a product of adjacent transpositions.
    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        self.0.iter().try_fold(Permutation::identity(n), |acc, &i| {
            Ok(acc.then(&Permutation::simple_reflection(i, n)?))
        })
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Which of the four rewriting rules for `a(m,k) a(j,l)` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MuBranch {
    /// `j < m-k`: the factors commute.
    Pass,
    /// `j = m-k`: the product is the single representative `a(m, k+l)`.
    Join,
    /// `m-k < j <= m-k+l`: a generator cancels and the length drops by 2.
    Cancel,
    /// `j > m-k+l`: `a(j,l)` shifts down to `a(j-1,l)`.
    Shift,
}

/// Result `(j', k', l')` of the rewriting `a(m,k) a(j,l) = a(j',l') a(m,k')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MuResult {
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub branch: MuBranch,
}

/// Rewrites `a(m,k) a(j,l)` as `a(j',l') a(m,k')`.
pub fn mu(m: usize, j: usize, k: usize, l: usize) -> Result<MuResult> {
    if j == 0 || j > m || k > m || l > j {
        return Err(Error::ArgumentRange(format!(
            "mu_{m}({j},{k},{l}) needs 1 <= j <= m, k <= m, l <= j"
        )));
    }
    Ok(mu_unchecked(m, j, k, l))
}

#[inline]
pub(crate) fn mu_unchecked(m: usize, j: usize, k: usize, l: usize) -> MuResult {
    let (j2, k2, l2, branch) = if j + k < m {
        (j, k, l, MuBranch::Pass)
    } else if j + k == m {
        (0, k + l, 0, MuBranch::Join)
    } else if j + k <= m + l {
        (j - 1, k - 1, l - 1, MuBranch::Cancel)
    } else {
        (j - 1, k, l, MuBranch::Shift)
    };
    MuResult {
        j: j2,
        k: k2,
        l: l2,
        branch,
    }
}

/// The tower `(a_1, ..., a_m)` of a permutation, trailing zeros trimmed.
///
/// Trimming makes `Sym_{m+1}` embed in every larger symmetric group, so
/// equality and hashing do not depend on the ambient rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Tower {
    digits: Vec<usize>,
}

impl Tower {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Validates `0 <= a_j <= j` and trims trailing zeros.
    pub fn new(digits: Vec<usize>) -> Result<Self> {
        if let Some((idx, &d)) = digits.iter().enumerate().find(|&(i, &d)| d > i + 1) {
            return Err(Error::DigitOutOfRange {
                position: idx + 1,
                digit: d,
            });
        }
        Ok(Self::trimmed(digits))
    }

    fn trimmed(mut digits: Vec<usize>) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Self { digits }
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    /// Digit `a_j` (1-based); zero beyond the stored length.
    pub fn digit(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.digits.get(j - 1).copied().unwrap_or(0)
        }
    }

    /// Smallest `m` with this element in `W(A_m)`.
    pub fn min_rank(&self) -> usize {
        self.digits.len()
    }

    pub fn is_identity(&self) -> bool {
        self.digits.is_empty()
    }

    /// The digits padded with zeros to exactly `m` positions.
    pub fn padded(&self, m: usize) -> Vec<usize> {
        let mut d = self.digits.clone();
        d.resize(m.max(d.len()), 0);
        d
    }

    /// Coxeter length: the sum of the digits.
    pub fn length(&self) -> usize {
        self.digits.iter().sum()
    }

    /// Concatenation of the words of `a(1,a_1), ..., a(m,a_m)`.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.length());
        for (idx, &a) in self.digits.iter().enumerate() {
            let j = idx + 1;
            letters.extend((0..a).map(|t| j - t));
        }
        ReducedWord(letters)
    }

    /// Indices `i` of the left descents `s_i`, namely those with `a_i > a_{i-1}`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut prev = 0;
        let mut out = BTreeSet::new();
        for (idx, &a) in self.digits.iter().enumerate() {
            if a > prev {
                out.insert(idx + 1);
            }
            prev = a;
        }
        out
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        if n < self.digits.len() + 1 {
            return Err(Error::DegreeTooSmall {
                needed: self.digits.len() + 1,
                got: n,
            });
        }
        let images = (1..=n).map(|i| self.image_unchecked(i)).collect();
        Permutation::from_images(images)
    }

    /// Peels off the top coset representative repeatedly.
    pub fn from_permutation(p: &Permutation) -> Tower {
        let n = p.degree();
        let mut images: Vec<usize> = p.images().to_vec();
        let mut digits = vec![0; n.saturating_sub(1)];
        for m in (1..n).rev() {
            // w = u a(m, a_m) with u fixing m+1, so w(m+1) = m+1 - a_m
            let top = images[m];
            let k = m + 1 - top;
            digits[m - 1] = k;
            for x in images.iter_mut() {
                *x = inverse_coset_apply(m, k, *x);
            }
        }
        Tower::trimmed(digits)
    }

    /// Image of point `i` under the permutation, without materializing it.
    pub fn image_of_point(&self, i: usize) -> Result<usize> {
        let degree = self.digits.len() + 1;
        if i == 0 || i > degree {
            return Err(Error::PointOutOfRange { point: i, degree });
        }
        Ok(self.image_unchecked(i))
    }

    fn image_unchecked(&self, i: usize) -> usize {
        self.digits
            .iter()
            .enumerate()
            .fold(i, |x, (idx, &a)| CosetRep::apply(idx + 1, a, x))
    }

    /// The tower of `w a(j, l)`.
    pub fn star_coset(&self, j: usize, l: usize) -> Result<Tower> {
        if l > j {
            return Err(Error::ArgumentRange(format!("a({j},{l}) needs l <= j")));
        }
        if l == 0 {
            return Ok(self.clone());
        }
        let mut digits = self.padded(j);
        star_coset_in_place(&mut digits, j, l);
        Ok(Tower::trimmed(digits))
    }

    /// The tower of the product `w w'`, folding in `a(i, a'_i)` for ascending `i`.
    pub fn product(&self, other: &Tower) -> Tower {
        let mut digits = self.padded(other.digits.len());
        for (idx, &l) in other.digits.iter().enumerate() {
            if l > 0 {
                star_coset_in_place(&mut digits, idx + 1, l);
            }
        }
        Tower::trimmed(digits)
    }

    /// The tower of `w^{-1}`.
    pub fn inverse(&self) -> Tower {
        let mut cur = self.digits.clone();
        let mut out = vec![0; cur.len()];
        while let Some(&last) = cur.last() {
            let m = cur.len();
            if last == 0 {
                cur.pop();
                continue;
            }
            // largest i < m with a_i = 0, where a_0 = 0
            let k = (0..m).rev().find(|&i| i == 0 || cur[i - 1] == 0).unwrap();
            out[m - 1] = m - k;
            // w = a(m, m-k)^{-1} w' with w' = x_1..x_{k-1} x'_k..x'_{m-1},
            // x'_i = a(i, a_{i+1} - 1)
            let mut next = Vec::with_capacity(m - 1);
            next.extend_from_slice(&cur[..k.saturating_sub(1)]);
            next.extend(cur[k.max(1)..].iter().map(|&a| a - 1));
            cur = next;
        }
        Tower::trimmed(out)
    }

    /// Mixed-radix index `sum_j a_j * j!`, an integer in `[0, (m+1)!)`.
    pub fn rank(&self) -> usize {
        let mut weight = 1;
        let mut r = 0;
        for (idx, &a) in self.digits.iter().enumerate() {
            weight *= idx + 1;
            r += a * weight;
        }
        r
    }

    pub fn unrank(r: usize, m: usize) -> Result<Tower> {
        let order = factorial(m + 1);
        if r >= order {
            return Err(Error::RankOutOfRange { rank: r, order, m });
        }
        Ok(Self::unrank_unchecked(r, m))
    }

    pub(crate) fn unrank_unchecked(mut r: usize, m: usize) -> Tower {
        let mut digits = vec![0; m];
        // position j has weight j! and radix j+1
        for (idx, d) in digits.iter_mut().enumerate() {
            let radix = idx + 2;
            *d = r % radix;
            r /= radix;
        }
        Tower::trimmed(digits)
    }

    /// Every element of `W(A_m)` in rank order.
    pub fn all(m: usize) -> impl Iterator<Item = Tower> {
        (0..factorial(m + 1)).map(move |r| Tower::unrank_unchecked(r, m))
    }

    /// ASCII tower diagram: column `j` holds `j, j-1, ..., j-a_j+1` from the
    /// bottom up, empty cells are `.`.
    pub fn diagram(&self) -> String {
        let m = self.digits.len();
        let height = self.digits.iter().copied().max().unwrap_or(0);
        let width = m.to_string().len();
        let mut out = String::new();
        for row in (0..height).rev() {
            let cells: Vec<String> = (1..=m)
                .map(|j| {
                    if row < self.digit(j) {
                        format!("{:>width$}", j - row)
                    } else {
                        format!("{:>width$}", ".")
                    }
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Reads column heights back out of a rendered [`Tower::diagram`].
pub fn diagram_column_heights(diagram: &str) -> Vec<usize> {
    let rows: Vec<Vec<&str>> = diagram
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| {
            rows.iter()
                .filter(|r| r.get(c).is_some_and(|&x| x != "."))
                .count()
        })
        .collect()
}

fn inverse_coset_apply(m: usize, k: usize, x: usize) -> usize {
    if k == 0 {
        x
    } else if x == m + 1 - k {
        m + 1
    } else if x > m + 1 - k && x <= m + 1 {
        x - 1
    } else {
        x
    }
}

/// Multiplies the tower in `digits` by `a(j, l)` on the right.
/// `digits.len() >= j` and `0 < l <= j` are required.
fn star_coset_in_place(digits: &mut [usize], mut j: usize, mut l: usize) {
    let mut m = digits.len();
    while l > 0 {
        let r = mu_unchecked(m, j, digits[m - 1], l);
        digits[m - 1] = r.k;
        j = r.j;
        l = r.l;
        m -= 1;
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Parses `[1,2,1,3]`; the empty list `[]` is the identity.
impl FromStr for Tower {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed digit list, got {s:?}")))?;
        if body.trim().is_empty() {
            return Ok(Tower::identity());
        }
        let digits = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("not a digit: {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Tower::new(digits)
    }
}
