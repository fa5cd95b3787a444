//! Braid words in the Artin generators, band generators and Markov moves.
//!
//! Letters are signed 1-based generator indices: `+i` is `σ_i`, `-i` is
//! `σ_i^{-1}`. Words are never reduced implicitly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange { index: g as i64, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&g| g != 0 && (g.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum `a(B)`.
    pub fn algebraic_length(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&g| g > 0)
    }

    pub fn inverse(&self) -> Self {
        Self::from_raw(self.strands, self.letters.iter().rev().map(|&g| -g).collect())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_raw(self.strands, letters))
    }

    pub(crate) fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        Ok(())
    }

    /// `w B w^{-1}`, by concatenation.
    pub fn conjugate(&self, w: &Self) -> Result<Self> {
        self.check_strands(w)?;
        w.concat(self)?.concat(&w.inverse())
    }

    pub fn underlying_permutation(&self) -> Permutation {
        // images[p] = bottom position of the strand entering at top position p
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // at[q] = top position of the strand now at position q
        let mut images = vec![0; self.strands];
        for (q, &p) in at.iter().enumerate() {
            images[p] = q;
        }
        Permutation { images }
    }

    /// Number of components of the braid closure.
    pub fn component_count(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Self::from_raw(self.strands, out)
    }

    pub fn cyclic_reduce(&self) -> Self {
        let mut w = self.free_reduce().letters;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == -w[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        w.truncate(hi);
        w.drain(..lo);
        Self::from_raw(self.strands, w)
    }

    /// Lexicographically least cyclic rotation of the cyclically reduced
    /// word. Conjugate words with equal canonical form close to the same link.
    pub fn canonical_cyclic(&self) -> Self {
        let w = self.cyclic_reduce().letters;
        let best = least_rotation(&w);
        Self::from_raw(self.strands, best)
    }

    pub fn rotate_left(&self, k: usize) -> Self {
        let mut w = self.letters.clone();
        if !w.is_empty() {
            let k = k % w.len();
            w.rotate_left(k);
        }
        Self::from_raw(self.strands, w)
    }

    /// Appends `σ_n^{±1}` on `n + 1` strands.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        Self::from_raw(self.strands + 1, letters)
    }

    pub fn positive_stabilize(&self) -> Self {
        self.stabilize(true)
    }

    /// Removes the single occurrence of `σ_{n-1}` when it is the only letter
    /// of index `n - 1` and is positive; the remaining word is read from just
    /// after that letter around the cycle.
    pub fn positive_destabilize(&self) -> Result<Self> {
        if self.strands < 2 {
            return Err(Error::NotDestabilizable);
        }
        let top = (self.strands - 1) as i32;
        let mut hits = self.letters.iter().enumerate().filter(|(_, g)| g.abs() == top);
        let (k, &g) = hits.next().ok_or(Error::NotDestabilizable)?;
        if hits.next().is_some() || g != top {
            return Err(Error::NotDestabilizable);
        }
        let mut letters = self.letters[k + 1..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Ok(Self::from_raw(self.strands - 1, letters))
    }

    /// Reindexes generators `i ↦ n - i` (conjugation by the half twist).
    pub fn flip(&self) -> Self {
        let n = self.strands as i32;
        Self::from_raw(self.strands, self.letters.iter().map(|&g| g.signum() * (n - g.abs())).collect())
    }
}

pub(crate) fn least_rotation(w: &[i32]) -> Vec<i32> {
    let mut best = w.to_vec();
    let mut rot = w.to_vec();
    for _ in 1..w.len() {
        rot.rotate_left(1);
        if rot < best {
            best.clone_from(&rot);
        }
    }
    best
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

/// Parses `Bn: 1 -2 b(1,3) ...`. Band tokens are expanded in place.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s.split_once(':').ok_or_else(|| Error::parse(format!("missing `Bn:` header in {s:?}")))?;
        let head = head.trim();
        let strands: usize = head
            .strip_prefix('B')
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::parse(format!("bad header {head:?}")))?;
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            if let Some(inner) = tok.strip_prefix("b(").and_then(|t| t.strip_suffix(')')) {
                let band: BandGenerator = format!("b({inner})").parse()?;
                letters.extend(band.expand(strands)?.letters);
            } else {
                let g: i32 = tok.parse().map_err(|_| Error::parse(format!("bad letter {tok:?}")))?;
                letters.push(g);
            }
        }
        Self::new(strands, letters)
    }
}

/// Band generator `σ_{i,j} = (σ_i…σ_{j-2}) σ_{j-1} (σ_i…σ_{j-2})^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BandGenerator {
    pub i: usize,
    pub j: usize,
}

impl BandGenerator {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn expand(&self, strands: usize) -> Result<BraidWord> {
        let (i, j) = (self.i, self.j);
        if i < 1 || i >= j || j > strands {
            return Err(Error::InvalidBand { i, j, strands });
        }
        let prefix: Vec<i32> = (i..j - 1).map(|k| k as i32).collect();
        let mut letters = prefix.clone();
        letters.push((j - 1) as i32);
        letters.extend(prefix.iter().rev().map(|&g| -g));
        BraidWord::new(strands, letters)
    }

    /// All bands on `strands` strands, ordered by `(i, j)`.
    pub fn all(strands: usize) -> impl Iterator<Item = BandGenerator> {
        (1..strands).flat_map(move |i| (i + 1..=strands).map(move |j| BandGenerator { i, j }))
    }
}

impl fmt::Display for BandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.i, self.j)
    }
}

impl FromStr for BandGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("b(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("bad band {s:?}")))?;
        let (i, j) = inner.split_once(',').ok_or_else(|| Error::parse(format!("bad band {s:?}")))?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad band index {t:?}")));
        Ok(Self { i: num(i)?, j: num(j)? })
    }
}

/// Permutation of `{1..n}`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero = Vec::with_capacity(n);
        for &p in images {
            if p < 1 || p > n || seen[p - 1] {
                return Err(Error::InvalidModel(format!("not a permutation: {images:?}")));
            }
            seen[p - 1] = true;
            zero.push(p - 1);
        }
        Ok(Self { images: zero })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of the 1-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Cycles as sorted 1-based point lists, ordered by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&p| self.images[p]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Self { images }
    }
}
