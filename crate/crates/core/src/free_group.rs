//! Exact word problem via the Artin action of `B_n` on the free group `F_n`.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`, fixing the
//! other generators. The action is faithful, so two braids are equal iff the
//! reduced images of every `x_j` agree.

use crate::braid::BraidWord;
use crate::error::Result;

/// Reduced word in `F_n`; letters are `±j` for `x_j^{±1}`.
pub type FreeWord = Vec<i32>;

fn reduced_product(parts: &[&[i32]]) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for part in parts {
        for &x in *part {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
    }
    out
}

fn inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|&x| -x).collect()
}

/// Images of `x_1..x_n` under the automorphism of `braid`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinImage(Vec<FreeWord>);

impl ArtinImage {
    pub fn identity(strands: usize) -> Self {
        Self((1..=strands as i32).map(|j| vec![j]).collect())
    }

    pub fn of(braid: &BraidWord) -> Self {
        let mut img = Self::identity(braid.strands());
        for &g in braid.letters() {
            img.push_letter(g);
        }
        img
    }

    /// Right-multiplies by one braid letter.
    pub fn push_letter(&mut self, g: i32) {
        let i = g.unsigned_abs() as usize - 1;
        let a = std::mem::take(&mut self.0[i]);
        let b = std::mem::take(&mut self.0[i + 1]);
        if g > 0 {
            self.0[i] = reduced_product(&[&a, &b, &inverse(&a)]);
            self.0[i + 1] = a;
        } else {
            self.0[i + 1] = reduced_product(&[&inverse(&b), &a, &b]);
            self.0[i] = b;
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, w)| w.len() == 1 && w[0] == j as i32 + 1)
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.0
    }
}

/// Whether two words represent the same element of `B_n`.
pub fn braid_words_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check_strands(b)?;
    Ok(ArtinImage::of(a) == ArtinImage::of(b))
}

pub fn is_trivial(braid: &BraidWord) -> bool {
    ArtinImage::of(braid).is_identity()
}
