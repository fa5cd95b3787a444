//! Braid inequalities: Bennequin, Morton–Franks–Williams, braid geography,
//! and the quasi-positivity certificate for fibered strongly quasi-positive
//! link types.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::HomflyPolynomial;

/// A comparison `lhs ≤ rhs`; `sharp` when equality is attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub sharp: bool,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Self { name: name.into(), lhs, rhs, holds: lhs <= rhs, sharp: lhs == rhs }
    }
}

/// `a(B) ≤ n(B) - χ(L)`.
pub fn bennequin_check(braid: &BraidWord, chi_l: i64) -> BoundReport {
    BoundReport::new("bennequin", braid.algebraic_length(), braid.strands() as i64 - chi_l)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfwReport {
    /// `a - n + 1 ≤ d_-`
    pub lower: BoundReport,
    /// `d_+ ≤ a + n - 1`
    pub upper: BoundReport,
    /// Both outer inequalities are equalities.
    pub sharp: bool,
}

impl MfwReport {
    pub fn holds(&self) -> bool {
        self.lower.holds && self.upper.holds
    }
}

pub fn mfw_check(braid: &BraidWord, p: &HomflyPolynomial) -> Result<MfwReport> {
    let (d_minus, d_plus) = p.v_degrees()?;
    let a = braid.algebraic_length();
    let n = braid.strands() as i64;
    let lower = BoundReport::new("mfw-lower", a - n + 1, d_minus as i64);
    let upper = BoundReport::new("mfw-upper", d_plus as i64, a + n - 1);
    let sharp = lower.sharp && upper.sharp;
    Ok(MfwReport { lower, upper, sharp })
}

/// `⌈(d_+ - d_-)/2⌉ + 1`, a lower bound for the braid index.
pub fn mfw_braid_index_lower_bound(p: &HomflyPolynomial) -> Result<i64> {
    let (lo, hi) = p.v_degrees()?;
    let spread = (hi - lo) as i64;
    Ok((spread + 1).div_euclid(2) + 1)
}

/// `b + |a(B) - w| ≤ n(B)` for caller-supplied geography constants.
pub fn geography_check(braid: &BraidWord, b: i64, w: i64) -> BoundReport {
    BoundReport::new("geography", b + (braid.algebraic_length() - w).abs(), braid.strands() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonGenus {
    pub chi: i64,
    pub components: usize,
    pub genus: i64,
}

/// Genus of the quasi-positive surface of a braid asserted quasi-positive.
///
/// The surface has `χ = n(B) - a(B)`. For a knot this is
/// `g = (1 - n(B) + a(B)) / 2`. For links the cyclically reduced word is cut
/// along unused generators into split blocks; each block contributes a
/// connected surface with genus `(2 - r - χ) / 2` for its `r` components.
pub fn ribbon_genus_from_qp(braid: &BraidWord) -> Result<RibbonGenus> {
    let reduced = braid.cyclic_reduce();
    let mut chi = 0;
    let mut genus = 0;
    for block in split_blocks(&reduced) {
        let n = block.strands() as i64;
        let r = block.component_count() as i64;
        let c = n - block.algebraic_length();
        // n - a ≡ r (mod 2) because a ≡ n - r through the permutation sign
        let g = (2 - r - c) / 2;
        if g < 0 {
            return Err(Error::NegativeGenus(g));
        }
        chi += c;
        genus += g;
    }
    Ok(RibbonGenus { chi, components: braid.component_count(), genus })
}

/// Splits a word at every generator index it never uses.
fn split_blocks(braid: &BraidWord) -> Vec<BraidWord> {
    let n = braid.strands();
    let used = |k: usize| braid.letters().iter().any(|g| g.unsigned_abs() as usize == k);
    let mut blocks = Vec::new();
    let mut lo = 1;
    for k in 1..=n {
        if k == n || !used(k) {
            let letters = braid
                .letters()
                .iter()
                .filter(|g| (lo..k).contains(&(g.unsigned_abs() as usize)))
                .map(|&g| g.signum() * (g.abs() - lo as i32 + 1))
                .collect();
            blocks.push(BraidWord::from_raw(k - lo + 1, letters));
            lo = k + 1;
        }
    }
    blocks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QpVerdict {
    QuasiPositive,
    NotQuasiPositive,
    Inapplicable,
}

/// For a fibered strongly quasi-positive link type with maximal Euler
/// characteristic `chi_l`, a braid is quasi-positive iff `a(B) = n(B) - χ`.
pub fn qp_certificate(braid: &BraidWord, chi_l: i64, fibered_sqp: bool) -> Result<QpVerdict> {
    if !fibered_sqp {
        return Ok(QpVerdict::Inapplicable);
    }
    let a = braid.algebraic_length();
    let bound = braid.strands() as i64 - chi_l;
    match a.cmp(&bound) {
        std::cmp::Ordering::Equal => Ok(QpVerdict::QuasiPositive),
        std::cmp::Ordering::Less => Ok(QpVerdict::NotQuasiPositive),
        std::cmp::Ordering::Greater => Err(Error::BennequinViolation { writhe: a, bound }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BandGenerator;
    use crate::invariants::homfly;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn bennequin_examples() {
        let r = bennequin_check(&w(2, &[1, 1, 1]), -1);
        assert!(r.holds && r.sharp);
        let r = bennequin_check(&w(3, &[1, -2, 1, -2]), -1);
        assert_eq!((r.lhs, r.rhs, r.holds, r.sharp), (0, 4, true, false));
        let r = bennequin_check(&w(1, &[]), 1);
        assert_eq!((r.lhs, r.rhs, r.holds, r.sharp), (0, 0, true, true));
    }

    #[test]
    fn mfw_examples() {
        let t = w(2, &[1, 1, 1]);
        let r = mfw_check(&t, &homfly(&t).unwrap()).unwrap();
        assert!(r.sharp && r.holds());
        assert_eq!((r.lower.lhs, r.lower.rhs, r.upper.lhs, r.upper.rhs), (2, 2, 4, 4));
        let u = w(1, &[]);
        let r = mfw_check(&u, &homfly(&u).unwrap()).unwrap();
        assert!(r.sharp);
        assert_eq!((r.lower.lhs, r.upper.rhs), (0, 0));
    }

    #[test]
    fn braid_index_bound() {
        assert_eq!(mfw_braid_index_lower_bound(&homfly(&w(1, &[])).unwrap()).unwrap(), 1);
        assert_eq!(mfw_braid_index_lower_bound(&homfly(&w(2, &[1, 1, 1])).unwrap()).unwrap(), 2);
        // odd spread rounds up
        let p = HomflyPolynomial::new(crate::poly::LaurentPoly::from_terms([(0, 0, 1), (3, 0, 1)]));
        assert_eq!(mfw_braid_index_lower_bound(&p).unwrap(), 3);
    }

    #[test]
    fn geography_examples() {
        let t = w(2, &[1, 1, 1]);
        let r = geography_check(&t, 2, 3);
        assert!(r.holds && r.sharp);
        let r = geography_check(&t.positive_stabilize(), 2, 3);
        assert_eq!((r.lhs, r.rhs, r.sharp), (3, 3, true));
        let r = geography_check(&t.conjugate(&w(2, &[1])).unwrap(), 2, 3);
        assert!(r.holds && r.sharp);
    }

    #[test]
    fn ribbon_genus_examples() {
        assert_eq!(ribbon_genus_from_qp(&w(2, &[1, 1, 1])).unwrap().genus, 1);
        assert_eq!(ribbon_genus_from_qp(&w(2, &[1])).unwrap().genus, 0);
        let band = BandGenerator::new(1, 3).expand(3).unwrap();
        let r = ribbon_genus_from_qp(&band).unwrap();
        assert_eq!(r, RibbonGenus { chi: 2, components: 2, genus: 0 });
        // Hopf band is an annulus
        assert_eq!(ribbon_genus_from_qp(&w(2, &[1, 1])).unwrap(), RibbonGenus { chi: 0, components: 2, genus: 0 });
        // σ1⁻¹ is not quasi-positive: one disk block with χ = 3 and r = 1
        assert_eq!(ribbon_genus_from_qp(&w(2, &[-1])), Err(Error::NegativeGenus(-1)));
    }

    #[test]
    fn certificate_examples() {
        let t = w(2, &[1, 1, 1]);
        assert_eq!(qp_certificate(&t, -1, true).unwrap(), QpVerdict::QuasiPositive);
        assert_eq!(qp_certificate(&t, -1, false).unwrap(), QpVerdict::Inapplicable);
        let noisy = t.positive_stabilize().concat(&w(3, &[-2, 2])).unwrap();
        assert_eq!(qp_certificate(&noisy, -1, true).unwrap(), QpVerdict::QuasiPositive);
        assert!(matches!(qp_certificate(&t, 1, true), Err(Error::BennequinViolation { .. })));
        // negative stabilization of the trefoil
        let neg = t.stabilize(false);
        assert_eq!(qp_certificate(&neg, -1, true).unwrap(), QpVerdict::NotQuasiPositive);
    }

    #[test]
    fn certificate_on_reduced_noise_word() {
        // σ1³σ2σ2⁻¹σ1⁻¹σ1⁻¹ in B3 reduces to σ1: a two-component unlink, χ = 2
        let b = w(3, &[1, 1, 1, 2, -2, -1, -1]);
        assert_eq!(b.free_reduce(), w(3, &[1]));
        assert_eq!(b.component_count(), 2);
        assert_eq!(qp_certificate(&b, 2, true).unwrap(), QpVerdict::QuasiPositive);
        // with the unknot's χ = 1 the inputs claim a(B) = 1 < n - χ = 2
        assert_eq!(qp_certificate(&b, 1, true).unwrap(), QpVerdict::NotQuasiPositive);
    }
}
