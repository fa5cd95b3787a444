//! HOMFLY-PT polynomial of braid closures by skein resolution.
//!
//! Convention: `v^{-1} P(L_+) - v P(L_-) = z P(L_0)`, `P(unknot) = 1`.
//! A word is traversed component by component from fixed base points; the
//! first crossing met from below is switched and smoothed until the diagram
//! is descending, at which point it is a split unlink.

use std::collections::HashMap;

use serde_json::Value;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// Convention tag stored alongside cached polynomials.
pub const CONVENTION: &str = "homfly-v-z:v^-1P+ - vP- = zP0";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomflyPolynomial(LaurentPoly);

impl HomflyPolynomial {
    pub fn new(poly: LaurentPoly) -> Self {
        Self(poly)
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    /// `(d_-, d_+)`: minimal and maximal `v`-exponents.
    pub fn v_degrees(&self) -> Result<(i32, i32)> {
        self.0.v_range().ok_or(Error::ZeroPolynomial)
    }

    pub fn to_json(&self) -> Value {
        self.0.to_json()
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        LaurentPoly::from_json(value).map(Self)
    }
}

impl std::fmt::Display for HomflyPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn homfly_v_degrees(p: &HomflyPolynomial) -> Result<(i32, i32)> {
    p.v_degrees()
}

/// `(v^{-1} - v) / z`, the value of adding a split unknot.
pub fn unlink_factor() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, -1, 1), (1, -1, -1)])
}

pub fn homfly(braid: &BraidWord) -> Result<HomflyPolynomial> {
    HomflyEngine::new().compute(braid)
}

/// Memoizing skein evaluator. The memo persists across `compute` calls and
/// is keyed on the canonical cyclic word; `node_cap` bounds the work of each
/// call.
#[derive(Debug, Clone)]
pub struct HomflyEngine {
    memo: HashMap<(usize, Vec<i32>), LaurentPoly>,
    node_cap: usize,
    nodes: usize,
}

impl Default for HomflyEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl HomflyEngine {
    pub fn new() -> Self {
        Self::with_node_cap(DEFAULT_NODE_CAP)
    }

    pub fn with_node_cap(node_cap: usize) -> Self {
        Self { memo: HashMap::new(), node_cap, nodes: 0 }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn compute(&mut self, braid: &BraidWord) -> Result<HomflyPolynomial> {
        self.nodes = 0;
        self.eval(braid.strands(), braid.letters().to_vec()).map(HomflyPolynomial)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        Ok(())
    }

    fn eval(&mut self, strands: usize, letters: Vec<i32>) -> Result<LaurentPoly> {
        let word = BraidWord::from_raw(strands, letters).canonical_cyclic();
        let n = word.strands();
        if n == 1 {
            return Ok(LaurentPoly::one());
        }
        let w = word.letters();

        // split along an unused generator
        if let Some(k) = (1..n as i32).find(|k| !w.iter().any(|g| g.abs() == *k)) {
            let left: Vec<i32> = w.iter().copied().filter(|g| g.abs() < k).collect();
            let right: Vec<i32> = w.iter().filter(|g| g.abs() > k).map(|&g| g.signum() * (g.abs() - k)).collect();
            let pl = self.eval(k as usize, left)?;
            let pr = self.eval(n - k as usize, right)?;
            return Ok(&(&pl * &pr) * &unlink_factor());
        }

        // Markov destabilization of either outer generator, any sign
        for flipped in [false, true] {
            let cand = if flipped { word.flip() } else { word.clone() };
            let top = (n - 1) as i32;
            let hits: Vec<usize> = (0..cand.len()).filter(|&t| cand.letters()[t].abs() == top).collect();
            if let [k] = hits[..] {
                let l = cand.letters();
                let mut rest = l[k + 1..].to_vec();
                rest.extend_from_slice(&l[..k]);
                return self.eval(n - 1, rest);
            }
        }

        let flip = word.flip().canonical_cyclic();
        let key = (n, std::cmp::min(word.letters().to_vec(), flip.letters().to_vec()));
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        self.tick()?;
        let p = self.resolve(n, key.1.clone())?;
        self.memo.insert(key, p.clone());
        Ok(p)
    }

    fn resolve(&mut self, n: usize, mut w: Vec<i32>) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut coeff = LaurentPoly::one();
        loop {
            match first_ascending_crossing(n, &w) {
                Descent::Unlink(components) => {
                    let unlink = unlink_factor().pow(components as u32 - 1);
                    return Ok(&acc + &(&coeff * &unlink));
                }
                Descent::Switch(t) => {
                    self.tick()?;
                    let mut smoothed = w.clone();
                    smoothed.remove(t);
                    let p0 = self.eval(n, smoothed)?;
                    // P+ = v^2 P- + v z P0;  P- = v^-2 P+ - v^-1 z P0
                    let (step, smooth_term) = if w[t] > 0 {
                        (LaurentPoly::monomial(1, 2, 0), LaurentPoly::monomial(1, 1, 1))
                    } else {
                        (LaurentPoly::monomial(1, -2, 0), LaurentPoly::monomial(-1, -1, 1))
                    };
                    acc = &acc + &(&(&coeff * &smooth_term) * &p0);
                    coeff = &coeff * &step;
                    w[t] = -w[t];
                }
            }
        }
    }
}

enum Descent {
    Unlink(usize),
    Switch(usize),
}

/// Walks the closure starting each component at the top of its least
/// strand position. For `+i` the strand entering at position `i` is over;
/// for `-i` the one entering at `i + 1` is.
fn first_ascending_crossing(n: usize, w: &[i32]) -> Descent {
    let mut visited = vec![false; w.len()];
    let mut started = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if started[start] {
            continue;
        }
        components += 1;
        let mut pos = start;
        loop {
            started[pos] = true;
            for (t, &g) in w.iter().enumerate() {
                let i = g.unsigned_abs() as usize - 1;
                if pos != i && pos != i + 1 {
                    continue;
                }
                let over = if g > 0 { pos == i } else { pos == i + 1 };
                if !visited[t] {
                    visited[t] = true;
                    if !over {
                        return Descent::Switch(t);
                    }
                }
                pos = if pos == i { i + 1 } else { i };
            }
            if pos == start {
                break;
            }
        }
    }
    Descent::Unlink(components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, l: &[i32]) -> LaurentPoly {
        homfly(&BraidWord::new(n, l.to_vec()).unwrap()).unwrap().0
    }

    #[test]
    fn unknot_and_unlink() {
        assert_eq!(p(1, &[]), LaurentPoly::one());
        assert_eq!(p(2, &[]), unlink_factor());
        assert_eq!(p(3, &[]), unlink_factor().pow(2));
        assert_eq!(p(2, &[1]), LaurentPoly::one());
        assert_eq!(p(2, &[-1]), LaurentPoly::one());
        assert_eq!(p(3, &[1, -2]), LaurentPoly::one());
    }

    #[test]
    fn hopf_and_trefoil_by_hand() {
        // P(σ1²) = v²·P(unlink₂) + vz·P(unknot)
        let hopf = LaurentPoly::from_terms([(1, -1, 1), (3, -1, -1), (1, 1, 1)]);
        assert_eq!(p(2, &[1, 1]), hopf);
        // P(σ1³) = v²·P(unknot) + vz·P(hopf)
        let trefoil = LaurentPoly::from_terms([(2, 0, 2), (4, 0, -1), (2, 2, 1)]);
        assert_eq!(p(2, &[1, 1, 1]), trefoil);
        let d = HomflyPolynomial(trefoil).v_degrees().unwrap();
        assert_eq!(d, (2, 4));
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let fig8 = LaurentPoly::from_terms([(-2, 0, 1), (0, 0, -1), (2, 0, 1), (0, 2, -1)]);
        assert_eq!(p(3, &[1, -2, 1, -2]), fig8);
    }

    #[test]
    fn degrees() {
        assert_eq!(HomflyPolynomial(LaurentPoly::one()).v_degrees().unwrap(), (0, 0));
        assert_eq!(HomflyPolynomial(unlink_factor()).v_degrees().unwrap(), (-1, 1));
        assert_eq!(HomflyPolynomial(LaurentPoly::zero()).v_degrees(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn node_cap_is_enforced() {
        let big = BraidWord::new(4, [1, -2, 3, 1, -2, 3, 2, -1, 3, -2].to_vec()).unwrap();
        let mut engine = HomflyEngine::with_node_cap(2);
        assert!(matches!(engine.compute(&big), Err(Error::BudgetExceeded { .. })));
        assert!(HomflyEngine::new().compute(&big).is_ok());
    }
}
