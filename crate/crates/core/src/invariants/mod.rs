//! Closed-braid statistics: writhe, Seifert circles, self-linking number and
//! the Euler characteristic of the Seifert-algorithm surface.

mod homfly;

pub use homfly::{
    homfly, homfly_v_degrees, unlink_factor, HomflyEngine, HomflyPolynomial, CONVENTION, DEFAULT_NODE_CAP,
};

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureStats {
    pub writhe: i64,
    pub seifert_circles: i64,
    pub components: i64,
    pub euler_char_seifert: i64,
}

/// Self-linking number `a(B) - n(B)` of the closed braid as a transverse link.
pub fn self_linking(braid: &BraidWord) -> i64 {
    braid.algebraic_length() - braid.strands() as i64
}

/// Seifert's algorithm on the closed-braid diagram gives one disk per strand
/// and one band per crossing. For positive words the surface is the fiber,
/// so its Euler characteristic is the maximal one.
pub fn closure_stats(braid: &BraidWord) -> ClosureStats {
    let n = braid.strands() as i64;
    ClosureStats {
        writhe: braid.algebraic_length(),
        seifert_circles: n,
        components: braid.component_count() as i64,
        euler_char_seifert: n - braid.len() as i64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn self_linking_examples() {
        assert_eq!(self_linking(&w(2, &[1, 1, 1])), 1);
        assert_eq!(self_linking(&w(1, &[])), -1);
        assert_eq!(self_linking(&w(3, &[1, -2, 1, -2])), -3);
    }

    #[test]
    fn stats_examples() {
        let s = closure_stats(&w(2, &[1, 1, 1]));
        assert_eq!(s, ClosureStats { writhe: 3, seifert_circles: 2, components: 1, euler_char_seifert: -1 });
        let s = closure_stats(&w(2, &[]));
        assert_eq!(s, ClosureStats { writhe: 0, seifert_circles: 2, components: 2, euler_char_seifert: 2 });
        let t34 = w(3, &[1, 2, 1, 2, 1, 2, 1, 2]);
        let s = closure_stats(&t34);
        assert_eq!(s, ClosureStats { writhe: 8, seifert_circles: 3, components: 1, euler_char_seifert: -5 });
        // genus (p-1)(q-1)/2 = 3 for the (3,4) torus knot
        assert_eq!(1 - 2 * 3, s.euler_char_seifert);
    }

    #[test]
    fn stabilization_effects() {
        let b = w(3, &[1, -2, 2, 2, -1]);
        let sl = self_linking(&b);
        let chi = closure_stats(&b).euler_char_seifert;
        assert_eq!(self_linking(&b.stabilize(true)), sl);
        assert_eq!(self_linking(&b.stabilize(false)), sl - 2);
        assert_eq!(closure_stats(&b.stabilize(true)).euler_char_seifert, chi);
        assert_eq!(closure_stats(&b.stabilize(false)).euler_char_seifert, chi);
    }
}
