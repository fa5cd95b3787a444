//! HOMFLY-PT checked against an independent Kauffman-bracket state sum.
//!
//! With `v = t`, `z = t^{1/2} - t^{-1/2}` the polynomial specializes to the
//! Jones polynomial. The oracle computes Jones from `2^c` smoothings of the
//! closed-braid diagram in the variable `A` (`t = A^{-4}`), so both sides are
//! compared as Laurent polynomials in `A` after clearing `z` denominators.

use std::collections::BTreeMap;

use braidkit::invariants::{homfly, HomflyEngine};
use braidkit::BraidWord;
use num_traits::ToPrimitive;
use proptest::prelude::*;

type APoly = BTreeMap<i32, i64>;

fn add_term(p: &mut APoly, e: i32, c: i64) {
    if c == 0 {
        return;
    }
    let slot = p.entry(e).or_insert(0);
    *slot += c;
    if *slot == 0 {
        p.remove(&e);
    }
}

fn mul(a: &APoly, b: &APoly) -> APoly {
    let mut out = APoly::new();
    for (&e1, &c1) in a {
        for (&e2, &c2) in b {
            add_term(&mut out, e1 + e2, c1 * c2);
        }
    }
    out
}

fn pow(a: &APoly, k: u32) -> APoly {
    let mut out = APoly::from([(0, 1)]);
    for _ in 0..k {
        out = mul(&out, a);
    }
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Loops of the closed braid with each crossing smoothed vertically
/// (`true`) or horizontally.
fn loops(n: usize, word: &[i32], vertical: &[bool]) -> usize {
    let levels = word.len().max(1);
    let node = |t: usize, p: usize| (t % levels) * n + p;
    let mut parent: Vec<usize> = (0..levels * n).collect();
    if word.is_empty() {
        return n;
    }
    for (t, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        for p in 0..n {
            if p != i && p != i + 1 {
                union(&mut parent, node(t, p), node(t + 1, p));
            }
        }
        if vertical[t] {
            union(&mut parent, node(t, i), node(t + 1, i));
            union(&mut parent, node(t, i + 1), node(t + 1, i + 1));
        } else {
            union(&mut parent, node(t, i), node(t, i + 1));
            union(&mut parent, node(t + 1, i), node(t + 1, i + 1));
        }
    }
    let mut roots: Vec<usize> = (0..levels * n).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Jones polynomial in `A` via the bracket: the A-smoothing of a positive
/// crossing is the oriented (vertical) one.
fn jones_by_bracket(n: usize, word: &[i32]) -> APoly {
    let c = word.len();
    let d = APoly::from([(2, -1), (-2, -1)]);
    let mut bracket = APoly::new();
    for state in 0u32..(1 << c) {
        let mut a_count = 0i32;
        let mut vertical = vec![false; c];
        for t in 0..c {
            let a_smoothing = state >> t & 1 == 1;
            if a_smoothing {
                a_count += 1;
            }
            vertical[t] = a_smoothing == (word[t] > 0);
        }
        let l = loops(n, word, &vertical);
        let term = mul(&APoly::from([(a_count - (c as i32 - a_count), 1)]), &pow(&d, l as u32 - 1));
        for (e, k) in term {
            add_term(&mut bracket, e, k);
        }
    }
    let writhe: i32 = word.iter().map(|g| g.signum()).sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    mul(&APoly::from([(-3 * writhe, sign)]), &bracket)
}

/// `(P(v = A^{-4}, z = A^{-2} - A^2) · z^k, k)` with `k` clearing negative
/// powers of `z`.
fn specialize(p: &braidkit::HomflyPolynomial) -> (APoly, u32) {
    let poly = p.poly();
    let k = (-poly.z_range().unwrap().0).max(0) as u32;
    let z = APoly::from([(-2, 1), (2, -1)]);
    let mut out = APoly::new();
    for (v, ze, c) in poly.terms() {
        let c = c.to_i64().unwrap();
        let term = mul(&APoly::from([(-4 * v, c)]), &pow(&z, (ze + k as i32) as u32));
        for (e, x) in term {
            add_term(&mut out, e, x);
        }
    }
    (out, k)
}

fn check_against_bracket(engine: &mut HomflyEngine, n: usize, word: &[i32]) {
    let b = BraidWord::new(n, word.to_vec()).unwrap();
    let p = engine.compute(&b).unwrap();
    let (lhs, k) = specialize(&p);
    let rhs = mul(&jones_by_bracket(n, word), &pow(&APoly::from([(-2, 1), (2, -1)]), k));
    assert_eq!(lhs, rhs, "HOMFLY/Jones mismatch for {b}: P = {p}");
}

fn all_words(n: usize, len: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&g| {
                    let mut x = w.clone();
                    x.push(g);
                    x
                })
            })
            .collect();
    }
    out
}

#[test]
fn bracket_oracle_fixes_the_trefoil() {
    // right-handed trefoil: V = t + t^3 - t^4 with t = A^{-4}
    let v = jones_by_bracket(2, &[1, 1, 1]);
    assert_eq!(v, APoly::from([(-4, 1), (-12, 1), (-16, -1)]));
    // unknot and two-component unlink
    assert_eq!(jones_by_bracket(1, &[]), APoly::from([(0, 1)]));
    assert_eq!(jones_by_bracket(2, &[]), APoly::from([(2, -1), (-2, -1)]));
}

#[test]
fn homfly_specializes_to_jones_exhaustively() {
    let mut engine = HomflyEngine::new();
    for n in 1..=4 {
        for len in 0..=5 {
            if n == 1 && len > 0 {
                continue;
            }
            for w in all_words(n, len) {
                check_against_bracket(&mut engine, n, &w);
            }
        }
    }
}

#[test]
fn torus_knot_3_4() {
    let word = [1, 2, 1, 2, 1, 2, 1, 2];
    let mut engine = HomflyEngine::new();
    check_against_bracket(&mut engine, 3, &word);
    let p = homfly(&BraidWord::new(3, word.to_vec()).unwrap()).unwrap();
    assert_eq!(p.v_degrees().unwrap(), (6, 10));
}

#[test]
fn skein_relation_at_every_position() {
    // v^{-1} P(+g) - v P(-g) = z P(deleted), all words of length ≤ 4 in B3
    let mut engine = HomflyEngine::new();
    let mut checked = 0;
    for len in 1..=4 {
        for w in all_words(3, len) {
            for pos in 0..w.len() {
                let mut plus = w.clone();
                plus[pos] = w[pos].abs();
                let mut minus = w.clone();
                minus[pos] = -w[pos].abs();
                let mut zero = w.clone();
                zero.remove(pos);
                let p = |l: Vec<i32>, e: &mut HomflyEngine| {
                    e.compute(&BraidWord::new(3, l).unwrap()).unwrap().poly().clone()
                };
                let lhs = &p(plus, &mut engine).shift(-1, 0) - &p(minus, &mut engine).shift(1, 0);
                let rhs = p(zero, &mut engine).shift(0, 1);
                assert_eq!(lhs, rhs, "skein fails for {w:?} at {pos}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

fn word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_words_match_bracket(b in word_strategy(4, 9)) {
        let mut engine = HomflyEngine::new();
        check_against_bracket(&mut engine, b.strands(), b.letters());
    }

    #[test]
    fn markov_invariance(b in word_strategy(4, 8), c in prop::collection::vec(1..4i32, 0..4), signs in prop::collection::vec(any::<bool>(), 4)) {
        let n = b.strands() as i32;
        let conj: Vec<i32> = c.iter().zip(&signs).map(|(&g, &s)| {
            let g = (g - 1) % (n - 1) + 1;
            if s { g } else { -g }
        }).collect();
        let w = BraidWord::new(b.strands(), conj).unwrap();
        let p = homfly(&b).unwrap();
        prop_assert_eq!(&homfly(&b.conjugate(&w).unwrap()).unwrap(), &p);
        prop_assert_eq!(&homfly(&b.stabilize(true)).unwrap(), &p);
        prop_assert_eq!(&homfly(&b.stabilize(false)).unwrap(), &p);
    }
}
