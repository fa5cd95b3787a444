//! Paths of positive Markov moves and single-generator conjugations between
//! braids, found by bidirectional breadth-first search.
//!
//! Every move preserves the transverse link type of the closure, hence the
//! self-linking number. States are free-reduced words; the two frontiers
//! meet on the canonical cyclic form per strand count.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free_group::braid_words_equal;
use crate::invariants::self_linking;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "move", content = "generator", rename_all = "kebab-case")]
pub enum Move {
    /// `W ↦ g W g^{-1}` for the signed generator `g`.
    ConjugateBy(i32),
    PositiveStabilize,
    PositiveDestabilize,
}

impl Move {
    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord> {
        match *self {
            Move::ConjugateBy(g) => {
                let c = BraidWord::new(w.strands(), vec![g])?;
                Ok(w.conjugate(&c)?.free_reduce())
            }
            Move::PositiveStabilize => Ok(w.positive_stabilize()),
            Move::PositiveDestabilize => Ok(w.positive_destabilize()?.free_reduce()),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::ConjugateBy(g) => write!(f, "conjugate by {g}"),
            Move::PositiveStabilize => write!(f, "positive stabilize"),
            Move::PositiveDestabilize => write!(f, "positive destabilize"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovePath {
    pub start: BraidWord,
    pub moves: Vec<Move>,
    pub end: BraidWord,
}

impl MovePath {
    /// One line per step: the move and the word it produces.
    pub fn script(&self) -> String {
        let mut out = format!("start  {}\n", self.start);
        let mut cur = self.start.clone();
        for (k, m) in self.moves.iter().enumerate() {
            match m.apply(&cur) {
                Ok(next) => {
                    out += &format!("{:>4}.  {m:<22} -> {next}\n", k + 1);
                    cur = next;
                }
                Err(e) => {
                    out += &format!("{:>4}.  {m:<22} !! {e}\n", k + 1);
                    break;
                }
            }
        }
        out += &format!("end    {}\n", self.end);
        out
    }
}

/// Replays `path.moves` from `path.start`. `Ok(true)` iff the result equals
/// `path.end` in the braid group and self-linking never changes.
pub fn replay(path: &MovePath) -> Result<bool> {
    let sl = self_linking(&path.start);
    let mut cur = path.start.clone();
    for (step, m) in path.moves.iter().enumerate() {
        cur = m.apply(&cur).map_err(|e| Error::MalformedMove { step, reason: e.to_string() })?;
        if self_linking(&cur) != sl {
            return Ok(false);
        }
    }
    if cur.strands() != path.end.strands() {
        return Ok(false);
    }
    braid_words_equal(&cur, &path.end)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Obstructed {
    SelfLinking { first: i64, second: i64 },
    Components { first: usize, second: usize },
}

impl fmt::Display for Obstructed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstructed::SelfLinking { first, second } => write!(f, "self-linking {first} != {second}"),
            Obstructed::Components { first, second } => write!(f, "components {first} != {second}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connection {
    Path(MovePath),
    Obstructed(Obstructed),
    Unknown,
}

pub const DEFAULT_DEPTH: usize = 6;
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

type Key = (usize, Vec<i32>);

struct Node {
    word: BraidWord,
    parent: Option<(usize, Move)>,
}

/// Expansion is deduplicated on exact free-reduced words: a generator
/// conjugation is not a function of the cyclic class, so keeping a single
/// representative per class would lose successors. Classes are only used to
/// detect where the two frontiers meet.
struct Frontier {
    nodes: Vec<Node>,
    seen: HashSet<BraidWord>,
    classes: HashMap<Key, usize>,
    layer: Vec<usize>,
}

impl Frontier {
    fn new(root: &BraidWord) -> Self {
        let word = root.free_reduce();
        let seen = HashSet::from([word.clone()]);
        let classes = HashMap::from([(key(&word), 0)]);
        Self { nodes: vec![Node { word, parent: None }], seen, classes, layer: vec![0] }
    }

    fn insert(&mut self, word: BraidWord, parent: (usize, Move)) -> Option<(usize, Key)> {
        if !self.seen.insert(word.clone()) {
            return None;
        }
        let idx = self.nodes.len();
        let k = key(&word);
        self.classes.entry(k.clone()).or_insert(idx);
        self.nodes.push(Node { word, parent: Some(parent) });
        Some((idx, k))
    }

    /// Moves from the root to node `k`.
    fn moves_to(&self, mut k: usize) -> Vec<Move> {
        let mut out = Vec::new();
        while let Some((p, m)) = self.nodes[k].parent {
            out.push(m);
            k = p;
        }
        out.reverse();
        out
    }

    /// Moves from node `k` back to the root.
    fn moves_from(&self, mut k: usize) -> Vec<Move> {
        let mut out = Vec::new();
        while let Some((p, m)) = self.nodes[k].parent {
            match m {
                Move::ConjugateBy(g) => out.push(Move::ConjugateBy(-g)),
                Move::PositiveStabilize => out.push(Move::PositiveDestabilize),
                Move::PositiveDestabilize => {
                    // parent = u·σ_{n-1} read from a rotation; restore it and undo the rotation
                    out.push(Move::PositiveStabilize);
                    out.extend(unrotate_moves(&self.nodes[p].word));
                }
            }
            k = p;
        }
        out
    }
}

fn key(w: &BraidWord) -> Key {
    (w.strands(), w.canonical_cyclic().letters().to_vec())
}

/// Conjugations taking the rotation `s·p` produced by destabilizing `w = p·s`
/// (with the destabilized letter at the end of `s·p`) back to `w`.
fn unrotate_moves(w: &BraidWord) -> Vec<Move> {
    let top = (w.strands() - 1) as i32;
    let k = w.letters().iter().position(|&g| g == top).expect("destabilizable parent");
    // rotation started right after position k: prefix p = w[..=k]
    w.letters()[..=k].iter().rev().map(|&g| Move::ConjugateBy(g)).collect()
}

/// Conjugations taking `w` to its canonical cyclic form.
fn canonicalize_moves(w: &BraidWord) -> Vec<Move> {
    let mut moves = Vec::new();
    let mut cur = w.free_reduce().letters().to_vec();
    while cur.len() >= 2 && cur[0] == -cur[cur.len() - 1] {
        // g·v·g⁻¹ ↦ v
        moves.push(Move::ConjugateBy(-cur[0]));
        cur = cur[1..cur.len() - 1].to_vec();
    }
    let target = crate::braid::least_rotation(&cur);
    let mut shift = 0;
    while shift < cur.len() {
        let mut r = cur.clone();
        r.rotate_left(shift);
        if r == target {
            break;
        }
        shift += 1;
    }
    // moving the first letter g to the end is conjugation by g⁻¹
    for &g in &cur[..shift] {
        moves.push(Move::ConjugateBy(-g));
    }
    moves
}

fn invert_conjugations(moves: &[Move]) -> Vec<Move> {
    moves
        .iter()
        .rev()
        .map(|m| match m {
            Move::ConjugateBy(g) => Move::ConjugateBy(-g),
            other => *other,
        })
        .collect()
}

/// Searches for a path of positive Markov moves and conjugations from `b1`
/// to `b2`. At most `depth_budget` search layers are expanded in total,
/// alternating sides; `node_budget` caps the number of stored states.
pub fn transverse_connect(b1: &BraidWord, b2: &BraidWord, depth_budget: usize, node_budget: usize) -> Connection {
    let (sl1, sl2) = (self_linking(b1), self_linking(b2));
    if sl1 != sl2 {
        return Connection::Obstructed(Obstructed::SelfLinking { first: sl1, second: sl2 });
    }
    let (c1, c2) = (b1.component_count(), b2.component_count());
    if c1 != c2 {
        return Connection::Obstructed(Obstructed::Components { first: c1, second: c2 });
    }
    let cap = b1.strands().max(b2.strands()) + depth_budget;

    let mut fwd = Frontier::new(b1);
    let mut bwd = Frontier::new(b2);
    if let Some(&j) = bwd.classes.get(&key(&fwd.nodes[0].word)) {
        return finish(b1, b2, &fwd, 0, &bwd, j);
    }
    let mut stored = 2;
    for round in 0..depth_budget {
        let forward = round % 2 == 0;
        let (side, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        if side.layer.is_empty() {
            continue;
        }
        let mut next = Vec::new();
        let mut meet: Option<(usize, usize)> = None;
        for k in std::mem::take(&mut side.layer) {
            let word = side.nodes[k].word.clone();
            for m in moves_for(&word, cap) {
                let Ok(child) = m.apply(&word) else { continue };
                let Some((idx, ck)) = side.insert(child, (k, m)) else { continue };
                next.push(idx);
                stored += 1;
                if meet.is_none() {
                    if let Some(&j) = other.classes.get(&ck) {
                        meet = Some((idx, j));
                    }
                }
                if stored > node_budget {
                    return Connection::Unknown;
                }
            }
        }
        side.layer = next;
        if let Some((here, there)) = meet {
            return if forward {
                finish(b1, b2, &fwd, here, &bwd, there)
            } else {
                finish(b1, b2, &fwd, there, &bwd, here)
            };
        }
    }
    Connection::Unknown
}

/// Conjugations by `±1..±(n-1)`, then stabilization, then destabilization.
fn moves_for(w: &BraidWord, strand_cap: usize) -> Vec<Move> {
    let mut out: Vec<Move> =
        (1..w.strands() as i32).flat_map(|i| [Move::ConjugateBy(i), Move::ConjugateBy(-i)]).collect();
    if w.strands() < strand_cap {
        out.push(Move::PositiveStabilize);
    }
    if w.positive_destabilize().is_ok() {
        out.push(Move::PositiveDestabilize);
    }
    out
}

fn finish(b1: &BraidWord, b2: &BraidWord, fwd: &Frontier, i: usize, bwd: &Frontier, j: usize) -> Connection {
    let mut raw = fwd.moves_to(i);
    raw.extend(canonicalize_moves(&fwd.nodes[i].word));
    raw.extend(invert_conjugations(&canonicalize_moves(&bwd.nodes[j].word)));
    raw.extend(bwd.moves_from(j));
    // adjacent inverse conjugations cancel on free-reduced words
    let mut moves: Vec<Move> = Vec::with_capacity(raw.len());
    for m in raw {
        match (moves.last(), m) {
            (Some(Move::ConjugateBy(g)), Move::ConjugateBy(h)) if *g == -h => {
                moves.pop();
            }
            _ => moves.push(m),
        }
    }
    let path = MovePath { start: b1.clone(), moves, end: b2.clone() };
    assert!(replay(&path).unwrap_or(false), "constructed path failed replay: {}", path.script());
    Connection::Path(path)
}
