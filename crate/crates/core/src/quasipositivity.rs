//! Quasi-positive and strongly quasi-positive factorizations.
//!
//! Recognition is a budgeted semi-decision: `Found` results are always
//! re-verified through the word problem, `Not*` is returned only on a proved
//! obstruction, and `Unknown` means the budgets ran out.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::{qp_certificate, QpVerdict};
use crate::braid::{BandGenerator, BraidWord};
use crate::error::{Error, Result};
use crate::free_group::{braid_words_equal, is_trivial, ArtinImage};

/// One factor `w σ_i w^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QpFactor {
    pub conjugator: Vec<i32>,
    pub generator: usize,
}

impl QpFactor {
    pub fn word(&self, strands: usize) -> Result<BraidWord> {
        let w = BraidWord::new(strands, self.conjugator.clone())?;
        let g = BraidWord::new(strands, vec![self.generator as i32])?;
        g.conjugate(&w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpFactorization {
    pub strands: usize,
    pub factors: Vec<QpFactor>,
}

impl QpFactorization {
    pub fn product(&self) -> Result<BraidWord> {
        let mut acc = BraidWord::identity(self.strands)?;
        for f in &self.factors {
            acc = acc.concat(&f.word(self.strands)?)?;
        }
        Ok(acc)
    }

    /// JSON list of `{conjugator: [ints], generator: int}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.factors).expect("factor list serializes")
    }

    pub fn from_json(strands: usize, value: &serde_json::Value) -> Result<Self> {
        let factors: Vec<QpFactor> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse { line: None, msg: e.to_string() })?;
        Ok(Self { strands, factors })
    }
}

/// Product of band generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqpWord {
    pub strands: usize,
    pub bands: Vec<BandGenerator>,
}

impl SqpWord {
    pub fn expand(&self) -> Result<BraidWord> {
        let mut acc = BraidWord::identity(self.strands)?;
        for b in &self.bands {
            acc = acc.concat(&b.expand(self.strands)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SqpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for b in &self.bands {
            write!(f, " {b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Obstruction {
    NegativeAlgebraicLength {
        length: i64,
    },
    /// Zero algebraic length forces the empty product.
    NontrivialWithZeroLength,
    /// The permutation needs more transpositions than there are factors.
    PermutationTooLong {
        transpositions: usize,
        factors: usize,
    },
    Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QpSearch {
    Found(QpFactorization),
    NotQp(Obstruction),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SqpSearch {
    Found(SqpWord),
    NotSqp(Obstruction),
    Unknown,
}

pub fn verify_qp_factorization(braid: &BraidWord, f: &QpFactorization) -> Result<bool> {
    if braid.strands() != f.strands {
        return Err(Error::StrandMismatch(braid.strands(), f.strands));
    }
    braid_words_equal(braid, &f.product()?)
}

/// Caller-supplied Theorem-style certificate data: `(χ(L), fibered_sqp)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateData {
    pub chi_l: i64,
    pub fibered_sqp: bool,
}

fn length_obstruction(braid: &BraidWord) -> Option<Obstruction> {
    let a = braid.algebraic_length();
    if a < 0 {
        return Some(Obstruction::NegativeAlgebraicLength { length: a });
    }
    if a == 0 && !is_trivial(braid) {
        return Some(Obstruction::NontrivialWithZeroLength);
    }
    None
}

fn transpositions_needed(braid: &BraidWord) -> usize {
    braid.strands() - braid.component_count()
}

pub fn search_qp_factorization(
    braid: &BraidWord,
    conjugator_budget: usize,
    node_budget: usize,
    certificate: Option<CertificateData>,
) -> QpSearch {
    if let Some(o) = length_obstruction(braid) {
        return QpSearch::NotQp(o);
    }
    let m = braid.algebraic_length() as usize;
    let needed = transpositions_needed(braid);
    if needed > m {
        return QpSearch::NotQp(Obstruction::PermutationTooLong { transpositions: needed, factors: m });
    }
    if let Some(c) = certificate {
        if let Ok(QpVerdict::NotQuasiPositive) = qp_certificate(braid, c.chi_l, c.fibered_sqp) {
            return QpSearch::NotQp(Obstruction::Certificate);
        }
    }
    let n = braid.strands();
    let mut search = FactorSearch::new(braid, node_budget);
    for max_len in 0..=conjugator_budget {
        let candidates: Vec<(QpFactor, BraidWord)> = conjugators(n, max_len)
            .into_iter()
            .flat_map(|w| (1..n).map(move |i| QpFactor { conjugator: w.clone(), generator: i }))
            .map(|f| {
                let word = f.word(n).expect("in-range factor").free_reduce();
                (f, word)
            })
            .collect();
        match search.run(candidates) {
            Outcome::Found(factors) => {
                let f = QpFactorization { strands: n, factors };
                assert!(
                    verify_qp_factorization(braid, &f).unwrap_or(false),
                    "search produced an invalid factorization"
                );
                return QpSearch::Found(f);
            }
            Outcome::Exhausted => continue,
            Outcome::OutOfBudget => return QpSearch::Unknown,
        }
    }
    QpSearch::Unknown
}

pub fn sqp_recognize(braid: &BraidWord, node_budget: usize) -> SqpSearch {
    if let Some(o) = length_obstruction(braid) {
        return SqpSearch::NotSqp(o);
    }
    let n = braid.strands();
    let candidates: Vec<(BandGenerator, BraidWord)> =
        BandGenerator::all(n).map(|b| (b, b.expand(n).expect("in-range band"))).collect();
    match FactorSearch::new(braid, node_budget).run(candidates) {
        Outcome::Found(bands) => {
            let s = SqpWord { strands: n, bands };
            let ok = s.expand().and_then(|e| braid_words_equal(braid, &e)).unwrap_or(false);
            assert!(ok, "search produced an invalid band word");
            SqpSearch::Found(s)
        }
        Outcome::Exhausted | Outcome::OutOfBudget => SqpSearch::Unknown,
    }
}

/// Freely reduced words of length ≤ `max_len`, ordered by length and then
/// by letters under `1 < -1 < 2 < -2 < …`.
fn conjugators(strands: usize, max_len: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &g in &alphabet {
                if w.last() == Some(&-g) {
                    continue;
                }
                let mut x: Vec<i32> = w.clone();
                x.push(g);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

enum Outcome<T> {
    Found(Vec<T>),
    Exhausted,
    OutOfBudget,
}

/// Depth-first peeling of factors from the left of the target, in candidate
/// order, so the first hit is the least factorization in that order.
struct FactorSearch {
    target: BraidWord,
    factors: usize,
    nodes: usize,
    node_budget: usize,
}

struct Candidates<T> {
    list: Vec<(T, BraidWord)>,
    by_image: HashMap<ArtinImage, usize>,
}

impl FactorSearch {
    fn new(target: &BraidWord, node_budget: usize) -> Self {
        Self { target: target.free_reduce(), factors: target.algebraic_length().max(0) as usize, nodes: 0, node_budget }
    }

    fn run<T: Clone>(&mut self, raw: Vec<(T, BraidWord)>) -> Outcome<T> {
        // group elements repeat across conjugators; keep the first of each
        let mut by_image = HashMap::new();
        let mut list = Vec::new();
        for (t, w) in raw {
            let img = ArtinImage::of(&w);
            if let std::collections::hash_map::Entry::Vacant(e) = by_image.entry(img) {
                e.insert(list.len());
                list.push((t, w));
            }
        }
        let cands = Candidates { list, by_image };
        let mut dead = HashSet::new();
        let mut path = Vec::new();
        let target = self.target.clone();
        match self.dfs(&cands, &target, self.factors, &mut dead, &mut path) {
            Some(true) => Outcome::Found(path.into_iter().map(|k| cands.list[k].0.clone()).collect()),
            Some(false) => Outcome::Exhausted,
            None => Outcome::OutOfBudget,
        }
    }

    /// `Some(found)`, or `None` when the node budget is spent.
    fn dfs<T>(
        &mut self,
        cands: &Candidates<T>,
        rest: &BraidWord,
        left: usize,
        dead: &mut HashSet<(ArtinImage, usize)>,
        path: &mut Vec<usize>,
    ) -> Option<bool> {
        let img = ArtinImage::of(rest);
        if left == 0 {
            return Some(img.is_identity());
        }
        if left == 1 {
            if let Some(&k) = cands.by_image.get(&img) {
                path.push(k);
                return Some(true);
            }
            return Some(false);
        }
        if transpositions_needed(rest) > left {
            return Some(false);
        }
        let key = (img, left);
        if dead.contains(&key) {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return None;
        }
        for (k, (_, f)) in cands.list.iter().enumerate() {
            let next = f.inverse().concat(rest).expect("same strands").free_reduce();
            path.push(k);
            if self.dfs(cands, &next, left - 1, dead, path)? {
                return Some(true);
            }
            path.pop();
        }
        dead.insert(key);
        Some(false)
    }
}
