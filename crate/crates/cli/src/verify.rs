//! The invariant suite behind `corpus-verify`.

use braidkit::bounds::{
    bennequin_check, geography_check, mfw_braid_index_lower_bound, mfw_check, qp_certificate, QpVerdict,
};
use braidkit::invariants::{closure_stats, self_linking, HomflyEngine};
use braidkit::markov::{replay, transverse_connect, Connection};
use braidkit::quasipositivity::{search_qp_factorization, QpSearch};
use braidkit::BraidWord;
use serde::Serialize;

use crate::cache::HomflyCache;
use crate::corpus::CorpusEntry;
use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub id: String,
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    pub conj: usize,
    pub nodes: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub rows: Vec<CheckRow>,
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
}

impl Report {
    fn push(&mut self, id: &str, check: &'static str, status: Status, detail: String) {
        match status {
            Status::Pass => self.passed += 1,
            Status::Fail => self.failed += 1,
            Status::Unknown => self.unknown += 1,
        }
        self.rows.push(CheckRow { id: id.to_string(), check, status, detail });
    }

    fn check(&mut self, id: &str, check: &'static str, ok: bool, detail: String) {
        self.push(id, check, if ok { Status::Pass } else { Status::Fail }, detail);
    }
}

struct Homfly<'a> {
    engine: HomflyEngine,
    cache: Option<&'a mut HomflyCache>,
}

impl Homfly<'_> {
    fn get(&mut self, b: &BraidWord) -> CliResult<braidkit::HomflyPolynomial> {
        match self.cache.as_deref_mut() {
            Some(c) => c.get_or_compute(&mut self.engine, b),
            None => Ok(self.engine.compute(b)?),
        }
    }
}

pub fn verify_corpus(entries: &[CorpusEntry], budgets: Budgets, cache: Option<&mut HomflyCache>) -> Report {
    let mut report = Report::default();
    let mut homfly = Homfly { engine: HomflyEngine::with_node_cap(budgets.nodes), cache };
    for e in entries {
        verify_entry(e, budgets, &mut homfly, &mut report);
    }
    report
}

fn verify_entry(e: &CorpusEntry, budgets: Budgets, homfly: &mut Homfly, r: &mut Report) {
    let id = e.id.as_str();
    let b = &e.braid;
    let stats = closure_stats(b);
    let sl = self_linking(b);

    r.check(
        id,
        "self-linking",
        sl == b.algebraic_length() - b.strands() as i64 && stats.seifert_circles as usize == b.strands(),
        format!("sl = {sl}"),
    );
    if b.is_positive() {
        r.check(
            id,
            "positive-sharpness",
            sl == -stats.euler_char_seifert,
            format!("sl = {sl}, chi = {}", stats.euler_char_seifert),
        );
    }

    if let Some(chi) = e.metadata.chi_l {
        let rep = bennequin_check(b, chi);
        let ok = rep.holds && (!b.is_positive() || rep.sharp);
        r.check(id, "bennequin", ok, format!("{} <= {} (sharp: {})", rep.lhs, rep.rhs, rep.sharp));
    }

    match homfly.get(b) {
        Ok(p) => {
            match mfw_check(b, &p) {
                Ok(m) => r.check(
                    id,
                    "mfw",
                    m.holds(),
                    format!("{} <= {} <= {} <= {}", m.lower.lhs, m.lower.rhs, m.upper.lhs, m.upper.rhs),
                ),
                Err(err) => r.check(id, "mfw", false, err.to_string()),
            }
            if let (Some(bi), Ok(lb)) = (e.metadata.braid_index_b, mfw_braid_index_lower_bound(&p)) {
                r.check(
                    id,
                    "braid-index",
                    lb <= bi && bi <= b.strands() as i64,
                    format!("{lb} <= {bi} <= {}", b.strands()),
                );
            }
            let moved = [b.positive_stabilize(), b.stabilize(false), b.rotate_left(1)];
            let invariant = moved.iter().all(|m| homfly.get(m).map(|q| q == p).unwrap_or(false));
            r.check(id, "homfly-markov", invariant, "stabilizations and rotation".into());
        }
        Err(err) => r.push(id, "mfw", Status::Unknown, err.to_string()),
    }

    if let Some((bi, w)) = e.geography() {
        let rep = geography_check(b, bi, w);
        r.check(id, "geography", rep.holds, format!("{} <= {}", rep.lhs, rep.rhs));
    }

    if let (Some(chi), true) = (e.metadata.chi_l, e.fibered_sqp()) {
        let cert = qp_certificate(b, chi, true);
        let search = search_qp_factorization(b, budgets.conj, budgets.nodes, None);
        match (cert, search) {
            (Err(err), _) => r.check(id, "qp-certificate", false, err.to_string()),
            (Ok(_), QpSearch::Unknown) => {
                r.push(id, "qp-certificate", Status::Unknown, "search budget exhausted".into())
            }
            (Ok(v), s) => {
                let found = matches!(s, QpSearch::Found(_));
                r.check(
                    id,
                    "qp-certificate",
                    found == (v == QpVerdict::QuasiPositive),
                    format!("{v:?}, search found: {found}"),
                );
            }
        }
    } else if b.is_positive() {
        let found = matches!(search_qp_factorization(b, 0, budgets.nodes, None), QpSearch::Found(_));
        r.check(id, "qp-positive", found, "positive words are quasi-positive".into());
    }

    let target = b.positive_stabilize().rotate_left(1);
    match transverse_connect(b, &target, budgets.depth, budgets.nodes) {
        Connection::Path(path) => {
            let ok = replay(&path).unwrap_or(false);
            r.check(id, "markov-path", ok, format!("{} moves", path.moves.len()));
        }
        Connection::Obstructed(o) => r.check(id, "markov-path", false, o.to_string()),
        Connection::Unknown => r.push(id, "markov-path", Status::Unknown, "search budget exhausted".into()),
    }
}
