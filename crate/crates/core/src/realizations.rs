//! Building one, a constrained, or all labeled realizations of a graphic
//! sequence.
//!
//! Enumeration explores edge choices depth-first with the branch position h
//! descending; each branch owns copies of the sequence and the chosen edge
//! set, while the forbidden set accumulates the edges opened by earlier
//! (larger-h) siblings. Only branches that empty the sequence emit a graph,
//! so a non-graphic input yields an empty stream.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graphicality::check_bh;
use crate::reductions::{lay_off_with_targets, two_reduce};
use crate::sequence::{DegreeSequence, Label};

/// An undirected simple graph on vertices 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl LabeledGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Precondition("self-loops are not allowed"));
            }
            if a < 1 || b < 1 || a > n || b > n {
                return Err(Error::VertexOutOfRange(a.max(b)));
            }
            set.insert(pair(a, b));
        }
        Ok(LabeledGraph { n, edges: set })
    }

    pub(crate) fn from_parts(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        LabeledGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&pair(a, b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Degrees of vertices 1..=n in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut degs = vec![0; self.n];
        for &(a, b) in &self.edges {
            degs[a - 1] += 1;
            degs[b - 1] += 1;
        }
        degs
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether vertex-wise degrees match the sequence entries (vertices
    /// without an entry must be isolated).
    pub fn realizes(&self, seq: &DegreeSequence) -> bool {
        let s = seq.normalize();
        if self.n != s.vertex_count() {
            return false;
        }
        let degs = self.degrees();
        (1..=self.n).all(|v| degs[v - 1] == s.value_of(v).unwrap_or(0))
    }

    /// Space-separated `a-b` pairs in lexicographic order.
    pub fn edge_line(&self) -> String {
        self.edges
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Kleitman–Wang realization, optionally laying off a chosen entry first and
/// the position-1 entry from then on.
fn kw_realize_from(seq: &DegreeSequence, first: Option<Label>) -> Result<LabeledGraph> {
    let n = seq.vertex_count();
    let mut edges = BTreeSet::new();
    let mut cur = seq.clone();
    let mut first = first.filter(|&f| cur.position_of(f).is_some());
    while !cur.is_empty() {
        let source = match first.take() {
            Some(f) => f,
            None => cur.label_at(1).expect("nonempty"),
        };
        let (next, targets) = lay_off_with_targets(&cur, source)?;
        for t in targets {
            edges.insert(pair(source, t));
        }
        cur = next;
    }
    Ok(LabeledGraph::from_parts(n, edges))
}

/// Deterministic realization built by repeatedly laying off the position-1
/// entry, adding an edge towards every decremented label.
pub fn realize_kw(seq: &DegreeSequence) -> Result<LabeledGraph> {
    let s = seq.normalize();
    if !check_bh(&s).is_graphic() {
        return Err(Error::NotGraphic);
    }
    kw_realize_from(&s, None)
}

/// Degree-preserving rotation: picks a neighbor w of j and a neighbor v of
/// vertex 1 with (v, w) absent, then swaps (1, v) and (j, w) for (1, j) and
/// (v, w).
pub fn edge_rotation(g: &LabeledGraph, j: usize) -> Result<LabeledGraph> {
    if j < 1 || j > g.n() {
        return Err(Error::VertexOutOfRange(j));
    }
    if j == 1 {
        return Err(Error::Precondition("j must differ from vertex 1"));
    }
    if g.contains_edge(1, j) {
        return Err(Error::Precondition("(1, j) must not be an edge"));
    }
    let j_neighbors = g.neighbors(j);
    if j_neighbors.is_empty() {
        return Err(Error::Precondition("j must have a neighbor"));
    }
    for &w in &j_neighbors {
        for &v in &g.neighbors(1) {
            if v != w && !g.contains_edge(v, w) {
                let mut edges = g.edges.clone();
                edges.remove(&pair(1, v));
                edges.remove(&pair(j, w));
                edges.insert(pair(1, j));
                edges.insert(pair(v, w));
                return Ok(LabeledGraph::from_parts(g.n, edges));
            }
        }
    }
    Err(Error::NoRotationPair)
}

/// A realization containing the edge between the position-1 label and `j`.
/// Inside the first d_1 + 1 positions the plain KW construction already adds
/// it; beyond them the pair is 2-reduced first and the rest realized with
/// the reduced top laid off before anything else.
pub fn realize_with_edge(seq: &DegreeSequence, j: Label) -> Result<LabeledGraph> {
    let s = seq.normalize();
    if !check_bh(&s).is_graphic() {
        return Err(Error::NotGraphic);
    }
    let pj = s.position_of(j).ok_or(Error::UnknownLabel(j))?;
    let top = s.label_at(1).expect("nonempty");
    if j == top {
        return Err(Error::Precondition(
            "j must differ from the position-1 label",
        ));
    }
    let d1 = s.max_value();
    if pj <= d1 + 1 {
        return kw_realize_from(&s, None);
    }
    let reduced = two_reduce(&s, top, j)?;
    let rest = kw_realize_from(&reduced, Some(top))?;
    let mut edges: BTreeSet<(usize, usize)> = rest.edges;
    edges.insert(pair(top, j));
    Ok(LabeledGraph::from_parts(s.vertex_count(), edges))
}

/// Replays a known realization edge by edge: always take the position-1
/// label, pick its unused edge whose partner sits rightmost, and 2-reduce.
/// Returns the edges in that order; their set equals the graph's edge set.
pub fn reconstruct_order(seq: &DegreeSequence, g: &LabeledGraph) -> Result<Vec<(usize, usize)>> {
    let s = seq.normalize();
    if !g.realizes(&s) {
        return Err(Error::NotARealization);
    }
    let mut remaining: BTreeSet<(usize, usize)> = g.edges.clone();
    let mut order = Vec::with_capacity(remaining.len());
    let mut cur = s;
    while !remaining.is_empty() {
        let i = cur.label_at(1).expect("entries remain while edges do");
        let partner = (1..=cur.len())
            .rev()
            .filter_map(|p| cur.label_at(p))
            .find(|&l| l != i && remaining.contains(&pair(i, l)))
            .ok_or(Error::NotARealization)?;
        let e = pair(i, partner);
        remaining.remove(&e);
        order.push(e);
        cur = two_reduce(&cur, i, partner)?;
    }
    Ok(order)
}

struct Frame {
    seq: DegreeSequence,
    chosen: BTreeSet<(usize, usize)>,
    forbidden: HashSet<(usize, usize)>,
    top: Label,
    h: usize,
    h_min: usize,
}

impl Frame {
    fn new(
        seq: DegreeSequence,
        chosen: BTreeSet<(usize, usize)>,
        forbidden: HashSet<(usize, usize)>,
    ) -> Self {
        let top = seq.label_at(1).expect("frames hold nonempty sequences");
        let h = seq.len();
        let h_min = seq.value_at(1) + 1;
        Frame {
            seq,
            chosen,
            forbidden,
            top,
            h,
            h_min,
        }
    }
}

/// Lazy stream over all labeled realizations, each exactly once, in the
/// serial reference order.
pub struct Enumeration {
    n: usize,
    empty_graph_pending: bool,
    stack: Vec<Frame>,
}

impl Iterator for Enumeration {
    type Item = LabeledGraph;

    fn next(&mut self) -> Option<LabeledGraph> {
        if self.empty_graph_pending {
            self.empty_graph_pending = false;
            return Some(LabeledGraph::from_parts(self.n, BTreeSet::new()));
        }
        while let Some(frame) = self.stack.last_mut() {
            if frame.h < frame.h_min {
                self.stack.pop();
                continue;
            }
            let h = frame.h;
            frame.h -= 1;
            let j = frame.seq.label_at(h).expect("h within live length");
            let e = pair(frame.top, j);
            if frame.chosen.contains(&e) || frame.forbidden.contains(&e) {
                continue;
            }
            // Younger siblings must not reuse this edge; the branch itself
            // keeps the forbidden set as it stood before the edge opened.
            let child_forbidden = frame.forbidden.clone();
            frame.forbidden.insert(e);
            let next_seq = two_reduce(&frame.seq, frame.top, j).expect("live entries are positive");
            let mut chosen = frame.chosen.clone();
            chosen.insert(e);
            if next_seq.is_empty() {
                return Some(LabeledGraph::from_parts(self.n, chosen));
            }
            self.stack
                .push(Frame::new(next_seq, chosen, child_forbidden));
        }
        None
    }
}

/// All realizations of the sequence on its labeled vertex set, exactly once.
pub fn enumerate_all(seq: &DegreeSequence) -> Enumeration {
    let s = seq.normalize();
    let n = s.vertex_count();
    if s.is_empty() {
        return Enumeration {
            n,
            empty_graph_pending: true,
            stack: Vec::new(),
        };
    }
    Enumeration {
        n,
        empty_graph_pending: false,
        stack: vec![Frame::new(s, BTreeSet::new(), HashSet::new())],
    }
}

pub fn count_realizations(seq: &DegreeSequence) -> usize {
    enumerate_all(seq).count()
}
