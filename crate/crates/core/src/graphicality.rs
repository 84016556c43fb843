//! Decision procedures for "is this sequence graphic?".
//!
//! Every method normalizes its input, then applies the same short-circuits:
//! the empty sequence is graphic, an odd sum is not, and a maximum value
//! reaching the length is not. Methods built on weak indices additionally
//! divert sequences with d_n >= n - 1, which are exactly the complete-graph
//! sequences once the maximum is in range.

use crate::error::{Error, Result};
use crate::oracle;
use crate::reductions::lay_off;
use crate::sequence::{DegreeSequence, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Eg,
    EgStrong,
    Berge,
    Bh,
    Weak,
    TopRight,
    Kw,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Eg,
        Method::EgStrong,
        Method::Berge,
        Method::Bh,
        Method::Weak,
        Method::TopRight,
        Method::Kw,
        Method::Oracle,
    ];

    /// The analytic methods, i.e. everything except the exhaustive oracle.
    pub const ANALYTIC: [Method; 7] = [
        Method::Eg,
        Method::EgStrong,
        Method::Berge,
        Method::Bh,
        Method::Weak,
        Method::TopRight,
        Method::Kw,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Method::Eg => "eg",
            Method::EgStrong => "eg_strong",
            Method::Berge => "berge",
            Method::Bh => "bh",
            Method::Weak => "weak",
            Method::TopRight => "topright",
            Method::Kw => "kw",
            Method::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .iter()
            .copied()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Graphic,
    NotGraphic,
}

/// Why a method rejected the sequence, or where an algorithm halted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// First inequality index that failed.
    ViolatedIndex(usize),
    OddSum,
    /// d_1 >= n.
    MaxValueTooLarge {
        max: usize,
        len: usize,
    },
    TopRightHalt {
        d_top: usize,
        live: usize,
        w: usize,
    },
    KwHalt {
        d_top: usize,
        live: usize,
    },
    /// The exhaustive scan found no realization.
    ExhaustedSearch,
}

/// Shortcut taken before any inequality was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Note {
    EmptySequenceShortcut,
    OddSumShortcut,
    MaxValueShortcut,
    CompleteGraphShortcut,
}

impl Note {
    pub fn tag(&self) -> &'static str {
        match self {
            Note::EmptySequenceShortcut => "empty_sequence",
            Note::OddSumShortcut => "odd_sum",
            Note::MaxValueShortcut => "max_value",
            Note::CompleteGraphShortcut => "complete_graph",
        }
    }
}

/// Per-method verdict with the witness of the first violation, the
/// shortcuts used, and (for TopRight) the positional trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub method: Method,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub notes: Vec<Note>,
    pub positional: Option<PositionalState>,
}

impl CheckReport {
    fn graphic(method: Method) -> Self {
        CheckReport {
            method,
            verdict: Verdict::Graphic,
            witness: None,
            notes: Vec::new(),
            positional: None,
        }
    }

    fn not_graphic(method: Method, witness: Witness) -> Self {
        CheckReport {
            method,
            verdict: Verdict::NotGraphic,
            witness: Some(witness),
            notes: Vec::new(),
            positional: None,
        }
    }

    fn with_note(mut self, note: Note) -> Self {
        self.notes.push(note);
        self
    }

    pub fn is_graphic(&self) -> bool {
        self.verdict == Verdict::Graphic
    }

    /// The violated inequality index, when the witness is one.
    pub fn witness_index(&self) -> Option<usize> {
        match self.witness {
            Some(Witness::ViolatedIndex(k)) => Some(k),
            _ => None,
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "method={} verdict={}",
            self.method.tag(),
            match self.verdict {
                Verdict::Graphic => "graphic",
                Verdict::NotGraphic => "not_graphic",
            }
        )?;
        if let Some(k) = self.witness_index() {
            write!(f, " witness_k={k}")?;
        }
        Ok(())
    }
}

/// Which indices an Erdős–Gallai style scan visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexSet {
    All,
    /// m together with the right strong indices.
    StrongOnly,
}

#[allow(clippy::result_large_err)]
fn shortcut(
    seq: &DegreeSequence,
    method: Method,
) -> std::result::Result<DegreeSequence, CheckReport> {
    let s = seq.normalize();
    if s.is_empty() {
        return Err(CheckReport::graphic(method).with_note(Note::EmptySequenceShortcut));
    }
    if s.sum() % 2 == 1 {
        return Err(
            CheckReport::not_graphic(method, Witness::OddSum).with_note(Note::OddSumShortcut)
        );
    }
    if s.max_value() >= s.len() {
        return Err(CheckReport::not_graphic(
            method,
            Witness::MaxValueTooLarge {
                max: s.max_value(),
                len: s.len(),
            },
        )
        .with_note(Note::MaxValueShortcut));
    }
    Ok(s)
}

fn eg_holds(s: &DegreeSequence, k: usize) -> bool {
    let n = s.len();
    let lhs: usize = (1..=k).map(|i| s.value_at(i)).sum();
    let rhs: usize = k * (k - 1) + (k + 1..=n).map(|i| s.value_at(i).min(k)).sum::<usize>();
    lhs <= rhs
}

fn berge_holds(s: &DegreeSequence, k: usize) -> bool {
    let lhs: usize = (1..=k).map(|i| s.value_at(i)).sum();
    let rhs: usize = (1..=k).map(|i| s.corrected_conjugate_at(i)).sum();
    lhs <= rhs
}

fn bh_holds(s: &DegreeSequence, k: usize) -> bool {
    let lhs: usize = (1..=k).map(|i| s.value_at(i)).sum();
    let rhs: usize = (1..=k).map(|i| s.conjugate_at(i) - 1).sum();
    lhs <= rhs
}

fn scan(
    method: Method,
    indices: impl IntoIterator<Item = usize>,
    holds: impl Fn(usize) -> bool,
) -> CheckReport {
    for k in indices {
        if !holds(k) {
            return CheckReport::not_graphic(method, Witness::ViolatedIndex(k));
        }
    }
    CheckReport::graphic(method)
}

/// Erdős–Gallai inequalities, over all of [1..n] or over the reduced index
/// set {m} ∪ right strong.
pub fn check_eg(seq: &DegreeSequence, index_set: IndexSet) -> CheckReport {
    let method = match index_set {
        IndexSet::All => Method::Eg,
        IndexSet::StrongOnly => Method::EgStrong,
    };
    let s = match shortcut(seq, method) {
        Ok(s) => s,
        Err(report) => return report,
    };
    let ks: Vec<usize> = match index_set {
        IndexSet::All => (1..=s.len()).collect(),
        IndexSet::StrongOnly => {
            let profile = s.index_profile().expect("nonempty");
            let mut ks = profile.right_strong.clone();
            if !ks.contains(&profile.m) {
                ks.push(profile.m);
            }
            ks.sort_unstable();
            ks
        }
    };
    scan(method, ks, |k| eg_holds(&s, k))
}

/// Berge inequalities against the corrected conjugate, for k in [1..n].
pub fn check_berge(seq: &DegreeSequence) -> CheckReport {
    let s = match shortcut(seq, Method::Berge) {
        Ok(s) => s,
        Err(report) => return report,
    };
    scan(Method::Berge, 1..=s.len(), |k| berge_holds(&s, k))
}

/// Inequalities against the conjugate minus one, for k in [1..m].
pub fn check_bh(seq: &DegreeSequence) -> CheckReport {
    let s = match shortcut(seq, Method::Bh) {
        Ok(s) => s,
        Err(report) => return report,
    };
    let m = s.index_profile().expect("nonempty").m;
    scan(Method::Bh, 1..=m, |k| bh_holds(&s, k))
}

/// Berge inequalities restricted to w + 1 and the right weak indices.
pub fn check_weak(seq: &DegreeSequence) -> CheckReport {
    let s = match shortcut(seq, Method::Weak) {
        Ok(s) => s,
        Err(report) => return report,
    };
    let n = s.len();
    if s.value_at(n) >= n - 1 {
        // d_1 < n already holds, so all values equal n - 1: complete graph.
        return CheckReport::graphic(Method::Weak).with_note(Note::CompleteGraphShortcut);
    }
    let profile = s.index_profile().expect("nonempty");
    let w = profile.w.expect("d_n < n - 1 guarantees w");
    let mut ks = profile.right_weak.clone();
    if !ks.contains(&(w + 1)) {
        ks.push(w + 1);
    }
    ks.sort_unstable();
    scan(Method::Weak, ks, |k| berge_holds(&s, k))
}

/// Working state of the TopRight algorithm: slots are never reordered, only
/// trailing zeros are removed, and w stays fixed at its input value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionalState {
    slots: Vec<(Label, usize)>,
    live: usize,
    w: usize,
    trace: Vec<(usize, usize)>,
}

impl PositionalState {
    fn new(s: &DegreeSequence, w: usize) -> Self {
        let slots: Vec<(Label, usize)> = s.entries().iter().map(|e| (e.label, e.value)).collect();
        let live = slots.len();
        PositionalState {
            slots,
            live,
            w,
            trace: Vec::new(),
        }
    }

    /// (1-based position of the leftmost maximum, its value).
    fn top(&self) -> (usize, usize) {
        let mut best = (1, 0);
        for (idx, &(_, value)) in self.slots[..self.live].iter().enumerate() {
            if value > best.1 {
                best = (idx + 1, value);
            }
        }
        best
    }

    fn reduce(&mut self, top: usize) {
        let right = self.live;
        debug_assert!(top != right, "top and right must differ");
        self.slots[top - 1].1 -= 1;
        self.slots[right - 1].1 -= 1;
        self.trace.push((top, right));
        while self.live > 0 && self.slots[self.live - 1].1 == 0 {
            self.live -= 1;
        }
    }

    pub fn live_len(&self) -> usize {
        self.live
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// (top, right) position pairs in execution order.
    pub fn trace(&self) -> &[(usize, usize)] {
        &self.trace
    }

    /// Values of the live slots, in their fixed positional order.
    pub fn live_values(&self) -> Vec<usize> {
        self.slots[..self.live].iter().map(|&(_, v)| v).collect()
    }
}

/// Repeatedly decrements the leftmost maximum and the rightmost entry while
/// d_top <= |D| - 1 and d_top > w; graphic exactly when the loop exits with
/// d_top = w.
pub fn top_right(seq: &DegreeSequence) -> CheckReport {
    let s = match shortcut(seq, Method::TopRight) {
        Ok(s) => s,
        Err(report) => return report,
    };
    let n = s.len();
    if s.value_at(n) >= n - 1 {
        return CheckReport::graphic(Method::TopRight).with_note(Note::CompleteGraphShortcut);
    }
    let w = s
        .index_profile()
        .expect("nonempty")
        .w
        .expect("d_n < n - 1 guarantees w");
    let mut state = PositionalState::new(&s, w);
    loop {
        let (top, d_top) = state.top();
        if d_top + 1 > state.live || d_top <= w {
            let mut report = if d_top == w {
                CheckReport::graphic(Method::TopRight)
            } else {
                CheckReport::not_graphic(
                    Method::TopRight,
                    Witness::TopRightHalt {
                        d_top,
                        live: state.live,
                        w,
                    },
                )
            };
            report.positional = Some(state);
            return report;
        }
        state.reduce(top);
    }
}

/// Lays off the current maximum until the sequence empties or the operation
/// runs out of entries.
pub fn check_kw(seq: &DegreeSequence) -> CheckReport {
    let mut cur = match shortcut(seq, Method::Kw) {
        Ok(s) => s,
        Err(report) => return report,
    };
    while !cur.is_empty() {
        let top = cur.label_at(1).expect("nonempty");
        match lay_off(&cur, top) {
            Ok(next) => cur = next,
            Err(_) => {
                return CheckReport::not_graphic(
                    Method::Kw,
                    Witness::KwHalt {
                        d_top: cur.max_value(),
                        live: cur.len(),
                    },
                );
            }
        }
    }
    CheckReport::graphic(Method::Kw)
}

/// Dispatches to the requested method. All methods agree on every input;
/// the test suites enforce that rather than assume it.
pub fn is_graphic(seq: &DegreeSequence, method: Method) -> Result<CheckReport> {
    Ok(match method {
        Method::Eg => check_eg(seq, IndexSet::All),
        Method::EgStrong => check_eg(seq, IndexSet::StrongOnly),
        Method::Berge => check_berge(seq),
        Method::Bh => check_bh(seq),
        Method::Weak => check_weak(seq),
        Method::TopRight => top_right(seq),
        Method::Kw => check_kw(seq),
        Method::Oracle => {
            if oracle::brute_force_is_graphic(seq)? {
                CheckReport::graphic(Method::Oracle)
            } else {
                CheckReport::not_graphic(Method::Oracle, Witness::ExhaustedSearch)
            }
        }
    })
}

/// The three equivalent statements for a fixed k in [w+1..n]: the Berge
/// inequality on D, the conjugate tail bound, and the Berge inequality at
/// n - k on the complementary sequence.
pub fn berge_triple(seq: &DegreeSequence, k: usize) -> Result<(bool, bool, bool)> {
    let s = seq.normalize();
    let n = s.len();
    if n < 2 || s.value_at(n) >= n - 1 {
        return Err(Error::Precondition("requires d_n < n - 1"));
    }
    let w = s.index_profile()?.w.expect("d_n < n - 1 guarantees w");
    if k < w + 1 || k > n {
        return Err(Error::IndexOutOfRange {
            index: k,
            lo: w + 1,
            hi: n,
        });
    }

    let a = berge_holds(&s, k);

    let tail_conjugate: usize = (k..=n).map(|i| s.conjugate_at(i)).sum();
    let tail_values: usize = (k + 1..=n).map(|i| s.value_at(i)).sum();
    let b = tail_conjugate <= tail_values;

    let complement = s.complement()?;
    let c = berge_holds(&complement, n - k);

    Ok((a, b, c))
}
