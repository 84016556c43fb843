//! Quasi-perfect sequences: all values distinct except one value appearing
//! exactly twice. For every length n >= 2 exactly two of them are graphic,
//! and the first is carried to length n - 1 by a short 2-reduction chain.

use crate::error::{Error, Result};
use crate::reductions::{two_reduce, ReductionKind, ReductionStep};
use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasiPerfectKind {
    /// (n-1, n-2, ..., ⌊n/2⌋, ⌊n/2⌋, ..., 2, 1)
    Type1,
    /// (n-2, n-3, ..., ⌊(n-1)/2⌋, ⌊(n-1)/2⌋, ..., 1, 0)
    Type2,
}

impl QuasiPerfectKind {
    /// Raw value list of this kind at length n, zeros retained.
    pub fn values(self, n: usize) -> Result<Vec<usize>> {
        if n < 2 {
            return Err(Error::Precondition("length must be at least 2"));
        }
        let (hi, dup) = match self {
            QuasiPerfectKind::Type1 => (n - 1, n / 2),
            QuasiPerfectKind::Type2 => (n - 2, (n - 1) / 2),
        };
        let lo = match self {
            QuasiPerfectKind::Type1 => 1,
            QuasiPerfectKind::Type2 => 0,
        };
        let mut values: Vec<usize> = (dup..=hi).rev().collect();
        values.extend((lo..=dup).rev());
        debug_assert_eq!(values.len(), n);
        Ok(values)
    }
}

/// The two graphic quasi-perfect sequences of length n, zeros retained.
pub fn quasi_perfect_pair(n: usize) -> Result<(DegreeSequence, DegreeSequence)> {
    let type1 = DegreeSequence::from_values(&QuasiPerfectKind::Type1.values(n)?);
    let type2 = DegreeSequence::from_values(&QuasiPerfectKind::Type2.values(n)?);
    Ok((type1, type2))
}

/// True iff exactly one value occurs twice and every other value once,
/// counting zeros.
pub fn is_quasi_perfect(seq: &DegreeSequence) -> bool {
    let values = seq.values();
    if values.len() < 2 {
        return false;
    }
    let mut doubles = 0;
    let mut idx = 0;
    while idx < values.len() {
        let run = values[idx..]
            .iter()
            .take_while(|&&v| v == values[idx])
            .count();
        match run {
            1 => {}
            2 => doubles += 1,
            _ => return false,
        }
        idx += run;
    }
    doubles == 1
}

/// Reduces the type-1 sequence of length n to the type-1 sequence of length
/// n - 1 by pairing, for each value v = t down to 1, the entry holding v
/// with the entry at position v. Length 2 is the induction base and returns
/// an empty chain.
pub fn quasi_perfect_chain(seq: &DegreeSequence) -> Result<(DegreeSequence, Vec<ReductionStep>)> {
    let n = seq.len();
    let expected = QuasiPerfectKind::Type1.values(n)?;
    if seq.values() != expected {
        return Err(Error::Precondition(
            "input must be the type-1 quasi-perfect sequence of its length",
        ));
    }
    if n == 2 {
        return Ok((seq.clone(), Vec::new()));
    }
    let t = n / 2;
    let labels: Vec<usize> = (1..=n)
        .map(|p| seq.label_at(p).expect("p within length"))
        .collect();
    let mut cur = seq.clone();
    let mut steps = Vec::with_capacity(t);
    for v in (1..=t).rev() {
        // The value v sits at position n - v + 1 (the rightmost copy when
        // v = t); its partner is the entry at position v.
        let i = labels[n - v];
        let j = labels[v - 1];
        let before = cur.clone();
        let after = two_reduce(&cur, i, j)?;
        steps.push(ReductionStep {
            kind: ReductionKind::TwoReduce,
            i,
            j: Some(j),
            before,
            after: after.clone(),
        });
        cur = after;
    }
    Ok((cur, steps))
}
