//! Sequence-transforming operations: 2-reductions, laying off, top
//! extension, and the canonical reductions driving the inductive proofs.
//!
//! Every operation returns a freshly normalized sequence; nothing mutates
//! in place, so enumeration branches never interfere.

use crate::error::{Error, Result};
use crate::sequence::{DegreeSequence, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    TwoReduce,
    LayOff,
    ExtendTop,
    ForwardCanonical,
    BackwardCanonical,
    Choudum,
}

/// Record of one applied reduction, with before/after snapshots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub i: Label,
    pub j: Option<Label>,
    pub before: DegreeSequence,
    pub after: DegreeSequence,
}

/// Subtracts 1 from the entries labeled `i` and `j`, then normalizes.
pub fn two_reduce(seq: &DegreeSequence, i: Label, j: Label) -> Result<DegreeSequence> {
    if i == j {
        return Err(Error::SameLabel(i));
    }
    let di = seq.value_of(i).ok_or(Error::UnknownLabel(i))?;
    let dj = seq.value_of(j).ok_or(Error::UnknownLabel(j))?;
    if di == 0 {
        return Err(Error::ZeroValue(i));
    }
    if dj == 0 {
        return Err(Error::ZeroValue(j));
    }
    let entries = seq
        .entries()
        .iter()
        .map(|e| {
            let mut e = *e;
            if e.label == i || e.label == j {
                e.value -= 1;
            }
            e
        })
        .collect();
    Ok(DegreeSequence::from_entries(entries, seq.original_len()).normalize())
}

/// Which sufficient conditions hold for the 2-reduction on `i` and `j`.
/// All false means no graphic-stability guarantee for this pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LemmaCases {
    /// d_j equals the value at the tilde position of i.
    pub case1: bool,
    /// d_j equals that value plus one.
    pub case2: bool,
    /// p_j > d_i + 1 while d_i is an occurrence of the maximum.
    pub case3: bool,
}

impl LemmaCases {
    pub fn any(&self) -> bool {
        self.case1 || self.case2 || self.case3
    }
}

pub fn lemma_cases(seq: &DegreeSequence, i: Label, j: Label) -> Result<LemmaCases> {
    if i == j {
        return Err(Error::SameLabel(i));
    }
    if seq.max_value() >= seq.len() {
        return Err(Error::Precondition("lemma conditions require d_1 < n"));
    }
    let di = seq.value_of(i).ok_or(Error::UnknownLabel(i))?;
    let dj = seq.value_of(j).ok_or(Error::UnknownLabel(j))?;
    if di == 0 {
        return Err(Error::ZeroValue(i));
    }
    if dj == 0 {
        return Err(Error::ZeroValue(j));
    }
    let anchor = seq.value_at(seq.tilde(i)?);
    let pj = seq.position_of(j).expect("label checked above");
    Ok(LemmaCases {
        case1: dj == anchor,
        case2: dj == anchor + 1,
        case3: pj > di + 1 && di == seq.max_value(),
    })
}

/// Lays off entry `i`: subtracts 1 from its d_i leftmost peers and removes
/// the entry. Also reports which labels were decremented, in canonical order.
pub fn lay_off_with_targets(
    seq: &DegreeSequence,
    i: Label,
) -> Result<(DegreeSequence, Vec<Label>)> {
    let di = seq.value_of(i).ok_or(Error::UnknownLabel(i))?;
    let others: Vec<Label> = seq
        .entries()
        .iter()
        .filter(|e| e.label != i)
        .map(|e| e.label)
        .collect();
    if others.len() < di {
        return Err(Error::NotEnoughEntries {
            needed: di,
            available: others.len(),
        });
    }
    let targets: Vec<Label> = others[..di].to_vec();
    let entries = seq
        .entries()
        .iter()
        .filter(|e| e.label != i)
        .map(|e| {
            let mut e = *e;
            if targets.contains(&e.label) {
                e.value -= 1;
            }
            e
        })
        .collect();
    let next = DegreeSequence::from_entries(entries, seq.original_len()).normalize();
    Ok((next, targets))
}

pub fn lay_off(seq: &DegreeSequence, i: Label) -> Result<DegreeSequence> {
    lay_off_with_targets(seq, i).map(|(s, _)| s)
}

/// Replaces the maximum by `target` and appends `target - d_1` fresh entries
/// of value 1.
pub fn extend_top(seq: &DegreeSequence, target: usize) -> Result<DegreeSequence> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let d1 = seq.max_value();
    if target <= d1 {
        return Err(Error::ExtendTargetTooSmall { target, max: d1 });
    }
    let mut entries = seq.entries().to_vec();
    entries[0].value = target;
    let base = seq.vertex_count();
    let appended = target - d1;
    for k in 0..appended {
        entries.push(crate::sequence::Entry {
            label: base + k + 1,
            value: 1,
        });
    }
    Ok(DegreeSequence::from_entries(entries, base + appended).normalize())
}

fn step(
    kind: ReductionKind,
    before: &DegreeSequence,
    i: Label,
    j: Label,
) -> Result<(DegreeSequence, ReductionStep)> {
    let after = two_reduce(before, i, j)?;
    let record = ReductionStep {
        kind,
        i,
        j: Some(j),
        before: before.clone(),
        after: after.clone(),
    };
    Ok((after, record))
}

/// The reduction used by the forward induction: pair the last entry with the
/// rightmost entry left of it whose value equals the value at position d_n.
pub fn forward_canonical(seq: &DegreeSequence) -> Result<(DegreeSequence, ReductionStep)> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::Precondition("need at least two entries"));
    }
    if seq.max_value() <= 1 {
        return Err(Error::Precondition("need d_1 > 1"));
    }
    let dn = seq.value_at(n);
    if dn > n {
        return Err(Error::Precondition("position d_n outside the sequence"));
    }
    let anchor = seq.value_at(dn);
    let t = (1..n)
        .rev()
        .find(|&p| seq.value_at(p) == anchor)
        .ok_or(Error::Precondition("no matching index left of n"))?;
    let i = seq.label_at(n).expect("n in range");
    let j = seq.label_at(t).expect("t in range");
    step(ReductionKind::ForwardCanonical, seq, i, j)
}

/// The reduction used by the backward induction: pick t from the conjugate
/// at d_1 (falling back to d_1 itself when the conjugate is d_1 + 1) and
/// reduce it with its tilde partner.
pub fn backward_canonical(seq: &DegreeSequence) -> Result<(DegreeSequence, ReductionStep)> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::Precondition("need at least two entries"));
    }
    let d1 = seq.max_value();
    if d1 <= 1 {
        return Err(Error::Precondition("need d_1 > 1"));
    }
    if d1 >= n {
        return Err(Error::Precondition("need d_1 < n"));
    }
    let c = seq.conjugate_at(d1);
    let t = if c != d1 + 1 { c } else { d1 };
    let i = seq
        .label_at(t)
        .ok_or(Error::Precondition("t outside the sequence"))?;
    let partner_pos = seq.tilde(i)?;
    let j = seq
        .label_at(partner_pos)
        .ok_or(Error::Precondition("tilde position outside the sequence"))?;
    step(ReductionKind::BackwardCanonical, seq, i, j)
}

/// Subtracts 1 from the rightmost largest and from the smallest entry. When
/// every value equals d_1 the two positions would coincide at n, so the last
/// two positions are reduced instead.
pub fn choudum_reduce(seq: &DegreeSequence) -> Result<(DegreeSequence, ReductionStep)> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::Precondition("need at least two entries"));
    }
    if seq.max_value() >= n {
        return Err(Error::Precondition("need d_1 < n"));
    }
    let largest = seq.conjugate_at(seq.max_value());
    let (pi, pj) = if largest == n {
        (n - 1, n)
    } else {
        (largest, n)
    };
    let i = seq.label_at(pi).expect("pi in range");
    let j = seq.label_at(pj).expect("pj in range");
    step(ReductionKind::Choudum, seq, i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[usize]) -> DegreeSequence {
        DegreeSequence::from_values(values).normalize()
    }

    #[test]
    fn two_reduce_examples() {
        assert_eq!(
            two_reduce(&seq(&[3, 2, 2, 1]), 1, 4).unwrap().values(),
            vec![2, 2, 2]
        );
        assert!(two_reduce(&seq(&[1, 1]), 1, 2).unwrap().is_empty());
        assert_eq!(
            two_reduce(&seq(&[2, 2, 2]), 2, 3).unwrap().values(),
            vec![2, 1, 1]
        );
    }

    #[test]
    fn two_reduce_errors() {
        let s = seq(&[2, 1]);
        assert_eq!(two_reduce(&s, 1, 1), Err(Error::SameLabel(1)));
        assert_eq!(two_reduce(&s, 1, 5), Err(Error::UnknownLabel(5)));
        // Label 2 disappears after hitting zero, so a repeat is unknown.
        let r = two_reduce(&s, 1, 2).unwrap();
        assert_eq!(two_reduce(&r, 1, 2), Err(Error::UnknownLabel(2)));
        // Zero-valued entries survive in a complement and cannot be reduced.
        let c = seq(&[2, 2, 2]).complement().unwrap();
        assert_eq!(two_reduce(&c, 1, 2), Err(Error::ZeroValue(1)));
    }

    #[test]
    fn lemma_cases_examples() {
        let c = lemma_cases(&seq(&[3, 3, 2, 2]), 1, 4).unwrap();
        assert!(c.case1 && !c.case2 && !c.case3);

        let c = lemma_cases(&seq(&[3, 3, 2, 2]), 3, 1).unwrap();
        assert!(c.case1 && !c.case2 && !c.case3);

        // Both the anchor-value condition and the rightmost condition hold.
        let c = lemma_cases(&seq(&[2, 2, 1, 1, 1, 1]), 1, 5).unwrap();
        assert!(c.case1 && !c.case2 && c.case3);
    }

    #[test]
    fn lemma_cases_requires_room() {
        assert_eq!(
            lemma_cases(&seq(&[2, 2]), 1, 2),
            Err(Error::Precondition("lemma conditions require d_1 < n"))
        );
    }

    #[test]
    fn lay_off_examples() {
        assert_eq!(
            lay_off(&seq(&[3, 3, 2, 2]), 1).unwrap().values(),
            vec![2, 1, 1]
        );
        assert_eq!(
            lay_off(&seq(&[3, 2, 2, 2, 1]), 3).unwrap().values(),
            vec![2, 2, 1, 1]
        );
        assert!(lay_off(&seq(&[1, 1]), 1).unwrap().is_empty());
        assert_eq!(
            lay_off(&seq(&[2, 1]), 1),
            Err(Error::NotEnoughEntries {
                needed: 2,
                available: 1
            })
        );
    }

    #[test]
    fn extend_top_examples() {
        assert_eq!(
            extend_top(&seq(&[2, 2, 1, 1]), 4).unwrap().values(),
            vec![4, 2, 1, 1, 1, 1]
        );
        // One appended entry: the target exceeds the old maximum by one.
        assert_eq!(
            extend_top(&seq(&[1, 1]), 2).unwrap().values(),
            vec![2, 1, 1]
        );
        assert_eq!(
            extend_top(&seq(&[3, 3, 2, 2]), 4).unwrap().values(),
            vec![4, 3, 2, 2, 1]
        );
        assert_eq!(
            extend_top(&seq(&[3, 1]), 3),
            Err(Error::ExtendTargetTooSmall { target: 3, max: 3 })
        );
    }

    #[test]
    fn forward_canonical_examples() {
        let (r, s) = forward_canonical(&seq(&[3, 3, 2, 2])).unwrap();
        assert_eq!(r.values(), vec![3, 2, 2, 1]);
        assert_eq!(s.kind, ReductionKind::ForwardCanonical);
        assert_eq!((s.i, s.j), (4, Some(2)));

        let (r, _) = forward_canonical(&seq(&[2, 2, 2])).unwrap();
        assert_eq!(r.values(), vec![2, 1, 1]);

        let (r, _) = forward_canonical(&seq(&[2, 1, 1])).unwrap();
        assert_eq!(r.values(), vec![1, 1]);
    }

    #[test]
    fn backward_canonical_examples() {
        let (r, s) = backward_canonical(&seq(&[3, 3, 2, 2])).unwrap();
        assert_eq!(r.values(), vec![3, 2, 2, 1]);
        assert_eq!((s.i, s.j), (2, Some(4)));

        let (r, _) = backward_canonical(&seq(&[2, 2, 1, 1])).unwrap();
        assert_eq!(r.values(), vec![2, 1, 1]);

        let (r, _) = backward_canonical(&seq(&[2, 2, 2, 1, 1])).unwrap();
        assert_eq!(r.values(), vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn choudum_examples() {
        let (r, _) = choudum_reduce(&seq(&[3, 3, 2, 1])).unwrap();
        assert_eq!(r.values(), vec![3, 2, 2]);

        let (r, _) = choudum_reduce(&seq(&[1, 1])).unwrap();
        assert!(r.is_empty());

        let (r, _) = choudum_reduce(&seq(&[2, 2, 2, 2])).unwrap();
        assert_eq!(r.values(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn steps_account_for_removed_units() {
        let s = seq(&[3, 3, 2, 2]);
        let (_, rec) = forward_canonical(&s).unwrap();
        assert_eq!(rec.after.sum(), rec.before.sum() - 2);
        let laid = lay_off(&s, 1).unwrap();
        assert_eq!(laid.sum(), s.sum() - 2 * 3);
    }
}
