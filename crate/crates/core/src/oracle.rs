//! Independent ground truth: exhaustive enumeration of labeled simple
//! graphs by edge-set bitmask. Deliberately shares no code with the
//! inequality checks or the reduction machinery; validating those against
//! this module is its whole purpose.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::realizations::LabeledGraph;
use crate::sequence::DegreeSequence;

/// Graph enumeration cap: 2^(7·6/2) masks is the largest scan we accept.
pub const MAX_ORACLE_VERTICES: usize = 7;
/// Sequence generation cap.
pub const MAX_UNIVERSE_LENGTH: usize = 8;

/// Unordered vertex pairs of an n-vertex graph in the fixed lexicographic
/// order (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n). Bit b of a mask
/// encodes membership of `pair_order(n)[b]`.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 1..=n {
        for b in a + 1..=n {
            pairs.push((a, b));
        }
    }
    pairs
}

fn mask_degrees(mask: u32, pairs: &[(usize, usize)], degs: &mut [usize]) {
    degs.iter_mut().for_each(|d| *d = 0);
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        let (a, b) = pairs[bit];
        degs[a - 1] += 1;
        degs[b - 1] += 1;
        rest &= rest - 1;
    }
}

fn mask_graph(mask: u32, n: usize, pairs: &[(usize, usize)]) -> LabeledGraph {
    let mut edges = std::collections::BTreeSet::new();
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        edges.insert(pairs[bit]);
        rest &= rest - 1;
    }
    LabeledGraph::from_parts(n, edges)
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::OracleTooLarge {
            got: n,
            cap: MAX_ORACLE_VERTICES,
        });
    }
    Ok(())
}

/// Every labeled graph whose vertex-wise degrees match the sequence, found
/// by scanning all edge-set masks in ascending order.
pub fn brute_force_enumerate(seq: &DegreeSequence) -> Result<Vec<LabeledGraph>> {
    let s = seq.normalize();
    let n = s.vertex_count();
    check_cap(n)?;
    let target: Vec<usize> = (1..=n).map(|v| s.value_of(v).unwrap_or(0)).collect();
    let half_sum = {
        let total: usize = target.iter().sum();
        if total % 2 == 1 {
            return Ok(Vec::new());
        }
        (total / 2) as u32
    };
    let pairs = pair_order(n);
    let mut degs = vec![0usize; n];
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        if mask.count_ones() != half_sum {
            continue;
        }
        mask_degrees(mask, &pairs, &mut degs);
        if degs == target {
            out.push(mask_graph(mask, n, &pairs));
        }
    }
    Ok(out)
}

/// True iff some labeled graph realizes the sequence (early exit).
pub fn brute_force_is_graphic(seq: &DegreeSequence) -> Result<bool> {
    let s = seq.normalize();
    let n = s.vertex_count();
    check_cap(n)?;
    let target: Vec<usize> = (1..=n).map(|v| s.value_of(v).unwrap_or(0)).collect();
    let total: usize = target.iter().sum();
    if total % 2 == 1 {
        return Ok(false);
    }
    let half_sum = (total / 2) as u32;
    let pairs = pair_order(n);
    let mut degs = vec![0usize; n];
    for mask in 0u32..(1u32 << pairs.len()) {
        if mask.count_ones() != half_sum {
            continue;
        }
        mask_degrees(mask, &pairs, &mut degs);
        if degs == target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Bulk form of the oracle for sweeps: one full mask scan per vertex count
/// records every attainable degree multiset, after which graphicality is a
/// set lookup. Built from the same exhaustive scan as the per-sequence
/// functions and equally independent of the analytic machinery.
pub struct GraphicTable {
    max_n: usize,
    attainable: Vec<HashSet<Vec<usize>>>,
}

impl GraphicTable {
    pub fn build(max_n: usize) -> Result<Self> {
        check_cap(max_n)?;
        let mut attainable = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let pairs = pair_order(n);
            let mut degs = vec![0usize; n];
            let mut set = HashSet::new();
            for mask in 0u32..(1u32 << pairs.len()) {
                mask_degrees(mask, &pairs, &mut degs);
                let mut key = degs.clone();
                key.sort_unstable_by(|a, b| b.cmp(a));
                set.insert(key);
            }
            attainable.push(set);
        }
        Ok(GraphicTable { max_n, attainable })
    }

    /// Graphicality of a raw value list (any order, zeros allowed).
    pub fn is_graphic_values(&self, values: &[usize]) -> bool {
        let mut key: Vec<usize> = values.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        assert!(
            key.len() <= self.max_n,
            "table built for up to {} vertices, asked about {}",
            self.max_n,
            key.len()
        );
        self.attainable[key.len()].contains(&key)
    }

    pub fn is_graphic(&self, seq: &DegreeSequence) -> bool {
        self.is_graphic_values(&seq.normalize().values())
    }
}

/// Which generated sequences to keep.
#[derive(Debug, Clone, Copy, Default)]
pub struct SequenceFilter {
    pub even_sum_only: bool,
    /// Keep only sequences with d_n < n - 1.
    pub below_complete_only: bool,
}

/// Every nonincreasing positive value list of length n with d_1 < n, in
/// descending lexicographic order.
pub fn all_sequences(n: usize, filter: SequenceFilter) -> Result<Vec<Vec<usize>>> {
    if n > MAX_UNIVERSE_LENGTH {
        return Err(Error::UniverseTooLarge {
            got: n,
            cap: MAX_UNIVERSE_LENGTH,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut prefix = Vec::with_capacity(n);
    generate(n, n - 1, &mut prefix, filter, &mut out);
    Ok(out)
}

fn generate(
    n: usize,
    max_next: usize,
    prefix: &mut Vec<usize>,
    filter: SequenceFilter,
    out: &mut Vec<Vec<usize>>,
) {
    if prefix.len() == n {
        if filter.even_sum_only && prefix.iter().sum::<usize>() % 2 == 1 {
            return;
        }
        if filter.below_complete_only && prefix[n - 1] + 1 >= n {
            return;
        }
        out.push(prefix.clone());
        return;
    }
    for v in (1..=max_next).rev() {
        prefix.push(v);
        generate(n, v, prefix, filter, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[usize]) -> DegreeSequence {
        DegreeSequence::from_values(values).normalize()
    }

    #[test]
    fn pair_order_is_lexicographic() {
        assert_eq!(
            pair_order(4),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(pair_order(2), vec![(1, 2)]);
        assert!(pair_order(1).is_empty());
        assert_eq!(pair_order(7).len(), 21);
    }

    #[test]
    fn enumeration_spot_counts() {
        assert_eq!(brute_force_enumerate(&seq(&[1, 1, 1, 1])).unwrap().len(), 3);
        assert_eq!(brute_force_enumerate(&seq(&[2, 2, 2])).unwrap().len(), 1);
        assert_eq!(brute_force_enumerate(&seq(&[3, 3, 1, 1])).unwrap().len(), 0);
    }

    #[test]
    fn is_graphic_spot_checks() {
        assert!(brute_force_is_graphic(&seq(&[2, 2, 1, 1])).unwrap());
        assert!(!brute_force_is_graphic(&seq(&[3, 3, 3, 1])).unwrap());
        assert!(brute_force_is_graphic(&seq(&[1, 1])).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let too_big = seq(&[1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(matches!(
            brute_force_is_graphic(&too_big),
            Err(Error::OracleTooLarge { got: 8, cap: 7 })
        ));
    }

    #[test]
    fn emitted_graphs_are_distinct_and_consistent() {
        let s = seq(&[2, 2, 1, 1]);
        let graphs = brute_force_enumerate(&s).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for g in &graphs {
            assert!(g.realizes(&s));
            assert!(seen.insert(g.clone()));
        }
        assert_eq!(graphs.len(), 2);
    }

    #[test]
    fn table_matches_scan() {
        let table = GraphicTable::build(5).unwrap();
        for n in 1..=5 {
            for values in all_sequences(n, SequenceFilter::default()).unwrap() {
                let s = seq(&values);
                assert_eq!(
                    table.is_graphic(&s),
                    brute_force_is_graphic(&s).unwrap(),
                    "{values:?}"
                );
            }
        }
    }

    #[test]
    fn total_graph_count_matches_mask_space() {
        // Grouping masks by their sorted degree multiset tiles the whole
        // mask space, and a multiset is attained iff the scan accepts its
        // canonical labeling.
        for n in 1..=5usize {
            let pairs = pair_order(n);
            let mut degs = vec![0usize; n];
            let mut by_multiset: std::collections::HashMap<Vec<usize>, usize> =
                std::collections::HashMap::new();
            for mask in 0u32..(1u32 << pairs.len()) {
                mask_degrees(mask, &pairs, &mut degs);
                let mut key = degs.clone();
                key.sort_unstable_by(|a, b| b.cmp(a));
                *by_multiset.entry(key).or_insert(0) += 1;
            }
            assert_eq!(
                by_multiset.values().sum::<usize>(),
                1usize << (n * (n - 1) / 2)
            );
            for key in by_multiset.keys() {
                let s = DegreeSequence::from_values(key);
                assert!(brute_force_is_graphic(&s).unwrap(), "{key:?}");
            }
        }
    }

    #[test]
    fn sequence_universe_examples() {
        assert_eq!(
            all_sequences(2, SequenceFilter::default()).unwrap(),
            vec![vec![1, 1]]
        );
        assert_eq!(
            all_sequences(
                3,
                SequenceFilter {
                    even_sum_only: true,
                    below_complete_only: false
                }
            )
            .unwrap(),
            vec![vec![2, 2, 2], vec![2, 1, 1]]
        );
        assert_eq!(
            all_sequences(3, SequenceFilter::default()).unwrap(),
            vec![vec![2, 2, 2], vec![2, 2, 1], vec![2, 1, 1], vec![1, 1, 1]]
        );
        assert!(all_sequences(9, SequenceFilter::default()).is_err());
    }
}
