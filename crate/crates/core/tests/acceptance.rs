//! Acceptance suite: one test per release criterion, each validated against
//! the exhaustive oracle and printing a pass line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use graphseq::oracle::{all_sequences, brute_force_enumerate, GraphicTable, SequenceFilter};
use graphseq::{
    berge_triple, count_realizations, enumerate_all, is_graphic, lay_off, lemma_cases,
    quasi_perfect_chain, quasi_perfect_pair, realize_with_edge, reconstruct_order, top_right,
    two_reduce, DegreeSequence, LabeledGraph, Method, QuasiPerfectKind,
};

fn table() -> &'static GraphicTable {
    static TABLE: OnceLock<GraphicTable> = OnceLock::new();
    TABLE.get_or_init(|| GraphicTable::build(7).expect("within cap"))
}

fn universe(n: usize, filter: SequenceFilter) -> Vec<DegreeSequence> {
    all_sequences(n, filter)
        .expect("within cap")
        .into_iter()
        .map(|values| DegreeSequence::from_values(&values))
        .collect()
}

fn berge_at(s: &DegreeSequence, k: usize) -> bool {
    let lhs: usize = (1..=k).map(|i| s.value_at(i)).sum();
    let rhs: usize = (1..=k).map(|i| s.corrected_conjugate_at(i)).sum();
    lhs <= rhs
}

#[test]
fn criterion_1_oracle_agreement() {
    let mut checked = 0usize;
    for n in 1..=7 {
        for s in universe(n, SequenceFilter::default()) {
            let expected = table().is_graphic(&s);
            for method in Method::ANALYTIC {
                let report = is_graphic(&s, method).expect("analytic methods never error");
                assert_eq!(
                    report.is_graphic(),
                    expected,
                    "{:?} via {}",
                    s.values(),
                    method
                );
            }
            checked += 1;
        }
    }
    println!("criterion 1 (oracle agreement, 7 methods x {checked} sequences): PASS");
}

#[test]
fn criterion_2_weak_index_equivalences() {
    let filter = SequenceFilter {
        even_sum_only: true,
        below_complete_only: true,
    };
    let mut checked = 0usize;
    for n in 2..=7 {
        for s in universe(n, filter) {
            let oracle_says = table().is_graphic(&s);
            let w = s
                .index_profile()
                .expect("nonempty")
                .w
                .expect("universe keeps d_n < n - 1");
            let range_holds = (w + 1..=s.len()).all(|k| berge_at(&s, k));
            let topright_says = top_right(&s).is_graphic();
            let profile = s.index_profile().unwrap();
            let weak_set_holds =
                berge_at(&s, w + 1) && profile.right_weak.iter().all(|&k| berge_at(&s, k));
            assert_eq!(oracle_says, range_holds, "{:?}", s.values());
            assert_eq!(oracle_says, topright_says, "{:?}", s.values());
            assert_eq!(oracle_says, weak_set_holds, "{:?}", s.values());
            checked += 1;
        }
    }
    println!("criterion 2 (four equivalent conditions on {checked} sequences): PASS");
}

#[test]
fn criterion_3_enumeration_exactness() {
    let mut graphic_count = 0usize;
    for n in 1..=6 {
        for s in universe(n, SequenceFilter::default()) {
            let expected: BTreeSet<LabeledGraph> =
                brute_force_enumerate(&s).unwrap().into_iter().collect();
            let emitted: Vec<LabeledGraph> = enumerate_all(&s).collect();
            let emitted_set: BTreeSet<LabeledGraph> = emitted.iter().cloned().collect();
            assert_eq!(
                emitted.len(),
                emitted_set.len(),
                "duplicates for {:?}",
                s.values()
            );
            assert_eq!(emitted_set, expected, "{:?}", s.values());
            if !expected.is_empty() {
                graphic_count += 1;
            }
        }
    }
    let spot = |values: &[usize]| count_realizations(&DegreeSequence::from_values(values));
    assert_eq!(spot(&[1, 1, 1, 1]), 3);
    assert_eq!(spot(&[2, 2, 2, 2]), 3);
    assert_eq!(spot(&[2, 2, 1, 1]), 2);
    assert_eq!(spot(&[2, 2, 2]), 1);
    println!("criterion 3 (enumeration matches oracle on {graphic_count} graphic sequences): PASS");
}

#[test]
fn criterion_4_reduction_stability() {
    let mut checked = 0usize;
    for n in 2..=7 {
        for s in universe(n, SequenceFilter::default()) {
            let base = table().is_graphic(&s);
            for i in s.labels() {
                for j in s.labels() {
                    if i == j {
                        continue;
                    }
                    let cases = lemma_cases(&s, i, j).expect("universe keeps d_1 < n");
                    if !cases.any() {
                        continue;
                    }
                    let reduced = two_reduce(&s, i, j).unwrap();
                    assert_eq!(
                        table().is_graphic(&reduced),
                        base,
                        "{:?} <{i},{j}>",
                        s.values()
                    );
                    checked += 1;
                }
            }
        }
    }
    println!("criterion 4 (graphic-stability over {checked} guaranteed reductions): PASS");
}

#[test]
fn criterion_5_diagram_identities_and_lay_off_equivalence() {
    // Identities around the maximum strong index, d_1 < n, length <= 8.
    for n in 1..=8 {
        for s in universe(n, SequenceFilter::default()) {
            let m = s.index_profile().unwrap().m;
            let d1 = s.max_value();
            let dn = s.value_at(s.len());
            assert!(dn <= m && m <= d1, "d_n <= m <= d_1 {:?}", s.values());
            assert!(
                s.conjugate_at(m + 1) <= m && m <= s.conjugate_at(m),
                "conjugate brackets m {:?}",
                s.values()
            );
            for i in 1..=d1 + 1 {
                let expected = if i <= m {
                    s.conjugate_at(i) - 1
                } else if i == m + 1 {
                    m
                } else {
                    s.conjugate_at(i - 1)
                };
                assert_eq!(
                    s.corrected_conjugate_at(i),
                    expected,
                    "corrected conjugate identity {:?} i={i}",
                    s.values()
                );
            }
        }
    }

    // Weak-index identities, d_n < n - 1, length <= 8.
    let open_tail = SequenceFilter {
        even_sum_only: false,
        below_complete_only: true,
    };
    for n in 2..=8 {
        for s in universe(n, open_tail) {
            let profile = s.index_profile().unwrap();
            let (m, w) = (profile.m, profile.w.expect("d_n < n - 1"));
            assert!(m - 1 <= w && w <= m, "m-1 <= w <= m {:?}", s.values());
            let m_c = s.complement().unwrap().index_profile().unwrap().m;
            assert_eq!(w, s.len() - m_c - 1, "w vs complement m {:?}", s.values());
            assert_eq!(
                w == m - 1,
                s.conjugate_at(m) == m,
                "w = m-1 iff d*_m = m {:?}",
                s.values()
            );
            for i in w + 1..=s.max_value() {
                assert!(
                    s.conjugate_at(i) <= m,
                    "conjugate bounded by m {:?} i={i}",
                    s.values()
                );
            }
        }
    }

    // The three equivalent inequality forms agree for every admissible k,
    // even sum and d_n < n - 1, length <= 7.
    let even_open = SequenceFilter {
        even_sum_only: true,
        below_complete_only: true,
    };
    for n in 2..=7 {
        for s in universe(n, even_open) {
            let w = s.index_profile().unwrap().w.unwrap();
            for k in w + 1..=s.len() {
                let (a, b, c) = berge_triple(&s, k).unwrap();
                assert!(
                    a == b && b == c,
                    "triple equivalence {:?} k={k}",
                    s.values()
                );
            }
        }
    }

    // Laying off an entry = repeating the tilde-partner reduction until the
    // entry's value reaches zero, over length <= 7.
    for n in 2..=7 {
        for s in universe(n, SequenceFilter::default()) {
            for i in s.labels() {
                let direct = lay_off(&s, i).unwrap();
                let mut cur = s.clone();
                while cur.value_of(i).unwrap_or(0) > 0 {
                    let partner_pos = cur.tilde(i).unwrap();
                    let partner = cur.label_at(partner_pos).unwrap();
                    cur = two_reduce(&cur, i, partner).unwrap();
                }
                assert_eq!(cur, direct, "{:?} i={i}", s.values());
            }
        }
    }
    println!(
        "criterion 5 (diagram identities at length <= 8, lay-off equivalence at length <= 7): PASS"
    );
}

#[test]
fn criterion_6_quasi_perfect_classification() {
    // Exhaustive search over candidates: length-n lists with entries in
    // [0..n-1], all distinct except one duplicated value, and even sum.
    for n in 2..=7 {
        let (t1, t2) = quasi_perfect_pair(n).unwrap();
        let mut graphic_candidates = BTreeSet::new();
        for excluded in 0..n {
            for dup in 0..n {
                if dup == excluded {
                    continue;
                }
                let mut values: Vec<usize> = (0..n).filter(|&v| v != excluded).collect();
                values.push(dup);
                values.sort_unstable_by(|a, b| b.cmp(a));
                if values.iter().sum::<usize>() % 2 == 1 {
                    continue;
                }
                if table().is_graphic_values(&values) {
                    graphic_candidates.insert(values);
                }
            }
        }
        let expected: BTreeSet<Vec<usize>> = [t1.values(), t2.values()].into_iter().collect();
        assert_eq!(graphic_candidates, expected, "n={n}");
    }

    for n in 2..=10 {
        let (t1, t2) = quasi_perfect_pair(n).unwrap();
        assert!(graphseq::check_bh(&t1).is_graphic(), "type1 n={n}");
        assert!(graphseq::check_bh(&t2).is_graphic(), "type2 n={n}");
    }

    for n in 3..=10 {
        let (t1, _) = quasi_perfect_pair(n).unwrap();
        let (result, steps) = quasi_perfect_chain(&t1).unwrap();
        let (smaller, _) = quasi_perfect_pair(n - 1).unwrap();
        assert_eq!(result.values(), smaller.normalize().values(), "chain n={n}");
        assert_eq!(steps.len(), n / 2, "chain length n={n}");
        // Type 2 at length n lists the same values as type 1 at n - 1 plus
        // a trailing zero.
        let mut with_zero = QuasiPerfectKind::Type1.values(n - 1).unwrap();
        with_zero.push(0);
        assert_eq!(QuasiPerfectKind::Type2.values(n).unwrap(), with_zero);
    }
    println!("criterion 6 (quasi-perfect pair is exactly the graphic set; chain descends): PASS");
}

#[test]
fn criterion_7_realization_through_a_chosen_edge() {
    let mut checked = 0usize;
    for n in 2..=7 {
        for s in universe(n, SequenceFilter::default()) {
            if !table().is_graphic(&s) {
                continue;
            }
            for j in 2..=n {
                let g = realize_with_edge(&s, j).unwrap();
                assert!(g.contains_edge(1, j), "{:?} j={j}", s.values());
                assert!(g.realizes(&s), "{:?} j={j}", s.values());
                checked += 1;
            }
        }
    }
    println!("criterion 7 (constrained realizations, {checked} cases): PASS");
}

#[test]
fn criterion_8_reconstruction_round_trip() {
    let mut checked = 0usize;
    for n in 1..=6 {
        for s in universe(n, SequenceFilter::default()) {
            for g in brute_force_enumerate(&s).unwrap() {
                let order = reconstruct_order(&s, &g).unwrap();
                let as_set: BTreeSet<(usize, usize)> = order.iter().copied().collect();
                let expected: BTreeSet<(usize, usize)> = g.edges().collect();
                assert_eq!(as_set, expected, "{:?}", s.values());
                assert_eq!(order.len(), g.edge_count(), "{:?}", s.values());

                // Replay: each step takes the position-1 entry and a partner
                // no closer than position d_i + 1.
                let mut cur = s.clone();
                for &(a, b) in &order {
                    let top = cur.label_at(1).unwrap();
                    assert!(a == top || b == top, "{:?}", s.values());
                    let partner = if a == top { b } else { a };
                    let d_top = cur.value_at(1);
                    let p_partner = cur.position_of(partner).unwrap();
                    assert!(p_partner > d_top, "{:?}", s.values());
                    cur = two_reduce(&cur, top, partner).unwrap();
                }
                assert!(cur.is_empty());
                checked += 1;
            }
        }
    }
    println!("criterion 8 (reconstruction of {checked} oracle realizations): PASS");
}
