//! Canonical degree sequences and their derived quantities: conjugates,
//! strong/weak index sets, the complementary sequence and the tilde position.
//!
//! A sequence is kept in canonical order (value descending, label ascending).
//! Labels are stable identities; positions are 1-based ranks in the canonical
//! order and change whenever values change.

use crate::error::{Error, Result};

/// Stable identity of an entry; realizations use labels as vertex names.
pub type Label = usize;

/// One labeled entry of a degree sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Entry {
    pub label: Label,
    pub value: usize,
}

/// A labeled degree sequence in canonical nonincreasing order.
///
/// Zero-valued entries may be present (the complementary sequence keeps
/// them); [`DegreeSequence::normalize`] drops them. `original_len` counts
/// the labels ever assigned, so realizations know their vertex set even
/// after zero entries are removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    entries: Vec<Entry>,
    original_len: usize,
}

impl DegreeSequence {
    /// Builds a sequence from raw values, assigning labels 1..n in canonical
    /// order. Zero values are kept; call [`normalize`](Self::normalize) to
    /// drop them.
    pub fn from_values(values: &[usize]) -> Self {
        let mut sorted: Vec<usize> = values.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let entries = sorted
            .into_iter()
            .enumerate()
            .map(|(idx, value)| Entry {
                label: idx + 1,
                value,
            })
            .collect();
        DegreeSequence {
            entries,
            original_len: values.len(),
        }
    }

    /// Builds a sequence from labeled entries, restoring canonical order.
    pub fn from_entries(entries: Vec<Entry>, original_len: usize) -> Self {
        let mut entries = entries;
        entries.sort_unstable_by(|a, b| b.value.cmp(&a.value).then(a.label.cmp(&b.label)));
        DegreeSequence {
            entries,
            original_len,
        }
    }

    /// Parses integers separated by commas and/or whitespace, sorts them into
    /// canonical order, assigns labels in that order and drops zeros.
    pub fn parse(text: &str) -> Result<Self> {
        let values = parse_tokens(text)?;
        Ok(Self::from_values(&values).normalize())
    }

    /// Canonical order with zero-valued entries removed; surviving labels are
    /// preserved, as is the original length.
    pub fn normalize(&self) -> Self {
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .copied()
            .filter(|e| e.value > 0)
            .collect();
        DegreeSequence {
            entries,
            original_len: self.original_len,
        }
    }

    /// Current length (number of stored entries, including any zeros).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Length before any zero removal: the count of labels ever assigned.
    pub fn original_len(&self) -> usize {
        self.original_len
    }

    /// Size of the vertex set a realization of this sequence lives on.
    pub fn vertex_count(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.label)
            .max()
            .unwrap_or(0)
            .max(self.original_len)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Values in canonical order.
    pub fn values(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.value).collect()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.entries.iter().map(|e| e.label).collect()
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().map(|e| e.value).sum()
    }

    /// Largest value, 0 for the empty sequence.
    pub fn max_value(&self) -> usize {
        self.entries.first().map(|e| e.value).unwrap_or(0)
    }

    /// Value at a 1-based position; 0 outside the stored range.
    pub fn value_at(&self, position: usize) -> usize {
        if position == 0 {
            return 0;
        }
        self.entries.get(position - 1).map(|e| e.value).unwrap_or(0)
    }

    /// Label at a 1-based position.
    pub fn label_at(&self, position: usize) -> Option<Label> {
        if position == 0 {
            return None;
        }
        self.entries.get(position - 1).map(|e| e.label)
    }

    /// 1-based position of a label in the canonical order.
    pub fn position_of(&self, label: Label) -> Option<usize> {
        self.entries
            .iter()
            .position(|e| e.label == label)
            .map(|p| p + 1)
    }

    pub fn value_of(&self, label: Label) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .map(|e| e.value)
    }

    /// Conjugate values (d*_1, ..., d*_{d_1}); entries beyond d_1 are zero by
    /// convention and available through [`conjugate_at`](Self::conjugate_at).
    pub fn conjugate(&self) -> Result<Vec<usize>> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok((1..=self.max_value())
            .map(|i| self.conjugate_at(i))
            .collect())
    }

    /// Number of entries with value at least `i`; zero beyond d_1.
    pub fn conjugate_at(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.entries.iter().filter(|e| e.value >= i).count()
    }

    /// Corrected conjugate values (d̄_1, ..., d̄_{d_1 + 1}); zero beyond that
    /// range by convention.
    pub fn corrected_conjugate(&self) -> Result<Vec<usize>> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok((1..=self.max_value() + 1)
            .map(|i| self.corrected_conjugate_at(i))
            .collect())
    }

    /// |{j < i : d_j >= i - 1}| + |{j > i : d_j >= i}| over canonical positions.
    pub fn corrected_conjugate_at(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        let before = self
            .entries
            .iter()
            .take(i.saturating_sub(1))
            .filter(|e| e.value >= i - 1)
            .count();
        let after = self.entries.iter().skip(i).filter(|e| e.value >= i).count();
        before + after
    }

    /// Position of the d_i-th leftmost entry when entry `i` itself is not
    /// counted: d_i + 1 while the entry sits within the first d_i positions,
    /// d_i afterwards.
    pub fn tilde(&self, label: Label) -> Result<usize> {
        let position = self.position_of(label).ok_or(Error::UnknownLabel(label))?;
        let value = self.value_at(position);
        Ok(if position <= value { value + 1 } else { value })
    }

    /// Complementary sequence c_i = n - 1 - d_{n+1-i}, zeros retained so the
    /// full length n stays available to index computations.
    pub fn complement(&self) -> Result<DegreeSequence> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = self.len();
        if self.max_value() >= n {
            return Err(Error::MaxValueTooLarge {
                max: self.max_value(),
                len: n,
            });
        }
        let values: Vec<usize> = (1..=n).map(|i| n - 1 - self.value_at(n + 1 - i)).collect();
        Ok(DegreeSequence::from_values(&values))
    }

    /// Strong/weak index data of the sequence.
    pub fn index_profile(&self) -> Result<IndexProfile> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = self.len();
        let m = (1..=n)
            .filter(|&i| self.value_at(i) >= i)
            .max()
            .unwrap_or(0);
        let strong: Vec<usize> = (1..=m).collect();
        let right_strong: Vec<usize> = strong
            .iter()
            .copied()
            .filter(|&i| self.value_at(i) > self.value_at(i + 1))
            .collect();

        // w exists only when d_n < n - 1; i = n - 2 then always qualifies.
        // Weak indices are upward closed and the condition holds trivially
        // once i + 2 runs past the sequence, so they fill [w..n].
        let w = if n >= 2 && self.value_at(n) < n - 1 {
            (1..=n - 2).find(|&i| i >= self.value_at(i + 2))
        } else {
            None
        };
        let weak: Vec<usize> = match w {
            Some(w) => (w..=n).collect(),
            None => Vec::new(),
        };
        let right_weak: Vec<usize> = weak
            .iter()
            .copied()
            .filter(|&i| self.value_at(i) > self.value_at(i + 1))
            .collect();

        Ok(IndexProfile {
            m,
            w,
            strong,
            right_strong,
            weak,
            right_weak,
        })
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DegreeSequence::parse(s)
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", e.value)?;
            first = false;
        }
        Ok(())
    }
}

/// Tokenizes a sequence argument. Exposed so front ends can inspect the raw
/// input order before canonicalization.
pub fn parse_tokens(text: &str) -> Result<Vec<usize>> {
    let mut values = Vec::new();
    for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let parsed: i64 = token
            .parse()
            .map_err(|_| Error::InvalidToken(token.to_string()))?;
        if parsed < 0 {
            return Err(Error::NegativeValue(token.to_string()));
        }
        values.push(parsed as usize);
    }
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(values)
}

/// The maximum strong index m, the minimum weak index w (absent when
/// d_n >= n - 1) and the four index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexProfile {
    pub m: usize,
    pub w: Option<usize>,
    pub strong: Vec<usize>,
    pub right_strong: Vec<usize>,
    pub weak: Vec<usize>,
    pub right_weak: Vec<usize>,
}
