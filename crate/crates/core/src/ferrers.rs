//! Ferrers diagrams: columns of units aligned at their bases, with the
//! corrected variant inserting an empty cell at (i, i) for every strong
//! index i, which pushes that column's units up by one row.

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Unit,
    EmptyCell,
}

/// A (possibly corrected) Ferrers diagram. Rows are numbered from 1 at the
/// base; cells beyond a column's height are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersDiagram {
    corrected: bool,
    // columns[c][r]: cell at row r + 1 of column c + 1, bottom up.
    columns: Vec<Vec<Cell>>,
}

/// Builds the diagram of a sequence; row-i unit counts equal the conjugate
/// (plain) or the corrected conjugate (corrected).
pub fn build_ferrers(seq: &DegreeSequence, corrected: bool) -> Result<FerrersDiagram> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let m = if corrected { seq.index_profile()?.m } else { 0 };
    let columns = seq
        .values()
        .into_iter()
        .enumerate()
        .map(|(idx, value)| {
            let column = idx + 1;
            if corrected && column <= m {
                (1..=value + 1)
                    .map(|row| {
                        if row == column {
                            Cell::EmptyCell
                        } else {
                            Cell::Unit
                        }
                    })
                    .collect()
            } else {
                vec![Cell::Unit; value]
            }
        })
        .collect();
    Ok(FerrersDiagram { corrected, columns })
}

impl FerrersDiagram {
    pub fn corrected(&self) -> bool {
        self.corrected
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Tallest column height.
    pub fn height(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Cell at 1-based (row, column), if present.
    pub fn cell(&self, row: usize, column: usize) -> Option<Cell> {
        if row == 0 || column == 0 {
            return None;
        }
        self.columns
            .get(column - 1)
            .and_then(|c| c.get(row - 1))
            .copied()
    }

    /// Units on row `row`.
    pub fn row_units(&self, row: usize) -> usize {
        self.columns
            .iter()
            .filter(|c| c.get(row.wrapping_sub(1)) == Some(&Cell::Unit))
            .count()
    }

    pub fn total_units(&self) -> usize {
        self.columns
            .iter()
            .map(|c| c.iter().filter(|&&x| x == Cell::Unit).count())
            .sum()
    }
}

/// One text line per row, top row first, `#` for a unit and `o` for an empty
/// cell; absent trailing cells are omitted.
pub fn render_ferrers(diagram: &FerrersDiagram) -> String {
    let mut lines = Vec::new();
    for row in (1..=diagram.height()).rev() {
        let line: String = diagram
            .columns
            .iter()
            .map_while(|c| c.get(row - 1))
            .map(|cell| match cell {
                Cell::Unit => '#',
                Cell::EmptyCell => 'o',
            })
            .collect();
        lines.push(line);
    }
    lines.join("\n")
}
