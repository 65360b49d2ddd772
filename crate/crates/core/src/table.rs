//! Countability-by-classifier grids rendered through the live pipeline.
//!
//! Each cell is a fixed source line; its text is whatever the lexicon and
//! the rules make of it. Cells with no rendering print `---`.

use crate::lexicon::Lexicon;
use crate::parser::ParseError;
use crate::transfer::TransferError;
use crate::{translate, TranslateError};

pub const NO_REALIZATION_CELL: &str = "---";

pub struct Grid {
    pub title: &'static str,
    pub columns: &'static [&'static str],
    pub rows: &'static [(&'static str, &'static [&'static str])],
}

pub const ROW_LABELS: [&str; 5] = [
    "Fully Countable",
    "Strongly Countable",
    "Weakly Countable",
    "Uncountable",
    "Pluralia Tantum",
];

pub const UNIT_GRID: Grid = Grid {
    title: "Unit classifiers",
    columns: &["General", "Typical", "Special"],
    rows: &[
        (
            ROW_LABELS[0],
            &["1 tsu no inu", "1 tsubu no inu", "1 kire no inu"],
        ),
        (
            ROW_LABELS[1],
            &["1 tsu no keeki", "1 kakera no keeki", "1 kire no keeki"],
        ),
        (
            ROW_LABELS[2],
            &[
                "1 tsu no kaminoke",
                "1 suji no kaminoke",
                "1 kire no kaminoke",
            ],
        ),
        (
            ROW_LABELS[3],
            &["1 tsu no jouhou", "1 tsubu no jouhou", "1 kire no jouhou"],
        ),
        (
            ROW_LABELS[4],
            &["1 tsu no hasami", "1 tsubu no hasami", "1 kire no hasami"],
        ),
    ],
};

pub const METRIC_GRID: Grid = Grid {
    title: "Metric classifiers",
    columns: &["Container", "Measure"],
    rows: &[
        (ROW_LABELS[0], &["1 hako no inu", "1 kg no ari"]),
        (ROW_LABELS[1], &["1 hako no keeki", "1 kg no keeki"]),
        (ROW_LABELS[2], &["1 hako no biiru", "1 kg no biiru"]),
        (ROW_LABELS[3], &["1 hako no kagu", "1 kg no kagu"]),
        (ROW_LABELS[4], &["1 hako no hasami", "1 kg no hasami"]),
    ],
};

pub const GROUP_SPECIES_GRID: Grid = Grid {
    title: "Group and species classifiers",
    columns: &["Group", "Species (Si)", "Species (Pl)"],
    rows: &[
        (
            ROW_LABELS[0],
            &["1 kumi no inu", "1 shurui no inu", "2 shurui no inu"],
        ),
        (
            ROW_LABELS[1],
            &["1 kumi no keeki", "1 shurui no keeki", "2 shurui no keeki"],
        ),
        (
            ROW_LABELS[2],
            &["1 kumi no biiru", "1 shurui no biiru", "2 shurui no biiru"],
        ),
        (
            ROW_LABELS[3],
            &[
                "1 kumi no jouhou",
                "1 shurui no jouhou",
                "2 shurui no jouhou",
            ],
        ),
        (
            ROW_LABELS[4],
            &[
                "1 kumi no hasami",
                "1 shurui no hasami",
                "2 shurui no hasami",
            ],
        ),
    ],
};

pub const GRIDS: [&Grid; 3] = [&UNIT_GRID, &METRIC_GRID, &GROUP_SPECIES_GRID];

#[derive(Debug, thiserror::Error)]
#[error("cell '{line}': {source}")]
pub struct CellError {
    pub line: &'static str,
    pub source: TranslateError,
}

impl CellError {
    pub fn is_missing_lemma(&self) -> bool {
        matches!(
            self.source,
            TranslateError::Parse(ParseError::UnknownLemma { .. })
        )
    }
}

pub fn render_cell(line: &'static str, lex: &Lexicon) -> Result<String, CellError> {
    match translate(line, lex) {
        Ok(t) => Ok(t.english.surface),
        Err(TranslateError::Transfer(TransferError::NoRealization { .. })) => {
            Ok(NO_REALIZATION_CELL.to_owned())
        }
        Err(source) => Err(CellError { line, source }),
    }
}

/// Renders one grid as tab-separated text: a title line, a header line and
/// one line per countability class.
pub fn render_grid(grid: &Grid, lex: &Lexicon) -> Result<String, CellError> {
    let mut out = format!("{}\nNoun Type\t{}\n", grid.title, grid.columns.join("\t"));
    for (label, lines) in grid.rows {
        let cells = lines
            .iter()
            .map(|l| render_cell(l, lex))
            .collect::<Result<Vec<_>, _>>()?;
        out.push_str(label);
        for cell in cells {
            out.push('\t');
            out.push_str(&cell);
        }
        out.push('\n');
    }
    Ok(out)
}

/// All three grids separated by blank lines.
pub fn render_tables(lex: &Lexicon) -> Result<String, CellError> {
    let parts = GRIDS
        .iter()
        .map(|g| render_grid(g, lex))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(parts.join("\n"))
}
