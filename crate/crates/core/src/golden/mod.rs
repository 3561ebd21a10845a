//! Embedded reference tables, the table file format, and the diff engine.
//!
//! Format (UTF-8, line-based):
//!
//! ```text
//! # free comment
//! #! source <free text>
//! #! annot <row> <col> printed="<text>" note="<text>"
//! table <name>
//! type <T>
//! rows <comma-separated labels>
//! cols <comma-separated labels>
//! entry <row> <col> <c0,c1,...>
//! ```
//!
//! Entries are polynomials in the ascending-coefficient text form; a
//! missing cell is zero. An entry value may also be a cyclotomic scalar
//! `cyc(N): c0,c1,...` (used when ingesting A′ matrices). Tables that
//! represent plain label lists put the members in `rows` with the single
//! column `member`.
//!
//! Adjudication policy: where a printed table conflicts with a closed
//! form or an independently computable quantity, the computed value is
//! stored and the printed text is preserved in an `annot` line with a
//! justification. The diff engine therefore reports an empty diff
//! exactly when a computation reproduces the adjudicated table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::coxeter::{CoxGroup, LabelError};
use crate::exact::{CycRat, ExactError, PolyU};
use crate::meta::GroupType;
use crate::strata::{ClassMeta, PsiMatrix, StrataError};

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label sets do not match: {0}")]
    LabelSetMismatch(String),
    #[error("no embedded table named {0:?}")]
    NoSuchTable(String),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Strata(#[from] StrataError),
}

/// One adjudicated cell: the printed text and why the stored value
/// differs from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annotation {
    pub row: String,
    pub col: String,
    pub printed: String,
    pub note: String,
}

/// A machine-readable copy of one printed table.
#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub name: String,
    pub group: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    /// Sparse entries keyed by (row index, col index); absent = zero.
    pub entries: BTreeMap<(usize, usize), PolyU>,
    pub annotations: Vec<Annotation>,
    pub source: String,
}

impl GoldenTable {
    pub fn group_type(&self) -> Result<GroupType, ExactError> {
        GroupType::parse(&self.group)
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.rows.iter().position(|r| r == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.cols.iter().position(|c| c == label)
    }

    /// Entry at labeled cell; zero when absent.
    pub fn entry(&self, row: &str, col: &str) -> Result<PolyU, GoldenError> {
        let r = self.row_index(row).ok_or_else(|| GoldenError::UnknownLabel(row.into()))?;
        let c = self.col_index(col).ok_or_else(|| GoldenError::UnknownLabel(col.into()))?;
        Ok(self.entries.get(&(r, c)).cloned().unwrap_or_else(PolyU::zero))
    }

    pub fn entry_at(&self, r: usize, c: usize) -> PolyU {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(PolyU::zero)
    }

    /// Members of a list table (rows column of a `member`-typed table).
    pub fn members(&self) -> &[String] {
        &self.rows
    }

    pub fn parse(text: &str) -> Result<GoldenTable, GoldenError> {
        let mut name = None;
        let mut group = None;
        let mut rows: Option<Vec<String>> = None;
        let mut cols: Option<Vec<String>> = None;
        let mut entries = Vec::new();
        let mut annotations = Vec::new();
        let mut source = String::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            let err = |msg: String| GoldenError::Parse { line: lineno, msg };
            if line.is_empty() {
                continue;
            }
            if let Some(structured) = line.strip_prefix("#!") {
                let structured = structured.trim_start();
                if let Some(s) = structured.strip_prefix("source ") {
                    source = s.trim().to_string();
                } else if let Some(a) = structured.strip_prefix("annot ") {
                    annotations.push(parse_annotation(a).map_err(err)?);
                } else {
                    return Err(err(format!("unknown directive {structured:?}")));
                }
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "table" => name = Some(rest.to_string()),
                "type" => group = Some(rest.to_string()),
                "rows" => rows = Some(split_labels(rest)),
                "cols" => cols = Some(split_labels(rest)),
                "entry" => {
                    let mut parts = rest.splitn(3, char::is_whitespace);
                    let (Some(r), Some(c), Some(v)) = (parts.next(), parts.next(), parts.next())
                    else {
                        return Err(err(format!("malformed entry line {line:?}")));
                    };
                    entries.push((lineno, r.to_string(), c.to_string(), v.trim().to_string()));
                }
                other => return Err(err(format!("unknown line kind {other:?}"))),
            }
        }
        let miss = |what: &str| GoldenError::Parse { line: 0, msg: format!("missing {what} line") };
        let name = name.ok_or_else(|| miss("table"))?;
        let group = group.ok_or_else(|| miss("type"))?;
        let rows = rows.ok_or_else(|| miss("rows"))?;
        let cols = cols.ok_or_else(|| miss("cols"))?;
        let mut table = GoldenTable {
            name,
            group,
            rows,
            cols,
            entries: BTreeMap::new(),
            annotations,
            source,
        };
        for (lineno, r, c, v) in entries {
            let err = |msg: String| GoldenError::Parse { line: lineno, msg };
            let ri = table.row_index(&r).ok_or_else(|| err(format!("unknown row {r:?}")))?;
            let ci = table.col_index(&c).ok_or_else(|| err(format!("unknown column {c:?}")))?;
            let poly = parse_entry_value(&v).map_err(|e| err(e.to_string()))?;
            if !poly.is_zero() {
                table.entries.insert((ri, ci), poly);
            }
        }
        Ok(table)
    }

    /// Render in the file format; `parse(render(t)) == t`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.source.is_empty() {
            let _ = writeln!(out, "#! source {}", self.source);
        }
        let _ = writeln!(out, "table {}", self.name);
        let _ = writeln!(out, "type {}", self.group);
        let _ = writeln!(out, "rows {}", self.rows.join(","));
        let _ = writeln!(out, "cols {}", self.cols.join(","));
        for (&(r, c), v) in &self.entries {
            let _ = writeln!(out, "entry {} {} {}", self.rows[r], self.cols[c], v);
        }
        for a in &self.annotations {
            let _ = writeln!(
                out,
                "#! annot {} {} printed=\"{}\" note=\"{}\"",
                a.row, a.col, a.printed, a.note
            );
        }
        out
    }

    /// Read a table from a file.
    pub fn load(path: &std::path::Path) -> Result<GoldenTable, GoldenError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Write a table to a file; `load(save(t)) == t`.
    pub fn save(&self, path: &std::path::Path) -> Result<(), GoldenError> {
        Ok(std::fs::write(path, self.render())?)
    }

    /// Interpret a full Ψ table for a type without an embedded group:
    /// class invariants stay unknown and the representation metadata is
    /// parsed from the `d_b` column labels.
    pub fn to_psi_matrix_bare(&self) -> Result<PsiMatrix, GoldenError> {
        let classes: Vec<ClassMeta> =
            self.rows.iter().map(|l| ClassMeta::bare(l.clone())).collect();
        let irreps = self
            .cols
            .iter()
            .map(|l| crate::meta::IrrInfo::parse_label(l))
            .collect::<Result<Vec<_>, _>>()?;
        let entries: Vec<Vec<PolyU>> = (0..self.rows.len())
            .map(|r| (0..self.cols.len()).map(|c| self.entry_at(r, c)).collect())
            .collect();
        Ok(PsiMatrix::new(self.group.clone(), classes, irreps, entries)?)
    }

    /// Interpret a full Ψ table: class invariants are recomputed from
    /// the group (labels resolved, never trusted from the file), columns
    /// matched against the type's representation metadata, and the
    /// Ψ-level validations run.
    pub fn to_psi_matrix(&self, g: &CoxGroup) -> Result<PsiMatrix, GoldenError> {
        let mut classes = Vec::with_capacity(self.rows.len());
        for label in &self.rows {
            let cls = g.resolve_label(label)?;
            classes.push(ClassMeta::new(label.clone(), cls.min_length, cls.m));
        }
        let all = g.irreducibles();
        let mut irreps = Vec::with_capacity(self.cols.len());
        for label in &self.cols {
            let info = all
                .iter()
                .find(|e| &e.label == label)
                .ok_or_else(|| GoldenError::UnknownLabel(label.clone()))?;
            irreps.push(info.clone());
        }
        let entries: Vec<Vec<PolyU>> = (0..self.rows.len())
            .map(|r| (0..self.cols.len()).map(|c| self.entry_at(r, c)).collect())
            .collect();
        Ok(PsiMatrix::new(self.group.clone(), classes, irreps, entries)?)
    }

    /// Cell-level comparison against a computed matrix with the same
    /// label sets. Empty report = exact match.
    pub fn diff(&self, psi: &PsiMatrix) -> Result<DiffReport, GoldenError> {
        let row_labels: Vec<String> =
            psi.classes().iter().map(|c| c.label.clone()).collect();
        let col_labels: Vec<String> = psi.irreps().iter().map(|e| e.label.clone()).collect();
        self.diff_cells(&row_labels, &col_labels, |r, c| psi.entry(r, c).clone())
    }

    /// Generic diff against any labeled matrix.
    pub fn diff_cells(
        &self,
        row_labels: &[String],
        col_labels: &[String],
        value: impl Fn(usize, usize) -> PolyU,
    ) -> Result<DiffReport, GoldenError> {
        // data rows exclude bookkeeping labels like _h
        let data_rows: Vec<&String> =
            self.rows.iter().filter(|r| !r.starts_with('_')).collect();
        if data_rows.len() != row_labels.len()
            || data_rows.iter().any(|r| !row_labels.contains(r))
        {
            return Err(GoldenError::LabelSetMismatch(format!(
                "rows {:?} vs {:?}",
                self.rows, row_labels
            )));
        }
        let data_cols: Vec<&String> =
            self.cols.iter().filter(|c| !c.starts_with('_')).collect();
        if data_cols.len() != col_labels.len()
            || data_cols.iter().any(|c| !col_labels.contains(c))
        {
            return Err(GoldenError::LabelSetMismatch(format!(
                "cols {:?} vs {:?}",
                self.cols, col_labels
            )));
        }
        let mut mismatches = Vec::new();
        for (ri, row) in self.rows.iter().enumerate() {
            if row.starts_with('_') {
                continue;
            }
            let pr = row_labels.iter().position(|l| l == row).unwrap();
            for (ci, col) in self.cols.iter().enumerate() {
                if col.starts_with('_') {
                    continue;
                }
                let pc = col_labels.iter().position(|l| l == col).unwrap();
                let expected = self.entry_at(ri, ci);
                let actual = value(pr, pc);
                if expected != actual {
                    mismatches.push(DiffCell {
                        row: row.clone(),
                        col: col.clone(),
                        expected,
                        actual,
                    });
                }
            }
        }
        Ok(DiffReport { table: self.name.clone(), mismatches })
    }
}

fn split_labels(s: &str) -> Vec<String> {
    if s.trim().is_empty() {
        vec![]
    } else {
        s.split(',').map(|t| t.trim().to_string()).collect()
    }
}

fn parse_entry_value(v: &str) -> Result<PolyU, ExactError> {
    if v.starts_with("cyc(") {
        Ok(PolyU::constant(CycRat::parse(v)?))
    } else {
        PolyU::parse(v)
    }
}

fn parse_annotation(s: &str) -> Result<Annotation, String> {
    let mut parts = s.splitn(3, char::is_whitespace);
    let (Some(row), Some(col), Some(rest)) = (parts.next(), parts.next(), parts.next()) else {
        return Err(format!("malformed annotation {s:?}"));
    };
    let printed = quoted_field(rest, "printed")?;
    let note = quoted_field(rest, "note")?;
    Ok(Annotation { row: row.to_string(), col: col.to_string(), printed, note })
}

fn quoted_field(s: &str, key: &str) -> Result<String, String> {
    let pat = format!("{key}=\"");
    let start = s.find(&pat).ok_or_else(|| format!("missing {key}= in annotation"))?
        + pat.len();
    let end = s[start..]
        .find('"')
        .ok_or_else(|| format!("unterminated {key} in annotation"))?;
    Ok(s[start..start + end].to_string())
}

/// One mismatching cell.
#[derive(Clone, Debug)]
pub struct DiffCell {
    pub row: String,
    pub col: String,
    pub expected: PolyU,
    pub actual: PolyU,
}

#[derive(Clone, Debug)]
pub struct DiffReport {
    pub table: String,
    pub mismatches: Vec<DiffCell>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summarize(&self) -> String {
        if self.is_empty() {
            format!("{}: exact match", self.table)
        } else {
            let cells: Vec<String> = self
                .mismatches
                .iter()
                .map(|m| {
                    format!("({}, {}): table {} vs computed {}", m.row, m.col, m.expected, m.actual)
                })
                .collect();
            format!("{}: {} mismatching cells: {}", self.table, cells.len(), cells.join("; "))
        }
    }
}

macro_rules! embedded {
    ($($name:literal => $file:literal),+ $(,)?) => {
        /// Names of all embedded tables.
        pub fn embedded_names() -> Vec<&'static str> {
            vec![$($name),+]
        }

        /// Load an embedded table by name.
        pub fn embedded_table(name: &str) -> Result<GoldenTable, GoldenError> {
            let text = match name {
                $($name => include_str!(concat!("data/", $file)),)+
                _ => return Err(GoldenError::NoSuchTable(name.to_string())),
            };
            GoldenTable::parse(text)
        }
    };
}

embedded! {
    "b3_psi" => "b3_psi.tbl",
    "h3_psi" => "h3_psi.tbl",
    "i2_5_psi" => "i2_5_psi.tbl",
    "i2_7_psi" => "i2_7_psi.tbl",
    "i2_8_psi" => "i2_8_psi.tbl",
    "i2_7_aa_prime" => "i2_7_aa_prime.tbl",
    "i2_8_aa_prime" => "i2_8_aa_prime.tbl",
    "i2_7_a_double_prime" => "i2_7_a_double_prime.tbl",
    "i2_8_a_double_prime" => "i2_8_a_double_prime.tbl",
    "h3_sigma" => "h3_sigma.tbl",
    "h4_sigma" => "h4_sigma.tbl",
    "b3_irr_star" => "b3_irr_star.tbl",
    "h3_irr_star" => "h3_irr_star.tbl",
    "h3_irr_star_star" => "h3_irr_star_star.tbl",
    "h3_sigma_image" => "h3_sigma_image.tbl",
    "h4_irr_star" => "h4_irr_star.tbl",
    "h4_irr_star_star" => "h4_irr_star_star.tbl",
    "h4_sigma_image" => "h4_sigma_image.tbl",
    "h3_tau_prime_image" => "h3_tau_prime_image.tbl",
    "h3_tau_double_prime_image" => "h3_tau_double_prime_image.tbl",
    "h4_tau_prime_image" => "h4_tau_prime_image.tbl",
    "h4_tau_double_prime_image" => "h4_tau_double_prime_image.tbl",
}

/// The embedded full Ψ table for a type, where one exists.
pub fn embedded_psi_table(gt: GroupType) -> Result<GoldenTable, GoldenError> {
    match gt {
        GroupType::B3 => embedded_table("b3_psi"),
        GroupType::H3 => embedded_table("h3_psi"),
        GroupType::I2(5) => embedded_table("i2_5_psi"),
        GroupType::I2(7) => embedded_table("i2_7_psi"),
        GroupType::I2(8) => embedded_table("i2_8_psi"),
        other => Err(GoldenError::NoSuchTable(format!("psi table for {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_round_trip() {
        for name in embedded_names() {
            let t = embedded_table(name).unwrap();
            let again = GoldenTable::parse(&t.render()).unwrap();
            assert_eq!(t.name, again.name);
            assert_eq!(t.rows, again.rows);
            assert_eq!(t.cols, again.cols);
            assert_eq!(t.entries, again.entries);
            assert_eq!(t.annotations, again.annotations);
            assert_eq!(t.source, again.source);
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir()
            .join(format!("strata-golden-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.tbl");
        let t = embedded_table("h3_sigma").unwrap();
        t.save(&path).unwrap();
        let back = GoldenTable::load(&path).unwrap();
        assert_eq!(t.entries, back.entries);
        assert_eq!(t.rows, back.rows);
        assert!(GoldenTable::load(&dir.join("missing.tbl")).is_err());
        std::fs::remove_dir_all(dir).ok();
    }

    #[test]
    fn missing_cells_are_zero() {
        let t = embedded_table("b3_psi").unwrap();
        assert!(t.entry(".3", "1_9").unwrap().is_zero());
        assert_eq!(t.entry(".3", "1_0").unwrap(), PolyU::one());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "table x\ntype B3\nrows a\ncols b\nentry a zz 1\n";
        match GoldenTable::parse(bad) {
            Err(GoldenError::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        let unknown = "table x\ntype B3\nrows a\ncols b\nwhat is this\n";
        assert!(matches!(
            GoldenTable::parse(unknown),
            Err(GoldenError::Parse { line: 5, .. })
        ));
    }

    #[test]
    fn b3_known_cells() {
        let t = embedded_table("b3_psi").unwrap();
        // Ψ_{.111, 1_3} = −2v⁶ = −2u³
        assert_eq!(
            t.entry(".111", "1_3").unwrap(),
            PolyU::from_int_coeffs(&[0, 0, 0, -2])
        );
        // Ψ_{.111, 1_0} = v¹²+v⁸+v⁴+1
        assert_eq!(
            t.entry(".111", "1_0").unwrap(),
            PolyU::from_int_coeffs(&[1, 0, 1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn h3_known_cells() {
        let t = embedded_table("h3_psi").unwrap();
        // Ψ_{c_15, 5_5} = v¹⁴+v¹⁰
        assert_eq!(
            t.entry("c_15", "5_5").unwrap(),
            PolyU::from_int_coeffs(&[0, 0, 0, 0, 0, 1, 0, 1])
        );
        // the alternating-sign column head: v²⁴+v²⁰+v¹⁶−v¹²+v⁸+v⁴+1
        assert_eq!(
            t.entry("c_15", "1_0").unwrap(),
            PolyU::from_int_coeffs(&[1, 0, 1, 0, 1, 0, -1, 0, 1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn annotated_tables_document_printed_irregularities() {
        assert!(!embedded_table("i2_8_psi").unwrap().annotations.is_empty());
        assert!(!embedded_table("i2_7_a_double_prime").unwrap().annotations.is_empty());
        assert!(!embedded_table("h3_tau_double_prime_image")
            .unwrap()
            .annotations
            .is_empty());
    }

    #[test]
    fn diff_rejects_mismatched_label_sets() {
        let t = embedded_table("b3_psi").unwrap();
        let rows: Vec<String> = vec!["x".into()];
        let cols: Vec<String> = t.cols.clone();
        let err = t.diff_cells(&rows, &cols, |_, _| PolyU::zero()).unwrap_err();
        assert!(matches!(err, GoldenError::LabelSetMismatch(_)));
    }

    #[test]
    fn diff_reports_changed_cells() {
        let t = embedded_table("i2_5_psi").unwrap();
        let d = crate::dihedral::Dihedral::new(5);
        let psi = d.psi().unwrap();
        let mut report = t.diff(&psi).unwrap();
        assert!(report.is_empty());
        // perturb one cell through the generic interface
        let rows: Vec<String> = psi.classes().iter().map(|c| c.label.clone()).collect();
        let cols: Vec<String> = psi.irreps().iter().map(|e| e.label.clone()).collect();
        report = t
            .diff_cells(&rows, &cols, |r, c| {
                if (r, c) == (0, 0) {
                    PolyU::from_int_coeffs(&[7])
                } else {
                    psi.entry(r, c).clone()
                }
            })
            .unwrap();
        assert_eq!(report.mismatches.len(), 1);
        assert!(report.summarize().contains("<c>"));
    }

    #[test]
    fn h4_set_arithmetic() {
        let star = embedded_table("h4_irr_star").unwrap();
        let star2 = embedded_table("h4_irr_star_star").unwrap();
        let image = embedded_table("h4_sigma_image").unwrap();
        assert_eq!(star.members().len(), 9);
        assert_eq!(star2.members().len(), 3);
        assert_eq!(image.members().len(), 22);
    }
}
