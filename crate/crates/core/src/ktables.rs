//! Chern-Connes character data: the xi, eta, mu, lambda basis tables as
//! exact vectors, slot schemas per crossed product, and JSON load/export.
//!
//! The tables are shipped as checked-in JSON files and validated against
//! the hard-coded constructors at load time, so a transcription error in
//! either copy is caught by the cross-check.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::lattice::{clear_denominators, IntMatrix};
use crate::scalar::{CycScalar, Rational, ThetaLinear};

/// Slot layout of a character map, one per crossed product.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SlotSchema {
    /// (tau; tau00, tau01, tau10, tau11)
    Z2,
    /// (tau; S10, S11, S12)
    Z3,
    /// (tau; T10, T11; T20, T21, T22)
    Z4,
    /// (tau; H10; H20, H21; H30, H31)
    Z6,
}

impl SlotSchema {
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            SlotSchema::Z2 => &["tau", "tau00", "tau01", "tau10", "tau11"],
            SlotSchema::Z3 => &["tau", "S10", "S11", "S12"],
            SlotSchema::Z4 => &["tau", "T10", "T11", "T20", "T21", "T22"],
            SlotSchema::Z6 => &["tau", "H10", "H20", "H21", "H30", "H31"],
        }
    }

    pub fn slots(self) -> usize {
        self.labels().len()
    }

    /// Order of the cyclic group this character table belongs to.
    pub fn order(self) -> u32 {
        match self {
            SlotSchema::Z2 => 2,
            SlotSchema::Z3 => 3,
            SlotSchema::Z4 => 4,
            SlotSchema::Z6 => 6,
        }
    }

    pub fn for_order(n: u32) -> Option<SlotSchema> {
        match n {
            2 => Some(SlotSchema::Z2),
            3 => Some(SlotSchema::Z3),
            4 => Some(SlotSchema::Z4),
            6 => Some(SlotSchema::Z6),
        _ => None,
        }
    }
}

/// Sign parameter distinguishing the two theta windows:
/// c = -1 for 0 < theta < 1/2, c = +1 for 1/2 < theta < 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ThetaWindow {
    Low,
    High,
}

impl ThetaWindow {
    pub fn sign(self) -> i64 {
        match self {
            ThetaWindow::Low => -1,
            ThetaWindow::High => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ThetaWindow::Low => "low",
            ThetaWindow::High => "high",
        }
    }
}

/// One character vector: an exact theta-linear entry per slot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterVector {
    schema: SlotSchema,
    entries: Vec<ThetaLinear>,
}

impl CharacterVector {
    pub fn new(schema: SlotSchema, entries: Vec<ThetaLinear>) -> Self {
        assert_eq!(
            entries.len(),
            schema.slots(),
            "entry count must match slot count"
        );
        CharacterVector { schema, entries }
    }

    pub fn schema(&self) -> SlotSchema {
        self.schema
    }

    pub fn entries(&self) -> &[ThetaLinear] {
        &self.entries
    }

    /// Concatenated 8-coordinate flattening of every slot.
    pub fn flatten(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|e| e.flatten())
            .collect()
    }
}

fn rat(n: i64, d: i64) -> ThetaLinear {
    ThetaLinear::constant(CycScalar::from_rational(Rational::new(n, d)))
}

fn theta(n: i64, d: i64) -> ThetaLinear {
    ThetaLinear::theta_multiple(CycScalar::from_rational(Rational::new(n, d)))
}

/// (a + b*i)/d as a constant entry.
fn gauss(a: i64, b: i64, d: i64) -> ThetaLinear {
    let v = &CycScalar::from_int(a) + &CycScalar::i().scale(&Rational::from_int(b));
    ThetaLinear::constant(v.scale(&Rational::new(1, d)))
}

/// (a + b*omega)/d as a constant entry.
fn eisen(a: i64, b: i64, d: i64) -> ThetaLinear {
    let v = &CycScalar::from_int(a) + &CycScalar::omega().scale(&Rational::from_int(b));
    ThetaLinear::constant(v.scale(&Rational::new(1, d)))
}

/// The six xi vectors spanning the flip character range, with the window
/// sign substituted into xi_6.
pub fn table_xi(w: ThetaWindow) -> Vec<CharacterVector> {
    let c = w.sign();
    let z = SlotSchema::Z2;
    vec![
        CharacterVector::new(z, vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]),
        CharacterVector::new(z, vec![rat(1, 2), rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1)]),
        CharacterVector::new(z, vec![rat(1, 2), rat(0, 1), rat(2, 1), rat(0, 1), rat(0, 1)]),
        CharacterVector::new(z, vec![rat(1, 2), rat(0, 1), rat(0, 1), rat(2, 1), rat(0, 1)]),
        CharacterVector::new(z, vec![rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1), rat(2, 1)]),
        CharacterVector::new(
            z,
            vec![theta(1, 2), rat(1, 1), rat(c, 1), rat(-c, 1), rat(-1, 1)],
        ),
    ]
}

/// The nine eta vectors spanning the Fourier character range.
pub fn table_eta() -> Vec<CharacterVector> {
    let z = SlotSchema::Z4;
    let o = || rat(0, 1);
    vec![
        CharacterVector::new(z, vec![rat(1, 2), o(), o(), rat(1, 2), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 2), gauss(1, -1, 4), o(), o(), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 4), rat(1, 4), o(), rat(1, 4), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 2), o(), o(), o(), rat(1, 2), o()]),
        CharacterVector::new(z, vec![rat(1, 2), o(), gauss(1, -1, 4), o(), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 4), o(), rat(1, 4), o(), rat(1, 4), o()]),
        CharacterVector::new(
            z,
            vec![
                theta(1, 4),
                gauss(1, 1, 8),
                gauss(1, 1, 8),
                rat(1, 8),
                rat(1, 8),
                rat(1, 4),
            ],
        ),
        CharacterVector::new(
            z,
            vec![
                theta(1, 4),
                gauss(-1, 1, 8),
                gauss(-1, 1, 8),
                rat(-1, 8),
                rat(-1, 8),
                rat(-1, 4),
            ],
        ),
        CharacterVector::new(
            z,
            vec![
                theta(1, 4),
                gauss(-1, -1, 8),
                gauss(-1, -1, 8),
                rat(1, 8),
                rat(1, 8),
                rat(1, 4),
            ],
        ),
    ]
}

/// The ten mu vectors spanning the hexic character range.
pub fn table_mu() -> Vec<CharacterVector> {
    let z = SlotSchema::Z6;
    let o = || rat(0, 1);
    vec![
        CharacterVector::new(z, vec![rat(1, 1), o(), o(), o(), o(), o()]),
        CharacterVector::new(
            z,
            vec![rat(1, 6), rat(1, 6), rat(1, 6), rat(1, 6), rat(1, 6), rat(1, 6)],
        ),
        CharacterVector::new(
            z,
            vec![
                rat(1, 6),
                eisen(1, -1, 6),
                eisen(0, -1, 6),
                eisen(0, -1, 6),
                rat(-1, 6),
                rat(-1, 6),
            ],
        ),
        CharacterVector::new(
            z,
            vec![
                rat(1, 6),
                eisen(0, -1, 6),
                eisen(-1, 1, 6),
                eisen(-1, 1, 6),
                rat(1, 6),
                rat(1, 6),
            ],
        ),
        CharacterVector::new(
            z,
            vec![rat(1, 6), rat(-1, 6), rat(1, 6), rat(1, 6), rat(-1, 6), rat(-1, 6)],
        ),
        CharacterVector::new(
            z,
            vec![
                rat(1, 6),
                eisen(-1, 1, 6),
                eisen(0, -1, 6),
                eisen(0, -1, 6),
                rat(1, 6),
                rat(1, 6),
            ],
        ),
        CharacterVector::new(z, vec![rat(1, 3), o(), o(), rat(1, 3), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 3), o(), o(), eisen(0, -1, 3), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 2), o(), o(), o(), o(), rat(1, 2)]),
        CharacterVector::new(
            z,
            vec![
                theta(1, 6),
                eisen(0, 1, 6),
                eisen(1, 1, 18),
                eisen(1, 1, 6),
                rat(1, 12),
                rat(1, 3),
            ],
        ),
    ]
}

/// The eight lambda vectors spanning the cubic character range.
pub fn table_lambda() -> Vec<CharacterVector> {
    let z = SlotSchema::Z3;
    let o = || rat(0, 1);
    vec![
        CharacterVector::new(z, vec![rat(1, 1), o(), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 3), rat(1, 3), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 3), eisen(0, -1, 3), o(), o()]),
        CharacterVector::new(z, vec![rat(1, 3), o(), rat(1, 3), o()]),
        CharacterVector::new(z, vec![rat(1, 3), o(), eisen(0, -1, 3), o()]),
        CharacterVector::new(z, vec![rat(1, 3), o(), o(), rat(1, 3)]),
        CharacterVector::new(z, vec![rat(1, 3), o(), o(), eisen(0, -1, 3)]),
        CharacterVector::new(
            z,
            vec![theta(1, 3), eisen(1, 1, 9), eisen(1, 1, 9), eisen(1, 1, 9)],
        ),
    ]
}

/// Flattened table rows and their rank over Q.
pub fn flatten_table(table: &[CharacterVector]) -> Vec<Vec<Rational>> {
    table.iter().map(CharacterVector::flatten).collect()
}

pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    clear_denominators(rows).rank()
}

/// On-disk form of one table, bit-exact: each vector is a list of entries,
/// each entry the 8-array of "p/q" strings.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TableFile {
    pub schema: Vec<String>,
    pub vectors: Vec<Vec<ThetaLinear>>,
}

impl TableFile {
    pub fn from_table(table: &[CharacterVector]) -> Self {
        let schema = table[0]
            .schema()
            .labels()
            .iter()
            .map(|s| s.to_string())
            .collect();
        TableFile {
            schema,
            vectors: table.iter().map(|v| v.entries().to_vec()).collect(),
        }
    }

    pub fn into_table(self, schema: SlotSchema) -> Result<Vec<CharacterVector>, TableError> {
        let want: Vec<String> = schema.labels().iter().map(|s| s.to_string()).collect();
        if self.schema != want {
            return Err(TableError::SchemaMismatch {
                expected: want.join(","),
                found: self.schema.join(","),
            });
        }
        let mut out = Vec::with_capacity(self.vectors.len());
        for v in self.vectors {
            if v.len() != schema.slots() {
                return Err(TableError::SchemaMismatch {
                    expected: format!("{} entries", schema.slots()),
                    found: format!("{} entries", v.len()),
                });
            }
            out.push(CharacterVector::new(schema, v));
        }
        Ok(out)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("io error reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("bad json in {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },
    #[error("table {name} does not match the built-in constructor")]
    CrossCheckFailed { name: String },
}

/// All five loaded tables (the xi table once per window).
pub struct TableSet {
    pub xi_low: Vec<CharacterVector>,
    pub xi_high: Vec<CharacterVector>,
    pub eta: Vec<CharacterVector>,
    pub mu: Vec<CharacterVector>,
    pub lambda: Vec<CharacterVector>,
}

/// File names for the shipped tables. The xi table is window-dependent,
/// so it ships as two files with the same per-file schema.
pub const TABLE_FILES: [(&str, &str); 5] = [
    ("xi", "xi.json"),
    ("xi_high", "xi_high.json"),
    ("eta", "eta.json"),
    ("mu", "mu.json"),
    ("lambda", "lambda.json"),
];

const BUILTIN_XI: &str = include_str!("../tables/xi.json");
const BUILTIN_XI_HIGH: &str = include_str!("../tables/xi_high.json");
const BUILTIN_ETA: &str = include_str!("../tables/eta.json");
const BUILTIN_MU: &str = include_str!("../tables/mu.json");
const BUILTIN_LAMBDA: &str = include_str!("../tables/lambda.json");

impl TableSet {
    pub fn xi(&self, w: ThetaWindow) -> &[CharacterVector] {
        match w {
            ThetaWindow::Low => &self.xi_low,
            ThetaWindow::High => &self.xi_high,
        }
    }

    pub fn table_for(&self, schema: SlotSchema, w: ThetaWindow) -> &[CharacterVector] {
        match schema {
            SlotSchema::Z2 => self.xi(w),
            SlotSchema::Z3 => &self.lambda,
            SlotSchema::Z4 => &self.eta,
            SlotSchema::Z6 => &self.mu,
        }
    }

    /// The shipped tables, parsed from the embedded JSON and cross-checked
    /// against the constructors.
    pub fn builtin() -> Result<TableSet, TableError> {
        let parse = |name: &str, text: &str, schema: SlotSchema| {
            let file: TableFile =
                serde_json::from_str(text).map_err(|source| TableError::Json {
                    path: format!("builtin:{name}"),
                    source,
                })?;
            file.into_table(schema)
        };
        let set = TableSet {
            xi_low: parse("xi", BUILTIN_XI, SlotSchema::Z2)?,
            xi_high: parse("xi_high", BUILTIN_XI_HIGH, SlotSchema::Z2)?,
            eta: parse("eta", BUILTIN_ETA, SlotSchema::Z4)?,
            mu: parse("mu", BUILTIN_MU, SlotSchema::Z6)?,
            lambda: parse("lambda", BUILTIN_LAMBDA, SlotSchema::Z3)?,
        };
        set.cross_check()?;
        Ok(set)
    }

    /// Loads the five table files from a directory and cross-checks them.
    pub fn load_dir(dir: &Path) -> Result<TableSet, TableError> {
        let load = |file: &str, schema: SlotSchema| {
            let path = dir.join(file);
            let text = fs::read_to_string(&path).map_err(|source| TableError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let parsed: TableFile =
                serde_json::from_str(&text).map_err(|source| TableError::Json {
                    path: path.display().to_string(),
                    source,
                })?;
            parsed.into_table(schema)
        };
        let set = TableSet {
            xi_low: load("xi.json", SlotSchema::Z2)?,
            xi_high: load("xi_high.json", SlotSchema::Z2)?,
            eta: load("eta.json", SlotSchema::Z4)?,
            mu: load("mu.json", SlotSchema::Z6)?,
            lambda: load("lambda.json", SlotSchema::Z3)?,
        };
        set.cross_check()?;
        Ok(set)
    }

    /// Validates every loaded table against its hard-coded constructor.
    pub fn cross_check(&self) -> Result<(), TableError> {
        let checks: [(&str, &[CharacterVector], Vec<CharacterVector>); 5] = [
            ("xi", &self.xi_low, table_xi(ThetaWindow::Low)),
            ("xi_high", &self.xi_high, table_xi(ThetaWindow::High)),
            ("eta", &self.eta, table_eta()),
            ("mu", &self.mu, table_mu()),
            ("lambda", &self.lambda, table_lambda()),
        ];
        for (name, loaded, expected) in checks {
            if loaded != expected.as_slice() {
                return Err(TableError::CrossCheckFailed {
                    name: name.to_owned(),
                });
            }
        }
        Ok(())
    }

    /// Writes the five table files into a directory (pretty-printed).
    pub fn write_dir(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let dump = |file: &str, table: &[CharacterVector]| -> std::io::Result<()> {
            let text = serde_json::to_string_pretty(&TableFile::from_table(table))
                .expect("table serialization cannot fail");
            fs::write(dir.join(file), text + "\n")
        };
        dump("xi.json", &self.xi_low)?;
        dump("xi_high.json", &self.xi_high)?;
        dump("eta.json", &self.eta)?;
        dump("mu.json", &self.mu)?;
        dump("lambda.json", &self.lambda)
    }

    /// The constructor-backed table set, bypassing the JSON copies.
    pub fn from_constructors() -> TableSet {
        TableSet {
            xi_low: table_xi(ThetaWindow::Low),
            xi_high: table_xi(ThetaWindow::High),
            eta: table_eta(),
            mu: table_mu(),
            lambda: table_lambda(),
        }
    }
}

/// Integer matrix of a flattened table with per-column denominators
/// cleared, suitable for lattice computations alongside image vectors
/// cleared with the same factors.
pub fn flatten_with(table: &[CharacterVector], extra: &[Vec<Rational>]) -> (IntMatrix, IntMatrix) {
    let mut rows = flatten_table(table);
    let split = rows.len();
    rows.extend(extra.iter().cloned());
    let all = clear_denominators(&rows);
    let basis = IntMatrix::from_rows((0..split).map(|i| all.row_vec(i)).collect());
    let rest = if split == rows.len() {
        IntMatrix::empty(all.cols())
    } else {
        IntMatrix::from_rows((split..rows.len()).map(|i| all.row_vec(i)).collect())
    };
    (basis, rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sizes_and_ranks() {
        for w in [ThetaWindow::Low, ThetaWindow::High] {
            let xi = table_xi(w);
            assert_eq!(xi.len(), 6);
            assert_eq!(rational_rank(&flatten_table(&xi)), 6);
        }
        assert_eq!(table_eta().len(), 9);
        assert_eq!(rational_rank(&flatten_table(&table_eta())), 9);
        assert_eq!(table_mu().len(), 10);
        assert_eq!(rational_rank(&flatten_table(&table_mu())), 10);
        assert_eq!(table_lambda().len(), 8);
        assert_eq!(rational_rank(&flatten_table(&table_lambda())), 8);
    }

    #[test]
    fn spot_check_entries() {
        let xi = table_xi(ThetaWindow::Low);
        assert_eq!(xi[0].entries()[0], rat(1, 1));
        assert_eq!(xi[1].entries()[0], rat(1, 2));
        assert_eq!(xi[1].entries()[1], rat(2, 1));
        // xi_6 with c = -1: (theta/2; 1, -1, 1, -1)
        assert_eq!(
            xi[5].entries().to_vec(),
            vec![theta(1, 2), rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1)]
        );

        let eta = table_eta();
        assert_eq!(
            eta[1].entries().to_vec(),
            vec![rat(1, 2), gauss(1, -1, 4), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]
        );
        assert_eq!(
            eta[6].entries().to_vec(),
            vec![
                theta(1, 4),
                gauss(1, 1, 8),
                gauss(1, 1, 8),
                rat(1, 8),
                rat(1, 8),
                rat(1, 4)
            ]
        );

        let mu = table_mu();
        assert_eq!(
            mu[8].entries().to_vec(),
            vec![rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 2)]
        );
        assert_eq!(
            mu[9].entries().to_vec(),
            vec![
                theta(1, 6),
                eisen(0, 1, 6),
                eisen(1, 1, 18),
                eisen(1, 1, 6),
                rat(1, 12),
                rat(1, 3)
            ]
        );

        let lambda = table_lambda();
        assert_eq!(
            lambda[1].entries().to_vec(),
            vec![rat(1, 3), rat(1, 3), rat(0, 1), rat(0, 1)]
        );
        assert_eq!(
            lambda[7].entries().to_vec(),
            vec![theta(1, 3), eisen(1, 1, 9), eisen(1, 1, 9), eisen(1, 1, 9)]
        );
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        for table in [
            table_xi(ThetaWindow::Low),
            table_xi(ThetaWindow::High),
            table_eta(),
            table_mu(),
            table_lambda(),
        ] {
            let schema = table[0].schema();
            let text = serde_json::to_string(&TableFile::from_table(&table)).unwrap();
            let back: TableFile = serde_json::from_str(&text).unwrap();
            assert_eq!(back.into_table(schema).unwrap(), table);
        }
    }

    #[test]
    fn builtin_files_cross_check() {
        let set = TableSet::builtin().expect("shipped tables must match constructors");
        assert_eq!(set.eta.len(), 9);
    }

    /// Regenerates the checked-in table files from the constructors.
    /// Run explicitly with `cargo test regenerate_shipped_tables -- --ignored`.
    #[test]
    #[ignore]
    fn regenerate_shipped_tables() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tables");
        TableSet::from_constructors().write_dir(&dir).unwrap();
    }

    #[test]
    fn load_dir_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        TableSet::from_constructors().write_dir(dir.path()).unwrap();
        let set = TableSet::load_dir(dir.path()).unwrap();
        assert_eq!(set.mu, table_mu());
    }
}
