//! The alpha/beta/gamma/delta coefficient tables and their exponent schedules.
//!
//! Entry `j` of a column multiplies `f_{1,7}^{a(j)} f_{2,7}^{b(j)} f_{3,7}^{c(j)}`
//! where each exponent is affine in `j`. The schedules are fixed per residue
//! and column; the data file repeats them so a reader can check a file
//! without the code, and loading rejects any file whose schedules differ.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const RESIDUES: [u32; 3] = [19, 33, 40];

const FORMAT: &str = "ramanujan49-witness-tables";
const VERSION: u32 = 1;

/// Shipped table data.
pub const DEFAULT_TABLES_JSON: &str = include_str!("../../data/witness_tables.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Column {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::Alpha, Column::Beta, Column::Gamma, Column::Delta];

    pub fn name(self) -> &'static str {
        match self {
            Column::Alpha => "alpha",
            Column::Beta => "beta",
            Column::Gamma => "gamma",
            Column::Delta => "delta",
        }
    }

    /// Alpha/beta come from the `f_7^3/f_1^4` part, gamma/delta from `q f_7^7/f_1^8`.
    pub fn ell(self) -> u32 {
        match self {
            Column::Alpha | Column::Beta => 4,
            Column::Gamma | Column::Delta => 8,
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponents `(base + step * j)` of `f_{1,7}, f_{2,7}, f_{3,7}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub f1: [i32; 2],
    pub f2: [i32; 2],
    pub f3: [i32; 2],
}

impl Schedule {
    pub fn exponents(&self, j: usize) -> [i32; 3] {
        let j = j as i32;
        [
            self.f1[0] + self.f1[1] * j,
            self.f2[0] + self.f2[1] * j,
            self.f3[0] + self.f3[1] * j,
        ]
    }

    /// Exponents of `F1, F2` after `F3 -> F1^-1 F2^-1`.
    pub fn reduced_exponents(&self, j: usize) -> (i32, i32) {
        let [a, b, c] = self.exponents(j);
        (a - c, b - c)
    }
}

const fn sched(f1: [i32; 2], f2: [i32; 2], f3: [i32; 2]) -> Schedule {
    Schedule { f1, f2, f3 }
}

/// Schedule and length of each column for residue `r`.
pub fn schedule(r: u32, column: Column) -> Result<(Schedule, usize)> {
    use Column::*;
    let s = match (r, column) {
        (19, Alpha) => (sched([23, -1], [0, 2], [0, 0]), 17),
        (19, Beta) => (sched([26, 3], [0, 0], [2, 2]), 3),
        (19, Gamma) => (sched([47, -1], [1, 2], [0, 0]), 34),
        (19, Delta) => (sched([49, 3], [0, 0], [1, 2]), 7),
        (33, Alpha) => (sched([22, -1], [0, 2], [0, 0]), 17),
        (33, Beta) => (sched([25, 3], [0, 0], [2, 2]), 3),
        (33, Gamma) => (sched([46, -1], [1, 2], [0, 0]), 34),
        (33, Delta) => (sched([48, 3], [0, 0], [1, 2]), 7),
        (40, Alpha) => (sched([21, -1], [1, 2], [0, 0]), 16),
        (40, Beta) => (sched([23, 3], [0, 0], [1, 2]), 4),
        (40, Gamma) => (sched([46, -1], [0, 2], [0, 0]), 34),
        (40, Delta) => (sched([49, 3], [0, 0], [2, 2]), 7),
        _ => {
            return Err(Error::IndexOutOfRange(format!(
                "no witness table for residue {r}"
            )))
        }
    };
    Ok(s)
}

/// The residue `s` with `49n + r = 7(7n + s) + 5`.
pub fn inner_residue(r: u32) -> Result<usize> {
    match r {
        19 => Ok(2),
        33 => Ok(4),
        40 => Ok(5),
        _ => Err(Error::IndexOutOfRange(format!(
            "no witness table for residue {r}"
        ))),
    }
}

/// Inverse of [`inner_residue`].
pub fn outer_residue(s: usize) -> Option<u32> {
    match s {
        2 => Some(19),
        4 => Some(33),
        5 => Some(40),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTable {
    pub r: u32,
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
    pub gamma: Vec<BigInt>,
    pub delta: Vec<BigInt>,
}

impl WitnessTable {
    pub fn column(&self, c: Column) -> &[BigInt] {
        match c {
            Column::Alpha => &self.alpha,
            Column::Beta => &self.beta,
            Column::Gamma => &self.gamma,
            Column::Delta => &self.delta,
        }
    }

    pub fn column_mut(&mut self, c: Column) -> &mut Vec<BigInt> {
        match c {
            Column::Alpha => &mut self.alpha,
            Column::Beta => &mut self.beta,
            Column::Gamma => &mut self.gamma,
            Column::Delta => &mut self.delta,
        }
    }

    /// Sum of every entry in all four columns.
    pub fn total(&self) -> BigInt {
        Column::ALL
            .iter()
            .flat_map(|&c| self.column(c).iter())
            .sum()
    }

    pub fn validate(&self) -> Result<()> {
        for c in Column::ALL {
            let (_, len) = schedule(self.r, c)?;
            if self.column(c).len() != len {
                return Err(Error::SchemaError(format!(
                    "{c}_{} has {} entries, expected {len}",
                    self.r,
                    self.column(c).len()
                )));
            }
        }
        Ok(())
    }
}

/// An entry whose printed value differs from the verified one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub r: u32,
    pub column: Column,
    pub j: usize,
    #[serde(with = "crate::bigint_str")]
    pub printed: BigInt,
    #[serde(with = "crate::bigint_str")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSet {
    pub tables: Vec<WitnessTable>,
    pub errata: Vec<Erratum>,
}

impl TableSet {
    pub fn get(&self, r: u32) -> Result<&WitnessTable> {
        self.tables
            .iter()
            .find(|t| t.r == r)
            .ok_or_else(|| Error::IndexOutOfRange(format!("no witness table for residue {r}")))
    }

    /// The tables with every erratum's printed value put back.
    pub fn as_printed(&self) -> Vec<WitnessTable> {
        let mut out = self.tables.clone();
        for e in &self.errata {
            if let Some(t) = out.iter_mut().find(|t| t.r == e.r) {
                if let Some(v) = t.column_mut(e.column).get_mut(e.j) {
                    *v = e.printed.clone();
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = FileDoc {
            format: FORMAT.into(),
            version: VERSION,
            tables: self
                .tables
                .iter()
                .map(|t| FileTable {
                    r: t.r,
                    alpha: file_column(t, Column::Alpha),
                    beta: file_column(t, Column::Beta),
                    gamma: file_column(t, Column::Gamma),
                    delta: file_column(t, Column::Delta),
                })
                .collect(),
            published_errata: self.errata.clone(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }
}

fn file_column(t: &WitnessTable, c: Column) -> FileColumn {
    FileColumn {
        schedule: schedule(t.r, c).expect("validated residue").0,
        values: t.column(c).iter().map(|v| v.to_str_radix(10)).collect(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct FileDoc {
    format: String,
    version: u32,
    tables: Vec<FileTable>,
    #[serde(default)]
    published_errata: Vec<Erratum>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FileTable {
    r: u32,
    alpha: FileColumn,
    beta: FileColumn,
    gamma: FileColumn,
    delta: FileColumn,
}

#[derive(Debug, Serialize, Deserialize)]
struct FileColumn {
    schedule: Schedule,
    values: Vec<String>,
}

fn parse_values(r: u32, c: Column, raw: &[String]) -> Result<Vec<BigInt>> {
    raw.iter()
        .enumerate()
        .map(|(j, s)| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::ParseError(format!("{c}_{{{r},{j}}} is not an integer: {s:?}")))
        })
        .collect()
}

/// Parse and validate a table document.
pub fn load_tables(source: &str) -> Result<TableSet> {
    let doc: FileDoc =
        serde_json::from_str(source).map_err(|e| Error::ParseError(e.to_string()))?;
    if doc.format != FORMAT {
        return Err(Error::SchemaError(format!(
            "unknown format {:?}",
            doc.format
        )));
    }
    if doc.version != VERSION {
        return Err(Error::SchemaError(format!(
            "unsupported version {}",
            doc.version
        )));
    }
    let mut tables = Vec::new();
    for ft in &doc.tables {
        let mut t = WitnessTable {
            r: ft.r,
            alpha: vec![],
            beta: vec![],
            gamma: vec![],
            delta: vec![],
        };
        for (c, fc) in [
            (Column::Alpha, &ft.alpha),
            (Column::Beta, &ft.beta),
            (Column::Gamma, &ft.gamma),
            (Column::Delta, &ft.delta),
        ] {
            let (expected, _) = schedule(ft.r, c)
                .map_err(|_| Error::SchemaError(format!("table for unknown residue {}", ft.r)))?;
            if fc.schedule != expected {
                return Err(Error::SchemaError(format!(
                    "{c}_{} schedule {:?} differs from {:?}",
                    ft.r, fc.schedule, expected
                )));
            }
            *t.column_mut(c) = parse_values(ft.r, c, &fc.values)?;
        }
        t.validate()?;
        tables.push(t);
    }
    let mut found: Vec<u32> = tables.iter().map(|t| t.r).collect();
    found.sort_unstable();
    if found != RESIDUES {
        return Err(Error::SchemaError(format!(
            "expected tables for residues {RESIDUES:?}, found {found:?}"
        )));
    }
    tables.sort_by_key(|t| t.r);
    let set = TableSet {
        tables,
        errata: doc.published_errata,
    };
    for e in &set.errata {
        let v = set.get(e.r)?.column(e.column).get(e.j).ok_or_else(|| {
            Error::SchemaError(format!(
                "erratum index {}_{{{},{}}} out of range",
                e.column, e.r, e.j
            ))
        })?;
        if *v != e.value {
            return Err(Error::SchemaError(format!(
                "erratum for {}_{{{},{}}} disagrees with the table value",
                e.column, e.r, e.j
            )));
        }
    }
    Ok(set)
}

/// The shipped tables.
pub fn default_tables() -> TableSet {
    load_tables(DEFAULT_TABLES_JSON).expect("shipped table file is valid")
}
