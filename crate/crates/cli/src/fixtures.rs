//! Published invariant tables, embedded as closed forms in `(n, k)`, and
//! the check of computed reports against them.
//!
//! Tables are keyed by the id of the statement they come from:
//!
//! * `bl_h_num`: dimensions and indices of `Y`, `Z`, `X` (horospherical),
//! * `cf_num`: rank and first Chern class of `E_Y` (horospherical),
//! * `cf`: rank and first Chern class of the foliation (all families),
//! * `stab`: the two slopes and the verdict (all families).

use std::fmt;

use horofano::{ExactReport, FamilyKind, Rational, Verdict};

/// An expected (or observed) table cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(i64),
    /// Numerator and denominator as printed; compared as a rational.
    Frac(i64, i64),
    Verdict(Verdict),
}

impl Cell {
    fn matches(&self, other: &Cell) -> bool {
        match (self, other) {
            (Cell::Frac(a, b), Cell::Frac(c, d)) => {
                *b != 0 && *d != 0 && i128::from(*a) * i128::from(*d) == i128::from(*b) * i128::from(*c)
            }
            _ => self == other,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Frac(n, d) => write!(f, "{n}/{d}"),
            Cell::Verdict(v) => write!(f, "{v}"),
        }
    }
}

/// A table entry as a function of the triple parameters `(n, k)`; absent
/// parameters are passed as 0.
pub type ClosedForm = fn(u32, u32) -> Cell;

#[derive(Clone, Debug)]
pub struct FixtureRow {
    pub family: FamilyKind,
    /// The associated triple as printed, e.g. `(C_n, w_k, w_{k-1})`.
    pub label: &'static str,
    pub cells: Vec<(&'static str, ClosedForm)>,
}

#[derive(Clone, Debug)]
pub struct FixtureTable {
    pub id: &'static str,
    pub rows: Vec<FixtureRow>,
}

impl FixtureTable {
    pub fn row(&self, family: FamilyKind) -> Option<&FixtureRow> {
        self.rows.iter().find(|r| r.family == family)
    }

    /// Replaces one cell's closed form. Returns false if the cell does not
    /// exist.
    pub fn set(&mut self, family: FamilyKind, column: &str, value: ClosedForm) -> bool {
        let cell = self
            .rows
            .iter_mut()
            .find(|r| r.family == family)
            .and_then(|r| r.cells.iter_mut().find(|(c, _)| *c == column));
        match cell {
            Some(cell) => {
                cell.1 = value;
                true
            }
            None => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub tables: Vec<FixtureTable>,
}

fn int(v: u32) -> Cell {
    Cell::Int(v as i64)
}

macro_rules! row {
    ($family:ident, $label:literal, [$($col:literal => $f:expr),* $(,)?]) => {
        FixtureRow {
            family: FamilyKind::$family,
            label: $label,
            cells: vec![$(($col, $f as ClosedForm)),*],
        }
    };
}

impl FixtureSet {
    pub fn embedded() -> Self {
        let bl_h_num = FixtureTable {
            id: "bl_h_num",
            rows: vec![
                row!(BnSpinor, "(B_n, w_{n-1}, w_n)", [
                    "dim_y" => |n, _| int((n + 4) * (n - 1) / 2),
                    "c1_y" => |n, _| int(n + 1),
                    "dim_z" => |n, _| int(n * (n + 1) / 2),
                    "c1_z" => |n, _| int(2 * n),
                    "dim_x" => |n, _| int(n * (n + 3) / 2),
                    "c1_x" => |n, _| int(n + 2),
                ]),
                row!(B3Special, "(B_3, w_1, w_3)", [
                    "dim_y" => |_, _| int(5),
                    "c1_y" => |_, _| int(5),
                    "dim_z" => |_, _| int(6),
                    "c1_z" => |_, _| int(6),
                    "dim_x" => |_, _| int(9),
                    "c1_x" => |_, _| int(7),
                ]),
                row!(Cn, "(C_n, w_k, w_{k-1})", [
                    "dim_y" => |n, k| int(k * (4 * n + 1 - 3 * k) / 2),
                    "c1_y" => |n, k| int(2 * n + 1 - k),
                    "dim_z" => |n, k| int((k - 1) * (4 * n + 4 - 3 * k) / 2),
                    "c1_z" => |n, k| int(2 * n + 2 - k),
                    "dim_x" => |n, k| int(k * (4 * n - 3 * k + 3) / 2),
                    "c1_x" => |n, k| int(2 * n - k + 2),
                ]),
                row!(F4Horo, "(F_4, w_2, w_3)", [
                    "dim_y" => |_, _| int(20),
                    "c1_y" => |_, _| int(5),
                    "dim_z" => |_, _| int(20),
                    "c1_z" => |_, _| int(7),
                    "dim_x" => |_, _| int(23),
                    "c1_x" => |_, _| int(6),
                ]),
                row!(G2Horo, "(G_2, w_1, w_2)", [
                    "dim_y" => |_, _| int(5),
                    "c1_y" => |_, _| int(3),
                    "dim_z" => |_, _| int(5),
                    "c1_z" => |_, _| int(5),
                    "dim_x" => |_, _| int(7),
                    "c1_x" => |_, _| int(4),
                ]),
            ],
        };

        let cf_num = FixtureTable {
            id: "cf_num",
            rows: vec![
                row!(BnSpinor, "(B_n, w_{n-1}, w_n)", [
                    "rank_ey" => |_, _| int(2),
                    "c1_ey" => |_, _| int(1),
                ]),
                row!(B3Special, "(B_3, w_1, w_3)", [
                    "rank_ey" => |_, _| int(4),
                    "c1_ey" => |_, _| int(2),
                ]),
                row!(Cn, "(C_n, w_k, w_{k-1})", [
                    "rank_ey" => |_, k| int(k),
                    "c1_ey" => |_, k| int(k - 1),
                ]),
                row!(F4Horo, "(F_4, w_2, w_3)", [
                    "rank_ey" => |_, _| int(3),
                    "c1_ey" => |_, _| int(2),
                ]),
                row!(G2Horo, "(G_2, w_1, w_2)", [
                    "rank_ey" => |_, _| int(2),
                    "c1_ey" => |_, _| int(1),
                ]),
            ],
        };

        let cf = FixtureTable {
            id: "cf",
            rows: vec![
                row!(BnSpinor, "(B_n, w_{n-1}, w_n)", ["rank_f" => |_, _| int(2), "c1_f" => |_, _| int(1)]),
                row!(B3Special, "(B_3, w_1, w_3)", ["rank_f" => |_, _| int(4), "c1_f" => |_, _| int(2)]),
                row!(Cn, "(C_n, w_k, w_{k-1})", ["rank_f" => |_, k| int(k), "c1_f" => |_, _| int(1)]),
                row!(F4Horo, "(F_4, w_2, w_3)", ["rank_f" => |_, _| int(3), "c1_f" => |_, _| int(1)]),
                row!(G2Horo, "(G_2, w_1, w_2)", ["rank_f" => |_, _| int(2), "c1_f" => |_, _| int(1)]),
                row!(PasF4, "(F_4, w_1, w_3)", ["rank_f" => |_, _| int(8), "c1_f" => |_, _| int(0)]),
                row!(PasA1G2, "(A_1 x G_2, w_1, w_0 + w_2)", [
                    "rank_f" => |_, _| int(3),
                    "c1_f" => |_, _| int(0),
                ]),
            ],
        };

        let stab = FixtureTable {
            id: "stab",
            rows: vec![
                row!(BnSpinor, "(B_n, w_{n-1}, w_n)", [
                    "mu_f" => |_, _| Cell::Frac(1, 2),
                    "mu_theta" => |n, _| Cell::Frac(n as i64 + 2, (n * (n + 3) / 2) as i64),
                    "verdict" => |n, _| Cell::Verdict(if n >= 4 { Verdict::Unstable } else { Verdict::Stable }),
                ]),
                row!(B3Special, "(B_3, w_1, w_3)", [
                    "mu_f" => |_, _| Cell::Frac(1, 2),
                    "mu_theta" => |_, _| Cell::Frac(7, 9),
                    "verdict" => |_, _| Cell::Verdict(Verdict::Stable),
                ]),
                row!(Cn, "(C_n, w_k, w_{k-1})", [
                    "mu_f" => |_, k| Cell::Frac(1, k as i64),
                    "mu_theta" => |n, k| Cell::Frac((2 * n - k + 2) as i64, (k * (4 * n - 3 * k + 3) / 2) as i64),
                    "verdict" => |_, _| Cell::Verdict(Verdict::Stable),
                ]),
                row!(F4Horo, "(F_4, w_2, w_3)", [
                    "mu_f" => |_, _| Cell::Frac(1, 3),
                    "mu_theta" => |_, _| Cell::Frac(6, 23),
                    "verdict" => |_, _| Cell::Verdict(Verdict::Unstable),
                ]),
                row!(G2Horo, "(G_2, w_1, w_2)", [
                    "mu_f" => |_, _| Cell::Frac(1, 2),
                    "mu_theta" => |_, _| Cell::Frac(4, 7),
                    "verdict" => |_, _| Cell::Verdict(Verdict::Stable),
                ]),
                row!(PasF4, "(F_4, w_1, w_3)", [
                    "mu_f" => |_, _| Cell::Frac(0, 1),
                    "mu_theta" => |_, _| Cell::Frac(8, 23),
                    "verdict" => |_, _| Cell::Verdict(Verdict::Stable),
                ]),
                row!(PasA1G2, "(A_1 x G_2, w_1, w_0 + w_2)", [
                    "mu_f" => |_, _| Cell::Frac(0, 1),
                    "mu_theta" => |_, _| Cell::Frac(6, 8),
                    "verdict" => |_, _| Cell::Verdict(Verdict::Stable),
                ]),
            ],
        };

        FixtureSet {
            tables: vec![bl_h_num, cf_num, cf, stab],
        }
    }

    pub fn table(&self, id: &str) -> Option<&FixtureTable> {
        self.tables.iter().find(|t| t.id == id)
    }

    pub fn table_mut(&mut self, id: &str) -> Option<&mut FixtureTable> {
        self.tables.iter_mut().find(|t| t.id == id)
    }
}

fn small(r: &Rational) -> Option<Cell> {
    let n = i64::try_from(r.numer()).ok()?;
    let d = i64::try_from(r.denom()).ok()?;
    Some(Cell::Frac(n, d))
}

/// The computed value of `column` for `report`, if it exists.
pub fn observed(report: &ExactReport, column: &str) -> Option<Cell> {
    let v = &report.variety;
    let f = &report.foliation;
    let int = |x: u64| Some(Cell::Int(x as i64));
    match column {
        "dim_y" => int(v.dim_y),
        "c1_y" => int(v.c1_y),
        "dim_z" => int(v.dim_z),
        "c1_z" => v.c1_z_index().and_then(int),
        "dim_x" => int(v.dim_x),
        "c1_x" => int(v.r_x),
        "rank_ey" => f.rank_ey.and_then(int),
        "c1_ey" => f.c1_ey.map(Cell::Int),
        "rank_f" => int(f.rank_f),
        "c1_f" => int(f.c1_f),
        "mu_f" => small(&report.mu_f),
        "mu_theta" => small(&report.mu_theta),
        "verdict" => Some(Cell::Verdict(report.verdict)),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub table: &'static str,
    /// Triple id, or the fixture row label when no triple was checked.
    pub row: String,
    pub column: &'static str,
    pub expected: Option<Cell>,
    pub actual: Option<Cell>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |c: &Option<Cell>| c.map_or("absent".to_string(), |c| c.to_string());
        write!(
            f,
            "{}: row {}, column {}: expected {}, actual {}",
            self.table,
            self.row,
            self.column,
            show(&self.expected),
            show(&self.actual)
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct TableOutcome {
    pub id: &'static str,
    pub cells_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl TableOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub tables: Vec<TableOutcome>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.tables.iter().all(TableOutcome::passed)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Mismatch> {
        self.tables.iter().flat_map(|t| &t.mismatches)
    }

    /// `bl_h_num: PASS, cf_num: PASS, ...`
    pub fn summary(&self) -> String {
        self.tables
            .iter()
            .map(|t| format!("{}: {}", t.id, if t.passed() { "PASS" } else { "FAIL" }))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for m in self.mismatches() {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Compares every fixture cell with the computed reports. Each fixture row
/// must be exercised by at least one report.
pub fn verify(reports: &[ExactReport], fixtures: &FixtureSet) -> Verification {
    let tables = fixtures
        .tables
        .iter()
        .map(|table| {
            let mut outcome = TableOutcome {
                id: table.id,
                ..TableOutcome::default()
            };
            for row in &table.rows {
                let mut used = false;
                for report in reports.iter().filter(|r| r.triple.kind() == row.family) {
                    used = true;
                    let (n, k) = (report.triple.n().unwrap_or(0), report.triple.k().unwrap_or(0));
                    for &(column, form) in &row.cells {
                        let expected = form(n, k);
                        let actual = observed(report, column);
                        outcome.cells_checked += 1;
                        if !actual.is_some_and(|a| expected.matches(&a)) {
                            outcome.mismatches.push(Mismatch {
                                table: table.id,
                                row: report.triple.id(),
                                column,
                                expected: Some(expected),
                                actual,
                            });
                        }
                    }
                }
                if !used {
                    outcome.mismatches.push(Mismatch {
                        table: table.id,
                        row: row.label.to_string(),
                        column: "*",
                        expected: None,
                        actual: None,
                    });
                }
            }
            outcome
        })
        .collect();
    Verification { tables }
}
