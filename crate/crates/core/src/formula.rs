//! Closed-form values of `m_j(nK_2, C_7)` for `j ≥ 2`, `n ≥ 2`.
//!
//! Branches are tried in order and the first match wins:
//!
//! * `j = 2`: infinite (every coloring of a bipartite host has bipartite blue).
//! * `j = 3`: `(n, j) = (4, 3)` gives 3; otherwise `n` for `n ≥ 3`, and
//!   `⌈(n+1)/2⌉` for `n = 2`.
//! * `j = 4`: `⌈(n+1)/2⌉`.
//! * `j ≥ 5`, `n = 2`: 2 for `j ≤ 7`, 1 from `j = 8`.
//! * `j ≥ 5`, `n = 3`: 2 for `j ≤ 8`, 1 from `j = 9`.
//! * `j ≥ 5`, `n ≥ 4`: 1 for `j ≥ 2n+3`; 2 for `n+2 ≤ j ≤ 2n+2`;
//!   3 for `j ∈ {n, n+1}`; `⌈2(n+1)/j⌉` for `n ≥ j`.
//!
//! The `j ≤ 4` rows carry two entries that disagree with neighbouring rows,
//! `(n, j) = (3, 2)` and `(4, 3)`. The first is shadowed by the infinite row,
//! the second wins over the `j = 3` row. Strict evaluation reports both
//! cells as ambiguous instead of returning a number.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A size multipartite Ramsey number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RamseyValue {
    Finite(usize),
    Infinite,
}

impl RamseyValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            RamseyValue::Finite(t) => Some(t),
            RamseyValue::Infinite => None,
        }
    }
}

impl fmt::Display for RamseyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RamseyValue::Finite(t) => write!(f, "{t}"),
            RamseyValue::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for RamseyValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RamseyValue::Finite(t) => s.serialize_u64(*t as u64),
            RamseyValue::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for RamseyValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(0) => Err(serde::de::Error::custom("Ramsey values are at least 1")),
            Raw::Num(t) => Ok(RamseyValue::Finite(t)),
            Raw::Text(s) if s == "infinite" => Ok(RamseyValue::Infinite),
            Raw::Text(s) => Err(serde::de::Error::custom(format!("unknown value {s:?}"))),
        }
    }
}

/// Which branch of the piecewise formula (and which lower-bound family)
/// applies to a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `j = 2`: the host is bipartite.
    Infinite,
    /// `K_j` itself forces a pattern.
    Value1,
    /// Red clique on `j - 3` vertices of `K_j`.
    Value2Clique,
    /// Red full stars at `n - 1` vertices of `K_j` (only `n = 2, j = 7`).
    Value2Stars,
    /// Red `K_1 + K_{(j-2)×2}` on `K_{j×2}`.
    Value3Cone,
    /// Red `K_{(j-1)×t}`, blue `K_{t,(j-1)t}`; covers `j ∈ {3, 4}` and `n ≥ j ≥ 5`.
    GeneralFormula,
}

impl Regime {
    pub const ALL: [Regime; 6] = [
        Regime::Infinite,
        Regime::Value1,
        Regime::Value2Clique,
        Regime::Value2Stars,
        Regime::Value3Cone,
        Regime::GeneralFormula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Regime::Infinite => "infinite",
            Regime::Value1 => "value-1",
            Regime::Value2Clique => "value-2-clique",
            Regime::Value2Stars => "value-2-stars",
            Regime::Value3Cone => "value-3-cone",
            Regime::GeneralFormula => "general-formula",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A formula cell: value, regime, and whether the cell is one of the two
/// internally conflicting `j ≤ 4` entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub j: usize,
    pub n: usize,
    pub value: RamseyValue,
    pub regime: Regime,
    pub ambiguous: bool,
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Evaluates `m_j(nK_2, C_7)`.
pub fn ramsey_value(j: usize, n: usize) -> Result<Evaluation> {
    if j < 2 || n < 2 {
        return Err(Error::OutOfDomain { j, n });
    }
    use RamseyValue::Finite;
    let (value, regime) = match j {
        2 => (RamseyValue::Infinite, Regime::Infinite),
        3 if n == 4 => (Finite(3), Regime::GeneralFormula),
        3 if n >= 3 => (Finite(n), Regime::GeneralFormula),
        3 => (Finite(ceil_div(n + 1, 2)), Regime::GeneralFormula),
        4 => (Finite(ceil_div(n + 1, 2)), Regime::GeneralFormula),
        _ if n == 2 && j <= 6 => (Finite(2), Regime::Value2Clique),
        _ if n == 2 && j == 7 => (Finite(2), Regime::Value2Stars),
        _ if n == 2 => (Finite(1), Regime::Value1),
        _ if n == 3 && j <= 8 => (Finite(2), Regime::Value2Clique),
        _ if n == 3 => (Finite(1), Regime::Value1),
        _ if j >= 2 * n + 3 => (Finite(1), Regime::Value1),
        _ if j >= n + 2 => (Finite(2), Regime::Value2Clique),
        _ if j == n || j == n + 1 => (Finite(3), Regime::Value3Cone),
        _ => (Finite(ceil_div(2 * (n + 1), j)), Regime::GeneralFormula),
    };
    let ambiguous = (j, n) == (2, 3) || (j, n) == (3, 4);
    Ok(Evaluation { j, n, value, regime, ambiguous })
}

/// Like [`ramsey_value`], but the ambiguous cells yield `None`.
pub fn ramsey_value_strict(j: usize, n: usize) -> Result<Option<Evaluation>> {
    let e = ramsey_value(j, n)?;
    Ok((!e.ambiguous).then_some(e))
}

/// Every cell with `2 ≤ j ≤ j_max`, `2 ≤ n ≤ n_max`, row-major by `j`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegimeTable {
    pub j_max: usize,
    pub n_max: usize,
    pub cells: Vec<Evaluation>,
}

impl RegimeTable {
    pub fn get(&self, j: usize, n: usize) -> Option<&Evaluation> {
        if !(2..=self.j_max).contains(&j) || !(2..=self.n_max).contains(&n) {
            return None;
        }
        self.cells.get((j - 2) * (self.n_max - 1) + (n - 2))
    }

    /// Horizontally adjacent cells whose regimes differ.
    pub fn boundaries(&self) -> Vec<(Evaluation, Evaluation)> {
        self.cells
            .windows(2)
            .filter(|w| w[0].j == w[1].j && w[0].regime != w[1].regime)
            .map(|w| (w[0], w[1]))
            .collect()
    }

    /// Tab-separated grid: a header of `n` values, then one row per `j`.
    /// Ambiguous cells print as `ambiguous` when `strict` is set.
    pub fn to_tsv(&self, strict: bool) -> String {
        let mut out = String::from("j\\n");
        for n in 2..=self.n_max {
            out.push_str(&format!("\t{n}"));
        }
        out.push('\n');
        for j in 2..=self.j_max {
            out.push_str(&j.to_string());
            for n in 2..=self.n_max {
                let e = self.get(j, n).expect("cell in range");
                if strict && e.ambiguous {
                    out.push_str("\tambiguous");
                } else {
                    out.push_str(&format!("\t{}", e.value));
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn regime_table(j_max: usize, n_max: usize) -> Result<RegimeTable> {
    if j_max < 2 || n_max < 2 {
        return Err(Error::OutOfDomain { j: j_max, n: n_max });
    }
    let mut cells = Vec::with_capacity((j_max - 1) * (n_max - 1));
    for j in 2..=j_max {
        for n in 2..=n_max {
            cells.push(ramsey_value(j, n)?);
        }
    }
    Ok(RegimeTable { j_max, n_max, cells })
}
