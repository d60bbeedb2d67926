//! Closed-form tableau counts and the brute-force enumerators that check them.
//!
//! The hook-content formula is implemented with factor `(d + c(b)) / h(b)`
//! where `c(b) = col - row`. Some printings carry `(d - c(b))`; with this
//! content convention that variant counts tableaux of the conjugate shape,
//! and is available as [`ContentSign::Minus`]. Likewise the hook length
//! formula is `n! / ∏ h(b)`, with `n!` taken once.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::partitions::{BoxCoord, Partition};
use crate::{Error, Result};

/// Exact non-negative tableau count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableauCount(BigUint);

impl TableauCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigUint> for TableauCount {
    fn from(v: BigUint) -> Self {
        TableauCount(v)
    }
}

impl From<u64> for TableauCount {
    fn from(v: u64) -> Self {
        TableauCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for TableauCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for TableauCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Largest allowed entry `d` of a semistandard filling; `d ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FillingDimension(u32);

impl FillingDimension {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(FillingDimension(d))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FillingDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for FillingDimension {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.0)
    }
}

/// Sign with which the content enters the hook-content factor `d ± c(b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContentSign {
    /// `d + c(b)`: counts semistandard tableaux of the given shape.
    Plus,
    /// `d - c(b)`: counts semistandard tableaux of the conjugate shape.
    Minus,
}

impl ContentSign {
    pub fn factor(self, d: i64, c: i64) -> i64 {
        match self {
            ContentSign::Plus => d + c,
            ContentSign::Minus => d - c,
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

fn exact_quotient(num: BigUint, den: &BigUint, what: &str, lambda: &Partition) -> Result<BigUint> {
    let (q, r) = (&num / den, &num % den);
    if !r.is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "{what} for ({lambda}) is not an integer: {num}/{den}"
        )));
    }
    Ok(q)
}

/// Number of standard Young tableaux, `n! / ∏ h(b)`.
pub fn syt_count(lambda: &Partition) -> Result<TableauCount> {
    let num = factorial(lambda.size());
    let den = lambda.hook_product();
    exact_quotient(num, &den, "n!/∏h", lambda).map(TableauCount)
}

/// Number of semistandard Young tableaux with entries in `1..=d`.
pub fn ssyt_count(lambda: &Partition, d: FillingDimension) -> Result<TableauCount> {
    hook_content_count(lambda, d, ContentSign::Plus)
}

/// `∏ (d ± c(b)) / h(b)` as an exact integer.
///
/// Both sign conventions give a non-negative integer: the product vanishes
/// as soon as one factor does, and a factor can only turn negative after
/// an earlier box in the same column or row contributed a zero.
pub fn hook_content_count(
    lambda: &Partition,
    d: FillingDimension,
    sign: ContentSign,
) -> Result<TableauCount> {
    let d = i64::from(d.get());
    let mut num = BigUint::one();
    for b in lambda.boxes() {
        let f = sign.factor(d, b.content());
        if f <= 0 {
            return Ok(TableauCount(BigUint::zero()));
        }
        num *= f as u64;
    }
    let den = lambda.hook_product();
    exact_quotient(num, &den, "∏(d±c)/h", lambda).map(TableauCount)
}

/// Size limits for the brute-force enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub syt_max_n: usize,
    pub ssyt_max_n: usize,
    pub ssyt_max_d: u32,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            syt_max_n: 10,
            ssyt_max_n: 8,
            ssyt_max_d: 5,
        }
    }
}

/// Counts standard fillings by backtracking with the default bounds.
pub fn enumerate_syt(lambda: &Partition) -> Result<TableauCount> {
    enumerate_syt_with(lambda, OracleBounds::default())
}

pub fn enumerate_syt_with(lambda: &Partition, bounds: OracleBounds) -> Result<TableauCount> {
    let n = lambda.size();
    if n > bounds.syt_max_n {
        return Err(Error::OracleBoundExceeded {
            what: "n",
            value: n,
            bound: bounds.syt_max_n,
        });
    }
    let cells: Vec<BoxCoord> = lambda.boxes().collect();
    let mut filling = Grid::new(lambda);
    let mut used = vec![false; n + 1];
    let mut count = 0u64;
    fill_standard(&cells, 0, &mut filling, &mut used, &mut count);
    Ok(TableauCount::from(count))
}

// Cells are visited in row-major order, so the left and upper neighbours
// are always filled before a cell is tried.
fn fill_standard(
    cells: &[BoxCoord],
    at: usize,
    grid: &mut Grid,
    used: &mut [bool],
    count: &mut u64,
) {
    let Some(&cell) = cells.get(at) else {
        *count += 1;
        return;
    };
    let lower = grid.left(cell).max(grid.above(cell));
    for v in lower + 1..used.len() as u32 {
        if used[v as usize] {
            continue;
        }
        used[v as usize] = true;
        grid.set(cell, v);
        fill_standard(cells, at + 1, grid, used, count);
        used[v as usize] = false;
    }
    grid.set(cell, 0);
}

/// Counts semistandard fillings with entries `≤ d` by backtracking with the
/// default bounds.
pub fn enumerate_ssyt(lambda: &Partition, d: FillingDimension) -> Result<TableauCount> {
    enumerate_ssyt_with(lambda, d, OracleBounds::default())
}

pub fn enumerate_ssyt_with(
    lambda: &Partition,
    d: FillingDimension,
    bounds: OracleBounds,
) -> Result<TableauCount> {
    if lambda.size() > bounds.ssyt_max_n {
        return Err(Error::OracleBoundExceeded {
            what: "n",
            value: lambda.size(),
            bound: bounds.ssyt_max_n,
        });
    }
    if d.get() > bounds.ssyt_max_d {
        return Err(Error::OracleBoundExceeded {
            what: "d",
            value: d.get() as usize,
            bound: bounds.ssyt_max_d as usize,
        });
    }
    let cells: Vec<BoxCoord> = lambda.boxes().collect();
    let mut grid = Grid::new(lambda);
    let mut count = 0u64;
    fill_semistandard(&cells, 0, d.get(), &mut grid, &mut count);
    Ok(TableauCount::from(count))
}

fn fill_semistandard(cells: &[BoxCoord], at: usize, d: u32, grid: &mut Grid, count: &mut u64) {
    let Some(&cell) = cells.get(at) else {
        *count += 1;
        return;
    };
    // weak along rows, strict down columns
    let lower = grid.left(cell).max(1).max(grid.above(cell) + 1);
    for v in lower..=d {
        grid.set(cell, v);
        fill_semistandard(cells, at + 1, d, grid, count);
    }
    grid.set(cell, 0);
}

// Dense row-major filling; zero marks an empty cell or a cell off the diagram.
struct Grid {
    rows: Vec<Vec<u32>>,
}

impl Grid {
    fn new(lambda: &Partition) -> Self {
        Grid {
            rows: lambda.parts().iter().map(|&len| vec![0; len]).collect(),
        }
    }

    fn set(&mut self, b: BoxCoord, v: u32) {
        self.rows[b.row - 1][b.col - 1] = v;
    }

    fn left(&self, b: BoxCoord) -> u32 {
        if b.col == 1 {
            0
        } else {
            self.rows[b.row - 1][b.col - 2]
        }
    }

    fn above(&self, b: BoxCoord) -> u32 {
        if b.row == 1 {
            0
        } else {
            self.rows[b.row - 2][b.col - 1]
        }
    }
}
