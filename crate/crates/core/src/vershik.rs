//! Vershik's coefficients over a sequence of positive rationals.
//!
//! For `a = (a_1, ..., a_{2s})` and `0 ≤ m ≤ j ≤ n ≤ s`,
//!
//! ```text
//! Q_j(m, n) = ∏_{i=m+1}^{j} (1 − a_{2i−1} / (a_{2i−1} + … + a_{2j}))
//!           · ∏_{i=j+1}^{n} (1 − a_{2i}   / (a_{2j+1} + … + a_{2i}))
//! ```
//!
//! Entries are required to be strictly positive, so every denominator above
//! is nonzero. All indices on the public surface are 1-based for `a` and
//! 0-based for `m, j, n`, as in the formula.
//!
//! Checks are exposed as residuals (left side minus right side) or as both
//! sides, never as booleans, so a failure carries its magnitude.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::partitions::StepCoords;
use crate::{Error, ExactRational, Result};

/// `(a_1, ..., a_{2s})`, all entries strictly positive, `s ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSequence {
    entries: Vec<ExactRational>,
    // prefix[t] = a_1 + ... + a_t
    prefix: Vec<ExactRational>,
}

/// `(m, j, n)` with `m ≤ j ≤ n`. Validity against `s` is checked on use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexTriple {
    pub m: usize,
    pub j: usize,
    pub n: usize,
}

impl IndexTriple {
    pub fn new(m: usize, j: usize, n: usize) -> Self {
        IndexTriple { m, j, n }
    }

    fn validate(self, s: usize) -> Result<()> {
        if self.m <= self.j && self.j <= self.n && self.n <= s {
            Ok(())
        } else {
            Err(Error::InvalidIndices {
                m: self.m,
                j: self.j,
                n: self.n,
                s,
            })
        }
    }
}

impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, j={}, n={})", self.m, self.j, self.n)
    }
}

impl PairSequence {
    pub fn new(entries: Vec<ExactRational>) -> Result<Self> {
        if entries.is_empty() || !entries.len().is_multiple_of(2) {
            return Err(Error::InvalidSequence(format!(
                "expected a nonempty even number of entries, got {}",
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|x| *x <= ExactRational::zero()) {
            return Err(Error::InvalidSequence(format!(
                "entry a_{} = {} is not strictly positive",
                pos + 1,
                entries[pos]
            )));
        }
        let mut prefix = Vec::with_capacity(entries.len() + 1);
        prefix.push(ExactRational::zero());
        for x in &entries {
            let next = prefix.last().unwrap() + x;
            prefix.push(next);
        }
        Ok(PairSequence { entries, prefix })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        PairSequence::new(
            entries
                .iter()
                .map(|&x| ExactRational::from_integer(x.into()))
                .collect(),
        )
    }

    /// `a_{2i−1} = p_i`, `a_{2i} = k_i`.
    pub fn from_step_coords(sc: &StepCoords) -> Self {
        let entries = sc
            .as_slice()
            .iter()
            .map(|&x| ExactRational::from_integer(BigInt::from(x)))
            .collect();
        PairSequence::new(entries).expect("step coordinates are positive and paired")
    }

    pub fn entries(&self) -> &[ExactRational] {
        &self.entries
    }

    pub fn s(&self) -> usize {
        self.entries.len() / 2
    }

    /// `a_t`, 1-based.
    pub fn a(&self, t: usize) -> &ExactRational {
        &self.entries[t - 1]
    }

    /// `a_lo + ... + a_hi`, 1-based inclusive; zero when `lo > hi`.
    pub fn range_sum(&self, lo: usize, hi: usize) -> ExactRational {
        if lo > hi {
            return ExactRational::zero();
        }
        &self.prefix[hi] - &self.prefix[lo - 1]
    }

    /// `Σ_{i=m+1}^{j} a_{2i−1} − Σ_{i=j+1}^{n} a_{2i}`.
    ///
    /// On step coordinates with `(m, n) = (0, s)` this is the content of the
    /// `j`-th addable corner.
    pub fn offset(&self, t: IndexTriple) -> Result<ExactRational> {
        t.validate(self.s())?;
        Ok(self.offset_unchecked(t.m, t.j, t.n))
    }

    fn offset_unchecked(&self, m: usize, j: usize, n: usize) -> ExactRational {
        let right: ExactRational = (m + 1..=j).map(|i| self.a(2 * i - 1)).sum();
        let down: ExactRational = (j + 1..=n).map(|i| self.a(2 * i)).sum();
        right - down
    }

    fn q_unchecked(&self, m: usize, j: usize, n: usize) -> ExactRational {
        let one = ExactRational::one();
        let mut q = one.clone();
        for i in m + 1..=j {
            let a = self.a(2 * i - 1);
            q *= &one - a / self.range_sum(2 * i - 1, 2 * j);
        }
        for i in j + 1..=n {
            let a = self.a(2 * i);
            q *= &one - a / self.range_sum(2 * j + 1, 2 * i);
        }
        q
    }
}

impl fmt::Display for PairSequence {
    /// Comma-separated `p/q` entries, the same form [`PairSequence::from_str`] reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for PairSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let x: ExactRational = token.parse().map_err(|_| {
                Error::MalformedInput(format!("{token:?} is not a rational number"))
            })?;
            entries.push(x);
        }
        PairSequence::new(entries)
    }
}

/// `Q_j(m, n)`. Empty products are one.
pub fn q_coefficient(a: &PairSequence, t: IndexTriple) -> Result<ExactRational> {
    t.validate(a.s())?;
    Ok(a.q_unchecked(t.m, t.j, t.n))
}

/// `C_{m,n} = a_{2m+1} + ... + a_{2n}`.
pub fn c_coefficient(a: &PairSequence, m: usize, n: usize) -> Result<ExactRational> {
    IndexTriple::new(m, m, n).validate(a.s())?;
    Ok(a.range_sum(2 * m + 1, 2 * n))
}

/// `C_{m,n} Q_j(m,n) − Σ_{k=m+1}^{j} a_{2k} Q_j(k,n) − Σ_{l=j}^{n−1} a_{2l+1} Q_j(m,l)`.
pub fn recursion_residual(a: &PairSequence, t: IndexTriple) -> Result<ExactRational> {
    t.validate(a.s())?;
    let IndexTriple { m, j, n } = t;
    let mut residual = a.range_sum(2 * m + 1, 2 * n) * a.q_unchecked(m, j, n);
    for k in m + 1..=j {
        residual -= a.a(2 * k) * a.q_unchecked(k, j, n);
    }
    for l in j..n {
        residual -= a.a(2 * l + 1) * a.q_unchecked(m, j, l);
    }
    Ok(residual)
}

/// `Σ_{j=m}^{n} Q_j(m,n) − 1`.
pub fn normalization_residual(a: &PairSequence, m: usize, n: usize) -> Result<ExactRational> {
    IndexTriple::new(m, m, n).validate(a.s())?;
    let total: ExactRational = (m..=n).map(|j| a.q_unchecked(m, j, n)).sum();
    Ok(total - ExactRational::one())
}

/// `Σ_{j=m}^{n} offset_j · Q_j(m,n)`; identically zero.
pub fn identity1_lhs(a: &PairSequence, m: usize, n: usize) -> Result<ExactRational> {
    IndexTriple::new(m, m, n).validate(a.s())?;
    Ok((m..=n)
        .map(|j| a.offset_unchecked(m, j, n) * a.q_unchecked(m, j, n))
        .sum())
}

/// Both sides of the second moment identity:
/// `Σ_j offset_j² · Q_j(m,n)` and `Σ_{i=m+1}^{n} a_{2i} Σ_{l=m+1}^{i} a_{2l−1}`.
pub fn identity2_sides(
    a: &PairSequence,
    m: usize,
    n: usize,
) -> Result<(ExactRational, ExactRational)> {
    IndexTriple::new(m, m, n).validate(a.s())?;
    let lhs: ExactRational = (m..=n)
        .map(|j| {
            let off = a.offset_unchecked(m, j, n);
            &off * &off * a.q_unchecked(m, j, n)
        })
        .sum();
    let rhs: ExactRational = (m + 1..=n)
        .map(|i| {
            let odd: ExactRational = (m + 1..=i).map(|l| a.a(2 * l - 1)).sum();
            a.a(2 * i) * odd
        })
        .sum();
    Ok((lhs, rhs))
}

/// Every valid `(m, j, n)` for a given `s`, in lexicographic order.
pub fn all_triples(s: usize) -> impl Iterator<Item = IndexTriple> {
    (0..=s).flat_map(move |m| {
        (m..=s).flat_map(move |j| (j..=s).map(move |n| IndexTriple::new(m, j, n)))
    })
}

/// Every valid `(m, n)` for a given `s`, in lexicographic order.
pub fn all_pairs(s: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=s).flat_map(move |m| (m..=s).map(move |n| (m, n)))
}

/// Ranges for randomly drawn sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SequenceBounds {
    pub max_s: usize,
    pub max_numerator: u32,
    pub max_denominator: u32,
}

impl Default for SequenceBounds {
    fn default() -> Self {
        SequenceBounds {
            max_s: 6,
            max_numerator: 50,
            max_denominator: 50,
        }
    }
}

/// Draws `s` uniformly from `1..=max_s`, then each entry as `p/q` with `p`
/// and `q` uniform in their ranges. Draw order is fixed: `s`, then
/// `(p, q)` for `a_1, a_2, ...`.
pub fn random_sequence<R: Rng + ?Sized>(rng: &mut R, bounds: SequenceBounds) -> PairSequence {
    let s = rng.gen_range(1..=bounds.max_s.max(1));
    let entries = (0..2 * s)
        .map(|_| {
            let p = rng.gen_range(1..=bounds.max_numerator.max(1));
            let q = rng.gen_range(1..=bounds.max_denominator.max(1));
            ExactRational::new(BigInt::from(p), BigInt::from(q))
        })
        .collect();
    PairSequence::new(entries).expect("drawn entries are positive")
}
