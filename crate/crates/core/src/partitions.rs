//! Integer partitions and their Young diagrams (English convention).
//!
//! Boxes are addressed 1-based as `(row, col)`, rows counted from the top.
//! Addable corners are indexed bottom to top: corner `0` starts a new last
//! row, corner `s` extends the first row.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive parts. Doubles as a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

/// 1-based `(row, col)` address of a diagram cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }

    /// `col - row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Interleaved staircase profile `(p_1, k_1, ..., p_s, k_s)`.
///
/// `p_i` are horizontal step widths read from the bottom-left corner and
/// `k_i` the matching vertical runs (part multiplicities).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepCoords {
    steps: Vec<usize>,
}

/// A diagram obtained by adding one box to a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    /// Position `j` in bottom-to-top order.
    pub index: usize,
    /// The added box `b^(j)`.
    pub cell: BoxCoord,
    /// The enlarged diagram `λ^(j)`.
    pub result: Partition,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increases.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NotAPartition(format!("part {} is zero", pos + 1)));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of rows (nonzero parts).
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); zero below the diagram.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-based); zero right of the diagram.
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.row_len(b.row)
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| BoxCoord::new(i + 1, c)))
    }

    /// Distinct part values with their multiplicities, largest value first.
    ///
    /// `(4,4,4,3,3,1,1,1)` gives `[(4,3), (3,2), (1,3)]`.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((v, k)) if *v == p => *k += 1,
                _ => groups.push((p, 1)),
            }
        }
        groups
    }

    /// Number of distinct part values, `s`.
    pub fn distinct_parts(&self) -> usize {
        self.grouped().len()
    }

    pub fn hook_length(&self, b: BoxCoord) -> Result<usize> {
        hook_length(self, b)
    }

    /// Product of all hook lengths; one for the empty diagram.
    pub fn hook_product(&self) -> BigUint {
        self.boxes()
            .map(|b| self.hook_unchecked(b))
            .fold(BigUint::from(1u32), |acc, h| acc * h)
    }

    fn hook_unchecked(&self, b: BoxCoord) -> usize {
        let arm = self.row_len(b.row) - b.col;
        let leg = self.col_len(b.col) - b.row;
        arm + leg + 1
    }

    /// Hook lengths laid out row by row.
    pub fn hook_grid(&self) -> Vec<Vec<usize>> {
        (1..=self.rows())
            .map(|r| {
                (1..=self.row_len(r))
                    .map(|c| self.hook_unchecked(BoxCoord::new(r, c)))
                    .collect()
            })
            .collect()
    }

    /// Contents laid out row by row.
    pub fn content_grid(&self) -> Vec<Vec<i64>> {
        (1..=self.rows())
            .map(|r| {
                (1..=self.row_len(r))
                    .map(|c| BoxCoord::new(r, c).content())
                    .collect()
            })
            .collect()
    }

    /// Whether `b` is a removable corner: the last box of its row and column.
    pub fn is_removable(&self, b: BoxCoord) -> bool {
        self.contains(b) && b.col == self.row_len(b.row) && b.row == self.col_len(b.col)
    }

    pub fn step_coordinates(&self) -> Result<StepCoords> {
        step_coordinates(self)
    }

    pub fn addable_corners(&self) -> Vec<Corner> {
        addable_corners(self)
    }
}

impl fmt::Display for Partition {
    /// Exchange format: `4,3,1`; the empty partition prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Parses the comma-separated exchange format, e.g. `"4,3,1"` or `"4, 3, 1"`.
///
/// Blank input is the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value: i64 = token
            .parse()
            .map_err(|_| Error::MalformedInput(format!("{token:?} is not an integer")))?;
        if value <= 0 {
            return Err(Error::NotAPartition(format!(
                "part {value} is not positive"
            )));
        }
        parts.push(value as usize);
    }
    Partition::new(parts)
}

pub fn hook_length(lambda: &Partition, b: BoxCoord) -> Result<usize> {
    if !lambda.contains(b) {
        return Err(Error::BoxOutsideDiagram {
            row: b.row,
            col: b.col,
        });
    }
    Ok(lambda.hook_unchecked(b))
}

/// Content `col - row`. Pure coordinate arithmetic; `lambda` is not consulted.
pub fn content(_lambda: &Partition, b: BoxCoord) -> i64 {
    b.content()
}

impl StepCoords {
    pub fn new(steps: Vec<usize>) -> Result<Self> {
        if steps.is_empty() || !steps.len().is_multiple_of(2) {
            return Err(Error::InvalidStepCoords(format!(
                "expected a nonempty even number of entries, got {}",
                steps.len()
            )));
        }
        if let Some(pos) = steps.iter().position(|&x| x == 0) {
            return Err(Error::InvalidStepCoords(format!(
                "entry {} is not positive",
                pos + 1
            )));
        }
        Ok(StepCoords { steps })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.steps
    }

    /// Number of steps `s`.
    pub fn s(&self) -> usize {
        self.steps.len() / 2
    }

    /// Horizontal width `p_i`, 1-based.
    pub fn p(&self, i: usize) -> usize {
        self.steps[2 * (i - 1)]
    }

    /// Vertical run `k_i`, 1-based.
    pub fn k(&self, i: usize) -> usize {
        self.steps[2 * i - 1]
    }

    pub fn to_partition(&self) -> Partition {
        from_step_coordinates_unchecked(self)
    }
}

impl fmt::Display for StepCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

pub fn step_coordinates(lambda: &Partition) -> Result<StepCoords> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let groups = lambda.grouped();
    let mut steps = Vec::with_capacity(2 * groups.len());
    let mut prev = 0;
    // smallest part value first
    for &(value, mult) in groups.iter().rev() {
        steps.push(value - prev);
        steps.push(mult);
        prev = value;
    }
    Ok(StepCoords { steps })
}

/// Inverse of [`step_coordinates`]. Accepts the raw interleaved entries.
pub fn from_step_coordinates(steps: &[usize]) -> Result<Partition> {
    let sc = StepCoords::new(steps.to_vec())?;
    Ok(from_step_coordinates_unchecked(&sc))
}

fn from_step_coordinates_unchecked(sc: &StepCoords) -> Partition {
    let s = sc.s();
    let mut value = 0;
    let mut levels = Vec::with_capacity(s);
    for i in 1..=s {
        value += sc.p(i);
        levels.push((value, sc.k(i)));
    }
    let parts: Vec<usize> = levels
        .iter()
        .rev()
        .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
        .collect();
    let n = parts.iter().sum();
    Partition { parts, n }
}

/// The `s + 1` diagrams reachable by adding one box, bottom (`j = 0`) to top.
pub fn addable_corners(lambda: &Partition) -> Vec<Corner> {
    let groups = lambda.grouped();
    let mut corners = Vec::with_capacity(groups.len() + 1);

    let new_row = BoxCoord::new(lambda.rows() + 1, 1);
    corners.push(Corner {
        index: 0,
        cell: new_row,
        result: with_box(lambda, new_row),
    });

    // first row of each group, walking groups from the bottom
    let mut first_rows = Vec::with_capacity(groups.len());
    let mut row = 1;
    for &(value, mult) in &groups {
        first_rows.push((row, value));
        row += mult;
    }
    for (j, &(row, value)) in first_rows.iter().rev().enumerate() {
        let cell = BoxCoord::new(row, value + 1);
        corners.push(Corner {
            index: j + 1,
            cell,
            result: with_box(lambda, cell),
        });
    }
    corners
}

fn with_box(lambda: &Partition, cell: BoxCoord) -> Partition {
    let mut parts = lambda.parts.clone();
    if cell.row > parts.len() {
        parts.push(1);
    } else {
        parts[cell.row - 1] += 1;
    }
    debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    Partition {
        parts,
        n: lambda.n + 1,
    }
}

/// `Σ_{i≤j} p_i − Σ_{i>j} k_i`, the content of the corner box `b^(j)`
/// read off the step coordinates.
pub fn corner_content_via_steps(sc: &StepCoords, j: usize) -> Result<i64> {
    let s = sc.s();
    if j > s {
        return Err(Error::IndexOutOfRange { index: j, max: s });
    }
    let right: usize = (1..=j).map(|i| sc.p(i)).sum();
    let down: usize = (j + 1..=s).map(|i| sc.k(i)).sum();
    Ok(right as i64 - down as i64)
}

/// Iterator over all partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
        n,
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
    n: usize,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition {
            parts: current,
            n: self.n,
        })
    }
}

// Decrement the last part > 1 and refill the remainder greedily.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..pos].to_vec();
    let cap = parts[pos] - 1;
    next.push(cap);
    let mut rest: usize = parts[pos + 1..].iter().sum::<usize>() + 1;
    while rest > 0 {
        let take = rest.min(cap);
        next.push(take);
        rest -= take;
    }
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Independent counter: partitions of n with parts at most `max`.
    fn count_bounded(n: usize, max: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n))
            .map(|first| count_bounded(n - first, first))
            .sum()
    }

    #[test]
    fn parse_examples() {
        let lambda = parse_partition("4,3,1").unwrap();
        assert_eq!(lambda.parts(), &[4, 3, 1]);
        assert_eq!(lambda.size(), 8);

        let empty = parse_partition("").unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.size(), 0);

        assert_eq!(parse_partition(" 4 , 3,1 ").unwrap(), lambda);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_partition("3,4,1"),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            parse_partition("3,0"),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            parse_partition("3,-1"),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            parse_partition("3,x"),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            parse_partition("3,,1"),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            parse_partition("2.5"),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in ["4,3,1", "1", ""] {
            assert_eq!(parse_partition(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_length(&p(&[4, 3, 1]), BoxCoord::new(1, 2)).unwrap(), 4);
        assert_eq!(hook_length(&p(&[1]), BoxCoord::new(1, 1)).unwrap(), 1);
        assert_eq!(hook_length(&p(&[4, 2, 1]), BoxCoord::new(1, 1)).unwrap(), 6);
        assert_eq!(
            hook_length(&p(&[4, 2, 1]), BoxCoord::new(2, 3)),
            Err(Error::BoxOutsideDiagram { row: 2, col: 3 })
        );
        assert!(hook_length(&p(&[4, 2, 1]), BoxCoord::new(0, 1)).is_err());
    }

    #[test]
    fn hook_grid_of_431() {
        assert_eq!(
            p(&[4, 3, 1]).hook_grid(),
            vec![vec![6, 4, 3, 1], vec![4, 2, 1], vec![1]]
        );
        assert_eq!(
            p(&[4, 3, 1]).hook_product(),
            BigUint::from(6u32 * 4 * 3 * 4 * 2)
        );
        assert_eq!(Partition::empty().hook_product(), BigUint::from(1u32));
    }

    #[test]
    fn content_examples() {
        let lambda = p(&[5, 5, 5, 5, 5]);
        assert_eq!(content(&lambda, BoxCoord::new(1, 1)), 0);
        assert_eq!(content(&lambda, BoxCoord::new(1, 4)), 3);
        assert_eq!(content(&lambda, BoxCoord::new(5, 1)), -4);
    }

    #[test]
    fn step_coordinate_examples() {
        let sc = step_coordinates(&p(&[8, 8, 4, 4, 1, 1, 1])).unwrap();
        assert_eq!(sc.as_slice(), &[1, 3, 3, 2, 4, 2]);
        assert_eq!(sc.to_string(), "(1,3,3,2,4,2)");

        let sc = step_coordinates(&p(&[4, 4, 4, 3, 3, 1, 1, 1])).unwrap();
        assert_eq!(sc.as_slice(), &[1, 3, 2, 2, 1, 3]);

        assert_eq!(step_coordinates(&p(&[1])).unwrap().as_slice(), &[1, 1]);
        assert_eq!(
            step_coordinates(&Partition::empty()),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn grouped_form() {
        assert_eq!(
            p(&[4, 4, 4, 3, 3, 1, 1, 1]).grouped(),
            vec![(4, 3), (3, 2), (1, 3)]
        );
    }

    #[test]
    fn from_step_coordinate_examples() {
        assert_eq!(
            from_step_coordinates(&[1, 3, 3, 2, 4, 2]).unwrap(),
            p(&[8, 8, 4, 4, 1, 1, 1])
        );
        assert_eq!(from_step_coordinates(&[1, 1]).unwrap(), p(&[1]));
        assert_eq!(
            from_step_coordinates(&[2, 2, 1, 2]).unwrap(),
            p(&[3, 3, 2, 2])
        );
        assert_eq!(
            step_coordinates(&p(&[3, 3, 2, 2])).unwrap().as_slice(),
            &[2, 2, 1, 2]
        );

        assert!(matches!(
            from_step_coordinates(&[1, 2, 3]),
            Err(Error::InvalidStepCoords(_))
        ));
        assert!(matches!(
            from_step_coordinates(&[1, 0]),
            Err(Error::InvalidStepCoords(_))
        ));
        assert!(matches!(
            from_step_coordinates(&[]),
            Err(Error::InvalidStepCoords(_))
        ));
    }

    #[test]
    fn corners_of_3322() {
        let corners = addable_corners(&p(&[3, 3, 2, 2]));
        let cells: Vec<_> = corners.iter().map(|c| (c.cell.row, c.cell.col)).collect();
        assert_eq!(cells, vec![(5, 1), (3, 3), (1, 4)]);
        assert_eq!(corners[0].result, p(&[3, 3, 2, 2, 1]));
        assert_eq!(corners[1].result, p(&[3, 3, 3, 2]));
        assert_eq!(corners[2].result, p(&[4, 3, 2, 2]));
        assert!(corners.iter().enumerate().all(|(j, c)| c.index == j));
    }

    #[test]
    fn corners_of_small_shapes() {
        let corners = addable_corners(&Partition::empty());
        assert_eq!(corners.len(), 1);
        assert_eq!(corners[0].cell, BoxCoord::new(1, 1));
        assert_eq!(corners[0].result, p(&[1]));

        let corners = addable_corners(&p(&[1]));
        assert_eq!(corners.len(), 2);
        assert_eq!(corners[0].cell, BoxCoord::new(2, 1));
        assert_eq!(corners[0].result, p(&[1, 1]));
        assert_eq!(corners[1].cell, BoxCoord::new(1, 2));
        assert_eq!(corners[1].result, p(&[2]));
    }

    #[test]
    fn corner_contents_from_steps() {
        let sc = StepCoords::new(vec![2, 2, 1, 2]).unwrap();
        assert_eq!(corner_content_via_steps(&sc, 0).unwrap(), -4);
        assert_eq!(corner_content_via_steps(&sc, 1).unwrap(), 0);
        assert_eq!(corner_content_via_steps(&sc, 2).unwrap(), 3);
        assert_eq!(
            corner_content_via_steps(&sc, 3),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        );
    }

    #[test]
    fn enumeration_examples() {
        let zero: Vec<_> = partitions_of(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);

        let four: Vec<Vec<usize>> = partitions_of(4).map(|l| l.parts().to_vec()).collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(10).count(), 42);
    }

    #[test]
    fn enumeration_counts_match_recursive_counter() {
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for n in 1..=10 {
            assert_eq!(partitions_of(n).count() as u64, expected[n - 1]);
        }
        for n in 0..=20 {
            assert_eq!(
                partitions_of(n).count() as u64,
                count_bounded(n, n),
                "n={n}"
            );
        }
    }

    #[test]
    fn enumeration_is_strictly_decreasing_and_valid() {
        for n in 1..=15 {
            let all: Vec<_> = partitions_of(n).collect();
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
            for lambda in &all {
                assert_eq!(lambda.size(), n);
                assert_eq!(Partition::new(lambda.parts().to_vec()).as_ref(), Ok(lambda));
            }
        }
    }

    #[test]
    fn structural_invariants_up_to_twenty() {
        for n in 1..=20 {
            for lambda in partitions_of(n) {
                let sc = step_coordinates(&lambda).unwrap();
                assert_eq!(sc.to_partition(), lambda);
                assert_eq!(sc.s(), lambda.distinct_parts());

                let size: usize = (1..=sc.s())
                    .map(|i| sc.k(i) * (1..=i).map(|l| sc.p(l)).sum::<usize>())
                    .sum();
                assert_eq!(size, n);

                let corners = addable_corners(&lambda);
                assert_eq!(corners.len(), sc.s() + 1);
                let mut last = i64::MIN;
                for c in &corners {
                    assert_eq!(c.result.size(), n + 1);
                    assert!(c.result.contains(c.cell));
                    assert!(!lambda.contains(c.cell));
                    let via_steps = corner_content_via_steps(&sc, c.index).unwrap();
                    assert_eq!(via_steps, content(&c.result, c.cell));
                    assert!(via_steps > last);
                    last = via_steps;
                }

                for b in lambda.boxes() {
                    let h = hook_length(&lambda, b).unwrap();
                    assert!(h >= 1);
                    assert_eq!(h == 1, lambda.is_removable(b));
                }
            }
        }
    }
}
