//! Young tableaux: shapes, fillings, validity predicates, promotion, and
//! decomposition into horizontally concatenated pieces.
//!
//! A [`Tableau`] stores one row of entries per line plus a per-row leading
//! offset, so both straight and skew fillings share a single type. The
//! offsets exist only for in-memory bookkeeping (pieces cut out of a larger
//! tableau keep their column alignment); text and JSON interfaces deal in
//! straight tableaux exclusively.
//!
//! Entries are positive integers. The transient empty box that appears
//! while a promotion slide is in flight never escapes this module: every
//! public value is a fully populated grid.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Shape
// ---------------------------------------------------------------------------

/// A partition shape: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Shape> {
        if rows.is_empty() {
            return Err(Error::Malformed("shape must have at least one row".into()));
        }
        if rows.contains(&0) {
            return Err(Error::Malformed("shape rows must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Malformed(format!(
                "shape rows must be weakly decreasing, got {rows:?}"
            )));
        }
        Ok(Shape { rows })
    }

    pub fn rectangular(num_rows: usize, num_cols: usize) -> Result<Shape> {
        Shape::new(vec![num_cols; num_rows])
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn boxes(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_rectangular(&self) -> bool {
        self.rows.iter().all(|&r| r == self.rows[0])
    }

    /// Column lengths of the shape (the conjugate partition).
    pub fn conjugate(&self) -> Vec<usize> {
        let cols = self.rows[0];
        (0..cols)
            .map(|j| self.rows.iter().filter(|&&r| r > j).count())
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// Content
// ---------------------------------------------------------------------------

/// Multiset of entry values as an exponent sequence: `exponents()[i]` is the
/// number of copies of the value `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Content {
    exponents: Vec<u32>,
}

impl Content {
    pub fn of(t: &Tableau) -> Content {
        let max = t.entries().max().unwrap_or(0) as usize;
        let mut exponents = vec![0u32; max];
        for v in t.entries() {
            exponents[(v - 1) as usize] += 1;
        }
        Content { exponents }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Content {
        Content { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Largest value the content covers.
    pub fn num_values(&self) -> usize {
        self.exponents.len()
    }

    pub fn boxes(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    /// True when every value occurs exactly once.
    pub fn is_standard(&self) -> bool {
        !self.exponents.is_empty() && self.exponents.iter().all(|&e| e == 1)
    }

    /// True when every value up to the maximum occurs at least once.
    pub fn is_dense(&self) -> bool {
        !self.exponents.is_empty() && self.exponents.iter().all(|&e| e >= 1)
    }
}

// ---------------------------------------------------------------------------
// Tableau
// ---------------------------------------------------------------------------

/// A filling of a (possibly skew) array of boxes with positive integers.
///
/// `rows[i]` holds the entries of row `i` left to right and `offsets[i]`
/// says how many absent boxes precede them, so the entry `rows[i][k]` sits
/// in absolute column `offsets[i] + k`. Straight tableaux have all offsets
/// zero. Rows may be empty; this is how zero-width pieces of a horizontal
/// decomposition keep their row count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    offsets: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Straight tableau from a shape and row-major cell values.
    pub fn new(shape: &Shape, cells: &[u32]) -> Result<Tableau> {
        if cells.len() != shape.boxes() {
            return Err(Error::Malformed(format!(
                "shape {shape} has {} boxes but {} cells were supplied",
                shape.boxes(),
                cells.len()
            )));
        }
        let mut rows = Vec::with_capacity(shape.num_rows());
        let mut at = 0;
        for &len in shape.rows() {
            rows.push(cells[at..at + len].to_vec());
            at += len;
        }
        Tableau::from_rows(rows)
    }

    /// Straight tableau from explicit rows. Any row-length profile is
    /// accepted; the validity predicates decide what the filling is.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let offsets = vec![0; rows.len()];
        Tableau::from_rows_with_offsets(offsets, rows)
    }

    /// Skew tableau from explicit rows and per-row leading offsets.
    pub fn from_rows_with_offsets(offsets: Vec<usize>, rows: Vec<Vec<u32>>) -> Result<Tableau> {
        if rows.is_empty() {
            return Err(Error::Malformed("tableau must have at least one row".into()));
        }
        if offsets.len() != rows.len() {
            return Err(Error::Malformed(format!(
                "{} offsets supplied for {} rows",
                offsets.len(),
                rows.len()
            )));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::Malformed("entries must be positive".into()));
        }
        Ok(Tableau { offsets, rows })
    }

    /// Parse the plain text format: one row per line, base-10 entries
    /// separated by whitespace; a blank line or end of input terminates.
    pub fn parse_text(input: &str) -> Result<Tableau> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for line in input.lines() {
            if line.trim().is_empty() {
                break;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| {
                        Error::Malformed(format!("entry {tok:?} is not a positive integer"))
                    })
                })
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Malformed("no tableau rows found in input".into()));
        }
        Tableau::from_rows(rows)
    }

    /// Render in the same text format that [`Tableau::parse_text`] reads.
    /// Offsets are not represented; only straight tableaux round-trip.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn content(&self) -> Content {
        Content::of(self)
    }

    pub fn is_straight(&self) -> bool {
        self.offsets.iter().all(|&o| o == 0)
    }

    /// Row lengths, top to bottom. Not necessarily a partition profile.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// The shape of a straight tableau whose row lengths form a partition.
    pub fn shape(&self) -> Result<Shape> {
        if !self.is_straight() {
            return Err(Error::Domain("skew tableau has no straight shape".into()));
        }
        Shape::new(self.row_lengths())
    }

    fn has_partition_profile(&self) -> bool {
        self.is_straight()
            && self.rows.iter().all(|r| !r.is_empty())
            && self
                .rows
                .windows(2)
                .all(|w| w[0].len() >= w[1].len())
    }

    /// Entries per absolute column, top to bottom.
    fn columns(&self) -> BTreeMap<usize, Vec<u32>> {
        let mut cols: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                cols.entry(self.offsets[i] + k).or_default().push(v);
            }
        }
        cols
    }

    /// Standard: straight partition shape filled bijectively with `1..=n`,
    /// rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        if !self.has_partition_profile() {
            return false;
        }
        let mut sorted: Vec<u32> = self.entries().collect();
        sorted.sort_unstable();
        if sorted
            .iter()
            .enumerate()
            .any(|(i, &v)| v != (i + 1) as u32)
        {
            return false;
        }
        self.rows_strictly_increase() && self.cols_strictly_increase()
    }

    /// Skew-standard: every entry is strictly smaller than all entries to
    /// its right in the same row and below it in the same column.
    pub fn is_skew_standard(&self) -> bool {
        self.rows_strictly_increase() && self.cols_strictly_increase()
    }

    /// Column-strict reverse of the usual convention: rows strictly
    /// increase, columns weakly increase, and every value from 1 to the
    /// maximum is present.
    pub fn is_column_ssyt(&self) -> bool {
        if !self.has_partition_profile() {
            return false;
        }
        if !self.rows_strictly_increase() {
            return false;
        }
        if !self
            .columns()
            .values()
            .all(|col| col.windows(2).all(|w| w[0] <= w[1]))
        {
            return false;
        }
        self.content().is_dense()
    }

    fn rows_strictly_increase(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    fn cols_strictly_increase(&self) -> bool {
        self.columns()
            .values()
            .all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_rectangular(&self) -> bool {
        self.has_partition_profile() && self.rows.iter().all(|r| r.len() == self.rows[0].len())
    }
}

/// Which validity predicate to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationKind {
    Standard,
    SkewStandard,
    ColumnSsyt,
}

impl ValidationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ValidationKind::Standard => "standard",
            ValidationKind::SkewStandard => "skew-standard",
            ValidationKind::ColumnSsyt => "column-ssyt",
        }
    }
}

/// Apply the validity predicate selected by `kind`.
pub fn validate(t: &Tableau, kind: ValidationKind) -> bool {
    match kind {
        ValidationKind::Standard => t.is_standard(),
        ValidationKind::SkewStandard => t.is_skew_standard(),
        ValidationKind::ColumnSsyt => t.is_column_ssyt(),
    }
}

// ---------------------------------------------------------------------------
// Promotion
// ---------------------------------------------------------------------------

/// Slide the hole at `(0, 0)` down-right until no box lies below or to the
/// right of it, moving the smaller neighbor into the hole at each step.
/// Returns the cells the hole visited, origin first. Equal neighbors are
/// impossible for fillings with distinct entries and abort loudly.
///
/// The caller is responsible for having conceptually emptied `rows[0][0]`;
/// its stale value is overwritten as the hole moves and the final hole cell
/// still holds a stale value on return.
pub(crate) fn slide_from_origin(rows: &mut [Vec<u32>]) -> Result<Vec<(usize, usize)>> {
    let (mut hi, mut hj) = (0usize, 0usize);
    let mut path = vec![(hi, hj)];
    loop {
        let right = if hj + 1 < rows[hi].len() {
            Some(rows[hi][hj + 1])
        } else {
            None
        };
        let below = if hi + 1 < rows.len() && hj < rows[hi + 1].len() {
            Some(rows[hi + 1][hj])
        } else {
            None
        };
        match (right, below) {
            (None, None) => break,
            (Some(b), None) => {
                rows[hi][hj] = b;
                hj += 1;
            }
            (None, Some(a)) => {
                rows[hi][hj] = a;
                hi += 1;
            }
            (Some(b), Some(a)) => {
                if b < a {
                    rows[hi][hj] = b;
                    hj += 1;
                } else if a < b {
                    rows[hi][hj] = a;
                    hi += 1;
                } else {
                    return Err(Error::Invariant(
                        "equal neighbors during a promotion slide".into(),
                    ));
                }
            }
        }
        path.push((hi, hj));
    }
    Ok(path)
}

/// Promotion of a standard tableau: remove the 1, slide the hole to the
/// outer boundary, decrement every entry, and fill the hole with `n`.
pub fn promote(t: &Tableau) -> Result<Tableau> {
    promote_with_path(t).map(|(out, _)| out)
}

/// [`promote`] plus the sequence of cells the sliding hole visited.
pub fn promote_with_path(t: &Tableau) -> Result<(Tableau, Vec<(usize, usize)>)> {
    if !t.is_standard() {
        return Err(Error::Domain(
            "promotion requires a standard tableau".into(),
        ));
    }
    let n = t.boxes() as u32;
    let mut rows = t.rows.clone();
    let path = slide_from_origin(&mut rows)?;
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            *v -= 1;
        }
    }
    let &(fi, fj) = path.last().expect("slide path is never empty");
    rows[fi][fj] = n;
    let out = Tableau::from_rows(rows)?;
    debug_assert!(out.is_standard());
    Ok((out, path))
}

/// `k`-fold promotion. `k = 0` returns the input unchanged.
pub fn promote_k(t: &Tableau, k: u64) -> Result<Tableau> {
    let mut cur = t.clone();
    for _ in 0..k {
        cur = promote(&cur)?;
    }
    Ok(cur)
}

// ---------------------------------------------------------------------------
// Equivalence
// ---------------------------------------------------------------------------

/// Left-justify every row and relabel the entries order-isomorphically
/// with `1..=n`. Requires a skew-standard filling with distinct entries.
pub fn standardize_relabel(t: &Tableau) -> Result<Tableau> {
    if !t.is_skew_standard() {
        return Err(Error::Domain(
            "standardization requires a skew-standard tableau".into(),
        ));
    }
    let mut sorted: Vec<u32> = t.entries().collect();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Domain(
            "standardization requires distinct entries".into(),
        ));
    }
    let rows = t
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    let rank = sorted.binary_search(v).expect("entry is in its own sorted list");
                    (rank + 1) as u32
                })
                .collect()
        })
        .collect();
    Tableau::from_rows(rows)
}

/// Tableaux are equivalent when left-justifying and relabeling both yields
/// the same grid.
pub fn equivalent(s: &Tableau, t: &Tableau) -> Result<bool> {
    if s.boxes() != t.boxes() {
        return Err(Error::Domain(format!(
            "size mismatch: {} boxes vs {} boxes",
            s.boxes(),
            t.boxes()
        )));
    }
    Ok(standardize_relabel(s)?.rows == standardize_relabel(t)?.rows)
}

/// Equivalent, and additionally the sorted entries differ by one constant
/// shift.
pub fn uniformly_equivalent(s: &Tableau, t: &Tableau) -> Result<bool> {
    if !equivalent(s, t)? {
        return Ok(false);
    }
    let mut a: Vec<u32> = s.entries().collect();
    let mut b: Vec<u32> = t.entries().collect();
    a.sort_unstable();
    b.sort_unstable();
    let shift = b[0] as i64 - a[0] as i64;
    Ok(a.iter()
        .zip(&b)
        .all(|(&x, &y)| y as i64 - x as i64 == shift))
}

// ---------------------------------------------------------------------------
// Uniformly proper rectangular subtableaux
// ---------------------------------------------------------------------------

/// A contiguous interval of entry values, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueInterval {
    pub lo: u32,
    pub hi: u32,
}

impl ValueInterval {
    pub fn new(lo: u32, hi: u32) -> ValueInterval {
        ValueInterval { lo, hi }
    }

    /// Number of values covered, always at least one.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains_interval(&self, other: &ValueInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

impl fmt::Display for ValueInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// One uniformly proper rectangular subtableau of a larger tableau: a
/// proper value interval whose boxes span every row with equal row lengths
/// and standardize to a standard tableau.
#[derive(Debug, Clone)]
pub struct UniformSubtableau {
    pub interval: ValueInterval,
    /// The boxes of the interval, as a skew piece with normalized offsets.
    pub piece: Tableau,
    /// True when no strictly smaller found interval is nested inside.
    pub minimal: bool,
}

/// Result of scanning a tableau for uniformly proper rectangular
/// subtableaux.
#[derive(Debug, Clone)]
pub struct UniformScan {
    /// Every uniformly proper rectangular subtableau, ordered by interval.
    pub subtableaux: Vec<UniformSubtableau>,
    /// True when the scan found none.
    pub input_is_minimal: bool,
}

/// If the value interval `[lo, hi]` cuts a uniformly proper rectangular
/// subtableau out of `t`, return the absolute start column of the cut in
/// each row together with the cut rows themselves.
fn uniform_interval_cut(t: &Tableau, lo: u32, hi: u32) -> Option<(Vec<usize>, Vec<Vec<u32>>)> {
    let r = t.num_rows();
    let len = (hi - lo + 1) as usize;
    if !len.is_multiple_of(r) {
        return None;
    }
    let w = len / r;
    if w == 0 {
        return None;
    }
    let mut starts = vec![usize::MAX; r];
    let mut cut: Vec<Vec<u32>> = vec![Vec::with_capacity(w); r];
    for (i, row) in t.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if lo <= v && v <= hi {
                if starts[i] == usize::MAX {
                    starts[i] = j;
                }
                cut[i].push(v);
            }
        }
    }
    if cut.iter().any(|row| row.len() != w) {
        return None;
    }
    for i in 1..r {
        for (upper, lower) in cut[i - 1].iter().zip(&cut[i]) {
            if upper >= lower {
                return None;
            }
        }
    }
    Some((starts, cut))
}

/// Scan a rectangular standard tableau for every uniformly proper
/// rectangular subtableau, flagging the minimal ones.
pub fn find_uniformly_proper(t: &Tableau) -> Result<UniformScan> {
    if !t.is_standard() || !t.is_rectangular() {
        return Err(Error::Domain(
            "subtableau scan requires a rectangular standard tableau".into(),
        ));
    }
    let n = t.boxes() as u32;
    let r = t.num_rows() as u32;
    let cols = (n / r) as usize;
    let mut found: Vec<(ValueInterval, Tableau)> = Vec::new();
    for w in 1..cols {
        let len = w as u32 * r;
        for lo in 1..=(n - len + 1) {
            let hi = lo + len - 1;
            if let Some((starts, cut)) = uniform_interval_cut(t, lo, hi) {
                let min_start = *starts.iter().min().expect("at least one row");
                let offsets = starts.iter().map(|&s| s - min_start).collect();
                let piece = Tableau::from_rows_with_offsets(offsets, cut)?;
                found.push((ValueInterval::new(lo, hi), piece));
            }
        }
    }
    found.sort_by_key(|(iv, _)| *iv);
    let intervals: Vec<ValueInterval> = found.iter().map(|(iv, _)| *iv).collect();
    let subtableaux = found
        .into_iter()
        .map(|(interval, piece)| {
            let minimal = intervals
                .iter()
                .all(|other| *other == interval || !interval.contains_interval(other));
            UniformSubtableau {
                interval,
                piece,
                minimal,
            }
        })
        .collect::<Vec<_>>();
    let input_is_minimal = subtableaux.is_empty();
    Ok(UniformScan {
        subtableaux,
        input_is_minimal,
    })
}

/// Split `t` as a horizontal concatenation `T1 S T2` where `S` is the
/// uniformly proper rectangular subtableau identified by `interval`. The
/// full interval is allowed and yields empty outer pieces with the same
/// row count.
pub fn concat_decompose(t: &Tableau, interval: ValueInterval) -> Result<(Tableau, Tableau, Tableau)> {
    if !t.is_standard() || !t.is_rectangular() {
        return Err(Error::Domain(
            "decomposition requires a rectangular standard tableau".into(),
        ));
    }
    let n = t.boxes() as u32;
    let r = t.num_rows();
    if interval.lo == 1 && interval.hi == n {
        let empty = Tableau {
            offsets: vec![0; r],
            rows: vec![Vec::new(); r],
        };
        return Ok((empty.clone(), t.clone(), empty));
    }
    let Some((starts, cut)) = uniform_interval_cut(t, interval.lo, interval.hi) else {
        return Err(Error::Domain(format!(
            "value interval {interval} does not identify a uniformly proper rectangular subtableau"
        )));
    };
    let w = cut[0].len();
    let mut left_rows = Vec::with_capacity(r);
    let mut right_rows = Vec::with_capacity(r);
    for (i, row) in t.rows().iter().enumerate() {
        left_rows.push(row[..starts[i]].to_vec());
        right_rows.push(row[starts[i] + w..].to_vec());
    }
    let min_start = *starts.iter().min().expect("at least one row");
    let mid_offsets: Vec<usize> = starts.iter().map(|&s| s - min_start).collect();
    let right_starts: Vec<usize> = starts.iter().map(|&s| s + w).collect();
    let min_right = *right_starts.iter().min().expect("at least one row");
    let right_offsets: Vec<usize> = right_starts.iter().map(|&s| s - min_right).collect();
    let t1 = Tableau::from_rows(left_rows)?;
    let s = Tableau::from_rows_with_offsets(mid_offsets, cut)?;
    let t2 = Tableau::from_rows_with_offsets(right_offsets, right_rows)?;
    Ok((t1, s, t2))
}

/// Concatenate tableaux row-wise, left to right. All parts must have the
/// same row count; offsets are dropped and the result is straight.
pub fn horizontal_concat(parts: &[&Tableau]) -> Result<Tableau> {
    let Some(first) = parts.first() else {
        return Err(Error::Domain("nothing to concatenate".into()));
    };
    let r = first.num_rows();
    if parts.iter().any(|p| p.num_rows() != r) {
        return Err(Error::Domain(
            "horizontal concatenation requires equal row counts".into(),
        ));
    }
    let rows = (0..r)
        .map(|i| {
            parts
                .iter()
                .flat_map(|p| p.rows()[i].iter().copied())
                .collect()
        })
        .collect();
    Tableau::from_rows(rows)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
pub(crate) const RUNNING_EXAMPLE: &str = "\
1 2 6 7 14 19
3 8 9 15 18 21
4 10 11 16 20 23
5 12 13 17 22 24
";
