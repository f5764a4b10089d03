//! Exhaustive tableau generation, hook-length counting, and orbit censuses.
//!
//! Standard tableaux stream out in lexicographic order of their row-major
//! reading words, generated by filling cells row by row and backtracking.
//! Column semi-standard tableaux enumerate over explicit contents. The
//! census partitions every standard tableau of a rectangular shape into
//! promotion orbits and tallies orbit lengths and boundary-partition
//! classes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mdiagram::{build_mdiagram, partition_signature, signature_rotation_class};
use crate::orbit::{orbit_length_fast, promotion_orbit, Method};
use crate::ssyt::SsytTableau;
use crate::tableau::{promote, Shape, Tableau};

/// Box-count cap for censuses unless a caller raises it.
pub const DEFAULT_CENSUS_LIMIT: usize = 16;

/// Streams every standard tableau of the shape exactly once, in
/// lexicographic order of row-major reading words.
pub fn enumerate_syt(shape: &Shape) -> SytIter {
    let rows = shape.rows().to_vec();
    let n = shape.boxes();
    let mut cells = Vec::with_capacity(n);
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            cells.push((i, j));
        }
    }
    let max_allowed = cells
        .iter()
        .map(|&(i, j)| {
            let tail: usize = rows[i..].iter().map(|&len| len.saturating_sub(j)).sum();
            (n - tail + 1) as u32
        })
        .collect();
    SytIter {
        cells,
        max_allowed,
        grid: rows.iter().map(|&len| vec![0u32; len]).collect(),
        used: vec![false; n + 1],
        depth: 0,
        next_try: 1,
        emitted_full: false,
        done: false,
    }
}

/// Backtracking generator behind [`enumerate_syt`].
pub struct SytIter {
    cells: Vec<(usize, usize)>,
    max_allowed: Vec<u32>,
    grid: Vec<Vec<u32>>,
    used: Vec<bool>,
    depth: usize,
    next_try: u32,
    emitted_full: bool,
    done: bool,
}

impl SytIter {
    fn backtrack(&mut self) -> bool {
        if self.depth == 0 {
            self.done = true;
            return false;
        }
        self.depth -= 1;
        let (i, j) = self.cells[self.depth];
        let prev = self.grid[i][j];
        self.grid[i][j] = 0;
        self.used[prev as usize] = false;
        self.next_try = prev + 1;
        true
    }
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        if self.emitted_full {
            self.emitted_full = false;
            if !self.backtrack() {
                return None;
            }
        }
        let total = self.cells.len();
        loop {
            if self.depth == total {
                self.emitted_full = true;
                let t = Tableau::from_rows(self.grid.clone()).expect("filled grid is valid");
                debug_assert!(t.is_standard());
                return Some(t);
            }
            let (i, j) = self.cells[self.depth];
            let left = if j > 0 { self.grid[i][j - 1] } else { 0 };
            let top = if i > 0 { self.grid[i - 1][j] } else { 0 };
            let cap = self.max_allowed[self.depth];
            let mut v = self.next_try.max(left + 1).max(top + 1);
            while v <= cap && self.used[v as usize] {
                v += 1;
            }
            if v > cap {
                if !self.backtrack() {
                    return None;
                }
                continue;
            }
            self.grid[i][j] = v;
            self.used[v as usize] = true;
            self.depth += 1;
            self.next_try = 1;
        }
    }
}

/// Number of standard tableaux of the shape: n! over the product of hook
/// lengths. Exact in 128 bits up to 34 boxes.
pub fn hook_length_count(shape: &Shape) -> Result<u128> {
    let n = shape.boxes();
    const LIMIT: usize = 34;
    if n > LIMIT {
        return Err(Error::LimitExceeded {
            what: "hook-length counting",
            boxes: n,
            limit: LIMIT,
        });
    }
    let conj = shape.conjugate();
    let mut hook_product: u128 = 1;
    for (i, &len) in shape.rows().iter().enumerate() {
        for (j, &col_len) in conj.iter().enumerate().take(len) {
            let hook = (len - j) + (col_len - i) - 1;
            hook_product *= hook as u128;
        }
    }
    let mut factorial: u128 = 1;
    for k in 1..=n {
        factorial *= k as u128;
    }
    if !factorial.is_multiple_of(hook_product) {
        return Err(Error::Invariant(
            "the hook product does not divide the factorial".into(),
        ));
    }
    Ok(factorial / hook_product)
}

/// All sequences of `parts` positive integers summing to `total`, in
/// lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, parts_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts_left == 1 {
            cur.push(remaining);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        let max = remaining - (parts_left as u32 - 1);
        for v in 1..=max {
            cur.push(v);
            rec(remaining - v, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 || (parts as u32) > total {
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Every column semi-standard tableau of the shape with the given content,
/// in lexicographic reading-word order.
pub fn enumerate_column_ssyt_with_content(
    shape: &Shape,
    exponents: &[u32],
) -> Result<Vec<SsytTableau>> {
    if exponents.is_empty() || exponents.contains(&0) {
        return Err(Error::Domain(
            "every value must occur at least once".into(),
        ));
    }
    let total: u64 = exponents.iter().map(|&e| u64::from(e)).sum();
    if total != shape.boxes() as u64 {
        return Err(Error::Domain(format!(
            "content fills {total} boxes but the shape has {}",
            shape.boxes()
        )));
    }
    let rows = shape.rows();
    let mut cells = Vec::with_capacity(shape.boxes());
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            cells.push((i, j));
        }
    }
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0u32; len]).collect();
    let mut remaining = exponents.to_vec();
    let mut out = Vec::new();
    fn rec(
        depth: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut [u32],
        out: &mut Vec<SsytTableau>,
    ) -> Result<()> {
        if depth == cells.len() {
            let t = Tableau::from_rows(grid.clone())?;
            out.push(SsytTableau::new(t)?);
            return Ok(());
        }
        let (i, j) = cells[depth];
        let left = if j > 0 { grid[i][j - 1] } else { 0 };
        let top = if i > 0 { grid[i - 1][j] } else { 1 };
        let lo = (left + 1).max(top);
        for v in lo..=(remaining.len() as u32) {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            grid[i][j] = v;
            remaining[v as usize - 1] -= 1;
            rec(depth + 1, cells, grid, remaining, out)?;
            remaining[v as usize - 1] += 1;
            grid[i][j] = 0;
        }
        Ok(())
    }
    rec(0, &cells, &mut grid, &mut remaining, &mut out)?;
    Ok(out)
}

/// Every column semi-standard tableau of the shape using exactly
/// `num_values` values, grouped by content in lexicographic content order.
pub fn enumerate_column_ssyt(shape: &Shape, num_values: usize) -> Result<Vec<SsytTableau>> {
    if num_values == 0 {
        return Err(Error::Domain("at least one value is required".into()));
    }
    let mut out = Vec::new();
    for content in compositions(shape.boxes() as u32, num_values) {
        out.extend(enumerate_column_ssyt_with_content(shape, &content)?);
    }
    Ok(out)
}

/// Orbit statistics for one rectangular shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub shape: Vec<usize>,
    pub tableau_count: u64,
    pub orbit_length_histogram: BTreeMap<u64, u64>,
    pub partition_signature_classes: u64,
}

impl CensusRecord {
    /// Compact single-line JSON with fields in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("census record serializes")
    }
}

fn orbit_members_checked(t: &Tableau, expected: u64) -> Result<Vec<Tableau>> {
    let mut members = Vec::with_capacity(expected as usize);
    let mut cur = t.clone();
    for _ in 0..expected {
        members.push(cur.clone());
        cur = promote(&cur)?;
    }
    if cur != *t {
        return Err(Error::Invariant(
            "the certified orbit length did not return to the start".into(),
        ));
    }
    Ok(members)
}

/// Partitions all standard tableaux of a rectangular shape into promotion
/// orbits. Each orbit is counted once, keyed by its lexicographically least
/// member. With `method` both, the fast length is checked against the
/// iterated orbit for every tableau.
pub fn census(shape: &Shape, method: Method, limit: usize) -> Result<CensusRecord> {
    if !shape.is_rectangular() {
        return Err(Error::Domain("census requires a rectangular shape".into()));
    }
    let n = shape.boxes();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "census",
            boxes: n,
            limit,
        });
    }
    let mut tableau_count = 0u64;
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut classes: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    for t in enumerate_syt(shape) {
        tableau_count += 1;
        let members = match method {
            Method::Oracle => promotion_orbit(&t)?,
            Method::Fast => {
                let expected = orbit_length_fast(&t)?.orbit_length;
                orbit_members_checked(&t, expected)?
            }
            Method::Both => {
                let fast = orbit_length_fast(&t)?.orbit_length;
                let members = promotion_orbit(&t)?;
                if fast != members.len() as u64 {
                    return Err(Error::Invariant(format!(
                        "fast orbit length {fast} disagrees with the iterated {}",
                        members.len()
                    )));
                }
                members
            }
        };
        let length = members.len() as u64;
        let is_canonical = members.iter().all(|m| t.rows() <= m.rows());
        if is_canonical {
            *histogram.entry(length).or_insert(0) += 1;
        }
        let diagram = build_mdiagram(&t)?;
        classes.insert(signature_rotation_class(
            &partition_signature(&diagram),
            n as u32,
        ));
    }
    let expected = hook_length_count(shape)?;
    if u128::from(tableau_count) != expected {
        return Err(Error::Invariant(format!(
            "enumerated {tableau_count} tableaux but the hook count is {expected}"
        )));
    }
    let covered: u64 = histogram.iter().map(|(len, cnt)| len * cnt).sum();
    if covered != tableau_count {
        return Err(Error::Invariant(format!(
            "orbits cover {covered} tableaux out of {tableau_count}"
        )));
    }
    Ok(CensusRecord {
        shape: shape.rows().to_vec(),
        tableau_count,
        orbit_length_histogram: histogram,
        partition_signature_classes: classes.len() as u64,
    })
}
