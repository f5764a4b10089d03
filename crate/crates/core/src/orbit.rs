//! Promotion orbit lengths for standard tableaux.
//!
//! Two routes are provided. The oracle iterates promotion until the input
//! recurs. The fast route works on rectangular tableaux only: it decomposes
//! the arc diagram into components, finds the rotational symmetry order `N`
//! of the boundary partition, and then searches for the least multiple of
//! `N` at which component promotion realigns every component tableau with
//! the rotated boundary layout. The product is the orbit length, and the
//! report carries the full certificate.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mdiagram::{build_mdiagram, decompose, partition_signature, rotate_points_k, MDiagram};
use crate::tableau::{promote, promote_k, slide_from_origin, standardize_relabel, Tableau};

/// Which route computed an orbit length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Fast,
    Both,
}

/// One component's promotion result at the certified step count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub component_boundary: Vec<u32>,
    pub k: u64,
    pub result_grid: Vec<Vec<u32>>,
}

/// Orbit length plus the certificate that produced it.
///
/// The `symmetry_order`, `multiplier`, `degenerate_to_oracle`, and `trace`
/// fields are populated by the fast route only and are omitted from JSON
/// when absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub shape: Vec<usize>,
    pub method: Method,
    pub orbit_length: u64,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub symmetry_order: Option<u64>,
    #[serde(rename = "ell", skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate_to_oracle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
}

impl OrbitReport {
    /// Compact single-line JSON with fields in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("orbit report serializes")
    }
}

/// A rectangular tableau carved out of a larger one: the entries with values
/// in a component boundary set, left-justified row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTableau {
    content: Vec<u32>,
    grid: Tableau,
}

impl ComponentTableau {
    /// Wraps a straight rectangular grid with distinct entries whose rows and
    /// columns strictly increase. The content is the sorted entry list.
    pub fn new(grid: Tableau) -> Result<ComponentTableau> {
        if !grid.is_straight() || !grid.is_rectangular() {
            return Err(Error::Domain(
                "a component tableau must be straight and rectangular".into(),
            ));
        }
        let relabeled = standardize_relabel(&grid).map_err(|_| {
            Error::Domain("component tableau rows and columns must strictly increase".into())
        })?;
        if !relabeled.is_standard() {
            return Err(Error::Domain(
                "component tableau entries must be distinct".into(),
            ));
        }
        let mut content: Vec<u32> = grid.entries().collect();
        content.sort_unstable();
        Ok(ComponentTableau { content, grid })
    }

    /// Extracts the entries of `t` with values in `boundary`, keeping each
    /// row's relative order and left-justifying the result.
    pub fn from_component(t: &Tableau, boundary: &[u32]) -> Result<ComponentTableau> {
        let set: std::collections::BTreeSet<u32> = boundary.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::Domain("empty boundary set".into()));
        }
        let mut present = 0usize;
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(t.num_rows());
        for row in t.rows() {
            let picked: Vec<u32> = row.iter().copied().filter(|v| set.contains(v)).collect();
            present += picked.len();
            rows.push(picked);
        }
        if present != set.len() {
            return Err(Error::Domain(
                "boundary values missing from the tableau".into(),
            ));
        }
        let width = rows[0].len();
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::Domain(
                "boundary values do not cut equal-length rows".into(),
            ));
        }
        ComponentTableau::new(Tableau::from_rows(rows)?)
    }

    pub fn content(&self) -> &[u32] {
        &self.content
    }

    pub fn grid(&self) -> &Tableau {
        &self.grid
    }
}

/// One step of component promotion inside an ambient tableau of size `n`.
///
/// When the component does not contain the value 1 every entry decrements.
/// When it does, the 1 is removed, the hole slides to the border, every
/// entry decrements, and `n` fills the final hole.
pub fn component_promote(c: &ComponentTableau, n: u32) -> Result<ComponentTableau> {
    let max = *c.content.last().expect("content is nonempty");
    if max > n {
        return Err(Error::Domain(format!(
            "component values reach {max} but the ambient size is {n}"
        )));
    }
    let mut rows = c.grid.rows().to_vec();
    if c.content[0] > 1 {
        for row in rows.iter_mut() {
            for v in row.iter_mut() {
                *v -= 1;
            }
        }
    } else {
        if rows[0][0] != 1 {
            return Err(Error::Invariant(
                "value 1 is not in the top-left corner of its component".into(),
            ));
        }
        let path = slide_from_origin(&mut rows)?;
        for row in rows.iter_mut() {
            for v in row.iter_mut() {
                *v -= 1;
            }
        }
        let &(fi, fj) = path.last().expect("slide path is never empty");
        rows[fi][fj] = n;
    }
    ComponentTableau::new(Tableau::from_rows(rows)?)
        .map_err(|e| Error::Invariant(format!("component promotion broke the grid: {e}")))
}

/// `k`-fold component promotion by iterating single steps.
pub fn component_promote_k(c: &ComponentTableau, n: u32, k: u64) -> Result<ComponentTableau> {
    let mut cur = c.clone();
    for _ in 0..k {
        cur = component_promote(&cur, n)?;
    }
    Ok(cur)
}

/// `k`-fold component promotion in one shot: standardize the grid, promote
/// the standardized tableau `k` times, and relabel the result onto the
/// rotated content.
///
/// Valid only while the slide case fires on every step, which requires the
/// content to start with the run 1, 2, …, k. Returns a domain error outside
/// that range.
pub fn component_promote_k_shortcut(
    c: &ComponentTableau,
    n: u32,
    k: u64,
) -> Result<ComponentTableau> {
    let run = c
        .content
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| v == i as u32 + 1)
        .count() as u64;
    if k > run {
        return Err(Error::Domain(format!(
            "the shortcut needs the content to start with 1..={k}, but the initial run stops at {run}"
        )));
    }
    let std_grid = standardize_relabel(&c.grid)?;
    let promoted = promote_k(&std_grid, k)?;
    let target = rotate_points_k(&c.content, n, k);
    let rows: Vec<Vec<u32>> = promoted
        .rows()
        .iter()
        .map(|row| row.iter().map(|&v| target[v as usize - 1]).collect())
        .collect();
    ComponentTableau::new(Tableau::from_rows(rows)?)
}

/// Least positive rotation that maps the component boundary partition of a
/// diagram onto itself. Requires every boundary point to lie on an arc, and
/// checks that the answer divides the number of points.
pub fn rotational_symmetry_order(m: &MDiagram) -> Result<u64> {
    let n = m.n();
    if m.covered_points().len() != n as usize {
        return Err(Error::Domain(
            "rotational symmetry needs every boundary point on an arc".into(),
        ));
    }
    let base = canonical_partition(&partition_signature(m));
    for cand in 1..=n {
        let rotated: Vec<Vec<u32>> = base
            .iter()
            .map(|block| rotate_points_k(block, n, u64::from(cand)))
            .collect();
        if canonical_partition(&rotated) == base {
            if !n.is_multiple_of(cand) {
                return Err(Error::Invariant(format!(
                    "rotational symmetry order {cand} does not divide {n}"
                )));
            }
            return Ok(u64::from(cand));
        }
    }
    Err(Error::Invariant(
        "the full rotation failed to fix the boundary partition".into(),
    ))
}

fn canonical_partition(blocks: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    out.sort();
    out
}

/// Component tableaux of `t`, one per component of its arc diagram, in the
/// decomposition's order.
pub fn component_tableaux(t: &Tableau) -> Result<Vec<ComponentTableau>> {
    let m = build_mdiagram(t)?;
    let decomposition = decompose(&m);
    decomposition
        .boundaries()
        .iter()
        .map(|b| ComponentTableau::from_component(t, b))
        .collect()
}

/// The full promotion orbit of `t`, starting at `t` itself.
pub fn promotion_orbit(t: &Tableau) -> Result<Vec<Tableau>> {
    if !t.is_standard() {
        return Err(Error::Domain(
            "orbit computation requires a standard tableau".into(),
        ));
    }
    const CAP: usize = 10_000_000;
    let mut orbit = vec![t.clone()];
    loop {
        let next = promote(orbit.last().expect("orbit is nonempty"))?;
        if next == *t {
            return Ok(orbit);
        }
        orbit.push(next);
        if orbit.len() > CAP {
            return Err(Error::Invariant(
                "promotion failed to return to the start".into(),
            ));
        }
    }
}

/// Orbit length by direct iteration of promotion.
pub fn orbit_length_oracle(t: &Tableau) -> Result<OrbitReport> {
    let orbit = promotion_orbit(t)?;
    let length = orbit.len() as u64;
    if t.is_rectangular() {
        let n = t.boxes() as u64;
        if !n.is_multiple_of(length) {
            return Err(Error::Invariant(format!(
                "orbit length {length} does not divide the rectangle size {n}"
            )));
        }
    }
    Ok(OrbitReport {
        shape: t.row_lengths(),
        method: Method::Oracle,
        orbit_length: length,
        symmetry_order: None,
        multiplier: None,
        degenerate_to_oracle: None,
        trace: None,
    })
}

/// Orbit length for a rectangular standard tableau without iterating the
/// full orbit: rotational symmetry of the boundary partition fixes `N`, and
/// the per-component promotion check fixes the multiplier.
pub fn orbit_length_fast(t: &Tableau) -> Result<OrbitReport> {
    if !t.is_standard() || !t.is_rectangular() {
        return Err(Error::Domain(
            "the fast orbit route requires a rectangular standard tableau".into(),
        ));
    }
    let n = t.boxes() as u64;
    let n32 = t.boxes() as u32;
    if t.num_rows() == 1 {
        return Ok(OrbitReport {
            shape: t.row_lengths(),
            method: Method::Fast,
            orbit_length: 1,
            symmetry_order: Some(1),
            multiplier: Some(1),
            degenerate_to_oracle: Some(false),
            trace: Some(Vec::new()),
        });
    }
    let m = build_mdiagram(t)?;
    let decomposition = decompose(&m);
    let symmetry = rotational_symmetry_order(&m)?;
    let boundaries = decomposition.boundaries();
    let degenerate = boundaries.len() == 1;
    let index_of: BTreeMap<Vec<u32>, usize> = boundaries
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let originals: Vec<ComponentTableau> = boundaries
        .iter()
        .map(|b| ComponentTableau::from_component(t, b))
        .collect::<Result<_>>()?;
    let mut advanced = originals.clone();
    let mut steps_taken = 0u64;
    for ell in 1..=(n / symmetry) {
        let k = ell * symmetry;
        if !n.is_multiple_of(k) {
            continue;
        }
        for c in advanced.iter_mut() {
            *c = component_promote_k(c, n32, k - steps_taken)?;
        }
        steps_taken = k;
        let mut aligned = true;
        let mut trace = Vec::with_capacity(boundaries.len());
        for (i, boundary) in boundaries.iter().enumerate() {
            let rotated = rotate_points_k(boundary, n32, k);
            let j = *index_of.get(&rotated).ok_or_else(|| {
                Error::Invariant(
                    "a rotated component boundary left the boundary partition".into(),
                )
            })?;
            if advanced[i].grid() != originals[j].grid() {
                aligned = false;
                break;
            }
            trace.push(TraceEntry {
                component_boundary: boundary.clone(),
                k,
                result_grid: advanced[i].grid().rows().to_vec(),
            });
        }
        if aligned {
            return Ok(OrbitReport {
                shape: t.row_lengths(),
                method: Method::Fast,
                orbit_length: k,
                symmetry_order: Some(symmetry),
                multiplier: Some(ell),
                degenerate_to_oracle: Some(degenerate),
                trace: Some(trace),
            });
        }
    }
    Err(Error::Invariant(
        "component promotion never realigned with the boundary rotation".into(),
    ))
}

/// Runs both routes and checks they agree; the report carries the fast
/// certificate with the method marked as `both`.
pub fn orbit_length_both(t: &Tableau) -> Result<OrbitReport> {
    let fast = orbit_length_fast(t)?;
    let oracle = orbit_length_oracle(t)?;
    if fast.orbit_length != oracle.orbit_length {
        return Err(Error::Invariant(format!(
            "fast orbit length {} disagrees with the oracle's {}",
            fast.orbit_length, oracle.orbit_length
        )));
    }
    Ok(OrbitReport {
        method: Method::Both,
        ..fast
    })
}
