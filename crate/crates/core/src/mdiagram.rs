//! Arc diagrams attached to standard tableaux.
//!
//! An m-diagram on `n` boundary points is a union of noncrossing layers,
//! one matching per adjacent pair of rows of a tableau: the entries of row
//! `i + 1` are matched, in increasing order, each to the largest entry of
//! row `i` that is at most as large and not yet taken. Rotating every
//! point one step (`p -> p - 1`, wrapping `1 -> n`) sends noncrossing
//! matchings to noncrossing matchings, which is what makes the diagrams
//! useful: rotation is the diagram-side shadow of promotion.
//!
//! Components group arcs under the smallest relation that merges arcs
//! sharing an endpoint and arcs that cross. A set of arcs closed under
//! both relations is a sub-diagram; components are the minimal ones.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::tableau::Tableau;

// ---------------------------------------------------------------------------
// Arcs
// ---------------------------------------------------------------------------

/// An arc between two boundary points, stored with `a <= b`. Degenerate
/// arcs `(i, i)` are representable; matchings built from tableaux never
/// contain them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    a: u32,
    b: u32,
}

impl Arc {
    pub fn new(x: u32, y: u32) -> Arc {
        if x <= y {
            Arc { a: x, b: y }
        } else {
            Arc { a: y, b: x }
        }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn shares_endpoint(&self, other: &Arc) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }

    /// Strict crossing: `a < c < b < d` up to swapping the arcs. Arcs that
    /// share an endpoint never cross.
    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b) = (self.a, self.b);
        let (c, d) = (other.a, other.b);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    /// Rotate both endpoints one step towards 1, wrapping `1 -> n`.
    pub fn rotate(&self, n: u32) -> Arc {
        Arc::new(rotate_point(self.a, n), rotate_point(self.b, n))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// One rotation step of a single point: `p -> p - 1`, wrapping `1 -> n`.
pub fn rotate_point(p: u32, n: u32) -> u32 {
    if p == 1 {
        n
    } else {
        p - 1
    }
}

/// `k` rotation steps of a single point.
pub fn rotate_point_k(p: u32, n: u32, k: u64) -> u32 {
    let r = (k % n as u64) as u32;
    (p - 1 + n - r) % n + 1
}

/// Rotate a set of points `k` steps; the result is sorted.
pub fn rotate_points_k(points: &[u32], n: u32, k: u64) -> Vec<u32> {
    let mut out: Vec<u32> = points.iter().map(|&p| rotate_point_k(p, n, k)).collect();
    out.sort_unstable();
    out
}

/// Rotate a collection of arcs `k` steps; the result is sorted.
pub fn rotate_arcs_k(arcs: &[Arc], n: u32, k: u64) -> Vec<Arc> {
    let mut out: Vec<Arc> = arcs
        .iter()
        .map(|arc| Arc::new(rotate_point_k(arc.a, n, k), rotate_point_k(arc.b, n, k)))
        .collect();
    out.sort_unstable();
    out
}

/// True when the sorted, deduplicated endpoint set of `arcs` is a run of
/// consecutive integers.
pub fn is_uniform(arcs: &[Arc]) -> bool {
    let points = endpoint_set(arcs);
    let points: Vec<u32> = points.into_iter().collect();
    !points.is_empty() && points.windows(2).all(|w| w[1] == w[0] + 1)
}

fn endpoint_set(arcs: &[Arc]) -> BTreeSet<u32> {
    arcs.iter().flat_map(|arc| [arc.a, arc.b]).collect()
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

/// A partial matching on the points `1..=n`: a set of arcs in which every
/// point belongs to at most one arc. A degenerate arc `(i, i)` counts as
/// occupying `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    n: u32,
    arcs: Vec<Arc>,
}

impl Matching {
    pub fn new(n: u32, mut arcs: Vec<Arc>) -> Result<Matching> {
        if n == 0 {
            return Err(Error::Malformed("matching needs at least one point".into()));
        }
        arcs.sort_unstable();
        arcs.dedup();
        let mut seen = BTreeSet::new();
        for arc in &arcs {
            if arc.a < 1 || arc.b > n {
                return Err(Error::Malformed(format!(
                    "arc {arc} has endpoints outside 1..{n}"
                )));
            }
            if !seen.insert(arc.a) || (arc.a != arc.b && !seen.insert(arc.b)) {
                return Err(Error::Malformed(format!(
                    "point used by more than one arc near {arc}"
                )));
            }
        }
        Ok(Matching { n, arcs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Every point of `1..=n` lies on an arc.
    pub fn is_perfect(&self) -> bool {
        endpoint_set(&self.arcs).len() == self.n as usize
    }

    /// Some pair of arcs crosses.
    pub fn is_crossing(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .any(|(i, p)| self.arcs[i + 1..].iter().any(|q| p.crosses(q)))
    }

    pub fn is_noncrossing(&self) -> bool {
        !self.is_crossing()
    }

    /// Contains a degenerate arc `(i, i)`.
    pub fn has_repetition(&self) -> bool {
        self.arcs.iter().any(Arc::is_degenerate)
    }

    /// Standard over the full ground set: every point of `1..=n` strictly
    /// between the endpoints of some arc is itself on an arc.
    pub fn is_standard(&self) -> bool {
        let ground: Vec<u32> = (1..=self.n).collect();
        self.is_standard_within(&ground)
    }

    /// Standard over a restricted ground set: every listed point strictly
    /// between the endpoints of some arc is itself on an arc.
    pub fn is_standard_within(&self, ground: &[u32]) -> bool {
        let on_arc = endpoint_set(&self.arcs);
        ground.iter().all(|&p| {
            let covered = self.arcs.iter().any(|arc| arc.a < p && p < arc.b);
            !covered || on_arc.contains(&p)
        })
    }

    /// Rotate every arc one step.
    pub fn rotate(&self) -> Matching {
        let arcs = self.arcs.iter().map(|arc| arc.rotate(self.n)).collect();
        Matching::new(self.n, arcs).expect("rotation preserves matchings")
    }
}

// ---------------------------------------------------------------------------
// M-diagrams
// ---------------------------------------------------------------------------

/// A union of noncrossing matchings ("layers") on a common point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDiagram {
    n: u32,
    layers: Vec<Matching>,
    arcs: Vec<Arc>,
}

impl MDiagram {
    pub fn new(n: u32, layers: Vec<Matching>) -> Result<MDiagram> {
        if n == 0 {
            return Err(Error::Malformed("diagram needs at least one point".into()));
        }
        for (i, layer) in layers.iter().enumerate() {
            if layer.n() != n {
                return Err(Error::Malformed(format!(
                    "layer {} is on {} points, diagram is on {n}",
                    i + 1,
                    layer.n()
                )));
            }
            if !layer.is_noncrossing() {
                return Err(Error::Domain(format!("layer {} is not noncrossing", i + 1)));
            }
        }
        let arcs: BTreeSet<Arc> = layers
            .iter()
            .flat_map(|layer| layer.arcs().iter().copied())
            .collect();
        Ok(MDiagram {
            n,
            layers,
            arcs: arcs.into_iter().collect(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn layers(&self) -> &[Matching] {
        &self.layers
    }

    /// All distinct arcs of the diagram, sorted.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// The points that lie on at least one arc.
    pub fn covered_points(&self) -> BTreeSet<u32> {
        endpoint_set(&self.arcs)
    }

    /// Rotate every layer one step.
    pub fn rotate(&self) -> MDiagram {
        let layers = self.layers.iter().map(Matching::rotate).collect();
        MDiagram::new(self.n, layers).expect("rotation preserves diagrams")
    }
}

/// Build the arc diagram of a standard tableau: one layer per adjacent
/// pair of rows, matching each entry of the lower row, in increasing
/// order, to the largest untaken entry of the upper row that does not
/// exceed it.
pub fn build_mdiagram(t: &Tableau) -> Result<MDiagram> {
    if !t.is_standard() {
        return Err(Error::Domain(
            "diagram construction requires a standard tableau".into(),
        ));
    }
    let n = t.boxes() as u32;
    let rows = t.rows();
    let mut layers = Vec::with_capacity(rows.len().saturating_sub(1));
    for pair in rows.windows(2) {
        let (top, bottom) = (&pair[0], &pair[1]);
        let mut used = vec![false; top.len()];
        let mut arcs = Vec::with_capacity(bottom.len());
        for &v in bottom {
            let candidates = top.partition_point(|&x| x <= v);
            let j = (0..candidates)
                .rev()
                .find(|&j| !used[j])
                .ok_or_else(|| {
                    Error::Invariant(format!("no untaken partner above entry {v}"))
                })?;
            used[j] = true;
            arcs.push(Arc::new(top[j], v));
        }
        let layer = Matching::new(n, arcs)
            .map_err(|e| Error::Invariant(format!("layer construction produced {e}")))?;
        if !layer.is_noncrossing() {
            return Err(Error::Invariant("constructed layer crosses itself".into()));
        }
        layers.push(layer);
    }
    MDiagram::new(n, layers)
        .map_err(|e| Error::Invariant(format!("diagram construction produced {e}")))
}

// ---------------------------------------------------------------------------
// Components
// ---------------------------------------------------------------------------

/// One component of a diagram: a minimal nonempty arc set closed under
/// sharing an endpoint and under crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// The arcs of the component, sorted.
    pub arcs: Vec<Arc>,
    /// The boundary: every endpoint of the component's arcs, sorted.
    pub boundary: Vec<u32>,
    /// True when the boundary is a run of consecutive integers.
    pub uniform: bool,
}

/// The full decomposition of a diagram into components, ordered by
/// smallest boundary point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
}

impl ComponentDecomposition {
    /// Boundary sets of all components, in decomposition order.
    pub fn boundaries(&self) -> Vec<Vec<u32>> {
        self.components.iter().map(|c| c.boundary.clone()).collect()
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(size: usize) -> DisjointSet {
        DisjointSet {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Partition the arcs of a diagram into components by merging arcs that
/// share an endpoint or cross.
pub fn decompose(m: &MDiagram) -> ComponentDecomposition {
    let arcs = m.arcs();
    let mut ds = DisjointSet::new(arcs.len());
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if arcs[i].shares_endpoint(&arcs[j]) || arcs[i].crosses(&arcs[j]) {
                ds.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Arc>> = BTreeMap::new();
    for (i, arc) in arcs.iter().enumerate() {
        groups.entry(ds.find(i)).or_default().push(*arc);
    }
    let mut components: Vec<Component> = groups
        .into_values()
        .map(|mut arcs| {
            arcs.sort_unstable();
            let boundary: Vec<u32> = endpoint_set(&arcs).into_iter().collect();
            let uniform = is_uniform(&arcs);
            Component {
                arcs,
                boundary,
                uniform,
            }
        })
        .collect();
    components.sort_by_key(|c| c.boundary[0]);
    ComponentDecomposition { components }
}

/// Check the two closure conditions directly: no arc outside the subset
/// shares an endpoint with an arc inside, and no arc outside crosses an
/// arc inside. The subset must be a nonempty subset of the diagram's arcs.
pub fn is_subdiagram(m: &MDiagram, subset: &[Arc]) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::Domain("sub-diagram test requires arcs".into()));
    }
    let all: BTreeSet<Arc> = m.arcs().iter().copied().collect();
    let chosen: BTreeSet<Arc> = subset.iter().copied().collect();
    if !chosen.is_subset(&all) {
        return Err(Error::Domain(
            "sub-diagram test requires arcs of the diagram".into(),
        ));
    }
    let outside: Vec<Arc> = all.difference(&chosen).copied().collect();
    Ok(chosen.iter().all(|inner| {
        outside
            .iter()
            .all(|outer| !inner.shares_endpoint(outer) && !inner.crosses(outer))
    }))
}

/// The least `k` in `0..n` with `rotate^k(c1) = c2` as arc sets, if any.
pub fn subdiagram_equivalent(c1: &[Arc], c2: &[Arc], n: u32) -> Result<Option<u32>> {
    for arc in c1.iter().chain(c2) {
        if arc.a() < 1 || arc.b() > n {
            return Err(Error::Malformed(format!(
                "arc {arc} has endpoints outside 1..{n}"
            )));
        }
    }
    let mut target: Vec<Arc> = c2.to_vec();
    target.sort_unstable();
    target.dedup();
    for k in 0..n {
        if rotate_arcs_k(c1, n, k as u64) == target {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The canonical form of the boundary partition: component boundaries,
/// each sorted, ordered by smallest element.
pub fn partition_signature(m: &MDiagram) -> Vec<Vec<u32>> {
    decompose(m).boundaries()
}

/// Canonical representative of a boundary partition up to rotation: the
/// lexicographically least among all `n` rotations (each rotation
/// re-canonicalized block-wise).
pub fn signature_rotation_class(signature: &[Vec<u32>], n: u32) -> Vec<Vec<u32>> {
    let mut best: Option<Vec<Vec<u32>>> = None;
    for k in 0..n as u64 {
        let mut rotated: Vec<Vec<u32>> = signature
            .iter()
            .map(|block| rotate_points_k(block, n, k))
            .collect();
        rotated.sort();
        if best.as_ref().is_none_or(|b| rotated < *b) {
            best = Some(rotated);
        }
    }
    best.unwrap_or_default()
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

/// Plain-text dump: one line per layer, arcs sorted.
pub fn render_text(m: &MDiagram) -> String {
    let mut out = String::new();
    for (i, layer) in m.layers().iter().enumerate() {
        out.push_str(&format!("layer {}:", i + 1));
        for arc in layer.arcs() {
            out.push_str(&format!(" {arc}"));
        }
        out.push('\n');
    }
    out
}

/// Deterministic SVG: points on a baseline, arcs as upper half-plane
/// semicircles, one stroke color per component. All coordinates are
/// integers so the output is byte-for-byte reproducible.
pub fn render_svg(m: &MDiagram) -> String {
    let n = m.n() as usize;
    let spacing = 40usize;
    let margin = 40usize;
    let max_radius = (n - 1) * spacing / 2;
    let baseline = max_radius + 30;
    let width = 2 * margin + (n - 1) * spacing;
    let height = baseline + 50;
    let x_of = |p: u32| margin + (p as usize - 1) * spacing;

    let decomposition = decompose(m);
    let mut color_of: BTreeMap<Arc, &str> = BTreeMap::new();
    for (ci, component) in decomposition.components.iter().enumerate() {
        for arc in &component.arcs {
            color_of.insert(*arc, PALETTE[ci % PALETTE.len()]);
        }
    }

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{baseline}\" x2=\"{}\" y2=\"{baseline}\" stroke=\"#999999\" \
         stroke-width=\"1\"/>\n",
        margin,
        width - margin
    ));
    for layer in m.layers() {
        for arc in layer.arcs() {
            let color = color_of.get(arc).copied().unwrap_or("#000000");
            if arc.is_degenerate() {
                let x = x_of(arc.a());
                svg.push_str(&format!(
                    "  <circle cx=\"{x}\" cy=\"{}\" r=\"6\" fill=\"none\" stroke=\"{color}\" \
                     stroke-width=\"2\"/>\n",
                    baseline - 8
                ));
            } else {
                let (x1, x2) = (x_of(arc.a()), x_of(arc.b()));
                let r = (arc.b() - arc.a()) as usize * spacing / 2;
                svg.push_str(&format!(
                    "  <path d=\"M {x1} {baseline} A {r} {r} 0 0 1 {x2} {baseline}\" \
                     fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n"
                ));
            }
        }
    }
    for p in 1..=m.n() {
        let x = x_of(p);
        svg.push_str(&format!(
            "  <circle cx=\"{x}\" cy=\"{baseline}\" r=\"3\" fill=\"#000000\"/>\n"
        ));
        svg.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" \
             text-anchor=\"middle\">{p}</text>\n",
            baseline + 20
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
