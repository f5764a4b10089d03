//! Randomized and exhaustive property suites for the whole library:
//! matching rotation, arc-diagram structure, component decomposition,
//! uniform blocks under promotion, orbit-length routes, and the
//! standardization map for column semi-standard tableaux.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use tableau_orbits::enumerate::{
    compositions, enumerate_column_ssyt_with_content, enumerate_syt, hook_length_count,
};
use tableau_orbits::mdiagram::{
    build_mdiagram, decompose, is_subdiagram, is_uniform, partition_signature, rotate_arcs_k,
    rotate_points_k, Arc, MDiagram, Matching,
};
use tableau_orbits::orbit::{
    component_promote, component_promote_k, component_promote_k_shortcut, component_tableaux,
    orbit_length_both, orbit_length_fast, orbit_length_oracle, ComponentTableau,
};
use tableau_orbits::ssyt::{
    content_period, orbit_length_ssyt, orbit_length_ssyt_oracle, promote_ssyt, psi, SsytTableau,
};
use tableau_orbits::tableau::{
    concat_decompose, equivalent, find_uniformly_proper, horizontal_concat, promote, promote_k,
    promote_with_path, standardize_relabel, uniformly_equivalent, Shape, Tableau, ValueInterval,
};

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Builds a standard tableau of the given shape by inserting 1..n in order,
/// each time picking one of the currently addable cells by the next choice
/// value. Every standard tableau of the shape is reachable.
fn build_syt(shape: &Shape, choices: &[u32]) -> Tableau {
    let widths = shape.rows();
    let r = widths.len();
    let mut filled = vec![0usize; r];
    let mut rows: Vec<Vec<u32>> = widths.iter().map(|&w| vec![0u32; w]).collect();
    for (v, &c) in choices.iter().enumerate() {
        let candidates: Vec<usize> = (0..r)
            .filter(|&i| filled[i] < widths[i] && (i == 0 || filled[i - 1] > filled[i]))
            .collect();
        let i = candidates[c as usize % candidates.len()];
        rows[i][filled[i]] = v as u32 + 1;
        filled[i] += 1;
    }
    Tableau::from_rows(rows).expect("growth fills the shape")
}

fn shape_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Shape> {
    prop::collection::vec(1..=max_cols, 1..=max_rows).prop_map(|mut widths| {
        widths.sort_unstable_by(|a, b| b.cmp(a));
        Shape::new(widths).expect("sorted positive widths form a shape")
    })
}

fn syt_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Tableau> {
    shape_strategy(max_rows, max_cols).prop_flat_map(|shape| {
        let n = shape.boxes();
        prop::collection::vec(any::<u32>(), n).prop_map(move |choices| build_syt(&shape, &choices))
    })
}

fn rect_syt_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Tableau> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        let shape = Shape::rectangular(r, c).expect("positive sides");
        let n = shape.boxes();
        prop::collection::vec(any::<u32>(), n).prop_map(move |choices| build_syt(&shape, &choices))
    })
}

/// A rectangular standard tableau assembled from two or three side-by-side
/// rectangular blocks carrying consecutive value ranges, so that each block
/// is a uniformly proper rectangular subtableau by construction.
fn concatenated_syt_strategy() -> impl Strategy<Value = Tableau> {
    (1usize..=4, prop::collection::vec(1usize..=3, 2..=3)).prop_flat_map(|(r, widths)| {
        let total: usize = widths.iter().sum::<usize>() * r;
        prop::collection::vec(any::<u32>(), total).prop_map(move |choices| {
            let mut cursor = 0usize;
            let mut shift = 0u32;
            let mut parts: Vec<Tableau> = Vec::new();
            for &w in &widths {
                let boxes = r * w;
                let shape = Shape::rectangular(r, w).expect("positive sides");
                let block = build_syt(&shape, &choices[cursor..cursor + boxes]);
                cursor += boxes;
                let rows: Vec<Vec<u32>> = block
                    .rows()
                    .iter()
                    .map(|row| row.iter().map(|&v| v + shift).collect())
                    .collect();
                parts.push(Tableau::from_rows(rows).expect("shifted block"));
                shift += boxes as u32;
            }
            let refs: Vec<&Tableau> = parts.iter().collect();
            horizontal_concat(&refs).expect("blocks share a row count")
        })
    })
}

/// A noncrossing perfect matching on `2 * pairs` points built from a
/// balanced-parentheses walk, paired with a sub-matching that keeps an
/// arbitrary subset of its arcs.
fn matching_pair_strategy(max_pairs: usize) -> impl Strategy<Value = (Matching, Matching)> {
    (1usize..=max_pairs).prop_flat_map(|pairs| {
        (
            prop::collection::vec(any::<bool>(), 2 * pairs),
            prop::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(move |(steps, keep)| {
                let n = (2 * pairs) as u32;
                let mut arcs: Vec<Arc> = Vec::with_capacity(pairs);
                let mut stack: Vec<u32> = Vec::new();
                let mut opened = 0usize;
                for (idx, &up) in steps.iter().enumerate() {
                    let remaining = 2 * pairs - idx;
                    let can_open = opened < pairs && stack.len() < remaining - 1;
                    let can_close = !stack.is_empty();
                    let open = if can_open && can_close { up } else { can_open };
                    let p = (idx + 1) as u32;
                    if open {
                        stack.push(p);
                        opened += 1;
                    } else {
                        let start = stack.pop().expect("walk never closes on empty");
                        arcs.push(Arc::new(start, p));
                    }
                }
                let perfect = Matching::new(n, arcs.clone()).expect("paired walk");
                let kept: Vec<Arc> = arcs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| keep[*j])
                    .map(|(_, &a)| a)
                    .collect();
                let sub = Matching::new(n, kept).expect("subset of a matching");
                (perfect, sub)
            })
    })
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn grid_of(t: &Tableau) -> Vec<Vec<u32>> {
    t.rows().to_vec()
}

/// All partitions with 1..=max_boxes boxes, parts weakly decreasing.
fn partitions_up_to(max_boxes: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_boxes {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Proper value intervals `[a, b]` whose points are covered exactly by a
/// union of whole components; these are the consecutive-endpoint unions of
/// the decomposition.
fn uniform_union_intervals(boundaries: &[Vec<u32>], n: u32) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for a in 1..=n {
        for b in a..=n {
            if b - a + 1 == n {
                continue;
            }
            let mut covered = 0u32;
            let mut clean = true;
            for boundary in boundaries {
                let lo = *boundary.first().expect("components are nonempty");
                let hi = *boundary.last().expect("components are nonempty");
                if a <= lo && hi <= b {
                    covered += boundary.len() as u32;
                } else if !(hi < a || b < lo) {
                    // Overlapping but not contained: cannot tile [a, b].
                    clean = clean && boundary.iter().all(|&p| p < a || b < p);
                }
            }
            if clean && covered == b - a + 1 {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Arcs of `m` with both endpoints inside `[lo, hi]`.
fn arcs_within(m: &MDiagram, lo: u32, hi: u32) -> Vec<Arc> {
    m.arcs()
        .iter()
        .copied()
        .filter(|arc| lo <= arc.a() && arc.b() <= hi)
        .collect()
}

// ---------------------------------------------------------------------------
// Matching rotation
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// Rotation keeps matchings perfect and noncrossing, also on partial
    /// sub-matchings, and a full cycle of rotations is the identity.
    #[test]
    fn rotation_preserves_matching_invariants((perfect, sub) in matching_pair_strategy(20)) {
        prop_assert!(perfect.is_perfect());
        prop_assert!(perfect.is_noncrossing());

        let rotated = perfect.rotate();
        prop_assert!(rotated.is_perfect());
        prop_assert!(rotated.is_noncrossing());

        prop_assert!(sub.is_noncrossing());
        prop_assert!(sub.rotate().is_noncrossing());

        let mut cycled = perfect.clone();
        for _ in 0..perfect.n() {
            cycled = cycled.rotate();
        }
        prop_assert_eq!(cycled, perfect);
    }
}

// ---------------------------------------------------------------------------
// Arc-diagram structure
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// Layer `i` of the diagram matches row `i+1` into row `i`: one arc per
    /// lower-row box, no repeated endpoint, noncrossing, standard within the
    /// two rows' entries, and each arc rises from the smaller entry in the
    /// upper row. On rectangular tableaux every point is covered, first-row
    /// points open arcs in layer 1 only, last-row points close arcs in the
    /// final layer only, and middle points do one of each in adjacent layers.
    #[test]
    fn diagram_layers_match_adjacent_rows(t in syt_strategy(5, 6)) {
        let m = build_mdiagram(&t).expect("standard input");
        let rows = t.rows();
        prop_assert_eq!(m.layers().len(), rows.len().saturating_sub(1));

        for (i, layer) in m.layers().iter().enumerate() {
            prop_assert_eq!(layer.arcs().len(), rows[i + 1].len());
            prop_assert!(!layer.has_repetition());
            prop_assert!(layer.is_noncrossing());

            let mut ground: Vec<u32> = rows[i].iter().chain(&rows[i + 1]).copied().collect();
            ground.sort_unstable();
            prop_assert!(layer.is_standard_within(&ground));

            let upper: BTreeSet<u32> = rows[i].iter().copied().collect();
            let lower: BTreeSet<u32> = rows[i + 1].iter().copied().collect();
            for arc in layer.arcs() {
                prop_assert!(arc.a() < arc.b());
                prop_assert!(upper.contains(&arc.a()));
                prop_assert!(lower.contains(&arc.b()));
            }
        }

        if t.is_rectangular() && rows.len() > 1 {
            let r = rows.len();
            // role[p] = (closes in layer i, opens in layer j), 1-based layers.
            let mut opens: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            let mut closes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for (i, layer) in m.layers().iter().enumerate() {
                for arc in layer.arcs() {
                    opens.entry(arc.a()).or_default().push(i + 1);
                    closes.entry(arc.b()).or_default().push(i + 1);
                }
            }
            for (i, row) in rows.iter().enumerate() {
                for &p in row {
                    let opened = opens.get(&p).cloned().unwrap_or_default();
                    let closed = closes.get(&p).cloned().unwrap_or_default();
                    if i == 0 {
                        prop_assert_eq!((opened, closed), (vec![1], vec![]));
                    } else if i == r - 1 {
                        prop_assert_eq!((opened, closed), (vec![], vec![r - 1]));
                    } else {
                        prop_assert_eq!((opened, closed), (vec![i + 1], vec![i]));
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Uniform blocks and arcs
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// No arc has exactly one endpoint inside a uniformly proper rectangular
    /// block's value interval.
    #[test]
    fn arcs_never_straddle_uniform_blocks(
        t in prop_oneof![rect_syt_strategy(4, 6), concatenated_syt_strategy()],
    ) {
        let scan = find_uniformly_proper(&t).expect("rectangular standard input");
        if scan.subtableaux.is_empty() {
            return Ok(());
        }
        let m = build_mdiagram(&t).expect("standard input");
        for sub in &scan.subtableaux {
            let (lo, hi) = (sub.interval.lo, sub.interval.hi);
            for arc in m.arcs() {
                let a_in = lo <= arc.a() && arc.a() <= hi;
                let b_in = lo <= arc.b() && arc.b() <= hi;
                prop_assert_eq!(a_in, b_in, "arc {} straddles {}..{}", arc, lo, hi);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// On rectangular tableaux with at least two rows, the value intervals
    /// of uniformly proper rectangular blocks are exactly the proper
    /// consecutive-endpoint unions of diagram components.
    #[test]
    fn uniform_blocks_match_component_unions(
        t in prop_oneof![rect_syt_strategy(4, 6), concatenated_syt_strategy()],
    ) {
        if t.num_rows() < 2 {
            return Ok(());
        }
        let n = t.boxes() as u32;
        let scan = find_uniformly_proper(&t).expect("rectangular standard input");
        let scanned: BTreeSet<(u32, u32)> = scan
            .subtableaux
            .iter()
            .map(|s| (s.interval.lo, s.interval.hi))
            .collect();

        let m = build_mdiagram(&t).expect("standard input");
        let boundaries = decompose(&m).boundaries();
        let unions = uniform_union_intervals(&boundaries, n);
        prop_assert_eq!(&scanned, &unions);

        // In particular every proper component with consecutive endpoints
        // shows up in the scan on its own.
        for boundary in &boundaries {
            let lo = boundary[0];
            let hi = *boundary.last().expect("nonempty");
            let consecutive = (hi - lo + 1) as usize == boundary.len();
            if consecutive && boundary.len() < n as usize {
                prop_assert!(scanned.contains(&(lo, hi)));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Promotion versus blocks and components
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// Promoting a tableau with a uniformly proper rectangular block not
    /// holding the value 1: the slide path crosses the block's box region in
    /// at most one row; the block reappears shifted down by one value as a
    /// block of the result, uniformly equivalent to the original; and the
    /// flanks promote as one tableau, up to relabeling.
    #[test]
    fn promotion_preserves_uniform_blocks(t in concatenated_syt_strategy()) {
        let scan = find_uniformly_proper(&t).expect("rectangular standard input");
        let (pt, path) = promote_with_path(&t).expect("standard input");

        for sub in &scan.subtableaux {
            let (lo, hi) = (sub.interval.lo, sub.interval.hi);
            if lo < 2 {
                continue;
            }

            let region: BTreeSet<(usize, usize)> = t
                .rows()
                .iter()
                .enumerate()
                .flat_map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, &v)| lo <= v && v <= hi)
                        .map(move |(j, _)| (i, j))
                })
                .collect();
            let rows_touched: BTreeSet<usize> = path
                .iter()
                .filter(|cell| region.contains(cell))
                .map(|cell| cell.0)
                .collect();
            prop_assert!(rows_touched.len() <= 1, "path cuts through several block rows");

            let (t1, s, t2) = concat_decompose(&t, sub.interval).expect("scanned interval");
            let shifted = ValueInterval::new(lo - 1, hi - 1);
            let (p1, sp, p2) = concat_decompose(&pt, shifted)
                .expect("the block persists one value lower after promotion");
            prop_assert!(uniformly_equivalent(&s, &sp).expect("same size"));

            let outer = horizontal_concat(&[&t1, &t2]).expect("same row count");
            let promoted_outer = promote(&standardize_relabel(&outer).expect("flanks relabel"))
                .expect("relabeled flanks are standard");
            let outer_of_promoted = horizontal_concat(&[&p1, &p2]).expect("same row count");
            prop_assert!(equivalent(&promoted_outer, &outer_of_promoted).expect("same size"));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// A consecutive-endpoint union of components avoiding the point 1 moves
    /// under promotion exactly as rotation moves it: its rotated arcs appear
    /// in the promoted tableau's diagram and again form a sub-diagram with
    /// consecutive endpoints.
    #[test]
    fn rotated_uniform_subdiagrams_persist(t in concatenated_syt_strategy()) {
        if t.num_rows() < 2 {
            return Ok(());
        }
        let n = t.boxes() as u32;
        let scan = find_uniformly_proper(&t).expect("rectangular standard input");
        let m = build_mdiagram(&t).expect("standard input");
        let pm = build_mdiagram(&promote(&t).expect("standard input")).expect("promotion output");

        for sub in &scan.subtableaux {
            let (lo, hi) = (sub.interval.lo, sub.interval.hi);
            if lo < 2 {
                continue;
            }
            let arcs = arcs_within(&m, lo, hi);
            prop_assert!(!arcs.is_empty(), "a two-row block always carries arcs");
            let rotated = rotate_arcs_k(&arcs, n, 1);
            prop_assert!(is_uniform(&rotated));
            prop_assert!(is_subdiagram(&pm, &rotated).expect("rotated arcs persist"));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// The boundary partition of the diagram rotates blockwise under
    /// promotion.
    #[test]
    fn promotion_shifts_component_boundaries(t in rect_syt_strategy(4, 6)) {
        let n = t.boxes() as u32;
        let before = partition_signature(&build_mdiagram(&t).expect("standard input"));
        let after = partition_signature(
            &build_mdiagram(&promote(&t).expect("standard input")).expect("promotion output"),
        );
        let mut expected: Vec<Vec<u32>> = before
            .iter()
            .map(|block| rotate_points_k(block, n, 1))
            .collect();
        expected.sort();
        prop_assert_eq!(after, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// For every component: the boxes of the promoted tableau holding the
    /// rotated boundary values are exactly the promoted component tableau,
    /// and the shortcut for iterated component promotion agrees with the
    /// step-by-step route wherever its leading-run precondition holds.
    #[test]
    fn component_promotion_matches_promoted_boxes(t in rect_syt_strategy(4, 6)) {
        if t.num_rows() < 2 {
            return Ok(());
        }
        let n = t.boxes() as u32;
        let pt = promote(&t).expect("standard input");
        let m = build_mdiagram(&t).expect("standard input");
        let decomposition = decompose(&m);
        let components = component_tableaux(&t).expect("rectangular standard input");
        prop_assert_eq!(components.len(), decomposition.components.len());

        for (c, part) in components.iter().zip(&decomposition.components) {
            prop_assert_eq!(c.content(), &part.boundary[..]);

            let promoted = component_promote(c, n).expect("component promotes");
            let rotated_boundary = rotate_points_k(&part.boundary, n, 1);
            let landed = ComponentTableau::from_component(&pt, &rotated_boundary)
                .expect("rotated boundary cuts a component of the promoted tableau");
            prop_assert_eq!(promoted.content(), landed.content());
            prop_assert_eq!(grid_of(promoted.grid()), grid_of(landed.grid()));

            let run = c
                .content()
                .iter()
                .enumerate()
                .take_while(|&(i, &v)| v == i as u32 + 1)
                .count() as u64;
            for k in 0..=run {
                let shortcut =
                    component_promote_k_shortcut(c, n, k).expect("leading run covers k");
                let iterated = component_promote_k(c, n, k).expect("component promotes");
                prop_assert_eq!(shortcut.content(), iterated.content());
                prop_assert_eq!(grid_of(shortcut.grid()), grid_of(iterated.grid()));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Component decomposition
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// Components partition the arc set, each passes the closure test, their
    /// boundaries are disjoint, and decomposing commutes with rotation.
    #[test]
    fn components_partition_the_diagram(t in syt_strategy(5, 6)) {
        let m = build_mdiagram(&t).expect("standard input");
        let decomposition = decompose(&m);

        let mut union: Vec<Arc> = Vec::new();
        let mut points: BTreeSet<u32> = BTreeSet::new();
        for part in &decomposition.components {
            union.extend(part.arcs.iter().copied());
            for &p in &part.boundary {
                prop_assert!(points.insert(p), "boundaries overlap at {}", p);
            }
            prop_assert!(is_subdiagram(&m, &part.arcs).expect("component arcs"));
            prop_assert_eq!(part.uniform, is_uniform(&part.arcs));
        }
        union.sort_unstable();
        let mut all: Vec<Arc> = m.arcs().to_vec();
        all.sort_unstable();
        prop_assert_eq!(union, all);

        let rotated_boundaries: BTreeSet<Vec<u32>> = decompose(&m.rotate())
            .boundaries()
            .into_iter()
            .collect();
        let expected: BTreeSet<Vec<u32>> = decomposition
            .boundaries()
            .iter()
            .map(|b| rotate_points_k(b, m.n(), 1))
            .collect();
        prop_assert_eq!(rotated_boundaries, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, ..ProptestConfig::default() })]

    /// The union-find decomposition agrees with a brute-force search for
    /// minimal nonempty arc subsets closed under endpoint sharing and
    /// crossing.
    #[test]
    fn components_match_bruteforce_minimal_closed_sets(
        t in syt_strategy(4, 4).prop_filter("at most 10 arcs", |t| {
            t.boxes() - t.rows()[0].len() <= 10
        }),
    ) {
        let m = build_mdiagram(&t).expect("standard input");
        let arcs = m.arcs();
        if arcs.is_empty() {
            return Ok(());
        }

        let mut closed: Vec<u32> = Vec::new();
        for mask in 1u32..(1 << arcs.len()) {
            let inside = |j: usize| mask & (1 << j) != 0;
            let mut ok = true;
            'outer: for (i, inner) in arcs.iter().enumerate() {
                if !inside(i) {
                    continue;
                }
                for (j, outer) in arcs.iter().enumerate() {
                    if inside(j) {
                        continue;
                    }
                    if inner.shares_endpoint(outer) || inner.crosses(outer) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                closed.push(mask);
            }
        }
        let minimal: BTreeSet<u32> = closed
            .iter()
            .copied()
            .filter(|&mask| {
                closed
                    .iter()
                    .all(|&other| other == mask || other & mask != other)
            })
            .collect();

        let expected: BTreeSet<u32> = decompose(&m)
            .components
            .iter()
            .map(|part| {
                let mut mask = 0u32;
                for arc in &part.arcs {
                    let j = arcs.iter().position(|other| other == arc).expect("own arc");
                    mask |= 1 << j;
                }
                mask
            })
            .collect();
        prop_assert_eq!(minimal, expected);
    }
}

// ---------------------------------------------------------------------------
// Orbit lengths
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig { cases: 1024, ..ProptestConfig::default() })]

    /// On random rectangular tableaux of up to 20 boxes: the certificate
    /// route agrees with the step-counting route, the diagram's rotational
    /// symmetry order divides the orbit length, and the orbit length divides
    /// the box count.
    #[test]
    fn symmetry_divides_orbit_and_routes_agree(
        t in (1usize..=5, 1usize..=10)
            .prop_filter("at most 20 boxes", |(r, c)| r * c <= 20)
            .prop_flat_map(|(r, c)| {
                let shape = Shape::rectangular(r, c).expect("positive sides");
                let n = shape.boxes();
                prop::collection::vec(any::<u32>(), n)
                    .prop_map(move |choices| build_syt(&shape, &choices))
            }),
    ) {
        let n = t.boxes() as u64;
        let fast = orbit_length_fast(&t).expect("rectangular standard input");
        let oracle = orbit_length_oracle(&t).expect("standard input");
        let both = orbit_length_both(&t).expect("routes agree");
        prop_assert_eq!(fast.orbit_length, oracle.orbit_length);
        prop_assert_eq!(both.orbit_length, fast.orbit_length);

        let symmetry = fast.symmetry_order.expect("certificate route reports N");
        prop_assert_eq!(fast.orbit_length % symmetry, 0);
        prop_assert_eq!(n % fast.orbit_length, 0);
    }
}

// ---------------------------------------------------------------------------
// Exhaustive promotion checks
// ---------------------------------------------------------------------------

/// A second, independently structured promotion: sparse map of occupied
/// cells, explicit hole walk, then a global decrement.
fn promote_reference(t: &Tableau) -> Tableau {
    let n = t.boxes() as u32;
    let mut cell_of: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (i, row) in t.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            cell_of.insert((i, j), v);
        }
    }
    cell_of.remove(&(0, 0));
    let mut hole = (0usize, 0usize);
    loop {
        let right = (hole.0, hole.1 + 1);
        let below = (hole.0 + 1, hole.1);
        let next = match (cell_of.get(&right), cell_of.get(&below)) {
            (None, None) => break,
            (Some(_), None) => right,
            (None, Some(_)) => below,
            (Some(&r), Some(&b)) => {
                assert_ne!(r, b, "a standard tableau never ties");
                if r < b {
                    right
                } else {
                    below
                }
            }
        };
        let v = cell_of.remove(&next).expect("chosen neighbor occupied");
        cell_of.insert(hole, v);
        hole = next;
    }
    cell_of.insert(hole, n + 1);
    let mut rows: Vec<Vec<u32>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    for ((i, j), v) in cell_of {
        rows[i][j] = v - 1;
    }
    Tableau::from_rows(rows).expect("same shape as the input")
}

/// Promotion agrees with an independent re-implementation, permutes the
/// tableaux of each shape, and relabeling is the identity on standard
/// tableaux — exhaustively over every shape with at most 9 boxes.
#[test]
fn promotion_matches_reference_exhaustively() {
    let mut checked = 0u64;
    for parts in partitions_up_to(9) {
        let shape = Shape::new(parts).expect("partition");
        let mut domain: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
        let mut image: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
        for t in enumerate_syt(&shape) {
            let promoted = promote(&t).expect("standard input");
            assert_eq!(
                promoted.rows(),
                promote_reference(&t).rows(),
                "promotion routes disagree on {:?}",
                t.rows()
            );
            assert_eq!(
                standardize_relabel(&t).expect("standard input").rows(),
                t.rows()
            );
            domain.insert(grid_of(&t));
            image.insert(grid_of(&promoted));
            checked += 1;
        }
        assert_eq!(
            domain.len() as u128,
            hook_length_count(&shape).expect("small shape")
        );
        assert_eq!(domain, image, "promotion must permute shape {:?}", shape.rows());
    }
    assert!(checked >= 1000, "exhaustive sweep covered {checked} tableaux");
}

/// Promoting a rectangular tableau once per box returns to the start —
/// exhaustively for every rectangular shape with at most 12 boxes.
#[test]
fn full_promotion_cycle_is_identity_on_rectangles() {
    let mut checked = 0u64;
    for r in 1..=12usize {
        for c in 1..=12usize {
            if r * c > 12 {
                continue;
            }
            let shape = Shape::rectangular(r, c).expect("positive sides");
            for t in enumerate_syt(&shape) {
                let cycled = promote_k(&t, (r * c) as u64).expect("standard input");
                assert_eq!(cycled.rows(), t.rows());
                checked += 1;
            }
        }
    }
    assert!(checked >= 1000, "exhaustive sweep covered {checked} tableaux");
}

// ---------------------------------------------------------------------------
// Standardization of column semi-standard tableaux
// ---------------------------------------------------------------------------

/// Exhaustively over all column semi-standard fillings with at most 8 boxes
/// and at most 4 values: standardization is injective for a fixed shape and
/// content, intertwines the two promotions, and its output is standard;
/// content cycles one step per promotion; on rectangular shapes the orbit
/// length of the period formula matches the step-counting oracle and the
/// content period divides the oracle length.
#[test]
fn standardization_exhaustive_suite() {
    let mut checked = 0u64;
    for parts in partitions_up_to(8) {
        let shape = Shape::new(parts).expect("partition");
        let boxes = shape.boxes() as u32;
        for values in 1..=4u32.min(boxes) {
            for content in compositions(boxes, values as usize) {
                let family = enumerate_column_ssyt_with_content(&shape, &content)
                    .expect("positive content");
                let mut images: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
                for t in &family {
                    checked += 1;
                    let standardized = psi(t);
                    assert!(standardized.is_standard());
                    images.insert(grid_of(&standardized));

                    let promoted = promote_ssyt(t).expect("valid input");
                    let mut cycled = t.exponents();
                    cycled.rotate_left(1);
                    assert_eq!(promoted.exponents(), cycled);

                    // The intertwining identity and the period formula only
                    // hold on rectangular shapes; see the counterexample
                    // test below for the smallest failure elsewhere.
                    if t.tableau().is_rectangular() {
                        assert_eq!(
                            psi(&promoted).rows(),
                            promote_k(&standardized, content[0] as u64)
                                .expect("standardized output")
                                .rows(),
                            "standardization must intertwine the promotions"
                        );
                        let oracle = orbit_length_ssyt_oracle(t).expect("finite orbit");
                        let period = content_period(&content).expect("positive content") as u64;
                        assert_eq!(oracle % period, 0);
                        let formula = orbit_length_ssyt(t, None).expect("rectangular input");
                        assert_eq!(formula.orbit_length, oracle);
                    } else if content[0] == 1 {
                        // Off the rectangle the identity still holds when a
                        // single box carries the lowest value: one slide pass
                        // follows the same path in both tableaux.
                        assert_eq!(
                            psi(&promoted).rows(),
                            promote_k(&standardized, 1)
                                .expect("standardized output")
                                .rows()
                        );
                    }
                }
                assert_eq!(
                    images.len(),
                    family.len(),
                    "standardization collided on shape {:?} content {:?}",
                    shape.rows(),
                    content
                );
            }
        }
    }
    assert!(checked >= 1000, "exhaustive sweep covered {checked} fillings");
}

/// The smallest shape on which standardization fails to intertwine the two
/// promotions, pinned as a regression test: with two copies of the lowest
/// value on a non-rectangular shape, the second slide pass diverges from the
/// second standard promotion, and the period formula overshoots the true
/// orbit length. This bounds the validity domain of the formula route to
/// rectangular shapes.
#[test]
fn standardization_commutation_fails_off_rectangles() {
    let t = SsytTableau::new(Tableau::from_rows(vec![vec![1, 2], vec![1]]).expect("grid"))
        .expect("valid column filling");

    let promoted = promote_ssyt(&t).expect("valid input");
    assert_eq!(promoted.tableau().rows(), &[vec![1, 2], vec![2]]);
    assert_eq!(psi(&promoted).rows(), &[vec![1, 2], vec![3]]);

    let standardized = psi(&t);
    assert_eq!(standardized.rows(), &[vec![1, 3], vec![2]]);
    let twice = promote_k(&standardized, 2).expect("standard input");
    assert_eq!(twice.rows(), &[vec![1, 3], vec![2]]);
    assert_ne!(psi(&promoted).rows(), twice.rows());

    // The true orbit closes after two steps; the period formula, fed the
    // true orbit length of the standardized tableau, still predicts four.
    assert_eq!(orbit_length_ssyt_oracle(&t).expect("finite orbit"), 2);
    let formula = orbit_length_ssyt(&t, Some(2)).expect("supplied orbit length");
    assert_eq!(formula.orbit_length, 4);
}
