//! Second-selection engines against direct counting, and the planarity test
//! against Kuratowski obstructions.

mod common;

use common::distinct_set;
use induced_core::second::{
    check_cubic_lemma, delaunay_graph, gen_interval_upper, grid_depth_map, interval_bound_holds,
    interval_depth_profile, interval_partition_holds, is_planar, partition_rectangles, planarity_check,
    rectangle_bound_holds, rectangle_grid_counts, sample_subset, InducedSubset,
};
use induced_core::{validate_general_position, Family, PointSet};
use proptest::prelude::*;

fn closed_in(lo: i64, hi: i64, x: i64) -> bool {
    lo.min(hi) <= x && x <= lo.max(hi)
}

/// A line set with distinct values and a random subset of its pairs.
fn line_with_subset() -> impl Strategy<Value = (PointSet, InducedSubset)> {
    distinct_set(1, 2..=30)
        .prop_flat_map(|set| {
            let total = set.len() * (set.len() - 1) / 2;
            (Just(set), 0..=total, any::<u64>())
        })
        .prop_map(|(set, m, seed)| {
            let subset = sample_subset(&set, Family::Interval, m, seed).unwrap();
            (set, subset)
        })
}

fn plane_with_subset() -> impl Strategy<Value = (PointSet, InducedSubset)> {
    distinct_set(2, 2..=18)
        .prop_flat_map(|set| {
            let total = set.len() * (set.len() - 1) / 2;
            (Just(set), 0..=total, any::<u64>())
        })
        .prop_map(|(set, m, seed)| {
            let subset = sample_subset(&set, Family::Rectangle, m, seed).unwrap();
            (set, subset)
        })
}

/// Planar sets with coordinates drawn from a wide range.
fn wide_set(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PointSet> {
    n.prop_flat_map(|n| proptest::collection::vec((-1_000_000i64..1_000_000, -1_000_000i64..1_000_000), n))
        .prop_filter_map("repeated point", |pts| PointSet::planar(&pts).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn interval_profile_counts_closed_intervals((set, subset) in line_with_subset()) {
        let profile = interval_depth_profile(&set, &subset).unwrap();
        for (k, p) in set.points().iter().enumerate() {
            let expected = subset
                .pairs()
                .iter()
                .filter(|&&(i, j)| closed_in(set.point(i).coord(0), set.point(j).coord(0), p.coord(0)))
                .count() as u64;
            prop_assert_eq!(profile.depths[k], expected);
        }
        prop_assert_eq!(profile.max, profile.depths.iter().copied().max().unwrap_or(0));
        prop_assert_eq!(profile.depths[profile.argmax], profile.max);
        prop_assert!(profile.bound_holds);
        prop_assert!(interval_bound_holds(set.len(), subset.len(), profile.max));
        prop_assert!(interval_partition_holds(&set, &subset).unwrap());
    }

    #[test]
    fn grid_map_counts_closed_rectangles((set, subset) in plane_with_subset()) {
        let map = grid_depth_map(&set, &subset).unwrap();
        let counts = rectangle_grid_counts(&set, &subset).unwrap();
        let inside = |&(i, j): &(usize, usize), x: i64, y: i64| {
            closed_in(set.point(i).coord(0), set.point(j).coord(0), x)
                && closed_in(set.point(i).coord(1), set.point(j).coord(1), y)
        };
        for (gx, &x) in map.grid.xs.iter().enumerate() {
            for (gy, &y) in map.grid.ys.iter().enumerate() {
                let expected = subset.pairs().iter().filter(|r| inside(r, x, y)).count() as u64;
                prop_assert_eq!(map.at(gx, gy), expected);
            }
        }
        for (r, pair) in subset.pairs().iter().enumerate() {
            let expected = map
                .grid
                .xs
                .iter()
                .flat_map(|&x| map.grid.ys.iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| inside(pair, x, y))
                .count() as u64;
            prop_assert_eq!(counts[r], expected);
        }
        prop_assert_eq!(map.total(), counts.iter().sum::<u64>());
        prop_assert_eq!(map.at(map.argmax.0, map.argmax.1), map.max);
        prop_assert_eq!(map.bound_holds, rectangle_bound_holds(set.len(), subset.len(), map.max));
        prop_assert!(map.bound_holds);
    }

    #[test]
    fn rectangles_go_to_their_lower_endpoint((set, subset) in plane_with_subset()) {
        let partition = partition_rectangles(&set, &subset).unwrap();
        let mut seen = vec![false; subset.len()];
        for (base, part) in partition.parts.iter().enumerate() {
            let sides = part.right.iter().map(|&r| (r, true)).chain(part.left.iter().map(|&r| (r, false)));
            for (r, right) in sides {
                prop_assert!(!seen[r]);
                seen[r] = true;
                let (i, j) = subset.pairs()[r];
                prop_assert!(i == base || j == base);
                let other = if i == base { j } else { i };
                prop_assert!(set.point(other).coord(1) > set.point(base).coord(1));
                prop_assert_eq!(set.point(other).coord(0) > set.point(base).coord(0), right);
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
        prop_assert!(check_cubic_lemma(&set, &subset).unwrap().holds);
    }

    #[test]
    fn delaunay_graphs_are_planar(set in wide_set(3..=22)) {
        let mut checked = set.clone();
        prop_assume!(validate_general_position(&mut checked).is_ok());
        let mut sums: Vec<i64> = set.points().iter().map(|p| p.coord(0) + p.coord(1)).collect();
        sums.sort_unstable();
        sums.dedup();
        prop_assume!(sums.len() == set.len());
        for family in [Family::Skyline, Family::DownTriangle, Family::Disk] {
            let edges = delaunay_graph(&set, family).unwrap();
            let report = planarity_check(set.len(), &edges);
            prop_assert!(report.euler_bound, "{} has {} edges on {} points", family, edges.len(), set.len());
            prop_assert!(report.planar, "{} graph is not planar", family);
        }
    }
}

#[test]
fn interval_upper_construction_matches_its_bound() {
    for n in [8usize, 16, 40, 100] {
        let limit = (1..).take_while(|&m| gen_interval_upper(n, m).is_ok()).last().unwrap_or(0);
        assert!(limit > 0, "no admissible m for n = {n}");
        for m in [1, limit / 3, limit / 2, limit].into_iter().filter(|&m| m > 0) {
            let (set, subset) = gen_interval_upper(n, m).unwrap();
            assert_eq!(subset.len(), m);
            let profile = interval_depth_profile(&set, &subset).unwrap();
            assert!(profile.bound_holds);
            // The depth stays within a constant factor of the bound's leading terms.
            let (nf, mf) = (n as f64, m as f64);
            let bound = mf * mf / (2.0 * nf * nf) + 3.0 * mf / (2.0 * nf) - 1.0;
            assert!(profile.max as f64 <= 4.0 * bound.max(1.0) + 2.0, "n = {n}, m = {m}: {} vs {bound}", profile.max);
        }
        assert!(gen_interval_upper(n, limit + 1).is_err());
    }
}

#[test]
fn all_pairs_bounds() {
    for n in 2..=24i64 {
        let set = PointSet::line(&(1..=n).collect::<Vec<_>>()).unwrap();
        let subset = InducedSubset::all(n as usize, Family::Interval);
        let profile = interval_depth_profile(&set, &subset).unwrap();
        // The middle point lies in x (n - 1 - x) + n - 1 closed intervals.
        let x = (n - 1) / 2;
        assert_eq!(profile.max as i64, x * (n - 1 - x) + n - 1);
        assert!(profile.bound_holds);
    }
}

/// Nonplanarity on at most six vertices: a `K5`, a `K3,3`, or a `K5` with one
/// edge subdivided by the sixth vertex.
fn kuratowski(n: usize, adj: &[[bool; 6]; 6]) -> bool {
    let verts: Vec<usize> = (0..n).collect();
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| verts.iter().copied().filter(|&v| m >> v & 1 == 1).collect())
            .collect()
    };
    for five in subsets(5) {
        let missing: Vec<(usize, usize)> = five
            .iter()
            .flat_map(|&a| five.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a < b && !adj[a][b])
            .collect();
        if missing.is_empty() {
            return true;
        }
        if let [(a, b)] = missing[..] {
            if let Some(s) = verts.iter().find(|v| !five.contains(v)) {
                if adj[*s][a] && adj[*s][b] {
                    return true;
                }
            }
        }
    }
    if n == 6 {
        for left in subsets(3) {
            let right: Vec<usize> = verts.iter().copied().filter(|v| !left.contains(v)).collect();
            if left.iter().all(|&a| right.iter().all(|&b| adj[a][b])) {
                return true;
            }
        }
    }
    false
}

#[test]
fn planarity_agrees_with_kuratowski_on_six_vertices() {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
    let mut nonplanar = 0;
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        let mut adj = [[false; 6]; 6];
        for &(a, b) in &edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let expected = !kuratowski(6, &adj);
        assert_eq!(is_planar(6, &edges), expected, "edges {edges:?}");
        nonplanar += usize::from(!expected);
    }
    assert!(nonplanar > 0);
}

#[test]
fn planarity_on_named_graphs() {
    let complete = |n: usize| (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect::<Vec<_>>();
    assert!(is_planar(4, &complete(4)));
    assert!(!is_planar(5, &complete(5)));
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    assert!(!is_planar(6, &k33));
    // Petersen graph: outer cycle, spokes and inner pentagram.
    let mut petersen: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    petersen.extend((0..5).map(|i| (i, i + 5)));
    petersen.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
    assert!(!is_planar(10, &petersen));
    // Octahedron and a 6 x 6 triangulated grid are planar.
    let octahedron: Vec<(usize, usize)> = complete(6).into_iter().filter(|&(a, b)| b != a + 3).collect();
    assert!(is_planar(6, &octahedron));
    let id = |x: usize, y: usize| 6 * x + y;
    let mut grid = Vec::new();
    for x in 0..6 {
        for y in 0..6 {
            if x + 1 < 6 {
                grid.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < 6 {
                grid.push((id(x, y), id(x, y + 1)));
            }
            if x + 1 < 6 && y + 1 < 6 {
                grid.push((id(x, y), id(x + 1, y + 1)));
            }
        }
    }
    assert!(is_planar(36, &grid));
    assert_eq!(planarity_check(36, &grid).edges, grid.len());
}
