//! Core graph representation and traversal primitives.
//!
//! Graphs are undirected, unweighted, simple, and immutable after
//! construction: dense 0-based node ids, neighbor lists in contiguous
//! storage with per-node offsets, each list sorted ascending. This is the
//! universe every algorithm in the crate runs on.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::VecDeque;
use thiserror::Error;

/// Sentinel distance for unreachable nodes; strictly greater than any
/// feasible hop distance (which is at most n-1 < u32::MAX).
pub const UNREACHABLE: u32 = u32::MAX;

/// Default node-count guard for [`exact_diameter`]; all-pairs BFS beyond
/// this is almost certainly an accident.
pub const EXACT_DIAMETER_CAP: usize = 10_000;

/// Guards for the brute-force [`exact_kcenter`] oracle.
pub const EXACT_KCENTER_MAX_N: usize = 30;
pub const EXACT_KCENTER_MAX_K: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("instance too large: {what} = {got} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        got: usize,
        cap: usize,
    },
}

/// Immutable undirected unweighted graph in compressed adjacency form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Graph {
    /// Builds a graph on `n` nodes from an edge list. Self-loops and
    /// duplicate edges are dropped; each surviving edge appears in both
    /// endpoint lists. Panics if an endpoint is out of range or n = 0.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Graph {
        assert!(n >= 1, "graph must have at least one node");
        assert!(n <= (u32::MAX - 1) as usize, "node count exceeds id space");
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!((u as usize) < n && (v as usize) < n, "edge endpoint out of range");
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_sorted_adjacency(adj)
    }

    /// Builds from per-node neighbor lists that are already sorted,
    /// deduplicated, symmetric, and free of self-loops.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Graph {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        offsets.push(0usize);
        let total: usize = adj.iter().map(|l| l.len()).sum();
        let mut neighbors = Vec::with_capacity(total);
        for list in &adj {
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        debug_assert!(neighbors.len() % 2 == 0);
        Graph { offsets, neighbors }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges, each counted once.
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.neighbors[self.offsets[u as usize]..self.offsets[u as usize + 1]]
    }

    pub fn degree(&self, u: u32) -> usize {
        self.offsets[u as usize + 1] - self.offsets[u as usize]
    }

    /// All edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.node_count() as u32)
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}

/// Exact hop distances from a single source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: u32,
    pub dist: Vec<u32>,
}

impl DistanceVector {
    /// Maximum finite distance, or None if some node is unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        let mut max = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return None;
            }
            max = max.max(d);
        }
        Some(max)
    }
}

/// Breadth-first search from `source`; unreachable nodes keep [`UNREACHABLE`].
pub fn bfs(g: &Graph, source: u32) -> DistanceVector {
    assert!((source as usize) < g.node_count(), "source out of range");
    let mut dist = vec![UNREACHABLE; g.node_count()];
    dist[source as usize] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &v in g.neighbors(u) {
            if dist[v as usize] == UNREACHABLE {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
    DistanceVector { source, dist }
}

/// Exact diameter by all-pairs BFS. Refuses graphs above
/// [`EXACT_DIAMETER_CAP`] nodes; use [`exact_diameter_with_cap`] to override.
pub fn exact_diameter(g: &Graph) -> Result<u32, GraphError> {
    exact_diameter_with_cap(g, EXACT_DIAMETER_CAP)
}

/// As [`exact_diameter`] with an explicit node-count cap.
pub fn exact_diameter_with_cap(g: &Graph, cap: usize) -> Result<u32, GraphError> {
    let n = g.node_count();
    if n > cap {
        return Err(GraphError::TooLarge { what: "node count", got: n, cap });
    }
    // One connectivity probe; if node 0 reaches everything, every BFS does.
    bfs(g, 0).eccentricity().ok_or(GraphError::DisconnectedGraph)?;
    let diameter = (0..n as u32)
        .into_par_iter()
        .map(|s| bfs(g, s).eccentricity().expect("connected"))
        .max()
        .expect("n >= 1");
    Ok(diameter)
}

/// Upper bound 2*ecc(v) for a seeded-random v; lies in [diameter, 2*diameter].
pub fn double_bfs_bound(g: &Graph, seed: u64) -> Result<u32, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = rng.gen_range(0..g.node_count() as u32);
    let ecc = bfs(g, v).eccentricity().ok_or(GraphError::DisconnectedGraph)?;
    Ok(2 * ecc)
}

/// Eccentricity of the seeded-random source used by [`double_bfs_bound`],
/// i.e. the number of BFS rounds the bound costs.
pub fn bfs_rounds(g: &Graph, seed: u64) -> Result<u32, GraphError> {
    double_bfs_bound(g, seed).map(|b| b / 2)
}

/// Per-node component ids, dense 0..h-1 in order of first discovery,
/// together with the component count h.
pub fn connected_components(g: &Graph) -> (Vec<u32>, usize) {
    let n = g.node_count();
    let mut comp = vec![u32::MAX; n];
    let mut h = 0u32;
    let mut queue = VecDeque::new();
    for s in 0..n as u32 {
        if comp[s as usize] != u32::MAX {
            continue;
        }
        comp[s as usize] = h;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if comp[v as usize] == u32::MAX {
                    comp[v as usize] = h;
                    queue.push_back(v);
                }
            }
        }
        h += 1;
    }
    (comp, h as usize)
}

/// Brute-force optimal k-center: minimum over all k-subsets M of
/// max_v dist(v, M). Test oracle only; guarded to tiny instances.
///
/// Works on disconnected graphs as long as some k-subset hits every
/// component; otherwise reports `DisconnectedGraph`.
pub fn exact_kcenter(g: &Graph, k: usize) -> Result<(Vec<u32>, u32), GraphError> {
    let n = g.node_count();
    if n > EXACT_KCENTER_MAX_N {
        return Err(GraphError::TooLarge { what: "node count", got: n, cap: EXACT_KCENTER_MAX_N });
    }
    if k > EXACT_KCENTER_MAX_K {
        return Err(GraphError::TooLarge { what: "k", got: k, cap: EXACT_KCENTER_MAX_K });
    }
    assert!(k >= 1 && k <= n, "k must be in 1..=n");
    let apsp: Vec<Vec<u32>> = (0..n as u32).map(|s| bfs(g, s).dist).collect();

    let mut best_radius = UNREACHABLE;
    let mut best_centers: Vec<u32> = Vec::new();
    let mut subset = vec![0u32; k];
    // Enumerate k-subsets in lexicographic order; first strict improvement
    // wins, so the reported centers are deterministic.
    enumerate_subsets(n as u32, k, 0, 0, &mut subset, &mut |centers| {
        let mut radius = 0u32;
        for v in 0..n {
            let mut d = UNREACHABLE;
            for &c in centers {
                d = d.min(apsp[c as usize][v]);
            }
            radius = radius.max(d);
            if radius >= best_radius {
                return;
            }
        }
        best_radius = radius;
        best_centers = centers.to_vec();
    });
    if best_radius == UNREACHABLE {
        return Err(GraphError::DisconnectedGraph);
    }
    Ok((best_centers, best_radius))
}

fn enumerate_subsets(n: u32, k: usize, depth: usize, start: u32, subset: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if depth == k {
        visit(subset);
        return;
    }
    let remaining = (k - depth) as u32;
    for c in start..=(n - remaining) {
        subset[depth] = c;
        enumerate_subsets(n, k, depth + 1, c + 1, subset, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{gen_complete, gen_cycle, gen_mesh, gen_path, gen_star};
    use proptest::prelude::*;

    #[test]
    fn bfs_path_graph() {
        let g = gen_path(5);
        assert_eq!(bfs(&g, 0).dist, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bfs_single_node() {
        let g = Graph::from_edges(1, &[]);
        assert_eq!(bfs(&g, 0).dist, vec![0]);
    }

    #[test]
    fn bfs_grid_corner_is_manhattan() {
        let g = gen_mesh(3, 3);
        let d = bfs(&g, 0);
        for i in 0..3u32 {
            for j in 0..3u32 {
                assert_eq!(d.dist[(i * 3 + j) as usize], i + j);
            }
        }
    }

    #[test]
    fn bfs_unreachable_marked() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        let d = bfs(&g, 0);
        assert_eq!(d.dist[2], UNREACHABLE);
        assert_eq!(d.eccentricity(), None);
    }

    #[test]
    fn exact_diameter_known_families() {
        assert_eq!(exact_diameter(&gen_path(9)).unwrap(), 8);
        assert_eq!(exact_diameter(&gen_complete(5)).unwrap(), 1);
        assert_eq!(exact_diameter(&gen_mesh(32, 32)).unwrap(), 62);
    }

    #[test]
    fn exact_diameter_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(exact_diameter(&g), Err(GraphError::DisconnectedGraph));
    }

    #[test]
    fn exact_diameter_guard_and_override() {
        let g = gen_path(11);
        match exact_diameter_with_cap(&g, 10) {
            Err(GraphError::TooLarge { got: 11, cap: 10, .. }) => {}
            other => panic!("expected TooLarge, got {other:?}"),
        }
        assert_eq!(exact_diameter_with_cap(&g, 11).unwrap(), 10);
    }

    #[test]
    fn double_bfs_on_star_and_clique() {
        // Star: leaf sources give 2*2 = 4, the hub gives 2*1 = 2.
        let g = gen_star(9);
        let mut saw_leaf = false;
        for seed in 0..10 {
            let b = double_bfs_bound(&g, seed).unwrap();
            assert!(b == 2 || b == 4);
            saw_leaf |= b == 4;
        }
        assert!(saw_leaf, "10 seeds never picked a leaf source");
        for seed in 0..5 {
            assert_eq!(double_bfs_bound(&gen_complete(5), seed).unwrap(), 2);
        }
    }

    #[test]
    fn double_bfs_within_factor_two_on_mesh() {
        let g = gen_mesh(32, 32);
        let delta = exact_diameter(&g).unwrap();
        assert_eq!(delta, 62);
        for seed in 0..10 {
            let b = double_bfs_bound(&g, seed).unwrap();
            assert!(b >= delta && b <= 2 * delta, "seed {seed}: bound {b} outside [{delta}, {}]", 2 * delta);
        }
    }

    #[test]
    fn components_counts() {
        assert_eq!(connected_components(&gen_mesh(8, 8)).1, 1);
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let (ids, h) = connected_components(&two_triangles);
        assert_eq!(h, 2);
        assert_eq!(ids, vec![0, 0, 0, 1, 1, 1]);
        let isolated = Graph::from_edges(7, &[]);
        assert_eq!(connected_components(&isolated).1, 7);
    }

    #[test]
    fn exact_kcenter_on_paths_and_cycles() {
        let p9 = gen_path(9);
        let (centers, r) = exact_kcenter(&p9, 1).unwrap();
        assert_eq!((centers, r), (vec![4], 4));
        assert_eq!(exact_kcenter(&p9, 2).unwrap().1, 2);
        assert_eq!(exact_kcenter(&gen_cycle(6), 2).unwrap().1, 1);
    }

    #[test]
    fn exact_kcenter_guards() {
        assert!(matches!(exact_kcenter(&gen_path(31), 2), Err(GraphError::TooLarge { .. })));
        assert!(matches!(exact_kcenter(&gen_path(9), 5), Err(GraphError::TooLarge { .. })));
        // Disconnected with k below the component count has no finite radius.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(exact_kcenter(&g, 1), Err(GraphError::DisconnectedGraph));
        assert_eq!(exact_kcenter(&g, 2).unwrap().1, 1);
    }

    #[test]
    fn exact_kcenter_monotone_in_k() {
        let g = gen_mesh(4, 4);
        let mut prev = u32::MAX;
        for k in 1..=4 {
            let (_, r) = exact_kcenter(&g, k).unwrap();
            assert!(r <= prev, "radius must be nonincreasing in k");
            prev = r;
        }
    }

    #[test]
    fn eccentricity_is_diameter_on_vertex_transitive_graphs() {
        // Every node of a cycle (or clique) has eccentricity == diameter.
        for g in [gen_cycle(1000), gen_complete(5)] {
            let delta = exact_diameter(&g).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..20 {
                let s = rng.gen_range(0..g.node_count() as u32);
                assert_eq!(bfs(&g, s).eccentricity().unwrap(), delta);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        /// |dist_s(u) - dist_s(v)| <= dist_u(v) on random connected graphs.
        #[test]
        fn bfs_triangle_inequality(n in 2usize..40, extra in prop::collection::vec((0u32..40, 0u32..40), 0..60), seed in 0u64..1000) {
            let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
            edges.extend(extra.into_iter().map(|(a, b)| (a % n as u32, b % n as u32)));
            let g = Graph::from_edges(n, &edges);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..8 {
                let s = rng.gen_range(0..n as u32);
                let u = rng.gen_range(0..n as u32);
                let v = rng.gen_range(0..n as u32);
                let ds = bfs(&g, s);
                let du = bfs(&g, u);
                let lhs = ds.dist[u as usize].abs_diff(ds.dist[v as usize]);
                prop_assert!(lhs <= du.dist[v as usize]);
            }
        }

        /// Adjacent nodes differ by at most one hop in any BFS.
        #[test]
        fn bfs_edge_lipschitz(n in 2usize..30, extra in prop::collection::vec((0u32..30, 0u32..30), 0..40)) {
            let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
            edges.extend(extra.into_iter().map(|(a, b)| (a % n as u32, b % n as u32)));
            let g = Graph::from_edges(n, &edges);
            let d = bfs(&g, 0);
            for (u, v) in g.edges() {
                prop_assert!(d.dist[u as usize].abs_diff(d.dist[v as usize]) <= 1);
            }
        }
    }
}
