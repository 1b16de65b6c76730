//! Eccentricity approximation via repeated furthest-point scans and BFS
//! spanning trees whose tree eccentricities over-estimate the graph
//! eccentricities by a bounded additive amount.

use crate::error::{Error, Result};
use crate::graph::{BfsLayering, Graph, NO_PARENT};
use crate::oracle::EccentricityProfile;

/// Lowest-id vertex at maximum distance from `u`.
pub fn furthest_vertex(g: &Graph, u: u32) -> Result<u32> {
    Ok(g.bfs(u)?.farthest())
}

/// A certified mutually distant pair: `d(u, v) = ecc(u) = ecc(v)`.
#[derive(Clone, Debug)]
pub struct MutualPair {
    pub u: u32,
    pub v: u32,
    pub distance: u32,
    /// BFS runs performed, including the final confirming scan.
    pub scans: u32,
    /// The furthest vertices produced by each scan, in order; consecutive
    /// distances along it never decrease.
    pub trace: Vec<u32>,
}

/// Iterates furthest-point scans from `start` until the distance stops
/// improving, returning the last two vertices as a mutually distant pair
/// (endpoints ordered by id).
pub fn mutually_distant_pair(g: &Graph, start: u32) -> Result<MutualPair> {
    let first = g.bfs(start)?;
    let mut prev = first.farthest();
    let mut trace = vec![prev];
    let mut scans = 1u32;

    let second = g.bfs(prev)?;
    let mut cur = second.farthest();
    let mut dist = second.eccentricity();
    trace.push(cur);
    scans += 1;

    loop {
        let scan = g.bfs(cur)?;
        scans += 1;
        let next = scan.farthest();
        let next_dist = scan.eccentricity();
        trace.push(next);
        if next_dist <= dist {
            return Ok(MutualPair {
                u: prev.min(cur),
                v: prev.max(cur),
                distance: dist,
                scans,
                trace,
            });
        }
        prev = cur;
        cur = next;
        dist = next_dist;
    }
}

/// A shortest path given as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicPath {
    pub vertices: Vec<u32>,
}

impl GeodesicPath {
    /// Path length in edges.
    pub fn distance(&self) -> u32 {
        (self.vertices.len() - 1) as u32
    }
}

/// Shortest path from `u` to `v` taken from the BFS tree rooted at `u`.
pub fn extract_geodesic(g: &Graph, u: u32, v: u32) -> Result<GeodesicPath> {
    let l = g.bfs(u)?;
    if v as usize >= g.vertex_count() {
        return Err(Error::InvalidVertex {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(GeodesicPath {
        vertices: l.path_from_source(v),
    })
}

/// Middle vertex of a geodesic `p_0 .. p_d`: the vertex at distance
/// `ceil(d / 2)` from the second endpoint `p_d` (equivalently `floor(d / 2)`
/// from `p_0`). A single-vertex path returns its only vertex.
pub fn middle_vertex(path: &GeodesicPath) -> u32 {
    let d = path.vertices.len() - 1;
    path.vertices[d - d.div_ceil(2)]
}

/// A BFS spanning tree of a connected graph. Tree eccentricity fields stay
/// empty until [`tree_eccentricities`] fills them.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    pub root: u32,
    /// BFS parent of each vertex; `NO_PARENT` for the root. Every parent
    /// edge is an edge of the underlying graph.
    pub parent: Vec<u32>,
    /// Eccentricity of each vertex within the tree.
    pub ecc: Vec<u32>,
    /// Tree center: one vertex, or two adjacent ones. Ascending.
    pub center: Vec<u32>,
    pub rad: u32,
    pub diam: u32,
    adj: Vec<Vec<u32>>,
}

impl SpanningTree {
    /// Builds a tree from a parent array, validating that exactly `root`
    /// has the sentinel parent and that all vertices hang off it.
    pub fn from_parents(root: u32, parent: Vec<u32>) -> Result<SpanningTree> {
        let n = parent.len();
        if root as usize >= n {
            return Err(Error::InvalidVertex { vertex: root, n });
        }
        let mut adj = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate() {
            if v as u32 == root {
                if p != NO_PARENT {
                    return Err(Error::InvalidFormat("root must have no parent".into()));
                }
                continue;
            }
            if p == NO_PARENT || p as usize >= n {
                return Err(Error::InvalidFormat(format!(
                    "vertex {v} has invalid parent"
                )));
            }
            adj[v].push(p);
            adj[p as usize].push(v as u32);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let tree = SpanningTree {
            root,
            parent,
            ecc: Vec::new(),
            center: Vec::new(),
            rad: 0,
            diam: 0,
            adj,
        };
        let (h, _, order) = tree.tree_bfs(&[root]);
        if order.len() < n || h.contains(&u32::MAX) {
            return Err(Error::InvalidFormat("parent array is not a tree".into()));
        }
        Ok(tree)
    }

    fn from_layering(l: &BfsLayering) -> SpanningTree {
        SpanningTree::from_parents(l.source, l.parent.clone()).expect("BFS yields a valid tree")
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Neighbors of `v` within the tree, ascending.
    pub fn tree_neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn is_filled(&self) -> bool {
        !self.ecc.is_empty()
    }

    /// Deterministic BFS over tree edges from one or more sources.
    fn tree_bfs(&self, sources: &[u32]) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
        let n = self.vertex_count();
        let mut height = vec![u32::MAX; n];
        let mut parent = vec![NO_PARENT; n];
        let mut order = Vec::with_capacity(n);
        for &s in sources {
            height[s as usize] = 0;
            order.push(s);
        }
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let hu = height[u as usize];
            for &v in self.tree_neighbors(u) {
                if height[v as usize] == u32::MAX {
                    height[v as usize] = hu + 1;
                    parent[v as usize] = u;
                    order.push(v);
                }
            }
        }
        (height, parent, order)
    }

    fn farthest_in(height: &[u32]) -> u32 {
        let mut best = 0u32;
        for (v, &h) in height.iter().enumerate() {
            if h > height[best as usize] {
                best = v as u32;
            }
        }
        best
    }
}

/// Fills the tree eccentricity fields of `tree`.
///
/// Two furthest-point scans over tree edges locate a diametral path; the
/// tree center is its middle vertex or edge, and each eccentricity is the
/// distance to the center plus the tree radius.
pub fn tree_eccentricities(tree: &mut SpanningTree) {
    let (h_root, _, _) = tree.tree_bfs(&[tree.root]);
    let a = SpanningTree::farthest_in(&h_root);
    let (h_a, parent_a, _) = tree.tree_bfs(&[a]);
    let b = SpanningTree::farthest_in(&h_a);
    let diam = h_a[b as usize];

    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent_a[cur as usize];
        path.push(cur);
    }
    path.reverse();

    let d = diam as usize;
    let mut center = if d.is_multiple_of(2) {
        vec![path[d / 2]]
    } else {
        vec![path[d / 2], path[d / 2 + 1]]
    };
    center.sort_unstable();
    let rad = diam.div_ceil(2);

    let (dist_center, _, _) = tree.tree_bfs(&center);
    tree.ecc = dist_center.iter().map(|&dc| dc + rad).collect();
    tree.center = center;
    tree.rad = rad;
    tree.diam = diam;
}

/// The three rooted-tree constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeVariant {
    /// Root at the middle vertex of a geodesic between a mutually distant
    /// pair found from the start vertex.
    T1,
    /// Root at the vertex of a `(v, t)`-geodesic at distance `rad(G)` from
    /// `v`, where `v` is furthest from the start vertex and `t` furthest
    /// from `v`. Needs the exact profile for `rad(G)`.
    T2,
    /// Root at the lowest-id center vertex. Needs the exact profile.
    T3,
}

/// Builds the BFS spanning tree for `variant`, seeding furthest-point
/// scans at `start`. `T2` and `T3` fail with [`Error::RequiresProfile`]
/// when no exact profile is supplied.
pub fn build_approx_tree(
    g: &Graph,
    variant: TreeVariant,
    profile: Option<&EccentricityProfile>,
    start: u32,
) -> Result<SpanningTree> {
    let root = match variant {
        TreeVariant::T1 => {
            let pair = mutually_distant_pair(g, start)?;
            let geo = extract_geodesic(g, pair.u, pair.v)?;
            middle_vertex(&geo)
        }
        TreeVariant::T2 => {
            let profile = profile.ok_or(Error::RequiresProfile)?;
            let v = furthest_vertex(g, start)?;
            let scan = g.bfs(v)?;
            let t = scan.farthest();
            let path = scan.path_from_source(t);
            path[profile.rad as usize]
        }
        TreeVariant::T3 => {
            let profile = profile.ok_or(Error::RequiresProfile)?;
            profile.center[0]
        }
    };
    Ok(SpanningTree::from_layering(&g.bfs(root)?))
}

/// Oracle-free estimation strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Two scans; root at the middle of the second scan's geodesic.
    Linear,
    /// Full mutually-distant-pair iteration; root at the pair's middle
    /// vertex (the T1 tree).
    Refined,
}

/// Eccentricity estimates read off one BFS spanning tree.
#[derive(Clone, Debug)]
pub struct EccEstimate {
    /// `estimate[v]` is the tree eccentricity of `v`; never below the true
    /// eccentricity.
    pub estimate: Vec<u32>,
    pub strategy: Strategy,
    pub root: u32,
    /// Furthest-point scans spent locating the root.
    pub scans: u32,
    pub pair: Option<MutualPair>,
    pub tree: SpanningTree,
}

/// Estimates all eccentricities without an exact oracle, seeding the
/// furthest-point scans at `start`.
pub fn estimate_eccentricities(g: &Graph, strategy: Strategy, start: u32) -> Result<EccEstimate> {
    let (root, scans, pair) = match strategy {
        Strategy::Linear => {
            let v = furthest_vertex(g, start)?;
            let scan = g.bfs(v)?;
            let t = scan.farthest();
            let geo = GeodesicPath {
                vertices: scan.path_from_source(t),
            };
            (middle_vertex(&geo), 2, None)
        }
        Strategy::Refined => {
            let pair = mutually_distant_pair(g, start)?;
            let geo = extract_geodesic(g, pair.u, pair.v)?;
            (middle_vertex(&geo), pair.scans, Some(pair))
        }
    };
    let mut tree = SpanningTree::from_layering(&g.bfs(root)?);
    tree_eccentricities(&mut tree);
    Ok(EccEstimate {
        estimate: tree.ecc.clone(),
        strategy,
        root,
        scans,
        pair,
        tree,
    })
}

/// Per-vertex over-estimation `k(v) = estimate(v) - ecc(v)` and its summary
/// statistics.
#[derive(Clone, Debug)]
pub struct Distortion {
    pub k: Vec<u32>,
    pub k_max: u32,
    pub k_avg: f64,
    /// `histogram[i]` counts vertices with `k(v) = i`.
    pub histogram: Vec<u64>,
}

pub fn distortion(estimate: &[u32], profile: &EccentricityProfile) -> Distortion {
    assert_eq!(estimate.len(), profile.ecc.len());
    let k: Vec<u32> = estimate
        .iter()
        .zip(&profile.ecc)
        .map(|(&e, &x)| {
            e.checked_sub(x)
                .expect("tree eccentricity below graph eccentricity")
        })
        .collect();
    let k_max = k.iter().copied().max().unwrap_or(0);
    let total: u64 = k.iter().map(|&v| v as u64).sum();
    let mut histogram = vec![0u64; k_max as usize + 1];
    for &v in &k {
        histogram[v as usize] += 1;
    }
    Distortion {
        k_avg: total as f64 / estimate.len() as f64,
        k,
        k_max,
        histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::Strategy;
    use super::*;
    use crate::gen;
    use crate::oracle::{all_eccentricities, Budget};
    use proptest::prelude::*;

    fn profile(g: &Graph) -> EccentricityProfile {
        all_eccentricities(g, &Budget::default()).unwrap()
    }

    /// Independent quadratic oracle: eccentricities by BFS from every
    /// vertex over tree edges only.
    fn brute_tree_ecc(tree: &SpanningTree) -> Vec<u32> {
        let n = tree.vertex_count();
        (0..n as u32)
            .map(|s| {
                let mut dist = vec![u32::MAX; n];
                let mut queue = vec![s];
                dist[s as usize] = 0;
                let mut head = 0;
                let mut max = 0;
                while head < queue.len() {
                    let u = queue[head];
                    head += 1;
                    for &v in tree.tree_neighbors(u) {
                        if dist[v as usize] == u32::MAX {
                            dist[v as usize] = dist[u as usize] + 1;
                            max = max.max(dist[v as usize]);
                            queue.push(v);
                        }
                    }
                }
                max
            })
            .collect()
    }

    #[test]
    fn furthest_vertex_breaks_ties_low() {
        assert_eq!(furthest_vertex(&gen::path(5), 2).unwrap(), 0);
        assert_eq!(furthest_vertex(&gen::cycle(6), 0).unwrap(), 3);
    }

    #[test]
    fn mutual_pair_on_path() {
        let pair = mutually_distant_pair(&gen::path(5), 2).unwrap();
        assert_eq!((pair.u, pair.v, pair.distance, pair.scans), (0, 4, 4, 3));
        assert_eq!(pair.trace, vec![0, 4, 0]);
    }

    #[test]
    fn mutual_pair_on_cycle() {
        let pair = mutually_distant_pair(&gen::cycle(6), 0).unwrap();
        assert_eq!((pair.u, pair.v, pair.distance), (0, 3, 3));
        assert_eq!(pair.scans, 3);
    }

    #[test]
    fn mutual_pair_single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        let pair = mutually_distant_pair(&g, 0).unwrap();
        assert_eq!((pair.u, pair.v, pair.distance), (0, 0, 0));
    }

    #[test]
    fn geodesic_and_middle() {
        let p = extract_geodesic(&gen::path(5), 0, 4).unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(middle_vertex(&p), 2);

        let c = extract_geodesic(&gen::cycle(6), 0, 3).unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2, 3]);
        assert_eq!(middle_vertex(&c), 1);

        let single = GeodesicPath { vertices: vec![7] };
        assert_eq!(middle_vertex(&single), 7);
    }

    #[test]
    fn t1_tree_on_cycle_six() {
        let g = gen::cycle(6);
        let mut tree = build_approx_tree(&g, TreeVariant::T1, None, 0).unwrap();
        assert_eq!(tree.root, 1);
        tree_eccentricities(&mut tree);
        // The tree is the path 3-2-1-0-5-4.
        assert_eq!(tree.ecc, vec![3, 3, 4, 5, 5, 4]);
        assert_eq!(tree.diam, 5);
        assert_eq!(tree.center, vec![0, 1]);
        assert_eq!(tree.ecc[3] - 3, 2);
    }

    #[test]
    fn t2_t3_need_profile() {
        let g = gen::cycle(6);
        assert!(matches!(
            build_approx_tree(&g, TreeVariant::T2, None, 0),
            Err(Error::RequiresProfile)
        ));
        assert!(matches!(
            build_approx_tree(&g, TreeVariant::T3, None, 0),
            Err(Error::RequiresProfile)
        ));
    }

    #[test]
    fn t2_and_t3_on_path() {
        let g = gen::path(5);
        let p = profile(&g);
        let t2 = build_approx_tree(&g, TreeVariant::T2, Some(&p), 0).unwrap();
        assert_eq!(t2.root, 2);
        let t3 = build_approx_tree(&g, TreeVariant::T3, Some(&p), 0).unwrap();
        assert_eq!(t3.root, 2);
    }

    #[test]
    fn tree_ecc_on_path_and_star() {
        let mut path = SpanningTree::from_parents(0, vec![NO_PARENT, 0, 1, 2, 3]).unwrap();
        tree_eccentricities(&mut path);
        assert_eq!(path.ecc, vec![4, 3, 2, 3, 4]);
        assert_eq!(path.center, vec![2]);
        assert_eq!((path.rad, path.diam), (2, 4));

        let mut star = SpanningTree::from_parents(0, vec![NO_PARENT, 0, 0, 0, 0]).unwrap();
        tree_eccentricities(&mut star);
        assert_eq!(star.ecc, vec![1, 2, 2, 2, 2]);
        assert_eq!(star.center, vec![0]);
        assert_eq!((star.rad, star.diam), (1, 2));
    }

    #[test]
    fn from_parents_validates() {
        assert!(SpanningTree::from_parents(0, vec![NO_PARENT, 0, 1]).is_ok());
        // Cycle of parents is rejected.
        assert!(SpanningTree::from_parents(0, vec![NO_PARENT, 2, 1]).is_err());
        // Root with a parent is rejected.
        assert!(SpanningTree::from_parents(0, vec![1, 0]).is_err());
    }

    #[test]
    fn estimates_on_cycle() {
        let g = gen::cycle(6);
        let refined = estimate_eccentricities(&g, Strategy::Refined, 0).unwrap();
        assert_eq!(refined.root, 1);
        assert_eq!(refined.estimate, vec![3, 3, 4, 5, 5, 4]);
        assert_eq!(refined.scans, 3);

        let linear = estimate_eccentricities(&g, Strategy::Linear, 0).unwrap();
        assert_eq!(linear.root, 2);
        assert_eq!(linear.scans, 2);
        assert_eq!(linear.estimate, vec![4, 3, 3, 4, 5, 5]);
    }

    #[test]
    fn estimates_are_exact_on_trees() {
        for (i, g) in [gen::path(9), gen::star(7), gen::random_tree(40, 5)]
            .into_iter()
            .enumerate()
        {
            let p = profile(&g);
            for strategy in [Strategy::Linear, Strategy::Refined] {
                let est = estimate_eccentricities(&g, strategy, 0).unwrap();
                assert_eq!(est.estimate, p.ecc, "tree {i} strategy {strategy:?}");
            }
        }
    }

    #[test]
    fn single_vertex_estimate_is_zero() {
        let g = Graph::from_edges(1, []).unwrap();
        let est = estimate_eccentricities(&g, Strategy::Refined, 0).unwrap();
        assert_eq!(est.estimate, vec![0]);
        assert_eq!(est.root, 0);
    }

    #[test]
    fn distortion_statistics() {
        let g = gen::cycle(6);
        let p = profile(&g);
        let est = estimate_eccentricities(&g, Strategy::Refined, 0).unwrap();
        let d = distortion(&est.estimate, &p);
        assert_eq!(d.k, vec![0, 0, 1, 2, 2, 1]);
        assert_eq!(d.k_max, 2);
        assert_eq!(d.histogram, vec![2, 2, 2]);
        assert!((d.k_avg - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn tree_ecc_matches_brute_force(n in 2usize..60, seed in 0u64..500) {
            let g = gen::random_tree(n, seed);
            let mut tree = SpanningTree::from_layering(&g.bfs(0).unwrap());
            tree_eccentricities(&mut tree);
            prop_assert_eq!(&tree.ecc, &brute_tree_ecc(&tree));
            let rad = *tree.ecc.iter().min().unwrap();
            let centers: Vec<u32> = (0..n as u32)
                .filter(|&v| tree.ecc[v as usize] == rad)
                .collect();
            prop_assert_eq!(&tree.center, &centers);
            prop_assert!(tree.center.len() <= 2);
            if tree.center.len() == 2 {
                prop_assert!(tree
                    .tree_neighbors(tree.center[0])
                    .contains(&tree.center[1]));
            }
        }

        #[test]
        fn geodesics_are_shortest_paths(n in 2usize..40, seed in 0u64..200) {
            let g = gen::random_connected(n, 0.15, seed, 500)
                .unwrap_or_else(|_| gen::random_tree(n, seed));
            let l = g.bfs(0).unwrap();
            let v = l.farthest();
            let geo = extract_geodesic(&g, 0, v).unwrap();
            prop_assert_eq!(geo.distance(), l.height[v as usize]);
            prop_assert_eq!(geo.vertices[0], 0);
            prop_assert_eq!(*geo.vertices.last().unwrap(), v);
            for w in geo.vertices.windows(2) {
                prop_assert!(g.has_edge(w[0], w[1]));
            }
        }

        #[test]
        fn trace_distances_never_decrease(n in 3usize..40, seed in 0u64..200) {
            let g = gen::random_connected(n, 0.2, seed, 500)
                .unwrap_or_else(|_| gen::random_tree(n, seed));
            let pair = mutually_distant_pair(&g, 0).unwrap();
            let mut dists = Vec::new();
            for w in pair.trace.windows(2) {
                let l = g.bfs(w[0]).unwrap();
                dists.push(l.height[w[1] as usize]);
            }
            prop_assert!(dists.windows(2).all(|w| w[0] <= w[1]));
            // Certification: both endpoints realize their eccentricity on
            // each other.
            let lu = g.bfs(pair.u).unwrap();
            let lv = g.bfs(pair.v).unwrap();
            prop_assert_eq!(lu.eccentricity(), pair.distance);
            prop_assert_eq!(lv.eccentricity(), pair.distance);
            prop_assert_eq!(lu.height[pair.v as usize], pair.distance);
        }
    }
}
