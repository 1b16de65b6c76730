//! Immutable undirected graphs in compressed adjacency form, an edge-list
//! parser, component extraction, and deterministic breadth-first layerings.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};

/// Parent sentinel used for the BFS source.
pub const NO_PARENT: u32 = u32::MAX;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted ascending and free of self-loops and duplicate
/// edges. The structure is immutable after construction and safe to share
/// across threads.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    adj: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Self-loops and duplicate edges
    /// are dropped; endpoints must be below `n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Self::build(n, edges, None)
    }

    fn build<I>(n: usize, edges: I, labels: Option<Vec<String>>) -> Result<Graph>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v as usize >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a != b {
                pairs.push((a.min(b), a.max(b)));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut degree = vec![0usize; n];
        for &(a, b) in &pairs {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor = offsets.clone();
        let mut adj = vec![0u32; acc];
        for &(a, b) in &pairs {
            adj[cursor[a as usize]] = b;
            cursor[a as usize] += 1;
            adj[cursor[b as usize]] = a;
            cursor[b as usize] += 1;
        }
        for v in 0..n {
            adj[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok(Graph {
            offsets,
            adj,
            labels,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Original input label of `v`, if the graph came from a parsed file.
    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v as usize].as_str())
    }

    pub(crate) fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// Parses a whitespace-separated edge list.
    ///
    /// Lines starting with `#` or `%` and blank lines are skipped. Each
    /// remaining line must start with two tokens naming the endpoints;
    /// trailing tokens (weights, timestamps) are ignored. Labels may be
    /// arbitrary strings and are mapped to dense ids in first-appearance
    /// order. Self-loops and duplicate edges are dropped. Input containing
    /// no edges at all is rejected.
    pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
        let mut ids: HashMap<String, u32> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let intern = |tok: &str, labels: &mut Vec<String>, ids: &mut HashMap<String, u32>| {
            if let Some(&id) = ids.get(tok) {
                id
            } else {
                let id = labels.len() as u32;
                labels.push(tok.to_string());
                ids.insert(tok.to_string(), id);
                id
            }
        };
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let (a, b) = match (tokens.next(), tokens.next()) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: "expected at least two tokens".to_string(),
                    })
                }
            };
            let ia = intern(a, &mut labels, &mut ids);
            let ib = intern(b, &mut labels, &mut ids);
            edges.push((ia, ib));
        }
        if !edges.iter().any(|&(a, b)| a != b) {
            return Err(Error::NoEdges);
        }
        Self::build(labels.len(), edges, Some(labels))
    }

    /// Opens `path` and parses it as an edge list, transparently
    /// decompressing when the file name ends in `.gz`.
    pub fn from_path(path: &Path) -> Result<Graph> {
        let file = File::open(path)?;
        if path.extension().is_some_and(|e| e == "gz") {
            Self::parse_edge_list(BufReader::new(flate2::read::GzDecoder::new(file)))
        } else {
            Self::parse_edge_list(BufReader::new(file))
        }
    }

    /// Canonical edge-list text: one `a b` line per edge with endpoints in
    /// ascending internal-id order, written with original labels when
    /// present. Isolated vertices are not representable and are dropped on
    /// re-parse.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        for u in 0..self.vertex_count() as u32 {
            for &v in self.neighbors(u) {
                if v > u {
                    match (self.label(u), self.label(v)) {
                        (Some(a), Some(b)) => writeln!(out, "{a} {b}").unwrap(),
                        _ => writeln!(out, "{u} {v}").unwrap(),
                    }
                }
            }
        }
        out
    }

    /// Extracts the largest connected component, ties broken by the smallest
    /// contained vertex id, relabeling vertices to `0..k` in ascending order
    /// of their old ids. Returns the component and the new-to-old id map.
    pub fn largest_component(&self) -> (Graph, Vec<u32>) {
        let n = self.vertex_count();
        let mut comp = vec![u32::MAX; n];
        let mut queue: Vec<u32> = Vec::new();
        let mut best: (usize, u32) = (0, 0);
        let mut comp_count = 0u32;
        for seed in 0..n as u32 {
            if comp[seed as usize] != u32::MAX {
                continue;
            }
            let id = comp_count;
            comp_count += 1;
            comp[seed as usize] = id;
            queue.clear();
            queue.push(seed);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in self.neighbors(u) {
                    if comp[v as usize] == u32::MAX {
                        comp[v as usize] = id;
                        queue.push(v);
                    }
                }
            }
            // Seeds ascend, so a strictly larger size is required to displace
            // an earlier component; ties keep the smaller contained id.
            if queue.len() > best.0 {
                best = (queue.len(), id);
            }
        }
        let keep = best.1;
        let map: Vec<u32> = (0..n as u32)
            .filter(|&v| comp[v as usize] == keep)
            .collect();
        let mut new_id = vec![u32::MAX; n];
        for (new, &old) in map.iter().enumerate() {
            new_id[old as usize] = new as u32;
        }
        let mut edges = Vec::new();
        for &old in &map {
            for &v in self.neighbors(old) {
                if v > old {
                    edges.push((new_id[old as usize], new_id[v as usize]));
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&old| l[old as usize].clone()).collect());
        let g = Graph::build(map.len(), edges, labels).expect("component edges are in range");
        (g, map)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut height = vec![u32::MAX; n];
        let mut queue = Vec::with_capacity(n);
        self.bfs_heights_into(0, &mut height, &mut queue) == n
    }

    /// Deterministic BFS from `source`: neighbors are enqueued in ascending
    /// id order. Fails on disconnected graphs.
    pub fn bfs(&self, source: u32) -> Result<BfsLayering> {
        self.check_vertex(source)?;
        let n = self.vertex_count();
        let mut height = vec![u32::MAX; n];
        let mut parent = vec![NO_PARENT; n];
        let mut order: Vec<u32> = Vec::with_capacity(n);
        height[source as usize] = 0;
        order.push(source);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let hu = height[u as usize];
            for &v in self.neighbors(u) {
                if height[v as usize] == u32::MAX {
                    height[v as usize] = hu + 1;
                    parent[v as usize] = u;
                    order.push(v);
                }
            }
        }
        if order.len() < n {
            return Err(Error::NotConnected);
        }
        let mut sigma = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            sigma[v as usize] = (n - i) as u32;
        }
        Ok(BfsLayering {
            source,
            height,
            parent,
            sigma,
            order,
        })
    }

    /// Fills `height` with BFS distances from `source` (unreached vertices
    /// keep `u32::MAX`) and returns the number of vertices reached.
    /// `queue` is caller-provided scratch.
    pub(crate) fn bfs_heights_into(
        &self,
        source: u32,
        height: &mut [u32],
        queue: &mut Vec<u32>,
    ) -> usize {
        height.fill(u32::MAX);
        queue.clear();
        height[source as usize] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let hu = height[u as usize];
            for &v in self.neighbors(u) {
                if height[v as usize] == u32::MAX {
                    height[v as usize] = hu + 1;
                    queue.push(v);
                }
            }
        }
        queue.len()
    }

    /// BFS truncated at depth `limit`; returns the number of vertices
    /// reached (all within distance `limit` of `source`).
    pub(crate) fn bfs_truncated_into(
        &self,
        source: u32,
        limit: u32,
        height: &mut [u32],
        queue: &mut Vec<u32>,
    ) -> usize {
        height.fill(u32::MAX);
        queue.clear();
        height[source as usize] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let hu = height[u as usize];
            if hu == limit {
                continue;
            }
            for &v in self.neighbors(u) {
                if height[v as usize] == u32::MAX {
                    height[v as usize] = hu + 1;
                    queue.push(v);
                }
            }
        }
        queue.len()
    }
}

/// The layering produced by one deterministic BFS over a connected graph.
///
/// `height[v]` is the distance from the source, `parent[v]` the BFS tree
/// parent (`NO_PARENT` for the source), and `order` the visit sequence with
/// `order[0]` the source. `sigma` ranks vertices `n..1` in visit order (the
/// source gets `n`), so every vertex outranks its descendants.
#[derive(Clone, Debug)]
pub struct BfsLayering {
    pub source: u32,
    pub height: Vec<u32>,
    pub parent: Vec<u32>,
    pub sigma: Vec<u32>,
    pub order: Vec<u32>,
}

impl BfsLayering {
    pub fn vertex_count(&self) -> usize {
        self.height.len()
    }

    /// Maximum height, i.e. the eccentricity of the source.
    pub fn eccentricity(&self) -> u32 {
        self.height[*self.order.last().expect("layering is nonempty") as usize]
    }

    /// Lowest-id vertex at maximum height.
    pub fn farthest(&self) -> u32 {
        let mut best = 0u32;
        for (v, &h) in self.height.iter().enumerate() {
            if h > self.height[best as usize] {
                best = v as u32;
            }
        }
        best
    }

    /// The tree path from the source to `v`, inclusive.
    pub fn path_from_source(&self, v: u32) -> Vec<u32> {
        let mut path = vec![v];
        let mut cur = v;
        while cur != self.source {
            cur = self.parent[cur as usize];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Ancestor of `v` at height `k` in the BFS tree (`k <= height[v]`).
    pub fn ancestor_at_level(&self, v: u32, k: u32) -> u32 {
        let mut cur = v;
        for _ in k..self.height[v as usize] {
            cur = self.parent[cur as usize];
        }
        cur
    }

    /// Vertices grouped by height, each level in visit order (descending
    /// sigma).
    pub fn level_sets(&self) -> Vec<Vec<u32>> {
        let depth = self.eccentricity() as usize;
        let mut levels = vec![Vec::new(); depth + 1];
        for &v in &self.order {
            levels[self.height[v as usize] as usize].push(v);
        }
        levels
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BinaryHeap;
    use std::io::Cursor;

    /// Independent component oracle.
    struct UnionFind {
        parent: Vec<usize>,
        size: Vec<usize>,
    }

    impl UnionFind {
        fn new(n: usize) -> Self {
            UnionFind {
                parent: (0..n).collect(),
                size: vec![1; n],
            }
        }

        fn find(&mut self, mut x: usize) -> usize {
            while self.parent[x] != x {
                self.parent[x] = self.parent[self.parent[x]];
                x = self.parent[x];
            }
            x
        }

        fn union(&mut self, a: usize, b: usize) {
            let (mut ra, mut rb) = (self.find(a), self.find(b));
            if ra == rb {
                return;
            }
            if self.size[ra] < self.size[rb] {
                std::mem::swap(&mut ra, &mut rb);
            }
            self.parent[rb] = ra;
            self.size[ra] += self.size[rb];
        }
    }

    /// Independent distance oracle: Dijkstra with unit weights.
    fn dijkstra_unit(g: &Graph, src: u32) -> Vec<u32> {
        let n = g.vertex_count();
        let mut dist = vec![u32::MAX; n];
        let mut heap = BinaryHeap::new();
        dist[src as usize] = 0;
        heap.push(std::cmp::Reverse((0u32, src)));
        while let Some(std::cmp::Reverse((d, u))) = heap.pop() {
            if d > dist[u as usize] {
                continue;
            }
            for &v in g.neighbors(u) {
                if d + 1 < dist[v as usize] {
                    dist[v as usize] = d + 1;
                    heap.push(std::cmp::Reverse((d + 1, v)));
                }
            }
        }
        dist
    }

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, (1..n as u32).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        Graph::from_edges(n, (0..n as u32).map(|v| (v, ((v as usize + 1) % n) as u32))).unwrap()
    }

    #[test]
    fn parse_dedups_and_drops_self_loops() {
        let g = Graph::parse_edge_list(Cursor::new("a b\n# c\nb a\nb b\n")).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.label(0), Some("a"));
        assert_eq!(g.label(1), Some("b"));
    }

    #[test]
    fn parse_maps_labels_in_first_appearance_order() {
        let g = Graph::parse_edge_list(Cursor::new("% header\n5 3\n3 9\n")).unwrap();
        assert_eq!(g.label(0), Some("5"));
        assert_eq!(g.label(1), Some("3"));
        assert_eq!(g.label(2), Some("9"));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn parse_ignores_trailing_tokens() {
        let g = Graph::parse_edge_list(Cursor::new("0 1 1349302400\n1 2 7\n")).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_reports_offending_line_number() {
        let err = Graph::parse_edge_list(Cursor::new("0 1\n# note\nlonely\n")).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_edgeless_input() {
        assert!(matches!(
            Graph::parse_edge_list(Cursor::new("# only comments\n")),
            Err(Error::NoEdges)
        ));
        assert!(matches!(
            Graph::parse_edge_list(Cursor::new("x x\n")),
            Err(Error::NoEdges)
        ));
    }

    #[test]
    fn gzip_input_is_detected_by_suffix() {
        use std::io::Write;
        let dir = std::env::temp_dir().join(format!("hyperecc-gz-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("tiny.txt.gz");
        let mut enc = flate2::write::GzEncoder::new(
            File::create(&path).unwrap(),
            flate2::Compression::default(),
        );
        enc.write_all(b"0 1\n1 2\n2 0\n").unwrap();
        enc.finish().unwrap();
        let g = Graph::from_path(&path).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn largest_component_prefers_smallest_id_on_ties() {
        // Two components of equal size; the one containing vertex 0 wins.
        let g = Graph::from_edges(6, [(4, 3), (0, 2), (1, 5)]).unwrap();
        let (lcc, map) = g.largest_component();
        assert_eq!(lcc.vertex_count(), 2);
        assert_eq!(map, vec![0, 2]);
    }

    #[test]
    fn largest_component_relabels_in_ascending_old_id_order() {
        let g = Graph::parse_edge_list(Cursor::new("a b\nb c\nx y\n")).unwrap();
        let (lcc, map) = g.largest_component();
        assert_eq!(lcc.vertex_count(), 3);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(lcc.label(2), Some("c"));
    }

    #[test]
    fn bfs_on_path_from_middle() {
        let g = path_graph(5);
        let l = g.bfs(2).unwrap();
        assert_eq!(l.height, vec![2, 1, 0, 1, 2]);
        assert_eq!(l.order, vec![2, 1, 3, 0, 4]);
        assert_eq!(l.sigma, vec![2, 4, 5, 3, 1]);
        assert_eq!(l.parent[2], NO_PARENT);
        assert_eq!(l.parent[1], 2);
        assert_eq!(l.eccentricity(), 2);
    }

    #[test]
    fn bfs_on_cycle_six() {
        let g = cycle_graph(6);
        let l = g.bfs(0).unwrap();
        assert_eq!(l.height, vec![0, 1, 2, 3, 2, 1]);
        assert_eq!(l.order, vec![0, 1, 5, 2, 4, 3]);
        assert_eq!(l.sigma, vec![6, 5, 3, 1, 2, 4]);
        assert_eq!(l.parent[3], 2);
        assert_eq!(l.path_from_source(3), vec![0, 1, 2, 3]);
        assert_eq!(l.ancestor_at_level(3, 1), 1);
        assert_eq!(
            l.level_sets(),
            vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]
        );
    }

    #[test]
    fn bfs_rejects_disconnected_input() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.bfs(0), Err(Error::NotConnected)));
    }

    #[test]
    fn single_vertex_layering() {
        let g = Graph::from_edges(1, []).unwrap();
        let l = g.bfs(0).unwrap();
        assert_eq!(l.height, vec![0]);
        assert_eq!(l.sigma, vec![1]);
        assert_eq!(l.farthest(), 0);
    }

    fn edge_soup() -> impl Strategy<Value = (usize, Vec<(u32, u32)>)> {
        (2usize..40).prop_flat_map(|n| {
            let edges = prop::collection::vec((0..n as u32, 0..n as u32), 1..3 * n);
            (Just(n), edges)
        })
    }

    proptest! {
        #[test]
        fn largest_component_size_matches_union_find((n, edges) in edge_soup()) {
            let g = Graph::from_edges(n, edges.iter().cloned()).unwrap();
            let mut uf = UnionFind::new(n);
            for &(a, b) in &edges {
                uf.union(a as usize, b as usize);
            }
            let roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
            let expected = (0..n)
                .map(|r| roots.iter().filter(|&&x| x == r).count())
                .max()
                .unwrap();
            let (lcc, map) = g.largest_component();
            prop_assert_eq!(lcc.vertex_count(), expected);
            prop_assert!(lcc.is_connected());
            prop_assert!(map.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn bfs_matches_unit_dijkstra_and_is_deterministic((n, edges) in edge_soup()) {
            let (g, _) = Graph::from_edges(n, edges).unwrap().largest_component();
            let l = g.bfs(0).unwrap();
            let oracle = dijkstra_unit(&g, 0);
            prop_assert_eq!(&l.height, &oracle);
            let again = g.bfs(0).unwrap();
            prop_assert_eq!(&l.order, &again.order);

            // Heights change by at most one along any edge.
            for u in 0..g.vertex_count() as u32 {
                for &v in g.neighbors(u) {
                    let (hu, hv) = (l.height[u as usize], l.height[v as usize]);
                    prop_assert!(hu.abs_diff(hv) <= 1);
                }
            }

            // sigma is a bijection onto 1..=n with the source on top, and
            // parents outrank children.
            let mut seen = vec![false; g.vertex_count()];
            for &s in &l.sigma {
                prop_assert!(s >= 1 && s as usize <= g.vertex_count());
                prop_assert!(!seen[s as usize - 1]);
                seen[s as usize - 1] = true;
            }
            prop_assert_eq!(l.sigma[0], g.vertex_count() as u32);
            for v in 0..g.vertex_count() {
                if l.parent[v] != NO_PARENT {
                    prop_assert!(l.sigma[l.parent[v] as usize] > l.sigma[v]);
                }
            }
        }

        #[test]
        fn edge_list_round_trip((n, edges) in edge_soup()) {
            let g = Graph::from_edges(n, edges).unwrap();
            if g.edge_count() == 0 {
                return Ok(());
            }
            let text = g.to_edge_list_string();
            let back = Graph::parse_edge_list(Cursor::new(text.as_bytes())).unwrap();
            let canon = |g: &Graph| {
                let mut set: Vec<(String, String)> = Vec::new();
                for u in 0..g.vertex_count() as u32 {
                    for &v in g.neighbors(u) {
                        if v > u {
                            let a = g.label(u).map(str::to_string).unwrap_or_else(|| u.to_string());
                            let b = g.label(v).map(str::to_string).unwrap_or_else(|| v.to_string());
                            set.push((a.clone().min(b.clone()), a.max(b)));
                        }
                    }
                }
                set.sort();
                set
            };
            prop_assert_eq!(canon(&g), canon(&back));
        }
    }
}
