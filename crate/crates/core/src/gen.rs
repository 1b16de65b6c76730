//! Seeded generators for the named graph families used by the harness and
//! the test suites. All generators return connected graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Path on `n >= 1` vertices, `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as u32).map(|v| (v - 1, v))).expect("valid path edges")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n as u32).map(|v| (v, ((v as usize + 1) % n) as u32)))
        .expect("valid cycle edges")
}

/// `rows x cols` rectangular grid, vertices numbered row-major.
pub fn grid(rows: usize, cols: usize) -> Graph {
    assert!(rows >= 1 && cols >= 1);
    let idx = |r: usize, c: usize| (r * cols + c) as u32;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("valid grid edges")
}

/// Star with `leaves >= 1` leaves attached to vertex 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves as u32).map(|v| (0, v))).expect("valid star edges")
}

/// Complete graph on `n >= 2` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("valid complete edges")
}

/// Uniform random tree grown by attaching each vertex to an earlier one.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = rng_from_seed(seed);
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, edges).expect("valid tree edges")
}

/// Erdos-Renyi `G(n, p)` resampled until connected. Fails after
/// `max_attempts` rejections so that callers with unrealistically small `p`
/// terminate.
pub fn random_connected(n: usize, p: f64, seed: u64, max_attempts: usize) -> Result<Graph> {
    assert!(n >= 1);
    assert!((0.0..=1.0).contains(&p));
    let mut rng = rng_from_seed(seed);
    for _ in 0..max_attempts {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("valid random edges");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidFormat(format!(
        "random graph n={n} p={p} not connected after {max_attempts} attempts"
    )))
}

/// Connected random graph with exactly `m` edges: a random spanning tree
/// plus uniformly sampled extra edges. Requires `n-1 <= m <= n(n-1)/2`.
pub fn random_connected_with_edges(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    assert!(m + 1 >= n, "too few edges for connectivity");
    assert!(m <= n * (n - 1) / 2, "too many edges for a simple graph");
    let mut rng = rng_from_seed(seed);
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut seen: std::collections::HashSet<(u32, u32)> =
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    while seen.len() < m {
        let a = rng.gen_range(0..n as u32);
        let b = rng.gen_range(0..n as u32);
        if a == b {
            continue;
        }
        let e = (a.min(b), a.max(b));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, edges).expect("valid random edges")
}

/// Chain of cliques glued at shared cut vertices (every biconnected
/// component is a clique).
pub fn block_chain(clique_sizes: &[usize]) -> Graph {
    assert!(!clique_sizes.is_empty());
    assert!(clique_sizes.iter().all(|&s| s >= 2));
    let mut edges = Vec::new();
    let mut start = 0u32;
    for (i, &s) in clique_sizes.iter().enumerate() {
        let verts: Vec<u32> = if i == 0 {
            (start..start + s as u32).collect()
        } else {
            // Reuse the previous clique's last vertex as the cut vertex.
            let mut v = vec![start - 1];
            v.extend(start..start + s as u32 - 1);
            v
        };
        for a in 0..verts.len() {
            for b in a + 1..verts.len() {
                edges.push((verts[a], verts[b]));
            }
        }
        start += if i == 0 { s as u32 } else { s as u32 - 1 };
    }
    Graph::from_edges(start as usize, edges).expect("valid block edges")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_expected_shape() {
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(6).edge_count(), 6);
        let g = grid(3, 4);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 3 * 3 + 2 * 4);
        assert_eq!(star(4).degree(0), 4);
        assert_eq!(complete(5).edge_count(), 10);
    }

    #[test]
    fn random_families_are_connected_and_reproducible() {
        let t = random_tree(30, 7);
        assert_eq!(t.edge_count(), 29);
        assert!(t.is_connected());
        let g1 = random_connected(25, 0.2, 42, 500).unwrap();
        let g2 = random_connected(25, 0.2, 42, 500).unwrap();
        assert_eq!(g1.to_edge_list_string(), g2.to_edge_list_string());
        assert!(g1.is_connected());
        let h = random_connected_with_edges(200, 700, 3);
        assert_eq!(h.edge_count(), 700);
        assert!(h.is_connected());
    }

    #[test]
    fn block_chain_glues_cliques_at_cut_vertices() {
        let g = block_chain(&[3, 4, 2]);
        assert_eq!(g.vertex_count(), 3 + 3 + 1);
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 3 + 6 + 1);
    }
}
