//! Exact eccentricity and distance oracles computed by repeated BFS, with
//! size guards so quadratic work on large inputs is an explicit opt-in.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Work and memory limits for the quadratic-or-worse operations.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Cap on `n * m` for all-sources BFS sweeps.
    pub max_edge_visits: u64,
    /// Largest `n` for which the exact four-point scan runs.
    pub max_quadruple_n: usize,
    /// Cap on stored entries (distance matrix cells, reachability lists).
    pub max_entries: u64,
    /// Bypass every guard.
    pub force: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_edge_visits: 5_000_000_000,
            max_quadruple_n: 120,
            max_entries: 200_000_000,
            force: false,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            force: true,
            ..Budget::default()
        }
    }

    pub(crate) fn check_edge_visits(&self, what: &'static str, n: usize, m: usize) -> Result<()> {
        let needed = n as u64 * m as u64;
        if !self.force && needed > self.max_edge_visits {
            return Err(Error::BudgetExceeded {
                what,
                needed,
                limit: self.max_edge_visits,
                unit: "edge visits",
            });
        }
        Ok(())
    }

    pub(crate) fn check_entries(&self, what: &'static str, needed: u64) -> Result<()> {
        if !self.force && needed > self.max_entries {
            return Err(Error::BudgetExceeded {
                what,
                needed,
                limit: self.max_entries,
                unit: "entries",
            });
        }
        Ok(())
    }

    pub(crate) fn check_quadruples(&self, n: usize) -> Result<()> {
        if !self.force && n > self.max_quadruple_n {
            return Err(Error::QuadrupleBudget {
                n,
                limit: self.max_quadruple_n,
            });
        }
        Ok(())
    }
}

/// Exact eccentricities of every vertex plus the derived radius, diameter,
/// center, and eccentricity layers.
#[derive(Clone, Debug)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub rad: u32,
    pub diam: u32,
    /// Center vertices (eccentricity equals the radius), ascending.
    pub center: Vec<u32>,
    /// `layers[k]` lists the vertices of eccentricity `rad + k`, ascending.
    pub layers: Vec<Vec<u32>>,
}

impl EccentricityProfile {
    fn from_ecc(ecc: Vec<u32>) -> Self {
        let rad = *ecc.iter().min().expect("nonempty graph");
        let diam = *ecc.iter().max().expect("nonempty graph");
        let mut layers = vec![Vec::new(); (diam - rad + 1) as usize];
        for (v, &e) in ecc.iter().enumerate() {
            layers[(e - rad) as usize].push(v as u32);
        }
        let center = layers[0].clone();
        EccentricityProfile {
            ecc,
            rad,
            diam,
            center,
            layers,
        }
    }

    /// Layer index of `v`, i.e. `ecc(v) - rad`.
    pub fn layer_of(&self, v: u32) -> u32 {
        self.ecc[v as usize] - self.rad
    }
}

/// Runs one BFS per vertex and assembles the eccentricity profile.
///
/// Refuses when `n * m` exceeds the budget so that accidental quadratic
/// sweeps on large inputs fail fast; pass a forced budget to override.
pub fn all_eccentricities(g: &Graph, budget: &Budget) -> Result<EccentricityProfile> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NoEdges);
    }
    budget.check_edge_visits("all-pairs eccentricity sweep", n, g.edge_count())?;
    let ecc: Vec<u32> = (0..n as u32)
        .into_par_iter()
        .map_init(
            || (vec![u32::MAX; n], Vec::with_capacity(n)),
            |(height, queue), src| {
                if g.bfs_heights_into(src, height, queue) < n {
                    return Err(Error::NotConnected);
                }
                Ok(height[*queue.last().expect("nonempty") as usize])
            },
        )
        .collect::<Result<_>>()?;
    Ok(EccentricityProfile::from_ecc(ecc))
}

/// All vertices at maximum distance from `x`, ascending.
pub fn furthest_set(g: &Graph, x: u32) -> Result<Vec<u32>> {
    let l = g.bfs(x)?;
    let ecc = l.eccentricity();
    Ok((0..g.vertex_count() as u32)
        .filter(|&v| l.height[v as usize] == ecc)
        .collect())
}

/// Geometry of the center set: its diameter in `G`, whether it induces a
/// connected subgraph, and every vertex's distance to it.
#[derive(Clone, Debug)]
pub struct CenterGeometry {
    pub center_diam: u32,
    pub center_connected: bool,
    /// `dist_to_center[v]` is `min { d(v, c) : c in C(G) }`.
    pub dist_to_center: Vec<u32>,
}

/// Computes [`CenterGeometry`] with one multi-source BFS for the distance
/// field plus one BFS per center vertex for the pairwise diameter.
pub fn center_geometry(g: &Graph, profile: &EccentricityProfile) -> CenterGeometry {
    let n = g.vertex_count();
    let center = &profile.center;
    let in_center = {
        let mut mask = vec![false; n];
        for &c in center {
            mask[c as usize] = true;
        }
        mask
    };

    // Multi-source BFS seeded with all center vertices at height zero.
    let mut dist_to_center = vec![u32::MAX; n];
    let mut queue: Vec<u32> = Vec::with_capacity(n);
    for &c in center {
        dist_to_center[c as usize] = 0;
        queue.push(c);
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let du = dist_to_center[u as usize];
        for &v in g.neighbors(u) {
            if dist_to_center[v as usize] == u32::MAX {
                dist_to_center[v as usize] = du + 1;
                queue.push(v);
            }
        }
    }

    let mut center_diam = 0;
    let mut height = vec![u32::MAX; n];
    for &c in center {
        g.bfs_heights_into(c, &mut height, &mut queue);
        for &d in center {
            center_diam = center_diam.max(height[d as usize]);
        }
    }

    // Connectivity of the subgraph induced by the center.
    let mut center_connected = true;
    if center.len() > 1 {
        let mut seen = vec![false; n];
        queue.clear();
        seen[center[0] as usize] = true;
        queue.push(center[0]);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in g.neighbors(u) {
                if in_center[v as usize] && !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push(v);
                }
            }
        }
        center_connected = queue.len() == center.len();
    }

    CenterGeometry {
        center_diam,
        center_connected,
        dist_to_center,
    }
}

/// Full `n x n` matrix of exact distances, stored as 16-bit entries.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: u32, v: u32) -> u32 {
        self.d[u as usize * self.n + v as usize] as u32
    }

    #[inline]
    pub fn row(&self, u: u32) -> &[u16] {
        &self.d[u as usize * self.n..(u as usize + 1) * self.n]
    }

    /// Eccentricity profile read straight off the matrix rows.
    pub fn profile(&self) -> EccentricityProfile {
        let ecc = (0..self.n as u32)
            .map(|u| *self.row(u).iter().max().expect("nonempty") as u32)
            .collect();
        EccentricityProfile::from_ecc(ecc)
    }
}

/// Computes the full distance matrix with one BFS per vertex.
///
/// Guards both the `n * m` work bound and the `n * n` storage bound.
pub fn distance_matrix(g: &Graph, budget: &Budget) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NoEdges);
    }
    budget.check_edge_visits("distance matrix", n, g.edge_count())?;
    budget.check_entries("distance matrix", n as u64 * n as u64)?;
    assert!(n <= u16::MAX as usize, "distances do not fit in 16 bits");
    let mut d = vec![0u16; n * n];
    d.par_chunks_mut(n)
        .enumerate()
        .map_init(
            || (vec![u32::MAX; n], Vec::with_capacity(n)),
            |(height, queue), (src, row)| {
                if g.bfs_heights_into(src as u32, height, queue) < n {
                    return Err(Error::NotConnected);
                }
                for (cell, &h) in row.iter_mut().zip(height.iter()) {
                    *cell = h as u16;
                }
                Ok(())
            },
        )
        .collect::<Result<()>>()?;
    Ok(DistanceMatrix { n, d })
}
