//! Invariant verification: runs every bound the library promises on a
//! concrete graph, using the exact oracles as ground truth and the
//! four-point thinness bound as the slack parameter, and reports each
//! violated inequality with its witness vertices.

use crate::dist::{
    approximate_all_distances, approximate_all_distances_estimated, closed_form_estimate,
    distance_sandwich, error_stats, smallest_admissible_delta, DistanceEstimate, DistanceEstimator,
    ExactEstimator, PowerReach, StretchEstimator,
};
use crate::ecc::{
    build_approx_tree, estimate_eccentricities, extract_geodesic, middle_vertex,
    mutually_distant_pair, tree_eccentricities, SpanningTree, Strategy, TreeVariant,
};
use crate::error::Result;
use crate::gen;
use crate::graph::{Graph, NO_PARENT};
use crate::hyperbolicity::{evaluate_quadruple, four_point_delta};
use crate::oracle::{
    all_eccentricities, center_geometry, distance_matrix, Budget, DistanceMatrix,
    EccentricityProfile,
};

/// One violated inequality with its witnesses.
#[derive(Clone, Debug)]
pub struct Violation {
    pub rule: &'static str,
    pub detail: String,
}

/// Outcome of verifying a single graph.
#[derive(Clone, Debug)]
pub struct GraphReport {
    pub tau: u32,
    pub rad: u32,
    pub diam: u32,
    /// Individual inequality instances checked.
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl GraphReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Start vertex for the furthest-point iteration.
    pub start: u32,
    pub budget: Budget,
}

struct Checker {
    checks: u64,
    violations: Vec<Violation>,
}

impl Checker {
    fn new() -> Checker {
        Checker {
            checks: 0,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, rule: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                rule,
                detail: detail(),
            });
        }
    }
}

fn layer_diameter(m: &DistanceMatrix, set: &[u32]) -> u32 {
    let mut best = 0;
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            best = best.max(m.get(a, b));
        }
    }
    best
}

fn tree_bfs_heights(tree: &SpanningTree, source: u32) -> Vec<u32> {
    let n = tree.vertex_count();
    let mut height = vec![u32::MAX; n];
    let mut queue = vec![source];
    height[source as usize] = 0;
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in tree.tree_neighbors(u) {
            if height[v as usize] == u32::MAX {
                height[v as usize] = height[u as usize] + 1;
                queue.push(v);
            }
        }
    }
    height
}

/// Checks an estimate row by row against the exact matrix: one-sided error
/// within `[0, max_over]` everywhere, and the root row exact.
pub fn check_distance_estimate(
    est: &DistanceEstimate,
    m: &DistanceMatrix,
    max_over: u32,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = est.vertex_count() as u32;
    for x in 0..n {
        for y in x + 1..n {
            let dh = est.get(x, y) as i64;
            let d = m.get(x, y) as i64;
            if dh < d || dh > d + max_over as i64 {
                out.push(Violation {
                    rule: "dist-band",
                    detail: format!(
                        "pair ({x}, {y}): estimate {dh} vs distance {d}, allowed over-error {max_over}"
                    ),
                });
            }
        }
        if x != est.root && est.get(x, est.root) != m.get(x, est.root) {
            out.push(Violation {
                rule: "dist-root-row",
                detail: format!(
                    "pair ({x}, root {}): estimate {} vs distance {}",
                    est.root,
                    est.get(x, est.root),
                    m.get(x, est.root)
                ),
            });
        }
    }
    out
}

fn check_oracle(
    c: &mut Checker,
    m: &DistanceMatrix,
    profile: &EccentricityProfile,
    tau: u32,
    center_diam: u32,
    dist_to_center: &[u32],
) {
    let n = profile.ecc.len();
    c.check("oracle-diam-2rad", profile.diam <= 2 * profile.rad, || {
        format!("diam {} > 2 rad {}", profile.diam, 2 * profile.rad)
    });
    c.check("oracle-center-nonempty", !profile.center.is_empty(), || {
        "empty center".into()
    });
    c.check(
        "oracle-layers-partition",
        profile.layers.iter().map(Vec::len).sum::<usize>() == n,
        || "eccentricity layers do not partition the vertices".into(),
    );
    c.check(
        "oracle-center-is-layer-zero",
        profile.layers.first().map(Vec::as_slice) == Some(profile.center.as_slice()),
        || "layer 0 differs from the center".into(),
    );
    for (v, &e) in profile.ecc.iter().enumerate() {
        c.check(
            "oracle-ecc-range",
            profile.rad <= e && e <= profile.diam,
            || format!("ecc({v}) = {e} outside [{}, {}]", profile.rad, profile.diam),
        );
    }
    for (k, layer) in profile.layers.iter().enumerate() {
        let bound = 2 * k as u32 + 2 * tau + 1;
        let ld = layer_diameter(m, layer);
        c.check("oracle-layer-diameter", ld <= bound, || {
            format!("layer {k} has diameter {ld} > {bound}")
        });
    }
    c.check("oracle-center-diam", center_diam <= profile.diam, || {
        format!("center diameter {center_diam} > diameter {}", profile.diam)
    });
    for v in 0..n as u32 {
        let dc = dist_to_center[v as usize];
        let e = profile.ecc[v as usize] as i64;
        c.check(
            "oracle-dist-center-zero",
            (dc == 0) == profile.center.binary_search(&v).is_ok(),
            || format!("vertex {v}: distance to center {dc} vs center membership"),
        );
        c.check(
            "oracle-corollary-upper",
            e <= dc as i64 + profile.rad as i64,
            || format!("ecc({v}) = {e} > d(v,C)+rad = {}", dc + profile.rad),
        );
        c.check(
            "oracle-corollary-lower",
            dc as i64 + profile.rad as i64 - 4 * tau as i64 - 2 <= e,
            || {
                format!(
                    "ecc({v}) = {e} < d(v,C)+rad-4t-2 = {}",
                    dc as i64 + profile.rad as i64 - 4 * tau as i64 - 2
                )
            },
        );
    }
}

fn check_tree(
    c: &mut Checker,
    g: &Graph,
    m: &DistanceMatrix,
    profile: &EccentricityProfile,
    tree: &SpanningTree,
    label: &str,
    band: Option<u32>,
) {
    let n = g.vertex_count();
    for v in 0..n as u32 {
        let p = tree.parent[v as usize];
        if v == tree.root {
            c.check("tree-root-parent", p == NO_PARENT, || {
                format!("{label}: root {v} has a parent")
            });
        } else {
            c.check("tree-spanning", g.has_edge(v, p), || {
                format!("{label}: tree edge ({v}, {p}) is not a graph edge")
            });
        }
    }
    let heights = tree_bfs_heights(tree, tree.root);
    for v in 0..n as u32 {
        c.check(
            "tree-root-distances",
            heights[v as usize] == m.get(v, tree.root),
            || {
                format!(
                    "{label}: tree distance from {v} to root {} is {} vs graph {}",
                    tree.root,
                    heights[v as usize],
                    m.get(v, tree.root)
                )
            },
        );
    }
    c.check(
        "tree-center-size",
        matches!(tree.center.len(), 1 | 2),
        || format!("{label}: center has {} vertices", tree.center.len()),
    );
    if let [a, b] = tree.center[..] {
        c.check(
            "tree-center-adjacent",
            tree.tree_neighbors(a).contains(&b),
            || format!("{label}: center vertices {a} and {b} are not adjacent"),
        );
    }
    c.check(
        "tree-rad-formula",
        tree.rad == tree.diam.div_ceil(2),
        || {
            format!(
                "{label}: rad {} vs ceil(diam/2) {}",
                tree.rad,
                tree.diam.div_ceil(2)
            )
        },
    );
    for v in 0..n as u32 {
        let brute = {
            let h = tree_bfs_heights(tree, v);
            h.iter().copied().max().unwrap_or(0)
        };
        c.check("tree-ecc-brute", tree.ecc[v as usize] == brute, || {
            format!(
                "{label}: tree eccentricity of {v} is {} vs brute force {brute}",
                tree.ecc[v as usize]
            )
        });
        c.check(
            "tree-ecc-dominates",
            tree.ecc[v as usize] >= profile.ecc[v as usize],
            || {
                format!(
                    "{label}: tree eccentricity {} below graph eccentricity {} at {v}",
                    tree.ecc[v as usize], profile.ecc[v as usize]
                )
            },
        );
        if let Some(slack) = band {
            c.check(
                "tree-ecc-band",
                tree.ecc[v as usize] <= profile.ecc[v as usize] + slack,
                || {
                    format!(
                        "{label}: tree eccentricity {} exceeds ecc({v}) + {slack} = {}",
                        tree.ecc[v as usize],
                        profile.ecc[v as usize] + slack
                    )
                },
            );
        }
    }
}

fn check_distances_for_root(
    c: &mut Checker,
    g: &Graph,
    m: &DistanceMatrix,
    tau: u32,
    root: u32,
    reach: &PowerReach,
    budget: &Budget,
) -> Result<()> {
    let n = g.vertex_count() as u32;
    let l = g.bfs(root)?;

    let est = approximate_all_distances(g, tau, root, budget)?;
    for v in check_distance_estimate(&est, m, tau + 1) {
        c.checks += 1;
        c.violations.push(v);
    }
    c.checks += (n as u64) * (n as u64 - 1) / 2;

    let stats = error_stats(&est, m);
    c.check(
        "dist-avg-le-max",
        stats.avg_err <= stats.max_err as f64 + 1e-9,
        || {
            format!(
                "average error {} above maximum {}",
                stats.avg_err, stats.max_err
            )
        },
    );

    let exact = ExactEstimator::new(m);
    let est_exact = approximate_all_distances_estimated(g, tau, &exact, root, budget)?;
    let stretch = StretchEstimator::new(m);
    let est_stretch = approximate_all_distances_estimated(g, tau, &stretch, root, budget)?;
    for (est_v, name) in [(&est_exact, "exact"), (&est_stretch, "stretch")] {
        for v in check_distance_estimate(est_v, m, 2 * tau + 2) {
            c.checks += 1;
            c.violations.push(Violation {
                rule: "dist-estimator-band",
                detail: format!("{name} estimator at root {root}: {}", v.detail),
            });
        }
    }

    let threshold = 2 * tau + 1;
    for x in 0..n {
        for y in 0..n {
            let want = closed_form_estimate(&l, x, y, tau, |u, v| reach.within(u, v));
            c.check("dist-sweep-closed-form", est.get(x, y) == want, || {
                format!(
                    "root {root} pair ({x}, {y}): sweep {} vs closed form {want}",
                    est.get(x, y)
                )
            });
            let want_est =
                closed_form_estimate(&l, x, y, threshold, |u, v| stretch.query(u, v) <= threshold);
            c.check(
                "dist-estimated-sweep-closed-form",
                est_stretch.get(x, y) == want_est,
                || {
                    format!(
                        "root {root} pair ({x}, {y}): estimated sweep {} vs closed form {want_est}",
                        est_stretch.get(x, y)
                    )
                },
            );
        }
    }

    for x in 0..n {
        for y in x + 1..n {
            let (lo, hi) = distance_sandwich(&l, m, x, y, tau);
            let d = m.get(x, y) as i64;
            c.check("dist-sandwich", lo <= d && d <= hi as i64, || {
                format!("root {root} pair ({x}, {y}): bounds [{lo}, {hi}] miss distance {d}")
            });
        }
    }
    Ok(())
}

/// Runs every supported inequality on one connected graph.
///
/// Exact oracles (all-pairs distances, eccentricity profile, four-point
/// scan) provide the ground truth, so the quadratic and quartic budgets
/// apply; verification of graphs beyond the quadruple budget needs force.
pub fn verify_graph(g: &Graph, opts: &VerifyOptions) -> Result<GraphReport> {
    let budget = &opts.budget;
    let n = g.vertex_count();
    let m = distance_matrix(g, budget)?;
    let profile = all_eccentricities(g, budget)?;
    let hyp = four_point_delta(&m, budget)?;
    let tau = hyp.thinness();
    let geometry = center_geometry(g, &profile);
    let mut c = Checker::new();

    c.check(
        "hyp-witness-reproduces",
        evaluate_quadruple(&m, hyp.witness) == hyp.delta4,
        || {
            format!(
                "witness {:?} does not reproduce the four-point value",
                hyp.witness
            )
        },
    );

    // Profile must agree with the matrix row maxima.
    let from_matrix = m.profile();
    c.check(
        "oracle-profile-matrix",
        profile.ecc == from_matrix.ecc,
        || "eccentricities from BFS oracle and matrix rows disagree".into(),
    );

    check_oracle(
        &mut c,
        &m,
        &profile,
        tau,
        geometry.center_diam,
        &geometry.dist_to_center,
    );

    // Furthest vertices are near-diametral.
    for u in 0..n as u32 {
        let row = m.row(u);
        let mut v = 0u32;
        for (w, &d) in row.iter().enumerate() {
            if d > row[v as usize] {
                v = w as u32;
            }
        }
        c.check(
            "furthest-ecc-bound",
            profile.ecc[v as usize] as i64 >= profile.diam as i64 - 2 * tau as i64,
            || {
                format!(
                    "furthest({u}) = {v} has ecc {} < diam - 2t = {}",
                    profile.ecc[v as usize],
                    profile.diam as i64 - 2 * tau as i64
                )
            },
        );
    }

    // Furthest-point pair, its geodesic, and the middle vertex.
    let pair = mutually_distant_pair(g, opts.start)?;
    c.check(
        "pair-certified",
        m.get(pair.u, pair.v) == pair.distance
            && profile.ecc[pair.u as usize] == pair.distance
            && profile.ecc[pair.v as usize] == pair.distance,
        || {
            format!(
                "pair ({}, {}) distance {} vs ecc {} and {}",
                pair.u,
                pair.v,
                pair.distance,
                profile.ecc[pair.u as usize],
                profile.ecc[pair.v as usize]
            )
        },
    );
    c.check(
        "pair-scan-count",
        pair.scans as usize == pair.trace.len(),
        || format!("{} scans vs trace length {}", pair.scans, pair.trace.len()),
    );
    let mut trace_ok = true;
    let mut last = 0;
    for w in pair.trace.windows(2) {
        let d = m.get(w[0], w[1]);
        if d < last {
            trace_ok = false;
        }
        last = d;
    }
    c.check("pair-trace-monotone", trace_ok, || {
        format!(
            "trace {:?} has decreasing consecutive distances",
            pair.trace
        )
    });
    c.check("pair-scan-bound", pair.scans <= 2 * tau + 3, || {
        format!("{} scans > 2t+3 = {}", pair.scans, 2 * tau + 3)
    });
    c.check(
        "pair-distance-lower",
        pair.distance as i64 >= 2 * profile.rad as i64 - 2 * tau as i64 - 1,
        || {
            format!(
                "pair distance {} < 2 rad - 2t - 1 = {}",
                pair.distance,
                2 * profile.rad as i64 - 2 * tau as i64 - 1
            )
        },
    );

    let geo = extract_geodesic(g, pair.u, pair.v)?;
    let mut geodesic_ok = true;
    for (i, &a) in geo.vertices.iter().enumerate() {
        for (j, &b) in geo.vertices.iter().enumerate().skip(i + 1) {
            if m.get(a, b) != (j - i) as u32 {
                geodesic_ok = false;
            }
        }
    }
    c.check("geodesic-shortest", geodesic_ok, || {
        format!(
            "extracted path {:?} is not metrically straight",
            geo.vertices
        )
    });

    let mid = middle_vertex(&geo);
    let half = pair.distance.div_ceil(2);
    c.check(
        "middle-ecc",
        profile.ecc[mid as usize] <= half + tau && profile.ecc[mid as usize] <= profile.rad + tau,
        || {
            format!(
                "middle vertex {mid} has ecc {} > min(ceil(d/2)+t, rad+t) = {}",
                profile.ecc[mid as usize],
                (half + tau).min(profile.rad + tau)
            )
        },
    );
    for x in 0..n as u32 {
        let k = profile.ecc[x as usize] - profile.rad;
        let d = m.get(x, mid);
        c.check(
            "layer-band",
            k as i64 - tau as i64 <= d as i64 && d <= k + 2 * tau + 1,
            || {
                format!(
                    "vertex {x} in layer {k}: d(x, middle {mid}) = {d} outside [{}, {}]",
                    k as i64 - tau as i64,
                    k + 2 * tau + 1
                )
            },
        );
    }
    for &x in &profile.center {
        c.check("center-ball", m.get(x, mid) <= 2 * tau + 1, || {
            format!(
                "center vertex {x} at distance {} from middle {mid} > 2t+1 = {}",
                m.get(x, mid),
                2 * tau + 1
            )
        });
    }

    // The three oracle-assisted trees plus the oracle-free strategies.
    let mut t1 = build_approx_tree(g, TreeVariant::T1, None, opts.start)?;
    tree_eccentricities(&mut t1);
    check_tree(&mut c, g, &m, &profile, &t1, "T1", Some(3 * tau + 1));

    let mut t2 = build_approx_tree(g, TreeVariant::T2, Some(&profile), opts.start)?;
    tree_eccentricities(&mut t2);
    c.check(
        "t2-root-ecc",
        profile.ecc[t2.root as usize] <= profile.rad + tau,
        || {
            format!(
                "T2 root {} has ecc {} > rad + t = {}",
                t2.root,
                profile.ecc[t2.root as usize],
                profile.rad + tau
            )
        },
    );
    check_tree(&mut c, g, &m, &profile, &t2, "T2", Some(6 * tau + 1));

    let mut t3 = build_approx_tree(g, TreeVariant::T3, Some(&profile), opts.start)?;
    tree_eccentricities(&mut t3);
    c.check("t3-root-is-center", t3.root == profile.center[0], || {
        format!("T3 root {} is not the lowest center vertex", t3.root)
    });
    check_tree(&mut c, g, &m, &profile, &t3, "T3", None);

    let refined = estimate_eccentricities(g, Strategy::Refined, opts.start)?;
    c.check(
        "estimate-matches-tree",
        refined.estimate == refined.tree.ecc,
        || "refined estimate differs from its own tree eccentricities".into(),
    );
    c.check("refined-root-matches-t1", refined.root == t1.root, || {
        format!("refined root {} vs T1 root {}", refined.root, t1.root)
    });
    for v in 0..n as u32 {
        c.check(
            "refined-band",
            profile.ecc[v as usize] <= refined.estimate[v as usize]
                && refined.estimate[v as usize] <= profile.ecc[v as usize] + 3 * tau + 1,
            || {
                format!(
                    "refined estimate {} at {v} outside [ecc, ecc + 3t+1] = [{}, {}]",
                    refined.estimate[v as usize],
                    profile.ecc[v as usize],
                    profile.ecc[v as usize] + 3 * tau + 1
                )
            },
        );
    }

    let linear = estimate_eccentricities(g, Strategy::Linear, opts.start)?;
    c.check(
        "linear-root-ecc",
        profile.ecc[linear.root as usize] <= profile.rad + 3 * tau,
        || {
            format!(
                "linear root {} has ecc {} > rad + 3t = {}",
                linear.root,
                profile.ecc[linear.root as usize],
                profile.rad + 3 * tau
            )
        },
    );
    for &x in &profile.center {
        c.check(
            "linear-center-ball",
            m.get(x, linear.root) <= 3 * tau + 1,
            || {
                format!(
                    "center vertex {x} at distance {} from linear root {} > 3t+1 = {}",
                    m.get(x, linear.root),
                    linear.root,
                    3 * tau + 1
                )
            },
        );
    }
    check_tree(
        &mut c,
        g,
        &m,
        &profile,
        &linear.tree,
        "linear",
        Some(6 * tau + 1),
    );
    for v in 0..n as u32 {
        c.check(
            "linear-band",
            profile.ecc[v as usize] <= linear.estimate[v as usize]
                && linear.estimate[v as usize] <= profile.ecc[v as usize] + 6 * tau + 1,
            || {
                format!(
                    "linear estimate {} at {v} outside [ecc, ecc + 6t+1] = [{}, {}]",
                    linear.estimate[v as usize],
                    profile.ecc[v as usize],
                    profile.ecc[v as usize] + 6 * tau + 1
                )
            },
        );
    }

    // Distance estimates from the refined middle vertex and from vertex 0.
    let reach = PowerReach::build(g, tau, budget)?;
    let mut roots = vec![refined.root];
    if !roots.contains(&0) {
        roots.push(0);
    }
    for root in roots {
        check_distances_for_root(&mut c, g, &m, tau, root, &reach, budget)?;
    }

    let search = smallest_admissible_delta(g, refined.root, &m, budget)?;
    for row in &search.rows {
        c.check("admissible-nonnegative", row.stats.min_err >= 0, || {
            format!(
                "delta {}: negative error {} at pair {:?}",
                row.delta, row.stats.min_err, row.stats.min_pair
            )
        });
        c.check(
            "admissible-avg-le-max",
            row.stats.avg_err <= row.stats.max_err as f64 + 1e-9,
            || format!("delta {}: average above maximum", row.delta),
        );
        c.check(
            "admissible-minimal",
            row.admissible == (row.delta == search.delta),
            || format!("delta {} admissibility out of order", row.delta),
        );
    }
    c.check(
        "admissible-within-thinness-band",
        search
            .rows
            .iter()
            .any(|r| r.delta == tau.min(search.delta) || search.delta <= tau),
        || {
            format!(
                "admissible delta {} exceeds thinness bound {tau}",
                search.delta
            )
        },
    );

    // Tree inputs must come out exact everywhere.
    if g.edge_count() == n - 1 {
        c.check("tree-exact-delta4", tau == 0, || {
            format!("tree input reports nonzero four-point value {}", hyp.delta4)
        });
        c.check(
            "tree-exact-estimates",
            refined.estimate == profile.ecc && linear.estimate == profile.ecc,
            || "tree input estimates are not exact".into(),
        );
        c.check(
            "tree-exact-admissible",
            search.delta == 0 && search.rows[0].stats.max_err == 0,
            || {
                format!(
                    "tree input: admissible delta {} with max error {}",
                    search.delta, search.rows[0].stats.max_err
                )
            },
        );
    }

    Ok(GraphReport {
        tau,
        rad: profile.rad,
        diam: profile.diam,
        checks: c.checks,
        violations: c.violations,
    })
}

/// Named graphs exercised by [`verify_suite`]: seeded random graphs from
/// sparse to dense, paths, cycles, grids, stars, complete graphs, random
/// trees, and clique chains.
pub fn builtin_suite(seed: u64) -> Vec<(String, Graph)> {
    use rand::Rng;
    let mut rng = gen::rng_from_seed(seed);
    let mut suite: Vec<(String, Graph)> = Vec::new();

    for i in 0..200 {
        let n = rng.gen_range(5..=40);
        let sparse = (1.3 * (n as f64).ln() / n as f64).min(1.0);
        let t = i as f64 / 199.0;
        let p = sparse + t * (0.9 - sparse);
        let child = rng.gen();
        let g =
            gen::random_connected(n, p, child, 3000).unwrap_or_else(|_| gen::random_tree(n, child));
        suite.push((format!("random-{i}-n{n}"), g));
    }
    for n in 2..=30 {
        suite.push((format!("path-{n}"), gen::path(n)));
    }
    for n in 3..=30 {
        suite.push((format!("cycle-{n}"), gen::cycle(n)));
    }
    for r in 2..=8 {
        for cdim in r..=8 {
            suite.push((format!("grid-{r}x{cdim}"), gen::grid(r, cdim)));
        }
    }
    for leaves in 1..=12 {
        suite.push((format!("star-{leaves}"), gen::star(leaves)));
    }
    for n in 2..=10 {
        suite.push((format!("complete-{n}"), gen::complete(n)));
    }
    for i in 0..20 {
        let n = rng.gen_range(2..=60);
        let child = rng.gen();
        suite.push((format!("tree-{i}-n{n}"), gen::random_tree(n, child)));
    }
    for (i, sizes) in [vec![3, 4, 2], vec![2, 2, 2, 2], vec![5, 3, 5]]
        .into_iter()
        .enumerate()
    {
        suite.push((format!("blocks-{i}"), gen::block_chain(&sizes)));
    }
    suite
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub graphs: usize,
    pub checks: u64,
    pub violations: Vec<(String, Violation)>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies every graph of the builtin suite.
pub fn verify_suite(seed: u64, opts: &VerifyOptions) -> Result<SuiteOutcome> {
    let mut outcome = SuiteOutcome {
        graphs: 0,
        checks: 0,
        violations: Vec::new(),
    };
    for (name, g) in builtin_suite(seed) {
        let report = verify_graph(&g, opts)?;
        outcome.graphs += 1;
        outcome.checks += report.checks;
        outcome
            .violations
            .extend(report.violations.into_iter().map(|v| (name.clone(), v)));
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::approximate_all_distances;

    fn unlimited_opts() -> VerifyOptions {
        VerifyOptions {
            start: 0,
            budget: Budget::unlimited(),
        }
    }

    #[test]
    fn clean_graphs_verify() {
        for (name, g) in [
            ("path", gen::path(5)),
            ("cycle", gen::cycle(6)),
            ("complete", gen::complete(5)),
            ("grid", gen::grid(3, 4)),
            ("star", gen::star(6)),
            ("blocks", gen::block_chain(&[3, 4, 2])),
            ("random", gen::random_connected(25, 0.2, 9, 500).unwrap()),
            ("single", Graph::from_edges(1, []).unwrap()),
        ] {
            let report = verify_graph(&g, &unlimited_opts()).unwrap();
            assert!(
                report.ok(),
                "{name}: {:?}",
                report
                    .violations
                    .first()
                    .map(|v| (v.rule, v.detail.clone()))
            );
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn corrupted_estimate_is_named() {
        let g = gen::cycle(6);
        let m = distance_matrix(&g, &Budget::unlimited()).unwrap();
        let mut est = approximate_all_distances(&g, 2, 0, &Budget::unlimited()).unwrap();
        // Push one pair just past the allowed band.
        est.set_raw(2, 4, (est.get(2, 4) + 2 + 2) as u16);
        let violations = check_distance_estimate(&est, &m, 3);
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].rule, "dist-band");
        assert!(
            violations[0].detail.contains("(2, 4)"),
            "{}",
            violations[0].detail
        );

        // And one pair below the true distance.
        let mut low = approximate_all_distances(&g, 2, 0, &Budget::unlimited()).unwrap();
        low.set_raw(1, 4, 0);
        let violations = check_distance_estimate(&low, &m, 3);
        assert!(violations.iter().any(|v| v.detail.contains("(1, 4)")));
    }

    #[test]
    fn suite_subset_is_clean() {
        let opts = unlimited_opts();
        for (name, g) in builtin_suite(1).into_iter().take(6) {
            let report = verify_graph(&g, &opts).unwrap();
            assert!(report.ok(), "{name}: {:?}", report.violations.first());
        }
    }

    #[test]
    fn suite_composition() {
        let suite = builtin_suite(42);
        assert_eq!(suite.len(), 200 + 29 + 28 + 28 + 12 + 9 + 20 + 3);
        let reproduced = builtin_suite(42);
        for ((na, ga), (nb, gb)) in suite.iter().zip(&reproduced) {
            assert_eq!(na, nb);
            assert_eq!(ga.to_edge_list_string(), gb.to_edge_list_string());
        }
        for (name, g) in &suite {
            assert!(g.is_connected(), "{name} must be connected");
        }
    }
}
