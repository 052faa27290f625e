//! Exact proper connection and odd-even proper connection numbers by pruned
//! exhaustive search, the odd-cycle edge decomposition, and palette bounds.
//!
//! The search iterates palettes k = lower, lower+1, ... and stops at the
//! first k admitting a valid coloring, so minimality needs no separate
//! argument. Within one palette it tries caller-supplied hint colorings,
//! then seeded random probes, and only then enumerates colorings with
//! canonical pruning (edge 0 fixed to color 1; color c+1 may first appear
//! only after color c). Properness is invariant under palette permutation,
//! so the pruning is lossless. Negative answers (no coloring at palette k)
//! always come from the exhaustive enumeration; if that would exceed the
//! configured budget the solver reports an explicit resource error instead
//! of guessing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{
    is_odd_even_proper_opts, is_proper_connected_opts, CheckOptions, EdgeColoring,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph};
use crate::products::{ProductGraph, ProductKind};

/// How a certificate's value was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Constructive,
    BoundOnly,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::Constructive => "constructive",
            Method::BoundOnly => "bound-only",
        }
    }
}

/// Which quantity a certificate is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Pc,
    Oepc,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Pc => "pc",
            Quantity::Oepc => "oepc",
        }
    }
}

/// An exact value (`None` = infinite) plus a verifying coloring when finite.
#[derive(Debug, Clone)]
pub struct PcCertificate {
    pub value: Option<usize>,
    pub certificate: Option<EdgeColoring>,
    pub method: Method,
    pub quantity: Quantity,
}

/// Search configuration. The defaults keep everything exact at desk scale.
#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// Largest palette to try; defaults to the edge count (the all-distinct
    /// coloring is a universal fallback wherever a coloring exists at all).
    pub k_max: Option<usize>,
    /// Seeded random colorings tried per palette before enumerating.
    pub probe_attempts: usize,
    /// Cap on enumeration leaves (full colorings checked) per palette.
    pub max_leaf_checks: u64,
    pub seed: u64,
    /// Candidate colorings checked before any search. A verified hint with
    /// palette <= k settles palette k positively; minimality still comes
    /// from the failed smaller palettes, so hints never change the value.
    pub hints: Vec<EdgeColoring>,
    pub check: CheckOptions,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            k_max: None,
            probe_attempts: 2000,
            max_leaf_checks: 2_000_000,
            seed: 0x5EED_CAFE,
            hints: Vec::new(),
            check: CheckOptions::default(),
        }
    }
}

/// Any two pendant vertices hanging off a common neighbor are joined only
/// by the 2-edge path through it, so the spokes below one vertex must take
/// pairwise distinct colors.
fn pendant_lower_bound(g: &Graph) -> usize {
    (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&(w, _)| g.degree(w) == 1)
                .count()
        })
        .max()
        .unwrap_or(0)
}

fn checked(
    g: &Graph,
    c: &EdgeColoring,
    quantity: Quantity,
    check: &CheckOptions,
) -> Result<bool> {
    match quantity {
        Quantity::Pc => Ok(is_proper_connected_opts(g, c, check)?.connected),
        Quantity::Oepc => Ok(is_odd_even_proper_opts(g, c, check)?.connected),
    }
}

/// Number of leaves the pruned enumeration can visit, conservatively
/// estimated as k^(m-1).
fn leaf_estimate(k: usize, m: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 1..m {
        total = total.saturating_mul(k as u128);
    }
    total
}

struct Enumeration<'a> {
    g: &'a Graph,
    k: usize,
    quantity: Quantity,
    check: CheckOptions,
    colors: Vec<usize>,
    leaves: u64,
    max_leaves: u64,
}

impl Enumeration<'_> {
    fn run(&mut self, pos: usize, max_used: usize) -> Result<Option<EdgeColoring>> {
        if pos == self.colors.len() {
            self.leaves += 1;
            if self.leaves > self.max_leaves {
                return Err(Error::BudgetExceeded(format!(
                    "palette {} enumeration exceeded {} colorings",
                    self.k, self.max_leaves
                )));
            }
            let c = EdgeColoring::new(self.k, self.colors.clone())?;
            if checked(self.g, &c, self.quantity, &self.check)? {
                return Ok(Some(c));
            }
            return Ok(None);
        }
        for color in 1..=self.k.min(max_used + 1) {
            self.colors[pos] = color;
            if let Some(found) = self.run(pos + 1, max_used.max(color))? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Searches palette `k` for a coloring that satisfies `quantity`:
/// hints, then probes, then pruned exhaustive enumeration.
fn try_palette(
    g: &Graph,
    k: usize,
    quantity: Quantity,
    opts: &SolverOptions,
) -> Result<Option<EdgeColoring>> {
    let m = g.edge_count();
    for hint in &opts.hints {
        if hint.edge_count() != m || hint.palette_size() > k {
            continue;
        }
        match checked(g, hint, quantity, &opts.check) {
            Ok(true) => return Ok(Some(hint.clone())),
            Ok(false) => {}
            Err(Error::BudgetExceeded(_)) => {} // hint indeterminate; ignore it
            Err(e) => return Err(e),
        }
    }
    let space = leaf_estimate(k, m);
    if space > opts.probe_attempts as u128 && m > 0 {
        let mut rng =
            ChaCha8Rng::seed_from_u64(opts.seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        for _ in 0..opts.probe_attempts {
            let colors: Vec<usize> = (0..m).map(|_| rng.random_range(1..=k)).collect();
            let c = EdgeColoring::new(k, colors)?;
            match checked(g, &c, quantity, &opts.check) {
                Ok(true) => return Ok(Some(c)),
                Ok(false) => {}
                Err(Error::BudgetExceeded(_)) => {} // probe indeterminate; ignore it
                Err(e) => return Err(e),
            }
        }
    }
    if space > opts.max_leaf_checks as u128 {
        return Err(Error::BudgetExceeded(format!(
            "palette {k} over {m} edges needs up to {space} colorings (cap {})",
            opts.max_leaf_checks
        )));
    }
    if m == 0 {
        return Ok(Some(EdgeColoring::new(k, Vec::new())?));
    }
    let mut colors = vec![0usize; m];
    colors[0] = 1;
    let mut enumeration = Enumeration {
        g,
        k,
        quantity,
        check: opts.check,
        colors,
        leaves: 0,
        max_leaves: opts.max_leaf_checks,
    };
    enumeration.run(1, 1)
}

/// Exact proper connection number with a verifying coloring.
pub fn pc_exact_opts(g: &Graph, opts: &SolverOptions) -> Result<PcCertificate> {
    if !g.is_connected() {
        return Err(Error::InvalidParameter(
            "pc is defined for connected graphs only".into(),
        ));
    }
    let m = g.edge_count();
    if g.is_complete() {
        // one color suffices exactly for complete graphs
        return Ok(PcCertificate {
            value: Some(1),
            certificate: Some(EdgeColoring::monochrome(m)),
            method: Method::Exhaustive,
            quantity: Quantity::Pc,
        });
    }
    let lower = 2.max(pendant_lower_bound(g));
    let k_max = opts.k_max.unwrap_or(m).max(lower);
    for k in lower..=k_max {
        if let Some(c) = try_palette(g, k, Quantity::Pc, opts)? {
            return Ok(PcCertificate {
                value: Some(k),
                certificate: Some(c),
                method: Method::Exhaustive,
                quantity: Quantity::Pc,
            });
        }
    }
    Err(Error::PaletteExhausted { k_max })
}

pub fn pc_exact(g: &Graph) -> Result<PcCertificate> {
    pc_exact_opts(g, &SolverOptions::default())
}

/// Exact odd-even proper connection number. Bipartite graphs are infinite
/// immediately (every pair is joined by paths of a single parity). For the
/// rest, the all-distinct coloring is a structural oracle: some coloring
/// works iff it does, because any proper path or properly colored cycle is
/// in particular a simple path or cycle, and the all-distinct coloring
/// makes every simple path and cycle proper.
pub fn oepc_exact_opts(g: &Graph, opts: &SolverOptions) -> Result<PcCertificate> {
    if !g.is_connected() {
        return Err(Error::InvalidParameter(
            "oepc is defined for connected graphs only".into(),
        ));
    }
    let infinite = PcCertificate {
        value: None,
        certificate: None,
        method: Method::Exhaustive,
        quantity: Quantity::Oepc,
    };
    if g.bipartition().valid {
        return Ok(infinite);
    }
    let m = g.edge_count();
    let rainbow = EdgeColoring::rainbow(m);
    if !is_odd_even_proper_opts(g, &rainbow, &opts.check)?.connected {
        return Ok(infinite);
    }
    let k_max = opts.k_max.unwrap_or(m).max(2);
    for k in 2..=k_max {
        if let Some(c) = try_palette(g, k, Quantity::Oepc, opts)? {
            return Ok(PcCertificate {
                value: Some(k),
                certificate: Some(c),
                method: Method::Exhaustive,
                quantity: Quantity::Oepc,
            });
        }
    }
    Err(Error::PaletteExhausted { k_max })
}

pub fn oepc_exact(g: &Graph) -> Result<PcCertificate> {
    oepc_exact_opts(g, &SolverOptions::default())
}

/// The edge split into odd-cycle edges and the rest, with the nontrivial
/// components of both spanning subgraphs.
#[derive(Debug, Clone)]
pub struct OddCycleDecomposition {
    /// Edges lying on some odd cycle (sorted edge indices).
    pub odd_edges: Vec<usize>,
    /// The complement: bridge-like edges on no odd cycle.
    pub bridge_like_edges: Vec<usize>,
    /// Components of the odd-edge spanning subgraph with >= 2 vertices.
    pub o_components: Vec<InducedSubgraph>,
    /// Components of the bridge-like spanning subgraph with >= 2 vertices.
    pub b_components: Vec<InducedSubgraph>,
}

/// Splits the edge set by the odd-cycle criterion: an edge lies on an odd
/// cycle iff its block (biconnected component) is nonbipartite, since any
/// cycle stays inside one block and a 2-connected nonbipartite subgraph
/// threads an odd cycle through each of its edges.
pub fn odd_cycle_decomposition(g: &Graph) -> OddCycleDecomposition {
    let blocks = g.blocks();
    let mut odd_edges = Vec::new();
    let mut bridge_like_edges = Vec::new();
    for block in &blocks.blocks {
        let vertices: Vec<usize> = block
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        let sub = g.subgraph(&vertices, block);
        if sub.graph.bipartition().valid {
            bridge_like_edges.extend_from_slice(block);
        } else {
            odd_edges.extend_from_slice(block);
        }
    }
    odd_edges.sort_unstable();
    bridge_like_edges.sort_unstable();
    let o_components = g.edge_subset_components(&odd_edges);
    let b_components = g.edge_subset_components(&bridge_like_edges);
    OddCycleDecomposition {
        odd_edges,
        bridge_like_edges,
        o_components,
        b_components,
    }
}

/// Brute-force reference for the decomposition: enumerates every simple
/// cycle through edge `e` and reports whether one has odd length. Guarded
/// to graphs with at most 10 vertices.
pub fn edge_on_odd_cycle_oracle(g: &Graph, e: usize) -> Result<bool> {
    if g.vertex_count() > 10 {
        return Err(Error::InvalidParameter(
            "odd-cycle oracle is limited to 10 vertices".into(),
        ));
    }
    if e >= g.edge_count() {
        return Err(Error::InvalidParameter(format!("edge {e} out of range")));
    }
    let (u, v) = g.endpoints(e);
    // search simple v..u paths avoiding e itself; with path length L the
    // cycle through e has L + 1 edges and needs L >= 2 and L + 1 odd
    fn dfs(g: &Graph, current: usize, target: usize, skip: usize, len: usize, visited: &mut Vec<bool>) -> bool {
        for &(x, f) in g.neighbors(current) {
            if f == skip {
                continue;
            }
            if x == target {
                if len + 1 >= 2 && (len + 2) % 2 == 1 {
                    return true;
                }
                continue;
            }
            if visited[x] {
                continue;
            }
            visited[x] = true;
            if dfs(g, x, target, skip, len + 1, visited) {
                visited[x] = false;
                return true;
            }
            visited[x] = false;
        }
        false
    }
    let mut visited = vec![false; g.vertex_count()];
    visited[v] = true;
    Ok(dfs(g, v, u, e, 0, &mut visited))
}

/// Sum of exact oepc over the odd components.
pub fn o_value_opts(g: &Graph, opts: &SolverOptions) -> Result<usize> {
    let decomp = odd_cycle_decomposition(g);
    let mut total = 0;
    for comp in &decomp.o_components {
        let cert = oepc_exact_opts(&comp.graph, opts)?;
        total += cert.value.ok_or_else(|| {
            Error::InvalidParameter("odd component admits no odd-even proper coloring".into())
        })?;
    }
    Ok(total)
}

pub fn o_value(g: &Graph) -> Result<usize> {
    o_value_opts(g, &SolverOptions::default())
}

/// Sum of exact pc over the bridge-like components.
pub fn b_value_opts(g: &Graph, opts: &SolverOptions) -> Result<usize> {
    let decomp = odd_cycle_decomposition(g);
    let mut total = 0;
    for comp in &decomp.b_components {
        total += pc_exact_opts(&comp.graph, opts)?
            .value
            .expect("pc of a connected component is finite");
    }
    Ok(total)
}

pub fn b_value(g: &Graph) -> Result<usize> {
    b_value_opts(g, &SolverOptions::default())
}

/// Per-component optimal colorings of the odd-cycle decomposition with
/// pairwise disjoint palettes: odd components first, then bridge-like ones.
/// `edge_colors[e]` is the combined color of host edge `e`; the total
/// palette is `o_total + b_total`.
#[derive(Debug, Clone)]
pub struct DecompositionColorings {
    pub decomposition: OddCycleDecomposition,
    pub edge_colors: Vec<usize>,
    pub o_total: usize,
    pub b_total: usize,
}

impl DecompositionColorings {
    pub fn total_palette(&self) -> usize {
        self.o_total + self.b_total
    }

    /// Runs the exact solvers on every component and offsets the palettes.
    pub fn compute(g: &Graph, opts: &SolverOptions) -> Result<Self> {
        let decomposition = odd_cycle_decomposition(g);
        let mut edge_colors = vec![0usize; g.edge_count()];
        let mut offset = 0usize;
        for comp in &decomposition.o_components {
            let cert = oepc_exact_opts(&comp.graph, opts)?;
            let value = cert.value.ok_or_else(|| {
                Error::InvalidParameter("odd component admits no odd-even proper coloring".into())
            })?;
            let coloring = cert.certificate.expect("finite value carries a coloring");
            for (local, &host) in comp.edge_ids.iter().enumerate() {
                edge_colors[host] = offset + coloring.color(local);
            }
            offset += value;
        }
        let o_total = offset;
        for comp in &decomposition.b_components {
            let cert = pc_exact_opts(&comp.graph, opts)?;
            let value = cert.value.expect("pc of a connected component is finite");
            let coloring = cert.certificate.expect("finite value carries a coloring");
            for (local, &host) in comp.edge_ids.iter().enumerate() {
                edge_colors[host] = offset + coloring.color(local);
            }
            offset += value;
        }
        debug_assert!(edge_colors.iter().all(|&c| c > 0));
        Ok(DecompositionColorings {
            decomposition,
            edge_colors,
            o_total,
            b_total: offset - o_total,
        })
    }
}

/// Factor graphs recovered from a product for bound computations. The
/// g-fiber over h = 0 and the h-fiber over g = 0 induce exact copies of the
/// factors for the cartesian, strong, and lexicographic products; direct
/// products have edgeless fibers, so no hints are recoverable.
#[derive(Debug, Clone)]
pub struct ProductHints {
    pub kind: ProductKind,
    pub factor_g: Graph,
    pub factor_h: Graph,
}

impl ProductHints {
    pub fn from_product(p: &ProductGraph) -> Option<Self> {
        if p.kind == ProductKind::Direct {
            return None;
        }
        let mut g_edges = Vec::new();
        for a in 0..p.n_g {
            for b in a + 1..p.n_g {
                if p.graph.are_adjacent(p.index_of(a, 0), p.index_of(b, 0)) {
                    g_edges.push((a, b));
                }
            }
        }
        let mut h_edges = Vec::new();
        for a in 0..p.n_h {
            for b in a + 1..p.n_h {
                if p.graph.are_adjacent(p.index_of(0, a), p.index_of(0, b)) {
                    h_edges.push((a, b));
                }
            }
        }
        Some(ProductHints {
            kind: p.kind,
            factor_g: Graph::from_edges(p.n_g, g_edges).ok()?,
            factor_h: Graph::from_edges(p.n_h, h_edges).ok()?,
        })
    }
}

fn factor_pc(g: &Graph, opts: &SolverOptions) -> Option<usize> {
    if !g.is_connected() {
        return None;
    }
    let mut factor_opts = opts.clone();
    factor_opts.hints.clear();
    pc_exact_opts(g, &factor_opts).ok().and_then(|c| c.value)
}

/// Palette guaranteed by the product coloring schemes, given the factor pc
/// values that could be computed. `None` when no scheme applies.
fn scheme_palette(kind: ProductKind, n_g: usize, n_h: usize, pc_g: Option<usize>, pc_h: Option<usize>) -> Option<usize> {
    if n_g == 1 {
        return pc_h; // K1 * H is H itself
    }
    if n_h == 1 {
        return pc_g;
    }
    match kind {
        ProductKind::Cartesian | ProductKind::Strong => {
            let from_g = pc_g.map(|v| v + 1);
            let from_h = pc_h.map(|v| v + 1);
            match (from_g, from_h) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, None) => a,
                (None, b) => b,
            }
        }
        ProductKind::Lexicographic => match (pc_g, pc_h) {
            (Some(1), Some(1)) => Some(1),
            (Some(1), _) => Some(2),
            (_, Some(1)) => Some(2),
            (Some(a), Some(b)) if a > b => Some(b),
            (Some(a), Some(b)) if a < b => Some(a + 1),
            (Some(a), Some(_)) => Some(a),
            _ => None,
        },
        ProductKind::Direct => None,
    }
}

/// Sound lower and upper bounds: lower is 1 exactly for complete graphs,
/// otherwise at least 2 and at least the pendant-spoke count; upper is the
/// best of the greedy proper edge coloring and any product scheme palette
/// available from the hints.
pub fn pc_bounds_opts(g: &Graph, hints: Option<&ProductHints>, opts: &SolverOptions) -> (usize, usize) {
    let lower = if g.is_complete() {
        1
    } else {
        2.max(pendant_lower_bound(g))
    };
    let mut upper = crate::coloring::greedy_proper_edge_coloring(g).palette_size();
    if let Some(h) = hints {
        let pc_g = factor_pc(&h.factor_g, opts);
        let pc_h = factor_pc(&h.factor_h, opts);
        if let Some(p) = scheme_palette(
            h.kind,
            h.factor_g.vertex_count(),
            h.factor_h.vertex_count(),
            pc_g,
            pc_h,
        ) {
            upper = upper.min(p);
        }
    }
    (lower, upper.max(lower.min(upper)))
}

pub fn pc_bounds(g: &Graph, hints: Option<&ProductHints>) -> (usize, usize) {
    pc_bounds_opts(g, hints, &SolverOptions::default())
}
