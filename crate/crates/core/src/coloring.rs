//! Edge colorings and the exact decision procedures for proper-path
//! connectivity and odd-even proper connectivity.
//!
//! Paths are the normative semantics throughout: a pair is connected when a
//! *simple* path joins it whose consecutive edges differ in color. Walks
//! (which may repeat vertices) are decidable in polynomial time by BFS over
//! (vertex, last color) states and serve as a sound negative filter: if no
//! proper walk exists, no proper path can. The distinction is real — see the
//! gadget in the tests where a proper walk exists but every simple path
//! repeats a color.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Total assignment of palette colors (1-based) to the edges of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    palette_size: usize,
}

impl EdgeColoring {
    /// Validates that every color lies in `1..=palette_size`.
    pub fn new(palette_size: usize, colors: Vec<usize>) -> Result<Self> {
        for (e, &c) in colors.iter().enumerate() {
            if c == 0 || c > palette_size {
                return Err(Error::InvalidColoring(format!(
                    "edge {e} has color {c}, outside 1..={palette_size}"
                )));
            }
        }
        Ok(EdgeColoring { colors, palette_size })
    }

    /// One color for every edge.
    pub fn monochrome(edge_count: usize) -> Self {
        EdgeColoring {
            colors: vec![1; edge_count],
            palette_size: 1,
        }
    }

    /// All edges distinct; any path is proper under this coloring.
    pub fn rainbow(edge_count: usize) -> Self {
        EdgeColoring {
            colors: (1..=edge_count).collect(),
            palette_size: edge_count.max(1),
        }
    }

    pub fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    /// Same colors under a wider palette.
    pub fn widened(&self, palette_size: usize) -> Result<Self> {
        if palette_size < self.palette_size {
            return Err(Error::InvalidColoring(format!(
                "cannot narrow palette {} to {palette_size}",
                self.palette_size
            )));
        }
        Ok(EdgeColoring {
            colors: self.colors.clone(),
            palette_size,
        })
    }
}

/// Walk/path length parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn matches(self, len: usize) -> bool {
        (len % 2 == 0) == (self == Parity::Even)
    }
}

/// Outcome of an all-pairs connectivity check. `failing_pair` is the
/// lexicographically smallest failing pair; `pairs_checked` counts pairs in
/// lexicographic order up to and including the failing one (all pairs when
/// connected), so the report is identical however the work was scheduled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub failing_pair: Option<(usize, usize)>,
    pub pairs_checked: usize,
}

/// Knobs for the exact searches.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Backtracking-node cap per vertex pair; exceeding it is an explicit
    /// error, never a silent wrong answer.
    pub node_budget: u64,
    /// Fan the all-pairs checks out to rayon workers. The report is
    /// identical for any worker count.
    pub parallel: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            node_budget: 10_000_000,
            parallel: false,
        }
    }
}

fn validate(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.edge_count() != g.edge_count() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} edges but the graph has {}",
            c.edge_count(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// True iff some walk from `u` to `v` (of the requested parity, if any) has
/// consecutive edges of distinct colors. BFS over (vertex, last color,
/// parity) states; the empty walk connects `u` to itself with even length.
pub fn proper_walk_exists(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
    parity: Option<Parity>,
) -> bool {
    debug_assert_eq!(c.edge_count(), g.edge_count());
    if u == v && parity != Some(Parity::Odd) {
        return true;
    }
    let k = c.palette_size();
    let n = g.vertex_count();
    // state (vertex, last color 0..=k, parity); color 0 = no edge used yet
    let idx = |w: usize, lc: usize, p: usize| (w * (k + 1) + lc) * 2 + p;
    let mut seen = vec![false; n * (k + 1) * 2];
    let mut queue = std::collections::VecDeque::new();
    seen[idx(u, 0, 0)] = true;
    queue.push_back((u, 0usize, 0usize));
    while let Some((w, lc, p)) = queue.pop_front() {
        for &(x, e) in g.neighbors(w) {
            let col = c.color(e);
            if col == lc {
                continue;
            }
            let q = 1 - p;
            if x == v {
                let len_ok = match parity {
                    None => true,
                    Some(Parity::Even) => q == 0,
                    Some(Parity::Odd) => q == 1,
                };
                if len_ok {
                    return true;
                }
            }
            if !seen[idx(x, col, q)] {
                seen[idx(x, col, q)] = true;
                queue.push_back((x, col, q));
            }
        }
    }
    false
}

struct PathSearch<'a> {
    g: &'a Graph,
    c: &'a EdgeColoring,
    target: usize,
    parity: Option<Parity>,
    visited: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl PathSearch<'_> {
    fn charge(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "path search exceeded {} nodes",
                self.budget
            )));
        }
        Ok(())
    }

    fn dfs(&mut self, current: usize, last_color: usize, len: usize) -> Result<bool> {
        self.charge()?;
        if current == self.target {
            return Ok(self.parity.map_or(true, |p| p.matches(len)));
        }
        for i in 0..self.g.neighbors(current).len() {
            let (x, e) = self.g.neighbors(current)[i];
            if self.visited[x] {
                continue;
            }
            let col = self.c.color(e);
            if col == last_color {
                continue;
            }
            self.visited[x] = true;
            let hit = self.dfs(x, col, len + 1)?;
            self.visited[x] = false;
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exact decision: does a simple `u`-`v` path exist whose consecutive edges
/// differ in color (and whose length has `parity`, when given)? Uses the
/// walk check as an admissible negative filter, then backtracks over
/// (vertex, last color, visited set) under the node budget.
///
/// For `u == v` the even answer is the empty path; the odd answer asks for a
/// properly colored odd cycle through `u` (closed-path semantics: the two
/// cycle edges meeting at every cycle vertex, including `u`, must differ).
pub fn proper_path_exists_opts(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
    parity: Option<Parity>,
    opts: &CheckOptions,
) -> Result<bool> {
    validate(g, c)?;
    assert!(u < g.vertex_count() && v < g.vertex_count(), "vertex out of range");
    if u == v {
        return match parity {
            None | Some(Parity::Even) => Ok(true),
            Some(Parity::Odd) => proper_odd_cycle_exists(g, c, u, opts),
        };
    }
    if !proper_walk_exists(g, c, u, v, parity) {
        return Ok(false);
    }
    let mut search = PathSearch {
        g,
        c,
        target: v,
        parity,
        visited: vec![false; g.vertex_count()],
        nodes: 0,
        budget: opts.node_budget,
    };
    search.visited[u] = true;
    search.dfs(u, 0, 0)
}

/// `proper_path_exists_opts` with default options and no parity constraint.
pub fn proper_path_exists(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Result<bool> {
    proper_path_exists_opts(g, c, u, v, None, &CheckOptions::default())
}

struct CycleSearch<'a> {
    g: &'a Graph,
    c: &'a EdgeColoring,
    origin: usize,
    first_color: usize,
    visited: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl CycleSearch<'_> {
    fn dfs(&mut self, current: usize, last_color: usize, len: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "cycle search exceeded {} nodes",
                self.budget
            )));
        }
        // try to close the cycle: needs length >= 3, odd total, and the
        // closing edge proper against both its cyclic neighbors
        if len >= 2 {
            if let Some(e) = self.g.edge_between(current, self.origin) {
                let col = self.c.color(e);
                if (len + 1) % 2 == 1 && col != last_color && col != self.first_color {
                    return Ok(true);
                }
            }
        }
        for i in 0..self.g.neighbors(current).len() {
            let (x, e) = self.g.neighbors(current)[i];
            if x == self.origin || self.visited[x] {
                continue;
            }
            let col = self.c.color(e);
            if col == last_color {
                continue;
            }
            self.visited[x] = true;
            let hit = self.dfs(x, col, len + 1)?;
            self.visited[x] = false;
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Is there a properly colored odd cycle through `u`? All cyclically
/// consecutive edge pairs must differ, including the pair meeting at `u`.
fn proper_odd_cycle_exists(g: &Graph, c: &EdgeColoring, u: usize, opts: &CheckOptions) -> Result<bool> {
    // odd cycles only exist in nonbipartite components; cheap short-circuit
    if g.parity_distances(u, u).odd.is_none() {
        return Ok(false);
    }
    let mut budget = opts.node_budget;
    for &(w, e) in g.neighbors(u) {
        let mut search = CycleSearch {
            g,
            c,
            origin: u,
            first_color: c.color(e),
            visited: vec![false; g.vertex_count()],
            nodes: 0,
            budget,
        };
        search.visited[w] = true;
        if search.dfs(w, c.color(e), 1)? {
            return Ok(true);
        }
        budget = budget.saturating_sub(search.nodes);
        if budget == 0 {
            return Err(Error::BudgetExceeded(
                "cycle search exceeded its node budget".into(),
            ));
        }
    }
    Ok(false)
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

enum PairOutcome {
    Ok,
    Failed,
    Err(Error),
}

fn run_pairs<F>(pairs: &[(usize, usize)], parallel: bool, check: F) -> Result<ConnectivityReport>
where
    F: Fn((usize, usize)) -> Result<bool> + Sync,
{
    let outcome = |pair: (usize, usize)| match check(pair) {
        Ok(true) => PairOutcome::Ok,
        Ok(false) => PairOutcome::Failed,
        Err(e) => PairOutcome::Err(e),
    };
    let first_bad = if parallel {
        pairs
            .par_iter()
            .map(|&p| (p, outcome(p)))
            .find_first(|(_, o)| !matches!(o, PairOutcome::Ok))
    } else {
        pairs
            .iter()
            .map(|&p| (p, outcome(p)))
            .find(|(_, o)| !matches!(o, PairOutcome::Ok))
    };
    match first_bad {
        None => Ok(ConnectivityReport {
            connected: true,
            failing_pair: None,
            pairs_checked: pairs.len(),
        }),
        Some((pair, PairOutcome::Failed)) => {
            let rank = pairs.iter().position(|&p| p == pair).unwrap();
            Ok(ConnectivityReport {
                connected: false,
                failing_pair: Some(pair),
                pairs_checked: rank + 1,
            })
        }
        Some((_, PairOutcome::Err(e))) => Err(e),
        Some((_, PairOutcome::Ok)) => unreachable!(),
    }
}

/// All-pairs conjunction of `proper_path_exists`, reporting the first
/// failing pair in lexicographic order.
pub fn is_proper_connected_opts(
    g: &Graph,
    c: &EdgeColoring,
    opts: &CheckOptions,
) -> Result<ConnectivityReport> {
    validate(g, c)?;
    let pairs = pair_list(g.vertex_count());
    run_pairs(&pairs, opts.parallel, |(u, v)| {
        proper_path_exists_opts(g, c, u, v, None, opts)
    })
}

pub fn is_proper_connected(g: &Graph, c: &EdgeColoring) -> Result<ConnectivityReport> {
    is_proper_connected_opts(g, c, &CheckOptions::default())
}

/// Odd-even proper connectivity: every pair, *including* `u == u`, must be
/// joined by proper paths of both parities. The even `u`-`u` case is the
/// empty path; the odd one needs a properly colored odd cycle through `u`.
/// Bipartite graphs always fail (only one parity of path joins any pair).
pub fn is_odd_even_proper_opts(
    g: &Graph,
    c: &EdgeColoring,
    opts: &CheckOptions,
) -> Result<ConnectivityReport> {
    validate(g, c)?;
    let n = g.vertex_count();
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for u in 0..n {
        for v in u..n {
            pairs.push((u, v));
        }
    }
    run_pairs(&pairs, opts.parallel, |(u, v)| {
        Ok(proper_path_exists_opts(g, c, u, v, Some(Parity::Even), opts)?
            && proper_path_exists_opts(g, c, u, v, Some(Parity::Odd), opts)?)
    })
}

pub fn is_odd_even_proper(g: &Graph, c: &EdgeColoring) -> Result<ConnectivityReport> {
    is_odd_even_proper_opts(g, c, &CheckOptions::default())
}

/// Greedy proper edge coloring in edge-index order: each edge takes the
/// smallest color unused on edges sharing an endpoint. Adjacent edges end
/// up distinct, so every path is proper; the palette is at most 2Δ-1.
pub fn greedy_proper_edge_coloring(g: &Graph) -> EdgeColoring {
    let mut colors = vec![0usize; g.edge_count()];
    let mut palette = 1;
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let mut used: Vec<usize> = g
            .neighbors(u)
            .iter()
            .chain(g.neighbors(v).iter())
            .filter(|&&(_, f)| f != e && colors[f] != 0)
            .map(|&(_, f)| colors[f])
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut c = 1;
        for ex in used {
            if ex == c {
                c += 1;
            } else if ex > c {
                break;
            }
        }
        colors[e] = c;
        palette = palette.max(c);
    }
    EdgeColoring::new(palette, colors).expect("greedy colors are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path, make_star, Graph};

    /// Exhaustive simple-path oracle, independent of the search code.
    fn oracle_path_exists(
        g: &Graph,
        c: &EdgeColoring,
        u: usize,
        v: usize,
        parity: Option<Parity>,
    ) -> bool {
        fn go(
            g: &Graph,
            c: &EdgeColoring,
            current: usize,
            target: usize,
            last: usize,
            len: usize,
            visited: &mut Vec<bool>,
            parity: Option<Parity>,
        ) -> bool {
            if current == target {
                match parity {
                    None => return true,
                    Some(Parity::Even) if len % 2 == 0 => return true,
                    Some(Parity::Odd) if len % 2 == 1 => return true,
                    _ => return false,
                }
            }
            for &(x, e) in g.neighbors(current) {
                if visited[x] || c.color(e) == last {
                    continue;
                }
                visited[x] = true;
                if go(g, c, x, target, c.color(e), len + 1, visited, parity) {
                    visited[x] = false;
                    return true;
                }
                visited[x] = false;
            }
            false
        }
        if u == v && parity != Some(Parity::Odd) {
            return true;
        }
        if u == v {
            // enumerate cycles: start along each incident edge
            for &(w, e) in g.neighbors(u) {
                let mut visited = vec![false; g.vertex_count()];
                visited[u] = true;
                visited[w] = true;
                if oracle_cycle(g, c, u, w, c.color(e), c.color(e), 1, &mut visited) {
                    return true;
                }
            }
            return false;
        }
        let mut visited = vec![false; g.vertex_count()];
        visited[u] = true;
        go(g, c, u, v, 0, 0, &mut visited, parity)
    }

    fn oracle_cycle(
        g: &Graph,
        c: &EdgeColoring,
        origin: usize,
        current: usize,
        first: usize,
        last: usize,
        len: usize,
        visited: &mut Vec<bool>,
    ) -> bool {
        if len >= 2 {
            if let Some(e) = g.edge_between(current, origin) {
                let col = c.color(e);
                if (len + 1) % 2 == 1 && col != last && col != first {
                    return true;
                }
            }
        }
        for &(x, e) in g.neighbors(current) {
            if visited[x] || c.color(e) == last {
                continue;
            }
            visited[x] = true;
            if oracle_cycle(g, c, origin, x, first, c.color(e), len + 1, visited) {
                visited[x] = false;
                return true;
            }
            visited[x] = false;
        }
        false
    }

    #[test]
    fn coloring_validation() {
        assert!(EdgeColoring::new(2, vec![1, 2, 1]).is_ok());
        assert!(EdgeColoring::new(2, vec![0, 1]).is_err());
        assert!(EdgeColoring::new(2, vec![3]).is_err());
        let g = make_path(3).unwrap();
        let short = EdgeColoring::monochrome(1);
        assert!(is_proper_connected(&g, &short).is_err());
    }

    #[test]
    fn single_edge_always_proper() {
        let g = make_path(2).unwrap();
        let c = EdgeColoring::monochrome(1);
        assert!(proper_walk_exists(&g, &c, 0, 1, None));
        assert!(proper_path_exists(&g, &c, 0, 1).unwrap());
    }

    #[test]
    fn forced_repeat_blocks_path() {
        let g = make_path(3).unwrap();
        let c = EdgeColoring::monochrome(2);
        assert!(!proper_walk_exists(&g, &c, 0, 2, None));
        assert!(!proper_path_exists(&g, &c, 0, 2).unwrap());
    }

    #[test]
    fn walk_but_no_path_gadget() {
        // u=0, x=1, v=2, y=3, z=4; edges u-x:1, x-v:1, x-y:2, y-z:1, z-x:3.
        // The walk 0-1-3-4-1-2 alternates colors 1,2,1,3,1 but the only
        // simple 0-2 path repeats color 1 at x.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 1)]).unwrap();
        let c = EdgeColoring::new(3, vec![1, 1, 2, 1, 3]).unwrap();
        assert!(proper_walk_exists(&g, &c, 0, 2, None));
        assert!(!proper_path_exists(&g, &c, 0, 2).unwrap());
        assert!(!oracle_path_exists(&g, &c, 0, 2, None));
    }

    #[test]
    fn empty_path_for_equal_endpoints() {
        let g = make_cycle(5).unwrap();
        let c = EdgeColoring::monochrome(5);
        assert!(proper_path_exists(&g, &c, 3, 3).unwrap());
    }

    #[test]
    fn rainbow_connected_graphs_always_pass() {
        for g in [make_path(6).unwrap(), make_cycle(5).unwrap(), make_star(4).unwrap()] {
            let c = EdgeColoring::rainbow(g.edge_count());
            let report = is_proper_connected(&g, &c).unwrap();
            assert!(report.connected);
            assert_eq!(report.pairs_checked, g.vertex_count() * (g.vertex_count() - 1) / 2);
        }
    }

    #[test]
    fn monochrome_iff_complete() {
        let k4 = make_complete(4).unwrap();
        assert!(is_proper_connected(&k4, &EdgeColoring::monochrome(6)).unwrap().connected);
        let p4 = make_path(4).unwrap();
        let report = is_proper_connected(&p4, &EdgeColoring::monochrome(3)).unwrap();
        assert!(!report.connected);
        assert_eq!(report.failing_pair, Some((0, 2)));
    }

    #[test]
    fn star_needs_distinct_spokes() {
        let g = make_star(3).unwrap();
        // two spokes share a color: the two leaves below them fail
        let c = EdgeColoring::new(2, vec![1, 1, 2]).unwrap();
        let report = is_proper_connected(&g, &c).unwrap();
        assert!(!report.connected);
        assert_eq!(report.failing_pair, Some((1, 2)));
        let c = EdgeColoring::new(3, vec![1, 2, 3]).unwrap();
        assert!(is_proper_connected(&g, &c).unwrap().connected);
    }

    #[test]
    fn odd_even_bipartite_always_fails() {
        for g in [make_path(4).unwrap(), make_cycle(6).unwrap()] {
            let rainbow = EdgeColoring::rainbow(g.edge_count());
            assert!(!is_odd_even_proper(&g, &rainbow).unwrap().connected);
        }
    }

    #[test]
    fn odd_even_triangle_rainbow() {
        let k3 = make_complete(3).unwrap();
        let c = EdgeColoring::new(3, vec![1, 2, 3]).unwrap();
        assert!(is_odd_even_proper(&k3, &c).unwrap().connected);
        // every 2-coloring of K3 fails (enumerated)
        for a in 1..=2usize {
            for b in 1..=2usize {
                for d in 1..=2usize {
                    let c = EdgeColoring::new(2, vec![a, b, d]).unwrap();
                    assert!(!is_odd_even_proper(&k3, &c).unwrap().connected);
                }
            }
        }
    }

    #[test]
    fn odd_even_c5_needs_three_colors() {
        let c5 = make_cycle(5).unwrap();
        for mask in 0..(1u32 << 5) {
            let colors: Vec<usize> = (0..5).map(|i| 1 + ((mask >> i) & 1) as usize).collect();
            let c = EdgeColoring::new(2, colors).unwrap();
            assert!(!is_odd_even_proper(&c5, &c).unwrap().connected);
        }
        let c = EdgeColoring::new(3, vec![1, 2, 1, 2, 3]).unwrap();
        assert!(is_odd_even_proper(&c5, &c).unwrap().connected);
    }

    #[test]
    fn walk_filter_is_sound_and_path_matches_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..120 {
            let n = rng.random_range(2..=7usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let k = rng.random_range(1..=3usize);
            let colors: Vec<usize> =
                (0..g.edge_count()).map(|_| rng.random_range(1..=k)).collect();
            let c = EdgeColoring::new(k, colors).unwrap();
            for u in 0..n {
                for v in 0..n {
                    for parity in [None, Some(Parity::Even), Some(Parity::Odd)] {
                        let path = proper_path_exists_opts(
                            &g,
                            &c,
                            u,
                            v,
                            parity,
                            &CheckOptions::default(),
                        )
                        .unwrap();
                        assert_eq!(
                            path,
                            oracle_path_exists(&g, &c, u, v, parity),
                            "n={n} u={u} v={v} parity={parity:?} colors={:?}",
                            c.colors()
                        );
                        // no walk => no path
                        if !proper_walk_exists(&g, &c, u, v, parity) {
                            assert!(!path);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_reports_match_sequential() {
        let g = make_cycle(6).unwrap();
        let c = EdgeColoring::new(2, vec![1, 1, 2, 1, 2, 2]).unwrap();
        let seq = is_proper_connected_opts(&g, &c, &CheckOptions { parallel: false, ..Default::default() }).unwrap();
        let par = is_proper_connected_opts(&g, &c, &CheckOptions { parallel: true, ..Default::default() }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let g = make_cycle(6).unwrap();
        let c = EdgeColoring::rainbow(6);
        let opts = CheckOptions { node_budget: 1, parallel: false };
        // 0-0 odd needs a cycle search that cannot finish in one node
        assert!(matches!(
            proper_path_exists_opts(&g, &c, 0, 3, None, &opts),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn greedy_coloring_is_locally_proper() {
        for g in [
            make_path(4).unwrap(),
            make_complete(3).unwrap(),
            make_star(4).unwrap(),
            make_cycle(7).unwrap(),
        ] {
            let c = greedy_proper_edge_coloring(&g);
            for v in 0..g.vertex_count() {
                let mut seen = Vec::new();
                for &(_, e) in g.neighbors(v) {
                    assert!(!seen.contains(&c.color(e)), "adjacent repeat at {v}");
                    seen.push(c.color(e));
                }
            }
            let max_deg = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap();
            assert!(c.palette_size() <= 2 * max_deg - 1);
        }
        assert_eq!(greedy_proper_edge_coloring(&make_path(4).unwrap()).palette_size(), 2);
        assert_eq!(greedy_proper_edge_coloring(&make_complete(3).unwrap()).palette_size(), 3);
        assert_eq!(greedy_proper_edge_coloring(&make_star(4).unwrap()).palette_size(), 4);
    }
}
