//! Simple undirected graphs with dense vertex indices and stable edge indices.
//!
//! Vertices are `0..n`; edges keep their insertion order and are addressed by
//! index everywhere else in the crate (colorings are per-edge-index vectors).
//! Graphs are immutable after construction and all queries are read-only.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Simple undirected graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per-vertex list of (neighbor, edge index).
    adj: Vec<Vec<(usize, usize)>>,
}

/// Attempted two-sided vertex partition. `valid` is true when every edge
/// joins side 0 to side 1; `side` is always filled (componentwise BFS
/// 2-coloring) but only meaningful when `valid`.
#[derive(Debug, Clone)]
pub struct Bipartition {
    pub side: Vec<u8>,
    pub valid: bool,
}

/// Shortest even- and odd-length walk distances between a vertex pair.
/// `None` means no walk of that parity exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityDistances {
    pub even: Option<usize>,
    pub odd: Option<usize>,
}

/// Biconnected components as a partition of the edge set. A block is a
/// bridge exactly when it consists of a single edge; every block with two
/// or more edges is 2-connected as a subgraph.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Edge-index sets, one per block.
    pub blocks: Vec<Vec<usize>>,
    /// `bridges[i]` is true when `blocks[i]` is a single bridge edge.
    pub bridges: Vec<bool>,
}

/// A subgraph together with the maps back into its host graph.
/// `vertex_ids[i]` is the host vertex behind local vertex `i`, and
/// `edge_ids[e]` the host edge behind local edge `e` (host edge order is
/// preserved).
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertex_ids: Vec<usize>,
    pub edge_ids: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity and bounds.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        };
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at {u}")));
        }
        if self.edge_between(u, v).is_some() {
            return Err(Error::InvalidParameter(format!("duplicate edge ({u}, {v})")));
        }
        let idx = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, idx));
        self.adj[v].push((u, idx));
        Ok(idx)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge endpoints in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// (neighbor, edge index) pairs incident to `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Index of the edge joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Length of a shortest `u`-`v` path, `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            for &(x, _) in &self.adj[w] {
                if dist[x] == usize::MAX {
                    dist[x] = dist[w] + 1;
                    if x == v {
                        return Some(dist[x]);
                    }
                    queue.push_back(x);
                }
            }
        }
        None
    }

    /// Single-source shortest path lengths by BFS.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            let dw = dist[w].unwrap();
            for &(x, _) in &self.adj[w] {
                if dist[x].is_none() {
                    dist[x] = Some(dw + 1);
                    queue.push_back(x);
                }
            }
        }
        dist
    }

    /// Maximum pairwise distance; `None` when the graph is disconnected.
    /// Graphs with fewer than two vertices have diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.distances_from(u) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return None,
                }
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.distances_from(0).iter().all(|d| d.is_some())
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            label[start] = id;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &(x, _) in &self.adj[w] {
                    if label[x] == usize::MAX {
                        label[x] = id;
                        comp.push(x);
                        queue.push_back(x);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Componentwise BFS 2-coloring; `valid` iff no edge joins equal sides.
    pub fn bipartition(&self) -> Bipartition {
        let mut side = vec![2u8; self.n];
        let mut valid = true;
        for start in 0..self.n {
            if side[start] != 2 {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &(x, _) in &self.adj[w] {
                    if side[x] == 2 {
                        side[x] = 1 - side[w];
                        queue.push_back(x);
                    } else if side[x] == side[w] {
                        valid = false;
                    }
                }
            }
        }
        Bipartition { side, valid }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().valid
    }

    /// Shortest even and odd walk lengths from `u` to `v`, by BFS over the
    /// doubled state graph (vertex, parity). Walks may repeat vertices and
    /// edges, so `odd` for `u == v` is the length of a shortest odd closed
    /// walk through `u` (`None` exactly when `u`'s component is bipartite).
    pub fn parity_distances(&self, u: usize, v: usize) -> ParityDistances {
        assert!(u < self.n && v < self.n, "vertex out of range");
        let mut dist = vec![[usize::MAX; 2]; self.n];
        dist[u][0] = 0;
        let mut queue = VecDeque::from([(u, 0usize)]);
        while let Some((w, p)) = queue.pop_front() {
            let d = dist[w][p];
            for &(x, _) in &self.adj[w] {
                let q = 1 - p;
                if dist[x][q] == usize::MAX {
                    dist[x][q] = d + 1;
                    queue.push_back((x, q));
                }
            }
        }
        let lift = |d: usize| if d == usize::MAX { None } else { Some(d) };
        ParityDistances {
            even: lift(dist[v][0]),
            odd: lift(dist[v][1]),
        }
    }

    /// Biconnected components by the iterative low-point algorithm. Two
    /// edges share a block iff some cycle contains both.
    pub fn blocks(&self) -> BlockDecomposition {
        const NONE: usize = usize::MAX;
        let n = self.n;
        let mut disc = vec![NONE; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();

        // frame: (vertex, parent edge index, adjacency cursor)
        struct Frame {
            v: usize,
            parent_edge: usize,
            cursor: usize,
        }

        for root in 0..n {
            if disc[root] != NONE {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut frames = vec![Frame {
                v: root,
                parent_edge: NONE,
                cursor: 0,
            }];
            while let Some(top) = frames.last_mut() {
                let v = top.v;
                if top.cursor < self.adj[v].len() {
                    let (w, e) = self.adj[v][top.cursor];
                    top.cursor += 1;
                    if e == top.parent_edge {
                        continue;
                    }
                    if disc[w] == NONE {
                        edge_stack.push(e);
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        frames.push(Frame {
                            v: w,
                            parent_edge: e,
                            cursor: 0,
                        });
                    } else if disc[w] < disc[v] {
                        // back edge to an ancestor; pushed exactly once
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let parent_edge = top.parent_edge;
                    frames.pop();
                    if let Some(parent) = frames.last_mut() {
                        let p = parent.v;
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == parent_edge {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        let bridges = blocks.iter().map(|b| b.len() == 1).collect();
        BlockDecomposition { blocks, bridges }
    }

    /// Subgraph spanned by a vertex set and a subset of the edges among them.
    /// Vertices are renumbered in sorted order; edge order follows host order.
    pub fn subgraph(&self, vertices: &[usize], edge_ids: &[usize]) -> InducedSubgraph {
        let mut vertex_ids: Vec<usize> = vertices.to_vec();
        vertex_ids.sort_unstable();
        vertex_ids.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertex_ids.iter().enumerate() {
            local[v] = i;
        }
        let mut edge_ids: Vec<usize> = edge_ids.to_vec();
        edge_ids.sort_unstable();
        let edges: Vec<(usize, usize)> = edge_ids
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (local[u], local[v])
            })
            .collect();
        let graph = Graph::from_edges(vertex_ids.len(), edges)
            .expect("host edges stay simple under renumbering");
        InducedSubgraph {
            graph,
            vertex_ids,
            edge_ids,
        }
    }

    /// Components of the spanning subgraph (V, `edge_ids`), keeping only
    /// components with at least two vertices.
    pub fn edge_subset_components(&self, edge_ids: &[usize]) -> Vec<InducedSubgraph> {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &e in edge_ids {
            let (u, v) = self.edges[e];
            incident[u].push(e);
            incident[v].push(e);
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] || incident[start].is_empty() {
                continue;
            }
            seen[start] = true;
            let mut verts = vec![start];
            let mut comp_edges = Vec::new();
            let mut queue = VecDeque::from([start]);
            let mut edge_seen = vec![false; self.edges.len()];
            while let Some(w) = queue.pop_front() {
                for &e in &incident[w] {
                    if edge_seen[e] {
                        continue;
                    }
                    edge_seen[e] = true;
                    comp_edges.push(e);
                    let (a, b) = self.edges[e];
                    let x = if a == w { b } else { a };
                    if !seen[x] {
                        seen[x] = true;
                        verts.push(x);
                        queue.push_back(x);
                    }
                }
            }
            out.push(self.subgraph(&verts, &comp_edges));
        }
        out
    }
}

/// Path on `n` vertices, numbered along the path.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least 1 vertex".into()));
    }
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}

/// Cycle on `n >= 3` vertices.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs at least 3 vertices".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete graph on `n >= 1` vertices.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs at least 1 vertex".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star with hub 0 and `m >= 1` leaves.
pub fn make_star(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter("star needs at least 1 leaf".into()));
    }
    Graph::from_edges(m + 1, (1..=m).map(|v| (0, v)))
}

/// The Petersen graph: outer 5-cycle 0..5, spokes, inner pentagram 5..10.
pub fn make_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("petersen edges are simple")
}

/// Hypercube of dimension `d` on `2^d` vertices (bit-adjacency).
pub fn make_hypercube(d: usize) -> Result<Graph> {
    if d > 20 {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension {d} too large"
        )));
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(d * n / 2);
    for u in 0..n {
        for b in 0..d {
            if u & (1 << b) == 0 {
                edges.push((u, u | (1 << b)));
            }
        }
    }
    Graph::from_edges(n, edges)
}
