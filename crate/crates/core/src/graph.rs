//! Simple undirected graphs on at most 62 vertices, adjacency held as bit masks.

use std::fmt;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::vertex_set::VertexSet;

/// An edge with canonical endpoint order `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Orders the endpoints; panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v_{}v_{}", self.u + 1, self.v + 1)
    }
}

/// Undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

impl Graph {
    /// Builds a graph from 0-based vertex pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { n, adj })
    }

    /// Trusted constructor used by the enumerator; masks must be symmetric and loop-free.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.iter().enumerate().all(|(u, &m)| m >> u & 1 == 0
            && VertexSet::from_bits_unchecked(adj.len(), m)
                .iter()
                .all(|v| adj[v] >> u & 1 == 1)));
        Graph { n: adj.len(), adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.n, self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.n, self.adj[v] | 1 << v)
    }

    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges in canonical order: by `u`, then by `v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits_unchecked(self.n, self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| Edge { u, v })
        })
    }

    /// Every vertex reachable from `v_1`.
    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// The first vertex not reachable from `v_1`, if any.
    pub fn first_unreachable(&self) -> Option<usize> {
        let all = (1u64 << self.n) - 1;
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        let missing = all & !seen;
        (missing != 0).then(|| missing.trailing_zeros() as usize)
    }

    /// Number of vertices of degree one, `l(G)`.
    pub fn leaf_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    /// Maximum degree `Δ(G)`.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `u ∈ N(v)` with `N[v] ⊆ N[u]`, the lowest-indexed one.
    pub fn maximal_neighbour(&self, v: usize) -> Option<usize> {
        let closed_v = self.adj[v] | 1 << v;
        self.neighbors(v)
            .iter()
            .find(|&u| closed_v & !(self.adj[u] | 1 << u) == 0)
    }

    /// True iff every vertex has a maximal neighbour.
    pub fn is_maximal_neighbour_graph(&self) -> bool {
        (0..self.n).all(|v| self.maximal_neighbour(v).is_some())
    }

    /// Connected with maximum degree at most 2 and exactly `n - 1` edges.
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.max_degree() <= 2 && self.size() + 1 == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let edges: Vec<_> = self.edges().map(|e| (perm[e.u], perm[e.v])).collect();
        Graph::from_edge_list(self.n, &edges)
    }

    /// Edge-list text: first line `n m`, then one 1-based `u v` per line.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.size());
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.u + 1, e.v + 1));
        }
        out
    }

    pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let (a, b) = parse_pair(line)?;
            if a == 0 || b == 0 {
                return Err(Error::Parse(format!("vertex labels are 1-based: `{line}`")));
            }
            edges.push((a - 1, b - 1));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("not a non-negative integer: `{t}`")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers: `{line}`"))),
    }
}

fn require(family: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::BelowFamilyMinimum { family, min, got })
    } else {
        Ok(())
    }
}

/// `P_n`: `v_1 v_2 … v_n`.
pub fn path(n: usize) -> Result<Graph> {
    require("path", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `C_n`: the path plus `v_n v_1`.
pub fn cycle(n: usize) -> Result<Graph> {
    require("cycle", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `S_n` on `n` vertices with centre `v_1`.
pub fn star(n: usize) -> Result<Graph> {
    require("star", 3, n)?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    require("complete", 1, n)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_{r,t}` with parts `{v_1..v_r}` and `{v_{r+1}..v_{r+t}}`.
pub fn complete_bipartite(r: usize, t: usize) -> Result<Graph> {
    require("complete_bipartite", 1, r.min(t))?;
    let edges: Vec<_> = (0..r)
        .flat_map(|u| (r..r + t).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(r + t, &edges)
}

/// The caterpillar `T'_n`, `m = ⌊n/2⌋`: spine `v_1 … v_{n-m+1}` with a pendant
/// `v_{n-m+i}` hung on `v_i` for `2 ≤ i ≤ m`.
pub fn t_prime_tree(n: usize) -> Result<Graph> {
    require("t_prime_tree", 4, n)?;
    let m = n / 2;
    // 1-based labels as drawn, shifted on insertion.
    let mut edges: Vec<(usize, usize)> = (1..=n - m).map(|i| (i, i + 1)).collect();
    edges.extend((2..=m).map(|i| (i, n - m + i)));
    let edges: Vec<_> = edges.into_iter().map(|(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edge_list(n, &edges)
}
