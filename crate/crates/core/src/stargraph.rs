//! Star-graphs of presentations and the special-presentation check.
//!
//! Vertices are the signed generators, indexed by [`Letter::index`]. Each
//! cyclic position `ab` of a relator adds one unit of multiplicity to the
//! unordered pair `{a, b⁻¹}`. Graph-theoretic properties (girth, diameter,
//! degree, bipartiteness) are evaluated on the underlying simple graph.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;
use crate::words::{Letter, Word};

/// Unordered vertex pair stored with the smaller index first.
pub type Edge = (usize, usize);

fn edge(a: Letter, b: Letter) -> Edge {
    let (u, v) = (a.index(), b.index());
    (u.min(v), u.max(v))
}

pub fn vertex_name(rank: usize, v: usize) -> String {
    let l = Letter::from_index(v);
    if rank <= 3 {
        l.short_name().map(String::from).unwrap_or_default()
    } else {
        l.indexed_name()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarGraph {
    rank: usize,
    multiplicity: BTreeMap<Edge, usize>,
}

impl StarGraph {
    pub fn build(p: &Presentation) -> StarGraph {
        let mut multiplicity = BTreeMap::new();
        for r in p.relators() {
            let l = r.letters();
            for i in 0..l.len() {
                let (a, b) = (l[i], l[(i + 1) % l.len()]);
                *multiplicity.entry(edge(a, b.inv())).or_insert(0) += 1;
            }
        }
        StarGraph { rank: p.rank(), multiplicity }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.rank
    }

    pub fn multiplicity(&self) -> &BTreeMap<Edge, usize> {
        &self.multiplicity
    }

    pub fn total_multiplicity(&self) -> usize {
        self.multiplicity.values().sum()
    }

    pub fn simple_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.vertex_count(), self.multiplicity.keys().copied())
    }

    /// Exactly `n²` edges of multiplicity one forming `K_{n,n}`.
    pub fn is_knn(&self, n: usize) -> bool {
        self.multiplicity.len() == n * n
            && self.multiplicity.values().all(|&m| m == 1)
            && self.simple_graph().is_complete_bipartite(n)
    }

    /// Adjacency list, one vertex per line: `x: Y Z X`.
    pub fn to_adjacency_text(&self) -> String {
        let g = self.simple_graph();
        let mut out = String::new();
        for v in 0..g.vertex_count() {
            let nbrs: Vec<String> = g.neighbours(v).map(|u| vertex_name(self.rank, u)).collect();
            let _ = writeln!(out, "{}: {}", vertex_name(self.rank, v), nbrs.join(" "));
        }
        out
    }

    pub fn export(&self) -> GraphExport {
        GraphExport {
            rank: self.rank,
            vertices: (0..self.vertex_count()).map(|v| vertex_name(self.rank, v)).collect(),
            edges: self
                .multiplicity
                .iter()
                .map(|(&(u, v), &m)| ExportEdge {
                    u: vertex_name(self.rank, u),
                    v: vertex_name(self.rank, v),
                    multiplicity: m,
                })
                .collect(),
        }
    }
}

/// Structured form of a star-graph carrying multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<ExportEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportEdge {
    pub u: String,
    pub v: String,
    pub multiplicity: usize,
}

/// Undirected simple graph on `0..n`; loops are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphAnalysis {
    /// `None` for a forest.
    pub girth: Option<usize>,
    /// Diameter of the whole graph, `None` when disconnected.
    pub diameter: Option<usize>,
    pub component_diameters: Vec<usize>,
    pub component_sizes: Vec<usize>,
    pub bipartite: bool,
    pub min_degree: usize,
    pub components: usize,
    pub components_isomorphic: bool,
}

impl SimpleGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> SimpleGraph {
        let mut adj = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        SimpleGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v >= u).map(|&v| (u, v)));
        }
        out
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn bfs(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for root in 0..self.adj.len() {
            if seen[root] {
                continue;
            }
            let comp: Vec<usize> = self
                .bfs(root)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn girth(&self) -> Option<usize> {
        if self.adj.iter().enumerate().any(|(v, n)| n.contains(&v)) {
            return Some(1);
        }
        let mut best: Option<usize> = None;
        for root in 0..self.adj.len() {
            let mut dist = vec![usize::MAX; self.adj.len()];
            let mut parent = vec![usize::MAX; self.adj.len()];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    fn two_colouring(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.adj.len()];
        for root in 0..self.adj.len() {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// Two independent sets of size `n` with every cross pair adjacent.
    pub fn is_complete_bipartite(&self, n: usize) -> bool {
        if self.adj.len() != 2 * n || n == 0 {
            return false;
        }
        let Some(colour) = self.two_colouring() else {
            return false;
        };
        let left: Vec<usize> = (0..2 * n).filter(|&v| colour[v] == 0).collect();
        let right: Vec<usize> = (0..2 * n).filter(|&v| colour[v] == 1).collect();
        left.len() == n
            && right.len() == n
            && left.iter().all(|&u| right.iter().all(|v| self.adj[u].contains(v)))
    }

    fn component_graph(&self, comp: &[usize]) -> UnGraph<(), ()> {
        let mut g = UnGraph::<(), ()>::with_capacity(comp.len(), 0);
        let nodes: Vec<_> = comp.iter().map(|_| g.add_node(())).collect();
        let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for (i, &u) in comp.iter().enumerate() {
            for v in &self.adj[u] {
                let j = local[v];
                if j >= i {
                    g.add_edge(nodes[i], nodes[j], ());
                }
            }
        }
        g
    }

    pub fn analyze(&self) -> GraphAnalysis {
        let comps = self.components();
        let component_diameters: Vec<usize> = comps
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| self.bfs(v).iter().filter_map(|d| *d).max().unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let components_isomorphic = match comps.split_first() {
            Some((first, rest)) => {
                let g0 = self.component_graph(first);
                rest.iter().all(|c| {
                    c.len() == first.len() && petgraph::algo::is_isomorphic(&g0, &self.component_graph(c))
                })
            }
            None => true,
        };
        GraphAnalysis {
            girth: self.girth(),
            diameter: if comps.len() == 1 { component_diameters.first().copied() } else { None },
            component_sizes: comps.iter().map(Vec::len).collect(),
            component_diameters,
            bipartite: self.is_bipartite(),
            min_degree: (0..self.adj.len()).map(|v| self.degree(v)).min().unwrap_or(0),
            components: comps.len(),
            components_isomorphic,
        }
    }
}

/// The `(m, k, ν)` parameters of a special presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCertificate {
    pub m: usize,
    pub k: usize,
    pub nu: usize,
}

impl std::fmt::Display for SpecialCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.m, self.k, self.nu)
    }
}

/// Returns the certificate when `p` is `(m,k,ν)`-special.
pub fn check_special(p: &Presentation) -> Option<SpecialCertificate> {
    let k = p.relators().first()?.len();
    if p.relators().iter().any(|r| r.len() != k) || k < 3 {
        return None;
    }
    let a = StarGraph::build(p).simple_graph().analyze();
    if !a.bipartite || !a.components_isomorphic || a.min_degree < 3 {
        return None;
    }
    let m = a.component_diameters[0];
    if m < 2 || a.component_diameters.iter().any(|&d| d != m) || a.girth != Some(2 * m) {
        return None;
    }
    if m == 2 && k < 4 {
        return None;
    }
    Some(SpecialCertificate { m, k, nu: a.components })
}

/// `1/m + 2/k < 1`, i.e. `k + 2m < mk`.
pub fn hyperbolic_flag(m: usize, k: usize) -> bool {
    k + 2 * m < m * k
}

/// Drops freely trivial relators and keeps the first of any relators that are
/// freely conjugate to each other or to each other's inverse.
pub fn concise_refine(p: &Presentation) -> Presentation {
    concise_refine_relators(p.rank(), p.relators())
}

/// As [`concise_refine`], over raw words that may be freely trivial or not
/// cyclically reduced.
pub fn concise_refine_relators(rank: usize, relators: &[Word]) -> Presentation {
    let mut seen: HashSet<Word> = HashSet::new();
    let relators: Vec<Word> = relators
        .iter()
        .map(Word::cyclic_reduce)
        .filter(|r| !r.is_empty() && seen.insert(r.canonical_cyclic()))
        .collect();
    Presentation::new(rank, relators).expect("cyclically reduced relators")
}
