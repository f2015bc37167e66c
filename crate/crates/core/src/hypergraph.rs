//! Finite simple hypergraphs with arbitrary positive vertex labels.
//!
//! Vertex sets are stored as `u64` bitmasks over the positions of the sorted
//! label list, so every hypergraph has at most [`MAX_VERTICES`] vertices.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};

pub type Vertex = u32;

pub const MAX_VERTICES: usize = 64;

/// A vertex set together with an antichain of nonempty edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    labels: Vec<Vertex>,
    // sorted, distinct, pairwise incomparable
    edges: Vec<u64>,
}

/// Minimal covers of a hypergraph.
///
/// `degenerate` is set for edgeless input, where the only cover is the empty
/// set and the cover ideal is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Covers {
    pub covers: Vec<Vec<Vertex>>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CycleStructure {
    Forest,
    /// Connected with exactly one cycle. `vertices` lists the cycle in walk order.
    Unicyclic { length: usize, vertices: Vec<Vertex> },
    Other,
}

/// Result of [`Hypergraph::disjoint_union`]. `relabeling` maps each vertex of
/// the second operand to its new label; it is empty when no relabeling was needed.
#[derive(Debug, Clone)]
pub struct DisjointUnion {
    pub graph: Hypergraph,
    pub relabeling: BTreeMap<Vertex, Vertex>,
}

impl Hypergraph {
    pub fn new<V, E, I>(vertices: V, edges: E) -> Result<Hypergraph>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let labels: BTreeSet<Vertex> = vertices.into_iter().collect();
        if labels.contains(&0) {
            return Err(Error::InvalidVertex(0));
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "{} vertices, at most {MAX_VERTICES} supported",
                labels.len()
            )));
        }
        let labels: Vec<Vertex> = labels.into_iter().collect();
        let mut masks = Vec::new();
        for (k, edge) in edges.into_iter().enumerate() {
            let mut mask = 0u64;
            for v in edge {
                let i = labels
                    .binary_search(&v)
                    .map_err(|_| Error::UnknownVertex { edge: k, vertex: v })?;
                mask |= 1 << i;
            }
            if mask == 0 {
                return Err(Error::EmptyEdge { edge: k });
            }
            masks.push(mask);
        }
        for i in 0..masks.len() {
            for j in 0..masks.len() {
                if i == j {
                    continue;
                }
                if masks[i] == masks[j] && i < j {
                    return Err(Error::DuplicateEdge { first: i, second: j });
                }
                if masks[i] != masks[j] && masks[i] & masks[j] == masks[i] {
                    return Err(Error::NestedEdges { inner: i, outer: j });
                }
            }
        }
        masks.sort_unstable();
        Ok(Hypergraph { labels, edges: masks })
    }

    /// Hypergraph whose vertex set is the union of the edges.
    pub fn from_edges<E, I>(edges: E) -> Result<Hypergraph>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let edges: Vec<Vec<Vertex>> = edges
            .into_iter()
            .map(|e| e.into_iter().collect())
            .collect();
        let vertices: Vec<Vertex> = edges.iter().flatten().copied().collect();
        Hypergraph::new(vertices, edges)
    }

    /// Builds from masks already known to satisfy the invariants.
    pub(crate) fn from_masks(labels: Vec<Vertex>, mut edges: Vec<u64>) -> Hypergraph {
        edges.sort_unstable();
        edges.dedup();
        Hypergraph { labels, edges }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> Vec<Vec<Vertex>> {
        self.edges.iter().map(|&m| self.labels_of(m)).collect()
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.labels.len())
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub fn mask_of<I: IntoIterator<Item = Vertex>>(&self, set: I) -> Result<u64> {
        let mut mask = 0;
        for v in set {
            let i = self.index_of(v).ok_or(Error::NotASubset(v))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn labels_of(&self, mask: u64) -> Vec<Vertex> {
        bits(mask).map(|i| self.labels[i]).collect()
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        self.mask_of(edge.iter().copied())
            .map(|m| self.edges.binary_search(&m).is_ok())
            .unwrap_or(false)
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.count_ones() == 2)
    }

    pub(crate) fn require_graph(&self) -> Result<()> {
        match self.edges.iter().position(|e| e.count_ones() != 2) {
            Some(k) => Err(Error::NotAGraph {
                edge: k,
                size: self.edges[k].count_ones() as usize,
            }),
            None => Ok(()),
        }
    }

    /// Neighbourhood masks, indexed by vertex position. Only meaningful for graphs.
    pub(crate) fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.labels.len()];
        for &e in &self.edges {
            for i in bits(e) {
                adj[i] |= e & !(1 << i);
            }
        }
        adj
    }

    pub fn degree(&self, v: Vertex) -> Option<usize> {
        let i = self.index_of(v)?;
        Some(self.edges.iter().filter(|&&e| e >> i & 1 == 1).count())
    }

    pub fn neighbors(&self, v: Vertex) -> Option<Vec<Vertex>> {
        let i = self.index_of(v)?;
        let mut mask = 0;
        for &e in &self.edges {
            if e >> i & 1 == 1 {
                mask |= e;
            }
        }
        Some(self.labels_of(mask & !(1 << i)))
    }

    /// Vertices lying in no edge.
    pub fn isolated_mask(&self) -> u64 {
        let covered = self.edges.iter().fold(0, |acc, e| acc | e);
        self.full_mask() & !covered
    }

    /// Maximal independent sets (vertex sets containing no edge), by
    /// vertex-ordered backtracking.
    pub fn maximal_independent_masks(&self) -> Vec<u64> {
        let n = self.labels.len();
        let mut incident: Vec<Vec<u64>> = vec![Vec::new(); n];
        for &e in &self.edges {
            for i in bits(e) {
                incident[i].push(e);
            }
        }
        let mut out = Vec::new();
        mis_search(0, n, 0, &incident, &mut out);
        out.sort_unstable();
        out
    }

    pub fn minimal_cover_masks(&self) -> Vec<u64> {
        let full = self.full_mask();
        let mut covers: Vec<u64> = self
            .maximal_independent_masks()
            .into_iter()
            .map(|s| full & !s)
            .collect();
        covers.sort_unstable();
        covers
    }

    pub fn minimal_covers(&self) -> Covers {
        Covers {
            covers: self
                .minimal_cover_masks()
                .into_iter()
                .map(|m| self.labels_of(m))
                .collect(),
            degenerate: self.edges.is_empty(),
        }
    }

    /// Maximum size of a minimal cover; 0 for an edgeless hypergraph.
    pub fn tau_max(&self) -> usize {
        self.minimal_cover_masks()
            .into_iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn cycle_structure(&self) -> Result<CycleStructure> {
        self.require_graph()?;
        let n = self.labels.len();
        let m = self.edges.len();
        let components = self.components().len();
        if m + components == n {
            return Ok(CycleStructure::Forest);
        }
        if components != 1 || m != n {
            return Ok(CycleStructure::Other);
        }
        // strip leaves until only the cycle remains
        let adj = self.adjacency();
        let mut alive = self.full_mask();
        loop {
            let leaf = bits(alive).find(|&i| (adj[i] & alive).count_ones() <= 1);
            match leaf {
                Some(i) => alive &= !(1 << i),
                None => break,
            }
        }
        let start = alive.trailing_zeros() as usize;
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = (adj[start] & alive).trailing_zeros() as usize;
        while cur != start {
            order.push(cur);
            let next = bits(adj[cur] & alive & !(1 << prev))
                .next()
                .ok_or_else(|| Error::Internal("cycle walk left the cycle".into()))?;
            prev = cur;
            cur = next;
        }
        Ok(CycleStructure::Unicyclic {
            length: order.len(),
            vertices: order.into_iter().map(|i| self.labels[i]).collect(),
        })
    }

    /// Connected components as vertex masks, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.labels.len() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let grown = self
                    .edges
                    .iter()
                    .filter(|&&e| e & comp != 0)
                    .fold(comp, |acc, e| acc | e);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_bipartite(&self) -> Result<bool> {
        self.require_graph()?;
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.labels.len()];
        for start in 0..self.labels.len() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let c = colour[u].unwrap_or(false);
                for v in bits(adj[u]) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!c);
                            stack.push(v);
                        }
                        Some(cv) if cv == c => return Ok(false),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(true)
    }

    /// Induced subhypergraph on a subset of the vertices; labels are kept.
    pub fn induced<I: IntoIterator<Item = Vertex>>(&self, subset: I) -> Result<Hypergraph> {
        let mask = self.mask_of(subset)?;
        Ok(self.induced_mask(mask))
    }

    pub(crate) fn induced_mask(&self, mask: u64) -> Hypergraph {
        let (labels, edges) = self.restrict(mask, self.edges.iter().copied().filter(|e| e & !mask == 0));
        Hypergraph::from_masks(labels, edges)
    }

    /// Reindexes the given edges (each inside `mask`) onto the vertex set `mask`.
    pub(crate) fn restrict(&self, mask: u64, edges: impl Iterator<Item = u64>) -> (Vec<Vertex>, Vec<u64>) {
        let positions: Vec<usize> = bits(mask).collect();
        let labels = positions.iter().map(|&i| self.labels[i]).collect();
        let edges = edges.map(|e| compress(e, &positions)).collect();
        (labels, edges)
    }

    pub fn remove_vertices<I: IntoIterator<Item = Vertex>>(&self, removed: I) -> Result<Hypergraph> {
        let mask = self.mask_of(removed)?;
        Ok(self.induced_mask(self.full_mask() & !mask))
    }

    /// Disjoint union. If the label sets overlap, the second operand is
    /// relabeled onto fresh labels above the maximum of the first.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<DisjointUnion> {
        let overlap = other.labels.iter().any(|v| self.labels.binary_search(v).is_ok());
        let mut relabeling = BTreeMap::new();
        if overlap {
            let base = self.labels.last().copied().unwrap_or(0);
            for (k, &v) in other.labels.iter().enumerate() {
                relabeling.insert(v, base + 1 + k as Vertex);
            }
        }
        let map = |v: Vertex| *relabeling.get(&v).unwrap_or(&v);
        let vertices = self
            .labels
            .iter()
            .copied()
            .chain(other.labels.iter().map(|&v| map(v)));
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|e| e.into_iter().map(map).collect()));
        let graph = Hypergraph::new(vertices, edges)?;
        Ok(DisjointUnion { graph, relabeling })
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Hypergraph", 2)?;
        st.serialize_field("vertices", &self.labels)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Maps a mask over `positions` (sorted original indices) to a dense mask.
pub(crate) fn compress(mask: u64, positions: &[usize]) -> u64 {
    positions
        .iter()
        .enumerate()
        .filter(|(_, &p)| mask >> p & 1 == 1)
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

fn mis_search(i: usize, n: usize, chosen: u64, incident: &[Vec<u64>], out: &mut Vec<u64>) {
    if i == n {
        // maximality: every excluded vertex closes an edge with the chosen set
        let maximal = (0..n).filter(|&v| chosen >> v & 1 == 0).all(|v| {
            incident[v]
                .iter()
                .any(|&e| e & !(1 << v) & !chosen == 0)
        });
        if maximal {
            out.push(chosen);
        }
        return;
    }
    let with = chosen | 1 << i;
    // only edges whose largest vertex is i can be completed by adding i
    let can_include = incident[i].iter().all(|&e| e & !with != 0);
    if can_include {
        mis_search(i + 1, n, with, incident, out);
    }
    // excluding i is pointless if it can never be blocked later
    let blockable = incident[i].iter().any(|&e| {
        let rest = e & !(1 << i);
        rest & !chosen & full_mask(i) == 0
    });
    if blockable {
        mis_search(i + 1, n, chosen, incident, out);
    }
}
