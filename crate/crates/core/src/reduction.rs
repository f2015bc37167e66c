//! Reduction moves on graphs with leaves, reducibility to the unique cycle,
//! and computational checks of the reduction lemmas.
//!
//! A pure branch at a branching point `u` (degree > 2) is a path from `u` to
//! a leaf whose other vertices all have degree at most 2. The moves are:
//! drop one of several leaves at a vertex, drop one of several length-2 pure
//! branches at a branching point, and shorten a pure branch of length >= 3 by
//! its last three vertices.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families;
use crate::field::Field;
use crate::hypergraph::{CycleStructure, Hypergraph, Vertex};
use crate::simplicial::SimplicialComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum MoveKind {
    DropExtraLeaf,
    DropExtraLength2Branch,
    ShortenBranchBy3,
}

impl MoveKind {
    fn removed_count(self) -> usize {
        match self {
            MoveKind::DropExtraLeaf => 1,
            MoveKind::DropExtraLength2Branch => 2,
            MoveKind::ShortenBranchBy3 => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Move {
    pub kind: MoveKind,
    pub anchor: Vertex,
    pub removed: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub start: Hypergraph,
    pub moves: Vec<Move>,
    pub end: Hypergraph,
}

/// A pure branch `u, path[0], ..., path[k-1]`; `path[k-1]` is the leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub path: Vec<Vertex>,
}

impl Branch {
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn leaf(&self) -> Vertex {
        *self.path.last().expect("branches are nonempty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BranchProfile {
    pub vertex: Vertex,
    pub degree: usize,
    pub branching_point: bool,
    /// Leaf neighbours, whether or not `vertex` is a branching point.
    pub leaves: Vec<Vertex>,
    /// Pure branches; empty unless `vertex` is a branching point.
    pub branches: Vec<Branch>,
}

impl BranchProfile {
    pub fn branches_of_length(&self, k: usize) -> impl Iterator<Item = &Branch> {
        self.branches.iter().filter(move |b| b.len() == k)
    }
}

fn neighbors(g: &Hypergraph, v: Vertex) -> Vec<Vertex> {
    g.neighbors(v).unwrap_or_default()
}

fn degree(g: &Hypergraph, v: Vertex) -> usize {
    g.degree(v).unwrap_or(0)
}

/// Walks from `u` through `first` while degrees stay <= 2; a path ending at a leaf.
fn walk_to_leaf(g: &Hypergraph, u: Vertex, first: Vertex) -> Option<Vec<Vertex>> {
    let mut path = vec![first];
    let (mut prev, mut cur) = (u, first);
    loop {
        match degree(g, cur) {
            1 => return Some(path),
            2 => {
                let next = neighbors(g, cur).into_iter().find(|&w| w != prev)?;
                if next == u || path.contains(&next) {
                    return None;
                }
                path.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

pub fn branch_profile(g: &Hypergraph, u: Vertex) -> Result<BranchProfile> {
    g.require_graph()?;
    if g.index_of(u).is_none() {
        return Err(Error::NotASubset(u));
    }
    let nbrs = neighbors(g, u);
    let leaves: Vec<Vertex> = nbrs.iter().copied().filter(|&v| degree(g, v) == 1).collect();
    let branching_point = nbrs.len() > 2;
    let branches = if branching_point {
        nbrs.iter()
            .filter_map(|&v| walk_to_leaf(g, u, v))
            .map(|path| Branch { path })
            .collect()
    } else {
        Vec::new()
    };
    Ok(BranchProfile { vertex: u, degree: nbrs.len(), branching_point, leaves, branches })
}

/// Every legal move, in (kind, anchor, removed) order.
pub fn applicable_moves(g: &Hypergraph) -> Result<Vec<Move>> {
    g.require_graph()?;
    let mut moves = Vec::new();
    for &u in g.vertices() {
        let p = branch_profile(g, u)?;
        if p.leaves.len() >= 2 {
            for &leaf in &p.leaves {
                moves.push(Move { kind: MoveKind::DropExtraLeaf, anchor: u, removed: vec![leaf] });
            }
        }
        let length2: Vec<&Branch> = p.branches_of_length(2).collect();
        if length2.len() >= 2 {
            for b in length2 {
                moves.push(Move {
                    kind: MoveKind::DropExtraLength2Branch,
                    anchor: u,
                    removed: b.path.clone(),
                });
            }
        }
        for b in p.branches.iter().filter(|b| b.len() >= 3) {
            moves.push(Move {
                kind: MoveKind::ShortenBranchBy3,
                anchor: u,
                removed: b.path[b.len() - 3..].to_vec(),
            });
        }
    }
    for m in &mut moves {
        m.removed.sort_unstable();
    }
    moves.sort_by(|a, b| (a.kind, a.anchor, &a.removed).cmp(&(b.kind, b.anchor, &b.removed)));
    Ok(moves)
}

pub fn apply_move(g: &Hypergraph, m: &Move) -> Result<Hypergraph> {
    let legal = applicable_moves(g)?;
    let mut wanted = m.clone();
    wanted.removed.sort_unstable();
    if !legal.contains(&wanted) || wanted.removed.len() != wanted.kind.removed_count() {
        return Err(Error::InapplicableMove(format!(
            "{:?} at {} removing {:?}",
            m.kind, m.anchor, m.removed
        )));
    }
    g.remove_vertices(wanted.removed)
}

fn require_unicyclic(g: &Hypergraph) -> Result<Vec<Vertex>> {
    match g.cycle_structure()? {
        CycleStructure::Unicyclic { vertices, .. } => Ok(vertices),
        _ => Err(Error::NotUnicyclic),
    }
}

/// A move sequence from `g` to its cycle, found by exhaustive search.
pub fn reducible_to_cycle(g: &Hypergraph) -> Result<Option<ReductionTrace>> {
    let cycle = require_unicyclic(g)?;
    let target = g.mask_of(cycle)?;
    let mut failed = HashSet::new();
    let mut moves = Vec::new();
    if search(g, g, target, &mut failed, &mut moves)? {
        let end = g.induced_mask(target);
        Ok(Some(ReductionTrace { start: g.clone(), moves, end }))
    } else {
        Ok(None)
    }
}

fn search(
    root: &Hypergraph,
    current: &Hypergraph,
    target: u64,
    failed: &mut HashSet<u64>,
    moves: &mut Vec<Move>,
) -> Result<bool> {
    let mask = root.mask_of(current.vertices().iter().copied())?;
    if mask == target {
        return Ok(true);
    }
    if failed.contains(&mask) {
        return Ok(false);
    }
    for m in applicable_moves(current)? {
        let next = current.remove_vertices(m.removed.iter().copied())?;
        moves.push(m);
        if search(root, &next, target, failed, moves)? {
            return Ok(true);
        }
        moves.pop();
    }
    failed.insert(mask);
    Ok(false)
}

/// Applies the first applicable move (in [`applicable_moves`] order) until none is left.
pub fn greedy_reduction(g: &Hypergraph) -> Result<ReductionTrace> {
    g.require_graph()?;
    let mut current = g.clone();
    let mut moves = Vec::new();
    while let Some(m) = applicable_moves(&current)?.into_iter().next() {
        current = current.remove_vertices(m.removed.iter().copied())?;
        moves.push(m);
    }
    Ok(ReductionTrace { start: g.clone(), moves, end: current })
}

/// Greedy against exhaustive search on a unicyclic graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfluenceRecord {
    pub search_reaches_cycle: bool,
    pub greedy_reaches_cycle: bool,
    pub greedy_end: Hypergraph,
}

impl ConfluenceRecord {
    pub fn agrees(&self) -> bool {
        self.search_reaches_cycle == self.greedy_reaches_cycle
    }
}

pub fn compare_strategies(g: &Hypergraph) -> Result<ConfluenceRecord> {
    let cycle = require_unicyclic(g)?;
    let search = reducible_to_cycle(g)?.is_some();
    let greedy = greedy_reduction(g)?;
    let reached = greedy.end.num_vertices() == cycle.len();
    Ok(ConfluenceRecord {
        search_reaches_cycle: search,
        greedy_reaches_cycle: reached,
        greedy_end: greedy.end,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    Reduction1,
    Reduction2,
    Reduction3,
    Reduction4,
    Type12,
    Reduction5,
    Reduction6,
}

impl LemmaId {
    pub const ALL: [LemmaId; 7] = [
        LemmaId::Reduction1,
        LemmaId::Reduction2,
        LemmaId::Reduction3,
        LemmaId::Reduction4,
        LemmaId::Type12,
        LemmaId::Reduction5,
        LemmaId::Reduction6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Reduction1 => "reduction-1",
            LemmaId::Reduction2 => "reduction-2",
            LemmaId::Reduction3 => "reduction-3",
            LemmaId::Reduction4 => "reduction-4",
            LemmaId::Type12 => "type-1-2",
            LemmaId::Reduction5 => "reduction-5",
            LemmaId::Reduction6 => "reduction-6",
        }
    }

    /// `(τ_max slack, hdim offset)`; `None` where the lemma makes no such claim.
    pub fn expected(self) -> (Option<usize>, Option<i32>) {
        match self {
            LemmaId::Reduction1 | LemmaId::Reduction4 => (Some(1), Some(-1)),
            LemmaId::Reduction2 | LemmaId::Reduction6 => (Some(2), Some(-2)),
            LemmaId::Reduction5 => (Some(3), Some(-3)),
            LemmaId::Type12 => (Some(1), None),
            LemmaId::Reduction3 => (None, None),
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LemmaId> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

impl Serialize for LemmaId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Located configuration: named vertices and the vertices removed to form `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub roles: BTreeMap<String, Vertex>,
    pub removed: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub field: Field,
    pub graph: Hypergraph,
    pub configuration: Configuration,
    pub reduced: Option<Hypergraph>,
    pub tau_max_g: usize,
    pub tau_max_h: Option<usize>,
    /// `None` means acyclic.
    pub hdim_g: Option<i32>,
    pub hdim_h: Option<i32>,
    pub tau_ok: bool,
    pub hdim_ok: bool,
    pub passed: bool,
}

fn roles(pairs: &[(&str, Vertex)]) -> BTreeMap<String, Vertex> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn absent(lemma: LemmaId, missing: &str) -> Error {
    Error::ConfigurationAbsent { lemma: lemma.as_str(), missing: missing.to_string() }
}

/// Walks `u, first, ...` through degree-2 vertices to a leaf, without
/// requiring `u` to be a branching point.
fn dangling_path(g: &Hypergraph, u: Vertex, first: Vertex) -> Option<Vec<Vertex>> {
    walk_to_leaf(g, u, first)
}

/// On a unicyclic graph, no cycle vertex carries two pure branches.
fn one_branch_per_cycle_vertex(g: &Hypergraph, cycle: &[Vertex]) -> Result<bool> {
    for &u in cycle {
        if branch_profile(g, u)?.branches.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finds the first occurrence of the configuration `lemma` needs.
pub fn find_configuration(g: &Hypergraph, lemma: LemmaId) -> Result<Configuration> {
    g.require_graph()?;
    let vs = g.vertices().to_vec();
    match lemma {
        LemmaId::Reduction1 => {
            for &u in &vs {
                let leaves: Vec<Vertex> =
                    neighbors(g, u).into_iter().filter(|&v| degree(g, v) == 1).collect();
                if leaves.len() >= 2 {
                    return Ok(Configuration {
                        roles: roles(&[("u", u), ("v1", leaves[0]), ("v2", leaves[1])]),
                        removed: vec![leaves[0]],
                    });
                }
            }
            Err(absent(lemma, "a vertex with two leaf neighbours"))
        }
        LemmaId::Reduction2 => {
            for &u in &vs {
                for v in neighbors(g, u) {
                    if let Some(path) = dangling_path(g, u, v).filter(|p| p.len() >= 3) {
                        let k = path.len();
                        return Ok(Configuration {
                            roles: roles(&[("u", u), ("v1", path[0]), ("vk", path[k - 1])]),
                            removed: path[k - 3..].to_vec(),
                        });
                    }
                }
            }
            Err(absent(lemma, "a pure branch of length at least 3"))
        }
        LemmaId::Reduction3 => {
            for &u in &vs {
                let nbrs = neighbors(g, u);
                for &v1 in nbrs.iter().filter(|&&v| degree(g, v) == 1) {
                    for &v2 in nbrs.iter().filter(|&&v| v != v1) {
                        if let Some(v3) =
                            neighbors(g, v2).into_iter().find(|&w| w != u && degree(g, w) == 1)
                        {
                            return Ok(Configuration {
                                roles: roles(&[("u", u), ("v1", v1), ("v2", v2), ("v3", v3)]),
                                removed: Vec::new(),
                            });
                        }
                    }
                }
            }
            Err(absent(lemma, "a leaf and a path u, v2, v3 to a leaf at the same vertex"))
        }
        LemmaId::Reduction4 => {
            for &u in &vs {
                let twos: Vec<Vec<Vertex>> = neighbors(g, u)
                    .into_iter()
                    .filter_map(|v| dangling_path(g, u, v))
                    .filter(|p| p.len() == 2)
                    .collect();
                if twos.len() >= 2 {
                    return Ok(Configuration {
                        roles: roles(&[
                            ("u", u),
                            ("v1", twos[0][0]),
                            ("v2", twos[0][1]),
                            ("v3", twos[1][0]),
                            ("v4", twos[1][1]),
                        ]),
                        removed: twos[0].clone(),
                    });
                }
            }
            Err(absent(lemma, "two pure branches of length 2 at one vertex"))
        }
        LemmaId::Type12 => {
            for &u in vs.iter().filter(|&&u| degree(g, u) == 3) {
                let nbrs = neighbors(g, u);
                let Some(&v1) = nbrs.iter().find(|&&v| degree(g, v) == 1) else { continue };
                for &v2 in nbrs.iter().filter(|&&v| v != v1) {
                    let Some(path) = dangling_path(g, u, v2).filter(|p| p.len() == 2) else { continue };
                    let w = *nbrs.iter().find(|&&x| x != v1 && x != v2).expect("degree 3");
                    return Ok(Configuration {
                        roles: roles(&[("u", u), ("v1", v1), ("v2", v2), ("v3", path[1]), ("w", w)]),
                        removed: vec![v1],
                    });
                }
            }
            Err(absent(lemma, "a degree-3 vertex with a leaf and a pure branch of length 2"))
        }
        LemmaId::Reduction5 | LemmaId::Reduction6 => {
            let cycle = match g.cycle_structure()? {
                CycleStructure::Unicyclic { vertices, .. } => vertices,
                _ => return Err(absent(lemma, "a unicyclic host graph")),
            };
            if !one_branch_per_cycle_vertex(g, &cycle)? {
                return Err(absent(lemma, "at most one pure branch at every cycle vertex"));
            }
            let n = cycle.len();
            for i in 0..n {
                let u1 = cycle[i];
                let (next, prev) = (cycle[(i + 1) % n], cycle[(i + n - 1) % n]);
                let nbrs = neighbors(g, u1);
                if nbrs.len() != 3 {
                    continue;
                }
                let v1 = *nbrs.iter().find(|&&x| x != next && x != prev).expect("degree 3");
                if lemma == LemmaId::Reduction5 {
                    let bare = |x: Vertex| degree(g, x) == 2;
                    if n >= 4 && degree(g, v1) == 1 && bare(next) && bare(prev) {
                        return Ok(Configuration {
                            roles: roles(&[("u1", u1), ("v1", v1), ("u2", next), ("un", prev)]),
                            removed: vec![u1, v1, next, prev],
                        });
                    }
                } else if degree(g, v1) == 2 {
                    let v2 = *neighbors(g, v1).iter().find(|&&x| x != u1).expect("degree 2");
                    if degree(g, v2) == 1 {
                        return Ok(Configuration {
                            roles: roles(&[("u1", u1), ("v1", v1), ("v2", v2)]),
                            removed: vec![u1, v1, v2],
                        });
                    }
                }
            }
            Err(absent(
                lemma,
                if lemma == LemmaId::Reduction5 {
                    "a cycle vertex of degree 3 with a leaf, between two bare cycle vertices"
                } else {
                    "a cycle vertex of degree 3 carrying a pure branch of length 2"
                },
            ))
        }
    }
}

/// Builds `H` for the lemma and checks both sides over `field`.
/// An hdim identity also passes when both complexes are acyclic.
pub fn verify_reduction_lemma(g: &Hypergraph, lemma: LemmaId, field: Field) -> Result<LemmaReport> {
    let configuration = find_configuration(g, lemma)?;
    let tau_max_g = g.tau_max();
    let hdim_g = SimplicialComplex::cover_complex(g).hdim(field)?;
    let (tau_slack, hdim_offset) = lemma.expected();
    let reduced = if configuration.removed.is_empty() {
        None
    } else {
        Some(g.remove_vertices(configuration.removed.iter().copied())?)
    };
    let tau_max_h = reduced.as_ref().map(Hypergraph::tau_max);
    let hdim_h = match &reduced {
        Some(h) => SimplicialComplex::cover_complex(h).hdim(field)?,
        None => None,
    };
    let tau_ok = match (tau_slack, tau_max_h) {
        (Some(s), Some(th)) => th + s <= tau_max_g,
        _ => true,
    };
    let hdim_ok = match (lemma, hdim_offset) {
        (LemmaId::Reduction3, _) => hdim_g.is_none(),
        (_, Some(off)) => hdim_h == hdim_g.map(|d| d + off),
        (_, None) => true,
    };
    Ok(LemmaReport {
        lemma,
        field,
        graph: g.clone(),
        configuration,
        reduced,
        tau_max_g,
        tau_max_h,
        hdim_g,
        hdim_h,
        tau_ok,
        hdim_ok,
        passed: tau_ok && hdim_ok,
    })
}

struct Builder {
    edges: Vec<[Vertex; 2]>,
    next: Vertex,
}

impl Builder {
    fn from_graph(g: &Hypergraph) -> Builder {
        let edges = g.edges().into_iter().map(|e| [e[0], e[1]]).collect();
        let next = g.vertices().last().copied().unwrap_or(0) + 1;
        Builder { edges, next }
    }

    fn fresh(&mut self) -> Vertex {
        self.next += 1;
        self.next - 1
    }

    fn edge(&mut self, a: Vertex, b: Vertex) {
        self.edges.push([a, b]);
    }

    /// Hangs a path of `len` new vertices off `from`; returns them in order.
    fn path(&mut self, from: Vertex, len: usize) -> Vec<Vertex> {
        let mut prev = from;
        (0..len)
            .map(|_| {
                let v = self.fresh();
                self.edge(prev, v);
                prev = v;
                v
            })
            .collect()
    }

    fn build(self) -> Hypergraph {
        Hypergraph::from_edges(self.edges).expect("builder produces simple graphs")
    }
}

/// A small connected host: cycle, tree, unicyclic graph, dense random graph or K_4.
fn random_host<R: Rng + ?Sized>(rng: &mut R) -> Hypergraph {
    match rng.gen_range(0..5) {
        0 => families::cycle(rng.gen_range(3..=6)),
        1 => families::random_tree(rng.gen_range(2..=5), rng),
        2 => {
            let c = rng.gen_range(3..=5);
            families::random_unicyclic(rng.gen_range(c..=6), c, rng)
        }
        3 => loop {
            let g = families::random_graph(rng.gen_range(3..=5), 0.6, rng);
            if g.is_connected() && !g.is_edgeless() {
                break g;
            }
        },
        _ => families::complete(4),
    }
}

/// Host vertex to attach at, chosen so it ends up a branching point.
fn anchor<R: Rng + ?Sized>(b: &mut Builder, host: &Hypergraph, added: usize, rng: &mut R) -> Vertex {
    let u = *host.vertices().choose(rng).expect("hosts are nonempty");
    let deg = host.degree(u).unwrap_or(0);
    for _ in deg + added..3 {
        let extra = b.fresh();
        b.edge(u, extra);
        // keep hanging leaves from forming a second configuration of the same kind
        let tail = b.fresh();
        b.edge(extra, tail);
        let tail2 = b.fresh();
        b.edge(extra, tail2);
    }
    u
}

/// Decorates cycle vertices with at most one pure branch each, or a cherry
/// (a vertex carrying two leaves), which is not a pure branch.
fn decorate<R: Rng + ?Sized>(b: &mut Builder, vertices: &[Vertex], budget: &mut usize, rng: &mut R) {
    for &v in vertices {
        match rng.gen_range(0..4) {
            1 if *budget >= 1 => {
                let len = rng.gen_range(1..=(*budget).min(3));
                b.path(v, len);
                *budget -= len;
            }
            2 if *budget >= 3 => {
                let x = b.path(v, 1)[0];
                b.path(x, 1);
                b.path(x, 1);
                *budget -= 3;
            }
            _ => {}
        }
    }
}

/// A random graph containing the configuration of `lemma`.
pub fn lemma_instance<R: Rng + ?Sized>(lemma: LemmaId, rng: &mut R) -> Hypergraph {
    match lemma {
        LemmaId::Reduction1 => {
            let host = random_host(rng);
            let mut b = Builder::from_graph(&host);
            let u = *host.vertices().choose(rng).expect("nonempty");
            let leaves = rng.gen_range(2..=3);
            for _ in 0..leaves {
                b.path(u, 1);
            }
            b.build()
        }
        LemmaId::Reduction2 => {
            let host = random_host(rng);
            let mut b = Builder::from_graph(&host);
            let u = anchor(&mut b, &host, 1, rng);
            b.path(u, rng.gen_range(3..=5));
            b.build()
        }
        LemmaId::Reduction3 => {
            let host = random_host(rng);
            let mut b = Builder::from_graph(&host);
            let u = *host.vertices().choose(rng).expect("nonempty");
            b.path(u, 1);
            let branch = b.path(u, 2);
            if rng.gen_bool(0.3) {
                // v2 joined back into the host: not a pure branch any more
                if let Some(&w) = host.vertices().iter().find(|&&w| w != u) {
                    b.edge(branch[0], w);
                }
            }
            b.build()
        }
        LemmaId::Reduction4 => {
            let host = random_host(rng);
            let mut b = Builder::from_graph(&host);
            let u = *host.vertices().choose(rng).expect("nonempty");
            let count = rng.gen_range(2..=3);
            for _ in 0..count {
                b.path(u, 2);
            }
            b.build()
        }
        LemmaId::Type12 => {
            let host = random_host(rng);
            let mut b = Builder::from_graph(&host);
            let w = *host.vertices().choose(rng).expect("nonempty");
            let u = b.path(w, 1)[0];
            b.path(u, 1);
            b.path(u, 2);
            b.build()
        }
        LemmaId::Reduction5 => {
            let n = rng.gen_range(4..=7);
            let mut b = Builder::from_graph(&families::cycle(n));
            b.path(1, 1);
            let mut budget = 10 - n - 1;
            decorate(&mut b, &(3..n as Vertex).collect::<Vec<_>>(), &mut budget, rng);
            b.build()
        }
        LemmaId::Reduction6 => {
            let n = rng.gen_range(3..=7);
            let mut b = Builder::from_graph(&families::cycle(n));
            b.path(1, 2);
            let mut budget = 10usize.saturating_sub(n + 2);
            decorate(&mut b, &(2..=n as Vertex).collect::<Vec<_>>(), &mut budget, rng);
            b.build()
        }
    }
}
