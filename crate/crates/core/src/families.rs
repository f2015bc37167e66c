//! Named graph families and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::{Hypergraph, Vertex};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn graph(n: usize, edges: Vec<[Vertex; 2]>) -> Hypergraph {
    Hypergraph::new(1..=n as Vertex, edges).expect("family edges are valid")
}

/// The cycle 1-2-...-n-1.
pub fn cycle(n: usize) -> Hypergraph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<[Vertex; 2]> = (1..n as Vertex).map(|i| [i, i + 1]).collect();
    edges.push([1, n as Vertex]);
    graph(n, edges)
}

/// The path 1-2-...-n on `n` vertices.
pub fn path(n: usize) -> Hypergraph {
    graph(n, (1..n as Vertex).map(|i| [i, i + 1]).collect())
}

/// Star with centre 1 and leaves 2..=k+1.
pub fn star(k: usize) -> Hypergraph {
    graph(k + 1, (2..=k as Vertex + 1).map(|i| [1, i]).collect())
}

pub fn complete(n: usize) -> Hypergraph {
    let mut edges = Vec::new();
    for i in 1..=n as Vertex {
        for j in i + 1..=n as Vertex {
            edges.push([i, j]);
        }
    }
    graph(n, edges)
}

/// Square 1-2-3-4 with two length-2 paths hanging off vertex 5, which hangs off 3.
pub fn figure1() -> Hypergraph {
    Hypergraph::from_edges([
        [1, 2],
        [2, 3],
        [3, 4],
        [4, 1],
        [3, 5],
        [5, 6],
        [6, 7],
        [5, 8],
        [8, 9],
    ])
    .expect("valid")
}

/// Square 1-2-3-4 with the tail 3-5-6-7-8 and two leaves 13, 14 on 6.
pub fn figure2() -> Hypergraph {
    Hypergraph::from_edges([
        [1, 2],
        [2, 3],
        [3, 4],
        [4, 1],
        [3, 5],
        [5, 6],
        [6, 7],
        [7, 8],
        [6, 13],
        [6, 14],
    ])
    .expect("valid")
}

/// Uniform random recursive tree on 1..=n: vertex k attaches to a random earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Hypergraph {
    let edges = (2..=n as Vertex)
        .map(|k| [rng.gen_range(1..k), k])
        .collect();
    graph(n, edges)
}

/// Cycle on 1..=cycle_len with random trees attached: every further vertex
/// attaches to a uniformly chosen earlier vertex.
pub fn random_unicyclic<R: Rng + ?Sized>(n: usize, cycle_len: usize, rng: &mut R) -> Hypergraph {
    assert!(cycle_len >= 3 && cycle_len <= n);
    let mut edges: Vec<[Vertex; 2]> = (1..cycle_len as Vertex).map(|i| [i, i + 1]).collect();
    edges.push([1, cycle_len as Vertex]);
    for k in cycle_len as Vertex + 1..=n as Vertex {
        edges.push([rng.gen_range(1..k), k]);
    }
    graph(n, edges)
}

/// Erdős–Rényi graph on 1..=n; vertices may be isolated.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Hypergraph {
    let mut edges = Vec::new();
    for i in 1..=n as Vertex {
        for j in i + 1..=n as Vertex {
            if rng.gen_bool(p) {
                edges.push([i, j]);
            }
        }
    }
    graph(n, edges)
}

/// Random hypergraph on 1..=n with edges of size 1..=max_edge, reduced to an antichain.
pub fn random_hypergraph<R: Rng + ?Sized>(
    n: usize,
    edges: usize,
    max_edge: usize,
    rng: &mut R,
) -> Hypergraph {
    let all: Vec<Vertex> = (1..=n as Vertex).collect();
    let mut masks: Vec<u64> = Vec::new();
    for _ in 0..edges {
        let size = rng.gen_range(1..=max_edge.min(n));
        let e: u64 = all
            .choose_multiple(rng, size)
            .fold(0, |acc, &v| acc | 1 << (v - 1));
        masks.push(e);
    }
    masks.sort_unstable();
    masks.dedup();
    let minimal: Vec<u64> = masks
        .iter()
        .copied()
        .filter(|&e| !masks.iter().any(|&f| f != e && f & e == f))
        .collect();
    let edge_lists: Vec<Vec<Vertex>> = minimal
        .iter()
        .map(|&m| crate::bits(m).map(|i| i as Vertex + 1).collect())
        .collect();
    Hypergraph::new(all, edge_lists).expect("antichain by construction")
}

/// One representative of every connected graph on `n` vertices up to
/// isomorphism, labelled 1..=n. Exhaustive, so only sensible for n <= 7.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Hypergraph> {
    assert!((1..=7).contains(&n), "exhaustive enumeration only for 1..=7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pair_index = |i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| pair_index(p[i], p[j])).collect())
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for code in 0u64..1 << pairs.len() {
        if !connected_code(n, &pairs, code) {
            continue;
        }
        let canonical = images
            .iter()
            .map(|img| {
                crate::bits(code).fold(0u64, |acc, k| acc | 1 << img[k])
            })
            .min()
            .unwrap();
        if seen.insert(canonical) {
            let edges: Vec<[Vertex; 2]> = crate::bits(canonical)
                .map(|k| [pairs[k].0 as Vertex + 1, pairs[k].1 as Vertex + 1])
                .collect();
            out.push(graph(n, edges));
        }
    }
    out
}

fn connected_code(n: usize, pairs: &[(usize, usize)], code: u64) -> bool {
    let mut comp = 1u64;
    loop {
        let mut grown = comp;
        for k in crate::bits(code) {
            let (i, j) = pairs[k];
            if comp >> i & 1 == 1 || comp >> j & 1 == 1 {
                grown |= 1 << i | 1 << j;
            }
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }
    comp.count_ones() as usize == n
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn random_unicyclic_is_unicyclic() {
        let mut rng = seeded_rng(7);
        for _ in 0..50 {
            let len = rng.gen_range(3..=8);
            let n = rng.gen_range(len..=10);
            let g = random_unicyclic(n, len, &mut rng);
            match g.cycle_structure().unwrap() {
                crate::CycleStructure::Unicyclic { length, .. } => assert_eq!(length, len),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_tree(9, &mut seeded_rng(3));
        let b = random_tree(9, &mut seeded_rng(3));
        assert_eq!(a, b);
        assert_eq!(figure1().num_edges(), 9);
        assert_eq!(figure2().vertices(), &[1, 2, 3, 4, 5, 6, 7, 8, 13, 14]);
    }
}
