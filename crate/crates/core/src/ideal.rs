//! Monomial ideals in the variables indexed by a hypergraph's vertices:
//! cover and edge ideals, symbolic and ordinary powers, colon radicals.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// Upper bound on `(t + 1)^n` for exhaustive exponent searches.
pub const MAX_EXPONENT_SEARCH: u64 = 1 << 26;

/// Exponent vector, indexed by position in an ambient sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> ExponentVector {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> ExponentVector {
        ExponentVector(vec![0; n])
    }

    /// Indicator vector of a vertex mask.
    pub fn indicator(n: usize, mask: u64) -> ExponentVector {
        ExponentVector((0..n).map(|i| (mask >> i & 1) as u32).collect())
    }

    pub fn from_map(ground: &[Vertex], map: &BTreeMap<Vertex, u32>) -> Result<ExponentVector> {
        if let Some(v) = map.keys().find(|v| ground.binary_search(v).is_err()) {
            return Err(Error::NotASubset(*v));
        }
        Ok(ExponentVector(
            ground.iter().map(|v| map.get(v).copied().unwrap_or(0)).collect(),
        ))
    }

    pub fn to_map(&self, ground: &[Vertex]) -> BTreeMap<Vertex, u32> {
        ground.iter().copied().zip(self.0.iter().copied()).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|a|`
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// `a^{<t}`: entries `>= t` become 0.
    pub fn truncated(&self, t: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&x| if x < t { x } else { 0 }).collect())
    }

    /// Componentwise `<=`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn product(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn scaled(&self, s: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| a * s).collect())
    }

    pub fn capped(&self, t: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| a.min(t)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealKind {
    Zero,
    Unit,
    Proper,
}

/// Monomial ideal given by its minimal generators.
///
/// The unit ideal is stored with the single generator `0`, the zero ideal with
/// no generators; `kind` tells them apart from proper ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    ambient: Vec<Vertex>,
    kind: IdealKind,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn new(ambient: Vec<Vertex>, generators: Vec<ExponentVector>) -> Result<MonomialIdeal> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient.len()) {
            return Err(Error::ExponentLength { got: g.len(), expected: ambient.len() });
        }
        let generators = minimalize(generators);
        let kind = if generators.is_empty() {
            IdealKind::Zero
        } else if generators.iter().any(|g| g.degree() == 0) {
            IdealKind::Unit
        } else {
            IdealKind::Proper
        };
        Ok(MonomialIdeal { ambient, kind, generators })
    }

    pub fn ambient(&self) -> &[Vertex] {
        &self.ambient
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn is_unit(&self) -> bool {
        self.kind == IdealKind::Unit
    }

    pub fn is_zero(&self) -> bool {
        self.kind == IdealKind::Zero
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(ExponentVector::is_squarefree)
    }

    /// Maximal degree of a minimal generator.
    pub fn omega(&self) -> u64 {
        self.generators.iter().map(ExponentVector::degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u64 {
        self.generators.iter().map(ExponentVector::degree).min().unwrap_or(0)
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(a))
    }
}

/// Sorted minimal elements under divisibility.
pub fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        // lower-degree candidates come first, so only they can divide g
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// `J(G)`, generated by the indicator vectors of the minimal covers.
pub fn cover_ideal(g: &Hypergraph) -> MonomialIdeal {
    let n = g.num_vertices();
    let gens = g
        .minimal_cover_masks()
        .into_iter()
        .map(|m| ExponentVector::indicator(n, m))
        .collect();
    MonomialIdeal::new(g.vertices().to_vec(), gens).expect("lengths match")
}

/// `I(G)`, generated by the edge monomials.
pub fn edge_ideal(g: &Hypergraph) -> MonomialIdeal {
    let n = g.num_vertices();
    let gens = g
        .edge_masks()
        .iter()
        .map(|&m| ExponentVector::indicator(n, m))
        .collect();
    MonomialIdeal::new(g.vertices().to_vec(), gens).expect("lengths match")
}

fn check_len(g: &Hypergraph, a: &ExponentVector) -> Result<()> {
    if a.len() != g.num_vertices() {
        Err(Error::ExponentLength { got: a.len(), expected: g.num_vertices() })
    } else {
        Ok(())
    }
}

fn edge_sum(edge: u64, a: &[u32]) -> u64 {
    bits(edge).map(|i| a[i] as u64).sum()
}

/// `x^a ∈ J(G)^(t)`: every edge has exponent sum at least `t`.
pub fn symbolic_member(g: &Hypergraph, t: u32, a: &ExponentVector) -> Result<bool> {
    check_len(g, a)?;
    Ok(g.edge_masks().iter().all(|&e| edge_sum(e, a.entries()) >= t as u64))
}

/// Minimal generators of `J(G)^(t)`; entries never exceed `t`.
pub fn symbolic_generators(g: &Hypergraph, t: u32) -> Result<MonomialIdeal> {
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    let n = g.num_vertices();
    let ambient = g.vertices().to_vec();
    if g.is_edgeless() {
        return MonomialIdeal::new(ambient, vec![ExponentVector::zeros(n)]);
    }
    let space = (t as u64 + 1).checked_pow(n as u32).unwrap_or(u64::MAX);
    if space > MAX_EXPONENT_SEARCH {
        return Err(Error::Capacity(format!(
            "symbolic generator search over {}^{n} exponents",
            t + 1
        )));
    }
    let edges = g.edge_masks();
    let member = |a: &[u32]| edges.iter().all(|&e| edge_sum(e, a) >= t as u64);
    let mut gens = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        if member(&a) {
            let minimal = (0..n).all(|i| {
                if a[i] == 0 {
                    return true;
                }
                a[i] -= 1;
                let still = member(&a);
                a[i] += 1;
                !still
            });
            if minimal {
                gens.push(ExponentVector(a.clone()));
            }
        }
        if !advance(&mut a, t) {
            break;
        }
    }
    MonomialIdeal::new(ambient, gens)
}

/// Mixed-radix increment over `{0..=max}^n`; false once it wraps around.
pub(crate) fn advance(a: &mut [u32], max: u32) -> bool {
    for x in a.iter_mut() {
        if *x < max {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}

/// Minimal generators of `I^t`.
pub fn ordinary_power(ideal: &MonomialIdeal, t: u32) -> Result<MonomialIdeal> {
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    let mut current = ideal.generators.clone();
    for _ in 1..t {
        let mut next = Vec::with_capacity(current.len() * ideal.generators.len());
        for a in &current {
            for b in &ideal.generators {
                next.push(a.product(b));
            }
        }
        current = minimalize(next);
    }
    MonomialIdeal::new(ideal.ambient.clone(), current)
}

/// The hypergraph `H` with `√(J(G)^(t) : x^a) = J(H)`: same vertices as `G`,
/// keeping the edges whose exponent sum is below `t`.
pub fn colon_radical_subhypergraph(g: &Hypergraph, t: u32, a: &ExponentVector) -> Result<Hypergraph> {
    check_len(g, a)?;
    let edges = g
        .edge_masks()
        .iter()
        .copied()
        .filter(|&e| edge_sum(e, a.entries()) < t as u64)
        .collect();
    Ok(Hypergraph::from_masks(g.vertices().to_vec(), edges))
}
