//! The symbolic polyhedron `SP(G) = {x >= 0 : Σ_{i∈e} x_i >= 1 for all e}`,
//! exact vertex enumeration, and the asymptotic cover degree `δ(G)`.
//!
//! Everything here is exact rational arithmetic. Vertices are found by
//! choosing `n` active constraints: a set `Z` of coordinates forced to zero
//! plus `n - |Z|` tight edge rows, solved fraction-free.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::bits;
use crate::error::{Error, Result};
use crate::hypergraph::{compress, Hypergraph, Vertex};

/// Default cap on `binomial(#constraints, n)`.
pub const DEFAULT_BASIS_LIMIT: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub coefficients: Vec<i64>,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPolyhedron {
    labels: Vec<Vertex>,
    dropped: Vec<Vertex>,
    edges: Vec<u64>,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalVertex {
    pub coordinates: Vec<Rational64>,
    pub coordinate_sum: Rational64,
}

impl Serialize for RationalVertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coords: Vec<String> = self.coordinates.iter().map(|c| c.to_string()).collect();
        let mut st = s.serialize_struct("RationalVertex", 2)?;
        st.serialize_field("coordinates", &coords)?;
        st.serialize_field("coordinateSum", &self.coordinate_sum.to_string())?;
        st.end()
    }
}

/// Builds `SP(G)`. Isolated vertices are dropped (see [`SymbolicPolyhedron::dropped_isolated`]).
pub fn symbolic_polyhedron(g: &Hypergraph) -> Result<SymbolicPolyhedron> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let isolated = g.isolated_mask();
    let keep = g.full_mask() & !isolated;
    let positions: Vec<usize> = bits(keep).collect();
    let labels: Vec<Vertex> = positions.iter().map(|&i| g.vertices()[i]).collect();
    let edges: Vec<u64> = g.edge_masks().iter().map(|&e| compress(e, &positions)).collect();
    let n = labels.len();
    let mut constraints = Vec::with_capacity(n + edges.len());
    for i in 0..n {
        let mut c = vec![0; n];
        c[i] = 1;
        constraints.push(Constraint { coefficients: c, bound: 0 });
    }
    for &e in &edges {
        let c = (0..n).map(|i| (e >> i & 1) as i64).collect();
        constraints.push(Constraint { coefficients: c, bound: 1 });
    }
    Ok(SymbolicPolyhedron {
        labels,
        dropped: g.labels_of(isolated),
        edges,
        constraints,
    })
}

impl SymbolicPolyhedron {
    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn dropped_isolated(&self) -> &[Vertex] {
        &self.dropped
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn satisfies(&self, point: &[Rational64]) -> bool {
        point.len() == self.dimension()
            && self.constraints.iter().all(|c| {
                let lhs: Rational64 = c
                    .coefficients
                    .iter()
                    .zip(point)
                    .map(|(&a, x)| x * a)
                    .sum();
                lhs >= Rational64::from_integer(c.bound)
            })
    }

    /// Rank of the constraints that hold with equality at `point`.
    pub fn active_rank(&self, point: &[Rational64]) -> usize {
        let rows: Vec<Vec<Rational64>> = self
            .constraints
            .iter()
            .filter(|c| {
                let lhs: Rational64 = c.coefficients.iter().zip(point).map(|(&a, x)| x * a).sum();
                lhs == Rational64::from_integer(c.bound)
            })
            .map(|c| c.coefficients.iter().map(|&a| Rational64::from_integer(a)).collect())
            .collect();
        rational_rank(rows)
    }

    pub fn vertices(&self) -> Result<Vec<RationalVertex>> {
        self.vertices_with_limit(DEFAULT_BASIS_LIMIT)
    }

    pub fn vertices_with_limit(&self, limit: u64) -> Result<Vec<RationalVertex>> {
        let n = self.dimension();
        let total = binomial(self.constraints.len() as u64, n as u64);
        if total > limit {
            return Err(Error::Capacity(format!(
                "{total} candidate bases exceed the limit {limit}"
            )));
        }
        let mut found: BTreeSet<Vec<Rational64>> = BTreeSet::new();
        for zero in 0..1u64 << n {
            // a zero set containing an edge cannot be feasible
            if self.edges.iter().any(|&e| e & !zero == 0) {
                continue;
            }
            let free: Vec<usize> = (0..n).filter(|&i| zero >> i & 1 == 0).collect();
            let k = free.len();
            let mut chosen = Vec::with_capacity(k);
            choose(&self.edges, k, 0, &mut chosen, &mut |rows| {
                if let Some(x) = solve_tight(rows, &free) {
                    let mut point = vec![Rational64::from_integer(0); n];
                    for (slot, &i) in free.iter().enumerate() {
                        point[i] = x[slot];
                    }
                    if self.satisfies(&point) {
                        found.insert(point);
                    }
                }
            });
        }
        Ok(found
            .into_iter()
            .map(|coordinates| {
                let coordinate_sum = coordinates.iter().sum();
                RationalVertex { coordinates, coordinate_sum }
            })
            .collect())
    }
}

/// `δ(G) = max |v|` over vertices of `SP(G)`.
pub fn delta(g: &Hypergraph) -> Result<Rational64> {
    delta_with_limit(g, DEFAULT_BASIS_LIMIT)
}

pub fn delta_with_limit(g: &Hypergraph, limit: u64) -> Result<Rational64> {
    let p = symbolic_polyhedron(g)?;
    p.vertices_with_limit(limit)?
        .into_iter()
        .map(|v| v.coordinate_sum)
        .max()
        .ok_or_else(|| Error::Internal("symbolic polyhedron without vertices".into()))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

fn choose(items: &[u64], k: usize, start: usize, chosen: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..items.len() {
        if items.len() - i < need {
            break;
        }
        chosen.push(items[i]);
        choose(items, k, i + 1, chosen, visit);
        chosen.pop();
    }
}

/// Solves `Σ_{i∈e∩free} x_i = 1` for the chosen edges; `None` if singular.
fn solve_tight(rows: &[u64], free: &[usize]) -> Option<Vec<Rational64>> {
    let k = free.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|&e| {
            let mut r: Vec<i128> = free.iter().map(|&i| (e >> i & 1) as i128).collect();
            r.push(1);
            r
        })
        .collect();
    // Bareiss forward elimination on the augmented matrix
    let mut prev: i128 = 1;
    for c in 0..k {
        let p = (c..k).find(|&r| m[r][c] != 0)?;
        m.swap(c, p);
        for r in c + 1..k {
            for j in c + 1..=k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    let det = m[k - 1][k - 1];
    // integer numerators y = det * x by exact back substitution
    let mut y = vec![0i128; k];
    for c in (0..k).rev() {
        let mut acc = det * m[c][k];
        for l in c + 1..k {
            acc -= m[c][l] * y[l];
        }
        y[c] = acc / m[c][c];
    }
    y.into_iter()
        .map(|v| {
            let num = i64::try_from(v).ok()?;
            let den = i64::try_from(det).ok()?;
            Some(Rational64::new(num, den))
        })
        .collect()
}

fn rational_rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let zero = Rational64::from_integer(0);
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != zero) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != zero {
                let f = rows[r][c] / rows[rank][c];
                let pivot_row = rows[rank].clone();
                for (x, &p) in rows[r][c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x -= p * f;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn constraint_systems() {
        let p = symbolic_polyhedron(&families::path(2)).unwrap();
        assert_eq!(p.constraints().len(), 3);
        assert_eq!(p.constraints()[2], Constraint { coefficients: vec![1, 1], bound: 1 });
        assert_eq!(symbolic_polyhedron(&families::cycle(3)).unwrap().constraints().len(), 6);
        assert_eq!(symbolic_polyhedron(&families::cycle(4)).unwrap().constraints().len(), 8);
        let edgeless = Hypergraph::new([1], Vec::<Vec<Vertex>>::new()).unwrap();
        assert!(matches!(symbolic_polyhedron(&edgeless), Err(Error::Edgeless)));
        let with_isolated = Hypergraph::new([1, 2, 3], vec![vec![1, 2]]).unwrap();
        let p = symbolic_polyhedron(&with_isolated).unwrap();
        assert_eq!(p.dropped_isolated(), &[3]);
        assert_eq!(p.dimension(), 2);
    }

    #[test]
    fn vertices_of_small_polyhedra() {
        let k2 = symbolic_polyhedron(&families::path(2)).unwrap().vertices().unwrap();
        let coords: Vec<_> = k2.iter().map(|v| v.coordinates.clone()).collect();
        assert_eq!(coords, vec![vec![r(0, 1), r(1, 1)], vec![r(1, 1), r(0, 1)]]);

        let c3 = symbolic_polyhedron(&families::cycle(3)).unwrap();
        let v3: Vec<_> = c3.vertices().unwrap().into_iter().map(|v| v.coordinates).collect();
        assert!(v3.contains(&vec![r(1, 2), r(1, 2), r(1, 2)]));
        assert!(v3.contains(&vec![r(1, 1), r(1, 1), r(0, 1)]));
        assert!(v3.contains(&vec![r(0, 1), r(1, 1), r(1, 1)]));
        assert!(v3.contains(&vec![r(1, 1), r(0, 1), r(1, 1)]));
        assert_eq!(v3.len(), 4);

        let c4 = symbolic_polyhedron(&families::cycle(4)).unwrap();
        let v4: Vec<_> = c4.vertices().unwrap().into_iter().map(|v| v.coordinates).collect();
        assert!(v4.contains(&vec![r(1, 1), r(0, 1), r(1, 1), r(0, 1)]));
        assert!(v4.contains(&vec![r(0, 1), r(1, 1), r(0, 1), r(1, 1)]));
        // bipartite: SP is integral, the all-halves point is not a vertex
        assert!(!v4.contains(&vec![r(1, 2); 4]));
        assert_eq!(v4.len(), 2);
    }

    #[test]
    fn every_vertex_is_a_basic_feasible_point() {
        for g in [families::cycle(5), families::figure1(), families::complete(4), families::star(3)] {
            let p = symbolic_polyhedron(&g).unwrap();
            for v in p.vertices().unwrap() {
                assert!(p.satisfies(&v.coordinates));
                assert_eq!(p.active_rank(&v.coordinates), p.dimension());
            }
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&families::path(2)).unwrap(), r(1, 1));
        assert_eq!(delta(&families::cycle(3)).unwrap(), r(2, 1));
        assert_eq!(delta(&families::cycle(4)).unwrap(), r(2, 1));
        assert_eq!(delta(&families::complete(4)).unwrap(), r(3, 1));
    }

    #[test]
    fn basis_limit_is_enforced() {
        assert!(matches!(
            delta_with_limit(&families::cycle(6), 10),
            Err(Error::Capacity(_))
        ));
    }
}
