//! Graded Betti numbers of monomial ideals from the lcm lattice, and the
//! regularity and projective dimension derived from them.
//!
//! `β_{i,b}(I) = dim H̃_{i-1}((0̂, b))`, the open interval below `b` in the
//! lcm lattice. When an interval is too large for its order complex, the
//! upper Koszul complex `K^b(I) = {F ⊆ supp b : x^{b-F} ∈ I}` is used
//! instead; it has the same reduced homology.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::simplicial::homology_of_facets;

pub const MAX_LATTICE: usize = 250_000;
pub const MAX_CHAINS: usize = 200_000;
/// Order complexes are built on at most this many interval elements.
pub const MAX_INTERVAL: usize = 64;
pub const MAX_KOSZUL_SUPPORT: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Order complex where it fits, upper Koszul complex otherwise.
    #[default]
    Auto,
    OrderComplex,
    Koszul,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    /// Sorted by degree, then lexicographically; the bottom comes first.
    elements: Vec<ExponentVector>,
    atoms: Vec<ExponentVector>,
}

impl LcmLattice {
    pub fn elements(&self) -> &[ExponentVector] {
        &self.elements
    }

    pub fn bottom(&self) -> &ExponentVector {
        &self.elements[0]
    }

    pub fn atoms(&self) -> &[ExponentVector] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, b: &ExponentVector) -> bool {
        self.elements.contains(b)
    }

    /// Elements strictly between the bottom and `b`.
    pub fn open_interval(&self, b: &ExponentVector) -> Vec<&ExponentVector> {
        self.elements[1..].iter().filter(|c| *c != b && c.divides(b)).collect()
    }
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        Err(Error::DegenerateIdeal("unit ideal"))
    } else if ideal.is_zero() {
        Err(Error::DegenerateIdeal("zero ideal"))
    } else {
        Ok(())
    }
}

pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    require_proper(ideal)?;
    let gens = ideal.generators();
    let mut seen: BTreeSet<ExponentVector> = gens.iter().cloned().collect();
    let mut frontier: Vec<ExponentVector> = gens.to_vec();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.lcm(g);
            if !seen.contains(&y) {
                if seen.len() >= MAX_LATTICE {
                    return Err(Error::Capacity(format!(
                        "lcm lattice exceeds {MAX_LATTICE} elements"
                    )));
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    let mut elements: Vec<ExponentVector> = seen.into_iter().collect();
    elements.push(ExponentVector::zeros(ideal.ambient().len()));
    elements.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    Ok(LcmLattice { elements, atoms: gens.to_vec() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, ExponentVector), usize>,
    field: Field,
}

impl BettiTable {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Nonzero multigraded entries.
    pub fn entries(&self) -> &BTreeMap<(usize, ExponentVector), usize> {
        &self.entries
    }

    pub fn get(&self, i: usize, b: &ExponentVector) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    /// `β_{i,j}` keyed by `(i, j)`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), &v) in &self.entries {
            *out.entry((*i, b.degree())).or_insert(0) += v;
        }
        out
    }

    pub fn totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for ((i, _), &v) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += v;
        }
        out
    }

    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, b)| b.degree() as i64 - *i as i64)
            .max()
            .unwrap_or(0)
    }

    /// Projective dimension of the ideal; the quotient's is one more.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }
}

/// Adjacency of the strict order on `items`, as bitmasks of larger elements.
fn above_masks(items: &[&ExponentVector]) -> Vec<u64> {
    (0..items.len())
        .map(|i| {
            (0..items.len())
                .filter(|&j| j != i && items[i].divides(items[j]))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect()
}

/// Facets of the order complex: maximal chains.
fn maximal_chains(items: &[&ExponentVector]) -> Option<Vec<u64>> {
    let above = above_masks(items);
    let m = items.len();
    // covers: j above i with nothing in between
    let covers: Vec<u64> = (0..m)
        .map(|i| {
            bits(above[i])
                .filter(|&j| bits(above[i]).all(|k| above[k] >> j & 1 == 0))
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    let minimal: Vec<usize> = (0..m).filter(|&i| (0..m).all(|j| above[j] >> i & 1 == 0)).collect();
    let mut chains = Vec::new();
    let mut stack: Vec<(usize, u64)> = minimal.into_iter().map(|i| (i, 1u64 << i)).collect();
    while let Some((top, chain)) = stack.pop() {
        if covers[top] == 0 {
            chains.push(chain);
            if chains.len() > MAX_CHAINS {
                return None;
            }
        } else {
            for j in bits(covers[top]) {
                stack.push((j, chain | 1 << j));
            }
        }
    }
    Some(chains)
}

fn order_complex_homology(
    items: &[&ExponentVector],
    field: Field,
) -> Result<Option<BTreeMap<i32, usize>>> {
    if items.len() > MAX_INTERVAL {
        return Ok(None);
    }
    if items.is_empty() {
        return homology_of_facets(&[0], field, false).map(Some);
    }
    match maximal_chains(items) {
        Some(chains) => homology_of_facets(&chains, field, false).map(Some),
        None => Ok(None),
    }
}

fn koszul_homology(ideal: &MonomialIdeal, b: &ExponentVector, field: Field) -> Result<BTreeMap<i32, usize>> {
    let support: Vec<usize> = bits(b.support_mask()).collect();
    if support.len() > MAX_KOSZUL_SUPPORT {
        return Err(Error::Capacity(format!(
            "Koszul complex on {} variables exceeds {MAX_KOSZUL_SUPPORT}",
            support.len()
        )));
    }
    let mut faces = Vec::new();
    let mut shifted = b.entries().to_vec();
    for sub in 0u64..1 << support.len() {
        for (k, &i) in support.iter().enumerate() {
            shifted[i] = b.entries()[i] - (sub >> k & 1) as u32;
        }
        if ideal.contains(&ExponentVector::new(shifted.clone())) {
            faces.push(sub);
        }
    }
    // keep the maximal faces
    let facets: Vec<u64> = faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&g| g != f && g & f == f))
        .collect();
    homology_of_facets(&facets, field, false)
}

/// Reduced Euler characteristic of the order complex of `items`, by chain counting.
pub fn interval_euler_characteristic(items: &[&ExponentVector]) -> i64 {
    let above = above_masks(items);
    // chains[i] = signed count of chains with minimum i
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(items[i].degree()));
    let mut signed = vec![0i64; items.len()];
    for &i in &order {
        // a chain starting at i: {i} alone, or i below a chain starting higher
        let rest: i64 = bits(above[i]).map(|j| signed[j]).sum();
        signed[i] = 1 - rest;
    }
    // χ̃ = -1 + Σ_k (-1)^k f_k
    -1 + signed.iter().sum::<i64>()
}

pub fn betti_numbers(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_numbers_via(ideal, field, Route::Auto)
}

pub fn betti_numbers_via(ideal: &MonomialIdeal, field: Field, route: Route) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal)?;
    let mut entries = BTreeMap::new();
    for b in &lattice.elements()[1..] {
        let dims = match route {
            Route::Koszul => koszul_homology(ideal, b, field)?,
            Route::OrderComplex => order_complex_homology(&lattice.open_interval(b), field)?
                .ok_or_else(|| Error::Capacity("order complex of an lcm interval too large".into()))?,
            Route::Auto => match order_complex_homology(&lattice.open_interval(b), field)? {
                Some(d) => d,
                None => koszul_homology(ideal, b, field)?,
            },
        };
        for (d, h) in dims {
            if h > 0 {
                entries.insert(((d + 1) as usize, b.clone()), h);
            }
        }
    }
    Ok(BettiTable { entries, field })
}

/// `reg(I)`.
pub fn reg_oracle(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    Ok(betti_numbers(ideal, field)?.regularity())
}

/// `pd(S/I)`.
pub fn pd_oracle(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    Ok(betti_numbers(ideal, field)?.projective_dimension() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::ideal::{cover_ideal, edge_ideal, symbolic_generators};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            (1..=n as u32).collect(),
            gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn lattice_examples() {
        let l = lcm_lattice(&ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]])).unwrap();
        let e: Vec<&[u32]> = l.elements().iter().map(|v| v.entries()).collect();
        assert_eq!(e, vec![&[0, 0, 0, 0][..], &[0, 1, 0, 1], &[1, 0, 1, 0], &[1, 1, 1, 1]]);
        assert_eq!(lcm_lattice(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap().len(), 4);
        let l = lcm_lattice(&cover_ideal(&families::cycle(3))).unwrap();
        assert_eq!(l.atoms().len(), 3);
        // bottom, 3 atoms, top
        assert_eq!(l.len(), 5);
        assert!(matches!(lcm_lattice(&ideal(2, &[&[0, 0]])), Err(Error::DegenerateIdeal(_))));
        assert!(matches!(lcm_lattice(&ideal(2, &[])), Err(Error::DegenerateIdeal(_))));
    }

    #[test]
    fn koszul_examples() {
        let b = betti_numbers(&ideal(2, &[&[1, 0], &[0, 1]]), Field::Rational).unwrap();
        assert_eq!(b.totals(), vec![2, 1]);
        assert_eq!(b.get(1, &ExponentVector::new(vec![1, 1])), 1);
        let ci = betti_numbers(&ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]), Field::Rational).unwrap();
        assert_eq!(ci.graded(), BTreeMap::from([((0, 2), 2), ((1, 4), 1)]));
        assert_eq!(ci.regularity(), 3);
        let m3 = betti_numbers(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), Field::Rational).unwrap();
        assert_eq!(m3.totals(), vec![3, 3, 1]);
    }

    #[test]
    fn regularity_examples() {
        let q = Field::Rational;
        assert_eq!(reg_oracle(&cover_ideal(&families::cycle(5)), q).unwrap(), 3);
        assert_eq!(reg_oracle(&cover_ideal(&families::cycle(4)), q).unwrap(), 3);
        assert_eq!(reg_oracle(&cover_ideal(&families::path(2)), q).unwrap(), 1);
        let c3 = families::cycle(3);
        assert_eq!(reg_oracle(&symbolic_generators(&c3, 2).unwrap(), q).unwrap(), 4);
        assert_eq!(pd_oracle(&edge_ideal(&families::path(2)), q).unwrap(), 1);
        assert_eq!(pd_oracle(&edge_ideal(&families::cycle(4)), q).unwrap(), 3);
        assert_eq!(pd_oracle(&edge_ideal(&families::cycle(7)), q).unwrap(), 5);
    }

    #[test]
    fn routes_agree() {
        let small = [
            cover_ideal(&families::cycle(5)),
            edge_ideal(&families::cycle(5)),
            symbolic_generators(&families::cycle(3), 2).unwrap(),
            symbolic_generators(&families::cycle(4), 2).unwrap(),
        ];
        for i in &small {
            let a = betti_numbers_via(i, Field::Rational, Route::OrderComplex).unwrap();
            let b = betti_numbers_via(i, Field::Rational, Route::Koszul).unwrap();
            assert_eq!(a, b);
        }
        let large = [
            cover_ideal(&families::cycle(6)),
            edge_ideal(&families::figure1()),
            symbolic_generators(&families::complete(4), 2).unwrap(),
        ];
        for i in &large {
            let a = betti_numbers_via(i, Field::Rational, Route::Auto).unwrap();
            let b = betti_numbers_via(i, Field::Rational, Route::Koszul).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn alternating_sums_match_euler_characteristic() {
        let i = symbolic_generators(&families::cycle(5), 2).unwrap();
        let table = betti_numbers(&i, Field::Rational).unwrap();
        let lattice = lcm_lattice(&i).unwrap();
        for b in &lattice.elements()[1..] {
            let sum: i64 = (0..=i.ambient().len())
                .map(|k| if k % 2 == 0 { 1 } else { -1 } * table.get(k, b) as i64)
                .sum();
            assert_eq!(sum, -interval_euler_characteristic(&lattice.open_interval(b)), "{b:?}");
        }
    }

    #[test]
    fn fields_agree_without_torsion() {
        for g in [families::cycle(5), families::complete(4), families::star(3)] {
            let i = cover_ideal(&g);
            assert_eq!(
                betti_numbers(&i, Field::Rational).unwrap().graded(),
                betti_numbers(&i, Field::prime(2).unwrap()).unwrap().graded()
            );
        }
    }
}
