//! Simplicial complexes on labelled ground sets and their reduced homology.
//!
//! A complex is stored through its facets. The void complex has no facets; the
//! empty complex has the single facet `∅`. Ground-set vertices that lie in no
//! facet are still part of the complex's ground set.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hypergraph::{compress, full_mask, Hypergraph, Vertex, MAX_VERTICES};
use crate::linalg::{self, SparseRow};

/// Upper bound on the number of faces materialised for one homology computation.
pub const MAX_FACES: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: Vec<Vertex>,
    // sorted antichain of masks over ground positions
    facets: Vec<u64>,
}

/// Reduced Betti numbers `dim H̃_i` for `i = -1 ..= dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub dims: BTreeMap<i32, usize>,
    pub field: Field,
}

impl HomologyProfile {
    pub fn is_acyclic(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    /// Largest index with nonzero homology, `None` when acyclic.
    pub fn hdim(&self) -> Option<i32> {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&i, _)| i)
            .max()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&i, &d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

impl SimplicialComplex {
    pub fn new<G, F, I>(ground: G, facets: F) -> Result<SimplicialComplex>
    where
        G: IntoIterator<Item = Vertex>,
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let (ground, masks) = Self::collect(ground, facets)?;
        for &a in &masks {
            if masks.iter().any(|&b| a != b && a & b == a) {
                return Err(Error::NotAnAntichain);
            }
        }
        Ok(Self::from_masks(ground, masks))
    }

    /// Complex generated by arbitrary faces (non-maximal ones are discarded).
    pub fn generated_by<G, F, I>(ground: G, faces: F) -> Result<SimplicialComplex>
    where
        G: IntoIterator<Item = Vertex>,
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let (ground, masks) = Self::collect(ground, faces)?;
        Ok(Self::from_masks(ground, masks))
    }

    fn collect<G, F, I>(ground: G, facets: F) -> Result<(Vec<Vertex>, Vec<u64>)>
    where
        G: IntoIterator<Item = Vertex>,
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let mut ground: Vec<Vertex> = ground.into_iter().collect();
        ground.sort_unstable();
        ground.dedup();
        if ground.len() > MAX_VERTICES {
            return Err(Error::Capacity(format!("ground set of {} vertices", ground.len())));
        }
        let mut masks = Vec::new();
        for facet in facets {
            let mut m = 0u64;
            for v in facet {
                let i = ground.binary_search(&v).map_err(|_| Error::NotASubset(v))?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        Ok((ground, masks))
    }

    pub(crate) fn from_masks(ground: Vec<Vertex>, mut faces: Vec<u64>) -> SimplicialComplex {
        faces.sort_unstable();
        faces.dedup();
        let facets = maximal(&faces);
        SimplicialComplex { ground, facets }
    }

    pub fn void<G: IntoIterator<Item = Vertex>>(ground: G) -> SimplicialComplex {
        let mut ground: Vec<Vertex> = ground.into_iter().collect();
        ground.sort_unstable();
        ground.dedup();
        SimplicialComplex { ground, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty<G: IntoIterator<Item = Vertex>>(ground: G) -> SimplicialComplex {
        let mut c = Self::void(ground);
        c.facets.push(0);
        c
    }

    /// Stanley–Reisner complex of the cover ideal: facets are complements of edges.
    pub fn cover_complex(h: &Hypergraph) -> SimplicialComplex {
        let full = h.full_mask();
        SimplicialComplex {
            ground: h.vertices().to_vec(),
            facets: cover_facets(full, h.edge_masks()),
        }
    }

    pub fn ground(&self) -> &[Vertex] {
        &self.ground
    }

    pub fn facets(&self) -> Vec<Vec<Vertex>> {
        self.facets.iter().map(|&m| self.labels_of(m)).collect()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    fn labels_of(&self, mask: u64) -> Vec<Vertex> {
        bits(mask).map(|i| self.ground[i]).collect()
    }

    fn mask_of(&self, set: &[Vertex]) -> Result<u64> {
        set.iter().try_fold(0u64, |m, v| {
            let i = self.ground.binary_search(v).map_err(|_| Error::NotASubset(*v))?;
            Ok(m | 1 << i)
        })
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// Dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        match self.mask_of(face) {
            Ok(m) => self.facets.iter().any(|&f| f & m == m),
            Err(_) => false,
        }
    }

    /// Face counts `f_{-1}, f_0, ..., f_dim` (index `i + 1` holds `f_i`).
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        let levels = face_levels(&self.facets)?;
        let mut f = Vec::with_capacity(levels.len() + 1);
        if !self.is_void() {
            f.push(1);
            f.extend(levels.iter().map(Vec::len));
        }
        Ok(f)
    }

    /// `Σ (-1)^i f_i` over `i >= -1`.
    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        Ok(self
            .f_vector()?
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum())
    }

    pub fn link(&self, face: &[Vertex]) -> Result<SimplicialComplex> {
        let f = self.mask_of(face)?;
        if !self.facets.iter().any(|&g| g & f == f) {
            return Err(Error::NotAFace);
        }
        let keep = full_mask(self.ground.len()) & !f;
        let positions: Vec<usize> = bits(keep).collect();
        let facets = self
            .facets
            .iter()
            .filter(|&&g| g & f == f)
            .map(|&g| compress(g & !f, &positions))
            .collect();
        Ok(Self::from_masks(
            positions.iter().map(|&i| self.ground[i]).collect(),
            facets,
        ))
    }

    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if let Some(v) = other.ground.iter().find(|v| self.ground.binary_search(v).is_ok()) {
            return Err(Error::OverlappingGroundSets(*v));
        }
        let mut ground: Vec<Vertex> = self.ground.iter().chain(&other.ground).copied().collect();
        ground.sort_unstable();
        if ground.len() > MAX_VERTICES {
            return Err(Error::Capacity(format!("ground set of {} vertices", ground.len())));
        }
        let index = |v: &Vertex| ground.binary_search(v).expect("present");
        let relabel = |c: &SimplicialComplex, m: u64| {
            bits(m).fold(0u64, |acc, i| acc | 1 << index(&c.ground[i]))
        };
        let mut facets = Vec::new();
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(relabel(self, a) | relabel(other, b));
            }
        }
        Ok(Self::from_masks(ground, facets))
    }

    pub fn delete_facet(&self, facet: &[Vertex]) -> Result<SimplicialComplex> {
        let f = self.mask_of(facet)?;
        let pos = self.facets.iter().position(|&g| g == f).ok_or(Error::NotAFacet)?;
        let mut facets = self.facets.clone();
        facets.remove(pos);
        Ok(SimplicialComplex { ground: self.ground.clone(), facets })
    }

    /// Some vertex lying in every facet; such a complex is a cone, hence acyclic.
    pub fn cone_apex(&self) -> Option<Vertex> {
        let common = cone_mask(&self.facets);
        (common != 0).then(|| self.ground[common.trailing_zeros() as usize])
    }

    pub fn reduced_homology(&self, field: Field) -> Result<HomologyProfile> {
        Ok(HomologyProfile {
            dims: homology_of_facets(&self.facets, field, false)?,
            field,
        })
    }

    /// Homological dimension; `None` when acyclic.
    pub fn hdim(&self, field: Field) -> Result<Option<i32>> {
        hdim_of_facets(&self.facets, field)
    }
}

pub(crate) fn cover_facets(full: u64, edges: &[u64]) -> Vec<u64> {
    let mut f: Vec<u64> = edges.iter().map(|&e| full & !e).collect();
    f.sort_unstable();
    f
}

pub(crate) fn cone_mask(facets: &[u64]) -> u64 {
    if facets.is_empty() {
        0
    } else {
        facets.iter().fold(u64::MAX, |acc, &f| acc & f)
    }
}

fn maximal(sorted: &[u64]) -> Vec<u64> {
    sorted
        .iter()
        .copied()
        .filter(|&a| !sorted.iter().any(|&b| a != b && a & b == a))
        .collect()
}

/// Faces of each dimension `0..=dim`, generated downward from the facets.
fn face_levels(facets: &[u64]) -> Result<Vec<Vec<u64>>> {
    let top = match facets.iter().map(|f| f.count_ones()).max() {
        None | Some(0) => return Ok(Vec::new()),
        Some(k) => k as usize - 1,
    };
    let mut levels: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    let mut current: HashSet<u64> = facets
        .iter()
        .copied()
        .filter(|f| f.count_ones() as usize == top + 1)
        .collect();
    let mut total = 0usize;
    for d in (0..=top).rev() {
        let mut level: Vec<u64> = current.drain().collect();
        level.sort_unstable();
        total += level.len();
        if total > MAX_FACES {
            return Err(Error::Capacity(format!("more than {MAX_FACES} faces")));
        }
        if d > 0 {
            for &face in &level {
                for i in bits(face) {
                    current.insert(face & !(1 << i));
                }
            }
            current.extend(facets.iter().copied().filter(|f| f.count_ones() as usize == d));
        }
        levels[d] = level;
    }
    Ok(levels)
}

fn boundary_rank(faces: &[u64], lower: &[u64], field: Field) -> Result<usize> {
    let index: HashMap<u64, u32> = lower.iter().enumerate().map(|(k, &f)| (f, k as u32)).collect();
    let rows: Vec<SparseRow> = faces
        .iter()
        .map(|&face| {
            let mut row: SparseRow = bits(face)
                .enumerate()
                .map(|(pos, i)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (index[&(face & !(1 << i))], sign)
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    linalg::rank(rows, field)
}

/// Reduced homology dimensions from facet masks, computed top-down.
/// With `first_only`, stops at the highest nonzero group.
pub(crate) fn homology_of_facets(
    facets: &[u64],
    field: Field,
    first_only: bool,
) -> Result<BTreeMap<i32, usize>> {
    let mut dims = BTreeMap::new();
    if facets.is_empty() {
        return Ok(dims);
    }
    let levels = face_levels(facets)?;
    let f = |d: i32| -> usize {
        if d == -1 {
            1
        } else {
            levels.get(d as usize).map_or(0, Vec::len)
        }
    };
    let top = levels.len() as i32 - 1;
    // rank of ∂_{d+1}, starting above the top dimension
    let mut rank_above = 0usize;
    for d in (-1..=top).rev() {
        let rank_here = match d {
            -1 => 0,
            0 => usize::from(f(0) > 0),
            _ => boundary_rank(&levels[d as usize], &levels[d as usize - 1], field)?,
        };
        let h = f(d) - rank_here - rank_above;
        dims.insert(d, h);
        if first_only && h > 0 {
            break;
        }
        rank_above = rank_here;
    }
    Ok(dims)
}

pub(crate) fn hdim_of_facets(facets: &[u64], field: Field) -> Result<Option<i32>> {
    if facets.is_empty() || cone_mask(facets) != 0 {
        return Ok(None);
    }
    let dims = homology_of_facets(facets, field, true)?;
    Ok(dims.iter().filter(|(_, &h)| h > 0).map(|(&d, _)| d).max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    const Q: Field = Field::Rational;

    /// All faces straight from the definition: subsets of some facet.
    fn all_faces(c: &SimplicialComplex) -> HashSet<Vec<Vertex>> {
        let n = c.ground().len();
        (0..1u64 << n)
            .filter(|&m| c.facet_masks().iter().any(|&f| f & m == m))
            .map(|m| c.labels_of(m))
            .collect()
    }

    #[test]
    fn cover_complex_examples() {
        let k2 = families::path(2);
        assert!(SimplicialComplex::cover_complex(&k2).is_empty_complex());
        let c4 = SimplicialComplex::cover_complex(&families::cycle(4));
        let mut facets = c4.facets();
        facets.sort();
        assert_eq!(facets, vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]);
        let edgeless = Hypergraph::new([1, 2], Vec::<Vec<Vertex>>::new()).unwrap();
        assert!(SimplicialComplex::cover_complex(&edgeless).is_void());
    }

    #[test]
    fn link_examples() {
        let c4 = SimplicialComplex::cover_complex(&families::cycle(4));
        assert_eq!(c4.link(&[]).unwrap(), c4);
        let l = c4.link(&[1]).unwrap();
        assert_eq!(l.ground(), &[2, 3, 4]);
        let mut facets = l.facets();
        facets.sort();
        // brute force: faces G of c4 with 1 ∉ G and G ∪ {1} a face
        let expected: HashSet<Vec<Vertex>> = all_faces(&c4)
            .into_iter()
            .filter(|g| !g.contains(&1))
            .filter(|g| {
                let mut h = g.clone();
                h.push(1);
                h.sort();
                c4.contains_face(&h)
            })
            .collect();
        assert_eq!(all_faces(&l), expected);
        assert_eq!(facets, vec![vec![2], vec![4]]);
        assert!(matches!(c4.link(&[1, 3]), Err(Error::NotAFace)));
    }

    #[test]
    fn join_examples() {
        let point = SimplicialComplex::new([10], [[10]]).unwrap();
        let two_points = SimplicialComplex::new([1, 2], [[1], [2]]).unwrap();
        let cone = two_points.join(&point).unwrap();
        assert_eq!(cone.cone_apex(), Some(10));
        assert!(cone.reduced_homology(Q).unwrap().is_acyclic());

        let other = SimplicialComplex::new([3, 4], [[3], [4]]).unwrap();
        let square = two_points.join(&other).unwrap();
        let h = square.reduced_homology(Q).unwrap();
        assert_eq!(h.dims, BTreeMap::from([(-1, 0), (0, 0), (1, 1)]));
        assert_eq!(square.hdim(Q).unwrap(), Some(1));

        let void = SimplicialComplex::void([7]);
        assert!(two_points.join(&void).unwrap().is_void());
        assert!(matches!(
            two_points.join(&two_points),
            Err(Error::OverlappingGroundSets(1))
        ));
    }

    #[test]
    fn delete_facet_examples() {
        let point = SimplicialComplex::new([1, 2], [[1]]).unwrap();
        let d = point.delete_facet(&[1]).unwrap();
        assert!(d.is_void());
        assert_eq!(d.ground(), &[1, 2]);
        let c3 = SimplicialComplex::cover_complex(&families::cycle(3));
        let mut f = c3.delete_facet(&[3]).unwrap().facets();
        f.sort();
        assert_eq!(f, vec![vec![1], vec![2]]);
        assert!(matches!(c3.delete_facet(&[1, 2]), Err(Error::NotAFacet)));
    }

    #[test]
    fn homology_examples() {
        let empty = SimplicialComplex::empty([1]);
        let h = empty.reduced_homology(Q).unwrap();
        assert_eq!(h.dims, BTreeMap::from([(-1, 1)]));
        assert_eq!(empty.hdim(Q).unwrap(), Some(-1));

        let circle = SimplicialComplex::new([1, 2, 3], [[1, 2], [2, 3], [1, 3]]).unwrap();
        assert_eq!(
            circle.reduced_homology(Q).unwrap().dims,
            BTreeMap::from([(-1, 0), (0, 0), (1, 1)])
        );

        let void = SimplicialComplex::void([1, 2]);
        assert!(void.reduced_homology(Q).unwrap().is_acyclic());
        assert_eq!(void.hdim(Q).unwrap(), None);

        let c6 = SimplicialComplex::cover_complex(&families::cycle(6));
        let h = c6.reduced_homology(Q).unwrap();
        assert_eq!(h.hdim(), Some(2));
        assert!(h.dims[&2] > 0);
    }

    #[test]
    fn hdim_of_cycles() {
        // τ_max(C_n) - hdim is 1 when n ≡ 1 (mod 3) and 2 otherwise. The closed
        // form ⌊(2n-4)/3⌋ agrees with this except when n ≡ 2 (mod 3).
        for n in 3..=12usize {
            let c = SimplicialComplex::cover_complex(&families::cycle(n));
            let tau = (2 * n / 3) as i32;
            let expected = if n % 3 == 1 { tau - 1 } else { tau - 2 };
            assert_eq!(c.hdim(Q).unwrap(), Some(expected), "C_{n}");
            assert_eq!(c.hdim(Field::Prime(2)).unwrap(), Some(expected));
            let closed_form = ((2 * n - 4) / 3) as i32;
            assert_eq!(closed_form == expected, n % 3 != 2, "C_{n}");
        }
    }

    #[test]
    fn c5_cover_complex_is_a_mobius_band() {
        // five consecutive triples of the 5-cycle: homotopy equivalent to a circle
        let c = SimplicialComplex::cover_complex(&families::cycle(5));
        assert_eq!(c.facets().len(), 5);
        assert_eq!(
            c.reduced_homology(Q).unwrap().dims,
            BTreeMap::from([(-1, 0), (0, 0), (1, 1), (2, 0)])
        );
    }

    #[test]
    fn figure2_cover_complex_is_acyclic() {
        let c = SimplicialComplex::cover_complex(&families::figure2());
        assert_eq!(c.hdim(Q).unwrap(), None);
        assert!(c.reduced_homology(Q).unwrap().is_acyclic());
    }

    #[test]
    fn cone_apex_examples() {
        let g = Hypergraph::new([1, 2, 3], vec![vec![1, 2]]).unwrap();
        assert_eq!(SimplicialComplex::cover_complex(&g).cone_apex(), Some(3));
        let c4 = SimplicialComplex::cover_complex(&families::cycle(4));
        assert_eq!(c4.cone_apex(), None);
        let point = SimplicialComplex::new([9], [[9]]).unwrap();
        assert_eq!(c4.join(&point).unwrap().cone_apex(), Some(9));
    }

    #[test]
    fn real_projective_plane_torsion() {
        // 6-vertex RP^2: H_1 = Z/2, so homology differs between Q and GF(2)
        let facets = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
        ];
        let rp2 = SimplicialComplex::new(1..=6, facets).unwrap();
        assert!(rp2.reduced_homology(Q).unwrap().is_acyclic());
        let h2 = rp2.reduced_homology(Field::Prime(2)).unwrap();
        assert_eq!(h2.dims[&1], 1);
        assert_eq!(h2.dims[&2], 1);
        assert_eq!(
            h2.euler_characteristic(),
            rp2.reduced_euler_characteristic().unwrap()
        );
    }
}
