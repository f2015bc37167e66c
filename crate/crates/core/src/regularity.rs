//! Regularity of `J(G)^(t)` from `t`-critical pairs:
//!
//! `reg(J(G)^(t)) = 2 + max { hdim Δ(J(H)) + |a^{<t}| : (H, a) t-critical }`.
//!
//! Exponents are canonical, with entries in `{0, ..., t}`; an entry equal to
//! `t` stands for any value `>= t`, since both `H` and `a^{<t}` only see
//! whether an entry reaches `t`.

use std::collections::HashMap;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hypergraph::{CycleStructure, Hypergraph};
use crate::ideal::{advance, ExponentVector};
use crate::polyhedron;
use crate::reduction;
use crate::simplicial::{cone_mask, hdim_of_facets, HomologyProfile, SimplicialComplex};
use crate::bits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub field: Field,
    pub max_vertices: usize,
    pub max_power: u32,
    /// Cap on `(t + 1)^n`, the size of the canonical exponent space.
    pub max_exponents: u64,
    /// Skip exponents with `|a^{<t}| > δ(G)(t-1)`. When off, the bound is
    /// checked on every critical pair instead and violations are reported.
    pub degree_prune: bool,
    pub polyhedron_limit: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            field: Field::Rational,
            max_vertices: 14,
            max_power: 4,
            max_exponents: 1 << 24,
            degree_prune: true,
            polyhedron_limit: polyhedron::DEFAULT_BASIS_LIMIT,
        }
    }
}

impl EngineConfig {
    pub fn with_field(field: Field) -> Self {
        EngineConfig { field, ..Default::default() }
    }

    pub fn without_pruning(self) -> Self {
        EngineConfig { degree_prune: false, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissiblePair {
    pub h: Hypergraph,
    pub a: ExponentVector,
    pub t: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalPair {
    pub pair: AdmissiblePair,
    pub hdim: i32,
    pub homology: HomologyProfile,
    /// `hdim + |a^{<t}|`
    pub contribution: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "delta", rename_all = "lowercase")]
pub enum DegreeBound {
    /// `δ(G)`, as a string `p/q`.
    Delta(String),
    /// Polyhedron enumeration exceeded capacity; only `|a^{<t}| <= n(t-1)` is known.
    Trivial,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationStats {
    pub explored: u64,
    pub critical: u64,
    pub pruned_cone: u64,
    pub pruned_degree: u64,
    pub distinct_subhypergraphs: u64,
    /// Critical exponents with `|a^{<t}| > δ(G)(t-1)`; only filled without pruning.
    pub degree_bound_violations: Vec<ExponentVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularityResult {
    pub value: i64,
    pub t: u32,
    pub field: Field,
    pub witness: CriticalPair,
    pub pairs_explored: u64,
    pub pruned: u64,
    pub degree_bound: DegreeBound,
    pub stats: EnumerationStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CriticalPairs {
    pub pairs: Vec<CriticalPair>,
    pub degree_bound: DegreeBound,
    pub stats: EnumerationStats,
}

/// A critical pair as seen during enumeration, in `G`'s vertex positions.
#[derive(Debug, Clone, Copy)]
pub struct CriticalView<'a> {
    pub a: &'a [u32],
    pub vertex_mask: u64,
    pub edge_mask: u128,
    pub hdim: i32,
    pub truncated_degree: u64,
}

fn check_exponent(g: &Hypergraph, t: u32, a: &ExponentVector) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    if a.len() != g.num_vertices() {
        return Err(Error::ExponentLength { got: a.len(), expected: g.num_vertices() });
    }
    if let Some((i, &v)) = a.entries().iter().enumerate().find(|(_, &v)| v > t) {
        return Err(Error::ExponentOutOfRange { vertex: g.vertices()[i], value: v, cap: t });
    }
    Ok(())
}

/// The `t`-admissible pair of `G` for a canonical exponent `a`.
pub fn admissible_pair(g: &Hypergraph, t: u32, a: &ExponentVector) -> Result<AdmissiblePair> {
    check_exponent(g, t, a)?;
    let vmask = a
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &x)| x < t)
        .fold(0u64, |m, (i, _)| m | 1 << i);
    let edges = g
        .edge_masks()
        .iter()
        .copied()
        .filter(|&e| bits(e).map(|i| a.entries()[i] as u64).sum::<u64>() < t as u64);
    let (labels, edges) = g.restrict(vmask, edges);
    Ok(AdmissiblePair {
        h: Hypergraph::from_masks(labels, edges),
        a: a.clone(),
        t,
    })
}

/// `(H, s a)` at level `s(t-1)+1`, with the exponent recapped.
pub fn scale_pair(g: &Hypergraph, pair: &AdmissiblePair, s: u32) -> Result<AdmissiblePair> {
    let level = s * (pair.t - 1) + 1;
    admissible_pair(g, level, &pair.a.scaled(s).capped(level))
}

/// Critical test for a single admissible pair.
pub fn critical_pair(pair: AdmissiblePair, field: Field) -> Result<Option<CriticalPair>> {
    let homology = SimplicialComplex::cover_complex(&pair.h).reduced_homology(field)?;
    Ok(homology.hdim().map(|hdim| {
        let contribution = hdim as i64 + pair.a.truncated(pair.t).degree() as i64;
        CriticalPair { pair, hdim, homology, contribution }
    }))
}

fn degree_bound(g: &Hypergraph, config: &EngineConfig) -> Result<(DegreeBound, Option<Rational64>)> {
    match polyhedron::delta_with_limit(g, config.polyhedron_limit) {
        Ok(d) => Ok((DegreeBound::Delta(d.to_string()), Some(d))),
        Err(Error::Capacity(_)) => Ok((DegreeBound::Trivial, None)),
        Err(e) => Err(e),
    }
}

fn check_capacity(g: &Hypergraph, t: u32, config: &EngineConfig) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let n = g.num_vertices();
    if n > config.max_vertices {
        return Err(Error::Capacity(format!(
            "{n} vertices exceed the limit {}",
            config.max_vertices
        )));
    }
    if t > config.max_power {
        return Err(Error::Capacity(format!("power {t} exceeds the limit {}", config.max_power)));
    }
    if g.num_edges() > 128 {
        return Err(Error::Capacity(format!("{} edges, at most 128 supported", g.num_edges())));
    }
    let space = (t as u64 + 1).checked_pow(n as u32).unwrap_or(u64::MAX);
    if space > config.max_exponents {
        return Err(Error::Capacity(format!(
            "{}^{n} canonical exponents exceed the limit {}",
            t + 1,
            config.max_exponents
        )));
    }
    Ok(())
}

/// Streams every `t`-critical pair of `G` (modulo degree-bound pruning) to `visit`.
///
/// Outer loop over the capped set `F = {i : a_i = t}`, inner loop over
/// `{0, ..., t-1}` on the rest. Homology is memoised per `(V(H), E(H))`.
pub fn for_each_critical_pair<V>(
    g: &Hypergraph,
    t: u32,
    config: &EngineConfig,
    mut visit: V,
) -> Result<(EnumerationStats, DegreeBound)>
where
    V: FnMut(&CriticalView<'_>) -> Result<()>,
{
    check_capacity(g, t, config)?;
    let (bound_kind, delta) = degree_bound(g, config)?;
    let n = g.num_vertices();
    let edges = g.edge_masks();
    let full = g.full_mask();
    // |a^{<t}| * den <= num * (t-1)
    let exceeds_bound = |deg: u64| match delta {
        Some(d) => (deg as i128) * (*d.denom() as i128) > (*d.numer() as i128) * (t as i128 - 1),
        None => false,
    };

    let mut stats = EnumerationStats::default();
    let mut memo: HashMap<(u64, u128), Option<i32>> = HashMap::new();
    let mut a = vec![0u32; n];

    for capped in 0..=full {
        let rest: Vec<usize> = bits(full & !capped).collect();
        // edges meeting the capped set already have sum >= t
        let inner: Vec<(usize, u64)> = edges
            .iter()
            .enumerate()
            .filter(|(_, &e)| e & capped == 0)
            .map(|(k, &e)| (k, e))
            .collect();
        for (i, x) in a.iter_mut().enumerate() {
            *x = if capped >> i & 1 == 1 { t } else { 0 };
        }
        let mut digits = vec![0u32; rest.len()];
        loop {
            for (d, &i) in digits.iter().zip(&rest) {
                a[i] = *d;
            }
            stats.explored += 1;
            let truncated_degree: u64 = digits.iter().map(|&d| d as u64).sum();
            let vertex_mask = full & !capped;

            let prune_degree = exceeds_bound(truncated_degree);
            if config.degree_prune && prune_degree {
                stats.pruned_degree += 1;
            } else {
                let mut edge_mask = 0u128;
                let mut covered = 0u64;
                for &(k, e) in &inner {
                    let sum: u64 = bits(e).map(|i| a[i] as u64).sum();
                    if sum < t as u64 {
                        edge_mask |= 1 << k;
                        covered |= e;
                    }
                }
                // an isolated vertex of H lies in every facet: cone
                if covered != vertex_mask {
                    stats.pruned_cone += 1;
                } else {
                    let hdim = match memo.get(&(vertex_mask, edge_mask)) {
                        Some(&h) => h,
                        None => {
                            let facets: Vec<u64> = bits(edge_mask as u64)
                                .chain(bits((edge_mask >> 64) as u64).map(|k| k + 64))
                                .map(|k| vertex_mask & !edges[k])
                                .collect();
                            let h = if cone_mask(&facets) != 0 {
                                None
                            } else {
                                hdim_of_facets(&facets, config.field)?
                            };
                            memo.insert((vertex_mask, edge_mask), h);
                            h
                        }
                    };
                    if let Some(hdim) = hdim {
                        stats.critical += 1;
                        if prune_degree {
                            stats
                                .degree_bound_violations
                                .push(ExponentVector::new(a.clone()));
                        }
                        visit(&CriticalView {
                            a: &a,
                            vertex_mask,
                            edge_mask,
                            hdim,
                            truncated_degree,
                        })?;
                    }
                }
            }
            if !advance(&mut digits, t - 1) {
                break;
            }
        }
    }
    stats.distinct_subhypergraphs = memo.len() as u64;
    Ok((stats, bound_kind))
}

fn materialize(g: &Hypergraph, t: u32, view: &CriticalView<'_>, field: Field) -> Result<CriticalPair> {
    let pair = admissible_pair(g, t, &ExponentVector::new(view.a.to_vec()))?;
    let critical = critical_pair(pair, field)?
        .ok_or_else(|| Error::Internal("memoised critical pair is acyclic".into()))?;
    if critical.hdim != view.hdim {
        return Err(Error::Internal("homology short-circuit disagrees with full profile".into()));
    }
    Ok(critical)
}

/// Every `t`-critical pair with its homology profile.
pub fn enumerate_critical_pairs(g: &Hypergraph, t: u32, config: &EngineConfig) -> Result<CriticalPairs> {
    let mut pairs = Vec::new();
    let (stats, degree_bound) = for_each_critical_pair(g, t, config, |view| {
        pairs.push(materialize(g, t, view, config.field)?);
        Ok(())
    })?;
    Ok(CriticalPairs { pairs, degree_bound, stats })
}

/// `reg(S/I) + 1 = reg(I)`; the only place the quotient/ideal shift happens.
fn ideal_regularity(quotient_regularity: i64) -> i64 {
    quotient_regularity + 1
}

/// `reg(J(G)^(t))` with a witness critical pair.
pub fn reg_symbolic(g: &Hypergraph, t: u32, config: &EngineConfig) -> Result<RegularityResult> {
    let mut best: Option<(i64, Vec<u32>, u64, u128, i32)> = None;
    let (stats, degree_bound) = for_each_critical_pair(g, t, config, |view| {
        let c = view.hdim as i64 + view.truncated_degree as i64;
        if best.as_ref().is_none_or(|b| c > b.0) {
            best = Some((c, view.a.to_vec(), view.vertex_mask, view.edge_mask, view.hdim));
        }
        Ok(())
    })?;
    let (contribution, a, vertex_mask, edge_mask, hdim) =
        best.ok_or_else(|| Error::Internal("no critical pair for a hypergraph with edges".into()))?;
    let view = CriticalView {
        a: &a,
        vertex_mask,
        edge_mask,
        hdim,
        truncated_degree: (contribution - hdim as i64) as u64,
    };
    let witness = materialize(g, t, &view, config.field)?;
    // reg(S/I) = max |a^{<t}| + i over nonzero H̃_{i-1}, so i = hdim + 1
    let quotient = contribution + 1;
    Ok(RegularityResult {
        value: ideal_regularity(quotient),
        t,
        field: config.field,
        witness,
        pairs_explored: stats.explored,
        pruned: stats.pruned_cone + stats.pruned_degree,
        degree_bound,
        stats,
    })
}

/// `reg(J(G))`.
pub fn reg_cover(g: &Hypergraph, config: &EngineConfig) -> Result<RegularityResult> {
    reg_symbolic(g, 1, config)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub value: i64,
    pub rule: &'static str,
}

/// Closed-form regularity for the families with known formulas:
/// unicyclic graphs at `t = 1`, cycles at every `t`, and unicyclic graphs
/// with `δ(G) = τ_max(G)` (in particular bipartite ones) at `t >= 2`.
pub fn theorem_formula(g: &Hypergraph, t: u32) -> Result<Option<Prediction>> {
    if t == 0 {
        return Err(Error::ZeroPower);
    }
    if !g.is_graph() || g.is_edgeless() {
        return Ok(None);
    }
    let CycleStructure::Unicyclic { length, .. } = g.cycle_structure()? else {
        return Ok(None);
    };
    let tau = g.tau_max() as i64;
    let t = t as i64;
    let is_cycle = length == g.num_vertices();
    if t == 1 {
        let reducible = is_cycle || reduction::reducible_to_cycle(g)?.is_some();
        let bump = i64::from(length % 3 == 1 && reducible);
        return Ok(Some(Prediction { value: tau + bump, rule: "unicyclic-cover" }));
    }
    if is_cycle {
        let value = if length == 4 { 2 * t + 1 } else { (2 * length as i64 / 3) * t };
        return Ok(Some(Prediction { value, rule: "cycle-power" }));
    }
    let rule = if g.is_bipartite()? {
        "bipartite-unicyclic-power"
    } else if polyhedron::delta(g)? == Rational64::from_integer(tau) {
        "unicyclic-delta-equals-tau-power"
    } else {
        return Ok(None);
    };
    let reducible_c4 = length == 4 && reduction::reducible_to_cycle(g)?.is_some();
    Ok(Some(Prediction { value: t * tau + i64::from(reducible_c4), rule }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::oracle;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn admissible_pair_examples() {
        let c3 = families::cycle(3);
        assert_eq!(admissible_pair(&c3, 2, &ev(&[0, 0, 0])).unwrap().h, c3);
        let p = admissible_pair(&c3, 2, &ev(&[1, 1, 0])).unwrap();
        assert_eq!(p.h.vertices(), &[1, 2, 3]);
        assert_eq!(p.h.edges(), vec![vec![1, 3], vec![2, 3]]);
        let c4 = families::cycle(4);
        let p = admissible_pair(&c4, 1, &ev(&[1, 0, 0, 0])).unwrap();
        assert_eq!(p.h.vertices(), &[2, 3, 4]);
        assert_eq!(p.h.edges(), vec![vec![2, 3], vec![3, 4]]);
        assert!(matches!(
            admissible_pair(&c3, 2, &ev(&[3, 0, 0])),
            Err(Error::ExponentOutOfRange { value: 3, cap: 2, .. })
        ));
    }

    #[test]
    fn critical_pair_examples() {
        let k2 = families::path(2);
        let pairs = enumerate_critical_pairs(&k2, 1, &cfg()).unwrap();
        assert_eq!(pairs.pairs.len(), 1);
        assert_eq!(pairs.pairs[0].pair.a, ev(&[0, 0]));
        assert_eq!(pairs.pairs[0].hdim, -1);
        assert_eq!(pairs.pairs[0].contribution, -1);

        let c3 = families::cycle(3);
        let pairs = enumerate_critical_pairs(&c3, 2, &cfg()).unwrap();
        let p = pairs.pairs.iter().find(|p| p.pair.a == ev(&[1, 1, 0])).unwrap();
        assert_eq!(p.hdim, 0);
        assert_eq!(p.contribution, 2);

        let c4 = families::cycle(4);
        let pairs = enumerate_critical_pairs(&c4, 1, &cfg()).unwrap();
        let p = pairs.pairs.iter().find(|p| p.pair.a == ev(&[0, 0, 0, 0])).unwrap();
        assert_eq!(p.hdim, 1);
        assert_eq!(p.contribution, 1);
    }

    #[test]
    fn pruning_is_sound() {
        for g in [families::cycle(5), families::figure1(), families::complete(4)] {
            for t in 1..=2 {
                let pruned = enumerate_critical_pairs(&g, t, &cfg()).unwrap();
                let full = enumerate_critical_pairs(&g, t, &cfg().without_pruning()).unwrap();
                assert_eq!(pruned.pairs, full.pairs);
                assert!(full.stats.degree_bound_violations.is_empty());
                // brute force: every canonical exponent, full homology, no shortcuts
                let n = g.num_vertices();
                let mut a = vec![0u32; n];
                let mut expected = Vec::new();
                loop {
                    let pair = admissible_pair(&g, t, &ev(&a)).unwrap();
                    if let Some(c) = critical_pair(pair, Field::Rational).unwrap() {
                        expected.push(c.pair.a.clone());
                    }
                    if !advance(&mut a, t) {
                        break;
                    }
                }
                let mut got: Vec<_> = full.pairs.iter().map(|p| p.pair.a.clone()).collect();
                got.sort();
                expected.sort();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn regularity_examples() {
        let c4 = families::cycle(4);
        for t in 1..=3 {
            assert_eq!(reg_symbolic(&c4, t, &cfg()).unwrap().value, 2 * t as i64 + 1);
        }
        assert_eq!(reg_symbolic(&families::cycle(5), 2, &cfg()).unwrap().value, 6);
        assert_eq!(reg_symbolic(&families::path(2), 1, &cfg()).unwrap().value, 1);
        assert_eq!(reg_cover(&families::cycle(7), &cfg()).unwrap().value, 5);
        assert_eq!(reg_cover(&families::cycle(6), &cfg()).unwrap().value, 4);
        let fig1 = families::figure1();
        assert_eq!(reg_cover(&fig1, &cfg()).unwrap().value, fig1.tau_max() as i64 + 1);
    }

    #[test]
    fn witness_is_consistent() {
        let r = reg_symbolic(&families::cycle(5), 2, &cfg()).unwrap();
        assert_eq!(r.witness.contribution + 2, r.value);
        assert_eq!(r.witness.homology.hdim(), Some(r.witness.hdim));
    }

    #[test]
    fn engine_matches_oracle_on_small_graphs() {
        for n in 2..=5 {
            for g in families::connected_graphs_up_to_iso(n) {
                let engine = reg_cover(&g, &cfg()).unwrap().value;
                let j = crate::ideal::cover_ideal(&g);
                assert_eq!(engine, oracle::reg_oracle(&j, Field::Rational).unwrap(), "{:?}", g.edges());
            }
        }
    }

    #[test]
    fn scaling_preserves_criticality() {
        let g = families::cycle(5);
        let pairs = enumerate_critical_pairs(&g, 2, &cfg()).unwrap();
        for p in pairs.pairs.iter().take(10) {
            for s in 2..=3 {
                let scaled = scale_pair(&g, &p.pair, s).unwrap();
                assert_eq!(scaled.h, p.pair.h);
                assert!(critical_pair(scaled, Field::Rational).unwrap().is_some());
            }
        }
    }

    #[test]
    fn capacity_limits() {
        let g = families::cycle(6);
        let tight = EngineConfig { max_vertices: 5, ..cfg() };
        assert!(matches!(reg_cover(&g, &tight), Err(Error::Capacity(_))));
        let tight = EngineConfig { max_power: 1, ..cfg() };
        assert!(matches!(reg_symbolic(&g, 2, &tight), Err(Error::Capacity(_))));
        let edgeless = Hypergraph::new([1, 2], Vec::<Vec<u32>>::new()).unwrap();
        assert!(matches!(reg_cover(&edgeless, &cfg()), Err(Error::Edgeless)));
    }

    #[test]
    fn theorem_formula_examples() {
        assert_eq!(theorem_formula(&families::cycle(4), 3).unwrap().unwrap().value, 7);
        let fig2 = families::figure2();
        assert_eq!(theorem_formula(&fig2, 1).unwrap().unwrap().value, fig2.tau_max() as i64);
        // C_5 with a pendant leaf at vertex 1
        let g = Hypergraph::from_edges([[1, 2], [2, 3], [3, 4], [4, 5], [5, 1], [1, 6]]).unwrap();
        let p = theorem_formula(&g, 1).unwrap().unwrap();
        assert_eq!(p.value, g.tau_max() as i64);
        assert_eq!(reg_cover(&g, &cfg()).unwrap().value, p.value);
        assert_eq!(theorem_formula(&families::path(3), 1).unwrap(), None);
    }
}
