//! Batch verification of the closed formulas, the reduction lemmas and the
//! engine against the Betti oracle. Instances are generated sequentially from
//! the seed and evaluated in parallel; checks keep generation order.

use covreg_core::families::{self, connected_graphs_up_to_iso, seeded_rng};
use covreg_core::ideal::{cover_ideal, edge_ideal, ordinary_power, symbolic_generators};
use covreg_core::oracle::{pd_oracle, reg_oracle};
use covreg_core::polyhedron::{delta, symbolic_polyhedron};
use covreg_core::reduction::{
    apply_move, compare_strategies, lemma_instance, reducible_to_cycle, verify_reduction_lemma, LemmaId,
};
use covreg_core::regularity::{
    critical_pair, enumerate_critical_pairs, reg_cover, reg_symbolic, scale_pair, theorem_formula,
    AdmissiblePair, EngineConfig,
};
use covreg_core::{Field, Hypergraph, SimplicialComplex};
use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph_io::GraphDocument;
use crate::report::{Check, Verification};

fn doc(name: &str, g: &Hypergraph) -> Value {
    serde_json::to_value(GraphDocument::from_graph(name, g)).expect("documents serialize")
}

/// Small named graphs used by the corpus-wide checks.
pub fn corpus() -> Vec<(String, Hypergraph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for (k, g) in connected_graphs_up_to_iso(n).into_iter().enumerate() {
            out.push((format!("connected:{n}#{k}"), g));
        }
    }
    out.extend((3..=8).map(|n| (format!("cycle:{n}"), families::cycle(n))));
    out.extend((6..=7).map(|n| (format!("path:{n}"), families::path(n))));
    out.extend((4..=5).map(|k| (format!("star:{k}"), families::star(k))));
    out.push(("figure1".into(), families::figure1()));
    out.push(("figure2".into(), families::figure2()));
    out
}

fn floor_div(a: usize, b: usize) -> i64 {
    (a / b) as i64
}

/// `τ_max(C_n) = ⌊2n/3⌋` and `hdim Δ(J(C_n)) = ⌊(2n-4)/3⌋`.
pub fn cycle_invariants(max_n: usize, field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({"kind": "cycle-invariants", "maxN": max_n, "field": field}));
    for n in 3..=max_n {
        let g = families::cycle(n);
        let tau = g.tau_max() as i64;
        let hdim = SimplicialComplex::cover_complex(&g).hdim(field)?;
        let want_tau = floor_div(2 * n, 3);
        let want_hdim = floor_div(2 * n - 4, 3);
        v.checks.push(Check::new(
            format!("tau-max C_{n}"),
            tau == want_tau,
            json!({"computed": tau, "expected": want_tau}),
        ));
        v.checks.push(Check::new(
            format!("hdim C_{n}"),
            hdim == Some(want_hdim as i32),
            json!({"computed": hdim, "expected": want_hdim}),
        ));
    }
    Ok(v)
}

/// `reg(J(C_n)^(t))`: `2t+1` for `n = 4`, `⌊2n/3⌋ t` otherwise (`t >= 2`);
/// the `t = 1` rows use `τ_max + [n ≡ 1 mod 3]`.
pub fn cycles(max_n: usize, max_t: u32, field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({"kind": "cycles", "maxN": max_n, "maxT": max_t, "field": field}));
    let cfg = EngineConfig::with_field(field);
    let cases: Vec<(usize, u32)> = (3..=max_n).flat_map(|n| (1..=max_t).map(move |t| (n, t))).collect();
    let results: Vec<Result<Check>> = cases
        .par_iter()
        .map(|&(n, t)| {
            let g = families::cycle(n);
            let got = reg_symbolic(&g, t, &cfg)?.value;
            let (expected, rule) = if n == 4 {
                (2 * t as i64 + 1, "2t+1")
            } else if t == 1 {
                (g.tau_max() as i64 + i64::from(n % 3 == 1), "tau-max + [n = 1 mod 3]")
            } else {
                (floor_div(2 * n, 3) * t as i64, "floor(2n/3) t")
            };
            Ok(Check::new(
                format!("reg C_{n} t={t}"),
                got == expected,
                json!({"computed": got, "expected": expected, "rule": rule}),
            ))
        })
        .collect();
    for r in results {
        v.checks.push(r?);
    }
    Ok(v)
}

fn random_unicyclic_instances(
    count: usize,
    max_vertices: usize,
    cycle_lengths: &[usize],
    seed: u64,
) -> Vec<Hypergraph> {
    let mut rng = seeded_rng(seed);
    let lengths: Vec<usize> = cycle_lengths.iter().copied().filter(|&c| c <= max_vertices).collect();
    assert!(!lengths.is_empty(), "no admissible cycle length");
    (0..count)
        .map(|_| {
            let c = *lengths.choose(&mut rng).expect("nonempty");
            let n = rng.gen_range(c..=max_vertices);
            families::random_unicyclic(n, c, &mut rng)
        })
        .collect()
}

/// `reg(J(G)) = τ_max(G) + [n ≡ 1 mod 3 and G reducible to C_n]` on random unicyclic graphs.
pub fn theorem1(instances: usize, max_vertices: usize, seed: u64, field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({
        "kind": "theorem1", "instances": instances, "maxVertices": max_vertices, "seed": seed, "field": field,
    }));
    let cfg = EngineConfig::with_field(field);
    let graphs = random_unicyclic_instances(instances, max_vertices, &[3, 4, 5, 6, 7, 8], seed);
    let results: Vec<Result<(Check, Value)>> = graphs
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let got = reg_cover(g, &cfg)?.value;
            let predicted = theorem_formula(g, 1)?;
            let confluence = compare_strategies(g)?;
            let tau = g.tau_max() as i64;
            let passed = predicted.as_ref().map(|p| p.value) == Some(got) && (0..=1).contains(&(got - tau));
            let check = Check::new(
                format!("theorem1#{k}"),
                passed,
                json!({"graph": doc(&format!("instance{k}"), g), "computed": got, "predicted": predicted, "tauMax": tau}),
            );
            let finding = json!({"instance": k, "confluence": confluence, "agrees": confluence.agrees()});
            Ok((check, finding))
        })
        .collect();
    for r in results {
        let (check, finding) = r?;
        v.checks.push(check);
        if finding["agrees"] == json!(false) {
            v.findings.push(finding);
        }
    }
    Ok(v)
}

/// `reg(J(G)^t)` for bipartite unicyclic graphs, and `J(G)^t = J(G)^(t)`.
pub fn theorem2(
    instances: usize,
    max_vertices: usize,
    powers: &[u32],
    seed: u64,
    field: Field,
) -> Result<Verification> {
    let mut v = Verification::new(json!({
        "kind": "theorem2", "instances": instances, "maxVertices": max_vertices,
        "powers": powers, "seed": seed, "field": field,
    }));
    let cfg = EngineConfig::with_field(field);
    let graphs = random_unicyclic_instances(instances, max_vertices, &[4, 6, 8], seed);
    let cases: Vec<(usize, u32)> = (0..graphs.len()).flat_map(|k| powers.iter().map(move |&t| (k, t))).collect();
    let results: Vec<Result<Check>> = cases
        .par_iter()
        .map(|&(k, t)| {
            let g = &graphs[k];
            let got = reg_symbolic(g, t, &cfg)?.value;
            let predicted = theorem_formula(g, t)?;
            let symbolic = symbolic_generators(g, t)?;
            let equal_powers = ordinary_power(&cover_ideal(g), t)? == symbolic;
            let passed = predicted.as_ref().map(|p| p.value) == Some(got) && equal_powers;
            Ok(Check::new(
                format!("theorem2#{k} t={t}"),
                passed,
                json!({
                    "graph": doc(&format!("instance{k}"), g), "computed": got,
                    "predicted": predicted, "ordinaryEqualsSymbolic": equal_powers,
                }),
            ))
        })
        .collect();
    for r in results {
        v.checks.push(r?);
    }
    Ok(v)
}

/// One check per generated instance of the lemma's configuration.
pub fn lemma(id: LemmaId, instances: usize, seed: u64, field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({
        "kind": "lemma", "lemma": id, "instances": instances, "seed": seed, "field": field,
    }));
    let mut rng = seeded_rng(seed);
    let graphs: Vec<Hypergraph> = (0..instances).map(|_| lemma_instance(id, &mut rng)).collect();
    let results: Vec<Result<Check>> = graphs
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let r = verify_reduction_lemma(g, id, field)?;
            Ok(Check::new(
                format!("{id}#{k}"),
                r.passed,
                json!({
                    "graph": doc(&format!("instance{k}"), g),
                    "configuration": r.configuration,
                    "tauMaxG": r.tau_max_g, "tauMaxH": r.tau_max_h,
                    "hdimG": r.hdim_g, "hdimH": r.hdim_h,
                    "tauOk": r.tau_ok, "hdimOk": r.hdim_ok,
                }),
            ))
        })
        .collect();
    for r in results {
        v.checks.push(r?);
    }
    Ok(v)
}

/// The two example graphs: one reducible to its square, one not.
pub fn figures(field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({"kind": "figures", "field": field}));
    let fig1 = families::figure1();
    let trace = reducible_to_cycle(&fig1)?;
    let replay_ok = match &trace {
        Some(t) => {
            let mut g = t.start.clone();
            let mut ok = true;
            for m in &t.moves {
                match apply_move(&g, m) {
                    Ok(h) if h.num_vertices() < g.num_vertices() => g = h,
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            ok && g == t.end && t.end == families::cycle(4)
        }
        None => false,
    };
    v.checks.push(Check::new("figure1 reducible", replay_ok, json!({"trace": trace})));
    let fig2 = families::figure2();
    let not_reducible = reducible_to_cycle(&fig2)?.is_none();
    let profile = SimplicialComplex::cover_complex(&fig2).reduced_homology(field)?;
    v.checks.push(Check::new(
        "figure2 not reducible",
        not_reducible && profile.is_acyclic(),
        json!({"reducible": !not_reducible, "homology": profile}),
    ));
    Ok(v)
}

/// Engine against the Betti oracle and Terai duality.
pub fn oracle(max_vertices: usize, second_power_sample: usize, seed: u64, field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({
        "kind": "oracle", "maxVertices": max_vertices, "secondPowerSample": second_power_sample,
        "seed": seed, "field": field,
    }));
    let cfg = EngineConfig::with_field(field);
    let graphs: Vec<Hypergraph> = (2..=max_vertices).flat_map(connected_graphs_up_to_iso).collect();
    let results: Vec<Result<Check>> = graphs
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let engine = reg_cover(g, &cfg)?.value;
            let betti = reg_oracle(&cover_ideal(g), field)?;
            let pd = pd_oracle(&edge_ideal(g), field)? as i64;
            Ok(Check::new(
                format!("oracle#{k}"),
                engine == betti && engine == pd,
                json!({"graph": doc(&format!("graph{k}"), g), "engine": engine, "oracle": betti, "pdEdgeIdeal": pd}),
            ))
        })
        .collect();
    for r in results {
        v.checks.push(r?);
    }
    let mut rng = seeded_rng(seed);
    let sample: Vec<&Hypergraph> = graphs.choose_multiple(&mut rng, second_power_sample).collect();
    let results: Vec<Result<Check>> = sample
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let engine = reg_symbolic(g, 2, &cfg)?.value;
            let betti = reg_oracle(&symbolic_generators(g, 2)?, field)?;
            Ok(Check::new(
                format!("oracle-t2#{k}"),
                engine == betti,
                json!({"graph": doc(&format!("sample{k}"), g), "engine": engine, "oracle": betti}),
            ))
        })
        .collect();
    for r in results {
        v.checks.push(r?);
    }
    Ok(v)
}

/// No-prune enumeration never meets an exponent above `δ(G)(t-1)`, and
/// critical pairs stay critical after scaling by `s`.
pub fn degree_bound(max_t: u32, scaled_samples: usize, scale: u32, seed: u64, field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({
        "kind": "degree-bound", "maxT": max_t, "scaledSamples": scaled_samples, "scale": scale,
        "seed": seed, "field": field,
    }));
    let cfg = EngineConfig::with_field(field).without_pruning();
    let cases: Vec<(String, Hypergraph, u32)> = corpus()
        .into_iter()
        .flat_map(|(name, g)| (1..=max_t).map(move |t| (name.clone(), g.clone(), t)))
        .collect();
    let results: Vec<Result<(Check, Vec<AdmissiblePair>)>> = cases
        .par_iter()
        .map(|(name, g, t)| {
            let pairs = enumerate_critical_pairs(g, *t, &cfg)?;
            let violations = &pairs.stats.degree_bound_violations;
            let check = Check::new(
                format!("degree-bound {name} t={t}"),
                violations.is_empty(),
                json!({
                    "criticalPairs": pairs.pairs.len(), "delta": pairs.degree_bound,
                    "violations": violations,
                }),
            );
            let keep = if *t >= 2 { pairs.pairs.into_iter().map(|p| p.pair).collect() } else { Vec::new() };
            Ok((check, keep))
        })
        .collect();
    let mut pool: Vec<(usize, AdmissiblePair)> = Vec::new();
    for (k, r) in results.into_iter().enumerate() {
        let (check, pairs) = r?;
        v.checks.push(check);
        pool.extend(pairs.into_iter().map(|p| (k, p)));
    }
    let mut rng = seeded_rng(seed);
    let sample: Vec<&(usize, AdmissiblePair)> = pool.choose_multiple(&mut rng, scaled_samples).collect();
    let results: Vec<Result<Check>> = sample
        .par_iter()
        .enumerate()
        .map(|(k, (case, pair))| {
            let g = &cases[*case].1;
            let scaled = scale_pair(g, pair, scale)?;
            let same_h = scaled.h == pair.h;
            let level = scaled.t;
            let a = scaled.a.clone();
            let critical = critical_pair(scaled, field)?.is_some();
            Ok(Check::new(
                format!("scaling#{k}"),
                same_h && critical,
                json!({
                    "graph": cases[*case].0, "t": pair.t, "a": pair.a,
                    "scaledLevel": level, "scaledA": a, "critical": critical, "sameSubhypergraph": same_h,
                }),
            ))
        })
        .collect();
    for r in results {
        v.checks.push(r?);
    }
    Ok(v)
}

/// `δ(C_n) = τ_max(C_n)` for odd cycles, `δ = τ_max` on bipartite corpus
/// graphs, and every enumerated vertex is a genuine rational vertex.
pub fn polyhedron(max_odd_n: usize) -> Result<Verification> {
    let mut v = Verification::new(json!({"kind": "polyhedron", "maxOddN": max_odd_n}));
    let mut graphs: Vec<(String, Hypergraph)> =
        (3..=max_odd_n).step_by(2).map(|n| (format!("cycle:{n}"), families::cycle(n))).collect();
    for (name, g) in corpus() {
        if g.is_bipartite()? {
            graphs.push((name, g));
        }
    }
    let results: Vec<Result<Check>> = graphs
        .par_iter()
        .map(|(name, g)| {
            let sp = symbolic_polyhedron(g)?;
            let vertices = sp.vertices()?;
            let genuine = vertices.iter().all(|x| {
                sp.satisfies(&x.coordinates) && sp.active_rank(&x.coordinates) == sp.dimension()
            });
            let d = delta(g)?;
            let tau = Rational64::from_integer(g.tau_max() as i64);
            Ok(Check::new(
                format!("delta {name}"),
                d == tau && genuine && !vertices.is_empty(),
                json!({"delta": d.to_string(), "tauMax": g.tau_max(), "vertices": vertices.len(), "genuineVertices": genuine}),
            ))
        })
        .collect();
    for r in results {
        v.checks.push(r?);
    }
    Ok(v)
}

fn random_small_hypergraph<R: Rng>(rng: &mut R, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let e = rng.gen_range(1..=8);
    families::random_hypergraph(n, e, 3, rng)
}

fn shifted(h: &Hypergraph, offset: u32) -> Hypergraph {
    Hypergraph::new(
        h.vertices().iter().map(|v| v + offset),
        h.edges().into_iter().map(|e| e.into_iter().map(|v| v + offset).collect::<Vec<_>>()),
    )
    .expect("shifting labels keeps validity")
}

fn property(name: &str, cases: usize, failures: Vec<Value>) -> Check {
    Check::new(
        name,
        failures.is_empty(),
        json!({"cases": cases, "failures": failures.into_iter().take(5).collect::<Vec<_>>()}),
    )
}

/// Seeded quantified checks of the homological identities.
pub fn properties(cases: usize, seed: u64, field: Field) -> Result<Verification> {
    let mut v = Verification::new(json!({"kind": "properties", "cases": cases, "seed": seed, "field": field}));
    let mut rng = seeded_rng(seed);
    let (mut euler, mut cone, mut link, mut join, mut union) = (vec![], vec![], vec![], vec![], vec![]);
    for _ in 0..cases {
        let h = random_small_hypergraph(&mut rng, 9);
        let d = SimplicialComplex::cover_complex(&h);
        let profile = d.reduced_homology(field)?;
        if profile.euler_characteristic() != d.reduced_euler_characteristic()? {
            euler.push(doc("h", &h));
        }

        let apex = SimplicialComplex::new([200], [[200]])?;
        let coned = d.join(&apex)?;
        let apex_ok = coned.cone_apex().is_some() && coned.reduced_homology(field)?.is_acyclic();
        let own_ok = d.cone_apex().is_none() || profile.is_acyclic();
        if !apex_ok || !own_ok {
            cone.push(doc("h", &h));
        }

        if !d.is_void() {
            let facet = *d.facet_masks().choose(&mut rng).expect("nonvoid");
            let face_mask = facet & rng.gen::<u64>();
            let face = h.labels_of(face_mask);
            let rest = h.full_mask() & !face_mask;
            let kept: Vec<Vec<u32>> = h
                .edge_masks()
                .iter()
                .filter(|&&e| e & rest == e)
                .map(|&e| h.labels_of(e))
                .collect();
            let sub = Hypergraph::new(h.labels_of(rest), kept)?;
            if d.link(&face)? != SimplicialComplex::cover_complex(&sub) {
                link.push(json!({"graph": doc("h", &h), "face": face}));
            }
        }

        let a = random_small_hypergraph(&mut rng, 5);
        let b = shifted(&random_small_hypergraph(&mut rng, 5), 100);
        let (da, db) = (SimplicialComplex::cover_complex(&a), SimplicialComplex::cover_complex(&b));
        let (ha, hb) = (da.hdim(field)?, db.hdim(field)?);
        let expected_join = ha.zip(hb).map(|(x, y)| x + y + 1);
        if da.join(&db)?.hdim(field)? != expected_join {
            join.push(json!({"a": doc("a", &a), "b": doc("b", &b)}));
        }
        let u = a.disjoint_union(&b)?.graph;
        let hu = SimplicialComplex::cover_complex(&u).hdim(field)?;
        if u.tau_max() != a.tau_max() + b.tau_max() || hu != ha.zip(hb).map(|(x, y)| x + y + 2) {
            union.push(json!({"a": doc("a", &a), "b": doc("b", &b)}));
        }
    }
    v.checks.push(property("euler-characteristic", cases, euler));
    v.checks.push(property("cone-acyclic", cases, cone));
    v.checks.push(property("link-colon", cases, link));
    v.checks.push(property("join-kunneth", cases, join));
    v.checks.push(property("disjoint-union", cases, union));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn small_runs() {
        assert!(cycles(6, 2, Q).unwrap().passed());
        assert!(theorem1(10, 8, 1, Q).unwrap().passed());
        assert!(theorem2(3, 7, &[2], 1, Q).unwrap().passed());
        assert!(figures(Q).unwrap().passed());
        assert!(oracle(4, 3, 1, Q).unwrap().passed());
        assert!(properties(20, 1, Q).unwrap().passed());
        assert!(lemma(LemmaId::Reduction4, 5, 1, Q).unwrap().passed());
    }

    #[test]
    fn deterministic() {
        assert_eq!(theorem1(6, 8, 9, Q).unwrap(), theorem1(6, 8, 9, Q).unwrap());
        assert_eq!(lemma(LemmaId::Type12, 4, 2, Q).unwrap(), lemma(LemmaId::Type12, 4, 2, Q).unwrap());
    }

    #[test]
    fn cycle_invariants_flag_the_stated_hdim() {
        let v = cycle_invariants(6, Q).unwrap();
        let failed: Vec<&str> = v.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["hdim C_5"]);
    }
}
