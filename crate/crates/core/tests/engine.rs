use covreg_core::families::{self, connected_graphs_up_to_iso, cycle};
use covreg_core::ideal::{cover_ideal, edge_ideal, ordinary_power, symbolic_generators};
use covreg_core::oracle::{pd_oracle, reg_oracle};
use covreg_core::polyhedron::delta;
use covreg_core::regularity::{reg_cover, reg_symbolic, EngineConfig};
use covreg_core::Field;
use num_rational::Rational64;

const Q: Field = Field::Rational;

#[test]
fn engine_matches_oracle_and_terai() {
    let cfg = EngineConfig::default();
    for n in 2..=6 {
        for g in connected_graphs_up_to_iso(n) {
            let engine = reg_cover(&g, &cfg).unwrap().value;
            assert_eq!(engine, reg_oracle(&cover_ideal(&g), Q).unwrap(), "{:?}", g.edges());
            assert_eq!(engine as usize, pd_oracle(&edge_ideal(&g), Q).unwrap(), "{:?}", g.edges());
        }
    }
}

#[test]
fn second_symbolic_power_matches_oracle() {
    let cfg = EngineConfig::default();
    for g in connected_graphs_up_to_iso(4).into_iter().chain([cycle(5), families::star(3)]) {
        let engine = reg_symbolic(&g, 2, &cfg).unwrap().value;
        let ideal = symbolic_generators(&g, 2).unwrap();
        assert_eq!(engine, reg_oracle(&ideal, Q).unwrap(), "{:?}", g.edges());
    }
}

#[test]
fn other_fields() {
    let gf2 = EngineConfig::with_field(Field::prime(2).unwrap());
    for g in connected_graphs_up_to_iso(5) {
        assert_eq!(
            reg_cover(&g, &gf2).unwrap().value,
            reg_cover(&g, &EngineConfig::default()).unwrap().value
        );
    }
}

#[test]
fn slope_and_degree_envelopes() {
    let cfg = EngineConfig::default();
    for g in [cycle(5), cycle(6), families::figure1(), families::complete(4), families::path(5)] {
        let d = delta(&g).unwrap();
        let base = reg_cover(&g, &cfg).unwrap().value;
        let min_deg = cover_ideal(&g).min_degree() as i64;
        for t in 1..=3u32 {
            let r = reg_symbolic(&g, t, &cfg).unwrap().value;
            assert!(Rational64::from_integer(r) <= d * Rational64::from_integer(t as i64) + base);
            assert!(r >= t as i64 * min_deg);
        }
    }
}

#[test]
fn cycle_slopes_equal_delta() {
    let cfg = EngineConfig::default();
    for n in [3, 5, 6, 7] {
        let d = delta(&cycle(n)).unwrap();
        for t in 2..=3u32 {
            let r = reg_symbolic(&cycle(n), t, &cfg).unwrap().value;
            assert_eq!(Rational64::new(r, t as i64), d, "C_{n} t={t}");
        }
    }
}

#[test]
fn generator_degrees_approach_delta() {
    for n in 3..=6 {
        let g = cycle(n);
        let d = delta(&g).unwrap();
        let mut best = Rational64::from_integer(0);
        for t in 1..=6u32 {
            let omega = symbolic_generators(&g, t).unwrap().omega() as i64;
            let ratio = Rational64::new(omega, t as i64);
            assert!(ratio <= d);
            best = best.max(ratio);
        }
        let at6 = Rational64::new(symbolic_generators(&g, 6).unwrap().omega() as i64, 6);
        assert!(at6 * Rational64::new(100, 85) >= d, "C_{n}");
        assert!(best <= d);
    }
}

#[test]
fn bipartite_powers_are_symbolic() {
    for g in [cycle(4), cycle(6), families::path(5), families::star(3), families::figure1()] {
        if !g.is_bipartite().unwrap() {
            continue;
        }
        for t in 1..=3 {
            assert_eq!(
                ordinary_power(&cover_ideal(&g), t).unwrap(),
                symbolic_generators(&g, t).unwrap()
            );
        }
        assert_eq!(delta(&g).unwrap(), Rational64::from_integer(g.tau_max() as i64));
    }
}
