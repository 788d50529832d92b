//! Exhaustive formula-versus-oracle sweeps over small labeled graphs without
//! isolated vertices, plus the isolated-vertex counterexamples themselves.

use std::sync::OnceLock;

use compedge::invariants::{
    cross_validate, huneke_ulrich_check, implication_suite, is_licci, oracle_invariants,
    predict_invariants, Claim, GraphClass, OracleInvariants, Tension,
};
use compedge::{enumerate_graphs, FieldTag, SimpleGraph};

const MAX_N: usize = 6;

fn no_isolated(n: usize) -> impl Iterator<Item = SimpleGraph> {
    enumerate_graphs(n)
        .unwrap()
        .filter(|g| g.edge_count() > 0 && g.isolated_vertices().is_empty())
}

fn sweep() -> &'static [(SimpleGraph, OracleInvariants)] {
    static SWEEP: OnceLock<Vec<(SimpleGraph, OracleInvariants)>> = OnceLock::new();
    SWEEP.get_or_init(|| {
        (3..=MAX_N)
            .flat_map(no_isolated)
            .map(|g| {
                let o = oracle_invariants(&g, FieldTag::Gf2).unwrap();
                (g, o)
            })
            .collect()
    })
}

#[test]
fn bounds_cm_and_height() {
    for (g, o) in sweep() {
        let n = g.n();
        assert!((1..=2).contains(&o.pd_ideal), "{g}");
        assert!((n - 2..=n - 1).contains(&o.reg_ideal), "{g}");
        assert_eq!(o.cohen_macaulay, g.is_forest() || g.is_complete(), "{g}");
        assert_eq!(o.height, if g.is_complete() { 3 } else { 2 }, "{g}");
        assert_eq!(o.indeg, n - 2);
    }
}

#[test]
fn forest_reg_pd_up_to_seven() {
    for n in 3..=7 {
        for g in no_isolated(n).filter(SimpleGraph::is_forest) {
            let o = oracle_invariants(&g, FieldTag::Gf2).unwrap();
            let reg = if g.is_connected() { n - 2 } else { n - 1 };
            assert_eq!((o.pd_ideal, o.reg_ideal), (1, reg), "{g}");
        }
    }
}

#[test]
fn licci_equivalence_and_degree_bound() {
    for (g, o) in sweep() {
        let k3 = g.n() == 3 && g.is_complete();
        let licci = is_licci(g).unwrap().licci;
        assert_eq!(licci, (o.cohen_macaulay && o.height == 2) || k3, "{g}");
        if licci {
            assert!(huneke_ulrich_check(o.reg_quotient, o.height, o.indeg), "{g}");
        }
    }
    for n in 4..=MAX_N {
        let o = oracle_invariants(&SimpleGraph::complete(n), FieldTag::Gf2).unwrap();
        // reg(S/I) = n - 3 against (3 - 1)(n - 3), which fails from n = 4 on.
        assert_eq!(o.reg_quotient, n - 3);
        assert!(!huneke_ulrich_check(o.reg_quotient, o.height, o.indeg));
    }
}

#[test]
fn predictions_match_oracle() {
    for (g, o) in sweep() {
        let p = predict_invariants(g).unwrap();
        assert!(p.pd_ideal.admits(o.pd_ideal), "{g}");
        assert!(p.reg_ideal.admits(o.reg_ideal), "{g}");
        let report = cross_validate(g, FieldTag::Gf2).unwrap();
        assert!(report.agrees(), "{g}: {:?}", report.mismatches);
    }
}

#[test]
fn non_licci_graphs_are_exactly_the_non_cm_or_tall_ones() {
    // Not licci iff the graph has a cycle and is not K3; for n >= 4 that is
    // exactly "not CM, or height 3".
    for (g, o) in sweep().iter().filter(|(g, _)| g.n() >= 4) {
        let licci = is_licci(g).unwrap().licci;
        assert_eq!(!licci, !o.cohen_macaulay || o.height == 3, "{g}");
    }
}

#[test]
fn implications_on_licci_graphs() {
    let mut disconnected_linear = 0;
    for n in 3..=MAX_N {
        for g in no_isolated(n) {
            let suite = implication_suite(&g, FieldTag::Gf2).unwrap();
            if !suite.licci.licci {
                continue;
            }
            for claim in &Claim::ALL[..4] {
                assert_eq!(suite.holds(*claim), Some(true), "{g}: {claim:?}");
            }
            if GraphClass::of(&g) == GraphClass::DisconnectedForest {
                assert_eq!(
                    suite.violations,
                    vec![(Claim::LinearResolution, Some(Tension::DisconnectedForestLinearResolution))]
                );
                disconnected_linear += suite.linear_resolution as usize;
            } else {
                assert!(suite.violations.is_empty(), "{g}: {:?}", suite.violations);
            }
        }
    }
    assert_eq!(disconnected_linear, 0);
}

#[test]
fn component_class_equivalences() {
    // Disconnected: licci, CM, forest, (reg, pd) = (n - 1, 1) coincide.
    // Connected and not complete: licci, tree, CM, (reg, pd) = (n - 2, 1).
    let (mut disconnected, mut connected) = (0, 0);
    for (g, o) in sweep().iter().filter(|(g, _)| !g.is_complete()) {
        let n = g.n();
        let licci = is_licci(g).unwrap().licci;
        let conditions = if g.is_connected() {
            connected += 1;
            [licci, g.is_tree(), o.cohen_macaulay, (o.reg_ideal, o.pd_ideal) == (n - 2, 1)]
        } else {
            disconnected += 1;
            [licci, o.cohen_macaulay, g.is_forest(), (o.reg_ideal, o.pd_ideal) == (n - 1, 1)]
        };
        assert!(conditions.iter().all(|&c| c == conditions[0]), "{g}: {conditions:?}");
    }
    assert!(disconnected > 0 && connected > 0);
}

#[test]
fn implications_are_not_reversible() {
    // A triangle with a pendant edge is not licci, yet I_c is sequentially
    // CM and its dual is componentwise linear with linear quotients.
    let g = SimpleGraph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap();
    let s = implication_suite(&g, FieldTag::Gf2).unwrap();
    assert!(!s.licci.licci);
    assert!(s.sequentially_cm && s.dual_componentwise_linear);
    assert_eq!(s.holds(Claim::DualLinearQuotients), Some(true));
    // Any non-licci graph with a linear resolution of I_c shows (5) is not
    // reversible either.
    assert!((3..=5).flat_map(no_isolated).any(|g| {
        let s = implication_suite(&g, FieldTag::Gf2).unwrap();
        !s.licci.licci && s.linear_resolution
    }));
}

#[test]
fn isolated_vertex_counterexamples() {
    // P3 plus an isolated vertex: a forest whose ideal x4 (x1, x3) has
    // height 1 and is not CM.
    let g = SimpleGraph::new(4, [(1, 2), (2, 3)]).unwrap();
    let o = oracle_invariants(&g, FieldTag::Gf2).unwrap();
    assert!(is_licci(&g).unwrap().licci);
    assert_eq!((o.height, o.cohen_macaulay), (1, false));
    let report = cross_validate(&g, FieldTag::Gf2).unwrap();
    assert!(!report.agrees());
    assert_eq!(report.unexplained().count(), 0);
    assert!(report.mismatches.iter().all(|m| m.tension == Some(Tension::IsolatedVertices)));

    // A single edge gives a principal ideal.
    let o = oracle_invariants(&SimpleGraph::new(4, [(1, 2)]).unwrap(), FieldTag::Gf2).unwrap();
    assert_eq!((o.pd_ideal, o.reg_ideal, o.height), (0, 2, 1));
}
