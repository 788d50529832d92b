//! Properties of the ideal and homology layers, each checked against an
//! independent brute-force route.

use compedge::homology::{is_componentwise_linear, SimplicialComplex};
use compedge::ideal::{mask_vars, LinearQuotients, DEFAULT_LQ_BUDGET};
use compedge::{enumerate_graphs, hochster_betti, Colon, FieldTag, SquarefreeIdeal, SquarefreeMonomial};
use proptest::prelude::*;

fn complementary_ideals(n: usize) -> impl Iterator<Item = SquarefreeIdeal> {
    enumerate_graphs(n)
        .unwrap()
        .filter(|g| g.edge_count() > 0)
        .map(|g| SquarefreeIdeal::complementary_edge_ideal(&g).unwrap())
}

/// Random nonzero proper squarefree ideal on `n <= 6` variables.
fn arb_ideal() -> impl Strategy<Value = SquarefreeIdeal> {
    (2usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(1u32..(1 << n), 1..6)
            .prop_map(move |gens| SquarefreeIdeal::minimalize(n, gens).unwrap())
    })
}

fn binomial(m: u64, k: u64) -> u64 {
    if k > m {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// Coefficients of `sum_i (-1)^i beta_{i,j} t^j` must equal those of
/// `sum_{F in Delta} t^{|F|} (1 - t)^{n - |F|}`: the numerator of the
/// Hilbert series of `S/I`, computed from faces alone.
fn k_polynomial_from_faces(ideal: &SquarefreeIdeal) -> Vec<i64> {
    let n = ideal.ambient();
    let mut out = vec![0i64; n + 1];
    for f in 0u32..1 << n {
        if ideal.contains_mask(f) {
            continue;
        }
        let k = f.count_ones() as usize;
        for e in 0..=(n - k) {
            let sign = if e % 2 == 0 { 1 } else { -1 };
            out[k + e] += sign * binomial((n - k) as u64, e as u64) as i64;
        }
    }
    out
}

#[test]
fn betti_numbers_reproduce_hilbert_series() {
    for n in 3..=5 {
        for ideal in complementary_ideals(n) {
            let table = hochster_betti(&ideal, FieldTag::Gf2).unwrap();
            let mut from_betti = vec![0i64; n + 1];
            for ((i, j), v) in table.entries() {
                from_betti[j] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
            }
            assert_eq!(from_betti, k_polynomial_from_faces(&ideal), "{ideal}");
        }
    }
}

#[test]
fn first_betti_numbers_count_generators() {
    for n in 3..=5 {
        for ideal in complementary_ideals(n) {
            let table = hochster_betti(&ideal, FieldTag::Gf2).unwrap();
            for j in 1..=n {
                let gens = ideal.generators().iter().filter(|g| g.degree() == j).count() as u64;
                assert_eq!(table.get(1, j), gens);
            }
        }
    }
}

#[test]
fn field_consistency_up_to_six_vertices() {
    let mut disagreements = Vec::new();
    for n in 3..=6 {
        for ideal in complementary_ideals(n) {
            let a = hochster_betti(&ideal, FieldTag::Gf2).unwrap();
            let b = hochster_betti(&ideal, FieldTag::Rationals).unwrap();
            if a.entries().collect::<Vec<_>>() != b.entries().collect::<Vec<_>>() {
                disagreements.push(ideal.to_string());
            }
        }
    }
    assert!(disagreements.is_empty(), "GF2 and Q disagree on {disagreements:?}");
}

proptest! {
    #[test]
    fn euler_poincare_on_every_restriction(ideal in arb_ideal()) {
        prop_assume!(!ideal.generator_masks().is_empty());
        let delta = SimplicialComplex::stanley_reisner(&ideal).unwrap();
        for sigma in 0u32..1 << ideal.ambient() {
            let r = delta.restrict(sigma);
            let faces: i64 = r.f_vector().iter().enumerate()
                .map(|(c, &k)| if c % 2 == 1 { k as i64 } else { -(k as i64) })
                .sum();
            let homology: i64 = r.reduced_homology_dims(FieldTag::Rationals).iter().enumerate()
                .map(|(idx, &d)| if idx % 2 == 1 { d as i64 } else { -(d as i64) })
                .sum();
            prop_assert_eq!(faces, homology);
        }
    }

    #[test]
    fn taylor_bounds(ideal in arb_ideal()) {
        let table = hochster_betti(&ideal, FieldTag::Gf2).unwrap();
        let m = ideal.generator_masks().len() as u64;
        let rp = table.reg_pd().unwrap();
        prop_assert!(rp.pd_quotient <= ideal.ambient());
        for ((i, j), v) in table.entries() {
            prop_assert!(j >= i);
            prop_assert!(v <= binomial(m, i as u64));
        }
    }

    #[test]
    fn covers_match_exhaustive_search(ideal in arb_ideal()) {
        let n = ideal.ambient();
        let gens = ideal.generator_masks();
        let covers_all = |t: u32| gens.iter().all(|&g| g & t != 0);
        let mut brute: Vec<u32> = (0u32..1 << n)
            .filter(|&t| covers_all(t) && mask_vars(t).iter().all(|&v| !covers_all(t & !(1 << (v - 1)))))
            .collect();
        brute.sort_by(|&a, &b| compedge::ideal::lex_cmp(a, b));
        prop_assert_eq!(ideal.minimal_vertex_covers().unwrap(), brute);
    }

    #[test]
    fn alexander_duality_is_an_involution(ideal in arb_ideal()) {
        prop_assert_eq!(ideal.alexander_dual().unwrap().alexander_dual().unwrap(), ideal);
    }

    #[test]
    fn colon_matches_membership(ideal in arb_ideal(), raw in any::<u32>()) {
        let n = ideal.ambient();
        let m = SquarefreeMonomial::from_mask(n, raw & ((1 << n) - 1)).unwrap();
        let colon = ideal.colon_by_monomial(&m).unwrap();
        for sigma in 0u32..1 << n {
            // x_sigma in I : m  iff  lcm(x_sigma, m) in I.
            let expected = ideal.contains_mask(sigma | m.mask());
            let got = match &colon {
                Colon::Unit => true,
                Colon::Ideal(j) => j.contains_mask(sigma),
            };
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn linear_quotients_agree_with_all_orderings(ideal in arb_ideal()) {
        let gens = ideal.generator_masks().to_vec();
        prop_assume!(gens.len() <= 5);
        let brute = permutations(gens.len()).into_iter().any(|order| {
            (1..order.len()).all(|j| {
                let u = gens[order[j]];
                let reduced: Vec<u32> = order[..j].iter().map(|&i| gens[i] & !u).collect();
                let colon = SquarefreeIdeal::minimalize(ideal.ambient(), reduced).unwrap();
                colon.generator_masks().iter().all(|g| g.count_ones() == 1)
            })
        });
        let verdict = ideal.has_linear_quotients(DEFAULT_LQ_BUDGET).unwrap();
        prop_assert_eq!(verdict.is_yes(), brute);
        prop_assert_ne!(&verdict, &LinearQuotients::Inconclusive);
        if verdict.is_yes() {
            prop_assert!(is_componentwise_linear(&ideal, FieldTag::Gf2).unwrap());
        }
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, m - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn linear_quotient_witness_is_valid() {
    let ideal = SquarefreeIdeal::from_supports(4, &[&[1, 3], &[1, 4], &[2, 4]]).unwrap();
    let LinearQuotients::Yes(order) = ideal.has_linear_quotients(DEFAULT_LQ_BUDGET).unwrap() else {
        panic!("expected linear quotients");
    };
    for j in 1..order.len() {
        let prefix = SquarefreeIdeal::minimalize(4, order[..j].iter().map(|m| m.mask())).unwrap();
        match prefix.colon_by_monomial(&order[j]).unwrap() {
            Colon::Ideal(c) => assert!(c.generators().iter().all(|g| g.degree() == 1)),
            Colon::Unit => panic!("incomparable generators never give a unit colon"),
        }
    }
}
