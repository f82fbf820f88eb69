mod common;

use oddcolour::graphs;
use oddcolour::solver::{
    chi_odd, chi_odd_bruteforce, find_odd_colouring, forbidden_colours, PartialColouring, SolverConfig,
    BRUTEFORCE_LIMIT,
};
use oddcolour::verify::{is_conflict_free, is_odd, is_proper};
use oddcolour::{Colouring, EmbeddedGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn small_graph() -> impl Strategy<Value = EmbeddedGraph> {
    (1usize..9, 0.1f64..0.9, any::<u64>())
        .prop_map(|(n, p, seed)| common::random_embedded(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

fn graph_and_colouring() -> impl Strategy<Value = (EmbeddedGraph, Colouring)> {
    small_graph().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(1u32..6, n).prop_map(|c| Colouring::new(c).unwrap()))
    })
}

proptest! {
    #[test]
    fn conflict_free_implies_odd((g, c) in graph_and_colouring()) {
        if is_conflict_free(&g, &c).unwrap() {
            prop_assert!(is_odd(&g, &c).unwrap());
        }
    }

    #[test]
    fn verdicts_survive_colour_permutation((g, c) in graph_and_colouring(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<u32> = (1..=5).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let renamed = Colouring::new(c.colours().iter().map(|&x| perm[x as usize - 1]).collect()).unwrap();
        prop_assert_eq!(is_proper(&g, &c).unwrap(), is_proper(&g, &renamed).unwrap());
        prop_assert_eq!(is_odd(&g, &c).unwrap(), is_odd(&g, &renamed).unwrap());
        prop_assert_eq!(is_conflict_free(&g, &c).unwrap(), is_conflict_free(&g, &renamed).unwrap());
    }

    #[test]
    fn odd_degree_vertices_are_always_odd((g, c) in graph_and_colouring()) {
        for v in (0..g.vertex_count()).filter(|&v| g.degree(v) % 2 == 1) {
            prop_assert!(oddcolour::verify::is_odd_at(&g, &c, v));
        }
    }

    #[test]
    fn search_results_verify_and_are_monotone(g in small_graph()) {
        let mut found = false;
        for k in 1..=g.vertex_count() {
            match find_odd_colouring(&g, k, &cfg()).unwrap() {
                Some(c) => {
                    prop_assert!(is_proper(&g, &c).unwrap() && is_odd(&g, &c).unwrap());
                    prop_assert!(c.max_colour() as usize <= k);
                    found = true;
                }
                None => prop_assert!(!found, "bound {k} failed after a smaller bound succeeded"),
            }
        }
        prop_assert!(found);
    }
}

/// A random partial colouring and an uncoloured vertex whose neighbours are
/// all coloured.
fn forbidden_case<R: Rng>(rng: &mut R) -> (EmbeddedGraph, PartialColouring, usize) {
    let n = rng.gen_range(2..10);
    let density = rng.gen_range(0.1..0.9);
    let g = common::random_embedded(rng, n, density);
    let v = rng.gen_range(0..n);
    let k = rng.gen_range(1..=6);
    let colours = (0..n)
        .map(|x| if x == v || (!g.has_edge(x, v) && rng.gen_bool(0.3)) { None } else { Some(rng.gen_range(1..=k)) })
        .collect();
    (g, PartialColouring::from_options(colours), v)
}

#[test]
fn forbidden_set_is_bounded_by_twice_the_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let (g, pc, v) = forbidden_case(&mut rng);
        let f = forbidden_colours(&g, &pc, v, false).unwrap();
        assert!(f.all().len() <= 2 * g.degree(v));
        for &w in f.by_oddness.keys() {
            assert_eq!(g.degree(w) % 2, 0, "odd-degree neighbour {w} forbids by oddness");
        }
    }
}

#[test]
fn forbidden_examples() {
    // v = 0 hangs off w = 1, whose other neighbours are 2, 3, 4
    let g = graphs::from_edges(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]);
    let pc = PartialColouring::from_options(vec![None, Some(1), Some(2), Some(3), Some(3)]);
    let f = forbidden_colours(&g, &pc, 0, false).unwrap();
    assert_eq!(f.by_properness.into_iter().collect::<Vec<_>>(), vec![1]);
    assert_eq!(f.by_oddness.into_iter().collect::<Vec<_>>(), vec![(1, 2)]);

    let g = graphs::from_edges(4, &[(0, 1), (1, 2), (1, 3)]);
    let pc = PartialColouring::from_options(vec![None, Some(1), Some(2), Some(2)]);
    let f = forbidden_colours(&g, &pc, 0, false).unwrap();
    assert!(f.by_oddness.is_empty());
}

#[test]
fn anchors() {
    let c5 = graphs::cycle(5);
    assert_eq!(find_odd_colouring(&c5, 4, &cfg()).unwrap(), None);
    assert!(find_odd_colouring(&c5, 5, &cfg()).unwrap().is_some());
    assert_eq!(chi_odd(&c5, 9, &cfg()).unwrap(), Some(5));
    assert_eq!(chi_odd(&graphs::cycle(6), 9, &cfg()).unwrap(), Some(3));
    assert_eq!(chi_odd(&graphs::complete(7), 9, &cfg()).unwrap(), Some(7));
    assert_eq!(chi_odd(&c5, 4, &cfg()).unwrap(), None);
}

#[test]
fn parallel_bounds_agree_with_sequential() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let parallel = SolverConfig { deterministic: false, ..cfg() };
    for _ in 0..40 {
        let n = rng.gen_range(2..9);
        let g = common::random_embedded(&mut rng, n, 0.4);
        assert_eq!(chi_odd(&g, 9, &cfg()).unwrap(), chi_odd(&g, 9, &parallel).unwrap());
    }
}

#[test]
fn oracle_agrees_on_all_small_connected_graphs() {
    let mut checked = 0;
    for n in 1..=6 {
        for edges in common::isomorph_free(n, common::connected_labelled(n)) {
            let g = graphs::from_edges(n, &edges);
            assert_eq!(
                chi_odd(&g, n, &cfg()).unwrap(),
                chi_odd_bruteforce(&g, n, BRUTEFORCE_LIMIT).unwrap(),
                "{edges:?}"
            );
            checked += 1;
        }
    }
    // connected graphs up to isomorphism on 1..=6 vertices
    assert_eq!(checked, 1 + 1 + 2 + 6 + 21 + 112);
}

#[test]
fn oracle_agrees_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(7..=9);
        let density = rng.gen_range(0.15..0.7);
        let g = common::random_embedded(&mut rng, n, density);
        let exact = chi_odd(&g, 9, &cfg()).unwrap();
        // k^V grows fast, so stop the oracle once the answer is reached
        let k = exact.expect("every graph has an odd colouring with V colours");
        assert_eq!(chi_odd_bruteforce(&g, k, u64::MAX).unwrap(), exact);
    }
}
