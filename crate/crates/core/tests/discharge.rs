mod common;

use num_traits::Zero;
use oddcolour::discharge::{discharge, initial_charges, Charge, Rule, Site};
use oddcolour::{generate, graphs, is_simple, EmbeddedGraph, TorusParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

/// `base` rotations with `extra[v]` fresh leaves appended after vertex `v`'s
/// listed neighbours.
fn with_leaves(base: Vec<Vec<usize>>, extra: &[usize]) -> EmbeddedGraph {
    let mut rot = base;
    let mut next = rot.len();
    for (v, &k) in extra.iter().enumerate() {
        for _ in 0..k {
            rot[v].push(next);
            rot.push(vec![v]);
            next += 1;
        }
    }
    EmbeddedGraph::new(rot).unwrap()
}

fn received(g: &EmbeddedGraph, rule: Rule) -> Vec<(usize, Charge)> {
    let (_, after, _) = discharge(g).unwrap();
    let mut out: Vec<_> = after.transfers.iter().filter(|t| t.rule == rule).map(|t| (t.to, t.amount)).collect();
    out.sort();
    out
}

#[test]
fn torus_ledgers_are_identically_zero() {
    for p in TorusParams::all_up_to(10, 3, 12).filter(is_simple) {
        let (before, after, report) = discharge(&generate(&p).unwrap()).unwrap();
        for l in [&before, &after] {
            assert!(l.vertex_charge.iter().chain(&l.face_charge).all(Zero::is_zero), "{p}");
        }
        assert!(after.transfers.is_empty());
        assert!(report.conserved && report.total_after.is_zero());
    }
}

#[test]
fn random_embeddings_conserve_charge() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.gen_range(2..20);
        let density = rng.gen_range(0.05..0.8);
        let g = common::random_embedded(&mut rng, n, density);
        let (before, _, report) = discharge(&g).unwrap();
        let expected = 6 * (g.edge_count() as i64 - n as i64 - before.faces().len() as i64);
        assert!(report.conserved);
        assert_eq!(report.total_before, Charge::from_integer(expected));
        assert_eq!(report.total_after, report.total_before);
    }
}

/// Deletes a random matching from a torus triangulation, so every vertex
/// keeps degree 5 or 6 and merged triangles become 4-faces.
fn thinned_torus<R: Rng>(rng: &mut R, p: &TorusParams) -> EmbeddedGraph {
    let mut g = generate(p).unwrap();
    let mut touched = vec![false; g.vertex_count()];
    let edges: Vec<_> = g.edges().collect();
    for (u, v) in edges {
        if !touched[u] && !touched[v] && rng.gen_bool(0.3) {
            g = common::delete_edge(&g, u, v);
            touched[u] = true;
            touched[v] = true;
        }
    }
    g
}

#[test]
fn face_payouts_respect_the_per_incidence_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut fours = 0;
    for p in TorusParams::all_up_to(6, 4, 9).filter(|p| p.m >= 3 && is_simple(p)) {
        let g = thinned_torus(&mut rng, &p);
        let (before, after, report) = discharge(&g).unwrap();
        assert!(report.conserved && report.total_after.is_zero(), "{p}");
        for (f, out) in after.face_outflow().iter().enumerate() {
            let face = &before.faces()[f];
            fours += usize::from(face.size() == 4);
            let bound: Charge = face.vertices().map(|v| if before.degree(v) == 5 { q(11, 10) } else { q(1, 2) }).sum();
            assert!(*out <= bound, "{p} face {f}: {out} > {bound}");
        }
    }
    assert!(fours > 0);
}

#[test]
fn blocks_split_evenly() {
    // an 8-vertex whose neighbours 1..=8 read 5, 5, 6+, 5, 6+, 5, 6+, 6+
    let mut rot = vec![(1..=8).collect::<Vec<usize>>()];
    rot.extend((1..=8).map(|_| vec![0]));
    let g = with_leaves(rot, &[0, 4, 4, 0, 4, 0, 4, 0, 0]);
    let got = received(&g, Rule::Blocks);
    assert_eq!(got, vec![(1, q(1, 3)), (2, q(1, 3)), (4, q(2, 3)), (6, q(2, 3))]);
    let total: Charge = got.iter().map(|&(_, a)| a).sum();
    assert_eq!(total, q(2, 1));
}

fn square(degree_five: [bool; 4]) -> EmbeddedGraph {
    // 4-cycle 0-1-2-3 whose inner side is a 4-face
    let rot = (0..4).map(|v| vec![(v + 3) % 4, (v + 1) % 4]).collect();
    let extra: Vec<usize> = degree_five.iter().map(|&f| if f { 3 } else { 4 }).collect();
    with_leaves(rot, &extra)
}

#[test]
fn four_face_pays_three_quarters_to_adjacent_fives() {
    assert_eq!(received(&square([true, true, false, false]), Rule::FourFace), vec![(0, q(3, 4)), (1, q(3, 4))]);
    assert_eq!(received(&square([false, true, true, false]), Rule::FourFace), vec![(1, q(3, 4)), (2, q(3, 4))]);
    assert_eq!(received(&square([true, false, true, false]), Rule::FourFace), vec![(0, q(1, 1)), (2, q(1, 1))]);
    assert_eq!(received(&square([true, true, true, false]), Rule::FourFace).len(), 3);
}

#[test]
fn triangle_apex_is_paid_across_a_large_edge() {
    // u = 0, v = 1, w = 2 form a triangle; u, v, a = 3, b = 4 a square
    let rot = vec![vec![4, 1, 2], vec![2, 0, 3], vec![0, 1], vec![1, 4], vec![3, 0]];
    let g = with_leaves(rot, &[3, 3, 3, 0, 0]);
    let got = received(&g, Rule::TriangleApex);
    assert_eq!(got, vec![(2, q(1, 2))]);
    let (before, after, _) = discharge(&g).unwrap();
    let t = after.transfers.iter().find(|t| t.rule == Rule::TriangleApex).unwrap();
    let Site::Face(f) = t.from else { panic!("sender must be a face") };
    assert_eq!(before.faces()[f].size(), 4);
}

#[test]
fn initial_charges_are_degree_based() {
    let g = graphs::icosahedron();
    let l = initial_charges(&g).unwrap();
    assert!(l.vertex_charge.iter().all(|&c| c == q(-1, 1)));
    assert_eq!(l.total(), q(-12, 1));
}
