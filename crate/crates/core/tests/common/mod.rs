#![allow(dead_code)]

use oddcolour::graphs;
use oddcolour::EmbeddedGraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// pair with probability `p`. Rotations are random permutations, so the
/// embedding surface is arbitrary.
pub fn random_embedded<R: Rng>(rng: &mut R, n: usize, p: f64) -> EmbeddedGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    shuffle_rotations(rng, &graphs::from_edges(n, &edges))
}

pub fn shuffle_rotations<R: Rng>(rng: &mut R, g: &EmbeddedGraph) -> EmbeddedGraph {
    let rotations = g
        .rotations()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.shuffle(rng);
            r
        })
        .collect();
    EmbeddedGraph::new(rotations).expect("a permuted rotation system is still valid")
}

/// Removes edge `{u, v}` from the rotation system, keeping the cyclic order
/// of the remaining neighbours.
pub fn delete_edge(g: &EmbeddedGraph, u: usize, v: usize) -> EmbeddedGraph {
    let rotations = g
        .rotations()
        .iter()
        .enumerate()
        .map(|(x, r)| r.iter().copied().filter(|&y| !((x == u && y == v) || (x == v && y == u))).collect())
        .collect();
    EmbeddedGraph::new(rotations).expect("deleting an edge keeps the rotation symmetric")
}

/// Every connected graph on `n` labelled vertices, as edge lists. Used only
/// for `n <= 6`.
pub fn connected_labelled(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>())
        .filter(|edges| is_connected(n, edges))
        .collect()
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One representative per isomorphism class, by minimum adjacency bitmask
/// over all vertex permutations.
pub fn isomorph_free(n: usize, graphs: Vec<Vec<(usize, usize)>>) -> Vec<Vec<(usize, usize)>> {
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    graphs
        .into_iter()
        .filter(|edges| {
            let canon = perms
                .iter()
                .map(|p| {
                    edges.iter().fold(0u64, |acc, &(u, v)| {
                        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                        acc | 1 << (a * n + b)
                    })
                })
                .min()
                .unwrap_or(0);
            seen.insert(canon)
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
