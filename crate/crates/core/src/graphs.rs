//! Small named graphs with fixed rotation systems.

use crate::embedding::EmbeddedGraph;

/// Builds a graph from an edge list, using ascending neighbour order as the
/// rotation at every vertex.
pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> EmbeddedGraph {
    let mut rot = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        rot[u].push(v);
        rot[v].push(u);
    }
    for r in &mut rot {
        r.sort_unstable();
    }
    EmbeddedGraph::new(rot).expect("edge list must describe a simple graph")
}

/// The cycle `C_n` embedded in the sphere, `n >= 3`.
pub fn cycle(n: usize) -> EmbeddedGraph {
    assert!(n >= 3);
    EmbeddedGraph::new((0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()).unwrap()
}

/// The path on `n` vertices.
pub fn path(n: usize) -> EmbeddedGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    from_edges(n, &edges)
}

/// `K_n` with every rotation in ascending order.
pub fn complete(n: usize) -> EmbeddedGraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    from_edges(n, &edges)
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> EmbeddedGraph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    from_edges(leaves + 1, &edges)
}

/// `K_4` with a planar rotation system (the tetrahedron).
pub fn k4_planar() -> EmbeddedGraph {
    EmbeddedGraph::new(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap()
}

/// The icosahedron: planar, 5-regular, 20 triangular faces.
pub fn icosahedron() -> EmbeddedGraph {
    // top 0, upper ring 1..=5, lower ring 6..=10, bottom 11
    let mut rot = vec![Vec::new(); 12];
    rot[0] = (1..=5).collect();
    rot[11] = (6..=10).rev().collect();
    for k in 0..5 {
        let up = 1 + k;
        let up_next = 1 + (k + 1) % 5;
        let up_prev = 1 + (k + 4) % 5;
        let low = 6 + k;
        let low_prev = 6 + (k + 4) % 5;
        let low_next = 6 + (k + 1) % 5;
        rot[up] = vec![0, up_prev, low_prev, low, up_next];
        rot[low] = vec![11, low_next, up_next, up, low_prev];
    }
    EmbeddedGraph::new(rot).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graph_counts() {
        assert_eq!(complete(7).edge_count(), 21);
        assert_eq!(star(3).degree(0), 3);
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(k4_planar().euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn icosahedron_is_a_planar_triangulation() {
        let g = icosahedron();
        assert_eq!(g.edge_count(), 30);
        assert!((0..12).all(|v| g.degree(v) == 5));
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 20);
        assert!(faces.iter().all(|f| f.size() == 3));
        assert_eq!(g.euler_characteristic().unwrap(), 2);
    }
}
