//! Simple graphs with an orientable combinatorial embedding.
//!
//! An [`EmbeddedGraph`] stores, for every vertex, the cyclic order of its
//! neighbours (a rotation system). Faces are traced from the rotations: the
//! successor of the dart `(u, v)` is `(v, w)` where `w` is the neighbour
//! immediately after `u` in the rotation at `v`.

use std::collections::{HashMap, VecDeque};

use crate::error::EmbeddingError;

/// A simple graph together with a rotation system.
///
/// Vertices are dense indices `0..vertex_count`. File formats and the CLI
/// present them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedGraph {
    rotation: Vec<Vec<usize>>,
    // back[v][k] = position of v inside rotation[rotation[v][k]]
    back: Vec<Vec<usize>>,
    edge_count: usize,
}

/// One directed edge, written as `(tail, head)`.
pub type Dart = (usize, usize);

/// A traced face: a closed boundary walk of darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    walk: Vec<Dart>,
}

impl Face {
    /// Darts of the boundary walk in tracing order.
    pub fn walk(&self) -> &[Dart] {
        &self.walk
    }

    /// Number of vertex appearances on the boundary, with multiplicity.
    pub fn size(&self) -> usize {
        self.walk.len()
    }

    /// Vertex appearances in walk order (the tail of each dart).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.walk.iter().map(|&(u, _)| u)
    }
}

impl EmbeddedGraph {
    /// Validates a rotation system and builds the graph.
    ///
    /// `rotations[v]` lists the neighbours of `v` in cyclic order. An empty
    /// list is an isolated vertex.
    pub fn new(rotations: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = rotations.len();
        if n == 0 {
            return Err(EmbeddingError::Empty);
        }
        let mut position: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, rot) in rotations.iter().enumerate() {
            for (k, &w) in rot.iter().enumerate() {
                if w >= n {
                    return Err(EmbeddingError::VertexOutOfRange { vertex: v, neighbour: w, vertex_count: n });
                }
                if w == v {
                    return Err(EmbeddingError::SelfLoop { vertex: v });
                }
                if position.insert((v, w), k).is_some() {
                    return Err(EmbeddingError::RepeatedNeighbour { vertex: v, neighbour: w });
                }
            }
        }
        let mut back = Vec::with_capacity(n);
        let mut darts = 0usize;
        for (v, rot) in rotations.iter().enumerate() {
            let mut row = Vec::with_capacity(rot.len());
            for &w in rot {
                match position.get(&(w, v)) {
                    Some(&p) => row.push(p),
                    None => return Err(EmbeddingError::AsymmetricRotation { from: v, to: w }),
                }
            }
            darts += rot.len();
            back.push(row);
        }
        Ok(Self { rotation: rotations, back, edge_count: darts / 2 })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Neighbours of `v` in rotation order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        // rotations are short in every graph we build; a scan beats hashing
        self.rotation[u].contains(&v)
    }

    /// Every undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rotation.iter().enumerate().flat_map(|(u, rot)| rot.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.rotation[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    /// The dart that follows `(v, rotation[v][slot])` on its face.
    fn successor(&self, v: usize, slot: usize) -> (usize, usize) {
        let w = self.rotation[v][slot];
        let p = self.back[v][slot];
        let next = (p + 1) % self.rotation[w].len();
        (w, next)
    }

    /// Traces every face of the embedding. Each dart lies on exactly one face.
    ///
    /// Faces are emitted in order of their first dart, scanning vertices by
    /// index and each rotation from its first entry.
    pub fn trace_faces(&self) -> Vec<Face> {
        let mut visited: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for v in 0..self.vertex_count() {
            for slot in 0..self.rotation[v].len() {
                if visited[v][slot] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut cv, mut cs) = (v, slot);
                while !visited[cv][cs] {
                    visited[cv][cs] = true;
                    walk.push((cv, self.rotation[cv][cs]));
                    (cv, cs) = self.successor(cv, cs);
                }
                faces.push(Face { walk });
            }
        }
        faces
    }

    /// Maps every dart to the index of the face containing it.
    pub fn dart_faces(&self, faces: &[Face]) -> HashMap<Dart, usize> {
        faces.iter().enumerate().flat_map(|(i, f)| f.walk.iter().map(move |&d| (d, i))).collect()
    }

    /// `V - E + F` of the surface this rotation system embeds into.
    pub fn euler_characteristic(&self) -> Result<i64, EmbeddingError> {
        if !self.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let faces = if self.edge_count == 0 { 1 } else { self.trace_faces().len() };
        Ok(self.vertex_count() as i64 - self.edge_count as i64 + faces as i64)
    }

    /// True iff the graph is 6-regular, every face is a triangle and the
    /// surface is the torus.
    pub fn is_6regular_triangulation(&self) -> Result<bool, EmbeddingError> {
        let chi = self.euler_characteristic()?;
        if chi != 0 || self.rotation.iter().any(|r| r.len() != 6) {
            return Ok(false);
        }
        Ok(self.trace_faces().iter().all(|f| f.size() == 3))
    }

    /// Degree histogram: `hist[d]` counts the vertices of degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let max = self.rotation.iter().map(Vec::len).max().unwrap_or(0);
        let mut hist = vec![0; max + 1];
        for r in &self.rotation {
            hist[r.len()] += 1;
        }
        hist
    }
}
