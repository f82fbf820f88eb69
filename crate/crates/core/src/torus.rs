//! The 6-regular torus triangulations `T(m, n, t)`.
//!
//! Vertex `(i, j)` with `1 <= i <= m`, `1 <= j <= n` sits in column `i`, row
//! `j`. Rows wrap directly; column `m` is glued to column `1` with a shift of
//! `t` rows. Adjacency:
//!
//! * `(i, j) ~ (i, j + 1)`
//! * `(i, j) ~ (i + 1, j)` and `(i + 1, j - 1)` for `i < m`
//! * `(m, j) ~ (1, j - t)` and `(1, j - t - 1)`
//!
//! with row arithmetic modulo `n`.

use std::fmt;

use crate::embedding::EmbeddedGraph;
use crate::error::TorusError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusParams {
    pub m: usize,
    pub n: usize,
    pub t: usize,
}

impl TorusParams {
    pub fn new(m: usize, n: usize, t: usize) -> Result<Self, TorusError> {
        if m == 0 || n == 0 {
            return Err(TorusError::ZeroDimension { m, n });
        }
        if t >= n {
            return Err(TorusError::ShiftOutOfRange { t, n });
        }
        Ok(Self { m, n, t })
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    /// Flat 0-based index of `(i, j)`. The 1-based id is this plus one,
    /// i.e. `(i - 1) * n + j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j));
        (i - 1) * self.n + (j - 1)
    }

    /// Inverse of [`TorusParams::index`].
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.n + 1, v % self.n + 1)
    }

    /// Reduces a row number into `1..=n`.
    pub fn row(&self, j: i64) -> usize {
        (j - 1).rem_euclid(self.n as i64) as usize + 1
    }

    /// Neighbours of `(i, j)` in counter-clockwise order of the grid drawing:
    /// right, up, upper-left, left, down, lower-right.
    pub fn rotation_at(&self, i: usize, j: usize) -> [(usize, usize); 6] {
        let (m, t) = (self.m, self.t as i64);
        let j = j as i64;
        let (right, lower_right) = if i < m {
            ((i + 1, self.row(j)), (i + 1, self.row(j - 1)))
        } else {
            ((1, self.row(j - t)), (1, self.row(j - t - 1)))
        };
        let (left, upper_left) = if i > 1 {
            ((i - 1, self.row(j)), (i - 1, self.row(j + 1)))
        } else {
            ((m, self.row(j + t)), (m, self.row(j + t + 1)))
        };
        let up = (i, self.row(j + 1));
        let down = (i, self.row(j - 1));
        [right, up, upper_left, left, down, lower_right]
    }

    /// All parameter triples with `m <= max_m`, `min_n <= n <= max_n`,
    /// `0 <= t < n`, in lexicographic order. Not filtered by simplicity.
    pub fn all_up_to(max_m: usize, min_n: usize, max_n: usize) -> impl Iterator<Item = TorusParams> {
        (1..=max_m)
            .flat_map(move |m| (min_n.max(1)..=max_n).flat_map(move |n| (0..n).map(move |t| TorusParams { m, n, t })))
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.m, self.n, self.t)
    }
}

/// Why a parameter triple does not give a simple graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityWitness {
    Loop { at: (usize, usize) },
    ParallelEdge { at: (usize, usize), neighbour: (usize, usize) },
}

impl fmt::Display for SimplicityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimplicityWitness::Loop { at: (i, j) } => write!(f, "loop at ({i},{j})"),
            SimplicityWitness::ParallelEdge { at: (i, j), neighbour: (a, b) } => {
                write!(f, "({i},{j}) is joined to ({a},{b}) more than once")
            }
        }
    }
}

/// Materialises the adjacency of `p` and returns the first defect found,
/// scanning vertices in index order.
pub fn simplicity_witness(p: &TorusParams) -> Option<SimplicityWitness> {
    for v in 0..p.vertex_count() {
        let (i, j) = p.coords(v);
        let rot = p.rotation_at(i, j);
        for (k, &w) in rot.iter().enumerate() {
            if w == (i, j) {
                return Some(SimplicityWitness::Loop { at: (i, j) });
            }
            if rot[..k].contains(&w) {
                return Some(SimplicityWitness::ParallelEdge { at: (i, j), neighbour: w });
            }
        }
    }
    None
}

pub fn is_simple(p: &TorusParams) -> bool {
    simplicity_witness(p).is_none()
}

/// Builds `T(m, n, t)` with its grid rotation system.
pub fn generate(p: &TorusParams) -> Result<EmbeddedGraph, TorusError> {
    let p = TorusParams::new(p.m, p.n, p.t)?;
    if let Some(witness) = simplicity_witness(&p) {
        return Err(TorusError::NotSimple { params: p, witness });
    }
    let rotations = (0..p.vertex_count())
        .map(|v| {
            let (i, j) = p.coords(v);
            p.rotation_at(i, j).iter().map(|&(a, b)| p.index(a, b)).collect()
        })
        .collect();
    Ok(EmbeddedGraph::new(rotations).expect("grid rotation of a simple T(m,n,t) is a valid rotation system"))
}

/// `T(1, n, t)` and `T(1, n, n - t - 1)` have the same edge set; returns the
/// representative with the smaller shift.
pub fn canonical_m1(n: usize, t: usize) -> (usize, usize) {
    assert!(t < n, "shift t={t} out of range for n={n}");
    (n, t.min(n - t - 1))
}
