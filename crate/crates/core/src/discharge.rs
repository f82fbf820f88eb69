//! Discharging with exact rational charges.
//!
//! Every vertex starts with `d(v) - 6` and every face with `2 d(f) - 6`, so
//! the total is `6 (E - V - F)`. Four local rules then move charge from a
//! frozen snapshot of the initial state:
//!
//! 1. every face of size at least 5 sends 11/10 to each incident 5-vertex;
//! 2. every 4-face sends 1 to each incident 5-vertex, or 3/4 when its
//!    boundary reads two adjacent 5-vertices then two adjacent 6+-vertices;
//! 3. for 6+-vertices `u, v` adjacent along a 4+-face `f` whose edge `uv`
//!    also lies on a triangle `uvw` with `w` a 5-vertex, `f` sends 1/2 to `w`;
//! 4. every 7+-vertex with a 5-neighbour splits `d(v) - 6` evenly over its
//!    blocks, and evenly within each block.
//!
//! Repeated appearances of a vertex on a face boundary count separately.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::embedding::{EmbeddedGraph, Face};
use crate::error::DischargeError;

pub type Charge = Ratio<i64>;

fn q(n: i64, d: i64) -> Charge {
    Ratio::new(n, d)
}

/// Renders a charge as `p/q`, including `0/1` and `-12/1`.
pub fn charge_text(c: &Charge) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Initial,
    Discharged,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    Vertex(usize),
    Face(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Faces of size 5 or more feed their 5-vertices.
    LargeFace,
    /// 4-faces feed their 5-vertices.
    FourFace,
    /// A 4+-face pays the 5-vertex apex of the triangle across a 6+6+ edge.
    TriangleApex,
    /// A 7+-vertex shares its excess over its blocks of 5-neighbours.
    Blocks,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::LargeFace => "R1",
            Rule::FourFace => "R2",
            Rule::TriangleApex => "R3",
            Rule::Blocks => "R4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Site,
    pub to: usize,
    pub amount: Charge,
}

/// Charges on every vertex and face of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub phase: Phase,
    pub vertex_charge: Vec<Charge>,
    pub face_charge: Vec<Charge>,
    faces: Vec<Face>,
    degrees: Vec<usize>,
    fingerprint: u64,
    /// Transfers applied to reach this ledger; empty in the initial phase.
    pub transfers: Vec<Transfer>,
}

fn fingerprint(g: &EmbeddedGraph) -> u64 {
    let mut h = DefaultHasher::new();
    g.rotations().hash(&mut h);
    h.finish()
}

impl ChargeLedger {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn total(&self) -> Charge {
        self.vertex_charge.iter().chain(&self.face_charge).copied().sum()
    }

    /// Charge sent out by each face through the rules.
    pub fn face_outflow(&self) -> Vec<Charge> {
        let mut out = vec![Charge::zero(); self.faces.len()];
        for t in &self.transfers {
            if let Site::Face(f) = t.from {
                out[f] += t.amount;
            }
        }
        out
    }

    /// Charge received by each vertex through the rules.
    pub fn vertex_inflow(&self) -> Vec<Charge> {
        let mut inflow = vec![Charge::zero(); self.degrees.len()];
        for t in &self.transfers {
            inflow[t.to] += t.amount;
        }
        inflow
    }
}

/// Initial charges `d(v) - 6` and `2 d(f) - 6`.
pub fn initial_charges(g: &EmbeddedGraph) -> Result<ChargeLedger, DischargeError> {
    if !g.is_connected() {
        return Err(DischargeError::Embedding(crate::error::EmbeddingError::Disconnected));
    }
    let faces = g.trace_faces();
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    Ok(ChargeLedger {
        phase: Phase::Initial,
        vertex_charge: degrees.iter().map(|&d| Charge::from_integer(d as i64 - 6)).collect(),
        face_charge: faces.iter().map(|f| Charge::from_integer(2 * f.size() as i64 - 6)).collect(),
        faces,
        degrees,
        fingerprint: fingerprint(g),
        transfers: Vec::new(),
    })
}

/// A maximal run of consecutive 5-vertices around a 7+-vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub center: usize,
    /// Members in rotation order.
    pub members: Vec<usize>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Blocks around `v`, ordered by the rotation position where each run starts.
pub fn blocks(g: &EmbeddedGraph, v: usize) -> Result<Vec<Block>, DischargeError> {
    let d = g.degree(v);
    if d < 7 {
        return Err(DischargeError::DegreeTooSmall { vertex: v, degree: d });
    }
    Ok(runs_of_fives(v, g.rotation(v), &|w| g.degree(w) == 5))
}

fn runs_of_fives(center: usize, rot: &[usize], is_five: &dyn Fn(usize) -> bool) -> Vec<Block> {
    let d = rot.len();
    let five: Vec<bool> = rot.iter().map(|&w| is_five(w)).collect();
    if five.iter().all(|&b| b) {
        return vec![Block { center, members: rot.to_vec() }];
    }
    let mut out = Vec::new();
    for start in 0..d {
        if five[start] && !five[(start + d - 1) % d] {
            let members = (0..d).map(|k| (start + k) % d).take_while(|&k| five[k]).map(|k| rot[k]).collect();
            out.push(Block { center, members });
        }
    }
    out
}

/// Applies all four rules to an initial ledger.
pub fn apply_rules(g: &EmbeddedGraph, ledger: &ChargeLedger) -> Result<ChargeLedger, DischargeError> {
    if ledger.phase != Phase::Initial {
        return Err(DischargeError::Phase { expected: Phase::Initial, found: ledger.phase });
    }
    if ledger.fingerprint != fingerprint(g) {
        return Err(DischargeError::GraphMismatch);
    }
    let deg = |v: usize| ledger.degrees[v];
    let faces = &ledger.faces;
    let dart_face = g.dart_faces(faces);
    let mut transfers = Vec::new();

    for (fi, face) in faces.iter().enumerate() {
        let size = face.size();
        let ring: Vec<usize> = face.vertices().collect();
        if size >= 5 {
            for &v in ring.iter().filter(|&&v| deg(v) == 5) {
                transfers.push(Transfer { rule: Rule::LargeFace, from: Site::Face(fi), to: v, amount: q(11, 10) });
            }
        }
        if size == 4 {
            let pattern = (0..4).any(|s| {
                deg(ring[s]) == 5
                    && deg(ring[(s + 1) % 4]) == 5
                    && deg(ring[(s + 2) % 4]) >= 6
                    && deg(ring[(s + 3) % 4]) >= 6
            });
            let amount = if pattern { q(3, 4) } else { q(1, 1) };
            for &v in ring.iter().filter(|&&v| deg(v) == 5) {
                transfers.push(Transfer { rule: Rule::FourFace, from: Site::Face(fi), to: v, amount });
            }
        }
        if size >= 4 {
            for &(u, v) in face.walk() {
                if deg(u) < 6 || deg(v) < 6 {
                    continue;
                }
                let other = &faces[dart_face[&(v, u)]];
                if other.size() != 3 {
                    continue;
                }
                // the triangle's walk is (v,u), (u,w), (w,v)
                let w =
                    other.walk().iter().find(|&&(a, _)| a == u).map(|&(_, b)| b).expect("triangle has a dart out of u");
                if deg(w) == 5 {
                    transfers.push(Transfer { rule: Rule::TriangleApex, from: Site::Face(fi), to: w, amount: q(1, 2) });
                }
            }
        }
    }

    for v in 0..g.vertex_count() {
        if deg(v) < 7 {
            continue;
        }
        let found = runs_of_fives(v, g.rotation(v), &|w| deg(w) == 5);
        if found.is_empty() {
            continue;
        }
        let per_block = Charge::from_integer(deg(v) as i64 - 6) / Charge::from_integer(found.len() as i64);
        for block in &found {
            let share = per_block / Charge::from_integer(block.size() as i64);
            for &w in &block.members {
                transfers.push(Transfer { rule: Rule::Blocks, from: Site::Vertex(v), to: w, amount: share });
            }
        }
    }

    let mut next = ledger.clone();
    next.phase = Phase::Discharged;
    for t in &transfers {
        match t.from {
            Site::Face(f) => next.face_charge[f] -= t.amount,
            Site::Vertex(v) => next.vertex_charge[v] -= t.amount,
        }
        next.vertex_charge[t.to] += t.amount;
    }
    next.transfers = transfers;
    Ok(next)
}

/// Facts about a discharging run. It does not claim any sign pattern holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub total_before: Charge,
    pub total_after: Charge,
    pub conserved: bool,
    /// `(face index, final charge)` for faces ending negative.
    pub negative_faces: Vec<(usize, Charge)>,
    /// 6+-vertices ending negative.
    pub negative_large_vertices: Vec<(usize, Charge)>,
    /// 5-vertices ending with charge at most zero.
    pub nonpositive_five_vertices: Vec<(usize, Charge)>,
}

pub fn audit(before: &ChargeLedger, after: &ChargeLedger) -> Result<AuditReport, DischargeError> {
    if before.phase != Phase::Initial {
        return Err(DischargeError::Phase { expected: Phase::Initial, found: before.phase });
    }
    if after.phase != Phase::Discharged {
        return Err(DischargeError::Phase { expected: Phase::Discharged, found: after.phase });
    }
    if before.fingerprint != after.fingerprint || before.faces != after.faces {
        return Err(DischargeError::GraphMismatch);
    }
    let total_before = before.total();
    let total_after = after.total();
    let negative_faces =
        after.face_charge.iter().enumerate().filter(|(_, c)| c.is_negative()).map(|(f, &c)| (f, c)).collect();
    let negative_large_vertices = after
        .vertex_charge
        .iter()
        .enumerate()
        .filter(|&(v, c)| after.degrees[v] >= 6 && c.is_negative())
        .map(|(v, &c)| (v, c))
        .collect();
    let nonpositive_five_vertices = after
        .vertex_charge
        .iter()
        .enumerate()
        .filter(|&(v, c)| after.degrees[v] == 5 && !c.is_positive())
        .map(|(v, &c)| (v, c))
        .collect();
    Ok(AuditReport {
        total_before,
        total_after,
        conserved: total_before == total_after,
        negative_faces,
        negative_large_vertices,
        nonpositive_five_vertices,
    })
}

/// Initial charges, rules and audit in one call.
pub fn discharge(g: &EmbeddedGraph) -> Result<(ChargeLedger, ChargeLedger, AuditReport), DischargeError> {
    let before = initial_charges(g)?;
    let after = apply_rules(g, &before)?;
    let report = audit(&before, &after)?;
    Ok((before, after, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    #[test]
    fn k4_initial_charges() {
        let g = graphs::k4_planar();
        let l = initial_charges(&g).unwrap();
        assert!(l.vertex_charge.iter().all(|&c| c == q(-3, 1)));
        assert!(l.face_charge.iter().all(|c| c.is_zero()));
        assert_eq!(l.total(), q(-12, 1));
        let (_, after, report) = discharge(&g).unwrap();
        assert!(after.transfers.is_empty());
        assert!(report.conserved);
        assert_eq!(report.total_after, q(-12, 1));
        assert!(report.negative_large_vertices.is_empty());
    }

    #[test]
    fn c5_initial_charges() {
        let l = initial_charges(&graphs::cycle(5)).unwrap();
        assert!(l.vertex_charge.iter().all(|&c| c == q(-4, 1)));
        assert_eq!(l.face_charge, vec![q(4, 1), q(4, 1)]);
        assert_eq!(l.total(), q(-12, 1));
    }

    #[test]
    fn block_runs() {
        // 5, 6+, 5, 6+, 5, 5, 6+, 6+ around an 8-vertex
        let rot: Vec<usize> = (1..=8).collect();
        let fives = [1, 3, 5, 6];
        let b = runs_of_fives(0, &rot, &|w| fives.contains(&w));
        let sizes: Vec<usize> = b.iter().map(Block::size).collect();
        assert_eq!(sizes, vec![1, 1, 2]);
        assert!(runs_of_fives(0, &rot[..7], &|_| false).is_empty());
        let all = runs_of_fives(0, &rot[..7], &|_| true);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].size(), 7);
        // a run wrapping past the end of the rotation is one block
        let wrap = runs_of_fives(0, &rot, &|w| w == 8 || w == 1 || w == 4);
        assert_eq!(wrap.iter().map(|b| b.members.clone()).collect::<Vec<_>>(), vec![vec![4], vec![8, 1]]);
    }

    #[test]
    fn blocks_needs_degree_seven() {
        let g = graphs::k4_planar();
        assert_eq!(blocks(&g, 0), Err(DischargeError::DegreeTooSmall { vertex: 0, degree: 3 }));
    }

    #[test]
    fn phase_and_mismatch_errors() {
        let g = graphs::k4_planar();
        let (before, after, _) = discharge(&g).unwrap();
        assert!(matches!(apply_rules(&g, &after), Err(DischargeError::Phase { .. })));
        assert!(matches!(audit(&after, &after), Err(DischargeError::Phase { .. })));
        let other = initial_charges(&graphs::cycle(5)).unwrap();
        assert_eq!(apply_rules(&g, &other), Err(DischargeError::GraphMismatch));
        let other_after = apply_rules(&graphs::cycle(5), &other).unwrap();
        assert_eq!(audit(&before, &other_after), Err(DischargeError::GraphMismatch));
    }

    #[test]
    fn charge_text_is_a_fraction() {
        assert_eq!(charge_text(&Charge::zero()), "0/1");
        assert_eq!(charge_text(&q(-12, 1)), "-12/1");
        assert_eq!(charge_text(&q(11, 10)), "11/10");
    }
}
