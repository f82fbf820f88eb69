//! Colourings and the proper / odd / conflict-free / nice checks.

use std::collections::BTreeSet;
use std::fmt;

use crate::embedding::EmbeddedGraph;
use crate::error::ColouringError;

/// Largest colour a nice colouring may use.
pub const NICE_COLOURS: u32 = 9;

/// A total vertex colouring with positive integer colours.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<u32>,
}

impl Colouring {
    pub fn new(colours: Vec<u32>) -> Result<Self, ColouringError> {
        if let Some(vertex) = colours.iter().position(|&c| c == 0) {
            return Err(ColouringError::ZeroColour { vertex });
        }
        Ok(Self { colours })
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn set(&mut self, v: usize, colour: u32) {
        assert!(colour > 0, "colours are positive");
        self.colours[v] = colour;
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        self.colours.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_colour(&self) -> u32 {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    /// Vertices whose colour differs between `self` and `other`.
    pub fn diff(&self, other: &Colouring) -> Vec<usize> {
        (0..self.len().min(other.len())).filter(|&v| self.colours[v] != other.colours[v]).collect()
    }

    fn check_total(&self, g: &EmbeddedGraph) -> Result<(), ColouringError> {
        if self.colours.len() != g.vertex_count() {
            return Err(ColouringError::Partial { expected: g.vertex_count(), got: self.colours.len() });
        }
        Ok(())
    }
}

/// A concrete reason a colouring fails a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Both endpoints of the edge share `colour`.
    Improper { u: usize, v: usize, colour: u32 },
    /// Every colour appears an even number of times around `vertex`.
    NotOdd { vertex: usize },
    /// No colour appears exactly once around `vertex`.
    NoUniqueColour { vertex: usize },
    /// A colour above the nice bound.
    ColourOutOfRange { vertex: usize, colour: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based ids, matching the file formats
        match *self {
            Violation::Improper { u, v, colour } => {
                write!(f, "edge {{{},{}}} has both ends coloured {colour}", u + 1, v + 1)
            }
            Violation::NotOdd { vertex } => {
                write!(f, "every colour appears an even number of times around vertex {}", vertex + 1)
            }
            Violation::NoUniqueColour { vertex } => {
                write!(f, "no colour appears exactly once around vertex {}", vertex + 1)
            }
            Violation::ColourOutOfRange { vertex, colour } => {
                write!(f, "vertex {} has colour {colour} > {NICE_COLOURS}", vertex + 1)
            }
        }
    }
}

/// Multiplicities of the colours around `v`, sorted by colour.
pub fn neighbourhood_counts(g: &EmbeddedGraph, c: &Colouring, v: usize) -> Vec<(u32, usize)> {
    let mut cols: Vec<u32> = g.neighbours(v).map(|w| c.colour(w)).collect();
    cols.sort_unstable();
    let mut out: Vec<(u32, usize)> = Vec::new();
    for col in cols {
        match out.last_mut() {
            Some((last, k)) if *last == col => *k += 1,
            _ => out.push((col, 1)),
        }
    }
    out
}

/// Some colour appears an odd number of times around `v`. Isolated vertices
/// pass vacuously.
pub fn is_odd_at(g: &EmbeddedGraph, c: &Colouring, v: usize) -> bool {
    g.degree(v) == 0 || neighbourhood_counts(g, c, v).iter().any(|&(_, k)| k % 2 == 1)
}

/// Some colour appears exactly once around `v`. Isolated vertices pass.
pub fn is_conflict_free_at(g: &EmbeddedGraph, c: &Colouring, v: usize) -> bool {
    g.degree(v) == 0 || neighbourhood_counts(g, c, v).iter().any(|&(_, k)| k == 1)
}

pub fn proper_violation(g: &EmbeddedGraph, c: &Colouring) -> Result<Option<Violation>, ColouringError> {
    c.check_total(g)?;
    Ok(g.edges().find(|&(u, v)| c.colour(u) == c.colour(v)).map(|(u, v)| Violation::Improper {
        u,
        v,
        colour: c.colour(u),
    }))
}

pub fn odd_violation(g: &EmbeddedGraph, c: &Colouring) -> Result<Option<Violation>, ColouringError> {
    c.check_total(g)?;
    Ok((0..g.vertex_count()).find(|&v| !is_odd_at(g, c, v)).map(|vertex| Violation::NotOdd { vertex }))
}

pub fn conflict_free_violation(g: &EmbeddedGraph, c: &Colouring) -> Result<Option<Violation>, ColouringError> {
    c.check_total(g)?;
    Ok((0..g.vertex_count())
        .find(|&v| !is_conflict_free_at(g, c, v))
        .map(|vertex| Violation::NoUniqueColour { vertex }))
}

/// First reason `c` is not a nice colouring: improper edges are reported
/// before oddness failures, which come before out-of-range colours.
pub fn nice_violation(g: &EmbeddedGraph, c: &Colouring) -> Result<Option<Violation>, ColouringError> {
    if let Some(v) = proper_violation(g, c)? {
        return Ok(Some(v));
    }
    if let Some(v) = odd_violation(g, c)? {
        return Ok(Some(v));
    }
    Ok(c.colours
        .iter()
        .position(|&col| col > NICE_COLOURS)
        .map(|vertex| Violation::ColourOutOfRange { vertex, colour: c.colour(vertex) }))
}

pub fn is_proper(g: &EmbeddedGraph, c: &Colouring) -> Result<bool, ColouringError> {
    Ok(proper_violation(g, c)?.is_none())
}

pub fn is_odd(g: &EmbeddedGraph, c: &Colouring) -> Result<bool, ColouringError> {
    Ok(odd_violation(g, c)?.is_none())
}

pub fn is_conflict_free(g: &EmbeddedGraph, c: &Colouring) -> Result<bool, ColouringError> {
    Ok(conflict_free_violation(g, c)?.is_none())
}

/// Proper, odd, and every colour in `1..=9`.
pub fn is_nice(g: &EmbeddedGraph, c: &Colouring) -> Result<bool, ColouringError> {
    Ok(nice_violation(g, c)?.is_none())
}

/// All verdicts at once, with the first witness for each failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub proper: Option<Violation>,
    pub odd: Option<Violation>,
    pub conflict_free: Option<Violation>,
    pub nice: Option<Violation>,
    pub colour_count: usize,
}

pub fn report(g: &EmbeddedGraph, c: &Colouring) -> Result<VerifyReport, ColouringError> {
    Ok(VerifyReport {
        proper: proper_violation(g, c)?,
        odd: odd_violation(g, c)?,
        conflict_free: conflict_free_violation(g, c)?,
        nice: nice_violation(g, c)?,
        colour_count: c.colour_count(),
    })
}
