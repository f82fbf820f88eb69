//! Exact search for odd colourings and the odd chromatic number.
//!
//! [`find_odd_colouring`] is a backtracking search that colours vertices in
//! descending degree order and prunes with the two kinds of forbidden colour:
//! a neighbour's colour (properness) and, for a neighbour `w` whose last
//! uncoloured neighbour is the current vertex, the single colour that would
//! leave every colour around `w` with even multiplicity (oddness).
//!
//! [`chi_odd_bruteforce`] enumerates every assignment and filters it through
//! the verifier; it shares no code with the search and serves as its oracle.

use std::collections::{BTreeMap, BTreeSet};

use crate::embedding::EmbeddedGraph;
use crate::error::SolverError;
use crate::verify::{self, Colouring};

/// Colour masks are `u64`, bit `c - 1` for colour `c`.
pub const MAX_SEARCH_COLOURS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of colour assignments tried; `None` is unbounded.
    pub node_budget: Option<u64>,
    /// When false, [`chi_odd`] tries all bounds in parallel.
    pub deterministic: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { node_budget: None, deterministic: true }
    }
}

/// A colouring with some vertices left blank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColouring {
    colours: Vec<Option<u32>>,
}

impl PartialColouring {
    pub fn empty(vertex_count: usize) -> Self {
        Self { colours: vec![None; vertex_count] }
    }

    pub fn from_options(colours: Vec<Option<u32>>) -> Self {
        assert!(colours.iter().all(|c| *c != Some(0)), "colours are positive");
        Self { colours }
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.colours[v]
    }

    pub fn set(&mut self, v: usize, colour: Option<u32>) {
        assert!(colour != Some(0), "colours are positive");
        self.colours[v] = colour;
    }

    pub fn uncoloured(&self) -> impl Iterator<Item = usize> + '_ {
        self.colours.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(v, _)| v)
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }
}

/// Colours that cannot be used at a vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForbiddenColours {
    /// Colours already on a neighbour.
    pub by_properness: BTreeSet<u32>,
    /// For each fully coloured neighbour `w` (apart from the vertex itself),
    /// the colour that would make every multiplicity around `w` even.
    pub by_oddness: BTreeMap<usize, u32>,
}

impl ForbiddenColours {
    pub fn all(&self) -> BTreeSet<u32> {
        self.by_properness.iter().chain(self.by_oddness.values()).copied().collect()
    }
}

/// The colour that would even out `w`'s neighbourhood if placed on `v`, when
/// `v` is the only uncoloured neighbour of `w`.
fn evening_colour(g: &EmbeddedGraph, pc: &PartialColouring, w: usize, v: usize) -> Option<Option<u32>> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for x in g.neighbours(w).filter(|&x| x != v) {
        *counts.entry(pc.get(x)?).or_default() += 1;
    }
    // Only a colour already present can be evened out; any other colour
    // would itself appear once.
    let candidates: Vec<u32> = counts
        .keys()
        .copied()
        .filter(|&x| counts.iter().all(|(&col, &k)| (k + usize::from(col == x)) % 2 == 0))
        .collect();
    assert!(candidates.len() <= 1, "two colours even out the neighbourhood of {w}: {candidates:?}");
    Some(candidates.first().copied())
}

/// Colours forbidden at the uncoloured vertex `v`.
///
/// In strict mode every neighbour of `v` must be coloured. With `relaxed`,
/// uncoloured neighbours are ignored for properness. Either way a neighbour
/// `w` only forbids a colour by oddness when `v` is its last uncoloured
/// neighbour.
pub fn forbidden_colours(
    g: &EmbeddedGraph,
    pc: &PartialColouring,
    v: usize,
    relaxed: bool,
) -> Result<ForbiddenColours, SolverError> {
    if pc.get(v).is_some() {
        return Err(SolverError::AlreadyColoured { vertex: v });
    }
    let mut out = ForbiddenColours::default();
    for w in g.neighbours(v) {
        match pc.get(w) {
            Some(c) => {
                out.by_properness.insert(c);
            }
            None if !relaxed => return Err(SolverError::NeighbourUncoloured { vertex: v, neighbour: w }),
            None => {}
        }
        if let Some(Some(b)) = evening_colour(g, pc, w, v) {
            out.by_oddness.insert(w, b);
        }
    }
    Ok(out)
}

struct Search<'a> {
    g: &'a EmbeddedGraph,
    order: Vec<usize>,
    k: usize,
    colour: Vec<u32>,
    parity: Vec<u64>,
    remaining: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a EmbeddedGraph, k: usize, budget: Option<u64>) -> Self {
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        Self {
            g,
            order,
            k,
            colour: vec![0; g.vertex_count()],
            parity: vec![0; g.vertex_count()],
            remaining: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            nodes: 0,
            budget,
        }
    }

    fn allowed(&self, v: usize, col: u32) -> bool {
        let bit = 1u64 << (col - 1);
        self.g.neighbours(v).all(|w| self.colour[w] != col && !(self.remaining[w] == 1 && self.parity[w] == bit))
    }

    fn assign(&mut self, v: usize, col: u32) {
        self.colour[v] = col;
        let bit = 1u64 << (col - 1);
        for w in self.g.neighbours(v) {
            self.parity[w] ^= bit;
            self.remaining[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let bit = 1u64 << (self.colour[v] - 1);
        self.colour[v] = 0;
        for w in self.g.neighbours(v) {
            self.parity[w] ^= bit;
            self.remaining[w] += 1;
        }
    }

    fn run(&mut self, depth: usize, max_used: u32) -> Result<bool, SolverError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let top = (max_used + 1).min(self.k as u32);
        for col in 1..=top {
            if !self.allowed(v, col) {
                continue;
            }
            self.nodes += 1;
            if let Some(budget) = self.budget {
                if self.nodes > budget {
                    return Err(SolverError::ResourceLimit { budget });
                }
            }
            self.assign(v, col);
            if self.run(depth + 1, max_used.max(col))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

fn effective_bound(g: &EmbeddedGraph, k: usize) -> Result<usize, SolverError> {
    if k == 0 {
        return Err(SolverError::ZeroBound);
    }
    let k = k.min(g.vertex_count());
    if k > MAX_SEARCH_COLOURS {
        return Err(SolverError::TooManyColours { requested: k, max: MAX_SEARCH_COLOURS });
    }
    Ok(k)
}

/// A proper odd colouring with at most `k` colours, or `None` if there is
/// none. The result is the same for every call with the same inputs.
pub fn find_odd_colouring(
    g: &EmbeddedGraph,
    k: usize,
    config: &SolverConfig,
) -> Result<Option<Colouring>, SolverError> {
    let k = effective_bound(g, k)?;
    let mut search = Search::new(g, k, config.node_budget);
    if !search.run(0, 0)? {
        return Ok(None);
    }
    let colouring = Colouring::new(search.colour).expect("search colours every vertex");
    debug_assert!(verify::is_proper(g, &colouring).unwrap() && verify::is_odd(g, &colouring).unwrap());
    Ok(Some(colouring))
}

/// Smallest `k <= k_max` admitting an odd colouring.
pub fn chi_odd(g: &EmbeddedGraph, k_max: usize, config: &SolverConfig) -> Result<Option<usize>, SolverError> {
    if k_max == 0 {
        return Err(SolverError::ZeroBound);
    }
    let top = k_max.min(g.vertex_count());
    if config.deterministic {
        for k in 1..=top {
            if find_odd_colouring(g, k, config)?.is_some() {
                return Ok(Some(k));
            }
        }
        return Ok(None);
    }
    let results: Vec<Result<bool, SolverError>> = std::thread::scope(|scope| {
        let handles: Vec<_> =
            (1..=top).map(|k| scope.spawn(move || find_odd_colouring(g, k, config).map(|c| c.is_some()))).collect();
        handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
    });
    // the answer is decided by the first bound that did not fail
    for (k, r) in (1..=top).zip(results) {
        if r? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Default ceiling on `k^V` for one bound in [`chi_odd_bruteforce`].
pub const BRUTEFORCE_LIMIT: u64 = 60_000_000;

/// Odd chromatic number by enumerating all `k^V` assignments for each
/// `k = 1..=k_max`. Fails with `ResourceLimit` when some `k^V` exceeds `limit`.
pub fn chi_odd_bruteforce(g: &EmbeddedGraph, k_max: usize, limit: u64) -> Result<Option<usize>, SolverError> {
    if k_max == 0 {
        return Err(SolverError::ZeroBound);
    }
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=k_max as u32 {
        let space = (k as u64).checked_pow(n as u32).filter(|&s| s <= limit);
        if space.is_none() {
            return Err(SolverError::ResourceLimit { budget: limit });
        }
        let mut digits = vec![1u32; n];
        let mut colouring = Colouring::new(digits.clone()).expect("positive");
        loop {
            if edges.iter().all(|&(u, v)| digits[u] != digits[v]) {
                for (v, &d) in digits.iter().enumerate() {
                    colouring.set(v, d);
                }
                if verify::is_proper(g, &colouring).unwrap() && verify::is_odd(g, &colouring).unwrap() {
                    return Ok(Some(k as usize));
                }
            }
            // odometer step
            let mut pos = 0;
            while pos < n && digits[pos] == k {
                digits[pos] = 1;
                pos += 1;
            }
            if pos == n {
                break;
            }
            digits[pos] += 1;
        }
    }
    Ok(None)
}
