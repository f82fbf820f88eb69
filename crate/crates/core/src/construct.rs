//! Explicit nice colourings of every simple `T(m, n, t)`.
//!
//! The nine colours are split into classes `C1 = {1,2,3}`, `C2 = {4,5,6}`,
//! `C3 = {7,8,9}`. For `m >= 2` each column uses one class and each row one
//! position within the class; a handful of vertices are then recoloured to
//! repair oddness where the pattern fails. For `m = 1` the vertices are cut
//! into intervals of length `t` and each class colours a union of intervals.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use crate::embedding::EmbeddedGraph;
use crate::error::ConstructError;
use crate::torus::{canonical_m1, generate, TorusParams};
use crate::verify::{nice_violation, Colouring};

/// Colour with within-class position `index` (1..=3) from class `class` (1..=3).
pub fn class_colour(class: usize, index: usize) -> u32 {
    debug_assert!((1..=3).contains(&class) && (1..=3).contains(&index));
    (3 * (class - 1) + index) as u32
}

/// Class (1..=3) a colour in `1..=9` belongs to.
pub fn class_of(colour: u32) -> usize {
    (colour as usize - 1) / 3 + 1
}

fn residue_123(k: usize) -> usize {
    match k % 3 {
        0 => 3,
        r => r,
    }
}

/// Class used in column `i` of an `m`-column grid.
pub fn column_class(m: usize, i: usize) -> usize {
    if m % 3 == 1 && i == m {
        2
    } else {
        residue_123(i)
    }
}

/// Within-class position used in row `j` of an `n`-row grid.
pub fn row_index(n: usize, j: usize) -> usize {
    if n % 3 == 1 && j == n {
        2
    } else {
        residue_123(j)
    }
}

/// The column/row pattern colouring. It does not depend on `t`.
pub fn base_colouring(m: usize, n: usize) -> Colouring {
    assert!(m >= 2 && n >= 3, "base colouring needs m >= 2 and n >= 3");
    let colours =
        (1..=m).flat_map(|i| (1..=n).map(move |j| class_colour(column_class(m, i), row_index(n, j)))).collect();
    Colouring::new(colours).expect("class colours are positive")
}

fn bad_lines(k: usize) -> Vec<usize> {
    match k % 3 {
        0 => vec![],
        1 => vec![1, k - 1],
        _ => vec![1, k],
    }
}

/// Columns (rows) whose two neighbouring columns (rows) share a class
/// (position) under the base colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnRowClassification {
    pub bad_columns: Vec<usize>,
    pub bad_rows: Vec<usize>,
    pub bad_vertices: Vec<(usize, usize)>,
}

pub fn classify(m: usize, n: usize) -> ColumnRowClassification {
    let bad_columns = bad_lines(m);
    let bad_rows = bad_lines(n);
    let bad_vertices = bad_columns.iter().flat_map(|&i| bad_rows.iter().map(move |&j| (i, j))).collect();
    ColumnRowClassification { bad_columns, bad_rows, bad_vertices }
}

/// Which construction produced a colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    /// `m >= 3`, with `m mod 3` and `n mod 3`.
    Grid {
        m_mod: usize,
        n_mod: usize,
    },
    TwoColumns,
    /// `m = 1`, solved on the canonical shift.
    OneColumn {
        canonical_t: usize,
        partition: IntervalPartition,
    },
}

/// A vertex whose colour differs from the base pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recolour {
    pub at: (usize, usize),
    pub from: u32,
    pub to: u32,
}

/// A verified nice colouring plus how it was obtained.
#[derive(Debug, Clone)]
pub struct Construction {
    pub params: TorusParams,
    pub case: Case,
    pub colouring: Colouring,
    /// Empty for `m = 1`, where there is no base pattern.
    pub recoloured: Vec<Recolour>,
}

fn finish(
    g: &EmbeddedGraph,
    params: TorusParams,
    case: Case,
    base: Option<&Colouring>,
    colouring: Colouring,
) -> Result<Construction, ConstructError> {
    if let Some(violation) = nice_violation(g, &colouring).expect("colouring is total") {
        return Err(ConstructError::ConstructionFailed { params, violation });
    }
    let recoloured = base
        .map(|b| {
            b.diff(&colouring)
                .into_iter()
                .map(|v| Recolour { at: params.coords(v), from: b.colour(v), to: colouring.colour(v) })
                .collect()
        })
        .unwrap_or_default();
    Ok(Construction { params, case, colouring, recoloured })
}

/// The one colour of `class` missing from the neighbourhood of `v`.
fn missing_colour(g: &EmbeddedGraph, c: &Colouring, v: usize, class: usize) -> Option<u32> {
    let seen: BTreeSet<u32> = g.neighbours(v).map(|w| c.colour(w)).collect();
    let mut free = (1..=3).map(|k| class_colour(class, k)).filter(|col| !seen.contains(col));
    match (free.next(), free.next()) {
        (Some(col), None) => Some(col),
        _ => None,
    }
}

/// Nice colouring for `m >= 3`.
pub fn colour_m_ge3(p: &TorusParams) -> Result<Construction, ConstructError> {
    assert!(p.m >= 3, "colour_m_ge3 needs m >= 3");
    let g = generate(p)?;
    let (m, n) = (p.m, p.n);
    let base = base_colouring(m, n);
    let mut c = base.clone();
    let case = Case::Grid { m_mod: m % 3, n_mod: n % 3 };
    let no_candidate = |reason| ConstructError::NoCandidate { params: *p, reason };
    match (m % 3, n % 3) {
        (0, _) | (_, 0) => {}
        (1, 1) => {
            for (i, j) in classify(m, n).bad_vertices {
                let w = p.index(i + 1, p.row(j as i64 - 1));
                let unused = 6 - column_class(m, i) - column_class(m, i + 1);
                let col = missing_colour(&g, &base, w, unused)
                    .ok_or_else(|| no_candidate("no unique free colour next to a bad vertex"))?;
                c.set(w, col);
            }
        }
        (1, _) => {
            c.set(p.index(2, n), 9);
            let w = p.index(m, n);
            let col = missing_colour(&g, &base, w, 1).ok_or_else(|| no_candidate("no unique free colour at (m,n)"))?;
            c.set(w, col);
        }
        (_, 1) => {
            c.set(p.index(2, n), 7);
            c.set(p.index(m - 1, 2), 7);
            c.set(p.index(2, n - 2), 9);
            c.set(p.index(m - 1, n), 9);
        }
        _ => {
            c.set(p.index(2, n), 9);
            c.set(p.index(m - 1, 1), 9);
        }
    }
    finish(&g, *p, case, Some(&base), c)
}

/// Nice colouring for `m = 2`.
///
/// When bad rows exist, tries every ordered pair `(u, w)` of distinct
/// non-adjacent vertices in index order, gives `u` colour 7 and `w` colour 8,
/// and keeps the first result that verifies.
pub fn colour_m2(p: &TorusParams) -> Result<Construction, ConstructError> {
    assert_eq!(p.m, 2, "colour_m2 needs m = 2");
    let g = generate(p)?;
    let base = base_colouring(2, p.n);
    if p.n.is_multiple_of(3) {
        return finish(&g, *p, Case::TwoColumns, Some(&base), base.clone());
    }
    let vertices = p.vertex_count();
    for u in 0..vertices {
        for w in (0..vertices).filter(|&w| w != u && !g.has_edge(u, w)) {
            let mut c = base.clone();
            c.set(u, 7);
            c.set(w, 8);
            if nice_violation(&g, &c).expect("total").is_none() {
                return finish(&g, *p, Case::TwoColumns, Some(&base), c);
            }
        }
    }
    Err(ConstructError::NoCandidate { params: *p, reason: "no pair (u, w) gives a nice colouring" })
}

/// The intervals `I_1 .. I_r` of `1..=n` and the class each is coloured from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    pub n: usize,
    pub t: usize,
    pub r: usize,
    /// 1-based vertex ranges.
    pub intervals: Vec<RangeInclusive<usize>>,
    /// `classes[k]` is the class (1..=3) of `intervals[k]`.
    pub classes: Vec<usize>,
}

impl IntervalPartition {
    pub fn new(n: usize, t: usize) -> Self {
        assert!(t >= 1 && t <= n);
        let full = n / t;
        let mut intervals: Vec<RangeInclusive<usize>> = (1..=full).map(|k| (k - 1) * t + 1..=k * t).collect();
        if !n.is_multiple_of(t) {
            intervals.push(full * t + 1..=n);
        }
        let r = intervals.len();
        let mut classes: Vec<usize> = (1..=r).map(residue_123).collect();
        match r % 3 {
            1 => classes[r - 1] = 2,
            2 => {
                classes[r - 2] = 2;
                classes[r - 1] = 3;
            }
            _ => {}
        }
        Self { n, t, r, intervals, classes }
    }

    /// 1-based vertices coloured from `class`, ascending.
    pub fn members(&self, class: usize) -> Vec<usize> {
        self.intervals
            .iter()
            .zip(&self.classes)
            .filter(|&(_, &c)| c == class)
            .flat_map(|(iv, _)| iv.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Class of 1-based vertex `j`.
    pub fn class_of_vertex(&self, j: usize) -> usize {
        let k = self.intervals.iter().position(|iv| iv.contains(&j)).expect("vertex in 1..=n");
        self.classes[k]
    }
}

enum Shape {
    Path(Vec<usize>),
    Cycle(Vec<usize>),
    Other(Vec<usize>),
}

/// Connected components of the subgraph induced on `members` (0-based),
/// ordered by smallest vertex. Paths are listed from their smaller endpoint;
/// cycles from their smallest vertex towards its smaller neighbour.
fn induced_components(g: &EmbeddedGraph, members: &[usize]) -> Vec<Shape> {
    let inside: BTreeSet<usize> = members.iter().copied().collect();
    let nbrs = |v: usize| -> Vec<usize> {
        let mut out: Vec<usize> = g.neighbours(v).filter(|w| inside.contains(w)).collect();
        out.sort_unstable();
        out
    };
    let mut seen = BTreeSet::new();
    let mut shapes = Vec::new();
    for &start in members {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut k = 0;
        while k < comp.len() {
            for w in nbrs(comp[k]) {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let degrees: Vec<usize> = comp.iter().map(|&v| nbrs(v).len()).collect();
        let edges: usize = degrees.iter().sum::<usize>() / 2;
        let walk = |first: usize, second: Option<usize>, len: usize| {
            let mut order = vec![first];
            let mut prev = first;
            let mut cur = second;
            while let Some(v) = cur {
                if order.len() == len {
                    break;
                }
                order.push(v);
                let next = nbrs(v).into_iter().find(|&x| x != prev);
                prev = v;
                cur = next;
            }
            order
        };
        let shape = if degrees.iter().all(|&d| d <= 2) && edges + 1 == comp.len() {
            let first = *comp.iter().zip(&degrees).find(|&(_, &d)| d <= 1).unwrap().0;
            Shape::Path(walk(first, nbrs(first).first().copied(), comp.len()))
        } else if degrees.iter().all(|&d| d == 2) && edges == comp.len() {
            let first = comp[0];
            Shape::Cycle(walk(first, nbrs(first).first().copied(), comp.len()))
        } else {
            Shape::Other(comp)
        };
        shapes.push(shape);
    }
    shapes
}

fn induced_ok(g: &EmbeddedGraph, comp: &[usize], colours: &[u32]) -> bool {
    comp.iter().all(|&v| {
        let inner: Vec<u32> = g.neighbours(v).filter(|w| comp.contains(w)).map(|w| colours[w]).collect();
        let proper = inner.iter().all(|&c| c != colours[v]);
        let odd = inner.is_empty() || inner.iter().any(|&c| inner.iter().filter(|&&d| d == c).count() % 2 == 1);
        proper && odd
    })
}

// Exhaustive proper odd 3-colouring of a small component, first in
// lexicographic order.
fn exhaustive_component(g: &EmbeddedGraph, comp: &[usize], class: usize, colours: &mut [u32]) -> bool {
    if comp.len() > 14 {
        return false;
    }
    let total = 3usize.pow(comp.len() as u32);
    for code in 0..total {
        let mut x = code;
        for &v in comp.iter().rev() {
            colours[v] = class_colour(class, x % 3 + 1);
            x /= 3;
        }
        if induced_ok(g, comp, colours) {
            return true;
        }
    }
    false
}

fn shift_index(index: usize, k: usize) -> usize {
    (index - 1 + k) % 3 + 1
}

/// Colours a cycle of one class so that vertices where the cycle colouring
/// is not odd fall inside `allowed`, accepting the first candidate for which
/// the whole colouring of `g` is nice.
///
/// Candidates are the row pattern `1,2,3,1,2,3,...` (last entry 2 when the
/// length is 1 mod 3) rotated to start at cycle position `s`, for `s`
/// descending, with the three cyclic relabellings tried so that the first
/// cycle vertex gets position 1, then 2, then 3.
fn colour_cycle(
    g: &EmbeddedGraph,
    cycle: &[usize],
    class: usize,
    allowed: &dyn Fn(usize) -> bool,
    colours: &mut [u32],
) -> bool {
    let len = cycle.len();
    let mut pattern: Vec<usize> = (0..len).map(|q| q % 3 + 1).collect();
    if len % 3 == 1 {
        pattern[len - 1] = 2;
    }
    for s in (0..len).rev() {
        let at = |p: usize| pattern[(p + len - s) % len];
        let k0 = (4 - at(0)) % 3;
        for k in [k0, k0 + 1, k0 + 2] {
            let idx: Vec<usize> = (0..len).map(|p| shift_index(at(p), k)).collect();
            let defects_ok =
                (0..len).filter(|&p| idx[(p + len - 1) % len] == idx[(p + 1) % len]).all(|p| allowed(cycle[p]));
            if !defects_ok {
                continue;
            }
            for (p, &v) in cycle.iter().enumerate() {
                colours[v] = class_colour(class, idx[p]);
            }
            let c = Colouring::new(colours.to_vec());
            if let Ok(c) = c {
                if nice_violation(g, &c).expect("total").is_none() {
                    return true;
                }
            }
        }
    }
    false
}

/// Nice colouring for `m = 1`.
///
/// Works on the canonical shift `t' = min(t, n - t - 1)`; the edge set of
/// `T(1, n, t)` and `T(1, n, t')` coincide, so the colouring is returned
/// unchanged for the literal parameters.
pub fn colour_m1(n: usize, t: usize) -> Result<Construction, ConstructError> {
    let params = TorusParams::new(1, n, t)?;
    let g = generate(&params)?;
    let (_, tc) = canonical_m1(n, t);
    let partition = IntervalPartition::new(n, tc);
    let no_candidate = |reason| ConstructError::NoCandidate { params, reason };

    // 0 marks "not yet coloured"; Colouring is only built once total
    let mut colours = vec![0u32; n];
    let mut cycles = Vec::new();
    for class in 1..=3 {
        let members: Vec<usize> = partition.members(class).into_iter().map(|j| j - 1).collect();
        for shape in induced_components(&g, &members) {
            match shape {
                Shape::Path(path) => {
                    for (q, &v) in path.iter().enumerate() {
                        colours[v] = class_colour(class, q % 3 + 1);
                    }
                    if !induced_ok(&g, &path, &colours) && !exhaustive_component(&g, &path, class, &mut colours) {
                        return Err(no_candidate("path component has no proper odd 3-colouring"));
                    }
                }
                Shape::Cycle(cycle) => cycles.push((class, cycle)),
                Shape::Other(comp) => {
                    if !exhaustive_component(&g, &comp, class, &mut colours) {
                        return Err(no_candidate("component has no proper odd 3-colouring"));
                    }
                }
            }
        }
    }
    for (class, cycle) in &cycles {
        // With four intervals the class-2 cycle is I_2 then I_4. Every vertex
        // of I_2 sees two distinct colours from a neighbouring interval, as
        // does every vertex of I_4 unless I_4 is the single vertex 3t+1.
        let allowed = |v: usize| {
            if partition.r != 4 || *class != 2 {
                return true;
            }
            let j = v + 1;
            partition.intervals[1].contains(&j) || (partition.intervals[3].contains(&j) && n >= 3 * tc + 2)
        };
        // other cycles (if any) must already be coloured for the full check
        for (_, other) in &cycles {
            for &v in other {
                if colours[v] == 0 {
                    colours[v] = class_colour(*class, 1);
                }
            }
        }
        if !colour_cycle(&g, cycle, *class, &allowed, &mut colours) {
            return Err(no_candidate("no rotation of the cycle pattern gives a nice colouring"));
        }
    }
    let colouring = Colouring::new(colours).expect("every vertex lies in some interval");
    finish(&g, params, Case::OneColumn { canonical_t: tc, partition }, None, colouring)
}

/// Nice colouring of `T(m, n, t)`, dispatching on `m`.
pub fn construct(p: &TorusParams) -> Result<Construction, ConstructError> {
    match p.m {
        1 => colour_m1(p.n, p.t),
        2 => colour_m2(p),
        _ => colour_m_ge3(p),
    }
}

pub fn colour_torus(p: &TorusParams) -> Result<Colouring, ConstructError> {
    construct(p).map(|c| c.colouring)
}
