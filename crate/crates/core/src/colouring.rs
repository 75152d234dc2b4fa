//! Partial edge colourings with cached missing-colour sets.
//!
//! Colours are 1-based, `1..=k`. An uncoloured edge is `None`, never colour 0.
//! For every vertex `u` the colouring caches `F(u)`, the colours of the
//! palette not present on any coloured edge at `u`.

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colour(u32);

impl Colour {
    /// Returns `None` for 0.
    pub fn new(value: u32) -> Option<Self> {
        (value >= 1).then_some(Colour(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn bit(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A subset of the palette `{1, ..., k}`, stored as a bitset.
#[derive(Clone, Default)]
pub struct ColourSet {
    words: SmallVec<[u64; 2]>,
}

impl ColourSet {
    /// Words without trailing zeros; equality ignores storage width.
    fn significant(&self) -> &[u64] {
        let len = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |i| i + 1);
        &self.words[..len]
    }
}

impl PartialEq for ColourSet {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

impl Eq for ColourSet {}

impl std::hash::Hash for ColourSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.significant().hash(state);
    }
}

impl ColourSet {
    pub fn empty() -> Self {
        ColourSet::default()
    }

    /// `{1, ..., k}`.
    pub fn full(k: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::from_elem(u64::MAX, k / 64);
        if !k.is_multiple_of(64) {
            words.push((1u64 << (k % 64)) - 1);
        }
        ColourSet { words }
    }

    pub fn contains(&self, c: Colour) -> bool {
        let b = c.bit();
        self.words
            .get(b / 64)
            .is_some_and(|w| w >> (b % 64) & 1 == 1)
    }

    pub fn insert(&mut self, c: Colour) {
        let b = c.bit();
        if self.words.len() <= b / 64 {
            self.words.resize(b / 64 + 1, 0);
        }
        self.words[b / 64] |= 1 << (b % 64);
    }

    pub fn remove(&mut self, c: Colour) {
        let b = c.bit();
        if let Some(w) = self.words.get_mut(b / 64) {
            *w &= !(1 << (b % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &ColourSet) -> ColourSet {
        ColourSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &ColourSet) -> ColourSet {
        ColourSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &ColourSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn min(&self) -> Option<Colour> {
        self.iter().next()
    }

    /// Colours in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Colour> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(Colour((i * 64 + bit + 1) as u32))
            })
        })
    }
}

impl FromIterator<Colour> for ColourSet {
    fn from_iter<I: IntoIterator<Item = Colour>>(iter: I) -> Self {
        let mut s = ColourSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

impl fmt::Display for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("edge {edge} has colour {colour} outside the palette 1..={k}")]
    OutOfPalette {
        edge: EdgeId,
        colour: Colour,
        k: usize,
    },
    #[error("assignment covers {got} edges, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("colour {colour} is already present at vertex {vertex}")]
    Conflict { vertex: Vertex, colour: Colour },
    #[error("alternating path needs {colour} missing at start vertex {vertex}")]
    ColourNotMissing { vertex: Vertex, colour: Colour },
    #[error("alternating path needs two distinct colours, got {0} twice")]
    SameColours(Colour),
}

/// First violation found by [`PartialEdgeColouring::verify_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Conflict {
        vertex: Vertex,
        edges: (EdgeId, EdgeId),
        colour: Colour,
    },
    Uncoloured {
        edge: EdgeId,
    },
}

impl Violation {
    pub fn describe(&self, g: &Graph) -> String {
        match *self {
            Violation::Conflict {
                vertex,
                edges: (e, f),
                colour,
            } => {
                let (a, b) = g.endpoints(e);
                let (c, d) = g.endpoints(f);
                format!("edges ({a}, {b}) and ({c}, {d}) share vertex {vertex} and both have colour {colour}")
            }
            Violation::Uncoloured { edge } => {
                let (a, b) = g.endpoints(edge);
                format!("edge ({a}, {b}) is uncoloured")
            }
        }
    }
}

/// Result of a Kempe swap: the far end `w*` of the alternating path and the
/// number of recoloured edges. An empty path has `end == start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KempeSwap {
    pub end: Vertex,
    pub path_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialEdgeColouring {
    k: usize,
    colours: Vec<Option<Colour>>,
    missing: Vec<ColourSet>,
}

impl PartialEdgeColouring {
    /// All edges uncoloured.
    pub fn new(g: &Graph, k: usize) -> Self {
        PartialEdgeColouring {
            k,
            colours: vec![None; g.edge_count()],
            missing: vec![ColourSet::full(k); g.vertex_count()],
        }
    }

    /// Wraps an explicit assignment, which need not be proper.
    pub fn from_assignment(
        g: &Graph,
        k: usize,
        colours: Vec<Option<Colour>>,
    ) -> Result<Self, ColouringError> {
        if colours.len() != g.edge_count() {
            return Err(ColouringError::LengthMismatch {
                expected: g.edge_count(),
                got: colours.len(),
            });
        }
        if let Some((edge, colour)) = colours
            .iter()
            .enumerate()
            .find_map(|(e, c)| c.filter(|c| c.bit() >= k).map(|c| (e, c)))
        {
            return Err(ColouringError::OutOfPalette { edge, colour, k });
        }
        let mut c = PartialEdgeColouring {
            k,
            colours,
            missing: Vec::new(),
        };
        c.missing = (0..g.vertex_count())
            .map(|u| c.recompute_missing(g, u))
            .collect();
        Ok(c)
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    pub fn colour(&self, e: EdgeId) -> Option<Colour> {
        self.colours[e]
    }

    pub fn assignment(&self) -> &[Option<Colour>] {
        &self.colours
    }

    pub fn coloured_count(&self) -> usize {
        self.colours.iter().flatten().count()
    }

    pub fn is_complete(&self) -> bool {
        self.colours.iter().all(Option::is_some)
    }

    /// `F(u)` from the cache.
    pub fn missing_colours(&self, u: Vertex) -> &ColourSet {
        &self.missing[u]
    }

    /// `F(u)` computed from the incident edges, bypassing the cache.
    pub fn recompute_missing(&self, g: &Graph, u: Vertex) -> ColourSet {
        let mut f = ColourSet::full(self.k);
        for &(_, e) in g.incident(u) {
            if let Some(c) = self.colours[e] {
                f.remove(c);
            }
        }
        f
    }

    /// `F(uv) = F(u) ∩ F(v)`.
    pub fn common_missing(&self, u: Vertex, v: Vertex) -> ColourSet {
        self.missing[u].intersection(&self.missing[v])
    }

    /// Colours `e` with `colour`, which must be in the palette and absent at
    /// both endpoints (ignoring `e`'s own current colour).
    pub fn assign(&mut self, g: &Graph, e: EdgeId, colour: Colour) -> Result<(), ColouringError> {
        if colour.bit() >= self.k {
            return Err(ColouringError::OutOfPalette {
                edge: e,
                colour,
                k: self.k,
            });
        }
        let (u, v) = g.endpoints(e);
        if self.colours[e] != Some(colour) {
            for x in [u, v] {
                if !self.missing[x].contains(colour) {
                    return Err(ColouringError::Conflict { vertex: x, colour });
                }
            }
        }
        self.set(g, e, Some(colour));
        Ok(())
    }

    pub fn uncolour(&mut self, g: &Graph, e: EdgeId) {
        self.set(g, e, None);
    }

    /// Unchecked write that keeps the `F` cache exact even for improper input.
    fn set(&mut self, g: &Graph, e: EdgeId, colour: Option<Colour>) {
        let old = std::mem::replace(&mut self.colours[e], colour);
        let (u, v) = g.endpoints(e);
        for x in [u, v] {
            if let Some(c) = colour {
                self.missing[x].remove(c);
            }
            if let Some(c) = old.filter(|&c| Some(c) != colour) {
                if !g
                    .incident(x)
                    .iter()
                    .any(|&(_, f)| self.colours[f] == Some(c))
                {
                    self.missing[x].insert(c);
                }
            }
        }
    }

    /// The edge at `u` with colour `c`, if any, as `(other end, edge id)`.
    pub fn edge_with_colour(&self, g: &Graph, u: Vertex, c: Colour) -> Option<(Vertex, EdgeId)> {
        g.incident(u)
            .iter()
            .copied()
            .find(|&(_, e)| self.colours[e] == Some(c))
    }

    /// Checks that no two edges sharing an endpoint have the same colour and,
    /// if `require_complete`, that every edge is coloured. Conflicts are
    /// reported first, scanning vertices in ascending order.
    pub fn verify_proper(&self, g: &Graph, require_complete: bool) -> Result<(), Violation> {
        let mut seen: Vec<Option<EdgeId>> = vec![None; self.k];
        for u in 0..g.vertex_count() {
            for &(_, e) in g.incident(u) {
                if let Some(c) = self.colours[e] {
                    if let Some(f) = seen[c.bit()] {
                        return Err(Violation::Conflict {
                            vertex: u,
                            edges: (f, e),
                            colour: c,
                        });
                    }
                    seen[c.bit()] = Some(e);
                }
            }
            for &(_, e) in g.incident(u) {
                if let Some(c) = self.colours[e] {
                    seen[c.bit()] = None;
                }
            }
        }
        if require_complete {
            if let Some(edge) = self.colours.iter().position(Option::is_none) {
                return Err(Violation::Uncoloured { edge });
            }
        }
        Ok(())
    }

    /// Exchanges colours `a` and `b` along the maximal path that starts at
    /// `start` and whose edges are coloured `b, a, b, ...`.
    ///
    /// `start` must miss `a`, so the path cannot return to it; every interior
    /// vertex carries exactly one `a`-edge and one `b`-edge, so the walk is a
    /// simple path. Only `F(start)` and `F(end)` change.
    pub fn kempe_swap(
        &mut self,
        g: &Graph,
        start: Vertex,
        a: Colour,
        b: Colour,
    ) -> Result<KempeSwap, ColouringError> {
        if a == b {
            return Err(ColouringError::SameColours(a));
        }
        for c in [a, b] {
            if c.bit() >= self.k {
                return Err(ColouringError::OutOfPalette {
                    edge: usize::MAX,
                    colour: c,
                    k: self.k,
                });
            }
        }
        if !self.missing[start].contains(a) {
            return Err(ColouringError::ColourNotMissing {
                vertex: start,
                colour: a,
            });
        }

        let mut path = Vec::new();
        let mut at = start;
        let mut want = b;
        while let Some((next, e)) = self.edge_with_colour(g, at, want) {
            debug_assert!(
                path.len() < g.edge_count(),
                "alternating walk did not terminate"
            );
            path.push(e);
            at = next;
            want = if want == b { a } else { b };
        }
        for &e in &path {
            self.colours[e] = self.colours[e].map(|c| if c == a { b } else { a });
        }
        if !path.is_empty() {
            for x in [start, at] {
                self.missing[x] = self.recompute_missing(g, x);
            }
        }
        Ok(KempeSwap {
            end: at,
            path_len: path.len(),
        })
    }

    /// Maps a colouring of an induced subgraph onto the parent's edges.
    pub fn lift(
        &self,
        sub: &crate::graph::InducedSubgraph,
        parent: &Graph,
    ) -> PartialEdgeColouring {
        let mut colours = vec![None; parent.edge_count()];
        for (local, &e) in sub.edge_to_parent.iter().enumerate() {
            colours[e] = self.colours[local];
        }
        PartialEdgeColouring::from_assignment(parent, self.k, colours)
            .expect("palette and length carried over from the subgraph")
    }
}
