//! 2-edge-colored complete graphs on up to 64 vertices.
//!
//! Only the red adjacency bitsets are stored; blue is the complement, so
//! flipping between the two color classes costs nothing. Vertices are dense
//! indices `0..n-1`.

use std::fmt;

use thiserror::Error;

/// Hard cap so a [`VertexSet`] fits in one machine word.
pub const MAX_VERTICES: usize = 64;

/// One of the two edge colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    Red,
    Blue,
}

impl EdgeColor {
    /// Both colors, in `[Red, Blue]` order.
    pub const BOTH: [EdgeColor; 2] = [EdgeColor::Red, EdgeColor::Blue];

    /// The other color.
    #[inline]
    pub fn complement(self) -> Self {
        match self {
            EdgeColor::Red => EdgeColor::Blue,
            EdgeColor::Blue => EdgeColor::Red,
        }
    }

    /// Single-character form used by the certificate codec.
    #[inline]
    pub fn to_char(self) -> char {
        match self {
            EdgeColor::Red => 'R',
            EdgeColor::Blue => 'B',
        }
    }

    /// Inverse of [`EdgeColor::to_char`].
    pub fn from_char(ch: char) -> Option<Self> {
        match ch {
            'R' => Some(EdgeColor::Red),
            'B' => Some(EdgeColor::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeColor::Red => write!(f, "red"),
            EdgeColor::Blue => write!(f, "blue"),
        }
    }
}

impl std::str::FromStr for EdgeColor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "red" => Ok(EdgeColor::Red),
            "blue" => Ok(EdgeColor::Blue),
            other => Err(format!("unknown color `{other}` (expected `red` or `blue`)")),
        }
    }
}

/// A set of vertex indices, stored as a 64-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex count or index {0} out of range")]
    OutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty vertex set")]
    EmptySet,
}

/// A red/blue edge-coloring of the complete graph `K_n`.
///
/// `red[v]` holds the red neighborhood of `v`; every non-red pair is blue.
/// The bitsets are kept symmetric and irreflexive at all times, so every
/// vertex pair carries exactly one color.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    red: Vec<u64>,
}

impl Coloring {
    /// Complete graph on `n` vertices with every edge colored `default`.
    pub fn new_complete(n: usize, default: EdgeColor) -> Result<Self, ColoringError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(ColoringError::OutOfRange(n));
        }
        let red = match default {
            EdgeColor::Blue => vec![0u64; n],
            EdgeColor::Red => {
                let full = VertexSet::full(n).bits();
                (0..n).map(|v| full & !(1 << v)).collect()
            }
        };
        Ok(Coloring { n, red })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices of the coloring.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Recolor the edge `uv`. Symmetry is maintained for free.
    pub fn assign_color(
        &mut self,
        u: usize,
        v: usize,
        col: EdgeColor,
    ) -> Result<(), ColoringError> {
        if u == v {
            return Err(ColoringError::SelfLoop(u));
        }
        if u >= self.n {
            return Err(ColoringError::OutOfRange(u));
        }
        if v >= self.n {
            return Err(ColoringError::OutOfRange(v));
        }
        match col {
            EdgeColor::Red => {
                self.red[u] |= 1 << v;
                self.red[v] |= 1 << u;
            }
            EdgeColor::Blue => {
                self.red[u] &= !(1 << v);
                self.red[v] &= !(1 << u);
            }
        }
        Ok(())
    }

    /// Color of the edge `uv`.
    ///
    /// # Panics
    /// Panics if `u == v` or either index is out of range.
    #[inline]
    pub fn color_of(&self, u: usize, v: usize) -> EdgeColor {
        assert!(u != v, "no self-loops in a complete graph");
        assert!(u < self.n && v < self.n, "vertex out of range");
        if self.red[u] >> v & 1 == 1 {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        }
    }

    /// Raw neighborhood mask of `v` in the given color class.
    #[inline]
    pub fn neighborhood_bits(&self, v: usize, col: EdgeColor) -> u64 {
        debug_assert!(v < self.n);
        match col {
            EdgeColor::Red => self.red[v],
            EdgeColor::Blue => !self.red[v] & VertexSet::full(self.n).bits() & !(1 << v),
        }
    }

    /// The set of vertices joined to `v` by an edge of color `col`.
    pub fn color_neighborhood(&self, v: usize, col: EdgeColor) -> Result<VertexSet, ColoringError> {
        if v >= self.n {
            return Err(ColoringError::OutOfRange(v));
        }
        Ok(VertexSet::from_bits(self.neighborhood_bits(v, col)))
    }

    /// Number of `col`-edges at `v`.
    #[inline]
    pub fn color_degree(&self, v: usize, col: EdgeColor) -> usize {
        assert!(v < self.n, "vertex out of range");
        self.neighborhood_bits(v, col).count_ones() as usize
    }

    /// Vertices `col`-adjacent to every member of `s`. Always disjoint from `s`.
    pub fn common_color_neighborhood(
        &self,
        s: VertexSet,
        col: EdgeColor,
    ) -> Result<VertexSet, ColoringError> {
        if s.is_empty() {
            return Err(ColoringError::EmptySet);
        }
        let mut acc = VertexSet::full(self.n).bits();
        for v in s.iter() {
            if v >= self.n {
                return Err(ColoringError::OutOfRange(v));
            }
            acc &= self.neighborhood_bits(v, col);
        }
        Ok(VertexSet::from_bits(acc))
    }

    /// Restriction to `s`, relabeled to `0..|s|` preserving vertex order.
    pub fn induced_subcoloring(&self, s: VertexSet) -> Result<Coloring, ColoringError> {
        if s.is_empty() {
            return Err(ColoringError::EmptySet);
        }
        let verts: Vec<usize> = s.iter().collect();
        if *verts.last().unwrap() >= self.n {
            return Err(ColoringError::OutOfRange(*verts.last().unwrap()));
        }
        let m = verts.len();
        let mut sub = Coloring {
            n: m,
            red: vec![0u64; m],
        };
        for i in 0..m {
            for j in i + 1..m {
                if self.red[verts[i]] >> verts[j] & 1 == 1 {
                    sub.red[i] |= 1 << j;
                    sub.red[j] |= 1 << i;
                }
            }
        }
        Ok(sub)
    }

    /// Append vertex `n` with red neighborhood `red_mask` (over the old vertices).
    pub fn extended(&self, red_mask: u64) -> Coloring {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(red_mask & !VertexSet::full(self.n).bits(), 0);
        let mut red = self.red.clone();
        for v in 0..self.n {
            if red_mask >> v & 1 == 1 {
                red[v] |= 1 << self.n;
            }
        }
        red.push(red_mask);
        Coloring { n: self.n + 1, red }
    }

    /// The coloring with red and blue exchanged.
    pub fn swap_colors(&self) -> Coloring {
        let full = VertexSet::full(self.n).bits();
        let red = (0..self.n)
            .map(|v| !self.red[v] & full & !(1 << v))
            .collect();
        Coloring { n: self.n, red }
    }

    /// All edges `(u, v)` with `u < v`, with their colors.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeColor)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).map(move |v| (u, v, self.color_of(u, v)))
        })
    }

    /// Number of edges in the given color class.
    pub fn count_color(&self, col: EdgeColor) -> usize {
        let total: usize = (0..self.n)
            .map(|v| self.neighborhood_bits(v, col).count_ones() as usize)
            .sum();
        total / 2
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(n={}; red=", self.n)?;
        let mut first = true;
        for (u, v, col) in self.edges() {
            if col == EdgeColor::Red {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{u}-{v}")?;
                first = false;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_red_k3_degrees() {
        let c = Coloring::new_complete(3, EdgeColor::Red).unwrap();
        for v in 0..3 {
            assert_eq!(c.color_degree(v, EdgeColor::Red), 2);
            assert_eq!(c.color_degree(v, EdgeColor::Blue), 0);
        }
    }

    #[test]
    fn single_vertex_has_no_edges() {
        let c = Coloring::new_complete(1, EdgeColor::Blue).unwrap();
        assert_eq!(c.count_color(EdgeColor::Red), 0);
        assert_eq!(c.count_color(EdgeColor::Blue), 0);
    }

    #[test]
    fn k14_blue_edge_count() {
        let c = Coloring::new_complete(14, EdgeColor::Blue).unwrap();
        assert_eq!(c.count_color(EdgeColor::Blue), 91);
    }

    #[test]
    fn n_zero_and_oversize_rejected() {
        assert_eq!(
            Coloring::new_complete(0, EdgeColor::Red),
            Err(ColoringError::OutOfRange(0))
        );
        assert_eq!(
            Coloring::new_complete(65, EdgeColor::Red),
            Err(ColoringError::OutOfRange(65))
        );
        assert!(Coloring::new_complete(64, EdgeColor::Red).is_ok());
    }

    #[test]
    fn assign_then_query_both_directions() {
        let mut c = Coloring::new_complete(3, EdgeColor::Red).unwrap();
        c.assign_color(0, 2, EdgeColor::Blue).unwrap();
        assert_eq!(c.color_of(0, 2), EdgeColor::Blue);
        assert_eq!(c.color_of(2, 0), EdgeColor::Blue);
        assert_eq!(c.color_of(0, 1), EdgeColor::Red);
        assert_eq!(c.color_degree(0, EdgeColor::Blue), 1);
        assert_eq!(c.color_degree(2, EdgeColor::Blue), 1);
    }

    #[test]
    fn assign_rejects_self_loop_and_range() {
        let mut c = Coloring::new_complete(3, EdgeColor::Red).unwrap();
        assert_eq!(
            c.assign_color(1, 1, EdgeColor::Blue),
            Err(ColoringError::SelfLoop(1))
        );
        assert_eq!(
            c.assign_color(0, 3, EdgeColor::Blue),
            Err(ColoringError::OutOfRange(3))
        );
    }

    #[test]
    fn degree_identity() {
        let mut c = Coloring::new_complete(8, EdgeColor::Blue).unwrap();
        c.assign_color(0, 1, EdgeColor::Red).unwrap();
        c.assign_color(0, 5, EdgeColor::Red).unwrap();
        c.assign_color(3, 4, EdgeColor::Red).unwrap();
        for v in 0..8 {
            assert_eq!(
                c.color_degree(v, EdgeColor::Red) + c.color_degree(v, EdgeColor::Blue),
                7
            );
        }
    }

    #[test]
    fn all_blue_k5_red_neighborhood_empty() {
        let c = Coloring::new_complete(5, EdgeColor::Blue).unwrap();
        for v in 0..5 {
            assert!(c.color_neighborhood(v, EdgeColor::Red).unwrap().is_empty());
        }
    }

    #[test]
    fn common_neighborhood_all_blue_k6() {
        let c = Coloring::new_complete(6, EdgeColor::Blue).unwrap();
        let s: VertexSet = [0, 1, 2, 3].into_iter().collect();
        let common = c.common_color_neighborhood(s, EdgeColor::Blue).unwrap();
        assert_eq!(common, [4, 5].into_iter().collect());
    }

    #[test]
    fn common_neighborhood_empty_set_rejected() {
        let c = Coloring::new_complete(4, EdgeColor::Red).unwrap();
        assert_eq!(
            c.common_color_neighborhood(VertexSet::EMPTY, EdgeColor::Red),
            Err(ColoringError::EmptySet)
        );
    }

    #[test]
    fn induced_identity_and_pair() {
        let mut c = Coloring::new_complete(5, EdgeColor::Blue).unwrap();
        c.assign_color(1, 3, EdgeColor::Red).unwrap();
        let whole = c.induced_subcoloring(c.vertices()).unwrap();
        assert_eq!(whole, c);
        let pair = c
            .induced_subcoloring([1, 3].into_iter().collect())
            .unwrap();
        assert_eq!(pair.n(), 2);
        assert_eq!(pair.color_of(0, 1), EdgeColor::Red);
    }

    #[test]
    fn extended_matches_assign() {
        let mut c = Coloring::new_complete(4, EdgeColor::Blue).unwrap();
        c.assign_color(0, 2, EdgeColor::Red).unwrap();
        let ext = c.extended(0b0101);
        assert_eq!(ext.n(), 5);
        assert_eq!(ext.color_of(0, 4), EdgeColor::Red);
        assert_eq!(ext.color_of(1, 4), EdgeColor::Blue);
        assert_eq!(ext.color_of(2, 4), EdgeColor::Red);
        assert_eq!(ext.color_of(3, 4), EdgeColor::Blue);
        assert_eq!(ext.color_of(0, 2), EdgeColor::Red);
    }

    #[test]
    fn swap_colors_involution() {
        let mut c = Coloring::new_complete(6, EdgeColor::Blue).unwrap();
        c.assign_color(0, 1, EdgeColor::Red).unwrap();
        c.assign_color(2, 5, EdgeColor::Red).unwrap();
        let swapped = c.swap_colors();
        assert_eq!(swapped.color_of(0, 1), EdgeColor::Blue);
        assert_eq!(swapped.color_of(0, 2), EdgeColor::Red);
        assert_eq!(swapped.swap_colors(), c);
    }

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [0, 2, 4].into_iter().collect();
        let b: VertexSet = [2, 3, 4].into_iter().collect();
        assert_eq!(a.intersection(b), [2, 4].into_iter().collect());
        assert_eq!(a.difference(b), VertexSet::singleton(0));
        assert_eq!(a.union(b).len(), 5);
        assert_eq!(a.lowest(), Some(0));
        assert_eq!(format!("{a}"), "{0,2,4}");
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
