//! Monochromatic pattern detection.
//!
//! A join copy `K_a + (b*K2 ∪ c*K1)` in color `col` is found by enumerating
//! `col`-cliques `Q` of size `a` in ascending vertex order and testing the
//! common `col`-neighborhood `S` of `Q`: a copy with clique part `Q` exists
//! iff `S` holds a `col`-matching of size `b` and `|S| >= 2b + c`. The
//! matching engine is a depth-first augmenting search over vertex bitsets
//! with memoized failure sets; goals stay tiny at desk scale, so no blossom
//! machinery is needed (the brute-force oracle below guards correctness).

use std::collections::HashSet;

use crate::coloring::{Coloring, EdgeColor, VertexSet};
use crate::patterns::Pattern;

/// Outcome of a detector run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detection {
    /// A monochromatic copy exists; the witness re-verifies against the coloring.
    Found(Witness),
    /// No copy exists.
    Absent,
    /// The pattern needs more vertices than the coloring has, so no copy
    /// can exist. Kept distinct from [`Detection::Absent`] for reporting.
    TooLarge,
}

impl Detection {
    #[inline]
    pub fn is_found(&self) -> bool {
        matches!(self, Detection::Found(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Detection::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<Witness> {
        match self {
            Detection::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// An ordered vertex list certifying a monochromatic pattern occurrence.
///
/// Join order: clique part, then matching pairs as consecutive pairs, then
/// singletons. Triangles: consecutive triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pattern: Pattern,
    pub color: EdgeColor,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Every edge the pattern requires, as index pairs into the coloring.
    pub fn required_edges(&self) -> Vec<(usize, usize)> {
        let vs = &self.vertices;
        let mut edges = Vec::new();
        match self.pattern {
            Pattern::Join {
                clique,
                pairs,
                singletons: _,
            } => {
                for i in 0..clique {
                    for j in i + 1..clique {
                        edges.push((vs[i], vs[j]));
                    }
                }
                // the join: clique to everything else
                for i in 0..clique {
                    for j in clique..vs.len() {
                        edges.push((vs[i], vs[j]));
                    }
                }
                for p in 0..pairs {
                    edges.push((vs[clique + 2 * p], vs[clique + 2 * p + 1]));
                }
            }
            Pattern::Triangles { count } => {
                for t in 0..count {
                    let (a, b, c) = (vs[3 * t], vs[3 * t + 1], vs[3 * t + 2]);
                    edges.push((a, b));
                    edges.push((a, c));
                    edges.push((b, c));
                }
            }
        }
        edges
    }

    /// Re-check the witness against a coloring: distinct vertices, correct
    /// count, and every required edge in the claimed color.
    pub fn verify(&self, c: &Coloring) -> bool {
        if self.vertices.len() != self.pattern.vertex_count() {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.vertices {
            if v >= c.n() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        self.required_edges()
            .iter()
            .all(|&(u, v)| c.color_of(u, v) == self.color)
    }
}

#[inline]
fn bits_iter(mut bits: u64) -> impl Iterator<Item = usize> {
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

/// Exact matching search on a bitset-restricted color class.
///
/// `find` answers "is there a matching of size `k` inside `rem`" and fills
/// `out` with the pairs of the first one in depth-first order. Failed
/// `(rem, k)` states are memoized; successes return immediately.
struct MatchFinder<'a> {
    adj: &'a [u64],
    failed: HashSet<(u64, u32)>,
}

impl<'a> MatchFinder<'a> {
    fn new(adj: &'a [u64]) -> Self {
        MatchFinder {
            adj,
            failed: HashSet::new(),
        }
    }

    fn find(&mut self, rem: u64, k: usize, out: &mut Vec<(usize, usize)>) -> bool {
        if k == 0 {
            return true;
        }
        if (rem.count_ones() as usize) < 2 * k {
            return false;
        }
        if self.failed.contains(&(rem, k as u32)) {
            return false;
        }
        let v = rem.trailing_zeros() as usize;
        for u in bits_iter(self.adj[v] & rem) {
            out.push((v, u));
            if self.find(rem & !(1 << v) & !(1 << u), k - 1, out) {
                return true;
            }
            out.pop();
        }
        // leave v unmatched
        if self.find(rem & !(1 << v), k, out) {
            return true;
        }
        self.failed.insert((rem, k as u32));
        false
    }
}

/// Largest `col`-matching within `s`, truncated at `goal`.
///
/// Returns a matching of size `min(goal, max)`; a result shorter than `goal`
/// proves no matching of size `goal` exists in the restriction.
pub fn max_color_matching(
    c: &Coloring,
    col: EdgeColor,
    s: VertexSet,
    goal: usize,
) -> Vec<(usize, usize)> {
    let adj: Vec<u64> = (0..c.n()).map(|v| c.neighborhood_bits(v, col)).collect();
    let mut finder = MatchFinder::new(&adj);
    let rem = s.bits() & c.vertices().bits();
    let cap = goal.min(rem.count_ones() as usize / 2);
    let mut out = Vec::new();
    for k in (0..=cap).rev() {
        out.clear();
        if finder.find(rem, k, &mut out) {
            break;
        }
    }
    out
}

/// Exact disjoint-triangle packing search, memoized like [`MatchFinder`].
struct TriangleFinder<'a> {
    adj: &'a [u64],
    failed: HashSet<(u64, u32)>,
}

impl<'a> TriangleFinder<'a> {
    fn new(adj: &'a [u64]) -> Self {
        TriangleFinder {
            adj,
            failed: HashSet::new(),
        }
    }

    fn find(&mut self, rem: u64, t: usize, out: &mut Vec<(usize, usize, usize)>) -> bool {
        if t == 0 {
            return true;
        }
        if (rem.count_ones() as usize) < 3 * t {
            return false;
        }
        if self.failed.contains(&(rem, t as u32)) {
            return false;
        }
        let v = rem.trailing_zeros() as usize;
        let nv = self.adj[v] & rem;
        let mut xs = nv;
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            // xs now holds only members above x, so y ranges ascending past x
            for y in bits_iter(self.adj[x] & xs) {
                out.push((v, x, y));
                if self.find(rem & !(1 << v) & !(1 << x) & !(1 << y), t - 1, out) {
                    return true;
                }
                out.pop();
            }
        }
        // leave v out of the packing
        if self.find(rem & !(1 << v), t, out) {
            return true;
        }
        self.failed.insert((rem, t as u32));
        false
    }
}

/// Enumerate cliques of `size` drawn from `base` in ascending vertex order,
/// passing each clique and the common neighborhood of its members within
/// `universe` to `f`. Stops early when `f` returns true. `size == 0` yields
/// the empty clique with `universe` as its neighborhood.
fn for_each_clique(
    adj: &[u64],
    base: u64,
    universe: u64,
    size: usize,
    f: &mut impl FnMut(&[usize], u64) -> bool,
) -> bool {
    fn rec(
        adj: &[u64],
        size: usize,
        chosen: &mut Vec<usize>,
        cand: u64,
        common: u64,
        f: &mut impl FnMut(&[usize], u64) -> bool,
    ) -> bool {
        if chosen.len() == size {
            return f(chosen, common);
        }
        let mut rest = cand;
        while rest != 0 {
            if (rest.count_ones() as usize) + chosen.len() < size {
                return false;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            chosen.push(v);
            // rest already excludes v and everything below, keeping order ascending
            if rec(adj, size, chosen, rest & adj[v], common & adj[v], f) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(size);
    rec(adj, size, &mut chosen, base, universe, f)
}

/// Search for a monochromatic join copy `K_a + (b*K2 ∪ c*K1)` in color `col`.
///
/// # Panics
/// Panics if `p` is not a [`Pattern::Join`].
pub fn find_mono_join(c: &Coloring, col: EdgeColor, p: &Pattern) -> Detection {
    let Pattern::Join {
        clique: a,
        pairs: b,
        singletons: singles,
    } = *p
    else {
        panic!("find_mono_join requires a join pattern");
    };
    let n = c.n();
    if a + 2 * b + singles > n {
        return Detection::TooLarge;
    }
    let adj: Vec<u64> = (0..n).map(|v| c.neighborhood_bits(v, col)).collect();
    let all = c.vertices().bits();
    let mut finder = MatchFinder::new(&adj);
    let mut witness = None;
    for_each_clique(&adj, all, all, a, &mut |clique, common| {
        let s_size = common.count_ones() as usize;
        if s_size < 2 * b + singles {
            return false;
        }
        let mut pairs = Vec::new();
        if !finder.find(common, b, &mut pairs) {
            return false;
        }
        let mut vertices: Vec<usize> = clique.to_vec();
        let mut used = 0u64;
        for &(x, y) in &pairs {
            vertices.push(x);
            vertices.push(y);
            used |= 1 << x | 1 << y;
        }
        vertices.extend(bits_iter(common & !used).take(singles));
        witness = Some(Witness {
            pattern: *p,
            color: col,
            vertices,
        });
        true
    });
    match witness {
        Some(w) => Detection::Found(w),
        None => Detection::Absent,
    }
}

/// Search for `t` vertex-disjoint monochromatic triangles in color `col`.
pub fn find_mono_triangles(c: &Coloring, col: EdgeColor, t: usize) -> Detection {
    assert!(t >= 1, "triangle count must be positive");
    let n = c.n();
    if 3 * t > n {
        return Detection::TooLarge;
    }
    let adj: Vec<u64> = (0..n).map(|v| c.neighborhood_bits(v, col)).collect();
    let mut finder = TriangleFinder::new(&adj);
    let mut triples = Vec::new();
    if finder.find(c.vertices().bits(), t, &mut triples) {
        let mut vertices = Vec::with_capacity(3 * t);
        for (x, y, z) in triples {
            vertices.push(x);
            vertices.push(y);
            vertices.push(z);
        }
        Detection::Found(Witness {
            pattern: Pattern::Triangles { count: t },
            color: col,
            vertices,
        })
    } else {
        Detection::Absent
    }
}

/// Does the coloring contain a monochromatic copy of `p` in color `col`?
pub fn contains_mono(c: &Coloring, col: EdgeColor, p: &Pattern) -> Detection {
    match p {
        Pattern::Join { .. } => find_mono_join(c, col, p),
        Pattern::Triangles { count } => find_mono_triangles(c, col, *count),
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

fn combinations(pool: &[usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        pool: &[usize],
        k: usize,
        start: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if acc.len() == k {
            return f(acc);
        }
        if pool.len() - start < k - acc.len() {
            return false;
        }
        for i in start..pool.len() {
            acc.push(pool[i]);
            if rec(pool, k, i + 1, acc, f) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(k);
    rec(pool, k, 0, &mut acc, f)
}

/// All ways to split `pool` into unordered pairs; `f` sees each pairing.
fn pairings(pool: &[usize], f: &mut impl FnMut(&[(usize, usize)]) -> bool) -> bool {
    fn rec(
        rest: &mut Vec<usize>,
        acc: &mut Vec<(usize, usize)>,
        f: &mut impl FnMut(&[(usize, usize)]) -> bool,
    ) -> bool {
        if rest.is_empty() {
            return f(acc);
        }
        let x = rest.remove(0);
        for i in 0..rest.len() {
            let y = rest.remove(i);
            acc.push((x, y));
            if rec(rest, acc, f) {
                return true;
            }
            acc.pop();
            rest.insert(i, y);
        }
        rest.insert(0, x);
        false
    }
    let mut rest = pool.to_vec();
    let mut acc = Vec::new();
    rec(&mut rest, &mut acc, f)
}

/// All ways to split `pool` into unordered triples.
fn triplings(pool: &[usize], f: &mut impl FnMut(&[(usize, usize, usize)]) -> bool) -> bool {
    fn rec(
        rest: &mut Vec<usize>,
        acc: &mut Vec<(usize, usize, usize)>,
        f: &mut impl FnMut(&[(usize, usize, usize)]) -> bool,
    ) -> bool {
        if rest.is_empty() {
            return f(acc);
        }
        let x = rest.remove(0);
        for i in 0..rest.len() {
            let y = rest.remove(i);
            for j in i..rest.len() {
                let z = rest.remove(j);
                acc.push((x, y, z));
                if rec(rest, acc, f) {
                    return true;
                }
                acc.pop();
                rest.insert(j, z);
            }
            rest.insert(i, y);
        }
        rest.insert(0, x);
        false
    }
    let mut rest = pool.to_vec();
    let mut acc = Vec::new();
    rec(&mut rest, &mut acc, f)
}

/// Reference detector: enumerate every vertex subset of the pattern's size and
/// every role assignment within it. Same verdicts as [`contains_mono`] by
/// definition; intended as a test oracle on small colorings (n <= 12).
pub fn brute_force_contains(c: &Coloring, col: EdgeColor, p: &Pattern) -> Detection {
    let n = c.n();
    let total = p.vertex_count();
    if total > n {
        return Detection::TooLarge;
    }
    let all: Vec<usize> = (0..n).collect();
    let same = |u: usize, v: usize| c.color_of(u, v) == col;
    let mut witness = None;
    combinations(&all, total, &mut |subset| {
        match *p {
            Pattern::Join {
                clique: a,
                pairs: b,
                singletons: _,
            } => combinations(subset, a, &mut |q| {
                // clique internal edges and the join to the rest
                for (i, &u) in q.iter().enumerate() {
                    for &v in &q[i + 1..] {
                        if !same(u, v) {
                            return false;
                        }
                    }
                }
                let rest: Vec<usize> = subset.iter().copied().filter(|v| !q.contains(v)).collect();
                for &u in q {
                    for &v in &rest {
                        if !same(u, v) {
                            return false;
                        }
                    }
                }
                combinations(&rest, 2 * b, &mut |matched| {
                    pairings(matched, &mut |pairs| {
                        if !pairs.iter().all(|&(x, y)| same(x, y)) {
                            return false;
                        }
                        let mut vertices: Vec<usize> = q.to_vec();
                        for &(x, y) in pairs {
                            vertices.push(x);
                            vertices.push(y);
                        }
                        vertices.extend(rest.iter().copied().filter(|v| !matched.contains(v)));
                        witness = Some(Witness {
                            pattern: *p,
                            color: col,
                            vertices,
                        });
                        true
                    })
                })
            }),
            Pattern::Triangles { .. } => triplings(subset, &mut |triples| {
                if !triples
                    .iter()
                    .all(|&(x, y, z)| same(x, y) && same(x, z) && same(y, z))
                {
                    return false;
                }
                let mut vertices = Vec::with_capacity(total);
                for &(x, y, z) in triples {
                    vertices.push(x);
                    vertices.push(y);
                    vertices.push(z);
                }
                witness = Some(Witness {
                    pattern: *p,
                    color: col,
                    vertices,
                });
                true
            }),
        }
    });
    match witness {
        Some(w) => Detection::Found(w),
        None => Detection::Absent,
    }
}

// ---------------------------------------------------------------------------
// Incremental checks for the extension search
// ---------------------------------------------------------------------------

/// Is there a monochromatic copy of `p` whose vertex set contains `v`?
///
/// Used by the extension search: survivors are pattern-free, so after adding
/// a vertex only copies through that vertex can exist. Any join copy through
/// `v` has its clique inside `N_col(v) ∪ {v}` (every non-clique copy vertex
/// lies in the clique's common neighborhood), which keeps the enumeration
/// local to `v`.
pub(crate) fn copy_through(c: &Coloring, col: EdgeColor, p: &Pattern, v: usize) -> bool {
    match *p {
        Pattern::Join {
            clique,
            pairs,
            singletons,
        } => join_copy_through(c, col, clique, pairs, singletons, v),
        Pattern::Triangles { count } => triangles_copy_through(c, col, count, v),
    }
}

fn join_copy_through(
    c: &Coloring,
    col: EdgeColor,
    a: usize,
    b: usize,
    singles: usize,
    v: usize,
) -> bool {
    let n = c.n();
    if a + 2 * b + singles > n {
        return false;
    }
    let adj: Vec<u64> = (0..n).map(|w| c.neighborhood_bits(w, col)).collect();
    let all = c.vertices().bits();
    let nv = adj[v];
    let need = 2 * b + singles;
    let mut finder = MatchFinder::new(&adj);
    let mut scratch = Vec::new();

    // v in the clique: the rest of the clique lies in N(v), and S picks up
    // the intersection with N(v) for free
    if a >= 1 {
        let hit = for_each_clique(&adj, nv, nv, a - 1, &mut |_, s| {
            if (s.count_ones() as usize) < need {
                return false;
            }
            scratch.clear();
            finder.find(s, b, &mut scratch)
        });
        if hit {
            return true;
        }
    }

    // v outside the clique: the whole clique lies in N(v) and v lands in S.
    // v is then either a singleton of the copy or matched to some u in S.
    let mut check_s = |finder: &mut MatchFinder<'_>, s: u64| -> bool {
        debug_assert!(s >> v & 1 == 1);
        if (s.count_ones() as usize) < need {
            return false;
        }
        if singles >= 1 {
            scratch.clear();
            if finder.find(s & !(1 << v), b, &mut scratch) {
                return true;
            }
        }
        if b >= 1 {
            for u in bits_iter(adj[v] & s) {
                scratch.clear();
                if finder.find(s & !(1 << v) & !(1 << u), b - 1, &mut scratch) {
                    return true;
                }
            }
        }
        false
    };
    if a == 0 {
        check_s(&mut finder, all)
    } else {
        for_each_clique(&adj, nv, all, a, &mut |_, s| check_s(&mut finder, s))
    }
}

fn triangles_copy_through(c: &Coloring, col: EdgeColor, t: usize, v: usize) -> bool {
    let n = c.n();
    if 3 * t > n {
        return false;
    }
    let adj: Vec<u64> = (0..n).map(|w| c.neighborhood_bits(w, col)).collect();
    let all = c.vertices().bits();
    let nv = adj[v];
    let mut finder = TriangleFinder::new(&adj);
    let mut scratch = Vec::new();
    for x in bits_iter(nv) {
        for y in bits_iter(adj[x] & nv & !((1u64 << (x + 1)) - 1)) {
            scratch.clear();
            if finder.find(all & !(1 << v) & !(1 << x) & !(1 << y), t - 1, &mut scratch) {
                return true;
            }
        }
    }
    false
}
