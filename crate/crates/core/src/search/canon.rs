//! Canonical forms for colorings under color-preserving vertex permutation.
//!
//! The form is the lexicographically smallest upper-triangle color string
//! (codec body order, `B` < `R`) the coloring can be relabeled to. For
//! n <= 8 the minimum ranges over all n! permutations. For larger n the
//! permutations are restricted to an equitable degree partition refined to
//! a fixed point, which keeps forms canonical (the partition and its cell
//! order are isomorphism-invariant) while shrinking the permutation tree to
//! something workable at 13-14 vertices.
//!
//! The backtracking minimization prunes on string prefixes against the best
//! leaf so far, records an automorphism every time a leaf ties, and skips
//! branch candidates lying in a known orbit of the stabilizer of the fixed
//! prefix.

use crate::coloring::Coloring;

const EXACT_LIMIT: usize = 8;
const MAX_AUTOS: usize = 128;

/// Number of bytes in the form of an n-vertex coloring.
#[inline]
pub(crate) fn form_len(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Canonical byte string: equal forms iff the colorings differ by a vertex
/// permutation. Red/blue swap is deliberately not quotiented.
pub fn canonical_form(c: &Coloring) -> Vec<u8> {
    let n = c.n();
    let cells = if n <= EXACT_LIMIT {
        vec![(0..n).collect::<Vec<usize>>()]
    } else {
        refine_partition(c)
    };
    CanonSearch::new(c, &cells).run()
}

/// Pack a form into bits (bit e set iff byte e is `R`). Forms up to n = 16
/// fit; the search engine stores level survivors this way.
pub(crate) fn pack_form(form: &[u8]) -> u128 {
    debug_assert!(form.len() <= 128);
    let mut bits = 0u128;
    for (e, &b) in form.iter().enumerate() {
        if b == b'R' {
            bits |= 1 << e;
        }
    }
    bits
}

/// Rebuild the coloring a packed form describes (in canonical labeling).
pub(crate) fn coloring_from_packed(bits: u128, n: usize) -> Coloring {
    let mut c = Coloring::new_complete(n, crate::coloring::EdgeColor::Blue).unwrap();
    let mut e = 0;
    for i in 1..n {
        for j in 0..i {
            if bits >> e & 1 == 1 {
                c.assign_color(j, i, crate::coloring::EdgeColor::Red).unwrap();
            }
            e += 1;
        }
    }
    c
}

/// Equitable partition: start from red degrees, then split cells by the
/// multiset of neighbor cells until stable. Cells come out ordered by their
/// invariant keys, so the order is preserved by isomorphism.
fn refine_partition(c: &Coloring) -> Vec<Vec<usize>> {
    let n = c.n();
    let mut cell_of: Vec<usize> = {
        let mut keys: Vec<usize> = (0..n)
            .map(|v| c.color_degree(v, crate::coloring::EdgeColor::Red))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        sorted.dedup();
        keys.iter_mut()
            .for_each(|k| *k = sorted.binary_search(k).unwrap());
        keys
    };
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<usize> = crate::coloring::VertexSet::from_bits(
                c.neighborhood_bits(v, crate::coloring::EdgeColor::Red),
            )
            .iter()
            .map(|u| cell_of[u])
            .collect();
            neigh.sort_unstable();
            sigs.push((cell_of[v], neigh));
        }
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap())
            .collect();
        let stable = next == cell_of;
        cell_of = next;
        if stable {
            break;
        }
    }
    let cell_count = cell_of.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); cell_count];
    for v in 0..n {
        cells[cell_of[v]].push(v);
    }
    cells
}

struct CanonSearch<'a> {
    c: &'a Coloring,
    n: usize,
    /// cell feeding each position
    pos_cell: Vec<usize>,
    cells: &'a [Vec<usize>],
    perm: Vec<usize>,
    used: u64,
    cur: Vec<u8>,
    best: Option<Vec<u8>>,
    best_perm: Vec<usize>,
    autos: Vec<Vec<usize>>,
}

impl<'a> CanonSearch<'a> {
    fn new(c: &'a Coloring, cells: &'a [Vec<usize>]) -> Self {
        let n = c.n();
        let mut pos_cell = Vec::with_capacity(n);
        for (ci, cell) in cells.iter().enumerate() {
            pos_cell.extend(std::iter::repeat(ci).take(cell.len()));
        }
        debug_assert_eq!(pos_cell.len(), n);
        CanonSearch {
            c,
            n,
            pos_cell,
            cells,
            perm: Vec::with_capacity(n),
            used: 0,
            cur: Vec::with_capacity(form_len(n)),
            best: None,
            best_perm: Vec::new(),
            autos: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<u8> {
        self.rec(0);
        self.best.expect("canonical search explores at least one leaf")
    }

    /// Orbit representatives among `cands` under the recorded automorphisms
    /// that fix the current prefix pointwise.
    fn orbit_reps(&self, cands: &[usize]) -> Vec<usize> {
        if self.autos.is_empty() || cands.len() <= 1 {
            return cands.to_vec();
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for sigma in &self.autos {
            if self.perm.iter().any(|&p| sigma[p] != p) {
                continue;
            }
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, sigma[v]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut seen_roots = Vec::new();
        let mut reps = Vec::with_capacity(cands.len());
        for &v in cands {
            let r = find(&mut parent, v);
            if !seen_roots.contains(&r) {
                seen_roots.push(r);
                reps.push(v);
            }
        }
        reps
    }

    fn rec(&mut self, depth: usize) {
        if depth == self.n {
            match &self.best {
                None => {
                    self.best = Some(self.cur.clone());
                    self.best_perm = self.perm.clone();
                }
                Some(best) => match self.cur.cmp(best) {
                    std::cmp::Ordering::Less => {
                        self.best = Some(self.cur.clone());
                        self.best_perm = self.perm.clone();
                    }
                    std::cmp::Ordering::Equal => {
                        if self.autos.len() < MAX_AUTOS {
                            let mut sigma: Vec<usize> = (0..self.n).collect();
                            for t in 0..self.n {
                                sigma[self.best_perm[t]] = self.perm[t];
                            }
                            if sigma.iter().enumerate().any(|(i, &s)| i != s) {
                                self.autos.push(sigma);
                            }
                        }
                    }
                    std::cmp::Ordering::Greater => unreachable!("pruned"),
                },
            }
            return;
        }
        let cands: Vec<usize> = self.cells[self.pos_cell[depth]]
            .iter()
            .copied()
            .filter(|&v| self.used >> v & 1 == 0)
            .collect();
        let len_before = self.cur.len();
        for v in self.orbit_reps(&cands) {
            for t in 0..depth {
                self.cur
                    .push(self.c.color_of(self.perm[t], v).to_char() as u8);
            }
            let keep = match &self.best {
                None => true,
                Some(best) => self.cur.as_slice() <= &best[..self.cur.len()],
            };
            if keep {
                self.perm.push(v);
                self.used |= 1 << v;
                self.rec(depth + 1);
                self.used &= !(1 << v);
                self.perm.pop();
            }
            self.cur.truncate(len_before);
        }
    }
}
