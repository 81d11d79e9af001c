//! Deterministic generators for the extremal lower-bound colorings.

use thiserror::Error;

use crate::coloring::{Coloring, EdgeColor, MAX_VERTICES};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum ConstructError {
    #[error("parameter {0} out of range")]
    OutOfRange(usize),
    #[error("no {degree}-regular graph on {order} vertices: odd degree sum")]
    Infeasible { order: usize, degree: usize },
    #[error("construction requires odd n, got {0}")]
    ParityError(usize),
}

/// Parity correction used throughout the star-vs-fan bounds: 0 for odd n,
/// 1 for even n.
#[inline]
pub fn parity_epsilon(n: usize) -> usize {
    if n % 2 == 0 {
        1
    } else {
        0
    }
}

/// Coloring of `K_h` whose red class is a `d`-regular circulant.
///
/// Offsets are `1..=d/2` for even `d`, and `1..=(d-1)/2` plus the antipodal
/// offset `h/2` for odd `d` (which forces `h` even — that is exactly the
/// handshake condition `h*d` even).
pub fn circulant_red_regular(h: usize, d: usize) -> Result<Coloring, ConstructError> {
    if h == 0 || h > MAX_VERTICES {
        return Err(ConstructError::OutOfRange(h));
    }
    if d >= h && !(d == 0 && h == 1) {
        return Err(ConstructError::OutOfRange(d));
    }
    if h * d % 2 == 1 {
        return Err(ConstructError::Infeasible {
            order: h,
            degree: d,
        });
    }
    let mut offsets: Vec<usize> = (1..=d / 2).collect();
    if d % 2 == 1 {
        offsets.push(h / 2);
    }
    let mut c = Coloring::new_complete(h, EdgeColor::Blue)?;
    for u in 0..h {
        for &k in &offsets {
            c.assign_color(u, (u + k) % h, EdgeColor::Red).unwrap();
        }
    }
    Ok(c)
}

/// The star-vs-fan extremal coloring on `3n-1-eps` vertices: a red `K_n`
/// joined in blue to an `(n-1)`-regular red circulant on `2n-1-eps`
/// vertices. Every vertex ends up with red degree `n-1`, so there is no red
/// star on `n` leaves and no blue fan of `n` triangles.
pub fn star_fan_extremal(n: usize) -> Result<Coloring, ConstructError> {
    if n == 0 {
        return Err(ConstructError::OutOfRange(0));
    }
    let eps = parity_epsilon(n);
    let h = 2 * n - 1 - eps;
    let total = n + h;
    if total > MAX_VERTICES {
        return Err(ConstructError::OutOfRange(n));
    }
    let inner = circulant_red_regular(h, n - 1)?;
    let mut c = Coloring::new_complete(total, EdgeColor::Blue)?;
    for u in 0..n {
        for v in u + 1..n {
            c.assign_color(u, v, EdgeColor::Red).unwrap();
        }
    }
    for u in 0..h {
        for v in u + 1..h {
            if inner.color_of(u, v) == EdgeColor::Red {
                c.assign_color(n + u, n + v, EdgeColor::Red).unwrap();
            }
        }
    }
    Ok(c)
}

/// The pentagon blow-up on `4n+1` vertices, fan-free in both colors for odd
/// `n`: five cyclic blocks sized `[n, n, n, n, 1]` holding a red `K_n`, two
/// blue `K_n`s, another red `K_n`, and a single vertex; edges between blocks
/// at cyclic distance 1 are red, at distance 2 blue. The two red blocks sit
/// at pentagon distance 2 (blue-adjacent), the blue blocks at distance 1
/// (red-adjacent).
pub fn fan_fan_extremal(n: usize) -> Result<Coloring, ConstructError> {
    if n == 0 {
        return Err(ConstructError::OutOfRange(0));
    }
    if n % 2 == 0 {
        return Err(ConstructError::ParityError(n));
    }
    let total = 4 * n + 1;
    if total > MAX_VERTICES {
        return Err(ConstructError::OutOfRange(n));
    }
    // block index -> (start, len, internal color); pentagon position i holds block i
    let sizes = [n, n, n, n, 1];
    let internal = [
        EdgeColor::Red,
        EdgeColor::Blue,
        EdgeColor::Blue,
        EdgeColor::Red,
        EdgeColor::Red, // irrelevant for a single vertex
    ];
    let mut start = [0usize; 5];
    for i in 1..5 {
        start[i] = start[i - 1] + sizes[i - 1];
    }
    let mut c = Coloring::new_complete(total, EdgeColor::Blue)?;
    for i in 0..5 {
        for a in 0..sizes[i] {
            for b in a + 1..sizes[i] {
                c.assign_color(start[i] + a, start[i] + b, internal[i]).unwrap();
            }
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let dist = (j - i).min(5 - (j - i));
            let col = if dist == 1 {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            };
            for a in 0..sizes[i] {
                for b in 0..sizes[j] {
                    c.assign_color(start[i] + a, start[j] + b, col).unwrap();
                }
            }
        }
    }
    Ok(c)
}
