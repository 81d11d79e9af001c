//! Target subgraph descriptors.
//!
//! Every pattern searched for is either a join `K_a + (b*K2 ∪ c*K1)` or a
//! disjoint union of triangles. The named shapes are thin wrappers:
//! star `K_{1,n}` = `join(1,0,n)`, fan `F_n` = `join(1,n,0)`, book `B_n` =
//! `join(2,0,n)`, clique `K_m` = `join(m,0,0)`, matching `n*K2` = `join(0,n,0)`.
//!
//! Containment is always subgraph containment, never induced: the pattern
//! pins edge colors only for the clique, the clique-to-rest join, and the
//! matching pairs. Edges among singletons (and between singletons and
//! matching vertices) are unconstrained.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("bad pattern parameters: {0}")]
    BadParams(String),
    #[error("bad pattern syntax `{0}`")]
    BadSyntax(String),
}

/// A subgraph shape whose monochromatic copies are sought or forbidden.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// `K_clique + (pairs*K2 ∪ singletons*K1)`.
    Join {
        clique: usize,
        pairs: usize,
        singletons: usize,
    },
    /// `count` vertex-disjoint triangles.
    Triangles { count: usize },
}

impl Pattern {
    /// Star `K_{1,n}`: a center joined to `n` independent vertices.
    pub fn star(n: usize) -> Result<Self, PatternError> {
        if n == 0 {
            return Err(PatternError::BadParams("star:N needs N >= 1".into()));
        }
        Ok(Pattern::Join {
            clique: 1,
            pairs: 0,
            singletons: n,
        })
    }

    /// Fan `F_n`: `n` triangles sharing one vertex.
    pub fn fan(n: usize) -> Result<Self, PatternError> {
        if n == 0 {
            return Err(PatternError::BadParams("fan:N needs N >= 1".into()));
        }
        Ok(Pattern::Join {
            clique: 1,
            pairs: n,
            singletons: 0,
        })
    }

    /// Book `B_n`: `n` triangles sharing one edge.
    pub fn book(n: usize) -> Result<Self, PatternError> {
        if n == 0 {
            return Err(PatternError::BadParams("book:N needs N >= 1".into()));
        }
        Ok(Pattern::Join {
            clique: 2,
            pairs: 0,
            singletons: n,
        })
    }

    /// Complete graph `K_m`.
    pub fn clique(m: usize) -> Result<Self, PatternError> {
        if m == 0 {
            return Err(PatternError::BadParams("clique:N needs N >= 1".into()));
        }
        Ok(Pattern::Join {
            clique: m,
            pairs: 0,
            singletons: 0,
        })
    }

    /// Matching `n*K2`: `n` disjoint edges.
    pub fn matching(n: usize) -> Result<Self, PatternError> {
        if n == 0 {
            return Err(PatternError::BadParams("matching:N needs N >= 1".into()));
        }
        Ok(Pattern::Join {
            clique: 0,
            pairs: n,
            singletons: 0,
        })
    }

    /// `t` vertex-disjoint triangles.
    pub fn triangles(t: usize) -> Result<Self, PatternError> {
        if t == 0 {
            return Err(PatternError::BadParams("triangles:N needs N >= 1".into()));
        }
        Ok(Pattern::Triangles { count: t })
    }

    /// Raw join `K_a + (b*K2 ∪ c*K1)`; at least one vertex required.
    pub fn join(a: usize, b: usize, c: usize) -> Result<Self, PatternError> {
        if a + 2 * b + c == 0 {
            return Err(PatternError::BadParams(
                "join:A,B,C needs A+2B+C >= 1".into(),
            ));
        }
        Ok(Pattern::Join {
            clique: a,
            pairs: b,
            singletons: c,
        })
    }

    /// Number of vertices a copy of the pattern occupies.
    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Join {
                clique,
                pairs,
                singletons,
            } => clique + 2 * pairs + singletons,
            Pattern::Triangles { count } => 3 * count,
        }
    }
}

impl fmt::Display for Pattern {
    /// Canonical textual syntax; named shapes win over the raw `join:` form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Join {
                clique: 1,
                pairs: 0,
                singletons: c,
            } if c > 0 => write!(f, "star:{c}"),
            Pattern::Join {
                clique: 1,
                pairs: b,
                singletons: 0,
            } if b > 0 => write!(f, "fan:{b}"),
            Pattern::Join {
                clique: 2,
                pairs: 0,
                singletons: c,
            } if c > 0 => write!(f, "book:{c}"),
            Pattern::Join {
                clique: a,
                pairs: 0,
                singletons: 0,
            } => write!(f, "clique:{a}"),
            Pattern::Join {
                clique: 0,
                pairs: b,
                singletons: 0,
            } => write!(f, "matching:{b}"),
            Pattern::Join {
                clique,
                pairs,
                singletons,
            } => write!(f, "join:{clique},{pairs},{singletons}"),
            Pattern::Triangles { count } => write!(f, "triangles:{count}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    /// Parse the textual syntax: `star:N`, `fan:N`, `book:N`, `clique:N`,
    /// `matching:N`, `triangles:N`, `join:A,B,C`. Case-sensitive, no spaces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| PatternError::BadSyntax(s.into()))?;
        let parse_one = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| PatternError::BadSyntax(s.into()))
        };
        match kind {
            "star" => Pattern::star(parse_one(args)?),
            "fan" => Pattern::fan(parse_one(args)?),
            "book" => Pattern::book(parse_one(args)?),
            "clique" => Pattern::clique(parse_one(args)?),
            "matching" => Pattern::matching(parse_one(args)?),
            "triangles" => Pattern::triangles(parse_one(args)?),
            "join" => {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 3 {
                    return Err(PatternError::BadParams(format!(
                        "join takes exactly 3 parameters, got {}",
                        parts.len()
                    )));
                }
                Pattern::join(parse_one(parts[0])?, parse_one(parts[1])?, parse_one(parts[2])?)
            }
            other => Err(PatternError::BadSyntax(format!("unknown kind `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan3_is_join_1_3_0_on_7_vertices() {
        let p = Pattern::fan(3).unwrap();
        assert_eq!(
            p,
            Pattern::Join {
                clique: 1,
                pairs: 3,
                singletons: 0
            }
        );
        assert_eq!(p.vertex_count(), 7);
    }

    #[test]
    fn star4_has_5_vertices() {
        let p = Pattern::star(4).unwrap();
        assert_eq!(
            p,
            Pattern::Join {
                clique: 1,
                pairs: 0,
                singletons: 4
            }
        );
        assert_eq!(p.vertex_count(), 5);
    }

    #[test]
    fn join_4_0_2_has_6_vertices() {
        assert_eq!(Pattern::join(4, 0, 2).unwrap().vertex_count(), 6);
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(Pattern::triangles(3).unwrap().vertex_count(), 9);
        assert_eq!(Pattern::book(2).unwrap().vertex_count(), 4);
        assert_eq!(Pattern::fan(1).unwrap().vertex_count(), 3);
    }

    #[test]
    fn zero_params_rejected() {
        assert!(Pattern::star(0).is_err());
        assert!(Pattern::fan(0).is_err());
        assert!(Pattern::clique(0).is_err());
        assert!(Pattern::matching(0).is_err());
        assert!(Pattern::triangles(0).is_err());
        assert!(Pattern::join(0, 0, 0).is_err());
        assert!(Pattern::join(0, 0, 1).is_ok());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "star:3",
            "fan:2",
            "book:5",
            "clique:4",
            "matching:3",
            "triangles:2",
            "join:4,0,2",
            "join:0,0,3",
        ] {
            let p: Pattern = s.parse().unwrap();
            assert_eq!(p.to_string(), s, "round trip of {s}");
        }
        // named forms win on output
        assert_eq!("join:1,3,0".parse::<Pattern>().unwrap().to_string(), "fan:3");
        assert_eq!(
            "join:1,0,2".parse::<Pattern>().unwrap().to_string(),
            "star:2"
        );
        assert_eq!(
            "join:3,0,0".parse::<Pattern>().unwrap().to_string(),
            "clique:3"
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("star".parse::<Pattern>().is_err());
        assert!("star:".parse::<Pattern>().is_err());
        assert!("star:-1".parse::<Pattern>().is_err());
        assert!("Star:3".parse::<Pattern>().is_err());
        assert!("star: 3".parse::<Pattern>().is_err());
        assert!("join:1,2".parse::<Pattern>().is_err());
        assert!("join:1,2,3,4".parse::<Pattern>().is_err());
        assert!("wheel:4".parse::<Pattern>().is_err());
        assert!("star:0".parse::<Pattern>().is_err());
    }
}
