//! Red/blue edge-colorings of complete graphs: monochromatic fan, star,
//! book and triangle-packing detection, the extremal lower-bound
//! constructions for stars vs. fans and fans vs. fans, and an isomorph-free
//! extension search that pins small Ramsey values exactly.
//!
//! Start with the runnable examples (`cargo run --example <name>`):
//!
//! - `extremal_constructions` — build the lower-bound certificates
//! - `detect_witness` — find and re-verify monochromatic copies
//! - `small_ramsey_values` — compute exact values with the search engine
//! - `certificate_files` — the text certificate format and the verifier
//! - `pruned_fan3_search` — the budgeted 14-vertex fan/fan search
//! - `known_values` — the registry of known Ramsey values
//!
//! The `ramsey` binary exposes the same operations as subcommands
//! (`construct`, `verify`, `detect`, `search`, `table`).

pub mod coloring;
pub mod constructions;
pub mod detect;
pub mod io;
pub mod patterns;
pub mod search;

pub use coloring::{Coloring, ColoringError, EdgeColor, VertexSet, MAX_VERTICES};
pub use constructions::{
    circulant_red_regular, fan_fan_extremal, parity_epsilon, star_fan_extremal, ConstructError,
};
pub use detect::{
    brute_force_contains, contains_mono, find_mono_join, find_mono_triangles,
    max_color_matching, Detection, Witness,
};
pub use patterns::{Pattern, PatternError};
pub use search::{
    canonical_form, compute_ramsey_value, derive_star_degree_cap, exhaustive_search,
    extend_level, ForbidRule, PruneRule, RamseyValue, SearchResult, SearchSpec,
};
