//! Isomorph-free extension search over forbidden-pattern-free colorings.
//!
//! Level `k` holds one representative per isomorphism class of the colorings
//! of `K_k` avoiding every forbidden monochromatic pattern. Level `k+1` is
//! built by coloring the edges of one new vertex in every possible way
//! (branches ordered by the new vertex's red degree), keeping extensions
//! that stay clean, and deduplicating by canonical form. Survivors are
//! already clean, so only pattern copies through the new vertex need
//! checking. If some level exhausts to zero classes, no coloring of that
//! order avoids the forbidden patterns — an upper-bound proof.

mod canon;

pub use canon::canonical_form;
use canon::{coloring_from_packed, pack_form};

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{Coloring, EdgeColor};
use crate::detect::{contains_mono, copy_through};
use crate::patterns::Pattern;

/// One side of a Ramsey avoidance problem: no `color` copy of `pattern`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForbidRule {
    pub color: EdgeColor,
    pub pattern: Pattern,
}

impl fmt::Display for ForbidRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.color, self.pattern)
    }
}

impl FromStr for ForbidRule {
    type Err = String;

    /// Parse `COLOR:PATTERN`, e.g. `red:fan:3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (color, pattern) = s
            .split_once(':')
            .ok_or_else(|| format!("expected COLOR:PATTERN, got `{s}`"))?;
        Ok(ForbidRule {
            color: color.parse()?,
            pattern: pattern.parse().map_err(|e| format!("{e}"))?,
        })
    }
}

/// Search-space reductions beyond the forbidden patterns themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneRule {
    /// Reject any coloring where some vertex exceeds `cap` edges of `color`.
    /// Exact when derived from a forbidden star; a hard extra constraint
    /// otherwise.
    DegreeCap { color: EdgeColor, cap: usize },
    /// Reject colorings containing a `color` copy of `pattern`, justified
    /// only for searches whose target order is exactly `target_n` (the rule
    /// is ignored otherwise). Mono copies persist under extension, so the
    /// rule applies at every level of such a run.
    GadgetAtTarget {
        color: EdgeColor,
        pattern: Pattern,
        target_n: usize,
    },
}

impl PruneRule {
    /// Parse the CLI form `COLOR:K`, e.g. `red:8`.
    pub fn parse_degree_cap(s: &str) -> Result<Self, String> {
        let (color, cap) = s
            .split_once(':')
            .ok_or_else(|| format!("expected COLOR:K, got `{s}`"))?;
        Ok(PruneRule::DegreeCap {
            color: color.parse()?,
            cap: cap
                .parse()
                .map_err(|_| format!("bad degree cap `{cap}`"))?,
        })
    }

    /// Parse the CLI form `COLOR:PATTERN@N`, e.g. `red:join:4,0,2@14`.
    pub fn parse_gadget(s: &str) -> Result<Self, String> {
        let (head, target) = s
            .rsplit_once('@')
            .ok_or_else(|| format!("expected COLOR:PATTERN@N, got `{s}`"))?;
        let (color, pattern) = head
            .split_once(':')
            .ok_or_else(|| format!("expected COLOR:PATTERN@N, got `{s}`"))?;
        Ok(PruneRule::GadgetAtTarget {
            color: color.parse()?,
            pattern: pattern.parse().map_err(|e| format!("{e}"))?,
            target_n: target
                .parse()
                .map_err(|_| format!("bad gadget target `{target}`"))?,
        })
    }
}

impl fmt::Display for PruneRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PruneRule::DegreeCap { color, cap } => write!(f, "degree-cap:{color}:{cap}"),
            PruneRule::GadgetAtTarget {
                color,
                pattern,
                target_n,
            } => write!(f, "gadget:{color}:{pattern}@{target_n}"),
        }
    }
}

/// What to search for and how hard.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    /// Deepest level to enumerate (at most 64).
    pub target_n: usize,
    /// Monochromatic patterns no survivor may contain. Must be nonempty.
    pub forbids: Vec<ForbidRule>,
    pub prunes: Vec<PruneRule>,
    /// Wall-clock budget; `None` means unlimited.
    pub time_budget: Option<Duration>,
    /// Additionally quotient classes by the red/blue swap. Only meaningful
    /// when forbids and prunes are color-symmetric; off by default.
    pub dedupe_color_swap: bool,
}

impl SearchSpec {
    pub fn new(target_n: usize, forbids: Vec<ForbidRule>) -> Self {
        SearchSpec {
            target_n,
            forbids,
            prunes: Vec::new(),
            time_budget: None,
            dedupe_color_swap: false,
        }
    }

    pub fn with_prunes(mut self, prunes: Vec<PruneRule>) -> Self {
        self.prunes = prunes;
        self
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.time_budget = if budget.is_zero() { None } else { Some(budget) };
        self
    }

    fn validate(&self) {
        assert!(
            self.target_n >= 1 && self.target_n <= crate::coloring::MAX_VERTICES,
            "target_n must be in 1..=64"
        );
        assert!(!self.forbids.is_empty(), "forbids must be nonempty");
    }
}

/// One enumerated level of a search.
#[derive(Debug, Clone)]
pub struct LevelSummary {
    pub k: usize,
    /// Canonical classes of clean colorings of `K_k`.
    pub count: u64,
    /// First survivor in canonical-form order, if any.
    pub sample: Option<Coloring>,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    /// levels[i] describes `K_{i+1}`.
    pub levels: Vec<LevelSummary>,
    /// True iff every level up to the target was fully enumerated.
    pub exhausted: bool,
    pub max_level_reached: usize,
    pub elapsed: Duration,
}

impl SearchResult {
    pub fn count_at(&self, k: usize) -> Option<u64> {
        self.levels.get(k.checked_sub(1)?).map(|l| l.count)
    }

    /// First level with zero survivors, if the run got that far.
    pub fn first_zero_level(&self) -> Option<usize> {
        self.levels.iter().find(|l| l.count == 0).map(|l| l.k)
    }
}

/// A level extension ran out of budget; `partial` holds the classes found
/// before the deadline (complete for no prefix in particular).
#[derive(Debug)]
pub struct BudgetExceeded {
    pub partial: Vec<Coloring>,
}

/// For each forbidden star, the equivalent degree cap: a coloring contains a
/// `col` star on `n` leaves iff some vertex has `col` degree at least `n`,
/// so capping at `n-1` never removes a clean survivor.
pub fn derive_star_degree_cap(forbids: &[ForbidRule]) -> Vec<PruneRule> {
    forbids
        .iter()
        .filter_map(|rule| match rule.pattern {
            Pattern::Join {
                clique: 1,
                pairs: 0,
                singletons: n,
            } if n >= 1 => Some(PruneRule::DegreeCap {
                color: rule.color,
                cap: n - 1,
            }),
            _ => None,
        })
        .collect()
}

/// Digested spec: what the extension loop actually consults.
struct Checks {
    /// Forbids plus active gadget rules, all checked incrementally.
    patterns: Vec<(EdgeColor, Pattern)>,
    red_cap: Option<usize>,
    blue_cap: Option<usize>,
    swap_dedup: bool,
}

impl Checks {
    fn digest(spec: &SearchSpec) -> Self {
        let mut patterns: Vec<(EdgeColor, Pattern)> = spec
            .forbids
            .iter()
            .map(|r| (r.color, r.pattern))
            .collect();
        let mut red_cap = None;
        let mut blue_cap = None;
        for prune in &spec.prunes {
            match *prune {
                PruneRule::DegreeCap { color, cap } => {
                    let slot = match color {
                        EdgeColor::Red => &mut red_cap,
                        EdgeColor::Blue => &mut blue_cap,
                    };
                    *slot = Some(slot.map_or(cap, |old: usize| old.min(cap)));
                }
                PruneRule::GadgetAtTarget {
                    color,
                    pattern,
                    target_n,
                } => {
                    if target_n == spec.target_n {
                        patterns.push((color, pattern));
                    }
                }
            }
        }
        Checks {
            patterns,
            red_cap,
            blue_cap,
            swap_dedup: spec.dedupe_color_swap,
        }
    }

    fn degree_caps_ok(&self, c: &Coloring) -> bool {
        (0..c.n()).all(|v| {
            self.red_cap
                .is_none_or(|cap| c.color_degree(v, EdgeColor::Red) <= cap)
                && self
                    .blue_cap
                    .is_none_or(|cap| c.color_degree(v, EdgeColor::Blue) <= cap)
        })
    }
}

/// Visit every `k`-bit mask with popcount in `lo..=hi`, ascending by
/// popcount then numerically (Gosper's hack per popcount class), without
/// materializing the list.
fn for_each_mask(k: usize, lo: usize, hi: usize, mut f: impl FnMut(u64) -> bool) {
    let limit = 1u64 << k;
    for ones in lo..=hi.min(k) {
        if ones == 0 {
            if !f(0) {
                return;
            }
            continue;
        }
        let mut m = (1u64 << ones) - 1;
        while m < limit {
            if !f(m) {
                return;
            }
            // Gosper: next word with the same popcount
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
}

fn canonical_key(c: &Coloring, swap_dedup: bool) -> u128 {
    let key = pack_form(&canonical_form(c));
    if swap_dedup {
        key.min(pack_form(&canonical_form(&c.swap_colors())))
    } else {
        key
    }
}

/// Extend packed level-`k` survivors to level `k+1`. Returns `(forms,
/// complete)`; `complete` is false when the deadline cut the sweep short.
fn extend_packed(
    forms: &[u128],
    k: usize,
    checks: &Checks,
    deadline: Option<Instant>,
) -> (Vec<u128>, bool) {
    let aborted = AtomicBool::new(false);
    let lo = checks.blue_cap.map_or(0, |cap| k.saturating_sub(cap));
    let hi = checks.red_cap.unwrap_or(k);
    let mut next: Vec<u128> = forms
        .par_iter()
        .flat_map_iter(|&form| {
            let mut local = Vec::new();
            if aborted.load(Ordering::Relaxed)
                || deadline.is_some_and(|d| Instant::now() >= d)
            {
                aborted.store(true, Ordering::Relaxed);
                return local.into_iter();
            }
            let c = coloring_from_packed(form, k);
            // vertices whose degree is already at the cap: one more edge of
            // that color and the extension dies
            let full = crate::coloring::VertexSet::full(k).bits();
            let mut red_blocked = 0u64;
            let mut blue_blocked = 0u64;
            for v in 0..k {
                if checks
                    .red_cap
                    .is_some_and(|cap| c.color_degree(v, EdgeColor::Red) >= cap)
                {
                    red_blocked |= 1 << v;
                }
                if checks
                    .blue_cap
                    .is_some_and(|cap| c.color_degree(v, EdgeColor::Blue) >= cap)
                {
                    blue_blocked |= 1 << v;
                }
            }
            let mut since_deadline_check = 0u32;
            for_each_mask(k, lo, hi, |mask| {
                since_deadline_check += 1;
                if since_deadline_check & 0x3ff == 0
                    && deadline.is_some_and(|d| Instant::now() >= d)
                {
                    aborted.store(true, Ordering::Relaxed);
                    return false;
                }
                if mask & red_blocked != 0 || !mask & full & blue_blocked != 0 {
                    return true;
                }
                let child = c.extended(mask);
                if checks
                    .patterns
                    .iter()
                    .any(|&(col, ref p)| copy_through(&child, col, p, k))
                {
                    return true;
                }
                local.push(canonical_key(&child, checks.swap_dedup));
                true
            });
            local.into_iter()
        })
        .collect();
    next.par_sort_unstable();
    next.dedup();
    (next, !aborted.load(Ordering::Relaxed))
}

/// Build every clean canonical class of `K_{k+1}` from the level-`k`
/// classes. Inputs must all share one vertex count and already be clean;
/// outputs come back as canonical representatives in form order.
pub fn extend_level(
    survivors: &[Coloring],
    spec: &SearchSpec,
) -> Result<Vec<Coloring>, BudgetExceeded> {
    spec.validate();
    let Some(first) = survivors.first() else {
        return Ok(Vec::new());
    };
    let k = first.n();
    assert!(
        survivors.iter().all(|c| c.n() == k),
        "survivors must share a vertex count"
    );
    let checks = Checks::digest(spec);
    let mut forms: Vec<u128> = survivors
        .iter()
        .map(|c| canonical_key(c, checks.swap_dedup))
        .collect();
    forms.sort_unstable();
    forms.dedup();
    let deadline = spec.time_budget.map(|b| Instant::now() + b);
    let (next, complete) = extend_packed(&forms, k, &checks, deadline);
    let colorings: Vec<Coloring> = next
        .iter()
        .map(|&f| coloring_from_packed(f, k + 1))
        .collect();
    if complete {
        Ok(colorings)
    } else {
        Err(BudgetExceeded { partial: colorings })
    }
}

/// Run the level-by-level enumeration from `K_1` up to the target order.
///
/// `exhausted` is true iff every level completed within the budget; when a
/// level hits zero classes, deeper levels are zero by extension soundness
/// and are reported as such.
pub fn exhaustive_search(spec: &SearchSpec) -> SearchResult {
    spec.validate();
    let start = Instant::now();
    let deadline = spec.time_budget.map(|b| start + b);
    let checks = Checks::digest(spec);

    let mut levels = Vec::with_capacity(spec.target_n);
    let k1 = Coloring::new_complete(1, EdgeColor::Blue).unwrap();
    let k1_clean = checks
        .patterns
        .iter()
        .all(|&(col, ref p)| !contains_mono(&k1, col, p).is_found())
        && checks.degree_caps_ok(&k1);
    let mut survivors: Vec<u128> = if k1_clean { vec![0] } else { Vec::new() };
    levels.push(LevelSummary {
        k: 1,
        count: survivors.len() as u64,
        sample: survivors.first().map(|&f| coloring_from_packed(f, 1)),
    });

    let mut exhausted = true;
    for k in 1..spec.target_n {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            exhausted = false;
            break;
        }
        let (next, complete) = extend_packed(&survivors, k, &checks, deadline);
        if !complete {
            exhausted = false;
            break;
        }
        levels.push(LevelSummary {
            k: k + 1,
            count: next.len() as u64,
            sample: next.first().map(|&f| coloring_from_packed(f, k + 1)),
        });
        survivors = next;
    }

    SearchResult {
        max_level_reached: levels.len(),
        levels,
        exhausted,
        elapsed: start.elapsed(),
    }
}

/// Outcome of a Ramsey value computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyValue {
    /// Least `N` such that every coloring of `K_N` has a red copy of the
    /// first pattern or a blue copy of the second; proved by exhaustion.
    Exact(usize),
    /// The search ran out of levels or budget; survivors still existed at
    /// this depth.
    Unresolved { deepest_nonzero: usize },
}

/// Exhaust levels upward until no coloring avoids `red_p` in red and
/// `blue_p` in blue, scanning at most `max_n` vertices.
pub fn compute_ramsey_value(
    red_p: Pattern,
    blue_p: Pattern,
    max_n: usize,
    prunes: Vec<PruneRule>,
) -> RamseyValue {
    let spec = SearchSpec::new(
        max_n,
        vec![
            ForbidRule {
                color: EdgeColor::Red,
                pattern: red_p,
            },
            ForbidRule {
                color: EdgeColor::Blue,
                pattern: blue_p,
            },
        ],
    )
    .with_prunes(prunes);
    let result = exhaustive_search(&spec);
    match result.first_zero_level() {
        Some(k) if result.exhausted || result.levels.iter().any(|l| l.k == k) => RamseyValue::Exact(k),
        _ => RamseyValue::Unresolved {
            deepest_nonzero: result
                .levels
                .iter()
                .filter(|l| l.count > 0)
                .map(|l| l.k)
                .max()
                .unwrap_or(0),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::EdgeColor::{Blue, Red};

    fn forbid(color: EdgeColor, p: Pattern) -> ForbidRule {
        ForbidRule { color, pattern: p }
    }

    #[test]
    fn classical_r33_is_6() {
        let k3 = Pattern::clique(3).unwrap();
        let spec = SearchSpec::new(8, vec![forbid(Red, k3), forbid(Blue, k3)]);
        let result = exhaustive_search(&spec);
        assert!(result.exhausted);
        assert_eq!(result.count_at(1), Some(1));
        assert!(result.count_at(5).unwrap() > 0);
        assert_eq!(result.count_at(6), Some(0));
        assert_eq!(result.count_at(7), Some(0), "monotone vanishing");
        assert_eq!(
            compute_ramsey_value(k3, k3, 8, vec![]),
            RamseyValue::Exact(6)
        );
    }

    #[test]
    fn r_star2_fan2_is_5() {
        let spec = SearchSpec::new(
            6,
            vec![
                forbid(Red, Pattern::star(2).unwrap()),
                forbid(Blue, Pattern::fan(2).unwrap()),
            ],
        );
        let result = exhaustive_search(&spec);
        assert!(result.exhausted);
        assert!(result.count_at(4).unwrap() > 0);
        assert_eq!(result.count_at(5), Some(0));
    }

    #[test]
    fn r_star2_matching2_is_4() {
        assert_eq!(
            compute_ramsey_value(
                Pattern::star(2).unwrap(),
                Pattern::matching(2).unwrap(),
                6,
                vec![]
            ),
            RamseyValue::Exact(4)
        );
    }

    #[test]
    fn unresolved_when_max_n_too_small() {
        let k3 = Pattern::clique(3).unwrap();
        assert_eq!(
            compute_ramsey_value(k3, k3, 5, vec![]),
            RamseyValue::Unresolved { deepest_nonzero: 5 }
        );
    }

    #[test]
    fn star_caps_derived_only_from_stars() {
        let rules = vec![
            forbid(Red, Pattern::star(4).unwrap()),
            forbid(Blue, Pattern::fan(3).unwrap()),
        ];
        assert_eq!(
            derive_star_degree_cap(&rules),
            vec![PruneRule::DegreeCap {
                color: Red,
                cap: 3
            }]
        );
        assert!(derive_star_degree_cap(&[forbid(Blue, Pattern::fan(3).unwrap())]).is_empty());
    }

    #[test]
    fn degree_caps_do_not_change_counts_for_star_specs() {
        let forbids = vec![
            forbid(Red, Pattern::star(3).unwrap()),
            forbid(Blue, Pattern::fan(3).unwrap()),
        ];
        let plain = exhaustive_search(&SearchSpec::new(9, forbids.clone()));
        let capped = exhaustive_search(
            &SearchSpec::new(9, forbids.clone())
                .with_prunes(derive_star_degree_cap(&forbids)),
        );
        assert!(plain.exhausted && capped.exhausted);
        for k in 1..=9 {
            assert_eq!(plain.count_at(k), capped.count_at(k), "level {k}");
        }
        assert_eq!(plain.count_at(9), Some(0), "R(star3, fan3) = 9");
    }

    #[test]
    fn extension_matches_full_enumeration_single_forbid() {
        use std::collections::HashSet;
        // forbid a red triangle; compare canonical classes at n = 4 with a
        // full 2^C(4,2) sweep
        let k3 = Pattern::clique(3).unwrap();
        let spec = SearchSpec::new(4, vec![forbid(Red, k3)]);
        let mut survivors = vec![Coloring::new_complete(1, Blue).unwrap()];
        for _ in 1..4 {
            survivors = extend_level(&survivors, &spec).unwrap();
        }
        let engine: HashSet<Vec<u8>> = survivors.iter().map(canonical_form).collect();
        let mut brute = HashSet::new();
        for bits in 0u64..1 << 6 {
            let mut c = Coloring::new_complete(4, Blue).unwrap();
            let mut e = 0;
            for u in 0..4 {
                for v in u + 1..4 {
                    if bits >> e & 1 == 1 {
                        c.assign_color(u, v, Red).unwrap();
                    }
                    e += 1;
                }
            }
            if !contains_mono(&c, Red, &k3).is_found() {
                brute.insert(canonical_form(&c));
            }
        }
        assert_eq!(engine, brute);
    }

    #[test]
    fn gadget_rule_applies_only_at_its_target() {
        let k3 = Pattern::clique(3).unwrap();
        let gadget = PruneRule::GadgetAtTarget {
            color: Red,
            pattern: Pattern::matching(1).unwrap(),
            target_n: 4,
        };
        // target 4: forbidding any red edge as a "gadget" collapses the
        // count to the single all-blue class per level
        let spec4 = SearchSpec::new(4, vec![forbid(Red, k3)]).with_prunes(vec![gadget]);
        let r4 = exhaustive_search(&spec4);
        assert_eq!(r4.count_at(3), Some(1));
        // target 5: same prune list, but the rule is inert
        let spec5 = SearchSpec::new(5, vec![forbid(Red, k3)]).with_prunes(vec![gadget]);
        let r5 = exhaustive_search(&spec5);
        assert!(r5.count_at(3).unwrap() > 1);
    }

    #[test]
    fn budget_zero_means_unlimited() {
        let spec = SearchSpec::new(
            5,
            vec![forbid(Red, Pattern::clique(3).unwrap())],
        )
        .with_budget(Duration::ZERO);
        assert!(spec.time_budget.is_none());
        assert!(exhaustive_search(&spec).exhausted);
    }

    #[test]
    fn tiny_budget_reports_unexhausted() {
        let k3 = Pattern::clique(3).unwrap();
        let spec = SearchSpec::new(
            18,
            vec![forbid(Red, k3), forbid(Blue, Pattern::clique(4).unwrap())],
        )
        .with_budget(Duration::from_millis(1));
        let result = exhaustive_search(&spec);
        assert!(!result.exhausted);
    }

    #[test]
    fn swap_dedup_preserves_vanishing_level() {
        let k3 = Pattern::clique(3).unwrap();
        let mut spec = SearchSpec::new(7, vec![forbid(Red, k3), forbid(Blue, k3)]);
        spec.dedupe_color_swap = true;
        let swapped = exhaustive_search(&spec);
        spec.dedupe_color_swap = false;
        let plain = exhaustive_search(&spec);
        assert_eq!(swapped.count_at(6), Some(0));
        assert_eq!(plain.count_at(6), Some(0));
        for k in 1..=7 {
            assert!(swapped.count_at(k).unwrap() <= plain.count_at(k).unwrap());
        }
        // level 5: the unique K5 witness (pentagon) is self-complementary,
        // so the swap quotient keeps it
        assert_eq!(swapped.count_at(5), Some(1));
        assert_eq!(plain.count_at(5), Some(1));
    }

    #[test]
    fn forbid_rule_round_trip() {
        let r: ForbidRule = "red:fan:3".parse().unwrap();
        assert_eq!(r.color, Red);
        assert_eq!(r.pattern, Pattern::fan(3).unwrap());
        assert_eq!(r.to_string(), "red:fan:3");
        assert!("mauve:fan:3".parse::<ForbidRule>().is_err());
        assert!("red".parse::<ForbidRule>().is_err());
    }

    #[test]
    fn prune_rule_parsing() {
        assert_eq!(
            PruneRule::parse_degree_cap("red:8").unwrap(),
            PruneRule::DegreeCap {
                color: Red,
                cap: 8
            }
        );
        assert_eq!(
            PruneRule::parse_gadget("blue:join:4,0,2@14").unwrap(),
            PruneRule::GadgetAtTarget {
                color: Blue,
                pattern: Pattern::join(4, 0, 2).unwrap(),
                target_n: 14
            }
        );
        assert!(PruneRule::parse_degree_cap("red").is_err());
        assert!(PruneRule::parse_gadget("red:join:4,0,2").is_err());
        let g = PruneRule::parse_gadget("blue:join:4,0,2@14").unwrap();
        assert_eq!(g.to_string(), "gadget:blue:join:4,0,2@14");
    }
}
