//! Exhaustive finite searches: all monomial trace ideals between the
//! conductor ideal and H, all oversemigroups, the duality pairing between
//! the two, the genus tree of numerical semigroups, and the finiteness
//! classification.

use std::fmt;

use crate::error::Error;
use crate::ideal::{canonical_gens, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// Search-space guards for the enumeration entry points. Raiseable, but
/// every cap is clamped at the hard input ceiling of 64.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_small: usize,
    pub max_gaps: usize,
    pub max_tree_genus: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_small: 24,
            max_gaps: 24,
            max_tree_genus: 20,
        }
    }
}

const HARD_CAP: usize = 64;

/// All E with C ⊆ E ⊆ H, sorted by generator list.
pub fn intermediate_ideals(h: &NumericalSemigroup) -> Result<Vec<RelativeIdeal<'_>>, Error> {
    let small = h.small_elements();
    let n = small.len();
    let cap = Limits::default().max_small.min(HARD_CAP);
    if n > cap {
        return Err(Error::SearchSpaceExceeded {
            what: "small element count n(H)",
            size: n as u64,
            cap: cap as u64,
        });
    }
    let required = required_masks(h, small);
    let mut masks = Vec::new();
    closed_masks(&required, n, 0, &mut masks);
    let mut out: Vec<RelativeIdeal<'_>> = masks
        .into_iter()
        .map(|mask| ideal_of_mask(h, small, mask))
        .collect();
    out.sort_by(|a, b| a.min_gens().cmp(b.min_gens()));
    Ok(out)
}

/// All E with C ⊆ E ⊆ H and tr(E) = E, sorted by generator list.
pub fn trace_ideals(h: &NumericalSemigroup) -> Result<Vec<RelativeIdeal<'_>>, Error> {
    trace_ideals_with(h, Limits::default())
}

pub fn trace_ideals_with(
    h: &NumericalSemigroup,
    limits: Limits,
) -> Result<Vec<RelativeIdeal<'_>>, Error> {
    let small = h.small_elements();
    let n = small.len();
    let cap = limits.max_small.min(HARD_CAP);
    if n > cap {
        return Err(Error::SearchSpaceExceeded {
            what: "small element count n(H)",
            size: n as u64,
            cap: cap as u64,
        });
    }
    let required = required_masks(h, small);
    let mut masks = Vec::new();
    closed_masks(&required, n, 0, &mut masks);
    let mut out: Vec<RelativeIdeal<'_>> = masks
        .into_iter()
        .map(|mask| ideal_of_mask(h, small, mask))
        .filter(|e| e.is_trace())
        .collect();
    out.sort_by(|a, b| a.min_gens().cmp(b.min_gens()));
    Ok(out)
}

/// required[i]: small elements that must accompany small[i] in any ideal.
pub(crate) fn required_masks(h: &NumericalSemigroup, small: &[i64]) -> Vec<u64> {
    let c = h.conductor();
    small
        .iter()
        .map(|&s| {
            let mut req = 0u64;
            for &t in &small[1..] {
                let v = s + t;
                if v < c {
                    req |= 1 << small.binary_search(&v).expect("H is closed");
                }
            }
            req
        })
        .collect()
}

/// Depth first over the small elements in descending order; an element may
/// be kept only once everything it forces is already kept.
pub(crate) fn closed_masks(required: &[u64], p: usize, mask: u64, out: &mut Vec<u64>) {
    if p == 0 {
        out.push(mask);
        return;
    }
    let i = p - 1;
    closed_masks(required, i, mask, out);
    if required[i] & !mask == 0 {
        closed_masks(required, i, mask | (1 << i), out);
    }
}

pub(crate) fn ideal_of_mask<'h>(
    h: &'h NumericalSemigroup,
    small: &[i64],
    mask: u64,
) -> RelativeIdeal<'h> {
    let c = h.conductor();
    let lo = if mask == 0 {
        c
    } else {
        small[mask.trailing_zeros() as usize]
    };
    RelativeIdeal::from_member(h, lo, |x| {
        x >= c
            || (x >= 0
                && small
                    .binary_search(&x)
                    .map(|i| mask & (1 << i) != 0)
                    .unwrap_or(false))
    })
}

/// All numerical semigroups T with H ⊆ T ⊆ ℤ≥0, sorted by generator list.
pub fn oversemigroups(h: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>, Error> {
    oversemigroups_with(h, Limits::default())
}

pub fn oversemigroups_with(
    h: &NumericalSemigroup,
    limits: Limits,
) -> Result<Vec<NumericalSemigroup>, Error> {
    let gaps = h.gaps();
    let g = gaps.len();
    let cap = limits.max_gaps.min(HARD_CAP);
    if g > cap {
        return Err(Error::SearchSpaceExceeded {
            what: "genus g(H)",
            size: g as u64,
            cap: cap as u64,
        });
    }
    let mut masks = Vec::new();
    gap_masks(h, gaps, g, 0, &mut masks);
    let mut out: Vec<NumericalSemigroup> = masks
        .into_iter()
        .map(|mask| {
            let member =
                |x: i64| x >= h.conductor() || h.contains(x) || gap_chosen(gaps, mask, x);
            semigroup_from_member(h.conductor(), member)
        })
        .collect();
    out.sort_by(|a, b| a.generators().cmp(b.generators()));
    Ok(out)
}

fn gap_chosen(gaps: &[i64], mask: u64, x: i64) -> bool {
    x >= 0
        && gaps
            .binary_search(&x)
            .map(|i| mask & (1 << i) != 0)
            .unwrap_or(false)
}

/// Depth first over the gaps in descending order. Adding a gap v is allowed
/// only if every sum v + t with t a nonzero member so far stays a member;
/// sums land above v, where membership is already decided.
fn gap_masks(h: &NumericalSemigroup, gaps: &[i64], p: usize, mask: u64, out: &mut Vec<u64>) {
    if p == 0 {
        out.push(mask);
        return;
    }
    let i = p - 1;
    gap_masks(h, gaps, i, mask, out);
    let v = gaps[i];
    let c = h.conductor();
    let member = |x: i64| x >= c || h.contains(x) || gap_chosen(gaps, mask, x) || x == v;
    let closed = (1..c - v).all(|t| !member(t) || member(v + t));
    if closed {
        gap_masks(h, gaps, i, mask | (1 << i), out);
    }
}

/// Reads a numerical semigroup off a membership predicate that is total,
/// exact, and all-true from `c_bound` on.
fn semigroup_from_member(c_bound: i64, member: impl Fn(i64) -> bool) -> NumericalSemigroup {
    let m = (1..=c_bound.max(1))
        .find(|&x| member(x))
        .unwrap_or(c_bound.max(1));
    let mut gens = Vec::new();
    for x in 1..=c_bound + m {
        if member(x) && !(1..x).any(|a| member(a) && member(x - a)) {
            gens.push(x);
        }
    }
    NumericalSemigroup::from_generators(&gens).expect("a cofinite closed set is a semigroup")
}

/// The trace-ideal enumeration, the oversemigroup enumeration, and the map
/// E ↦ dual(E) between them.
#[derive(Debug, Clone)]
pub struct EnumerationResult<'h> {
    pub trace_ideals: Vec<RelativeIdeal<'h>>,
    pub oversemigroups: Vec<NumericalSemigroup>,
    /// For each trace ideal, the index of the oversemigroup its dual equals,
    /// if the dual is one.
    pub pairing: Vec<Option<usize>>,
    pub all_integrally_closed: bool,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

pub fn check_duality(h: &NumericalSemigroup) -> Result<EnumerationResult<'_>, Error> {
    check_duality_with(h, Limits::default())
}

pub fn check_duality_with(
    h: &NumericalSemigroup,
    limits: Limits,
) -> Result<EnumerationResult<'_>, Error> {
    let trace_ideals = trace_ideals_with(h, limits)?;
    let oversemigroups = oversemigroups_with(h, limits)?;
    let over_forms: Vec<Vec<i64>> = oversemigroups
        .iter()
        .map(|t| canonical_gens(h, 0, |x| t.contains(x)))
        .collect();
    let dual_forms: Vec<Vec<i64>> = trace_ideals
        .iter()
        .map(|e| e.dual().min_gens().to_vec())
        .collect();
    let pairing: Vec<Option<usize>> = dual_forms
        .iter()
        .map(|d| over_forms.iter().position(|f| f == d))
        .collect();
    let injective = dual_forms
        .iter()
        .enumerate()
        .all(|(i, d)| dual_forms[..i].iter().all(|e| e != d));
    let surjective = (0..oversemigroups.len()).all(|j| pairing.contains(&Some(j)));
    let bijective = injective && surjective && pairing.iter().all(Option::is_some);
    if h.is_symmetric() {
        assert!(
            bijective,
            "duality must pair trace ideals with oversemigroups bijectively over a symmetric semigroup"
        );
    }
    let all_integrally_closed = trace_ideals
        .iter()
        .all(|e| e.is_integrally_closed().expect("trace ideals lie inside H"));
    Ok(EnumerationResult {
        trace_ideals,
        oversemigroups,
        pairing,
        all_integrally_closed,
        injective,
        surjective,
        bijective,
    })
}

/// The finitely-many-overrings families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    One,
    TwoOdd(i64),
    ThreeFour,
    ThreeFourFive,
    ThreeFive,
    ThreeFiveSeven,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::One => "<1>",
            Family::TwoOdd(_) => "<2,a>",
            Family::ThreeFour => "<3,4>",
            Family::ThreeFourFive => "<3,4,5>",
            Family::ThreeFive => "<3,5>",
            Family::ThreeFiveSeven => "<3,5,7>",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GorensteinSmall {
    Small,
    NotSmall,
    NotApplicable,
}

impl GorensteinSmall {
    pub fn label(&self) -> &'static str {
        match self {
            GorensteinSmall::Small => "small",
            GorensteinSmall::NotSmall => "not_small",
            GorensteinSmall::NotApplicable => "not_applicable",
        }
    }
}

pub const HYPOTHESIS_NOTE: &str = "assumes infinite residue field";

/// Verdict of the finiteness classification. The overring statements assume
/// an infinite residue field, recorded in `note`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub finite_overrings: bool,
    pub gorenstein_small: GorensteinSmall,
    pub matched_family: Option<Family>,
    pub note: &'static str,
}

/// Matches the minimalized generators against the finite-overring families.
/// The smallness verdict applies to symmetric semigroups only.
pub fn classify(h: &NumericalSemigroup) -> ClassificationVerdict {
    let family = match h.generators() {
        [1] => Some(Family::One),
        // a two generator semigroup starting at 2 has odd second generator
        [2, a] => Some(Family::TwoOdd(*a)),
        [3, 4] => Some(Family::ThreeFour),
        [3, 4, 5] => Some(Family::ThreeFourFive),
        [3, 5] => Some(Family::ThreeFive),
        [3, 5, 7] => Some(Family::ThreeFiveSeven),
        _ => None,
    };
    let gorenstein_small = if !h.is_symmetric() {
        GorensteinSmall::NotApplicable
    } else {
        match family {
            Some(Family::One | Family::TwoOdd(_) | Family::ThreeFour | Family::ThreeFive) => {
                GorensteinSmall::Small
            }
            _ => GorensteinSmall::NotSmall,
        }
    };
    ClassificationVerdict {
        finite_overrings: family.is_some(),
        gorenstein_small,
        matched_family: family,
        note: HYPOTHESIS_NOTE,
    }
}

/// Every numerical semigroup of genus at most `g_max`, each exactly once,
/// in depth-first order along the tree that removes one minimal generator
/// above the Frobenius number per step.
pub fn semigroups_up_to_genus(g_max: u32) -> Result<SemigroupStream, Error> {
    semigroups_up_to_genus_with(g_max, Limits::default())
}

pub fn semigroups_up_to_genus_with(g_max: u32, limits: Limits) -> Result<SemigroupStream, Error> {
    let cap = limits.max_tree_genus.min(HARD_CAP as u32);
    if g_max > cap {
        return Err(Error::SearchSpaceExceeded {
            what: "tree genus",
            size: g_max as u64,
            cap: cap as u64,
        });
    }
    let root = NumericalSemigroup::from_generators(&[1]).expect("the whole line is a semigroup");
    Ok(SemigroupStream {
        stack: vec![root],
        g_max,
    })
}

pub struct SemigroupStream {
    stack: Vec<NumericalSemigroup>,
    g_max: u32,
}

impl Iterator for SemigroupStream {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let h = self.stack.pop()?;
        if (h.genus() as u32) < self.g_max {
            let f = h.frobenius();
            // push in reverse so children pop in ascending generator order
            for &g in h.generators().iter().rev() {
                if g > f {
                    self.stack.push(remove_generator(&h, g));
                }
            }
        }
        Some(h)
    }
}

/// H with one minimal generator above the Frobenius number removed; the
/// result is again a numerical semigroup, with genus one higher.
fn remove_generator(h: &NumericalSemigroup, g: i64) -> NumericalSemigroup {
    let member = |x: i64| x != g && h.contains(x);
    semigroup_from_member(h.conductor().max(g + 1), member)
}
