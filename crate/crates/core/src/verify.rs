//! Self-check battery. Sweeps every semigroup up to a genus bound, takes
//! every ideal between the conductor ideal and H (or a seeded random sample
//! when there are too many), and validates the algebraic laws the library
//! is built on. A clean run is the strongest evidence the arithmetic is
//! right; any violation is reported with the offending semigroup and ideal.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{
    check_duality_with, closed_masks, ideal_of_mask, required_masks, trace_ideals, Limits,
};
use crate::error::Error;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_SEED: u64 = 1729;

/// Ideals between the conductor ideal and H are enumerated exhaustively
/// up to this many small elements, sampled beyond it.
const EXHAUSTIVE_SMALL: usize = 12;

const EXAMPLE_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: u64,
    pub failed: u64,
    pub examples: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        CheckReport {
            name,
            cases: 0,
            failed: 0,
            examples: Vec::new(),
        }
    }

    fn hit(&mut self, ok: bool, ctx: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < EXAMPLE_CAP {
                self.examples.push(ctx());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub genus_max: u32,
    pub random_per_semigroup: u32,
    pub seed: u64,
    pub semigroups: u64,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn total_failed(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

fn pool<'h>(
    h: &'h NumericalSemigroup,
    random: u32,
    rng: &mut ChaCha8Rng,
) -> Vec<RelativeIdeal<'h>> {
    let small = h.small_elements();
    let n = small.len();
    debug_assert!(n < 64);
    let required = required_masks(h, small);
    if n <= EXHAUSTIVE_SMALL {
        let mut masks = Vec::new();
        closed_masks(&required, n, 0, &mut masks);
        masks
            .into_iter()
            .map(|m| ideal_of_mask(h, small, m))
            .collect()
    } else {
        (0..random)
            .map(|_| {
                let mut mask = rng.random::<u64>() & ((1u64 << n) - 1);
                // close upward: keep adding the elements the mask forces
                loop {
                    let mut forced = 0u64;
                    let mut bits = mask;
                    while bits != 0 {
                        forced |= required[bits.trailing_zeros() as usize];
                        bits &= bits - 1;
                    }
                    if forced & !mask == 0 {
                        break;
                    }
                    mask |= forced;
                }
                ideal_of_mask(h, small, mask)
            })
            .collect()
    }
}

fn at(h: &NumericalSemigroup, e: &RelativeIdeal<'_>) -> String {
    format!("H = {:?}, E = {:?}", h.generators(), e.min_gens())
}

fn at2(h: &NumericalSemigroup, e: &RelativeIdeal<'_>, f: &RelativeIdeal<'_>) -> String {
    format!(
        "H = {:?}, E = {:?}, F = {:?}",
        h.generators(),
        e.min_gens(),
        f.min_gens()
    )
}

pub fn run_battery(
    genus_max: u32,
    random_per_semigroup: u32,
    seed: u64,
) -> Result<VerifyReport, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut in_trace = CheckReport::new("ideal lies inside its trace");
    let mut trace_idem = CheckReport::new("trace of a trace is itself");
    let mut trace_conductor = CheckReport::new("trace ideals contain the conductor ideal");
    let mut trace_sums = CheckReport::new("sums of trace ideals are trace ideals");
    let mut dual_reflexive = CheckReport::new("duals are reflexive");
    let mut hull = CheckReport::new("reflexive hull is reflexive and contains the ideal");
    let mut closure = CheckReport::new("integral closure is closed and contains the ideal");
    let mut closed_trace = CheckReport::new("integrally closed ideals over the conductor are trace");
    let mut shifted = CheckReport::new("shifted trace ideals are never trace");
    let mut maximal = CheckReport::new("maximal ideal is trace exactly when multiplicity exceeds one");
    let mut subtrace_max = CheckReport::new("subtrace is the largest trace ideal inside");
    let mut count_bound = CheckReport::new("at least n plus one trace ideals");
    // the dual map on trace ideals is injective only over symmetric H: a
    // non-reflexive trace ideal shares its dual with its reflexive hull
    let mut duality = CheckReport::new("duals of trace ideals are oversemigroups");
    let mut ends = CheckReport::new("end rings are stable oversemigroups");
    let mut canonical = CheckReport::new("canonical ideal trace detects symmetry");
    let mut star_conductor = CheckReport::new("star with the conductor ideal collapses to it");
    let mut sym_reflexive = CheckReport::new("every ideal over a symmetric semigroup is reflexive");
    let mut star_ambient = CheckReport::new("star with the ambient ideal fixes reflexive ideals");
    let mut star_comm = CheckReport::new("star is commutative on trace ideals");
    let mut star_assoc = CheckReport::new("star is associative on trace ideals");
    // equality can fail here: over [4, 6, 7] the star of [4, 6] + [6, 7, 8]
    // with [4, 7] strictly contains the sum of the two stars. Only the
    // inclusion is a law.
    let mut star_dist = CheckReport::new("sums of stars lie inside the star of the sum");
    let mut star_idem = CheckReport::new("star squares trace ideals to themselves");
    let mut star_subtrace = CheckReport::new("star is the subtrace of the intersection on trace ideals");

    let mut semigroups = 0u64;
    for h in crate::enumerate::semigroups_up_to_genus(genus_max)? {
        semigroups += 1;
        let hi = h.as_ideal();
        let c_ideal = h.conductor_ideal();
        let traces = trace_ideals(&h)?;
        let ideals = pool(&h, random_per_semigroup, &mut rng);
        let symmetric = h.is_symmetric();

        for e in &ideals {
            let tr = e.trace();
            in_trace.hit(tr.contains_ideal(e), || at(&h, e));
            trace_idem.hit(tr.is_trace(), || at(&h, e));

            let d = e.dual();
            dual_reflexive.hit(d.is_reflexive(), || at(&h, e));
            let dd = e.reflexive_hull();
            hull.hit(dd.is_reflexive() && dd.contains_ideal(e), || at(&h, e));

            let cl = e.integral_closure().expect("pool ideals lie inside H");
            closure.hit(
                cl.contains_ideal(e) && cl.is_integrally_closed().expect("closure stays inside H"),
                || at(&h, e),
            );
            if &cl == e {
                closed_trace.hit(e.is_trace(), || at(&h, e));
            }

            let s = e.subtrace().expect("pool ideals contain the conductor ideal");
            let maximality = e.contains_ideal(&s)
                && s.is_trace()
                && traces
                    .iter()
                    .all(|t| !e.contains_ideal(t) || s.contains_ideal(t));
            subtrace_max.hit(maximality, || at(&h, e));

            let b = e.end_semigroup();
            let stable = b.contains_ideal(&hi)
                && b.product(&b).expect("same ambient") == b
                && b.end_semigroup() == b;
            ends.hit(stable, || at(&h, e));

            star_conductor.hit(
                e.star(&c_ideal).expect("pool ideals are star operands") == c_ideal,
                || at(&h, e),
            );

            if symmetric {
                sym_reflexive.hit(e.is_reflexive(), || at(&h, e));
                star_ambient.hit(
                    e.star(&hi).expect("pool ideals are star operands") == *e,
                    || at(&h, e),
                );
            }
        }

        for t in &traces {
            trace_conductor.hit(t.contains_ideal(&c_ideal), || at(&h, t));
            shifted.hit(!t.shift(h.multiplicity()).is_trace(), || at(&h, t));
        }
        for (i, a) in traces.iter().enumerate() {
            for b in &traces[i..] {
                trace_sums.hit(a.sum(b).expect("same ambient").is_trace(), || at2(&h, a, b));
            }
        }

        count_bound.hit(traces.len() > h.small_elements().len(), || {
            format!("H = {:?}", h.generators())
        });

        let m_ideal = RelativeIdeal::from_member(&h, h.multiplicity(), |x| x > 0 && h.contains(x));
        maximal.hit(m_ideal.is_trace() == (h.multiplicity() >= 2), || {
            format!("H = {:?}", h.generators())
        });

        let k = h.canonical_ideal();
        let tk = k.trace();
        let shift_of_k = k.shift(tk.min_element() - k.min_element());
        canonical.hit((tk == shift_of_k) == symmetric, || {
            format!("H = {:?}", h.generators())
        });

        let r = check_duality_with(&h, Limits::default())?;
        let pairing_ok =
            r.pairing.iter().all(Option::is_some) && (!symmetric || r.bijective);
        duality.hit(pairing_ok, || format!("H = {:?}", h.generators()));

        if symmetric {
            let tcap = &traces[..traces.len().min(12)];
            fn star<'h>(a: &RelativeIdeal<'h>, b: &RelativeIdeal<'h>) -> RelativeIdeal<'h> {
                a.star(b).expect("trace ideals are star operands")
            }
            for a in tcap {
                star_idem.hit(star(a, a) == *a, || at(&h, a));
            }
            for (i, a) in tcap.iter().enumerate() {
                for (j, b) in tcap.iter().enumerate().skip(i) {
                    let ab = star(a, b);
                    star_comm.hit(ab == star(b, a), || at2(&h, a, b));
                    let meet = a.intersect(b).expect("same ambient");
                    star_subtrace.hit(
                        ab == meet.subtrace().expect("meets of trace ideals contain the conductor"),
                        || at2(&h, a, b),
                    );
                    for g in &tcap[j..] {
                        star_assoc.hit(star(&ab, g) == star(a, &star(b, g)), || at2(&h, a, b));
                    }
                    for g in tcap {
                        let lhs = star(&a.sum(b).expect("same ambient"), g);
                        let rhs = star(a, g).sum(&star(b, g)).expect("same ambient");
                        star_dist.hit(lhs.contains_ideal(&rhs), || {
                            format!(
                                "H = {:?}, E = {:?}, F = {:?}, G = {:?}",
                                h.generators(),
                                a.min_gens(),
                                b.min_gens(),
                                g.min_gens()
                            )
                        });
                    }
                }
            }
        }
    }

    Ok(VerifyReport {
        genus_max,
        random_per_semigroup,
        seed,
        semigroups,
        checks: vec![
            in_trace,
            trace_idem,
            trace_conductor,
            trace_sums,
            dual_reflexive,
            hull,
            closure,
            closed_trace,
            shifted,
            maximal,
            subtrace_max,
            count_bound,
            duality,
            ends,
            canonical,
            star_conductor,
            sym_reflexive,
            star_ambient,
            star_comm,
            star_assoc,
            star_dist,
            star_idem,
            star_subtrace,
        ],
    })
}
