//! Slow reference implementation used to cross-check the main ideal algebra.
//!
//! Everything here works on explicit membership bit windows and on a
//! semigroup sieve of its own; no set arithmetic is shared with the
//! [`crate::ideal`] module. Operations are direct scans of the defining
//! condition, minimal generators are extracted by testing the definition
//! element by element, and the trace-ideal enumeration walks every subset of
//! the small elements with a bitmask. Simple and exhaustive on purpose.

use crate::error::Error;

/// Subset enumeration here is a plain 2^n loop, so the cap is tight.
pub const MAX_ORACLE_SMALL: usize = 16;

pub struct Oracle {
    table: Vec<bool>,
    conductor: i64,
    multiplicity: i64,
}

/// Membership bits for a relative ideal on `[lo, lo + bits.len())`.
/// `lo` is the least element and membership is all-true from the end of the
/// window on; both are construction invariants.
#[derive(Clone, Debug)]
pub struct WindowSet {
    lo: i64,
    bits: Vec<bool>,
}

impl WindowSet {
    pub fn member(&self, x: i64) -> bool {
        if x < self.lo {
            false
        } else if x - self.lo >= self.bits.len() as i64 {
            true
        } else {
            self.bits[(x - self.lo) as usize]
        }
    }

    pub fn least(&self) -> i64 {
        self.lo
    }
}

impl Oracle {
    pub fn new(gens: &[i64]) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in gens {
            if g < 1 {
                return Err(Error::NonPositiveGenerator(g));
            }
            if g > crate::semigroup::MAX_GENERATOR {
                return Err(Error::GeneratorTooLarge(g));
            }
        }
        let mut d = 0;
        for &g in gens {
            let (mut a, mut b) = (d, g);
            while b != 0 {
                let r = a % b;
                a = b;
                b = r;
            }
            d = a;
        }
        if d != 1 {
            return Err(Error::NotCoprime { gcd: d });
        }

        let limit = crate::semigroup::MAX_SIEVE as usize;
        let multiplicity = *gens.iter().min().expect("nonempty");
        let mut size = ((gens.iter().max().expect("nonempty") + 4 * multiplicity + 4) as usize).min(limit);
        loop {
            // forward propagation from each reachable element
            let mut table = vec![false; size];
            table[0] = true;
            for x in 0..size {
                if table[x] {
                    for &g in gens {
                        if let Some(y) = (x as i64).checked_add(g) {
                            if (y as usize) < size {
                                table[y as usize] = true;
                            }
                        }
                    }
                }
            }
            let mut best = None;
            'scan: for start in 0..size {
                for k in 0..multiplicity as usize {
                    if start + k >= size || !table[start + k] {
                        continue 'scan;
                    }
                }
                best = Some(start as i64);
                break;
            }
            if let Some(conductor) = best {
                return Ok(Oracle {
                    table,
                    conductor,
                    multiplicity,
                });
            }
            if size == limit {
                return Err(Error::ConductorTooLarge);
            }
            size = (size * 2).min(limit);
        }
    }

    pub fn semigroup_member(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x >= self.conductor {
            true
        } else {
            self.table[x as usize]
        }
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    pub fn small_elements(&self) -> Vec<i64> {
        (0..self.conductor).filter(|&x| self.table[x as usize]).collect()
    }

    /// Materializes the set described by `pred` into a window. `pred` must
    /// describe a relative ideal whose least element is within conductor
    /// range of `lo_bound`.
    fn materialize(&self, lo_bound: i64, pred: impl Fn(i64) -> bool) -> WindowSet {
        let mut first = lo_bound;
        while !pred(first) {
            first += 1;
            assert!(
                first <= lo_bound + self.conductor,
                "window lower bound missed the set"
            );
        }
        let width = (self.conductor + self.multiplicity + 2) as usize;
        let bits = (0..width).map(|i| pred(first + i as i64)).collect();
        WindowSet { lo: first, bits }
    }

    /// The ideal generated by `gens`.
    pub fn span(&self, gens: &[i64]) -> WindowSet {
        assert!(!gens.is_empty());
        let lo = *gens.iter().min().expect("nonempty");
        self.materialize(lo, |x| gens.iter().any(|&g| self.semigroup_member(x - g)))
    }

    /// The semigroup itself as an ideal.
    pub fn ambient(&self) -> WindowSet {
        self.span(&[0])
    }

    pub fn conductor_window(&self) -> WindowSet {
        let c = self.conductor;
        self.materialize(c, |x| x >= c)
    }

    pub fn canonical_window(&self) -> WindowSet {
        let f = self.conductor - 1;
        self.materialize(0, |x| !self.semigroup_member(f - x))
    }

    pub fn sum(&self, a: &WindowSet, b: &WindowSet) -> WindowSet {
        self.materialize(a.lo.min(b.lo), |x| a.member(x) || b.member(x))
    }

    pub fn intersect(&self, a: &WindowSet, b: &WindowSet) -> WindowSet {
        self.materialize(a.lo.max(b.lo), |x| a.member(x) && b.member(x))
    }

    pub fn product(&self, a: &WindowSet, b: &WindowSet) -> WindowSet {
        self.materialize(a.lo + b.lo, |x| {
            (a.lo..=x - b.lo).any(|y| a.member(y) && b.member(x - y))
        })
    }

    pub fn colon(&self, a: &WindowSet, b: &WindowSet) -> WindowSet {
        let c = self.conductor;
        let (a, b) = (a.clone(), b.clone());
        self.materialize(a.lo - b.lo, move |z| {
            // past a.lo + c everything is in a, so only finitely many b matter
            (b.lo..a.lo + c - z).all(|y| !b.member(y) || a.member(z + y))
        })
    }

    pub fn shift(&self, a: &WindowSet, k: i64) -> WindowSet {
        WindowSet {
            lo: a.lo + k,
            bits: a.bits.clone(),
        }
    }

    pub fn dual(&self, a: &WindowSet) -> WindowSet {
        self.colon(&self.ambient(), a)
    }

    pub fn trace(&self, a: &WindowSet) -> WindowSet {
        self.product(a, &self.dual(a))
    }

    pub fn is_trace(&self, a: &WindowSet) -> bool {
        self.equal(&self.trace(a), a)
    }

    pub fn reflexive_hull(&self, a: &WindowSet) -> WindowSet {
        self.dual(&self.dual(a))
    }

    pub fn end_semigroup(&self, a: &WindowSet) -> WindowSet {
        self.colon(a, a)
    }

    pub fn star(&self, a: &WindowSet, b: &WindowSet) -> WindowSet {
        self.dual(&self.product(&self.dual(a), &self.dual(b)))
    }

    pub fn integral_closure(&self, a: &WindowSet) -> WindowSet {
        let lo = a.lo;
        self.materialize(lo, |x| x >= lo && self.semigroup_member(x))
    }

    /// Two ideal windows are equal iff they have the same least element and
    /// agree up to one conductor past it; beyond that both are all-true.
    pub fn equal(&self, a: &WindowSet, b: &WindowSet) -> bool {
        a.lo == b.lo && (a.lo..=a.lo + self.conductor).all(|x| a.member(x) == b.member(x))
    }

    pub fn contains(&self, outer: &WindowSet, inner: &WindowSet) -> bool {
        (inner.lo..inner.lo + inner.bits.len() as i64)
            .all(|x| !inner.member(x) || outer.member(x))
    }

    /// Minimal generators by direct definition: `x` is one iff it is in the
    /// set and `x - h` is not, for every nonzero semigroup element `h`.
    pub fn minimal_generators(&self, a: &WindowSet) -> Vec<i64> {
        (a.lo..a.lo + self.conductor + self.multiplicity)
            .filter(|&x| {
                a.member(x)
                    && (1..=x - a.lo).all(|h| !self.semigroup_member(h) || !a.member(x - h))
            })
            .collect()
    }

    /// Every trace ideal between the conductor ideal and the semigroup,
    /// found by testing all subsets of the small elements.
    pub fn trace_subsets(&self) -> Result<Vec<WindowSet>, Error> {
        let small = self.small_elements();
        let n = small.len();
        if n > MAX_ORACLE_SMALL {
            return Err(Error::SearchSpaceExceeded {
                what: "small elements (oracle subset scan)",
                size: n as u64,
                cap: MAX_ORACLE_SMALL as u64,
            });
        }
        let c = self.conductor;
        let mut found = Vec::new();
        for mask in 0u32..1 << n {
            let has = |x: i64| {
                x >= c || (0..n).any(|i| mask >> i & 1 == 1 && small[i] == x)
            };
            let closed = (0..n).all(|i| {
                mask >> i & 1 == 0
                    || small[1..].iter().all(|&t| has(small[i] + t))
            });
            if !closed {
                continue;
            }
            let lo = (0..n)
                .find(|&i| mask >> i & 1 == 1)
                .map(|i| small[i])
                .unwrap_or(c);
            let w = self.materialize(lo, has);
            if self.is_trace(&w) {
                found.push(w);
            }
        }
        let mut out: Vec<(Vec<i64>, WindowSet)> = found
            .into_iter()
            .map(|w| (self.minimal_generators(&w), w))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out.into_iter().map(|(_, w)| w).collect())
    }

    /// Largest trace ideal inside `a`: the union of every enumerated trace
    /// ideal contained in it.
    pub fn subtrace(&self, a: &WindowSet) -> Result<WindowSet, Error> {
        let mut acc = self.conductor_window();
        for t in self.trace_subsets()? {
            if self.contains(a, &t) {
                acc = self.sum(&acc, &t);
            }
        }
        assert!(self.is_trace(&acc), "union of trace ideals must be trace");
        Ok(acc)
    }

    /// Every oversemigroup, as sorted minimal generator lists, found by
    /// testing all subsets of the gaps for additive closure.
    pub fn oversemigroup_subsets(&self) -> Result<Vec<Vec<i64>>, Error> {
        let c = self.conductor;
        let gaps: Vec<i64> = (0..c).filter(|&x| !self.table[x as usize]).collect();
        let g = gaps.len();
        if g > MAX_ORACLE_SMALL {
            return Err(Error::SearchSpaceExceeded {
                what: "gaps (oracle subset scan)",
                size: g as u64,
                cap: MAX_ORACLE_SMALL as u64,
            });
        }
        let mut out = Vec::new();
        for mask in 0u32..1 << g {
            let memb = |x: i64| {
                self.semigroup_member(x)
                    || (0..g).any(|i| mask >> i & 1 == 1 && gaps[i] == x)
            };
            let below: Vec<i64> = (1..c).filter(|&x| memb(x)).collect();
            let closed = below
                .iter()
                .all(|&x| below.iter().all(|&y| memb(x + y)));
            if !closed {
                continue;
            }
            // minimal generators of the enlarged semigroup
            let c_over = (0..c).rev().find(|&x| !memb(x)).map_or(0, |x| x + 1);
            let m_over = (1..=c).find(|&x| memb(x)).unwrap_or(1);
            let gens: Vec<i64> = (1..=c_over + m_over)
                .filter(|&x| memb(x) && !(1..x).any(|a| memb(a) && memb(x - a)))
                .collect();
            out.push(gens);
        }
        out.sort();
        Ok(out)
    }
}
