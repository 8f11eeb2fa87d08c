//! Numerical semigroups.
//!
//! A numerical semigroup is a subset of the nonnegative integers containing 0,
//! closed under addition, with finite complement (the gaps). Everything the
//! later modules need is derived once at construction time: the conductor `c`
//! (least element with `c + n` in the set for every `n >= 0`), the elements
//! below the conductor, the gaps, the minimal generators and the symmetry
//! flag. Queries after that are table lookups.

use crate::error::Error;

/// Largest accepted generator.
pub const MAX_GENERATOR: i64 = 1_000_000;

/// Largest membership table the constructor will sieve before giving up.
/// Generators near [`MAX_GENERATOR`] are fine as long as the conductor stays
/// below this bound; a pair of large coprime generators does not.
pub const MAX_SIEVE: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    conductor: i64,
    small_elements: Vec<i64>,
    gaps: Vec<i64>,
    symmetric: bool,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. The list is minimalized, so
    /// redundant generators are dropped and equal semigroups always carry the
    /// same generator list.
    pub fn from_generators(gens: &[i64]) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in gens {
            if g < 1 {
                return Err(Error::NonPositiveGenerator(g));
            }
            if g > MAX_GENERATOR {
                return Err(Error::GeneratorTooLarge(g));
            }
        }
        let d = gens.iter().copied().fold(0, gcd);
        if d != 1 {
            return Err(Error::NotCoprime { gcd: d });
        }

        let m = *gens.iter().min().expect("nonempty");
        let mut cap =
            (gens.iter().max().expect("nonempty") + 2 * m + 2).clamp(16, MAX_SIEVE);
        let (table, conductor) = loop {
            let n = cap as usize;
            let mut t = vec![false; n];
            t[0] = true;
            for x in 1..n {
                t[x] = gens.iter().any(|&g| x as i64 >= g && t[x - g as usize]);
            }
            // m consecutive members guarantee everything after them
            let mut run = 0i64;
            let mut found = None;
            for (x, &member) in t.iter().enumerate() {
                run = if member { run + 1 } else { 0 };
                if run == m {
                    found = Some(x as i64 - m + 1);
                    break;
                }
            }
            match found {
                Some(c) => break (t, c),
                None if cap == MAX_SIEVE => return Err(Error::ConductorTooLarge),
                None => cap = (cap * 2).min(MAX_SIEVE),
            }
        };

        let c = conductor;
        let member = |x: i64| x >= c || (x >= 0 && table[x as usize]);
        let small_elements: Vec<i64> = (0..c).filter(|&x| table[x as usize]).collect();
        let gaps: Vec<i64> = (0..c).filter(|&x| !table[x as usize]).collect();

        // minimal generators are exactly the indecomposable input generators
        let mut generators: Vec<i64> = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        generators.retain(|&g| !(1..g).any(|a| member(a) && member(g - a)));

        let n = small_elements.len() as i64;
        let g = gaps.len() as i64;
        let symmetric = n == g;
        let f = c - 1;
        // the count test and the gap pairing test are two faces of the same
        // property; they must never disagree
        assert_eq!(
            symmetric,
            (0..c).all(|x| member(x) != member(f - x)),
            "symmetry tests disagree for generators {generators:?}"
        );

        Ok(NumericalSemigroup {
            generators,
            conductor: c,
            small_elements,
            gaps,
            symmetric,
        })
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || (x >= 0 && self.small_elements.binary_search(&x).is_ok())
    }

    /// Minimal generators, sorted ascending.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Largest integer outside the semigroup; -1 when there are no gaps.
    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.gaps.len() as i64
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Elements strictly below the conductor, sorted ascending.
    pub fn small_elements(&self) -> &[i64] {
        &self.small_elements
    }

    /// Number of elements below the conductor. Always at most the genus.
    pub fn non_gap_count(&self) -> i64 {
        self.small_elements.len() as i64
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
