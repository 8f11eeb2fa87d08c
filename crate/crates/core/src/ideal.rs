//! Relative ideals of a numerical semigroup in canonical minimal-generator
//! form, and the trace calculus built on them: dual, trace, subtrace,
//! reflexive hull, integral closure, endomorphism semigroup, star product.

use crate::error::Error;
use crate::semigroup::NumericalSemigroup;

pub(crate) const MAX_IDEAL_ELEMENT: i64 = 1_000_000_000_000;

/// Minimal generators of the ideal described by `member`.
///
/// `member` must be exact, the set must lie in [lo, ∞), and it must contain
/// everything from lo + conductor on. Both hold for every set produced by the
/// operations below, so the scan window [first, first + c + m) is provably
/// wide enough.
pub(crate) fn canonical_gens(
    h: &NumericalSemigroup,
    lo: i64,
    member: impl Fn(i64) -> bool,
) -> Vec<i64> {
    let c = h.conductor();
    let first = (lo..=lo + c)
        .find(|&x| member(x))
        .expect("an ideal has a member within one conductor of its lower bound");
    let mut gens: Vec<i64> = Vec::new();
    for x in first..first + c + h.multiplicity() {
        if member(x) && !gens.iter().any(|&g| h.contains(x - g)) {
            gens.push(x);
        }
    }
    gens
}

/// A fractionary monomial ideal E ⊆ ℤ with E + H ⊆ E, stored as its unique
/// minimal generating set. Two ideals are equal iff their ambient semigroups
/// and generator lists are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeIdeal<'h> {
    h: &'h NumericalSemigroup,
    gens: Vec<i64>,
}

impl<'h> RelativeIdeal<'h> {
    /// Builds gens + H and minimalizes the generator list.
    pub fn new(h: &'h NumericalSemigroup, gens: &[i64]) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyIdealGenerators);
        }
        for &g in gens {
            if g.abs() > MAX_IDEAL_ELEMENT {
                return Err(Error::IdealElementTooLarge(g));
            }
        }
        let mut raw = gens.to_vec();
        raw.sort_unstable();
        raw.dedup();
        let lo = raw[0];
        let canon = canonical_gens(h, lo, |x| raw.iter().any(|&g| h.contains(x - g)));
        Ok(RelativeIdeal { h, gens: canon })
    }

    /// Canonicalizes a membership predicate directly. Callers guarantee the
    /// contract of `canonical_gens`.
    pub(crate) fn from_member(
        h: &'h NumericalSemigroup,
        lo: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        RelativeIdeal {
            h,
            gens: canonical_gens(h, lo, member),
        }
    }

    pub fn semigroup(&self) -> &'h NumericalSemigroup {
        self.h
    }

    pub fn min_gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn min_element(&self) -> i64 {
        self.gens[0]
    }

    pub fn contains(&self, x: i64) -> bool {
        self.gens.iter().any(|&g| self.h.contains(x - g))
    }

    /// Set containment; false whenever the ambient semigroups differ.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        self.h == other.h && other.gens.iter().all(|&g| self.contains(g))
    }

    /// True iff E ⊆ H.
    pub fn in_ambient(&self) -> bool {
        self.gens.iter().all(|&g| self.h.contains(g))
    }

    /// True iff the conductor ideal c + ℤ≥0 is contained in E.
    pub fn contains_conductor(&self) -> bool {
        let c = self.h.conductor();
        // E always contains [min + c, ∞), so the check is finite
        (c..self.min_element() + c).all(|x| self.contains(x))
    }

    fn same_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.h == other.h {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    fn in_ambient_checked(&self) -> Result<(), Error> {
        match self.gens.iter().find(|&&g| !self.h.contains(g)) {
            Some(&g) => Err(Error::NotInSemigroup(g)),
            None => Ok(()),
        }
    }

    /// Ideal sum E + F, the set union.
    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.same_ambient(other)?;
        let lo = self.min_element().min(other.min_element());
        Ok(Self::from_member(self.h, lo, |x| {
            self.contains(x) || other.contains(x)
        }))
    }

    /// Ideal product E · F, the setwise sum.
    pub fn product(&self, other: &Self) -> Result<Self, Error> {
        self.same_ambient(other)?;
        let lo = self.min_element() + other.min_element();
        Ok(Self::from_member(self.h, lo, |x| {
            self.gens.iter().any(|&a| other.contains(x - a))
        }))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, Error> {
        self.same_ambient(other)?;
        let lo = self.min_element().max(other.min_element());
        Ok(Self::from_member(self.h, lo, |x| {
            self.contains(x) && other.contains(x)
        }))
    }

    /// Colon ideal E − F = {z : z + F ⊆ E}.
    pub fn colon(&self, other: &Self) -> Result<Self, Error> {
        self.same_ambient(other)?;
        let lo = self.min_element() - other.min_element();
        Ok(Self::from_member(self.h, lo, |z| {
            other.gens.iter().all(|&b| self.contains(z + b))
        }))
    }

    /// The shifted ideal a + E.
    pub fn shift(&self, a: i64) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|&g| g.checked_add(a).expect("shift stays in range"))
            .collect();
        // minimal generators shift along with the ideal
        RelativeIdeal { h: self.h, gens }
    }

    /// The dual E⁻¹ = H − E.
    pub fn dual(&self) -> Self {
        Self::from_member(self.h, -self.min_element(), |z| {
            self.gens.iter().all(|&g| self.h.contains(z + g))
        })
    }

    /// tr(E) = E · E⁻¹, the trace ideal generated by E.
    pub fn trace(&self) -> Self {
        let d = self.dual();
        self.product(&d).expect("dual shares the ambient semigroup")
    }

    pub fn is_trace(&self) -> bool {
        self.trace() == *self
    }

    /// Reflexive hull (E⁻¹)⁻¹.
    pub fn reflexive_hull(&self) -> Self {
        self.dual().dual()
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive_hull() == *self
    }

    /// End(E) = E − E, an oversemigroup of H presented as a relative ideal
    /// with minimum 0.
    pub fn end_semigroup(&self) -> Self {
        self.colon(self).expect("an ideal shares its own ambient")
    }

    /// {h ∈ H : h ≥ min E}; requires E ⊆ H.
    pub fn integral_closure(&self) -> Result<Self, Error> {
        self.in_ambient_checked()?;
        Ok(Self::from_member(self.h, self.min_element(), |x| {
            self.h.contains(x)
        }))
    }

    pub fn is_integrally_closed(&self) -> Result<bool, Error> {
        Ok(self.integral_closure()? == *self)
    }

    /// The largest monomial trace ideal contained in E.
    ///
    /// Requires C ⊆ E ⊆ H. For symmetric H the dual-power chain
    /// F₁ = E⁻¹, F_{k+1} = F_k · F₁ stabilizes within n(H) + 1 steps and the
    /// answer is the dual of the stable term. Otherwise every monomial trace
    /// ideal is enumerated and those inside E are summed.
    pub fn subtrace(&self) -> Result<Self, Error> {
        self.in_ambient_checked()?;
        if !self.contains_conductor() {
            return Err(Error::ConductorNotContained);
        }
        if self.is_trace() {
            return Ok(self.clone());
        }
        if self.h.is_symmetric() {
            let f1 = self.dual();
            let mut f = f1.clone();
            for _ in 0..=self.h.non_gap_count() + 1 {
                let next = f.product(&f1).expect("same ambient");
                if next == f {
                    return Ok(f.dual());
                }
                f = next;
            }
            unreachable!("dual-power chain did not stabilize within n(H) + 1 steps");
        }
        let mut best = self.h.conductor_ideal();
        for t in crate::enumerate::trace_ideals(self.h)? {
            if self.contains_ideal(&t) {
                best = best.sum(&t).expect("same ambient");
            }
        }
        Ok(best)
    }

    /// Star product E * F = (E⁻¹ · F⁻¹)⁻¹. Both operands must lie between
    /// the conductor ideal and H.
    pub fn star(&self, other: &Self) -> Result<Self, Error> {
        self.same_ambient(other)?;
        for e in [self, other] {
            e.in_ambient_checked()?;
            if !e.contains_conductor() {
                return Err(Error::ConductorNotContained);
            }
        }
        let p = self.dual().product(&other.dual()).expect("same ambient");
        Ok(p.dual())
    }

    /// Full trace report; requires E ⊆ H. The subtrace is present iff E
    /// contains the conductor ideal.
    pub fn analyze(&self) -> Result<TraceReport<'h>, Error> {
        self.in_ambient_checked()?;
        let contains_conductor = self.contains_conductor();
        let trace = self.trace();
        let subtrace = if contains_conductor {
            Some(self.subtrace()?)
        } else {
            None
        };
        let reflexive_hull = self.reflexive_hull();
        let integral_closure = self.integral_closure()?;
        Ok(TraceReport {
            is_trace: trace == *self,
            is_reflexive: reflexive_hull == *self,
            is_integrally_closed: integral_closure == *self,
            contains_conductor,
            ideal: self.clone(),
            trace,
            subtrace,
            reflexive_hull,
            integral_closure,
        })
    }
}

/// Everything the trace calculus says about one ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport<'h> {
    pub ideal: RelativeIdeal<'h>,
    pub trace: RelativeIdeal<'h>,
    pub subtrace: Option<RelativeIdeal<'h>>,
    pub reflexive_hull: RelativeIdeal<'h>,
    pub integral_closure: RelativeIdeal<'h>,
    pub is_trace: bool,
    pub is_reflexive: bool,
    pub is_integrally_closed: bool,
    pub contains_conductor: bool,
}

impl NumericalSemigroup {
    /// H as a relative ideal of itself.
    pub fn as_ideal(&self) -> RelativeIdeal<'_> {
        RelativeIdeal {
            h: self,
            gens: vec![0],
        }
    }

    /// The conductor ideal C = c + ℤ≥0 with minimal generators c..c+m.
    pub fn conductor_ideal(&self) -> RelativeIdeal<'_> {
        let c = self.conductor();
        RelativeIdeal {
            h: self,
            gens: (c..c + self.multiplicity()).collect(),
        }
    }

    /// The canonical ideal K = {x : F − x ∉ H}. K is a shift of H exactly
    /// when H is symmetric.
    pub fn canonical_ideal(&self) -> RelativeIdeal<'_> {
        let f = self.frobenius();
        RelativeIdeal {
            h: self,
            gens: canonical_gens(self, 0, |x| !self.contains(f - x)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn ideal<'h>(h: &'h NumericalSemigroup, gens: &[i64]) -> RelativeIdeal<'h> {
        RelativeIdeal::new(h, gens).unwrap()
    }

    #[test]
    fn canonicalization_drops_redundant_generators() {
        let h = sg(&[3, 4]);
        assert_eq!(ideal(&h, &[3, 8, 11]).min_gens(), &[3, 8]);
        assert_eq!(ideal(&h, &[8, 3]).min_gens(), &[3, 8]);
        assert_eq!(ideal(&h, &[0, 3, 4]).min_gens(), &[0]);
        let h = sg(&[5, 6, 7]);
        assert_eq!(ideal(&h, &[6, 10, 14]).min_gens(), &[6, 10, 14]);
    }

    #[test]
    fn special_ideals() {
        let h = sg(&[5, 6, 7]);
        assert_eq!(h.conductor_ideal().min_gens(), &[10, 11, 12, 13, 14]);
        assert_eq!(h.as_ideal().min_gens(), &[0]);
        assert_eq!(h.canonical_ideal().min_gens(), &[0, 1]);
        let h = sg(&[3, 4]);
        assert_eq!(h.conductor_ideal().min_gens(), &[6, 7, 8]);
        assert_eq!(h.canonical_ideal().min_gens(), &[0]);
        let h = sg(&[3, 4, 5]);
        assert_eq!(h.canonical_ideal().min_gens(), &[0, 1]);
        let h = sg(&[1]);
        assert_eq!(h.conductor_ideal().min_gens(), &[0]);
        assert_eq!(h.canonical_ideal().min_gens(), &[0]);
    }

    #[test]
    fn cusp_ideal_trace_chain() {
        let h = sg(&[3, 4]);
        let e = ideal(&h, &[3, 8]);
        assert_eq!(e.dual().min_gens(), &[0, 1]);
        assert_eq!(e.trace().min_gens(), &[3, 4]);
        assert!(!e.is_trace());
        assert_eq!(e.subtrace().unwrap().min_gens(), &[6, 7, 8]);
        assert_eq!(e.reflexive_hull(), e);
        assert!(e.is_reflexive());
        assert_eq!(e.integral_closure().unwrap().min_gens(), &[3, 4]);
        assert!(!e.is_integrally_closed().unwrap());
        assert_eq!(e.end_semigroup().min_gens(), &[0, 5]);
        assert!(ideal(&h, &[6, 7, 8]).is_trace());
        assert!(h.as_ideal().is_trace());
    }

    #[test]
    fn five_six_seven_ideal_is_not_trace() {
        let h = sg(&[5, 6, 7]);
        let e = ideal(&h, &[6, 10, 14]);
        assert_eq!(e.trace().min_gens(), &[6, 7, 10]);
        assert!(!e.is_trace());
        // the conductor ideal is the largest trace ideal inside E
        assert_eq!(
            e.subtrace().unwrap().min_gens(),
            &[10, 11, 12, 13, 14]
        );
        assert!(e.contains_conductor());
    }

    #[test]
    fn seven_ten_dual_power_chain() {
        let h = sg(&[7, 10]);
        let e = ideal(&h, &[14, 50]);
        let d = e.dual();
        assert_eq!(d.min_gens(), &[0, 6]);
        let d2 = d.product(&d).unwrap();
        assert_eq!(d2.min_gens(), &[0, 6, 12]);
        let d3 = d2.product(&d).unwrap();
        assert_eq!(d3.min_gens(), &[0, 6, 12, 18]);
        assert_eq!(d3.product(&d).unwrap(), d3);
        assert_eq!(e.trace().min_gens(), &[14, 20]);
        assert_eq!(e.subtrace().unwrap().min_gens(), &[38, 42, 44, 50]);
        assert_eq!(e.end_semigroup().min_gens(), &[0, 36]);
        assert_eq!(d.end_semigroup().min_gens(), &[0, 36]);
        // a ring between H and ℤ≥0 is its own endomorphism semigroup
        assert_eq!(d3.end_semigroup(), d3);
    }

    #[test]
    fn trace_but_not_reflexive() {
        let h = sg(&[14, 15, 20, 21, 25]);
        assert_eq!(h.conductor(), 53);
        let e = ideal(&h, &[21, 28, 29, 30, 34]);
        assert!(e.is_trace());
        assert_eq!(
            e.reflexive_hull().min_gens(),
            &[21, 28, 29, 30, 34, 39, 40]
        );
        assert!(!e.is_reflexive());
    }

    #[test]
    fn colon_and_duals() {
        let h = sg(&[3, 4]);
        let hi = h.as_ideal();
        assert_eq!(hi.colon(&hi).unwrap(), hi);
        assert_eq!(hi.colon(&h.conductor_ideal()).unwrap().min_gens(), &[0, 1, 2]);
        let e = ideal(&h, &[3, 8]);
        let d = e.dual();
        assert_eq!(d.dual().dual(), d);
        assert!(d.is_reflexive());
    }

    #[test]
    fn sum_product_intersect() {
        let h = sg(&[3, 4]);
        let e = ideal(&h, &[3, 8]);
        let c = h.conductor_ideal();
        assert_eq!(e.sum(&e).unwrap(), e);
        assert_eq!(e.sum(&c).unwrap(), e);
        assert_eq!(e.product(&h.as_ideal()).unwrap(), e);
        assert_eq!(e.intersect(&e).unwrap(), e);
        assert_eq!(e.intersect(&h.as_ideal()).unwrap(), e);
        let m = ideal(&h, &[3, 4]);
        let i4 = ideal(&h, &[4, 6]);
        assert_eq!(m.intersect(&i4).unwrap().min_gens(), &[4, 6]);
        // disjoint minima: the intersection starts above both
        let a = ideal(&h, &[3]);
        let b = ideal(&h, &[4]);
        assert_eq!(a.intersect(&b).unwrap().min_gens(), &[7, 12]);
    }

    #[test]
    fn star_product() {
        let h = sg(&[3, 4]);
        let m = ideal(&h, &[3, 4]);
        let i4 = ideal(&h, &[4, 6]);
        let c = h.conductor_ideal();
        let hi = h.as_ideal();
        assert_eq!(m.star(&i4).unwrap().min_gens(), &[4, 6]);
        assert_eq!(m.star(&c).unwrap(), c);
        assert_eq!(m.star(&hi).unwrap(), m);
        assert_eq!(m.star(&m).unwrap(), m);
        let e = ideal(&h, &[3, 8]);
        assert_eq!(e.star(&e).unwrap().min_gens(), &[6, 7, 8]);
        assert_eq!(e.star(&hi).unwrap(), e);
    }

    // star only half-distributes over sums, even for trace ideals of a
    // symmetric semigroup: star(E + F, G) can strictly contain
    // star(E, G) + star(F, G). Smallest witness found by exhaustive search.
    #[test]
    fn star_distribution_is_an_inclusion_not_an_equality() {
        let h = sg(&[4, 6, 7]);
        assert!(h.is_symmetric());
        let e = ideal(&h, &[4, 6]);
        let f = ideal(&h, &[6, 7, 8]);
        let g = ideal(&h, &[4, 7]);
        for t in [&e, &f, &g] {
            assert!(t.is_trace());
        }
        let lhs = e.sum(&f).unwrap().star(&g).unwrap();
        let rhs = e.star(&g).unwrap().sum(&f.star(&g).unwrap()).unwrap();
        assert_eq!(lhs.min_gens(), &[4, 7]);
        assert_eq!(rhs.min_gens(), &[7, 8, 10]);
        assert!(lhs.contains_ideal(&rhs));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn shift_moves_generators() {
        let h = sg(&[3, 4]);
        let e = ideal(&h, &[3, 8]);
        assert_eq!(e.shift(5).min_gens(), &[8, 13]);
        assert_eq!(e.shift(-3).min_gens(), &[0, 5]);
        assert_eq!(e.shift(-3).shift(3), e);
        assert!(e.shift(1).trace() == e.trace());
    }

    #[test]
    fn analyze_bundles_everything() {
        let h = sg(&[3, 4]);
        let e = ideal(&h, &[3, 8]);
        let r = e.analyze().unwrap();
        assert_eq!(r.trace.min_gens(), &[3, 4]);
        assert_eq!(r.subtrace.unwrap().min_gens(), &[6, 7, 8]);
        assert!(!r.is_trace && r.is_reflexive && !r.is_integrally_closed);
        assert!(r.contains_conductor);
        let r = h.as_ideal().analyze().unwrap();
        assert!(r.is_trace && r.is_reflexive && r.is_integrally_closed);
        assert_eq!(r.trace, h.as_ideal());
        // an ideal missing the conductor has no subtrace
        let far = ideal(&h, &[8]);
        let r = far.analyze().unwrap();
        assert!(!r.contains_conductor);
        assert!(r.subtrace.is_none());
    }

    #[test]
    fn domain_errors() {
        let h34 = sg(&[3, 4]);
        let h35 = sg(&[3, 5]);
        let e = ideal(&h34, &[3, 8]);
        let f = ideal(&h35, &[3, 8]);
        assert_eq!(e.sum(&f), Err(Error::AmbientMismatch));
        assert_eq!(e.colon(&f), Err(Error::AmbientMismatch));
        assert_eq!(
            RelativeIdeal::new(&h34, &[]),
            Err(Error::EmptyIdealGenerators)
        );
        assert_eq!(
            RelativeIdeal::new(&h34, &[2_000_000_000_000]),
            Err(Error::IdealElementTooLarge(2_000_000_000_000))
        );
        let gap = ideal(&h34, &[5, 6]);
        assert_eq!(gap.integral_closure(), Err(Error::NotInSemigroup(5)));
        assert_eq!(gap.subtrace(), Err(Error::NotInSemigroup(5)));
        assert_eq!(gap.analyze(), Err(Error::NotInSemigroup(5)));
        let far = ideal(&h34, &[8]);
        assert_eq!(far.subtrace(), Err(Error::ConductorNotContained));
        assert_eq!(far.star(&e), Err(Error::ConductorNotContained));
        // relative ideals with negative elements still support the unshifted ops
        let rel = ideal(&h34, &[-2, 0]);
        assert!(rel.trace().min_gens()[0] >= 0);
        assert_eq!(rel.analyze(), Err(Error::NotInSemigroup(-2)));
    }

    #[test]
    fn whole_line_edge_cases() {
        let h = sg(&[1]);
        let e = ideal(&h, &[4, 9]);
        assert_eq!(e.min_gens(), &[4]);
        assert_eq!(e.dual().min_gens(), &[-4]);
        assert_eq!(e.trace(), h.as_ideal());
        assert!(!e.is_trace());
        assert!(h.as_ideal().is_trace());
        assert_eq!(h.as_ideal().subtrace().unwrap(), h.as_ideal());
        assert_eq!(e.end_semigroup().min_gens(), &[0]);
    }
}
