//! H-functions: assignments of a Fitting set to every prime of a set pi,
//! the semilocal Fitting set SLR(f) they generate, the f-radical, and the
//! derived properties (integrated, full, invariable). Also the semilocal
//! test for a plain Fitting set, which exhibits the canonical H-function
//! on success.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::Bitset;
use crate::classes::ClassPredicate;
use crate::error::{Error, Result};
use crate::fitting::{self, FittingSet};
use crate::lattice::SubgroupLattice;
use crate::primes::{Pi, PrimeSet};

/// An H-function on pi together with everything derived from it. The
/// assignment map, the generated set SLR(f) and the radical table are all
/// fixed at construction.
pub struct HFunction {
    pi: PrimeSet,
    assignments: BTreeMap<u64, FittingSet>,
    slr: FittingSet,
    /// Per lattice index, the index of the f-radical (join of the
    /// f(p)-radicals over p in pi).
    f_radical: Vec<u32>,
    /// f(p) is contained in SLR(f) for every p.
    pub integrated: bool,
    /// f(p) composed with the p-groups equals f(p), for every p.
    pub full: bool,
    /// All assignments are one and the same set.
    pub invariable: bool,
}

impl fmt::Debug for HFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HFunction(pi={}, slr {} members; integrated={}, full={}, invariable={})",
            self.pi,
            self.slr.member_count(),
            self.integrated,
            self.full,
            self.invariable
        )
    }
}

/// Build the H-function from explicit per-prime assignments and compute
/// SLR(f) as the intersection over p in pi of f(p) composed with the
/// p'-groups.
pub fn slr(pi: &PrimeSet, assignments: BTreeMap<u64, FittingSet>) -> Result<HFunction> {
    if pi.is_empty() {
        return Err(Error::EmptyPrimeSet);
    }
    for p in pi.iter() {
        if !assignments.contains_key(&p) {
            return Err(Error::MissingAssignment { missing: p });
        }
    }
    for (p, f) in &assignments {
        if !pi.contains(*p) {
            return Err(Error::Precondition(format!(
                "assignment for prime {p} outside pi = {pi}"
            )));
        }
        if !std::sync::Arc::ptr_eq(f.group(), assignments[&pi.iter().next().unwrap()].group()) {
            return Err(Error::ParentMismatch);
        }
    }
    let first = &assignments[&pi.iter().next().unwrap()];
    let lat = first.lattice().clone();

    let mut slr_members: Option<Bitset> = None;
    let mut pieces = Vec::new();
    for p in pi.iter() {
        let eprime = ClassPredicate::PiGroup(Pi::NotIn(PrimeSet::new([p])));
        let prod = fitting::product_with_class(&assignments[&p], &eprime)?;
        slr_members = Some(match slr_members {
            None => prod.members().clone(),
            Some(m) => m.intersection(prod.members()),
        });
        pieces.push(format!("{p}->{}", assignments[&p].provenance()));
    }
    let members = slr_members.expect("pi is nonempty");
    match fitting::verify_axioms(&lat, &members)? {
        fitting::AxiomVerdict::Pass => {}
        bad => {
            return Err(Error::Internal(format!(
                "intersection of products broke an axiom: {bad}"
            )))
        }
    }
    let slr_set = FittingSet::new_unchecked(
        &lat,
        members,
        format!("slr(pi={}; {})", pi, pieces.join(",")),
    )?;

    let mut f_radical = vec![0u32; lat.len()];
    for j in 0..lat.len() {
        let mut r = 0usize;
        for p in pi.iter() {
            r = lat.join(r, assignments[&p].radical_index_of(j));
        }
        f_radical[j] = r as u32;
    }

    let integrated = pi
        .iter()
        .all(|p| assignments[&p].members().is_subset(slr_set.members()));
    let mut full = true;
    for p in pi.iter() {
        let np = ClassPredicate::PGroup(p);
        let prod = fitting::product_with_class(&assignments[&p], &np)?;
        if prod.members() != assignments[&p].members() {
            full = false;
            break;
        }
    }
    let firsts = assignments[&pi.iter().next().unwrap()].members().clone();
    let invariable = pi.iter().all(|p| *assignments[&p].members() == firsts);

    Ok(HFunction {
        pi: pi.clone(),
        assignments,
        slr: slr_set,
        f_radical,
        integrated,
        full,
        invariable,
    })
}

impl HFunction {
    pub fn pi(&self) -> &PrimeSet {
        &self.pi
    }

    pub fn assignment(&self, p: u64) -> Option<&FittingSet> {
        self.assignments.get(&p)
    }

    /// The semilocal Fitting set SLR(f).
    pub fn slr_set(&self) -> &FittingSet {
        &self.slr
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.slr.lattice()
    }

    /// Lattice index of the f-radical of the subgroup at `index`.
    pub fn f_radical_index_of(&self, index: usize) -> usize {
        self.f_radical[index] as usize
    }

    /// Element mask of the f-radical of the subgroup at `index`.
    pub fn f_radical_mask_of(&self, index: usize) -> &Bitset {
        self.lattice().mask(self.f_radical[index] as usize)
    }

    /// Lattice index of the f-radical of the whole group.
    pub fn group_f_radical_index(&self) -> usize {
        self.f_radical[self.lattice().len() - 1] as usize
    }
}

/// Verdict of the semilocality test for a Fitting set.
pub enum SemilocalVerdict {
    /// The set is semilocal; the canonical H-function assigning the set
    /// itself to every prime of pi generates it.
    Semilocal(Box<HFunction>),
    /// Not semilocal: `witness` is a lattice index in the product with
    /// the pi'-groups but not in the set.
    NotSemilocal { witness: usize },
}

impl SemilocalVerdict {
    pub fn is_semilocal(&self) -> bool {
        matches!(self, SemilocalVerdict::Semilocal(_))
    }
}

/// Test whether F is semilocal with respect to pi, i.e. whether F equals
/// F composed with the pi'-groups. On success the canonical H-function
/// (f(p) = F for all p in pi) is built and SLR of it is checked to equal
/// F; on failure a witness subgroup index is returned.
pub fn is_semilocal(f: &FittingSet, pi: &PrimeSet) -> Result<SemilocalVerdict> {
    if pi.is_empty() {
        return Err(Error::EmptyPrimeSet);
    }
    match fitting::semilocal_equality(f, pi)? {
        Err(witness) => Ok(SemilocalVerdict::NotSemilocal { witness }),
        Ok(()) => {
            let assignments: BTreeMap<u64, FittingSet> =
                pi.iter().map(|p| (p, f.clone())).collect();
            let h = slr(pi, assignments)?;
            if !h.slr_set().same_members(f) {
                return Err(Error::Internal(
                    "canonical H-function does not regenerate its semilocal set".into(),
                ));
            }
            Ok(SemilocalVerdict::Semilocal(Box::new(h)))
        }
    }
}
