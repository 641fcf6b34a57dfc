//! Fitting sets of a fixed group: conjugation-closed families of
//! subgroups closed under normal subgroups and normal products, together
//! with the calculus built on them — traces of classes, closures of seed
//! families, products with a class, Hall pullbacks, radicals and the
//! prime spectrum.
//!
//! A Fitting set is represented extensionally as a bitmask over lattice
//! indices, with every member's radical precomputed at construction, so
//! set equality, axiom checks and radical lookups are exact and cheap.

use std::fmt;
use std::sync::Arc;

use crate::bitset::Bitset;
use crate::classes::{self, ClassPredicate};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{Subgroup, SubgroupLattice};
use crate::primes::{sigma_primes, Pi, PrimeSet};

/// Outcome of checking the three defining axioms on a candidate family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomVerdict {
    Pass,
    /// `sub` is normal in the member `ambient` but missing from the family.
    FailNormal { sub: usize, ambient: usize },
    /// Members `a` and `b` are both normal in their join (so their setwise
    /// product is that join), but the join is missing from the family.
    FailProduct { a: usize, b: usize, join: usize },
    /// Conjugating member `member` by group element `by` leaves the family.
    FailConjugation {
        member: usize,
        by: usize,
        image: usize,
    },
}

impl AxiomVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomVerdict::Pass)
    }

    /// Axiom label: "i", "ii", "iii", or "pass".
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomVerdict::Pass => "pass",
            AxiomVerdict::FailNormal { .. } => "i",
            AxiomVerdict::FailProduct { .. } => "ii",
            AxiomVerdict::FailConjugation { .. } => "iii",
        }
    }
}

impl fmt::Display for AxiomVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomVerdict::Pass => write!(f, "pass"),
            AxiomVerdict::FailNormal { sub, ambient } => write!(
                f,
                "axiom i: subgroup #{sub} is normal in member #{ambient} but absent"
            ),
            AxiomVerdict::FailProduct { a, b, join } => write!(
                f,
                "axiom ii: members #{a}, #{b} are normal in their join #{join}, which is absent"
            ),
            AxiomVerdict::FailConjugation { member, by, image } => write!(
                f,
                "axiom iii: member #{member} conjugated by element {by} gives absent subgroup #{image}"
            ),
        }
    }
}

/// Check the three Fitting-set axioms on a family of lattice indices,
/// returning the first violation found (scanning members ascending).
pub fn verify_axioms(lat: &SubgroupLattice, members: &Bitset) -> Result<AxiomVerdict> {
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    // Axiom i: normal subgroups of members are members.
    for s in members.iter() {
        for &t in lat.contained(s) {
            let t = t as usize;
            if !members.contains(t) && lat.is_normal_pair(t, s) {
                return Ok(AxiomVerdict::FailNormal { sub: t, ambient: s });
            }
        }
    }
    // Axiom ii: if S and T are normal in their join (so the setwise
    // product ST is that join), the join is a member.
    let idx: Vec<usize> = members.iter().collect();
    for (pos, &a) in idx.iter().enumerate() {
        for &b in &idx[pos..] {
            let j = lat.join(a, b);
            if !members.contains(j) && lat.is_normal_pair(a, j) && lat.is_normal_pair(b, j) {
                return Ok(AxiomVerdict::FailProduct { a, b, join: j });
            }
        }
    }
    // Axiom iii: closure under conjugation. Checking the group's
    // generators suffices, and each failure names a conjugating element.
    let gens = lat.group().generators().to_vec();
    for s in members.iter() {
        for &ge in &gens {
            let image = lat.conj_index(s, ge as usize);
            if !members.contains(image) {
                return Ok(AxiomVerdict::FailConjugation {
                    member: s,
                    by: ge as usize,
                    image,
                });
            }
        }
    }
    Ok(AxiomVerdict::Pass)
}

/// A Fitting set of a fixed group, stored extensionally over the lattice.
#[derive(Clone)]
pub struct FittingSet {
    lattice: SubgroupLattice,
    members: Bitset,
    /// Per lattice index j, the index of the F-radical of subgroup j.
    radical_of: Vec<u32>,
    sigma: PrimeSet,
    provenance: String,
}

impl fmt::Debug for FittingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FittingSet({} members of {}; {})",
            self.members.count(),
            self.lattice.group().name(),
            self.provenance
        )
    }
}

impl FittingSet {
    /// Build from an explicit member family, verifying the axioms and
    /// precomputing every subgroup's radical.
    pub fn new(lat: &SubgroupLattice, members: Bitset, provenance: String) -> Result<Self> {
        match verify_axioms(lat, &members)? {
            AxiomVerdict::Pass => {}
            bad => {
                return Err(Error::AxiomViolation {
                    axiom: bad.axiom(),
                    detail: bad.to_string(),
                })
            }
        }
        Self::new_unchecked(lat, members, provenance)
    }

    /// Build when the axioms are already guaranteed by construction; the
    /// radical table and the subnormal-intersection law are still checked.
    pub(crate) fn new_unchecked(
        lat: &SubgroupLattice,
        members: Bitset,
        provenance: String,
    ) -> Result<Self> {
        let count = lat.len();
        let mut radical_of = vec![0u32; count];
        for j in 0..count {
            let mut r = 0usize; // trivial subgroup
            for &i in lat.contained(j) {
                let i = i as usize;
                if members.contains(i)
                    && lat.is_normal_pair(i, j)
                    && !lat.mask(i).is_subset(lat.mask(r))
                {
                    r = lat.join(r, i);
                }
            }
            radical_of[j] = r as u32;
        }
        // The radical of a subnormal subgroup is its intersection with the
        // whole group's radical; this holds for any Fitting set, so a
        // failure means the family or the table is corrupt.
        let g_rad = lat.mask(radical_of[count - 1] as usize);
        for j in 0..count {
            if lat.is_subnormal_in_g(j) {
                let expect = lat.mask(j).intersection(g_rad);
                if *lat.mask(radical_of[j] as usize) != expect {
                    return Err(Error::Internal(format!(
                        "radical table violates the subnormal intersection law at index {j}"
                    )));
                }
            }
        }
        let mut sigma = PrimeSet::empty();
        for i in members.iter() {
            sigma = sigma.union(&sigma_primes(lat.order(i) as u64));
        }
        Ok(FittingSet {
            lattice: lat.clone(),
            members,
            radical_of,
            sigma,
            provenance,
        })
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn group(&self) -> &Arc<Group> {
        self.lattice.group()
    }

    /// Member family as a bitmask over lattice indices.
    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn member_count(&self) -> usize {
        self.members.count()
    }

    pub fn is_member(&self, index: usize) -> bool {
        self.members.contains(index)
    }

    /// Lattice index of the F-radical of the subgroup at `index`.
    pub fn radical_index_of(&self, index: usize) -> usize {
        self.radical_of[index] as usize
    }

    /// Element mask of the F-radical of the subgroup at `index`.
    pub fn radical_mask_of(&self, index: usize) -> &Bitset {
        self.lattice.mask(self.radical_of[index] as usize)
    }

    /// Lattice index of the radical of the whole group.
    pub fn group_radical_index(&self) -> usize {
        self.radical_of[self.lattice.len() - 1] as usize
    }

    /// Primes dividing the order of at least one member.
    pub fn sigma(&self) -> &PrimeSet {
        &self.sigma
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Same member family over the same group.
    pub fn same_members(&self, other: &FittingSet) -> bool {
        Arc::ptr_eq(self.lattice.group(), other.lattice.group()) && self.members == other.members
    }
}

/// The F-radical of a subgroup, as a Subgroup of the parent.
pub fn radical(sub: &Subgroup, f: &FittingSet) -> Result<Subgroup> {
    if !Arc::ptr_eq(&sub.group, f.lattice.group()) {
        return Err(Error::ParentMismatch);
    }
    let idx = f.lattice.index_of(&sub.mask).ok_or(Error::NotASubgroup)?;
    Ok(f.lattice.subgroup(f.radical_index_of(idx)))
}

/// The trace of a Fitting class: all subgroups belonging to the class.
/// The axioms are re-verified as a postcondition.
pub fn trace(lat: &SubgroupLattice, class: &ClassPredicate) -> Result<FittingSet> {
    if !class.is_fitting() {
        return Err(Error::ClassNotApplicable(class.to_string(), "fitting"));
    }
    let g = lat.group();
    let trivial = g.trivial_mask();
    let mut members = Bitset::new(lat.len());
    for i in 0..lat.len() {
        if classes::section_member(g, lat.mask(i), &trivial, class)? {
            members.insert(i);
        }
    }
    match verify_axioms(lat, &members)? {
        AxiomVerdict::Pass => {}
        bad => {
            return Err(Error::Internal(format!(
                "trace of Fitting class {class} broke an axiom: {bad}"
            )))
        }
    }
    FittingSet::new_unchecked(lat, members, format!("trace({class})"))
}

/// Smallest Fitting set containing the seed subgroups, by fixpoint
/// iteration of the three closure rules.
pub fn fitting_closure(lat: &SubgroupLattice, seed: &[usize]) -> Result<FittingSet> {
    if seed.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for &i in seed {
        if i >= lat.len() {
            return Err(Error::ElementIndex {
                index: i,
                order: lat.len(),
            });
        }
    }
    let mut members = Bitset::new(lat.len());
    members.insert(0);
    for &i in seed {
        members.insert(i);
    }
    let gens: Vec<usize> = lat
        .group()
        .generators()
        .iter()
        .map(|&x| x as usize)
        .collect();
    loop {
        let before = members.clone();
        // Conjugation closure (generator orbits suffice when iterated to
        // a fixpoint).
        for s in before.iter() {
            for &ge in &gens {
                members.insert(lat.conj_index(s, ge));
            }
        }
        // Normal subgroup closure.
        for s in members.clone().iter() {
            for &t in lat.contained(s) {
                if lat.is_normal_pair(t as usize, s) {
                    members.insert(t as usize);
                }
            }
        }
        // Normal product closure.
        let idx: Vec<usize> = members.iter().collect();
        for (pos, &a) in idx.iter().enumerate() {
            for &b in &idx[pos..] {
                let j = lat.join(a, b);
                if lat.is_normal_pair(a, j) && lat.is_normal_pair(b, j) {
                    members.insert(j);
                }
            }
        }
        if members == before {
            break;
        }
    }
    match verify_axioms(lat, &members)? {
        AxiomVerdict::Pass => {}
        bad => {
            return Err(Error::Internal(format!(
                "fixpoint closure is not axiom-closed: {bad}"
            )))
        }
    }
    let mut sorted = seed.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let listed: Vec<String> = sorted.iter().map(|i| i.to_string()).collect();
    FittingSet::new_unchecked(lat, members, format!("closure([{}])", listed.join(",")))
}

/// Product of a Fitting set with a Fitting class: the subgroups whose
/// quotient by their F-radical lies in the class.
pub fn product_with_class(f: &FittingSet, class: &ClassPredicate) -> Result<FittingSet> {
    if !class.is_fitting() {
        return Err(Error::ClassNotApplicable(class.to_string(), "fitting"));
    }
    let lat = &f.lattice;
    let g = lat.group();
    let mut members = Bitset::new(lat.len());
    for i in 0..lat.len() {
        let rad = f.radical_mask_of(i);
        if classes::section_member(g, lat.mask(i), rad, class)? {
            members.insert(i);
        }
    }
    match verify_axioms(lat, &members)? {
        AxiomVerdict::Pass => {}
        bad => {
            return Err(Error::Internal(format!(
                "product with {class} broke an axiom: {bad}"
            )))
        }
    }
    FittingSet::new_unchecked(lat, members, format!("product({},{class})", f.provenance))
}

/// Whether F equals F composed with the pi'-groups — the defining test
/// for semilocality with respect to pi. Returns the symmetric-difference
/// witness (a lattice index) when the equality fails; since F is always
/// contained in the product, the witness lies in the product only.
pub fn semilocal_equality(f: &FittingSet, pi: &PrimeSet) -> Result<std::result::Result<(), usize>> {
    let eprime = ClassPredicate::PiGroup(Pi::NotIn(pi.clone()));
    let prod = product_with_class(f, &eprime)?;
    if prod.members == f.members {
        return Ok(Ok(()));
    }
    let witness = prod
        .members
        .difference(&f.members)
        .first()
        .ok_or_else(|| Error::Internal("product lost members of its base".into()))?;
    Ok(Err(witness))
}

/// The Hall pullback of a Fitting set along pi: subgroups whose Hall
/// pi-subgroups all belong to F. Requires a pi-soluble group, which makes
/// Hall pi-subgroups of every subgroup exist and be conjugate; every Hall
/// subgroup is tested, so ill-definedness would surface as an internal
/// error. The result is verified semilocal with respect to pi.
pub fn hall_pullback_set(
    lat: &SubgroupLattice,
    f: &FittingSet,
    pi: &PrimeSet,
) -> Result<FittingSet> {
    let g = lat.group();
    let pi_in = Pi::In(pi.clone());
    if !classes::class_member(g, &ClassPredicate::PiSoluble(pi_in.clone()))? {
        return Err(Error::Precondition(format!(
            "hall pullback needs a pi-soluble group for pi = {pi}, and {} is not",
            g.name()
        )));
    }
    let mut members = Bitset::new(lat.len());
    for i in 0..lat.len() {
        let halls = lat.hall_subgroups_in(&pi_in, i);
        if halls.is_empty() {
            return Err(Error::Internal(format!(
                "pi-soluble group lacks a Hall pi-subgroup inside index {i}"
            )));
        }
        let verdicts: Vec<bool> = halls.iter().map(|&h| f.is_member(h)).collect();
        if verdicts.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Internal(format!(
                "Hall pi-subgroups of index {i} disagree on membership"
            )));
        }
        if verdicts[0] {
            members.insert(i);
        }
    }
    match verify_axioms(lat, &members)? {
        AxiomVerdict::Pass => {}
        bad => {
            return Err(Error::Internal(format!(
                "hall pullback broke an axiom: {bad}"
            )))
        }
    }
    let out = FittingSet::new_unchecked(
        lat,
        members,
        format!("hall_pullback({},{pi})", f.provenance),
    )?;
    if semilocal_equality(&out, pi)?.is_err() {
        return Err(Error::Internal(
            "hall pullback produced a non-semilocal set".into(),
        ));
    }
    Ok(out)
}

/// All Fitting sets of the group, enumerated as axiom-closed unions of
/// subgroup conjugacy classes. Exponential in the class count, so gated.
pub fn enumerate_all(lat: &SubgroupLattice, max_classes: usize) -> Result<Vec<FittingSet>> {
    let classes = lat.classes();
    if classes.len() > max_classes {
        return Err(Error::Precondition(format!(
            "{} has {} subgroup classes, above the enumeration gate {max_classes}",
            lat.group().name(),
            classes.len()
        )));
    }
    // The class of the trivial subgroup is forced into every Fitting set.
    let trivial_class = lat.class_of(0);
    let optional: Vec<usize> = (0..classes.len()).filter(|&c| c != trivial_class).collect();
    let mut out = Vec::new();
    for pick in 0u64..(1u64 << optional.len()) {
        let mut members = Bitset::new(lat.len());
        for &i in &classes[trivial_class] {
            members.insert(i as usize);
        }
        for (bit, &c) in optional.iter().enumerate() {
            if pick >> bit & 1 == 1 {
                for &i in &classes[c] {
                    members.insert(i as usize);
                }
            }
        }
        if verify_axioms(lat, &members)?.passed() {
            let fs = FittingSet::new_unchecked(
                lat,
                members,
                format!("enumerated(pick={pick:#x})"),
            )?;
            out.push(fs);
        }
    }
    Ok(out)
}

fn spec_obj(v: &serde_json::Value) -> Result<&serde_json::Map<String, serde_json::Value>> {
    v.as_object()
        .ok_or_else(|| Error::FittingDoc("set spec must be a JSON object".into()))
}

fn spec_kind(obj: &serde_json::Map<String, serde_json::Value>) -> Result<&str> {
    obj.get("kind")
        .and_then(serde_json::Value::as_str)
        .ok_or_else(|| Error::FittingDoc("set spec needs a string \"kind\"".into()))
}

fn spec_primes(obj: &serde_json::Map<String, serde_json::Value>) -> Result<PrimeSet> {
    let arr = obj
        .get("pi")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| Error::FittingDoc("set spec needs a \"pi\" array of primes".into()))?;
    let mut out = PrimeSet::empty();
    for item in arr {
        let p = item
            .as_u64()
            .ok_or_else(|| Error::FittingDoc("\"pi\" entries must be integers".into()))?;
        if !crate::primes::is_prime(p) {
            return Err(Error::FittingDoc(format!("{p} is not prime")));
        }
        out.insert(p);
    }
    if out.is_empty() {
        return Err(Error::FittingDoc("\"pi\" must be nonempty".into()));
    }
    Ok(out)
}

/// Resolve the seed list of a "closure" spec: each entry is a subgroup
/// given by a list of generators in the same cycle notation as group
/// documents. Returns lattice indices.
fn spec_seed_indices(lat: &SubgroupLattice, v: &serde_json::Value) -> Result<Vec<usize>> {
    let g = lat.group();
    let list = v
        .as_array()
        .ok_or_else(|| Error::FittingDoc("\"seed\" must be an array of subgroups".into()))?;
    let mut out = Vec::new();
    for sub in list {
        let gens = sub.as_array().ok_or_else(|| {
            Error::FittingDoc("each seed subgroup must be an array of generators".into())
        })?;
        let mut indices = Vec::new();
        for gen in gens {
            let cycles: Vec<Vec<usize>> = serde_json::from_value(gen.clone())
                .map_err(|e| Error::FittingDoc(format!("seed generator: {e}")))?;
            let p = crate::perm::Perm::from_cycles(g.degree(), &cycles)?;
            let idx = g.index_of_perm(&p).ok_or_else(|| {
                Error::FittingDoc(format!(
                    "seed permutation {} lies outside {}",
                    p.cycle_string(),
                    g.name()
                ))
            })?;
            indices.push(idx);
        }
        let mask = g.subgroup_generated(&indices)?;
        let idx = lat
            .index_of(&mask)
            .ok_or_else(|| Error::Internal("generated subgroup missing from lattice".into()))?;
        out.push(idx);
    }
    Ok(out)
}

/// Build the H-function described by an "slr" spec document.
pub fn hfunction_from_spec_json(
    lat: &SubgroupLattice,
    v: &serde_json::Value,
) -> Result<crate::hfunction::HFunction> {
    let obj = spec_obj(v)?;
    let kind = spec_kind(obj)?;
    if kind != "slr" {
        return Err(Error::FittingDoc(format!(
            "expected an \"slr\" spec, got \"{kind}\""
        )));
    }
    let pi = spec_primes(obj)?;
    let f = obj
        .get("f")
        .and_then(serde_json::Value::as_object)
        .ok_or_else(|| Error::FittingDoc("slr spec needs an \"f\" object".into()))?;
    let mut assignments = std::collections::BTreeMap::new();
    for (key, sub_spec) in f {
        let p: u64 = key
            .parse()
            .map_err(|_| Error::FittingDoc(format!("\"f\" key {key:?} is not a prime")))?;
        assignments.insert(p, from_spec_json(lat, sub_spec)?);
    }
    crate::hfunction::slr(&pi, assignments)
}

/// Build a Fitting set from its JSON spec document. Kinds:
/// `trace` (a class), `closure` (a seed family of subgroups), `slr` (an
/// H-function; yields the generated semilocal set), `product` (base set
/// composed with a class) and `hall_pullback` (base set pulled back along
/// Hall pi-subgroups).
pub fn from_spec_json(lat: &SubgroupLattice, v: &serde_json::Value) -> Result<FittingSet> {
    let obj = spec_obj(v)?;
    match spec_kind(obj)? {
        "trace" => {
            let class = obj
                .get("class")
                .ok_or_else(|| Error::FittingDoc("trace spec needs a \"class\"".into()))?;
            trace(lat, &ClassPredicate::from_json(class)?)
        }
        "closure" => {
            let seed = obj
                .get("seed")
                .ok_or_else(|| Error::FittingDoc("closure spec needs a \"seed\"".into()))?;
            fitting_closure(lat, &spec_seed_indices(lat, seed)?)
        }
        "slr" => Ok(hfunction_from_spec_json(lat, v)?.slr_set().clone()),
        "product" => {
            let base = obj
                .get("base")
                .ok_or_else(|| Error::FittingDoc("product spec needs a \"base\"".into()))?;
            let class = obj
                .get("class")
                .ok_or_else(|| Error::FittingDoc("product spec needs a \"class\"".into()))?;
            let f = from_spec_json(lat, base)?;
            product_with_class(&f, &ClassPredicate::from_json(class)?)
        }
        "hall_pullback" => {
            let base = obj
                .get("base")
                .ok_or_else(|| Error::FittingDoc("hall_pullback spec needs a \"base\"".into()))?;
            let f = from_spec_json(lat, base)?;
            hall_pullback_set(lat, &f, &spec_primes(obj)?)
        }
        other => Err(Error::FittingDoc(format!("unknown set kind \"{other}\""))),
    }
}

/// Convenience wrapper over [`from_spec_json`] for raw text.
pub fn from_spec_json_str(lat: &SubgroupLattice, s: &str) -> Result<FittingSet> {
    from_spec_json(lat, &serde_json::from_str(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;
    use crate::perm::Perm;

    fn make(name: &str, degree: usize, gens: &str) -> Arc<Group> {
        Group::parse(
            &format!(r#"{{"name":"{name}","degree":{degree},"generators":{gens}}}"#),
            DEFAULT_ORDER_CAP,
        )
        .unwrap()
    }

    fn s3() -> Arc<Group> {
        make("S3", 3, "[[[1,2]],[[1,2,3]]]")
    }

    fn s4() -> Arc<Group> {
        make("S4", 4, "[[[1,2]],[[1,2,3,4]]]")
    }

    fn pin(ps: &[u64]) -> Pi {
        Pi::In(PrimeSet::new(ps.iter().copied()))
    }

    fn index_of_generated(g: &Arc<Group>, cycles: &[Vec<usize>]) -> usize {
        let lat = g.lattice().unwrap();
        let e = g
            .index_of_perm(&Perm::from_cycles(g.degree(), cycles).unwrap())
            .unwrap();
        lat.index_of(&g.subgroup_generated(&[e]).unwrap()).unwrap()
    }

    #[test]
    fn axiom_scan_on_s3_families() {
        let g = s3();
        let lat = g.lattice().unwrap();
        // {1, three C2}: indices 0..=3 by (order, mask) sorting.
        let good = Bitset::from_indices(6, [0, 1, 2, 3]);
        assert!(verify_axioms(&lat, &good).unwrap().passed());
        // One C2 alone fails conjugation with a concrete witness.
        let single = Bitset::from_indices(6, [0, 1]);
        match verify_axioms(&lat, &single).unwrap() {
            AxiomVerdict::FailConjugation { member, by, image } => {
                assert_eq!(member, 1);
                assert_eq!(lat.conj_index(1, by), image);
                assert!(!good.is_empty());
            }
            other => panic!("expected conjugation failure, got {other:?}"),
        }
        // The full lattice always passes.
        let all = Bitset::full(lat.len());
        assert!(verify_axioms(&lat, &all).unwrap().passed());
        // Empty family is an argument error.
        assert!(matches!(
            verify_axioms(&lat, &Bitset::new(lat.len())),
            Err(Error::EmptyFamily)
        ));
    }

    #[test]
    fn axiom_two_failure_has_product_witness() {
        // In D8 = <(1 2 3 4), (1 3)>, the two Klein subgroups are normal
        // and their join is D8 itself; a family holding both Kleins and
        // everything below but not D8 breaks axiom ii.
        let g = make("D8", 4, "[[[1,2,3,4]],[[1,3]]]");
        let lat = g.lattice().unwrap();
        assert_eq!(lat.len(), 10);
        let mut members = Bitset::full(lat.len());
        members.remove(lat.full_index());
        match verify_axioms(&lat, &members).unwrap() {
            AxiomVerdict::FailProduct { a, b, join } => {
                assert_eq!(join, lat.full_index());
                assert_eq!(lat.join(a, b), join);
                assert!(lat.is_normal_pair(a, join) && lat.is_normal_pair(b, join));
            }
            other => panic!("expected product failure, got {other:?}"),
        }
    }

    #[test]
    fn closure_of_a_transposition_in_s3() {
        let g = s3();
        let lat = g.lattice().unwrap();
        let c2 = index_of_generated(&g, &[vec![1, 2]]);
        let f = fitting_closure(&lat, &[c2]).unwrap();
        assert_eq!(f.member_count(), 4);
        let orders: Vec<usize> = f.members().iter().map(|i| lat.order(i)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2]);
        assert!(f.provenance().starts_with("closure(["));
    }

    #[test]
    fn closure_of_trivial_is_trivial() {
        let g = s3();
        let lat = g.lattice().unwrap();
        let f = fitting_closure(&lat, &[0]).unwrap();
        assert_eq!(f.member_count(), 1);
        assert!(f.sigma().is_empty());
    }

    #[test]
    fn closure_of_a4_in_s4() {
        let g = s4();
        let lat = g.lattice().unwrap();
        let a4 = (0..lat.len()).find(|&i| lat.order(i) == 12).unwrap();
        let f = fitting_closure(&lat, &[a4]).unwrap();
        // {1, three double-transposition C2, V4, A4}.
        assert_eq!(f.member_count(), 6);
        let orders: Vec<usize> = f.members().iter().map(|i| lat.order(i)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 4, 12]);
        for i in f.members().iter() {
            if lat.order(i) == 2 {
                assert!(lat.is_subnormal_in_g(i), "closure C2s are subnormal");
            }
        }
    }

    #[test]
    fn trace_examples() {
        let g = s4();
        let lat = g.lattice().unwrap();
        let nil = trace(&lat, &ClassPredicate::Nilpotent).unwrap();
        assert_eq!(nil.member_count(), 24);
        assert_eq!(*nil.sigma(), PrimeSet::new([2, 3]));
        let all = trace(&lat, &ClassPredicate::All).unwrap();
        assert_eq!(all.member_count(), 30);

        let s3 = s3();
        let lat3 = s3.lattice().unwrap();
        let todd = trace(
            &lat3,
            &ClassPredicate::PiGroup(Pi::NotIn(PrimeSet::new([2]))),
        )
        .unwrap();
        assert_eq!(todd.member_count(), 2);
        let orders: Vec<usize> = todd.members().iter().map(|i| lat3.order(i)).collect();
        assert_eq!(orders, vec![1, 3]);

        assert!(matches!(
            trace(&lat3, &ClassPredicate::AbelianP(2)),
            Err(Error::ClassNotApplicable(_, "fitting"))
        ));
    }

    #[test]
    fn radicals_from_cache_and_api() {
        let g = s4();
        let lat = g.lattice().unwrap();
        let nil = trace(&lat, &ClassPredicate::Nilpotent).unwrap();
        let v4 = lat.mask(nil.group_radical_index());
        assert_eq!(v4.count(), 4);
        assert!(g.is_normal_mask(v4, &g.full_mask()));
        // trace(all) radical of any H is H itself.
        let all = trace(&lat, &ClassPredicate::All).unwrap();
        for j in 0..lat.len() {
            assert_eq!(all.radical_index_of(j), j);
        }
        // {1, three C2} on S3 has trivial radical (no normal member in S3).
        let s3 = s3();
        let lat3 = s3.lattice().unwrap();
        let f = FittingSet::new(
            &lat3,
            Bitset::from_indices(6, [0, 1, 2, 3]),
            "twos".into(),
        )
        .unwrap();
        assert_eq!(f.group_radical_index(), 0);
        // Subgroup-level accessor agrees.
        let whole = lat3.subgroup(lat3.full_index());
        assert_eq!(radical(&whole, &f).unwrap().order(), 1);
    }

    #[test]
    fn sigma_examples() {
        let s3 = s3();
        let lat3 = s3.lattice().unwrap();
        let twos = FittingSet::new(
            &lat3,
            Bitset::from_indices(6, [0, 1, 2, 3]),
            "twos".into(),
        )
        .unwrap();
        assert_eq!(*twos.sigma(), PrimeSet::new([2]));
        let triv = fitting_closure(&lat3, &[0]).unwrap();
        assert!(triv.sigma().is_empty());
    }

    #[test]
    fn product_with_class_examples() {
        let s3 = s3();
        let lat3 = s3.lattice().unwrap();
        let twos = FittingSet::new(
            &lat3,
            Bitset::from_indices(6, [0, 1, 2, 3]),
            "twos".into(),
        )
        .unwrap();
        let eodd = ClassPredicate::PiGroup(Pi::NotIn(PrimeSet::new([2])));
        let prod = product_with_class(&twos, &eodd).unwrap();
        // {1, three C2, C3}: S3 itself fails (S3 radical is 1, S3 not odd).
        assert_eq!(prod.member_count(), 5);
        assert!(!prod.is_member(lat3.full_index()));

        let all = product_with_class(&twos, &ClassPredicate::All).unwrap();
        assert_eq!(all.member_count(), 6);

        // Two-closed subgroups of S4: trace(2-groups) composed with odd.
        let s4 = s4();
        let lat4 = s4.lattice().unwrap();
        let two_groups = trace(&lat4, &ClassPredicate::PGroup(2)).unwrap();
        assert_eq!(two_groups.member_count(), 20);
        let closed2 = product_with_class(&two_groups, &eodd).unwrap();
        assert_eq!(closed2.member_count(), 25);
        // Excluded: exactly S4 and the four S3s.
        let excluded: Vec<usize> = (0..lat4.len())
            .filter(|&i| !closed2.is_member(i))
            .collect();
        assert_eq!(excluded.len(), 5);
        for &i in &excluded {
            assert!(lat4.order(i) == 6 || lat4.order(i) == 24);
        }
    }

    #[test]
    fn semilocal_equality_examples() {
        let s4 = s4();
        let lat4 = s4.lattice().unwrap();
        let two_groups = trace(&lat4, &ClassPredicate::PGroup(2)).unwrap();
        let closed2 = product_with_class(
            &two_groups,
            &ClassPredicate::PiGroup(Pi::NotIn(PrimeSet::new([2]))),
        )
        .unwrap();
        assert!(semilocal_equality(&closed2, &PrimeSet::new([2]))
            .unwrap()
            .is_ok());
        // trace(nilpotent 2-groups) on S3 is not semilocal for pi = {2}:
        // C3 has trivial radical and odd order, so it joins the product.
        let s3 = s3();
        let lat3 = s3.lattice().unwrap();
        let n2 = trace(&lat3, &ClassPredicate::NilpotentPi(pin(&[2]))).unwrap();
        match semilocal_equality(&n2, &PrimeSet::new([2])).unwrap() {
            Err(witness) => assert_eq!(lat3.order(witness), 3),
            Ok(()) => panic!("expected a witness"),
        }
        // The full lattice is semilocal for any pi.
        let all = trace(&lat3, &ClassPredicate::All).unwrap();
        assert!(semilocal_equality(&all, &PrimeSet::new([5]))
            .unwrap()
            .is_ok());
    }

    #[test]
    fn hall_pullback_examples() {
        let s4 = s4();
        let lat = s4.lattice().unwrap();
        // Seed: the normal V4. Closure adds its subgroups and conjugates.
        let v4 = (0..lat.len())
            .find(|&i| lat.order(i) == 4 && lat.is_normal_in_g(i))
            .unwrap();
        let f = fitting_closure(&lat, &[v4]).unwrap();
        assert_eq!(f.member_count(), 5);
        let m = hall_pullback_set(&lat, &f, &PrimeSet::new([2])).unwrap();
        // {1, three double-transposition C2, four C3, V4, A4}.
        assert_eq!(m.member_count(), 10);
        let orders: Vec<usize> = m.members().iter().map(|i| lat.order(i)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);

        // trace(all) pulls back to everything.
        let all = trace(&lat, &ClassPredicate::All).unwrap();
        let m2 = hall_pullback_set(&lat, &all, &PrimeSet::new([2])).unwrap();
        assert_eq!(m2.member_count(), 30);

        // {1, three C2} on S3 pulls back to all six subgroups.
        let s3 = s3();
        let lat3 = s3.lattice().unwrap();
        let twos = FittingSet::new(
            &lat3,
            Bitset::from_indices(6, [0, 1, 2, 3]),
            "twos".into(),
        )
        .unwrap();
        let m3 = hall_pullback_set(&lat3, &twos, &PrimeSet::new([2])).unwrap();
        assert_eq!(m3.member_count(), 6);

        // Non-pi-soluble ambient group is rejected.
        let a5 = make("A5", 5, "[[[1,2,3,4,5]],[[1,2,3]]]");
        let lat5 = a5.lattice().unwrap();
        let triv5 = fitting_closure(&lat5, &[0]).unwrap();
        assert!(matches!(
            hall_pullback_set(&lat5, &triv5, &PrimeSet::new([2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn s3_has_exactly_six_fitting_sets() {
        let g = s3();
        let lat = g.lattice().unwrap();
        let all = enumerate_all(&lat, 12).unwrap();
        assert_eq!(all.len(), 6);
        let counts: Vec<usize> = all.iter().map(|f| f.member_count()).collect();
        assert_eq!(counts, vec![1, 4, 2, 5, 3, 6]);
        // Gate rejects when the class count is too high.
        assert!(matches!(
            enumerate_all(&lat, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn explicit_family_with_broken_axiom_is_rejected() {
        let g = s3();
        let lat = g.lattice().unwrap();
        let bad = Bitset::from_indices(6, [0, 1]);
        assert!(matches!(
            FittingSet::new(&lat, bad, "bad".into()),
            Err(Error::AxiomViolation { axiom: "iii", .. })
        ));
    }

    #[test]
    fn spec_documents_build_every_kind() {
        let g = s4();
        let lat = g.lattice().unwrap();

        let t = from_spec_json_str(&lat, r#"{"kind":"trace","class":{"name":"nilpotent"}}"#)
            .unwrap();
        assert!(t.same_members(&trace(&lat, &ClassPredicate::Nilpotent).unwrap()));

        // Closure of the normal V4 = <(1 2)(3 4), (1 3)(2 4)>.
        let c = from_spec_json_str(
            &lat,
            r#"{"kind":"closure","seed":[[[[1,2],[3,4]],[[1,3],[2,4]]]]}"#,
        )
        .unwrap();
        assert_eq!(c.member_count(), 5);

        // The trivial H-function on pi = {2}: members are the 2'-subgroups
        // {1, four C3}; integrated and invariable but not full.
        let slr_doc =
            r#"{"kind":"slr","pi":[2],"f":{"2":{"kind":"trace","class":{"name":"trivial"}}}}"#;
        let s = from_spec_json_str(&lat, slr_doc).unwrap();
        assert_eq!(s.member_count(), 5);
        let h =
            hfunction_from_spec_json(&lat, &serde_json::from_str(slr_doc).unwrap()).unwrap();
        assert!(h.integrated && h.invariable && !h.full);
        assert!(h.slr_set().same_members(&s));

        let p = from_spec_json_str(
            &lat,
            r#"{"kind":"product","base":{"kind":"trace","class":{"name":"trivial"}},"class":{"name":"p_group","p":2}}"#,
        )
        .unwrap();
        assert!(p.same_members(&trace(&lat, &ClassPredicate::PGroup(2)).unwrap()));

        let hp = from_spec_json_str(
            &lat,
            r#"{"kind":"hall_pullback","pi":[2],"base":{"kind":"closure","seed":[[[[1,2],[3,4]],[[1,3],[2,4]]]]}}"#,
        )
        .unwrap();
        assert_eq!(hp.member_count(), 10);
    }

    #[test]
    fn spec_documents_reject_malformed_input() {
        let g = make("A4", 4, "[[[1,2,3]],[[1,2],[3,4]]]");
        let lat = g.lattice().unwrap();
        assert!(matches!(
            from_spec_json_str(&lat, r#"{"kind":"mystery"}"#),
            Err(Error::FittingDoc(_))
        ));
        assert!(matches!(
            from_spec_json_str(&lat, r#"{"kind":"trace"}"#),
            Err(Error::FittingDoc(_))
        ));
        // (1 2) is not an element of A4.
        assert!(matches!(
            from_spec_json_str(&lat, r#"{"kind":"closure","seed":[[[[1,2]]]]}"#),
            Err(Error::FittingDoc(_))
        ));
        assert!(matches!(
            from_spec_json_str(&lat, r#"{"kind":"slr","pi":[4],"f":{}}"#),
            Err(Error::FittingDoc(_))
        ));
        assert!(matches!(
            from_spec_json_str(
                &lat,
                r#"{"kind":"slr","pi":[2],"f":{"2":{"kind":"trace","class":{"name":"trivial"}},"3":{"kind":"trace","class":{"name":"trivial"}}}}"#
            ),
            Err(Error::Precondition(_))
        ));
    }
}
