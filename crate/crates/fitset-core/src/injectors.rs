//! Injector computation for Fitting sets.
//!
//! An F-injector of G is a subgroup V such that V ∩ K is F-maximal in K for
//! every subnormal K of G. Two routes are provided: an exhaustive search over
//! the subgroup lattice (`injectors_brute`, the ground truth), and a
//! constructive route (`injectors_theorem_b`) for semilocal sets defined by a
//! full invariable H-function, which reads the injectors off as pullbacks of
//! Hall subgroups of the quotient by the f-radical.

use std::collections::HashMap;

use crate::classes::{class_member, section_member, ClassPredicate};
use crate::error::{Error, Result};
use crate::fitting::FittingSet;
use crate::hfunction::HFunction;
use crate::lattice::{product_mask, Subgroup, SubgroupLattice};
use crate::primes::{pi_part, Pi};

/// How an injector list was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Exhaustive lattice search straight from the definition.
    Brute,
    /// Hall-subgroup pullback through the f-radical quotient.
    TheoremB,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Brute => write!(f, "brute"),
            Method::TheoremB => write!(f, "theorem_b"),
        }
    }
}

/// The injectors of a group for one Fitting set, with their conjugacy
/// structure. `indices[i]` is the index |G : V| of `injectors[i]` in G.
#[derive(Clone)]
pub struct InjectorResult {
    lattice: SubgroupLattice,
    injectors: Vec<usize>,
    conjugacy_class_count: usize,
    indices: Vec<usize>,
    method: Method,
    /// For the constructive route on a pi-soluble group: pairs
    /// (Hall pi'-subgroup index, injector index) realizing each injector as
    /// the product of that Hall subgroup with the f-radical.
    decompositions: Option<Vec<(usize, usize)>>,
}

impl std::fmt::Debug for InjectorResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InjectorResult")
            .field("injectors", &self.injectors)
            .field("conjugacy_class_count", &self.conjugacy_class_count)
            .field("indices", &self.indices)
            .field("method", &self.method)
            .field("decompositions", &self.decompositions)
            .finish()
    }
}

impl InjectorResult {
    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    /// Lattice indices of the injectors, ascending.
    pub fn injector_indices(&self) -> &[usize] {
        &self.injectors
    }

    pub fn injector_subgroups(&self) -> Vec<Subgroup> {
        self.injectors
            .iter()
            .map(|&i| self.lattice.subgroup(i))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.injectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.injectors.is_empty()
    }

    pub fn conjugacy_class_count(&self) -> usize {
        self.conjugacy_class_count
    }

    /// |G : V| for each injector, parallel to `injector_indices`.
    pub fn indices_in_group(&self) -> &[usize] {
        &self.indices
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn decompositions(&self) -> Option<&[(usize, usize)]> {
        self.decompositions.as_deref()
    }

    /// Same set of injector indices as another result.
    pub fn same_injectors(&self, other: &InjectorResult) -> bool {
        self.injectors == other.injectors
    }
}

/// Wrap a raw injector index list, enforcing the facts every injector list
/// must satisfy: each entry is a member, is F-maximal in G, and contains the
/// F-radical of G. Violations are internal errors, not user errors.
fn finish(
    f: &FittingSet,
    mut injectors: Vec<usize>,
    method: Method,
    decompositions: Option<Vec<(usize, usize)>>,
) -> Result<InjectorResult> {
    let lat = f.lattice();
    injectors.sort_unstable();
    injectors.dedup();
    let fmax = f_maximal_subgroups(f);
    let rad_mask = lat.mask(f.group_radical_index()).clone();
    for &v in &injectors {
        if !f.is_member(v) {
            return Err(Error::Internal(format!(
                "injector candidate {v} is not a member of the Fitting set"
            )));
        }
        if !fmax.contains(&v) {
            return Err(Error::Internal(format!(
                "injector candidate {v} is not maximal among members"
            )));
        }
        if !rad_mask.is_subset(lat.mask(v)) {
            return Err(Error::Internal(format!(
                "injector candidate {v} does not contain the radical"
            )));
        }
    }
    let mut class_ids: Vec<usize> = injectors.iter().map(|&v| lat.class_of(v)).collect();
    class_ids.sort_unstable();
    class_ids.dedup();
    let full_order = lat.order(lat.full_index());
    let indices = injectors.iter().map(|&v| full_order / lat.order(v)).collect();
    Ok(InjectorResult {
        lattice: lat.clone(),
        injectors,
        conjugacy_class_count: class_ids.len(),
        indices,
        method,
        decompositions,
    })
}

/// Members of the Fitting set contained in `ambient` and maximal under
/// inclusion among such members. Ascending lattice indices.
pub fn f_maximal_in(f: &FittingSet, ambient: usize) -> Vec<usize> {
    let lat = f.lattice();
    let inside: Vec<usize> = lat
        .contained(ambient)
        .iter()
        .map(|&i| i as usize)
        .filter(|&i| f.is_member(i))
        .collect();
    inside
        .iter()
        .copied()
        .filter(|&m| {
            !inside
                .iter()
                .any(|&u| u != m && lat.contained_mask(u).contains(m))
        })
        .collect()
}

/// Members maximal under inclusion in the whole group.
pub fn f_maximal_subgroups(f: &FittingSet) -> Vec<usize> {
    f_maximal_in(f, f.lattice().full_index())
}

/// Injector indices of the subgroup at `ambient`, straight from the
/// definition: V <= ambient such that V meet K is F-maximal in K for every K
/// subnormal in ambient. Ascending lattice indices.
pub fn injector_indices_in(f: &FittingSet, ambient: usize) -> Vec<usize> {
    let lat = f.lattice();
    let subnormals: Vec<usize> = lat.subnormal_in(ambient).iter().collect();
    let fmax_in: HashMap<usize, Vec<usize>> = subnormals
        .iter()
        .map(|&k| (k, f_maximal_in(f, k)))
        .collect();
    // Taking K = ambient itself shows every injector is F-maximal in ambient,
    // so those are the only candidates worth testing.
    fmax_in[&ambient]
        .iter()
        .copied()
        .filter(|&v| {
            subnormals
                .iter()
                .all(|&k| fmax_in[&k].contains(&lat.meet(v, k)))
        })
        .collect()
}

/// All F-injectors of the whole group by exhaustive search. The result may
/// be empty: existence is a theorem with hypotheses, not a general fact.
pub fn injectors_brute(f: &FittingSet) -> Result<InjectorResult> {
    let lat = f.lattice();
    let inj = injector_indices_in(f, lat.full_index());
    finish(f, inj, Method::Brute, None)
}

/// Outcome of the constructive route: either a computed injector list or a
/// report of exactly which hypotheses failed. Never a silent fallback.
#[derive(Clone, Debug)]
pub enum TheoremBInjectors {
    Computed(InjectorResult),
    HypothesesUnmet { reasons: Vec<String> },
}

impl TheoremBInjectors {
    pub fn computed(&self) -> Option<&InjectorResult> {
        match self {
            TheoremBInjectors::Computed(r) => Some(r),
            TheoremBInjectors::HypothesesUnmet { .. } => None,
        }
    }
}

/// Constructive injector computation for F = SLR(f) with f full and
/// invariable, requiring G/G_f pi-soluble: the injectors are exactly the
/// subgroups S >= G_f with |S : G_f| the pi'-part of |G : G_f| (the pullbacks
/// of the Hall pi'-subgroups of G/G_f). When G itself is pi-soluble, each
/// injector is also realized as a product (Hall pi'-subgroup of G) * G_f and
/// the witnessing pairs are emitted.
pub fn injectors_theorem_b(hf: &HFunction) -> Result<TheoremBInjectors> {
    let f = hf.slr_set();
    let lat = f.lattice();
    let g = lat.group().clone();
    let pi = Pi::In(hf.pi().clone());
    let gf = hf.group_f_radical_index();
    let gf_mask = lat.mask(gf).clone();

    let mut reasons = Vec::new();
    if !hf.full {
        reasons.push("the H-function is not full".to_string());
    }
    if !hf.invariable {
        reasons.push("the H-function is not invariable".to_string());
    }
    let quotient_cls = ClassPredicate::PiSoluble(pi.clone());
    if !section_member(&g, &g.full_mask(), &gf_mask, &quotient_cls)? {
        reasons.push("the quotient by the f-radical is not pi-soluble".to_string());
    }
    if !reasons.is_empty() {
        return Ok(TheoremBInjectors::HypothesesUnmet { reasons });
    }

    let gf_order = lat.order(gf) as u64;
    let quotient_order = g.order() as u64 / gf_order;
    let target = gf_order * pi_part(quotient_order, &pi.complement());
    let injectors: Vec<usize> = (0..lat.len())
        .filter(|&s| lat.order(s) as u64 == target && gf_mask.is_subset(lat.mask(s)))
        .collect();

    let decompositions = if class_member(&g, &quotient_cls)? {
        let mut pairs = Vec::new();
        for h in lat.hall_subgroups(&pi.complement()) {
            let pm = product_mask(&g, lat.mask(h), &gf_mask);
            let idx = lat.index_of(&pm).ok_or_else(|| {
                Error::Internal(
                    "product of a Hall subgroup with the normal f-radical is not a subgroup"
                        .to_string(),
                )
            })?;
            pairs.push((h, idx));
        }
        Some(pairs)
    } else {
        None
    };

    Ok(TheoremBInjectors::Computed(finish(
        f,
        injectors,
        Method::TheoremB,
        decompositions,
    )?))
}
