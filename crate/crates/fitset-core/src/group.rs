//! Finite groups materialized as full multiplication tables.
//!
//! A `Group` is built from permutation generators. Elements are enumerated
//! breadth-first from the identity, multiplying on the right by each
//! generator; within each breadth level the newly found elements are sorted
//! by lexicographic image vector. The identity is always element 0, so the
//! ordering (and hence every mask, table and report downstream) is fully
//! reproducible from the generator list.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Deserialize;

use crate::bitset::Bitset;
use crate::classes::ClassPredicate;
use crate::error::{Error, Result};
use crate::lattice::LatticeData;
use crate::perm::Perm;
use crate::primes::{sigma_primes, PrimeSet};
use crate::quotient::SectionData;

/// Default cap on the order of a materialized group.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// Hard ceiling imposed by the u16 index representation.
pub const MAX_ORDER_CAP: usize = 65_000;

#[derive(Deserialize)]
struct GroupDoc {
    name: String,
    degree: usize,
    generators: Vec<Vec<Vec<usize>>>,
}

pub struct Group {
    name: String,
    degree: usize,
    elements: Vec<Perm>,
    elem_index: HashMap<Perm, u16>,
    table: Vec<u16>,
    inv: Vec<u16>,
    generators: Vec<u16>,
    pub(crate) caches: Caches,
}

#[derive(Default)]
pub(crate) struct Caches {
    pub(crate) lattice: OnceLock<Arc<LatticeData>>,
    pub(crate) normal_between: Mutex<HashMap<(Bitset, Bitset), Arc<Vec<Bitset>>>>,
    pub(crate) section_class: Mutex<HashMap<(Bitset, Bitset, ClassPredicate), bool>>,
    pub(crate) sections: Mutex<HashMap<(Bitset, Bitset), Arc<SectionData>>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl Group {
    /// Parse a group document (JSON with `name`, `degree` and `generators`
    /// as cycle lists in 1-based notation) and materialize the group.
    pub fn parse(text: &str, cap: usize) -> Result<Arc<Group>> {
        let doc: GroupDoc =
            serde_json::from_str(text).map_err(|e| Error::GroupDoc(e.to_string()))?;
        if doc.degree == 0 {
            return Err(Error::GroupDoc("degree must be positive".into()));
        }
        let mut gens = Vec::new();
        for cycles in &doc.generators {
            gens.push(Perm::from_cycles(doc.degree, cycles)?);
        }
        Group::from_generators(&doc.name, doc.degree, gens, cap)
    }

    /// Materialize the group generated by `gens` inside the symmetric group
    /// of the given degree. Fails if more than `cap` elements appear.
    pub fn from_generators(
        name: &str,
        degree: usize,
        gens: Vec<Perm>,
        cap: usize,
    ) -> Result<Arc<Group>> {
        let cap = cap.min(MAX_ORDER_CAP);
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::GroupDoc(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        let mut uniq_gens: Vec<Perm> = Vec::new();
        for g in &gens {
            if !uniq_gens.contains(g) {
                uniq_gens.push(g.clone());
            }
        }

        let mut elements = vec![Perm::identity(degree)];
        let mut elem_index: HashMap<Perm, u16> = HashMap::new();
        elem_index.insert(elements[0].clone(), 0);
        let mut frontier: Vec<usize> = vec![0];
        while !frontier.is_empty() {
            let mut fresh: Vec<Perm> = Vec::new();
            for &i in &frontier {
                for g in &uniq_gens {
                    let p = elements[i].compose(g);
                    if !elem_index.contains_key(&p) && !fresh.contains(&p) {
                        fresh.push(p);
                    }
                }
            }
            fresh.sort();
            frontier = Vec::new();
            for p in fresh {
                if elements.len() >= cap {
                    return Err(Error::OrderCap { cap });
                }
                let idx = elements.len() as u16;
                elem_index.insert(p.clone(), idx);
                elements.push(p);
                frontier.push(idx as usize);
            }
        }

        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = elements[a].compose(&elements[b]);
                table[a * n + b] = *elem_index
                    .get(&p)
                    .ok_or_else(|| Error::Internal("product escaped enumeration".into()))?;
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let p = elements[a].inverse();
            inv[a] = elem_index[&p];
        }
        let generators = uniq_gens.iter().map(|g| elem_index[g]).collect();

        Ok(Arc::new(Group {
            name: name.to_string(),
            degree,
            elements,
            elem_index,
            table,
            inv,
            generators,
            caches: Caches::default(),
        }))
    }

    /// Build directly from an already-consistent element list and table.
    /// Used for derived groups (sections, regular rebuilds); the caller
    /// guarantees the data describes a group with identity at index 0.
    pub(crate) fn from_table(
        name: String,
        degree: usize,
        elements: Vec<Perm>,
        table: Vec<u16>,
        generators: Vec<u16>,
    ) -> Arc<Group> {
        let n = elements.len();
        let mut elem_index = HashMap::new();
        for (i, p) in elements.iter().enumerate() {
            elem_index.insert(p.clone(), i as u16);
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let mut found = None;
            for b in 0..n {
                if table[a * n + b] == 0 {
                    found = Some(b as u16);
                    break;
                }
            }
            inv[a] = found.expect("every element has an inverse");
        }
        Arc::new(Group {
            name,
            degree,
            elements,
            elem_index,
            table,
            inv,
            generators,
            caches: Caches::default(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[u16] {
        &self.generators
    }

    pub fn index_of_perm(&self, p: &Perm) -> Option<usize> {
        self.elem_index.get(p).map(|&i| i as usize)
    }

    /// Element index of the product `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^-1 * h * g`.
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// `[a, b] = a^-1 * b^-1 * a * b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Multiplicative order of element `i`.
    pub fn order_of(&self, i: usize) -> usize {
        let mut x = i;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, i);
            n += 1;
        }
        n
    }

    /// Primes dividing the group order.
    pub fn sigma(&self) -> PrimeSet {
        sigma_primes(self.order() as u64)
    }

    /// Subgroup generated by the elements of `seed` (identity always included).
    pub fn mask_closure(&self, seed: &Bitset) -> Bitset {
        let mut mask = seed.clone();
        mask.insert(0);
        let mut work: Vec<usize> = mask.iter().collect();
        let mut members = work.clone();
        while let Some(x) = work.pop() {
            // Right-multiply every current member by x and x by every member.
            let mut i = 0;
            while i < members.len() {
                let m = members[i];
                for prod in [self.mul(m, x), self.mul(x, m)] {
                    if !mask.contains(prod) {
                        mask.insert(prod);
                        members.push(prod);
                        work.push(prod);
                    }
                }
                i += 1;
            }
        }
        mask
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup_generated(&self, indices: &[usize]) -> Result<Bitset> {
        let n = self.order();
        let mut seed = Bitset::new(n);
        for &i in indices {
            if i >= n {
                return Err(Error::ElementIndex { index: i, order: n });
            }
            seed.insert(i);
        }
        Ok(self.mask_closure(&seed))
    }

    /// Image of a subgroup mask under conjugation by `g`.
    pub fn conj_mask(&self, mask: &Bitset, g: usize) -> Bitset {
        let mut out = Bitset::new(mask.len());
        for h in mask.iter() {
            out.insert(self.conj(h, g));
        }
        out
    }

    /// Whether a mask is closed under multiplication (and hence a subgroup,
    /// since the group is finite).
    pub fn is_subgroup_mask(&self, mask: &Bitset) -> bool {
        if !mask.contains(0) {
            return false;
        }
        let members: Vec<usize> = mask.iter().collect();
        for &a in &members {
            for &b in &members {
                if !mask.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `sub` is normal in `ambient` (both subgroup masks,
    /// `sub` contained in `ambient`).
    pub fn is_normal_mask(&self, sub: &Bitset, ambient: &Bitset) -> bool {
        for g in ambient.iter() {
            for h in sub.iter() {
                if !sub.contains(self.conj(h, g)) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest subgroup containing `seed` that is normal in `ambient`;
    /// `seed` must be contained in `ambient`.
    pub fn normal_closure_in(&self, ambient: &Bitset, seed: &Bitset) -> Bitset {
        let mut mask = self.mask_closure(seed);
        loop {
            let mut grew = false;
            let mut add = Bitset::new(mask.len());
            for g in ambient.iter() {
                for h in mask.iter() {
                    let c = self.conj(h, g);
                    if !mask.contains(c) {
                        add.insert(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return mask;
            }
            mask.union_with(&add);
            mask = self.mask_closure(&mask);
        }
    }

    /// Closure of `base` together with all commutators `[a, b]`,
    /// `a` from `a_mask`, `b` from `b_mask`.
    pub fn commutator_subgroup(&self, a_mask: &Bitset, b_mask: &Bitset, base: &Bitset) -> Bitset {
        let mut seed = base.clone();
        for a in a_mask.iter() {
            for b in b_mask.iter() {
                seed.insert(self.commutator(a, b));
            }
        }
        self.mask_closure(&seed)
    }

    /// Full-group mask.
    pub fn full_mask(&self) -> Bitset {
        Bitset::full(self.order())
    }

    /// Mask containing only the identity.
    pub fn trivial_mask(&self) -> Bitset {
        Bitset::from_indices(self.order(), [0])
    }

    /// All subgroups of `h` that contain `k` and are normal in `h`, in
    /// ascending (order, mask) order. `k` must be normal in `h`. Results are
    /// cached per (h, k).
    pub fn normal_masks_between(&self, h: &Bitset, k: &Bitset) -> Arc<Vec<Bitset>> {
        let key = (h.clone(), k.clone());
        if let Some(hit) = self.caches.normal_between.lock().unwrap().get(&key) {
            return hit.clone();
        }
        debug_assert!(k.is_subset(h));
        debug_assert!(self.is_normal_mask(k, h));
        // Normal closures of single cosets over k generate every normal
        // subgroup between k and h under join; close the family under join.
        let mut family: Vec<Bitset> = vec![k.clone()];
        let mut atoms: Vec<Bitset> = Vec::new();
        for x in h.iter() {
            if k.contains(x) {
                continue;
            }
            let mut seed = k.clone();
            seed.insert(x);
            let ncl = self.normal_closure_in(h, &seed);
            if !atoms.contains(&ncl) {
                atoms.push(ncl);
            }
        }
        family.extend(atoms.iter().cloned());
        family.sort();
        family.dedup();
        loop {
            let mut fresh: Vec<Bitset> = Vec::new();
            for a in &family {
                for b in &atoms {
                    if b.is_subset(a) {
                        continue;
                    }
                    let join = self.mask_closure(&a.union(b));
                    if !family.contains(&join) && !fresh.contains(&join) {
                        fresh.push(join);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            family.extend(fresh);
            family.sort();
            family.dedup();
        }
        family.sort_by_key(|m| (m.count(), m.clone()));
        let out = Arc::new(family);
        self.caches
            .normal_between
            .lock()
            .unwrap()
            .insert(key, out.clone());
        out
    }

    /// All normal subgroups of the whole group, ascending by (order, mask).
    pub fn normal_masks(&self) -> Arc<Vec<Bitset>> {
        self.normal_masks_between(&self.full_mask(), &self.trivial_mask())
    }
}
