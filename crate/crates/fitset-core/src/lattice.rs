//! The complete subgroup lattice of a materialized group.
//!
//! All subgroups are found by closing the family of cyclic subgroups under
//! pairwise join; the lattice is sorted ascending by (order, mask), so index
//! 0 is the trivial subgroup and the last index is the whole group.
//! Normality, conjugacy classes, normalizers and inclusion are computed
//! eagerly; pairwise normality, pairwise subnormality and joins are derived
//! lazily and cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::primes::{pi_part, Pi};

/// Default cap on how many subgroups a lattice may hold.
pub const DEFAULT_SUBGROUP_CAP: usize = 20_000;

pub struct LatticeData {
    pub masks: Vec<Bitset>,
    pub orders: Vec<usize>,
    pub index_of: HashMap<Bitset, u32>,
    /// Ascending list of indices contained in each subgroup (including it).
    pub contained: Vec<Vec<u32>>,
    /// Same containment data as index masks.
    pub contained_mask: Vec<Bitset>,
    /// Lattice index of each subgroup's normalizer in the whole group.
    pub normalizer: Vec<u32>,
    pub normal_in_g: Vec<bool>,
    pub subnormal_in_g: Vec<bool>,
    /// Conjugacy class id per subgroup; classes listed by minimal member.
    pub class_of: Vec<u32>,
    pub classes: Vec<Vec<u32>>,
    /// Per group generator, the conjugation action on lattice indices.
    pub conj_by_gen: Vec<Vec<u32>>,
    normal_pairs: OnceLock<Vec<Bitset>>,
    subnormal_pairs: OnceLock<Vec<Bitset>>,
    join_memo: Mutex<HashMap<(u32, u32), u32>>,
}

fn build_lattice(g: &Group, cap: usize) -> Result<LatticeData> {
    let n = g.order();
    // Cyclic subgroups are the atoms of the join closure.
    let mut atoms: Vec<Bitset> = Vec::new();
    let trivial = g.trivial_mask();
    for x in 1..n {
        let m = g.subgroup_generated(&[x])?;
        if !atoms.contains(&m) {
            atoms.push(m);
        }
    }
    let mut family: Vec<Bitset> = vec![trivial.clone()];
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
                let join = g.mask_closure(&a.union(b));
                if family.binary_search(&join).is_err() && !fresh.contains(&join) {
                    fresh.push(join);
                    if family.len() + fresh.len() > cap {
                        return Err(Error::SubgroupCap { cap });
                    }
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

    let count = family.len();
    let masks = family;
    let orders: Vec<usize> = masks.iter().map(|m| m.count()).collect();
    let mut index_of = HashMap::new();
    for (i, m) in masks.iter().enumerate() {
        index_of.insert(m.clone(), i as u32);
    }

    let mut contained: Vec<Vec<u32>> = vec![Vec::new(); count];
    let mut contained_mask: Vec<Bitset> = vec![Bitset::new(count); count];
    for j in 0..count {
        for i in 0..count {
            if orders[i] <= orders[j] && masks[i].is_subset(&masks[j]) {
                contained[j].push(i as u32);
                contained_mask[j].insert(i);
            }
        }
    }

    let full_mask = g.full_mask();
    let mut normalizer = vec![0u32; count];
    for i in 0..count {
        let mut nmask = Bitset::new(n);
        for x in 0..n {
            if g.conj_mask(&masks[i], x) == masks[i] {
                nmask.insert(x);
            }
        }
        normalizer[i] = *index_of
            .get(&nmask)
            .ok_or_else(|| Error::Internal("normalizer not in lattice".into()))?;
    }
    let full_index = (count - 1) as u32;
    let normal_in_g: Vec<bool> = (0..count).map(|i| normalizer[i] == full_index).collect();

    let gens: Vec<usize> = g.generators().iter().map(|&x| x as usize).collect();
    let mut conj_by_gen: Vec<Vec<u32>> = Vec::new();
    for &x in &gens {
        let mut map = vec![0u32; count];
        for i in 0..count {
            let img = g.conj_mask(&masks[i], x);
            map[i] = *index_of
                .get(&img)
                .ok_or_else(|| Error::Internal("conjugate not in lattice".into()))?;
        }
        conj_by_gen.push(map);
    }

    let mut class_of = vec![u32::MAX; count];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for start in 0..count {
        if class_of[start] != u32::MAX {
            continue;
        }
        let cid = classes.len() as u32;
        let mut orbit = vec![start as u32];
        class_of[start] = cid;
        let mut work = vec![start];
        while let Some(i) = work.pop() {
            for map in &conj_by_gen {
                let j = map[i] as usize;
                if class_of[j] == u32::MAX {
                    class_of[j] = cid;
                    orbit.push(j as u32);
                    work.push(j);
                }
            }
        }
        orbit.sort();
        classes.push(orbit);
    }

    // Subnormality by iterated normal closure descent.
    let mut subnormal_in_g = vec![false; count];
    for i in 0..count {
        let mut ambient = full_mask.clone();
        loop {
            let closure = g.normal_closure_in(&ambient, &masks[i]);
            if closure == masks[i] {
                subnormal_in_g[i] = true;
                break;
            }
            if closure == ambient {
                break;
            }
            ambient = closure;
        }
    }

    Ok(LatticeData {
        masks,
        orders,
        index_of,
        contained,
        contained_mask,
        normalizer,
        normal_in_g,
        subnormal_in_g,
        class_of,
        classes,
        conj_by_gen,
        normal_pairs: OnceLock::new(),
        subnormal_pairs: OnceLock::new(),
        join_memo: Mutex::new(HashMap::new()),
    })
}

impl LatticeData {
    fn normal_pairs(&self, g: &Group) -> &Vec<Bitset> {
        self.normal_pairs.get_or_init(|| {
            let count = self.masks.len();
            let mut out = vec![Bitset::new(count); count];
            for (j, row) in out.iter_mut().enumerate() {
                for &i in &self.contained[j] {
                    // i is normal in j iff j normalizes i.
                    if self.masks[j].is_subset(&self.masks[self.normalizer[i as usize] as usize]) {
                        row.insert(i as usize);
                    }
                }
            }
            let _ = g;
            out
        })
    }

    fn subnormal_pairs(&self, g: &Group) -> &Vec<Bitset> {
        self.subnormal_pairs.get_or_init(|| {
            let normal = self.normal_pairs(g);
            let count = self.masks.len();
            let mut out = vec![Bitset::new(count); count];
            // Downward transitive closure of the normality relation.
            for j in 0..count {
                let mut reach = Bitset::new(count);
                reach.insert(j);
                let mut work = vec![j];
                while let Some(k) = work.pop() {
                    for i in normal[k].iter() {
                        if !reach.contains(i) {
                            reach.insert(i);
                            work.push(i);
                        }
                    }
                }
                out[j] = reach;
            }
            out
        })
    }
}

/// A handle to a group's subgroup lattice. Cheap to clone.
#[derive(Clone)]
pub struct SubgroupLattice {
    group: Arc<Group>,
    data: Arc<LatticeData>,
}

/// A subgroup of a materialized group, identified by its element mask.
#[derive(Clone)]
pub struct Subgroup {
    pub group: Arc<Group>,
    pub mask: Bitset,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.mask.count()
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(o{} in {})",
            self.order(),
            self.group.name()
        )
    }
}

impl Group {
    /// The complete subgroup lattice, built once and cached.
    pub fn lattice(self: &Arc<Self>) -> Result<SubgroupLattice> {
        if let Some(data) = self.caches.lattice.get() {
            return Ok(SubgroupLattice {
                group: self.clone(),
                data: data.clone(),
            });
        }
        let data = Arc::new(build_lattice(self, DEFAULT_SUBGROUP_CAP)?);
        let data = match self.caches.lattice.set(data.clone()) {
            Ok(()) => data,
            Err(_) => self.caches.lattice.get().unwrap().clone(),
        };
        Ok(SubgroupLattice { group: self.clone(), data })
    }
}

impl SubgroupLattice {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.data.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mask(&self, i: usize) -> &Bitset {
        &self.data.masks[i]
    }

    pub fn order(&self, i: usize) -> usize {
        self.data.orders[i]
    }

    pub fn index_of(&self, mask: &Bitset) -> Option<usize> {
        self.data.index_of.get(mask).map(|&i| i as usize)
    }

    pub fn subgroup(&self, i: usize) -> Subgroup {
        Subgroup {
            group: self.group.clone(),
            mask: self.data.masks[i].clone(),
        }
    }

    /// Index of the trivial subgroup (always 0).
    pub fn trivial_index(&self) -> usize {
        0
    }

    /// Index of the whole group (always the last index).
    pub fn full_index(&self) -> usize {
        self.len() - 1
    }

    pub fn is_normal_in_g(&self, i: usize) -> bool {
        self.data.normal_in_g[i]
    }

    pub fn is_subnormal_in_g(&self, i: usize) -> bool {
        self.data.subnormal_in_g[i]
    }

    pub fn normalizer_index(&self, i: usize) -> usize {
        self.data.normalizer[i] as usize
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.data.class_of[i] as usize
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.data.classes
    }

    pub fn contained(&self, j: usize) -> &[u32] {
        &self.data.contained[j]
    }

    pub fn contained_mask(&self, j: usize) -> &Bitset {
        &self.data.contained_mask[j]
    }

    /// Whether subgroup `i` is normal in subgroup `j` (requires i <= j).
    pub fn is_normal_pair(&self, i: usize, j: usize) -> bool {
        self.data.normal_pairs(&self.group)[j].contains(i)
    }

    /// Index mask of subgroups subnormal in subgroup `j`.
    pub fn subnormal_in(&self, j: usize) -> &Bitset {
        &self.data.subnormal_pairs(&self.group)[j]
    }

    /// Lattice index of the join of two subgroups.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let key = (i.min(j) as u32, i.max(j) as u32);
        if let Some(&hit) = self.data.join_memo.lock().unwrap().get(&key) {
            return hit as usize;
        }
        let m = self
            .group
            .mask_closure(&self.data.masks[i].union(&self.data.masks[j]));
        let idx = self.data.index_of[&m];
        self.data.join_memo.lock().unwrap().insert(key, idx);
        idx as usize
    }

    /// Lattice index of the intersection of two subgroups.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let m = self.data.masks[i].intersection(&self.data.masks[j]);
        self.data.index_of[&m] as usize
    }

    /// Index of the conjugate of subgroup `i` by element `g`.
    pub fn conj_index(&self, i: usize, g: usize) -> usize {
        let m = self.group.conj_mask(&self.data.masks[i], g);
        self.data.index_of[&m] as usize
    }

    /// Least element conjugating subgroup `i` onto subgroup `j`, if any.
    pub fn conjugator(&self, i: usize, j: usize) -> Option<usize> {
        if self.data.class_of[i] != self.data.class_of[j] {
            return None;
        }
        (0..self.group.order()).find(|&x| self.conj_index(i, x) == j)
    }

    /// Proper normal subgroups maximal among proper normal subgroups.
    pub fn maximal_normal_subgroups(&self) -> Vec<usize> {
        let full = self.full_index();
        let normals: Vec<usize> = (0..self.len())
            .filter(|&i| i != full && self.data.normal_in_g[i])
            .collect();
        normals
            .iter()
            .copied()
            .filter(|&i| {
                !normals
                    .iter()
                    .any(|&j| j != i && self.data.masks[i].is_subset(&self.data.masks[j]))
            })
            .collect()
    }

    /// All Hall pi-subgroups: subgroups whose order is the full pi-part of
    /// the group order.
    pub fn hall_subgroups(&self, pi: &Pi) -> Vec<usize> {
        let target = pi_part(self.group.order() as u64, pi) as usize;
        (0..self.len()).filter(|&i| self.data.orders[i] == target).collect()
    }

    /// Hall pi-subgroups of the subgroup at index `j`.
    pub fn hall_subgroups_in(&self, pi: &Pi, j: usize) -> Vec<usize> {
        let target = pi_part(self.data.orders[j] as u64, pi) as usize;
        self.data.contained[j]
            .iter()
            .map(|&i| i as usize)
            .filter(|&i| self.data.orders[i] == target)
            .collect()
    }
}

/// Whether `sub` is normal in `ambient`; errors if parents differ or `sub`
/// is not contained in `ambient`.
pub fn is_normal(sub: &Subgroup, ambient: &Subgroup) -> Result<bool> {
    if !Arc::ptr_eq(&sub.group, &ambient.group) {
        return Err(Error::ParentMismatch);
    }
    if !sub.mask.is_subset(&ambient.mask) {
        return Err(Error::NotContained);
    }
    Ok(sub.group.is_normal_mask(&sub.mask, &ambient.mask))
}

/// Whether `sub` is subnormal in `ambient`, by normal closure descent.
pub fn is_subnormal(sub: &Subgroup, ambient: &Subgroup) -> Result<bool> {
    if !Arc::ptr_eq(&sub.group, &ambient.group) {
        return Err(Error::ParentMismatch);
    }
    if !sub.mask.is_subset(&ambient.mask) {
        return Err(Error::NotContained);
    }
    let g = &sub.group;
    let mut k = ambient.mask.clone();
    loop {
        let closure = g.normal_closure_in(&k, &sub.mask);
        if closure == sub.mask {
            return Ok(true);
        }
        if closure == k {
            return Ok(false);
        }
        k = closure;
    }
}

/// Least element conjugating `a` onto `b`, scanning elements in order.
pub fn are_conjugate(a: &Subgroup, b: &Subgroup) -> Result<Option<usize>> {
    if !Arc::ptr_eq(&a.group, &b.group) {
        return Err(Error::ParentMismatch);
    }
    let g = &a.group;
    if a.mask.count() != b.mask.count() {
        return Ok(None);
    }
    Ok((0..g.order()).find(|&x| g.conj_mask(&a.mask, x) == b.mask))
}

/// Join of two subgroups; the boolean reports whether the setwise product
/// HK already equals the join.
pub fn join(a: &Subgroup, b: &Subgroup) -> Result<(Subgroup, bool)> {
    if !Arc::ptr_eq(&a.group, &b.group) {
        return Err(Error::ParentMismatch);
    }
    let g = &a.group;
    let j = g.mask_closure(&a.mask.union(&b.mask));
    let inter = a.mask.intersection(&b.mask).count();
    let product_size = a.mask.count() * b.mask.count() / inter;
    let coincide = product_size == j.count();
    Ok((
        Subgroup {
            group: g.clone(),
            mask: j,
        },
        coincide,
    ))
}

/// Setwise product {x*y : x in a, y in b} as an element mask. The result is
/// a subgroup mask exactly when one factor normalizes the other.
pub fn product_mask(g: &Group, a: &Bitset, b: &Bitset) -> Bitset {
    let mut out = Bitset::new(g.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// Normalizer of `sub` in the whole parent group.
pub fn normalizer(sub: &Subgroup) -> Subgroup {
    let g = &sub.group;
    let mut mask = Bitset::new(g.order());
    for x in 0..g.order() {
        if g.conj_mask(&sub.mask, x) == sub.mask {
            mask.insert(x);
        }
    }
    Subgroup {
        group: g.clone(),
        mask,
    }
}

/// Elements of G centralizing the section A/B: all g with [g, a] in B for
/// every a in A. Both A and B must be normal in G with B <= A.
pub fn centralizer_of_section(
    g: &Arc<Group>,
    a: &Bitset,
    b: &Bitset,
) -> Result<Subgroup> {
    if !b.is_subset(a) {
        return Err(Error::NotContained);
    }
    let full = g.full_mask();
    if !g.is_normal_mask(a, &full) || !g.is_normal_mask(b, &full) {
        return Err(Error::NotNormal);
    }
    let mut mask = Bitset::new(g.order());
    for x in 0..g.order() {
        if a.iter().all(|aa| b.contains(g.commutator(x, aa))) {
            mask.insert(x);
        }
    }
    if !g.is_subgroup_mask(&mask) {
        return Err(Error::Internal("section centralizer not closed".into()));
    }
    Ok(Subgroup {
        group: g.clone(),
        mask,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;
    use crate::perm::Perm;
    use crate::primes::PrimeSet;

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

    #[test]
    fn s3_has_six_subgroups() {
        let lat = s3().lattice().unwrap();
        assert_eq!(lat.len(), 6);
        let orders: Vec<usize> = (0..6).map(|i| lat.order(i)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn s4_has_thirty_subgroups() {
        let lat = s4().lattice().unwrap();
        assert_eq!(lat.len(), 30);
        let mut by_order: HashMap<usize, usize> = HashMap::new();
        for i in 0..lat.len() {
            *by_order.entry(lat.order(i)).or_default() += 1;
        }
        assert_eq!(by_order[&1], 1);
        assert_eq!(by_order[&2], 9);
        assert_eq!(by_order[&3], 4);
        assert_eq!(by_order[&4], 7);
        assert_eq!(by_order[&6], 4);
        assert_eq!(by_order[&8], 3);
        assert_eq!(by_order[&12], 1);
        assert_eq!(by_order[&24], 1);
    }

    #[test]
    fn normality_and_classes_in_s4() {
        let lat = s4().lattice().unwrap();
        let normals: Vec<usize> = (0..lat.len()).filter(|&i| lat.is_normal_in_g(i)).collect();
        let normal_orders: Vec<usize> = normals.iter().map(|&i| lat.order(i)).collect();
        assert_eq!(normal_orders, vec![1, 4, 12, 24]);
        // Normal subgroups are exactly the singleton conjugacy classes.
        for i in 0..lat.len() {
            let cls = &lat.classes()[lat.class_of(i)];
            assert_eq!(lat.is_normal_in_g(i), cls.len() == 1);
        }
        // 30 subgroups fall into 11 conjugacy classes.
        assert_eq!(lat.classes().len(), 11);
    }

    #[test]
    fn orbit_stabilizer_for_subgroup_classes() {
        let lat = s4().lattice().unwrap();
        for i in 0..lat.len() {
            let class_size = lat.classes()[lat.class_of(i)].len();
            let normalizer_order = lat.order(lat.normalizer_index(i));
            assert_eq!(class_size * normalizer_order, 24);
        }
    }

    #[test]
    fn subnormal_examples() {
        let g = s4();
        let lat = g.lattice().unwrap();
        let dt = g
            .index_of_perm(&Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap())
            .unwrap();
        let c2dt = g.subgroup_generated(&[dt]).unwrap();
        let i = lat.index_of(&c2dt).unwrap();
        assert!(lat.is_subnormal_in_g(i));
        assert!(!lat.is_normal_in_g(i));

        let tr = g
            .index_of_perm(&Perm::from_cycles(4, &[vec![1, 2]]).unwrap())
            .unwrap();
        let c2 = g.subgroup_generated(&[tr]).unwrap();
        let j = lat.index_of(&c2).unwrap();
        assert!(!lat.is_subnormal_in_g(j));

        // Same answers through the standalone descent.
        let sub = lat.subgroup(i);
        let whole = lat.subgroup(lat.full_index());
        assert!(is_subnormal(&sub, &whole).unwrap());
        assert!(!is_subnormal(&lat.subgroup(j), &whole).unwrap());
    }

    #[test]
    fn normalizers_match_known_orders() {
        let g = s4();
        let lat = g.lattice().unwrap();
        let r3 = g
            .index_of_perm(&Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap())
            .unwrap();
        let c3 = g.subgroup_generated(&[r3]).unwrap();
        let i = lat.index_of(&c3).unwrap();
        assert_eq!(lat.order(lat.normalizer_index(i)), 6);

        let r4 = g
            .index_of_perm(&Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap())
            .unwrap();
        let c4 = g.subgroup_generated(&[r4]).unwrap();
        let j = lat.index_of(&c4).unwrap();
        assert_eq!(lat.order(lat.normalizer_index(j)), 8);
    }

    #[test]
    fn maximal_normal_subgroups_examples() {
        let s4 = s4();
        let lat = s4.lattice().unwrap();
        let maxn = lat.maximal_normal_subgroups();
        assert_eq!(maxn.len(), 1);
        assert_eq!(lat.order(maxn[0]), 12);

        let c6 = make("C6", 5, "[[[1,2,3],[4,5]]]");
        let lat6 = c6.lattice().unwrap();
        let maxn6 = lat6.maximal_normal_subgroups();
        let orders: Vec<usize> = maxn6.iter().map(|&i| lat6.order(i)).collect();
        assert_eq!(orders, vec![2, 3]);

        let c5 = make("C5", 5, "[[[1,2,3,4,5]]]");
        let lat5 = c5.lattice().unwrap();
        let maxn5 = lat5.maximal_normal_subgroups();
        assert_eq!(maxn5, vec![0]);
    }

    #[test]
    fn hall_subgroups_of_s4() {
        let lat = s4().lattice().unwrap();
        let h2 = lat.hall_subgroups(&Pi::In(PrimeSet::new([2])));
        assert_eq!(h2.len(), 3);
        for &i in &h2 {
            assert_eq!(lat.order(i), 8);
        }
        let h3 = lat.hall_subgroups(&Pi::In(PrimeSet::new([3])));
        assert_eq!(h3.len(), 4);
        let h23 = lat.hall_subgroups(&Pi::In(PrimeSet::new([2, 3])));
        assert_eq!(h23.len(), 1);
        let h_empty = lat.hall_subgroups(&Pi::In(PrimeSet::empty()));
        assert_eq!(h_empty, vec![0]);
    }

    #[test]
    fn join_reports_product_coincidence() {
        let g = s4();
        let lat = g.lattice().unwrap();
        // V4 (normal) joined with a C3: product is A4 setwise.
        let v4 = (0..lat.len())
            .find(|&i| lat.order(i) == 4 && lat.is_normal_in_g(i))
            .unwrap();
        let c3 = (0..lat.len()).find(|&i| lat.order(i) == 3).unwrap();
        let (j, coincide) = join(&lat.subgroup(v4), &lat.subgroup(c3)).unwrap();
        assert_eq!(j.order(), 12);
        assert!(coincide);
        // <(1 2)> and <(1 3)> generate an S3 but the setwise product has
        // only 4 elements.
        let t12 = g
            .index_of_perm(&Perm::from_cycles(4, &[vec![1, 2]]).unwrap())
            .unwrap();
        let t13 = g
            .index_of_perm(&Perm::from_cycles(4, &[vec![1, 3]]).unwrap())
            .unwrap();
        let a = lat.index_of(&g.subgroup_generated(&[t12]).unwrap()).unwrap();
        let b = lat.index_of(&g.subgroup_generated(&[t13]).unwrap()).unwrap();
        let (jj, coincide2) = join(&lat.subgroup(a), &lat.subgroup(b)).unwrap();
        assert_eq!(jj.order(), 6);
        assert!(!coincide2);
    }

    #[test]
    fn conjugator_is_least_witness() {
        let lat = s4().lattice().unwrap();
        let threes: Vec<usize> = (0..lat.len()).filter(|&i| lat.order(i) == 3).collect();
        let w = lat.conjugator(threes[0], threes[1]).unwrap();
        assert_eq!(lat.conj_index(threes[0], w), threes[1]);
        // Identity conjugates a subgroup to itself and is the least witness.
        assert_eq!(lat.conjugator(threes[0], threes[0]), Some(0));
        // are_conjugate agrees.
        let a = lat.subgroup(threes[0]);
        let b = lat.subgroup(threes[1]);
        assert_eq!(are_conjugate(&a, &b).unwrap(), Some(w));
    }

    #[test]
    fn centralizer_of_section_examples() {
        let g = s4();
        let lat = g.lattice().unwrap();
        let v4 = lat
            .mask(
                (0..lat.len())
                    .find(|&i| lat.order(i) == 4 && lat.is_normal_in_g(i))
                    .unwrap(),
            )
            .clone();
        let a4 = lat
            .mask((0..lat.len()).find(|&i| lat.order(i) == 12).unwrap())
            .clone();
        // C_G(V4) = V4.
        let c = centralizer_of_section(&g, &v4, &g.trivial_mask()).unwrap();
        assert_eq!(c.mask, v4);
        // C_G(A4/V4) = A4.
        let c2 = centralizer_of_section(&g, &a4, &v4).unwrap();
        assert_eq!(c2.mask, a4);
        // Non-normal arguments are rejected.
        let c4 = lat
            .mask((0..lat.len()).find(|&i| lat.order(i) == 4 && !lat.is_normal_in_g(i)).unwrap())
            .clone();
        assert!(centralizer_of_section(&g, &c4, &g.trivial_mask()).is_err());
    }

    #[test]
    fn subgroup_cap_triggers() {
        // The cap is enforced during join closure; a tiny cap trips on S4.
        let g = s4();
        assert!(matches!(
            build_lattice(&g, 5),
            Err(Error::SubgroupCap { cap: 5 })
        ));
    }

    #[test]
    fn meets_and_joins_are_lattice_ops() {
        let lat = s4().lattice().unwrap();
        for i in (0..lat.len()).step_by(3) {
            for j in (0..lat.len()).step_by(4) {
                let m = lat.meet(i, j);
                let jn = lat.join(i, j);
                assert!(lat.mask(m).is_subset(lat.mask(i)));
                assert!(lat.mask(m).is_subset(lat.mask(j)));
                assert!(lat.mask(i).is_subset(lat.mask(jn)));
                assert!(lat.mask(j).is_subset(lat.mask(jn)));
            }
        }
    }
}
