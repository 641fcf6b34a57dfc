//! Section groups H/K, quotients and abstract rebuilds.
//!
//! For a subgroup H and a normal subgroup K of H (both given as element
//! masks of a parent group), the section H/K is materialized as a group of
//! permutations on its own cosets, acting by right multiplication. Cosets
//! are indexed by their minimal element index, so the construction is
//! reproducible. With K trivial this is exactly the right regular
//! representation of H, which doubles as the "abstract rebuild" of H.

use std::sync::Arc;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

/// A materialized section H/K of a parent group.
pub struct SectionData {
    /// The section as a standalone group.
    pub group: Arc<Group>,
    /// Coset id -> minimal parent element index in that coset.
    pub reps: Vec<u16>,
    /// Parent element index -> coset id (u16::MAX outside H).
    coset_of: Vec<u16>,
    /// Masks defining the section in the parent group.
    pub h_mask: Bitset,
    pub k_mask: Bitset,
}

impl SectionData {
    /// Coset id of a parent element, if the element lies in H.
    pub fn coset_of(&self, elem: usize) -> Option<usize> {
        match self.coset_of[elem] {
            u16::MAX => None,
            c => Some(c as usize),
        }
    }

    /// Image in the section of a subgroup mask contained in H.
    pub fn project_mask(&self, sub: &Bitset) -> Bitset {
        let mut out = Bitset::new(self.reps.len());
        for x in sub.iter() {
            if let Some(c) = self.coset_of(x) {
                out.insert(c);
            }
        }
        out
    }

    /// Union of the cosets named by a mask over section elements.
    pub fn pullback(&self, qmask: &Bitset) -> Bitset {
        let mut out = Bitset::new(self.coset_of.len());
        for (elem, &c) in self.coset_of.iter().enumerate() {
            if c != u16::MAX && qmask.contains(c as usize) {
                out.insert(elem);
            }
        }
        out
    }
}

fn short_label(mask: &Bitset) -> String {
    let hex = mask.hex();
    let tag = if hex.len() > 12 { &hex[..12] } else { &hex };
    format!("o{}x{}", mask.count(), tag)
}

impl Group {
    /// The section H/K, cached per (H, K) pair.
    ///
    /// `h` must be a subgroup mask, `k` a subgroup mask contained in and
    /// normal in `h`.
    pub fn section(self: &Arc<Self>, h: &Bitset, k: &Bitset) -> Result<Arc<SectionData>> {
        let key = (h.clone(), k.clone());
        if let Some(hit) = self.caches.sections.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        if !self.is_subgroup_mask(h) || !self.is_subgroup_mask(k) {
            return Err(Error::NotASubgroup);
        }
        if !k.is_subset(h) {
            return Err(Error::NotContained);
        }
        if !self.is_normal_mask(k, h) {
            return Err(Error::NotNormal);
        }

        let n = self.order();
        let mut coset_of = vec![u16::MAX; n];
        let mut reps: Vec<u16> = Vec::new();
        // Ascending scan: each fresh element opens the coset K*x, so coset
        // ids increase with their minimal representative; identity is 0.
        for x in h.iter() {
            if coset_of[x] != u16::MAX {
                continue;
            }
            let c = reps.len() as u16;
            reps.push(x as u16);
            for kk in k.iter() {
                coset_of[self.mul(kk, x)] = c;
            }
        }
        let m = reps.len();

        let mut table = vec![0u16; m * m];
        for a in 0..m {
            for b in 0..m {
                let prod = self.mul(reps[a] as usize, reps[b] as usize);
                table[a * m + b] = coset_of[prod];
            }
        }
        let mut elements = Vec::with_capacity(m);
        for a in 0..m {
            let images: Vec<u16> = (0..m).map(|j| table[j * m + a]).collect();
            elements.push(Perm::from_images(images).map_err(|_| {
                Error::Internal("coset action produced a non-permutation".into())
            })?);
        }

        let full_h = h.count() == n;
        let generators: Vec<u16> = if full_h {
            let mut gens: Vec<u16> = Vec::new();
            for &g in self.generators() {
                let c = coset_of[g as usize];
                if c != 0 && !gens.contains(&c) {
                    gens.push(c);
                }
            }
            gens
        } else {
            // Greedy minimal generating set over the coset table.
            let mut gens: Vec<u16> = Vec::new();
            let mut span = vec![false; m];
            span[0] = true;
            let mut span_count = 1;
            for cand in 1..m {
                if span[cand] {
                    continue;
                }
                gens.push(cand as u16);
                // close span under multiplication with the new generator set
                let mut work: Vec<usize> = vec![cand];
                span[cand] = true;
                span_count += 1;
                while let Some(x) = work.pop() {
                    for y in 0..m {
                        if !span[y] {
                            continue;
                        }
                        for prod in [table[x * m + y] as usize, table[y * m + x] as usize] {
                            if !span[prod] {
                                span[prod] = true;
                                span_count += 1;
                                work.push(prod);
                            }
                        }
                    }
                }
                if span_count == m {
                    break;
                }
            }
            gens
        };

        let name = if k.count() == 1 {
            if full_h {
                format!("{}~regular", self.name())
            } else {
                format!("{}|{}", self.name(), short_label(h))
            }
        } else if full_h {
            format!("{}/{}", self.name(), short_label(k))
        } else {
            format!("{}|{}/{}", self.name(), short_label(h), short_label(k))
        };
        let group = Group::from_table(name, m.max(1), elements, table, generators);
        let data = Arc::new(SectionData {
            group,
            reps,
            coset_of,
            h_mask: h.clone(),
            k_mask: k.clone(),
        });
        self.caches
            .sections
            .lock()
            .unwrap()
            .insert(key, data.clone());
        Ok(data)
    }
}

/// A quotient G/N of the full parent group by a normal subgroup.
pub struct Quotient {
    pub source: Arc<Group>,
    pub kernel: Bitset,
    pub data: Arc<SectionData>,
}

impl Quotient {
    pub fn group(&self) -> &Arc<Group> {
        &self.data.group
    }

    /// Coset id of a source element.
    pub fn projection(&self, elem: usize) -> usize {
        self.data
            .coset_of(elem)
            .expect("full-group quotient covers every element")
    }

    pub fn project_mask(&self, sub: &Bitset) -> Bitset {
        self.data.project_mask(sub)
    }

    pub fn pullback(&self, qmask: &Bitset) -> Bitset {
        self.data.pullback(qmask)
    }
}

/// Quotient of the whole group by a normal subgroup mask.
pub fn quotient(g: &Arc<Group>, kernel: &Bitset) -> Result<Quotient> {
    let data = g.section(&g.full_mask(), kernel)?;
    Ok(Quotient {
        source: g.clone(),
        kernel: kernel.clone(),
        data,
    })
}

/// A subgroup rebuilt as a standalone group (right regular representation),
/// with the index map back to the parent.
pub struct Abstracted {
    pub group: Arc<Group>,
    /// Abstract element index -> parent element index.
    pub to_parent: Vec<u16>,
}

/// Rebuild the subgroup named by `mask` as a standalone group.
pub fn as_abstract(g: &Arc<Group>, mask: &Bitset) -> Result<Abstracted> {
    let data = g.section(mask, &g.trivial_mask())?;
    Ok(Abstracted {
        group: data.group.clone(),
        to_parent: data.reps.clone(),
    })
}
