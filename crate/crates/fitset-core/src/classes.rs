//! A closed catalog of group-class predicates (nilpotent, soluble, the
//! various pi-flavored classes, and product/intersection combinators),
//! evaluated on sections H/K of a materialized group.
//!
//! Every predicate is decided directly on masks using coset-order
//! arithmetic, commutator series with a base, and the normal subgroups of
//! the section — no quotient tables are rebuilt on these paths. Each
//! catalog entry carries flags saying whether it is a Fitting class
//! (normal-subgroup closed and closed under normal products), a formation
//! (quotient- and subdirect-closed), and a radical homomorph (a Fitting
//! class closed under quotients); operations that require a flag reject
//! predicates without it.

use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::primes::{is_pi_number, pi_part, sigma_primes, Pi, PrimeSet};

/// A predicate on (sections of) groups from a fixed catalog.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ClassPredicate {
    /// Every group.
    All,
    /// Only the trivial group.
    Trivial,
    /// All Sylow subgroups normal.
    Nilpotent,
    /// Derived series reaches the identity.
    Soluble,
    /// Order is a power of p.
    PGroup(u64),
    /// Order is a pi-number.
    PiGroup(Pi),
    /// Soluble and a pi-group.
    SolublePi(Pi),
    /// Nilpotent and a pi-group.
    NilpotentPi(Pi),
    /// Abelian p-group. A formation but not a Fitting class.
    AbelianP(u64),
    /// Every chief factor is a pi'-group or a soluble pi-group.
    PiSoluble(Pi),
    /// Has a normal Hall pi'-subgroup with nilpotent quotient.
    PiNilpotent(Pi),
    /// Has a normal Hall pi-subgroup.
    PiClosed(Pi),
    /// Has a normal nilpotent Hall pi-subgroup.
    PiSpecial(Pi),
    /// Has at least one Hall pi-subgroup. Neither Fitting nor formation.
    HasHall(Pi),
    /// Pi-soluble with pi-length at most k (upper pi-series).
    PiLengthLe(Pi, u32),
    /// Quotient by the A-radical lies in B; A must be a Fitting class.
    Product(Box<ClassPredicate>, Box<ClassPredicate>),
    /// Member of both classes.
    Intersection(Box<ClassPredicate>, Box<ClassPredicate>),
}

use ClassPredicate::*;

impl ClassPredicate {
    /// Closed under normal subgroups and products of normal members.
    pub fn is_fitting(&self) -> bool {
        match self {
            AbelianP(_) | HasHall(_) => false,
            Product(a, b) | Intersection(a, b) => a.is_fitting() && b.is_fitting(),
            _ => true,
        }
    }

    /// Closed under quotients and subdirect products.
    pub fn is_formation(&self) -> bool {
        match self {
            HasHall(_) | Product(..) => false,
            Intersection(a, b) => a.is_formation() && b.is_formation(),
            _ => true,
        }
    }

    /// A Fitting class closed under homomorphic images.
    pub fn is_radical_homomorph(&self) -> bool {
        match self {
            AbelianP(_) | HasHall(_) => false,
            Product(a, b) => a.is_fitting() && b.is_radical_homomorph(),
            Intersection(a, b) => a.is_radical_homomorph() && b.is_radical_homomorph(),
            _ => true,
        }
    }

    /// Parse a class document: {"name": ..., "pi"/"pi_complement"/"p"/"k"/"args": ...}.
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::ClassDoc("class spec must be a JSON object".into()))?;
        let name = obj
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::ClassDoc("class spec needs a string \"name\"".into()))?;
        let c = match name {
            "all" => All,
            "trivial" => Trivial,
            "nilpotent" => Nilpotent,
            "soluble" => Soluble,
            "p_group" => PGroup(prime_field(obj)?),
            "abelian_p" => AbelianP(prime_field(obj)?),
            "pi_group" => PiGroup(pi_field(obj)?),
            "soluble_pi" => SolublePi(pi_field(obj)?),
            "nilpotent_pi" => NilpotentPi(pi_field(obj)?),
            "pi_soluble" => PiSoluble(pi_field(obj)?),
            "pi_nilpotent" => PiNilpotent(pi_field(obj)?),
            "pi_closed" => PiClosed(pi_field(obj)?),
            "pi_special" => PiSpecial(pi_field(obj)?),
            "has_hall" => HasHall(pi_field(obj)?),
            "pi_length_le_k" => {
                let k = obj
                    .get("k")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::ClassDoc("pi_length_le_k needs integer \"k\"".into()))?;
                PiLengthLe(pi_field(obj)?, k as u32)
            }
            "product" | "intersection" => {
                let args = obj
                    .get("args")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::ClassDoc(format!("{name} needs an \"args\" array")))?;
                if args.len() != 2 {
                    return Err(Error::ClassDoc(format!("{name} takes exactly 2 args")));
                }
                let a = Self::from_json(&args[0])?;
                let b = Self::from_json(&args[1])?;
                if name == "product" {
                    if !a.is_fitting() {
                        return Err(Error::ClassDoc(format!(
                            "product base {a} is not a Fitting class"
                        )));
                    }
                    Product(Box::new(a), Box::new(b))
                } else {
                    Intersection(Box::new(a), Box::new(b))
                }
            }
            other => return Err(Error::ClassDoc(format!("unknown class name \"{other}\""))),
        };
        Ok(c)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s)?;
        Self::from_json(&v)
    }
}

fn check_prime(p: u64) -> Result<u64> {
    let s = sigma_primes(p.max(1));
    if p < 2 || s.len() != 1 || !s.contains(p) {
        return Err(Error::ClassDoc(format!("{p} is not a prime")));
    }
    Ok(p)
}

fn prime_field(obj: &serde_json::Map<String, Value>) -> Result<u64> {
    let p = obj
        .get("p")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::ClassDoc("class spec needs a prime \"p\"".into()))?;
    check_prime(p)
}

fn pi_field(obj: &serde_json::Map<String, Value>) -> Result<Pi> {
    let plain = obj.get("pi");
    let comp = obj.get("pi_complement");
    let (v, complemented) = match (plain, comp) {
        (Some(v), None) => (v, false),
        (None, Some(v)) => (v, true),
        (Some(_), Some(_)) => {
            return Err(Error::ClassDoc(
                "give \"pi\" or \"pi_complement\", not both".into(),
            ))
        }
        (None, None) => {
            return Err(Error::ClassDoc(
                "class spec needs \"pi\" or \"pi_complement\"".into(),
            ))
        }
    };
    let arr = v
        .as_array()
        .ok_or_else(|| Error::ClassDoc("prime set must be a JSON array".into()))?;
    let mut set = PrimeSet::empty();
    for item in arr {
        let p = item
            .as_u64()
            .ok_or_else(|| Error::ClassDoc("prime set entries must be integers".into()))?;
        set.insert(check_prime(p)?);
    }
    Ok(if complemented {
        Pi::NotIn(set)
    } else {
        Pi::In(set)
    })
}

impl fmt::Display for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            All => write!(f, "all"),
            Trivial => write!(f, "trivial"),
            Nilpotent => write!(f, "nilpotent"),
            Soluble => write!(f, "soluble"),
            PGroup(p) => write!(f, "p_group({p})"),
            PiGroup(pi) => write!(f, "pi_group({pi})"),
            SolublePi(pi) => write!(f, "soluble_pi({pi})"),
            NilpotentPi(pi) => write!(f, "nilpotent_pi({pi})"),
            AbelianP(p) => write!(f, "abelian_p({p})"),
            PiSoluble(pi) => write!(f, "pi_soluble({pi})"),
            PiNilpotent(pi) => write!(f, "pi_nilpotent({pi})"),
            PiClosed(pi) => write!(f, "pi_closed({pi})"),
            PiSpecial(pi) => write!(f, "pi_special({pi})"),
            HasHall(pi) => write!(f, "has_hall({pi})"),
            PiLengthLe(pi, k) => write!(f, "pi_length_le_{k}({pi})"),
            Product(a, b) => write!(f, "product({a},{b})"),
            Intersection(a, b) => write!(f, "intersection({a},{b})"),
        }
    }
}

/// Order of the coset xK in H/K: least m >= 1 with x^m in K.
fn coset_order(g: &Group, x: usize, k: &Bitset) -> usize {
    let mut y = x;
    let mut m = 1;
    while !k.contains(y) {
        y = g.mul(y, x);
        m += 1;
    }
    m
}

/// Elements of H whose coset order in H/K is a pi-number. The result is a
/// union of cosets containing K; it pulls back the pi-elements of H/K.
pub fn pi_coset_elements(g: &Group, h: &Bitset, k: &Bitset, pi: &Pi) -> Bitset {
    let mut out = Bitset::new(g.order());
    for x in h.iter() {
        if is_pi_number(coset_order(g, x, k) as u64, pi) {
            out.insert(x);
        }
    }
    out
}

fn is_mul_closed(g: &Group, s: &Bitset) -> bool {
    let members: Vec<usize> = s.iter().collect();
    for &a in &members {
        for &b in &members {
            if !s.contains(g.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// H/K is nilpotent iff for every prime p dividing |H/K| the p-element
/// cosets form a subgroup (equivalently, every Sylow subgroup of H/K is
/// normal).
fn section_nilpotent(g: &Group, h: &Bitset, k: &Bitset) -> bool {
    let index = (h.count() / k.count()) as u64;
    for p in sigma_primes(index).iter() {
        let pel = pi_coset_elements(g, h, k, &Pi::In(PrimeSet::new([p])));
        if !is_mul_closed(g, &pel) {
            return false;
        }
    }
    true
}

/// H/K is soluble iff the derived series of H relative to the base K
/// descends to K.
fn section_soluble(g: &Group, h: &Bitset, k: &Bitset) -> bool {
    let mut d = h.clone();
    while d != *k {
        let next = g.commutator_subgroup(&d, &d, k);
        if next == d {
            return false;
        }
        d = next;
    }
    true
}

fn section_abelian(g: &Group, h: &Bitset, k: &Bitset) -> bool {
    g.commutator_subgroup(h, h, k) == *k
}

/// A chief chain of the section H/K: a maximal chain of H-invariant
/// subgroups from K to H, choosing at each step the first strict superset
/// in ascending (order, mask) order (which is a minimal choice).
pub fn section_chief_chain(g: &Group, h: &Bitset, k: &Bitset) -> Vec<Bitset> {
    let normals = g.normal_masks_between(h, k);
    let mut chain = vec![k.clone()];
    while chain.last().unwrap() != h {
        let cur = chain.last().unwrap().clone();
        let next = normals
            .iter()
            .find(|n| n.count() > cur.count() && cur.is_subset(n))
            .expect("every proper H-invariant subgroup has a strict superset")
            .clone();
        chain.push(next);
    }
    chain
}

fn section_pi_soluble(g: &Group, h: &Bitset, k: &Bitset, pi: &Pi) -> bool {
    let chain = section_chief_chain(g, h, k);
    let comp = pi.complement();
    for w in chain.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let index = (b.count() / a.count()) as u64;
        let ok = is_pi_number(index, &comp)
            || (is_pi_number(index, pi) && section_soluble(g, b, a));
        if !ok {
            return false;
        }
    }
    true
}

/// The largest L with K <= L, L normal in H, and L/K a pi-group.
fn section_o_pi(g: &Group, h: &Bitset, k: &Bitset, pi: &Pi) -> Result<Bitset> {
    let normals = g.normal_masks_between(h, k);
    let base = k.count();
    let mut best = k.clone();
    for l in normals.iter() {
        if is_pi_number((l.count() / base) as u64, pi) && l.count() > best.count() {
            best = l.clone();
        }
    }
    for l in normals.iter() {
        if is_pi_number((l.count() / base) as u64, pi) && !l.is_subset(&best) {
            return Err(Error::Internal(
                "pi-radical of a section is not unique".into(),
            ));
        }
    }
    Ok(best)
}

/// Pi-length of H/K via the upper pi-series (alternating pi'- and
/// pi-radicals, starting with pi'); None when the section is not
/// pi-soluble.
pub fn section_pi_length(
    g: &Arc<Group>,
    h: &Bitset,
    k: &Bitset,
    pi: &Pi,
) -> Result<Option<u32>> {
    if !section_member(g, h, k, &PiSoluble(pi.clone()))? {
        return Ok(None);
    }
    let comp = pi.complement();
    let mut cur = k.clone();
    let mut len = 0u32;
    loop {
        cur = section_o_pi(g, h, &cur, &comp)?;
        if cur == *h {
            break;
        }
        let next = section_o_pi(g, h, &cur, pi)?;
        if next == cur {
            return Err(Error::Internal(
                "upper pi-series stalled on a pi-soluble section".into(),
            ));
        }
        len += 1;
        cur = next;
        if cur == *h {
            break;
        }
    }
    Ok(Some(len))
}

fn section_has_hall(g: &Arc<Group>, h: &Bitset, k: &Bitset, pi: &Pi) -> Result<bool> {
    let lat = g.lattice()?;
    let hi = lat
        .index_of(h)
        .ok_or_else(|| Error::Internal("section top not in lattice".into()))?;
    let index = (h.count() / k.count()) as u64;
    let target = pi_part(index, pi) as usize * k.count();
    Ok(lat.contained(hi).iter().any(|&i| {
        lat.order(i as usize) == target && k.is_subset(lat.mask(i as usize))
    }))
}

fn eval(g: &Arc<Group>, h: &Bitset, k: &Bitset, c: &ClassPredicate) -> Result<bool> {
    let index = (h.count() / k.count()) as u64;
    Ok(match c {
        All => true,
        Trivial => index == 1,
        Nilpotent => section_nilpotent(g, h, k),
        Soluble => section_soluble(g, h, k),
        PGroup(p) => is_pi_number(index, &Pi::In(PrimeSet::new([*p]))),
        PiGroup(pi) => is_pi_number(index, pi),
        SolublePi(pi) => is_pi_number(index, pi) && section_soluble(g, h, k),
        NilpotentPi(pi) => is_pi_number(index, pi) && section_nilpotent(g, h, k),
        AbelianP(p) => {
            is_pi_number(index, &Pi::In(PrimeSet::new([*p]))) && section_abelian(g, h, k)
        }
        PiSoluble(pi) => section_pi_soluble(g, h, k, pi),
        PiNilpotent(pi) => {
            let pel = pi_coset_elements(g, h, k, &pi.complement());
            is_mul_closed(g, &pel) && section_nilpotent(g, h, &pel)
        }
        PiClosed(pi) => is_mul_closed(g, &pi_coset_elements(g, h, k, pi)),
        PiSpecial(pi) => {
            let pel = pi_coset_elements(g, h, k, pi);
            is_mul_closed(g, &pel) && section_nilpotent(g, &pel, k)
        }
        HasHall(pi) => section_has_hall(g, h, k, pi)?,
        PiLengthLe(pi, bound) => match section_pi_length(g, h, k, pi)? {
            Some(len) => len <= *bound,
            None => false,
        },
        Product(a, b) => {
            let r = section_class_radical(g, h, k, a)?;
            section_member(g, h, &r, b)?
        }
        Intersection(a, b) => section_member(g, h, k, a)? && section_member(g, h, k, b)?,
    })
}

/// Whether the section H/K belongs to the class. H must be a subgroup
/// mask and K normal in H. Results are memoized per group.
pub fn section_member(
    g: &Arc<Group>,
    h: &Bitset,
    k: &Bitset,
    c: &ClassPredicate,
) -> Result<bool> {
    let key = (h.clone(), k.clone(), c.clone());
    if let Some(&hit) = g.caches.section_class.lock().unwrap().get(&key) {
        return Ok(hit);
    }
    if !k.is_subset(h) {
        return Err(Error::NotContained);
    }
    if !g.is_subgroup_mask(h) || !g.is_subgroup_mask(k) {
        return Err(Error::NotASubgroup);
    }
    if !g.is_normal_mask(k, h) {
        return Err(Error::NotNormal);
    }
    let out = eval(g, h, k, c)?;
    g.caches.section_class.lock().unwrap().insert(key, out);
    Ok(out)
}

/// Whether the whole group belongs to the class.
pub fn class_member(g: &Arc<Group>, c: &ClassPredicate) -> Result<bool> {
    section_member(g, &g.full_mask(), &g.trivial_mask(), c)
}

/// Join of all L normal in H with K <= L and L/K in the class; requires a
/// Fitting class so the join is again a member.
pub fn section_class_radical(
    g: &Arc<Group>,
    h: &Bitset,
    k: &Bitset,
    c: &ClassPredicate,
) -> Result<Bitset> {
    if !c.is_fitting() {
        return Err(Error::ClassNotApplicable(c.to_string(), "fitting"));
    }
    let normals = g.normal_masks_between(h, k);
    let mut join = k.clone();
    for l in normals.iter() {
        if section_member(g, l, k, c)? && !l.is_subset(&join) {
            join = g.mask_closure(&join.union(l));
        }
    }
    Ok(join)
}

/// The class radical of G: join of all normal members, verified to be a
/// member containing every normal member.
pub fn class_radical(g: &Arc<Group>, c: &ClassPredicate) -> Result<Bitset> {
    let full = g.full_mask();
    let trivial = g.trivial_mask();
    let r = section_class_radical(g, &full, &trivial, c)?;
    if !section_member(g, &r, &trivial, c)? {
        return Err(Error::Internal(format!(
            "radical of {c} is not itself a member"
        )));
    }
    for n in g.normal_masks().iter() {
        if section_member(g, n, &trivial, c)? && !n.is_subset(&r) {
            return Err(Error::Internal(format!(
                "radical of {c} misses a normal member"
            )));
        }
    }
    Ok(r)
}

/// The class residual of G: smallest normal N with G/N in the class;
/// uniqueness is verified by closing the candidates under intersection.
pub fn residual(g: &Arc<Group>, c: &ClassPredicate) -> Result<Bitset> {
    if !c.is_formation() {
        return Err(Error::ClassNotApplicable(c.to_string(), "formation"));
    }
    let full = g.full_mask();
    let mut meet: Option<Bitset> = None;
    for n in g.normal_masks().iter() {
        if section_member(g, &full, n, c)? {
            meet = Some(match meet {
                None => n.clone(),
                Some(m) => m.intersection(n),
            });
        }
    }
    let m = meet.ok_or_else(|| {
        Error::Internal(format!("formation {c} admits no quotient of the group"))
    })?;
    if !section_member(g, &full, &m, c)? {
        return Err(Error::Internal(format!(
            "residual candidates for {c} are not intersection-closed"
        )));
    }
    Ok(m)
}

/// A chief series of G with its factors materialized as abstract groups.
pub struct ChiefSeries {
    /// Ascending masks from the trivial subgroup to G (empty for |G| = 1).
    pub chain: Vec<Bitset>,
    /// Factor groups chain[i+1]/chain[i].
    pub factors: Vec<Arc<Group>>,
    pub factor_orders: Vec<usize>,
}

/// One chief series, choosing at each step the first (order, mask) minimal
/// normal subgroup of G above the current term.
pub fn chief_series(g: &Arc<Group>) -> Result<ChiefSeries> {
    if g.order() == 1 {
        return Ok(ChiefSeries {
            chain: Vec::new(),
            factors: Vec::new(),
            factor_orders: Vec::new(),
        });
    }
    let chain = section_chief_chain(g, &g.full_mask(), &g.trivial_mask());
    let mut factors = Vec::new();
    let mut factor_orders = Vec::new();
    for w in chain.windows(2) {
        let section = g.section(&w[1], &w[0])?;
        factor_orders.push(w[1].count() / w[0].count());
        factors.push(section.group.clone());
    }
    Ok(ChiefSeries {
        chain,
        factors,
        factor_orders,
    })
}

/// Pi-length of G; None when G is not pi-soluble.
pub fn pi_length(g: &Arc<Group>, pi: &Pi) -> Result<Option<u32>> {
    section_pi_length(g, &g.full_mask(), &g.trivial_mask(), pi)
}
