//! Prime sets and pi-number arithmetic.
//!
//! A set of primes may be given directly or as the complement of a finite
//! set; the complement form is how classes such as "pi'-groups" stay exact
//! without materializing an infinite set. Only primes dividing some group
//! order are ever consulted, so both forms are decidable.

use std::collections::BTreeSet;
use std::fmt;

/// A finite, sorted set of primes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PrimeSet(BTreeSet<u64>);

impl PrimeSet {
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Self {
        PrimeSet(primes.into_iter().collect())
    }

    pub fn empty() -> Self {
        PrimeSet(BTreeSet::new())
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn insert(&mut self, p: u64) {
        self.0.insert(p);
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &PrimeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl FromIterator<u64> for PrimeSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        PrimeSet(iter.into_iter().collect())
    }
}

/// A set of primes, either a finite set or the complement of one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Pi {
    /// The primes in the given set.
    In(PrimeSet),
    /// All primes not in the given set.
    NotIn(PrimeSet),
}

impl Pi {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            Pi::In(s) => s.contains(p),
            Pi::NotIn(s) => !s.contains(p),
        }
    }

    /// The complementary set of primes.
    pub fn complement(&self) -> Pi {
        match self {
            Pi::In(s) => Pi::NotIn(s.clone()),
            Pi::NotIn(s) => Pi::In(s.clone()),
        }
    }
}

impl From<PrimeSet> for Pi {
    fn from(s: PrimeSet) -> Self {
        Pi::In(s)
    }
}

impl fmt::Display for Pi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi::In(s) => write!(f, "{s}"),
            Pi::NotIn(s) => write!(f, "{s}'"),
        }
    }
}

/// The set of primes dividing `n`. `sigma(1)` is empty.
pub fn sigma_primes(mut n: u64) -> PrimeSet {
    assert!(n > 0, "sigma_primes of zero");
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.insert(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    PrimeSet(out)
}

/// Whether `n` is prime.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Whether every prime divisor of `n` lies in `pi`. `1` is a pi-number for
/// every `pi`, including the empty set.
pub fn is_pi_number(n: u64, pi: &Pi) -> bool {
    sigma_primes(n).iter().all(|p| pi.contains(p))
}

/// The largest divisor of `n` whose prime divisors all lie in `pi`.
pub fn pi_part(n: u64, pi: &Pi) -> u64 {
    let mut part = 1;
    for p in sigma_primes(n).iter() {
        if pi.contains(p) {
            let mut q = 1;
            let mut m = n;
            while m % p == 0 {
                q *= p;
                m /= p;
            }
            part *= q;
        }
    }
    part
}
