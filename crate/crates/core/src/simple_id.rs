//! Recognition of finite simple groups from their order, plus a Monte
//! Carlo simplicity test for permutation groups.
//!
//! Recognition covers the cyclic groups of prime order, the alternating
//! groups, the projective special linear groups, and seven sporadic
//! groups.  Within these families the order determines the group up to
//! one collision, A8 against PSL(3,4) at order 20160, which is settled by
//! asking whether the group has an element of order 15 (A8 has 2688 of
//! them, PSL(3,4) has none).  Orders that provably belong to no simple
//! group (odd composite, twice an odd number, or with at most two prime
//! divisors) are rejected outright.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

use crate::cayley::CayleyGroup;
use crate::group::{GroupError, PermGroup};
use crate::perm::Permutation;

#[derive(Debug, Error)]
pub enum SimpleIdError {
    #[error("no simple group has order {order}: {reason}")]
    ImpossibleOrder {
        order: BigUint,
        reason: &'static str,
    },
    #[error("no minimal degree on record for an unrecognized simple group of order {0}")]
    UnknownDegree(BigUint),
    #[error("minimal faithful degree of {0} does not fit in 64 bits")]
    DegreeOverflow(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite simple group, named by family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleType {
    CyclicPrime(BigUint),
    Alternating(u64),
    Psl {
        n: u32,
        q: u64,
    },
    Sporadic(&'static str),
    /// The order matched no group in the recognized families.  The group
    /// behind it may still be simple; this tool just cannot name it.
    UnknownSimple(BigUint),
}

/// The built-in sporadic groups as (name, order, minimal faithful
/// permutation degree).
pub fn sporadic_table() -> &'static [(&'static str, u64, u64)] {
    &SPORADIC
}

/// name, order, minimal faithful permutation degree
const SPORADIC: [(&str, u64, u64); 7] = [
    ("M11", 7_920, 11),
    ("M12", 95_040, 12),
    ("J2", 604_800, 100),
    ("M22", 443_520, 22),
    ("HS", 44_352_000, 100),
    ("M23", 10_200_960, 23),
    ("M24", 244_823_040, 24),
];

impl std::fmt::Display for SimpleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimpleType::CyclicPrime(p) => write!(f, "C{p}"),
            SimpleType::Alternating(n) => write!(f, "A{n}"),
            SimpleType::Psl { n, q } => write!(f, "PSL({n},{q})"),
            SimpleType::Sporadic(name) => write!(f, "{name}"),
            SimpleType::UnknownSimple(m) => write!(f, "unidentified simple group of order {m}"),
        }
    }
}

impl SimpleType {
    pub fn order(&self) -> BigUint {
        match self {
            SimpleType::CyclicPrime(p) => p.clone(),
            SimpleType::Alternating(n) => {
                let mut f = BigUint::one();
                for i in 3..=*n {
                    f *= i;
                }
                f
            }
            SimpleType::Psl { n, q } => psl_order(*n, *q),
            SimpleType::Sporadic(name) => {
                let (_, order, _) = SPORADIC.iter().find(|(s, _, _)| s == name).unwrap();
                BigUint::from(*order)
            }
            SimpleType::UnknownSimple(m) => m.clone(),
        }
    }

    /// Smallest degree of a faithful permutation representation.
    pub fn minimal_faithful_degree(&self) -> Result<u64, SimpleIdError> {
        let overflow = || SimpleIdError::DegreeOverflow(self.to_string());
        match self {
            SimpleType::CyclicPrime(p) => p.to_u64().ok_or_else(overflow),
            SimpleType::Alternating(n) => Ok(*n),
            SimpleType::Psl { n: 2, q } => Ok(match q {
                // Exceptional small actions; beyond these the projective
                // line of q + 1 points is optimal.
                5 => 5,
                7 => 7,
                9 => 6,
                11 => 11,
                q => q + 1,
            }),
            // A8 in disguise acts on 8 points; otherwise the projective
            // space of (q^n - 1)/(q - 1) points is optimal.
            SimpleType::Psl { n: 4, q: 2 } => Ok(8),
            SimpleType::Psl { n, q } => {
                let qb = BigUint::from(*q);
                let points = (qb.pow(*n) - 1u32) / (qb - 1u32);
                points.to_u64().ok_or_else(overflow)
            }
            SimpleType::Sporadic(name) => {
                let (_, _, degree) = SPORADIC.iter().find(|(s, _, _)| s == name).unwrap();
                Ok(*degree)
            }
            SimpleType::UnknownSimple(m) => Err(SimpleIdError::UnknownDegree(m.clone())),
        }
    }
}

/// |PSL(n, q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1) / gcd(n, q - 1).
fn psl_order(n: u32, q: u64) -> BigUint {
    psl_order_numerator(n, q) / gcd_u64(n as u64, q - 1)
}

fn psl_order_numerator(n: u32, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let mut ord = qb.pow(n * (n - 1) / 2);
    for i in 2..=n {
        ord *= qb.pow(i) - 1u32;
    }
    ord
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

const MILLER_RABIN_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic for all 64-bit inputs with the fixed base set.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'bases: for &a in &MILLER_RABIN_BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Strong-pseudoprime test with the same fixed bases.  Deterministic for
/// inputs below 3.3e24; above that no counterexample to the base set is
/// known.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'bases: for &a in &MILLER_RABIN_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// `Some(p)` when `q = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power_base(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    if is_prime_u64(q) {
        return Some(q);
    }
    for k in 2..=q.ilog2() {
        let r = integer_kth_root(q, k);
        if r >= 2 && checked_pow(r, k) == Some(q) && is_prime_u64(r) {
            return Some(r);
        }
    }
    None
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

fn integer_kth_root(n: u64, k: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    while r > 0 && checked_pow(r, k).map(|p| p > n).unwrap_or(true) {
        r -= 1;
    }
    while checked_pow(r + 1, k).map(|p| p <= n).unwrap_or(false) {
        r += 1;
    }
    r
}

/// Distinct prime divisors by trial division up to the given limit.
/// Returns `None` when a cofactor above the limit squared remains, i.e.
/// the factorization could not be completed.
fn distinct_prime_divisors(order: &BigUint, limit: u64) -> Option<Vec<u64>> {
    let mut rest = order.clone();
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p <= limit {
        if (&rest % p).is_zero() {
            primes.push(p);
            while (&rest % p).is_zero() {
                rest /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Some(primes);
    }
    // The cofactor has no divisor up to `limit`; below limit^2 it must be
    // prime, and a prime cofactor completes the factorization too.
    if rest < BigUint::from(limit) * limit || is_prime(&rest) {
        primes.push(u64::MAX); // placeholder for one more distinct prime
        return Some(primes);
    }
    None
}

/// Identifies a simple group from its order.  The caller asserts the
/// group is simple; orders no simple group can have are rejected.  The
/// callback settles the one order collision in the tables: it must report
/// whether the group contains an element of the given order, and is only
/// invoked for order 20160.
pub fn identify_simple(
    order: &BigUint,
    has_element_of_order: impl FnOnce(u64) -> bool,
) -> Result<SimpleType, SimpleIdError> {
    let impossible = |reason| SimpleIdError::ImpossibleOrder {
        order: order.clone(),
        reason,
    };
    if order.is_one() {
        return Err(impossible("the trivial group has no proper subgroup"));
    }
    if is_prime(order) {
        return Ok(SimpleType::CyclicPrime(order.clone()));
    }
    if (order % 2u32).is_one() {
        return Err(impossible("groups of odd order are solvable"));
    }
    if !(order % 4u32).is_zero() && *order != BigUint::from(2u32) {
        return Err(impossible(
            "a group of twice odd order has a normal subgroup of index 2",
        ));
    }
    if let Some(primes) = distinct_prime_divisors(order, 1_000_000) {
        if primes.len() <= 2 {
            return Err(impossible(
                "groups whose order has at most two prime divisors are solvable",
            ));
        }
    }
    // Alternating groups: compare against n!/2 incrementally.
    let mut half_factorial = BigUint::from(60u32);
    let mut n = 5u64;
    while half_factorial < *order {
        n += 1;
        half_factorial *= n;
    }
    if half_factorial == *order {
        // A8 and PSL(3,4) share order 20160 and nothing else collides.
        if *order == BigUint::from(20_160u32) {
            return Ok(if has_element_of_order(15) {
                SimpleType::Alternating(8)
            } else {
                SimpleType::Psl { n: 3, q: 4 }
            });
        }
        return Ok(SimpleType::Alternating(n));
    }
    let psl = psl_matches(order);
    if !psl.is_empty() {
        // The only coincidence left inside the family is PSL(3,2) =
        // PSL(2,7); prefer the customary two-dimensional name.
        let &(n, q) = psl.iter().min_by_key(|(n, q)| (*n, *q)).expect("nonempty");
        debug_assert!(psl.len() == 1 || (psl == vec![(2, 7), (3, 2)]));
        return Ok(SimpleType::Psl { n, q });
    }
    for (name, sporadic_order, _) in SPORADIC {
        if *order == BigUint::from(sporadic_order) {
            return Ok(SimpleType::Sporadic(name));
        }
    }
    Ok(SimpleType::UnknownSimple(order.clone()))
}

const Q_SEARCH_MAX: u64 = 1 << 60;

/// All (n, q) with |PSL(n, q)| equal to the given order, q a prime power
/// at least 4 when n = 2 (PSL(2,2) and PSL(2,3) are solvable).
fn psl_matches(order: &BigUint) -> Vec<(u32, u64)> {
    let mut out = Vec::new();
    for n in 2u32.. {
        // The smallest order in dimension n uses q = 2; past the target,
        // larger n cannot match.  gcd(n, 1) = 1, so numerator = order.
        if psl_order_numerator(n, 2) > order * n {
            break;
        }
        // The numerator is strictly increasing in q, so solve
        // numerator = order * d for each candidate gcd value d | n.
        for d in 1..=n as u64 {
            if !(n as u64).is_multiple_of(d) {
                continue;
            }
            let target = order * d;
            let Some(q) = search_numerator(n, &target) else {
                continue;
            };
            if n == 2 && q < 4 {
                continue;
            }
            if prime_power_base(q).is_some() && gcd_u64(n as u64, q - 1) == d {
                out.push((n, q));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The unique q with numerator(n, q) equal to the target, if any.
fn search_numerator(n: u32, target: &BigUint) -> Option<u64> {
    let mut lo = 2u64;
    if psl_order_numerator(n, lo) > *target {
        return None;
    }
    let mut hi = 4u64;
    while psl_order_numerator(n, hi) < *target {
        if hi >= Q_SEARCH_MAX {
            return None;
        }
        hi = (hi * hi).min(Q_SEARCH_MAX);
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if psl_order_numerator(n, mid) < *target {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    (psl_order_numerator(n, lo) == *target).then_some(lo)
}

/// Identifies a permutation group already known to be simple.  The order
/// collision at 20160 is settled exactly by enumerating the elements.
pub fn identify_simple_perm(group: &PermGroup) -> Result<SimpleType, SimpleIdError> {
    let order = group.order();
    identify_simple(&order, |k| {
        let elements = group
            .elements(25_000)
            .expect("the collision order 20160 is within the enumeration bound");
        elements.iter().any(|e| e.element_order() == k)
    })
}

/// Identifies a multiplication-table group already known to be simple.
pub fn identify_simple_cayley(group: &CayleyGroup) -> Result<SimpleType, SimpleIdError> {
    let order = BigUint::from(group.size());
    identify_simple(&order, |k| group.element_orders().contains(&k))
}

/// Outcome of the simplicity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityVerdict {
    /// The trivial group, which is not simple.
    Trivial,
    /// Simple, proven: the order is prime.
    Certified,
    /// Every sampled element had full normal closure.  Wrong only if all
    /// samples missed every proper normal subgroup.
    ProbablySimple,
    /// Not simple, proven: the witness generates a proper nontrivial
    /// normal subgroup.
    NotSimple(Permutation),
}

impl SimplicityVerdict {
    pub fn is_simple(&self) -> bool {
        matches!(
            self,
            SimplicityVerdict::Certified | SimplicityVerdict::ProbablySimple
        )
    }
}

/// Monte Carlo simplicity test.  Negative answers always carry an exact
/// witness; abelian and non-perfect groups are settled deterministically,
/// so only the "probably simple" answer is probabilistic.
pub fn simplicity<R: Rng + ?Sized>(
    group: &PermGroup,
    trials: usize,
    rng: &mut R,
) -> Result<SimplicityVerdict, GroupError> {
    if group.is_trivial() {
        return Ok(SimplicityVerdict::Trivial);
    }
    let order = group.order();
    if is_prime(&order) {
        return Ok(SimplicityVerdict::Certified);
    }
    let derived = group.derived_subgroup();
    if derived.is_trivial() {
        // Abelian of composite order: some power of a generator has prime
        // order and generates a proper normal subgroup.
        let g = &group.generators()[0];
        let cycle_len = g.cycles()[0].len() as u64;
        let p = (2..=cycle_len)
            .find(|d| cycle_len.is_multiple_of(*d))
            .expect(">= 2");
        let o = g.element_order();
        let witness = g.pow(o / p);
        debug_assert_eq!(witness.element_order(), p);
        return Ok(SimplicityVerdict::NotSimple(witness));
    }
    if derived.order() < order {
        // Not perfect: the derived subgroup is proper, normal, nontrivial.
        let witness = derived.generators()[0].clone();
        return Ok(SimplicityVerdict::NotSimple(witness));
    }
    let mut candidates: Vec<Permutation> = group.generators().to_vec();
    for _ in 0..trials {
        candidates.push(group.random_element(rng));
    }
    for x in candidates {
        if x.is_identity() {
            continue;
        }
        let closure = group.normal_closure(std::slice::from_ref(&x))?;
        if closure.order() < order {
            return Ok(SimplicityVerdict::NotSimple(x));
        }
    }
    Ok(SimplicityVerdict::ProbablySimple)
}
