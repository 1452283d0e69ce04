//! The minimal index of a proper subgroup, and composition factors.
//!
//! Writing kappa(G) for the least index of a proper subgroup of a finite
//! group G, every subgroup attaining it contains a maximal normal
//! subgroup N, and corresponds modulo N to a minimal-index subgroup of
//! the simple group G/N.  For a simple group the least proper-subgroup
//! index equals the minimal faithful permutation degree.  So
//!
//!   kappa(G) = min { minimal faithful degree of G/N : N maximal normal }
//!
//! and the computation reduces to naming the simple quotients.  Groups
//! whose order fits the table bound are handled exactly through their
//! multiplication table; larger groups are decomposed along orbit and
//! block actions, which may leave the quotient list incomplete.  The
//! result therefore carries an exactness flag: an upper bound of at most
//! 5 is always exact, because the abelian quotients are always all found
//! and a nonabelian simple group cannot act faithfully on fewer than 5
//! points.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cayley::{CayleyError, CayleyGroup};
use crate::group::{ActionDomain, GroupError, PermGroup};
use crate::simple_id::{
    identify_simple_cayley, identify_simple_perm, is_prime, simplicity, SimpleIdError, SimpleType,
    SimplicityVerdict,
};

#[derive(Debug, Error)]
pub enum KappaError {
    #[error("\u{3ba} undefined: the trivial group has no proper subgroup")]
    TrivialGroup,
    #[error("cannot bound \u{3ba}: no simple quotient could be identified ({context})")]
    NoIdentifiableQuotient { context: String },
    #[error("decomposition incomplete: {reason}")]
    Incomplete { reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    SimpleId(#[from] SimpleIdError),
}

/// Tuning knobs shared by the group-analysis entry points.
#[derive(Debug, Clone)]
pub struct KappaOptions {
    /// Largest group order realized as a full multiplication table.
    /// Memory grows as four bytes times the order squared.
    pub cayley_bound: usize,
    /// Random elements sampled by the Monte Carlo simplicity test.
    pub trials: usize,
    /// Seed for all randomized steps; equal seeds give equal output.
    pub seed: u64,
}

impl Default for KappaOptions {
    fn default() -> Self {
        KappaOptions {
            cayley_bound: 5000,
            trials: 20,
            seed: 0,
        }
    }
}

/// The simple quotients discovered for a group.
#[derive(Debug, Clone)]
pub struct TopQuotients {
    /// Distinct quotient types, sorted by order then name.  Every entry
    /// is a genuine simple quotient.
    pub types: Vec<SimpleType>,
    /// True when the list is known to be the full set of simple
    /// quotients: the group was abelian, simple, or small enough for its
    /// maximal normal subgroups to be enumerated outright.
    pub complete: bool,
}

/// Result of a kappa computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaOutcome {
    /// The minimal index, or an upper bound for it when not exact.
    pub kappa: u64,
    /// A simple quotient whose minimal faithful degree attains the value.
    pub attained_by: SimpleType,
    /// Whether the value is proven minimal.
    pub exact: bool,
    /// Human-readable caveats, set when something was ignored or missed.
    pub note: Option<String>,
}

fn canonical(mut types: Vec<SimpleType>) -> Vec<SimpleType> {
    types.sort_by_key(|t| (t.order(), t.to_string()));
    types.dedup();
    types
}

/// Prime factors with multiplicity.  The limit must be at least as large
/// as every prime divisor; for the order of a permutation group of
/// degree n, primes cannot exceed n.
fn prime_factors(n: &BigUint, limit: u64) -> Result<Vec<BigUint>, KappaError> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= limit && !rest.is_one() {
        while (&rest % p).is_zero() {
            out.push(BigUint::from(p));
            rest /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(out);
    }
    if is_prime(&rest) {
        out.push(rest);
        return Ok(out);
    }
    Err(KappaError::Incomplete {
        reason: format!("cannot factor the abelian quotient order {n}"),
    })
}

/// Every maximal normal subgroup of a table group, identified through
/// its quotient.  Exhaustive.
fn top_quotients_cayley(cayley: &CayleyGroup) -> Result<TopQuotients, KappaError> {
    if cayley.size() == 1 {
        return Err(KappaError::TrivialGroup);
    }
    let mut types = Vec::new();
    for n in cayley.maximal_normal_subgroups()? {
        let q = cayley.quotient(&n)?;
        types.push(identify_simple_cayley(&q.group)?);
    }
    Ok(TopQuotients {
        types: canonical(types),
        complete: true,
    })
}

/// The simple quotients of a permutation group; see [`TopQuotients`] for
/// what the completeness flag promises.
pub fn top_simple_quotients(
    group: &PermGroup,
    opts: &KappaOptions,
) -> Result<TopQuotients, KappaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    top_quotients_rec(group, opts, &mut rng)
}

fn top_quotients_rec(
    group: &PermGroup,
    opts: &KappaOptions,
    rng: &mut ChaCha8Rng,
) -> Result<TopQuotients, KappaError> {
    if group.is_trivial() {
        return Err(KappaError::TrivialGroup);
    }
    let order = group.order();
    if order <= BigUint::from(opts.cayley_bound) {
        let (cayley, _) = CayleyGroup::from_perm_group(group, opts.cayley_bound)?;
        return top_quotients_cayley(&cayley);
    }
    let mut types: Vec<SimpleType> = Vec::new();
    // Abelian quotients first: one C_p for each prime dividing the
    // abelianization order.  This part is always complete, since an
    // abelian simple quotient is cyclic of prime order dividing it.
    let derived = group.derived_subgroup();
    let ab = &order / derived.order();
    if !ab.is_one() {
        let mut primes = prime_factors(&ab, group.degree().max(3) as u64)?;
        primes.dedup();
        types.extend(primes.into_iter().map(SimpleType::CyclicPrime));
    }
    if derived.is_trivial() {
        return Ok(TopQuotients {
            types: canonical(types),
            complete: true,
        });
    }
    if derived.order() == order {
        // Perfect group: if simple, it is its own unique simple quotient.
        if simplicity(group, opts.trials, rng)?.is_simple() {
            types.push(identify_simple_perm(group)?);
            return Ok(TopQuotients {
                types: canonical(types),
                complete: true,
            });
        }
    }
    // Orbit and block actions realize quotients on fewer points.  An
    // action with trivial kernel re-represents the same group, so its
    // answer transfers verbatim, completeness included; a proper kernel
    // only surfaces the quotients by normal subgroups above it, so the
    // list may be incomplete.
    let mut domains: Vec<ActionDomain> = Vec::new();
    if !group.is_transitive() {
        for orbit in group.orbits() {
            if orbit.len() > 1 {
                domains.push(ActionDomain::Orbit(orbit));
            }
        }
    } else if let Some(blocks) = group.minimal_block_system()? {
        domains.push(ActionDomain::Blocks(blocks));
    }
    for domain in &domains {
        let hom = group.action_homomorphism(domain)?;
        if hom.image.is_trivial() {
            continue;
        }
        if hom.kernel.is_trivial() {
            return top_quotients_rec(&hom.image, opts, rng);
        }
        let below = top_quotients_rec(&hom.image, opts, rng)?;
        types.extend(below.types);
    }
    Ok(TopQuotients {
        types: canonical(types),
        complete: false,
    })
}

fn outcome_from_tops(tops: TopQuotients) -> Result<KappaOutcome, KappaError> {
    let mut best: Option<(u64, SimpleType)> = None;
    let mut unknown: Vec<BigUint> = Vec::new();
    for t in &tops.types {
        match t.minimal_faithful_degree() {
            Ok(mu) => {
                if best.as_ref().map(|(b, _)| mu < *b).unwrap_or(true) {
                    best = Some((mu, t.clone()));
                }
            }
            Err(SimpleIdError::UnknownDegree(o)) => unknown.push(o),
            Err(e) => return Err(e.into()),
        }
    }
    let Some((kappa, attained_by)) = best else {
        let context = if unknown.is_empty() {
            "the quotient search came back empty".to_string()
        } else {
            let orders: Vec<String> = unknown.iter().map(|o| o.to_string()).collect();
            format!(
                "only unrecognized simple quotients of orders {} were found",
                orders.join(", ")
            )
        };
        return Err(KappaError::NoIdentifiableQuotient { context });
    };
    // A quotient that stayed out of sight is nonabelian (the abelian ones
    // are always all found) and so has minimal degree at least 5; the
    // same holds for recognized-but-unnamed quotient orders.  A bound of
    // at most 5 is therefore exact no matter what was missed.
    let mut caveats: Vec<String> = Vec::new();
    let mut exact = true;
    if !unknown.is_empty() {
        let orders: Vec<String> = unknown.iter().map(|o| o.to_string()).collect();
        if kappa > 5 {
            exact = false;
            caveats.push(format!(
                "an unrecognized simple quotient of order {} might act on fewer points",
                orders.join(", ")
            ));
        } else {
            caveats.push(format!(
                "ignored unrecognized simple quotients of orders {}: \
                 their minimal degree is at least 5",
                orders.join(", ")
            ));
        }
    }
    if !tops.complete && kappa > 5 {
        exact = false;
        caveats.push("the quotient search may be incomplete".to_string());
    }
    let note = if caveats.is_empty() {
        None
    } else {
        let prefix = if exact { "" } else { "upper bound only: " };
        Some(format!("{prefix}{}", caveats.join("; ")))
    };
    Ok(KappaOutcome {
        kappa,
        attained_by,
        exact,
        note,
    })
}

/// kappa of a permutation group.
pub fn kappa_perm(group: &PermGroup, opts: &KappaOptions) -> Result<KappaOutcome, KappaError> {
    if group.is_trivial() {
        return Err(KappaError::TrivialGroup);
    }
    // An even abelianization settles everything: the group has an
    // index-2 subgroup, and index 1 is impossible.
    if (group.abelianization_order() % 2u32).is_zero() {
        return Ok(KappaOutcome {
            kappa: 2,
            attained_by: SimpleType::CyclicPrime(BigUint::from(2u32)),
            exact: true,
            note: None,
        });
    }
    outcome_from_tops(top_simple_quotients(group, opts)?)
}

/// kappa of a multiplication-table group; always complete.
pub fn kappa_cayley(cayley: &CayleyGroup) -> Result<KappaOutcome, KappaError> {
    outcome_from_tops(top_quotients_cayley(cayley)?)
}

/// Minimal faithful permutation degree, by the exhaustive subgroup
/// search over the multiplication table.
pub fn mu_perm(group: &PermGroup, bound: usize) -> Result<u64, KappaError> {
    let (cayley, _) = CayleyGroup::from_perm_group(group, bound)?;
    Ok(cayley.brute_mu(bound)?)
}

/// Composition factors with multiplicity, sorted by order then name.
pub fn composition_factors(
    group: &PermGroup,
    opts: &KappaOptions,
) -> Result<Vec<SimpleType>, KappaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let factors = factors_rec(group, opts, &mut rng)?;
    let product: BigUint = factors.iter().map(|t| t.order()).product();
    assert_eq!(
        product,
        group.order(),
        "factor orders must multiply to the group order"
    );
    Ok(canonical_multiset(factors))
}

fn canonical_multiset(mut types: Vec<SimpleType>) -> Vec<SimpleType> {
    types.sort_by_key(|t| (t.order(), t.to_string()));
    types
}

fn factors_rec(
    group: &PermGroup,
    opts: &KappaOptions,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<SimpleType>, KappaError> {
    if group.is_trivial() {
        return Ok(Vec::new());
    }
    let order = group.order();
    if is_prime(&order) {
        return Ok(vec![SimpleType::CyclicPrime(order)]);
    }
    if order <= BigUint::from(opts.cayley_bound) {
        let (cayley, _) = CayleyGroup::from_perm_group(group, opts.cayley_bound)?;
        return cayley_factors(&cayley);
    }
    // Split along an action with a proper kernel: the factors of the
    // group are the factors of the image plus those of the kernel.
    let mut domains: Vec<ActionDomain> = Vec::new();
    if !group.is_transitive() {
        for orbit in group.orbits() {
            if orbit.len() > 1 {
                domains.push(ActionDomain::Orbit(orbit));
            }
        }
    } else if let Some(blocks) = group.minimal_block_system()? {
        domains.push(ActionDomain::Blocks(blocks));
    }
    for domain in &domains {
        let hom = group.action_homomorphism(domain)?;
        if hom.image.is_trivial() {
            continue;
        }
        if hom.kernel.is_trivial() {
            // Same group on fewer points.
            return factors_rec(&hom.image, opts, rng);
        }
        let mut out = factors_rec(&hom.image, opts, rng)?;
        out.extend(factors_rec(&hom.kernel, opts, rng)?);
        return Ok(out);
    }
    // Transitive and primitive from here on.
    let derived = group.derived_subgroup();
    if derived.order() < order {
        let ab = &order / derived.order();
        let mut out: Vec<SimpleType> = prime_factors(&ab, group.degree().max(3) as u64)?
            .into_iter()
            .map(SimpleType::CyclicPrime)
            .collect();
        out.extend(factors_rec(&derived, opts, rng)?);
        return Ok(out);
    }
    match simplicity(group, opts.trials, rng)? {
        SimplicityVerdict::Certified | SimplicityVerdict::ProbablySimple => {
            Ok(vec![identify_simple_perm(group)?])
        }
        SimplicityVerdict::NotSimple(_) => Err(KappaError::Incomplete {
            reason: format!(
                "a primitive perfect group of order {order} has a proper normal subgroup, \
                 but the order exceeds the table bound {} needed to factor the quotient",
                opts.cayley_bound
            ),
        }),
        SimplicityVerdict::Trivial => unreachable!("handled above"),
    }
}

/// Composition factors of a table group: peel one maximal normal
/// subgroup at a time.  Exhaustive and deterministic.
fn cayley_factors(cayley: &CayleyGroup) -> Result<Vec<SimpleType>, KappaError> {
    if cayley.size() == 1 {
        return Ok(Vec::new());
    }
    let n = cayley
        .maximal_normal_subgroups()?
        .into_iter()
        .next()
        .expect("a nontrivial group has a maximal normal subgroup");
    let q = cayley.quotient(&n)?;
    let mut out = vec![identify_simple_cayley(&q.group)?];
    out.extend(cayley_factors(&cayley.subgroup_table(&n)?)?);
    Ok(out)
}

/// Composition factors straight from a multiplication table.
pub fn composition_factors_cayley(cayley: &CayleyGroup) -> Result<Vec<SimpleType>, KappaError> {
    let factors = cayley_factors(cayley)?;
    let product: BigUint = factors.iter().map(|t| t.order()).product();
    assert_eq!(product, BigUint::from(cayley.size()));
    Ok(canonical_multiset(factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::perm::Permutation;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn c(p: u64) -> SimpleType {
        SimpleType::CyclicPrime(big(p))
    }

    fn a(n: u64) -> SimpleType {
        SimpleType::Alternating(n)
    }

    #[test]
    fn kappa_known_values() {
        let opts = KappaOptions::default();
        let cases: Vec<(&str, u64)> = vec![
            ("c2", 2),
            ("c3", 3),
            ("c15", 3),
            ("klein4", 2),
            ("q8", 2),
            ("s3", 2),
            ("s4", 2),
            ("d5", 2),
            ("a4", 3),
            ("a5", 5),
            ("sl2_5", 5),
            ("a5xc2", 2),
            ("psl2_7", 7),
            ("psl2_9", 6),
            ("psl2_11", 11),
        ];
        for (name, expected) in cases {
            let g = catalog::by_name(name).unwrap();
            let out = kappa_perm(&g, &opts).unwrap();
            assert_eq!(out.kappa, expected, "{name}");
            assert!(out.exact, "{name} should be exact");
        }
    }

    #[test]
    fn kappa_rejects_trivial_group() {
        let opts = KappaOptions::default();
        assert!(matches!(
            kappa_perm(&PermGroup::trivial(4), &opts),
            Err(KappaError::TrivialGroup)
        ));
    }

    #[test]
    fn kappa_attained_by_reports_a_witness_quotient() {
        let opts = KappaOptions::default();
        let out = kappa_perm(&catalog::by_name("c15").unwrap(), &opts).unwrap();
        assert_eq!(out.attained_by, c(3));
        let out = kappa_perm(&catalog::by_name("sl2_5").unwrap(), &opts).unwrap();
        assert_eq!(out.attained_by, a(5));
        let out = kappa_perm(&catalog::by_name("s4").unwrap(), &opts).unwrap();
        assert_eq!(out.attained_by, c(2));
    }

    #[test]
    fn top_quotients_examples() {
        let opts = KappaOptions::default();
        let tops = top_simple_quotients(&catalog::by_name("c15").unwrap(), &opts).unwrap();
        assert!(tops.complete);
        assert_eq!(tops.types, vec![c(3), c(5)]);

        let tops = top_simple_quotients(&catalog::by_name("s4").unwrap(), &opts).unwrap();
        assert!(tops.complete);
        assert_eq!(tops.types, vec![c(2)]);

        let tops = top_simple_quotients(&catalog::by_name("a5xc2").unwrap(), &opts).unwrap();
        assert!(tops.complete);
        assert_eq!(tops.types, vec![c(2), a(5)]);

        let tops = top_simple_quotients(&catalog::by_name("sl2_5").unwrap(), &opts).unwrap();
        assert!(tops.complete);
        assert_eq!(tops.types, vec![a(5)]);

        let tops = top_simple_quotients(&catalog::by_name("klein4").unwrap(), &opts).unwrap();
        assert!(tops.complete);
        assert_eq!(tops.types, vec![c(2)]);
    }

    #[test]
    fn composition_factor_examples() {
        let opts = KappaOptions::default();
        let cases: Vec<(&str, Vec<SimpleType>)> = vec![
            ("c2", vec![c(2)]),
            ("c15", vec![c(3), c(5)]),
            ("klein4", vec![c(2), c(2)]),
            ("q8", vec![c(2), c(2), c(2)]),
            ("s3", vec![c(2), c(3)]),
            ("s4", vec![c(2), c(2), c(2), c(3)]),
            ("d6", vec![c(2), c(2), c(3)]),
            ("a4", vec![c(2), c(2), c(3)]),
            ("a5", vec![a(5)]),
            ("sl2_5", vec![c(2), a(5)]),
            ("a5xc2", vec![c(2), a(5)]),
            ("psl2_7", vec![SimpleType::Psl { n: 2, q: 7 }]),
            ("psl2_9", vec![a(6)]),
            ("s5", vec![c(2), a(5)]),
        ];
        for (name, expected) in cases {
            let g = catalog::by_name(name).unwrap();
            assert_eq!(composition_factors(&g, &opts).unwrap(), expected, "{name}");
        }
    }

    #[test]
    fn factor_recursion_splits_over_small_table_bounds() {
        // Force the recursion through orbit, block, abelianization and
        // simplicity splits by shrinking the table bound.
        let opts = KappaOptions {
            cayley_bound: 10,
            ..KappaOptions::default()
        };
        let s4 = catalog::by_name("s4").unwrap();
        assert_eq!(
            composition_factors(&s4, &opts).unwrap(),
            vec![c(2), c(2), c(2), c(3)]
        );
        let opts50 = KappaOptions {
            cayley_bound: 50,
            ..KappaOptions::default()
        };
        // SL(2,5) on 24 vectors: blocks {v, -v} split off the center.
        let sl = catalog::by_name("sl2_5").unwrap();
        assert_eq!(composition_factors(&sl, &opts50).unwrap(), vec![c(2), a(5)]);
        // Disjoint union of two orbits.
        let prod = catalog::by_name("a5xc7").unwrap();
        assert_eq!(
            composition_factors(&prod, &opts50).unwrap(),
            vec![c(7), a(5)]
        );
    }

    /// A5 x A5 acting on the 60 elements of A5 by x -> a^-1 x b: the
    /// point stabilizer is the diagonal, which is maximal, so the action
    /// is primitive while the group is perfect and not simple.
    fn diagonal_type_square() -> PermGroup {
        let a5 = catalog::by_name("a5").unwrap();
        let elements = a5.elements(60).unwrap();
        let index_of = |p: &Permutation| elements.iter().position(|e| e == p).unwrap();
        let mut gens = Vec::new();
        for g in a5.generators() {
            let left: Vec<usize> = elements
                .iter()
                .map(|x| index_of(&g.inverse().compose(x).unwrap()))
                .collect();
            let right: Vec<usize> = elements
                .iter()
                .map(|x| index_of(&x.compose(g).unwrap()))
                .collect();
            gens.push(Permutation::from_images(left).unwrap());
            gens.push(Permutation::from_images(right).unwrap());
        }
        PermGroup::new(60, gens).unwrap()
    }

    #[test]
    fn primitive_perfect_nonsimple_is_reported_incomplete_over_bound() {
        let g = diagonal_type_square();
        assert_eq!(g.order(), big(3600));
        assert!(g.is_transitive());
        assert!(g.minimal_block_system().unwrap().is_none(), "primitive");
        assert!(g.is_perfect());
        let opts = KappaOptions {
            cayley_bound: 100,
            ..KappaOptions::default()
        };
        assert!(matches!(
            composition_factors(&g, &opts),
            Err(KappaError::Incomplete { .. })
        ));
    }

    #[test]
    fn diagonal_type_square_resolves_exactly_within_default_bound() {
        let g = diagonal_type_square();
        let opts = KappaOptions::default();
        assert_eq!(composition_factors(&g, &opts).unwrap(), vec![a(5), a(5)]);
        let out = kappa_perm(&g, &opts).unwrap();
        assert_eq!(out.kappa, 5);
        assert!(out.exact);
        assert_eq!(out.attained_by, a(5));
    }

    #[test]
    fn kappa_cayley_matches_perm_route() {
        let opts = KappaOptions::default();
        for name in ["s4", "q8", "c15", "a5", "sl2_5", "a5xc2"] {
            let g = catalog::by_name(name).unwrap();
            let (cayley, _) = CayleyGroup::from_perm_group(&g, 5000).unwrap();
            let from_table = kappa_cayley(&cayley).unwrap();
            let from_perm = kappa_perm(&g, &opts).unwrap();
            assert_eq!(from_table.kappa, from_perm.kappa, "{name}");
            assert!(from_table.exact, "{name}");
        }
    }

    #[test]
    fn kappa_agrees_with_exhaustive_minimal_index() {
        for name in [
            "s3", "s4", "q8", "klein4", "c15", "a4", "d4", "d5", "d6", "a5", "sl2_5",
        ] {
            let g = catalog::by_name(name).unwrap();
            let (cayley, _) = CayleyGroup::from_perm_group(&g, 5000).unwrap();
            let fast = kappa_cayley(&cayley).unwrap();
            let brute = cayley.brute_kappa(400).unwrap();
            assert_eq!(fast.kappa as usize, brute, "{name}");
        }
    }

    #[test]
    fn mu_perm_known_values() {
        let cases: Vec<(&str, u64)> = vec![
            ("c2", 2),
            ("c6", 5),
            ("c15", 8),
            ("klein4", 4),
            ("q8", 8),
            ("s3", 3),
            ("s4", 4),
            ("a5", 5),
            ("d4", 4),
        ];
        for (name, expected) in cases {
            let g = catalog::by_name(name).unwrap();
            assert_eq!(mu_perm(&g, 400).unwrap(), expected, "{name}");
        }
    }

    #[test]
    fn unknown_quotients_block_or_annotate_the_answer() {
        // Only an unrecognized quotient: no bound at all.
        let tops = TopQuotients {
            types: vec![SimpleType::UnknownSimple(big(29_120))],
            complete: true,
        };
        assert!(matches!(
            outcome_from_tops(tops),
            Err(KappaError::NoIdentifiableQuotient { .. })
        ));
        // A small known quotient beats any unrecognized one.
        let tops = TopQuotients {
            types: vec![c(3), SimpleType::UnknownSimple(big(29_120))],
            complete: true,
        };
        let out = outcome_from_tops(tops).unwrap();
        assert_eq!(out.kappa, 3);
        assert!(out.exact);
        assert!(out.note.unwrap().contains("ignored"));
        // A large known quotient does not.
        let tops = TopQuotients {
            types: vec![
                SimpleType::Psl { n: 2, q: 7 },
                SimpleType::UnknownSimple(big(29_120)),
            ],
            complete: true,
        };
        let out = outcome_from_tops(tops).unwrap();
        assert_eq!(out.kappa, 7);
        assert!(!out.exact);
        // Incomplete search with a large bound is flagged.
        let tops = TopQuotients {
            types: vec![SimpleType::Psl { n: 2, q: 7 }],
            complete: false,
        };
        let out = outcome_from_tops(tops).unwrap();
        assert!(!out.exact);
        assert!(out.note.unwrap().contains("incomplete"));
        // Incomplete search with a bound of at most 5 stays exact.
        let tops = TopQuotients {
            types: vec![c(5)],
            complete: false,
        };
        let out = outcome_from_tops(tops).unwrap();
        assert_eq!(out.kappa, 5);
        assert!(out.exact);
    }

    #[test]
    fn seeds_do_not_change_results() {
        for seed in [0u64, 1, 987_654_321] {
            let opts = KappaOptions {
                seed,
                ..KappaOptions::default()
            };
            let g = catalog::by_name("psl2_7").unwrap();
            let out = kappa_perm(&g, &opts).unwrap();
            assert_eq!(out.kappa, 7);
            assert_eq!(
                composition_factors(&g, &opts).unwrap(),
                vec![SimpleType::Psl { n: 2, q: 7 }]
            );
        }
    }
}
