//! Named constructions of well-known permutation groups.
//!
//! Names are lowercase: `c12`, `s5`, `a6`, `d4`, `q8`, `klein4`,
//! `psl2_7`, `sl2_5`, and products of those joined with `x`, as in
//! `a5xc2`.  Every group comes with its natural action: cyclic and
//! dihedral groups on n points, PSL(2,q) on the q + 1 points of the
//! projective line, SL(2,5) on the 24 nonzero vectors of its plane, and
//! the quaternion group on itself.

use thiserror::Error;

use crate::group::{GroupError, PermGroup};
use crate::perm::Permutation;
use crate::simple_id::powmod;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("bad parameter in {name:?}: {reason}")]
    BadParameter { name: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The groups exercised by the test corpus, smallest order first.
pub const STANDARD_NAMES: [&str; 22] = [
    "c2", "c3", "klein4", "c5", "s3", "c6", "c7", "q8", "d4", "d5", "c11", "a4", "d6", "c13",
    "c15", "s4", "a5", "sl2_5", "a5xc2", "psl2_7", "psl2_9", "psl2_11",
];

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("catalog image vectors are bijections")
}

/// Cyclic group of order n, acting on n points.
pub fn cyclic(n: usize) -> Result<PermGroup, CatalogError> {
    if n == 0 {
        return Err(CatalogError::BadParameter {
            name: format!("c{n}"),
            reason: "order must be at least 1".into(),
        });
    }
    let images: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    Ok(PermGroup::new(n, vec![perm(images)])?)
}

/// Symmetric group on n points.
pub fn symmetric(n: usize) -> Result<PermGroup, CatalogError> {
    if n == 0 {
        return Err(CatalogError::BadParameter {
            name: format!("s{n}"),
            reason: "degree must be at least 1".into(),
        });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(perm(swap));
        gens.push(perm((0..n).map(|x| (x + 1) % n).collect()));
    }
    Ok(PermGroup::new(n, gens)?)
}

/// Alternating group on n points, n at least 3.
pub fn alternating(n: usize) -> Result<PermGroup, CatalogError> {
    if n < 3 {
        return Err(CatalogError::BadParameter {
            name: format!("a{n}"),
            reason: "degree must be at least 3".into(),
        });
    }
    let mut three: Vec<usize> = (0..n).collect();
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    let mut gens = vec![perm(three)];
    if n > 3 {
        // An n-cycle is even exactly when n is odd; otherwise rotate the
        // last n - 1 points.
        let cycle: Vec<usize> = if n % 2 == 1 {
            (0..n).map(|x| (x + 1) % n).collect()
        } else {
            (0..n)
                .map(|x| if x == 0 { 0 } else { x % (n - 1) + 1 })
                .collect()
        };
        gens.push(perm(cycle));
    }
    Ok(PermGroup::new(n, gens)?)
}

/// Dihedral group of order 2n acting on the n vertices of a polygon.
pub fn dihedral(n: usize) -> Result<PermGroup, CatalogError> {
    if n < 3 {
        return Err(CatalogError::BadParameter {
            name: format!("d{n}"),
            reason: "the polygon needs at least 3 vertices".into(),
        });
    }
    let rotation = perm((0..n).map(|x| (x + 1) % n).collect());
    let reflection = perm((0..n).map(|x| (n - x) % n).collect());
    Ok(PermGroup::new(n, vec![rotation, reflection])?)
}

/// The Klein four-group as double transpositions on 4 points.
pub fn klein4() -> PermGroup {
    let a = perm(vec![1, 0, 2, 3]);
    let b = perm(vec![0, 1, 3, 2]);
    PermGroup::new(4, vec![a, b]).expect("fixed generators")
}

/// Unit quaternions 0..7 encoded as axis * 2 + sign, axes 1, i, j, k.
fn quat_mul(x: usize, y: usize) -> usize {
    const AXIS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (s, axis) = AXIS[x >> 1][y >> 1];
    (axis << 1) | ((x ^ y ^ s) & 1)
}

/// The quaternion group acting on its own 8 elements by multiplication.
pub fn quaternion8() -> PermGroup {
    let by_i = perm((0..8).map(|x| quat_mul(x, 2)).collect());
    let by_j = perm((0..8).map(|x| quat_mul(x, 4)).collect());
    PermGroup::new(8, vec![by_i, by_j]).expect("fixed generators")
}

/// PSL(2, p) for prime p on the projective line of p + 1 points.
/// Point p stands for infinity.  Generated by x -> x + 1 and x -> -1/x.
fn psl2_prime(p: u64) -> PermGroup {
    let n = p as usize + 1;
    let inf = p as usize;
    let translate = perm(
        (0..n)
            .map(|x| if x == inf { inf } else { (x + 1) % p as usize })
            .collect(),
    );
    let flip = perm(
        (0..n)
            .map(|x| {
                if x == inf {
                    0
                } else if x == 0 {
                    inf
                } else {
                    (p - powmod(x as u64, p - 2, p)) as usize % p as usize
                }
            })
            .collect(),
    );
    PermGroup::new(n, vec![translate, flip]).expect("fixed generators")
}

/// PSL(2, 9) on the 10 points of the projective line over the field of
/// nine elements, realized as quadratic extension of the integers mod 3.
/// The element a + b*sqrt(-1) is the point a + 3b; point 9 is infinity.
fn psl2_9() -> PermGroup {
    let n = 10usize;
    let inf = 9usize;
    let add = |x: usize, y: usize| (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3);
    let neg_inv = |x: usize| {
        let (a, b) = (x % 3, x / 3);
        // norm (a^2 + b^2) is its own inverse mod 3; 1/(a+bt) = (a-bt)/norm
        let norm = (a * a + b * b) % 3;
        let re = a * norm % 3;
        let im = (3 - b) % 3 * norm % 3;
        // negate
        (3 - re) % 3 + 3 * ((3 - im) % 3)
    };
    let shift = |delta: usize| {
        perm(
            (0..n)
                .map(|x| if x == inf { inf } else { add(x, delta) })
                .collect(),
        )
    };
    let flip = perm(
        (0..n)
            .map(|x| {
                if x == inf {
                    0
                } else if x == 0 {
                    inf
                } else {
                    neg_inv(x)
                }
            })
            .collect(),
    );
    PermGroup::new(n, vec![shift(1), shift(3), flip]).expect("fixed generators")
}

/// SL(2, 5) acting on the 24 nonzero row vectors of its natural plane.
/// The vector (a, b) is the point 5a + b - 1.
pub fn sl2_5() -> PermGroup {
    let p = 5usize;
    let idx = |a: usize, b: usize| a * p + b - 1;
    let mut e12 = vec![0usize; p * p - 1];
    let mut e21 = vec![0usize; p * p - 1];
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            e12[idx(a, b)] = idx(a, (a + b) % p);
            e21[idx(a, b)] = idx((a + b) % p, b);
        }
    }
    PermGroup::new(p * p - 1, vec![perm(e12), perm(e21)]).expect("fixed generators")
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup, GroupError> {
    let da = a.degree();
    let db = b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<usize> = (0..da + db).collect();
        images[..da].copy_from_slice(g.images());
        gens.push(perm(images));
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (0..da + db).collect();
        for (x, &y) in g.images().iter().enumerate() {
            images[da + x] = da + y;
        }
        gens.push(perm(images));
    }
    PermGroup::new(da + db, gens)
}

fn atom_by_name(name: &str) -> Result<PermGroup, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    let parse_n = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
    match name {
        "klein4" => return Ok(klein4()),
        "q8" | "quaternion8" => return Ok(quaternion8()),
        "sl2_5" => return Ok(sl2_5()),
        "psl2_5" => return Ok(psl2_prime(5)),
        "psl2_7" => return Ok(psl2_prime(7)),
        "psl2_9" => return Ok(psl2_9()),
        "psl2_11" => return Ok(psl2_prime(11)),
        _ => {}
    }
    // Long forms: `cyclic:12`, `alternating:5`, `psl2:7` and friends.
    if let Some((family, param)) = name.split_once(':') {
        let n = param
            .parse::<usize>()
            .map_err(|_| CatalogError::BadParameter {
                name: name.to_string(),
                reason: format!("parameter {param:?} is not a number"),
            })?;
        return match family {
            "cyclic" => cyclic(n),
            "symmetric" => symmetric(n),
            "alternating" => alternating(n),
            "dihedral" => dihedral(n),
            "psl2" => match n {
                5 | 7 | 11 => Ok(psl2_prime(n as u64)),
                9 => Ok(psl2_9()),
                _ => Err(CatalogError::BadParameter {
                    name: name.to_string(),
                    reason: format!("field size {n} is not built in"),
                }),
            },
            _ => Err(unknown()),
        };
    }
    if let Some(rest) = name
        .strip_prefix("psl2_")
        .or_else(|| name.strip_prefix("sl2_"))
    {
        return Err(CatalogError::BadParameter {
            name: name.to_string(),
            reason: format!("field size {rest} is not built in"),
        });
    }
    if name.len() < 2 || !name.is_ascii() {
        return Err(unknown());
    }
    match name.split_at(1) {
        ("c", rest) => cyclic(parse_n(rest)?),
        ("s", rest) => symmetric(parse_n(rest)?),
        ("a", rest) => alternating(parse_n(rest)?),
        ("d", rest) => dihedral(parse_n(rest)?),
        _ => Err(unknown()),
    }
}

/// Looks up a catalog name, resolving `x`-joined products left to right.
pub fn by_name(name: &str) -> Result<PermGroup, CatalogError> {
    let mut parts = name.split('x');
    let first = parts.next().expect("split yields at least one part");
    let mut group = atom_by_name(first)?;
    for part in parts {
        group = direct_product(&group, &atom_by_name(part)?)?;
    }
    Ok(group)
}

/// The whole standard corpus with its names.
pub fn standard_corpus() -> Vec<(&'static str, PermGroup)> {
    STANDARD_NAMES
        .iter()
        .map(|&n| (n, by_name(n).expect("standard names resolve")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simple_id::{identify_simple_perm, SimpleType};
    use num_bigint::BigUint;

    #[test]
    fn standard_corpus_orders() {
        let expected: Vec<(&str, u64)> = vec![
            ("c2", 2),
            ("c3", 3),
            ("klein4", 4),
            ("c5", 5),
            ("s3", 6),
            ("c6", 6),
            ("c7", 7),
            ("q8", 8),
            ("d4", 8),
            ("d5", 10),
            ("c11", 11),
            ("a4", 12),
            ("d6", 12),
            ("c13", 13),
            ("c15", 15),
            ("s4", 24),
            ("a5", 60),
            ("sl2_5", 120),
            ("a5xc2", 120),
            ("psl2_7", 168),
            ("psl2_9", 360),
            ("psl2_11", 660),
        ];
        assert_eq!(expected.len(), STANDARD_NAMES.len());
        for (name, order) in expected {
            assert!(STANDARD_NAMES.contains(&name), "{name} missing from corpus");
            let g = by_name(name).unwrap();
            assert_eq!(g.order(), BigUint::from(order), "{name}");
        }
    }

    #[test]
    fn families_have_expected_orders() {
        for n in 1..8 {
            assert_eq!(cyclic(n).unwrap().order(), BigUint::from(n));
        }
        let mut fact = BigUint::from(1u32);
        for n in 1..8u32 {
            fact *= n;
            assert_eq!(symmetric(n as usize).unwrap().order(), fact);
        }
        for n in 3..9usize {
            assert_eq!(
                alternating(n).unwrap().order() * 2u32,
                symmetric(n).unwrap().order()
            );
            assert_eq!(dihedral(n).unwrap().order(), BigUint::from(2 * n));
        }
    }

    #[test]
    fn quaternion_group_structure() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), BigUint::from(8u32));
        let mut orders: Vec<u64> = q8
            .elements(8)
            .unwrap()
            .iter()
            .map(|e| e.element_order())
            .collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4], "one involution only");
        assert!(!q8.derived_subgroup().is_trivial(), "nonabelian");
    }

    #[test]
    fn projective_groups_are_simple_and_transitive() {
        for (name, expected) in [
            ("psl2_5", SimpleType::Alternating(5)),
            ("psl2_7", SimpleType::Psl { n: 2, q: 7 }),
            ("psl2_9", SimpleType::Alternating(6)),
            ("psl2_11", SimpleType::Psl { n: 2, q: 11 }),
        ] {
            let g = by_name(name).unwrap();
            assert!(g.is_transitive(), "{name}");
            assert!(g.is_perfect(), "{name}");
            assert_eq!(identify_simple_perm(&g).unwrap(), expected, "{name}");
        }
    }

    #[test]
    fn sl2_5_is_perfect_but_not_simple() {
        let g = sl2_5();
        assert_eq!(g.order(), BigUint::from(120u32));
        assert!(g.is_perfect());
        assert!(g.is_transitive());
        // The center is the unique involution -I, so there is exactly one
        // element of order 2.
        let involutions = g
            .elements(120)
            .unwrap()
            .iter()
            .filter(|e| e.element_order() == 2)
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn direct_products_multiply_orders_and_degrees() {
        let g = by_name("a5xc2").unwrap();
        assert_eq!(g.degree(), 7);
        assert_eq!(g.order(), BigUint::from(120u32));
        let g = by_name("c2xc2xc2").unwrap();
        assert_eq!(g.order(), BigUint::from(8u32));
        assert_eq!(g.degree(), 6);
        assert_eq!(g.abelianization_order(), BigUint::from(8u32));
    }

    #[test]
    fn bad_names_are_rejected() {
        assert!(matches!(by_name("z5"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(by_name(""), Err(CatalogError::UnknownName(_))));
        assert!(matches!(by_name("c"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(by_name("cx"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(
            by_name("c0"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            by_name("d2"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            by_name("a2"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            by_name("psl2_13"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            by_name("sl2_7"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            by_name("psl2:4"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            by_name("cyclic:no"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            by_name("wreath:3"),
            Err(CatalogError::UnknownName(_))
        ));
    }

    #[test]
    fn long_names_match_short_ones() {
        let pairs = [
            ("cyclic:6", "c6"),
            ("symmetric:4", "s4"),
            ("alternating:5", "a5"),
            ("dihedral:5", "d5"),
            ("quaternion8", "q8"),
            ("psl2:7", "psl2_7"),
            ("psl2:9", "psl2_9"),
            ("alternating:5xcyclic:2", "a5xc2"),
        ];
        for (long, short) in pairs {
            let a = by_name(long).unwrap();
            let b = by_name(short).unwrap();
            assert_eq!(a.order(), b.order(), "{long} vs {short}");
            assert_eq!(a.degree(), b.degree(), "{long} vs {short}");
        }
        // A one-element group is constructible; downstream kappa rejects it.
        assert_eq!(by_name("cyclic:1").unwrap().order(), BigUint::from(1u32));
    }

    #[test]
    fn standard_corpus_resolves() {
        assert_eq!(standard_corpus().len(), STANDARD_NAMES.len());
    }

    #[test]
    fn table_realization_preserves_order_and_element_orders() {
        use crate::cayley::CayleyGroup;
        for (name, group) in standard_corpus() {
            let (cayley, perms) = CayleyGroup::from_perm_group(&group, 5000).unwrap();
            assert_eq!(BigUint::from(cayley.size()), group.order(), "{name}");
            for (i, p) in perms.iter().enumerate() {
                assert_eq!(
                    cayley.element_orders()[i],
                    p.element_order(),
                    "{name} element {i}"
                );
            }
        }
    }
}
