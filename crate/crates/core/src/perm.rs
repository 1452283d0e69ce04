//! Permutations on `{0, 1, ..., n-1}` in image-table form.
//!
//! A [`Permutation`] stores the image of every point, so applying it is one
//! array lookup.  Composition is left-to-right: `p.compose(&q)` maps `x` to
//! `q(p(x))`.  The textual form is disjoint cycle notation with 1-based
//! points, e.g. `(1,2)(3,4,5)`; the identity prints as `()`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image table is not a bijection: value {value} appears twice")]
    NotBijective { value: usize },
    #[error("image table entry {value} is out of range for degree {degree}")]
    ImageOutOfRange { value: usize, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A bijection of `{0, ..., degree-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(PermError::ImageOutOfRange {
                    value: v,
                    degree: n,
                });
            }
            if seen[v] {
                return Err(PermError::NotBijective { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 0-based points.  Cycles must not repeat a point.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::ImageOutOfRange { value: p, degree });
                }
                if touched[p] {
                    return Err(PermError::NotBijective { value: p });
                }
                touched[p] = true;
                let q = cycle[(i + 1) % cycle.len()];
                images[p] = q;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of one point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Smallest point moved by the permutation, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i != v)
            .map(|(i, _)| i)
    }

    /// Left-to-right composition: the result maps `x` to `other(self(x))`.
    /// Errors when the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Same as [`compose`](Self::compose) for internal use where degrees are
    /// known to agree.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Conjugate `g^-1 * self * g`, written `self^g`.
    pub(crate) fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().mul(self).mul(g)
    }

    /// Multiplicative order, i.e. the lcm of the cycle lengths.
    pub fn element_order(&self) -> u64 {
        let mut order: u128 = 1;
        for cycle in self.cycles() {
            order = num_integer::lcm(order, cycle.len() as u128);
            assert!(
                order <= u64::MAX as u128,
                "element order exceeds u64 at degree {}",
                self.degree()
            );
        }
        order as u64
    }

    /// `self` composed with itself `k` times, by binary exponentiation.
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    /// Nontrivial cycles in increasing order of their smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses disjoint cycle notation with 1-based points, e.g.
    /// `(1,2)(3,4,5)`.  `()` denotes the identity.  Whitespace between
    /// cycles and around numbers is ignored.  `line` is used only for
    /// error reporting.
    pub fn parse_cycles(degree: usize, text: &str, line: usize) -> Result<Self, PermError> {
        let err = |message: String| PermError::Parse { line, message };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(err("expected a permutation in cycle notation".into()));
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(err(format!("expected '(' at: {rest:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| err("unclosed cycle: missing ')'".into()))?;
            let body = &rest[1..close];
            rest = rest[close + 1..].trim_start();
            let body = body.trim();
            if body.is_empty() {
                continue; // () is the identity cycle
            }
            let mut cycle = Vec::new();
            for part in body.split(',') {
                let part = part.trim();
                let value: usize = part
                    .parse()
                    .map_err(|_| err(format!("invalid point {part:?} in cycle")))?;
                if value == 0 {
                    return Err(err("points are 1-based; found 0".into()));
                }
                if value > degree {
                    return Err(err(format!(
                        "point {value} exceeds the declared degree {degree}"
                    )));
                }
                cycle.push(value - 1);
            }
            if cycle.len() == 1 {
                return Err(err("a cycle needs at least two points".into()));
            }
            cycles.push(cycle);
        }
        Self::from_cycles(degree, &cycles).map_err(|e| err(e.to_string()))
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation with 1-based points; identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

/// A parsed generators file: declared degree plus the listed permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

/// Parses the generators file format: a first line `degree n`, then one
/// permutation per line in cycle notation.  Blank lines are skipped.
pub fn parse_generator_file(text: &str) -> Result<GeneratorFile, PermError> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| PermError::Parse {
                        line: line_no,
                        message: format!("expected 'degree n' as the first line, found {line:?}"),
                    })?;
                let n: usize = rest.trim().parse().map_err(|_| PermError::Parse {
                    line: line_no,
                    message: format!("invalid degree {:?}", rest.trim()),
                })?;
                if n == 0 {
                    return Err(PermError::Parse {
                        line: line_no,
                        message: "degree must be at least 1".into(),
                    });
                }
                degree = Some(n);
            }
            Some(n) => generators.push(Permutation::parse_cycles(n, line, line_no)?),
        }
    }
    let degree = degree.ok_or(PermError::Parse {
        line: 1,
        message: "empty file: expected 'degree n'".into(),
    })?;
    if generators.is_empty() {
        return Err(PermError::Parse {
            line: 1,
            message: "no generators listed after the degree line".into(),
        });
    }
    Ok(GeneratorFile { degree, generators })
}

/// Renders a generators file in the same format accepted by
/// [`parse_generator_file`].
pub fn write_generator_file(degree: usize, generators: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // (0 1) then (1 2) sends 0 -> 1 -> 2.
        let p = perm(&[1, 0, 2]);
        let q = perm(&[0, 2, 1]);
        let r = p.compose(&q).unwrap();
        assert_eq!(r.images(), &[2, 0, 1]);
    }

    #[test]
    fn compose_with_identity() {
        let p = perm(&[2, 0, 1, 3]);
        let id = Permutation::identity(4);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert_eq!(
            p.compose(&q),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_of_three_cycle() {
        let p = perm(&[1, 2, 0]); // (0 1 2)
        assert_eq!(p.inverse().images(), &[2, 0, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = perm(&[3, 1, 4, 0, 2]);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert_eq!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(PermError::NotBijective { value: 0 })
        );
        assert_eq!(
            Permutation::from_images(vec![0, 3]),
            Err(PermError::ImageOutOfRange {
                value: 3,
                degree: 2
            })
        );
    }

    #[test]
    fn from_cycles_rejects_repeated_point() {
        assert!(Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let p = Permutation::parse_cycles(5, "(1,2)(3,4,5)", 1).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 4, 2]);
        assert_eq!(p.to_string(), "(1,2)(3,4,5)");
        let back = Permutation::parse_cycles(5, &p.to_string(), 1).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn parse_identity() {
        let p = Permutation::parse_cycles(3, "()", 1).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.to_string(), "()");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = Permutation::parse_cycles(3, "(1,4)", 7).unwrap_err();
        match e {
            PermError::Parse { line, message } => {
                assert_eq!(line, 7);
                assert!(message.contains("exceeds the declared degree"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(Permutation::parse_cycles(3, "(0,1)", 1).is_err());
        assert!(Permutation::parse_cycles(3, "(1,2", 1).is_err());
        assert!(Permutation::parse_cycles(3, "(1)", 1).is_err());
    }

    #[test]
    fn generator_file_roundtrip() {
        let text = "degree 5\n(1,2)\n(1,2,3,4,5)\n";
        let parsed = parse_generator_file(text).unwrap();
        assert_eq!(parsed.degree, 5);
        assert_eq!(parsed.generators.len(), 2);
        assert_eq!(
            write_generator_file(parsed.degree, &parsed.generators),
            text
        );
    }

    #[test]
    fn generator_file_errors() {
        assert!(parse_generator_file("").is_err());
        assert!(parse_generator_file("degree 0\n()\n").is_err());
        assert!(parse_generator_file("degree 3\n").is_err());
        let e = parse_generator_file("(1,2)\n").unwrap_err();
        assert!(e.to_string().contains("line 1"));
    }

    #[test]
    fn element_order_is_cycle_lcm() {
        let p = Permutation::parse_cycles(5, "(1,2)(3,4,5)", 1).unwrap();
        assert_eq!(p.element_order(), 6);
        assert_eq!(Permutation::identity(4).element_order(), 1);
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let p = Permutation::parse_cycles(6, "(1,2,3)(4,5)", 1).unwrap();
        let mut by_hand = Permutation::identity(6);
        for k in 0..=12 {
            assert_eq!(p.pow(k), by_hand, "k = {k}");
            by_hand = by_hand.compose(&p).unwrap();
        }
        assert!(p.pow(p.element_order()).is_identity());
    }

    fn arbitrary_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut images: Vec<usize> = (0..degree).collect();
            for i in (1..degree).rev() {
                let j = rng.random_range(0..=i);
                images.swap(i, j);
            }
            Permutation::from_images(images).unwrap()
        })
    }

    proptest! {
        #[test]
        fn prop_compose_inverse_is_identity(p in arbitrary_perm(9)) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn prop_display_parse_roundtrip(p in arbitrary_perm(9)) {
            let back = Permutation::parse_cycles(9, &p.to_string(), 1).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
