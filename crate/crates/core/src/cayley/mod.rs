//! Groups given by an explicit multiplication table.
//!
//! Table groups are the desk-scale workhorse: every question about
//! subgroups, quotients and cores is answered by direct enumeration over
//! element indices.  Element 0 is always the identity; input tables with
//! the identity elsewhere are relabeled on construction.
//!
//! Validation is complete: Latin-square structure, a two-sided identity,
//! and associativity.  Associativity is checked with Light's test against
//! a greedily chosen generating set, which is equivalent to checking all
//! `m^3` triples but runs in `O(|gens| * m^2)`.

mod lattice;
mod subgroup;

pub use lattice::IndexInequalityReport;
pub use subgroup::SubgroupSet;

use std::collections::HashMap;

use thiserror::Error;

use crate::group::{GroupError, PermGroup};
use crate::perm::Permutation;

#[derive(Debug, Error)]
pub enum CayleyError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a Latin square: {axis} {index} repeats value {value}")]
    NotLatin {
        axis: &'static str,
        index: usize,
        value: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({a} * {b}) * {c} != {a} * ({b} * {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group of order {size} exceeds the bound {bound}")]
    SizeOverBound { size: usize, bound: usize },
    #[error("the element set is not a subgroup: {reason}")]
    NotSubgroup { reason: String },
    #[error("subgroup is not normal: conjugating element {element} by {by} leaves the set")]
    NotNormal { element: usize, by: usize },
    #[error("the group is not simple")]
    NotSimple,
    #[error("\u{3ba} undefined: no proper subgroup")]
    TrivialGroup,
    #[error("subgroup universe {got} does not match group order {expected}")]
    UniverseMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite group as a full multiplication table over `0..size`, with
/// element 0 the identity.  Inverses and element orders are precomputed.
#[derive(Debug, Clone)]
pub struct CayleyGroup {
    size: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    element_order: Vec<u64>,
}

/// A quotient group together with the projection map from the source.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: CayleyGroup,
    /// `projection[x]` is the index of the coset of `x` in the quotient.
    pub projection: Vec<usize>,
}

impl CayleyGroup {
    /// Validates a multiplication table and builds the group.  The second
    /// return value is `Some(e)` when the identity sat at index `e != 0`
    /// and the table was relabeled to move it to index 0.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<(CayleyGroup, Option<usize>), CayleyError> {
        let m = rows.len();
        if m == 0 {
            return Err(CayleyError::Parse {
                line: 1,
                message: "empty table".into(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(CayleyError::Parse {
                    line: i + 2,
                    message: format!("row {i} has {} entries, expected {m}", row.len()),
                });
            }
            for &v in row {
                if v >= m {
                    return Err(CayleyError::Parse {
                        line: i + 2,
                        message: format!("entry {v} out of range for order {m}"),
                    });
                }
            }
        }
        // Latin square: every row and every column is a permutation.
        for (i, row) in rows.iter().enumerate() {
            let mut seen = vec![false; m];
            for &v in row {
                if seen[v] {
                    return Err(CayleyError::NotLatin {
                        axis: "row",
                        index: i,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }
        for j in 0..m {
            let mut seen = vec![false; m];
            for row in rows.iter() {
                let v = row[j];
                if seen[v] {
                    return Err(CayleyError::NotLatin {
                        axis: "column",
                        index: j,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }
        // Locate the two-sided identity.
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(CayleyError::NoIdentity)?;
        let relabeled = (identity != 0).then_some(identity);
        let mut flat = vec![0u32; m * m];
        let relabel = |x: usize| -> usize {
            // Swap the labels 0 and `identity`; the map is an involution.
            if x == 0 {
                identity
            } else if x == identity {
                0
            } else {
                x
            }
        };
        for a in 0..m {
            for b in 0..m {
                flat[a * m + b] = relabel(rows[relabel(a)][relabel(b)]) as u32;
            }
        }
        Self::from_flat(m, flat).map(|g| (g, relabeled))
    }

    /// Builds from a flat row-major table whose identity is already 0.
    /// Runs the associativity check and precomputes inverses and orders.
    fn from_flat(m: usize, table: Vec<u32>) -> Result<CayleyGroup, CayleyError> {
        let mul = |a: usize, b: usize| table[a * m + b] as usize;
        // Light's associativity test over a generating set.
        let gens = {
            // Greedy: close under right multiplication, adding the smallest
            // unreached element as a new generator.
            let mut reached = vec![false; m];
            reached[0] = true;
            let mut count = 1;
            let mut gens: Vec<usize> = Vec::new();
            while count < m {
                let next = (0..m).find(|&x| !reached[x]).unwrap();
                gens.push(next);
                let mut work = vec![0usize];
                // Re-run the closure with the enlarged generator list.
                reached = vec![false; m];
                reached[0] = true;
                count = 1;
                while let Some(x) = work.pop() {
                    for &s in &gens {
                        let y = mul(x, s);
                        if !reached[y] {
                            reached[y] = true;
                            count += 1;
                            work.push(y);
                        }
                    }
                }
            }
            gens
        };
        for &b in &gens {
            for a in 0..m {
                for c in 0..m {
                    if mul(a, mul(b, c)) != mul(mul(a, b), c) {
                        return Err(CayleyError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let inverse: Vec<usize> = (0..m)
            .map(|a| (0..m).find(|&b| mul(a, b) == 0).expect("Latin row hits 0"))
            .collect();
        let element_order: Vec<u64> = (0..m)
            .map(|a| {
                let mut x = a;
                let mut k = 1u64;
                while x != 0 {
                    x = mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(CayleyGroup {
            size: m,
            table,
            inverse,
            element_order,
        })
    }

    /// Regular-representation table of a permutation group with at most
    /// `bound` elements.  Returns the group together with the element list;
    /// index 0 is the identity.
    pub fn from_perm_group(
        group: &PermGroup,
        bound: usize,
    ) -> Result<(CayleyGroup, Vec<Permutation>), CayleyError> {
        let elements = group.elements(bound)?;
        let m = elements.len();
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut flat = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                let prod = elements[a].compose(&elements[b]).expect("same degree");
                flat[a * m + b] = index[&prod] as u32;
            }
        }
        let cayley = Self::from_flat(m, flat)?;
        Ok((cayley, elements))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Conjugate `g^-1 * a * g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse[g], a), g)
    }

    /// Multiplicative order of each element.
    pub fn element_orders(&self) -> &[u64] {
        &self.element_order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// The whole group as a subgroup set.
    pub fn full_set(&self) -> SubgroupSet {
        SubgroupSet::from_elements(self.size, &(0..self.size).collect::<Vec<_>>())
    }

    pub fn trivial_set(&self) -> SubgroupSet {
        SubgroupSet::from_elements(self.size, &[0])
    }

    /// Subgroup generated by the seeds: breadth-first closure under right
    /// multiplication starting from the identity.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> SubgroupSet {
        let mut set = self.trivial_set();
        let mut work: Vec<usize> = vec![0];
        for &s in seeds {
            if set.insert(s) {
                work.push(s);
            }
        }
        while let Some(x) = work.pop() {
            for &s in seeds {
                let y = self.mul(x, s);
                if set.insert(y) {
                    work.push(y);
                }
            }
        }
        set
    }

    /// Closure of an existing subgroup and one extra element.  `h_gens`
    /// must generate `h`; the cost is proportional to the number of new
    /// elements rather than to `|h|` restarts.
    pub(crate) fn extend_subgroup(
        &self,
        h: &SubgroupSet,
        h_gens: &[usize],
        g: usize,
    ) -> SubgroupSet {
        let mut set = h.clone();
        let mut work: Vec<usize> = Vec::new();
        if set.insert(g) {
            work.push(g);
        }
        // Every old element must still be multiplied by the new generator.
        for x in h.elements() {
            let y = self.mul(x, g);
            if set.insert(y) {
                work.push(y);
            }
        }
        let mut gens: Vec<usize> = h_gens.to_vec();
        gens.push(g);
        while let Some(x) = work.pop() {
            for &s in &gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    work.push(y);
                }
            }
        }
        set
    }

    /// A short generating list for a subgroup, chosen greedily smallest
    /// element first; at most `log2 |h|` entries.
    pub fn small_generating_set(&self, h: &SubgroupSet) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut closed = self.trivial_set();
        for x in h.elements() {
            if !closed.contains(x) {
                closed = self.extend_subgroup(&closed, &gens, x);
                gens.push(x);
            }
        }
        gens
    }

    /// Checks that the set is a subgroup (contains the identity, closed
    /// under multiplication; inverses follow by finiteness).
    pub fn verify_subgroup(&self, h: &SubgroupSet) -> Result<(), CayleyError> {
        if h.universe() != self.size {
            return Err(CayleyError::UniverseMismatch {
                got: h.universe(),
                expected: self.size,
            });
        }
        if !h.contains(0) {
            return Err(CayleyError::NotSubgroup {
                reason: "identity missing".into(),
            });
        }
        let elems = h.elements();
        for &a in &elems {
            for &b in &elems {
                if !h.contains(self.mul(a, b)) {
                    return Err(CayleyError::NotSubgroup {
                        reason: format!("not closed: {a} * {b} leaves the set"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn verify_normal(&self, n: &SubgroupSet) -> Result<(), CayleyError> {
        self.verify_subgroup(n)?;
        for x in n.elements() {
            for g in 0..self.size {
                if !n.contains(self.conj(x, g)) {
                    return Err(CayleyError::NotNormal { element: x, by: g });
                }
            }
        }
        Ok(())
    }

    /// Smallest normal subgroup containing the seeds: the subgroup
    /// generated by all conjugates of all seeds.
    pub fn normal_closure(&self, seeds: &[usize]) -> SubgroupSet {
        let mut conjugates = self.trivial_set();
        for &x in seeds {
            for g in 0..self.size {
                conjugates.insert(self.conj(x, g));
            }
        }
        self.generated_subgroup(&conjugates.elements())
    }

    /// A group is simple when it is nontrivial and every nonidentity
    /// element has full normal closure.
    pub fn is_simple(&self) -> bool {
        if self.size == 1 {
            return false;
        }
        (1..self.size).all(|x| self.normal_closure(&[x]).len() == self.size)
    }

    /// Largest normal subgroup of the group inside `h`: the intersection
    /// of all conjugates of `h`.
    pub fn core(&self, h: &SubgroupSet) -> Result<SubgroupSet, CayleyError> {
        self.verify_subgroup(h)?;
        let mut core = h.clone();
        for g in 0..self.size {
            if core.len() == 1 {
                break;
            }
            let mut conj_set = SubgroupSet::empty(self.size);
            for x in h.elements() {
                conj_set.insert(self.conj(x, g));
            }
            core = core.intersection(&conj_set);
        }
        debug_assert!(self.verify_normal(&core).is_ok());
        Ok(core)
    }

    /// The multiplication table of a subgroup, elements relabeled in
    /// ascending order of their index in the parent.
    pub fn subgroup_table(&self, h: &SubgroupSet) -> Result<CayleyGroup, CayleyError> {
        self.verify_subgroup(h)?;
        let elems = h.elements();
        let index_of = |x: usize| elems.binary_search(&x).expect("closed subgroup");
        let k = elems.len();
        let mut flat = vec![0u32; k * k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                flat[i * k + j] = index_of(self.mul(a, b)) as u32;
            }
        }
        Self::from_flat(k, flat)
    }

    /// Quotient by a normal subgroup.  Cosets are numbered in order of
    /// their smallest element, so the image of the identity coset is 0.
    /// The projection is verified to be a homomorphism on all pairs.
    pub fn quotient(&self, n: &SubgroupSet) -> Result<Quotient, CayleyError> {
        self.verify_normal(n)?;
        let m = self.size;
        let mut projection = vec![usize::MAX; m];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..m {
            if projection[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for e in n.elements() {
                projection[self.mul(e, x)] = id;
            }
        }
        let q = reps.len();
        debug_assert_eq!(q * n.len(), m);
        let mut flat = vec![0u32; q * q];
        for i in 0..q {
            for j in 0..q {
                flat[i * q + j] = projection[self.mul(reps[i], reps[j])] as u32;
            }
        }
        let group = Self::from_flat(q, flat)?;
        for x in 0..m {
            for y in 0..m {
                if projection[self.mul(x, y)] != group.mul(projection[x], projection[y]) {
                    return Err(CayleyError::NotSubgroup {
                        reason: format!("projection is not a homomorphism at ({x}, {y})"),
                    });
                }
            }
        }
        Ok(Quotient { group, projection })
    }
}

/// Parses the table file format: a first line `order m`, then `m` rows of
/// `m` whitespace-separated 0-based element indices.
pub fn parse_cayley_file(text: &str) -> Result<Vec<Vec<usize>>, CayleyError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(CayleyError::Parse {
        line: 1,
        message: "empty file: expected 'order m'".into(),
    })?;
    let rest = header.strip_prefix("order").ok_or(CayleyError::Parse {
        line: line_no,
        message: format!("expected 'order m' as the first line, found {header:?}"),
    })?;
    let m: usize = rest.trim().parse().map_err(|_| CayleyError::Parse {
        line: line_no,
        message: format!("invalid order {:?}", rest.trim()),
    })?;
    if m == 0 {
        return Err(CayleyError::Parse {
            line: line_no,
            message: "order must be at least 1".into(),
        });
    }
    let mut rows = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut row = Vec::with_capacity(m);
        for part in line.split_whitespace() {
            let v: usize = part.parse().map_err(|_| CayleyError::Parse {
                line: line_no,
                message: format!("invalid entry {part:?}"),
            })?;
            row.push(v);
        }
        if row.len() != m {
            return Err(CayleyError::Parse {
                line: line_no,
                message: format!("row has {} entries, expected {m}", row.len()),
            });
        }
        rows.push(row);
        if rows.len() == m {
            break;
        }
    }
    if rows.len() != m {
        return Err(CayleyError::Parse {
            line: text.lines().count(),
            message: format!("expected {m} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

pub fn write_cayley_file(group: &CayleyGroup) -> String {
    let m = group.size();
    let mut out = format!("order {m}\n");
    for a in 0..m {
        let row: Vec<String> = (0..m).map(|b| group.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
