//! Subgroup enumeration over multiplication-table groups: maximality
//! tests, maximal normal subgroups, minimal-index subgroups, and the
//! exhaustive reference computations used to cross-check them.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{CayleyError, CayleyGroup, SubgroupSet};

/// Cardinality report comparing the index `[NU : NV]` with `[U : V]` for
/// a normal subgroup `N` and subgroups `V <= U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexInequalityReport {
    pub n_order: usize,
    pub u_order: usize,
    pub v_order: usize,
    pub nu_order: usize,
    pub nv_order: usize,
    pub n_meet_u_order: usize,
    pub n_meet_v_order: usize,
    /// `[NU : NV]` measured from the product sets.
    pub lhs: u64,
    /// `[U : V]`.
    pub rhs: u64,
    /// `lhs <= rhs`.
    pub holds: bool,
    /// `lhs` divides `rhs`.
    pub divides: bool,
}

impl CayleyGroup {
    /// Product set `a * b`.  This is a subgroup whenever one of the two
    /// factors is a normal subgroup.
    pub(crate) fn product_set(&self, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
        let mut out = SubgroupSet::empty(self.size());
        for x in a.elements() {
            for y in b.elements() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// True when `h` is a maximal proper subgroup: adjoining any outside
    /// element generates the whole group.  One witness per right coset
    /// suffices because `<H, g>` equals `<H, h*g>` for `h` in `H`.
    pub fn is_maximal(&self, h: &SubgroupSet) -> Result<bool, CayleyError> {
        self.verify_subgroup(h)?;
        let m = self.size();
        if h.len() == m {
            return Ok(false);
        }
        let gens = self.small_generating_set(h);
        let h_elems = h.elements();
        let mut covered = h.clone();
        for g in 0..m {
            if covered.contains(g) {
                continue;
            }
            if self.extend_subgroup(h, &gens, g).len() != m {
                return Ok(false);
            }
            for &x in &h_elems {
                covered.insert(self.mul(x, g));
            }
        }
        Ok(true)
    }

    /// Every maximal proper subgroup of a simple group, smallest first.
    ///
    /// The search closes all subgroups generated by up to four elements,
    /// which covers every maximal subgroup of the simple groups accepted
    /// here by a wide margin (two generators always suffice for them).
    /// Survivors of a containment prefilter are confirmed with the exact
    /// maximality test.  The frontier is expanded in parallel; results do
    /// not depend on the thread count.
    pub fn all_maximal_subgroups_simple(
        &self,
        cap: usize,
    ) -> Result<Vec<SubgroupSet>, CayleyError> {
        let m = self.size();
        if m > cap {
            return Err(CayleyError::SizeOverBound {
                size: m,
                bound: cap,
            });
        }
        if m == 1 {
            return Err(CayleyError::TrivialGroup);
        }
        if !self.is_simple() {
            return Err(CayleyError::NotSimple);
        }
        let trivial = self.trivial_set();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        seen.insert(trivial.key().to_vec());
        let mut proper: Vec<SubgroupSet> = vec![trivial.clone()];
        let mut frontier: Vec<(SubgroupSet, Vec<usize>)> = vec![(trivial, Vec::new())];
        for _ in 0..4 {
            let produced: Vec<Vec<(SubgroupSet, Vec<usize>)>> = frontier
                .par_iter()
                .map(|(h, gens)| {
                    let mut out = Vec::new();
                    for g in 1..m {
                        if h.contains(g) {
                            continue;
                        }
                        let k = self.extend_subgroup(h, gens, g);
                        if k.len() == m {
                            continue;
                        }
                        let mut kgens = gens.clone();
                        kgens.push(g);
                        out.push((k, kgens));
                    }
                    out
                })
                .collect();
            let mut next: Vec<(SubgroupSet, Vec<usize>)> = Vec::new();
            for batch in produced {
                for (k, kgens) in batch {
                    if seen.insert(k.key().to_vec()) {
                        proper.push(k.clone());
                        next.push((k, kgens));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        // Drop anything contained in a larger proper subgroup, then confirm
        // each survivor exactly.
        let mut result: Vec<SubgroupSet> = Vec::new();
        for (i, h) in proper.iter().enumerate() {
            let dominated = proper
                .iter()
                .enumerate()
                .any(|(j, k)| i != j && h.len() < k.len() && h.is_subset_of(k));
            if !dominated && self.is_maximal(h)? {
                result.push(h.clone());
            }
        }
        result.sort_by_key(|a| a.sort_key());
        Ok(result)
    }

    /// Maximal proper normal subgroups.  Every proper normal subgroup is a
    /// join of principal normal closures, so an upward search over joins
    /// that stay proper visits every candidate; a subgroup is kept exactly
    /// when no join enlarges it without reaching the whole group.
    pub fn maximal_normal_subgroups(&self) -> Result<Vec<SubgroupSet>, CayleyError> {
        let m = self.size();
        if m == 1 {
            return Err(CayleyError::TrivialGroup);
        }
        // One principal closure per conjugacy class: the closure is
        // constant on classes, and classes are cheap to compute.
        let gens = self.small_generating_set(&self.full_set());
        let mut principals: Vec<SubgroupSet> = Vec::new();
        let mut seen_principal: HashSet<Vec<u64>> = HashSet::new();
        let mut classified = vec![false; m];
        classified[0] = true;
        for x in 1..m {
            if classified[x] {
                continue;
            }
            let mut class = vec![x];
            classified[x] = true;
            let mut i = 0;
            while i < class.len() {
                for &g in &gens {
                    let y = self.conj(class[i], g);
                    if !classified[y] {
                        classified[y] = true;
                        class.push(y);
                    }
                }
                i += 1;
            }
            let n = self.generated_subgroup(&class);
            if n.len() < m && seen_principal.insert(n.key().to_vec()) {
                principals.push(n);
            }
        }
        let trivial = self.trivial_set();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        seen.insert(trivial.key().to_vec());
        let mut work: Vec<SubgroupSet> = vec![trivial];
        let mut maximal: Vec<SubgroupSet> = Vec::new();
        while let Some(n) = work.pop() {
            let mut extendable = false;
            for p in &principals {
                if p.is_subset_of(&n) {
                    continue;
                }
                let join = self.product_set(&n, p);
                if join.len() == m {
                    continue;
                }
                extendable = true;
                if seen.insert(join.key().to_vec()) {
                    work.push(join);
                }
            }
            if !extendable {
                maximal.push(n);
            }
        }
        maximal.sort_by_key(|a| a.sort_key());
        debug_assert!(maximal.iter().all(|n| self
            .quotient(n)
            .map(|q| q.group.is_simple())
            .unwrap_or(false)));
        Ok(maximal)
    }

    /// The minimal index of a proper subgroup together with every subgroup
    /// attaining it.  Minimal-index subgroups all arise as preimages of
    /// maximal subgroups of the simple quotients by maximal normal
    /// subgroups, so only those quotients are searched.
    pub fn minimal_index_subgroups(
        &self,
        cap: usize,
    ) -> Result<(usize, Vec<SubgroupSet>), CayleyError> {
        let m = self.size();
        let mut best = usize::MAX;
        let mut out: Vec<SubgroupSet> = Vec::new();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        for n in self.maximal_normal_subgroups()? {
            let q = self.quotient(&n)?;
            for mx in q.group.all_maximal_subgroups_simple(cap)? {
                let index = q.group.size() / mx.len();
                if index > best {
                    continue;
                }
                if index < best {
                    best = index;
                    out.clear();
                    seen.clear();
                }
                let members: Vec<usize> =
                    (0..m).filter(|&x| mx.contains(q.projection[x])).collect();
                let pullback = SubgroupSet::from_elements(m, &members);
                debug_assert_eq!(m / pullback.len(), index);
                if seen.insert(pullback.key().to_vec()) {
                    out.push(pullback);
                }
            }
        }
        out.sort_by_key(|a| a.sort_key());
        Ok((best, out))
    }

    /// Minimal index of a proper subgroup.
    pub fn kappa(&self, cap: usize) -> Result<usize, CayleyError> {
        Ok(self.minimal_index_subgroups(cap)?.0)
    }

    /// Every subgroup, by exhaustive closure search from scratch at each
    /// step.  Deliberately naive: this is the reference the faster
    /// routines are checked against.  Guarded by `bound` on the order.
    pub fn subgroup_lattice(&self, bound: usize) -> Result<Vec<SubgroupSet>, CayleyError> {
        let m = self.size();
        if m > bound {
            return Err(CayleyError::SizeOverBound { size: m, bound });
        }
        let trivial = self.trivial_set();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        seen.insert(trivial.key().to_vec());
        let mut all: Vec<(SubgroupSet, Vec<usize>)> = vec![(trivial, Vec::new())];
        let mut i = 0;
        while i < all.len() {
            let (h, seeds) = all[i].clone();
            for g in 1..m {
                if h.contains(g) {
                    continue;
                }
                let mut k_seeds = seeds.clone();
                k_seeds.push(g);
                let k = self.generated_subgroup(&k_seeds);
                if seen.insert(k.key().to_vec()) {
                    all.push((k, k_seeds));
                }
            }
            i += 1;
        }
        let mut subs: Vec<SubgroupSet> = all.into_iter().map(|(h, _)| h).collect();
        subs.sort_by_key(|a| a.sort_key());
        Ok(subs)
    }

    /// Minimal index of a proper subgroup, by exhaustive enumeration.
    pub fn brute_kappa(&self, bound: usize) -> Result<usize, CayleyError> {
        let m = self.size();
        if m == 1 {
            return Err(CayleyError::TrivialGroup);
        }
        let largest_proper = self
            .subgroup_lattice(bound)?
            .iter()
            .map(|s| s.len())
            .filter(|&l| l < m)
            .max()
            .expect("the trivial subgroup is proper");
        Ok(m / largest_proper)
    }

    /// Minimal faithful permutation degree, by dynamic programming over
    /// intersections of subgroup cores.  A faithful action is a union of
    /// coset actions whose kernels (the cores) intersect trivially; the
    /// state is the intersection achieved so far.
    pub fn brute_mu(&self, bound: usize) -> Result<u64, CayleyError> {
        let subs = self.subgroup_lattice(bound)?;
        // Cheapest index realizing each distinct core.
        let mut cores: Vec<(SubgroupSet, u64)> = Vec::new();
        let mut by_key: HashMap<Vec<u64>, usize> = HashMap::new();
        for h in &subs {
            let core = self.core(h)?;
            let idx = (self.size() / h.len()) as u64;
            match by_key.get(core.key()) {
                Some(&slot) => {
                    if idx < cores[slot].1 {
                        cores[slot].1 = idx;
                    }
                }
                None => {
                    by_key.insert(core.key().to_vec(), cores.len());
                    cores.push((core, idx));
                }
            }
        }
        fn solve(
            n: &SubgroupSet,
            cores: &[(SubgroupSet, u64)],
            memo: &mut HashMap<Vec<u64>, u64>,
        ) -> u64 {
            if let Some(&v) = memo.get(n.key()) {
                return v;
            }
            let mut best = u64::MAX;
            for (c, idx) in cores {
                let meet = c.intersection(n);
                if meet.len() < n.len() {
                    best = best.min(idx + solve(&meet, cores, memo));
                }
            }
            memo.insert(n.key().to_vec(), best);
            best
        }
        let mut memo: HashMap<Vec<u64>, u64> = HashMap::new();
        memo.insert(self.trivial_set().key().to_vec(), 0);
        Ok(solve(&self.full_set(), &cores, &mut memo))
    }

    /// For `n` normal and subgroups `v <= u`, compares the index
    /// `[NU : NV]` with `[U : V]`: the former always divides the latter.
    pub fn index_inequality_report(
        &self,
        n: &SubgroupSet,
        u: &SubgroupSet,
        v: &SubgroupSet,
    ) -> Result<IndexInequalityReport, CayleyError> {
        self.verify_normal(n)?;
        self.verify_subgroup(u)?;
        self.verify_subgroup(v)?;
        if !v.is_subset_of(u) {
            return Err(CayleyError::NotSubgroup {
                reason: "v is not contained in u".into(),
            });
        }
        let nu = self.product_set(n, u);
        let nv = self.product_set(n, v);
        debug_assert!(self.verify_subgroup(&nu).is_ok());
        debug_assert!(self.verify_subgroup(&nv).is_ok());
        debug_assert_eq!(nu.len() % nv.len(), 0);
        let lhs = (nu.len() / nv.len()) as u64;
        let rhs = (u.len() / v.len()) as u64;
        // |NU| = |N||U| / |N meet U| and likewise for NV, so the measured
        // index must agree with the cardinality formula.
        let n_meet_u = n.intersection(u);
        let n_meet_v = n.intersection(v);
        let num = (u.len() * n_meet_v.len()) as u64;
        let den = (v.len() * n_meet_u.len()) as u64;
        debug_assert_eq!(num % den, 0);
        debug_assert_eq!(lhs, num / den);
        Ok(IndexInequalityReport {
            n_order: n.len(),
            u_order: u.len(),
            v_order: v.len(),
            nu_order: nu.len(),
            nv_order: nv.len(),
            n_meet_u_order: n_meet_u.len(),
            n_meet_v_order: n_meet_v.len(),
            lhs,
            rhs,
            holds: lhs <= rhs,
            divides: rhs.is_multiple_of(lhs),
        })
    }
}
