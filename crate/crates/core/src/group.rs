//! Permutation groups given by generators.
//!
//! A [`PermGroup`] owns its generator list and lazily builds one
//! [`StabilizerChain`] the first time an order or membership question is
//! asked.  All derived groups (closures, kernels, images) are returned as
//! fresh `PermGroup` values with their own generators.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use thiserror::Error;

use crate::bsgs::StabilizerChain;
use crate::perm::{PermError, Permutation};

#[derive(Debug, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("the group is not transitive on its points")]
    Intransitive,
    #[error("invalid action domain: {0}")]
    InvalidDomain(String),
    #[error("group order exceeds the bound {bound}")]
    OrderExceedsBound { bound: usize },
}

/// What a group should act on in [`PermGroup::action_homomorphism`]:
/// one invariant orbit, or a block system partitioning all points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionDomain {
    Orbit(Vec<usize>),
    Blocks(Vec<Vec<usize>>),
}

/// The image and kernel of an action homomorphism.  The order of the
/// source group is always `image.order() * kernel.order()`.
#[derive(Debug, Clone)]
pub struct ActionHomomorphism {
    pub image: PermGroup,
    pub kernel: PermGroup,
}

#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl PermGroup {
    /// Builds a group from generators of matching degree.  Duplicates and
    /// identity entries are dropped; an empty list yields the trivial group,
    /// whose generator list is the lone identity.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::Perm(PermError::DegreeMismatch {
                    left: g.degree(),
                    right: degree,
                }));
            }
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: vec![Permutation::identity(degree)],
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order().is_one()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool, GroupError> {
        Ok(self.chain().contains(g)?)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// Orbit of one point, sorted ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, GroupError> {
        if point >= self.degree {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut in_orbit = vec![false; self.degree];
        in_orbit[point] = true;
        let mut queue = vec![point];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !in_orbit[y] {
                    in_orbit[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        Ok(queue)
    }

    /// All orbits, sorted by smallest point; together they partition the
    /// point set.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let orbit = self.orbit(p).expect("point is in range");
                for &x in &orbit {
                    seen[x] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).expect("point 0 in range").len() == self.degree
    }

    /// Smallest normal subgroup containing the seeds: close the seed set
    /// under conjugation by the group generators, rebuilding the membership
    /// chain whenever a new conjugate appears.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup, GroupError> {
        let mut gens: Vec<Permutation> = Vec::new();
        for s in seeds {
            if s.degree() != self.degree {
                return Err(GroupError::Perm(PermError::DegreeMismatch {
                    left: s.degree(),
                    right: self.degree,
                }));
            }
            if !s.is_identity() && !gens.contains(s) {
                gens.push(s.clone());
            }
        }
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        loop {
            let chain = StabilizerChain::build(self.degree, &gens);
            let mut added = false;
            for i in 0..gens.len() {
                for g in &self.generators {
                    let c = gens[i].conjugate_by(g);
                    if !chain.contains(&c).expect("degrees agree") {
                        gens.push(c);
                        added = true;
                    }
                }
            }
            if !added {
                let group = PermGroup::new(self.degree, gens)?;
                let _ = group.chain.set(chain);
                return Ok(group);
            }
        }
    }

    /// Derived subgroup: the normal closure of all generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let comm = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !comm.is_identity() {
                    comms.push(comm);
                }
            }
        }
        self.normal_closure(&comms)
            .expect("commutators have matching degree")
    }

    /// Order of the abelianization `G / [G, G]`.
    pub fn abelianization_order(&self) -> BigUint {
        self.order() / self.derived_subgroup().order()
    }

    pub fn is_perfect(&self) -> bool {
        self.abelianization_order().is_one()
    }

    /// Finest block system merging points `a` and `b`: the classical
    /// union-find refinement.  Returns the partition as a class id per point.
    fn finest_blocks_merging(&self, a: usize, b: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        let ra = find(&mut parent, a);
        parent[b] = ra;
        let mut queue = vec![b];
        while let Some(y) = queue.pop() {
            let rep = find(&mut parent, y);
            for g in &self.generators {
                let y2 = g.apply(y);
                let r2 = g.apply(rep);
                let root_y2 = find(&mut parent, y2);
                let root_r2 = find(&mut parent, r2);
                if root_y2 != root_r2 {
                    parent[root_r2] = root_y2;
                    queue.push(root_r2);
                }
            }
        }
        (0..self.degree).map(|x| find(&mut parent, x)).collect()
    }

    /// For a transitive group, a nontrivial block system with the smallest
    /// possible block size, or `None` when the group is primitive.  Among
    /// systems of minimal block size the lexicographically least one is
    /// returned; blocks are sorted and ordered by first element.
    pub fn minimal_block_system(&self) -> Result<Option<Vec<Vec<usize>>>, GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::Intransitive);
        }
        let n = self.degree;
        let mut best: Option<Vec<Vec<usize>>> = None;
        for b in 1..n {
            let class = self.finest_blocks_merging(0, b);
            let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
            for (x, &c) in class.iter().enumerate() {
                blocks.entry(c).or_default().push(x);
            }
            let block_size = blocks[&class[0]].len();
            if block_size == n {
                continue;
            }
            let mut system: Vec<Vec<usize>> = blocks.into_values().collect();
            for block in &mut system {
                block.sort_unstable();
            }
            system.sort();
            let better = match &best {
                None => true,
                Some(cur) => {
                    let cur_size = cur[0].len();
                    block_size < cur_size || (block_size == cur_size && system < *cur)
                }
            };
            if better {
                best = Some(system);
            }
        }
        Ok(best)
    }

    fn validate_orbit_domain(&self, points: &[usize]) -> Result<(), GroupError> {
        if points.is_empty() {
            return Err(GroupError::InvalidDomain("orbit domain is empty".into()));
        }
        let mut member = vec![false; self.degree];
        for &p in points {
            if p >= self.degree {
                return Err(GroupError::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
            if member[p] {
                return Err(GroupError::InvalidDomain(format!(
                    "point {p} listed twice in orbit domain"
                )));
            }
            member[p] = true;
        }
        for g in &self.generators {
            for &p in points {
                if !member[g.apply(p)] {
                    return Err(GroupError::InvalidDomain(format!(
                        "orbit domain is not invariant: generator moves point {p} outside it"
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate_block_domain(&self, blocks: &[Vec<usize>]) -> Result<Vec<usize>, GroupError> {
        let mut owner = vec![usize::MAX; self.degree];
        if blocks.is_empty() {
            return Err(GroupError::InvalidDomain("block list is empty".into()));
        }
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(GroupError::InvalidDomain(format!("block {i} is empty")));
            }
            for &p in block {
                if p >= self.degree {
                    return Err(GroupError::PointOutOfRange {
                        point: p,
                        degree: self.degree,
                    });
                }
                if owner[p] != usize::MAX {
                    return Err(GroupError::InvalidDomain(format!(
                        "point {p} appears in two blocks"
                    )));
                }
                owner[p] = i;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(GroupError::InvalidDomain(
                "blocks do not cover every point".into(),
            ));
        }
        // Each generator must send every block onto a single block.
        for g in &self.generators {
            for block in blocks {
                let target = owner[g.apply(block[0])];
                for &p in block {
                    if owner[g.apply(p)] != target {
                        return Err(GroupError::InvalidDomain(format!(
                            "generator splits the block containing point {p}"
                        )));
                    }
                }
            }
        }
        Ok(owner)
    }

    /// Action of the group on an invariant orbit or on a block system.
    /// Returns the induced image group together with the kernel (the
    /// elements acting trivially on the domain).  The kernel generators are
    /// the strong generators of an extended-action stabilizer chain whose
    /// base starts with the domain points.
    pub fn action_homomorphism(
        &self,
        domain: &ActionDomain,
    ) -> Result<ActionHomomorphism, GroupError> {
        type DomainMap = Box<dyn Fn(&Permutation, usize) -> usize>;
        let (domain_size, apply_domain): (usize, DomainMap) = match domain {
            ActionDomain::Orbit(points) => {
                self.validate_orbit_domain(points)?;
                let mut sorted = points.clone();
                sorted.sort_unstable();
                let index: HashMap<usize, usize> =
                    sorted.iter().enumerate().map(|(i, &p)| (p, i)).collect();
                let points = sorted;
                (points.len(), {
                    let points = points.clone();
                    Box::new(move |g: &Permutation, i: usize| index[&g.apply(points[i])])
                })
            }
            ActionDomain::Blocks(blocks) => {
                let owner = self.validate_block_domain(blocks)?;
                let firsts: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
                (blocks.len(), {
                    Box::new(move |g: &Permutation, i: usize| owner[g.apply(firsts[i])])
                })
            }
        };

        let mut image_gens = Vec::with_capacity(self.generators.len());
        let mut extended_gens = Vec::with_capacity(self.generators.len());
        let n = self.degree;
        for g in &self.generators {
            let image: Vec<usize> = (0..domain_size).map(|i| apply_domain(g, i)).collect();
            let image = Permutation::from_images(image).map_err(|e| {
                GroupError::InvalidDomain(format!("induced action is not a permutation: {e}"))
            })?;
            let mut ext: Vec<usize> = (0..n + domain_size).collect();
            for (x, slot) in ext.iter_mut().enumerate().take(n) {
                *slot = g.apply(x);
            }
            for i in 0..domain_size {
                ext[n + i] = n + image.apply(i);
            }
            extended_gens.push(Permutation::from_images(ext).expect("extension is a bijection"));
            image_gens.push(image);
        }
        let image = PermGroup::new(domain_size, image_gens)?;

        // Base prefix = the appended domain points; the stabilizer of all of
        // them is exactly the kernel.
        let prefix: Vec<usize> = (n..n + domain_size).collect();
        let ext_chain = StabilizerChain::build_with_base(n + domain_size, &extended_gens, &prefix);
        let kernel_gens: Vec<Permutation> = ext_chain
            .stabilizer_generators(domain_size)
            .iter()
            .map(|g| {
                Permutation::from_images(g.images()[..n].to_vec())
                    .expect("kernel generators fix the appended points")
            })
            .collect();
        let kernel = PermGroup::new(n, kernel_gens)?;
        Ok(ActionHomomorphism { image, kernel })
    }

    /// Every group element, identity first, in breadth-first order over the
    /// generators.  Errors when more than `bound` elements appear.
    pub fn elements(&self, bound: usize) -> Result<Vec<Permutation>, GroupError> {
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut list = vec![Permutation::identity(self.degree)];
        index.insert(list[0].clone(), 0);
        let mut head = 0;
        while head < list.len() {
            let e = list[head].clone();
            head += 1;
            for g in &self.generators {
                let f = e.mul(g);
                if !index.contains_key(&f) {
                    if list.len() >= bound {
                        return Err(GroupError::OrderExceedsBound { bound });
                    }
                    index.insert(f.clone(), list.len());
                    list.push(f);
                }
            }
        }
        Ok(list)
    }
}
