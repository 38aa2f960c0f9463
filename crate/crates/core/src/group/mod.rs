//! Finite permutation groups from generators: order, membership, element
//! enumeration, conjugacy classes, subgroups, coset and block actions.

mod aut;
mod blocks;
mod bsgs;
mod centralizer;
mod classes;
mod cosets;
mod find;
mod lattice;

pub use aut::automorphism_count;
pub use blocks::{all_minimal_block_systems, minimal_blocks, BlockSystem};
pub use centralizer::centralizer_in_sym;
pub use classes::{ClassData, ConjClass};
pub use cosets::{core_of, coset_action, CosetAction};
pub use find::{find_subgroup, SubgroupSpec};
pub use lattice::{SubgroupLattice, SubgroupNode};

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Permutation;

use bsgs::Bsgs;

/// A finite permutation group given by generators, with a lazily computed
/// stabilizer chain. Immutable after construction; cheap to clone and safe
/// to share across threads.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Arc<OnceLock<Bsgs>>,
    elements: Arc<OnceLock<Arc<ElementSet>>>,
    classes: Arc<OnceLock<Arc<ClassData>>>,
}

/// Every element of a small group, in deterministic closure order, with an
/// index map for constant-time lookup.
pub struct ElementSet {
    pub elements: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
}

impl ElementSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Self {
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        PermGroup {
            degree,
            gens,
            chain: Arc::new(OnceLock::new()),
            elements: Arc::new(OnceLock::new()),
            classes: Arc::new(OnceLock::new()),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new())
    }

    /// The symmetric group on `0..n-1`.
    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return PermGroup::trivial(n.max(1));
        }
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup::new(
            n,
            vec![
                Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(n, &[&cycle]).unwrap(),
            ],
        )
    }

    /// The alternating group on `0..n-1`.
    pub fn alternating(n: usize) -> Self {
        if n < 3 {
            return PermGroup::trivial(n.max(1));
        }
        let gens: Vec<Permutation> = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
            .collect();
        PermGroup::new(n, gens)
    }

    pub fn cyclic(n: usize) -> Self {
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup::new(n, vec![Permutation::from_cycles(n, &[&cycle]).unwrap()])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub(crate) fn bsgs(&self) -> &Bsgs {
        self.chain.get_or_init(|| Bsgs::new(self.degree, &self.gens))
    }

    /// Exact group order via the stabilizer chain.
    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.bsgs().contains(g)
    }

    /// Generators of the stabilizer of a point.
    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        let chain = Bsgs::new_with_base_start(self.degree, &self.gens, point);
        let gens = if chain.levels.is_empty() || chain.levels[0].point != point {
            // point fixed by the whole group
            self.gens.clone()
        } else {
            chain.level_gens(1).to_vec()
        };
        PermGroup::new(self.degree, gens)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let orbit = self.orbit(p);
            for &q in &orbit {
                seen[q] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Every element, by breadth-first closure in generator order. Errors if
    /// the group order exceeds `cap` (callers should then stay on chain-only
    /// paths).
    pub fn elements(&self, cap: u128) -> Result<Arc<ElementSet>> {
        if let Some(e) = self.elements.get() {
            return Ok(Arc::clone(e));
        }
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded {
                what: "group order for element enumeration",
                value: order,
                cap,
            });
        }
        let mut elements = vec![Permutation::identity(self.degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head].clone();
            head += 1;
            for s in &self.gens {
                let h = g.compose(s).unwrap();
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
        }
        debug_assert_eq!(elements.len() as u128, order);
        let set = Arc::new(ElementSet { elements, index });
        let _ = self.elements.set(Arc::clone(&set));
        Ok(set)
    }

    /// Conjugacy class data (classes, labels, element-to-class lookup).
    pub fn conjugacy_data(&self, cap: u128) -> Result<Arc<ClassData>> {
        if let Some(c) = self.classes.get() {
            return Ok(Arc::clone(c));
        }
        let data = Arc::new(classes::compute_classes(self, cap)?);
        let _ = self.classes.set(Arc::clone(&data));
        Ok(data)
    }

    pub fn conjugacy_classes(&self, cap: u128) -> Result<Vec<ConjClass>> {
        Ok(self.conjugacy_data(cap)?.classes.clone())
    }

    /// True if every generator of `h` lies in this group.
    pub fn has_subgroup(&self, h: &PermGroup) -> bool {
        h.degree == self.degree && h.gens.iter().all(|g| self.contains(g))
    }

    /// True if `h <= self` is normal (checked on generators).
    pub fn is_normal_subgroup(&self, h: &PermGroup) -> bool {
        if !self.has_subgroup(h) {
            return false;
        }
        for g in &self.gens {
            for s in h.gens() {
                if !h.contains(&s.conjugate(g).unwrap()) {
                    return false;
                }
            }
        }
        true
    }

    /// Exponent: lcm of element orders, via class representatives.
    pub fn exponent(&self, cap: u128) -> Result<u64> {
        let data = self.conjugacy_data(cap)?;
        Ok(data
            .classes
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.element_order)))
    }
}

/// The subgroup of `Sym(degree)` generated by the given permutations.
pub fn subgroup_generated(degree: usize, gens: &[Permutation]) -> PermGroup {
    PermGroup::new(degree, gens.to_vec())
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} gens{})",
            self.degree,
            self.gens.len(),
            match self.chain.get() {
                Some(b) => format!(", order {}", b.order()),
                None => String::new(),
            }
        )
    }
}
