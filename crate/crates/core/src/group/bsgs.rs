//! Deterministic Schreier–Sims: base and strong generating set.
//!
//! Base points are chosen greedily by largest orbit of the current level's
//! generators (ties broken by least point), so the chain is reproducible.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct Level {
    pub point: usize,
    /// Strong generators fixing all earlier base points.
    pub gens: Vec<Permutation>,
    /// `transversal[p]` maps `point` to `p`; indexed by point.
    pub transversal: Vec<Option<Permutation>>,
    /// Orbit of `point` in discovery (BFS) order.
    pub orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Self {
        Level {
            point,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.orbit.clear();
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit.push(self.point);
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            let t = self.transversal[p].clone().unwrap();
            for g in &self.gens {
                let q = g.apply(p);
                if self.transversal[q].is_none() {
                    self.transversal[q] = Some(t.compose(g).unwrap());
                    self.orbit.push(q);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Bsgs {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::build(degree, gens, None)
    }

    /// Builds a chain whose base begins at the given point, so that the
    /// level-1 strong generators generate the stabilizer of that point.
    pub fn new_with_base_start(degree: usize, gens: &[Permutation], first: usize) -> Self {
        Self::build(degree, gens, Some(first))
    }

    fn build(degree: usize, gens: &[Permutation], first: Option<usize>) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return bsgs;
        }
        let point = first.unwrap_or_else(|| best_base_point(degree, &gens));
        bsgs.levels.push(Level::new(degree, point));
        bsgs.levels[0].gens = gens;
        bsgs.complete();
        bsgs
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    /// Strips `g` through the chain. Returns the residue and the level at
    /// which stripping stopped; membership means an identity residue at
    /// level `levels.len()`.
    pub fn strip(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let p = h.apply(level.point);
            match &level.transversal[p] {
                None => return (h, i),
                Some(t) => h = h.compose(&t.inverse()).unwrap(),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, level) = self.strip(g);
        level == self.levels.len() && residue.is_identity()
    }

    /// Generators of the stabilizer of the level-`i` prefix of the base.
    pub fn level_gens(&self, i: usize) -> &[Permutation] {
        if i < self.levels.len() {
            &self.levels[i].gens
        } else {
            &[]
        }
    }

    /// Bottom-up verification sweep: a level whose Schreier generators all
    /// sift to the identity is correct relative to the levels below it;
    /// adding a residue as a strong generator re-dirties levels down to
    /// where it stuck.
    fn complete(&mut self) {
        let mut i = 0;
        loop {
            match self.verify_level(i) {
                Some(j) => i = j,
                None => {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Scans the Schreier generators of level `i`; on the first one that does
    /// not sift to the identity, installs its residue as a strong generator
    /// and returns the level at which verification must resume.
    fn verify_level(&mut self, i: usize) -> Option<usize> {
        self.levels[i].recompute_orbit(self.degree);
        let orbit = self.levels[i].orbit.clone();
        for &u in &orbit {
            let t_u = self.levels[i].transversal[u].clone().unwrap();
            for s_idx in 0..self.levels[i].gens.len() {
                let s = self.levels[i].gens[s_idx].clone();
                let v = s.apply(u);
                let t_v = self.levels[i].transversal[v].clone().unwrap();
                let schreier = t_u.compose(&s).unwrap().compose(&t_v.inverse()).unwrap();
                if schreier.is_identity() {
                    continue;
                }
                let (residue, j) = self.strip_from(&schreier, i + 1);
                if !residue.is_identity() {
                    if j == self.levels.len() {
                        let point = best_base_point(self.degree, &[residue.clone()]);
                        self.levels.push(Level::new(self.degree, point));
                    }
                    for level in &mut self.levels[(i + 1)..=j] {
                        level.gens.push(residue.clone());
                    }
                    return Some(j);
                }
            }
        }
        None
    }

    fn strip_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for i in start..self.levels.len() {
            let p = h.apply(self.levels[i].point);
            match &self.levels[i].transversal[p] {
                None => return (h, i),
                Some(t) => h = h.compose(&t.inverse()).unwrap(),
            }
        }
        (h, self.levels.len())
    }
}

/// Point in the largest orbit of the generator set (least such point).
fn best_base_point(degree: usize, gens: &[Permutation]) -> usize {
    let mut seen = vec![false; degree];
    let mut best = (0usize, 0usize);
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        if orbit.len() > best.0 {
            let m = *orbit.iter().min().unwrap();
            best = (orbit.len(), m);
        }
    }
    best.1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn sym_gens(n: usize) -> Vec<Permutation> {
        vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]).unwrap(),
        ]
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=8 {
            let bsgs = Bsgs::new(n, &sym_gens(n));
            let expect: u128 = (1..=n as u128).product();
            assert_eq!(bsgs.order(), expect, "S_{n}");
        }
    }

    #[test]
    fn alternating_group_order() {
        // A_n generated by 3-cycles (0,1,2), (0,1,3), ..., (0,1,n-1).
        for n in 3..=9 {
            let gens: Vec<Permutation> = (2..n)
                .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
                .collect();
            let bsgs = Bsgs::new(n, &gens);
            let expect: u128 = (1..=n as u128).product::<u128>() / 2;
            assert_eq!(bsgs.order(), expect, "A_{n}");
        }
    }

    #[test]
    fn a15_order() {
        let n = 15;
        let gens: Vec<Permutation> = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
            .collect();
        let bsgs = Bsgs::new(n, &gens);
        assert_eq!(bsgs.order(), 653_837_184_000u128); // 15!/2
    }

    #[test]
    fn membership() {
        let n = 6;
        let bsgs = Bsgs::new(n, &sym_gens(n));
        assert!(bsgs.contains(&Permutation::from_cycles(n, &[&[2, 4, 5]]).unwrap()));
        let alt_gens: Vec<Permutation> = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
            .collect();
        let alt = Bsgs::new(n, &alt_gens);
        assert!(!alt.contains(&Permutation::from_cycles(n, &[&[0, 1]]).unwrap()));
        assert!(alt.contains(&Permutation::from_cycles(n, &[&[0, 1], &[2, 3]]).unwrap()));
    }

    #[test]
    fn trivial_group() {
        let bsgs = Bsgs::new(5, &[]);
        assert_eq!(bsgs.order(), 1);
        assert!(bsgs.contains(&Permutation::identity(5)));
    }
}
