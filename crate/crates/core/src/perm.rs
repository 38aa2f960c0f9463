//! Exact permutation arithmetic and cycle-structure bookkeeping.
//!
//! Permutations act on `{0..n-1}` and multiply left to right: `(i^p)^q` is
//! the image of `i` under `p * q`. The degree is explicit, never inferred
//! from the largest moved point, so trailing fixed points are representable.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0..n-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::Parse(format!("label {a} exceeds degree {degree}")));
                }
                if cycle.len() > 1 {
                    if moved[a] {
                        return Err(Error::Parse(format!("repeated label {a}")));
                    }
                    moved[a] = true;
                    images[a] = cycle[(k + 1) % cycle.len()];
                }
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a point: `i^p`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Left-to-right product: the result sends `i` to `(i^self)^other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// `self^k`, with negative exponents meaning powers of the inverse.
    pub fn pow(&self, k: i64) -> Permutation {
        let n = self.degree();
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(n);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq).expect("equal degrees");
            }
            sq = sq.compose(&sq).expect("equal degrees");
            e >>= 1;
        }
        acc
    }

    /// Conjugate `g^{-1} * self * g` under the left-to-right convention.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        // (g^{-1} p g)(i) computed directly: i -> g^{-1}(i) -> p -> g.
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[g.images[i]] = g.images[self.images[i]];
        }
        Ok(Permutation { images })
    }

    /// Decomposes into cycles, each rotated to start at its least point,
    /// sorted by that point. Fixed points appear as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// Least `k >= 1` with `p^k = 1`; the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i == v)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn num_fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &v)| i == v).count()
    }

    /// Canonical cycle notation: cycles sorted by least moved point, fixed
    /// points omitted, ASCII, no whitespace. The identity renders as `()`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            if cycle.len() == 1 {
                continue;
            }
            s.push('(');
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&p.to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// Parses cycle notation with literal 0-based labels `< degree`.
    /// The empty string and `()` both denote the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Permutation> {
        let (cycles, labels) = parse_cycles(s)?;
        for l in &labels {
            match l {
                Label::Int(v) if (*v as usize) < degree => {}
                Label::Int(v) => {
                    return Err(Error::Parse(format!("label {v} exceeds degree {degree}")))
                }
                Label::Infinity => {
                    return Err(Error::Parse("infinity label requires normalization".into()))
                }
            }
        }
        let cycles: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|l| l.as_int().unwrap() as usize).collect())
            .collect();
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self.render())
    }
}

/// A label in the input syntax: a nonnegative integer or the symbol `∞`,
/// ordered after all integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Label {
    Int(u64),
    Infinity,
}

impl Label {
    pub fn as_int(&self) -> Option<u64> {
        match self {
            Label::Int(v) => Some(*v),
            Label::Infinity => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Infinity => f.write_str("∞"),
        }
    }
}

fn parse_cycles(s: &str) -> Result<(Vec<Vec<Label>>, Vec<Label>)> {
    let mut cycles = Vec::new();
    let mut all = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(Error::Parse(format!("expected '(', found {c:?}")));
        }
        chars.next();
        let mut cycle = Vec::new();
        let mut token = String::new();
        loop {
            match chars.next() {
                None => return Err(Error::Parse("unclosed cycle".into())),
                Some(')') => {
                    if !token.is_empty() {
                        cycle.push(parse_label(&token)?);
                    } else if !cycle.is_empty() {
                        return Err(Error::Parse("trailing comma in cycle".into()));
                    }
                    break;
                }
                Some(',') => {
                    if token.is_empty() {
                        return Err(Error::Parse("empty label".into()));
                    }
                    cycle.push(parse_label(&token)?);
                    token.clear();
                }
                Some(ch) if ch.is_whitespace() => {}
                Some(ch) => token.push(ch),
            }
        }
        all.extend(cycle.iter().copied());
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    let mut sorted = all.clone();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Parse(format!("repeated label {}", w[0])));
        }
    }
    Ok((cycles, all))
}

fn parse_label(token: &str) -> Result<Label> {
    if token == "∞" || token == "inf" {
        return Ok(Label::Infinity);
    }
    token
        .parse::<u64>()
        .map(Label::Int)
        .map_err(|_| Error::Parse(format!("bad label {token:?}")))
}

/// Parses several cycle-notation strings over a shared label set and
/// normalizes the labels to `0..n-1` by sorted label order (`∞` last).
/// `extra_labels` declares support points not mentioned in any string.
pub fn parse_normalizing(strings: &[&str], extra_labels: &[Label]) -> Result<Vec<Permutation>> {
    let mut parsed = Vec::new();
    let mut support: Vec<Label> = extra_labels.to_vec();
    for s in strings {
        let (cycles, labels) = parse_cycles(s)?;
        support.extend(labels);
        parsed.push(cycles);
    }
    support.sort_unstable();
    support.dedup();
    let n = support.len();
    let index = |l: &Label| support.binary_search(l).expect("label in support");
    parsed
        .into_iter()
        .map(|cycles| {
            let cycles: Vec<Vec<usize>> = cycles
                .iter()
                .map(|c| c.iter().map(|l| index(l)).collect())
                .collect();
            let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            Permutation::from_cycles(n, &refs)
        })
        .collect()
}

/// The multiset of cycle lengths of a permutation, stored sorted descending
/// and rendered like `3^2 1^2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from parts (any order); they are sorted descending.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts: the degree of any permutation with this type.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// lcm of the parts: the order of any permutation with this type.
    pub fn order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    pub fn count_part(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Parses `3^2 1^2`, `3^2.1^2` or a plain comma list `3,3,1,1`.
    pub fn parse(s: &str) -> Result<CycleType> {
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c == ' ' || c == '.' || c == ',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => (
                    b.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad part {b:?}")))?,
                    m.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad multiplicity {m:?}")))?,
                ),
                None => (
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad part {tok:?}")))?,
                    1,
                ),
            };
            if base == 0 {
                return Err(Error::Parse("zero part".into()));
            }
            parts.extend(std::iter::repeat(base).take(mult));
        }
        if parts.is_empty() {
            return Err(Error::Parse("empty cycle type".into()));
        }
        Ok(CycleType::new(parts))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 1;
            while i + mult < self.parts.len() && self.parts[i + mult] == part {
                mult += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if mult == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{mult}")?;
            }
            i += mult;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType[{self}]")
    }
}
