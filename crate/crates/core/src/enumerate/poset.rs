//! Finite posets on `0..size` stored as up-set and down-set bitsets.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

/// A fixed-size set of indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for x in 0..len {
            s.insert(x);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.len, "bit {x} out of range {}", self.len);
        self.words[x / 64] |= 1 << (x % 64);
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// Why a poset fails to be a lattice: a pair whose upper (or lower) bounds
/// have no least (or greatest) element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeFailure {
    pub pair: (usize, usize),
    /// `"join"` when the least upper bound is missing, `"meet"` otherwise.
    pub missing: &'static str,
    /// The minimal upper bounds (or maximal lower bounds); empty when there are no bounds at all.
    pub candidates: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FinitePoset {
    size: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

impl FinitePoset {
    /// Builds the poset from an order predicate, calling `leq(a, b)` for every
    /// ordered pair. The predicate must be a partial order.
    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let mut up = vec![BitSet::new(size); size];
        let mut down = vec![BitSet::new(size); size];
        for a in 0..size {
            for b in 0..size {
                if a == b || leq(a, b) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }
        FinitePoset { size, up, down }
    }

    /// Reflexive-transitive closure of a set of `(lower, upper)` edges, which
    /// must form a directed acyclic graph.
    pub fn from_edges(size: usize, edges: &[(usize, usize)]) -> Self {
        let order = topological_order(size, edges).expect("edges must be acyclic");
        let mut succ = vec![Vec::new(); size];
        for &(a, b) in edges {
            succ[a].push(b);
        }
        let mut up = vec![BitSet::new(size); size];
        for &a in order.iter().rev() {
            up[a].insert(a);
            for &b in &succ[a] {
                let ub = up[b].clone();
                up[a].union_with(&ub);
            }
        }
        let mut down = vec![BitSet::new(size); size];
        for (a, set) in up.iter().enumerate() {
            for b in set.iter() {
                down[b].insert(a);
            }
        }
        FinitePoset { size, up, down }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up_set(&self, a: usize) -> &BitSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> &BitSet {
        &self.down[a]
    }

    /// Checks antisymmetry and transitivity; reflexivity holds by construction.
    pub fn check_axioms(&self) -> Result<(), String> {
        for a in 0..self.size {
            for b in self.up[a].iter() {
                if b != a && self.leq(b, a) {
                    return Err(format!("{a} and {b} precede each other"));
                }
                if !self.up[b].is_subset(&self.up[a]) {
                    return Err(format!("transitivity fails through {a} <= {b}"));
                }
            }
        }
        Ok(())
    }

    /// Cover pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in self.up[a].iter() {
                if b != a && self.up[a].intersection(&self.down[b]).count() == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.down[a].count() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.up[a].count() == 1).collect()
    }

    fn extremal_in(&self, set: &BitSet, minimal: bool) -> Vec<usize> {
        set.iter()
            .filter(|&x| {
                let cone = if minimal { &self.down[x] } else { &self.up[x] };
                cone.intersection(set).count() == 1
            })
            .collect()
    }

    /// Least upper bound of `a` and `b`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        match self.extremal_in(&self.up[a].intersection(&self.up[b]), true).as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// Greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        match self.extremal_in(&self.down[a].intersection(&self.down[b]), false).as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// `None` for a lattice, otherwise the first failing pair in index order.
    pub fn lattice_failure(&self) -> Option<LatticeFailure> {
        for a in 0..self.size {
            for b in a + 1..self.size {
                let ups = self.extremal_in(&self.up[a].intersection(&self.up[b]), true);
                if ups.len() != 1 {
                    return Some(LatticeFailure { pair: (a, b), missing: "join", candidates: ups });
                }
                let downs = self.extremal_in(&self.down[a].intersection(&self.down[b]), false);
                if downs.len() != 1 {
                    return Some(LatticeFailure { pair: (a, b), missing: "meet", candidates: downs });
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        self.size > 0 && self.lattice_failure().is_none()
    }

    /// The Dedekind-MacNeille completion as its set of cuts `A = (A^u)^l`,
    /// each cut a down-closed set of elements. Cuts are exactly the
    /// intersections of principal down-sets, together with the whole set.
    /// Returned sorted by size, then lexicographically.
    pub fn dedekind_macneille_cuts(&self) -> Vec<BitSet> {
        let mut family: HashSet<BitSet> = HashSet::new();
        family.insert(BitSet::full(self.size));
        for x in 0..self.size {
            let fresh: Vec<BitSet> = family.iter().map(|f| f.intersection(&self.down[x])).collect();
            family.extend(fresh);
        }
        let mut cuts: Vec<BitSet> = family.into_iter().collect();
        cuts.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.iter().cmp(b.iter())));
        cuts
    }

    /// Shortest-path depth from `root` following cover edges upward.
    pub fn depths_from(&self, root: usize) -> Vec<Option<usize>> {
        bfs_depths(self.size, &self.cover_pairs(), root)
    }
}

/// Kahn's algorithm; `None` when the edges contain a cycle.
pub fn topological_order(size: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; size];
    let mut succ = vec![Vec::new(); size];
    for &(a, b) in edges {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let mut queue: VecDeque<usize> = (0..size).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(size);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (order.len() == size).then_some(order)
}

/// Breadth-first distances from `root` along directed edges.
pub fn bfs_depths(size: usize, edges: &[(usize, usize)], root: usize) -> Vec<Option<usize>> {
    let mut succ = vec![Vec::new(); size];
    for &(a, b) in edges {
        succ[a].push(b);
    }
    let mut depth = vec![None; size];
    depth[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let d = depth[v].expect("queued nodes have depths");
        for &w in &succ[v] {
            if depth[w].is_none() {
                depth[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    depth
}

/// Length in edges of the longest directed path ending at each node.
pub fn longest_path_lengths(size: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let order = topological_order(size, edges)?;
    let mut succ = vec![Vec::new(); size];
    for &(a, b) in edges {
        succ[a].push(b);
    }
    let mut len = vec![0usize; size];
    for v in order {
        for &w in &succ[v] {
            len[w] = len[w].max(len[v] + 1);
        }
    }
    Some(len)
}
