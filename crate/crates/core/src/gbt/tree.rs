//! Generalized binary trees: finite trees whose vertices are disjoint
//! triples (valence 3, one designated central element) or singletons
//! (valence 1), with a triple root.

use num_rational::Ratio;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::hash::Hash;

/// Vertex payload: a triple with a central element, or a singleton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum VertexKind<E> {
    Triple { central: E, sides: [E; 2] },
    Singleton(E),
}

impl<E: Clone> VertexKind<E> {
    pub fn elements(&self) -> Vec<E> {
        match self {
            VertexKind::Triple { central, sides } => {
                vec![central.clone(), sides[0].clone(), sides[1].clone()]
            }
            VertexKind::Singleton(e) => vec![e.clone()],
        }
    }

    pub fn is_triple(&self) -> bool {
        matches!(self, VertexKind::Triple { .. })
    }
}

/// A generalized binary tree over elements of type `E`.
#[derive(Debug, Clone, Serialize)]
pub struct Gbt<E> {
    vertices: Vec<VertexKind<E>>,
    edges: BTreeSet<(usize, usize)>,
    root: usize,
}

/// Structural violations found by [`Gbt::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GbtViolation {
    BadValence { vertex: usize, valence: usize },
    SharedElement { first: usize, second: usize },
    RootNotTriple,
    Disconnected { vertex: usize },
    HasCycle,
    DanglingEdge { from: usize, to: usize },
}

impl<E: Clone + Eq + Ord + Hash + Debug> Gbt<E> {
    pub fn new(vertices: Vec<VertexKind<E>>, edges: BTreeSet<(usize, usize)>, root: usize) -> Self {
        Gbt { vertices, edges, root }
    }

    /// The smallest valid tree: a triple root with three singleton ends.
    pub fn trivial(root: VertexKind<E>, ends: [E; 3]) -> Self {
        let mut vertices = vec![root];
        let mut edges = BTreeSet::new();
        for (i, e) in ends.into_iter().enumerate() {
            vertices.push(VertexKind::Singleton(e));
            edges.insert((0, i + 1));
        }
        Gbt { vertices, edges, root: 0 }
    }

    pub fn vertices(&self) -> &[VertexKind<E>] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex(&self, id: usize) -> &VertexKind<E> {
        &self.vertices[id]
    }

    /// Adds a vertex joined to `parent`, returning its id.
    pub fn attach(&mut self, parent: usize, kind: VertexKind<E>) -> usize {
        let id = self.vertices.len();
        self.vertices.push(kind);
        self.edges.insert((parent.min(id), parent.max(id)));
        id
    }

    /// Re-roots the tree at a new triple vertex joined to the old root.
    pub fn push_root(&mut self, kind: VertexKind<E>) -> usize {
        let id = self.vertices.len();
        self.vertices.push(kind);
        let old = self.root;
        self.edges.insert((old.min(id), old.max(id)));
        self.root = id;
        id
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// All elements in all vertex subsets.
    pub fn support(&self) -> BTreeSet<E> {
        self.vertices
            .iter()
            .flat_map(|v| v.elements())
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.vertices.iter().map(|v| v.elements().len()).sum()
    }

    /// Ids of the singleton (end) vertices.
    pub fn end_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| !self.vertices[v].is_triple())
            .collect()
    }

    /// Elements held by end vertices.
    pub fn end_elements(&self) -> BTreeSet<E> {
        self.end_vertices()
            .into_iter()
            .flat_map(|v| self.vertices[v].elements())
            .collect()
    }

    /// Distance from the root along tree edges.
    pub fn levels(&self) -> Vec<Option<usize>> {
        let mut level = vec![None; self.vertices.len()];
        let mut queue = std::collections::VecDeque::new();
        level[self.root] = Some(0);
        queue.push_back(self.root);
        while let Some(v) = queue.pop_front() {
            for n in self.neighbors(v) {
                if level[n].is_none() {
                    level[n] = level[v].map(|l| l + 1);
                    queue.push_back(n);
                }
            }
        }
        level
    }

    /// Parent of each vertex in the rooted orientation.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let levels = self.levels();
        let mut parent = vec![None; self.vertices.len()];
        for &(a, b) in &self.edges {
            if let (Some(la), Some(lb)) = (levels[a], levels[b]) {
                if la + 1 == lb {
                    parent[b] = Some(a);
                } else if lb + 1 == la {
                    parent[a] = Some(b);
                }
            }
        }
        parent
    }

    /// Structural validation; returns every violation found.
    pub fn validate(&self) -> Vec<GbtViolation> {
        let mut violations = Vec::new();
        for &(a, b) in &self.edges {
            if a >= self.vertices.len() || b >= self.vertices.len() || a == b {
                violations.push(GbtViolation::DanglingEdge { from: a, to: b });
            }
        }
        if !violations.is_empty() {
            return violations;
        }
        let mut valence = vec![0usize; self.vertices.len()];
        for &(a, b) in &self.edges {
            valence[a] += 1;
            valence[b] += 1;
        }
        for (v, kind) in self.vertices.iter().enumerate() {
            let want = if kind.is_triple() { 3 } else { 1 };
            if valence[v] != want {
                violations.push(GbtViolation::BadValence { vertex: v, valence: valence[v] });
            }
        }
        let mut seen: BTreeMap<E, usize> = BTreeMap::new();
        for (v, kind) in self.vertices.iter().enumerate() {
            for e in kind.elements() {
                if let Some(&first) = seen.get(&e) {
                    violations.push(GbtViolation::SharedElement { first, second: v });
                } else {
                    seen.insert(e, v);
                }
            }
        }
        if !self.vertices[self.root].is_triple() {
            violations.push(GbtViolation::RootNotTriple);
        }
        let levels = self.levels();
        for (v, l) in levels.iter().enumerate() {
            if l.is_none() {
                violations.push(GbtViolation::Disconnected { vertex: v });
            }
        }
        if self.edges.len() + 1 != self.vertices.len() {
            violations.push(GbtViolation::HasCycle);
        }
        violations
    }

    /// `|S(End(T))| / |S(T)|`, exactly.
    pub fn end_fraction(&self) -> Ratio<u64> {
        Ratio::new(self.end_elements().len() as u64, self.support_size() as u64)
    }
}

/// Grows a pseudorandom valid tree over synthetic integer elements,
/// deterministic per seed. `size_bound` caps the vertex count.
pub fn generate_random_gbt(seed: u64, size_bound: usize) -> Gbt<u64> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    assert!(size_bound >= 4, "a tree has at least 4 vertices");
    let mut rng = StdRng::seed_from_u64(seed);
    let mut fresh = 0u64;
    let mut next = || {
        fresh += 1;
        fresh
    };
    let root = VertexKind::Triple { central: next(), sides: [next(), next()] };
    let mut tree = Gbt::trivial(root, [next(), next(), next()]);
    let target = rng.gen_range(4..=size_bound);
    while tree.vertices.len() + 2 <= target {
        // replace a random singleton end by a triple with two new ends
        let ends = tree.end_vertices();
        let &v = &ends[rng.gen_range(0..ends.len())];
        let VertexKind::Singleton(e) = tree.vertices[v].clone() else {
            unreachable!()
        };
        tree.vertices[v] = VertexKind::Triple { central: e, sides: [next(), next()] };
        tree.attach(v, VertexKind::Singleton(next()));
        tree.attach(v, VertexKind::Singleton(next()));
    }
    tree
}
