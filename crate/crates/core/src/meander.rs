//! Meander graphs and the component count that gives a seaweed's index.
//!
//! Vertices are numbered `1..=n` left to right in the public API. Within a
//! block of size `a` starting after `s` vertices, vertex `j` is joined to
//! vertex `k` exactly when `j + k = 2s + a + 1`, so each block contributes
//! `floor(a/2)` nested arcs.

use crate::compositions::{Composition, SeaweedType};

const NONE: u32 = u32::MAX;

/// The planar graph of a seaweed type: each vertex has at most one top and one bottom partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meander {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

fn block_partners(c: &Composition) -> Vec<u32> {
    let mut partner = vec![NONE; c.n() as usize];
    fill_partners(c.parts(), &mut partner);
    partner
}

fn fill_partners(parts: &[u32], partner: &mut [u32]) {
    let mut start = 0u32;
    for &a in parts {
        let (mut lo, mut hi) = (start, start + a - 1);
        while lo < hi {
            partner[lo as usize] = hi;
            partner[hi as usize] = lo;
            lo += 1;
            hi -= 1;
        }
        if lo == hi {
            partner[lo as usize] = NONE;
        }
        start += a;
    }
}

impl Meander {
    pub fn new(st: &SeaweedType) -> Self {
        Self {
            top: block_partners(st.top()),
            bottom: block_partners(st.bottom()),
        }
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    pub fn top_partner(&self, v: usize) -> Option<usize> {
        partner_of(&self.top, v)
    }

    pub fn bottom_partner(&self, v: usize) -> Option<usize> {
        partner_of(&self.bottom, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        usize::from(self.top_partner(v).is_some()) + usize::from(self.bottom_partner(v).is_some())
    }

    /// Top arcs as `(u, v)` with `u < v`, sorted.
    pub fn top_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.top)
    }

    /// Bottom arcs as `(u, v)` with `u < v`, sorted.
    pub fn bottom_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.bottom)
    }

    pub fn components(&self) -> ComponentSummary {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut vertices = Vec::new();
            let mut all_degree_two = true;
            while let Some(u) = stack.pop() {
                vertices.push(u + 1);
                let mut degree = 0;
                for w in [self.top[u], self.bottom[u]] {
                    if w == NONE {
                        continue;
                    }
                    degree += 1;
                    let w = w as usize;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
                all_degree_two &= degree == 2;
            }
            vertices.sort_unstable();
            let kind = if all_degree_two {
                ComponentKind::Cycle
            } else {
                ComponentKind::Path
            };
            components.push(Component { kind, vertices });
        }
        ComponentSummary::from_components(components)
    }
}

fn partner_of(side: &[u32], v: usize) -> Option<usize> {
    assert!((1..=side.len()).contains(&v), "vertex {v} out of range");
    match side[v - 1] {
        NONE => None,
        w => Some(w as usize + 1),
    }
}

fn edges_of(side: &[u32]) -> Vec<(usize, usize)> {
    side.iter()
        .enumerate()
        .filter(|&(u, &w)| w != NONE && (u as u32) < w)
        .map(|(u, &w)| (u + 1, w as usize + 1))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Cycle,
    /// Includes isolated vertices.
    Path,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    /// Sorted, 1-based.
    pub vertices: Vec<usize>,
}

/// Cycle and path counts of a meander, with components in order of their lowest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub cycles: usize,
    pub paths: usize,
    pub components: Vec<Component>,
}

impl ComponentSummary {
    fn from_components(components: Vec<Component>) -> Self {
        let cycles = components
            .iter()
            .filter(|c| c.kind == ComponentKind::Cycle)
            .count();
        Self {
            cycles,
            paths: components.len() - cycles,
            components,
        }
    }

    /// `2C + P - 1`.
    pub fn index(&self) -> u64 {
        (2 * self.cycles + self.paths - 1) as u64
    }
}

pub fn build_meander(st: &SeaweedType) -> Meander {
    Meander::new(st)
}

pub fn component_summary(m: &Meander) -> ComponentSummary {
    m.components()
}

/// Index of the seaweed of type `st`.
pub fn seaweed_index(st: &SeaweedType) -> u64 {
    Meander::new(st).components().index()
}

/// `sum a(a+1)/2 + sum b(b+1)/2 - n - 1`: the star count of the seaweed's
/// matrix shape, less the trace.
pub fn seaweed_dimension(st: &SeaweedType) -> u64 {
    let blocks = |c: &Composition| -> u64 {
        c.parts()
            .iter()
            .map(|&a| u64::from(a) * (u64::from(a) + 1) / 2)
            .sum()
    };
    blocks(st.top()) + blocks(st.bottom()) - u64::from(st.n()) - 1
}

pub fn seaweed_rank(n: u32) -> u32 {
    assert!(n >= 1, "rank is defined for n >= 1");
    n - 1
}

/// Reusable buffers for computing indices in a hot loop without allocating.
///
/// Produces the same value as [`seaweed_index`] for every input.
#[derive(Debug, Default)]
pub struct IndexScratch {
    top: Vec<u32>,
    bottom: Vec<u32>,
    seen: Vec<bool>,
    parts: Vec<u32>,
}

impl IndexScratch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of the pair given by its top and bottom cut masks.
    pub fn index_of_masks(&mut self, n: u32, top_mask: u64, bottom_mask: u64) -> u64 {
        let len = n as usize;
        self.top.resize(len, NONE);
        self.bottom.resize(len, NONE);
        mask_parts(n, top_mask, &mut self.parts);
        fill_partners(&self.parts, &mut self.top);
        mask_parts(n, bottom_mask, &mut self.parts);
        fill_partners(&self.parts, &mut self.bottom);
        self.count()
    }

    pub fn index_of(&mut self, st: &SeaweedType) -> u64 {
        let len = st.n() as usize;
        self.top.resize(len, NONE);
        self.bottom.resize(len, NONE);
        fill_partners(st.top().parts(), &mut self.top);
        fill_partners(st.bottom().parts(), &mut self.bottom);
        self.count()
    }

    // Paths are walked from their endpoints first; whatever remains unseen lies on cycles.
    fn count(&mut self) -> u64 {
        let n = self.top.len();
        self.seen.clear();
        self.seen.resize(n, false);
        let mut paths = 0u64;
        for v in 0..n {
            if self.seen[v] || (self.top[v] != NONE && self.bottom[v] != NONE) {
                continue;
            }
            paths += 1;
            self.walk(v);
        }
        let mut cycles = 0u64;
        for v in 0..n {
            if !self.seen[v] {
                cycles += 1;
                self.walk(v);
            }
        }
        2 * cycles + paths - 1
    }

    fn walk(&mut self, start: usize) {
        self.seen[start] = true;
        let mut prev = NONE;
        let mut cur = start as u32;
        loop {
            let c = cur as usize;
            let t = self.top[c];
            let b = self.bottom[c];
            let next = if t != NONE && t != prev && !self.seen[t as usize] {
                t
            } else if b != NONE && b != prev && !self.seen[b as usize] {
                b
            } else {
                break;
            };
            self.seen[next as usize] = true;
            prev = cur;
            cur = next;
        }
    }
}

fn mask_parts(n: u32, mask: u64, out: &mut Vec<u32>) {
    out.clear();
    let mut run = 1;
    for i in 0..n - 1 {
        if mask >> i & 1 == 1 {
            out.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    out.push(run);
}
