//! Brick diagrams and linking patterns: the plane graph of Hopf-band core
//! curves, connectivity/primality, and two-column induced patterns.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::Error;

/// A brick: the rectangle between two consecutive occurrences of the same
/// generator. `top < bottom` are the letter positions of the defining
/// occurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Brick {
    pub column: usize,
    pub top: usize,
    pub bottom: usize,
}

pub type BrickDiagram = Vec<Brick>;

/// Bricks of the word as written (not cyclically), ordered by column
/// ascending and then top position ascending. Each column with `k >= 2`
/// occurrences contributes `k - 1` bricks spanning consecutive pairs.
pub fn brick_diagram(w: &BraidWord) -> BrickDiagram {
    let letters = w.letters();
    let mut bricks = Vec::new();
    for column in 1..w.strands() {
        let occurrences: Vec<usize> =
            (0..letters.len()).filter(|&p| letters[p] == column).collect();
        for pair in occurrences.windows(2) {
            bricks.push(Brick { column, top: pair[0], bottom: pair[1] });
        }
    }
    bricks
}

/// Two bricks in adjacent columns link exactly when their vertical extents
/// interleave: exactly one endpoint of one lies strictly inside the other.
fn extents_interleave(a: &Brick, b: &Brick) -> bool {
    (a.top < b.top && b.top < a.bottom && a.bottom < b.bottom)
        || (b.top < a.top && a.top < b.bottom && b.bottom < a.bottom)
}

fn bricks_link(a: &Brick, b: &Brick) -> bool {
    if a.column == b.column {
        a.bottom == b.top || b.bottom == a.top
    } else if a.column.abs_diff(b.column) == 1 {
        extents_interleave(a, b)
    } else {
        false
    }
}

/// The plane graph with one vertex per brick and an edge between linking
/// bricks. Plane data: each vertex carries its column and its vertical rank
/// within the column.
#[derive(Clone, Debug)]
pub struct LinkingPattern {
    bricks: Vec<Brick>,
    adjacency: Vec<Vec<usize>>,
}

pub fn linking_pattern(bricks: &[Brick]) -> LinkingPattern {
    let n = bricks.len();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if bricks_link(&bricks[i], &bricks[j]) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    LinkingPattern { bricks: bricks.to_vec(), adjacency }
}

impl LinkingPattern {
    pub fn vertex_count(&self) -> usize {
        self.bricks.len()
    }

    pub fn bricks(&self) -> &[Brick] {
        &self.bricks
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Vertical rank of each vertex within its column (0 = topmost).
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0usize; self.bricks.len()];
        for (i, b) in self.bricks.iter().enumerate() {
            ranks[i] = self.bricks.iter().filter(|o| o.column == b.column && o.top < b.top).count();
        }
        ranks
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.is_connected() && self.edge_count() == n - 1
    }

    /// A path: connected, acyclic, no vertex of degree greater than two.
    pub fn is_path(&self) -> bool {
        self.is_tree() && (0..self.vertex_count()).all(|v| self.degree(v) <= 2)
    }

    pub fn graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertex_count());
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        g
    }

    /// Plain-text edge list, one `a b` pair per line.
    pub fn edge_list_text(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(&format!("{} {}\n", a, b));
        }
        out
    }

    /// Graph-description text: one `id column rank` line per vertex, then
    /// `edge a b` lines.
    pub fn graph_file_text(&self) -> String {
        let ranks = self.ranks();
        let mut out = String::new();
        for (i, b) in self.bricks.iter().enumerate() {
            out.push_str(&format!("{} {} {}\n", i, b.column, ranks[i]));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("edge {} {}\n", a, b));
        }
        out
    }
}

/// Checks the occurrence precondition shared by the invariant computations:
/// every generator of the word occurs at least twice.
pub fn check_generators_twice(w: &BraidWord) -> Result<(), Error> {
    let counts = w.occurrence_counts();
    for (g, &c) in counts.iter().enumerate().skip(1) {
        if c == 0 {
            return Err(Error::ReducibleWord { generator: g });
        }
        if c == 1 {
            return Err(Error::ConnectedSumAt { generator: g });
        }
    }
    Ok(())
}

/// A positive braid closure is prime exactly when its linking pattern is
/// connected (visual primeness).
pub fn is_prime(w: &BraidWord) -> Result<bool, Error> {
    check_generators_twice(w)?;
    Ok(linking_pattern(&brick_diagram(w)).is_connected())
}

/// Linking pattern of the word obtained by deleting all letters with
/// generator index outside `{i, i+1}`.
pub fn induced_two_column_pattern(w: &BraidWord, i: usize) -> Result<LinkingPattern, Error> {
    let counts = w.occurrence_counts();
    if i == 0 || i + 1 >= w.strands() || counts[i] == 0 || counts[i + 1] == 0 {
        return Err(Error::MissingColumn { generator: i });
    }
    let letters: Vec<usize> = w.letters().into_iter().filter(|&g| g == i || g == i + 1).collect();
    let sub = BraidWord::from_letters(w.strands(), &letters).expect("nonempty induced word");
    Ok(linking_pattern(&brick_diagram(&sub)))
}

/// A connected-sum factor produced by `split_connected_sum`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Word(BraidWord),
    Unknot,
}

/// Splits a word into factor words whose closures are the connected summands:
/// generators occurring zero times split the strands, generators occurring
/// once are connected-sum points, and disconnected linking patterns split
/// along column intervals. Each returned factor has every generator occurring
/// at least twice, or is the unknot.
pub fn split_connected_sum(w: &BraidWord) -> Vec<Factor> {
    let mut out = Vec::new();
    split_into(w, &mut out);
    out
}

fn split_into(w: &BraidWord, out: &mut Vec<Factor>) {
    let counts = w.occurrence_counts();
    // A generator that never occurs splits the strands into independent
    // parts.
    if let Some(gap) = (1..w.strands()).find(|&g| counts[g] == 0) {
        let letters = w.letters();
        let low: Vec<usize> = letters.iter().copied().filter(|&g| g < gap).collect();
        let high: Vec<usize> = letters.iter().filter(|&&g| g > gap).map(|&g| g - gap).collect();
        emit_part(gap, &low, out);
        emit_part(w.strands() - gap, &high, out);
        return;
    }
    // A generator occurring exactly once is a connected-sum point: cut there.
    if let Some(cut) = (1..w.strands()).find(|&g| counts[g] == 1) {
        let letters = w.letters();
        let low: Vec<usize> = letters.iter().copied().filter(|&g| g < cut).collect();
        let high: Vec<usize> = letters.iter().filter(|&&g| g > cut).map(|&g| g - cut).collect();
        emit_part(cut, &low, out);
        emit_part(w.strands() - cut, &high, out);
        return;
    }
    // All generators occur at least twice: split along components of the
    // linking pattern, which partition the columns into intervals.
    let bricks = brick_diagram(w);
    let lp = linking_pattern(&bricks);
    let comps = lp.components();
    if comps.len() <= 1 {
        out.push(Factor::Word(w.clone()));
        return;
    }
    let mut intervals: Vec<(usize, usize)> = comps
        .iter()
        .map(|comp| {
            let cols: Vec<usize> = comp.iter().map(|&v| bricks[v].column).collect();
            (*cols.iter().min().unwrap(), *cols.iter().max().unwrap())
        })
        .collect();
    intervals.sort_unstable();
    let letters = w.letters();
    for (lo, hi) in intervals {
        let part: Vec<usize> =
            letters.iter().filter(|&&g| g >= lo && g <= hi).map(|&g| g - lo + 1).collect();
        emit_part(hi - lo + 2, &part, out);
    }
}

fn emit_part(strands: usize, letters: &[usize], out: &mut Vec<Factor>) {
    if letters.is_empty() {
        out.push(Factor::Unknot);
        return;
    }
    let word = BraidWord::from_letters(strands.max(2), letters).expect("valid sub-word");
    // The empty closure component of a lone letter is an unknot.
    if word.crossings() == 1 && word.strands() == 2 {
        out.push(Factor::Unknot);
        return;
    }
    split_into(&word, out);
}

/// Small undirected graph on at most 64 vertices, adjacency stored as
/// bitmasks. Used by the minor search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "SimpleGraph supports at most 64 vertices");
        SimpleGraph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors_of_set(&self, set: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out & !set
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let full: u64 = if self.n == 64 { !0 } else { (1 << self.n) - 1 };
        self.set_is_connected(full)
    }

    /// Connectivity of the subgraph induced by `set`.
    pub fn set_is_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let seed = 1u64 << set.trailing_zeros();
        let mut reach = seed;
        loop {
            let grow = self.neighbors_of_set(reach) & set;
            if grow == 0 {
                break;
            }
            reach |= grow;
        }
        reach == set
    }

    /// Deletes a vertex, renumbering the ones above it downward.
    pub fn delete_vertex(&self, v: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n - 1);
        let map = |x: usize| if x < v { x } else { x - 1 };
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map(a), map(b));
            }
        }
        g
    }
}
