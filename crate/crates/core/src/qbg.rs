//! Quantum Bruhat graphs `QBG(W)` and their parabolic versions `QBG(W^S)`.
//!
//! A graph is built once with all-pairs shortest distances and one cached
//! path weight per pair. Every query accepts arbitrary Weyl group elements
//! and works with their minimal coset representatives.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cartan::{pairing, CorootVector, ParabolicSubset, ReflectionOrder, Weight, WeylElement, WeylGroup};
use crate::rational::{integral_product, Rational};
use crate::{Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

/// A directed edge `source →β target`; `label` is the index of `β ∈ Δ⁺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QbgEdge {
    pub source: WeylElement,
    pub target: WeylElement,
    pub label: usize,
    pub kind: EdgeKind,
}

#[derive(Debug)]
pub struct QuantumBruhatGraph {
    group: Arc<WeylGroup>,
    subset: ParabolicSubset,
    vertices: Vec<WeylElement>,
    // element index -> position of its minimal coset representative
    proj: Vec<u32>,
    labels: Vec<usize>,
    edges: Vec<QbgEdge>,
    out: Vec<Vec<u32>>,
    // position * |Δ⁺| + label -> edge id
    lookup: Vec<u32>,
    dist: Vec<u32>,
    // (u * n + v) * rank .. : wt(u ⇒ v) along one BFS path
    weights: Vec<i64>,
}

impl QuantumBruhatGraph {
    /// The quantum Bruhat graph `QBG(W)`.
    pub fn new(group: Arc<WeylGroup>) -> Self {
        Self::parabolic(group, ParabolicSubset::empty())
    }

    /// The parabolic quantum Bruhat graph `QBG(W^S)`.
    pub fn parabolic(group: Arc<WeylGroup>, subset: ParabolicSubset) -> Self {
        let datum = group.datum();
        let npos = datum.num_positive();
        let vertices = group.min_reps(&subset);
        let mut slot = vec![NONE; group.order()];
        for (p, v) in vertices.iter().enumerate() {
            slot[v.index()] = p as u32;
        }
        let proj: Vec<u32> = group.elements().map(|x| slot[group.coset_min(x, &subset).index()]).collect();
        let labels: Vec<usize> = (0..npos).filter(|&k| !datum.in_parabolic(k, &subset)).collect();
        let shift = &datum.two_rho_full() - &datum.two_rho(&subset);
        let heights: Vec<i64> =
            (0..npos).map(|k| datum.root_coroot_pairing(&shift, datum.coroot(k))).collect();

        let mut edges = Vec::new();
        let mut out = vec![Vec::new(); vertices.len()];
        let mut lookup = vec![NONE; vertices.len() * npos];
        for (p, &u) in vertices.iter().enumerate() {
            let lu = group.length(u) as i64;
            for &b in &labels {
                let target = vertices[proj[group.mul(u, group.reflection(b)).index()] as usize];
                let lv = group.length(target) as i64;
                let kind = if lv == lu + 1 {
                    EdgeKind::Bruhat
                } else if lv == lu - heights[b] + 1 {
                    EdgeKind::Quantum
                } else {
                    continue;
                };
                let id = edges.len() as u32;
                edges.push(QbgEdge { source: u, target, label: b, kind });
                out[p].push(id);
                lookup[p * npos + b] = id;
            }
        }

        let mut graph = QuantumBruhatGraph {
            group,
            subset,
            vertices,
            proj,
            labels,
            edges,
            out,
            lookup,
            dist: Vec::new(),
            weights: Vec::new(),
        };
        graph.compute_distances();
        graph
    }

    fn compute_distances(&mut self) {
        let n = self.vertices.len();
        let rank = self.group.rank();
        let rows: Vec<(Vec<u32>, Vec<i64>)> = (0..n).into_par_iter().map(|s| self.bfs_row(s)).collect();
        let mut dist = Vec::with_capacity(n * n);
        let mut weights = Vec::with_capacity(n * n * rank);
        for (d, w) in rows {
            dist.extend(d);
            weights.extend(w);
        }
        self.dist = dist;
        self.weights = weights;
    }

    fn bfs_row(&self, source: usize) -> (Vec<u32>, Vec<i64>) {
        let n = self.vertices.len();
        let rank = self.group.rank();
        let mut dist = vec![NONE; n];
        let mut wt = vec![0i64; n * rank];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(p) = queue.pop_front() {
            for &id in &self.out[p] {
                let e = &self.edges[id as usize];
                let q = self.pos(e.target);
                if dist[q] == NONE {
                    dist[q] = dist[p] + 1;
                    for i in 0..rank {
                        wt[q * rank + i] = wt[p * rank + i];
                    }
                    if e.kind == EdgeKind::Quantum {
                        let c = self.group.datum().coroot(e.label);
                        for i in 0..rank {
                            wt[q * rank + i] += c[i];
                        }
                    }
                    queue.push_back(q);
                }
            }
        }
        (dist, wt)
    }

    fn pos(&self, x: WeylElement) -> usize {
        self.proj[x.index()] as usize
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn subset(&self) -> &ParabolicSubset {
        &self.subset
    }

    pub fn is_parabolic(&self) -> bool {
        !self.subset.is_empty()
    }

    /// The vertex set `W^S`, sorted by element index.
    pub fn vertices(&self) -> &[WeylElement] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Position of `⌊x⌋` in [`Self::vertices`].
    pub fn vertex_position(&self, x: WeylElement) -> usize {
        self.pos(x)
    }

    /// `⌊x⌋`.
    pub fn project(&self, x: WeylElement) -> WeylElement {
        self.vertices[self.pos(x)]
    }

    /// Admissible labels `Δ⁺ ∖ Δ⁺_S`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn edges(&self) -> &[QbgEdge] {
        &self.edges
    }

    pub fn out_edges(&self, x: WeylElement) -> impl Iterator<Item = &QbgEdge> + '_ {
        self.out[self.pos(x)].iter().map(move |&id| &self.edges[id as usize])
    }

    /// The edge out of `⌊x⌋` labelled `label`, if any.
    pub fn edge(&self, x: WeylElement, label: usize) -> Option<&QbgEdge> {
        let npos = self.group.datum().num_positive();
        if label >= npos {
            return None;
        }
        match self.lookup[self.pos(x) * npos + label] {
            NONE => None,
            id => Some(&self.edges[id as usize]),
        }
    }

    pub fn count_edges(&self, kind: EdgeKind) -> usize {
        self.edges.iter().filter(|e| e.kind == kind).count()
    }

    /// `ℓ(x ⇒ y)`; `None` if `y` is unreachable (never the case for a connected graph).
    pub fn dist(&self, x: WeylElement, y: WeylElement) -> Option<usize> {
        let n = self.vertices.len();
        match self.dist[self.pos(x) * n + self.pos(y)] {
            NONE => None,
            d => Some(d as usize),
        }
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != NONE)
    }

    /// `wt(x ⇒ y) ∈ Q∨`, the sum of `β∨` over the quantum edges of one shortest path.
    pub fn path_weight(&self, x: WeylElement, y: WeylElement) -> CorootVector {
        let n = self.vertices.len();
        let rank = self.group.rank();
        let base = (self.pos(x) * n + self.pos(y)) * rank;
        CorootVector(self.weights[base..base + rank].to_vec())
    }

    /// `wt_λ(x ⇒ y) = ⟨λ, wt(x ⇒ y)⟩`.
    ///
    /// On a parabolic graph this is only well defined for `S = S_λ`.
    pub fn wt_lambda(&self, x: WeylElement, y: WeylElement, lambda: &Weight) -> Result<i64> {
        if self.is_parabolic() && lambda.stabilizer_subset() != self.subset {
            return Err(Error::Argument(format!(
                "the λ-weight on QBG(W^S) needs S = S_λ, got S = {} and S_λ = {}",
                self.subset,
                lambda.stabilizer_subset()
            )));
        }
        pairing(lambda, &self.path_weight(x, y))
    }

    /// Whether `σ⟨λ, β∨⟩ ∈ ℤ`.
    pub fn sigma_admits(&self, lambda: &Weight, sigma: &Rational, label: usize) -> bool {
        let p = pairing(lambda, self.group.datum().coroot(label)).unwrap_or(1);
        integral_product(sigma, p).is_some()
    }

    /// The subgraph `QBG_{σλ}` keeping the edges with `σ⟨λ, β∨⟩ ∈ ℤ`.
    pub fn restrict_sigma(&self, lambda: &Weight, sigma: Rational) -> Result<SigmaSubgraph<'_>> {
        if sigma < Rational::from_integer(0) || sigma > Rational::from_integer(1) {
            return Err(Error::Argument(format!("σ = {sigma} is outside [0, 1]")));
        }
        if lambda.rank() != self.group.rank() {
            return Err(Error::Argument(format!("weight {lambda} has the wrong rank")));
        }
        let npos = self.group.datum().num_positive();
        let keep = (0..npos).map(|b| self.sigma_admits(lambda, &sigma, b)).collect();
        Ok(SigmaSubgraph { graph: self, sigma, keep })
    }

    /// `u ≤_w v` in the `w`-tilted Bruhat order: `ℓ(v⇒w) = ℓ(v⇒u) + ℓ(u⇒w)`.
    pub fn tilted_le(&self, u: WeylElement, v: WeylElement, w: WeylElement) -> bool {
        match (self.dist(v, w), self.dist(v, u), self.dist(u, w)) {
            (Some(a), Some(b), Some(c)) => a == b + c,
            _ => false,
        }
    }

    /// `min(v W_S, ≤_reference)` in the full graph `QBG(W)`.
    pub fn tilted_min(
        &self,
        v: WeylElement,
        subset: &ParabolicSubset,
        reference: WeylElement,
    ) -> Result<WeylElement> {
        if self.is_parabolic() {
            return Err(Error::Argument("tilted minima are taken in QBG(W)".into()));
        }
        let coset = self.group.coset(v, subset);
        let x = *coset
            .iter()
            .min_by_key(|&&x| (self.dist(x, reference).unwrap_or(usize::MAX), x))
            .expect("cosets are nonempty");
        if let Some(y) = coset.iter().find(|&&y| !self.tilted_le(x, y, reference)) {
            return Err(Error::Invariant(format!(
                "{} is not below {} in the tilted order at {}",
                self.group.format(x),
                self.group.format(*y),
                self.group.format(reference)
            )));
        }
        Ok(x)
    }

    /// One shortest path from `⌊x⌋` to `⌊y⌋`, choosing the smallest label index at every step.
    pub fn shortest_path(&self, x: WeylElement, y: WeylElement) -> Vec<QbgEdge> {
        let mut path = Vec::new();
        let mut cur = self.project(x);
        let target = self.project(y);
        while cur != target {
            let d = self.dist(cur, target).expect("strongly connected");
            let e = *self
                .out_edges(cur)
                .find(|e| self.dist(e.target, target) == Some(d - 1))
                .expect("a shortest path continues");
            path.push(e);
            cur = e.target;
        }
        path
    }

    /// The label-increasing (or label-decreasing) path from `x` to `y` in the
    /// order `≺`, subject to `filter`.
    ///
    /// The path is found greedily as the lexicographically extremal shortest
    /// path and then checked. `Ok(None)` means no admissible monotone path exists.
    pub fn monotone_path(
        &self,
        x: WeylElement,
        y: WeylElement,
        order: &ReflectionOrder,
        increasing: bool,
        filter: &PathFilter,
    ) -> Result<Option<Vec<QbgEdge>>> {
        if self.is_parabolic() {
            return Err(Error::Argument("monotone paths are taken in QBG(W)".into()));
        }
        let mut path: Vec<QbgEdge> = Vec::new();
        let mut cur = x;
        while cur != y {
            let d = self.dist(cur, y).expect("strongly connected");
            let step = self
                .out_edges(cur)
                .filter(|e| self.dist(e.target, y) == Some(d - 1))
                .map(|e| (order.position(e.label), e));
            let best = if increasing { step.min_by_key(|p| p.0) } else { step.max_by_key(|p| p.0) };
            let e = *best.expect("a shortest path continues").1;
            path.push(e);
            cur = e.target;
        }
        let monotone = path.windows(2).all(|p| {
            let (a, b) = (order.position(p[0].label), order.position(p[1].label));
            if increasing {
                a < b
            } else {
                a > b
            }
        });
        if !monotone || !path.iter().all(|e| filter.admits(self, e.label)) {
            return Ok(None);
        }
        Ok(Some(path))
    }

    pub fn increasing_path(
        &self,
        x: WeylElement,
        y: WeylElement,
        order: &ReflectionOrder,
        filter: &PathFilter,
    ) -> Result<Option<Vec<QbgEdge>>> {
        self.monotone_path(x, y, order, true, filter)
    }

    pub fn decreasing_path(
        &self,
        x: WeylElement,
        y: WeylElement,
        order: &ReflectionOrder,
        filter: &PathFilter,
    ) -> Result<Option<Vec<QbgEdge>>> {
        self.monotone_path(x, y, order, false, filter)
    }

    /// Every directed path from `x` to `y` whose labels strictly increase in `≺`.
    ///
    /// Exhaustive search, independent of the distance tables; meant for checks.
    pub fn all_increasing_paths(
        &self,
        x: WeylElement,
        y: WeylElement,
        order: &ReflectionOrder,
    ) -> Vec<Vec<QbgEdge>> {
        let mut found = Vec::new();
        let mut stack = Vec::new();
        self.increasing_dfs(self.project(x), self.project(y), order, None, &mut stack, &mut found);
        found
    }

    fn increasing_dfs(
        &self,
        cur: WeylElement,
        y: WeylElement,
        order: &ReflectionOrder,
        last: Option<usize>,
        stack: &mut Vec<QbgEdge>,
        found: &mut Vec<Vec<QbgEdge>>,
    ) {
        if cur == y {
            found.push(stack.clone());
        }
        for e in self.out_edges(cur) {
            let p = order.position(e.label);
            if last.is_none_or(|l| p > l) {
                stack.push(*e);
                self.increasing_dfs(e.target, y, order, Some(p), stack, found);
                stack.pop();
            }
        }
    }

    /// Every shortest path from `x` to `y`, by BFS layering.
    pub fn all_shortest_paths(&self, x: WeylElement, y: WeylElement) -> Vec<Vec<QbgEdge>> {
        let target = self.project(y);
        let mut found = Vec::new();
        let mut stack = Vec::new();
        fn rec(
            g: &QuantumBruhatGraph,
            cur: WeylElement,
            target: WeylElement,
            stack: &mut Vec<QbgEdge>,
            found: &mut Vec<Vec<QbgEdge>>,
        ) {
            if cur == target {
                found.push(stack.clone());
                return;
            }
            let d = g.dist(cur, target).expect("strongly connected");
            for e in g.out_edges(cur) {
                if g.dist(e.target, target) == Some(d - 1) {
                    stack.push(*e);
                    rec(g, e.target, target, stack, found);
                    stack.pop();
                }
            }
        }
        rec(self, self.project(x), target, &mut stack, &mut found);
        found
    }

    /// Sum of `β∨` over the quantum edges of a path.
    pub fn weight_of(&self, path: &[QbgEdge]) -> CorootVector {
        let mut acc = CorootVector::zero(self.group.rank());
        for e in path.iter().filter(|e| e.kind == EdgeKind::Quantum) {
            acc += self.group.datum().coroot(e.label);
        }
        acc
    }

    /// Graphviz rendering; quantum edges are dashed.
    pub fn to_dot(&self) -> String {
        let g = &self.group;
        let mut s = String::new();
        let _ = writeln!(s, "digraph qbg {{");
        for &v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", g.format(v));
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Bruhat => "",
                EdgeKind::Quantum => ", style=dashed",
            };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"{}];",
                g.format(e.source),
                g.format(e.target),
                g.datum().root(e.label),
                style
            );
        }
        s.push_str("}\n");
        s
    }

    /// Adjacency export.
    pub fn to_json(&self) -> Value {
        let g = &self.group;
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|&v| json!({ "word": g.format(v), "length": g.length(v) }))
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "source": g.format(e.source),
                    "target": g.format(e.target),
                    "label": g.datum().root(e.label),
                    "kind": e.kind,
                })
            })
            .collect();
        json!({
            "type": g.datum().cartan_type().to_string(),
            "subset": self.subset.members().map(|i| i + 1).collect::<Vec<_>>(),
            "vertices": vertices,
            "edges": edges,
        })
    }
}

/// Constraints on the labels of a monotone path.
#[derive(Clone, Debug, Default)]
pub struct PathFilter {
    /// Labels must lie outside `Δ_S`.
    pub exclude: Option<ParabolicSubset>,
    /// Labels must satisfy `σ⟨λ, β∨⟩ ∈ ℤ`.
    pub sigma: Option<(Weight, Rational)>,
}

impl PathFilter {
    pub fn admits(&self, graph: &QuantumBruhatGraph, label: usize) -> bool {
        if let Some(s) = &self.exclude {
            if graph.group().datum().in_parabolic(label, s) {
                return false;
            }
        }
        if let Some((lambda, sigma)) = &self.sigma {
            if !graph.sigma_admits(lambda, sigma, label) {
                return false;
            }
        }
        true
    }
}

/// The subgraph `QBG_{σλ}` of a (parabolic) quantum Bruhat graph.
pub struct SigmaSubgraph<'a> {
    graph: &'a QuantumBruhatGraph,
    sigma: Rational,
    keep: Vec<bool>,
}

impl<'a> SigmaSubgraph<'a> {
    pub fn sigma(&self) -> Rational {
        self.sigma
    }

    pub fn keeps(&self, label: usize) -> bool {
        self.keep[label]
    }

    pub fn edges(&self) -> impl Iterator<Item = &'a QbgEdge> + '_ {
        self.graph.edges.iter().filter(move |e| self.keep[e.label])
    }

    /// Length of a shortest path from `⌊x⌋` to `⌊y⌋` inside the subgraph.
    pub fn dist(&self, x: WeylElement, y: WeylElement) -> Option<usize> {
        let g = self.graph;
        let (s, t) = (g.pos(x), g.pos(y));
        let mut dist = vec![NONE; g.vertices.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(p) = queue.pop_front() {
            if p == t {
                return Some(dist[p] as usize);
            }
            for &id in &g.out[p] {
                let e = &g.edges[id as usize];
                let q = g.pos(e.target);
                if self.keep[e.label] && dist[q] == NONE {
                    dist[q] = dist[p] + 1;
                    queue.push_back(q);
                }
            }
        }
        None
    }

    /// Transitive-reflexive closure of the subgraph.
    pub fn reachability(&self) -> Reachability {
        let g = self.graph;
        let n = g.vertices.len();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for s in 0..n {
            let row = &mut bits[s * words..(s + 1) * words];
            row[s / 64] |= 1 << (s % 64);
            let mut queue = VecDeque::from([s]);
            while let Some(p) = queue.pop_front() {
                for &id in &g.out[p] {
                    let e = &g.edges[id as usize];
                    if !self.keep[e.label] {
                        continue;
                    }
                    let q = g.pos(e.target);
                    if row[q / 64] & (1 << (q % 64)) == 0 {
                        row[q / 64] |= 1 << (q % 64);
                        queue.push_back(q);
                    }
                }
            }
        }
        Reachability { proj: g.proj.clone(), words, bits }
    }
}

/// Reachability matrix of a directed graph on `W^S`.
#[derive(Clone, Debug)]
pub struct Reachability {
    proj: Vec<u32>,
    words: usize,
    bits: Vec<u64>,
}

impl Reachability {
    /// Whether a directed path from `⌊x⌋` to `⌊y⌋` exists.
    pub fn reaches(&self, x: WeylElement, y: WeylElement) -> bool {
        let (p, q) = (self.proj[x.index()] as usize, self.proj[y.index()] as usize);
        self.bits[p * self.words + q / 64] & (1 << (q % 64)) != 0
    }
}
