//! Quantum Lakshmibai–Seshadri paths of shape `λ`.
//!
//! A QLS path `η = (w_1, …, w_s; σ_0, …, σ_s)` lists minimal coset
//! representatives in `W^S`, `S = S_λ`, with rational breaks
//! `0 = σ_0 < ⋯ < σ_s = 1`, such that `w_{i+1}` reaches `w_i` in
//! `QBG_{σ_iλ}(W^S)` for every interior break.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cartan::{pairing, ParabolicSubset, Weight, WeylElement, WeylGroup};
use crate::charpoly::GradedCharacter;
use crate::qbg::{QuantumBruhatGraph, Reachability};
use crate::rational::{to_fraction_string, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QlsPath {
    vertices: Vec<WeylElement>,
    breaks: Vec<Rational>,
}

impl QlsPath {
    /// Builds a path after checking the shape constraints (not condition (C)).
    pub fn new(vertices: Vec<WeylElement>, breaks: Vec<Rational>) -> Result<Self> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        if vertices.is_empty() || breaks.len() != vertices.len() + 1 {
            return Err(Error::Argument("a QLS path needs s ≥ 1 vertices and s + 1 breaks".into()));
        }
        if breaks[0] != zero || *breaks.last().unwrap() != one || breaks.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::Argument("breaks must increase strictly from 0 to 1".into()));
        }
        if vertices.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::Argument("adjacent vertices must differ".into()));
        }
        Ok(QlsPath { vertices, breaks })
    }

    /// `(w; 0, 1)`.
    pub fn straight(w: WeylElement) -> Self {
        QlsPath { vertices: vec![w], breaks: vec![Rational::from_integer(0), Rational::from_integer(1)] }
    }

    /// `w_1, …, w_s`.
    pub fn vertices(&self) -> &[WeylElement] {
        &self.vertices
    }

    /// `σ_0, …, σ_s`.
    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    /// `s`.
    pub fn segments(&self) -> usize {
        self.vertices.len()
    }

    pub fn format(&self, group: &WeylGroup) -> String {
        let v: Vec<String> = self.vertices.iter().map(|&w| group.format(w)).collect();
        let b: Vec<String> = self.breaks.iter().map(|r| r.to_string()).collect();
        format!("({}; {})", v.join(", "), b.join(", "))
    }
}

/// `(Deg^*, Deg_*, Deg^w, Deg_w)` of a path for a fixed `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegStats {
    pub upper_star: i64,
    pub lower_star: i64,
    pub upper: i64,
    pub lower: i64,
}

impl fmt::Display for DegStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Deg^*={} Deg_*={} Deg^w={} Deg_w={}",
            self.upper_star, self.lower_star, self.upper, self.lower
        )
    }
}

/// Shared data for a fixed dominant `λ`: the graph `QBG(W^{S_λ})`, the
/// candidate breaks `Σ(λ)` and one reachability matrix per candidate.
pub struct QlsContext {
    lambda: Weight,
    graph: QuantumBruhatGraph,
    sigmas: Vec<Rational>,
    reach: Vec<Reachability>,
}

impl QlsContext {
    pub fn new(group: Arc<WeylGroup>, lambda: &Weight) -> Result<Self> {
        if lambda.rank() != group.rank() {
            return Err(Error::Argument(format!("weight {lambda} has rank {}, expected {}", lambda.rank(), group.rank())));
        }
        if !lambda.is_dominant() {
            return Err(Error::Argument(format!("weight {lambda} is not dominant")));
        }
        let subset = lambda.stabilizer_subset();
        let graph = QuantumBruhatGraph::parabolic(group, subset);
        let datum = graph.group().datum();
        let mut sigmas = Vec::new();
        for &b in graph.labels() {
            let m = pairing(lambda, datum.coroot(b))?;
            for c in 1..m {
                sigmas.push(Rational::new(c, m));
            }
        }
        sigmas.sort();
        sigmas.dedup();
        let reach = sigmas
            .par_iter()
            .map(|&s| graph.restrict_sigma(lambda, s).map(|g| g.reachability()))
            .collect::<Result<Vec<_>>>()?;
        Ok(QlsContext { lambda: lambda.clone(), graph, sigmas, reach })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn subset(&self) -> &ParabolicSubset {
        self.graph.subset()
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        self.graph.group()
    }

    /// `QBG(W^{S_λ})`.
    pub fn graph(&self) -> &QuantumBruhatGraph {
        &self.graph
    }

    /// `Σ(λ)`, sorted.
    pub fn sigmas(&self) -> &[Rational] {
        &self.sigmas
    }

    /// Every path in `QLS(λ)`, ordered by first vertex then depth first.
    pub fn enumerate(&self) -> Vec<QlsPath> {
        let per_start: Vec<Vec<QlsPath>> = self
            .graph
            .vertices()
            .par_iter()
            .map(|&w1| {
                let mut out = Vec::new();
                let mut verts = vec![w1];
                let mut breaks = vec![Rational::from_integer(0)];
                self.extend(0, &mut verts, &mut breaks, &mut out);
                out
            })
            .collect();
        per_start.into_iter().flatten().collect()
    }

    fn extend(&self, from: usize, verts: &mut Vec<WeylElement>, breaks: &mut Vec<Rational>, out: &mut Vec<QlsPath>) {
        let mut closed = breaks.clone();
        closed.push(Rational::from_integer(1));
        out.push(QlsPath { vertices: verts.clone(), breaks: closed });
        let cur = *verts.last().unwrap();
        for k in from..self.sigmas.len() {
            for &next in self.graph.vertices() {
                if next != cur && self.reach[k].reaches(next, cur) {
                    verts.push(next);
                    breaks.push(self.sigmas[k]);
                    self.extend(k + 1, verts, breaks, out);
                    verts.pop();
                    breaks.pop();
                }
            }
        }
    }

    pub fn count(&self) -> usize {
        self.graph
            .vertices()
            .par_iter()
            .map(|&w1| self.count_from(0, w1))
            .sum()
    }

    fn count_from(&self, from: usize, cur: WeylElement) -> usize {
        let mut n = 1;
        for k in from..self.sigmas.len() {
            for &next in self.graph.vertices() {
                if next != cur && self.reach[k].reaches(next, cur) {
                    n += self.count_from(k + 1, next);
                }
            }
        }
        n
    }

    fn check_shape(&self, eta: &QlsPath) -> bool {
        eta.vertices.iter().all(|&w| self.graph.project(w) == w)
            && QlsPath::new(eta.vertices.clone(), eta.breaks.clone()).is_ok()
    }

    /// Membership in `QLS(λ)` using the cached reachability matrices.
    pub fn is_member(&self, eta: &QlsPath) -> bool {
        if !self.check_shape(eta) {
            return false;
        }
        (1..eta.segments()).all(|i| match self.sigmas.binary_search(&eta.breaks[i]) {
            Ok(k) => self.reach[k].reaches(eta.vertices[i], eta.vertices[i - 1]),
            Err(_) => false,
        })
    }

    /// Condition (C), with the reachability of each `QBG_{σ_iλ}(W^S)` computed afresh.
    pub fn satisfies_c(&self, eta: &QlsPath) -> Result<bool> {
        if !self.check_shape(eta) {
            return Ok(false);
        }
        for i in 1..eta.segments() {
            let sub = self.graph.restrict_sigma(&self.lambda, eta.breaks[i])?;
            if !sub.reachability().reaches(eta.vertices[i], eta.vertices[i - 1]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Condition (C′): some shortest path of `QBG(W^S)` from `w_{i+1}` to
    /// `w_i` lies in `QBG_{σ_iλ}(W^S)`.
    pub fn satisfies_c_prime(&self, eta: &QlsPath) -> Result<bool> {
        if !self.check_shape(eta) {
            return Ok(false);
        }
        for i in 1..eta.segments() {
            let (from, to) = (eta.vertices[i], eta.vertices[i - 1]);
            let sub = self.graph.restrict_sigma(&self.lambda, eta.breaks[i])?;
            if sub.dist(from, to).is_none() || sub.dist(from, to) != self.graph.dist(from, to) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `wt(η) = Σ (σ_i − σ_{i−1}) w_iλ`.
    pub fn wt(&self, eta: &QlsPath) -> Result<Weight> {
        let group = self.group();
        let mut acc = vec![Rational::from_integer(0); group.rank()];
        for (i, &w) in eta.vertices.iter().enumerate() {
            let step = eta.breaks[i + 1] - eta.breaks[i];
            let wl = group.act_weight(w, &self.lambda);
            for (a, c) in acc.iter_mut().zip(wl.coords()) {
                *a += step * Rational::from_integer(*c);
            }
        }
        if acc.iter().any(|a| !a.is_integer()) {
            return Err(Error::Invariant(format!("wt of {} is not integral", eta.format(group))));
        }
        Ok(Weight(acc.iter().map(|a| a.to_integer()).collect()))
    }

    fn lambda_weight(&self, x: WeylElement, y: WeylElement) -> Result<i64> {
        self.graph.wt_lambda(x, y, &self.lambda)
    }

    /// The four degree statistics with boundary vertex `w` (projected to `W^S`).
    pub fn deg_stats(&self, eta: &QlsPath, w: WeylElement) -> Result<DegStats> {
        let s = eta.segments();
        let v = &eta.vertices;
        let one = Rational::from_integer(1);
        let mut upper = Rational::from_integer(0);
        let mut lower = Rational::from_integer(0);
        for i in 1..s {
            let wt = Rational::from_integer(self.lambda_weight(v[i], v[i - 1])?);
            upper += (one - eta.breaks[i]) * wt;
            lower += eta.breaks[i] * wt;
        }
        if !upper.is_integer() || !lower.is_integer() {
            return Err(Error::Invariant(format!("non-integral degree for {}", eta.format(self.group()))));
        }
        let upper_star = upper.to_integer();
        let lower_star = lower.to_integer();
        let stats = DegStats {
            upper_star,
            lower_star,
            upper: upper_star + self.lambda_weight(v[0], w)?,
            lower: lower_star + self.lambda_weight(w, v[s - 1])?,
        };
        if stats.upper_star < 0 || stats.lower_star < 0 || stats.upper < 0 || stats.lower < 0 {
            return Err(Error::Invariant(format!("negative degree for {}", eta.format(self.group()))));
        }
        Ok(stats)
    }

    fn character(&self, paths: &[QlsPath], w: WeylElement, upper: bool) -> Result<GradedCharacter> {
        let parts = paths
            .par_chunks(256)
            .map(|chunk| {
                let mut acc = GradedCharacter::zero();
                for eta in chunk {
                    let d = self.deg_stats(eta, w)?;
                    let deg = if upper { d.upper } else { d.lower };
                    acc.add_term(self.wt(eta)?, -deg, 1.into());
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut total = GradedCharacter::zero();
        for p in &parts {
            total += p;
        }
        Ok(total)
    }

    /// `gch^w QLS(λ) = Σ q^{−Deg^w(η)} e^{wt(η)}` over the given paths.
    pub fn gch_up(&self, paths: &[QlsPath], w: WeylElement) -> Result<GradedCharacter> {
        self.character(paths, w, true)
    }

    /// `gch_w QLS(λ) = Σ q^{−Deg_w(η)} e^{wt(η)}` over the given paths.
    pub fn gch_down(&self, paths: &[QlsPath], w: WeylElement) -> Result<GradedCharacter> {
        self.character(paths, w, false)
    }

    /// `T(η) = (⌊w₀w_s⌋, …, ⌊w₀w_1⌋; 1 − σ_s, …, 1 − σ_0)`.
    pub fn lusztig_t(&self, eta: &QlsPath) -> QlsPath {
        let group = self.group();
        let w0 = group.longest();
        let one = Rational::from_integer(1);
        QlsPath {
            vertices: eta.vertices.iter().rev().map(|&w| self.graph.project(group.mul(w0, w))).collect(),
            breaks: eta.breaks.iter().rev().map(|&s| one - s).collect(),
        }
    }

    pub fn to_json(&self, eta: &QlsPath, w: Option<WeylElement>) -> Result<Value> {
        let group = self.group();
        let mut v = json!({
            "vertices": eta.vertices.iter().map(|&x| group.format(x)).collect::<Vec<_>>(),
            "breaks": eta.breaks.iter().map(to_fraction_string).collect::<Vec<_>>(),
            "wt": self.wt(eta)?,
        });
        if let Some(w) = w {
            let d = self.deg_stats(eta, w)?;
            v["deg"] = json!({
                "w": group.format(w),
                "upper_star": d.upper_star,
                "lower_star": d.lower_star,
                "upper": d.upper,
                "lower": d.lower,
            });
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use std::collections::BTreeSet;

    fn group(t: &str) -> Arc<WeylGroup> {
        Arc::new(WeylGroup::new(CartanDatum::new(t.parse().unwrap()).unwrap()).unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn a1_fundamental() {
        let g = group("A1");
        let ctx = QlsContext::new(g.clone(), &w(&[1])).unwrap();
        assert!(ctx.sigmas().is_empty());
        let paths = ctx.enumerate();
        let expect = vec![QlsPath::straight(g.identity()), QlsPath::straight(g.simple(0))];
        assert_eq!(paths, expect);

        let (e, s1) = (g.identity(), g.simple(0));
        assert_eq!(ctx.deg_stats(&paths[0], s1).unwrap().upper, 0);
        assert_eq!(ctx.deg_stats(&paths[1], e).unwrap().upper, 1);
        assert_eq!(ctx.deg_stats(&paths[0], s1).unwrap().lower, 1);
        let zero = ctx.deg_stats(&paths[0], e).unwrap();
        assert_eq!(zero, DegStats { upper_star: 0, lower_star: 0, upper: 0, lower: 0 });

        let mono = |x: i64, k: i64| GradedCharacter::monomial(w(&[x]), k, 1);
        assert_eq!(ctx.gch_down(&paths, e).unwrap(), &mono(1, 0) + &mono(-1, 0));
        assert_eq!(ctx.gch_down(&paths, s1).unwrap(), &mono(-1, 0) + &mono(1, -1));
    }

    #[test]
    fn a1_double() {
        let g = group("A1");
        let ctx = QlsContext::new(g.clone(), &w(&[2])).unwrap();
        assert_eq!(ctx.sigmas(), &[r(1, 2)]);
        let paths = ctx.enumerate();
        // (e), (s1), (s1, e; 0, 1/2, 1), (e, s1; 0, 1/2, 1)
        assert_eq!(paths.len(), 4);
        let mixed = QlsPath::new(vec![g.simple(0), g.identity()], vec![r(0, 1), r(1, 2), r(1, 1)]).unwrap();
        assert!(paths.contains(&mixed));
        assert_eq!(ctx.wt(&mixed).unwrap(), w(&[0]));
    }

    #[test]
    fn zero_weight() {
        let g = group("A2");
        let ctx = QlsContext::new(g.clone(), &w(&[0, 0])).unwrap();
        let paths = ctx.enumerate();
        assert_eq!(paths, vec![QlsPath::straight(g.identity())]);
        for x in g.elements() {
            assert_eq!(ctx.gch_up(&paths, x).unwrap(), GradedCharacter::monomial(w(&[0, 0]), 0, 1));
        }
    }

    #[test]
    fn straight_paths_have_extremal_weights() {
        let g = group("B2");
        let lambda = w(&[1, 1]);
        let ctx = QlsContext::new(g.clone(), &lambda).unwrap();
        assert_eq!(ctx.wt(&QlsPath::straight(g.identity())).unwrap(), lambda);
        let top = ctx.graph().project(g.longest());
        assert_eq!(ctx.wt(&QlsPath::straight(top)).unwrap(), g.act_weight(g.longest(), &lambda));
    }

    #[test]
    fn rejects_bad_input() {
        let g = group("A2");
        assert!(QlsContext::new(g.clone(), &w(&[1, -1])).is_err());
        assert!(QlsContext::new(g.clone(), &w(&[1])).is_err());
        assert!(QlsPath::new(vec![g.identity(), g.identity()], vec![r(0, 1), r(1, 2), r(1, 1)]).is_err());
        assert!(QlsPath::new(vec![g.identity()], vec![r(0, 1), r(1, 2)]).is_err());
    }

    #[test]
    fn conditions_c_and_c_prime_agree() {
        for (t, lambdas) in [("A2", vec![vec![1, 1], vec![2, 1]]), ("B2", vec![vec![2, 1], vec![0, 2]]), ("G2", vec![vec![1, 1]])] {
            let g = group(t);
            for l in lambdas {
                let ctx = QlsContext::new(g.clone(), &Weight(l)).unwrap();
                let paths = ctx.enumerate();
                assert_eq!(paths.len(), ctx.count());
                let set: BTreeSet<_> = paths.iter().cloned().collect();
                assert_eq!(set.len(), paths.len());
                for eta in &paths {
                    assert!(ctx.satisfies_c(eta).unwrap());
                    assert!(ctx.satisfies_c_prime(eta).unwrap());
                }
                // two-segment candidates outside the set fail both checks
                for &a in ctx.graph().vertices() {
                    for &b in ctx.graph().vertices() {
                        for &s in ctx.sigmas() {
                            if a == b {
                                continue;
                            }
                            let eta = QlsPath::new(vec![a, b], vec![r(0, 1), s, r(1, 1)]).unwrap();
                            let member = set.contains(&eta);
                            assert_eq!(ctx.satisfies_c(&eta).unwrap(), member);
                            assert_eq!(ctx.satisfies_c_prime(&eta).unwrap(), member);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lusztig_involution() {
        for (t, l) in [("A2", vec![1, 1]), ("A2", vec![2, 0]), ("B2", vec![1, 1]), ("G2", vec![1, 0])] {
            let g = group(t);
            let ctx = QlsContext::new(g.clone(), &Weight(l)).unwrap();
            let paths = ctx.enumerate();
            let set: BTreeSet<_> = paths.iter().cloned().collect();
            let w0 = g.longest();
            for eta in &paths {
                let te = ctx.lusztig_t(eta);
                assert!(set.contains(&te));
                assert_eq!(&ctx.lusztig_t(&te), eta);
                assert_eq!(ctx.wt(&te).unwrap(), g.act_weight(w0, &ctx.wt(eta).unwrap()));
                for x in g.elements() {
                    let lower = ctx.deg_stats(&te, x).unwrap().lower;
                    assert_eq!(lower, ctx.deg_stats(eta, g.mul(w0, x)).unwrap().upper);
                }
            }
            assert_eq!(ctx.lusztig_t(&QlsPath::straight(g.identity())), QlsPath::straight(ctx.graph().project(w0)));
        }
    }

    #[test]
    fn characters_are_related_by_the_longest_element() {
        for (t, l) in [("A1", vec![1]), ("A1", vec![2]), ("A2", vec![1, 0]), ("A2", vec![1, 1])] {
            let g = group(t);
            let ctx = QlsContext::new(g.clone(), &Weight(l)).unwrap();
            let paths = ctx.enumerate();
            let w0 = g.longest();
            let base = ctx.gch_down(&paths, g.identity()).unwrap().specialize_q1();
            for x in g.elements() {
                let down = ctx.gch_down(&paths, x).unwrap();
                let up = ctx.gch_up(&paths, g.mul(w0, x)).unwrap();
                assert_eq!(down, up.weyl_act(&g, w0));
                assert!(down.terms().all(|(_, k, _)| k <= 0));
                assert_eq!(down.specialize_q1(), base);
                assert_eq!(down.weyl_act(&g, x).specialize_q1(), base);
            }
        }
    }
}
