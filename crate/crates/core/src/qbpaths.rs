//! Quantum alcove paths `QB(w; t(w₀λ))` and the graded character `C_w`.
//!
//! A path is a subset `J = {j_1 < ⋯ < j_r}` of the inversion table. Starting
//! from `z₀ = w t(w₀λ)` it folds along the affine reflections
//! `z_i = z_{i−1} s_{β̃_{j_i}}`; it is quantum when every step of the
//! directions `dr(z_{i−1}) → dr(z_i)` is an edge of `QBG(W)` labelled
//! `−(β̃̄_{j_i})∨`.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::affine::{affine_reflection, AffineRoot, ExtendedAffineElement, InversionTable};
use crate::cartan::{CorootVector, Weight, WeylElement, WeylGroup};
use crate::charpoly::GradedCharacter;
use crate::qbg::{EdgeKind, QuantumBruhatGraph};
use crate::{Error, Limits, Result};

/// One fold `z_{i−1} → z_i`; `kind` is `None` when the direction change is not a QBG edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlcoveStep {
    pub index: usize,
    pub label: usize,
    pub kind: Option<EdgeKind>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcovePath {
    j: Vec<usize>,
    chain: Vec<ExtendedAffineElement>,
    steps: Vec<AlcoveStep>,
    deg: i64,
    qwt: AffineRoot,
}

impl AlcovePath {
    /// Indices into the inversion table (0-based, increasing).
    pub fn j(&self) -> &[usize] {
        &self.j
    }

    /// `z₀, …, z_r`.
    pub fn chain(&self) -> &[ExtendedAffineElement] {
        &self.chain
    }

    pub fn steps(&self) -> &[AlcoveStep] {
        &self.steps
    }

    pub fn is_quantum(&self) -> bool {
        self.steps.iter().all(|s| s.kind.is_some())
    }

    /// `ed(p_J) = z_r`.
    pub fn end(&self) -> &ExtendedAffineElement {
        self.chain.last().expect("chains start at z₀")
    }

    /// `wt(ed(p_J))`.
    pub fn end_weight(&self) -> &Weight {
        &self.end().translation
    }

    /// `qwt(p_J) = Σ_{j ∈ J⁻} β̃_j`.
    pub fn qwt(&self) -> &AffineRoot {
        &self.qwt
    }

    /// `deg(qwt(p_J))`.
    pub fn deg(&self) -> i64 {
        self.deg
    }

    pub fn to_json(&self, group: &WeylGroup) -> Value {
        let kinds: Vec<Value> = self
            .steps
            .iter()
            .map(|s| match s.kind {
                Some(k) => json!(k),
                None => Value::Null,
            })
            .collect();
        json!({
            "J": self.j.iter().map(|j| j + 1).collect::<Vec<_>>(),
            "steps": kinds,
            "labels": self.steps.iter().map(|s| group.datum().root(s.label)).collect::<Vec<_>>(),
            "end_direction": group.format(self.end().direction),
            "end_weight": self.end_weight(),
            "deg_qwt": self.deg,
        })
    }
}

/// Enumerates alcove paths for a fixed `λ`.
pub struct AlcovePaths<'a> {
    graph: &'a QuantumBruhatGraph,
    table: &'a InversionTable,
    // s_{β̃_k} for every table entry
    reflections: Vec<ExtendedAffineElement>,
    // α_k = finite_label as a weight, times a_k
    shifts: Vec<Weight>,
}

impl<'a> AlcovePaths<'a> {
    pub fn new(graph: &'a QuantumBruhatGraph, table: &'a InversionTable) -> Result<Self> {
        if graph.is_parabolic() {
            return Err(Error::Argument("alcove paths are checked against QBG(W)".into()));
        }
        let group = graph.group();
        let reflections = table
            .entries()
            .iter()
            .map(|e| affine_reflection(group, &e.root))
            .collect::<Result<Vec<_>>>()?;
        let shifts = table.entries().iter().map(|e| e.a * group.datum().root_weight(e.finite_label)).collect();
        Ok(AlcovePaths { graph, table, reflections, shifts })
    }

    pub fn table(&self) -> &InversionTable {
        self.table
    }

    pub fn graph(&self) -> &QuantumBruhatGraph {
        self.graph
    }

    /// `z₀ = w t(w₀λ) = t(wλ₋) w`.
    pub fn start(&self, w: WeylElement) -> ExtendedAffineElement {
        let group = self.graph.group();
        let lm = group.act_weight(group.longest(), self.table.lambda());
        ExtendedAffineElement::finite(group, w).compose(&ExtendedAffineElement::translation(group, lm), group)
    }

    /// The path `p_J` with its chain and step classification.
    pub fn path(&self, w: WeylElement, j: &[usize]) -> Result<AlcovePath> {
        let group = self.graph.group();
        if j.windows(2).any(|p| p[0] >= p[1]) || j.iter().any(|&k| k >= self.table.len()) {
            return Err(Error::Argument(format!("{j:?} is not an increasing index list")));
        }
        let mut chain = vec![self.start(w)];
        let mut steps = Vec::with_capacity(j.len());
        let mut deg = 0;
        let mut qwt = AffineRoot::new(CorootVector::zero(group.rank()), 0);
        for &k in j {
            let z = chain.last().unwrap();
            let next = z.compose(&self.reflections[k], group);
            let entry = self.table.entry(k);
            let kind = self.graph.edge(z.direction, entry.finite_label).filter(|e| e.target == next.direction).map(|e| e.kind);
            if kind == Some(EdgeKind::Quantum) {
                deg += entry.a;
                qwt.finite += &entry.root.finite;
                qwt.degree += entry.a;
            }
            steps.push(AlcoveStep { index: k, label: entry.finite_label, kind });
            chain.push(next);
        }
        Ok(AlcovePath { j: j.to_vec(), chain, steps, deg, qwt })
    }

    /// Every element of `B(w; t(w₀λ))`, one subset at a time.
    pub fn enumerate_b(
        &self,
        w: WeylElement,
        limits: &Limits,
    ) -> Result<impl Iterator<Item = AlcovePath> + '_> {
        let l = self.table.len();
        if l > limits.max_power_set_length {
            return Err(Error::Resource(format!(
                "B(w; t(w₀λ)) has 2^{l} elements, above the bound 2^{}; enumerate QB instead",
                limits.max_power_set_length
            )));
        }
        Ok((0u64..1u64 << l).map(move |mask| {
            let j: Vec<usize> = (0..l).filter(|k| mask & (1 << k) != 0).collect();
            self.path(w, &j).expect("valid index list")
        }))
    }

    fn check_length(&self, limits: &Limits) -> Result<()> {
        if self.table.len() > limits.max_alcove_length {
            return Err(Error::Resource(format!(
                "ℓ(t(w₀λ)) = {} exceeds the bound {}",
                self.table.len(),
                limits.max_alcove_length
            )));
        }
        Ok(())
    }

    /// Depth-first walk over `QB(w; t(w₀λ))` in lexicographic order of `J`,
    /// calling `visit(J, end weight, deg)` on every member.
    pub fn visit_qb<F>(&self, w: WeylElement, mut visit: F)
    where
        F: FnMut(&[usize], &Weight, i64),
    {
        let start = self.start(w);
        let mut j = Vec::new();
        self.dfs(start.translation, start.direction, 0, 0, &mut j, &mut visit);
    }

    fn dfs<F>(&self, tr: Weight, dr: WeylElement, from: usize, deg: i64, j: &mut Vec<usize>, visit: &mut F)
    where
        F: FnMut(&[usize], &Weight, i64),
    {
        visit(j, &tr, deg);
        for k in from..self.table.len() {
            self.step(&tr, dr, k, deg, j, visit);
        }
    }

    fn step<F>(&self, tr: &Weight, dr: WeylElement, k: usize, deg: i64, j: &mut Vec<usize>, visit: &mut F)
    where
        F: FnMut(&[usize], &Weight, i64),
    {
        let group = self.graph.group();
        let entry = self.table.entry(k);
        let Some(e) = self.graph.edge(dr, entry.finite_label) else {
            return;
        };
        // z · t(aα)s_α = t(ν + dr(aα)) (dr s_α)
        let tr = tr + &group.act_weight(dr, &self.shifts[k]);
        let deg = if e.kind == EdgeKind::Quantum { deg + entry.a } else { deg };
        j.push(k);
        self.dfs(tr, e.target, k + 1, deg, j, visit);
        j.pop();
    }

    /// `QB(w; t(w₀λ))`, ordered lexicographically by `J`.
    pub fn enumerate_qb(&self, w: WeylElement, limits: &Limits) -> Result<Vec<AlcovePath>> {
        self.check_length(limits)?;
        let mut sets = vec![Vec::new()];
        let start = self.start(w);
        let branches: Vec<Vec<Vec<usize>>> = (0..self.table.len())
            .into_par_iter()
            .map(|k| {
                let mut out = Vec::new();
                let mut j = Vec::new();
                self.step(&start.translation, start.direction, k, 0, &mut j, &mut |j: &[usize], _: &Weight, _| {
                    out.push(j.to_vec())
                });
                out
            })
            .collect();
        sets.extend(branches.into_iter().flatten());
        sets.into_par_iter().map(|j| self.path(w, &j)).collect()
    }

    pub fn count_qb(&self, w: WeylElement, limits: &Limits) -> Result<usize> {
        self.check_length(limits)?;
        let mut n = 0;
        self.visit_qb(w, |_, _, _| n += 1);
        Ok(n)
    }

    /// `C_w^{t(w₀λ)} = Σ_{p ∈ QB(w; t(w₀λ))} q^{deg(qwt(p))} e^{wt(ed(p))}`.
    pub fn graded_char_c(&self, w: WeylElement, limits: &Limits) -> Result<GradedCharacter> {
        self.check_length(limits)?;
        let start = self.start(w);
        let mut total = GradedCharacter::monomial(start.translation.clone(), 0, 1);
        let parts: Vec<GradedCharacter> = (0..self.table.len())
            .into_par_iter()
            .map(|k| {
                let mut acc = GradedCharacter::zero();
                let mut j = Vec::new();
                self.step(&start.translation, start.direction, k, 0, &mut j, &mut |_: &[usize], tr: &Weight, d| {
                    acc.add_term(tr.clone(), d, 1.into())
                });
                acc
            })
            .collect();
        for p in &parts {
            total += p;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use std::sync::Arc;

    struct Fixture {
        group: Arc<WeylGroup>,
        graph: QuantumBruhatGraph,
    }

    fn fixture(t: &str) -> Fixture {
        let group = Arc::new(WeylGroup::new(CartanDatum::new(t.parse().unwrap()).unwrap()).unwrap());
        let graph = QuantumBruhatGraph::new(group.clone());
        Fixture { group, graph }
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn a1_fundamental() {
        let f = fixture("A1");
        let table = InversionTable::new(&f.group, &w(&[1])).unwrap();
        let paths = AlcovePaths::new(&f.graph, &table).unwrap();
        let (e, s1) = (f.group.identity(), f.group.simple(0));
        let limits = Limits::default();
        assert_eq!(paths.enumerate_b(e, &limits).unwrap().count(), 2);

        let qb = paths.enumerate_qb(e, &limits).unwrap();
        assert_eq!(qb.len(), 2);
        assert_eq!(qb[0].end_weight(), &w(&[-1]));
        assert_eq!(qb[1].steps()[0].kind, Some(EdgeKind::Bruhat));
        assert_eq!(qb[1].deg(), 0);
        assert_eq!(qb[1].end_weight(), &w(&[1]));

        let qb = paths.enumerate_qb(s1, &limits).unwrap();
        assert_eq!(qb[0].end_weight(), &w(&[1]));
        assert_eq!(qb[1].steps()[0].kind, Some(EdgeKind::Quantum));
        assert_eq!(qb[1].deg(), 1);
        assert_eq!(qb[1].qwt(), &AffineRoot::new(CorootVector(vec![-1]), 1));

        let ce = paths.graded_char_c(e, &limits).unwrap();
        let expect = &GradedCharacter::monomial(w(&[-1]), 0, 1) + &GradedCharacter::monomial(w(&[1]), 0, 1);
        assert_eq!(ce, expect);
        let cs = paths.graded_char_c(s1, &limits).unwrap();
        let expect = &GradedCharacter::monomial(w(&[1]), 0, 1) + &GradedCharacter::monomial(w(&[-1]), 1, 1);
        assert_eq!(cs, expect);
    }

    #[test]
    fn a1_double() {
        let f = fixture("A1");
        let table = InversionTable::new(&f.group, &w(&[2])).unwrap();
        let paths = AlcovePaths::new(&f.graph, &table).unwrap();
        assert_eq!(paths.enumerate_b(f.group.identity(), &Limits::default()).unwrap().count(), 4);
    }

    #[test]
    fn zero_weight() {
        let f = fixture("A2");
        let table = InversionTable::new(&f.group, &w(&[0, 0])).unwrap();
        let paths = AlcovePaths::new(&f.graph, &table).unwrap();
        for x in f.group.elements() {
            let qb = paths.enumerate_qb(x, &Limits::default()).unwrap();
            assert_eq!(qb.len(), 1);
            assert!(qb[0].j().is_empty());
            assert_eq!(paths.graded_char_c(x, &Limits::default()).unwrap(), GradedCharacter::monomial(w(&[0, 0]), 0, 1));
        }
    }

    #[test]
    fn dfs_matches_power_set_filter() {
        for (t, lambdas) in [("A2", vec![vec![1, 1], vec![2, 0]]), ("B2", vec![vec![1, 1]]), ("G2", vec![vec![1, 0], vec![0, 1]])] {
            let f = fixture(t);
            for l in lambdas {
                let table = InversionTable::new(&f.group, &Weight(l)).unwrap();
                let paths = AlcovePaths::new(&f.graph, &table).unwrap();
                let limits = Limits::default();
                let mut sizes = Vec::new();
                for x in f.group.elements() {
                    let brute: Vec<_> = paths.enumerate_b(x, &limits).unwrap().filter(|p| p.is_quantum()).collect();
                    let mut dfs = paths.enumerate_qb(x, &limits).unwrap();
                    let mut brute_j: Vec<_> = brute.iter().map(|p| p.j().to_vec()).collect();
                    brute_j.sort();
                    dfs.sort_by(|a, b| a.j().cmp(b.j()));
                    assert_eq!(brute_j, dfs.iter().map(|p| p.j().to_vec()).collect::<Vec<_>>());
                    let mut c = GradedCharacter::zero();
                    for p in &brute {
                        c.add_term(p.end_weight().clone(), p.deg(), 1.into());
                        assert_eq!(p.deg(), p.qwt().degree);
                    }
                    assert_eq!(c, paths.graded_char_c(x, &limits).unwrap());
                    sizes.push(dfs.len());
                }
                sizes.dedup();
                assert_eq!(sizes.len(), 1);
            }
        }
    }

    #[test]
    fn chains_follow_directions() {
        let f = fixture("B2");
        let table = InversionTable::new(&f.group, &w(&[1, 1])).unwrap();
        let paths = AlcovePaths::new(&f.graph, &table).unwrap();
        for x in f.group.elements() {
            for p in paths.enumerate_qb(x, &Limits::default()).unwrap() {
                assert_eq!(p.chain()[0], paths.start(x));
                for (i, s) in p.steps().iter().enumerate() {
                    let e = f.graph.edge(p.chain()[i].direction, s.label).unwrap();
                    assert_eq!(e.target, p.chain()[i + 1].direction);
                }
            }
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let f = fixture("A1");
        let table = InversionTable::new(&f.group, &w(&[5])).unwrap();
        let paths = AlcovePaths::new(&f.graph, &table).unwrap();
        let tight = Limits { max_power_set_length: 4, max_alcove_length: 4, ..Limits::default() };
        assert!(matches!(paths.enumerate_b(f.group.identity(), &tight), Err(Error::Resource(_))));
        assert!(matches!(paths.enumerate_qb(f.group.identity(), &tight), Err(Error::Resource(_))));
    }
}
