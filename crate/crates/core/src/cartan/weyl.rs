use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CartanDatum, Weight};
use crate::{Error, Limits, Result};

/// Handle to an element of an enumerated [`WeylGroup`].
///
/// Elements are numbered by `(length, canonical word)`, so index 0 is the
/// identity and the last index is the longest element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement(u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset `S ⊆ I` of Dynkin nodes (0-based), stored as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset(u32);

impl ParabolicSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        ParabolicSubset(members.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn empty() -> Self {
        ParabolicSubset(0)
    }

    pub fn full(rank: usize) -> Self {
        ParabolicSubset::new(0..rank)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", m.join(","))
    }
}

/// The finite Weyl group with full multiplication table.
///
/// Elements are identified by their action matrix on fundamental-weight
/// coordinates; reduced words are derived data.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: CartanDatum,
    matrices: Vec<Vec<i64>>,
    lengths: Vec<u32>,
    words: Vec<Vec<usize>>,
    mul: Vec<u32>,
    inverse: Vec<u32>,
    // right[w * rank + i] = w s_i
    right: Vec<u32>,
    // root_perm[w * nroots + k] = index of w(root k)
    root_perm: Vec<u32>,
    reflections: Vec<WeylElement>,
    lookup: HashMap<Vec<i64>, u32>,
}

impl WeylGroup {
    /// Enumerates the Weyl group of `datum` under the default [`Limits`].
    pub fn new(datum: CartanDatum) -> Result<Self> {
        Self::enumerate(datum, &Limits::default())
    }

    pub fn enumerate(datum: CartanDatum, limits: &Limits) -> Result<Self> {
        let ct = datum.cartan_type();
        if ct.weyl_order() > limits.max_weyl_order as u128 {
            return Err(Error::Resource(format!(
                "|W({ct})| = {} exceeds the configured cap {}",
                ct.weyl_order(),
                limits.max_weyl_order
            )));
        }
        let n = datum.rank();
        let a = datum.cartan_matrix().to_vec();
        let nroots = datum.roots().len();

        let identity: Vec<i64> = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
        // s_i acting on roots
        let simple_perm: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                (0..nroots)
                    .map(|k| {
                        let r = datum.root(k);
                        let c: i64 = (0..n).map(|j| a[i][j] * r[j]).sum();
                        let mut s = r.clone();
                        s.0[i] -= c;
                        datum.root_index(&s).expect("root closure") as u32
                    })
                    .collect()
            })
            .collect();

        // Breadth-first closure under right multiplication by simple reflections.
        let mut matrices = vec![identity.clone()];
        let mut lengths = vec![0u32];
        let mut root_perm: Vec<Vec<u32>> = vec![(0..nroots as u32).collect()];
        let mut lookup: HashMap<Vec<i64>, u32> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                let m = &matrices[w];
                let mut next = m.clone();
                for k in 0..n {
                    let shift: i64 = (0..n).map(|l| m[k * n + l] * a[l][i]).sum();
                    next[k * n + i] -= shift;
                }
                if lookup.contains_key(&next) {
                    continue;
                }
                if matrices.len() >= limits.max_weyl_order {
                    return Err(Error::Resource(format!(
                        "Weyl group of {ct} exceeds the configured cap {}",
                        limits.max_weyl_order
                    )));
                }
                let id = matrices.len();
                lookup.insert(next.clone(), id as u32);
                matrices.push(next);
                lengths.push(lengths[w] + 1);
                let perm: Vec<u32> =
                    (0..nroots).map(|k| root_perm[w][simple_perm[i][k] as usize]).collect();
                root_perm.push(perm);
                queue.push_back(id);
            }
        }
        let order = matrices.len();
        if order as u128 != ct.weyl_order() {
            return Err(Error::Invariant(format!(
                "enumerated {order} elements for {ct}, expected {}",
                ct.weyl_order()
            )));
        }

        // Left multiplication by s_i: the matrix of s_i·w has row k shifted by A[k][i]·row i.
        let left = |w: usize, i: usize| -> usize {
            let m = &matrices[w];
            let mut next = m.clone();
            for k in 0..n {
                for l in 0..n {
                    next[k * n + l] -= a[k][i] * m[i * n + l];
                }
            }
            lookup[&next] as usize
        };
        // Canonical (lexicographically least) reduced words by leftmost descent.
        let mut by_length: Vec<usize> = (0..order).collect();
        by_length.sort_by_key(|&w| lengths[w]);
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); order];
        for &w in &by_length {
            if lengths[w] == 0 {
                continue;
            }
            let (i, rest) = (0..n)
                .map(|i| (i, left(w, i)))
                .find(|&(_, v)| lengths[v] < lengths[w])
                .expect("nonidentity element has a left descent");
            let mut word = vec![i];
            word.extend_from_slice(&words[rest]);
            words[w] = word;
        }

        // Renumber by (length, word).
        let mut perm: Vec<usize> = (0..order).collect();
        perm.sort_by(|&x, &y| (lengths[x], &words[x]).cmp(&(lengths[y], &words[y])));
        let mut new_id = vec![0u32; order];
        for (new, &old) in perm.iter().enumerate() {
            new_id[old] = new as u32;
        }
        let matrices: Vec<Vec<i64>> = perm.iter().map(|&o| matrices[o].clone()).collect();
        let lengths: Vec<u32> = perm.iter().map(|&o| lengths[o]).collect();
        let words: Vec<Vec<usize>> = perm.iter().map(|&o| words[o].clone()).collect();
        let root_perm: Vec<u32> = perm.iter().flat_map(|&o| root_perm[o].iter().copied()).collect();
        let lookup: HashMap<Vec<i64>, u32> =
            lookup.into_iter().map(|(k, v)| (k, new_id[v as usize])).collect();

        let mut group = WeylGroup {
            datum,
            matrices,
            lengths,
            words,
            mul: Vec::new(),
            inverse: Vec::new(),
            right: Vec::new(),
            root_perm,
            reflections: Vec::new(),
            lookup,
        };

        // Right multiplication by generators, then the full table via words.
        let right: Vec<u32> = (0..order)
            .flat_map(|w| (0..n).map(move |i| (w, i)))
            .map(|(w, i)| group.lookup[&group.right_simple_matrix(w, i)])
            .collect();
        let mut mul = vec![0u32; order * order];
        for x in 0..order {
            for y in 0..order {
                let mut z = x;
                for &i in &group.words[y] {
                    z = right[z * n + i] as usize;
                }
                mul[x * order + y] = z as u32;
            }
        }
        let inverse = (0..order)
            .map(|x| (0..order).find(|&y| mul[x * order + y] == 0).expect("inverse") as u32)
            .collect();
        group.mul = mul;
        group.inverse = inverse;
        group.right = right;
        group.reflections = (0..group.datum.num_positive())
            .map(|k| group.reflection_by_matrix(k))
            .collect::<Result<_>>()?;
        Ok(group)
    }

    fn right_simple_matrix(&self, w: usize, i: usize) -> Vec<i64> {
        let n = self.rank();
        let a = self.datum.cartan_matrix();
        let m = &self.matrices[w];
        let mut next = m.clone();
        for k in 0..n {
            let shift: i64 = (0..n).map(|l| m[k * n + l] * a[l][i]).sum();
            next[k * n + i] -= shift;
        }
        next
    }

    fn reflection_by_matrix(&self, k: usize) -> Result<WeylElement> {
        // s_β λ = λ - ⟨λ, β∨⟩ β
        let n = self.rank();
        let beta = self.datum.root_weight(k);
        let cor = self.datum.coroot(k);
        let m: Vec<i64> =
            (0..n * n).map(|x| i64::from(x / n == x % n) - beta[x / n] * cor[x % n]).collect();
        self.lookup
            .get(&m)
            .map(|&id| WeylElement(id))
            .ok_or_else(|| Error::Invariant(format!("reflection for root {} not found", k)))
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn element(&self, index: usize) -> WeylElement {
        assert!(index < self.order());
        WeylElement(index as u32)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.order() as u32 - 1)
    }

    pub fn simple(&self, i: usize) -> WeylElement {
        WeylElement(self.right[i])
    }

    /// `s_β` for the positive root with index `k`.
    pub fn reflection(&self, k: usize) -> WeylElement {
        let npos = self.datum.num_positive();
        self.reflections[if k < npos { k } else { k - npos }]
    }

    pub fn mul(&self, x: WeylElement, y: WeylElement) -> WeylElement {
        WeylElement(self.mul[x.index() * self.order() + y.index()])
    }

    pub fn inverse(&self, x: WeylElement) -> WeylElement {
        WeylElement(self.inverse[x.index()])
    }

    pub fn length(&self, x: WeylElement) -> usize {
        self.lengths[x.index()] as usize
    }

    /// Lexicographically least reduced word (0-based generator labels).
    pub fn word(&self, x: WeylElement) -> &[usize] {
        &self.words[x.index()]
    }

    /// Action matrix on fundamental-weight coordinates, row-major.
    pub fn matrix(&self, x: WeylElement) -> &[i64] {
        &self.matrices[x.index()]
    }

    /// Evaluates an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        let n = self.rank();
        word.iter().fold(self.identity(), |acc, &i| {
            assert!(i < n, "generator index {i} out of range");
            WeylElement(self.right[acc.index() * n + i])
        })
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        word.iter().all(|&i| i < self.rank()) && self.length(self.from_word(word)) == word.len()
    }

    pub fn act_weight(&self, x: WeylElement, lambda: &Weight) -> Weight {
        let n = self.rank();
        let m = self.matrix(x);
        Weight((0..n).map(|k| (0..n).map(|l| m[k * n + l] * lambda[l]).sum()).collect())
    }

    /// Index of `x(root k)`.
    pub fn act_root(&self, x: WeylElement, k: usize) -> usize {
        self.root_perm[x.index() * self.datum.roots().len() + k] as usize
    }

    /// Whether `ℓ(x s_i) < ℓ(x)`, i.e. `x α_i ∈ Δ⁻`.
    pub fn has_right_descent(&self, x: WeylElement, i: usize) -> bool {
        !self.datum.is_positive(self.act_root(x, i))
    }

    pub fn has_left_descent(&self, x: WeylElement, i: usize) -> bool {
        self.has_right_descent(self.inverse(x), i)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, x: WeylElement) -> usize {
        (0..self.datum.num_positive()).filter(|&k| !self.datum.is_positive(self.act_root(x, k))).count()
    }

    /// The minimal-length representative `⌊x⌋` of `x W_S`.
    pub fn coset_min(&self, x: WeylElement, s: &ParabolicSubset) -> WeylElement {
        let mut x = x;
        'outer: loop {
            for i in s.members() {
                if self.has_right_descent(x, i) {
                    x = self.mul(x, self.simple(i));
                    continue 'outer;
                }
            }
            return x;
        }
    }

    pub fn is_min_rep(&self, x: WeylElement, s: &ParabolicSubset) -> bool {
        s.members().all(|i| !self.has_right_descent(x, i))
    }

    /// The parabolic subgroup `W_S`, sorted by index.
    pub fn parabolic_subgroup(&self, s: &ParabolicSubset) -> Vec<WeylElement> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![self.identity()];
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for i in s.members() {
                let y = self.mul(x, self.simple(i));
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort();
        out
    }

    /// The coset `x W_S`, sorted by index.
    pub fn coset(&self, x: WeylElement, s: &ParabolicSubset) -> Vec<WeylElement> {
        let mut out: Vec<_> = self.parabolic_subgroup(s).into_iter().map(|y| self.mul(x, y)).collect();
        out.sort();
        out
    }

    /// `W^S`, sorted by index.
    pub fn min_reps(&self, s: &ParabolicSubset) -> Vec<WeylElement> {
        self.elements().filter(|&x| self.is_min_rep(x, s)).collect()
    }

    /// The longest element `w₀^S` of `W_S`.
    pub fn longest_in(&self, s: &ParabolicSubset) -> WeylElement {
        *self.parabolic_subgroup(s).iter().max_by_key(|&&x| self.length(x)).unwrap()
    }

    /// Lexicographically greatest reduced word.
    pub fn word_lex_max(&self, x: WeylElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(x));
        let mut x = x;
        while self.length(x) > 0 {
            let i = (0..self.rank()).rev().find(|&i| self.has_left_descent(x, i)).unwrap();
            word.push(i);
            x = self.mul(self.simple(i), x);
        }
        word
    }

    /// All reduced words of `x`, lexicographically sorted.
    pub fn reduced_words(&self, x: WeylElement) -> Vec<Vec<usize>> {
        let mut memo: HashMap<WeylElement, Vec<Vec<usize>>> = HashMap::new();
        self.reduced_words_rec(x, &mut memo)
    }

    fn reduced_words_rec(
        &self,
        x: WeylElement,
        memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if self.length(x) == 0 {
            return vec![Vec::new()];
        }
        if let Some(w) = memo.get(&x) {
            return w.clone();
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if self.has_left_descent(x, i) {
                for tail in self.reduced_words_rec(self.mul(self.simple(i), x), memo) {
                    let mut w = vec![i];
                    w.extend(tail);
                    out.push(w);
                }
            }
        }
        memo.insert(x, out.clone());
        out
    }

    /// Human readable word: `e` or `s1 s2 ...` (1-based labels).
    pub fn format(&self, x: WeylElement) -> String {
        format_word(self.word(x))
    }

    /// Parses `e`, `w0`, or a word in `s<i>` (1-based); non-reduced words are normalised.
    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "id" {
            return Ok(self.identity());
        }
        if t == "w0" {
            return Ok(self.longest());
        }
        let compact: String = t.chars().filter(|c| !c.is_whitespace() && *c != ',' && *c != '*').collect();
        let bad = || Error::Argument(format!("cannot parse Weyl group element `{s}`"));
        if !compact.starts_with('s') {
            return Err(bad());
        }
        let mut word = Vec::new();
        for tok in compact.split('s').skip(1) {
            let i: usize = tok.parse().map_err(|_| bad())?;
            if i == 0 || i > self.rank() {
                return Err(Error::Argument(format!(
                    "generator s{i} out of range for rank {}",
                    self.rank()
                )));
            }
            word.push(i - 1);
        }
        Ok(self.from_word(&word))
    }
}

pub(crate) fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(CartanDatum::new(t.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn a1_group() {
        let g = group("A1");
        assert_eq!(g.order(), 2);
        assert_eq!(g.length(g.simple(0)), 1);
        assert_eq!(g.longest(), g.simple(0));
    }

    #[test]
    fn small_orders_and_longest_lengths() {
        for (t, order, l0) in [("A2", 6, 3), ("B2", 8, 4), ("G2", 12, 6), ("A3", 24, 6), ("C3", 48, 9)] {
            let g = group(t);
            assert_eq!(g.order(), order, "{t}");
            assert_eq!(g.length(g.longest()), l0, "{t}");
            assert_eq!(g.elements().filter(|&x| g.length(x) == 0).count(), 1);
            assert_eq!(g.elements().filter(|&x| g.length(x) == l0).count(), 1);
        }
    }

    #[test]
    fn lengths_match_inversion_counts_and_words() {
        for t in ["A3", "B3", "G2", "D4"] {
            let g = group(t);
            let w0 = g.longest();
            for x in g.elements() {
                assert_eq!(g.length(x), g.inversion_count(x));
                assert_eq!(g.word(x).len(), g.length(x));
                assert_eq!(g.from_word(g.word(x)), x);
                assert_eq!(g.length(g.mul(w0, x)), g.length(w0) - g.length(x));
                assert_eq!(g.mul(x, g.inverse(x)), g.identity());
            }
        }
    }

    #[test]
    fn canonical_word_is_lex_least() {
        let g = group("A3");
        for x in g.elements() {
            let all = g.reduced_words(x);
            assert_eq!(all.first().map(|w| w.as_slice()), Some(g.word(x)));
            assert_eq!(all.last().cloned(), Some(g.word_lex_max(x)));
        }
    }

    #[test]
    fn matrices_compose_like_words() {
        let g = group("B3");
        let n = g.rank();
        for x in g.elements().step_by(5) {
            for y in g.elements().step_by(7) {
                let (mx, my, mz) = (g.matrix(x), g.matrix(y), g.matrix(g.mul(x, y)));
                for k in 0..n {
                    for l in 0..n {
                        let v: i64 = (0..n).map(|m| mx[k * n + m] * my[m * n + l]).sum();
                        assert_eq!(v, mz[k * n + l]);
                    }
                }
            }
        }
    }

    #[test]
    fn reflections_are_involutions_fixing_their_hyperplane() {
        let g = group("G2");
        let d = g.datum();
        for k in 0..d.num_positive() {
            let s = g.reflection(k);
            assert_eq!(g.mul(s, s), g.identity());
            assert_eq!(g.act_root(s, k), d.negate(k));
        }
    }

    #[test]
    fn coset_minimum_examples() {
        let g = group("A2");
        let s2 = ParabolicSubset::new([1]);
        assert_eq!(g.coset_min(g.identity(), &s2), g.identity());
        assert_eq!(g.coset_min(g.longest(), &ParabolicSubset::full(2)), g.identity());
        let m = g.coset_min(g.longest(), &s2);
        assert_eq!(g.length(m), 2);
        assert_eq!(g.format(m), "s2 s1");
    }

    #[test]
    fn coset_minimum_is_minimal_exhaustively() {
        for t in ["A3", "B2", "G2"] {
            let g = group(t);
            for mask in 0..(1u32 << g.rank()) {
                let s = ParabolicSubset::new((0..g.rank()).filter(|i| mask & (1 << i) != 0));
                for x in g.elements() {
                    let m = g.coset_min(x, &s);
                    let coset = g.coset(x, &s);
                    assert!(coset.contains(&m));
                    assert!(coset.iter().all(|&y| g.length(y) > g.length(m) || y == m));
                    assert_eq!(g.coset_min(m, &s), m);
                }
            }
        }
    }

    #[test]
    fn parsing_words() {
        let g = group("A2");
        assert_eq!(g.parse("e").unwrap(), g.identity());
        assert_eq!(g.parse("w0").unwrap(), g.longest());
        assert_eq!(g.parse("s1 s2 s1").unwrap(), g.longest());
        assert_eq!(g.parse("s2s1s2").unwrap(), g.longest());
        assert_eq!(g.parse("s1 s1").unwrap(), g.identity());
        assert!(g.parse("s3").is_err());
        assert!(g.parse("x1").is_err());
        assert_eq!(g.format(g.longest()), "s1 s2 s1");
    }

    #[test]
    fn group_cap_is_enforced() {
        let limits = Limits { max_weyl_order: 100, ..Limits::default() };
        let d = CartanDatum::new("A4".parse().unwrap()).unwrap();
        assert!(matches!(WeylGroup::enumerate(d, &limits), Err(Error::Resource(_))));
    }
}
