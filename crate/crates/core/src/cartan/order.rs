use super::weyl::format_word;
use super::{CartanDatum, CorootVector, ParabolicSubset, Weight, WeylElement, WeylGroup};
use crate::{Error, Result};

/// Which way the roots `β_1, …, β_N` of a reduced word are ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `β_1 ≺ β_2 ≺ ⋯ ≺ β_N`.
    Increasing,
    /// `β_1 ≻ β_2 ≻ ⋯ ≻ β_N`; the convention used by the inversion table.
    Decreasing,
}

/// A total order on `Δ⁺` induced by a reduced word `s_{i_1} ⋯ s_{i_N}` of `w₀`
/// through `β_k = s_{i_N} ⋯ s_{i_{k+1}} α_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionOrder {
    word: Vec<usize>,
    direction: Direction,
    // β_1, …, β_N as positive-root indices
    betas: Vec<usize>,
    ascending: Vec<usize>,
    position: Vec<usize>,
}

impl ReflectionOrder {
    pub fn from_word(group: &WeylGroup, word: &[usize], direction: Direction) -> Result<Self> {
        if !group.is_reduced(word) {
            return Err(Error::Argument(format!("word `{}` is not reduced", format_word(word))));
        }
        if group.from_word(word) != group.longest() {
            return Err(Error::Argument(format!(
                "word `{}` does not evaluate to the longest element",
                format_word(word)
            )));
        }
        let n = word.len();
        let mut betas = vec![0; n];
        // suffix = s_{i_N} ⋯ s_{i_{k+1}}
        let mut suffix = group.identity();
        for k in (0..n).rev() {
            betas[k] = group.act_root(suffix, word[k]);
            suffix = group.mul(suffix, group.simple(word[k]));
        }
        let npos = group.datum().num_positive();
        let mut ascending = betas.clone();
        if direction == Direction::Decreasing {
            ascending.reverse();
        }
        let mut position = vec![usize::MAX; npos];
        for (p, &k) in ascending.iter().enumerate() {
            if k >= npos || position[k] != usize::MAX {
                return Err(Error::Invariant("reflection order is not a permutation of Δ⁺".into()));
            }
            position[k] = p;
        }
        Ok(ReflectionOrder { word: word.to_vec(), direction, betas, ascending, position })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// `β_1, …, β_N` in word order.
    pub fn betas(&self) -> &[usize] {
        &self.betas
    }

    /// Positive roots from `≺`-smallest to `≺`-largest.
    pub fn ascending(&self) -> &[usize] {
        &self.ascending
    }

    /// Rank of a positive root in the order (0 = smallest).
    pub fn position(&self, root: usize) -> usize {
        self.position[root]
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// Checks that whenever `γ∨ = α∨ + β∨` the root `γ` lies strictly between `α` and `β`.
    pub fn is_reflection_order(&self, datum: &CartanDatum) -> bool {
        let npos = datum.num_positive();
        for a in 0..npos {
            for b in a + 1..npos {
                let sum: CorootVector = datum.coroot(a) + datum.coroot(b);
                if let Some(c) = datum.coroot_index(&sum) {
                    let (pa, pb, pc) = (self.position(a), self.position(b), self.position(c));
                    if !((pa < pc && pc < pb) || (pb < pc && pc < pa)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Reduced words `v(λ₋) = s_{i_1}⋯s_{i_M}`, `w₀^S = s_{i_{M+1}}⋯s_{i_N}` and
/// their concatenation, a reduced word for `w₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedWords {
    pub lambda: Weight,
    pub subset: ParabolicSubset,
    pub v_lambda_minus: WeylElement,
    pub parabolic_longest: WeylElement,
    pub v_word: Vec<usize>,
    pub parabolic_word: Vec<usize>,
    pub longest_word: Vec<usize>,
}

impl FixedWords {
    /// `M = ℓ(v(λ₋)) = |Δ⁺ ∖ Δ⁺_S|`.
    pub fn split(&self) -> usize {
        self.v_word.len()
    }

    /// The order `β_1 ≻ β_2 ≻ ⋯ ≻ β_N` attached to the concatenated word.
    pub fn order(&self, group: &WeylGroup) -> Result<ReflectionOrder> {
        ReflectionOrder::from_word(group, &self.longest_word, Direction::Decreasing)
    }
}

impl WeylGroup {
    /// Fixed reduced words for `v(λ₋)`, `w₀^S` and `w₀ = v(λ₋) w₀^S`, where
    /// `S = S_λ` and `v(λ₋)` is the minimal element with `v(λ₋) λ = w₀ λ`.
    pub fn fixed_words(&self, lambda: &Weight) -> Result<FixedWords> {
        if lambda.rank() != self.rank() {
            return Err(Error::Argument(format!(
                "weight {lambda} has rank {}, expected {}",
                lambda.rank(),
                self.rank()
            )));
        }
        if !lambda.is_dominant() {
            return Err(Error::Argument(format!("weight {lambda} is not dominant")));
        }
        let subset = lambda.stabilizer_subset();
        let v = self.coset_min(self.longest(), &subset);
        let p = self.longest_in(&subset);
        let v_word = self.word(v).to_vec();
        let parabolic_word = self.word(p).to_vec();
        let mut longest_word = v_word.clone();
        longest_word.extend_from_slice(&parabolic_word);
        if self.mul(v, p) != self.longest() || !self.is_reduced(&longest_word) {
            return Err(Error::Invariant("w₀ ≠ v(λ₋) w₀^S as a reduced product".into()));
        }
        Ok(FixedWords {
            lambda: lambda.clone(),
            subset,
            v_lambda_minus: v,
            parabolic_longest: p,
            v_word,
            parabolic_word,
            longest_word,
        })
    }
}
