//! The dual affinization: real roots `γ∨ + aδ̃`, extended affine Weyl group
//! elements `t(ν)v`, and the inversion table of the translation `t(w₀λ)`.

use std::cmp::Reverse;
use std::fmt;

use serde_json::{json, Value};

use crate::cartan::{pairing, CorootVector, FixedWords, ReflectionOrder, Weight, WeylElement, WeylGroup};
use crate::rational::{to_fraction_string, Rational};
use crate::{Error, Result};

/// The real root `finite + degree·δ̃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub finite: CorootVector,
    pub degree: i64,
}

impl AffineRoot {
    pub fn new(finite: CorootVector, degree: i64) -> Self {
        AffineRoot { finite, degree }
    }

    /// Positive real roots have positive degree, or degree 0 and a positive finite part.
    pub fn is_positive(&self) -> bool {
        self.degree > 0 || (self.degree == 0 && self.finite.0.iter().all(|&c| c >= 0))
    }

    pub fn to_json(&self) -> Value {
        json!({ "finite": self.finite, "degree": self.degree })
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}δ", self.finite, self.degree)
    }
}

/// `t(ν)v`, stored as the pair `(wt, dr) = (ν, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedAffineElement {
    pub translation: Weight,
    pub direction: WeylElement,
}

impl ExtendedAffineElement {
    pub fn new(translation: Weight, direction: WeylElement) -> Self {
        ExtendedAffineElement { translation, direction }
    }

    /// `t(ν)`.
    pub fn translation(group: &WeylGroup, nu: Weight) -> Self {
        Self::new(nu, group.identity())
    }

    /// `v` viewed as `t(0)v`.
    pub fn finite(group: &WeylGroup, v: WeylElement) -> Self {
        Self::new(Weight::zero(group.rank()), v)
    }

    /// `(t(ν)v)(t(μ)u) = t(ν + vμ)(vu)`.
    pub fn compose(&self, other: &Self, group: &WeylGroup) -> Self {
        let moved = group.act_weight(self.direction, &other.translation);
        Self::new(&self.translation + &moved, group.mul(self.direction, other.direction))
    }

    /// `(t(ν)v)⁻¹ = t(−v⁻¹ν)v⁻¹`.
    pub fn inverse(&self, group: &WeylGroup) -> Self {
        let inv = group.inverse(self.direction);
        Self::new(-group.act_weight(inv, &self.translation), inv)
    }

    pub fn is_identity(&self, group: &WeylGroup) -> bool {
        self.translation.is_zero() && self.direction == group.identity()
    }

    /// `t(ν)v (γ∨ + aδ̃) = vγ∨ + (a − ⟨ν, vγ∨⟩)δ̃`.
    pub fn act(&self, group: &WeylGroup, root: &AffineRoot) -> Result<AffineRoot> {
        let datum = group.datum();
        let k = datum
            .coroot_index(&root.finite)
            .ok_or_else(|| Error::Argument(format!("{} is not a coroot", root.finite)))?;
        let moved = datum.coroot(group.act_root(self.direction, k)).clone();
        let shift = pairing(&self.translation, &moved)?;
        Ok(AffineRoot::new(moved, root.degree - shift))
    }

    pub fn format(&self, group: &WeylGroup) -> String {
        format!("t({}) {}", self.translation, group.format(self.direction))
    }
}

/// `s_{α∨ + aδ̃} = t(−aα) s_α`.
pub fn affine_reflection(group: &WeylGroup, root: &AffineRoot) -> Result<ExtendedAffineElement> {
    if root.finite.is_zero() {
        return Err(Error::Argument("an affine reflection needs a nonzero finite part".into()));
    }
    let datum = group.datum();
    let k = datum
        .coroot_index(&root.finite)
        .ok_or_else(|| Error::Argument(format!("{} is not a coroot", root.finite)))?;
    let alpha = datum.root_weight(k);
    Ok(ExtendedAffineElement::new(-root.degree * alpha, group.reflection(k)))
}

/// One element `β̃ = −α∨ + aδ̃` of the inversion set of `t(w₀λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionEntry {
    pub root: AffineRoot,
    /// `a = deg(β̃) > 0`.
    pub a: i64,
    /// `d = (⟨λ₋, −α∨⟩ − a) / ⟨λ₋, −α∨⟩ ∈ [0, 1)`.
    pub d: Rational,
    /// `α = −(β̃̄)∨ ∈ Δ⁺`, as a root index.
    pub finite_label: usize,
    /// `w₀(β̃̄)∨ = −w₀α ∈ Δ⁺ ∖ Δ⁺_S`, as a root index.
    pub projected_label: usize,
    /// `⟨λ₋, −α∨⟩ = ⟨λ, (−w₀α)∨⟩`.
    pub height: i64,
}

/// The inversion set of `t(w₀λ)` sorted by `≺′`: `d` ascending, ties broken
/// by the projected label, `≺`-largest first.
#[derive(Clone, Debug)]
pub struct InversionTable {
    lambda: Weight,
    fixed: FixedWords,
    order: ReflectionOrder,
    entries: Vec<InversionEntry>,
}

impl InversionTable {
    pub fn new(group: &WeylGroup, lambda: &Weight) -> Result<Self> {
        let fixed = group.fixed_words(lambda)?;
        let order = fixed.order(group)?;
        let datum = group.datum();
        let w0 = group.longest();
        let lambda_minus = group.act_weight(w0, lambda);
        let mut entries = Vec::new();
        for alpha in 0..datum.num_positive() {
            let neg = datum.negate(alpha);
            let height = pairing(&lambda_minus, datum.coroot(neg))?;
            for a in 1..=height {
                entries.push(InversionEntry {
                    root: AffineRoot::new(datum.coroot(neg).clone(), a),
                    a,
                    d: Rational::new(height - a, height),
                    finite_label: alpha,
                    projected_label: group.act_root(w0, neg),
                    height,
                });
            }
        }
        entries.sort_by_key(|e| (e.d, Reverse(order.position(e.projected_label))));
        Ok(InversionTable { lambda: lambda.clone(), fixed, order, entries })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn fixed_words(&self) -> &FixedWords {
        &self.fixed
    }

    /// The order `≺` on `Δ⁺` from the fixed reduced word of `w₀`.
    pub fn order(&self) -> &ReflectionOrder {
        &self.order
    }

    pub fn entries(&self) -> &[InversionEntry] {
        &self.entries
    }

    pub fn entry(&self, k: usize) -> &InversionEntry {
        &self.entries[k]
    }

    /// `L = ℓ(t(w₀λ))`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Φ(β̃_k) = (d_k, w₀(β̃̄_k)∨)`.
    pub fn phi(&self, k: usize) -> (Rational, usize) {
        let e = &self.entries[k];
        (e.d, e.projected_label)
    }

    /// Index of the entry with finite part `−γ∨` and degree `a`, for `γ ∈ Δ⁺`.
    pub fn find(&self, gamma: usize, a: i64) -> Option<usize> {
        self.entries.iter().position(|e| e.finite_label == gamma && e.a == a)
    }

    pub fn to_json(&self, group: &WeylGroup) -> Value {
        let datum = group.datum();
        let entries: Vec<Value> = self
            .entries
            .iter()
            .enumerate()
            .map(|(k, e)| {
                json!({
                    "index": k + 1,
                    "root": e.root.to_json(),
                    "a": e.a,
                    "d": to_fraction_string(&e.d),
                    "finite_label": datum.root(e.finite_label),
                    "projected_label": datum.root(e.projected_label),
                })
            })
            .collect();
        json!({
            "type": datum.cartan_type().to_string(),
            "lambda": self.lambda,
            "length": self.entries.len(),
            "longest_word": self.fixed.longest_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "entries": entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use proptest::prelude::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(CartanDatum::new(t.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn translations_compose_additively() {
        let g = group("A2");
        let a = ExtendedAffineElement::translation(&g, Weight(vec![1, -1]));
        let b = ExtendedAffineElement::translation(&g, Weight(vec![2, 3]));
        assert_eq!(a.compose(&b, &g), ExtendedAffineElement::translation(&g, Weight(vec![3, 2])));
    }

    #[test]
    fn a1_composition_example() {
        let g = group("A1");
        let s1 = g.simple(0);
        let x = ExtendedAffineElement::translation(&g, Weight(vec![-1]));
        let y = ExtendedAffineElement::new(Weight(vec![2]), s1);
        assert_eq!(x.compose(&y, &g), ExtendedAffineElement::new(Weight(vec![1]), s1));
        // s₁ t(−ϖ) = t(ϖ) s₁
        let z = ExtendedAffineElement::finite(&g, s1).compose(&x, &g);
        assert_eq!(z, ExtendedAffineElement::new(Weight(vec![1]), s1));
    }

    #[test]
    fn reflection_through_minus_phi() {
        for t in ["A2", "B2", "C3", "G2"] {
            let g = group(t);
            let d = g.datum();
            let phi = d.highest_short_root();
            let s0 = affine_reflection(&g, &AffineRoot::new(-d.coroot(phi).clone(), 1)).unwrap();
            assert_eq!(s0, ExtendedAffineElement::new(d.root_weight(phi).clone(), g.reflection(phi)));
        }
    }

    #[test]
    fn reflections_are_involutions_negating_their_root() {
        for t in ["A2", "B2", "G2"] {
            let g = group(t);
            let d = g.datum();
            for k in 0..d.roots().len() {
                for a in -3..=3 {
                    let root = AffineRoot::new(d.coroot(k).clone(), a);
                    let s = affine_reflection(&g, &root).unwrap();
                    assert!(s.compose(&s, &g).is_identity(&g));
                    let image = s.act(&g, &root).unwrap();
                    assert_eq!(image, AffineRoot::new(-root.finite.clone(), -a));
                }
            }
            let zero = AffineRoot::new(CorootVector::zero(g.rank()), 1);
            assert!(affine_reflection(&g, &zero).is_err());
            let s = affine_reflection(&g, &AffineRoot::new(d.coroot(0).clone(), 0)).unwrap();
            assert_eq!(s, ExtendedAffineElement::finite(&g, g.simple(0)));
        }
    }

    #[test]
    fn a1_tables() {
        let g = group("A1");
        let t = InversionTable::new(&g, &Weight(vec![1])).unwrap();
        assert_eq!(t.len(), 1);
        let e = t.entry(0);
        assert_eq!(e.root, AffineRoot::new(CorootVector(vec![-1]), 1));
        assert_eq!((e.a, e.d, e.finite_label), (1, Rational::from_integer(0), 0));

        let t = InversionTable::new(&g, &Weight(vec![2])).unwrap();
        let ds: Vec<_> = t.entries().iter().map(|e| e.d).collect();
        assert_eq!(ds, vec![Rational::from_integer(0), Rational::new(1, 2)]);
        assert_eq!(t.entry(0).a, 2);

        assert!(InversionTable::new(&g, &Weight(vec![0])).unwrap().is_empty());
        assert!(InversionTable::new(&g, &Weight(vec![-1])).is_err());
    }

    fn small_weights(rank: usize, max: i64) -> Vec<Weight> {
        let mut out = vec![Weight(vec![])];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..=max).map(move |c| {
                        let mut v = w.0.clone();
                        v.push(c);
                        Weight(v)
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn table_is_the_inversion_set_of_the_translation() {
        for t in ["A2", "B2", "G2", "A3"] {
            let g = group(t);
            let d = g.datum();
            for lambda in small_weights(g.rank(), 2) {
                let table = InversionTable::new(&g, &lambda).unwrap();
                let lm = g.act_weight(g.longest(), &lambda);
                let tr = ExtendedAffineElement::translation(&g, lm.clone());
                let mut oracle = Vec::new();
                for k in 0..d.roots().len() {
                    for a in 0..=20 {
                        let root = AffineRoot::new(d.coroot(k).clone(), a);
                        if root.is_positive() && !tr.act(&g, &root).unwrap().is_positive() {
                            oracle.push(root);
                        }
                    }
                }
                let mut got: Vec<_> = table.entries().iter().map(|e| e.root.clone()).collect();
                oracle.sort();
                got.sort();
                assert_eq!(got, oracle);
                let length: i64 = (0..d.num_positive()).map(|k| pairing(&lambda, d.coroot(k)).unwrap()).sum();
                assert_eq!(table.len() as i64, length);
            }
        }
    }

    #[test]
    fn table_invariants() {
        for t in ["A2", "B2", "G2", "A3", "B3", "C3"] {
            let g = group(t);
            let d = g.datum();
            for lambda in small_weights(g.rank(), 2) {
                let table = InversionTable::new(&g, &lambda).unwrap();
                let order = table.order();
                let fixed = table.fixed_words();
                let entries = table.entries();
                for (k, e) in entries.iter().enumerate() {
                    assert!(d.is_positive(e.finite_label));
                    assert!(!d.in_parabolic(e.projected_label, &fixed.subset));
                    assert!(Rational::from_integer(0) <= e.d && e.d < Rational::from_integer(1));
                    assert!((e.d * Rational::from_integer(e.height)).is_integer());
                    if k > 0 {
                        let prev = &entries[k - 1];
                        assert!(prev.d <= e.d);
                        if prev.d == e.d {
                            assert!(order.precedes(e.projected_label, prev.projected_label));
                        }
                    }
                }
                let mut phis: Vec<_> = (0..table.len()).map(|k| table.phi(k)).collect();
                phis.dedup();
                assert_eq!(phis.len(), table.len());
                let m = fixed.split();
                for (k, e) in entries.iter().take(m).enumerate() {
                    assert_eq!(e.projected_label, order.betas()[k]);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn group_laws(a in prop::collection::vec(-4i64..4, 2), b in prop::collection::vec(-4i64..4, 2),
                      c in prop::collection::vec(-4i64..4, 2), i in 0usize..12, j in 0usize..12, k in 0usize..12) {
            let g = group("G2");
            let x = ExtendedAffineElement::new(Weight(a), g.element(i));
            let y = ExtendedAffineElement::new(Weight(b), g.element(j));
            let z = ExtendedAffineElement::new(Weight(c), g.element(k));
            prop_assert_eq!(x.compose(&y, &g).compose(&z, &g), x.compose(&y.compose(&z, &g), &g));
            prop_assert!(x.compose(&x.inverse(&g), &g).is_identity(&g));
            prop_assert!(x.inverse(&g).compose(&x, &g).is_identity(&g));
        }
    }
}
