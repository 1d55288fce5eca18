//! Graded characters: finitely supported sums `Σ c · q^k e^μ` with integer
//! coefficients, weights `μ ∈ P` and integer `q`-exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cartan::{Weight, WeylElement, WeylGroup};
use crate::{Error, Result};

/// A graded character. Terms are kept in canonical order (weight
/// coordinates lexicographically, then the `q`-exponent) and never hold a
/// zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedCharacter {
    terms: BTreeMap<(Weight, i64), BigInt>,
}

impl GradedCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · q^k e^μ`.
    pub fn monomial(weight: Weight, q: i64, coeff: impl Into<BigInt>) -> Self {
        let mut x = Self::zero();
        x.add_term(weight, q, coeff.into());
        x
    }

    pub fn add_term(&mut self, weight: Weight, q: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (weight, q);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64, &BigInt)> {
        self.terms.iter().map(|((w, k), c)| (w, *k, c))
    }

    pub fn coefficient(&self, weight: &Weight, q: i64) -> BigInt {
        self.terms.get(&(weight.clone(), q)).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients, i.e. the value at `q = 1`, `e^μ = 1`.
    pub fn total_mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        GradedCharacter {
            terms: self.terms.iter().map(|((w, k), c)| ((w.clone(), -k), c.clone())).collect(),
        }
    }

    /// `v · e^μ = e^{vμ}`.
    pub fn weyl_act(&self, group: &WeylGroup, v: WeylElement) -> Self {
        let mut out = Self::zero();
        for ((w, k), c) in &self.terms {
            out.add_term(group.act_weight(v, w), *k, c.clone());
        }
        out
    }

    /// Collapses the grading: the weight multiset at `q = 1`.
    pub fn specialize_q1(&self) -> BTreeMap<Weight, BigInt> {
        let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for ((w, _), c) in &self.terms {
            *out.entry(w.clone()).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Largest and smallest `q`-exponent, if nonzero.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().map(|(_, k)| *k).min()?;
        let max = self.terms.keys().map(|(_, k)| *k).max()?;
        Some((min, max))
    }

    /// Canonical JSON: `[{"weight": [..], "q": k, "coeff": c}, ..]`.
    ///
    /// Coefficients outside the `i64` range are emitted as decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((w, k), c)| {
                    let coeff = match c.to_i64() {
                        Some(v) => json!(v),
                        None => json!(c.to_string()),
                    };
                    json!({ "weight": w, "q": k, "coeff": coeff })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Argument(format!("malformed character JSON: {m}"));
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut out = Self::zero();
        for item in items {
            let weight: Weight = serde_json::from_value(item["weight"].clone())
                .map_err(|_| bad("bad weight"))?;
            let q = item["q"].as_i64().ok_or_else(|| bad("bad q"))?;
            let coeff = match &item["coeff"] {
                Value::Number(n) => BigInt::from(n.as_i64().ok_or_else(|| bad("bad coeff"))?),
                Value::String(s) => s.parse::<BigInt>().map_err(|_| bad("bad coeff"))?,
                _ => return Err(bad("bad coeff")),
            };
            out.add_term(weight, q, coeff);
        }
        Ok(out)
    }
}

impl AddAssign<&GradedCharacter> for GradedCharacter {
    fn add_assign(&mut self, rhs: &GradedCharacter) {
        for ((w, k), c) in &rhs.terms {
            self.add_term(w.clone(), *k, c.clone());
        }
    }
}

impl Add for &GradedCharacter {
    type Output = GradedCharacter;
    fn add(self, rhs: &GradedCharacter) -> GradedCharacter {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &GradedCharacter {
    type Output = GradedCharacter;
    fn neg(self) -> GradedCharacter {
        GradedCharacter { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Sub for &GradedCharacter {
    type Output = GradedCharacter;
    fn sub(self, rhs: &GradedCharacter) -> GradedCharacter {
        self + &(-rhs)
    }
}

/// Plain text form, e.g. `e[-1] + q^-1 e[1]`; the zero weight prints as `1`.
impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((w, k), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() {
                parts.push(abs.to_string());
            }
            if *k != 0 {
                parts.push(format!("q^{k}"));
            }
            if !w.is_zero() {
                let coords: Vec<String> = w.coords().iter().map(|x| x.to_string()).collect();
                parts.push(format!("e[{}]", coords.join(",")));
            }
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}
