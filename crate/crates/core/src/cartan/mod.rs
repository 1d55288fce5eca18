//! Finite root systems, the Weyl group and reflection orders.
//!
//! Roots are stored in the simple-root basis, coroots in the simple-coroot
//! basis and weights in the fundamental-weight basis, so every quantity is an
//! exact integer vector. The Cartan matrix follows the convention
//! `A[i][j] = ⟨α_j, α_i∨⟩` with Bourbaki numbering of the nodes.

mod order;
mod weyl;

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Limits, Result};

pub use order::{Direction, FixedWords, ReflectionOrder};
pub use weyl::{ParabolicSubset, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite Cartan type such as `A2` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let valid = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !valid {
            return Err(Error::Config(format!("{series:?}{rank} is not a finite Cartan type")));
        }
        Ok(CartanType { series, rank })
    }

    /// Number of positive roots from the classification.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => [36, 63, 120][n - 6],
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// Order of the Weyl group from the classification.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => [51_840, 2_903_040, 696_729_600][self.rank - 6],
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// The Cartan matrix `A[i][j] = ⟨α_j, α_i∨⟩` (0-based Bourbaki labels).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.series {
            Series::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Series::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            Series::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            Series::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Series::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Series::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Series::G => link(0, 1, -3, -1),
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Config(format!("cannot parse Cartan type `{s}`"));
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(series, rank)
    }
}

macro_rules! lattice_vector {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }
        }

        impl Index<usize> for $name {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                self.0.iter_mut().zip(&rhs.0).for_each(|(a, b)| *a += b);
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                $name(rhs.0.iter().map(|a| self * a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    };
}

lattice_vector!(Weight);
lattice_vector!(RootVector);
lattice_vector!(CorootVector);

impl Weight {
    /// The fundamental weight `ϖ_i` (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `S_λ = { i : ⟨λ, α_i∨⟩ = 0 }`.
    pub fn stabilizer_subset(&self) -> ParabolicSubset {
        ParabolicSubset::new((0..self.rank()).filter(|&i| self.0[i] == 0))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma separated fundamental-weight coordinates, e.g. `"1,0,2"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Argument(format!("malformed weight `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && !self.is_zero()
    }
}

impl CorootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// `⟨λ, γ∨⟩` for a weight in fundamental coordinates and a coroot-lattice
/// vector in simple-coroot coordinates.
pub fn pairing(lambda: &Weight, coroot: &CorootVector) -> Result<i64> {
    if lambda.rank() != coroot.rank() {
        return Err(Error::Argument(format!(
            "rank mismatch in pairing: weight of rank {} with coroot of rank {}",
            lambda.rank(),
            coroot.rank()
        )));
    }
    Ok(lambda.0.iter().zip(&coroot.0).map(|(a, b)| a * b).sum())
}

/// Root system data: Cartan matrix, symmetrizer and the enumerated roots.
///
/// Roots are indexed so that `0..npos` are the positive roots sorted by
/// height (simple roots first, in node order) and `npos + k` is `-(root k)`.
#[derive(Clone, Debug)]
pub struct CartanDatum {
    cartan_type: CartanType,
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    roots: Vec<RootVector>,
    coroots: Vec<CorootVector>,
    root_weights: Vec<Weight>,
    root_lengths: Vec<i64>,
    root_index: HashMap<RootVector, usize>,
    highest_root: usize,
    highest_short_root: usize,
}

impl CartanDatum {
    /// Builds the root system of `cartan_type` under the default [`Limits`].
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        Self::build(cartan_type, &Limits::default())
    }

    pub fn build(cartan_type: CartanType, limits: &Limits) -> Result<Self> {
        if cartan_type.series != Series::G && cartan_type.rank > limits.max_rank {
            return Err(Error::Config(format!(
                "{cartan_type} exceeds the configured rank bound {} (G2 is always available)",
                limits.max_rank
            )));
        }
        let matrix = cartan_type.cartan_matrix();
        let n = cartan_type.rank;
        let symmetrizer = symmetrizer(&matrix)?;

        // Closure of the simple roots under simple reflections.
        let simple: Vec<RootVector> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                RootVector(v)
            })
            .collect();
        let mut found: BTreeSet<RootVector> = simple.iter().cloned().collect();
        let mut frontier = simple.clone();
        while let Some(root) = frontier.pop() {
            for i in 0..n {
                let c: i64 = (0..n).map(|j| matrix[i][j] * root[j]).sum();
                let mut next = root.clone();
                next.0[i] -= c;
                if found.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut positive: Vec<RootVector> = found.into_iter().filter(|r| r.is_positive()).collect();
        positive.sort_by_key(|r| (r.height(), Reverse(r.clone())));
        let npos = positive.len();
        if npos != cartan_type.positive_root_count() {
            return Err(Error::Invariant(format!(
                "{cartan_type}: closure produced {npos} positive roots, expected {}",
                cartan_type.positive_root_count()
            )));
        }
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| -r));

        let norm = |r: &RootVector| -> i64 {
            // (α, α) / 2 in units where (α_i, α_i) / 2 = symmetrizer[i]
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += r[i] * r[j] * symmetrizer[i] * matrix[i][j];
                }
            }
            s / 2
        };
        let root_lengths: Vec<i64> = roots.iter().map(norm).collect();
        let coroots = roots
            .iter()
            .zip(&root_lengths)
            .map(|(r, &len)| {
                CorootVector((0..n).map(|j| r[j] * symmetrizer[j] / len).collect())
            })
            .collect();
        let root_weights = roots
            .iter()
            .map(|r| Weight((0..n).map(|i| (0..n).map(|j| matrix[i][j] * r[j]).sum()).collect()))
            .collect();
        let root_index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();

        let highest_root = (0..npos).max_by_key(|&k| roots[k].height()).unwrap();
        let short = root_lengths.iter().take(npos).copied().min().unwrap();
        let highest_short_root = (0..npos)
            .filter(|&k| root_lengths[k] == short)
            .max_by_key(|&k| roots[k].height())
            .unwrap();

        Ok(CartanDatum {
            cartan_type,
            matrix,
            symmetrizer,
            roots,
            coroots,
            root_weights,
            root_lengths,
            root_index,
            highest_root,
            highest_short_root,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Root lengths squared over two, normalised so the shortest simple root has 1.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.roots[..self.num_positive()]
    }

    pub fn root(&self, k: usize) -> &RootVector {
        &self.roots[k]
    }

    pub fn coroot(&self, k: usize) -> &CorootVector {
        &self.coroots[k]
    }

    /// `α` expressed in fundamental-weight coordinates.
    pub fn root_weight(&self, k: usize) -> &Weight {
        &self.root_weights[k]
    }

    pub fn root_index(&self, r: &RootVector) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    /// Index of the root whose coroot is `c`.
    pub fn coroot_index(&self, c: &CorootVector) -> Option<usize> {
        let n = self.rank();
        // α = (|α|²/2) Σ c_j α_j∨ and α_j∨ = α_j / d_j; try every root length.
        let mut lengths: Vec<i64> = self.root_lengths.clone();
        lengths.sort_unstable();
        lengths.dedup();
        for len in lengths {
            let mut coords = Vec::with_capacity(n);
            let mut ok = true;
            for j in 0..n {
                let num = c[j] * len;
                if num % self.symmetrizer[j] != 0 {
                    ok = false;
                    break;
                }
                coords.push(num / self.symmetrizer[j]);
            }
            if !ok {
                continue;
            }
            if let Some(k) = self.root_index(&RootVector(coords)) {
                if &self.coroots[k] == c {
                    return Some(k);
                }
            }
        }
        None
    }

    pub fn negate(&self, k: usize) -> usize {
        let npos = self.num_positive();
        if k < npos {
            k + npos
        } else {
            k - npos
        }
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.num_positive()
    }

    /// `(α, α) / 2` in the normalisation of [`Self::symmetrizer`].
    pub fn root_length(&self, k: usize) -> i64 {
        self.root_lengths[k]
    }

    pub fn is_long(&self, k: usize) -> bool {
        self.root_lengths[k] == *self.root_lengths.iter().max().unwrap()
    }

    /// The highest root `θ`.
    pub fn highest_root(&self) -> usize {
        self.highest_root
    }

    /// The highest short root `φ` (equal to `θ` in simply-laced types).
    pub fn highest_short_root(&self) -> usize {
        self.highest_short_root
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank())
    }

    /// `2ρ_S = Σ_{α ∈ Δ⁺_S} α` in root coordinates.
    pub fn two_rho(&self, s: &ParabolicSubset) -> RootVector {
        let mut acc = RootVector::zero(self.rank());
        for k in 0..self.num_positive() {
            if self.in_parabolic(k, s) {
                acc += &self.roots[k];
            }
        }
        acc
    }

    /// `Σ_{α ∈ Δ⁺} α` in root coordinates.
    pub fn two_rho_full(&self) -> RootVector {
        let mut acc = RootVector::zero(self.rank());
        for r in self.positive_roots() {
            acc += r;
        }
        acc
    }

    /// Whether root `k` lies in `Δ_S`.
    pub fn in_parabolic(&self, k: usize, s: &ParabolicSubset) -> bool {
        self.roots[k].0.iter().enumerate().all(|(i, &c)| c == 0 || s.contains(i))
    }

    /// `⟨α, γ∨⟩` for a root-lattice vector and a coroot-lattice vector.
    pub fn root_coroot_pairing(&self, alpha: &RootVector, coroot: &CorootVector) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += coroot[i] * self.matrix[i][j] * alpha[j];
            }
        }
        s
    }

    /// Expresses a root-lattice vector in fundamental-weight coordinates.
    pub fn root_lattice_to_weight(&self, alpha: &RootVector) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|i| (0..n).map(|j| self.matrix[i][j] * alpha[j]).sum()).collect())
    }

    /// Determinant of the Cartan matrix (exact, by fraction-free elimination).
    pub fn cartan_determinant(&self) -> i64 {
        let mut m: Vec<Vec<i128>> =
            self.matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let n = m.len();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        (sign * m[n - 1][n - 1]) as i64
    }

    /// Summary used by the JSON export.
    pub fn summary(&self, weyl_order: usize) -> serde_json::Value {
        serde_json::json!({
            "type": self.cartan_type.to_string(),
            "cartan_matrix": self.matrix,
            "simple_roots": self.positive_roots()[..self.rank()],
            "positive_roots": self.positive_roots(),
            "weyl_order": weyl_order,
            "highest_short_root": self.roots[self.highest_short_root],
            "highest_root": self.roots[self.highest_root],
        })
    }
}

/// Integers `d_i` with `d_i A[i][j] = d_j A[j][i]`, smallest equal to 1.
fn symmetrizer(matrix: &[Vec<i64>]) -> Result<Vec<i64>> {
    use num_rational::Rational64;
    let n = matrix.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && matrix[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Rational64::new(matrix[i][j], matrix[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Config("Dynkin diagram is not connected".into())))
        .collect::<Result<_>>()?;
    let min = d.iter().copied().min().unwrap();
    let scaled: Vec<Rational64> = d.iter().map(|x| x / min).collect();
    if scaled.iter().any(|x| !x.is_integer()) {
        return Err(Error::Config("Cartan matrix is not symmetrizable over the integers".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if scaled[i] * matrix[i][j] != scaled[j] * matrix[j][i] {
                return Err(Error::Config("Cartan matrix is not symmetrizable".into()));
            }
        }
    }
    Ok(scaled.iter().map(|x| x.to_integer()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_has_a_single_positive_root() {
        let d = datum("A1");
        assert_eq!(d.positive_roots(), &[RootVector(vec![1])]);
        assert_eq!(d.highest_short_root(), 0);
        assert_eq!(d.highest_root(), 0);
    }

    #[test]
    fn a2_highest_short_root_is_the_sum() {
        let d = datum("A2");
        assert_eq!(d.num_positive(), 3);
        assert_eq!(d.root(d.highest_short_root()), &RootVector(vec![1, 1]));
        assert_eq!(d.highest_root(), d.highest_short_root());
    }

    #[test]
    fn g2_short_and_long_highest_roots_differ() {
        let d = datum("G2");
        assert_eq!(d.num_positive(), 6);
        let phi = d.highest_short_root();
        let theta = d.highest_root();
        assert_ne!(phi, theta);
        assert!(!d.is_long(phi));
        assert!(d.is_long(theta));
        // α1 short: φ = 2α1 + α2, θ = 3α1 + 2α2
        assert_eq!(d.root(phi), &RootVector(vec![2, 1]));
        assert_eq!(d.root(theta), &RootVector(vec![3, 2]));
    }

    #[test]
    fn classification_counts_and_cartan_checks() {
        for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"] {
            let d = datum(t);
            let ct = d.cartan_type();
            assert_eq!(d.num_positive(), ct.positive_root_count(), "{t}");
            let m = d.cartan_matrix();
            for i in 0..d.rank() {
                assert_eq!(m[i][i], 2);
                for j in 0..d.rank() {
                    if i != j {
                        assert!(m[i][j] <= 0);
                        assert_eq!(m[i][j] == 0, m[j][i] == 0);
                    }
                }
            }
            assert!(d.cartan_determinant() > 0, "{t}");
            // every coroot of a root is a root of the dual system: ⟨α, α∨⟩ = 2
            for k in 0..d.roots().len() {
                assert_eq!(d.root_coroot_pairing(d.root(k), d.coroot(k)), 2);
                assert_eq!(d.coroot_index(d.coroot(k)), Some(k));
            }
            if matches!(ct.series, Series::A | Series::D | Series::E) {
                assert_eq!(d.highest_root(), d.highest_short_root());
            }
        }
    }

    #[test]
    fn known_determinants() {
        assert_eq!(datum("A3").cartan_determinant(), 4);
        assert_eq!(datum("B3").cartan_determinant(), 2);
        assert_eq!(datum("D4").cartan_determinant(), 4);
        assert_eq!(datum("G2").cartan_determinant(), 1);
        assert_eq!(datum("F4").cartan_determinant(), 1);
    }

    #[test]
    fn pairing_examples() {
        let d = datum("A2");
        let w1 = Weight::fundamental(2, 0);
        assert_eq!(pairing(&w1, d.coroot(0)).unwrap(), 1);
        assert_eq!(pairing(&w1, d.coroot(1)).unwrap(), 0);
        assert_eq!(pairing(&d.rho(), d.coroot(d.highest_short_root())).unwrap(), 2);
        assert!(pairing(&Weight(vec![1]), d.coroot(0)).is_err());
    }

    #[test]
    fn rank_bound_is_enforced() {
        let err = CartanDatum::new("A5".parse().unwrap()).unwrap_err();
        assert!(matches!(err, Error::Config(ref m) if m.contains("rank bound 4")));
        assert!(CartanDatum::new("G2".parse().unwrap()).is_ok());
        let limits = Limits { max_rank: 5, ..Limits::default() };
        assert!(CartanDatum::build("A5".parse().unwrap(), &limits).is_ok());
    }

    #[test]
    fn invalid_types_are_rejected() {
        for t in ["D3", "E5", "F3", "G3", "B1", "X2", "A"] {
            assert!(t.parse::<CartanType>().is_err(), "{t}");
        }
    }
}
