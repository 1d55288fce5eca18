//! The bijection `Ξ_w : QB(w; t(w₀λ)) → QLS(λ)` and its inverse.
//!
//! `Ξ_w` groups the folds of a quantum alcove path by their `d`-value; the
//! directions reached at the group boundaries, multiplied by `w₀` and
//! projected to `W^S`, are the vertices of the QLS path. The inverse walks
//! tilted Bruhat minima and label-increasing paths back to a subset `J`.

use serde_json::{json, Value};

use crate::cartan::{pairing, Weight, WeylElement};
use crate::qbg::PathFilter;
use crate::qbpaths::{AlcovePath, AlcovePaths};
use crate::qls::{QlsContext, QlsPath};
use crate::rational::{integral_product, to_fraction_string, Rational};
use crate::{Error, Result};

/// Everything `Ξ_w` needs for fixed `λ` and `w`.
pub struct XiContext<'a> {
    paths: &'a AlcovePaths<'a>,
    qls: &'a QlsContext,
    w: WeylElement,
}

impl<'a> XiContext<'a> {
    pub fn new(paths: &'a AlcovePaths<'a>, qls: &'a QlsContext, w: WeylElement) -> Result<Self> {
        if paths.table().lambda() != qls.lambda() {
            return Err(Error::Argument("alcove paths and QLS paths are for different weights".into()));
        }
        Ok(XiContext { paths, qls, w })
    }

    pub fn w(&self) -> WeylElement {
        self.w
    }

    /// `Ξ_w(p_J)`.
    pub fn xi(&self, p: &AlcovePath) -> Result<QlsPath> {
        let group = self.qls.group();
        if !p.is_quantum() || p.chain()[0] != self.paths.start(self.w) {
            return Err(Error::Argument(format!("J = {:?} is not in QB(w; t(w₀λ)) for this w", p.j())));
        }
        let table = self.paths.table();
        let ds: Vec<Rational> = p.j().iter().map(|&j| table.entry(j).d).collect();
        let mut sigmas = vec![Rational::from_integer(0)];
        for &d in &ds {
            if d > *sigmas.last().unwrap() {
                sigmas.push(d);
            }
        }
        sigmas.push(Rational::from_integer(1));
        let s = sigmas.len() - 1;
        let w0 = group.longest();
        // w_p = x_{u_p} w₀ with u_{p+1} = #{j ∈ J : d_j ≤ σ_p}
        let mut vertices = Vec::with_capacity(s);
        for sigma in &sigmas[..s] {
            let u = ds.iter().filter(|&&d| d <= *sigma).count();
            let x = p.chain()[u].direction;
            vertices.push(self.qls.graph().project(group.mul(x, w0)));
        }
        if vertices.windows(2).any(|v| v[0] == v[1]) {
            return Err(Error::Invariant(format!("Ξ_w produced equal adjacent vertices for J = {:?}", p.j())));
        }
        let eta = QlsPath::new(vertices, sigmas)?;
        if !self.qls.is_member(&eta) {
            return Err(Error::Invariant(format!("Ξ_w(J = {:?}) = {} violates condition (C)", p.j(), eta.format(group))));
        }
        Ok(eta)
    }

    /// `Ξ_w⁻¹(η)`.
    pub fn xi_inverse(&self, eta: &QlsPath) -> Result<AlcovePath> {
        let group = self.qls.group();
        if !self.qls.is_member(eta) {
            return Err(Error::Argument(format!("{} is not in QLS(λ)", eta.format(group))));
        }
        let datum = group.datum();
        let graph = self.paths.graph();
        let table = self.paths.table();
        let order = table.order();
        let subset = *self.qls.subset();
        let lambda = self.qls.lambda();
        let w0 = group.longest();
        let lambda_minus = group.act_weight(w0, lambda);

        let mut v = vec![group.mul(self.w, w0)];
        for &y in eta.vertices() {
            let prev = *v.last().unwrap();
            v.push(graph.tilted_min(y, &subset, prev)?);
        }
        let mut j = Vec::new();
        for p in 0..eta.segments() {
            let tau = eta.breaks()[p];
            let filter = PathFilter { exclude: Some(subset), sigma: Some((lambda.clone(), tau)) };
            let path = graph.increasing_path(v[p + 1], v[p], order, &filter)?.ok_or_else(|| {
                Error::Invariant(format!("no increasing path for segment {p} of {}", eta.format(group)))
            })?;
            for e in path.iter().rev() {
                let gamma = group.act_root(w0, datum.negate(e.label));
                let height = pairing(&lambda_minus, datum.coroot(datum.negate(gamma)))?;
                let a = integral_product(&(Rational::from_integer(1) - tau), height)
                    .ok_or_else(|| Error::Invariant("non-integral affine degree".into()))?;
                let k = table.find(gamma, a).ok_or_else(|| {
                    Error::Invariant(format!("−{}∨ + {a}δ is not in the inversion table", datum.root(gamma)))
                })?;
                j.push(k);
            }
        }
        if j.windows(2).any(|x| x[0] >= x[1]) {
            return Err(Error::Invariant(format!("recovered indices {j:?} are not ≺′-increasing")));
        }
        let p = self.paths.path(self.w, &j)?;
        if !p.is_quantum() {
            return Err(Error::Invariant(format!("recovered J = {j:?} is not a quantum alcove path")));
        }
        Ok(p)
    }

    /// Compares `wt(ed(p))` with `wt(Ξ_w(p))` and `deg(qwt(p))` with `Deg^{ww₀}(Ξ_w(p))`.
    pub fn check_preservation(&self, p: &AlcovePath) -> Result<Preservation> {
        let group = self.qls.group();
        let eta = self.xi(p)?;
        let xi_weight = self.qls.wt(&eta)?;
        let xi_deg = self.qls.deg_stats(&eta, group.mul(self.w, group.longest()))?.upper;
        Ok(Preservation {
            end_weight: p.end_weight().clone(),
            xi_weight,
            deg: p.deg(),
            xi_deg,
        })
    }
}

/// Outcome of a per-path preservation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preservation {
    pub end_weight: Weight,
    pub xi_weight: Weight,
    pub deg: i64,
    pub xi_deg: i64,
}

impl Preservation {
    pub fn weight_matches(&self) -> bool {
        self.end_weight == self.xi_weight
    }

    pub fn degree_matches(&self) -> bool {
        self.deg == self.xi_deg
    }

    pub fn to_json(&self) -> Value {
        json!({
            "end_weight": self.end_weight,
            "xi_weight": self.xi_weight,
            "deg_qwt": self.deg,
            "xi_deg": self.xi_deg,
            "weight_match": self.weight_matches(),
            "degree_match": self.degree_matches(),
        })
    }
}

/// JSON record of a pair `(p_J, Ξ_w(p_J))`.
pub fn pair_json(ctx: &XiContext<'_>, p: &AlcovePath) -> Result<Value> {
    let group = ctx.qls.group();
    let eta = ctx.xi(p)?;
    Ok(json!({
        "J": p.j().iter().map(|j| j + 1).collect::<Vec<_>>(),
        "qls": {
            "vertices": eta.vertices().iter().map(|&x| group.format(x)).collect::<Vec<_>>(),
            "breaks": eta.breaks().iter().map(to_fraction_string).collect::<Vec<_>>(),
        },
        "check": ctx.check_preservation(p)?.to_json(),
    }))
}
