//! Verification suites behind `qbgc verify`.

use qbgc_core::bijection::XiContext;
use qbgc_core::cartan::{Direction, ReflectionOrder, WeylElement, WeylGroup};
use qbgc_core::qbg::{PathFilter, QuantumBruhatGraph};
use qbgc_core::qbpaths::AlcovePaths;
use qbgc_core::qls::QlsContext;
use qbgc_core::Result;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{JobArgs, Setup, Suite};

/// One named check with its outcome.
pub struct Check {
    pub name: String,
    pub detail: Value,
    pub counterexample: Option<String>,
}

impl Check {
    fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub struct Report {
    pub suite: Suite,
    pub header: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn first_failure(&self) -> Option<String> {
        self.checks.iter().find_map(|c| c.counterexample.as_ref().map(|x| format!("{}: {x}", c.name)))
    }

    fn suite_name(&self) -> String {
        format!("{:?}", self.suite).to_lowercase()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "check": c.name,
                    "status": if c.passed() { "pass" } else { "fail" },
                    "detail": c.detail,
                    "counterexample": c.counterexample,
                })
            })
            .collect();
        json!({
            "suite": self.suite_name(),
            "setup": self.header,
            "status": if self.first_failure().is_none() { "pass" } else { "fail" },
            "checks": checks,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            match &c.counterexample {
                None => s += &format!("PASS  {}\n", c.name),
                Some(x) => s += &format!("FAIL  {}  {x}\n", c.name),
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        s += &format!(
            "{}: {} ({} checks, {failed} failed)\n",
            self.suite_name(),
            if failed == 0 { "pass" } else { "fail" },
            self.checks.len()
        );
        s
    }
}

pub fn run(setup: &Setup, suite: Suite, job: &JobArgs) -> Result<Report> {
    let g = &setup.group;
    let mut header = json!({ "type": g.datum().cartan_type().to_string() });
    let checks = match suite {
        Suite::Shellability => shellability(g, &QuantumBruhatGraph::new(g.clone())),
        _ => {
            let lambda = setup.lambda(job)?;
            header["lambda"] = json!(lambda);
            let ws = setup.elements(job)?;
            let table = setup.table(&lambda)?;
            let graph = QuantumBruhatGraph::new(g.clone());
            let paths = AlcovePaths::new(&graph, &table)?;
            let qls = QlsContext::new(g.clone(), &lambda)?;
            match suite {
                Suite::Theorem => theorem(setup, &paths, &qls, &ws)?,
                Suite::Bijection => bijection(setup, &paths, &qls, &ws)?,
                Suite::Involution => involution(&qls, &ws)?,
                Suite::Shellability => unreachable!(),
            }
        }
    };
    Ok(Report { suite, header, checks })
}

fn theorem(setup: &Setup, paths: &AlcovePaths<'_>, qls: &QlsContext, ws: &[WeylElement]) -> Result<Vec<Check>> {
    let g = &setup.group;
    let w0 = g.longest();
    let etas = qls.enumerate();
    ws.par_iter()
        .map(|&w| {
            let c = paths.graded_char_c(w, &setup.limits)?;
            let up = qls.gch_up(&etas, g.mul(w, w0))?;
            let down = qls.gch_down(&etas, g.mul(g.mul(w0, w), w0))?;
            let residual = &c.bar() - &up;
            let residual_second = &c.bar().weyl_act(g, w0) - &down;
            let counterexample = if !residual.is_zero() {
                Some(format!("bar(C_w) - gch^(w w0) = {residual}"))
            } else if !residual_second.is_zero() {
                Some(format!("w0 bar(C_w) - gch_(w0 w w0) = {residual_second}"))
            } else {
                None
            };
            Ok(Check {
                name: format!("w={}", g.format(w)),
                detail: json!({
                    "character": c.to_json(),
                    "residual": residual.to_json(),
                    "second_form_residual": residual_second.to_json(),
                }),
                counterexample,
            })
        })
        .collect()
}

fn bijection(setup: &Setup, paths: &AlcovePaths<'_>, qls: &QlsContext, ws: &[WeylElement]) -> Result<Vec<Check>> {
    let g = &setup.group;
    let etas = qls.enumerate();
    let mut checks: Vec<Check> = ws
        .par_iter()
        .map(|&w| {
            let ctx = XiContext::new(paths, qls, w)?;
            let qb = paths.enumerate_qb(w, &setup.limits)?;
            let mut counterexample = None;
            let (mut weight_ok, mut degree_ok, mut round_trip_ok) = (0usize, 0usize, 0usize);
            for p in &qb {
                let c = ctx.check_preservation(p)?;
                let eta = ctx.xi(p)?;
                let back = ctx.xi_inverse(&eta)?;
                weight_ok += usize::from(c.weight_matches());
                degree_ok += usize::from(c.degree_matches());
                round_trip_ok += usize::from(&back == p);
                if counterexample.is_none() && !(c.weight_matches() && c.degree_matches() && &back == p) {
                    counterexample = Some(format!("J={:?}: {}", p.j().iter().map(|j| j + 1).collect::<Vec<_>>(), c.to_json()));
                }
            }
            let mut inverse_ok = 0usize;
            for eta in &etas {
                let ok = ctx.xi(&ctx.xi_inverse(eta)?)? == *eta;
                inverse_ok += usize::from(ok);
                if counterexample.is_none() && !ok {
                    counterexample = Some(format!("Ξ_w(Ξ_w⁻¹({})) differs", eta.format(g)));
                }
            }
            if counterexample.is_none() && qb.len() != etas.len() {
                counterexample = Some(format!("|QB| = {} but |QLS| = {}", qb.len(), etas.len()));
            }
            Ok(Check {
                name: format!("w={}", g.format(w)),
                detail: json!({
                    "qb_count": qb.len(),
                    "qls_count": etas.len(),
                    "weight_matches": weight_ok,
                    "degree_matches": degree_ok,
                    "round_trips": round_trip_ok,
                    "inverse_round_trips": inverse_ok,
                }),
                counterexample,
            })
        })
        .collect::<Result<_>>()?;
    let counts: Vec<u64> = checks.iter().map(|c| c.detail["qb_count"].as_u64().unwrap_or(0)).collect();
    let equal = counts.windows(2).all(|c| c[0] == c[1]);
    checks.push(Check {
        name: "counts equal across w".into(),
        detail: json!({ "count": counts.first() }),
        counterexample: (!equal).then(|| format!("counts {counts:?}")),
    });
    Ok(checks)
}

fn involution(qls: &QlsContext, ws: &[WeylElement]) -> Result<Vec<Check>> {
    let g = qls.group();
    let w0 = g.longest();
    let etas = qls.enumerate();
    let mut counterexample = None;
    for eta in &etas {
        let te = qls.lusztig_t(eta);
        let ok = qls.is_member(&te) && qls.lusztig_t(&te) == *eta && qls.wt(&te)? == g.act_weight(w0, &qls.wt(eta)?);
        if !ok {
            counterexample = Some(format!("T misbehaves on {}", eta.format(g)));
            break;
        }
    }
    let mut checks = vec![Check {
        name: "T is an involution on QLS(λ) with wt(T η) = w0 wt(η)".into(),
        detail: json!({ "paths": etas.len() }),
        counterexample,
    }];
    let per_w: Vec<Check> = ws
        .par_iter()
        .map(|&w| {
            let w0w = g.mul(w0, w);
            let mut counterexample = None;
            for eta in &etas {
                let lhs = qls.deg_stats(&qls.lusztig_t(eta), w)?.lower;
                let rhs = qls.deg_stats(eta, w0w)?.upper;
                if lhs != rhs {
                    counterexample = Some(format!("{}: Deg_w(T η) = {lhs}, Deg^(w0 w)(η) = {rhs}", eta.format(g)));
                    break;
                }
            }
            let gch = qls.gch_down(&etas, w)?;
            let residual = &gch - &qls.gch_up(&etas, w0w)?.weyl_act(g, w0);
            if counterexample.is_none() && !residual.is_zero() {
                counterexample = Some(format!("gch_w - w0 gch^(w0 w) = {residual}"));
            }
            Ok(Check { name: format!("w={}", g.format(w)), detail: json!({ "residual": residual.to_json() }), counterexample })
        })
        .collect::<Result<_>>()?;
    checks.extend(per_w);
    Ok(checks)
}

fn shellability(g: &WeylGroup, graph: &QuantumBruhatGraph) -> Vec<Check> {
    let mut words = vec![g.word(g.longest()).to_vec()];
    for w in g.reduced_words(g.longest()) {
        if !words.contains(&w) {
            words.push(w);
        }
    }
    let jobs: Vec<(Vec<usize>, Direction)> = words
        .into_iter()
        .flat_map(|w| [(w.clone(), Direction::Increasing), (w, Direction::Decreasing)])
        .collect();
    jobs.par_iter().map(|(word, dir)| shellability_for(g, graph, word, *dir)).collect()
}

fn shellability_for(g: &WeylGroup, graph: &QuantumBruhatGraph, word: &[usize], dir: Direction) -> Check {
    let order = ReflectionOrder::from_word(g, word, dir).expect("reduced word of w0");
    let flipped = match dir {
        Direction::Increasing => Direction::Decreasing,
        Direction::Decreasing => Direction::Increasing,
    };
    let reversed = ReflectionOrder::from_word(g, word, flipped).expect("reduced word of w0");
    let filter = PathFilter::default();
    let name = format!(
        "word={} {}",
        word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(""),
        format!("{dir:?}").to_lowercase()
    );
    let mut pairs = 0usize;
    for u in g.elements() {
        for v in g.elements() {
            pairs += 1;
            let d = graph.dist(u, v);
            let shortest = graph.all_shortest_paths(u, v);
            let key = |p: &[qbgc_core::qbg::QbgEdge]| p.iter().map(|e| order.position(e.label)).collect::<Vec<_>>();
            for (increasing, o) in [(true, &order), (false, &reversed)] {
                let all = graph.all_increasing_paths(u, v, o);
                let greedy = graph.monotone_path(u, v, &order, increasing, &filter);
                let extremal =
                    if increasing { shortest.iter().map(|p| key(p)).min() } else { shortest.iter().map(|p| key(p)).max() };
                let ok = all.len() == 1
                    && Some(all[0].len()) == d
                    && Some(key(&all[0])) == extremal
                    && matches!(&greedy, Ok(Some(p)) if *p == all[0]);
                if !ok {
                    return Check {
                        name,
                        detail: json!({ "pairs": pairs }),
                        counterexample: Some(format!(
                            "{} → {}: {} {} paths",
                            g.format(u),
                            g.format(v),
                            all.len(),
                            if increasing { "increasing" } else { "decreasing" }
                        )),
                    };
                }
            }
        }
    }
    Check { name, detail: json!({ "pairs": pairs }), counterexample: None }
}
