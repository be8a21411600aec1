//! One function per subcommand. Each returns a [`Report`]; printing and
//! exit codes are handled by the caller.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use girthram_core::bounds::{analytic_container_check, derive_params, ParamInput, Quantity, Theorem};
use girthram_core::colouring::ColouringOutcome;
use girthram_core::exact::{
    extremal_ex, f_bound_report, fact7_premise, fact_vdw_check, ramsey_decide, ramsey_number, vdw_decide,
    vdw_number, Extremal, FactBranch, RamseyKind, Sweep,
};
use girthram_core::hypergraph::count_cycles;
use girthram_core::sampling::{
    random_colouring, rejection_sample_girth, sample_gnp, sample_subset, Rejection, PRNG_ID,
};
use girthram_core::trial::{run_trial, scaled_p, summarize, TrialConfig, TrialRecord};
use girthram_core::{
    arrows, colouring_search, enumerate_short_cycles, sparsity_girth, verify_colouring, ArrowOutcome, CopyBase,
    CopyKind, Error as CoreError, Girth, Graph, SearchBudget,
};

use crate::args::*;
use crate::io::{self, IoError};

/// Process exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CmdError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError::Usage(msg.into())
}

/// What a command computed.
pub struct Report {
    /// Short description of the quantity computed, shown in text output.
    pub anchor: &'static str,
    pub text: String,
    pub result: Value,
    /// Extra resolved settings (such as generated seeds) for the config echo.
    pub resolved: BTreeMap<String, Value>,
    pub exit: i32,
}

impl Report {
    fn new(anchor: &'static str, text: String, result: Value) -> Report {
        Report { anchor, text, result, resolved: BTreeMap::new(), exit: EXIT_OK }
    }

    fn budget_limited(mut self, limited: bool) -> Report {
        if limited {
            self.exit = EXIT_BUDGET;
        }
        self
    }

    fn resolve(mut self, key: &str, v: impl Serialize) -> Report {
        self.resolved.insert(key.into(), serde_json::to_value(v).expect("serializable"));
        self
    }
}

pub fn budget(g: &Global) -> SearchBudget {
    SearchBudget {
        node_limit: (g.budget_nodes != 0).then_some(g.budget_nodes),
        time_limit: g.budget_secs.map(Duration::from_secs_f64),
    }
}

/// A seed for randomized commands run without `--seed`.
pub fn fresh_seed() -> u64 {
    use std::hash::{BuildHasher, Hasher};
    let mut h = std::collections::hash_map::RandomState::new().build_hasher();
    h.write_u128(std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).unwrap_or_default().as_nanos());
    h.write_u32(std::process::id());
    h.finish()
}

fn theorem(t: TheoremArg) -> Theorem {
    match t {
        TheoremArg::Cycles => Theorem::Cycles,
        TheoremArg::Ap => Theorem::Ap,
        TheoremArg::Cliques => Theorem::Cliques,
    }
}

fn girth_value(g: Girth) -> Value {
    match g {
        Girth::Finite(v) => json!(v),
        Girth::Infinite => json!("inf"),
    }
}

fn quantity_text(q: &Quantity) -> String {
    match &q.exact {
        Some(r) if r.denom() == &1.into() => r.numer().to_string(),
        Some(r) => format!("{}/{}  (~{})", r.numer(), r.denom(), q.log),
        None => q.log.to_string(),
    }
}

pub fn params(a: &ParamsArgs) -> Result<Report, CmdError> {
    let input = ParamInput {
        theorem: theorem(a.theorem),
        k: a.k,
        r: a.r,
        g: a.g,
        size: a.size,
        precision: a.precision,
    };
    let ps = derive_params(input)?;
    let name = input.theorem.size_param_name();
    let mut rows: Vec<(String, String)> = vec![
        ("theorem".into(), input.theorem.name().into()),
        (format!("k, r, g, {name}"), format!("{}, {}, {}, {}", a.k, a.r, a.g, a.size)),
        ("eps".into(), quantity_text(&ps.eps)),
        ("D_tau".into(), quantity_text(&ps.d_tau)),
        ("K".into(), ps.k_const.to_string()),
        ("s = floor(K log2(1/eps))".into(), ps.s.to_string()),
        ("D_p".into(), quantity_text(&ps.d_p)),
        ("n".into(), quantity_text(&ps.n)),
        ("tau".into(), quantity_text(&ps.tau)),
        ("p".into(), quantity_text(&ps.p)),
    ];
    if let Some(t) = &ps.t {
        rows.push(("t".into(), quantity_text(t)));
    }
    rows.push(("size bound".into(), ps.size_bound.to_string()));
    for c in &ps.checks {
        let mark = if c.holds { "ok" } else { "FAILS" };
        rows.push((format!("check {}", c.name), format!("{mark}: {} {} {}", c.lhs, c.relation, c.rhs)));
    }
    let mut result = json!({ "params": ps });
    if a.container {
        let div = BigUint::from_str(&a.eps_divisor).map_err(|_| usage("--eps-divisor must be a positive integer"))?;
        let v = analytic_container_check(input, &div)?;
        rows.push((
            "container condition".into(),
            format!(
                "{} (lhs {}, margin {}, stable at {:?} bits)",
                if v.verdict.satisfied { "satisfied" } else { "not satisfied" },
                v.verdict.lhs,
                v.verdict.margin,
                v.precisions
            ),
        ));
        result["container"] = serde_json::to_value(&v).expect("serializable");
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut text: String = rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect();
    let failed: Vec<_> = ps.failed_checks().map(|c| c.name.clone()).collect();
    if !failed.is_empty() {
        text.push_str(&format!("warning: failed checks: {}\n", failed.join(", ")));
    }
    Ok(Report::new("constant chain of the construction and its side conditions", text, result))
}

pub fn sample(a: &SampleArgs) -> Result<Report, CmdError> {
    let seed = a.seed.unwrap_or_else(fresh_seed);
    let n = a.n;
    match a.kind {
        SampleKind::Graph => {
            let n = usize::try_from(n).map_err(|_| usage("n too large"))?;
            let (graph, tries) = match a.reject_girth {
                Some(k) => match rejection_sample_girth(n, a.p, k, seed, a.max_tries)? {
                    Rejection::Accepted { graph, tries } => (Some(graph), tries),
                    Rejection::Failure { tries } => (None, tries),
                },
                None => (Some(sample_gnp(n, a.p, seed)?), 1),
            };
            let Some(g) = graph else {
                let text = format!("no graph with girth >= {} in {tries} draws\n", a.reject_girth.unwrap_or(0));
                let result = json!({ "accepted": false, "tries": tries, "prng": PRNG_ID });
                return Ok(Report::new("rejection sampling of G(n,p) conditioned on girth", text, result)
                    .budget_limited(true)
                    .resolve("seed", seed));
            };
            if let Some(path) = &a.out {
                io::write_graph(&g, path)?;
            }
            let text = format!("vertices {}\nedges {}\ngirth {}\ndraws {tries}\n", g.n(), g.edge_count(), g.girth());
            let result = json!({
                "accepted": true,
                "vertices": g.n(),
                "edges": g.edge_count(),
                "girth": girth_value(g.girth()),
                "tries": tries,
                "prng": PRNG_ID,
            });
            Ok(Report::new("binomial random graph G(n,p)", text, result).resolve("seed", seed))
        }
        SampleKind::Subset => {
            if a.reject_girth.is_some() {
                return Err(usage("--reject-girth applies to graphs only"));
            }
            let set = sample_subset(n, a.p, seed)?;
            if let Some(path) = &a.out {
                let body: String = set.iter().map(|v| format!("{v}\n")).collect();
                io::write_text(path, &body)?;
            }
            let text = format!("size {}\n", set.len());
            let result = json!({ "size": set.len(), "elements": set, "prng": PRNG_ID });
            Ok(Report::new("binomial random subset [n]_p", text, result).resolve("seed", seed))
        }
    }
}

pub fn girth(a: &GirthArgs) -> Result<Report, CmdError> {
    if let Some(path) = &a.graph {
        let g = io::read_graph(path)?;
        let gi = g.girth();
        return Ok(Report::new("graph girth (shortest cycle)", format!("girth {gi}\n"), json!({ "girth": girth_value(gi) })));
    }
    let hg = io::read_hypergraph(a.hypergraph.as_ref().expect("clap enforces one input"))?;
    let g = a.g.ok_or_else(|| usage("--g is required for a hypergraph"))?;
    let v = sparsity_girth(&hg, g)?;
    let text = match &v.witness {
        None => format!("girth >= {g}: satisfied\n"),
        Some(w) => format!(
            "girth >= {g}: violated\nwitness edges {:?} span {} <= {} vertices\n",
            w,
            v.witness_span.unwrap_or(0),
            (hg.uniformity() - 1) * w.len()
        ),
    };
    Ok(Report::new("hypergraph girth: every h' < g edges span at least (k-1)h'+1 vertices", text, json!(v)))
}

pub fn cycles(a: &CyclesArgs) -> Result<Report, CmdError> {
    if let Some(path) = &a.graph {
        let g = io::read_graph(path)?;
        let counts: Vec<Value> = (3..a.g).map(|j| json!({ "j": j, "count": count_cycles(&g, j) })).collect();
        let text: String = (3..a.g).map(|j| format!("C_{j} {}\n", count_cycles(&g, j))).collect();
        return Ok(Report::new("cycle counts of a graph", text, json!({ "counts": counts })));
    }
    let hg = io::read_hypergraph(a.hypergraph.as_ref().expect("clap enforces one input"))?;
    let rep = enumerate_short_cycles(&hg, a.g)?;
    let mut text: String = rep.summary().iter().map(|(j, c)| format!("X_{j} {c}\n")).collect();
    if a.list {
        for c in &rep.cycles {
            text.push_str(&format!("{}-cycle {:?}\n", c.len, c.edges));
        }
    }
    let counts: Vec<Value> = rep.summary().iter().map(|(j, c)| json!({ "j": j, "count": c })).collect();
    let mut result = json!({ "g": a.g, "counts": counts });
    if a.list {
        result["cycles"] = json!(rep.cycles);
    }
    Ok(Report::new("short hypergraph cycles (2-cycles and j-cycles, j < g)", text, result))
}

fn outcome_exit(o: &ArrowOutcome) -> bool {
    matches!(o, ArrowOutcome::BudgetExceeded)
}

pub fn colour(a: &ColourArgs, g: &Global) -> Result<Report, CmdError> {
    let hg = io::read_hypergraph(&a.hypergraph)?;
    let s = colouring_search(&hg, a.r, &budget(g))?;
    let (text, limited) = match &s.outcome {
        ColouringOutcome::Proper { witness } => {
            if let Some(p) = &a.out {
                io::write_colouring(witness, p)?;
            }
            (format!("proper {}-colouring found\n", a.r), false)
        }
        ColouringOutcome::Uncolourable => (format!("no proper {}-colouring (exhaustive)\n", a.r), false),
        ColouringOutcome::BudgetExceeded => ("budget exceeded\n".to_string(), true),
    };
    let text = format!("{text}nodes {}\n", s.nodes);
    Ok(Report::new("proper colouring search on a hypergraph", text, json!(s)).budget_limited(limited))
}

fn arrow_text(o: &ArrowOutcome) -> &'static str {
    match o {
        ArrowOutcome::Arrows => "arrows",
        ArrowOutcome::NotArrows { .. } => "does not arrow (witness colouring found)",
        ArrowOutcome::BudgetExceeded => "budget exceeded",
    }
}

pub fn arrows_cmd(a: &ArrowsArgs, g: &Global) -> Result<Report, CmdError> {
    let kind = match a.kind {
        PatternArg::Cycle => CopyKind::Cycle,
        PatternArg::Clique => CopyKind::Clique,
        PatternArg::Ap => CopyKind::Ap,
    };
    let owned;
    let base = match (a.kind, &a.graph, a.complete, a.interval) {
        (PatternArg::Ap, None, None, Some(n)) => CopyBase::Interval(n),
        (PatternArg::Ap, ..) => return Err(usage("ap needs --interval N")),
        (_, Some(path), None, None) => {
            owned = io::read_graph(path)?;
            CopyBase::Graph(&owned)
        }
        (_, None, Some(n), None) => {
            owned = Graph::complete(n);
            CopyBase::Graph(&owned)
        }
        _ => return Err(usage("cycle and clique need exactly one of --graph or --complete")),
    };
    let o = arrows(base, kind, a.k, a.r, &budget(g))?;
    if let (ArrowOutcome::NotArrows { witness }, Some(p)) = (&o, &a.out) {
        io::write_colouring(witness, p)?;
    }
    let limited = outcome_exit(&o);
    Ok(Report::new("arrowing: every r-colouring has a monochromatic copy", format!("{}\n", arrow_text(&o)), json!(o))
        .budget_limited(limited))
}

fn sweep_text(label: &str, s: &Sweep) -> String {
    match s {
        Sweep::Exact { value, witnesses, nodes } => format!(
            "{label} = {value}\nwitnesses below: {:?}\nnodes {nodes}\n",
            witnesses.iter().map(|w| w.n).collect::<Vec<_>>()
        ),
        Sweep::LowerBoundOnly { lower_bound, nodes, .. } => {
            format!("{label} >= {lower_bound} (budget exceeded)\nnodes {nodes}\n")
        }
    }
}

pub fn ramsey(a: &RamseyArgs, g: &Global) -> Result<Report, CmdError> {
    let (kind, pat) = match a.kind {
        RamseyKindArg::Clique => (RamseyKind::Clique, "K"),
        RamseyKindArg::Cycle => (RamseyKind::Cycle, "C"),
    };
    let label = format!("R({pat}_{}; {})", a.k, a.r);
    if let Some(n) = a.n {
        let o = ramsey_decide(kind, a.k, a.r, n, &budget(g))?;
        let text = format!("K_{n} {}\n", arrow_text(&o));
        let limited = outcome_exit(&o);
        return Ok(Report::new("Ramsey arrowing of a complete graph", text, json!(o)).budget_limited(limited));
    }
    let s = ramsey_number(kind, a.k, a.r, &budget(g))?;
    let limited = s.value().is_none();
    Ok(Report::new("Ramsey number by upward sweep", sweep_text(&label, &s), json!(s)).budget_limited(limited))
}

pub fn vdw(a: &VdwArgs, g: &Global) -> Result<Report, CmdError> {
    if let Some(n) = a.big_n {
        let o = vdw_decide(n, a.k, a.r, &budget(g))?;
        let text = format!("[{n}] {}\n", arrow_text(&o));
        let limited = outcome_exit(&o);
        return Ok(Report::new("van der Waerden arrowing of an interval", text, json!(o)).budget_limited(limited));
    }
    let s = vdw_number(a.k, a.r, &budget(g))?;
    let limited = s.value().is_none();
    let label = format!("vdW({}, {})", a.k, a.r);
    Ok(Report::new("van der Waerden number by upward sweep", sweep_text(&label, &s), json!(s)).budget_limited(limited))
}

pub fn extremal(a: &ExtremalArgs, g: &Global) -> Result<Report, CmdError> {
    let e = extremal_ex(a.n, a.m, &budget(g))?;
    let rel = if e.is_exact() { "=" } else { ">=" };
    let text = format!(
        "ex({}; C_3..C_{}) {rel} {}\nwitness edges {:?}\n",
        a.n,
        a.m,
        e.max_edges(),
        e.witness().edges()
    );
    let limited = matches!(e, Extremal::LowerBoundOnly { .. });
    Ok(Report::new("extremal number for forbidden cycle lengths 3..m", text, json!(e)).budget_limited(limited))
}

pub fn fact_vdw(a: &FactVdwArgs, g: &Global) -> Result<Report, CmdError> {
    let anchor = "progression dichotomy for (r+1)-colourings of [n]";
    let bud = budget(g);
    if let Some(path) = &a.colouring {
        let c = io::read_colouring(path)?;
        let rep = fact_vdw_check(&c, a.k, a.r, a.w, a.trust_w, &bud)?;
        let text = format!(
            "branch {:?}\nmonochromatic AP_{} in colours 1..{}: {} (threshold {}/{}^3)\nlast colour class: {} (threshold {}/{})\n",
            rep.branch,
            a.k,
            a.r,
            rep.mono_count,
            rep.ap_count,
            a.w,
            rep.last_class,
            c.len(),
            4 * a.w
        );
        return Ok(Report::new(anchor, text, json!(rep)));
    }
    let trials = a.random.expect("clap enforces one input");
    let n = a.n.expect("clap enforces --n");
    let seed = a.seed.unwrap_or_else(fresh_seed);
    let mut w_verified = false;
    if !a.trust_w {
        match vdw_decide(a.w as usize, a.k, a.r, &bud)? {
            ArrowOutcome::Arrows => w_verified = true,
            ArrowOutcome::NotArrows { .. } => {
                return Err(usage(format!("[{}] does not arrow AP_{} with {} colours", a.w, a.k, a.r)))
            }
            ArrowOutcome::BudgetExceeded => {
                let text = "could not verify W within the budget\n".to_string();
                return Ok(Report::new(anchor, text, json!({ "w_verified": false })).budget_limited(true));
            }
        }
    }
    let outcomes: Vec<Result<FactBranch, CoreError>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let c = random_colouring(n, a.r + 1, seed.wrapping_add(i))?;
            fact_vdw_check(&c, a.k, a.r, a.w, true, &bud).map(|r| r.branch)
        })
        .collect();
    let mut tally: BTreeMap<&str, u64> = [("first", 0), ("second", 0), ("both", 0), ("violation", 0), ("refused", 0)]
        .into_iter()
        .collect();
    let mut first_violation = None;
    for (i, o) in outcomes.iter().enumerate() {
        let key = match o {
            Ok(FactBranch::First) => "first",
            Ok(FactBranch::Second) => "second",
            Ok(FactBranch::Both) => "both",
            Err(CoreError::FactViolation(msg)) => {
                first_violation.get_or_insert((i, msg.clone()));
                "violation"
            }
            Err(CoreError::InvalidParameter(_)) => "refused",
            Err(e) => return Err(e.clone().into()),
        };
        *tally.get_mut(key).expect("known key") += 1;
    }
    let mut text: String = tally.iter().map(|(k, v)| format!("{k} {v}\n")).collect();
    if let Some((i, msg)) = &first_violation {
        text.push_str(&format!("first violation at colouring {i}: {msg}\n"));
    }
    let result = json!({
        "colourings": trials,
        "tally": tally,
        "w_verified": w_verified,
        "prng": PRNG_ID,
    });
    let mut rep = Report::new(anchor, text, result).resolve("seed", seed);
    if tally["violation"] > 0 || tally["refused"] > 0 {
        rep.exit = EXIT_INPUT;
    }
    Ok(rep)
}

pub fn fact7(a: &Fact7Args, g: &Global) -> Result<Report, CmdError> {
    if a.k < 2 {
        return Err(usage("k must be at least 2"));
    }
    let bud = budget(g);
    let mut limited = false;
    let mut ex = |given: Option<u64>, m: u64| -> Result<u64, CmdError> {
        if let Some(v) = given {
            return Ok(v);
        }
        let n = usize::try_from(a.n).map_err(|_| usage("n too large"))?;
        let e = extremal_ex(n, m as usize, &bud)?;
        limited |= !e.is_exact();
        Ok(e.max_edges() as u64)
    };
    let low = ex(a.ex_low, 2 * a.k - 1)?;
    let high = ex(a.ex_high, 2 * a.k)?;
    if limited {
        let text = "extremal search exceeded the budget; premise not evaluated\n".to_string();
        return Ok(Report::new("extremal premise for f_r(2k)", text, json!({ "ex_low": low, "ex_high": high }))
            .budget_limited(true));
    }
    let f = fact7_premise(a.n, a.r, low, high);
    let text = match f.implied_bound {
        Some(b) => format!("{low} > {} * {high}: holds\nf_{}({}) <= {b}\n", a.r, a.r, 2 * a.k),
        None => format!("{low} > {} * {high}: does not hold\n", a.r),
    };
    Ok(Report::new(
        "extremal premise ex(n; C_3..C_{2k-1}) > r ex(n; C_3..C_{2k}) for f_r(2k) <= n",
        text,
        json!({ "ex_low": low, "ex_high": high, "premise": f }),
    ))
}

pub fn fbounds(a: &FboundsArgs, g: &Global) -> Result<Report, CmdError> {
    let mut searched = None;
    let ramsey = if a.search_ramsey {
        let k = usize::try_from(a.k).map_err(|_| usage("k too large"))?;
        let r = u32::try_from(a.r).map_err(|_| usage("r too large"))?;
        let s = ramsey_number(RamseyKind::Cycle, k, r, &budget(g))?;
        let v = s.value();
        searched = Some(s);
        v
    } else {
        a.ramsey
    };
    let rep = f_bound_report(a.k, a.r, ramsey, a.precision)?;
    let mut text = format!("f_{}({}) >= {}\n", a.r, a.k, rep.lower_bound);
    match &rep.upper_bound {
        Some(u) => text.push_str(&format!("f_{}({}) <= {u}  (with R(C_{}; {}) = {})\n", a.r, a.k, a.k, a.r, ramsey.unwrap_or(0))),
        None => text.push_str("upper bound needs R(C_k; r)\n"),
    }
    text.push_str(&format!("{}\n", rep.ramsey_bounds));
    if let Some(o) = &rep.special_order {
        text.push_str(&format!("f_r({}) = {o} (asymptotic, constant unspecified)\n", a.k));
    }
    let limited = searched.as_ref().is_some_and(|s| s.value().is_none());
    let mut result = json!({ "report": rep });
    if let Some(s) = searched {
        result["ramsey_search"] = json!(s);
    }
    Ok(Report::new("lower and upper bounds on f_r(k)", text, result).budget_limited(limited))
}

/// Lines of a `trials` run: config record, one record per trial, summary.
pub fn trials_jsonl(cfg: &TrialConfig, timings: bool) -> Vec<String> {
    let run = |i: u64| -> (TrialRecord, f64) {
        let t0 = Instant::now();
        let rec = run_trial(cfg, i);
        (rec, t0.elapsed().as_secs_f64() * 1e3)
    };
    let results: Vec<(TrialRecord, f64)> = (0..cfg.trials).into_par_iter().map(run).collect();
    let records: Vec<TrialRecord> = results.iter().map(|(r, _)| r.clone()).collect();
    let summary = summarize(&records);
    let mut lines = Vec::with_capacity(records.len() + 2);
    lines.push(
        json!({
            "v": "v1",
            "type": "config",
            "tool": "girthram",
            "version": girthram_core::VERSION,
            "prng": PRNG_ID,
            "config": cfg,
            "effective_cap": cfg.effective_cap(),
        })
        .to_string(),
    );
    for (rec, ms) in &results {
        let mut v = json!({ "v": "v1", "type": "trial" });
        if let (Value::Object(dst), Value::Object(src)) = (&mut v, json!(rec)) {
            dst.extend(src);
        }
        if timings {
            v["wall_ms"] = json!(ms);
        }
        lines.push(v.to_string());
    }
    let mut s = json!({ "v": "v1", "type": "summary" });
    if let (Value::Object(dst), Value::Object(src)) = (&mut s, json!(summary)) {
        dst.extend(src);
    }
    lines.push(s.to_string());
    lines
}

pub fn trial_config(a: &TrialsArgs, g: &Global) -> Result<TrialConfig, CmdError> {
    let th = theorem(a.theorem);
    if a.k < 3 || (th == Theorem::Cycles && a.k < 4) {
        return Err(usage("k too small for this theorem"));
    }
    let p = match a.p {
        Some(p) => p,
        None => scaled_p(th, a.n, a.k, a.scale.unwrap_or(0.5)),
    };
    let cfg = TrialConfig {
        theorem: th,
        n: a.n,
        p,
        k: a.k,
        g: a.g,
        r: a.r,
        seed: a.seed.unwrap_or_else(fresh_seed),
        trials: a.trials,
        node_budget: (g.budget_nodes != 0).then_some(g.budget_nodes),
        cap: a.cap,
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn verify(a: &VerifyArgs) -> Result<Report, CmdError> {
    if let Some(hp) = &a.hypergraph {
        let hg = io::read_hypergraph(hp)?;
        let c = io::read_colouring(a.colouring.as_ref().expect("clap enforces --colouring"))?;
        let ok = verify_colouring(&hg, &c)?;
        let text = format!("proper {ok}\n");
        return Ok(Report::new("no monochromatic hyperedge", text, json!({ "proper": ok })));
    }
    let g = io::read_graph(a.graph.as_ref().expect("clap enforces one input"))?;
    let k = a.girth.expect("clap enforces --girth");
    let gi = g.girth();
    let ok = gi.at_least(k);
    let text = format!("girth {gi} >= {k}: {ok}\n");
    Ok(Report::new("graph girth at least k", text, json!({ "girth": girth_value(gi), "holds": ok })))
}
