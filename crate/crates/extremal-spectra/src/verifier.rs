//! Brute-force verdicts for the extremal claims: exhaustive scans over
//! connectivity classes, cut-pattern comparisons, sign-partition edge
//! perturbations, and the audit table.
//!
//! Every report states its interpretation explicitly. A minimizer claim
//! can never hold strictly for the minimizer itself, so the property
//! checked is always: the minimum is attained exactly at the named
//! construction, and every non-isomorphic graph in the class sits
//! strictly above it. `Confirmed` therefore requires three things at
//! once: the scan minimum matches the predicted value within 1e-9,
//! every witness is isomorphic to the predicted graph, and the best
//! value among the remaining graphs clears the minimum by more than
//! 1e-9. Anything attained but shared lands on `TieWithinTolerance`,
//! and a scan that contradicts the predicted value or witness set lands
//! on `Refuted`. Scans over empty classes are `Vacuous`, and parameter
//! choices for which the construction itself is undefined are reported
//! as `NoPrediction` with the scan results still attached.

use serde::Serialize;

use crate::connectivity::{all_minimum_cuts, cut_profile};
use crate::constructions::{
    build_b_on_profile, build_bb, build_cal_b, BParams, BbParams, BbVariant,
    build_b, validate_membership,
};
use crate::enumeration::{
    canonical_graph, scan_class_min, ClassFilter, DiameterRule, MAX_ENUM_N,
};
use crate::error::{Error, Result};
use crate::graph::{iter_bits, Graph};
use crate::quotient::{f_poly, g_poly, h_b, h_bb, sigma_formula_b, sigma_formula_bb, theta, Quartic};
use crate::spectra::{
    complement_rayleigh_gap, graph_spectrum, least_eigenvalue, rayleigh_quotient,
    spectral_radius, transmission_bound_audit, AuditRecord,
};

/// Outcome of comparing an exhaustive scan against a predicted
/// extremal construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Unique minimizer class, matching value, strict runner-up.
    Confirmed,
    /// Minimum matches but other isomorphism classes attain it too.
    TieWithinTolerance,
    /// The scan contradicts the predicted value or witness set.
    Refuted,
    /// The scanned class is empty.
    Vacuous,
    /// The construction is undefined at these parameters; scan attached.
    NoPrediction,
}

/// Scan-versus-prediction report for one (n, kappa) instance.
///
/// Witness strings are graph6 encodings of canonically relabeled
/// graphs, one per isomorphism class, so string equality is isomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub claim: String,
    pub n: usize,
    pub kappa: usize,
    /// Labeled graphs scanned in the class.
    pub class_size: u64,
    /// Exact scan minimum; absent when the class is empty.
    pub min_value: Option<f64>,
    /// Labeled graphs attaining the minimum within 1e-9.
    pub witness_count: u64,
    /// Canonical graph6 of each attaining isomorphism class.
    pub witnesses: Vec<String>,
    /// Best value strictly above the minimum plus 1e-9, if any.
    pub runner_up: Option<f64>,
    pub predicted_value: Option<f64>,
    /// Canonical graph6 of the predicted extremal graph.
    pub predicted_witness: Option<String>,
    /// Exact coefficients behind the predicted value.
    pub predicted_quartic: Option<Quartic>,
    pub verdict: Verdict,
    /// Masks examined by the scan; deterministic, unlike wall time.
    pub work_units: u64,
    pub audit_notes: Vec<String>,
}

fn dedup_canonical(witnesses: &[Graph]) -> Result<Vec<String>> {
    let mut reps = Vec::new();
    for w in witnesses {
        let s = crate::graph6::encode(&canonical_graph(w)?);
        if !reps.contains(&s) {
            reps.push(s);
        }
    }
    Ok(reps)
}

fn minimizer_verdict(
    min_value: f64,
    predicted_value: f64,
    witness_classes: &[String],
    predicted_canonical: &str,
) -> Verdict {
    if (min_value - predicted_value).abs() > 1e-9 {
        return Verdict::Refuted;
    }
    let predicted_in = witness_classes.iter().any(|w| w == predicted_canonical);
    if !predicted_in {
        return Verdict::Refuted;
    }
    if witness_classes.len() == 1 {
        Verdict::Confirmed
    } else {
        Verdict::TieWithinTolerance
    }
}

const INTERPRETATION: &str = "interpretation: minimum attained exactly at the named \
construction; every non-isomorphic graph in the class must sit strictly above it";

/// Spectral-radius floor on the diameter-2 class: every connected graph
/// on n vertices with connectivity kappa and diameter exactly 2 has
/// spectral radius of the complement at least sqrt(n - kappa - 1), with
/// equality exactly when the complement is a star plus kappa isolated
/// vertices (the calB construction).
pub fn verify_theorem_3_1(n: usize, kappa: usize) -> Result<ExtremalReport> {
    let filter = ClassFilter::new(n, kappa).with_diameter(DiameterRule::ExactlyTwo);
    let scan = scan_class_min(&filter, |g| spectral_radius(&g.complement()))?;
    let bound = ((n - kappa) as f64 - 1.0).sqrt();
    let mut notes = vec![INTERPRETATION.to_string()];

    if scan.class_size == 0 {
        notes.push("class is empty; the bound holds vacuously".into());
        return Ok(ExtremalReport {
            claim: "3.1".into(),
            n,
            kappa,
            class_size: 0,
            min_value: None,
            witness_count: 0,
            witnesses: Vec::new(),
            runner_up: None,
            predicted_value: Some(bound),
            predicted_witness: None,
            predicted_quartic: None,
            verdict: Verdict::Vacuous,
            work_units: scan.masks_examined,
            audit_notes: notes,
        });
    }

    let predicted = build_cal_b(1, n - kappa - 1, kappa)?;
    let predicted_canonical = crate::graph6::encode(&canonical_graph(&predicted)?);
    let witness_classes = dedup_canonical(&scan.witnesses)?;
    let verdict = if scan.min_value < bound - 1e-9 {
        notes.push(format!(
            "bound violated: scan minimum {} sits below sqrt(n-kappa-1) = {}",
            scan.min_value, bound
        ));
        Verdict::Refuted
    } else {
        let v = minimizer_verdict(scan.min_value, bound, &witness_classes, &predicted_canonical);
        notes.push(format!(
            "bound {} attained by {} labeled graphs in {} isomorphism classes",
            bound,
            scan.witnesses.len(),
            witness_classes.len()
        ));
        v
    };
    Ok(ExtremalReport {
        claim: "3.1".into(),
        n,
        kappa,
        class_size: scan.class_size,
        min_value: Some(scan.min_value),
        witness_count: scan.witnesses.len() as u64,
        witnesses: witness_classes,
        runner_up: scan.runner_up,
        predicted_value: Some(bound),
        predicted_witness: Some(predicted_canonical),
        predicted_quartic: None,
        verdict,
        work_units: scan.masks_examined,
        audit_notes: notes,
    })
}

/// Spectral-radius minimizer on the diameter >= 3 class: the minimum of
/// the complement spectral radius over connected graphs with
/// connectivity kappa and diameter at least 3 is attained exactly at
/// B(1, n-kappa-1, kappa), whose value is the largest root of the f
/// quartic. Defined when n >= 2*kappa + 2; outside that range the scan
/// still runs and the report says why no construction is predicted.
pub fn verify_theorem_3_4(n: usize, kappa: usize) -> Result<ExtremalReport> {
    let filter = ClassFilter::new(n, kappa).with_diameter(DiameterRule::AtLeastThree);
    let scan = scan_class_min(&filter, |g| spectral_radius(&g.complement()))?;
    let mut notes = vec![INTERPRETATION.to_string()];

    let t = n.saturating_sub(kappa + 1);
    let params = if t >= 2 {
        BParams::new(1, t, kappa)
    } else {
        Err(Error::InvalidParams(
            "t >= 2 required for family B".into(),
        ))
    };

    let unrestricted = scan_class_min(&ClassFilter::new(n, kappa), |g| {
        spectral_radius(&g.complement())
    })?;
    if unrestricted.class_size > 0 {
        notes.push(format!(
            "unrestricted minimum over the whole connectivity class (any diameter) is {}",
            unrestricted.min_value
        ));
    }

    let witness_classes = dedup_canonical(&scan.witnesses)?;
    let (predicted_value, predicted_witness, predicted_quartic, verdict) = match params {
        Err(e) => {
            notes.push(format!(
                "no predicted construction at n={}, kappa={}: {}",
                n, kappa, e
            ));
            let verdict = if scan.class_size == 0 {
                Verdict::Vacuous
            } else {
                Verdict::NoPrediction
            };
            (None, None, None, verdict)
        }
        Ok(p) => {
            let q = f_poly(p.s, p.t, p.kappa);
            let value = q.extreme_roots()?.0;
            let graph = build_b(&p);
            debug_assert!(validate_membership(&graph, n, kappa));
            let canonical = crate::graph6::encode(&canonical_graph(&graph)?);
            let verdict = if scan.class_size == 0 {
                notes.push("class is empty".into());
                Verdict::Vacuous
            } else {
                minimizer_verdict(scan.min_value, value, &witness_classes, &canonical)
            };
            (Some(value), Some(canonical), Some(q), verdict)
        }
    };

    Ok(ExtremalReport {
        claim: "3.4".into(),
        n,
        kappa,
        class_size: scan.class_size,
        min_value: (scan.class_size > 0).then_some(scan.min_value),
        witness_count: scan.witnesses.len() as u64,
        witnesses: witness_classes,
        runner_up: scan.runner_up,
        predicted_value,
        predicted_witness,
        predicted_quartic,
        verdict,
        work_units: scan.masks_examined + unrestricted.masks_examined,
        audit_notes: notes,
    })
}

/// Least-eigenvalue minimizer over the whole connectivity class: the
/// minimum of the complement least eigenvalue is attained exactly at
/// BB(ceil(n/2), floor(n/2); kappa), with value the least root of the g
/// quartic under the join geometry. Both connection geometries are
/// measured and the report records which one the scan minimum matches;
/// the verdict is asserted against the join geometry, which is what the
/// g quartic describes.
pub fn verify_theorem_4_3(n: usize, kappa: usize) -> Result<ExtremalReport> {
    let filter = ClassFilter::new(n, kappa);
    let scan = scan_class_min(&filter, |g| least_eigenvalue(&g.complement()))?;
    let mut notes = vec![INTERPRETATION.to_string()];

    let n1 = n.div_ceil(2);
    let n2 = n / 2;
    let join = BbParams::new(n1, n2, kappa, BbVariant::Join);

    if scan.class_size == 0 {
        notes.push("class is empty".into());
        return Ok(ExtremalReport {
            claim: "4.3".into(),
            n,
            kappa,
            class_size: 0,
            min_value: None,
            witness_count: 0,
            witnesses: Vec::new(),
            runner_up: None,
            predicted_value: None,
            predicted_witness: None,
            predicted_quartic: None,
            verdict: Verdict::Vacuous,
            work_units: scan.masks_examined,
            audit_notes: notes,
        });
    }

    let witness_classes = dedup_canonical(&scan.witnesses)?;
    let (predicted_value, predicted_witness, predicted_quartic, verdict) = match join {
        Err(e) => {
            notes.push(format!(
                "no predicted construction at n={}, kappa={}: {}",
                n, kappa, e
            ));
            (None, None, None, Verdict::NoPrediction)
        }
        Ok(p) => {
            let q = g_poly(n1, n2, kappa);
            let value = q.extreme_roots()?.1;
            let join_graph = build_bb(&p);
            debug_assert!(validate_membership(&join_graph, n, kappa));
            let join_measured = least_eigenvalue(&join_graph.complement());
            let canonical = crate::graph6::encode(&canonical_graph(&join_graph)?);

            let matching =
                BbParams::new(n1, n2, kappa, BbVariant::Matching).map(|mp| build_bb(&mp));
            match matching {
                Ok(mg) => {
                    let mv = least_eigenvalue(&mg.complement());
                    let mc = crate::graph6::encode(&canonical_graph(&mg)?);
                    notes.push(format!(
                        "geometry comparison: join gives {}, matching gives {}",
                        join_measured, mv
                    ));
                    if kappa == 1 {
                        notes.push("the two geometries coincide at kappa = 1".into());
                    }
                    if (scan.min_value - mv).abs() <= 1e-9
                        && witness_classes.iter().any(|w| *w == mc)
                        && (mv - join_measured).abs() > 1e-9
                    {
                        notes.push(
                            "scan minimum is attained by the matching geometry, below the \
                             join geometry the quartic describes"
                                .into(),
                        );
                    }
                }
                Err(e) => notes.push(format!("matching geometry undefined: {}", e)),
            }

            let verdict =
                minimizer_verdict(scan.min_value, value, &witness_classes, &canonical);
            (Some(value), Some(canonical), Some(q), verdict)
        }
    };

    Ok(ExtremalReport {
        claim: "4.3".into(),
        n,
        kappa,
        class_size: scan.class_size,
        min_value: Some(scan.min_value),
        witness_count: scan.witnesses.len() as u64,
        witnesses: witness_classes,
        runner_up: scan.runner_up,
        predicted_value,
        predicted_witness,
        predicted_quartic,
        verdict,
        work_units: scan.masks_examined,
        audit_notes: notes,
    })
}

/// One cut-pattern comparison: the graph against the B-shaped pattern
/// laid over a disconnecting cut with an insulated vertex.
#[derive(Debug, Clone, Serialize)]
pub struct CutComparison {
    pub s: usize,
    pub t: usize,
    pub kappa: usize,
    /// Largest root of the f quartic for the pattern's parameters.
    pub pattern_value: f64,
    /// Rayleigh quotient of the lifted quotient eigenvector on the
    /// pattern complement; matches pattern_value to rounding.
    pub pattern_rayleigh: f64,
    /// Spectral radius of the graph complement.
    pub graph_value: f64,
    /// Quadratic-form surplus of the graph complement over the pattern
    /// complement at the lifted vector; nonnegative because the graph
    /// is a subgraph of the pattern and the vector is positive.
    pub gap: f64,
    pub holds: bool,
}

/// Compares a graph against the B pattern over one disconnecting cut.
/// Fails when the cut does not disconnect, when no vertex outside the
/// chosen component is insulated from the cut, or when the far side has
/// fewer than two vertices.
pub fn compare_cut(g: &Graph, cut: u64) -> Result<CutComparison> {
    let profile = cut_profile(g, cut)?;
    let (s, t, kappa) = (profile.s, profile.t, profile.kappa());
    let pattern = build_b_on_profile(g.n(), &profile)?;
    let v = profile.v.expect("pattern construction requires v");

    let quartic = f_poly(s, t, kappa);
    let pattern_value = quartic.extreme_roots()?.0;

    // Lifted quotient eigenvector: constant on each of the four classes,
    // with the closed-form values that solve the quotient eigen-equation
    // at the largest root.
    let lam = pattern_value;
    let x4 = (lam * lam - (s as f64) * (t as f64 - 1.0)) / lam;
    let class_values = [1.0, s as f64 / lam, x4 / lam, x4];
    let mut x = vec![0.0; g.n()];
    for u in iter_bits(profile.s_side()) {
        x[u] = class_values[0];
    }
    for u in iter_bits(profile.t_side()) {
        x[u] = class_values[1];
    }
    for u in iter_bits(profile.cut) {
        x[u] = class_values[2];
    }
    x[v] = class_values[3];
    let norm2: f64 = x.iter().map(|v| v * v).sum();

    let pattern_c = pattern.complement();
    let pattern_rayleigh = rayleigh_quotient(&pattern_c, &x)? / norm2;
    let gap = complement_rayleigh_gap(g, &pattern, &x)? / norm2;
    let graph_value = spectral_radius(&g.complement());

    let holds = graph_value >= pattern_value - 1e-9
        && gap >= -1e-9
        && (pattern_rayleigh - pattern_value).abs() <= 1e-8;
    Ok(CutComparison {
        s,
        t,
        kappa,
        pattern_value,
        pattern_rayleigh,
        graph_value,
        gap,
        holds,
    })
}

/// Aggregate cut-pattern comparison over a whole connectivity class.
#[derive(Debug, Clone, Serialize)]
pub struct CutLemmaReport {
    pub n: usize,
    pub kappa: usize,
    pub class_size: u64,
    /// Graphs with at least one minimum cut admitting the pattern.
    pub graphs_with_admitting_cut: u64,
    /// Census of graphs where no minimum cut admits the pattern: every
    /// minimum cut either leaves fewer than two vertices beyond the
    /// chosen side or insulates no vertex from the cut.
    pub graphs_without_admitting_cut: u64,
    /// Canonical graph6 of up to eight census classes.
    pub census_examples: Vec<String>,
    pub comparisons: u64,
    /// Canonical graph6 of graphs with a failing comparison.
    pub violations: Vec<String>,
    pub holds: bool,
    pub work_units: u64,
}

/// Runs the cut-pattern comparison on every minimum cut of every graph
/// in the connectivity class: the complement spectral radius must reach
/// at least the largest f root of each admitted cut pattern.
pub fn verify_lemma_3_2(n: usize, kappa: usize) -> Result<CutLemmaReport> {
    if n > 7 {
        return Err(Error::EnumerationTooLarge { n, max: 7 });
    }
    let filter = ClassFilter::new(n, kappa);
    let per_graph = crate::enumeration::par_map_class(&filter, |g| {
        let mut admitted = 0u64;
        let mut failed = false;
        for cut in all_minimum_cuts(g) {
            let profile = match cut_profile(g, cut) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if profile.v.is_none() || profile.t < 2 {
                continue;
            }
            admitted += 1;
            match compare_cut(g, cut) {
                Ok(c) if c.holds => {}
                _ => failed = true,
            }
        }
        (admitted, failed, if admitted == 0 { Some(g.clone()) } else { None },
         if failed { Some(g.clone()) } else { None })
    })?;

    let class_size = per_graph.len() as u64;
    let mut with_cut = 0u64;
    let mut without_cut = 0u64;
    let mut comparisons = 0u64;
    let mut census = Vec::new();
    let mut violations = Vec::new();
    for (admitted, _failed, census_g, violation_g) in &per_graph {
        comparisons += admitted;
        if *admitted > 0 {
            with_cut += 1;
        } else {
            without_cut += 1;
        }
        if let Some(g) = census_g {
            let s = crate::graph6::encode(&canonical_graph(g)?);
            if !census.contains(&s) && census.len() < 8 {
                census.push(s);
            }
        }
        if let Some(g) = violation_g {
            let s = crate::graph6::encode(&canonical_graph(g)?);
            if !violations.contains(&s) {
                violations.push(s);
            }
        }
    }
    Ok(CutLemmaReport {
        n,
        kappa,
        class_size,
        graphs_with_admitting_cut: with_cut,
        graphs_without_admitting_cut: without_cut,
        census_examples: census,
        comparisons,
        violations: violations.clone(),
        holds: violations.is_empty(),
        work_units: 1u64 << crate::enumeration::pair_count(n),
    })
}

/// Sign classes of a vector: plus holds the indices with nonnegative
/// entries, minus the strictly negative ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignPartition {
    pub plus: u64,
    pub minus: u64,
}

impl SignPartition {
    pub fn from_vector(x: &[f64]) -> Self {
        let mut plus = 0u64;
        let mut minus = 0u64;
        for (i, &v) in x.iter().enumerate() {
            if v >= 0.0 {
                plus |= 1 << i;
            } else {
                minus |= 1 << i;
            }
        }
        SignPartition { plus, minus }
    }

    /// Subgraph induced on the nonnegative side, when nonempty.
    pub fn plus_view(&self, g: &Graph) -> Option<Graph> {
        (self.plus != 0).then(|| g.induced_subgraph(self.plus))
    }

    /// Subgraph induced on the negative side, when nonempty.
    pub fn minus_view(&self, g: &Graph) -> Option<Graph> {
        (self.minus != 0).then(|| g.induced_subgraph(self.minus))
    }
}

/// Which single-edge move to test against the least eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PerturbationKind {
    /// Add a missing edge between two vertices on the same sign side.
    AddWithinSign,
    /// Delete an edge crossing the sign sides, keeping connectivity.
    DeleteCrossSign,
}

/// One tested edge move.
#[derive(Debug, Clone, Serialize)]
pub struct PerturbationCase {
    pub u: usize,
    pub v: usize,
    /// Product of the least-eigenvector entries at u and v.
    pub product: f64,
    /// Least complement eigenvalue after the move.
    pub new_value: f64,
    /// Whether the move kept the least eigenvalue from rising.
    pub holds: bool,
}

/// Outcome of testing every eligible single-edge move on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct PerturbationOutcome {
    pub kind: PerturbationKind,
    /// Least complement eigenvalue before any move.
    pub base_value: f64,
    pub partition: SignPartition,
    pub cases: Vec<PerturbationCase>,
    /// True when no eligible move exists.
    pub vacuous: bool,
    /// True when every tested move held.
    pub holds: bool,
}

/// Tests that single-edge moves aligned with the sign partition of the
/// least complement eigenvector never raise the least complement
/// eigenvalue: adding a same-sign edge to the graph removes a
/// same-sign complement edge, and deleting a cross-sign edge adds a
/// cross-sign complement edge; both push the Rayleigh quotient at the
/// old eigenvector down. Tolerance 1e-12 on each comparison.
pub fn perturbation_check(g: &Graph, kind: PerturbationKind) -> Result<PerturbationOutcome> {
    let c = g.complement();
    let spectrum = graph_spectrum(&c, true);
    let base = spectrum.lambda_n();
    let vectors = spectrum.vectors.as_ref().expect("vectors requested");
    let x = &vectors[c.n() - 1];
    let partition = SignPartition::from_vector(x);

    let mut cases = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let product = x[u] * x[v];
            match kind {
                PerturbationKind::AddWithinSign => {
                    if g.has_edge(u, v) || product <= 0.0 {
                        continue;
                    }
                    let modified = g.with_edge(u, v);
                    let new_value = least_eigenvalue(&modified.complement());
                    cases.push(PerturbationCase {
                        u,
                        v,
                        product,
                        new_value,
                        holds: new_value < base + 1e-12,
                    });
                }
                PerturbationKind::DeleteCrossSign => {
                    if !g.has_edge(u, v) || product >= 0.0 {
                        continue;
                    }
                    let modified = g.with_edge_removed(u, v);
                    if !modified.is_connected() {
                        continue;
                    }
                    let new_value = least_eigenvalue(&modified.complement());
                    cases.push(PerturbationCase {
                        u,
                        v,
                        product,
                        new_value,
                        holds: new_value < base + 1e-12,
                    });
                }
            }
        }
    }
    let vacuous = cases.is_empty();
    let holds = cases.iter().all(|c| c.holds);
    Ok(PerturbationOutcome {
        kind,
        base_value: base,
        partition,
        cases,
        vacuous,
        holds,
    })
}

fn record_gt(claim: &str, instance: &str, lhs: f64, rhs: f64) -> AuditRecord {
    let mut r = AuditRecord::check_ge(claim, instance, lhs, rhs);
    r.holds = lhs > rhs + 1e-9;
    r
}

/// Evaluates the side inequalities the proofs lean on and reports where
/// each one holds and where it fails. Nothing here asserts; callers get
/// the honest table either way.
pub fn audit_suite(max_n: usize) -> Result<Vec<AuditRecord>> {
    let max_n = max_n.max(6).min(30);
    let mut records = Vec::new();

    // Transmission bound on paths: fails already at P3.
    for n in [3usize, 4, 5, 6] {
        let p = crate::graph::path_graph(n)?;
        records.push(transmission_bound_audit(&p)?);
    }
    // Complete graphs meet it with equality.
    records.push(transmission_bound_audit(&crate::graph::complete_graph(5)?)?);
    // Family complements, small sample.
    for (s, t, k) in [(1, 2, 1), (1, 4, 2), (2, 3, 2)] {
        let c = build_b(&BParams::new(s, t, k)?).complement();
        records.push(transmission_bound_audit(&c)?);
    }
    for (n1, n2, k) in [(3, 3, 1), (4, 3, 2)] {
        let c = build_bb(&BbParams::new(n1, n2, k, BbVariant::Join)?).complement();
        records.push(transmission_bound_audit(&c)?);
    }

    // h quantities stay positive across the sweep.
    let mut min_hb = f64::INFINITY;
    let mut arg_hb = String::new();
    let mut sigma_b_mismatches = 0u64;
    for s in 1..=max_n {
        for t in 2..=max_n {
            for k in 1..=max_n {
                if s + t + k > max_n || BParams::new(s, t, k).is_err() {
                    continue;
                }
                let h = h_b(s, t, k);
                if h < min_hb {
                    min_hb = h;
                    arg_hb = format!("(s,t,kappa)=({},{},{})", s, t, k);
                }
                if s + t + k <= 10 {
                    let c = build_b(&BParams::new(s, t, k)?).complement();
                    if c.transmission()? != sigma_formula_b(s, t, k) {
                        sigma_b_mismatches += 1;
                    }
                }
            }
        }
    }
    records.push(record_gt(
        "2*sigma(B complement) > n*sqrt(kappa)",
        &format!("minimum over s+t+kappa <= {} at {}", max_n, arg_hb),
        min_hb,
        0.0,
    ));
    records.push(AuditRecord::check_ge(
        "closed-form sigma matches BFS transmission on B complements",
        &format!("{} mismatches over n <= 10", sigma_b_mismatches),
        -(sigma_b_mismatches as f64),
        0.0,
    ));

    let mut min_hbb = f64::INFINITY;
    let mut arg_hbb = String::new();
    for n1 in 1..=max_n {
        for n2 in 1..=n1 {
            for k in 1..=n2 {
                if n1 + n2 > max_n || BbParams::new(n1, n2, k, BbVariant::Join).is_err() {
                    continue;
                }
                let h = h_bb(n1, n2, k);
                if h < min_hbb {
                    min_hbb = h;
                    arg_hbb = format!("(n1,n2,kappa)=({},{},{})", n1, n2, k);
                }
            }
        }
    }
    records.push(record_gt(
        "2*sigma(BB complement) > n*kappa",
        &format!("minimum over n1+n2 <= {} at {}", max_n, arg_hbb),
        min_hbb,
        0.0,
    ));

    // Largest f root clears theta wherever theta is defined with s <= t.
    let mut min_f_margin = f64::INFINITY;
    let mut arg_f = String::new();
    let mut min_anchor = f64::INFINITY;
    for s in 1..=max_n {
        for t in 2..=max_n {
            for k in 1..=max_n {
                if s + t + k > max_n.max(20) || BParams::new(s, t, k).is_err() {
                    continue;
                }
                let root = f_poly(s, t, k).extreme_roots()?.0;
                if let Ok(th) = theta(s, t, k) {
                    let margin = root - th;
                    if margin < min_f_margin {
                        min_f_margin = margin;
                        arg_f = format!("(s,t,kappa)=({},{},{})", s, t, k);
                    }
                }
                let anchor = ((k + s * t) as f64 / 2.0).sqrt();
                min_anchor = min_anchor.min(root - anchor);
            }
        }
    }
    records.push(record_gt(
        "max_root(f) > theta",
        &format!(
            "minimum margin over s+t+kappa <= {}, s <= t, at {}",
            max_n.max(20),
            arg_f
        ),
        min_f_margin,
        0.0,
    ));
    records.push(record_gt(
        "max_root(f) > sqrt((kappa + s*t)/2)",
        &format!("minimum margin over s+t+kappa <= {}", max_n.max(20)),
        min_anchor,
        0.0,
    ));

    // Largest g root against kappa: claimed everywhere, true only for
    // n > 3*kappa. Both rows are reported.
    let mut min_g_margin = f64::INFINITY;
    let mut arg_g = String::new();
    let mut min_g_margin_large = f64::INFINITY;
    let mut arg_g_large = String::new();
    for n1 in 1..=max_n {
        for n2 in 1..=n1 {
            for k in 1..=n2 {
                if n1 + n2 > max_n.max(20)
                    || BbParams::new(n1, n2, k, BbVariant::Join).is_err()
                {
                    continue;
                }
                let root = g_poly(n1, n2, k).extreme_roots()?.0;
                let margin = root - k as f64;
                if margin < min_g_margin {
                    min_g_margin = margin;
                    arg_g = format!("(n1,n2,kappa)=({},{},{})", n1, n2, k);
                }
                if n1 + n2 > 3 * k && margin < min_g_margin_large {
                    min_g_margin_large = margin;
                    arg_g_large = format!("(n1,n2,kappa)=({},{},{})", n1, n2, k);
                }
            }
        }
    }
    records.push(record_gt(
        "max_root(g) > kappa",
        &format!(
            "minimum margin over n1+n2 <= {} at {}",
            max_n.max(20),
            arg_g
        ),
        min_g_margin,
        0.0,
    ));
    records.push(record_gt(
        "max_root(g) > kappa restricted to n > 3*kappa",
        &format!(
            "minimum margin over n1+n2 <= {} at {}",
            max_n.max(20),
            arg_g_large
        ),
        min_g_margin_large,
        0.0,
    ));

    // Join-geometry sigma formula against BFS, flagging what it assumes.
    let mut join_mismatch = 0u64;
    let mut matching_mismatch = Vec::new();
    for n1 in 1..=10usize {
        for n2 in 1..=n1 {
            for k in 1..=n2 {
                if n1 + n2 > 10 {
                    continue;
                }
                if let Ok(p) = BbParams::new(n1, n2, k, BbVariant::Join) {
                    let c = build_bb(&p).complement();
                    if c.is_connected() {
                        if c.transmission()? != sigma_formula_bb(n1, n2, k) {
                            join_mismatch += 1;
                        }
                    }
                }
                if let Ok(p) = BbParams::new(n1, n2, k, BbVariant::Matching) {
                    let c = build_bb(&p).complement();
                    if c.is_connected()
                        && c.transmission()? != sigma_formula_bb(n1, n2, k)
                        && matching_mismatch.len() < 3
                    {
                        matching_mismatch.push(format!("({},{},{})", n1, n2, k));
                    }
                }
            }
        }
    }
    records.push(AuditRecord::check_ge(
        "closed-form sigma matches BFS transmission on connected BB complements (join geometry)",
        &format!("{} mismatches over n <= 10", join_mismatch),
        -(join_mismatch as f64),
        0.0,
    ));
    if !matching_mismatch.is_empty() {
        records.push(AuditRecord::check_ge(
            "closed-form sigma applied to the matching geometry",
            &format!(
                "formula assumes the join geometry; first mismatches at {}",
                matching_mismatch.join(", ")
            ),
            -1.0,
            0.0,
        ));
    }

    Ok(records)
}

/// Largest class order the exhaustive verifiers accept.
pub const MAX_VERIFY_N: usize = MAX_ENUM_N;
