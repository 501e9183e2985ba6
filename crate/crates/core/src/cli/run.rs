use std::time::Instant;

use crate::error::{Error, Result};
use crate::identity::Comparison;
use crate::liesuper::{coboundary_cobracket, validate_cobracket};
use crate::liesuper::{check_cybe, check_gcybe_invariance};
use crate::rep::{check_braid, check_super_qybe, matrix_r, validate_representation};
use crate::rep::{GradedMatrix, GradedSpace, Representation};
use crate::scalar::HSeries;
use crate::twist::{check_cocycle, check_counit_normalization, check_hat_twist, gauge_relations};
use crate::twist::{right_from_left, QuantizedHopf, Twist};
use crate::ug::{UeaElement, Ug};
use crate::validation::{Rule, ValidationReport};

use super::report::{Record, Report, Verdict, KERNEL_VERSION};
use super::spec::{CheckGroup, SpecFile};

/// Command-line overrides of the spec file's `[settings]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub checks: Option<Vec<CheckGroup>>,
    pub order: Option<usize>,
    pub allow_invalid_twist: bool,
}

/// Verdict of an upstream stage as seen by the stages that depend on it.
#[derive(Clone, Debug)]
enum Gate {
    Open,
    Closed(String),
}

struct Run<'s> {
    spec: &'s SpecFile,
    selected: Vec<CheckGroup>,
    explicit: bool,
    allow_invalid: bool,
    ug: Ug,
    records: Vec<Record>,
}

/// Runs the selected groups in dependency order. Prerequisites of a selected
/// group are computed even when not selected; only selected groups are
/// reported. Failures never abort the run: they land in the report.
pub fn run_checks(spec: &SpecFile, options: &RunOptions) -> Report {
    let selected = options.checks.clone().unwrap_or_else(|| spec.settings.checks.clone());
    let order = options.order.unwrap_or(spec.settings.truncation_order);
    let mut run = Run {
        spec,
        explicit: selected.len() < CheckGroup::ALL.len(),
        selected: selected.clone(),
        allow_invalid: options.allow_invalid_twist || spec.settings.allow_invalid_twist,
        ug: Ug::new(spec.algebra.clone(), order),
        records: Vec::new(),
    };
    run.execute();
    Report {
        kernel_version: KERNEL_VERSION.into(),
        input_digest: spec.digest.clone(),
        truncation_order: order,
        checks: selected.iter().map(|g| g.as_str().to_string()).collect(),
        records: run.records,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_micros() as u64)
}

fn from_comparison(c: &Comparison, info: bool) -> (Verdict, Option<String>, Option<String>) {
    match (info, c.holds) {
        (false, true) => (Verdict::Pass, None, None),
        (false, false) => (Verdict::Fail, None, c.counterexample.clone()),
        (true, true) => (Verdict::Info, Some("holds".into()), None),
        (true, false) => (Verdict::Info, Some("does not hold".into()), c.counterexample.clone()),
    }
}

fn rule_comparison(report: &ValidationReport, rule: Rule) -> Comparison {
    let mut hits = report.of_rule(rule);
    match hits.next() {
        None => Comparison::pass(),
        Some(first) => {
            let more = hits.count();
            let suffix = if more > 0 { format!(" (+{more} more)") } else { String::new() };
            Comparison::fail(format!("{first}{suffix}"))
        }
    }
}

fn validation_comparison(report: &ValidationReport) -> Comparison {
    match report.first() {
        None => Comparison::pass(),
        Some(v) => {
            let more = report.violations.len() - 1;
            let suffix = if more > 0 { format!(" (+{more} more)") } else { String::new() };
            Comparison::fail(format!("{v}{suffix}"))
        }
    }
}

const ALGEBRA: [(&str, &str); 3] = [
    ("algebra.parity", "|[x,y]| = |x| + |y|"),
    ("algebra.antisymmetry", "[x,y] = -(-1)^{|x||y|}[y,x]"),
    ("algebra.jacobi", "(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0"),
];
const CYBE: [(&str, &str); 3] = [
    ("cybe.schouten", "[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] = 0"),
    ("cybe.invariance", "[[[r,r]], X⊗1⊗1 + 1⊗X⊗1 + 1⊗1⊗X] = 0"),
    ("cybe.cobracket", "δ(X) = (ad_X⊗1 + 1⊗ad_X) r is a cobracket"),
];
const COCYCLE: [(&str, &str); 4] = [
    ("twist.cocycle", "(Δ0⊗id)F (F⊗1) = (id⊗Δ0)F (1⊗F)"),
    ("twist.counit", "(ε⊗id)F = (id⊗ε)F = 1"),
    ("twist.right-cocycle", "(H⊗1)(Δ0⊗id)H = (1⊗H)(id⊗Δ0)H, H = S0⊗S0(F)"),
    ("twist.right-cocycle-literal", "(K⊗1)(Δ0⊗id)K = (1⊗K)(id⊗Δ0)K, K = S0⊗S0(H)"),
];
const HOPF: [(&str, &str); 10] = [
    ("hopf.u-inverse", "u u^-1 = u^-1 u = 1"),
    ("hopf.coassociativity", "(Δ_F⊗id)Δ_F = (id⊗Δ_F)Δ_F"),
    ("hopf.antipode", "m(S_F⊗id)Δ_F = m(id⊗S_F)Δ_F = ε"),
    ("hopf.hexagon-left", "(Δ_F⊗id)R = R13 R23"),
    ("hopf.hexagon-right", "(id⊗Δ_F)R = R13 R12"),
    ("hopf.r-counit", "(ε⊗id)R = (id⊗ε)R = 1"),
    ("hopf.triangular", "R21 R = 1"),
    ("hopf.intertwining", "Δ_F^op = R Δ_F R^-1"),
    ("hopf.qybe", "R12 R13 R23 = R23 R13 R12"),
    ("hopf.semiclassical", "R = 1 + h(F_1 - T(F_1)) + O(h^2)"),
];
const REP_VALIDITY: (&str, &str) = ("rep.validity", "ρ[x,y] = ρ(x)ρ(y) - (-1)^{|x||y|}ρ(y)ρ(x)");
const QYBE: [(&str, &str); 3] = [
    ("qybe-embedded", "R12 R13 R23 = R23 R13 R12 on W⊗W⊗W"),
    ("qybe-component", "R^{ab}_{im} R^{ic}_{dn} R^{mn}_{ef} = R^{bc}_{mk} R^{ak}_{lf} R^{lm}_{de} (signed sums)"),
    ("qybe-agreement", "component sides = embedded sides"),
];
const BRAID: [(&str, &str); 3] = [
    ("braid", "S12 S23 S12 = S23 S12 S23, S = PR"),
    ("permutation", "P P = 1"),
    ("triangular-image", "(P R P) R = 1"),
];
const GAUGE: [(&str, &str); 9] = [
    ("gauge.cocycle", "F' = Δ0(E^-1) F (E⊗E) satisfies the cocycle and counit conditions"),
    ("gauge.coproduct", "Δ_F'(X) = (E^-1⊗E^-1) Δ_F(E X E^-1) (E⊗E)"),
    ("gauge.r-matrix", "R_F' = (E^-1⊗E^-1) R_F (E⊗E)"),
    ("gauge.antipode", "S_F'(X) = E^-1 S_F(E X E^-1) E"),
    ("gauge.hat-coproduct", "Δ_F'(X) = G^-1 Δ_F(X) G, G = F^-1 F'"),
    ("gauge.hat-r-matrix", "R_F' = G21^-1 R_F G"),
    ("gauge.antipode-literal", "S_F'(X) = E^-1 S0(E^-1) S_F(X) S0(E) E"),
    ("gauge.hat-coproduct-literal", "Δ_F'(X) = G Δ_F(X) G^-1"),
    ("gauge.hat-r-matrix-literal", "R_F' = G21 R_F G"),
];
/// Informational gauge records start at this index of [`GAUGE`].
const GAUGE_INFO_FROM: usize = 6;

impl Run<'_> {
    fn reports(&self, group: CheckGroup) -> bool {
        self.selected.contains(&group)
    }

    fn push(&mut self, group: CheckGroup, id: &str, label: &str, verdict: (Verdict, Option<String>, Option<String>), wall_us: Option<u64>) {
        if !self.reports(group) {
            return;
        }
        let (verdict, detail, counterexample) = verdict;
        self.records.push(Record {
            id: id.into(),
            group: group.as_str().into(),
            label: label.into(),
            verdict,
            detail,
            counterexample,
            wall_us,
        });
    }

    fn compared(&mut self, group: CheckGroup, (id, label): (&str, &str), c: &Comparison, info: bool, wall: u64) {
        self.push(group, id, label, from_comparison(c, info), Some(wall));
    }

    fn skip_all(&mut self, group: CheckGroup, entries: &[(impl AsRef<str>, &str)], reason: &str) {
        for (id, label) in entries {
            self.push(group, id.as_ref(), label, (Verdict::Skipped, Some(reason.into()), None), None);
        }
    }

    fn fail_all(&mut self, group: CheckGroup, entries: &[(impl AsRef<str>, &str)], err: &Error, wall: u64) {
        for (id, label) in entries {
            self.push(group, id.as_ref(), label, (Verdict::Fail, Some(err.to_string()), None), Some(wall));
        }
    }

    /// Called when a group has no payload: silent under a full selection,
    /// a skipped record when the group was asked for by name.
    fn missing(&mut self, group: CheckGroup, what: &str) {
        if self.explicit && self.reports(group) {
            let id = format!("{group}.input");
            self.push(group, &id, "input present", (Verdict::Skipped, Some(format!("no {what} in the spec file")), None), None);
        }
    }

    fn execute(&mut self) {
        let algebra = self.algebra();
        self.cybe(&algebra);
        let (twist, twist_gate) = self.twist(&algebra);
        self.hopf(twist.as_ref(), &twist_gate);
        self.representation(&algebra, twist.as_ref(), &twist_gate);
        self.direct();
        self.gauge(twist.as_ref(), &twist_gate);
    }

    fn algebra(&mut self) -> Gate {
        let g = CheckGroup::Algebra;
        if self.spec.algebra.dim() == 0 {
            self.missing(g, "algebra");
            return Gate::Closed("no algebra in the spec file".into());
        }
        let (report, wall) = timed(|| self.spec.algebra.validate());
        let rules = [Rule::ParityConsistency, Rule::SuperAntisymmetry, Rule::SuperJacobi];
        for (entry, rule) in ALGEBRA.iter().zip(rules) {
            self.compared(g, *entry, &rule_comparison(&report, rule), false, wall);
        }
        if report.is_valid() {
            Gate::Open
        } else {
            Gate::Closed("the algebra fails its axioms".into())
        }
    }

    fn cybe(&mut self, algebra: &Gate) {
        let g = CheckGroup::Cybe;
        let Some(r) = &self.spec.r_matrix else {
            self.missing(g, "r_matrix");
            return;
        };
        if let Gate::Closed(reason) = algebra {
            self.skip_all(g, &CYBE, reason);
            return;
        }
        if !self.reports(g) {
            return;
        }
        let ug = &self.ug;
        let (schouten, w0) = timed(|| check_cybe(ug, r));
        let (invariance, w1) = timed(|| check_gcybe_invariance(ug, r));
        let (cobracket, w2) = timed(|| {
            coboundary_cobracket(ug.algebra(), r).map(|phi| validation_comparison(&validate_cobracket(ug.algebra(), &phi)))
        });
        for ((entry, result), wall) in CYBE.iter().zip([schouten, invariance, cobracket]).zip([w0, w1, w2]) {
            match result {
                Ok(c) => self.compared(g, *entry, &c, false, wall),
                Err(e) => self.fail_all(g, &[*entry], &e, wall),
            }
        }
    }

    fn build_twist(&self) -> Option<Result<Twist>> {
        let terms = self.spec.twist.as_ref()?;
        let words: Vec<_> = terms
            .iter()
            .map(|t| (t.order, t.left.as_str(), t.right.as_str(), t.coeff.clone()))
            .collect();
        Some(Twist::from_words(&self.ug, &words))
    }

    /// The twist and whether downstream checks may use it. The gate is open
    /// only if a twist was built.
    fn twist(&mut self, algebra: &Gate) -> (Option<Twist>, Gate) {
        let g = CheckGroup::Cocycle;
        let Some(built) = self.build_twist() else {
            self.missing(g, "twist");
            return (None, Gate::Closed("no twist in the spec file".into()));
        };
        if let Gate::Closed(reason) = algebra {
            self.skip_all(g, &COCYCLE, reason);
            return (None, algebra.clone());
        }
        let twist = match built {
            Ok(t) => t,
            Err(e) => {
                self.fail_all(g, &COCYCLE[..3], &e, 0);
                return (None, Gate::Closed("the twist could not be built".into()));
            }
        };
        let ug = &self.ug;
        let (cocycle, w0) = timed(|| check_cocycle(ug, &twist));
        let (counit, w1) = timed(|| check_counit_normalization(ug, &twist));
        let (cocycle, counit) = match (cocycle, counit) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                self.fail_all(g, &COCYCLE[..3], &e, w0 + w1);
                return (None, Gate::Closed("the twist checks could not run".into()));
            }
        };
        self.compared(g, COCYCLE[0], &cocycle, false, w0);
        self.compared(g, COCYCLE[1], &counit, false, w1);
        if self.reports(g) {
            let (right, w2) = timed(|| right_from_left(&self.ug, &twist));
            match right {
                Ok(rt) => {
                    self.compared(g, COCYCLE[2], &rt.transported_cocycle, false, w2);
                    self.compared(g, COCYCLE[3], &rt.right_cocycle, true, w2);
                }
                Err(e) => self.fail_all(g, &COCYCLE[2..3], &e, w2),
            }
        }
        let gate = if (cocycle.holds && counit.holds) || self.allow_invalid {
            Gate::Open
        } else {
            Gate::Closed("the twist fails the cocycle or counit check".into())
        };
        (Some(twist), gate)
    }

    fn hopf(&mut self, twist: Option<&Twist>, twist_gate: &Gate) {
        let g = CheckGroup::Hopf;
        if !self.reports(g) {
            return;
        }
        if self.spec.twist.is_none() {
            return self.missing(g, "twist");
        }
        let (Some(twist), Gate::Open) = (twist, twist_gate) else {
            if let Gate::Closed(reason) = twist_gate {
                self.skip_all(g, &HOPF, reason);
            }
            return;
        };
        let (results, wall) = timed(|| {
            QuantizedHopf::new(&self.ug, twist.clone(), self.allow_invalid).and_then(|q| q.verify_quasitriangular())
        });
        match results {
            Ok(results) => {
                for (entry, r) in HOPF.iter().zip(results) {
                    self.compared(g, *entry, &r.comparison, false, r.wall.as_micros() as u64);
                }
            }
            Err(e) => self.fail_all(g, &HOPF, &e, wall),
        }
    }

    fn representation(&mut self, algebra: &Gate, twist: Option<&Twist>, twist_gate: &Gate) {
        let (q, b) = (CheckGroup::Qybe, CheckGroup::Braid);
        let Some(spec) = &self.spec.representation else {
            if self.spec.rmatrix_direct.is_none() {
                self.missing(q, "representation or rmatrix_direct");
                self.missing(b, "representation or rmatrix_direct");
            }
            return;
        };
        if !self.reports(q) && !self.reports(b) {
            return;
        }
        let qybe = scoped("rep", &QYBE);
        let braid = scoped("rep", &BRAID);
        if let Gate::Closed(reason) = algebra {
            self.skip_all(q, &[REP_VALIDITY], reason);
            self.skip_all(q, &qybe, reason);
            self.skip_all(b, &braid, reason);
            return;
        }
        let order = self.ug.order();
        let built = spec
            .images
            .iter()
            .map(|rows| GradedMatrix::from_rows(spec.space.parities(), order, rows))
            .collect::<Result<Vec<_>>>()
            .and_then(|images| Representation::new(spec.space, images));
        let rho = match built {
            Ok(rho) => rho,
            Err(e) => {
                self.fail_all(q, &[REP_VALIDITY], &e, 0);
                self.skip_all(q, &qybe, "the representation could not be built");
                self.skip_all(b, &braid, "the representation could not be built");
                return;
            }
        };
        let (validity, wall) = timed(|| validation_comparison(&validate_representation(self.ug.algebra(), &rho)));
        self.compared(q, REP_VALIDITY, &validity, false, wall);
        let gate = if validity.holds {
            twist_gate.clone()
        } else {
            Gate::Closed("the representation is not a homomorphism".into())
        };
        let (Some(twist), Gate::Open) = (twist, &gate) else {
            if let Gate::Closed(reason) = &gate {
                self.skip_all(q, &qybe, reason);
                self.skip_all(b, &braid, reason);
            }
            return;
        };
        let (r, wall) = timed(|| matrix_r(&self.ug, twist, &rho, self.allow_invalid));
        match r {
            Ok(r) => self.matrix_checks(&qybe, &braid, &r, spec.space, false),
            Err(e) => {
                self.fail_all(q, &qybe, &e, wall);
                self.skip_all(b, &braid, "the matrix R could not be built");
            }
        }
    }

    fn direct(&mut self) {
        let Some(direct) = &self.spec.rmatrix_direct else {
            return;
        };
        let (q, b) = (CheckGroup::Qybe, CheckGroup::Braid);
        if !self.reports(q) && !self.reports(b) {
            return;
        }
        let order = self.ug.order();
        let n = direct.space.dim() * direct.space.dim();
        let mut r = GradedMatrix::zero(direct.space.tensor_parities(2), order);
        for row in 0..n {
            for col in 0..n {
                r.set(row, col, HSeries::from_coeffs(order, direct.entries[row][col].iter().cloned()));
            }
        }
        self.matrix_checks(&scoped("direct", &QYBE), &scoped("direct", &BRAID), &r, direct.space, true);
    }

    /// QYBE in both formulations, then braid checks if the QYBE holds. The
    /// triangular image is informational for a standalone R.
    fn matrix_checks(&mut self, qybe: &[(String, &str)], braid: &[(String, &str)], r: &GradedMatrix, space: GradedSpace, standalone: bool) {
        let (q, b) = (CheckGroup::Qybe, CheckGroup::Braid);
        let qybe: Vec<(&str, &str)> = qybe.iter().map(|(i, l)| (i.as_str(), *l)).collect();
        let braid: Vec<(&str, &str)> = braid.iter().map(|(i, l)| (i.as_str(), *l)).collect();
        let (report, wall) = timed(|| check_super_qybe(r, space));
        let report = match report {
            Ok(report) => report,
            Err(e) => {
                self.fail_all(q, &qybe, &e, wall);
                self.skip_all(b, &braid, "the super QYBE check could not run");
                return;
            }
        };
        for (entry, c) in qybe.iter().zip([&report.embedded, &report.component, &report.agreement]) {
            self.compared(q, *entry, c, false, wall);
        }
        if !self.reports(b) {
            return;
        }
        if !report.holds() {
            self.skip_all(b, &braid, "the super QYBE fails");
            return;
        }
        let (braid_report, wall) = timed(|| check_braid(r, space));
        match braid_report {
            Ok(br) => {
                self.compared(b, braid[0], &br.braid, false, wall);
                self.compared(b, braid[1], &br.permutation_involution, false, wall);
                self.compared(b, braid[2], &br.triangular_image, standalone, wall);
            }
            Err(e) => self.fail_all(b, &braid, &e, wall),
        }
    }

    fn gauge(&mut self, twist: Option<&Twist>, twist_gate: &Gate) {
        let g = CheckGroup::Gauge;
        if !self.reports(g) {
            return;
        }
        if self.spec.gauge.is_none() {
            return self.missing(g, "gauge");
        }
        let (Some(twist), Gate::Open) = (twist, twist_gate) else {
            if let Gate::Closed(reason) = twist_gate {
                self.skip_all(g, &GAUGE, reason);
            }
            return;
        };
        let ug = &self.ug;
        let e = match gauge_element(ug, self.spec) {
            Ok(Some(e)) => e,
            Ok(None) => return,
            Err(err) => return self.fail_all(g, &GAUGE[..GAUGE_INFO_FROM], &err, 0),
        };
        let (relations, w0) = timed(|| gauge_relations(ug, twist, &e, self.allow_invalid));
        let rel = match relations {
            Ok(rel) => rel,
            Err(err) => return self.fail_all(g, &GAUGE[..GAUGE_INFO_FROM], &err, w0),
        };
        self.compared(g, GAUGE[0], &rel.cocycle, false, w0);
        self.compared(g, GAUGE[1], &rel.coproduct, false, w0);
        self.compared(g, GAUGE[2], &rel.r_matrix, false, w0);
        self.compared(g, GAUGE[3], &rel.antipode, false, w0);
        let hat = if rel.cocycle.holds || self.allow_invalid {
            let (hat, w1) = timed(|| check_hat_twist(&self.ug, twist, &rel.gauged, self.allow_invalid));
            Some((hat, w1))
        } else {
            None
        };
        match hat {
            None => self.skip_all(g, &GAUGE[4..GAUGE_INFO_FROM], "the gauged twist fails the cocycle check"),
            Some((Err(err), w1)) => self.fail_all(g, &GAUGE[4..GAUGE_INFO_FROM], &err, w1),
            Some((Ok(h), w1)) => {
                self.compared(g, GAUGE[4], &h.coproduct, false, w1);
                self.compared(g, GAUGE[5], &h.r_matrix, false, w1);
                self.compared(g, GAUGE[6], &rel.antipode_literal, true, w0);
                self.compared(g, GAUGE[7], &h.coproduct_literal, true, w1);
                self.compared(g, GAUGE[8], &h.r_matrix_literal, true, w1);
                return;
            }
        }
        self.compared(g, GAUGE[6], &rel.antipode_literal, true, w0);
    }
}

fn scoped(prefix: &str, entries: &[(&'static str, &'static str)]) -> Vec<(String, &'static str)> {
    entries.iter().map(|(id, label)| (format!("{prefix}.{id}"), *label)).collect()
}

/// `E = 1 + sum c h^k w` from the `[gauge]` section, if any.
pub fn gauge_element(ug: &Ug, spec: &SpecFile) -> Result<Option<UeaElement>> {
    let Some(terms) = &spec.gauge else {
        return Ok(None);
    };
    let mut e = ug.one();
    for t in terms {
        e = e.add(&ug.parse(&t.word)?.scale_series(&HSeries::monomial(ug.order(), t.order, t.coeff.clone())));
    }
    Ok(Some(e))
}
