//! Registry of named checks and the batch runner behind the `verify` binary.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{verify_catalog, Catalog, CatalogError};
use crate::exactalg::rat::fmt_rat;
use crate::exactalg::Rat;
use crate::report::{CheckResult, Status};
use crate::{chowcalc, curvelab, germlab};

pub const SCHEMA: &str = "v22-verify/1";

/// Groups of checks computed together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Catalog,
    FactorTable,
    Coprimality,
    Exceptions,
    DegreeTable,
    ZeroPatterns,
    CurvesInS,
    LineTable,
    SImageConic,
    DegreeLedger,
    Charts,
    Tangency(usize),
    TangencyAlongDelta,
    SingularAlongGamma,
    PencilQuadratic,
    PencilMultiplicity,
    SharedLine,
    DeltaSlice,
    UpsilonSlice,
    PsiCurves,
    Chow,
}

impl Group {
    /// Whether the group reads the quadric family, so that it needs a valid `u`.
    pub fn uses_u(self) -> bool {
        !matches!(self, Group::Exceptions | Group::Chow)
    }

    pub fn run(self, cat: &Catalog) -> Vec<CheckResult> {
        match self {
            Group::Catalog => verify_catalog(cat),
            Group::FactorTable => curvelab::verify_factor_table(cat),
            Group::Coprimality => vec![curvelab::verify_coprimality(cat)],
            Group::Exceptions => curvelab::verify_exceptions(),
            Group::DegreeTable => vec![curvelab::verify_degree_table(cat)],
            Group::ZeroPatterns => vec![curvelab::verify_zero_patterns(cat)],
            Group::CurvesInS => vec![curvelab::verify_curves_in_s(cat)],
            Group::LineTable => vec![curvelab::verify_line_membership(cat)],
            Group::SImageConic => vec![curvelab::s_image_conic(cat)],
            Group::DegreeLedger => curvelab::degree_ledger(cat),
            Group::Charts => vec![germlab::verify_charts(cat)],
            Group::Tangency(i) => vec![germlab::verify_tangency(cat, &germlab::TANGENCY_CASES[i])],
            Group::TangencyAlongDelta => vec![germlab::verify_n5_n13_along_delta(cat)],
            Group::SingularAlongGamma => vec![germlab::verify_singular_along_gamma(cat)],
            Group::PencilQuadratic => vec![germlab::verify_pencil_quadratic(cat)],
            Group::PencilMultiplicity => vec![germlab::verify_pencil_multiplicity(cat)],
            Group::SharedLine => vec![germlab::verify_shared_line(cat)],
            Group::DeltaSlice => vec![germlab::verify_delta_slice(cat)],
            Group::UpsilonSlice => vec![germlab::verify_upsilon_slice(cat)],
            Group::PsiCurves => vec![germlab::verify_psi_curves(cat)],
            Group::Chow => chowcalc::verify_all(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub id: &'static str,
    pub description: &'static str,
    #[serde(skip)]
    pub group: Group,
}

const fn info(id: &'static str, group: Group, description: &'static str) -> CheckInfo {
    CheckInfo { id, description, group }
}

/// Every check, sorted by id.
pub const REGISTRY: &[CheckInfo] = &[
    info(
        "catalog-g15prime-separates",
        Group::Catalog,
        "g15' restricted to Gamma is u-1 times g15, so the two weight-15 slots are independent",
    ),
    info("catalog-gamma-on-quadric-and-s", Group::Catalog, "the parameterized sextic Gamma lies on the quadric and on S"),
    info("catalog-generators-on-quadric", Group::Catalog, "the orbit generators of the degree table lie on the quadric"),
    info("catalog-involution", Group::Catalog, "the involution x<->w, y<->t swaps the slots of weight k and 30-k"),
    info(
        "catalog-quintic-decompositions",
        Group::Catalog,
        "each quintic is a combination of the quadric and f with the cubic/sextic factors",
    ),
    info("catalog-weights", Group::Catalog, "h and g slot weights under the torus action"),
    info("chow-c4-blowup", Group::Chow, "blowup along C4: 18n-6m, 14n-8m, m <= 7/4, (H-E)^2(H-3E) = 0"),
    info("chow-c6-blowup", Group::Chow, "blowup along C6: 10-10m, m <= 1, (H-E)^2(H-2E) = 0"),
    info("chow-e-cube", Group::Chow, "E^3 = -16, -2, -4, 0"),
    info("chow-minus-k-cube", Group::Chow, "(-K)^3 of the blowups: 12 and 8, and 16"),
    info("conic-coprimality-loci", Group::Coprimality, "resultants of the q-pairs and their vanishing loci in u"),
    info("conic-curves-in-s", Group::CurvesInS, "curves of the conic family contained in S"),
    info("conic-exception-q0-q6", Group::Exceptions, "q0 and q6 share a root when u^2-2u+2 = 0"),
    info("conic-exception-q1-q6", Group::Exceptions, "q1 = q6 at u = 2"),
    info("conic-exception-q2-q3", Group::Exceptions, "q2 and q3 share a root when u^2+u-1 = 0"),
    info("conic-exception-q3-q5", Group::Exceptions, "q3 = q5 at u = -1"),
    info("conic-factor-p10", Group::FactorTable, "factorization of g10 and g20 on the conic"),
    info("conic-factor-p11", Group::FactorTable, "factorization of g11 and g19 on the conic"),
    info("conic-factor-p12", Group::FactorTable, "factorization of g12 and g18 on the conic"),
    info("conic-factor-p13", Group::FactorTable, "factorization of g13 and g17 on the conic"),
    info("conic-factor-p14", Group::FactorTable, "factorization of g14 and g16 on the conic"),
    info("conic-factor-p15", Group::FactorTable, "factorization of g15 on the conic"),
    info("conic-factor-p15prime", Group::FactorTable, "factorization of g15' on the conic"),
    info("conic-factor-p9", Group::FactorTable, "factorization of g9 and g21 on the conic"),
    info("conic-involution-symmetry", Group::FactorTable, "the involution of the conic swaps partner slots"),
    info("germ-m15p-along-delta", Group::DeltaSlice, "slice of M15' transversal to Delta: A1, and D4 at u = 2"),
    info("germ-m15pp-along-upsilon", Group::UpsilonSlice, "slice of M15'' transversal to Upsilon: A1, and tacnode A3 at u = 3/4"),
    info("hirzebruch-c2-exceptional", Group::Chow, "exceptional surface over C2: m <= 5/2, m > 5/4, -K.C~ <= 3 or 4"),
    info("hirzebruch-gamma-exceptional", Group::Chow, "exceptional surface over Gamma: kappa = (n-16)/2, n <= 4, degree 12"),
    info("ledger-c4-link", Group::Chow, "multiplicities after the link along C4: 3eps-2 = 1/2, 2eps-1 = 2/3"),
    info("ledger-e-section-degree", Group::DegreeLedger, "degree of the image of the exceptional section"),
    info("ledger-n5-n13-degrees", Group::DegreeLedger, "degree count for the intersection of N5 and N13"),
    info("ledger-t9-t21-degrees", Group::DegreeLedger, "T9 . T21 = C10 + C10' + C2 has degree 10 + 10 + 2 = 22"),
    info("lines-hyperplane-table", Group::LineTable, "which hyperplane sections contain the lines l1 and l2"),
    info("local-charts", Group::Charts, "local equations of the surfaces through Gamma near (1:1:1:1:1)"),
    info("m10-m20-shared-line", Group::SharedLine, "quadratic parts of M10 and M20 share a line exactly at u = -2"),
    info("n3-n15-residual-curves", Group::PsiCurves, "residual curves of N3 . N15 through Psi and Psi'"),
    info("orbit-degree-table", Group::DegreeTable, "degrees of the images of the orbit closures"),
    info("pencil-double-along-gamma", Group::PencilMultiplicity, "the special member of the M15 pencil is double along Gamma"),
    info("pencil-quadratic-rank-one", Group::PencilQuadratic, "the quadratic part of the M15 pencil has rank 1 at one value of mu"),
    info(
        "quintics-singular-along-gamma",
        Group::SingularAlongGamma,
        "all 14 quintics are singular along Gamma with multiplicity exactly 2",
    ),
    info("s-image-conic", Group::SImageConic, "the image of S is a smooth conic"),
    info("tangency-n3-n15", Group::Tangency(0), "N3 and N15 tangent along Gamma iff u = 2/3"),
    info("tangency-n5-n13", Group::Tangency(1), "N5 and N13 tangent at (1:1:1:1:1) iff u = 2"),
    info("tangency-n5-n13-along-delta", Group::TangencyAlongDelta, "N5 and N13 transversal at a general point of Delta"),
    info("tangency-n8-n10", Group::Tangency(2), "N8 and N10 never tangent along Gamma"),
    info("tangency-s-n3", Group::Tangency(3), "S and N3 never tangent at (1:1:1:1:1)"),
    info("zeta-zero-patterns", Group::ZeroPatterns, "slots of the quintic map vanishing on Delta, Upsilon and Theta+-"),
];

pub fn list_checks() -> &'static [CheckInfo] {
    REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static CheckInfo> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("unknown check id `{0}` (see --list)")]
    UnknownCheck(String),
    #[error("u = 0 is excluded: the quadric is not defined")]
    ZeroParameter,
    #[error("u = 1 makes the quadric singular; pass --allow-singular to run the checks that do not depend on u")]
    SingularParameter,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Generic parameter or a rational value of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UChoice {
    Generic,
    Value(Rat),
}

impl UChoice {
    pub fn label(&self) -> String {
        match self {
            UChoice::Generic => "generic".into(),
            UChoice::Value(r) => fmt_rat(r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RunConfig {
    /// Empty selects every check.
    pub ids: Vec<String>,
    /// Empty runs the generic parameter only.
    pub u: Vec<Rat>,
    pub allow_singular: bool,
}

impl RunConfig {
    pub fn u_choices(&self) -> Vec<UChoice> {
        if self.u.is_empty() {
            vec![UChoice::Generic]
        } else {
            self.u.iter().cloned().map(UChoice::Value).collect()
        }
    }

    pub fn validate(&self) -> Result<(), RunError> {
        for id in &self.ids {
            lookup(id).ok_or_else(|| RunError::UnknownCheck(id.clone()))?;
        }
        for r in &self.u {
            if r.is_zero() {
                return Err(RunError::ZeroParameter);
            }
            if r.is_one() && !self.allow_singular {
                return Err(RunError::SingularParameter);
            }
        }
        Ok(())
    }

    fn selected(&self) -> Vec<&'static CheckInfo> {
        if self.ids.is_empty() {
            return REGISTRY.iter().collect();
        }
        let want: BTreeSet<&str> = self.ids.iter().map(|s| s.as_str()).collect();
        REGISTRY.iter().filter(|c| want.contains(c.id)).collect()
    }
}

/// One group of checks at one value of `u`.
#[derive(Clone, Debug)]
pub struct Task {
    pub u: UChoice,
    pub group: Group,
    pub ids: Vec<&'static str>,
}

impl Task {
    /// Results for the task's ids, in the task's order.
    pub fn run(&self) -> Vec<CheckResult> {
        let skip = |reason: &str| {
            self.ids.iter().map(|id| CheckResult::skipped(*id, lookup(id).map(|c| c.description).unwrap_or(""), reason)).collect::<Vec<_>>()
        };
        let cat = match &self.u {
            UChoice::Generic => Ok(Catalog::standard().clone()),
            UChoice::Value(r) if r.is_one() => {
                if self.group.uses_u() {
                    return skip("u = 1: the quadric is singular and the family degenerates");
                }
                Ok(Catalog::standard().clone())
            }
            UChoice::Value(r) => Catalog::standard().at(r),
        };
        let cat = match cat {
            Ok(c) => c,
            Err(e) => {
                return self.ids.iter().map(|id| CheckResult::new(*id, "specialize the catalog", false, e.to_string())).collect();
            }
        };
        let results = self.group.run(&cat);
        self.ids
            .iter()
            .map(|id| {
                results.iter().find(|r| r.id == *id).cloned().unwrap_or_else(|| {
                    CheckResult::new(*id, lookup(id).map(|c| c.description).unwrap_or(""), false, "check produced no result")
                })
            })
            .collect()
    }
}

/// Work items for a configuration, one per group and value of `u`.
pub fn plan(config: &RunConfig) -> Result<Vec<Task>, RunError> {
    config.validate()?;
    let sel = config.selected();
    let mut tasks = Vec::new();
    for u in config.u_choices() {
        let mut groups: Vec<Group> = sel.iter().map(|c| c.group).collect();
        groups.sort();
        groups.dedup();
        for g in groups {
            let ids = sel.iter().filter(|c| c.group == g).map(|c| c.id).collect();
            tasks.push(Task { u: u.clone(), group: g, ids });
        }
    }
    Ok(tasks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub u: String,
    pub status: Status,
    pub witness: String,
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub checks: Vec<String>,
    pub u: Vec<String>,
    pub allow_singular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub status: Status,
}

/// Only fields that do not vary between runs, so reports stay byte-identical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Environment {
    pub version: &'static str,
    pub arithmetic: &'static str,
}

pub const ENVIRONMENT: Environment = Environment { version: env!("CARGO_PKG_VERSION"), arithmetic: "exact rational" };

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub environment: Environment,
    pub config: ConfigEcho,
    pub checks: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.status == Status::Pass
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.checks {
            out.push_str(&format!("{:<7} {} [u = {}]\n", r.status.to_string(), r.id, r.u));
            out.push_str(&format!("        claim: {}\n", r.claim));
            if !r.witness.is_empty() {
                out.push_str(&format!("        witness: {}\n", r.witness));
            }
            if let Some(n) = &r.note {
                out.push_str(&format!("        note: {n}\n"));
            }
        }
        let s = &self.summary;
        out.push_str(&format!("{}: {} checks, {} passed, {} failed, {} skipped\n", s.status, s.total, s.pass, s.fail, s.skipped));
        out
    }
}

/// Orders results by value of `u` (as configured), then by id.
pub fn assemble(config: &RunConfig, tasks: &[Task], results: Vec<Vec<CheckResult>>) -> Report {
    let order: Vec<String> = config.u_choices().iter().map(|u| u.label()).collect();
    let mut recs: Vec<(usize, Record)> = Vec::new();
    for (t, rs) in tasks.iter().zip(results) {
        let label = t.u.label();
        let pos = order.iter().position(|l| *l == label).unwrap_or(usize::MAX);
        for r in rs {
            recs.push((pos, Record { id: r.id, u: label.clone(), status: r.status, witness: r.witness, claim: r.claim, note: r.note }));
        }
    }
    recs.sort_by(|a, b| (a.0, &a.1.id).cmp(&(b.0, &b.1.id)));
    let checks: Vec<Record> = recs.into_iter().map(|(_, r)| r).collect();
    let count = |s: Status| checks.iter().filter(|r| r.status == s).count();
    let (pass, fail, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    Report {
        schema: SCHEMA,
        environment: ENVIRONMENT,
        config: ConfigEcho { checks: config.ids.clone(), u: order, allow_singular: config.allow_singular },
        summary: Summary { total: checks.len(), pass, fail, skipped, status: if fail == 0 { Status::Pass } else { Status::Fail } },
        checks,
    }
}

/// Runs every task on the current thread.
pub fn run(config: &RunConfig) -> Result<Report, RunError> {
    let tasks = plan(config)?;
    let results = tasks.iter().map(Task::run).collect();
    Ok(assemble(config, &tasks, results))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat;

    #[test]
    fn registry_sorted_and_unique() {
        let ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        let mut s = ids.clone();
        s.sort();
        s.dedup();
        assert_eq!(ids, s);
    }

    #[test]
    fn every_group_produces_its_ids() {
        let cat = Catalog::standard();
        let mut groups: Vec<Group> = REGISTRY.iter().map(|c| c.group).collect();
        groups.sort();
        groups.dedup();
        for g in groups {
            let got: BTreeSet<String> = g.run(cat).into_iter().map(|r| r.id).collect();
            let want: BTreeSet<String> = REGISTRY.iter().filter(|c| c.group == g).map(|c| c.id.to_string()).collect();
            assert_eq!(got, want, "{g:?}");
        }
    }

    #[test]
    fn config_validation() {
        let bad = RunConfig { u: vec![rat(0, 1)], ..Default::default() };
        assert_eq!(run(&bad).unwrap_err(), RunError::ZeroParameter);
        let bad = RunConfig { u: vec![rat(1, 1)], ..Default::default() };
        assert_eq!(run(&bad).unwrap_err(), RunError::SingularParameter);
        let bad = RunConfig { ids: vec!["nope".into()], ..Default::default() };
        assert!(matches!(run(&bad), Err(RunError::UnknownCheck(_))));
    }

    #[test]
    fn singular_parameter_skips_family_checks() {
        let cfg = RunConfig { ids: vec!["chow-e-cube".into(), "local-charts".into()], u: vec![rat(1, 1)], allow_singular: true };
        let rep = run(&cfg).unwrap();
        assert_eq!(rep.checks[0].status, Status::Pass);
        assert_eq!(rep.checks[1].status, Status::Skipped);
        assert!(rep.passed());
    }

    #[test]
    fn selected_run() {
        let cfg = RunConfig { ids: vec!["chow-minus-k-cube".into()], ..Default::default() };
        let rep = run(&cfg).unwrap();
        assert_eq!(rep.checks.len(), 1);
        assert!(rep.checks[0].witness.contains("= 12") && rep.checks[0].witness.contains("= 8"));
    }

    #[test]
    fn one_failure_fails_the_report() {
        let cfg = RunConfig { ids: vec!["chow-e-cube".into(), "chow-c6-blowup".into()], ..Default::default() };
        let tasks = plan(&cfg).unwrap();
        let mut results: Vec<Vec<CheckResult>> = tasks.iter().map(Task::run).collect();
        results[0][0] = CheckResult::new(results[0][0].id.clone(), "forced", false, "forced failure");
        let rep = assemble(&cfg, &tasks, results);
        assert_eq!((rep.summary.pass, rep.summary.fail), (1, 1));
        assert!(!rep.passed());
        assert!(rep.to_text().contains("FAIL"));
    }
}
