//! Arithmetic geography of genus-2 Lefschetz fibrations over the sphere.
//!
//! Everything here is integer arithmetic on a type `(n, s)`: the signature
//! `σ = −(3n+s)/5`, the admissibility conditions, Sato's list of possibly
//! non-minimal types, and the certificates built from them. Certificates
//! carry a verdict in `{Proved, Unknown}` only; nothing here ever claims
//! non-minimality or decomposability.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factorization::FibrationType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("signature of ({n}, {s}) is not an integer: 3n+s = {num} is not divisible by 5")]
    NonIntegralSignature { n: u64, s: u64, num: u64 },
    #[error("type ({}, {}) is not admissible: {:?}", .0.n, .0.s, .0.violations)]
    Inadmissible(AdmissibilityReport),
}

pub fn signature(n: u64, s: u64) -> Result<i64, AnalysisError> {
    let num = 3 * n + s;
    if !num.is_multiple_of(5) {
        return Err(AnalysisError::NonIntegralSignature { n, s, num });
    }
    Ok(-((num / 5) as i64))
}

pub fn euler(n: u64, s: u64) -> i64 {
    (n + s) as i64 - 4
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub n: u64,
    pub s: u64,
    /// number of critical points
    pub m: u64,
    pub euler: i64,
    pub signature: Option<i64>,
    pub b2plus_assumed: Option<i64>,
    pub b2minus_derived: Option<i64>,
    pub k: Option<u64>,
    /// `e + σ` even
    pub parity_consistent: Option<bool>,
}

impl InvariantsReport {
    pub fn new(n: u64, s: u64) -> Self {
        let sig = signature(n, s).ok();
        let e = euler(n, s);
        InvariantsReport {
            n,
            s,
            m: n + s,
            euler: e,
            signature: sig,
            b2plus_assumed: None,
            b2minus_derived: None,
            k: ((n + 2 * s).is_multiple_of(10) && n + 2 * s > 0).then_some((n + 2 * s) / 10),
            parity_consistent: sig.map(|v| (e + v).rem_euclid(2) == 0),
        }
    }

    /// Fills in `b₂⁻ = b₂⁺ − σ` for an assumed `b₂⁺`.
    pub fn assuming_b2plus(mut self, b2plus: i64) -> Self {
        self.b2plus_assumed = Some(b2plus);
        self.b2minus_derived = self.signature.map(|sig| b2plus - sig);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    /// `n + 2s ≢ 0 (mod 10)`
    Mod10,
    /// `s > 2n − 5`
    SlopeBound,
    /// `n + 2s = 10` with `s < 2`
    TenCase,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub n: u64,
    pub s: u64,
    pub passes: bool,
    pub violations: Vec<Violation>,
    /// `4k − s` when `n + 2s = 10k`; positive exactly when the slope bound holds.
    pub slope_margin: Option<i64>,
}

pub fn admissible(n: u64, s: u64) -> AdmissibilityReport {
    let mut violations = vec![];
    let total = n + 2 * s;
    if !total.is_multiple_of(10) {
        violations.push(Violation::Mod10);
    }
    if (s as i64) > 2 * n as i64 - 5 {
        violations.push(Violation::SlopeBound);
    }
    if total == 10 && s < 2 {
        violations.push(Violation::TenCase);
    }
    let slope_margin = total
        .is_multiple_of(10)
        .then(|| 4 * (total / 10) as i64 - s as i64);
    AdmissibilityReport {
        n,
        s,
        passes: violations.is_empty(),
        violations,
        slope_margin,
    }
}

/// Types that Sato's theorem allows to be non-minimal with `b₂⁺ > 1`.
pub const SATO_TABLE: [(u64, u64); 5] = [(14, 3), (16, 2), (28, 1), (30, 0), (40, 0)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatoReport {
    pub table_hit: bool,
    pub b2plus1_possible: bool,
}

pub fn sato_oracle(n: u64, s: u64) -> SatoReport {
    SatoReport {
        table_hit: SATO_TABLE.contains(&(n, s)),
        b2plus1_possible: matches!(n + 2 * s, 10 | 20),
    }
}

/// Each separating singular fiber contributes a torus of negative square.
pub fn b2minus_lower_bound(s: u64) -> u64 {
    s + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertVerdict {
    Proved,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    Mod10,
    SlopeBound,
    TenCase,
    SignatureFormula,
    SatoTable,
    SatoB2Plus,
    B2MinusBound,
    IndecomposableSlope,
    Enumeration,
    Construction,
    CaseSplit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: Rule,
    pub statement: String,
    pub holds: bool,
}

impl Step {
    fn new(rule: Rule, holds: bool, statement: impl Into<String>) -> Self {
        Step {
            rule,
            statement: statement.into(),
            holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub verdict: CertVerdict,
    pub justification: Vec<Step>,
}

fn require_admissible(n: u64, s: u64) -> Result<AdmissibilityReport, AnalysisError> {
    let report = admissible(n, s);
    if report.passes {
        Ok(report)
    } else {
        Err(AnalysisError::Inadmissible(report))
    }
}

fn admissibility_steps(report: &AdmissibilityReport) -> Vec<Step> {
    let (n, s) = (report.n, report.s);
    vec![
        Step::new(
            Rule::Mod10,
            true,
            format!("n+2s = {} ≡ 0 (mod 10)", n + 2 * s),
        ),
        Step::new(
            Rule::SlopeBound,
            true,
            format!(
                "s = {s} ≤ 2n−5 = {}; 4k−s = {}",
                2 * n as i64 - 5,
                report.slope_margin.unwrap_or(0)
            ),
        ),
        Step::new(Rule::TenCase, true, "n+2s = 10 forces s ≥ 2"),
    ]
}

pub fn certify_minimal(n: u64, s: u64) -> Result<Certificate, AnalysisError> {
    let report = require_admissible(n, s)?;
    let mut steps = admissibility_steps(&report);
    let sato = sato_oracle(n, s);
    let sig = signature(n, s)?;
    steps.push(Step::new(
        Rule::SignatureFormula,
        true,
        format!("σ = −(3n+s)/5 = {sig}"),
    ));
    steps.push(Step::new(
        Rule::SatoTable,
        !sato.table_hit,
        format!(
            "({n}, {s}) {} the list of non-minimal types with b₂⁺ > 1",
            if sato.table_hit { "is in" } else { "is not in" }
        ),
    ));
    let proved = if !sato.b2plus1_possible {
        steps.push(Step::new(
            Rule::SatoB2Plus,
            true,
            format!(
                "n+2s = {} ∉ {{10, 20}}, so a non-minimal total space has b₂⁺ > 1",
                n + 2 * s
            ),
        ));
        !sato.table_hit
    } else {
        let b2minus = 1 - sig;
        let bound = b2minus_lower_bound(s) as i64;
        let contradiction = b2minus < bound;
        steps.push(Step::new(
            Rule::SatoB2Plus,
            true,
            format!(
                "n+2s = {} ∈ {{10, 20}}: b₂⁺ = 1 must be ruled out",
                n + 2 * s
            ),
        ));
        steps.push(Step::new(
            Rule::B2MinusBound,
            contradiction,
            format!(
                "b₂⁺ = 1 gives b₂⁻ = 1 − σ = {b2minus}, against b₂⁻ ≥ s+1 = {bound} (the weaker in-fiber bound is s = {s})"
            ),
        ));
        !sato.table_hit && contradiction
    };
    Ok(Certificate {
        claim: format!("every genus-2 Lefschetz fibration of type ({n}, {s}) is minimal"),
        verdict: if proved {
            CertVerdict::Proved
        } else {
            CertVerdict::Unknown
        },
        justification: steps,
    })
}

/// Unordered splits into two admissible types; within a pair the part with
/// more separating letters comes first.
pub fn decompositions(n: u64, s: u64) -> Vec<(FibrationType, FibrationType)> {
    let mut out = vec![];
    for n1 in 0..=n {
        for s1 in 0..=s {
            let (a, b) = (
                FibrationType::new(n1, s1),
                FibrationType::new(n - n1, s - s1),
            );
            let key = |t: FibrationType| (std::cmp::Reverse(t.s), t.n);
            if key(a) > key(b) {
                continue;
            }
            let genuine = |t: FibrationType| t.n + 2 * t.s >= 10 && admissible(t.n, t.s).passes;
            if genuine(a) && genuine(b) {
                out.push((a, b));
            }
        }
    }
    out.sort_by_key(|(a, _)| (a.n, a.s));
    out
}

/// The slope argument: for `s = 2n − 5`, any split has
/// `s1 + s2 ≤ 2n − 10 < 2n − 5`.
pub fn slope_indecomposable(n: u64, s: u64) -> bool {
    s as i64 == 2 * n as i64 - 5
}

pub fn certify_indecomposable(n: u64, s: u64) -> Result<Certificate, AnalysisError> {
    let report = require_admissible(n, s)?;
    let mut steps = admissibility_steps(&report);
    let parts = decompositions(n, s);
    if slope_indecomposable(n, s) {
        steps.push(Step::new(
            Rule::IndecomposableSlope,
            parts.is_empty(),
            format!(
                "s = 2n−5 = {s}; a split would give s = s1+s2 ≤ (2n1−5)+(2n2−5) = 2n−10 = {}",
                2 * n as i64 - 10
            ),
        ));
    }
    let listing: Vec<String> = parts.iter().map(|(a, b)| format!("{a}+{b}")).collect();
    steps.push(Step::new(
        Rule::Enumeration,
        parts.is_empty(),
        if parts.is_empty() {
            "no split into two admissible types".to_string()
        } else {
            format!("admissible splits: {}", listing.join(", "))
        },
    ));
    Ok(Certificate {
        claim: format!("every genus-2 Lefschetz fibration of type ({n}, {s}) is indecomposable"),
        verdict: if parts.is_empty() {
            CertVerdict::Proved
        } else {
            CertVerdict::Unknown
        },
        justification: steps,
    })
}

/// One node of the case analysis: either the type itself is indecomposable,
/// or one of its splits contains a minimal summand that is analysed in turn.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseNode {
    pub ty: FibrationType,
    pub minimal: Certificate,
    pub indecomposable: Certificate,
    pub cases: Vec<Case>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub split: (FibrationType, FibrationType),
    pub follow: Option<Box<CaseNode>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub claim: String,
    pub verdict: CertVerdict,
    pub justification: Vec<Step>,
    pub leaves: Vec<FibrationType>,
    pub depth: usize,
    pub tree: CaseNode,
}

fn is_proved(c: &Certificate) -> bool {
    c.verdict == CertVerdict::Proved
}

fn case_node(ty: FibrationType) -> Result<CaseNode, AnalysisError> {
    let minimal = certify_minimal(ty.n, ty.s)?;
    let indecomposable = certify_indecomposable(ty.n, ty.s)?;
    let mut cases = vec![];
    if !is_proved(&indecomposable) {
        for split in decompositions(ty.n, ty.s) {
            let pick = [split.0, split.1].into_iter().find(|t| {
                certify_minimal(t.n, t.s)
                    .map(|c| is_proved(&c))
                    .unwrap_or(false)
            });
            let follow = match pick {
                Some(t) => Some(Box::new(case_node(t)?)),
                None => None,
            };
            cases.push(Case { split, follow });
        }
    }
    Ok(CaseNode {
        ty,
        minimal,
        indecomposable,
        cases,
    })
}

/// Leaves are the types that are minimal and, at that node, taken as the
/// indecomposable alternative. `None` if some branch has no minimal summand.
fn collect(
    node: &CaseNode,
    depth: usize,
    leaves: &mut Vec<FibrationType>,
    max_depth: &mut usize,
) -> bool {
    *max_depth = (*max_depth).max(depth);
    if !is_proved(&node.minimal) {
        return false;
    }
    if !leaves.contains(&node.ty) {
        leaves.push(node.ty);
    }
    node.cases.iter().all(|c| match &c.follow {
        Some(next) => collect(next, depth + 1, leaves, max_depth),
        None => false,
    })
}

/// The case analysis behind the existence of an indecomposable minimal
/// fibration among the types `(6,7), (8,11), (10,10), (14,13)`.
pub fn theorem1_report() -> Theorem1Report {
    let root = FibrationType::new(14, 13);
    let tree = case_node(root).expect("(14, 13) is admissible");
    let mut leaves = vec![];
    let mut depth = 0;
    let complete = collect(&tree, 0, &mut leaves, &mut depth);
    leaves.sort();
    let mut steps = vec![
        Step::new(
            Rule::Construction,
            true,
            "type (14, 13) is realized by the lantern doubling of a verified (4, 3) factorization",
        ),
        Step::new(
            Rule::SignatureFormula,
            true,
            format!("σ(14, 13) = {}", signature(14, 13).unwrap()),
        ),
    ];
    steps.push(Step::new(
        Rule::SatoB2Plus,
        is_proved(&tree.minimal),
        "(14, 13) is minimal",
    ));
    fn walk(node: &CaseNode, steps: &mut Vec<Step>) {
        for case in &node.cases {
            let (a, b) = case.split;
            let text = match &case.follow {
                Some(next) => format!(
                    "{} = {a}+{b}: summand {} is minimal ({})",
                    node.ty,
                    next.ty,
                    if is_proved(&next.indecomposable) {
                        "indecomposable"
                    } else {
                        "recurse"
                    }
                ),
                None => format!("{} = {a}+{b}: no summand certified minimal", node.ty),
            };
            steps.push(Step::new(Rule::CaseSplit, case.follow.is_some(), text));
            if let Some(next) = &case.follow {
                walk(next, steps);
            }
        }
    }
    walk(&tree, &mut steps);
    let names: Vec<String> = leaves.iter().map(|t| t.to_string()).collect();
    Theorem1Report {
        claim: format!(
            "an indecomposable minimal genus-2 Lefschetz fibration exists of one of the types {}",
            names.join(", ")
        ),
        verdict: if complete {
            CertVerdict::Proved
        } else {
            CertVerdict::Unknown
        },
        justification: steps,
        leaves,
        depth,
        tree,
    }
}

/// Admissible types with `n + 2s = 10k`, `1 ≤ k ≤ max_k`, ordered by `k`
/// then `s`.
pub fn enumerate_admissible(max_k: u64) -> Vec<FibrationType> {
    let mut out = vec![];
    for k in 1..=max_k {
        for s in 0..=5 * k {
            let n = 10 * k - 2 * s;
            if admissible(n, s).passes {
                out.push(FibrationType::new(n, s));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: u64, s: u64) -> FibrationType {
        FibrationType::new(n, s)
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(6, 7), Ok(-5));
        assert_eq!(signature(0, 0), Ok(0));
        assert_eq!(signature(14, 13), Ok(-11));
        assert!(signature(1, 0).is_err());
    }

    #[test]
    fn admissibility_examples() {
        assert!(admissible(4, 3).passes);
        assert_eq!(admissible(10, 0).violations, vec![Violation::TenCase]);
        assert_eq!(admissible(4, 8).violations, vec![Violation::SlopeBound]);
    }

    #[test]
    fn sato_examples() {
        assert!(sato_oracle(14, 3).table_hit);
        assert_eq!(
            sato_oracle(14, 13),
            SatoReport {
                table_hit: false,
                b2plus1_possible: false
            }
        );
        assert_eq!(
            sato_oracle(6, 7),
            SatoReport {
                table_hit: false,
                b2plus1_possible: true
            }
        );
        assert_eq!(b2minus_lower_bound(7), 8);
    }

    #[test]
    fn minimality_examples() {
        assert_eq!(certify_minimal(6, 7).unwrap().verdict, CertVerdict::Proved);
        assert_eq!(
            certify_minimal(10, 10).unwrap().verdict,
            CertVerdict::Proved
        );
        assert_eq!(
            certify_minimal(30, 0).unwrap().verdict,
            CertVerdict::Unknown
        );
        assert!(certify_minimal(10, 0).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            decompositions(14, 13),
            vec![
                (t(6, 7), t(8, 6)),
                (t(8, 11), t(6, 2)),
                (t(10, 10), t(4, 3))
            ]
        );
        assert!(decompositions(6, 7).is_empty());
        assert_eq!(decompositions(10, 10), vec![(t(6, 7), t(4, 3))]);
    }

    #[test]
    fn theorem1_leaves() {
        let r = theorem1_report();
        assert_eq!(r.verdict, CertVerdict::Proved);
        assert_eq!(r.leaves, vec![t(6, 7), t(8, 11), t(10, 10), t(14, 13)]);
        assert_eq!(r.depth, 2);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_admissible(1), vec![t(6, 2), t(4, 3)]);
        let two = enumerate_admissible(2);
        assert!(two.contains(&t(6, 7)) && two.contains(&t(8, 6)) && !two.contains(&t(4, 8)));
    }
}
