//! Named identities checked exactly on finite parameter ranges.
//!
//! Each check has two tiers. The theorem path recomputes everything from
//! first principles (polynomial products against independently assembled
//! right-hand sides, and expansion coefficients through the `represent`
//! module) and decides the verdict. The printed-form tier evaluates the
//! closed forms exactly as they are usually displayed; a disagreement there
//! is reported with a witness but never fails a run.

mod build;
mod checks;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::LambdaMode;
use crate::parallel::{self, Execution};
use crate::represent::json::{lambda_to_json, poly_to_json_any, AnyPoly};

pub use build::{build_polynomial, compositions, omega, Construction, Rows};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Eq2a,
    MikiVariantX0,
    FpzVariantXhalf,
    Eq1e,
    Eq7e,
    NielsenEe,
    NielsenBb,
    S5a,
    S5b,
    S5c,
    S5d,
    S5e,
    S6a,
    S6b,
    S6c,
    S6d,
    S6e,
}

impl IdentityId {
    pub const ALL: [IdentityId; 17] = [
        IdentityId::Eq2a,
        IdentityId::MikiVariantX0,
        IdentityId::FpzVariantXhalf,
        IdentityId::Eq1e,
        IdentityId::Eq7e,
        IdentityId::NielsenEe,
        IdentityId::NielsenBb,
        IdentityId::S5a,
        IdentityId::S5b,
        IdentityId::S5c,
        IdentityId::S5d,
        IdentityId::S5e,
        IdentityId::S6a,
        IdentityId::S6b,
        IdentityId::S6c,
        IdentityId::S6d,
        IdentityId::S6e,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::Eq2a => "EQ2A",
            IdentityId::MikiVariantX0 => "MIKI_VARIANT_X0",
            IdentityId::FpzVariantXhalf => "FPZ_VARIANT_XHALF",
            IdentityId::Eq1e => "EQ1E",
            IdentityId::Eq7e => "EQ7E",
            IdentityId::NielsenEe => "NIELSEN_EE",
            IdentityId::NielsenBb => "NIELSEN_BB",
            IdentityId::S5a => "S5A",
            IdentityId::S5b => "S5B",
            IdentityId::S5c => "S5C",
            IdentityId::S5d => "S5D",
            IdentityId::S5e => "S5E",
            IdentityId::S6a => "S6A",
            IdentityId::S6b => "S6B",
            IdentityId::S6c => "S6C",
            IdentityId::S6d => "S6D",
            IdentityId::S6e => "S6E",
        }
    }

    /// One-line statement of what is checked and on which domain.
    pub fn description(self) -> &'static str {
        match self {
            IdentityId::Eq2a => "even/odd split of the Bernoulli product sum at 2n, n >= 2",
            IdentityId::MikiVariantX0 => "the EQ2A display evaluated at x = 0, n >= 2",
            IdentityId::FpzVariantXhalf => "the EQ2A display evaluated at x = 1/2, n >= 2",
            IdentityId::Eq1e => "sum B_k(x)B_{n-k}(x)/(k(n-k)) in the Bernoulli basis, n >= 2",
            IdentityId::Eq7e => "sum G_k(x)G_{n-k}(x)/(k(n-k)) in the Bernoulli basis, n >= 2",
            IdentityId::NielsenEe => "E_m(x)E_n(x) in the Bernoulli basis, m, n >= 0",
            IdentityId::NielsenBb => "B_m(x)B_n(x) in the Bernoulli basis, m, n >= 1",
            IdentityId::S5a => "B_n(x) in the order-r ordered Bell basis",
            IdentityId::S5b => "sum B_k(x)B_{n-k}(x)/(k(n-k)) in the ordered Bell basis, n >= 2",
            IdentityId::S5c => "s-fold ordered Bell composition sum in the ordered Bell basis, s >= 1",
            IdentityId::S5d => "sum G_k(x)G_{n-k}(x)/(k(n-k)) in the order-r ordered Bell basis, n >= 2",
            IdentityId::S5e => "E_m(x)E_n(x) in the order-r ordered Bell basis",
            IdentityId::S6a => "E_n(x) in the order-r degenerate ordered Bell basis",
            IdentityId::S6b => "b_n(x) in the order-r degenerate ordered Bell basis",
            IdentityId::S6c => "s-fold ordered Bell composition sum in the order-r degenerate basis",
            IdentityId::S6d => "B_m(x)B_n(x) in the order-r degenerate ordered Bell basis, m, n >= 1",
            IdentityId::S6e => "positive s-fold Genocchi composition sum in the order-r degenerate basis, n >= s",
        }
    }

    /// Whether the identity is stated for a degenerate basis and so needs λ.
    pub fn uses_lambda(self) -> bool {
        matches!(self, IdentityId::S6a | IdentityId::S6b | IdentityId::S6c | IdentityId::S6d | IdentityId::S6e)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(format!("unknown identity {s:?}")))
    }
}

/// Parameter assignment for one check. Unused fields stay `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    pub m: Option<usize>,
    pub s: Option<usize>,
    pub r: Option<usize>,
    pub lambda: LambdaMode,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params { n, m: None, s: None, r: None, lambda: LambdaMode::NotApplicable }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_s(mut self, s: usize) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_lambda(mut self, lambda: LambdaMode) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        if let Some(m) = self.m {
            map.insert("m".into(), json!(m));
        }
        map.insert("n".into(), json!(self.n));
        if let Some(s) = self.s {
            map.insert("s".into(), json!(s));
        }
        if let Some(r) = self.r {
            map.insert("r".into(), json!(r));
        }
        map.insert("lambda".into(), json!(lambda_to_json(&self.lambda)));
        Value::Object(map)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(m) = self.m {
            write!(f, "m={m} ")?;
        }
        write!(f, "n={}", self.n)?;
        if let Some(s) = self.s {
            write!(f, " s={s}")?;
        }
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        if self.lambda.is_applicable() {
            write!(f, " lambda={}", self.lambda)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Params,
    pub theorem_path: Verdict,
    /// `None` when no printed closed form exists for this identity.
    pub printed_form: Option<Verdict>,
    /// `LHS - RHS` (or the reconstructed coefficient difference) on a
    /// theorem-path mismatch.
    pub witness: Option<AnyPoly>,
    /// The same for the first failing printed form.
    pub printed_witness: Option<AnyPoly>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.theorem_path == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id.tag(),
            "params": self.params.to_json(),
            "theorem_path": self.theorem_path.as_str(),
            "printed_form": self.printed_form.map_or("n/a", Verdict::as_str),
            "witness": self.witness.as_ref().map(poly_to_json_any),
            "printed_witness": self.printed_witness.as_ref().map(poly_to_json_any),
            "notes": self.notes,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

/// Checks one identity instance.
pub fn verify(id: IdentityId, params: &Params) -> Result<IdentityReport> {
    let start = Instant::now();
    let outcome = checks::run(id, params)?;
    Ok(IdentityReport {
        id,
        params: params.clone(),
        theorem_path: outcome.theorem.verdict(),
        printed_form: outcome.printed.as_ref().map(checks::Check::verdict),
        witness: outcome.theorem.witness,
        printed_witness: outcome.printed.and_then(|c| c.witness),
        notes: outcome.notes,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Largest number of parts used for the composition-sum identities.
pub const MAX_PARTS: usize = 4;

/// Ranges for [`run_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Identities to run; empty means all.
    pub filter: Vec<IdentityId>,
    pub max_n: usize,
    pub r_max: usize,
    pub lambda_modes: Vec<LambdaMode>,
    pub execution: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            filter: Vec::new(),
            max_n: 8,
            r_max: 3,
            lambda_modes: default_lambda_modes(),
            execution: Execution::default(),
        }
    }
}

/// Symbolic λ and the two specializations 1/3 and -2/5.
pub fn default_lambda_modes() -> Vec<LambdaMode> {
    use crate::exact::combin::rat;
    vec![LambdaMode::Symbolic, LambdaMode::Specialized(rat(1, 3)), LambdaMode::Specialized(rat(-2, 5))]
}

/// Every `(id, params)` the suite visits, in report order.
pub fn suite_cases(config: &SuiteConfig) -> Vec<(IdentityId, Params)> {
    let ids: Vec<IdentityId> =
        IdentityId::ALL.into_iter().filter(|id| config.filter.is_empty() || config.filter.contains(id)).collect();
    let max_n = config.max_n;
    let rs = 0..=config.r_max;
    let mut cases = Vec::new();
    for id in ids {
        let mut push = |p: Params| cases.push((id, p));
        match id {
            IdentityId::Eq2a
            | IdentityId::MikiVariantX0
            | IdentityId::FpzVariantXhalf
            | IdentityId::Eq1e
            | IdentityId::Eq7e
            | IdentityId::S5b => (2..=max_n).for_each(|n| push(Params::n(n))),
            IdentityId::NielsenEe | IdentityId::NielsenBb => {
                let low = usize::from(id == IdentityId::NielsenBb);
                for total in 0..=max_n {
                    for m in low..=total {
                        if total - m >= low {
                            push(Params::n(total - m).with_m(m));
                        }
                    }
                }
            }
            IdentityId::S5a => (0..=max_n).for_each(|n| rs.clone().for_each(|r| push(Params::n(n).with_r(r)))),
            IdentityId::S5c => {
                (1..=MAX_PARTS).for_each(|s| (0..=max_n).for_each(|n| push(Params::n(n).with_s(s))))
            }
            IdentityId::S5d => (2..=max_n).for_each(|n| rs.clone().for_each(|r| push(Params::n(n).with_r(r)))),
            IdentityId::S5e => {
                for total in 0..=max_n {
                    for m in 0..=total {
                        rs.clone().for_each(|r| push(Params::n(total - m).with_m(m).with_r(r)));
                    }
                }
            }
            _ => {
                for lambda in &config.lambda_modes {
                    if !lambda.is_applicable() {
                        continue;
                    }
                    for r in rs.clone() {
                        let base = |n: usize| Params::n(n).with_r(r).with_lambda(lambda.clone());
                        match id {
                            IdentityId::S6a | IdentityId::S6b => (0..=max_n).for_each(|n| push(base(n))),
                            IdentityId::S6c => {
                                (1..=MAX_PARTS).for_each(|s| (0..=max_n).for_each(|n| push(base(n).with_s(s))))
                            }
                            IdentityId::S6d => {
                                for total in 2..=max_n {
                                    (1..total).for_each(|m| push(base(total - m).with_m(m)));
                                }
                            }
                            IdentityId::S6e => {
                                (1..=MAX_PARTS).for_each(|s| (s..=max_n).for_each(|n| push(base(n).with_s(s))))
                            }
                            _ => unreachable!("handled above"),
                        }
                    }
                }
            }
        }
    }
    cases
}

/// Runs every case of the configuration; reports come back in the order of
/// [`suite_cases`] whichever execution mode is used.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    let cases = suite_cases(config);
    parallel::map(&cases, config.execution, |(id, params)| verify(*id, params)).into_iter().collect()
}

/// Passes iff every theorem-path comparison passes.
pub fn suite_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}

/// The full report document.
pub fn reports_to_json(reports: &[IdentityReport]) -> Value {
    let printed_mismatches = reports.iter().filter(|r| r.printed_form == Some(Verdict::Mismatch)).count();
    json!({
        "status": if suite_passed(reports) { "pass" } else { "mismatch" },
        "total": reports.len(),
        "theorem_path_mismatches": reports.iter().filter(|r| !r.passed()).count(),
        "printed_form_mismatches": printed_mismatches,
        "reports": reports.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
    })
}
