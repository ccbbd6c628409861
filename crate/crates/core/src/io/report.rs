use serde::{Deserialize, Serialize};

use crate::construct::CyclicParams;
use crate::verify::{Axiom, AxiomStatus, Coverage, VerificationReport};

/// Construction parameters; `n` and `m` are absent for tables loaded from a
/// file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: Option<u32>,
    pub m: Option<usize>,
    pub order: usize,
    pub coverage: Coverage,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCheck {
    pub name: Axiom,
    pub status: CheckOutcome,
    pub witness: Option<Vec<usize>>,
}

/// The verification report as written by `verify --report`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub params: ReportParams,
    pub checks: Vec<ReportCheck>,
    pub gyrocommutative: bool,
    pub subgyrogroup_count: Option<usize>,
    pub gyroauto_order: usize,
}

impl ReportDocument {
    pub fn new(
        params: Option<CyclicParams>,
        report: &VerificationReport,
        subgyrogroup_count: Option<usize>,
        gyroauto_order: usize,
    ) -> Self {
        ReportDocument {
            params: ReportParams {
                n: params.map(|p| p.n()),
                m: params.map(|p| p.m()),
                order: report.order,
                coverage: report.coverage.clone(),
            },
            checks: report
                .checks
                .iter()
                .map(|c| ReportCheck {
                    name: c.axiom,
                    status: match c.status {
                        AxiomStatus::Pass => CheckOutcome::Pass,
                        AxiomStatus::Fail { .. } => CheckOutcome::Fail,
                    },
                    witness: c.status.witness().map(<[usize]>::to_vec),
                })
                .collect(),
            gyrocommutative: report.is_gyrocommutative(),
            subgyrogroup_count,
            gyroauto_order,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckOutcome::Pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per check, for the terminal.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        match (self.params.n, self.params.m) {
            (Some(n), Some(m)) => {
                out.push_str(&format!("G2({n}): order {}, m = {m}\n", self.params.order))
            }
            _ => out.push_str(&format!("order {}\n", self.params.order)),
        }
        if let Coverage::Sampled { seed, samples } = self.params.coverage {
            out.push_str(&format!(
                "triple checks sampled: {samples} triples, seed {seed}\n"
            ));
        }
        for c in &self.checks {
            match &c.witness {
                None => out.push_str(&format!("  pass  {}\n", c.name)),
                Some(w) => out.push_str(&format!(
                    "  FAIL  {} witness {:?}  {}\n",
                    c.name,
                    w,
                    c.name.witness_shape()
                )),
            }
        }
        out.push_str(&format!("gyrocommutative = {}\n", self.gyrocommutative));
        if let Some(k) = self.subgyrogroup_count {
            out.push_str(&format!("subgyrogroups = {k}\n"));
        }
        out.push_str(&format!(
            "gyroautomorphism group order = {}\n",
            self.gyroauto_order
        ));
        out
    }
}
