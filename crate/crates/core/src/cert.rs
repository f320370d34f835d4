//! Self-checking certificates for `m_j(nK_2, C_7) = m`.

use serde::{Deserialize, Serialize};

use crate::construct::{lower_bound_coloring, verify_good, GoodReport};
use crate::formula::{ramsey_value, RamseyValue, Regime};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::host::{Coloring, PartiteShape};
use crate::search::{certify_upper_bound, ExhaustionCertificate, SearchOptions, UpperBound};
use crate::{Error, Result, TOOL_VERSION};

pub const SCHEMA: &str = "ramsey-cert/1";

/// A coloring stored by shape and red graph6, with the report it earned.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringRecord {
    pub shape: PartiteShape,
    pub red_graph6: String,
    pub report: GoodReport,
}

impl ColoringRecord {
    pub fn new(c: &Coloring, n: usize) -> Self {
        ColoringRecord {
            shape: c.shape().clone(),
            red_graph6: encode_graph6(c.red()),
            report: verify_good(c, n, 7),
        }
    }

    pub fn coloring(&self) -> Result<Coloring> {
        Ok(Coloring::new(decode_graph6(&self.red_graph6, &self.shape)?))
    }

    /// Re-runs the detectors and compares with the stored report.
    fn recheck(&self, n: usize) -> Result<GoodReport> {
        let fresh = verify_good(&self.coloring()?, n, 7);
        if fresh != self.report {
            return Err(Error::Certificate("stored report disagrees with the detectors".into()));
        }
        Ok(fresh)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum UpperEvidence {
    Exhausted { certificate: ExhaustionCertificate },
    FormulaTrusted { citation: String, reason: String },
    /// A good coloring on `K_{j×m}`: the claimed value is too small.
    Refuted { counterexample: ColoringRecord },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub j: usize,
    pub n: usize,
    pub claimed_value: RamseyValue,
    pub regime: Regime,
    pub ambiguous: bool,
    pub lower_bound: Option<ColoringRecord>,
    pub upper_bound: UpperEvidence,
    pub tool_version: String,
    pub created: String,
}

const CITATION: &str = "closed-form value for this regime";

/// Builds the lower-bound witness and attempts the exhaustive upper bound
/// on hosts with at most `max_host_edges` edges.
pub fn certify(
    j: usize,
    n: usize,
    options: &SearchOptions,
    max_host_edges: Option<usize>,
) -> Result<Certificate> {
    let eval = ramsey_value(j, n)?;
    let lower_bound = match eval.value {
        RamseyValue::Infinite => None,
        RamseyValue::Finite(_) => lower_bound_coloring(j, n)?.map(|c| ColoringRecord::new(&c, n)),
    };
    let upper_bound = match eval.value {
        RamseyValue::Infinite => UpperEvidence::FormulaTrusted {
            citation: CITATION.into(),
            reason: "no finite host exists; K_{2xt} is bipartite and never holds an odd cycle"
                .into(),
        },
        RamseyValue::Finite(_) => match certify_upper_bound(j, n, options, max_host_edges)? {
            UpperBound::Exhausted(certificate) => UpperEvidence::Exhausted { certificate },
            UpperBound::Refuted(c) => {
                UpperEvidence::Refuted { counterexample: ColoringRecord::new(&c, n) }
            }
            UpperBound::Unverified { reason, .. } => {
                UpperEvidence::FormulaTrusted { citation: CITATION.into(), reason }
            }
        },
    };
    Ok(Certificate {
        schema: SCHEMA.into(),
        j,
        n,
        claimed_value: eval.value,
        regime: eval.regime,
        ambiguous: eval.ambiguous,
        lower_bound,
        upper_bound,
        tool_version: TOOL_VERSION.into(),
        created: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
    })
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.upper_bound, UpperEvidence::Refuted { .. })
    }

    /// Checks every field that can be checked from the file alone: formula
    /// fields, the witness (detectors re-run), and the shape of the upper
    /// bound evidence. The exhaustive search itself is not repeated.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Certificate(msg));
        if self.schema != SCHEMA {
            return fail(format!("unknown schema {:?}", self.schema));
        }
        let eval = ramsey_value(self.j, self.n)?;
        if eval.value != self.claimed_value || eval.regime != self.regime {
            return fail(format!(
                "claimed {} ({}), formula gives {} ({})",
                self.claimed_value, self.regime, eval.value, eval.regime
            ));
        }
        if eval.ambiguous != self.ambiguous {
            return fail("ambiguity flag does not match the formula".into());
        }
        match (self.claimed_value, &self.lower_bound) {
            (RamseyValue::Finite(m), Some(lb)) if m >= 2 => {
                if lb.shape != PartiteShape::uniform(self.j, m - 1)? {
                    return fail(format!("lower bound lives on {}, expected t = {}", lb.shape, m - 1));
                }
                if !lb.recheck(self.n)?.is_good {
                    return fail("lower-bound coloring is not good".into());
                }
            }
            (RamseyValue::Finite(m), None) if m >= 2 => {
                return fail("missing lower-bound coloring".into());
            }
            (_, Some(_)) => return fail("unexpected lower-bound coloring".into()),
            (_, None) => {}
        }
        match (&self.upper_bound, self.claimed_value) {
            (UpperEvidence::Exhausted { certificate }, RamseyValue::Finite(m)) => {
                let c = certificate;
                if c.shape != PartiteShape::uniform(self.j, m)? || c.n != self.n {
                    return fail("exhaustion record is for a different host".into());
                }
                if c.cycle_length != 7 || c.nodes_explored == 0 {
                    return fail("exhaustion record is incomplete".into());
                }
            }
            (UpperEvidence::Refuted { counterexample }, RamseyValue::Finite(m)) => {
                if counterexample.shape != PartiteShape::uniform(self.j, m)? {
                    return fail("counterexample lives on the wrong host".into());
                }
                if !counterexample.recheck(self.n)?.is_good {
                    return fail("counterexample is not good".into());
                }
            }
            (UpperEvidence::FormulaTrusted { .. }, _) => {}
            (_, RamseyValue::Infinite) => {
                return fail("infinite values carry no search evidence".into())
            }
        }
        Ok(())
    }
}
