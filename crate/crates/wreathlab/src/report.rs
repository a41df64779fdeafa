//! Report value objects shared by the theorem checkers and the CLI.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub met: bool,
}

impl Hypothesis {
    pub fn new(name: &str, met: bool) -> Hypothesis {
        Hypothesis {
            name: name.to_string(),
            met,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "equal")]
    Equal,
    #[serde(rename = "unequal")]
    Unequal,
    /// The comparison itself was not performed (e.g. a cap was exceeded);
    /// computed-but-flagged runs keep an equal/unequal verdict instead.
    #[serde(rename = "hypothesis-unmet")]
    HypothesisUnmet,
}

/// Outcome of one theorem check. `lhs`/`rhs` are canonical textual
/// fingerprints of the two sides. For subgroup comparisons the witness is the
/// least element of the symmetric difference; for invariant-list comparisons
/// it is the first position where the lists differ.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: Verdict,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<u32>,
    pub runtime_ms: u64,
}

impl TheoremReport {
    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.iter().all(|h| h.met)
    }

    /// A genuine violation: the comparison ran, disagreed, and every
    /// hypothesis of the theorem was met.
    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Unequal && self.hypotheses_met()
    }
}

/// Outcome of a single structural condition scan, with a verifiable witness
/// element whenever the condition fails.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionWitness {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<u32>,
}

impl ConditionWitness {
    pub fn holding() -> ConditionWitness {
        ConditionWitness {
            holds: true,
            witness: None,
        }
    }

    pub fn failing(witness: u32) -> ConditionWitness {
        ConditionWitness {
            holds: false,
            witness: Some(witness),
        }
    }
}
