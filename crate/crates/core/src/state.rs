//! JSON state files.
//!
//! A state file is a single object holding either `(q, p)` or
//! `(lambda, phi)`, never both:
//!
//! ```json
//! {"n": 2, "g": 1.0, "q": [1.0, -1.0], "p": [0.0, 0.0]}
//! {"n": 2, "g": 1.0, "lambda": [0.5, -0.5], "phi": [0.0, 0.0]}
//! ```
//!
//! Numbers are written in shortest round-trip form, so finite doubles
//! survive a write/read cycle bit for bit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{ActionAnglePoint, PhaseSpacePoint};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhaseRecord {
    n: usize,
    g: f64,
    q: Vec<f64>,
    p: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionAngleRecord {
    n: usize,
    g: f64,
    lambda: Vec<f64>,
    phi: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Record {
    Phase(PhaseRecord),
    ActionAngle(ActionAngleRecord),
}

/// Either kind of state, validated.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Phase(PhaseSpacePoint),
    ActionAngle(ActionAnglePoint),
}

#[derive(Debug, thiserror::Error)]
pub enum StateError {
    #[error("malformed state JSON: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("state must be an object with exactly one of the pairs (q, p) or (lambda, phi), plus n and g")]
    Shape,
    #[error("declared n = {declared} but arrays have length {actual}")]
    CountMismatch { declared: usize, actual: usize },
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl State {
    pub fn n(&self) -> usize {
        match self {
            State::Phase(pt) => pt.n(),
            State::ActionAngle(aa) => aa.n(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, StateError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| StateError::Syntax {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
        let record: Record = serde_json::from_value(value).map_err(|_| StateError::Shape)?;
        let check = |declared: usize, actual: usize| {
            if declared == actual {
                Ok(())
            } else {
                Err(StateError::CountMismatch { declared, actual })
            }
        };
        match record {
            Record::Phase(r) => {
                check(r.n, r.q.len())?;
                Ok(State::Phase(PhaseSpacePoint::new(r.q, r.p, r.g)?))
            }
            Record::ActionAngle(r) => {
                check(r.n, r.lambda.len())?;
                Ok(State::ActionAngle(ActionAnglePoint::new(
                    r.lambda, r.phi, r.g,
                )?))
            }
        }
    }

    fn record(&self) -> Record {
        match self {
            State::Phase(pt) => Record::Phase(PhaseRecord {
                n: pt.n(),
                g: pt.g(),
                q: pt.q().to_vec(),
                p: pt.p().to_vec(),
            }),
            State::ActionAngle(aa) => Record::ActionAngle(ActionAngleRecord {
                n: aa.n(),
                g: aa.g(),
                lambda: aa.lambda().to_vec(),
                phi: aa.phi().to_vec(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("finite state serializes")
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.record()).expect("finite state serializes")
    }
}

impl From<PhaseSpacePoint> for State {
    fn from(pt: PhaseSpacePoint) -> Self {
        State::Phase(pt)
    }
}

impl From<ActionAnglePoint> for State {
    fn from(aa: ActionAnglePoint) -> Self {
        State::ActionAngle(aa)
    }
}
