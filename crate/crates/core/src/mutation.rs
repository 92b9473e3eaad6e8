//! Deliberate defects that the law suites must detect.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Composition in an underlying multicategory skips the reassociating
    /// isomorphism `φ`.
    DropPhi,
    /// The counit skips the sorting permutation `σ_f`.
    DropSigmaF,
    /// The first equivariance check forgets the block permutation.
    DropBlockPerm,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::DropPhi,
        Mutation::DropSigmaF,
        Mutation::DropBlockPerm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::DropPhi => "drop-phi",
            Mutation::DropSigmaF => "drop-sigma-f",
            Mutation::DropBlockPerm => "drop-block-perm",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mutation {s:?}")))
    }
}
