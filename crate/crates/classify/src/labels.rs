//! Orbit labels.

use std::fmt;
use std::str::FromStr;

use conet_cubics::InvariantKey;

use crate::ClassifyError;

/// Orbits of nets, named by dimension and position in the orbit table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NetLabel {
    L8a,
    L8b,
    L8c,
    L7a,
    L7b,
    L7c,
    L6a,
    L6b,
    L6c,
    L6d,
    L5a,
    L5b,
    L4,
    L2a,
    L2b,
}

impl NetLabel {
    pub const ALL: [NetLabel; 15] = [
        NetLabel::L8a,
        NetLabel::L8b,
        NetLabel::L8c,
        NetLabel::L7a,
        NetLabel::L7b,
        NetLabel::L7c,
        NetLabel::L6a,
        NetLabel::L6b,
        NetLabel::L6c,
        NetLabel::L6d,
        NetLabel::L5a,
        NetLabel::L5b,
        NetLabel::L4,
        NetLabel::L2a,
        NetLabel::L2b,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NetLabel::L8a => "8a",
            NetLabel::L8b => "8b",
            NetLabel::L8c => "8c",
            NetLabel::L7a => "7a",
            NetLabel::L7b => "7b",
            NetLabel::L7c => "7c",
            NetLabel::L6a => "6a",
            NetLabel::L6b => "6b",
            NetLabel::L6c => "6c",
            NetLabel::L6d => "6d",
            NetLabel::L5a => "5a",
            NetLabel::L5b => "5b",
            NetLabel::L4 => "4",
            NetLabel::L2a => "2a",
            NetLabel::L2b => "2b",
        }
    }

    /// The orbit dimension encoded in the label.
    pub fn dimension(self) -> usize {
        self.as_str()[..1].parse().expect("labels start with a digit")
    }

    /// The label of the complementary net.
    pub fn dual(self) -> NetLabel {
        use NetLabel::*;
        match self {
            L8a => L8c,
            L8c => L8a,
            L7a => L7c,
            L7c => L7a,
            L6a => L6d,
            L6d => L6a,
            L6b => L6c,
            L6c => L6b,
            L5a => L5b,
            L5b => L5a,
            L2a => L2b,
            L2b => L2a,
            other => other,
        }
    }
}

impl fmt::Display for NetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NetLabel {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NetLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| ClassifyError::InvalidInput(format!("unknown net label {s:?}")))
    }
}

/// A net orbit; the smooth family carries the key of its preimage cubic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NetOrbit {
    pub label: NetLabel,
    pub key: Option<InvariantKey>,
}

impl fmt::Display for NetOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.key {
            Some(k) => write!(f, "{}{k}", self.label),
            None => write!(f, "{}", self.label),
        }
    }
}

/// Orbits of pencils.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PencilType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl PencilType {
    pub const ALL: [PencilType; 8] =
        [PencilType::A, PencilType::B, PencilType::C, PencilType::D, PencilType::E, PencilType::F, PencilType::G, PencilType::H];

    pub fn as_str(self) -> &'static str {
        ["a", "b", "c", "d", "e", "f", "g", "h"][self as usize]
    }
}

impl fmt::Display for PencilType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PencilType {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PencilType::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| ClassifyError::InvalidInput(format!("unknown pencil type {s:?}")))
    }
}
