use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MvLabel {
    #[serde(rename = "M")]
    Mountain,
    #[serde(rename = "V")]
    Valley,
}

impl MvLabel {
    pub fn flipped(self) -> Self {
        match self {
            MvLabel::Mountain => MvLabel::Valley,
            MvLabel::Valley => MvLabel::Mountain,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            MvLabel::Mountain => 1,
            MvLabel::Valley => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            MvLabel::Mountain => 'M',
            MvLabel::Valley => 'V',
        }
    }
}

/// Mountain/valley labels, one per crease, in crease order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MvAssignment(Vec<MvLabel>);

impl MvAssignment {
    pub fn new(labels: Vec<MvLabel>) -> Self {
        MvAssignment(labels)
    }

    /// Bit `j` of `mask` set means crease `j` is a mountain.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        MvAssignment(
            (0..len)
                .map(|j| {
                    if mask >> j & 1 == 1 {
                        MvLabel::Mountain
                    } else {
                        MvLabel::Valley
                    }
                })
                .collect(),
        )
    }

    pub fn labels(&self) -> &[MvLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> MvLabel {
        self.0[index % self.0.len()]
    }

    pub fn mountains(&self) -> usize {
        self.0.iter().filter(|&&l| l == MvLabel::Mountain).count()
    }

    pub fn valleys(&self) -> usize {
        self.0.len() - self.mountains()
    }

    /// M − V over all creases.
    pub fn tally(&self) -> i64 {
        self.0.iter().map(|l| l.sign()).sum()
    }

    pub fn flipped(&self) -> Self {
        MvAssignment(self.0.iter().map(|l| l.flipped()).collect())
    }

    pub fn ensure_len(&self, expected: usize) -> Result<()> {
        if self.0.len() == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected,
                found: self.0.len(),
            })
        }
    }
}

impl FromStr for MvAssignment {
    type Err = Error;

    /// Accepts letters `M`/`V` in either case; nothing else.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'M' => Ok(MvLabel::Mountain),
                'V' => Ok(MvLabel::Valley),
                _ => Err(Error::InvalidLabel(format!(
                    "unexpected character {c:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(MvAssignment)
    }
}

impl fmt::Display for MvAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.letter())?;
        }
        Ok(())
    }
}
