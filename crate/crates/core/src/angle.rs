//! Exact sector angles around a single vertex.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A sector angle in degrees, stored as an exact positive rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(BigRational);

impl Angle {
    pub fn new(degrees: BigRational) -> Result<Self> {
        if degrees.is_positive() {
            Ok(Angle(degrees))
        } else {
            Err(Error::NonPositiveAngle(degrees.to_string()))
        }
    }

    pub fn from_integer(degrees: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(BigInt::from(degrees)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::NonPositiveAngle(format!("{numer}/0")));
        }
        Self::new(BigRational::new(numer.into(), denom.into()))
    }

    pub fn degrees(&self) -> &BigRational {
        &self.0
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// Angles sum to exactly 360 degrees.
    Flat,
    /// Vertex at the apex of a cone; any other positive total.
    Cone,
}

/// Consecutive sector angles around one vertex. Sector `i` lies between
/// crease `i` and crease `i + 1`; indexing is cyclic.
///
/// Sequences extracted from coordinates whose angles are not rational
/// degree measures carry rational approximations and are flagged inexact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AngleSequence {
    angles: Vec<Angle>,
    exact: bool,
}

impl AngleSequence {
    pub fn new(angles: Vec<Angle>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(AngleSequence {
            angles,
            exact: true,
        })
    }

    /// Builds a sequence whose values only approximate the true angles.
    pub fn approximate(angles: Vec<Angle>) -> Result<Self> {
        let mut seq = Self::new(angles)?;
        seq.exact = false;
        Ok(seq)
    }

    pub fn from_degrees(degrees: &[i64]) -> Result<Self> {
        degrees
            .iter()
            .map(|&d| Angle::from_integer(d))
            .collect::<Result<Vec<_>>>()
            .and_then(Self::new)
    }

    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Cyclic access: any index is reduced modulo the length.
    pub fn get(&self, index: isize) -> &Angle {
        let n = self.angles.len() as isize;
        &self.angles[index.rem_euclid(n) as usize]
    }

    pub fn total(&self) -> BigRational {
        self.angles
            .iter()
            .fold(BigRational::zero(), |acc, a| acc + a.degrees())
    }

    pub fn kind(&self) -> SequenceKind {
        if self.total() == BigRational::from_integer(360.into()) {
            SequenceKind::Flat
        } else {
            SequenceKind::Cone
        }
    }

    pub fn all_equal(&self) -> bool {
        self.angles.windows(2).all(|w| w[0] == w[1])
    }

    /// The same vertex read starting at sector `shift`.
    pub fn rotated(&self, shift: usize) -> Self {
        let mut angles = self.angles.clone();
        angles.rotate_left(shift % self.angles.len());
        AngleSequence {
            angles,
            exact: self.exact,
        }
    }

    /// The same vertex read clockwise.
    pub fn reversed(&self) -> Self {
        let mut angles = self.angles.clone();
        angles.reverse();
        AngleSequence {
            angles,
            exact: self.exact,
        }
    }
}

impl fmt::Display for AngleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.angles.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}
