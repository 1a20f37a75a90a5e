//! Parameters of the complexes Δ^m_W for W = A_{n-1} and W = B_n.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => f.write_str("A"),
            Family::B => f.write_str("B"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        }
    }
}

/// Family, multiplicity `m` and size `n`.
///
/// Family `A` with size `n` stands for the Weyl group A_{n-1} acting on an
/// (mn+2)-gon; family `B` stands for B_n acting on a centrally symmetric
/// (2mn+2)-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexParams {
    family: Family,
    m: u32,
    n: u32,
}

impl ComplexParams {
    pub fn new(family: Family, m: u32, n: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParams(format!("multiplicity m must be >= 1, got {m}")));
        }
        if n < 1 {
            return Err(Error::InvalidParams(format!("size n must be >= 1, got {n}")));
        }
        // Keeps polygon sizes comfortably inside u32 arithmetic.
        if (m as u64) * (n as u64) > 1 << 20 {
            return Err(Error::InvalidParams(format!("m*n = {} is too large", m as u64 * n as u64)));
        }
        Ok(Self { family, m, n })
    }

    pub fn a(m: u32, n: u32) -> Result<Self> {
        Self::new(Family::A, m, n)
    }

    pub fn b(m: u32, n: u32) -> Result<Self> {
        Self::new(Family::B, m, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Rank of the Weyl group: n-1 for A_{n-1}, n for B_n.
    pub fn rank(&self) -> u32 {
        match self.family {
            Family::A => self.n - 1,
            Family::B => self.n,
        }
    }

    /// Number of diagonals in a facet; equals the rank.
    pub fn facet_size(&self) -> usize {
        self.rank() as usize
    }

    /// Dimension of the complex, `rank - 1`.
    pub fn dimension(&self) -> i64 {
        self.rank() as i64 - 1
    }

    /// Number of polygon vertices.
    pub fn polygon_size(&self) -> u32 {
        match self.family {
            Family::A => self.m * self.n + 2,
            Family::B => 2 * self.m * self.n + 2,
        }
    }

    /// Offset of the mirror map in family B (`mn + 1`).
    pub fn half(&self) -> u32 {
        self.m * self.n + 1
    }
}

impl fmt::Display for ComplexParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "Δ^{}_A{}", self.m, self.n - 1),
            Family::B => write!(f, "Δ^{}_B{}", self.m, self.n),
        }
    }
}
