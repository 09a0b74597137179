//! Super-space data: `n = 2p + q`, the sign `ε`, the index involution and
//! the super-identity matrix `J`.
//!
//! Indices are 0-based internally. The involution pairs `(0,1), (2,3), …,
//! (2p-2, 2p-1)` and fixes `2p..n`. Per-index signs are read off the columns
//! of `J` via `J e_i = ε(i) e_ī`.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;

    fn try_from(v: i8) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidInput(format!("sign must be +1 or -1, got {v}"))),
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidInput(format!("sign must be +1 or -1, got {other:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpaceJson", into = "SpaceJson")]
pub struct SuperSpace {
    p: usize,
    q: usize,
    eps: Sign,
    bar: Vec<usize>,
    eps_of: Vec<i8>,
}

impl SuperSpace {
    pub fn new(p: usize, q: usize, eps: Sign) -> Result<Self> {
        if eps == Sign::Minus && q > 0 {
            return Err(Error::InvalidSignature { p, q, eps: eps.value() });
        }
        let n = 2 * p + q;
        let bar: Vec<usize> = (0..n).map(|i| if i < 2 * p { i ^ 1 } else { i }).collect();
        let mut space = SuperSpace { p, q, eps, bar, eps_of: Vec::new() };
        let j: Matrix<i64> = space.super_identity();
        space.eps_of = (0..n).map(|i| j[(space.bar[i], i)] as i8).collect();
        Ok(space)
    }

    /// The classical space `ℂⁿ` with `J = 1`.
    pub fn classical(n: usize) -> Self {
        Self::new(0, n, Sign::Plus).expect("eps = +1 is always valid")
    }

    /// Every valid signature with `1 <= n <= max_n`, ordered by `n`, then
    /// `ε = +1` before `ε = -1`, then decreasing `p`.
    pub fn all_up_to(max_n: usize) -> Vec<SuperSpace> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for p in (0..=n / 2).rev() {
                out.push(Self::new(p, n - 2 * p, Sign::Plus).unwrap());
            }
            if n % 2 == 0 {
                out.push(Self::new(n / 2, 0, Sign::Minus).unwrap());
            }
        }
        out
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        2 * self.p + self.q
    }

    pub fn epsilon(&self) -> Sign {
        self.eps
    }

    /// The involution `i ↦ ī`.
    pub fn bar(&self, i: usize) -> usize {
        self.bar[i]
    }

    /// The sign `ε(i)` defined by `J e_i = ε(i) e_ī`.
    pub fn sign_of(&self, i: usize) -> i8 {
        self.eps_of[i]
    }

    /// `J_{ij} = δ_{i j̄}` above and on the diagonal, `ε δ_{i j̄}` below it.
    pub fn super_identity<T: Clone + Zero + One + Neg<Output = T>>(&self) -> Matrix<T> {
        let eps = self.eps;
        Matrix::from_fn(self.n(), self.n(), |i, j| {
            if i != self.bar[j] {
                T::zero()
            } else if i > j && eps == Sign::Minus {
                -T::one()
            } else {
                T::one()
            }
        })
    }

    /// The all-ones vector `ξ` mapped by `J`.
    pub fn j_xi(&self) -> Vec<i64> {
        (0..self.n()).map(|i| self.sign_of(self.bar(i)) as i64).collect()
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={},q={},eps={})", self.p, self.q, self.eps)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SpaceJson {
    p: usize,
    q: usize,
    eps: Sign,
}

impl From<SuperSpace> for SpaceJson {
    fn from(s: SuperSpace) -> Self {
        SpaceJson { p: s.p, q: s.q, eps: s.eps }
    }
}

impl TryFrom<SpaceJson> for SuperSpace {
    type Error = Error;

    fn try_from(j: SpaceJson) -> Result<Self> {
        SuperSpace::new(j.p, j.q, j.eps)
    }
}
