//! Exact rationals and coweights in the fundamental-coweight basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

#[inline]
pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(numer, denom)
}

#[inline]
pub fn int(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn floor(x: Q) -> i64 {
    x.floor().to_integer()
}

pub fn ceil(x: Q) -> i64 {
    x.ceil().to_integer()
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: Q) -> Q {
    x - x.floor()
}

/// Always `p/q`, including integers (`2/1`, `0/1`).
pub fn format_q(x: Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    let t = s.trim();
    let (p, d) = match t.split_once('/') {
        Some((p, d)) => (p.trim(), d.trim()),
        None => (t, "1"),
    };
    let p: i64 = p.parse().map_err(|_| err("numerator is not an integer"))?;
    let d: i64 = d.parse().map_err(|_| err("denominator is not an integer"))?;
    if d <= 0 {
        return Err(err("denominator must be positive"));
    }
    Ok(q(p, d))
}

/// A rational coweight `Σ θ^(α) ω_α∨`, stored by its fundamental-coweight
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight(Vec<Q>);

impl Coweight {
    pub fn new(coords: Vec<Q>) -> Self {
        Coweight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![Q::zero(); rank])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Coweight(coords.iter().map(|&c| int(c)).collect())
    }

    /// The fundamental coweight `ω∨` of simple root `k` (0-based).
    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut c = vec![Q::zero(); rank];
        c[k] = Q::one();
        Coweight(c)
    }

    /// Parses comma-separated `p/q` coordinates.
    pub fn parse(s: &str) -> Result<Self> {
        s.split(',').map(parse_q).collect::<Result<Vec<_>>>().map(Coweight)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn coord(&self, k: usize) -> Q {
        self.0[k]
    }

    pub fn scale(&self, s: Q) -> Self {
        Coweight(self.0.iter().map(|c| c * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Ratio::is_integer)
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.0.iter().fold(1i64, |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coordinates; `None` unless [`Coweight::is_integral`].
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(Signed::is_negative)
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.rank(), rhs.rank(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.rank(), rhs.rank(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| format_q(*c)).collect();
        write!(f, "({})", parts.join(", "))
    }
}
