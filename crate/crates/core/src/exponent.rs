//! Lattice points and rational points of the exponent space.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{rat_from_u64, Rat};

/// A monomial exponent vector: a lattice point of the nonnegative orthant.
///
/// Coordinates are 64-bit; every arithmetic op is checked and reports
/// overflow instead of wrapping. Ordering is lexicographic on coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(pub Vec<u64>);

impl Exponent {
    pub fn new(coords: Vec<u64>) -> Self {
        Exponent(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Exponent(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn check_dim(&self, other: &Exponent) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            })
        }
    }

    /// Divisibility of the corresponding monomials: x^self | x^other.
    pub fn divides(&self, other: &Exponent) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Componentwise sum, i.e. the product of the corresponding monomials.
    pub fn add(&self, other: &Exponent) -> Result<Exponent> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u64>>>()
            .map(Exponent)
    }

    /// Applies a coordinate permutation: result[i] = self[perm[i]].
    pub fn permute(&self, perm: &[usize]) -> Exponent {
        Exponent(perm.iter().map(|&i| self.0[i]).collect())
    }

    pub fn to_rat_vec(&self) -> RatVec {
        RatVec(self.0.iter().map(|&c| rat_from_u64(c)).collect())
    }

    pub fn to_bigint_vec(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }
}

/// A rational point of exponent space (coordinates may be negative).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVec(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    /// The point self + (1, ..., 1).
    pub fn plus_ones(&self) -> RatVec {
        RatVec(self.0.iter().map(|c| c + rat_from_u64(1)).collect())
    }

    /// Componentwise scaling by r.
    pub fn scale(&self, r: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|c| c * r).collect())
    }

    /// Exact conversion back to a lattice point, if all coordinates are
    /// nonnegative integers.
    pub fn to_exponent(&self) -> Option<Exponent> {
        use num_traits::{One, Signed};
        let mut coords = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            if !c.denom().is_one() || c.numer().is_negative() {
                return None;
            }
            coords.push(u64::try_from(c.numer()).ok()?);
        }
        Some(Exponent(coords))
    }
}

impl From<&Exponent> for RatVec {
    fn from(e: &Exponent) -> Self {
        e.to_rat_vec()
    }
}

/// Iterates every lattice point p with 0 <= p_i <= bounds[i], in
/// ascending lexicographic order.
pub fn lattice_box(bounds: Vec<u64>) -> LatticeBox {
    LatticeBox {
        next: Some(vec![0; bounds.len()]),
        bounds,
    }
}

pub struct LatticeBox {
    bounds: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for LatticeBox {
    type Item = Exponent;

    fn next(&mut self) -> Option<Exponent> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // odometer increment, rightmost coordinate fastest
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bounds[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Exponent(current))
    }
}
