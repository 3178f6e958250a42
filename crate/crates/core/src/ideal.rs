//! Monomial ideals in canonical form.
//!
//! A monomial ideal is stored by its unique minimal generating set: an
//! antichain under componentwise divisibility, sorted in descending
//! lexicographic order. Two values compare equal iff they are the same
//! ideal. The zero ideal is the empty generator list; the unit ideal is
//! generated by the zero exponent.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `generators`, reducing them to the
    /// canonical minimal antichain.
    pub fn new(dim: usize, generators: Vec<Exponent>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
        }
        let distinct: BTreeSet<Exponent> = generators.into_iter().collect();
        let mut minimal: Vec<Exponent> = Vec::new();
        for g in &distinct {
            let redundant = distinct
                .iter()
                .any(|f| f != g && f.divides(g).expect("dims already checked"));
            if !redundant {
                minimal.push(g.clone());
            }
        }
        // descending lex: the canonical order used for every emitted list
        minimal.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal {
            dim,
            generators: minimal,
        })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, Vec::new())
    }

    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(dim, vec![Exponent::zero(dim)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    /// Membership of the monomial x^e.
    pub fn contains(&self, e: &Exponent) -> Result<bool> {
        if e.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: e.dim(),
            });
        }
        for g in &self.generators {
            if g.divides(e)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Ideal containment: every monomial of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The product ideal, generated by all pairwise sums of generators.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.dim);
        }
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.add(b)?);
            }
        }
        MonomialIdeal::new(self.dim, sums)
    }

    /// The m-th power, m >= 1.
    pub fn pow(&self, m: u32) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::NonPositiveExponent);
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The ideal with coordinates permuted: generator g becomes g∘perm.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: perm.len(),
            });
        }
        let gens = self.generators.iter().map(|g| g.permute(perm)).collect();
        MonomialIdeal::new(self.dim, gens)
    }

    /// Per-axis maximum of generator coordinates; zeros for the zero ideal.
    pub fn coordinate_maxima(&self) -> Vec<u64> {
        let mut maxima = vec![0u64; self.dim];
        for g in &self.generators {
            for (m, &c) in maxima.iter_mut().zip(g.coords()) {
                *m = (*m).max(c);
            }
        }
        maxima
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    nvars: usize,
    generators: Vec<Vec<u64>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            nvars: self.dim,
            generators: self.generators.iter().map(|g| g.coords().to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(deserializer)?;
        let gens = repr.generators.into_iter().map(Exponent::new).collect();
        MonomialIdeal::new(repr.nvars, gens).map_err(D::Error::custom)
    }
}
