//! Log canonical thresholds and threshold experiments.
//!
//! The threshold of a nonzero monomial ideal is read off the facet
//! system: the minimum over facets with positive offset of
//! (sum of normal entries) / offset. It is the reciprocal of the
//! remoteness, the diagonal coordinate where t*(1, ..., 1) enters the
//! region. Thresholds are reported uncapped; `trivial_at_one` records
//! whether the coefficient-1 multiplier ideal is already the unit ideal,
//! which is the information a cap at 1 would have carried.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exponent::{lattice_box, Exponent};
use crate::ideal::MonomialIdeal;
use crate::multiplier::multiplier_ideal;
use crate::polyhedron::{Facet, NewtonPolyhedron};
use crate::rat::{rat_to_string, Rat};

/// A threshold value; infinite exactly for the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rat),
    Infinite,
}

impl Threshold {
    pub fn finite(&self) -> Option<Rat> {
        match self {
            Threshold::Finite(r) => Some(r.clone()),
            Threshold::Infinite => None,
        }
    }
}

/// Threshold data of one ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LctResult {
    pub threshold: Threshold,
    /// Diagonal coordinate where the polyhedron meets t*(1, ..., 1);
    /// zero for the unit ideal, otherwise the reciprocal of the threshold.
    pub remoteness: Rat,
    /// The facet attaining the threshold, first in facet order.
    pub witness: Option<Facet>,
    /// Whether the coefficient-1 multiplier ideal is the unit ideal.
    pub trivial_at_one: bool,
}

impl Serialize for LctResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LctResult", 4)?;
        let t = match &self.threshold {
            Threshold::Finite(r) => rat_to_string(r),
            Threshold::Infinite => "inf".into(),
        };
        s.serialize_field("t", &t)?;
        s.serialize_field("remoteness", &rat_to_string(&self.remoteness))?;
        s.serialize_field("witness_facet", &self.witness)?;
        s.serialize_field("trivial_at_one", &self.trivial_at_one)?;
        s.end()
    }
}

/// Log canonical threshold, remoteness, and witness facet of a nonzero
/// ideal.
pub fn lct(ideal: &MonomialIdeal) -> Result<LctResult> {
    let poly = NewtonPolyhedron::from_ideal(ideal)?;
    let mut best: Option<(Rat, Facet)> = None;
    for f in poly.facets() {
        if f.offset().is_positive() {
            let cand = Rat::new(f.normal_sum(), f.offset().clone());
            if best.as_ref().map_or(true, |(b, _)| cand < *b) {
                best = Some((cand, f.clone()));
            }
        }
    }
    let remoteness = poly.diagonal_intersection();
    let trivial_at_one = multiplier_ideal(ideal, &Rat::one())?.is_unit();
    Ok(match best {
        Some((t, w)) => {
            debug_assert!(&t * &remoteness == Rat::one());
            LctResult {
                threshold: Threshold::Finite(t),
                remoteness,
                witness: Some(w),
                trivial_at_one,
            }
        }
        None => LctResult {
            threshold: Threshold::Infinite,
            remoteness,
            witness: None,
            trivial_at_one,
        },
    })
}

/// Closed form for the diagonal ideal (x1^a1, ..., xn^an): the sum of the
/// reciprocals 1/a1 + ... + 1/an. All entries must be at least 1.
pub fn lct_diagonal(exponents: &[u64]) -> Result<Rat> {
    if exponents.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut sum = Rat::zero();
    for &a in exponents {
        if a == 0 {
            return Err(Error::NonPositiveExponent);
        }
        sum += Rat::new(BigInt::one(), BigInt::from(a));
    }
    Ok(sum)
}

/// First `count` steps of the doubling family whose thresholds approach 1
/// from below: a_1 = 2, a_{k+1} = a_k^2 + a_k, with threshold
/// t_k = (a_k - 1) / a_k. The k-th threshold is the largest one below 1
/// among k-variable diagonal ideals with entries bounded by a_k.
pub fn extremal_sequence(count: usize) -> Vec<(BigInt, Rat)> {
    let mut result = Vec::with_capacity(count);
    let mut a = BigInt::from(2u32);
    for _ in 0..count {
        let t = Rat::new(&a - 1u32, a.clone());
        result.push((a.clone(), t));
        a = &a * &a + &a;
    }
    result
}

/// One threshold value found by `threshold_search`, with the least ideal
/// attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    pub threshold: Rat,
    pub witness: MonomialIdeal,
}

impl Serialize for SearchRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SearchRecord", 2)?;
        s.serialize_field("threshold", &rat_to_string(&self.threshold))?;
        s.serialize_field("witness_ideal", &self.witness)?;
        s.end()
    }
}

/// Enumerates every monomial ideal with at most `max_generators` minimal
/// generators and exponents bounded by `max_exponent`, up to coordinate
/// permutation, and returns the distinct thresholds below 1 in increasing
/// order. Work is distributed over the current rayon pool; the output
/// does not depend on the scheduling.
pub fn threshold_search(
    dim: usize,
    max_exponent: u64,
    max_generators: usize,
) -> Result<Vec<SearchRecord>> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if max_generators == 0 {
        return Err(Error::EmptyGenerators);
    }
    let points: Vec<Exponent> = lattice_box(vec![max_exponent; dim]).collect();
    let perms = permutations(dim);

    let maps = (0..points.len())
        .into_par_iter()
        .map(|start| {
            let mut found: BTreeMap<Rat, MonomialIdeal> = BTreeMap::new();
            let mut chosen = vec![start];
            antichains_from(&points, max_generators, &mut chosen, &mut |indices| {
                record_if_canonical(&points, indices, &perms, dim, &mut found)
            })?;
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut merged: BTreeMap<Rat, MonomialIdeal> = BTreeMap::new();
    for map in maps {
        for (t, ideal) in map {
            match merged.entry(t) {
                Entry::Vacant(e) => {
                    e.insert(ideal);
                }
                Entry::Occupied(mut e) => {
                    if ideal < *e.get() {
                        e.insert(ideal);
                    }
                }
            }
        }
    }
    Ok(merged
        .into_iter()
        .map(|(threshold, witness)| SearchRecord { threshold, witness })
        .collect())
}

/// Extends `chosen` (indices into `points`, ascending) through every
/// antichain of size up to `max_size`, invoking the sink at each step.
fn antichains_from(
    points: &[Exponent],
    max_size: usize,
    chosen: &mut Vec<usize>,
    sink: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    sink(chosen)?;
    if chosen.len() == max_size {
        return Ok(());
    }
    let last = *chosen.last().expect("chosen starts nonempty");
    for j in (last + 1)..points.len() {
        let incomparable = chosen.iter().all(|&i| {
            let a = &points[i];
            let b = &points[j];
            !a.divides(b).expect("box points share a dimension")
                && !b.divides(a).expect("box points share a dimension")
        });
        if incomparable {
            chosen.push(j);
            antichains_from(points, max_size, chosen, sink)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Computes the threshold of the antichain if it is the lexicographically
/// least among its coordinate permutations, and records values below 1.
fn record_if_canonical(
    points: &[Exponent],
    indices: &[usize],
    perms: &[Vec<usize>],
    dim: usize,
    found: &mut BTreeMap<Rat, MonomialIdeal>,
) -> Result<()> {
    let base: Vec<Exponent> = indices.iter().map(|&i| points[i].clone()).collect();
    for perm in &perms[1..] {
        let mut image: Vec<Exponent> = base.iter().map(|p| p.permute(perm)).collect();
        image.sort();
        if image < base {
            return Ok(());
        }
    }
    let ideal = MonomialIdeal::new(dim, base)?;
    let result = lct(&ideal)?;
    if let Threshold::Finite(t) = result.threshold {
        if t < Rat::one() {
            match found.entry(t) {
                Entry::Vacant(e) => {
                    e.insert(ideal);
                }
                Entry::Occupied(mut e) => {
                    if ideal < *e.get() {
                        e.insert(ideal);
                    }
                }
            }
        }
    }
    Ok(())
}

/// All permutations of 0..n; the identity comes first.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut result = vec![(0..n).collect::<Vec<usize>>()];
    let mut work = result.clone();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; n];
    let mut i = 0;
    let current = &mut work[0];
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                current.swap(0, i);
            } else {
                current.swap(c[i], i);
            }
            result.push(current.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    result
}

/// Replaces the ideal by the sub-ideal spanned by at most `dim` vertices
/// of its witness facet, keeping the threshold. The diagonal meets the
/// witness facet inside the hull of its vertices, so such a sub-ideal
/// always exists; this searches the vertex subsets smallest-first and
/// returns the first match. The unit ideal is returned unchanged.
pub fn witness_subideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let result = lct(ideal)?;
    let Some(witness) = &result.witness else {
        return Ok(ideal.clone());
    };
    let poly = NewtonPolyhedron::from_ideal(ideal)?;
    let on_facet: Vec<Exponent> = poly
        .vertices()
        .iter()
        .filter(|v| witness.slack(v).is_zero())
        .map(|v| {
            v.to_exponent()
                .expect("an unscaled Newton polyhedron has lattice vertices")
        })
        .collect();
    let dim = ideal.dim();
    for size in 1..=dim.min(on_facet.len()) {
        let mut hit: Option<MonomialIdeal> = None;
        for_each_subset(&on_facet, size, &mut |subset| {
            let sub = MonomialIdeal::new(dim, subset.to_vec())?;
            if lct(&sub)?.threshold == result.threshold {
                hit = Some(sub);
                return Ok(true);
            }
            Ok(false)
        })?;
        if let Some(sub) = hit {
            return Ok(sub);
        }
    }
    unreachable!("the diagonal point lies in the hull of at most dim witness-facet vertices")
}

/// Visits size-`k` subsets in order; the visitor returns true to stop.
fn for_each_subset(
    items: &[Exponent],
    k: usize,
    visit: &mut impl FnMut(&[Exponent]) -> Result<bool>,
) -> Result<bool> {
    fn rec(
        items: &[Exponent],
        k: usize,
        start: usize,
        acc: &mut Vec<Exponent>,
        visit: &mut impl FnMut(&[Exponent]) -> Result<bool>,
    ) -> Result<bool> {
        if acc.len() == k {
            return visit(acc);
        }
        for i in start..items.len() {
            acc.push(items[i].clone());
            if rec(items, k, i + 1, acc, visit)? {
                return Ok(true);
            }
            acc.pop();
        }
        Ok(false)
    }
    rec(items, k, 0, &mut Vec::new(), visit)
}
