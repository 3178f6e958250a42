//! Newton polyhedra of monomial ideals.
//!
//! The Newton polyhedron of a nonzero monomial ideal is the convex hull of
//! its generator exponents plus the nonnegative orthant. It is stored as
//! the full irredundant facet system together with the vertex list; both
//! are exact and canonically ordered, so equal polyhedra compare equal.
//!
//! Facets are found by double description on the homogenized cone: the
//! cone in dimension n+1 spanned by (g, 1) for each generator g and
//! (e_i, 0) for each axis. The extreme rays of its dual cone are exactly
//! the facet normals; the hyperplane-at-infinity ray (0, ..., 0, 1) is
//! discarded. Coordinate half-spaces therefore appear in the facet list
//! precisely when they are facet-defining.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{Exponent, RatVec};
use crate::ideal::MonomialIdeal;
use crate::rat::Rat;

/// One irredundant facet inequality `<normal, x> >= offset`.
///
/// The normal is nonzero with nonnegative entries (the recession cone is
/// the orthant), the offset is nonnegative, and the n+1 integers
/// (normal, offset) are jointly primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Facet {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Sum of normal entries, the value of the normal on (1, ..., 1).
    pub fn normal_sum(&self) -> BigInt {
        self.normal.iter().sum()
    }

    /// Exact value of `<normal, p> - offset` at a rational point.
    pub fn slack(&self, p: &RatVec) -> Rat {
        let mut acc = Rat::from_integer(-self.offset.clone());
        for (v, c) in self.normal.iter().zip(p.coords()) {
            acc += Rat::from_integer(v.clone()) * c;
        }
        acc
    }

    fn slack_int(&self, p: &[BigInt]) -> BigInt {
        let mut acc = -self.offset.clone();
        for (v, c) in self.normal.iter().zip(p) {
            acc += v * c;
        }
        acc
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = self.dim();
        let mut first = true;
        for (i, v) in self.normal.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = crate::parse::variable_name(i, dim);
            if v.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{v}*{var}")?;
            }
        }
        write!(f, " >= {}", self.offset)
    }
}

impl Serialize for Facet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Facet", 2)?;
        let normal: Vec<serde_json::Value> = self.normal.iter().map(bigint_to_json).collect();
        s.serialize_field("normal", &normal)?;
        s.serialize_field("offset", &bigint_to_json(&self.offset))?;
        s.end()
    }
}

/// Integers ride as JSON numbers while they fit, decimal strings beyond.
pub fn bigint_to_json(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(small) => serde_json::Value::from(small),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

/// Exact position of a point relative to the polyhedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PointClass {
    Interior,
    Boundary,
    Exterior,
}

/// A Newton polyhedron, or a positive rational scaling of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    facets: Vec<Facet>,
    vertices: Vec<RatVec>,
}

impl NewtonPolyhedron {
    /// Builds the Newton polyhedron of a nonzero ideal.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let n = ideal.dim();
        let gens = ideal.generators();
        let facets = enumerate_facets(n, gens)?;
        let vertices = gens
            .iter()
            .filter(|g| {
                let p = g.to_bigint_vec();
                let tight: Vec<Vec<BigInt>> = facets
                    .iter()
                    .filter(|f| f.slack_int(&p).is_zero())
                    .map(|f| f.normal.clone())
                    .collect();
                rank(tight) == n
            })
            .map(Exponent::to_rat_vec)
            .collect();
        let poly = NewtonPolyhedron {
            dim: n,
            facets,
            vertices,
        };
        debug_assert_eq!(poly.check(), Ok(()));
        Ok(poly)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    /// Vertex list as lattice points; None when any vertex is fractional
    /// (possible after scaling).
    pub fn lattice_vertices(&self) -> Option<Vec<Exponent>> {
        self.vertices.iter().map(RatVec::to_exponent).collect()
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            })
        }
    }

    /// Classifies a rational point: interior means strictly inside every
    /// facet, boundary means on some facet but inside the region.
    pub fn classify(&self, p: &RatVec) -> Result<PointClass> {
        self.check_dim(p.dim())?;
        let mut on_facet = false;
        for f in &self.facets {
            let s = f.slack(p);
            if s.is_negative() {
                return Ok(PointClass::Exterior);
            }
            on_facet |= s.is_zero();
        }
        Ok(if on_facet {
            PointClass::Boundary
        } else {
            PointClass::Interior
        })
    }

    /// Integer-point classification on the same rule as `classify`.
    pub fn classify_int(&self, p: &[BigInt]) -> Result<PointClass> {
        self.check_dim(p.len())?;
        let mut on_facet = false;
        for f in &self.facets {
            let s = f.slack_int(p);
            if s.is_negative() {
                return Ok(PointClass::Exterior);
            }
            on_facet |= s.is_zero();
        }
        Ok(if on_facet {
            PointClass::Boundary
        } else {
            PointClass::Interior
        })
    }

    /// The largest e such that p - e*(1, ..., 1) still satisfies every
    /// facet; positive exactly on the interior.
    pub fn diagonal_slack(&self, p: &RatVec) -> Result<Rat> {
        self.check_dim(p.dim())?;
        let mut best: Option<Rat> = None;
        for f in &self.facets {
            let room = f.slack(p) / Rat::from_integer(f.normal_sum());
            if best.as_ref().map_or(true, |b| room < *b) {
                best = Some(room);
            }
        }
        Ok(best.expect("a Newton polyhedron has at least one facet"))
    }

    /// Scales the region by a positive rational: facet offsets scale,
    /// normals stay, vertices scale.
    pub fn scale(&self, r: &Rat) -> Result<NewtonPolyhedron> {
        if !r.is_positive() {
            return Err(Error::NonPositiveCoefficient(crate::rat::rat_to_string(r)));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let c = Rat::from_integer(f.offset.clone()) * r;
                let q = c.denom();
                let mut data: Vec<BigInt> = f.normal.iter().map(|v| v * q).collect();
                data.push(c.numer().clone());
                let g = content(&data);
                let offset = data.pop().expect("offset present") / &g;
                let normal = data.into_iter().map(|v| v / &g).collect();
                Facet { normal, offset }
            })
            .collect();
        let vertices = self.vertices.iter().map(|v| v.scale(r)).collect();
        Ok(NewtonPolyhedron {
            dim: self.dim,
            facets,
            vertices,
        })
    }

    /// Where the diagonal ray t*(1, ..., 1) enters the region: the largest
    /// ratio offset / normal-sum over facets with positive offset, or 0
    /// when every offset vanishes (the region is the whole orthant).
    pub fn diagonal_intersection(&self) -> Rat {
        let mut best = Rat::zero();
        for f in &self.facets {
            if f.offset.is_positive() {
                let m = Rat::new(f.offset.clone(), f.normal_sum());
                if m > best {
                    best = m;
                }
            }
        }
        best
    }

    /// Structural invariants; Ok(()) or a description of the violation.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.facets.is_empty() {
            return Err("no facets".into());
        }
        if self.vertices.is_empty() {
            return Err("no vertices".into());
        }
        for f in &self.facets {
            if f.normal.len() != self.dim {
                return Err("facet dimension mismatch".into());
            }
            if f.normal.iter().all(Zero::is_zero) {
                return Err("zero facet normal".into());
            }
            if f.normal.iter().any(Signed::is_negative) {
                return Err(format!("negative normal entry in {f}"));
            }
            if f.offset.is_negative() {
                return Err(format!("negative offset in {f}"));
            }
            let mut data = f.normal.clone();
            data.push(f.offset.clone());
            if !content(&data).is_one() {
                return Err(format!("facet data not primitive: {f}"));
            }
        }
        for w in self.facets.windows(2) {
            if w[0] <= w[1] {
                return Err("facets not in strictly descending order".into());
            }
        }
        for w in self.vertices.windows(2) {
            if w[0] <= w[1] {
                return Err("vertices not in strictly descending order".into());
            }
        }
        for v in &self.vertices {
            if v.dim() != self.dim {
                return Err("vertex dimension mismatch".into());
            }
            let mut tight = Vec::new();
            for f in &self.facets {
                let s = f.slack(v);
                if s.is_negative() {
                    return Err(format!("vertex {:?} violates {f}", v.coords()));
                }
                if s.is_zero() {
                    tight.push(f.normal.clone());
                }
            }
            if rank(tight) != self.dim {
                return Err(format!(
                    "vertex {:?} is not a vertex: tight normals do not span",
                    v.coords()
                ));
            }
        }
        Ok(())
    }
}

/// Double description: extreme rays of the dual of the homogenized cone,
/// converted to facet inequalities.
fn enumerate_facets(n: usize, gens: &[Exponent]) -> Result<Vec<Facet>> {
    let m = n + gens.len();
    if m > 128 {
        return Err(Error::Parse(format!(
            "facet enumeration supports at most {} generators in {n} variables",
            128 - n
        )));
    }

    // constraint rows of the dual cone, in R^{n+1}:
    // rows 0..n-1 demand v_i >= 0, row n+j demands <v, g_j> + s >= 0
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); n + 1];
        row[i] = BigInt::one();
        rows.push(row);
    }
    for g in gens {
        let mut row = g.to_bigint_vec();
        row.push(BigInt::one());
        rows.push(row);
    }

    struct Ray {
        v: Vec<BigInt>,
        tight: u128,
    }

    // the first n+1 rows are linearly independent; their simplicial cone
    // has these explicit extreme rays
    let g0 = gens[0].coords();
    let mut rays: Vec<Ray> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut v = vec![BigInt::zero(); n + 1];
        v[i] = BigInt::one();
        v[n] = -BigInt::from(g0[i]);
        let mut tight: u128 = 1 << n;
        for j in 0..n {
            if j != i {
                tight |= 1 << j;
            }
        }
        rays.push(Ray { v, tight });
    }
    {
        let mut v = vec![BigInt::zero(); n + 1];
        v[n] = BigInt::one();
        let tight: u128 = (1 << n) - 1;
        rays.push(Ray { v, tight });
    }

    for c in (n + 1)..m {
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&rows[c], &r.v)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (r, val) in rays.iter_mut().zip(&vals) {
                if val.is_zero() {
                    r.tight |= 1 << c;
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (p, r) in rays.iter().enumerate() {
            if !vals[p].is_negative() {
                next.push(Ray {
                    v: r.v.clone(),
                    tight: if vals[p].is_zero() { r.tight | 1 << c } else { r.tight },
                });
            }
        }
        for (p, rp) in rays.iter().enumerate() {
            if !vals[p].is_positive() {
                continue;
            }
            for (q, rq) in rays.iter().enumerate() {
                if !vals[q].is_negative() {
                    continue;
                }
                let z = rp.tight & rq.tight;
                let adjacent = !rays.iter().enumerate().any(|(j, r3)| {
                    j != p && j != q && (z & !r3.tight) == 0
                });
                if !adjacent {
                    continue;
                }
                // positive combination vanishing on row c
                let mut v: Vec<BigInt> = rp
                    .v
                    .iter()
                    .zip(&rq.v)
                    .map(|(a, b)| &vals[p] * b - &vals[q] * a)
                    .collect();
                let g = content(&v);
                for entry in &mut v {
                    *entry /= &g;
                }
                next.push(Ray {
                    v,
                    tight: z | 1 << c,
                });
            }
        }
        rays = next;
    }

    let mut facets: Vec<Facet> = Vec::new();
    for r in rays {
        let mut normal = r.v;
        let s = normal.pop().expect("homogenizing coordinate present");
        if normal.iter().all(Zero::is_zero) {
            // the hyperplane-at-infinity facet, no content at height 1
            debug_assert!(s.is_positive());
            continue;
        }
        facets.push(Facet {
            normal,
            offset: -s,
        });
    }
    facets.sort_by(|a, b| b.cmp(a));
    facets.dedup();
    Ok(facets)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gcd of absolute values, 1 for the all-zero vector.
fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for entry in v {
        g = g.gcd(entry);
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

/// Exact rank by fraction-free elimination.
fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = match rows.first() {
        Some(r) => r.len(),
        None => return 0,
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = prow[col].clone();
        for row in tail {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pe) in row.iter_mut().zip(prow) {
                *entry = &*entry * &p - pe * &factor;
            }
            let g = content(row);
            for entry in row.iter_mut() {
                *entry /= &g;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use crate::rat::parse_rat;

    fn poly(src: &str) -> NewtonPolyhedron {
        NewtonPolyhedron::from_ideal(&parse_ideal(src, None).unwrap()).unwrap()
    }

    fn facet(normal: &[i64], offset: i64) -> Facet {
        Facet {
            normal: normal.iter().map(|&v| BigInt::from(v)).collect(),
            offset: BigInt::from(offset),
        }
    }

    fn point(coords: &[&str]) -> RatVec {
        RatVec::new(coords.iter().map(|c| parse_rat(c).unwrap()).collect())
    }

    #[test]
    fn facets_of_a_plane_curve_pair() {
        let p = poly("x^8, y^6");
        assert_eq!(
            p.facets(),
            &[facet(&[3, 4], 24), facet(&[1, 0], 0), facet(&[0, 1], 0)]
        );
        assert_eq!(
            p.lattice_vertices().unwrap(),
            vec![Exponent::new(vec![8, 0]), Exponent::new(vec![0, 6])]
        );
    }

    #[test]
    fn classification_against_the_slanted_facet() {
        let p = poly("x^8, y^6");
        assert_eq!(p.classify(&point(&["4", "3"])).unwrap(), PointClass::Boundary);
        assert_eq!(p.classify(&point(&["7", "2"])).unwrap(), PointClass::Interior);
        assert_eq!(p.classify(&point(&["0", "0"])).unwrap(), PointClass::Exterior);
        // a coordinate facet point is boundary even beyond the slant
        assert_eq!(p.classify(&point(&["9", "0"])).unwrap(), PointClass::Boundary);
    }

    #[test]
    fn scaling_by_a_half() {
        let p = poly("x^8, y^6").scale(&parse_rat("1/2").unwrap()).unwrap();
        assert_eq!(
            p.facets(),
            &[facet(&[3, 4], 12), facet(&[1, 0], 0), facet(&[0, 1], 0)]
        );
        assert_eq!(
            p.vertices(),
            &[point(&["4", "0"]), point(&["0", "3"])]
        );
        assert_eq!(p.check(), Ok(()));
    }

    #[test]
    fn scaling_requires_a_positive_coefficient() {
        let p = poly("x^8, y^6");
        assert!(p.scale(&parse_rat("0").unwrap()).is_err());
        assert!(p.scale(&parse_rat("-2/3").unwrap()).is_err());
    }

    #[test]
    fn joint_primitivity_after_scaling() {
        // gcd is taken over normal and offset jointly
        let p = poly("x^2, y");
        assert_eq!(p.facets()[0], facet(&[1, 2], 2));
        let doubled = p.scale(&parse_rat("2").unwrap()).unwrap();
        assert_eq!(doubled.facets()[0], facet(&[1, 2], 4));
        let third = p.scale(&parse_rat("1/3").unwrap()).unwrap();
        assert_eq!(third.facets()[0], facet(&[3, 6], 2));
        assert_eq!(third.check(), Ok(()));
    }

    #[test]
    fn diagonal_intersection_of_the_pair() {
        let p = poly("x^8, y^6");
        assert_eq!(p.diagonal_intersection(), parse_rat("24/7").unwrap());
    }

    #[test]
    fn unit_ideal_gives_the_whole_orthant() {
        let p = poly("1");
        assert_eq!(p.facets(), &[facet(&[1], 0)]);
        assert_eq!(p.diagonal_intersection(), Rat::zero());
        let p3 = NewtonPolyhedron::from_ideal(&MonomialIdeal::unit(3).unwrap()).unwrap();
        assert_eq!(
            p3.facets(),
            &[facet(&[1, 0, 0], 0), facet(&[0, 1, 0], 0), facet(&[0, 0, 1], 0)]
        );
        assert_eq!(p3.classify(&point(&["0", "0", "0"])).unwrap(), PointClass::Boundary);
    }

    #[test]
    fn zero_ideal_is_rejected() {
        let z = MonomialIdeal::zero(2).unwrap();
        assert_eq!(NewtonPolyhedron::from_ideal(&z), Err(Error::ZeroIdeal));
    }

    #[test]
    fn principal_ideal_in_one_variable() {
        let p = poly("x^3");
        assert_eq!(p.facets(), &[facet(&[1], 3)]);
        assert_eq!(
            p.lattice_vertices().unwrap(),
            vec![Exponent::new(vec![3])]
        );
    }

    #[test]
    fn redundant_coordinate_halfspace_is_dropped() {
        // P((x)) in 2 vars: x >= 1 and y >= 0; x >= 0 is implied
        let p = poly("x^1, x*y");
        assert_eq!(p.facets(), &[facet(&[1, 0], 1), facet(&[0, 1], 0)]);
    }

    #[test]
    fn midpoint_generator_is_not_a_vertex() {
        let p = poly("x^2, x*y, y^2");
        assert_eq!(
            p.lattice_vertices().unwrap(),
            vec![Exponent::new(vec![2, 0]), Exponent::new(vec![0, 2])]
        );
        assert_eq!(
            p.facets(),
            &[facet(&[1, 1], 2), facet(&[1, 0], 0), facet(&[0, 1], 0)]
        );
    }

    #[test]
    fn three_variable_witness_facet_is_present() {
        let p = poly("x*y^4*z^6, x^5*y, y^7*z, x^8*z^8");
        assert!(p.facets().contains(&facet(&[33, 26, 9], 191)));
        assert_eq!(p.check(), Ok(()));
        // all four generators are incomparable and each is a vertex here
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn diagonal_slack_matches_classification() {
        let p = poly("x^8, y^6");
        assert!(p.diagonal_slack(&point(&["7", "2"])).unwrap().is_positive());
        assert!(p.diagonal_slack(&point(&["4", "3"])).unwrap().is_zero());
        assert!(p.diagonal_slack(&point(&["0", "0"])).unwrap().is_negative());
    }

    #[test]
    fn scale_composes_multiplicatively() {
        let p = poly("x^8, y^6, x^2*y^3");
        let r = parse_rat("3/5").unwrap();
        let s = parse_rat("7/2").unwrap();
        let twice = p.scale(&r).unwrap().scale(&s).unwrap();
        let once = p.scale(&(r * s)).unwrap();
        assert_eq!(twice, once);
    }
}
