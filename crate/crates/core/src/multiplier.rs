//! Multiplier ideals and integral closures through the Newton polyhedron.
//!
//! For a nonzero monomial ideal I and a positive rational r, the
//! multiplier ideal of coefficient r is generated by the monomials x^w
//! with w + (1, ..., 1) strictly inside r times the Newton polyhedron of
//! I. The integral closure is cut out the same way without the shift and
//! without strictness: all lattice points of the polyhedron itself.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exponent::{lattice_box, Exponent};
use crate::ideal::MonomialIdeal;
use crate::polyhedron::{NewtonPolyhedron, PointClass};
use crate::rat::{ceil_to_u64, Rat};
use num_bigint::BigInt;
use num_traits::Signed;

/// Per-axis search bound for the minimal generators of the multiplier
/// ideal: with A_i the largest i-th coordinate over I's generators, the
/// bound is ceil(r * A_i) + 1.
///
/// Every minimal generator w fits under it: any point of r*P splits as a
/// convex combination p of the scaled generators (so p_i <= r * A_i)
/// plus a nonnegative vector. If w + 1 lies strictly inside r*P with
/// w_i > r * A_i, the split leaves more than one unit of slack above p
/// in coordinate i, so subtracting e_i keeps every facet inequality
/// strict (facets with a zero i-th normal entry are untouched, the rest
/// lose less than the slack). Then w - e_i already generates w, and w is
/// not minimal.
pub fn multiplier_box(ideal: &MonomialIdeal, r: &Rat) -> Result<Vec<u64>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !r.is_positive() {
        return Err(Error::NonPositiveCoefficient(crate::rat::rat_to_string(r)));
    }
    ideal
        .coordinate_maxima()
        .iter()
        .map(|&a| {
            let scaled = ceil_to_u64(&(r * Rat::from_integer(BigInt::from(a))))?;
            scaled.checked_add(1).ok_or(Error::ExponentOverflow)
        })
        .collect()
}

/// The multiplier ideal of coefficient r > 0.
pub fn multiplier_ideal(ideal: &MonomialIdeal, r: &Rat) -> Result<MonomialIdeal> {
    let poly = NewtonPolyhedron::from_ideal(ideal)?;
    let scaled = poly.scale(r)?;
    let bounds = multiplier_box(ideal, r)?;
    let minimal = minimal_members(&bounds, |w| {
        let shifted: Vec<BigInt> = w.coords().iter().map(|&c| BigInt::from(c) + 1u32).collect();
        Ok(scaled.classify_int(&shifted)? == PointClass::Interior)
    })?;
    MonomialIdeal::new(ideal.dim(), minimal)
}

/// The integral closure: all monomials whose exponents lie on or inside
/// the Newton polyhedron.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let poly = NewtonPolyhedron::from_ideal(ideal)?;
    let bounds: Vec<u64> = ideal
        .coordinate_maxima()
        .iter()
        .map(|&a| a.checked_add(1).ok_or(Error::ExponentOverflow))
        .collect::<Result<_>>()?;
    let minimal = minimal_members(&bounds, |w| {
        Ok(poly.classify_int(&w.to_bigint_vec())? != PointClass::Exterior)
    })?;
    MonomialIdeal::new(ideal.dim(), minimal)
}

/// The ideal generated by the coordinatewise floors of all points of
/// r * P: x^w is included when the unit box [w, w + (1, ..., 1)) meets
/// the scaled region. That holds exactly when the region still contains
/// a point after backing off from w + (1, ..., 1) along the diagonal, so
/// membership is decided by the sign of the diagonal slack. This is a
/// second route to the multiplier ideal and is kept separate from the
/// facet-strictness test so the two can be diffed.
pub fn floor_ideal(poly: &NewtonPolyhedron, r: &Rat) -> Result<MonomialIdeal> {
    let scaled = poly.scale(r)?;
    let mut bounds = vec![0u64; scaled.dim()];
    for v in scaled.vertices() {
        for (b, c) in bounds.iter_mut().zip(v.coords()) {
            let needed = ceil_to_u64(c)?
                .checked_add(1)
                .ok_or(Error::ExponentOverflow)?;
            *b = (*b).max(needed);
        }
    }
    let minimal = minimal_members(&bounds, |w| {
        let corner = w.to_rat_vec().plus_ones();
        Ok(scaled.diagonal_slack(&corner)?.is_positive())
    })?;
    MonomialIdeal::new(scaled.dim(), minimal)
}

/// Walks the box, keeps the points accepted by `member`, and returns the
/// minimal elements. Correct whenever membership is upward closed (adding
/// e_i never leaves the set), which holds for every caller here because
/// facet normals are nonnegative.
pub(crate) fn minimal_members(
    bounds: &[u64],
    mut member: impl FnMut(&Exponent) -> Result<bool>,
) -> Result<Vec<Exponent>> {
    let mut members: HashSet<Exponent> = HashSet::new();
    for p in lattice_box(bounds.to_vec()) {
        if member(&p)? {
            members.insert(p);
        }
    }
    let minimal = members
        .iter()
        .filter(|p| {
            (0..p.dim()).all(|i| {
                if p.coords()[i] == 0 {
                    return true;
                }
                let mut q = (*p).clone();
                q.0[i] -= 1;
                !members.contains(&q)
            })
        })
        .cloned()
        .collect();
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use crate::rat::parse_rat;

    fn ideal(src: &str) -> MonomialIdeal {
        parse_ideal(src, None).unwrap()
    }

    fn rat(src: &str) -> Rat {
        parse_rat(src).unwrap()
    }

    #[test]
    fn golden_multiplier_ideal_at_coefficient_one() {
        let j = multiplier_ideal(&ideal("x^8, y^6"), &rat("1")).unwrap();
        let coords: Vec<&[u64]> = j.generators().iter().map(|g| g.coords()).collect();
        assert_eq!(
            coords,
            vec![
                &[6, 0][..],
                &[5, 1][..],
                &[4, 2][..],
                &[2, 3][..],
                &[1, 4][..],
                &[0, 5][..]
            ]
        );
        assert_eq!(j.to_string(), "x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5");
    }

    #[test]
    fn halving_the_coefficient() {
        let j = multiplier_ideal(&ideal("x^8, y^6"), &rat("1/2")).unwrap();
        assert_eq!(j, ideal("x^2, x*y, y^2"));
    }

    #[test]
    fn small_coefficients_give_the_unit_ideal() {
        let j = multiplier_ideal(&ideal("x^8, y^6"), &rat("1/25")).unwrap();
        assert!(j.is_unit());
        // at the threshold itself the ideal turns proper
        let at_t = multiplier_ideal(&ideal("x^8, y^6"), &rat("7/24")).unwrap();
        assert!(!at_t.is_unit());
    }

    #[test]
    fn principal_ideal_powers() {
        let j = multiplier_ideal(&ideal("x^1"), &rat("5")).unwrap();
        assert_eq!(j, parse_ideal("x^5", None).unwrap());
        // fractional coefficients floor through the strict shift
        let j = multiplier_ideal(&ideal("x^1"), &rat("7/2")).unwrap();
        assert_eq!(j, parse_ideal("x^3", None).unwrap());
    }

    #[test]
    fn multiplier_of_the_unit_ideal_is_unit() {
        let unit = MonomialIdeal::unit(3).unwrap();
        assert!(multiplier_ideal(&unit, &rat("9")).unwrap().is_unit());
    }

    #[test]
    fn rejects_bad_inputs() {
        let z = MonomialIdeal::zero(2).unwrap();
        assert_eq!(multiplier_ideal(&z, &rat("1")), Err(Error::ZeroIdeal));
        assert!(multiplier_ideal(&ideal("x, y"), &rat("0")).is_err());
        assert!(multiplier_ideal(&ideal("x, y"), &rat("-3")).is_err());
    }

    #[test]
    fn closure_fills_in_under_the_hull() {
        assert_eq!(
            integral_closure(&ideal("x^3, y^2")).unwrap(),
            ideal("x^3, x^2*y, y^2")
        );
        assert_eq!(
            integral_closure(&ideal("x^2, y^2")).unwrap(),
            ideal("x^2, x*y, y^2")
        );
    }

    #[test]
    fn closure_is_idempotent_and_keeps_closed_ideals() {
        let closed = integral_closure(&ideal("x^3, y^2")).unwrap();
        assert_eq!(integral_closure(&closed).unwrap(), closed);
        let i = ideal("x, y");
        assert_eq!(integral_closure(&i).unwrap(), i);
        let unit = MonomialIdeal::unit(2).unwrap();
        assert_eq!(integral_closure(&unit).unwrap(), unit);
    }

    #[test]
    fn floor_route_agrees_with_the_strict_route() {
        for (src, r) in [
            ("x^8, y^6", "1"),
            ("x^8, y^6", "1/2"),
            ("x^8, y^6", "5/3"),
            ("x*y^4*z^6, x^5*y, y^7*z, x^8*z^8", "2/3"),
            ("x^3, y^2", "5/6"),
        ] {
            let i = ideal(src);
            let poly = NewtonPolyhedron::from_ideal(&i).unwrap();
            assert_eq!(
                floor_ideal(&poly, &rat(r)).unwrap(),
                multiplier_ideal(&i, &rat(r)).unwrap(),
                "floor vs strict on {src} at {r}"
            );
        }
    }

    #[test]
    fn box_bound_has_the_stated_shape() {
        let b = multiplier_box(&ideal("x^8, y^6"), &rat("1/2")).unwrap();
        assert_eq!(b, vec![5, 4]);
        let b = multiplier_box(&ideal("x^8, y^6"), &rat("2/3")).unwrap();
        assert_eq!(b, vec![7, 5]);
    }
}
