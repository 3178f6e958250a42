//! Text grammar for monomial ideals.
//!
//! An ideal is a comma-separated list of monomials; a monomial is a list
//! of powers separated by `*` or whitespace, e.g. `x^8, y^6` or
//! `x*y^4*z^6, x^5*y`. Variables are `x1..xn`; the aliases `x, y, z`
//! stand for `x1, x2, x3` and are only legal when the ideal lives in at
//! most 3 variables. `1` denotes the unit monomial, `0` the zero ideal.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;

/// Parses the ideal grammar. `vars` pins the ambient dimension; without
/// it the dimension is the highest variable index that occurs (at least 1).
pub fn parse_ideal(input: &str, vars: Option<usize>) -> Result<MonomialIdeal> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty ideal".into()));
    }
    if let Some(n) = vars {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
    }
    if trimmed == "0" {
        return MonomialIdeal::zero(vars.unwrap_or(1));
    }

    let mut monomials: Vec<BTreeMap<usize, u64>> = Vec::new();
    let mut alias_used = false;
    let mut max_index = 0usize;
    for piece in trimmed.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::Parse("empty monomial between commas".into()));
        }
        let mut powers: BTreeMap<usize, u64> = BTreeMap::new();
        for factor in piece.replace('*', " ").split_whitespace() {
            if factor == "1" {
                continue;
            }
            let (index, exp, is_alias) = parse_factor(factor)?;
            alias_used |= is_alias;
            max_index = max_index.max(index);
            let slot = powers.entry(index).or_insert(0);
            *slot = slot.checked_add(exp).ok_or(Error::ExponentOverflow)?;
        }
        monomials.push(powers);
    }

    let dim = match vars {
        Some(n) => {
            if max_index > n {
                return Err(Error::Parse(format!(
                    "variable x{max_index} exceeds the declared {n} variables"
                )));
            }
            n
        }
        None => max_index.max(1),
    };
    if alias_used && dim > 3 {
        return Err(Error::Parse(
            "aliases x, y, z are only legal in at most 3 variables; use x1..xn".into(),
        ));
    }

    let generators = monomials
        .into_iter()
        .map(|powers| {
            let mut coords = vec![0u64; dim];
            for (index, exp) in powers {
                coords[index - 1] = exp;
            }
            Exponent::new(coords)
        })
        .collect();
    MonomialIdeal::new(dim, generators)
}

/// One power like `x`, `z^4`, or `x12^3`. Returns (1-based index,
/// exponent, whether an alias letter was used).
fn parse_factor(factor: &str) -> Result<(usize, u64, bool)> {
    let bad = || Error::Parse(format!("malformed power `{factor}`"));
    let (var, exp) = match factor.split_once('^') {
        Some((v, e)) => {
            let exp: u64 = e.parse().map_err(|_| bad())?;
            (v, exp)
        }
        None => (factor, 1),
    };
    let mut chars = var.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let rest = chars.as_str();
    match (letter, rest) {
        ('x', "") => Ok((1, exp, true)),
        ('y', "") => Ok((2, exp, true)),
        ('z', "") => Ok((3, exp, true)),
        ('x', digits) => {
            let index: usize = digits.parse().map_err(|_| bad())?;
            if index == 0 {
                return Err(bad());
            }
            Ok((index, exp, false))
        }
        _ => Err(bad()),
    }
}

/// Renders one exponent as a monomial in the grammar above.
pub fn monomial_to_string(e: &Exponent) -> String {
    if e.is_zero() {
        return "1".into();
    }
    let dim = e.dim();
    let mut parts = Vec::new();
    for (i, &c) in e.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let var = variable_name(i, dim);
        if c == 1 {
            parts.push(var);
        } else {
            parts.push(format!("{var}^{c}"));
        }
    }
    parts.join("*")
}

pub(crate) fn variable_name(i: usize, dim: usize) -> String {
    if dim <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self.generators().iter().map(monomial_to_string).collect();
        write!(f, "{}", rendered.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_alias_grammar() {
        let i = parse_ideal("x^8, y^6", None).unwrap();
        assert_eq!(i.dim(), 2);
        assert_eq!(
            i.generators(),
            &[Exponent::new(vec![8, 0]), Exponent::new(vec![0, 6])]
        );
    }

    #[test]
    fn star_and_whitespace_both_separate_powers() {
        let a = parse_ideal("x*y^4*z^6, x^5*y, y^7*z, x^8*z^8", None).unwrap();
        let b = parse_ideal("x y^4 z^6, x^5 y, y^7 z, x^8 z^8", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 3);
        assert!(a
            .generators()
            .contains(&Exponent::new(vec![1, 4, 6])));
    }

    #[test]
    fn indexed_variables_and_vars_override() {
        let i = parse_ideal("x1^2 x4", None).unwrap();
        assert_eq!(i.dim(), 4);
        let j = parse_ideal("x^2", Some(3)).unwrap();
        assert_eq!(j.dim(), 3);
        assert_eq!(j.generators(), &[Exponent::new(vec![2, 0, 0])]);
        assert!(parse_ideal("x5", Some(2)).is_err());
    }

    #[test]
    fn repeated_variables_accumulate() {
        let i = parse_ideal("x*x*y^2*y", None).unwrap();
        assert_eq!(i.generators(), &[Exponent::new(vec![2, 3])]);
    }

    #[test]
    fn unit_and_zero_spellings() {
        assert!(parse_ideal("1", None).unwrap().is_unit());
        assert!(parse_ideal("1, x^2", None).unwrap().is_unit());
        assert!(parse_ideal("0", Some(2)).unwrap().is_zero());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_ideal("", None).is_err());
        assert!(parse_ideal("x^", None).is_err());
        assert!(parse_ideal("w^2", None).is_err());
        assert!(parse_ideal("x^2,, y", None).is_err());
        assert!(parse_ideal("x^-1", None).is_err());
        assert!(parse_ideal("x0^2", None).is_err());
        // aliases are barred above 3 variables
        assert!(parse_ideal("y^2, x5", None).is_err());
    }

    #[test]
    fn display_round_trips_at_fixed_dimension() {
        let i = parse_ideal("x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5", None).unwrap();
        assert_eq!(i.to_string(), "x^6, x^5*y, x^4*y^2, x^2*y^3, x*y^4, y^5");
        assert_eq!(parse_ideal(&i.to_string(), Some(i.dim())).unwrap(), i);
        let unit = MonomialIdeal::unit(2).unwrap();
        assert_eq!(unit.to_string(), "1");
        assert_eq!(parse_ideal("1", Some(2)).unwrap(), unit);
    }

    #[test]
    fn display_uses_indexed_names_above_three_vars() {
        let i = parse_ideal("x1^2*x4^3", None).unwrap();
        assert_eq!(i.to_string(), "x1^2*x4^3");
    }
}
