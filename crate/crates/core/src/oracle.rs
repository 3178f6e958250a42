//! Independent cross-check of the polyhedral answers.
//!
//! Everything here decides membership without ever consulting a facet
//! system: a point p lies in the region exactly when some convex
//! combination of the generators sits componentwise below it. That is a
//! linear program over exact rationals, solved by a dense two-phase
//! simplex with Bland's rule (no cycling). The polyhedron module and this
//! module answer the same questions along disjoint code paths, so their
//! agreement on a box of points is strong evidence for both.

use num_traits::{One, Signed, Zero};
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{lattice_box, Exponent, RatVec};
use crate::ideal::MonomialIdeal;
use crate::multiplier::{minimal_members, multiplier_box, multiplier_ideal};
use crate::polyhedron::{NewtonPolyhedron, PointClass};
use crate::rat::Rat;

/// Verdict of the linear-programming membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpVerdict {
    pub class: PointClass,
    /// The optimal diagonal back-off: how far p - e*(1, ..., 1) can
    /// retreat while staying in the region. None when exterior.
    pub slack: Option<Rat>,
}

/// Classifies p against the hull of the generators plus the orthant.
pub fn lp_classify(generators: &[Exponent], p: &RatVec) -> Result<LpVerdict> {
    lp_classify_scaled(generators, &Rat::one(), p)
}

/// Same, with every generator scaled by r > 0 inside the LP.
pub fn lp_classify_scaled(generators: &[Exponent], r: &Rat, p: &RatVec) -> Result<LpVerdict> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if !r.is_positive() {
        return Err(Error::NonPositiveCoefficient(crate::rat::rat_to_string(r)));
    }
    for g in generators {
        if g.dim() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: g.dim(),
            });
        }
    }
    let scaled: Vec<Vec<Rat>> = generators
        .iter()
        .map(|g| g.to_rat_vec().scale(r).0)
        .collect();
    Ok(lp_point_class(&scaled, p))
}

/// Feasibility program: convex weights t over the generators and a
/// back-off e >= 0 with sum(t_g * g) <= p - e * (1, ..., 1), maximizing
/// e. Infeasible means exterior; e = 0 means boundary; e > 0 interior.
fn lp_point_class(scaled_gens: &[Vec<Rat>], p: &RatVec) -> LpVerdict {
    let m = scaled_gens.len();
    let n = p.dim();
    let mut constraints = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut coeffs: Vec<Rat> = scaled_gens.iter().map(|g| g[i].clone()).collect();
        coeffs.push(Rat::one());
        constraints.push(simplex::Constraint {
            coeffs,
            rel: simplex::Rel::Le,
            rhs: p.coords()[i].clone(),
        });
    }
    let mut convex = vec![Rat::one(); m];
    convex.push(Rat::zero());
    constraints.push(simplex::Constraint {
        coeffs: convex,
        rel: simplex::Rel::Eq,
        rhs: Rat::one(),
    });
    let mut objective = vec![Rat::zero(); m];
    objective.push(Rat::one());
    match simplex::maximize(&objective, constraints) {
        simplex::Outcome::Infeasible => LpVerdict {
            class: PointClass::Exterior,
            slack: None,
        },
        simplex::Outcome::Optimal(value) => {
            let class = if value.is_positive() {
                PointClass::Interior
            } else {
                PointClass::Boundary
            };
            LpVerdict {
                class,
                slack: Some(value),
            }
        }
        simplex::Outcome::Unbounded => {
            unreachable!("the back-off variable is capped by every coordinate row")
        }
    }
}

/// Multiplier ideal assembled purely from LP verdicts over the given box.
/// The box must contain the one from `multiplier_box`; passing a strictly
/// larger box re-verifies that no minimal generator hides at the rim.
pub fn brute_multiplier(ideal: &MonomialIdeal, r: &Rat, bounds: &[u64]) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::EmptyGenerators);
    }
    if bounds.len() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: bounds.len(),
        });
    }
    let minimal = minimal_members(bounds, |w| {
        let verdict = lp_classify_scaled(ideal.generators(), r, &w.to_rat_vec().plus_ones())?;
        Ok(verdict.class == PointClass::Interior)
    })?;
    MonomialIdeal::new(ideal.dim(), minimal)
}

/// One point where the two paths disagreed on classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMismatch {
    pub point: Exponent,
    pub facet_class: PointClass,
    pub oracle_class: PointClass,
}

/// Outcome of a full dual-path sweep for one ideal and coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub coefficient: Rat,
    pub points_checked: usize,
    pub class_mismatches: Vec<ClassMismatch>,
    /// Points where the LP back-off differed from the facet diagonal slack.
    pub slack_mismatches: Vec<Exponent>,
    pub facet_ideal: MonomialIdeal,
    pub oracle_ideal: MonomialIdeal,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.class_mismatches.is_empty()
            && self.slack_mismatches.is_empty()
            && self.facet_ideal == self.oracle_ideal
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.class_mismatches {
            writeln!(
                f,
                "classification mismatch at {:?}: facet path {:?}, oracle {:?}",
                m.point.coords(),
                m.facet_class,
                m.oracle_class
            )?;
        }
        for p in &self.slack_mismatches {
            writeln!(f, "slack mismatch at {:?}", p.coords())?;
        }
        if self.facet_ideal != self.oracle_ideal {
            writeln!(
                f,
                "multiplier ideal mismatch: facet path [{}], oracle [{}]",
                self.facet_ideal, self.oracle_ideal
            )?;
        }
        Ok(())
    }
}

/// Sweeps the margin box once, comparing the facet classification and
/// diagonal slack against the LP at every lattice point, then assembles
/// the multiplier ideal from the LP verdicts alone and diffs it against
/// the facet-path multiplier ideal.
pub fn verify_ideal(ideal: &MonomialIdeal, r: &Rat) -> Result<VerifyReport> {
    let facet_ideal = multiplier_ideal(ideal, r)?;
    let scaled = NewtonPolyhedron::from_ideal(ideal)?.scale(r)?;
    let scaled_gens: Vec<Vec<Rat>> = ideal
        .generators()
        .iter()
        .map(|g| g.to_rat_vec().scale(r).0)
        .collect();

    // lattice points up to the multiplier box plus a 2-margin: the outer
    // unit shell re-checks minimality at the rim, the extra unit makes
    // every shifted point w + (1, ..., 1) of that shell available too
    let lambda_bounds: Vec<u64> = multiplier_box(ideal, r)?
        .iter()
        .map(|b| b + 1)
        .collect();
    let sweep_bounds: Vec<u64> = lambda_bounds.iter().map(|b| b + 1).collect();

    let mut classes: HashMap<Exponent, PointClass> = HashMap::new();
    let mut class_mismatches = Vec::new();
    let mut slack_mismatches = Vec::new();
    let mut points_checked = 0usize;
    for w in lattice_box(sweep_bounds) {
        points_checked += 1;
        let p = w.to_rat_vec();
        let facet_class = scaled.classify(&p)?;
        let verdict = lp_point_class(&scaled_gens, &p);
        if facet_class != verdict.class {
            class_mismatches.push(ClassMismatch {
                point: w.clone(),
                facet_class,
                oracle_class: verdict.class,
            });
        }
        if verdict.class != PointClass::Exterior
            && verdict.slack.as_ref() != Some(&scaled.diagonal_slack(&p)?)
        {
            slack_mismatches.push(w.clone());
        }
        classes.insert(w, verdict.class);
    }

    let mut members: HashSet<Exponent> = HashSet::new();
    for w in lattice_box(lambda_bounds.clone()) {
        let shifted = Exponent::new(w.coords().iter().map(|&c| c + 1).collect());
        if classes[&shifted] == PointClass::Interior {
            members.insert(w);
        }
    }
    let minimal = minimal_members(&lambda_bounds, |w| Ok(members.contains(w)))?;
    let oracle_ideal = MonomialIdeal::new(ideal.dim(), minimal)?;

    Ok(VerifyReport {
        coefficient: r.clone(),
        points_checked,
        class_mismatches,
        slack_mismatches,
        facet_ideal,
        oracle_ideal,
    })
}

/// Dense exact-rational simplex, two phases, Bland's rule throughout.
mod simplex {
    use super::{One, Rat, Signed, Zero};

    #[derive(Clone, Copy, PartialEq)]
    pub enum Rel {
        Le,
        Eq,
    }

    pub struct Constraint {
        pub coeffs: Vec<Rat>,
        pub rel: Rel,
        pub rhs: Rat,
    }

    pub enum Outcome {
        Infeasible,
        Unbounded,
        Optimal(Rat),
    }

    enum Step {
        Optimal,
        Unbounded,
    }

    struct Tableau {
        a: Vec<Vec<Rat>>,
        b: Vec<Rat>,
        basis: Vec<usize>,
    }

    impl Tableau {
        fn ncols(&self) -> usize {
            self.a.first().map_or(0, Vec::len)
        }

        fn pivot(&mut self, row: usize, col: usize) {
            let p = self.a[row][col].clone();
            for entry in &mut self.a[row] {
                *entry /= &p;
            }
            self.b[row] /= &p;
            for k in 0..self.a.len() {
                if k == row || self.a[k][col].is_zero() {
                    continue;
                }
                let f = self.a[k][col].clone();
                for j in 0..self.a[k].len() {
                    let delta = &f * &self.a[row][j];
                    self.a[k][j] -= delta;
                }
                let delta = &f * &self.b[row];
                self.b[k] -= delta;
            }
            self.basis[row] = col;
        }

        /// Value of the objective at the current basic solution.
        fn value(&self, cost: &[Rat]) -> Rat {
            self.basis
                .iter()
                .zip(&self.b)
                .map(|(&j, bi)| &cost[j] * bi)
                .sum()
        }

        /// Bland-rule simplex iterations for maximizing cost.
        fn run(&mut self, cost: &[Rat]) -> Step {
            loop {
                let mut entering = None;
                for j in 0..self.ncols() {
                    if self.basis.contains(&j) {
                        continue;
                    }
                    let mut rc = cost[j].clone();
                    for (i, &bj) in self.basis.iter().enumerate() {
                        if !cost[bj].is_zero() {
                            rc -= &cost[bj] * &self.a[i][j];
                        }
                    }
                    if rc.is_positive() {
                        entering = Some(j);
                        break;
                    }
                }
                let Some(col) = entering else {
                    return Step::Optimal;
                };
                let mut leaving: Option<(usize, Rat)> = None;
                for i in 0..self.a.len() {
                    if !self.a[i][col].is_positive() {
                        continue;
                    }
                    let ratio = &self.b[i] / &self.a[i][col];
                    let better = match &leaving {
                        None => true,
                        Some((li, best)) => {
                            ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
                let Some((row, _)) = leaving else {
                    return Step::Unbounded;
                };
                self.pivot(row, col);
            }
        }
    }

    /// Maximizes objective . x over the constraints with x >= 0.
    pub fn maximize(objective: &[Rat], constraints: Vec<Constraint>) -> Outcome {
        let nstruct = objective.len();
        let m = constraints.len();

        // normalize to nonnegative rhs; after a flip a Le row needs a
        // surplus column and an artificial, an Eq row just an artificial
        struct Row {
            coeffs: Vec<Rat>,
            rhs: Rat,
            slack_sign: Option<Rat>,
            artificial: bool,
        }
        let mut rows: Vec<Row> = Vec::with_capacity(m);
        for c in constraints {
            let flip = c.rhs.is_negative();
            let (coeffs, rhs) = if flip {
                (c.coeffs.iter().map(|x| -x).collect(), -c.rhs)
            } else {
                (c.coeffs, c.rhs)
            };
            let (slack_sign, artificial) = match (c.rel, flip) {
                (Rel::Le, false) => (Some(Rat::one()), false),
                (Rel::Le, true) => (Some(-Rat::one()), true),
                (Rel::Eq, _) => (None, true),
            };
            rows.push(Row {
                coeffs,
                rhs,
                slack_sign,
                artificial,
            });
        }

        let nslack = rows.iter().filter(|r| r.slack_sign.is_some()).count();
        let nart = rows.iter().filter(|r| r.artificial).count();
        let art_start = nstruct + nslack;
        let ncols = art_start + nart;

        let mut tab = Tableau {
            a: Vec::with_capacity(m),
            b: Vec::with_capacity(m),
            basis: Vec::with_capacity(m),
        };
        let mut next_slack = nstruct;
        let mut next_art = art_start;
        for row in rows {
            let mut line = vec![Rat::zero(); ncols];
            line[..nstruct].clone_from_slice(&row.coeffs);
            let mut basic = None;
            if let Some(sign) = row.slack_sign {
                let positive = sign.is_positive();
                line[next_slack] = sign;
                if positive {
                    basic = Some(next_slack);
                }
                next_slack += 1;
            }
            if row.artificial {
                line[next_art] = Rat::one();
                basic = Some(next_art);
                next_art += 1;
            }
            tab.a.push(line);
            tab.b.push(row.rhs);
            tab.basis
                .push(basic.expect("every normalized row has a basic column"));
        }

        if nart > 0 {
            let mut phase1 = vec![Rat::zero(); ncols];
            for c in phase1.iter_mut().skip(art_start) {
                *c = -Rat::one();
            }
            match tab.run(&phase1) {
                Step::Unbounded => unreachable!("phase-1 objective is bounded above by zero"),
                Step::Optimal => {}
            }
            if tab.value(&phase1).is_negative() {
                return Outcome::Infeasible;
            }
            // drive leftover artificials out of the basis; a row that
            // cannot pivot is a redundant constraint and is dropped
            let mut row = 0;
            while row < tab.a.len() {
                if tab.basis[row] >= art_start {
                    match (0..art_start).find(|&c| !tab.a[row][c].is_zero()) {
                        Some(col) => tab.pivot(row, col),
                        None => {
                            tab.a.remove(row);
                            tab.b.remove(row);
                            tab.basis.remove(row);
                            continue;
                        }
                    }
                }
                row += 1;
            }
            for line in &mut tab.a {
                line.truncate(art_start);
            }
        }

        let mut cost = vec![Rat::zero(); tab.ncols()];
        cost[..nstruct].clone_from_slice(objective);
        match tab.run(&cost) {
            Step::Unbounded => Outcome::Unbounded,
            Step::Optimal => Outcome::Optimal(tab.value(&cost)),
        }
    }
}
