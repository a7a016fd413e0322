//! Exact feasibility of homogeneous systems of linear inequalities.
//!
//! A system mixes strict rows `a·x > 0` and weak rows `a·x ≥ 0`. Every row
//! is homogeneous, so any solution can be scaled until each strict row
//! reaches 1; feasibility is therefore equivalent to feasibility of
//! `a·x ≥ 1` (strict rows) and `a·x ≥ 0` (weak rows), which a phase-1
//! simplex decides in exact rational arithmetic. Bland's rule guarantees
//! termination, and every returned witness is re-checked against the
//! original rows before it leaves this module. Fourier–Motzkin elimination
//! answers the same question by a completely different route and serves as a
//! slow cross-check in tests.

use std::collections::HashMap;

use num::{BigInt, One, Signed, Zero};

use crate::error::Error;
use crate::rational::{primitive_integer_row, Rational};
use crate::Result;

/// Relation of a homogeneous row to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    /// `a·x > 0`.
    Gt,
    /// `a·x ≥ 0`.
    Ge,
}

/// Outcome of a feasibility question, with an exact witness when one exists.
#[derive(Clone, Debug, PartialEq)]
pub enum FeasibilityResult {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            FeasibilityResult::Feasible(x) => Some(x),
            FeasibilityResult::Infeasible => None,
        }
    }
}

/// A homogeneous system of strict and weak linear inequalities.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    names: Vec<String>,
    rows: Vec<(Vec<Rational>, Rel)>,
}

impl LinearSystem {
    /// Empty system on `vars` variables named `x1 … x<vars>`.
    pub fn new(vars: usize) -> Self {
        Self::with_names((1..=vars).map(|i| format!("x{i}")).collect())
    }

    /// Empty system with explicit variable names.
    pub fn with_names(names: Vec<String>) -> Self {
        LinearSystem {
            names,
            rows: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rows(&self) -> &[(Vec<Rational>, Rel)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Appends a row `coeffs · x REL 0`. Panics if the width is wrong.
    pub fn push(&mut self, coeffs: Vec<Rational>, rel: Rel) {
        assert_eq!(coeffs.len(), self.vars(), "row width mismatch");
        self.rows.push((coeffs, rel));
    }

    /// Exact check of a candidate solution against every row.
    pub fn satisfied_by(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.vars() {
            return Err(Error::WitnessWidth {
                expected: self.vars(),
                got: x.len(),
            });
        }
        Ok(self.first_violation(x).is_none())
    }

    /// Index of the first row a candidate violates, if any. The candidate
    /// must have the right width.
    pub fn first_violation(&self, x: &[Rational]) -> Option<usize> {
        self.rows.iter().position(|(a, rel)| {
            let dot: Rational = a.iter().zip(x).map(|(c, v)| c * v).sum();
            match rel {
                Rel::Gt => !dot.is_positive(),
                Rel::Ge => dot.is_negative(),
            }
        })
    }

    /// Decides feasibility by exact phase-1 simplex; returns a verified
    /// witness when feasible.
    pub fn solve(&self) -> Result<FeasibilityResult> {
        let nv = self.vars();
        let m = self.rows.len();
        if m == 0 {
            return Ok(FeasibilityResult::Feasible(vec![Rational::zero(); nv]));
        }

        // Columns: nv (x⁺) | nv (x⁻) | m surplus | m artificial | rhs.
        // Row i encodes a_i·x - s_i + t_i = b_i with b_i ∈ {0, 1}.
        let cols = 2 * nv + 2 * m;
        let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
        for (i, (a, rel)) in self.rows.iter().enumerate() {
            let mut row = vec![Rational::zero(); cols + 1];
            for (j, c) in a.iter().enumerate() {
                row[j] = c.clone();
                row[nv + j] = -c.clone();
            }
            row[2 * nv + i] = -Rational::one();
            row[2 * nv + m + i] = Rational::one();
            row[cols] = match rel {
                Rel::Gt => Rational::one(),
                Rel::Ge => Rational::zero(),
            };
            tab.push(row);
        }
        let mut basis: Vec<usize> = (0..m).map(|i| 2 * nv + m + i).collect();

        // Reduced-cost row for minimizing the artificial sum; its rhs entry
        // holds minus the current objective value.
        let mut z = vec![Rational::zero(); cols + 1];
        for (j, zj) in z.iter_mut().enumerate() {
            let mut s = Rational::zero();
            for row in &tab {
                s += &row[j];
            }
            *zj = -s;
        }
        for i in 0..m {
            z[2 * nv + m + i] += Rational::one();
        }

        loop {
            // Bland's rule: first improving column.
            let Some(e) = (0..cols).find(|&j| z[j].is_negative()) else {
                break;
            };
            let mut leave: Option<usize> = None;
            for r in 0..m {
                if !tab[r][e].is_positive() {
                    continue;
                }
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let rr = &tab[r][cols] / &tab[r][e];
                        let rl = &tab[l][cols] / &tab[l][e];
                        rr < rl || (rr == rl && basis[r] < basis[l])
                    }
                };
                if better {
                    leave = Some(r);
                }
            }
            let Some(l) = leave else {
                // The artificial sum is bounded below by zero, so phase 1
                // can never be unbounded.
                return Err(Error::Internal("phase-1 simplex reported unbounded".into()));
            };

            let piv = tab[l][e].clone();
            for v in tab[l].iter_mut() {
                *v /= &piv;
            }
            let prow = tab[l].clone();
            for (r, row) in tab.iter_mut().enumerate() {
                if r == l || row[e].is_zero() {
                    continue;
                }
                let f = row[e].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v -= p * &f;
                }
            }
            if !z[e].is_zero() {
                let f = z[e].clone();
                for (v, p) in z.iter_mut().zip(&prow) {
                    *v -= p * &f;
                }
            }
            basis[l] = e;
        }

        let objective = -z[cols].clone();
        if objective.is_negative() {
            return Err(Error::Internal("phase-1 objective went negative".into()));
        }
        if objective.is_positive() {
            return Ok(FeasibilityResult::Infeasible);
        }
        let mut x = vec![Rational::zero(); nv];
        for (r, &b) in basis.iter().enumerate() {
            if b < nv {
                x[b] += &tab[r][cols];
            } else if b < 2 * nv {
                x[b - nv] -= &tab[r][cols];
            }
        }
        if !self.satisfied_by(&x)? {
            return Err(Error::Internal(
                "simplex witness failed exact re-verification".into(),
            ));
        }
        Ok(FeasibilityResult::Feasible(x))
    }

    /// Decides feasibility by Fourier–Motzkin elimination, tracking
    /// strictness: a combination is strict when either parent is. Rows are
    /// reduced to primitive integer vectors and deduplicated after every
    /// elimination round to tame growth. Exponential in the worst case; used
    /// as an independent oracle on small systems.
    pub fn fourier_motzkin_feasible(&self) -> bool {
        let mut rows = self.rows.clone();
        for k in 0..self.vars() {
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            let mut table: HashMap<Vec<BigInt>, Rel> = HashMap::new();
            let mut contradiction = false;
            let mut add = |a: Vec<Rational>, rel: Rel, table: &mut HashMap<Vec<BigInt>, Rel>| {
                if a.iter().all(Zero::is_zero) {
                    // 0 ≥ 0 is vacuous; 0 > 0 is the contradiction that
                    // certifies infeasibility.
                    return rel == Rel::Ge;
                }
                let entry = table.entry(primitive_integer_row(&a)).or_insert(rel);
                if rel == Rel::Gt {
                    *entry = Rel::Gt;
                }
                true
            };
            for (a, rel) in rows {
                if a[k].is_positive() {
                    pos.push((a, rel));
                } else if a[k].is_negative() {
                    neg.push((a, rel));
                } else if !add(a, rel, &mut table) {
                    contradiction = true;
                }
            }
            for (p, prel) in &pos {
                for (q, qrel) in &neg {
                    let combined: Vec<Rational> = p
                        .iter()
                        .zip(q)
                        .map(|(pc, qc)| pc * (-&q[k]) + qc * &p[k])
                        .collect();
                    debug_assert!(combined[k].is_zero());
                    let rel = if *prel == Rel::Gt || *qrel == Rel::Gt {
                        Rel::Gt
                    } else {
                        Rel::Ge
                    };
                    if !add(combined, rel, &mut table) {
                        contradiction = true;
                    }
                }
            }
            if contradiction {
                return false;
            }
            rows = table
                .into_iter()
                .map(|(ints, rel)| {
                    (
                        ints.into_iter().map(Rational::from_integer).collect(),
                        rel,
                    )
                })
                .collect();
        }
        // Only all-zero weak rows can remain, and those were dropped.
        true
    }
}

impl std::fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (a, rel) in &self.rows {
            let mut started = false;
            for (c, name) in a.iter().zip(&self.names) {
                if c.is_zero() {
                    continue;
                }
                if started {
                    write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
                } else if c.is_negative() {
                    write!(f, "-")?;
                }
                let mag = c.abs();
                if !mag.is_one() {
                    write!(f, "{mag} ")?;
                }
                write!(f, "{name}")?;
                started = true;
            }
            if !started {
                write!(f, "0")?;
            }
            writeln!(f, " {} 0", if *rel == Rel::Gt { ">" } else { ">=" })?;
        }
        Ok(())
    }
}
