//! Cross-engine equivalence checks and set-level structural checks.
//!
//! Every check produces [`Verdict`]s. Checks never stop at the first failure;
//! results are returned sorted by family, order, then check name.

mod components;
mod predicate;

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;

pub use components::{component_profile, ComponentProfile};
pub use predicate::{filtered_counts, filtered_dv, filtered_tau, Predicate};

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::family::{Family, FamilyId};
use crate::graph::{strip_id, Graph, Row, VertexSet};
use crate::oracle;
use crate::report::{Count, DominationReport};

/// Two conflicting values and where each came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub quantity: String,
    pub left_source: String,
    pub left_value: String,
    pub right_source: String,
    pub right_value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Mismatch),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub instance: Option<FamilyId>,
    pub outcome: Outcome,
}

impl Verdict {
    fn pass(check: impl Into<String>, instance: Option<FamilyId>) -> Self {
        Verdict {
            check: check.into(),
            instance,
            outcome: Outcome::Pass,
        }
    }

    fn skipped(
        check: impl Into<String>,
        instance: Option<FamilyId>,
        reason: impl Into<String>,
    ) -> Self {
        Verdict {
            check: check.into(),
            instance,
            outcome: Outcome::Skipped(reason.into()),
        }
    }

    fn expect_eq(
        check: impl Into<String>,
        instance: Option<FamilyId>,
        quantity: impl Into<String>,
        left: (&str, impl fmt::Debug),
        right: (&str, impl fmt::Debug),
    ) -> Self {
        let (l, r) = (format!("{:?}", left.1), format!("{:?}", right.1));
        let outcome = if l == r {
            Outcome::Pass
        } else {
            Outcome::Fail(Mismatch {
                quantity: quantity.into(),
                left_source: left.0.to_string(),
                left_value: l,
                right_source: right.0.to_string(),
                right_value: r,
            })
        };
        Verdict {
            check: check.into(),
            instance,
            outcome,
        }
    }

    fn for_instance(mut self, id: FamilyId) -> Self {
        self.instance = Some(id);
        self
    }

    pub fn is_pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }

    fn sort_key(&self) -> (Option<FamilyId>, &str) {
        (self.instance, &self.check)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let instance = self
            .instance
            .map_or_else(|| "-".to_string(), |id| id.to_string());
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {} {}", instance, self.check),
            Outcome::Skipped(reason) => write!(f, "SKIP {} {}: {}", instance, self.check, reason),
            Outcome::Fail(m) => write!(
                f,
                "FAIL {} {}: {} differs, {} = {} vs {} = {}",
                instance,
                self.check,
                m.quantity,
                m.left_source,
                m.left_value,
                m.right_source,
                m.right_value
            ),
        }
    }
}

fn sorted(mut verdicts: Vec<Verdict>) -> Vec<Verdict> {
    verdicts.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    verdicts
}

/// `Σ DV = τ·γ` and `0 <= DV(v) <= τ`.
pub fn check_observations(r: &DominationReport) -> Verdict {
    const CHECK: &str = "dv-sum-identity";
    let sum = r.dv_sum();
    let product = r.tau_gamma();
    if sum.is_none() || product.is_none() || sum != product {
        return Verdict::expect_eq(
            CHECK,
            None,
            "sum identity",
            ("sum(dv)", sum),
            ("tau*gamma", product),
        );
    }
    if let Some((i, &d)) = r.dv.iter().enumerate().find(|(_, &d)| d > r.tau) {
        return Verdict::expect_eq(
            CHECK,
            None,
            format!("dv({}) <= tau", i + 1),
            ("dv", d),
            ("tau", r.tau),
        );
    }
    Verdict::pass(CHECK, None)
}

fn compare(id: FamilyId, a: (&str, &DominationReport), b: (&str, &DominationReport)) -> Verdict {
    let check = format!("cross-check {}:{}", a.0, b.0);
    for (engine, r) in [a, b] {
        let v = check_observations(r);
        if let Outcome::Fail(mut m) = v.outcome {
            m.quantity = format!("{} ({engine})", m.quantity);
            return Verdict {
                check,
                instance: Some(id),
                outcome: Outcome::Fail(m),
            };
        }
    }
    let quantities = [
        ("gamma", a.1.gamma.to_string(), b.1.gamma.to_string()),
        ("tau", a.1.tau.to_string(), b.1.tau.to_string()),
        ("dv", format!("{:?}", a.1.dv), format!("{:?}", b.1.dv)),
    ];
    for (name, l, r) in quantities {
        if l != r {
            return Verdict {
                check,
                instance: Some(id),
                outcome: Outcome::Fail(Mismatch {
                    quantity: name.to_string(),
                    left_source: a.0.to_string(),
                    left_value: l,
                    right_source: b.0.to_string(),
                    right_value: r,
                }),
            };
        }
    }
    Verdict::pass(check, Some(id))
}

/// Compares two engines on every order in `orders`, one verdict per order.
///
/// Oracle budget exhaustion and out-of-domain orders become skipped
/// verdicts; any other engine error is returned.
pub fn cross_check(
    family: Family,
    orders: RangeInclusive<usize>,
    left: &dyn Engine,
    right: &dyn Engine,
) -> Result<Vec<Verdict>> {
    let check = format!("cross-check {}:{}", left.name(), right.name());
    let verdicts = orders
        .into_par_iter()
        .map(|n| {
            let id = FamilyId::new(family, n);
            for engine in [left, right] {
                if !engine.supports(id) {
                    return Ok(Verdict::skipped(
                        &check,
                        Some(id),
                        format!("{} does not cover {id}", engine.name()),
                    ));
                }
            }
            let reports = (left.report(id), right.report(id));
            match reports {
                (Ok(a), Ok(b)) => Ok(compare(id, (left.name(), &a), (right.name(), &b))),
                (Err(e @ Error::BudgetExceeded { .. }), _)
                | (_, Err(e @ Error::BudgetExceeded { .. })) => {
                    Ok(Verdict::skipped(&check, Some(id), e.to_string()))
                }
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(sorted(verdicts))
}

/// Universally quantified set-level checks over every γ-set of each order.
///
/// Ladders: the corner lemma, existence of a γ-set avoiding all four
/// degree-two vertices only at `n ∈ {3, 6}`, uniqueness of the γ-set through
/// `x1` (and `y1`) for odd `n >= 5`, and for even `n ∉ {2, 6}` the split of
/// DV into corner-free and corner-containing parts together with the closed
/// forms of both parts.
///
/// Prisms: for `n ≡ 2 (mod 4)` no same-side component has more than three
/// vertices and no γ-set has a lone 2-vertex component as its largest; for
/// `n ≡ 0 (mod 4)` every vertex is in exactly one of the four γ-sets; for
/// `n ≡ 1 (mod 4)`, `n >= 5`, no γ-set contains a rung pair.
pub fn check_structural_lemmas(
    family: Family,
    orders: RangeInclusive<usize>,
    size_cap: Option<usize>,
) -> Result<Vec<Verdict>> {
    if !family.is_strip() {
        return Err(Error::NotStrip);
    }
    let verdicts = orders
        .into_par_iter()
        .map(|n| -> Result<Vec<Verdict>> {
            let id = FamilyId::new(family, n);
            let g = id.graph()?;
            let sets = match oracle::enumerate_gamma_sets(&g, size_cap) {
                Ok(sets) => sets,
                Err(e @ Error::BudgetExceeded { .. }) => {
                    return Ok(vec![Verdict::skipped(
                        "structural-lemmas",
                        Some(id),
                        e.to_string(),
                    )])
                }
                Err(e) => return Err(e),
            };
            let verdicts = match family {
                Family::Ladder => ladder_checks(&g, n, &sets)?,
                _ => prism_checks(&g, n, &sets)?,
            };
            Ok(verdicts.into_iter().map(|v| v.for_instance(id)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(sorted(verdicts.into_iter().flatten().collect()))
}

fn members(n: usize, d: &VertexSet) -> impl Fn(Row, usize) -> bool + '_ {
    move |row, column| d.contains(strip_id(n, row, column))
}

fn ladder_checks(g: &Graph, n: usize, sets: &[VertexSet]) -> Result<Vec<Verdict>> {
    use Row::{X, Y};
    let mut out = Vec::new();

    let violation = sets.iter().find(|d| {
        let has = members(n, d);
        let left = has(X, 1) || has(Y, 1) || (has(X, 2) && has(Y, 2));
        let right = has(X, n) || has(Y, n) || (has(X, n - 1) && has(Y, n - 1));
        !(left && right)
    });
    out.push(Verdict::expect_eq(
        "corner-lemma",
        None,
        "first violating set",
        ("oracle", violation.map(VertexSet::members)),
        ("lemma", None::<&[usize]>),
    ));

    if n >= 3 {
        let exists = filtered_tau(g, sets, Predicate::NoDegreeTwo)? > 0;
        out.push(Verdict::expect_eq(
            "degree-two-free-iff-3-or-6",
            None,
            "degree-two-free γ-set exists",
            ("oracle", exists),
            ("lemma", n == 3 || n == 6),
        ));
    }

    if n % 2 == 1 && n >= 5 {
        let x1 = filtered_counts(g, sets, Predicate::HasX1)?[strip_id(n, X, 1) - 1];
        let y1 = filtered_counts(g, sets, Predicate::HasY1)?[strip_id(n, Y, 1) - 1];
        out.push(Verdict::expect_eq(
            "odd-corner-uniqueness",
            None,
            "γ-sets through x1, y1",
            ("oracle", (x1, y1)),
            ("lemma", (1, 1)),
        ));
    }

    if n.is_multiple_of(2) && n >= 4 && n != 6 {
        let dv = oracle::tally(g.num_vertices(), sets)?.dv;
        let corner_free = filtered_counts(g, sets, Predicate::CornerFree)?;
        let with_corner = filtered_counts(g, sets, Predicate::HasX1OrY1)?;
        let split: Vec<Count> = corner_free
            .iter()
            .zip(&with_corner)
            .map(|(a, b)| a + b)
            .collect();
        out.push(Verdict::expect_eq(
            "dv-split",
            None,
            "dv",
            ("oracle", &dv),
            ("split", &split),
        ));

        let (dv1, dv2): (Vec<Count>, Vec<Count>) = (1..=n).map(|i| even_ladder_split(n, i)).unzip();
        let row = |v: &[Count], r: Row| {
            (1..=n)
                .map(|i| v[strip_id(n, r, i) - 1])
                .collect::<Vec<_>>()
        };
        for r in [X, Y] {
            let name = if r == X { "x" } else { "y" };
            out.push(Verdict::expect_eq(
                format!("corner-free-dv-{name}"),
                None,
                "filtered dv",
                ("oracle", row(&corner_free, r)),
                ("closed form", &dv1),
            ));
            out.push(Verdict::expect_eq(
                format!("corner-dv-{name}"),
                None,
                "filtered dv",
                ("oracle", row(&with_corner, r)),
                ("closed form", &dv2),
            ));
        }
    }
    Ok(out)
}

/// Closed forms of the corner-free and corner-containing parts of DV at
/// column `i` of an even ladder.
fn even_ladder_split(n: usize, i: usize) -> (Count, Count) {
    let corner_free = if i == 2 {
        2
    } else {
        Count::from(i.is_multiple_of(2))
    };
    let with_corner = if i.is_multiple_of(2) {
        i
    } else if i == n - 1 {
        4
    } else {
        n + 2 - i
    };
    (corner_free, with_corner as Count)
}

fn prism_checks(g: &Graph, n: usize, sets: &[VertexSet]) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    match n % 4 {
        2 => {
            let profiles = sets
                .iter()
                .map(|d| component_profile(g, d))
                .collect::<Result<Vec<_>>>()?;
            let alpha = profiles
                .iter()
                .map(ComponentProfile::alpha)
                .max()
                .unwrap_or(0);
            out.push(Verdict::expect_eq(
                "max-component-at-most-3",
                None,
                "largest same-side component",
                ("oracle", alpha.min(4)),
                ("lemma", alpha.min(3)),
            ));
            let lone = sets
                .iter()
                .zip(&profiles)
                .find(|(_, p)| p.alpha() == 2 && p.count_of(2) == 1)
                .map(|(d, _)| d.members());
            out.push(Verdict::expect_eq(
                "no-lone-pair-component",
                None,
                "γ-set with exactly one 2-vertex component",
                ("oracle", lone),
                ("lemma", None::<&[usize]>),
            ));
        }
        0 => {
            let dv = oracle::tally(g.num_vertices(), sets)?.dv;
            out.push(Verdict::expect_eq(
                "unique-cover",
                None,
                "(tau, max dv, min dv)",
                ("oracle", (sets.len(), dv.iter().max(), dv.iter().min())),
                ("lemma", (4usize, Some(&1u64), Some(&1u64))),
            ));
        }
        1 if n >= 5 => {
            let count = filtered_tau(g, sets, Predicate::ContainsRungPair)?;
            out.push(Verdict::expect_eq(
                "no-rung-pair",
                None,
                "γ-sets containing a rung pair",
                ("oracle", count),
                ("lemma", 0u64),
            ));
        }
        _ => {}
    }
    Ok(out)
}
