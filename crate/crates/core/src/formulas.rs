//! Closed-form γ, τ and DV for paths, cycles, ladders and prisms.
//!
//! Every function enforces its formula's domain and fails instead of
//! extrapolating. Exceptional orders are dispatched before the congruence
//! classes. Half-integer subexpressions are always an even product halved.

use crate::error::{Error, Result};
use crate::family::{Family, FamilyId};
use crate::report::{checked_add, checked_mul, to_count, Count, DominationReport};

fn require(family: Family, n: usize, min: usize) -> Result<Count> {
    if n < min {
        return Err(Error::InvalidOrder { family, n, min });
    }
    to_count(n, "order")
}

fn require_index(index: usize, n: usize, num_vertices: usize) -> Result<Count> {
    if index == 0 || index > n {
        return Err(Error::out_of_range(index, num_vertices));
    }
    to_count(index, "vertex index")
}

fn half(product: Count) -> Count {
    debug_assert!(product.is_multiple_of(2), "{product} is odd");
    product / 2
}

fn ceil_div(a: Count, b: Count) -> Count {
    a / b + Count::from(!a.is_multiple_of(b))
}

// ⌈(n+1)/2⌉ without forming n + 1
fn half_up(n: Count) -> Count {
    n / 2 + 1
}

fn mul(a: Count, b: Count) -> Result<Count> {
    checked_mul(a, b, "closed form")
}

fn add(a: Count, b: Count) -> Result<Count> {
    checked_add(a, b, "closed form")
}

/// `γ(P_n) = γ(C_n) = ⌈n/3⌉`.
pub fn gamma_path_cycle(n: usize) -> Result<Count> {
    let n = require(Family::Path, n, 1)?;
    Ok(ceil_div(n, 3))
}

/// Number of minimum dominating sets of `P_n`, `n >= 2`.
pub fn tau_path(n: usize) -> Result<Count> {
    let n = require(Family::Path, n, 2)?;
    let k = n / 3;
    Ok(match n % 3 {
        0 => 1,
        1 => add(n, half(mul(k, k.saturating_sub(1))?))?,
        _ => add(2, k)?,
    })
}

/// Domination value of vertex `v` of `P_n`, `n >= 2`.
pub fn dv_path(n: usize, v: usize) -> Result<Count> {
    let n = require(Family::Path, n, 2)?;
    let v = require_index(v, n as usize, n as usize)?;
    let k = n / 3;
    let (q, r) = (v / 3, v % 3);
    Ok(match (n % 3, r) {
        (0, 2) => 1,
        (0, _) => 0,
        (1, 0) => half(mul(q, add(q, 3)?)?),
        (1, 1) => mul(q + 1, add(k - q, 1)?)?,
        (1, _) => half(mul(k - q, add(k - q, 3)?)?),
        (_, 0) => 0,
        (_, 1) => 1 + q,
        (_, _) => k + 1 - q,
    })
}

/// Number of minimum dominating sets of `C_n`, `n >= 3`.
pub fn tau_cycle(n: usize) -> Result<Count> {
    let n = require(Family::Cycle, n, 3)?;
    Ok(match n % 3 {
        0 => 3,
        // n(1 + ⌊n/3⌋/2)
        1 => add(n, half(mul(n, n / 3)?))?,
        _ => n,
    })
}

/// Domination value shared by every vertex of `C_n`, `n >= 3`.
pub fn dv_cycle(n: usize) -> Result<Count> {
    let n = require(Family::Cycle, n, 3)?;
    let c = ceil_div(n, 3);
    Ok(match n % 3 {
        0 => 1,
        1 => half(mul(c, add(c, 1)?)?),
        _ => c,
    })
}

/// `γ(P2 □ Pn) = ⌈(n+1)/2⌉`, `n >= 2`.
pub fn gamma_ladder(n: usize) -> Result<Count> {
    let n = require(Family::Ladder, n, 2)?;
    Ok(half_up(n))
}

/// Number of minimum dominating sets of `P2 □ Pn`, `n >= 2`.
pub fn tau_ladder(n: usize) -> Result<Count> {
    let n = require(Family::Ladder, n, 2)?;
    Ok(match n {
        2 => 6,
        3 => 3,
        6 => 17,
        _ if n % 2 == 1 => 2,
        _ => add(mul(2, n)?, 4)?,
    })
}

/// Shared value `DV(x_i) = DV(y_i)` for column `i` of `P2 □ Pn`, `n >= 2`.
pub fn dv_ladder(n: usize, i: usize) -> Result<Count> {
    let n = require(Family::Ladder, n, 2)?;
    let i = require_index(i, n as usize, 2 * n as usize)?;
    Ok(match n {
        2 => 3,
        3 => 1,
        6 if i == 1 || i == 6 => 7,
        6 => 5,
        _ if n % 2 == 1 => Count::from(i % 2 == 1),
        _ => even_ladder_dv(n, i),
    })
}

/// The even-order ladder formula without the `n = 6` correction.
fn even_ladder_dv(n: Count, i: Count) -> Count {
    if i == 2 || i == n - 1 {
        4
    } else if i % 2 == 1 {
        n - i + 2
    } else {
        i + 1
    }
}

/// `γ(P2 □ Cn)`, `n >= 3`.
pub fn gamma_prism(n: usize) -> Result<Count> {
    let n = require(Family::Prism, n, 3)?;
    Ok(if n % 4 == 0 { n / 2 } else { half_up(n) })
}

/// Domination value shared by every vertex of `P2 □ Cn`, `n >= 3`.
pub fn dv_prism(n: usize) -> Result<Count> {
    let n = require(Family::Prism, n, 3)?;
    Ok(match n {
        3 => 3,
        6 => 17,
        _ => match n % 4 {
            0 => 1,
            2 => {
                let c = half_up(n);
                mul(c, c)?
            }
            _ => half_up(n),
        },
    })
}

/// Number of minimum dominating sets of `P2 □ Cn`, `n >= 3`.
pub fn tau_prism(n: usize) -> Result<Count> {
    let n = require(Family::Prism, n, 3)?;
    Ok(match n {
        3 => 9,
        6 => 51,
        _ => match n % 4 {
            0 => 4,
            2 => mul(n, add(n, 2)?)?,
            _ => mul(2, n)?,
        },
    })
}

pub fn gamma(id: FamilyId) -> Result<Count> {
    match id.family {
        Family::Path => gamma_path_cycle(id.n),
        Family::Cycle => require(Family::Cycle, id.n, 3).and_then(|_| gamma_path_cycle(id.n)),
        Family::Ladder => gamma_ladder(id.n),
        Family::Prism => gamma_prism(id.n),
    }
}

pub fn tau(id: FamilyId) -> Result<Count> {
    match id.family {
        Family::Path => tau_path(id.n),
        Family::Cycle => tau_cycle(id.n),
        Family::Ladder => tau_ladder(id.n),
        Family::Prism => tau_prism(id.n),
    }
}

/// Domination value of vertex id `v` (graph id order).
pub fn dv(id: FamilyId, v: usize) -> Result<Count> {
    id.require_formula_domain()?;
    let num_vertices = id.num_vertices()?;
    if v == 0 || v > num_vertices {
        return Err(Error::out_of_range(v, num_vertices));
    }
    match id.family {
        Family::Path => dv_path(id.n, v),
        Family::Cycle => dv_cycle(id.n),
        Family::Ladder => dv_ladder(id.n, if v > id.n { v - id.n } else { v }),
        Family::Prism => dv_prism(id.n),
    }
}

/// Full report from the closed forms; DV is laid out in graph id order.
pub fn report_family(id: FamilyId) -> Result<DominationReport> {
    id.require_formula_domain()?;
    let n = id.n;
    let num_vertices = id.num_vertices()?;
    let dv = match id.family {
        Family::Path => (1..=n).map(|v| dv_path(n, v)).collect::<Result<Vec<_>>>()?,
        Family::Cycle => vec![dv_cycle(n)?; n],
        Family::Ladder => {
            let row = (1..=n)
                .map(|i| dv_ladder(n, i))
                .collect::<Result<Vec<_>>>()?;
            row.iter().chain(row.iter()).copied().collect()
        }
        Family::Prism => vec![dv_prism(n)?; num_vertices],
    };
    Ok(DominationReport::new(gamma(id)?, tau(id)?, dv))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle_values() {
        assert_eq!(gamma_path_cycle(3).unwrap(), 1);
        assert_eq!(gamma_path_cycle(7).unwrap(), 3);
        assert_eq!(gamma_path_cycle(9).unwrap(), 3);
        assert_eq!(gamma_path_cycle(1).unwrap(), 1);
        assert!(gamma_path_cycle(0).is_err());

        assert_eq!(tau_path(3).unwrap(), 1);
        assert_eq!(tau_path(4).unwrap(), 4);
        assert_eq!(tau_path(5).unwrap(), 3);
        assert!(matches!(
            tau_path(1),
            Err(Error::InvalidOrder { min: 2, .. })
        ));

        assert_eq!(dv_path(6, 2).unwrap(), 1);
        assert_eq!(dv_path(6, 3).unwrap(), 0);
        assert_eq!(dv_path(4, 1).unwrap(), 2);
        assert_eq!(dv_path(5, 4).unwrap(), 2);
        assert!(dv_path(5, 6).is_err());
        assert!(dv_path(5, 0).is_err());

        assert_eq!(tau_cycle(6).unwrap(), 3);
        assert_eq!(tau_cycle(4).unwrap(), 6);
        assert_eq!(tau_cycle(7).unwrap(), 14);
        assert!(tau_cycle(2).is_err());
        assert_eq!(dv_cycle(6).unwrap(), 1);
        assert_eq!(dv_cycle(7).unwrap(), 6);
        assert_eq!(dv_cycle(5).unwrap(), 2);
        assert!(dv_cycle(2).is_err());
    }

    #[test]
    fn tau_path_one_mod_three_closed_form() {
        // τ(P_{3k+1}) = (k² + 5k + 2) / 2
        for k in 1..200u64 {
            let n = (3 * k + 1) as usize;
            assert_eq!(tau_path(n).unwrap(), (k * k + 5 * k + 2) / 2);
        }
    }

    #[test]
    fn strip_values() {
        assert_eq!(gamma_ladder(3).unwrap(), 2);
        assert_eq!(gamma_ladder(5).unwrap(), 3);
        assert_eq!(gamma_ladder(6).unwrap(), 4);
        assert!(gamma_ladder(1).is_err());

        assert_eq!(tau_ladder(2).unwrap(), 6);
        assert_eq!(tau_ladder(3).unwrap(), 3);
        assert_eq!(tau_ladder(6).unwrap(), 17);
        assert_eq!(tau_ladder(9).unwrap(), 2);
        assert_eq!(tau_ladder(8).unwrap(), 20);

        assert_eq!(dv_ladder(6, 3).unwrap(), 5);
        assert_eq!(dv_ladder(7, 2).unwrap(), 0);
        assert_eq!(dv_ladder(8, 1).unwrap(), 9);
        assert_eq!(dv_ladder(2, 1).unwrap(), 3);
        assert!(dv_ladder(8, 9).is_err());

        assert_eq!(gamma_prism(8).unwrap(), 4);
        assert_eq!(gamma_prism(6).unwrap(), 4);
        assert_eq!(gamma_prism(3).unwrap(), 2);
        assert!(gamma_prism(2).is_err());

        assert_eq!(dv_prism(4).unwrap(), 1);
        assert_eq!(dv_prism(6).unwrap(), 17);
        assert_eq!(dv_prism(9).unwrap(), 5);
        assert_eq!(dv_prism(10).unwrap(), 36);

        assert_eq!(tau_prism(3).unwrap(), 9);
        assert_eq!(tau_prism(6).unwrap(), 51);
        assert_eq!(tau_prism(10).unwrap(), 120);
    }

    #[test]
    fn reports() {
        let r = report_family(FamilyId::ladder(4)).unwrap();
        assert_eq!((r.gamma, r.tau), (3, 12));
        assert_eq!(r.dv, vec![5, 4, 4, 5, 5, 4, 4, 5]);

        let r = report_family(FamilyId::prism(3)).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (2, 9, vec![3; 6]));

        let r = report_family(FamilyId::path(3)).unwrap();
        assert_eq!((r.gamma, r.tau, r.dv), (1, 1, vec![0, 1, 0]));

        assert!(report_family(FamilyId::path(1)).is_err());
        assert!(report_family(FamilyId::ladder(1)).is_err());
        assert!(report_family(FamilyId::cycle(2)).is_err());
        assert!(gamma(FamilyId::cycle(2)).is_err());
    }

    #[test]
    fn six_ladder_differs_from_generic_even_by_extra_set() {
        // the extra γ-set {x2, y2, x5, y5} adds one at columns 2 and 5 only
        for i in 1..=6usize {
            let extra = Count::from(i == 2 || i == 5);
            assert_eq!(
                dv_ladder(6, i).unwrap(),
                even_ladder_dv(6, i as Count) + extra
            );
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(tau_prism(usize::MAX - 1), Err(Error::Overflow(_))));
        assert!(matches!(dv_prism(usize::MAX - 5), Err(Error::Overflow(_))));
        assert!(matches!(
            tau_ladder(usize::MAX - 1),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(tau_cycle(usize::MAX - 2), Err(Error::Overflow(_))));
        assert_eq!(
            gamma_ladder(usize::MAX).unwrap(),
            (usize::MAX / 2 + 1) as Count
        );
    }

    #[test]
    fn single_vertex_values() {
        assert_eq!(dv(FamilyId::ladder(6), 8).unwrap(), 5);
        assert_eq!(dv(FamilyId::ladder(6), 12).unwrap(), 7);
        assert_eq!(dv(FamilyId::path(7), 4).unwrap(), dv_path(7, 4).unwrap());
        assert!(dv(FamilyId::ladder(6), 13).is_err());
        assert!(dv(FamilyId::ladder(1), 1).is_err());
        assert!(matches!(
            dv(FamilyId::prism(usize::MAX), 1),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(
            report_family(FamilyId::prism(usize::MAX)),
            Err(Error::Overflow(_))
        ));
        assert_eq!(
            dv(FamilyId::prism(1_000_000_000_001), 2_000_000_000_002).unwrap(),
            dv_prism(1_000_000_000_001).unwrap()
        );
    }
}
