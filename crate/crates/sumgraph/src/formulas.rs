//! Closed-form degree and edge counts for the interval families `G_n` and
//! `G_{r,s}`, plus the interval edge sum chromatic number.
//!
//! Floor divisions are always taken of non-negative quantities (squares and
//! absolute values), so Rust's truncating `/` is safe everywhere here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The parameters of an interval graph `G_{r,s}`, `r <= 0 <= s`, `r + s >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSpec {
    pub r: i64,
    pub s: i64,
}

impl IntervalSpec {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r > 0 || s < 0 {
            return Err(Error::domain(format!(
                "interval spec needs r <= 0 <= s, got ({r}, {s})"
            )));
        }
        if r + s < 0 {
            return Err(Error::IntervalConvention { r, s });
        }
        Ok(IntervalSpec { r, s })
    }

    /// Graph order `n = s - r + 1`.
    pub fn order(&self) -> i64 {
        self.s - self.r + 1
    }
}

/// Degree of the vertex labeled `i` in `G_n = G+([1, n])`:
/// `n - i - 1` for `i` up to `floor(n/2)`, and `n - i` above.
pub fn degree_gn(n: i64, i: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::domain(format!("G_n needs n >= 1, got {n}")));
    }
    if i < 1 || i > n {
        return Err(Error::domain(format!("label {i} outside [1, {n}]")));
    }
    Ok(if i <= n / 2 { n - i - 1 } else { n - i })
}

/// Degree of the vertex labeled `i` in `G_{r,s}`, `r < 0 < s`, with
/// `n = s - r + 1`. Five cases: the positive side follows `G_s` shifted, the
/// negative side mirrors it, and 0 is adjacent to everything.
pub fn degree_grs(r: i64, s: i64, i: i64) -> Result<i64> {
    if !(r < 0 && 0 < s) {
        return Err(Error::domain(format!(
            "G_(r,s) needs r < 0 < s, got ({r}, {s})"
        )));
    }
    if i < r || i > s {
        return Err(Error::domain(format!("label {i} outside [{r}, {s}]")));
    }
    let n = s - r + 1;
    Ok(if i == 0 {
        n - 1
    } else if i > 0 {
        if i <= s / 2 {
            n - i - 1
        } else {
            n - i
        }
    } else if -i <= (-r) / 2 {
        n + i - 1
    } else {
        n + i
    })
}

/// `||G_n|| = floor((n-1)^2 / 4)`.
pub fn edge_count_gn(n: i64) -> i64 {
    (n - 1) * (n - 1) / 4
}

/// `||G_{r,s}|| = -rs - r + s + floor((r+1)^2/4) + floor((s-1)^2/4)`.
///
/// The equivalent quarter/half display
/// `(r^2 + s^2 - 3r + 3s - 4rs)/4 - (floor(-r/2) + floor(s/2))/2`
/// is evaluated alongside and the two are asserted equal.
pub fn edge_count_grs(r: i64, s: i64) -> i64 {
    debug_assert!(r < 0 && 0 < s);
    let primary = -r * s - r + s + (r + 1) * (r + 1) / 4 + (s - 1) * (s - 1) / 4;
    let x = r * r + s * s - 3 * r + 3 * s - 4 * r * s;
    let y = (-r) / 2 + s / 2;
    // x - 2y is a non-negative multiple of 4, so this stays in integers.
    debug_assert_eq!((x - 2 * y) % 4, 0);
    let alternate = (x - 2 * y) / 4;
    assert_eq!(
        primary, alternate,
        "the two closed forms disagree at ({r}, {s})"
    );
    primary
}

/// The four-branch parity form of `||G_{r,s}||` over `r = -(2a+1) | -2a` and
/// `s = 2b+1 | 2b`.
pub fn edge_count_parity(r: i64, s: i64) -> i64 {
    debug_assert!(r < 0 && 0 < s);
    let r_odd = r.rem_euclid(2) == 1; // r = -(2a+1)
    let s_odd = s % 2 == 1;
    let a = if r_odd { (-r - 1) / 2 } else { -r / 2 };
    let b = if s_odd { (s - 1) / 2 } else { s / 2 };
    let core = a * a + b * b + 4 * a * b;
    match (r_odd, s_odd) {
        (true, true) => core + 4 * a + 4 * b + 3,
        (true, false) => core + 2 * a + 3 * b + 1,
        (false, true) => core + 3 * a + 2 * b + 1,
        (false, false) => core + a + b,
    }
}

/// `chi'_Z-sum(G_{r,s}) = |r| + s + 1`: every class `E_r ... E_s` is
/// non-empty when `r < 0 < s`.
pub fn chi_sum_grs(r: i64, s: i64) -> i64 {
    debug_assert!(r < 0 && 0 < s);
    -r + s + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::IntegralSumGraph;

    #[test]
    fn gn_degrees() {
        assert_eq!(degree_gn(6, 1).unwrap(), 4);
        assert_eq!(degree_gn(6, 6).unwrap(), 0);
        assert_eq!(degree_gn(7, 4).unwrap(), 3);
        assert!(degree_gn(6, 0).is_err());
        assert!(degree_gn(6, 7).is_err());
    }

    #[test]
    fn grs_degrees() {
        assert_eq!(degree_grs(-2, 4, 0).unwrap(), 6);
        assert_eq!(degree_grs(-2, 4, -1).unwrap(), 5);
        assert_eq!(degree_grs(-2, 4, 4).unwrap(), 3);
        assert!(degree_grs(-2, 4, 5).is_err());
        assert!(degree_grs(0, 4, 1).is_err());
    }

    #[test]
    fn gn_edge_counts() {
        assert_eq!(edge_count_gn(7), 9);
        assert_eq!(edge_count_gn(1), 0);
        assert_eq!(edge_count_gn(6), 6);
    }

    #[test]
    fn grs_edge_counts() {
        assert_eq!(edge_count_grs(-2, 4), 16);
        assert_eq!(edge_count_grs(-3, 3), 17);
        assert_eq!(edge_count_grs(-1, 1), 3);
        assert_eq!(edge_count_grs(-4, 7), 50);
    }

    #[test]
    fn parity_form_cases() {
        assert_eq!(edge_count_parity(-4, 4), 28);
        assert_eq!(edge_count_parity(-3, 3), 17);
        assert_eq!(edge_count_parity(-1, 2), 5);
    }

    #[test]
    fn parity_form_agrees_with_primary_form() {
        for s in 1..=12 {
            for r in -s..=-1 {
                assert_eq!(
                    edge_count_parity(r, s),
                    edge_count_grs(r, s),
                    "parity form diverges at ({r}, {s})"
                );
            }
        }
    }

    #[test]
    fn chi_sum_examples() {
        assert_eq!(chi_sum_grs(-1, 5), 7);
        assert_eq!(chi_sum_grs(-2, 4), 7);
        assert_eq!(chi_sum_grs(-6, 6), 13);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for n in 1..=25 {
            let total: i64 = (1..=n).map(|i| degree_gn(n, i).unwrap()).sum();
            assert_eq!(total, 2 * edge_count_gn(n), "handshake fails at n = {n}");
        }
    }

    #[test]
    fn degree_sequence_of_even_and_odd_orders() {
        // G_2k: {2k-2, 2k-3, ..., k-1, k-1, k-2, ..., 1, 0}
        for k in 1..=10i64 {
            let n = 2 * k;
            let mut degrees: Vec<i64> = (1..=n).map(|i| degree_gn(n, i).unwrap()).collect();
            degrees.sort_unstable_by(|a, b| b.cmp(a));
            let mut expected: Vec<i64> = (k - 1..=2 * k - 2).rev().collect();
            expected.extend((0..=k - 1).rev());
            assert_eq!(degrees, expected, "even degree sequence at k = {k}");
        }
        // G_2k+1: {2k-1, ..., k, k, k-1, ..., 1, 0}
        for k in 1..=10i64 {
            let n = 2 * k + 1;
            let mut degrees: Vec<i64> = (1..=n).map(|i| degree_gn(n, i).unwrap()).collect();
            degrees.sort_unstable_by(|a, b| b.cmp(a));
            let mut expected: Vec<i64> = (k..=2 * k - 1).rev().collect();
            expected.extend((0..=k).rev());
            assert_eq!(degrees, expected, "odd degree sequence at k = {k}");
        }
    }

    #[test]
    fn formulas_match_brute_force_on_the_grid() {
        for n in 1..=20 {
            let g = IntegralSumGraph::from_labels(1..=n).unwrap();
            assert_eq!(edge_count_gn(n), g.size() as i64);
            for i in 1..=n {
                assert_eq!(degree_gn(n, i).unwrap(), g.degree(i).unwrap() as i64);
            }
        }
        for s in 1..=10 {
            for r in -s..=-1 {
                let g = IntegralSumGraph::interval(r, s).unwrap();
                assert_eq!(edge_count_grs(r, s), g.size() as i64);
                for i in r..=s {
                    assert_eq!(
                        degree_grs(r, s, i).unwrap(),
                        g.degree(i).unwrap() as i64,
                        "degree formula at ({r}, {s}), vertex {i}"
                    );
                }
            }
        }
    }
}
