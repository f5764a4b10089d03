//! Column semi-standard tableaux: standardization, promotion, and the
//! period-based orbit-length formula.
//!
//! A column SSYT has strictly increasing rows, weakly increasing columns,
//! and dense content (every value from 1 to the maximum occurs). The
//! standardization map turns one into a standard tableau of the same shape
//! by relabeling equal values top to bottom; promotion generalizes the
//! standard slide by removing every copy of 1 in turn. The orbit length of
//! promotion factors through the cyclic period of the content exponents and
//! the orbit length of the standardized tableau.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::{orbit_length_fast, orbit_length_oracle};
use crate::tableau::Tableau;

/// A validated column semi-standard tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsytTableau {
    t: Tableau,
}

impl SsytTableau {
    pub fn new(t: Tableau) -> Result<SsytTableau> {
        if !t.is_column_ssyt() {
            return Err(Error::Domain(
                "rows must strictly increase, columns weakly increase, and every value must occur"
                    .into(),
            ));
        }
        Ok(SsytTableau { t })
    }

    pub fn tableau(&self) -> &Tableau {
        &self.t
    }

    /// Multiplicity of each value, indexed from value 1.
    pub fn exponents(&self) -> Vec<u32> {
        self.t.content().exponents().to_vec()
    }

    pub fn num_values(&self) -> usize {
        self.t.content().num_values()
    }
}

/// Relabels the copies of each value, top to bottom, with the next run of
/// consecutive integers. The result is a standard tableau of the same shape.
pub fn psi(t: &SsytTableau) -> Tableau {
    let e = t.exponents();
    let mut next: Vec<u32> = Vec::with_capacity(e.len());
    let mut acc = 0u32;
    for &cnt in &e {
        next.push(acc);
        acc += cnt;
    }
    let rows: Vec<Vec<u32>> = t
        .t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| {
                    let slot = &mut next[v as usize - 1];
                    *slot += 1;
                    *slot
                })
                .collect()
        })
        .collect();
    let out = Tableau::from_rows(rows).expect("relabeled rows stay positive");
    debug_assert!(out.is_standard());
    out
}

/// One promotion step: each copy of 1 is removed in turn and its hole slides
/// to the border (ties between right and lower neighbors slide the right one),
/// shrinking the shape by one outer corner per pass; then every entry
/// decrements and the freed corners are filled with the maximum value.
pub fn promote_ssyt(t: &SsytTableau) -> Result<SsytTableau> {
    let e = t.exponents();
    let copies_of_one = e[0];
    let top = e.len() as u32;
    let mut rows = t.t.rows().to_vec();
    let mut freed: Vec<(usize, usize)> = Vec::with_capacity(copies_of_one as usize);
    for _ in 0..copies_of_one {
        if rows.first().and_then(|r| r.first()) != Some(&1) {
            return Err(Error::Invariant(
                "a copy of 1 is missing from the top-left corner".into(),
            ));
        }
        let (mut hi, mut hj) = (0usize, 0usize);
        loop {
            let right = if hj + 1 < rows[hi].len() {
                Some(rows[hi][hj + 1])
            } else {
                None
            };
            let below = if hi + 1 < rows.len() && hj < rows[hi + 1].len() {
                Some(rows[hi + 1][hj])
            } else {
                None
            };
            match (right, below) {
                (None, None) => break,
                (Some(b), None) => {
                    rows[hi][hj] = b;
                    hj += 1;
                }
                (None, Some(a)) => {
                    rows[hi][hj] = a;
                    hi += 1;
                }
                (Some(b), Some(a)) => {
                    if b <= a {
                        rows[hi][hj] = b;
                        hj += 1;
                    } else {
                        rows[hi][hj] = a;
                        hi += 1;
                    }
                }
            }
        }
        rows[hi].pop();
        freed.push((hi, hj));
    }
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            *v -= 1;
        }
    }
    for &(i, j) in freed.iter().rev() {
        if rows[i].len() != j {
            return Err(Error::Invariant(
                "a freed corner moved before reinsertion".into(),
            ));
        }
        rows[i].push(top);
    }
    let out = Tableau::from_rows(rows)?;
    SsytTableau::new(out)
        .map_err(|e| Error::Invariant(format!("promotion broke the tableau: {e}")))
}

/// `k`-fold promotion.
pub fn promote_ssyt_k(t: &SsytTableau, k: u64) -> Result<SsytTableau> {
    let mut cur = t.clone();
    for _ in 0..k {
        cur = promote_ssyt(&cur)?;
    }
    Ok(cur)
}

/// Least cyclic period of an exponent sequence: the smallest positive `R`
/// such that shifting the sequence left by `R` (with wraparound) fixes it.
/// The result always divides the sequence length.
pub fn content_period(e: &[u32]) -> Result<u32> {
    if e.is_empty() {
        return Err(Error::Domain("empty exponent sequence".into()));
    }
    if e.contains(&0) {
        return Err(Error::Domain(
            "every value must occur at least once".into(),
        ));
    }
    let r = e.len();
    for cand in 1..=r {
        if (0..r).all(|i| e[i] == e[(i + cand) % r]) {
            if !r.is_multiple_of(cand) {
                return Err(Error::Invariant(format!(
                    "content period {cand} does not divide the value count {r}"
                )));
            }
            return Ok(cand as u32);
        }
    }
    Err(Error::Invariant(
        "the full shift failed to fix the exponent sequence".into(),
    ))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Which route computed an SSYT orbit length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SsytMethod {
    Formula,
    Oracle,
    Both,
}

/// Orbit length of SSYT promotion plus the formula's certificate. The
/// certificate fields are populated by the formula route only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SsytOrbitReport {
    pub shape: Vec<usize>,
    pub method: SsytMethod,
    pub orbit_length: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u64>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub content_period: Option<u64>,
    #[serde(rename = "sum_e_first_R", skip_serializing_if = "Option::is_none")]
    pub sum_e_first_period: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syt_orbit_length: Option<u64>,
}

impl SsytOrbitReport {
    /// Compact single-line JSON with fields in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ssyt orbit report serializes")
    }
}

/// Orbit length via the period formula: with `R` the content period, `S` the
/// sum of the first `R` exponents, and `L` the orbit length of the
/// standardized tableau, the orbit length is `R · lcm(S, L) / S`.
///
/// `L` is computed through the fast rectangular route unless the caller
/// supplies it; non-rectangular inputs fall back to the iterated oracle on
/// the standardized tableau.
pub fn orbit_length_ssyt(t: &SsytTableau, syt_orbit: Option<u64>) -> Result<SsytOrbitReport> {
    let e = t.exponents();
    let period = u64::from(content_period(&e)?);
    let sum: u64 = e[..period as usize].iter().map(|&x| u64::from(x)).sum();
    let syt_len = match syt_orbit {
        Some(len) => {
            if len == 0 {
                return Err(Error::Domain("a supplied orbit length must be positive".into()));
            }
            len
        }
        None => {
            let standardized = psi(t);
            if standardized.is_rectangular() {
                orbit_length_fast(&standardized)?.orbit_length
            } else {
                orbit_length_oracle(&standardized)?.orbit_length
            }
        }
    };
    let ell = lcm(sum, syt_len) / sum;
    Ok(SsytOrbitReport {
        shape: t.tableau().row_lengths(),
        method: SsytMethod::Formula,
        orbit_length: ell * period,
        ell: Some(ell),
        content_period: Some(period),
        sum_e_first_period: Some(sum),
        syt_orbit_length: Some(syt_len),
    })
}

/// Orbit length by direct iteration of SSYT promotion.
pub fn orbit_length_ssyt_oracle(t: &SsytTableau) -> Result<u64> {
    const CAP: u64 = 10_000_000;
    let mut cur = promote_ssyt(t)?;
    let mut steps = 1u64;
    while cur != *t {
        cur = promote_ssyt(&cur)?;
        steps += 1;
        if steps > CAP {
            return Err(Error::Invariant(
                "promotion failed to return to the start".into(),
            ));
        }
    }
    Ok(steps)
}

/// Oracle route packaged as a report (no certificate fields).
pub fn orbit_length_ssyt_oracle_report(t: &SsytTableau) -> Result<SsytOrbitReport> {
    Ok(SsytOrbitReport {
        shape: t.tableau().row_lengths(),
        method: SsytMethod::Oracle,
        orbit_length: orbit_length_ssyt_oracle(t)?,
        ell: None,
        content_period: None,
        sum_e_first_period: None,
        syt_orbit_length: None,
    })
}

/// Runs the formula and the oracle and checks they agree; the report carries
/// the formula certificate with the method marked as `both`.
pub fn orbit_length_ssyt_both(t: &SsytTableau) -> Result<SsytOrbitReport> {
    let formula = orbit_length_ssyt(t, None)?;
    let oracle = orbit_length_ssyt_oracle(t)?;
    if formula.orbit_length != oracle {
        return Err(Error::Invariant(format!(
            "formula orbit length {} disagrees with the oracle's {}",
            formula.orbit_length, oracle
        )));
    }
    Ok(SsytOrbitReport {
        method: SsytMethod::Both,
        ..formula
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::promote;

    const FIGURE_EXAMPLE: &str = "\
1 2 3 6 9 12
3 4 5 6 9 12
3 6 7 8 9 12
3 6 9 10 11 12
";

    fn figure_example() -> SsytTableau {
        SsytTableau::new(Tableau::parse_text(FIGURE_EXAMPLE).unwrap()).unwrap()
    }

    fn ssyt(rows: &[&[u32]]) -> SsytTableau {
        SsytTableau::new(Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap())
            .unwrap()
    }

    fn grid(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn the_figure_example_validates_with_the_expected_exponents() {
        let t = figure_example();
        assert_eq!(
            t.exponents(),
            vec![1, 1, 4, 1, 1, 4, 1, 1, 4, 1, 1, 4]
        );
        assert_eq!(t.num_values(), 12);
    }

    #[test]
    fn construction_rejects_broken_rows_columns_and_gaps() {
        assert!(SsytTableau::new(grid(&[&[1, 1]])).is_err());
        assert!(SsytTableau::new(grid(&[&[2, 3], &[1, 4]])).is_err());
        assert!(SsytTableau::new(grid(&[&[1, 3]])).is_err());
    }

    #[test]
    fn standardization_matches_the_figure() {
        let expected = grid(&[
            &[1, 2, 3, 9, 15, 21],
            &[4, 7, 8, 10, 16, 22],
            &[5, 11, 13, 14, 17, 23],
            &[6, 12, 18, 19, 20, 24],
        ]);
        assert_eq!(psi(&figure_example()), expected);
    }

    #[test]
    fn standardization_fixes_tableaux_with_distinct_entries() {
        let t = ssyt(&[&[1, 2], &[3, 4]]);
        assert_eq!(&psi(&t), t.tableau());
    }

    #[test]
    fn one_promotion_step_of_the_figure_example() {
        let expected = ssyt(&[
            &[1, 2, 4, 5, 8, 11],
            &[2, 3, 5, 7, 8, 11],
            &[2, 5, 6, 8, 10, 11],
            &[2, 5, 8, 9, 11, 12],
        ]);
        let once = promote_ssyt(&figure_example()).unwrap();
        assert_eq!(once, expected);
        assert_eq!(
            once.exponents(),
            vec![1, 4, 1, 1, 4, 1, 1, 4, 1, 1, 4, 1]
        );
    }

    #[test]
    fn three_promotion_steps_return_the_figure_example() {
        let t = figure_example();
        let back = promote_ssyt_k(&t, 3).unwrap();
        assert_eq!(back, t);
        assert_ne!(promote_ssyt_k(&t, 1).unwrap(), t);
        assert_ne!(promote_ssyt_k(&t, 2).unwrap(), t);
    }

    #[test]
    fn promotion_with_distinct_entries_reduces_to_the_standard_slide() {
        for rows in [
            vec![vec![1u32, 2], vec![3, 4]],
            vec![vec![1, 3], vec![2, 4]],
            vec![vec![1, 2, 3], vec![4, 5, 6]],
            vec![vec![1, 3, 5], vec![2, 4, 6]],
        ] {
            let t = Tableau::from_rows(rows).unwrap();
            let wrapped = SsytTableau::new(t.clone()).unwrap();
            assert_eq!(promote_ssyt(&wrapped).unwrap().tableau(), &promote(&t).unwrap());
        }
    }

    #[test]
    fn a_traced_three_step_orbit_with_repeats() {
        let start = ssyt(&[&[1, 2], &[2, 3]]);
        let first = promote_ssyt(&start).unwrap();
        assert_eq!(first, ssyt(&[&[1, 2], &[1, 3]]));
        let second = promote_ssyt(&first).unwrap();
        assert_eq!(second, ssyt(&[&[1, 3], &[2, 3]]));
        let third = promote_ssyt(&second).unwrap();
        assert_eq!(third, start);
        assert_eq!(orbit_length_ssyt_oracle(&start).unwrap(), 3);
    }

    #[test]
    fn a_constant_column_is_a_fixed_point() {
        let t = ssyt(&[&[1], &[1], &[1]]);
        assert_eq!(promote_ssyt(&t).unwrap(), t);
        assert_eq!(orbit_length_ssyt_oracle(&t).unwrap(), 1);
    }

    #[test]
    fn content_period_goldens() {
        assert_eq!(
            content_period(&[1, 1, 4, 1, 1, 4, 1, 1, 4, 1, 1, 4]).unwrap(),
            3
        );
        assert_eq!(content_period(&[5, 5, 5]).unwrap(), 1);
        assert_eq!(content_period(&[1]).unwrap(), 1);
        assert_eq!(content_period(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(content_period(&[1, 2, 1, 2]).unwrap(), 2);
        assert!(matches!(content_period(&[]), Err(Error::Domain(_))));
        assert!(matches!(content_period(&[1, 0, 2]), Err(Error::Domain(_))));
    }

    #[test]
    fn formula_certificate_for_the_figure_example() {
        let report = orbit_length_ssyt(&figure_example(), None).unwrap();
        assert_eq!(report.orbit_length, 3);
        assert_eq!(report.ell, Some(1));
        assert_eq!(report.content_period, Some(3));
        assert_eq!(report.sum_e_first_period, Some(6));
        assert_eq!(report.syt_orbit_length, Some(6));
        assert_eq!(report.method, SsytMethod::Formula);
    }

    #[test]
    fn formula_accepts_a_supplied_standardized_orbit_length() {
        let report = orbit_length_ssyt(&figure_example(), Some(6)).unwrap();
        assert_eq!(report.orbit_length, 3);
        assert!(matches!(
            orbit_length_ssyt(&figure_example(), Some(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn formula_handles_distinct_entry_contents() {
        let t = ssyt(&[&[1, 2], &[3, 4]]);
        let report = orbit_length_ssyt(&t, None).unwrap();
        assert_eq!(report.content_period, Some(1));
        assert_eq!(report.sum_e_first_period, Some(1));
        assert_eq!(report.syt_orbit_length, Some(2));
        assert_eq!(report.ell, Some(2));
        assert_eq!(report.orbit_length, 2);
        assert_eq!(orbit_length_ssyt_oracle(&t).unwrap(), 2);
    }

    #[test]
    fn formula_matches_the_traced_orbit_with_repeats() {
        let t = ssyt(&[&[1, 2], &[2, 3]]);
        let report = orbit_length_ssyt(&t, None).unwrap();
        assert_eq!(report.content_period, Some(3));
        assert_eq!(report.sum_e_first_period, Some(4));
        assert_eq!(report.syt_orbit_length, Some(2));
        assert_eq!(report.ell, Some(1));
        assert_eq!(report.orbit_length, 3);
    }

    #[test]
    fn both_routes_agree_on_the_figure_example() {
        let report = orbit_length_ssyt_both(&figure_example()).unwrap();
        assert_eq!(report.method, SsytMethod::Both);
        assert_eq!(report.orbit_length, 3);
    }

    #[test]
    fn report_json_has_fixed_field_order() {
        let report = orbit_length_ssyt(&figure_example(), None).unwrap();
        assert_eq!(
            report.to_json(),
            "{\"shape\":[6,6,6,6],\"method\":\"formula\",\"orbit_length\":3,\
             \"ell\":1,\"R\":3,\"sum_e_first_R\":6,\"syt_orbit_length\":6}"
        );
        let oracle = orbit_length_ssyt_oracle_report(&figure_example()).unwrap();
        assert_eq!(
            oracle.to_json(),
            "{\"shape\":[6,6,6,6],\"method\":\"oracle\",\"orbit_length\":3}"
        );
    }

    #[test]
    fn standardization_commutes_with_promotion_on_the_figure_example() {
        let t = figure_example();
        let copies_of_one = u64::from(t.exponents()[0]);
        let left = psi(&promote_ssyt(&t).unwrap());
        let mut right = psi(&t);
        for _ in 0..copies_of_one {
            right = promote(&right).unwrap();
        }
        assert_eq!(left, right);
    }
}
