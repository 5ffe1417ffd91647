//! The printed value tables: the special-value collection, the constants
//! bundle and exact Bernoulli numbers.

use zetakern::closed_forms::{
    l1_closed, l_odd_variant_closed, sinh_sq_integrals, sinh_sq_oracle, t0_closed,
    t0_variant_closed,
};
use zetakern::constants::SpecialConstants;
use zetakern::hurwitz::{hurwitz_zeta_prime, HurwitzBackend};
use zetakern::quadrature::KernelKind;
use zetakern::special::{bernoulli_number, harmonic};
use zetakern::Result;

use std::f64::consts::PI;

/// One special value: a closed-form evaluation against its symbolic-constant
/// reduction.
#[derive(Debug, Clone)]
pub struct SpecialValueRow {
    /// Stable identifier, e.g. "T0[csch] q=1/4".
    pub label: &'static str,
    /// The symbolic reduction the reference value was built from.
    pub expression: &'static str,
    pub closed: f64,
    pub reference: f64,
}

enum OracleRoute {
    /// Kernel integral ∫ f(t) K(q,t) dt of the named family member.
    Integral(zetakern::closed_forms::FamilyId, f64),
    /// ζ′(−1, q) through the Hermite-quadrature backend.
    ZetaPrime(f64),
    /// One of the two sinh² integrals (index 0 or 1).
    SinhSq(usize),
}

fn rows() -> Result<Vec<(SpecialValueRow, OracleRoute)>> {
    use zetakern::closed_forms::{Family, FamilyId};
    let c = SpecialConstants::STANDARD;
    let ln2 = c.ln2;
    let lnpi = c.ln_pi;
    let lns2pi = c.ln_sqrt_2pi;
    let zp = c.zeta_prime_minus1;
    let lg4 = c.ln_gamma_quarter;
    let g = c.catalan;
    let gamma = c.euler_gamma;

    let t0 = |q: f64| t0_closed(q).map(|v| v.value);
    let t0v = |q: f64, k: KernelKind| t0_variant_closed(q, k).map(|v| v.value);
    let l1 = |q: f64| l1_closed(q).map(|v| v.value);
    let l1csch = |q: f64| l_odd_variant_closed(0, q, KernelKind::Csch).map(|v| v.value);
    let id = |f: Family, i: u32, k: KernelKind| FamilyId::new(f, i, k);
    let (v1, v2) = sinh_sq_integrals();

    Ok(vec![
        (
            SpecialValueRow {
                label: "T0[bose] q=1",
                expression: "1/2 - ln(2pi)/4",
                closed: t0(1.0)?,
                reference: 0.5 - lns2pi / 2.0,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::BoseMinus), 1.0),
        ),
        (
            SpecialValueRow {
                label: "T0[bose] q=1/2",
                expression: "1/2 - ln(2)/2",
                closed: t0(0.5)?,
                reference: 0.5 - ln2 / 2.0,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::BoseMinus), 0.5),
        ),
        (
            SpecialValueRow {
                label: "T0[bose] q=1/4",
                expression: "1/2 - ln(pi) - 2 ln(2) + 2 lnGamma(1/4)",
                closed: t0(0.25)?,
                reference: 0.5 - lnpi - 2.0 * ln2 + 2.0 * lg4,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::BoseMinus), 0.25),
        ),
        (
            SpecialValueRow {
                label: "L1[bose] q=1",
                expression: "zeta'(-1) + ln(sqrt(2pi)) - 3/4",
                closed: l1(1.0)?,
                reference: zp + lns2pi - 0.75,
            },
            OracleRoute::Integral(id(Family::L, 1, KernelKind::BoseMinus), 1.0),
        ),
        (
            SpecialValueRow {
                label: "L1[bose] q=1/2",
                expression: "-2 zeta'(-1) + (2/3) ln(2) - 3/4",
                closed: l1(0.5)?,
                reference: -2.0 * zp + 2.0 / 3.0 * ln2 - 0.75,
            },
            OracleRoute::Integral(id(Family::L, 1, KernelKind::BoseMinus), 0.5),
        ),
        (
            SpecialValueRow {
                label: "L1[bose] q=1/4",
                expression: "-2 zeta'(-1) + (5/3) ln2 - 3/4 + 4G/pi - 4 lnGamma(1/4) + 4 ln(sqrt(2pi))",
                closed: l1(0.25)?,
                reference: -2.0 * zp + 5.0 / 3.0 * ln2 - 0.75 + 4.0 * g / PI - 4.0 * lg4
                    + 4.0 * lns2pi,
            },
            OracleRoute::Integral(id(Family::L, 1, KernelKind::BoseMinus), 0.25),
        ),
        (
            SpecialValueRow {
                label: "zeta'(-1,1/2)",
                expression: "-zeta'(-1)/2 - ln(2)/24",
                closed: hurwitz_zeta_prime(-1.0, 0.5, HurwitzBackend::EulerMaclaurin)?,
                reference: -zp / 2.0 - ln2 / 24.0,
            },
            OracleRoute::ZetaPrime(0.5),
        ),
        (
            SpecialValueRow {
                label: "zeta'(-1,1/4)",
                expression: "-zeta'(-1)/8 + G/(4pi)",
                closed: hurwitz_zeta_prime(-1.0, 0.25, HurwitzBackend::EulerMaclaurin)?,
                reference: -zp / 8.0 + g / (4.0 * PI),
            },
            OracleRoute::ZetaPrime(0.25),
        ),
        (
            SpecialValueRow {
                label: "T0[fermi] q=1",
                expression: "(3/4) ln(2) - 1/2",
                closed: t0v(1.0, KernelKind::FermiPlus)?,
                reference: 0.75 * ln2 - 0.5,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::FermiPlus), 1.0),
        ),
        (
            SpecialValueRow {
                label: "T0[fermi] q=1/2",
                expression: "ln(pi)/2 - 1/2",
                closed: t0v(0.5, KernelKind::FermiPlus)?,
                reference: lnpi / 2.0 - 0.5,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::FermiPlus), 0.5),
        ),
        (
            SpecialValueRow {
                label: "T0[fermi] q=1/4",
                expression: "-1/2 - ln(2) + 2 lnGamma(1/4) - ln(pi)",
                closed: t0v(0.25, KernelKind::FermiPlus)?,
                reference: -0.5 - ln2 + 2.0 * lg4 - lnpi,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::FermiPlus), 0.25),
        ),
        (
            SpecialValueRow {
                label: "T0[csch] q=1",
                expression: "ln(2)/2 - ln(pi)/4",
                closed: t0v(1.0, KernelKind::Csch)?,
                reference: ln2 / 2.0 - lnpi / 4.0,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::Csch), 1.0),
        ),
        (
            SpecialValueRow {
                label: "T0[csch] q=1/2",
                expression: "ln(pi)/2 - ln(2)/2",
                closed: t0v(0.5, KernelKind::Csch)?,
                reference: lnpi / 2.0 - ln2 / 2.0,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::Csch), 0.5),
        ),
        (
            SpecialValueRow {
                label: "T0[csch] q=1/4",
                expression: "4 lnGamma(1/4) - 2 ln(pi) - 3 ln(2)",
                closed: t0v(0.25, KernelKind::Csch)?,
                reference: 4.0 * lg4 - 2.0 * lnpi - 3.0 * ln2,
            },
            OracleRoute::Integral(id(Family::T, 0, KernelKind::Csch), 0.25),
        ),
        (
            SpecialValueRow {
                label: "L1[csch] q=1",
                expression: "-(11/24) ln(2) + ln(pi)/2 + (3/2) zeta'(-1)",
                closed: l1csch(1.0)?,
                reference: -11.0 / 24.0 * ln2 + lnpi / 2.0 + 1.5 * zp,
            },
            OracleRoute::Integral(id(Family::L, 1, KernelKind::Csch), 1.0),
        ),
        (
            SpecialValueRow {
                label: "L1[csch] q=1/2",
                expression: "(1/3) ln(2) - ln(pi) - 6 zeta'(-1)",
                closed: l1csch(0.5)?,
                reference: ln2 / 3.0 - lnpi - 6.0 * zp,
            },
            OracleRoute::Integral(id(Family::L, 1, KernelKind::Csch), 0.5),
        ),
        (
            SpecialValueRow {
                label: "L1[csch] q=1/4",
                expression: "6 ln(2) + 4 ln(pi) + 8G/pi - 8 lnGamma(1/4)",
                closed: l1csch(0.25)?,
                reference: 6.0 * ln2 + 4.0 * lnpi + 8.0 * g / PI - 8.0 * lg4,
            },
            OracleRoute::Integral(id(Family::L, 1, KernelKind::Csch), 0.25),
        ),
        (
            SpecialValueRow {
                label: "sinh^2 v1",
                expression: "1/(2pi) + gamma/pi - ln(sqrt(2pi))/pi",
                closed: v1.value,
                reference: 0.5 / PI + gamma / PI - lns2pi / PI,
            },
            OracleRoute::SinhSq(0),
        ),
        (
            SpecialValueRow {
                label: "sinh^2 v2",
                expression: "-1/(8pi) + gamma/(2pi) - ln(pi)/(8pi)",
                closed: v2.value,
                reference: -0.125 / PI + gamma / (2.0 * PI) - lnpi / (8.0 * PI),
            },
            OracleRoute::SinhSq(1),
        ),
    ])
}

/// The special-value table (closed forms vs symbolic constants).
pub fn special_values() -> Result<Vec<SpecialValueRow>> {
    Ok(rows()?.into_iter().map(|(row, _)| row).collect())
}

/// The table together with independently computed oracle values and their
/// error estimates.
pub fn special_values_with_oracle(rel_tol: f64) -> Result<Vec<(SpecialValueRow, f64, f64)>> {
    let sinh_vals = sinh_sq_oracle(rel_tol)?;
    rows()?
        .into_iter()
        .map(|(row, route)| {
            let (value, err) = match route {
                OracleRoute::Integral(id, q) => {
                    let r = zetakern::closed_forms::oracle_integral(&id, q, rel_tol)?;
                    (r.value, r.abs_error_estimate)
                }
                OracleRoute::ZetaPrime(q) => {
                    let v = hurwitz_zeta_prime(-1.0, q, HurwitzBackend::HermiteQuadrature)?;
                    (v, 1e-11)
                }
                OracleRoute::SinhSq(i) => {
                    let r = if i == 0 { sinh_vals.0 } else { sinh_vals.1 };
                    (r.value, r.abs_error_estimate)
                }
            };
            Ok((row, value, err))
        })
        .collect()
}

/// The constants bundle as (name, value) rows.
pub fn constant_rows() -> Vec<(&'static str, f64)> {
    let c = SpecialConstants::STANDARD;
    vec![
        ("ln2", c.ln2),
        ("ln_pi", c.ln_pi),
        ("euler_gamma", c.euler_gamma),
        ("catalan", c.catalan),
        ("zeta_prime_minus1", c.zeta_prime_minus1),
        ("ln_gamma_quarter", c.ln_gamma_quarter),
        ("ln_sqrt_2pi", c.ln_sqrt_2pi),
    ]
}

/// B_0..B_n as exact fraction strings, plus H_n rows are not included: the
/// table mirrors what the closed forms consume.
pub fn bernoulli_rows(n_max: u32) -> Vec<(u32, String)> {
    (0..=n_max).map(|k| (k, bernoulli_number(k).to_string())).collect()
}

/// H_0..H_n as exact fraction strings.
pub fn harmonic_rows(n_max: u32) -> Vec<(u32, String)> {
    (0..=n_max).map(|n| (n, harmonic(n).to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_has_all_printed_values() {
        let rows = special_values().unwrap();
        assert_eq!(rows.len(), 19);
        for r in &rows {
            assert!(
                (r.closed - r.reference).abs() <= 1e-10,
                "{}: closed {} vs reference {}",
                r.label,
                r.closed,
                r.reference
            );
        }
    }

    #[test]
    fn bernoulli_table_is_exact() {
        let rows = bernoulli_rows(20);
        assert_eq!(rows[2].1, "1/6");
        assert_eq!(rows[12].1, "-691/2730");
        assert_eq!(rows[7].1, "0");
    }
}
