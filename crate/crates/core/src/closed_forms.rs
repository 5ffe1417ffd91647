//! Closed-form evaluators for the three integral families and their
//! Fermi/csch variants, plus the consistency residuals that tie them
//! together.
//!
//! Families (subscript conventions match the family definitions in the crate
//! docs):
//!
//! * `I_k` — closed for every k ≥ 0 with the Bose kernel; explicit Fermi and
//!   csch forms exist for k ≥ 1.
//! * `T_k` — closed for even k (all kernels).
//! * `L_k` — closed for odd k (all kernels).
//!
//! Everything else is served by the quadrature oracle only.  The evaluators
//! keep the papered-over sign convention internal: closed forms are assembled
//! with their (−1)^k prefactors and the public value is the (positive)
//! integral itself.

use std::f64::consts::{LN_2, PI};

use crate::constants::LN_SQRT_2PI;
use crate::dd::{Dd, LN2 as LN2_DD, LN_SQRT_2PI as LN_SQRT_2PI_DD};
use crate::error::{require_positive_q, Error, Result};
use crate::hurwitz::{
    hurwitz_zeta_prime, negapolygamma, negapolygamma_at_zero, negapolygamma_dd, HurwitzBackend,
};
use crate::quadrature::{
    integrate, integrate_decaying, integrate_interval, IntegrandSpec, KernelKind, QuadratureResult,
};
use crate::special::{
    bernoulli_dd, bernoulli_polynomial, binomial_f64, digamma, factorial_f64, harmonic_dd,
    log_gamma, polygamma,
};

/// The three integral families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    I,
    T,
    L,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::I => "I",
            Family::T => "T",
            Family::L => "L",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "I" | "i" => Ok(Family::I),
            "T" | "t" => Ok(Family::T),
            "L" | "l" => Ok(Family::L),
            other => Err(Error::argument(format!("unknown family '{other}' (I|T|L)"))),
        }
    }
}

/// One member of a family: family letter, subscript and kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub family: Family,
    pub index: u32,
    pub kernel: KernelKind,
}

impl FamilyId {
    pub fn new(family: Family, index: u32, kernel: KernelKind) -> FamilyId {
        FamilyId { family, index, kernel }
    }

    /// Whether a closed form is implemented for this member.
    pub fn has_closed_form(&self) -> bool {
        match self.family {
            Family::I => self.kernel == KernelKind::BoseMinus || self.index >= 1,
            Family::T => self.index % 2 == 0,
            Family::L => self.index % 2 == 1,
        }
    }

    pub fn label(&self) -> String {
        format!("{}_{}[{}]", self.family.label(), self.index, self.kernel.label())
    }
}

/// A closed-form value together with its additive breakdown; the terms sum
/// to `value` in the order stored.
#[derive(Debug, Clone)]
pub struct ClosedFormValue {
    pub value: f64,
    pub terms: Vec<(&'static str, f64)>,
}

impl ClosedFormValue {
    fn from_terms(terms: Vec<(&'static str, f64)>) -> ClosedFormValue {
        let value = terms.iter().map(|t| t.1).sum();
        ClosedFormValue { value, terms }
    }
}

/// ψ^{(−1−j)}(q), the negapolygamma order used throughout the T and L forms.
fn psi_neg(j: u32, q: f64) -> Result<f64> {
    negapolygamma(j + 1, q)
}

fn zeta_prime(z: f64, q: f64) -> Result<f64> {
    hurwitz_zeta_prime(z, q, HurwitzBackend::EulerMaclaurin)
}

fn zeta_prime_dd(z: f64, q: f64) -> Result<Dd> {
    crate::hurwitz::hurwitz_zeta_prime_dd(z, q)
}

// ---------------------------------------------------------------------------
// I family

/// I_k(q) = ∫₀^∞ t (1+t²)^{−k−1} / (e^{2πqt}−1) dt.
///
/// k = 0 is ln q/2 − 1/(4q) − ψ(q)/2; for k ≥ 1 the polygamma form
///
/// ```text
/// I_k(q) = −1/(4k) − C(2k,k)/(2^{2k+2} q)
///        + (1/(k 2^{2k})) Σ_{j=1}^{k} (−1)^{j+1}/(j−1)! C(2k−j−1, k−j) 2^{j−1} q^j ψ^{(j)}(q)
/// ```
pub fn i_closed(k: u32, q: f64) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    if k == 0 {
        return Ok(ClosedFormValue::from_terms(vec![
            ("log_q", 0.5 * q.ln()),
            ("inverse_q", -0.25 / q),
            ("digamma", -0.5 * digamma(q)?),
        ]));
    }
    let kf = k as f64;
    let mut sum = 0.0;
    for j in 1..=k {
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign / factorial_f64(j - 1)
            * binomial_f64(2 * k - j - 1, k - j)
            * 2f64.powi(j as i32 - 1)
            * q.powi(j as i32)
            * polygamma(j, q)?;
    }
    Ok(ClosedFormValue::from_terms(vec![
        ("constant", -1.0 / (4.0 * kf)),
        ("inverse_q", -binomial_f64(2 * k, k) / (2f64.powi(2 * k as i32 + 2) * q)),
        ("polygamma_sum", sum / (kf * 2f64.powi(2 * k as i32))),
    ]))
}

/// The explicit Fermi/csch forms of I_k, k ≥ 1, in terms of ψ^{(j)} at q and 2q.
pub fn i_variant_closed(k: u32, q: f64, target: KernelKind) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    if target == KernelKind::BoseMinus {
        return i_closed(k, q);
    }
    if k == 0 {
        return Err(Error::NoClosedForm(
            FamilyId::new(Family::I, 0, target).label(),
        ));
    }
    let kf = k as f64;
    let mut sum = 0.0;
    for j in 1..=k {
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        let dup = match target {
            KernelKind::FermiPlus => polygamma(j, q)? - 2f64.powi(j as i32 + 1) * polygamma(j, 2.0 * q)?,
            KernelKind::Csch => polygamma(j, q)? - 2f64.powi(j as i32) * polygamma(j, 2.0 * q)?,
            KernelKind::BoseMinus => unreachable!(),
        };
        sum += sign / factorial_f64(j - 1)
            * binomial_f64(2 * k - j - 1, k - j)
            * 2f64.powi(j as i32)
            * q.powi(j as i32)
            * dup;
    }
    let terms = match target {
        KernelKind::FermiPlus => vec![
            ("constant", 1.0 / (4.0 * kf)),
            ("polygamma_sum", sum / (kf * 2f64.powi(2 * k as i32 + 1))),
        ],
        KernelKind::Csch => vec![
            ("inverse_q", -binomial_f64(2 * k, k) / (2f64.powi(2 * k as i32 + 2) * q)),
            ("polygamma_sum", sum / (kf * 2f64.powi(2 * k as i32))),
        ],
        KernelKind::BoseMinus => unreachable!(),
    };
    Ok(ClosedFormValue::from_terms(terms))
}

// ---------------------------------------------------------------------------
// T family

/// T_0(q) = 1/2 − ln q/2 + ln q/(4q) + ln Γ(q)/(2q) − ln √(2π)/(2q)
/// (Binet's second formula in disguise).
pub fn t0_closed(q: f64) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    let lnq = q.ln();
    Ok(ClosedFormValue::from_terms(vec![
        ("constant", 0.5),
        ("log_q", -0.5 * lnq),
        ("log_q_over_q", 0.25 * lnq / q),
        ("log_gamma", 0.5 * log_gamma(q)? / q),
        ("log_sqrt_2pi", -0.5 * LN_SQRT_2PI / q),
    ]))
}

/// T_{2k}(q) for k ≥ 1, via Bernoulli numbers and negapolygamma values.
///
/// The elementary, Bernoulli and negapolygamma blocks cancel down by many
/// orders of magnitude for q of a few (T_{2k}(q) decays like q^{−2k−1} while
/// the blocks stay O(1)), so the assembly runs in double-double.
pub fn t_even_closed(k: u32, q: f64) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    if k == 0 {
        return t0_closed(q);
    }
    let kf = k as f64;
    let n = (2 * k + 1) as f64;
    let qd = Dd::from_f64(q);
    let lnq = qd.ln();

    let elementary = Dd::from_f64(0.5)
        .div_f64(n * n)
        .sub(lnq.div_f64(2.0 * n))
        .add(Dd::ONE.div(qd.mul_f64(8.0 * kf)));

    let mut bern = Dd::ZERO;
    for j in 0..k {
        let denom = qd
            .powi(2 * j as i32 + 2)
            .mul_f64((j as f64 + 1.0) * (2 * k - 2 * j - 1) as f64);
        bern = bern.add(bernoulli_dd(2 * j + 2).div(denom));
    }
    bern = bern.mul_f64(0.25);

    let mut napg = Dd::ZERO;
    let mut fall = 1.0; // (2k)!/(2k-j)!
    for j in 0..=(2 * k) {
        if j > 0 {
            fall *= (2 * k + 1 - j) as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let term = negapolygamma_dd(j + 1, q)?
            .mul_f64(sign * fall)
            .div(qd.powi(j as i32 + 1));
        napg = napg.add(term);
    }
    napg = napg.mul_f64(0.5);

    let sign = if k % 2 == 0 { 1.0 } else { -1.0 }; // resolves (−1)^k T_2k = rhs
    let value = sign * elementary.add(bern).add(napg).to_f64();
    Ok(ClosedFormValue {
        value,
        terms: vec![
            ("elementary", sign * elementary.to_f64()),
            ("bernoulli_sum", sign * bern.to_f64()),
            ("negapolygamma_sum", sign * napg.to_f64()),
        ],
    })
}

/// The Fermi and csch variants of T_0.
pub fn t0_variant_closed(q: f64, target: KernelKind) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    let lnq = q.ln();
    match target {
        KernelKind::BoseMinus => t0_closed(q),
        KernelKind::FermiPlus => Ok(ClosedFormValue::from_terms(vec![
            ("constant", LN_2 - 0.5),
            ("log_q", 0.5 * lnq),
            ("log_2_over_q", -0.25 * LN_2 / q),
            ("log_gamma", 0.5 * (log_gamma(q)? - log_gamma(2.0 * q)?) / q),
        ])),
        KernelKind::Csch => Ok(ClosedFormValue::from_terms(vec![
            ("constant", LN_2),
            ("log_4pi_over_q", -0.25 * (4.0 * PI).ln() / q),
            ("log_q_over_q", 0.25 * lnq / q),
            ("log_gamma", log_gamma(q)? / q - 0.5 * log_gamma(2.0 * q)? / q),
        ])),
    }
}

/// T_{2k} with the Fermi or csch kernel, k ≥ 1, in terms of ψ^{(−1−j)} at q
/// and 2q.
pub fn t_even_variant_closed(k: u32, q: f64, target: KernelKind) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    if target == KernelKind::BoseMinus {
        return t_even_closed(k, q);
    }
    if k == 0 {
        return t0_variant_closed(q, target);
    }
    let kf = k as f64;
    let n = (2 * k + 1) as f64;
    let qd = Dd::from_f64(q);
    let lnq = qd.ln();

    let (elementary, bern_w, napg_w, half_shift) = match target {
        // (−1)^k ∫ t^{2k} arctan t/(e^{2πqt}+1):
        KernelKind::FermiPlus => (
            Dd::from_f64(-0.5).div_f64(n * n).add(LN2_DD.div_f64(n)).add(lnq.div_f64(2.0 * n)),
            0.25,
            0.5,
            0, // psi(2q) scaled by 2^{-j}
        ),
        // (−1)^k ∫ t^{2k} arctan t/sinh(2πqt):
        KernelKind::Csch => (
            LN2_DD.div_f64(n).add(Dd::ONE.div(qd.mul_f64(8.0 * kf))),
            0.5,
            1.0,
            1,
        ),
        KernelKind::BoseMinus => unreachable!(),
    };

    let mut bern = Dd::ZERO;
    for j in 0..k {
        let half_pow = match target {
            KernelKind::FermiPlus => 2f64.powi(-(2 * j as i32) - 1),
            _ => 2f64.powi(-(2 * j as i32) - 2),
        };
        let denom = qd
            .powi(2 * j as i32 + 2)
            .mul_f64((j as f64 + 1.0) * (2 * k - 2 * j - 1) as f64);
        bern = bern.add(bernoulli_dd(2 * j + 2).mul_f64(1.0 - half_pow).div(denom));
    }
    bern = bern.mul_f64(bern_w);

    let mut napg = Dd::ZERO;
    let mut fall = 1.0;
    for j in 0..=(2 * k) {
        if j > 0 {
            fall *= (2 * k + 1 - j) as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let dup = negapolygamma_dd(j + 1, q)?.sub(
            negapolygamma_dd(j + 1, 2.0 * q)?.div_f64(2f64.powi(j as i32 + half_shift)),
        );
        napg = napg.add(dup.mul_f64(sign * fall).div(qd.powi(j as i32 + 1)));
    }
    napg = napg.mul_f64(napg_w);

    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let value = sign * elementary.add(bern).add(napg).to_f64();
    Ok(ClosedFormValue {
        value,
        terms: vec![
            ("elementary", sign * elementary.to_f64()),
            ("bernoulli_sum", sign * bern.to_f64()),
            ("negapolygamma_sum", sign * napg.to_f64()),
        ],
    })
}

// ---------------------------------------------------------------------------
// L family

/// L_1(q) = ζ′(−1,q)/q² − ln Γ(q)/q + ln √(2π)/q − (1/(12q²) − 1/2) ln q − 3/4.
///
/// Assembled in double-double, with ln Γ(q) taken from ζ′(0,q) + ln √(2π) so
/// the whole expression shares the Euler–Maclaurin carry.
pub fn l1_closed(q: f64) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    let qd = Dd::from_f64(q);
    let lnq = qd.ln();
    let q2 = qd.mul(qd);
    let zp1 = zeta_prime_dd(-1.0, q)?.div(q2);
    let lg = zeta_prime_dd(0.0, q)?.add(LN_SQRT_2PI_DD).div(qd).neg();
    let lsp = LN_SQRT_2PI_DD.div(qd);
    let lq = Dd::ONE.div(q2.mul_f64(12.0)).sub_f64(0.5).mul(lnq).neg();
    let c = Dd::from_f64(-0.75);
    let value = zp1.add(lg).add(lsp).add(lq).add(c).to_f64();
    Ok(ClosedFormValue {
        value,
        terms: vec![
            ("zeta_prime", zp1.to_f64()),
            ("log_gamma", lg.to_f64()),
            ("log_sqrt_2pi", lsp.to_f64()),
            ("log_q", lq.to_f64()),
            ("constant", c.to_f64()),
        ],
    })
}

/// L_{2k+1}(q); k = 0 dispatches to the dedicated L_1 formula.
pub fn l_odd_closed(k: u32, q: f64) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    if k == 0 {
        return l1_closed(q);
    }
    l_odd_general(k, q)
}

/// The general L_{2k+1} expression; valid for k ≥ 0 (the k = 0 Bernoulli sum
/// is empty) and used directly for k ≥ 1.  Assembled in double-double for
/// the same conditioning reason as the T family.
fn l_odd_general(k: u32, q: f64) -> Result<ClosedFormValue> {
    let n = (2 * k + 2) as f64;
    let qd = Dd::from_f64(q);
    let lnq = qd.ln();

    let elementary = Dd::ONE
        .div_f64(n * n)
        .sub(lnq.div_f64(n))
        .add(Dd::from_f64(0.5).div(qd.mul_f64((2 * k + 1) as f64)));

    let mut bern = Dd::ZERO;
    for j in 0..k {
        let denom = qd
            .powi(2 * j as i32 + 2)
            .mul_f64((j as f64 + 1.0) * (2 * k - 2 * j) as f64);
        bern = bern.add(bernoulli_dd(2 * j + 2).div(denom));
    }
    bern = bern.mul_f64(0.5);

    let log_block = bernoulli_dd(2 * k + 2)
        .div(qd.powi(2 * k as i32 + 2).mul_f64(n))
        .mul(lnq.sub(harmonic_dd(2 * k + 1)));

    let mut napg = Dd::ZERO;
    let mut fall = 1.0; // (2k+1)!/(2k-j+1)!
    for j in 0..=(2 * k + 1) {
        if j > 0 {
            fall *= (2 * k + 2 - j) as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        napg = napg.add(
            negapolygamma_dd(j + 1, q)?.mul_f64(sign * fall).div(qd.powi(j as i32 + 1)),
        );
    }

    let sign = if k % 2 == 0 { -1.0 } else { 1.0 }; // resolves (−1)^{k+1} L = rhs
    let value = sign * elementary.add(bern).add(log_block).add(napg).to_f64();
    Ok(ClosedFormValue {
        value,
        terms: vec![
            ("elementary", sign * elementary.to_f64()),
            ("bernoulli_sum", sign * bern.to_f64()),
            ("bernoulli_log_block", sign * log_block.to_f64()),
            ("negapolygamma_sum", sign * napg.to_f64()),
        ],
    })
}

/// L_{2k+1} with the Fermi or csch kernel, k ≥ 0.
pub fn l_odd_variant_closed(k: u32, q: f64, target: KernelKind) -> Result<ClosedFormValue> {
    require_positive_q(q)?;
    if target == KernelKind::BoseMinus {
        return l_odd_closed(k, q);
    }
    let n = (2 * k + 2) as f64;
    let qd = Dd::from_f64(q);
    let lnq = qd.ln();
    let h = harmonic_dd(2 * k + 1);

    let (elementary, bern_w, block_w, napg_w, half_shift, block_half) = match target {
        KernelKind::FermiPlus => (
            Dd::ONE
                .neg()
                .div_f64(n * n)
                .add(LN2_DD.mul_f64(2.0).div_f64(n))
                .add(lnq.div_f64(n)),
            0.5,
            1.0,
            1.0,
            0,
            2f64.powi(-(2 * k as i32) - 1),
        ),
        KernelKind::Csch => (
            LN2_DD
                .mul_f64(2.0)
                .div_f64(n)
                .add(Dd::from_f64(0.5).div(qd.mul_f64((2 * k + 1) as f64))),
            1.0,
            2.0,
            2.0,
            1,
            2f64.powi(-(2 * k as i32) - 2),
        ),
        KernelKind::BoseMinus => unreachable!(),
    };

    let mut bern = Dd::ZERO;
    for j in 0..k {
        let half_pow = match target {
            KernelKind::FermiPlus => 2f64.powi(-(2 * j as i32) - 1),
            _ => 2f64.powi(-(2 * j as i32) - 2),
        };
        let denom = qd
            .powi(2 * j as i32 + 2)
            .mul_f64((j as f64 + 1.0) * (2 * k - 2 * j) as f64);
        bern = bern.add(bernoulli_dd(2 * j + 2).mul_f64(1.0 - half_pow).div(denom));
    }
    bern = bern.mul_f64(bern_w);

    // ((1 − h/2^..) ln q − ln2/2^.. − (1 − h/2^..) H_{2k+1}) block
    let bracket = lnq
        .mul_f64(1.0 - block_half)
        .sub(LN2_DD.mul_f64(block_half))
        .sub(h.mul_f64(1.0 - block_half));
    let log_block = bernoulli_dd(2 * k + 2)
        .div(qd.powi(2 * k as i32 + 2).mul_f64(n))
        .mul(bracket)
        .mul_f64(block_w);

    let mut napg = Dd::ZERO;
    let mut fall = 1.0;
    for j in 0..=(2 * k + 1) {
        if j > 0 {
            fall *= (2 * k + 2 - j) as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let dup = negapolygamma_dd(j + 1, q)?.sub(
            negapolygamma_dd(j + 1, 2.0 * q)?.div_f64(2f64.powi(j as i32 + half_shift)),
        );
        napg = napg.add(dup.mul_f64(sign * fall).div(qd.powi(j as i32 + 1)));
    }
    napg = napg.mul_f64(napg_w);

    let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
    let value = sign * elementary.add(bern).add(log_block).add(napg).to_f64();
    Ok(ClosedFormValue {
        value,
        terms: vec![
            ("elementary", sign * elementary.to_f64()),
            ("bernoulli_sum", sign * bern.to_f64()),
            ("bernoulli_log_block", sign * log_block.to_f64()),
            ("negapolygamma_sum", sign * napg.to_f64()),
        ],
    })
}

// ---------------------------------------------------------------------------
// Kernel transform, recursions, residual checks

/// Maps a Bose-kernel evaluation q ↦ F(q) to the Fermi kernel
/// (F(q) − 2F(2q)) or the csch kernel (2F(q) − 2F(2q)).
pub fn transform_kernel<F>(base: F, q: f64, target: KernelKind) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    require_positive_q(q)?;
    match target {
        KernelKind::FermiPlus => Ok(base(q)? - 2.0 * base(2.0 * q)?),
        KernelKind::Csch => Ok(2.0 * (base(q)? - base(2.0 * q)?)),
        KernelKind::BoseMinus => {
            Err(Error::argument("transform target must be the Fermi or csch kernel"))
        }
    }
}

/// Normalized residual of the T/L coupling identity
///
/// ```text
/// 2 Σ_k (−1)^k C(m,2k) T_2k(q) + Σ_k (−1)^k C(m,2k+1) L_{2k+1}(q)
///   = [A_{m+1}(q) − B_{m+1}(q) ln q] / ((m+1) q^{m+1}) + 1/(m+1)²
/// ```
///
/// The result is scaled by the largest participating term, so consistency of
/// the closed forms means a residual near machine epsilon.
pub fn jplusk_residual(m: u32, q: f64) -> Result<f64> {
    require_positive_q(q)?;
    let mut contributions: Vec<f64> = Vec::new();
    for k in 0..=(m / 2) {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        contributions
            .push(2.0 * sign * binomial_f64(m, 2 * k) * t_even_closed(k, q)?.value);
    }
    if m >= 1 {
        for k in 0..=((m - 1) / 2) {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            contributions
                .push(sign * binomial_f64(m, 2 * k + 1) * l_odd_closed(k, q)?.value);
        }
    }
    let mf = m as f64;
    let a = (mf + 1.0) * zeta_prime(-mf, q)?;
    contributions.push(
        -(a - bernoulli_polynomial(m + 1, q) * q.ln()) / ((mf + 1.0) * q.powi(m as i32 + 1)),
    );
    contributions.push(-1.0 / ((mf + 1.0) * (mf + 1.0)));
    let scale = contributions.iter().fold(0.0f64, |s, c| s.max(c.abs())).max(1e-300);
    Ok(contributions.iter().sum::<f64>() / scale)
}

/// Normalized residual of the polygamma recursion that generates the I
/// family:
///
/// ```text
/// Σ_{p=⌊(m+1)/2⌋}^{m} (−1)^p 2^{2p} C(p, m−p) I_p(q)
///   + 2^{m−1} [ q^m ψ^{(m)}(q)/m! + (−1)^m/(2q) + (−1)^m/m ] = 0
/// ```
pub fn i_recursion_check(m: u32, q: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::argument("i_recursion_check requires m >= 1"));
    }
    require_positive_q(q)?;
    let mf = m as f64;
    let mut contributions: Vec<f64> = Vec::new();
    for p in (m + 1) / 2..=m {
        let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
        let b = binomial_f64(p, m - p);
        if b == 0.0 {
            continue;
        }
        contributions.push(sign * 2f64.powi(2 * p as i32) * b * i_closed(p, q)?.value);
    }
    let msign = if m % 2 == 0 { 1.0 } else { -1.0 };
    contributions.push(
        2f64.powi(m as i32 - 1)
            * (q.powi(m as i32) * polygamma(m, q)? / factorial_f64(m)
                + msign * 0.5 / q
                + msign / mf),
    );
    let scale = contributions.iter().fold(0.0f64, |s, c| s.max(c.abs())).max(1e-300);
    Ok(contributions.iter().sum::<f64>() / scale)
}

/// The two parameter-derivative integrals
///
/// ```text
/// v1 = ∫₀^∞ t arctan t / sinh²(πt) dt  = 1/(2π) + γ/π − ln√(2π)/π
/// v2 = ∫₀^∞ t arctan t / sinh²(2πt) dt = −1/(8π) + γ/(2π) − ln π/(8π)
/// ```
///
/// assembled from the hand-differentiated q-derivative of the T_0 closed
/// form at q = 1 and q = 2 (∫ t arctan t/sinh²(πqt) dt = −(2/π) T_0′(q)).
pub fn sinh_sq_integrals() -> (ClosedFormValue, ClosedFormValue) {
    (sinh_sq_from_t0_derivative(1.0), sinh_sq_from_t0_derivative(2.0))
}

fn sinh_sq_from_t0_derivative(q: f64) -> ClosedFormValue {
    let lnq = q.ln();
    let scale = -2.0 / PI;
    // T_0'(q) term by term
    let psi = digamma(q).expect("q is 1 or 2");
    let lg = log_gamma(q).expect("q is 1 or 2");
    ClosedFormValue::from_terms(vec![
        ("inverse_q", scale * (-0.5 / q)),
        ("log_q", scale * ((1.0 - lnq) / (4.0 * q * q))),
        ("digamma", scale * (0.5 * psi / q)),
        ("log_gamma", scale * (-0.5 * lg / (q * q))),
        ("log_sqrt_2pi", scale * (0.5 * LN_SQRT_2PI / (q * q))),
    ])
}

/// Quadrature oracles for the two sinh² integrals.
pub fn sinh_sq_oracle(target_rel_tol: f64) -> Result<(QuadratureResult, QuadratureResult)> {
    let f1 = |t: f64| {
        let s = (PI * t).sinh();
        if s.is_infinite() {
            0.0
        } else {
            t * t.atan() / (s * s)
        }
    };
    let f2 = |t: f64| {
        let s = (2.0 * PI * t).sinh();
        if s.is_infinite() {
            0.0
        } else {
            t * t.atan() / (s * s)
        }
    };
    let r1 = integrate_decaying(f1, 2.0 * PI, 2.0, target_rel_tol)?;
    let r2 = integrate_decaying(f2, 4.0 * PI, 2.0, target_rel_tol)?;
    Ok((r1, r2))
}

/// Residual of −(m+1) ζ(−m, q) − B_{m+1}(q) with ζ(−m, q) evaluated through
/// the Hermite representation using the *terminating sine polynomial*, i.e.
///
/// ```text
/// ζ(−m,q) = q^m/2 − q^{m+1}/(m+1) − 2 q^{m+1} ∫₀^∞ P_m(t)/(e^{2πqt}−1) dt,
/// ```
///
/// with P_m(t) = Σ_k (−1)^k C(m,2k+1) t^{2k+1}.  Entirely quadrature-driven,
/// so it cross-checks the Euler–Maclaurin route from the integral side.
pub fn bernoulli_from_hurwitz_check(m: u32, q: f64) -> Result<f64> {
    require_positive_q(q)?;
    let zeta_neg_m = if m == 0 {
        0.5 - q
    } else {
        let poly = crate::expansions::trig_poly_in_t(m, crate::expansions::Parity::SineLike);
        let coeffs: Vec<f64> = poly
            .coeffs
            .iter()
            .map(|c| num::ToPrimitive::to_f64(c).expect("binomial coefficient fits f64"))
            .collect();
        let spec = IntegrandSpec {
            f: move |t: f64| {
                let t2 = t * t;
                let mut p = 0.0;
                for c in coeffs.iter().rev() {
                    p = p * t2 + c;
                }
                p * t
            },
            decay_class: m as f64,
        };
        let j = integrate(&spec, KernelKind::BoseMinus, q, 1e-12)?;
        let qm = q.powi(m as i32);
        0.5 * qm - qm * q / (m as f64 + 1.0) - 2.0 * qm * q * j.value
    };
    Ok(-(m as f64 + 1.0) * zeta_neg_m - bernoulli_polynomial(m + 1, q))
}

/// Residual of the moment integral of the digamma function,
///
/// ```text
/// ∫₀^q r^n ψ(r) dr = n! Σ_{j=0}^{n} (−1)^j/(n−j)! q^{n−j} ψ^{(−1−j)}(q)
///                  − n! (−1)^n ψ^{(−1−n)}(0),
/// ```
///
/// with the left side computed by direct adaptive quadrature (the integrand
/// extends continuously to r = 0 for n ≥ 1).
pub fn intpoly_check(n: u32, q: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::argument("intpoly_check requires n >= 1"));
    }
    require_positive_q(q)?;
    let lhs = integrate_interval(
        |r: f64| r.powi(n as i32) * digamma(r).unwrap_or(f64::NAN),
        0.0,
        q,
        1e-11,
        1e-13,
    )?;
    let nfact = factorial_f64(n);
    let mut rhs = 0.0;
    for j in 0..=n {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        rhs += sign / factorial_f64(n - j) * q.powi((n - j) as i32) * psi_neg(j, q)?;
    }
    rhs *= nfact;
    let nsign = if n % 2 == 0 { 1.0 } else { -1.0 };
    rhs -= nfact * nsign * negapolygamma_at_zero(n);
    Ok(lhs.value - rhs)
}

// ---------------------------------------------------------------------------
// Dispatch and the oracle side

/// Evaluates the closed form for a family member, or reports that none is
/// known.
pub fn evaluate_closed(id: &FamilyId, q: f64) -> Result<ClosedFormValue> {
    if !id.has_closed_form() {
        return Err(Error::NoClosedForm(id.label()));
    }
    match id.family {
        Family::I => i_variant_closed(id.index, q, id.kernel),
        Family::T => t_even_variant_closed(id.index / 2, q, id.kernel),
        Family::L => l_odd_variant_closed((id.index - 1) / 2, q, id.kernel),
    }
}

/// The defining integral of a family member, by the quadrature oracle.
/// Works for every index, including the members with no closed form.
pub fn oracle_integral(id: &FamilyId, q: f64, target_rel_tol: f64) -> Result<QuadratureResult> {
    require_positive_q(q)?;
    let index = id.index;
    match id.family {
        Family::I => {
            let spec = IntegrandSpec {
                f: move |t: f64| t * (1.0 + t * t).powi(-(index as i32) - 1),
                decay_class: 1.0,
            };
            integrate(&spec, id.kernel, q, target_rel_tol)
        }
        Family::T => {
            let spec = IntegrandSpec {
                f: move |t: f64| t.powi(index as i32) * t.atan(),
                decay_class: index as f64,
            };
            integrate(&spec, id.kernel, q, target_rel_tol)
        }
        Family::L => {
            let spec = IntegrandSpec {
                f: move |t: f64| t.powi(index as i32) * (1.0 + t * t).ln(),
                decay_class: index as f64 + 1.0,
            };
            integrate(&spec, id.kernel, q, target_rel_tol)
        }
    }
}
