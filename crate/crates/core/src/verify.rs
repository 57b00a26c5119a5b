//! Exact verification of the identity theorems over parameter grids.
//!
//! Every check builds both sides of one identity instance as polynomials and
//! reports their exact difference; `pass` means the discrepancy is the zero
//! polynomial. There is no tolerance anywhere.
//!
//! The product identity for `B_m(x) B_{n-m}(x)` exists in two modes. The
//! `Printed` mode evaluates the theorem exactly as typeset — inner sum
//! starting at `l = k`, no standalone constant term — so the resulting
//! nonzero discrepancies quantify the misprint instead of silently fixing
//! it. The `Corrected` mode extends the inner sum over all `l >= 0` (terms
//! with a negative Bernoulli index are absent) and carries the constant
//! `(-1)^{m+1} B_n / C(n,m)` into the `k = 0` coefficient; it is the
//! supported identity and is cross-checked on every call against the
//! trusted Theorem-1 expansion of the left-hand side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::expansion::{expand_theorem1, EulerExpansion};
use crate::families::{bernoulli_number, bernoulli_poly, bernoulli_poly_order, euler_poly};
use crate::operators::d_pow;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// The identities the verifier knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    Cor2,
    Cor3,
    Eq17,
    Thm4,
    Eq19,
    Thm5,
    Eq20,
    Thm6Printed,
    Thm6Corrected,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Cor2,
        IdentityId::Cor3,
        IdentityId::Eq17,
        IdentityId::Thm4,
        IdentityId::Eq19,
        IdentityId::Thm5,
        IdentityId::Eq20,
        IdentityId::Thm6Printed,
        IdentityId::Thm6Corrected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Cor2 => "cor2",
            IdentityId::Cor3 => "cor3",
            IdentityId::Eq17 => "eq17",
            IdentityId::Thm4 => "thm4",
            IdentityId::Eq19 => "eq19",
            IdentityId::Thm5 => "thm5",
            IdentityId::Eq20 => "eq20",
            IdentityId::Thm6Printed => "thm6-printed",
            IdentityId::Thm6Corrected => "thm6-corrected",
        }
    }

    pub fn from_name(name: &str) -> Option<IdentityId> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }

    /// Parameter names in canonical (enumeration) order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            IdentityId::Cor2 | IdentityId::Thm4 | IdentityId::Thm5 => &["n", "r"],
            IdentityId::Cor3 => &["n", "s", "r"],
            IdentityId::Eq17 => &["n"],
            IdentityId::Eq19 => &["n", "k"],
            IdentityId::Eq20 => &["n", "m"],
            IdentityId::Thm6Printed | IdentityId::Thm6Corrected => &["n", "m", "r"],
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which form of the product identity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem6Mode {
    Printed,
    Corrected,
}

/// Precondition violations reported by the checks that have any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    Precondition {
        identity: IdentityId,
        reason: String,
    },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Precondition { identity, reason } => {
                write!(f, "{identity} precondition violated: {reason}")
            }
        }
    }
}

impl std::error::Error for VerifyError {}

/// The outcome of checking one identity instance. Both sides and their
/// difference are carried in full so failures are self-diagnosing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: BTreeMap<String, usize>,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub discrepancy: Polynomial,
    pub pass: bool,
    pub note: Option<String>,
}

impl IdentityReport {
    fn new(
        identity: IdentityId,
        params: &[(&str, usize)],
        lhs: Polynomial,
        rhs: Polynomial,
        note: Option<String>,
    ) -> Self {
        let discrepancy = &lhs - &rhs;
        let pass = discrepancy.is_zero();
        IdentityReport {
            identity,
            params: params
                .iter()
                .map(|&(name, value)| (name.to_string(), value))
                .collect(),
            lhs,
            rhs,
            discrepancy,
            pass,
            note,
        }
    }
}

fn node(j: usize) -> Rational {
    Rational::from_integer(j as i64)
}

/// `x^n = (1/2^r) sum_k sum_j C(r,j) C(n,k) j^{n-k} E_k^{(r)}(x)`.
pub fn check_corollary2(n: usize, r: usize) -> IdentityReport {
    let lhs = Polynomial::monomial(Rational::one(), n);
    let rhs = crate::expansion::monomial_expansion(n, r).synthesize();
    IdentityReport::new(IdentityId::Cor2, &[("n", n), ("r", r)], lhs, rhs, None)
}

/// `B_n^{(s)}(x) = (1/2^r) sum_k sum_j C(r,j) C(n,k) B_{n-k}^{(s)}(j) E_k^{(r)}(x)`.
pub fn check_corollary3(n: usize, s: usize, r: usize) -> IdentityReport {
    let lhs = bernoulli_poly_order(n, s);
    let rhs = crate::expansion::bernoulli_order_expansion(n, s, r).synthesize();
    IdentityReport::new(
        IdentityId::Cor3,
        &[("n", n), ("s", s), ("r", r)],
        lhs,
        rhs,
        None,
    )
}

/// The sum `sum_{k=0, k!=1}^{n} C(n,k) B_k E_{n-k}(x)`.
fn eq17_sum(n: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    for k in (0..=n).filter(|&k| k != 1) {
        let weight = binomial(n, k) * bernoulli_number(k);
        if !weight.is_zero() {
            acc += &euler_poly(n - k).scale(&weight);
        }
    }
    acc
}

/// `B_n(x) = sum_{k=0, k!=1}^{n} C(n,k) B_k E_{n-k}(x)`.
pub fn check_eq17(n: usize) -> IdentityReport {
    IdentityReport::new(
        IdentityId::Eq17,
        &[("n", n)],
        bernoulli_poly(n),
        eq17_sum(n),
        None,
    )
}

/// Equates the two expansions of `B_n(x)`: the mixed Bernoulli/Euler sum
/// against its order-`r` Euler-basis form
/// `(1/2^r) sum_k sum_j C(r,j) C(n,k) B_{n-k}(j) E_k^{(r)}(x)`.
pub fn check_theorem4(n: usize, r: usize) -> IdentityReport {
    let lhs = eq17_sum(n);
    let two_pow_r = Rational::from(2).pow(r as u32);
    let coeffs = (0..=n)
        .map(|k| {
            let inner = bernoulli_poly(n - k);
            let node_sum: Rational = (0..=r)
                .map(|j| binomial(r, j) * inner.eval(&node(j)))
                .sum();
            binomial(n, k) * node_sum / &two_pow_r
        })
        .collect();
    let rhs = EulerExpansion::new(r, coeffs).synthesize();
    IdentityReport::new(IdentityId::Thm4, &[("n", n), ("r", r)], lhs, rhs, None)
}

/// The Bernoulli self-convolution `sum_{i=0}^{n} B_i(x) B_{n-i}(x)`.
fn bernoulli_convolution(n: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    for i in 0..=n {
        acc += &(bernoulli_poly(i) * bernoulli_poly(n - i));
    }
    acc
}

/// `D^k [sum_i B_i(x) B_{n-i}(x)] = (n+1)!/(n-k+1)! sum_{l=k}^{n}
/// B_{l-k}(x) B_{n-l}(x)`, for `k <= n`.
pub fn check_eq19(n: usize, k: usize) -> Result<IdentityReport, VerifyError> {
    if k > n {
        return Err(VerifyError::Precondition {
            identity: IdentityId::Eq19,
            reason: format!("require k <= n (got n={n}, k={k})"),
        });
    }
    let lhs = d_pow(&bernoulli_convolution(n), k);
    let mut sum = Polynomial::zero();
    for l in k..=n {
        sum += &(bernoulli_poly(l - k) * bernoulli_poly(n - l));
    }
    // (n+1)!/(n-k+1)! as a falling-factorial product
    let mut factor = Rational::one();
    for i in (n - k + 2)..=(n + 1) {
        factor *= Rational::from_integer(i as i64);
    }
    let rhs = sum.scale(&factor);
    Ok(IdentityReport::new(
        IdentityId::Eq19,
        &[("n", n), ("k", k)],
        lhs,
        rhs,
        None,
    ))
}

/// `sum_k B_k(x) B_{n-k}(x) = (1/2^r) sum_k sum_{l=k}^{n} sum_j C(r,j)
/// C(n+1,k) B_{l-k}(j) B_{n-l}(j) E_k^{(r)}(x)`.
pub fn check_theorem5(n: usize, r: usize) -> IdentityReport {
    let lhs = bernoulli_convolution(n);
    let two_pow_r = Rational::from(2).pow(r as u32);
    let coeffs = (0..=n)
        .map(|k| {
            let mut acc = Rational::zero();
            for l in k..=n {
                let left = bernoulli_poly(l - k);
                let right = bernoulli_poly(n - l);
                for j in 0..=r {
                    let at = node(j);
                    acc += binomial(r, j) * left.eval(&at) * right.eval(&at);
                }
            }
            binomial(n + 1, k) * acc / &two_pow_r
        })
        .collect();
    let rhs = EulerExpansion::new(r, coeffs).synthesize();
    IdentityReport::new(IdentityId::Thm5, &[("n", n), ("r", r)], lhs, rhs, None)
}

fn require_product_preconditions(
    identity: IdentityId,
    n: usize,
    m: usize,
) -> Result<(), VerifyError> {
    if m < 1 || n < m + 2 {
        return Err(VerifyError::Precondition {
            identity,
            reason: format!(
                "require n >= m+2 and m >= 1 (got n={n}, m={m}); \
                 the m = 0 boundary provably fails for even n"
            ),
        });
    }
    Ok(())
}

/// The weight `C(m,2l)(n-m) + C(n-m,2l)m` multiplying `B_{2l}` terms.
/// It vanishes once `2l > max(m, n-m)`, which is what terminates every
/// "sum to infinity" below and keeps the `n-2l` divisors positive.
fn product_weight(n: usize, m: usize, l: usize) -> Rational {
    binomial(m, 2 * l) * Rational::from_integer((n - m) as i64)
        + binomial(n - m, 2 * l) * Rational::from_integer(m as i64)
}

/// Standalone constant `(-1)^{m+1} B_n / C(n,m)`.
fn product_constant(n: usize, m: usize) -> Rational {
    let sign = if m % 2 == 0 {
        Rational::from(-1)
    } else {
        Rational::one()
    };
    sign * bernoulli_number(n) / binomial(n, m)
}

/// Right-hand side of the monomial-basis product formula; split out so the
/// failing `m = 0` boundary can be demonstrated without the precondition.
fn eq20_rhs(n: usize, m: usize) -> Polynomial {
    let bound = m.max(n - m);
    let mut acc = Polynomial::zero();
    let mut l = 0;
    while 2 * l <= bound {
        let weight = product_weight(n, m, l);
        if !weight.is_zero() {
            let scale =
                weight * bernoulli_number(2 * l) / Rational::from_integer((n - 2 * l) as i64);
            if !scale.is_zero() {
                acc += &bernoulli_poly(n - 2 * l).scale(&scale);
            }
        }
        l += 1;
    }
    acc + Polynomial::constant(product_constant(n, m))
}

/// `B_m(x) B_{n-m}(x) = sum_l {C(m,2l)(n-m) + C(n-m,2l)m} B_{2l}
/// B_{n-2l}(x)/(n-2l) + (-1)^{m+1} B_n / C(n,m)`, for `n >= m+2`, `m >= 1`.
pub fn check_eq20(n: usize, m: usize) -> Result<IdentityReport, VerifyError> {
    require_product_preconditions(IdentityId::Eq20, n, m)?;
    let lhs = bernoulli_poly(m) * bernoulli_poly(n - m);
    Ok(IdentityReport::new(
        IdentityId::Eq20,
        &[("n", n), ("m", m)],
        lhs,
        eq20_rhs(n, m),
        None,
    ))
}

/// Euler-basis coefficients of the product identity in either mode.
fn theorem6_coeffs(n: usize, m: usize, r: usize, mode: Theorem6Mode) -> Vec<Rational> {
    let bound = m.max(n - m);
    let two_pow_r = Rational::from(2).pow(r as u32);
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = Rational::zero();
        let mut l = match mode {
            Theorem6Mode::Printed => k,
            Theorem6Mode::Corrected => 0,
        };
        while 2 * l <= bound {
            let weight = product_weight(n, m, l);
            // Terms with a negative Bernoulli index are absent.
            if !weight.is_zero() && n >= 2 * l + k {
                let inner = bernoulli_poly(n - 2 * l - k);
                let node_sum: Rational = (0..=r)
                    .map(|j| binomial(r, j) * inner.eval(&node(j)))
                    .sum();
                acc += binomial(n - 2 * l, k)
                    * weight
                    * bernoulli_number(2 * l)
                    * node_sum
                    / Rational::from_integer((n - 2 * l) as i64);
            }
            l += 1;
        }
        acc /= &two_pow_r;
        if mode == Theorem6Mode::Corrected && k == 0 {
            acc += product_constant(n, m);
        }
        coeffs.push(acc);
    }
    coeffs
}

/// The Euler-basis form of `B_m(x) B_{n-m}(x)`, for `n >= m+2`, `m >= 1`.
///
/// `Printed` evaluates the theorem exactly as typeset and in general fails;
/// its report quantifies the misprint. `Corrected` must pass, and its
/// right-hand side is additionally required to match the Theorem-1
/// expansion of the left-hand side.
pub fn check_theorem6(
    n: usize,
    m: usize,
    r: usize,
    mode: Theorem6Mode,
) -> Result<IdentityReport, VerifyError> {
    let identity = match mode {
        Theorem6Mode::Printed => IdentityId::Thm6Printed,
        Theorem6Mode::Corrected => IdentityId::Thm6Corrected,
    };
    require_product_preconditions(identity, n, m)?;
    let lhs = bernoulli_poly(m) * bernoulli_poly(n - m);
    let rhs = EulerExpansion::new(r, theorem6_coeffs(n, m, r, mode)).synthesize();
    let note = match mode {
        Theorem6Mode::Printed => {
            "as typeset: inner sum starts at l = k and the standalone constant is dropped"
        }
        Theorem6Mode::Corrected => {
            let oracle = expand_theorem1(&lhs, r).synthesize();
            assert_eq!(
                rhs, oracle,
                "corrected product formula must agree with the Theorem-1 \
                 expansion of B_{m}(x)B_{}(x) at r={r}",
                n - m
            );
            "corrected: l-sum over all l >= 0, constant carried into b_0"
        }
    };
    Ok(IdentityReport::new(
        identity,
        &[("n", n), ("m", m), ("r", r)],
        lhs,
        rhs,
        Some(note.to_string()),
    ))
}

/// Inclusive upper bounds for grid enumeration. `m_max` and `k_max` default
/// to `n_max` when unset; identity preconditions (`k <= n`, `m >= 1`,
/// `n >= m+2`) additionally filter the tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridBounds {
    pub n_max: usize,
    pub m_max: Option<usize>,
    pub r_max: usize,
    pub s_max: usize,
    pub k_max: Option<usize>,
}

impl Default for GridBounds {
    fn default() -> Self {
        GridBounds {
            n_max: 8,
            m_max: None,
            r_max: 3,
            s_max: 3,
            k_max: None,
        }
    }
}

/// Checks every valid parameter tuple within `bounds` for each requested
/// identity. Identities run in their canonical order (duplicates collapse),
/// and tuples enumerate lexicographically, so the output order is
/// deterministic.
pub fn run_grid(ids: &[IdentityId], bounds: &GridBounds) -> Vec<IdentityReport> {
    let ids: BTreeSet<IdentityId> = ids.iter().copied().collect();
    let n_max = bounds.n_max;
    let m_max = bounds.m_max.unwrap_or(n_max);
    let r_max = bounds.r_max;
    let s_max = bounds.s_max;
    let k_max = bounds.k_max.unwrap_or(n_max);

    let mut reports = Vec::new();
    for id in ids {
        match id {
            IdentityId::Cor2 => {
                for n in 0..=n_max {
                    for r in 0..=r_max {
                        reports.push(check_corollary2(n, r));
                    }
                }
            }
            IdentityId::Cor3 => {
                for n in 0..=n_max {
                    for s in 0..=s_max {
                        for r in 0..=r_max {
                            reports.push(check_corollary3(n, s, r));
                        }
                    }
                }
            }
            IdentityId::Eq17 => {
                for n in 0..=n_max {
                    reports.push(check_eq17(n));
                }
            }
            IdentityId::Thm4 => {
                for n in 0..=n_max {
                    for r in 0..=r_max {
                        reports.push(check_theorem4(n, r));
                    }
                }
            }
            IdentityId::Eq19 => {
                for n in 0..=n_max {
                    for k in 0..=n.min(k_max) {
                        reports.push(check_eq19(n, k).expect("k <= n by construction"));
                    }
                }
            }
            IdentityId::Thm5 => {
                for n in 0..=n_max {
                    for r in 0..=r_max {
                        reports.push(check_theorem5(n, r));
                    }
                }
            }
            IdentityId::Eq20 => {
                for n in 0..=n_max {
                    for m in 1..=m_max.min(n.saturating_sub(2)) {
                        reports.push(check_eq20(n, m).expect("grid satisfies preconditions"));
                    }
                }
            }
            IdentityId::Thm6Printed | IdentityId::Thm6Corrected => {
                let mode = if id == IdentityId::Thm6Printed {
                    Theorem6Mode::Printed
                } else {
                    Theorem6Mode::Corrected
                };
                for n in 0..=n_max {
                    for m in 1..=m_max.min(n.saturating_sub(2)) {
                        for r in 0..=r_max {
                            reports.push(
                                check_theorem6(n, m, r, mode)
                                    .expect("grid satisfies preconditions"),
                            );
                        }
                    }
                }
            }
        }
    }
    reports
}
