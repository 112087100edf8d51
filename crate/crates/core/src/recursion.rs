//! The family `F_{n,k;p}^{(d,ℓ)}` as an integer q,t-recurrence.
//!
//! Values come from the iterated recursion, which always lowers `n`:
//!
//! * `F_{0,k;p}^{(d,ℓ)} = δ_{k,0} δ_{p,0} δ_{d,0} δ_{ℓ,0}` and
//!   `F_{n,0;p}^{(d,ℓ)} = δ_{n,0} δ_{p,0} δ_{d,0} δ_{ℓ,0}`;
//! * `F_{n,n;p}^{(d,ℓ)} = δ_{ℓ,0} q^{C(n-d,2)} [n, n-d]_q [n+p-1, p]_q`;
//! * for `1 <= k < n`,
//!   `F_{n,k;p}^{(d,ℓ)} = t^{n-k-ℓ} Σ_{j<=p} Σ_{s<=k} q^{C(s,2)} [k,s]_q [k+j-1,j]_q
//!    t^{p-j} Σ_{u<=n-k-ℓ} Σ_{v<=s+j} q^{C(v,2)} [s+j,v]_q [s+j+u-1,u]_q
//!    F_{n-k,u+v;p-j}^{(d-k+s,ℓ-v)}`.
//!
//! Summands whose indices leave the admissible domain contribute zero; only
//! out-of-domain top-level queries are errors.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use parking_lot::RwLock;

use crate::error::{DeltaError, Result};
use crate::qtpoly::{q_power_binom2, qbinom, QtPoly};

/// Environment variable capping the number of memo entries.
pub const MEMO_LIMIT_ENV: &str = "DELTA_MEMO_LIMIT";

/// The index `(n, k, p, d, ℓ)` of `F_{n,k;p}^{(d,ℓ)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FIndex {
    pub n: u32,
    pub k: u32,
    pub p: u32,
    pub d: u32,
    pub l: u32,
}

impl FIndex {
    pub fn new(n: u32, k: u32, p: u32, d: u32, l: u32) -> Self {
        Self { n, k, p, d, l }
    }

    /// `n >= k + ℓ` and `n + p >= d`.
    pub fn is_admissible(&self) -> bool {
        self.n >= self.k + self.l && self.n + self.p >= self.d
    }

    /// Covered by the initial conditions (`n = 0` or `k = 0`).
    pub fn is_initial(&self) -> bool {
        self.n == 0 || self.k == 0
    }

    fn wide(&self) -> WideIndex {
        WideIndex {
            n: i64::from(self.n),
            k: i64::from(self.k),
            p: i64::from(self.p),
            d: i64::from(self.d),
            l: i64::from(self.l),
        }
    }
}

impl fmt::Display for FIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{{{},{};{}}}^({},{})",
            self.n, self.k, self.p, self.d, self.l
        )
    }
}

/// Signed index used inside the sums, where differences may go negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct WideIndex {
    n: i64,
    k: i64,
    p: i64,
    d: i64,
    l: i64,
}

/// Which right-hand side of the one-step recursion to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OneStepVariant {
    /// The recursion exactly as stated.
    Exact,
    /// The recursion with its `s = 0` summands removed; used to show that the
    /// residual check notices a wrong right-hand side.
    DropSZero,
}

/// Memoized evaluator. Safe to share between threads: lookups take a read
/// lock, and a value computed twice by racing threads is simply stored twice
/// (both copies are equal).
#[derive(Debug, Default)]
pub struct FEvaluator {
    memo: RwLock<HashMap<WideIndex, QtPoly>>,
    limit: Option<usize>,
}

impl FEvaluator {
    /// Evaluator without an entry cap.
    pub fn new() -> Self {
        Self::default()
    }

    /// Evaluator that fails with [`DeltaError::MemoLimitExceeded`] instead of
    /// storing more than `limit` entries.
    pub fn with_limit(limit: usize) -> Self {
        Self {
            memo: RwLock::new(HashMap::new()),
            limit: Some(limit),
        }
    }

    /// Reads the cap from `DELTA_MEMO_LIMIT` (unset or unparsable: no cap).
    pub fn from_env() -> Self {
        match std::env::var(MEMO_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(limit) => Self::with_limit(limit),
            None => Self::new(),
        }
    }

    /// Number of memoized values.
    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }

    /// `F_{n,k;p}^{(d,ℓ)}`; indices outside the admissible domain are an
    /// error unless the initial conditions cover them.
    pub fn eval(&self, idx: FIndex) -> Result<QtPoly> {
        if !idx.is_initial() && !idx.is_admissible() {
            return Err(DeltaError::DomainError(format!(
                "{idx} needs n >= k + l and n + p >= d"
            )));
        }
        self.value(idx.wide())
    }

    fn value(&self, idx: WideIndex) -> Result<QtPoly> {
        let WideIndex { n, k, p, d, l } = idx;
        if n < 0 || k < 0 || p < 0 || d < 0 || l < 0 {
            return Ok(QtPoly::zero());
        }
        if n == 0 || k == 0 {
            let all_zero = n == 0 && k == 0 && p == 0 && d == 0 && l == 0;
            return Ok(if all_zero { QtPoly::one() } else { QtPoly::zero() });
        }
        if n < k + l || n + p < d {
            return Ok(QtPoly::zero());
        }
        if let Some(hit) = self.memo.read().get(&idx) {
            return Ok(hit.clone());
        }
        let computed = if k == n {
            base_case(n, p, d, l)
        } else {
            self.iterated_sum(idx)?
        };
        let mut memo = self.memo.write();
        if let Some(limit) = self.limit {
            if !memo.contains_key(&idx) && memo.len() >= limit {
                return Err(DeltaError::MemoLimitExceeded { limit });
            }
        }
        memo.insert(idx, computed.clone());
        Ok(computed)
    }

    fn iterated_sum(&self, idx: WideIndex) -> Result<QtPoly> {
        let WideIndex { n, k, p, d, l } = idx;
        let mut total = QtPoly::zero();
        for j in 0..=p {
            for s in 0..=k {
                let outer = &(&q_power_binom2(s as u32) * &qbinom(k, s)) * &qbinom(k + j - 1, j);
                if outer.is_zero() {
                    continue;
                }
                let mut inner = QtPoly::zero();
                for u in 0..=(n - k - l) {
                    for v in 0..=(s + j) {
                        let sub = self.value(WideIndex {
                            n: n - k,
                            k: u + v,
                            p: p - j,
                            d: d - k + s,
                            l: l - v,
                        })?;
                        if sub.is_zero() {
                            continue;
                        }
                        let weight = &(&q_power_binom2(v as u32) * &qbinom(s + j, v))
                            * &qbinom(s + j + u - 1, u);
                        inner += &weight * &sub;
                    }
                }
                if inner.is_zero() {
                    continue;
                }
                let t_exp = (n - k - l + p - j) as u32;
                total += (&outer * &inner).shifted(0, t_exp);
            }
        }
        Ok(total)
    }

    /// Right-hand side of the one-step recursion
    /// `t^{n-ℓ-k} Σ_{j<=p} Σ_{s<=k} q^{C(s,2)} [k,s]_q [k+j-1,j]_q
    ///  F_{n+p-d, s+j; n-ℓ-k}^{(n+p-d-ℓ, n-d-s)}` for `1 <= k < n`.
    pub fn onestep_rhs(&self, idx: FIndex, variant: OneStepVariant) -> Result<QtPoly> {
        if idx.k == 0 || idx.k >= idx.n || !idx.is_admissible() {
            return Err(DeltaError::DomainError(format!(
                "{idx}: the one-step recursion needs 1 <= k < n inside the domain"
            )));
        }
        let WideIndex { n, k, p, d, l } = idx.wide();
        let first_s = match variant {
            OneStepVariant::Exact => 0,
            OneStepVariant::DropSZero => 1,
        };
        let mut total = QtPoly::zero();
        for j in 0..=p {
            for s in first_s..=k {
                let weight = &(&q_power_binom2(s as u32) * &qbinom(k, s)) * &qbinom(k + j - 1, j);
                if weight.is_zero() {
                    continue;
                }
                let sub = self.value(WideIndex {
                    n: n + p - d,
                    k: s + j,
                    p: n - l - k,
                    d: n + p - d - l,
                    l: n - d - s,
                })?;
                total += &weight * &sub;
            }
        }
        Ok(total.shifted(0, (n - l - k) as u32))
    }

    /// `F(idx)` minus the one-step right-hand side; zero when the recursion
    /// holds.
    pub fn onestep_residual(&self, idx: FIndex) -> Result<QtPoly> {
        let rhs = self.onestep_rhs(idx, OneStepVariant::Exact)?;
        Ok(&self.eval(idx)? - &rhs)
    }

    /// `Σ_{k=1}^{n-ℓ} F_{n,k;p}^{(d,ℓ)}`.
    pub fn schroeder_sum(&self, n: u32, l: u32, p: u32, d: u32) -> Result<QtPoly> {
        if n < l + 1 || n < d {
            return Err(DeltaError::DomainError(format!(
                "Schröder sum needs n >= l + 1 and n >= d (n={n}, l={l}, d={d})"
            )));
        }
        let mut total = QtPoly::zero();
        for k in 1..=(n - l) {
            total += self.eval(FIndex::new(n, k, p, d, l))?;
        }
        Ok(total)
    }
}

/// `δ_{ℓ,0} q^{C(n-d,2)} [n, n-d]_q [n+p-1, p]_q`.
fn base_case(n: i64, p: i64, d: i64, l: i64) -> QtPoly {
    if l != 0 || d > n {
        return QtPoly::zero();
    }
    let q_factor = q_power_binom2((n - d) as u32);
    &(&q_factor * &qbinom(n, n - d)) * &qbinom(n + p - 1, p)
}

fn shared() -> &'static FEvaluator {
    static SHARED: OnceLock<FEvaluator> = OnceLock::new();
    SHARED.get_or_init(FEvaluator::new)
}

/// Closed-form value for `k = n` (requires `n >= 1`).
pub fn f_base(n: u32, p: u32, d: u32, l: u32) -> Result<QtPoly> {
    if n == 0 {
        return Err(DeltaError::DomainError("the base case needs n >= 1".into()));
    }
    Ok(base_case(
        i64::from(n),
        i64::from(p),
        i64::from(d),
        i64::from(l),
    ))
}

/// `F_{n,k;p}^{(d,ℓ)}` through the process-wide memo table.
pub fn f_eval(idx: FIndex) -> Result<QtPoly> {
    shared().eval(idx)
}

/// One-step recursion residual through the process-wide memo table.
pub fn f_onestep_residual(idx: FIndex) -> Result<QtPoly> {
    shared().onestep_residual(idx)
}

/// Schröder sum through the process-wide memo table.
pub fn schroeder_sum(n: u32, l: u32, p: u32, d: u32) -> Result<QtPoly> {
    shared().schroeder_sum(n, l, p, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u32, k: u32, p: u32, d: u32, l: u32) -> QtPoly {
        f_eval(FIndex::new(n, k, p, d, l)).unwrap()
    }

    #[test]
    fn base_case_examples() {
        assert_eq!(f_base(2, 0, 0, 0).unwrap(), QtPoly::q());
        assert_eq!(f_base(2, 1, 2, 0).unwrap(), &QtPoly::one() + &QtPoly::q());
        for l in 1..4 {
            assert!(f_base(3, 1, 1, l).unwrap().is_zero());
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(f(2, 1, 0, 0, 0), QtPoly::t());
        assert_eq!(f(1, 1, 0, 0, 0), QtPoly::one());
        assert_eq!(f(0, 0, 0, 0, 0), QtPoly::one());
        assert!(f(0, 1, 0, 0, 0).is_zero());
        assert!(f(0, 0, 1, 0, 0).is_zero());
        assert!(f(3, 0, 0, 0, 0).is_zero());
    }

    #[test]
    fn out_of_domain_is_an_error() {
        assert!(matches!(
            f_eval(FIndex::new(2, 2, 0, 0, 1)),
            Err(DeltaError::DomainError(_))
        ));
        assert!(matches!(
            f_eval(FIndex::new(2, 1, 0, 3, 0)),
            Err(DeltaError::DomainError(_))
        ));
    }

    #[test]
    fn schroeder_examples() {
        assert_eq!(schroeder_sum(2, 0, 0, 0).unwrap(), &QtPoly::q() + &QtPoly::t());
        let catalan3 =
            QtPoly::from_terms([(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)]);
        assert_eq!(schroeder_sum(3, 0, 0, 0).unwrap(), catalan3);
        for n in 1..6 {
            for d in 0..=n {
                assert_eq!(
                    schroeder_sum(n, n - 1, 0, d).unwrap(),
                    f(n, 1, 0, d, n - 1)
                );
            }
        }
        assert!(schroeder_sum(2, 2, 0, 0).is_err());
    }

    #[test]
    fn onestep_residual_vanishes_and_detects_perturbation() {
        let ev = FEvaluator::new();
        let mut perturbed_nonzero = 0;
        for n in 2..=5u32 {
            for p in 0..=(6 - n) {
                for k in 1..n {
                    for l in 0..=(n - k) {
                        for d in 0..=(n + p) {
                            let idx = FIndex::new(n, k, p, d, l);
                            assert!(ev.onestep_residual(idx).unwrap().is_zero(), "{idx}");
                            let exact = ev.eval(idx).unwrap();
                            let wrong = ev.onestep_rhs(idx, OneStepVariant::DropSZero).unwrap();
                            if exact != wrong {
                                perturbed_nonzero += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(perturbed_nonzero > 0);
        assert!(ev.onestep_residual(FIndex::new(3, 3, 0, 0, 0)).is_err());
    }

    #[test]
    fn memo_limit_fails_fast() {
        let ev = FEvaluator::with_limit(2);
        assert!(matches!(
            ev.eval(FIndex::new(6, 2, 2, 1, 1)),
            Err(DeltaError::MemoLimitExceeded { limit: 2 })
        ));
        let roomy = FEvaluator::with_limit(10_000);
        assert_eq!(roomy.eval(FIndex::new(2, 1, 0, 0, 0)).unwrap(), QtPoly::t());
    }
}
