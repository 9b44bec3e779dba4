//! Closed-form exact counts.
//!
//! The central quantity is the covering count: the number of `n x k` 0/1
//! matrices with exactly `p` ones per column and no all-zero row, obtained
//! from the unrestricted count `C(n,p)^k` by inclusion-exclusion over the
//! "row i is all zeros" properties. Five specializations of that alternating
//! sum have closed forms; this module evaluates both sides.

use std::fmt;
use std::str::FromStr;

use crate::arith::{binomial, factorial, int_pow, multinomial};
use crate::compose::compositions;
use crate::error::Error;
use crate::scalar::{scalar_from_u64, ExactScalar};
use crate::shape::MatrixShape;

/// Number of `n x k` 0/1 matrices with exactly `p` ones per column and no
/// row constraint: `C(n,p)^k`. Zero when `p > n`.
pub fn count_unrestricted<T: ExactScalar>(shape: &MatrixShape) -> T {
    int_pow(
        binomial::<T>(shape.rows, shape.col_weight as i64),
        shape.cols,
    )
}

/// Number of `n x k` 0/1 matrices with exactly `p` ones per column and at
/// least one 1 in every row:
///
/// ```text
/// sum_{s=0}^{n-p} (-1)^s C(n,s) C(n-s,p)^k
/// ```
///
/// The sum is evaluated term by term in increasing `s` with exact signed
/// arithmetic. For `p = 0` the relaxed sum runs to `s = n` and collapses to
/// `(1-1)^n = 0`; for `p > n` the summation range is empty and the count is
/// 0. In the tall regime `n > kp` the alternating terms cancel to 0 on
/// their own; no special case is applied.
pub fn count_covering<T: ExactScalar>(shape: &MatrixShape) -> T {
    let (n, k, p) = (shape.rows, shape.cols, shape.col_weight);
    if p > n {
        return T::zero();
    }
    let mut acc = T::zero();
    for s in 0..=(n - p) {
        let term = binomial::<T>(n, s as i64) * int_pow(binomial::<T>(n - s, p as i64), k);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Generic inclusion-exclusion for `m` interchangeable properties.
///
/// `per_subset(s)` must return the number of elements possessing some fixed
/// set of `s` properties (the same for every choice of `s` properties); the
/// `C(m,s)` ways of choosing the subset are multiplied in here. Returns
///
/// ```text
/// total + sum_{s=1}^{m} (-1)^s C(m,s) per_subset(s)
/// ```
pub fn inclusion_exclusion_symmetric<T, F>(total: T, m: u64, mut per_subset: F) -> T
where
    T: ExactScalar,
    F: FnMut(u64) -> T,
{
    let mut acc = total;
    for s in 1..=m {
        let term = binomial::<T>(m, s as i64) * per_subset(s);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Left-hand side of the surjection identity:
/// `sum_{s=0}^{n-1} (-1)^s C(n,s) (n-s)^k`, the number of onto maps from a
/// `k`-set to an `n`-set, which equals the covering count at column weight 1.
pub fn surjection_count_lhs<T: ExactScalar>(n: u64, k: u64) -> T {
    if n == 0 {
        return T::zero();
    }
    let mut acc = T::zero();
    for s in 0..n {
        let term = binomial::<T>(n, s as i64) * int_pow(scalar_from_u64::<T>(n - s), k);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The five named identities plus the binomial-transform consequence of the
/// inclusion-exclusion derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `n = k`, `p = 1`: covering count is `n!`.
    Eq1,
    /// `n = 2p`, `k = 2`: covering count is `(2p)!/(p!)^2`.
    Eq2,
    /// `n > pk`: covering count is 0.
    Eq3,
    /// `n = kp`: covering count is `(kp)!/(p!)^k`.
    Eq4,
    /// `p = 1`, `n <= k`: covering count equals the composition sum.
    Eq5,
    /// `C(n,p)^k = sum_{m=p}^{n} C(n,m) R(m x k, p)`.
    Transform,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::Eq1,
        IdentityId::Eq2,
        IdentityId::Eq3,
        IdentityId::Eq4,
        IdentityId::Eq5,
        IdentityId::Transform,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq2 => "eq2",
            IdentityId::Eq3 => "eq3",
            IdentityId::Eq4 => "eq4",
            IdentityId::Eq5 => "eq5",
            IdentityId::Transform => "transform",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eq1" => Ok(IdentityId::Eq1),
            "eq2" => Ok(IdentityId::Eq2),
            "eq3" => Ok(IdentityId::Eq3),
            "eq4" => Ok(IdentityId::Eq4),
            "eq5" => Ok(IdentityId::Eq5),
            "transform" => Ok(IdentityId::Transform),
            other => Err(Error::Domain(format!("unknown identity {other:?}"))),
        }
    }
}

/// A point in parameter space. Each identity uses a subset of the three
/// variables; absent variables stay `None`. The derived ordering (`n`, then
/// `k`, then `p`) is the canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ParamPoint {
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub p: Option<u64>,
}

impl ParamPoint {
    pub fn with_n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_p(mut self, p: u64) -> Self {
        self.p = Some(p);
        self
    }

    /// (name, value) pairs for the variables that are present, in canonical
    /// order.
    pub fn entries(&self) -> Vec<(&'static str, u64)> {
        let mut out = Vec::new();
        if let Some(n) = self.n {
            out.push(("n", n));
        }
        if let Some(k) = self.k {
            out.push(("k", k));
        }
        if let Some(p) = self.p {
            out.push(("p", p));
        }
        out
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, value) in self.entries() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{name}={value}")?;
            first = false;
        }
        Ok(())
    }
}

fn expect_params(
    id: IdentityId,
    point: &ParamPoint,
    need_n: bool,
    need_k: bool,
    need_p: bool,
) -> Result<(), Error> {
    let ok = point.n.is_some() == need_n
        && point.k.is_some() == need_k
        && point.p.is_some() == need_p;
    if ok {
        Ok(())
    } else {
        let mut names = Vec::new();
        if need_n {
            names.push("n");
        }
        if need_k {
            names.push("k");
        }
        if need_p {
            names.push("p");
        }
        Err(Error::Domain(format!(
            "{id} takes exactly the parameters {{{}}}, got {{{point}}}",
            names.join(", ")
        )))
    }
}

/// Right-hand side of a closed-form identity at the given parameter point.
///
/// The point must carry exactly the identity's free variables, and the
/// identity's side condition must hold. `Transform` has no closed form and
/// is rejected.
pub fn closed_form_rhs<T: ExactScalar>(id: IdentityId, point: &ParamPoint) -> Result<T, Error> {
    match id {
        IdentityId::Eq1 => {
            expect_params(id, point, true, false, false)?;
            Ok(factorial::<T>(point.n.unwrap()))
        }
        IdentityId::Eq2 => {
            expect_params(id, point, false, false, true)?;
            let p = point.p.unwrap();
            let pf = factorial::<T>(p);
            Ok(factorial::<T>(2 * p) / (pf.clone() * pf))
        }
        IdentityId::Eq3 => {
            expect_params(id, point, true, true, true)?;
            let (n, k, p) = (point.n.unwrap(), point.k.unwrap(), point.p.unwrap());
            if n <= p * k {
                return Err(Error::SideCondition {
                    identity: "eq3",
                    condition: "n > p*k",
                });
            }
            Ok(T::zero())
        }
        IdentityId::Eq4 => {
            expect_params(id, point, false, true, true)?;
            let (k, p) = (point.k.unwrap(), point.p.unwrap());
            Ok(factorial::<T>(k * p) / int_pow(factorial::<T>(p), k))
        }
        IdentityId::Eq5 => {
            expect_params(id, point, true, true, false)?;
            let (n, k) = (point.n.unwrap(), point.k.unwrap());
            if n > k {
                return Err(Error::SideCondition {
                    identity: "eq5",
                    condition: "n <= k",
                });
            }
            // Stream the compositions; nothing is materialized.
            let mut acc = T::zero();
            for parts in compositions(k, n) {
                acc += multinomial::<T>(k, parts.parts())?;
            }
            Ok(acc)
        }
        IdentityId::Transform => Err(Error::Domain(
            "transform has no closed-form right-hand side".into(),
        )),
    }
}
