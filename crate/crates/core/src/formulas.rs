//! Exact closed forms for seaweed counts.
//!
//! `C(n, k)` counts ordered composition pairs of `n` whose seaweed has index
//! `k`. The first three diagonals `k = n-1, n-2, n-3` have closed forms; the
//! third also has a long case-by-case sum that is evaluated literally here.
//! `C21` and `C22` count the two-part-over-one-part and two-part-over-two-part
//! types through the gcd index formulas.
//!
//! Count-valued functions are generic over [`CountInt`]: `u64`/`u128` report
//! [`Error::Overflow`], [`ExactCount`](crate::ExactCount) never overflows.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::{add, lift, mul, pow2, scale, sub, CountInt};

/// `C(n, n-1) = 2^(n-1)`.
pub fn c_diag1<T: CountInt>(n: u32) -> Result<T> {
    if n < 1 {
        return Err(Error::invalid("c_diag1 needs n >= 1"));
    }
    pow2(n - 1, "C(n,n-1)")
}

/// `C(n, n-2) = n 2^(n-2)`.
pub fn c_diag2<T: CountInt>(n: u32) -> Result<T> {
    if n < 2 {
        return Err(Error::invalid(format!("c_diag2 needs n >= 2, got {n}")));
    }
    scale(u64::from(n), &pow2(n - 2, "C(n,n-2)")?, "C(n,n-2)")
}

/// `C(n, n-3)`: `(7n-15) 2^(n-3)` for `n <= 5`, `(2n^2+11n-25) 2^(n-5)` from `n = 5`.
pub fn c_diag3<T: CountInt>(n: u32) -> Result<T> {
    const WHAT: &str = "C(n,n-3)";
    if n < 3 {
        return Err(Error::invalid(format!("c_diag3 needs n >= 3, got {n}")));
    }
    let n64 = u64::from(n);
    if n <= 5 {
        scale(7 * n64 - 15, &pow2(n - 3, WHAT)?, WHAT)
    } else {
        let quad = add(
            &mul(&lift::<T>(2 * n64, WHAT)?, &lift(n64, WHAT)?, WHAT)?,
            &lift(11 * n64, WHAT)?,
            WHAT,
        )?;
        let quad = sub(&quad, &lift(25, WHAT)?, WHAT)?;
        mul(&quad, &pow2(n - 5, WHAT)?, WHAT)
    }
}

/// `sum_{i=lo}^{hi} f(i)`; empty when `hi < lo`.
fn sum_range<T: CountInt>(lo: i64, hi: i64, mut f: impl FnMut(i64) -> Result<T>) -> Result<T> {
    let mut acc = T::zero();
    for i in lo..=hi {
        acc = add(&acc, &f(i)?, "sum")?;
    }
    Ok(acc)
}

/// `2^e` for a non-negative signed exponent; only reached inside non-empty sums.
fn p2<T: CountInt>(e: i64) -> Result<T> {
    let e = u32::try_from(e).map_err(|_| Error::invalid(format!("negative power 2^{e}")))?;
    pow2(e, "power of two")
}

fn times<T: CountInt>(k: i64, v: T) -> Result<T> {
    let k = u64::try_from(k).map_err(|_| Error::invalid(format!("negative factor {k}")))?;
    scale(k, &v, "product")
}

/// The long sum for `C(n, n-3)`, term for term, with empty sums as zero.
///
/// Agrees with [`c_diag3`] from `n = 4`. At `n = 3` the constant terms count
/// shapes that need at least four vertices and the sum evaluates to 11
/// rather than 6.
pub fn lemma32_sum<T: CountInt>(n: u32) -> Result<T> {
    if n < 3 {
        return Err(Error::invalid(format!("lemma32_sum needs n >= 3, got {n}")));
    }
    let n = i64::from(n);
    let terms: [T; 14] = [
        times(
            4,
            sum_range(4, n - 2, |m| sum_range(1, n - m - 1, |_| p2(n - m - 2)))?,
        )?,
        times(8, sum_range(4, n - 1, |m| p2(n - m - 1))?)?,
        times(
            4,
            sum_range(4, n - 3, |m| {
                sum_range(1, n - m - 2, |i| {
                    sum_range(1, n - m - i - 1, |_| times(m - 3, p2(n - m - 3)?))
                })
            })?,
        )?,
        times(
            12,
            sum_range(4, n - 2, |m| {
                sum_range(1, n - m - 1, |_| times(m - 3, p2(n - m - 2)?))
            })?,
        )?,
        times(12, sum_range(4, n - 1, |m| times(m - 3, p2(n - m - 1)?))?)?,
        times(4 * (n - 3), T::one())?,
        times(2, sum_range(1, n - 5, |_| p2(n - 6))?)?,
        p2(n - 3)?,
        times(
            2,
            sum_range(3, n - 2, |m| {
                sum_range(1, n - m - 1, |_| times(m - 2, p2(n - m - 2)?))
            })?,
        )?,
        times(4, sum_range(3, n - 1, |m| times(m - 2, p2(n - m - 1)?))?)?,
        times(2 * (n - 2), T::one())?,
        times(4, sum_range(1, n - 4, |_| p2(n - 5))?)?,
        p2(n - 1)?,
        lift(4, "term")?,
    ];
    terms
        .iter()
        .try_fold(T::zero(), |acc, t| add(&acc, t, "lemma32_sum"))
}

/// Shapes of index-`(n-3)` meanders, one per case of the long sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Codim3Case {
    /// One 4-vertex cycle.
    FourCycle,
    /// Two 2-vertex paths inside one block.
    TwoPathsOneBlock,
    /// Two 2-vertex paths, no block meeting both.
    TwoPathsSeparate,
    /// Two 2-vertex paths, some block meets both but holds at most three of their vertices.
    TwoPathsStraddling,
    /// One 3-vertex path whose endpoints share no block.
    ThreePathOpen,
    /// One 3-vertex path whose endpoints share a block.
    ThreePathClosed,
}

impl Codim3Case {
    pub const ALL: [Codim3Case; 6] = [
        Codim3Case::FourCycle,
        Codim3Case::TwoPathsOneBlock,
        Codim3Case::TwoPathsSeparate,
        Codim3Case::TwoPathsStraddling,
        Codim3Case::ThreePathOpen,
        Codim3Case::ThreePathClosed,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseTerm<T> {
    pub case: Codim3Case,
    pub label: &'static str,
    pub value: T,
}

/// The fifteen displayed contributions behind [`lemma32_sum`], in order.
pub fn case_terms<T: CountInt>(n: u32) -> Result<Vec<CaseTerm<T>>> {
    use Codim3Case::*;
    if n < 3 {
        return Err(Error::invalid(format!("case_terms needs n >= 3, got {n}")));
    }
    let n = i64::from(n);
    let bordered = |lo: i64| -> Result<T> {
        times(
            2,
            sum_range(lo, n - 2, |m| sum_range(1, n - m - 1, |_| p2(n - m - 2)))?,
        )
    };
    let open_ends = || -> Result<T> {
        add(
            &lift(2, "term")?,
            &times(4, sum_range(4, n - 1, |m| p2(n - m - 1))?)?,
            "term",
        )
    };
    let mut out = Vec::with_capacity(15);
    let mut push = |case, label, value: Result<T>| -> Result<()> {
        out.push(CaseTerm {
            case,
            label,
            value: value?,
        });
        Ok(())
    };
    push(FourCycle, "both sides non-empty", bordered(4))?;
    push(FourCycle, "a side empty", open_ends())?;
    push(TwoPathsOneBlock, "both sides non-empty", bordered(4))?;
    push(TwoPathsOneBlock, "a side empty", open_ends())?;
    push(
        TwoPathsSeparate,
        "no gap empty",
        times(
            4,
            sum_range(4, n - 3, |m| {
                sum_range(1, n - m - 2, |i| {
                    sum_range(1, n - m - i - 1, |_| times(m - 3, p2(n - m - 3)?))
                })
            })?,
        ),
    )?;
    push(
        TwoPathsSeparate,
        "one gap empty",
        times(
            12,
            sum_range(4, n - 2, |m| {
                sum_range(1, n - m - 1, |_| times(m - 3, p2(n - m - 2)?))
            })?,
        ),
    )?;
    push(
        TwoPathsSeparate,
        "two gaps empty",
        times(12, sum_range(4, n - 1, |m| times(m - 3, p2(n - m - 1)?))?),
    )?;
    push(
        TwoPathsSeparate,
        "all gaps empty",
        times(4 * (n - 3), T::one()),
    )?;
    push(
        TwoPathsStraddling,
        "both sides non-empty",
        times(2, sum_range(1, n - 5, |_| p2(n - 6))?),
    )?;
    push(TwoPathsStraddling, "a side empty", p2(n - 3))?;
    push(
        ThreePathOpen,
        "both sides non-empty",
        times(
            2,
            sum_range(3, n - 2, |m| {
                sum_range(1, n - m - 1, |_| times(m - 2, p2(n - m - 2)?))
            })?,
        ),
    )?;
    push(
        ThreePathOpen,
        "one side empty",
        times(4, sum_range(3, n - 1, |m| times(m - 2, p2(n - m - 1)?))?),
    )?;
    push(
        ThreePathOpen,
        "both sides empty",
        times(2 * (n - 2), T::one()),
    )?;
    push(
        ThreePathClosed,
        "both sides non-empty",
        times(4, sum_range(1, n - 4, |_| p2(n - 5))?),
    )?;
    push(ThreePathClosed, "a side empty", p2(n - 1))?;
    Ok(out)
}

/// Per-case totals of [`case_terms`], in [`Codim3Case::ALL`] order.
pub fn case_totals<T: CountInt>(n: u32) -> Result<Vec<(Codim3Case, T)>> {
    let terms = case_terms::<T>(n)?;
    Codim3Case::ALL
        .iter()
        .map(|&case| {
            let total = terms
                .iter()
                .filter(|t| t.case == case)
                .try_fold(T::zero(), |acc, t| add(&acc, &t.value, "case total"))?;
            Ok((case, total))
        })
        .collect()
}

/// `50 C(n,n-1) + 8 C(n+1,n-1) + 2 C(n+4,n+1)`, from the closed forms.
pub fn recursion_lhs<T: CountInt>(n: u32) -> Result<T> {
    if n < 1 {
        return Err(Error::invalid("recursion needs n >= 1"));
    }
    let a = scale(50, &c_diag1::<T>(n)?, "recursion")?;
    let b = scale(8, &c_diag2::<T>(n + 1)?, "recursion")?;
    let c = scale(2, &c_diag3::<T>(n + 4)?, "recursion")?;
    add(&add(&a, &b, "recursion")?, &c, "recursion")
}

/// Whether the left side equals `C(n+5, n+2)`.
pub fn recursion_check<T: CountInt>(n: u32) -> Result<bool> {
    Ok(recursion_lhs::<T>(n)? == c_diag3::<T>(n + 5)?)
}

/// Both sides of an identity at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRow {
    pub n: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityRow {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn big_pow2(e: u32) -> BigInt {
    BigInt::from(1) << e
}

/// `sum_{k=1}^{n} (n-k) 2^k` against `2^(n+1) - 2n - 2`.
pub fn identity_k2k(n: u32) -> IdentityRow {
    let lhs = (1..=n).map(|k| BigInt::from(n - k) * big_pow2(k)).sum();
    let rhs = big_pow2(n + 1) - BigInt::from(2 * u64::from(n) + 2);
    IdentityRow { n, lhs, rhs }
}

/// `sum_{k=1}^{n} k(n-k) 2^(n-k-1)`; the `k = n` term is zero.
fn k2_2k_lhs(n: u32) -> BigInt {
    (1..n)
        .map(|k| BigInt::from(k) * BigInt::from(n - k) * big_pow2(n - k - 1))
        .sum()
}

/// The printed right-hand side `4 - 3*2^n + n*2^n`.
pub fn identity_k2_2k_printed(n: u32) -> IdentityRow {
    let rhs = BigInt::from(4) - 3 * big_pow2(n) + BigInt::from(n) * big_pow2(n);
    IdentityRow {
        n,
        lhs: k2_2k_lhs(n),
        rhs,
    }
}

/// The corrected right-hand side `(n-3) 2^n + n + 3`.
pub fn identity_k2_2k_fitted(n: u32) -> IdentityRow {
    let rhs = (BigInt::from(n) - 3) * big_pow2(n) + BigInt::from(n) + 3;
    IdentityRow {
        n,
        lhs: k2_2k_lhs(n),
        rhs,
    }
}

/// Whether the printed form of the `k(n-k)2^(n-k-1)` identity holds at `n`.
pub fn identity_k2_2k(n: u32) -> bool {
    identity_k2_2k_printed(n).holds()
}

/// Audit of both identities over `1..=max_n`.
#[derive(Debug, Clone)]
pub struct IdentityAudit {
    pub k2k: Vec<IdentityRow>,
    pub k2_2k_printed: Vec<IdentityRow>,
    pub k2_2k_fitted: Vec<IdentityRow>,
}

impl IdentityAudit {
    pub fn run(max_n: u32) -> Self {
        Self {
            k2k: (1..=max_n).map(identity_k2k).collect(),
            k2_2k_printed: (1..=max_n).map(identity_k2_2k_printed).collect(),
            k2_2k_fitted: (1..=max_n).map(identity_k2_2k_fitted).collect(),
        }
    }

    pub fn first_printed_failure(&self) -> Option<u32> {
        self.k2_2k_printed.iter().find(|r| !r.holds()).map(|r| r.n)
    }

    /// One line per `n`: both sides of each identity and whether they agree.
    pub fn report(&self) -> String {
        let mut out = String::from(
            "n,sum_(n-k)2^k,2^(n+1)-2n-2,ok,sum_k(n-k)2^(n-k-1),4-3*2^n+n*2^n,ok,(n-3)2^n+n+3,ok\n",
        );
        for ((a, p), f) in self
            .k2k
            .iter()
            .zip(&self.k2_2k_printed)
            .zip(&self.k2_2k_fitted)
        {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                a.n,
                a.lhs,
                a.rhs,
                a.holds(),
                p.lhs,
                p.rhs,
                p.holds(),
                f.rhs,
                f.holds()
            ));
        }
        out
    }
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(t: u64) -> u64 {
    assert!(t >= 1, "totient is defined for t >= 1");
    let mut rest = t;
    let mut phi = t;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// Index of `a|b/(a+b)`: `gcd(a, b) - 1`.
pub fn gcd_index_2parts(a: u64, b: u64) -> u64 {
    assert!(a >= 1 && b >= 1, "parts must be positive");
    a.gcd(&b) - 1
}

/// Index of `a|b|c/(a+b+c)`, and of `a|b/c|d` with `a+b = c+d`: `gcd(a+b, b+c) - 1`.
pub fn gcd_index_3parts(a: u64, b: u64, c: u64) -> u64 {
    assert!(a >= 1 && b >= 1 && c >= 1, "parts must be positive");
    (a + b).gcd(&(b + c)) - 1
}

/// `(k+1) | n` with quotient `t`.
fn quotient(n: u32, k: u32) -> Option<u64> {
    let d = u64::from(k) + 1;
    let n = u64::from(n);
    (n % d == 0).then_some(n / d)
}

/// Number of `a|b/n` seaweeds of index `k`.
///
/// With `t = n/(k+1)` this counts `1 <= s < t` coprime to `t`: `phi(t)` for
/// `t >= 2`, and 0 for `t = 1` (`k = n-1`, where `a = n` is not a part).
/// Zero when `k+1` does not divide `n`.
pub fn c21<T: CountInt>(n: u32, k: u32) -> Result<T> {
    if n < 2 {
        return Err(Error::invalid(format!("c21 needs n >= 2, got {n}")));
    }
    match quotient(n, k) {
        Some(1) | None => Ok(T::zero()),
        Some(t) => lift(euler_phi(t), "C21"),
    }
}

/// Number of `a|b/c|d` seaweeds of index `k`.
///
/// With `t = n/(k+1)`: `n - 1` when `t = 1`, else `(n-2) phi(t)`; zero when `k+1` does not divide `n`.
pub fn c22<T: CountInt>(n: u32, k: u32) -> Result<T> {
    if n < 2 {
        return Err(Error::invalid(format!("c22 needs n >= 2, got {n}")));
    }
    match quotient(n, k) {
        Some(1) => lift(u64::from(n) - 1, "C22"),
        Some(t) => lift((u64::from(n) - 2) * euler_phi(t), "C22"),
        None => Ok(T::zero()),
    }
}
