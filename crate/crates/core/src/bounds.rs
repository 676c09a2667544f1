//! Exact evaluation of the closed-form bounds on the four extremal
//! quantities, and checks of the inequalities comparing them.
//!
//! Everything algebraic is an exact big rational. The one irrational
//! constant, `1 + sqrt(2)`, enters through a certified rational enclosure
//! of `sqrt(2)`, so every comparison below is decided exactly: a check
//! involving an enclosure passes only if it holds at the unfavorable end.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `n` accepted by the bound evaluators.
pub const MAX_BOUNDS_N: usize = 5000;

/// Decimal digits of the rational enclosure of `sqrt(2)`.
const SQRT2_DIGITS: u32 = 60;

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k as u64).fold(BigUint::one(), |acc, i| acc * (n as u64 - i) / (i + 1))
}

fn int(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn small(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `base^e` for a possibly negative exponent.
fn rpow(base: u64, e: i64) -> BigRational {
    let p = int(BigUint::from(base).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// A closed interval `[lo, hi]` of rationals known to contain a real value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Enclosure {
    fn exact(x: BigRational) -> Self {
        Enclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Product of two enclosures of positive quantities.
    fn mul_pos(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo * &other.lo,
            hi: &self.hi * &other.hi,
        }
    }

    /// Quotient of two enclosures of positive quantities.
    fn div_pos(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo / &other.hi,
            hi: &self.hi / &other.lo,
        }
    }

    fn pow_pos(&self, e: u32) -> Enclosure {
        Enclosure {
            lo: Pow::pow(&self.lo, e),
            hi: Pow::pow(&self.hi, e),
        }
    }
}

/// Rational enclosure of `sqrt(2)` from the integer square root of
/// `2 * 10^(2d)`.
pub fn sqrt2() -> Enclosure {
    let scale = BigUint::from(10u32).pow(SQRT2_DIGITS);
    let s = (BigUint::from(2u32) * &scale * &scale).sqrt();
    let den = BigInt::from(scale);
    Enclosure {
        lo: BigRational::new(BigInt::from(s.clone()), den.clone()),
        hi: BigRational::new(BigInt::from(s + 1u32), den),
    }
}

fn one_plus_sqrt2() -> Enclosure {
    let s = sqrt2();
    Enclosure {
        lo: s.lo + BigRational::one(),
        hi: s.hi + BigRational::one(),
    }
}

/// Every closed-form bound at one `n`. Fields that are undefined below a
/// threshold are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsRecord {
    pub n: usize,
    /// `(n-2)! / (floor(n/2)! (1+sqrt 2)^n)`, the earlier lower bound on
    /// the crossing-paths maximum. Irrational, hence an enclosure.
    pub q_lower_kmm: Enclosure,
    /// `n! / (floor(n/2)! 2^floor(n/2))`.
    pub q_upper_kmm: BigRational,
    /// `(floor(n/2)-1)! / 2^floor(n/4)`, the bipartite construction bound.
    pub q_lower_new: BigRational,
    /// `n! / (n^13 5^(n-10))`; below 1 for small `n`.
    pub r_lower: BigRational,
    /// `n! / 2^floor(n/2)`, the number of couple-order classes.
    pub r_upper: BigRational,
    /// `(n-2)!`, the size of the fixed-edge cycle family.
    pub mcy_lower: BigRational,
    /// `(n-1) (n-3)!` for even `n`.
    pub mcy_upper_even: Option<BigRational>,
    /// `4 C(n-1,5) n^8 5^(n-8)`, defined for `n >= 6`.
    pub incompat_total_bound: Option<BigRational>,
}

impl BoundsRecord {
    /// Upper bound on the shared-edge cycle maximum: `(n-2)!` for odd `n`
    /// (matching the lower bound), `(n-1)(n-3)!` for even `n`.
    pub fn mcy_upper(&self) -> BigRational {
        self.mcy_upper_even
            .clone()
            .unwrap_or_else(|| self.mcy_lower.clone())
    }

    /// The lower bound on `R(n)` is asymptotic; below 1 it says nothing.
    pub fn r_lower_vacuous(&self) -> bool {
        self.r_lower <= BigRational::one()
    }

    pub const CSV_HEADER: &'static str = "n,q_lower_kmm_lo,q_lower_kmm_hi,q_upper_kmm,q_lower_new,\
r_lower,r_upper,mcy_lower,mcy_upper_even,incompat_total_bound";

    pub fn csv_row(&self) -> String {
        let opt = |x: &Option<BigRational>| x.as_ref().map(decimal).unwrap_or_default();
        [
            self.n.to_string(),
            decimal(&self.q_lower_kmm.lo),
            decimal(&self.q_lower_kmm.hi),
            decimal(&self.q_upper_kmm),
            decimal(&self.q_lower_new),
            decimal(&self.r_lower),
            decimal(&self.r_upper),
            decimal(&self.mcy_lower),
            opt(&self.mcy_upper_even),
            opt(&self.incompat_total_bound),
        ]
        .join(",")
    }
}

impl fmt::Display for BoundsRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: &Option<BigRational>| x.as_ref().map(decimal).unwrap_or("undefined".into());
        writeln!(f, "n = {}", self.n)?;
        writeln!(
            f,
            "  q_lower_kmm          in [{}, {}]",
            decimal(&self.q_lower_kmm.lo),
            decimal(&self.q_lower_kmm.hi)
        )?;
        writeln!(f, "  q_upper_kmm          = {}", decimal(&self.q_upper_kmm))?;
        writeln!(f, "  q_lower_new          = {}", decimal(&self.q_lower_new))?;
        writeln!(
            f,
            "  r_lower              = {}{}",
            decimal(&self.r_lower),
            if self.r_lower_vacuous() {
                " (vacuous)"
            } else {
                ""
            }
        )?;
        writeln!(f, "  r_upper              = {}", decimal(&self.r_upper))?;
        writeln!(f, "  mcy_lower            = {}", decimal(&self.mcy_lower))?;
        writeln!(f, "  mcy_upper_even       = {}", opt(&self.mcy_upper_even))?;
        write!(
            f,
            "  incompat_total_bound = {}",
            opt(&self.incompat_total_bound)
        )
    }
}

fn check_bounds_n(n: usize, min: usize, field: &'static str) -> Result<()> {
    if n < min {
        return Err(Error::Domain {
            field,
            reason: format!("defined for n >= {min}, got n = {n}"),
        });
    }
    if n > MAX_BOUNDS_N {
        return Err(Error::Domain {
            field,
            reason: format!("n = {n} above the arithmetic cap {MAX_BOUNDS_N}"),
        });
    }
    Ok(())
}

/// `4 C(n-1,5) n^8 5^(n-8)`: the total count of permutations that are not
/// two-separated from a fixed one, summed over at most three runs.
pub fn incompat_total_bound(n: usize) -> Result<BigRational> {
    check_bounds_n(n, 6, "incompat_total_bound")?;
    Ok(
        small(4)
            * int(binomial(n - 1, 5))
            * int(BigUint::from(n).pow(8u32))
            * rpow(5, n as i64 - 8),
    )
}

/// `n^13 5^(n-10)`, the per-step elimination count of the greedy argument.
pub fn greedy_step_bound(n: usize) -> BigRational {
    int(BigUint::from(n).pow(13u32)) * rpow(5, n as i64 - 10)
}

pub fn eval_bounds(n: usize) -> Result<BoundsRecord> {
    check_bounds_n(n, 3, "eval_bounds")?;
    let half = n / 2;
    let q_lower_kmm = Enclosure::exact(int(factorial(n - 2)) / int(factorial(half)))
        .div_pos(&one_plus_sqrt2().pow_pos(n as u32));
    let q_upper_kmm = int(factorial(n)) / (int(factorial(half)) * rpow(2, half as i64));
    let q_lower_new = int(factorial(half - 1)) / rpow(2, (n / 4) as i64);
    let r_lower = int(factorial(n)) / greedy_step_bound(n);
    let r_upper = int(factorial(n)) / rpow(2, half as i64);
    let mcy_lower = int(factorial(n - 2));
    let mcy_upper_even = n
        .is_multiple_of(2)
        .then(|| small(n as u64 - 1) * int(factorial(n - 3)));
    let incompat_total_bound = (n >= 6).then(|| incompat_total_bound(n)).transpose()?;
    Ok(BoundsRecord {
        n,
        q_lower_kmm,
        q_upper_kmm,
        q_lower_new,
        r_lower,
        r_upper,
        mcy_lower,
        mcy_upper_even,
        incompat_total_bound,
    })
}

/// `C(n-1, r+2) n^(r+5) 5^(n-(r+5))`: permutations not two-separated from
/// a fixed one that have exactly `r` runs of big jumps.
pub fn incompat_bound(n: usize, r: usize) -> Result<BigUint> {
    if n < r + 5 {
        return Err(Error::Domain {
            field: "incompat_bound",
            reason: format!("needs n >= r + 5, got n = {n}, r = {r}"),
        });
    }
    check_bounds_n(n, 5, "incompat_bound")?;
    Ok(binomial(n - 1, r + 2)
        * BigUint::from(n).pow((r + 5) as u32)
        * BigUint::from(5u32).pow((n - r - 5) as u32))
}

/// `(2 / (1 + sqrt 2))^n * ceil(n/2)!`, the middle term of the chain
/// comparing the two lower bounds on the crossing-paths maximum.
pub fn chain_middle(n: usize) -> Enclosure {
    let ratio = Enclosure::exact(small(2)).div_pos(&one_plus_sqrt2());
    ratio
        .pow_pos(n as u32)
        .mul_pos(&Enclosure::exact(int(factorial(n.div_ceil(2)))))
}

/// One inequality evaluated at one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub n: usize,
    pub name: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    /// Informational checks are reported but never count as failures.
    pub decisive: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InequalityReport {
    pub checks: Vec<Check>,
}

impl InequalityReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.decisive && !c.holds)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }
}

fn enclosure_str(e: &Enclosure) -> String {
    format!("[{}, {}]", decimal(&e.lo), decimal(&e.hi))
}

/// Verifies, for every `n` in the range:
///
/// * the earlier crossing-paths lower bound is strictly below the
///   middle term `(2/(1+sqrt 2))^n ceil(n/2)!`, via
///   `(n-2)!/floor(n/2)! <= n!/floor(n/2)! = C(n,floor(n/2)) ceil(n/2)! < 2^n ceil(n/2)!`;
/// * the construction bound strictly exceeds the earlier lower bound;
/// * `4 C(n-1,5) n^8 5^(n-8) <= n^13 5^(n-10)` (for `n >= 6`);
/// * `r_lower <= r_upper` and `q_lower_new <= q_upper_kmm`.
///
/// The link "middle term <= construction bound" only holds for large `n`
/// and is recorded as informational.
pub fn check_inequalities(range: std::ops::RangeInclusive<usize>) -> Result<InequalityReport> {
    let mut report = InequalityReport::default();
    for n in range {
        let b = eval_bounds(n)?;
        let half = n / 2;
        let mut push = |name, lhs: String, rhs: String, holds, decisive| {
            report.checks.push(Check {
                n,
                name,
                lhs,
                rhs,
                holds,
                decisive,
            })
        };

        let pre = int(factorial(n - 2)) / int(factorial(half));
        let full = int(factorial(n)) / int(factorial(half));
        let central = int(binomial(n, half) * factorial(n.div_ceil(2)));
        let pow2 = rpow(2, n as i64) * int(factorial(n.div_ceil(2)));
        push(
            "aux: (n-2)!/floor(n/2)! <= n!/floor(n/2)!",
            decimal(&pre),
            decimal(&full),
            pre <= full,
            true,
        );
        push(
            "aux: n!/floor(n/2)! = C(n,floor(n/2)) ceil(n/2)!",
            decimal(&full),
            decimal(&central),
            full == central,
            true,
        );
        push(
            "aux: C(n,floor(n/2)) ceil(n/2)! < 2^n ceil(n/2)!",
            decimal(&central),
            decimal(&pow2),
            central < pow2,
            true,
        );

        let mid = chain_middle(n);
        push(
            "chain: q_lower_kmm < (2/(1+sqrt2))^n ceil(n/2)!",
            enclosure_str(&b.q_lower_kmm),
            enclosure_str(&mid),
            b.q_lower_kmm.hi < mid.lo,
            true,
        );
        push(
            "chain (asymptotic): (2/(1+sqrt2))^n ceil(n/2)! <= q_lower_new",
            enclosure_str(&mid),
            decimal(&b.q_lower_new),
            mid.hi <= b.q_lower_new,
            false,
        );
        push(
            "chain: q_lower_kmm < q_lower_new",
            enclosure_str(&b.q_lower_kmm),
            decimal(&b.q_lower_new),
            b.q_lower_kmm.hi < b.q_lower_new,
            true,
        );
        if n >= 6 {
            let total = incompat_total_bound(n)?;
            let step = greedy_step_bound(n);
            push(
                "4 C(n-1,5) n^8 5^(n-8) <= n^13 5^(n-10)",
                decimal(&total),
                decimal(&step),
                total <= step,
                true,
            );
        }
        push(
            "r_lower <= r_upper",
            decimal(&b.r_lower),
            decimal(&b.r_upper),
            b.r_lower <= b.r_upper,
            true,
        );
        push(
            "q_lower_new <= q_upper_kmm",
            decimal(&b.q_lower_new),
            decimal(&b.q_upper_kmm),
            b.q_lower_new <= b.q_upper_kmm,
            true,
        );
    }
    Ok(report)
}

/// `2 / (1 + sqrt 2) < 2^(-1/4)`, decided exactly as
/// `(1 + sqrt 2)^4 > 32` at the lower end of the enclosure.
pub fn ratio_below_fourth_root() -> bool {
    one_plus_sqrt2().pow_pos(4).lo > small(32)
}

/// Human-readable value: integers exactly, everything else in scientific
/// notation with 10 significant digits (truncated).
pub fn decimal(x: &BigRational) -> String {
    if x.is_integer() {
        return x.to_integer().to_string();
    }
    if x.is_zero() {
        return "0".into();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let a = x.abs();
    const DIGITS: i64 = 10;
    let (num, den) = (a.numer().clone(), a.denom().clone());
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    loop {
        let shift = DIGITS - 1 - e;
        let m = if shift >= 0 {
            (&num * BigInt::from(10u32).pow(shift as u32)).div_floor(&den)
        } else {
            num.div_floor(&(&den * BigInt::from(10u32).pow((-shift) as u32)))
        };
        let lo = BigInt::from(10u32).pow((DIGITS - 1) as u32);
        if m < lo {
            e -= 1;
        } else if m >= &lo * 10 {
            e += 1;
        } else {
            let s = m.to_string();
            let mantissa = format!("{}.{}", &s[..1], s[1..].trim_end_matches('0'));
            let mantissa = mantissa.trim_end_matches('.');
            return format!("{sign}{mantissa}e{e}");
        }
    }
}

/// Lossy conversion for display and plotting only.
pub fn approx(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn sqrt2_enclosure_is_certified() {
        let s = sqrt2();
        assert!(&s.lo * &s.lo <= small(2));
        assert!(&s.hi * &s.hi >= small(2));
        assert!(s.width() < q(1, 1_000_000_000));
    }

    #[test]
    fn eval_examples() {
        let b = eval_bounds(6).unwrap();
        assert_eq!(b.q_upper_kmm, small(15));
        assert_eq!(b.q_lower_new, small(1));
        assert_eq!(b.r_upper, small(90));
        assert_eq!(b.mcy_upper_even, Some(small(30)));
        assert_eq!(eval_bounds(5).unwrap().mcy_lower, small(6));
        assert_eq!(eval_bounds(5).unwrap().mcy_upper(), small(6));
        let b3 = eval_bounds(3).unwrap();
        assert_eq!(b3.q_lower_new, small(1));
        assert_eq!(b3.incompat_total_bound, None);
        assert!(matches!(eval_bounds(2), Err(Error::Domain { .. })));
    }

    #[test]
    fn r_lower_is_exact_and_flagged_vacuous() {
        // 10! / (10^13 * 5^0)
        let b = eval_bounds(10).unwrap();
        assert_eq!(b.r_lower, q(3_628_800, 10_000_000_000_000));
        assert!(b.r_lower_vacuous());
    }

    #[test]
    fn incompat_bound_examples() {
        assert_eq!(
            incompat_bound(10, 0).unwrap(),
            BigUint::from(11_250_000_000u64)
        );
        // independent evaluation: 36 * 10^5 * 5^5
        assert_eq!(
            BigUint::from(36u32) * BigUint::from(10u32).pow(5u32) * BigUint::from(5u32).pow(5u32),
            BigUint::from(11_250_000_000u64)
        );
        assert_eq!(
            incompat_bound(8, 3).unwrap(),
            BigUint::from(21u64 * 16_777_216)
        );
        assert!(matches!(incompat_bound(7, 3), Err(Error::Domain { .. })));
    }

    #[test]
    fn kmm_enclosure_brackets_float_value() {
        for n in [3usize, 6, 11, 20] {
            let b = eval_bounds(n).unwrap();
            let f = (1..=n - 2).map(|k| k as f64).product::<f64>()
                / ((1..=n / 2).map(|k| k as f64).product::<f64>()
                    * (1.0 + 2f64.sqrt()).powi(n as i32));
            assert!(approx(&b.q_lower_kmm.lo) <= f * (1.0 + 1e-12));
            assert!(approx(&b.q_lower_kmm.hi) >= f * (1.0 - 1e-12));
        }
    }

    #[test]
    fn ratio_constant() {
        assert!(ratio_below_fourth_root());
    }

    #[test]
    fn middle_link_is_only_asymptotic() {
        // At n = 6 the middle term is about 1.94 while the construction
        // bound is 1.
        let r = check_inequalities(6..=6).unwrap();
        let link = r
            .checks
            .iter()
            .find(|c| c.name.starts_with("chain (asymptotic)"))
            .unwrap();
        assert!(!link.holds);
        assert!(r.passed());
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(decimal(&small(15)), "15");
        assert_eq!(decimal(&q(1, 2)), "5e-1");
        assert_eq!(decimal(&q(-3, 2)), "-1.5e0");
        assert_eq!(decimal(&q(1, 3)), "3.333333333e-1");
        assert_eq!(decimal(&q(1_000_001, 1000)), "1.000001e3");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 2), BigUint::from(36u32));
        assert_eq!(binomial(7, 5), BigUint::from(21u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
    }
}
