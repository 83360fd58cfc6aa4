//! Binomial coefficients, the central products `C(2k,k)^2 C(4k,2k)` and
//! `C(2k,k) C(4k,2k)`, and the sums built from them.
//!
//! Modular sums go through [`ValuedResidue`] so that terms divisible by `p`
//! (every `k > p/4`) are reduced exactly mod `p^2`. The exact big-integer
//! routines in this module back the integer identity checks and serve as an
//! independent oracle for small primes.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{FactorialTable, PrimeCtx, ValuedResidue};
use crate::error::{Error, Result};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binom_exact(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(2k,k)^2 C(4k,2k) = (4k)! / k!^4` as a valued residue.
pub fn central_term(k: u64, ctx: &PrimeCtx) -> Result<ValuedResidue> {
    if k >= ctx.p() {
        return Err(Error::IndexOutOfRange { k, p: ctx.p() });
    }
    let facts = FactorialTable::build(4 * k, ctx);
    Ok(quartic_ratio(&facts, k, ctx))
}

fn quartic_ratio(facts: &FactorialTable, k: u64, ctx: &PrimeCtx) -> ValuedResidue {
    facts
        .get(4 * k)
        .checked_div(facts.get(k).pow(4, ctx), ctx)
        .expect("multinomial coefficient is integral")
}

/// `C(2k,k) C(4k,2k) = (4k)! / ((2k)! k!^2)` as a valued residue.
pub fn central_single_term(k: u64, ctx: &PrimeCtx) -> Result<ValuedResidue> {
    if k >= ctx.p() {
        return Err(Error::IndexOutOfRange { k, p: ctx.p() });
    }
    let facts = FactorialTable::build(4 * k, ctx);
    Ok(single_ratio(&facts, k, ctx))
}

fn single_ratio(facts: &FactorialTable, k: u64, ctx: &PrimeCtx) -> ValuedResidue {
    let den = facts.get(2 * k).mul(facts.get(k).pow(2, ctx), ctx);
    facts
        .get(4 * k)
        .checked_div(den, ctx)
        .expect("multinomial coefficient is integral")
}

/// The parameter `m` of `S(m)`, stored as `num / den` with both coprime to `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralSumParams {
    num: i128,
    den: i128,
    inv_m: u128,
    ctx: PrimeCtx,
}

impl CentralSumParams {
    pub fn new(m: i128, ctx: &PrimeCtx) -> Result<Self> {
        Self::from_ratio(m, 1, ctx)
    }

    /// `m = num / den`; requires `p` to divide neither.
    pub fn from_ratio(num: i128, den: i128, ctx: &PrimeCtx) -> Result<Self> {
        let inv_num = ctx
            .inv_p2(num)
            .map_err(|_| Error::PrimeDividesParameter { p: ctx.p(), m: num })?;
        ctx.inv_p2(den)?;
        Ok(Self {
            num,
            den,
            inv_m: ctx.mul_p2(ctx.reduce_p2(den), inv_num),
            ctx: *ctx,
        })
    }

    pub fn ctx(&self) -> &PrimeCtx {
        &self.ctx
    }

    /// `m` as a residue mod `p^2`.
    pub fn m_residue(&self) -> u128 {
        self.ctx
            .ratio_p2(self.num, self.den)
            .expect("denominator checked at construction")
    }

    /// `1 / m` mod `p^2`.
    pub fn inv_m(&self) -> u128 {
        self.inv_m
    }

    /// `1 - 256/m` mod `p^2`, the square of the Legendre argument `t`.
    pub fn t_squared(&self) -> u128 {
        let c = &self.ctx;
        c.sub_p2(1, c.mul_p2(256 % c.p2(), self.inv_m))
    }
}

/// Per-prime table of both central products reduced mod `p^2`, `0 <= k < p`.
#[derive(Clone, Debug)]
pub struct CentralTable {
    ctx: PrimeCtx,
    quartic: Vec<u128>,
    single: Vec<u128>,
}

impl CentralTable {
    pub fn build(ctx: &PrimeCtx) -> Self {
        let p = ctx.p();
        let facts = FactorialTable::build(4 * (p - 1), ctx);
        let quartic = (0..p)
            .map(|k| quartic_ratio(&facts, k, ctx).reduce(ctx))
            .collect();
        let single = (0..p)
            .map(|k| single_ratio(&facts, k, ctx).reduce(ctx))
            .collect();
        Self {
            ctx: *ctx,
            quartic,
            single,
        }
    }

    pub fn ctx(&self) -> &PrimeCtx {
        &self.ctx
    }

    /// `C(2k,k)^2 C(4k,2k) mod p^2`.
    pub fn quartic(&self, k: u64) -> u128 {
        self.quartic[k as usize]
    }

    /// `C(2k,k) C(4k,2k) mod p^2`.
    pub fn single(&self, k: u64) -> u128 {
        self.single[k as usize]
    }

    /// `sum_{k<p} quartic(k) z^k mod p^2`.
    pub fn quartic_series(&self, z: u128) -> u128 {
        horner(&self.quartic, z % self.ctx.p2(), &self.ctx)
    }

    /// `sum_{k<p} single(k) x^k mod p^2`.
    pub fn single_series(&self, x: u128) -> u128 {
        horner(&self.single, x % self.ctx.p2(), &self.ctx)
    }

    pub fn sum_s(&self, params: &CentralSumParams) -> u128 {
        self.quartic_series(params.inv_m())
    }

    /// `sum_{k <= p/4} quartic(k) z^k mod p`.
    pub fn truncated_quartic_series_p(&self, z: u64) -> u64 {
        let c = &self.ctx;
        let p = c.p() as u128;
        let coeffs: Vec<u128> = self.quartic[..=c.qcap() as usize]
            .iter()
            .map(|v| v % p)
            .collect();
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &a| c.add_p(c.mul_p(acc, z % c.p()), a as u64))
    }
}

fn horner(coeffs: &[u128], z: u128, ctx: &PrimeCtx) -> u128 {
    coeffs
        .iter()
        .rev()
        .fold(0u128, |acc, &a| ctx.add_p2(ctx.mul_p2(acc, z), a))
}

/// `S(m) = sum_{k<p} C(2k,k)^2 C(4k,2k) m^-k mod p^2`.
pub fn sum_s(params: &CentralSumParams) -> u128 {
    CentralTable::build(params.ctx()).sum_s(params)
}

/// `T(x) = sum_{k<p} C(2k,k) C(4k,2k) x^k mod p^2`.
pub fn sum_t(x: u128, ctx: &PrimeCtx) -> u128 {
    CentralTable::build(ctx).single_series(x)
}

/// `S(m)` evaluated with exact big-integer central products, each reduced
/// mod `p^2` only at the end. Independent of the valued-residue path; meant
/// for `p <= 100` or so.
pub fn sum_s_exact(params: &CentralSumParams) -> u128 {
    let ctx = params.ctx();
    let p2 = BigUint::from(ctx.p2());
    let mut term = BigUint::one();
    let mut acc = 0u128;
    let mut w = 1u128;
    for k in 0..ctx.p() {
        if k > 0 {
            let k4 = 4 * k;
            term *= k4 * (k4 - 1) * (k4 - 2) * (k4 - 3);
            term /= BigUint::from(k).pow(4);
        }
        let t = (&term % &p2).to_u128().expect("below p^2");
        acc = ctx.add_p2(acc, ctx.mul_p2(t, w));
        w = ctx.mul_p2(w, params.inv_m());
    }
    acc
}

/// Both sides of the squaring congruence at a residue `x`:
/// `(sum quartic(k) (x(1-64x))^k, T(x)^2)` mod `p^2`.
pub fn theorem21_sides(x: u128, table: &CentralTable) -> (u128, u128) {
    let c = table.ctx();
    let x = x % c.p2();
    let z = c.mul_p2(x, c.sub_p2(1, c.mul_p2(64 % c.p2(), x)));
    let t = table.single_series(x);
    (table.quartic_series(z), c.mul_p2(t, t))
}

pub fn theorem21_check(x: u128, ctx: &PrimeCtx) -> bool {
    let (l, r) = theorem21_sides(x, &CentralTable::build(ctx));
    l == r
}

/// Exact data for the integer identity
/// `sum_k C(2k,k)^2 C(4k,2k) C(k,m-k) (-64)^(m-k) = sum_k c(k) c(m-k)`
/// with `c(k) = C(2k,k) C(4k,2k)`.
#[derive(Clone, Debug)]
pub struct Lemma21Table {
    quartic: Vec<BigInt>,
    single: Vec<BigInt>,
    pascal: Vec<Vec<BigInt>>,
    pow64: Vec<BigInt>,
}

impl Lemma21Table {
    pub fn new(max_m: u64) -> Self {
        let n = max_m as usize;
        let mut quartic = Vec::with_capacity(n + 1);
        let mut single = Vec::with_capacity(n + 1);
        let (mut q, mut s) = (BigInt::one(), BigInt::one());
        for k in 0..=max_m {
            if k > 0 {
                let k4 = 4 * k;
                let num = BigInt::from(k4 * (k4 - 1) * (k4 - 2) * (k4 - 3));
                q = q * &num / BigInt::from(k).pow(4);
                s = s * num / BigInt::from(2 * k * (2 * k - 1) * k * k);
            }
            quartic.push(q.clone());
            single.push(s.clone());
        }
        let mut pascal: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for row in 0..=n {
            let mut r = vec![BigInt::one(); row + 1];
            for j in 1..row {
                r[j] = &pascal[row - 1][j - 1] + &pascal[row - 1][j];
            }
            pascal.push(r);
        }
        let mut pow64 = Vec::with_capacity(n + 1);
        let mut acc = BigInt::one();
        for _ in 0..=n {
            pow64.push(acc.clone());
            acc *= -64;
        }
        Self {
            quartic,
            single,
            pascal,
            pow64,
        }
    }

    pub fn max_m(&self) -> u64 {
        self.quartic.len() as u64 - 1
    }

    fn choose(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.pascal.get(n).and_then(|row| row.get(k))
    }

    /// Left side of the identity at `m`.
    pub fn left(&self, m: u64) -> BigInt {
        let m = m as usize;
        (0..=m)
            .filter_map(|k| {
                let c = self.choose(k, m - k)?;
                Some(&self.quartic[k] * c * &self.pow64[m - k])
            })
            .sum()
    }

    /// Right side of the identity at `m`.
    pub fn right(&self, m: u64) -> BigInt {
        let m = m as usize;
        (0..=m).map(|k| &self.single[k] * &self.single[m - k]).sum()
    }

    pub fn sides(&self, m: u64) -> (BigInt, BigInt) {
        assert!(m <= self.max_m(), "table built for m <= {}", self.max_m());
        (self.left(m), self.right(m))
    }
}

pub fn lemma21_sides(m: u64) -> (BigInt, BigInt) {
    Lemma21Table::new(m).sides(m)
}

/// `1024(m+1)(2m+1)(2m+3) S(m) - 8(2m+3)(8m^2+24m+19) S(m+1) + (m+2)^3 S(m+2)`.
pub fn lemma21_recurrence_residual<F>(m: u64, s: F) -> BigInt
where
    F: Fn(u64) -> BigInt,
{
    let mi = BigInt::from(m);
    let a = BigInt::from(1024) * (&mi + 1) * (2 * &mi + 1) * (2 * &mi + 3);
    let b = BigInt::from(8) * (2 * &mi + 3) * (8 * &mi * &mi + 24 * &mi + 19);
    let c: BigInt = (&mi + 2u32).pow(3);
    a * s(m) - b * s(m + 1) + c * s(m + 2)
}

/// `C(n, k) mod p` for any `n`, by Lucas' theorem.
pub fn binom_mod_p(n: u64, k: u64, ctx: &PrimeCtx, facts: &[u64]) -> u64 {
    let p = ctx.p();
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        let den = ctx.mul_p(facts[kd as usize], facts[(nd - kd) as usize]);
        let inv = ctx
            .inv_p(den as i128)
            .expect("factorials below p are units");
        acc = ctx.mul_p(acc, ctx.mul_p(facts[nd as usize], inv));
        n /= p;
        k /= p;
    }
    acc
}

/// `k! mod p` for `0 <= k < p`.
pub fn factorials_mod_p(ctx: &PrimeCtx) -> Vec<u64> {
    let mut v = Vec::with_capacity(ctx.p() as usize);
    let mut acc = 1u64;
    v.push(1);
    for i in 1..ctx.p() {
        acc = ctx.mul_p(acc, i);
        v.push(acc);
    }
    v
}

/// Valuation of `C(2k,k) C(4k,2k)` at `p`, exact (used by the truncation
/// property tests).
pub fn single_valuation(k: u64, ctx: &PrimeCtx) -> Option<u32> {
    central_single_term(k, ctx).ok()?.valuation()
}
