//! Residues modulo `p` and `p^2`, quadratic characters, square roots and
//! p-adic bookkeeping for factorials.
//!
//! Residues are canonical: mod-`p` values are `u64` in `[0, p)`, mod-`p^2`
//! values are `u128` in `[0, p^2)`. Products of two mod-`p^2` residues fit in
//! a `u128` while `p^2 <= 2^64`; above that [`mul_mod`] switches to a
//! big-integer path.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

const WIDE_LIMIT: u128 = 1 << 64;

/// `a * b mod m` for `a, b < m`.
#[inline]
pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(a < m && b < m);
    if m <= WIDE_LIMIT {
        (a * b) % m
    } else {
        let r = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(m);
        r.to_u128().expect("residue below modulus")
    }
}

pub fn pow_mod(base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Canonical representative of `a` in `[0, m)`.
#[inline]
pub fn reduce(a: i128, m: u128) -> u128 {
    debug_assert!(m > 0 && m <= i128::MAX as u128);
    a.rem_euclid(m as i128) as u128
}

/// Inverse of `a` modulo `m`. Fails when `gcd(a, m) > 1`, which is how a
/// parameter divisible by `p` is detected.
pub fn inv_mod(a: i128, m: u128) -> Result<u128> {
    if m == 0 || m > i128::MAX as u128 {
        return Err(Error::BadModulus(m as i128));
    }
    let mi = m as i128;
    let (mut r0, mut r1) = (mi, a.rem_euclid(mi));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { a, m });
    }
    Ok(reduce(s0, m))
}

/// Jacobi symbol `(a/n)` for odd `n >= 1`.
pub fn jacobi(a: i128, n: i128) -> Result<i8> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::BadModulus(n));
    }
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let n128 = n as u128;
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = pow_mod(b as u128, d as u128, n128);
        if x == 1 || x == n128 - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n128);
            if x == n128 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Square root of `a` modulo an odd prime `p` (Tonelli-Shanks). Returns the
/// smaller of the two roots, or `None` for a non-residue.
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    let pm = p as u128;
    if pow_mod(a as u128, ((p - 1) / 2) as u128, pm) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while pow_mod(z as u128, ((p - 1) / 2) as u128, pm) != pm - 1 {
        z += 1;
    }
    let mut c = pow_mod(z as u128, q as u128, pm);
    let mut r = pow_mod(a as u128, q.div_ceil(2) as u128, pm);
    let mut t = pow_mod(a as u128, q as u128, pm);
    let mut m = s;
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, pm);
            i += 1;
        }
        let b = pow_mod(c, 1u128 << (m - i - 1), pm);
        r = mul_mod(r, b, pm);
        c = mul_mod(b, b, pm);
        t = mul_mod(t, c, pm);
        m = i;
    }
    let r = r as u64;
    Some(r.min(p - r))
}

/// A validated prime `p > 3` with the quantities every sum needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeCtx {
    p: u64,
    p2: u128,
    half: u64,
    qcap: u64,
}

impl PrimeCtx {
    /// Largest supported prime: `p^2` must stay below `2^126` so that signed
    /// reductions remain exact.
    pub const MAX_PRIME: u64 = 1 << 63;

    pub fn new(p: u64) -> Result<Self> {
        if p <= 3 {
            return Err(Error::PrimeTooSmall(p));
        }
        if p >= Self::MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p as u128));
        }
        Ok(Self {
            p,
            p2: (p as u128) * (p as u128),
            half: (p - 1) / 2,
            qcap: p / 4,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn p2(&self) -> u128 {
        self.p2
    }

    /// `(p - 1) / 2`
    #[inline]
    pub fn half(&self) -> u64 {
        self.half
    }

    /// `floor(p / 4)`, the degree of the Legendre polynomial in every
    /// truncated sum.
    #[inline]
    pub fn qcap(&self) -> u64 {
        self.qcap
    }

    #[inline]
    pub fn reduce_p(&self, a: i128) -> u64 {
        reduce(a, self.p as u128) as u64
    }

    #[inline]
    pub fn reduce_p2(&self, a: i128) -> u128 {
        reduce(a, self.p2)
    }

    #[inline]
    pub fn mul_p(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn add_p(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn sub_p(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + self.p as u128 - b as u128) % self.p as u128) as u64
    }

    #[inline]
    pub fn neg_p(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow_p(&self, a: u64, e: u64) -> u64 {
        pow_mod(a as u128, e as u128, self.p as u128) as u64
    }

    pub fn inv_p(&self, a: i128) -> Result<u64> {
        inv_mod(a, self.p as u128).map(|v| v as u64)
    }

    #[inline]
    pub fn mul_p2(&self, a: u128, b: u128) -> u128 {
        mul_mod(a, b, self.p2)
    }

    #[inline]
    pub fn add_p2(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.p2 {
            s - self.p2
        } else {
            s
        }
    }

    #[inline]
    pub fn sub_p2(&self, a: u128, b: u128) -> u128 {
        if a >= b {
            a - b
        } else {
            a + self.p2 - b
        }
    }

    pub fn pow_p2(&self, a: u128, e: u64) -> u128 {
        pow_mod(a, e as u128, self.p2)
    }

    pub fn inv_p2(&self, a: i128) -> Result<u128> {
        inv_mod(a, self.p2)
    }

    /// The fraction `num / den` as a residue mod `p^2`.
    pub fn ratio_p2(&self, num: i128, den: i128) -> Result<u128> {
        Ok(self.mul_p2(self.reduce_p2(num), self.inv_p2(den)?))
    }

    /// The fraction `num / den` as a residue mod `p`.
    pub fn ratio_p(&self, num: i128, den: i128) -> Result<u64> {
        Ok(self.mul_p(self.reduce_p(num), self.inv_p(den)?))
    }
}

/// Quadratic character of `z` via Euler's criterion.
pub fn quad_char(z: u64, ctx: &PrimeCtx) -> i8 {
    match ctx.pow_p(z % ctx.p(), ctx.half()) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Both square roots of `a` in `F_p`, smallest first: `[]` for a
/// non-residue, `[0]` for zero, `[r, p - r]` otherwise.
pub fn sqrt_mod_p(a: u64, ctx: &PrimeCtx) -> Vec<u64> {
    match sqrt_mod_prime(a % ctx.p(), ctx.p()) {
        None => Vec::new(),
        Some(0) => vec![0],
        Some(r) => vec![r, ctx.p() - r],
    }
}

/// Square roots of `a` modulo `p^2`, Hensel-lifted from [`sqrt_mod_p`]. The
/// i-th returned root reduces to the i-th root mod `p`.
///
/// For `p | a` the roots are not unique: `[0]` is returned when `p^2 | a`,
/// and `[]` otherwise (no root exists then).
pub fn sqrt_mod_p2(a: u128, ctx: &PrimeCtx) -> Vec<u128> {
    let a = a % ctx.p2();
    if a.is_multiple_of(ctx.p() as u128) {
        return if a == 0 { vec![0] } else { Vec::new() };
    }
    sqrt_mod_p((a % ctx.p() as u128) as u64, ctx)
        .into_iter()
        .map(|r| {
            let r = r as u128;
            let err = ctx.sub_p2(ctx.mul_p2(r, r), a);
            let step = ctx.mul_p2(err, ctx.inv_p2(2 * r as i128).expect("unit root"));
            ctx.sub_p2(r, step)
        })
        .collect()
}

/// A value `u * p^e` with `u` a unit tracked mod `p^2`, or exact zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValuedResidue {
    Zero,
    Value { e: u32, u: u128 },
}

impl ValuedResidue {
    pub const ONE: Self = ValuedResidue::Value { e: 0, u: 1 };

    /// Splits an integer into its p-power and unit part.
    pub fn from_int(n: i128, ctx: &PrimeCtx) -> Self {
        if n == 0 {
            return ValuedResidue::Zero;
        }
        let p = ctx.p() as i128;
        let mut n = n;
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        ValuedResidue::Value {
            e,
            u: ctx.reduce_p2(n),
        }
    }

    pub fn valuation(&self) -> Option<u32> {
        match *self {
            ValuedResidue::Zero => None,
            ValuedResidue::Value { e, .. } => Some(e),
        }
    }

    pub fn unit(&self) -> Option<u128> {
        match *self {
            ValuedResidue::Zero => None,
            ValuedResidue::Value { u, .. } => Some(u),
        }
    }

    pub fn mul(self, rhs: Self, ctx: &PrimeCtx) -> Self {
        match (self, rhs) {
            (ValuedResidue::Value { e: e1, u: u1 }, ValuedResidue::Value { e: e2, u: u2 }) => {
                ValuedResidue::Value {
                    e: e1 + e2,
                    u: ctx.mul_p2(u1, u2),
                }
            }
            _ => ValuedResidue::Zero,
        }
    }

    /// Exact quotient; `None` when `rhs` is zero or the quotient would have
    /// negative valuation.
    pub fn checked_div(self, rhs: Self, ctx: &PrimeCtx) -> Option<Self> {
        match (self, rhs) {
            (_, ValuedResidue::Zero) => None,
            (ValuedResidue::Zero, _) => Some(ValuedResidue::Zero),
            (ValuedResidue::Value { e: e1, u: u1 }, ValuedResidue::Value { e: e2, u: u2 }) => {
                let e = e1.checked_sub(e2)?;
                let inv = ctx.inv_p2(u2 as i128).ok()?;
                Some(ValuedResidue::Value {
                    e,
                    u: ctx.mul_p2(u1, inv),
                })
            }
        }
    }

    pub fn pow(self, n: u32, ctx: &PrimeCtx) -> Self {
        match self {
            ValuedResidue::Zero if n == 0 => Self::ONE,
            ValuedResidue::Zero => ValuedResidue::Zero,
            ValuedResidue::Value { e, u } => ValuedResidue::Value {
                e: e * n,
                u: ctx.pow_p2(u, n as u64),
            },
        }
    }

    /// The plain residue mod `p^2`.
    pub fn reduce(&self, ctx: &PrimeCtx) -> u128 {
        match *self {
            ValuedResidue::Zero => 0,
            ValuedResidue::Value { e: 0, u } => u,
            ValuedResidue::Value { e: 1, u } => ctx.mul_p2(u, ctx.p() as u128),
            ValuedResidue::Value { .. } => 0,
        }
    }
}

/// `n!` as `p^e * u`.
pub fn factorial_vp(n: u64, ctx: &PrimeCtx) -> ValuedResidue {
    FactorialTable::build(n, ctx).get(n)
}

/// Prefix table of `k!` as valued residues for `0 <= k <= n`.
#[derive(Clone, Debug)]
pub struct FactorialTable {
    entries: Vec<ValuedResidue>,
}

impl FactorialTable {
    pub fn build(n: u64, ctx: &PrimeCtx) -> Self {
        let p = ctx.p();
        let mut entries = Vec::with_capacity(n as usize + 1);
        let (mut e, mut u) = (0u32, 1u128);
        entries.push(ValuedResidue::ONE);
        for i in 1..=n {
            let mut j = i;
            while j % p == 0 {
                j /= p;
                e += 1;
            }
            u = ctx.mul_p2(u, (j as u128) % ctx.p2());
            entries.push(ValuedResidue::Value { e, u });
        }
        Self { entries }
    }

    #[inline]
    pub fn get(&self, k: u64) -> ValuedResidue {
        self.entries[k as usize]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
