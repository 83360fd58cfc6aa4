//! Legendre polynomials `P_n` evaluated in `F_p` through the explicit sum
//! `P_n(t) = 2^-n sum_k C(n,k) (-1)^k C(2n-2k, n) t^(n-2k)`.

use crate::arith::{sqrt_mod_p, PrimeCtx};
use crate::binom::{binom_mod_p, factorials_mod_p, CentralTable};

/// Where an argument came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArgSource {
    /// A value given directly (a reduced rational, a sampled residue, ...).
    Direct,
    /// Built from the `index`-th root returned by [`sqrt_mod_p`]
    /// (0 = smaller root).
    Root { index: u8 },
}

/// An element `t` of `F_p` fed to `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyArg {
    t: u64,
    source: ArgSource,
}

impl PolyArg {
    pub fn direct(t: i128, ctx: &PrimeCtx) -> Self {
        Self {
            t: ctx.reduce_p(t),
            source: ArgSource::Direct,
        }
    }

    pub fn from_root(t: u64, index: u8, ctx: &PrimeCtx) -> Self {
        Self {
            t: t % ctx.p(),
            source: ArgSource::Root { index },
        }
    }

    /// `scale * sqrt(radicand)` for each square root of `radicand` in
    /// `F_p`, in root order. Empty when the radicand is a non-residue.
    pub fn scaled_roots(scale: u64, radicand: i128, ctx: &PrimeCtx) -> Vec<Self> {
        sqrt_mod_p(ctx.reduce_p(radicand), ctx)
            .into_iter()
            .enumerate()
            .map(|(i, r)| Self::from_root(ctx.mul_p(scale, r), i as u8, ctx))
            .collect()
    }

    pub fn value(&self) -> u64 {
        self.t
    }

    pub fn source(&self) -> ArgSource {
        self.source
    }

    /// `-t`, keeping the provenance.
    pub fn negated(&self, ctx: &PrimeCtx) -> Self {
        Self {
            t: ctx.neg_p(self.t),
            source: self.source,
        }
    }
}

/// `P_n(t) mod p` for `n <= p - 1`.
pub fn legendre_eval(n: u64, t: &PolyArg, ctx: &PrimeCtx) -> u64 {
    assert!(n < ctx.p(), "degree {n} must be below p = {}", ctx.p());
    let facts = factorials_mod_p(ctx);
    let tv = t.value();
    let mut acc = 0u64;
    for k in 0..=n / 2 {
        let c = ctx.mul_p(
            binom_mod_p(n, k, ctx, &facts),
            binom_mod_p(2 * n - 2 * k, n, ctx, &facts),
        );
        let term = ctx.mul_p(c, ctx.pow_p(tv, n - 2 * k));
        acc = if k % 2 == 0 {
            ctx.add_p(acc, term)
        } else {
            ctx.sub_p(acc, term)
        };
    }
    let inv2n = ctx.pow_p(ctx.inv_p(2).expect("p is odd"), n);
    ctx.mul_p(acc, inv2n)
}

/// `P_n(-t) == (-1)^n P_n(t)` in `F_p`.
pub fn parity_check(n: u64, t: &PolyArg, ctx: &PrimeCtx) -> bool {
    let pos = legendre_eval(n, t, ctx);
    let neg = legendre_eval(n, &t.negated(ctx), ctx);
    if n.is_multiple_of(2) {
        neg == pos
    } else {
        neg == ctx.neg_p(pos)
    }
}

/// `sum_{k <= p/4} C(4k,2k) C(2k,k) ((1 - t)/128)^k mod p`.
pub fn truncated_128_sum(t: &PolyArg, ctx: &PrimeCtx) -> u64 {
    truncated_128_sum_with(t, &CentralTable::build(ctx))
}

pub fn truncated_128_sum_with(t: &PolyArg, table: &CentralTable) -> u64 {
    let ctx = table.ctx();
    let p = ctx.p() as u128;
    let z = ctx.mul_p(ctx.sub_p(1, t.value()), ctx.inv_p(128).expect("p > 3"));
    (0..=ctx.qcap()).rev().fold(0u64, |acc, k| {
        ctx.add_p(ctx.mul_p(acc, z), (table.single(k) % p) as u64)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx(p: u64) -> PrimeCtx {
        PrimeCtx::new(p).unwrap()
    }

    #[test]
    fn eval_examples() {
        let c = ctx(13);
        for t in 0..13 {
            let arg = PolyArg::direct(t, &c);
            assert_eq!(legendre_eval(0, &arg, &c), 1);
            assert_eq!(legendre_eval(1, &arg, &c), t as u64);
        }
        let c7 = ctx(7);
        assert_eq!(legendre_eval(2, &PolyArg::direct(3, &c7), &c7), 6);
    }

    #[test]
    fn parity_examples() {
        assert!(parity_check(1, &PolyArg::direct(5, &ctx(11)), &ctx(11)));
        assert!(parity_check(2, &PolyArg::direct(3, &ctx(7)), &ctx(7)));
        let c = ctx(101);
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..10 {
            let t = PolyArg::direct(rng.gen_range(0..101), &c);
            assert!(parity_check(c.qcap(), &t, &c));
        }
    }

    #[test]
    fn truncated_sum_examples() {
        let c11 = ctx(11);
        assert_eq!(truncated_128_sum(&PolyArg::direct(1, &c11), &c11), 1);
        let t = PolyArg::direct(3, &c11);
        assert_eq!(truncated_128_sum(&t, &c11), legendre_eval(2, &t, &c11));

        // 1 - t = 128 makes the ratio 1.
        let c13 = ctx(13);
        let t = PolyArg::direct(1 - 128, &c13);
        let expect: u64 = [1u64, 12, 420, 18480].iter().sum::<u64>() % 13;
        assert_eq!(truncated_128_sum(&t, &c13), expect);
    }

    #[test]
    fn three_term_recurrence() {
        // (n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [13u64, 29, 61, 97, 151] {
            let c = ctx(p);
            for _ in 0..5 {
                let t = PolyArg::direct(rng.gen_range(0..p as i128), &c);
                for n in 1..c.qcap() {
                    let lhs = c.mul_p(n + 1, legendre_eval(n + 1, &t, &c));
                    let rhs = c.sub_p(
                        c.mul_p(c.mul_p(2 * n + 1, t.value()), legendre_eval(n, &t, &c)),
                        c.mul_p(n, legendre_eval(n - 1, &t, &c)),
                    );
                    assert_eq!(lhs, rhs, "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn scaled_roots_follow_sqrt_order() {
        let c = ctx(13);
        let roots = PolyArg::scaled_roots(c.ratio_p(5, 9).unwrap(), -7, &c);
        assert!(roots.is_empty(), "-7 is a non-residue mod 13");
        let c11 = ctx(11);
        let roots = PolyArg::scaled_roots(1, -7, &c11);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].source(), ArgSource::Root { index: 0 });
        assert_eq!(c11.mul_p(roots[0].value(), roots[0].value()), 4);
    }
}
