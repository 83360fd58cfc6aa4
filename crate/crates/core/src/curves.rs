//! Character sums and point counts of monic cubics `x^3 + a x^2 + b x + c`
//! over `F_p`, by enumeration of all `x`.

use crate::arith::{quad_char, PrimeCtx};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubicCurve {
    a: u64,
    b: u64,
    c: u64,
}

impl CubicCurve {
    pub fn new(a: i128, b: i128, c: i128, ctx: &PrimeCtx) -> Self {
        Self {
            a: ctx.reduce_p(a),
            b: ctx.reduce_p(b),
            c: ctx.reduce_p(c),
        }
    }

    /// `x^3 + m x + n`
    pub fn short(m: i128, n: i128, ctx: &PrimeCtx) -> Self {
        Self::new(0, m, n, ctx)
    }

    pub fn coefficients(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }

    pub fn eval(&self, x: u64, ctx: &PrimeCtx) -> u64 {
        let x = x % ctx.p();
        let v = ctx.add_p(ctx.mul_p(ctx.add_p(x, self.a), x), self.b);
        ctx.add_p(ctx.mul_p(v, x), self.c)
    }

    /// The cubic in `x + s`.
    pub fn shifted(&self, s: u64, ctx: &PrimeCtx) -> Self {
        let s = s % ctx.p();
        let s2 = ctx.mul_p(s, s);
        // (x+s)^3 + a(x+s)^2 + b(x+s) + c
        let a = ctx.add_p(ctx.mul_p(3, s), self.a);
        let b = ctx.add_p(
            ctx.add_p(ctx.mul_p(3, s2), ctx.mul_p(2, ctx.mul_p(self.a, s))),
            self.b,
        );
        let c = self.eval(s, ctx);
        Self { a, b, c }
    }

    /// Discriminant of the cubic; zero exactly when it has a repeated root.
    pub fn discriminant(&self, ctx: &PrimeCtx) -> u64 {
        // 18abc - 4a^3 c + a^2 b^2 - 4 b^3 - 27 c^2
        let (a, b, c) = (self.a, self.b, self.c);
        let m = |x, y| ctx.mul_p(x, y);
        let plus = ctx.add_p(m(18, m(a, m(b, c))), m(m(a, a), m(b, b)));
        let minus = ctx.add_p(
            ctx.add_p(m(4, m(m(a, m(a, a)), c)), m(4, m(b, m(b, b)))),
            m(27, m(c, c)),
        );
        ctx.sub_p(plus, minus)
    }

    pub fn is_singular(&self, ctx: &PrimeCtx) -> bool {
        self.discriminant(ctx) == 0
    }
}

/// `sum_x ((x^3 + a x^2 + b x + c) / p)` as an exact integer.
pub fn char_sum(curve: &CubicCurve, ctx: &PrimeCtx) -> i64 {
    par::sum_range(ctx.p(), |x| quad_char(curve.eval(x, ctx), ctx) as i64)
}

/// `sum_x (x^3 + a x^2 + b x + c)^((p-1)/2) mod p`.
pub fn power_sum(curve: &CubicCurve, ctx: &PrimeCtx) -> u64 {
    (0..ctx.p()).fold(0, |acc, x| {
        ctx.add_p(acc, ctx.pow_p(curve.eval(x, ctx), ctx.half()))
    })
}

/// Projective point count `p + 1 + char_sum`.
pub fn point_count(curve: &CubicCurve, ctx: &PrimeCtx) -> i64 {
    ctx.p() as i64 + 1 + char_sum(curve, ctx)
}

/// Checks that scaling `(m, n) -> (a^2 m, a^3 n)` multiplies the character
/// sum by `(a/p)`, and the power sum by `a^((p-1)/2)` mod `p`.
pub fn scale_check(a: i128, m: i128, n: i128, ctx: &PrimeCtx) -> bool {
    let a = ctx.reduce_p(a);
    let a2 = ctx.mul_p(a, a);
    let a3 = ctx.mul_p(a2, a);
    let base = CubicCurve::short(m, n, ctx);
    let scaled = CubicCurve::new(
        0,
        ctx.mul_p(a2, base.b) as i128,
        ctx.mul_p(a3, base.c) as i128,
        ctx,
    );
    let chars_ok = char_sum(&scaled, ctx) == quad_char(a, ctx) as i64 * char_sum(&base, ctx);
    let powers_ok =
        power_sum(&scaled, ctx) == ctx.mul_p(ctx.pow_p(a, ctx.half()), power_sum(&base, ctx));
    chars_ok && powers_ok
}
