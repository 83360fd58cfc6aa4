use proptest::prelude::*;

use supercong::arith::is_prime;
use supercong::curves::{char_sum, point_count, power_sum, scale_check, CubicCurve};
use supercong::PrimeCtx;

fn prime() -> impl Strategy<Value = u64> {
    (5u64..400).prop_filter("prime", |&p| is_prime(p))
}

proptest! {
    #[test]
    fn euler_criterion_agrees(p in prime(), a in any::<i32>(), b in any::<i32>(), c in any::<i32>()) {
        let ctx = PrimeCtx::new(p).unwrap();
        let e = CubicCurve::new(a.into(), b.into(), c.into(), &ctx);
        prop_assert_eq!(power_sum(&e, &ctx), ctx.reduce_p(char_sum(&e, &ctx) as i128));
    }

    #[test]
    fn hasse_bound(p in prime(), a in any::<i32>(), b in any::<i32>(), c in any::<i32>()) {
        let ctx = PrimeCtx::new(p).unwrap();
        let e = CubicCurve::new(a.into(), b.into(), c.into(), &ctx);
        prop_assume!(!e.is_singular(&ctx));
        let t = char_sum(&e, &ctx);
        prop_assert!(t * t <= 4 * p as i64);
        let n = point_count(&e, &ctx);
        prop_assert!((n - p as i64 - 1).pow(2) <= 4 * p as i64);
    }

    #[test]
    fn shift_invariance(p in prime(), a in any::<i32>(), b in any::<i32>(), s in any::<u32>()) {
        let ctx = PrimeCtx::new(p).unwrap();
        let e = CubicCurve::new(a.into(), b.into(), 0, &ctx);
        prop_assert_eq!(char_sum(&e.shifted(s as u64, &ctx), &ctx), char_sum(&e, &ctx));
    }

    #[test]
    fn scaling(p in prime(), k in 1i64..10_000, m in any::<i32>(), n in any::<i32>()) {
        let ctx = PrimeCtx::new(p).unwrap();
        prop_assume!(!(k as u64).is_multiple_of(p));
        prop_assert!(scale_check(k.into(), m.into(), n.into(), &ctx));
    }
}

#[test]
fn singular_cubics_have_small_sums() {
    // x^2 (x + a): the sum is -((a/p))
    for p in [7u64, 11, 13, 101] {
        let ctx = PrimeCtx::new(p).unwrap();
        for a in 1..p {
            let e = CubicCurve::new(a as i128, 0, 0, &ctx);
            assert!(e.is_singular(&ctx));
            assert_eq!(
                char_sum(&e, &ctx),
                -(supercong::arith::quad_char(a, &ctx) as i64)
            );
        }
    }
}
