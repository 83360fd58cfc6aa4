//! Registry of congruence statements and the per-prime verdict engine.
//!
//! Each [`TheoremSpec`] pairs an applicability test with a [`Claim`]. Most
//! claims are of the form "`S(m)` is congruent to a branch-dependent value
//! modulo `p` or `p^2`", described declaratively by a [`CentralClaim`] and its
//! [`Branch`] table. Statements about the Legendre polynomial value
//! `P_[p/4](t)` and about character sums of CM curves are attached to a claim
//! as auxiliary checks; they are evaluated for both square-root branches of
//! `t` and must all hold for the verdict to pass.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime, jacobi, quad_char, sqrt_mod_p, sqrt_mod_p2, PrimeCtx};
use crate::binom::{theorem21_sides, CentralSumParams, CentralTable};
use crate::curves::{char_sum, CubicCurve};
use crate::error::{Error, Result};
use crate::legendre::{legendre_eval, PolyArg};
use crate::par::{self, Parallelism};
use crate::quadform::{cornacchia, exhaustive, normalize, Convention, QuadRep};
use crate::report::{Kind, VerdictReport, Witnesses, BRANCH_EXCLUDED, BRANCH_NA};

/// Knobs that affect verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Seed for the random points of the squaring congruence.
    pub seed: u64,
    /// Random points per prime for the squaring congruence.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 1,
            samples: 20,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    P,
    P2,
}

impl Modulus {
    fn value(self, ctx: &PrimeCtx) -> u128 {
        match self {
            Modulus::P => ctx.p() as u128,
            Modulus::P2 => ctx.p2(),
        }
    }
}

/// `lead * x^2 + d * y^2 = multiple * p`, with a sign convention on `x` and
/// the names under which `x, y` are reported.
#[derive(Clone, Copy, Debug)]
pub struct Form {
    pub lead: u64,
    pub d: u64,
    pub multiple: u64,
    pub convention: Convention,
    pub names: [&'static str; 2],
}

const fn form(d: u64) -> Form {
    Form {
        lead: 1,
        d,
        multiple: 1,
        convention: Convention::NonNegative,
        names: ["x", "y"],
    }
}

impl Form {
    pub fn find(&self, p: u64) -> Option<QuadRep> {
        let rep = if self.lead == 1 && self.multiple == 1 {
            cornacchia(self.d, p).ok().flatten()
        } else {
            exhaustive(self.lead, self.d, self.multiple, p)
        }?;
        normalize(rep, self.convention).ok()
    }

    fn describe(&self) -> String {
        let lead = if self.lead == 1 {
            String::new()
        } else {
            self.lead.to_string()
        };
        let target = if self.multiple == 1 {
            "p".to_string()
        } else {
            format!("{}p", self.multiple)
        };
        format!("{target} = {lead}x^2 + {}y^2", self.d)
    }
}

/// Expected value of a branch.
#[derive(Clone, Copy, Debug)]
pub enum Rhs {
    Zero,
    /// `4x^2`
    FourXSq(Form),
    /// `4x^2 - 2p`
    FourXSqMinus2P(Form),
    /// `2p - 2x^2`
    TwoPMinus2XSq(Form),
    /// `2p - 8x^2`
    TwoPMinus8XSq(Form),
    /// `(-1)^[x/6] (4x^2 - 2p)` with `p = x^2 + y^2`, `x = 1 (mod 4)`
    SignedFourXSqMinus2P,
    /// `-4 (xy/3) xy` with `p = x^2 + y^2`, `x = 1 (mod 4)`
    MinusFourJacobiXY,
    /// `-4xy` with `p = x^2 + y^2`, `5 | x - y`
    MinusFourXYFive,
}

struct RhsValue {
    value: i128,
    rep: Option<QuadRep>,
    witnesses: Witnesses,
}

/// `p = x^2 + y^2` with `x` odd, `x = 1 (mod 4)` and `y >= 0`.
fn two_squares_odd_x(p: u64) -> Option<(i64, i64)> {
    let rep = cornacchia(1, p).ok().flatten()?;
    let (a, b) = if rep.x() % 2 != 0 {
        (rep.x(), rep.y())
    } else {
        (rep.y(), rep.x())
    };
    let x = if a.rem_euclid(4) == 1 { a } else { -a };
    Some((x, b))
}

impl Rhs {
    /// The expected integer value at `p`, before reduction. Errors name the
    /// missing representation.
    pub fn expected(&self, p: u64) -> std::result::Result<i128, String> {
        self.evaluate(p).map(|v| v.value)
    }

    fn evaluate(&self, p: u64) -> std::result::Result<RhsValue, String> {
        let pi = p as i128;
        let with_form = |f: &Form, g: &dyn Fn(i128) -> i128| {
            let rep = f
                .find(p)
                .ok_or_else(|| format!("no representation {}", f.describe()))?;
            let mut w = Witnesses::new();
            w.push(f.names[0], rep.x());
            w.push(f.names[1], rep.y());
            Ok(RhsValue {
                value: g(rep.x() as i128),
                rep: Some(rep),
                witnesses: w,
            })
        };
        match self {
            Rhs::Zero => Ok(RhsValue {
                value: 0,
                rep: None,
                witnesses: Witnesses::new(),
            }),
            Rhs::FourXSq(f) => with_form(f, &|x| 4 * x * x),
            Rhs::FourXSqMinus2P(f) => with_form(f, &|x| 4 * x * x - 2 * pi),
            Rhs::TwoPMinus2XSq(f) => with_form(f, &|x| 2 * pi - 2 * x * x),
            Rhs::TwoPMinus8XSq(f) => with_form(f, &|x| 2 * pi - 8 * x * x),
            Rhs::SignedFourXSqMinus2P | Rhs::MinusFourJacobiXY => {
                let (x, y) = two_squares_odd_x(p).ok_or("no representation p = x^2 + y^2")?;
                let (xi, yi) = (x as i128, y as i128);
                let value = if matches!(self, Rhs::SignedFourXSqMinus2P) {
                    let sign = if x.div_euclid(6) % 2 == 0 { 1 } else { -1 };
                    sign * (4 * xi * xi - 2 * pi)
                } else {
                    let chi = jacobi(xi * yi, 3).expect("3 is odd") as i128;
                    -4 * chi * xi * yi
                };
                let mut w = Witnesses::new();
                w.push("x", x);
                w.push("y", y);
                Ok(RhsValue {
                    value,
                    rep: None,
                    witnesses: w,
                })
            }
            Rhs::MinusFourXYFive => {
                let rep = cornacchia(1, p)
                    .ok()
                    .flatten()
                    .ok_or("no representation p = x^2 + y^2")?;
                let (a, b) = (rep.x(), rep.y());
                let (x, y) = if (a - b) % 5 == 0 {
                    (a, b)
                } else if (a + b) % 5 == 0 {
                    (a, -b)
                } else {
                    return Err("no representation p = x^2 + y^2 with 5 | x - y".into());
                };
                let mut w = Witnesses::new();
                w.push("x", x);
                w.push("y", y);
                Ok(RhsValue {
                    value: -4 * x as i128 * y as i128,
                    rep: None,
                    witnesses: w,
                })
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Branch {
    pub label: &'static str,
    pub when: fn(u64) -> bool,
    pub rhs: Rhs,
    pub modulus: Modulus,
}

/// `t = num/den * sqrt(radicand)`, the Legendre argument for `m`.
#[derive(Clone, Copy, Debug)]
pub struct SqrtArg {
    pub num: i128,
    pub den: i128,
    pub radicand: i128,
}

/// Checks attached to a sum claim that involve `P_[p/4](t)` or a CM curve.
#[derive(Clone, Copy, Debug)]
pub enum Aux {
    None,
    /// `t = 5 sqrt(-7)/9`, curve `x^3 + 21x^2 + 112x`.
    Rajwade,
    /// `t = 7 sqrt(3)/12`, curve `x^3 - (120 + 42 sqrt 3)x + 448 + 336 sqrt 3`.
    IshiiSqrt3,
    /// `t = 2 sqrt(2)/3`, curve `x^3 + (-21 + 12 sqrt 2)x - 28 + 22 sqrt 2`.
    IshiiSqrt2,
    /// Curve `x^3 + 4x^2 + (2 - tau)x` with `tau = 2t` stored as
    /// `tau_num/tau_den * sqrt(radicand)`.
    Lm {
        tau_num: i128,
        tau_den: i128,
        radicand: i128,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct CentralClaim {
    pub m: i128,
    pub branches: &'static [Branch],
    pub arg: Option<SqrtArg>,
    pub aux: Aux,
}

/// One of the zero claims bundled in a single statement.
#[derive(Clone, Copy, Debug)]
pub struct ZeroSum {
    pub m: i128,
    pub label: &'static str,
    pub when: fn(u64) -> bool,
}

#[derive(Clone, Copy, Debug)]
pub enum Claim {
    Central(CentralClaim),
    /// Squaring congruence at random points.
    SquaringIdentity,
    /// `S(m) = T((1 - t)/128)^2 (mod p^2)` with `t` lifted to `Z/p^2`, for
    /// every parameter of [`STATED_MS`].
    SquareRootSeries,
    /// A vanishing truncated sum forces `S(m) = 0 (mod p^2)`.
    TruncationImpliesZero,
    /// `T(1/128)` against `c` with `p = c^2 + 2d^2`.
    HalfSeries,
    ZeroSums(&'static [ZeroSum]),
}

#[derive(Clone, Copy, Debug)]
pub struct TheoremSpec {
    pub id: &'static str,
    pub kind: Kind,
    pub excluded: &'static [u64],
    pub applicable: fn(u64) -> bool,
    pub claim: Claim,
}

impl TheoremSpec {
    /// The sum parameter, for claims about a single `S(m)`.
    pub fn m(&self) -> Option<i128> {
        match self.claim {
            Claim::Central(c) => Some(c.m),
            _ => None,
        }
    }
}

/// Every parameter `m` for which a congruence is stated.
pub const STATED_MS: [i128; 14] = [
    256,
    81,
    648,
    20736,
    614656,
    2304,
    2509056,
    24591257856,
    -144,
    -3969,
    -82944,
    -199148544,
    -12288,
    -6635520,
];

fn legendre_symbol(a: i128, p: u64) -> i8 {
    jacobi(a, p as i128).expect("odd prime")
}

const fn mod_in(p: u64, q: u64, set: &[u64]) -> bool {
    let r = p % q;
    let mut i = 0;
    while i < set.len() {
        if set[i] == r {
            return true;
        }
        i += 1;
    }
    false
}

const ALWAYS: fn(u64) -> bool = |_| true;

const FORM_2: Form = form(2);
const FORM_7_CD: Form = Form {
    names: ["C", "D"],
    ..form(7)
};
const FORM_9_ONE_MOD_3: Form = Form {
    convention: Convention::OneModThree,
    ..form(9)
};

const fn scaled_form(lead: u64, d: u64, multiple: u64) -> Form {
    Form {
        lead,
        d,
        multiple,
        ..form(d)
    }
}

macro_rules! zero_branch {
    ($label:expr, $when:expr) => {
        Branch {
            label: $label,
            when: $when,
            rhs: Rhs::Zero,
            modulus: Modulus::P2,
        }
    };
}

const fn lm(tau_num: i128, tau_den: i128, radicand: i128) -> (Option<SqrtArg>, Aux) {
    (
        Some(SqrtArg {
            num: tau_num,
            den: 2 * tau_den,
            radicand,
        }),
        Aux::Lm {
            tau_num,
            tau_den,
            radicand,
        },
    )
}

const LM_13: (Option<SqrtArg>, Aux) = lm(5, 9, 13);
const LM_37: (Option<SqrtArg>, Aux) = lm(145, 441, 37);
const LM_5_40: (Option<SqrtArg>, Aux) = lm(8, 9, 5);
const LM_2_88: (Option<SqrtArg>, Aux) = lm(140, 99, 2);
const LM_29: (Option<SqrtArg>, Aux) = lm(3640, 9801, 29);
const LM_6: (Option<SqrtArg>, Aux) = lm(40, 49, 6);
const LM_5_100: (Option<SqrtArg>, Aux) = lm(161, 180, 5);

/// Branch table of the conjectured congruence for `f(b)`, keyed on
/// `(2/p)` and `(-b/p)`.
macro_rules! two_char_branches {
    ($b:expr, $plus:expr, $minus:expr, $zero:expr) => {
        &[
            Branch {
                label: $plus,
                when: |p| legendre_symbol(2, p) == 1 && legendre_symbol(-$b, p) == 1,
                rhs: Rhs::FourXSqMinus2P(form(2 * $b)),
                modulus: Modulus::P2,
            },
            Branch {
                label: $minus,
                when: |p| legendre_symbol(2, p) == -1 && legendre_symbol(-$b, p) == -1,
                rhs: Rhs::TwoPMinus8XSq(scaled_form(2, $b, 1)),
                modulus: Modulus::P2,
            },
            zero_branch!($zero, |p| legendre_symbol(2, p) != legendre_symbol(-$b, p)),
        ]
    };
}

/// Branch table of the conjectured congruence keyed on `(q/p)` and `(-1/p)`.
macro_rules! sign_split_branches {
    ($q:expr, $plus:expr, $minus:expr, $zero:expr) => {
        &[
            Branch {
                label: $plus,
                when: |p| legendre_symbol($q, p) == 1 && p % 4 == 1,
                rhs: Rhs::FourXSqMinus2P(form($q)),
                modulus: Modulus::P2,
            },
            Branch {
                label: $minus,
                when: |p| legendre_symbol($q, p) == -1 && p % 4 == 3,
                rhs: Rhs::TwoPMinus2XSq(scaled_form(1, $q, 2)),
                modulus: Modulus::P2,
            },
            zero_branch!($zero, |p| legendre_symbol($q, p) == -legendre_symbol(-1, p)),
        ]
    };
}

fn has_25_rep(p: u64) -> bool {
    p % 4 == 1 && cornacchia(25, p).ok().flatten().is_some()
}

pub static REGISTRY: &[TheoremSpec] = &[
    TheoremSpec {
        id: "RV256",
        kind: Kind::Proven,
        excluded: &[],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 256,
            branches: &[
                Branch {
                    label: "p = 1,3 (mod 8)",
                    when: |p| mod_in(p, 8, &[1, 3]),
                    rhs: Rhs::FourXSqMinus2P(FORM_2),
                    modulus: Modulus::P2,
                },
                zero_branch!("p = 5,7 (mod 8)", |p| mod_in(p, 8, &[5, 7])),
            ],
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "T2.1",
        kind: Kind::Proven,
        excluded: &[],
        applicable: ALWAYS,
        claim: Claim::SquaringIdentity,
    },
    TheoremSpec {
        id: "C2.1",
        kind: Kind::Proven,
        excluded: &[],
        applicable: ALWAYS,
        claim: Claim::SquareRootSeries,
    },
    TheoremSpec {
        id: "C2.2",
        kind: Kind::Proven,
        excluded: &[],
        applicable: ALWAYS,
        claim: Claim::TruncationImpliesZero,
    },
    TheoremSpec {
        id: "C2.3",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| mod_in(p, 8, &[1, 3]),
        claim: Claim::HalfSeries,
    },
    TheoremSpec {
        id: "T3.1",
        kind: Kind::Proven,
        excluded: &[2, 3, 7],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 81,
            branches: &[
                Branch {
                    label: "p = 1,2,4 (mod 7)",
                    when: |p| mod_in(p, 7, &[1, 2, 4]),
                    rhs: Rhs::FourXSq(FORM_7_CD),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 3,5,6 (mod 7)", |p| mod_in(p, 7, &[3, 5, 6])),
            ],
            arg: Some(SqrtArg {
                num: 5,
                den: 9,
                radicand: -7,
            }),
            aux: Aux::Rajwade,
        }),
    },
    TheoremSpec {
        id: "T3.2",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| mod_in(p, 12, &[1, 11]),
        claim: Claim::Central(CentralClaim {
            m: -12288,
            branches: &[
                Branch {
                    label: "p = 1 (mod 12)",
                    when: |p| p % 12 == 1,
                    rhs: Rhs::FourXSq(FORM_9_ONE_MOD_3),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 11 (mod 12)", |p| p % 12 == 11),
            ],
            arg: Some(SqrtArg {
                num: 7,
                den: 12,
                radicand: 3,
            }),
            aux: Aux::IshiiSqrt3,
        }),
    },
    TheoremSpec {
        id: "T3.3",
        kind: Kind::Proven,
        excluded: &[2, 3],
        applicable: |p| legendre_symbol(13, p) == 1,
        claim: Claim::Central(CentralClaim {
            m: -82944,
            branches: &[
                Branch {
                    label: "p = 1 (mod 4)",
                    when: |p| p % 4 == 1,
                    rhs: Rhs::FourXSq(form(13)),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 3 (mod 4)", |p| p % 4 == 3),
            ],
            arg: LM_13.0,
            aux: LM_13.1,
        }),
    },
    TheoremSpec {
        id: "T3.4",
        kind: Kind::Proven,
        excluded: &[2, 3, 7],
        applicable: |p| legendre_symbol(37, p) == 1,
        claim: Claim::Central(CentralClaim {
            m: -199148544,
            branches: &[
                Branch {
                    label: "p = 1 (mod 4)",
                    when: |p| p % 4 == 1,
                    rhs: Rhs::FourXSq(form(37)),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 3 (mod 4)", |p| p % 4 == 3),
            ],
            arg: LM_37.0,
            aux: LM_37.1,
        }),
    },
    TheoremSpec {
        id: "T3.5",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| mod_in(p, 8, &[1, 7]),
        claim: Claim::Central(CentralClaim {
            m: 2304,
            branches: &[
                Branch {
                    label: "p = 1,7 (mod 24)",
                    when: |p| mod_in(p, 24, &[1, 7]),
                    rhs: Rhs::FourXSq(form(6)),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 17,23 (mod 24)", |p| mod_in(p, 24, &[17, 23])),
            ],
            arg: Some(SqrtArg {
                num: 2,
                den: 3,
                radicand: 2,
            }),
            aux: Aux::IshiiSqrt2,
        }),
    },
    TheoremSpec {
        id: "T3.6",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| mod_in(p, 5, &[1, 4]),
        claim: Claim::Central(CentralClaim {
            m: 20736,
            branches: &[
                Branch {
                    label: "p = 1,9,11,19 (mod 40)",
                    when: |p| mod_in(p, 40, &[1, 9, 11, 19]),
                    rhs: Rhs::FourXSq(form(10)),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 21,29,31,39 (mod 40)", |p| mod_in(
                    p,
                    40,
                    &[21, 29, 31, 39]
                )),
            ],
            arg: LM_5_40.0,
            aux: LM_5_40.1,
        }),
    },
    TheoremSpec {
        id: "T3.7",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| mod_in(p, 8, &[1, 7]),
        claim: Claim::Central(CentralClaim {
            m: 2509056,
            branches: &[
                Branch {
                    label: "(p/11) = 1",
                    when: |p| legendre_symbol(p as i128, 11) == 1,
                    rhs: Rhs::FourXSq(form(22)),
                    modulus: Modulus::P,
                },
                zero_branch!("(p/11) = -1", |p| legendre_symbol(p as i128, 11) == -1),
            ],
            arg: LM_2_88.0,
            aux: LM_2_88.1,
        }),
    },
    TheoremSpec {
        id: "T3.8",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| legendre_symbol(29, p) == 1,
        claim: Claim::Central(CentralClaim {
            m: 24591257856,
            branches: &[
                Branch {
                    label: "p = 1,3 (mod 8)",
                    when: |p| mod_in(p, 8, &[1, 3]),
                    rhs: Rhs::FourXSq(form(58)),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 5,7 (mod 8)", |p| mod_in(p, 8, &[5, 7])),
            ],
            arg: LM_29.0,
            aux: LM_29.1,
        }),
    },
    TheoremSpec {
        id: "T3.9",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| mod_in(p, 24, &[1, 5, 19, 23]),
        claim: Claim::Central(CentralClaim {
            m: 614656,
            branches: &[
                Branch {
                    label: "p = 1,19 (mod 24)",
                    when: |p| mod_in(p, 24, &[1, 19]),
                    rhs: Rhs::FourXSq(form(18)),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 5,23 (mod 24)", |p| mod_in(p, 24, &[5, 23])),
            ],
            arg: LM_6.0,
            aux: LM_6.1,
        }),
    },
    TheoremSpec {
        id: "T3.10",
        kind: Kind::Proven,
        excluded: &[],
        applicable: |p| mod_in(p, 5, &[1, 4]),
        claim: Claim::Central(CentralClaim {
            m: -6635520,
            branches: &[
                Branch {
                    label: "p = x^2 + 25y^2",
                    when: has_25_rep,
                    rhs: Rhs::FourXSq(form(25)),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 3 (mod 4)", |p| p % 4 == 3),
            ],
            arg: LM_5_100.0,
            aux: LM_5_100.1,
        }),
    },
    TheoremSpec {
        id: "T3.11",
        kind: Kind::Proven,
        excluded: &[],
        applicable: ALWAYS,
        claim: Claim::ZeroSums(&[
            ZeroSum {
                m: 648,
                label: "m = 648, p = 3 (mod 4)",
                when: |p| p % 4 == 3,
            },
            ZeroSum {
                m: -144,
                label: "m = -144, p = 2 (mod 3)",
                when: |p| p % 3 == 2,
            },
            ZeroSum {
                m: -3969,
                label: "m = -3969, p = 3,5,6 (mod 7)",
                when: |p| mod_in(p, 7, &[3, 5, 6]),
            },
        ]),
    },
    TheoremSpec {
        id: "Conj-A3",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 7],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 81,
            branches: &[
                Branch {
                    label: "p = 1,2,4 (mod 7)",
                    when: |p| mod_in(p, 7, &[1, 2, 4]),
                    rhs: Rhs::FourXSqMinus2P(form(7)),
                    modulus: Modulus::P2,
                },
                zero_branch!("p = 3,5,6 (mod 7)", |p| mod_in(p, 7, &[3, 5, 6])),
            ],
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A14",
        kind: Kind::Conjecture,
        excluded: &[2, 3],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 2304,
            branches: two_char_branches!(
                3,
                "(2/p) = (-3/p) = 1",
                "(2/p) = (-3/p) = -1",
                "(2/p) = -(-3/p)"
            ),
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A16",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 5],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 20736,
            branches: two_char_branches!(
                5,
                "(2/p) = (-5/p) = 1",
                "(2/p) = (-5/p) = -1",
                "(2/p) = -(-5/p)"
            ),
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A17",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 13],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: -82944,
            branches: sign_split_branches!(
                13,
                "(13/p) = (-1/p) = 1",
                "(13/p) = (-1/p) = -1",
                "(13/p) = -(-1/p)"
            ),
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A18",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 11],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 2509056,
            branches: two_char_branches!(
                11,
                "(2/p) = (-11/p) = 1",
                "(2/p) = (-11/p) = -1",
                "(2/p) = -(-11/p)"
            ),
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A19",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 7, 37],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: -199148544,
            branches: sign_split_branches!(
                37,
                "(37/p) = (-1/p) = 1",
                "(37/p) = (-1/p) = -1",
                "(37/p) = -(-1/p)"
            ),
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A21",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 11, 29],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 24591257856,
            branches: two_char_branches!(
                29,
                "(2/p) = (-29/p) = 1",
                "(2/p) = (-29/p) = -1",
                "(2/p) = -(-29/p)"
            ),
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A24",
        kind: Kind::Conjecture,
        excluded: &[2, 3],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: -12288,
            branches: &[
                Branch {
                    label: "p = 1 (mod 12)",
                    when: |p| p % 12 == 1,
                    rhs: Rhs::SignedFourXSqMinus2P,
                    modulus: Modulus::P,
                },
                Branch {
                    label: "p = 5 (mod 12)",
                    when: |p| p % 12 == 5,
                    rhs: Rhs::MinusFourJacobiXY,
                    modulus: Modulus::P2,
                },
                zero_branch!("p = 3 (mod 4)", |p| p % 4 == 3),
            ],
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A25",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 5, 7],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: -6635520,
            branches: &[
                Branch {
                    label: "p = x^2 + 25y^2",
                    when: has_25_rep,
                    rhs: Rhs::FourXSqMinus2P(form(25)),
                    modulus: Modulus::P,
                },
                Branch {
                    label: "p = x^2 + y^2, 5 | x - y",
                    when: |p| p % 4 == 1 && !has_25_rep(p),
                    rhs: Rhs::MinusFourXYFive,
                    modulus: Modulus::P2,
                },
                zero_branch!("p = 3 (mod 4)", |p| p % 4 == 3),
            ],
            arg: None,
            aux: Aux::None,
        }),
    },
    TheoremSpec {
        id: "Conj-A28",
        kind: Kind::Conjecture,
        excluded: &[2, 3, 5, 7],
        applicable: ALWAYS,
        claim: Claim::Central(CentralClaim {
            m: 614656,
            branches: &[
                Branch {
                    label: "p = 1,3 (mod 8)",
                    when: |p| mod_in(p, 8, &[1, 3]),
                    rhs: Rhs::FourXSqMinus2P(FORM_2),
                    modulus: Modulus::P,
                },
                zero_branch!("p = 5,7 (mod 8)", |p| mod_in(p, 8, &[5, 7])),
            ],
            arg: None,
            aux: Aux::None,
        }),
    },
];

pub fn registry() -> &'static [TheoremSpec] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static TheoremSpec> {
    REGISTRY
        .iter()
        .find(|s| s.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Resolves a comma-separated selection: ids, `all`, `all-proven` or
/// `all-conjectures`. The result follows registry order without duplicates.
pub fn select(selection: &str) -> Result<Vec<&'static TheoremSpec>> {
    let mut wanted = vec![false; REGISTRY.len()];
    for token in selection
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let group: Option<fn(&TheoremSpec) -> bool> = match token {
            "all" => Some(|_| true),
            "all-proven" => Some(|s| s.kind == Kind::Proven),
            "all-conjectures" => Some(|s| s.kind == Kind::Conjecture),
            _ => None,
        };
        match group {
            Some(keep) => {
                for (i, s) in REGISTRY.iter().enumerate() {
                    wanted[i] |= keep(s);
                }
            }
            None => {
                let spec = lookup(token)?;
                let i = REGISTRY
                    .iter()
                    .position(|s| s.id == spec.id)
                    .expect("registered");
                wanted[i] = true;
            }
        }
    }
    Ok(REGISTRY
        .iter()
        .zip(wanted)
        .filter_map(|(s, w)| w.then_some(s))
        .collect())
}

/// Everything a prime's verdicts share.
pub struct PrimeData {
    pub ctx: PrimeCtx,
    pub table: CentralTable,
}

impl PrimeData {
    pub fn new(p: u64) -> Result<Self> {
        let ctx = PrimeCtx::new(p)?;
        Ok(Self {
            table: CentralTable::build(&ctx),
            ctx,
        })
    }

    pub fn sum_s(&self, m: i128) -> Result<u128> {
        Ok(self.table.sum_s(&CentralSumParams::new(m, &self.ctx)?))
    }
}

/// The selected branch of a statement at a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub applicable: bool,
    pub label: String,
    pub witnesses: Witnesses,
}

/// Picks the branch of `spec` at `p` and attaches its representation
/// witnesses. A branch whose mandatory representation is missing is an
/// error.
pub fn classify(spec: &TheoremSpec, p: u64) -> Result<Classification> {
    let ctx = PrimeCtx::new(p)?;
    if let Some(label) = gate(spec, &ctx) {
        return Ok(Classification {
            applicable: false,
            label: label.to_string(),
            witnesses: Witnesses::new(),
        });
    }
    match spec.claim {
        Claim::Central(claim) => {
            let Some(branch) = claim.branches.iter().find(|b| (b.when)(p)) else {
                return Ok(Classification {
                    applicable: false,
                    label: BRANCH_NA.into(),
                    witnesses: Witnesses::new(),
                });
            };
            let value = branch
                .rhs
                .evaluate(p)
                .map_err(|why| Error::InvalidArgument(format!("{} at p = {p}: {why}", spec.id)))?;
            Ok(Classification {
                applicable: true,
                label: branch.label.into(),
                witnesses: value.witnesses,
            })
        }
        _ => {
            let report = verify(spec, p, &VerifyOptions::default())?;
            Ok(Classification {
                applicable: report.applicable,
                label: report.branch,
                witnesses: report.witnesses,
            })
        }
    }
}

/// `Some(label)` when the statement says nothing at this prime.
fn gate(spec: &TheoremSpec, ctx: &PrimeCtx) -> Option<&'static str> {
    let p = ctx.p();
    if spec.excluded.contains(&p) {
        return Some(BRANCH_EXCLUDED);
    }
    if let Some(m) = spec.m() {
        if m.rem_euclid(p as i128) == 0 {
            return Some(BRANCH_EXCLUDED);
        }
    }
    if !(spec.applicable)(p) {
        return Some(BRANCH_NA);
    }
    None
}

/// Checks `spec` at the prime `p > 3`.
pub fn verify(spec: &TheoremSpec, p: u64, opts: &VerifyOptions) -> Result<VerdictReport> {
    let data = PrimeData::new(p)?;
    Ok(verify_with(spec, &data, opts))
}

pub fn verify_with(spec: &TheoremSpec, data: &PrimeData, opts: &VerifyOptions) -> VerdictReport {
    let ctx = &data.ctx;
    if let Some(label) = gate(spec, ctx) {
        return VerdictReport::not_applicable(spec.id, ctx.p(), spec.kind, label);
    }
    match spec.claim {
        Claim::Central(claim) => verify_central(spec, &claim, data),
        Claim::SquaringIdentity => verify_squaring(spec, data, opts),
        Claim::SquareRootSeries => verify_root_series(spec, data),
        Claim::TruncationImpliesZero => verify_truncation(spec, data),
        Claim::HalfSeries => verify_half_series(spec, data),
        Claim::ZeroSums(parts) => verify_zero_sums(spec, parts, data),
    }
}

fn report(
    spec: &TheoremSpec,
    p: u64,
    branch: impl Into<String>,
    (lhs, rhs, modulus): (u128, u128, u128),
    witnesses: Witnesses,
    pass: bool,
) -> VerdictReport {
    VerdictReport {
        theorem: spec.id.to_string(),
        p,
        applicable: true,
        branch: branch.into(),
        lhs: Some(lhs),
        rhs: Some(rhs),
        modulus: Some(modulus),
        witnesses,
        pass,
        kind: spec.kind,
    }
}

fn verify_central(spec: &TheoremSpec, claim: &CentralClaim, data: &PrimeData) -> VerdictReport {
    let ctx = &data.ctx;
    let p = ctx.p();
    let Some(branch) = claim.branches.iter().find(|b| (b.when)(p)) else {
        return VerdictReport::not_applicable(spec.id, p, spec.kind, BRANCH_NA);
    };
    let s = data.sum_s(claim.m).expect("gate excludes p | m");
    let modulus = branch.modulus.value(ctx);
    let lhs = s % modulus;
    let value = match branch.rhs.evaluate(p) {
        Ok(v) => v,
        Err(why) => {
            let mut r = VerdictReport::not_applicable(spec.id, p, spec.kind, branch.label);
            r.applicable = true;
            r.branch = format!("{} [{why}]", branch.label);
            r.lhs = Some(lhs);
            r.modulus = Some(modulus);
            r.pass = false;
            return r;
        }
    };
    let rhs = crate::arith::reduce(value.value, modulus);
    let mut witnesses = value.witnesses;
    let aux_ok = check_aux(claim, branch, value.rep, s, data, &mut witnesses);
    report(
        spec,
        p,
        branch.label,
        (lhs, rhs, modulus),
        witnesses,
        lhs == rhs && aux_ok,
    )
}

/// Legendre-polynomial and curve checks; appends witnesses per root and
/// returns whether every check held.
fn check_aux(
    claim: &CentralClaim,
    branch: &Branch,
    rep: Option<QuadRep>,
    s: u128,
    data: &PrimeData,
    w: &mut Witnesses,
) -> bool {
    let ctx = &data.ctx;
    let Some(arg) = claim.arg else {
        return true;
    };
    let p = ctx.p();
    let n = ctx.qcap();
    let s_mod_p = (s % p as u128) as u64;
    let zero_branch = matches!(branch.rhs, Rhs::Zero);
    let x = rep.map(|r| r.x() as i128);
    let mut ok = true;

    // The Rajwade sum needs no square root, so its value is checked in
    // both branches.
    let rajwade = if matches!(claim.aux, Aux::Rajwade) {
        let sum = char_sum(&CubicCurve::new(21, 112, 0, ctx), ctx);
        w.push("rajwade_sum", sum);
        match x {
            Some(c) => {
                let stated = 2 * c * legendre_symbol(c, 7) as i128;
                let sign = if sum as i128 == stated {
                    1
                } else if sum as i128 == -stated {
                    -1
                } else {
                    0
                };
                w.push("rajwade_sign", sign);
                ok &= sign != 0;
            }
            None => ok &= sum == 0,
        }
        Some(sum)
    } else {
        None
    };

    let scale = ctx
        .ratio_p(arg.num, arg.den)
        .expect("denominator coprime to p");
    let roots = sqrt_mod_p(ctx.reduce_p(arg.radicand), ctx);
    w.push("t_in_Fp", !roots.is_empty() as i128);
    let t_sq_expected = {
        let inv_m = ctx.inv_p(claim.m).expect("gate excludes p | m");
        ctx.sub_p(1, ctx.mul_p(256 % p, inv_m))
    };
    for (i, &root) in roots.iter().enumerate() {
        let t = PolyArg::from_root(ctx.mul_p(scale, root), i as u8, ctx);
        let pv = legendre_eval(n, &t, ctx);
        w.push(format!("t{i}"), t.value());
        w.push(format!("P{i}"), pv);
        ok &= ctx.mul_p(t.value(), t.value()) == t_sq_expected;
        ok &= ctx.mul_p(pv, pv) == s_mod_p;

        let chi = |v: i128| quad_char(ctx.reduce_p(v), ctx) as i128;
        let sq = root as i128;
        match claim.aux {
            Aux::None => {}
            Aux::Rajwade => {
                let sum = rajwade.expect("computed above") as i128;
                let expected = ctx.reduce_p(-chi(3 * (7 + sq)) * sum);
                w.push(format!("P{i}_expected"), expected);
                ok &= pv == expected;
            }
            Aux::IshiiSqrt3 => {
                let curve = CubicCurve::short(-(120 + 42 * sq), 448 + 336 * sq, ctx);
                let cm = char_sum(&curve, ctx) as i128;
                w.push(format!("cm{i}"), cm);
                let (p_exp, cm_exp) = match x {
                    Some(x) if !zero_branch => (chi(2 + 2 * sq) * 2 * x, -2 * x * chi(1 + sq)),
                    _ => (0, 0),
                };
                let p_exp = ctx.reduce_p(p_exp);
                w.push(format!("P{i}_expected"), p_exp);
                ok &= pv == p_exp && cm == cm_exp;
            }
            Aux::IshiiSqrt2 => {
                let curve = CubicCurve::short(-21 + 12 * sq, -28 + 22 * sq, ctx);
                let cm = char_sum(&curve, ctx) as i128;
                w.push(format!("cm{i}"), cm);
                let (p_exp, cm_exp) = match x {
                    Some(x) if !zero_branch => {
                        let sign = if ctx.half().is_multiple_of(2) { 1 } else { -1 };
                        let j = legendre_symbol(x, 3) as i128;
                        let j2 = legendre_symbol(2 * x, 3) as i128;
                        (sign * chi(sq) * j * 2 * x, 2 * x * j2 * chi(1 + sq))
                    }
                    _ => (0, 0),
                };
                let p_exp = ctx.reduce_p(p_exp);
                w.push(format!("P{i}_expected"), p_exp);
                ok &= pv == p_exp && cm == cm_exp;
            }
            Aux::Lm {
                tau_num,
                tau_den,
                radicand: _,
            } => {
                let tau = ctx.mul_p(ctx.ratio_p(tau_num, tau_den).expect("coprime"), root);
                let curve = CubicCurve::new(4, 2 - tau as i128, 0, ctx);
                let cm = char_sum(&curve, ctx) as i128;
                w.push(format!("cm{i}"), cm);
                let expected_sq = x.filter(|_| !zero_branch).map_or(0, |x| 4 * x * x);
                ok &= cm * cm == expected_sq;
                ok &= ctx.reduce_p(cm * cm) == s_mod_p;
            }
        }
    }
    w.push("aux_ok", ok as i128);
    ok
}

fn sample_rng(seed: u64, p: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn verify_squaring(spec: &TheoremSpec, data: &PrimeData, opts: &VerifyOptions) -> VerdictReport {
    let ctx = &data.ctx;
    let mut rng = sample_rng(opts.seed, ctx.p());
    let mut shown = None;
    for _ in 0..opts.samples.max(1) {
        let x = rng.gen_range(0..ctx.p2());
        let (l, r) = theorem21_sides(x, &data.table);
        shown = Some((x, l, r));
        if l != r {
            break;
        }
    }
    let (x, l, r) = shown.expect("at least one sample");
    let mut w = Witnesses::new();
    w.push("seed", opts.seed);
    w.push("samples", opts.samples as i128);
    w.push("x", x as i128);
    report(spec, ctx.p(), "random x", (l, r, ctx.p2()), w, l == r)
}

/// One vertex pair of the consistency triangle for a parameter `m` and one
/// square root `t` of `1 - 256/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCheck {
    pub m: i128,
    pub root_index: usize,
    /// `t mod p`
    pub t: u64,
    /// `t mod p^2`, when a lift exists.
    pub t_lift: Option<u128>,
    pub sum_s: u128,
    /// `P_[p/4](t)^2 mod p`
    pub legendre_sq: u64,
    /// `T((1 - t)/128)^2 mod p^2`, when a lift exists.
    pub series_sq: Option<u128>,
}

impl TriangleCheck {
    pub fn mod_p_holds(&self, ctx: &PrimeCtx) -> bool {
        (self.sum_s % ctx.p() as u128) as u64 == self.legendre_sq
    }

    pub fn mod_p2_holds(&self) -> Option<bool> {
        self.series_sq.map(|v| v == self.sum_s)
    }
}

/// `S(m)` against `P_[p/4](t)^2 (mod p)` and `T((1-t)/128)^2 (mod p^2)` for
/// every square root `t` of `1 - 256/m`. Empty when `t` is not in `F_p`.
pub fn consistency_triangle(m: i128, data: &PrimeData) -> Result<Vec<TriangleCheck>> {
    let ctx = &data.ctx;
    let params = CentralSumParams::new(m, ctx)?;
    let s = data.table.sum_s(&params);
    let a2 = params.t_squared();
    let a = (a2 % ctx.p() as u128) as u64;
    let roots = sqrt_mod_p(a, ctx);
    let lifts = sqrt_mod_p2(a2, ctx);
    let inv128 = ctx.inv_p2(128)?;
    Ok(roots
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let pv = legendre_eval(ctx.qcap(), &PolyArg::from_root(t, i as u8, ctx), ctx);
            let t_lift = lifts.get(i).copied();
            let series_sq = t_lift.map(|tl| {
                let x = ctx.mul_p2(ctx.sub_p2(1, tl), inv128);
                let v = data.table.single_series(x);
                ctx.mul_p2(v, v)
            });
            TriangleCheck {
                m,
                root_index: i,
                t,
                t_lift,
                sum_s: s,
                legendre_sq: ctx.mul_p(pv, pv),
                series_sq,
            }
        })
        .collect())
}

fn verify_root_series(spec: &TheoremSpec, data: &PrimeData) -> VerdictReport {
    let ctx = &data.ctx;
    let p = ctx.p();
    let mut checked = 0i128;
    let mut shown: Option<(TriangleCheck, bool)> = None;
    for &m in STATED_MS.iter().filter(|m| m.rem_euclid(p as i128) != 0) {
        let checks = consistency_triangle(m, data).expect("p does not divide m");
        for c in checks {
            let Some(ok) = c.mod_p2_holds() else { continue };
            checked += 1;
            let failed = !ok;
            if shown.is_none() || failed {
                shown = Some((c, ok));
            }
            if failed {
                break;
            }
        }
    }
    let Some((c, ok)) = shown else {
        return VerdictReport::not_applicable(spec.id, p, spec.kind, "t not in F_p");
    };
    let mut w = Witnesses::new();
    w.push("m", c.m);
    w.push("t", c.t_lift.expect("lifted") as i128);
    w.push("checked", checked);
    let branch = format!("t in F_p ({checked} roots)");
    report(
        spec,
        p,
        branch,
        (c.sum_s, c.series_sq.expect("lifted"), ctx.p2()),
        w,
        ok,
    )
}

fn verify_truncation(spec: &TheoremSpec, data: &PrimeData) -> VerdictReport {
    let ctx = &data.ctx;
    let p = ctx.p();
    let pi = p as i128;
    let mut premises = 0i128;
    let mut shown = None;
    for &m in &STATED_MS {
        if m.rem_euclid(pi) == 0 || (m - 256).rem_euclid(pi) == 0 {
            continue;
        }
        let inv = ctx.inv_p(m).expect("coprime");
        if data.table.truncated_quartic_series_p(inv) != 0 {
            continue;
        }
        premises += 1;
        let s = data.sum_s(m).expect("coprime");
        let ok = s == 0;
        if shown.is_none() || !ok {
            shown = Some((m, s, ok));
        }
        if !ok {
            break;
        }
    }
    let Some((m, s, ok)) = shown else {
        return VerdictReport::not_applicable(spec.id, p, spec.kind, "premise not met");
    };
    let mut w = Witnesses::new();
    w.push("m", m);
    w.push("premises", premises);
    report(
        spec,
        p,
        "truncated sum = 0 (mod p)",
        (s, 0, ctx.p2()),
        w,
        ok,
    )
}

fn verify_half_series(spec: &TheoremSpec, data: &PrimeData) -> VerdictReport {
    let ctx = &data.ctx;
    let p = ctx.p();
    let branch = "p = 1,3 (mod 8)";
    let lhs = data.table.single_series(ctx.inv_p2(128).expect("p > 3"));
    let Some(rep) = cornacchia(2, p)
        .ok()
        .flatten()
        .and_then(|r| normalize(r, Convention::OneModFour).ok())
    else {
        let mut r = VerdictReport::not_applicable(spec.id, p, spec.kind, branch);
        r.applicable = true;
        r.branch = format!("{branch} [no representation p = c^2 + 2d^2]");
        r.pass = false;
        return r;
    };
    let c = rep.x() as i128;
    let sign: i128 = if (p / 8 + ctx.half()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let p_over_2c = ctx.mul_p2(p as u128, ctx.inv_p2(2 * c).expect("c is a unit"));
    let rhs = ctx.reduce_p2(sign * (2 * c - p_over_2c as i128));
    let mut w = Witnesses::new();
    w.push("c", rep.x());
    w.push("d", rep.y());
    report(spec, p, branch, (lhs, rhs, ctx.p2()), w, lhs == rhs)
}

fn verify_zero_sums(spec: &TheoremSpec, parts: &[ZeroSum], data: &PrimeData) -> VerdictReport {
    let ctx = &data.ctx;
    let p = ctx.p();
    let active: Vec<&ZeroSum> = parts
        .iter()
        .filter(|z| (z.when)(p) && z.m.rem_euclid(p as i128) != 0)
        .collect();
    if active.is_empty() {
        return VerdictReport::not_applicable(spec.id, p, spec.kind, BRANCH_NA);
    }
    let mut w = Witnesses::new();
    let mut shown = None;
    for z in &active {
        let s = data.sum_s(z.m).expect("coprime");
        w.push(format!("S({})", z.m), s as i128);
        if shown.is_none() || (s != 0 && shown.is_some_and(|(_, v)| v == 0)) {
            shown = Some((z.m, s));
        }
    }
    let (_, lhs) = shown.expect("non-empty");
    let label = active
        .iter()
        .map(|z| z.label)
        .collect::<Vec<_>>()
        .join("; ");
    let pass = active.len() == w.iter().filter(|(_, v)| *v == 0).count();
    report(spec, p, label, (lhs, 0, ctx.p2()), w, pass)
}

/// Primes in `[pmin, pmax]`.
pub fn primes_in(pmin: u64, pmax: u64) -> Vec<u64> {
    (pmin..=pmax).filter(|&n| is_prime(n)).collect()
}

/// Verdicts for every prime of `primes` and every spec, ordered by prime
/// and then by registry position.
pub fn verify_primes(
    specs: &[&TheoremSpec],
    primes: &[u64],
    opts: &VerifyOptions,
    mode: Parallelism,
) -> Result<Vec<VerdictReport>> {
    if specs.is_empty() {
        return Ok(Vec::new());
    }
    let mut ordered: Vec<&TheoremSpec> = specs.to_vec();
    ordered.sort_by_key(|s| REGISTRY.iter().position(|r| r.id == s.id));
    ordered.dedup_by_key(|s| s.id);
    let per_prime = par::map_ordered(primes, mode, |&p| -> Result<Vec<VerdictReport>> {
        let data = PrimeData::new(p)?;
        Ok(ordered
            .iter()
            .map(|s| verify_with(s, &data, opts))
            .collect())
    });
    let mut out = Vec::new();
    for chunk in per_prime {
        out.extend(chunk?);
    }
    Ok(out)
}

/// [`verify_primes`] over all primes in `[pmin, pmax]`, `3 < pmin <= pmax`.
pub fn verify_range(
    specs: &[&TheoremSpec],
    pmin: u64,
    pmax: u64,
    opts: &VerifyOptions,
    mode: Parallelism,
) -> Result<Vec<VerdictReport>> {
    if pmin <= 3 || pmin > pmax {
        return Err(Error::InvalidArgument(format!(
            "prime range {pmin}..{pmax} must satisfy 3 < pmin <= pmax"
        )));
    }
    verify_primes(specs, &primes_in(pmin, pmax), opts, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: &str) -> &'static TheoremSpec {
        lookup(id).unwrap()
    }

    fn run(id: &str, p: u64) -> VerdictReport {
        verify(spec(id), p, &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn ids_are_unique() {
        for (i, a) in REGISTRY.iter().enumerate() {
            for b in &REGISTRY[i + 1..] {
                assert_ne!(a.id, b.id);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(spec("T3.1"), 11).unwrap();
        assert_eq!(c.label, "p = 1,2,4 (mod 7)");
        assert_eq!(c.witnesses.get("C"), Some(2));
        assert_eq!(c.witnesses.get("D"), Some(1));
        assert_eq!(
            classify(spec("T3.1"), 13).unwrap().label,
            "p = 3,5,6 (mod 7)"
        );
        assert_eq!(
            classify(spec("T3.5"), 17).unwrap().label,
            "p = 17,23 (mod 24)"
        );
        assert_eq!(classify(spec("T3.1"), 7).unwrap().label, BRANCH_EXCLUDED);
    }

    #[test]
    fn verify_examples() {
        let r = run("T3.1", 11);
        assert!(r.pass, "{r}");
        assert_eq!((r.lhs, r.rhs, r.modulus), (Some(5), Some(5), Some(11)));

        let r = run("RV256", 11);
        assert!(r.pass);
        assert_eq!((r.lhs, r.rhs, r.modulus), (Some(14), Some(14), Some(121)));

        let r = run("C2.3", 11);
        assert!(r.pass);
        assert_eq!((r.lhs, r.rhs), (Some(16), Some(16)));
        assert_eq!(r.witnesses.get("c"), Some(-3));

        let r = run("T3.1", 13);
        assert!(r.pass);
        assert_eq!((r.lhs, r.modulus), (Some(0), Some(169)));

        let r = run("T3.5", 17);
        assert!(r.pass);
        assert_eq!((r.lhs, r.modulus), (Some(0), Some(289)));
    }

    #[test]
    fn rajwade_sign_is_recorded() {
        let r = run("T3.1", 11);
        assert_eq!(r.witnesses.get("rajwade_sum"), Some(-4));
        assert_eq!(r.witnesses.get("rajwade_sign"), Some(-1));
        assert_eq!(r.witnesses.get("aux_ok"), Some(1));
    }

    #[test]
    fn exclusions() {
        let r = run("T3.1", 7);
        assert!(!r.applicable && r.pass && r.is_excluded());
        // 11 | 396^4 takes precedence over (29/11) = -1
        assert!(run("T3.8", 11).is_excluded());
        let r = run("T3.3", 11);
        assert_eq!(r.branch, BRANCH_NA);
    }

    #[test]
    fn select_groups() {
        let proven = select("all-proven").unwrap();
        assert!(proven.iter().all(|s| s.kind == Kind::Proven));
        assert_eq!(proven.len(), 16);
        let conj = select("all-conjectures").unwrap();
        assert_eq!(conj.len(), 10);
        assert_eq!(select("T3.7,RV256,T3.7").unwrap().len(), 2);
        assert!(select("T9.9").is_err());
        assert!(select("").unwrap().is_empty());
    }

    #[test]
    fn range_is_ordered_and_validated() {
        let specs = select("T3.11,T2.1").unwrap();
        let reports =
            verify_range(&specs, 5, 50, &VerifyOptions::default(), Parallelism::Auto).unwrap();
        let keys: Vec<(u64, &str)> = reports.iter().map(|r| (r.p, r.theorem.as_str())).collect();
        let mut sorted = keys.clone();
        sorted.sort_by_key(|(p, id)| (*p, REGISTRY.iter().position(|s| s.id == *id)));
        assert_eq!(keys, sorted);
        assert!(reports.iter().all(|r| r.pass));
        assert!(verify_range(&specs, 3, 50, &VerifyOptions::default(), Parallelism::Auto).is_err());
        assert!(
            verify_range(&specs, 60, 50, &VerifyOptions::default(), Parallelism::Auto).is_err()
        );
        assert!(
            verify_range(&[], 5, 50, &VerifyOptions::default(), Parallelism::Auto)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn triangle_at_small_prime() {
        let data = PrimeData::new(11).unwrap();
        let checks = consistency_triangle(256, &data).unwrap();
        assert_eq!(checks.len(), 1);
        assert!(checks[0].mod_p_holds(&data.ctx));
        assert_eq!(checks[0].mod_p2_holds(), Some(true));
    }
}
