//! Jacobi and Stieltjes continued fractions, evaluated bottom-up to a finite
//! depth, and the named series they generate.
//!
//! The J-fraction `J(x; τ, ρ) = 1/(1 - τ_0 x - ρ_0 x²/(1 - τ_1 x - ...))`
//! enumerates weighted Motzkin paths; the S-fraction used here consumes one
//! `x` per level, `S(x; ρ) = 1/(1 - ρ_0 x/(1 - ρ_1 x/...))`, and enumerates
//! weighted Dyck paths with `x` marking a step pair.

use num_traits::One;

use crate::counts::{double_factorial, factorial, root_pairings};
use crate::series::Series;
use crate::{Error, Int, Rational};

/// Truncation of `J(x; τ, ρ)` to `order`.  Coefficients through `x^N`
/// depend only on `τ_0..τ_{⌈N/2⌉}` and `ρ_0..ρ_{⌈N/2⌉-1}`, so evaluation
/// starts from depth `⌈N/2⌉ + 1` with tail 1.
pub fn jfraction(tau: impl Fn(usize) -> Int, rho: impl Fn(usize) -> Int, order: usize) -> Series {
    let depth = order.div_ceil(2) + 1;
    let mut level = Series::one(order);
    for j in (0..depth).rev() {
        // 1 - tau_j x - rho_j x^2 * level
        let mut denom = level.mul(&Series::from_fn(order, |k| {
            if k == 2 {
                -rho(j)
            } else {
                Int::from(0)
            }
        }));
        denom = denom.add(&Series::from_fn(order, |k| match k {
            0 => Int::one(),
            1 => -tau(j),
            _ => Int::from(0),
        }));
        level = denom.inv().expect("constant term is 1");
    }
    level
}

/// Truncation of `S(x; ρ) = 1/(1 - ρ_0 x/(1 - ρ_1 x/...))` to `order`.
pub fn sfraction(rho: impl Fn(usize) -> Int, order: usize) -> Series {
    let depth = order + 1;
    let mut level = Series::one(order);
    for j in (0..depth).rev() {
        let mut denom = level.mul(&Series::from_fn(order, |k| {
            if k == 1 {
                -rho(j)
            } else {
                Int::from(0)
            }
        }));
        denom = denom.add(&Series::one(order));
        level = denom.inv().expect("constant term is 1");
    }
    level
}

/// Set-partition generating function `β(u_1, u_2, t, x)`: the coefficient of
/// `x^n` sums `u_1^{n_1} u_2^{n_2} t^s` over set partitions of `[n]` with
/// `n_1` singleton classes, `n_2` larger classes and `s` transient elements.
/// Equals `J(x; (u_1 + n t), ((n+1) u_2))`.
pub fn flajolet_beta(u1: &Int, u2: &Int, t: &Int, order: usize) -> Series {
    let (u1, u2, t) = (u1.clone(), u2.clone(), t.clone());
    jfraction(
        move |n| &u1 + &t * Int::from(n as u64),
        move |n| &u2 * Int::from(n as u64 + 1),
        order,
    )
}

/// The coefficient families carried by the named series.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesKind {
    /// `Σ (2n-1)!! x^n`: perfect matchings of `2n` points.
    PerfectMatchings,
    /// `Σ n! x^n`.
    Factorials,
    /// `Σ i_n x^n`: involutions of `S_n`.
    Involutions,
    /// `Σ o_w(n) x^n`: partial pairings with pair weight `w` (possibly a
    /// non-integer rational, provided all emitted coefficients are integers).
    WeightedInvolutions(Rational),
}

/// Closed-form coefficients of a named series evaluated at `scale · x`,
/// truncated to `order`.  Non-integer coefficients are reported as an error
/// (they signal an invalid weight/scale pairing).
pub fn named_series(kind: &SeriesKind, scale: &Int, order: usize) -> Result<Series, Error> {
    let coeff = |n: usize| -> Rational {
        match kind {
            SeriesKind::PerfectMatchings => Rational::from(double_factorial(2 * n as i64 - 1)),
            SeriesKind::Factorials => Rational::from(factorial(n as u64)),
            SeriesKind::Involutions => Rational::from(root_pairings(n as u64, &Rational::one())),
            SeriesKind::WeightedInvolutions(w) => {
                let total: Rational = (0..=n / 2)
                    .map(|k| {
                        Rational::from(
                            crate::counts::binomial(n as u64, 2 * k as u64)
                                * double_factorial(2 * k as i64 - 1),
                        ) * w.pow(k as i32)
                    })
                    .sum();
                total
            }
        }
    };
    let mut out = Vec::with_capacity(order + 1);
    let mut scale_pow = Rational::one();
    for n in 0..=order {
        let v = coeff(n) * &scale_pow;
        if !v.is_integer() {
            return Err(Error::NonIntegerCoefficient(n, v.to_string()));
        }
        out.push(v.to_integer());
        scale_pow *= Rational::from(scale.clone());
    }
    Ok(Series::from_coeffs(out))
}
