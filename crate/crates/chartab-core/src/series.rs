//! Truncated univariate formal power series with exact integer coefficients.
//!
//! A [`Series`] holds coefficients `c_0..c_N` of `Σ c_k x^k + O(x^{N+1})`.
//! All arithmetic is exact through the truncation order and never reads
//! beyond it; binary operations truncate to the smaller order.

use num_traits::{One, Zero};

use crate::{Error, Int};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Int>,
}

impl Series {
    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Int::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Int::one();
        s
    }

    /// Builds a series from a coefficient function.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Int) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn from_coeffs(coeffs: Vec<Int>) -> Self {
        assert!(!coeffs.is_empty());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Int {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Re-truncates to a smaller or equal order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series::from_fn(n, |k| &self.coeffs[k] + &other.coeffs[k])
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series::from_fn(n, |k| &self.coeffs[k] - &other.coeffs[k])
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![Int::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn scale(&self, c: &Int) -> Series {
        Series::from_fn(self.order(), |k| &self.coeffs[k] * c)
    }

    /// Multiplicative inverse; requires constant term ±1 so the result stays
    /// integral.
    pub fn inv(&self) -> Result<Series, Error> {
        let c0 = &self.coeffs[0];
        if !(c0 == &Int::one() || c0 == &(-Int::one())) {
            return Err(Error::NonUnitConstant);
        }
        let n = self.order();
        let mut out = vec![Int::zero(); n + 1];
        out[0] = c0.clone(); // 1/c0 = c0 for c0 = ±1
        for k in 1..=n {
            let mut acc = Int::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -c0 * acc; // divide by c0
        }
        Ok(Series { coeffs: out })
    }

    /// Substitutes `x -> c * x^k`: maps `Σ c_j x^j` to `Σ c_j (c x^k)^j`,
    /// truncated at the original order.  Requires `k >= 1`.
    pub fn substitute(&self, c: &Int, k: usize) -> Result<Series, Error> {
        if k == 0 {
            return Err(Error::ZeroSubstitution);
        }
        let n = self.order();
        let mut out = vec![Int::zero(); n + 1];
        let mut cpow = Int::one();
        for j in 0..=n / k {
            if !self.coeffs[j].is_zero() {
                out[j * k] += &self.coeffs[j] * &cpow;
            }
            cpow *= c;
        }
        Ok(Series { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient by 2, asserting exactness.
    pub fn halve(&self) -> Series {
        Series::from_fn(self.order(), |k| {
            let c = &self.coeffs[k];
            assert!(
                (c % Int::from(2)).is_zero(),
                "coefficient {c} at x^{k} is odd"
            );
            c / 2
        })
    }
}

/// Which binomial a product factor is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSign {
    /// `(1 - q^d)^{-e}`
    Minus,
    /// `(1 + q^d)^{-e}`
    Plus,
}

/// One factor `∏_{j≥1} (1 ∓ q^{modulus·j + residue})^{-exponent}` of a
/// partition-style infinite product.
#[derive(Debug, Clone, Copy)]
pub struct ProductFactor {
    pub residue: i64,
    pub modulus: u64,
    pub exponent: u32,
    pub sign: FactorSign,
}

impl ProductFactor {
    pub fn new(residue: i64, modulus: u64, exponent: u32, sign: FactorSign) -> Self {
        assert!(modulus >= 1);
        ProductFactor {
            residue,
            modulus,
            exponent,
            sign,
        }
    }

    /// `∏_{j≥1} 1/(1 - q^{m·j + a})`.
    pub fn inv_minus(residue: i64, modulus: u64) -> Self {
        Self::new(residue, modulus, 1, FactorSign::Minus)
    }
}

/// Exact coefficients of the product of the given factors through `order`.
/// Factors whose lowest nonconstant term exceeds the order contribute 1, so
/// the infinite products are truncated structurally.
pub fn partition_product(factors: &[ProductFactor], order: usize) -> Series {
    let mut acc = Series::one(order);
    for f in factors {
        let mut j: i64 = 1;
        loop {
            let d = f.modulus as i64 * j + f.residue;
            assert!(d > 0, "factor exponent must be positive at j={j}");
            if d as usize > order {
                break;
            }
            // (1 ∓ q^d)^{-1} expanded directly as a geometric-style series
            let base = Series::from_fn(order, |k| {
                if k % d as usize == 0 {
                    match f.sign {
                        FactorSign::Minus => Int::one(),
                        FactorSign::Plus => {
                            if (k / d as usize) % 2 == 0 {
                                Int::one()
                            } else {
                                -Int::one()
                            }
                        }
                    }
                } else {
                    Int::zero()
                }
            });
            for _ in 0..f.exponent {
                acc = acc.mul(&base);
            }
            j += 1;
        }
    }
    acc
}

/// Generating function for partitions with all parts divisible by
/// `part_scale` and an even number of parts:
/// `(∏ 1/(1-q^{s·j}) + ∏ 1/(1+q^{s·j})) / 2`.
pub fn even_length_partitions(part_scale: u64, order: usize) -> Series {
    let minus = partition_product(&[ProductFactor::inv_minus(0, part_scale)], order);
    let plus = partition_product(
        &[ProductFactor::new(0, part_scale, 1, FactorSign::Plus)],
        order,
    );
    minus.add(&plus).halve()
}
