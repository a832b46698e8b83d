//! Truncated power series `c_0 + c_1 x + ... + c_N x^N` with exact integer
//! coefficients or coefficients reduced modulo `m`.
//!
//! The modulus is part of the value: combining series with different moduli
//! or truncation orders is an error, never a coercion.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("modulus mismatch: {0:?} vs {1:?}")]
    ModulusMismatch(Option<u64>, Option<u64>),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant term {0} is not a unit")]
    NonUnit(String),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("factor step must be positive")]
    ZeroStep,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Coeffs {
    Exact(Vec<BigInt>),
    Modular { modulus: u64, values: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Coeffs,
}

fn reduce_i128(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

fn reduce_big(v: &BigInt, m: u64) -> u64 {
    v.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue fits below modulus")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| reduce_i128(e.x, m))
}

impl TruncatedSeries {
    /// Exact series; `coeffs` is zero-padded or truncated to `order + 1` terms.
    pub fn exact(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self {
            order,
            coeffs: Coeffs::Exact(coeffs),
        }
    }

    /// Series over `Z/mZ`; coefficients are reduced into `[0, m)`.
    pub fn modular(order: usize, modulus: u64, coeffs: &[BigInt]) -> Result<Self, SeriesError> {
        if modulus == 0 {
            return Err(SeriesError::ZeroModulus);
        }
        let mut values: Vec<u64> = coeffs.iter().map(|c| reduce_big(c, modulus)).collect();
        values.resize(order + 1, 0);
        Ok(Self {
            order,
            coeffs: Coeffs::Modular { modulus, values },
        })
    }

    pub fn from_i64s(
        order: usize,
        modulus: Option<u64>,
        coeffs: &[i64],
    ) -> Result<Self, SeriesError> {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        match modulus {
            None => Ok(Self::exact(order, big)),
            Some(m) => Self::modular(order, m, &big),
        }
    }

    pub fn zero(order: usize, modulus: Option<u64>) -> Result<Self, SeriesError> {
        Self::from_i64s(order, modulus, &[])
    }

    pub fn one(order: usize, modulus: Option<u64>) -> Result<Self, SeriesError> {
        Self::from_i64s(order, modulus, &[1])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn modulus(&self) -> Option<u64> {
        match &self.coeffs {
            Coeffs::Exact(_) => None,
            Coeffs::Modular { modulus, .. } => Some(*modulus),
        }
    }

    /// Coefficient of `x^n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> BigInt {
        match &self.coeffs {
            Coeffs::Exact(c) => c.get(n).cloned().unwrap_or_default(),
            Coeffs::Modular { values, .. } => {
                values.get(n).map_or_else(BigInt::zero, |&v| v.into())
            }
        }
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        (0..=self.order).map(|n| self.coeff(n)).collect()
    }

    /// Reduces every coefficient modulo `m`; a modular series must have `m`
    /// dividing its current modulus.
    pub fn reduce(&self, m: u64) -> Result<Self, SeriesError> {
        if let Some(cur) = self.modulus() {
            if m == 0 || cur % m != 0 {
                return Err(SeriesError::ModulusMismatch(Some(cur), Some(m)));
            }
        }
        Self::modular(self.order, m, &self.coeffs())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.modulus() != other.modulus() {
            return Err(SeriesError::ModulusMismatch(
                self.modulus(),
                other.modulus(),
            ));
        }
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    /// Multiplies in place by `(1 - x^step)`.
    pub fn mul_binomial(&mut self, step: usize) {
        if step == 0 {
            self.scale_to_zero();
            return;
        }
        match &mut self.coeffs {
            Coeffs::Exact(c) => {
                for n in (step..c.len()).rev() {
                    let (lo, hi) = c.split_at_mut(n);
                    hi[0] -= &lo[n - step];
                }
            }
            Coeffs::Modular { modulus, values } => {
                for n in (step..values.len()).rev() {
                    values[n] = sub_mod(values[n], values[n - step], *modulus);
                }
            }
        }
    }

    /// Divides in place by `(1 - x^step)`, i.e. multiplies by `1 + x^step + x^{2 step} + ...`.
    pub fn div_binomial(&mut self, step: usize) -> Result<(), SeriesError> {
        if step == 0 {
            return Err(SeriesError::NonUnit("0".into()));
        }
        match &mut self.coeffs {
            Coeffs::Exact(c) => {
                for n in step..c.len() {
                    let (lo, hi) = c.split_at_mut(n);
                    hi[0] += &lo[n - step];
                }
            }
            Coeffs::Modular { modulus, values } => {
                for n in step..values.len() {
                    values[n] = add_mod(values[n], values[n - step], *modulus);
                }
            }
        }
        Ok(())
    }

    fn scale_to_zero(&mut self) {
        match &mut self.coeffs {
            Coeffs::Exact(c) => c.iter_mut().for_each(|v| v.set_zero()),
            Coeffs::Modular { values, .. } => values.iter_mut().for_each(|v| *v = 0),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        json!({
            "order": self.order,
            "modulus": self.modulus(),
            "coeffs": coeffs,
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{n}")?,
                (_, false) => write!(f, "{mag}x^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)?;
        if let Some(m) = self.modulus() {
            write!(f, " (mod {m})")?;
        }
        Ok(())
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
) -> Result<TruncatedSeries, SeriesError> {
    a.check_compatible(b)?;
    let len = a.order + 1;
    let coeffs = match (&a.coeffs, &b.coeffs) {
        (Coeffs::Exact(x), Coeffs::Exact(y)) => {
            let mut out = vec![BigInt::zero(); len];
            for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (j, yj) in y[..len - i].iter().enumerate() {
                    out[i + j] += xi * yj;
                }
            }
            Coeffs::Exact(out)
        }
        (Coeffs::Modular { modulus, values: x }, Coeffs::Modular { values: y, .. }) => {
            let m = *modulus as u128;
            let mut out = vec![0u128; len];
            for (i, &xi) in x.iter().enumerate().filter(|(_, &v)| v != 0) {
                for (j, &yj) in y[..len - i].iter().enumerate() {
                    out[i + j] = (out[i + j] + xi as u128 * yj as u128) % m;
                }
            }
            Coeffs::Modular {
                modulus: *modulus,
                values: out.into_iter().map(|v| v as u64).collect(),
            }
        }
        _ => unreachable!("moduli checked above"),
    };
    Ok(TruncatedSeries {
        order: a.order,
        coeffs,
    })
}

/// Multiplicative inverse to the same order. The constant term must be a unit.
pub fn series_invert(a: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let len = a.order + 1;
    let coeffs = match &a.coeffs {
        Coeffs::Exact(x) => {
            let c0 = &x[0];
            if !(c0.is_one() || (-c0).is_one()) {
                return Err(SeriesError::NonUnit(c0.to_string()));
            }
            // c0 is its own inverse
            let mut out: Vec<BigInt> = Vec::with_capacity(len);
            out.push(c0.clone());
            for n in 1..len {
                let s: BigInt = (1..=n).map(|k| &x[k] * &out[n - k]).sum();
                out.push(-(s * c0));
            }
            Coeffs::Exact(out)
        }
        Coeffs::Modular { modulus, values: x } => {
            let m = *modulus;
            let inv = inverse_mod(x[0], m).ok_or_else(|| SeriesError::NonUnit(x[0].to_string()))?;
            let mut out: Vec<u64> = Vec::with_capacity(len);
            out.push(inv % m);
            for n in 1..len {
                let s = (1..=n).fold(0u128, |acc, k| {
                    (acc + x[k] as u128 * out[n - k] as u128) % m as u128
                }) as u64;
                out.push(sub_mod(0, mul_mod(s, inv, m), m));
            }
            Coeffs::Modular {
                modulus: m,
                values: out,
            }
        }
    };
    Ok(TruncatedSeries {
        order: a.order,
        coeffs,
    })
}

/// `∏_{(s, e)} ∏_{i ≥ 1} (1 - x^{s i})^e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredProduct {
    factors: Vec<(usize, i64)>,
}

impl FactoredProduct {
    pub fn new(factors: Vec<(usize, i64)>) -> Result<Self, SeriesError> {
        if factors.iter().any(|&(s, _)| s == 0) {
            return Err(SeriesError::ZeroStep);
        }
        Ok(Self { factors })
    }

    /// `∏ (1 - x^{step i})^exponent`.
    pub fn single(step: usize, exponent: i64) -> Result<Self, SeriesError> {
        Self::new(vec![(step, exponent)])
    }

    pub fn factors(&self) -> &[(usize, i64)] {
        &self.factors
    }

    /// Parses `"1:-2,5:-1"` as `[(1, -2), (5, -1)]`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let factors = text
            .split(',')
            .map(|tok| {
                let (s, e) = tok
                    .trim()
                    .split_once(':')
                    .ok_or_else(|| format!("expected step:exponent, got {tok:?}"))?;
                let s: usize = s.trim().parse().map_err(|_| format!("bad step {s:?}"))?;
                let e: i64 = e
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad exponent {e:?}"))?;
                Ok((s, e))
            })
            .collect::<Result<Vec<_>, String>>()?;
        Self::new(factors).map_err(|e| e.to_string())
    }
}

/// Expands a factored product to `order`, exactly or modulo `modulus`.
///
/// Each binomial `1 - x^k` is applied `|e|` times, multiplying for positive
/// exponents and dividing for negative ones.
pub fn expand_product(
    f: &FactoredProduct,
    order: usize,
    modulus: Option<u64>,
) -> Result<TruncatedSeries, SeriesError> {
    let mut out = TruncatedSeries::one(order, modulus)?;
    for &(step, exponent) in &f.factors {
        for k in (1..).map(|i| i * step).take_while(|&k| k <= order) {
            for _ in 0..exponent.unsigned_abs() {
                if exponent > 0 {
                    out.mul_binomial(k);
                } else {
                    out.div_binomial(k)?;
                }
            }
        }
    }
    Ok(out)
}

/// `Σ_{n ≥ 0} (-1)^n (2n+1) x^{n(n+1)/2}`, built term by term.
pub fn jacobi_cube(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for n in 0usize.. {
        let t = n * (n + 1) / 2;
        if t > order {
            break;
        }
        let mag = BigInt::from(2 * n + 1);
        coeffs[t] = if n % 2 == 0 { mag } else { -mag };
    }
    TruncatedSeries::exact(order, coeffs)
}

/// Checks, over `Z/5Z` and to `order`, that `1/(1-t)^2 = (1-t)^3/(1-t^5)`
/// and the product form `∏(1-x^j)^{-2} = ∏(1-x^j)^3 / ∏(1-x^{5j})`.
pub fn verify_mod5_factor_identity(order: usize) -> bool {
    mod5_factor_mismatch(order).is_none()
}

/// First coefficient index where either side of the mod-5 factor identity
/// disagrees, or `None` when both forms hold to `order`.
pub fn mod5_factor_mismatch(order: usize) -> Option<usize> {
    let first_diff =
        |a: &TruncatedSeries, b: &TruncatedSeries| (0..=order).find(|&n| a.coeff(n) != b.coeff(n));
    let (lhs, rhs, pp, product) = mod5_factor_sides(order).expect("all constant terms are 1");
    first_diff(&lhs, &rhs).or_else(|| first_diff(&pp, &product))
}

type FactorSides = (
    TruncatedSeries,
    TruncatedSeries,
    TruncatedSeries,
    TruncatedSeries,
);

fn mod5_factor_sides(order: usize) -> Result<FactorSides, SeriesError> {
    let m = Some(5);
    let one_minus_t = TruncatedSeries::from_i64s(order, m, &[1, -1])?;
    let square = series_mul(&one_minus_t, &one_minus_t)?;
    let cube = series_mul(&square, &one_minus_t)?;
    let mut one_minus_t5 = TruncatedSeries::one(order, m)?;
    one_minus_t5.mul_binomial(5);

    let lhs = series_invert(&square)?;
    let rhs = series_mul(&cube, &series_invert(&one_minus_t5)?)?;

    let pp = expand_product(&FactoredProduct::single(1, -2)?, order, m)?;
    let eta_cube = expand_product(&FactoredProduct::single(1, 3)?, order, m)?;
    let p_of_x5 = expand_product(&FactoredProduct::single(5, -1)?, order, m)?;
    let product = series_mul(&eta_cube, &p_of_x5)?;
    Ok((lhs, rhs, pp, product))
}
