//! Arbitrary-precision integers and canonical rationals.
//!
//! The symbolic kernel uses exactly one scalar type: [`BigRational`], a
//! fraction of arbitrary-precision integers kept in canonical form
//! (denominator positive, numerator and denominator coprime, zero is `0/1`).
//! The representation is delegated to `num-bigint`/`num-rational`; this
//! module owns the canonical-form contract, the string interface and the
//! handful of named operations the rest of the crate builds on.

use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Arithmetic errors surfaced by the exact kernel.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}` as an exact rational")]
    Parse(String),
}

/// Nonnegative greatest common divisor, with `gcd(0, 0) = 0`.
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

/// Builds the canonical rational `num/den`.
///
/// The sign is carried by the numerator and the fraction is reduced, so two
/// equal rationals always have identical representations.
pub fn rat_canon(num: BigInt, den: BigInt) -> Result<BigRational, ArithError> {
    if den.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

/// Binary operations on rationals, as a single dispatch point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` exactly; division by zero is an error, never a panic.
pub fn rat_ops(a: &BigRational, b: &BigRational, op: RatOp) -> Result<BigRational, ArithError> {
    match op {
        RatOp::Add => Ok(a + b),
        RatOp::Sub => Ok(a - b),
        RatOp::Mul => Ok(a * b),
        RatOp::Div => {
            if b.is_zero() {
                Err(ArithError::DivisionByZero)
            } else {
                Ok(a / b)
            }
        }
    }
}

/// Shorthand for small rational constants.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for small integer constants.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"2"`, `"-3/10"` or a decimal literal like `"1.5"` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| ArithError::Parse(s.to_string()))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| ArithError::Parse(s.to_string()))?;
        return rat_canon(n, d);
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let w = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            BigInt::from_str(whole).map_err(|_| ArithError::Parse(s.to_string()))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ArithError::Parse(s.to_string()));
        }
        let f = BigInt::from_str(frac).map_err(|_| ArithError::Parse(s.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = w.abs() * &scale + f;
        let num = if neg { -mag } else { mag };
        return rat_canon(num, scale);
    }
    let n = BigInt::from_str(s).map_err(|_| ArithError::Parse(s.to_string()))?;
    Ok(BigRational::from_integer(n))
}

/// Prints in the canonical `"n"` / `"n/d"` form accepted by [`parse_rational`].
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(int_gcd(&BigInt::from(12), &BigInt::from(18)), BigInt::from(6));
        assert_eq!(int_gcd(&BigInt::from(0), &BigInt::from(5)), BigInt::from(5));
        assert_eq!(int_gcd(&BigInt::from(-4), &BigInt::from(6)), BigInt::from(2));
        assert_eq!(int_gcd(&BigInt::zero(), &BigInt::zero()), BigInt::zero());
    }

    #[test]
    fn canonical_form() {
        let q = rat_canon(BigInt::from(2), BigInt::from(-4)).unwrap();
        assert_eq!(q, rat(-1, 2));
        assert!(q.denom().is_positive());
        let z = rat_canon(BigInt::from(0), BigInt::from(7)).unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(rat_canon(BigInt::from(6), BigInt::from(3)).unwrap(), int(2));
        assert_eq!(
            rat_canon(BigInt::one(), BigInt::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn canon_is_idempotent() {
        let q = rat_canon(BigInt::from(-10), BigInt::from(15)).unwrap();
        let again = rat_canon(q.numer().clone(), q.denom().clone()).unwrap();
        assert_eq!(q, again);
    }

    #[test]
    fn ops() {
        assert_eq!(rat_ops(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap(), rat(5, 6));
        assert_eq!(rat_ops(&rat(3, 10), &rat(1, 2), RatOp::Mul).unwrap(), rat(3, 20));
        assert_eq!(
            rat_ops(&rat(1, 2), &int(0), RatOp::Div),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["-3/10", "2", "0", "7/3", "-11"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert_eq!(parse_rational("1.5").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn field_axioms_on_random_rationals() {
        // Deterministic pseudo-random walk over small rationals.
        let mut vals = Vec::new();
        let mut x: i64 = 17;
        for _ in 0..24 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = (x >> 33) % 40 - 20;
            let d = ((x >> 12) % 19).abs() + 1;
            vals.push(rat(n, d));
        }
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
            }
            if !a.is_zero() {
                assert_eq!(a * (int(1) / a), int(1));
            }
            assert_eq!(a + (-a), int(0));
        }
    }
}
