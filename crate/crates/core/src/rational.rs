//! Exact rational helpers: parsing decimal/fraction literals, rational
//! bounds on square roots, and decimal rendering.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Parses `3`, `-1.25`, `2e-3`, `1/3` or `-7/2` exactly.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

const SQRT_DIGITS: usize = 40;

fn sqrt_scaled(q: &BigRational) -> (BigInt, BigInt, bool) {
    // sqrt(a/b) = sqrt(a·b)/b, evaluated at 10^-SQRT_DIGITS resolution.
    assert!(!q.is_negative(), "square root of a negative number");
    let scale = num_traits::pow(BigInt::from(10), SQRT_DIGITS);
    let n = q.numer() * q.denom() * &scale * &scale;
    let s = n.sqrt();
    let exact = &s * &s == n;
    (s, q.denom() * scale, exact)
}

/// A rational `u ≥ √q` within 10^-40 relative precision (exact when `q`
/// is the square of a rational with small enough denominator).
pub fn sqrt_upper(q: &BigRational) -> BigRational {
    let (s, d, exact) = sqrt_scaled(q);
    let s = if exact { s } else { s + 1 };
    BigRational::new(s, d)
}

/// A rational `l ≤ √q`, the counterpart of [`sqrt_upper`].
pub fn sqrt_lower(q: &BigRational) -> BigRational {
    let (s, d, _) = sqrt_scaled(q);
    BigRational::new(s, d)
}

/// `p/q` (or just `p` for integers).
pub fn to_fraction_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering rounded to 12 significant digits, without trailing
/// zeros.
pub fn to_decimal_string(x: &BigRational) -> String {
    const SIG: i64 = 12;
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let a = x.abs();
    // exponent e with 10^e ≤ a < 10^(e+1)
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut e: i64 = (a.numer().to_string().len() as i64) - (a.denom().to_string().len() as i64);
    let pow = |k: i64| -> BigRational {
        if k >= 0 {
            num_traits::pow(ten.clone(), k as usize)
        } else {
            num_traits::pow(ten.clone(), (-k) as usize).recip()
        }
    };
    while pow(e) > a {
        e -= 1;
    }
    while pow(e + 1) <= a {
        e += 1;
    }
    let shift = SIG - 1 - e;
    let scaled = &a * pow(shift);
    let mut digits = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let mut shift = shift;
    if digits.to_string().len() as i64 > SIG {
        digits /= 10;
        shift -= 1;
    }
    let mut s = digits.to_string();
    let out = if shift <= 0 {
        s.push_str(&"0".repeat((-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        if s.len() <= shift {
            s = format!("{}{}", "0".repeat(shift - s.len() + 1), s);
        }
        let (int, frac) = s.split_at(s.len() - shift);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    if negative {
        format!("-{out}")
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("3"), Some(r(3, 1)));
        assert_eq!(parse_rational("-1.25"), Some(r(-5, 4)));
        assert_eq!(parse_rational("0.1"), Some(r(1, 10)));
        assert_eq!(parse_rational("2e-3"), Some(r(1, 500)));
        assert_eq!(parse_rational("1.5E2"), Some(r(150, 1)));
        assert_eq!(parse_rational(" 1/3 "), Some(r(1, 3)));
        assert_eq!(parse_rational(".5"), Some(r(1, 2)));
        for bad in ["", "abc", "1/0", "1..2", "-", "1.2.3", "nan"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn square_root_bounds() {
        assert_eq!(sqrt_upper(&r(9, 4)), r(3, 2));
        assert_eq!(sqrt_lower(&r(9, 4)), r(3, 2));
        let two = r(2, 1);
        let (lo, hi) = (sqrt_lower(&two), sqrt_upper(&two));
        assert!(&lo * &lo < two && &hi * &hi > two);
        assert!(&hi - &lo <= BigRational::new(1.into(), num_traits::pow(BigInt::from(10), 40)));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal_string(&r(5, 8)), "0.625");
        assert_eq!(to_decimal_string(&r(1, 3)), "0.333333333333");
        assert_eq!(to_decimal_string(&r(2, 3)), "0.666666666667");
        assert_eq!(to_decimal_string(&r(-7, 2)), "-3.5");
        assert_eq!(to_decimal_string(&r(1, 1)), "1");
        assert_eq!(to_decimal_string(&r(0, 1)), "0");
        assert_eq!(to_decimal_string(&r(123456789012345, 1)), "123456789012000");
        assert_eq!(to_decimal_string(&r(1, 1000)), "0.001");
        assert_eq!(to_fraction_string(&r(5, 8)), "5/8");
        assert_eq!(to_fraction_string(&r(4, 2)), "2");
    }
}
