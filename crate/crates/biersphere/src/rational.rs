//! Exact rational scalars: construction, parsing, formatting, rationalization.

use num::bigint::{BigInt, Sign};
use num::{BigRational, One, Signed, ToPrimitive, Zero};

/// The scalar used for all exact arithmetic in this crate.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats with an explicit denominator only when it is not 1 (e.g. `3`, `-21/5`).
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses an integer (`-3`), a fraction (`21/5`), or a decimal literal
/// (`2.58418`, read exactly as 258418/100000).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".into());
    }
    if let Some((num, den)) = s.split_once('/') {
        let p: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator {num:?}"))?;
        let q: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator {den:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let neg = int_part.trim_start().starts_with('-');
        let int_digits = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            "0".to_string()
        } else {
            int_part.to_string()
        };
        let whole: BigInt = int_digits
            .parse()
            .map_err(|_| format!("bad decimal {s:?}"))?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let tail: BigInt = frac_part.parse().map_err(|_| format!("bad decimal {s:?}"))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut num = whole.abs() * &scale + tail;
        if neg {
            num = -num;
        }
        return Ok(Rational::new(num, scale));
    }
    let p: BigInt = s.parse().map_err(|_| format!("bad integer {s:?}"))?;
    Ok(Rational::from_integer(p))
}

/// Nearest-in-spirit f64 value (for search heuristics only).
pub fn approx_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a crude quotient for values outside f64 range.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Best rational approximation of `x` with denominator at most `max_denom`,
/// via the continued-fraction convergents of `x`. Returns `None` for
/// non-finite input.
pub fn rationalize(x: f64, max_denom: u64) -> Option<Rational> {
    if !x.is_finite() || max_denom == 0 {
        return None;
    }
    let neg = x < 0.0;
    let mut x = x.abs();
    let bound = BigInt::from(max_denom);

    // Convergents p/q of the continued fraction of x.
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from(x.floor() as i64), BigInt::one());
    x -= x.floor();
    for _ in 0..64 {
        if x.abs() < 1e-15 {
            break;
        }
        x = 1.0 / x;
        let a = x.floor();
        if a >= 9.0e18 {
            break;
        }
        x -= a;
        let a = BigInt::from(a as i64);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > bound {
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    let _ = (p0, q0);
    if q1.is_zero() {
        return None;
    }
    let mut out = Rational::new(p1, q1);
    if neg {
        out = -out;
    }
    Some(out)
}

/// Scales a row of rationals by a positive factor so the entries become a
/// primitive integer vector (gcd 1), preserving signs. All-zero rows are
/// returned unchanged.
pub fn primitive_integer_row(row: &[Rational]) -> Vec<BigInt> {
    use num::Integer;
    let mut lcm = BigInt::one();
    for r in row {
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if gcd.is_zero() || gcd.is_one() {
        return ints;
    }
    ints.into_iter().map(|v| v / &gcd).collect()
}

/// Sign of a big integer as -1/0/1 (convenience for comparisons in tests).
pub fn bigint_sign(v: &BigInt) -> i32 {
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_decimals() {
        assert_eq!(parse_rational("21/5").unwrap(), frac(21, 5));
        assert_eq!(parse_rational("-21/5").unwrap(), frac(-21, 5));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-42").unwrap(), rat(-42));
        assert_eq!(parse_rational("2.58418").unwrap(), frac(258418, 100000));
        assert_eq!(parse_rational("-7.84043").unwrap(), frac(-784043, 100000));
        assert_eq!(parse_rational("0.5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational(".5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-.5").unwrap(), frac(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a.b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn decimal_parse_is_exact() {
        // 2.58418 must become exactly 258418/100000 = 129209/50000.
        let r = parse_rational("2.58418").unwrap();
        assert_eq!(r, frac(129209, 50000));
    }

    #[test]
    fn format_round_trips() {
        for r in [frac(21, 5), rat(-3), frac(-1675, 264), rat(0)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn rationalize_recovers_simple_fractions() {
        let x = 51.0 / 25.0;
        assert_eq!(rationalize(x, 1_000_000).unwrap(), frac(51, 25));
        let x = -131.0 / 100.0;
        assert_eq!(rationalize(x, 1_000_000).unwrap(), frac(-131, 100));
        assert_eq!(rationalize(1.0, 10).unwrap(), rat(1));
        assert!(rationalize(f64::NAN, 100).is_none());
    }

    #[test]
    fn rationalize_respects_denominator_bound() {
        let r = rationalize(std::f64::consts::PI, 1000).unwrap();
        assert!(*r.denom() <= BigInt::from(1000));
        // 355/113 is the classic best approximation under 1000.
        assert_eq!(r, frac(355, 113));
    }

    #[test]
    fn primitive_rows() {
        let row = vec![frac(1, 2), frac(-3, 4), rat(0)];
        let ints = primitive_integer_row(&row);
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
