//! Exact rational scalars and their `"p/q"` text form.

use num_rational::Rational64;
use num_traits::Signed;

use crate::error::{Error, Result};

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Parses `"3"`, `"-1/2"`, `" 4 / 6 "`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::input(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::input(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(q).map_err(|_| bad()),
    }
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True for 0, 1, 2, ...
pub fn is_nonneg_integer(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_q(" 4 / 6 ").unwrap(), frac(2, 3));
        assert_eq!(format_q(&frac(6, 3)), "2");
        assert_eq!(format_q(&frac(-3, 6)), "-1/2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
    }

    #[test]
    fn z_plus_membership() {
        assert!(is_nonneg_integer(&q(0)));
        assert!(is_nonneg_integer(&q(5)));
        assert!(!is_nonneg_integer(&q(-1)));
        assert!(!is_nonneg_integer(&frac(1, 2)));
    }
}
