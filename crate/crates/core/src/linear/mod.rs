//! Exact rational scalars, sparse combinations and elimination.

mod elim;
mod lincomb;
mod linmap;

pub use elim::{kernel_basis, rank, solve, SpanBasis};
pub use lincomb::{tensor, Basis, LinComb};
pub use linmap::LinMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse { path: String::new(), message: format!("not a rational: {s:?}") };
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Scalar::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_are_canonical() {
        assert_eq!(ratio(2, -4), ratio(-1, 2));
        assert_eq!(*ratio(0, 5).denom(), BigInt::from(1));
        assert_eq!(parse_scalar(" 6/4 ").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
