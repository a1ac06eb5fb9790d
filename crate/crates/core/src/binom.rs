//! Checked binomial coefficients.

use crate::error::{Error, Result};

/// `C(n, k)` with checked 64-bit arithmetic.
///
/// Returns an overflow error instead of wrapping; for the graph sizes this
/// crate supports (`n <= 64`) every value fits, but construction formulas are
/// evaluated through here as well and stay loud on overflow.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    // 128-bit intermediates: acc stays a binomial coefficient, and the
    // product before each exact division can exceed 64 bits.
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("computing a binomial coefficient"))?;
        acc = num / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient exceeds u64"))
}

/// `C(n, k)` as u128 with checked arithmetic, for the inequality checker
/// which may see arguments well past 64.
pub fn binomial_u128(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = acc
            .checked_mul(n - i)
            .ok_or(Error::Overflow("computing a binomial coefficient"))?;
        acc = num / (i + 1);
    }
    Ok(acc)
}
