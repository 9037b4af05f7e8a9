//! Sparse text form: `1 + 2*q + 2*q^4 - 1/2*q^-2`.

use super::LaurentSeries;
use crate::rational::fmt_rational;
use num_traits::{One, Signed};
use std::fmt;

fn monomial(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "q".to_string(),
        e => format!("q^{e}"),
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            let body = match (e, mag.is_one()) {
                (0, _) => fmt_rational(&mag),
                (_, true) => monomial(e),
                _ => format!("{}*{}", fmt_rational(&mag), monomial(e)),
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
