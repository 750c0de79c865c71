//! Term rendering shared by every polynomial and series type.
//!
//! The contract: terms in ascending exponent order, separated by ` + ` / ` - `,
//! the coefficient magnitude omitted when it is 1 (unless the term is a bare
//! constant), the exponent omitted for power 1, the variable omitted for
//! power 0. Series append ` + O(u^N)`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

/// One rendered monomial: the variable part is already formatted
/// (e.g. `"h^2"`, `"hu^3"`, `""` for a constant).
pub(crate) fn push_term(out: &mut String, coeff: &BigInt, var_part: &str) {
    let neg = coeff.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mag = coeff.magnitude();
    if var_part.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(var_part);
    }
}

/// `""`, `"h"` or `"h^k"` depending on the exponent.
pub(crate) fn var_power(var: char, exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        k => format!("{var}^{k}"),
    }
}

/// Render a list of `(exponent, coefficient)` terms, assumed sorted ascending.
pub(crate) fn render_single_var(terms: &[(i64, BigInt)], var: char) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (exp, c) in terms {
        push_term(&mut out, c, &var_power(var, *exp));
    }
    out
}
