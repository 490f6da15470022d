//! The fixed catalog of rational maps on F*_{2^m}.
//!
//! Eleven trinomials f1..f11, the four canonical representatives of their
//! value-set equivalence classes, the auxiliary functions used by the
//! functional-identity suite, the two sextic binomials, and the shifted
//! degree-five Dickson polynomial.

use super::RationalMap;
use crate::error::{Error, Result};
use crate::gf2m::FieldCtx;
use crate::polyfun::expr::ExponentExpr as E;

/// Stable identifiers accepted by [`catalog`].
pub const CATALOG_IDS: [&str; 25] = [
    "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11", "canon_a", "canon_b",
    "canon_c", "canon_d", "g", "h", "p", "R", "Q", "h_s", "f_s", "sextic1", "sextic2",
    "dickson_shift",
];

fn c(v: i64) -> E {
    E::constant(v)
}

/// 2^(m + b)
fn p2(offset: i64) -> E {
    E::pow2(1, offset)
}

/// 2^((m + b)/2)
fn p2h(offset: i64) -> E {
    E::pow2_half(1, offset)
}

fn sigma() -> E {
    E::sigma()
}

fn build(id: &str) -> Option<RationalMap> {
    let terms: Vec<E> = match id {
        // Trinomials, exponents exactly as published.
        "f1" => vec![p2(0).minus(17), p2(0).plus(19).div_exact(3), c(1)],
        "f2" => vec![
            p2(0).sub(p2(-4)).minus(1),
            p2(0).sub(p2(-2).plus(4).div_exact(3)),
            c(1),
        ],
        "f3" => vec![p2(0).minus(3), p2h(3).add(p2h(1)).plus(4), c(1)],
        "f4" => vec![p2(0).sub(p2h(-1)).minus(1), p2(-1).sub(p2h(-1)), c(1)],
        "f5" => vec![
            p2(0).minus(2).sub(p2(-1).minus(4).div_exact(3)),
            p2(0).minus(4).sub(p2(0).minus(8).div_exact(3)),
            c(1),
        ],
        "f6" => vec![
            p2(0).sub(p2h(1)).add(p2h(-1)),
            p2(0).sub(p2h(1)).minus(1),
            c(1),
        ],
        "f7" => vec![
            p2(0).sub(p2h(1).minus(1).times(3)),
            p2h(1).add(p2h(-1)).minus(2),
            c(1),
        ],
        "f8" => vec![p2(0).sub(p2(-2)).minus(1), p2(-1).minus(2), c(1)],
        "f9" => vec![p2(0).sub(p2h(3)).minus(3), p2h(1).plus(2), c(1)],
        "f10" => vec![
            p2(0).sub(p2h(-1).plus(1).times(3)),
            p2(-1).minus(1),
            c(1),
        ],
        "f11" => vec![p2(0).minus(5), c(6), c(1)],

        // Canonical class representatives.
        "canon_a" => vec![c(-4), c(6), c(1)],
        "canon_b" => vec![c(3), c(20), c(-48)],
        // -sigma/2 is the plain power 2^((m-1)/2) negated; -(sigma-1)/2 needs
        // the modular inverse of 2 because sigma - 1 is odd.
        "canon_c" => vec![
            p2h(-1).neg(),
            sigma().minus(1).neg().div_modular(2),
            c(1),
        ],
        "canon_d" => vec![sigma().times(3).plus(4), c(-2), c(1)],

        // Auxiliary functions for the identity suites.
        "g" => vec![sigma(), c(1)],
        "h" => vec![c(1), c(-1), sigma().neg(), sigma().minus(1), c(2).sub(sigma())],
        "p" => vec![sigma().plus(1), c(1)],
        "R" => vec![sigma().plus(1), sigma().minus(1), c(1)],
        // (x^sigma + x^2 + 1) / x^(sigma+1), written out as monomials on F*.
        "Q" => vec![c(-1), c(1).sub(sigma()), sigma().plus(1).neg()],
        "h_s" => vec![
            sigma().plus(1),
            sigma(),
            sigma().minus(1),
            sigma().minus(2),
            c(1).sub(sigma()),
        ],
        "f_s" => vec![sigma().times(3).plus(4), c(-2), c(1)],

        // Sextic binomials and the shifted Dickson quintic.
        "sextic1" => vec![c(6), c(1)],
        "sextic2" => vec![c(6), c(5)],
        "dickson_shift" => vec![c(5), c(4), c(3), c(2), c(1), c(0)],
        _ => return None,
    };
    Some(RationalMap::new(id, terms))
}

/// Look up a catalog map and validate that its exponents evaluate at the
/// context's degree.
pub fn catalog(id: &str, ctx: &FieldCtx) -> Result<RationalMap> {
    let map = build(id).ok_or_else(|| Error::UnknownCatalogId { id: id.to_string() })?;
    map.compile(ctx)?;
    Ok(map)
}

/// The published two-to-one binomial that f_i(x)/x + 1 is observed to be
/// value-set equivalent to (1-indexed).
pub fn quotient_reference(i: usize) -> Option<RationalMap> {
    let terms: Vec<E> = match i {
        1 => vec![c(-3), c(1)],
        2 => vec![c(4), c(3)],
        3 | 9 => vec![sigma().plus(1).neg(), c(1)],
        4 => vec![sigma().times(3).plus(4).neg(), c(1)],
        5 | 8 => vec![c(2), c(1)],
        6 | 10 => vec![sigma().plus(2), c(1)],
        7 => vec![sigma(), c(1)],
        11 => vec![c(1), c(-1)],
        _ => return None,
    };
    Some(RationalMap::new(format!("f{i}_quotient_ref"), terms))
}
