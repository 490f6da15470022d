//! Difference-set machinery in the cyclic group (F*_{2^m}, x).
//!
//! A k-subset D of a group of order v is a (v, k, lambda) difference set when
//! every non-identity g has exactly lambda representations g = x * y^-1 with
//! x, y in D. The two Singer families over F*_{2^m} are
//! (2^m - 1, 2^(m-1), 2^(m-2)) and (2^m - 1, 2^(m-1) - 1, 2^(m-2) - 1).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};
use crate::set::ElementSet;

/// Which Singer parameter family a verdict matched, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingerFamily {
    /// (2^m - 1, 2^(m-1), 2^(m-2))
    Large,
    /// (2^m - 1, 2^(m-1) - 1, 2^(m-2) - 1)
    Small,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffSetVerdict {
    pub is_difference_set: bool,
    pub v: u64,
    pub k: u64,
    /// The single lambda when `is_difference_set`, otherwise absent.
    pub lambda: Option<u64>,
    /// lambda value -> number of non-identity group elements attaining it.
    pub lambda_histogram: BTreeMap<u64, u64>,
    pub singer_family: Option<SingerFamily>,
}

fn require_no_zero(d: &ElementSet, operation: &'static str) -> Result<()> {
    if d.contains_zero() {
        return Err(Error::ZeroInMultiplicativeSet { operation });
    }
    Ok(())
}

/// lambda(g) for every g != 1 in F*, by the O(|D|^2) double loop.
/// Returned dense by element bits; slots 0 and 1 stay 0.
pub fn difference_histogram(d: &ElementSet, ctx: &FieldCtx) -> Result<Vec<u32>> {
    require_no_zero(d, "difference_histogram")?;
    let members: Vec<Fe> = d.iter().collect();
    let inverses: Vec<Fe> = members
        .iter()
        .map(|&y| ctx.inv(y).expect("nonzero member"))
        .collect();
    let mut counts = vec![0u32; ctx.field_size() as usize];
    for &x in &members {
        for (&y, &y_inv) in members.iter().zip(&inverses) {
            if x != y {
                counts[ctx.mul(x, y_inv).bits() as usize] += 1;
            }
        }
    }
    debug_assert_eq!(counts[0], 0);
    debug_assert_eq!(counts[1], 0);
    Ok(counts)
}

/// Verify the difference-set property and classify against both Singer
/// parameter families.
pub fn check_difference_set(d: &ElementSet, ctx: &FieldCtx) -> Result<DiffSetVerdict> {
    let counts = difference_histogram(d, ctx)?;
    let v = ctx.order();
    let k = d.len();
    let mut lambda_histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for g in 2..ctx.field_size() {
        *lambda_histogram.entry(counts[g as usize] as u64).or_insert(0) += 1;
    }
    debug_assert_eq!(lambda_histogram.values().sum::<u64>(), v - 1);
    debug_assert_eq!(
        lambda_histogram.iter().map(|(l, n)| l * n).sum::<u64>(),
        k * k.saturating_sub(1)
    );
    let is_difference_set = lambda_histogram.len() == 1;
    let lambda = if is_difference_set {
        lambda_histogram.keys().next().copied()
    } else {
        None
    };
    let m = ctx.m();
    let singer_family = match (is_difference_set, k, lambda) {
        (true, k, Some(l)) if k == 1 << (m - 1) && l == 1 << (m - 2) => Some(SingerFamily::Large),
        (true, k, Some(l)) if k == (1 << (m - 1)) - 1 && l == (1 << (m - 2)) - 1 => {
            Some(SingerFamily::Small)
        }
        _ => None,
    };
    Ok(DiffSetVerdict {
        is_difference_set,
        v,
        k,
        lambda,
        lambda_histogram,
        singer_family,
    })
}

/// F* \ D.
pub fn complement_set(d: &ElementSet, ctx: &FieldCtx) -> Result<ElementSet> {
    require_no_zero(d, "complement_set")?;
    let mut out = ElementSet::empty(ctx);
    for x in ctx.nonzero_elements() {
        if !d.contains(x) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// Elementwise e-th power; requires gcd(e, 2^m - 1) = 1 so the image cannot
/// collapse.
pub fn power_image(d: &ElementSet, e: u64, ctx: &FieldCtx) -> Result<ElementSet> {
    if gcd(e % ctx.order(), ctx.order()) != 1 {
        return Err(Error::NonCoprimePowerImage {
            m: ctx.m(),
            exponent: e,
        });
    }
    Ok(power_image_unchecked(d, e, ctx))
}

/// Elementwise e-th power without the coprimality guard; the image may be
/// smaller than D.
pub fn power_image_unchecked(d: &ElementSet, e: u64, ctx: &FieldCtx) -> ElementSet {
    let mut out = ElementSet::empty(ctx);
    for x in d.iter() {
        out.insert(ctx.pow(x, e));
    }
    out
}

/// T_n = {x : Tr(x^n) = 1}. Zero is never included since Tr(0) = 0.
pub fn trace_power_set(n: u64, ctx: &FieldCtx) -> ElementSet {
    let mut out = ElementSet::empty(ctx);
    for x in ctx.nonzero_elements() {
        if ctx.trace(ctx.pow(x, n)) == 1 {
            out.insert(x);
        }
    }
    out
}

/// The punctured value-set of (x + 1)^d + x^d + 1 with d = 2^(2k) - 2^k + 1.
/// Hypotheses: 1 <= k <= m/2 and gcd(k, m) = 1.
pub fn dillon_dobbertin_set(k: u32, ctx: &FieldCtx) -> Result<ElementSet> {
    let m = ctx.m();
    if k < 1 || 2 * k > m {
        return Err(Error::DillonDobbertinParameter {
            k,
            m,
            reason: "k must satisfy 1 <= k <= m/2",
        });
    }
    if gcd(k as u64, m as u64) != 1 {
        return Err(Error::DillonDobbertinParameter {
            k,
            m,
            reason: "k must be coprime to m",
        });
    }
    let d = (1u64 << (2 * k)) - (1u64 << k) + 1;
    Ok(dobbertin_value_set(d, ctx))
}

/// The punctured value-set of (x + 1)^d + x^d + 1 for an arbitrary exponent,
/// swept over the whole field.
pub fn dobbertin_value_set(d: u64, ctx: &FieldCtx) -> ElementSet {
    let mut out = ElementSet::empty(ctx);
    for x in ctx.elements() {
        let v = ctx.pow(x ^ Fe::ONE, d) ^ ctx.pow(x, d) ^ Fe::ONE;
        if !v.is_zero() {
            out.insert(v);
        }
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
