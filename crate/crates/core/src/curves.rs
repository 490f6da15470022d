//! Affine point counting and singular-point scanning for bivariate
//! polynomials over GF(2), evaluated in F_{2^m}, plus root-count profiles for
//! the one-parameter families x^(2^k+1) + ax + a and x^(2^k+1) + x = a.
//!
//! Counting is a plain double loop with per-coordinate power caches; at desk
//! scale (2^(2m) <= 2^26) brute force doubles as its own oracle. High-degree
//! catalog entries are expanded from their structured forms by polynomial
//! arithmetic over GF(2), never hand-typed.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};

/// A bivariate polynomial over GF(2): the set of monomials x^i y^j present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    name: String,
    monomials: Vec<(u32, u32)>,
}

impl BiPoly {
    pub fn new(name: impl Into<String>, mut monomials: Vec<(u32, u32)>) -> BiPoly {
        monomials.sort_unstable();
        monomials.dedup();
        BiPoly {
            name: name.into(),
            monomials,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn monomials(&self) -> &[(u32, u32)] {
        &self.monomials
    }

    pub fn rename(mut self, name: impl Into<String>) -> BiPoly {
        self.name = name.into();
        self
    }

    /// GF(2) sum: symmetric difference of monomial sets.
    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut terms = Vec::with_capacity(self.monomials.len() + other.monomials.len());
        let (mut a, mut b) = (self.monomials.iter().peekable(), other.monomials.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) if x == y => {
                    a.next();
                    b.next();
                }
                (Some(&&x), Some(&&y)) => {
                    if x < y {
                        terms.push(x);
                        a.next();
                    } else {
                        terms.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    terms.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    terms.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        BiPoly {
            name: String::new(),
            monomials: terms,
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut acc: BTreeMap<(u32, u32), bool> = BTreeMap::new();
        for &(i1, j1) in &self.monomials {
            for &(i2, j2) in &other.monomials {
                let e = acc.entry((i1 + i2, j1 + j2)).or_insert(false);
                *e = !*e;
            }
        }
        BiPoly {
            name: String::new(),
            monomials: acc.into_iter().filter(|&(_, p)| p).map(|(m, _)| m).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> BiPoly {
        let mut acc = BiPoly::new("", vec![(0, 0)]);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Formal partial derivative: x^i y^j contributes only when the
    /// differentiated exponent is odd.
    pub fn partial_x(&self) -> BiPoly {
        BiPoly::new(
            format!("d({})/dx", self.name),
            self.monomials
                .iter()
                .filter(|&&(i, _)| i % 2 == 1)
                .map(|&(i, j)| (i - 1, j))
                .collect(),
        )
    }

    pub fn partial_y(&self) -> BiPoly {
        BiPoly::new(
            format!("d({})/dy", self.name),
            self.monomials
                .iter()
                .filter(|&&(_, j)| j % 2 == 1)
                .map(|&(i, j)| (i, j - 1))
                .collect(),
        )
    }

    fn distinct_x_exponents(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.monomials.iter().map(|&(i, _)| i).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn distinct_y_exponents(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.monomials.iter().map(|&(_, j)| j).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Evaluate at one point.
pub fn eval_bipoly(c: &BiPoly, x: Fe, y: Fe, ctx: &FieldCtx) -> Fe {
    let mut acc = Fe::ZERO;
    for &(i, j) in &c.monomials {
        acc ^= ctx.mul(ctx.pow(x, i as u64), ctx.pow(y, j as u64));
    }
    acc
}

/// Precomputed power tables over all field elements for the exponents a
/// polynomial actually uses.
struct PowerCache {
    /// index in the exponent list for each monomial side
    x_idx: Vec<usize>,
    y_idx: Vec<usize>,
    /// powers[element][exponent index]
    x_pows: Vec<Vec<Fe>>,
    y_pows: Vec<Vec<Fe>>,
}

fn build_cache(c: &BiPoly, ctx: &FieldCtx) -> PowerCache {
    let xs = c.distinct_x_exponents();
    let ys = c.distinct_y_exponents();
    let x_idx = c
        .monomials
        .iter()
        .map(|&(i, _)| xs.binary_search(&i).unwrap())
        .collect();
    let y_idx = c
        .monomials
        .iter()
        .map(|&(_, j)| ys.binary_search(&j).unwrap())
        .collect();
    let pows = |exps: &[u32]| -> Vec<Vec<Fe>> {
        ctx.elements()
            .map(|v| exps.iter().map(|&e| ctx.pow(v, e as u64)).collect())
            .collect()
    };
    PowerCache {
        x_idx,
        y_idx,
        x_pows: pows(&xs),
        y_pows: pows(&ys),
    }
}

#[inline]
fn eval_cached(c: &BiPoly, cache: &PowerCache, ctx: &FieldCtx, xb: usize, yb: usize) -> Fe {
    let xp = &cache.x_pows[xb];
    let yp = &cache.y_pows[yb];
    let mut acc = Fe::ZERO;
    for ((_, &xi), &yi) in c.monomials.iter().zip(&cache.x_idx).zip(&cache.y_idx) {
        acc ^= ctx.mul(xp[xi], yp[yi]);
    }
    acc
}

/// #{(x, y) in F^2 : C(x, y) = 0}, exhaustively.
pub fn count_affine_points(c: &BiPoly, ctx: &FieldCtx) -> u64 {
    let cache = build_cache(c, ctx);
    let q = ctx.field_size() as usize;
    let mut count = 0u64;
    for xb in 0..q {
        for yb in 0..q {
            if eval_cached(c, &cache, ctx, xb, yb).is_zero() {
                count += 1;
            }
        }
    }
    count
}

/// Count only points with x != 0.
pub fn count_affine_points_x_nonzero(c: &BiPoly, ctx: &FieldCtx) -> u64 {
    let cache = build_cache(c, ctx);
    let q = ctx.field_size() as usize;
    let mut count = 0u64;
    for xb in 1..q {
        for yb in 0..q {
            if eval_cached(c, &cache, ctx, xb, yb).is_zero() {
                count += 1;
            }
        }
    }
    count
}

/// All points where C and both formal partials vanish.
pub fn find_singular_points(c: &BiPoly, ctx: &FieldCtx) -> Vec<(Fe, Fe)> {
    let dx = c.partial_x();
    let dy = c.partial_y();
    let cache = build_cache(c, ctx);
    let cache_dx = build_cache(&dx, ctx);
    let cache_dy = build_cache(&dy, ctx);
    let q = ctx.field_size() as usize;
    let mut out = Vec::new();
    for xb in 0..q {
        for yb in 0..q {
            if eval_cached(c, &cache, ctx, xb, yb).is_zero()
                && eval_cached(&dx, &cache_dx, ctx, xb, yb).is_zero()
                && eval_cached(&dy, &cache_dy, ctx, xb, yb).is_zero()
            {
                out.push((ctx.element(xb as u64), ctx.element(yb as u64)));
            }
        }
    }
    out
}

/// Stable curve identifiers accepted by [`curve`].
pub const CURVE_IDS: [&str; 13] = [
    "c41_C", "c41_C1", "c41_C2", "c41_C3", "c42_C", "c42_C1", "c42_C2", "c42_C3", "c42_C4",
    "ec1_curve", "big241_curve", "helper_E", "helper_sixfive",
];

/// Build a catalog curve. High-degree entries are expanded from structured
/// forms by GF(2) polynomial arithmetic.
pub fn curve(id: &str) -> Result<BiPoly> {
    let x = |i: u32, j: u32| BiPoly::new("", vec![(i, j)]);
    let poly = match id {
        // Union curve for x^-4 + x^6 + x: y^4 (x^10 + x^5 + 1) + x^4 (y^10 + y^5 + 1)
        "c41_C" => BiPoly::new(
            "",
            vec![(10, 4), (5, 4), (0, 4), (4, 10), (4, 5), (4, 0)],
        ),
        "c41_C1" | "c42_C1" => BiPoly::new("", vec![(1, 0), (0, 1)]),
        "c41_C2" => BiPoly::new("", vec![(3, 2), (2, 3), (0, 0)]),
        "c41_C3" => BiPoly::new(
            "",
            vec![(6, 2), (4, 4), (3, 0), (2, 6), (2, 1), (1, 2), (0, 3)],
        ),
        // Union curve for x^-48 + x^20 + x^3, built from f(x) = f(y) cleared
        // by x^48 y^48 (the leading exponent is 48 + 20 = 68).
        "c42_C" => BiPoly::new(
            "",
            vec![(68, 48), (51, 48), (0, 48), (48, 68), (48, 51), (48, 0)],
        ),
        "c42_C2" => BiPoly::new("", vec![(12, 12), (4, 3), (3, 4), (7, 0), (0, 7)]),
        // x^12 y^12 (x + y)^3 + (x^2 + xy + y^2)^5
        "c42_C3" => x(12, 12)
            .mul(&x(1, 0).add(&x(0, 1)).pow(3))
            .add(&x(2, 0).add(&x(1, 1)).add(&x(0, 2)).pow(5)),
        // s^2 + (x^16 y^16)^2 + x^16 y^16 s  with  s = x^20 y^12 + x^12 y^20 + (x^3 + y^3)^5
        "c42_C4" => {
            let s = x(20, 12).add(&x(12, 20)).add(&x(3, 0).add(&x(0, 3)).pow(5));
            s.pow(2).add(&x(32, 32)).add(&x(16, 16).mul(&s))
        }
        // x^10 + x^5 + 1 + x^4 (y^6 + y)
        "ec1_curve" => BiPoly::new("", vec![(10, 0), (5, 0), (0, 0), (4, 6), (4, 1)]),
        // (x^4 + x + 1)^17 + x^20 ((y + 1)^241 + y^241 + 1)
        "big241_curve" => {
            let u_part = x(4, 0).add(&x(1, 0)).add(&x(0, 0)).pow(17);
            let y_shift = x(0, 1).add(&x(0, 0)).pow(241).add(&x(0, 241)).add(&x(0, 0));
            u_part.add(&x(20, 0).mul(&y_shift))
        }
        // y^2 + y = x^5
        "helper_E" => BiPoly::new("", vec![(0, 2), (0, 1), (5, 0)]),
        // x^5 + (x + 1)(y^6 + y^5)
        "helper_sixfive" => x(5, 0).add(&x(1, 0).add(&x(0, 0)).mul(&x(0, 6).add(&x(0, 5)))),
        _ => {
            return Err(Error::UnknownCatalogId { id: id.to_string() })
        }
    };
    Ok(poly.rename(id))
}

/// Which one-parameter family a root profile sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFamily {
    /// x^(2^k+1) + a x + a = 0, roots counted over the whole field, for every
    /// a in F_{2^m}.
    AffinePair,
    /// x^(2^k+1) + x = a, roots counted over F*, for every a in F_{2^m}.
    PowerSum,
}

/// Histogram: number of roots -> number of parameters a attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootProfile {
    pub histogram: BTreeMap<u64, u64>,
}

impl RootProfile {
    pub fn parameter_space(&self) -> u64 {
        self.histogram.values().sum()
    }
}

/// Sweep the family for a fixed k and profile root counts per parameter.
pub fn root_profile(k: u32, family: RootFamily, ctx: &FieldCtx) -> RootProfile {
    assert!(k >= 1 && k < ctx.m(), "k out of range");
    let e = (1u64 << k) + 1;
    let q = ctx.field_size();
    let mut per_a = vec![0u64; q as usize];
    match family {
        RootFamily::AffinePair => {
            // x^(2^k+1) = a(x + 1): each x != 1 determines one a.
            for x in ctx.elements() {
                let denom = x ^ Fe::ONE;
                if denom.is_zero() {
                    continue;
                }
                let a = ctx.mul(ctx.pow(x, e), ctx.inv(denom).expect("nonzero"));
                per_a[a.bits() as usize] += 1;
            }
        }
        RootFamily::PowerSum => {
            for x in ctx.nonzero_elements() {
                let a = ctx.pow(x, e) ^ x;
                per_a[a.bits() as usize] += 1;
            }
        }
    }
    let mut histogram = BTreeMap::new();
    for &n in per_a.iter() {
        *histogram.entry(n).or_insert(0) += 1;
    }
    RootProfile { histogram }
}

/// Published closed forms for the AffinePair family with d = gcd(k, m):
/// |Z_0|, |Z_1|, |Z_2|, |Z_(2^d+1)| over the full parameter space.
pub fn root_profile_closed_form(k: u32, ctx: &FieldCtx) -> BTreeMap<u64, u64> {
    let m = ctx.m() as u64;
    let d = gcd(k as u64, m);
    let q = 1u128 << m;
    let z0 = ((q + 1) * (1u128 << (d - 1)) / ((1u128 << d) + 1)) as u64;
    let z1 = 1u64 << (m - 1);
    let z2 = (((q - 1) * ((1u128 << (d - 1)) - 1)) / ((1u128 << d) - 1)) as u64;
    let zt = (((1u128 << (m - d)) - 1) / ((1u128 << (2 * d)) - 1)) as u64;
    let mut out = BTreeMap::new();
    for (roots, n) in [(0, z0), (1, z1), (2, z2), ((1 << d) + 1, zt)] {
        if n > 0 {
            *out.entry(roots).or_insert(0) += n;
        }
    }
    out
}

/// Outcome of the quintic/sextic root-count comparison over all a != 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixFiveReport {
    pub passed: bool,
    /// Parameters where x^5 + ax + a had exactly two roots (not covered by
    /// the stated implications; reported for transparency).
    pub two_root_parameters: Vec<Fe>,
}

/// For every a != 0, compare root counts of f_a = x^5 + ax + a and
/// g_a = x^6 + x^5 + a: g_a has exactly two roots iff f_a has exactly one,
/// and when f_a has zero or three roots, g_a has none.
pub fn six_five_check(ctx: &FieldCtx) -> SixFiveReport {
    let q = ctx.field_size() as usize;
    let mut f_roots = vec![0u8; q];
    let mut g_roots = vec![0u8; q];
    for x in ctx.elements() {
        // x^5 + ax + a = 0  <=>  a = x^5 / (x + 1) for x != 1
        let denom = x ^ Fe::ONE;
        if !denom.is_zero() {
            let a = ctx.mul(ctx.pow(x, 5), ctx.inv(denom).expect("nonzero"));
            f_roots[a.bits() as usize] += 1;
        }
        let a = ctx.pow(x, 6) ^ ctx.pow(x, 5);
        g_roots[a.bits() as usize] += 1;
    }
    let mut passed = true;
    let mut two_root_parameters = Vec::new();
    for a in 1..q {
        let (fr, gr) = (f_roots[a], g_roots[a]);
        if (gr == 2) != (fr == 1) {
            passed = false;
        }
        if (fr == 0 || fr == 3) && gr != 0 {
            passed = false;
        }
        if fr == 2 {
            two_root_parameters.push(ctx.element(a as u64));
        }
    }
    SixFiveReport {
        passed,
        two_root_parameters,
    }
}

/// Berlekamp's criterion for cubics: with q != 0, x^3 + px + q has an odd
/// number of irreducible factors (0 or 3 roots) iff Tr(p^3/q^2 + 1) = 0.
/// Exhaustive over all (p, q) pairs.
pub fn cubic_criterion_holds(ctx: &FieldCtx) -> bool {
    let qsize = ctx.field_size() as usize;
    // roots of x^3 + px + q: for each x and p, the q hitting it
    let mut roots = vec![0u8; qsize * qsize];
    for p in ctx.elements() {
        let row = p.bits() as usize * qsize;
        for x in ctx.elements() {
            let q = ctx.pow(x, 3) ^ ctx.mul(p, x);
            roots[row + q.bits() as usize] += 1;
        }
    }
    for p in ctx.elements() {
        let row = p.bits() as usize * qsize;
        for q in ctx.nonzero_elements() {
            let r = roots[row + q.bits() as usize];
            let q_inv_sq = ctx.inv(ctx.square(q)).expect("nonzero");
            let crit = ctx.trace(ctx.mul(ctx.pow(p, 3), q_inv_sq) ^ Fe::ONE) == 0;
            if crit != (r == 0 || r == 3) {
                return false;
            }
        }
    }
    true
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        let f = FieldCtx::new(5).unwrap();
        let c2 = curve("c41_C2").unwrap();
        assert_eq!(eval_bipoly(&c2, Fe::ZERO, Fe::ZERO, &f), Fe::ONE);
        assert_eq!(eval_bipoly(&c2, Fe::ONE, Fe::ONE, &f), Fe::ONE);
    }

    #[test]
    fn low_degree_family_counts_m5() {
        let f = FieldCtx::new(5).unwrap();
        assert_eq!(count_affine_points(&curve("c41_C2").unwrap(), &f), 30);
        assert_eq!(count_affine_points(&curve("c41_C3").unwrap(), &f), 31);
    }

    #[test]
    fn helper_curve_counts_m5() {
        let f = FieldCtx::new(5).unwrap();
        assert_eq!(count_affine_points(&curve("helper_E").unwrap(), &f), 32);
        assert_eq!(count_affine_points(&curve("helper_sixfive").unwrap(), &f), 32);
    }

    #[test]
    fn high_degree_family_counts_m5() {
        // exhaustive values; the published component counts differ by one
        // each (docs/discrepancies.md) and the verification checks carry the
        // published side, so this pins the scan itself
        let f = FieldCtx::new(5).unwrap();
        assert_eq!(count_affine_points(&curve("c42_C2").unwrap(), &f), 31);
        assert_eq!(count_affine_points(&curve("c42_C3").unwrap(), &f), 31);
        assert_eq!(count_affine_points(&curve("c42_C4").unwrap(), &f), 1);
        assert_eq!(
            eval_bipoly(&curve("c42_C4").unwrap(), Fe::ZERO, Fe::ZERO, &f),
            Fe::ZERO
        );
    }

    #[test]
    fn low_degree_union_is_exact_product() {
        let c = curve("c41_C").unwrap();
        let prod = curve("c41_C1")
            .unwrap()
            .mul(&curve("c41_C2").unwrap())
            .mul(&curve("c41_C3").unwrap());
        assert_eq!(prod.monomials(), c.monomials());
    }

    #[test]
    fn high_degree_union_is_exact_product() {
        let c = curve("c42_C").unwrap();
        let prod = curve("c42_C1")
            .unwrap()
            .mul(&curve("c42_C2").unwrap())
            .mul(&curve("c42_C3").unwrap())
            .mul(&curve("c42_C4").unwrap());
        assert_eq!(prod.monomials(), c.monomials());
    }

    #[test]
    fn big241_expansion_shape() {
        let c = curve("big241_curve").unwrap();
        assert_eq!(c.monomials().len(), 39);
        let f = FieldCtx::new(5).unwrap();
        assert_eq!(eval_bipoly(&c, Fe::ZERO, Fe::ZERO, &f), Fe::ONE);
    }

    #[test]
    fn no_point_curves_m5() {
        let f = FieldCtx::new(5).unwrap();
        let ec1 = curve("ec1_curve").unwrap();
        assert_eq!(count_affine_points_x_nonzero(&ec1, &f), 0);
        assert_eq!(count_affine_points(&ec1, &f), 0);
        assert!(find_singular_points(&ec1, &f).is_empty());
        let big = curve("big241_curve").unwrap();
        assert_eq!(count_affine_points(&big, &f), 0);
        assert!(find_singular_points(&big, &f).is_empty());
    }

    #[test]
    fn even_exponent_curve_is_singular_everywhere() {
        // x^2 + y^2: both partials vanish identically, so every point of the
        // curve is singular (the diagonal).
        let f = FieldCtx::new(5).unwrap();
        let c = BiPoly::new("xx_yy", vec![(2, 0), (0, 2)]);
        let singular = find_singular_points(&c, &f);
        assert_eq!(singular.len(), 32);
        assert!(singular.iter().all(|&(x, y)| x == y));
    }

    #[test]
    fn endcase1_identity_pointwise_m5() {
        // x^10 + x^5 + 1 + x^4(y^6 + y) = G^2 + GH + H^2 with
        // G = x^5 + x^4 y, H = x^3 y^2 + x^2 y^3 + 1
        let f = FieldCtx::new(5).unwrap();
        let lhs = curve("ec1_curve").unwrap();
        let g = BiPoly::new("", vec![(5, 0), (4, 1)]);
        let h = BiPoly::new("", vec![(3, 2), (2, 3), (0, 0)]);
        let rhs = g.pow(2).add(&g.mul(&h)).add(&h.pow(2));
        assert_eq!(lhs.monomials(), rhs.monomials());
        for x in f.elements() {
            for y in f.elements() {
                assert_eq!(
                    eval_bipoly(&lhs, x, y, &f),
                    eval_bipoly(&rhs, x, y, &f)
                );
            }
        }
    }

    #[test]
    fn bluher_profile_k2_m5() {
        let f = FieldCtx::new(5).unwrap();
        let profile = root_profile(2, RootFamily::AffinePair, &f);
        let want: BTreeMap<u64, u64> = [(0, 11), (1, 16), (3, 5)].into_iter().collect();
        assert_eq!(profile.histogram, want);
        assert_eq!(profile.histogram, root_profile_closed_form(2, &f));
        assert_eq!(profile.parameter_space(), 32);
    }

    #[test]
    fn power_sum_profile_matches_p_map_m5() {
        // k = (m+1)/2 gives the p(x) = x^(sigma+1) + x family
        let f = FieldCtx::new(5).unwrap();
        let profile = root_profile(3, RootFamily::PowerSum, &f);
        let want: BTreeMap<u64, u64> = [(0, 11), (1, 16), (3, 5)].into_iter().collect();
        assert_eq!(profile.histogram, want);
    }

    #[test]
    fn bluher_profile_partitions_parameter_space_m3() {
        let f = FieldCtx::new(3).unwrap();
        let profile = root_profile(1, RootFamily::AffinePair, &f);
        assert_eq!(profile.parameter_space(), 8);
        assert_eq!(profile.histogram, root_profile_closed_form(1, &f));
    }

    #[test]
    fn six_five_check_m5_and_m7() {
        for m in [5u32, 7] {
            let f = FieldCtx::new(m).unwrap();
            let report = six_five_check(&f);
            assert!(report.passed, "m = {m}");
            assert!(report.two_root_parameters.is_empty());
        }
    }

    #[test]
    fn cubic_criterion_m5() {
        let f = FieldCtx::new(5).unwrap();
        assert!(cubic_criterion_holds(&f));
    }
}
