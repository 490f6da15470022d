//! Curve suite: exhaustive affine counts for the union-decomposition
//! components, the no-point curves, the product/union decompositions
//! themselves, root-count profiles against their closed forms, and the
//! quintic/sextic root-count comparison.
//!
//! The exhaustive 2^(2m) scans run by default for m <= 9 and need --deep
//! beyond that; the O(2^m) root profiles always run.

use serde_json::json;
use trinodiff_core::curves::{
    count_affine_points, count_affine_points_x_nonzero, curve, eval_bipoly, find_singular_points,
    root_profile, root_profile_closed_form, six_five_check, cubic_criterion_holds, RootFamily,
};

use super::{Check, Outcome};
use crate::config::Suite;

/// Exhaustive point scans beyond this degree require --deep.
pub const DEEP_SCAN_MIN_M: u32 = 11;

pub fn checks(m: u32, deep: bool) -> Vec<Check> {
    let mut out = Vec::new();
    let scan_skip = if m >= DEEP_SCAN_MIN_M && !deep {
        Some(format!("2^(2m) scan at m = {m} requires --deep"))
    } else {
        None
    };
    let scanning = |check: Check| match &scan_skip {
        Some(reason) => check.skipped(reason.clone()),
        None => check,
    };

    // point counts with their published values
    type ExpectedCount = fn(u32) -> u64;
    let count_checks: [(&str, ExpectedCount); 7] = [
        ("c41_C2", |m| (1 << m) - 2),
        ("c41_C3", |m| (1 << m) - 1),
        ("c42_C2", |m| 1 << m),
        ("c42_C3", |m| 1 << m),
        ("c42_C4", |_| 0),
        ("helper_E", |m| 1 << m),
        ("helper_sixfive", |m| 1 << m),
    ];
    for (curve_id, expected) in count_checks {
        out.push(scanning(Check::new(
            format!("curve.count.{curve_id}.m{m}"),
            Suite::Curves,
            move |ctx| {
                let c = curve(curve_id).expect("curve id");
                Outcome::compare(
                    json!({ "points": count_affine_points(&c, ctx) }),
                    json!({ "points": expected(ctx.m()) }),
                )
            },
        )));
    }

    // no-point curves: the x^-4 + x^6 + x union component on x != 0, and the
    // degree-241 curve everywhere; both must also be free of double points
    out.push(scanning(Check::new(
        format!("curve.nopoint.ec1.m{m}"),
        Suite::Curves,
        |ctx| {
            let c = curve("ec1_curve").expect("curve id");
            let x_nonzero = count_affine_points_x_nonzero(&c, ctx);
            let total = count_affine_points(&c, ctx);
            let singular = find_singular_points(&c, ctx).len();
            Outcome {
                passed: x_nonzero == 0 && singular == 0,
                observed: json!({
                    "points_x_nonzero": x_nonzero,
                    "points_total": total,
                    "singular_points": singular,
                }),
                expected: json!({ "points_x_nonzero": 0, "singular_points": 0 }),
            }
        },
    )));
    out.push(scanning(Check::new(
        format!("curve.nopoint.big241.m{m}"),
        Suite::Curves,
        |ctx| {
            let c = curve("big241_curve").expect("curve id");
            Outcome::compare(
                json!({
                    "points": count_affine_points(&c, ctx),
                    "singular_points": find_singular_points(&c, ctx).len(),
                }),
                json!({ "points": 0, "singular_points": 0 }),
            )
        },
    )));

    // union decompositions: exact polynomial factorization plus pointwise
    // zero-set equality
    for (union_id, components) in [
        ("c41", vec!["c41_C1", "c41_C2", "c41_C3"]),
        ("c42", vec!["c42_C1", "c42_C2", "c42_C3", "c42_C4"]),
    ] {
        let whole = format!("{union_id}_C");
        out.push(scanning(Check::new(
            format!("curve.union.{union_id}.m{m}"),
            Suite::Curves,
            move |ctx| {
                let c = curve(&whole).expect("curve id");
                let parts: Vec<_> = components.iter().map(|id| curve(id).expect("id")).collect();
                let product = parts
                    .iter()
                    .skip(1)
                    .fold(parts[0].clone(), |acc, p| acc.mul(p));
                let symbolic = product.monomials() == c.monomials();
                let mut pointwise = true;
                'outer: for x in ctx.elements() {
                    for y in ctx.elements() {
                        let on_c = eval_bipoly(&c, x, y, ctx).is_zero();
                        let on_any = parts
                            .iter()
                            .any(|p| eval_bipoly(p, x, y, ctx).is_zero());
                        if on_c != on_any {
                            pointwise = false;
                            break 'outer;
                        }
                    }
                }
                Outcome::compare(
                    json!({ "product_equals_union": symbolic, "pointwise": pointwise }),
                    json!({ "product_equals_union": true, "pointwise": true }),
                )
            },
        )));
    }

    // root profiles of x^(2^k+1) + ax + a against the closed forms
    let mut ks = vec![1u32, 2, m.div_ceil(2)];
    ks.sort_unstable();
    ks.dedup();
    for k in ks {
        out.push(Check::new(
            format!("curve.bluher.k{k}.m{m}"),
            Suite::Curves,
            move |ctx| {
                let profile = root_profile(k, RootFamily::AffinePair, ctx);
                Outcome::compare(
                    json!({ "histogram": profile.histogram, "parameters": profile.parameter_space() }),
                    json!({ "histogram": root_profile_closed_form(k, ctx), "parameters": ctx.field_size() }),
                )
            },
        ));
    }

    // x^(sigma+1) + x = a profile over F*
    out.push(Check::new(
        format!("curve.bluher_p.m{m}"),
        Suite::Curves,
        |ctx| {
            let m = ctx.m();
            let profile = root_profile(m.div_ceil(2), RootFamily::PowerSum, ctx);
            let expected = json!({
                "0": ((1u64 << m) + 1) / 3,
                "1": 1u64 << (m - 1),
                "3": ((1u64 << (m - 1)) - 1) / 3,
            });
            Outcome::compare(json!(profile.histogram), expected)
        },
    ));

    out.push(Check::new(
        format!("curve.six_five.m{m}"),
        Suite::Curves,
        |ctx| {
            let report = six_five_check(ctx);
            Outcome::compare(
                json!({
                    "passed": report.passed,
                    "two_root_parameters": report.two_root_parameters.len(),
                }),
                json!({ "passed": true, "two_root_parameters": 0 }),
            )
        },
    ));

    if m <= 7 {
        out.push(Check::new(
            format!("curve.cubic_criterion.m{m}"),
            Suite::Curves,
            |ctx| Outcome::compare(json!(cubic_criterion_holds(ctx)), json!(true)),
        ));
    }

    out
}
