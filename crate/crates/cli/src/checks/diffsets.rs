//! Difference-set suite: each trinomial's punctured value-set carries the
//! large Singer parameters, the sextic and Dobbertin sets carry the small
//! ones, and the two disjoint-union facts behind the main proofs hold.

use serde_json::json;
use trinodiff_core::diffset::{
    check_difference_set, complement_set, dillon_dobbertin_set, dobbertin_value_set, power_image,
    trace_power_set, DiffSetVerdict,
};
use trinodiff_core::polyfun::{catalog, punctured_value_set};
use trinodiff_core::FieldCtx;

use super::{Check, Outcome};
use crate::config::Suite;

fn verdict_json(v: &DiffSetVerdict) -> serde_json::Value {
    json!({
        "v": v.v,
        "k": v.k,
        "lambda": v.lambda,
        "distinct_lambdas": v.lambda_histogram.len(),
    })
}

fn expect_large(ctx: &FieldCtx, verdict: &DiffSetVerdict) -> Outcome {
    let m = ctx.m();
    Outcome::compare(
        verdict_json(verdict),
        json!({
            "v": ctx.order(),
            "k": 1u64 << (m - 1),
            "lambda": 1u64 << (m - 2),
            "distinct_lambdas": 1,
        }),
    )
}

fn expect_small(ctx: &FieldCtx, verdict: &DiffSetVerdict) -> Outcome {
    let m = ctx.m();
    Outcome::compare(
        verdict_json(verdict),
        json!({
            "v": ctx.order(),
            "k": (1u64 << (m - 1)) - 1,
            "lambda": (1u64 << (m - 2)) - 1,
            "distinct_lambdas": 1,
        }),
    )
}

fn catalog_set(id: &str, ctx: &FieldCtx) -> trinodiff_core::ElementSet {
    punctured_value_set(&catalog(id, ctx).expect("catalog id"), ctx).expect("value set")
}

pub fn checks(m: u32) -> Vec<Check> {
    let mut out = Vec::new();

    for i in 1..=11 {
        let id = format!("diffset.f{i}.m{m}");
        let map_id = format!("f{i}");
        out.push(Check::new(id, Suite::Diffsets, move |ctx| {
            let d = catalog_set(&map_id, ctx);
            let verdict = check_difference_set(&d, ctx).expect("no zero in value set");
            expect_large(ctx, &verdict)
        }));
    }

    for id in ["sextic1", "sextic2"] {
        out.push(Check::new(
            format!("diffset.{id}.m{m}"),
            Suite::Diffsets,
            move |ctx| {
                let d = catalog_set(id, ctx);
                let verdict = check_difference_set(&d, ctx).expect("no zero");
                expect_small(ctx, &verdict)
            },
        ));
    }

    for n in [1u64, 3] {
        out.push(Check::new(
            format!("diffset.t{n}.m{m}"),
            Suite::Diffsets,
            move |ctx| {
                let verdict =
                    check_difference_set(&trace_power_set(n, ctx), ctx).expect("no zero");
                expect_large(ctx, &verdict)
            },
        ));
    }

    for k in 1..=m / 2 {
        if gcd(k as u64, m as u64) != 1 {
            continue;
        }
        out.push(Check::new(
            format!("diffset.dillon_dobbertin.k{k}.m{m}"),
            Suite::Diffsets,
            move |ctx| {
                let d = dillon_dobbertin_set(k, ctx).expect("admissible k");
                let verdict = check_difference_set(&d, ctx).expect("no zero");
                expect_small(ctx, &verdict)
            },
        ));
    }

    // complement law: (v, k, l) -> (v, v - k, v - 2k + l)
    out.push(Check::new(
        format!("diffset.complement_law.sextic1.m{m}"),
        Suite::Diffsets,
        |ctx| {
            let d = catalog_set("sextic1", ctx);
            let before = check_difference_set(&d, ctx).expect("no zero");
            let after =
                check_difference_set(&complement_set(&d, ctx).expect("no zero"), ctx).expect("ok");
            let expected = json!({
                "v": before.v,
                "k": before.v - before.k,
                "lambda": before.v - 2 * before.k + before.lambda.unwrap_or(0),
                "distinct_lambdas": 1,
            });
            Outcome::compare(verdict_json(&after), expected)
        },
    ));

    // power law: a coprime power image keeps the parameters
    out.push(Check::new(
        format!("diffset.power_law.t1_e5.m{m}"),
        Suite::Diffsets,
        |ctx| {
            let t1 = trace_power_set(1, ctx);
            let img = power_image(&t1, 5, ctx).expect("5 coprime to order");
            let verdict = check_difference_set(&img, ctx).expect("no zero");
            expect_large(ctx, &verdict)
        },
    ));

    // D(canon_a)* and D(x^6 + x)* partition F*
    out.push(Check::new(
        format!("diffset.partition.canon_a_sextic1.m{m}"),
        Suite::Diffsets,
        |ctx| {
            let a = catalog_set("canon_a", ctx);
            let s = catalog_set("sextic1", ctx);
            Outcome::compare(
                json!({
                    "disjoint": a.is_disjoint(&s),
                    "union_size": a.len() + s.len(),
                }),
                json!({ "disjoint": true, "union_size": ctx.order() }),
            )
        },
    ));

    // (D(canon_b)*)^17 and the d = 241 Dobbertin set partition F*
    out.push(Check::new(
        format!("diffset.partition.canon_b17_big241.m{m}"),
        Suite::Diffsets,
        |ctx| {
            let b = catalog_set("canon_b", ctx);
            let b17 = power_image(&b, 17, ctx).expect("17 coprime to 2^m - 1");
            let dd = dobbertin_value_set(241, ctx);
            Outcome::compare(
                json!({
                    "disjoint": b17.is_disjoint(&dd),
                    "union_size": b17.len() + dd.len(),
                }),
                json!({ "disjoint": true, "union_size": ctx.order() }),
            )
        },
    ));

    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
