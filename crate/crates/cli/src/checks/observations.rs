//! Observation suite (conjecture channel): f_i(x)/x + 1 is a two-to-one map
//! whose punctured value-set is a small-parameter Singer difference set,
//! value-set equivalent to a published binomial.

use serde_json::json;
use trinodiff_core::diffset::{check_difference_set, SingerFamily};
use trinodiff_core::polyfun::{
    catalog, preimage_profile, quotient_plus_one, quotient_reference, value_set_equal,
};
use trinodiff_core::Fe;

use super::{Check, Outcome};
use crate::config::Suite;

pub fn checks(m: u32) -> Vec<Check> {
    (1..=11)
        .map(|i| {
            let id = format!("obs.quotient.f{i}.m{m}");
            Check::new(id, Suite::Observations, move |ctx| {
                let base = catalog(&format!("f{i}"), ctx).expect("id");
                let q = quotient_plus_one(&base);
                let prof = preimage_profile(&q, ctx).expect("profile");
                // two-to-one over the whole field: every attained nonzero
                // value twice, value 0 hit once on F* with x = 0 as partner
                let two_to_one = prof.histogram().keys().all(|&c| c == 2)
                    && prof.zero_preimages() == 1
                    && q.compile(ctx).expect("compiles").eval(ctx, Fe::ZERO).expect("poly")
                        == Fe::ZERO;
                let verdict = check_difference_set(prof.value_set(), ctx).expect("no zero");
                let reference = quotient_reference(i).expect("1..=11");
                let equivalent = value_set_equal(&q, &reference, ctx).expect("compiles");
                Outcome::compare(
                    json!({
                        "two_to_one": two_to_one,
                        "singer": verdict.singer_family == Some(SingerFamily::Small),
                        "k": verdict.k,
                        "lambda": verdict.lambda,
                        "matches_reference": equivalent,
                    }),
                    json!({
                        "two_to_one": true,
                        "singer": true,
                        "k": (1u64 << (ctx.m() - 1)) - 1,
                        "lambda": (1u64 << (ctx.m() - 2)) - 1,
                        "matches_reference": true,
                    }),
                )
            })
            .conjecture()
        })
        .collect()
}
