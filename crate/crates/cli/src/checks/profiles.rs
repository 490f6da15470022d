//! Preimage-profile suite: each trinomial and each canonical representative
//! induces a (0,1,4)-map on F* with exactly (2^(m-1) - 1)/3 four-preimage
//! values, never hits 0, and attains 2^(m-1) values.

use serde_json::json;
use trinodiff_core::polyfun::{catalog, preimage_profile};

use super::{Check, Outcome};
use crate::config::Suite;

pub fn checks(m: u32) -> Vec<Check> {
    let ids: Vec<String> = (1..=11)
        .map(|i| format!("f{i}"))
        .chain(["canon_a", "canon_b", "canon_c", "canon_d"].map(String::from))
        .collect();
    ids.into_iter()
        .map(|map_id| {
            let id = format!("profile.{map_id}.m{m}");
            Check::new(id, Suite::Profiles, move |ctx| {
                let m = ctx.m();
                let prof = preimage_profile(&catalog(&map_id, ctx).expect("id"), ctx)
                    .expect("profile");
                let quads = (1u64 << (m - 1)).wrapping_sub(1) / 3;
                let singles = ctx.order() - 4 * quads;
                Outcome::compare(
                    json!({
                        "histogram": prof.histogram(),
                        "zero_preimages": prof.zero_preimages(),
                        "value_set_size": prof.value_set().len(),
                    }),
                    json!({
                        "histogram": { "1": singles, "4": quads },
                        "zero_preimages": 0,
                        "value_set_size": 1u64 << (m - 1),
                    }),
                )
            })
        })
        .collect()
}
