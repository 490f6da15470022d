//! Value-set equivalence suite: the eleven trinomials split into four classes,
//! each sharing its punctured value-set with a canonical representative.

use serde_json::json;
use trinodiff_core::polyfun::{catalog, punctured_value_set};

use super::{Check, Outcome};
use crate::config::Suite;

pub const CLASSES: [(&str, &str, &[&str]); 4] = [
    ("class_a", "canon_a", &["f5", "f8", "f11"]),
    ("class_b", "canon_b", &["f1", "f2"]),
    ("class_c", "canon_c", &["f4", "f6", "f9"]),
    ("class_d", "canon_d", &["f3", "f7", "f10"]),
];

pub fn checks(m: u32) -> Vec<Check> {
    CLASSES
        .into_iter()
        .map(|(class, representative, members)| {
            Check::new(format!("equiv.{class}.m{m}"), Suite::Equivalence, move |ctx| {
                let base = punctured_value_set(&catalog(representative, ctx).expect("id"), ctx)
                    .expect("value set");
                let mut equal = Vec::new();
                for &member in members {
                    let d = punctured_value_set(&catalog(member, ctx).expect("id"), ctx)
                        .expect("value set");
                    equal.push(d == base);
                }
                Outcome::compare(
                    json!({ "representative": representative, "members_equal": equal }),
                    json!({ "representative": representative, "members_equal": vec![true; members.len()] }),
                )
            })
        })
        .collect()
}
