//! Hand-transcribed figure fixtures shipped as JSON.

use crate::error::{Error, Result};
use crate::io::{parse_labeled_poset, LabeledPoset};

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 8] = [
    "fig2",
    "fig3",
    "fig4",
    "fig5_cl",
    "fig6_lambda",
    "fig7",
    "nongraded",
    "prop_inv_vs_strong",
];

/// Raw JSON text of a fixture.
pub fn fixture_json(name: &str) -> Result<&'static str> {
    Ok(match name {
        "fig2" => include_str!("../../fixtures/fig2.json"),
        "fig3" => include_str!("../../fixtures/fig3.json"),
        "fig4" => include_str!("../../fixtures/fig4.json"),
        "fig5_cl" => include_str!("../../fixtures/fig5_cl.json"),
        "fig6_lambda" => include_str!("../../fixtures/fig6_lambda.json"),
        "fig7" => include_str!("../../fixtures/fig7.json"),
        "nongraded" => include_str!("../../fixtures/nongraded.json"),
        "prop_inv_vs_strong" => include_str!("../../fixtures/prop_inv_vs_strong.json"),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    })
}

/// A fixture's poset, labeling and expected Cord.
pub fn fixture(name: &str) -> Result<LabeledPoset> {
    parse_labeled_poset(fixture_json(name)?)
}
