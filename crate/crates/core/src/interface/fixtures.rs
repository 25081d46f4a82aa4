//! Shipped example rule bases.
//!
//! - `table1`: two Gaussian implicative rules whose coherence margin is
//!   exactly zero.
//! - `car`: the obstacle-avoidance pair "steer left" / "steer right" with a
//!   shared antecedent; conjunctive inference averages to straight ahead,
//!   implicative inference is incoherent.
//! - `mamdani`: three two-input Mamdani rules.
//! - `gauss`: three one-input Gaussian implicative rules, coherent.
//! - `single_rule`: one Gaussian rule.

use crate::radial_sets::RuleBase;

use super::document::parse_rulebase;

pub const TABLE1_JSON: &str = include_str!("../../fixtures/table1.json");
pub const CAR_JSON: &str = include_str!("../../fixtures/car.json");
pub const MAMDANI_JSON: &str = include_str!("../../fixtures/mamdani.json");
pub const GAUSS_JSON: &str = include_str!("../../fixtures/gauss.json");
pub const SINGLE_RULE_JSON: &str = include_str!("../../fixtures/single_rule.json");

pub const ALL: [(&str, &str); 5] = [
    ("table1", TABLE1_JSON),
    ("car", CAR_JSON),
    ("mamdani", MAMDANI_JSON),
    ("gauss", GAUSS_JSON),
    ("single_rule", SINGLE_RULE_JSON),
];

fn load(text: &str) -> RuleBase {
    parse_rulebase(text).expect("shipped fixture is valid")
}

pub fn table1() -> RuleBase {
    load(TABLE1_JSON)
}

pub fn car() -> RuleBase {
    load(CAR_JSON)
}

pub fn mamdani() -> RuleBase {
    load(MAMDANI_JSON)
}

pub fn gauss() -> RuleBase {
    load(GAUSS_JSON)
}

pub fn single_rule() -> RuleBase {
    load(SINGLE_RULE_JSON)
}

/// Looks a fixture up by name.
pub fn by_name(name: &str) -> Option<RuleBase> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, text)| load(text))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{coherence_sufficient, CoherenceVerdict};
    use crate::radial_sets::Representation;

    #[test]
    fn all_fixtures_parse_and_are_radial() {
        for (name, _) in ALL {
            let rb = by_name(name).unwrap();
            assert!(rb.radial_check().holds(), "{name}");
            assert!(rb.input_box().is_some(), "{name}");
        }
    }

    #[test]
    fn fixture_shapes() {
        assert_eq!((mamdani().dim(), mamdani().len()), (2, 3));
        assert_eq!((gauss().dim(), gauss().len()), (1, 3));
        assert_eq!(car().representation(), Representation::Conjunctive);
        assert_eq!(
            coherence_sufficient(&gauss()).unwrap().verdict,
            CoherenceVerdict::CertifiedCoherent
        );
    }
}
