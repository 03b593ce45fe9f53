//! The named presentations: G(27,3), its two order-81 coverings, the
//! parameterized family of order-81 presentations, the auxiliary group with
//! a cube root of z12, and the representation group of order 243.

use super::schema::{MultiplierSlot, Schema, SchemaBuilder};
use super::GroupError;

pub const SCHEMA_NAMES: [&str; 6] = ["G27", "G81", "G81_param", "GSHARP", "R243", "GBAR"];

/// Look up a schema by name. `params` is the (a, b) pair for `G81_param`
/// and must be absent for every other name.
pub fn schema(name: &str, params: Option<(u8, u8)>) -> Result<Schema, GroupError> {
    match (name, params) {
        ("G81_param", Some((a, b))) => g81_param(a, b),
        ("G81_param", None) => Err(GroupError::MissingParams(name.to_string())),
        (n, Some(_)) if SCHEMA_NAMES.contains(&n) => {
            Err(GroupError::UnexpectedParams(n.to_string()))
        }
        ("G27", None) => g27(),
        ("G81", None) => g81(),
        ("GSHARP", None) => gsharp(),
        ("R243", None) => r243(),
        ("GBAR", None) => gbar(),
        (n, _) => Err(GroupError::UnknownSchema(n.to_string())),
    }
}

/// x₂ central, x₃x₁x₃⁻¹ = x₂⁻¹x₁.
pub fn g27() -> Result<Schema, GroupError> {
    SchemaBuilder::new("G27")
        .generator("x1", false)
        .generator("x2", true)
        .generator("x3", false)
        .conj("x3", "x1", "x1^1 x2^2")
        .build()
}

fn g81_builder(name: &str) -> SchemaBuilder {
    SchemaBuilder::new(name)
        .generator("z12", true)
        .generator("xi1", false)
        .generator("xi2", false)
        .generator("xi3", false)
        .conj("xi2", "xi1", "z12^2 xi1^1")
        // ξ₂⁻¹ξ₁ in normal form
        .conj("xi3", "xi1", "z12^1 xi1^1 xi2^2")
        .multiplier("z12", MultiplierSlot::Eps)
}

pub fn g81() -> Result<Schema, GroupError> {
    g81_builder("G81").build()
}

/// ξ₁³ = z₁₂^a and ξ₃³ = z₁₂^b, other relations as in `G81`.
pub fn g81_param(a: u8, b: u8) -> Result<Schema, GroupError> {
    if a > 2 || b > 2 {
        return Err(GroupError::InvalidRule(format!(
            "parameters ({a},{b}) must lie in 0..=2"
        )));
    }
    let mut builder = g81_builder(&format!("G81_param({a},{b})"));
    if a != 0 {
        builder = builder.power("xi1", &format!("z12^{a}"));
    }
    if b != 0 {
        builder = builder.power("xi3", &format!("z12^{b}"));
    }
    builder.build()
}

/// `G81` with an extra central ζ, ζ³ = z₁₂.
pub fn gsharp() -> Result<Schema, GroupError> {
    SchemaBuilder::new("GSHARP")
        .generator("zeta", true)
        .generator("z12", true)
        .generator("xi1", false)
        .generator("xi2", false)
        .generator("xi3", false)
        .power("zeta", "z12^1")
        .conj("xi2", "xi1", "z12^2 xi1^1")
        .conj("xi3", "xi1", "z12^1 xi1^1 xi2^2")
        .build()
}

pub fn r243() -> Result<Schema, GroupError> {
    SchemaBuilder::new("R243")
        .generator("z12", true)
        .generator("z23", true)
        .generator("n1", false)
        .generator("n2", false)
        .generator("n3", false)
        .conj("n2", "n1", "z12^2 n1^1")
        .conj("n3", "n1", "z12^1 n1^1 n2^2")
        .conj("n3", "n2", "z23^2 n2^1")
        .multiplier("z12", MultiplierSlot::Eps)
        .multiplier("z23", MultiplierSlot::Mu)
        .build()
}

/// The covering of G27 obtained by adjoining z₂₃ = [ξ₂, ξ₃] first.
pub fn gbar() -> Result<Schema, GroupError> {
    SchemaBuilder::new("GBAR")
        .generator("z23", true)
        .generator("xi1", false)
        .generator("xi2", false)
        .generator("xi3", false)
        .conj("xi3", "xi1", "xi1^1 xi2^2")
        .conj("xi3", "xi2", "z23^2 xi2^1")
        .multiplier("z23", MultiplierSlot::Mu)
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_name() {
        for n in ["G27", "G81", "GSHARP", "R243", "GBAR"] {
            assert_eq!(schema(n, None).unwrap().name(), n);
        }
        assert!(matches!(
            schema("NOPE", None),
            Err(GroupError::UnknownSchema(_))
        ));
        assert!(matches!(
            schema("G27", Some((1, 1))),
            Err(GroupError::UnexpectedParams(_))
        ));
        assert!(matches!(
            schema("G81_param", None),
            Err(GroupError::MissingParams(_))
        ));
        assert!(g81_param(3, 0).is_err());
    }

    #[test]
    fn g27_rule() {
        let s = g27().unwrap();
        assert_eq!(s.rank(), 3);
        assert!(s.is_central(1));
        assert_eq!(s.format_element(&s.conj_word(2, 0)), "x1^1 x2^2");
    }

    #[test]
    fn r243_rules() {
        let s = r243().unwrap();
        assert_eq!(s.format_element(&s.conj_word(3, 2)), "z12^2 n1^1");
        assert_eq!(s.format_element(&s.conj_word(4, 2)), "z12^1 n1^1 n2^2");
        assert_eq!(s.format_element(&s.conj_word(4, 3)), "z23^2 n2^1");
    }

    #[test]
    fn unparameterized_family_member_matches_g81() {
        let (p, g) = (g81_param(0, 0).unwrap(), g81().unwrap());
        for r in 0..4 {
            assert_eq!(p.power_word(r).exponents(), g.power_word(r).exponents());
            for c in 0..r {
                assert_eq!(p.conj_word(r, c).exponents(), g.conj_word(r, c).exponents());
            }
        }
    }

    #[test]
    fn anchor_products_and_commutators() {
        let s = g27().unwrap();
        assert_eq!(
            s.multiply(&s.generator(2), &s.generator(0))
                .unwrap()
                .exponents(),
            &[1, 2, 1]
        );

        let s = g81().unwrap();
        assert_eq!(
            s.commutator(&s.generator(1), &s.generator(3)).unwrap(),
            s.generator(2)
        );
        assert_eq!(
            s.commutator(&s.generator(1), &s.generator(2)).unwrap(),
            s.generator(0)
        );

        let s = r243().unwrap();
        assert_eq!(
            s.multiply(&s.generator(4), &s.generator(2))
                .unwrap()
                .exponents(),
            &[1, 0, 1, 2, 1]
        );
        assert_eq!(
            s.commutator(&s.generator(3), &s.generator(4)).unwrap(),
            s.generator(1)
        );
        assert_eq!(s.element_order(&s.identity()).unwrap(), 1);
    }

    #[test]
    fn enumerated_orders() {
        use crate::groupcore::Group;
        let order = |s: Schema| Group::new(s).unwrap().order();
        assert_eq!(order(g27().unwrap()), 27);
        assert_eq!(order(g81().unwrap()), 81);
        assert_eq!(order(gbar().unwrap()), 81);
        assert_eq!(order(r243().unwrap()), 243);
        assert_eq!(order(gsharp().unwrap()), 243);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(order(g81_param(a, b).unwrap()), 81);
            }
        }
    }

    #[test]
    fn zeta_has_order_nine() {
        let s = gsharp().unwrap();
        assert_eq!(s.element_order(&s.generator(0)).unwrap(), 9);
    }
}
