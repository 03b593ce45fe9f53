//! Power-commutator presentations of exponent-3 groups, collection, and the
//! structural data of the enumerated groups.

mod catalog;
mod fingerprint;
mod group;
mod hom;
mod schema;

pub use catalog::{g27, g81, g81_param, gbar, gsharp, r243, schema, SCHEMA_NAMES};
pub use fingerprint::{isomorphism_fingerprint, Fingerprint};
pub use group::{ConjugacyClass, Group, Subgroup};
pub use hom::{
    verify_efficient_covering, verify_phi_automorphism, CheckOutcome, Homomorphism, Report,
};
pub use schema::{
    Element, MultiplierSlot, Relation, Schema, SchemaBuilder, SchemaId, MAX_GENS, REL_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unknown schema {0:?}")]
    UnknownSchema(String),
    #[error("schema {0} takes no parameters")]
    UnexpectedParams(String),
    #[error("schema {0} requires an (a,b) parameter pair")]
    MissingParams(String),
    #[error("element does not belong to schema {expected}")]
    SchemaMismatch { expected: String },
    #[error("collection in {0} exceeded the step limit")]
    CollectionOverflow(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed word {0:?}")]
    BadWord(String),
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("relation {relation} fails: lhs {lhs}, rhs {rhs}")]
    RelationViolated {
        relation: String,
        lhs: String,
        rhs: String,
    },
}
