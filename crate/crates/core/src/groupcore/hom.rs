use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::catalog::{g81, g81_param, gsharp};
use super::fingerprint::isomorphism_fingerprint;
use super::group::Group;
use super::schema::{Element, Schema};
use super::GroupError;

/// One named check with a witness or summary in `detail`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckOutcome {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// A map defined on the generators of `source`, extended to normal forms
/// by g₁^e₁ ⋯ g_k^e_k ↦ φ(g₁)^e₁ ⋯ φ(g_k)^e_k.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Schema,
    target: Schema,
    images: Vec<Element>,
}

impl Homomorphism {
    pub fn new(source: Schema, target: Schema, images: Vec<Element>) -> Result<Self, GroupError> {
        if images.len() != source.rank() {
            return Err(GroupError::BadWord(format!(
                "{} generator images for rank {}",
                images.len(),
                source.rank()
            )));
        }
        if let Some(bad) = images.iter().find(|e| e.schema_id() != target.id()) {
            return Err(GroupError::SchemaMismatch {
                expected: format!("{} (got {bad:?})", target.name()),
            });
        }
        Ok(Homomorphism {
            source,
            target,
            images,
        })
    }

    /// Images given as free words in the target, e.g. `("xi1", "xi1 zeta^2")`.
    pub fn from_words(
        source: Schema,
        target: Schema,
        words: &[(&str, &str)],
    ) -> Result<Self, GroupError> {
        let mut images = vec![None; source.rank()];
        for (g, w) in words {
            images[source.gen_index(g)?] = Some(target.parse_word(w)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| {
                    GroupError::UnknownGenerator(format!("no image for {}", source.generators()[i]))
                })
            })
            .collect::<Result<_, _>>()?;
        Homomorphism::new(source, target, images)
    }

    pub fn source(&self) -> &Schema {
        &self.source
    }

    pub fn target(&self) -> &Schema {
        &self.target
    }

    pub fn apply(&self, g: &Element) -> Result<Element, GroupError> {
        if g.schema_id() != self.source.id() {
            return Err(GroupError::SchemaMismatch {
                expected: self.source.name().to_string(),
            });
        }
        let mut acc = self.target.identity();
        for (i, &e) in g.exponents().iter().enumerate() {
            acc = self
                .target
                .multiply(&acc, &self.target.power(&self.images[i], e as u32)?)?;
        }
        Ok(acc)
    }

    /// Every defining relation of the source holds for the images.
    pub fn check_relations(&self) -> Result<(), GroupError> {
        for rel in self.source.relations() {
            let mut lhs = self.target.identity();
            for &(g, e) in &rel.lhs {
                let mut base = self.images[g];
                if e < 0 {
                    base = self.target.inverse(&base)?;
                }
                lhs = self
                    .target
                    .multiply(&lhs, &self.target.power(&base, e.unsigned_abs())?)?;
            }
            let rhs = self.apply(&rel.rhs)?;
            if lhs != rhs {
                return Err(GroupError::RelationViolated {
                    relation: rel.text,
                    lhs: self.target.format_element(&lhs),
                    rhs: self.target.format_element(&rhs),
                });
            }
        }
        Ok(())
    }
}

/// Checks that `big → small`, sending the generators of `kernel_gens` to 1
/// and the others according to `gen_map`, is a central extension whose
/// kernel lies in Z(big) ∩ [big, big].
pub fn verify_efficient_covering(
    big: &Group,
    kernel_gens: &[&str],
    small: &Group,
    gen_map: &[(&str, &str)],
) -> Result<Report, GroupError> {
    let bs = big.schema();
    let ss = small.schema();
    let kernel_idx: Vec<usize> = kernel_gens
        .iter()
        .map(|g| bs.gen_index(g))
        .collect::<Result<_, _>>()?;
    for &k in &kernel_idx {
        if !big.is_central_idx(big.index_of(&bs.generator(k))?) {
            return Err(GroupError::InvalidRule(format!(
                "{} is not central in {}",
                bs.generators()[k],
                bs.name()
            )));
        }
    }
    let mut words: Vec<(&str, &str)> = kernel_gens.iter().map(|g| (*g, "1")).collect();
    words.extend_from_slice(gen_map);
    let hom = Homomorphism::from_words(bs.clone(), ss.clone(), &words)?;

    let mut report = Report::new(format!("efficient covering {} -> {}", bs.name(), ss.name()));
    let kernel = big.generated_by(
        &kernel_idx
            .iter()
            .map(|&k| bs.generator(k))
            .collect::<Vec<_>>(),
    )?;
    let zd = big.center().intersection(&big.derived_subgroup());
    report.push(
        "kernel in center and derived subgroup",
        kernel.is_subset_of(&zd),
        format!(
            "|kernel| = {}, |Z ∩ [G,G]| = {}",
            kernel.order(),
            zd.order()
        ),
    );

    match hom.check_relations() {
        Ok(()) => report.push(
            "relations preserved",
            true,
            format!("{} relations", bs.relations().len()),
        ),
        Err(e) => report.push("relations preserved", false, e.to_string()),
    }
    let mut image = BTreeSet::new();
    let mut hom_kernel = Vec::new();
    for g in big.elements() {
        let h = hom.apply(g)?;
        if h.is_identity() {
            hom_kernel.push(*g);
        }
        image.insert(h);
    }
    let kernel_matches =
        hom_kernel.len() == kernel.order() && hom_kernel.iter().all(|g| kernel.contains(g));
    let witness = hom_kernel
        .iter()
        .find(|g| !kernel.contains(g))
        .map(|g| bs.format_element(g));
    report.push(
        "kernel is the declared subgroup",
        kernel_matches,
        match witness {
            Some(w) => format!("{w} maps to 1 but is not in the declared kernel"),
            None => format!("|ker| = {}", hom_kernel.len()),
        },
    );
    report.push(
        "surjective",
        image.len() == small.order(),
        format!("|image| = {}", image.len()),
    );
    report.push(
        "order quotient",
        big.order() == kernel.order() * small.order(),
        format!("{} / {} = {}", big.order(), kernel.order(), small.order()),
    );
    Ok(report)
}

/// Inside G♯, ξ₁ ↦ ξ₁ζ^a, ξ₃ ↦ ξ₃ζ^b (other generators fixed) is an
/// automorphism, and the new ξ's satisfy the (a, b)-presentation.
pub fn verify_phi_automorphism(a: u8, b: u8) -> Result<Report, GroupError> {
    let (a, b) = (a % 3, b % 3);
    let gs = gsharp()?;
    let xi1 = format!("xi1 zeta^{a}");
    let xi3 = format!("xi3 zeta^{b}");
    let phi = Homomorphism::from_words(
        gs.clone(),
        gs.clone(),
        &[
            ("zeta", "zeta"),
            ("z12", "z12"),
            ("xi1", &xi1),
            ("xi2", "xi2"),
            ("xi3", &xi3),
        ],
    )?;
    let group = Group::new(gs.clone())?;
    let mut report = Report::new(format!("automorphism Phi of GSHARP for (a,b) = ({a},{b})"));

    match phi.check_relations() {
        Ok(()) => report.push("Phi preserves the GSHARP relations", true, ""),
        Err(e) => report.push("Phi preserves the GSHARP relations", false, e.to_string()),
    }
    let images: BTreeSet<Element> = group
        .elements()
        .iter()
        .map(|g| phi.apply(g))
        .collect::<Result<_, _>>()?;
    report.push(
        "Phi is bijective",
        images.len() == group.order(),
        format!("|image| = {}", images.len()),
    );

    let param = g81_param(a, b)?;
    let embed = Homomorphism::from_words(
        param.clone(),
        gs.clone(),
        &[("z12", "z12"), ("xi1", &xi1), ("xi2", "xi2"), ("xi3", &xi3)],
    )?;
    match embed.check_relations() {
        Ok(()) => report.push(
            "images satisfy the (a,b) relations",
            true,
            format!("into {}", param.name()),
        ),
        Err(e) => report.push("images satisfy the (a,b) relations", false, e.to_string()),
    }
    let pg = Group::new(param)?;
    let emb: BTreeSet<Element> = pg
        .elements()
        .iter()
        .map(|g| embed.apply(g))
        .collect::<Result<_, _>>()?;
    report.push(
        "(a,b) presentation embeds",
        emb.len() == pg.order(),
        format!("|image| = {} of {}", emb.len(), pg.order()),
    );

    let f_param = isomorphism_fingerprint(&pg);
    let f_base = isomorphism_fingerprint(&Group::new(g81()?)?);
    report.push(
        "(a,b) presentation has the G81 fingerprint",
        f_param == f_base,
        format!(
            "element orders {:?} vs {:?}",
            f_param.element_orders, f_base.element_orders
        ),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{g27, g81, r243};

    #[test]
    fn representation_group_covers_g27() {
        let big = Group::new(r243().unwrap()).unwrap();
        let small = Group::new(g27().unwrap()).unwrap();
        let r = verify_efficient_covering(
            &big,
            &["z12", "z23"],
            &small,
            &[("n1", "x1"), ("n2", "x2"), ("n3", "x3")],
        )
        .unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn wrong_map_is_caught_with_witness() {
        let big = Group::new(g81().unwrap()).unwrap();
        let small = Group::new(g27().unwrap()).unwrap();
        let r = verify_efficient_covering(
            &big,
            &["z12"],
            &small,
            &[("xi1", "x3"), ("xi2", "x2"), ("xi3", "x1")],
        )
        .unwrap();
        assert!(!r.passed());
        assert!(r.first_failure().unwrap().detail.contains("fails"));
    }

    #[test]
    fn non_central_kernel_is_rejected() {
        let big = Group::new(g81().unwrap()).unwrap();
        let small = Group::new(g27().unwrap()).unwrap();
        assert!(verify_efficient_covering(&big, &["xi2"], &small, &[]).is_err());
    }

    #[test]
    fn trivial_phi() {
        assert!(verify_phi_automorphism(0, 0).unwrap().passed());
    }

    #[test]
    fn phi_is_not_a_homomorphism_off_the_identity_case() {
        // (ξ₁ζ^a)³ = z₁₂^a while ξ₁³ = 1, so Φ cannot preserve the cube
        // relations once (a, b) ≠ (0, 0); the substitution is still a
        // bijection and the images satisfy the (a, b) relations.
        for a in 0..3 {
            for b in 0..3 {
                let r = verify_phi_automorphism(a, b).unwrap();
                let check = |name: &str| r.checks.iter().find(|c| c.name == name).unwrap().passed;
                assert_eq!(
                    check("Phi preserves the GSHARP relations"),
                    (a, b) == (0, 0),
                    "{r}"
                );
                assert!(check("Phi is bijective"));
                assert!(check("images satisfy the (a,b) relations"));
                assert!(check("(a,b) presentation embeds"));
                assert_eq!(
                    check("(a,b) presentation has the G81 fingerprint"),
                    b == 0,
                    "{r}"
                );
            }
        }
        let r = verify_phi_automorphism(1, 0).unwrap();
        assert!(r.first_failure().unwrap().detail.contains("xi1^3 = 1"));
    }

    #[test]
    fn stairway_coverings() {
        let r = Group::new(r243().unwrap()).unwrap();
        let g81g = Group::new(g81().unwrap()).unwrap();
        let g27g = Group::new(g27().unwrap()).unwrap();
        let map = [("xi1", "x1"), ("xi2", "x2"), ("xi3", "x3")];
        assert!(verify_efficient_covering(&g81g, &["z12"], &g27g, &map)
            .unwrap()
            .passed());
        let map = [("z12", "z12"), ("n1", "xi1"), ("n2", "xi2"), ("n3", "xi3")];
        assert!(verify_efficient_covering(&r, &["z23"], &g81g, &map)
            .unwrap()
            .passed());
    }
}
