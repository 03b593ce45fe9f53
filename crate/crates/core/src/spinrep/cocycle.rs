use crate::exactlin::{Cyc9Matrix, CycNumber};
use crate::groupcore::{g27, r243, Element, Group, Schema};

use super::catalog::projection_from_r243;
use super::rep::Representation;
use super::RepError;

/// s(x₁^a x₂^b x₃^c) = η₁^a η₂^b η₃^c, as (G27 element, R243 element)
/// pairs in the lexicographic order of G27.
pub fn canonical_section() -> Result<Vec<(Element, Element)>, RepError> {
    let small = Group::new(g27()?)?;
    let big = r243()?;
    small
        .elements()
        .iter()
        .map(|g| {
            let e = g.exponents();
            Ok((*g, big.element(&[0, 0, e[0], e[1], e[2]])?))
        })
        .collect()
}

/// T(g) = Π(s(g)) for each g of G27, in section order.
#[derive(Clone, Debug)]
pub struct ProjectiveImage {
    pub elements: Vec<Element>,
    pub matrices: Vec<Cyc9Matrix>,
}

/// α(g, h) = ω^k with T(g)T(h) = α(g, h)·T(gh); stored as exponents k.
#[derive(Clone, Debug)]
pub struct CocycleTable {
    base: Schema,
    elements: Vec<Element>,
    exps: Vec<u8>,
}

impl PartialEq for CocycleTable {
    fn eq(&self, other: &Self) -> bool {
        self.base.id() == other.base.id()
            && self.elements == other.elements
            && self.exps == other.exps
    }
}

impl CocycleTable {
    pub fn base(&self) -> &Schema {
        &self.base
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    fn pos(&self, g: &Element) -> usize {
        self.elements
            .binary_search(g)
            .expect("element of the base group")
    }

    pub fn exponent(&self, g: &Element, h: &Element) -> u8 {
        self.exps[self.pos(g) * self.elements.len() + self.pos(h)]
    }

    pub fn value(&self, g: &Element, h: &Element) -> CycNumber {
        CycNumber::root_of_unity(self.exponent(g, h) as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }

    pub fn is_normalized(&self) -> bool {
        let one = self.base.identity();
        self.elements
            .iter()
            .all(|g| self.exponent(&one, g) == 0 && self.exponent(g, &one) == 0)
    }

    /// α(g,h)α(gh,k) = α(g,hk)α(h,k) for all triples; returns the first
    /// failing triple.
    pub fn check_cocycle_identity(&self) -> Result<(), (Element, Element, Element)> {
        let n = self.elements.len();
        let mul: Vec<usize> = (0..n * n)
            .map(|ij| {
                self.pos(
                    &self
                        .base
                        .multiply(&self.elements[ij / n], &self.elements[ij % n])
                        .expect("same schema"),
                )
            })
            .collect();
        let a = |i: usize, j: usize| self.exps[i * n + j];
        for g in 0..n {
            for h in 0..n {
                let gh = mul[g * n + h];
                for k in 0..n {
                    let hk = mul[h * n + k];
                    if (a(g, h) + a(gh, k)) % 3 != (a(g, hk) + a(h, k)) % 3 {
                        return Err((self.elements[g], self.elements[h], self.elements[k]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Restrict an R243 representation along a section of R243 → G27 and read
/// off its factor set.
pub fn restrict_to_projective(
    r: &Representation,
    section: &[(Element, Element)],
) -> Result<(ProjectiveImage, CocycleTable), RepError> {
    let big = r243()?;
    if r.schema().id() != big.id() {
        return Err(RepError::SchemaMismatch {
            expected: big.name().to_string(),
            found: r.schema().name().to_string(),
        });
    }
    let small = Group::new(g27()?)?;
    let proj = projection_from_r243("G27")?;
    let mut pairs = section.to_vec();
    pairs.sort_by_key(|a| a.0);
    if pairs.iter().map(|p| p.0).collect::<Vec<_>>() != small.elements() {
        return Err(RepError::BadSection(
            "section must cover every element of G27 once".to_string(),
        ));
    }
    for (g, s) in &pairs {
        if proj.apply(s)? != *g {
            return Err(RepError::BadSection(format!(
                "{} does not lie over {}",
                big.format_element(s),
                small.schema().format_element(g)
            )));
        }
    }

    let elements: Vec<Element> = pairs.iter().map(|p| p.0).collect();
    let matrices = pairs
        .iter()
        .map(|(_, s)| r.evaluate(s))
        .collect::<Result<Vec<_>, _>>()?;
    let n = elements.len();
    let mut exps = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let k = small.mul_idx(i, j);
            let lhs = &matrices[i] * &matrices[j];
            let (pos, t) = matrices[k].first_nonzero().expect("invertible image");
            let alpha = lhs.entries()[pos].checked_div(t)?;
            let e = alpha
                .as_cyc()
                .and_then(|a| a.root_of_unity_exponent())
                .filter(|_| lhs == matrices[k].scale(&alpha))
                .ok_or_else(|| {
                    RepError::BadSection(format!(
                        "T(g)T(h) is not a cube-root-of-unity multiple of T(gh) at ({}, {})",
                        small.schema().format_element(&elements[i]),
                        small.schema().format_element(&elements[j])
                    ))
                })?;
            exps.push(e);
        }
    }
    Ok((
        ProjectiveImage {
            elements: elements.clone(),
            matrices,
        },
        CocycleTable {
            base: small.schema().clone(),
            elements,
            exps,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinrep::{full_catalog, SpinType};

    #[test]
    fn cocycles_of_the_catalog() {
        let section = canonical_section().unwrap();
        let cat = full_catalog().unwrap();
        for st in SpinType::all() {
            let tables: Vec<CocycleTable> = cat
                .by_spin_type(st)
                .map(|r| restrict_to_projective(r, &section).unwrap().1)
                .collect();
            for t in &tables {
                assert_eq!(t.check_cocycle_identity(), Ok(()));
                assert!(t.is_normalized());
                assert_eq!(t.is_trivial(), st.is_non_spin(), "{st}");
            }
            assert!(tables.windows(2).all(|w| w[0] == w[1]), "{st}");
        }
    }

    #[test]
    fn eps_cocycle_matches_group_law() {
        // T(g)T(h) = Π(s(g)s(h)) and s(g)s(h) = z₁₂^a z₂₃^b s(gh), so α = ω^{εa+μb}.
        let section = canonical_section().unwrap();
        let big = r243().unwrap();
        let r = crate::spinrep::irreps_by_spin_type(SpinType::new(1, 0))
            .unwrap()
            .remove(0);
        let (_, t) = restrict_to_projective(&r, &section).unwrap();
        let small = Group::new(g27().unwrap()).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for (g, sg) in &section {
            for (h, sh) in &section {
                let gh = small.multiply(g, h).unwrap();
                let sgh = section.iter().find(|p| p.0 == gh).unwrap().1;
                let z = big
                    .multiply(&big.multiply(sg, sh).unwrap(), &big.inverse(&sgh).unwrap())
                    .unwrap();
                let e = z.exponents();
                assert!(e[2..].iter().all(|&x| x == 0));
                assert_eq!(t.exponent(g, h), e[0] % 3);
                seen.insert(e[0]);
            }
        }
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn bad_sections_are_rejected() {
        let mut section = canonical_section().unwrap();
        let cat = full_catalog().unwrap();
        let r = &cat.reps[0];
        let big = r243().unwrap();
        section[1].1 = big.multiply(&section[1].1, &big.generator(2)).unwrap();
        assert!(matches!(
            restrict_to_projective(r, &section),
            Err(RepError::BadSection(_))
        ));
        section.pop();
        assert!(restrict_to_projective(r, &section).is_err());
        let small = crate::spinrep::linear_pi(0, 0).unwrap();
        assert!(restrict_to_projective(&small, &canonical_section().unwrap()).is_err());
    }
}
