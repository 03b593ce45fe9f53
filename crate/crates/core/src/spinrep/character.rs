use std::sync::Arc;

use crate::exactlin::{Cyc9, CycNumber, Rational};
use crate::groupcore::{r243, ConjugacyClass, Element, Group, GroupError, SchemaId};

use super::catalog::full_catalog;
use super::rep::Representation;
use super::{RepError, SpinType};

/// The classes of one group, shared by all of its class functions.
#[derive(Debug)]
pub struct ClassData {
    schema: SchemaId,
    schema_name: String,
    order: usize,
    classes: Vec<ConjugacyClass>,
}

impl ClassData {
    pub fn new(g: &Group) -> Arc<Self> {
        Arc::new(ClassData {
            schema: g.schema().id(),
            schema_name: g.schema().name().to_string(),
            order: g.order(),
            classes: g.conjugacy_classes(),
        })
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn class_of(&self, g: &Element) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.members.binary_search(g).is_ok())
    }
}

/// Values on conjugacy classes, in the order of [`ClassData::classes`].
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ClassData>,
    values: Vec<Cyc9>,
}

impl ClassFunction {
    pub fn new(classes: &Arc<ClassData>, values: Vec<Cyc9>) -> Self {
        assert_eq!(values.len(), classes.classes.len());
        ClassFunction {
            classes: classes.clone(),
            values,
        }
    }

    pub fn values(&self) -> &[Cyc9] {
        &self.values
    }

    pub fn class_data(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn value_at(&self, g: &Element) -> Option<&Cyc9> {
        self.classes.class_of(g).map(|c| &self.values[c])
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.classes.schema == other.classes.schema && self.values == other.values
    }
}

/// Trace of `r` at each class representative.
pub fn character(r: &Representation, classes: &Arc<ClassData>) -> Result<ClassFunction, RepError> {
    if r.schema().id() != classes.schema {
        return Err(RepError::SchemaMismatch {
            expected: classes.schema_name.clone(),
            found: r.schema().name().to_string(),
        });
    }
    let values = classes
        .classes
        .iter()
        .map(|c| r.character_at(&c.rep))
        .collect::<Result<_, _>>()?;
    Ok(ClassFunction::new(classes, values))
}

/// (1/|G|) Σ_g c₁(g)·conj(c₂(g)).
pub fn inner_product(c1: &ClassFunction, c2: &ClassFunction) -> Result<Cyc9, RepError> {
    if c1.classes.schema != c2.classes.schema {
        return Err(GroupError::SchemaMismatch {
            expected: c1.classes.schema_name.clone(),
        }
        .into());
    }
    let mut acc = Cyc9::zero();
    for (i, c) in c1.classes.classes.iter().enumerate() {
        let term = &c1.values[i] * &c2.values[i].conj();
        acc = &acc + &term.scale(&CycNumber::from(c.size() as i64));
    }
    Ok(acc.scale(&CycNumber::from(Rational::new(1, c1.classes.order as i64)?)))
}

#[derive(Clone, Debug)]
pub struct CharacterRow {
    pub name: String,
    pub spin_type: SpinType,
    pub dim: usize,
    pub character: ClassFunction,
}

/// All IR characters of R243; rows sorted by (spin type, label), columns
/// by class representative.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: String,
    pub classes: Arc<ClassData>,
    pub rows: Vec<CharacterRow>,
}

pub fn spin_character_table() -> Result<CharacterTable, RepError> {
    let g = Group::new(r243()?)?;
    let classes = ClassData::new(&g);
    let cat = full_catalog()?;
    let rows = cat
        .reps
        .iter()
        .map(|r| {
            Ok(CharacterRow {
                name: r.name(),
                spin_type: r.spin_type(),
                dim: r.dim(),
                character: character(r, &classes)?,
            })
        })
        .collect::<Result<_, RepError>>()?;
    Ok(CharacterTable {
        group: g.schema().name().to_string(),
        classes,
        rows,
    })
}

/// Σ_χ χ(g)·conj(χ(h)) = |C(g)|·[g ~ h] for every pair of classes; returns
/// the first failing pair of class indices.
pub fn column_orthogonality(t: &CharacterTable) -> Result<(), (usize, usize)> {
    let classes = t.classes.classes();
    for a in 0..classes.len() {
        for b in 0..classes.len() {
            let mut acc = Cyc9::zero();
            for row in &t.rows {
                let v = row.character.values();
                acc = &acc + &(&v[a] * &v[b].conj());
            }
            let expected = if a == b {
                (t.classes.order / classes[a].size()) as i64
            } else {
                0
            };
            if acc != Cyc9::from(expected) {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::g27;
    use crate::spinrep::catalog::{induced_pi_0n, linear_pi};

    #[test]
    fn g27_orthogonality_for_induced_reps() {
        let g = Group::new(g27().unwrap()).unwrap();
        let cd = ClassData::new(&g);
        let p1 = character(&induced_pi_0n(1).unwrap(), &cd).unwrap();
        let p2 = character(&induced_pi_0n(2).unwrap(), &cd).unwrap();
        let triv = character(&linear_pi(0, 0).unwrap(), &cd).unwrap();
        assert!(inner_product(&p1, &p1).unwrap().is_one());
        assert!(inner_product(&p1, &p2).unwrap().is_zero());
        assert!(inner_product(&triv, &triv).unwrap().is_one());
        assert!(triv.values().iter().all(|v| v.is_one()));
    }

    #[test]
    fn mismatched_schemas_are_rejected() {
        let g = Group::new(g27().unwrap()).unwrap();
        let cd = ClassData::new(&g);
        let r = crate::spinrep::irreps_by_spin_type(SpinType::NON_SPIN).unwrap();
        assert!(character(&r[0], &cd).is_err());
    }

    #[test]
    fn full_table_is_orthonormal() {
        let t = spin_character_table().unwrap();
        assert_eq!(t.rows.len(), 35);
        assert_eq!(t.classes.classes().len(), 35);
        for (i, a) in t.rows.iter().enumerate() {
            for (j, b) in t.rows.iter().enumerate() {
                let ip = inner_product(&a.character, &b.character).unwrap();
                assert_eq!(
                    ip,
                    Cyc9::from(i64::from(i == j)),
                    "{} vs {}",
                    a.name,
                    b.name
                );
            }
        }
        assert_eq!(column_orthogonality(&t), Ok(()));
        let dims: usize = t.rows.iter().map(|r| r.dim * r.dim).sum();
        assert_eq!(dims, 243);
    }

    #[test]
    fn only_purely_spin_rows_leave_the_base_field() {
        let t = spin_character_table().unwrap();
        for row in &t.rows {
            let in_base = row.character.values().iter().all(|v| v.as_cyc().is_some());
            assert_eq!(in_base, !row.spin_type.is_purely_spin(), "{}", row.name);
        }
    }

    #[test]
    fn induced_character_formula_on_g27() {
        let g = Group::new(g27().unwrap()).unwrap();
        for n in 1..3u8 {
            let r = induced_pi_0n(n).unwrap();
            for h in g.elements() {
                let [b1, b2, b3] = [h.exponents()[0], h.exponents()[1], h.exponents()[2]];
                let expected = if b1 == 0 && b3 == 0 {
                    Cyc9::from(
                        CycNumber::root_of_unity((b2 * n) as i64).scale(&Rational::from_int(3)),
                    )
                } else {
                    Cyc9::zero()
                };
                assert_eq!(r.character_at(h).unwrap(), expected);
            }
        }
    }

    /// The character is nonzero exactly on the elements built from `central`.
    fn supported_on_central(r: &Representation, central: &[&str]) -> bool {
        let s = r.schema();
        let g = Group::new(s.clone()).unwrap();
        let keep: Vec<usize> = central.iter().map(|c| s.gen_index(c).unwrap()).collect();
        g.elements().iter().all(|h| {
            let is_central = h
                .exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || keep.contains(&i));
            r.character_at(h).unwrap().is_zero() != is_central
        })
    }

    #[test]
    fn heisenberg_characters_live_on_the_multiplier() {
        for st in SpinType::all().into_iter().filter(|s| !s.is_non_spin()) {
            let setup = crate::spinrep::classical_setup(st).unwrap();
            let central: &[&str] = match (st.eps, st.mu) {
                (_, 0) => &["z12"],
                (0, _) => &["z23"],
                _ => &["z12", "z23"],
            };
            assert!(supported_on_central(&setup.rho, central), "{st}");
        }
    }
}
